//! The Hecke algebra `H_{n,q}` of the symmetric group.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{field_check_parameter, Field, Matrix, Scalar, Subspace};
use crate::error::Error;
use crate::partitions::{Partition, Tableau};

/// A permutation of `{1..n}`, stored as the images `iw` (0-based inside).
///
/// Permutations act on the right, so `i(wu) = (iw)u`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// From 1-based images; `None` unless a bijection.
    pub fn from_one_line(images: &[usize]) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return None;
            }
            seen[x - 1] = true;
        }
        Some(Permutation { images: images.iter().map(|x| x - 1).collect() })
    }

    /// The simple transposition `v_i = (i, i+1)`, `1 <= i < n`.
    pub fn simple(n: usize, i: usize) -> Self {
        Self::transposition(n, i, i + 1)
    }

    /// The transposition `(i, k)`, 1-based.
    pub fn transposition(n: usize, i: usize, k: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i - 1, k - 1);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image of a 0-based point.
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// `self * other`, first `self` then `other`.
    pub fn compose(&self, other: &Self) -> Self {
        Permutation { images: self.images.iter().map(|&x| other.images[x]).collect() }
    }

    /// A reduced word `[i1, .., ik]` (1-based) with `w = v_{i1} ... v_{ik}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.images.clone();
        let mut word = Vec::new();
        'outer: loop {
            for i in 0..w.len().saturating_sub(1) {
                if w[i] > w[i + 1] {
                    w.swap(i, i + 1);
                    word.push(i + 1);
                    continue 'outer;
                }
            }
            return word;
        }
    }

    /// Position in lexicographic order of one-line notation (Lehmer rank).
    pub fn rank(&self) -> usize {
        let w = &self.images;
        let n = w.len();
        let mut r = 0;
        for i in 0..n {
            let smaller = (i + 1..n).filter(|&j| w[j] < w[i]).count();
            r = r * (n - i) + smaller;
        }
        r
    }

    /// Inverse of [`Permutation::rank`].
    pub fn unrank(n: usize, mut r: usize) -> Self {
        let mut digits = vec![0; n];
        for i in (0..n).rev() {
            let base = n - i;
            digits[i] = r % base;
            r /= base;
        }
        let mut pool: Vec<usize> = (0..n).collect();
        Permutation { images: digits.into_iter().map(|d| pool.remove(d)).collect() }
    }

    /// All of `S_n` in rank order.
    pub fn all(n: usize) -> Vec<Self> {
        (0..factorial(n)).map(|r| Self::unrank(n, r)).collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", x + 1)?;
        }
        f.write_str("]")
    }
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// An element `Σ c_w T_w` of `H_n`, dense in the rank order of `S_n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HeckeElement {
    n: usize,
    coeffs: Vec<Scalar>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        HeckeElement { n, coeffs: vec![Scalar::zero(); factorial(n)] }
    }

    pub fn basis(w: &Permutation) -> Self {
        let mut e = Self::zero(w.degree());
        e.coeffs[w.rank()] = Scalar::one();
        e
    }

    pub fn one(n: usize) -> Self {
        Self::basis(&Permutation::identity(n))
    }

    pub fn from_coeffs(n: usize, coeffs: Vec<Scalar>) -> Self {
        assert_eq!(coeffs.len(), factorial(n));
        HeckeElement { n, coeffs }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, w: &Permutation) -> &Scalar {
        &self.coeffs[w.rank()]
    }

    /// Coefficients in the rank order of `S_n`.
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Field::is_zero)
    }

    /// Nonzero terms as `(w, c_w)`.
    pub fn terms(&self) -> Vec<(Permutation, Scalar)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(r, c)| (Permutation::unrank(self.n, r), c.clone())).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        HeckeElement { n: self.n, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        HeckeElement { n: self.n, coeffs }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        HeckeElement { n: self.n, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Serialized as `(one-line permutation, coefficient)` pairs.
    pub fn to_pairs(&self) -> Vec<(String, String)> {
        use alloc::string::ToString;
        self.terms().into_iter().map(|(w, c)| (w.to_string(), c.to_string())).collect()
    }
}

/// `H_{n,q}` with precomputed multiplication tables for the generators.
#[derive(Clone, Debug)]
pub struct Hecke {
    n: usize,
    q: Scalar,
    perms: Vec<Permutation>,
    lengths: Vec<usize>,
    inverses: Vec<usize>,
    words: Vec<Vec<usize>>,
    // left[i][r] = rank of v_{i+1} w, right[i][r] = rank of w v_{i+1}
    left: Vec<Vec<usize>>,
    right: Vec<Vec<usize>>,
}

impl Hecke {
    pub fn new(n: usize, q: Scalar) -> Self {
        let perms = Permutation::all(n);
        let lengths = perms.iter().map(Permutation::length).collect();
        let inverses = perms.iter().map(|w| w.inverse().rank()).collect();
        let words = perms.iter().map(Permutation::reduced_word).collect();
        let gens: Vec<Permutation> = (1..n).map(|i| Permutation::simple(n, i)).collect();
        let left = gens.iter().map(|g| perms.iter().map(|w| g.compose(w).rank()).collect()).collect();
        let right = gens.iter().map(|g| perms.iter().map(|w| w.compose(g).rank()).collect()).collect();
        Hecke { n, q, perms, lengths, inverses, words, left, right }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> &Scalar {
        &self.q
    }

    pub fn dim(&self) -> usize {
        self.perms.len()
    }

    pub fn permutations(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn length_of_rank(&self, r: usize) -> usize {
        self.lengths[r]
    }

    pub fn one(&self) -> HeckeElement {
        HeckeElement::one(self.n)
    }

    pub fn basis(&self, w: &Permutation) -> HeckeElement {
        HeckeElement::basis(w)
    }

    /// `T_i`, 1-based.
    pub fn generator(&self, i: usize) -> HeckeElement {
        HeckeElement::basis(&Permutation::simple(self.n, i))
    }

    /// `q^e` for an integer exponent.
    fn qpow(&self, e: i64) -> Scalar {
        self.q.pow(e)
    }

    /// `T_i · a`.
    pub fn left_generator(&self, i: usize, a: &HeckeElement) -> HeckeElement {
        self.apply_generator(a, &self.left[i - 1])
    }

    /// `a · T_i`.
    pub fn right_generator(&self, a: &HeckeElement, i: usize) -> HeckeElement {
        self.apply_generator(a, &self.right[i - 1])
    }

    fn apply_generator(&self, a: &HeckeElement, table: &[usize]) -> HeckeElement {
        let qm1 = &self.q - &Scalar::one();
        let mut out = HeckeElement::zero(self.n);
        for (r, c) in a.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = table[r];
            if self.lengths[s] > self.lengths[r] {
                out.coeffs[s] = &out.coeffs[s] + c;
            } else {
                out.coeffs[r] = &out.coeffs[r] + &(&qm1 * c);
                out.coeffs[s] = &out.coeffs[s] + &(&self.q * c);
            }
        }
        out
    }

    /// `T_w · b`.
    pub fn left_basis(&self, w: &Permutation, b: &HeckeElement) -> HeckeElement {
        self.left_rank(w.rank(), b)
    }

    fn left_rank(&self, r: usize, b: &HeckeElement) -> HeckeElement {
        let mut acc = b.clone();
        for &i in self.words[r].iter().rev() {
            acc = self.left_generator(i, &acc);
        }
        acc
    }

    /// `a · T_w`.
    pub fn right_basis(&self, a: &HeckeElement, w: &Permutation) -> HeckeElement {
        let mut acc = a.clone();
        for &i in &self.words[w.rank()] {
            acc = self.right_generator(&acc, i);
        }
        acc
    }

    pub fn multiply(&self, a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement, Error> {
        for x in [a, b] {
            if x.n != self.n {
                return Err(Error::RankMismatch { expected: self.n, found: x.n });
            }
        }
        let mut out = HeckeElement::zero(self.n);
        for (r, c) in a.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = self.left_rank(r, b);
            for (o, x) in out.coeffs.iter_mut().zip(&t.coeffs) {
                if !x.is_zero() {
                    *o = &*o + &(c * x);
                }
            }
        }
        Ok(out)
    }

    /// Panicking form of [`Hecke::multiply`].
    pub fn mul(&self, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
        self.multiply(a, b).expect("Hecke elements of different rank")
    }

    /// `(T_u, T_w) = q^{l(u)}` when `w = u⁻¹`, else `0`.
    pub fn bilinear_form(&self, a: &HeckeElement, b: &HeckeElement) -> Result<Scalar, Error> {
        for x in [a, b] {
            if x.n != self.n {
                return Err(Error::RankMismatch { expected: self.n, found: x.n });
            }
        }
        let mut acc = Scalar::zero();
        for (r, c) in a.coeffs.iter().enumerate() {
            let d = &b.coeffs[self.inverses[r]];
            if !c.is_zero() && !d.is_zero() {
                acc = &acc + &(&(c * d) * &self.qpow(self.lengths[r] as i64));
            }
        }
        Ok(acc)
    }

    /// The pairs `(q^{-l(w)} T_w, T_{w⁻¹})`.
    pub fn casimir(&self) -> Vec<(HeckeElement, HeckeElement)> {
        self.perms
            .iter()
            .enumerate()
            .map(|(r, w)| {
                let a = HeckeElement::basis(w).scale(&self.qpow(-(self.lengths[r] as i64)));
                (a, HeckeElement::basis(&self.perms[self.inverses[r]]))
            })
            .collect()
    }

    /// `X_n = ([n]_q!)⁻¹ Σ T_w`.
    pub fn symmetrizer(&self) -> Result<HeckeElement, Error> {
        field_check_parameter(&self.q, self.n)?;
        let c = Scalar::quantum_factorial(&self.q, self.n as i64).inv().ok_or(Error::DegenerateParameter(self.n))?;
        Ok(HeckeElement { n: self.n, coeffs: vec![c; self.dim()] })
    }

    /// `Y_n = ([n]_{q⁻¹}!)⁻¹ Σ (−q)^{−l(w)} T_w`.
    pub fn antisymmetrizer(&self) -> Result<HeckeElement, Error> {
        field_check_parameter(&self.q, self.n)?;
        let qinv = self.q.inv().ok_or(Error::ZeroParameter)?;
        let c = Scalar::quantum_factorial(&qinv, self.n as i64).inv().ok_or(Error::DegenerateParameter(self.n))?;
        let mq = -self.q.clone();
        let coeffs = self.lengths.iter().map(|&l| &c * &mq.pow(-(l as i64))).collect();
        Ok(HeckeElement { n: self.n, coeffs })
    }

    /// `L_k = Σ_{i<k} q^{i−k} T_{(i,k)}`; `L_1 = 0`.
    pub fn murphy(&self, k: usize) -> HeckeElement {
        let mut out = HeckeElement::zero(self.n);
        for i in 1..k {
            let r = Permutation::transposition(self.n, i, k).rank();
            out.coeffs[r] = self.qpow(i as i64 - k as i64);
        }
        out
    }

    /// `z = Σ q^{−l(w)} T_w T_{w⁻¹}`.
    pub fn casimir_contraction(&self) -> HeckeElement {
        let mut out = HeckeElement::zero(self.n);
        for (a, b) in self.casimir() {
            out = out.add(&self.mul(&a, &b));
        }
        out
    }

    /// Image of `a ⊗ b` under `H_l ⊗ H_m → H_{l+m}`.
    pub fn embed(&self, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
        assert_eq!(a.n + b.n, self.n);
        let mut out = HeckeElement::zero(self.n);
        for (u, c) in a.terms() {
            for (v, d) in b.terms() {
                let mut images = u.images.clone();
                images.extend(v.images.iter().map(|x| x + a.n));
                let r = Permutation { images }.rank();
                out.coeffs[r] = &out.coeffs[r] + &(&c * &d);
            }
        }
        out
    }

    /// Central idempotents, characters and form constants for every `λ ⊢ n`.
    pub fn block_decomposition(&self) -> Result<Vec<BlockData>, Error> {
        field_check_parameter(&self.q, self.n)?;
        let n = self.n;
        let shapes = Partition::all_of_weight(n);
        let tableaux: Vec<(usize, Tableau, Vec<Scalar>)> = shapes
            .iter()
            .enumerate()
            .flat_map(|(s, lam)| lam.standard_tableaux().into_iter().map(move |t| (s, t)))
            .map(|(s, t)| {
                let ev = t.contents().iter().map(|&c| Scalar::quantum_int(&self.q, c)).collect();
                (s, t, ev)
            })
            .collect();
        for (i, a) in tableaux.iter().enumerate() {
            if tableaux[..i].iter().any(|b| b.2 == a.2) {
                return Err(Error::BlockSeparationFailure(n));
            }
        }

        // Split the regular representation by the eigenvalues of L_2, ..., L_n.
        let dim = self.dim();
        let mut pieces: Vec<(Vec<usize>, Subspace)> = vec![((0..tableaux.len()).collect(), Subspace::full(dim))];
        for k in 2..=n {
            let lk = self.murphy(k);
            let mut next = Vec::new();
            for (members, space) in pieces {
                let mut groups: Vec<(Scalar, Vec<usize>)> = Vec::new();
                for &m in &members {
                    let ev = &tableaux[m].2[k - 1];
                    match groups.iter_mut().find(|g| &g.0 == ev) {
                        Some(g) => g.1.push(m),
                        None => groups.push((ev.clone(), vec![m])),
                    }
                }
                if groups.len() == 1 {
                    next.push((members, space));
                    continue;
                }
                let basis = space.basis_rows();
                let images: Vec<Vec<Scalar>> = basis
                    .iter()
                    .map(|b| {
                        let v = self.mul(&lk, &HeckeElement { n, coeffs: b.clone() });
                        space.coordinates(&v.coeffs).ok_or(Error::BlockSeparationFailure(n))
                    })
                    .collect::<Result<_, _>>()?;
                let m = basis.len();
                let mut total = 0;
                for (ev, group) in groups {
                    let shifted = Matrix::from_fn(m, m, |i, j| {
                        let x = images[j][i].clone();
                        if i == j {
                            &x - &ev
                        } else {
                            x
                        }
                    });
                    let ker = Subspace::kernel(&shifted);
                    total += ker.dim();
                    let vecs = ker.basis_rows().iter().map(|c| combine(basis, c));
                    next.push((group, Subspace::span(dim, vecs)));
                }
                if total != m {
                    return Err(Error::BlockSeparationFailure(n));
                }
            }
            pieces = next;
        }

        // Each piece is E_t H; write 1 = Σ_t E_t.
        let mut all = Vec::new();
        let mut owner = Vec::new();
        for (members, space) in &pieces {
            if members.len() != 1 {
                return Err(Error::BlockSeparationFailure(n));
            }
            let shape = &shapes[tableaux[members[0]].0];
            if space.dim() != shape.count_standard_tableaux() as usize {
                return Err(Error::BlockSeparationFailure(n));
            }
            for b in space.basis_rows() {
                all.push(b.clone());
                owner.push(tableaux[members[0]].0);
            }
        }
        let unit = self.one();
        let sys = Matrix::from_fn(dim, all.len() + 1, |i, j| if j < all.len() { all[j][i].clone() } else { -unit.coeffs[i].clone() });
        let ker = Subspace::kernel(&sys);
        if ker.dim() != 1 {
            return Err(Error::BlockSeparationFailure(n));
        }
        let sol = &ker.basis_rows()[0];
        let scale = sol[all.len()].inv().ok_or(Error::BlockSeparationFailure(n))?;

        let z = self.casimir_contraction();
        let mut blocks = Vec::new();
        for (s, lam) in shapes.iter().enumerate() {
            let d = lam.count_standard_tableaux() as usize;
            let mut f = HeckeElement::zero(n);
            for (j, b) in all.iter().enumerate() {
                if owner[j] == s && !sol[j].is_zero() {
                    let c = &sol[j] * &scale;
                    for (x, y) in f.coeffs.iter_mut().zip(b) {
                        if !y.is_zero() {
                            *x = &*x + &(&c * y);
                        }
                    }
                }
            }
            // Character: trace of right multiplication on one right ideal E_t H.
            let (_, space) = pieces.iter().find(|(m, _)| tableaux[m[0]].0 == s).expect("every shape has a tableau");
            let chi: Vec<Scalar> = self
                .perms
                .iter()
                .map(|w| {
                    let mut tr = Scalar::zero();
                    for (i, b) in space.basis_rows().iter().enumerate() {
                        let img = self.right_basis(&HeckeElement { n, coeffs: b.clone() }, w);
                        let c = space.coordinates(&img.coeffs).expect("right ideal is stable");
                        tr = &tr + &c[i];
                    }
                    tr
                })
                .collect();
            let zf = self.mul(&z, &f);
            let pivot = f.coeffs.iter().position(|c| !c.is_zero()).ok_or(Error::BlockSeparationFailure(n))?;
            let z_eigenvalue = &zf.coeffs[pivot] / &f.coeffs[pivot];
            if zf != f.scale(&z_eigenvalue) {
                return Err(Error::BlockSeparationFailure(n));
            }
            let k = &Scalar::int(d as i64) / &z_eigenvalue;
            let block = BlockData { lambda: lam.clone(), d, f, chi, k, z_eigenvalue };
            let rebuilt = block.reconstruct(self);
            if rebuilt != block.f {
                return Err(Error::IdentityViolation {
                    what: String::from("idempotent reconstruction from character"),
                    degree: n,
                    lhs: 0,
                    rhs: 0,
                });
            }
            blocks.push(block);
        }
        Ok(blocks)
    }
}

fn combine(basis: &[Vec<Scalar>], coords: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); basis[0].len()];
    for (c, b) in coords.iter().zip(basis) {
        if c.is_zero() {
            continue;
        }
        for (x, y) in out.iter_mut().zip(b) {
            if !y.is_zero() {
                *x = &*x + &(c * y);
            }
        }
    }
    out
}

/// Everything attached to one two-sided block of `H_n`.
#[derive(Clone, Debug)]
pub struct BlockData {
    pub lambda: Partition,
    pub d: usize,
    /// Central idempotent `F_λ`.
    pub f: HeckeElement,
    /// `χ_λ(T_w)` in the rank order of `S_n`.
    pub chi: Vec<Scalar>,
    /// Form constant: `(E^{ij}, E^{ji}) = k_λ`.
    pub k: Scalar,
    /// Scalar by which `Σ q^{−l(w)} T_w T_{w⁻¹}` acts on the block; `d_λ / k_λ`.
    pub z_eigenvalue: Scalar,
}

impl BlockData {
    /// `k_λ Σ q^{−l(w)} χ_λ(T_w) T_{w⁻¹}`.
    pub fn reconstruct(&self, h: &Hecke) -> HeckeElement {
        let mut out = HeckeElement::zero(h.n);
        for r in 0..h.dim() {
            let c = &(&self.k * &self.chi[r]) * &h.qpow(-(h.lengths[r] as i64));
            out.coeffs[h.inverses[r]] = c;
        }
        out
    }
}

/// Block data for a whole range of degrees, keyed by `n`.
pub fn blocks_up_to(q: &Scalar, max_degree: usize) -> Result<BTreeMap<usize, (Hecke, Vec<BlockData>)>, Error> {
    let mut out = BTreeMap::new();
    for n in 0..=max_degree {
        let h = Hecke::new(n, q.clone());
        let b = h.block_decomposition()?;
        out.insert(n, (h, b));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q4() -> Hecke {
        Hecke::new(2, Scalar::int(4))
    }

    #[test]
    fn ranks_roundtrip() {
        for (r, w) in Permutation::all(4).iter().enumerate() {
            assert_eq!(w.rank(), r);
            assert_eq!(w.reduced_word().len(), w.length());
        }
    }

    #[test]
    fn quadratic_relation() {
        let h = q4();
        let t = h.generator(1);
        let lhs = h.mul(&t, &t);
        let rhs = t.scale(&Scalar::int(3)).add(&h.one().scale(&Scalar::int(4)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn generators_compose() {
        let h = Hecke::new(3, Scalar::q());
        let w = Permutation::simple(3, 1).compose(&Permutation::simple(3, 2));
        assert_eq!(h.mul(&h.generator(1), &h.generator(2)), HeckeElement::basis(&w));
    }

    #[test]
    fn small_form_values() {
        let h = Hecke::new(2, Scalar::q());
        assert_eq!(h.bilinear_form(&h.generator(1), &h.generator(1)).unwrap(), Scalar::q());
        assert!(h.bilinear_form(&h.one(), &h.generator(1)).unwrap().is_zero());
    }

    #[test]
    fn degree_two_blocks() {
        let h = Hecke::new(2, Scalar::q());
        let q = Scalar::q();
        let one = Scalar::int(1);
        let blocks = h.block_decomposition().unwrap();
        assert_eq!(blocks[0].lambda, Partition::row(2));
        assert_eq!(blocks[0].k, &one / &(&one + &q));
        assert_eq!(blocks[1].k, &q / &(&one + &q));
        assert_eq!(blocks[0].f, h.symmetrizer().unwrap());
        assert_eq!(blocks[1].f, h.antisymmetrizer().unwrap());
    }

    #[test]
    fn mismatched_ranks_rejected() {
        let h = q4();
        assert!(matches!(h.multiply(&HeckeElement::one(3), &h.one()), Err(Error::RankMismatch { .. })));
    }
}
