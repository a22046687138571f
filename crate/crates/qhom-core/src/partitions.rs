//! Partitions, Young diagrams and the combinatorics built on them.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

/// A weakly decreasing sequence of positive integers. The empty partition
/// is a legitimate value.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A finite set of partitions in canonical order.
pub type PartitionSet = BTreeSet<Partition>;

impl Partition {
    /// Panics unless `parts` is weakly decreasing; trailing zeros are dropped.
    pub fn new(parts: Vec<usize>) -> Self {
        Self::try_new(parts).expect("parts must be weakly decreasing")
    }

    pub fn try_new(mut parts: Vec<usize>) -> Option<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return None;
        }
        Some(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The single row `(n)`.
    pub fn row(n: usize) -> Self {
        Self::new(vec![n])
    }

    /// The single column `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self::new(vec![1; n])
    }

    /// `rows` rows of length `len`.
    pub fn rectangle(rows: usize, len: usize) -> Self {
        if len == 0 {
            return Self::empty();
        }
        Self::new(vec![len; rows])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` with 1-based `i`; zero past the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width).map(|i| self.parts.iter().filter(|&&p| p >= i).count()).collect();
        Partition { parts }
    }

    /// Diagram containment `self ⊇ other`.
    pub fn contains(&self, other: &Self) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Boxes as `(row, col)`, both 0-based, row by row.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.parts.iter().enumerate().flat_map(|(i, &l)| (0..l).map(move |j| (i, j))).collect()
    }

    /// All partitions of `n`, largest first in reverse lexicographic order.
    pub fn all_of_weight(n: usize) -> Vec<Self> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    pub fn all_up_to(n: usize) -> Vec<Self> {
        (0..=n).flat_map(Self::all_of_weight).collect()
    }

    /// Hook lengths product formula `n! / Π hooks`.
    pub fn count_standard_tableaux(&self) -> u128 {
        let conj = self.conjugate();
        let mut num: u128 = (1..=self.weight() as u128).product();
        let mut den: u128 = 1;
        for (i, j) in self.cells() {
            let arm = self.parts[i] - j - 1;
            let leg = conj.parts[j] - i - 1;
            den *= (arm + leg + 1) as u128;
            let g = gcd(num, den);
            num /= g;
            den /= g;
        }
        debug_assert_eq!(den, 1);
        num
    }

    /// Standard tableaux, each as rows of entries `1..=n`.
    pub fn standard_tableaux(&self) -> Vec<Tableau> {
        let n = self.weight();
        let mut out = Vec::new();
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); self.len()];
        fn rec(shape: &[usize], k: usize, n: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
            if k > n {
                out.push(Tableau { rows: rows.clone() });
                return;
            }
            for i in 0..shape.len() {
                let len = rows[i].len();
                if len < shape[i] && (i == 0 || rows[i - 1].len() > len) {
                    rows[i].push(k);
                    rec(shape, k + 1, n, rows, out);
                    rows[i].pop();
                }
            }
        }
        rec(&self.parts, 1, n, &mut rows, &mut out);
        out
    }

    /// `β_k`: boxes in the first `k` columns.
    pub fn beta(&self, k: usize) -> usize {
        self.parts.iter().map(|&p| p.min(k)).sum()
    }

    /// The β-order: `self ≥ other` iff `β_k(self) ≥ β_k(other)` for all `k`.
    pub fn beta_geq(&self, other: &Self) -> bool {
        let kmax = self.part(1).max(other.part(1)).max(1);
        (1..=kmax).all(|k| self.beta(k) >= other.beta(k))
    }

    /// `λ ∈ Γ_{r,s}`, i.e. `λ_{r+1} ≤ s`.
    pub fn in_gamma(&self, r: usize, s: usize) -> bool {
        self.part(r + 1) <= s
    }
}

impl Ord for Partition {
    /// By weight, then reverse lexicographically within a weight.
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight().cmp(&other.weight()).then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Failure to parse a partition string.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParsePartitionError(pub String);

impl fmt::Display for ParsePartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cannot parse partition: {}", self.0)
    }
}

impl FromStr for Partition {
    type Err = ParsePartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let err = || ParsePartitionError(String::from(s));
        if t == "-" || t.is_empty() {
            return Ok(Self::empty());
        }
        let parts = t.split(',').map(|x| x.trim().parse::<usize>()).collect::<Result<Vec<_>, _>>().map_err(|_| err())?;
        if parts.contains(&0) {
            return Err(err());
        }
        Self::try_new(parts).ok_or_else(err)
    }
}

/// A filled Young diagram.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tableau {
    pub rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect())
    }

    /// `content[k-1] = col - row` of the box holding `k`.
    pub fn contents(&self) -> Vec<i64> {
        let n: usize = self.rows.iter().map(Vec::len).sum();
        let mut c = vec![0; n];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &k) in row.iter().enumerate() {
                c[k - 1] = j as i64 - i as i64;
            }
        }
        c
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `c^γ_{λμ}` by counting Littlewood-Richardson fillings of `γ/λ` with
/// content `μ`: rows weakly increase, columns strictly increase, and the
/// word read right to left, top to bottom is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, gamma: &Partition) -> u64 {
    if gamma.weight() != lambda.weight() + mu.weight() || !gamma.contains(lambda) {
        return 0;
    }
    let cells: Vec<(usize, usize)> =
        (0..gamma.len()).flat_map(|i| (lambda.part(i + 1)..gamma.part(i + 1)).rev().map(move |j| (i, j))).collect();
    let mut fill: Vec<Vec<usize>> = (0..gamma.len()).map(|i| vec![0; gamma.part(i + 1)]).collect();
    let mut count = vec![0usize; mu.len() + 1];
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        lambda: &Partition,
        mu: &Partition,
        fill: &mut Vec<Vec<usize>>,
        count: &mut Vec<usize>,
    ) -> u64 {
        let Some(&(i, j)) = cells.get(idx) else {
            return 1;
        };
        let right = fill[i].get(j + 1).copied().filter(|&v| v > 0);
        let above = if i > 0 && j >= lambda.part(i) { Some(fill[i - 1][j]) } else { None };
        let mut total = 0;
        for v in 1..=mu.len() {
            if right.is_some_and(|r| v > r) || above.is_some_and(|a| v <= a) {
                continue;
            }
            if count[v] >= mu.part(v) || (v > 1 && count[v] + 1 > count[v - 1]) {
                continue;
            }
            count[v] += 1;
            fill[i][j] = v;
            total += rec(idx + 1, cells, lambda, mu, fill, count);
            fill[i][j] = 0;
            count[v] -= 1;
        }
        total
    }
    rec(0, &cells, lambda, mu, &mut fill, &mut count)
}

/// `C_{λ,(1^k)}`: shapes reachable from `λ` by adding a vertical strip of
/// `k` boxes.
pub fn pieri_column_set(lambda: &Partition, k: usize) -> PartitionSet {
    let col = Partition::column(k);
    Partition::all_of_weight(lambda.weight() + k).into_iter().filter(|g| lr_coefficient(lambda, &col, g) == 1).collect()
}

/// `C_{λ,μ}`: the shapes `γ` with `c^γ_{λμ} ≠ 0`.
pub fn lr_support(lambda: &Partition, mu: &Partition) -> Vec<(Partition, u64)> {
    Partition::all_of_weight(lambda.weight() + mu.weight())
        .into_iter()
        .filter_map(|g| {
            let c = lr_coefficient(lambda, mu, &g);
            (c > 0).then_some((g, c))
        })
        .collect()
}

/// Smallest upward-closed set containing `j`, cut off at `weight_bound`.
pub fn dideal_closure(j: &PartitionSet, weight_bound: usize) -> PartitionSet {
    Partition::all_up_to(weight_bound).into_iter().filter(|t| j.iter().any(|s| t.contains(s))).collect()
}

/// Whether `j` is closed upward under containment within `weight_bound`.
pub fn is_dideal(j: &PartitionSet, weight_bound: usize) -> bool {
    j.iter().all(|s| Partition::all_up_to(weight_bound).iter().filter(|t| t.contains(s)).all(|t| j.contains(t)))
}

/// `D_σ`: partitions of weight `n` that dominate `σ` in the β-order.
pub fn beta_upper_set(sigma: &Partition, n: usize) -> PartitionSet {
    Partition::all_of_weight(n).into_iter().filter(|t| t.beta_geq(sigma)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(xs: &[usize]) -> Partition {
        Partition::new(xs.to_vec())
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[3]).conjugate(), p(&[1, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[4, 2, 1]).conjugate(), p(&[3, 2, 1, 1]));
    }

    #[test]
    fn tableau_counts() {
        assert_eq!(p(&[5]).count_standard_tableaux(), 1);
        assert_eq!(p(&[2, 1]).count_standard_tableaux(), 2);
        assert_eq!(p(&[2, 2]).count_standard_tableaux(), 2);
        assert_eq!(p(&[3, 2]).standard_tableaux().len(), 5);
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[2])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1]), &p(&[1, 1, 1])), 0);
    }

    #[test]
    fn pieri_sets() {
        let s = pieri_column_set(&p(&[1]), 1);
        assert_eq!(s, [p(&[2]), p(&[1, 1])].into_iter().collect());
        let s = pieri_column_set(&Partition::empty(), 3);
        assert_eq!(s, [p(&[1, 1, 1])].into_iter().collect());
        let s = pieri_column_set(&p(&[2]), 2);
        assert_eq!(s, [p(&[3, 1]), p(&[2, 1, 1])].into_iter().collect());
    }

    #[test]
    fn beta_statistics() {
        assert_eq!(p(&[3, 1]).beta(1), 2);
        assert_eq!(p(&[3, 1]).beta(3), 4);
        assert_eq!(Partition::empty().beta(2), 0);
        assert!(p(&[1, 1]).beta_geq(&p(&[2])));
        assert!(!p(&[2]).beta_geq(&p(&[1, 1])));
        assert!(p(&[2, 1]).beta_geq(&p(&[2, 1])));
    }

    #[test]
    fn dideals() {
        let j: PartitionSet = [p(&[1, 1])].into_iter().collect();
        let c = dideal_closure(&j, 3);
        assert_eq!(c, [p(&[1, 1]), p(&[2, 1]), p(&[1, 1, 1])].into_iter().collect());
        assert!(is_dideal(&c, 3));
        assert!(!is_dideal(&j, 3));
        assert!(dideal_closure(&PartitionSet::new(), 3).is_empty());
        let all = dideal_closure(&[Partition::empty()].into_iter().collect(), 3);
        assert_eq!(all.len(), Partition::all_up_to(3).len());
    }

    #[test]
    fn gamma_membership() {
        assert!(p(&[3, 1]).in_gamma(1, 1));
        assert!(!p(&[2, 2]).in_gamma(1, 1));
        assert!(p(&[5, 4, 3]).in_gamma(3, 0));
    }

    #[test]
    fn text_format() {
        assert_eq!(p(&[3, 1]).to_string(), "3,1");
        assert_eq!(Partition::empty().to_string(), "-");
        assert_eq!("3,1".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("-".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,3".parse::<Partition>().is_err());
    }

    #[test]
    fn ordering_is_by_weight_then_reverse_lex() {
        let v = Partition::all_of_weight(3);
        assert_eq!(v, vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert!(p(&[3]) < p(&[2, 1]));
        assert!(p(&[1, 1]) < p(&[3]));
    }
}
