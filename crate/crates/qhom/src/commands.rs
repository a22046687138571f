//! Running a parsed command line.

use qhom_core::arith::{Scalar, Subspace};
use qhom_core::bialgebra::{Kind, RealizedAlgebra};
use qhom_core::ideals::component_check;
use qhom_core::invariant::{MuStar, Version};
use qhom_core::operators::HeckeOp;
use qhom_core::quadratic::{dimension_rows, koszul_numeric_check, Family, QuadraticAlgebra};
use qhom_core::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::cli::{Cli, Command, Exit, FamilyArg, KindArg, VersionArg};
use crate::opfile::{builtin, resolve, LoadError, OperatorFile};
use crate::report::{Record, Report};

pub enum Outcome {
    Report(Report),
    Text(String),
}

#[derive(Debug)]
pub struct CommandError {
    pub exit: Exit,
    pub message: String,
}

impl CommandError {
    fn operational(message: impl Into<String>) -> Self {
        CommandError { exit: Exit::Operational, message: message.into() }
    }
}

impl From<LoadError> for CommandError {
    fn from(e: LoadError) -> Self {
        let exit = match e {
            LoadError::Invalid(_) => Exit::Failure,
            _ => Exit::Operational,
        };
        CommandError { exit, message: e.to_string() }
    }
}

/// Errors that mean an identity failed, as opposed to unusable input.
fn is_failure(e: &Error) -> bool {
    matches!(
        e,
        Error::YangBaxterFails
            | Error::HeckeEquationFails
            | Error::NotClosed
            | Error::IdentityViolation { .. }
            | Error::KoszulDefect(_)
            | Error::BiidealViolation
            | Error::NonIntegralMultiplicity { .. }
            | Error::BlockSeparationFailure(_)
            | Error::BirankUndetermined { .. }
    )
}

/// Turns a failed identity into a record and anything else into an error.
fn failure_record(check: &str, e: Error, fields: serde_json::Value) -> Result<Record, CommandError> {
    if !is_failure(&e) {
        return Err(CommandError::operational(e.to_string()));
    }
    let mut fields = fields;
    fields.as_object_mut().expect("object").insert(String::from("error"), json!(e.to_string()));
    Ok(Record::new(check, false, fields))
}

fn parse_q(s: &str) -> Result<Scalar, CommandError> {
    if s == "sym" {
        return Ok(Scalar::q());
    }
    s.parse().map_err(|e| CommandError::operational(format!("--q: {e}")))
}

fn required<'a>(v: &'a Option<String>, flag: &str) -> Result<&'a str, CommandError> {
    v.as_deref().ok_or_else(|| CommandError::operational(format!("missing {flag}")))
}

pub fn execute(cli: &Cli) -> Result<Outcome, CommandError> {
    let q = parse_q(&cli.common.q)?;
    let load = |spec: &str| resolve(spec, &q).map_err(CommandError::from);
    let mut report = Report::default();
    match &cli.command {
        Command::Export { name } => {
            let op = builtin(name, &q)
                .ok_or_else(|| CommandError::operational(format!("{name}: unknown builtin operator")))?
                .map_err(|e| CommandError::operational(e.to_string()))?;
            let text = serde_json::to_string_pretty(&OperatorFile::from_operator(&op)).expect("serializable");
            return Ok(Outcome::Text(text + "\n"));
        }
        Command::Check { operators, op } => {
            let all: Vec<&String> = operators.iter().chain(op).collect();
            if all.is_empty() {
                return Err(CommandError::operational("no operators given"));
            }
            for spec in all {
                report.push(check_operator(spec, &q)?);
            }
        }
        Command::Poincare { family, op, s, r, max_degree } => {
            let (op_s, op_r) = match family {
                FamilyArg::M => (load(required(s, "--S")?)?, load(required(r, "--R")?)?),
                _ => {
                    let one = load(op.as_deref().or(r.as_deref()).ok_or_else(|| CommandError::operational("missing --op"))?)?;
                    (one.clone(), one)
                }
            };
            poincare(&mut report, *family, &op_s, &op_r, *max_degree)?;
        }
        Command::Realize { kind, op, s, r, max_degree, samples } => {
            let (op_s, op_r) = match kind {
                KindArg::M | KindArg::N => (load(required(s, "--S")?)?, load(required(r, "--R")?)?),
                _ => {
                    let one = load(op.as_deref().or(r.as_deref()).ok_or_else(|| CommandError::operational("missing --op"))?)?;
                    (one.clone(), one)
                }
            };
            realize(&mut report, *kind, &op_s, &op_r, *max_degree, *samples, cli.common.seed)?;
        }
        Command::Ideal { sigma, s, r, degree } => {
            let (op_s, op_r) = (load(s)?, load(r)?);
            let fields = json!({"sigma": sigma.to_string(), "degree": degree});
            match RealizedAlgebra::realize(&op_s, &op_r, Kind::M, *degree).and_then(|a| component_check(&a, sigma, *degree)) {
                Ok(c) => report.push(Record::new(
                    "ideal",
                    c.equal,
                    json!({"sigma": sigma.to_string(), "degree": degree, "computed": c.computed, "predicted": c.predicted, "equal": c.equal}),
                )),
                Err(e) => report.push(failure_record("ideal", e, fields)?),
            }
        }
        Command::Mu { t, r, s, degree, version } => {
            let (op_t, op_r, op_s) = (load(t)?, load(r)?, load(s)?);
            let versions: &[Version] = match version {
                VersionArg::Plain => &[Version::Plain],
                VersionArg::Twisted => &[Version::Twisted],
                VersionArg::Both => &[Version::Plain, Version::Twisted],
            };
            for v in versions {
                mu(&mut report, *v, &op_t, &op_r, &op_s, *degree)?;
            }
        }
    }
    Ok(Outcome::Report(report))
}

fn check_operator(spec: &str, q: &Scalar) -> Result<Record, CommandError> {
    match resolve(spec, q) {
        Ok(op) => {
            let closed = op.check_hecke_symmetry().is_ok();
            let fields =
                json!({"operator": spec, "dim": op.dim(), "q": op.q().to_string(), "yang_baxter": true, "hecke": true, "closure": closed});
            Ok(Record::new("operator", closed, fields))
        }
        Err(LoadError::Invalid(e)) => Ok(Record::new("operator", false, json!({"operator": spec, "error": e.to_string()}))),
        Err(e) => Err(e.into()),
    }
}

fn poincare(report: &mut Report, family: FamilyArg, op_s: &HeckeOp, op_r: &HeckeOp, max_degree: usize) -> Result<(), CommandError> {
    let (fam, name, algebra) = match family {
        FamilyArg::E => (Family::E, "E", QuadraticAlgebra::e(op_r)),
        FamilyArg::F => (Family::F, "F", QuadraticAlgebra::f(op_r)),
        FamilyArg::M => {
            (Family::M, "M", QuadraticAlgebra::matrix_algebra(op_s, op_r).map_err(|e| CommandError::operational(e.to_string()))?)
        }
    };
    match dimension_rows(op_s, op_r, fam, max_degree) {
        Ok(rows) => {
            for row in rows {
                let ok = row.computed == row.predicted;
                report.push(Record::new(
                    "dimension",
                    ok,
                    json!({"family": name, "degree": row.degree, "computed": row.computed, "predicted": row.predicted}),
                ));
            }
        }
        Err(e) => report.push(failure_record("dimension", e, json!({"family": name}))?),
    }
    let series = algebra.hilbert_series(max_degree);
    let dual = algebra.dual_hilbert_series(max_degree);
    let fields = json!({"family": name, "max_degree": max_degree, "dims": series.coefficients, "dual_dims": dual.coefficients});
    match koszul_numeric_check(&series, &dual, max_degree) {
        Ok(()) => report.push(Record::new("koszul", true, fields)),
        Err(e) => report.push(failure_record("koszul", e, fields)?),
    }
    Ok(())
}

fn random_element(rng: &mut ChaCha8Rng, space: &Subspace) -> Vec<Scalar> {
    let mut v = vec![Scalar::int(0); space.ambient_dim()];
    for b in space.basis_rows() {
        let c = Scalar::int(rng.gen_range(-3..=3));
        for (x, y) in v.iter_mut().zip(b) {
            *x = &*x + &(&c * y);
        }
    }
    v
}

fn realize(
    report: &mut Report,
    kind: KindArg,
    op_s: &HeckeOp,
    op_r: &HeckeOp,
    max_degree: usize,
    samples: usize,
    seed: u64,
) -> Result<(), CommandError> {
    let (kind, name) = match kind {
        KindArg::E => (Kind::E, "E"),
        KindArg::F => (Kind::F, "F"),
        KindArg::M => (Kind::M, "M"),
        KindArg::N => (Kind::N, "N"),
    };
    let a = match RealizedAlgebra::realize(op_s, op_r, kind, max_degree) {
        Ok(a) => a,
        Err(e) => {
            report.push(failure_record("realize", e, json!({"kind": name}))?);
            return Ok(());
        }
    };
    for n in 0..=max_degree {
        let c = a.component(n);
        let bar = &c.projectors.bar;
        let idempotent = bar.mul(bar) == *bar;
        let blocks: Vec<_> = a.block_split(n).iter().map(|b| json!({"lambda": b.lambda.to_string(), "dim": b.dim()})).collect();
        report.push(Record::new(
            "realize",
            idempotent,
            json!({"kind": name, "degree": n, "image_dim": c.image.dim(), "relation_dim": a.presentation.relation_sum(n).dim(), "kernel_matches_relations": true, "idempotent": idempotent, "blocks": blocks}),
        ));
    }
    if samples > 0 && max_degree >= 1 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut failures = 0;
        for _ in 0..samples {
            let i = rng.gen_range(0..=max_degree);
            let j = rng.gen_range(0..=max_degree - i);
            let k = rng.gen_range(0..=max_degree - i - j);
            let x = random_element(&mut rng, &a.component(i).image);
            let y = random_element(&mut rng, &a.component(j).image);
            let z = random_element(&mut rng, &a.component(k).image);
            let left = a.product_unchecked(i + j, &a.product_unchecked(i, &x, j, &y), k, &z);
            let right = a.product_unchecked(i, &x, j + k, &a.product_unchecked(j, &y, k, &z));
            if left != right {
                failures += 1;
            }
        }
        report.push(Record::new(
            "associativity",
            failures == 0,
            json!({"kind": name, "samples": samples, "seed": seed, "failures": failures}),
        ));
    }
    Ok(())
}

fn mu(report: &mut Report, version: Version, t: &HeckeOp, r: &HeckeOp, s: &HeckeOp, degree: usize) -> Result<(), CommandError> {
    let vname = match version {
        Version::Plain => "plain",
        Version::Twisted => "twisted",
    };
    let m = match MuStar::new(t, r, s, version, degree.max(2)) {
        Ok(m) => m,
        Err(e) => {
            report.push(failure_record("mu", e, json!({"version": vname}))?);
            return Ok(());
        }
    };
    match m.relation_check() {
        Ok(()) => report.push(Record::new("mu-relations", true, json!({"version": vname, "degree": 2}))),
        Err(e) => report.push(failure_record("mu-relations", e, json!({"version": vname, "degree": 2}))?),
    }
    for n in 1..=degree {
        let fields = json!({"version": vname, "degree": n});
        let outcome = m.kernel_vs_rectangle(n).and_then(|k| m.block_injectivity_check(n).map(|b| (k, b)));
        match outcome {
            Ok((k, b)) => {
                let per_block: Vec<_> = b
                    .per_block
                    .iter()
                    .map(|x| json!({"lambda": x.lambda.to_string(), "dim": x.dim, "image_dim": x.image_dim, "multiplicity": x.multiplicity, "ok": x.ok}))
                    .collect();
                let cross_ok = b.cross.iter().all(|c| c.meet_dim == 0);
                let passed = k.equal && b.passed();
                report.push(Record::new(
                    "mu",
                    passed,
                    json!({
                        "version": vname,
                        "degree": n,
                        "birank": [k.birank.0, k.birank.1],
                        "rank": k.rank,
                        "kernel_dim": k.kernel_dim,
                        "predicted_kernel_dim": k.predicted_kernel_dim,
                        "kernel_equal": k.equal,
                        "per_block": per_block,
                        "cross_block_vanishes": cross_ok,
                    }),
                ));
            }
            Err(e) => report.push(failure_record("mu", e, fields)?),
        }
    }
    Ok(())
}
