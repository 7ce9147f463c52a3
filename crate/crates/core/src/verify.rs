//! Exact verification sweep over every level count `1..=max_d`, plus the
//! d-independent Bell suite.

use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::circuit::{
    bell_closed_form, bell_matrix, bell_state, cnot, gate_tensor, hadamard, Gate,
};
use crate::error::{Error, Result};
use crate::exactnum::{AmplitudeQ2, Rational};
use crate::polyring::{boole_poly, Polynomial};
use crate::qudit::{inner_product, outer_product, symbolic_ket, AmpMatrix, Ket};

/// Default upper bound on `max_d`; factorials in the component
/// denominators make large sweeps slow.
pub const DEFAULT_D_CAP: usize = 64;

/// The Bell preparation matrix as printed, before the `1/sqrt 2` factor.
const PRINTED_BELL_ROWS: [[i64; 4]; 4] = [[1, 0, 1, 0], [0, 1, 0, 1], [0, 1, 0, -1], [1, 0, -1, 0]];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    /// `None` for checks that do not depend on the level count.
    pub d: Option<usize>,
    pub passed: bool,
    pub witness: String,
}

impl Check {
    fn new(
        name: &'static str,
        d: Option<usize>,
        outcome: std::result::Result<String, String>,
    ) -> Self {
        let passed = outcome.is_ok();
        let witness = outcome.unwrap_or_else(|e| e);
        Check {
            name,
            d,
            passed,
            witness,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub d_range: RangeInclusive<usize>,
    pub checks: Vec<Check>,
    pub overall: bool,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "verify d = {}..={}\n",
            self.d_range.start(),
            self.d_range.end()
        );
        for c in &self.checks {
            let d = c.d.map_or_else(|| "-".to_string(), |d| d.to_string());
            let status = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {:<26} d={d:<3} {}\n", c.name, c.witness));
        }
        out.push_str(&format!(
            "overall: {} ({} checks, {} failed)",
            if self.overall { "PASS" } else { "FAIL" },
            self.checks.len(),
            self.failures().count()
        ));
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "d_range": [self.d_range.start(), self.d_range.end()],
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "d": c.d,
                "pass": c.passed,
                "witness": c.witness,
            })).collect::<Vec<_>>(),
            "overall": self.overall,
        })
    }

    pub fn to_latex(&self) -> String {
        let rows: Vec<String> = self
            .checks
            .iter()
            .map(|c| {
                format!(
                    "\\texttt{{{}}} & {} & {} \\\\",
                    c.name.replace('_', "\\_"),
                    c.d.map_or_else(|| "--".to_string(), |d| d.to_string()),
                    if c.passed { "pass" } else { "fail" }
                )
            })
            .collect();
        format!(
            "\\begin{{tabular}}{{lrl}}\ncheck & $d$ & result \\\\\n\\hline\n{}\n\\end{{tabular}}",
            rows.join("\n")
        )
    }
}

/// Runs every check for `d` in `1..=max_d` (fanned out over `d`, merged in
/// ascending order) followed by the Bell suite.
pub fn run_verify(max_d: usize, cap: usize) -> Result<VerifyReport> {
    if max_d == 0 {
        return Err(Error::ZeroDimension);
    }
    if max_d > cap {
        return Err(Error::CapExceeded {
            requested: max_d,
            cap,
        });
    }
    let per_d: Vec<Vec<Check>> = (1..=max_d)
        .into_par_iter()
        .map(checks_for_level)
        .collect::<Result<_>>()?;
    let mut checks: Vec<Check> = per_d.into_iter().flatten().collect();
    checks.extend(bell_checks()?);
    let overall = checks.iter().all(|c| c.passed);
    Ok(VerifyReport {
        d_range: 1..=max_d,
        checks,
        overall,
    })
}

type Outcome = std::result::Result<String, String>;

fn checks_for_level(d: usize) -> Result<Vec<Check>> {
    let symbolic = symbolic_ket(d)?;
    let comps = symbolic.entries();
    let boole = boole_poly(d)?;
    // one symbolic ket per level, evaluated at every x
    let kets: Vec<Ket> = (0..d)
        .map(|x| symbolic.evaluate(&Rational::from(x as i64)))
        .collect();
    let projectors = kets
        .iter()
        .map(|k| outer_product(k, k))
        .collect::<Result<Vec<_>>>()?;
    let some = Some(d);
    Ok(vec![
        Check::new("component_degree", some, component_degree(d, comps)),
        Check::new("kronecker_evaluation", some, kronecker(d, comps)),
        Check::new("partition_of_unity", some, partition_of_unity(comps)),
        Check::new(
            "idempotency_mod_ideal",
            some,
            idempotency(comps, |p| boole.reduce(p)),
        ),
        Check::new(
            "orthogonality_mod_ideal",
            some,
            orthogonality(comps, |p| boole.reduce(p)),
        ),
        Check::new("basis_kets", some, basis_kets(&kets)?),
        Check::new(
            "projector_properties",
            some,
            projector_properties(&projectors)?,
        ),
        Check::new("completeness", some, completeness(&projectors)?),
    ])
}

fn component_degree(d: usize, comps: &[Polynomial]) -> Outcome {
    match comps.iter().position(|p| p.degree() != Some(d - 1)) {
        None => Ok(format!("{d} components of degree {}", d - 1)),
        Some(k) => Err(format!("k={k} has degree {:?}", comps[k].degree())),
    }
}

fn kronecker(d: usize, comps: &[Polynomial]) -> Outcome {
    for (k, p) in comps.iter().enumerate() {
        for m in 0..d {
            let value = p.eval(&Rational::from(m as i64));
            let expected = if m == k {
                Rational::one()
            } else {
                Rational::zero()
            };
            if value != expected {
                return Err(format!("l_{k}({m}) = {value}"));
            }
        }
    }
    Ok(format!("{} evaluations", d * d))
}

fn partition_of_unity(comps: &[Polynomial]) -> Outcome {
    let sum: Polynomial = comps.iter().cloned().sum();
    if sum == Polynomial::one() {
        Ok("sum = 1".into())
    } else {
        Err(format!("sum = {sum}"))
    }
}

fn idempotency(comps: &[Polynomial], reduce: impl Fn(&Polynomial) -> Polynomial) -> Outcome {
    for (k, p) in comps.iter().enumerate() {
        let r = reduce(&(p * p));
        if &r != p {
            return Err(format!("l_{k}^2 reduces to {r}"));
        }
    }
    Ok(format!("{} squares", comps.len()))
}

fn orthogonality(comps: &[Polynomial], reduce: impl Fn(&Polynomial) -> Polynomial) -> Outcome {
    let mut pairs = 0;
    for j in 0..comps.len() {
        for k in j + 1..comps.len() {
            let r = reduce(&(&comps[j] * &comps[k]));
            if !r.is_zero() {
                return Err(format!("l_{j} l_{k} reduces to {r}"));
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn basis_kets(kets: &[Ket]) -> Result<Outcome> {
    for (x, ket) in kets.iter().enumerate() {
        if ket.basis_index() != Some(x) {
            return Ok(Err(format!("|{x}> evaluated to {:?}", ket.entries())));
        }
        for (y, other) in kets.iter().enumerate() {
            let ip = inner_product(ket, other)?;
            if ip.is_one() != (x == y) || !(ip.is_one() || ip.is_zero()) {
                return Ok(Err(format!("<{x}|{y}> = {ip}")));
            }
        }
    }
    Ok(Ok(format!("{} unit vectors, orthonormal", kets.len())))
}

fn projector_properties(projectors: &[AmpMatrix]) -> Result<Outcome> {
    for (x, p) in projectors.iter().enumerate() {
        if &p.matmul(p)? != p {
            return Ok(Err(format!("P({x})^2 != P({x})")));
        }
        if !p.is_hermitian() {
            return Ok(Err(format!("P({x}) is not Hermitian")));
        }
        if !p.trace().is_one() {
            return Ok(Err(format!("Tr P({x}) = {}", p.trace())));
        }
    }
    for (x, p) in projectors.iter().enumerate() {
        for (y, q) in projectors.iter().enumerate() {
            if x != y && !p.matmul(q)?.is_zero() {
                return Ok(Err(format!("P({x}) P({y}) != 0")));
            }
        }
    }
    Ok(Ok(format!("{} projectors", projectors.len())))
}

fn completeness(projectors: &[AmpMatrix]) -> Result<Outcome> {
    let d = projectors.len();
    let sum = projectors
        .iter()
        .try_fold(AmpMatrix::zeros(d, d), |acc, p| acc.add(p))?;
    Ok(if sum.is_identity() {
        Ok(format!("sum = I_{d}"))
    } else {
        Err(format!("sum has trace {}", sum.trace()))
    })
}

fn printed_bell_matrix() -> AmpMatrix {
    let h = AmplitudeQ2::inv_sqrt2();
    AmpMatrix::from_rows(
        PRINTED_BELL_ROWS
            .iter()
            .map(|r| r.iter().map(|&v| h.scale(&Rational::from(v))).collect())
            .collect(),
    )
    .expect("4x4 literal")
}

fn bell_checks() -> Result<Vec<Check>> {
    let matrix = bell_matrix();
    let matrix_check = if matrix.matrix() == &printed_bell_matrix() {
        Ok("CNOT (H x I) equals the printed matrix".to_string())
    } else {
        Err(format!("built {:?}", matrix.matrix()))
    };

    let mut closed = Ok("4 cases".to_string());
    let mut states = Vec::with_capacity(4);
    for (x, y) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        let state = bell_state(x, y)?;
        if state.ket() != &bell_closed_form(x, y)? {
            closed = Err(format!("B{x}{y} circuit {:?}", state.ket().entries()));
        }
        states.push(state);
    }

    let mut ortho = Ok("16 inner products".to_string());
    for (i, a) in states.iter().enumerate() {
        for (j, b) in states.iter().enumerate() {
            let ip = inner_product(a.ket(), b.ket())?;
            let expected = if i == j {
                AmplitudeQ2::one()
            } else {
                AmplitudeQ2::zero()
            };
            if ip != expected {
                ortho = Err(format!("<{}|{}> = {ip}", a.name(), b.name()));
            }
        }
    }

    let gates: [(&str, Gate); 4] = [
        ("H", hadamard()),
        ("CNOT", cnot()),
        ("H x I", gate_tensor(&hadamard(), &Gate::identity(2))),
        ("Bell", matrix),
    ];
    let unitary = match gates.iter().find(|(_, g)| !g.is_unitary()) {
        None => Ok(format!("{} gates", gates.len())),
        Some((name, _)) => Err(format!("{name} is not unitary")),
    };

    Ok(vec![
        Check::new("bell_matrix", None, matrix_check),
        Check::new("bell_closed_form", None, closed),
        Check::new("bell_orthonormal", None, ortho),
        Check::new("gate_unitarity", None, unitary),
    ])
}
