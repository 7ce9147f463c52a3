//! Text, LaTeX and JSON renderings of the library objects.
//!
//! Every exact value is rendered with the literal grammar of
//! [`crate::exactnum`] (text and JSON) so output can be parsed back to the
//! identical value. Decimal approximations are opt-in and display only.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::circuit::{bell_closed_form, bell_matrix, BellState};
use crate::error::{Error, Result};
use crate::exactnum::{AmplitudeQ2, Rational};
use crate::polyring::{lagrange_factored, Polynomial};
use crate::qudit::{tensor_product, AmpMatrix, Ket, Superposition, SymbolicKet, SymbolicProjector};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Latex,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            "latex" => Ok(OutputFormat::Latex),
            _ => Err(Error::Parse {
                kind: "format",
                input: s.to_string(),
                reason: "expected text, json or latex".into(),
            }),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Text => "text",
            OutputFormat::Json => "json",
            OutputFormat::Latex => "latex",
        })
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn literals(entries: &[AmplitudeQ2]) -> Vec<String> {
    entries.iter().map(ToString::to_string).collect()
}

fn approximations(entries: &[AmplitudeQ2]) -> Vec<String> {
    entries.iter().map(AmplitudeQ2::approx_string).collect()
}

// ---------------------------------------------------------------- text

pub fn vector_text(entries: &[AmplitudeQ2]) -> String {
    format!("({})", join(entries, ", "))
}

fn vector_approx_text(entries: &[AmplitudeQ2]) -> String {
    format!("({})", approximations(entries).join(", "))
}

pub fn ket_text(ket: &Ket, approx: bool) -> String {
    let mut out = vector_text(ket.entries());
    if approx {
        out.push_str(&format!("\n~ {}", vector_approx_text(ket.entries())));
    }
    out
}

pub fn symbolic_ket_text(ket: &SymbolicKet) -> String {
    format!("({})", join(ket.entries(), ", "))
}

/// `diag(...)` for diagonal matrices, one bracketed row per line otherwise.
pub fn matrix_text(m: &AmpMatrix, approx: bool) -> String {
    let mut out = if m.is_diagonal() {
        format!("diag({})", join(m.diagonal(), ", "))
    } else {
        join(m.iter_rows().map(|r| format!("[{}]", join(r, ", "))), "\n")
    };
    if approx {
        out.push('\n');
        out.push_str(&if m.is_diagonal() {
            format!("~ diag({})", approximations(&m.diagonal()).join(", "))
        } else {
            join(
                m.iter_rows()
                    .map(|r| format!("~ [{}]", approximations(r).join(", "))),
                "\n",
            )
        });
    }
    out
}

pub fn symbolic_projector_text(p: &SymbolicProjector) -> String {
    format!("diag({})", join(p.diagonal(), ", "))
}

pub fn bell_text(state: &BellState, approx: bool) -> Result<String> {
    let closed = bell_closed_form(u64::from(state.x()), u64::from(state.y()))?;
    let mut out = format!(
        "B{}{} ({})\ncircuit:     {}\nclosed form: {}\nmatches: {}",
        state.x(),
        state.y(),
        state.name(),
        vector_text(state.ket().entries()),
        vector_text(closed.entries()),
        state.matches_closed_form()
    );
    if approx {
        out.push_str(&format!(
            "\n~ {}",
            vector_approx_text(state.ket().entries())
        ));
    }
    Ok(out)
}

pub fn superposition_text(s: &Superposition, approx: bool) -> String {
    let mut out = format!(
        "amplitudes: {}\nnorm_sq: {}\nnormalized: {}",
        vector_text(s.amplitudes()),
        s.norm_sq(),
        s.is_normalized()
    );
    if approx {
        out.push_str(&format!("\n~ {}", vector_approx_text(s.amplitudes())));
    }
    out
}

// ---------------------------------------------------------------- LaTeX

fn rational_latex(q: &Rational) -> String {
    let sign = if q.is_negative() { "-" } else { "" };
    let mag = q.abs();
    if mag.is_integer() {
        format!("{sign}{}", mag.numer())
    } else {
        format!("{sign}\\frac{{{}}}{{{}}}", mag.numer(), mag.denom())
    }
}

pub fn amplitude_latex(v: &AmplitudeQ2) -> String {
    let terms = [
        (v.a(), ""),
        (v.ai(), "i"),
        (v.b(), "\\sqrt{2}"),
        (v.bi(), "i\\sqrt{2}"),
    ];
    let mut out = String::new();
    for (coeff, unit) in terms {
        if coeff.is_zero() {
            continue;
        }
        let body = if !unit.is_empty() && coeff.abs().is_one() {
            unit.to_string()
        } else {
            format!("{}{unit}", rational_latex(&coeff.abs()))
        };
        match (out.is_empty(), coeff.is_negative()) {
            (true, true) => out.push('-'),
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
            (true, false) => {}
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// When every entry is a pure `sqrt 2` multiple, returns the entries times
/// `sqrt 2` so they can be printed under a `1/sqrt(2)` prefactor.
fn factor_inv_sqrt2(entries: &[AmplitudeQ2]) -> Option<Vec<AmplitudeQ2>> {
    let pure = entries.iter().all(|v| v.a().is_zero() && v.ai().is_zero());
    let nonzero = entries.iter().any(|v| !v.is_zero());
    (pure && nonzero).then(|| entries.iter().map(|v| v * &AmplitudeQ2::sqrt2()).collect())
}

fn pmatrix(rows: &[String]) -> String {
    format!(
        "\\begin{{pmatrix}}\n{}\n\\end{{pmatrix}}",
        rows.join(" \\\\\n")
    )
}

fn column_latex(entries: &[AmplitudeQ2]) -> String {
    match factor_inv_sqrt2(entries) {
        Some(scaled) => format!(
            "\\frac{{1}}{{\\sqrt{{2}}}}{}",
            pmatrix(&scaled.iter().map(amplitude_latex).collect::<Vec<_>>())
        ),
        None => pmatrix(&entries.iter().map(amplitude_latex).collect::<Vec<_>>()),
    }
}

pub fn ket_latex(ket: &Ket) -> String {
    column_latex(ket.entries())
}

fn factorial_prefactor(d: usize) -> Result<String> {
    let denom = lagrange_factored(d, 0)?.common_denominator;
    Ok(if denom == 1.into() {
        String::new()
    } else {
        format!("\\frac{{1}}{{{denom}}}")
    })
}

/// Factored display over the shared `(d-1)!` denominator, e.g.
/// `\frac{1}{2}` times a column of `(1-x)(2-x)`, `2x(2-x)`, `x(x-1)`.
pub fn symbolic_ket_latex(ket: &SymbolicKet) -> Result<String> {
    let d = ket.d();
    let rows = (0..d)
        .map(|k| checked_numerator(d, k, &ket.entries()[k]))
        .collect::<Result<Vec<_>>>()?;
    Ok(format!("{}{}", factorial_prefactor(d)?, pmatrix(&rows)))
}

// The template is display only; it must expand back to the stored entry.
fn checked_numerator(d: usize, k: usize, entry: &Polynomial) -> Result<String> {
    let factored = lagrange_factored(d, k)?;
    assert_eq!(
        &factored.expand(),
        entry,
        "factored display diverged for d={d}, k={k}"
    );
    Ok(factored.numerator_text())
}

pub fn matrix_latex(m: &AmpMatrix) -> String {
    let all: Vec<AmplitudeQ2> = m.iter_rows().flatten().cloned().collect();
    let (prefix, cells) = match factor_inv_sqrt2(&all) {
        Some(scaled) => ("\\frac{1}{\\sqrt{2}}", scaled),
        None => ("", all),
    };
    let rows: Vec<String> = cells
        .chunks(m.cols().max(1))
        .map(|r| join(r.iter().map(amplitude_latex), " & "))
        .collect();
    format!("{prefix}{}", pmatrix(&rows))
}

pub fn symbolic_projector_latex(p: &SymbolicProjector) -> Result<String> {
    let d = p.d();
    let rows = (0..d)
        .map(|i| {
            let diag = checked_numerator(d, i, &p.diagonal()[i])?;
            Ok(join(
                (0..d).map(|j| {
                    if i == j {
                        diag.clone()
                    } else {
                        "0".to_string()
                    }
                }),
                " & ",
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(format!("{}{}", factorial_prefactor(d)?, pmatrix(&rows)))
}

/// `matrix * (|x> (x) |y>) = closed form`, all exact.
pub fn bell_latex(state: &BellState) -> Result<String> {
    let input = tensor_product(
        &crate::qudit::basis_ket(2, state.x() as usize)?,
        &crate::qudit::basis_ket(2, state.y() as usize)?,
    );
    Ok(format!(
        "|B_{{{}{}}}\\rangle = {}{} = {}",
        state.x(),
        state.y(),
        matrix_latex(bell_matrix().matrix()),
        column_latex(input.entries()),
        column_latex(state.ket().entries())
    ))
}

pub fn superposition_latex(s: &Superposition) -> String {
    let terms: Vec<String> = s
        .amplitudes()
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(x, a)| {
            let coeff = amplitude_latex(a);
            let coeff = if coeff.contains([' ', '+']) {
                format!("\\left({coeff}\\right)")
            } else {
                coeff
            };
            format!("{coeff}|{x}\\rangle")
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

// ---------------------------------------------------------------- JSON

pub fn ket_json(ket: &Ket, x: Option<usize>, approx: bool) -> Value {
    let mut v = json!({
        "d": ket.d(),
        "x": x,
        "entries": literals(ket.entries()),
    });
    if approx {
        v["approx"] = json!(approximations(ket.entries()));
    }
    v
}

pub fn symbolic_ket_json(ket: &SymbolicKet) -> Value {
    json!({
        "d": ket.d(),
        "x": null,
        "entries": ket.entries().iter().map(ToString::to_string).collect::<Vec<_>>(),
    })
}

pub fn matrix_json(m: &AmpMatrix, approx: bool) -> Value {
    let rows: Vec<Vec<String>> = m.iter_rows().map(literals).collect();
    let mut v = json!({ "rows": m.rows(), "cols": m.cols(), "entries": rows });
    if approx {
        v["approx"] = json!(m.iter_rows().map(approximations).collect::<Vec<_>>());
    }
    v
}

pub fn symbolic_projector_json(p: &SymbolicProjector) -> Value {
    json!({
        "d": p.d(),
        "x": null,
        "diagonal": p.diagonal().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "trace": p.trace().to_string(),
    })
}

pub fn bell_json(state: &BellState, approx: bool) -> Result<Value> {
    let closed = bell_closed_form(u64::from(state.x()), u64::from(state.y()))?;
    let mut v = json!({
        "x": state.x(),
        "y": state.y(),
        "entries": literals(state.ket().entries()),
        "closed_form": literals(closed.entries()),
        "matches_closed_form": state.matches_closed_form(),
        "name": state.name(),
    });
    if approx {
        v["approx"] = json!(approximations(state.ket().entries()));
    }
    Ok(v)
}

pub fn superposition_json(s: &Superposition, approx: bool) -> Value {
    let mut v = json!({
        "d": s.d(),
        "amplitudes": literals(s.amplitudes()),
        "norm_sq": s.norm_sq().to_string(),
        "normalized": s.is_normalized(),
    });
    if approx {
        v["approx"] = json!(approximations(s.amplitudes()));
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{basis_ket, bell_state, projector, symbolic_ket, symbolic_projector};

    #[test]
    fn qubit_renderings() {
        let s = symbolic_ket(2).unwrap();
        assert_eq!(symbolic_ket_text(&s), "(-x + 1, x)");
        assert_eq!(
            symbolic_ket_latex(&s).unwrap(),
            "\\begin{pmatrix}\n1-x \\\\\nx\n\\end{pmatrix}"
        );
    }

    #[test]
    fn numeric_renderings() {
        assert_eq!(ket_text(&basis_ket(3, 1).unwrap(), false), "(0, 1, 0)");
        assert_eq!(
            matrix_text(projector(3, 0).unwrap().matrix(), false),
            "diag(1, 0, 0)"
        );
        assert_eq!(
            matrix_text(bell_matrix().matrix(), false).lines().nth(2),
            Some("[0, 1/2s2, 0, -1/2s2]")
        );
        assert_eq!(
            matrix_latex(bell_matrix().matrix()).lines().nth(3),
            Some("0 & 1 & 0 & -1 \\\\")
        );
    }

    #[test]
    fn amplitude_latex_forms() {
        let lat = |s: &str| amplitude_latex(&s.parse().unwrap());
        assert_eq!(lat("0"), "0");
        assert_eq!(lat("-1/2"), "-\\frac{1}{2}");
        assert_eq!(lat("3/5+4/5i"), "\\frac{3}{5} + \\frac{4}{5}i");
        assert_eq!(lat("1s2-1is2"), "\\sqrt{2} - i\\sqrt{2}");
        assert_eq!(lat("-1i"), "-i");
    }

    #[test]
    fn qutrit_projector_latex() {
        let out = symbolic_projector_latex(&symbolic_projector(3).unwrap()).unwrap();
        assert!(out.starts_with("\\frac{1}{2}\\begin{pmatrix}"));
        assert!(out.contains("0 & 2x(2-x) & 0"));
    }

    #[test]
    fn json_shapes() {
        let v = ket_json(&basis_ket(2, 1).unwrap(), Some(1), true);
        assert_eq!(v["entries"], json!(["0", "1"]));
        assert_eq!(v["approx"], json!(["0", "1"]));
        let b = bell_json(&bell_state(1, 0).unwrap(), false).unwrap();
        assert_eq!(b["entries"], json!(["1/2s2", "0", "0", "-1/2s2"]));
        assert_eq!(b["matches_closed_form"], json!(true));
        assert_eq!(
            symbolic_ket_json(&symbolic_ket(2).unwrap())["x"],
            Value::Null
        );
    }

    #[test]
    fn format_names() {
        assert_eq!("JSON".parse::<OutputFormat>().unwrap(), OutputFormat::Json);
        assert!("yaml".parse::<OutputFormat>().is_err());
        assert_eq!(OutputFormat::Latex.to_string(), "latex");
    }
}
