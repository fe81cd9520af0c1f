//! Rendering of Legendre-function and normalization tables, and grid export.
//!
//! Text and LaTeX show exact values symbolically; CSV and JSON carry exact
//! rational strings and doubled quantum numbers.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::eval::{eval_harmonic, phi_period, QuasiHarmonic};
use crate::norms::norm_theta;
use crate::numerics::{HalfInt, PiScaled};
use crate::series::{legendre_for_pair, LegendreFunction, QuantumPair};
use crate::{PhiRange, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    Legendre,
    Norms,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Csv,
    Json,
    Latex,
}

/// Functions for `2|m| ∈ 0..=two_m_max`, `i ∈ 0..=i_max`, row-major.
pub fn table_grid(two_m_max: u32, i_max: u32) -> Vec<Vec<LegendreFunction>> {
    (0..=two_m_max as i64)
        .map(|two_m| {
            (0..=i_max as i64)
                .map(|i| {
                    let pair =
                        QuantumPair::from_twice(two_m + 2 * i, two_m).expect("grid pair is valid");
                    legendre_for_pair(&pair)
                })
                .collect()
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
struct NormEntry {
    two_l: i64,
    two_m: i64,
    i: usize,
    norm: PiScaled,
}

#[derive(Serialize, Deserialize)]
struct TableDoc<T> {
    kind: String,
    two_m_max: u32,
    i_max: u32,
    entries: Vec<T>,
}

/// Parses a JSON Legendre table back into its functions.
pub fn parse_legendre_json(doc: &str) -> Result<Vec<LegendreFunction>> {
    let doc: TableDoc<LegendreFunction> = serde_json::from_str(doc).map_err(|e| Error::Parse {
        what: "legendre table JSON",
        input: e.to_string(),
    })?;
    Ok(doc.entries)
}

pub fn render_table(kind: TableKind, two_m_max: u32, i_max: u32, format: OutputFormat) -> String {
    let grid = table_grid(two_m_max, i_max);
    match (kind, format) {
        (TableKind::Legendre, OutputFormat::Text) => legendre_text(&grid, i_max),
        (TableKind::Norms, OutputFormat::Text) => norms_text(&grid, i_max),
        (TableKind::Legendre, OutputFormat::Latex) => legendre_latex(&grid, i_max),
        (TableKind::Norms, OutputFormat::Latex) => norms_latex(&grid, i_max),
        (TableKind::Legendre, OutputFormat::Csv) => {
            let mut out = String::from("two_m,i,two_l,factor_exponent,coeffs\n");
            for f in grid.iter().flatten() {
                let coeffs: Vec<String> = f.coeffs().iter().map(ToString::to_string).collect();
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    f.m_abs().twice(),
                    f.degree(),
                    f.l().twice(),
                    f.factor_exponent(),
                    coeffs.join(";")
                );
            }
            out
        }
        (TableKind::Norms, OutputFormat::Csv) => {
            let mut out = String::from("two_m,i,two_l,q,pi\n");
            for f in grid.iter().flatten() {
                let n = norm_theta(f);
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    f.m_abs().twice(),
                    f.degree(),
                    f.l().twice(),
                    n.q(),
                    n.pi_exponent()
                );
            }
            out
        }
        (TableKind::Legendre, OutputFormat::Json) => {
            let doc = TableDoc {
                kind: "legendre".into(),
                two_m_max,
                i_max,
                entries: grid.into_iter().flatten().collect(),
            };
            serde_json::to_string_pretty(&doc).expect("table serializes") + "\n"
        }
        (TableKind::Norms, OutputFormat::Json) => {
            let doc = TableDoc {
                kind: "norms".into(),
                two_m_max,
                i_max,
                entries: grid
                    .iter()
                    .flatten()
                    .map(|f| NormEntry {
                        two_l: f.l().twice(),
                        two_m: f.m_abs().twice(),
                        i: f.degree(),
                        norm: norm_theta(f),
                    })
                    .collect(),
            };
            serde_json::to_string_pretty(&doc).expect("table serializes") + "\n"
        }
    }
}

/// `(1−x²)^{|m|/2}` as plain text.
pub fn factor_text(m_abs: HalfInt) -> String {
    let e = Rational::new(BigInt::from(m_abs.twice()), BigInt::from(4));
    if e.is_zero() {
        "1".into()
    } else if e.is_one() {
        "(1−x²)".into()
    } else {
        format!("(1−x²)^{{{e}}}")
    }
}

/// `(1−x²)^{|m|/2}` in LaTeX.
pub fn factor_latex(m_abs: HalfInt) -> String {
    let e = Rational::new(BigInt::from(m_abs.twice()), BigInt::from(4));
    if e.is_zero() {
        "1".into()
    } else if e.is_one() {
        "(1{\\rm -}x^2)".into()
    } else {
        format!("(1{{\\rm -}}x^2)^{{{}}}", rational_latex(&e))
    }
}

fn rational_latex(r: &Rational) -> String {
    if r.is_integer() {
        r.to_string()
    } else {
        let sign = if r.is_negative() { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", r.numer().abs(), r.denom())
    }
}

fn halfint_latex(h: HalfInt) -> String {
    rational_latex(&h.to_rational())
}

/// Polynomial in LaTeX, e.g. `15x{\rm -}80x^3{\rm +}80x^5`.
pub fn poly_latex(coeffs: &[Rational]) -> String {
    let mut out = String::new();
    for (k, a) in coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        if a.is_negative() {
            out.push_str("{\\rm -}");
        } else if !out.is_empty() {
            out.push_str("{\\rm +}");
        }
        let mag = a.abs();
        if k == 0 || !mag.is_one() {
            out.push_str(&rational_latex(&mag));
        }
        match k {
            0 => {}
            1 => out.push('x'),
            _ => {
                let _ = write!(out, "x^{k}");
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s}{}", " ".repeat(widths[c] - s.chars().count())))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn header(first: &[&str], i_max: u32) -> Vec<String> {
    first
        .iter()
        .map(|s| s.to_string())
        .chain((0..=i_max).map(|i| format!("i={i}")))
        .collect()
}

fn legendre_text(grid: &[Vec<LegendreFunction>], i_max: u32) -> String {
    let mut rows = vec![header(&["|m|", "factor"], i_max)];
    for row in grid {
        let m = row[0].m_abs();
        let mut r = vec![m.to_string(), factor_text(m)];
        r.extend(row.iter().map(|f| f.poly().to_string()));
        rows.push(r);
    }
    aligned(&rows)
}

fn norms_text(grid: &[Vec<LegendreFunction>], i_max: u32) -> String {
    let mut rows = vec![header(&["|m|"], i_max)];
    for row in grid {
        let mut r = vec![row[0].m_abs().to_string()];
        r.extend(row.iter().map(|f| norm_theta(f).to_string()));
        rows.push(r);
    }
    aligned(&rows)
}

fn latex_array(head: Vec<String>, body: Vec<Vec<String>>, extra_cols: usize, i_max: u32) -> String {
    let cols = "l".repeat(extra_cols + i_max as usize + 1);
    let mut out = format!("\\begin{{array}}{{|c|{cols}|}}\n\\hline\n");
    let _ = writeln!(out, "{} \\\\\\hline", head.join(" & "));
    for r in body {
        let _ = writeln!(out, "{} \\\\", r.join(" & "));
    }
    out.push_str("\\hline\n\\end{array}\n");
    out
}

fn legendre_latex(grid: &[Vec<LegendreFunction>], i_max: u32) -> String {
    let head = ["|m|".to_string(), "{\\rm factor}".to_string()]
        .into_iter()
        .chain((0..=i_max).map(|i| format!("i={i}")))
        .collect();
    let body = grid
        .iter()
        .map(|row| {
            let m = row[0].m_abs();
            [halfint_latex(m), factor_latex(m)]
                .into_iter()
                .chain(row.iter().map(|f| poly_latex(f.coeffs())))
                .collect()
        })
        .collect();
    latex_array(head, body, 1, i_max)
}

fn norms_latex(grid: &[Vec<LegendreFunction>], i_max: u32) -> String {
    let head = std::iter::once("|m|".to_string())
        .chain((0..=i_max).map(|i| format!("i={i}")))
        .collect();
    let body = grid
        .iter()
        .map(|row| {
            std::iter::once(halfint_latex(row[0].m_abs()))
                .chain(row.iter().map(|f| norm_theta(f).to_latex()))
                .collect()
        })
        .collect();
    latex_array(head, body, 0, i_max)
}

/// CSV grid `theta,phi,re,im,abs2` with θ uniform on `[0, π]` and φ uniform on
/// `[0, period)`, period 4π for half-odd-integer `m`.
pub fn sample_grid(
    pair: QuantumPair,
    n_theta: usize,
    n_phi: usize,
    unit_normalized: bool,
    phi_range: PhiRange,
) -> Result<String> {
    if n_theta < 2 || n_phi < 2 {
        return Err(Error::Domain(format!(
            "grid needs at least 2 points per axis (got {n_theta} × {n_phi})"
        )));
    }
    let h = QuasiHarmonic::new(pair).with_phi_range(phi_range);
    let period: f64 = phi_period(pair.m());
    let mut out = String::from("theta,phi,re,im,abs2\n");
    for a in 0..n_theta {
        let theta = if a + 1 == n_theta {
            std::f64::consts::PI
        } else {
            a as f64 * std::f64::consts::PI / (n_theta - 1) as f64
        };
        for b in 0..n_phi {
            let phi = b as f64 * period / n_phi as f64;
            let y = eval_harmonic(&h, theta, phi, unit_normalized)?;
            let _ = writeln!(
                out,
                "{:?},{:?},{:?},{:?},{:?}",
                theta,
                phi,
                y.re,
                y.im,
                y.norm_sqr()
            );
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_entries() {
        let t = render_table(TableKind::Legendre, 11, 5, OutputFormat::Text);
        let row = t.lines().find(|l| l.starts_with("3/2 ")).unwrap();
        assert!(row.contains("(1−x²)^{3/4}"));
        assert!(row.contains("1−6x²"));
        let t = render_table(TableKind::Norms, 11, 5, OutputFormat::Text);
        let row = t.lines().find(|l| l.starts_with("11/2")).unwrap();
        assert!(row.trim_end().ends_with("8775π/8192"));
    }

    #[test]
    fn json_single_entry() {
        let t = render_table(TableKind::Legendre, 0, 0, OutputFormat::Json);
        let v: serde_json::Value = serde_json::from_str(&t).unwrap();
        assert_eq!(v["entries"].as_array().unwrap().len(), 1);
        assert_eq!(v["entries"][0]["two_m"], 0);
        assert_eq!(v["entries"][0]["i"], 0);
        assert_eq!(v["entries"][0]["coeffs"], serde_json::json!(["1"]));
    }

    #[test]
    fn json_round_trip() {
        let t = render_table(TableKind::Legendre, 11, 5, OutputFormat::Json);
        let parsed = parse_legendre_json(&t).unwrap();
        let expected: Vec<LegendreFunction> = table_grid(11, 5).into_iter().flatten().collect();
        assert_eq!(parsed, expected);
        let t = render_table(TableKind::Norms, 3, 1, OutputFormat::Json);
        let v: serde_json::Value = serde_json::from_str(&t).unwrap();
        assert_eq!(
            v["entries"][2]["norm"],
            serde_json::json!({"q": "1/2", "pi": 1})
        );
    }

    #[test]
    fn csv_rows() {
        let t = render_table(TableKind::Legendre, 1, 2, OutputFormat::Csv);
        let lines: Vec<&str> = t.lines().collect();
        assert_eq!(lines[0], "two_m,i,two_l,factor_exponent,coeffs");
        assert_eq!(lines[6], "1,2,5,1/4,1;0;-4");
        let t = render_table(TableKind::Norms, 1, 0, OutputFormat::Csv);
        assert_eq!(t, "two_m,i,two_l,q,pi\n0,0,0,2,0\n1,0,1,1/2,1\n");
    }

    #[test]
    fn latex_pieces() {
        let int = |v: i64| Rational::from_integer(v.into());
        assert_eq!(
            poly_latex(&[int(0), int(15), int(0), int(-80), int(0), int(80)]),
            "15x{\\rm -}80x^3{\\rm +}80x^5"
        );
        assert_eq!(poly_latex(&[int(0), int(1)]), "x");
        assert_eq!(
            factor_latex(HalfInt::from_twice(1)),
            "(1{\\rm -}x^2)^{\\frac{1}{4}}"
        );
        assert_eq!(factor_latex(HalfInt::from_twice(4)), "(1{\\rm -}x^2)");
        assert_eq!(factor_latex(HalfInt::from_twice(8)), "(1{\\rm -}x^2)^{2}");
        assert_eq!(
            factor_latex(HalfInt::from_twice(6)),
            "(1{\\rm -}x^2)^{\\frac{3}{2}}"
        );
        assert_eq!(factor_text(HalfInt::from_twice(0)), "1");
    }

    #[test]
    fn sample_grid_shape() {
        let g = sample_grid(
            QuantumPair::from_twice(2, 2).unwrap(),
            3,
            4,
            false,
            PhiRange::TwoPi,
        )
        .unwrap();
        let rows: Vec<&str> = g.lines().skip(1).collect();
        assert_eq!(rows.len(), 12);
        assert!(sample_grid(
            QuantumPair::from_twice(2, 2).unwrap(),
            1,
            4,
            false,
            PhiRange::TwoPi
        )
        .is_err());
    }
}
