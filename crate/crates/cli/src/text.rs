//! Aligned plain-text rendering for `--human` output.

use num_bigint::BigInt;
use num_rational::BigRational;

use selfaffine::rational::rat_to_string;
use selfaffine::{IntMatrix, RatMatrix};

/// Right-aligned columns, one row per line, each line prefixed by `indent`.
pub fn grid(rows: &[Vec<String>], indent: &str) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|j| rows.iter().filter_map(|r| r.get(j)).map(String::len).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in rows {
        out.push_str(indent);
        out.push('[');
        let cells: Vec<String> = r.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        out.push_str(&cells.join("  "));
        out.push_str("]\n");
    }
    out
}

pub fn int_grid(m: &IntMatrix, indent: &str) -> String {
    let rows: Vec<Vec<String>> = m.to_rows().iter().map(|r| r.iter().map(BigInt::to_string).collect()).collect();
    grid(&rows, indent)
}

pub fn rat_grid(m: &RatMatrix, indent: &str) -> String {
    let rows: Vec<Vec<String>> = m.to_rows().iter().map(|r| r.iter().map(rat_to_string).collect()).collect();
    grid(&rows, indent)
}

pub fn int_tuple(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(BigInt::to_string).collect();
    format!("({})", parts.join(", "))
}

/// A frequency: bare in dimension one, a tuple otherwise.
pub fn frequency(v: &[BigRational]) -> String {
    let parts: Vec<String> = v.iter().map(rat_to_string).collect();
    if parts.len() == 1 {
        parts.into_iter().next().unwrap_or_default()
    } else {
        format!("({})", parts.join(", "))
    }
}

/// `label` padded to a fixed column, then `value`.
pub fn line(label: &str, value: impl std::fmt::Display) -> String {
    format!("{label:<20}{value}\n")
}

/// `x` with 12 significant digits; fixed notation for moderate magnitudes.
pub fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".into() } else { x.to_string() };
    }
    let e = x.abs().log10().floor() as i32;
    if (-5..12).contains(&e) {
        let decimals = (11 - e).max(0) as usize;
        let s = format!("{x:.decimals$}");
        let s = if s.contains('.') { s.trim_end_matches('0').trim_end_matches('.').to_string() } else { s };
        if s == "-0" {
            "0".into()
        } else {
            s
        }
    } else {
        format!("{x:.11e}")
    }
}
