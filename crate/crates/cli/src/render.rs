//! Column-aligned text rendering for matrices and reports.

use resdist_core::linalg::{format_rational, to_decimal_string, IntMatrix, RatMatrix, Rational};

/// How rationals are printed: exact `p/q`, or fixed-point decimals marked
/// with a trailing `~` so an approximation is never mistaken for an exact
/// value.
#[derive(Clone, Copy)]
pub enum NumberStyle {
    Exact,
    Decimal(usize),
}

impl NumberStyle {
    pub fn render(&self, r: &Rational) -> String {
        match self {
            NumberStyle::Exact => format_rational(r),
            NumberStyle::Decimal(digits) => format!("{}~", to_decimal_string(r, *digits)),
        }
    }
}

fn aligned(cells: Vec<Vec<String>>) -> String {
    if cells.is_empty() {
        return String::new();
    }
    let cols = cells[0].len();
    let mut widths = vec![0usize; cols];
    for row in &cells {
        for (j, cell) in row.iter().enumerate() {
            widths[j] = widths[j].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in &cells {
        out.push_str("  ");
        for (j, cell) in row.iter().enumerate() {
            if j > 0 {
                out.push_str("  ");
            }
            out.push_str(&" ".repeat(widths[j] - cell.len()));
            out.push_str(cell);
        }
        out.push('\n');
    }
    out
}

pub fn rat_matrix(m: &RatMatrix, style: NumberStyle) -> String {
    aligned(
        m.rows()
            .map(|r| r.iter().map(|e| style.render(e)).collect())
            .collect(),
    )
}

pub fn int_matrix(m: &IntMatrix) -> String {
    aligned(
        m.rows()
            .map(|r| r.iter().map(|e| e.to_string()).collect())
            .collect(),
    )
}
