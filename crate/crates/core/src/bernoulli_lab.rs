//! Recurrence coefficients of the orthogonal polynomials for the
//! higher-order Bernoulli polynomials.
//!
//! With `ϱ_{n+1}^(p) = (y - a_n^(p)) ϱ_n^(p) + b_n^(p) ϱ_{n-1}^(p)` the shift
//! law gives `a_n^(p) = x - p/2`, while `b_n^(p)` is only known numerically.
//! The `b` values are recovered exactly from moments with the Stieltjes
//! procedure at a rational `x` and compared with closed forms for the first
//! five rows.

use std::fmt::Write as _;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::ortho::{stieltjes, ThreeTermCoeffs};
use crate::rational::{int, rat, Rational};
use crate::series::bernoulli_polys;

/// `b_n^(p)` for `1 ≤ n ≤ n_max`, `1 ≤ p ≤ p_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BTable {
    n_max: usize,
    p_max: u32,
    /// `rows[n-1][p-1]`
    rows: Vec<Vec<Rational>>,
}

impl BTable {
    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn p_max(&self) -> u32 {
        self.p_max
    }

    pub fn get(&self, n: usize, p: u32) -> Option<&Rational> {
        self.rows.get(n.checked_sub(1)?)?.get((p as usize).checked_sub(1)?)
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n");
        for p in 1..=self.p_max {
            write!(out, ",p={p}").unwrap();
        }
        out.push('\n');
        for (i, row) in self.rows.iter().enumerate() {
            write!(out, "{}", i + 1).unwrap();
            for v in row {
                write!(out, ",{v}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    /// LaTeX tabular: one row per n, one column per p.
    pub fn to_latex(&self) -> String {
        let mut out = String::new();
        writeln!(out, "\\begin{{tabular}}{{|l|{}|}}", vec!["c"; self.p_max as usize].join("|")).unwrap();
        out.push_str("\\hline \n");
        out.push_str("\\multirow{1}{*}{} ");
        for p in 1..=self.p_max {
            write!(out, "& $p={p}$ ").unwrap();
        }
        out.push_str("\\tabularnewline\n\\hline \n");
        for (i, row) in self.rows.iter().enumerate() {
            write!(out, "$n={}$ ", i + 1).unwrap();
            for v in row {
                write!(out, "& ${}$ ", latex_rational(v)).unwrap();
            }
            out.push_str("\\tabularnewline\n");
        }
        out.push_str("\\hline \n\\end{tabular}\n");
        out
    }
}

pub fn latex_rational(v: &Rational) -> String {
    if v.is_integer() {
        return v.to_string();
    }
    let sign = if v.is_negative() { "-" } else { "" };
    format!("{sign}\\frac{{{}}}{{{}}}", v.numer().abs(), v.denom())
}

/// `b_1^(p), ..., b_{n_max}^(p)` from the moments `B_k^(p)(x0)`.
fn b_column_at(p: u32, n_max: usize, x0: &Rational) -> Result<(Vec<Rational>, Vec<Rational>)> {
    let moments = bernoulli_polys(p, 2 * n_max + 2).eval_at(x0);
    let rt = stieltjes(&moments, n_max + 1)?;
    Ok((rt.s, rt.t.into_iter().map(|t| -t).collect()))
}

/// `b_1^(p), ..., b_{n_max}^(p)`, computed at `x = p/2` and confirmed at `x = 0`.
pub fn b_column(p: u32, n_max: usize) -> Result<Vec<Rational>> {
    let (_, centered) = b_column_at(p, n_max, &rat(p as i64, 2))?;
    let (_, origin) = b_column_at(p, n_max, &int(0))?;
    if let Some(n) = (0..n_max).find(|&i| centered[i] != origin[i]) {
        return Err(Error::XDependence(format!(
            "b_{}^({p}) is {} at x = p/2 but {} at x = 0",
            n + 1,
            centered[n],
            origin[n]
        )));
    }
    Ok(centered)
}

pub fn b_table(n_max: usize, p_max: u32) -> Result<BTable> {
    if n_max == 0 || p_max == 0 {
        return Err(Error::InvalidParameter("n_max and p_max must be positive".into()));
    }
    let columns: Vec<Vec<Rational>> = (1..=p_max).map(|p| b_column(p, n_max)).collect::<Result<_>>()?;
    let rows = (0..n_max)
        .map(|n| columns.iter().map(|col| col[n].clone()).collect())
        .collect();
    Ok(BTable { n_max, p_max, rows })
}

/// Recurrence coefficients for `B_n^(p)(x)` to depth `n_max`.
pub fn higher_bernoulli_ttr(p: u32, n_max: usize) -> Result<ThreeTermCoeffs> {
    Ok(ThreeTermCoeffs::HigherBernoulli {
        p,
        b: b_column(p, n_max)?,
    })
}

/// Which version of a row's closed form to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedForm {
    /// Row 2 over 30, row 3 over `140(5p+3)`.
    Corrected,
    /// Row 2 over 10, row 3 over `140(2p+3)`.
    Printed,
}

fn poly_at(coeffs_high_first: &[i64], p: &Rational) -> Rational {
    coeffs_high_first
        .iter()
        .fold(int(0), |acc, &c| acc * p + int(c))
}

pub fn conjecture_eval_form(row: usize, p: u32, form: ClosedForm) -> Result<Rational> {
    let p = int(p as i64);
    let lin = poly_at(&[5, 3], &p);
    let quad = poly_at(&[175, 315, 158], &p);
    let quart = poly_at(&[6125, 25725, 41965, 29547, 7230], &p);
    Ok(match (row, form) {
        (1, _) => p / int(12),
        (2, ClosedForm::Corrected) => lin / int(30),
        (2, ClosedForm::Printed) => lin / int(10),
        (3, ClosedForm::Corrected) => quad / (int(140) * lin),
        (3, ClosedForm::Printed) => quad / (int(140) * poly_at(&[2, 3], &p)),
        (4, _) => quart / (int(21) * lin * quad),
        (5, _) => {
            let sext = poly_at(
                &[471625, 3678675, 12324235, 22096305, 22009540, 11549748, 2519472],
                &p,
            );
            int(25) * lin * sext / (int(132) * quad * quart)
        }
        (r, _) => return Err(Error::UnknownRow(r)),
    })
}

/// Closed form for row `row` of the `b` table (corrected rows 2 and 3).
pub fn conjecture_eval(row: usize, p: u32) -> Result<Rational> {
    conjecture_eval_form(row, p, ClosedForm::Corrected)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureEntry {
    pub row: usize,
    pub p: u32,
    pub computed: Rational,
    pub closed_form: Rational,
    pub printed: Rational,
}

impl ConjectureEntry {
    pub fn matches(&self) -> bool {
        self.computed == self.closed_form
    }

    pub fn printed_matches(&self) -> bool {
        self.computed == self.printed
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub p_max: u32,
    pub entries: Vec<ConjectureEntry>,
}

impl ConjectureReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &ConjectureEntry> {
        self.entries.iter().filter(|e| !e.matches())
    }

    pub fn printed_mismatches(&self) -> impl Iterator<Item = &ConjectureEntry> {
        self.entries.iter().filter(|e| !e.printed_matches())
    }

    pub fn all_match(&self) -> bool {
        self.mismatches().next().is_none()
    }

    pub fn entry(&self, row: usize, p: u32) -> Option<&ConjectureEntry> {
        self.entries.iter().find(|e| e.row == row && e.p == p)
    }
}

pub fn conjecture_check(p_max: u32) -> Result<ConjectureReport> {
    let table = b_table(5, p_max)?;
    let mut entries = Vec::new();
    for row in 1..=5 {
        for p in 1..=p_max {
            entries.push(ConjectureEntry {
                row,
                p,
                computed: table.get(row, p).expect("in range").clone(),
                closed_form: conjecture_eval_form(row, p, ClosedForm::Corrected)?,
                printed: conjecture_eval_form(row, p, ClosedForm::Printed)?,
            });
        }
    }
    Ok(ConjectureReport { p_max, entries })
}

/// Checks `a_n^(p) = x - p/2` for `n < depth` by running the Stieltjes
/// procedure at two distinct rational points.
pub fn a_check(p: u32, depth: usize) -> Result<bool> {
    let half_p = rat(p as i64, 2);
    for x in [int(0), rat(1, 3)] {
        let (s, _) = b_column_at(p, depth.max(1), &x)?;
        if s.iter().take(depth).any(|sn| sn - &x != -half_p.clone()) {
            return Ok(false);
        }
    }
    Ok(true)
}
