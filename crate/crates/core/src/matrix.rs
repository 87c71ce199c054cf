//! Tridiagonal transfer matrices.
//!
//! The `m × m` matrix with `σ_0, ..., σ_{m-1}` on the diagonal,
//! `τ_1, ..., τ_{m-1}` on the superdiagonal and ones on the subdiagonal.
//! Column 1 of its `n`-th power holds `M_{n,0}, M_{n,1}, ...`, so the top-left
//! entry is the weighted count of paths returning to height 0.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::motzkin::WeightSpec;
use crate::poly::XPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriDiagMatrix {
    diag: Vec<XPoly>,
    sup: Vec<XPoly>,
}

impl TriDiagMatrix {
    pub fn new(diag: Vec<XPoly>, sup: Vec<XPoly>) -> Result<Self> {
        if diag.is_empty() || sup.len() + 1 != diag.len() {
            return Err(Error::InvalidParameter(format!(
                "tridiagonal shape: {} diagonal, {} superdiagonal entries",
                diag.len(),
                sup.len()
            )));
        }
        Ok(TriDiagMatrix { diag, sup })
    }

    pub fn size(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[XPoly] {
        &self.diag
    }

    pub fn sup(&self) -> &[XPoly] {
        &self.sup
    }

    /// Entry `(i, j)`, zero-based.
    pub fn entry(&self, i: usize, j: usize) -> XPoly {
        if i == j {
            self.diag[i].clone()
        } else if j == i + 1 {
            self.sup[i].clone()
        } else if i == j + 1 {
            XPoly::one()
        } else {
            XPoly::zero()
        }
    }

    /// `M · v`.
    pub fn apply(&self, v: &[XPoly]) -> Vec<XPoly> {
        let m = self.size();
        (0..m)
            .map(|i| {
                let mut acc = &self.diag[i] * &v[i];
                if i > 0 {
                    acc = &acc + &v[i - 1];
                }
                if i + 1 < m {
                    acc = &acc + &(&self.sup[i] * &v[i + 1]);
                }
                acc
            })
            .collect()
    }

    /// First column of `M^n`, by repeated multiplication.
    pub fn power_first_column(&self, n: usize) -> Vec<XPoly> {
        let mut v = vec![XPoly::zero(); self.size()];
        v[0] = XPoly::one();
        for _ in 0..n {
            v = self.apply(&v);
        }
        v
    }

    /// `[M^0]_{1,1}, ..., [M^n]_{1,1}` in one pass.
    pub fn top_left_powers(&self, n: usize) -> Result<Vec<XPoly>> {
        if n > self.size() {
            return Err(Error::PowerExceedsSize {
                power: n,
                size: self.size(),
            });
        }
        let mut v = vec![XPoly::zero(); self.size()];
        v[0] = XPoly::one();
        let mut out = vec![XPoly::one()];
        for _ in 0..n {
            v = self.apply(&v);
            out.push(v[0].clone());
        }
        Ok(out)
    }
}

impl fmt::Display for TriDiagMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.size();
        let cells: Vec<Vec<String>> = (0..m)
            .map(|i| (0..m).map(|j| self.entry(i, j).to_string()).collect())
            .collect();
        let width = cells.iter().flatten().map(|c| c.len()).max().unwrap_or(1);
        for row in &cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}

/// The `m × m` transfer matrix of `w`.
pub fn build_transfer(w: &WeightSpec, m: usize) -> Result<TriDiagMatrix> {
    if m == 0 {
        return Err(Error::InvalidParameter("matrix size must be at least 1".into()));
    }
    let diag = (0..m).map(|k| w.sigma(k)).collect::<Result<_>>()?;
    let sup = (1..m).map(|k| w.tau(k)).collect::<Result<_>>()?;
    TriDiagMatrix::new(diag, sup)
}

/// `[M^n]_{1,1}`; requires `n ≤ size`.
pub fn mat_pow_top_left(m: &TriDiagMatrix, n: usize) -> Result<XPoly> {
    Ok(m.top_left_powers(n)?.pop().expect("nonempty"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use crate::series::bernoulli_polys;

    fn c(n: i64, d: i64) -> XPoly {
        XPoly::constant(rat(n, d))
    }

    #[test]
    fn re4_p2() {
        let m = build_transfer(&WeightSpec::Euler { p: 2 }, 4).unwrap();
        let xm1 = XPoly::linear(int(-1));
        assert_eq!(m.diag(), vec![xm1; 4].as_slice());
        assert_eq!(m.sup(), &[c(-1, 2), c(-3, 2), c(-3, 1)]);
        assert_eq!(
            mat_pow_top_left(&m, 3).unwrap(),
            XPoly::from_fracs(&[(1, 2), (3, 2), (-3, 1), (1, 1)])
        );
        assert_eq!(mat_pow_top_left(&m, 0).unwrap(), XPoly::one());
        assert_eq!(
            mat_pow_top_left(&m, 5),
            Err(Error::PowerExceedsSize { power: 5, size: 4 })
        );
    }

    #[test]
    fn small_transfers() {
        let m = build_transfer(&WeightSpec::Euler { p: 1 }, 2).unwrap();
        assert_eq!(m.sup(), &[c(-1, 4)]);
        let rb = build_transfer(&WeightSpec::Bernoulli, 3).unwrap();
        assert_eq!(rb.sup(), &[c(-1, 12), c(-4, 15)]);
        let rb6 = build_transfer(&WeightSpec::Bernoulli, 6).unwrap();
        assert_eq!(mat_pow_top_left(&rb6, 4).unwrap(), bernoulli_polys(1, 4)[4]);
        assert!(build_transfer(&WeightSpec::Unit, 0).is_err());
    }

    #[test]
    fn printed_rb_superdiagonal_fails() {
        // superdiagonal -(n+1)^2/(4(2n+1)(2n+3)) instead of the n^4 law
        let m = 6;
        let diag = vec![XPoly::linear(rat(-1, 2)); m];
        let sup = (0..m as i64 - 1)
            .map(|n| c(-(n + 1) * (n + 1), 4 * (2 * n + 1) * (2 * n + 3)))
            .collect();
        let printed = TriDiagMatrix::new(diag, sup).unwrap();
        let b = bernoulli_polys(1, 4);
        assert_eq!(mat_pow_top_left(&printed, 2).unwrap(), b[2]);
        assert_ne!(mat_pow_top_left(&printed, 4).unwrap(), b[4]);
    }
}
