//! Generalized Motzkin numbers, weighted Motzkin paths and J-fractions.
//!
//! `M_{n+1,k} = M_{n,k-1} + σ_k M_{n,k} + τ_{k+1} M_{n,k+1}` with
//! `M_{0,0} = 1`. Read as a path count, a horizontal step at height `k`
//! carries `σ_k`, an up step carries 1 and a down step leaving height `k`
//! carries `τ_k`; `M_{n,k}` is then the weighted number of first-quadrant
//! paths from `(0,0)` to `(n,k)`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ortho::ThreeTermCoeffs;
use crate::poly::XPoly;
use crate::rational::{int, rat};
use crate::series::{MomentSeq, TruncatedSeries};

/// Step weights `(σ_k)_{k≥0}` and `(τ_k)_{k≥1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightSpec {
    /// `σ_k = x - p/2`, `τ_k = -k(k+p-1)/4`
    Euler { p: u32 },
    /// `σ_k = x - 1/2`, `τ_k = -k^4/(4(2k+1)(2k-1))`
    Bernoulli,
    /// `σ_k = τ_k = 1`: plain Motzkin numbers.
    Unit,
    /// `σ_k = 0`, `τ_k = -k^2/4`: Dyck paths summing to `E_n / 2^n`.
    DyckEuler,
    /// `σ_k = 0`, `τ_k = -k^2`: Dyck paths summing to the Euler numbers.
    IntegerEuler,
    /// `σ_k = s_k`, `τ_k = t_k` of a three-term recurrence.
    Recurrence(ThreeTermCoeffs),
    /// Explicit table; `tau[0]` is `τ_1`.
    Custom { sigma: Vec<XPoly>, tau: Vec<XPoly> },
}

impl WeightSpec {
    pub fn sigma(&self, k: usize) -> Result<XPoly> {
        match self {
            Self::Euler { p } => Ok(XPoly::linear(-rat(*p as i64, 2))),
            Self::Bernoulli => Ok(XPoly::linear(rat(-1, 2))),
            Self::Unit => Ok(XPoly::one()),
            Self::DyckEuler | Self::IntegerEuler => Ok(XPoly::zero()),
            Self::Recurrence(c) => c.s(k),
            Self::Custom { sigma, .. } => sigma.get(k).cloned().ok_or(Error::DepthExceeded {
                which: 's',
                index: k,
                depth: sigma.len(),
            }),
        }
    }

    pub fn tau(&self, k: usize) -> Result<XPoly> {
        if k == 0 {
            return Ok(XPoly::zero());
        }
        let kk = k as i64;
        match self {
            Self::Euler { p } => Ok(XPoly::constant(rat(-kk * (kk + *p as i64 - 1), 4))),
            Self::Bernoulli => Ok(XPoly::constant(rat(
                -kk.pow(4),
                4 * (2 * kk + 1) * (2 * kk - 1),
            ))),
            Self::Unit => Ok(XPoly::one()),
            Self::DyckEuler => Ok(XPoly::constant(rat(-kk * kk, 4))),
            Self::IntegerEuler => Ok(XPoly::constant(int(-kk * kk))),
            Self::Recurrence(c) => c.t(k),
            Self::Custom { tau, .. } => tau.get(k - 1).cloned().ok_or(Error::DepthExceeded {
                which: 't',
                index: k,
                depth: tau.len(),
            }),
        }
    }
}

/// Triangle `M_{n,k}`, `0 ≤ k ≤ n ≤ depth`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MotzkinTable {
    rows: Vec<Vec<XPoly>>,
}

impl MotzkinTable {
    pub fn depth(&self) -> usize {
        self.rows.len() - 1
    }

    /// `M_{n,k}`, zero outside the triangle.
    pub fn get(&self, n: usize, k: usize) -> XPoly {
        self.rows
            .get(n)
            .and_then(|row| row.get(k))
            .cloned()
            .unwrap_or_else(XPoly::zero)
    }

    pub fn row(&self, n: usize) -> &[XPoly] {
        &self.rows[n]
    }

    pub fn column0(&self) -> MomentSeq<XPoly> {
        MomentSeq::new(self.rows.iter().map(|r| r[0].clone()).collect())
    }
}

pub fn motzkin_table(w: &WeightSpec, depth: usize) -> Result<MotzkinTable> {
    let sigma: Vec<XPoly> = (0..depth).map(|k| w.sigma(k)).collect::<Result<_>>()?;
    let tau: Vec<XPoly> = (0..depth).map(|k| w.tau(k)).collect::<Result<_>>()?;
    let mut rows = vec![vec![XPoly::one()]];
    for n in 0..depth {
        let prev = &rows[n];
        let next: Vec<XPoly> = (0..=n + 1)
            .map(|k| {
                let mut v = XPoly::zero();
                if k >= 1 {
                    v = &v + &prev[k - 1];
                }
                if k <= n {
                    v = &v + &(&sigma[k] * &prev[k]);
                }
                if k < n {
                    v = &v + &(&tau[k + 1] * &prev[k + 1]);
                }
                v
            })
            .collect();
        rows.push(next);
    }
    Ok(MotzkinTable { rows })
}

/// `E_0^(p)(x), ..., E_N^(p)(x)` as column 0 of the Euler-weighted triangle.
pub fn euler_motzkin(p: u32, depth: usize) -> MomentSeq<XPoly> {
    motzkin_table(&WeightSpec::Euler { p }, depth)
        .expect("closed-form weights")
        .column0()
}

/// `B_0(x), ..., B_N(x)` as column 0 of the Bernoulli-weighted triangle.
pub fn bernoulli_motzkin(depth: usize) -> MomentSeq<XPoly> {
    motzkin_table(&WeightSpec::Bernoulli, depth)
        .expect("closed-form weights")
        .column0()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    /// Horizontal.
    H,
    /// Diagonally up.
    U,
    /// Diagonally down.
    D,
}

impl Step {
    fn delta(self) -> i64 {
        match self {
            Step::H => 0,
            Step::U => 1,
            Step::D => -1,
        }
    }

    fn letter(self) -> char {
        match self {
            Step::H => 'H',
            Step::U => 'U',
            Step::D => 'D',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    /// Fails if the path ever drops below height 0.
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let path = LatticePath { steps };
        if path.heights().iter().any(|&h| h < 0) {
            return Err(Error::InvalidParameter(format!(
                "path {path} leaves the first quadrant"
            )));
        }
        Ok(path)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// `h_0 = 0, ..., h_len`.
    pub fn heights(&self) -> Vec<i64> {
        let mut h = vec![0];
        for s in &self.steps {
            h.push(h.last().unwrap() + s.delta());
        }
        h
    }

    pub fn end_height(&self) -> i64 {
        self.steps.iter().map(|s| s.delta()).sum()
    }

    pub fn has_horizontal(&self) -> bool {
        self.steps.contains(&Step::H)
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'H' => Ok(Step::H),
                'U' => Ok(Step::U),
                'D' => Ok(Step::D),
                other => Err(Error::InvalidParameter(format!("unknown step {other:?}"))),
            })
            .collect::<Result<_>>()?;
        LatticePath::new(steps)
    }
}

/// All first-quadrant paths from `(0,0)` to `(n,k)`, lexicographic in
/// `H < U < D`.
pub fn enumerate_paths(n: usize, k: usize) -> Vec<LatticePath> {
    fn go(
        remaining: usize,
        height: usize,
        target: usize,
        prefix: &mut Vec<Step>,
        out: &mut Vec<LatticePath>,
    ) {
        if remaining == 0 {
            if height == target {
                out.push(LatticePath {
                    steps: prefix.clone(),
                });
            }
            return;
        }
        for step in [Step::H, Step::U, Step::D] {
            let next = match step {
                Step::H => height,
                Step::U => height + 1,
                Step::D if height == 0 => continue,
                Step::D => height - 1,
            };
            if next.abs_diff(target) > remaining - 1 {
                continue;
            }
            prefix.push(step);
            go(remaining - 1, next, target, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(n, 0, k, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

/// Product of step weights: `σ_h` for a horizontal step at height `h`,
/// 1 for an up step, `τ_h` for a down step leaving height `h`.
pub fn path_weight(path: &LatticePath, w: &WeightSpec) -> Result<XPoly> {
    let mut weight = XPoly::one();
    let mut h = 0usize;
    for step in path.steps() {
        match step {
            Step::H => weight = &weight * &w.sigma(h)?,
            Step::U => h += 1,
            Step::D => {
                weight = &weight * &w.tau(h)?;
                h -= 1;
            }
        }
    }
    Ok(weight)
}

pub fn weighted_path_sum(n: usize, k: usize, w: &WeightSpec) -> Result<XPoly> {
    enumerate_paths(n, k)
        .iter()
        .try_fold(XPoly::zero(), |acc, p| Ok(&acc + &path_weight(p, w)?))
}

/// Whether the explicit path sum reproduces `M_{n,k}`.
pub fn weighted_sum_check(n: usize, k: usize, w: &WeightSpec) -> Result<bool> {
    let table = motzkin_table(w, n)?;
    Ok(weighted_path_sum(n, k, w)? == table.get(n, k))
}

/// Expands `1/(1 - s_0 z - t_1 z²/(1 - s_1 z - t_2 z²/(...)))` through
/// `z^order`, innermost level first. Levels below `⌊order/2⌋` cannot reach
/// the retained coefficients and are dropped.
pub fn jfraction_series(c: &ThreeTermCoeffs, order: usize) -> Result<MomentSeq<XPoly>> {
    let levels = order / 2;
    let mut inner = TruncatedSeries::constant(order, XPoly::zero());
    for j in (0..=levels).rev() {
        // 1 - s_j z - t_{j+1} z² · inner
        let mut denom = vec![XPoly::one(), -c.s(j)?];
        denom.resize(order + 1, XPoly::zero());
        if j < levels {
            let t = c.t(j + 1)?;
            for i in 2..=order {
                denom[i] = &denom[i] - &(&t * inner.coeff(i - 2));
            }
        }
        inner = TruncatedSeries::new(order, denom).inverse()?;
    }
    Ok(MomentSeq::new(inner.coeffs().to_vec()))
}
