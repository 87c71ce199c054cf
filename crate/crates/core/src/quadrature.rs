//! Floating-point check of the moment interpretation: `E_n(1/2)` is the
//! n-th moment of `iL`, where `L` has density `sech(πt)` on ℝ and `i` is the
//! imaginary unit. This is the only module that uses floating point; nothing
//! exact depends on it.

use crate::error::{Error, Result};
use crate::rational::{rat, to_f64};
use crate::series::euler_polys;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureResult {
    /// Moment of `iL`: `(-1)^{n/2} ∫ t^n sech(πt) dt` for even `n`. For odd
    /// `n` the moment is zero and this holds the raw integral, which only
    /// measures the symmetry residual.
    pub value: f64,
    /// `∫_{-T}^{T} t^n sech(πt) dt` as computed.
    pub integral: f64,
    pub estimated_error: f64,
    /// Bound on the discarded tails `|t| > T`.
    pub tail_bound: f64,
    pub half_width: f64,
}

pub const MAX_ORDER: usize = 20;
pub const MIN_TOL: f64 = 1e-12;
const MAX_INTERVALS: usize = 5000;

// 15-point Kronrod nodes on [0, 1]; odd indices are the 7-point Gauss nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Kronrod estimate and `|K - G|` on `[a, b]`.
fn gk15(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(center - dx) + f(center + dx);
        kronrod += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

/// Globally adaptive Gauss–Kronrod: bisect the worst interval until the
/// summed error estimate drops below `tol`.
pub fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<(f64, f64)> {
    let mut intervals = vec![{
        let (v, e) = gk15(&f, a, b);
        (a, b, v, e)
    }];
    loop {
        let total_err: f64 = intervals.iter().map(|i| i.3).sum();
        if total_err <= tol {
            let value = intervals.iter().map(|i| i.2).sum();
            return Ok((value, total_err));
        }
        if intervals.len() >= MAX_INTERVALS {
            return Err(Error::Quadrature(format!(
                "error estimate {total_err:e} above {tol:e} after {MAX_INTERVALS} intervals"
            )));
        }
        let worst = intervals
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.total_cmp(&y.1 .3))
            .map(|(i, _)| i)
            .expect("nonempty");
        let (lo, hi, _, _) = intervals.swap_remove(worst);
        let mid = 0.5 * (lo + hi);
        for (l, h) in [(lo, mid), (mid, hi)] {
            let (v, e) = gk15(&f, l, h);
            intervals.push((l, h, v, e));
        }
    }
}

/// `2 ∫_T^∞ t^n · 2e^{-πt} dt = 4 n! e^{-πT} Σ_{k≤n} (πT)^k/k! / π^{n+1}`,
/// using `sech(πt) ≤ 2e^{-πt}`.
pub fn tail_bound(n: usize, t: f64) -> f64 {
    let a = std::f64::consts::PI * t;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..=n {
        term *= a / k as f64;
        sum += term;
    }
    let n_fact: f64 = (1..=n).map(|k| k as f64).product();
    4.0 * n_fact * (-a).exp() * sum / std::f64::consts::PI.powi(n as i32 + 1)
}

fn sech_pi(t: f64) -> f64 {
    let a = std::f64::consts::PI * t.abs();
    // 1/cosh(a) = 2e^{-a}/(1 + e^{-2a})
    let e = (-a).exp();
    2.0 * e / (1.0 + e * e)
}

pub fn sech_moment(n: usize, tol: f64) -> Result<QuadratureResult> {
    if n > MAX_ORDER {
        return Err(Error::Quadrature(format!(
            "order {n} above {MAX_ORDER}: double precision cannot meet the tolerance"
        )));
    }
    if tol.is_nan() || tol < MIN_TOL {
        return Err(Error::Quadrature(format!("tolerance {tol:e} below {MIN_TOL:e}")));
    }
    let mut half_width = 1.0;
    while tail_bound(n, half_width) >= tol / 2.0 {
        half_width += 0.5;
    }
    let tail = tail_bound(n, half_width);
    let f = |t: f64| t.powi(n as i32) * sech_pi(t);
    let (integral, estimated_error) = integrate(f, -half_width, half_width, tol / 2.0)?;
    let value = if n % 4 == 2 {
        -integral
    } else {
        integral
    };
    Ok(QuadratureResult {
        value,
        integral,
        estimated_error,
        tail_bound: tail,
        half_width,
    })
}

/// Numeric moments of `Σ_{j=1..p} iL_j` through order `n`, by binomial
/// convolution of the single-variable moments.
pub fn convolved_moments(p: u32, n: usize, tol: f64) -> Result<Vec<f64>> {
    let single: Vec<f64> = (0..=n)
        .map(|k| {
            if k % 2 == 1 {
                Ok(0.0)
            } else {
                sech_moment(k, tol).map(|r| r.value)
            }
        })
        .collect::<Result<_>>()?;
    let mut acc = vec![0.0; n + 1];
    acc[0] = 1.0;
    for _ in 0..p {
        acc = (0..=n)
            .map(|m| {
                let mut binom = 1.0;
                let mut s = 0.0;
                for k in 0..=m {
                    s += binom * acc[k] * single[m - k];
                    binom = binom * (m - k) as f64 / (k + 1) as f64;
                }
                s
            })
            .collect();
    }
    Ok(acc)
}

/// Compares the numeric `n`-th moment of `x + Σ iL_j - p/2` at `x = p/2`
/// with the exact `E_n^(p)(p/2)`, to `tol` relative to `max(1, |exact|)`.
pub fn convolved_moment_check(p: u32, n: usize, tol: f64) -> Result<bool> {
    if !(1..=3).contains(&p) || n > 10 {
        return Err(Error::InvalidParameter(format!(
            "convolved moment check needs 1 ≤ p ≤ 3 and n ≤ 10, got p = {p}, n = {n}"
        )));
    }
    let numeric = convolved_moments(p, n, MIN_TOL.max(tol * 1e-3))?[n];
    let exact = to_f64(&euler_polys(p, n)[n].eval(&rat(p as i64, 2)));
    Ok((numeric - exact).abs() < tol * exact.abs().max(1.0))
}
