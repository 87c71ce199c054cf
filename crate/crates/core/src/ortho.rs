//! Monic orthogonal polynomials in `y` with respect to a moment sequence.
//!
//! Every family is normalized to
//! `P_{n+1}(y) = (y - s_n) P_n(y) - t_n P_{n-1}(y)`. Families whose classical
//! recurrence is written with `+ c_n P_{n-1}` therefore store `t_n = -c_n`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Poly, Ring, XPoly, YPoly};
use crate::rational::{checked_div, int, rat, Rational};
use crate::series::MomentSeq;

/// Recurrence coefficients `(s_n)_{n≥0}`, `(t_n)_{n≥1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ThreeTermCoeffs {
    /// `Ω_n^(p)`: `s_n = x - p/2`, `t_n = -n(n+p-1)/4`.
    Euler { p: u32 },
    /// `ϱ_n` for `B_n(x)`: `s_n = x - 1/2`, `t_n = -n^4/(4(2n+1)(2n-1))`.
    Bernoulli,
    /// `Q_n` for the Euler numbers: `s_n = 0`, `t_n = -n^2`.
    Carlitz,
    /// `ϱ_n^(p)` for `B_n^(p)(x)`: `s_n = x - p/2` and `t_n = -b[n-1]`,
    /// with `b` a finite table of computed `b_n^(p)` values.
    HigherBernoulli { p: u32, b: Vec<Rational> },
    /// Explicit finite table; `t[0]` is `t_1`.
    Table { s: Vec<XPoly>, t: Vec<XPoly> },
    /// `s_n = scale·s̃_n + shift`, `t_n = scale²·t̃_n` over `base`.
    Affine {
        base: Box<ThreeTermCoeffs>,
        scale: Rational,
        shift: XPoly,
    },
    /// `base` with `x` specialized to a rational value.
    AtX { base: Box<ThreeTermCoeffs>, x: Rational },
}

fn x_minus(c: Rational) -> XPoly {
    XPoly::linear(-c)
}

impl ThreeTermCoeffs {
    pub fn s(&self, n: usize) -> Result<XPoly> {
        match self {
            Self::Euler { p } | Self::HigherBernoulli { p, .. } => Ok(x_minus(rat(*p as i64, 2))),
            Self::Bernoulli => Ok(x_minus(rat(1, 2))),
            Self::Carlitz => Ok(XPoly::zero()),
            Self::Table { s, .. } => s.get(n).cloned().ok_or(Error::DepthExceeded {
                which: 's',
                index: n,
                depth: s.len(),
            }),
            Self::Affine { base, scale, shift } => Ok(&base.s(n)?.scale(scale) + shift),
            Self::AtX { base, x } => Ok(XPoly::constant(base.s(n)?.eval(x))),
        }
    }

    /// `t_n` for `n ≥ 1`; `t_0` is zero by convention.
    pub fn t(&self, n: usize) -> Result<XPoly> {
        if n == 0 {
            return Ok(XPoly::zero());
        }
        let k = n as i64;
        match self {
            Self::Euler { p } => Ok(XPoly::constant(rat(-k * (k + *p as i64 - 1), 4))),
            Self::Bernoulli => Ok(XPoly::constant(rat(-k.pow(4), 4 * (2 * k + 1) * (2 * k - 1)))),
            Self::Carlitz => Ok(XPoly::constant(int(-k * k))),
            Self::HigherBernoulli { b, .. } => {
                b.get(n - 1)
                    .map(|v| XPoly::constant(-v))
                    .ok_or(Error::DepthExceeded {
                        which: 't',
                        index: n,
                        depth: b.len(),
                    })
            }
            Self::Table { t, .. } => t.get(n - 1).cloned().ok_or(Error::DepthExceeded {
                which: 't',
                index: n,
                depth: t.len(),
            }),
            Self::Affine { base, scale, .. } => Ok(base.t(n)?.scale(&(scale * scale))),
            Self::AtX { base, x } => Ok(XPoly::constant(base.t(n)?.eval(x))),
        }
    }

    /// Specializes `x` to `value`.
    pub fn at_x(&self, value: Rational) -> Self {
        Self::AtX {
            base: Box::new(self.clone()),
            x: value,
        }
    }

    /// Materializes `s_0..s_{n-1}` and `t_1..t_{n-1}` as a table.
    pub fn to_table(&self, n: usize) -> Result<Self> {
        Ok(Self::Table {
            s: (0..n).map(|k| self.s(k)).collect::<Result<_>>()?,
            t: (1..n).map(|k| self.t(k)).collect::<Result<_>>()?,
        })
    }
}

pub fn euler_ttr(p: u32) -> ThreeTermCoeffs {
    ThreeTermCoeffs::Euler { p }
}

pub fn bernoulli_ttr() -> ThreeTermCoeffs {
    ThreeTermCoeffs::Bernoulli
}

pub fn carlitz_ttr() -> ThreeTermCoeffs {
    ThreeTermCoeffs::Carlitz
}

/// Coefficients of `Q_n^(p)`, the orthogonal polynomials of `Ē_n^(p)`:
/// the Euler family at `x = p/2`, scaled by 2. Gives `s_n = 0`,
/// `t_n = -n(n+p-1)`.
pub fn euler_bar_ttr(p: u32) -> ThreeTermCoeffs {
    scale_coeffs(&euler_ttr(p).at_x(rat(p as i64, 2)), &int(2)).expect("nonzero scale")
}

/// Coefficients of the shifted variable `X + c`: `s_n + c`, `t_n` unchanged.
pub fn shift_coeffs(c: &ThreeTermCoeffs, shift: &XPoly) -> ThreeTermCoeffs {
    match c {
        ThreeTermCoeffs::Affine {
            base,
            scale,
            shift: old,
        } => affine(base, scale.clone(), old + shift),
        _ => affine(c, Rational::one(), shift.clone()),
    }
}

/// Coefficients of the scaled variable `C·X`: `C·s_n`, `C²·t_n`.
pub fn scale_coeffs(c: &ThreeTermCoeffs, factor: &Rational) -> Result<ThreeTermCoeffs> {
    if factor.is_zero() {
        return Err(Error::ZeroScale);
    }
    Ok(match c {
        ThreeTermCoeffs::Affine { base, scale, shift } => {
            affine(base, scale * factor, shift.scale(factor))
        }
        _ => affine(c, factor.clone(), XPoly::zero()),
    })
}

fn affine(base: &ThreeTermCoeffs, scale: Rational, shift: XPoly) -> ThreeTermCoeffs {
    if scale.is_one() && shift.is_zero() {
        return base.clone();
    }
    ThreeTermCoeffs::Affine {
        base: Box::new(base.clone()),
        scale,
        shift,
    }
}

/// `P_0, ..., P_N`, each monic of exact degree `n` in `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonicOps {
    polys: Vec<YPoly>,
}

impl MonicOps {
    pub fn polys(&self) -> &[YPoly] {
        &self.polys
    }

    pub fn get(&self, n: usize) -> Option<&YPoly> {
        self.polys.get(n)
    }

    pub fn last(&self) -> &YPoly {
        self.polys.last().expect("P_0 always present")
    }

    pub fn into_polys(self) -> Vec<YPoly> {
        self.polys
    }
}

impl std::ops::Index<usize> for MonicOps {
    type Output = YPoly;
    fn index(&self, n: usize) -> &YPoly {
        &self.polys[n]
    }
}

pub fn build_monic_ops(c: &ThreeTermCoeffs, max_n: usize) -> Result<MonicOps> {
    let mut polys = vec![YPoly::one()];
    for n in 0..max_n {
        let factor = YPoly::linear(-c.s(n)?);
        let mut next = &factor * &polys[n];
        if n >= 1 {
            next = &next - &polys[n - 1].scale(&c.t(n)?);
        }
        polys.push(next);
    }
    Ok(MonicOps { polys })
}

/// `Ω_n^(p)(y)` from its terminating hypergeometric closed form at `φ = π/2`:
///
/// `((-1)^n (p)_n / 2^n) Σ_k (-n)_k / ((p)_k k!) · 2^k · (y - x + p)_k`.
pub fn mp_explicit_omega(n: usize, p: u32) -> YPoly {
    let p_rat = int(p as i64);
    // y + (p - x)
    let arg = YPoly::linear(XPoly::new(vec![p_rat.clone(), int(-1)]));
    let mut sum = YPoly::zero();
    // coefficient (-n)_k 2^k / ((p)_k k!), updated term by term
    let mut coeff = Rational::one();
    let mut arg_rising = YPoly::one();
    for k in 0..=n {
        sum = &sum + &arg_rising.scale(&XPoly::constant(coeff.clone()));
        if k == n {
            break;
        }
        let kk = int(k as i64);
        coeff = coeff * (kk.clone() - int(n as i64)) * int(2)
            / ((p_rat.clone() + kk.clone()) * (kk.clone() + int(1)));
        arg_rising = &arg_rising * &(&arg + &YPoly::constant(XPoly::constant(kk)));
    }
    let p_rising = (0..n).fold(Rational::one(), |acc, j| acc * (p_rat.clone() + int(j as i64)));
    let sign = if n.is_multiple_of(2) { int(1) } else { int(-1) };
    let prefactor = sign * p_rising / Rational::from_integer(num_bigint::BigInt::from(1) << n);
    sum.scale(&XPoly::constant(prefactor))
}

/// Umbral substitution `y^k ↦ m_k`.
pub fn umbral_eval<R: Ring>(q: &Poly<R>, m: &MomentSeq<R>) -> Result<R> {
    let Some(deg) = q.degree() else {
        return Ok(R::zero());
    };
    if m.len() <= deg {
        return Err(Error::InsufficientMoments {
            needed: deg + 1,
            available: m.len(),
        });
    }
    Ok(q
        .coeffs()
        .iter()
        .zip(m.values())
        .fold(R::zero(), |acc, (c, mk)| acc.add_ref(&c.mul_ref(mk))))
}

/// `umbral_eval(y^r · P_n, m)` for all `0 ≤ r < n ≤ N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidualTable {
    pub max_n: usize,
    entries: Vec<(usize, usize, XPoly)>,
}

impl ResidualTable {
    pub fn entries(&self) -> &[(usize, usize, XPoly)] {
        &self.entries
    }

    pub fn get(&self, r: usize, n: usize) -> Option<&XPoly> {
        self.entries
            .iter()
            .find(|(rr, nn, _)| *rr == r && *nn == n)
            .map(|(_, _, v)| v)
    }

    pub fn all_zero(&self) -> bool {
        self.entries.iter().all(|(_, _, v)| v.is_zero())
    }

    pub fn nonzero(&self) -> impl Iterator<Item = &(usize, usize, XPoly)> {
        self.entries.iter().filter(|(_, _, v)| !v.is_zero())
    }
}

pub fn orthogonality_residuals(
    c: &ThreeTermCoeffs,
    m: &MomentSeq<XPoly>,
    max_n: usize,
) -> Result<ResidualTable> {
    if max_n > 0 && m.len() < 2 * max_n {
        return Err(Error::InsufficientMoments {
            needed: 2 * max_n,
            available: m.len(),
        });
    }
    let ops = build_monic_ops(c, max_n)?;
    let mut entries = Vec::new();
    for n in 1..=max_n {
        for r in 0..n {
            let value = umbral_eval(&ops[n].shift_up(r), m)?;
            entries.push((r, n, value));
        }
    }
    Ok(ResidualTable { max_n, entries })
}

/// Certifies `Σ_k C(n,k) Q_k^(p1)(y1) Q_{n-k}^(p2)(y2) = Q_n^(p1+p2)(y1+y2)`
/// on the grid `y1, y2 ∈ {0, ..., n}`. Both sides have degree at most `n`
/// in each variable, so agreement on the grid is equality.
pub fn convolution_check(p1: u32, p2: u32, n: usize) -> bool {
    let q = |p: u32| build_monic_ops(&euler_bar_ttr(p), n).expect("closed-form family");
    let (q1, q2, q12) = (q(p1), q(p2), q(p1 + p2));
    let at = |poly: &YPoly, y: i64| -> Rational {
        poly.eval(&XPoly::constant(int(y)))
            .as_constant()
            .expect("rational polynomial")
    };
    let grid = 0..=n as i64;
    let v1: Vec<Vec<Rational>> = grid.clone().map(|y| q1.polys().iter().map(|p| at(p, y)).collect()).collect();
    let v2: Vec<Vec<Rational>> = grid.clone().map(|y| q2.polys().iter().map(|p| at(p, y)).collect()).collect();
    for y1 in grid.clone() {
        for y2 in grid.clone() {
            let lhs = (0..=n).fold(Rational::zero(), |acc, k| {
                acc + crate::rational::binomial(n, k)
                    * &v1[y1 as usize][k]
                    * &v2[y2 as usize][n - k]
            });
            if lhs != at(&q12[n], y1 + y2) {
                return false;
            }
        }
    }
    true
}

/// Rational recurrence coefficients recovered from moments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceTable {
    /// `s_0 .. s_{N-1}`
    pub s: Vec<Rational>,
    /// `t_1 .. t_{N-1}`
    pub t: Vec<Rational>,
}

impl RecurrenceTable {
    pub fn into_coeffs(self) -> ThreeTermCoeffs {
        ThreeTermCoeffs::Table {
            s: self.s.into_iter().map(XPoly::constant).collect(),
            t: self.t.into_iter().map(XPoly::constant).collect(),
        }
    }
}

/// Stieltjes procedure: orthogonalize under the umbral pairing
/// `⟨f⟩ = f|_{y^k = m_k}`, reading off `s_n = ⟨y P_n²⟩/⟨P_n²⟩` and
/// `t_n = ⟨P_n²⟩/⟨P_{n-1}²⟩`. Needs `m_0 .. m_{2N-1}`.
pub fn stieltjes(m: &MomentSeq<Rational>, depth: usize) -> Result<RecurrenceTable> {
    if m.len() < 2 * depth {
        return Err(Error::InsufficientMoments {
            needed: 2 * depth,
            available: m.len(),
        });
    }
    let pair = |a: &XPoly, b: &XPoly| umbral_eval(&(a * b), m);
    let mut s = Vec::with_capacity(depth);
    let mut t = Vec::with_capacity(depth.saturating_sub(1));
    let mut prev = XPoly::zero();
    let mut cur = XPoly::one();
    let mut prev_norm = Rational::zero();
    for n in 0..depth {
        let norm = pair(&cur, &cur)?;
        if norm.is_zero() {
            return Err(Error::DegenerateHankel { depth: n });
        }
        let sn = checked_div(&pair(&cur.shift_up(1), &cur)?, &norm)?;
        let tn = if n == 0 {
            Rational::zero()
        } else {
            let tn = checked_div(&norm, &prev_norm)?;
            t.push(tn.clone());
            tn
        };
        let next = &(&cur.shift_up(1) - &cur.scale(&sn)) - &prev.scale(&tn);
        s.push(sn);
        prev = std::mem::replace(&mut cur, next);
        prev_norm = norm;
    }
    Ok(RecurrenceTable { s, t })
}

pub fn stieltjes_from_moments(m: &MomentSeq<Rational>, depth: usize) -> Result<ThreeTermCoeffs> {
    stieltjes(m, depth).map(RecurrenceTable::into_coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{bernoulli_polys, euler_bar, euler_polys};

    fn xp(c: &[(i64, i64)]) -> XPoly {
        XPoly::from_fracs(c)
    }

    fn omega22() -> YPoly {
        // y^2 - 2(x-1)y + (x-1)^2 + 1/2
        YPoly::new(vec![xp(&[(3, 2), (-2, 1), (1, 1)]), xp(&[(2, 1), (-2, 1)]), XPoly::one()])
    }

    #[test]
    fn family_coefficients() {
        assert_eq!(euler_ttr(2).s(0).unwrap(), xp(&[(-1, 1), (1, 1)]));
        assert_eq!(euler_ttr(1).t(1).unwrap(), XPoly::constant(rat(-1, 4)));
        assert_eq!(euler_ttr(3).t(2).unwrap(), XPoly::constant(int(-2)));
        assert_eq!(carlitz_ttr().s(5).unwrap(), XPoly::zero());
        assert_eq!(carlitz_ttr().t(3).unwrap(), XPoly::constant(int(-9)));
        let b = bernoulli_ttr();
        assert_eq!(b.t(1).unwrap(), XPoly::constant(rat(-1, 12)));
        assert_eq!(b.t(2).unwrap(), XPoly::constant(rat(-4, 15)));
        assert_eq!(b.t(3).unwrap(), XPoly::constant(rat(-81, 140)));
    }

    #[test]
    fn small_ops() {
        assert_eq!(build_monic_ops(&euler_ttr(3), 0).unwrap()[0], YPoly::one());
        assert_eq!(build_monic_ops(&euler_ttr(2), 2).unwrap()[2], omega22());
        let q = build_monic_ops(&carlitz_ttr(), 2).unwrap();
        assert_eq!(q[1], YPoly::var());
        assert_eq!(q[2], YPoly::new(vec![XPoly::one(), XPoly::zero(), XPoly::one()]));
    }

    #[test]
    fn explicit_omega() {
        assert_eq!(mp_explicit_omega(0, 4), YPoly::one());
        assert_eq!(
            mp_explicit_omega(1, 2),
            YPoly::linear(xp(&[(1, 1), (-1, 1)]))
        );
        assert_eq!(mp_explicit_omega(2, 2), omega22());
        for p in 1..=3 {
            let ops = build_monic_ops(&euler_ttr(p), 6).unwrap();
            for n in 0..=6 {
                assert_eq!(mp_explicit_omega(n, p), ops[n], "n={n} p={p}");
            }
        }
    }

    #[test]
    fn umbral_examples() {
        let m = euler_polys(2, 4);
        assert_eq!(umbral_eval(&YPoly::one(), &m).unwrap(), XPoly::one());
        assert_eq!(umbral_eval(&omega22(), &m).unwrap(), XPoly::zero());
        assert_eq!(umbral_eval(&omega22().shift_up(1), &m).unwrap(), XPoly::zero());
        let short = euler_polys(2, 1);
        assert_eq!(
            umbral_eval(&omega22(), &short),
            Err(Error::InsufficientMoments { needed: 3, available: 2 })
        );
    }

    #[test]
    fn residual_suites() {
        let r = orthogonality_residuals(&euler_ttr(2), &euler_polys(2, 12), 6).unwrap();
        assert!(r.all_zero());
        assert_eq!(r.entries().len(), 21);
        let r = orthogonality_residuals(&bernoulli_ttr(), &bernoulli_polys(1, 12), 6).unwrap();
        assert!(r.all_zero());
        let r = orthogonality_residuals(&carlitz_ttr(), &euler_bar(1, 16).as_constants(), 8).unwrap();
        assert!(r.all_zero());
        // mismatched pair must show residuals
        let r = orthogonality_residuals(&euler_ttr(1), &euler_polys(2, 8), 4).unwrap();
        assert!(!r.all_zero());
        assert!(orthogonality_residuals(&euler_ttr(1), &euler_polys(1, 5), 4).is_err());
    }

    #[test]
    fn shift_and_scale() {
        let c = carlitz_ttr();
        assert_eq!(shift_coeffs(&c, &XPoly::zero()), c);
        assert_eq!(scale_coeffs(&c, &int(1)).unwrap(), c);
        assert_eq!(scale_coeffs(&c, &int(0)), Err(Error::ZeroScale));
        let shifted = shift_coeffs(&c, &xp(&[(-1, 2), (1, 1)]));
        assert_eq!(shifted.s(3).unwrap(), xp(&[(-1, 2), (1, 1)]));
        assert_eq!(shifted.t(3).unwrap(), c.t(3).unwrap());

        let scaled = scale_coeffs(&euler_ttr(1).at_x(rat(1, 2)), &int(2)).unwrap();
        for n in 0..8 {
            assert_eq!(scaled.s(n).unwrap(), carlitz_ttr().s(n).unwrap());
            assert_eq!(scaled.t(n).unwrap(), carlitz_ttr().t(n).unwrap());
        }
    }

    #[test]
    fn carlitz_is_rescaled_euler_omega() {
        // Q_n(y) = 2^n Ω_n^(1)(y/2) at x = 1/2
        let q = build_monic_ops(&carlitz_ttr(), 8).unwrap();
        let omega = build_monic_ops(&euler_ttr(1), 8).unwrap();
        let half_y = YPoly::monomial(XPoly::constant(rat(1, 2)), 1);
        for n in 0..=8 {
            let at_half = omega[n].map(|c| XPoly::constant(c.eval(&rat(1, 2))));
            let rescaled = at_half
                .compose(&half_y)
                .scale(&XPoly::constant(int(2).pow(n as i32)));
            assert_eq!(rescaled, q[n], "n={n}");
        }
    }

    #[test]
    fn convolution_identity() {
        assert!(convolution_check(1, 1, 0));
        assert!(convolution_check(1, 1, 2));
        for n in 0..=6 {
            assert!(convolution_check(1, 2, n));
        }
    }

    #[test]
    fn stieltjes_examples() {
        let rt = stieltjes(&euler_bar(1, 8), 4).unwrap();
        assert_eq!(rt.s, vec![int(0); 4]);
        assert_eq!(rt.t, vec![int(-1), int(-4), int(-9)]);

        let b = bernoulli_polys(1, 8).eval_at(&rat(1, 2));
        let rt = stieltjes(&b, 4).unwrap();
        assert_eq!(rt.s, vec![int(0); 4]);
        assert_eq!(rt.t, vec![rat(-1, 12), rat(-4, 15), rat(-81, 140)]);

        let gauss = MomentSeq::new([1, 0, 1, 0, 3, 0, 15, 0, 105].iter().map(|&v| int(v)).collect());
        let rt = stieltjes(&gauss, 4).unwrap();
        assert_eq!(rt.s, vec![int(0); 4]);
        assert_eq!(rt.t, vec![int(1), int(2), int(3)]);
    }

    #[test]
    fn stieltjes_failures() {
        // point mass at 0: ⟨P_1²⟩ = 0
        let delta = MomentSeq::new(vec![int(1), int(0), int(0), int(0)]);
        assert_eq!(stieltjes(&delta, 2), Err(Error::DegenerateHankel { depth: 1 }));
        assert!(matches!(
            stieltjes(&euler_bar(1, 4), 4),
            Err(Error::InsufficientMoments { .. })
        ));
    }

    #[test]
    fn table_depth_is_enforced() {
        let table = euler_ttr(1).to_table(3).unwrap();
        assert!(build_monic_ops(&table, 3).is_ok());
        assert!(matches!(build_monic_ops(&table, 4), Err(Error::DepthExceeded { .. })));
    }
}
