//! Truncated exponential generating functions and the moment sequences
//! they produce.
//!
//! The higher-order Euler polynomials are read off
//! `(2/(e^z+1))^p e^{xz}`, the higher-order Bernoulli polynomials off
//! `(z/(e^z-1))^p e^{xz}` and the numbers `Ē_n^(p)` off `sech^p(z)`.
//! This is the reference pipeline every other construction is checked against.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Ring, XPoly};
use crate::rational::{checked_div, factorial, int, Rational};

/// Power series in `z` with [`XPoly`] coefficients, truncated after `z^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<XPoly>,
}

impl TruncatedSeries {
    /// Builds the series whose `z^i` coefficient is `f(i)` for `i <= order`.
    pub fn from_fn(order: usize, f: impl Fn(usize) -> XPoly) -> Self {
        TruncatedSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    /// Pads with zeros or truncates `coeffs` to exactly `order + 1` entries.
    pub fn new(order: usize, mut coeffs: Vec<XPoly>) -> Self {
        coeffs.resize(order + 1, XPoly::zero());
        TruncatedSeries { coeffs }
    }

    pub fn constant(order: usize, c: XPoly) -> Self {
        Self::new(order, vec![c])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[XPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &XPoly {
        &self.coeffs[i]
    }

    /// `e^{cz}` for a rational or polynomial rate `c`: coefficients `c^n/n!`.
    pub fn exp_of(order: usize, rate: &XPoly) -> Self {
        let mut power = XPoly::one();
        let mut coeffs = Vec::with_capacity(order + 1);
        for n in 0..=order {
            coeffs.push(power.scale(&(Rational::one() / factorial(n))));
            power = &power * rate;
        }
        TruncatedSeries { coeffs }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        let order = self.order();
        Ok(Self::from_fn(order, |n| {
            (0..=n).fold(XPoly::zero(), |acc, k| {
                &acc + &(&self.coeffs[k] * &other.coeffs[n - k])
            })
        }))
    }

    /// Multiplicative inverse via `b_n = -(1/a_0) Σ_{k=1..n} a_k b_{n-k}`.
    pub fn inverse(&self) -> Result<Self> {
        let a0 = self.coeffs[0].as_constant().ok_or(Error::NotInvertible)?;
        if a0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv_a0 = checked_div(&Rational::one(), &a0)?;
        let mut out: Vec<XPoly> = vec![XPoly::constant(inv_a0.clone())];
        for n in 1..=self.order() {
            let sum = (1..=n).fold(XPoly::zero(), |acc, k| {
                &acc + &(&self.coeffs[k] * &out[n - k])
            });
            out.push(sum.scale(&-inv_a0.clone()));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    pub fn pow(&self, p: u32) -> Result<Self> {
        let mut acc = Self::constant(self.order(), XPoly::one());
        for _ in 0..p {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Reads the series as an EGF: `n! [z^n]` for every `n`.
    pub fn egf_coefficients(&self) -> MomentSeq<XPoly> {
        MomentSeq::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c.scale(&factorial(n)))
                .collect(),
        )
    }
}

/// A sequence of moments `m_0, m_1, ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentSeq<T> {
    values: Vec<T>,
}

impl<T> MomentSeq<T> {
    pub fn new(values: Vec<T>) -> Self {
        MomentSeq { values }
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, n: usize) -> Option<&T> {
        self.values.get(n)
    }
}

impl<T> std::ops::Index<usize> for MomentSeq<T> {
    type Output = T;
    fn index(&self, n: usize) -> &T {
        &self.values[n]
    }
}

impl MomentSeq<XPoly> {
    /// Specializes every moment at `x = v`.
    pub fn eval_at(&self, v: &Rational) -> MomentSeq<Rational> {
        MomentSeq::new(self.values.iter().map(|m| m.eval(v)).collect())
    }
}

impl MomentSeq<Rational> {
    /// Lifts rational moments to constant polynomials in `x`.
    pub fn as_constants(&self) -> MomentSeq<XPoly> {
        MomentSeq::new(self.values.iter().cloned().map(XPoly::constant).collect())
    }
}

impl<R: Ring> MomentSeq<R> {
    /// Moments of `C·X`: `m_n ↦ C^n m_n`.
    pub fn scaled(&self, c: &R) -> Self {
        let mut power = R::one();
        let mut out = Vec::with_capacity(self.len());
        for m in &self.values {
            out.push(m.mul_ref(&power));
            power = power.mul_ref(c);
        }
        MomentSeq::new(out)
    }

    /// Moments of `X + c`.
    pub fn shifted(&self, c: &R) -> Self {
        let powers = MomentSeq::new(
            std::iter::successors(Some(R::one()), |p| Some(p.mul_ref(c)))
                .take(self.len())
                .collect(),
        );
        binomial_convolve(self, &powers).expect("equal lengths")
    }
}

/// Pascal's triangle rows `0..=n` with entries in `R`.
fn pascal<R: Ring>(n: usize) -> Vec<Vec<R>> {
    let mut rows: Vec<Vec<R>> = vec![vec![R::one()]];
    for i in 1..=n {
        let prev = &rows[i - 1];
        let row = (0..=i)
            .map(|k| match k {
                0 => R::one(),
                _ if k == i => R::one(),
                _ => prev[k - 1].add_ref(&prev[k]),
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// Moments of a sum of independent variables:
/// `Σ_k C(n,k) m1_k m2_{n-k}`.
pub fn binomial_convolve<R: Ring>(m1: &MomentSeq<R>, m2: &MomentSeq<R>) -> Result<MomentSeq<R>> {
    if m1.len() != m2.len() {
        return Err(Error::LengthMismatch {
            left: m1.len(),
            right: m2.len(),
        });
    }
    if m1.is_empty() {
        return Ok(MomentSeq::new(Vec::new()));
    }
    let binom = pascal::<R>(m1.len() - 1);
    Ok(MomentSeq::new(
        (0..m1.len())
            .map(|n| {
                (0..=n).fold(R::zero(), |acc, k| {
                    acc.add_ref(&binom[n][k].mul_ref(&m1[k].mul_ref(&m2[n - k])))
                })
            })
            .collect(),
    ))
}

fn rational_series(order: usize, f: impl Fn(usize) -> Rational) -> TruncatedSeries {
    TruncatedSeries::from_fn(order, |n| XPoly::constant(f(n)))
}

/// `E_0^(p)(x), ..., E_order^(p)(x)`.
pub fn euler_polys(p: u32, order: usize) -> MomentSeq<XPoly> {
    // (e^z + 1)/2 = 1 + Σ_{n≥1} z^n / (2 n!)
    let half_sum = rational_series(order, |n| match n {
        0 => int(1),
        _ => Rational::one() / (factorial(n) * int(2)),
    });
    let kernel = half_sum.inverse().expect("unit constant term");
    with_exp_x(&kernel, p)
}

/// `B_0^(p)(x), ..., B_order^(p)(x)`.
pub fn bernoulli_polys(p: u32, order: usize) -> MomentSeq<XPoly> {
    // (e^z - 1)/z = Σ z^n / (n+1)!
    let quotient = rational_series(order, |n| Rational::one() / factorial(n + 1));
    let kernel = quotient.inverse().expect("unit constant term");
    with_exp_x(&kernel, p)
}

fn with_exp_x(kernel: &TruncatedSeries, p: u32) -> MomentSeq<XPoly> {
    let order = kernel.order();
    let exp_x = TruncatedSeries::exp_of(order, &XPoly::var());
    kernel
        .pow(p)
        .and_then(|k| k.mul(&exp_x))
        .expect("orders agree")
        .egf_coefficients()
}

/// `Ē_0^(p), ..., Ē_order^(p)` from `sech^p(z)`.
pub fn euler_bar(p: u32, order: usize) -> MomentSeq<Rational> {
    let cosh = rational_series(order, |n| {
        if n % 2 == 0 {
            Rational::one() / factorial(n)
        } else {
            Rational::zero()
        }
    });
    let sech = cosh.inverse().expect("unit constant term");
    let m = sech.pow(p).expect("orders agree").egf_coefficients();
    MomentSeq::new(
        m.values
            .into_iter()
            .map(|c| c.as_constant().expect("rational series"))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn xp(c: &[(i64, i64)]) -> XPoly {
        XPoly::from_fracs(c)
    }

    fn rs(order: usize, c: &[(i64, i64)]) -> TruncatedSeries {
        TruncatedSeries::new(order, c.iter().map(|&(n, d)| XPoly::constant(rat(n, d))).collect())
    }

    #[test]
    fn products() {
        let a = rs(2, &[(1, 1), (1, 1)]);
        let b = rs(2, &[(1, 1), (-1, 1)]);
        assert_eq!(a.mul(&b).unwrap(), rs(2, &[(1, 1), (0, 1), (-1, 1)]));

        let e = TruncatedSeries::exp_of(6, &XPoly::one());
        let e_neg = TruncatedSeries::exp_of(6, &XPoly::constant(int(-1)));
        assert_eq!(e.mul(&e_neg).unwrap(), rs(6, &[(1, 1)]));
    }

    #[test]
    fn order_mismatch() {
        let a = rs(2, &[(1, 1)]);
        let b = rs(3, &[(1, 1)]);
        assert_eq!(a.mul(&b), Err(Error::OrderMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn inverses() {
        assert_eq!(rs(3, &[(2, 1)]).inverse().unwrap(), rs(3, &[(1, 2)]));
        assert_eq!(
            rs(3, &[(1, 1), (1, 1)]).inverse().unwrap(),
            rs(3, &[(1, 1), (-1, 1), (1, 1), (-1, 1)])
        );
        assert_eq!(rs(3, &[(0, 1), (1, 1)]).inverse(), Err(Error::NotInvertible));
        let nonconstant = TruncatedSeries::new(2, vec![XPoly::var()]);
        assert_eq!(nonconstant.inverse(), Err(Error::NotInvertible));
    }

    #[test]
    fn inverse_round_trip() {
        // (e^z + 1)/2 times its inverse is 1
        let half_sum = rational_series(8, |n| match n {
            0 => int(1),
            _ => Rational::one() / (factorial(n) * int(2)),
        });
        let inv = half_sum.inverse().unwrap();
        assert_eq!(inv.mul(&half_sum).unwrap(), rs(8, &[(1, 1)]));
        // E_4(x) from 2/(e^z+1) · e^{xz}
        let e = inv.mul(&TruncatedSeries::exp_of(8, &XPoly::var())).unwrap();
        let e4 = e.coeff(4).scale(&factorial(4));
        assert_eq!(e4, xp(&[(0, 1), (1, 1), (0, 1), (-2, 1), (1, 1)]));
    }

    #[test]
    fn euler_polynomial_values() {
        assert_eq!(euler_polys(1, 3)[3], xp(&[(1, 4), (0, 1), (-3, 2), (1, 1)]));
        assert_eq!(euler_polys(3, 2)[2], xp(&[(3, 2), (-3, 1), (1, 1)]));
    }

    #[test]
    fn euler_p2_matches_convolution_of_p1() {
        // E_n^(2)(x) = Σ C(n,k) E_k(0) E_{n-k}(x)
        let e1 = euler_polys(1, 5);
        let at_zero = MomentSeq::new(
            e1.values().iter().map(|p| XPoly::constant(p.eval(&int(0)))).collect(),
        );
        let conv = binomial_convolve(&at_zero, &e1).unwrap();
        assert_eq!(conv, euler_polys(2, 5));
    }

    #[test]
    fn bernoulli_values() {
        let b = bernoulli_polys(1, 2);
        assert_eq!(b[0], XPoly::one());
        assert_eq!(b[1], xp(&[(-1, 2), (1, 1)]));
        assert_eq!(b[2], xp(&[(1, 6), (-1, 1), (1, 1)]));
        let at_zero = MomentSeq::new(
            b.values().iter().map(|p| XPoly::constant(p.eval(&int(0)))).collect(),
        );
        let b2 = bernoulli_polys(2, 2);
        assert_eq!(binomial_convolve(&at_zero, &b).unwrap(), b2);
    }

    #[test]
    fn euler_numbers() {
        let e = euler_bar(1, 6);
        let expected: Vec<Rational> = [1, 0, -1, 0, 5, 0, -61].iter().map(|&v| int(v)).collect();
        assert_eq!(e.values(), expected.as_slice());
        let e2 = euler_bar(2, 4)[4].clone();
        assert_eq!(e2, euler_polys(2, 4)[4].eval(&int(1)) * int(16));
    }

    #[test]
    fn convolution_identities() {
        let delta = MomentSeq::new(vec![int(1), int(0), int(0), int(0)]);
        let m = euler_bar(1, 3);
        assert_eq!(binomial_convolve(&delta, &m).unwrap(), m);
        assert_eq!(
            binomial_convolve(&euler_bar(1, 10), &euler_bar(1, 10)).unwrap(),
            euler_bar(2, 10)
        );
        assert!(matches!(
            binomial_convolve(&delta, &euler_bar(1, 5)),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn moment_transforms() {
        // m̃_n = (1/2)^n Ē_n = E_n(1/2)
        let scaled = euler_bar(1, 8).scaled(&rat(1, 2));
        assert_eq!(scaled, euler_polys(1, 8).eval_at(&rat(1, 2)));
        // moments of X + c for X ~ E_n(x) at x = 0 give E_n(c)
        let shifted = euler_polys(1, 6).eval_at(&int(0)).shifted(&rat(1, 3));
        assert_eq!(shifted, euler_polys(1, 6).eval_at(&rat(1, 3)));
    }
}
