//! Dense univariate polynomials over an exact coefficient ring.
//!
//! [`XPoly`] is ℚ[x]; [`YPoly`] is (ℚ[x])[y], a polynomial in `y` whose
//! coefficients are themselves polynomials in `x`. Both are the same generic
//! [`Poly`] type, so every algorithm written once over [`Ring`] runs on both.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::rational::{int, Rational};

/// Commutative ring with by-reference arithmetic.
pub trait Ring: Clone + PartialEq + fmt::Debug + Zero + One {
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    /// Image of an integer under the canonical map ℤ → R.
    fn from_int(n: i64) -> Self;
}

impl Ring for Rational {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_int(n: i64) -> Self {
        int(n)
    }
}

/// Dense polynomial; `coeffs[i]` multiplies the i-th power of the
/// indeterminate. Trailing zeros are never stored, so the zero polynomial
/// has no coefficients and structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

pub type XPoly = Poly<Rational>;
pub type YPoly = Poly<XPoly>;

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Self::new(vec![R::zero(), R::one()])
    }

    /// `c · var^degree`
    pub fn monomial(c: R, degree: usize) -> Self {
        let mut coeffs = vec![R::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `var + c`
    pub fn linear(c: R) -> Self {
        Self::new(vec![c, R::one()])
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `var^i`; zero past the degree.
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Constant term, or `None` if the polynomial is not constant.
    pub fn as_constant(&self) -> Option<R> {
        match self.coeffs.len() {
            0 => Some(R::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, v: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc.mul_ref(v).add_ref(c))
    }

    /// `self(other)`, by Horner's rule over polynomials.
    pub fn compose(&self, other: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * other) + &Self::constant(c.clone())
        })
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Multiplication by `var^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl XPoly {
    /// Polynomial with the given integer-fraction coefficients, lowest power
    /// first: `xpoly(&[(1, 2), (-1, 1), (1, 1)])` is `x^2 - x + 1/2`.
    pub fn from_fracs(coeffs: &[(i64, i64)]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&(n, d)| crate::rational::rat(n, d))
                .collect(),
        )
    }
}

/// Pochhammer symbol `(base)_k = base (base + 1) ... (base + k - 1)`.
pub fn rising_factorial<R: Ring>(base: &Poly<R>, k: usize) -> Poly<R> {
    (0..k).fold(Poly::one(), |acc, j| {
        let factor = base + &Poly::constant(R::from_int(j as i64));
        &acc * &factor
    })
}

impl<R: Ring> Zero for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Ring> One for Poly<R> {
    fn one() -> Self {
        Poly {
            coeffs: vec![R::one()],
        }
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_int(n: i64) -> Self {
        Self::constant(R::from_int(n))
    }
}

impl<R: Ring> Add for &Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: Self) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                    (Some(a), Some(b)) => a.add_ref(b),
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
}

impl<R: Ring> Sub for &Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: Self) -> Poly<R> {
        self + &(-rhs)
    }
}

impl<R: Ring> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly {
            coeffs: self.coeffs.iter().map(Ring::neg_ref).collect(),
        }
    }
}

impl<R: Ring> Mul for &Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: Self) -> Poly<R> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Poly::new(out)
    }
}

macro_rules! forward_owned {
    ($($Op:ident $op:ident),*) => {$(
        impl<R: Ring> $Op for Poly<R> {
            type Output = Poly<R>;
            fn $op(self, rhs: Self) -> Poly<R> {
                (&self).$op(&rhs)
            }
        }
        impl<R: Ring> $Op<&Poly<R>> for Poly<R> {
            type Output = Poly<R>;
            fn $op(self, rhs: &Poly<R>) -> Poly<R> {
                (&self).$op(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        -&self
    }
}

// Rendering: descending powers, e.g. `x^3 - 3x^2 + (3/2)x + 1/2`.

fn render_power(var: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    }
}

/// Writes `terms` (sign, magnitude body) as a signed sum.
fn write_sum(f: &mut fmt::Formatter<'_>, terms: &[(bool, String)]) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (i, (negative, body)) in terms.iter().enumerate() {
        match (i, negative) {
            (0, true) => write!(f, "-{body}")?,
            (0, false) => write!(f, "{body}")?,
            (_, true) => write!(f, " - {body}")?,
            (_, false) => write!(f, " + {body}")?,
        }
    }
    Ok(())
}

fn rational_term(c: &Rational, var: &str, k: usize) -> (bool, String) {
    let mag = c.abs();
    let power = render_power(var, k);
    let body = if k == 0 {
        mag.to_string()
    } else if mag.is_one() {
        power
    } else if mag.is_integer() {
        format!("{mag}{power}")
    } else {
        format!("({mag}){power}")
    };
    (c.is_negative(), body)
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<_> = (0..self.coeffs.len())
            .rev()
            .filter(|&k| !self.coeffs[k].is_zero())
            .map(|k| rational_term(&self.coeffs[k], "x", k))
            .collect();
        write_sum(f, &terms)
    }
}

impl fmt::Display for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<_> = (0..self.coeffs.len())
            .rev()
            .filter(|&k| !self.coeffs[k].is_zero())
            .map(|k| {
                let c = &self.coeffs[k];
                match c.as_constant() {
                    Some(r) => rational_term(&r, "y", k),
                    None if k == 0 => {
                        let text = c.to_string();
                        match text.strip_prefix('-') {
                            Some(rest) => (true, rest.to_string()),
                            None => (false, text),
                        }
                    }
                    None => (false, format!("({c}){}", render_power("y", k))),
                }
            })
            .collect();
        write_sum(f, &terms)
    }
}
