//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::Value;

use crate::scalar::{binomial, factorial, Scalar};

/// A polynomial stored densely by exponent. The zero polynomial has no
/// coefficients; otherwise the leading coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly(Vec<Scalar>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly(vec![Scalar::one()])
    }

    pub fn x() -> Self {
        Poly(vec![Scalar::zero(), Scalar::one()])
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// `c * X^k`.
    pub fn monomial(k: usize, c: Scalar) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![Scalar::zero(); k + 1];
        v[k] = c;
        Poly(v)
    }

    pub fn from_coeffs(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().map_or(false, Scalar::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.0.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.0
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly(self.0.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, x: i64) -> Scalar {
        self.eval(&Scalar::from_int(x))
    }

    /// JSON rendering: array of `num/den` strings, index = exponent.
    pub fn to_json(&self) -> Value {
        Value::Array(self.0.iter().map(|c| Value::String(c.render())).collect())
    }
}

/// The k-th Hilbert polynomial `H_k(X) = X(X-1)...(X-k+1)/k!`, with `H_0 = 1`.
pub fn hilbert(k: usize) -> Poly {
    let mut p = Poly::one();
    for i in 0..k {
        p = &p * &Poly::from_coeffs(vec![Scalar::from_int(-(i as i64)), Scalar::one()]);
    }
    p.scale(&Scalar::from_bigint(factorial(k)).recip())
}

/// `(X+Y)^n` expanded: coefficient of `X^k Y^{n-k}` is `C(n,k)`. Used by the
/// binomial coproduct on monomials.
pub fn binomial_row(n: usize) -> Vec<Scalar> {
    (0..=n).map(|k| Scalar::from_bigint(binomial(n, k))).collect()
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.0.len().max(rhs.0.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::from_coeffs(v)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.0.len().max(rhs.0.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) - rhs.coeff(i));
        }
        Poly::from_coeffs(v)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![Scalar::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Poly::from_coeffs(v)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Poly {
    /// Renders in descending powers, e.g. `X^3 - 3X^2 + 2X`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.0.len()).rev() {
            let c = &self.0[k];
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", c.abs())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let show_coeff = !mag.is_one() || k == 0;
            if show_coeff {
                write!(f, "{}", mag.render())?;
            }
            match k {
                0 => {}
                1 => write!(f, "X")?,
                _ => write!(f, "X^{}", k)?,
            }
        }
        Ok(())
    }
}
