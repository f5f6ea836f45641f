//! Univariate polynomials over arbitrary-precision rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("division is not exact")]
    Inexact,
}

/// Coefficients in ascending degree; trailing zeros are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Poly::new(vec![c])
    }

    /// `c · x^k`
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Poly::monomial(BigRational::one(), 1)
    }

    /// Product of integer-coefficient factors.
    pub fn product_of(factors: &[&[i64]]) -> Self {
        factors
            .iter()
            .fold(Poly::one(), |acc, f| &acc * &Poly::from_ints(f))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + rational_to_f64(c);
        }
        acc
    }

    /// `p(x^k)`
    pub fn substitute_power(&self, k: usize) -> Poly {
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len().saturating_sub(1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Poly::new(coeffs)
    }

    /// `p(c·x)`
    pub fn scale_variable(&self, c: &BigRational) -> Poly {
        let mut power = BigRational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &power);
            power *= c;
        }
        Poly::new(out)
    }

    /// `x^deg · p(1/x)` with `deg` the degree of `p`.
    pub fn reversed(&self) -> Poly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Poly::new(coeffs)
    }

    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly), PolyError> {
        let d_deg = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let lc_inv = divisor.coeffs[d_deg].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d_deg {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![BigRational::zero(); rem.len() - d_deg];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + d_deg] * &lc_inv;
            if q.is_zero() {
                continue;
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * dc;
            }
            quot[k] = q;
        }
        rem.truncate(d_deg);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Quotient of a division known to be exact.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly, PolyError> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::Inexact)
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("b is nonzero");
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Monic least common multiple.
    pub fn lcm(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let g = self.gcd(other);
        (self * &other.div_exact(&g).expect("gcd divides")).monic()
    }

    /// `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).expect("gcd divides").monic()
    }

    /// Rescales to integer coefficients with gcd 1 and a positive leading
    /// coefficient. Returns the factor applied.
    pub fn primitive(&self) -> (Poly, BigRational) {
        if self.is_zero() {
            return (Poly::zero(), BigRational::one());
        }
        let denom_lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let numers: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&denom_lcm / c.denom()))
            .collect();
        let content = numers.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let mut factor = BigRational::new(denom_lcm, content);
        if self.leading().is_some_and(|lc| lc.is_negative()) {
            factor = -factor;
        }
        (self.scale(&factor), factor)
    }

    /// Integer coefficients, if every coefficient is integral.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn from_integers(coeffs: &[BigInt]) -> Self {
        Poly::new(
            coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }
}

pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // Fall back to scaling for huge numerators/denominators.
        let n = r.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = r.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one();
            if k == 0 || !unit {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str(if unit { "x" } else { "*x" })?,
                _ => write!(f, "{}x^{k}", if unit { "" } else { "*" })?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn gcd_extracts_common_factor() {
        let x_minus_1 = p(&[-1, 1]);
        let a = &(&x_minus_1 * &x_minus_1) * &p(&[1, -1, 1]);
        assert_eq!(a.gcd(&x_minus_1), x_minus_1);
        assert_eq!(p(&[2, 2]).gcd(&p(&[3, 3])), p(&[1, 1]));
        assert_eq!(Poly::zero().gcd(&Poly::zero()), Poly::zero());
    }

    #[test]
    fn telescoping_product() {
        let one_minus_x = p(&[1, -1]);
        let geometric = p(&[1; 10]);
        let mut want = vec![0i64; 11];
        want[0] = 1;
        want[10] = -1;
        assert_eq!(&one_minus_x * &geometric, p(&want));
    }

    #[test]
    fn expanded_denominator_has_degree_ten() {
        let d = Poly::product_of(&[&[-1, 1], &[-1, 1], &[-1, 0, 3, 0, 1], &[-1, 0, 2, 0, 1]]);
        assert_eq!(d.degree(), Some(10));
        assert_eq!(d.coeff(0), rat(1));
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[5, -3, 0, 7, 2]);
        let b = p(&[1, 0, 3]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert!(r.degree().unwrap_or(0) < 2);
        assert_eq!(&(&q * &b) + &r, a);
        assert_eq!(a.div_rem(&Poly::zero()), Err(PolyError::DivisionByZero));
        assert_eq!(a.div_exact(&b), Err(PolyError::Inexact));
    }

    #[test]
    fn primitive_normalization() {
        let q = Poly::new(vec![
            BigRational::new(1.into(), 2.into()),
            BigRational::new((-3).into(), 4.into()),
        ]);
        let (prim, factor) = q.primitive();
        assert_eq!(prim, p(&[-2, 3]));
        assert_eq!(factor, rat(-4));
    }

    #[test]
    fn squarefree_drops_repeats() {
        let a = Poly::product_of(&[&[-1, 1], &[-1, 1], &[2, 1]]);
        assert_eq!(a.squarefree_part(), p(&[-2, 1, 1]));
    }

    #[test]
    fn display_form() {
        assert_eq!(p(&[-1, 0, 3, 0, 1]).to_string(), "x^4 + 3*x^2 - 1");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
    }

    #[test]
    fn substitution_helpers() {
        assert_eq!(p(&[1, 2, 3]).substitute_power(2), p(&[1, 0, 2, 0, 3]));
        assert_eq!(p(&[1, 1, 1]).scale_variable(&rat(2)), p(&[1, 2, 4]));
        assert_eq!(p(&[1, 2, 3]).reversed(), p(&[3, 2, 1]));
        assert_eq!(p(&[1, 2, 3]).derivative(), p(&[2, 6]));
        assert_eq!(p(&[1, 2, 3]).eval(&rat(2)), rat(17));
    }
}
