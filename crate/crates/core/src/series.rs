//! Rational generating functions: assembly from a transfer matrix, series
//! coefficients, and the linear recurrence they satisfy.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::automaton::TransferMatrix;
use crate::poly::{Poly, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("denominator vanishes at x = 0; no power series expansion")]
    ZeroConstantTerm,
    #[error("coefficient {index} is not an integer: {value}")]
    NonInteger { index: usize, value: String },
    #[error("linear system is singular")]
    Singular,
    #[error("coefficient does not fit in a 64-bit integer")]
    Overflow,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `numerator / denominator` with exact rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    numerator: Poly,
    denominator: Poly,
}

impl RationalFunction {
    pub fn new(numerator: Poly, denominator: Poly) -> Result<Self, SeriesError> {
        if denominator.is_zero() {
            return Err(SeriesError::ZeroDenominator);
        }
        Ok(RationalFunction {
            numerator,
            denominator,
        })
    }

    pub fn from_ints(numerator: &[i64], denominator: &[i64]) -> Result<Self, SeriesError> {
        RationalFunction::new(Poly::from_ints(numerator), Poly::from_ints(denominator))
    }

    pub fn numerator(&self) -> &Poly {
        &self.numerator
    }

    pub fn denominator(&self) -> &Poly {
        &self.denominator
    }

    /// Cancels the common factor, then scales so the denominator has
    /// coprime integer coefficients and a positive leading coefficient.
    pub fn normalize(&self) -> RationalFunction {
        let g = self.numerator.gcd(&self.denominator);
        let num = self.numerator.div_exact(&g).expect("gcd divides");
        let den = self.denominator.div_exact(&g).expect("gcd divides");
        let (den, factor) = den.primitive();
        RationalFunction {
            numerator: num.scale(&factor),
            denominator: den,
        }
    }

    pub fn scale(&self, c: &BigRational) -> RationalFunction {
        RationalFunction {
            numerator: self.numerator.scale(c),
            denominator: self.denominator.clone(),
        }
    }

    /// Power series coefficients `c_0 ..= c_upto`.
    pub fn coefficients(&self, upto: usize) -> Result<Vec<BigRational>, SeriesError> {
        let d0 = self.denominator.coeff(0);
        if d0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let d0_inv = d0.recip();
        let den = self.denominator.coeffs();
        let mut out: Vec<BigRational> = Vec::with_capacity(upto + 1);
        for n in 0..=upto {
            let mut acc = self.numerator.coeff(n);
            for (i, d) in den.iter().enumerate().skip(1).take(n) {
                acc -= d * &out[n - i];
            }
            out.push(acc * &d0_inv);
        }
        Ok(out)
    }

    /// Integer view for the JSON schema; numerator and denominator are
    /// scaled together if the numerator has fractional coefficients.
    pub fn to_json(&self) -> Result<GfJson, SeriesError> {
        let lcm = self
            .numerator
            .coeffs()
            .iter()
            .chain(self.denominator.coeffs())
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let scale = BigRational::from_integer(lcm);
        let to_ints = |p: &Poly| -> Result<Vec<i64>, SeriesError> {
            p.scale(&scale)
                .to_integers()
                .expect("scaled to integers")
                .iter()
                .map(|c| c.to_i64().ok_or(SeriesError::Overflow))
                .collect()
        };
        Ok(GfJson {
            numerator: to_ints(&self.numerator)?,
            denominator: to_ints(&self.denominator)?,
        })
    }

    pub fn from_json(json: &GfJson) -> Result<Self, SeriesError> {
        RationalFunction::from_ints(&json.numerator, &json.denominator)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

/// `{"numerator":[...],"denominator":[...]}`, ascending coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GfJson {
    pub numerator: Vec<i64>,
    pub denominator: Vec<i64>,
}

/// Determinant by fraction-free (Bareiss) elimination over `Q[x]`.
pub fn determinant(mut a: Vec<Vec<Poly>>) -> Poly {
    let n = a.len();
    if n == 0 {
        return Poly::one();
    }
    let mut negate = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Poly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = t.div_exact(&prev).expect("Bareiss quotient is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -&d
    } else {
        d
    }
}

/// `I - x·T` as a polynomial matrix.
fn identity_minus_xt(entries: &[Vec<u8>]) -> Vec<Vec<Poly>> {
    let n = entries.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let diag = if i == j { 1 } else { 0 };
                    Poly::from_ints(&[diag, -(entries[i][j] as i64)])
                })
                .collect()
        })
        .collect()
}

/// `left^T (I - xT)^-1 right` as `(numerator, det(I - xT))`, using
/// `det [[A, r], [l^T, 0]] = -l^T adj(A) r`.
fn bilinear_resolvent(entries: &[Vec<u8>], left: &[u8], right: &[u8]) -> (Poly, Poly) {
    let a = identity_minus_xt(entries);
    let det = determinant(a.clone());
    let n = entries.len();
    let mut bordered: Vec<Vec<Poly>> = a
        .into_iter()
        .zip(right)
        .map(|(mut row, &r)| {
            row.push(Poly::from_ints(&[r as i64]));
            row
        })
        .collect();
    let mut last: Vec<Poly> = left.iter().map(|&l| Poly::from_ints(&[l as i64])).collect();
    last.push(Poly::zero());
    bordered.push(last);
    debug_assert_eq!(bordered.len(), n + 1);
    (-&determinant(bordered), det)
}

/// Generating function by board width:
/// `x^2 σ^T (I - x^2 T)^-1 a_even + x σ^T (I - x^2 T)^-1 a_odd`, divided by
/// the machine's read multiplicity, normalized.
pub fn resolvent_sum(t: &TransferMatrix) -> Result<RationalFunction, SeriesError> {
    let (even_num, det) = bilinear_resolvent(&t.entries, &t.start, &t.accept_even);
    let (odd_num, _) = bilinear_resolvent(&t.entries, &t.start, &t.accept_odd);
    if det.is_zero() {
        return Err(SeriesError::Singular);
    }
    let x = Poly::x();
    let x2 = &x * &x;
    let numerator = &(&x2 * &even_num.substitute_power(2)) + &(&x * &odd_num.substitute_power(2));
    let denominator = det
        .substitute_power(2)
        .scale(&BigRational::from_integer(BigInt::from(t.divisor)));
    Ok(RationalFunction::new(numerator, denominator)?.normalize())
}

/// Least common multiple of the reduced denominators of all entries of
/// `(I - xT)^-1`, with coprime integer coefficients and positive leading
/// coefficient.
pub fn resolvent_denominator_lcm(entries: &[Vec<u8>]) -> Poly {
    let n = entries.len();
    let a = identity_minus_xt(entries);
    let det = determinant(a.clone());
    let mut lcm = Poly::one();
    for i in 0..n {
        for j in 0..n {
            // adj(A)[i][j] = (-1)^(i+j) det(A without row j, column i)
            let minor: Vec<Vec<Poly>> = (0..n)
                .filter(|&r| r != j)
                .map(|r| {
                    (0..n)
                        .filter(|&c| c != i)
                        .map(|c| a[r][c].clone())
                        .collect()
                })
                .collect();
            let cof = determinant(minor);
            if cof.is_zero() {
                continue;
            }
            let g = cof.gcd(&det);
            let reduced = det.div_exact(&g).expect("gcd divides");
            lcm = lcm.lcm(&reduced);
        }
    }
    lcm.primitive().0
}

/// `c_1 ..= c_count`, which must all be integers.
pub fn series_terms(g: &RationalFunction, count: usize) -> Result<Vec<BigInt>, SeriesError> {
    let coeffs = g.coefficients(count)?;
    coeffs
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(index, c)| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(SeriesError::NonInteger {
                    index,
                    value: c.to_string(),
                })
            }
        })
        .collect()
}

/// `Σ_{i=0}^{order} coefficients[i] · c(n - i) = 0` for every `n ≥ initial.len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recurrence {
    pub order: usize,
    pub coefficients: Vec<BigInt>,
    /// `c_0, c_1, ...` up to where the recurrence takes over.
    pub initial: Vec<BigInt>,
}

impl Recurrence {
    /// `c_0 ..= c_upto`.
    pub fn terms(&self, upto: usize) -> Result<Vec<BigInt>, SeriesError> {
        let lead = &self.coefficients[0];
        let mut out: Vec<BigInt> = self.initial.iter().take(upto + 1).cloned().collect();
        while out.len() <= upto {
            let n = out.len();
            let mut acc = BigInt::zero();
            for i in 1..=self.order {
                acc -= &self.coefficients[i] * &out[n - i];
            }
            let (q, r) = acc.div_rem(lead);
            if !r.is_zero() {
                return Err(SeriesError::NonInteger {
                    index: n,
                    value: format!("{acc}/{lead}"),
                });
            }
            out.push(q);
        }
        Ok(out)
    }
}

impl fmt::Display for Recurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Solve for c(n).
        let lead = &self.coefficients[0];
        write!(f, "c(n) = ")?;
        let mut first = true;
        for i in 1..=self.order {
            let c = -&self.coefficients[i];
            if c.is_zero() {
                continue;
            }
            let frac = BigRational::new(c, lead.clone());
            let neg = frac.is_negative();
            let mag = frac.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "c(n-{i})")?;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " for n >= {}", self.initial.len())?;
        for (k, v) in self.initial.iter().enumerate() {
            write!(f, "; c({k}) = {v}")?;
        }
        Ok(())
    }
}

/// Linear recurrence read off the normalized denominator.
pub fn recurrence_of(g: &RationalFunction) -> Result<Recurrence, SeriesError> {
    let g = g.normalize();
    let coefficients = g
        .denominator()
        .to_integers()
        .expect("normalized denominator is integral");
    if coefficients[0].is_zero() {
        return Err(SeriesError::ZeroConstantTerm);
    }
    let order = coefficients.len() - 1;
    let num_len = g.numerator().degree().map_or(0, |d| d + 1);
    let start = num_len.max(order);
    let initial = if start == 0 {
        Vec::new()
    } else {
        let coeffs = g.coefficients(start - 1)?;
        coeffs
            .into_iter()
            .enumerate()
            .map(|(index, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(SeriesError::NonInteger {
                        index,
                        value: c.to_string(),
                    })
                }
            })
            .collect::<Result<_, _>>()?
    };
    Ok(Recurrence {
        order,
        coefficients,
        initial,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tm(entries: Vec<Vec<u8>>, start: Vec<u8>, even: Vec<u8>, odd: Vec<u8>) -> TransferMatrix {
        TransferMatrix {
            order: entries.len(),
            entries,
            start,
            accept_even: even,
            accept_odd: odd,
            divisor: 1,
        }
    }

    #[test]
    fn single_loop_state() {
        let t = tm(vec![vec![1]], vec![1], vec![1], vec![0]);
        let g = resolvent_sum(&t).unwrap();
        let want = RationalFunction::from_ints(&[0, 0, 1], &[1, 0, -1])
            .unwrap()
            .normalize();
        assert_eq!(g, want);
        let terms = series_terms(&g, 6).unwrap();
        assert_eq!(terms, [0, 1, 0, 1, 0, 1].map(BigInt::from).to_vec());
    }

    #[test]
    fn determinant_small_cases() {
        let m = vec![
            vec![Poly::from_ints(&[0]), Poly::from_ints(&[1])],
            vec![Poly::from_ints(&[1]), Poly::from_ints(&[0])],
        ];
        assert_eq!(determinant(m), Poly::from_ints(&[-1]));
        let m = vec![
            vec![Poly::from_ints(&[1, -1]), Poly::from_ints(&[0, -1])],
            vec![Poly::from_ints(&[0, -1]), Poly::from_ints(&[1, -1])],
        ];
        // (1-x)^2 - x^2
        assert_eq!(determinant(m), Poly::from_ints(&[1, -2]));
        assert_eq!(determinant(Vec::new()), Poly::one());
    }

    #[test]
    fn normalize_is_idempotent_and_signed() {
        let g = RationalFunction::from_ints(&[0, 2, 2], &[2, 0, -2]).unwrap();
        let n = g.normalize();
        assert_eq!(n.denominator(), &Poly::from_ints(&[-1, 1]));
        assert_eq!(n.numerator(), &Poly::from_ints(&[0, -1]));
        assert_eq!(n.normalize(), n);
    }

    #[test]
    fn geometric_recurrence() {
        let g = RationalFunction::from_ints(&[0, 1], &[1, -1]).unwrap();
        let r = recurrence_of(&g).unwrap();
        assert_eq!(r.order, 1);
        let t = r.terms(5).unwrap();
        assert_eq!(t, [0, 1, 1, 1, 1, 1].map(BigInt::from).to_vec());
        assert_eq!(
            r.to_string(),
            "c(n) = c(n-1) for n >= 2; c(0) = 0; c(1) = 1"
        );
    }

    #[test]
    fn non_integer_series_is_reported() {
        let g = RationalFunction::from_ints(&[0, 1], &[2, -1]).unwrap();
        assert!(matches!(
            series_terms(&g, 3),
            Err(SeriesError::NonInteger { index: 1, .. })
        ));
        let g = RationalFunction::from_ints(&[1], &[0, 1]).unwrap();
        assert_eq!(series_terms(&g, 3), Err(SeriesError::ZeroConstantTerm));
        assert!(RationalFunction::from_ints(&[1], &[]).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let g = RationalFunction::from_ints(&[0, 1], &[1, -2])
            .unwrap()
            .normalize();
        let j = g.to_json().unwrap();
        assert_eq!(j.denominator, vec![-1, 2]);
        assert_eq!(RationalFunction::from_json(&j).unwrap().normalize(), g);
    }
}
