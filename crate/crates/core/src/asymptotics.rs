//! Coefficient asymptotics from the dominant real poles of a rational
//! generating function.
//!
//! For a simple pole `r` of `N/D`, the coefficients pick up the term
//! `-N(r) / (r D'(r)) · r^-n`. Only the poles `±z` closest to the origin
//! are kept, giving `c_n ≈ A (1 + B (-1)^n) z^-n`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::{rational_to_f64, Poly};
use crate::reference;
use crate::roots::{isolate_real_roots, root_bound, roots_in_disk, RootError, RootInterval};
use crate::series::{series_terms, RationalFunction, SeriesError};

/// Width of the isolating interval for the dominant pole.
pub fn default_width() -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(1_000_000_000_000u64))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AsymptoticError {
    #[error("unsupported pole structure: {0}")]
    UnsupportedShape(String),
    #[error(transparent)]
    Roots(#[from] RootError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

#[derive(Debug, Clone)]
pub struct AsymptoticEstimate {
    /// Isolating interval of the smallest positive pole.
    pub z: RootInterval,
    pub z_value: f64,
    /// `1 / z`
    pub growth: f64,
    /// Amplitude of `z^-n`.
    pub amp_plus: f64,
    /// Amplitude of `(-z)^-n`; zero when `-z` is not a pole.
    pub amp_minus: f64,
    /// `amp_plus`
    pub a: f64,
    /// `amp_minus / amp_plus`
    pub b: f64,
}

impl AsymptoticEstimate {
    /// `amp_plus · z^-n + amp_minus · (-z)^-n`
    pub fn estimate(&self, n: usize) -> f64 {
        let g = self.growth.powi(n as i32);
        let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
        self.amp_plus * g + self.amp_minus * sign * g
    }

    /// Amplitudes against the closed forms `(89z^2 ± 92z + 218 ± 86/z)/234`.
    pub fn matches_closed_form(&self, tol: f64) -> bool {
        let (plus, minus) = reference::amplitude_closed_forms(self.z_value);
        (self.amp_plus - plus).abs() <= tol && (self.amp_minus - minus).abs() <= tol
    }
}

/// Residue amplitude `-N(r) / (r D'(r))` at a simple pole `r`.
fn amplitude(g: &RationalFunction, r: &BigRational) -> f64 {
    let num = g.numerator().eval(r);
    let dd = g.denominator().derivative().eval(r);
    rational_to_f64(&(-num / (r * dd)))
}

/// Whether the squarefree polynomial `q` has a root inside `interval`,
/// which isolates a single root of a multiple of `q`.
fn vanishes_in(q: &Poly, interval: &RootInterval) -> Result<bool, RootError> {
    if q.degree().unwrap_or(0) == 0 {
        return Ok(false);
    }
    if interval.is_exact() {
        return Ok(q.eval(&interval.lo).is_zero());
    }
    Ok(!isolate_real_roots(q, &interval.lo, &interval.hi, &interval.width())?.is_empty())
}

pub fn dominant_form(g: &RationalFunction) -> Result<AsymptoticEstimate, AsymptoticError> {
    dominant_form_with_width(g, &default_width())
}

pub fn dominant_form_with_width(
    g: &RationalFunction,
    width: &BigRational,
) -> Result<AsymptoticEstimate, AsymptoticError> {
    let g = g.normalize();
    let den = g.denominator().clone();
    if den.coeff(0).is_zero() {
        return Err(SeriesError::ZeroConstantTerm.into());
    }
    if den.degree() == Some(0) {
        return Err(AsymptoticError::UnsupportedShape("no poles".into()));
    }
    let bound = root_bound(&den);
    let positive = isolate_real_roots(&den, &BigRational::zero(), &bound, width)?;
    let z = positive
        .into_iter()
        .next()
        .ok_or_else(|| AsymptoticError::UnsupportedShape("no positive real pole".into()))?;

    let repeated = den.gcd(&den.derivative());
    if vanishes_in(&repeated, &z)? {
        return Err(AsymptoticError::UnsupportedShape(
            "dominant pole is not simple".into(),
        ));
    }
    let den_sf = den.squarefree_part();
    let reflected = Poly::new(
        den_sf
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { c.clone() } else { -c })
            .collect(),
    );
    let symmetric = den_sf.gcd(&reflected);
    let minus_is_pole = vanishes_in(&symmetric, &z)?;

    // No pole strictly closer than z, and within |x| <= z.hi only ±z.
    let expected = if minus_is_pole { 2 } else { 1 };
    let (inner, outer) = if z.is_exact() {
        (&z.lo - width, &z.hi + width)
    } else {
        (z.lo.clone(), z.hi.clone())
    };
    if roots_in_disk(&den_sf, &inner)? != 0 {
        return Err(AsymptoticError::UnsupportedShape(
            "a complex pole is closer than the real one".into(),
        ));
    }
    if roots_in_disk(&den_sf, &outer)? != expected {
        return Err(AsymptoticError::UnsupportedShape(
            "a complex pole shares the dominant modulus".into(),
        ));
    }

    let zr = z.midpoint();
    let amp_plus = amplitude(&g, &zr);
    let amp_minus = if minus_is_pole {
        amplitude(&g, &-zr.clone())
    } else {
        0.0
    };
    let z_value = z.value();
    Ok(AsymptoticEstimate {
        z,
        z_value,
        growth: 1.0 / z_value,
        amp_plus,
        amp_minus,
        a: amp_plus,
        b: amp_minus / amp_plus,
    })
}

/// `(n, |c_n - ĉ_n| / c_n)` for `n = 1..=count`.
pub fn error_profile(
    g: &RationalFunction,
    est: &AsymptoticEstimate,
    count: usize,
) -> Result<Vec<(usize, f64)>, AsymptoticError> {
    let terms = series_terms(g, count)?;
    Ok(terms
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let n = i + 1;
            let exact = c.to_f64().unwrap_or(f64::INFINITY);
            let approx = est.estimate(n);
            let rel = if exact == 0.0 {
                if approx == 0.0 {
                    0.0
                } else {
                    f64::INFINITY
                }
            } else {
                ((exact - approx) / exact).abs()
            };
            (n, rel)
        })
        .collect())
}

/// `{"z_inv", "A", "B", "exact_check", "errors"}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticJson {
    pub z_inv: f64,
    #[serde(rename = "A")]
    pub a: f64,
    #[serde(rename = "B")]
    pub b: f64,
    pub exact_check: bool,
    pub errors: Vec<(usize, f64)>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_series_is_exact() {
        let g = RationalFunction::from_ints(&[0, 1], &[1, -2]).unwrap();
        let est = dominant_form(&g).unwrap();
        assert!((est.z_value - 0.5).abs() < 1e-12);
        assert!((est.amp_plus - 0.5).abs() < 1e-11);
        assert_eq!(est.amp_minus, 0.0);
        for n in 1..20 {
            let want = 2f64.powi(n as i32 - 1);
            assert!((est.estimate(n) - want).abs() < 1e-9 * want);
        }
    }

    #[test]
    fn double_pole_is_rejected() {
        let g = RationalFunction::from_ints(&[1], &[1, -2, 1]).unwrap();
        assert!(matches!(
            dominant_form(&g),
            Err(AsymptoticError::UnsupportedShape(_))
        ));
    }

    #[test]
    fn closer_complex_pole_is_rejected() {
        // Poles at ±i/2 and 3/4.
        let den = &Poly::from_ints(&[1, 0, 4]) * &Poly::from_ints(&[3, -4]);
        let g = RationalFunction::new(Poly::one(), den).unwrap();
        assert!(matches!(
            dominant_form(&g),
            Err(AsymptoticError::UnsupportedShape(_))
        ));
    }

    #[test]
    fn alternating_two_pole_form() {
        // 1 / (1 - 4x^2) + 1 / (1 - x): poles ±1/2 dominate the pole at 1.
        let g = RationalFunction::from_ints(&[2, -1, -4], &[1, -1, -4, 4]).unwrap();
        let est = dominant_form(&g).unwrap();
        assert!((est.growth - 2.0).abs() < 1e-9);
        assert!((est.a - 0.5).abs() < 1e-9);
        assert!((est.b - 1.0).abs() < 1e-9);
        let terms = series_terms(&g, 16).unwrap();
        for (i, c) in terms.iter().enumerate() {
            let n = i + 1;
            let want = c.to_f64().unwrap();
            assert!((est.estimate(n) - want).abs() <= 1.0 + 1e-6, "n={n}");
        }
    }
}
