//! Real-root isolation with exact rational arithmetic.
//!
//! Roots are counted with a Sturm sequence of the squarefree part, split by
//! bisection until every interval holds exactly one root, then narrowed by
//! sign-change bisection. Interval endpoints are never roots unless the
//! interval is a single exact point.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::{rational_to_f64, Poly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("the zero polynomial has no isolated roots")]
    ZeroPolynomial,
    #[error("interval is empty or the requested width is not positive")]
    BadInterval,
    #[error("polynomial has a root on the circle |x| = {0}")]
    RootOnCircle(String),
}

/// A rational interval holding exactly one root: `lo < root < hi`, or
/// `lo == hi == root`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn value(&self) -> f64 {
        rational_to_f64(&self.midpoint())
    }

    pub fn contains(&self, other: &RootInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn negated(&self) -> RootInterval {
        RootInterval {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }
}

fn sign(v: &BigRational) -> Ordering {
    v.cmp(&BigRational::zero())
}

/// Sturm sequence `p, p', -rem(p, p'), ...`.
pub fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let mut seq = vec![p.clone(), p.derivative()];
    while !seq[seq.len() - 1].is_zero() {
        let n = seq.len();
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]).expect("nonzero divisor");
        if r.is_zero() {
            break;
        }
        seq.push(-&r);
    }
    if seq.last().is_some_and(Poly::is_zero) {
        seq.pop();
    }
    seq
}

fn variations(seq: &[Poly], x: &BigRational) -> usize {
    let mut count = 0;
    let mut last = Ordering::Equal;
    for p in seq {
        let s = sign(&p.eval(x));
        if s == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Distinct real roots of the squarefree polynomial behind `seq` in `(a, b]`.
fn count_in(seq: &[Poly], a: &BigRational, b: &BigRational) -> usize {
    variations(seq, a) - variations(seq, b)
}

fn half(a: &BigRational, b: &BigRational) -> BigRational {
    (a + b) / BigRational::from_integer(BigInt::from(2))
}

/// Radius `d` such that `x` is the only root of `q` in `[x - d, x + d]`.
fn clearance(seq: &[Poly], q: &Poly, x: &BigRational, limit: &BigRational) -> BigRational {
    let mut d = limit.clone();
    loop {
        let lo = x - &d;
        let hi = x + &d;
        if q.eval(&lo).is_zero() || q.eval(&hi).is_zero() || count_in(seq, &lo, &hi) != 1 {
            d /= BigRational::from_integer(BigInt::from(2));
            continue;
        }
        return d;
    }
}

/// Isolates every real root of `p` in the closed interval `[lo, hi]` to
/// intervals no wider than `width`, sorted ascending.
pub fn isolate_real_roots(
    p: &Poly,
    lo: &BigRational,
    hi: &BigRational,
    width: &BigRational,
) -> Result<Vec<RootInterval>, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    if lo > hi || !width.is_positive() {
        return Err(RootError::BadInterval);
    }
    let q = p.squarefree_part();
    if q.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let seq = sturm_sequence(&q);
    let mut found: Vec<RootInterval> = Vec::new();
    // Pending half-open intervals (a, b] with a, b not roots.
    let mut pending: Vec<(BigRational, BigRational)> = Vec::new();

    let mut a = lo.clone();
    let mut b = hi.clone();
    let span = hi - lo;
    if q.eval(&a).is_zero() {
        found.push(RootInterval {
            lo: a.clone(),
            hi: a.clone(),
        });
        if a == b {
            return Ok(found);
        }
        let d = clearance(&seq, &q, &a, &half(&BigRational::zero(), &span));
        a = &a + &d;
    }
    if q.eval(&b).is_zero() {
        found.push(RootInterval {
            lo: b.clone(),
            hi: b.clone(),
        });
        let d = clearance(&seq, &q, &b, &half(&BigRational::zero(), &span));
        b = &b - &d;
    }
    if a < b {
        pending.push((a, b));
    }

    while let Some((a, b)) = pending.pop() {
        let count = count_in(&seq, &a, &b);
        if count == 0 {
            continue;
        }
        if count == 1 {
            found.push(refine(&q, a, b, width));
            continue;
        }
        let mid = half(&a, &b);
        if q.eval(&mid).is_zero() {
            let d = clearance(&seq, &q, &mid, &half(&BigRational::zero(), &(&b - &a)));
            found.push(RootInterval {
                lo: mid.clone(),
                hi: mid.clone(),
            });
            pending.push((a, &mid - &d));
            pending.push((&mid + &d, b));
        } else {
            pending.push((a, mid.clone()));
            pending.push((mid, b));
        }
    }
    found.sort_by(|x, y| x.lo.cmp(&y.lo));
    Ok(found)
}

/// Narrows `(a, b]`, which holds exactly one simple root and has non-root
/// endpoints, by sign-change bisection.
fn refine(q: &Poly, mut a: BigRational, mut b: BigRational, width: &BigRational) -> RootInterval {
    let sa = sign(&q.eval(&a));
    debug_assert_ne!(sa, sign(&q.eval(&b)));
    while &(&b - &a) > width {
        let mid = half(&a, &b);
        let sm = sign(&q.eval(&mid));
        if sm == Ordering::Equal {
            return RootInterval {
                lo: mid.clone(),
                hi: mid,
            };
        }
        if sm == sa {
            a = mid;
        } else {
            b = mid;
        }
    }
    RootInterval { lo: a, hi: b }
}

/// Cauchy bound: every root satisfies `|x| <= bound`.
pub fn root_bound(p: &Poly) -> BigRational {
    let lead = p.leading().expect("nonzero polynomial").abs();
    let max = p
        .coeffs()
        .iter()
        .rev()
        .skip(1)
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(BigRational::zero);
    BigRational::one() + max
}

/// Number of roots of `p` with `|x| < radius`, by the Schur–Cohn
/// recursion applied to `p(radius · w)`.
pub fn roots_in_disk(p: &Poly, radius: &BigRational) -> Result<usize, RootError> {
    let q = p.scale_variable(radius);
    let degree = q.degree().ok_or(RootError::ZeroPolynomial)?;
    // Formal coefficient vector: the degree drops by one per step even when
    // the new leading coefficient happens to vanish.
    let mut f: Vec<BigRational> = q.coeffs().to_vec();
    let mut product = BigRational::one();
    let mut inside = 0;
    for _ in 0..degree {
        let k = f.len() - 1;
        let a0 = f[0].clone();
        let ak = f[k].clone();
        let next: Vec<BigRational> = (0..k).map(|i| &a0 * &f[i] - &ak * &f[k - i]).collect();
        let delta = next[0].clone();
        if delta.is_zero() {
            return Err(RootError::RootOnCircle(radius.to_string()));
        }
        product *= &delta;
        if product.is_negative() {
            inside += 1;
        }
        f = next;
    }
    Ok(inside)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn tiny() -> BigRational {
        r(1, 1_000_000_000_000)
    }

    #[test]
    fn linear_root_is_exact() {
        let p = Poly::from_ints(&[-1, 1]);
        let roots = isolate_real_roots(&p, &r(0, 1), &r(2, 1), &tiny()).unwrap();
        assert_eq!(roots.len(), 1);
        assert!(roots[0].is_exact());
        assert_eq!(roots[0].lo, r(1, 1));
    }

    #[test]
    fn quartic_factor_roots() {
        let p = Poly::from_ints(&[-1, 0, 3, 0, 1]);
        let roots = isolate_real_roots(&p, &r(-2, 1), &r(2, 1), &tiny()).unwrap();
        assert_eq!(roots.len(), 2);
        let z = roots[1].value();
        assert!((1.0 / z - 1.817354022).abs() < 1e-8, "{z}");
        assert!((roots[0].value() + z).abs() < 1e-12);

        let p = Poly::from_ints(&[-1, 0, 2, 0, 1]);
        let roots = isolate_real_roots(&p, &r(0, 1), &r(2, 1), &tiny()).unwrap();
        assert_eq!(roots.len(), 1);
        let want = (2f64.sqrt() - 1.0).sqrt();
        assert!((roots[0].value() - want).abs() < 1e-12);
        assert!((roots[0].value() - 0.643594).abs() < 1e-6);
    }

    #[test]
    fn repeated_and_endpoint_roots() {
        // (x - 1)^2 (x + 1) x
        let p = Poly::product_of(&[&[-1, 1], &[-1, 1], &[1, 1], &[0, 1]]);
        let roots = isolate_real_roots(&p, &r(-1, 1), &r(1, 1), &tiny()).unwrap();
        let values: Vec<BigRational> = roots.iter().map(|i| i.lo.clone()).collect();
        assert_eq!(values, vec![r(-1, 1), r(0, 1), r(1, 1)]);
        assert!(roots.iter().all(RootInterval::is_exact));
    }

    #[test]
    fn intervals_bracket_sign_changes() {
        let p = Poly::from_ints(&[-1, 3, 1]);
        let roots = isolate_real_roots(&p, &r(-10, 1), &r(10, 1), &r(1, 1000)).unwrap();
        assert_eq!(roots.len(), 2);
        for iv in &roots {
            assert!(iv.width() <= r(1, 1000));
            assert_ne!(sign(&p.eval(&iv.lo)), sign(&p.eval(&iv.hi)));
        }
    }

    #[test]
    fn bad_inputs() {
        assert_eq!(
            isolate_real_roots(&Poly::zero(), &r(0, 1), &r(1, 1), &tiny()),
            Err(RootError::ZeroPolynomial)
        );
        let p = Poly::from_ints(&[-1, 1]);
        assert_eq!(
            isolate_real_roots(&p, &r(1, 1), &r(0, 1), &tiny()),
            Err(RootError::BadInterval)
        );
        assert!(
            isolate_real_roots(&Poly::from_ints(&[3]), &r(0, 1), &r(1, 1), &tiny())
                .unwrap()
                .is_empty()
        );
    }

    #[test]
    fn schur_cohn_counts() {
        // (w - 1/2)(w - 3)
        let p = Poly::new(vec![r(3, 2), r(-7, 2), r(1, 1)]);
        assert_eq!(roots_in_disk(&p, &r(1, 1)), Ok(1));
        assert_eq!(roots_in_disk(&p, &r(4, 1)), Ok(2));
        assert_eq!(roots_in_disk(&p, &r(1, 4)), Ok(0));
        // w^2 + 4: roots ±2i
        let p = Poly::from_ints(&[4, 0, 1]);
        assert_eq!(roots_in_disk(&p, &r(1, 1)), Ok(0));
        assert_eq!(roots_in_disk(&p, &r(3, 1)), Ok(2));
        // x^2 - x + 1 has both roots on |x| = 1
        assert!(roots_in_disk(&Poly::from_ints(&[1, -1, 1]), &r(1, 1)).is_err());
        // (x - 1/2)(x + 1/3)(x^2 + 9)
        let p = &Poly::new(vec![r(-1, 6), r(-1, 6), r(1, 1)]) * &Poly::from_ints(&[9, 0, 1]);
        assert_eq!(roots_in_disk(&p, &r(1, 1)), Ok(2));
        assert_eq!(roots_in_disk(&p, &r(4, 1)), Ok(4));
    }
}
