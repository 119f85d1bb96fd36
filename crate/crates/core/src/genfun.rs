//! Coefficients of `D(t, z)^(-alpha)` as polynomials in `z`.
//!
//! With `F = D^(-alpha)` we have `D F' = -alpha D' F`, which gives the
//! recurrence
//!
//! ```text
//! j c_j = - sum_{k=1..4} d_k ((j - k) + alpha k) c_{j-k},   c_0 = 1,
//! ```
//!
//! exact for every rational `alpha`. For `alpha = 1` the plain linear
//! recurrence `P_m = 14 P_{m-1} - (49 - 2z) P_{m-2} + (2z + 36) P_{m-3} - z^2 P_{m-4}`
//! stays in integer arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::SeriesError;
use crate::exactpoly::{Coefficient, ExactPoly, IntPoly, RatPoly};

/// `[d_0, .., d_4]`, the coefficients of `t^k` in `D(t, z)`.
pub fn denominator_coeffs() -> [IntPoly; 5] {
    [
        IntPoly::from_i64s(&[1]),
        IntPoly::from_i64s(&[-14]),
        IntPoly::from_i64s(&[49, -2]),
        IntPoly::from_i64s(&[-36, -2]),
        IntPoly::from_i64s(&[0, 0, 1]),
    ]
}

/// `D(t, z)` as a polynomial in `t` over `Z[z]`.
pub fn denominator() -> ExactPoly<IntPoly> {
    ExactPoly::new(denominator_coeffs().to_vec())
}

/// `D(t, z0)` as a polynomial in `t` for a rational `z0`.
pub fn denominator_at(z: &BigRational) -> RatPoly {
    RatPoly::new(
        denominator_coeffs()
            .iter()
            .map(|d| d.eval_rational(z))
            .collect(),
    )
}

/// The expected discriminant of `D` in `t`: `-256 (z-4) (4z-15)^2 (4z+9)^2`.
pub fn expected_discriminant() -> IntPoly {
    let a = IntPoly::from_i64s(&[-4, 1]);
    let b = IntPoly::from_i64s(&[-15, 4]);
    let c = IntPoly::from_i64s(&[9, 4]);
    a.mul(&b.pow(2))
        .mul(&c.pow(2))
        .scale(&BigInt::from(-256))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlphaSeries {
    #[serde(serialize_with = "ser_rational")]
    alpha: BigRational,
    coeffs: Vec<RatPoly>,
}

fn ser_rational<S: serde::Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

impl AlphaSeries {
    pub fn alpha(&self) -> &BigRational {
        &self.alpha
    }

    /// Coefficient polynomials, index `m` is the coefficient of `t^m`.
    pub fn coeffs(&self) -> &[RatPoly] {
        &self.coeffs
    }

    /// Each coefficient scaled by the positive lcm of its denominators.
    pub fn integer_coeffs(&self) -> Vec<IntPoly> {
        self.coeffs.iter().map(RatPoly::clear_denominators).collect()
    }
}

pub fn alpha_coeffs(alpha: &BigRational, m_max: usize) -> Result<AlphaSeries, SeriesError> {
    if !alpha.is_positive() {
        return Err(SeriesError::NonPositiveAlpha(alpha.to_string()));
    }
    let d: Vec<RatPoly> = denominator_coeffs().iter().map(IntPoly::to_rational).collect();
    let mut c: Vec<RatPoly> = Vec::with_capacity(m_max + 1);
    c.push(RatPoly::one());
    for j in 1..=m_max {
        let mut acc = RatPoly::zero();
        for k in 1..=j.min(4) {
            let weight = BigRational::from_integer(BigInt::from(j - k))
                + alpha * BigRational::from_integer(BigInt::from(k));
            acc = acc.add(&d[k].mul(&c[j - k]).scale(&weight));
        }
        let inv_j = -BigRational::new(<BigInt as One>::one(), BigInt::from(j));
        c.push(acc.scale(&inv_j));
    }
    Ok(AlphaSeries {
        alpha: alpha.clone(),
        coeffs: c,
    })
}

/// `P_0..=P_m_max` from the direct integer recurrence.
pub fn pseq(m_max: usize) -> Vec<IntPoly> {
    let d = denominator_coeffs();
    let mut p: Vec<IntPoly> = Vec::with_capacity(m_max + 1);
    p.push(IntPoly::one());
    for m in 1..=m_max {
        let mut acc = IntPoly::zero();
        for k in 1..=m.min(4) {
            acc = acc.sub(&d[k].mul(&p[m - k]));
        }
        p.push(acc);
    }
    p
}

/// True iff `deg seq[m] <= floor(m/2)` for every `m`.
pub fn degree_check<R: Coefficient>(seq: &[ExactPoly<R>]) -> bool {
    seq.iter()
        .enumerate()
        .all(|(m, p)| p.degree().is_none_or(|d| d <= m / 2))
}

/// Truncated product of two series in `t` with polynomial coefficients.
pub fn series_mul<R: Coefficient>(a: &[ExactPoly<R>], b: &[ExactPoly<R>], order: usize) -> Vec<ExactPoly<R>> {
    (0..=order)
        .map(|n| {
            (0..=n).fold(ExactPoly::zero(), |acc, k| match (a.get(k), b.get(n - k)) {
                (Some(x), Some(y)) => acc.add(&x.mul(y)),
                _ => acc,
            })
        })
        .collect()
}

/// `[1, 0, 0, ..]` of length `order + 1`.
pub fn unit_series<R: Coefficient>(order: usize) -> Vec<ExactPoly<R>> {
    let mut out = vec![ExactPoly::zero(); order + 1];
    out[0] = ExactPoly::one();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn pseq_first_terms() {
        let p = pseq(3);
        assert_eq!(p[0], ip(&[1]));
        assert_eq!(p[1], ip(&[14]));
        assert_eq!(p[2], ip(&[147, 2]));
        assert_eq!(p[3], ip(&[1408, 58]));
    }

    #[test]
    fn alpha_one_first_terms() {
        let s = alpha_coeffs(&q(1, 1), 3).unwrap();
        let expected: Vec<RatPoly> = pseq(3).iter().map(IntPoly::to_rational).collect();
        assert_eq!(s.coeffs(), &expected[..]);
    }

    #[test]
    fn alpha_half_first_terms() {
        let s = alpha_coeffs(&q(1, 2), 2).unwrap();
        assert_eq!(s.coeffs()[0], RatPoly::one());
        assert_eq!(s.coeffs()[1], RatPoly::from_i64s(&[7]));
        assert_eq!(s.coeffs()[2], RatPoly::from_i64s(&[49, 1]));
    }

    #[test]
    fn constant_term_is_one() {
        for a in [q(1, 4), q(3, 1), q(7, 5)] {
            assert_eq!(alpha_coeffs(&a, 0).unwrap().coeffs(), &[RatPoly::one()]);
        }
    }

    #[test]
    fn rejects_non_positive_alpha() {
        assert!(alpha_coeffs(&q(0, 1), 3).is_err());
        assert!(alpha_coeffs(&q(-1, 2), 3).is_err());
    }

    #[test]
    fn degree_check_flags_violation() {
        assert!(!degree_check(&[ip(&[1]), ip(&[0, 0, 1])]));
        assert!(degree_check(&pseq(40)));
    }

    #[test]
    fn denominator_at_minus_three() {
        assert_eq!(
            denominator_at(&q(-3, 1)),
            RatPoly::from_i64s(&[1, -14, 55, -30, 9])
        );
    }

    #[test]
    fn limit_at_minus_nine_quarters_is_square() {
        // D(t, -9/4) = (9t^2 - 28t + 4)^2 / 16
        let sq = RatPoly::from_i64s(&[4, -28, 9]).pow(2).scale(&q(1, 16));
        assert_eq!(denominator_at(&q(-9, 4)), sq);
    }
}
