//! Dense univariate polynomials over exact coefficient domains.
//!
//! The coefficient domain is abstracted by [`Coefficient`], which is
//! implemented for [`BigInt`], [`BigRational`] and for `ExactPoly<R>` itself.
//! Nesting is how bivariate work is done: `ExactPoly<ExactPoly<BigInt>>` is a
//! polynomial in `t` whose coefficients are integer polynomials in `z`, and
//! the same subresultant code computes resultants in either setting.

mod sturm;

pub use sturm::{sturm_count, Bound, SturmChain};

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::PolyError;
use crate::real::Real;

/// The exact ring operations polynomial arithmetic needs.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Exact quotient, or `None` when `rhs` does not divide `self`.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;
    /// Sign relative to zero. For polynomials this is the sign of the
    /// leading coefficient.
    fn sign(&self) -> Ordering;

    fn pow(&self, mut exp: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.times(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.times(&base);
            }
        }
        acc
    }
}

impl Coefficient for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        Zero::is_zero(&r).then_some(q)
    }
    fn sign(&self) -> Ordering {
        self.cmp(&<BigInt as Zero>::zero())
    }
}

impl Coefficient for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        (!Zero::is_zero(rhs)).then(|| self / rhs)
    }
    fn sign(&self) -> Ordering {
        self.cmp(&<BigRational as Zero>::zero())
    }
}

/// Coefficient domains that embed into the rationals.
pub trait RationalCoefficient: Coefficient {
    fn to_rational(&self) -> BigRational;

    /// Nearest double-double style split `hi + lo` of the exact value.
    fn to_real<T: Real>(&self) -> T {
        let q = self.to_rational();
        let hi = q.to_f64().unwrap_or(f64::NAN);
        if !hi.is_finite() || hi == 0.0 {
            return T::from_f64(hi);
        }
        let rest = q - BigRational::from_float(hi).expect("finite");
        let lo = rest.to_f64().unwrap_or(0.0);
        T::from_f64(hi) + T::from_f64(lo)
    }
}

impl RationalCoefficient for BigInt {
    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }
}

impl RationalCoefficient for BigRational {
    fn to_rational(&self) -> BigRational {
        self.clone()
    }
}

/// A dense polynomial with coefficients in ascending degree order.
///
/// The zero polynomial is the empty coefficient vector; every other value has
/// a nonzero last coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactPoly<R> {
    coeffs: Vec<R>,
}

/// Integer-coefficient polynomial.
pub type IntPoly = ExactPoly<BigInt>;
/// Rational-coefficient polynomial.
pub type RatPoly = ExactPoly<BigRational>;

impl<R: Coefficient> ExactPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The polynomial `x`.
    pub fn var() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| R::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k).plus(&rhs.coeff(k))).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k).minus(&rhs.coeff(k))).collect())
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(R::negated).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.times(c)).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn pow(&self, exp: usize) -> Self {
        Coefficient::pow(self, exp)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.times(&R::from_i64(k as i64)))
                .collect(),
        )
    }

    /// Horner evaluation inside the coefficient domain.
    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc.times(x).plus(c))
    }

    /// Divide every coefficient exactly by `c`.
    pub fn div_exact_scalar(&self, c: &R) -> Option<Self> {
        self.coeffs
            .iter()
            .map(|a| a.div_exact(c))
            .collect::<Option<Vec<_>>>()
            .map(Self::new)
    }

    /// Pseudo-remainder: the remainder of `lead(divisor)^(deg self - deg divisor + 1) * self`
    /// divided by `divisor`.
    pub fn pseudo_rem(&self, divisor: &Self) -> Result<Self, PolyError> {
        let db = divisor.degree().ok_or(PolyError::ZeroPolynomial)?;
        let lb = divisor.lead().expect("nonzero").clone();
        let Some(da) = self.degree() else {
            return Ok(Self::zero());
        };
        if da < db {
            return Ok(self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut pending = da - db + 1;
        while rem.len() > db && !rem.is_empty() {
            let dr = rem.len() - 1;
            let lr = rem.pop().expect("nonempty");
            let shift = dr - db;
            for (i, c) in rem.iter_mut().enumerate() {
                let scaled = c.times(&lb);
                *c = if i >= shift {
                    scaled.minus(&lr.times(&divisor.coeffs[i - shift]))
                } else {
                    scaled
                };
            }
            while rem.last().is_some_and(Coefficient::is_zero) {
                rem.pop();
            }
            pending -= 1;
        }
        let rem = Self::new(rem);
        Ok(if pending == 0 { rem } else { rem.scale(&lb.pow(pending)) })
    }

    /// Exact polynomial division; `None` when the remainder is nonzero or a
    /// leading-coefficient quotient is inexact.
    pub fn div_exact_poly(&self, divisor: &Self) -> Option<Self> {
        let db = divisor.degree()?;
        let lb = divisor.lead()?;
        let mut rem = self.clone();
        let mut quot = vec![R::zero(); self.coeffs.len().saturating_sub(db)];
        while let Some(dr) = rem.degree() {
            if dr < db {
                return None;
            }
            let q = rem.lead()?.div_exact(lb)?;
            rem = rem.sub(&divisor.scale(&q).shift(dr - db));
            quot[dr - db] = q;
        }
        Some(Self::new(quot))
    }

    pub fn map<S: Coefficient>(&self, f: impl Fn(&R) -> S) -> ExactPoly<S> {
        ExactPoly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<R: Coefficient> Coefficient for ExactPoly<R> {
    fn zero() -> Self {
        ExactPoly::zero()
    }
    fn one() -> Self {
        ExactPoly::one()
    }
    fn from_i64(v: i64) -> Self {
        ExactPoly::constant(R::from_i64(v))
    }
    fn is_zero(&self) -> bool {
        ExactPoly::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.degree() == Some(0) {
            return self.div_exact_scalar(&rhs.coeffs[0]);
        }
        self.div_exact_poly(rhs)
    }
    fn sign(&self) -> Ordering {
        self.lead().map_or(Ordering::Equal, R::sign)
    }
}

impl<R: RationalCoefficient> ExactPoly<R> {
    pub fn to_rational(&self) -> RatPoly {
        self.map(R::to_rational)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(<BigRational as Zero>::zero(), |acc, c| acc * x + c.to_rational())
    }

    pub fn eval_complex<T: Real>(&self, x: Complex<T>) -> Complex<T> {
        self.coeffs.iter().rev().fold(Complex::new(T::zero(), T::zero()), |acc, c| {
            acc * x + Complex::new(c.to_real::<T>(), T::zero())
        })
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_real::<f64>())
    }
}

impl IntPoly {
    /// Positive gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(<BigInt as Zero>::zero(), |g, c| g.gcd(c))
    }

    /// Divide out the content, keeping the sign of the leading coefficient.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if Zero::is_zero(&c) || c.is_one() {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Primitive part with a positive leading coefficient.
    pub fn normalized(&self) -> Self {
        let p = self.primitive_part();
        if p.lead().is_some_and(|l| l.is_negative()) {
            p.neg()
        } else {
            p
        }
    }

    /// Greatest common divisor over Z[x] (primitive, positive leading coefficient).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.normalized(), other.normalized());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        let content = self.content().gcd(&other.content());
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).expect("b nonzero");
            a = b;
            b = r.normalized();
        }
        if a.is_zero() {
            return a;
        }
        let g = a.normalized();
        if Zero::is_zero(&content) {
            g
        } else {
            g.scale(&content)
        }
    }

    /// `self / gcd(self, self')`, primitive with positive leading coefficient.
    pub fn squarefree_part(&self) -> Self {
        let p = self.normalized();
        if p.degree().unwrap_or(0) == 0 {
            return p;
        }
        let g = p.gcd(&p.derivative()).normalized();
        p.div_exact_poly(&g)
            .expect("gcd divides its argument")
            .normalized()
    }

    /// Write in the variable `var`, highest degree first, e.g. `z^2-3z+1`.
    pub fn pretty(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if Zero::is_zero(c) {
                continue;
            }
            let neg = c.is_negative();
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let mag = c.abs();
            if k == 0 || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            match k {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{k}")),
            }
        }
        out
    }
}

impl RatPoly {
    /// Multiply through by the positive lcm of the denominators.
    pub fn clear_denominators(&self) -> IntPoly {
        let lcm = self
            .coeffs
            .iter()
            .fold(<BigInt as One>::one(), |l, c| l.lcm(c.denom()));
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
                .collect(),
        )
    }
}

/// Resultant via the subresultant pseudo-remainder sequence.
///
/// Works in any integral domain with exact division, in particular over
/// `Z` and over `Z[z]`.
pub fn resultant<R: Coefficient>(a: &ExactPoly<R>, b: &ExactPoly<R>) -> Result<R, PolyError> {
    if a.is_zero() || b.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut negate = false;
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
        if a.degree().unwrap() % 2 == 1 && b.degree().unwrap() % 2 == 1 {
            negate = true;
        }
    }
    let signed = |v: R, negate: bool| if negate { v.negated() } else { v };
    if b.degree() == Some(0) {
        return Ok(signed(b.coeffs[0].pow(a.degree().unwrap()), negate));
    }
    let mut g = R::one();
    let mut h = R::one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = a.pseudo_rem(&b)?;
        a = b;
        if r.is_zero() {
            return Ok(R::zero());
        }
        b = r
            .div_exact_scalar(&g.times(&h.pow(delta)))
            .ok_or(PolyError::InexactDivision)?;
        g = a.lead().unwrap().clone();
        if delta > 0 {
            h = g
                .pow(delta)
                .div_exact(&h.pow(delta - 1))
                .ok_or(PolyError::InexactDivision)?;
        }
        if b.degree() == Some(0) {
            let da = a.degree().unwrap();
            let last = b.coeffs[0]
                .pow(da)
                .div_exact(&h.pow(da - 1))
                .ok_or(PolyError::InexactDivision)?;
            return Ok(signed(last, negate));
        }
    }
}

/// `(-1)^(n(n-1)/2) * Res(p, p') / lead(p)`.
pub fn discriminant<R: Coefficient>(p: &ExactPoly<R>) -> Result<R, PolyError> {
    let n = p.degree().ok_or(PolyError::ZeroPolynomial)?;
    if n == 0 {
        return Err(PolyError::ConstantPolynomial);
    }
    let res = resultant(p, &p.derivative())?;
    let q = res
        .div_exact(p.lead().unwrap())
        .ok_or(PolyError::InexactDivision)?;
    Ok(if (n * (n - 1) / 2) % 2 == 1 { q.negated() } else { q })
}

impl<R: Coefficient> fmt::Debug for ExactPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.coeffs.iter().map(|c| c.to_string()))
            .finish()
    }
}

impl<R: Coefficient> fmt::Display for ExactPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Serialized as an array of exact decimal (or `p/q`) strings, ascending degree.
impl<R: Coefficient> Serialize for ExactPoly<R> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn zero_is_canonical() {
        assert!(ip(&[0, 0, 0]).is_zero());
        assert_eq!(ip(&[0]).degree(), None);
        assert_eq!(ip(&[1, 2, 0]).degree(), Some(1));
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(ip(&[1, 1]).mul(&ip(&[1, -1])), ip(&[1, 0, -1]));
        assert_eq!(ip(&[8, 1]).mul(&IntPoly::one()), ip(&[8, 1]));
        assert!(ip(&[3, 4]).mul(&IntPoly::zero()).is_zero());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(ip(&[8, 1]).eval(&BigInt::from(-3)), BigInt::from(5));
        assert!(Zero::is_zero(&ip(&[147, 2]).eval_rational(&rat(-147, 2))));
    }

    #[test]
    fn resultant_small_cases() {
        // Res(t - c, t - d) = c - d
        let r = resultant(&ip(&[-5, 1]), &ip(&[-2, 1])).unwrap();
        assert_eq!(r, BigInt::from(3));
        assert_eq!(resultant(&ip(&[-1, 0, 1]), &ip(&[-4, 0, 1])).unwrap(), BigInt::from(9));
        assert!(matches!(
            resultant(&IntPoly::zero(), &ip(&[1, 1])),
            Err(PolyError::ZeroPolynomial)
        ));
        // deg(a) < deg(b), both odd: Res(b, a) = -Res(a, b)
        let a = ip(&[1, 2, 0, 1]);
        let b = ip(&[-3, 1]);
        let ab = resultant(&a, &b).unwrap();
        let ba = resultant(&b, &a).unwrap();
        assert_eq!(ab, -ba);
    }

    #[test]
    fn quadratic_discriminant() {
        // t^2 + b t + c with b = 5, c = 3
        assert_eq!(discriminant(&ip(&[3, 5, 1])).unwrap(), BigInt::from(25 - 12));
        assert_eq!(discriminant(&ip(&[1, -2, 1])).unwrap(), BigInt::from(0));
        assert!(matches!(
            discriminant(&ip(&[7])),
            Err(PolyError::ConstantPolynomial)
        ));
    }

    #[test]
    fn cubic_discriminant_matches_closed_form() {
        // t^3 + p t + q: -4p^3 - 27q^2
        let (p, q) = (-7i64, 6i64);
        let expected = -4 * p.pow(3) - 27 * q.pow(2);
        assert_eq!(discriminant(&ip(&[q, p, 0, 1])).unwrap(), BigInt::from(expected));
    }

    #[test]
    fn pseudo_remainder_identity() {
        let a = ip(&[1, -3, 0, 5, 2]);
        let b = ip(&[2, 0, 3]);
        let r = a.pseudo_rem(&b).unwrap();
        // 3^3 a - r must be divisible by b
        let lhs = a.scale(&BigInt::from(27)).sub(&r);
        assert!(lhs.div_exact_poly(&b).is_some());
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = ip(&[-1, 1]).mul(&ip(&[2, 1])).mul(&ip(&[2, 1]));
        let b = ip(&[2, 1]).mul(&ip(&[5, 0, 1]));
        assert_eq!(a.gcd(&b), ip(&[2, 1]));
        assert_eq!(a.squarefree_part(), ip(&[-1, 1]).mul(&ip(&[2, 1])));
        assert_eq!(ip(&[-4, -2]).normalized(), ip(&[2, 1]));
    }

    #[test]
    fn bivariate_division() {
        // (t z + 1) * (t - z) / (t - z)
        let z = IntPoly::var();
        let f = ExactPoly::new(vec![IntPoly::one(), z.clone()]);
        let g = ExactPoly::new(vec![z.neg(), IntPoly::one()]);
        assert_eq!(f.mul(&g).div_exact_poly(&g), Some(f));
    }

    #[test]
    fn pretty_printing() {
        assert_eq!(ip(&[147, 2]).pretty("z"), "2z+147");
        assert_eq!(ip(&[1, -3, 1]).pretty("z"), "z^2-3z+1");
        assert_eq!(IntPoly::zero().pretty("z"), "0");
        assert_eq!(ip(&[0, -1]).pretty("t"), "-t");
    }

    #[test]
    fn clear_denominators_is_positive_multiple() {
        let p = RatPoly::new(vec![rat(1, 2), rat(-2, 3), rat(5, 1)]);
        assert_eq!(p.clear_denominators(), ip(&[3, -4, 30]));
    }

    #[test]
    fn serializes_as_strings() {
        let s = serde_json::to_string(&ip(&[147, 2])).unwrap();
        assert_eq!(s, r#"["147","2"]"#);
        let s = serde_json::to_string(&RatPoly::new(vec![rat(-1, 2), rat(0, 1), rat(3, 2)])).unwrap();
        assert_eq!(s, r#"["-1/2","0","3/2"]"#);
    }
}
