//! Sturm chains and exact real-root counting.
//!
//! Chains are built over Z from the squarefree part, with the content of
//! every pseudo-remainder stripped. Each element is a positive rational
//! multiple of the classical negated remainder, so sign variations are
//! unchanged.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{IntPoly, RatPoly};
use crate::error::PolyError;

/// An endpoint on the extended real line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(BigRational),
    PosInf,
}

impl Bound {
    pub fn finite(n: i64, d: i64) -> Self {
        Bound::Finite(BigRational::new(n.into(), d.into()))
    }

    pub fn int(n: i64) -> Self {
        Bound::Finite(BigRational::from_integer(n.into()))
    }
}

impl PartialOrd for Bound {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Bound {
    fn cmp(&self, other: &Self) -> Ordering {
        use Bound::*;
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (_, NegInf) | (PosInf, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
    source: IntPoly,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> Result<Self, PolyError> {
        if p.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        // Most inputs are squarefree, which the chain itself proves (its
        // last element is then a constant), so try that before paying for
        // a separate gcd.
        let direct = Self::build(p.normalized());
        if direct.chain.last().is_some_and(|q| q.degree() == Some(0)) {
            return Ok(direct);
        }
        Ok(Self::build(p.squarefree_part()))
    }

    fn build(source: IntPoly) -> Self {
        let mut chain = vec![source.clone()];
        if source.degree() == Some(0) {
            return Self { chain, source };
        }
        chain.push(source.derivative().normalized());
        loop {
            let n = chain.len();
            let (prev, cur) = (&chain[n - 2], &chain[n - 1]);
            let rem = prev.pseudo_rem(cur).expect("chain elements are nonzero");
            if rem.is_zero() {
                break;
            }
            // prem multiplies by lead(cur)^e; recover the sign of the true
            // remainder, then negate.
            let e = prev.degree().unwrap() - cur.degree().unwrap() + 1;
            let multiplier_negative = cur.lead().unwrap().is_negative() && e % 2 == 1;
            let next = rem.primitive_part();
            chain.push(if multiplier_negative { next } else { next.neg() });
        }
        Self { chain, source }
    }

    pub fn from_rational(p: &RatPoly) -> Result<Self, PolyError> {
        Self::new(&p.clear_denominators())
    }

    pub fn chain(&self) -> &[IntPoly] {
        &self.chain
    }

    /// The squarefree polynomial whose roots are counted.
    pub fn source(&self) -> &IntPoly {
        &self.source
    }

    /// Number of sign changes along the chain at `x`, zeros dropped.
    pub fn variations(&self, x: &Bound) -> usize {
        let mut last = Ordering::Equal;
        let mut count = 0;
        for p in &self.chain {
            let s = sign_at(p, x);
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

    /// Distinct real roots in `(lo, hi]`.
    pub fn count(&self, lo: &Bound, hi: &Bound) -> Result<usize, PolyError> {
        if lo >= hi {
            return Err(PolyError::EmptyInterval);
        }
        // V(x) equals V(x+) for squarefree input, so the difference counts
        // roots in the half-open interval.
        Ok(self.variations(lo) - self.variations(hi))
    }

    /// Cauchy bound: every real root lies strictly inside `(-B, B)`.
    pub fn root_bound(&self) -> BigRational {
        let p = &self.source;
        let lead = p.lead().expect("nonzero").abs();
        let max = p
            .coeffs()
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero);
        BigRational::one() + BigRational::new(max, lead)
    }

    /// Disjoint intervals `(a, b]`, each holding exactly one root, with
    /// `b - a <= width`. Infinite endpoints are clamped to the root bound.
    pub fn isolate(
        &self,
        lo: &Bound,
        hi: &Bound,
        width: &BigRational,
    ) -> Result<Vec<(BigRational, BigRational)>, PolyError> {
        if lo >= hi {
            return Err(PolyError::EmptyInterval);
        }
        let b = self.root_bound();
        let clamp = |x: &Bound| match x {
            Bound::NegInf => -b.clone(),
            Bound::PosInf => b.clone(),
            Bound::Finite(v) => v.clone().clamp(-b.clone(), b.clone()),
        };
        let (a, c) = (clamp(lo), clamp(hi));
        let mut out = Vec::new();
        if a < c {
            self.bisect(a, c, width, &mut out);
        }
        Ok(out)
    }

    fn bisect(
        &self,
        a: BigRational,
        b: BigRational,
        width: &BigRational,
        out: &mut Vec<(BigRational, BigRational)>,
    ) {
        let n = self
            .count(&Bound::Finite(a.clone()), &Bound::Finite(b.clone()))
            .expect("a < b");
        if n == 0 {
            return;
        }
        if n == 1 && &(&b - &a) <= width {
            out.push((a, b));
            return;
        }
        let mid = (&a + &b) / BigRational::from_integer(2.into());
        self.bisect(a, mid.clone(), width, out);
        self.bisect(mid, b, width, out);
    }
}

/// Sign of `p(x)`; at infinity this is the sign of the leading term.
pub(crate) fn sign_at(p: &IntPoly, x: &Bound) -> Ordering {
    let Some(deg) = p.degree() else {
        return Ordering::Equal;
    };
    let lead_sign = p.lead().unwrap().cmp(&BigInt::zero());
    match x {
        Bound::PosInf => lead_sign,
        Bound::NegInf => {
            if deg % 2 == 0 {
                lead_sign
            } else {
                lead_sign.reverse()
            }
        }
        Bound::Finite(v) => {
            // sign(p(n/d)) = sign(sum a_i n^i d^(deg-i)) since d > 0.
            let (n, d) = (v.numer(), v.denom());
            let mut acc = BigInt::zero();
            let mut dpow = BigInt::one();
            let coeffs = p.coeffs();
            for (k, c) in coeffs.iter().enumerate().rev() {
                acc = acc * n + c * &dpow;
                if k > 0 {
                    dpow *= d;
                }
            }
            acc.cmp(&BigInt::zero())
        }
    }
}

/// Distinct real roots of `p` in `(lo, hi]`.
pub fn sturm_count(p: &RatPoly, lo: &Bound, hi: &Bound) -> Result<usize, PolyError> {
    SturmChain::from_rational(p)?.count(lo, hi)
}
