//! Property tests for exact arithmetic. Sturm counts, resultants and
//! discriminants are checked against polynomials assembled from known roots.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use queenpoly::exactpoly::{discriminant, resultant};
use queenpoly::{Bound, IntPoly, RatPoly, SturmChain};

fn int_poly(max_deg: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-50i64..=50, 0..=max_deg + 1).prop_map(|c| IntPoly::from_i64s(&c))
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Product of `(x - r)` over the given integer roots, times `x^2 + c` for
/// each positive `c` (no real roots).
fn from_roots(roots: &[i64], quadratics: &[i64]) -> IntPoly {
    let mut p = IntPoly::one();
    for &r in roots {
        p = p.mul(&IntPoly::from_i64s(&[-r, 1]));
    }
    for &c in quadratics {
        p = p.mul(&IntPoly::from_i64s(&[c, 0, 1]));
    }
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_laws(a in int_poly(5), b in int_poly(5), c in int_poly(5)) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.mul(&IntPoly::one()), a.clone());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in int_poly(6), b in int_poly(6), n in -20i64..20, d in 1i64..9) {
        let x = rat(n, d);
        let (va, vb) = (a.eval_rational(&x), b.eval_rational(&x));
        prop_assert_eq!(a.mul(&b).eval_rational(&x), &va * &vb);
        prop_assert_eq!(a.add(&b).eval_rational(&x), va + vb);
    }

    #[test]
    fn exact_division_recovers_factor(a in int_poly(5), b in int_poly(4)) {
        prop_assume!(!b.is_zero());
        let prod = a.mul(&b);
        prop_assert_eq!(prod.div_exact_poly(&b), Some(a));
    }

    #[test]
    fn sturm_counts_known_roots(
        roots in prop::collection::vec(-12i64..=12, 0..=6),
        quads in prop::collection::vec(1i64..=9, 0..=2),
        lo in -15i64..=15,
        width in 1i64..=20,
    ) {
        let p = from_roots(&roots, &quads);
        let hi = lo + width;
        let mut distinct = roots.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let chain = SturmChain::new(&p).unwrap();
        let inside = distinct.iter().filter(|&&r| lo < r && r <= hi).count();
        prop_assert_eq!(chain.count(&Bound::int(lo), &Bound::int(hi)).unwrap(), inside);
        prop_assert_eq!(chain.count(&Bound::NegInf, &Bound::PosInf).unwrap(), distinct.len());
        let below = distinct.iter().filter(|&&r| r <= lo).count();
        prop_assert_eq!(chain.count(&Bound::NegInf, &Bound::int(lo)).unwrap(), below);
    }

    #[test]
    fn sturm_counts_half_integer_roots(
        numer in prop::collection::vec(-25i64..=25, 1..=5),
        scale in 1i64..=7,
    ) {
        // roots n/2, scaled by a positive constant
        let mut p = IntPoly::from_i64s(&[scale]);
        for &n in &numer {
            p = p.mul(&IntPoly::from_i64s(&[-n, 2]));
        }
        let mut distinct = numer.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let chain = SturmChain::new(&p).unwrap();
        let split = Bound::finite(1, 4);
        let positive = distinct.iter().filter(|&&n| 2 * n > 1).count();
        prop_assert_eq!(chain.count(&split, &Bound::PosInf).unwrap(), positive);
    }

    #[test]
    fn resultant_matches_root_product(
        roots in prop::collection::vec(-6i64..=6, 1..=4),
        lead in prop::sample::select(vec![-3i64, -1, 1, 2, 5]),
        b in int_poly(4),
    ) {
        prop_assume!(b.degree().is_some());
        let a = from_roots(&roots, &[]).scale(&BigInt::from(lead));
        // Res(a, b) = lead(a)^deg(b) * prod b(r)
        let expected = roots
            .iter()
            .fold(BigInt::from(lead).pow(b.degree().unwrap() as u32), |acc, &r| acc * b.eval(&BigInt::from(r)));
        prop_assert_eq!(resultant(&a, &b).unwrap(), expected);
    }

    #[test]
    fn discriminant_vanishes_iff_repeated_root(roots in prop::collection::vec(-8i64..=8, 2..=5)) {
        let p = from_roots(&roots, &[]);
        let mut distinct = roots.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let disc = discriminant(&p).unwrap();
        prop_assert_eq!(disc.is_zero(), distinct.len() < roots.len());
        // monic: disc = prod_{i<j} (r_i - r_j)^2
        let mut expected = BigInt::one();
        for i in 0..roots.len() {
            for j in i + 1..roots.len() {
                expected *= BigInt::from(roots[i] - roots[j]).pow(2);
            }
        }
        prop_assert_eq!(disc, expected);
    }

    #[test]
    fn squarefree_part_has_same_distinct_roots(roots in prop::collection::vec(-5i64..=5, 1..=6)) {
        let p = from_roots(&roots, &[1]);
        let sf = p.squarefree_part();
        let mut distinct = roots.clone();
        distinct.sort_unstable();
        distinct.dedup();
        prop_assert_eq!(sf.degree(), Some(distinct.len() + 2));
        prop_assert!(p.div_exact_poly(&sf).is_some());
    }

    #[test]
    fn rational_chain_matches_cleared(c in prop::collection::vec((-9i64..=9, 1i64..=6), 2..=6)) {
        let p = RatPoly::new(c.iter().map(|&(n, d)| rat(n, d)).collect());
        prop_assume!(p.degree().unwrap_or(0) >= 1);
        let a = SturmChain::from_rational(&p).unwrap();
        let b = SturmChain::new(&p.clear_denominators()).unwrap();
        for x in [Bound::NegInf, Bound::int(-3), Bound::finite(1, 3), Bound::PosInf] {
            prop_assert_eq!(a.variations(&x), b.variations(&x));
        }
    }
}

#[test]
fn isolating_intervals_are_disjoint_and_exact() {
    let p = from_roots(&[-7, -1, 0, 3, 4], &[2]);
    let chain = SturmChain::new(&p).unwrap();
    let iv = chain.isolate(&Bound::NegInf, &Bound::PosInf, &rat(1, 64)).unwrap();
    assert_eq!(iv.len(), 5);
    for w in iv.windows(2) {
        assert!(w[0].1 <= w[1].0);
    }
    for ((a, b), r) in iv.iter().zip([-7, -1, 0, 3, 4]) {
        let r = BigRational::from_integer(r.into());
        assert!(a < &r && &r <= b && b - a <= rat(1, 64));
    }
}
