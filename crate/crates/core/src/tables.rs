//! Rook and queen polynomial tables.
//!
//! Both tables come from a linear recurrence in `(m, n)` with constant
//! integer coefficients except for one term carrying the variable `z`:
//!
//! ```text
//! rook:  P(m,n) = 2P(m-1,n) + 2P(m,n-1) + z P(m-1,n-1)
//! queen: Q(m,n) = 2Q(m-1,n) + 2Q(m,n-1) - Q(m-1,n-1)
//!                 - 3Q(m-2,n-1) - 3Q(m-1,n-2) + z Q(m-2,n-2)
//! ```
//!
//! with value 1 at the origin and 0 at negative indices. Equivalently the
//! tables are the coefficients of `1 / (1 - sum c(i,j) s^i t^j)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::exactpoly::{IntPoly, RatPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum TableKind {
    Rook,
    Queen,
}

impl TableKind {
    /// `(di, dj, c)` such that `T(m,n) = sum c * T(m-di, n-dj)`.
    pub fn recurrence(self) -> Vec<(usize, usize, IntPoly)> {
        let c = |v: i64| IntPoly::from_i64s(&[v]);
        let z = IntPoly::var();
        match self {
            TableKind::Rook => vec![(1, 0, c(2)), (0, 1, c(2)), (1, 1, z)],
            TableKind::Queen => vec![
                (1, 0, c(2)),
                (0, 1, c(2)),
                (1, 1, c(-1)),
                (2, 1, c(-3)),
                (1, 2, c(-3)),
                (2, 2, z),
            ],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TableKind::Rook => "rook",
            TableKind::Queen => "queen",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PolyTable {
    kind: TableKind,
    entries: Vec<Vec<IntPoly>>,
}

impl PolyTable {
    pub fn kind(&self) -> TableKind {
        self.kind
    }

    /// Largest valid `m`.
    pub fn m_max(&self) -> usize {
        self.entries.len() - 1
    }

    /// Largest valid `n`.
    pub fn n_max(&self) -> usize {
        self.entries[0].len() - 1
    }

    /// Entry at `(m, n)`; the zero polynomial at negative indices.
    ///
    /// Panics if an index is beyond the built range.
    pub fn get(&self, m: isize, n: isize) -> IntPoly {
        if m < 0 || n < 0 {
            return IntPoly::zero();
        }
        self.entries[m as usize][n as usize].clone()
    }

    pub fn entry(&self, m: usize, n: usize) -> &IntPoly {
        &self.entries[m][n]
    }

    pub fn rows(&self) -> &[Vec<IntPoly>] {
        &self.entries
    }

    /// `(m, n, entry)` in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &IntPoly)> {
        self.entries
            .iter()
            .enumerate()
            .flat_map(|(m, row)| row.iter().enumerate().map(move |(n, p)| (m, n, p)))
    }

    fn set(&mut self, m: usize, n: usize, p: IntPoly) {
        self.entries[m][n] = p;
    }
}

pub fn build_table(kind: TableKind, m_max: usize, n_max: usize) -> PolyTable {
    let terms = kind.recurrence();
    let mut table = PolyTable {
        kind,
        entries: vec![vec![IntPoly::zero(); n_max + 1]; m_max + 1],
    };
    table.set(0, 0, IntPoly::one());
    for m in 0..=m_max {
        for n in 0..=n_max {
            if m == 0 && n == 0 {
                continue;
            }
            let value = terms.iter().fold(IntPoly::zero(), |acc, (di, dj, c)| {
                let prev = table.get(m as isize - *di as isize, n as isize - *dj as isize);
                acc.add(&prev.mul(c))
            });
            table.set(m, n, value);
        }
    }
    table
}

/// A bivariate power series in `s, t` truncated to degree `maxdeg` in each
/// variable, with integer polynomials in `z` as coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct BivariateTruncation {
    maxdeg: usize,
    coeffs: Vec<Vec<IntPoly>>,
}

impl BivariateTruncation {
    pub fn zero(maxdeg: usize) -> Self {
        Self {
            maxdeg,
            coeffs: vec![vec![IntPoly::zero(); maxdeg + 1]; maxdeg + 1],
        }
    }

    pub fn one(maxdeg: usize) -> Self {
        let mut out = Self::zero(maxdeg);
        out.coeffs[0][0] = IntPoly::one();
        out
    }

    /// The generating-function denominator `1 - sum c(i,j) s^i t^j`.
    pub fn denominator(kind: TableKind, maxdeg: usize) -> Self {
        let mut out = Self::one(maxdeg);
        for (i, j, c) in kind.recurrence() {
            if i <= maxdeg && j <= maxdeg {
                out.coeffs[i][j] = out.coeffs[i][j].sub(&c);
            }
        }
        out
    }

    pub fn from_table(table: &PolyTable, maxdeg: usize) -> Self {
        let mut out = Self::zero(maxdeg);
        for m in 0..=maxdeg {
            for n in 0..=maxdeg {
                out.coeffs[m][n] = table.entry(m, n).clone();
            }
        }
        out
    }

    pub fn maxdeg(&self) -> usize {
        self.maxdeg
    }

    pub fn coeff(&self, i: usize, j: usize) -> &IntPoly {
        &self.coeffs[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: IntPoly) {
        self.coeffs[i][j] = p;
    }

    /// Product truncated to the common degree box.
    pub fn mul(&self, rhs: &Self) -> Self {
        let d = self.maxdeg.min(rhs.maxdeg);
        let mut out = Self::zero(d);
        for i1 in 0..=d {
            for j1 in 0..=d {
                let a = &self.coeffs[i1][j1];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..=d - i1 {
                    for j2 in 0..=d - j1 {
                        let b = &rhs.coeffs[i2][j2];
                        if b.is_zero() {
                            continue;
                        }
                        let cell = &mut out.coeffs[i1 + i2][j1 + j2];
                        *cell = cell.add(&a.mul(b));
                    }
                }
            }
        }
        out
    }
}

/// Outcome of a generating-function check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GfCheck {
    pub order: usize,
    /// First `(m, n)` in row-major order where the product differs from 1.
    pub first_mismatch: Option<(usize, usize)>,
}

impl GfCheck {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Multiply the truncated table series by the denominator and compare the
/// product with 1 on the whole `order x order` box.
pub fn gf_check(table: &PolyTable, order: usize) -> GfCheck {
    assert!(
        order <= table.m_max().min(table.n_max()),
        "gf_check order {order} exceeds table size"
    );
    let series = BivariateTruncation::from_table(table, order);
    let product = BivariateTruncation::denominator(table.kind(), order).mul(&series);
    let one = BivariateTruncation::one(order);
    let first_mismatch = (0..=order)
        .flat_map(|m| (0..=order).map(move |n| (m, n)))
        .find(|&(m, n)| product.coeff(m, n) != one.coeff(m, n));
    GfCheck {
        order,
        first_mismatch,
    }
}

/// `[T(m,m) for m in 0..=m_max]`.
pub fn diagonal(table: &PolyTable, m_max: usize) -> Vec<IntPoly> {
    (0..=m_max).map(|m| table.entry(m, m).clone()).collect()
}

/// Legendre polynomials `L_0..=L_m` from
/// `(k+1) L_{k+1} = (2k+1) z L_k - k L_{k-1}`.
pub fn legendre_upto(m: usize) -> Vec<RatPoly> {
    let mut out = vec![RatPoly::one()];
    if m == 0 {
        return out;
    }
    out.push(RatPoly::var());
    for k in 1..m {
        let a = BigRational::new(BigInt::from(2 * k + 1), BigInt::from(k + 1));
        let b = BigRational::new(BigInt::from(k), BigInt::from(k + 1));
        let next = out[k].shift(1).scale(&a).sub(&out[k - 1].scale(&b));
        out.push(next);
    }
    out
}

pub fn legendre(m: usize) -> RatPoly {
    legendre_upto(m).pop().expect("nonempty")
}

/// `z^m L_m(8/z + 1)` as a polynomial: `sum c_k (z + 8)^k z^(m-k)`.
///
/// Returns `None` if a coefficient fails to be an integer.
pub fn rook_diagonal_from_legendre(m: usize) -> Option<IntPoly> {
    let l = legendre(m);
    let z_plus_8 = RatPoly::from_i64s(&[8, 1]);
    let mut acc = RatPoly::zero();
    for (k, c) in l.coeffs().iter().enumerate() {
        let term = z_plus_8.pow(k).shift(m - k).scale(c);
        acc = acc.add(&term);
    }
    acc.coeffs()
        .iter()
        .map(|c| c.denom().is_one().then(|| c.numer().clone()))
        .collect::<Option<Vec<_>>>()
        .map(IntPoly::new)
}

/// Exact comparison of `P(m,m)` with `z^m L_m(8/z + 1)`.
pub fn rook_diagonal_identity_check(m: usize) -> bool {
    let table = build_table(TableKind::Rook, m, m);
    rook_diagonal_identity_holds(&table, m)
}

/// Same as [`rook_diagonal_identity_check`] against a prebuilt rook table.
pub fn rook_diagonal_identity_holds(table: &PolyTable, m: usize) -> bool {
    assert_eq!(table.kind(), TableKind::Rook);
    rook_diagonal_from_legendre(m).is_some_and(|p| &p == table.entry(m, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn rook_small_entries() {
        let t = build_table(TableKind::Rook, 3, 3);
        assert_eq!(t.entry(0, 0), &ip(&[1]));
        assert_eq!(t.entry(0, 1), &ip(&[2]));
        assert_eq!(t.entry(1, 0), &ip(&[2]));
        assert_eq!(t.entry(1, 1), &ip(&[8, 1]));
        assert!(t.get(-1, 2).is_zero());
    }

    #[test]
    fn queen_small_entries() {
        let t = build_table(TableKind::Queen, 2, 2);
        assert_eq!(t.entry(1, 1), &ip(&[7]));
        assert_eq!(t.entry(2, 2), &ip(&[49, 1]));
        let d = diagonal(&t, 2);
        assert_eq!(d[0], ip(&[1]));
        assert_eq!(d[2], ip(&[49, 1]));
    }

    #[test]
    fn symmetric_and_degree_bounded() {
        for kind in [TableKind::Rook, TableKind::Queen] {
            let t = build_table(kind, 9, 9);
            for (m, n, p) in t.iter() {
                assert_eq!(p, t.entry(n, m));
                if kind == TableKind::Rook {
                    assert_eq!(p.degree(), Some(m.min(n)));
                }
            }
            if kind == TableKind::Queen {
                for m in 0..=9 {
                    assert!(t.entry(m, m).degree().unwrap() <= m / 2);
                }
            }
        }
    }

    #[test]
    fn gf_checks() {
        for kind in [TableKind::Rook, TableKind::Queen] {
            let t = build_table(kind, 8, 8);
            assert!(gf_check(&t, 8).passed());
            assert!(gf_check(&t, 0).passed());
        }
    }

    #[test]
    fn gf_check_reports_corruption() {
        let mut t = build_table(TableKind::Rook, 8, 8);
        let bad = t.entry(3, 2).add(&ip(&[1]));
        t.set(3, 2, bad);
        let check = gf_check(&t, 8);
        assert_eq!(check.first_mismatch, Some((3, 2)));
    }

    #[test]
    fn legendre_seeds() {
        let l = legendre_upto(2);
        assert_eq!(l[0], RatPoly::one());
        assert_eq!(l[1], RatPoly::var());
        let half = BigRational::new(1.into(), 2.into());
        let expected = RatPoly::new(vec![-half.clone(), BigRational::from_integer(0.into()), half * BigRational::from_integer(3.into())]);
        assert_eq!(l[2], expected);
    }

    #[test]
    fn legendre_at_one() {
        let one = BigRational::one();
        for p in legendre_upto(20) {
            assert_eq!(p.eval(&one), one);
        }
    }

    #[test]
    fn rook_identity_low_orders() {
        assert!(rook_diagonal_identity_check(0));
        assert!(rook_diagonal_identity_check(1));
        assert_eq!(rook_diagonal_from_legendre(1), Some(ip(&[8, 1])));
    }
}
