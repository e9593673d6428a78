//! Exact and modular linear algebra over Laurent polynomials.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Mersenne prime 2^61 − 1 used for modular rank.
pub const MODULUS: u64 = (1 << 61) - 1;

/// Sparse row: strictly increasing column indices, no zero entries.
pub type SparseRow = Vec<(usize, LaurentPoly)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankMode {
    Exact,
    Probabilistic { seed: u64, points: usize },
}

#[derive(Clone, Debug, Default)]
pub struct CoeffMatrix {
    cols: usize,
    rows: Vec<SparseRow>,
}

impl CoeffMatrix {
    pub fn new(cols: usize) -> Self {
        CoeffMatrix { cols, rows: Vec::new() }
    }

    pub fn from_dense(rows: &[Vec<LaurentPoly>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = CoeffMatrix::new(cols);
        for r in rows {
            m.push_row(r.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(c, x)| (c, x.clone())).collect());
        }
        m
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CoeffMatrix::new(n);
        for i in 0..n {
            m.push_row(vec![(i, LaurentPoly::one())]);
        }
        m
    }

    pub fn push_row(&mut self, row: SparseRow) {
        debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(row.iter().all(|(c, x)| *c < self.cols && !x.is_zero()));
        self.rows.push(row);
    }

    pub fn push_map(&mut self, row: &BTreeMap<usize, LaurentPoly>) {
        self.push_row(row.iter().filter(|(_, x)| !x.is_zero()).map(|(c, x)| (*c, x.clone())).collect());
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> LaurentPoly {
        self.rows[r].iter().find(|(k, _)| *k == c).map_or_else(LaurentPoly::zero, |(_, x)| x.clone())
    }

    pub fn rank(&self, mode: RankMode) -> usize {
        match mode {
            RankMode::Exact => self.rank_exact(),
            RankMode::Probabilistic { seed, points } => self.rank_probabilistic(seed, points),
        }
    }

    pub fn rank_exact(&self) -> usize {
        let mut e = Echelon::new();
        for r in &self.rows {
            e.insert(r.clone());
        }
        e.rank()
    }

    /// Max over `points` (at least 3) random evaluations of the rank modulo
    /// a prime; never exceeds the exact rank.
    pub fn rank_probabilistic(&self, seed: u64, points: usize) -> usize {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..points.max(3))
            .map(|_| {
                let x = rng.gen_range(2..MODULUS - 1);
                self.rank_mod(x, MODULUS)
            })
            .max()
            .unwrap_or(0)
    }

    pub fn rank_mod(&self, at: u64, p: u64) -> usize {
        let mut e = ModEchelon::new(p);
        for r in &self.rows {
            let row: Vec<(usize, u64)> = r
                .iter()
                .map(|(c, x)| (*c, x.evaluate_mod(at, p).expect("nonzero point")))
                .filter(|(_, v)| *v != 0)
                .collect();
            e.insert(row);
        }
        e.rank()
    }

    /// Whether every row of `other` lies in the row space of `self`.
    pub fn row_space_contains(&self, other: &CoeffMatrix) -> bool {
        let mut e = Echelon::new();
        for r in &self.rows {
            e.insert(r.clone());
        }
        other.rows.iter().all(|r| e.reduce(r.clone()).is_empty())
    }

    /// Inverse of a square matrix over the fraction field.
    pub fn inverse(&self) -> Result<Vec<Vec<RatFn>>> {
        let n = self.rows.len();
        if n != self.cols {
            return Err(Error::Domain(format!("{}x{} matrix is not square", n, self.cols)));
        }
        let mut a: Vec<Vec<RatFn>> = (0..n)
            .map(|i| {
                let mut row = vec![RatFn::zero(); 2 * n];
                for (c, x) in &self.rows[i] {
                    row[*c] = RatFn::from_poly(x.clone());
                }
                row[n + i] = RatFn::one();
                row
            })
            .collect();
        for col in 0..n {
            let piv = (col..n)
                .filter(|&r| !a[r][col].is_zero())
                .min_by_key(|&r| a[r][col].complexity())
                .ok_or_else(|| Error::Domain("matrix is singular".into()))?;
            a.swap(col, piv);
            let inv = a[col][col].inv();
            for x in a[col].iter_mut() {
                *x = x.mul(&inv);
            }
            let pivot_row = a[col].clone();
            for (r, row) in a.iter_mut().enumerate() {
                if r == col || row[col].is_zero() {
                    continue;
                }
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x = x.sub(&f.mul(y));
                    }
                }
            }
        }
        Ok(a.into_iter().map(|r| r[n..].to_vec()).collect())
    }
}

/// Incremental fraction-free row echelon form over Z[q, q^{−1}].
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    pivots: Vec<(usize, SparseRow)>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon { pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce against the current pivots; returns the primitive remainder.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        for (c, prow) in &self.pivots {
            let Some(a) = row.iter().find(|(k, _)| k == c).map(|(_, x)| x.clone()) else {
                continue;
            };
            let p = &prow.iter().find(|(k, _)| k == c).unwrap().1;
            row = combine(p, &row, &a, prow);
            row = make_primitive(row);
            if row.is_empty() {
                break;
            }
        }
        row
    }

    /// Add a row; returns whether it increased the rank.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let r = self.reduce(make_primitive(row));
        if r.is_empty() {
            return false;
        }
        let c = r[0].0;
        self.pivots.push((c, r));
        true
    }
}

/// p·row − a·prow
fn combine(p: &LaurentPoly, row: &SparseRow, a: &LaurentPoly, prow: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(row.len() + prow.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < prow.len() {
        let ci = row.get(i).map_or(usize::MAX, |x| x.0);
        let cj = prow.get(j).map_or(usize::MAX, |x| x.0);
        let (c, v) = if ci < cj {
            i += 1;
            (ci, p * &row[i - 1].1)
        } else if cj < ci {
            j += 1;
            (cj, -(a * &prow[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (ci, &(p * &row[i - 1].1) - &(a * &prow[j - 1].1))
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    out
}

/// Divide a row by the gcd of its entries and normalize the leading sign and q-power.
fn make_primitive(row: SparseRow) -> SparseRow {
    if row.is_empty() {
        return row;
    }
    let mut g = row[0].1.normalized();
    for (_, x) in &row[1..] {
        if g.is_one() {
            break;
        }
        g = g.gcd(x);
    }
    let lead = &row[0].1;
    let shift = -lead.low_degree();
    let neg = lead.coeff(lead.high_degree()) < BigInt::zero();
    row.into_iter()
        .map(|(c, x)| {
            let mut y = if g.is_one() { x } else { x.div_exact(&g).expect("gcd divides") };
            y = y.shift(shift);
            if neg {
                y = -y;
            }
            (c, y)
        })
        .collect()
}

struct ModEchelon {
    p: u64,
    pivots: Vec<(usize, Vec<(usize, u64)>)>,
}

impl ModEchelon {
    fn new(p: u64) -> Self {
        ModEchelon { p, pivots: Vec::new() }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn insert(&mut self, mut row: Vec<(usize, u64)>) {
        let p = self.p;
        for (c, prow) in &self.pivots {
            let Some(a) = row.iter().find(|(k, _)| k == c).map(|x| x.1) else { continue };
            // pivot rows are monic at their pivot
            let mut out = Vec::with_capacity(row.len() + prow.len());
            let (mut i, mut j) = (0, 0);
            while i < row.len() || j < prow.len() {
                let ci = row.get(i).map_or(usize::MAX, |x| x.0);
                let cj = prow.get(j).map_or(usize::MAX, |x| x.0);
                let (k, v) = if ci < cj {
                    i += 1;
                    (ci, row[i - 1].1)
                } else if cj < ci {
                    j += 1;
                    (cj, (p - mulmod(a, prow[j - 1].1, p)) % p)
                } else {
                    i += 1;
                    j += 1;
                    (ci, (row[i - 1].1 + p - mulmod(a, prow[j - 1].1, p)) % p)
                };
                if v != 0 {
                    out.push((k, v));
                }
            }
            row = out;
            if row.is_empty() {
                return;
            }
        }
        if row.is_empty() {
            return;
        }
        let inv = crate::laurent::pow_mod(row[0].1, p - 2, p);
        let row: Vec<(usize, u64)> = row.into_iter().map(|(c, v)| (c, mulmod(v, inv, p))).collect();
        self.pivots.push((row[0].0, row));
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Element of the fraction field Q(q), kept in lowest terms with a
/// normalized denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFn {
    pub fn zero() -> Self {
        RatFn { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        RatFn::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RatFn { num: p, den: LaurentPoly::one() }
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap());
        let s = -den.low_degree();
        num = num.shift(s);
        den = den.shift(s);
        if den.coeff(den.high_degree()) < BigInt::zero() {
            num = -num;
            den = -den;
        }
        RatFn { num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    /// The Laurent polynomial, if the denominator is a unit.
    pub fn as_poly(&self) -> Option<LaurentPoly> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            None
        }
    }

    fn complexity(&self) -> usize {
        self.num.poly_part().len() + self.den.poly_part().len()
    }

    pub fn add(&self, o: &RatFn) -> RatFn {
        if self.den == o.den {
            return RatFn::new(&self.num + &o.num, self.den.clone());
        }
        RatFn::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }

    pub fn sub(&self, o: &RatFn) -> RatFn {
        self.add(&RatFn { num: -&o.num, den: o.den.clone() })
    }

    pub fn mul(&self, o: &RatFn) -> RatFn {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        RatFn::new(&self.num * &o.num, &self.den * &o.den)
    }

    pub fn inv(&self) -> RatFn {
        RatFn::new(self.den.clone(), self.num.clone())
    }
}

/// Solve x·T = y for a row vector y given T^{−1}.
pub fn apply_inverse(y: &BTreeMap<usize, LaurentPoly>, inv: &[Vec<RatFn>]) -> Vec<RatFn> {
    let n = inv.len();
    let mut x = vec![RatFn::zero(); n];
    for (&c, v) in y {
        let v = RatFn::from_poly(v.clone());
        for (k, xk) in x.iter_mut().enumerate() {
            if !inv[c][k].is_zero() {
                *xk = xk.add(&v.mul(&inv[c][k]));
            }
        }
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(c: i64, e: i32) -> LaurentPoly {
        LaurentPoly::term(c, e)
    }

    #[test]
    fn identity_rank() {
        assert_eq!(CoeffMatrix::identity(5).rank_exact(), 5);
        assert_eq!(CoeffMatrix::identity(5).rank_probabilistic(1, 3), 5);
    }

    #[test]
    fn duplicated_rows() {
        let r = vec![LaurentPoly::q(), LaurentPoly::delta(), LaurentPoly::zero()];
        let r2 = vec![LaurentPoly::one(), LaurentPoly::q_minus_qinv(), lp(3, -2)];
        let m = CoeffMatrix::from_dense(&[r.clone(), r2.clone(), r.clone(), r2]);
        assert_eq!(m.rank_exact(), 2);
    }

    #[test]
    fn polynomial_dependence() {
        // second row = (q+q^{-1}) · first row
        let d = LaurentPoly::delta();
        let r1 = vec![LaurentPoly::one(), LaurentPoly::q()];
        let r2 = vec![d.clone(), &d * &LaurentPoly::q()];
        let m = CoeffMatrix::from_dense(&[r1, r2]);
        assert_eq!(m.rank_exact(), 1);
    }

    #[test]
    fn inverse_of_unitriangular() {
        let m = CoeffMatrix::from_dense(&[
            vec![LaurentPoly::one(), LaurentPoly::q(), lp(2, 3)],
            vec![LaurentPoly::zero(), lp(-1, 1), LaurentPoly::delta()],
            vec![LaurentPoly::zero(), LaurentPoly::zero(), LaurentPoly::one()],
        ]);
        let inv = m.inverse().unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let mut s = RatFn::zero();
                for k in 0..3 {
                    s = s.add(&RatFn::from_poly(m.get(i, k)).mul(&inv[k][j]));
                }
                assert_eq!(s, if i == j { RatFn::one() } else { RatFn::zero() });
            }
        }
        assert!(inv.iter().flatten().all(|x| x.as_poly().is_some()));
    }

    #[test]
    fn containment() {
        let a = CoeffMatrix::from_dense(&[vec![LaurentPoly::one(), LaurentPoly::q()]]);
        let b = CoeffMatrix::from_dense(&[vec![LaurentPoly::delta(), &LaurentPoly::delta() * &LaurentPoly::q()]]);
        let c = CoeffMatrix::from_dense(&[vec![LaurentPoly::one(), LaurentPoly::one()]]);
        assert!(a.row_space_contains(&b));
        assert!(!a.row_space_contains(&c));
    }

    fn arb_matrix() -> impl Strategy<Value = Vec<Vec<LaurentPoly>>> {
        let entry = prop_oneof![
            3 => Just(LaurentPoly::zero()),
            2 => (-2i64..3, -2i32..3).prop_map(|(c, e)| LaurentPoly::term(c, e)),
            1 => (-2i64..3, -2i64..3).prop_map(|(a, b)| LaurentPoly::from_terms(&[(a, 1), (b, -1)])),
        ];
        (1usize..5, 1usize..5)
            .prop_flat_map(move |(r, c)| proptest::collection::vec(proptest::collection::vec(entry.clone(), c), r))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn probabilistic_rank_agrees(rows in arb_matrix(), seed in 0u64..1000) {
            // make dependent rows appear
            let mut rows = rows;
            if rows.len() >= 2 {
                let comb: Vec<LaurentPoly> = rows[0].iter().zip(&rows[1]).map(|(a, b)| &(a * &LaurentPoly::q()) - b).collect();
                rows.push(comb);
            }
            let m = CoeffMatrix::from_dense(&rows);
            prop_assert_eq!(m.rank_probabilistic(seed, 3), m.rank_exact());
        }

        #[test]
        fn ratfn_field_laws(a in -3i64..4, b in 1i64..4, e in -2i32..3) {
            let x = RatFn::new(LaurentPoly::from_terms(&[(a, e), (1, 0)]), LaurentPoly::from_terms(&[(b, 1), (1, 0)]));
            if !x.is_zero() {
                prop_assert_eq!(x.mul(&x.inv()), RatFn::one());
            }
            prop_assert!(x.sub(&x).is_zero());
        }
    }

    #[test]
    fn ratfn_normalizes() {
        let x = RatFn::new(LaurentPoly::from_terms(&[(1, 2), (-1, 0)]), LaurentPoly::from_terms(&[(-1, 1), (1, 0)]));
        assert_eq!(x.as_poly().unwrap(), LaurentPoly::from_terms(&[(-1, 1), (-1, 0)]));
        assert_eq!(RatFn::one().numerator(), &LaurentPoly::one());
    }
}
