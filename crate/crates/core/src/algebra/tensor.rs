//! The tensor representation of E_n on V^{⊗n}, V with basis v_i^a (i ∈ [n], a ∈ [r]).
//!
//! G fixes v_i^a ⊗ v_j^b up to the Hecke rule when a = b and swaps the factors when a ≠ b.
//!
//! Operators act on row vectors from the right, so ρ(xy) = ρ(x)ρ(y).

use std::collections::{BTreeMap, HashMap};

use super::bh::{BhAlgebra, BhBasis};
use super::bt::{BtAlgebra, BtBasis};
use super::relations::{failing_relations, Gen, Relation};
use super::{Algebra, Element};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::linalg::{CoeffMatrix, RankMode, SparseRow};
use crate::perm::Perm;
use crate::setpart::SetPartition;

/// Largest tensor dimension built without an explicit override.
pub const MAX_DIM: usize = 200_000;

/// Sparse square matrix stored by rows: row k lists (column, coefficient).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseOp {
    rows: Vec<Vec<(usize, LaurentPoly)>>,
}

impl SparseOp {
    pub fn zero(dim: usize) -> Self {
        SparseOp { rows: vec![Vec::new(); dim] }
    }

    pub fn identity(dim: usize) -> Self {
        SparseOp { rows: (0..dim).map(|k| vec![(k, LaurentPoly::one())]).collect() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, k: usize) -> &[(usize, LaurentPoly)] {
        &self.rows[k]
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    fn from_maps(maps: Vec<BTreeMap<usize, LaurentPoly>>) -> Self {
        SparseOp { rows: maps.into_iter().map(|m| m.into_iter().filter(|(_, c)| !c.is_zero()).collect()).collect() }
    }

    /// self·other: first self, then other.
    pub fn then(&self, other: &SparseOp) -> SparseOp {
        let maps = self
            .rows
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, LaurentPoly> = BTreeMap::new();
                for (k, c) in row {
                    for (j, d) in &other.rows[*k] {
                        *acc.entry(*j).or_default() += &(c * d);
                    }
                }
                acc
            })
            .collect();
        Self::from_maps(maps)
    }

    pub fn add_scaled(&self, other: &SparseOp, c: &LaurentPoly) -> SparseOp {
        let maps = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut acc: BTreeMap<usize, LaurentPoly> = a.iter().cloned().collect();
                for (j, d) in b {
                    *acc.entry(*j).or_default() += &(d * c);
                }
                acc
            })
            .collect();
        Self::from_maps(maps)
    }

    /// Row-major flattening into a single sparse vector of length dim².
    pub fn flatten(&self) -> SparseRow {
        let d = self.dim();
        self.rows.iter().enumerate().flat_map(|(k, r)| r.iter().map(move |(j, c)| (k * d + j, c.clone()))).collect()
    }
}

pub struct TensorRep {
    n: usize,
    r: usize,
    dim: usize,
    g: Vec<SparseOp>,
    g_inv: Vec<SparseOp>,
    e: Vec<SparseOp>,
    cache: std::sync::RwLock<HashMap<BtBasis, SparseOp>>,
}

impl TensorRep {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        Self::with_limit(n, r, MAX_DIM)
    }

    pub fn with_limit(n: usize, r: usize, limit: usize) -> Result<Self> {
        if n < 1 || r < 1 {
            return Err(Error::Domain("n and r must be positive".into()));
        }
        let dim = (n * r)
            .checked_pow(n as u32)
            .filter(|&d| d <= limit)
            .ok_or_else(|| Error::Resource(format!("tensor dimension ({}·{})^{} exceeds {limit}", n, r, n)))?;
        let mut rep = TensorRep {
            n,
            r,
            dim,
            g: Vec::new(),
            g_inv: Vec::new(),
            e: Vec::new(),
            cache: std::sync::RwLock::new(HashMap::new()),
        };
        let qq = LaurentPoly::q_minus_qinv();
        for p in 0..n.saturating_sub(1) {
            let e = rep.two_site(p, |x, y| if x.1 == y.1 { vec![((x, y), LaurentPoly::one())] } else { vec![] });
            let g = rep.two_site(p, |x, y| {
                if x.1 != y.1 {
                    // differing colours are swapped; leaving them fixed breaks the braid relation
                    vec![((y, x), LaurentPoly::one())]
                } else if x.0 == y.0 {
                    vec![((x, y), LaurentPoly::q())]
                } else if x.0 > y.0 {
                    vec![((y, x), LaurentPoly::one())]
                } else {
                    vec![((x, y), qq.clone()), ((y, x), LaurentPoly::one())]
                }
            });
            rep.g_inv.push(g.add_scaled(&e, &-qq.clone()));
            rep.g.push(g);
            rep.e.push(e);
        }
        Ok(rep)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Factor values at every position; a factor is (i, a) with i ∈ 0..n, a ∈ 0..r.
    fn decode(&self, mut k: usize) -> Vec<(usize, usize)> {
        let base = self.n * self.r;
        let mut out = vec![(0, 0); self.n];
        for p in (0..self.n).rev() {
            let f = k % base;
            k /= base;
            out[p] = (f / self.r, f % self.r);
        }
        out
    }

    fn encode(&self, fs: &[(usize, usize)]) -> usize {
        let base = self.n * self.r;
        fs.iter().fold(0, |acc, &(i, a)| acc * base + i * self.r + a)
    }

    fn two_site(
        &self,
        p: usize,
        f: impl Fn((usize, usize), (usize, usize)) -> Vec<(((usize, usize), (usize, usize)), LaurentPoly)>,
    ) -> SparseOp {
        let rows = (0..self.dim)
            .map(|k| {
                let fs = self.decode(k);
                let mut out: Vec<(usize, LaurentPoly)> = f(fs[p], fs[p + 1])
                    .into_iter()
                    .map(|((x, y), c)| {
                        let mut g = fs.clone();
                        g[p] = x;
                        g[p + 1] = y;
                        (self.encode(&g), c)
                    })
                    .collect();
                out.sort_by_key(|x| x.0);
                out
            })
            .collect();
        SparseOp { rows }
    }

    pub fn op_g(&self, i: usize) -> &SparseOp {
        &self.g[i - 1]
    }

    pub fn op_g_inv(&self, i: usize) -> &SparseOp {
        &self.g_inv[i - 1]
    }

    pub fn op_e(&self, i: usize) -> &SparseOp {
        &self.e[i - 1]
    }

    pub fn op_z(&self, i: usize) -> SparseOp {
        self.e[i - 1].then(&self.g[i - 1])
    }

    pub fn op_gw(&self, w: &Perm) -> SparseOp {
        w.reduced_word().iter().fold(SparseOp::identity(self.dim), |acc, &i| acc.then(self.op_g(i)))
    }

    /// ρ(e_{i,j}) = ρ(g_i ⋯ g_{j−2} e_{j−1} g_{j−2}^{−1} ⋯ g_i^{−1}).
    pub fn op_e_ij(&self, i: usize, j: usize) -> SparseOp {
        let mut m = SparseOp::identity(self.dim);
        for k in i..j - 1 {
            m = m.then(self.op_g(k));
        }
        m = m.then(self.op_e(j - 1));
        for k in (i..j - 1).rev() {
            m = m.then(self.op_g_inv(k));
        }
        m
    }

    /// ρ(E_I) = Π_B Π_j ρ(e_{i_j, i_{j+1}}).
    pub fn op_big_e(&self, ties: &SetPartition) -> SparseOp {
        let mut m = SparseOp::identity(self.dim);
        for b in ties.blocks() {
            for w in b.windows(2) {
                m = m.then(&self.op_e_ij(w[0], w[1]));
            }
        }
        m
    }

    /// Projection onto tensors whose colours agree along the blocks of I.
    pub fn op_big_e_direct(&self, ties: &SetPartition) -> SparseOp {
        let rows = (0..self.dim)
            .map(|k| {
                let fs = self.decode(k);
                let ok = ties.blocks().iter().all(|b| b.iter().all(|&x| fs[x - 1].1 == fs[b[0] - 1].1));
                if ok {
                    vec![(k, LaurentPoly::one())]
                } else {
                    vec![]
                }
            })
            .collect();
        SparseOp { rows }
    }

    pub fn op_basis(&self, b: &BtBasis) -> SparseOp {
        if let Some(m) = self.cache.read().expect("cache lock").get(b) {
            return m.clone();
        }
        let m = self.op_big_e(&b.ties).then(&self.op_gw(&b.w));
        self.cache.write().expect("cache lock").insert(b.clone(), m.clone());
        m
    }

    pub fn op(&self, x: &Element<BtBasis>) -> SparseOp {
        let mut m = SparseOp::zero(self.dim);
        for (b, c) in x.terms() {
            m = m.add_scaled(&self.op_basis(b), c);
        }
        m
    }

    /// φ(E_I z_w) = ρ(E_I) Z_{i_1} ⋯ Z_{i_k}.
    pub fn op_bh_basis(&self, b: &BhBasis) -> SparseOp {
        let mut m = self.op_big_e(&b.ties);
        for i in b.w.reduced_word() {
            m = m.then(&self.op_z(i));
        }
        m
    }

    pub fn op_bh(&self, x: &Element<BhBasis>) -> SparseOp {
        let mut m = SparseOp::zero(self.dim);
        for (b, c) in x.terms() {
            m = m.add_scaled(&self.op_bh_basis(b), c);
        }
        m
    }

    pub fn op_gen(&self, g: Gen) -> SparseOp {
        match g {
            Gen::E(i) => self.op_e(i).clone(),
            Gen::G(i) => self.op_g(i).clone(),
            Gen::Z(i) => self.op_z(i),
        }
    }

    /// Relations that fail as matrix identities.
    pub fn failing_relations(&self, rels: &[Relation]) -> Vec<String> {
        let zero = SparseOp::zero(self.dim);
        let one = SparseOp::identity(self.dim);
        let gen = |g: Gen| self.op_gen(g);
        let mul = |a: &SparseOp, b: &SparseOp| a.then(b);
        let axpy = |a: &SparseOp, b: &SparseOp, c: &LaurentPoly| a.add_scaled(b, c);
        failing_relations(rels, &zero, &one, &gen, &mul, &axpy)
    }

    /// Rank of the flattened images of a list of operators.
    pub fn flattened_rank(ops: &[SparseOp], mode: RankMode) -> usize {
        let cols = ops.first().map(|m| m.dim() * m.dim()).unwrap_or(0);
        let mut m = CoeffMatrix::new(cols);
        for op in ops {
            m.push_row(op.flatten());
        }
        m.rank(mode)
    }

    /// First pair of bH basis elements with φ(ab) ≠ φ(a)φ(b), if any.
    pub fn bh_homomorphism_witness(&self, bh: &BhAlgebra, pairs: &[(BhBasis, BhBasis)]) -> Option<(BhBasis, BhBasis)> {
        let ops: HashMap<BhBasis, SparseOp> =
            bh.basis().into_iter().map(|b| (b.clone(), self.op_bh_basis(&b))).collect();
        pairs
            .iter()
            .find(|(a, b)| {
                let mut lhs = SparseOp::zero(self.dim);
                for (x, c) in bh.mul_basis(a, b).terms() {
                    lhs = lhs.add_scaled(&ops[x], c);
                }
                lhs != ops[a].then(&ops[b])
            })
            .cloned()
    }

    /// First pair (a, b) of basis elements with ρ(ab) ≠ ρ(a)ρ(b), if any.
    pub fn homomorphism_witness(&self, bt: &BtAlgebra, pairs: &[(BtBasis, BtBasis)]) -> Option<(BtBasis, BtBasis)> {
        pairs.iter().find(|(a, b)| self.op(&bt.mul_basis(a, b)) != self.op_basis(a).then(&self.op_basis(b))).cloned()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_and_limit() {
        assert_eq!(TensorRep::new(3, 3).unwrap().dim(), 729);
        assert!(matches!(TensorRep::with_limit(3, 3, 100), Err(Error::Resource(_))));
    }

    #[test]
    fn defining_relations_hold() {
        let t = TensorRep::new(3, 2).unwrap();
        let id = SparseOp::identity(t.dim());
        let qq = LaurentPoly::q_minus_qinv();
        for i in 1..3 {
            let g2 = t.op_g(i).then(t.op_g(i));
            assert_eq!(g2, id.add_scaled(&t.op_e(i).then(t.op_g(i)), &qq));
            assert_eq!(t.op_g(i).then(t.op_g_inv(i)), id);
            assert_eq!(t.op_e(i).then(t.op_g(i)), t.op_g(i).then(t.op_e(i)));
        }
        assert_eq!(t.op_g(1).then(t.op_g(2)).then(t.op_g(1)), t.op_g(2).then(t.op_g(1)).then(t.op_g(2)));
    }

    #[test]
    fn tie_projections_agree() {
        let t = TensorRep::new(3, 2).unwrap();
        for i in SetPartition::all_n(3) {
            assert_eq!(t.op_big_e(&i), t.op_big_e_direct(&i), "{i}");
        }
    }

    #[test]
    fn bh_relations_and_homomorphism_n2() {
        use crate::algebra::relations::bh_relations;
        let t = TensorRep::new(2, 2).unwrap();
        assert!(t.failing_relations(&bh_relations(2)).is_empty());
        let bh = BhAlgebra::new(2);
        let b = bh.basis();
        let pairs: Vec<_> = b.iter().flat_map(|x| b.iter().map(move |y| (x.clone(), y.clone()))).collect();
        assert_eq!(t.bh_homomorphism_witness(&bh, &pairs), None);
        let ops: Vec<SparseOp> = b.iter().map(|x| t.op_bh_basis(x)).collect();
        assert_eq!(TensorRep::flattened_rank(&ops, RankMode::Exact), 3);
    }

    #[test]
    fn homomorphism_on_generators_n3() {
        let bt = BtAlgebra::new(3);
        let t = TensorRep::new(3, 2).unwrap();
        let basis = bt.basis();
        let gens: Vec<BtBasis> =
            bt.generators().into_iter().map(|(_, g)| g.terms().next().unwrap().0.clone()).collect();
        let pairs: Vec<(BtBasis, BtBasis)> =
            basis.iter().flat_map(|a| gens.iter().map(move |g| (a.clone(), g.clone()))).collect();
        assert_eq!(t.homomorphism_witness(&bt, &pairs), None);
    }
}
