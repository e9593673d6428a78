//! Structural checks on the algebras; each returns the first witness of failure.

use std::collections::{BTreeMap, HashMap};

use super::bh::{BhAlgebra, BhBasis};
use super::bt::{BtAlgebra, BtBasis};
use super::hecke::Hecke;
use super::{Algebra, Element};
use crate::combinatorics::{compositions, partitions};
use crate::linalg::CoeffMatrix;
use crate::perm::Perm;
use crate::ramified::{enumerate_ramified, MonoidKind, RamifiedPartition};
use crate::setpart::SetPartition;

pub type Check = std::result::Result<(), String>;

fn ensure(ok: bool, witness: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(witness())
    }
}

/// Σ 𝔼_I = 1, 𝔼_I𝔼_J = δ_{IJ}𝔼_I and 𝔼_I central, over linear I in bH_n.
pub fn bh_idempotents(bh: &BhAlgebra) -> Check {
    bh_idempotent_family(bh, |i| bh.idempotent(i))
}

/// The checks of `bh_idempotents` for an arbitrary family indexed by linear partitions.
pub fn bh_idempotent_family(bh: &BhAlgebra, family: impl Fn(&SetPartition) -> Element<BhBasis>) -> Check {
    let n = bh.n();
    let lin = SetPartition::all_linear(n);
    let es: Vec<_> = lin.iter().map(&family).collect();
    let mut sum = Element::zero();
    for (x, ex) in es.iter().enumerate() {
        sum = sum.add(ex);
        for (y, ey) in es.iter().enumerate() {
            let p = bh.mul(ex, ey);
            let want = if x == y { ex.clone() } else { Element::zero() };
            ensure(p == want, || format!("E[{}]·E[{}] = {p}", lin[x], lin[y]))?;
        }
        for (name, g) in bh.generators() {
            ensure(bh.mul(ex, &g) == bh.mul(&g, ex), || format!("E[{}] does not commute with {name}", lin[x]))?;
        }
    }
    ensure(sum == bh.one(), || format!("Σ E_I = {sum}"))
}

/// 𝔼_I E_J = 𝔼_I when J ⪯ I and 0 otherwise, over linear I, J.
pub fn bh_idempotent_table(bh: &BhAlgebra) -> Check {
    let lin = SetPartition::all_linear(bh.n());
    for i in &lin {
        let ei = bh.idempotent(i);
        for j in &lin {
            let p = bh.mul(&ei, &bh.big_e(j));
            let want = if j.is_finer(i).unwrap() { ei.clone() } else { Element::zero() };
            ensure(p == want, || format!("E[{i}]·E_[{j}] = {p}"))?;
        }
    }
    Ok(())
}

/// Completeness, orthogonality, 𝔼_I g_w = g_w 𝔼_{I·w} and the 𝔼_I E_J table in E_n.
pub fn bt_idempotents(bt: &BtAlgebra) -> Check {
    let n = bt.n();
    let all = SetPartition::all_n(n);
    let es: HashMap<&SetPartition, Element<BtBasis>> = all.iter().map(|i| (i, bt.idempotent(i))).collect();
    let mut sum = Element::zero();
    let perms = Perm::all(n);
    for i in &all {
        let ei = &es[i];
        sum = sum.add(ei);
        for j in &all {
            let p = bt.mul(ei, &es[j]);
            let want = if i == j { ei.clone() } else { Element::zero() };
            ensure(p == want, || format!("E[{i}]·E[{j}] = {p}"))?;
            let q = bt.mul(ei, &bt.big_e(j));
            let want = if j.is_finer(i).unwrap() { ei.clone() } else { Element::zero() };
            ensure(q == want, || format!("E[{i}]·E_[{j}] = {q}"))?;
        }
        for w in &perms {
            let gw = bt.g_w(w);
            ensure(bt.mul(ei, &gw) == bt.mul(&gw, &es[&i.act(w)]), || format!("E[{i}] g[{w}] twist fails"))?;
        }
    }
    ensure(sum == bt.one(), || format!("Σ E_I = {sum}"))
}

/// The first 𝔼_I of E_n failing to commute with some generator, if any.
pub fn bt_noncentral_witness(bt: &BtAlgebra) -> Option<String> {
    for i in SetPartition::all_n(bt.n()) {
        let ei = bt.idempotent(&i);
        for (name, g) in bt.generators() {
            if bt.mul(&ei, &g) != bt.mul(&g, &ei) {
                return Some(format!("E[{i}] and {name}"));
            }
        }
    }
    None
}

/// 𝔼_α is central, the family is orthogonal and sums to 1.
pub fn bt_type_idempotents(bt: &BtAlgebra) -> Check {
    let alphas = partitions(bt.n());
    let es: Vec<_> = alphas.iter().map(|a| bt.idempotent_of_type(a)).collect();
    let mut sum = Element::zero();
    for (x, ex) in es.iter().enumerate() {
        sum = sum.add(ex);
        for (name, g) in bt.generators() {
            ensure(bt.mul(ex, &g) == bt.mul(&g, ex), || format!("E[{:?}] does not commute with {name}", alphas[x]))?;
        }
        for (y, ey) in es.iter().enumerate() {
            let p = bt.mul(ex, ey);
            let want = if x == y { ex.clone() } else { Element::zero() };
            ensure(p == want, || format!("E[{:?}]·E[{:?}] ≠ δ", alphas[x], alphas[y]))?;
        }
    }
    ensure(sum == bt.one(), || format!("Σ E_α = {sum}"))
}

/// h_w ↦ 𝔼_{I_μ} z_w is an injective unital homomorphism H_μ → 𝔼_{I_μ} bH_n for every μ.
pub fn bh_block_isomorphism(bh: &BhAlgebra) -> Check {
    let n = bh.n();
    let h = Hecke::new(n);
    let idx = bh.basis_index();
    for mu in compositions(n).map_err(|e| e.to_string())? {
        let ties = SetPartition::from_composition(&mu);
        let e = bh.idempotent(&ties);
        let sub: Vec<Perm> = Perm::all(n).into_iter().filter(|w| w.stabilizes_blocks(ties.blocks())).collect();
        let psi = |x: &Element<Perm>| x.map(|w| bh.mul(&e, &bh.basis_elem(ties.clone(), w.clone())));
        ensure(psi(&h.one()) == e, || format!("block {mu:?}: unit"))?;
        let mut m = CoeffMatrix::new(idx.len());
        for w in &sub {
            m.push_row(psi(&Element::basis(w.clone())).coordinates(&idx));
            for v in &sub {
                let lhs = psi(&h.mul_basis(w, v));
                let rhs = bh.mul(&psi(&Element::basis(w.clone())), &psi(&Element::basis(v.clone())));
                ensure(lhs == rhs, || format!("block {mu:?}: h[{w}]·h[{v}]"))?;
            }
        }
        ensure(m.rank_exact() == sub.len(), || format!("block {mu:?}: images dependent"))?;
    }
    Ok(())
}

/// The image of E_I g_w in R(S_n) at q = 1: (1, I) · (w, w).
pub fn bt_basis_at_one(b: &BtBasis) -> RamifiedPartition {
    RamifiedPartition::from_perm_ties(&Perm::identity(b.w.n()), &b.ties)
        .rproduct(&RamifiedPartition::from_perm_ties(&b.w, &SetPartition::singletons_n(b.w.n())))
        .expect("same size")
        .0
}

/// At q = 1 the structure constants of E_n are those of the monoid algebra of R(S_n).
pub fn bt_specializes_to_monoid(bt: &BtAlgebra) -> Check {
    let n = bt.n();
    let basis = bt.basis();
    let images: BTreeMap<RamifiedPartition, &BtBasis> = basis.iter().map(|b| (bt_basis_at_one(b), b)).collect();
    let target = enumerate_ramified(MonoidKind::Symmetric, n, false).map_err(|e| e.to_string())?;
    ensure(images.len() == basis.len() && images.keys().eq(target.iter()), || {
        "basis is not in bijection with R(S_n)".into()
    })?;
    for a in &basis {
        let ra = bt_basis_at_one(a);
        for b in &basis {
            let p = bt.mul_basis(a, b).at_one();
            let rb = bt_basis_at_one(b);
            let want = ra.rproduct(&rb).expect("same size").0;
            let ok =
                p.len() == 1 && p.values().all(|c| c == &1.into()) && bt_basis_at_one(p.keys().next().unwrap()) == want;
            ensure(ok, || format!("{a}·{b} at q=1"))?;
        }
    }
    Ok(())
}

/// ι₁ sends the bH basis to distinct E_n basis elements and is multiplicative.
pub fn iota1_embedding(bh: &BhAlgebra, bt: &BtAlgebra) -> Check {
    let b = bh.basis();
    let imgs: std::collections::BTreeSet<BtBasis> =
        b.iter().map(|x| BtBasis { ties: x.ties.clone(), w: x.w.clone() }).collect();
    ensure(imgs.len() == b.len(), || "ι₁ images collide".into())?;
    for x in &b {
        for y in &b {
            let lhs = bh.iota1(&bh.mul_basis(x, y));
            let rhs = bt.mul(&bh.to_bt(bt, x), &bh.to_bt(bt, y));
            ensure(lhs == rhs, || format!("ι₁({x}·{y})"))?;
        }
    }
    Ok(())
}

/// Basis elements of bH_n in E_n-coordinates, for ideal comparisons.
pub fn bh_rows_in_bt(bh: &BhAlgebra, bt: &BtAlgebra, rows: &CoeffMatrix) -> CoeffMatrix {
    let basis: Vec<BhBasis> = bh.basis();
    let idx = bt.basis_index();
    let mut out = CoeffMatrix::new(idx.len());
    for row in rows.rows() {
        let mut x = Element::zero();
        for (k, c) in row {
            x.add_term(basis[*k].clone(), c);
        }
        out.push_row(bh.iota1(&x).coordinates(&idx));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bh_suites() {
        for n in 1..=4 {
            let bh = BhAlgebra::new(n);
            assert_eq!(bh_idempotents(&bh), Ok(()));
            assert_eq!(bh_idempotent_table(&bh), Ok(()));
            assert_eq!(bh_block_isomorphism(&bh), Ok(()));
        }
    }

    #[test]
    fn bt_suites_n3() {
        let bt = BtAlgebra::new(3);
        assert_eq!(bt_idempotents(&bt), Ok(()));
        assert_eq!(bt_type_idempotents(&bt), Ok(()));
        assert!(bt_noncentral_witness(&bt).is_some());
        assert_eq!(bt_specializes_to_monoid(&bt), Ok(()));
        assert_eq!(iota1_embedding(&BhAlgebra::new(3), &bt), Ok(()));
    }

    #[test]
    fn corrupted_mobius_sign_is_caught() {
        let bh = BhAlgebra::new(3);
        let i = SetPartition::singletons_n(3);
        let good = bh.idempotent(&i);
        let bad = good.add(&bh.e(1).scale(&crate::laurent::LaurentPoly::constant(2)));
        assert_ne!(bh.mul(&bad, &bad), bad);
        let flipped =
            |a: &SetPartition, b: &SetPartition| if a == b { 1 } else { -crate::setpart::mobius_linear(a, b) };
        assert!(bh_idempotent_family(&bh, |i| bh.idempotent_with(i, flipped)).is_err());
    }
}
