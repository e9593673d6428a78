//! The algebra of braids and ties E_n, basis E_I g_w.

use std::fmt;

use super::hecke::hecke_times_s;
use super::{Algebra, Element, Memo};
use crate::combinatorics::IntPartition;
use crate::laurent::LaurentPoly;
use crate::perm::Perm;
use crate::setpart::{mobius_partition_lattice, SetPartition};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BtBasis {
    pub ties: SetPartition,
    pub w: Perm,
}

impl fmt::Display for BtBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E[{}]g[{}]", self.ties, self.w)
    }
}

impl fmt::Debug for BtBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub struct BtAlgebra {
    n: usize,
    memo: Memo<BtBasis>,
}

impl BtAlgebra {
    pub fn new(n: usize) -> Self {
        BtAlgebra { n, memo: Memo::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis_elem(&self, ties: SetPartition, w: Perm) -> Element<BtBasis> {
        Element::basis(BtBasis { ties, w })
    }

    pub fn big_e(&self, ties: &SetPartition) -> Element<BtBasis> {
        self.basis_elem(ties.clone(), Perm::identity(self.n))
    }

    pub fn g_w(&self, w: &Perm) -> Element<BtBasis> {
        self.basis_elem(SetPartition::singletons_n(self.n), w.clone())
    }

    pub fn e(&self, i: usize) -> Element<BtBasis> {
        self.big_e(&SetPartition::tie(i, i + 1, self.n))
    }

    pub fn g(&self, i: usize) -> Element<BtBasis> {
        self.g_w(&Perm::s(i, self.n))
    }

    /// g_i^{−1} = g_i − (q − q^{−1}) e_i.
    pub fn g_inv(&self, i: usize) -> Element<BtBasis> {
        self.g(i).sub(&self.e(i).scale(&LaurentPoly::q_minus_qinv()))
    }

    /// e_{i,j} = g_i ⋯ g_{j−2} e_{j−1} g_{j−2}^{−1} ⋯ g_i^{−1}, for i < j.
    pub fn e_ij(&self, i: usize, j: usize) -> Element<BtBasis> {
        let mut xs: Vec<Element<BtBasis>> = (i..j - 1).map(|k| self.g(k)).collect();
        xs.push(self.e(j - 1));
        xs.extend((i..j - 1).rev().map(|k| self.g_inv(k)));
        self.product(&xs)
    }

    /// Steinberg-type element e_ie_j g_{i,j}.
    pub fn steinberg(&self, i: usize, j: usize) -> Element<BtBasis> {
        let q = |k| LaurentPoly::term(1, k);
        let n = self.n;
        let mut h = self.g_w(&Perm::identity(n));
        h.add_scaled(&self.g(i), &q(1));
        h.add_scaled(&self.g(j), &q(1));
        h.add_scaled(&self.g_w(&Perm::from_word(&[i, j], n)), &q(2));
        h.add_scaled(&self.g_w(&Perm::from_word(&[j, i], n)), &q(2));
        h.add_scaled(&self.g_w(&Perm::from_word(&[i, j, i], n)), &q(3));
        self.product(&[self.e(i), self.e(j), h])
    }

    /// 𝔼_I = Σ_{J ⪰ I} μ(I, J) E_J over the full partition lattice.
    pub fn idempotent(&self, ties: &SetPartition) -> Element<BtBasis> {
        let mut r = Element::zero();
        for j in ties.coarsenings() {
            r.add_scaled(&self.big_e(&j), &LaurentPoly::constant(mobius_partition_lattice(ties, &j)));
        }
        r
    }

    /// 𝔼_α = Σ over partitions I of type α of 𝔼_I.
    pub fn idempotent_of_type(&self, alpha: &IntPartition) -> Element<BtBasis> {
        let mut r = Element::zero();
        for i in SetPartition::all_n(self.n).iter().filter(|i| &i.type_of() == alpha) {
            r = r.add(&self.idempotent(i));
        }
        r
    }
}

impl Algebra for BtAlgebra {
    type Basis = BtBasis;

    fn name(&self) -> String {
        format!("E_{}", self.n)
    }

    fn basis(&self) -> Vec<BtBasis> {
        let perms = Perm::all(self.n);
        SetPartition::all_n(self.n)
            .into_iter()
            .flat_map(|i| perms.iter().map(move |w| BtBasis { ties: i.clone(), w: w.clone() }))
            .collect()
    }

    fn one(&self) -> Element<BtBasis> {
        self.g_w(&Perm::identity(self.n))
    }

    /// (E_I g_w)(E_J g_v) = E_{I ∨ J·w^{−1}} g_w g_v, then g_v is absorbed letter by letter.
    fn mul_basis(&self, a: &BtBasis, b: &BtBasis) -> Element<BtBasis> {
        self.memo.get_or(a, b, || {
            let k = a.ties.join(&b.ties.act(&a.w.inverse()));
            let mut x: Element<(SetPartition, Perm)> = Element::basis((k, a.w.clone()));
            let n = self.n;
            for s in b.w.reduced_word() {
                // g_x g_s with s a descent of x also produces E_{tie(s,s+1)·(xs)^{-1}} g_x.
                let plain = hecke_times_s(&x, s);
                let mut fixed = Element::zero();
                let qq = LaurentPoly::q_minus_qinv();
                for ((kk, w), c) in x.terms() {
                    if w.is_right_descent(s) {
                        let mut ws = w.clone();
                        ws.swap_values(s);
                        let tied = kk.join(&SetPartition::tie(s, s + 1, n).act(&ws.inverse()));
                        fixed.add_term((kk.clone(), w.clone()), &(-(c * &qq)));
                        fixed.add_term((tied, w.clone()), &(c * &qq));
                    }
                }
                x = plain.add(&fixed);
            }
            x.map(|(ties, w)| Element::basis(BtBasis { ties: ties.clone(), w: w.clone() }))
        })
    }

    fn generators(&self) -> Vec<(String, Element<BtBasis>)> {
        let mut g: Vec<(String, Element<BtBasis>)> = (1..self.n).map(|i| (format!("g{i}"), self.g(i))).collect();
        g.extend((1..self.n).map(|i| (format!("e{i}"), self.e(i))));
        g
    }

    /// (E_I g_w)^* = g_{w^{−1}} E_I = E_{I·w} g_{w^{−1}}.
    fn star_basis(&self, b: &BtBasis) -> Option<Element<BtBasis>> {
        Some(self.basis_elem(b.ties.act(&b.w), b.w.inverse()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{bell, factorial, partitions};

    #[test]
    fn dimension() {
        for n in 1..=4 {
            assert_eq!(BtAlgebra::new(n).dim() as u128, bell(n) * factorial(n));
        }
    }

    #[test]
    fn defining_relations() {
        let a = BtAlgebra::new(4);
        let qq = LaurentPoly::q_minus_qinv();
        for i in 1..4 {
            let (g, e) = (a.g(i), a.e(i));
            assert_eq!(a.mul(&g, &g), a.one().add(&a.mul(&e, &g).scale(&qq)));
            assert_eq!(a.mul(&e, &e), e);
            assert_eq!(a.mul(&e, &g), a.mul(&g, &e));
            assert_eq!(a.mul(&g, &a.g_inv(i)), a.one());
            for j in 1..4 {
                assert_eq!(a.mul(&e, &a.e(j)), a.mul(&a.e(j), &e));
                if i.abs_diff(j) > 1 {
                    assert_eq!(a.mul(&g, &a.g(j)), a.mul(&a.g(j), &g));
                    assert_eq!(a.mul(&e, &a.g(j)), a.mul(&a.g(j), &e));
                }
                if i.abs_diff(j) == 1 {
                    let (gj, ej) = (a.g(j), a.e(j));
                    assert_eq!(
                        a.product(&[g.clone(), gj.clone(), g.clone()]),
                        a.product(&[gj.clone(), g.clone(), gj.clone()])
                    );
                    assert_eq!(
                        a.product(&[e.clone(), ej.clone(), g.clone()]),
                        a.product(&[g.clone(), e.clone(), ej.clone()])
                    );
                    assert_eq!(
                        a.product(&[e.clone(), gj.clone(), g.clone()]),
                        a.product(&[gj.clone(), g.clone(), ej.clone()])
                    );
                    let gji = a.g_inv(j);
                    assert_eq!(
                        a.product(&[e.clone(), gj.clone(), e.clone(), gji.clone()]),
                        a.product(&[gj.clone(), e.clone(), gji.clone(), e.clone()])
                    );
                }
            }
        }
    }

    #[test]
    fn associative_n3() {
        let a = BtAlgebra::new(3);
        let b: Vec<Element<BtBasis>> = a.basis().into_iter().map(Element::basis).collect();
        for x in &b {
            for y in &b {
                let xy = a.mul(x, y);
                for z in b.iter().step_by(3) {
                    assert_eq!(a.mul(&xy, z), a.mul(x, &a.mul(y, z)));
                }
            }
        }
    }

    #[test]
    fn e_ij_is_tie_partition() {
        let a = BtAlgebra::new(4);
        for i in 1..4 {
            for j in i + 1..=4 {
                assert_eq!(a.e_ij(i, j), a.big_e(&SetPartition::tie(i, j, 4)), "e_{i},{j}");
            }
        }
    }

    #[test]
    fn star_is_anti_involution() {
        let a = BtAlgebra::new(3);
        let b = a.basis();
        for x in &b {
            for y in b.iter().step_by(2) {
                let lhs = a.star(&a.mul_basis(x, y)).unwrap();
                let rhs = a.mul(&a.star_basis(y).unwrap(), &a.star_basis(x).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn idempotents_decompose_and_twist() {
        let a = BtAlgebra::new(3);
        let all = SetPartition::all_n(3);
        let es: Vec<_> = all.iter().map(|i| a.idempotent(i)).collect();
        let mut sum = Element::zero();
        for (x, ex) in es.iter().enumerate() {
            sum = sum.add(ex);
            for (y, ey) in es.iter().enumerate() {
                let p = a.mul(ex, ey);
                if x == y {
                    assert_eq!(&p, ex);
                } else {
                    assert!(p.is_zero());
                }
            }
            for w in Perm::all(3) {
                let gw = a.g_w(&w);
                assert_eq!(a.mul(ex, &gw), a.mul(&gw, &a.idempotent(&all[x].act(&w))));
            }
        }
        assert_eq!(sum, a.one());
        for alpha in partitions(3) {
            let ea = a.idempotent_of_type(&alpha);
            for (_, g) in a.generators() {
                assert_eq!(a.mul(&ea, &g), a.mul(&g, &ea));
            }
        }
    }
}
