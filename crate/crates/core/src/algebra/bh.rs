//! The tied-boxed Hecke algebra bH_n, basis E_I z_w with I linear and w ∈ S_I.

use std::fmt;

use super::bt::{BtAlgebra, BtBasis};
use super::hecke::hecke_times_s;
use super::{Algebra, Element, Memo};
use crate::combinatorics::Composition;
use crate::laurent::LaurentPoly;
use crate::perm::Perm;
use crate::setpart::{mobius_linear, SetPartition};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BhBasis {
    pub ties: SetPartition,
    pub w: Perm,
}

impl BhBasis {
    pub fn composition(&self) -> Composition {
        self.ties.to_composition().expect("linear")
    }
}

impl fmt::Display for BhBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E[{}]z[{}]", self.ties, self.w)
    }
}

impl fmt::Debug for BhBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub struct BhAlgebra {
    n: usize,
    memo: Memo<BhBasis>,
}

impl BhAlgebra {
    pub fn new(n: usize) -> Self {
        BhAlgebra { n, memo: Memo::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis_elem(&self, ties: SetPartition, w: Perm) -> Element<BhBasis> {
        Element::basis(BhBasis { ties, w })
    }

    pub fn big_e(&self, ties: &SetPartition) -> Element<BhBasis> {
        self.basis_elem(ties.clone(), Perm::identity(self.n))
    }

    pub fn e(&self, i: usize) -> Element<BhBasis> {
        self.big_e(&SetPartition::tie(i, i + 1, self.n))
    }

    pub fn z(&self, i: usize) -> Element<BhBasis> {
        self.basis_elem(SetPartition::tie(i, i + 1, self.n), Perm::s(i, self.n))
    }

    /// d_i = q^{−1} e_i + z_i.
    pub fn d(&self, i: usize) -> Element<BhBasis> {
        self.z(i).add(&self.e(i).scale(&LaurentPoly::q_inv()))
    }

    /// E_I z_w as the product E_I z_{i_1} ⋯ z_{i_k} along a reduced word.
    pub fn z_w(&self, ties: &SetPartition, w: &Perm) -> Element<BhBasis> {
        let mut xs = vec![self.big_e(ties)];
        xs.extend(w.reduced_word().into_iter().map(|i| self.z(i)));
        self.product(&xs)
    }

    /// z_{i,j} = e_ie_j(1 + qz_i + qz_j + q²z_iz_j + q²z_jz_i + q³z_iz_jz_i).
    pub fn steinberg(&self, i: usize, j: usize) -> Element<BhBasis> {
        let q = |k| LaurentPoly::term(1, k);
        let ee = self.mul(&self.e(i), &self.e(j));
        let (zi, zj) = (self.z(i), self.z(j));
        let mut h = ee.clone();
        h.add_scaled(&self.mul(&ee, &zi), &q(1));
        h.add_scaled(&self.mul(&ee, &zj), &q(1));
        h.add_scaled(&self.product(&[ee.clone(), zi.clone(), zj.clone()]), &q(2));
        h.add_scaled(&self.product(&[ee.clone(), zj.clone(), zi.clone()]), &q(2));
        h.add_scaled(&self.product(&[ee, zi.clone(), zj, zi]), &q(3));
        h
    }

    /// 𝔼_I = Σ_{J ⪰ I linear} μ(I, J) E_J.
    pub fn idempotent(&self, ties: &SetPartition) -> Element<BhBasis> {
        self.idempotent_with(ties, mobius_linear)
    }

    /// The same inclusion–exclusion sum with a caller-supplied Möbius function.
    pub fn idempotent_with(
        &self,
        ties: &SetPartition,
        mu: impl Fn(&SetPartition, &SetPartition) -> i64,
    ) -> Element<BhBasis> {
        let mut r = Element::zero();
        for j in ties.coarsenings().into_iter().filter(|j| j.is_linear()) {
            r.add_scaled(&self.big_e(&j), &LaurentPoly::constant(mu(ties, &j)));
        }
        r
    }

    /// The embedding E_I z_w ↦ E_I g_w into E_n restricted to the bH basis.
    pub fn iota1(&self, x: &Element<BhBasis>) -> Element<BtBasis> {
        x.map(|b| Element::basis(BtBasis { ties: b.ties.clone(), w: b.w.clone() }))
    }

    /// The image of E_I z_w in E_n: E_I g_w.
    pub fn to_bt(&self, bt: &BtAlgebra, b: &BhBasis) -> Element<BtBasis> {
        bt.basis_elem(b.ties.clone(), b.w.clone())
    }
}

impl Algebra for BhAlgebra {
    type Basis = BhBasis;

    fn name(&self) -> String {
        format!("bH_{}", self.n)
    }

    fn basis(&self) -> Vec<BhBasis> {
        let perms = Perm::all(self.n);
        let mut out = Vec::new();
        for ties in SetPartition::all_linear(self.n) {
            for w in perms.iter().filter(|w| w.stabilizes_blocks(ties.blocks())) {
                out.push(BhBasis { ties: ties.clone(), w: w.clone() });
            }
        }
        out
    }

    fn one(&self) -> Element<BhBasis> {
        self.big_e(&SetPartition::singletons_n(self.n))
    }

    fn mul_basis(&self, a: &BhBasis, b: &BhBasis) -> Element<BhBasis> {
        self.memo.get_or(a, b, || {
            let k = a.ties.join(&b.ties);
            let mut x: Element<(SetPartition, Perm)> = Element::basis((k, a.w.clone()));
            for s in b.w.reduced_word() {
                x = hecke_times_s(&x, s);
            }
            x.map(|(ties, w)| Element::basis(BhBasis { ties: ties.clone(), w: w.clone() }))
        })
    }

    fn generators(&self) -> Vec<(String, Element<BhBasis>)> {
        let mut g: Vec<(String, Element<BhBasis>)> = (1..self.n).map(|i| (format!("e{i}"), self.e(i))).collect();
        g.extend((1..self.n).map(|i| (format!("z{i}"), self.z(i))));
        g
    }

    fn star_basis(&self, b: &BhBasis) -> Option<Element<BhBasis>> {
        Some(self.basis_elem(b.ties.clone(), b.w.inverse()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{composition_sum, factorial};

    #[test]
    fn dimension() {
        for n in 1..=5 {
            let expected = composition_sum(n, factorial).unwrap();
            assert_eq!(BhAlgebra::new(n).dim() as u128, expected);
        }
    }

    #[test]
    fn relations() {
        let a = BhAlgebra::new(4);
        let qq = LaurentPoly::q_minus_qinv();
        for i in 1..4 {
            let (z, e) = (a.z(i), a.e(i));
            assert_eq!(a.mul(&z, &z), e.add(&z.scale(&qq)));
            assert_eq!(a.mul(&e, &z), z);
            assert_eq!(a.mul(&z, &e), z);
            for j in 1..4 {
                assert_eq!(a.mul(&e, &a.z(j)), a.mul(&a.z(j), &e));
                if i.abs_diff(j) == 1 {
                    let zj = a.z(j);
                    assert_eq!(a.product(&[z.clone(), zj.clone(), z.clone()]), a.product(&[zj.clone(), z.clone(), zj]));
                }
            }
        }
    }

    #[test]
    fn iota1_is_multiplicative() {
        let a = BhAlgebra::new(3);
        let bt = BtAlgebra::new(3);
        let b = a.basis();
        for x in &b {
            for y in &b {
                let lhs = a.iota1(&a.mul_basis(x, y));
                let rhs = bt.mul(&a.to_bt(&bt, x), &a.to_bt(&bt, y));
                assert_eq!(lhs, rhs, "{x} * {y}");
            }
        }
    }

    #[test]
    fn basis_via_words() {
        let a = BhAlgebra::new(4);
        for b in a.basis() {
            assert_eq!(a.z_w(&b.ties, &b.w), Element::basis(b.clone()));
        }
    }
}
