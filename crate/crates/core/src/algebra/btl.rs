//! The tied-boxed Temperley–Lieb algebra bTL_n = ⊕_μ TL_{μ_1} ⊗ ⋯ ⊗ TL_{μ_k}, and π₂ : bH_n → bTL_n.

use std::fmt;

use super::bh::BhBasis;
use super::tl::{delta_pow, TemperleyLieb};
use super::{Algebra, Element};
use crate::combinatorics::{compositions, Composition};
use crate::diagram::Diagram;
use crate::laurent::LaurentPoly;
use crate::perm::Perm;
use crate::setpart::SetPartition;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BtlBasis {
    pub mu: Composition,
    pub diagrams: Vec<Diagram>,
}

impl fmt::Display for BtlBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ds: Vec<String> = self.diagrams.iter().map(|d| d.to_string()).collect();
        write!(f, "B{}[{}]", self.mu, ds.join(" / "))
    }
}

impl fmt::Debug for BtlBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub struct BtlAlgebra {
    n: usize,
    tls: Vec<TemperleyLieb>,
}

impl BtlAlgebra {
    pub fn new(n: usize) -> Self {
        BtlAlgebra { n, tls: (0..=n).map(TemperleyLieb::new).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// π₂(E_I z_w) = Σ_{K ⪰ I linear} ⊗_blocks of K  (h_{w|B} ↦ TL), in the summand of K.
    pub fn pi2_basis(&self, b: &BhBasis) -> Element<BtlBasis> {
        let mut r = Element::zero();
        for k in b.ties.coarsenings().into_iter().filter(|k| k.is_linear()) {
            let mu = k.to_composition().expect("linear");
            let mut acc: Vec<(Vec<Diagram>, LaurentPoly)> = vec![(Vec::new(), LaurentPoly::one())];
            for (o, &m) in mu.offsets().iter().zip(mu.parts()) {
                let images: Vec<usize> = (1..=m).map(|x| b.w.apply(o + x) - o).collect();
                let wb = Perm::from_images(&images).expect("w stabilizes the blocks");
                let img = self.tls[m].from_hecke(&wb);
                let mut next = Vec::new();
                for (ds, c) in &acc {
                    for (d, cd) in img.terms() {
                        let mut ds2 = ds.clone();
                        ds2.push(d.clone());
                        next.push((ds2, c * cd));
                    }
                }
                acc = next;
            }
            for (ds, c) in acc {
                r.add_term(BtlBasis { mu: mu.clone(), diagrams: ds }, &c);
            }
        }
        r
    }

    pub fn pi2(&self, x: &Element<BhBasis>) -> Element<BtlBasis> {
        x.map(|b| self.pi2_basis(b))
    }

    pub fn e(&self, i: usize) -> Element<BtlBasis> {
        self.pi2_basis(&BhBasis { ties: SetPartition::tie(i, i + 1, self.n), w: Perm::identity(self.n) })
    }

    /// π₂(d_i) = π₂(q^{−1}e_i + z_i).
    pub fn d(&self, i: usize) -> Element<BtlBasis> {
        let z = self.pi2_basis(&BhBasis { ties: SetPartition::tie(i, i + 1, self.n), w: Perm::s(i, self.n) });
        z.add(&self.e(i).scale(&LaurentPoly::q_inv()))
    }
}

impl Algebra for BtlAlgebra {
    type Basis = BtlBasis;

    fn name(&self) -> String {
        format!("bTL_{}", self.n)
    }

    fn basis(&self) -> Vec<BtlBasis> {
        let mut out = Vec::new();
        for mu in compositions(self.n).expect("n within bound") {
            let mut acc: Vec<Vec<Diagram>> = vec![Vec::new()];
            for &m in mu.parts() {
                let js = Diagram::all_jones(m);
                acc = acc
                    .into_iter()
                    .flat_map(|pre| {
                        js.iter().map(move |d| {
                            let mut v = pre.clone();
                            v.push(d.clone());
                            v
                        })
                    })
                    .collect();
            }
            out.extend(acc.into_iter().map(|diagrams| BtlBasis { mu: mu.clone(), diagrams }));
        }
        out.sort();
        out
    }

    fn one(&self) -> Element<BtlBasis> {
        let mut r = Element::zero();
        for mu in compositions(self.n).expect("n within bound") {
            let diagrams = mu.parts().iter().map(|&m| Diagram::identity(m)).collect();
            r.add_term(BtlBasis { mu, diagrams }, &LaurentPoly::one());
        }
        r
    }

    fn mul_basis(&self, a: &BtlBasis, b: &BtlBasis) -> Element<BtlBasis> {
        if a.mu != b.mu {
            return Element::zero();
        }
        let mut loops = 0;
        let mut ds = Vec::with_capacity(a.diagrams.len());
        for (x, y) in a.diagrams.iter().zip(&b.diagrams) {
            let c = x.concatenate(y).expect("same size");
            loops += c.loops;
            ds.push(c.diagram);
        }
        Element::term(BtlBasis { mu: a.mu.clone(), diagrams: ds }, delta_pow(loops))
    }

    fn generators(&self) -> Vec<(String, Element<BtlBasis>)> {
        let mut g: Vec<(String, Element<BtlBasis>)> = (1..self.n).map(|i| (format!("e{i}"), self.e(i))).collect();
        g.extend((1..self.n).map(|i| (format!("d{i}"), self.d(i))));
        g
    }

    fn star_basis(&self, b: &BtlBasis) -> Option<Element<BtlBasis>> {
        Some(Element::basis(BtlBasis { mu: b.mu.clone(), diagrams: b.diagrams.iter().map(|d| d.flip()).collect() }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::bh::BhAlgebra;
    use crate::combinatorics::{catalan, composition_sum};

    #[test]
    fn dimension() {
        for n in 1..=5 {
            assert_eq!(BtlAlgebra::new(n).dim() as u128, composition_sum(n, catalan).unwrap());
        }
    }

    #[test]
    fn pi2_is_multiplicative() {
        let bh = BhAlgebra::new(3);
        let btl = BtlAlgebra::new(3);
        let b = bh.basis();
        for x in &b {
            for y in &b {
                let lhs = btl.pi2(&bh.mul_basis(x, y));
                let rhs = btl.mul(&btl.pi2_basis(x), &btl.pi2_basis(y));
                assert_eq!(lhs, rhs, "{x} * {y}");
            }
        }
        assert_eq!(btl.pi2(&bh.one()), btl.one());
    }

    #[test]
    fn pi2_is_onto() {
        use crate::linalg::CoeffMatrix;
        let bh = BhAlgebra::new(3);
        let btl = BtlAlgebra::new(3);
        let idx = btl.basis_index();
        let mut m = CoeffMatrix::new(btl.dim());
        for b in bh.basis() {
            m.push_row(btl.pi2_basis(&b).coordinates(&idx));
        }
        assert_eq!(m.rank_exact(), btl.dim());
    }

    #[test]
    fn steinberg_in_kernel() {
        let bh = BhAlgebra::new(4);
        let btl = BtlAlgebra::new(4);
        for (i, j) in [(1, 2), (2, 3)] {
            assert!(btl.pi2(&bh.steinberg(i, j)).is_zero());
        }
    }

    #[test]
    fn relations() {
        let a = BtlAlgebra::new(4);
        let delta = LaurentPoly::delta();
        for i in 1..4 {
            let (d, e) = (a.d(i), a.e(i));
            assert_eq!(a.mul(&d, &d), d.scale(&delta));
            assert_eq!(a.mul(&d, &e), d);
            for j in 1..4 {
                let (dj, ej) = (a.d(j), a.e(j));
                assert_eq!(a.mul(&d, &ej), a.mul(&ej, &d));
                if i.abs_diff(j) > 1 {
                    assert_eq!(a.mul(&d, &dj), a.mul(&dj, &d));
                }
                if i.abs_diff(j) == 1 {
                    assert_eq!(a.product(&[d.clone(), dj.clone(), d.clone()]), a.product(&[ej.clone(), d.clone(), ej]));
                }
            }
        }
    }
}
