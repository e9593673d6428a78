//! Temperley–Lieb algebra TL_n on Jones diagrams, δ = q + q^{−1}.

use super::{Algebra, Element, Memo};
use crate::diagram::Diagram;
use crate::laurent::LaurentPoly;
use crate::perm::Perm;

pub struct TemperleyLieb {
    n: usize,
    memo: Memo<Diagram>,
}

pub(crate) fn delta_pow(k: usize) -> LaurentPoly {
    let mut r = LaurentPoly::one();
    let d = LaurentPoly::delta();
    for _ in 0..k {
        r = &r * &d;
    }
    r
}

impl TemperleyLieb {
    pub fn new(n: usize) -> Self {
        TemperleyLieb { n, memo: Memo::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn u(&self, i: usize) -> Element<Diagram> {
        Element::basis(Diagram::t(i, self.n).expect("index in range"))
    }

    /// Image of h_w under h_i ↦ U_i − q^{−1}.
    pub fn from_hecke(&self, w: &Perm) -> Element<Diagram> {
        let mut x = self.one();
        for i in w.reduced_word() {
            let f = self.u(i).sub(&self.one().scale(&LaurentPoly::q_inv()));
            x = self.mul(&x, &f);
        }
        x
    }

    pub fn hecke_to_tl(&self, h: &Element<Perm>) -> Element<Diagram> {
        h.map(|w| self.from_hecke(w))
    }
}

impl Algebra for TemperleyLieb {
    type Basis = Diagram;

    fn name(&self) -> String {
        format!("TL_{}", self.n)
    }

    fn basis(&self) -> Vec<Diagram> {
        Diagram::all_jones(self.n)
    }

    fn one(&self) -> Element<Diagram> {
        Element::basis(Diagram::identity(self.n))
    }

    fn mul_basis(&self, a: &Diagram, b: &Diagram) -> Element<Diagram> {
        self.memo.get_or(a, b, || {
            let r = a.concatenate(b).expect("same size");
            Element::term(r.diagram, delta_pow(r.loops))
        })
    }

    fn generators(&self) -> Vec<(String, Element<Diagram>)> {
        (1..self.n).map(|i| (format!("u{i}"), self.u(i))).collect()
    }

    fn star_basis(&self, b: &Diagram) -> Option<Element<Diagram>> {
        Some(Element::basis(b.flip()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::hecke::Hecke;
    use crate::combinatorics::catalan;

    #[test]
    fn dimension_is_catalan() {
        for n in 1..=6 {
            assert_eq!(TemperleyLieb::new(n).dim() as u128, catalan(n));
        }
    }

    #[test]
    fn projection_is_multiplicative() {
        let h = Hecke::new(4);
        let tl = TemperleyLieb::new(4);
        for x in h.basis() {
            for y in [Perm::s(1, 4), Perm::s(2, 4), Perm::s(3, 4), Perm::from_word(&[2, 1, 3], 4)] {
                let lhs = tl.hecke_to_tl(&h.mul_basis(&x, &y));
                let rhs = tl.mul(&tl.from_hecke(&x), &tl.from_hecke(&y));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn steinberg_maps_to_zero() {
        let h = Hecke::new(3);
        let tl = TemperleyLieb::new(3);
        assert!(tl.hecke_to_tl(&h.steinberg(1, 2)).is_zero());
    }

    #[test]
    fn relations() {
        let tl = TemperleyLieb::new(4);
        let d = LaurentPoly::delta();
        for i in 1..4 {
            assert_eq!(tl.mul(&tl.u(i), &tl.u(i)), tl.u(i).scale(&d));
            if i < 3 {
                assert_eq!(tl.product(&[tl.u(i), tl.u(i + 1), tl.u(i)]), tl.u(i));
            }
        }
    }
}
