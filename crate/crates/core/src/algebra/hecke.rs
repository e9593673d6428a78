//! Iwahori–Hecke algebra H_n with basis h_w.

use super::{Algebra, Element, Memo};
use crate::laurent::LaurentPoly;
use crate::perm::Perm;

pub struct Hecke {
    n: usize,
    memo: Memo<Perm>,
}

impl Hecke {
    pub fn new(n: usize) -> Self {
        Hecke { n, memo: Memo::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h(&self, w: &Perm) -> Element<Perm> {
        Element::basis(w.clone())
    }

    pub fn gen(&self, i: usize) -> Element<Perm> {
        Element::basis(Perm::s(i, self.n))
    }

    /// Steinberg-type element h_{i,j} = 1 + q h_i + q h_j + q² h_ih_j + q² h_jh_i + q³ h_ih_jh_i.
    pub fn steinberg(&self, i: usize, j: usize) -> Element<Perm> {
        let q = |k| LaurentPoly::term(1, k);
        let n = self.n;
        let mut r = Element::basis(Perm::identity(n));
        r.add_term(Perm::s(i, n), &q(1));
        r.add_term(Perm::s(j, n), &q(1));
        r.add_term(Perm::from_word(&[i, j], n), &q(2));
        r.add_term(Perm::from_word(&[j, i], n), &q(2));
        r.add_term(Perm::from_word(&[i, j, i], n), &q(3));
        r
    }
}

/// Right multiplication of a combination of h_x by one generator h_s.
pub(crate) fn hecke_times_s<K: Ord + Clone>(x: &Element<(K, Perm)>, s: usize) -> Element<(K, Perm)> {
    let mut r = Element::zero();
    let qq = LaurentPoly::q_minus_qinv();
    for ((k, w), c) in x.terms() {
        let mut ws = w.clone();
        ws.swap_values(s);
        r.add_term((k.clone(), ws), c);
        if w.is_right_descent(s) {
            r.add_term((k.clone(), w.clone()), &(c * &qq));
        }
    }
    r
}

impl Algebra for Hecke {
    type Basis = Perm;

    fn name(&self) -> String {
        format!("H_{}", self.n)
    }

    fn basis(&self) -> Vec<Perm> {
        Perm::all(self.n)
    }

    fn one(&self) -> Element<Perm> {
        Element::basis(Perm::identity(self.n))
    }

    fn mul_basis(&self, a: &Perm, b: &Perm) -> Element<Perm> {
        self.memo.get_or(a, b, || {
            let mut x: Element<((), Perm)> = Element::basis(((), a.clone()));
            for s in b.reduced_word() {
                x = hecke_times_s(&x, s);
            }
            x.map(|(_, w)| Element::basis(w.clone()))
        })
    }

    fn generators(&self) -> Vec<(String, Element<Perm>)> {
        (1..self.n).map(|i| (format!("h{i}"), self.gen(i))).collect()
    }

    fn star_basis(&self, b: &Perm) -> Option<Element<Perm>> {
        Some(Element::basis(b.inverse()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_and_braid() {
        for n in 2..=4 {
            let h = Hecke::new(n);
            let one = h.one();
            let qq = LaurentPoly::q_minus_qinv();
            for i in 1..n {
                let g = h.gen(i);
                let lhs = h.mul(&g, &g);
                let rhs = one.add(&g.scale(&qq));
                assert_eq!(lhs, rhs);
                if i + 1 < n {
                    let g2 = h.gen(i + 1);
                    assert_eq!(h.product(&[g.clone(), g2.clone(), g.clone()]), h.product(&[g2.clone(), g.clone(), g2]));
                }
            }
        }
    }

    #[test]
    fn associative_n3() {
        let h = Hecke::new(3);
        let b = h.basis();
        for x in &b {
            for y in &b {
                for z in &b {
                    let l = h.mul(&h.mul_basis(x, y), &h.basis_elem(z));
                    let r = h.mul(&h.basis_elem(x), &h.mul_basis(y, z));
                    assert_eq!(l, r);
                }
            }
        }
    }

    #[test]
    fn steinberg_absorbs() {
        let h = Hecke::new(3);
        let st = h.steinberg(1, 2);
        let q = LaurentPoly::q();
        for i in 1..3 {
            assert_eq!(h.mul(&st, &h.gen(i)), st.scale(&q));
        }
    }

    impl Hecke {
        fn basis_elem(&self, w: &Perm) -> Element<Perm> {
            Element::basis(w.clone())
        }
    }
}
