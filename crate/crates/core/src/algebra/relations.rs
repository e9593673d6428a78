//! Defining relations of E_n and bH_n as linear combinations of generator words.

use crate::laurent::LaurentPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gen {
    E(usize),
    G(usize),
    Z(usize),
}

pub type Word = Vec<Gen>;
pub type Combo = Vec<(LaurentPoly, Word)>;

#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub lhs: Combo,
    pub rhs: Combo,
}

fn rel(name: String, lhs: Word, rhs: Word) -> Relation {
    Relation { name, lhs: vec![(LaurentPoly::one(), lhs)], rhs: vec![(LaurentPoly::one(), rhs)] }
}

fn tie_relations(n: usize, out: &mut Vec<Relation>) {
    use Gen::*;
    for i in 1..n {
        out.push(rel(format!("e{i}^2=e{i}"), vec![E(i), E(i)], vec![E(i)]));
        for j in i + 1..n {
            out.push(rel(format!("e{i}e{j}=e{j}e{i}"), vec![E(i), E(j)], vec![E(j), E(i)]));
        }
    }
}

/// Relations of E_n: ties, braids, tie/braid commutations, the mixed relations and g_i² = 1 + (q−q^{−1})e_ig_i.
pub fn bt_relations(n: usize) -> Vec<Relation> {
    use Gen::*;
    let mut out = Vec::new();
    tie_relations(n, &mut out);
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) == 1 {
                out.push(rel(format!("g{i}g{j}g{i}=g{j}g{i}g{j}"), vec![G(i), G(j), G(i)], vec![G(j), G(i), G(j)]));
                out.push(rel(format!("e{i}g{j}g{i}=g{j}g{i}e{j}"), vec![E(i), G(j), G(i)], vec![G(j), G(i), E(j)]));
                out.push(rel(format!("e{i}e{j}g{j}=e{i}g{j}e{i}"), vec![E(i), E(j), G(j)], vec![E(i), G(j), E(i)]));
                out.push(rel(format!("e{i}g{j}e{i}=g{j}e{i}e{j}"), vec![E(i), G(j), E(i)], vec![G(j), E(i), E(j)]));
            }
            if i.abs_diff(j) > 1 && i < j {
                out.push(rel(format!("g{i}g{j}=g{j}g{i}"), vec![G(i), G(j)], vec![G(j), G(i)]));
            }
            if i.abs_diff(j) > 1 {
                out.push(rel(format!("g{i}e{j}=e{j}g{i}"), vec![G(i), E(j)], vec![E(j), G(i)]));
            }
        }
        out.push(rel(format!("g{i}e{i}=e{i}g{i}"), vec![G(i), E(i)], vec![E(i), G(i)]));
        out.push(Relation {
            name: format!("g{i}^2=1+(q-q^-1)e{i}g{i}"),
            lhs: vec![(LaurentPoly::one(), vec![G(i), G(i)])],
            rhs: vec![(LaurentPoly::one(), vec![]), (LaurentPoly::q_minus_qinv(), vec![E(i), G(i)])],
        });
    }
    out
}

/// Relations of bH_n: ties, z braids, e_iz_i = z_i, e_iz_j = z_je_i, z_i² = e_i + (q−q^{−1})z_i.
pub fn bh_relations(n: usize) -> Vec<Relation> {
    use Gen::*;
    let mut out = Vec::new();
    tie_relations(n, &mut out);
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) == 1 {
                out.push(rel(format!("z{i}z{j}z{i}=z{j}z{i}z{j}"), vec![Z(i), Z(j), Z(i)], vec![Z(j), Z(i), Z(j)]));
            }
            if i.abs_diff(j) > 1 && i < j {
                out.push(rel(format!("z{i}z{j}=z{j}z{i}"), vec![Z(i), Z(j)], vec![Z(j), Z(i)]));
            }
            out.push(rel(format!("e{i}z{j}=z{j}e{i}"), vec![E(i), Z(j)], vec![Z(j), E(i)]));
        }
        out.push(rel(format!("e{i}z{i}=z{i}"), vec![E(i), Z(i)], vec![Z(i)]));
        out.push(Relation {
            name: format!("z{i}^2=e{i}+(q-q^-1)z{i}"),
            lhs: vec![(LaurentPoly::one(), vec![Z(i), Z(i)])],
            rhs: vec![(LaurentPoly::one(), vec![E(i)]), (LaurentPoly::q_minus_qinv(), vec![Z(i)])],
        });
    }
    out
}

/// Evaluate a combination in any target given unit, generator images, product and axpy.
pub fn eval_combo<T: Clone>(
    c: &Combo,
    zero: &T,
    one: &T,
    gen: &dyn Fn(Gen) -> T,
    mul: &dyn Fn(&T, &T) -> T,
    axpy: &dyn Fn(&T, &T, &LaurentPoly) -> T,
) -> T {
    let mut acc = zero.clone();
    for (coef, word) in c {
        let mut x = one.clone();
        for &g in word {
            x = mul(&x, &gen(g));
        }
        acc = axpy(&acc, &x, coef);
    }
    acc
}

/// Names of the relations whose two sides differ in the target.
pub fn failing_relations<T: Clone + PartialEq>(
    rels: &[Relation],
    zero: &T,
    one: &T,
    gen: &dyn Fn(Gen) -> T,
    mul: &dyn Fn(&T, &T) -> T,
    axpy: &dyn Fn(&T, &T, &LaurentPoly) -> T,
) -> Vec<String> {
    rels.iter()
        .filter(|r| eval_combo(&r.lhs, zero, one, gen, mul, axpy) != eval_combo(&r.rhs, zero, one, gen, mul, axpy))
        .map(|r| r.name.clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::bh::BhAlgebra;
    use crate::algebra::bt::BtAlgebra;
    use crate::algebra::{Algebra, Element};

    fn axpy<B: Ord + Clone>(a: &Element<B>, b: &Element<B>, c: &LaurentPoly) -> Element<B> {
        let mut r = a.clone();
        r.add_scaled(b, c);
        r
    }

    #[test]
    fn relations_hold_in_the_algebras() {
        for n in 2..=4 {
            let bt = BtAlgebra::new(n);
            let zero = Element::zero();
            let gen = |g: Gen| match g {
                Gen::E(i) => bt.e(i),
                Gen::G(i) => bt.g(i),
                Gen::Z(i) => bt.mul(&bt.e(i), &bt.g(i)),
            };
            let mul = |a: &Element<_>, b: &Element<_>| bt.mul(a, b);
            let bad = failing_relations(&bt_relations(n), &zero, &bt.one(), &gen, &mul, &axpy);
            assert!(bad.is_empty(), "{bad:?}");

            let bh = BhAlgebra::new(n);
            let gen = |g: Gen| match g {
                Gen::E(i) => bh.e(i),
                Gen::Z(i) => bh.z(i),
                Gen::G(_) => unreachable!(),
            };
            let mul = |a: &Element<_>, b: &Element<_>| bh.mul(a, b);
            let bad = failing_relations(&bh_relations(n), &Element::zero(), &bh.one(), &gen, &mul, &axpy);
            assert!(bad.is_empty(), "{bad:?}");
        }
    }

    #[test]
    fn a_wrong_relation_is_detected() {
        let bt = BtAlgebra::new(3);
        let bogus = vec![rel(
            "e1g2g1=g1g2e2".into(),
            vec![Gen::E(1), Gen::G(2), Gen::G(1)],
            vec![Gen::G(1), Gen::G(2), Gen::E(2)],
        )];
        let gen = |g: Gen| match g {
            Gen::E(i) => bt.e(i),
            Gen::G(i) => bt.g(i),
            Gen::Z(_) => unreachable!(),
        };
        let mul = |a: &Element<_>, b: &Element<_>| bt.mul(a, b);
        assert_eq!(failing_relations(&bogus, &Element::zero(), &bt.one(), &gen, &mul, &axpy).len(), 1);
    }
}
