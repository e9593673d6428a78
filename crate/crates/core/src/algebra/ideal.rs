//! Two-sided ideals as row spaces over the coefficient ring.

use super::{Algebra, Element};
use crate::linalg::{CoeffMatrix, Echelon};

/// Span of {a·x·b : a, b basis, x a generator}, pruned to an independent set.
pub fn ideal_span<A: Algebra>(alg: &A, gens: &[Element<A::Basis>]) -> CoeffMatrix {
    let basis: Vec<Element<A::Basis>> = alg.basis().into_iter().map(Element::basis).collect();
    let idx = alg.basis_index();
    let mut ech = Echelon::new();
    let mut m = CoeffMatrix::new(basis.len());
    for x in gens {
        for b in &basis {
            let xb = alg.mul(x, b);
            if xb.is_zero() {
                continue;
            }
            for a in &basis {
                let row = alg.mul(a, &xb).coordinates(&idx);
                if ech.insert(row.clone()) {
                    m.push_row(row);
                }
            }
        }
    }
    m
}

/// Coordinates of a list of elements as matrix rows.
pub fn span_of<A: Algebra>(alg: &A, xs: &[Element<A::Basis>]) -> CoeffMatrix {
    let idx = alg.basis_index();
    let mut m = CoeffMatrix::new(idx.len());
    for x in xs {
        m.push_row(x.coordinates(&idx));
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::bh::BhAlgebra;
    use crate::algebra::bt::BtAlgebra;
    use crate::algebra::hecke::Hecke;
    use crate::combinatorics::ptl_dimension;

    #[test]
    fn hecke_steinberg_ideal_n3() {
        let h = Hecke::new(3);
        let m = ideal_span(&h, &[h.steinberg(1, 2)]);
        assert_eq!(m.rank_exact(), 1);
    }

    #[test]
    fn partition_tl_quotient_n3() {
        let bt = BtAlgebra::new(3);
        let j = ideal_span(&bt, &[bt.steinberg(1, 2), bt.steinberg(2, 1)]);
        let rank = j.rank_exact();
        assert_eq!(bt.dim() - rank, ptl_dimension(3) as usize);
        let bh = BhAlgebra::new(3);
        let jb = ideal_span(&bh, &[bh.steinberg(1, 2)]);
        let mut img = CoeffMatrix::new(bt.dim());
        let idx = bt.basis_index();
        for row in jb.rows() {
            let mut x = Element::zero();
            let basis = bh.basis();
            for (k, c) in row {
                x.add_term(basis[*k].clone(), c);
            }
            img.push_row(bh.iota1(&x).coordinates(&idx));
        }
        assert!(j.row_space_contains(&img));
    }
}
