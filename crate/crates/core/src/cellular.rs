//! Murphy-type cellular bases and checks of the cellular axioms.
//!
//! Labels are multipartitions. Two labels with the same composition compare by
//! componentwise dominance; labels with different compositions compare by the
//! lexicographic order of their compositions.

use std::collections::{BTreeMap, HashMap};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::bh::{BhAlgebra, BhBasis};
use crate::algebra::btl::{BtlAlgebra, BtlBasis};
use crate::algebra::checks::Check;
use crate::algebra::hecke::Hecke;
use crate::algebra::tl::TemperleyLieb;
use crate::algebra::{Algebra, Element};
use crate::combinatorics::{
    initial_kind_multitableaux, linear_multipartitions, partitions, Multicomposition, Multitableau,
};
use crate::diagram::Diagram;
use crate::error::Result;
use crate::laurent::LaurentPoly;
use crate::linalg::{apply_inverse, CoeffMatrix, RatFn};
use crate::perm::Perm;
use crate::setpart::SetPartition;

#[derive(Clone, Debug)]
pub struct CellEntry<B: Ord + Clone + std::fmt::Display> {
    pub label: usize,
    pub s: usize,
    pub t: usize,
    pub elem: Element<B>,
}

#[derive(Clone, Debug)]
pub struct CellDatum<B: Ord + Clone + std::fmt::Display> {
    pub algebra: String,
    pub labels: Vec<Multicomposition>,
    pub tableaux: Vec<Vec<Multitableau>>,
    pub entries: Vec<CellEntry<B>>,
}

/// a ▷ b in the cell poset.
pub fn label_greater(a: &Multicomposition, b: &Multicomposition) -> bool {
    if a.comp() != b.comp() {
        return a.comp() > b.comp();
    }
    a != b && a.components().iter().zip(b.components()).all(|(x, y)| y.dominated_by(x))
}

impl<B: Ord + Clone + std::fmt::Display> CellDatum<B> {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn position(&self) -> HashMap<(usize, usize, usize), usize> {
        self.entries.iter().enumerate().map(|(k, e)| ((e.label, e.s, e.t), k)).collect()
    }

    pub fn entry(&self, label: usize, s: usize, t: usize) -> Option<&CellEntry<B>> {
        self.entries.iter().find(|e| e.label == label && e.s == s && e.t == t)
    }

    /// Add to an entry with a maximal label the element of an entry with another label.
    pub fn corrupted(&self) -> CellDatum<B> {
        let mut d = self.clone();
        let top =
            (0..d.labels.len()).find(|&a| (0..d.labels.len()).all(|b| !label_greater(&d.labels[b], &d.labels[a])));
        let Some(top) = top else { return d };
        let x = d.entries.iter().position(|e| e.label == top);
        let y = d.entries.iter().position(|e| e.label != top);
        if let (Some(x), Some(y)) = (x, y) {
            let extra = d.entries[y].elem.clone();
            d.entries[x].elem = d.entries[x].elem.add(&extra);
        }
        d
    }
}

/// Σ_{w ∈ S_𝛌} q^{ℓ(w)} h_w with S_𝛌 the row stabilizer of t^𝛌.
pub fn murphy_element(h: &Hecke, shape: &Multicomposition) -> Element<Perm> {
    let init = Multitableau::initial(shape);
    let rows: Vec<Vec<usize>> = init.components().iter().flat_map(|t| t.rows().to_vec()).collect();
    let mut m = Element::zero();
    for w in Perm::all(h.n()).into_iter().filter(|w| w.stabilizes_blocks(&rows)) {
        let l = w.length() as i32;
        m.add_term(w, &LaurentPoly::term(1, l));
    }
    m
}

/// m_st = h*_{d(s)} m_𝛌 h_{d(t)}.
pub fn murphy_st(h: &Hecke, shape: &Multicomposition, s: &Multitableau, t: &Multitableau) -> Element<Perm> {
    let left = Element::basis(s.d().inverse());
    let right = Element::basis(t.d());
    h.product(&[left, murphy_element(h, shape), right])
}

fn build<B: Ord + Clone + std::fmt::Display>(
    algebra: String,
    labels: Vec<Multicomposition>,
    f: impl Fn(&Multicomposition, &Multitableau, &Multitableau) -> Element<B>,
) -> Result<CellDatum<B>> {
    let mut tableaux = Vec::new();
    let mut entries = Vec::new();
    for (li, lam) in labels.iter().enumerate() {
        let ts = initial_kind_multitableaux(lam)?;
        for (si, s) in ts.iter().enumerate() {
            for (ti, t) in ts.iter().enumerate() {
                entries.push(CellEntry { label: li, s: si, t: ti, elem: f(lam, s, t) });
            }
        }
        tableaux.push(ts);
    }
    Ok(CellDatum { algebra, labels, tableaux, entries })
}

fn single(lams: Vec<crate::combinatorics::IntPartition>) -> Vec<Multicomposition> {
    lams.into_iter().map(|l| Multicomposition(vec![l])).collect()
}

/// Murphy's basis of H_n.
pub fn murphy_basis_hecke(h: &Hecke) -> Result<CellDatum<Perm>> {
    build(h.name(), single(partitions(h.n())), |lam, s, t| murphy_st(h, lam, s, t))
}

/// Images in TL_n of the Murphy elements with at most two columns.
pub fn murphy_basis_tl(tl: &TemperleyLieb) -> Result<CellDatum<Diagram>> {
    let h = Hecke::new(tl.n());
    let labels = single(partitions(tl.n())).into_iter().filter(|l| l.at_most_two_columns()).collect();
    build(tl.name(), labels, |lam, s, t| tl.hecke_to_tl(&murphy_st(&h, lam, s, t)))
}

/// 𝐦_st = 𝔼_{I_𝛌} · (h_w ↦ E_{I_𝛌} z_w)(m_st).
pub fn bh_cellular(bh: &BhAlgebra) -> Result<CellDatum<BhBasis>> {
    let h = Hecke::new(bh.n());
    build(bh.name(), linear_multipartitions(bh.n())?, |lam, s, t| bh_element(bh, &h, lam, s, t))
}

fn bh_element(
    bh: &BhAlgebra,
    h: &Hecke,
    lam: &Multicomposition,
    s: &Multitableau,
    t: &Multitableau,
) -> Element<BhBasis> {
    let ties = SetPartition::from_composition(&lam.comp());
    let m = murphy_st(h, lam, s, t).map(|w| bh.basis_elem(ties.clone(), w.clone()));
    bh.mul(&bh.idempotent(&ties), &m)
}

/// π₂ of the bH cellular elements whose components have at most two columns.
pub fn btl_cellular(btl: &BtlAlgebra) -> Result<CellDatum<BtlBasis>> {
    let bh = BhAlgebra::new(btl.n());
    let h = Hecke::new(btl.n());
    let labels = linear_multipartitions(btl.n())?.into_iter().filter(|l| l.at_most_two_columns()).collect();
    build(btl.name(), labels, |lam, s, t| btl.pi2(&bh_element(&bh, &h, lam, s, t)))
}

pub fn transition_matrix<A: Algebra>(alg: &A, datum: &CellDatum<A::Basis>) -> CoeffMatrix {
    let idx = alg.basis_index();
    let mut m = CoeffMatrix::new(idx.len());
    for e in &datum.entries {
        m.push_row(e.elem.coordinates(&idx));
    }
    m
}

/// (c_st)* = c_ts for every entry.
pub fn star_check<A: Algebra>(alg: &A, datum: &CellDatum<A::Basis>) -> Check {
    let pos = datum.position();
    for e in &datum.entries {
        let st = alg.star(&e.elem).ok_or_else(|| format!("{} has no anti-involution", alg.name()))?;
        let other = &datum.entries[pos[&(e.label, e.t, e.s)]].elem;
        if &st != other {
            return Err(format!("star of ({:?}, {}, {})", datum.labels[e.label], e.s, e.t));
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub checked: usize,
    pub total: usize,
}

/// Axiom (ii): c_st·a ≡ Σ_v r_v(t, a) c_sv modulo higher labels, with r_v independent of s.
///
/// With `sample = Some((seed, k))` only k of the (entry, generator) pairs are checked.
pub fn axiom_check<A: Algebra>(
    alg: &A,
    datum: &CellDatum<A::Basis>,
    sample: Option<(u64, usize)>,
) -> std::result::Result<AxiomReport, String> {
    let t = transition_matrix(alg, datum);
    let inv = t.inverse().map_err(|e| format!("transition matrix: {e}"))?;
    let idx = alg.basis_index();
    let gens = alg.generators();
    let mut work: Vec<(usize, usize)> =
        (0..datum.entries.len()).flat_map(|k| (0..gens.len()).map(move |g| (k, g))).collect();
    let total = work.len();
    if let Some((seed, k)) = sample {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        work.shuffle(&mut rng);
        work.truncate(k);
        work.sort_unstable();
    }
    // r-vectors keyed by (label, t, generator), to compare across s
    let mut seen: HashMap<(usize, usize, usize), (usize, BTreeMap<usize, RatFn>)> = HashMap::new();
    for &(k, g) in &work {
        let e = &datum.entries[k];
        let prod = alg.mul(&e.elem, &gens[g].1);
        let y: BTreeMap<usize, LaurentPoly> = prod.coordinates(&idx).into_iter().collect();
        let x = apply_inverse(&y, &inv);
        let mut r: BTreeMap<usize, RatFn> = BTreeMap::new();
        for (j, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.as_poly().is_none() {
                return Err(format!("c·{} has non-polynomial coefficient", gens[g].0));
            }
            let f = &datum.entries[j];
            if f.label == e.label && f.s == e.s {
                r.insert(f.t, c.clone());
            } else if !label_greater(&datum.labels[f.label], &datum.labels[e.label]) {
                return Err(format!(
                    "c[{:?}; {}, {}]·{} involves c[{:?}; {}, {}]",
                    datum.labels[e.label], e.s, e.t, gens[g].0, datum.labels[f.label], f.s, f.t
                ));
            }
        }
        match seen.get(&(e.label, e.t, g)) {
            Some((s0, r0)) if r0 != &r => {
                return Err(format!(
                    "coefficients of c[{:?}; ·, {}]·{} differ between s = {} and s = {}",
                    datum.labels[e.label], e.t, gens[g].0, s0, e.s
                ))
            }
            Some(_) => {}
            None => {
                seen.insert((e.label, e.t, g), (e.s, r));
            }
        }
    }
    Ok(AxiomReport { checked: work.len(), total })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{catalan, factorial};

    #[test]
    fn hecke_murphy() {
        for n in 1..=4 {
            let h = Hecke::new(n);
            let d = murphy_basis_hecke(&h).unwrap();
            assert_eq!(d.len() as u128, factorial(n));
            assert_eq!(transition_matrix(&h, &d).rank_exact(), d.len());
            assert_eq!(star_check(&h, &d), Ok(()));
            if n <= 3 {
                assert!(axiom_check(&h, &d, None).is_ok());
            }
        }
    }

    #[test]
    fn top_murphy_element() {
        let h = Hecke::new(3);
        let d = murphy_basis_hecke(&h).unwrap();
        let top = d.labels.iter().position(|l| l.components()[0].parts() == [3]).unwrap();
        let e = d.entry(top, 0, 0).unwrap();
        assert_eq!(e.elem.len(), 6);
        for (w, c) in e.elem.terms() {
            assert_eq!(c, &LaurentPoly::term(1, w.length() as i32));
        }
    }

    #[test]
    fn tl_murphy() {
        for n in 1..=5 {
            let tl = TemperleyLieb::new(n);
            let d = murphy_basis_tl(&tl).unwrap();
            assert_eq!(d.len() as u128, catalan(n));
            assert_eq!(transition_matrix(&tl, &d).rank_exact(), d.len());
            assert_eq!(star_check(&tl, &d), Ok(()));
        }
        let tl = TemperleyLieb::new(4);
        assert!(axiom_check(&tl, &murphy_basis_tl(&tl).unwrap(), None).is_ok());
    }

    #[test]
    fn bh_datum_n3() {
        let bh = BhAlgebra::new(3);
        let d = bh_cellular(&bh).unwrap();
        assert_eq!(d.len(), 11);
        assert_eq!(transition_matrix(&bh, &d).rank_exact(), 11);
        assert_eq!(star_check(&bh, &d), Ok(()));
        assert_eq!(axiom_check(&bh, &d, None).map(|r| r.checked), Ok(44));
        assert!(axiom_check(&bh, &d.corrupted(), None).is_err());
    }

    #[test]
    fn bh_tie_action_is_trivial_or_zero() {
        let bh = BhAlgebra::new(3);
        let d = bh_cellular(&bh).unwrap();
        for e in &d.entries {
            for i in 1..3 {
                let p = bh.mul(&e.elem, &bh.e(i));
                assert!(p.is_zero() || p == e.elem);
            }
        }
    }

    #[test]
    fn btl_datum_n3() {
        let btl = BtlAlgebra::new(3);
        let d = btl_cellular(&btl).unwrap();
        assert_eq!(d.len(), 10);
        assert!(d.labels.iter().all(|l| l.at_most_two_columns()));
        assert_eq!(transition_matrix(&btl, &d).rank_exact(), 10);
        assert_eq!(star_check(&btl, &d), Ok(()));
        assert!(axiom_check(&btl, &d, None).is_ok());
    }

    #[test]
    fn corrupted_controls_fail() {
        let h = Hecke::new(3);
        assert!(axiom_check(&h, &murphy_basis_hecke(&h).unwrap().corrupted(), None).is_err());
        let btl = BtlAlgebra::new(3);
        assert!(axiom_check(&btl, &btl_cellular(&btl).unwrap().corrupted(), None).is_err());
    }

    #[test]
    fn sampled_n4() {
        let bh = BhAlgebra::new(4);
        let d = bh_cellular(&bh).unwrap();
        assert_eq!(d.len(), 47);
        assert_eq!(star_check(&bh, &d), Ok(()));
        let r = axiom_check(&bh, &d, Some((7, 40))).unwrap();
        assert_eq!((r.checked, r.total), (40, 47 * 6));
        let btl = BtlAlgebra::new(4);
        let d = btl_cellular(&btl).unwrap();
        assert_eq!(d.len(), 35);
        assert!(axiom_check(&btl, &d, None).is_ok());
    }

    #[test]
    fn poset_examples() {
        let p = |v: Vec<Vec<usize>>| {
            Multicomposition(v.into_iter().map(|c| crate::combinatorics::Composition::new(c).unwrap()).collect())
        };
        assert!(label_greater(&p(vec![vec![2]]), &p(vec![vec![1, 1]])));
        assert!(!label_greater(&p(vec![vec![1, 1]]), &p(vec![vec![2]])));
        assert!(!label_greater(&p(vec![vec![2]]), &p(vec![vec![2]])));
        assert!(label_greater(&p(vec![vec![2], vec![1]]), &p(vec![vec![1], vec![2]])));
    }
}
