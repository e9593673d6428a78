//! The verification matrix: ten groups of checks, each producing report records.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::algebra::bh::BhAlgebra;
use crate::algebra::bt::BtAlgebra;
use crate::algebra::btl::BtlAlgebra;
use crate::algebra::checks::{
    bh_idempotent_family, bh_idempotent_table, bh_idempotents, bh_rows_in_bt, bt_idempotents, bt_noncentral_witness,
    bt_type_idempotents,
};
use crate::algebra::ideal::ideal_span;
use crate::algebra::relations::{bh_relations, bt_relations};
use crate::algebra::tensor::{SparseOp, TensorRep};
use crate::algebra::Algebra;
use crate::cellular::{axiom_check, bh_cellular, btl_cellular, star_check, transition_matrix, CellDatum};
use crate::combinatorics::{bell, binomial, catalan, composition_sum, double_factorial_odd, factorial, ptl_dimension};
use crate::diagram::Diagram;
use crate::error::Result;
use crate::kb::KbBudget;
use crate::laurent::LaurentPoly;
use crate::linalg::RankMode;
use crate::monoid::Monoid;
use crate::perm::Perm;
use crate::presentations::{brauer, brauer_target, presentation_check, run_preset, srs_identities, srsn, Preset};
use crate::ramified::{
    boxed_identities, brs_generators, center, enumerate_ramified, normal_form, normal_form_with_word, singular_part,
    Flavor, MonoidKind, RamifiedPartition,
};
use crate::report::{Provenance, Record, Report, Status};
use crate::setpart::{mobius_linear, SetPartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    /// n ≤ 3 everywhere.
    Quick,
    /// The full acceptance matrix.
    Full,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub profile: Profile,
    pub seed: u64,
    pub kb: KbBudget,
    /// Sample size for the n = 4 cellular axiom check.
    pub cellular_samples: usize,
    /// Replace the Möbius function in the bH idempotents by one with flipped signs.
    pub corrupt_mobius: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            profile: Profile::Full,
            seed: 0,
            kb: KbBudget::default(),
            cellular_samples: 60,
            corrupt_mobius: false,
        }
    }
}

impl VerifyConfig {
    pub fn quick() -> Self {
        VerifyConfig { profile: Profile::Quick, ..Default::default() }
    }

    fn cap(&self, full: usize) -> usize {
        match self.profile {
            Profile::Quick => full.min(3),
            Profile::Full => full,
        }
    }
}

pub const CRITERIA: [&str; 10] = [
    "monoid cardinalities",
    "dimension formulas",
    "presentations",
    "tensor representation",
    "structure constants",
    "idempotents",
    "cellular bases",
    "quotients and embeddings",
    "normal forms",
    "centers",
];

fn seq(v: impl IntoIterator<Item = u128>) -> String {
    v.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// A failing row carrying an error.
pub fn failed(name: &str, e: impl std::fmt::Display) -> Record {
    Record::check(name, Err(e.to_string()), Provenance::Trivial)
}

fn count_row(
    name: &str,
    ns: std::ops::RangeInclusive<usize>,
    expected: &[u128],
    f: impl Fn(usize) -> Result<usize>,
) -> Record {
    let want: Vec<u128> = ns.clone().map(|n| expected[n - 1]).collect();
    let got: Result<Vec<u128>> = ns.map(|n| f(n).map(|x| x as u128)).collect();
    match got {
        Ok(g) => Record::compare(name, seq(want), seq(g), Provenance::Reference),
        Err(e) => failed(name, e),
    }
}

/// Exhaustive enumeration against the published cardinality sequences.
pub fn monoid_cardinalities(cfg: &VerifyConfig) -> Report {
    let mut r = Report::new("monoid cardinalities");
    let boxed = |k: MonoidKind| move |n| enumerate_ramified(k, n, true).map(|v| v.len());
    r.push(count_row("|BR(S_n)|", 1..=cfg.cap(5), &[1, 3, 11, 47, 231], boxed(MonoidKind::Symmetric)));
    r.push(count_row("|BR(J_n)|", 1..=cfg.cap(5), &[1, 3, 10, 35, 126], boxed(MonoidKind::Jones)));
    r.push(count_row("|BR(Br_n)|", 1..=cfg.cap(5), &[1, 4, 22, 154, 1330], boxed(MonoidKind::Brauer)));
    r.push(count_row("|BR(C_n)|", 1..=cfg.cap(4), &[2, 19, 271, 5373], boxed(MonoidKind::Full)));
    r.push(count_row("|sR(S_3)|", 3..=3, &[0, 0, 24], |n| singular_part(n).map(|v| v.len())));
    let ns = 1..=cfg.cap(5);
    r.push(Record::compare(
        "|Br_n| = (2n-1)!!",
        seq(ns.clone().map(double_factorial_odd)),
        seq(ns.map(|n| Diagram::all_brauer(n).len() as u128)),
        Provenance::Reference,
    ));
    let ns = 1..=cfg.cap(6);
    r.push(Record::compare(
        "|J_n| = catalan(n)",
        seq(ns.clone().map(catalan)),
        seq(ns.map(|n| Diagram::all_jones(n).len() as u128)),
        Provenance::Reference,
    ));
    r
}

/// Basis counts against the closed formulas.
pub fn dimension_formulas(cfg: &VerifyConfig) -> Report {
    let mut r = Report::new("dimension formulas");
    let ns = 1..=cfg.cap(4);
    r.push(Record::compare(
        "dim E_n = n!·bell(n)",
        seq(ns.clone().map(|n| factorial(n) * bell(n))),
        seq(ns.map(|n| BtAlgebra::new(n).dim() as u128)),
        Provenance::Reference,
    ));
    let ns = 1..=cfg.cap(6);
    r.push(Record::compare(
        "dim bH_n = Σ Π μ_i!",
        seq(ns.clone().map(|n| composition_sum(n, factorial).unwrap_or(0))),
        seq(ns.map(|n| BhAlgebra::new(n).dim() as u128)),
        Provenance::Reference,
    ));
    let ns = 1..=cfg.cap(8);
    let dims: Vec<u128> = ns.clone().map(|n| BtlAlgebra::new(n).dim() as u128).collect();
    r.push(Record::compare(
        "dim bTL_n = Σ Π catalan(μ_i)",
        seq(ns.clone().map(|n| composition_sum(n, catalan).unwrap_or(0))),
        seq(dims.iter().copied()),
        Provenance::Derived,
    ));
    r.push(Record::compare(
        "dim bTL_n = binomial(2n-1, n)",
        seq(ns.map(|n| binomial(2 * n - 1, n))),
        seq(dims),
        Provenance::Reference,
    ));
    r
}

fn preset_row(preset: Preset, n: usize, expected: usize, kb: &KbBudget) -> Record {
    let name = format!("present-check {preset} n={n}");
    match run_preset(preset, n, kb) {
        Ok(rep) => {
            let got = rep.normal_forms.map_or_else(|| "?".to_string(), |k| k.to_string());
            let mut rec = Record::compare(&name, expected, got, Provenance::Reference).with_status(rep.status);
            if rep.status == Status::Pass && rep.target_size != expected {
                rec.status = Status::Fail;
            }
            rec.witness = rep.witness;
            rec
        }
        Err(e) => failed(&name, e),
    }
}

/// Presentations against the enumerated monoids.
pub fn presentations(cfg: &VerifyConfig) -> Report {
    let mut r = Report::new("presentations");
    let mut rows = vec![
        (Preset::Pn, 3, 5),
        (Preset::Brauer, 3, 15),
        (Preset::Brsn, 3, 11),
        (Preset::BrsnZ, 3, 11),
        (Preset::Srsn, 3, 24),
        (Preset::Brjn, 3, 10),
        (Preset::Brbrn, 3, 22),
        (Preset::BrbrnAbstract, 3, 22),
    ];
    if cfg.profile == Profile::Full {
        rows.extend([(Preset::Brauer, 4, 105), (Preset::Brsn, 4, 47), (Preset::BrsnZ, 4, 47), (Preset::Brjn, 4, 35)]);
    }
    for (p, n, k) in rows {
        r.push(preset_row(p, n, k, &cfg.kb));
    }

    // Dropping t_is_i = t_i for every i must break injectivity.
    let mut p = brauer(3);
    for i in 1..3 {
        p = p.without_relation(&format!("t{i} s{i}"), &format!("t{i}")).expect("relation present");
    }
    let name = "brauer n=3 without t_is_i = t_i rejected";
    r.push(match brauer_target(3).and_then(|t| presentation_check(&p, &t, &cfg.kb)) {
        Ok(rep) => {
            let rec = Record::compare(name, "fail", format!("{:?}", rep.status).to_lowercase(), Provenance::Trivial);
            match rep.witness {
                Some(w) => rec.with_witness(w),
                None => rec,
            }
        }
        Err(e) => failed(name, e),
    });

    let mut lemma = |n: usize, family: &str| {
        let name = format!("srs identities ({family}) n={n}");
        let rs = srsn(n).complete(&cfg.kb);
        let inst = srs_identities(n).remove(family).unwrap_or_default();
        let res = inst.iter().try_for_each(|(u, v)| match rs.word_equiv(u, v) {
            Ok(true) => Ok(()),
            Ok(false) => Err(format!("{} ≠ {}", srsn(n).format_word(u), srsn(n).format_word(v))),
            Err(e) => Err(e.to_string()),
        });
        let status_if_err = if rs.is_complete() { Status::Fail } else { Status::Inconclusive };
        let rec = Record::check(name, res, Provenance::Reference);
        r.push(if rec.status == Status::Fail { rec.with_status(status_if_err) } else { rec });
    };
    lemma(3, "tie-swap");
    lemma(3, "braid");
    if cfg.profile == Profile::Full {
        lemma(4, "far");
    }
    r
}

/// Exact rank of the flattened operators, cross-checked against the probabilistic rank.
pub fn tensor_rank(name: &str, ops: &[SparseOp], expected: usize, seed: u64) -> Record {
    let pre = TensorRep::flattened_rank(ops, RankMode::Probabilistic { seed, points: 2 });
    let exact = TensorRep::flattened_rank(ops, RankMode::Exact);
    let rec = Record::compare(name, expected, exact, Provenance::Reference);
    if pre != exact {
        return rec.with_status(Status::Fail).with_witness(format!("probabilistic rank {pre} ≠ exact rank {exact}"));
    }
    rec
}

/// Defining relations and faithfulness in V^{⊗3}, r = 3.
pub fn tensor_representation(cfg: &VerifyConfig) -> Report {
    let mut r = Report::new("tensor representation");
    let t = match TensorRep::new(3, 3) {
        Ok(t) => t,
        Err(e) => {
            r.push(failed("tensor space n=3 r=3", e));
            return r;
        }
    };
    let bad = t.failing_relations(&bt_relations(3));
    r.push(Record::check(
        "E_3 relations under ρ",
        if bad.is_empty() { Ok(()) } else { Err(bad.join("; ")) },
        Provenance::Reference,
    ));
    let bad = t.failing_relations(&bh_relations(3));
    r.push(Record::check(
        "bH_3 relations under φ",
        if bad.is_empty() { Ok(()) } else { Err(bad.join("; ")) },
        Provenance::Reference,
    ));
    let bt = BtAlgebra::new(3);
    let ops: Vec<SparseOp> = bt.basis().iter().map(|b| t.op_basis(b)).collect();
    r.push(tensor_rank("rank ρ(E_3)", &ops, 30, cfg.seed));
    let bh = BhAlgebra::new(3);
    let ops: Vec<SparseOp> = bh.basis().iter().map(|b| t.op_bh_basis(b)).collect();
    r.push(tensor_rank("rank φ(bH_3)", &ops, 11, cfg.seed));
    r
}

/// Basis products against the tensor oracle.
pub fn structure_constants(_cfg: &VerifyConfig) -> Report {
    let mut r = Report::new("structure constants");
    let t = match TensorRep::new(3, 3) {
        Ok(t) => t,
        Err(e) => {
            r.push(failed("tensor space n=3 r=3", e));
            return r;
        }
    };
    let bt = BtAlgebra::new(3);
    let b = bt.basis();
    let pairs: Vec<_> = b.iter().flat_map(|x| b.iter().map(move |y| (x.clone(), y.clone()))).collect();
    let res = match t.homomorphism_witness(&bt, &pairs) {
        None => Ok(()),
        Some((x, y)) => Err(format!("ρ({x}·{y}) ≠ ρ({x})ρ({y})")),
    };
    r.push(Record::check(format!("E_3 products, {} pairs", pairs.len()), res, Provenance::Derived));
    let bh = BhAlgebra::new(3);
    let b = bh.basis();
    let pairs: Vec<_> = b.iter().flat_map(|x| b.iter().map(move |y| (x.clone(), y.clone()))).collect();
    let res = match t.bh_homomorphism_witness(&bh, &pairs) {
        None => Ok(()),
        Some((x, y)) => Err(format!("φ({x}·{y}) ≠ φ({x})φ({y})")),
    };
    r.push(Record::check(format!("bH_3 products, {} pairs", pairs.len()), res, Provenance::Derived));
    r
}

/// Möbius idempotents in bH_n and E_n.
pub fn idempotents(cfg: &VerifyConfig) -> Report {
    let mut r = Report::new("idempotents");
    for n in 1..=cfg.cap(4) {
        let bh = BhAlgebra::new(n);
        let res = if cfg.corrupt_mobius {
            let flipped = |a: &SetPartition, b: &SetPartition| if a == b { 1 } else { -mobius_linear(a, b) };
            bh_idempotent_family(&bh, |i| bh.idempotent_with(i, flipped))
        } else {
            bh_idempotents(&bh)
        };
        r.push(Record::check(format!("bH_{n}: E_I complete, central, orthogonal"), res, Provenance::Reference));
        r.push(Record::check(format!("bH_{n}: E_I·E_J table"), bh_idempotent_table(&bh), Provenance::Reference));
    }
    let bt3 = BtAlgebra::new(3);
    r.push(Record::check(
        "E_3: E_I complete, orthogonal, E_I g_w = g_w E_(I·w), E_I·E_J table",
        bt_idempotents(&bt3),
        Provenance::Reference,
    ));
    // The twist moves E_I to E_(I·w), so a single E_I is not central once some w moves I.
    let rec = match bt_noncentral_witness(&bt3) {
        Some(w) => {
            Record::compare("E_3: individual E_I non-central", "non-central", "non-central", Provenance::Derived)
                .with_witness(w)
        }
        None => Record::compare("E_3: individual E_I non-central", "non-central", "central", Provenance::Derived),
    };
    r.push(rec);
    for n in 3..=cfg.cap(4) {
        r.push(Record::check(
            format!("E_{n}: E_alpha central, orthogonal, complete"),
            bt_type_idempotents(&BtAlgebra::new(n)),
            Provenance::Reference,
        ));
    }
    r
}

/// Size, rank, involution and multiplication-axiom rows for one cellular datum.
pub fn cellular_rows<A: Algebra>(
    r: &mut Report,
    alg: &A,
    datum: Result<CellDatum<A::Basis>>,
    n: usize,
    exhaustive: bool,
    cfg: &VerifyConfig,
) {
    let name = alg.name();
    let d = match datum {
        Ok(d) => d,
        Err(e) => {
            r.push(failed(&format!("{name} cellular datum"), e));
            return;
        }
    };
    r.push(Record::compare(format!("{name}: cellular basis size"), alg.dim(), d.len(), Provenance::Derived));
    if n <= 3 {
        r.push(Record::compare(
            format!("{name}: transition matrix rank"),
            alg.dim(),
            transition_matrix(alg, &d).rank_exact(),
            Provenance::Derived,
        ));
        r.push(Record::check(format!("{name}: (c_st)* = c_ts"), star_check(alg, &d), Provenance::Reference));
    }
    if exhaustive {
        let res = axiom_check(alg, &d, None).map(|_| ());
        r.push(Record::check(format!("{name}: multiplication axiom, exhaustive"), res, Provenance::Reference));
        let res = match axiom_check(alg, &d.corrupted(), None) {
            Ok(_) => Err("corrupted basis accepted".to_string()),
            Err(_) => Ok(()),
        };
        r.push(Record::check(format!("{name}: corrupted basis rejected"), res, Provenance::Trivial));
    } else if cfg.cellular_samples > 0 {
        let res = axiom_check(alg, &d, Some((cfg.seed, cfg.cellular_samples)))
            .map(|rep| format!("{}/{}", rep.checked, rep.total));
        let rec = match res {
            Ok(k) => Record::check(format!("{name}: multiplication axiom, sampled {k}"), Ok(()), Provenance::Reference),
            Err(e) => Record::check(format!("{name}: multiplication axiom, sampled"), Err(e), Provenance::Reference),
        };
        r.push(rec);
    }
}

/// Murphy-type cellular bases of bH_n and bTL_n.
pub fn cellular_bases(cfg: &VerifyConfig) -> Report {
    let mut r = Report::new("cellular bases");
    for n in 1..=cfg.cap(4) {
        let bh = BhAlgebra::new(n);
        cellular_rows(&mut r, &bh, bh_cellular(&bh), n, n == 3, cfg);
        let btl = BtlAlgebra::new(n);
        cellular_rows(&mut r, &btl, btl_cellular(&btl), n, n == 3, cfg);
    }
    r
}

/// The Temperley–Lieb quotient, the d_i relations and the partition TL ideal at n = 3.
pub fn quotients(_cfg: &VerifyConfig) -> Report {
    let mut r = Report::new("quotients and embeddings");
    let n = 3;
    let bh = BhAlgebra::new(n);
    let btl = BtlAlgebra::new(n);
    let bt = BtAlgebra::new(n);
    let st = btl.pi2(&bh.steinberg(1, 2));
    r.push(Record::check(
        "π₂(z_{1,2}) = 0",
        if st.is_zero() { Ok(()) } else { Err(st.to_string()) },
        Provenance::Reference,
    ));

    let res = (|| -> std::result::Result<(), String> {
        let delta = LaurentPoly::delta();
        for i in 1..n {
            let d = btl.pi2(&bh.d(i));
            let e = btl.e(i);
            let chk = |ok: bool, what: &str| if ok { Ok(()) } else { Err(format!("{what} (i = {i})")) };
            chk(d == btl.d(i), "π₂(d_i) ≠ d_i")?;
            chk(btl.mul(&d, &d) == d.scale(&delta), "d_i² ≠ (q+q⁻¹)d_i")?;
            chk(btl.mul(&d, &e) == d, "d_ie_i ≠ d_i")?;
            for j in 1..n {
                let (dj, ej) = (btl.pi2(&bh.d(j)), btl.e(j));
                chk(btl.mul(&d, &ej) == btl.mul(&ej, &d), "d_ie_j ≠ e_jd_i")?;
                if i.abs_diff(j) > 1 {
                    chk(btl.mul(&d, &dj) == btl.mul(&dj, &d), "d_id_j ≠ d_jd_i")?;
                }
                if i.abs_diff(j) == 1 {
                    let lhs = btl.product(&[d.clone(), dj.clone(), d.clone()]);
                    chk(lhs == btl.product(&[ej.clone(), d.clone(), ej]), "d_id_jd_i ≠ e_jd_ie_j")?;
                }
            }
        }
        Ok(())
    })();
    r.push(Record::check("π₂(d_i) satisfy the bTL relations", res, Provenance::Reference));

    let j = ideal_span(&bt, &[bt.steinberg(1, 2), bt.steinberg(2, 1)]);
    let quotient = bt.dim() - j.rank_exact();
    r.push(Record::compare("dim E_3/J_3 = dim PTL_3", ptl_dimension(n), quotient, Provenance::Reference));

    let jb = ideal_span(&bh, &[bh.steinberg(1, 2)]);
    let img = bh_rows_in_bt(&bh, &bt, &jb);
    let res = if j.row_space_contains(&img) { Ok(()) } else { Err("ι₁ image leaves J_3".to_string()) };
    r.push(Record::check("ι₁(bH_3 Steinberg ideal) ⊆ J_3", res, Provenance::Reference));
    r
}

/// Round trip and uniqueness of the normal forms over a whole monoid.
pub fn bijection(name: String, all: &[RamifiedPartition], flavor: Flavor) -> Record {
    let mut seen = BTreeSet::new();
    let res = all.iter().try_for_each(|x| {
        let nf = normal_form(x, flavor).map_err(|e| e.to_string())?;
        let back = nf.evaluate(x.n()).map_err(|e| e.to_string())?;
        if &back != x {
            return Err(format!("{nf} evaluates to {back}, not {x}"));
        }
        if !seen.insert(nf.to_string()) {
            return Err(format!("{nf} repeats"));
        }
        Ok(())
    });
    Record::check(name, res, Provenance::Derived)
}

/// Normal forms: round trip, uniqueness, and the two printed examples.
pub fn normal_forms(cfg: &VerifyConfig) -> Report {
    let mut r = Report::new("normal forms");
    for n in 1..=cfg.cap(4) {
        match enumerate_ramified(MonoidKind::Symmetric, n, true) {
            Ok(all) => r.push(bijection(format!("BR(S_{n}) normal forms"), &all, Flavor::Brs)),
            Err(e) => r.push(failed("BR(S_n)", e)),
        }
    }
    match singular_part(3) {
        Ok(all) => r.push(bijection("sR(S_3) normal forms".into(), &all, Flavor::Srs)),
        Err(e) => r.push(failed("sR(S_3)", e)),
    }
    match enumerate_ramified(MonoidKind::Brauer, 3, true) {
        Ok(all) => r.push(bijection("BR(Br_3) normal forms".into(), &all, Flavor::BrBr)),
        Err(e) => r.push(failed("BR(Br_3)", e)),
    }

    let n = 4;
    let e123 = (1..n).fold(RamifiedPartition::identity(n), |a, i| a.mul(&RamifiedPartition::e(i, n).expect("e_i")));
    let word = [2, 1, 3, 2, 3];
    let x = e123.mul(&RamifiedPartition::diagonal(&Diagram::from_perm(&Perm::from_word(&word, n))));
    r.push(match normal_form_with_word(&x, Flavor::Brs, &word) {
        Ok(nf) => {
            let z_then_e = nf.word.iter().fold(RamifiedPartition::identity(n), |a, l| match l {
                crate::ramified::Letter::Z(i) => a.mul(&RamifiedPartition::z(*i, n).expect("z_i")),
                _ => a,
            });
            let rec = Record::compare(
                "caption: e_1e_2e_3s_2s_1s_3s_2s_3",
                "e_1e_2e_3z_2z_1z_3z_2z_3",
                nf.to_string(),
                Provenance::Reference,
            );
            if z_then_e.mul(&e123) != x {
                rec.with_status(Status::Fail).with_witness("z-word · e differs from e · z-word")
            } else {
                rec
            }
        }
        Err(e) => failed("caption BR(S_4)", e),
    });
    let ties = SetPartition::tie(1, 2, n).join(&SetPartition::tie(2, 4, n));
    let x = RamifiedPartition::from_perm_ties(&Perm::from_word(&[3, 1, 2, 1], n), &ties);
    r.push(match normal_form_with_word(&x, Flavor::Srs, &[3, 1, 2, 1]) {
        Ok(nf) => Record::compare(
            "caption: e_{1,2}e_{2,4}s_3s_1s_2s_1",
            "e_{2,4}z_{1,2}^3z_{1,2}^1z_{1,2}^2z_{1,3}^1",
            nf.to_string(),
            Provenance::Reference,
        ),
        Err(e) => failed("caption sR(S_4)", e),
    });
    r
}

/// Z(R(S_n)) = {1, e_1⋯e_{n−1}} and Z(BR(S_n)) = the boxed identities.
pub fn center_rows(n: usize) -> Vec<Record> {
    let res = (|| -> Result<(Vec<RamifiedPartition>, Vec<RamifiedPartition>)> {
        let rs = enumerate_ramified(MonoidKind::Symmetric, n, false)?;
        let mut gens: Vec<_> = (1..n).map(|i| RamifiedPartition::s(i, n)).collect::<Result<_>>()?;
        for i in 1..n {
            gens.push(RamifiedPartition::e(i, n)?);
        }
        let z = center(&rs, &gens)?;
        let brs = enumerate_ramified(MonoidKind::Symmetric, n, true)?;
        Ok((z, center(&brs, &brs_generators(n))?))
    })();
    let (z, zb) = match res {
        Ok(x) => x,
        Err(e) => return vec![failed(&format!("centers n={n}"), e)],
    };
    let e = (1..n).fold(RamifiedPartition::identity(n), |a, i| a.mul(&RamifiedPartition::e(i, n).expect("e_i")));
    let mut want = vec![RamifiedPartition::identity(n), e];
    want.sort();
    want.dedup();
    let mut out = Vec::new();
    let rec = Record::compare(
        format!("Z(R(S_{n})) = {{1, e_1⋯e_{}}}", n.saturating_sub(1)),
        want.len(),
        z.len(),
        Provenance::Reference,
    );
    out.push(if z == want { rec } else { rec.with_status(Status::Fail).with_witness(format!("{z:?}")) });
    let rec =
        Record::compare(format!("|Z(BR(S_{n}))| = 2^{}", n - 1), 1u128 << (n - 1), zb.len(), Provenance::Reference);
    let boxes = boxed_identities(n).unwrap_or_default();
    out.push(if zb.iter().cloned().collect::<BTreeSet<_>>() == boxes {
        rec
    } else {
        rec.with_status(Status::Fail).with_witness("center is not the set of boxed identities")
    });
    out
}

/// Centers of R(S_n) and BR(S_n).
pub fn centers(cfg: &VerifyConfig) -> Report {
    let mut r = Report::new("centers");
    for n in 3..=cfg.cap(4) {
        for rec in center_rows(n) {
            r.push(rec);
        }
    }
    r
}

/// Criterion k (1-based) of the verification matrix.
pub fn criterion(k: usize, cfg: &VerifyConfig) -> Report {
    let mut rep = match k {
        1 => monoid_cardinalities(cfg),
        2 => dimension_formulas(cfg),
        3 => presentations(cfg),
        4 => tensor_representation(cfg),
        5 => structure_constants(cfg),
        6 => idempotents(cfg),
        7 => cellular_bases(cfg),
        8 => quotients(cfg),
        9 => normal_forms(cfg),
        10 => centers(cfg),
        _ => {
            let mut r = Report::new("unknown");
            r.push(failed("criterion", format!("no criterion {k}")));
            r
        }
    };
    for rec in &mut rep.records {
        rec.name = format!("[{k}] {}", rec.name);
    }
    rep
}

/// All criteria, run concurrently and merged in order.
pub fn verify_all(cfg: &VerifyConfig) -> Report {
    let parts: Vec<Report> = std::thread::scope(|s| {
        let handles: Vec<_> = (1..=CRITERIA.len()).map(|k| s.spawn(move || criterion(k, cfg))).collect();
        handles.into_iter().map(|h| h.join().expect("criterion thread")).collect()
    });
    let mut out = Report::new(format!(
        "verify-all {}",
        serde_json::to_string(&cfg.profile).unwrap_or_default().trim_matches('"')
    ));
    for p in parts {
        out.extend(p);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_profile_passes() {
        let rep = verify_all(&VerifyConfig::quick());
        let bad: Vec<_> = rep.records.iter().filter(|r| r.status != Status::Pass).collect();
        assert!(bad.is_empty(), "{bad:#?}");
    }

    #[test]
    fn corrupted_mobius_fails_idempotent_row() {
        let cfg = VerifyConfig { corrupt_mobius: true, ..VerifyConfig::quick() };
        let rep = criterion(6, &cfg);
        let row = rep.records.iter().find(|r| r.name.contains("bH_3: E_I complete")).unwrap();
        assert_eq!(row.status, Status::Fail);
        assert_eq!(rep.status(), Status::Fail);
    }

    #[test]
    fn reports_are_deterministic() {
        let cfg = VerifyConfig::quick();
        assert_eq!(criterion(1, &cfg).to_lines(), criterion(1, &cfg).to_lines());
        assert_eq!(criterion(7, &cfg).to_lines(), criterion(7, &cfg).to_lines());
    }

    #[test]
    fn unknown_criterion_fails() {
        assert_eq!(criterion(11, &VerifyConfig::quick()).status(), Status::Fail);
    }

    #[test]
    fn sequence_format() {
        assert_eq!(seq([1, 3, 11]), "1,3,11");
    }
}
