use std::collections::BTreeSet;

use clap::ValueEnum;
use tiedbox::algebra::bh::BhAlgebra;
use tiedbox::algebra::bt::BtAlgebra;
use tiedbox::algebra::btl::BtlAlgebra;
use tiedbox::algebra::checks::{
    bh_idempotent_family, bh_idempotent_table, bh_idempotents, bt_idempotents, bt_noncentral_witness,
    bt_type_idempotents,
};
use tiedbox::algebra::hecke::Hecke;
use tiedbox::algebra::relations::{bh_relations, bt_relations};
use tiedbox::algebra::tensor::{SparseOp, TensorRep, MAX_DIM};
use tiedbox::algebra::tl::TemperleyLieb;
use tiedbox::algebra::{Algebra, Element};
use tiedbox::cellular::{bh_cellular, btl_cellular, murphy_basis_hecke, murphy_basis_tl};
use tiedbox::combinatorics::{bell, binomial, catalan, composition_sum, double_factorial_odd, factorial};
use tiedbox::diagram::Diagram;
use tiedbox::kb::KbBudget;
use tiedbox::presentations::{brauer_target, presentation_check, ramified_target, Injectivity, Presentation, Preset};
use tiedbox::ramified::{
    brs_generators, center, enumerate_ramified, normal_form, normal_form_with_word, singular_part, Flavor, MonoidKind,
    RamifiedPartition,
};
use tiedbox::report::{Provenance, Record, Report, Status};
use tiedbox::setpart::{mobius_linear, SetPartition};
use tiedbox::verify::{self, bijection, cellular_rows, center_rows, tensor_rank, Profile, VerifyConfig};
use tiedbox::Error;

use crate::{CellularArg, Cli, Command, Common, FamilyArg, MonoidArg, NormalFormArg, PairsArg, ProfileArg, TensorArg};

type Outcome<T> = std::result::Result<T, String>;

/// Library errors: bad input is a usage error, exhausted budgets make the row inconclusive.
fn row_or_usage(name: &str, e: Error) -> Outcome<Record> {
    match e {
        Error::Domain(m) | Error::Parse(m) => Err(m),
        Error::Resource(m) => Ok(inconclusive(name, m)),
        Error::Internal(_) => Ok(verify::failed(name, e)),
    }
}

fn inconclusive(name: &str, why: impl Into<String>) -> Record {
    Record::compare(name, "-", "-", Provenance::Trivial).with_status(Status::Inconclusive).with_witness(why)
}

/// A listing row: nothing is being compared.
fn info(name: impl Into<String>, value: impl ToString) -> Record {
    Record {
        name: name.into(),
        expected: "-".into(),
        got: value.to_string(),
        provenance: Provenance::Trivial,
        status: Status::Pass,
        witness: None,
    }
}

fn arg_name<T: ValueEnum>(v: T) -> String {
    v.to_possible_value().map(|p| p.get_name().to_string()).unwrap_or_default()
}

fn positive(n: usize) -> Outcome<()> {
    if n == 0 {
        return Err("--n must be positive".into());
    }
    Ok(())
}

fn budget(c: &Common) -> KbBudget {
    KbBudget { max_rules: c.max_rules as usize, max_reductions: c.max_reductions as usize }
}

pub fn run(cli: &Cli) -> Outcome<Report> {
    let c = &cli.common;
    match &cli.command {
        Command::Enumerate { monoid, n, list } => enumerate(*monoid, *n, *list, c),
        Command::PresentCheck { preset, n, relations, print } => {
            present_check(*preset, *n, relations.as_deref(), *print, c)
        }
        Command::Dim { family, max_n } => dim(*family, *max_n, c),
        Command::Multiply { algebra, n, factors, r } => multiply(*algebra, *n, factors, *r),
        Command::Cellular { algebra, n, check_axioms, samples } => cellular(*algebra, *n, *check_axioms, *samples, c),
        Command::RepCheck { algebra, n, r, pairs } => rep_check(*algebra, *n, *r, *pairs, c),
        Command::IdempotentCheck { algebra, n, corrupt_mobius } => idempotent_check(*algebra, *n, *corrupt_mobius),
        Command::Center { n, list } => center_cmd(*n, *list),
        Command::NormalForm { monoid, n, element, word, list } => {
            normal_form_cmd(*monoid, *n, element.as_deref(), word.as_deref(), *list)
        }
        Command::VerifyAll { criteria, corrupt_mobius } => verify_all(criteria, *corrupt_mobius, c),
    }
}

fn base_kind(m: MonoidArg) -> MonoidKind {
    use MonoidArg::*;
    match m {
        Symmetric | RSymmetric | BrSymmetric | SrSymmetric => MonoidKind::Symmetric,
        Jones | RJones | BrJones => MonoidKind::Jones,
        Brauer | RBrauer | BrBrauer => MonoidKind::Brauer,
        Partition | RPartition | BrPartition => MonoidKind::Full,
    }
}

fn base_count(kind: MonoidKind, n: usize) -> u128 {
    match kind {
        MonoidKind::Symmetric => factorial(n),
        MonoidKind::Jones => catalan(n),
        MonoidKind::Brauer => double_factorial_odd(n),
        MonoidKind::Full => bell(2 * n),
    }
}

/// The expected size: closed formulas where known, otherwise a count over the base monoid.
fn expected_size(m: MonoidArg, n: usize, cap: u128) -> Outcome<(u128, Provenance)> {
    use MonoidArg::*;
    let kind = base_kind(m);
    Ok(match m {
        Symmetric | Jones | Brauer | Partition => (base_count(kind, n), Provenance::Reference),
        RSymmetric => (factorial(n) * bell(n), Provenance::Reference),
        SrSymmetric => (factorial(n) * bell(n) - factorial(n), Provenance::Reference),
        BrSymmetric | BrJones | BrBrauer | BrPartition => {
            (composition_sum(n, |k| base_count(kind, k)).map_err(|e| e.to_string())?, Provenance::Derived)
        }
        RJones | RBrauer | RPartition => {
            if base_count(kind, n) > cap {
                return Ok((u128::MAX, Provenance::Derived));
            }
            // each diagram with k blocks has bell(k) coarsenings
            let s = kind.elements(n).iter().map(|d| bell(d.num_blocks())).sum();
            (s, Provenance::Derived)
        }
    })
}

fn enumerate(m: MonoidArg, n: usize, list: bool, c: &Common) -> Outcome<Report> {
    positive(n)?;
    let label = arg_name(m);
    let mut r = Report::new(format!("enumerate {label} n={n}"));
    let name = format!("|{label}| n={n}");
    let (want, prov) = expected_size(m, n, c.max_elements as u128)?;
    if want > c.max_elements as u128 {
        r.push(inconclusive(&name, format!("more than --max-elements {} elements", c.max_elements)));
        return Ok(r);
    }
    let kind = base_kind(m);
    let elements: tiedbox::Result<Vec<String>> = match m {
        MonoidArg::Symmetric | MonoidArg::Jones | MonoidArg::Brauer | MonoidArg::Partition => {
            Ok(kind.elements(n).iter().map(Diagram::to_string).collect())
        }
        MonoidArg::SrSymmetric => singular_part(n).map(|v| v.iter().map(|x| x.to_string()).collect()),
        MonoidArg::RSymmetric | MonoidArg::RJones | MonoidArg::RBrauer | MonoidArg::RPartition => {
            enumerate_ramified(kind, n, false).map(|v| v.iter().map(|x| x.to_string()).collect())
        }
        _ => enumerate_ramified(kind, n, true).map(|v| v.iter().map(|x| x.to_string()).collect()),
    };
    match elements {
        Ok(els) => {
            r.push(Record::compare(&name, want, els.len(), prov));
            if list {
                for (k, x) in els.iter().enumerate() {
                    r.push(info(format!("element {}", k + 1), x));
                }
            }
        }
        Err(e) => r.push(row_or_usage(&name, e)?),
    }
    Ok(r)
}

fn present_check(
    preset: Preset,
    n: usize,
    relations: Option<&std::path::Path>,
    print: bool,
    c: &Common,
) -> Outcome<Report> {
    if n < 2 {
        return Err("presentations need --n at least 2".into());
    }
    let mut r = Report::new(format!("present-check {preset} n={n}"));
    let mut p = preset.presentation(n);
    if let Some(path) = relations {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let semigroup = p.semigroup;
        p = Presentation::from_text(&p.name, p.alphabet.clone(), &text).map_err(|e| e.to_string())?;
        p.semigroup = semigroup;
    }
    if print {
        eprint!("{}", p.to_text());
    }
    let res = match preset {
        Preset::Brauer => brauer_target(n).and_then(|t| presentation_check(&p, &t, &budget(c))),
        _ => ramified_target(preset, n).and_then(|t| presentation_check(&p, &t, &budget(c))),
    };
    let rep = match res {
        Ok(rep) => rep,
        Err(e) => {
            r.push(row_or_usage(&format!("{preset} n={n}"), e)?);
            return Ok(r);
        }
    };
    r.push(Record::check(
        format!("{preset} n={n}: relations hold in the target"),
        rep.hom_witness.clone().map_or(Ok(()), Err),
        Provenance::Reference,
    ));
    let surj = if rep.surjective { Ok(()) } else { Err("generator images do not generate the target".into()) };
    r.push(Record::check(format!("{preset} n={n}: generators generate the target"), surj, Provenance::Reference));
    let got = rep.normal_forms.map_or_else(|| "?".to_string(), |k| k.to_string());
    let mut rec =
        Record::compare(format!("{preset} n={n}: normal forms = |target|"), rep.target_size, got, Provenance::Derived);
    if rep.hom_witness.is_none() && rep.surjective {
        rec.status = rep.status;
    }
    let how = match rep.injectivity {
        Injectivity::KnuthBendix => "knuth-bendix",
        Injectivity::IrreducibleCount => "irreducible-count",
        Injectivity::Unknown => "unknown",
    };
    let method = format!("{how}, {} rules", rep.rules);
    rec.witness = Some(match rep.witness {
        Some(w) if rec.status != Status::Pass => format!("{w} ({method})"),
        _ => method,
    });
    r.push(rec);
    Ok(r)
}

fn dim_formula(f: FamilyArg, n: usize) -> u128 {
    match f {
        FamilyArg::Bt => factorial(n) * bell(n),
        FamilyArg::Bh => composition_sum(n, factorial).unwrap_or(0),
        FamilyArg::Btl => binomial(2 * n - 1, n),
        FamilyArg::Hecke => factorial(n),
        FamilyArg::Tl => catalan(n),
    }
}

fn family_dim(f: FamilyArg, n: usize) -> usize {
    match f {
        FamilyArg::Bt => BtAlgebra::new(n).dim(),
        FamilyArg::Bh => BhAlgebra::new(n).dim(),
        FamilyArg::Btl => BtlAlgebra::new(n).dim(),
        FamilyArg::Hecke => Hecke::new(n).dim(),
        FamilyArg::Tl => TemperleyLieb::new(n).dim(),
    }
}

fn dim(f: FamilyArg, max_n: usize, c: &Common) -> Outcome<Report> {
    positive(max_n)?;
    let label = arg_name(f);
    let mut r = Report::new(format!("dim {label} n=1..{max_n}"));
    let (mut want, mut got) = (Vec::new(), Vec::new());
    for n in 1..=max_n {
        let name = format!("dim {label} n={n}");
        let w = dim_formula(f, n);
        if w > c.max_elements as u128 {
            r.push(inconclusive(&name, format!("basis larger than --max-elements {}", c.max_elements)));
            continue;
        }
        let g = family_dim(f, n);
        want.push(w.to_string());
        got.push(g.to_string());
        r.push(Record::compare(name, w, g, Provenance::Reference));
    }
    r.push(Record::compare(format!("dim {label} sequence"), want.join(","), got.join(","), Provenance::Reference));
    Ok(r)
}

fn factor<A: Algebra>(
    alg: &A,
    name: &str,
    inverse: impl Fn(&str) -> Option<Element<A::Basis>>,
) -> Outcome<Element<A::Basis>> {
    if name == "1" {
        return Ok(alg.one());
    }
    if let Some(x) = alg.generator(name).or_else(|| inverse(name)) {
        return Ok(x);
    }
    let known: Vec<String> = alg.generators().into_iter().map(|(g, _)| g).collect();
    Err(format!("unknown generator {name:?} for {}; expected one of {}", alg.name(), known.join(" ")))
}

fn product<A: Algebra>(
    alg: &A,
    names: &[String],
    inverse: impl Fn(&str) -> Option<Element<A::Basis>>,
) -> Outcome<Element<A::Basis>> {
    let xs = names.iter().map(|s| factor(alg, s, &inverse)).collect::<Outcome<Vec<_>>>()?;
    Ok(alg.product(&xs))
}

fn no_inverse<B>(_: &str) -> Option<B> {
    None
}

fn tensor_for(n: usize, r: Option<usize>) -> Outcome<Option<TensorRep>> {
    let r = r.unwrap_or(n);
    if r < n {
        return Err(format!("--r must be at least n = {n}"));
    }
    match TensorRep::new(n, r) {
        Ok(t) => Ok(Some(t)),
        Err(Error::Resource(_)) => Ok(None),
        Err(e) => Err(e.to_string()),
    }
}

fn oracle_row(
    t: Option<TensorRep>,
    lhs: impl Fn(&TensorRep) -> SparseOp,
    rhs: impl Fn(&TensorRep) -> SparseOp,
) -> Record {
    let name = "tensor oracle agrees";
    match t {
        None => inconclusive(name, format!("tensor space larger than {MAX_DIM}")),
        Some(t) => {
            let ok = lhs(&t) == rhs(&t);
            Record::check(
                name,
                if ok { Ok(()) } else { Err("image of the product differs from the product of images".into()) },
                Provenance::Derived,
            )
        }
    }
}

fn multiply(f: FamilyArg, n: usize, names: &[String], r: Option<usize>) -> Outcome<Report> {
    positive(n)?;
    let label = arg_name(f);
    let mut rep = Report::new(format!("multiply {label} n={n} {}", names.join(" ")));
    match f {
        FamilyArg::Bt => {
            let bt = BtAlgebra::new(n);
            let inv = |s: &str| {
                let i: usize = s.strip_prefix('g')?.strip_suffix("^-1")?.parse().ok()?;
                (1..n).contains(&i).then(|| bt.g_inv(i))
            };
            let x = product(&bt, names, inv)?;
            rep.push(info("product", &x));
            let factors: Vec<_> = names.iter().map(|s| factor(&bt, s, inv)).collect::<Outcome<_>>()?;
            rep.push(oracle_row(
                tensor_for(n, r)?,
                |t| t.op(&x),
                |t| factors.iter().fold(SparseOp::identity(t.dim()), |acc, y| acc.then(&t.op(y))),
            ));
        }
        FamilyArg::Bh => {
            let bh = BhAlgebra::new(n);
            let x = product(&bh, names, no_inverse)?;
            rep.push(info("product", &x));
            let factors: Vec<_> = names.iter().map(|s| factor(&bh, s, no_inverse)).collect::<Outcome<_>>()?;
            rep.push(oracle_row(
                tensor_for(n, r)?,
                |t| t.op_bh(&x),
                |t| factors.iter().fold(SparseOp::identity(t.dim()), |acc, y| acc.then(&t.op_bh(y))),
            ));
        }
        FamilyArg::Btl => rep.push(info("product", product(&BtlAlgebra::new(n), names, no_inverse)?)),
        FamilyArg::Hecke => rep.push(info("product", product(&Hecke::new(n), names, no_inverse)?)),
        FamilyArg::Tl => rep.push(info("product", product(&TemperleyLieb::new(n), names, no_inverse)?)),
    }
    Ok(rep)
}

fn cellular(a: CellularArg, n: usize, check_axioms: bool, samples: usize, c: &Common) -> Outcome<Report> {
    positive(n)?;
    let label = arg_name(a);
    let mut r = Report::new(format!("cellular {label} n={n}"));
    let cfg = VerifyConfig {
        seed: c.seed,
        cellular_samples: if check_axioms { samples } else { 0 },
        ..VerifyConfig::default()
    };
    let exhaustive = check_axioms && n <= 3;
    match a {
        CellularArg::Hecke => {
            let h = Hecke::new(n);
            cellular_rows(&mut r, &h, murphy_basis_hecke(&h), n, exhaustive, &cfg);
        }
        CellularArg::Tl => {
            let tl = TemperleyLieb::new(n);
            cellular_rows(&mut r, &tl, murphy_basis_tl(&tl), n, exhaustive, &cfg);
        }
        CellularArg::Bh => {
            let bh = BhAlgebra::new(n);
            cellular_rows(&mut r, &bh, bh_cellular(&bh), n, exhaustive, &cfg);
        }
        CellularArg::Btl => {
            let btl = BtlAlgebra::new(n);
            cellular_rows(&mut r, &btl, btl_cellular(&btl), n, exhaustive, &cfg);
        }
    }
    Ok(r)
}

fn relations_row(name: &str, bad: Vec<String>) -> Record {
    Record::check(name, if bad.is_empty() { Ok(()) } else { Err(bad.join("; ")) }, Provenance::Reference)
}

fn rep_check(a: TensorArg, n: usize, r: Option<usize>, pairs: PairsArg, c: &Common) -> Outcome<Report> {
    positive(n)?;
    let colours = r.unwrap_or(n);
    let mut rep = Report::new(format!("rep-check {} n={n} r={colours}", arg_name(a)));
    let Some(t) = tensor_for(n, r)? else {
        rep.push(inconclusive("tensor space", format!("({n}·{colours})^{n} exceeds {MAX_DIM}")));
        return Ok(rep);
    };
    match a {
        TensorArg::Bt => {
            let bt = BtAlgebra::new(n);
            rep.push(relations_row(&format!("E_{n} relations under ρ"), t.failing_relations(&bt_relations(n))));
            let basis = bt.basis();
            let ops: Vec<SparseOp> = basis.iter().map(|b| t.op_basis(b)).collect();
            rep.push(tensor_rank(&format!("rank ρ(E_{n})"), &ops, bt.dim(), c.seed));
            let left = pair_sources(&bt, pairs);
            let ps: Vec<_> = left.iter().flat_map(|x| basis.iter().map(move |y| (x.clone(), y.clone()))).collect();
            let res =
                t.homomorphism_witness(&bt, &ps).map_or(Ok(()), |(x, y)| Err(format!("ρ({x}·{y}) ≠ ρ({x})ρ({y})")));
            rep.push(Record::check(format!("ρ multiplicative on {} pairs", ps.len()), res, Provenance::Derived));
        }
        TensorArg::Bh => {
            let bh = BhAlgebra::new(n);
            rep.push(relations_row(&format!("bH_{n} relations under φ"), t.failing_relations(&bh_relations(n))));
            let basis = bh.basis();
            let ops: Vec<SparseOp> = basis.iter().map(|b| t.op_bh_basis(b)).collect();
            rep.push(tensor_rank(&format!("rank φ(bH_{n})"), &ops, bh.dim(), c.seed));
            let left = pair_sources(&bh, pairs);
            let ps: Vec<_> = left.iter().flat_map(|x| basis.iter().map(move |y| (x.clone(), y.clone()))).collect();
            let res =
                t.bh_homomorphism_witness(&bh, &ps).map_or(Ok(()), |(x, y)| Err(format!("φ({x}·{y}) ≠ φ({x})φ({y})")));
            rep.push(Record::check(format!("φ multiplicative on {} pairs", ps.len()), res, Provenance::Derived));
        }
    }
    Ok(rep)
}

/// Left factors for the product check: every basis element, or those occurring in the generators.
fn pair_sources<A: Algebra>(alg: &A, pairs: PairsArg) -> Vec<A::Basis> {
    match pairs {
        PairsArg::All => alg.basis(),
        PairsArg::Generators => {
            let s: BTreeSet<A::Basis> = alg
                .generators()
                .iter()
                .flat_map(|(_, g)| g.terms().map(|(b, _)| b.clone()).collect::<Vec<_>>())
                .collect();
            s.into_iter().collect()
        }
    }
}

fn idempotent_check(a: TensorArg, n: usize, corrupt: bool) -> Outcome<Report> {
    positive(n)?;
    let mut r = Report::new(format!("idempotent-check {} n={n}", arg_name(a)));
    match a {
        TensorArg::Bh => {
            let bh = BhAlgebra::new(n);
            let res = if corrupt {
                let flipped = |x: &SetPartition, y: &SetPartition| if x == y { 1 } else { -mobius_linear(x, y) };
                bh_idempotent_family(&bh, |i| bh.idempotent_with(i, flipped))
            } else {
                bh_idempotents(&bh)
            };
            r.push(Record::check(format!("bH_{n}: E_I complete, central, orthogonal"), res, Provenance::Reference));
            r.push(Record::check(format!("bH_{n}: E_I·E_J table"), bh_idempotent_table(&bh), Provenance::Reference));
        }
        TensorArg::Bt => {
            if corrupt {
                return Err("--corrupt-mobius applies to bh only".into());
            }
            let bt = BtAlgebra::new(n);
            r.push(Record::check(
                format!("E_{n}: E_I complete, orthogonal, E_I g_w = g_w E_(I·w), table"),
                bt_idempotents(&bt),
                Provenance::Reference,
            ));
            if n >= 3 {
                let name = format!("E_{n}: individual E_I non-central");
                r.push(match bt_noncentral_witness(&bt) {
                    Some(w) => Record::compare(name, "non-central", "non-central", Provenance::Derived).with_witness(w),
                    None => Record::compare(name, "non-central", "central", Provenance::Derived),
                });
            }
            r.push(Record::check(
                format!("E_{n}: E_alpha central, orthogonal, complete"),
                bt_type_idempotents(&bt),
                Provenance::Reference,
            ));
        }
    }
    Ok(r)
}

fn center_cmd(n: usize, list: bool) -> Outcome<Report> {
    positive(n)?;
    let mut r = Report::new(format!("center n={n}"));
    for rec in center_rows(n) {
        r.push(rec);
    }
    if list {
        let z = (|| -> tiedbox::Result<_> {
            let rs = enumerate_ramified(MonoidKind::Symmetric, n, false)?;
            let mut gens: Vec<_> = (1..n).map(|i| RamifiedPartition::s(i, n)).collect::<tiedbox::Result<_>>()?;
            for i in 1..n {
                gens.push(RamifiedPartition::e(i, n)?);
            }
            let brs = enumerate_ramified(MonoidKind::Symmetric, n, true)?;
            Ok((center(&rs, &gens)?, center(&brs, &brs_generators(n))?))
        })();
        match z {
            Ok((z, zb)) => {
                r.records.extend(z.iter().map(|x| info(format!("Z(R(S_{n})) element"), x)));
                r.records.extend(zb.iter().map(|x| info(format!("Z(BR(S_{n})) element"), x)));
            }
            Err(e) => r.push(row_or_usage("center elements", e)?),
        }
    }
    Ok(r)
}

fn flavor_of(m: NormalFormArg) -> Flavor {
    match m {
        NormalFormArg::BrSymmetric => Flavor::Brs,
        NormalFormArg::SrSymmetric => Flavor::Srs,
        NormalFormArg::BrBrauer => Flavor::BrBr,
    }
}

fn monoid_elements(m: NormalFormArg, n: usize) -> tiedbox::Result<Vec<RamifiedPartition>> {
    match m {
        NormalFormArg::BrSymmetric => enumerate_ramified(MonoidKind::Symmetric, n, true),
        NormalFormArg::SrSymmetric => singular_part(n),
        NormalFormArg::BrBrauer => enumerate_ramified(MonoidKind::Brauer, n, true),
    }
}

fn normal_form_cmd(
    m: NormalFormArg,
    n: usize,
    element: Option<&str>,
    word: Option<&str>,
    list: bool,
) -> Outcome<Report> {
    positive(n)?;
    let label = arg_name(m);
    let flavor = flavor_of(m);
    let mut r = Report::new(format!("normal-form {label} n={n}"));
    let all = match monoid_elements(m, n) {
        Ok(v) => v,
        Err(e) => {
            r.push(row_or_usage(&format!("{label} n={n}"), e)?);
            return Ok(r);
        }
    };
    let Some(text) = element else {
        r.push(bijection(format!("{label} n={n}: normal forms round trip and are distinct"), &all, flavor));
        if list {
            for x in &all {
                let nf = normal_form(x, flavor).map_err(|e| e.to_string())?;
                r.push(info(x.to_string(), nf));
            }
        }
        return Ok(r);
    };
    let x: RamifiedPartition = text.parse().map_err(|e: Error| e.to_string())?;
    if x.n() != n {
        return Err(format!("element has {} strands, --n is {n}", x.n()));
    }
    if all.binary_search(&x).is_err() {
        return Err(format!("{x} is not in {label} n={n}"));
    }
    let nf = match word {
        Some(w) if flavor != Flavor::BrBr => {
            let letters = w
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| format!("bad letter {t:?} in --word")))
                .collect::<Outcome<Vec<_>>>()?;
            normal_form_with_word(&x, flavor, &letters)
        }
        Some(_) => return Err("--word applies to br-symmetric and sr-symmetric".into()),
        None => normal_form(&x, flavor),
    }
    .map_err(|e| e.to_string())?;
    r.push(info(format!("normal form of {x}"), &nf));
    let back = nf.evaluate(n).map_err(|e| e.to_string())?;
    r.push(Record::compare("normal form evaluates back", &x, back, Provenance::Trivial));
    Ok(r)
}

fn verify_all(criteria: &[usize], corrupt: bool, c: &Common) -> Outcome<Report> {
    let profile = match c.profile {
        ProfileArg::Quick => Profile::Quick,
        ProfileArg::Full => Profile::Full,
    };
    let cfg = VerifyConfig { profile, seed: c.seed, kb: budget(c), corrupt_mobius: corrupt, ..VerifyConfig::default() };
    if criteria.is_empty() {
        return Ok(verify::verify_all(&cfg));
    }
    if let Some(k) = criteria.iter().find(|&&k| !(1..=verify::CRITERIA.len()).contains(&k)) {
        return Err(format!("no criterion {k}; criteria are 1..{}", verify::CRITERIA.len()));
    }
    let mut r = Report::new(format!("verify-all {}", arg_name(c.profile)));
    for &k in criteria {
        r.extend(verify::criterion(k, &cfg));
    }
    Ok(r)
}
