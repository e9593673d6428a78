use proptest::prelude::*;

use tiedbox::kb::{shortlex, KbBudget};
use tiedbox::monoid::Monoid;
use tiedbox::presentations::{brsn, ramified_target, Preset};
use tiedbox::ramified::{enumerate_ramified, normal_form, Flavor, MonoidKind, RamifiedPartition};
use tiedbox::report::{Provenance, Record, Report, Status};

fn image(w: &[usize], images: &[RamifiedPartition], n: usize) -> RamifiedPartition {
    w.iter().fold(RamifiedPartition::identity(n), |acc, &x| acc.mul(&images[x]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    // The rewriting system only replaces words by equal elements, and normal forms are fixed.
    #[test]
    fn reduction_preserves_the_element(w in prop::collection::vec(0usize..6, 0..14)) {
        let n = 4;
        let p = brsn(n);
        let rs = p.complete(&KbBudget::default());
        prop_assert!(rs.is_complete());
        let t = ramified_target(Preset::Brsn, n).unwrap();
        let v = rs.reduce(&w);
        prop_assert_ne!(shortlex(&v, &w), std::cmp::Ordering::Greater);
        prop_assert_eq!(rs.reduce(&v), v.clone());
        prop_assert_eq!(image(&v, &t.images, n), image(&w, &t.images, n));
    }

    #[test]
    fn ramified_product_is_associative(a in 0usize..47, b in 0usize..47, c in 0usize..47) {
        let all = enumerate_ramified(MonoidKind::Symmetric, 4, true).unwrap();
        let (x, y, z) = (&all[a], &all[b], &all[c]);
        prop_assert_eq!(x.mul(y).mul(z), x.mul(&y.mul(z)));
        prop_assert!(all.binary_search(&x.mul(y)).is_ok());
    }

    #[test]
    fn brauer_boxed_normal_forms_evaluate_back(k in 0usize..154) {
        let all = enumerate_ramified(MonoidKind::Brauer, 4, true).unwrap();
        let nf = normal_form(&all[k], Flavor::BrBr).unwrap();
        prop_assert_eq!(&nf.evaluate(4).unwrap(), &all[k]);
    }

    #[test]
    fn overall_status_is_the_worst_record(ss in prop::collection::vec(0u8..3, 0..8)) {
        let mut r = Report::new("p");
        for (k, s) in ss.iter().enumerate() {
            let st = [Status::Pass, Status::Inconclusive, Status::Fail][*s as usize];
            r.push(Record::compare(k.to_string(), 1, 1, Provenance::Trivial).with_status(st));
        }
        let want = ss.iter().max().map_or(Status::Pass, |&s| [Status::Pass, Status::Inconclusive, Status::Fail][s as usize]);
        prop_assert_eq!(r.status(), want);
        prop_assert_eq!(r.to_lines().lines().count(), ss.len() + 1);
    }
}

#[test]
fn presentation_text_round_trips_for_every_preset() {
    for preset in Preset::ALL {
        let p = preset.presentation(3);
        let q = tiedbox::presentations::Presentation::from_text(&p.name, p.alphabet.clone(), &p.to_text()).unwrap();
        assert_eq!(q.relations, p.relations, "{preset}");
    }
}
