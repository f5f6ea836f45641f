use graham::board::Cut;
use graham::oracle::{
    count_report, delahaye_report, enumerate_canonical, enumerate_graham, OracleError, SweepOptions,
};
use std::collections::BTreeSet;

#[test]
fn enumerations_agree_with_counts() {
    let opts = SweepOptions::default();
    for m in 1..=5 {
        for n in 1..=6 {
            let r = count_report(m, n, &opts).unwrap();
            let all = enumerate_graham(m, n, &opts).unwrap();
            assert_eq!(all.len() as u64, 2 * r.cuts, "m={m} n={n}");
            assert!(all.windows(2).all(|w| w[0] < w[1]), "sorted and distinct");
            let cuts: BTreeSet<Cut> = all.iter().map(Cut::new).collect();
            assert_eq!(cuts.len() as u64, r.cuts);
            if m == 4 {
                let canon = enumerate_canonical(m, n, &opts).unwrap();
                assert_eq!(canon.len() as u64, r.canonical);
                assert!(canon.iter().all(|b| b.is_canonical()));
            }
        }
    }
}

#[test]
fn orbits_match_brute_force_symmetry_classes() {
    let opts = SweepOptions::default();
    for (m, n) in [(3, 4), (4, 4), (4, 5), (5, 4)] {
        let all = enumerate_graham(m, n, &opts).unwrap();
        let classes: BTreeSet<_> = all
            .iter()
            .map(|b| {
                [b.clone(), b.complement(), b.hflip(), b.hflip().complement()]
                    .into_iter()
                    .min()
                    .unwrap()
            })
            .collect();
        assert_eq!(
            classes.len() as u64,
            count_report(m, n, &opts).unwrap().orbits
        );
    }
}

#[test]
fn budget_is_enforced() {
    let opts = SweepOptions {
        budget: 10,
        workers: None,
    };
    assert!(matches!(
        count_report(4, 6, &opts),
        Err(OracleError::Budget { .. })
    ));
}

#[test]
fn delahaye_formula_counts_orbits() {
    let opts = SweepOptions::default();
    for n in 1..=8 {
        let r = delahaye_report(n, &opts).unwrap();
        assert_eq!(r.formula, r.orbits, "n={n}");
    }
}
