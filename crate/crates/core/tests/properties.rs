use bh_core::embed::{choose_length_split, length_rows, Embedder, FaultSet, SplitRule};
use bh_core::oracle::{mutations, validate_cycle};
use bh_core::{BalancedHypercube, CyclePath};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn rules(q: usize) -> Vec<SplitRule> {
    let h = q / 2;
    let mut out = vec![
        SplitRule::Sub121,
        SplitRule::Sub13,
        SplitRule::Sub21213,
        SplitRule::Sub21214,
        SplitRule::Sub21223,
        SplitRule::Sub21224,
        SplitRule::Sub223,
    ];
    out.extend((1..=h - 3).map(|arc| SplitRule::Sub122 { arc }));
    out
}

proptest! {
    #[test]
    fn length_split_matches_row_feasibility(q in prop_oneof![Just(16usize), Just(64)], pick in 0usize..64, half in 3usize..=130) {
        let rs = rules(q);
        let rule = rs[pick % rs.len()];
        let len = 2 * half;
        // each slot takes odd values only
        let feasible = length_rows(rule, q).iter().any(|row| {
            let odd: Vec<(usize, usize)> = row.iter().map(|&(lo, hi)| (lo | 1, if hi % 2 == 1 { hi } else { hi.saturating_sub(1) })).collect();
            let lo: usize = odd.iter().map(|r| r.0).sum();
            let hi: usize = odd.iter().map(|r| r.1).sum();
            odd.iter().all(|r| r.0 <= r.1) && lo + 4 <= len && len <= hi + 4
        });
        match choose_length_split(len, rule, q) {
            Some(s) => {
                prop_assert!(feasible);
                prop_assert_eq!(s.sum() + 4, len);
                prop_assert!(s.parts().iter().all(|x| x % 2 == 1));
                let fits = length_rows(rule, q).iter().any(|row| {
                    row.iter().zip(s.parts()).all(|(&(lo, hi), x)| lo <= x && x <= hi)
                });
                prop_assert!(fits);
            }
            None => prop_assert!(!feasible),
        }
    }
}

fn instance(n: usize) -> impl Strategy<Value = (usize, usize, Vec<usize>, usize)> {
    let edges = 4usize.pow(n as u32) * n;
    let half = 4usize.pow(n as u32) / 2;
    (
        Just(n),
        0..edges,
        subsequence((0..edges).collect::<Vec<_>>(), 0..=2 * n - 2),
        3..=half,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn embedded_cycles_validate((n, ei, fi, half) in prop_oneof![instance(2), instance(3)]) {
        let emb = Embedder::new(n).unwrap();
        let g = emb.graph();
        let edges = g.edges();
        let faults = FaultSet::new(g, fi.iter().map(|&i| edges[i])).unwrap();
        let e = edges[ei];
        prop_assume!(!faults.contains(&e));
        let len = 2 * half;
        let (c, trace) = emb.embed(e, len, &faults).unwrap();
        prop_assert_eq!(validate_cycle(n, &c, e, len, &faults), Ok(()));
        prop_assert!(!trace.is_empty());
        prop_assert_eq!(emb.embed(e, len, &faults).unwrap().0, c);
    }

    #[test]
    fn every_mutation_is_caught((n, ei, _fi, half) in instance(3)) {
        let emb = Embedder::new(n).unwrap();
        let g = emb.graph();
        let e = g.edges()[ei];
        let none = FaultSet::empty(n);
        let (c, _) = emb.embed(e, 2 * half, &none).unwrap();
        for (m, vs, f) in mutations(g, c.vertices(), &none) {
            prop_assert!(validate_cycle(n, &CyclePath::cycle(vs), e, 2 * half, &f).is_err(), "{:?}", m);
        }
    }

    #[test]
    fn fault_text_round_trips(picks in subsequence((0..192usize).collect::<Vec<_>>(), 0..8)) {
        let g = BalancedHypercube::new(3).unwrap();
        let edges = g.edges();
        let f = FaultSet::new(&g, picks.iter().map(|&i| edges[i])).unwrap();
        prop_assert_eq!(FaultSet::parse_text(&g, &f.to_text()).unwrap(), f);
    }
}
