use bh_core::embed::{CyclePath, Embedder, FaultSet};
use bh_core::oracle::{
    all_fault_sets_bh2, counterexample_four_cycle, exists_cycle_bruteforce,
    exists_cycle_bruteforce_with, mutation_suite, optimality_probe, validate_cycle,
    verify_counterexample, verify_optimality, Branching, Decision, Execution, Violation,
    DEFAULT_BUDGET,
};
use bh_core::BalancedHypercube;

fn bh2() -> BalancedHypercube {
    BalancedHypercube::new(2).unwrap()
}

fn six_cycle(g: &BalancedHypercube) -> CyclePath {
    CyclePath::parse(g, &["00", "10", "03", "33", "23", "30"], true).unwrap()
}

#[test]
fn validator_accepts_the_family_six_cycle() {
    let g = bh2();
    let e = g.parse_edge("00-10").unwrap();
    assert_eq!(
        validate_cycle(2, &six_cycle(&g), e, 6, &FaultSet::empty(2)),
        Ok(())
    );
}

#[test]
fn validator_reports_repeated_vertex() {
    let g = bh2();
    let e = g.parse_edge("00-10").unwrap();
    let c = CyclePath::parse(&g, &["00", "10", "03", "33", "23", "33"], true).unwrap();
    assert!(matches!(
        validate_cycle(2, &c, e, 6, &FaultSet::empty(2)),
        Err(Violation::RepeatedVertex(v)) if v == "33"
    ));
}

#[test]
fn validator_reports_fault_use() {
    let g = bh2();
    let e = g.parse_edge("00-10").unwrap();
    let f = FaultSet::new(&g, [e]).unwrap();
    assert!(matches!(
        validate_cycle(2, &six_cycle(&g), e, 6, &f),
        Err(Violation::FaultUsed(..))
    ));
}

#[test]
fn validator_reports_length_edge_and_adjacency() {
    let g = bh2();
    let none = FaultSet::empty(2);
    let e = g.parse_edge("00-10").unwrap();
    assert!(matches!(
        validate_cycle(2, &six_cycle(&g), e, 8, &none),
        Err(Violation::WrongLength {
            expected: 8,
            actual: 6
        })
    ));
    let other = g.parse_edge("00-11").unwrap();
    assert!(matches!(
        validate_cycle(2, &six_cycle(&g), other, 6, &none),
        Err(Violation::MissingEdge(_))
    ));
    let open = CyclePath::path(six_cycle(&g).into_vertices());
    assert_eq!(
        validate_cycle(2, &open, e, 6, &none),
        Err(Violation::NotClosed)
    );
}

#[test]
fn counterexample_instance_in_bh2() {
    let g = bh2();
    let (e, f) = counterexample_four_cycle(&g).unwrap();
    assert_eq!(e.label(2), "00-11");
    assert_eq!(f.to_text().lines().collect::<Vec<_>>(), ["00-31", "11-20"]);
    assert_eq!(
        exists_cycle_bruteforce(2, e, 4, &f, DEFAULT_BUDGET),
        Decision::No
    );
    for len in (6..=16).step_by(2) {
        let d = exists_cycle_bruteforce(2, e, len, &f, DEFAULT_BUDGET);
        let Decision::Yes(c) = d else {
            panic!("length {len}: {d:?}")
        };
        assert_eq!(validate_cycle(2, &CyclePath::cycle(c), e, len, &f), Ok(()));
    }
}

#[test]
fn six_cycle_exists_for_the_spec_fault_pair() {
    let emb = Embedder::new(2).unwrap();
    let g = emb.graph();
    let e = g.parse_edge("00-11").unwrap();
    let f = FaultSet::parse_text(g, "00-31\n20-11\n").unwrap();
    let (c, _) = emb.embed(e, 6, &f).unwrap();
    assert_eq!(validate_cycle(2, &c, e, 6, &f), Ok(()));
}

#[test]
fn fault_free_bh2_has_every_even_cycle_through_every_edge() {
    let g = bh2();
    let none = FaultSet::empty(2);
    for e in g.edges() {
        for len in (4..=16).step_by(2) {
            assert!(
                exists_cycle_bruteforce(2, e, len, &none, DEFAULT_BUDGET).is_yes(),
                "{} {len}",
                e.label(2)
            );
        }
    }
}

#[test]
fn branching_orders_agree_on_bh2() {
    let g = bh2();
    let edges = g.edges();
    for (i, f) in all_fault_sets_bh2(&g).iter().enumerate().step_by(7) {
        let e = edges[i % edges.len()];
        if f.contains(&e) {
            continue;
        }
        for len in (4..=16).step_by(2) {
            let fwd = exists_cycle_bruteforce_with(2, e, len, f, u64::MAX, Branching::Forward);
            let rev = exists_cycle_bruteforce_with(2, e, len, f, u64::MAX, Branching::Reverse);
            assert_eq!(
                fwd.is_yes(),
                rev.is_yes(),
                "{} {len} {:?}",
                e.label(2),
                f.to_text()
            );
            assert_ne!(fwd, Decision::Timeout);
        }
    }
}

#[test]
fn embedded_cycles_are_found_by_the_oracle() {
    let emb = Embedder::new(2).unwrap();
    let g = emb.graph();
    let edges = g.edges();
    for (i, f) in all_fault_sets_bh2(g).iter().enumerate().step_by(11) {
        let e = edges[(3 * i) % edges.len()];
        if f.contains(&e) {
            continue;
        }
        for len in (6..=16).step_by(2) {
            let (c, _) = emb.embed(e, len, f).unwrap();
            assert_eq!(validate_cycle(2, &c, e, len, f), Ok(()));
            assert!(exists_cycle_bruteforce(2, e, len, f, DEFAULT_BUDGET).is_yes());
        }
    }
}

#[test]
fn timeout_is_distinct_from_no() {
    let g = BalancedHypercube::new(3).unwrap();
    let e = g.parse_edge("000-100").unwrap();
    let d = exists_cycle_bruteforce(3, e, 64, &FaultSet::empty(3), 10);
    assert_eq!(d, Decision::Timeout);
}

#[test]
fn optimality_probe_in_bh2() {
    let g = bh2();
    let (e, f) = optimality_probe(&g).unwrap();
    assert_eq!(e.label(2), "00-10");
    assert_eq!(f.len(), 3);
    assert!(f.edges().iter().all(|x| x.has_endpoint(e.lo())));
    for len in (4..=16).step_by(2) {
        assert_eq!(
            exists_cycle_bruteforce(2, e, len, &f, DEFAULT_BUDGET),
            Decision::No
        );
    }
}

#[test]
fn probes_are_verified_in_bh2() {
    let c = verify_counterexample(2, DEFAULT_BUDGET).unwrap();
    assert!(c.holds, "{c:?}");
    assert_eq!((c.four_cycle.as_str(), c.six_cycle.as_str()), ("no", "yes"));
    let o = verify_optimality(2, DEFAULT_BUDGET).unwrap();
    assert!(o.holds, "{o:?}");
    assert_eq!(o.restored.len(), 3);
}

#[test]
fn mutations_are_rejected() {
    let r = mutation_suite(3, 50, 5, Execution::Sequential).unwrap();
    assert!(r.is_clean(), "{}", r.to_text());
    assert_eq!(r.total, 50);
}
