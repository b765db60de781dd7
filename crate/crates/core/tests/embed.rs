use bh_core::embed::{
    choose_length_split, cross_path_family, disjoint_cross_paths, eight_cycle_cross,
    hyper_ham_path, two_path_exit, CyclePath, Embedder, FaultSet, SplitRule,
};
use bh_core::oracle::{validate_cycle, validate_path};
use bh_core::{embed_cycle, BalancedHypercube, Error, Vertex};

#[test]
fn fault_free_six_cycle() {
    let g = BalancedHypercube::new(2).unwrap();
    let e = g.parse_edge("00-10").unwrap();
    let (c, trace) = embed_cycle(2, e, 6, &FaultSet::empty(2)).unwrap();
    assert_eq!(c.labels(2), ["00", "10", "03", "33", "23", "30"]);
    assert!(c.is_closed());
    assert!(!trace.is_empty());
}

#[test]
fn length_four_is_unsupported_for_every_edge() {
    let emb = Embedder::new(2).unwrap();
    for e in emb.graph().edges() {
        let err = emb.embed(e, 4, &FaultSet::empty(2)).unwrap_err();
        assert_eq!(err, Error::UnsupportedLength(4));
        assert!(err.to_string().contains("length 4 not guaranteed"));
    }
}

#[test]
fn hamiltonian_cycle_of_bh3() {
    let g = BalancedHypercube::new(3).unwrap();
    let e = g.parse_edge("000-100").unwrap();
    let none = FaultSet::empty(3);
    let (c, _) = embed_cycle(3, e, 64, &none).unwrap();
    assert_eq!(validate_cycle(3, &c, e, 64, &none), Ok(()));
}

#[test]
fn hamiltonian_cycle_through_any_edge_of_bh2_under_two_faults() {
    let emb = Embedder::new(2).unwrap();
    let g = emb.graph();
    let f = FaultSet::parse_text(g, "00-11\n21-32\n").unwrap();
    for e in g.edges().into_iter().filter(|e| !f.contains(e)) {
        let (c, trace) = emb.embed(e, 16, &f).unwrap();
        assert_eq!(validate_cycle(2, &c, e, 16, &f), Ok(()));
        assert_eq!(trace.top_labels(), ["Base/Ham16"]);
    }
}

#[test]
fn too_many_faults_void_the_guarantee_but_best_effort_searches() {
    let emb = Embedder::new(2).unwrap();
    let g = emb.graph();
    let e = g.parse_edge("00-10").unwrap();
    let f = FaultSet::parse_text(g, "01-12\n21-32\n02-13\n").unwrap();
    assert!(matches!(emb.embed(e, 6, &f), Err(Error::GuaranteeVoid(_))));
    let (c, trace) = emb.embed_best_effort(e, 6, &f, 1_000_000).unwrap();
    assert_eq!(validate_cycle(2, &c, e, 6, &f), Ok(()));
    assert_eq!(trace.top_labels(), ["Experiment/Search"]);
}

#[test]
fn length_splits() {
    assert_eq!(
        choose_length_split(10, SplitRule::Sub223, 16)
            .unwrap()
            .parts(),
        [3, 1, 1, 1]
    );
    assert_eq!(
        choose_length_split(64, SplitRule::Sub13, 16)
            .unwrap()
            .parts(),
        [15, 15, 15, 15]
    );
}

#[test]
fn two_path_exit_examples() {
    let g = BalancedHypercube::new(2).unwrap();
    let u = g.parse_vertex("00").unwrap();
    let p = two_path_exit(&g, 1, u, &FaultSet::empty(2)).unwrap();
    let labels: Vec<String> = p.iter().map(|&v| g.label(v)).collect();
    assert_eq!(labels, ["00", "10", "03"]);
    let crowded = FaultSet::parse_text(&g, "00-10\n00-30\n").unwrap();
    assert!(matches!(
        two_path_exit(&g, 1, u, &crowded),
        Err(Error::InvalidInput(_))
    ));
}

#[test]
fn eight_cycle_from_the_first_family_path() {
    let g = BalancedHypercube::new(2).unwrap();
    let e = g.parse_edge("00-11").unwrap();
    let c = eight_cycle_cross(&g, e, &FaultSet::empty(2)).unwrap();
    assert_eq!(
        c.labels(2),
        ["00", "10", "23", "33", "02", "12", "21", "11"]
    );
    let s = g.split(1).unwrap();
    let inside = |p: usize| {
        c.steps()
            .filter(|&(x, y)| s.part_of(x) == p && s.part_of(y) == p)
            .count()
    };
    assert_eq!(inside(0), 1);
    assert!(inside(2) >= 1 && inside(3) >= 1);
}

#[test]
fn family_has_four_edge_disjoint_paths_in_bh2() {
    let g = BalancedHypercube::new(2).unwrap();
    let fam = cross_path_family(&g, Vertex(0), g.parse_vertex("11").unwrap()).unwrap();
    assert_eq!(fam.len(), 4);
}

#[test]
fn disjoint_paths_through_the_other_parts() {
    let g = BalancedHypercube::new(2).unwrap();
    let e = g.parse_edge("00-10").unwrap();
    let s = g.split(1).unwrap();
    let [p, q] = disjoint_cross_paths(&g, 1, e).unwrap();
    for path in [&p, &q] {
        for part in 1..4 {
            let inside = path
                .windows(2)
                .filter(|w| s.part_of(w[0]) == part && s.part_of(w[1]) == part)
                .count();
            assert_eq!(inside, 1);
        }
    }
    let shared: Vec<_> = p[1..7].iter().filter(|v| q.contains(v)).collect();
    assert!(shared.is_empty());
}

#[test]
fn hamiltonian_paths_of_small_cubes() {
    let g1 = BalancedHypercube::new(1).unwrap();
    let none = FaultSet::empty(1);
    let p = bh_core::embed::ham_path_faulty(&g1, Vertex(0), Vertex(1), &none).unwrap();
    assert_eq!(p.labels(1), ["0", "3", "2", "1"]);
    let h = hyper_ham_path(&g1, Vertex(0), Vertex(1), Vertex(3), &none).unwrap();
    assert_eq!(h.labels(1), ["1", "2", "3"]);

    let g2 = BalancedHypercube::new(2).unwrap();
    let none = FaultSet::empty(2);
    let (u, v, w) = (
        g2.parse_vertex("10").unwrap(),
        g2.parse_vertex("30").unwrap(),
        Vertex(0),
    );
    let h = hyper_ham_path(&g2, w, u, v, &none).unwrap();
    assert_eq!(validate_path(2, &h, u, v, 15, &none), Ok(()));
    assert!(!h.vertices().contains(&w));
    let same =
        bh_core::embed::ham_path_faulty(&g2, Vertex(0), g2.parse_vertex("20").unwrap(), &none);
    assert!(matches!(same, Err(Error::InvalidInput(_))));
}

#[test]
fn twin_four_cycle_and_fault_free_bipancyclicity() {
    let emb = Embedder::new(2).unwrap();
    let g = emb.graph();
    let e = g.parse_edge("00-10").unwrap();
    let c = emb.edge_bipancyclic_fault_free(e, 4).unwrap();
    assert_eq!(c.labels(2), ["00", "10", "20", "30"]);
    let none = FaultSet::empty(2);
    for e in g.edges() {
        for len in (4..=16).step_by(2) {
            let c = emb.edge_bipancyclic_fault_free(e, len).unwrap();
            assert_eq!(validate_cycle(2, &c, e, len, &none), Ok(()));
        }
    }
}

#[test]
fn embedding_is_deterministic() {
    let emb = Embedder::new(3).unwrap();
    let g = emb.graph();
    let e = g.parse_edge("000-101").unwrap();
    let f = FaultSet::parse_text(g, "000-310\n200-101\n001-102\n").unwrap();
    for len in (6..=64).step_by(2) {
        assert_eq!(
            emb.embed(e, len, &f).unwrap(),
            emb.embed(e, len, &f).unwrap()
        );
    }
}

#[test]
fn cycle_text_round_trip() {
    let g = BalancedHypercube::new(2).unwrap();
    let e = g.parse_edge("00-10").unwrap();
    let (c, _) = embed_cycle(2, e, 10, &FaultSet::empty(2)).unwrap();
    let back = CyclePath::parse(&g, &c.labels(2), true).unwrap();
    assert_eq!(back, c);
}
