use mono_index::graph::{enumerate_connected_graphs, is_isomorphic, parse_graph6};
use mono_index::mvx::{connected_domination_number, mvx_exact};
use mono_index::survey::{
    build_near_complete_bipartite, complementary_pairs, enumerate_coconnected,
    expected_lower_bound, locate_f1, summarize, survey_bounds, survey_bounds_with, to_csv,
    SurveyOptions, CSV_HEADER,
};
use mono_index::{Config, Exec, Graph};

#[test]
fn coconnected_examples() {
    let four = enumerate_coconnected(4).unwrap();
    assert_eq!(four.len(), 1);
    assert!(is_isomorphic(&four[0], &Graph::path(4).unwrap()));
    let five = enumerate_coconnected(5).unwrap();
    assert!(five
        .iter()
        .any(|g| is_isomorphic(g, &Graph::cycle(5).unwrap())));
    for n in 4..=7 {
        let filtered = enumerate_connected_graphs(n)
            .unwrap()
            .into_iter()
            .filter(|g| g.complement().is_connected())
            .count();
        let got = enumerate_coconnected(n).unwrap();
        assert_eq!(got.len(), filtered);
        // closed under complement
        assert!(got
            .iter()
            .all(|g| got.iter().any(|h| is_isomorphic(h, &g.complement()))));
    }
    assert!(enumerate_coconnected(9).is_err());
}

#[test]
fn lower_bound_examples() {
    assert_eq!(expected_lower_bound(5, 3).unwrap(), 6);
    assert_eq!(expected_lower_bound(7, 3).unwrap(), 10);
    assert_eq!(expected_lower_bound(7, 4).unwrap(), 9);
    assert_eq!(expected_lower_bound(8, 3).unwrap(), 11);
    assert_eq!(expected_lower_bound(8, 4).unwrap(), 10);
}

#[test]
fn survey_examples() {
    let four = survey_bounds(4).unwrap();
    assert!(four.iter().all(|r| r.sum == 6));

    let five = survey_bounds(5).unwrap();
    let k3: Vec<_> = five.iter().filter(|r| r.k == 3).collect();
    let min = k3.iter().map(|r| r.sum).min().unwrap();
    assert_eq!(min, 6);
    let minimizers: Vec<_> = k3.iter().filter(|r| r.sum == 6).collect();
    assert_eq!(minimizers.len(), 1);
    assert!(is_isomorphic(
        &parse_graph6(&minimizers[0].g6).unwrap(),
        &Graph::cycle(5).unwrap()
    ));

    let six = survey_bounds(6).unwrap();
    for s in summarize(&six) {
        assert_eq!(s.max_sum, 10);
        let hits: Vec<Graph> = s
            .maximizers
            .iter()
            .map(|g| parse_graph6(g).unwrap())
            .collect();
        let kmn = build_near_complete_bipartite(3, 3).unwrap();
        assert!(hits.iter().any(|g| is_isomorphic(g, &kmn)));
    }
}

#[test]
fn record_invariants() {
    for r in survey_bounds(6).unwrap() {
        assert_eq!(r.sum, r.mvx_g + r.mvx_gbar);
        let g = parse_graph6(&r.g6).unwrap();
        assert!(is_isomorphic(
            &g.complement(),
            &parse_graph6(&r.g6_complement).unwrap()
        ));
        assert_eq!(r.verdict(), "pass");
        assert_eq!(r.upper_bound.is_some(), r.k >= 3);
    }
}

#[test]
fn csv_is_identical_across_exec() {
    let seq = SurveyOptions {
        config: Config {
            exec: Exec::Sequential,
            ..Config::default()
        },
        ..Default::default()
    };
    let par = SurveyOptions {
        config: Config {
            exec: Exec::Parallel,
            ..Config::default()
        },
        ..Default::default()
    };
    let a = to_csv(&survey_bounds_with(6, &seq).unwrap());
    let b = to_csv(&survey_bounds_with(6, &par).unwrap());
    assert_eq!(a, b);
    assert_eq!(a.lines().nth(1), Some(CSV_HEADER));
    let rows: Vec<_> = a.lines().skip(2).collect();
    let keys: Vec<(String, usize)> = rows
        .iter()
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            (f[2].to_string(), f[1].parse().unwrap())
        })
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn survey_rejects_out_of_range() {
    assert!(survey_bounds(3).is_err());
    assert!(survey_bounds(8).is_err());
    assert!(survey_bounds_with(
        5,
        &SurveyOptions {
            k: Some(2),
            ..Default::default()
        }
    )
    .is_err());
}

#[test]
fn near_complete_bipartite_sums() {
    let g = build_near_complete_bipartite(2, 3).unwrap();
    assert_eq!((g.n(), g.m()), (5, 5));
    for (a, b) in [(2, 3), (3, 3), (2, 4)] {
        let g = build_near_complete_bipartite(a, b).unwrap();
        let n = a + b;
        assert_eq!(g.diameter().unwrap(), 3);
        assert_eq!(g.complement().diameter().unwrap(), 3);
        for k in 3..=n {
            let s = mvx_exact(&g, k).unwrap().value + mvx_exact(&g.complement(), k).unwrap().value;
            assert_eq!(s, 2 * n - 2);
        }
    }
    assert!(is_isomorphic(
        &build_near_complete_bipartite(2, 2).unwrap(),
        &Graph::path(4).unwrap()
    ));
    assert!(build_near_complete_bipartite(1, 4).is_err());
}

#[test]
fn f1_pair() {
    let found = locate_f1().unwrap();
    assert_eq!(found.len(), 2);
    assert_eq!(complementary_pairs(&found).len(), 1);
    for g in &found {
        assert_eq!(connected_domination_number(g).unwrap(), 3);
        assert_eq!(connected_domination_number(&g.complement()).unwrap(), 3);
        for k in 3..=6 {
            let s = mvx_exact(g, k).unwrap().value + mvx_exact(&g.complement(), k).unwrap().value;
            assert_eq!(s, 8);
        }
    }
}
