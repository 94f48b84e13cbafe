mod common;

use mono_index::coloring::verify_mvx_coloring;
use mono_index::graph::enumerate_connected_graphs;
use mono_index::mvx::{
    complement_cycle_mvx, connected_domination_number, cycle_mvc_formula, diameter_upper_bound,
    extract_mono_spanning_tree, max_leaf_heuristic, max_leaf_spanning_tree, max_leaf_tree_via_cds,
    minimum_connected_dominating_set, mvx_exact, mvx_exact_with, mvx_n_formula, mvx_via_cut_vertex,
    MvxMethod,
};
use mono_index::partition::all_partitions;
use mono_index::{Budget, Config, Error, Exec, Graph, VertexColoring};

fn bowtie() -> Graph {
    Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
}

fn prism() -> Graph {
    Graph::cycle(6).unwrap().complement()
}

#[test]
fn leaf_examples() {
    let star = Graph::star(4).unwrap();
    let p5 = Graph::path(5).unwrap();
    assert_eq!(max_leaf_spanning_tree(&star).unwrap().leaf_count, 4);
    assert_eq!(max_leaf_spanning_tree(&p5).unwrap().leaf_count, 2);
    assert_eq!(max_leaf_spanning_tree(&prism()).unwrap().leaf_count, 4);
    assert_eq!(max_leaf_heuristic(&star).unwrap().leaf_count, 4);
    assert_eq!(max_leaf_heuristic(&p5).unwrap().leaf_count, 2);
}

#[test]
fn exact_leaf_count_matches_oracle() {
    for n in 2..=7 {
        for g in enumerate_connected_graphs(n).unwrap() {
            let t = max_leaf_spanning_tree(&g).unwrap();
            assert!(t.is_spanning_tree_of(&g));
            assert_eq!(t.leaf_count, common::max_leaves_oracle(&g));
            let h = max_leaf_heuristic(&g).unwrap();
            assert!(h.is_spanning_tree_of(&g));
            assert!(h.leaf_count <= t.leaf_count);
            if n >= 3 {
                let via = max_leaf_tree_via_cds(&g, &Budget::default()).unwrap();
                assert!(via.is_spanning_tree_of(&g));
                assert_eq!(via.leaf_count, t.leaf_count);
            }
        }
    }
}

#[test]
fn connected_domination_matches_oracle() {
    assert_eq!(
        connected_domination_number(&Graph::cycle(6).unwrap()).unwrap(),
        4
    );
    assert_eq!(connected_domination_number(&prism()).unwrap(), 2);
    assert_eq!(
        connected_domination_number(&Graph::star(4).unwrap()).unwrap(),
        1
    );
    for n in 1..=7 {
        for g in enumerate_connected_graphs(n).unwrap() {
            let d = minimum_connected_dominating_set(&g).unwrap();
            assert_eq!(d.len(), common::connected_domination_oracle(&g));
            if n > 1 {
                assert!(g.dominates(d.mask()) && g.induces_connected(d.mask()));
            }
        }
    }
}

#[test]
fn closed_form_examples() {
    assert_eq!(mvx_n_formula(&Graph::path(5).unwrap()).unwrap(), 3);
    assert_eq!(mvx_n_formula(&Graph::star(4).unwrap()).unwrap(), 5);
    assert_eq!(mvx_n_formula(&Graph::cycle(6).unwrap()).unwrap(), 3);
    assert_eq!(cycle_mvc_formula(5).unwrap(), 5);
    assert_eq!(cycle_mvc_formula(6).unwrap(), 3);
    assert_eq!(cycle_mvc_formula(100).unwrap(), 3);
    assert_eq!(complement_cycle_mvx(7, 3).unwrap(), 7);
    assert_eq!(complement_cycle_mvx(7, 4).unwrap(), 6);
    assert_eq!(complement_cycle_mvx(8, 3).unwrap(), 8);
    assert_eq!(complement_cycle_mvx(8, 4).unwrap(), 7);
    assert_eq!(complement_cycle_mvx(10, 5).unwrap(), 10);
    assert_eq!(complement_cycle_mvx(10, 6).unwrap(), 9);
    assert_eq!(
        diameter_upper_bound(&Graph::complete(4).unwrap()).unwrap(),
        5
    );
    assert_eq!(diameter_upper_bound(&Graph::path(5).unwrap()).unwrap(), 3);
    assert_eq!(diameter_upper_bound(&Graph::cycle(6).unwrap()).unwrap(), 5);
}

#[test]
fn cut_vertex_examples() {
    assert_eq!(
        mvx_via_cut_vertex(&Graph::path(5).unwrap(), 2)
            .unwrap()
            .value,
        3
    );
    let r = mvx_via_cut_vertex(&bowtie(), 3).unwrap();
    assert_eq!(r.value, 5);
    assert_eq!(r.method, MvxMethod::CutVertex);
    assert_eq!(mvx_exact(&bowtie(), 3).unwrap().value, 5);
    assert_eq!(
        mvx_via_cut_vertex(&Graph::path(4).unwrap(), 4)
            .unwrap()
            .value,
        3
    );
    assert!(matches!(
        mvx_via_cut_vertex(&Graph::cycle(5).unwrap(), 3),
        Err(Error::NotApplicable(_))
    ));
}

#[test]
fn cut_vertex_witnesses_check() {
    for n in 3..=7 {
        for g in enumerate_connected_graphs(n).unwrap() {
            if g.cut_vertices().unwrap().is_empty() {
                continue;
            }
            for k in 2..=n {
                let r = mvx_via_cut_vertex(&g, k).unwrap();
                let w = r.witness.unwrap();
                assert_eq!(w.num_colors(), r.value);
                assert!(verify_mvx_coloring(&w, k).unwrap());
            }
        }
    }
}

#[test]
fn exact_examples() {
    assert_eq!(mvx_exact(&Graph::complete(4).unwrap(), 3).unwrap().value, 4);
    assert_eq!(mvx_exact(&Graph::cycle(5).unwrap(), 2).unwrap().value, 5);
    assert_eq!(mvx_exact(&Graph::cycle(6).unwrap(), 3).unwrap().value, 3);
    assert_eq!(
        mvx_exact(&Graph::cycle(8).unwrap().complement(), 3)
            .unwrap()
            .value,
        8
    );
    assert!(matches!(
        mvx_exact(&Graph::cycle(9).unwrap(), 3),
        Err(Error::Budget(_))
    ));
}

#[test]
fn exact_matches_full_partition_scan() {
    for n in 2..=5 {
        for g in enumerate_connected_graphs(n).unwrap() {
            for k in 2..=n {
                let best = all_partitions(n)
                    .iter()
                    .filter_map(|p| {
                        let colors: Vec<usize> = p.iter().map(|&c| c as usize).collect();
                        let vc = VertexColoring::new(&g, &colors).unwrap();
                        verify_mvx_coloring(&vc, k)
                            .unwrap()
                            .then_some(vc.num_colors())
                    })
                    .max()
                    .unwrap();
                let r = mvx_exact(&g, k).unwrap();
                assert_eq!(r.value, best);
                assert!(verify_mvx_coloring(r.witness.as_ref().unwrap(), k).unwrap());
                assert!(r.value <= diameter_upper_bound(&g).unwrap());
            }
        }
    }
}

#[test]
fn exact_search_is_deterministic_across_exec() {
    let seq = Config {
        exec: Exec::Sequential,
        ..Config::default()
    };
    let par = Config {
        exec: Exec::Parallel,
        ..Config::default()
    };
    for g in enumerate_connected_graphs(6).unwrap().iter().step_by(5) {
        for k in 2..=6 {
            assert_eq!(
                mvx_exact_with(g, k, &seq).unwrap(),
                mvx_exact_with(g, k, &par).unwrap()
            );
        }
    }
}

#[test]
fn extraction_examples() {
    let star = Graph::star(4).unwrap();
    let t = extract_mono_spanning_tree(&VertexColoring::rainbow(&star), 0).unwrap();
    assert_eq!(t.edges, star.edges());

    let p4 = Graph::path(4).unwrap();
    let t =
        extract_mono_spanning_tree(&VertexColoring::new(&p4, &[1, 0, 0, 2]).unwrap(), 1).unwrap();
    assert_eq!(t.edges, p4.edges());

    let b = bowtie();
    let t = extract_mono_spanning_tree(&VertexColoring::rainbow(&b), 2).unwrap();
    assert_eq!(t.internal_vertices(5).to_vec(), vec![2]);
    assert_eq!(t.leaf_count, 4);

    assert!(extract_mono_spanning_tree(&VertexColoring::rainbow(&b), 0).is_err());
    assert!(extract_mono_spanning_tree(&VertexColoring::rainbow(&p4), 1).is_err());
}

#[test]
fn extraction_from_every_exact_witness() {
    for n in 3..=6 {
        for g in enumerate_connected_graphs(n).unwrap() {
            let cuts = g.cut_vertices().unwrap();
            if cuts.is_empty() {
                continue;
            }
            let vc = mvx_exact(&g, 2).unwrap().witness.unwrap();
            for v0 in cuts.iter() {
                let t = extract_mono_spanning_tree(&vc, v0).unwrap();
                assert!(t.is_spanning_tree_of(&g));
                let c = vc.color_of(v0);
                assert!(t.internal_vertices(n).iter().all(|v| vc.color_of(v) == c));
            }
        }
    }
}
