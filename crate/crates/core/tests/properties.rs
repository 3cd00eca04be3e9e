//! Property-based invariants: predicate implication chains, canonical-form
//! stability under relabeling, solver-versus-oracle agreement, and the
//! independent labeled-tree enumeration cross-check.

use proptest::prelude::*;
use trdom::bitset::VertexSet;
use trdom::canon;
use trdom::families::{self, FamilySpec};
use trdom::format;
use trdom::graph::{self, Graph};
use trdom::labeling::{self, Labeling};
use trdom::solver::{self, Parameter};

fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn random_labeling(n: usize, seed: u64) -> Labeling {
    let mut s = seed;
    Labeling::new((0..n).map(|_| (splitmix(&mut s) % 3) as u8).collect()).unwrap()
}

fn random_permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut s = seed;
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = (splitmix(&mut s) % (i as u64 + 1)) as usize;
        perm.swap(i, j);
    }
    perm
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
    Graph::new(g.order(), &edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn predicate_implication_chain(n in 1usize..9, gseed: u64, lseed: u64, p in 0u32..100) {
        let g = families::random_graph(n, f64::from(p) / 100.0, gseed);
        let f = random_labeling(n, lseed);
        if labeling::is_total_roman(&g, &f) {
            prop_assert!(labeling::is_total_roman2(&g, &f));
        }
        if labeling::is_total_roman2(&g, &f) {
            prop_assert!(labeling::is_roman2(&g, &f));
            prop_assert!(labeling::is_total_dominating_function(&g, &f));
        }
        if labeling::is_roman2(&g, &f) {
            prop_assert!(labeling::is_dominating_function(&g, &f));
        }
        // Relaxing at any vertex never invalidates a valid labeling.
        if labeling::is_total_roman2(&g, &f) {
            for v in 0..n {
                prop_assert!(labeling::is_near_total_roman2(&g, &f, v));
            }
        }
    }

    #[test]
    fn double_domination_matches_indicator(n in 1usize..9, gseed: u64, sseed: u64, p in 0u32..100) {
        let g = families::random_graph(n, f64::from(p) / 100.0, gseed);
        let mut s = sseed;
        let set = VertexSet::from_iter(n, (0..n).filter(|_| splitmix(&mut s).is_multiple_of(2)));
        let f = Labeling::indicator(n, &set);
        prop_assert_eq!(
            labeling::is_double_dominating_set(&g, &set),
            labeling::is_total_roman2(&g, &f)
        );
    }

    #[test]
    fn weight_identity_and_partition(n in 0usize..12, gseed: u64, lseed: u64) {
        let g = families::random_graph(n, 0.4, gseed);
        let f = random_labeling(n, lseed);
        prop_assert_eq!(f.weight(), 2 * f.twos().len() + f.ones().len());
        let near = f.zeros_near_two(&g);
        let far = f.zeros_far_from_two(&g);
        prop_assert_eq!(near.union(&far), f.zeros().clone());
        prop_assert!(near.intersection(&far).is_empty());
    }

    #[test]
    fn structural_counts(n in 1usize..9, gseed: u64, p in 0u32..100) {
        let g = families::random_graph(n, f64::from(p) / 100.0, gseed);
        let degsum: usize = (0..n).map(|v| g.degree(v)).sum();
        prop_assert_eq!(degsum, 2 * g.size());

        // Induced subgraph keeps exactly the edges with both ends kept.
        let mut s = gseed ^ 0x5151;
        let drop = VertexSet::from_iter(n, (0..n).filter(|_| splitmix(&mut s).is_multiple_of(3)));
        let (h, map) = g.delete_vertices(&drop);
        prop_assert_eq!(h.order(), n - drop.len());
        let expected = g
            .edges()
            .filter(|&(u, v)| !drop.contains(u) && !drop.contains(v))
            .count();
        prop_assert_eq!(h.size(), expected);
        for (u, v) in h.edges() {
            prop_assert!(g.has_edge(map[u], map[v]));
        }
    }

    #[test]
    fn corona_order(gn in 1usize..5, hn in 0usize..4, gseed: u64) {
        let g = families::random_graph(gn, 0.5, gseed);
        let h = families::random_graph(hn, 0.5, gseed ^ 1);
        let c = graph::corona(&g, &h);
        prop_assert_eq!(c.order(), gn * (1 + hn));
    }

    #[test]
    fn distance_triangle_inequality(n in 2usize..9, seed: u64) {
        let g = families::random_connected_graph(n, 0.45, seed);
        for u in 0..n {
            for v in 0..n {
                for w in 0..n {
                    let duv = g.distance(u, v).unwrap();
                    let duw = g.distance(u, w).unwrap();
                    let dwv = g.distance(w, v).unwrap();
                    prop_assert!(duv <= duw + dwv);
                }
            }
        }
    }

    #[test]
    fn canonical_form_is_relabeling_invariant(n in 1usize..9, gseed: u64, pseed: u64, p in 0u32..100) {
        let g = families::random_graph(n, f64::from(p) / 100.0, gseed);
        let perm = random_permutation(n, pseed);
        let h = relabel(&g, &perm);
        prop_assert_eq!(canon::canonical_form(&g).unwrap(), canon::canonical_form(&h).unwrap());
    }

    #[test]
    fn solver_matches_oracle(n in 1usize..8, gseed: u64, p in 0u32..100, kind_ix in 0usize..7) {
        let g = families::random_graph(n, f64::from(p) / 100.0, gseed);
        let kind = match kind_ix {
            0 => Parameter::Domination,
            1 => Parameter::TotalDomination,
            2 => Parameter::Roman2,
            3 => Parameter::TotalRoman,
            4 => Parameter::TotalRoman2,
            5 => Parameter::DoubleDomination,
            _ => Parameter::NearTotalRoman2 { relaxed: gseed as usize % n.max(1) },
        };
        let fast = solver::exact(&g, kind).unwrap();
        let oracle = solver::exact_by_enumeration(&g, kind).unwrap();
        prop_assert_eq!(fast.value, oracle.value);
        prop_assert_eq!(fast.feasible, oracle.feasible);
        if let (Some(a), Some(b)) = (&fast.witness, &oracle.witness) {
            prop_assert_eq!(a.values(), b.values());
        }
    }

    #[test]
    fn edge_deletion_never_decreases_total_roman2(n in 2usize..9, seed: u64) {
        let g = families::random_connected_graph(n, 0.55, seed);
        let base = solver::exact(&g, Parameter::TotalRoman2).unwrap().value.unwrap();
        for (u, v) in g.edges() {
            if g.degree(u) < 2 || g.degree(v) < 2 {
                continue;
            }
            let edges: Vec<(usize, usize)> =
                g.edges().filter(|&e| e != (u, v)).collect();
            let h = Graph::new(n, &edges).unwrap();
            let shrunk = solver::exact(&h, Parameter::TotalRoman2).unwrap().value.unwrap();
            prop_assert!(base <= shrunk, "removing ({u},{v}) lowered the value");
        }
    }

    #[test]
    fn graph6_parser_never_panics(bytes in proptest::collection::vec(0u8..=127, 0..40)) {
        let text: String = bytes.iter().map(|&b| b as char).collect();
        let _ = format::parse_graph6(&text);
        let _ = format::parse_auto(&text);
    }

    #[test]
    fn formats_round_trip(n in 0usize..12, gseed: u64, p in 0u32..100) {
        let g = families::random_graph(n, f64::from(p) / 100.0, gseed);
        prop_assert_eq!(format::parse_edge_list(&format::emit_edge_list(&g)).unwrap(), g.clone());
        prop_assert_eq!(format::parse_graph6(&format::emit_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn private_neighbor_existence(n in 2usize..8, seed: u64) {
        let g = families::random_connected_graph(n, 0.5, seed);
        let optima = solver::all_optimal(&g, Parameter::TotalRoman2).unwrap();
        let witnessed = optima.iter().any(|f| {
            f.twos().is_empty()
                || f.twos().iter().all(|v| {
                    let (_, epn) =
                        labeling::private_neighbors(&g, v, f.positives()).unwrap();
                    epn.len() >= 2
                })
        });
        prop_assert!(witnessed);
    }

    #[test]
    fn bounded_degree_two_collapse(n in 2usize..10, cycle in proptest::bool::ANY) {
        // Paths and cycles have maximum degree two, where the total Roman {2}
        // and double domination numbers coincide.
        let spec = if cycle { FamilySpec::Cycle(n.max(3)) } else { FamilySpec::Path(n) };
        let g = families::build(&spec).unwrap();
        prop_assert_eq!(
            solver::exact(&g, Parameter::TotalRoman2).unwrap().value,
            solver::exact(&g, Parameter::DoubleDomination).unwrap().value
        );
    }
}

/// The spec'd hundred-permutation sweep on fixed interesting graphs.
#[test]
fn canonical_form_hundred_permutations() {
    let spider =
        Graph::new(9, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 5), (0, 6), (4, 7), (4, 8)]).unwrap();
    let petersen = Graph::new(
        10,
        &[
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
        ],
    )
    .unwrap();
    for g in [&spider, &petersen, &families::random_graph(8, 0.5, 7)] {
        let reference = canon::canonical_form(g).unwrap();
        for k in 0..100u64 {
            let perm = random_permutation(g.order(), 0xABCD + k);
            let h = relabel(g, &perm);
            assert_eq!(reference, canon::canonical_form(&h).unwrap(), "permutation {k}");
        }
    }
}

/// Independent labeled-tree oracle: decode every Prüfer sequence and compare
/// the isomorphism classes with the level-sequence enumerator.
#[test]
fn tree_enumeration_cross_check() {
    fn tree_from_prufer(n: usize, seq: &[usize]) -> Graph {
        let mut degree = vec![1usize; n];
        for &x in seq {
            degree[x] += 1;
        }
        let mut edges = Vec::with_capacity(n - 1);
        for &x in seq {
            let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
            edges.push((leaf, x));
            degree[leaf] = 0;
            degree[x] -= 1;
        }
        let mut rem = (0..n).filter(|&v| degree[v] == 1);
        let (a, b) = (rem.next().unwrap(), rem.next().unwrap());
        edges.push((a, b));
        Graph::new(n, &edges).unwrap()
    }

    for n in 2..=8usize {
        let mut from_prufer = std::collections::HashSet::new();
        let count = n.pow(n as u32 - 2);
        for code in 0..count {
            let mut seq = Vec::with_capacity(n - 2);
            let mut c = code;
            for _ in 0..n - 2 {
                seq.push(c % n);
                c /= n;
            }
            from_prufer.insert(canon::canonical_form(&tree_from_prufer(n, &seq)).unwrap());
        }
        let from_levels: std::collections::HashSet<Vec<u8>> = families::enumerate_trees(n)
            .unwrap()
            .iter()
            .map(|t| canon::canonical_form(t).unwrap())
            .collect();
        assert_eq!(from_prufer, from_levels, "tree classes at order {n}");
    }
}

/// Removing a leaf never increases either total Roman parameter.
#[test]
fn leaf_removal_is_monotone() {
    for n in 3..=8usize {
        for tree in families::enumerate_trees(n).unwrap() {
            let tr2 = solver::exact(&tree, Parameter::TotalRoman2).unwrap().value.unwrap();
            let tr = solver::exact(&tree, Parameter::TotalRoman).unwrap().value.unwrap();
            for v in 0..n {
                if tree.degree(v) != 1 {
                    continue;
                }
                let (smaller, _) = tree.delete_vertex(v);
                let s2 = solver::exact(&smaller, Parameter::TotalRoman2).unwrap().value.unwrap();
                let s = solver::exact(&smaller, Parameter::TotalRoman).unwrap().value.unwrap();
                assert!(s2 <= tr2 && s <= tr, "leaf {v} removal on order-{n} tree");
            }
        }
    }
}

/// The pendant-stars gadget preserves bipartiteness and chordality.
#[test]
fn reduction_gadget_preserves_graph_classes() {
    let mut bases: Vec<Graph> = Vec::new();
    for n in 2..=4 {
        bases.extend(families::enumerate_connected_graphs(n).unwrap());
    }
    for seed in 0..10u64 {
        bases.push(families::random_connected_graph(5, 0.5, 777 + seed));
    }
    let mut bip = 0;
    let mut chd = 0;
    for base in &bases {
        let gadget = families::reduction_gadget(base).unwrap();
        if base.is_bipartite() {
            bip += 1;
            assert!(gadget.is_bipartite(), "gadget lost bipartiteness");
        }
        if base.is_chordal() {
            chd += 1;
            assert!(gadget.is_chordal(), "gadget lost chordality");
        }
    }
    // The sample must actually exercise both hypotheses.
    assert!(bip >= 5 && chd >= 5);
}

/// The degree-two collapse also holds on disconnected unions of paths and
/// cycles (every graph of maximum degree two without isolated vertices).
#[test]
fn degree_two_collapse_on_unions() {
    let union = |parts: &[FamilySpec]| -> Graph {
        let mut edges = Vec::new();
        let mut offset = 0;
        for spec in parts {
            let g = families::build(spec).unwrap();
            edges.extend(g.edges().map(|(u, v)| (u + offset, v + offset)));
            offset += g.order();
        }
        Graph::new(offset, &edges).unwrap()
    };
    for parts in [
        vec![FamilySpec::Path(3), FamilySpec::Cycle(4)],
        vec![FamilySpec::Path(2), FamilySpec::Path(5), FamilySpec::Cycle(3)],
        vec![FamilySpec::Cycle(5), FamilySpec::Cycle(6)],
    ] {
        let g = union(&parts);
        assert_eq!(
            solver::exact(&g, Parameter::TotalRoman2).unwrap().value,
            solver::exact(&g, Parameter::DoubleDomination).unwrap().value,
            "collapse failed on {parts:?}"
        );
    }
}

/// Witnesses returned by the solver always satisfy their own predicate.
#[test]
fn witnesses_satisfy_predicates() {
    for seed in 0..20u64 {
        let g = families::random_graph(7, 0.4, seed);
        for kind in Parameter::BASE {
            let r = solver::exact(&g, kind).unwrap();
            if let Some(f) = &r.witness {
                assert!(kind.satisfies(&g, f));
                assert_eq!(f.weight(), r.value.unwrap());
            }
        }
    }
}
