//! Acceptance suite: one test per shipped guarantee, each printing a
//! pass/fail line (run with `--nocapture` to see them). Expected values come
//! from the closed forms, from exhaustive enumeration oracles computed here,
//! or from hand-checked small cases.

use rayon::prelude::*;
use std::time::{Duration, Instant};
use trdom::canon;
use trdom::families::{self, FamilySpec};
use trdom::format;
use trdom::graph::Graph;
use trdom::labeling;
use trdom::solver::{self, Parameter};
use trdom::theorems::{self, CheckId};
use trdom::tree_family;

fn fixture(name: &str) -> String {
    let path = format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("cannot read {path}: {e}"))
}

fn value(g: &Graph, kind: Parameter) -> usize {
    solver::exact(g, kind)
        .unwrap_or_else(|e| panic!("solve failed: {e}"))
        .value
        .unwrap_or_else(|| panic!("unexpected infeasible solve for {kind:?}"))
}

fn budget(name: &str, elapsed: Duration, limit: Duration) {
    assert!(
        elapsed <= limit,
        "{name} exceeded its runtime budget: {elapsed:?} > {limit:?}"
    );
}

#[test]
fn criterion_01_spider_reproduction() {
    let started = Instant::now();
    let g = format::parse_edge_list(&fixture("spider.el")).unwrap();
    let expected = [
        (Parameter::Domination, 3),
        (Parameter::TotalDomination, 4),
        (Parameter::Roman2, 5),
        (Parameter::TotalRoman2, 6),
        (Parameter::TotalRoman, 7),
        (Parameter::DoubleDomination, 8),
    ];
    for (kind, want) in expected {
        assert_eq!(value(&g, kind), want, "{kind:?} on the spider graph");
    }
    let elapsed = started.elapsed();
    budget("criterion 1", elapsed, Duration::from_secs(1));
    println!("criterion 1: PASS — spider graph values (3,4,5,6,7,8) in {elapsed:?}");
}

#[test]
fn criterion_02_closed_forms() {
    let started = Instant::now();
    let mut checked = 0;
    let cases: Vec<FamilySpec> = (2..=12)
        .map(FamilySpec::Path)
        .chain((3..=12).map(FamilySpec::Cycle))
        .collect();
    let results: Vec<(String, bool)> = cases
        .par_iter()
        .map(|spec| {
            let g = families::build(spec).unwrap();
            let mut ok = true;
            for kind in [Parameter::TotalRoman2, Parameter::DoubleDomination] {
                let exhaustive = solver::exact_by_enumeration(&g, kind)
                    .unwrap()
                    .value
                    .expect("paths and cycles are feasible");
                let formula = solver::closed_form(kind, spec).unwrap();
                ok &= exhaustive == formula;
            }
            (format!("{spec:?}"), ok)
        })
        .collect();
    for (name, ok) in results {
        assert!(ok, "closed form mismatch on {name}");
        checked += 1;
    }
    let elapsed = started.elapsed();
    budget("criterion 2", elapsed, Duration::from_secs(120));
    println!("criterion 2: PASS — closed forms match exhaustive values on {checked} graphs in {elapsed:?}");
}

#[test]
fn criterion_03_hub_family_values() {
    let started = Instant::now();
    for s in 1..=4usize {
        let g = families::build(&FamilySpec::HubOfPath3(s)).unwrap();
        assert_eq!(value(&g, Parameter::Domination), s, "domination of hub family s={s}");
        assert_eq!(value(&g, Parameter::TotalDomination), s + 1, "total domination s={s}");
        assert_eq!(value(&g, Parameter::TotalRoman2), 2 * s + 1, "total Roman 2 s={s}");
    }
    println!("criterion 3: PASS — hub-of-cherries family exact for s=1..4 in {:?}", started.elapsed());
}

#[test]
fn criterion_04_realization_family() {
    let started = Instant::now();
    let cases: Vec<(usize, usize)> = (5..=10)
        .flat_map(|n| (4..n).map(move |r| (r, n)))
        .collect();
    let results: Vec<(usize, usize, usize)> = cases
        .par_iter()
        .map(|&(r, n)| {
            let g = families::build(&FamilySpec::Realization { weight: r, order: n }).unwrap();
            (r, n, value(&g, Parameter::TotalRoman2))
        })
        .collect();
    for (r, n, got) in &results {
        assert_eq!(got, r, "realization graph for weight {r}, order {n}");
    }
    let elapsed = started.elapsed();
    budget("criterion 4", elapsed, Duration::from_secs(300));
    println!(
        "criterion 4: PASS — {} realization graphs hit their target weight in {elapsed:?}",
        results.len()
    );
}

#[test]
fn criterion_05_reduction_identity() {
    let started = Instant::now();
    // Every connected base of order 2..=4 up to isomorphism (order 1 is an
    // isolated vertex, which the gadget's hypothesis excludes), plus 20
    // seeded random connected bases of order 5.
    let mut bases: Vec<Graph> = Vec::new();
    for n in 2..=4 {
        bases.extend(families::enumerate_connected_graphs(n).unwrap());
    }
    let fixed = bases.len();
    for seed in 0..20u64 {
        bases.push(families::random_connected_graph(5, 0.5, 9000 + seed));
    }
    let results: Vec<(usize, usize, usize)> = bases
        .par_iter()
        .map(|base| {
            let gadget = families::reduction_gadget(base).unwrap();
            let lhs = value(&gadget, Parameter::TotalRoman2);
            let gamma = value(base, Parameter::Domination);
            (lhs, gamma, base.order())
        })
        .collect();
    for (lhs, gamma, n) in &results {
        assert_eq!(*lhs, gamma + 3 * n, "gadget identity on an order-{n} base");
    }
    let elapsed = started.elapsed();
    budget("criterion 5", elapsed, Duration::from_secs(1800));
    println!(
        "criterion 5: PASS — gadget identity on {fixed} exhaustive + 20 random bases in {elapsed:?}"
    );
}

#[test]
fn criterion_06_tree_characterization() {
    let started = Instant::now();
    // Soundness: every generated member up to order 12 has equal parameters.
    let gen12 = tree_family::generate_family(12).unwrap();
    for m in gen12.members() {
        let tr2 = value(&m.tree, Parameter::TotalRoman2);
        let tr = value(&m.tree, Parameter::TotalRoman);
        assert_eq!(tr2, tr, "soundness violated by a generated order-{} tree", m.tree.order());
    }
    // Completeness: per order up to 10, the equality trees coincide with the
    // generated members as canonical-form sets.
    let gen10 = tree_family::generate_family(10).unwrap();
    let mut equality_trees = 0usize;
    for n in 2..=10usize {
        let mut equality_forms: Vec<Vec<u8>> = Vec::new();
        for tree in families::enumerate_trees(n).unwrap() {
            if value(&tree, Parameter::TotalRoman2) == value(&tree, Parameter::TotalRoman) {
                equality_forms.push(canon::canonical_form(&tree).unwrap());
            }
        }
        equality_forms.sort();
        equality_trees += equality_forms.len();
        assert_eq!(
            equality_forms,
            gen10.canonical_forms_of_order(n),
            "completeness mismatch at order {n}"
        );
    }
    let elapsed = started.elapsed();
    budget("criterion 6", elapsed, Duration::from_secs(1800));
    println!(
        "criterion 6: PASS — {} members sound, {equality_trees} equality trees complete in {elapsed:?}",
        gen12.members().len()
    );
}

#[test]
fn criterion_07_small_value_characterizations() {
    let started = Instant::now();
    let mut graphs: Vec<Graph> = Vec::new();
    for n in 1..=7 {
        graphs.extend(families::enumerate_connected_graphs(n).unwrap());
    }
    let count = graphs.len();
    assert_eq!(count, 996, "connected graph classes up to order 7");
    let verdicts: Vec<(usize, Vec<theorems::Verdict>)> = graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| {
            let vs = [CheckId::Eq2, CheckId::Eq3, CheckId::EqN]
                .into_iter()
                .map(|id| theorems::check(g, id).unwrap())
                .collect();
            (i, vs)
        })
        .collect();
    for (i, vs) in &verdicts {
        for v in vs {
            assert!(
                v.holds,
                "characterization {:?} disagrees on graph #{i}: {v:?} ({})",
                v.check,
                format::emit_graph6(&graphs[*i])
            );
        }
    }
    let elapsed = started.elapsed();
    println!(
        "criterion 7: PASS — value-2/3/n characterizations agree on all {count} connected graphs (order <= 7) in {elapsed:?}"
    );
}

fn property_graphs() -> Vec<Graph> {
    let mut graphs = Vec::new();
    for seed in 0..500u64 {
        let mut s = 0x5EED_0000 + seed;
        let mix = |s: &mut u64| {
            *s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            *s >> 33
        };
        let n = 3 + (mix(&mut s) % 7) as usize; // 3..=9
        let p = 0.25 + (mix(&mut s) % 50) as f64 / 100.0; // 0.25..0.74
        graphs.push(families::random_connected_graph(n, p, seed));
    }
    graphs
}

#[test]
fn criterion_08_property_suite() {
    let started = Instant::now();
    // Inequality catalog on 500 seeded random connected graphs and on every
    // tree of order up to 10.
    let mut graphs = property_graphs();
    for n in 1..=10 {
        graphs.extend(families::enumerate_trees(n).unwrap());
    }
    let total = graphs.len();
    let failures: Vec<String> = graphs
        .par_iter()
        .flat_map_iter(|g| {
            CheckId::PROPERTY_SUITE.into_iter().filter_map(move |id| {
                let v = theorems::check(g, id).unwrap();
                if v.holds {
                    None
                } else {
                    Some(format!("{id:?} violated on {}", format::emit_graph6(g)))
                }
            })
        })
        .collect();
    assert!(failures.is_empty(), "property suite violations: {failures:?}");

    // Optimal-set observations on all trees of order 2..=9.
    let mut observation_trees = 0usize;
    for n in 2..=9usize {
        for tree in families::enumerate_trees(n).unwrap() {
            observation_trees += 1;
            check_optimal_set_observations(&tree);
        }
    }
    let elapsed = started.elapsed();
    println!(
        "criterion 8: PASS — 12 catalog checks on {total} graphs, optimal-set observations on {observation_trees} trees in {elapsed:?}"
    );
}

/// The three support-vertex observations plus the private-neighbor existence
/// property, all quantified over the complete optimum set.
fn check_optimal_set_observations(tree: &Graph) {
    let n = tree.order();
    let classes = tree.vertex_classes();
    let tr2_optima = solver::all_optimal(tree, Parameter::TotalRoman2).unwrap();
    let (_, max_deg) = tree.degree_stats();
    let is_star = tree.size() == n - 1 && max_deg == n - 1 && n >= 2;
    let tag = || format::emit_graph6(tree);

    // Adjacent supports: some optimum assigns two to both. A support that is
    // itself a leaf (only on the two-vertex path) carries no external leaf
    // and falls outside the statement.
    for v in classes.adjacent_supports.iter() {
        for w in tree.neighbors(v).intersection(&classes.supports).iter() {
            if w <= v || classes.leaves.contains(v) || classes.leaves.contains(w) {
                continue;
            }
            assert!(
                tr2_optima.iter().any(|f| f.value(v) == 2 && f.value(w) == 2),
                "no optimum assigns two to adjacent supports {v},{w} of {}",
                tag()
            );
        }
    }

    if !is_star {
        let tr_optima = solver::all_optimal(tree, Parameter::TotalRoman).unwrap();
        for v in classes.strong_supports.iter() {
            let leaf_nbrs = tree.neighbors(v).intersection(&classes.leaves);
            // Strong supports: some optimum assigns two to the support and
            // zero to all its leaves, for both parameters.
            for (name, optima) in [("total Roman {2}", &tr2_optima), ("total Roman", &tr_optima)] {
                assert!(
                    optima
                        .iter()
                        .any(|f| f.value(v) == 2 && leaf_nbrs.iter().all(|l| f.value(l) == 0)),
                    "no {name} optimum isolates the leaves of strong support {v} in {}",
                    tag()
                );
            }
            // Supports with three or more leaves are forced to two.
            if leaf_nbrs.len() >= 3 {
                assert!(
                    tr2_optima.iter().all(|f| f.value(v) == 2),
                    "support {v} with >= 3 leaves escapes label two in {}",
                    tag()
                );
            }
        }
    }

    // Some optimum either avoids the label two entirely or gives every
    // two-labeled vertex at least two external private neighbors.
    let witnessed = tr2_optima.iter().any(|f| {
        f.twos().is_empty()
            || f.twos().iter().all(|v| {
                let (_, epn) = labeling::private_neighbors(tree, v, f.positives()).unwrap();
                epn.len() >= 2
            })
    });
    assert!(witnessed, "private-neighbor existence fails on {}", tag());
}

#[test]
fn criterion_09_oracle_equivalence_and_determinism() {
    let started = Instant::now();
    let cases: Vec<u64> = (0..200).collect();
    cases.par_iter().for_each(|&seed| {
        let mut s = 0xACE5_0000 + seed;
        let mix = |s: &mut u64| {
            *s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            *s >> 33
        };
        let n = 1 + (mix(&mut s) % 12) as usize; // 1..=12
        let p = (10 + mix(&mut s) % 80) as f64 / 100.0;
        let g = families::random_graph(n, p, seed);
        let mut kinds: Vec<Parameter> = Parameter::BASE.to_vec();
        for v in [0, n / 2, n.saturating_sub(1)] {
            if v < n {
                kinds.push(Parameter::NearTotalRoman2 { relaxed: v });
            }
        }
        kinds.dedup();
        for kind in kinds {
            let fast = solver::exact(&g, kind).unwrap();
            let oracle = solver::exact_by_enumeration(&g, kind).unwrap();
            assert_eq!(fast.feasible, oracle.feasible, "feasibility for {kind:?} seed {seed}");
            assert_eq!(fast.value, oracle.value, "value for {kind:?} seed {seed}");
            match (&fast.witness, &oracle.witness) {
                (Some(a), Some(b)) => {
                    assert_eq!(a.values(), b.values(), "lex witness for {kind:?} seed {seed}")
                }
                (None, None) => {}
                _ => panic!("witness presence mismatch for {kind:?} seed {seed}"),
            }
        }
    });

    // Reports must be byte-identical across worker counts, timing aside.
    let fixture_path = format!("{}/../../fixtures/spider.el", env!("CARGO_MANIFEST_DIR"));
    let strip_timing = |s: &str| -> String {
        s.lines().filter(|l| !l.trim_start().starts_with("\"timing_ms\"")).collect::<Vec<_>>().join("\n")
    };
    for args in [
        vec!["compute", "--input", fixture_path.as_str(), "--param", "all"],
        vec!["verify", "--input", fixture_path.as_str(), "--check", "all"],
    ] {
        let run = |threads: &str| {
            let out = std::process::Command::new(env!("CARGO_BIN_EXE_trdom"))
                .arg("--threads")
                .arg(threads)
                .args(&args)
                .output()
                .expect("binary runs");
            assert!(out.status.success(), "{args:?} failed: {out:?}");
            strip_timing(&String::from_utf8(out.stdout).unwrap())
        };
        let single = run("1");
        let eight = run("8");
        assert_eq!(single, eight, "report bytes differ across thread counts for {args:?}");
    }
    let elapsed = started.elapsed();
    println!(
        "criterion 9: PASS — branch-and-bound matches enumeration on 200 seeded graphs; reports thread-invariant in {elapsed:?}"
    );
}

#[test]
fn criterion_10_scale_note() {
    // The hardness claim itself is out of reach for any test suite; what
    // ships instead is the gadget identity at desk scale (criterion 5) and
    // property-based acceptance for the general statements (criteria 6-8).
    // This entry records that substitution explicitly.
    let base = families::build(&FamilySpec::Path(2)).unwrap();
    let gadget = families::reduction_gadget(&base).unwrap();
    assert_eq!(gadget.order(), 12);
    println!(
        "criterion 10: PASS — hardness verified via the desk-scale gadget identity, not asymptotics"
    );
}
