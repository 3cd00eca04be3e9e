//! Constructors for the named graph families, gadget builders, and
//! exhaustive small-graph enumeration.

use crate::bitset::VertexSet;
use crate::canon;
use crate::error::{Error, Result};
use crate::graph::{corona, Graph};
use rayon::prelude::*;

pub const TREE_ENUM_LIMIT: usize = 12;
pub const CONNECTED_ENUM_LIMIT: usize = 7;

/// A named family together with its integer parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    /// Star of order n, i.e. one center joined to n-1 leaves.
    Star(usize),
    /// Two adjacent centers carrying x and y leaves, x >= y >= 1.
    DoubleStar(usize, usize),
    /// Hub joined to the center of each of s cherries (paths on 3 vertices).
    HubOfPath3(usize),
    /// Hub joined to one support vertex of each of r paths on 4 vertices.
    HubOfPath4(usize),
    /// Graph of the given order whose total Roman {2}-domination number is
    /// exactly `weight`, for 3 < weight < order.
    Realization { weight: usize, order: usize },
    /// Hardness gadget: one pendant 4-leaf star per vertex of the base,
    /// attached through a leaf.
    Reduction(Graph),
}

pub fn build(spec: &FamilySpec) -> Result<Graph> {
    match *spec {
        FamilySpec::Path(n) => {
            require(n >= 1, "path needs n >= 1")?;
            Graph::new(n, &pairs((0..n.saturating_sub(1)).map(|i| (i, i + 1))))
        }
        FamilySpec::Cycle(n) => {
            require(n >= 3, "cycle needs n >= 3")?;
            let mut e: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            e.push((n - 1, 0));
            Graph::new(n, &e)
        }
        FamilySpec::Complete(n) => {
            require(n >= 1, "complete graph needs n >= 1")?;
            let mut e = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    e.push((u, v));
                }
            }
            Graph::new(n, &e)
        }
        FamilySpec::Empty(n) => Ok(Graph::empty(n)),
        FamilySpec::Star(n) => {
            require(n >= 1, "star needs n >= 1")?;
            Graph::new(n, &pairs((1..n).map(|v| (0, v))))
        }
        FamilySpec::DoubleStar(x, y) => {
            require(x >= y && y >= 1, "double star needs x >= y >= 1")?;
            let mut e = vec![(0, 1)];
            e.extend((0..x).map(|i| (0, 2 + i)));
            e.extend((0..y).map(|i| (1, 2 + x + i)));
            Graph::new(2 + x + y, &e)
        }
        FamilySpec::HubOfPath3(s) => {
            require(s >= 1, "hub-of-cherries needs s >= 1")?;
            let mut e = Vec::new();
            for i in 0..s {
                let c = 1 + 3 * i;
                e.extend([(0, c), (c, c + 1), (c, c + 2)]);
            }
            Graph::new(3 * s + 1, &e)
        }
        FamilySpec::HubOfPath4(r) => {
            require(r >= 1, "hub-of-paths needs r >= 1")?;
            let mut e = Vec::new();
            for i in 0..r {
                // Block [b, a, c, d] for the path a-b-c-d; hub joins b.
                let b = 1 + 4 * i;
                e.extend([(0, b), (b, b + 1), (b, b + 2), (b + 2, b + 3)]);
            }
            Graph::new(4 * r + 1, &e)
        }
        FamilySpec::Realization { weight: r, order: n } => {
            require(3 < r && r < n, "realization needs 3 < weight < order")?;
            let single = Graph::empty(1);
            if r % 2 == 0 {
                // Corona of a path of order r/2, plus n-r pendants at base vertex 0.
                let base = build(&FamilySpec::Path(r / 2))?;
                let g = corona(&base, &single);
                let extra: Vec<(usize, usize)> = (0..n - r).map(|i| (0, r + i)).collect();
                g.extend_with(n - r, &extra)
            } else {
                // Corona of a path of order (r-3)/2 joined through vertex 0 to
                // a designated leaf of a star of order n-r+3.
                let base = build(&FamilySpec::Path((r - 3) / 2))?;
                let g = corona(&base, &single);
                let center = r - 3;
                let first_leaf = center + 1;
                let mut extra: Vec<(usize, usize)> =
                    (0..n - r + 2).map(|i| (center, first_leaf + i)).collect();
                extra.push((0, first_leaf));
                g.extend_with(n - r + 3, &extra)
            }
        }
        FamilySpec::Reduction(ref base) => reduction_gadget(base),
    }
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::BadFamilyParameters(msg.to_string()))
    }
}

fn pairs<I: Iterator<Item = (usize, usize)>>(it: I) -> Vec<(usize, usize)> {
    it.collect()
}

/// One pendant 4-leaf star per base vertex v: center `n + 5v`, leaves
/// `n + 5v + 1 ..= n + 5v + 4`, with the edge from v to the first leaf.
pub fn reduction_gadget(base: &Graph) -> Result<Graph> {
    if base.has_isolated_vertex() || base.order() == 0 {
        return Err(Error::BadFamilyParameters(
            "reduction base must be nonempty without isolated vertices".into(),
        ));
    }
    let n = base.order();
    let mut e: Vec<(usize, usize)> = base.edges().collect();
    for v in 0..n {
        let center = n + 5 * v;
        for leaf in 1..=4 {
            e.push((center, center + leaf));
        }
        e.push((v, center + 1));
    }
    Graph::new(6 * n, &e)
}

/// Structural witness that a weight-3 labeling exists: either a universal
/// vertex (spanning star) or a triple {a, b, c} spanning at least two inner
/// edges such that every outside vertex sees the triple at least twice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Weight3Witness {
    Star { center: usize },
    Triple { a: usize, b: usize, c: usize },
}

pub fn weight3_witness(g: &Graph) -> Option<Weight3Witness> {
    let n = g.order();
    if n < 3 {
        return None;
    }
    if let Some(center) = (0..n).find(|&v| g.is_universal(v)) {
        return Some(Weight3Witness::Star { center });
    }
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let inner = usize::from(g.has_edge(a, b))
                    + usize::from(g.has_edge(a, c))
                    + usize::from(g.has_edge(b, c));
                if inner < 2 {
                    continue;
                }
                let mut triple = VertexSet::empty(n);
                triple.insert(a);
                triple.insert(b);
                triple.insert(c);
                let covered = (0..n).all(|x| {
                    triple.contains(x) || g.neighbors(x).intersection_len(&triple) >= 2
                });
                if covered {
                    return Some(Weight3Witness::Triple { a, b, c });
                }
            }
        }
    }
    None
}

/// One representative per isomorphism class of trees of order n, via
/// successor generation of canonical rooted level sequences followed by
/// centroid-code deduplication.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    if !(1..=TREE_ENUM_LIMIT).contains(&n) {
        return Err(Error::SizeLimit { order: n, limit: TREE_ENUM_LIMIT });
    }
    if n == 1 {
        return Ok(vec![Graph::empty(1)]);
    }
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    let mut levels: Vec<usize> = (1..=n).collect();
    loop {
        let t = tree_from_levels(&levels);
        let code = canon::canonical_form(&t)?;
        if seen.insert(code) {
            out.push(t);
        }
        if !next_level_sequence(&mut levels) {
            break;
        }
    }
    Ok(out)
}

fn tree_from_levels(levels: &[usize]) -> Graph {
    let n = levels.len();
    let mut edges = Vec::with_capacity(n - 1);
    for i in 1..n {
        let parent = (0..i).rev().find(|&j| levels[j] == levels[i] - 1).unwrap();
        edges.push((parent, i));
    }
    Graph::new(n, &edges).unwrap()
}

/// In-place successor in decreasing lexicographic order; false when the
/// sequence was the last one (the star).
fn next_level_sequence(levels: &mut [usize]) -> bool {
    let Some(p) = (0..levels.len()).rev().find(|&i| levels[i] > 2) else {
        return false;
    };
    let q = (0..p).rev().find(|&i| levels[i] == levels[p] - 1).unwrap();
    for i in p..levels.len() {
        levels[i] = levels[i - (p - q)];
    }
    true
}

/// One representative per isomorphism class of connected graphs of order n,
/// by exhausting the edge subsets of the complete graph and deduplicating
/// canonically. Order is deterministic.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if !(1..=CONNECTED_ENUM_LIMIT).contains(&n) {
        return Err(Error::SizeLimit { order: n, limit: CONNECTED_ENUM_LIMIT });
    }
    let pair_list: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let m = pair_list.len();
    // Canonical keys in parallel, deduplication sequentially in mask order.
    let keyed: Vec<(u64, u32)> = (0u32..(1u32 << m))
        .into_par_iter()
        .filter_map(|mask| {
            let mut adj = [0u16; CONNECTED_ENUM_LIMIT];
            for (bit, &(u, v)) in pair_list.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    adj[u] |= 1 << v;
                    adj[v] |= 1 << u;
                }
            }
            if !mask_connected(n, &adj) {
                return None;
            }
            Some((canon::canonical_triangle_masks(n, &adj[..n]), mask))
        })
        .collect();
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for (key, mask) in keyed {
        if seen.insert(key) {
            let edges: Vec<(usize, usize)> = pair_list
                .iter()
                .enumerate()
                .filter(|&(bit, _)| mask >> bit & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            out.push(Graph::new(n, &edges)?);
        }
    }
    Ok(out)
}

fn mask_connected(n: usize, adj: &[u16]) -> bool {
    let mut reached: u16 = 1;
    let mut frontier: u16 = 1;
    while frontier != 0 {
        let mut next: u16 = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v];
        }
        frontier = next & !reached;
        reached |= next;
    }
    reached.count_ones() as usize == n
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn unit_f64(x: u64) -> f64 {
    (x >> 11) as f64 / (1u64 << 53) as f64
}

/// Erdős–Rényi sample, bit-for-bit reproducible from the seed.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut state = seed;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if unit_f64(splitmix64(&mut state)) < p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("random graph edges are in range")
}

/// First connected Erdős–Rényi sample along a deterministic seed sequence.
pub fn random_connected_graph(n: usize, p: f64, seed: u64) -> Graph {
    if n <= 1 {
        return Graph::empty(n);
    }
    for attempt in 0..100_000u64 {
        let mut s = seed;
        let sub = splitmix64(&mut s).wrapping_add(attempt);
        let g = random_graph(n, p, sub);
        if g.is_connected() {
            return g;
        }
    }
    // With p bounded away from 0 this is unreachable for desk-scale n.
    unreachable!("no connected sample found");
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_cycle_star_shapes() {
        let p4 = build(&FamilySpec::Path(4)).unwrap();
        assert_eq!((p4.order(), p4.size()), (4, 3));
        let c5 = build(&FamilySpec::Cycle(5)).unwrap();
        assert_eq!((c5.order(), c5.size()), (5, 5));
        assert!(c5.vertices().all(|v| c5.degree(v) == 2));
        let k4 = build(&FamilySpec::Complete(4)).unwrap();
        assert_eq!(k4.size(), 6);
        let s = build(&FamilySpec::Star(6)).unwrap();
        assert_eq!(s.degree(0), 5);
        assert!(build(&FamilySpec::Cycle(2)).is_err());
    }

    #[test]
    fn hub_family_shapes() {
        // Order 3s+1 with hub degree s; each branch center supports two leaves.
        let h3 = build(&FamilySpec::HubOfPath3(3)).unwrap();
        assert_eq!(h3.order(), 10);
        assert_eq!(h3.degree(0), 3);
        assert!(h3.is_tree());

        let r3 = build(&FamilySpec::HubOfPath4(3)).unwrap();
        assert_eq!(r3.order(), 13);
        assert_eq!(r3.degree(0), 3);
        assert!(r3.is_tree());
        let classes = r3.vertex_classes();
        assert_eq!(classes.supports.len(), 6);
        assert_eq!(classes.leaves.len(), 6);
    }

    #[test]
    fn realization_orders() {
        for (r, n) in [(4, 6), (5, 7), (6, 9), (7, 10), (8, 10)] {
            let g = build(&FamilySpec::Realization { weight: r, order: n }).unwrap();
            assert_eq!(g.order(), n, "order mismatch for ({r}, {n})");
            assert!(g.is_connected());
        }
        assert!(build(&FamilySpec::Realization { weight: 3, order: 5 }).is_err());
        assert!(build(&FamilySpec::Realization { weight: 5, order: 5 }).is_err());
    }

    #[test]
    fn reduction_shape() {
        let k2 = build(&FamilySpec::Path(2)).unwrap();
        let h = reduction_gadget(&k2).unwrap();
        assert_eq!(h.order(), 12);
        // Each base vertex gains exactly one new neighbor (the attachment leaf).
        assert_eq!(h.degree(0), 2);
        let classes = h.vertex_classes();
        assert_eq!(classes.supports.len(), 2);
        assert_eq!(classes.strong_supports.len(), 2);
        assert!(reduction_gadget(&Graph::empty(2)).is_err());
    }

    #[test]
    fn weight3_witness_examples() {
        let k4 = build(&FamilySpec::Complete(4)).unwrap();
        assert!(weight3_witness(&k4).is_some());
        let p5 = build(&FamilySpec::Path(5)).unwrap();
        assert_eq!(weight3_witness(&p5), None);
        let star = build(&FamilySpec::Star(6)).unwrap();
        assert_eq!(weight3_witness(&star), Some(Weight3Witness::Star { center: 0 }));
    }

    #[test]
    fn tree_enumeration_counts() {
        // Classes of trees by order, cross-checked in tests/properties.rs
        // against an independent labeled-tree oracle.
        let expected = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            let trees = enumerate_trees(n).unwrap();
            assert_eq!(trees.len(), want, "tree count at order {n}");
            assert!(trees.iter().all(|t| t.is_tree() && t.order() == n));
        }
        assert!(enumerate_trees(13).is_err());
        assert!(enumerate_trees(0).is_err());
    }

    #[test]
    fn connected_enumeration_counts() {
        let expected = [1, 1, 2, 6, 21, 112];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            let gs = enumerate_connected_graphs(n).unwrap();
            assert_eq!(gs.len(), want, "connected graph count at order {n}");
            assert!(gs.iter().all(|g| g.is_connected()));
        }
    }

    #[test]
    fn random_graph_determinism() {
        let a = random_graph(9, 0.4, 17);
        let b = random_graph(9, 0.4, 17);
        assert_eq!(a, b);
        let k = random_graph(6, 1.0, 3);
        assert_eq!(k.size(), 15);
        let e = random_graph(6, 0.0, 3);
        assert_eq!(e.size(), 0);
        assert!(random_connected_graph(8, 0.35, 11).is_connected());
    }
}
