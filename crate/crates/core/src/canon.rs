//! Canonical forms for isomorphism testing.
//!
//! Trees of any order are encoded by the rooted-subtree code taken at the
//! centroid(s). Arbitrary graphs up to [`GENERAL_LIMIT`] vertices are encoded
//! by the lexicographically largest packed upper-triangle adjacency string
//! over all vertex orderings, found by branch and bound.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const GENERAL_LIMIT: usize = 10;

/// Equal byte strings iff the graphs are isomorphic. Trees take the tree
/// encoding regardless of order; everything else must have at most
/// [`GENERAL_LIMIT`] vertices.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    if g.is_tree() {
        let mut out = vec![b'T'];
        out.extend_from_slice(&tree_code(g));
        return Ok(out);
    }
    if g.order() > GENERAL_LIMIT {
        return Err(Error::SizeLimit {
            order: g.order(),
            limit: GENERAL_LIMIT,
        });
    }
    let adj = adjacency_masks(g);
    let bits = canonical_triangle(g.order(), &adj);
    let mut out = vec![b'G', g.order() as u8];
    out.extend_from_slice(&bits.to_be_bytes());
    Ok(out)
}

pub fn isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() || a.size() != b.size() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Canonical triangle bits straight from adjacency masks, for enumerators
/// that must not pay for building `Graph` values per candidate.
pub(crate) fn canonical_triangle_masks(n: usize, adj: &[u16]) -> u64 {
    canonical_triangle(n, adj)
}

fn adjacency_masks(g: &Graph) -> Vec<u16> {
    (0..g.order())
        .map(|v| g.neighbors(v).iter().fold(0u16, |m, w| m | 1 << w))
        .collect()
}

/// Rooted code: "(" + concatenation of children codes in sorted order + ")".
fn rooted_code(g: &Graph, v: usize, parent: Option<usize>) -> Vec<u8> {
    let mut child_codes: Vec<Vec<u8>> = g
        .neighbors(v)
        .iter()
        .filter(|&w| Some(w) != parent)
        .map(|w| rooted_code(g, w, Some(v)))
        .collect();
    child_codes.sort();
    let mut code = vec![b'('];
    for c in child_codes {
        code.extend_from_slice(&c);
    }
    code.push(b')');
    code
}

/// Centroid vertices of a tree (one or two).
fn centroids(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n == 1 {
        return vec![0];
    }
    // Iteratively strip leaves; the last one or two vertices standing are the
    // centroids only for paths, so instead compute subtree sizes directly.
    let root = 0;
    let t = g.root_at(root).expect("centroids on non-tree");
    let mut size = vec![1usize; n];
    let mut order: Vec<usize> = (0..n).collect();
    // Process deepest-first using BFS order reversed.
    let mut depth = vec![0usize; n];
    for (v, d) in depth.iter_mut().enumerate() {
        let mut x = v;
        while let Some(p) = t.parent(x) {
            *d += 1;
            x = p;
        }
    }
    order.sort_by_key(|&v| std::cmp::Reverse(depth[v]));
    for &v in &order {
        if let Some(p) = t.parent(v) {
            size[p] += size[v];
        }
    }
    let mut best = Vec::new();
    let mut best_weight = usize::MAX;
    for v in 0..n {
        // Weight of v = size of the largest component of g - v.
        let mut w = n - size[v];
        for c in g.neighbors(v).iter() {
            if t.parent(c) == Some(v) {
                w = w.max(size[c]);
            }
        }
        match w.cmp(&best_weight) {
            std::cmp::Ordering::Less => {
                best_weight = w;
                best = vec![v];
            }
            std::cmp::Ordering::Equal => best.push(v),
            std::cmp::Ordering::Greater => {}
        }
    }
    best
}

fn tree_code(g: &Graph) -> Vec<u8> {
    centroids(g)
        .into_iter()
        .map(|c| rooted_code(g, c, None))
        .min()
        .expect("tree has a centroid")
}

/// Max over all vertex orderings of the upper-triangle adjacency bits packed
/// column by column: bit (i, k) for i < k, most significant first.
fn canonical_triangle(n: usize, adj: &[u16]) -> u64 {
    debug_assert!(n <= GENERAL_LIMIT);
    if n <= 1 {
        return 0;
    }
    let mut chosen = [0usize; GENERAL_LIMIT];
    let mut best: u64 = 0;
    let mut have_best = false;
    search(n, adj, &mut chosen, 0, 0, 0, &mut best, &mut have_best);
    best
}

#[allow(clippy::too_many_arguments)]
fn search(
    n: usize,
    adj: &[u16],
    chosen: &mut [usize; GENERAL_LIMIT],
    depth: usize,
    used: u16,
    acc: u64,
    best: &mut u64,
    have_best: &mut bool,
) {
    if depth == n {
        if !*have_best || acc > *best {
            *best = acc;
            *have_best = true;
        }
        return;
    }
    // Column value of candidate v: adjacency to chosen[0..depth], chosen[0]
    // most significant. Only maximal columns can extend a lexicographically
    // maximal string.
    let mut cols = [0u64; GENERAL_LIMIT];
    let mut max_col = 0u64;
    for (v, slot) in cols.iter_mut().enumerate().take(n) {
        if used >> v & 1 == 1 {
            continue;
        }
        let mut col: u64 = 0;
        for &c in chosen.iter().take(depth) {
            col = col << 1 | u64::from(adj[c] >> v & 1);
        }
        *slot = col;
        max_col = max_col.max(col);
    }
    let mut taken = [0usize; GENERAL_LIMIT];
    let mut taken_len = 0;
    for v in 0..n {
        if used >> v & 1 == 1 || cols[v] != max_col {
            continue;
        }
        // Two candidates whose rows agree outside {u, v} are swapped by an
        // automorphism of the unexplored part; exploring one suffices.
        let interchangeable = taken[..taken_len].iter().any(|&u| {
            let strip = !(1u16 << u) & !(1u16 << v);
            adj[u] & strip == adj[v] & strip
        });
        if interchangeable {
            continue;
        }
        taken[taken_len] = v;
        taken_len += 1;
        chosen[depth] = v;
        search(
            n,
            adj,
            chosen,
            depth + 1,
            used | 1 << v,
            acc << depth | max_col,
            best,
            have_best,
        );
    }
}
