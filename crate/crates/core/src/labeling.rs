//! `{0,1,2}`-valued vertex labelings and the membership predicates of the
//! domination variants.
//!
//! A labeling is a value type tied to a fixed graph order. The partition into
//! zero/one/two classes is precomputed at construction since every predicate
//! and solver query walks it.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Labeling {
    values: Vec<u8>,
    zeros: VertexSet,
    positives: VertexSet,
    twos: VertexSet,
}

impl std::fmt::Debug for Labeling {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Labeling({:?})", self.values)
    }
}

impl Labeling {
    pub fn new(values: Vec<u8>) -> Result<Labeling> {
        if let Some(&bad) = values.iter().find(|&&x| x > 2) {
            return Err(Error::InvalidGraph(format!("label {bad} outside {{0,1,2}}")));
        }
        let n = values.len();
        let mut zeros = VertexSet::empty(n);
        let mut positives = VertexSet::empty(n);
        let mut twos = VertexSet::empty(n);
        for (v, &x) in values.iter().enumerate() {
            match x {
                0 => zeros.insert(v),
                1 => positives.insert(v),
                _ => {
                    positives.insert(v);
                    twos.insert(v);
                }
            }
        }
        Ok(Labeling { values, zeros, positives, twos })
    }

    pub fn constant(n: usize, value: u8) -> Labeling {
        Labeling::new(vec![value; n]).expect("constant label in range")
    }

    pub fn indicator(n: usize, set: &VertexSet) -> Labeling {
        Labeling::new((0..n).map(|v| u8::from(set.contains(v))).collect()).unwrap()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    #[inline]
    pub fn value(&self, v: usize) -> u8 {
        self.values[v]
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    /// V_0: vertices labeled zero.
    pub fn zeros(&self) -> &VertexSet {
        &self.zeros
    }

    /// V_1 ∪ V_2: vertices with positive label.
    pub fn positives(&self) -> &VertexSet {
        &self.positives
    }

    /// V_2: vertices labeled two.
    pub fn twos(&self) -> &VertexSet {
        &self.twos
    }

    /// V_1: vertices labeled one.
    pub fn ones(&self) -> VertexSet {
        self.positives.difference(&self.twos)
    }

    pub fn weight(&self) -> usize {
        self.values.iter().map(|&x| x as usize).sum()
    }

    pub fn weight_on(&self, s: &VertexSet) -> usize {
        s.iter().map(|v| self.values[v] as usize).sum()
    }

    /// Sum of labels over the open neighborhood of v.
    #[inline]
    pub fn neighborhood_weight(&self, g: &Graph, v: usize) -> usize {
        let nbrs = g.neighbors(v);
        nbrs.intersection_len(&self.positives) + nbrs.intersection_len(&self.twos)
    }

    /// Zero-labeled vertices that have a two-labeled neighbor (V_{0,2}).
    pub fn zeros_near_two(&self, g: &Graph) -> VertexSet {
        VertexSet::from_iter(
            self.len(),
            self.zeros.iter().filter(|&v| g.neighbors(v).intersects(&self.twos)),
        )
    }

    /// Zero-labeled vertices with no two-labeled neighbor (V_{0,1}).
    pub fn zeros_far_from_two(&self, g: &Graph) -> VertexSet {
        self.zeros.difference(&self.zeros_near_two(g))
    }
}

fn check_len(g: &Graph, f: &Labeling) {
    assert_eq!(g.order(), f.len(), "labeling length must match graph order");
}

/// Every zero vertex has a positive neighbor.
pub fn is_dominating_function(g: &Graph, f: &Labeling) -> bool {
    check_len(g, f);
    f.zeros().iter().all(|v| g.neighbors(v).intersects(f.positives()))
}

/// Every vertex has a positive neighbor.
pub fn is_total_dominating_function(g: &Graph, f: &Labeling) -> bool {
    check_len(g, f);
    (0..g.order()).all(|v| g.neighbors(v).intersects(f.positives()))
}

/// Every zero vertex collects neighbor labels summing to at least two.
pub fn is_roman2(g: &Graph, f: &Labeling) -> bool {
    check_len(g, f);
    f.zeros().iter().all(|v| f.neighborhood_weight(g, v) >= 2)
}

/// Every zero vertex has a two-labeled neighbor and the positive vertices
/// induce no isolated vertex.
pub fn is_total_roman(g: &Graph, f: &Labeling) -> bool {
    check_len(g, f);
    f.zeros().iter().all(|v| g.neighbors(v).intersects(f.twos()))
        && positives_non_isolated(g, f)
}

/// Roman {2} condition plus totality of the positive set.
pub fn is_total_roman2(g: &Graph, f: &Labeling) -> bool {
    is_roman2(g, f) && positives_non_isolated(g, f)
}

fn positives_non_isolated(g: &Graph, f: &Labeling) -> bool {
    f.positives().iter().all(|v| g.neighbors(v).intersects(f.positives()))
}

/// Every vertex of the graph has at least two closed neighbors in `s`.
pub fn is_double_dominating_set(g: &Graph, s: &VertexSet) -> bool {
    (0..g.order()).all(|v| {
        let open = g.neighbors(v).intersection_len(s);
        open + usize::from(s.contains(v)) >= 2
    })
}

/// Total Roman {2} condition relaxed at the single vertex `relaxed`: if that
/// vertex is labeled zero its neighborhood only needs weight one.
pub fn is_near_total_roman2(g: &Graph, f: &Labeling, relaxed: usize) -> bool {
    check_len(g, f);
    assert!(relaxed < g.order());
    f.zeros().iter().all(|v| {
        let need = if v == relaxed { 1 } else { 2 };
        f.neighborhood_weight(g, v) >= need
    }) && positives_non_isolated(g, f)
}

/// (pn, epn): vertices whose only neighbor inside `s` is `v`, and the subset
/// of those lying outside `s`.
pub fn private_neighbors(g: &Graph, v: usize, s: &VertexSet) -> Result<(VertexSet, VertexSet)> {
    if !s.contains(v) {
        return Err(Error::PreconditionViolated(format!(
            "vertex {v} is not a member of the reference set"
        )));
    }
    let n = g.order();
    let mut pn = VertexSet::empty(n);
    for u in 0..n {
        let inter = g.neighbors(u).intersection(s);
        if inter.len() == 1 && inter.contains(v) {
            pn.insert(u);
        }
    }
    let epn = pn.difference(s);
    Ok((pn, epn))
}
