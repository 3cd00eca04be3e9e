//! Exact computation of the six domination parameters (plus the per-vertex
//! relaxed variant) by pruned branch and bound, with a plain enumeration
//! path that doubles as the oracle and as the complete-optimal-set engine.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::Graph;
use crate::labeling::{self, Labeling};
use rayon::prelude::*;

/// Default vertex cap for the branch-and-bound path.
pub const BRANCH_AND_BOUND_LIMIT: usize = 30;
/// Vertex cap for full enumeration (3^n / 2^n labelings).
pub const ENUMERATION_LIMIT: usize = 16;
/// Hard engine cap: adjacency lives in single machine words.
const WORD_LIMIT: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parameter {
    /// Minimum dominating set size.
    Domination,
    /// Minimum total dominating set size.
    TotalDomination,
    /// Minimum weight of a Roman {2} (Italian) dominating function.
    Roman2,
    /// Minimum weight of a total Roman dominating function.
    TotalRoman,
    /// Minimum weight of a total Roman {2} dominating function.
    TotalRoman2,
    /// Minimum double dominating set size.
    DoubleDomination,
    /// Total Roman {2} with the zero-sum requirement relaxed at one vertex.
    NearTotalRoman2 { relaxed: usize },
}

impl Parameter {
    pub const BASE: [Parameter; 6] = [
        Parameter::Domination,
        Parameter::TotalDomination,
        Parameter::Roman2,
        Parameter::TotalRoman,
        Parameter::TotalRoman2,
        Parameter::DoubleDomination,
    ];

    /// Largest label value the parameter's search alphabet uses.
    pub fn max_label(&self) -> u8 {
        match self {
            Parameter::Domination | Parameter::TotalDomination | Parameter::DoubleDomination => 1,
            _ => 2,
        }
    }

    /// Whether an isolated vertex makes the parameter infeasible.
    pub fn needs_total(&self) -> bool {
        !matches!(self, Parameter::Domination | Parameter::Roman2)
    }

    /// Membership predicate over complete labelings. Set-valued parameters
    /// additionally require the labeling to avoid the value two.
    pub fn satisfies(&self, g: &Graph, f: &Labeling) -> bool {
        match *self {
            Parameter::Domination => {
                f.twos().is_empty() && labeling::is_dominating_function(g, f)
            }
            Parameter::TotalDomination => {
                f.twos().is_empty() && labeling::is_total_dominating_function(g, f)
            }
            Parameter::DoubleDomination => {
                f.twos().is_empty() && labeling::is_double_dominating_set(g, f.positives())
            }
            Parameter::Roman2 => labeling::is_roman2(g, f),
            Parameter::TotalRoman => labeling::is_total_roman(g, f),
            Parameter::TotalRoman2 => labeling::is_total_roman2(g, f),
            Parameter::NearTotalRoman2 { relaxed } => {
                labeling::is_near_total_roman2(g, f, relaxed)
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    /// Exact minimum weight; `None` when infeasible.
    pub value: Option<usize>,
    /// Lexicographically smallest optimal labeling.
    pub witness: Option<Labeling>,
    /// Search nodes visited; identical across worker counts.
    pub nodes: u64,
    pub feasible: bool,
}

impl SolveResult {
    fn infeasible() -> SolveResult {
        SolveResult { value: None, witness: None, nodes: 0, feasible: false }
    }

    pub fn value_or_panic(&self) -> usize {
        self.value.expect("solve result is infeasible")
    }
}

/// Exact value by branch and bound under the default vertex cap.
pub fn exact(g: &Graph, kind: Parameter) -> Result<SolveResult> {
    exact_with_limit(g, kind, BRANCH_AND_BOUND_LIMIT)
}

pub fn exact_with_limit(g: &Graph, kind: Parameter, limit: usize) -> Result<SolveResult> {
    let n = g.order();
    if n > limit.min(WORD_LIMIT) {
        return Err(Error::SizeLimit { order: n, limit: limit.min(WORD_LIMIT) });
    }
    if let Parameter::NearTotalRoman2 { relaxed } = kind {
        if relaxed >= n {
            return Err(Error::VertexOutOfRange { vertex: relaxed, order: n });
        }
    }
    if n == 0 {
        let f = Labeling::new(vec![]).unwrap();
        return Ok(SolveResult { value: Some(0), witness: Some(f), nodes: 0, feasible: true });
    }
    if kind.needs_total() && g.has_isolated_vertex() {
        return Ok(SolveResult::infeasible());
    }

    let engine = Engine::new(g, kind);
    let start = engine.greedy_incumbent(g);
    let max = kind.max_label();

    // Independent search per root value with a shared *initial* incumbent
    // only, so value, witness and node counts do not depend on how the
    // branches are scheduled.
    let branches: Vec<(usize, u64)> = (0..=max)
        .into_par_iter()
        .map(|root_value| {
            let mut state = SearchState::new(n);
            let mut nodes = 0u64;
            let mut best = start;
            engine.assign(&mut state, engine.order[0], root_value);
            engine.dfs_value(&mut state, 1, &mut best, &mut nodes);
            engine.unassign(&mut state, engine.order[0], root_value);
            (best, nodes)
        })
        .collect();

    let value = branches.iter().map(|&(b, _)| b).min().unwrap().min(start);
    let mut nodes: u64 = branches.iter().map(|&(_, k)| k).sum();

    // Second pass: lexicographically smallest labeling of exactly that weight.
    let witness = engine
        .lex_witness(value, &mut nodes)
        .expect("a labeling matching the proven optimum exists");
    assert!(
        kind.satisfies(g, &witness) && witness.weight() == value,
        "solver self-check failed"
    );
    Ok(SolveResult { value: Some(value), witness: Some(witness), nodes, feasible: true })
}

/// Exact value by plain enumeration of every labeling; the oracle path.
pub fn exact_by_enumeration(g: &Graph, kind: Parameter) -> Result<SolveResult> {
    exact_by_enumeration_with_limit(g, kind, ENUMERATION_LIMIT)
}

pub fn exact_by_enumeration_with_limit(
    g: &Graph,
    kind: Parameter,
    limit: usize,
) -> Result<SolveResult> {
    let n = g.order();
    if n > limit {
        return Err(Error::SizeLimit { order: n, limit });
    }
    let mut best: Option<(usize, Labeling)> = None;
    let mut nodes = 0u64;
    enumerate_labelings(n, kind.max_label(), |values, w| {
        nodes += 1;
        if best.as_ref().is_some_and(|(b, _)| w >= *b) {
            return;
        }
        let f = Labeling::new(values.to_vec()).unwrap();
        if kind.satisfies(g, &f) {
            best = Some((w, f));
        }
    });
    match best {
        None => Ok(SolveResult::infeasible()),
        Some((w, f)) => Ok(SolveResult {
            value: Some(w),
            witness: Some(f),
            nodes,
            feasible: true,
        }),
    }
}

/// Every optimal labeling, complete and lexicographically sorted. Errors on
/// infeasible input so that downstream set computations cannot silently
/// quantify over an empty optimum set.
pub fn all_optimal(g: &Graph, kind: Parameter) -> Result<Vec<Labeling>> {
    all_optimal_with_limit(g, kind, ENUMERATION_LIMIT)
}

pub fn all_optimal_with_limit(g: &Graph, kind: Parameter, limit: usize) -> Result<Vec<Labeling>> {
    let n = g.order();
    if n > limit {
        return Err(Error::SizeLimit { order: n, limit });
    }
    let mut best = usize::MAX;
    let mut out: Vec<Labeling> = Vec::new();
    enumerate_labelings(n, kind.max_label(), |values, w| {
        if w > best {
            return;
        }
        let f = Labeling::new(values.to_vec()).unwrap();
        if !kind.satisfies(g, &f) {
            return;
        }
        if w < best {
            best = w;
            out.clear();
        }
        out.push(f);
    });
    if out.is_empty() {
        return Err(Error::Infeasible);
    }
    Ok(out)
}

/// Visits `(labels, weight)` in lexicographic order, vertex 0 most
/// significant, maintaining the weight incrementally.
fn enumerate_labelings<F: FnMut(&[u8], usize)>(n: usize, max_label: u8, mut visit: F) {
    let mut values = vec![0u8; n];
    let mut weight = 0usize;
    loop {
        visit(&values, weight);
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if values[i] < max_label {
                values[i] += 1;
                weight += 1;
                break;
            }
            weight -= values[i] as usize;
            values[i] = 0;
        }
    }
}

/// Closed forms on paths and cycles for the two parameters that coincide on
/// maximum-degree-two graphs.
pub fn closed_form(kind: Parameter, family: &FamilySpec) -> Result<usize> {
    if !matches!(kind, Parameter::TotalRoman2 | Parameter::DoubleDomination) {
        return Err(Error::BadFamilyParameters(
            "closed forms cover only the total Roman {2} and double domination numbers".into(),
        ));
    }
    match *family {
        FamilySpec::Path(n) => {
            if n < 2 {
                return Err(Error::BadFamilyParameters("path closed form needs n >= 2".into()));
            }
            let base = 2 * n.div_ceil(3);
            Ok(if n % 3 == 0 { base + 1 } else { base })
        }
        FamilySpec::Cycle(n) => {
            if n < 3 {
                return Err(Error::BadFamilyParameters("cycle closed form needs n >= 3".into()));
            }
            Ok((2 * n).div_ceil(3))
        }
        _ => Err(Error::BadFamilyParameters(
            "closed forms cover only paths and cycles".into(),
        )),
    }
}

/// Vertex sets defined by quantifying over complete optimum sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptimalLabelClasses {
    /// Supports labeled two by at least one optimal total Roman labeling.
    pub supports_two_in_some_tr: VertexSet,
    /// Leaves labeled one by at least one optimal total Roman labeling.
    pub leaves_one_in_some_tr: VertexSet,
    /// Supports labeled one by every optimal total Roman {2} labeling.
    pub supports_one_in_all_tr2: VertexSet,
    /// Vertices labeled zero by every optimal total Roman {2} labeling.
    pub zero_in_all_tr2: VertexSet,
}

pub fn optimal_label_classes(g: &Graph) -> Result<OptimalLabelClasses> {
    let n = g.order();
    let classes = g.vertex_classes();
    let tr = all_optimal(g, Parameter::TotalRoman)?;
    let tr2 = all_optimal(g, Parameter::TotalRoman2)?;
    let supports_two_in_some_tr = VertexSet::from_iter(
        n,
        classes
            .supports
            .iter()
            .filter(|&v| tr.iter().any(|f| f.value(v) == 2)),
    );
    let leaves_one_in_some_tr = VertexSet::from_iter(
        n,
        classes
            .leaves
            .iter()
            .filter(|&v| tr.iter().any(|f| f.value(v) == 1)),
    );
    let supports_one_in_all_tr2 = VertexSet::from_iter(
        n,
        classes
            .supports
            .iter()
            .filter(|&v| tr2.iter().all(|f| f.value(v) == 1)),
    );
    let zero_in_all_tr2 =
        VertexSet::from_iter(n, (0..n).filter(|&v| tr2.iter().all(|f| f.value(v) == 0)));
    Ok(OptimalLabelClasses {
        supports_two_in_some_tr,
        leaves_one_in_some_tr,
        supports_one_in_all_tr2,
        zero_in_all_tr2,
    })
}

/// Vertices whose single-vertex relaxation does not lower the optimum.
pub fn near_stable_vertices(g: &Graph) -> Result<VertexSet> {
    let base = exact(g, Parameter::TotalRoman2)?;
    let Some(value) = base.value else {
        return Err(Error::Infeasible);
    };
    let mut out = VertexSet::empty(g.order());
    for v in 0..g.order() {
        let relaxed = exact(g, Parameter::NearTotalRoman2 { relaxed: v })?;
        if relaxed.value == Some(value) {
            out.insert(v);
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Branch-and-bound engine
// ---------------------------------------------------------------------------

const UNASSIGNED: u8 = 3;

struct Engine<'a> {
    n: usize,
    kind: Parameter,
    max_label: u8,
    adj: Vec<u64>,
    closed: Vec<u64>,
    /// Branch order: descending degree, index as tie-break.
    order: Vec<usize>,
    /// Demand scan order: ascending degree, so tight neighborhoods are packed
    /// first by the disjoint-coverage bound.
    scan_order: Vec<usize>,
    /// Δ(G) + 1: cap on how many demands one weight unit can serve.
    unit_cap: usize,
    graph: &'a Graph,
}

#[derive(Clone)]
struct SearchState {
    label: Vec<u8>,
    assigned: u64,
    pos: u64,
    two: u64,
    weight: usize,
}

impl SearchState {
    fn new(n: usize) -> SearchState {
        SearchState { label: vec![UNASSIGNED; n], assigned: 0, pos: 0, two: 0, weight: 0 }
    }
}

impl<'a> Engine<'a> {
    fn new(g: &'a Graph, kind: Parameter) -> Engine<'a> {
        let n = g.order();
        let adj: Vec<u64> = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u64, |m, w| m | 1 << w))
            .collect();
        let closed: Vec<u64> = (0..n).map(|v| adj[v] | 1 << v).collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let mut scan_order: Vec<usize> = (0..n).collect();
        scan_order.sort_by_key(|&v| (g.degree(v), v));
        let unit_cap = (0..n).map(|v| g.degree(v)).max().unwrap_or(0) + 1;
        Engine { n, kind, max_label: kind.max_label(), adj, closed, order, scan_order, unit_cap, graph: g }
    }

    #[inline]
    fn assign(&self, st: &mut SearchState, v: usize, value: u8) {
        st.label[v] = value;
        st.assigned |= 1 << v;
        if value >= 1 {
            st.pos |= 1 << v;
        }
        if value == 2 {
            st.two |= 1 << v;
        }
        st.weight += value as usize;
    }

    #[inline]
    fn unassign(&self, st: &mut SearchState, v: usize, value: u8) {
        st.label[v] = UNASSIGNED;
        st.assigned &= !(1 << v);
        st.pos &= !(1 << v);
        st.two &= !(1 << v);
        st.weight -= value as usize;
    }

    /// Residual demand of one vertex: (units still required, coverage mask of
    /// unassigned vertices able to supply them), or `None` for no demand.
    #[inline]
    fn demand(&self, st: &SearchState, v: usize) -> Option<(usize, u64)> {
        let open = self.adj[v];
        match self.kind {
            Parameter::Domination => {
                if self.closed[v] & st.pos != 0 {
                    None
                } else {
                    Some((1, self.closed[v] & !st.assigned))
                }
            }
            Parameter::TotalDomination => {
                if open & st.pos != 0 {
                    None
                } else {
                    Some((1, open & !st.assigned))
                }
            }
            Parameter::DoubleDomination => {
                let have = (self.closed[v] & st.pos).count_ones() as usize;
                if have >= 2 {
                    None
                } else {
                    Some((2 - have, self.closed[v] & !st.assigned))
                }
            }
            Parameter::Roman2 => {
                if st.label[v] != 0 {
                    return None;
                }
                let s = (open & st.pos).count_ones() + (open & st.two).count_ones();
                if s >= 2 {
                    None
                } else {
                    Some((2 - s as usize, open & !st.assigned))
                }
            }
            Parameter::TotalRoman => {
                if st.label[v] == 0 {
                    // A future two-neighbor also restores totality here.
                    if open & st.two != 0 {
                        None
                    } else {
                        Some((2, open & !st.assigned))
                    }
                } else if open & st.pos != 0 {
                    None
                } else {
                    Some((1, open & !st.assigned))
                }
            }
            Parameter::TotalRoman2 | Parameter::NearTotalRoman2 { .. } => {
                if st.label[v] == 0 {
                    let need = match self.kind {
                        Parameter::NearTotalRoman2 { relaxed } if relaxed == v => 1,
                        _ => 2,
                    };
                    let s = ((open & st.pos).count_ones() + (open & st.two).count_ones()) as usize;
                    if s >= need {
                        None
                    } else {
                        Some((need - s, open & !st.assigned))
                    }
                } else if open & st.pos != 0 {
                    None
                } else {
                    Some((1, open & !st.assigned))
                }
            }
        }
    }

    /// Lower bound on the weight still to be added, or `None` when some
    /// residual demand can no longer be met.
    fn bound(&self, st: &SearchState) -> Option<usize> {
        let cap = self.max_label as usize;
        let mut total = 0usize;
        let mut packed = 0usize;
        let mut packed_mask = 0u64;
        for &v in &self.scan_order {
            let Some((d, cov)) = self.demand(st, v) else { continue };
            let cov_n = cov.count_ones() as usize;
            if d > cap * cov_n {
                return None;
            }
            total += d;
            if cov & packed_mask == 0 {
                packed += d;
                packed_mask |= cov;
            }
        }
        Some(packed.max(total.div_ceil(self.unit_cap)))
    }

    fn dfs_value(&self, st: &mut SearchState, depth: usize, best: &mut usize, nodes: &mut u64) {
        *nodes += 1;
        match self.bound(st) {
            None => return,
            Some(lb) => {
                if st.weight + lb >= *best {
                    return;
                }
            }
        }
        if depth == self.n {
            debug_assert!(self
                .kind
                .satisfies(self.graph, &Labeling::new(st.label.clone()).unwrap()));
            *best = st.weight;
            return;
        }
        let v = self.order[depth];
        for value in 0..=self.max_label {
            self.assign(st, v, value);
            self.dfs_value(st, depth + 1, best, nodes);
            self.unassign(st, v, value);
        }
    }

    /// First complete labeling of weight `target` in lexicographic vertex
    /// order; exists whenever `target` is the proven optimum.
    fn lex_witness(&self, target: usize, nodes: &mut u64) -> Option<Labeling> {
        let mut st = SearchState::new(self.n);
        self.dfs_witness(&mut st, 0, target, nodes)
    }

    fn dfs_witness(
        &self,
        st: &mut SearchState,
        depth: usize,
        target: usize,
        nodes: &mut u64,
    ) -> Option<Labeling> {
        *nodes += 1;
        let lb = self.bound(st)?;
        if st.weight + lb > target {
            return None;
        }
        if depth == self.n {
            debug_assert_eq!(st.weight, target);
            return Some(Labeling::new(st.label.clone()).unwrap());
        }
        for value in 0..=self.max_label {
            self.assign(st, depth, value);
            if let Some(f) = self.dfs_witness(st, depth + 1, target, nodes) {
                return Some(f);
            }
            self.unassign(st, depth, value);
        }
        None
    }

    /// Deterministic feasible labeling used as the initial incumbent: start
    /// from all ones, swap strong supports to two with their leaves zeroed,
    /// then greedily lower every label that keeps the predicate satisfied.
    fn greedy_incumbent(&self, g: &Graph) -> usize {
        let n = self.n;
        let mut values = vec![1u8; n];
        let check = |values: &[u8]| {
            self.kind
                .satisfies(g, &Labeling::new(values.to_vec()).unwrap())
        };
        debug_assert!(check(&values), "all-ones must be feasible here");
        if self.max_label == 2 {
            let classes = g.vertex_classes();
            for v in classes.strong_supports.iter() {
                let saved = values.clone();
                values[v] = 2;
                for leaf in g.neighbors(v).intersection(&classes.leaves).iter() {
                    values[leaf] = 0;
                }
                if !check(&values) {
                    values = saved;
                }
            }
        }
        for _ in 0..2 {
            for v in 0..n {
                while values[v] > 0 {
                    values[v] -= 1;
                    if !check(&values) {
                        values[v] += 1;
                        break;
                    }
                }
            }
        }
        values.iter().map(|&x| x as usize).sum()
    }
}
