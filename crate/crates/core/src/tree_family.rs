//! Constructive tree family: grow trees from a single edge by the seven
//! guarded attachment operations, and cross-check the resulting family
//! against the equality of the total Roman {2} and total Roman numbers.

use crate::bitset::VertexSet;
use crate::canon;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexClasses};
use crate::solver::{self, OptimalLabelClasses, Parameter};
use serde::Serialize;
use std::collections::HashMap;

/// Generation cap: every candidate step enumerates complete optimum sets on
/// trees of this order.
pub const GENERATE_LIMIT: usize = 14;
/// Characterization checks solve both parameters exactly.
pub const CHECK_LIMIT: usize = 12;

/// One growth step. `at` always names a vertex of the tree being grown.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "op", rename_all = "kebab-case")]
pub enum GrowthOp {
    /// Attach a fresh hub-of-paths tree (hub joined to one support of each
    /// of `copies` four-vertex paths) by an edge from its hub to `at`.
    AttachP4Hub { copies: usize, at: usize },
    /// Pendant vertex at a support that some optimal total Roman labeling
    /// assigns two.
    PendantAtTrTwoSupport { at: usize },
    /// Pendant vertex at a support that every optimal total Roman {2}
    /// labeling assigns one.
    PendantAtForcedOneSupport { at: usize },
    /// Path on two fresh vertices joined to a support that has an adjacent
    /// support.
    Path2AtAdjacentSupport { at: usize },
    /// Two pendant children at a leaf that some optimal total Roman labeling
    /// assigns one (the cherry's center is identified with that leaf).
    CherryAtTrOneLeaf { at: usize },
    /// Path on two fresh vertices joined to a near-stable leaf or
    /// semi-support.
    Path2AtNearStable { at: usize },
    /// Path on three fresh vertices joined by an end to a vertex labeled
    /// zero by every optimal total Roman {2} labeling.
    Path3AtForcedZero { at: usize },
}

/// Everything the operation guards quantify over, computed on one tree.
#[derive(Debug, Clone)]
pub struct OpContext {
    pub classes: VertexClasses,
    pub label_classes: OptimalLabelClasses,
    pub near_stable: VertexSet,
}

pub fn op_context(tree: &Graph) -> Result<OpContext> {
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    Ok(OpContext {
        classes: tree.vertex_classes(),
        label_classes: solver::optimal_label_classes(tree)?,
        near_stable: solver::near_stable_vertices(tree)?,
    })
}

/// Applies one growth operation after verifying its guard on `tree`.
pub fn apply_op(tree: &Graph, op: GrowthOp) -> Result<Graph> {
    let ctx = op_context(tree)?;
    apply_op_with_context(tree, &ctx, op)
}

pub fn apply_op_with_context(tree: &Graph, ctx: &OpContext, op: GrowthOp) -> Result<Graph> {
    let n = tree.order();
    let member = |set: &VertexSet, at: usize, what: &str| -> Result<()> {
        if at < n && set.contains(at) {
            Ok(())
        } else {
            Err(Error::PreconditionViolated(format!(
                "vertex {at} is not in the {what} set {:?}",
                set.to_vec()
            )))
        }
    };
    match op {
        GrowthOp::AttachP4Hub { copies, at } => {
            if copies < 1 {
                return Err(Error::PreconditionViolated("need at least one path copy".into()));
            }
            if at >= n {
                return Err(Error::VertexOutOfRange { vertex: at, order: n });
            }
            let hub = n;
            let mut edges = vec![(at, hub)];
            for i in 0..copies {
                let b = n + 1 + 4 * i;
                edges.extend([(hub, b), (b, b + 1), (b, b + 2), (b + 2, b + 3)]);
            }
            tree.extend_with(4 * copies + 1, &edges)
        }
        GrowthOp::PendantAtTrTwoSupport { at } => {
            member(&ctx.label_classes.supports_two_in_some_tr, at, "two-in-some-TR support")?;
            tree.extend_with(1, &[(at, n)])
        }
        GrowthOp::PendantAtForcedOneSupport { at } => {
            member(&ctx.label_classes.supports_one_in_all_tr2, at, "forced-one support")?;
            tree.extend_with(1, &[(at, n)])
        }
        GrowthOp::Path2AtAdjacentSupport { at } => {
            member(&ctx.classes.adjacent_supports, at, "adjacent-support")?;
            tree.extend_with(2, &[(at, n), (n, n + 1)])
        }
        GrowthOp::CherryAtTrOneLeaf { at } => {
            member(&ctx.label_classes.leaves_one_in_some_tr, at, "one-in-some-TR leaf")?;
            tree.extend_with(2, &[(at, n), (at, n + 1)])
        }
        GrowthOp::Path2AtNearStable { at } => {
            let eligible = ctx.classes.leaves.union(&ctx.classes.semi_supports);
            member(&eligible, at, "leaf-or-semi-support")?;
            member(&ctx.near_stable, at, "near-stable")?;
            tree.extend_with(2, &[(at, n), (n, n + 1)])
        }
        GrowthOp::Path3AtForcedZero { at } => {
            member(&ctx.label_classes.zero_in_all_tr2, at, "forced-zero")?;
            tree.extend_with(3, &[(at, n), (n, n + 1), (n + 1, n + 2)])
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CertStep {
    #[serde(flatten)]
    pub op: GrowthOp,
    /// Canonical form of the tree after this step, hex-encoded.
    #[serde(serialize_with = "hex_bytes")]
    pub canonical: Vec<u8>,
}

fn hex_bytes<S: serde::Serializer>(bytes: &[u8], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&bytes.iter().map(|b| format!("{b:02x}")).collect::<String>())
}

#[derive(Debug, Clone)]
pub struct FamilyMember {
    pub tree: Graph,
    /// Steps from the two-vertex path to this tree.
    pub certificate: Vec<CertStep>,
}

#[derive(Debug)]
pub struct FamilyGeneration {
    max_order: usize,
    members: Vec<FamilyMember>,
    index: HashMap<Vec<u8>, usize>,
}

impl FamilyGeneration {
    pub fn max_order(&self) -> usize {
        self.max_order
    }

    /// Members sorted by (order, canonical form).
    pub fn members(&self) -> &[FamilyMember] {
        &self.members
    }

    pub fn contains(&self, tree: &Graph) -> Result<bool> {
        Ok(self.find(tree)?.is_some())
    }

    pub fn find(&self, tree: &Graph) -> Result<Option<&FamilyMember>> {
        if tree.order() > self.max_order {
            return Err(Error::SizeLimit { order: tree.order(), limit: self.max_order });
        }
        Ok(self.index.get(&canon::canonical_form(tree)?).map(|&i| &self.members[i]))
    }

    pub fn canonical_forms_of_order(&self, order: usize) -> Vec<Vec<u8>> {
        let mut forms: Vec<Vec<u8>> = self
            .members
            .iter()
            .filter(|m| m.tree.order() == order)
            .map(|m| canon::canonical_form(&m.tree).expect("members are trees"))
            .collect();
        forms.sort();
        forms
    }
}

/// Breadth-first closure of the seven operations starting from the
/// two-vertex path, deduplicated by canonical form.
pub fn generate_family(max_order: usize) -> Result<FamilyGeneration> {
    if max_order > GENERATE_LIMIT {
        return Err(Error::SizeLimit { order: max_order, limit: GENERATE_LIMIT });
    }
    if max_order < 2 {
        return Err(Error::BadFamilyParameters("family generation needs max order >= 2".into()));
    }
    let base = Graph::new(2, &[(0, 1)]).unwrap();
    let mut members = vec![FamilyMember { tree: base.clone(), certificate: vec![] }];
    let mut index = HashMap::new();
    index.insert(canon::canonical_form(&base)?, 0usize);

    let mut cursor = 0;
    while cursor < members.len() {
        let tree = members[cursor].tree.clone();
        let cert = members[cursor].certificate.clone();
        cursor += 1;
        let n = tree.order();
        if n + 1 > max_order {
            continue;
        }
        let ctx = op_context(&tree)?;
        let mut ops: Vec<GrowthOp> = Vec::new();
        let mut copies = 1;
        while n + 4 * copies < max_order {
            for at in 0..n {
                ops.push(GrowthOp::AttachP4Hub { copies, at });
            }
            copies += 1;
        }
        for at in ctx.label_classes.supports_two_in_some_tr.iter() {
            ops.push(GrowthOp::PendantAtTrTwoSupport { at });
        }
        for at in ctx.label_classes.supports_one_in_all_tr2.iter() {
            ops.push(GrowthOp::PendantAtForcedOneSupport { at });
        }
        if n + 2 <= max_order {
            for at in ctx.classes.adjacent_supports.iter() {
                ops.push(GrowthOp::Path2AtAdjacentSupport { at });
            }
            for at in ctx.label_classes.leaves_one_in_some_tr.iter() {
                ops.push(GrowthOp::CherryAtTrOneLeaf { at });
            }
            let eligible = ctx.classes.leaves.union(&ctx.classes.semi_supports);
            for at in eligible.intersection(&ctx.near_stable).iter() {
                ops.push(GrowthOp::Path2AtNearStable { at });
            }
        }
        if n + 3 <= max_order {
            for at in ctx.label_classes.zero_in_all_tr2.iter() {
                ops.push(GrowthOp::Path3AtForcedZero { at });
            }
        }
        for op in ops {
            let grown = apply_op_with_context(&tree, &ctx, op)?;
            if grown.order() > max_order {
                continue;
            }
            let form = canon::canonical_form(&grown)?;
            if index.contains_key(&form) {
                continue;
            }
            let mut certificate = cert.clone();
            certificate.push(CertStep { op, canonical: form.clone() });
            index.insert(form, members.len());
            members.push(FamilyMember { tree: grown, certificate });
        }
    }

    // Deterministic presentation order.
    let mut order: Vec<usize> = (0..members.len()).collect();
    let forms: Vec<Vec<u8>> = members
        .iter()
        .map(|m| canon::canonical_form(&m.tree).unwrap())
        .collect();
    order.sort_by(|&a, &b| {
        (members[a].tree.order(), &forms[a]).cmp(&(members[b].tree.order(), &forms[b]))
    });
    let members: Vec<FamilyMember> = order.into_iter().map(|i| members[i].clone()).collect();
    let index = members
        .iter()
        .enumerate()
        .map(|(i, m)| (canon::canonical_form(&m.tree).unwrap(), i))
        .collect();
    Ok(FamilyGeneration { max_order, members, index })
}

/// Rebuilds the tree from its certificate, re-verifying every guard and the
/// canonical form recorded at each step.
pub fn replay_certificate(certificate: &[CertStep]) -> Result<Graph> {
    let mut tree = Graph::new(2, &[(0, 1)]).unwrap();
    for step in certificate {
        tree = apply_op(&tree, step.op)?;
        let form = canon::canonical_form(&tree)?;
        if form != step.canonical {
            return Err(Error::PreconditionViolated(
                "certificate replay diverged from recorded canonical form".into(),
            ));
        }
    }
    Ok(tree)
}

#[derive(Debug, Clone, Serialize)]
pub struct CharacterizationReport {
    /// Total Roman {2} equals total Roman on this tree.
    pub weights_equal: bool,
    /// The tree is produced by the growth operations.
    pub in_family: bool,
    pub total_roman2: usize,
    pub total_roman: usize,
}

impl CharacterizationReport {
    pub fn agrees(&self) -> bool {
        self.weights_equal == self.in_family
    }
}

/// Computes both sides of the tree characterization independently.
pub fn characterization_check(tree: &Graph) -> Result<CharacterizationReport> {
    let gen = generate_family(tree.order().max(2))?;
    characterization_check_with(tree, &gen)
}

pub fn characterization_check_with(
    tree: &Graph,
    gen: &FamilyGeneration,
) -> Result<CharacterizationReport> {
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    if tree.order() < 2 || tree.order() > CHECK_LIMIT {
        return Err(Error::SizeLimit { order: tree.order(), limit: CHECK_LIMIT });
    }
    let tr2 = solver::exact(tree, Parameter::TotalRoman2)?.value_or_panic();
    let tr = solver::exact(tree, Parameter::TotalRoman)?.value_or_panic();
    Ok(CharacterizationReport {
        weights_equal: tr2 == tr,
        in_family: gen.contains(tree)?,
        total_roman2: tr2,
        total_roman: tr,
    })
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct DoubleTotalCheck {
    /// Total Roman {2} equals twice the total domination number.
    pub twice_total: bool,
    /// Total Roman {2} equals total Roman.
    pub tr_equal: bool,
    /// Domination equals total domination.
    pub gamma_equal: bool,
}

impl DoubleTotalCheck {
    /// The characterization ties the three flags into a biconditional.
    pub fn holds(&self) -> bool {
        self.twice_total == (self.tr_equal && self.gamma_equal)
    }
}

pub fn double_total_check(tree: &Graph) -> Result<DoubleTotalCheck> {
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    if tree.order() > CHECK_LIMIT {
        return Err(Error::SizeLimit { order: tree.order(), limit: CHECK_LIMIT });
    }
    let tr2 = solver::exact(tree, Parameter::TotalRoman2)?.value_or_panic();
    let tr = solver::exact(tree, Parameter::TotalRoman)?.value_or_panic();
    let t = solver::exact(tree, Parameter::TotalDomination)?.value_or_panic();
    let gamma = solver::exact(tree, Parameter::Domination)?.value_or_panic();
    Ok(DoubleTotalCheck {
        twice_total: tr2 == 2 * t,
        tr_equal: tr2 == tr,
        gamma_equal: t == gamma,
    })
}
