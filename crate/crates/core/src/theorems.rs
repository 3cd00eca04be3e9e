//! The bound and characterization catalog as machine-checkable predicates
//! over concrete graphs. The suite is a falsification harness: every verdict
//! carries the quantities entering the statement, and characterization
//! checks compute both sides through disjoint code paths.

use crate::error::{Error, Result};
use crate::families;
use crate::graph::{Graph, Hamiltonicity};
use crate::solver::{self, Parameter, SolveResult};
use serde::Serialize;
use std::collections::HashMap;

pub const HAMILTONIAN_LIMIT: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckId {
    /// TotalDomination <= TotalRoman2 <= TotalRoman <= 2 TotalDomination.
    ChainI,
    /// Roman2 <= TotalRoman2 <= DoubleDomination.
    ChainII,
    /// TotalRoman2 = TotalDomination iff DoubleDomination = TotalDomination.
    EquivT,
    /// TotalRoman2 <= TotalDomination + Domination.
    SumTg,
    /// TotalRoman2 <= 3 Domination.
    ThreeG,
    /// TotalRoman2 = 2 TotalDomination iff (TotalRoman2 = TotalRoman and
    /// TotalDomination = Domination).
    TwoGtEquiv,
    /// 2 Domination <= TotalRoman.
    Tr2gLower,
    /// TotalRoman2 <= Roman2 + Domination, with the 2x and 2x-1 corollaries.
    SumR2g,
    /// Min degree 2 implies TotalRoman2 <= floor((TotalDomination + n) / 2).
    HalfN,
    /// Min degree 3 implies TotalRoman2 <= 3n/4.
    ThreeQuarter,
    /// Hamiltonian cycle implies TotalRoman2 <= 2 ceil(n/3); a Hamiltonian
    /// path implies one more.
    Hamilton,
    /// TotalRoman2 = 2 iff two universal vertices exist.
    Eq2,
    /// TotalRoman2 = 3 iff a weight-3 spanning witness exists and at most
    /// one vertex is universal.
    Eq3,
    /// Connected: TotalRoman2 = n iff the graph is the 3-path or every
    /// vertex is a leaf or support with no strong support.
    EqN,
    /// TotalRoman2 = TotalRoman iff some optimal total Roman {2} labeling
    /// leaves no zero vertex without a two-neighbor.
    Vo1Equiv,
    /// TotalRoman2 of the pendant-stars gadget equals Domination + 3n.
    ReductionId,
}

impl CheckId {
    pub const ALL: [CheckId; 16] = [
        CheckId::ChainI,
        CheckId::ChainII,
        CheckId::EquivT,
        CheckId::SumTg,
        CheckId::ThreeG,
        CheckId::TwoGtEquiv,
        CheckId::Tr2gLower,
        CheckId::SumR2g,
        CheckId::HalfN,
        CheckId::ThreeQuarter,
        CheckId::Hamilton,
        CheckId::Eq2,
        CheckId::Eq3,
        CheckId::EqN,
        CheckId::Vo1Equiv,
        CheckId::ReductionId,
    ];

    /// The inequality/property subset that applies to arbitrary inputs
    /// without building gadgets or enumerating spanning witnesses.
    pub const PROPERTY_SUITE: [CheckId; 12] = [
        CheckId::ChainI,
        CheckId::ChainII,
        CheckId::EquivT,
        CheckId::SumTg,
        CheckId::ThreeG,
        CheckId::TwoGtEquiv,
        CheckId::Tr2gLower,
        CheckId::SumR2g,
        CheckId::HalfN,
        CheckId::ThreeQuarter,
        CheckId::Hamilton,
        CheckId::Vo1Equiv,
    ];

    pub fn token(&self) -> &'static str {
        match self {
            CheckId::ChainI => "chain-i",
            CheckId::ChainII => "chain-ii",
            CheckId::EquivT => "equiv-t",
            CheckId::SumTg => "sum-tg",
            CheckId::ThreeG => "three-g",
            CheckId::TwoGtEquiv => "two-gt-equiv",
            CheckId::Tr2gLower => "tr2g-lower",
            CheckId::SumR2g => "sum-r2g",
            CheckId::HalfN => "half-n",
            CheckId::ThreeQuarter => "three-quarter",
            CheckId::Hamilton => "hamilton",
            CheckId::Eq2 => "eq2",
            CheckId::Eq3 => "eq3",
            CheckId::EqN => "eqn",
            CheckId::Vo1Equiv => "vo1-equiv",
            CheckId::ReductionId => "reduction-id",
        }
    }

    pub fn from_token(token: &str) -> Option<CheckId> {
        CheckId::ALL.into_iter().find(|c| c.token() == token)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub check: CheckId,
    /// Whether the statement's hypotheses hold on this graph.
    pub applicable: bool,
    /// Vacuously true when not applicable.
    pub holds: bool,
    /// Named quantities entering the check, in evaluation order.
    pub values: Vec<(String, i64)>,
    /// An optimal labeling backing the left-hand side, when one exists.
    pub witness_labels: Option<Vec<u8>>,
    pub note: String,
}

impl Verdict {
    fn vacuous(check: CheckId, note: &str) -> Verdict {
        Verdict {
            check,
            applicable: false,
            holds: true,
            values: vec![],
            witness_labels: None,
            note: format!("not applicable: {note}"),
        }
    }
}

/// Solve cache so one graph's parameters are computed once per suite run.
struct ParamCache<'a> {
    g: &'a Graph,
    memo: HashMap<Parameter, SolveResult>,
}

impl<'a> ParamCache<'a> {
    fn new(g: &'a Graph) -> ParamCache<'a> {
        ParamCache { g, memo: HashMap::new() }
    }

    fn value(&mut self, kind: Parameter) -> Result<usize> {
        if !self.memo.contains_key(&kind) {
            let r = solver::exact(self.g, kind)?;
            self.memo.insert(kind, r);
        }
        let r = &self.memo[&kind];
        r.value.ok_or(Error::Infeasible)
    }

    fn witness(&mut self, kind: Parameter) -> Option<Vec<u8>> {
        self.memo
            .get(&kind)
            .and_then(|r| r.witness.as_ref())
            .map(|f| f.values().to_vec())
    }
}

pub fn check(g: &Graph, id: CheckId) -> Result<Verdict> {
    let mut cache = ParamCache::new(g);
    check_cached(g, id, &mut cache)
}

/// Runs the full catalog in a fixed order, sharing one solve cache.
pub fn run_all(g: &Graph) -> Result<Vec<Verdict>> {
    let mut cache = ParamCache::new(g);
    CheckId::ALL
        .into_iter()
        .map(|id| check_cached(g, id, &mut cache))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub holds: usize,
    pub vacuous: usize,
    pub violated: usize,
}

pub fn summarize(verdicts: &[Verdict]) -> SuiteSummary {
    let mut s = SuiteSummary { holds: 0, vacuous: 0, violated: 0 };
    for v in verdicts {
        if !v.applicable {
            s.vacuous += 1;
        } else if v.holds {
            s.holds += 1;
        } else {
            s.violated += 1;
        }
    }
    s
}

fn check_cached(g: &Graph, id: CheckId, cache: &mut ParamCache) -> Result<Verdict> {
    let n = g.order();
    let no_isolated = n >= 1 && !g.has_isolated_vertex();
    let named = |pairs: &[(&str, usize)]| -> Vec<(String, i64)> {
        pairs.iter().map(|&(k, v)| (k.to_string(), v as i64)).collect()
    };

    match id {
        CheckId::ChainI => {
            if !no_isolated {
                return Ok(Verdict::vacuous(id, "isolated vertex"));
            }
            let t = cache.value(Parameter::TotalDomination)?;
            let tr2 = cache.value(Parameter::TotalRoman2)?;
            let tr = cache.value(Parameter::TotalRoman)?;
            Ok(Verdict {
                check: id,
                applicable: true,
                holds: t <= tr2 && tr2 <= tr && tr <= 2 * t,
                values: named(&[("total", t), ("total_roman2", tr2), ("total_roman", tr)]),
                witness_labels: cache.witness(Parameter::TotalRoman2),
                note: format!("{t} <= {tr2} <= {tr} <= {}", 2 * t),
            })
        }
        CheckId::ChainII => {
            if !no_isolated {
                return Ok(Verdict::vacuous(id, "isolated vertex"));
            }
            let r2 = cache.value(Parameter::Roman2)?;
            let tr2 = cache.value(Parameter::TotalRoman2)?;
            let x2 = cache.value(Parameter::DoubleDomination)?;
            Ok(Verdict {
                check: id,
                applicable: true,
                holds: r2 <= tr2 && tr2 <= x2,
                values: named(&[("roman2", r2), ("total_roman2", tr2), ("double", x2)]),
                witness_labels: cache.witness(Parameter::TotalRoman2),
                note: format!("{r2} <= {tr2} <= {x2}"),
            })
        }
        CheckId::EquivT => {
            if !no_isolated {
                return Ok(Verdict::vacuous(id, "isolated vertex"));
            }
            let t = cache.value(Parameter::TotalDomination)?;
            let tr2 = cache.value(Parameter::TotalRoman2)?;
            let x2 = cache.value(Parameter::DoubleDomination)?;
            let lhs = tr2 == t;
            let rhs = x2 == t;
            Ok(Verdict {
                check: id,
                applicable: true,
                holds: lhs == rhs,
                values: named(&[("total", t), ("total_roman2", tr2), ("double", x2)]),
                witness_labels: cache.witness(Parameter::TotalRoman2),
                note: format!("lhs={lhs} rhs={rhs}"),
            })
        }
        CheckId::SumTg => {
            if !no_isolated {
                return Ok(Verdict::vacuous(id, "isolated vertex"));
            }
            let tr2 = cache.value(Parameter::TotalRoman2)?;
            let t = cache.value(Parameter::TotalDomination)?;
            let gamma = cache.value(Parameter::Domination)?;
            Ok(Verdict {
                check: id,
                applicable: true,
                holds: tr2 <= t + gamma,
                values: named(&[("total_roman2", tr2), ("total", t), ("domination", gamma)]),
                witness_labels: cache.witness(Parameter::TotalRoman2),
                note: format!("{tr2} <= {t} + {gamma}"),
            })
        }
        CheckId::ThreeG => {
            if !no_isolated {
                return Ok(Verdict::vacuous(id, "isolated vertex"));
            }
            let tr2 = cache.value(Parameter::TotalRoman2)?;
            let gamma = cache.value(Parameter::Domination)?;
            Ok(Verdict {
                check: id,
                applicable: true,
                holds: tr2 <= 3 * gamma,
                values: named(&[("total_roman2", tr2), ("domination", gamma)]),
                witness_labels: cache.witness(Parameter::TotalRoman2),
                note: format!("{tr2} <= 3*{gamma}"),
            })
        }
        CheckId::TwoGtEquiv => {
            if !no_isolated {
                return Ok(Verdict::vacuous(id, "isolated vertex"));
            }
            let tr2 = cache.value(Parameter::TotalRoman2)?;
            let tr = cache.value(Parameter::TotalRoman)?;
            let t = cache.value(Parameter::TotalDomination)?;
            let gamma = cache.value(Parameter::Domination)?;
            let lhs = tr2 == 2 * t;
            let rhs = tr2 == tr && t == gamma;
            Ok(Verdict {
                check: id,
                applicable: true,
                holds: lhs == rhs,
                values: named(&[
                    ("total_roman2", tr2),
                    ("total_roman", tr),
                    ("total", t),
                    ("domination", gamma),
                ]),
                witness_labels: cache.witness(Parameter::TotalRoman2),
                note: format!("lhs={lhs} rhs={rhs}"),
            })
        }
        CheckId::Tr2gLower => {
            if !no_isolated {
                return Ok(Verdict::vacuous(id, "isolated vertex"));
            }
            let gamma = cache.value(Parameter::Domination)?;
            let tr = cache.value(Parameter::TotalRoman)?;
            Ok(Verdict {
                check: id,
                applicable: true,
                holds: 2 * gamma <= tr,
                values: named(&[("domination", gamma), ("total_roman", tr)]),
                witness_labels: cache.witness(Parameter::TotalRoman),
                note: format!("2*{gamma} <= {tr}"),
            })
        }
        CheckId::SumR2g => {
            if !no_isolated {
                return Ok(Verdict::vacuous(id, "isolated vertex"));
            }
            let tr2 = cache.value(Parameter::TotalRoman2)?;
            let r2 = cache.value(Parameter::Roman2)?;
            let gamma = cache.value(Parameter::Domination)?;
            let main = tr2 <= r2 + gamma;
            let twice = tr2 <= 2 * r2;
            let strict = r2 <= gamma || tr2 < 2 * r2;
            Ok(Verdict {
                check: id,
                applicable: true,
                holds: main && twice && strict,
                values: named(&[("total_roman2", tr2), ("roman2", r2), ("domination", gamma)]),
                witness_labels: cache.witness(Parameter::TotalRoman2),
                note: format!("{tr2} <= {r2}+{gamma}, corollaries included"),
            })
        }
        CheckId::HalfN => {
            let (min_deg, _) = if n >= 1 { g.degree_stats() } else { (0, 0) };
            if n < 1 || min_deg < 2 {
                return Ok(Verdict::vacuous(id, "needs min degree 2"));
            }
            let tr2 = cache.value(Parameter::TotalRoman2)?;
            let t = cache.value(Parameter::TotalDomination)?;
            Ok(Verdict {
                check: id,
                applicable: true,
                holds: tr2 <= (t + n) / 2,
                values: named(&[("total_roman2", tr2), ("total", t), ("order", n)]),
                witness_labels: cache.witness(Parameter::TotalRoman2),
                note: format!("{tr2} <= floor(({t}+{n})/2)"),
            })
        }
        CheckId::ThreeQuarter => {
            let (min_deg, _) = if n >= 1 { g.degree_stats() } else { (0, 0) };
            if n < 1 || min_deg < 3 {
                return Ok(Verdict::vacuous(id, "needs min degree 3"));
            }
            let tr2 = cache.value(Parameter::TotalRoman2)?;
            Ok(Verdict {
                check: id,
                applicable: true,
                holds: 4 * tr2 <= 3 * n,
                values: named(&[("total_roman2", tr2), ("order", n)]),
                witness_labels: cache.witness(Parameter::TotalRoman2),
                note: format!("4*{tr2} <= 3*{n}"),
            })
        }
        CheckId::Hamilton => {
            if !no_isolated {
                return Ok(Verdict::vacuous(id, "isolated vertex"));
            }
            if n > HAMILTONIAN_LIMIT {
                return Ok(Verdict::vacuous(id, "beyond Hamiltonicity search limit"));
            }
            let ham = g.hamiltonian(HAMILTONIAN_LIMIT)?;
            if ham == Hamiltonicity::Neither {
                return Ok(Verdict::vacuous(id, "no Hamiltonian path"));
            }
            let tr2 = cache.value(Parameter::TotalRoman2)?;
            let base = 2 * n.div_ceil(3);
            let bound = if ham == Hamiltonicity::Cycle { base } else { base + 1 };
            Ok(Verdict {
                check: id,
                applicable: true,
                holds: tr2 <= bound,
                values: named(&[("total_roman2", tr2), ("bound", bound)]),
                witness_labels: cache.witness(Parameter::TotalRoman2),
                note: format!("{tr2} <= {bound} ({ham:?})"),
            })
        }
        CheckId::Eq2 => {
            if !no_isolated {
                return Ok(Verdict::vacuous(id, "isolated vertex"));
            }
            let tr2 = cache.value(Parameter::TotalRoman2)?;
            let universal = g.universal_vertices().len();
            let lhs = tr2 == 2;
            let rhs = universal >= 2;
            Ok(Verdict {
                check: id,
                applicable: true,
                holds: lhs == rhs,
                values: named(&[("total_roman2", tr2), ("universal", universal)]),
                witness_labels: cache.witness(Parameter::TotalRoman2),
                note: format!("lhs={lhs} rhs={rhs}"),
            })
        }
        CheckId::Eq3 => {
            if !no_isolated || !g.is_connected() {
                return Ok(Verdict::vacuous(id, "needs connectivity, no isolated vertex"));
            }
            let tr2 = cache.value(Parameter::TotalRoman2)?;
            let witness = families::weight3_witness(g);
            let universal = g.universal_vertices().len();
            let lhs = tr2 == 3;
            let rhs = witness.is_some() && universal <= 1;
            Ok(Verdict {
                check: id,
                applicable: true,
                holds: lhs == rhs,
                values: named(&[("total_roman2", tr2), ("universal", universal)]),
                witness_labels: cache.witness(Parameter::TotalRoman2),
                note: format!("lhs={lhs} rhs={rhs} witness={witness:?}"),
            })
        }
        CheckId::EqN => {
            if !no_isolated || !g.is_connected() {
                return Ok(Verdict::vacuous(id, "needs connectivity, no isolated vertex"));
            }
            let tr2 = cache.value(Parameter::TotalRoman2)?;
            let classes = g.vertex_classes();
            let is_p3 = n == 3 && g.size() == 2;
            let all_leaf_or_support = classes.leaves.union(&classes.supports).len() == n;
            let rhs = is_p3 || (all_leaf_or_support && classes.strong_supports.is_empty());
            let lhs = tr2 == n;
            Ok(Verdict {
                check: id,
                applicable: true,
                holds: lhs == rhs,
                values: named(&[("total_roman2", tr2), ("order", n)]),
                witness_labels: cache.witness(Parameter::TotalRoman2),
                note: format!("lhs={lhs} rhs={rhs}"),
            })
        }
        CheckId::Vo1Equiv => {
            if !no_isolated {
                return Ok(Verdict::vacuous(id, "isolated vertex"));
            }
            if n > solver::ENUMERATION_LIMIT {
                return Ok(Verdict::vacuous(id, "beyond optimal-set enumeration limit"));
            }
            let tr2 = cache.value(Parameter::TotalRoman2)?;
            let tr = cache.value(Parameter::TotalRoman)?;
            let lhs = tr2 == tr;
            let rhs = solver::all_optimal(g, Parameter::TotalRoman2)?
                .iter()
                .any(|f| f.zeros_far_from_two(g).is_empty());
            Ok(Verdict {
                check: id,
                applicable: true,
                holds: lhs == rhs,
                values: named(&[("total_roman2", tr2), ("total_roman", tr)]),
                witness_labels: cache.witness(Parameter::TotalRoman2),
                note: format!("lhs={lhs} rhs={rhs}"),
            })
        }
        CheckId::ReductionId => {
            if !no_isolated {
                return Ok(Verdict::vacuous(id, "isolated vertex"));
            }
            if 6 * n > solver::BRANCH_AND_BOUND_LIMIT {
                return Ok(Verdict::vacuous(id, "gadget exceeds solver limit"));
            }
            let gamma = cache.value(Parameter::Domination)?;
            let gadget = families::reduction_gadget(g)?;
            let gadget_tr2 =
                solver::exact(&gadget, Parameter::TotalRoman2)?.value.ok_or(Error::Infeasible)?;
            Ok(Verdict {
                check: id,
                applicable: true,
                holds: gadget_tr2 == gamma + 3 * n,
                values: named(&[
                    ("gadget_total_roman2", gadget_tr2),
                    ("domination", gamma),
                    ("order", n),
                ]),
                witness_labels: None,
                note: format!("{gadget_tr2} == {gamma} + 3*{n}"),
            })
        }
    }
}
