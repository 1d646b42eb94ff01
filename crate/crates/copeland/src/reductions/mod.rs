//! Generators for the hardness-reduction constructions.
//!
//! Every generator returns a [`ReducedInstance`]: the target problem, the instance, and the list
//! of scores and relative vote-scores the construction is supposed to have. The list is checked
//! against the generated election before the instance is returned.

mod bribery;
mod candidate;
mod source;
mod voter;

pub use bribery::{x3c_to_bribery_uv, BriberyVariant};
pub use candidate::vc_to_candidate_control;
pub use source::{Vc, X3c};
pub use voter::{x3c_to_condorcet, x3c_to_voter_control};

use crate::alpha::Alpha;
use crate::control::{ControlAction, ControlInstance, ProblemTag};
use crate::election::{goal_met, Election, Mode, VoterBlock, WinnerModel};
use crate::error::{Error, Result};
use crate::oracle::{self, reference, replay, Bribe, Verdict, Witness};
use crate::Preference;
use std::fmt;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ReduceOptions {
    /// Emit a fixed small instance with the right answer instead of failing on inputs outside
    /// the construction's range.
    pub canned_fallback: bool,
    /// Synthesize tournament-defined elections with at most two voters per candidate instead
    /// of two voters per decisive pair. The head-to-head results are the same.
    pub compact_voters: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cmp {
    Eq,
    Le,
    Ge,
    Lt,
    Gt,
}

impl fmt::Display for Cmp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Cmp::Eq => "=",
            Cmp::Le => "<=",
            Cmp::Ge => ">=",
            Cmp::Lt => "<",
            Cmp::Gt => ">",
        })
    }
}

/// One stated property of the construction: `actual rel bound`. Scores are scaled by the
/// denominator of alpha.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub what: String,
    pub actual: i64,
    pub rel: Cmp,
    pub bound: i64,
}

impl Claim {
    pub fn holds(&self) -> bool {
        let (a, b) = (self.actual, self.bound);
        match self.rel {
            Cmp::Eq => a == b,
            Cmp::Le => a <= b,
            Cmp::Ge => a >= b,
            Cmp::Lt => a < b,
            Cmp::Gt => a > b,
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} {} {} [{}]", self.what, self.actual, self.rel, self.bound, if self.holds() { "ok" } else { "FAILED" })
    }
}

/// How a source solution becomes the construction's intended action.
#[derive(Clone, Debug, PartialEq, Eq)]
enum WitnessPlan {
    /// Canned instances have no plan.
    None,
    /// Bribe the unit voter of each chosen item to put `top` first.
    Bribe { units: Vec<usize>, top: usize },
    AddCandidates { per_item: Vec<usize> },
    DeleteCandidates { per_item: Vec<usize> },
    /// First part = `base` minus the items' candidates.
    SplitWithout { base: Vec<usize>, per_item: Vec<usize> },
    /// First part = `base` plus the items' candidates.
    SplitWith { base: Vec<usize>, per_item: Vec<usize> },
    /// Voter counts: `base` plus `delta` on each chosen item's block; `always` items are
    /// chosen in addition to the given ones.
    Voters { kind: VoterOp, base: Vec<u64>, per_item: Vec<usize>, always: Vec<usize> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum VoterOp {
    Add,
    Delete,
    /// Counts placed in the first part; chosen items move to the second.
    Partition,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedInstance {
    pub problem: ProblemTag,
    pub model: WinnerModel,
    pub alpha: Alpha,
    /// For bribery the election, target and budget live here too; spoilers and pool are empty.
    pub instance: ControlInstance,
    pub claims: Vec<Claim>,
    /// A fixed instance emitted for input outside the construction's range.
    pub canned: bool,
    /// Size of a source solution the witness plan expects (k, after any padding).
    pub solution_size: usize,
    plan: WitnessPlan,
}

impl ReducedInstance {
    pub fn failed_claims(&self) -> Vec<&Claim> {
        self.claims.iter().filter(|c| !c.holds()).collect()
    }

    fn checked(self) -> Result<ReducedInstance> {
        let bad = self.failed_claims();
        if bad.is_empty() {
            Ok(self)
        } else {
            let list: Vec<String> = bad.iter().map(|c| c.to_string()).collect();
            Err(Error::InvalidInstance(format!("construction self-check failed: {}", list.join("; "))))
        }
    }

    /// The construction's intended action for a source solution (chosen set indices for X3C,
    /// chosen vertices for vertex cover). Vertex covers smaller than k are topped up.
    pub fn forward_witness(&self, solution: &[usize]) -> Option<Witness> {
        let mut items = solution.to_vec();
        let pad_to = |items: &mut Vec<usize>, universe: usize| {
            let mut next = 0;
            while items.len() < self.solution_size && next < universe {
                if !items.contains(&next) {
                    items.push(next);
                }
                next += 1;
            }
        };
        Some(match &self.plan {
            WitnessPlan::None => return None,
            WitnessPlan::Bribe { units, top } => {
                let e = self.instance.election.expanded();
                let mut bribes = Vec::new();
                for &i in &items {
                    let u = *units.get(i)?;
                    let old = &e.voters()[u].pref;
                    let mut order = vec![*top];
                    let Preference::Order(o) = old else { return None };
                    order.extend(o.iter().copied().filter(|c| c != top));
                    bribes.push(Bribe { voter: u, pref: Preference::Order(order) });
                }
                Witness::Bribery(bribes)
            }
            WitnessPlan::AddCandidates { per_item } => {
                pad_to(&mut items, per_item.len());
                Witness::Control(ControlAction::AddCandidates(items.iter().map(|&i| per_item.get(i).copied()).collect::<Option<_>>()?))
            }
            WitnessPlan::DeleteCandidates { per_item } => {
                pad_to(&mut items, per_item.len());
                Witness::Control(ControlAction::DeleteCandidates(items.iter().map(|&i| per_item.get(i).copied()).collect::<Option<_>>()?))
            }
            WitnessPlan::SplitWithout { base, per_item } => {
                pad_to(&mut items, per_item.len());
                let out: Vec<usize> = items.iter().map(|&i| per_item.get(i).copied()).collect::<Option<_>>()?;
                Witness::Control(ControlAction::PartitionCandidates(base.iter().copied().filter(|c| !out.contains(c)).collect()))
            }
            WitnessPlan::SplitWith { base, per_item } => {
                pad_to(&mut items, per_item.len());
                let mut c1 = base.clone();
                for &i in &items {
                    c1.push(*per_item.get(i)?);
                }
                c1.sort_unstable();
                Witness::Control(ControlAction::PartitionCandidates(c1))
            }
            WitnessPlan::Voters { kind, base, per_item, always } => {
                let mut counts = base.clone();
                for &i in items.iter().chain(always) {
                    let b = *per_item.get(i)?;
                    match kind {
                        VoterOp::Add | VoterOp::Delete => counts[b] += 1,
                        VoterOp::Partition => counts[b] = counts[b].checked_sub(1)?,
                    }
                }
                Witness::Control(match kind {
                    VoterOp::Add => ControlAction::AddVoters(counts),
                    VoterOp::Delete => ControlAction::DeleteVoters(counts),
                    VoterOp::Partition => ControlAction::PartitionVoters(counts),
                })
            }
        })
    }

    /// Whether `w` achieves the goal on the generated instance, evaluated from scratch.
    pub fn check_witness(&self, w: &Witness) -> Result<bool> {
        let inst = &self.instance;
        let e = &inst.election;
        let p = inst.target;
        match (self.problem, w) {
            (ProblemTag::Bribery(mode), Witness::Bribery(bribes)) => {
                let mut voters: Vec<usize> = bribes.iter().map(|b| b.voter).collect();
                voters.sort_unstable();
                voters.dedup();
                if voters.len() != bribes.len() || bribes.len() as u64 > inst.budget {
                    return Ok(false);
                }
                let after = oracle::apply_bribery(e, bribes)?;
                Ok(goal_met(&reference::winners(&after, self.alpha), p, mode, self.model))
            }
            (ProblemTag::Control(tag), Witness::Control(a)) => replay(tag, inst, a, self.alpha, self.model),
            (ProblemTag::CondorcetCcdv, Witness::Control(ControlAction::DeleteVoters(del))) => {
                if del.len() != e.voters().len() || del.iter().sum::<u64>() > inst.budget {
                    return Ok(false);
                }
                let Some(left) = e.voters().iter().zip(del).map(|(b, &d)| b.multiplicity.checked_sub(d)).collect::<Option<Vec<u64>>>() else {
                    return Ok(false);
                };
                Ok(reference::condorcet(&e.with_counts(&left)) == Some(p))
            }
            (ProblemTag::CondorcetCcpv, Witness::Control(ControlAction::PartitionVoters(v1))) => {
                if v1.len() != e.voters().len() {
                    return Ok(false);
                }
                let Some(v2) = e.voters().iter().zip(v1).map(|(b, &d)| b.multiplicity.checked_sub(d)).collect::<Option<Vec<u64>>>() else {
                    return Ok(false);
                };
                let (a, b) = (reference::condorcet(&e.with_counts(v1)), reference::condorcet(&e.with_counts(&v2)));
                Ok(match (a, b) {
                    (Some(a), Some(b)) if a == b => a == p,
                    (Some(a), Some(b)) => {
                        let pair = [a.min(b), a.max(b)];
                        reference::condorcet(&e.restrict_candidates(&pair)).map(|i| pair[i]) == Some(p)
                    }
                    _ => false,
                })
            }
            _ => Err(Error::InvalidInstance("witness does not match the problem".into())),
        }
    }

    /// Decides the generated instance exhaustively.
    pub fn oracle(&self, cap: u64) -> Result<Verdict> {
        let inst = &self.instance;
        match self.problem {
            ProblemTag::Bribery(mode) => oracle::bribery_oracle(&inst.election, self.alpha, inst.target, inst.budget, mode, self.model, cap),
            ProblemTag::Microbribery(_) => Err(Error::Unsupported("no reductions target microbribery".into())),
            tag => oracle::control_oracle(tag, inst, self.alpha, self.model, cap),
        }
    }
}

/// A two-candidate instance {p, q} with one voter whose answer is `answer`.
fn canned(problem: ProblemTag, alpha: Alpha, model: WinnerModel, answer: bool) -> Result<ReducedInstance> {
    let mode = match problem {
        ProblemTag::Bribery(m) | ProblemTag::Microbribery(m) => m,
        ProblemTag::Control(t) => t.mode,
        ProblemTag::CondorcetCcdv | ProblemTag::CondorcetCcpv => Mode::Constructive,
    };
    let p_first = answer == (mode == Mode::Constructive);
    let order = if p_first { vec![0, 1] } else { vec![1, 0] };
    let e = Election::new(vec!["p".into(), "q".into()], vec![VoterBlock::order(&order, 1)])?;
    Ok(ReducedInstance {
        problem,
        model,
        alpha,
        instance: ControlInstance::new(e, 0, 0),
        claims: Vec::new(),
        canned: true,
        solution_size: 0,
        plan: WitnessPlan::None,
    })
}

/// Either the canned instance (with canned_fallback set) or an error explaining why not.
fn out_of_range(opts: ReduceOptions, problem: ProblemTag, alpha: Alpha, model: WinnerModel, answer: impl FnOnce() -> Result<bool>, why: String) -> Result<ReducedInstance> {
    if opts.canned_fallback {
        canned(problem, alpha, model, answer()?)
    } else {
        Err(Error::InvalidInstance(why))
    }
}

/// Scaled value of `whole + ties * alpha`.
fn scaled(alpha: Alpha, whole: i64, ties: i64) -> i64 {
    whole * alpha.den() as i64 + ties * alpha.num() as i64
}

/// Collects claims about one election.
struct Claims<'a> {
    e: &'a Election,
    alpha: Alpha,
    vs: crate::VsMatrix,
    list: Vec<Claim>,
}

impl<'a> Claims<'a> {
    fn new(e: &'a Election, alpha: Alpha) -> Claims<'a> {
        Claims { e, alpha, vs: e.vs_matrix(), list: Vec::new() }
    }

    fn push(&mut self, what: String, actual: i64, rel: Cmp, bound: i64) {
        self.list.push(Claim { what, actual, rel, bound });
    }

    fn vs(&mut self, a: usize, b: usize, rel: Cmp, bound: i64) {
        let what = format!("vs({}, {})", self.e.name(a), self.e.name(b));
        let actual = self.vs.get(a, b);
        self.push(what, actual, rel, bound);
    }

    /// Score of `c` within the sub-election on `members` (all candidates when `None`).
    fn score_in(&mut self, label: &str, members: Option<&[usize]>, c: usize, rel: Cmp, bound: i64) {
        let actual = match members {
            None => self.vs.score(self.alpha, c),
            Some(ms) => {
                let i = ms.iter().position(|&x| x == c).expect("candidate in its sub-election");
                self.vs.scores_within(ms, self.alpha)[i]
            }
        } as i64;
        let what = format!("score_{label}({})", self.e.name(c));
        self.push(what, actual, rel, bound);
    }

    fn score(&mut self, c: usize, rel: Cmp, bound: i64) {
        self.score_in("E", None, c, rel, bound);
    }
}

/// Candidate names used verbatim when they do not collide with the construction's own names.
fn element_names(given: &[String], reserved: &[&str]) -> Vec<String> {
    let clash = given.iter().any(|g| reserved.contains(&g.as_str()))
        || given.iter().enumerate().any(|(i, g)| given[..i].contains(g));
    if clash {
        (0..given.len()).map(|i| format!("el{i}")).collect()
    } else {
        given.to_vec()
    }
}
