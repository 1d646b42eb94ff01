//! Fixed-parameter control: brute force for few candidates or few voters, and outcome-table
//! enumeration plus integer feasibility for voter control with few candidates.

pub mod ilp;

pub use ilp::{ilp_feasible, Constraint, IntProblem, Relation};

use crate::alpha::Alpha;
use crate::control::{achieves, ControlAction, ControlInstance, ControlTag, ControlType};
use crate::cot::{Cot, CotIter, Outcome};
use crate::election::{goal_met, pair_count, Election, Mode, PairTable, Preference, VoterBlock, VsMatrix, WinnerModel};
use crate::error::{Error, Result};
use crate::oracle::{Decision, Verdict, Witness};
use crate::two_stage::{survivors, TieRule};
use itertools::Itertools;
use std::fmt;
use std::str::FromStr;

pub const DEFAULT_CANDIDATE_BOUND: usize = 8;
pub const MAX_UNIT_VOTERS: usize = 20;

/// What the controller wants the final round to look like.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Goal {
    /// The target wins (constructive) or does not win (destructive).
    Winner { mode: Mode, model: WinnerModel },
    /// Strictly decreasing scores in lexicographic order of candidate names.
    LexicographicOrder,
    /// Groups of candidate ids, best first; equal scores within a group, strictly lower
    /// scores in later groups. Candidates absent from the final round are skipped.
    OrderWithTies(Vec<Vec<usize>>),
    ExactlyCowinners(usize),
    AllScoresDistinct,
}

impl Goal {
    /// `members` sorted, `scores` aligned with `members`.
    pub fn holds(&self, names: &[String], p: usize, members: &[usize], scores: &[u64]) -> bool {
        let best = scores.iter().copied().max();
        let winners: Vec<usize> = members.iter().zip(scores).filter(|(_, &s)| Some(s) == best).map(|(&c, _)| c).collect();
        let score_of = |c: usize| members.iter().position(|&x| x == c).map(|i| scores[i]);
        match self {
            Goal::Winner { mode, model } => goal_met(&winners, p, *mode, *model),
            Goal::LexicographicOrder => {
                let mut by_name = members.to_vec();
                by_name.sort_by(|&a, &b| names[a].cmp(&names[b]));
                by_name.windows(2).all(|w| score_of(w[0]) > score_of(w[1]))
            }
            Goal::OrderWithTies(groups) => {
                let levels: Vec<Vec<u64>> =
                    groups.iter().map(|g| g.iter().filter_map(|&c| score_of(c)).collect::<Vec<_>>()).filter(|g| !g.is_empty()).collect();
                levels.iter().all(|g| g.iter().all(|&s| s == g[0])) && levels.windows(2).all(|w| w[0][0] > w[1][0])
            }
            Goal::ExactlyCowinners(q) => winners.len() == *q,
            Goal::AllScoresDistinct => scores.iter().all_unique(),
        }
    }
}

impl fmt::Display for Goal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Goal::Winner { mode: Mode::Constructive, .. } => write!(f, "p-wins"),
            Goal::Winner { mode: Mode::Destructive, .. } => write!(f, "p-loses"),
            Goal::LexicographicOrder => write!(f, "lexicographic"),
            Goal::OrderWithTies(g) => {
                write!(f, "order:{}", g.iter().map(|grp| grp.iter().join(",")).join("|"))
            }
            Goal::ExactlyCowinners(q) => write!(f, "cowinners:{q}"),
            Goal::AllScoresDistinct => write!(f, "distinct"),
        }
    }
}

/// Named goals for the command line. `order:` takes candidate names; resolve them with
/// [`Goal::parse_with_names`].
impl FromStr for Goal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Goal> {
        Goal::parse_with_names(s, &[], WinnerModel::NonUnique)
    }
}

impl Goal {
    pub fn parse_with_names(s: &str, names: &[String], model: WinnerModel) -> Result<Goal> {
        let bad = || Error::InvalidInstance(format!("unknown goal {s}"));
        Ok(match s {
            "p-wins" => Goal::Winner { mode: Mode::Constructive, model },
            "p-loses" => Goal::Winner { mode: Mode::Destructive, model },
            "lexicographic" => Goal::LexicographicOrder,
            "distinct" => Goal::AllScoresDistinct,
            _ => {
                if let Some(q) = s.strip_prefix("cowinners:") {
                    Goal::ExactlyCowinners(q.parse().map_err(|_| bad())?)
                } else if let Some(spec) = s.strip_prefix("order:") {
                    let mut groups = Vec::new();
                    for g in spec.split('|') {
                        let mut grp = Vec::new();
                        for n in g.split(',') {
                            grp.push(names.iter().position(|x| x == n).ok_or_else(|| Error::UnknownCandidate(n.to_string()))?);
                        }
                        groups.push(grp);
                    }
                    Goal::OrderWithTies(groups)
                } else {
                    return Err(bad());
                }
            }
        })
    }
}

/// All outcome tables over j candidates, in lexicographic order.
pub fn enumerate_cots(j: usize) -> Result<CotIter> {
    if j > 5 {
        return Err(Error::BoundExceeded(format!("{j} candidates is too many for table enumeration")));
    }
    Ok(Cot::enumerate(j))
}

/// Two irrational voters realizing `t`: identical on decisive pairs, opposed on ties.
pub fn two_voter_realization(t: &Cot, names: Vec<String>) -> Result<Election> {
    let m = t.m();
    let first = PairTable::from_fn(m, |i, j| match t.get(i, j) {
        Outcome::First => true,
        Outcome::Second => false,
        Outcome::Tie => true,
    });
    let second = PairTable::from_fn(m, |i, j| match t.get(i, j) {
        Outcome::First => true,
        Outcome::Second => false,
        Outcome::Tie => false,
    });
    Election::new(names, vec![VoterBlock::new(Preference::Table(first), 1), VoterBlock::new(Preference::Table(second), 1)])
}

fn verdict(found: Option<ControlAction>, nodes: u64) -> Verdict {
    Verdict { decision: if found.is_some() { Decision::Yes } else { Decision::No }, witness: found.map(Witness::Control), nodes }
}

/// Brute force over every candidate-control action when there are few candidates.
pub fn fpt_candidate_control(tag: ControlTag, inst: &ControlInstance, alpha: Alpha, model: WinnerModel, bound: usize) -> Result<Verdict> {
    inst.validate()?;
    if !tag.kind.is_candidate_control() {
        return Err(Error::InvalidInstance(format!("{tag} is not candidate control")));
    }
    let m = inst.election.m();
    if m > bound {
        return Err(Error::BoundExceeded(format!("{m} candidates exceeds the bound {bound}")));
    }
    let mut nodes = 0;
    let mut try_action = |a: ControlAction| -> Result<Option<ControlAction>> {
        nodes += 1;
        Ok(achieves(tag, inst, &a, alpha, model)?.then_some(a))
    };
    let p = inst.target;
    let mut found = None;
    match tag.kind {
        ControlType::AC | ControlType::ACu | ControlType::DC => {
            let pool: Vec<usize> = if tag.kind == ControlType::DC {
                inst.registered().into_iter().filter(|&c| c != p).collect()
            } else {
                inst.spoilers.clone()
            };
            let lim = if tag.kind == ControlType::ACu { pool.len() } else { (inst.budget as usize).min(pool.len()) };
            for mask in 0u32..1 << pool.len() {
                if mask.count_ones() as usize > lim {
                    continue;
                }
                let set: Vec<usize> = (0..pool.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pool[i]).collect();
                let a = if tag.kind == ControlType::DC { ControlAction::DeleteCandidates(set) } else { ControlAction::AddCandidates(set) };
                if let Some(a) = try_action(a)? {
                    found = Some(a);
                    break;
                }
            }
        }
        _ => {
            for mask in 0u32..1 << m {
                let c1: Vec<usize> = (0..m).filter(|&c| mask >> c & 1 == 1).collect();
                if let Some(a) = try_action(ControlAction::PartitionCandidates(c1))? {
                    found = Some(a);
                    break;
                }
            }
        }
    }
    Ok(verdict(found, nodes))
}

/// Unit voters of `blocks`, as (block index, preference).
fn units(blocks: &[VoterBlock]) -> Vec<usize> {
    blocks.iter().enumerate().flat_map(|(b, v)| std::iter::repeat(b).take(v.multiplicity as usize)).collect()
}

fn counts_from_units(blocks: &[VoterBlock], owner: &[usize], mask: u32) -> Vec<u64> {
    let mut c = vec![0; blocks.len()];
    for (u, &b) in owner.iter().enumerate() {
        if mask >> u & 1 == 1 {
            c[b] += 1;
        }
    }
    c
}

/// Brute force over voter subsets when there are few (unit) voters.
pub fn fpt_voter_control_bv(tag: ControlTag, inst: &ControlInstance, alpha: Alpha, model: WinnerModel) -> Result<Verdict> {
    inst.validate()?;
    let e = &inst.election;
    let m = e.m();
    let blocks: &[VoterBlock] = match tag.kind {
        ControlType::AV => &inst.pool,
        ControlType::DV | ControlType::PV(_) => e.voters(),
        _ => return Err(Error::InvalidInstance(format!("{tag} is not voter control"))),
    };
    let owner = units(blocks);
    if owner.len() > MAX_UNIT_VOTERS {
        return Err(Error::BoundExceeded(format!("{} voters exceeds {MAX_UNIT_VOTERS}", owner.len())));
    }
    let unit_vs: Vec<VsMatrix> =
        owner.iter().map(|&b| VsMatrix::from_blocks(m, std::iter::once((&blocks[b].pref, 1)))).collect();
    let full = e.vs_matrix();
    let all: Vec<usize> = (0..m).collect();
    let mut nodes = 0;
    for mask in 0u32..1 << owner.len() {
        if tag.kind != ControlType::PV(TieRule::TE) && tag.kind != ControlType::PV(TieRule::TP) && mask.count_ones() as u64 > inst.budget {
            continue;
        }
        nodes += 1;
        let mut part = VsMatrix::zero(m);
        for (u, uvs) in unit_vs.iter().enumerate() {
            if mask >> u & 1 == 1 {
                part.add_matrix(uvs, 1);
            }
        }
        let winners = match tag.kind {
            ControlType::AV => {
                let mut vs = full.clone();
                vs.add_matrix(&part, 1);
                vs.winners_within(&all, alpha)
            }
            ControlType::DV => {
                let mut vs = full.clone();
                vs.add_matrix(&part, -1);
                vs.winners_within(&all, alpha)
            }
            ControlType::PV(rule) => {
                let mut rest = full.clone();
                rest.add_matrix(&part, -1);
                let mut fin = survivors(&part, &all, alpha, rule);
                fin.extend(survivors(&rest, &all, alpha, rule));
                fin.sort_unstable();
                fin.dedup();
                full.winners_within(&fin, alpha)
            }
            _ => unreachable!(),
        };
        if goal_met(&winners, inst.target, tag.mode, model) {
            let counts = counts_from_units(blocks, &owner, mask);
            let a = match tag.kind {
                ControlType::AV => ControlAction::AddVoters(counts),
                ControlType::DV => ControlAction::DeleteVoters(counts),
                _ => ControlAction::PartitionVoters(counts),
            };
            return Ok(verdict(Some(a), nodes));
        }
    }
    Ok(verdict(None, nodes))
}

/// Distinct preference tables among `blocks`, with total counts and owning blocks.
struct VoteTypes {
    tables: Vec<PairTable>,
    counts: Vec<u64>,
    blocks: Vec<Vec<usize>>,
}

impl VoteTypes {
    fn group(blocks: &[VoterBlock], m: usize) -> VoteTypes {
        let mut t = VoteTypes { tables: Vec::new(), counts: Vec::new(), blocks: Vec::new() };
        for (b, v) in blocks.iter().enumerate() {
            let table = v.pref.to_table(m);
            match t.tables.iter().position(|x| *x == table) {
                Some(a) => {
                    t.counts[a] += v.multiplicity;
                    t.blocks[a].push(b);
                }
                None => {
                    t.tables.push(table);
                    t.counts.push(v.multiplicity);
                    t.blocks.push(vec![b]);
                }
            }
        }
        t
    }

    fn len(&self) -> usize {
        self.tables.len()
    }

    fn diff(&self, a: usize, i: usize, l: usize) -> i64 {
        if self.tables[a].prefers(i, l) {
            1
        } else {
            -1
        }
    }

    /// Spreads per-type amounts over the owning blocks, filling blocks in order.
    fn to_block_counts(&self, x: &[i64], source: &[VoterBlock]) -> Vec<u64> {
        let mut out = vec![0; source.len()];
        for (a, &amount) in x.iter().enumerate() {
            let mut left = amount as u64;
            for &b in &self.blocks[a] {
                let take = left.min(source[b].multiplicity);
                out[b] = take;
                left -= take;
            }
        }
        out
    }
}

/// Adds constraints forcing base + sign * sum_a diff_a x_a to follow `cot` on every pair.
fn add_cot_constraints(p: &mut IntProblem, types: &VoteTypes, base: &VsMatrix, sign: i64, cot: &Cot) {
    let m = cot.m();
    for i in 0..m {
        for l in i + 1..m {
            let terms: Vec<(usize, i64)> = (0..types.len()).map(|a| (a, sign * types.diff(a, i, l))).collect();
            let b = base.get(i, l);
            let c = match cot.get(i, l) {
                Outcome::First => Constraint::new(terms, Relation::Ge, 1 - b),
                Outcome::Second => Constraint::new(terms, Relation::Le, -1 - b),
                Outcome::Tie => Constraint::new(terms, Relation::Eq, -b),
            };
            p.add(c);
        }
    }
}

fn check_cot_size(m: usize, limit: usize) -> Result<()> {
    if m > limit {
        Err(Error::BoundExceeded(format!("{m} candidates exceeds {limit} for table enumeration")))
    } else {
        Ok(())
    }
}

fn cot_survivors(t: &Cot, alpha: Alpha, rule: TieRule) -> Vec<usize> {
    let scores = t.scores(alpha);
    let w = crate::election::argmax(&scores);
    match rule {
        TieRule::TP => w,
        TieRule::TE if w.len() == 1 => w,
        TieRule::TE => Vec::new(),
    }
}

/// Partition of voters via a pair of outcome tables for the two subelections.
pub fn fpt_pv(rule: TieRule, mode: Mode, inst: &ControlInstance, alpha: Alpha, model: WinnerModel) -> Result<Verdict> {
    extended_control(&Goal::Winner { mode, model }, ControlType::PV(rule), inst, alpha)
}

/// Adding or deleting voters via a single outcome table for the resulting election.
pub fn fpt_av_dv(tag: ControlTag, inst: &ControlInstance, alpha: Alpha, model: WinnerModel) -> Result<Verdict> {
    if !matches!(tag.kind, ControlType::AV | ControlType::DV) {
        return Err(Error::InvalidInstance(format!("{tag} is not AV or DV")));
    }
    extended_control(&Goal::Winner { mode: tag.mode, model }, tag.kind, inst, alpha)
}

/// Voter control (AV, DV, PV-TE, PV-TP) towards an arbitrary goal on the final round.
pub fn extended_control(goal: &Goal, kind: ControlType, inst: &ControlInstance, alpha: Alpha) -> Result<Verdict> {
    inst.validate()?;
    let e = &inst.election;
    let m = e.m();
    let names = e.names();
    let p = inst.target;
    let full = e.vs_matrix();
    let full_cot = full.cot();
    let all: Vec<usize> = (0..m).collect();
    let mut nodes = 0u64;
    match kind {
        ControlType::PV(rule) => {
            check_cot_size(m, 4)?;
            let types = VoteTypes::group(e.voters(), m);
            let cots: Vec<Cot> = Cot::enumerate(m).collect();
            let surv: Vec<Vec<usize>> = cots.iter().map(|t| cot_survivors(t, alpha, rule)).collect();
            let mut totals = VsMatrix::zero(m);
            for a in 0..types.len() {
                for i in 0..m {
                    for l in i + 1..m {
                        totals.set(i, l, totals.get(i, l) + types.diff(a, i, l) * types.counts[a] as i64);
                    }
                }
            }
            let upper: Vec<i64> = types.counts.iter().map(|&c| c as i64).collect();
            let mut side: [Vec<Option<bool>>; 2] = [vec![None; cots.len()], vec![None; cots.len()]];
            let zero = VsMatrix::zero(m);
            let mut realizable = |s: usize, t: usize, nodes: &mut u64| -> bool {
                *side[s][t].get_or_insert_with(|| {
                    *nodes += 1;
                    let mut prob = IntProblem::boxed(upper.clone());
                    if s == 0 {
                        add_cot_constraints(&mut prob, &types, &zero, 1, &cots[t]);
                    } else {
                        add_cot_constraints(&mut prob, &types, &totals, -1, &cots[t]);
                    }
                    ilp_feasible(&prob).is_some()
                })
            };
            for t1 in 0..cots.len() {
                for t2 in 0..cots.len() {
                    nodes += 1;
                    let mut fin: Vec<usize> = surv[t1].iter().chain(&surv[t2]).copied().collect();
                    fin.sort_unstable();
                    fin.dedup();
                    let scores = full_cot.scores_within(&fin, alpha);
                    if !goal.holds(names, p, &fin, &scores) {
                        continue;
                    }
                    if !realizable(0, t1, &mut nodes) || !realizable(1, t2, &mut nodes) {
                        continue;
                    }
                    let mut prob = IntProblem::boxed(upper.clone());
                    add_cot_constraints(&mut prob, &types, &zero, 1, &cots[t1]);
                    add_cot_constraints(&mut prob, &types, &totals, -1, &cots[t2]);
                    nodes += 1;
                    if let Some(x) = ilp_feasible(&prob) {
                        let counts = types.to_block_counts(&x, e.voters());
                        return Ok(verdict(Some(ControlAction::PartitionVoters(counts)), nodes));
                    }
                }
            }
            Ok(verdict(None, nodes))
        }
        ControlType::AV | ControlType::DV => {
            check_cot_size(m, 5)?;
            let (source, sign): (&[VoterBlock], i64) = if kind == ControlType::AV { (&inst.pool, 1) } else { (e.voters(), -1) };
            let types = VoteTypes::group(source, m);
            let upper: Vec<i64> = types.counts.iter().map(|&c| c as i64).collect();
            for t in Cot::enumerate(m) {
                nodes += 1;
                let scores = t.scores_within(&all, alpha);
                if !goal.holds(names, p, &all, &scores) {
                    continue;
                }
                let mut prob = IntProblem::boxed(upper.clone());
                prob.add(Constraint::new((0..types.len()).map(|a| (a, 1)).collect(), Relation::Le, inst.budget as i64));
                add_cot_constraints(&mut prob, &types, &full, sign, &t);
                nodes += 1;
                if let Some(x) = ilp_feasible(&prob) {
                    let counts = types.to_block_counts(&x, source);
                    let a = if kind == ControlType::AV { ControlAction::AddVoters(counts) } else { ControlAction::DeleteVoters(counts) };
                    return Ok(verdict(Some(a), nodes));
                }
            }
            Ok(verdict(None, nodes))
        }
        _ => Err(Error::InvalidInstance(format!("{kind:?} is not handled by table enumeration"))),
    }
}

/// Number of pairwise tables over j candidates; used to size enumerations.
pub fn table_count(j: usize) -> u128 {
    1u128 << pair_count(j)
}
