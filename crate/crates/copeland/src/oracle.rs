//! Exhaustive decision procedures. They re-evaluate every candidate action on a freshly
//! built election with a straight-line scorer, independent of the vs-matrix code paths
//! the algorithms use.

use crate::alpha::Alpha;
use crate::control::{final_winners, ControlAction, ControlInstance, ControlTag, ControlType, ProblemTag};
use crate::election::{goal_met, Election, Mode, PairTable, Preference, VoterBlock, WinnerModel};
use crate::error::{Error, Result};
use crate::microbribery::Microbribe;
use crate::reductions::{Vc, X3c};
use crate::two_stage::{PartitionKind, TieRule};
use itertools::Itertools;

pub const DEFAULT_NODE_CAP: u64 = 50_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Decision {
    Yes,
    No,
    CapExceeded,
}

/// Replacement preference for one bribed unit voter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bribe {
    pub voter: usize,
    pub pref: Preference,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Control(ControlAction),
    Bribery(Vec<Bribe>),
    Microbribery(Vec<Microbribe>),
    /// Indices of chosen sets (X3C) or vertices (vertex cover).
    Selection(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub decision: Decision,
    pub witness: Option<Witness>,
    pub nodes: u64,
}

impl Verdict {
    fn capped() -> Verdict {
        Verdict { decision: Decision::CapExceeded, witness: None, nodes: 0 }
    }

    fn finish(witness: Option<Witness>, nodes: u64) -> Verdict {
        let decision = if witness.is_some() { Decision::Yes } else { Decision::No };
        Verdict { decision, witness, nodes }
    }

    pub fn is_yes(&self) -> bool {
        self.decision == Decision::Yes
    }
}

/// Straight-line evaluation from the voters' preferences.
pub mod reference {
    use super::*;

    pub fn vs(e: &Election, a: usize, b: usize) -> i64 {
        let mut s = 0;
        for v in e.voters() {
            let k = v.multiplicity as i64;
            s += if v.pref.prefers(a, b) { k } else { -k };
        }
        s
    }

    /// Net counts for all ordered pairs at once; each voter's ranking is read once.
    fn all_vs(e: &Election) -> Vec<Vec<i64>> {
        let m = e.m();
        let mut net = vec![vec![0i64; m]; m];
        let mut rank = vec![0usize; m];
        for v in e.voters() {
            let k = v.multiplicity as i64;
            match &v.pref {
                Preference::Order(o) => {
                    for (i, &c) in o.iter().enumerate() {
                        rank[c] = i;
                    }
                    for a in 0..m {
                        for b in 0..m {
                            if a != b {
                                net[a][b] += if rank[a] < rank[b] { k } else { -k };
                            }
                        }
                    }
                }
                pref => {
                    for a in 0..m {
                        for b in 0..m {
                            if a != b {
                                net[a][b] += if pref.prefers(a, b) { k } else { -k };
                            }
                        }
                    }
                }
            }
        }
        net
    }

    pub fn scores(e: &Election, alpha: Alpha) -> Vec<u64> {
        let m = e.m();
        let net = all_vs(e);
        let mut out = vec![0; m];
        for a in 0..m {
            for b in 0..m {
                if a != b {
                    let v = net[a][b];
                    out[a] += if v > 0 { alpha.den() } else if v == 0 { alpha.num() } else { 0 };
                }
            }
        }
        out
    }

    pub fn winners(e: &Election, alpha: Alpha) -> Vec<usize> {
        let s = scores(e, alpha);
        match s.iter().max() {
            None => Vec::new(),
            Some(&best) => (0..s.len()).filter(|&c| s[c] == best).collect(),
        }
    }

    pub fn condorcet(e: &Election) -> Option<usize> {
        (0..e.m()).find(|&c| (0..e.m()).all(|d| d == c || vs(e, c, d) > 0))
    }

    /// Winners of the sub-election on `members` (ids of `e`), returned as ids of `e`.
    pub fn winners_among(e: &Election, members: &[usize], alpha: Alpha) -> Vec<usize> {
        let mut members = members.to_vec();
        members.sort_unstable();
        winners(&e.restrict_candidates(&members), alpha).into_iter().map(|i| members[i]).collect()
    }

    fn advance(w: Vec<usize>, rule: TieRule) -> Vec<usize> {
        match rule {
            TieRule::TP => w,
            TieRule::TE if w.len() == 1 => w,
            TieRule::TE => Vec::new(),
        }
    }

    pub fn two_stage_candidates(e: &Election, alpha: Alpha, rule: TieRule, run_off: bool, c1: &[usize]) -> Vec<usize> {
        let c2: Vec<usize> = (0..e.m()).filter(|c| !c1.contains(c)).collect();
        let mut fin = if c1.is_empty() { Vec::new() } else { advance(winners_among(e, c1, alpha), rule) };
        if run_off {
            if !c2.is_empty() {
                fin.extend(advance(winners_among(e, &c2, alpha), rule));
            }
        } else {
            fin.extend(c2);
        }
        fin.sort_unstable();
        fin.dedup();
        if fin.is_empty() {
            return fin;
        }
        winners_among(e, &fin, alpha)
    }

    pub fn two_stage_voters(e: &Election, alpha: Alpha, rule: TieRule, v1: &[u64]) -> Vec<usize> {
        let v2: Vec<u64> = e.voters().iter().zip(v1).map(|(b, &k)| b.multiplicity - k).collect();
        let mut fin = Vec::new();
        if e.m() > 0 {
            fin.extend(advance(winners(&e.with_counts(v1), alpha), rule));
            fin.extend(advance(winners(&e.with_counts(&v2), alpha), rule));
        }
        fin.sort_unstable();
        fin.dedup();
        if fin.is_empty() {
            return fin;
        }
        winners_among(e, &fin, alpha)
    }

    /// Final nonunique winners of a control action, evaluated literally.
    pub fn control_outcome(kind: ControlType, inst: &ControlInstance, action: &ControlAction, alpha: Alpha) -> Vec<usize> {
        let e = &inst.election;
        let registered: Vec<usize> = (0..e.m()).filter(|c| !inst.spoilers.contains(c)).collect();
        match (kind, action) {
            (_, ControlAction::AddCandidates(add)) => {
                let mut members = registered;
                members.extend(add);
                winners_among(e, &members, alpha)
            }
            (_, ControlAction::DeleteCandidates(del)) => {
                let members: Vec<usize> = registered.into_iter().filter(|c| !del.contains(c)).collect();
                winners_among(e, &members, alpha)
            }
            (ControlType::PC(rule), ControlAction::PartitionCandidates(c1)) => two_stage_candidates(e, alpha, rule, false, c1),
            (ControlType::RPC(rule), ControlAction::PartitionCandidates(c1)) => two_stage_candidates(e, alpha, rule, true, c1),
            (_, ControlAction::AddVoters(add)) => {
                let mut voters = e.voters().to_vec();
                for (b, &k) in inst.pool.iter().zip(add) {
                    if k > 0 {
                        voters.push(VoterBlock::new(b.pref.clone(), k));
                    }
                }
                winners(&e.with_voters(voters).expect("pool voters range over the candidates"), alpha)
            }
            (_, ControlAction::DeleteVoters(del)) => {
                let left: Vec<u64> = e.voters().iter().zip(del).map(|(b, &k)| b.multiplicity - k).collect();
                winners(&e.with_counts(&left), alpha)
            }
            (ControlType::PV(rule), ControlAction::PartitionVoters(v1)) => two_stage_voters(e, alpha, rule, v1),
            _ => panic!("action does not match control type"),
        }
    }
}

/// Checks the action against the instance rules, then evaluates it literally.
pub fn replay(tag: ControlTag, inst: &ControlInstance, action: &ControlAction, alpha: Alpha, model: WinnerModel) -> Result<bool> {
    final_winners(tag.kind, inst, action, alpha)?;
    let w = reference::control_outcome(tag.kind, inst, action, alpha);
    Ok(goal_met(&w, inst.target, tag.mode, model))
}

fn binom(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r.saturating_mul(n - i) / (i + 1);
    }
    r
}

fn subsets_up_to(n: usize, k: usize) -> u128 {
    (0..=k.min(n)).map(|j| binom(n as u128, j as u128)).fold(0u128, |a, b| a.saturating_add(b))
}

/// Number of vectors 0 <= x_i <= caps_i with sum exactly s, for s = 0..=max.
fn vector_counts(caps: &[u64], max: u64) -> Vec<u128> {
    let max = max as usize;
    let mut ways = vec![0u128; max + 1];
    ways[0] = 1;
    for &c in caps {
        let mut next = vec![0u128; max + 1];
        for (s, &w) in ways.iter().enumerate() {
            if w == 0 {
                continue;
            }
            for x in 0..=(c as usize).min(max - s) {
                next[s + x] = next[s + x].saturating_add(w);
            }
        }
        ways = next;
    }
    ways
}

/// Calls `f` on each vector with the given exact sum; stops when `f` returns true.
fn vectors_with_sum(caps: &[u64], sum: u64, f: &mut dyn FnMut(&[u64]) -> bool) -> bool {
    fn rec(caps: &[u64], i: usize, left: u64, cur: &mut Vec<u64>, f: &mut dyn FnMut(&[u64]) -> bool) -> bool {
        if i == caps.len() {
            return left == 0 && f(cur);
        }
        let rest: u64 = caps[i + 1..].iter().sum();
        let lo = left.saturating_sub(rest);
        for x in lo..=caps[i].min(left) {
            cur[i] = x;
            if rec(caps, i + 1, left - x, cur, f) {
                return true;
            }
        }
        false
    }
    let mut cur = vec![0; caps.len()];
    rec(caps, 0, sum, &mut cur, f)
}

fn all_vectors(caps: &[u64], f: &mut dyn FnMut(&[u64]) -> bool) -> bool {
    fn rec(caps: &[u64], i: usize, cur: &mut Vec<u64>, f: &mut dyn FnMut(&[u64]) -> bool) -> bool {
        if i == caps.len() {
            return f(cur);
        }
        for x in 0..=caps[i] {
            cur[i] = x;
            if rec(caps, i + 1, cur, f) {
                return true;
            }
        }
        false
    }
    let mut cur = vec![0; caps.len()];
    rec(caps, 0, &mut cur, f)
}

fn check_target(e: &Election, p: usize) -> Result<()> {
    if p < e.m() {
        Ok(())
    } else {
        Err(Error::UnknownCandidate(format!("#{p}")))
    }
}

fn multiplicities(blocks: &[VoterBlock]) -> Vec<u64> {
    blocks.iter().map(|b| b.multiplicity).collect()
}

/// Every preference a bribed voter may report.
fn preference_space(e: &Election) -> Vec<Preference> {
    let m = e.m();
    if e.is_rational() {
        (0..m).permutations(m).map(Preference::Order).collect()
    } else {
        let pairs = crate::election::pair_count(m);
        (0..1u64 << pairs)
            .map(|mask| Preference::Table(PairTable::from_bits(m, (0..pairs).map(|b| mask >> b & 1 == 1).collect())))
            .collect()
    }
}

/// Unit voters chosen for bribery: the first `counts[b]` units of each block.
fn chosen_units(e: &Election, counts: &[u64]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut base = 0usize;
    for (b, &k) in e.voters().iter().zip(counts) {
        out.extend(base..base + k as usize);
        base += b.multiplicity as usize;
    }
    out
}

/// The election after replacing the listed unit voters' preferences.
pub fn apply_bribery(e: &Election, bribes: &[Bribe]) -> Result<Election> {
    let mut units: Vec<VoterBlock> = e.expanded().voters().to_vec();
    for b in bribes {
        let slot = units.get_mut(b.voter).ok_or_else(|| Error::InvalidInstance(format!("no voter {}", b.voter)))?;
        slot.pref = b.pref.clone();
    }
    e.with_voters(units)
}

/// Exhaustive bribery: change the preferences of at most `k` voters.
pub fn bribery_oracle(e: &Election, alpha: Alpha, p: usize, k: u64, mode: Mode, model: WinnerModel, cap: u64) -> Result<Verdict> {
    check_target(e, p)?;
    let prefs = preference_space(e);
    let caps = multiplicities(e.voters());
    let k = k.min(e.voter_count());
    let counts = vector_counts(&caps, k);
    let size = (0..=k as usize).fold(0u128, |acc, j| {
        acc.saturating_add(counts[j].saturating_mul(binom(prefs.len() as u128 + j as u128 - 1, j as u128).max(1)))
    });
    if size > cap as u128 {
        return Ok(Verdict::capped());
    }
    let mut nodes = 0u64;
    let mut found = None;
    for j in 0..=k {
        let done = vectors_with_sum(&caps, j, &mut |bribed| {
            let left: Vec<u64> = caps.iter().zip(bribed).map(|(c, b)| c - b).collect();
            let base = e.with_counts(&left);
            for combo in (0..prefs.len()).combinations_with_replacement(j as usize) {
                nodes += 1;
                let mut voters = base.voters().to_vec();
                voters.extend(combo.iter().map(|&i| VoterBlock::new(prefs[i].clone(), 1)));
                let after = e.with_voters(voters).expect("preferences range over the candidates");
                if goal_met(&reference::winners(&after, alpha), p, mode, model) {
                    let units = chosen_units(e, bribed);
                    found = Some(units.into_iter().zip(&combo).map(|(voter, &i)| Bribe { voter, pref: prefs[i].clone() }).collect());
                    return true;
                }
            }
            false
        });
        if done {
            break;
        }
    }
    Ok(Verdict::finish(found.map(Witness::Bribery), nodes))
}

/// Exhaustive microbribery: flip at most `k` pairwise entries of unit voters.
/// A YES witness has the minimum possible number of flips.
pub fn microbribery_oracle(e: &Election, alpha: Alpha, p: usize, k: u64, mode: Mode, model: WinnerModel, cap: u64) -> Result<Verdict> {
    check_target(e, p)?;
    let m = e.m();
    let units: Vec<PairTable> = e.expanded().voters().iter().map(|v| v.pref.to_table(m)).collect();
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
    let entries: Vec<(usize, usize, usize)> = (0..units.len()).flat_map(|u| pairs.iter().map(move |&(i, j)| (u, i, j))).collect();
    let k = (k as usize).min(entries.len());
    let size = subsets_up_to(entries.len(), k);
    if size > cap as u128 {
        return Ok(Verdict::capped());
    }
    let mut nodes = 0;
    for s in 0..=k {
        for combo in (0..entries.len()).combinations(s) {
            nodes += 1;
            let mut tables = units.clone();
            let mut flips = Vec::with_capacity(s);
            for &x in &combo {
                let (u, i, j) = entries[x];
                let (winner, loser) = if tables[u].prefers(i, j) { (j, i) } else { (i, j) };
                tables[u].set(winner, loser);
                flips.push(Microbribe { voter: u, winner, loser });
            }
            let after = e.with_voters(tables.into_iter().map(|t| VoterBlock::new(Preference::Table(t), 1)).collect())?;
            if goal_met(&reference::winners(&after, alpha), p, mode, model) {
                return Ok(Verdict::finish(Some(Witness::Microbribery(flips)), nodes));
            }
        }
    }
    Ok(Verdict::finish(None, nodes))
}

/// Exhaustive control over the tag's whole action space (control tags and Condorcet tags).
pub fn control_oracle(tag: ProblemTag, inst: &ControlInstance, alpha: Alpha, model: WinnerModel, cap: u64) -> Result<Verdict> {
    inst.validate()?;
    let e = &inst.election;
    let p = inst.target;
    let vcaps = multiplicities(e.voters());
    match tag {
        ProblemTag::CondorcetCcdv => {
            let counts = vector_counts(&vcaps, inst.budget.min(e.voter_count()));
            let size = counts.iter().fold(0u128, |a, &b| a.saturating_add(b));
            if size > cap as u128 {
                return Ok(Verdict::capped());
            }
            let mut nodes = 0;
            let mut found = None;
            for s in 0..counts.len() as u64 {
                if vectors_with_sum(&vcaps, s, &mut |del| {
                    nodes += 1;
                    let left: Vec<u64> = vcaps.iter().zip(del).map(|(c, d)| c - d).collect();
                    let hit = reference::condorcet(&e.with_counts(&left)) == Some(p);
                    if hit {
                        found = Some(ControlAction::DeleteVoters(del.to_vec()));
                    }
                    hit
                }) {
                    break;
                }
            }
            Ok(Verdict::finish(found.map(Witness::Control), nodes))
        }
        ProblemTag::CondorcetCcpv => {
            let size = vcaps.iter().fold(1u128, |a, &c| a.saturating_mul(c as u128 + 1));
            if size > cap as u128 {
                return Ok(Verdict::capped());
            }
            let mut nodes = 0;
            let mut found = None;
            all_vectors(&vcaps, &mut |v1| {
                nodes += 1;
                let v2: Vec<u64> = vcaps.iter().zip(v1).map(|(c, a)| c - a).collect();
                let a = reference::condorcet(&e.with_counts(v1));
                let b = reference::condorcet(&e.with_counts(&v2));
                let hit = match (a, b) {
                    (Some(a), Some(b)) if a == b => a == p,
                    (Some(a), Some(b)) => reference::condorcet(&e.restrict_candidates(&[a.min(b), a.max(b)]))
                        .map(|w| if w == 0 { a.min(b) } else { a.max(b) })
                        == Some(p),
                    _ => false,
                };
                if hit {
                    found = Some(ControlAction::PartitionVoters(v1.to_vec()));
                }
                hit
            });
            Ok(Verdict::finish(found.map(Witness::Control), nodes))
        }
        ProblemTag::Control(ct) => control_search(ct, inst, alpha, model, cap),
        other => Err(Error::InvalidInstance(format!("{other} is not a control problem"))),
    }
}

fn control_search(tag: ControlTag, inst: &ControlInstance, alpha: Alpha, model: WinnerModel, cap: u64) -> Result<Verdict> {
    let e = &inst.election;
    let p = inst.target;
    let mut nodes = 0u64;
    let mut found: Option<ControlAction> = None;
    let mut test = |a: ControlAction, nodes: &mut u64| -> bool {
        *nodes += 1;
        let w = reference::control_outcome(tag.kind, inst, &a, alpha);
        let hit = goal_met(&w, p, tag.mode, model);
        if hit {
            found = Some(a);
        }
        hit
    };
    let k = inst.budget;
    match tag.kind {
        ControlType::AC | ControlType::ACu => {
            let d = &inst.spoilers;
            let lim = if tag.kind == ControlType::ACu { d.len() } else { (k as usize).min(d.len()) };
            let size = subsets_up_to(d.len(), lim);
            if size > cap as u128 {
                return Ok(Verdict::capped());
            }
            'outer: for s in 0..=lim {
                for combo in d.iter().copied().combinations(s) {
                    if test(ControlAction::AddCandidates(combo), &mut nodes) {
                        break 'outer;
                    }
                }
            }
        }
        ControlType::DC => {
            let pool: Vec<usize> = inst.registered().into_iter().filter(|&c| c != p).collect();
            let lim = (k as usize).min(pool.len());
            let size = subsets_up_to(pool.len(), lim);
            if size > cap as u128 {
                return Ok(Verdict::capped());
            }
            'outer: for s in 0..=lim {
                for combo in pool.iter().copied().combinations(s) {
                    if test(ControlAction::DeleteCandidates(combo), &mut nodes) {
                        break 'outer;
                    }
                }
            }
        }
        ControlType::PC(_) | ControlType::RPC(_) => {
            let m = e.m();
            if m >= 100 || (1u128 << m) > cap as u128 {
                return Ok(Verdict::capped());
            }
            for mask in 0u64..1 << m {
                let c1: Vec<usize> = (0..m).filter(|&c| mask >> c & 1 == 1).collect();
                if test(ControlAction::PartitionCandidates(c1), &mut nodes) {
                    break;
                }
            }
        }
        ControlType::AV | ControlType::DV => {
            let caps = if tag.kind == ControlType::AV { multiplicities(&inst.pool) } else { multiplicities(e.voters()) };
            let total: u64 = caps.iter().sum();
            let counts = vector_counts(&caps, k.min(total));
            let size = counts.iter().fold(0u128, |a, &b| a.saturating_add(b));
            if size > cap as u128 {
                return Ok(Verdict::capped());
            }
            let av = tag.kind == ControlType::AV;
            for s in 0..counts.len() as u64 {
                let hit = vectors_with_sum(&caps, s, &mut |v| {
                    let a = if av { ControlAction::AddVoters(v.to_vec()) } else { ControlAction::DeleteVoters(v.to_vec()) };
                    test(a, &mut nodes)
                });
                if hit {
                    break;
                }
            }
        }
        ControlType::PV(_) => {
            let caps = multiplicities(e.voters());
            let size = caps.iter().fold(1u128, |a, &c| a.saturating_mul(c as u128 + 1));
            if size > cap as u128 {
                return Ok(Verdict::capped());
            }
            all_vectors(&caps, &mut |v| test(ControlAction::PartitionVoters(v.to_vec()), &mut nodes));
        }
    }
    Ok(Verdict::finish(found.map(Witness::Control), nodes))
}

/// Exhaustive exact cover search over k-subsets of the family.
pub fn x3c_oracle(x: &X3c, cap: u64) -> Result<Verdict> {
    x.well_formed()?;
    let size = binom(x.sets.len() as u128, x.k as u128);
    if size > cap as u128 {
        return Ok(Verdict::capped());
    }
    let mut nodes = 0;
    for combo in (0..x.sets.len()).combinations(x.k) {
        nodes += 1;
        if x.is_exact_cover(&combo) {
            return Ok(Verdict::finish(Some(Witness::Selection(combo)), nodes));
        }
    }
    Ok(Verdict::finish(None, nodes))
}

/// Exhaustive vertex cover search over subsets of size at most k.
pub fn vertex_cover_oracle(g: &Vc, cap: u64) -> Result<Verdict> {
    g.well_formed()?;
    let n = g.vertices.len();
    let size = subsets_up_to(n, g.k);
    if size > cap as u128 {
        return Ok(Verdict::capped());
    }
    let mut nodes = 0;
    for s in 0..=g.k.min(n) {
        for combo in (0..n).combinations(s) {
            nodes += 1;
            if g.is_cover(&combo) {
                return Ok(Verdict::finish(Some(Witness::Selection(combo)), nodes));
            }
        }
    }
    Ok(Verdict::finish(None, nodes))
}

/// PartitionKind used by a partition control type, if any.
pub fn partition_kind(kind: ControlType) -> Option<PartitionKind> {
    match kind {
        ControlType::PC(_) => Some(PartitionKind::PC),
        ControlType::RPC(_) => Some(PartitionKind::RPC),
        ControlType::PV(_) => Some(PartitionKind::PV),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle() -> Election {
        Election::with_default_names(
            3,
            vec![VoterBlock::order(&[0, 1, 2], 1), VoterBlock::order(&[1, 2, 0], 1), VoterBlock::order(&[2, 0, 1], 1)],
        )
        .unwrap()
    }

    #[test]
    fn zero_budget_is_winner_test() {
        let e = cycle();
        for mode in [Mode::Constructive, Mode::Destructive] {
            for model in [WinnerModel::NonUnique, WinnerModel::Unique] {
                let want = goal_met(&e.winners(Alpha::HALF, WinnerModel::NonUnique).unwrap(), 0, mode, model);
                assert_eq!(bribery_oracle(&e, Alpha::HALF, 0, 0, mode, model, DEFAULT_NODE_CAP).unwrap().is_yes(), want);
                assert_eq!(microbribery_oracle(&e, Alpha::HALF, 0, 0, mode, model, DEFAULT_NODE_CAP).unwrap().is_yes(), want);
                let inst = ControlInstance::new(e.clone(), 0, 0);
                let tag = ProblemTag::Control(ControlTag::new(mode, ControlType::DV));
                assert_eq!(control_oracle(tag, &inst, Alpha::HALF, model, DEFAULT_NODE_CAP).unwrap().is_yes(), want);
            }
        }
    }

    #[test]
    fn cap_is_reported() {
        let e = cycle();
        let v = bribery_oracle(&e, Alpha::HALF, 0, 3, Mode::Constructive, WinnerModel::Unique, 10).unwrap();
        assert_eq!(v.decision, Decision::CapExceeded);
    }

    #[test]
    fn graph_oracles() {
        let tri = Vc::with_default_names(3, vec![(0, 1), (1, 2), (2, 0)], 1);
        assert!(!vertex_cover_oracle(&tri, 1000).unwrap().is_yes());
        assert!(vertex_cover_oracle(&Vc { k: 2, ..tri }, 1000).unwrap().is_yes());
        let x = X3c::with_default_names(1, vec![[0, 1, 2]]);
        assert!(x3c_oracle(&x, 1000).unwrap().is_yes());
        let y = X3c::with_default_names(2, vec![[0, 1, 2], [2, 3, 4], [1, 4, 5]]);
        assert!(!x3c_oracle(&y, 1000).unwrap().is_yes());
    }

    #[test]
    fn bribery_full_control_two_candidates() {
        let e = Election::with_default_names(2, vec![VoterBlock::order(&[1, 0], 3)]).unwrap();
        assert!(bribery_oracle(&e, Alpha::ONE, 0, 3, Mode::Constructive, WinnerModel::Unique, 1000).unwrap().is_yes());
        assert!(!bribery_oracle(&e, Alpha::ONE, 0, 1, Mode::Constructive, WinnerModel::NonUnique, 1000).unwrap().is_yes());
        assert!(bribery_oracle(&e, Alpha::ONE, 0, 2, Mode::Constructive, WinnerModel::Unique, 1000).unwrap().is_yes());
    }
}
