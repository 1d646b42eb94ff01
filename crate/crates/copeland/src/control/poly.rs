use super::{ControlAction, ControlInstance};
use crate::alpha::Alpha;
use crate::election::{apply_model, argmax, VsMatrix, WinnerModel};
use crate::error::{Error, Result};
use crate::two_stage::{PartitionKind, TieRule};

/// Scaled score of `a` in the two-candidate election {a, b}.
fn pair_score(vs: &VsMatrix, alpha: Alpha, a: usize, b: usize) -> i64 {
    match vs.get(a, b) {
        v if v > 0 => alpha.den() as i64,
        0 => alpha.num() as i64,
        _ => 0,
    }
}

fn score_in(vs: &VsMatrix, alpha: Alpha, members: &[usize], c: usize) -> i64 {
    members.iter().filter(|&&x| x != c).map(|&x| pair_score(vs, alpha, c, x)).sum()
}

fn beats_target(margin: i64, model: WinnerModel) -> bool {
    match model {
        WinnerModel::NonUnique => margin > 0,
        WinnerModel::Unique => margin >= 0,
    }
}

/// Up to `take` candidates with positive gain, highest gain first, ties by ascending id.
fn best_gains(mut gains: Vec<(i64, usize)>, take: usize) -> (i64, Vec<usize>) {
    gains.retain(|&(g, _)| g > 0);
    gains.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    gains.truncate(take);
    (gains.iter().map(|g| g.0).sum(), gains.iter().map(|g| g.1).collect())
}

/// Destructive control by adding candidates. With `unlimited` the budget is |D|.
pub fn dcac_greedy(inst: &ControlInstance, alpha: Alpha, model: WinnerModel, unlimited: bool) -> Result<Option<ControlAction>> {
    inst.validate()?;
    let vs = inst.election.vs_matrix();
    let p = inst.target;
    let c_set = inst.registered();
    let d_set = &inst.spoilers;
    let k = if unlimited { d_set.len() } else { (inst.budget as usize).min(d_set.len()) };
    let mut rivals: Vec<usize> = c_set.iter().chain(d_set.iter()).copied().filter(|&c| c != p).collect();
    rivals.sort_unstable();
    for c in rivals {
        let spoiler = inst.is_spoiler(c);
        if spoiler && k == 0 {
            continue;
        }
        let mut base = c_set.clone();
        if spoiler {
            base.push(c);
        }
        let mut a = score_in(&vs, alpha, &base, c) - score_in(&vs, alpha, &base, p);
        let gains = d_set
            .iter()
            .filter(|&&d| d != c)
            .map(|&d| (pair_score(&vs, alpha, c, d) - pair_score(&vs, alpha, p, d), d))
            .collect();
        let (g, chosen) = best_gains(gains, if spoiler { k - 1 } else { k });
        a += g;
        if beats_target(a, model) {
            let mut add = chosen;
            if spoiler {
                add.push(c);
            }
            add.sort_unstable();
            return Ok(Some(ControlAction::AddCandidates(add)));
        }
    }
    Ok(None)
}

/// Candidates to delete from `members` (at most `k`, never p) so that p is beaten
/// by some rival under `model`.
fn dcdc_core(vs: &VsMatrix, alpha: Alpha, members: &[usize], p: usize, k: usize, model: WinnerModel) -> Option<Vec<usize>> {
    for &c in members.iter().filter(|&&c| c != p) {
        let mut d = score_in(vs, alpha, members, c) - score_in(vs, alpha, members, p);
        let gains = members
            .iter()
            .filter(|&&x| x != p && x != c)
            .map(|&x| (pair_score(vs, alpha, p, x) - pair_score(vs, alpha, c, x), x))
            .collect();
        let (g, mut chosen) = best_gains(gains, k);
        d += g;
        if beats_target(d, model) {
            chosen.sort_unstable();
            return Some(chosen);
        }
    }
    None
}

/// Destructive control by deleting at most `budget` candidates.
pub fn dcdc_greedy(inst: &ControlInstance, alpha: Alpha, model: WinnerModel) -> Result<Option<ControlAction>> {
    inst.validate()?;
    let members = inst.registered();
    let k = inst.budget.min(members.len() as u64) as usize;
    Ok(dcdc_core(&inst.election.vs_matrix(), alpha, &members, inst.target, k, model).map(ControlAction::DeleteCandidates))
}

/// Destructive control by partition of candidates, with (`RPC`) or without (`PC`) run-off.
pub fn dc_partition(inst: &ControlInstance, alpha: Alpha, kind: PartitionKind, rule: TieRule, model: WinnerModel) -> Result<Option<ControlAction>> {
    inst.validate()?;
    if kind == PartitionKind::PV {
        return Err(Error::InvalidInstance("dc_partition handles candidate partitions only".into()));
    }
    if !inst.spoilers.is_empty() {
        return Err(Error::InvalidInstance("partition instances have no spoilers".into()));
    }
    let vs = inst.election.vs_matrix();
    let p = inst.target;
    let all: Vec<usize> = (0..inst.election.m()).collect();
    let k = all.len().saturating_sub(1);
    // p leaves the first round without a (unique) win in C' = C - deleted.
    let first_round = |model: WinnerModel| {
        dcdc_core(&vs, alpha, &all, p, k, model)
            .map(|del| ControlAction::PartitionCandidates(all.iter().copied().filter(|c| !del.contains(c)).collect()))
    };
    let eliminating_model = match rule {
        TieRule::TE => WinnerModel::Unique,
        TieRule::TP => WinnerModel::NonUnique,
    };
    if let Some(a) = first_round(eliminating_model) {
        return Ok(Some(a));
    }
    if rule == TieRule::TE || model == WinnerModel::NonUnique {
        return Ok(None);
    }
    // TP, unique winners: p wins every sub-election containing it.
    let d2: Vec<usize> = all.iter().copied().filter(|&c| c != p && vs.get(p, c) == 0).collect();
    if d2.is_empty() {
        return Ok(None);
    }
    let first: Vec<usize> = if alpha.is_one() {
        all.iter().copied().filter(|&c| c != d2[0]).collect()
    } else {
        all.iter().copied().filter(|&c| c == p || vs.get(p, c) > 0).collect()
    };
    Ok(Some(ControlAction::PartitionCandidates(first)))
}

/// Constructive control by adding any number of spoilers, for alpha in {0, 1}.
pub fn ccacu_greedy(inst: &ControlInstance, alpha: Alpha, model: WinnerModel) -> Result<Option<ControlAction>> {
    inst.validate()?;
    if !alpha.is_zero() && !alpha.is_one() {
        return Err(Error::Unsupported("constructive unlimited adding of candidates needs alpha in {0, 1}".into()));
    }
    let mut order = inst.spoilers.clone();
    order.sort_unstable();
    let kept = ccacu_fixed_point_with_order(inst, alpha, model, &order);
    let vs = inst.election.vs_matrix();
    let mut members = inst.registered();
    members.extend(&kept);
    let winners = apply_model(argmax(&vs.scores_within(&members, alpha)), model);
    let pos = members.iter().position(|&c| c == inst.target).unwrap();
    Ok(winners.contains(&pos).then_some(ControlAction::AddCandidates(kept)))
}

/// Spoilers left after starting from those p fully defeats and repeatedly dropping the
/// first one (in `order`) that outscores p.
pub fn ccacu_fixed_point_with_order(inst: &ControlInstance, alpha: Alpha, model: WinnerModel, order: &[usize]) -> Vec<usize> {
    let vs = inst.election.vs_matrix();
    let p = inst.target;
    let c_set = inst.registered();
    let mut kept: Vec<usize> = order.iter().copied().filter(|&d| inst.is_spoiler(d) && pair_score(&vs, alpha, p, d) == alpha.den() as i64).collect();
    loop {
        let mut members = c_set.clone();
        members.extend(&kept);
        let sp = score_in(&vs, alpha, &members, p);
        match kept.iter().position(|&d| beats_target(score_in(&vs, alpha, &members, d) - sp, model)) {
            Some(i) => {
                kept.remove(i);
            }
            None => {
                kept.sort_unstable();
                return kept;
            }
        }
    }
}
