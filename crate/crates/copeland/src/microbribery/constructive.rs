use super::networks::{build_it, build_jt, build_lt, BriberyNetwork};
use super::{realize, ContestChange, Microbribe, MicrobriberyPlan};
use crate::alpha::Alpha;
use crate::election::{apply_model, argmax, Election, WinnerModel};
use crate::error::{Error, Result};
use crate::flow::{solve_min_cost, Flow};
use std::collections::BTreeMap;

/// One iteration of the threshold loop.
#[derive(Clone, Debug)]
pub struct ThresholdRun {
    pub t: u64,
    pub network: BriberyNetwork,
    pub flow: Option<Flow>,
    /// flowcost - B (F - T), when the flow exists and saturates p's exit.
    pub kappa: Option<u64>,
    pub plan: Option<MicrobriberyPlan>,
    /// Whether the decoded plan makes p win under the requested model.
    pub achieves_goal: bool,
}

fn network(e: &Election, alpha: Alpha, p: usize, t: u64, model: WinnerModel) -> Result<BriberyNetwork> {
    if e.voter_count() % 2 == 1 {
        build_it(e, p, t, model)
    } else if alpha.is_zero() {
        build_jt(e, p, t, model)
    } else if alpha.is_one() {
        build_lt(e, p, t, model)
    } else {
        Err(Error::Unsupported("constructive microbribery for 0 < alpha < 1 with an even number of voters".into()))
    }
}

/// Contest changes signalled by a flow; a win for p overrides a tie on the same pair.
pub(crate) fn decode(net: &BriberyNetwork, flow: &Flow) -> Vec<ContestChange> {
    let mut by_pair: BTreeMap<(usize, usize), ContestChange> = BTreeMap::new();
    for (meaning, &f) in net.meaning.iter().zip(&flow.on_arc) {
        if let (Some(ch), true) = (meaning, f > 0) {
            let entry = by_pair.entry(ch.pair()).or_insert(*ch);
            if matches!(ch, ContestChange::Win { .. }) {
                *entry = *ch;
            }
        }
    }
    by_pair.into_values().collect()
}

/// Every iteration of the threshold loop, for inspection.
pub fn threshold_runs(e: &Election, alpha: Alpha, p: usize, model: WinnerModel) -> Result<Vec<ThresholdRun>> {
    if p >= e.m() {
        return Err(Error::UnknownCandidate(format!("#{p}")));
    }
    let voters = e.voter_count();
    let vs = e.vs_matrix();
    let first = if model == WinnerModel::Unique { 1 } else { 0 };
    let mut runs = Vec::new();
    for t in first..e.m() as u64 {
        let network = network(e, alpha, p, t, model)?;
        let flow = solve_min_cost(&network.net, network.target);
        let mut run = ThresholdRun { t, network, flow, kappa: None, plan: None, achieves_goal: false };
        if let Some(f) = &run.flow {
            if f.on_arc[run.network.p_exit] >= t {
                let kappa = f.cost(&run.network.net) - run.network.big_b * (run.network.target - t);
                let changes = decode(&run.network, f);
                let cost = changes.iter().map(|c| c.cost(&vs, voters).expect("decoded ties need even electorates")).sum();
                let mut after = vs.clone();
                for ch in &changes {
                    ch.apply(&mut after, voters);
                }
                let score_alpha = if voters % 2 == 0 { alpha } else { Alpha::ZERO };
                let winners = apply_model(argmax(&after.scores(score_alpha)), model);
                run.achieves_goal = match model {
                    WinnerModel::NonUnique => winners.contains(&p),
                    WinnerModel::Unique => winners == [p],
                };
                run.kappa = Some(kappa);
                run.plan = Some(MicrobriberyPlan { cost, changes });
            }
        }
        runs.push(run);
    }
    Ok(runs)
}

/// Cheapest microbribery making `p` win, or None if none exists.
/// Unsupported for 0 < alpha < 1 with an even number of voters.
pub fn constructive_min_cost(e: &Election, alpha: Alpha, p: usize, model: WinnerModel) -> Result<Option<MicrobriberyPlan>> {
    if p >= e.m() {
        return Err(Error::UnknownCandidate(format!("#{p}")));
    }
    if e.voter_count() % 2 == 0 && !alpha.is_zero() && !alpha.is_one() {
        return Err(Error::Unsupported("constructive microbribery for 0 < alpha < 1 with an even number of voters".into()));
    }
    let winners = e.winners(alpha, model)?;
    if winners.contains(&p) {
        return Ok(Some(MicrobriberyPlan::free()));
    }
    let mut best: Option<(u64, MicrobriberyPlan)> = None;
    for run in threshold_runs(e, alpha, p, model)? {
        if let (Some(kappa), Some(plan), true) = (run.kappa, run.plan, run.achieves_goal) {
            if best.as_ref().map_or(true, |(k, _)| kappa < *k) {
                best = Some((kappa, plan));
            }
        }
    }
    Ok(best.map(|(_, plan)| plan))
}

/// Flips of total size at most `k` that make `p` win, if any exist.
pub fn constructive_microbribery(e: &Election, alpha: Alpha, p: usize, k: u64, model: WinnerModel) -> Result<Option<Vec<Microbribe>>> {
    Ok(constructive_min_cost(e, alpha, p, model)?.filter(|plan| plan.cost <= k).map(|plan| realize(e, &plan.changes)))
}
