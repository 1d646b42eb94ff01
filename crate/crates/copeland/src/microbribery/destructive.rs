use super::{realize, tiecost_vs, wincost_vs, ContestChange, Microbribe, MicrobriberyPlan};
use crate::alpha::Alpha;
use crate::election::{apply_model, argmax, Election, VsMatrix, WinnerModel};
use crate::error::{Error, Result};

/// Cheapest way to make `ci` win `w1` contests it lost, win `w2` contests it tied and tie `t`
/// contests it lost, all against candidates other than `p`.
fn promote_choice(vs: &VsMatrix, voters: u64, p: usize, ci: usize, w1: usize, w2: usize, t: usize) -> Option<(u64, Vec<ContestChange>)> {
    let others = (0..vs.m()).filter(|&x| x != p && x != ci);
    let lost: Vec<usize> = others.clone().filter(|&x| vs.get(ci, x) < 0).collect();
    let tied: Vec<usize> = others.filter(|&x| vs.get(ci, x) == 0).collect();
    choose(vs, voters, &lost, &tied, w1, w2, t, |x| (ci, x))
}

/// Cheapest way to make `p` lose `l1` contests it won, lose `l2` contests it tied and tie `t`
/// contests it won, all against candidates other than `ci`.
fn demote_choice(vs: &VsMatrix, voters: u64, p: usize, ci: usize, l1: usize, l2: usize, t: usize) -> Option<(u64, Vec<ContestChange>)> {
    let others = (0..vs.m()).filter(|&y| y != p && y != ci);
    let won: Vec<usize> = others.clone().filter(|&y| vs.get(p, y) > 0).collect();
    let tied: Vec<usize> = others.filter(|&y| vs.get(p, y) == 0).collect();
    choose(vs, voters, &won, &tied, l1, l2, t, |y| (y, p))
}

/// Shared greedy. `flipped` are the contests whose winner changes side (cost wincost, or
/// tiecost for a tie), `tied` those currently tied (cost 1 to decide). `dir(x)` gives the
/// (new winner, new loser) for a flipped or decided contest against x.
#[allow(clippy::too_many_arguments)]
fn choose(
    vs: &VsMatrix,
    voters: u64,
    flipped: &[usize],
    tied: &[usize],
    wins: usize,
    decide: usize,
    ties: usize,
    dir: impl Fn(usize) -> (usize, usize),
) -> Option<(u64, Vec<ContestChange>)> {
    let even = voters % 2 == 0;
    if decide > tied.len() || wins + ties > flipped.len() || (!even && ties > 0) {
        return None;
    }
    let mut ranked: Vec<(u64, usize)> = flipped
        .iter()
        .map(|&x| {
            let (w, l) = dir(x);
            let c = if even { tiecost_vs(vs, w, l, voters).unwrap() } else { wincost_vs(vs, w, l) };
            (c, x)
        })
        .collect();
    ranked.sort_unstable();
    let mut cost = 0;
    let mut changes = Vec::new();
    for (k, &(c, x)) in ranked.iter().take(wins + ties).enumerate() {
        let (w, l) = dir(x);
        if k < wins {
            cost += if even { c + 1 } else { c };
            changes.push(ContestChange::Win { winner: w, loser: l });
        } else {
            cost += c;
            changes.push(ContestChange::Tie(w, l));
        }
    }
    for &x in tied.iter().take(decide) {
        let (w, l) = dir(x);
        cost += 1;
        changes.push(ContestChange::Win { winner: w, loser: l });
    }
    Some((cost, changes))
}

/// Minimum cost of raising `ci` by w1 + (1-alpha) w2 + alpha t points; None is infinity.
pub fn promote_cost(vs: &VsMatrix, voters: u64, p: usize, ci: usize, w1: usize, w2: usize, t: usize) -> Option<u64> {
    promote_choice(vs, voters, p, ci, w1, w2, t).map(|(c, _)| c)
}

/// Minimum cost of lowering `p` by l1 + alpha l2 + (1-alpha) t points; None is infinity.
pub fn demote_cost(vs: &VsMatrix, voters: u64, p: usize, ci: usize, l1: usize, l2: usize, t: usize) -> Option<u64> {
    demote_choice(vs, voters, p, ci, l1, l2, t).map(|(c, _)| c)
}

struct Option3 {
    gain: i64,
    cost: u64,
    args: (usize, usize, usize),
}

fn promote_table(vs: &VsMatrix, voters: u64, alpha: Alpha, p: usize, ci: usize) -> Vec<Option3> {
    let (d, b) = (alpha.den() as i64, alpha.num() as i64);
    let m = vs.m();
    let mut out = Vec::new();
    for w1 in 0..=m {
        for w2 in 0..=m {
            for t in 0..=m {
                if let Some(cost) = promote_cost(vs, voters, p, ci, w1, w2, t) {
                    out.push(Option3 { gain: d * w1 as i64 + (d - b) * w2 as i64 + b * t as i64, cost, args: (w1, w2, t) });
                }
            }
        }
    }
    out
}

fn demote_table(vs: &VsMatrix, voters: u64, alpha: Alpha, p: usize, ci: usize) -> Vec<Option3> {
    let (d, b) = (alpha.den() as i64, alpha.num() as i64);
    let m = vs.m();
    let mut out = Vec::new();
    for l1 in 0..=m {
        for l2 in 0..=m {
            for t in 0..=m {
                if let Some(cost) = demote_cost(vs, voters, p, ci, l1, l2, t) {
                    out.push(Option3 { gain: d * l1 as i64 + b * l2 as i64 + (d - b) * t as i64, cost, args: (l1, l2, t) });
                }
            }
        }
    }
    out
}

/// Cheapest microbribery that stops `p` from winning, or None when no microbribery can.
pub fn destructive_min_cost(e: &Election, alpha: Alpha, p: usize, model: WinnerModel) -> Result<Option<MicrobriberyPlan>> {
    if p >= e.m() {
        return Err(Error::UnknownCandidate(format!("#{p}")));
    }
    let vs = e.vs_matrix();
    let voters = e.voter_count();
    let winners = apply_model(argmax(&vs.scores(alpha)), model);
    if !winners.contains(&p) {
        return Ok(Some(MicrobriberyPlan::free()));
    }
    let strict = model == WinnerModel::NonUnique;
    let mut best: Option<(u64, usize, ContestChange, (usize, usize, usize), (usize, usize, usize), VsMatrix)> = None;
    for ci in (0..e.m()).filter(|&c| c != p) {
        let mut forced = vec![ContestChange::Win { winner: p, loser: ci }, ContestChange::Win { winner: ci, loser: p }];
        if voters % 2 == 0 {
            forced.push(ContestChange::Tie(p, ci));
        }
        for change in forced {
            let kj = change.cost(&vs, voters).expect("even electorate");
            let mut v2 = vs.clone();
            change.apply(&mut v2, voters);
            let sc_ci = v2.score(alpha, ci) as i64;
            let sc_p = v2.score(alpha, p) as i64;
            let pro = promote_table(&v2, voters, alpha, p, ci);
            let dem = demote_table(&v2, voters, alpha, p, ci);
            for a in &pro {
                for b in &dem {
                    let margin = sc_ci + a.gain + b.gain - sc_p;
                    let ok = if strict { margin > 0 } else { margin >= 0 };
                    if !ok {
                        continue;
                    }
                    let total = kj + a.cost + b.cost;
                    if best.as_ref().map_or(true, |bst| total < bst.0) {
                        best = Some((total, ci, change, a.args, b.args, v2.clone()));
                    }
                }
            }
        }
    }
    Ok(best.map(|(cost, ci, change, (w1, w2, t1), (l1, l2, t2), v2)| {
        let mut changes = Vec::new();
        if change.cost(&vs, voters) != Some(0) {
            changes.push(change);
        }
        changes.extend(promote_choice(&v2, voters, p, ci, w1, w2, t1).unwrap().1);
        changes.extend(demote_choice(&v2, voters, p, ci, l1, l2, t2).unwrap().1);
        MicrobriberyPlan { cost, changes }
    }))
}

/// Flips of total size at most `k` that stop `p` from winning, if any exist.
pub fn destructive_microbribery(e: &Election, alpha: Alpha, p: usize, k: u64, model: WinnerModel) -> Result<Option<Vec<Microbribe>>> {
    Ok(destructive_min_cost(e, alpha, p, model)?.filter(|plan| plan.cost <= k).map(|plan| realize(e, &plan.changes)))
}
