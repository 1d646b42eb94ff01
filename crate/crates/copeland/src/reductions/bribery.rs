//! X3C to bribery, with guard candidates that every useful bribe must involve.

use super::{element_names, out_of_range, scaled, Claims, Cmp, ReduceOptions, ReducedInstance, WitnessPlan, X3c};
use crate::alpha::Alpha;
use crate::control::{ControlInstance, ProblemTag};
use crate::election::{Election, Mode, VoterBlock, WinnerModel};
use crate::error::Result;

/// `TwoGuards` uses guards u, v (constructive unique / destructive nonunique);
/// `FourGuards` uses s, t, u, v (constructive nonunique / destructive unique).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BriberyVariant {
    TwoGuards,
    FourGuards,
}

impl BriberyVariant {
    pub fn model_for(self, mode: Mode) -> WinnerModel {
        match (self, mode) {
            (BriberyVariant::TwoGuards, Mode::Constructive) | (BriberyVariant::FourGuards, Mode::Destructive) => WinnerModel::Unique,
            _ => WinnerModel::NonUnique,
        }
    }

    /// The variant whose construction handles (mode, model).
    pub fn for_goal(mode: Mode, model: WinnerModel) -> BriberyVariant {
        if BriberyVariant::TwoGuards.model_for(mode) == model {
            BriberyVariant::TwoGuards
        } else {
            BriberyVariant::FourGuards
        }
    }
}

struct Builder {
    voters: Vec<VoterBlock>,
    units: usize,
}

impl Builder {
    fn push(&mut self, parts: &[&[usize]], k: u64) -> usize {
        let order: Vec<usize> = parts.concat();
        let at = self.units;
        if k > 0 {
            self.voters.push(VoterBlock::order(&order, k));
            self.units += k as usize;
        }
        at
    }
}

pub fn x3c_to_bribery_uv(x: &X3c, variant: BriberyVariant, mode: Mode, alpha: Alpha, opts: ReduceOptions) -> Result<ReducedInstance> {
    let model = variant.model_for(mode);
    let problem = ProblemTag::Bribery(mode);
    if let Err(e) = x.well_formed() {
        return out_of_range(opts, problem, alpha, model, || Ok(false), e.to_string());
    }
    if !x.covers_ground() {
        return out_of_range(opts, problem, alpha, model, || Ok(false), "the sets do not cover the ground set".into());
    }
    let k = x.k;
    let n = x.sets.len();
    let guards: &[&str] = match variant {
        BriberyVariant::TwoGuards => &["u", "v", "p"],
        BriberyVariant::FourGuards => &["s", "t", "u", "v", "p"],
    };
    let mut names: Vec<String> = guards.iter().map(|s| s.to_string()).collect();
    names.extend(element_names(&x.ground, guards));
    let g = guards.len();
    let b: Vec<usize> = (g..g + 3 * k).collect();
    let rev_b: Vec<usize> = b.iter().rev().copied().collect();
    let p = g - 1;
    let mut bld = Builder { voters: Vec::new(), units: 0 };
    let mut units = Vec::with_capacity(n);
    let kk = k as u64;
    match variant {
        BriberyVariant::TwoGuards => {
            let (u, v) = (0, 1);
            for s in &x.sets {
                let si: Vec<usize> = s.iter().map(|&e| b[e]).collect::<Vec<_>>();
                let mut si_sorted = si.clone();
                si_sorted.sort_unstable();
                let rest: Vec<usize> = b.iter().copied().filter(|c| !si.contains(c)).collect();
                let rest_rev: Vec<usize> = rest.iter().rev().copied().collect();
                let si_rev: Vec<usize> = si_sorted.iter().rev().copied().collect();
                units.push(bld.push(&[&[u, v], &si_sorted, &[p], &rest], 1));
                bld.push(&[&rest_rev, &[p, u, v], &si_rev], 1);
            }
            bld.push(&[&[u, v, p], &b], kk);
            bld.push(&[&[v, u, p], &b], kk);
            bld.push(&[&[u], &rev_b, &[p, v]], kk);
            bld.push(&[&[v], &rev_b, &[p, u]], kk);
            bld.push(&[&b, &[p, u, v]], 1);
        }
        BriberyVariant::FourGuards => {
            let (s_, t, u, v) = (0, 1, 2, 3);
            for s in &x.sets {
                let si: Vec<usize> = s.iter().map(|&e| b[e]).collect::<Vec<_>>();
                let mut si_sorted = si.clone();
                si_sorted.sort_unstable();
                let rest: Vec<usize> = b.iter().copied().filter(|c| !si.contains(c)).collect();
                let rest_rev: Vec<usize> = rest.iter().rev().copied().collect();
                let si_rev: Vec<usize> = si_sorted.iter().rev().copied().collect();
                units.push(bld.push(&[&[s_, t, u, v], &si_sorted, &[p], &rest], 1));
                bld.push(&[&rest_rev, &[p, v, u, t, s_], &si_rev], 1);
            }
            bld.push(&[&[s_, t, u, v, p], &b], kk);
            bld.push(&[&[s_, t, v, u, p], &b], kk);
            bld.push(&[&[u], &rev_b, &[p, s_, v, t]], kk);
            bld.push(&[&[v], &rev_b, &[p, s_, u, t]], kk);
            bld.push(&[&[u, v, t, p, s_], &b], 2 * kk);
            bld.push(&[&[u, v, s_, t, p], &b], 2 * kk);
            bld.push(&[&[s_, t, u, v, p], &b], 3 * kk);
            bld.push(&[&[s_, v, t, u, p], &b], 3 * kk);
            bld.push(&[&[t], &rev_b, &[p, u, s_, v]], 3 * kk);
            bld.push(&[&rev_b, &[p, s_, u, v, t]], kk);
            bld.push(&[&[s_], &rev_b, &[p, u, v, t]], 3 * kk);
            bld.push(&[&rev_b, &[p, s_, v, t, u]], 3 * kk);
            bld.push(&[&b, &[p, u, v, s_, t]], 1);
        }
    }
    let e = Election::new(names, bld.voters)?;
    let (k, n) = (k as i64, n as i64);
    let mut c = Claims::new(&e, alpha);
    match variant {
        BriberyVariant::TwoGuards => {
            let (u, v) = (0, 1);
            c.vs(u, v, Cmp::Eq, 2 * n + 1);
            c.vs(u, p, Cmp::Eq, 2 * k - 1);
            c.vs(v, p, Cmp::Eq, 2 * k - 1);
            for &bi in &b {
                c.vs(u, bi, Cmp::Ge, 2 * k + 1);
                c.vs(v, bi, Cmp::Ge, 2 * k + 1);
                c.vs(bi, p, Cmp::Eq, 1);
            }
            c.score(u, Cmp::Eq, scaled(alpha, 3 * k + 2, 0));
            c.score(v, Cmp::Eq, scaled(alpha, 3 * k + 1, 0));
            c.score(p, Cmp::Eq, 0);
            for &bi in &b {
                c.score(bi, Cmp::Le, scaled(alpha, 3 * k, 0));
            }
        }
        BriberyVariant::FourGuards => {
            let (s_, t, u, v) = (0, 1, 2, 3);
            for (a, z) in [(s_, t), (s_, u), (s_, v), (t, p), (t, u), (v, t), (u, v)] {
                c.vs(a, z, Cmp::Gt, 2 * k);
            }
            for a in [s_, u, v] {
                c.vs(a, p, Cmp::Eq, 2 * k - 1);
            }
            for &bi in &b {
                c.vs(bi, p, Cmp::Eq, 1);
                for a in [s_, t, u, v] {
                    c.vs(a, bi, Cmp::Gt, 2 * k);
                }
            }
            c.score(s_, Cmp::Eq, scaled(alpha, 3 * k + 4, 0));
            for a in [t, u, v] {
                c.score(a, Cmp::Eq, scaled(alpha, 3 * k + 2, 0));
            }
            c.score(p, Cmp::Eq, 0);
            for &bi in &b {
                c.score(bi, Cmp::Le, scaled(alpha, 3 * k, 0));
            }
        }
    }
    for (i, &bi) in b.iter().enumerate() {
        for &bj in &b[i + 1..] {
            let what = format!("|vs({}, {})|", e.name(bi), e.name(bj));
            let actual = c.vs.get(bi, bj).abs();
            c.push(what, actual, Cmp::Eq, 1);
        }
    }
    let claims = c.list;
    let target = match (mode, variant) {
        (Mode::Constructive, _) => p,
        (Mode::Destructive, BriberyVariant::TwoGuards) => 0,
        (Mode::Destructive, BriberyVariant::FourGuards) => 0,
    };
    ReducedInstance {
        problem,
        model,
        alpha,
        instance: ControlInstance::new(e, target, k as u64),
        claims,
        canned: false,
        solution_size: k as usize,
        plan: WitnessPlan::Bribe { units, top: p },
    }
    .checked()
}
