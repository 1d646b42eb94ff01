mod common;

use common::*;
use copeland::control::{ControlAction, ControlInstance, ControlTag, ControlType, ProblemTag};
use copeland::fpt::{extended_control, fpt_candidate_control, fpt_voter_control_bv, two_voter_realization, Goal, DEFAULT_CANDIDATE_BOUND};
use copeland::oracle::{control_oracle, reference, replay, DEFAULT_NODE_CAP};
use copeland::{Alpha, Election, Mode, TieRule, VoterBlock, WinnerModel};
use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;

const MODELS: [WinnerModel; 2] = [WinnerModel::NonUnique, WinnerModel::Unique];
const VOTER_KINDS: [ControlType; 4] = [ControlType::AV, ControlType::DV, ControlType::PV(TieRule::TE), ControlType::PV(TieRule::TP)];

fn voter_instance(r: &mut rand_chacha::ChaCha8Rng, m: usize) -> ControlInstance {
    let (nb, np) = (r.gen_range(1..=3), r.gen_range(0..=3));
    let e = random_succinct(r, m, nb, 2, 0.7);
    let pool = random_succinct(r, m, np, 2, 0.7).voters().to_vec();
    ControlInstance { election: e, spoilers: vec![], pool, target: r.gen_range(0..m), budget: r.gen_range(0..=3) }
}

fn count_vectors(blocks: &[VoterBlock]) -> Vec<Vec<u64>> {
    blocks.iter().map(|b| 0..=b.multiplicity).multi_cartesian_product().collect()
}

/// Members and scores of the final round, computed from scratch.
fn final_round(kind: ControlType, inst: &ControlInstance, counts: &[u64], alpha: Alpha) -> (Vec<usize>, Vec<u64>) {
    let e = &inst.election;
    let m = e.m();
    let all: Vec<usize> = (0..m).collect();
    match kind {
        ControlType::AV => {
            let mut voters = e.voters().to_vec();
            voters.extend(inst.pool.iter().zip(counts).filter(|(_, &k)| k > 0).map(|(b, &k)| VoterBlock::new(b.pref.clone(), k)));
            (all, reference::scores(&e.with_voters(voters).unwrap(), alpha))
        }
        ControlType::DV => {
            let kept: Vec<u64> = e.voters().iter().zip(counts).map(|(b, &k)| b.multiplicity - k).collect();
            (all, reference::scores(&e.with_voters(e.with_counts(&kept).voters().to_vec()).unwrap(), alpha))
        }
        ControlType::PV(rule) => {
            let rest: Vec<u64> = e.voters().iter().zip(counts).map(|(b, &k)| b.multiplicity - k).collect();
            let mut fin = Vec::new();
            for part in [counts.to_vec(), rest] {
                let w = reference::winners(&e.with_counts(&part), alpha);
                if rule == TieRule::TP || w.len() == 1 {
                    fin.extend(w);
                }
            }
            fin.sort_unstable();
            fin.dedup();
            let scores = reference::scores(&e.restrict_candidates(&fin), alpha);
            (fin, scores)
        }
        _ => unreachable!(),
    }
}

fn brute_goal(goal: &Goal, kind: ControlType, inst: &ControlInstance, alpha: Alpha) -> Option<Vec<u64>> {
    let source = if kind == ControlType::AV { &inst.pool } else { inst.election.voters() };
    count_vectors(source).into_iter().find(|c| {
        (matches!(kind, ControlType::PV(_)) || c.iter().sum::<u64>() <= inst.budget) && {
            let (members, scores) = final_round(kind, inst, c, alpha);
            goal.holds(inst.election.names(), inst.target, &members, &scores)
        }
    })
}

fn action_counts(a: &ControlAction) -> &[u64] {
    match a {
        ControlAction::AddVoters(c) | ControlAction::DeleteVoters(c) | ControlAction::PartitionVoters(c) => c,
        _ => panic!("not a voter action"),
    }
}

#[test]
fn table_enumeration_matches_oracle_for_voter_control() {
    let mut r = rng(71);
    for _ in 0..120 {
        let m = r.gen_range(1..=3);
        let inst = voter_instance(&mut r, m);
        for alpha in ALPHAS {
            for model in MODELS {
                for mode in [Mode::Constructive, Mode::Destructive] {
                    for kind in VOTER_KINDS {
                        let tag = ControlTag::new(mode, kind);
                        let v = extended_control(&Goal::Winner { mode, model }, kind, &inst, alpha).unwrap();
                        let truth = control_oracle(ProblemTag::Control(tag), &inst, alpha, model, DEFAULT_NODE_CAP).unwrap();
                        assert_eq!(v.is_yes(), truth.is_yes(), "{tag} {alpha} {model:?}\n{inst:?}");
                        if let Some(copeland::oracle::Witness::Control(a)) = &v.witness {
                            assert!(replay(tag, &inst, a, alpha, model).unwrap(), "{tag} witness\n{inst:?}\n{a:?}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn few_voters_brute_force_matches_oracle() {
    let mut r = rng(72);
    for _ in 0..120 {
        let m = r.gen_range(1..=4);
        let inst = voter_instance(&mut r, m);
        for alpha in ALPHAS {
            for model in MODELS {
                for tag in ControlTag::all().into_iter().filter(|t| !t.kind.is_candidate_control()) {
                    let v = fpt_voter_control_bv(tag, &inst, alpha, model).unwrap();
                    let truth = control_oracle(ProblemTag::Control(tag), &inst, alpha, model, DEFAULT_NODE_CAP).unwrap();
                    assert_eq!(v.is_yes(), truth.is_yes(), "{tag} {alpha} {model:?}\n{inst:?}");
                    if let Some(copeland::oracle::Witness::Control(a)) = &v.witness {
                        assert!(replay(tag, &inst, a, alpha, model).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn few_candidates_brute_force_matches_oracle() {
    let mut r = rng(73);
    for _ in 0..80 {
        let total = r.gen_range(2..=5);
        let n = r.gen_range(1..=4);
        let e = random_election(&mut r, total, n, 0.6);
        let mut ids: Vec<usize> = (0..total).collect();
        ids.shuffle(&mut r);
        let s = r.gen_range(0..total);
        let inst = ControlInstance { election: e, spoilers: ids[..s].to_vec(), pool: vec![], target: ids[s], budget: r.gen_range(0..=2) };
        for alpha in ALPHAS {
            for model in MODELS {
                for tag in ControlTag::all().into_iter().filter(|t| t.kind.is_candidate_control()) {
                    let mut inst = inst.clone();
                    if !matches!(tag.kind, ControlType::AC | ControlType::ACu) {
                        inst.spoilers.clear();
                    }
                    let v = fpt_candidate_control(tag, &inst, alpha, model, DEFAULT_CANDIDATE_BOUND).unwrap();
                    let truth = control_oracle(ProblemTag::Control(tag), &inst, alpha, model, DEFAULT_NODE_CAP).unwrap();
                    assert_eq!(v.is_yes(), truth.is_yes(), "{tag} {alpha} {model:?}\n{inst:?}");
                }
            }
        }
    }
}

#[test]
fn extended_goals_match_exhaustive_search() {
    let mut r = rng(74);
    for _ in 0..150 {
        let m = r.gen_range(2..=3);
        let inst = voter_instance(&mut r, m);
        let mut groups: Vec<Vec<usize>> = random_order(&mut r, m).into_iter().map(|c| vec![c]).collect();
        if r.gen_bool(0.5) {
            let last = groups.pop().unwrap();
            groups.last_mut().unwrap().extend(last);
        }
        let goals = [
            Goal::LexicographicOrder,
            Goal::AllScoresDistinct,
            Goal::ExactlyCowinners(r.gen_range(1..=m)),
            Goal::OrderWithTies(groups),
        ];
        for alpha in ALPHAS {
            for goal in &goals {
                for kind in VOTER_KINDS {
                    let v = extended_control(goal, kind, &inst, alpha).unwrap();
                    let truth = brute_goal(goal, kind, &inst, alpha);
                    assert_eq!(v.is_yes(), truth.is_some(), "{goal} {kind:?} {alpha}\n{inst:?}");
                    if let Some(copeland::oracle::Witness::Control(a)) = &v.witness {
                        let (members, scores) = final_round(kind, &inst, action_counts(a), alpha);
                        assert!(goal.holds(inst.election.names(), inst.target, &members, &scores));
                    }
                }
            }
        }
    }
}

#[test]
fn realization_reproduces_every_small_table() {
    for m in 1..=4 {
        let names: Vec<String> = (0..m).map(|i| format!("c{i}")).collect();
        for t in copeland::fpt::enumerate_cots(m).unwrap() {
            let e: Election = two_voter_realization(&t, names.clone()).unwrap();
            assert_eq!(e.voter_count(), 2);
            assert_eq!(e.outcome_table(), t);
        }
    }
}

#[test]
fn large_instances_report_bound() {
    let mut r = rng(75);
    let inst = ControlInstance::new(random_election(&mut r, 6, 3, 1.0), 0, 1);
    let tag = ControlTag::new(Mode::Constructive, ControlType::PV(TieRule::TP));
    assert!(extended_control(&Goal::Winner { mode: Mode::Constructive, model: WinnerModel::NonUnique }, tag.kind, &inst, Alpha::ONE).is_err());
    let big = ControlInstance::new(random_election(&mut r, 9, 1, 1.0), 0, 1);
    assert!(fpt_candidate_control(ControlTag::new(Mode::Constructive, ControlType::DC), &big, Alpha::ONE, WinnerModel::NonUnique, 8).is_err());
}
