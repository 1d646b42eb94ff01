//! One PASS/FAIL line per acceptance criterion. Runs without the libtest harness so the
//! lines are always printed; exits nonzero if any criterion fails.

mod common;

use common::*;
use copeland::control::{ccacu_greedy, dc_partition, dcac_greedy, dcdc_greedy, ControlAction, ControlInstance, ControlTag, ControlType, ProblemTag};
use copeland::election::pair_count;
use copeland::fpt::{fpt_av_dv, fpt_pv, fpt_voter_control_bv, two_voter_realization};
use copeland::microbribery::{big_b, build_it, build_jt, build_lt, constructive_min_cost, destructive_min_cost};
use copeland::oracle::{control_oracle, microbribery_oracle, reference, replay, vertex_cover_oracle, x3c_oracle, Verdict, Witness, DEFAULT_NODE_CAP};
use copeland::reductions::{
    vc_to_candidate_control, x3c_to_bribery_uv, x3c_to_condorcet, x3c_to_voter_control, BriberyVariant, ReduceOptions, ReducedInstance, Vc, X3c,
};
use copeland::tournament::{default_names, mcgarvey, pad_election};
use copeland::{Alpha, Election, Error, Mode, PairTable, PartitionKind, Preference, TieRule, VoterBlock, WinnerModel};
use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::panic;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const MODELS: [WinnerModel; 2] = [WinnerModel::NonUnique, WinnerModel::Unique];
const MODES: [Mode; 2] = [Mode::Constructive, Mode::Destructive];
const OPTS: ReduceOptions = ReduceOptions { canned_fallback: false, compact_voters: true };
const CANNED: ReduceOptions = ReduceOptions { canned_fallback: true, compact_voters: true };
const SECOND: Duration = Duration::from_secs(1);

fn example(even: bool) -> Election {
    let mut v = vec![VoterBlock::order(&[0, 1, 2, 3], 1), VoterBlock::order(&[3, 2, 1, 0], 1), VoterBlock::order(&[2, 0, 3, 1], 1)];
    if even {
        v.push(VoterBlock::order(&[2, 3, 0, 1], 1));
    }
    Election::with_default_names(4, v).unwrap()
}

fn whole(e: &Election, a: Alpha) -> Vec<String> {
    e.scores(a).iter().map(|&s| if s % a.den() == 0 { (s / a.den()).to_string() } else { format!("{s}/{}", a.den()) }).collect()
}

fn odd_example() -> Outcome {
    let start = Instant::now();
    let e = example(false);
    for a in [Alpha::ZERO, Alpha::HALF, Alpha::ONE] {
        ensure!(whole(&e, a) == ["2", "0", "3", "1"], "scores at alpha {a}: {:?}", whole(&e, a));
    }
    ensure!(big_b(&e) == 49, "B = {}", big_b(&e));
    let net = build_it(&e, 0, 2, WinnerModel::NonUnique).map_err(|x| x.to_string())?;
    ensure!(net.target == 6, "F = {}", net.target);
    let plan = constructive_min_cost(&e, Alpha::HALF, 0, WinnerModel::NonUnique).map_err(|x| x.to_string())?;
    ensure!(plan.as_ref().map(|p| p.cost) == Some(1), "min cost {:?}", plan.map(|p| p.cost));
    let elapsed = start.elapsed();
    ensure!(elapsed < SECOND, "took {elapsed:?}");
    Ok(format!("scores (2,0,3,1), B = 49, F = 6, cost 1, {elapsed:.1?}"))
}

fn even_copeland_zero() -> Outcome {
    let start = Instant::now();
    let e = example(true);
    ensure!(whole(&e, Alpha::ZERO) == ["1", "0", "3", "1"], "scores {:?}", whole(&e, Alpha::ZERO));
    ensure!(big_b(&e) == 65, "B = {}", big_b(&e));
    let net = build_jt(&e, 0, 2, WinnerModel::NonUnique).map_err(|x| x.to_string())?;
    ensure!(net.target == 6, "F = {}", net.target);
    let plan = constructive_min_cost(&e, Alpha::ZERO, 0, WinnerModel::NonUnique).map_err(|x| x.to_string())?;
    ensure!(plan.as_ref().map(|p| p.cost) == Some(2), "min cost {:?}", plan.map(|p| p.cost));
    let elapsed = start.elapsed();
    ensure!(elapsed < SECOND, "took {elapsed:?}");
    Ok(format!("scores (1,0,3,1), B = 65, F = 6, cost 2, {elapsed:.1?}"))
}

fn even_llull() -> Outcome {
    let start = Instant::now();
    let e = example(true);
    ensure!(whole(&e, Alpha::ONE) == ["2", "0", "3", "2"], "scores {:?}", whole(&e, Alpha::ONE));
    let net = build_lt(&e, 0, 2, WinnerModel::NonUnique).map_err(|x| x.to_string())?;
    ensure!(net.target == 7, "F = {}", net.target);
    let plan = constructive_min_cost(&e, Alpha::ONE, 0, WinnerModel::NonUnique).map_err(|x| x.to_string())?;
    ensure!(plan.as_ref().map(|p| p.cost) == Some(1), "min cost {:?}", plan.map(|p| p.cost));
    let elapsed = start.elapsed();
    ensure!(elapsed < SECOND, "took {elapsed:?}");
    Ok(format!("scores (2,0,3,2), F = 7, cost 1, {elapsed:.1?}"))
}

fn microbribery_equivalence() -> Outcome {
    let mut r = rng(401);
    let k = 3;
    let (mut compared, mut skipped) = (0, 0);
    for case in 0..300 {
        let m = r.gen_range(1..=4);
        let n = r.gen_range(3..=4);
        let e = random_election(&mut r, m, n, 0.5);
        for alpha in ALPHAS {
            for model in MODELS {
                for p in 0..m {
                    for mode in MODES {
                        let got = match mode {
                            Mode::Constructive => match constructive_min_cost(&e, alpha, p, model) {
                                Err(Error::Unsupported(_)) => {
                                    skipped += 1;
                                    continue;
                                }
                                other => other,
                            },
                            Mode::Destructive => destructive_min_cost(&e, alpha, p, model),
                        }
                        .map_err(|x| x.to_string())?
                        .map(|plan| plan.cost)
                        .filter(|&c| c <= k);
                        let v = microbribery_oracle(&e, alpha, p, k, mode, model, DEFAULT_NODE_CAP).map_err(|x| x.to_string())?;
                        let want = match v.witness {
                            Some(Witness::Microbribery(f)) => Some(f.len() as u64),
                            _ => None,
                        };
                        ensure!(got == want, "case {case} {mode:?} alpha {alpha} {model:?} p {p}: {got:?} vs {want:?}\n{e:?}");
                        compared += 1;
                    }
                }
            }
        }
    }
    Ok(format!("300 elections, {compared} decision+cost comparisons, {skipped} unsupported cells skipped"))
}

fn agree(tag: ControlTag, inst: &ControlInstance, alpha: Alpha, model: WinnerModel, got: Option<ControlAction>) -> Result<(), String> {
    let truth = control_oracle(ProblemTag::Control(tag), inst, alpha, model, DEFAULT_NODE_CAP).map_err(|x| x.to_string())?;
    ensure!(got.is_some() == truth.is_yes(), "{tag} alpha {alpha} {model:?}: algorithm {} oracle {}\n{inst:?}", got.is_some(), truth.is_yes());
    if let Some(a) = got {
        ensure!(replay(tag, inst, &a, alpha, model).map_err(|x| x.to_string())?, "{tag} witness fails\n{inst:?}\n{a:?}");
    }
    Ok(())
}

fn control_equivalence() -> Outcome {
    let mut r = rng(501);
    let mut compared = 0;
    let des = |k| ControlTag::new(Mode::Destructive, k);
    let s = |x: Result<Option<ControlAction>, Error>| x.map_err(|e| e.to_string());
    for _ in 0..500 {
        let total = r.gen_range(2..=7);
        let spoilers = r.gen_range(0..total);
        let n = r.gen_range(1..=5);
        let e = random_election(&mut r, total, n, 0.6);
        let mut ids: Vec<usize> = (0..total).collect();
        ids.shuffle(&mut r);
        let with_d = ControlInstance { election: e.clone(), spoilers: ids[..spoilers].to_vec(), pool: vec![], target: ids[spoilers], budget: r.gen_range(0..=spoilers as u64) };
        let plain = ControlInstance::new(e, ids[spoilers], r.gen_range(0..=total as u64));
        for alpha in ALPHAS {
            for model in MODELS {
                agree(des(ControlType::AC), &with_d, alpha, model, s(dcac_greedy(&with_d, alpha, model, false))?)?;
                agree(des(ControlType::ACu), &with_d, alpha, model, s(dcac_greedy(&with_d, alpha, model, true))?)?;
                agree(des(ControlType::DC), &plain, alpha, model, s(dcdc_greedy(&plain, alpha, model))?)?;
                compared += 3;
                for rule in [TieRule::TE, TieRule::TP] {
                    for (kind, ct) in [(PartitionKind::PC, ControlType::PC(rule)), (PartitionKind::RPC, ControlType::RPC(rule))] {
                        agree(des(ct), &plain, alpha, model, s(dc_partition(&plain, alpha, kind, rule, model))?)?;
                        compared += 1;
                    }
                }
                if alpha != Alpha::HALF {
                    let tag = ControlTag::new(Mode::Constructive, ControlType::ACu);
                    agree(tag, &with_d, alpha, model, s(ccacu_greedy(&with_d, alpha, model))?)?;
                    compared += 1;
                }
            }
        }
    }
    Ok(format!("500 instances, {compared} algorithm/oracle comparisons"))
}

fn random_graph(r: &mut ChaCha8Rng, k_one: bool) -> Vc {
    let n = r.gen_range(3..=if k_one { 4 } else { 5 });
    let mut pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    pairs.shuffle(r);
    let m = r.gen_range(2..=pairs.len().min(5));
    pairs.truncate(m);
    let k = if k_one { 1 } else { r.gen_range(1..n.min(m)) };
    Vc::with_default_names(n, pairs, k)
}

/// k = 3 over nine elements, 3..=max_sets triples, half of them with a planted cover.
fn random_x3c(r: &mut ChaCha8Rng, max_sets: usize) -> X3c {
    let n = r.gen_range(3..=max_sets);
    let mut sets = Vec::new();
    if r.gen_bool(0.5) {
        let perm = random_order(r, 9);
        sets.extend(perm.chunks(3).map(|c| [c[0], c[1], c[2]]));
    }
    while sets.len() < n {
        let perm = random_order(r, 9);
        sets.push([perm[0], perm[1], perm[2]]);
    }
    sets.shuffle(r);
    X3c::with_default_names(3, sets)
}

fn selection(v: Verdict) -> Option<Vec<usize>> {
    match v.witness {
        Some(Witness::Selection(s)) => Some(s),
        _ => None,
    }
}

#[derive(Default)]
struct Fidelity {
    generated: usize,
    forward: usize,
    backward: usize,
}

impl Fidelity {
    /// Self-check and forward soundness; `solution` is a source solution if one exists.
    fn check(&mut self, what: &str, ri: &ReducedInstance, solution: Option<&[usize]>) -> Result<(), String> {
        ensure!(!ri.canned, "{what}: in-range source produced a canned instance");
        let bad = ri.failed_claims();
        ensure!(bad.is_empty(), "{what}: failed claims {:?}", bad.iter().map(|c| c.to_string()).collect::<Vec<_>>());
        self.generated += 1;
        if let Some(sol) = solution {
            let w = ri.forward_witness(sol).ok_or_else(|| format!("{what}: no witness plan"))?;
            ensure!(ri.check_witness(&w).map_err(|x| x.to_string())?, "{what}: forward witness fails for {sol:?}");
            self.forward += 1;
        }
        Ok(())
    }

    fn backward(&mut self, what: &str, ri: &ReducedInstance, source: bool) -> Result<(), String> {
        let v = ri.oracle(DEFAULT_NODE_CAP).map_err(|x| x.to_string())?;
        ensure!(v.decision != copeland::oracle::Decision::CapExceeded, "{what}: oracle cap exceeded");
        ensure!(v.is_yes() == source, "{what}: reduced instance says {} but source says {source}", v.is_yes());
        self.backward += 1;
        Ok(())
    }
}

fn reduction_fidelity() -> Outcome {
    let mut r = rng(601);
    let mut f = Fidelity::default();
    let third = Alpha::new(1, 3).unwrap();
    let combos = |alphas: Vec<Alpha>| alphas.into_iter().cartesian_product(MODELS).collect::<Vec<_>>();
    let candidate_kinds = [
        ControlType::AC,
        ControlType::ACu,
        ControlType::DC,
        ControlType::PC(TieRule::TE),
        ControlType::PC(TieRule::TP),
        ControlType::RPC(TieRule::TE),
        ControlType::RPC(TieRule::TP),
    ];
    for kind in candidate_kinds {
        let tag = ControlTag::new(Mode::Constructive, kind);
        let grid = combos(if kind == ControlType::ACu { vec![third, Alpha::HALF] } else { vec![Alpha::ZERO, third, Alpha::HALF, Alpha::ONE] });
        for i in 0..50 {
            let (alpha, model) = grid[i % grid.len()];
            let g = random_graph(&mut r, false);
            let what = format!("{tag} alpha {alpha} {model:?} {g:?}");
            let ri = vc_to_candidate_control(&g, tag, alpha, model, OPTS).map_err(|x| format!("{what}: {x}"))?;
            let sol = selection(vertex_cover_oracle(&g, DEFAULT_NODE_CAP).map_err(|x| x.to_string())?);
            f.check(&what, &ri, sol.as_deref())?;
            if matches!(kind, ControlType::AC | ControlType::ACu | ControlType::DC) {
                let g1 = random_graph(&mut r, true);
                let ri = vc_to_candidate_control(&g1, tag, alpha, model, OPTS).map_err(|x| format!("{what}: {x}"))?;
                let source = vertex_cover_oracle(&g1, DEFAULT_NODE_CAP).map_err(|x| x.to_string())?.is_yes();
                f.backward(&format!("{tag} alpha {alpha} {model:?} {g1:?}"), &ri, source)?;
            }
        }
    }
    let voter_kinds = [ControlType::AV, ControlType::DV, ControlType::PV(TieRule::TE), ControlType::PV(TieRule::TP)];
    for mode in MODES {
        for kind in voter_kinds {
            let tag = ControlTag::new(mode, kind);
            let grid = combos(vec![Alpha::ZERO, third, Alpha::HALF, Alpha::ONE]);
            for i in 0..50 {
                let (alpha, model) = grid[i % grid.len()];
                let x = random_x3c(&mut r, 5);
                let what = format!("{tag} alpha {alpha} {model:?} {x:?}");
                let ri = x3c_to_voter_control(&x, tag, alpha, model, OPTS).map_err(|e| format!("{what}: {e}"))?;
                let sol = selection(x3c_oracle(&x, DEFAULT_NODE_CAP).map_err(|e| e.to_string())?);
                f.check(&what, &ri, sol.as_deref())?;
                if x.sets.len() <= 4 {
                    f.backward(&what, &ri, sol.is_some())?;
                }
            }
        }
    }
    for problem in [ProblemTag::CondorcetCcdv, ProblemTag::CondorcetCcpv] {
        for _ in 0..50 {
            let x = random_x3c(&mut r, 5);
            let what = format!("{problem} {x:?}");
            let ri = x3c_to_condorcet(&x, problem, OPTS).map_err(|e| format!("{what}: {e}"))?;
            let sol = selection(x3c_oracle(&x, DEFAULT_NODE_CAP).map_err(|e| e.to_string())?);
            f.check(&what, &ri, sol.as_deref())?;
            if x.sets.len() <= 4 {
                f.backward(&what, &ri, sol.is_some())?;
            }
        }
    }
    for mode in MODES {
        for model in MODELS {
            let variant = BriberyVariant::for_goal(mode, model);
            let problem = ProblemTag::Bribery(mode);
            for i in 0..50 {
                let alpha = [Alpha::ZERO, third, Alpha::HALF, Alpha::ONE][i % 4];
                let mut x = random_x3c(&mut r, 6);
                if !x.covers_ground() {
                    // Families that miss an element are malformed for this construction.
                    x.sets.extend((0..3).map(|j| [3 * j, 3 * j + 1, 3 * j + 2]));
                }
                let what = format!("{problem} {model:?} alpha {alpha} {x:?}");
                let ri = x3c_to_bribery_uv(&x, variant, mode, alpha, OPTS).map_err(|e| format!("{what}: {e}"))?;
                let sol = selection(x3c_oracle(&x, DEFAULT_NODE_CAP).map_err(|e| e.to_string())?);
                f.check(&what, &ri, sol.as_deref())?;
                // Minimum size: k = 1, where a family covers B only if it contains B. These
                // instances depend only on (family size, alpha), so i < 12 visits each once.
                if i < 12 {
                    let n1 = 1 + i % 3;
                    let one = X3c::with_default_names(1, (0..n1).map(|j| [j % 3, (j + 1) % 3, (j + 2) % 3]).collect());
                    let ri = x3c_to_bribery_uv(&one, variant, mode, alpha, OPTS).map_err(|e| format!("{what}: {e}"))?;
                    f.backward(&format!("{problem} {model:?} alpha {alpha} k=1"), &ri, true)?;
                }
                if i < 4 {
                    let none = X3c::with_default_names(1, vec![]);
                    let canned = x3c_to_bribery_uv(&none, variant, mode, alpha, CANNED).map_err(|e| e.to_string())?;
                    ensure!(canned.canned, "uncovered family not canned");
                    f.backward(&format!("{problem} {model:?} alpha {alpha} empty family"), &canned, false)?;
                }
            }
        }
    }
    Ok(format!("{} self-checked instances, {} forward witnesses replayed, {} backward oracle checks", f.generated, f.forward, f.backward))
}

/// Every pairwise table over j candidates, as unit voter preferences.
fn all_tables(j: usize) -> Vec<Preference> {
    (0..1u32 << pair_count(j)).map(|bits| Preference::Table(PairTable::from_bits(j, (0..pair_count(j)).map(|b| bits >> b & 1 == 1).collect()))).collect()
}

fn voter_tags() -> Vec<ControlTag> {
    let kinds = [ControlType::AV, ControlType::DV, ControlType::PV(TieRule::TE), ControlType::PV(TieRule::TP)];
    MODES.iter().flat_map(|&mode| kinds.iter().map(move |&k| ControlTag::new(mode, k))).collect()
}

fn fpt(tag: ControlTag, inst: &ControlInstance, alpha: Alpha, model: WinnerModel) -> Result<Verdict, String> {
    match tag.kind {
        ControlType::PV(rule) => fpt_pv(rule, tag.mode, inst, alpha, model),
        _ => fpt_av_dv(tag, inst, alpha, model),
    }
    .map_err(|e| e.to_string())
}

fn blocks(types: &[Preference], picks: &[usize]) -> Vec<VoterBlock> {
    picks.iter().dedup_with_count().map(|(k, &t)| VoterBlock::new(types[t].clone(), k as u64)).collect()
}

fn fpt_check(inst: &ControlInstance, with_bv: bool) -> Result<usize, String> {
    let mut n = 0;
    for tag in voter_tags() {
        for alpha in ALPHAS {
            for model in MODELS {
                let what = || format!("{tag} alpha {alpha} {model:?}\n{inst:?}");
                let v = fpt(tag, inst, alpha, model)?;
                let truth = control_oracle(ProblemTag::Control(tag), inst, alpha, model, DEFAULT_NODE_CAP).map_err(|e| e.to_string())?;
                ensure!(v.is_yes() == truth.is_yes(), "fpt disagrees with the oracle: {}", what());
                if with_bv {
                    let bv = fpt_voter_control_bv(tag, inst, alpha, model).map_err(|e| e.to_string())?;
                    ensure!(bv.is_yes() == v.is_yes(), "fpt disagrees with the bounded-voter search: {}", what());
                }
                if let Some(Witness::Control(a)) = &v.witness {
                    ensure!(replay(tag, inst, a, alpha, model).map_err(|e| e.to_string())?, "witness fails: {}", what());
                }
                n += 1;
            }
        }
    }
    Ok(n)
}

fn expanded(inst: &ControlInstance) -> ControlInstance {
    let pool = inst.election.with_voters(inst.pool.clone()).unwrap().expanded().voters().to_vec();
    ControlInstance { election: inst.election.expanded(), pool, ..inst.clone() }
}

fn succinct_invariant(inst: &ControlInstance) -> Result<(), String> {
    let x = expanded(inst);
    for tag in voter_tags() {
        for alpha in ALPHAS {
            for model in MODELS {
                let (a, b) = (fpt(tag, inst, alpha, model)?, fpt(tag, &x, alpha, model)?);
                ensure!(a.is_yes() == b.is_yes(), "succinct and expanded differ: {tag} alpha {alpha} {model:?}\n{inst:?}");
            }
        }
    }
    Ok(())
}

fn fpt_equivalence() -> Outcome {
    let mut profiles = 0;
    let mut comparisons = 0;
    for j in 1..=3 {
        let types = all_tables(j);
        for size in 0..=4 {
            for (idx, reg) in (0..types.len()).combinations_with_replacement(size).enumerate() {
                let room = 6 - size;
                for pool_size in [0, 1, 2].into_iter().filter(|&s| s <= room) {
                    let pool: Vec<usize> = (0..pool_size).map(|s| (idx + 3 * s) % types.len()).sorted().collect();
                    let e = Election::with_default_names(j, blocks(&types, &reg)).unwrap();
                    let inst = ControlInstance {
                        election: e,
                        spoilers: vec![],
                        pool: blocks(&types, &pool),
                        target: idx % j,
                        budget: 1 + (idx % 2) as u64,
                    };
                    comparisons += fpt_check(&inst, true)?;
                    succinct_invariant(&inst)?;
                    profiles += 1;
                }
            }
        }
    }
    let mut r = rng(701);
    for _ in 0..200 {
        let j = r.gen_range(1..=3);
        let nb = r.gen_range(1..=2);
        let e = random_succinct(&mut r, j, nb, 10, 0.6);
        let np = r.gen_range(0..=2);
        let pool = random_succinct(&mut r, j, np, 10, 0.6).voters().to_vec();
        let inst = ControlInstance { election: e, spoilers: vec![], pool, target: r.gen_range(0..j), budget: r.gen_range(0..=6) };
        comparisons += fpt_check(&inst, false)?;
        succinct_invariant(&inst)?;
        profiles += 1;
    }
    Ok(format!("{profiles} profiles (grid plus 200 succinct), {comparisons} fpt/oracle comparisons, succinct = expanded on all"))
}

fn construction_invariants() -> Outcome {
    for n in 1..=15 {
        let e = pad_election(n).map_err(|x| x.to_string())?;
        for a in ALPHAS {
            ensure!(reference::scores(&e, a) == vec![a.den() * n as u64; 2 * n + 1], "pad {n} alpha {a}");
        }
    }
    let mut r = rng(801);
    for i in 0..1000 {
        let m = r.gen_range(1..=6);
        let t = random_cot(&mut r, m);
        let e = mcgarvey(&t, default_names("c", m)).map_err(|x| x.to_string())?;
        ensure!(e.outcome_table() == t, "mcgarvey round trip {i}: {t:?}");
        ensure!(e.voter_count() as usize == 2 * t.decisive_pairs(), "mcgarvey voter count {i}");
    }
    for i in 0..1000 {
        let m = r.gen_range(1..=6);
        let t = random_cot(&mut r, m);
        let e = two_voter_realization(&t, default_names("c", m)).map_err(|x| x.to_string())?;
        ensure!(e.voter_count() == 2 && e.outcome_table() == t, "two-voter round trip {i}: {t:?}");
    }
    Ok("pad n <= 15, 1000 McGarvey and 1000 two-voter round trips".into())
}

fn semantics_invariants() -> Outcome {
    let mut r = rng(901);
    let third = Alpha::new(1, 3).unwrap();
    let (mut odd, mut condorcet) = (0, 0);
    for i in 0..1000 {
        let m = r.gen_range(1..=6);
        let n = r.gen_range(0..=7);
        let e = random_election(&mut r, m, n, 0.5);
        let alphas = [Alpha::ZERO, third, Alpha::HALF, Alpha::ONE];
        if n % 2 == 1 {
            odd += 1;
            let base = reference::scores(&e, Alpha::ZERO);
            for a in alphas {
                let s = e.scores(a);
                ensure!(s.iter().zip(&base).all(|(x, b)| *x == b * a.den()), "odd electorate {i} alpha {a}: {s:?}");
                for model in MODELS {
                    ensure!(e.winners(a, model).unwrap() == e.winners(Alpha::ZERO, model).unwrap(), "odd electorate {i}: winners depend on alpha");
                }
            }
        }
        if let Some(c) = reference::condorcet(&e) {
            condorcet += 1;
            for a in alphas {
                ensure!(e.winners(a, WinnerModel::Unique).unwrap() == vec![c], "election {i}: Condorcet winner {c} not the unique winner at {a}");
            }
        }
        let (mut wins, mut ties) = (0u64, 0u64);
        for (x, y) in (0..m).tuple_combinations() {
            if reference::vs(&e, x, y) == 0 {
                ties += 1
            } else {
                wins += 1
            }
        }
        for a in alphas {
            let sum: u64 = e.scores(a).iter().sum();
            ensure!(sum == a.den() * wins + 2 * a.num() * ties, "election {i}: score sum {sum} at {a}");
        }
    }
    Ok(format!("1000 elections ({odd} odd, {condorcet} with a Condorcet winner)"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("odd worked example", odd_example),
        ("even Copeland^0 example", even_copeland_zero),
        ("even Llull example", even_llull),
        ("microbribery oracle equivalence", microbribery_equivalence),
        ("vulnerable control equivalence", control_equivalence),
        ("reduction fidelity", reduction_fidelity),
        ("FPT correctness", fpt_equivalence),
        ("construction invariants", construction_invariants),
        ("semantics invariants", semantics_invariants),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let res = panic::catch_unwind(run).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        let t = start.elapsed();
        match res {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail} [{t:.1?}]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {msg} [{t:.1?}]", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
