//! X3C to voter control, and to the Condorcet voter-control problems.

use super::{element_names, out_of_range, scaled, Claims, Cmp, ReduceOptions, ReducedInstance, VoterOp, WitnessPlan, X3c};
use crate::alpha::Alpha;
use crate::control::{ControlInstance, ControlTag, ControlType, ProblemTag};
use crate::election::{Election, Mode, VoterBlock, WinnerModel};
use crate::error::{Error, Result};
use crate::oracle::{x3c_oracle, DEFAULT_NODE_CAP};
use crate::tournament::{fresh_names, weighted_mcgarvey};
use crate::two_stage::TieRule;

fn x3c_answer(x: &X3c) -> Result<bool> {
    Ok(x3c_oracle(x, DEFAULT_NODE_CAP)?.is_yes())
}

struct Blocks(Vec<VoterBlock>);

impl Blocks {
    fn push(&mut self, parts: &[&[usize]], count: u64) -> usize {
        self.0.push(VoterBlock::order(&parts.concat(), count));
        self.0.len() - 1
    }
}

/// Candidate ids: the named ones first, then B.
struct Layout {
    names: Vec<String>,
    b: Vec<usize>,
}

fn layout(x: &X3c, named: &[&str]) -> Layout {
    let mut names: Vec<String> = named.iter().map(|s| s.to_string()).collect();
    names.extend(element_names(&x.ground, named));
    let b = (named.len()..names.len()).collect();
    Layout { names, b }
}

fn split(b: &[usize], set: &[usize; 3]) -> (Vec<usize>, Vec<usize>) {
    let mut inside: Vec<usize> = set.iter().map(|&e| b[e]).collect();
    inside.sort_unstable();
    let outside = b.iter().copied().filter(|c| !inside.contains(c)).collect();
    (inside, outside)
}

/// Which deleting-voters list to build.
#[derive(Clone, Copy, PartialEq, Eq)]
enum DvList {
    /// n-k+1 voters p > r > B; p ties r after deleting a cover.
    Tied,
    /// n-k+2 voters p > r > B; p beats everyone after deleting a cover.
    Condorcet,
    /// The same idea with a second rival r-hat, for alpha < 1.
    TwoRivals,
}

struct DvElection {
    e: Election,
    p: usize,
    r: usize,
    /// Block of v_i for every set.
    v: Vec<usize>,
    /// Blocks of the s-voters, if s is present.
    s_block: Option<usize>,
}

/// The deleting-voters election; with `s_count = Some(c)` a candidate s is added last in every
/// voter and `c` voters s > r > (r-hat) > B > p are prepended.
fn dv_election(x: &X3c, list: DvList, s_count: Option<u64>, p_voters: u64) -> Result<DvElection> {
    let two = list == DvList::TwoRivals;
    let mut named = vec!["p", "r"];
    if two {
        named.push("rhat");
    }
    if s_count.is_some() {
        named.push("s");
    }
    let lay = layout(x, &named);
    let (p, r) = (0, 1);
    let rh: Vec<usize> = if two { vec![2] } else { vec![] };
    let s: Vec<usize> = if s_count.is_some() { vec![named.len() - 1] } else { vec![] };
    let b = &lay.b;
    let n = x.sets.len() as u64;
    let mut bl = Blocks(Vec::new());
    let s_block = s_count.map(|c| bl.push(&[&s, &[r], &rh, b, &[p]], c));
    if two {
        bl.push(&[b, &[p, r], &rh, &s], n - 2);
    } else {
        bl.push(&[b, &[p, r], &s], n - 1);
    }
    bl.push(&[&[p, r], &rh, b, &s], p_voters);
    let mut v = Vec::new();
    for set in &x.sets {
        let (inside, outside) = split(b, set);
        v.push(bl.push(&[&[r], &rh, &outside, &[p], &inside, &s], 1));
    }
    for set in &x.sets {
        let (inside, outside) = split(b, set);
        bl.push(&[&[r], &rh, &inside, &[p], &outside, &s], 1);
    }
    if two {
        bl.push(&[&[r, p], &rh, b, &s], 1);
        bl.push(&[b, &[p, r], &rh, &s], 1);
    }
    let e = Election::new(lay.names, bl.0)?;
    Ok(DvElection { e, p, r, v, s_block })
}

/// The p-voter count for each list, as a function of n and k.
fn p_voters(list: DvList, n: usize, k: usize) -> u64 {
    (match list {
        DvList::Tied => n - k + 1,
        DvList::Condorcet | DvList::TwoRivals => n - k + 2,
    }) as u64
}

fn dv_claims(c: &mut Claims, d: &DvElection, b: &[usize], list: DvList, n: i64, k: i64) {
    let (rb, bp, rp) = match list {
        DvList::Tied => (2 * n - k + 2, k - 2, k),
        DvList::Condorcet => (2 * n - k + 3, k - 3, k - 1),
        DvList::TwoRivals => (2 * n - k + 4, k - 4, k),
    };
    for &x in b {
        c.vs(d.r, x, Cmp::Eq, rb);
        c.vs(x, d.p, Cmp::Eq, bp);
    }
    c.vs(d.r, d.p, Cmp::Eq, rp);
    if list == DvList::TwoRivals {
        for &x in b {
            c.vs(2, x, Cmp::Eq, rb);
        }
        c.vs(d.r, 2, Cmp::Eq, 4 * n - k + 2);
        c.vs(2, d.p, Cmp::Eq, k - 2);
    }
}

/// Pads the family with disjoint fresh triples until k is odd and at least 5. Returns the new
/// instance and the indices of the added sets.
fn pad_for_av(x: &X3c) -> (X3c, Vec<usize>) {
    let mut y = x.clone();
    let mut added = Vec::new();
    while y.k < 5 || y.k % 2 == 0 {
        let base = y.ground.len();
        let names = fresh_names(&y.ground, "extra", base + 3);
        y.ground.extend(names[base..].iter().cloned());
        y.sets.push([base, base + 1, base + 2]);
        added.push(y.sets.len() - 1);
        y.k += 1;
    }
    (y, added)
}

fn adding_voters(x: &X3c, tag: ControlTag, alpha: Alpha, model: WinnerModel) -> Result<ReducedInstance> {
    let (y, always) = pad_for_av(x);
    let k = y.k;
    // p beats one b under the nonunique goal and two under the unique goal; destructive
    // instances flip the model and protect r.
    let p_strength_unique = match tag.mode {
        Mode::Constructive => model == WinnerModel::Unique,
        Mode::Destructive => model == WinnerModel::NonUnique,
    };
    let reserved = ["p", "r", "s"];
    let mut lay = layout(&y, &reserved);
    let d_names = fresh_names(&lay.names, "d", 3 * k + 2);
    let d0 = lay.names.len();
    lay.names.extend(d_names);
    let (p, r, s) = (0, 1, 2);
    let b = lay.b.clone();
    let d: Vec<usize> = (d0..lay.names.len()).collect();
    let m = lay.names.len();
    let heavy = (k as u64 + 1) / 2;
    let mut edges = Vec::new();
    for c in 0..m {
        if c != r {
            let w = if b.contains(&c) { (k as u64 - 3) / 2 } else { heavy };
            edges.push((r, c, w));
        }
    }
    edges.push((s, p, (k as u64 - 1) / 2));
    let p_beats = if p_strength_unique { 2 } else { 1 };
    for (i, &x) in b.iter().enumerate() {
        if i < p_beats {
            edges.push((p, x, heavy));
        } else {
            edges.push((x, p, heavy));
        }
    }
    for &x in &d {
        edges.push((p, x, heavy));
    }
    let ring: Vec<usize> = std::iter::once(s).chain(b.iter().copied()).chain(d.iter().copied()).collect();
    let half = (ring.len() - 1) / 2;
    for i in 0..ring.len() {
        for j in 1..=half {
            edges.push((ring[i], ring[(i + j) % ring.len()], heavy));
        }
    }
    let e = weighted_mcgarvey(lay.names, &edges)?;
    let mut pool = Vec::new();
    for set in &y.sets {
        let (inside, outside) = split(&b, set);
        let rest: Vec<usize> = std::iter::once(s).chain(d.iter().copied()).collect();
        pool.push(VoterBlock::order(&[&[p][..], &outside, &[r], &inside, &rest].concat(), 1));
    }
    let mut c = Claims::new(&e, alpha);
    let (ki, kk) = (k as i64, 3 * k as i64);
    let l = kk + 4;
    c.vs(s, p, Cmp::Eq, ki - 1);
    for &x in &b {
        c.vs(r, x, Cmp::Eq, ki - 3);
    }
    c.score(r, Cmp::Eq, scaled(alpha, l + kk, 0));
    c.score(p, Cmp::Eq, scaled(alpha, if p_strength_unique { l } else { l - 1 }, 0));
    for x in ring.iter().copied() {
        c.score(x, Cmp::Lt, scaled(alpha, l - 1, 0));
    }
    let others: Vec<(usize, usize)> = (0..m)
        .flat_map(|a| (a + 1..m).map(move |z| (a, z)))
        .filter(|&(a, z)| !((a, z) == (p, s) || (a == r && b.contains(&z))))
        .collect();
    let weakest = others.iter().map(|&(a, z)| c.vs.get(a, z).abs()).min().unwrap_or(0);
    c.push("min |vs| over other pairs".into(), weakest, Cmp::Ge, ki + 1);
    let claims = c.list;
    let target = if tag.mode == Mode::Constructive { p } else { r };
    let mut instance = ControlInstance::new(e, target, k as u64);
    instance.pool = pool;
    let plan = WitnessPlan::Voters { kind: VoterOp::Add, base: vec![0; y.sets.len()], per_item: (0..y.sets.len()).collect(), always };
    ReducedInstance { problem: ProblemTag::Control(tag), model, alpha, instance, claims, canned: false, solution_size: x.k, plan }.checked()
}

fn dv_list(mode: Mode, model: WinnerModel, alpha: Alpha) -> DvList {
    let needs_tie = matches!((mode, model), (Mode::Constructive, WinnerModel::NonUnique) | (Mode::Destructive, WinnerModel::Unique));
    match (needs_tie, alpha.is_one()) {
        (false, _) => DvList::Condorcet,
        (true, true) => DvList::Tied,
        (true, false) => DvList::TwoRivals,
    }
}

fn deleting_voters(x: &X3c, tag: ControlTag, alpha: Alpha, model: WinnerModel) -> Result<ReducedInstance> {
    let list = dv_list(tag.mode, model, alpha);
    let (n, k) = (x.sets.len(), x.k);
    let d = dv_election(x, list, None, p_voters(list, n, k))?;
    let b: Vec<usize> = (d.e.m() - 3 * k..d.e.m()).collect();
    let mut c = Claims::new(&d.e, alpha);
    dv_claims(&mut c, &d, &b, list, n as i64, k as i64);
    let claims = c.list;
    let target = if tag.mode == Mode::Constructive { d.p } else { d.r };
    let blocks = d.e.voters().len();
    let plan = WitnessPlan::Voters { kind: VoterOp::Delete, base: vec![0; blocks], per_item: d.v.clone(), always: vec![] };
    let instance = ControlInstance::new(d.e, target, k as u64);
    ReducedInstance { problem: ProblemTag::Control(tag), model, alpha, instance, claims, canned: false, solution_size: k, plan }.checked()
}

/// Partitioning voters. Returns the instance with V1 = everything except the s-voters and the
/// cover's v_i voters.
fn partition_voters(x: &X3c, problem: ProblemTag, mode: Mode, rule: TieRule, alpha: Alpha, model: WinnerModel) -> Result<ReducedInstance> {
    let (n, k) = (x.sets.len(), x.k);
    let at_one = alpha.is_one() && rule == TieRule::TE;
    let (list, s_count, pv) = match (mode, rule) {
        (Mode::Destructive, TieRule::TE) if !alpha.is_one() => (DvList::TwoRivals, k + 1, n - k + 2),
        (Mode::Destructive, _) if at_one => (DvList::Tied, k, n - k + 1),
        (_, _) if at_one => (DvList::Condorcet, k, n - k + 2),
        _ => (DvList::Condorcet, k + 1, n - k + 2),
    };
    let d = dv_election(x, list, Some(s_count as u64), pv as u64)?;
    let s_block = d.s_block.expect("s present");
    let mut base: Vec<u64> = d.e.voters().iter().map(|v| v.multiplicity).collect();
    base[s_block] = 0;
    let hat = d.e.with_counts(&base);
    let b: Vec<usize> = (d.e.m() - 3 * k..d.e.m()).collect();
    let mut c = Claims::new(&hat, alpha);
    dv_claims(&mut c, &d, &b, list, n as i64, k as i64);
    let claims: Vec<_> = c.list.into_iter().map(|mut cl| {
        cl.what = format!("{} without s-voters", cl.what);
        cl
    }).collect();
    let target = if mode == Mode::Constructive { d.p } else { d.r };
    let plan = WitnessPlan::Voters { kind: VoterOp::Partition, base, per_item: d.v.clone(), always: vec![] };
    let instance = ControlInstance::new(d.e, target, k as u64);
    ReducedInstance { problem, model, alpha, instance, claims, canned: false, solution_size: k, plan }.checked()
}

pub fn x3c_to_voter_control(x: &X3c, tag: ControlTag, alpha: Alpha, model: WinnerModel, opts: ReduceOptions) -> Result<ReducedInstance> {
    let problem = ProblemTag::Control(tag);
    if tag.kind.is_candidate_control() {
        return Err(Error::Unsupported(format!("no X3C construction for {tag}")));
    }
    if let Err(e) = x.well_formed() {
        return out_of_range(opts, problem, alpha, model, || Ok(false), e.to_string());
    }
    if tag.kind == ControlType::AV {
        return adding_voters(x, tag, alpha, model);
    }
    let (n, k) = (x.sets.len(), x.k);
    if n < k || k <= 2 {
        return out_of_range(opts, problem, alpha, model, || x3c_answer(x), format!("construction needs n >= k > 2 (n = {n}, k = {k})"));
    }
    match tag.kind {
        ControlType::DV => deleting_voters(x, tag, alpha, model),
        ControlType::PV(rule) => partition_voters(x, problem, tag.mode, rule, alpha, model),
        _ => unreachable!("voter control"),
    }
}

/// Constructive Condorcet control by deleting voters (`CondorcetCcdv`) or partitioning voters
/// (`CondorcetCcpv`).
pub fn x3c_to_condorcet(x: &X3c, problem: ProblemTag, opts: ReduceOptions) -> Result<ReducedInstance> {
    let (alpha, model) = (Alpha::default(), WinnerModel::Unique);
    if !matches!(problem, ProblemTag::CondorcetCcdv | ProblemTag::CondorcetCcpv) {
        return Err(Error::Unsupported(format!("{problem} is not a Condorcet control problem")));
    }
    if let Err(e) = x.well_formed() {
        return out_of_range(opts, problem, alpha, model, || Ok(false), e.to_string());
    }
    let (n, k) = (x.sets.len(), x.k);
    if n < k || k <= 2 {
        return out_of_range(opts, problem, alpha, model, || x3c_answer(x), format!("construction needs n >= k > 2 (n = {n}, k = {k})"));
    }
    if problem == ProblemTag::CondorcetCcpv {
        return partition_voters(x, problem, Mode::Constructive, TieRule::TP, alpha, model);
    }
    let d = dv_election(x, DvList::Condorcet, None, p_voters(DvList::Condorcet, n, k))?;
    let b: Vec<usize> = (d.e.m() - 3 * k..d.e.m()).collect();
    let mut c = Claims::new(&d.e, alpha);
    dv_claims(&mut c, &d, &b, DvList::Condorcet, n as i64, k as i64);
    let claims = c.list;
    let blocks = d.e.voters().len();
    let plan = WitnessPlan::Voters { kind: VoterOp::Delete, base: vec![0; blocks], per_item: d.v.clone(), always: vec![] };
    let instance = ControlInstance::new(d.e, d.p, k as u64);
    ReducedInstance { problem, model, alpha, instance, claims, canned: false, solution_size: k, plan }.checked()
}
