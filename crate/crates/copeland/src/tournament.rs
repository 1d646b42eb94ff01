use crate::alpha::Alpha;
use crate::cot::{Cot, Outcome};
use crate::election::{Election, VoterBlock};
use crate::error::{Error, Result};

/// Two voters per decisive pair: `a > b > rest` and `rev(rest) > a > b`.
pub fn mcgarvey(t: &Cot, names: Vec<String>) -> Result<Election> {
    let mut edges = Vec::new();
    for i in 0..t.m() {
        for j in i + 1..t.m() {
            match t.get(i, j) {
                Outcome::First => edges.push((i, j, 1)),
                Outcome::Second => edges.push((j, i, 1)),
                Outcome::Tie => {}
            }
        }
    }
    weighted_mcgarvey(names, &edges)
}

/// McGarvey gadgets with multiplicity w for each edge (a, b, w): vs(a, b) gains 2w, all else unchanged.
pub fn weighted_mcgarvey(names: Vec<String>, edges: &[(usize, usize, u64)]) -> Result<Election> {
    let m = names.len();
    let mut voters = Vec::new();
    for &(a, b, w) in edges {
        if a >= m || b >= m || a == b {
            return Err(Error::InvalidElection(format!("bad edge ({a}, {b})")));
        }
        if w == 0 {
            continue;
        }
        let rest: Vec<usize> = (0..m).filter(|&c| c != a && c != b).collect();
        let mut v1 = vec![a, b];
        v1.extend(&rest);
        let mut v2: Vec<usize> = rest.iter().rev().copied().collect();
        v2.extend([a, b]);
        voters.push(VoterBlock::order(&v1, w));
        voters.push(VoterBlock::order(&v2, w));
    }
    Election::new(names, voters)
}

/// Realizes `t` with at most 2m voters. The decisive pairs are split into the rounds of a
/// round-robin schedule; each round gets a voter listing its pairs as adjacent winner-loser
/// blocks and a voter listing the blocks in reverse. Only the round's own pairs survive, with
/// vs = 2; every tie stays at 0.
pub fn compact_realization(t: &Cot, names: Vec<String>) -> Result<Election> {
    let m = t.m();
    let slots = m + m % 2;
    let mut voters = Vec::new();
    for round in 0..slots.saturating_sub(1) {
        // Circle method: slot slots-1 is fixed, the others rotate.
        let at = |i: usize| if i == slots - 1 { i } else { (i + round) % (slots - 1) };
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut loose = Vec::new();
        for i in 0..slots / 2 {
            let (a, b) = (at(i), at(slots - 1 - i));
            if a >= m || b >= m {
                loose.extend([a, b].into_iter().filter(|&c| c < m));
                continue;
            }
            match t.get(a.min(b), a.max(b)) {
                Outcome::Tie => loose.extend([a, b]),
                _ if t.beats(a, b) => blocks.push(vec![a, b]),
                _ => blocks.push(vec![b, a]),
            }
        }
        if blocks.is_empty() {
            continue;
        }
        blocks.extend(loose.into_iter().map(|c| vec![c]));
        let forward: Vec<usize> = blocks.concat();
        let backward: Vec<usize> = blocks.iter().rev().flatten().copied().collect();
        voters.push(VoterBlock::order(&forward, 1));
        voters.push(VoterBlock::order(&backward, 1));
    }
    Election::new(names, voters)
}

pub fn default_names(prefix: &str, count: usize) -> Vec<String> {
    (0..count).map(|i| format!("{prefix}{i}")).collect()
}

/// The circulant tournament on 2n+1 candidates: i beats j iff 1 <= (j - i) mod (2n+1) <= n.
pub fn pad_cot(n: usize) -> Cot {
    let size = 2 * n + 1;
    Cot::from_fn(size, |i, j| {
        let d = (j + size - i) % size;
        d >= 1 && d <= n
    })
}

pub fn pad_election(n: usize) -> Result<Election> {
    if n == 0 {
        return Err(Error::InvalidInstance("pad size must be positive".into()));
    }
    mcgarvey(&pad_cot(n), default_names("d", 2 * n + 1))
}

/// Candidate names for `count` fresh candidates that avoid `taken`.
pub fn fresh_names(taken: &[String], prefix: &str, count: usize) -> Vec<String> {
    let mut p = prefix.to_string();
    loop {
        let names = default_names(&p, count);
        if names.iter().all(|n| !taken.contains(n)) {
            return names;
        }
        p.push('x');
    }
}

/// COT of the targeted construction: `base` plus 2n^2 padding candidates appended after it.
/// Candidate i ends with 2n^2 - k[i] wins plus its ties in `base`; padding never ties and
/// wins at most n^2 + 1 contests.
pub fn targeted_cot(base: &Cot, n: usize, k: &[usize]) -> Result<Cot> {
    let nb = base.m();
    if k.len() != nb {
        return Err(Error::InvalidInstance("one k value per candidate required".into()));
    }
    if n < nb {
        return Err(Error::InvalidInstance(format!("n = {n} is smaller than the base size {nb}")));
    }
    if let Some(&bad) = k.iter().find(|&&x| x > n) {
        return Err(Error::InvalidInstance(format!("k = {bad} exceeds n = {n}")));
    }
    let group = 2 * n;
    let pad_n = n * n;
    let pad = pad_cot(pad_n);
    let dcount = 2 * pad_n;
    let total = nb + dcount;
    let mut t = Cot::all_ties(total);
    for i in 0..nb {
        for j in i + 1..nb {
            t.set(i, j, base.get(i, j));
        }
    }
    for a in 0..dcount {
        for b in a + 1..dcount {
            if pad.beats(a, b) {
                t.set_winner(nb + a, nb + b);
            } else {
                t.set_winner(nb + b, nb + a);
            }
        }
    }
    for i in 0..nb {
        let own = i * group..(i + 1) * group;
        let x = group - k[i] - base.wins(i) as usize;
        for d in 0..dcount {
            let beats = !own.contains(&d) || d - own.start < x;
            if beats {
                t.set_winner(i, nb + d);
            } else {
                t.set_winner(nb + d, i);
            }
        }
    }
    Ok(t)
}

/// Extends `e` by 2n^2 padding candidates so that candidate i scores 2n^2 - k[i] + t_i alpha.
pub fn targeted_election(e: &Election, n: usize, k: &[usize]) -> Result<Election> {
    let t = targeted_cot(&e.outcome_table(), n, k)?;
    let mut names = e.names().to_vec();
    names.extend(fresh_names(e.names(), "pad", 2 * n * n));
    mcgarvey(&t, names)
}

/// Expected scaled score of base candidate i in the targeted construction.
pub fn targeted_score(alpha: Alpha, n: usize, k_i: usize, ties_i: u64) -> u64 {
    alpha.score((2 * n * n - k_i) as u64, ties_i)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cross {
    FirstWins,
    SecondWins,
    Tie,
}

/// Disjoint union of two election graphs with the given cross edges, re-synthesized by McGarvey.
/// `cross[a][b]` settles candidate a of `e1` against candidate b of `e2`.
pub fn combine(e1: &Election, e2: &Election, cross: &[Vec<Cross>]) -> Result<Election> {
    let (m1, m2) = (e1.m(), e2.m());
    if cross.len() != m1 || cross.iter().any(|r| r.len() != m2) {
        return Err(Error::InvalidInstance("cross specification must cover every cross pair".into()));
    }
    if let Some(n) = e1.names().iter().find(|n| e2.names().contains(n)) {
        return Err(Error::InvalidElection(format!("name collision: {n}")));
    }
    let t1 = e1.outcome_table();
    let t2 = e2.outcome_table();
    let t = Cot::from_fn(m1 + m2, |a, b| match (a < m1, b < m1) {
        (true, true) => t1.beats(a, b),
        (false, false) => t2.beats(a - m1, b - m1),
        (true, false) => cross[a][b - m1] == Cross::FirstWins,
        (false, true) => cross[b][a - m1] == Cross::SecondWins,
    });
    let mut names = e1.names().to_vec();
    names.extend(e2.names().iter().cloned());
    mcgarvey(&t, names)
}
