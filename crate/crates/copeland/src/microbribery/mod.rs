//! Microbribery: paying one unit per flipped pairwise entry of a single voter.

mod constructive;
mod destructive;
mod networks;

pub use constructive::{constructive_microbribery, constructive_min_cost, threshold_runs, ThresholdRun};
pub use destructive::{demote_cost, destructive_microbribery, destructive_min_cost, promote_cost};
pub use networks::{build_it, build_jt, build_lt, BriberyNetwork};

use crate::election::{Election, PairTable, Preference, VoterBlock, VsMatrix};
use crate::error::{Error, Result};

/// After the flip, unit voter `voter` prefers `winner` to `loser`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Microbribe {
    pub voter: usize,
    pub winner: usize,
    pub loser: usize,
}

/// Target state of one head-to-head contest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ContestChange {
    Win { winner: usize, loser: usize },
    Tie(usize, usize),
}

impl ContestChange {
    pub fn pair(self) -> (usize, usize) {
        match self {
            ContestChange::Win { winner, loser } => (winner.min(loser), winner.max(loser)),
            ContestChange::Tie(a, b) => (a.min(b), a.max(b)),
        }
    }

    /// Flips needed, or None if a tie is impossible.
    pub fn cost(self, vs: &VsMatrix, voters: u64) -> Option<u64> {
        match self {
            ContestChange::Win { winner, loser } => Some(wincost_vs(vs, winner, loser)),
            ContestChange::Tie(a, b) => tiecost_vs(vs, a, b, voters),
        }
    }

    pub fn apply(self, vs: &mut VsMatrix, voters: u64) {
        match self {
            ContestChange::Win { winner, loser } => {
                let v = vs.get(winner, loser);
                if v <= 0 {
                    vs.set(winner, loser, v + 2 * wincost_vs(vs, winner, loser) as i64);
                }
            }
            ContestChange::Tie(a, b) => {
                debug_assert!(voters % 2 == 0);
                vs.set(a, b, 0)
            }
        }
    }
}

/// Each flip moves vs by 2.
pub fn wincost_vs(vs: &VsMatrix, i: usize, j: usize) -> u64 {
    let v = vs.get(i, j);
    if v > 0 {
        0
    } else {
        ((2 - v) / 2) as u64
    }
}

pub fn tiecost_vs(vs: &VsMatrix, i: usize, j: usize, voters: u64) -> Option<u64> {
    if voters % 2 == 1 {
        None
    } else {
        Some(vs.get(i, j).unsigned_abs() / 2)
    }
}

fn distinct(e: &Election, i: usize, j: usize) -> Result<()> {
    if i >= e.m() || j >= e.m() {
        return Err(Error::UnknownCandidate(format!("#{}", i.max(j))));
    }
    if i == j {
        return Err(Error::InvalidInstance("contest needs two distinct candidates".into()));
    }
    Ok(())
}

/// Fewest flips making i defeat j.
pub fn wincost(e: &Election, i: usize, j: usize) -> Result<u64> {
    distinct(e, i, j)?;
    Ok(wincost_vs(&e.vs_matrix(), i, j))
}

/// Fewest flips making i and j tie; None stands for infinity (odd number of voters).
pub fn tiecost(e: &Election, i: usize, j: usize) -> Result<Option<u64>> {
    distinct(e, i, j)?;
    Ok(tiecost_vs(&e.vs_matrix(), i, j, e.voter_count()))
}

/// Exceeds the cost of any microbribery in `e`.
pub fn big_b(e: &Election) -> u64 {
    big_b_for(e.voter_count(), e.m())
}

pub fn big_b_for(voters: u64, m: usize) -> u64 {
    voters * (m * m) as u64 + 1
}

/// Minimum-cost microbribery found by an algorithm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MicrobriberyPlan {
    pub cost: u64,
    pub changes: Vec<ContestChange>,
}

impl MicrobriberyPlan {
    pub fn free() -> MicrobriberyPlan {
        MicrobriberyPlan { cost: 0, changes: Vec::new() }
    }
}

/// Concrete flips for a set of contest changes on distinct pairs: each contest is flipped
/// by the lowest-indexed unit voters currently preferring the side that has to give way.
pub fn realize(e: &Election, changes: &[ContestChange]) -> Vec<Microbribe> {
    let vs = e.vs_matrix();
    let mut out = Vec::new();
    for &ch in changes {
        let (winner, loser, r) = match ch {
            ContestChange::Win { winner, loser } => (winner, loser, wincost_vs(&vs, winner, loser)),
            ContestChange::Tie(a, b) => {
                let v = vs.get(a, b);
                if v > 0 {
                    (b, a, (v / 2) as u64)
                } else {
                    (a, b, (-v / 2) as u64)
                }
            }
        };
        let mut left = r;
        let mut unit = 0usize;
        for block in e.voters() {
            if left == 0 {
                break;
            }
            let prefers_loser = block.pref.prefers(loser, winner);
            let take = if prefers_loser { left.min(block.multiplicity) } else { 0 };
            for u in 0..take as usize {
                out.push(Microbribe { voter: unit + u, winner, loser });
            }
            left -= take;
            unit += block.multiplicity as usize;
        }
    }
    out.sort();
    out
}

/// The election after the flips. Bribed unit voters become separate table blocks.
pub fn apply_microbribes(e: &Election, bribes: &[Microbribe]) -> Result<Election> {
    let m = e.m();
    let total = e.voter_count() as usize;
    let mut touched = std::collections::BTreeMap::<usize, Vec<&Microbribe>>::new();
    for b in bribes {
        if b.voter >= total || b.winner >= m || b.loser >= m || b.winner == b.loser {
            return Err(Error::InvalidInstance(format!("bad microbribe {b:?}")));
        }
        touched.entry(b.voter).or_default().push(b);
    }
    let mut voters = Vec::new();
    let mut unit = 0usize;
    for block in e.voters() {
        let lo = unit;
        let hi = unit + block.multiplicity as usize;
        let hits: Vec<(usize, &Vec<&Microbribe>)> = touched.range(lo..hi).map(|(&u, v)| (u, v)).collect();
        let untouched = block.multiplicity - hits.len() as u64;
        if untouched > 0 {
            voters.push(VoterBlock::new(block.pref.clone(), untouched));
        }
        for (_, flips) in hits {
            let mut t: PairTable = block.pref.to_table(m);
            for f in flips {
                t.set(f.winner, f.loser);
            }
            voters.push(VoterBlock::new(Preference::Table(t), 1));
        }
        unit = hi;
    }
    e.with_voters(voters)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn even() -> Election {
        Election::with_default_names(
            4,
            vec![
                VoterBlock::order(&[0, 1, 2, 3], 1),
                VoterBlock::order(&[3, 2, 1, 0], 1),
                VoterBlock::order(&[2, 0, 3, 1], 1),
                VoterBlock::order(&[2, 3, 0, 1], 1),
            ],
        )
        .unwrap()
    }

    #[test]
    fn costs_on_even_example() {
        let e = even();
        assert_eq!(e.relative_vote_score(0, 3).unwrap(), 0);
        assert_eq!(e.relative_vote_score(2, 0).unwrap(), 2);
        assert_eq!(wincost(&e, 0, 2).unwrap(), 2);
        assert_eq!(tiecost(&e, 0, 2).unwrap(), Some(1));
        assert_eq!(tiecost(&e, 0, 3).unwrap(), Some(0));
        assert_eq!(wincost(&e, 0, 3).unwrap(), 1);
        assert_eq!(wincost(&e, 2, 0).unwrap(), 0);
        assert!(wincost(&e, 1, 1).is_err());
        assert_eq!(big_b(&e), 65);
    }

    #[test]
    fn realize_flips_lowest_units() {
        let e = even();
        let flips = realize(&e, &[ContestChange::Win { winner: 0, loser: 2 }]);
        // Voters 1, 2 and 3 prefer c2 to c0; the two lowest are flipped.
        assert_eq!(flips, vec![Microbribe { voter: 1, winner: 0, loser: 2 }, Microbribe { voter: 2, winner: 0, loser: 2 }]);
        let after = apply_microbribes(&e, &flips).unwrap();
        assert_eq!(after.relative_vote_score(0, 2).unwrap(), 2);
        assert_eq!(after.voter_count(), 4);
    }
}
