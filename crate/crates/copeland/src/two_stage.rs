use crate::alpha::Alpha;
use crate::election::{Election, VsMatrix};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TieRule {
    TE,
    TP,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PartitionKind {
    PC,
    RPC,
    PV,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Partition {
    /// The first part C1; the second is the complement.
    Candidates(Vec<usize>),
    /// Per-block number of voters placed in V1; the rest form V2.
    Voters(Vec<u64>),
}

/// Candidates advancing from a sub-election under the given rule.
pub fn survivors(vs: &VsMatrix, members: &[usize], alpha: Alpha, rule: TieRule) -> Vec<usize> {
    if members.is_empty() {
        return Vec::new();
    }
    let w = vs.winners_within(members, alpha);
    match rule {
        TieRule::TP => w,
        TieRule::TE if w.len() == 1 => w,
        TieRule::TE => Vec::new(),
    }
}

fn sorted_union(mut a: Vec<usize>, b: Vec<usize>) -> Vec<usize> {
    a.extend(b);
    a.sort_unstable();
    a.dedup();
    a
}

/// Nonunique winners of the final round (empty when nobody reaches it).
pub fn two_stage_eval(e: &Election, alpha: Alpha, rule: TieRule, kind: PartitionKind, part: &Partition) -> Result<Vec<usize>> {
    let m = e.m();
    match (kind, part) {
        (PartitionKind::PC | PartitionKind::RPC, Partition::Candidates(c1)) => {
            let mut in1 = vec![false; m];
            for &c in c1 {
                if c >= m || in1[c] {
                    return Err(Error::NotAPartition("candidate part repeats or is out of range".into()));
                }
                in1[c] = true;
            }
            let mut first: Vec<usize> = c1.clone();
            first.sort_unstable();
            let second: Vec<usize> = (0..m).filter(|&c| !in1[c]).collect();
            let vs = e.vs_matrix();
            let s1 = survivors(&vs, &first, alpha, rule);
            let s2 = if kind == PartitionKind::PC { second } else { survivors(&vs, &second, alpha, rule) };
            let fin = sorted_union(s1, s2);
            Ok(vs.winners_within(&fin, alpha))
        }
        (PartitionKind::PV, Partition::Voters(v1)) => {
            if v1.len() != e.voters().len() || v1.iter().zip(e.voters()).any(|(&k, b)| k > b.multiplicity) {
                return Err(Error::NotAPartition("voter counts do not fit the blocks".into()));
            }
            let v2: Vec<u64> = e.voters().iter().zip(v1).map(|(b, &k)| b.multiplicity - k).collect();
            let all: Vec<usize> = (0..m).collect();
            let s1 = survivors(&e.vs_matrix_with_counts(v1), &all, alpha, rule);
            let s2 = survivors(&e.vs_matrix_with_counts(&v2), &all, alpha, rule);
            let fin = sorted_union(s1, s2);
            Ok(e.vs_matrix().winners_within(&fin, alpha))
        }
        _ => Err(Error::NotAPartition("partition type does not match the election kind".into())),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CondorcetPv {
    Winner(usize),
    NoWinner,
    /// Some subelection lacks a Condorcet winner.
    Inadmissible,
}

/// Condorcet voter-partition evaluation in the model where each part must elect exactly one winner.
pub fn condorcet_pv_eval(e: &Election, v1: &[u64]) -> Result<CondorcetPv> {
    if v1.len() != e.voters().len() || v1.iter().zip(e.voters()).any(|(&k, b)| k > b.multiplicity) {
        return Err(Error::NotAPartition("voter counts do not fit the blocks".into()));
    }
    let v2: Vec<u64> = e.voters().iter().zip(v1).map(|(b, &k)| b.multiplicity - k).collect();
    let a = e.vs_matrix_with_counts(v1).condorcet_winner();
    let b = e.vs_matrix_with_counts(&v2).condorcet_winner();
    let (a, b) = match (a, b) {
        (Some(a), Some(b)) => (a, b),
        _ => return Ok(CondorcetPv::Inadmissible),
    };
    if a == b {
        return Ok(CondorcetPv::Winner(a));
    }
    let v = e.vs_matrix().get(a, b);
    Ok(if v > 0 {
        CondorcetPv::Winner(a)
    } else if v < 0 {
        CondorcetPv::Winner(b)
    } else {
        CondorcetPv::NoWinner
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::VoterBlock;

    fn cycle() -> Election {
        Election::with_default_names(
            3,
            vec![VoterBlock::order(&[0, 1, 2], 1), VoterBlock::order(&[1, 2, 0], 1), VoterBlock::order(&[2, 0, 1], 1)],
        )
        .unwrap()
    }

    #[test]
    fn pv_with_empty_second_part() {
        let e = cycle();
        let w = two_stage_eval(&e, Alpha::HALF, TieRule::TE, PartitionKind::PV, &Partition::Voters(vec![1, 1, 1])).unwrap();
        assert_eq!(w, vec![]);
        let w = two_stage_eval(&e, Alpha::HALF, TieRule::TP, PartitionKind::PV, &Partition::Voters(vec![1, 1, 1])).unwrap();
        assert_eq!(w, vec![0, 1, 2]);
    }

    #[test]
    fn pc_run_off_difference() {
        let e = cycle();
        // C1 = {0, 1}: 0 beats 1. PC final {0, 2}: 2 wins. RPC final {0, 2} too.
        let part = Partition::Candidates(vec![0, 1]);
        assert_eq!(two_stage_eval(&e, Alpha::ONE, TieRule::TE, PartitionKind::PC, &part).unwrap(), vec![2]);
        assert_eq!(two_stage_eval(&e, Alpha::ONE, TieRule::TE, PartitionKind::RPC, &part).unwrap(), vec![2]);
        assert!(two_stage_eval(&e, Alpha::ONE, TieRule::TE, PartitionKind::RPC, &Partition::Candidates(vec![0, 0])).is_err());
    }

    #[test]
    fn condorcet_partition() {
        let e = cycle();
        assert_eq!(condorcet_pv_eval(&e, &[1, 1, 1]).unwrap(), CondorcetPv::Inadmissible);
        assert_eq!(condorcet_pv_eval(&e, &[1, 0, 0]).unwrap(), CondorcetPv::Inadmissible);
        let u = Election::with_default_names(2, vec![VoterBlock::order(&[0, 1], 2)]).unwrap();
        assert_eq!(condorcet_pv_eval(&u, &[1]).unwrap(), CondorcetPv::Winner(0));
    }
}
