//! The three flow networks behind constructive microbribery. Candidate `p` plays the role of
//! c_0; every unit of score that reaches the sink through a rival costs B.

use super::{big_b_for, tiecost_vs, wincost_vs, ContestChange};
use crate::alpha::Alpha;
use crate::election::{Election, VsMatrix, WinnerModel};
use crate::error::{Error, Result};
use crate::flow::FlowNetwork;

#[derive(Clone, Debug)]
pub struct BriberyNetwork {
    pub net: FlowNetwork,
    /// Required flow value F.
    pub target: u64,
    /// Arc whose flow is p's final score.
    pub p_exit: usize,
    pub big_b: u64,
    /// Contest change signalled by positive flow on each arc.
    pub meaning: Vec<Option<ContestChange>>,
}

struct Builder {
    net: FlowNetwork,
    meaning: Vec<Option<ContestChange>>,
}

impl Builder {
    fn new() -> Builder {
        Builder { net: FlowNetwork::new(), meaning: Vec::new() }
    }

    fn arc(&mut self, from: usize, to: usize, cap: u64, cost: u64, meaning: Option<ContestChange>) -> usize {
        let id = self.net.add_arc(from, to, cap, cost).expect("networks are built without duplicate arcs");
        self.meaning.push(meaning);
        id
    }

    fn finish(self, p_exit: usize, big_b: u64) -> BriberyNetwork {
        let target = self.net.source_capacity();
        BriberyNetwork { net: self.net, target, p_exit, big_b, meaning: self.meaning }
    }
}

fn rival_cap(t: u64, model: WinnerModel) -> u64 {
    match model {
        WinnerModel::NonUnique => t,
        WinnerModel::Unique => t.saturating_sub(1),
    }
}

fn check(e: &Election, p: usize, t: u64) -> Result<()> {
    if p >= e.m() {
        return Err(Error::UnknownCandidate(format!("#{p}")));
    }
    if t >= e.m().max(1) as u64 {
        return Err(Error::InvalidInstance(format!("threshold {t} out of range")));
    }
    Ok(())
}

fn candidate_nodes(b: &mut Builder, e: &Election) -> Vec<usize> {
    (0..e.m()).map(|c| b.net.add_node(e.name(c).to_string())).collect()
}

/// Network I(T), for an odd number of voters (any alpha).
pub fn build_it(e: &Election, p: usize, t: u64, model: WinnerModel) -> Result<BriberyNetwork> {
    check(e, p, t)?;
    let voters = e.voter_count();
    if voters % 2 == 0 {
        return Err(Error::InvalidInstance("I(T) needs an odd number of voters".into()));
    }
    let vs = e.vs_matrix();
    let bb = big_b_for(voters, e.m());
    let mut b = Builder::new();
    let c = candidate_nodes(&mut b, e);
    let (s, sink) = (b.net.source(), b.net.sink());
    for x in 0..e.m() {
        b.arc(s, c[x], vs.score(Alpha::ZERO, x), 0, None);
    }
    for i in 0..e.m() {
        for j in 0..e.m() {
            if i != j && vs.get(i, j) > 0 {
                b.arc(c[i], c[j], 1, wincost_vs(&vs, j, i), Some(ContestChange::Win { winner: j, loser: i }));
            }
        }
    }
    let mut p_exit = 0;
    for x in 0..e.m() {
        if x == p {
            p_exit = b.arc(c[x], sink, t, 0, None);
        } else {
            b.arc(c[x], sink, rival_cap(t, model), bb, None);
        }
    }
    Ok(b.finish(p_exit, bb))
}

/// Network J(T), for an even number of voters and alpha = 0.
pub fn build_jt(e: &Election, p: usize, t: u64, model: WinnerModel) -> Result<BriberyNetwork> {
    check(e, p, t)?;
    let voters = e.voter_count();
    if voters % 2 == 1 {
        return Err(Error::InvalidInstance("J(T) needs an even number of voters".into()));
    }
    let vs = e.vs_matrix();
    let m = e.m();
    let bb = big_b_for(voters, m);
    let mut b = Builder::new();
    let c = candidate_nodes(&mut b, e);
    let (s, sink) = (b.net.source(), b.net.sink());
    for x in 0..m {
        b.arc(s, c[x], vs.score(Alpha::ZERO, x), 0, None);
    }
    let tc = |vs: &VsMatrix, a, z| tiecost_vs(vs, a, z, voters).expect("even electorate");
    for i in (0..m).filter(|&i| i != p) {
        for j in (0..m).filter(|&j| j != p && j != i) {
            if vs.get(i, j) > 0 {
                let n = b.net.add_node(format!("{}_{}", e.name(i), e.name(j)));
                b.arc(c[i], n, 1, tc(&vs, j, i), Some(ContestChange::Tie(i, j)));
                b.arc(n, sink, 1, bb, None);
            }
        }
    }
    for i in (0..m).filter(|&i| i != p) {
        let v = vs.get(i, p);
        if v < 0 {
            continue;
        }
        let n = b.net.add_node(format!("{}_{}", e.name(i), e.name(p)));
        if v > 0 {
            b.arc(c[i], n, 1, tc(&vs, p, i), Some(ContestChange::Tie(i, p)));
        } else {
            b.arc(s, n, 1, 0, None);
        }
        b.arc(n, c[p], 1, wincost_vs(&vs, p, i) - tc(&vs, p, i), Some(ContestChange::Win { winner: p, loser: i }));
        b.arc(n, sink, 1, bb, None);
    }
    let mut p_exit = 0;
    for x in 0..m {
        if x == p {
            p_exit = b.arc(c[x], sink, t, 0, None);
        } else {
            b.arc(c[x], sink, rival_cap(t, model), bb, None);
        }
    }
    Ok(b.finish(p_exit, bb))
}

/// Network L(T), for an even number of voters and alpha = 1.
pub fn build_lt(e: &Election, p: usize, t: u64, model: WinnerModel) -> Result<BriberyNetwork> {
    check(e, p, t)?;
    let voters = e.voter_count();
    if voters % 2 == 1 {
        return Err(Error::InvalidInstance("L(T) needs an even number of voters".into()));
    }
    let vs = e.vs_matrix();
    let m = e.m();
    let bb = big_b_for(voters, m);
    let mut b = Builder::new();
    let c = candidate_nodes(&mut b, e);
    let cp: Vec<usize> = (0..m).map(|x| b.net.add_node(format!("{}'", e.name(x)))).collect();
    let (s, sink) = (b.net.source(), b.net.sink());
    for x in 0..m {
        b.arc(s, c[x], vs.score(Alpha::ONE, x), 0, None);
    }
    for i in (0..m).filter(|&i| i != p) {
        for j in (0..m).filter(|&j| j != p && j != i) {
            if vs.get(i, j) > 0 {
                b.arc(c[i], c[j], 1, wincost_vs(&vs, j, i), Some(ContestChange::Win { winner: j, loser: i }));
            }
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            if vs.get(i, j) == 0 {
                let n = b.net.add_node(format!("{}_{}", e.name(i), e.name(j)));
                b.arc(c[i], n, 1, wincost_vs(&vs, j, i), Some(ContestChange::Win { winner: j, loser: i }));
                b.arc(c[j], n, 1, wincost_vs(&vs, i, j), Some(ContestChange::Win { winner: i, loser: j }));
                b.arc(n, sink, 1, bb, None);
            }
        }
    }
    for i in (0..m).filter(|&i| i != p) {
        if vs.get(i, p) > 0 {
            let n = b.net.add_node(format!("{}_{}", e.name(p), e.name(i)));
            b.arc(c[i], n, 1, wincost_vs(&vs, p, i), Some(ContestChange::Win { winner: p, loser: i }));
            let tie = tiecost_vs(&vs, p, i, voters).expect("even electorate");
            b.arc(cp[i], n, 1, tie, Some(ContestChange::Tie(p, i)));
            b.arc(n, c[p], 1, 0, None);
        }
    }
    let mut p_exit = 0;
    for x in 0..m {
        if x == p {
            p_exit = b.arc(c[x], cp[x], t, 0, None);
            b.arc(cp[x], sink, t, 0, None);
        } else {
            b.arc(c[x], cp[x], rival_cap(t, model), 0, None);
            b.arc(cp[x], sink, t, bb, None);
        }
    }
    Ok(b.finish(p_exit, bb))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::VoterBlock;

    fn votes(even: bool) -> Election {
        let mut v = vec![
            VoterBlock::order(&[0, 1, 2, 3], 1),
            VoterBlock::order(&[3, 2, 1, 0], 1),
            VoterBlock::order(&[2, 0, 3, 1], 1),
        ];
        if even {
            v.push(VoterBlock::order(&[2, 3, 0, 1], 1));
        }
        Election::with_default_names(4, v).unwrap()
    }

    #[test]
    fn targets_and_big_b() {
        let i = build_it(&votes(false), 0, 2, WinnerModel::NonUnique).unwrap();
        assert_eq!((i.target, i.big_b), (6, 49));
        let j = build_jt(&votes(true), 0, 2, WinnerModel::NonUnique).unwrap();
        assert_eq!((j.target, j.big_b), (6, 65));
        let l = build_lt(&votes(true), 0, 2, WinnerModel::NonUnique).unwrap();
        assert_eq!(l.target, 7);
    }

    #[test]
    fn parity_mismatch() {
        assert!(build_it(&votes(true), 0, 1, WinnerModel::NonUnique).is_err());
        assert!(build_jt(&votes(false), 0, 1, WinnerModel::NonUnique).is_err());
        assert!(build_lt(&votes(false), 0, 1, WinnerModel::NonUnique).is_err());
        assert!(build_it(&votes(false), 0, 4, WinnerModel::NonUnique).is_err());
    }
}
