//! Control problems: instances, actions, replay, and the polynomial-time algorithms.

mod poly;

pub use poly::{ccacu_fixed_point_with_order, ccacu_greedy, dc_partition, dcac_greedy, dcdc_greedy};

use crate::alpha::Alpha;
use crate::election::{goal_met, Election, Mode, VoterBlock, VsMatrix, WinnerModel};
use crate::error::{Error, Result};
use crate::two_stage::{two_stage_eval, Partition, PartitionKind, TieRule};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ControlType {
    /// Adding at most k spoiler candidates.
    AC,
    /// Adding any number of spoiler candidates.
    ACu,
    DC,
    PC(TieRule),
    RPC(TieRule),
    AV,
    DV,
    PV(TieRule),
}

impl ControlType {
    pub const ALL: [ControlType; 11] = [
        ControlType::AC,
        ControlType::ACu,
        ControlType::DC,
        ControlType::PC(TieRule::TE),
        ControlType::PC(TieRule::TP),
        ControlType::RPC(TieRule::TE),
        ControlType::RPC(TieRule::TP),
        ControlType::AV,
        ControlType::DV,
        ControlType::PV(TieRule::TE),
        ControlType::PV(TieRule::TP),
    ];

    pub fn is_candidate_control(self) -> bool {
        !matches!(self, ControlType::AV | ControlType::DV | ControlType::PV(_))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ControlTag {
    pub mode: Mode,
    pub kind: ControlType,
}

impl ControlTag {
    pub fn new(mode: Mode, kind: ControlType) -> ControlTag {
        ControlTag { mode, kind }
    }

    pub fn all() -> Vec<ControlTag> {
        [Mode::Constructive, Mode::Destructive]
            .iter()
            .flat_map(|&mode| ControlType::ALL.iter().map(move |&kind| ControlTag { mode, kind }))
            .collect()
    }
}

fn rule_name(r: TieRule) -> &'static str {
    match r {
        TieRule::TE => "TE",
        TieRule::TP => "TP",
    }
}

impl fmt::Display for ControlTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.mode {
            Mode::Constructive => "CC",
            Mode::Destructive => "DC",
        };
        match self.kind {
            ControlType::AC => write!(f, "{prefix}AC"),
            ControlType::ACu => write!(f, "{prefix}ACu"),
            ControlType::DC => write!(f, "{prefix}DC"),
            ControlType::PC(r) => write!(f, "{prefix}PC-{}", rule_name(r)),
            ControlType::RPC(r) => write!(f, "{prefix}RPC-{}", rule_name(r)),
            ControlType::AV => write!(f, "{prefix}AV"),
            ControlType::DV => write!(f, "{prefix}DV"),
            ControlType::PV(r) => write!(f, "{prefix}PV-{}", rule_name(r)),
        }
    }
}

impl FromStr for ControlTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<ControlTag> {
        ControlTag::all()
            .into_iter()
            .find(|t| t.to_string() == s)
            .ok_or_else(|| Error::InvalidInstance(format!("unknown control tag {s}")))
    }
}

/// Every problem an oracle can decide.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProblemTag {
    Bribery(Mode),
    Microbribery(Mode),
    Control(ControlTag),
    CondorcetCcdv,
    CondorcetCcpv,
}

impl fmt::Display for ProblemTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = |mode: &Mode| if *mode == Mode::Constructive { "CON" } else { "DES" };
        match self {
            ProblemTag::Bribery(mode) => write!(f, "BRIBERY-{}", m(mode)),
            ProblemTag::Microbribery(mode) => write!(f, "MICROBRIBERY-{}", m(mode)),
            ProblemTag::Control(t) => write!(f, "{t}"),
            ProblemTag::CondorcetCcdv => write!(f, "CONDORCET-CCDV"),
            ProblemTag::CondorcetCcpv => write!(f, "CONDORCET-CCPV"),
        }
    }
}

impl FromStr for ProblemTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<ProblemTag> {
        Ok(match s {
            "BRIBERY-CON" => ProblemTag::Bribery(Mode::Constructive),
            "BRIBERY-DES" => ProblemTag::Bribery(Mode::Destructive),
            "MICROBRIBERY-CON" => ProblemTag::Microbribery(Mode::Constructive),
            "MICROBRIBERY-DES" => ProblemTag::Microbribery(Mode::Destructive),
            "CONDORCET-CCDV" => ProblemTag::CondorcetCcdv,
            "CONDORCET-CCPV" => ProblemTag::CondorcetCcpv,
            other => ProblemTag::Control(other.parse()?),
        })
    }
}

/// A control instance. `election` holds every candidate (registered ones and spoilers) and
/// the registered voters; `pool` holds the unregistered voters for AV.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ControlInstance {
    pub election: Election,
    pub spoilers: Vec<usize>,
    pub pool: Vec<VoterBlock>,
    pub target: usize,
    pub budget: u64,
}

impl ControlInstance {
    pub fn new(election: Election, target: usize, budget: u64) -> ControlInstance {
        ControlInstance { election, spoilers: Vec::new(), pool: Vec::new(), target, budget }
    }

    pub fn is_spoiler(&self, c: usize) -> bool {
        self.spoilers.contains(&c)
    }

    /// The registered candidate set C.
    pub fn registered(&self) -> Vec<usize> {
        (0..self.election.m()).filter(|&c| !self.is_spoiler(c)).collect()
    }

    pub fn pool_vs(&self, counts: &[u64]) -> VsMatrix {
        VsMatrix::from_blocks(self.election.m(), self.pool.iter().zip(counts).map(|(b, &k)| (&b.pref, k)))
    }

    pub fn validate(&self) -> Result<()> {
        let m = self.election.m();
        if self.target >= m || self.is_spoiler(self.target) {
            return Err(Error::InvalidInstance("target must be a registered candidate".into()));
        }
        let mut seen = vec![false; m];
        for &d in &self.spoilers {
            if d >= m || seen[d] {
                return Err(Error::InvalidInstance("bad spoiler list".into()));
            }
            seen[d] = true;
        }
        self.election.with_voters(self.pool.clone())?;
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ControlAction {
    AddCandidates(Vec<usize>),
    DeleteCandidates(Vec<usize>),
    /// First part C1 of a partition of C.
    PartitionCandidates(Vec<usize>),
    /// Voters added per pool block.
    AddVoters(Vec<u64>),
    /// Voters deleted per block.
    DeleteVoters(Vec<u64>),
    /// Voters placed in V1 per block.
    PartitionVoters(Vec<u64>),
}

fn distinct_within(ids: &[usize], allowed: impl Fn(usize) -> bool) -> bool {
    let mut s = ids.to_vec();
    s.sort_unstable();
    s.windows(2).all(|w| w[0] != w[1]) && ids.iter().all(|&c| allowed(c))
}

fn counts_fit(counts: &[u64], blocks: &[VoterBlock]) -> bool {
    counts.len() == blocks.len() && counts.iter().zip(blocks).all(|(&k, b)| k <= b.multiplicity)
}

/// Nonunique winners after applying `action`, checking it against the instance's rules.
pub fn final_winners(kind: ControlType, inst: &ControlInstance, action: &ControlAction, alpha: Alpha) -> Result<Vec<usize>> {
    let e = &inst.election;
    let bad = |msg: &str| Err(Error::InvalidInstance(format!("{msg} for {kind:?}")));
    if !matches!(kind, ControlType::AC | ControlType::ACu) && !inst.spoilers.is_empty() {
        return bad("spoilers are only meaningful for adding candidates");
    }
    let c = inst.registered();
    let p = inst.target;
    match (kind, action) {
        (ControlType::AC | ControlType::ACu, ControlAction::AddCandidates(add)) => {
            if !distinct_within(add, |d| inst.is_spoiler(d)) {
                return bad("added candidates must be distinct spoilers");
            }
            if kind == ControlType::AC && add.len() as u64 > inst.budget {
                return bad("too many added candidates");
            }
            let mut members = c;
            members.extend(add);
            members.sort_unstable();
            Ok(e.vs_matrix().winners_within(&members, alpha))
        }
        (ControlType::DC, ControlAction::DeleteCandidates(del)) => {
            if !distinct_within(del, |d| d < e.m() && d != p) || del.len() as u64 > inst.budget {
                return bad("deleted candidates must be distinct, exclude p and respect the budget");
            }
            let members: Vec<usize> = c.into_iter().filter(|x| !del.contains(x)).collect();
            Ok(e.vs_matrix().winners_within(&members, alpha))
        }
        (ControlType::PC(rule), ControlAction::PartitionCandidates(c1)) => {
            two_stage_eval(e, alpha, rule, PartitionKind::PC, &Partition::Candidates(c1.clone()))
        }
        (ControlType::RPC(rule), ControlAction::PartitionCandidates(c1)) => {
            two_stage_eval(e, alpha, rule, PartitionKind::RPC, &Partition::Candidates(c1.clone()))
        }
        (ControlType::AV, ControlAction::AddVoters(add)) => {
            if !counts_fit(add, &inst.pool) || add.iter().sum::<u64>() > inst.budget {
                return bad("added voters must come from the pool within budget");
            }
            let mut vs = e.vs_matrix();
            let extra = inst.pool_vs(add);
            for i in 0..e.m() {
                for j in i + 1..e.m() {
                    vs.set(i, j, vs.get(i, j) + extra.get(i, j));
                }
            }
            Ok(vs.winners_within(&(0..e.m()).collect::<Vec<_>>(), alpha))
        }
        (ControlType::DV, ControlAction::DeleteVoters(del)) => {
            if !counts_fit(del, e.voters()) || del.iter().sum::<u64>() > inst.budget {
                return bad("deleted voters must exist and respect the budget");
            }
            let left: Vec<u64> = e.voters().iter().zip(del).map(|(b, &k)| b.multiplicity - k).collect();
            Ok(e.vs_matrix_with_counts(&left).winners_within(&(0..e.m()).collect::<Vec<_>>(), alpha))
        }
        (ControlType::PV(rule), ControlAction::PartitionVoters(v1)) => {
            two_stage_eval(e, alpha, rule, PartitionKind::PV, &Partition::Voters(v1.clone()))
        }
        _ => bad("action does not match the control type"),
    }
}

/// Whether `action` achieves the tag's goal for the target.
pub fn achieves(tag: ControlTag, inst: &ControlInstance, action: &ControlAction, alpha: Alpha, model: WinnerModel) -> Result<bool> {
    let w = final_winners(tag.kind, inst, action, alpha)?;
    Ok(goal_met(&w, inst.target, tag.mode, model))
}
