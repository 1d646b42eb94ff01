use crate::alpha::Alpha;
use crate::cot::{Cot, Outcome};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WinnerModel {
    NonUnique,
    Unique,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Constructive,
    Destructive,
}

/// Index of the unordered pair {i, j} (i != j) in a row-major upper triangle.
pub fn pair_index(m: usize, i: usize, j: usize) -> usize {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    a * (2 * m - a - 1) / 2 + (b - a - 1)
}

pub fn pair_count(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}

/// Full pairwise table; `bits[pair_index(i,j)]` is true iff the smaller id is preferred.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PairTable {
    m: usize,
    bits: Vec<bool>,
}

impl PairTable {
    pub fn from_fn(m: usize, mut prefers: impl FnMut(usize, usize) -> bool) -> PairTable {
        let mut bits = vec![false; pair_count(m)];
        for i in 0..m {
            for j in i + 1..m {
                bits[pair_index(m, i, j)] = prefers(i, j);
            }
        }
        PairTable { m, bits }
    }

    pub fn from_bits(m: usize, bits: Vec<bool>) -> PairTable {
        assert_eq!(bits.len(), pair_count(m));
        PairTable { m, bits }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn prefers(&self, a: usize, b: usize) -> bool {
        let low = self.bits[pair_index(self.m, a, b)];
        if a < b {
            low
        } else {
            !low
        }
    }

    /// Make `winner` preferred over `loser`.
    pub fn set(&mut self, winner: usize, loser: usize) {
        let idx = pair_index(self.m, winner, loser);
        self.bits[idx] = winner < loser;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Preference {
    /// Most preferred first.
    Order(Vec<usize>),
    Table(PairTable),
}

impl Preference {
    pub fn prefers(&self, a: usize, b: usize) -> bool {
        match self {
            Preference::Order(o) => {
                for &c in o {
                    if c == a {
                        return true;
                    }
                    if c == b {
                        return false;
                    }
                }
                false
            }
            Preference::Table(t) => t.prefers(a, b),
        }
    }

    pub fn to_table(&self, m: usize) -> PairTable {
        match self {
            Preference::Table(t) => t.clone(),
            Preference::Order(o) => {
                let mut pos = vec![0; m];
                for (k, &c) in o.iter().enumerate() {
                    pos[c] = k;
                }
                PairTable::from_fn(m, |i, j| pos[i] < pos[j])
            }
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Preference::Order(_))
    }

    /// Restrict to `keep` (old ids), renumbered by position in `keep`.
    pub fn restrict(&self, keep: &[usize], m: usize) -> Preference {
        match self {
            Preference::Order(o) => {
                let mut newid = vec![usize::MAX; m];
                for (k, &c) in keep.iter().enumerate() {
                    newid[c] = k;
                }
                Preference::Order(o.iter().filter(|&&c| newid[c] != usize::MAX).map(|&c| newid[c]).collect())
            }
            Preference::Table(t) => {
                Preference::Table(PairTable::from_fn(keep.len(), |i, j| t.prefers(keep[i], keep[j])))
            }
        }
    }

    fn validate(&self, m: usize) -> Result<()> {
        match self {
            Preference::Order(o) => {
                let mut seen = vec![false; m];
                if o.len() != m {
                    return Err(Error::InvalidElection(format!("order has {} entries, expected {m}", o.len())));
                }
                for &c in o {
                    if c >= m || seen[c] {
                        return Err(Error::InvalidElection("order is not a permutation".into()));
                    }
                    seen[c] = true;
                }
                Ok(())
            }
            Preference::Table(t) if t.m != m => Err(Error::InvalidElection("table size mismatch".into())),
            Preference::Table(_) => Ok(()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VoterBlock {
    pub pref: Preference,
    pub multiplicity: u64,
}

impl VoterBlock {
    pub fn new(pref: Preference, multiplicity: u64) -> VoterBlock {
        VoterBlock { pref, multiplicity }
    }

    pub fn order(order: &[usize], multiplicity: u64) -> VoterBlock {
        VoterBlock { pref: Preference::Order(order.to_vec()), multiplicity }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Election {
    names: Vec<String>,
    voters: Vec<VoterBlock>,
}

fn valid_name(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

impl Election {
    pub fn new(names: Vec<String>, voters: Vec<VoterBlock>) -> Result<Election> {
        for (i, n) in names.iter().enumerate() {
            if !valid_name(n) {
                return Err(Error::InvalidElection(format!("bad candidate name {n:?}")));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidElection(format!("duplicate candidate {n}")));
            }
        }
        let m = names.len();
        for v in &voters {
            if v.multiplicity == 0 {
                return Err(Error::InvalidElection("voter multiplicity must be positive".into()));
            }
            v.pref.validate(m)?;
        }
        Ok(Election { names, voters })
    }

    /// Candidates named c0..c{m-1}.
    pub fn with_default_names(m: usize, voters: Vec<VoterBlock>) -> Result<Election> {
        Election::new((0..m).map(|i| format!("c{i}")).collect(), voters)
    }

    pub fn m(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, c: usize) -> &str {
        &self.names[c]
    }

    pub fn voters(&self) -> &[VoterBlock] {
        &self.voters
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names.iter().position(|n| n == name).ok_or_else(|| Error::UnknownCandidate(name.to_string()))
    }

    pub fn voter_count(&self) -> u64 {
        self.voters.iter().map(|v| v.multiplicity).sum()
    }

    pub fn is_rational(&self) -> bool {
        self.voters.iter().all(|v| v.pref.is_rational())
    }

    fn check(&self, c: usize) -> Result<()> {
        if c < self.m() {
            Ok(())
        } else {
            Err(Error::UnknownCandidate(format!("#{c}")))
        }
    }

    pub fn vs_matrix(&self) -> VsMatrix {
        VsMatrix::from_blocks(self.m(), self.voters.iter().map(|v| (&v.pref, v.multiplicity)))
    }

    /// vs matrix for the same preferences but per-block multiplicities `counts`.
    pub fn vs_matrix_with_counts(&self, counts: &[u64]) -> VsMatrix {
        VsMatrix::from_blocks(self.m(), self.voters.iter().zip(counts).map(|(v, &k)| (&v.pref, k)))
    }

    pub fn relative_vote_score(&self, i: usize, l: usize) -> Result<i64> {
        self.check(i)?;
        self.check(l)?;
        let mut s = 0i64;
        if i == l {
            return Ok(0);
        }
        for v in &self.voters {
            if v.pref.prefers(i, l) {
                s += v.multiplicity as i64;
            } else {
                s -= v.multiplicity as i64;
            }
        }
        Ok(s)
    }

    pub fn copeland_score(&self, alpha: Alpha, c: usize) -> Result<u64> {
        self.check(c)?;
        Ok(self.vs_matrix().score(alpha, c))
    }

    pub fn scores(&self, alpha: Alpha) -> Vec<u64> {
        self.vs_matrix().scores(alpha)
    }

    pub fn winners(&self, alpha: Alpha, model: WinnerModel) -> Result<Vec<usize>> {
        if self.m() == 0 {
            return Err(Error::EmptyCandidates);
        }
        Ok(apply_model(argmax(&self.scores(alpha)), model))
    }

    pub fn condorcet_winner(&self) -> Option<usize> {
        self.vs_matrix().condorcet_winner()
    }

    pub fn outcome_table(&self) -> Cot {
        self.vs_matrix().cot()
    }

    /// The election over the candidates in `keep` (in that order), renumbered.
    pub fn restrict_candidates(&self, keep: &[usize]) -> Election {
        let m = self.m();
        Election {
            names: keep.iter().map(|&c| self.names[c].clone()).collect(),
            voters: self
                .voters
                .iter()
                .map(|v| VoterBlock { pref: v.pref.restrict(keep, m), multiplicity: v.multiplicity })
                .collect(),
        }
    }

    /// Same preferences with per-block multiplicities replaced; zero blocks are dropped.
    pub fn with_counts(&self, counts: &[u64]) -> Election {
        Election {
            names: self.names.clone(),
            voters: self
                .voters
                .iter()
                .zip(counts)
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| VoterBlock { pref: v.pref.clone(), multiplicity: k })
                .collect(),
        }
    }

    pub fn with_voters(&self, voters: Vec<VoterBlock>) -> Result<Election> {
        Election::new(self.names.clone(), voters)
    }

    /// Every block replaced by unit blocks.
    pub fn expanded(&self) -> Election {
        let mut voters = Vec::new();
        for v in &self.voters {
            for _ in 0..v.multiplicity {
                voters.push(VoterBlock { pref: v.pref.clone(), multiplicity: 1 });
            }
        }
        Election { names: self.names.clone(), voters }
    }

    /// All voters converted to pairwise tables.
    pub fn as_tables(&self) -> Election {
        let m = self.m();
        Election {
            names: self.names.clone(),
            voters: self
                .voters
                .iter()
                .map(|v| VoterBlock { pref: Preference::Table(v.pref.to_table(m)), multiplicity: v.multiplicity })
                .collect(),
        }
    }
}

/// Argmax positions of a score vector.
pub fn argmax(scores: &[u64]) -> Vec<usize> {
    let best = scores.iter().copied().max();
    match best {
        None => Vec::new(),
        Some(b) => (0..scores.len()).filter(|&i| scores[i] == b).collect(),
    }
}

pub fn apply_model(winners: Vec<usize>, model: WinnerModel) -> Vec<usize> {
    match model {
        WinnerModel::NonUnique => winners,
        WinnerModel::Unique if winners.len() == 1 => winners,
        WinnerModel::Unique => Vec::new(),
    }
}

/// Whether a nonunique winner set achieves the goal for `p`.
pub fn goal_met(winners: &[usize], p: usize, mode: Mode, model: WinnerModel) -> bool {
    let wins = match model {
        WinnerModel::NonUnique => winners.contains(&p),
        WinnerModel::Unique => winners == [p],
    };
    match mode {
        Mode::Constructive => wins,
        Mode::Destructive => !wins,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VsMatrix {
    m: usize,
    data: Vec<i64>,
}

impl VsMatrix {
    pub fn zero(m: usize) -> VsMatrix {
        VsMatrix { m, data: vec![0; m * m] }
    }

    pub fn from_blocks<'a>(m: usize, blocks: impl Iterator<Item = (&'a Preference, u64)>) -> VsMatrix {
        let mut vs = VsMatrix::zero(m);
        for (pref, k) in blocks {
            if k == 0 {
                continue;
            }
            vs.add_pref(pref, k as i64);
        }
        vs
    }

    pub fn add_pref(&mut self, pref: &Preference, k: i64) {
        let m = self.m;
        match pref {
            Preference::Order(o) => {
                for (a, &x) in o.iter().enumerate() {
                    for &y in &o[a + 1..] {
                        self.data[x * m + y] += k;
                        self.data[y * m + x] -= k;
                    }
                }
            }
            Preference::Table(t) => {
                for i in 0..m {
                    for j in i + 1..m {
                        let d = if t.prefers(i, j) { k } else { -k };
                        self.data[i * m + j] += d;
                        self.data[j * m + i] -= d;
                    }
                }
            }
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// self += sign * other.
    pub fn add_matrix(&mut self, other: &VsMatrix, sign: i64) {
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += sign * b;
        }
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.m + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.m + j] = v;
        self.data[j * self.m + i] = -v;
    }

    pub fn score(&self, alpha: Alpha, c: usize) -> u64 {
        let (mut w, mut t) = (0, 0);
        for j in 0..self.m {
            if j == c {
                continue;
            }
            match self.get(c, j) {
                v if v > 0 => w += 1,
                0 => t += 1,
                _ => {}
            }
        }
        alpha.score(w, t)
    }

    pub fn scores(&self, alpha: Alpha) -> Vec<u64> {
        (0..self.m).map(|c| self.score(alpha, c)).collect()
    }

    /// Scores within the sub-election on `members`, indexed like `members`.
    pub fn scores_within(&self, members: &[usize], alpha: Alpha) -> Vec<u64> {
        members
            .iter()
            .map(|&c| {
                let (mut w, mut t) = (0, 0);
                for &j in members {
                    if j != c {
                        match self.get(c, j) {
                            v if v > 0 => w += 1,
                            0 => t += 1,
                            _ => {}
                        }
                    }
                }
                alpha.score(w, t)
            })
            .collect()
    }

    /// Nonunique winners of the sub-election on `members`, as candidate ids.
    pub fn winners_within(&self, members: &[usize], alpha: Alpha) -> Vec<usize> {
        argmax(&self.scores_within(members, alpha)).into_iter().map(|k| members[k]).collect()
    }

    pub fn condorcet_winner(&self) -> Option<usize> {
        (0..self.m).find(|&c| (0..self.m).all(|j| j == c || self.get(c, j) > 0))
    }

    pub fn cot(&self) -> Cot {
        let mut t = Cot::all_ties(self.m);
        for i in 0..self.m {
            for j in i + 1..self.m {
                let v = self.get(i, j);
                if v > 0 {
                    t.set(i, j, Outcome::First);
                } else if v < 0 {
                    t.set(i, j, Outcome::Second);
                }
            }
        }
        t
    }
}
