use crate::alpha::Alpha;
use crate::election::{pair_count, pair_index};

/// Outcome of the pair {i, j} with i < j.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    First,
    Second,
    Tie,
}

/// Copeland outcome table, doubling as the election graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cot {
    m: usize,
    cells: Vec<Outcome>,
}

impl Cot {
    pub fn all_ties(m: usize) -> Cot {
        Cot { m, cells: vec![Outcome::Tie; pair_count(m)] }
    }

    pub fn from_cells(m: usize, cells: Vec<Outcome>) -> Cot {
        assert_eq!(cells.len(), pair_count(m));
        Cot { m, cells }
    }

    /// Tournament with an edge a -> b whenever `beats(a, b)`; pairs with neither edge tie.
    pub fn from_fn(m: usize, mut beats: impl FnMut(usize, usize) -> bool) -> Cot {
        let mut t = Cot::all_ties(m);
        for i in 0..m {
            for j in i + 1..m {
                if beats(i, j) {
                    t.set(i, j, Outcome::First);
                } else if beats(j, i) {
                    t.set(i, j, Outcome::Second);
                }
            }
        }
        t
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn cells(&self) -> &[Outcome] {
        &self.cells
    }

    /// Outcome of {i, j} with i < j.
    pub fn get(&self, i: usize, j: usize) -> Outcome {
        debug_assert!(i < j);
        self.cells[pair_index(self.m, i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, o: Outcome) {
        debug_assert!(i < j);
        self.cells[pair_index(self.m, i, j)] = o;
    }

    pub fn set_winner(&mut self, winner: usize, loser: usize) {
        if winner < loser {
            self.set(winner, loser, Outcome::First);
        } else {
            self.set(loser, winner, Outcome::Second);
        }
    }

    pub fn set_tie(&mut self, a: usize, b: usize) {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        self.set(i, j, Outcome::Tie);
    }

    pub fn beats(&self, a: usize, b: usize) -> bool {
        if a == b {
            return false;
        }
        match (a < b, self.cells[pair_index(self.m, a, b)]) {
            (true, Outcome::First) | (false, Outcome::Second) => true,
            _ => false,
        }
    }

    pub fn ties(&self, a: usize, b: usize) -> bool {
        a != b && self.cells[pair_index(self.m, a, b)] == Outcome::Tie
    }

    pub fn wins(&self, c: usize) -> u64 {
        (0..self.m).filter(|&j| self.beats(c, j)).count() as u64
    }

    pub fn tie_count(&self, c: usize) -> u64 {
        (0..self.m).filter(|&j| self.ties(c, j)).count() as u64
    }

    pub fn score(&self, alpha: Alpha, c: usize) -> u64 {
        alpha.score(self.wins(c), self.tie_count(c))
    }

    pub fn scores(&self, alpha: Alpha) -> Vec<u64> {
        (0..self.m).map(|c| self.score(alpha, c)).collect()
    }

    /// Scores within the sub-tournament on `members`, indexed like `members`.
    pub fn scores_within(&self, members: &[usize], alpha: Alpha) -> Vec<u64> {
        members
            .iter()
            .map(|&c| {
                let w = members.iter().filter(|&&j| self.beats(c, j)).count() as u64;
                let t = members.iter().filter(|&&j| self.ties(c, j)).count() as u64;
                alpha.score(w, t)
            })
            .collect()
    }

    pub fn restrict(&self, keep: &[usize]) -> Cot {
        Cot::from_fn(keep.len(), |a, b| self.beats(keep[a], keep[b]))
    }

    pub fn decisive_pairs(&self) -> usize {
        self.cells.iter().filter(|&&o| o != Outcome::Tie).count()
    }

    /// Lexicographic enumeration of all 3^C(m,2) tables; cell order First < Second < Tie.
    pub fn enumerate(m: usize) -> CotIter {
        CotIter { m, next: Some(vec![Outcome::First; pair_count(m)]) }
    }
}

pub struct CotIter {
    m: usize,
    next: Option<Vec<Outcome>>,
}

impl Iterator for CotIter {
    type Item = Cot;

    fn next(&mut self) -> Option<Cot> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        let mut carry = true;
        for cell in succ.iter_mut().rev() {
            *cell = match *cell {
                Outcome::First => {
                    carry = false;
                    Outcome::Second
                }
                Outcome::Second => {
                    carry = false;
                    Outcome::Tie
                }
                Outcome::Tie => Outcome::First,
            };
            if !carry {
                break;
            }
        }
        if !carry {
            self.next = Some(succ);
        }
        Some(Cot { m: self.m, cells: cur })
    }
}
