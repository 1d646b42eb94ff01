#![allow(dead_code)]

use copeland::{Alpha, Cot, Election, Outcome, PairTable, Preference, VoterBlock};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_order(r: &mut ChaCha8Rng, m: usize) -> Vec<usize> {
    let mut o: Vec<usize> = (0..m).collect();
    o.shuffle(r);
    o
}

pub fn random_table(r: &mut ChaCha8Rng, m: usize) -> PairTable {
    PairTable::from_fn(m, |_, _| r.gen_bool(0.5))
}

/// `n` unit voters; each rational with probability `rational`.
pub fn random_election(r: &mut ChaCha8Rng, m: usize, n: usize, rational: f64) -> Election {
    let voters = (0..n)
        .map(|_| {
            if r.gen_bool(rational) {
                VoterBlock::order(&random_order(r, m), 1)
            } else {
                VoterBlock::new(Preference::Table(random_table(r, m)), 1)
            }
        })
        .collect();
    Election::with_default_names(m, voters).unwrap()
}

/// Blocks with multiplicities in 1..=max_mult.
pub fn random_succinct(r: &mut ChaCha8Rng, m: usize, blocks: usize, max_mult: u64, rational: f64) -> Election {
    let voters = (0..blocks)
        .map(|_| {
            let k = r.gen_range(1..=max_mult);
            if r.gen_bool(rational) {
                VoterBlock::order(&random_order(r, m), k)
            } else {
                VoterBlock::new(Preference::Table(random_table(r, m)), k)
            }
        })
        .collect();
    Election::with_default_names(m, voters).unwrap()
}

pub fn random_cot(r: &mut ChaCha8Rng, m: usize) -> Cot {
    let cells = (0..m * m.saturating_sub(1) / 2)
        .map(|_| match r.gen_range(0..3) {
            0 => Outcome::First,
            1 => Outcome::Second,
            _ => Outcome::Tie,
        })
        .collect();
    Cot::from_cells(m, cells)
}

pub const ALPHAS: [Alpha; 3] = [Alpha::ZERO, Alpha::HALF, Alpha::ONE];
