use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Tie reward b/d, kept in lowest terms. Scores are stored multiplied by d.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Alpha {
    num: u64,
    den: u64,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Alpha {
    pub const ZERO: Alpha = Alpha { num: 0, den: 1 };
    pub const HALF: Alpha = Alpha { num: 1, den: 2 };
    pub const ONE: Alpha = Alpha { num: 1, den: 1 };

    pub fn new(num: u64, den: u64) -> Result<Alpha> {
        if den == 0 || num > den {
            return Err(Error::InvalidAlpha(format!("{num}/{den}")));
        }
        let g = gcd(num, den);
        if num == 0 {
            return Ok(Alpha::ZERO);
        }
        Ok(Alpha { num: num / g, den: den / g })
    }

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn den(self) -> u64 {
        self.den
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    pub fn is_one(self) -> bool {
        self.num == self.den
    }

    /// d-scaled score for the given numbers of wins and ties.
    pub fn score(self, wins: u64, ties: u64) -> u64 {
        self.den * wins + self.num * ties
    }

    /// One whole point in scaled units.
    pub fn point(self) -> u64 {
        self.den
    }
}

impl Default for Alpha {
    fn default() -> Self {
        Alpha::HALF
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Alpha {
    type Err = Error;

    fn from_str(s: &str) -> Result<Alpha> {
        let bad = || Error::InvalidAlpha(s.to_string());
        match s.split_once('/') {
            Some((a, b)) => {
                let num: u64 = a.trim().parse().map_err(|_| bad())?;
                let den: u64 = b.trim().parse().map_err(|_| bad())?;
                Alpha::new(num, den)
            }
            None => match s.trim() {
                "0" => Ok(Alpha::ZERO),
                "1" => Ok(Alpha::ONE),
                _ => Err(bad()),
            },
        }
    }
}
