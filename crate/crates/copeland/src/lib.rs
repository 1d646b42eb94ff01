//! Copeland^alpha elections with rational and irrational voters: winner determination,
//! microbribery, polynomial-time control algorithms, exhaustive oracles, fixed-parameter
//! voter control, and generators for hardness-reduction instances.

pub mod alpha;
pub mod control;
pub mod cot;
pub mod election;
pub mod error;
pub mod flow;
pub mod format;
pub mod fpt;
pub mod microbribery;
pub mod oracle;
pub mod reductions;
pub mod tournament;
pub mod two_stage;

pub use alpha::Alpha;
pub use cot::{Cot, Outcome};
pub use election::{Election, Mode, PairTable, Preference, VoterBlock, VsMatrix, WinnerModel};
pub use error::{Error, Result};
pub use two_stage::{Partition, PartitionKind, TieRule};
