pub mod error;
pub mod hypergeom;
pub mod identities;
pub mod rational;
pub mod report;
pub mod riordan;
pub mod series;

pub use error::{Error, Result};
pub use rational::Rational;
pub use report::{Counterexample, IdentityReport, Param, Verdict};
pub use riordan::{a_sequence, ASequence, BuiltinArray, RiordanArray, RowRecord, Triangle};
pub use series::{FormalPowerSeries, SeriesRecord};
