//! Active information and conserved active information over finite
//! discrete distributions.
//!
//! * [`distributions`] builds and combines finite laws and events.
//! * [`measures`] holds the information functionals: self-information,
//!   entropy, total information, active information `I⁺`, conserved active
//!   information `I⊕`, KL divergence, total variation and Pinsker's bound.
//! * [`regimes`] classifies a target probability against a uniform baseline.
//! * [`markov`] follows `I⁺` and `I⊕` along a random walk on a regular graph.
//! * [`finetune`] estimates how finely a target interval is tuned under a
//!   parametric family.
//!
//! ```
//! use actinfo::{measures, Event, FiniteDistribution, LogBase};
//!
//! let baseline = FiniteDistribution::uniform(10).unwrap();
//! let informed = FiniteDistribution::from_probs(vec![0.5; 2].into_iter()
//!     .chain(vec![0.0; 8]).collect()).unwrap();
//! let target = Event::singleton(0);
//! let ai = measures::active_information(&baseline, &informed, &target, LogBase::BITS).unwrap();
//! assert!((ai.finite().unwrap() - 5f64.log2()).abs() < 1e-12);
//! ```

pub mod cli;
pub mod distributions;
pub mod error;
pub mod ext_real;
pub mod finetune;
pub mod io;
pub mod markov;
pub mod measures;
pub mod regimes;

pub use distributions::{merge_spaces, specification_event, Event, FiniteDistribution, Label};
pub use error::{Error, Result};
pub use ext_real::{ExtReal, LogBase};
pub use finetune::{FamilyKind, ParamFamily, TuningResult};
pub use markov::{RegularGraph, TrajectoryPoint, WalkConfig};
pub use measures::MeasureReport;
pub use regimes::{Regime, RegimeReport};
