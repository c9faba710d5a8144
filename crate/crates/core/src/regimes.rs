//! Knowledge regimes under a uniform baseline.
//!
//! With `p = P1(T) < 1/2` the uniform-baseline target probability and `q`
//! the informed one, the sign of the binary conserved active information
//! `log[p(1−p) / (q(1−q))]` is the sign of `(q − p)(p + q − 1)`:
//!
//! | regime            | condition        | `I⁺` | `I⊕` |
//! |-------------------|------------------|------|------|
//! | harmful to target | `q < p`          | `<0` | `>0` |
//! | mild knowledge    | `p < q < 1 − p`  | `>0` | `<0` |
//! | strong knowledge  | `q > 1 − p`      | `>0` | `>0` |
//!
//! plus the two boundaries `q = p` and `q = 1 − p` where `I⊕ = 0`.
//!
//! `I⊕` here is the binary one, computed on `{T, Tᶜ}`; the full-space value
//! is available from [`full_report`](crate::measures::full_report).

use std::fmt;

use serde::Serialize;

use crate::distributions::{Event, FiniteDistribution};
use crate::error::{Error, Result};
use crate::ext_real::{ExtReal, LogBase};
use crate::measures::cai_nats;

/// Distance from `q = p` or `q = 1 − p` under which a pair counts as a boundary.
pub const BOUNDARY_TOL: f64 = 1e-12;
/// Above this baseline probability the "rare target" premise is stretched thin.
pub const RARE_TARGET_WARN: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Regime {
    HarmfulToTarget,
    MildKnowledge,
    StrongKnowledge,
    BoundaryEqual,
    BoundaryMirror,
}

impl Regime {
    pub const ALL: [Regime; 5] = [
        Regime::HarmfulToTarget,
        Regime::MildKnowledge,
        Regime::StrongKnowledge,
        Regime::BoundaryEqual,
        Regime::BoundaryMirror,
    ];

    pub fn interpretation(self) -> &'static str {
        match self {
            Regime::HarmfulToTarget => "Target harder, system more ordered",
            Regime::MildKnowledge => "Target easier, system more disordered",
            Regime::StrongKnowledge => "Target much easier AND system more ordered (jackpot)",
            Regime::BoundaryEqual => "Target unchanged, system equally ordered",
            Regime::BoundaryMirror => "Target easier, system equally ordered",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Regime::HarmfulToTarget => "HarmfulToTarget",
            Regime::MildKnowledge => "MildKnowledge",
            Regime::StrongKnowledge => "StrongKnowledge",
            Regime::BoundaryEqual => "BoundaryEqual",
            Regime::BoundaryMirror => "BoundaryMirror",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn check_pq(p: f64, q: f64) -> Result<()> {
    if !(p > 0.0 && p < 0.5) {
        return Err(Error::POutOfRange(p));
    }
    if !(0.0..=1.0).contains(&q) {
        return Err(Error::QOutOfRange(q));
    }
    if p > RARE_TARGET_WARN {
        log::warn!("baseline probability p = {p} is not small; regimes still apply since p < 1/2");
    }
    Ok(())
}

/// Places `(p, q)` in one of the five regimes. Requires `0 < p < 1/2`.
pub fn classify_regime(p: f64, q: f64) -> Result<Regime> {
    check_pq(p, q)?;
    let mirror = 1.0 - p;
    Ok(if (q - p).abs() <= BOUNDARY_TOL {
        Regime::BoundaryEqual
    } else if (q - mirror).abs() <= BOUNDARY_TOL {
        Regime::BoundaryMirror
    } else if q < p {
        Regime::HarmfulToTarget
    } else if q > mirror {
        Regime::StrongKnowledge
    } else {
        Regime::MildKnowledge
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegimeReport {
    pub p: f64,
    pub q: f64,
    pub regime: Regime,
    pub active_info: ExtReal,
    pub cai_coarsened: ExtReal,
    pub interpretation: &'static str,
}

/// Classification together with `I⁺ = log(q/p)` and the binary `I⊕`.
pub fn regime_report(p: f64, q: f64, base: LogBase) -> Result<RegimeReport> {
    report_with_complement(p, q, 1.0 - q, base)
}

fn report_with_complement(p: f64, q: f64, q_rest: f64, base: LogBase) -> Result<RegimeReport> {
    let regime = classify_regime(p, q)?;
    Ok(RegimeReport {
        p,
        q,
        regime,
        active_info: base.from_nats(ExtReal::log_ratio(q, p)),
        cai_coarsened: base.from_nats(cai_nats(&[p, 1.0 - p], &[q, q_rest])),
        interpretation: regime.interpretation(),
    })
}

/// Regime of an informed distribution against the uniform baseline on the
/// same space: `p = |T| / N`, `q = P2(T)`. Requires `|T| < N/2`.
pub fn regime_from_distributions(p2: &FiniteDistribution, target: &Event, base: LogBase) -> Result<RegimeReport> {
    let n = p2.len();
    target.check_bounds(n)?;
    if 2 * target.len() >= n {
        return Err(Error::TargetTooLarge { target: target.len(), space: n });
    }
    let p = target.len() as f64 / n as f64;
    let (q, q_rest) = p2.split_masses(target)?;
    report_with_complement(p, q, q_rest, base)
}
