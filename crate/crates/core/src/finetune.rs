//! Fine-tuning of a target interval under a parametric family.
//!
//! A continuous law on `[0, L]` is discretized into cells of width `h`; the
//! target is the set of cells whose centers fall in `[a, b]`. The tuning
//! probability is the largest target mass over a finite hyperparameter grid,
//! and the observation of the target makes `P2(T) = 1`, so the active
//! information is `−log p_max`.

use libm::erfc;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::distributions::{Event, FiniteDistribution, Label};
use crate::error::{Error, Result};
use crate::ext_real::{ExtReal, LogBase};

pub const CELL_CAP: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    /// Parameters `(mean, sd)`, truncated to the domain.
    TruncatedNormal,
    /// Parameters `(center, width)`, uniform on the window intersected with the domain.
    UniformWindow,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParamFamily {
    kind: FamilyKind,
    length: f64,
    cells: usize,
    grid: Vec<[f64; 2]>,
}

impl ParamFamily {
    /// `domain_len / h` must be a whole number of cells.
    pub fn new(kind: FamilyKind, domain_len: f64, h: f64, grid: Vec<[f64; 2]>) -> Result<Self> {
        if !(domain_len.is_finite() && domain_len > 0.0) {
            return Err(Error::InvalidGrid(format!("domain length {domain_len} must be positive")));
        }
        if !(h.is_finite() && h > 0.0 && h <= domain_len) {
            return Err(Error::InvalidGrid(format!("cell width {h} must lie in (0, {domain_len}]")));
        }
        let cells = (domain_len / h).round();
        if (cells * h - domain_len).abs() > 1e-9 * domain_len {
            return Err(Error::InvalidGrid(format!("cell width {h} does not divide the domain length {domain_len}")));
        }
        if cells > CELL_CAP as f64 {
            return Err(Error::InvalidGrid(format!("{cells} cells exceed the cap of {CELL_CAP}")));
        }
        if grid.is_empty() {
            return Err(Error::EmptyGrid);
        }
        Ok(ParamFamily { kind, length: domain_len, cells: cells as usize, grid })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn domain_len(&self) -> f64 {
        self.length
    }

    pub fn cells(&self) -> usize {
        self.cells
    }

    pub fn h(&self) -> f64 {
        self.length / self.cells as f64
    }

    pub fn grid(&self) -> &[[f64; 2]] {
        &self.grid
    }

    fn edge(&self, i: usize) -> f64 {
        self.length * i as f64 / self.cells as f64
    }

    pub fn cell_center(&self, i: usize) -> f64 {
        self.length * (i as f64 + 0.5) / self.cells as f64
    }

    /// Unnormalized cell masses for one parameter tuple.
    fn cell_weights(&self, xi: [f64; 2]) -> Result<Vec<f64>> {
        let [location, scale] = xi;
        if !location.is_finite() || !scale.is_finite() {
            return Err(Error::ParamOutOfBounds(format!("non-finite parameters {xi:?}")));
        }
        if scale <= 0.0 {
            return Err(Error::DegenerateScale(scale));
        }
        match self.kind {
            FamilyKind::TruncatedNormal => {
                let z: Vec<f64> = (0..=self.cells).map(|i| (self.edge(i) - location) / scale).collect();
                let log_mass: Vec<f64> = z.windows(2).map(|w| ln_normal_interval(w[0], w[1])).collect();
                let top = log_mass.iter().copied().fold(f64::NEG_INFINITY, f64::max);
                if top == f64::NEG_INFINITY {
                    return Err(Error::ParamOutOfBounds(format!("no mass on the domain for {xi:?}")));
                }
                Ok(log_mass.into_iter().map(|l| (l - top).exp()).collect())
            }
            FamilyKind::UniformWindow => {
                let (lo, hi) = (location - scale / 2.0, location + scale / 2.0);
                let weights: Vec<f64> =
                    (0..self.cells).map(|i| (hi.min(self.edge(i + 1)) - lo.max(self.edge(i))).max(0.0)).collect();
                if weights.iter().all(|&w| w <= 0.0) {
                    return Err(Error::ParamOutOfBounds(format!(
                        "window {xi:?} misses the domain [0, {}]",
                        self.length
                    )));
                }
                Ok(weights)
            }
        }
    }
}

/// Discretized law for one parameter tuple, renormalized to the domain.
/// Cells are labeled by their index.
pub fn family_pmf(family: &ParamFamily, xi: [f64; 2]) -> Result<FiniteDistribution> {
    let weights = family.cell_weights(xi)?;
    let labels = (0..family.cells as i64).map(Label::Int).collect();
    FiniteDistribution::normalized(labels, weights)
}

/// Cells whose centers lie in `[a, b]`.
pub fn target_event(family: &ParamFamily, a: f64, b: f64) -> Result<Event> {
    if !(a >= 0.0 && a <= b && b <= family.length) {
        return Err(Error::InvalidInterval { a, b, len: family.length });
    }
    let event = Event::new((0..family.cells).filter(|&i| {
        let c = family.cell_center(i);
        a <= c && c <= b
    }))?;
    if event.is_empty() {
        return Err(Error::EmptyTarget { a, b });
    }
    Ok(event)
}

/// The maximizing tuple and its target probability.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TuningProbability {
    pub xi_star: [f64; 2],
    pub p_max: f64,
}

/// Relative tolerance under which two target probabilities tie.
pub const TIE_TOL: f64 = 1e-12;

/// `sup_ξ P(T; ξ)` over the grid; the first tuple in grid order wins ties.
pub fn tuning_probability(family: &ParamFamily, target: &Event) -> Result<TuningProbability> {
    target.check_bounds(family.cells)?;
    let probs: Vec<f64> = family
        .grid
        .par_iter()
        .map(|&xi| family_pmf(family, xi).and_then(|pmf| pmf.event_probability(target)))
        .collect::<Result<_>>()?;
    // Values within TIE_TOL of the running best count as ties; the earlier tuple stays.
    let mut best = 0;
    for (i, &p) in probs.iter().enumerate() {
        if p > probs[best] * (1.0 + TIE_TOL) {
            best = i;
        }
    }
    Ok(TuningProbability { xi_star: family.grid[best], p_max: probs[best] })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TuningResult {
    pub xi_star: [f64; 2],
    pub p_max: f64,
    pub delta: f64,
    pub fine_tuned: bool,
    /// `−log p_max`, the active information of observing the target.
    pub active_info: ExtReal,
    pub base: LogBase,
}

/// Fine-tuned to level `δ` iff `p_max < δ`, equivalently `I⁺ > −log δ`.
pub fn fine_tuning_report(family: &ParamFamily, target: &Event, delta: f64, base: LogBase) -> Result<TuningResult> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::DeltaOutOfRange(delta));
    }
    let TuningProbability { xi_star, p_max } = tuning_probability(family, target)?;
    Ok(tuning_verdict(xi_star, p_max, delta, base))
}

/// Verdict for a known `p_max`: fine-tuned iff `p_max < δ`.
pub fn tuning_verdict(xi_star: [f64; 2], p_max: f64, delta: f64, base: LogBase) -> TuningResult {
    let active_info = base.from_nats(ExtReal::neg_log(p_max));
    let fine_tuned = p_max < delta;
    let via_info = active_info.to_f64() > base.from_nats_f64(-delta.ln());
    debug_assert!(fine_tuned == via_info || (p_max - delta).abs() <= 4.0 * f64::EPSILON * delta);
    TuningResult { xi_star, p_max, delta, fine_tuned, active_info, base }
}

const LN_2PI_HALF: f64 = 0.918_938_533_204_672_8;

/// `ln Φ(z)` for the standard normal CDF, accurate far into the lower tail.
pub fn ln_normal_cdf(z: f64) -> f64 {
    if z > 0.0 {
        (-0.5 * erfc(z / std::f64::consts::SQRT_2)).ln_1p()
    } else if z > -30.0 {
        (0.5 * erfc(-z / std::f64::consts::SQRT_2)).ln()
    } else {
        // Asymptotic series of the Mills ratio
        let w = 1.0 / (z * z);
        let series = 1.0 - w * (1.0 - 3.0 * w * (1.0 - 5.0 * w * (1.0 - 7.0 * w * (1.0 - 9.0 * w))));
        -0.5 * z * z - (-z).ln() - LN_2PI_HALF + series.ln()
    }
}

/// `ln(Φ(b) − Φ(a))` for `a ≤ b`, evaluated in whichever tail keeps precision.
fn ln_normal_interval(a: f64, b: f64) -> f64 {
    fn ln_diff(ln_hi: f64, ln_lo: f64) -> f64 {
        if ln_lo == f64::NEG_INFINITY {
            return ln_hi;
        }
        let d = ln_lo - ln_hi;
        if d >= 0.0 {
            f64::NEG_INFINITY
        } else {
            ln_hi + (-d.exp()).ln_1p()
        }
    }
    if b <= 0.0 {
        ln_diff(ln_normal_cdf(b), ln_normal_cdf(a))
    } else if a >= 0.0 {
        ln_diff(ln_normal_cdf(-a), ln_normal_cdf(-b))
    } else {
        let outside = 0.5 * erfc(-a / std::f64::consts::SQRT_2) + 0.5 * erfc(b / std::f64::consts::SQRT_2);
        (-outside).ln_1p()
    }
}
