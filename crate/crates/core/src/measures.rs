//! Information functionals over pairs of finite distributions.
//!
//! Everything is computed in nats and converted to the requested
//! [`LogBase`] once, at the end. Pairwise measures require both
//! distributions to live on the same label list; use
//! [`merge_spaces`](crate::distributions::merge_spaces) first when they
//! don't.
//!
//! Orientation of conserved active information: `I⊕(P1, P2) = H(X2) − H(X1)
//! = Σ log(p1/p2)`. On the coarsened space `{T, Tᶜ}` this equals
//! `−(I⁺(T) + I⁺(Tᶜ))`.

use serde::Serialize;

use crate::distributions::{Event, FiniteDistribution};
use crate::error::{Error, Result};
use crate::ext_real::{ExtReal, LogBase};
use crate::regimes::{self, Regime};

/// Entrywise tolerance under which two distributions count as equal.
pub const EQUALITY_TOL: f64 = 1e-12;

fn require_same_space(a: &FiniteDistribution, b: &FiniteDistribution) -> Result<()> {
    if a.same_space(b) {
        Ok(())
    } else {
        Err(Error::SpaceMismatch)
    }
}

/// Self-information `−log P(T)` of the target.
pub fn self_information(p: &FiniteDistribution, target: &Event, base: LogBase) -> Result<ExtReal> {
    Ok(base.from_nats(ExtReal::neg_log(p.event_probability(target)?)))
}

/// Active information `I⁺ = log[P2(T) / P1(T)]`, with `log(0/0) = 0`.
pub fn active_information(
    p1: &FiniteDistribution,
    p2: &FiniteDistribution,
    target: &Event,
    base: LogBase,
) -> Result<ExtReal> {
    require_same_space(p1, p2)?;
    let baseline = p1.event_probability(target)?;
    let informed = p2.event_probability(target)?;
    Ok(base.from_nats(ExtReal::log_ratio(informed, baseline)))
}

/// Shannon entropy, with `0 · log 0 = 0`.
pub fn entropy(p: &FiniteDistribution, base: LogBase) -> f64 {
    let nats: f64 = p.probs().iter().filter(|&&x| x > 0.0).map(|&x| -x * x.ln()).sum();
    base.from_nats_f64(nats.max(0.0))
}

/// Total information `−Σ log p(x)`; infinite as soon as one outcome has no mass.
pub fn total_information(p: &FiniteDistribution, base: LogBase) -> ExtReal {
    base.from_nats(p.probs().iter().map(|&x| ExtReal::neg_log(x)).sum())
}

pub(crate) fn cai_nats(p1: &[f64], p2: &[f64]) -> ExtReal {
    p1.iter().zip(p2).map(|(&a, &b)| ExtReal::log_ratio(a, b)).sum()
}

/// Conserved active information `I⊕ = Σ log[p1(x) / p2(x)]`.
///
/// Each term follows `log(0/0) = 0`; a term is `+∞` where only `p2`
/// vanishes and `−∞` where only `p1` does. Terms of both kinds together make
/// the sum [`ExtReal::Undefined`].
pub fn conserved_active_information(
    p1: &FiniteDistribution,
    p2: &FiniteDistribution,
    base: LogBase,
) -> Result<ExtReal> {
    require_same_space(p1, p2)?;
    Ok(base.from_nats(cai_nats(p1.probs(), p2.probs())))
}

/// `I⊕` on the binary partition `{T, Tᶜ}`: `log[p(1−p) / (q(1−q))]` with
/// `p = P1(T)` and `q = P2(T)`.
pub fn coarsened_cai(
    p1: &FiniteDistribution,
    p2: &FiniteDistribution,
    target: &Event,
    base: LogBase,
) -> Result<ExtReal> {
    require_same_space(p1, p2)?;
    conserved_active_information(&p1.coarsen(target)?, &p2.coarsen(target)?, base)
}

fn kl_nats(pa: &[f64], pb: &[f64]) -> ExtReal {
    let mut sum = 0.0;
    for (&a, &b) in pa.iter().zip(pb) {
        if a <= 0.0 {
            continue;
        }
        if b <= 0.0 {
            return ExtReal::PosInf;
        }
        sum += a * (a / b).ln();
    }
    ExtReal::Finite(sum.max(0.0))
}

/// Kullback–Leibler divergence `D(Pa ‖ Pb) = Σ pa log(pa/pb)`.
///
/// Exactly zero when the two distributions agree entrywise within
/// [`EQUALITY_TOL`]; `+∞` when `Pa` charges an outcome `Pb` does not.
pub fn kl_divergence(pa: &FiniteDistribution, pb: &FiniteDistribution, base: LogBase) -> Result<ExtReal> {
    require_same_space(pa, pb)?;
    if pa.approx_eq(pb, EQUALITY_TOL) {
        return Ok(ExtReal::ZERO);
    }
    Ok(base.from_nats(kl_nats(pa.probs(), pb.probs())))
}

/// Total variation distance, `½ Σ |p1 − p2|` on a finite space.
pub fn total_variation(p1: &FiniteDistribution, p2: &FiniteDistribution) -> Result<f64> {
    require_same_space(p1, p2)?;
    let l1: f64 = p1.probs().iter().zip(p2.probs()).map(|(a, b)| (a - b).abs()).sum();
    Ok((0.5 * l1).clamp(0.0, 1.0))
}

/// Pinsker's upper bound `√(D(P2 ‖ P1) / 2)` on the total variation.
///
/// The divergence is taken in nats, which is the form in which the inequality
/// holds; the bound is a probability and carries no logarithm base.
pub fn pinsker_bound(p1: &FiniteDistribution, p2: &FiniteDistribution) -> Result<ExtReal> {
    Ok(match kl_divergence(p2, p1, LogBase::NATS)? {
        ExtReal::Finite(kl) => ExtReal::Finite((kl / 2.0).sqrt()),
        other => other,
    })
}

/// Both sides of the uniform-baseline identity `N · D(U ‖ P2) = I⊕(U, P2)`.
///
/// The two values are computed along independent routes and should agree to
/// rounding error.
pub fn uniform_baseline_identity(p2: &FiniteDistribution, base: LogBase) -> Result<(ExtReal, ExtReal)> {
    if let Some(index) = p2.probs().iter().position(|&x| x <= 0.0) {
        return Err(Error::NotFullySupported { index });
    }
    let n = p2.len();
    let uniform = FiniteDistribution::from_parts_unchecked(p2.labels().to_vec(), vec![1.0 / n as f64; n]);
    let kl = kl_divergence(&uniform, p2, base)?.scale(n as f64);
    let cai = conserved_active_information(&uniform, p2, base)?;
    Ok((kl, cai))
}

/// Every measure of this module for one `(P1, P2, T)` triple.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MeasureReport {
    /// `I1(T) = −log P1(T)`
    pub endogenous_info: ExtReal,
    /// `I2(T) = −log P2(T)`
    pub exogenous_info: ExtReal,
    pub active_info: ExtReal,
    pub total_info_1: ExtReal,
    pub total_info_2: ExtReal,
    pub entropy_1: f64,
    pub entropy_2: f64,
    pub cai_full: ExtReal,
    pub cai_coarsened: ExtReal,
    pub kl_12: ExtReal,
    pub kl_21: ExtReal,
    pub tv: f64,
    pub pinsker_bound: ExtReal,
    /// Uniform-baseline regime, present when `P1` is uniform and `P1(T) < 1/2`.
    pub regime: Option<Regime>,
    pub base: LogBase,
}

pub fn full_report(
    p1: &FiniteDistribution,
    p2: &FiniteDistribution,
    target: &Event,
    base: LogBase,
) -> Result<MeasureReport> {
    require_same_space(p1, p2)?;
    let report = MeasureReport {
        endogenous_info: self_information(p1, target, base)?,
        exogenous_info: self_information(p2, target, base)?,
        active_info: active_information(p1, p2, target, base)?,
        total_info_1: total_information(p1, base),
        total_info_2: total_information(p2, base),
        entropy_1: entropy(p1, base),
        entropy_2: entropy(p2, base),
        cai_full: conserved_active_information(p1, p2, base)?,
        cai_coarsened: coarsened_cai(p1, p2, target, base)?,
        kl_12: kl_divergence(p1, p2, base)?,
        kl_21: kl_divergence(p2, p1, base)?,
        tv: total_variation(p1, p2)?,
        pinsker_bound: pinsker_bound(p1, p2)?,
        regime: uniform_regime(p1, p2, target)?,
        base,
    };

    if let (ExtReal::Finite(h1), ExtReal::Finite(h2), ExtReal::Finite(cai)) =
        (report.total_info_1, report.total_info_2, report.cai_full)
    {
        debug_assert!((h2 - h1 - cai).abs() <= 1e-9 * (1.0 + cai.abs().max(h1.abs())));
    }
    if let ExtReal::Finite(bound) = report.pinsker_bound {
        debug_assert!(report.tv <= bound + 1e-12);
    }
    Ok(report)
}

fn uniform_regime(p1: &FiniteDistribution, p2: &FiniteDistribution, target: &Event) -> Result<Option<Regime>> {
    let n = p1.len() as f64;
    if p1.probs().iter().any(|&x| (x - 1.0 / n).abs() > EQUALITY_TOL) {
        return Ok(None);
    }
    let p = p1.event_probability(target)?;
    let q = p2.event_probability(target)?;
    Ok(regimes::classify_regime(p, q).ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const BITS: LogBase = LogBase::BITS;

    #[test]
    fn coarsening_onto_a_null_complement() {
        // 0.2 + 0.5 + 0.2 + 0.1 rounds below 1; the complement must stay exactly 0.
        let p1 = dist(&[0.0, 0.0, 0.0, 1.0]);
        let p2 = dist(&[0.2, 0.5, 0.2, 0.1]);
        let full = Event::full(4);
        assert!(finite(coarsened_cai(&p1, &p2, &full, BITS).unwrap()).abs() < 1e-15);
    }

    fn ber(p: f64) -> FiniteDistribution {
        FiniteDistribution::bernoulli(p).unwrap()
    }

    fn dist(probs: &[f64]) -> FiniteDistribution {
        FiniteDistribution::from_probs(probs.to_vec()).unwrap()
    }

    fn finite(x: ExtReal) -> f64 {
        x.finite().unwrap_or_else(|| panic!("expected a finite value, got {x}"))
    }

    #[test]
    fn self_information_examples() {
        let u4 = FiniteDistribution::uniform(4).unwrap();
        assert_eq!(finite(self_information(&u4, &Event::singleton(0), BITS).unwrap()), 2.0);
        assert_eq!(finite(self_information(&u4, &Event::full(4), BITS).unwrap()), 0.0);
        let point = dist(&[1.0, 0.0]);
        assert_eq!(self_information(&point, &Event::singleton(1), BITS).unwrap(), ExtReal::PosInf);
    }

    #[test]
    fn active_information_examples() {
        // Brillouin: blind search over 100 outcomes vs over a 10-outcome
        // subspace containing the target.
        let p1 = FiniteDistribution::uniform(100).unwrap();
        let p2 = FiniteDistribution::from_probs((0..100).map(|i| if i < 10 { 0.1 } else { 0.0 }).collect()).unwrap();
        let ai = finite(active_information(&p1, &p2, &Event::singleton(3), BITS).unwrap());
        assert!((ai - 10f64.log2()).abs() < 1e-12);

        assert_eq!(active_information(&p1, &p1, &Event::singleton(3), BITS).unwrap(), ExtReal::ZERO);

        let a = dist(&[0.01, 0.99]);
        let b = dist(&[0.2, 0.8]);
        let ai = finite(active_information(&a, &b, &Event::singleton(0), BITS).unwrap());
        assert!((ai - 20f64.log2()).abs() < 1e-12);
        assert!((ai - 4.3219).abs() < 1e-4);
    }

    #[test]
    fn active_information_edge_cases() {
        let a = dist(&[0.0, 1.0]);
        let b = dist(&[0.5, 0.5]);
        let t = Event::singleton(0);
        assert_eq!(active_information(&a, &b, &t, BITS).unwrap(), ExtReal::PosInf);
        assert_eq!(active_information(&b, &a, &t, BITS).unwrap(), ExtReal::NegInf);
        assert_eq!(active_information(&a, &a, &t, BITS).unwrap(), ExtReal::ZERO);
        let c = FiniteDistribution::uniform(3).unwrap();
        assert_eq!(active_information(&a, &c, &t, BITS), Err(Error::SpaceMismatch));
    }

    #[test]
    fn entropy_examples() {
        assert_eq!(entropy(&ber(0.5), BITS), 1.0);
        assert_eq!(entropy(&dist(&[0.0, 1.0, 0.0]), BITS), 0.0);
        assert_eq!(entropy(&FiniteDistribution::uniform(4).unwrap(), BITS), 2.0);
    }

    #[test]
    fn total_information_examples() {
        assert_eq!(finite(total_information(&ber(0.5), BITS)), 2.0);
        assert_eq!(finite(total_information(&FiniteDistribution::uniform(4).unwrap(), BITS)), 8.0);
        assert_eq!(total_information(&dist(&[1.0, 0.0]), BITS), ExtReal::PosInf);
    }

    #[test]
    fn cai_examples() {
        for p in [0.1, 0.3, 0.7, 0.99] {
            let cai = finite(conserved_active_information(&ber(p), &ber(0.5), BITS).unwrap());
            assert!(cai < 0.0, "p = {p}: {cai}");
        }
        // log2(0.25/0.5) + log2(0.75/0.5)
        let cai = finite(conserved_active_information(&ber(0.25), &ber(0.5), BITS).unwrap());
        assert!((cai - (-0.415_037_499_278_843_8)).abs() < 1e-12);
        let same = conserved_active_information(&ber(0.3), &ber(0.3), BITS).unwrap();
        assert_eq!(same, ExtReal::ZERO);
    }

    #[test]
    fn cai_infinite_terms() {
        let a = dist(&[0.5, 0.5, 0.0]);
        let b = dist(&[0.5, 0.0, 0.5]);
        let c = dist(&[0.25, 0.25, 0.5]);
        assert_eq!(conserved_active_information(&a, &b, BITS).unwrap(), ExtReal::Undefined);
        assert_eq!(conserved_active_information(&c, &a, BITS).unwrap(), ExtReal::PosInf);
        assert_eq!(conserved_active_information(&a, &c, BITS).unwrap(), ExtReal::NegInf);
        // 0/0 terms vanish
        assert_eq!(conserved_active_information(&a, &a, BITS).unwrap(), ExtReal::ZERO);
    }

    #[test]
    fn coarsened_cai_examples() {
        let t = Event::singleton(1);
        let cai = finite(coarsened_cai(&ber(0.1), &ber(0.05), &t, BITS).unwrap());
        // log2(0.09 / 0.0475)
        assert!((cai - 0.921_997_487_998_726_9).abs() < 1e-12);
        assert!(cai > 0.0);
        let cai = finite(coarsened_cai(&ber(0.1), &ber(0.9), &t, BITS).unwrap());
        assert!(cai.abs() < 1e-12);
        let cai = finite(coarsened_cai(&ber(0.1), &ber(0.5), &t, BITS).unwrap());
        assert!((cai - 0.36f64.log2()).abs() < 1e-12);
        assert!((cai - (-1.474)).abs() < 1e-3);
    }

    #[test]
    fn kl_examples() {
        let kl = finite(kl_divergence(&ber(1.0), &ber(0.5), BITS).unwrap());
        assert!((kl - 1.0).abs() < 1e-15);
        assert_eq!(kl_divergence(&ber(0.3), &ber(0.3), BITS).unwrap(), ExtReal::ZERO);
        let kl = finite(kl_divergence(&ber(0.9), &ber(0.5), BITS).unwrap());
        // 0.9 log2 1.8 + 0.1 log2 0.2
        assert!((kl - 0.531_004_406_410_718_8).abs() < 1e-12);
        assert_eq!(kl_divergence(&ber(0.5), &ber(1.0), BITS).unwrap(), ExtReal::PosInf);
    }

    #[test]
    fn tv_examples() {
        assert!((total_variation(&ber(0.2), &ber(0.7)).unwrap() - 0.5).abs() < 1e-15);
        assert_eq!(total_variation(&ber(0.2), &ber(0.2)).unwrap(), 0.0);
        let u4 = FiniteDistribution::uniform(4).unwrap();
        assert_eq!(total_variation(&u4, &dist(&[1.0, 0.0, 0.0, 0.0])).unwrap(), 0.75);
    }

    #[test]
    fn pinsker_examples() {
        assert_eq!(pinsker_bound(&ber(0.4), &ber(0.4)).unwrap(), ExtReal::ZERO);
        let bound = finite(pinsker_bound(&ber(0.5), &ber(0.6)).unwrap());
        // KL(Ber(0.6) || Ber(0.5)) = 0.6 ln 1.2 + 0.4 ln 0.8 = 0.0201355...
        let kl = 0.6 * 1.2f64.ln() + 0.4 * 0.8f64.ln();
        assert!((kl - 0.020136).abs() < 1e-6);
        assert!((bound - (kl / 2.0).sqrt()).abs() < 1e-15);
        assert!((bound - 0.10034).abs() < 1e-5);
        assert!(bound >= 0.1);
        assert_eq!(pinsker_bound(&ber(0.0), &ber(1.0)).unwrap(), ExtReal::PosInf);
    }

    #[test]
    fn uniform_baseline_examples() {
        let (kl, cai) = uniform_baseline_identity(&FiniteDistribution::uniform(5).unwrap(), BITS).unwrap();
        assert_eq!((kl, cai), (ExtReal::ZERO, ExtReal::ZERO));

        let p2 = dist(&[0.1, 0.2, 0.3, 0.4]);
        let (kl, cai) = uniform_baseline_identity(&p2, BITS).unwrap();
        // independent evaluation: Σ log2(0.25 / p_i) = log2(0.25^4 / 0.0024)
        let want: f64 = [0.1f64, 0.2, 0.3, 0.4].iter().map(|p| (0.25 / p).log2()).sum();
        assert!((want - 0.702_749_878_828_293_2).abs() < 1e-12);
        assert!((finite(kl) - want).abs() < 1e-12);
        assert!((finite(cai) - want).abs() < 1e-12);

        assert_eq!(
            uniform_baseline_identity(&dist(&[0.5, 0.0, 0.5]), BITS),
            Err(Error::NotFullySupported { index: 1 })
        );
    }

    #[test]
    fn report_examples() {
        let u2 = FiniteDistribution::uniform(2).unwrap();
        let r = full_report(&u2, &u2, &Event::singleton(1), BITS).unwrap();
        assert_eq!(r.active_info, ExtReal::ZERO);
        assert_eq!(r.cai_full, ExtReal::ZERO);
        assert_eq!(r.cai_coarsened, ExtReal::ZERO);
        assert_eq!(r.kl_12, ExtReal::ZERO);
        assert_eq!(r.kl_21, ExtReal::ZERO);
        assert_eq!(r.tv, 0.0);
        assert_eq!(r.pinsker_bound, ExtReal::ZERO);

        let u10 = FiniteDistribution::uniform(10).unwrap();
        let mut probs = vec![0.05 / 9.0; 10];
        probs[0] = 0.95;
        let p2 = dist(&probs);
        let r = full_report(&u10, &p2, &Event::singleton(0), BITS).unwrap();
        assert!((finite(r.active_info) - 9.5f64.log2()).abs() < 1e-12);
        assert!(finite(r.cai_coarsened) > 0.0);
        assert_eq!(r.regime, Some(Regime::StrongKnowledge));

        let a = dist(&[1.0, 0.0]);
        let b = dist(&[0.0, 1.0]);
        let r = full_report(&a, &b, &Event::singleton(1), BITS).unwrap();
        assert_eq!(r.active_info, ExtReal::PosInf);
        assert_eq!(r.cai_full, ExtReal::Undefined);
        assert_eq!(r.kl_12, ExtReal::PosInf);
        assert_eq!(r.pinsker_bound, ExtReal::PosInf);
        assert_eq!(r.tv, 1.0);
    }

    #[test]
    fn bernoulli_curves_are_extremal_at_half() {
        let grid: Vec<f64> = (1..=99).map(|i| i as f64 / 100.0).collect();
        let ti: Vec<f64> = grid.iter().map(|&p| finite(total_information(&ber(p), BITS))).collect();
        let h: Vec<f64> = grid.iter().map(|&p| entropy(&ber(p), BITS)).collect();
        let argmin = (0..grid.len()).min_by(|&i, &j| ti[i].total_cmp(&ti[j])).unwrap();
        let argmax = (0..grid.len()).max_by(|&i, &j| h[i].total_cmp(&h[j])).unwrap();
        assert_eq!(grid[argmin], 0.5);
        assert_eq!(grid[argmax], 0.5);
    }

    #[test]
    fn divergent_tails() {
        let eps = 0.4999;
        let cai = finite(conserved_active_information(&ber(0.5 + eps), &ber(0.5), BITS).unwrap());
        let kl = finite(kl_divergence(&ber(0.5 + eps), &ber(0.5), BITS).unwrap());
        assert!(cai < -10.0);
        assert!((kl - 1.0).abs() < 0.01);
    }

    fn full_support(max_len: usize) -> impl Strategy<Value = Vec<f64>> {
        prop::collection::vec(0.01f64..1.0, 2..=max_len).prop_map(|w| {
            let total: f64 = w.iter().sum();
            w.into_iter().map(|x| x / total).collect()
        })
    }

    fn pair(max_len: usize) -> impl Strategy<Value = (FiniteDistribution, FiniteDistribution)> {
        (2..=max_len).prop_flat_map(|n| {
            let w = prop::collection::vec(0.0f64..1.0, n);
            (w.clone(), w).prop_filter_map("positive mass", |(a, b)| {
                let a = FiniteDistribution::normalized(label_list(a.len()), a).ok()?;
                let b = FiniteDistribution::normalized(label_list(b.len()), b).ok()?;
                Some((a, b))
            })
        })
    }

    fn label_list(n: usize) -> Vec<crate::distributions::Label> {
        (0..n as i64).map(Into::into).collect()
    }

    proptest! {
        #[test]
        fn kl_is_nonnegative((a, b) in pair(10)) {
            let kl = kl_divergence(&a, &b, BITS).unwrap();
            match kl {
                ExtReal::Finite(x) => prop_assert!(x >= 0.0),
                ExtReal::PosInf => {}
                other => prop_assert!(false, "unexpected {other}"),
            }
            if !a.approx_eq(&b, EQUALITY_TOL) {
                prop_assert!(kl != ExtReal::ZERO);
            }
        }

        #[test]
        fn cai_is_antisymmetric((a, b) in pair(10)) {
            let ab = conserved_active_information(&a, &b, BITS).unwrap();
            let ba = conserved_active_information(&b, &a, BITS).unwrap();
            match (ab, ba) {
                (ExtReal::Finite(x), ExtReal::Finite(y)) => prop_assert!((x + y).abs() <= 1e-12 * (1.0 + x.abs())),
                (x, y) => prop_assert_eq!(x, -y),
            }
        }

        #[test]
        fn cai_matches_total_information_difference(a in full_support(16), b in full_support(16)) {
            let n = a.len().min(b.len());
            let p1 = FiniteDistribution::normalized(label_list(n), a[..n].to_vec()).unwrap();
            let p2 = FiniteDistribution::normalized(label_list(n), b[..n].to_vec()).unwrap();
            let h1 = finite(total_information(&p1, BITS));
            let h2 = finite(total_information(&p2, BITS));
            let cai = finite(conserved_active_information(&p1, &p2, BITS).unwrap());
            prop_assert!((h2 - h1 - cai).abs() <= 1e-9);
        }

        #[test]
        fn coarsened_cai_equals_cai_of_coarsenings((a, b) in pair(8), mask in any::<u8>()) {
            let t = Event::new((0..a.len()).filter(|i| mask >> i & 1 == 1)).unwrap();
            let direct = coarsened_cai(&a, &b, &t, BITS).unwrap();
            let via = conserved_active_information(&a.coarsen(&t).unwrap(), &b.coarsen(&t).unwrap(), BITS).unwrap();
            prop_assert_eq!(direct, via);
        }

        #[test]
        fn pinsker_holds((a, b) in pair(64)) {
            let tv = total_variation(&a, &b).unwrap();
            if let ExtReal::Finite(bound) = pinsker_bound(&a, &b).unwrap() {
                prop_assert!(tv <= bound + 1e-12);
            }
        }

        #[test]
        fn uniform_identity_on_random_support(p in full_support(64)) {
            let p2 = FiniteDistribution::from_probs(p).unwrap();
            let n = p2.len() as f64;
            let (kl, cai) = uniform_baseline_identity(&p2, LogBase::NATS).unwrap();
            let (kl, cai) = (finite(kl), finite(cai));
            prop_assert!((kl - cai).abs() <= 1e-9 * kl.abs().max(1e-300));
            let tv = total_variation(&p2, &FiniteDistribution::uniform(p2.len()).unwrap()).unwrap();
            prop_assert!(tv <= (cai / (2.0 * n)).sqrt() + 1e-12);
        }
    }
}
