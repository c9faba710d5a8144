//! Finite discrete distributions, events and the algebra on them.
//!
//! The reference measure on every space is counting measure, so densities are
//! simply the probability mass entries.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance on the total mass of a distribution at construction.
pub const NORMALIZATION_TOL: f64 = 1e-9;
/// Entries above `-NEGATIVE_TOL` are accepted (and clamped to zero).
pub const NEGATIVE_TOL: f64 = 1e-12;
/// Largest outcome space [`FiniteDistribution::product`] will build.
pub const PRODUCT_CAP: usize = 10_000_000;

/// Identifier of one outcome. Product spaces label outcomes by tuples.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Label {
    Int(i64),
    Str(String),
    Tuple(Vec<Label>),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Int(i) => write!(f, "{i}"),
            Label::Str(s) => write!(f, "{s:?}"),
            Label::Tuple(parts) => {
                f.write_str("(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{p}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl From<i64> for Label {
    fn from(i: i64) -> Self {
        Label::Int(i)
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Self {
        Label::Str(s.to_owned())
    }
}

impl From<String> for Label {
    fn from(s: String) -> Self {
        Label::Str(s)
    }
}

fn integer_labels(n: usize) -> Vec<Label> {
    (0..n as i64).map(Label::Int).collect()
}

/// A validated probability mass function over a labeled finite space.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FiniteDistribution {
    labels: Vec<Label>,
    probs: Vec<f64>,
}

impl FiniteDistribution {
    pub fn new(labels: Vec<Label>, probs: Vec<f64>) -> Result<Self> {
        if labels.len() != probs.len() {
            return Err(Error::LengthMismatch { labels: labels.len(), probs: probs.len() });
        }
        if labels.is_empty() {
            return Err(Error::EmptySpace);
        }
        let mut probs = probs;
        for (index, p) in probs.iter_mut().enumerate() {
            if !p.is_finite() {
                return Err(Error::NonFiniteMass { index, value: *p });
            }
            if *p < -NEGATIVE_TOL {
                return Err(Error::NegativeMass { index, value: *p });
            }
            if *p < 0.0 {
                *p = 0.0;
            }
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > NORMALIZATION_TOL {
            return Err(Error::NotNormalized { sum });
        }
        let mut seen = HashSet::with_capacity(labels.len());
        for label in &labels {
            if !seen.insert(label) {
                return Err(Error::DuplicateLabel(label.to_string()));
            }
        }
        Ok(FiniteDistribution { labels, probs })
    }

    /// Distribution over the integer labels `0..probs.len()`.
    pub fn from_probs(probs: Vec<f64>) -> Result<Self> {
        Self::new(integer_labels(probs.len()), probs)
    }

    /// Builds a distribution from nonnegative weights by dividing through by
    /// their total. This is the only place renormalization happens.
    pub fn normalized(labels: Vec<Label>, weights: Vec<f64>) -> Result<Self> {
        for (index, w) in weights.iter().enumerate() {
            if !w.is_finite() {
                return Err(Error::NonFiniteMass { index, value: *w });
            }
            if *w < 0.0 {
                return Err(Error::NegativeMass { index, value: *w });
            }
        }
        let total: f64 = weights.iter().sum();
        if total <= 0.0 {
            return Err(Error::NotNormalized { sum: total });
        }
        Self::new(labels, weights.into_iter().map(|w| w / total).collect())
    }

    /// Skips validation; callers guarantee the invariants.
    pub(crate) fn from_parts_unchecked(labels: Vec<Label>, probs: Vec<f64>) -> Self {
        debug_assert_eq!(labels.len(), probs.len());
        debug_assert!((probs.iter().sum::<f64>() - 1.0).abs() <= NORMALIZATION_TOL);
        FiniteDistribution { labels, probs }
    }

    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptySpace);
        }
        let mass = 1.0 / n as f64;
        Ok(FiniteDistribution { labels: integer_labels(n), probs: vec![mass; n] })
    }

    /// Bernoulli law on labels `[0, 1]` with `P(1) = p`.
    pub fn bernoulli(p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::ProbabilityOutOfRange(p));
        }
        Ok(FiniteDistribution { labels: integer_labels(2), probs: vec![1.0 - p, p] })
    }

    /// Product measure over the Cartesian product of the component spaces.
    ///
    /// Outcomes are ordered lexicographically by component label order, the
    /// last component varying fastest. Each outcome is labeled by the tuple
    /// of its component labels.
    pub fn product(components: &[FiniteDistribution]) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptyProduct);
        }
        if components.len() == 1 {
            return Ok(components[0].clone());
        }
        let size = components.iter().try_fold(1u128, |acc, c| acc.checked_mul(c.len() as u128));
        match size {
            Some(s) if s <= PRODUCT_CAP as u128 => {}
            Some(s) => return Err(Error::ProductTooLarge { size: s, cap: PRODUCT_CAP }),
            None => return Err(Error::ProductTooLarge { size: u128::MAX, cap: PRODUCT_CAP }),
        }

        let mut labels: Vec<Vec<Label>> = vec![Vec::new()];
        let mut probs = vec![1.0];
        for component in components {
            let mut next_labels = Vec::with_capacity(labels.len() * component.len());
            let mut next_probs = Vec::with_capacity(probs.len() * component.len());
            for (prefix, &mass) in labels.iter().zip(&probs) {
                for (label, &p) in component.labels.iter().zip(&component.probs) {
                    let mut tuple = prefix.clone();
                    tuple.push(label.clone());
                    next_labels.push(tuple);
                    next_probs.push(mass * p);
                }
            }
            labels = next_labels;
            probs = next_probs;
        }
        let labels = labels.into_iter().map(Label::Tuple).collect();
        Self::new(labels, probs)
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn prob(&self, index: usize) -> Option<f64> {
        self.probs.get(index).copied()
    }

    pub fn index_of(&self, label: &Label) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn is_fully_supported(&self) -> bool {
        self.probs.iter().all(|&p| p > 0.0)
    }

    pub fn same_space(&self, other: &FiniteDistribution) -> bool {
        self.labels == other.labels
    }

    /// Entrywise equality within `tol`, over the same label list.
    pub fn approx_eq(&self, other: &FiniteDistribution, tol: f64) -> bool {
        self.same_space(other) && self.probs.iter().zip(&other.probs).all(|(a, b)| (a - b).abs() <= tol)
    }

    /// `P(A)`, clamped into `[0, 1]`.
    pub fn event_probability(&self, event: &Event) -> Result<f64> {
        event.check_bounds(self.len())?;
        let mass: f64 = event.indices.iter().map(|&i| self.probs[i]).sum();
        Ok(mass.clamp(0.0, 1.0))
    }

    /// `(P(A), P(Aᶜ))`, each summed over its own outcomes so that a null
    /// complement stays exactly zero.
    pub fn split_masses(&self, event: &Event) -> Result<(f64, f64)> {
        event.check_bounds(self.len())?;
        let mut inside = 0.0;
        let mut outside = 0.0;
        let mut next = event.indices.iter().peekable();
        for (i, &x) in self.probs.iter().enumerate() {
            if next.peek() == Some(&&i) {
                next.next();
                inside += x;
            } else {
                outside += x;
            }
        }
        Ok((inside.clamp(0.0, 1.0), outside.clamp(0.0, 1.0)))
    }

    /// Projects onto the binary partition `{T, Tᶜ}`, labeled `"T"` and `"Tc"`.
    pub fn coarsen(&self, target: &Event) -> Result<FiniteDistribution> {
        let (mass, rest) = self.split_masses(target)?;
        Ok(FiniteDistribution { labels: vec![Label::from("T"), Label::from("Tc")], probs: vec![mass, rest] })
    }
}

/// Extends two distributions to the union of their label sets.
///
/// Outcomes missing from one space receive zero mass under that
/// distribution, so every event of either original space keeps its
/// probability. If both distributions already share the same label list
/// they are returned unchanged; otherwise the union is sorted.
pub fn merge_spaces(p1: &FiniteDistribution, p2: &FiniteDistribution) -> (FiniteDistribution, FiniteDistribution) {
    if p1.same_space(p2) {
        return (p1.clone(), p2.clone());
    }
    let union: Vec<Label> = p1.labels.iter().chain(&p2.labels).cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let extend = |p: &FiniteDistribution| {
        let mass: HashMap<&Label, f64> = p.labels.iter().zip(p.probs.iter().copied()).collect();
        let probs = union.iter().map(|l| mass.get(l).copied().unwrap_or(0.0)).collect();
        FiniteDistribution::from_parts_unchecked(union.clone(), probs)
    };
    (extend(p1), extend(p2))
}

/// A set of outcome indices, kept sorted and duplicate-free.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Event {
    indices: Vec<usize>,
}

impl Event {
    pub fn new(indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut indices: Vec<usize> = indices.into_iter().collect();
        indices.sort_unstable();
        if let Some(w) = indices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateIndex(w[0]));
        }
        Ok(Event { indices })
    }

    /// Like [`Event::new`] but also checks the indices against a space size.
    pub fn within(indices: impl IntoIterator<Item = usize>, len: usize) -> Result<Self> {
        let event = Self::new(indices)?;
        event.check_bounds(len)?;
        Ok(event)
    }

    pub fn empty() -> Self {
        Event { indices: Vec::new() }
    }

    pub fn full(len: usize) -> Self {
        Event { indices: (0..len).collect() }
    }

    pub fn singleton(index: usize) -> Self {
        Event { indices: vec![index] }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.indices.binary_search(&index).is_ok()
    }

    pub fn complement(&self, len: usize) -> Event {
        Event { indices: (0..len).filter(|i| !self.contains(*i)).collect() }
    }

    pub fn check_bounds(&self, len: usize) -> Result<()> {
        match self.indices.last() {
            Some(&index) if index >= len => Err(Error::IndexOutOfBounds { index, len }),
            _ => Ok(()),
        }
    }
}

/// The specification `{x : f(x) ≥ f0}` over a space of `space_size` outcomes.
pub fn specification_event(f_values: &[f64], f0: f64, space_size: usize) -> Result<Event> {
    if f_values.len() != space_size {
        return Err(Error::LengthMismatch { labels: space_size, probs: f_values.len() });
    }
    Ok(Event { indices: f_values.iter().enumerate().filter(|(_, &f)| f >= f0).map(|(i, _)| i).collect() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn labels(names: &[&str]) -> Vec<Label> {
        names.iter().map(|&s| Label::from(s)).collect()
    }

    #[test]
    fn split_masses_keep_null_parts_exact() {
        let d = FiniteDistribution::from_probs(vec![0.2, 0.5, 0.2, 0.1, 0.0]).unwrap();
        assert_eq!(d.split_masses(&Event::new([0, 1, 2, 3]).unwrap()).unwrap().1, 0.0);
        assert_eq!(d.split_masses(&Event::new([4]).unwrap()).unwrap().0, 0.0);
        let (a, b) = d.split_masses(&Event::new([1, 3]).unwrap()).unwrap();
        assert!((a - 0.6).abs() < 1e-15 && (b - 0.4).abs() < 1e-15);
        assert!(d.split_masses(&Event::singleton(5)).is_err());
    }

    #[test]
    fn construction_examples() {
        let b = FiniteDistribution::new(vec![0.into(), 1.into()], vec![0.5, 0.5]).unwrap();
        assert_eq!(b, FiniteDistribution::bernoulli(0.5).unwrap());
        assert!(matches!(FiniteDistribution::from_probs(vec![0.3, 0.3, 0.3]), Err(Error::NotNormalized { .. })));
        assert!(FiniteDistribution::from_probs(vec![1.0, 0.0]).is_ok());
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(FiniteDistribution::from_probs(vec![1.2, -0.2]), Err(Error::NegativeMass { index: 1, .. })));
        assert!(matches!(FiniteDistribution::new(labels(&["a", "a"]), vec![0.5, 0.5]), Err(Error::DuplicateLabel(_))));
        assert!(matches!(FiniteDistribution::new(labels(&["a"]), vec![0.5, 0.5]), Err(Error::LengthMismatch { .. })));
        assert!(matches!(FiniteDistribution::from_probs(vec![f64::NAN, 1.0]), Err(Error::NonFiniteMass { .. })));
        assert_eq!(FiniteDistribution::from_probs(vec![]), Err(Error::EmptySpace));
    }

    #[test]
    fn tiny_negative_entries_clamp_to_zero() {
        let d = FiniteDistribution::from_probs(vec![1.0, -1e-13]).unwrap();
        assert_eq!(d.probs(), &[1.0, 0.0]);
    }

    #[test]
    fn uniform_and_bernoulli() {
        assert_eq!(FiniteDistribution::uniform(2).unwrap().probs(), &[0.5, 0.5]);
        assert_eq!(FiniteDistribution::uniform(4).unwrap().probs(), &[0.25; 4]);
        assert_eq!(FiniteDistribution::uniform(1).unwrap().probs(), &[1.0]);
        assert_eq!(FiniteDistribution::uniform(0), Err(Error::EmptySpace));
        assert_eq!(FiniteDistribution::bernoulli(0.25).unwrap().probs(), &[0.75, 0.25]);
        assert_eq!(FiniteDistribution::bernoulli(1.1), Err(Error::ProbabilityOutOfRange(1.1)));
        assert!(FiniteDistribution::bernoulli(-0.1).is_err());
    }

    #[test]
    fn product_of_bernoullis() {
        let half = FiniteDistribution::bernoulli(0.5).unwrap();
        let prod = FiniteDistribution::product(&[half.clone(), half]).unwrap();
        assert_eq!(prod.probs(), &[0.25; 4]);

        let prod = FiniteDistribution::product(&[
            FiniteDistribution::bernoulli(0.2).unwrap(),
            FiniteDistribution::bernoulli(0.3).unwrap(),
        ])
        .unwrap();
        // (0,0), (0,1), (1,0), (1,1) by hand: 0.8*0.7, 0.8*0.3, 0.2*0.7, 0.2*0.3
        let expected = [0.56, 0.24, 0.14, 0.06];
        for (got, want) in prod.probs().iter().zip(expected) {
            assert!((got - want).abs() < 1e-15);
        }
        assert_eq!(prod.labels()[1], Label::Tuple(vec![0.into(), 1.into()]));
        assert_eq!(prod.labels()[2], Label::Tuple(vec![1.into(), 0.into()]));

        let u3 = FiniteDistribution::uniform(3).unwrap();
        assert_eq!(FiniteDistribution::product(std::slice::from_ref(&u3)).unwrap(), u3);
        assert_eq!(FiniteDistribution::product(&[]), Err(Error::EmptyProduct));
    }

    #[test]
    fn product_cap() {
        let big = FiniteDistribution::uniform(1000).unwrap();
        let err = FiniteDistribution::product(&[big.clone(), big.clone(), big]).unwrap_err();
        assert!(matches!(err, Error::ProductTooLarge { size: 1_000_000_000, .. }));
    }

    #[test]
    fn event_probability_examples() {
        let u4 = FiniteDistribution::uniform(4).unwrap();
        assert_eq!(u4.event_probability(&Event::new([0, 1]).unwrap()).unwrap(), 0.5);
        assert_eq!(u4.event_probability(&Event::empty()).unwrap(), 0.0);
        let b = FiniteDistribution::bernoulli(0.25).unwrap();
        assert_eq!(b.event_probability(&Event::singleton(1)).unwrap(), 0.25);
        assert_eq!(u4.event_probability(&Event::singleton(4)), Err(Error::IndexOutOfBounds { index: 4, len: 4 }));
    }

    #[test]
    fn event_construction() {
        assert_eq!(Event::new([3, 1, 2]).unwrap().indices(), &[1, 2, 3]);
        assert_eq!(Event::new([1, 1]), Err(Error::DuplicateIndex(1)));
        assert!(Event::within([0, 5], 5).is_err());
        assert_eq!(Event::singleton(1).complement(4).indices(), &[0, 2, 3]);
    }

    #[test]
    fn coarsen_examples() {
        let u10 = FiniteDistribution::uniform(10).unwrap();
        let c = u10.coarsen(&Event::singleton(0)).unwrap();
        assert_eq!(c.probs()[0], 0.1);
        assert!((c.probs()[1] - 0.9).abs() < 1e-15);
        let b = FiniteDistribution::bernoulli(0.25).unwrap();
        assert_eq!(b.coarsen(&Event::full(2)).unwrap().probs(), &[1.0, 0.0]);
        let c = b.coarsen(&Event::singleton(1)).unwrap();
        assert_eq!(c.probs(), &[0.25, 0.75]);
        assert_eq!(c.labels(), &labels(&["T", "Tc"])[..]);
    }

    #[test]
    fn merge_examples() {
        let p1 = FiniteDistribution::new(labels(&["a", "b"]), vec![0.3, 0.7]).unwrap();
        let p2 = FiniteDistribution::new(labels(&["b", "c"]), vec![0.4, 0.6]).unwrap();
        let (m1, m2) = merge_spaces(&p1, &p2);
        assert_eq!(m1.labels(), &labels(&["a", "b", "c"])[..]);
        assert_eq!(m1.probs(), &[0.3, 0.7, 0.0]);
        assert_eq!(m2.probs(), &[0.0, 0.4, 0.6]);

        let (u1, u2) = merge_spaces(&p1, &p1);
        assert_eq!((u1, u2), (p1.clone(), p1));

        let a = FiniteDistribution::new(labels(&["a"]), vec![1.0]).unwrap();
        let b = FiniteDistribution::new(labels(&["b"]), vec![1.0]).unwrap();
        let (ma, mb) = merge_spaces(&a, &b);
        assert_eq!(ma.probs(), &[1.0, 0.0]);
        assert_eq!(mb.probs(), &[0.0, 1.0]);
    }

    #[test]
    fn specification_examples() {
        assert_eq!(specification_event(&[1.0, 5.0, 3.0], 3.0, 3).unwrap().indices(), &[1, 2]);
        assert_eq!(specification_event(&[1.0, 5.0, 3.0], f64::NEG_INFINITY, 3).unwrap(), Event::full(3));
        assert!(specification_event(&[1.0, 5.0, 3.0], 6.0, 3).unwrap().is_empty());
        assert!(specification_event(&[1.0, 5.0], 0.0, 3).is_err());
    }

    fn weights(max_len: usize) -> impl Strategy<Value = Vec<f64>> {
        prop::collection::vec(0.0f64..1.0, 1..=max_len).prop_filter("positive total", |w| w.iter().sum::<f64>() > 1e-6)
    }

    fn dist(max_len: usize) -> impl Strategy<Value = FiniteDistribution> {
        weights(max_len).prop_map(|w| {
            let labels = integer_labels(w.len());
            FiniteDistribution::normalized(labels, w).unwrap()
        })
    }

    // Brute-force measure extension: the extended measure of a set of labels
    // is the original mass of those labels that belong to the original space.
    fn extended_measure(p: &FiniteDistribution, event_labels: &[&Label]) -> f64 {
        event_labels.iter().filter_map(|l| p.index_of(l).map(|i| p.probs()[i])).sum()
    }

    fn check_original_events(original: &FiniteDistribution, merged: &FiniteDistribution) {
        let n = original.len();
        for mask in 0u32..(1 << n) {
            let members: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let labels: Vec<&Label> = members.iter().map(|&i| &original.labels()[i]).collect();
            let merged_event = Event::new(labels.iter().map(|l| merged.index_of(l).unwrap())).unwrap();
            let want = original.event_probability(&Event::new(members).unwrap()).unwrap();
            let got = merged.event_probability(&merged_event).unwrap();
            assert!((got - want).abs() < 1e-12);
            assert!((got - extended_measure(original, &labels)).abs() < 1e-12);
        }
    }

    proptest! {
        #[test]
        fn product_is_normalized(components in prop::collection::vec(dist(5), 1..5)) {
            let prod = FiniteDistribution::product(&components).unwrap();
            prop_assert!((prod.probs().iter().sum::<f64>() - 1.0).abs() < 1e-9);
            let expected: usize = components.iter().map(|c| c.len()).product();
            prop_assert_eq!(prod.len(), expected);
        }

        #[test]
        fn event_and_complement_sum_to_one(d in dist(12), mask in any::<u16>()) {
            let event = Event::new((0..d.len()).filter(|i| mask >> i & 1 == 1)).unwrap();
            let inside = d.event_probability(&event).unwrap();
            let outside = d.event_probability(&event.complement(d.len())).unwrap();
            prop_assert!((inside + outside - 1.0).abs() < 1e-12);
        }

        #[test]
        fn coarsening_preserves_target_mass(d in dist(12), mask in any::<u16>()) {
            let event = Event::new((0..d.len()).filter(|i| mask >> i & 1 == 1)).unwrap();
            let coarse = d.coarsen(&event).unwrap();
            prop_assert_eq!(
                coarse.event_probability(&Event::singleton(0)).unwrap(),
                d.event_probability(&event).unwrap()
            );
        }

        #[test]
        fn merge_preserves_every_original_event(
            w1 in weights(10),
            w2 in weights(10),
            offset in 0i64..10,
        ) {
            let l1: Vec<Label> = (0..w1.len() as i64).map(Label::Int).collect();
            let l2: Vec<Label> = (offset..offset + w2.len() as i64).map(Label::Int).collect();
            let p1 = FiniteDistribution::normalized(l1, w1).unwrap();
            let p2 = FiniteDistribution::normalized(l2, w2).unwrap();
            let (m1, m2) = merge_spaces(&p1, &p2);
            prop_assert!(m1.same_space(&m2));
            prop_assert!((m1.probs().iter().sum::<f64>() - 1.0).abs() < 1e-9);
            prop_assert!((m2.probs().iter().sum::<f64>() - 1.0).abs() < 1e-9);

            check_original_events(&p1, &m1);
            check_original_events(&p2, &m2);
            // outcomes new to a space carry no mass
            for (i, label) in m1.labels().iter().enumerate() {
                if p1.index_of(label).is_none() {
                    prop_assert_eq!(m1.probs()[i], 0.0);
                }
                if p2.index_of(label).is_none() {
                    prop_assert_eq!(m2.probs()[i], 0.0);
                }
            }
        }
    }
}
