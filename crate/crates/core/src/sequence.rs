//! Candidate degree sequences, the Erdős–Gallai decision procedure and
//! regularity (degree-count) vectors.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("sequence is empty")]
    Empty,
    #[error("entry {value} at position {position} is below 1")]
    NonPositive { position: usize, value: i64 },
    #[error("entry {value} at position {position} exceeds the supported degree range")]
    TooLarge { position: usize, value: i64 },
    #[error("max degree {max} exceeds the bound N = {bound}")]
    BoundExceeded { max: u32, bound: u32 },
    #[error("bound N must be at least 1")]
    ZeroBound,
    #[error("regularity vector has no vertices")]
    EmptyRegularity,
    #[error("regularity vectors have different bounds ({left} vs {right})")]
    BoundMismatch { left: u32, right: u32 },
}

/// A nonincreasing sequence of positive integers `d1 >= d2 >= ... >= dn >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<u32>")]
pub struct IntegerSequence(Vec<u32>);

impl IntegerSequence {
    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Largest entry, `d1`.
    pub fn max_degree(&self) -> u32 {
        self.0[0]
    }

    pub fn degree_sum(&self) -> u64 {
        self.0.iter().map(|&d| u64::from(d)).sum()
    }

    pub fn has_even_sum(&self) -> bool {
        self.degree_sum().is_multiple_of(2)
    }

    /// Builds a sequence from a graph's degree list; isolated vertices are rejected.
    pub fn from_degrees(degrees: &[usize]) -> Result<Self, SequenceError> {
        let raw: Vec<i64> = degrees.iter().map(|&d| d as i64).collect();
        parse_sequence(&raw)
    }

    /// Concatenates the multisets of both sequences.
    pub fn merged(&self, other: &IntegerSequence) -> IntegerSequence {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        v.sort_unstable_by(|a, b| b.cmp(a));
        IntegerSequence(v)
    }

    /// Caller guarantees `entries` is nonempty, positive and nonincreasing.
    pub(crate) fn from_sorted_unchecked(entries: Vec<u32>) -> Self {
        debug_assert!(!entries.is_empty());
        debug_assert!(entries.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(entries.iter().all(|&d| d >= 1));
        IntegerSequence(entries)
    }
}

impl TryFrom<Vec<i64>> for IntegerSequence {
    type Error = SequenceError;

    fn try_from(raw: Vec<i64>) -> Result<Self, Self::Error> {
        parse_sequence(&raw)
    }
}

impl TryFrom<Vec<u32>> for IntegerSequence {
    type Error = SequenceError;

    fn try_from(mut raw: Vec<u32>) -> Result<Self, Self::Error> {
        if raw.is_empty() {
            return Err(SequenceError::Empty);
        }
        if let Some(position) = raw.iter().position(|&d| d == 0) {
            return Err(SequenceError::NonPositive { position, value: 0 });
        }
        raw.sort_unstable_by(|a, b| b.cmp(a));
        Ok(IntegerSequence(raw))
    }
}

impl From<IntegerSequence> for Vec<u32> {
    fn from(seq: IntegerSequence) -> Self {
        seq.0
    }
}

impl fmt::Display for IntegerSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// Sorts `raw` nonincreasing and validates it.
pub fn parse_sequence(raw: &[i64]) -> Result<IntegerSequence, SequenceError> {
    if raw.is_empty() {
        return Err(SequenceError::Empty);
    }
    let mut entries = Vec::with_capacity(raw.len());
    for (position, &value) in raw.iter().enumerate() {
        if value < 1 {
            return Err(SequenceError::NonPositive { position, value });
        }
        let d = u32::try_from(value).map_err(|_| SequenceError::TooLarge { position, value })?;
        entries.push(d);
    }
    entries.sort_unstable_by(|a, b| b.cmp(a));
    Ok(IntegerSequence(entries))
}

/// Outcome of the Erdős–Gallai test.
///
/// `failing_index` is the smallest violating `k` (1-based). It is absent when
/// the sequence is rejected for its odd degree sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphicalityVerdict {
    pub graphic: bool,
    pub failing_index: Option<usize>,
}

impl GraphicalityVerdict {
    pub fn odd_sum(&self) -> bool {
        !self.graphic && self.failing_index.is_none()
    }
}

/// Both sides of the Erdős–Gallai inequality at `k` (1-based), evaluated
/// directly from the formula:
/// `sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k)`.
pub fn erdos_gallai_sides(seq: &IntegerSequence, k: usize) -> (u64, u64) {
    assert!(k >= 1 && k <= seq.len(), "k = {k} out of range");
    let d = seq.entries();
    let kk = k as u64;
    let lhs: u64 = d[..k].iter().map(|&x| u64::from(x)).sum();
    let rhs = kk * (kk - 1) + d[k..].iter().map(|&x| u64::from(x).min(kk)).sum::<u64>();
    (lhs, rhs)
}

/// Decides graphicality in `O(n)`.
pub fn erdos_gallai_check(seq: &IntegerSequence) -> GraphicalityVerdict {
    if !seq.has_even_sum() {
        return GraphicalityVerdict {
            graphic: false,
            failing_index: None,
        };
    }
    let d = seq.entries();
    let n = d.len();
    let mut prefix = Vec::with_capacity(n + 1);
    prefix.push(0u64);
    for &x in d {
        prefix.push(prefix.last().unwrap() + u64::from(x));
    }
    let total = prefix[n];
    // `at_least` = number of entries >= k; nonincreasing in k.
    let mut at_least = n;
    for k in 1..=n {
        while at_least > 0 && (d[at_least - 1] as usize) < k {
            at_least -= 1;
        }
        let kk = k as u64;
        // Past position k, entries in (k, max(k, at_least)] contribute k each,
        // the rest contribute themselves.
        let split = at_least.max(k);
        let rhs = kk * (kk - 1) + kk * (split - k) as u64 + (total - prefix[split]);
        if prefix[k] > rhs {
            return GraphicalityVerdict {
                graphic: false,
                failing_index: Some(k),
            };
        }
    }
    GraphicalityVerdict {
        graphic: true,
        failing_index: None,
    }
}

pub fn is_graphic(seq: &IntegerSequence) -> bool {
    erdos_gallai_check(seq).graphic
}

/// Length bound that guarantees graphicality: `n >= d1^2` with even sum.
pub fn sufficient_by_length(seq: &IntegerSequence) -> bool {
    let d1 = u64::from(seq.max_degree());
    seq.len() as u64 >= d1 * d1 && seq.has_even_sum()
}

/// Multiplicity vector of degree values `1..=N`.
///
/// Stored by degree value; displayed and serialized highest degree first,
/// `(a_N, ..., a_2, a_1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RegularitySequence {
    // counts[i - 1] = multiplicity of degree i
    counts: Vec<u64>,
}

impl RegularitySequence {
    /// Builds from counts ordered highest degree first, as written `(a_N, ..., a_1)`.
    pub fn from_counts_desc(counts_desc: &[u64]) -> Result<Self, SequenceError> {
        if counts_desc.is_empty() {
            return Err(SequenceError::ZeroBound);
        }
        let mut counts = counts_desc.to_vec();
        counts.reverse();
        Ok(RegularitySequence { counts })
    }

    pub fn bound(&self) -> u32 {
        self.counts.len() as u32
    }

    /// Multiplicity of degree value `degree` (`1..=N`).
    pub fn count(&self, degree: u32) -> u64 {
        self.counts[(degree - 1) as usize]
    }

    /// Counts highest degree first.
    pub fn counts_desc(&self) -> Vec<u64> {
        self.counts.iter().rev().copied().collect()
    }

    pub fn vertex_count(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn degree_sum(&self) -> u64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(i, &a)| (i as u64 + 1) * a)
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.counts.iter().all(|&a| a == 0)
    }

    /// `self - other` when `other <=_H self`.
    pub fn checked_sub(&self, other: &RegularitySequence) -> Option<RegularitySequence> {
        if self.bound() != other.bound() {
            return None;
        }
        let counts = self
            .counts
            .iter()
            .zip(&other.counts)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Vec<_>>>()?;
        Some(RegularitySequence { counts })
    }

    pub fn checked_add(&self, other: &RegularitySequence) -> Option<RegularitySequence> {
        if self.bound() != other.bound() {
            return None;
        }
        let counts = self
            .counts
            .iter()
            .zip(&other.counts)
            .map(|(&a, &b)| a.checked_add(b))
            .collect::<Option<Vec<_>>>()?;
        Some(RegularitySequence { counts })
    }
}

impl fmt::Display for RegularitySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.counts.iter().rev().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
struct RegularityRepr {
    bound: u32,
    counts: Vec<u64>,
}

impl Serialize for RegularitySequence {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RegularityRepr {
            bound: self.bound(),
            counts: self.counts_desc(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RegularitySequence {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = RegularityRepr::deserialize(d)?;
        if repr.counts.len() != repr.bound as usize {
            return Err(serde::de::Error::custom(format!(
                "counts has length {} but bound is {}",
                repr.counts.len(),
                repr.bound
            )));
        }
        RegularitySequence::from_counts_desc(&repr.counts).map_err(serde::de::Error::custom)
    }
}

pub fn to_regularity(
    seq: &IntegerSequence,
    bound: u32,
) -> Result<RegularitySequence, SequenceError> {
    if bound == 0 {
        return Err(SequenceError::ZeroBound);
    }
    if seq.max_degree() > bound {
        return Err(SequenceError::BoundExceeded {
            max: seq.max_degree(),
            bound,
        });
    }
    let mut counts = vec![0u64; bound as usize];
    for &d in seq.entries() {
        counts[(d - 1) as usize] += 1;
    }
    Ok(RegularitySequence { counts })
}

pub fn from_regularity(reg: &RegularitySequence) -> Result<IntegerSequence, SequenceError> {
    if reg.is_zero() {
        return Err(SequenceError::EmptyRegularity);
    }
    let mut entries = Vec::with_capacity(reg.vertex_count() as usize);
    for degree in (1..=reg.bound()).rev() {
        entries.extend(std::iter::repeat_n(degree, reg.count(degree) as usize));
    }
    Ok(IntegerSequence::from_sorted_unchecked(entries))
}

/// Coordinatewise order `<=_H`.
pub fn leq_pointwise(
    left: &RegularitySequence,
    right: &RegularitySequence,
) -> Result<bool, SequenceError> {
    if left.bound() != right.bound() {
        return Err(SequenceError::BoundMismatch {
            left: left.bound(),
            right: right.bound(),
        });
    }
    Ok(left.counts.iter().zip(&right.counts).all(|(a, b)| a <= b))
}
