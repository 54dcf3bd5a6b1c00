//! Finite-prefix experiments on streams of bounded graphic sequences.
//!
//! Any infinite stream of graphic sequences with entries at most `N` has a
//! good pair `i < j` with `D_i <= D_j`. The harness can only look at finite
//! prefixes: it finds good pairs in concrete streams and mines antichains
//! among short sequences. It never verifies the well-quasi-order property
//! itself.

use std::fmt;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::enumerate::graphic_sequences;
use crate::rao_order::{
    rao_leq_sufficient, OrderError, Prepared, RaoWitness, SearchLimits, WitnessError,
};
use crate::sequence::{is_graphic, IntegerSequence};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("invalid stream configuration: {0}")]
    InvalidConfig(String),
    #[error("no graphic sequence has entries <= {bound} and length <= {max_length}")]
    NoGraphicSequence { bound: u32, max_length: usize },
    #[error("sequence {index} ({sequence}) is not a graphic sequence bounded by {bound}")]
    OutOfBounds {
        index: usize,
        sequence: IntegerSequence,
        bound: u32,
    },
    #[error("no good pair among the first {scanned} sequences")]
    Exhausted { scanned: usize },
    #[error("antichain mining needs max_length <= oracle cap {cap}, got {max_length}")]
    BeyondOracle { max_length: usize, cap: usize },
    #[error("witness for pair ({i}, {j}) failed revalidation: {source}")]
    InvalidWitness {
        i: usize,
        j: usize,
        source: WitnessError,
    },
    #[error(transparent)]
    Order(#[from] OrderError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Generator {
    Random,
    Enumerate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StreamConfig {
    /// Largest allowed entry, `N`.
    pub bound: u32,
    pub max_length: usize,
    pub seed: u64,
    pub count: usize,
    pub generator: Generator,
}

impl StreamConfig {
    pub fn validate(&self) -> Result<(), HarnessError> {
        if self.bound < 1 {
            return Err(HarnessError::InvalidConfig("N must be at least 1".into()));
        }
        if self.count < 2 {
            return Err(HarnessError::InvalidConfig(
                "count must be at least 2".into(),
            ));
        }
        if self.max_length < 1 {
            return Err(HarnessError::InvalidConfig(
                "max_length must be at least 1".into(),
            ));
        }
        // (1,1) is the shortest graphic sequence and exists for every N.
        if self.max_length < 2 {
            return Err(HarnessError::NoGraphicSequence {
                bound: self.bound,
                max_length: self.max_length,
            });
        }
        Ok(())
    }
}

/// Produces the stream described by `cfg`.
///
/// `Random` draws a length in `1..=max_length` and entries in `1..=N`, repairs
/// an odd sum (append a 1 if there is room, otherwise decrement the last odd
/// entry, dropping it if it reaches 0) and keeps the result only if it is
/// graphic. `Enumerate` lists graphic sequences shortest first, then
/// lexicographically, and stops early if there are fewer than `count`.
pub fn generate_stream(cfg: &StreamConfig) -> Result<Vec<IntegerSequence>, HarnessError> {
    cfg.validate()?;
    match cfg.generator {
        Generator::Enumerate => {
            let mut all = graphic_sequences(cfg.bound, cfg.max_length);
            all.truncate(cfg.count);
            Ok(all)
        }
        Generator::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let mut out = Vec::with_capacity(cfg.count);
            while out.len() < cfg.count {
                if let Some(s) = sample_graphic(&mut rng, cfg.bound, cfg.max_length) {
                    out.push(s);
                }
            }
            Ok(out)
        }
    }
}

/// One rejection-sampling attempt.
pub fn sample_graphic<R: Rng>(
    rng: &mut R,
    bound: u32,
    max_length: usize,
) -> Option<IntegerSequence> {
    let len = rng.gen_range(1..=max_length);
    let mut entries: Vec<u32> = (0..len).map(|_| rng.gen_range(1..=bound)).collect();
    entries.sort_unstable_by(|a, b| b.cmp(a));
    if entries.iter().map(|&d| u64::from(d)).sum::<u64>() % 2 == 1 {
        if entries.len() < max_length {
            entries.push(1);
        } else {
            let last_odd = entries
                .iter()
                .rposition(|d| d % 2 == 1)
                .expect("odd sum has an odd entry");
            entries[last_odd] -= 1;
            if entries[last_odd] == 0 {
                entries.remove(last_odd);
            }
            entries.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    let seq = IntegerSequence::try_from(entries).ok()?;
    is_graphic(&seq).then_some(seq)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Sufficient,
    Components,
    Oracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Sufficient => "sufficient",
            Method::Components => "components",
            Method::Oracle => "oracle",
        })
    }
}

/// A validated good pair. Indices are 1-based positions in the stream.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodPairReport {
    pub i: usize,
    pub j: usize,
    pub method: Method,
    pub witness: RaoWitness,
    pub prefix_length_scanned: usize,
}

impl fmt::Display for GoodPairReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "good pair i={} j={}: {} <= {} via {} (scanned {})",
            self.i,
            self.j,
            self.witness.d1,
            self.witness.d2,
            self.method,
            self.prefix_length_scanned
        )
    }
}

/// Tries one ordered pair with each method in turn.
pub(crate) fn compare_prepared(
    small: &Prepared,
    large: &Prepared,
    bound: u32,
    limits: &SearchLimits,
) -> Result<Option<(Method, RaoWitness)>, OrderError> {
    if let Some(w) = rao_leq_sufficient(&small.seq, &large.seq, bound)? {
        return Ok(Some((Method::Sufficient, w)));
    }
    if let Some(w) = small.via_components(large, limits.induced_cap) {
        return Ok(Some((Method::Components, w)));
    }
    if large.seq.len() <= limits.oracle_cap && small.seq.len() <= large.seq.len() {
        let host = large.host(limits.oracle_cap)?;
        if let Some(w) = host.find(&small.seq, crate::exec::Strategy::Sequential)? {
            return Ok(Some((Method::Oracle, w)));
        }
    }
    Ok(None)
}

/// Scans `j = 2, 3, ...` and, for each `j`, `i = 1, ..., j-1`; returns the
/// first pair some method certifies. Pairs at a fixed `j` may be checked in
/// parallel, but the reported pair is always the scan-order winner.
pub fn find_good_pair(
    stream: &[IntegerSequence],
    bound: u32,
    limits: &SearchLimits,
) -> Result<GoodPairReport, HarnessError> {
    for (index, s) in stream.iter().enumerate() {
        if s.max_degree() > bound || !is_graphic(s) {
            return Err(HarnessError::OutOfBounds {
                index: index + 1,
                sequence: s.clone(),
                bound,
            });
        }
    }
    let prepared: Vec<Prepared> = stream.iter().cloned().map(Prepared::new).collect();
    for j in 1..prepared.len() {
        let large = &prepared[j];
        let hit =
            limits.strategy.find_map_first(&prepared[..j], |i, small| {
                match compare_prepared(small, large, bound, limits) {
                    Ok(None) => None,
                    Ok(Some(found)) => Some(Ok((i, found))),
                    Err(e) => Some(Err(e)),
                }
            });
        if let Some(hit) = hit {
            let (i, (method, witness)) = hit?;
            witness
                .validate()
                .map_err(|source| HarnessError::InvalidWitness {
                    i: i + 1,
                    j: j + 1,
                    source,
                })?;
            return Ok(GoodPairReport {
                i: i + 1,
                j: j + 1,
                method,
                witness,
                prefix_length_scanned: j + 1,
            });
        }
    }
    Err(HarnessError::Exhausted {
        scanned: stream.len(),
    })
}

/// Greedy antichain over graphic sequences with entries `<= bound` and length
/// `<= max_length`, in enumeration order: a candidate is kept when the
/// oracle finds it incomparable with everything kept so far.
///
/// `(1,1)` comes first and is below every graphic sequence, so this always
/// returns `[(1,1)]`; use [`mine_antichain_between`] to skip short sequences.
pub fn mine_antichain(
    bound: u32,
    max_length: usize,
    limits: &SearchLimits,
) -> Result<Vec<IntegerSequence>, HarnessError> {
    mine_antichain_between(bound, 1, max_length, limits)
}

/// [`mine_antichain`] restricted to lengths `min_length..=max_length`.
pub fn mine_antichain_between(
    bound: u32,
    min_length: usize,
    max_length: usize,
    limits: &SearchLimits,
) -> Result<Vec<IntegerSequence>, HarnessError> {
    if max_length > limits.oracle_cap {
        return Err(HarnessError::BeyondOracle {
            max_length,
            cap: limits.oracle_cap,
        });
    }
    if bound < 1 {
        return Err(HarnessError::InvalidConfig("N must be at least 1".into()));
    }
    let candidates: Vec<IntegerSequence> = graphic_sequences(bound, max_length)
        .into_iter()
        .filter(|s| s.len() >= min_length)
        .collect();
    mine_antichain_among(&candidates, limits)
}

/// Greedy antichain over `candidates` in the given order.
pub fn mine_antichain_among(
    candidates: &[IntegerSequence],
    limits: &SearchLimits,
) -> Result<Vec<IntegerSequence>, HarnessError> {
    let candidates: Vec<Prepared> = candidates.iter().cloned().map(Prepared::new).collect();
    let cap = limits.oracle_cap;
    let leq = |a: &Prepared, b: &Prepared| -> Result<bool, OrderError> {
        if a.seq.len() > b.seq.len() {
            return Ok(false);
        }
        Ok(b.host(cap)?
            .find(&a.seq, crate::exec::Strategy::Sequential)?
            .is_some())
    };
    let mut chosen: Vec<&Prepared> = Vec::new();
    for c in &candidates {
        let failure: OnceLock<OrderError> = OnceLock::new();
        let comparable = limits.strategy.any(&chosen, |a| {
            match leq(a, c).and_then(|x| Ok(x || leq(c, a)?)) {
                Ok(x) => x,
                Err(e) => {
                    let _ = failure.set(e);
                    true
                }
            }
        });
        if let Some(e) = failure.into_inner() {
            return Err(e.into());
        }
        if !comparable {
            chosen.push(c);
        }
    }
    Ok(chosen.into_iter().map(|p| p.seq.clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exec::Strategy;
    use crate::rao_order::rao_leq_oracle;
    use crate::sequence::parse_sequence;

    fn seq(v: &[i64]) -> IntegerSequence {
        parse_sequence(v).unwrap()
    }

    fn cfg(bound: u32, max_length: usize, generator: Generator) -> StreamConfig {
        StreamConfig {
            bound,
            max_length,
            seed: 7,
            count: 50,
            generator,
        }
    }

    #[test]
    fn enumerate_examples() {
        let s = generate_stream(&cfg(1, 4, Generator::Enumerate)).unwrap();
        assert_eq!(s, vec![seq(&[1, 1]), seq(&[1, 1, 1, 1])]);
        let s = generate_stream(&cfg(2, 3, Generator::Enumerate)).unwrap();
        for expected in [seq(&[1, 1]), seq(&[2, 1, 1]), seq(&[2, 2, 2])] {
            assert!(s.contains(&expected));
        }
    }

    #[test]
    fn invalid_configs() {
        assert_eq!(
            generate_stream(&cfg(1, 1, Generator::Random)),
            Err(HarnessError::NoGraphicSequence {
                bound: 1,
                max_length: 1
            })
        );
        assert!(matches!(
            generate_stream(&cfg(0, 4, Generator::Random)),
            Err(HarnessError::InvalidConfig(_))
        ));
        let mut c = cfg(2, 4, Generator::Random);
        c.count = 1;
        assert!(matches!(
            generate_stream(&c),
            Err(HarnessError::InvalidConfig(_))
        ));
    }

    #[test]
    fn random_stream_is_seeded_and_bounded() {
        let c = cfg(3, 8, Generator::Random);
        let a = generate_stream(&c).unwrap();
        assert_eq!(a, generate_stream(&c).unwrap());
        assert_eq!(a.len(), 50);
        for s in &a {
            assert!(s.max_degree() <= 3 && s.len() <= 8 && is_graphic(s));
        }
        let mut other = c.clone();
        other.seed = 8;
        assert_ne!(a, generate_stream(&other).unwrap());
    }

    #[test]
    fn good_pair_examples() {
        let limits = SearchLimits::default();
        let r = find_good_pair(&[seq(&[1, 1]), seq(&[1, 1]), seq(&[1, 1])], 1, &limits).unwrap();
        assert_eq!((r.i, r.j, r.method), (1, 2, Method::Sufficient));

        // (2,2,2) <= (2,2,2,2,2) fails: the leftover counts give (2,2), which
        // is not graphic, and C5 (the only realization) has no triangle.
        // (1,1) is an induced edge of C5.
        let stream = [seq(&[2, 2, 2]), seq(&[1, 1]), seq(&[2, 2, 2, 2, 2])];
        let r = find_good_pair(&stream, 2, &limits).unwrap();
        assert_eq!((r.i, r.j, r.method), (2, 3, Method::Components));
        assert_eq!(
            rao_leq_oracle(&stream[0], &stream[2], &limits).unwrap(),
            None
        );
        assert_eq!(r.prefix_length_scanned, 3);
        r.witness.validate().unwrap();

        // K4 and C4 are incomparable; the duplicate C4 is the first good pair
        let stream = [seq(&[3, 3, 3, 3]), seq(&[2, 2, 2, 2]), seq(&[2, 2, 2, 2])];
        let r = find_good_pair(&stream, 3, &limits).unwrap();
        assert_eq!((r.i, r.j), (2, 3));
    }

    #[test]
    fn good_pair_errors() {
        let limits = SearchLimits::default();
        // (2,2,2) vs (2,2,2,2): incomparable, and nothing else
        assert_eq!(
            find_good_pair(&[seq(&[2, 2, 2]), seq(&[2, 2, 2, 2])], 2, &limits),
            Err(HarnessError::Exhausted { scanned: 2 })
        );
        assert!(matches!(
            find_good_pair(&[seq(&[3, 3, 3, 3]), seq(&[1, 1])], 2, &limits),
            Err(HarnessError::OutOfBounds { index: 1, .. })
        ));
        assert!(matches!(
            find_good_pair(&[seq(&[1, 1, 1])], 2, &limits),
            Err(HarnessError::OutOfBounds { index: 1, .. })
        ));
    }

    #[test]
    fn later_methods_are_tried() {
        // The star K_{1,3} contains an induced P3, but the count vectors
        // (0,1,2) and (1,0,3) are incomparable.
        let limits = SearchLimits::default();
        let r = find_good_pair(&[seq(&[2, 1, 1]), seq(&[3, 1, 1, 1])], 3, &limits).unwrap();
        r.witness.validate().unwrap();
        assert_eq!(r.method, Method::Components);
    }

    #[test]
    fn strategies_report_the_same_pair() {
        let c = StreamConfig {
            bound: 3,
            max_length: 8,
            seed: 11,
            count: 60,
            generator: Generator::Random,
        };
        let stream = generate_stream(&c).unwrap();
        let seq_limits = SearchLimits {
            strategy: Strategy::Sequential,
            ..SearchLimits::default()
        };
        let par_limits = SearchLimits {
            strategy: Strategy::Parallel,
            ..SearchLimits::default()
        };
        assert_eq!(
            find_good_pair(&stream, 3, &seq_limits).unwrap(),
            find_good_pair(&stream, 3, &par_limits).unwrap()
        );
    }

    #[test]
    fn antichain_for_n1_is_a_singleton() {
        let limits = SearchLimits::default();
        assert_eq!(mine_antichain(1, 2, &limits).unwrap(), vec![seq(&[1, 1])]);
        assert_eq!(mine_antichain(1, 8, &limits).unwrap(), vec![seq(&[1, 1])]);
    }

    #[test]
    fn antichain_is_pairwise_incomparable() {
        let limits = SearchLimits::default();
        // (1,1) is an induced edge of every realization of everything else
        assert_eq!(mine_antichain(2, 6, &limits).unwrap(), vec![seq(&[1, 1])]);

        // Among length-4 sequences: K_{1,3}, P4, C4, paw, diamond, K4 and
        // the matching. Equal lengths are comparable only when equal, so the
        // whole candidate list survives.
        let len4 = mine_antichain_between(3, 4, 4, &limits).unwrap();
        assert_eq!(
            len4,
            graphic_sequences(3, 4)
                .into_iter()
                .filter(|s| s.len() == 4)
                .collect::<Vec<_>>()
        );
        assert_eq!(len4.len(), 7);

        let chain = mine_antichain_between(2, 3, 6, &limits).unwrap();
        // P3 and K3 survive; C4 contains an induced P3 and is dropped
        assert_eq!(
            &chain[..3],
            &[seq(&[2, 1, 1]), seq(&[2, 2, 2]), seq(&[1, 1, 1, 1])]
        );
        assert!(!chain.contains(&seq(&[2, 2, 2, 2])));
        for family in [&chain, &len4] {
            for a in family.iter() {
                for b in family.iter() {
                    if a != b {
                        assert_eq!(rao_leq_oracle(a, b, &limits).unwrap(), None, "{a} <= {b}");
                    }
                }
            }
        }
        assert_eq!(
            mine_antichain(2, 9, &limits),
            Err(HarnessError::BeyondOracle {
                max_length: 9,
                cap: 8
            })
        );
    }

    #[test]
    fn report_json_shape() {
        let r = find_good_pair(&[seq(&[1, 1]), seq(&[1, 1])], 1, &SearchLimits::default()).unwrap();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["i"], 1);
        assert_eq!(v["j"], 2);
        assert_eq!(v["method"], "sufficient");
        assert_eq!(v["prefix_length_scanned"], 2);
        assert_eq!(v["witness"]["embedding"], serde_json::json!([0, 1]));
    }
}
