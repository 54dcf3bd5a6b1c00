//! Exhaustive enumeration of labeled realizations and of candidate sequences.

use itertools::Itertools;

use crate::graph::SimpleGraph;
use crate::sequence::{is_graphic, IntegerSequence};

/// Largest vertex count the bitset enumeration supports.
pub const MAX_ENUMERATION_VERTICES: usize = 64;

/// Adjacency rows of a labeled graph on at most 64 vertices.
pub(crate) type BitRows = Vec<u64>;

pub(crate) fn rows_to_graph(rows: &[u64]) -> SimpleGraph {
    let n = rows.len();
    let edges = (0..n).flat_map(|u| {
        (u + 1..n)
            .filter(move |&v| rows[u] >> v & 1 == 1)
            .map(move |v| (u, v))
    });
    SimpleGraph::from_edges(n, edges).expect("bit rows describe a simple graph")
}

/// Every simple graph on vertices `0..n` in which vertex `v` has degree
/// `degrees[v]`, in lexicographic order of each vertex's set of
/// higher-numbered neighbors (vertex 0 first).
pub(crate) fn labeled_realizations(degrees: &[u32]) -> Vec<BitRows> {
    let n = degrees.len();
    assert!(n <= MAX_ENUMERATION_VERTICES);
    let mut out = Vec::new();
    if degrees.iter().map(|&d| u64::from(d)).sum::<u64>() % 2 == 1 {
        return out;
    }
    let mut residual = degrees.to_vec();
    let mut rows = vec![0u64; n];
    extend(0, &mut residual, &mut rows, &mut out);
    out
}

fn extend(i: usize, residual: &mut [u32], rows: &mut [u64], out: &mut Vec<BitRows>) {
    let n = residual.len();
    if i == n {
        out.push(rows.to_vec());
        return;
    }
    let need = residual[i] as usize;
    let open: Vec<usize> = (i + 1..n).filter(|&j| residual[j] > 0).collect();
    if need > open.len() {
        return;
    }
    for partners in open.into_iter().combinations(need) {
        for &j in &partners {
            rows[i] |= 1 << j;
            rows[j] |= 1 << i;
            residual[j] -= 1;
        }
        residual[i] = 0;
        // every unprocessed vertex can still meet at most the other unprocessed ones
        if (i + 1..n).all(|j| residual[j] as usize + i + 2 <= n) {
            extend(i + 1, residual, rows, out);
        }
        residual[i] = need as u32;
        for &j in &partners {
            rows[i] &= !(1 << j);
            rows[j] &= !(1 << i);
            residual[j] += 1;
        }
    }
}

/// Nonincreasing sequences of exactly `len` entries in `1..=max_entry`,
/// ascending lexicographically.
pub fn nonincreasing_sequences(len: usize, max_entry: u32) -> Vec<IntegerSequence> {
    fn rec(len: usize, cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<IntegerSequence>) {
        if prefix.len() == len {
            out.push(IntegerSequence::from_sorted_unchecked(prefix.clone()));
            return;
        }
        for d in 1..=cap {
            prefix.push(d);
            rec(len, d, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if len > 0 && max_entry > 0 {
        rec(len, max_entry, &mut Vec::with_capacity(len), &mut out);
    }
    out
}

/// Graphic sequences with entries `<= bound` and length `<= max_length`,
/// shortest first, then ascending lexicographically.
pub fn graphic_sequences(bound: u32, max_length: usize) -> Vec<IntegerSequence> {
    (1..=max_length)
        .flat_map(|len| nonincreasing_sequences(len, bound))
        .filter(is_graphic)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realization::degree_sequence;

    #[test]
    fn counts_of_known_realizations() {
        // labeled perfect matchings on 4 vertices
        assert_eq!(labeled_realizations(&[1, 1, 1, 1]).len(), 3);
        // C4 is the only 2-regular graph on 4 vertices: 3 labelings
        assert_eq!(labeled_realizations(&[2, 2, 2, 2]).len(), 3);
        // labeled 2-regular graphs on 6 vertices: 60 hexagons + 10 triangle pairs
        assert_eq!(labeled_realizations(&[2; 6]).len(), 70);
        assert_eq!(labeled_realizations(&[3, 3, 3, 3]).len(), 1);
        assert!(labeled_realizations(&[3, 3, 1, 1]).is_empty());
        assert!(labeled_realizations(&[1, 1, 1]).is_empty());
    }

    #[test]
    fn realizations_have_requested_degrees_and_are_distinct() {
        let degrees = [3, 2, 2, 2, 2, 1];
        let all = labeled_realizations(&degrees);
        assert!(!all.is_empty());
        for rows in &all {
            let g = rows_to_graph(rows);
            for (v, &d) in degrees.iter().enumerate() {
                assert_eq!(g.degree(v), d as usize);
            }
        }
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), all.len());
    }

    #[test]
    fn matches_brute_force_count() {
        // Count graphs on 5 labeled vertices with degrees (2,2,2,1,1) directly.
        let target = [2usize, 2, 2, 1, 1];
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
            .collect();
        let brute = (0u32..1 << pairs.len())
            .filter(|mask| {
                let mut deg = [0usize; 5];
                for (k, &(u, v)) in pairs.iter().enumerate() {
                    if mask >> k & 1 == 1 {
                        deg[u] += 1;
                        deg[v] += 1;
                    }
                }
                deg == target
            })
            .count();
        assert_eq!(labeled_realizations(&[2, 2, 2, 1, 1]).len(), brute);
        let g = rows_to_graph(&labeled_realizations(&[2, 2, 2, 1, 1])[0]);
        assert_eq!(degree_sequence(&g), vec![2, 2, 2, 1, 1]);
    }

    #[test]
    fn sequence_enumeration_order() {
        let seqs: Vec<String> = nonincreasing_sequences(2, 2)
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(seqs, vec!["(1,1)", "(2,1)", "(2,2)"]);
        let g: Vec<String> = graphic_sequences(1, 4)
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(g, vec!["(1,1)", "(1,1,1,1)"]);
        let g: Vec<String> = graphic_sequences(2, 3)
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(g, vec!["(1,1)", "(2,1,1)", "(2,2,2)"]);
    }
}
