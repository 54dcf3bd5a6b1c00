//! Realizing graphic sequences as simple graphs, including realizations whose
//! connected components have at most `3 * d1^2` vertices.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exec::Strategy;
use crate::graph::SimpleGraph;
use crate::sequence::{erdos_gallai_check, GraphicalityVerdict, IntegerSequence};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizationError {
    #[error("{sequence} is not graphic")]
    NotGraphic {
        sequence: IntegerSequence,
        verdict: GraphicalityVerdict,
    },
    #[error("{len} entries is fewer than the chunk length {chunk_length}; realize directly")]
    TooShortToChunk { len: usize, chunk_length: u64 },
}

fn require_graphic(seq: &IntegerSequence) -> Result<(), RealizationError> {
    let verdict = erdos_gallai_check(seq);
    if verdict.graphic {
        Ok(())
    } else {
        Err(RealizationError::NotGraphic {
            sequence: seq.clone(),
            verdict,
        })
    }
}

/// Realizes a graphic sequence by repeatedly joining the vertex of highest
/// residual degree to the next-highest ones (ties by lowest index).
///
/// Vertex `v` of the result has degree `seq.entries()[v]`.
pub fn realize(seq: &IntegerSequence) -> Result<SimpleGraph, RealizationError> {
    require_graphic(seq)?;
    let n = seq.len();
    let mut graph = SimpleGraph::new(n);
    let mut residual: Vec<(u32, usize)> = seq.entries().iter().copied().zip(0..n).collect();
    loop {
        residual.retain(|&(d, _)| d > 0);
        if residual.is_empty() {
            break;
        }
        residual.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let (d, v) = residual[0];
        let d = d as usize;
        if d >= residual.len() {
            unreachable!("graphic sequence ran out of partners");
        }
        for entry in &mut residual[1..=d] {
            graph
                .add_edge(v, entry.1)
                .expect("reduction never repeats an edge");
            entry.0 -= 1;
        }
        residual[0].0 = 0;
    }
    Ok(graph)
}

/// Chunking and pairing used by [`realize_bounded`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationPlan {
    /// `L = d1^2`.
    pub chunk_length: u64,
    /// Number of chunks, `q = n / L`.
    pub chunk_count: usize,
    /// `r = n mod L`; absorbed by the last chunk.
    pub remainder: usize,
    pub chunks: Vec<IntegerSequence>,
    /// Even-sum blocks; each is one chunk or two odd-sum chunks combined.
    pub paired_blocks: Vec<IntegerSequence>,
}

/// Splits `seq` into `q` chunks of length `L = d1^2` (the last one takes the
/// remainder too) and combines odd-sum chunks pairwise in ascending chunk order.
pub fn plan_bounded(seq: &IntegerSequence) -> Result<RealizationPlan, RealizationError> {
    require_graphic(seq)?;
    let d1 = u64::from(seq.max_degree());
    let chunk_length = d1 * d1;
    let n = seq.len();
    if (n as u64) < chunk_length {
        return Err(RealizationError::TooShortToChunk {
            len: n,
            chunk_length,
        });
    }
    let l = chunk_length as usize;
    let q = n / l;
    let r = n % l;
    let d = seq.entries();
    let chunks: Vec<IntegerSequence> = (0..q)
        .map(|i| {
            let end = if i + 1 == q { n } else { (i + 1) * l };
            IntegerSequence::from_sorted_unchecked(d[i * l..end].to_vec())
        })
        .collect();

    let mut paired_blocks = Vec::new();
    let mut pending_odd: Option<usize> = None;
    for (i, chunk) in chunks.iter().enumerate() {
        if chunk.has_even_sum() {
            paired_blocks.push((i, chunk.clone()));
            continue;
        }
        match pending_odd.take() {
            None => pending_odd = Some(i),
            Some(first) => paired_blocks.push((first, chunks[first].merged(chunk))),
        }
    }
    debug_assert!(pending_odd.is_none(), "odd-sum chunks come in pairs");
    // Blocks are placed at the index of their first chunk.
    paired_blocks.sort_by_key(|(first, _)| *first);

    Ok(RealizationPlan {
        chunk_length,
        chunk_count: q,
        remainder: r,
        chunks,
        paired_blocks: paired_blocks.into_iter().map(|(_, b)| b).collect(),
    })
}

/// Realization whose every connected component has at most `3 * d1^2`
/// vertices. Block `k` of the plan occupies a contiguous vertex range.
pub fn realize_bounded(seq: &IntegerSequence) -> Result<SimpleGraph, RealizationError> {
    realize_bounded_with(seq, Strategy::default())
}

pub fn realize_bounded_with(
    seq: &IntegerSequence,
    strategy: Strategy,
) -> Result<SimpleGraph, RealizationError> {
    let plan = match plan_bounded(seq) {
        Ok(plan) => plan,
        Err(RealizationError::TooShortToChunk { .. }) => return realize(seq),
        Err(e) => return Err(e),
    };
    let parts = strategy.map(&plan.paired_blocks, realize);
    let mut graph = SimpleGraph::new(0);
    for part in parts {
        graph = disjoint_union(&graph, &part?);
    }
    Ok(graph)
}

/// `left` followed by `right`, with `right`'s vertices shifted past `left`'s.
pub fn disjoint_union(left: &SimpleGraph, right: &SimpleGraph) -> SimpleGraph {
    let shift = left.vertex_count();
    let edges = left
        .edges()
        .chain(right.edges().map(|(u, v)| (u + shift, v + shift)));
    SimpleGraph::from_edges(shift + right.vertex_count(), edges).expect("disjoint union is simple")
}

/// Degrees sorted nonincreasing; isolated vertices show up as zeros.
pub fn degree_sequence(graph: &SimpleGraph) -> Vec<usize> {
    let mut degrees: Vec<usize> = (0..graph.vertex_count()).map(|v| graph.degree(v)).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    degrees
}

/// Vertex sets of the connected components, each sorted ascending, ordered
/// by smallest vertex.
pub fn component_vertex_sets(graph: &SimpleGraph) -> Vec<Vec<usize>> {
    let n = graph.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut members = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in graph.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    members.push(v);
                    queue.push_back(v);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// Connected components, each relabeled to `0..size` in ascending original order.
pub fn components(graph: &SimpleGraph) -> Vec<SimpleGraph> {
    component_vertex_sets(graph)
        .iter()
        .map(|vs| graph.induced(vs))
        .collect()
}

pub fn max_component_size(graph: &SimpleGraph) -> usize {
    component_vertex_sets(graph)
        .iter()
        .map(Vec::len)
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::{is_graphic, parse_sequence};
    use proptest::prelude::*;
    use proptest::strategy::Strategy;

    fn seq(v: &[i64]) -> IntegerSequence {
        parse_sequence(v).unwrap()
    }

    fn degrees_of(g: &SimpleGraph) -> Vec<u32> {
        degree_sequence(g).into_iter().map(|d| d as u32).collect()
    }

    #[test]
    fn realize_examples() {
        let p3 = realize(&seq(&[2, 1, 1])).unwrap();
        assert_eq!(p3.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2)]);
        assert_eq!(
            realize(&seq(&[3, 3, 3, 3])).unwrap(),
            SimpleGraph::complete(4)
        );
        let two_reg = realize(&seq(&[2; 6])).unwrap();
        assert_eq!(degrees_of(&two_reg), vec![2; 6]);
        assert!(matches!(
            realize(&seq(&[3, 1])),
            Err(RealizationError::NotGraphic { .. })
        ));
    }

    #[test]
    fn realize_keeps_vertex_order() {
        let s = seq(&[4, 3, 3, 2, 2, 2, 1, 1]);
        let g = realize(&s).unwrap();
        for (v, &d) in s.entries().iter().enumerate() {
            assert_eq!(g.degree(v), d as usize);
        }
    }

    #[test]
    fn bounded_twelve_twos() {
        let s = seq(&[2; 12]);
        let plan = plan_bounded(&s).unwrap();
        assert_eq!(plan.chunk_length, 4);
        assert_eq!(plan.chunk_count, 3);
        assert_eq!(plan.remainder, 0);
        assert!(plan.chunks.iter().all(|c| c.entries() == [2, 2, 2, 2]));
        assert_eq!(plan.paired_blocks, plan.chunks);

        let g = realize_bounded(&s).unwrap();
        let sizes: Vec<usize> = component_vertex_sets(&g).iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![4, 4, 4]);
        assert_eq!(degrees_of(&g), vec![2; 12]);
    }

    #[test]
    fn bounded_single_edge() {
        let s = seq(&[1, 1]);
        let plan = plan_bounded(&s).unwrap();
        assert_eq!(
            (plan.chunk_length, plan.chunk_count, plan.remainder),
            (1, 2, 0)
        );
        assert_eq!(plan.paired_blocks, vec![seq(&[1, 1])]);
        let g = realize_bounded(&s).unwrap();
        assert_eq!(g, SimpleGraph::complete(2));
    }

    #[test]
    fn odd_chunks_pair_in_order() {
        // L = 4. Chunks: (2,2,2,1) odd, (1,1,1,1) even, (1,1,1,1,1,1,1) odd
        // with r = 3 absorbed into the last chunk.
        let mut raw = vec![2, 2, 2];
        raw.extend([1; 12]);
        let s = seq(&raw);
        let plan = plan_bounded(&s).unwrap();
        assert_eq!(plan.chunk_count, 3);
        assert_eq!(plan.remainder, 3);
        assert_eq!(plan.chunks[2].len(), 7);
        let sums: Vec<u64> = plan.chunks.iter().map(|c| c.degree_sum()).collect();
        assert_eq!(sums, vec![7, 4, 7]);
        assert_eq!(plan.paired_blocks.len(), 2);
        assert_eq!(plan.paired_blocks[0].len(), 11);
        assert_eq!(plan.paired_blocks[0].entries()[..3], [2, 2, 2]);
        assert_eq!(plan.paired_blocks[1], seq(&[1; 4]));
    }

    #[test]
    fn two_odd_chunks_merge_into_double_length_block() {
        // L = 9, chunks (3^9) with sum 27 and (1^9) with sum 9: merged length 18 = 2L.
        let mut raw = vec![3; 9];
        raw.extend([1; 9]);
        let s = seq(&raw);
        let plan = plan_bounded(&s).unwrap();
        assert_eq!(plan.chunks.len(), 2);
        assert!(plan.chunks.iter().all(|c| !c.has_even_sum()));
        assert_eq!(plan.paired_blocks, vec![s.clone()]);
        assert_eq!(plan.paired_blocks[0].len(), 18);
        assert!(plan.paired_blocks[0].has_even_sum());
    }

    #[test]
    fn short_sequences_have_no_plan() {
        assert!(matches!(
            plan_bounded(&seq(&[3, 3, 3, 3])),
            Err(RealizationError::TooShortToChunk {
                len: 4,
                chunk_length: 9
            })
        ));
        assert!(matches!(
            plan_bounded(&seq(&[3, 1])),
            Err(RealizationError::NotGraphic { .. })
        ));
        let g = realize_bounded(&seq(&[3, 3, 3, 3])).unwrap();
        assert_eq!(g, SimpleGraph::complete(4));
    }

    #[test]
    fn disjoint_union_examples() {
        let k3 = SimpleGraph::complete(3);
        let u = disjoint_union(&k3, &k3);
        assert_eq!((u.vertex_count(), u.edge_count()), (6, 6));
        assert_eq!(degree_sequence(&u), vec![2; 6]);

        let with_isolated = disjoint_union(&k3, &SimpleGraph::new(1));
        assert_eq!(degree_sequence(&with_isolated), vec![2, 2, 2, 0]);

        let e = SimpleGraph::complete(2);
        assert_eq!(degree_sequence(&disjoint_union(&e, &e)), vec![1; 4]);
    }

    #[test]
    fn degree_sequence_examples() {
        assert_eq!(degree_sequence(&SimpleGraph::complete(4)), vec![3; 4]);
        assert_eq!(degree_sequence(&SimpleGraph::new(1)), vec![0]);
        assert_eq!(degree_sequence(&SimpleGraph::path(3)), vec![2, 1, 1]);
        assert!(IntegerSequence::from_degrees(&degree_sequence(&SimpleGraph::new(1))).is_err());
    }

    #[test]
    fn components_examples() {
        let k3 = SimpleGraph::complete(3);
        assert_eq!(
            components(&disjoint_union(&k3, &k3)),
            vec![k3.clone(), k3.clone()]
        );
        let c5 = SimpleGraph::cycle(5);
        assert_eq!(components(&c5), vec![c5.clone()]);
        assert_eq!(
            components(&SimpleGraph::new(3)),
            vec![SimpleGraph::new(1); 3]
        );
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let mut raw = vec![4; 40];
        raw.extend([3; 41]);
        raw.extend([1; 19]);
        let s = seq(&raw);
        assert!(is_graphic(&s));
        let a = realize_bounded_with(&s, crate::exec::Strategy::Sequential).unwrap();
        let b = realize_bounded_with(&s, crate::exec::Strategy::Parallel).unwrap();
        assert_eq!(a, b);
    }

    fn arb_graphic() -> impl Strategy<Value = IntegerSequence> {
        (1u32..=5, prop::collection::vec(1u32..=5, 1..120)).prop_filter_map(
            "graphic",
            |(cap, mut raw)| {
                for d in &mut raw {
                    *d = (*d).min(cap);
                }
                let s = IntegerSequence::try_from(raw).ok()?;
                is_graphic(&s).then_some(s)
            },
        )
    }

    proptest! {
        #[test]
        fn realizations_preserve_degrees(s in arb_graphic()) {
            let g = realize(&s).unwrap();
            prop_assert_eq!(degrees_of(&g), s.entries().to_vec());
            let b = realize_bounded(&s).unwrap();
            prop_assert_eq!(degrees_of(&b), s.entries().to_vec());
            let d1 = s.max_degree() as usize;
            prop_assert!(max_component_size(&b) <= 3 * d1 * d1);
        }

        #[test]
        fn plan_invariants(s in arb_graphic()) {
            let Ok(plan) = plan_bounded(&s) else { return Ok(()) };
            let l = plan.chunk_length as usize;
            let odd = plan.chunks.iter().filter(|c| !c.has_even_sum()).count();
            prop_assert_eq!(odd % 2, 0);
            let mut all: Vec<u32> = Vec::new();
            for block in &plan.paired_blocks {
                prop_assert!(block.has_even_sum());
                prop_assert!(block.len() >= l && block.len() <= 3 * l);
                prop_assert!(crate::sequence::sufficient_by_length(block));
                prop_assert!(is_graphic(block));
                all.extend_from_slice(block.entries());
            }
            all.sort_unstable_by(|a, b| b.cmp(a));
            prop_assert_eq!(all, s.entries().to_vec());
        }

        #[test]
        fn union_adds_degree_multisets(a in arb_graphic(), b in arb_graphic()) {
            let ga = realize(&a).unwrap();
            let gb = realize(&b).unwrap();
            let mut expected = degree_sequence(&ga);
            expected.extend(degree_sequence(&gb));
            expected.sort_unstable_by(|x, y| y.cmp(x));
            prop_assert_eq!(degree_sequence(&disjoint_union(&ga, &gb)), expected);
        }
    }
}
