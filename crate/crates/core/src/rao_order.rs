//! The induced-subgraph order on graphic sequences.
//!
//! `D1 <= D2` holds when some realization of `D1` is an induced subgraph of
//! some realization of `D2`. Three procedures are provided:
//!
//! * [`rao_leq_oracle`] decides the order exactly by enumerating every labeled
//!   realization of `D2` (small instances only).
//! * [`rao_leq_sufficient`] compares degree-count vectors pointwise and, when
//!   the leftover counts form a graphic sequence `E`, returns
//!   `realize(D1) + realize(E)` as the host.
//! * [`rao_leq_via_components`] realizes both sequences with bounded
//!   components and matches components of the smaller graph to distinct
//!   components of the larger one.
//!
//! The two sufficient tests only ever answer "holds" or "inconclusive": a
//! `None` from them says nothing about whether the order holds.

use std::collections::HashMap;
use std::sync::OnceLock;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::canonical_form;
use crate::enumerate::{labeled_realizations, rows_to_graph, BitRows, MAX_ENUMERATION_VERTICES};
use crate::exec::Strategy;
use crate::graph::{AdjMatrix, SimpleGraph};
use crate::matching::max_bipartite_matching;
use crate::realization::{
    component_vertex_sets, degree_sequence, disjoint_union, realize, realize_bounded_with,
    RealizationError,
};
use crate::sequence::{
    erdos_gallai_check, from_regularity, leq_pointwise, to_regularity, IntegerSequence,
    SequenceError,
};

/// Default vertex cap for [`rao_leq_oracle`].
pub const DEFAULT_ORACLE_CAP: usize = 8;
/// Default host-size cap for [`is_induced_subgraph`]; equals the component
/// bound `3 N^2` at `N = 3`.
pub const DEFAULT_INDUCED_CAP: usize = 27;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Largest `|D2|` the exhaustive oracle accepts.
    pub oracle_cap: usize,
    /// Largest host graph the induced-subgraph backtracking accepts.
    pub induced_cap: usize,
    pub strategy: Strategy,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            oracle_cap: DEFAULT_ORACLE_CAP,
            induced_cap: DEFAULT_INDUCED_CAP,
            strategy: Strategy::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("{0} is not graphic")]
    NotGraphic(IntegerSequence),
    #[error("oracle limited to {cap} vertices, got {len}")]
    OracleCapExceeded { len: usize, cap: usize },
    #[error("induced-subgraph search limited to hosts of {cap} vertices, got {host}")]
    InducedCapExceeded { host: usize, cap: usize },
    #[error(transparent)]
    Sequence(#[from] SequenceError),
}

impl From<RealizationError> for OrderError {
    fn from(e: RealizationError) -> Self {
        match e {
            RealizationError::NotGraphic { sequence, .. } => OrderError::NotGraphic(sequence),
            RealizationError::TooShortToChunk { .. } => {
                unreachable!("bounded realization handles short input")
            }
        }
    }
}

fn require_graphic(seq: &IntegerSequence) -> Result<(), OrderError> {
    if erdos_gallai_check(seq).graphic {
        Ok(())
    } else {
        Err(OrderError::NotGraphic(seq.clone()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("small graph has degree sequence {found:?}, expected {expected}")]
    SmallDegrees {
        expected: IntegerSequence,
        found: Vec<usize>,
    },
    #[error("large graph has degree sequence {found:?}, expected {expected}")]
    LargeDegrees {
        expected: IntegerSequence,
        found: Vec<usize>,
    },
    #[error("embedding has {found} entries for {expected} vertices")]
    EmbeddingLength { expected: usize, found: usize },
    #[error("embedding target {0} is not a vertex of the large graph")]
    OutOfRange(usize),
    #[error("embedding sends two vertices to {0}")]
    NotInjective(usize),
    #[error("adjacency of {0} and {1} is not preserved")]
    NotInduced(usize, usize),
}

/// Certificate that `d1 <= d2`: realizations of both and an induced embedding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RaoWitness {
    pub d1: IntegerSequence,
    pub d2: IntegerSequence,
    pub g_small: SimpleGraph,
    pub g_large: SimpleGraph,
    /// `embedding[v]` is the vertex of `g_large` that vertex `v` of `g_small` maps to.
    pub embedding: Vec<usize>,
}

impl RaoWitness {
    /// Rechecks both degree sequences and that the embedding is injective and
    /// preserves adjacency and non-adjacency.
    pub fn validate(&self) -> Result<(), WitnessError> {
        let small = degree_sequence(&self.g_small);
        if !same_degrees(&small, &self.d1) {
            return Err(WitnessError::SmallDegrees {
                expected: self.d1.clone(),
                found: small,
            });
        }
        let large = degree_sequence(&self.g_large);
        if !same_degrees(&large, &self.d2) {
            return Err(WitnessError::LargeDegrees {
                expected: self.d2.clone(),
                found: large,
            });
        }
        check_induced_embedding(&self.g_small, &self.g_large, &self.embedding)
    }

    /// Chains `self: A <= B` with `next: B <= C` when both use the same graph
    /// for `B`.
    pub fn then(&self, next: &RaoWitness) -> Option<RaoWitness> {
        if self.g_large != next.g_small {
            return None;
        }
        Some(RaoWitness {
            d1: self.d1.clone(),
            d2: next.d2.clone(),
            g_small: self.g_small.clone(),
            g_large: next.g_large.clone(),
            embedding: self.embedding.iter().map(|&v| next.embedding[v]).collect(),
        })
    }
}

fn same_degrees(degrees: &[usize], seq: &IntegerSequence) -> bool {
    degrees.len() == seq.len()
        && degrees
            .iter()
            .zip(seq.entries())
            .all(|(&a, &b)| a == b as usize)
}

/// Checks that `embedding` is an injective map from `small` into `large`
/// preserving both adjacency and non-adjacency.
pub fn check_induced_embedding(
    small: &SimpleGraph,
    large: &SimpleGraph,
    embedding: &[usize],
) -> Result<(), WitnessError> {
    if embedding.len() != small.vertex_count() {
        return Err(WitnessError::EmbeddingLength {
            expected: small.vertex_count(),
            found: embedding.len(),
        });
    }
    let mut used = vec![false; large.vertex_count()];
    for &t in embedding {
        if t >= large.vertex_count() {
            return Err(WitnessError::OutOfRange(t));
        }
        if std::mem::replace(&mut used[t], true) {
            return Err(WitnessError::NotInjective(t));
        }
    }
    for u in 0..small.vertex_count() {
        for v in u + 1..small.vertex_count() {
            if small.has_edge(u, v) != large.has_edge(embedding[u], embedding[v]) {
                return Err(WitnessError::NotInduced(u, v));
            }
        }
    }
    Ok(())
}

/// Backtracking search for an induced copy of `pattern` in `host`.
///
/// Returns `embedding[v]` = host vertex for each pattern vertex, or `None`.
/// Fails when `host` has more than `cap` vertices.
pub fn is_induced_subgraph(
    pattern: &SimpleGraph,
    host: &SimpleGraph,
    cap: usize,
) -> Result<Option<Vec<usize>>, OrderError> {
    if host.vertex_count() > cap {
        return Err(OrderError::InducedCapExceeded {
            host: host.vertex_count(),
            cap,
        });
    }
    Ok(find_induced(pattern, host))
}

fn find_induced(pattern: &SimpleGraph, host: &SimpleGraph) -> Option<Vec<usize>> {
    let (np, nh) = (pattern.vertex_count(), host.vertex_count());
    if np > nh || pattern.edge_count() > host.edge_count() {
        return None;
    }
    // The k-th largest pattern degree cannot exceed the k-th largest host degree.
    let (dp, dh) = (degree_sequence(pattern), degree_sequence(host));
    if dp.iter().zip(&dh).any(|(a, b)| a > b) {
        return None;
    }
    let order = search_order(pattern);
    let pa = AdjMatrix::new(pattern);
    let ha = AdjMatrix::new(host);
    let mut state = InducedSearch {
        pattern,
        host,
        pa: &pa,
        ha: &ha,
        order: &order,
        image: vec![usize::MAX; np],
        used: vec![false; nh],
    };
    state.extend(0).then_some(state.image)
}

/// Each next vertex has the most already-placed neighbors (ties: higher
/// degree, then lower index).
fn search_order(g: &SimpleGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by(|&a, &b| {
                (links[a], g.degree(a))
                    .cmp(&(links[b], g.degree(b)))
                    .then(b.cmp(&a))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
        for &u in g.neighbors(next) {
            links[u] += 1;
        }
    }
    order
}

struct InducedSearch<'a> {
    pattern: &'a SimpleGraph,
    host: &'a SimpleGraph,
    pa: &'a AdjMatrix,
    ha: &'a AdjMatrix,
    order: &'a [usize],
    image: Vec<usize>,
    used: Vec<bool>,
}

impl InducedSearch<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let x = self.order[depth];
        for y in 0..self.host.vertex_count() {
            if self.used[y] || self.host.degree(y) < self.pattern.degree(x) {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&p| self.pa.get(x, p) == self.ha.get(y, self.image[p]));
            if !consistent {
                continue;
            }
            self.image[x] = y;
            self.used[y] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[y] = false;
            self.image[x] = usize::MAX;
        }
        false
    }
}

/// Every labeled realization of one sequence, enumerated once and searched
/// for induced subgraphs with various degree sequences.
#[derive(Debug, Clone)]
pub struct OracleHost {
    seq: IntegerSequence,
    realizations: Vec<BitRows>,
}

impl OracleHost {
    pub fn new(seq: &IntegerSequence, cap: usize) -> Result<Self, OrderError> {
        let cap = cap.min(MAX_ENUMERATION_VERTICES);
        if seq.len() > cap {
            return Err(OrderError::OracleCapExceeded {
                len: seq.len(),
                cap,
            });
        }
        require_graphic(seq)?;
        Ok(OracleHost {
            seq: seq.clone(),
            realizations: labeled_realizations(seq.entries()),
        })
    }

    pub fn sequence(&self) -> &IntegerSequence {
        &self.seq
    }

    pub fn realization_count(&self) -> usize {
        self.realizations.len()
    }

    /// First witness in enumeration order: realizations in lexicographic
    /// order, then vertex subsets in lexicographic order.
    pub fn find(
        &self,
        small: &IntegerSequence,
        strategy: Strategy,
    ) -> Result<Option<RaoWitness>, OrderError> {
        require_graphic(small)?;
        let k = small.len();
        if k > self.seq.len() {
            return Ok(None);
        }
        let target: Vec<u32> = small.entries().to_vec();
        let hit = strategy.find_map_first(&self.realizations, |_, rows| {
            induced_with_degrees(rows, &target).map(|subset| (rows.clone(), subset))
        });
        Ok(hit.map(|(rows, subset)| {
            let g_large = rows_to_graph(&rows);
            RaoWitness {
                d1: small.clone(),
                d2: self.seq.clone(),
                g_small: g_large.induced(&subset),
                g_large,
                embedding: subset,
            }
        }))
    }
}

fn induced_with_degrees(rows: &[u64], target: &[u32]) -> Option<Vec<usize>> {
    let n = rows.len();
    let k = target.len();
    let mut degs = vec![0u32; k];
    (0..n).combinations(k).find(|subset| {
        let mask = subset.iter().fold(0u64, |m, &v| m | 1 << v);
        for (slot, &v) in degs.iter_mut().zip(subset) {
            *slot = (rows[v] & mask).count_ones();
        }
        degs.sort_unstable_by(|a, b| b.cmp(a));
        degs == target
    })
}

/// Exact decision by exhaustive search over all labeled realizations of `d2`.
pub fn rao_leq_oracle(
    d1: &IntegerSequence,
    d2: &IntegerSequence,
    limits: &SearchLimits,
) -> Result<Option<RaoWitness>, OrderError> {
    require_graphic(d1)?;
    OracleHost::new(d2, limits.oracle_cap)?.find(d1, limits.strategy)
}

/// Degree-count test: if `V(d1) <=_H V(d2)` and the difference `V(d2) - V(d1)`
/// expands to a graphic sequence `E` (or is zero), the disjoint union
/// `realize(d1) + realize(E)` realizes `d2` and contains `realize(d1)` as
/// an induced subgraph.
pub fn rao_leq_sufficient(
    d1: &IntegerSequence,
    d2: &IntegerSequence,
    bound: u32,
) -> Result<Option<RaoWitness>, OrderError> {
    require_graphic(d1)?;
    require_graphic(d2)?;
    let v1 = to_regularity(d1, bound)?;
    let v2 = to_regularity(d2, bound)?;
    if !leq_pointwise(&v1, &v2)? {
        return Ok(None);
    }
    let small = realize(d1)?;
    let diff = v2.checked_sub(&v1).expect("pointwise comparable");
    let g_large = if diff.is_zero() {
        small.clone()
    } else {
        let rest = from_regularity(&diff)?;
        if !erdos_gallai_check(&rest).graphic {
            return Ok(None);
        }
        disjoint_union(&small, &realize(&rest)?)
    };
    Ok(Some(RaoWitness {
        d1: d1.clone(),
        d2: d2.clone(),
        embedding: (0..small.vertex_count()).collect(),
        g_small: small,
        g_large,
    }))
}

/// One connected component in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPart {
    pub graph: SimpleGraph,
    /// `vertices[c]` is the source-graph vertex at canonical position `c`.
    pub vertices: Vec<usize>,
}

/// Connected components of a graph, canonically labeled and sorted by
/// vertex count, then canonical edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDecomposition {
    pub parts: Vec<ComponentPart>,
}

impl ComponentDecomposition {
    pub fn of(graph: &SimpleGraph) -> Self {
        let mut parts: Vec<ComponentPart> = component_vertex_sets(graph)
            .into_iter()
            .map(|members| {
                let cf = canonical_form(&graph.induced(&members));
                ComponentPart {
                    graph: cf.graph,
                    vertices: cf.labeling.iter().map(|&c| members[c]).collect(),
                }
            })
            .collect();
        parts.sort_by(|a, b| {
            (a.graph.vertex_count(), a.graph.edges().collect::<Vec<_>>())
                .cmp(&(b.graph.vertex_count(), b.graph.edges().collect::<Vec<_>>()))
        });
        ComponentDecomposition { parts }
    }

    /// Decomposition of arbitrary graphs given as parts; each must be connected.
    pub fn from_parts(graphs: &[SimpleGraph]) -> Self {
        let mut all = SimpleGraph::new(0);
        for g in graphs {
            assert_eq!(component_vertex_sets(g).len(), 1, "parts must be connected");
            all = disjoint_union(&all, g);
        }
        ComponentDecomposition::of(&all)
    }
}

/// Base order on components for [`higman_embeds`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BaseOrder {
    /// Components must be isomorphic.
    Equality,
    /// A component must be an induced subgraph of its image.
    Induced,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Oversize {
    Fail,
    Unrelated,
}

/// Part `small` of the first decomposition goes to part `large` of the
/// second; `local[c]` is the canonical vertex of the image hit by canonical
/// vertex `c`.
struct PartMatch {
    small: usize,
    large: usize,
    local: Vec<usize>,
}

/// True iff every part of `c1` can be sent to a distinct part of `c2` that
/// dominates it in `base`. Solved as a maximum bipartite matching.
pub fn higman_embeds(
    c1: &ComponentDecomposition,
    c2: &ComponentDecomposition,
    base: BaseOrder,
    induced_cap: usize,
) -> Result<bool, OrderError> {
    Ok(match_parts(c1, c2, base, induced_cap, Oversize::Fail)?.is_some())
}

fn match_parts(
    c1: &ComponentDecomposition,
    c2: &ComponentDecomposition,
    base: BaseOrder,
    induced_cap: usize,
    oversize: Oversize,
) -> Result<Option<Vec<PartMatch>>, OrderError> {
    if c1.parts.len() > c2.parts.len() {
        return Ok(None);
    }
    // Identical canonical graphs share one relation row/column.
    let class_of = |parts: &[ComponentPart]| -> (Vec<usize>, Vec<usize>) {
        let mut reps: Vec<usize> = Vec::new();
        let mut ids = Vec::with_capacity(parts.len());
        for (i, p) in parts.iter().enumerate() {
            match reps.iter().position(|&r| parts[r].graph == p.graph) {
                Some(id) => ids.push(id),
                None => {
                    ids.push(reps.len());
                    reps.push(i);
                }
            }
        }
        (reps, ids)
    };
    let (reps1, ids1) = class_of(&c1.parts);
    let (reps2, ids2) = class_of(&c2.parts);

    let mut relation: HashMap<(usize, usize), Option<Vec<usize>>> = HashMap::new();
    for (a, &r1) in reps1.iter().enumerate() {
        for (b, &r2) in reps2.iter().enumerate() {
            let small = &c1.parts[r1].graph;
            let large = &c2.parts[r2].graph;
            let local = if small == large {
                Some((0..small.vertex_count()).collect())
            } else {
                match base {
                    BaseOrder::Equality => None,
                    BaseOrder::Induced => match is_induced_subgraph(small, large, induced_cap) {
                        Ok(found) => found,
                        Err(_) if oversize == Oversize::Unrelated => None,
                        Err(e) => return Err(e),
                    },
                }
            };
            relation.insert((a, b), local);
        }
    }

    let adj: Vec<Vec<usize>> = ids1
        .iter()
        .map(|&a| {
            (0..c2.parts.len())
                .filter(|&j| relation[&(a, ids2[j])].is_some())
                .collect()
        })
        .collect();
    let assignment = max_bipartite_matching(&adj, c2.parts.len());
    if assignment.iter().any(Option::is_none) {
        return Ok(None);
    }
    Ok(Some(
        assignment
            .into_iter()
            .enumerate()
            .map(|(i, j)| {
                let j = j.unwrap();
                PartMatch {
                    small: i,
                    large: j,
                    local: relation[&(ids1[i], ids2[j])].clone().unwrap(),
                }
            })
            .collect(),
    ))
}

/// Realizes both sequences with bounded components and matches components
/// under the induced-subgraph base order. Since the image is a union of
/// induced subgraphs of distinct components, it is induced in the host.
///
/// Component pairs too large for the induced search count as unrelated, so
/// this only ever makes the answer more conservative.
pub fn rao_leq_via_components(
    d1: &IntegerSequence,
    d2: &IntegerSequence,
    limits: &SearchLimits,
) -> Result<Option<RaoWitness>, OrderError> {
    require_graphic(d1)?;
    require_graphic(d2)?;
    if d1.len() > d2.len() {
        return Ok(None);
    }
    let g1 = realize_bounded_with(d1, limits.strategy)?;
    let g2 = realize_bounded_with(d2, limits.strategy)?;
    let c1 = ComponentDecomposition::of(&g1);
    let c2 = ComponentDecomposition::of(&g2);
    Ok(components_witness(
        d1,
        d2,
        &g1,
        &g2,
        &c1,
        &c2,
        limits.induced_cap,
    ))
}

pub(crate) fn components_witness(
    d1: &IntegerSequence,
    d2: &IntegerSequence,
    g1: &SimpleGraph,
    g2: &SimpleGraph,
    c1: &ComponentDecomposition,
    c2: &ComponentDecomposition,
    induced_cap: usize,
) -> Option<RaoWitness> {
    let matches = match_parts(c1, c2, BaseOrder::Induced, induced_cap, Oversize::Unrelated)
        .expect("oversized pairs are treated as unrelated")?;
    let mut embedding = vec![usize::MAX; g1.vertex_count()];
    for m in &matches {
        let src = &c1.parts[m.small];
        let dst = &c2.parts[m.large];
        for (c, &target) in m.local.iter().enumerate() {
            embedding[src.vertices[c]] = dst.vertices[target];
        }
    }
    Some(RaoWitness {
        d1: d1.clone(),
        d2: d2.clone(),
        g_small: g1.clone(),
        g_large: g2.clone(),
        embedding,
    })
}

/// Precomputed data for repeatedly comparing one sequence against others.
#[derive(Debug)]
pub(crate) struct Prepared {
    pub seq: IntegerSequence,
    bounded: OnceLock<(SimpleGraph, ComponentDecomposition)>,
    host: OnceLock<Result<OracleHost, OrderError>>,
}

impl Prepared {
    pub(crate) fn new(seq: IntegerSequence) -> Self {
        Prepared {
            seq,
            bounded: OnceLock::new(),
            host: OnceLock::new(),
        }
    }

    pub(crate) fn bounded(&self) -> &(SimpleGraph, ComponentDecomposition) {
        self.bounded.get_or_init(|| {
            let g = realize_bounded_with(&self.seq, Strategy::Sequential)
                .expect("prepared sequences are graphic");
            let c = ComponentDecomposition::of(&g);
            (g, c)
        })
    }

    pub(crate) fn host(&self, cap: usize) -> Result<&OracleHost, OrderError> {
        self.host
            .get_or_init(|| OracleHost::new(&self.seq, cap))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub(crate) fn via_components(
        &self,
        large: &Prepared,
        induced_cap: usize,
    ) -> Option<RaoWitness> {
        if self.seq.len() > large.seq.len() {
            return None;
        }
        let (g1, c1) = self.bounded();
        let (g2, c2) = large.bounded();
        components_witness(&self.seq, &large.seq, g1, g2, c1, c2, induced_cap)
    }
}
