//! Degree-sequence algorithms around the induced-subgraph order on graphic
//! sequences with bounded entries.
//!
//! * [`sequence`]: sequences, the Erdős–Gallai test, the `n >= d1^2`
//!   sufficiency bound and degree-count ("regularity") vectors.
//! * [`realization`]: realizations, including ones whose components have at
//!   most `3 * d1^2` vertices.
//! * [`rao_order`]: exact and sufficient tests for `D1 <= D2`, with
//!   checkable witnesses.
//! * [`wqo`]: good-pair search and antichain mining on finite streams.
//!
//! The `parallel` feature (on by default) runs the exhaustive searches on
//! rayon; results are identical to the sequential path.

pub mod canon;
pub mod enumerate;
pub mod exec;
pub mod graph;
pub mod matching;
pub mod rao_order;
pub mod realization;
pub mod sequence;
pub mod wqo;

pub use exec::Strategy;
pub use graph::{GraphError, SimpleGraph};
pub use rao_order::{
    higman_embeds, is_induced_subgraph, rao_leq_oracle, rao_leq_sufficient, rao_leq_via_components,
    BaseOrder, ComponentDecomposition, OrderError, RaoWitness, SearchLimits,
};
pub use realization::{
    components, degree_sequence, disjoint_union, plan_bounded, realize, realize_bounded,
    RealizationError, RealizationPlan,
};
pub use sequence::{
    erdos_gallai_check, from_regularity, leq_pointwise, parse_sequence, sufficient_by_length,
    to_regularity, GraphicalityVerdict, IntegerSequence, RegularitySequence, SequenceError,
};
pub use wqo::{
    find_good_pair, generate_stream, mine_antichain, mine_antichain_among, mine_antichain_between,
    Generator, GoodPairReport, HarnessError, Method, StreamConfig,
};
