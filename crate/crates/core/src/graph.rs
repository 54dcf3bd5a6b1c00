//! Simple undirected graphs and their edge-list / JSON serializations.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {u}-{v} has an endpoint outside 0..{vertex_count}")]
    OutOfRange {
        u: usize,
        v: usize,
        vertex_count: usize,
    },
    #[error("edge list line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Loop-free, multi-edge-free undirected graph on vertices `0..vertex_count`.
///
/// Neighbor lists are kept sorted, so [`SimpleGraph::edges`] yields edges
/// `(u, v)` with `u < v` in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    /// Edgeless graph on `vertex_count` vertices.
    pub fn new(vertex_count: usize) -> Self {
        SimpleGraph {
            adj: vec![Vec::new(); vertex_count],
        }
    }

    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = SimpleGraph::new(vertex_count);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        SimpleGraph::from_edges(n, edges).expect("complete graph is simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        SimpleGraph::from_edges(n, (0..n).map(|u| (u, (u + 1) % n))).expect("cycle is simple")
    }

    pub fn path(n: usize) -> Self {
        SimpleGraph::from_edges(n, (1..n).map(|u| (u - 1, u))).expect("path is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.vertex_count();
        if u >= n || v >= n {
            return Err(GraphError::OutOfRange {
                u,
                v,
                vertex_count: n,
            });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(GraphError::DuplicateEdge(u.min(v), u.max(v))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(())
            }
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj
            .get(u)
            .is_some_and(|nbrs| nbrs.binary_search(&v).is_ok())
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)`, `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph::new(vertices.len());
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.add_edge(i, j)
                        .expect("induced subgraph of a simple graph");
                }
            }
        }
        g
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> SimpleGraph {
        assert_eq!(perm.len(), self.vertex_count());
        let mut adj = vec![Vec::new(); perm.len()];
        for (u, nbrs) in self.adj.iter().enumerate() {
            adj[perm[u]] = nbrs.iter().map(|&v| perm[v]).collect();
            adj[perm[u]].sort_unstable();
        }
        SimpleGraph { adj }
    }

    /// Text form: a `p <vertex_count>` header then one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("p {}\n", self.vertex_count());
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }

    /// Parses [`SimpleGraph::to_edge_list`] output. Blank lines and lines
    /// starting with `c` are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut graph: Option<SimpleGraph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            let err = |message: &str| GraphError::Parse {
                line: line_no,
                message: message.to_string(),
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            match (&mut graph, fields.as_slice()) {
                (None, ["p", n]) => {
                    let n = n.parse().map_err(|_| err("bad vertex count"))?;
                    graph = Some(SimpleGraph::new(n));
                }
                (None, _) => return Err(err("expected `p <vertex_count>` header")),
                (Some(g), [u, v]) => {
                    let u = u.parse().map_err(|_| err("bad vertex index"))?;
                    let v = v.parse().map_err(|_| err("bad vertex index"))?;
                    g.add_edge(u, v)?;
                }
                (Some(_), _) => return Err(err("expected `u v`")),
            }
        }
        graph.ok_or(GraphError::Parse {
            line: 0,
            message: "missing `p` header".into(),
        })
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    vertex_count: usize,
    edges: Vec<[usize; 2]>,
}

impl From<SimpleGraph> for GraphRepr {
    fn from(g: SimpleGraph) -> Self {
        GraphRepr {
            vertex_count: g.vertex_count(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<GraphRepr> for SimpleGraph {
    type Error = GraphError;

    fn try_from(r: GraphRepr) -> Result<Self, Self::Error> {
        SimpleGraph::from_edges(r.vertex_count, r.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

/// Dense adjacency for small search problems.
#[derive(Debug, Clone)]
pub(crate) struct AdjMatrix {
    n: usize,
    bits: Vec<bool>,
}

impl AdjMatrix {
    pub(crate) fn new(g: &SimpleGraph) -> Self {
        let n = g.vertex_count();
        let mut bits = vec![false; n * n];
        for (u, v) in g.edges() {
            bits[u * n + v] = true;
            bits[v * n + u] = true;
        }
        AdjMatrix { n, bits }
    }

    #[inline]
    pub(crate) fn get(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.n + v]
    }
}
