//! Canonical labeling of small graphs.
//!
//! Vertices are ordered by equitable partition refinement; every remaining
//! tie is broken by trying each vertex of the first non-singleton cell. Of
//! all labelings reached this way, the one whose sorted edge list is
//! lexicographically smallest wins. Refinement is label-independent, so
//! isomorphic graphs reach the same set of relabeled graphs and therefore
//! the same minimum.

use crate::graph::{AdjMatrix, SimpleGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    /// The graph relabeled canonically.
    pub graph: SimpleGraph,
    /// `labeling[c]` is the original vertex placed at canonical position `c`.
    pub labeling: Vec<usize>,
}

type Cells = Vec<Vec<usize>>;

pub fn canonical_form(graph: &SimpleGraph) -> CanonicalForm {
    let n = graph.vertex_count();
    if n == 0 {
        return CanonicalForm {
            graph: graph.clone(),
            labeling: Vec::new(),
        };
    }
    let adj = AdjMatrix::new(graph);
    let mut search = Search {
        graph,
        adj: &adj,
        best: None,
    };
    search.descend(vec![(0..n).collect()]);
    let (labeling, _) = search.best.expect("at least one leaf");
    let mut perm = vec![0; n];
    for (c, &v) in labeling.iter().enumerate() {
        perm[v] = c;
    }
    CanonicalForm {
        graph: graph.relabeled(&perm),
        labeling,
    }
}

pub fn are_isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && canonical_form(a).graph == canonical_form(b).graph
}

/// Labeling and the edge list it induces.
type Leaf = (Vec<usize>, Vec<(usize, usize)>);

struct Search<'a> {
    graph: &'a SimpleGraph,
    adj: &'a AdjMatrix,
    best: Option<Leaf>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Cells) {
        let cells = refine(self.adj, cells);
        match cells.iter().position(|c| c.len() > 1) {
            None => self.leaf(cells.into_iter().map(|c| c[0]).collect()),
            Some(target) => {
                for &v in &cells[target] {
                    let mut next = Vec::with_capacity(cells.len() + 1);
                    next.extend_from_slice(&cells[..target]);
                    next.push(vec![v]);
                    next.push(cells[target].iter().copied().filter(|&u| u != v).collect());
                    next.extend_from_slice(&cells[target + 1..]);
                    self.descend(next);
                }
            }
        }
    }

    fn leaf(&mut self, labeling: Vec<usize>) {
        let mut pos = vec![0; labeling.len()];
        for (c, &v) in labeling.iter().enumerate() {
            pos[v] = c;
        }
        let mut cert: Vec<(usize, usize)> = self
            .graph
            .edges()
            .map(|(u, v)| {
                let (a, b) = (pos[u], pos[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        cert.sort_unstable();
        if self.best.as_ref().is_none_or(|(_, best)| cert < *best) {
            self.best = Some((labeling, cert));
        }
    }
}

/// Splits cells by neighbor counts into every cell until stable. Subcells are
/// ordered by their count signature, so the result depends only on the graph
/// structure and the input ordering of cells.
fn refine(adj: &AdjMatrix, mut cells: Cells) -> Cells {
    let n: usize = cells.iter().map(Vec::len).sum();
    let mut cell_of = vec![0usize; n];
    loop {
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let mut next: Cells = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut counts = vec![0usize; cells.len()];
                    for u in 0..n {
                        if adj.get(v, u) {
                            counts[cell_of[u]] += 1;
                        }
                    }
                    (counts, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}
