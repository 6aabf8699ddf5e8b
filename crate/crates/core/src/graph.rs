//! The linear crossed octagonal chain `O_n`.
//!
//! Vertices come in two mirrored rows of `3n + 1` vertices each. Row one is
//! labelled `1, 2, …, 3n+1`, row two `1', 2', …, (3n+1)'`. Internally row one
//! occupies indices `0..3n+1` and row two `3n+1..6n+2`; the Laplacian block
//! decomposition relies on that ordering.
//!
//! Edges, for `i = 1..3n`:
//! - path edges `(i, i+1)` and `(i', (i+1)')`,
//! - crossed edges `(i, (i+1)')` and `(i', i+1)`,
//!
//! plus a rung `(j, j')` for every `j ≡ 1 (mod 3)`.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Which of the two mirrored rows a vertex belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Row {
    V1,
    V2,
}

/// A vertex label of `O_n`, 1-based like the textual form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId {
    pub row: Row,
    pub position: u32,
}

impl VertexId {
    pub fn v1(position: u32) -> Self {
        VertexId {
            row: Row::V1,
            position,
        }
    }

    pub fn v2(position: u32) -> Self {
        VertexId {
            row: Row::V2,
            position,
        }
    }

    /// Linear index in a graph whose rows have `row_len = 3n + 1` vertices.
    pub fn index(self, row_len: usize) -> usize {
        let offset = match self.row {
            Row::V1 => 0,
            Row::V2 => row_len,
        };
        offset + self.position as usize - 1
    }

    pub fn from_index(index: usize, row_len: usize) -> Self {
        if index < row_len {
            VertexId::v1(index as u32 + 1)
        } else {
            VertexId::v2((index - row_len) as u32 + 1)
        }
    }

    /// Image under the mirror involution `k <-> k'`.
    pub fn mirrored(self) -> Self {
        let row = match self.row {
            Row::V1 => Row::V2,
            Row::V2 => Row::V1,
        };
        VertexId {
            row,
            position: self.position,
        }
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.row {
            Row::V1 => write!(f, "{}", self.position),
            Row::V2 => write!(f, "{}'", self.position),
        }
    }
}

/// Parses `k` or `k'`. Range checks against a particular `n` happen in
/// [`ChainGraph::vertex`].
impl FromStr for VertexId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let (digits, row) = match trimmed.strip_suffix('\'') {
            Some(rest) => (rest, Row::V2),
            None => (trimmed, Row::V1),
        };
        let bad = |reason: &str| Error::VertexParse {
            text: s.to_string(),
            n: 0,
            reason: reason.to_string(),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("expected a positive integer optionally followed by '"));
        }
        let position: u32 = digits
            .parse()
            .map_err(|_| bad("position does not fit in 32 bits"))?;
        if position == 0 {
            return Err(bad("positions are 1-based"));
        }
        Ok(VertexId { row, position })
    }
}

/// `O_n` with `6n + 2` vertices and `13n + 1` edges. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainGraph {
    n: u32,
    neighbors: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl ChainGraph {
    /// Builds `O_n` and checks it against the Laplacian block pattern.
    pub fn build(n: i64) -> Result<Self> {
        if n < 1 || n > u32::MAX as i64 / 8 {
            return Err(Error::InvalidChainLength(n));
        }
        let n = n as u32;
        let row_len = 3 * n as usize + 1;
        let mut edges = Vec::with_capacity(13 * n as usize + 1);
        for i in 0..row_len - 1 {
            edges.push((i, i + 1));
            edges.push((row_len + i, row_len + i + 1));
            edges.push((i, row_len + i + 1));
            edges.push((row_len + i, i + 1));
        }
        for j in (0..row_len).step_by(3) {
            edges.push((j, row_len + j));
        }
        let graph = Self::assemble(n, edges)?;
        graph.check_block_pattern()?;
        Ok(graph)
    }

    /// Builds a graph on the `O_n` vertex set from an arbitrary simple edge
    /// list. Only simplicity is checked; the `O_n` pattern is not. Used to
    /// feed deliberately broken chains through the verification pipeline.
    pub fn from_edges(n: u32, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidChainLength(0));
        }
        let row_len = 3 * n as usize + 1;
        let mut indexed = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w.position as usize > row_len {
                    return Err(Error::VertexParse {
                        text: w.to_string(),
                        n,
                        reason: format!("position exceeds 3n+1 = {row_len}"),
                    });
                }
            }
            indexed.push((u.index(row_len), v.index(row_len)));
        }
        Self::assemble(n, indexed)
    }

    fn assemble(n: u32, mut edges: Vec<(usize, usize)>) -> Result<Self> {
        let vertex_count = 6 * n as usize + 2;
        let mut neighbors = vec![Vec::new(); vertex_count];
        for e in edges.iter_mut() {
            if e.0 == e.1 {
                return Err(Error::Construction(format!("loop at index {}", e.0)));
            }
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
            neighbors[e.0].push(e.1);
            neighbors[e.1].push(e.0);
        }
        for (v, list) in neighbors.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Construction(format!("multi-edge at index {v}")));
            }
        }
        edges.sort_unstable();
        Ok(ChainGraph {
            n,
            neighbors,
            edges,
        })
    }

    /// Compares degrees with the diagonal of `L_{V1V1}` and the row-one to
    /// row-two adjacency with the off-diagonal pattern of `L_{V1V2}`.
    fn check_block_pattern(&self) -> Result<()> {
        let row_len = self.row_len();
        if self.edges.len() != 13 * self.n as usize + 1 {
            return Err(Error::Construction(format!(
                "edge count {} != 13n+1",
                self.edges.len()
            )));
        }
        for k in 1..=row_len {
            let expected = expected_v1_degree(self.n, k as u32);
            let a = VertexId::v1(k as u32).index(row_len);
            let b = VertexId::v2(k as u32).index(row_len);
            if self.degree(a) != expected || self.degree(b) != expected {
                return Err(Error::Construction(format!(
                    "degree of vertex {k} is {} (mirror {}), block diagonal says {expected}",
                    self.degree(a),
                    self.degree(b)
                )));
            }
            for m in 1..=row_len {
                let cross = self.is_adjacent(a, VertexId::v2(m as u32).index(row_len));
                let in_v1 = m != k && self.is_adjacent(a, VertexId::v1(m as u32).index(row_len));
                let expected_cross = (m == k && k % 3 == 1) || m.abs_diff(k) == 1;
                let expected_in_v1 = m.abs_diff(k) == 1;
                if cross != expected_cross || in_v1 != expected_in_v1 {
                    return Err(Error::Construction(format!(
                        "adjacency of {k} with {m}/{m}' disagrees with the block pattern"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `3n + 1`, the size of each mirrored row.
    pub fn row_len(&self) -> usize {
        3 * self.n as usize + 1
    }

    pub fn vertex_count(&self) -> usize {
        self.neighbors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as index pairs `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_labels(&self) -> Vec<(VertexId, VertexId)> {
        self.edges
            .iter()
            .map(|&(a, b)| (self.label(a), self.label(b)))
            .collect()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    pub fn is_adjacent(&self, a: usize, b: usize) -> bool {
        self.neighbors[a].binary_search(&b).is_ok()
    }

    pub fn label(&self, index: usize) -> VertexId {
        VertexId::from_index(index, self.row_len())
    }

    pub fn index_of(&self, v: VertexId) -> Result<usize> {
        if v.position == 0 || v.position as usize > self.row_len() {
            return Err(Error::VertexParse {
                text: v.to_string(),
                n: self.n,
                reason: format!("position must lie in 1..={}", self.row_len()),
            });
        }
        Ok(v.index(self.row_len()))
    }

    /// Parses a textual vertex and checks it exists in this graph.
    pub fn vertex(&self, text: &str) -> Result<VertexId> {
        let v: VertexId = text.parse().map_err(|e| match e {
            Error::VertexParse { text, reason, .. } => Error::VertexParse {
                text,
                n: self.n,
                reason,
            },
            other => other,
        })?;
        self.index_of(v)?;
        Ok(v)
    }

    /// The mirror involution as an index permutation: `perm[i]` is the image
    /// of vertex `i`.
    pub fn mirror(&self) -> Vec<usize> {
        let row_len = self.row_len();
        (0..self.vertex_count())
            .map(|i| {
                if i < row_len {
                    i + row_len
                } else {
                    i - row_len
                }
            })
            .collect()
    }

    /// Unweighted shortest-path distances from `source` to every vertex.
    pub fn bfs_distances(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &w in &self.neighbors[u] {
                if dist[w] == u32::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn all_pairs_distances(&self) -> Vec<Vec<u32>> {
        (0..self.vertex_count())
            .map(|s| self.bfs_distances(s))
            .collect()
    }
}

/// Diagonal entry `l_kk` of `L_{V1V1}`: 3 at both ends, 5 at interior
/// positions `≡ 1 (mod 3)`, 4 elsewhere.
pub fn expected_v1_degree(n: u32, position: u32) -> usize {
    let last = 3 * n + 1;
    if position == 1 || position == last {
        3
    } else if position % 3 == 1 {
        5
    } else {
        4
    }
}
