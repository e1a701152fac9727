//! Simple undirected graphs stored as packed adjacency bit-rows, plus the
//! builders for cycles, the theta graph, compositions and nested blow-ups.

use std::fmt;

use crate::error::GraphError;

/// Default upper bound on the order of any graph built by [`nested_blowup`].
///
/// A graph of order `n` costs `n^2 / 8` bytes, so 2^16 vertices is 512 MiB.
pub const DEFAULT_VERTEX_CAP: usize = 1 << 16;

const WORD_BITS: usize = 64;

/// An immutable simple graph on vertices `0..n`.
///
/// Row `v` of the adjacency matrix is stored as `words_per_row` packed `u64`
/// words; bit `u` of row `v` is set iff `{u, v}` is an edge. Rows are
/// symmetric and the diagonal is clear.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words_per_row: usize,
    bits: Vec<u64>,
    edge_count: usize,
}

/// An unordered non-adjacent pair with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NonEdge {
    pub u: usize,
    pub v: usize,
}

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words_per_row = words_for(n);
        Graph {
            n,
            words_per_row,
            bits: vec![0; n * words_per_row],
            edge_count: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 0..n {
            fill_range(g.row_mut(v), 0, n);
            clear_bit(g.row_mut(v), v);
        }
        g.recount_edges();
        g
    }

    /// Builds a graph from an explicit edge list.
    ///
    /// Rejects self-loops, repeated edges (in either orientation) and
    /// endpoints outside `0..n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge {
                    u: u.min(v),
                    v: u.max(v),
                });
            }
            set_bit(g.row_mut(u), v);
            set_bit(g.row_mut(v), u);
            g.edge_count += 1;
        }
        Ok(g)
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// `C(n, 2) - |E|`.
    pub fn non_edge_count(&self) -> usize {
        pairs(self.n) - self.edge_count
    }

    #[inline]
    pub fn words_per_row(&self) -> usize {
        self.words_per_row
    }

    /// Packed adjacency row of `v`.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        let start = v * self.words_per_row;
        &self.bits[start..start + self.words_per_row]
    }

    #[inline]
    fn row_mut(&mut self, v: usize) -> &mut [u64] {
        let start = v * self.words_per_row;
        &mut self.bits[start..start + self.words_per_row]
    }

    /// Panics if either endpoint is out of range.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.row(u)[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(v))
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// All non-edges in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = NonEdge> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n)
                .filter(move |&v| !self.has_edge(u, v))
                .map(move |v| NonEdge { u, v })
        })
    }

    /// Returns the graph with vertex `v` renamed to `perm[v]`.
    ///
    /// `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::BadPermutation);
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(GraphError::BadPermutation);
            }
        }
        Graph::from_edges(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Subgraph induced on the contiguous id range `start..end`, with ids
    /// shifted down by `start`.
    pub fn induced_range(&self, start: usize, end: usize) -> Graph {
        assert!(start <= end && end <= self.n);
        let edges: Vec<_> = (start..end)
            .flat_map(|u| {
                self.neighbors(u)
                    .filter(move |&v| v > u && v < end)
                    .map(move |v| (u - start, v - start))
            })
            .collect();
        Graph::from_edges(end - start, edges).expect("induced subgraph of a simple graph is simple")
    }

    fn recount_edges(&mut self) {
        let ones: usize = self.bits.iter().map(|w| w.count_ones() as usize).sum();
        self.edge_count = ones / 2;
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.n)
            .field("edges", &self.edge_count)
            .finish()
    }
}

#[inline]
pub(crate) fn pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[inline]
fn set_bit(row: &mut [u64], i: usize) {
    row[i / WORD_BITS] |= 1 << (i % WORD_BITS);
}

#[inline]
fn clear_bit(row: &mut [u64], i: usize) {
    row[i / WORD_BITS] &= !(1 << (i % WORD_BITS));
}

/// Sets bits `start..end` of `row`.
fn fill_range(row: &mut [u64], start: usize, end: usize) {
    if start >= end {
        return;
    }
    let (first, last) = (start / WORD_BITS, (end - 1) / WORD_BITS);
    let lo = !0u64 << (start % WORD_BITS);
    let hi = !0u64 >> (WORD_BITS - 1 - (end - 1) % WORD_BITS);
    if first == last {
        row[first] |= lo & hi;
        return;
    }
    row[first] |= lo;
    for w in &mut row[first + 1..last] {
        *w = !0;
    }
    row[last] |= hi;
}

/// ORs `src` into `dst`, shifted up by `offset` bits.
fn or_shifted(dst: &mut [u64], src: &[u64], offset: usize) {
    let (word, shift) = (offset / WORD_BITS, offset % WORD_BITS);
    for (i, &s) in src.iter().enumerate() {
        if s == 0 {
            continue;
        }
        dst[word + i] |= s << shift;
        if shift != 0 {
            let carry = s >> (WORD_BITS - shift);
            if carry != 0 {
                dst[word + i + 1] |= carry;
            }
        }
    }
}

pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let tz = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i * WORD_BITS + tz)
        })
    })
}

/// The cycle `0 - 1 - ... - (k-1) - 0`.
pub fn cycle_graph(k: usize) -> Result<Graph, GraphError> {
    if k < 3 {
        return Err(GraphError::CycleTooShort(k));
    }
    Graph::from_edges(k, (0..k).map(|i| (i, (i + 1) % k)))
}

/// Theta graph with three internally disjoint paths of length two between
/// hubs `0` and `4`; the midpoints are `1`, `2`, `3`. Isomorphic to K_{2,3}.
pub fn theta_222() -> Graph {
    Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
        .expect("theta graph edge list is valid")
}

/// The composition `outer[inner]`.
///
/// Vertex `(i, x)` with `i` in `outer` and `x` in `inner` gets id
/// `i * inner.order() + x`. Two vertices in the same block are adjacent iff
/// they are adjacent in `inner`; vertices in different blocks `i != j` are
/// adjacent iff `{i, j}` is an edge of `outer`.
pub fn compose(outer: &Graph, inner: &Graph) -> Result<Graph, GraphError> {
    if outer.order() == 0 || inner.order() == 0 {
        return Err(GraphError::EmptyGraph);
    }
    let k = inner.order();
    let n = outer
        .order()
        .checked_mul(k)
        .ok_or(GraphError::OrderOverflow)?;
    let mut g = Graph::empty(n);
    for i in 0..outer.order() {
        for x in 0..k {
            let row = g.row_mut(i * k + x);
            for j in outer.neighbors(i) {
                fill_range(row, j * k, (j + 1) * k);
            }
            or_shifted(row, inner.row(x), i * k);
        }
    }
    g.edge_count = outer.edge_count() * k * k + outer.order() * inner.edge_count();
    Ok(g)
}

/// The base graph of a blow-up family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseGraph {
    C4,
    Theta222,
    Custom(Graph),
}

impl BaseGraph {
    pub fn graph(&self) -> Graph {
        match self {
            BaseGraph::C4 => cycle_graph(4).expect("4 >= 3"),
            BaseGraph::Theta222 => theta_222(),
            BaseGraph::Custom(g) => g.clone(),
        }
    }

    pub fn order(&self) -> usize {
        match self {
            BaseGraph::C4 => 4,
            BaseGraph::Theta222 => 5,
            BaseGraph::Custom(g) => g.order(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            BaseGraph::C4 => "c4",
            BaseGraph::Theta222 => "theta222",
            BaseGraph::Custom(_) => "custom",
        }
    }
}

/// Names the level-`N` graph of a nested blow-up hierarchy, together with
/// its size ledger.
///
/// `blob_order = base_order^level` and `total_order = base_order^(level+1)`.
/// Sizes are kept as `u128` so that specs for levels far beyond anything
/// buildable can still be described (and refused by the vertex cap).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowupSpec {
    base: BaseGraph,
    level: u32,
    base_order: usize,
    blob_order: u128,
    total_order: u128,
}

impl BlowupSpec {
    pub fn new(base: BaseGraph, level: u32) -> Result<Self, GraphError> {
        let base_order = base.order();
        if base_order == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let blob_order = (base_order as u128)
            .checked_pow(level)
            .ok_or(GraphError::OrderOverflow)?;
        let total_order = blob_order
            .checked_mul(base_order as u128)
            .ok_or(GraphError::OrderOverflow)?;
        Ok(BlowupSpec {
            base,
            level,
            base_order,
            blob_order,
            total_order,
        })
    }

    pub fn base(&self) -> &BaseGraph {
        &self.base
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn base_order(&self) -> usize {
        self.base_order
    }

    /// Vertices per blob, i.e. the order of the level `N - 1` graph.
    pub fn blob_order(&self) -> u128 {
        self.blob_order
    }

    pub fn total_order(&self) -> u128 {
        self.total_order
    }
}

/// Builds `G_N` where `G_0` is the base graph and `G_N = base[G_{N-1}]`.
///
/// Blob `b` of the result is the id interval `[b * n^N, (b + 1) * n^N)`.
pub fn nested_blowup(spec: &BlowupSpec, vertex_cap: usize) -> Result<Graph, GraphError> {
    if spec.total_order() > vertex_cap as u128 {
        return Err(GraphError::VertexCapExceeded {
            requested: spec.total_order(),
            cap: vertex_cap,
        });
    }
    let base = spec.base().graph();
    let mut g = base.clone();
    for _ in 0..spec.level() {
        g = compose(&base, &g)?;
    }
    Ok(g)
}

/// Index of the blob containing vertex `v` of the level-`N` graph.
pub fn blob_of(v: u128, spec: &BlowupSpec) -> Result<usize, GraphError> {
    if v >= spec.total_order() {
        return Err(GraphError::VertexOutOfRange {
            vertex: usize::try_from(v).unwrap_or(usize::MAX),
            order: usize::try_from(spec.total_order()).unwrap_or(usize::MAX),
        });
    }
    Ok((v / spec.blob_order()) as usize)
}
