//! Immutable simple undirected graphs, family generators, and the Mycielski
//! operator.
//!
//! Vertices are the indices `0..n`. Adjacency is stored as one bitmask per
//! vertex, which caps the order at [`MAX_VERTICES`]; everything in this crate
//! operates on small instances, so the cap is never a practical limit.
//!
//! The Mycielski convention is frozen: for a base graph on `0..n`, the result
//! keeps the originals at `0..n`, places the shadow of vertex `i` at `n + i`,
//! and the apex at `2n`. Every module downstream relies on this ordering.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::set::{mask_below, BitIter, VertexSet};

/// Hard cap on the graph order imposed by the bitmask representation.
pub const MAX_VERTICES: usize = 128;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {n} exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {vertex} is not allowed")]
    SelfLoop { vertex: usize },
    #[error("{family} requires n >= {min}, got {got}")]
    InvalidOrder {
        family: &'static str,
        min: usize,
        got: usize,
    },
    #[error("operation supports at most {max} vertices, got {n}")]
    TooLargeForSearch { n: usize, max: usize },
}

/// Named graph families understood by the generators and the sweep harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
#[serde(rename_all = "lowercase")]
pub enum GraphFamily {
    Path,
    Cycle,
    Star,
    Circulant,
    Generic,
}

impl GraphFamily {
    pub fn name(self) -> &'static str {
        match self {
            GraphFamily::Path => "path",
            GraphFamily::Cycle => "cycle",
            GraphFamily::Star => "star",
            GraphFamily::Circulant => "circulant",
            GraphFamily::Generic => "generic",
        }
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for GraphFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "path" => Ok(GraphFamily::Path),
            "cycle" => Ok(GraphFamily::Cycle),
            "star" => Ok(GraphFamily::Star),
            "circulant" => Ok(GraphFamily::Circulant),
            "generic" => Ok(GraphFamily::Generic),
            other => Err(format!(
                "unknown family {other:?} (expected path, cycle, star, circulant or generic)"
            )),
        }
    }
}

/// An immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<u128>,
    label: Option<String>,
    mycielski_base: Option<usize>,
}

impl Graph {
    /// Builds a graph from an explicit edge list. Duplicate edges collapse
    /// silently; self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut adj = vec![0u128; n];
        for (a, b) in edges {
            if a >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: a,
                    order: n,
                });
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: b,
                    order: n,
                });
            }
            if a == b {
                return Err(GraphError::SelfLoop { vertex: a });
            }
            adj[a] |= 1u128 << b;
            adj[b] |= 1u128 << a;
        }
        Ok(Self {
            n,
            adj,
            label: None,
            mycielski_base: None,
        })
    }

    /// The path P_n on `n >= 1` vertices, edges `{i, i+1}`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        if n < 1 {
            return Err(GraphError::InvalidOrder {
                family: "path",
                min: 1,
                got: n,
            });
        }
        let g = Self::from_edges(n, (1..n).map(|i| (i - 1, i)))?;
        Ok(g.with_label(format!("P_{n}")))
    }

    /// The cycle C_n on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::InvalidOrder {
                family: "cycle",
                min: 3,
                got: n,
            });
        }
        let g = Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?;
        Ok(g.with_label(format!("C_{n}")))
    }

    /// The star K_{1,n} with center 0 and `n >= 1` leaves `1..=n`.
    pub fn star(leaves: usize) -> Result<Self, GraphError> {
        if leaves < 1 {
            return Err(GraphError::InvalidOrder {
                family: "star",
                min: 1,
                got: leaves,
            });
        }
        let g = Self::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i)))?;
        Ok(g.with_label(format!("K_1,{leaves}")))
    }

    /// The 4-regular circulant on `n >= 5` vertices with chords at circular
    /// distances 1 and 2. Below 5 the two distances collide.
    pub fn aux_circulant(n: usize) -> Result<Self, GraphError> {
        if n < 5 {
            return Err(GraphError::InvalidOrder {
                family: "circulant",
                min: 5,
                got: n,
            });
        }
        let edges = (0..n).flat_map(|i| [(i, (i + 1) % n), (i, (i + 2) % n)]);
        let g = Self::from_edges(n, edges)?;
        Ok(g.with_label(format!("CI_{n}(1,2)")))
    }

    /// The Mycielski graph of `self`: originals at `0..n`, shadow of vertex
    /// `i` at `n + i` (adjacent to the neighbors of `i`), apex at `2n`
    /// (adjacent to every shadow).
    pub fn mycielski(&self) -> Result<Self, GraphError> {
        let n = self.n;
        let m = 2 * n + 1;
        if m > MAX_VERTICES {
            return Err(GraphError::TooManyVertices {
                n: m,
                max: MAX_VERTICES,
            });
        }
        let mut adj = vec![0u128; m];
        let apex = 2 * n;
        for v in 0..n {
            adj[v] = self.adj[v] | (self.adj[v] << n);
            adj[n + v] = self.adj[v] | (1u128 << apex);
            adj[apex] |= 1u128 << (n + v);
        }
        let label = self
            .label
            .as_ref()
            .map(|base| format!("M({base})"))
            .unwrap_or_else(|| format!("M(?{n})"));
        Ok(Self {
            n: m,
            adj,
            label: Some(label),
            mycielski_base: Some(n),
        })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// Base order when this graph was produced by [`Graph::mycielski`].
    pub fn mycielski_base(&self) -> Option<usize> {
        self.mycielski_base
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a] & (1u128 << b) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// `Some(r)` when every vertex has degree `r`.
    pub fn regular_degree(&self) -> Option<usize> {
        let mut degrees = self.adj.iter().map(|m| m.count_ones() as usize);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Lowest-index vertex of degree zero, if any.
    pub fn isolated_vertex(&self) -> Option<usize> {
        self.adj.iter().position(|&m| m == 0)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adj[v])
    }

    pub(crate) fn adjacency_mask(&self, v: usize) -> u128 {
        self.adj[v]
    }

    pub(crate) fn closed_mask(&self, v: usize) -> u128 {
        self.adj[v] | (1u128 << v)
    }

    /// N(v): the neighbors of `v`.
    pub fn open_neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.n,
            });
        }
        Ok(VertexSet::from_mask(self.n, self.adj[v]))
    }

    /// N[v] = N(v) plus `v` itself.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.n,
            });
        }
        Ok(VertexSet::from_mask(self.n, self.closed_mask(v)))
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as pairs `(a, b)` with `a < b`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for a in 0..self.n {
            let mut higher = self.adj[a] & !mask_below(a + 1);
            while higher != 0 {
                let b = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                out.push((a, b));
            }
        }
        out
    }

    /// All unordered pairs with identical open neighborhoods, sorted.
    pub fn false_twin_pairs(&self) -> Vec<(usize, usize)> {
        self.twin_pairs(false)
    }

    /// All unordered pairs with identical closed neighborhoods, sorted.
    pub fn true_twin_pairs(&self) -> Vec<(usize, usize)> {
        self.twin_pairs(true)
    }

    fn twin_pairs(&self, closed: bool) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                let (ma, mb) = if closed {
                    (self.closed_mask(a), self.closed_mask(b))
                } else {
                    (self.adj[a], self.adj[b])
                };
                if ma == mb {
                    pairs.push((a, b));
                }
            }
        }
        pairs
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = 1u128;
        let mut frontier = 1u128;
        while frontier != 0 {
            let mut next = 0u128;
            let mut t = frontier;
            while t != 0 {
                let v = t.trailing_zeros() as usize;
                t &= t - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == mask_below(self.n)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph({}, n={}, m={})",
            self.label.as_deref().unwrap_or("?"),
            self.n,
            self.edge_count()
        )
    }
}

/// A uniformly random labeled spanning tree (via a random Prüfer sequence)
/// plus every remaining edge independently with probability `extra_edge_prob`.
/// Connected by construction.
pub fn random_connected<R: Rng + ?Sized>(rng: &mut R, n: usize, extra_edge_prob: f64) -> Graph {
    assert!((1..=MAX_VERTICES).contains(&n));
    let mut edges: Vec<(usize, usize)> = Vec::new();
    if n == 2 {
        edges.push((0, 1));
    } else if n > 2 {
        let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        let mut deg = vec![1usize; n];
        for &s in &seq {
            deg[s] += 1;
        }
        for &s in &seq {
            let leaf = deg.iter().position(|&d| d == 1).expect("leaf exists");
            edges.push((leaf.min(s), leaf.max(s)));
            deg[leaf] = 0;
            deg[s] -= 1;
        }
        let a = deg.iter().position(|&d| d == 1).expect("two leaves remain");
        let b = deg
            .iter()
            .rposition(|&d| d == 1)
            .expect("two leaves remain");
        edges.push((a, b));
    }
    let mut g = Graph::from_edges(n, edges).expect("tree edges are valid");
    for a in 0..n {
        for b in a + 1..n {
            if !g.has_edge(a, b) && rng.gen_bool(extra_edge_prob) {
                g.adj[a] |= 1u128 << b;
                g.adj[b] |= 1u128 << a;
            }
        }
    }
    g.with_label(format!("R_{n}"))
}

// ---------------------------------------------------------------------------
// Isomorphism and canonical forms (brute force; intended for small graphs)
// ---------------------------------------------------------------------------

fn vertex_invariants(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    (0..g.n)
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).map(|w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect()
}

/// Exact isomorphism test by invariant-guided backtracking; fine up to ~16
/// vertices, which covers every instance this crate works with.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n != b.n || a.edge_count() != b.edge_count() {
        return false;
    }
    let inv_a = vertex_invariants(a);
    let inv_b = vertex_invariants(b);
    let mut sorted_a = inv_a.clone();
    let mut sorted_b = inv_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return false;
    }

    fn extend(
        a: &Graph,
        b: &Graph,
        inv_a: &[(usize, Vec<usize>)],
        inv_b: &[(usize, Vec<usize>)],
        map: &mut Vec<Option<usize>>,
        used: &mut u128,
        v: usize,
    ) -> bool {
        if v == a.n {
            return true;
        }
        for w in 0..b.n {
            if *used & (1u128 << w) != 0 || inv_a[v] != inv_b[w] {
                continue;
            }
            let consistent = (0..v).all(|p| {
                let q = map[p].expect("prefix mapped");
                a.has_edge(p, v) == b.has_edge(q, w)
            });
            if consistent {
                map[v] = Some(w);
                *used |= 1u128 << w;
                if extend(a, b, inv_a, inv_b, map, used, v + 1) {
                    return true;
                }
                map[v] = None;
                *used &= !(1u128 << w);
            }
        }
        false
    }

    let mut map = vec![None; a.n];
    let mut used = 0u128;
    extend(a, b, &inv_a, &inv_b, &mut map, &mut used, 0)
}

/// A canonical key: the lexicographically smallest packed upper-triangle
/// adjacency bitstring over all relabelings that respect the vertex-invariant
/// partition. Two graphs get equal keys iff they are isomorphic.
///
/// Only supported for `n <= 16` (the key must fit in 120 bits); the
/// permutation search makes it practical for the small orders used by the
/// catalog below.
pub fn canonical_key(g: &Graph) -> Result<u128, GraphError> {
    if g.n > 16 {
        return Err(GraphError::TooLargeForSearch { n: g.n, max: 16 });
    }
    let inv = vertex_invariants(g);
    // Vertices grouped by invariant; positions are assigned block by block so
    // any isomorphism maps blocks onto blocks.
    let mut order: Vec<usize> = (0..g.n).collect();
    order.sort_by(|&x, &y| inv[x].cmp(&inv[y]));
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match blocks.last() {
            Some(last) if inv[last[0]] == inv[v] => blocks.last_mut().unwrap().push(v),
            _ => blocks.push(vec![v]),
        }
    }

    fn pack(g: &Graph, perm: &[usize]) -> u128 {
        // perm[pos] = original vertex placed at pos
        let mut key = 0u128;
        let mut bit = 0;
        for i in 0..g.n() {
            for j in i + 1..g.n() {
                if g.has_edge(perm[i], perm[j]) {
                    key |= 1u128 << bit;
                }
                bit += 1;
            }
        }
        key
    }

    fn visit(
        g: &Graph,
        blocks: &[Vec<usize>],
        block_idx: usize,
        perm: &mut Vec<usize>,
        used: &mut u128,
        best: &mut Option<u128>,
    ) {
        if block_idx == blocks.len() {
            let key = pack(g, perm);
            if best.is_none_or(|b| key < b) {
                *best = Some(key);
            }
            return;
        }
        fn arrange(
            g: &Graph,
            blocks: &[Vec<usize>],
            block_idx: usize,
            remaining: usize,
            perm: &mut Vec<usize>,
            used: &mut u128,
            best: &mut Option<u128>,
        ) {
            if remaining == 0 {
                visit(g, blocks, block_idx + 1, perm, used, best);
                return;
            }
            for &v in &blocks[block_idx] {
                if *used & (1u128 << v) != 0 {
                    continue;
                }
                perm.push(v);
                *used |= 1u128 << v;
                arrange(g, blocks, block_idx, remaining - 1, perm, used, best);
                perm.pop();
                *used &= !(1u128 << v);
            }
        }
        arrange(
            g,
            blocks,
            block_idx,
            blocks[block_idx].len(),
            perm,
            used,
            best,
        );
    }

    let mut best = None;
    let mut perm = Vec::with_capacity(g.n);
    let mut used = 0u128;
    visit(g, &blocks, 0, &mut perm, &mut used, &mut best);
    Ok(best.unwrap_or(0))
}

/// Every connected graph on exactly `n` vertices, one representative per
/// isomorphism class. Exhaustive over labeled graphs, so it is limited to
/// `n <= 7`.
pub fn connected_graph_catalog(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n > 7 {
        return Err(GraphError::TooLargeForSearch { n, max: 7 });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let pair_count = n * (n - 1) / 2;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << pair_count) {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .map(|(_, &e)| e);
        let g = Graph::from_edges(n, edges).expect("in range");
        if !g.is_connected() {
            continue;
        }
        let key = canonical_key(&g).expect("n <= 7");
        if seen.insert(key) {
            out.push(g.with_label(format!("G{n}_{mask:x}")));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;

    #[test]
    fn path_generator() {
        let p1 = Graph::path(1).unwrap();
        assert_eq!((p1.n(), p1.edge_count()), (1, 0));
        let p2 = Graph::path(2).unwrap();
        assert_eq!(p2.edges(), vec![(0, 1)]);
        let p4 = Graph::path(4).unwrap();
        assert_eq!(p4.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert!(Graph::path(0).is_err());
    }

    #[test]
    fn cycle_generator() {
        let c3 = Graph::cycle(3).unwrap();
        assert_eq!(c3.edge_count(), 3);
        assert!(Graph::cycle(2).is_err());
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(c4.false_twin_pairs(), vec![(0, 2), (1, 3)]);
        let c5 = Graph::cycle(5).unwrap();
        let mp2 = Graph::path(2).unwrap().mycielski().unwrap();
        assert!(are_isomorphic(&c5, &mp2));
    }

    #[test]
    fn star_generator() {
        let s1 = Graph::star(1).unwrap();
        assert!(are_isomorphic(&s1, &Graph::path(2).unwrap()));
        let s3 = Graph::star(3).unwrap();
        assert_eq!((s3.n(), s3.edge_count()), (4, 3));
        assert_eq!(s3.degree(0), 3);
        let s5 = Graph::star(5).unwrap();
        assert_eq!((s5.n(), s5.edge_count()), (6, 5));
        // leaves are pairwise false twins
        assert_eq!(s5.false_twin_pairs().len(), 5 * 4 / 2);
        assert!(Graph::star(0).is_err());
    }

    #[test]
    fn circulant_generator() {
        let k5 = Graph::aux_circulant(5).unwrap();
        assert_eq!(k5.edge_count(), 10); // K_5
        assert!(k5.regular_degree() == Some(4));
        let oct = Graph::aux_circulant(6).unwrap();
        // octahedron: each vertex non-adjacent only to its antipode
        for v in 0..6 {
            assert!(!oct.has_edge(v, (v + 3) % 6));
            assert_eq!(oct.degree(v), 4);
        }
        let c9 = Graph::aux_circulant(9).unwrap();
        assert_eq!(c9.edge_count(), 18);
        assert_eq!(c9.regular_degree(), Some(4));
        assert!(Graph::aux_circulant(4).is_err());
    }

    #[test]
    fn mycielski_shape() {
        let g = Graph::cycle(3).unwrap();
        let m = g.mycielski().unwrap();
        assert_eq!(m.n(), 7);
        assert_eq!(m.edge_count(), 3 * 3 + 3);
        assert_eq!(m.mycielski_base(), Some(3));
        assert_eq!(m.label(), Some("M(C_3)"));
        // apex neighbors are exactly the shadows
        let apex: Vec<usize> = m.neighbors(6).collect();
        assert_eq!(apex, vec![3, 4, 5]);
    }

    #[test]
    fn mycielski_of_star_matches_hand_layout() {
        let m = Graph::star(3).unwrap().mycielski().unwrap();
        assert_eq!(m.n(), 9);
        // center 0, leaves 1..3, shadows 4..7, apex 8
        assert!(m.has_edge(4, 1) && m.has_edge(4, 2) && m.has_edge(4, 3));
        assert!(m.has_edge(5, 0) && !m.has_edge(5, 2));
        assert!((4..8).all(|s| m.has_edge(8, s)));
        assert!(!m.has_edge(8, 0));
        // shadow leaves inherit the leaf twin relation; shadows of leaves and
        // the original leaves are also mutual false twins here
        assert!(m.true_twin_pairs().is_empty());
        assert!(m.false_twin_pairs().contains(&(1, 2)));
        assert!(m.false_twin_pairs().contains(&(5, 6)));
    }

    #[test]
    fn neighborhoods() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(p3.open_neighborhood(1).unwrap().to_vec(), vec![0, 2]);
        assert_eq!(p3.closed_neighborhood(1).unwrap().to_vec(), vec![0, 1, 2]);
        assert!(p3.open_neighborhood(3).is_err());
        let m = Graph::path(2).unwrap().mycielski().unwrap();
        assert_eq!(m.open_neighborhood(4).unwrap().to_vec(), vec![2, 3]);
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.open_neighborhood(0).unwrap().to_vec(), vec![1, 4]);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(matches!(
            Graph::from_edges(3, [(0, 0)]),
            Err(GraphError::SelfLoop { vertex: 0 })
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange {
                vertex: 3,
                order: 3
            })
        ));
        assert!(Graph::from_edges(200, []).is_err());
    }

    #[test]
    fn catalog_counts_match_known_values() {
        // Connected graphs up to isomorphism: OEIS A001349.
        let expected = [1usize, 1, 2, 6, 21, 112];
        for (k, &want) in expected.iter().enumerate() {
            let n = k + 1;
            assert_eq!(connected_graph_catalog(n).unwrap().len(), want, "n={n}");
        }
    }

    #[test]
    #[ignore = "takes a couple of minutes; run with --ignored"]
    fn catalog_count_n7() {
        assert_eq!(connected_graph_catalog(7).unwrap().len(), 853);
    }

    #[test]
    fn random_connected_is_connected() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in 1..=12 {
            for _ in 0..20 {
                let g = random_connected(&mut rng, n, 0.3);
                assert!(g.is_connected());
                assert_eq!(g.n(), n);
            }
        }
    }

    proptest! {
        #[test]
        fn mycielski_counts_and_degrees(n in 1usize..9, seed in 0u64..500) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let g = random_connected(&mut rng, n, 0.4);
            let m = g.mycielski().unwrap();
            prop_assert_eq!(m.n(), 2 * n + 1);
            prop_assert_eq!(m.edge_count(), 3 * g.edge_count() + n);
            for v in 0..n {
                prop_assert_eq!(m.degree(v), 2 * g.degree(v));
                prop_assert_eq!(m.degree(n + v), g.degree(v) + 1);
            }
            prop_assert_eq!(m.degree(2 * n), n);
        }

        #[test]
        fn mycielski_twin_correspondence(n in 2usize..9, seed in 0u64..500) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let g = random_connected(&mut rng, n, 0.4);
            let m = g.mycielski().unwrap();
            let base: Vec<(usize, usize)> = g.false_twin_pairs();
            let lifted = m.false_twin_pairs();
            for &(a, b) in &base {
                prop_assert!(lifted.contains(&(a, b)), "originals stay twins");
                prop_assert!(lifted.contains(&(n + a, n + b)), "shadows become twins");
            }
            // and conversely, twins among originals/shadows come from base twins
            for &(a, b) in &lifted {
                if b < n {
                    prop_assert!(base.contains(&(a, b)));
                }
                if a >= n && b >= n && b < 2 * n {
                    prop_assert!(base.contains(&(a - n, b - n)));
                }
            }
            prop_assert!(m.true_twin_pairs().is_empty());
        }

        #[test]
        fn generators_are_deterministic(n in 3usize..20) {
            prop_assert_eq!(Graph::path(n).unwrap().edges(), Graph::path(n).unwrap().edges());
            prop_assert_eq!(Graph::cycle(n).unwrap().edges(), Graph::cycle(n).unwrap().edges());
            prop_assert_eq!(Graph::star(n).unwrap().edges(), Graph::star(n).unwrap().edges());
        }
    }
}
