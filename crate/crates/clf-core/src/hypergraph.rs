//! Uniform hypergraphs with Berge-girth computation, the removable-edge
//! selection used to keep switched hypergraphs connected, and the switching
//! operation itself.
//!
//! Girth here is Berge girth: a cycle of length `n` is an alternating
//! sequence of distinct vertices and distinct edges `v_0,e_0,...,v_{n-1},
//! e_{n-1}` with `v_i ∈ e_{i-1} ∩ e_i`. It is computed on the bipartite
//! incidence graph, where Berge cycles of length `n` correspond exactly to
//! ordinary cycles of length `2n`.

use crate::cycles::girth_with_witness;
use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("vertex {vertex} out of range for hypergraph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("trivial edge (fewer than 2 vertices) at position {index}")]
    TrivialEdge { index: usize },
    #[error("duplicate hyperedge {edge:?}")]
    DuplicateEdge { edge: Vec<usize> },
    #[error("edge index {index} out of range ({m} edges)")]
    EdgeIndexOutOfRange { index: usize, m: usize },
    #[error("hypergraph is not connected")]
    NotConnected,
    #[error("minimum degree {found} below required {required}")]
    MinDegreeTooSmall { required: usize, found: usize },
    #[error("no removable edge found in a hypergraph satisfying the preconditions")]
    NoRemovableEdge,
    #[error("switch requires equal edge sizes, got {left} and {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("split {split} out of range for edge size {k}")]
    SplitOutOfRange { split: usize, k: usize },
    #[error("hypergraph is not regular")]
    NotRegular,
    #[error("hypergraph is not uniform")]
    NotUniform,
}

/// Hypergraph with canonical storage: every edge a strictly increasing
/// vertex list, the edge list sorted lexicographically.
#[derive(Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl std::fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Hypergraph(n={}, m={}, edges=", self.n, self.edges.len())?;
        f.debug_list().entries(self.edges.iter()).finish()?;
        write!(f, ")")
    }
}

impl Hypergraph {
    /// Builds a hypergraph from vertex sets. Each edge is treated as a set
    /// (sorted, deduplicated); edges of size < 2 and repeated edges are
    /// rejected.
    pub fn new(n: usize, edges: &[Vec<usize>]) -> Result<Self, HypergraphError> {
        let mut canon: Vec<Vec<usize>> = Vec::with_capacity(edges.len());
        for (index, e) in edges.iter().enumerate() {
            let mut e = e.clone();
            for &v in &e {
                if v >= n {
                    return Err(HypergraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            e.sort_unstable();
            e.dedup();
            if e.len() < 2 {
                return Err(HypergraphError::TrivialEdge { index });
            }
            canon.push(e);
        }
        canon.sort();
        for w in canon.windows(2) {
            if w[0] == w[1] {
                return Err(HypergraphError::DuplicateEdge { edge: w[0].clone() });
            }
        }
        Ok(Hypergraph { n, edges: canon })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.binary_search(&v).is_ok()).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for e in &self.edges {
            for &v in e {
                d[v] += 1;
            }
        }
        d
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    /// `k` if every edge has size `k`; `None` for mixed sizes or no edges.
    pub fn uniformity(&self) -> Option<usize> {
        let first = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == first).then_some(first)
    }

    /// `t` if every vertex lies in exactly `t` edges; `None` otherwise or
    /// for the empty vertex set.
    pub fn regularity(&self) -> Option<usize> {
        let degs = self.degrees();
        let &first = degs.first()?;
        degs.iter().all(|&d| d == first).then_some(first)
    }

    /// Linear: every two edges intersect in at most one vertex.
    pub fn is_linear(&self) -> bool {
        for (i, e) in self.edges.iter().enumerate() {
            for f in &self.edges[i + 1..] {
                if intersection_size(e, f) >= 2 {
                    return false;
                }
            }
        }
        true
    }

    /// Connectivity of the incidence structure. Vertexless hypergraphs and
    /// single vertices count as connected; an isolated vertex next to other
    /// material does not.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        connected_skipping(self, usize::MAX)
    }

    /// Bipartite incidence graph ι(H): indices `0..n` are the hypergraph
    /// vertices, `n..n+m` the edges in stored order, adjacency is
    /// membership.
    pub fn incidence_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                edges.push((v, self.n + i));
            }
        }
        Graph::new(self.n + self.edges.len(), &edges)
            .expect("incidence edges are valid by construction")
    }

    /// Berge girth with a witness, computed as half the incidence girth.
    pub fn berge_girth(&self) -> BergeGirth {
        let inc = self.incidence_graph();
        match girth_with_witness(&inc) {
            None => BergeGirth::Acyclic,
            Some((len, cyc)) => {
                debug_assert!(len % 2 == 0, "incidence graphs are bipartite");
                // rotate so the walk starts on a hypergraph vertex
                let start = cyc
                    .iter()
                    .position(|&x| x < self.n)
                    .expect("incidence cycle alternates sides");
                let rot: Vec<usize> = cyc[start..].iter().chain(&cyc[..start]).copied().collect();
                let mut vertices = Vec::with_capacity(len / 2);
                let mut hyperedges = Vec::with_capacity(len / 2);
                for (i, &x) in rot.iter().enumerate() {
                    if i % 2 == 0 {
                        vertices.push(x);
                    } else {
                        hyperedges.push(x - self.n);
                    }
                }
                BergeGirth::Finite {
                    girth: len / 2,
                    witness: BergeCycle {
                        vertices,
                        hyperedges,
                    },
                }
            }
        }
    }

    /// First edge (in stored order) whose removal keeps the hypergraph
    /// connected. Requires a connected input with minimum degree 2 — under
    /// those preconditions such an edge always exists, so exhausting the
    /// edge list signals an internal defect rather than a legal outcome.
    pub fn find_removable_edge(&self) -> Result<usize, HypergraphError> {
        if !self.is_connected() {
            return Err(HypergraphError::NotConnected);
        }
        let min_deg = self.min_degree();
        if min_deg < 2 {
            return Err(HypergraphError::MinDegreeTooSmall {
                required: 2,
                found: min_deg,
            });
        }
        for skip in 0..self.edges.len() {
            if connected_skipping(self, skip) {
                return Ok(skip);
            }
        }
        Err(HypergraphError::NoRemovableEdge)
    }

    /// Switching: relabels `other`'s vertices by `+n(self)`, removes edge
    /// `e` here and `f` there, and inserts `e* = e_1 ∪ f_2`, `f* = e_2 ∪ f_1`
    /// where `e_1`/`f_1` are the first `split` vertices of each edge in
    /// stored order. Preserves every vertex degree and `k`-uniformity.
    pub fn switch(
        &self,
        other: &Hypergraph,
        e: usize,
        f: usize,
        split: usize,
    ) -> Result<Hypergraph, HypergraphError> {
        if e >= self.edges.len() {
            return Err(HypergraphError::EdgeIndexOutOfRange {
                index: e,
                m: self.edges.len(),
            });
        }
        if f >= other.edges.len() {
            return Err(HypergraphError::EdgeIndexOutOfRange {
                index: f,
                m: other.edges.len(),
            });
        }
        let edge_e = &self.edges[e];
        let edge_f = &other.edges[f];
        let k = edge_e.len();
        if edge_f.len() != k {
            return Err(HypergraphError::SizeMismatch {
                left: k,
                right: edge_f.len(),
            });
        }
        if split == 0 || split >= k {
            return Err(HypergraphError::SplitOutOfRange { split, k });
        }
        let offset = self.n;
        let mut edges: Vec<Vec<usize>> = Vec::with_capacity(self.edges.len() + other.edges.len());
        for (i, ed) in self.edges.iter().enumerate() {
            if i != e {
                edges.push(ed.clone());
            }
        }
        for (i, ed) in other.edges.iter().enumerate() {
            if i != f {
                edges.push(ed.iter().map(|&v| v + offset).collect());
            }
        }
        let f_shifted: Vec<usize> = edge_f.iter().map(|&v| v + offset).collect();
        let mut e_star: Vec<usize> = edge_e[..split].to_vec();
        e_star.extend_from_slice(&f_shifted[split..]);
        let mut f_star: Vec<usize> = edge_e[split..].to_vec();
        f_star.extend_from_slice(&f_shifted[..split]);
        edges.push(e_star);
        edges.push(f_star);
        Hypergraph::new(self.n + other.n, &edges)
    }

    /// Grows a connected regular hypergraph to `q` times its order by
    /// repeatedly switching the accumulated hypergraph with a fresh copy,
    /// each time across removable edges so connectivity is preserved.
    pub fn chain_switch(&self, q: usize, split: usize) -> Result<Hypergraph, HypergraphError> {
        if self.regularity().is_none() {
            return Err(HypergraphError::NotRegular);
        }
        if self.uniformity().is_none() {
            return Err(HypergraphError::NotUniform);
        }
        let mut acc = self.clone();
        for _ in 1..q {
            let e = acc.find_removable_edge()?;
            let f = self.find_removable_edge()?;
            acc = acc.switch(self, e, f, split)?;
        }
        Ok(acc)
    }
}

/// Berge girth outcome. Acyclic hypergraphs have no finite girth.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BergeGirth {
    Acyclic,
    Finite { girth: usize, witness: BergeCycle },
}

impl BergeGirth {
    pub fn girth(&self) -> Option<usize> {
        match self {
            BergeGirth::Acyclic => None,
            BergeGirth::Finite { girth, .. } => Some(*girth),
        }
    }
}

/// Alternating witness `v_0, e_0, v_1, e_1, ...` with `v_i ∈ e_{i-1} ∩ e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BergeCycle {
    pub vertices: Vec<usize>,
    pub hyperedges: Vec<usize>,
}

impl BergeCycle {
    /// Validity check used by tests and defensive assertions.
    pub fn is_valid_in(&self, h: &Hypergraph) -> bool {
        let n = self.vertices.len();
        if n < 2 || self.hyperedges.len() != n {
            return false;
        }
        let mut vs = self.vertices.clone();
        vs.sort_unstable();
        vs.dedup();
        let mut es = self.hyperedges.clone();
        es.sort_unstable();
        es.dedup();
        if vs.len() != n || es.len() != n {
            return false;
        }
        for i in 0..n {
            let e_prev = &h.edges()[self.hyperedges[(i + n - 1) % n]];
            let e_cur = &h.edges()[self.hyperedges[i]];
            let v = self.vertices[i];
            if e_prev.binary_search(&v).is_err() || e_cur.binary_search(&v).is_err() {
                return false;
            }
        }
        true
    }
}

fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}

/// Union-find connectivity over the vertex set, optionally ignoring one edge.
fn connected_skipping(h: &Hypergraph, skip: usize) -> bool {
    if h.n == 0 {
        return true;
    }
    let mut parent: Vec<usize> = (0..h.n).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (i, e) in h.edges.iter().enumerate() {
        if i == skip {
            continue;
        }
        let r0 = find(&mut parent, e[0]);
        for &v in &e[1..] {
            let rv = find(&mut parent, v);
            parent[rv] = r0;
        }
    }
    let root = find(&mut parent, 0);
    (1..h.n).all(|v| find(&mut parent, v) == root)
}
