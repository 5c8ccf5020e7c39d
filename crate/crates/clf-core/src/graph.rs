//! Simple undirected graphs over `0..n`, with the neighborhood-link and
//! product operations the constructions are built from.
//!
//! Storage is canonical: per-vertex neighbor lists, strictly increasing, no
//! loops, no parallel edges. Values are immutable after construction.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("duplicate edge {u} {v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("cartesian product requires at least two nonempty factors")]
    BadProductFactors,
    #[error("{op} supports at most {cap} vertices, got {n}")]
    TooLarge {
        op: &'static str,
        cap: usize,
        n: usize,
    },
    #[error("parameter out of range: {what}")]
    BadParameter { what: String },
}

/// Simple undirected graph with canonical adjacency storage.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges=", self.n, self.edge_count())?;
        f.debug_list().entries(self.edge_list()).finish()?;
        write!(f, ")")
    }
}

impl Graph {
    /// Builds a graph from an explicit edge list. Rejects out-of-range
    /// endpoints, loops and duplicate pairs (in either orientation).
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        for (u, list) in adj.iter().enumerate() {
            for w in list.windows(2) {
                if w[0] == w[1] {
                    let (a, b) = if u < w[0] { (u, w[0]) } else { (w[0], u) };
                    return Err(GraphError::DuplicateEdge { u: a, v: b });
                }
            }
        }
        Ok(Graph { n, adj })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
        }
    }

    /// Complete graph `K_k`.
    pub fn complete(k: usize) -> Self {
        let mut adj = vec![Vec::new(); k];
        for (u, list) in adj.iter_mut().enumerate() {
            *list = (0..k).filter(|&v| v != u).collect();
        }
        Graph { n: k, adj }
    }

    /// Cycle `C_k`, `k >= 3`, vertices in cyclic order `0,1,...,k-1`.
    pub fn cycle(k: usize) -> Self {
        assert!(k >= 3, "cycle needs at least 3 vertices");
        let edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        Graph::new(k, &edges).expect("cycle edges are valid")
    }

    /// Path `P_k` on `k` vertices.
    pub fn path(k: usize) -> Self {
        let edges: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
        Graph::new(k, &edges).expect("path edges are valid")
    }

    /// Disjoint union of `q` copies of `g`, copies laid out consecutively.
    pub fn disjoint_copies(g: &Graph, q: usize) -> Self {
        let n = g.n * q;
        let mut adj = Vec::with_capacity(n);
        for c in 0..q {
            let off = c * g.n;
            for list in &g.adj {
                adj.push(list.iter().map(|&w| w + off).collect());
            }
        }
        Graph { n, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|l| l.len()).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|l| l.len()).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// The link `L(v) = G[N(v)]`: the subgraph induced by the open
    /// neighborhood, relabeled `0..deg(v)-1` preserving neighbor order.
    pub fn link_of(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        self.induced_subgraph(&self.adj[v])
    }

    /// Induced subgraph `G[S]`, vertices relabeled in increasing order of
    /// original index. `s` is treated as a set (duplicates collapse).
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<Graph, GraphError> {
        let mut verts: Vec<usize> = s.to_vec();
        for &v in &verts {
            self.check_vertex(v)?;
        }
        verts.sort_unstable();
        verts.dedup();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let mut adj = vec![Vec::new(); verts.len()];
        for (i, &v) in verts.iter().enumerate() {
            for &w in &self.adj[v] {
                if pos[w] != usize::MAX {
                    adj[i].push(pos[w]);
                }
            }
        }
        // neighbor lists inherit sortedness from the original order
        Ok(Graph {
            n: verts.len(),
            adj,
        })
    }

    /// Connected components as sorted vertex sets, ordered by minimum element.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// 2-colors the graph; returns the side of each vertex, or `None` if an
    /// odd cycle exists. Isolated vertices land on side 0.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = vec![s];
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                for &w in &self.adj[u] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        queue.push(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    /// Cartesian product of two or more nonempty factors. Vertices are
    /// coordinate tuples in lexicographic order (first factor most
    /// significant); two tuples are adjacent iff they agree in all but one
    /// coordinate and are adjacent there.
    pub fn cartesian_product(factors: &[&Graph]) -> Result<Graph, GraphError> {
        if factors.len() < 2 || factors.iter().any(|g| g.n == 0) {
            return Err(GraphError::BadProductFactors);
        }
        let mut stride = vec![1usize; factors.len()];
        for i in (0..factors.len() - 1).rev() {
            stride[i] = stride[i + 1] * factors[i + 1].n;
        }
        let n: usize = factors.iter().map(|g| g.n).product();
        let mut edges = Vec::new();
        for idx in 0..n {
            let mut rem = idx;
            let coords: Vec<usize> = stride
                .iter()
                .zip(factors.iter())
                .map(|(&s, g)| {
                    let c = rem / s % g.n;
                    rem %= s;
                    c
                })
                .collect();
            for (pos, g) in factors.iter().enumerate() {
                for &w in g.neighbors(coords[pos]) {
                    if w > coords[pos] {
                        let other = idx + (w - coords[pos]) * stride[pos];
                        edges.push((idx, other));
                    }
                }
            }
        }
        Graph::new(n, &edges)
    }

    /// The `∨_S` product: `self` plus one fresh copy `H_v` of `h` per
    /// `v ∈ s`, with `v` joined to every vertex of its own copy. New vertices
    /// are appended per `v` in increasing order, each block in `h`'s vertex
    /// order.
    pub fn join_over(&self, s: &[usize], h: &Graph) -> Result<Graph, GraphError> {
        let mut anchors: Vec<usize> = s.to_vec();
        for &v in &anchors {
            self.check_vertex(v)?;
        }
        anchors.sort_unstable();
        anchors.dedup();
        let n = self.n + anchors.len() * h.n;
        let mut edges = self.edge_list();
        for (i, &v) in anchors.iter().enumerate() {
            let off = self.n + i * h.n;
            for hv in 0..h.n {
                edges.push((v, off + hv));
            }
            for (a, b) in h.edge_list() {
                edges.push((off + a, off + b));
            }
        }
        Graph::new(n, &edges)
    }

    /// A canonical member of the family built from `C_k` plus `j` extra
    /// edges all incident to cycle vertex 0: the chords go to the `j`
    /// nearest non-neighbors `2, 3, ..., j+1`. A cycle vertex has only
    /// `k - 3` non-neighbors, so `j <= k - 3`.
    pub fn cycle_with_chords(k: usize, j: usize) -> Result<Graph, GraphError> {
        if k < 3 {
            return Err(GraphError::BadParameter {
                what: format!("cycle length {k} < 3"),
            });
        }
        if j + 3 > k {
            return Err(GraphError::BadParameter {
                what: format!("{j} chords requested but a C_{k} vertex has only {} non-neighbors", k - 3),
            });
        }
        let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        for c in 2..2 + j {
            edges.push((0, c));
        }
        Graph::new(k, &edges)
    }

    /// Exact independence number by branch and bound. Hard-capped at 32
    /// vertices; intended for link-sized graphs.
    pub fn independence_number(&self) -> Result<usize, GraphError> {
        const CAP: usize = 32;
        if self.n > CAP {
            return Err(GraphError::TooLarge {
                op: "independence_number",
                cap: CAP,
                n: self.n,
            });
        }
        let masks: Vec<u64> = (0..self.n)
            .map(|v| self.adj[v].iter().fold(0u64, |m, &w| m | 1 << w))
            .collect();
        let full = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        Ok(mis(&masks, full) as usize)
    }
}

fn mis(adj: &[u64], mask: u64) -> u32 {
    if mask == 0 {
        return 0;
    }
    // branch on a vertex of maximum degree inside the candidate set
    let mut best_v = usize::MAX;
    let mut best_deg = 0u32;
    let mut t = mask;
    while t != 0 {
        let v = t.trailing_zeros() as usize;
        t &= t - 1;
        let d = (adj[v] & mask).count_ones();
        if best_v == usize::MAX || d > best_deg {
            best_v = v;
            best_deg = d;
        }
    }
    if best_deg == 0 {
        return mask.count_ones();
    }
    let without = mis(adj, mask & !(1 << best_v));
    let with = 1 + mis(adj, mask & !adj[best_v] & !(1 << best_v));
    without.max(with)
}
