//! The graph-building pipelines: the copy-and-substitute product Γ(G,H),
//! the design-theoretic towers it generates (Steiner and affine), and
//! tree-gluing with separating permutations.

use crate::designs::{affine_lines, projective_plane, steiner_triple, DesignError};
use crate::families::{common_link, constant_link_multiplicity, FamilyError};
use crate::graph::{Graph, GraphError};
use crate::hypergraph::Hypergraph;
use crate::perms::{find_separating_permutations, PermError, PermutationFamily};
use crate::rng::SplitMix64;
use std::collections::BTreeMap;
use thiserror::Error;

/// Tower outputs beyond this order error out instead of grinding.
pub const MAX_TOWER_ORDER: usize = 100_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("hypergraph must be {expected}-regular to combine with this graph, found {found:?}")]
    RegularityMismatch {
        expected: usize,
        found: Option<usize>,
    },
    #[error("hypergraph must be {expected}-uniform to host this substituent, found {found:?}")]
    UniformityMismatch {
        expected: usize,
        found: Option<usize>,
    },
    #[error("substituent graph has no constant link: {0}")]
    SubstituentLink(FamilyError),
    #[error("base graph links are not a disjoint-copy multiple of the substituent link")]
    BaseLinkMismatch,
    #[error("tower parameter out of range: {what}")]
    BadTowerParameter { what: String },
    #[error("tower order {order} exceeds the cap {cap}")]
    TowerTooLarge { order: usize, cap: usize },
    #[error("gluing parameter out of range: {what}")]
    BadGlueParameter { what: String },
    #[error("family has {found} permutations over [{found_m}], need {expected} over [{expected_m}]")]
    FamilyShapeMismatch {
        expected: usize,
        found: usize,
        expected_m: usize,
        found_m: usize,
    },
    #[error("identification requires a parallel edge between merged vertices {a} and {b}; the permutations map clique siblings onto clique siblings")]
    IdentificationClash { a: usize, b: usize },
    #[error("no certified output within the retry budget ({attempts} attempts)")]
    NoCertifiedOutput { attempts: usize },
    #[error(transparent)]
    Design(#[from] DesignError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The product Γ(G,H) of a graph with constant link tL and an
/// n(G)-regular, n(F)-uniform hypergraph: one copy of G per hypergraph
/// vertex, one copy of F per hyperedge.
///
/// Copy `i` of G occupies vertices `i·n(G)..(i+1)·n(G)`. At each hypergraph
/// vertex `x` the incident edges are enumerated in stored hyperedge order;
/// when edge `E` is the j-th at `x_i`, it claims the vertex `i·n(G)+j`.
/// The resulting k-sets `f(E)` are pairwise disjoint, and F lands on each
/// via the order-preserving bijection to `f(E)` sorted by copy index. The
/// output has constant link (t+1)L.
pub fn gamma(g: &Graph, h: &Hypergraph, f: &Graph) -> Result<Graph, ConstructError> {
    let k = f.vertex_count();
    if k < 2 {
        return Err(ConstructError::BadTowerParameter {
            what: format!("substituent on {k} vertices"),
        });
    }
    if h.uniformity() != Some(k) {
        return Err(ConstructError::UniformityMismatch {
            expected: k,
            found: h.uniformity(),
        });
    }
    let n = g.vertex_count();
    if h.regularity() != Some(n) {
        return Err(ConstructError::RegularityMismatch {
            expected: n,
            found: h.regularity(),
        });
    }
    let link = common_link(f).map_err(ConstructError::SubstituentLink)?;
    if constant_link_multiplicity(g, &link).is_none() {
        return Err(ConstructError::BaseLinkMismatch);
    }

    let big_n = h.vertex_count();
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(big_n * g.edge_count() + h.edge_count() * f.edge_count());
    for i in 0..big_n {
        let off = i * n;
        for (u, v) in g.edge_list() {
            edges.push((off + u, off + v));
        }
    }
    // position of each hyperedge in its vertices' incidence enumerations
    let mut next_slot = vec![0usize; big_n];
    let f_edges = f.edge_list();
    for e in h.edges() {
        let spot: Vec<usize> = e
            .iter()
            .map(|&x| {
                let j = next_slot[x];
                next_slot[x] += 1;
                x * n + j
            })
            .collect();
        debug_assert_eq!(spot.len(), k);
        for &(a, b) in &f_edges {
            edges.push((spot[a], spot[b]));
        }
    }
    Ok(Graph::new(n * big_n, &edges)?)
}

/// Tower family being planned.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TowerKind {
    Steiner,
    Affine,
}

/// One level of a tower: the design on `points` points whose blocks are
/// `regularity`-regular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerLevel {
    pub regularity: usize,
    pub points: usize,
}

/// Planned parameter sequence of a tower.
#[derive(Clone, Debug)]
pub struct TowerSpec {
    pub kind: TowerKind,
    /// Block size: `k` for Steiner towers, `q` for affine towers.
    pub base: usize,
    pub depth: usize,
    pub q_factor: usize,
    pub levels: Vec<TowerLevel>,
    pub order: usize,
}

/// Parameter sequence for the Steiner tower: level i uses S(2,k,v_i) with
/// v_i = n_i(k-1)+1 where n_i is the current graph order.
pub fn plan_steiner_tower(
    k: usize,
    depth: usize,
    q_factor: usize,
) -> Result<TowerSpec, ConstructError> {
    if !(3..=5).contains(&k) {
        return Err(ConstructError::BadTowerParameter {
            what: format!("Steiner towers support k in 3..=5, got {k}"),
        });
    }
    if depth < 1 || q_factor < 1 {
        return Err(ConstructError::BadTowerParameter {
            what: format!("need depth >= 1 and q factor >= 1, got {depth}, {q_factor}"),
        });
    }
    let mut levels = Vec::new();
    let mut order = q_factor * k;
    for _ in 1..depth {
        let v = order * (k - 1) + 1;
        levels.push(TowerLevel {
            regularity: order,
            points: v,
        });
        order = order
            .checked_mul(v)
            .filter(|&o| o <= MAX_TOWER_ORDER)
            .ok_or(ConstructError::TowerTooLarge {
                order: usize::MAX,
                cap: MAX_TOWER_ORDER,
            })?;
    }
    Ok(TowerSpec {
        kind: TowerKind::Steiner,
        base: k,
        depth,
        q_factor,
        levels,
        order,
    })
}

/// Parameter sequence for the affine tower: level i uses n_i = q^(2^i - 1)
/// parallel classes of AG_{2^i}(q), so the order is q^(2^depth - 1).
pub fn plan_affine_tower(q: usize, depth: usize) -> Result<TowerSpec, ConstructError> {
    if !(2..=5).contains(&q) {
        return Err(ConstructError::BadTowerParameter {
            what: format!("affine towers support q in 2..=5, got {q}"),
        });
    }
    if depth < 1 {
        return Err(ConstructError::BadTowerParameter {
            what: "depth must be at least 1".into(),
        });
    }
    let mut levels = Vec::new();
    let mut order = q;
    for i in 1..depth {
        let points = order * order * q; // q^(2^i)
        levels.push(TowerLevel {
            regularity: order,
            points,
        });
        order = order
            .checked_mul(points)
            .filter(|&o| o <= MAX_TOWER_ORDER)
            .ok_or(ConstructError::TowerTooLarge {
                order: usize::MAX,
                cap: MAX_TOWER_ORDER,
            })?;
        let _ = i;
    }
    Ok(TowerSpec {
        kind: TowerKind::Affine,
        base: q,
        depth,
        q_factor: 1,
        levels,
        order,
    })
}

fn steiner_design_blocks(k: usize, v: usize) -> Result<Hypergraph, ConstructError> {
    if k == 3 {
        return Ok(steiner_triple(v)?.blocks);
    }
    // beyond triple systems only point-line geometries are generated
    if v == k * k - k + 1 {
        return Ok(projective_plane(k - 1)?.blocks);
    }
    Err(ConstructError::Design(DesignError::DesignUnavailable {
        k,
        v,
    }))
}

/// The Steiner tower S_depth(k): starts from `q_factor` disjoint copies of
/// K_k and applies Γ with S(2,k,v_i) designs. Constant link depth·K_{k-1};
/// connected when q_factor = 1; for k = 3 additionally C4- and C5-free,
/// for k = 4 C5-free.
pub fn steiner_tower(k: usize, depth: usize, q_factor: usize) -> Result<Graph, ConstructError> {
    let spec = plan_steiner_tower(k, depth, q_factor)?;
    let mut g = Graph::disjoint_copies(&Graph::complete(k), q_factor);
    let f = Graph::complete(k);
    for level in &spec.levels {
        let design = steiner_design_blocks(k, level.points)?;
        debug_assert_eq!(design.regularity(), Some(level.regularity));
        g = gamma(&g, &design, &f)?;
    }
    Ok(g)
}

/// The affine tower A_depth(q) built from parallel classes of affine
/// point-line geometries. Order q^(2^depth - 1), constant link
/// depth·K_{q-1}; {C4,C5}-free for q = 3, C5-free for q = 4.
pub fn affine_tower(q: usize, depth: usize) -> Result<Graph, ConstructError> {
    let spec = plan_affine_tower(q, depth)?;
    let mut g = Graph::complete(q);
    let f = Graph::complete(q);
    for (i, level) in spec.levels.iter().enumerate() {
        let dim = 1usize << (i + 1);
        let classes = affine_lines(dim, q)?;
        let design = classes.take_classes(level.regularity)?;
        g = gamma(&g, &design, &f)?;
    }
    Ok(g)
}

/// Level sizes m_i = (k-1)^i (t-1)^(i-1) of the gluing construction, for
/// i = 1..=q.
pub fn glue_level_sizes(t: usize, k: usize, q: usize) -> Vec<usize> {
    let mut sizes = Vec::with_capacity(q);
    let mut m = k - 1;
    for i in 1..=q {
        sizes.push(m);
        if i < q {
            m *= (k - 1) * (t - 1);
        }
    }
    sizes
}

/// Parameters of the tree-gluing construction: `t` trees of cliques of
/// depth `q` with branching `k`, glued along their last levels through the
/// permutation family.
#[derive(Clone, Debug)]
pub struct TreeGlueParams {
    pub t: usize,
    pub k: usize,
    pub q: usize,
    pub family: PermutationFamily,
}

impl TreeGlueParams {
    pub fn level_sizes(&self) -> Vec<usize> {
        glue_level_sizes(self.t, self.k, self.q)
    }

    /// Vertex count of the glued graph: t(1 + Σ m_i) - (t-1)(1 + m_q).
    pub fn expected_order(&self) -> usize {
        let sizes = self.level_sizes();
        let total: usize = sizes.iter().sum();
        let m_q = *sizes.last().unwrap();
        self.t * (1 + total) - (self.t - 1) * (1 + m_q)
    }
}

/// One tree of cliques: K_k at the root, every level-i vertex joined to
/// t-1 fresh copies of K_{k-1}. Returns the graph together with the
/// vertex ids of the last level in their canonical linear order.
fn clique_tree(t: usize, k: usize, q: usize) -> Result<(Graph, Vec<usize>), ConstructError> {
    let mut g = Graph::complete(k);
    let mut level: Vec<usize> = (1..k).collect();
    let bundle = Graph::disjoint_copies(&Graph::complete(k - 1), t - 1);
    for _ in 1..q {
        let before = g.vertex_count();
        g = g.join_over(&level, &bundle)?;
        level = (before..g.vertex_count()).collect();
    }
    Ok((g, level))
}

/// The gluing construction: take `t` copies of the clique tree, identify
/// all roots, and for each j identify the level-q vertices at rank π_i(j)
/// across the copies. Fails if any identification would need a parallel
/// edge (the permutations map clique siblings onto clique siblings).
pub fn tree_glue(p: &TreeGlueParams) -> Result<Graph, ConstructError> {
    if p.t < 2 || p.k < 2 || p.q < 1 {
        return Err(ConstructError::BadGlueParameter {
            what: format!("need t >= 2, k >= 2, q >= 1, got t={}, k={}, q={}", p.t, p.k, p.q),
        });
    }
    let m_q = *p.level_sizes().last().unwrap();
    if p.family.len() != p.t || p.family.ground_size() != m_q {
        return Err(ConstructError::FamilyShapeMismatch {
            expected: p.t,
            found: p.family.len(),
            expected_m: m_q,
            found_m: p.family.ground_size(),
        });
    }
    let (tree, last_level) = clique_tree(p.t, p.k, p.q)?;
    let n1 = tree.vertex_count();
    let total = p.t * n1;

    // union-find over the t disjoint copies
    let mut parent: Vec<usize> = (0..total).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let union = |parent: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        // the merged vertex inherits the smallest participating index
        if ra < rb {
            parent[rb] = ra;
        } else if rb < ra {
            parent[ra] = rb;
        }
    };
    for copy in 1..p.t {
        union(&mut parent, 0, copy * n1);
    }
    for j in 0..m_q {
        let first = last_level[p.family.perm(0)[j]];
        for copy in 1..p.t {
            let v = copy * n1 + last_level[p.family.perm(copy)[j]];
            union(&mut parent, first, v);
        }
    }

    // compact ids in order of first appearance (= smallest member)
    let mut id = vec![usize::MAX; total];
    let mut next = 0usize;
    for v in 0..total {
        let r = find(&mut parent, v);
        if id[r] == usize::MAX {
            id[r] = next;
            next += 1;
        }
        id[v] = id[r];
    }

    let mut seen: BTreeMap<(usize, usize), (usize, usize)> = BTreeMap::new();
    let mut edges = Vec::with_capacity(p.t * tree.edge_count());
    for copy in 0..p.t {
        let off = copy * n1;
        for (u, v) in tree.edge_list() {
            let (mut a, mut b) = (id[off + u], id[off + v]);
            if a > b {
                std::mem::swap(&mut a, &mut b);
            }
            debug_assert_ne!(a, b, "identification created a loop");
            if seen.insert((a, b), (copy, u)).is_some() {
                return Err(ConstructError::IdentificationClash { a, b });
            }
            edges.push((a, b));
        }
    }
    Ok(Graph::new(next, &edges)?)
}

/// Outcome of a certified gluing run.
#[derive(Clone, Debug)]
pub struct CertifiedGlue {
    pub graph: Graph,
    /// Separation parameter of the family that produced the graph.
    pub d_used: usize,
    /// Sub-seed that produced the family.
    pub seed_used: u64,
    /// Cycle lengths found up to g-1 (all must be <= k).
    pub cycle_lengths: Vec<usize>,
}

/// Builds a glued graph certified by direct cycle search to contain no
/// cycle of length h with k < h < g.
///
/// The separation parameter from the gluing analysis, d = max(m_g, t), is
/// usually out of reach of the search floor at desk scale, so candidate d
/// values fall back down the ladder max(m_g,t), max(m_{g-1},t), ..., t.
/// Certification never relies on the separation property: every candidate
/// graph is accepted or rejected by the bounded cycle search alone.
pub fn tree_glue_with_cycle_target(
    t: usize,
    k: usize,
    q: usize,
    g: usize,
    seed: u64,
    max_rounds: usize,
) -> Result<CertifiedGlue, ConstructError> {
    if t < 2 || k < 2 || q < 1 {
        return Err(ConstructError::BadGlueParameter {
            what: format!("need t >= 2, k >= 2, q >= 1, got t={t}, k={k}, q={q}"),
        });
    }
    if g <= k {
        return Err(ConstructError::BadGlueParameter {
            what: format!("target girth {g} must exceed the clique size {k}"),
        });
    }
    let m_q = *glue_level_sizes(t, k, q).last().unwrap();
    let max_rounds = max_rounds.max(1);

    // descending ladder of separation parameters within the search floor
    let mut ladder: Vec<usize> = Vec::new();
    let mut m = 1usize;
    let mut m_values = Vec::new();
    for _ in 1..=g {
        m = m.saturating_mul(if m_values.is_empty() {
            k - 1
        } else {
            (k - 1) * (t - 1)
        });
        m_values.push(m);
    }
    for &mv in m_values.iter().rev() {
        let d = mv.max(t);
        if m_q > 2 * (d + 1) * t && !ladder.contains(&d) {
            ladder.push(d);
        }
    }
    if m_q > 2 * (t + 1) * t && !ladder.contains(&t) {
        ladder.push(t);
    }
    if ladder.is_empty() {
        return Err(ConstructError::BadGlueParameter {
            what: format!("ground set m_q = {m_q} is below the search floor for every usable separation parameter"),
        });
    }

    let mut seeder = SplitMix64::new(seed);
    let mut attempts = 0usize;
    for &d in &ladder {
        for _ in 0..3 {
            attempts += 1;
            let sub_seed = seeder.next_u64();
            let family = match find_separating_permutations(m_q, d, t, sub_seed, max_rounds) {
                Ok(f) => f,
                Err(PermError::SearchExhausted { .. }) => continue,
                Err(e) => return Err(e.into()),
            };
            let params = TreeGlueParams { t, k, q, family };
            let graph = match tree_glue(&params) {
                Ok(g) => g,
                Err(ConstructError::IdentificationClash { .. }) => continue,
                Err(e) => return Err(e),
            };
            let profile = crate::cycles::cycle_lengths_up_to(&graph, g - 1);
            if profile.shortest_in_window(k, g).is_none() {
                return Ok(CertifiedGlue {
                    graph,
                    d_used: d,
                    seed_used: sub_seed,
                    cycle_lengths: profile.lengths_present(),
                });
            }
        }
    }
    Err(ConstructError::NoCertifiedOutput { attempts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::cycle_lengths_up_to;
    use crate::designs::fano;
    use crate::iso::is_isomorphic;

    fn has_constant_link(g: &Graph, l: &Graph, t: usize) -> bool {
        constant_link_multiplicity(g, l) == Some(t)
    }

    #[test]
    fn gamma_of_fano_is_the_depth_two_tower() {
        let k3 = Graph::complete(3);
        let g = gamma(&k3, &fano().blocks, &k3).unwrap();
        assert_eq!(g.vertex_count(), 21);
        assert_eq!(g.edge_count(), 42);
        assert!(g.is_connected());
        assert!(has_constant_link(&g, &Graph::complete(2), 2));
        let profile = cycle_lengths_up_to(&g, 6);
        assert!(profile.has_length(3));
        assert!(!profile.has_length(4));
        assert!(!profile.has_length(5));
        assert!(profile.has_length(6));
    }

    #[test]
    fn gamma_rejects_mismatches() {
        let k3 = Graph::complete(3);
        let k4 = Graph::complete(4);
        assert!(matches!(
            gamma(&k4, &fano().blocks, &k4),
            Err(ConstructError::UniformityMismatch { .. })
        ));
        assert!(matches!(
            gamma(&k4, &fano().blocks, &k3),
            Err(ConstructError::RegularityMismatch { .. })
        ));
        assert!(matches!(
            gamma(&k3, &fano().blocks, &Graph::path(3)),
            Err(ConstructError::SubstituentLink(_))
        ));
    }

    #[test]
    fn gamma_order_is_always_the_product() {
        let k3 = Graph::complete(3);
        let g21 = gamma(&k3, &fano().blocks, &k3).unwrap();
        assert_eq!(g21.vertex_count(), k3.vertex_count() * fano().blocks.vertex_count());
    }

    #[test]
    fn steiner_tower_plans() {
        let plan = plan_steiner_tower(3, 3, 1).unwrap();
        assert_eq!(
            plan.levels,
            vec![
                TowerLevel { regularity: 3, points: 7 },
                TowerLevel { regularity: 21, points: 43 }
            ]
        );
        assert_eq!(plan.order, 903);

        let plan4 = plan_steiner_tower(4, 2, 1).unwrap();
        assert_eq!(plan4.levels, vec![TowerLevel { regularity: 4, points: 13 }]);
        assert_eq!(plan4.order, 52);

        assert!(plan_steiner_tower(6, 2, 1).is_err());
        assert!(matches!(
            plan_steiner_tower(3, 5, 1),
            Err(ConstructError::TowerTooLarge { .. })
        ));
    }

    #[test]
    fn steiner_tower_depth_two() {
        let g = steiner_tower(3, 2, 1).unwrap();
        assert_eq!(g.vertex_count(), 21);
        assert!(has_constant_link(&g, &Graph::complete(2), 2));
        assert!(g.is_connected());
    }

    #[test]
    fn steiner_tower_k4_depth_two() {
        let g = steiner_tower(4, 2, 1).unwrap();
        assert_eq!(g.vertex_count(), 52);
        assert!(has_constant_link(&g, &Graph::complete(3), 2));
        assert!(g.is_connected());
        // C5-free per the window (4, 6)
        let profile = cycle_lengths_up_to(&g, 5);
        assert!(profile.has_length(3));
        assert!(profile.has_length(4));
        assert!(!profile.has_length(5));
    }

    #[test]
    fn steiner_tower_deeper_levels_unavailable_for_k4() {
        assert!(matches!(
            steiner_tower(4, 3, 1),
            Err(ConstructError::Design(DesignError::DesignUnavailable { .. }))
        ));
    }

    #[test]
    fn steiner_tower_with_q_factor() {
        // two disjoint K_3 seeds: order 6·13 with v_1 = 13
        let g = steiner_tower(3, 2, 2).unwrap();
        assert_eq!(g.vertex_count(), 78);
        assert!(has_constant_link(&g, &Graph::complete(2), 2));
    }

    #[test]
    fn affine_tower_base_and_depth_two() {
        let base = affine_tower(3, 1).unwrap();
        assert!(is_isomorphic(&base, &Graph::complete(3)));

        let g = affine_tower(3, 2).unwrap();
        assert_eq!(g.vertex_count(), 27);
        assert!(g.is_connected());
        assert!(has_constant_link(&g, &Graph::complete(2), 2));
        let profile = cycle_lengths_up_to(&g, 5);
        assert!(!profile.has_length(4));
        assert!(!profile.has_length(5));
    }

    #[test]
    fn affine_tower_rejects_bad_parameters() {
        assert!(plan_affine_tower(6, 2).is_err());
        assert!(plan_affine_tower(3, 0).is_err());
        // depth 4 would need AG_8(3), beyond the affine point cap
        assert!(affine_tower(3, 4).is_err());
    }

    #[test]
    fn glue_level_sizes_formula() {
        assert_eq!(glue_level_sizes(2, 3, 3), vec![2, 4, 8]);
        assert_eq!(glue_level_sizes(3, 3, 3), vec![2, 8, 32]);
        assert_eq!(glue_level_sizes(2, 4, 3), vec![3, 9, 27]);
    }

    /// π(j) = (c·j + s) mod m; with c coprime to m these keep clique
    /// siblings apart for the tested shapes.
    fn affine_map_family(m: usize, specs: &[(usize, usize)]) -> PermutationFamily {
        let perms: Vec<Vec<usize>> = specs
            .iter()
            .map(|&(c, s)| (0..m).map(|j| (c * j + s) % m).collect())
            .collect();
        PermutationFamily::new(m, perms).unwrap()
    }

    #[test]
    fn tree_glue_counts_and_links() {
        let cases: Vec<(usize, usize, usize, PermutationFamily)> = vec![
            (2, 3, 3, affine_map_family(8, &[(1, 0), (1, 1)])),
            (2, 3, 4, affine_map_family(16, &[(1, 0), (1, 1)])),
            (3, 3, 3, affine_map_family(32, &[(1, 0), (5, 0), (7, 0)])),
            (2, 4, 3, affine_map_family(27, &[(1, 0), (7, 0)])),
        ];
        for (t, k, q, family) in cases {
            let params = TreeGlueParams { t, k, q, family };
            let g = tree_glue(&params).unwrap();
            assert_eq!(
                g.vertex_count(),
                params.expected_order(),
                "order mismatch for t={t} k={k} q={q}"
            );
            assert!(
                has_constant_link(&g, &Graph::complete(k - 1), t),
                "link mismatch for t={t} k={k} q={q}"
            );
        }
    }

    #[test]
    fn tree_glue_rejects_sibling_collisions() {
        // identity twice: every sibling pair collides
        let family = affine_map_family(8, &[(1, 0), (1, 0)]);
        let params = TreeGlueParams { t: 2, k: 3, q: 3, family };
        assert!(matches!(
            tree_glue(&params),
            Err(ConstructError::IdentificationClash { .. })
        ));
    }

    #[test]
    fn tree_glue_rejects_shape_mismatches() {
        let family = affine_map_family(8, &[(1, 0), (1, 1)]);
        let params = TreeGlueParams { t: 2, k: 3, q: 2, family };
        assert!(matches!(
            tree_glue(&params),
            Err(ConstructError::FamilyShapeMismatch { .. })
        ));
    }

    #[test]
    fn certified_glue_avoids_the_window() {
        let out = tree_glue_with_cycle_target(2, 3, 8, 5, 7, 8).unwrap();
        let profile = cycle_lengths_up_to(&out.graph, 4);
        assert!(!profile.has_length(4));
        assert!(out.cycle_lengths.iter().all(|&l| l <= 3));
        assert!(has_constant_link(&out.graph, &Graph::complete(2), 2));
    }

    #[test]
    fn certified_glue_rejects_vacuous_window() {
        assert!(matches!(
            tree_glue_with_cycle_target(2, 3, 3, 3, 0, 4),
            Err(ConstructError::BadGlueParameter { .. })
        ));
    }
}
