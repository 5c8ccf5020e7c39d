//! The correspondence between graphs of constant link tK_{k-1}, t-regular
//! k-uniform hypergraphs of girth at least 4, and biregular bipartite
//! incidence graphs — clique expansion, clique contraction, incidence
//! inversion — together with link substitution (placing a smaller
//! constant-link graph on every clique) and family classification.

use crate::cycles::cycle_lengths_up_to;
use crate::graph::{Graph, GraphError};
use crate::hypergraph::{Hypergraph, HypergraphError};
use crate::iso::is_isomorphic;
use crate::rng::SplitMix64;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("hypergraph is not linear: two edges share at least two vertices")]
    NotLinear,
    #[error("vertex {vertex} breaks the constant-link requirement")]
    NotConstantLink { vertex: usize },
    #[error("two {k}-cliques share {shared} vertices; contraction is not defined")]
    CliqueOverlap { k: usize, shared: usize },
    #[error("graph is not bipartite under the declared split at {left_size}")]
    NotBipartiteSplit { left_size: usize },
    #[error("link substitution needs a graph on exactly {expected} vertices, got {got}")]
    WrongSubstituentOrder { expected: usize, got: usize },
    #[error("parameter out of range: {what}")]
    BadParameter { what: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

/// The common link of `g`, i.e. the link of vertex 0 once all links are
/// verified mutually isomorphic.
pub fn common_link(g: &Graph) -> Result<Graph, FamilyError> {
    if g.vertex_count() == 0 {
        return Err(FamilyError::BadParameter {
            what: "empty graph has no link".into(),
        });
    }
    let first = g.link_of(0)?;
    for v in 1..g.vertex_count() {
        if !is_isomorphic(&g.link_of(v)?, &first) {
            return Err(FamilyError::NotConstantLink { vertex: v });
        }
    }
    Ok(first)
}

/// If every link of `g` is `t` disjoint copies of `l` for one fixed `t >= 1`,
/// returns that `t`.
pub fn constant_link_multiplicity(g: &Graph, l: &Graph) -> Option<usize> {
    if g.vertex_count() == 0 || l.vertex_count() == 0 {
        return None;
    }
    let unit = l.vertex_count();
    let deg0 = g.degree(0);
    if deg0 == 0 || deg0 % unit != 0 {
        return None;
    }
    let t = deg0 / unit;
    let reference = Graph::disjoint_copies(l, t);
    for v in 0..g.vertex_count() {
        if g.degree(v) != deg0 {
            return None;
        }
        let link = g.link_of(v).ok()?;
        if !is_isomorphic(&link, &reference) {
            return None;
        }
    }
    Some(t)
}

/// φ: replaces every hyperedge by a clique on its vertices. Requires a
/// linear input (otherwise overlapping edges would merge cliques).
pub fn expand_to_cliques(h: &Hypergraph) -> Result<Graph, FamilyError> {
    if !h.is_linear() {
        return Err(FamilyError::NotLinear);
    }
    let mut edges = Vec::new();
    for e in h.edges() {
        for (i, &a) in e.iter().enumerate() {
            for &b in &e[i + 1..] {
                edges.push((a, b));
            }
        }
    }
    Ok(Graph::new(h.vertex_count(), &edges)?)
}

/// φ⁻¹: verifies `g` has constant link tK_{k-1} and returns the hypergraph
/// whose edges are exactly the k-cliques of `g`. Under the link condition
/// every k-clique is {v} ∪ (a component of the link of v), so cliques are
/// enumerated per vertex and deduplicated rather than searched for
/// generically; two cliques sharing two vertices would contradict the link
/// condition and are reported as an integrity error.
pub fn contract_cliques(g: &Graph, k: usize) -> Result<Hypergraph, FamilyError> {
    if k < 2 {
        return Err(FamilyError::BadParameter {
            what: format!("clique size {k} < 2"),
        });
    }
    let mut t_common: Option<usize> = None;
    let mut cliques: BTreeSet<Vec<usize>> = BTreeSet::new();
    for v in 0..g.vertex_count() {
        let nbrs = g.neighbors(v);
        let link = g.link_of(v)?;
        let comps = link.components();
        if comps.is_empty() {
            return Err(FamilyError::NotConstantLink { vertex: v });
        }
        match t_common {
            None => t_common = Some(comps.len()),
            Some(t) if t == comps.len() => {}
            Some(_) => return Err(FamilyError::NotConstantLink { vertex: v }),
        }
        for comp in comps {
            if comp.len() != k - 1 {
                return Err(FamilyError::NotConstantLink { vertex: v });
            }
            for (i, &a) in comp.iter().enumerate() {
                for &b in &comp[i + 1..] {
                    if !link.has_edge(a, b) {
                        return Err(FamilyError::NotConstantLink { vertex: v });
                    }
                }
            }
            let mut clique: Vec<usize> = comp.iter().map(|&i| nbrs[i]).collect();
            clique.push(v);
            clique.sort_unstable();
            cliques.insert(clique);
        }
    }
    let cliques: Vec<Vec<usize>> = cliques.into_iter().collect();
    for (i, a) in cliques.iter().enumerate() {
        for b in &cliques[i + 1..] {
            let shared = a.iter().filter(|x| b.binary_search(x).is_ok()).count();
            if shared >= 2 {
                return Err(FamilyError::CliqueOverlap { k, shared });
            }
        }
    }
    Ok(Hypergraph::new(g.vertex_count(), &cliques)?)
}

/// ι⁻¹: reads a bipartite graph as an incidence structure. The first
/// `left_size` indices become hypergraph vertices, every remaining vertex
/// becomes one hyperedge (its neighborhood). Simple hypergraphs only:
/// duplicate or trivial edges are rejected.
pub fn from_incidence(b: &Graph, left_size: usize) -> Result<Hypergraph, FamilyError> {
    if left_size > b.vertex_count() {
        return Err(FamilyError::BadParameter {
            what: format!(
                "left size {left_size} exceeds vertex count {}",
                b.vertex_count()
            ),
        });
    }
    for u in 0..b.vertex_count() {
        for &w in b.neighbors(u) {
            if (u < left_size) == (w < left_size) {
                return Err(FamilyError::NotBipartiteSplit { left_size });
            }
        }
    }
    let edges: Vec<Vec<usize>> = (left_size..b.vertex_count())
        .map(|r| b.neighbors(r).to_vec())
        .collect();
    Ok(Hypergraph::new(left_size, &edges)?)
}

/// Places `f` on every k-clique of `g` (which must have constant link
/// tK_{k-1}) via the order-preserving bijection from `f`'s vertex order to
/// the clique's sorted vertex order, and drops all other edges. With `f` of
/// constant link L the result has constant link tL.
pub fn substitute_link(g: &Graph, k: usize, f: &Graph) -> Result<Graph, FamilyError> {
    substitute_link_inner(g, k, f, None)
}

/// Same as [`substitute_link`] but rotating the embedding of each clique by
/// a seeded amount. Different bijections can yield non-isomorphic outputs;
/// this exposes that degree of freedom for experiments while keeping runs
/// reproducible.
pub fn substitute_link_with_rotations(
    g: &Graph,
    k: usize,
    f: &Graph,
    seed: u64,
) -> Result<Graph, FamilyError> {
    substitute_link_inner(g, k, f, Some(SplitMix64::new(seed)))
}

fn substitute_link_inner(
    g: &Graph,
    k: usize,
    f: &Graph,
    mut rng: Option<SplitMix64>,
) -> Result<Graph, FamilyError> {
    if f.vertex_count() != k {
        return Err(FamilyError::WrongSubstituentOrder {
            expected: k,
            got: f.vertex_count(),
        });
    }
    common_link(f)?;
    let cliques = contract_cliques(g, k)?;
    let mut edges = Vec::new();
    for clique in cliques.edges() {
        let rot = match rng.as_mut() {
            Some(r) => r.below(k),
            None => 0,
        };
        for (a, b) in f.edge_list() {
            edges.push((clique[(a + rot) % k], clique[(b + rot) % k]));
        }
    }
    Ok(Graph::new(g.vertex_count(), &edges)?)
}

/// Structure being classified.
pub enum Structure<'a> {
    Graph(&'a Graph),
    Hypergraph(&'a Hypergraph),
}

/// Measured girth class of a family member.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GirthClass {
    /// Shortest relevant cycle has exactly this length.
    Finite(usize),
    /// No relevant cycle up to the search bound.
    AtLeast(usize),
    /// No cycle at all (hypergraph case).
    Acyclic,
}

/// Membership flags for the constant-link graph family (tK_{k-1} links),
/// the hypergraph family (t-regular, k-uniform, girth >= 4) and the
/// bipartite family (biregular degrees (k,t), girth >= 8), plus the
/// measured refinement class.
#[derive(Clone, Debug)]
pub struct FamilyMembership {
    pub k: usize,
    pub t: usize,
    pub search_bound: usize,
    pub in_link_family: bool,
    pub in_hypergraph_family: bool,
    pub in_bipartite_family: bool,
    pub girth_class: Option<GirthClass>,
}

/// Classifies a graph or hypergraph against the (k,t) families. For graphs
/// the girth class counts only cycles not contained in a single k-clique,
/// searched up to `search_bound`; for hypergraphs it is the exact Berge
/// girth.
pub fn classify_families(
    x: Structure<'_>,
    k: usize,
    t: usize,
    search_bound: usize,
) -> Result<FamilyMembership, FamilyError> {
    if search_bound < k + 1 {
        return Err(FamilyError::BadParameter {
            what: format!("search bound {search_bound} below k+1 = {}", k + 1),
        });
    }
    let mut out = FamilyMembership {
        k,
        t,
        search_bound,
        in_link_family: false,
        in_hypergraph_family: false,
        in_bipartite_family: false,
        girth_class: None,
    };
    match x {
        Structure::Graph(g) => {
            if k >= 2 {
                let l = Graph::complete(k - 1);
                if constant_link_multiplicity(g, &l) == Some(t) {
                    out.in_link_family = true;
                    out.girth_class = Some(graph_girth_class(g, k, search_bound)?);
                }
            }
            if !out.in_link_family {
                if let Some(class) = bipartite_biregular(g, k, t) {
                    let profile = cycle_lengths_up_to(g, search_bound);
                    let girth = profile.girth_within_bound();
                    if girth.map_or(true, |l| l >= 8) {
                        out.in_bipartite_family = true;
                        out.girth_class = Some(match girth {
                            Some(l) => GirthClass::Finite(l),
                            None => GirthClass::AtLeast(search_bound + 1),
                        });
                    }
                    let _ = class;
                }
            }
        }
        Structure::Hypergraph(h) => {
            let girth = h.berge_girth().girth();
            let regular_uniform =
                h.uniformity() == Some(k) && h.regularity() == Some(t);
            if regular_uniform && girth.map_or(true, |g| g >= 4) {
                out.in_hypergraph_family = true;
            }
            out.girth_class = Some(match girth {
                Some(g) => GirthClass::Finite(g),
                None => GirthClass::Acyclic,
            });
        }
    }
    Ok(out)
}

fn bipartite_biregular(g: &Graph, k: usize, t: usize) -> Option<(Vec<u8>, bool)> {
    let side = g.bipartition()?;
    let mut deg_by_side = [BTreeSet::new(), BTreeSet::new()];
    for v in 0..g.vertex_count() {
        deg_by_side[side[v] as usize].insert(g.degree(v));
    }
    let d0: Vec<usize> = deg_by_side[0].iter().copied().collect();
    let d1: Vec<usize> = deg_by_side[1].iter().copied().collect();
    if d0.len() != 1 || d1.len() != 1 {
        return None;
    }
    if (d0[0], d1[0]) == (k, t) || (d0[0], d1[0]) == (t, k) {
        Some((side, d0[0] == k))
    } else {
        None
    }
}

/// Shortest cycle not contained in a single k-clique, up to the bound. A
/// cycle of length <= k counts as clique-contained when its vertex set lies
/// inside one enumerated k-clique.
fn graph_girth_class(g: &Graph, k: usize, bound: usize) -> Result<GirthClass, FamilyError> {
    let cliques = contract_cliques(g, k)?;
    let profile = cycle_lengths_up_to(g, bound);
    for len in profile.lengths_present() {
        let witness = profile.witness(len).expect("present length has witness");
        if len > k || !inside_some_clique(witness, &cliques) {
            return Ok(GirthClass::Finite(len));
        }
    }
    Ok(GirthClass::AtLeast(bound + 1))
}

fn inside_some_clique(cycle: &[usize], cliques: &Hypergraph) -> bool {
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    cliques
        .edges()
        .iter()
        .any(|c| sorted.iter().all(|v| c.binary_search(v).is_ok()))
}
