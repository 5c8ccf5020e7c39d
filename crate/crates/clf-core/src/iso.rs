//! Graph isomorphism for small graphs: iterated degree refinement to split
//! vertices into classes, then backtracking restricted to class-compatible
//! candidates. Intended for graphs up to a few dozen vertices (links and
//! link unions); larger inputs are not rejected, merely slow.

use crate::graph::Graph;
use std::collections::BTreeMap;

/// Stable vertex classes under iterated neighborhood-label refinement.
/// Two isomorphic graphs get identical class signatures.
fn refine_classes(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut labels: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let mut sigs: Vec<(usize, Vec<usize>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut nbr: Vec<usize> = g.neighbors(v).iter().map(|&w| labels[w]).collect();
            nbr.sort_unstable();
            sigs.push((labels[v], nbr));
        }
        // class ids assigned in sorted-signature order so they are
        // canonical across relabelings of the same graph
        let mut dict: BTreeMap<&(usize, Vec<usize>), usize> = BTreeMap::new();
        for sig in &sigs {
            dict.insert(sig, 0);
        }
        for (next, (_, id)) in dict.iter_mut().enumerate() {
            *id = next;
        }
        let new_labels: Vec<usize> = sigs.iter().map(|s| dict[s]).collect();
        let stable = {
            // partition unchanged when the number of classes stops growing
            let old_classes = {
                let mut u = labels.clone();
                u.sort_unstable();
                u.dedup();
                u.len()
            };
            dict.len() == old_classes
        };
        labels = new_labels;
        if stable {
            return labels;
        }
    }
}

fn class_histogram(labels: &[usize]) -> Vec<usize> {
    let mut h: Vec<usize> = labels.to_vec();
    h.sort_unstable();
    h
}

/// True iff an edge-preserving bijection between the two graphs exists.
pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    let n = g1.vertex_count();
    if n != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return false;
    }
    if n == 0 {
        return true;
    }
    let mut d1: Vec<usize> = (0..n).map(|v| g1.degree(v)).collect();
    let mut d2: Vec<usize> = (0..n).map(|v| g2.degree(v)).collect();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return false;
    }

    // refinement classes must match as multisets; they also prune the search
    let c1 = refine_classes(g1);
    let c2 = refine_classes(g2);
    if class_histogram(&c1) != class_histogram(&c2) {
        return false;
    }

    // map vertices of g1 in an order that keeps the partial map connected
    // where possible: rarest class first, then prefer vertices adjacent to
    // already-mapped ones.
    let mut class_size = BTreeMap::new();
    for &c in &c1 {
        *class_size.entry(c).or_insert(0usize) += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (class_size[&c1[v]], c1[v], v));
    let mut arranged: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while arranged.len() < n {
        let next = order
            .iter()
            .copied()
            .filter(|&v| !placed[v])
            .min_by_key(|&v| {
                let touching = g1.neighbors(v).iter().any(|&w| placed[w]);
                (!touching, class_size[&c1[v]], v)
            })
            .unwrap();
        placed[next] = true;
        arranged.push(next);
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    backtrack(g1, g2, &c1, &c2, &arranged, 0, &mut map, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    g1: &Graph,
    g2: &Graph,
    c1: &[usize],
    c2: &[usize],
    order: &[usize],
    depth: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    'cand: for w in 0..g2.vertex_count() {
        if used[w] || c2[w] != c1[v] || g2.degree(w) != g1.degree(v) {
            continue;
        }
        for &u in g1.neighbors(v) {
            if map[u] != usize::MAX && !g2.has_edge(w, map[u]) {
                continue 'cand;
            }
        }
        // non-edges to mapped vertices must stay non-edges; with equal
        // degrees it suffices to count mapped neighbors on both sides
        let mapped_nbrs_v = g1.neighbors(v).iter().filter(|&&u| map[u] != usize::MAX).count();
        let mapped_nbrs_w = g2
            .neighbors(w)
            .iter()
            .filter(|&&x| used[x])
            .count();
        if mapped_nbrs_v != mapped_nbrs_w {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if backtrack(g1, g2, c1, c2, order, depth + 1, map, used) {
            return true;
        }
        map[v] = usize::MAX;
        used[w] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    fn k_1_3() -> Graph {
        Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn four_cycle_is_k22() {
        let c4 = Graph::cycle(4);
        let k22 = Graph::new(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(is_isomorphic(&c4, &k22));
    }

    #[test]
    fn distinguishes_triangle_from_path() {
        assert!(!is_isomorphic(&Graph::complete(3), &Graph::path(3)));
    }

    #[test]
    fn equal_degree_sequences_different_structure() {
        let two_k2 = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!is_isomorphic(&two_k2, &Graph::path(4)));
        assert!(!is_isomorphic(&k_1_3(), &Graph::path(4)));
    }

    fn random_graph(rng: &mut SplitMix64, n: usize, density_percent: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.below(100) < density_percent {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        let edges: Vec<(usize, usize)> = g
            .edge_list()
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::new(g.vertex_count(), &edges).unwrap()
    }

    #[test]
    fn equivalence_relation_on_random_corpus() {
        let mut rng = SplitMix64::new(0xA11CE);
        for trial in 0..60 {
            let n = 4 + trial % 5; // up to 8 vertices
            let g = random_graph(&mut rng, n, 40);
            let h = relabel(&g, &rng.permutation(n));
            // reflexive, symmetric on a relabeled copy
            assert!(is_isomorphic(&g, &g));
            assert!(is_isomorphic(&g, &h));
            assert!(is_isomorphic(&h, &g));
        }
    }

    #[test]
    fn agrees_with_invariant_fingerprints() {
        // degree sequence + triangle count agreeing is necessary, and on a
        // random corpus a fingerprint mismatch must force non-isomorphism
        fn triangles(g: &Graph) -> usize {
            let n = g.vertex_count();
            let mut t = 0;
            for u in 0..n {
                for &v in g.neighbors(u) {
                    if v <= u {
                        continue;
                    }
                    for &w in g.neighbors(v) {
                        if w > v && g.has_edge(u, w) {
                            t += 1;
                        }
                    }
                }
            }
            t
        }
        let mut rng = SplitMix64::new(0xBEE);
        for _ in 0..80 {
            let g = random_graph(&mut rng, 7, 45);
            let h = random_graph(&mut rng, 7, 45);
            if is_isomorphic(&g, &h) {
                let mut dg: Vec<usize> = (0..7).map(|v| g.degree(v)).collect();
                let mut dh: Vec<usize> = (0..7).map(|v| h.degree(v)).collect();
                dg.sort_unstable();
                dh.sort_unstable();
                assert_eq!(dg, dh);
                assert_eq!(triangles(&g), triangles(&h));
            }
        }
    }
}
