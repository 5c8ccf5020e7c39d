//! Cycle machinery: bounded-length cycle search with stored witnesses,
//! exact circumference for small graphs, and BFS girth with a witness cycle.
//!
//! The bounded search is a depth-limited DFS from each start vertex that
//! only counts cycles whose minimum vertex is the start, so every cycle is
//! discovered exactly once per orientation and the first witness recorded
//! for a length is deterministic.

use crate::graph::{Graph, GraphError};
use std::collections::BTreeMap;

/// Which cycle lengths exist up to a search bound, with one witness each.
#[derive(Clone, Debug)]
pub struct CycleProfile {
    search_bound: usize,
    witnesses: BTreeMap<usize, Vec<usize>>,
}

impl CycleProfile {
    pub fn search_bound(&self) -> usize {
        self.search_bound
    }

    pub fn has_length(&self, len: usize) -> bool {
        self.witnesses.contains_key(&len)
    }

    pub fn lengths_present(&self) -> Vec<usize> {
        self.witnesses.keys().copied().collect()
    }

    /// Witness vertex sequence for a present length (cycle closes back to
    /// the first vertex).
    pub fn witness(&self, len: usize) -> Option<&[usize]> {
        self.witnesses.get(&len).map(|w| w.as_slice())
    }

    /// Shortest cycle length found within the bound.
    pub fn girth_within_bound(&self) -> Option<usize> {
        self.witnesses.keys().next().copied()
    }

    /// Smallest present length in the open window `(lo, hi)`.
    pub fn shortest_in_window(&self, lo: usize, hi: usize) -> Option<usize> {
        self.witnesses
            .keys()
            .copied()
            .find(|&l| l > lo && l < hi)
    }
}

struct BoundedSearch<'a> {
    g: &'a Graph,
    bound: usize,
    on_path: Vec<bool>,
    path: Vec<usize>,
    witnesses: BTreeMap<usize, Vec<usize>>,
}

impl BoundedSearch<'_> {
    fn complete(&self) -> bool {
        self.witnesses.len() == self.bound.saturating_sub(2)
    }

    fn explore(&mut self, start: usize) {
        let u = *self.path.last().unwrap();
        for &w in self.g.neighbors(u) {
            if w == start && self.path.len() >= 3 {
                self.witnesses
                    .entry(self.path.len())
                    .or_insert_with(|| self.path.clone());
                if self.complete() {
                    return;
                }
            }
            if w > start && !self.on_path[w] && self.path.len() < self.bound {
                self.path.push(w);
                self.on_path[w] = true;
                self.explore(start);
                self.on_path[w] = false;
                self.path.pop();
                if self.complete() {
                    return;
                }
            }
        }
    }
}

/// All cycle lengths `3 <= l <= bound` present in `g`, each with a witness.
pub fn cycle_lengths_up_to(g: &Graph, bound: usize) -> CycleProfile {
    assert!(bound >= 3, "cycle search bound must be at least 3");
    let mut search = BoundedSearch {
        g,
        bound,
        on_path: vec![false; g.vertex_count()],
        path: Vec::with_capacity(bound),
        witnesses: BTreeMap::new(),
    };
    for s in 0..g.vertex_count() {
        search.path.clear();
        search.path.push(s);
        search.on_path[s] = true;
        search.explore(s);
        search.on_path[s] = false;
        if search.complete() {
            break;
        }
    }
    CycleProfile {
        search_bound: bound,
        witnesses: search.witnesses,
    }
}

/// Witness cycle of length exactly `len`, if one exists. Same canonical DFS
/// as the profile search but pruned to a single target length.
pub fn find_cycle_of_length(g: &Graph, len: usize) -> Option<Vec<usize>> {
    assert!(len >= 3);
    fn dfs(g: &Graph, start: usize, len: usize, on_path: &mut [bool], path: &mut Vec<usize>) -> bool {
        let u = *path.last().unwrap();
        for &w in g.neighbors(u) {
            if w == start && path.len() == len {
                return true;
            }
            if w > start && !on_path[w] && path.len() < len {
                path.push(w);
                on_path[w] = true;
                if dfs(g, start, len, on_path, path) {
                    return true;
                }
                on_path[w] = false;
                path.pop();
            }
        }
        false
    }
    let mut on_path = vec![false; g.vertex_count()];
    let mut path = Vec::with_capacity(len);
    for s in 0..g.vertex_count() {
        path.clear();
        path.push(s);
        on_path[s] = true;
        if dfs(g, s, len, &mut on_path, &mut path) {
            return Some(path);
        }
        on_path[s] = false;
    }
    None
}

/// Length of a longest cycle, or `None` for forests. Exact via a
/// subset-DP over endpoints, hard-capped at 16 vertices.
pub fn circumference_small(g: &Graph) -> Result<Option<usize>, GraphError> {
    const CAP: usize = 16;
    let n = g.vertex_count();
    if n > CAP {
        return Err(GraphError::TooLarge {
            op: "circumference_small",
            cap: CAP,
            n,
        });
    }
    if n < 3 {
        return Ok(None);
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let mut best = 0usize;
    // cycles are counted at their minimum vertex s; reachable[mask] is the
    // set of endpoints of simple paths from s covering exactly `mask`
    let mut reachable = vec![0u32; 1 << n];
    for s in 0..n {
        let allowed: u32 = !0u32 << s; // vertices >= s
        for m in reachable.iter_mut() {
            *m = 0;
        }
        reachable[1 << s] = 1 << s;
        for mask in (1u32 << s)..(1u32 << n) {
            if mask & (1 << s) == 0 {
                continue;
            }
            let ends = reachable[mask as usize];
            if ends == 0 {
                continue;
            }
            let count = mask.count_ones() as usize;
            if count >= 3 {
                let closing = ends & adj[s];
                if closing != 0 && count > best {
                    best = count;
                }
            }
            let mut t = ends;
            while t != 0 {
                let v = t.trailing_zeros() as usize;
                t &= t - 1;
                let mut ext = adj[v] & allowed & !mask;
                while ext != 0 {
                    let w = ext.trailing_zeros() as usize;
                    ext &= ext - 1;
                    reachable[(mask | 1 << w) as usize] |= 1 << w;
                }
            }
        }
    }
    Ok(if best >= 3 { Some(best) } else { None })
}

/// Girth with a witness cycle, by BFS from every vertex. Returns `None`
/// for acyclic graphs. The witness is a shortest cycle.
pub fn girth_with_witness(g: &Graph) -> Option<(usize, Vec<usize>)> {
    let n = g.vertex_count();
    let mut best_len = usize::MAX;
    let mut best_cycle: Option<Vec<usize>> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        for d in dist.iter_mut() {
            *d = usize::MAX;
        }
        for p in parent.iter_mut() {
            *p = usize::MAX;
        }
        dist[s] = 0;
        let mut queue = vec![s];
        let mut head = 0;
        let radius = best_len / 2 + 1;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            if dist[u] >= radius {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push(w);
                } else if parent[u] != w && parent[w] != u {
                    let len = dist[u] + dist[w] + 1;
                    if len < best_len {
                        // the two root paths are internally disjoint at a
                        // global minimum, otherwise a shorter cycle exists
                        let mut left = path_to_root(&parent, u);
                        let right = path_to_root(&parent, w);
                        if internally_disjoint(&left, &right) {
                            left.reverse(); // s .. u
                            let mut cyc = left;
                            cyc.extend(right.into_iter().take_while(|&x| x != s));
                            best_len = len;
                            best_cycle = Some(cyc);
                        }
                    }
                }
            }
        }
    }
    best_cycle.map(|c| (best_len, c))
}

fn path_to_root(parent: &[usize], mut v: usize) -> Vec<usize> {
    let mut p = vec![v];
    while parent[v] != usize::MAX {
        v = parent[v];
        p.push(v);
    }
    p
}

fn internally_disjoint(a: &[usize], b: &[usize]) -> bool {
    // both end at the BFS root; nothing else may repeat
    let root = *a.last().unwrap();
    let mut seen: Vec<usize> = a.iter().chain(b.iter()).copied().collect();
    seen.sort_unstable();
    let total = seen.len();
    seen.dedup();
    total - seen.len() == 1 && a.last() == b.last() && root == *b.last().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    #[test]
    fn profile_of_c5() {
        let p = cycle_lengths_up_to(&Graph::cycle(5), 6);
        assert_eq!(p.lengths_present(), vec![5]);
        let w = p.witness(5).unwrap();
        assert_eq!(w.len(), 5);
    }

    #[test]
    fn profile_of_k4() {
        let p = cycle_lengths_up_to(&Graph::complete(4), 4);
        assert_eq!(p.lengths_present(), vec![3, 4]);
    }

    #[test]
    fn witnesses_are_real_cycles() {
        let g = Graph::cartesian_product(&[&Graph::complete(3), &Graph::complete(3)]).unwrap();
        let p = cycle_lengths_up_to(&g, 6);
        for len in p.lengths_present() {
            let w = p.witness(len).unwrap();
            assert_eq!(w.len(), len);
            for i in 0..len {
                assert!(g.has_edge(w[i], w[(i + 1) % len]));
            }
            let mut sorted = w.to_vec();
            sorted.sort_unstable();
            sorted.dedup();
            assert_eq!(sorted.len(), len);
        }
    }

    #[test]
    fn exact_length_search() {
        let c6 = Graph::cycle(6);
        assert!(find_cycle_of_length(&c6, 6).is_some());
        assert!(find_cycle_of_length(&c6, 4).is_none());
        assert!(find_cycle_of_length(&c6, 3).is_none());
    }

    #[test]
    fn circumference_examples() {
        assert_eq!(circumference_small(&Graph::complete(4)).unwrap(), Some(4));
        assert_eq!(circumference_small(&Graph::path(5)).unwrap(), None);
        assert_eq!(circumference_small(&Graph::complete(5)).unwrap(), Some(5));
        assert!(circumference_small(&Graph::empty(17)).is_err());
        // two triangles sharing a vertex: longest cycle is still 3
        let bowtie = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(circumference_small(&bowtie).unwrap(), Some(3));
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth_with_witness(&Graph::cycle(7)).unwrap().0, 7);
        assert!(girth_with_witness(&Graph::path(6)).is_none());
        let (g, w) = girth_with_witness(&Graph::complete(4)).unwrap();
        assert_eq!(g, 3);
        assert_eq!(w.len(), 3);
    }

    /// Reference enumeration with no canonical-start pruning: walks every
    /// simple path and records closures. Independent of the production DFS.
    fn naive_cycle_lengths(g: &Graph, bound: usize) -> Vec<usize> {
        fn walk(
            g: &Graph,
            start: usize,
            on_path: &mut Vec<bool>,
            path: &mut Vec<usize>,
            bound: usize,
            found: &mut Vec<bool>,
        ) {
            let u = *path.last().unwrap();
            for &w in g.neighbors(u) {
                if w == start && path.len() >= 3 {
                    found[path.len()] = true;
                }
                if !on_path[w] && path.len() < bound {
                    on_path[w] = true;
                    path.push(w);
                    walk(g, start, on_path, path, bound, found);
                    path.pop();
                    on_path[w] = false;
                }
            }
        }
        let n = g.vertex_count();
        let mut found = vec![false; bound + 1];
        for s in 0..n {
            let mut on_path = vec![false; n];
            on_path[s] = true;
            let mut path = vec![s];
            walk(g, s, &mut on_path, &mut path, bound, &mut found);
        }
        (3..=bound).filter(|&l| found[l]).collect()
    }

    fn graph_from_mask(n: usize, mask: u32) -> Graph {
        let mut edges = Vec::new();
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask & (1 << bit) != 0 {
                    edges.push((u, v));
                }
                bit += 1;
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn profile_matches_naive_enumeration_exhaustively_to_5() {
        for n in 3..=5usize {
            let pairs = n * (n - 1) / 2;
            for mask in 0..(1u32 << pairs) {
                let g = graph_from_mask(n, mask);
                let profile = cycle_lengths_up_to(&g, n);
                assert_eq!(
                    profile.lengths_present(),
                    naive_cycle_lengths(&g, n),
                    "mismatch on n={n} mask={mask}"
                );
            }
        }
    }

    #[test]
    fn profile_matches_naive_enumeration_sampled_6_7() {
        let mut rng = SplitMix64::new(0x5EED);
        for n in 6..=7usize {
            let pairs = n * (n - 1) / 2;
            for _ in 0..300 {
                let mask = (rng.next_u64() as u32) & ((1u32 << pairs) - 1);
                let g = graph_from_mask(n, mask);
                assert_eq!(
                    cycle_lengths_up_to(&g, n).lengths_present(),
                    naive_cycle_lengths(&g, n)
                );
            }
        }
    }

    #[test]
    fn girth_matches_profile_on_random_graphs() {
        let mut rng = SplitMix64::new(0xC1C1E);
        for _ in 0..200 {
            let n = 5 + rng.below(4);
            let pairs = n * (n - 1) / 2;
            let mask = (rng.next_u64() as u32) & ((1u32 << pairs) - 1);
            let g = graph_from_mask(n, mask);
            let via_bfs = girth_with_witness(&g).map(|(l, _)| l);
            let via_profile = cycle_lengths_up_to(&g, n).girth_within_bound();
            assert_eq!(via_bfs, via_profile);
        }
    }
}
