//! Separating permutation families: collections of cyclic permutations of
//! `[m]` in which any two elements are cyclically close (distance <= d) in
//! at most one member.
//!
//! The probabilistic existence bound (m greater than 10(d+1)^8) is far too
//! conservative to instantiate at desk scale, so the search here is seeded
//! rejection sampling plus local repair, followed by full verification.
//! Expected doubly-close pairs for random permutations are about 2d² per
//! permutation pair independent of m, so pure rejection cannot succeed for
//! large d — the repair loop is what makes moderate d feasible.

use crate::rng::SplitMix64;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("permutation {index} is not a bijection on [{m}]")]
    NotABijection { index: usize, m: usize },
    #[error("ground set {m} too small: need m > 2(d+1)*count = {floor}")]
    SearchFloor { m: usize, floor: usize },
    #[error("parameter out of range: {what}")]
    BadParameter { what: String },
    #[error("no verified family found after {rounds} rounds")]
    SearchExhausted { rounds: usize },
}

/// A family of bijections [m] -> [m], read as placements on a cycle of
/// length m: `perms[l][x]` is the position of element `x` under the l-th
/// permutation.
#[derive(Clone, Debug)]
pub struct PermutationFamily {
    m: usize,
    perms: Vec<Vec<usize>>,
    /// The `d` this family was verified against, when it came out of the
    /// search; hand-built families carry `None`.
    pub separation_d: Option<usize>,
}

impl PermutationFamily {
    pub fn new(m: usize, perms: Vec<Vec<usize>>) -> Result<Self, PermError> {
        for (index, p) in perms.iter().enumerate() {
            if p.len() != m {
                return Err(PermError::NotABijection { index, m });
            }
            let mut seen = vec![false; m];
            for &x in p {
                if x >= m || seen[x] {
                    return Err(PermError::NotABijection { index, m });
                }
                seen[x] = true;
            }
        }
        Ok(PermutationFamily {
            m,
            perms,
            separation_d: None,
        })
    }

    pub fn ground_size(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    pub fn perm(&self, l: usize) -> &[usize] {
        &self.perms[l]
    }

    /// Cyclic distance of two elements under permutation `l`.
    pub fn dist(&self, l: usize, x: usize, y: usize) -> usize {
        let (i, j) = (self.perms[l][x], self.perms[l][y]);
        let diff = i.abs_diff(j);
        diff.min(self.m - diff)
    }
}

/// Pairs within cyclic distance `d` in two or more permutations, reported
/// as (x, y, first permutation, second permutation), deterministic order.
fn violations(fam: &PermutationFamily, d: usize) -> Vec<(usize, usize, usize, usize)> {
    let m = fam.m;
    let mut first_seen: HashMap<(usize, usize), usize> = HashMap::new();
    let mut out = Vec::new();
    for l in 0..fam.perms.len() {
        let mut inverse = vec![0usize; m];
        for (x, &p) in fam.perms[l].iter().enumerate() {
            inverse[p] = x;
        }
        for pos in 0..m {
            for off in 1..=d.min(m.saturating_sub(1) / 2 + 1) {
                let (a, b) = (inverse[pos], inverse[(pos + off) % m]);
                if a == b {
                    continue;
                }
                let key = (a.min(b), a.max(b));
                // same pair can show up twice within one permutation when
                // d is large relative to m; only cross-permutation
                // repetitions count
                match first_seen.get(&key) {
                    None => {
                        first_seen.insert(key, l);
                    }
                    Some(&l0) if l0 != l => out.push((key.0, key.1, l0, l)),
                    Some(_) => {}
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup_by_key(|v| (v.0, v.1));
    out
}

/// True iff no pair of elements is within cyclic distance `d` in two or
/// more permutations. Exhaustive over the O(m·d) close pairs per
/// permutation.
pub fn verify_separation(fam: &PermutationFamily, d: usize) -> bool {
    violations(fam, d).is_empty()
}

/// Searches for `count` permutations of `[m]` verified to separate at
/// distance `d`: seeded random permutations, then iterative local repair
/// (swap one endpoint of a violating pair with an element far from the
/// other endpoint), then full verification. Deterministic per seed.
pub fn find_separating_permutations(
    m: usize,
    d: usize,
    count: usize,
    seed: u64,
    max_rounds: usize,
) -> Result<PermutationFamily, PermError> {
    if count < 2 || d < 1 {
        return Err(PermError::BadParameter {
            what: format!("need count >= 2 and d >= 1, got count={count}, d={d}"),
        });
    }
    let floor = 2 * (d + 1) * count;
    if m <= floor {
        return Err(PermError::SearchFloor { m, floor });
    }
    let mut rng = SplitMix64::new(seed);
    let repair_budget = (64 + 16 * d * d * count * count).min(2000);
    for _ in 0..max_rounds {
        let mut fam = PermutationFamily {
            m,
            perms: (0..count).map(|_| rng.permutation(m)).collect(),
            separation_d: None,
        };
        let mut best = usize::MAX;
        let mut stagnant = 0usize;
        for _ in 0..repair_budget {
            let vs = violations(&fam, d);
            if vs.is_empty() {
                debug_assert!(verify_separation(&fam, d));
                fam.separation_d = Some(d);
                return Ok(fam);
            }
            if vs.len() < best {
                best = vs.len();
                stagnant = 0;
            } else {
                stagnant += 1;
                if stagnant > 200 {
                    break; // this start is not converging
                }
            }
            let &(x, y, l0, l1) = &vs[rng.below(vs.len())];
            let l = if rng.below(2) == 0 { l0 } else { l1 };
            let (moved, anchor) = if rng.below(2) == 0 { (x, y) } else { (y, x) };
            // move `moved` to a position far from the anchor
            let anchor_pos = fam.perms[l][anchor];
            let mut target = rng.below(m);
            for _ in 0..32 {
                let diff = target.abs_diff(anchor_pos);
                if diff.min(m - diff) > 2 * d {
                    break;
                }
                target = rng.below(m);
            }
            let moved_pos = fam.perms[l][moved];
            let displaced = fam.perms[l].iter().position(|&p| p == target).unwrap();
            fam.perms[l][moved] = target;
            fam.perms[l][displaced] = moved_pos;
        }
    }
    Err(PermError::SearchExhausted { rounds: max_rounds })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// O(m²·d) reference checker: counts, for every unordered pair, the
    /// permutations in which it is close.
    pub(crate) fn naive_separation_check(fam: &PermutationFamily, d: usize) -> bool {
        let m = fam.ground_size();
        for x in 0..m {
            for y in x + 1..m {
                let close = (0..fam.len()).filter(|&l| fam.dist(l, x, y) <= d).count();
                if close >= 2 {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn identity_permutations_fail() {
        let id: Vec<usize> = (0..10).collect();
        let fam = PermutationFamily::new(10, vec![id.clone(), id]).unwrap();
        assert!(!verify_separation(&fam, 1));
        assert!(!naive_separation_check(&fam, 1));
    }

    #[test]
    fn single_permutation_is_vacuously_separated() {
        let fam = PermutationFamily::new(8, vec![(0..8).collect()]).unwrap();
        assert!(verify_separation(&fam, 3));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(PermutationFamily::new(3, vec![vec![0, 0, 1]]).is_err());
        assert!(PermutationFamily::new(3, vec![vec![0, 1]]).is_err());
        assert!(PermutationFamily::new(3, vec![vec![0, 1, 3]]).is_err());
    }

    #[test]
    fn verifier_matches_naive_checker_on_random_families() {
        let mut rng = SplitMix64::new(0xFA1);
        for m in [20usize, 50, 120, 200] {
            for d in [1usize, 2, 4] {
                for _ in 0..4 {
                    let fam = PermutationFamily::new(
                        m,
                        vec![rng.permutation(m), rng.permutation(m), rng.permutation(m)],
                    )
                    .unwrap();
                    assert_eq!(
                        verify_separation(&fam, d),
                        naive_separation_check(&fam, d),
                        "m={m} d={d}"
                    );
                }
            }
        }
    }

    #[test]
    fn search_floor_is_enforced() {
        assert!(matches!(
            find_separating_permutations(10, 3, 2, 0, 5),
            Err(PermError::SearchFloor { .. })
        ));
    }

    #[test]
    fn search_finds_verified_family() {
        let fam = find_separating_permutations(400, 3, 2, 1, 10).unwrap();
        assert_eq!(fam.separation_d, Some(3));
        assert!(verify_separation(&fam, 3));
        assert!(naive_separation_check(&fam, 3));
    }
}
