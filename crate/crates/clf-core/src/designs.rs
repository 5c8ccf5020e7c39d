//! Generators for the combinatorial designs the tower constructions
//! consume: the Fano plane, Steiner triple systems via the Bose and Skolem
//! constructions, projective planes PG(2,q), and resolvable affine
//! point-line geometries AG_m(q) with their parallel classes.
//!
//! Every generated design is validated on construction: each pair of points
//! must lie in exactly one block.

use crate::field::{FieldError, FiniteField};
use crate::hypergraph::{Hypergraph, HypergraphError};
use thiserror::Error;

/// Points of AG_m(q) are capped so desk-scale towers stay buildable while
/// genuinely infeasible parameter choices fail fast.
pub const AFFINE_POINT_CAP: usize = 2048;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DesignError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("no Steiner triple system on {v} points: v must be 1 or 3 mod 6 and at least 7")]
    InadmissibleTripleOrder { v: usize },
    #[error("no S(2,{k},{v}) generator available")]
    DesignUnavailable { k: usize, v: usize },
    #[error("affine geometry AG_{m}({q}) has {points} points, exceeding the cap {cap}")]
    SizeCapExceeded {
        m: usize,
        q: usize,
        points: usize,
        cap: usize,
    },
    #[error("requested {requested} parallel classes but only {available} exist")]
    TooFewClasses { requested: usize, available: usize },
    #[error("affine geometry needs dimension m >= 2, got {m}")]
    BadDimension { m: usize },
    #[error("generated block set is not a valid design: {reason}")]
    InvalidDesign { reason: String },
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DesignKind {
    SteinerTriple,
    Projective,
    Affine,
}

/// A Steiner system S(2,k,v): every pair of points in exactly one block.
#[derive(Clone, Debug)]
pub struct DesignSystem {
    pub kind: DesignKind,
    pub points: usize,
    pub block_size: usize,
    pub blocks: Hypergraph,
}

impl DesignSystem {
    /// Replication number t = (v-1)/(k-1).
    pub fn regularity(&self) -> usize {
        (self.points - 1) / (self.block_size - 1)
    }

    fn build(
        kind: DesignKind,
        points: usize,
        block_size: usize,
        blocks: Vec<Vec<usize>>,
    ) -> Result<Self, DesignError> {
        let blocks = Hypergraph::new(points, &blocks)?;
        let design = DesignSystem {
            kind,
            points,
            block_size,
            blocks,
        };
        design.validate()?;
        Ok(design)
    }

    /// Exhaustive pair-coverage, uniformity and divisibility check.
    pub fn validate(&self) -> Result<(), DesignError> {
        let v = self.points;
        let k = self.block_size;
        if self.blocks.uniformity() != Some(k) {
            return Err(DesignError::InvalidDesign {
                reason: format!("blocks are not {k}-uniform"),
            });
        }
        if (v - 1) % (k - 1) != 0 || (v * (v - 1)) % (k * (k - 1)) != 0 {
            return Err(DesignError::InvalidDesign {
                reason: format!("divisibility conditions fail for k={k}, v={v}"),
            });
        }
        let mut covered = vec![false; v * v];
        for block in self.blocks.edges() {
            for (i, &a) in block.iter().enumerate() {
                for &b in &block[i + 1..] {
                    if covered[a * v + b] {
                        return Err(DesignError::InvalidDesign {
                            reason: format!("pair {a},{b} covered twice"),
                        });
                    }
                    covered[a * v + b] = true;
                }
            }
        }
        for a in 0..v {
            for b in a + 1..v {
                if !covered[a * v + b] {
                    return Err(DesignError::InvalidDesign {
                        reason: format!("pair {a},{b} uncovered"),
                    });
                }
            }
        }
        Ok(())
    }
}

/// The Fano plane S(2,3,7), realized as the cyclic difference-set design
/// with blocks {i, i+1, i+3} mod 7.
pub fn fano() -> DesignSystem {
    let blocks: Vec<Vec<usize>> = (0..7).map(|i| vec![i, (i + 1) % 7, (i + 3) % 7]).collect();
    DesignSystem::build(DesignKind::SteinerTriple, 7, 3, blocks)
        .expect("the Fano plane is a valid design")
}

/// Steiner triple system S(2,3,v) for v ≡ 1 or 3 (mod 6), v >= 7, via the
/// classical Bose (3 mod 6) and Skolem (1 mod 6) constructions.
pub fn steiner_triple(v: usize) -> Result<DesignSystem, DesignError> {
    if v < 7 || (v % 6 != 1 && v % 6 != 3) {
        return Err(DesignError::InadmissibleTripleOrder { v });
    }
    let blocks = if v % 6 == 3 {
        bose_blocks(v)
    } else {
        skolem_blocks(v)
    };
    DesignSystem::build(DesignKind::SteinerTriple, v, 3, blocks)
}

/// Bose construction for v = 6n+3: points Z_{2n+1} × {0,1,2} with
/// (x,i) ↦ i·(2n+1)+x, blocks {(x,0),(x,1),(x,2)} and
/// {(x,i),(y,i),(x∘y,i+1)} where x∘y = (x+y)(n+1) is the idempotent
/// commutative quasigroup on Z_{2n+1}.
fn bose_blocks(v: usize) -> Vec<Vec<usize>> {
    let n = (v - 3) / 6;
    let m = 2 * n + 1;
    let point = |x: usize, i: usize| i * m + x;
    let op = |x: usize, y: usize| ((x + y) * (n + 1)) % m;
    let mut blocks = Vec::new();
    for x in 0..m {
        blocks.push(vec![point(x, 0), point(x, 1), point(x, 2)]);
    }
    for x in 0..m {
        for y in x + 1..m {
            for i in 0..3 {
                blocks.push(vec![point(x, i), point(y, i), point(op(x, y), (i + 1) % 3)]);
            }
        }
    }
    blocks
}

/// Skolem construction for v = 6n+1: points Z_{2n} × {0,1,2} plus one extra
/// point ∞ = v-1, with (x,i) ↦ i·2n+x. Uses the half-idempotent commutative
/// quasigroup x∘y = ρ(x+y mod 2n) with ρ(even e) = e/2, ρ(odd o) = n+(o-1)/2.
fn skolem_blocks(v: usize) -> Vec<Vec<usize>> {
    let n = (v - 1) / 6;
    let m = 2 * n;
    let infinity = v - 1;
    let point = |x: usize, i: usize| i * m + x;
    let rho = |e: usize| if e % 2 == 0 { e / 2 } else { n + (e - 1) / 2 };
    let op = |x: usize, y: usize| rho((x + y) % m);
    let mut blocks = Vec::new();
    for x in 0..n {
        blocks.push(vec![point(x, 0), point(x, 1), point(x, 2)]);
    }
    for x in 0..n {
        for i in 0..3 {
            blocks.push(vec![infinity, point(n + x, i), point(x, (i + 1) % 3)]);
        }
    }
    for x in 0..m {
        for y in x + 1..m {
            for i in 0..3 {
                blocks.push(vec![point(x, i), point(y, i), point(op(x, y), (i + 1) % 3)]);
            }
        }
    }
    blocks
}

/// Projective plane PG(2,q) = S(2, q+1, q²+q+1) over GF(q). Points and
/// lines are the normalized nonzero triples (first nonzero coordinate 1);
/// point (x,y,z) lies on line [a,b,c] iff ax+by+cz = 0.
pub fn projective_plane(q: usize) -> Result<DesignSystem, DesignError> {
    let f = FiniteField::new(q)?;
    let mut reps: Vec<[usize; 3]> = Vec::with_capacity(q * q + q + 1);
    for a in 0..q {
        for b in 0..q {
            reps.push([1, a, b]);
        }
    }
    for c in 0..q {
        reps.push([0, 1, c]);
    }
    reps.push([0, 0, 1]);
    let dot = |u: &[usize; 3], w: &[usize; 3]| {
        let mut s = 0;
        for i in 0..3 {
            s = f.add(s, f.mul(u[i], w[i]));
        }
        s
    };
    let blocks: Vec<Vec<usize>> = reps
        .iter()
        .map(|line| {
            reps.iter()
                .enumerate()
                .filter(|(_, p)| dot(line, p) == 0)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    DesignSystem::build(DesignKind::Projective, q * q + q + 1, q + 1, blocks)
}

/// A resolvable design with its blocks partitioned into parallel classes.
#[derive(Clone, Debug)]
pub struct ParallelClassSet {
    pub design: DesignSystem,
    /// Block indices into `design.blocks`, one list per class; each class
    /// partitions the point set.
    pub classes: Vec<Vec<usize>>,
}

impl ParallelClassSet {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Sub-hypergraph on all points induced by the blocks of the first
    /// `count` classes; `count`-regular and block-size-uniform.
    pub fn take_classes(&self, count: usize) -> Result<Hypergraph, DesignError> {
        if count > self.classes.len() {
            return Err(DesignError::TooFewClasses {
                requested: count,
                available: self.classes.len(),
            });
        }
        let blocks: Vec<Vec<usize>> = self.classes[..count]
            .iter()
            .flatten()
            .map(|&b| self.design.blocks.edges()[b].clone())
            .collect();
        Ok(Hypergraph::new(self.design.points, &blocks)?)
    }
}

/// The point-line geometry AG_m(q) = S(2, q, q^m): points are the vectors
/// of GF(q)^m (coordinate j weighted by q^j), blocks the 1-dimensional
/// affine subspaces. Classes are indexed by line direction, enumerated by
/// the least point index among each direction's nonzero multiples.
pub fn affine_lines(m: usize, q: usize) -> Result<ParallelClassSet, DesignError> {
    if m < 2 {
        return Err(DesignError::BadDimension { m });
    }
    let f = FiniteField::new(q)?;
    let mut points: usize = 1;
    for _ in 0..m {
        points = points.saturating_mul(q);
        if points > AFFINE_POINT_CAP {
            return Err(DesignError::SizeCapExceeded {
                m,
                q,
                points,
                cap: AFFINE_POINT_CAP,
            });
        }
    }
    let to_vec = |mut idx: usize| -> Vec<usize> {
        let mut v = Vec::with_capacity(m);
        for _ in 0..m {
            v.push(idx % q);
            idx /= q;
        }
        v
    };
    let to_idx = |v: &[usize]| v.iter().rev().fold(0, |acc, &c| acc * q + c);
    let scale = |lambda: usize, v: &[usize]| -> Vec<usize> {
        v.iter().map(|&c| f.mul(lambda, c)).collect()
    };
    let add_vec = |a: &[usize], b: &[usize]| -> Vec<usize> {
        a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect()
    };

    // direction representatives: least point index per 1-dim subspace
    let mut seen = vec![false; points];
    let mut directions = Vec::new();
    for idx in 1..points {
        if seen[idx] {
            continue;
        }
        let d = to_vec(idx);
        for lambda in 1..q {
            seen[to_idx(&scale(lambda, &d))] = true;
        }
        directions.push(d);
    }
    debug_assert_eq!(directions.len(), (points - 1) / (q - 1));

    let mut all_blocks: Vec<Vec<usize>> = Vec::new();
    let mut class_blocks: Vec<Vec<Vec<usize>>> = Vec::new();
    for dir in &directions {
        let mut used = vec![false; points];
        let mut blocks_here = Vec::with_capacity(points / q);
        for start in 0..points {
            if used[start] {
                continue;
            }
            let base = to_vec(start);
            let mut line: Vec<usize> = (0..q)
                .map(|lambda| to_idx(&add_vec(&base, &scale(lambda, dir))))
                .collect();
            line.sort_unstable();
            for &p in &line {
                used[p] = true;
            }
            blocks_here.push(line);
        }
        blocks_here.sort();
        all_blocks.extend(blocks_here.iter().cloned());
        class_blocks.push(blocks_here);
    }

    let design = DesignSystem::build(DesignKind::Affine, points, q, all_blocks)?;
    // recover stored indices of each class's blocks
    let index_of = |block: &Vec<usize>| {
        design
            .blocks
            .edges()
            .binary_search(block)
            .expect("class block is stored in the design")
    };
    let classes: Vec<Vec<usize>> = class_blocks
        .iter()
        .map(|blocks| blocks.iter().map(index_of).collect())
        .collect();
    Ok(ParallelClassSet { design, classes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::BergeGirth;

    fn check_design_invariants(d: &DesignSystem) {
        d.validate().unwrap();
        assert_eq!(d.blocks.uniformity(), Some(d.block_size));
        assert_eq!(d.blocks.regularity(), Some(d.regularity()));
        assert!(d.blocks.is_linear());
        if d.points > d.block_size {
            match d.blocks.berge_girth() {
                BergeGirth::Finite { girth, witness } => {
                    assert_eq!(girth, 3);
                    assert!(witness.is_valid_in(&d.blocks));
                }
                BergeGirth::Acyclic => panic!("nontrivial design must have girth 3"),
            }
        }
    }

    #[test]
    fn fano_is_valid() {
        let d = fano();
        assert_eq!(d.points, 7);
        assert_eq!(d.blocks.edge_count(), 7);
        assert_eq!(d.regularity(), 3);
        check_design_invariants(&d);
    }

    #[test]
    fn steiner_triples_small_orders() {
        for v in [7usize, 9, 13, 15, 19, 21] {
            let d = steiner_triple(v).unwrap();
            assert_eq!(d.blocks.edge_count(), v * (v - 1) / 6);
            check_design_invariants(&d);
        }
        assert_eq!(steiner_triple(9).unwrap().regularity(), 4);
    }

    #[test]
    fn steiner_triple_43_matches_tower_level() {
        let d = steiner_triple(43).unwrap();
        assert_eq!(d.blocks.edge_count(), 301);
        assert_eq!(d.regularity(), 21);
        check_design_invariants(&d);
    }

    #[test]
    fn steiner_triple_rejects_inadmissible_orders() {
        for v in [3usize, 5, 6, 8, 11, 14] {
            assert!(steiner_triple(v).is_err());
        }
    }

    #[test]
    fn projective_planes() {
        let pg2 = projective_plane(2).unwrap();
        assert_eq!(pg2.points, 7);
        assert_eq!(pg2.blocks.edge_count(), 7);
        check_design_invariants(&pg2);

        let pg3 = projective_plane(3).unwrap();
        assert_eq!(pg3.points, 13);
        assert_eq!(pg3.block_size, 4);
        assert_eq!(pg3.regularity(), 4);
        check_design_invariants(&pg3);

        let pg4 = projective_plane(4).unwrap();
        assert_eq!(pg4.points, 21);
        assert_eq!(pg4.block_size, 5);
        check_design_invariants(&pg4);

        assert!(projective_plane(6).is_err());
    }

    #[test]
    fn affine_plane_of_order_three() {
        let p = affine_lines(2, 3).unwrap();
        assert_eq!(p.design.points, 9);
        assert_eq!(p.design.blocks.edge_count(), 12);
        assert_eq!(p.class_count(), 4);
        for class in &p.classes {
            assert_eq!(class.len(), 3);
            let mut covered: Vec<usize> = class
                .iter()
                .flat_map(|&b| p.design.blocks.edges()[b].clone())
                .collect();
            covered.sort_unstable();
            assert_eq!(covered, (0..9).collect::<Vec<_>>());
        }
        check_design_invariants(&p.design);
    }

    #[test]
    fn affine_plane_of_order_two() {
        let p = affine_lines(2, 2).unwrap();
        assert_eq!(p.design.points, 4);
        assert_eq!(p.design.blocks.edge_count(), 6);
        assert_eq!(p.class_count(), 3);
        check_design_invariants(&p.design);
    }

    #[test]
    fn affine_four_dimensional() {
        let p = affine_lines(4, 3).unwrap();
        assert_eq!(p.design.points, 81);
        assert_eq!(p.class_count(), 40);
        check_design_invariants(&p.design);
    }

    #[test]
    fn affine_size_cap() {
        assert!(matches!(
            affine_lines(8, 3),
            Err(DesignError::SizeCapExceeded { .. })
        ));
        assert!(affine_lines(1, 3).is_err());
    }

    #[test]
    fn take_classes_regularity() {
        let p = affine_lines(2, 3).unwrap();
        for c in 1..=4 {
            let h = p.take_classes(c).unwrap();
            assert_eq!(h.regularity(), Some(c));
            assert_eq!(h.uniformity(), Some(3));
            assert!(h.is_linear());
        }
        assert!(p.take_classes(5).is_err());

        let full = p.take_classes(4).unwrap();
        assert_eq!(full, p.design.blocks);
    }
}
