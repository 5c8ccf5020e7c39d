//! Small finite fields by table lookup: GF(q) for q in {2,3,4,5,7,8,9}.
//!
//! Prime-power fields use fixed irreducible polynomials (x²+x+1 for GF(4),
//! x³+x+1 for GF(8), x²+1 for GF(9)); elements are encoded base p by their
//! coefficient vectors. This covers every point-line geometry the
//! constructions need.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("unsupported field order {q} (available: 2,3,4,5,7,8,9)")]
    UnsupportedOrder { q: usize },
}

#[derive(Clone, Debug)]
pub struct FiniteField {
    q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
}

const ORDERS: [(usize, usize, u32); 7] = [
    (2, 2, 1),
    (3, 3, 1),
    (4, 2, 2),
    (5, 5, 1),
    (7, 7, 1),
    (8, 2, 3),
    (9, 3, 2),
];

fn irreducible(q: usize) -> &'static [usize] {
    // coefficients c_0..c_e of the reduction polynomial, little-endian
    match q {
        4 => &[1, 1, 1],    // x^2 + x + 1
        8 => &[1, 1, 0, 1], // x^3 + x + 1
        9 => &[1, 0, 1],    // x^2 + 1
        _ => unreachable!("prime orders need no reduction polynomial"),
    }
}

fn digits(mut x: usize, p: usize, e: u32) -> Vec<usize> {
    let mut d = Vec::with_capacity(e as usize);
    for _ in 0..e {
        d.push(x % p);
        x /= p;
    }
    d
}

fn undigits(d: &[usize], p: usize) -> usize {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

impl FiniteField {
    pub fn new(q: usize) -> Result<Self, FieldError> {
        let &(_, p, e) = ORDERS
            .iter()
            .find(|&&(order, _, _)| order == q)
            .ok_or(FieldError::UnsupportedOrder { q })?;
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                let da = digits(a, p, e);
                let db = digits(b, p, e);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(&x, &y)| (x + y) % p).collect();
                add[a * q + b] = undigits(&sum, p) as u8;

                let mut prod = vec![0usize; 2 * e as usize];
                for (i, &x) in da.iter().enumerate() {
                    for (j, &y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                if e > 1 {
                    let red = irreducible(q);
                    let deg = e as usize;
                    for i in (deg..prod.len()).rev() {
                        let coef = prod[i];
                        if coef == 0 {
                            continue;
                        }
                        prod[i] = 0;
                        // x^i = x^(i-deg) * x^deg = -x^(i-deg) * (lower part)
                        for (j, &c) in red[..deg].iter().enumerate() {
                            let sub = (coef * c) % p;
                            prod[i - deg + j] = (prod[i - deg + j] + p - sub) % p;
                        }
                    }
                }
                mul[a * q + b] = undigits(&prod[..e as usize], p) as u8;
            }
        }
        let field = FiniteField { q, add, mul };
        debug_assert!(field.axioms_hold());
        Ok(field)
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.q).find(|&b| self.add(a, b) == 0).expect("additive inverse")
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: usize) -> Option<usize> {
        if a == 0 {
            return None;
        }
        (1..self.q).find(|&b| self.mul(a, b) == 1)
    }

    /// Full axiom check by table exhaustion; O(q³), used at build time and
    /// in tests.
    pub fn axioms_hold(&self) -> bool {
        let q = self.q;
        for a in 0..q {
            if self.add(a, 0) != a || self.mul(a, 1) != a || self.mul(a, 0) != 0 {
                return false;
            }
            if a != 0 && self.inv(a).is_none() {
                return false;
            }
            for b in 0..q {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return false;
                }
                for c in 0..q {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return false;
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return false;
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return false;
                    }
                }
            }
        }
        (0..q).all(|a| self.add(a, self.neg(a)) == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_supported_orders_satisfy_axioms() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let f = FiniteField::new(q).unwrap();
            assert!(f.axioms_hold(), "axioms fail for GF({q})");
        }
    }

    #[test]
    fn unsupported_orders_rejected() {
        for q in [0, 1, 6, 10, 12] {
            assert!(FiniteField::new(q).is_err());
        }
    }

    #[test]
    fn gf4_sample_values() {
        let f = FiniteField::new(4).unwrap();
        // elements 0,1,x,x+1 encoded 0,1,2,3
        assert_eq!(f.add(2, 3), 1);
        assert_eq!(f.mul(2, 2), 3); // x^2 = x + 1
        assert_eq!(f.mul(2, 3), 1); // x(x+1) = x^2 + x = 1
    }

    #[test]
    fn gf9_sample_values() {
        let f = FiniteField::new(9).unwrap();
        // x^2 = -1 = 2 with x encoded as 3
        assert_eq!(f.mul(3, 3), 2);
    }
}
