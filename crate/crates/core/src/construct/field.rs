// SPDX-License-Identifier: Apache-2.0

//! Table-driven arithmetic in GF(q) for the small orders the plane
//! constructions need.

use crate::error::{Error, Result};

pub const SUPPORTED_ORDERS: [usize; 7] = [2, 3, 4, 5, 7, 8, 9];

/// GF(q) with elements `0..q`. For `q = p^m`, element `x` stands for the
/// polynomial whose base-`p` digits (least significant first) are its
/// coefficients, reduced modulo a fixed irreducible of degree `m`.
#[derive(Clone, Debug)]
pub struct FiniteField {
    q: usize,
    p: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    inv: Vec<usize>,
}

/// `(p, m, monic irreducible coefficients c_0..c_{m-1})` where
/// `x^m = -(c_{m-1} x^{m-1} + ... + c_0)`.
fn parameters(q: usize) -> Option<(usize, usize, &'static [usize])> {
    Some(match q {
        2 | 3 | 5 | 7 => (q, 1, &[]),
        4 => (2, 2, &[1, 1]),    // x^2 + x + 1
        8 => (2, 3, &[1, 1, 0]), // x^3 + x + 1
        9 => (3, 2, &[1, 0]),    // x^2 + 1
        _ => return None,
    })
}

fn digits(x: usize, p: usize, m: usize) -> Vec<usize> {
    (0..m)
        .scan(x, |rest, _| {
            let d = *rest % p;
            *rest /= p;
            Some(d)
        })
        .collect()
}

fn undigits(d: &[usize], p: usize) -> usize {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

impl FiniteField {
    pub fn new(q: usize) -> Result<Self> {
        let (p, m, modulus) = parameters(q).ok_or(Error::UnsupportedOrder(q))?;
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            let da = digits(a, p, m);
            for b in 0..q {
                let db = digits(b, p, m);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = undigits(&sum, p);

                let mut prod = vec![0; 2 * m];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for top in (m..2 * m).rev() {
                    let c = prod[top];
                    if c == 0 {
                        continue;
                    }
                    prod[top] = 0;
                    for (i, &r) in modulus.iter().enumerate() {
                        prod[top - m + i] = (prod[top - m + i] + (p - c) * r) % p;
                    }
                }
                mul[a * q + b] = undigits(&prod[..m], p);
            }
        }
        let mut inv = vec![0; q];
        for a in 1..q {
            inv[a] = (1..q)
                .find(|&b| mul[a * q + b] == 1)
                .ok_or_else(|| Error::Internal(format!("GF({q}): {a} has no inverse")))?;
        }
        Ok(FiniteField { q, p, add, mul, inv })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b]
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.q).find(|&b| self.add(a, b) == 0).unwrap()
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: usize) -> Option<usize> {
        (a != 0).then(|| self.inv[a])
    }

    pub fn dot(&self, x: &[usize; 3], y: &[usize; 3]) -> usize {
        (0..3).fold(0, |acc, i| self.add(acc, self.mul(x[i], y[i])))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unsupported_orders() {
        for q in [0, 1, 6, 10, 11, 16] {
            assert!(matches!(FiniteField::new(q), Err(Error::UnsupportedOrder(_))));
        }
    }

    #[test]
    fn gf4_multiplication_table() {
        // 2 = x, 3 = x + 1; x * x = x + 1, x * (x + 1) = 1
        let f = FiniteField::new(4).unwrap();
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.mul(2, 3), 1);
        assert_eq!(f.add(2, 3), 1);
    }

    #[test]
    fn gf9_has_square_root_of_minus_one() {
        let f = FiniteField::new(9).unwrap();
        // 3 = x with x^2 = -1 = 2
        assert_eq!(f.mul(3, 3), 2);
    }

    #[test]
    fn characteristic() {
        assert_eq!(FiniteField::new(8).unwrap().characteristic(), 2);
        assert_eq!(FiniteField::new(9).unwrap().characteristic(), 3);
    }
}
