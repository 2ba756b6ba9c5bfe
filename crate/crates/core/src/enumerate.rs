//! Streaming enumeration of compositions and lattice boxes, plus the exact
//! binomial coefficient with the convention used everywhere in this crate:
//! `binomial(n, k) = 0` whenever `n < 0`, `k < 0` or `k > n`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact binomial coefficient with out-of-range arguments mapped to zero.
pub fn binomial(n: i128, k: i128) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    let mut acc = BigInt::one();
    // acc = binomial(n, i + 1) after each step; the division is exact.
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// All vectors in Z_{>=0}^parts with entry sum `total`, streamed in a fixed
/// order starting from (total, 0, ..., 0).
pub fn compositions(total: u64, parts: usize) -> Compositions {
    let cur = if parts == 0 {
        if total == 0 {
            Some(Vec::new())
        } else {
            None
        }
    } else {
        let mut v = vec![0; parts];
        v[0] = total;
        Some(v)
    };
    Compositions { cur }
}

pub struct Compositions {
    cur: Option<Vec<u64>>,
}

impl Iterator for Compositions {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let out = self.cur.clone()?;
        let v = self.cur.as_mut().unwrap();
        let parts = v.len();
        // Successor: move one unit from the rightmost positive slot before the
        // last into the slot after it, folding the tail back in.
        let j = (0..parts.saturating_sub(1)).rev().find(|&j| v[j] > 0);
        match j {
            Some(j) => {
                let tail = v[parts - 1];
                v[j] -= 1;
                v[j + 1] = tail + 1;
                for slot in v[j + 2..].iter_mut() {
                    *slot = 0;
                }
            }
            None => self.cur = None,
        }
        Some(out)
    }
}

/// All lattice points of the box [0, b_1] x ... x [0, b_s] (bounds inclusive),
/// streamed with the last coordinate varying fastest. An empty bounds slice
/// yields exactly one empty point.
pub fn box_points(bounds: &[u64]) -> BoxPoints {
    BoxPoints {
        bounds: bounds.to_vec(),
        cur: Some(vec![0; bounds.len()]),
    }
}

pub struct BoxPoints {
    bounds: Vec<u64>,
    cur: Option<Vec<u64>>,
}

impl Iterator for BoxPoints {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let out = self.cur.clone()?;
        let v = self.cur.as_mut().unwrap();
        let j = (0..v.len()).rev().find(|&j| v[j] < self.bounds[j]);
        match j {
            Some(j) => {
                v[j] += 1;
                for slot in v[j + 1..].iter_mut() {
                    *slot = 0;
                }
            }
            None => self.cur = None,
        }
        Some(out)
    }
}

/// All k-element subsets of {0, ..., n-1} in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // Advance the rightmost index that still has room to grow.
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}
