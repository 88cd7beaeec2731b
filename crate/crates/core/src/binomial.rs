//! Binomial coefficients with the convention `C(a, b) = 0` for `b < 0` or
//! `b > a`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `C(a, b)` for `a >= 0`, computed by the multiplicative formula.
///
/// Returns `None` when `a < 0`; every caller in this crate has a
/// non-negative upper index, so `None` signals a caller bug.
pub fn binom(a: i64, b: i64) -> Option<BigInt> {
    if a < 0 {
        return None;
    }
    if b < 0 || b > a {
        return Some(BigInt::zero());
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    Some(acc)
}

/// Pascal's triangle up to a fixed row, for formulas that need many
/// coefficients with small upper index.
#[derive(Debug, Clone)]
pub struct BinomialTable {
    rows: Vec<Vec<BigInt>>,
}

impl BinomialTable {
    pub fn new(max_row: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_row + 1);
        rows.push(vec![BigInt::one()]);
        for a in 1..=max_row {
            let prev = &rows[a - 1];
            let mut row = Vec::with_capacity(a + 1);
            row.push(BigInt::one());
            for b in 1..a {
                row.push(&prev[b - 1] + &prev[b]);
            }
            row.push(BigInt::one());
            rows.push(row);
        }
        BinomialTable { rows }
    }

    pub fn max_row(&self) -> usize {
        self.rows.len() - 1
    }

    /// `C(a, b)` under the zero convention.
    ///
    /// # Panics
    ///
    /// If `a` is negative or larger than the table.
    pub fn get(&self, a: i64, b: i64) -> BigInt {
        assert!(a >= 0, "negative upper index {a} in binomial");
        let a = a as usize;
        assert!(a <= self.max_row(), "binomial row {a} outside table");
        if b < 0 || b as usize > a {
            BigInt::zero()
        } else {
            self.rows[a][b as usize].clone()
        }
    }
}
