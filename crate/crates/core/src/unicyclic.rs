//! Closed forms for the spanning complex of a uni-cyclic graph `U_{n,m}`.
//!
//! With the cycle on labels `1..=m`, the faces of `Δ_s(U_{n,m})` are exactly
//! the edge sets that do not contain the whole cycle. Everything below is a
//! counting consequence of that and needs no enumeration, so it works for
//! any `n`.

use num_bigint::BigInt;
use thiserror::Error;

use crate::binomial::{self, BinomialTable};
use crate::series::{series_from_terms, HVector, HilbertSeries};
use crate::simplicial::FVector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("parameters n = {n}, m = {m} violate 3 <= m <= n")]
    BadParams { n: usize, m: usize },
    #[error("binomial with negative upper index {0}")]
    NegativeUpper(i64),
}

/// `C(a, b)`, zero for `b < 0` or `b > a`.
pub fn binom(a: i64, b: i64) -> Result<BigInt, FormulaError> {
    binomial::binom(a, b).ok_or(FormulaError::NegativeUpper(a))
}

/// Vertex (= edge) count `n` and cycle length `m` of `U_{n,m}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnicyclicParams {
    n: usize,
    m: usize,
}

impl UnicyclicParams {
    pub fn new(n: usize, m: usize) -> Result<Self, FormulaError> {
        if m < 3 || m > n {
            return Err(FormulaError::BadParams { n, m });
        }
        Ok(UnicyclicParams { n, m })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    fn table(&self) -> BinomialTable {
        BinomialTable::new(self.n)
    }
}

/// `f_i = C(n, i+1) - C(n-m, i-m+1)` for `0 <= i <= n-2`. The correction
/// counts the `(i+1)`-sets containing the cycle and vanishes for `i <= m-2`.
pub fn f_closed(p: UnicyclicParams) -> FVector {
    let t = p.table();
    let (n, m) = (p.n as i64, p.m as i64);
    FVector(
        (0..=n - 2)
            .map(|i| t.get(n, i + 1) - t.get(n - m, i - m + 1))
            .collect(),
    )
}

/// Raw h-vector `h_0..h_{n-1}`:
/// `h_k = Σ_{i=0}^{k} (-1)^{k-i} C(n-1-i, k-i) [C(n, i) - C(n-m, i-m)]`.
pub fn h_closed(p: UnicyclicParams) -> HVector {
    let t = p.table();
    let (n, m) = (p.n as i64, p.m as i64);
    HVector(
        (0..n)
            .map(|k| {
                (0..=k)
                    .map(|i| {
                        let term = t.get(n - 1 - i, k - i) * (t.get(n, i) - t.get(n - m, i - m));
                        if (k - i) % 2 == 0 { term } else { -term }
                    })
                    .sum()
            })
            .collect(),
    )
}

/// [`h_closed`] written with separate branches for `k <= m-1` (no
/// correction term) and `m-1 < k <= n-1`. Kept to check that the merged
/// formula does not change any value.
pub fn h_closed_branched(p: UnicyclicParams) -> HVector {
    let t = p.table();
    let (n, m) = (p.n as i64, p.m as i64);
    let sign = |e: i64, v: BigInt| if e % 2 == 0 { v } else { -v };
    HVector(
        (0..n)
            .map(|k| {
                if k <= m - 1 {
                    (0..=k)
                        .map(|i| sign(k - i, t.get(n - 1 - i, k - i) * t.get(n, i)))
                        .sum()
                } else {
                    (0..=k)
                        .map(|i| {
                            let bracket = t.get(n, i) - t.get(n - m, i - m);
                            sign(k - i, t.get(n - 1 - i, k - i) * bracket)
                        })
                        .sum()
                }
            })
            .collect(),
    )
}

/// Normalized Hilbert series of `k[Δ_s(U_{n,m})]`, assembled from
/// `1 + Σ_{i=0}^{m-2} C(n,i+1) t^{i+1}/(1-t)^{i+1}
///    + Σ_{i=m-1}^{n-2} [C(n,i+1) - C(n-m,i-m+1)] t^{i+1}/(1-t)^{i+1}`.
pub fn hilbert_closed(p: UnicyclicParams) -> HilbertSeries {
    let t = p.table();
    let (n, m) = (p.n as i64, p.m as i64);
    let mut terms: Vec<BigInt> = (0..=m - 2).map(|i| t.get(n, i + 1)).collect();
    terms.extend((m - 1..=n - 2).map(|i| t.get(n, i + 1) - t.get(n - m, i - m + 1)));
    series_from_terms(&terms).expect("numerator evaluates to m at t = 1")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{h_from_f, Poly};
    use num_traits::One;

    fn p(n: usize, m: usize) -> UnicyclicParams {
        UnicyclicParams::new(n, m).unwrap()
    }

    fn ints(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn params() {
        assert!(UnicyclicParams::new(4, 2).is_err());
        assert!(UnicyclicParams::new(3, 4).is_err());
        assert_eq!(p(9, 5).n(), 9);
    }

    #[test]
    fn binom_convention() {
        assert_eq!(binom(5, 2), Ok(BigInt::from(10)));
        assert_eq!(binom(3, -1), Ok(BigInt::from(0)));
        assert_eq!(binom(0, 0), Ok(BigInt::one()));
        assert_eq!(binom(-2, 1), Err(FormulaError::NegativeUpper(-2)));
    }

    #[test]
    fn f_vectors() {
        assert_eq!(f_closed(p(4, 3)).0, ints(&[4, 6, 3]));
        assert_eq!(f_closed(p(4, 4)).0, ints(&[4, 6, 4]));
        assert_eq!(f_closed(p(3, 3)).0, ints(&[3, 3]));
        for n in 3..=20 {
            let f = f_closed(p(n, n));
            assert_eq!(f.dim(), n as isize - 2);
            assert_eq!(f.0.last().unwrap(), &BigInt::from(n));
        }
    }

    #[test]
    fn h_vectors() {
        assert_eq!(h_closed(p(4, 3)).0, ints(&[1, 1, 1, 0]));
        assert_eq!(h_closed(p(3, 3)).0, ints(&[1, 1, 1]));
        assert_eq!(h_closed(p(4, 4)).0, ints(&[1, 1, 1, 1]));
    }

    #[test]
    fn hilbert_series() {
        let s = |num: &[i64], pole| HilbertSeries {
            numerator: Poly::from_i64(num),
            pole_order: pole,
        };
        assert_eq!(hilbert_closed(p(3, 3)), s(&[1, 1, 1], 2));
        assert_eq!(hilbert_closed(p(4, 3)), s(&[1, 1, 1], 3));
        assert_eq!(hilbert_closed(p(4, 4)), s(&[1, 1, 1, 1], 3));
    }

    #[test]
    fn identities_over_a_wide_range() {
        for n in 3..=40 {
            for m in 3..=n {
                let params = p(n, m);
                let f = f_closed(params);
                let h = h_closed(params);
                assert_eq!(h, h_closed_branched(params), "branches differ at ({n},{m})");
                assert_eq!(h, h_from_f(&f), "({n},{m})");
                assert_eq!(h.sum(), BigInt::from(m));
                let series = hilbert_closed(params);
                assert_eq!(series.pole_order, n - 1);
                assert_eq!(series.numerator.coeffs(), h.normalized().entries());
                // The only missing (m)-set is the cycle itself.
                for i in 0..m - 1 {
                    assert_eq!(f.0[i], binom(n as i64, i as i64 + 1).unwrap());
                }
                if m - 1 <= n - 2 {
                    assert_eq!(
                        &f.0[m - 1] + BigInt::one(),
                        binom(n as i64, m as i64).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn correction_uses_shifted_lower_index() {
        // Of the 15 four-edge subsets of U_{6,3}, C(3, 1) = 3 contain the
        // triangle. Reading the correction as C(n-m, i-m) + 1 would give 2.
        let f = f_closed(p(6, 3));
        assert_eq!(f.0[3], BigInt::from(12));
        assert_eq!(f.0[4], BigInt::from(3));
    }

    #[test]
    fn large_parameters() {
        let params = p(200, 100);
        let h = h_closed(params);
        assert_eq!(h.sum(), BigInt::from(100));
        assert_eq!(h.0.len(), 200);
        let f = f_closed(params);
        assert_eq!(f.dim(), 198);
        let s = hilbert_closed(params);
        assert_eq!(s.pole_order, 199);
        assert_eq!(s.numerator.eval_at_one(), BigInt::from(100));
    }
}
