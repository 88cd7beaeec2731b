//! Exact Hilbert series of Stanley–Reisner rings.
//!
//! A series is kept as `numerator(t) / (1 - t)^pole_order` with big-integer
//! coefficients. Nothing here touches floating point.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::binomial::BinomialTable;
use crate::simplicial::{ComplexError, FVector, SimplicialComplex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("numerator is the zero polynomial")]
    ZeroNumerator,
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// Dense polynomial in `t`, lowest degree first, without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly(Vec<BigInt>);

impl Poly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Poly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Poly {
        Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.0.iter().sum()
    }

    /// Multiplies by `(1 - t)`.
    pub fn mul_one_minus_t(&self) -> Poly {
        let mut out = vec![BigInt::zero(); self.0.len() + 1];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
            out[i + 1] -= c;
        }
        Poly::new(out)
    }

    /// Divides by `(1 - t)`; `None` unless the division is exact.
    pub fn div_one_minus_t(&self) -> Option<Poly> {
        if !self.eval_at_one().is_zero() {
            return None;
        }
        // p = (1 - t) q gives q_i = p_0 + ... + p_i.
        let mut acc = BigInt::zero();
        let q = self
            .0
            .iter()
            .map(|c| {
                acc += c;
                acc.clone()
            })
            .collect();
        Some(Poly::new(q))
    }

    /// Adds `scale * t^shift * (1 - t)^power` into the coefficient list `acc`.
    fn add_shifted_power(acc: &mut Vec<BigInt>, scale: &BigInt, shift: usize, power: usize, binom: &BinomialTable) {
        if acc.len() < shift + power + 1 {
            acc.resize(shift + power + 1, BigInt::zero());
        }
        for k in 0..=power {
            let term = binom.get(power as i64, k as i64) * scale;
            if k % 2 == 0 {
                acc[shift + k] += term;
            } else {
                acc[shift + k] -= term;
            }
        }
    }
}

/// Coefficients `h_0, ..., h_r` of an h-vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HVector(pub Vec<BigInt>);

impl HVector {
    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    /// Drops trailing zeros.
    pub fn normalized(&self) -> HVector {
        HVector(Poly::new(self.0.clone()).0)
    }

    pub fn sum(&self) -> BigInt {
        self.0.iter().sum()
    }
}

/// `numerator(t) / (1 - t)^pole_order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    pub numerator: Poly,
    pub pole_order: usize,
}

impl HilbertSeries {
    /// Cancels every common factor `(1 - t)`.
    pub fn normalize(&self) -> Result<HilbertSeries, SeriesError> {
        if self.numerator.is_zero() {
            return Err(SeriesError::ZeroNumerator);
        }
        let mut out = self.clone();
        while out.pole_order > 0 {
            match out.numerator.div_one_minus_t() {
                Some(q) => {
                    out.numerator = q;
                    out.pole_order -= 1;
                }
                None => break,
            }
        }
        Ok(out)
    }

    /// The normalized numerator read as an h-vector.
    pub fn h_vector(&self) -> Result<HVector, SeriesError> {
        Ok(HVector(self.normalize()?.numerator.0))
    }

    /// Power-series coefficients of `t^0, ..., t^max_degree`.
    pub fn expand(&self, max_degree: usize) -> Vec<BigInt> {
        let d = self.pole_order as i64;
        let table = BinomialTable::new(max_degree + self.pole_order);
        // 1 / (1 - t)^D = sum_j C(j + D - 1, D - 1) t^j, which is 1 for D = 0.
        let geometric = |j: usize| -> BigInt {
            if d == 0 {
                if j == 0 { BigInt::one() } else { BigInt::zero() }
            } else {
                table.get(j as i64 + d - 1, d - 1)
            }
        };
        (0..=max_degree)
            .map(|j| {
                self.numerator
                    .coeffs()
                    .iter()
                    .enumerate()
                    .take(j + 1)
                    .map(|(i, c)| c * geometric(j - i))
                    .sum()
            })
            .collect()
    }
}

/// Raw h-vector `h_0..h_{d+1}` of a complex of dimension `d`:
/// `h_k = Σ_{i=0}^{k} (-1)^{k-i} C(d+1-i, k-i) f_{i-1}`, with `f_{-1} = 1`.
pub fn h_from_f(f: &FVector) -> HVector {
    let top = (f.dim() + 1) as usize;
    let table = BinomialTable::new(top);
    let h = (0..=top as i64)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let term = table.get(top as i64 - i, k - i) * f.get(i as isize - 1);
                    if (k - i) % 2 == 0 { term } else { -term }
                })
                .sum()
        })
        .collect();
    HVector(h)
}

/// `1 + Σ_{i=0}^{d} f_i t^{i+1} / (1 - t)^{i+1}` over the common denominator
/// `(1 - t)^{d+1}`, before any cancellation.
pub fn series_from_f_raw(f: &FVector) -> HilbertSeries {
    let pole = (f.dim() + 1) as usize;
    let table = BinomialTable::new(pole);
    let mut acc = Vec::new();
    Poly::add_shifted_power(&mut acc, &BigInt::one(), 0, pole, &table);
    for (i, fi) in f.entries().iter().enumerate() {
        Poly::add_shifted_power(&mut acc, fi, i + 1, pole - i - 1, &table);
    }
    HilbertSeries {
        numerator: Poly::new(acc),
        pole_order: pole,
    }
}

/// Normalized Hilbert series of `k[Δ]` from the f-vector of `Δ`.
pub fn series_from_f(f: &FVector) -> Result<HilbertSeries, SeriesError> {
    series_from_f_raw(f).normalize()
}

/// Assembles `1 + Σ coeff_i t^{i+1} / (1 - t)^{i+1}` for arbitrary integer
/// coefficients, normalized.
pub fn series_from_terms(terms: &[BigInt]) -> Result<HilbertSeries, SeriesError> {
    series_from_f(&FVector(terms.to_vec()))
}

/// `dim_k k[Δ]_j`, counted face by face: a degree-`j` monomial with support
/// of size `i + 1` is a composition of `j` into `i + 1` positive parts, so
/// `H(j) = Σ_i f_i C(j - 1, i)` for `j >= 1` and `H(0) = 1`.
pub fn hilbert_function_direct(c: &SimplicialComplex, j: usize) -> Result<BigInt, SeriesError> {
    Ok(hilbert_function_from_f(&c.f_vector()?, j))
}

/// The counting formula of [`hilbert_function_direct`] for a known f-vector.
pub fn hilbert_function_from_f(f: &FVector, j: usize) -> BigInt {
    if j == 0 {
        return BigInt::one();
    }
    let table = BinomialTable::new(j - 1);
    f.entries()
        .iter()
        .enumerate()
        .map(|(i, fi)| fi * table.get(j as i64 - 1, i as i64))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Graph, UnicyclicGraph};
    use crate::simplicial::{spanning_complex, Face};
    use proptest::prelude::*;

    fn fv(c: &[u64]) -> FVector {
        FVector::from_counts(c.iter().copied())
    }

    fn ints(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn series(num: &[i64], pole: usize) -> HilbertSeries {
        HilbertSeries {
            numerator: Poly::from_i64(num),
            pole_order: pole,
        }
    }

    /// Counts degree-`j` monomials in `ground` variables whose support is a
    /// face, by enumerating exponent vectors.
    fn count_monomials(c: &SimplicialComplex, j: usize) -> u64 {
        fn go(c: &SimplicialComplex, var: usize, left: usize, support: u64) -> u64 {
            if var == c.ground_size() {
                let ok = left == 0 && c.contains_face(Face::from_bits(support)).unwrap();
                return ok as u64;
            }
            (0..=left)
                .map(|e| {
                    let s = if e > 0 { support | 1 << var } else { support };
                    go(c, var + 1, left - e, s)
                })
                .sum()
        }
        go(c, 0, j, 0)
    }

    #[test]
    fn h_vectors() {
        assert_eq!(h_from_f(&fv(&[3, 3])).0, ints(&[1, 1, 1]));
        assert_eq!(h_from_f(&fv(&[3, 3, 1])).0, ints(&[1, 0, 0, 0]));
        assert_eq!(h_from_f(&fv(&[4, 6, 3])).0, ints(&[1, 1, 1, 0]));
        assert_eq!(h_from_f(&fv(&[4, 6, 3])).normalized().0, ints(&[1, 1, 1]));
        assert_eq!(h_from_f(&FVector(vec![])).0, ints(&[1]));
    }

    #[test]
    fn series_assembly() {
        assert_eq!(series_from_f(&fv(&[3, 3])).unwrap(), series(&[1, 1, 1], 2));
        assert_eq!(series_from_f(&fv(&[1])).unwrap(), series(&[1], 1));
        assert_eq!(series_from_f(&fv(&[4, 6, 3])).unwrap(), series(&[1, 1, 1], 3));
        // (1-t)^2 + 3t(1-t) + 3t^2 before cancellation.
        assert_eq!(series_from_f_raw(&fv(&[3, 3])), series(&[1, 1, 1], 2));
        // Full 2-simplex: polynomial ring in 3 variables.
        assert_eq!(series_from_f(&fv(&[3, 3, 1])).unwrap(), series(&[1], 3));
    }

    #[test]
    fn normalization() {
        assert_eq!(series(&[1, -1], 2).normalize().unwrap(), series(&[1], 1));
        assert_eq!(series(&[1, 1, 1], 3).normalize().unwrap(), series(&[1, 1, 1], 3));
        assert_eq!(series(&[0], 3).normalize(), Err(SeriesError::ZeroNumerator));
        // (1-t)^2 / (1-t)^2 leaves the constant 1 with no pole.
        assert_eq!(series(&[1, -2, 1], 2).normalize().unwrap(), series(&[1], 0));
    }

    #[test]
    fn u43_series_numerator() {
        let raw = series_from_f_raw(&fv(&[4, 6, 3]));
        assert_eq!(raw.pole_order, 3);
        assert_eq!(raw.normalize().unwrap(), series(&[1, 1, 1], 3));
    }

    #[test]
    fn expansions() {
        assert_eq!(series(&[1], 1).expand(3), ints(&[1, 1, 1, 1]));
        assert_eq!(series(&[1, 1, 1], 3).expand(2), ints(&[1, 4, 10]));
        assert_eq!(series(&[1, 1, 1], 2).expand(3), ints(&[1, 3, 6, 9]));
        assert_eq!(series(&[1, 2], 0).expand(3), ints(&[1, 2, 0, 0]));
    }

    #[test]
    fn direct_hilbert_function() {
        let c3 = spanning_complex(&Graph::new(3, &[(1, 2), (2, 3), (1, 3)]).unwrap()).unwrap();
        assert_eq!(hilbert_function_direct(&c3, 0).unwrap(), BigInt::from(1));
        assert_eq!(hilbert_function_direct(&c3, 1).unwrap(), BigInt::from(3));
        assert_eq!(hilbert_function_direct(&c3, 2).unwrap(), BigInt::from(6));
        assert_eq!(count_monomials(&c3, 2), 6);
        let u = spanning_complex(UnicyclicGraph::generate(4, 3, &[3]).unwrap().base()).unwrap();
        for j in 0..=4 {
            assert_eq!(
                hilbert_function_direct(&u, j).unwrap(),
                BigInt::from(count_monomials(&u, j))
            );
        }
        assert_eq!(hilbert_function_direct(&u, 2).unwrap(), BigInt::from(10));
    }

    #[test]
    fn division_inverts_multiplication() {
        let p = Poly::from_i64(&[3, -1, 4, 1, -5]);
        assert_eq!(p.mul_one_minus_t().div_one_minus_t(), Some(p.clone()));
        assert_eq!(p.div_one_minus_t(), None);
    }

    fn random_complex() -> impl Strategy<Value = SimplicialComplex> {
        (1usize..=6).prop_flat_map(|n| {
            proptest::collection::vec(1u64..(1 << n), 1..5).prop_map(move |bits| {
                SimplicialComplex::from_faces(n, bits.into_iter().map(Face::from_bits).collect())
                    .unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn expansion_matches_monomial_count(c in random_complex()) {
            let f = c.f_vector().unwrap();
            let s = series_from_f(&f).unwrap();
            prop_assert_eq!(s.pole_order as isize, f.dim() + 1);
            let coeffs = s.expand(5);
            for (j, coeff) in coeffs.iter().enumerate() {
                prop_assert_eq!(coeff, &hilbert_function_direct(&c, j).unwrap());
                prop_assert_eq!(coeff, &BigInt::from(count_monomials(&c, j)));
            }
        }

        #[test]
        fn h_transform_matches_numerator(c in random_complex()) {
            let f = c.f_vector().unwrap();
            let h = h_from_f(&f);
            let s = series_from_f(&f).unwrap();
            prop_assert_eq!(h.normalized(), s.h_vector().unwrap());
            prop_assert_eq!(&h.0[0], &BigInt::one());
            prop_assert_eq!(&h.0[1], &(&f.entries()[0] - BigInt::from(f.dim() + 1)));
            if c.is_pure() {
                prop_assert_eq!(h.sum(), f.entries().last().unwrap().clone());
            }
        }
    }
}
