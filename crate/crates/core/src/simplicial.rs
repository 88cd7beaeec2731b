//! Simplicial complexes given by their facets over a ground set `1..=N`.
//!
//! Faces are bitmasks (bit `i - 1` for label `i`), so a complex can have at
//! most 64 ground elements. Exhaustive routines additionally refuse ground
//! sets larger than [`ENUMERATION_GUARD`].

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::graph::Graph;
use crate::trees::{enumerate_spanning_trees_with, TreeError};
use crate::{Exec, ENUMERATION_GUARD};

const MAX_GROUND: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("no nonempty facet given")]
    EmptyInput,
    #[error("label {label} outside ground set 1..={ground}")]
    LabelOutOfRange { label: usize, ground: usize },
    #[error("ground set of {ground} elements exceeds the limit of {limit}")]
    TooLarge { ground: usize, limit: usize },
    #[error("complex is not pure")]
    NotPure,
    #[error("order is not a permutation of the {facets} facets")]
    NotPermutation { facets: usize },
    #[error(transparent)]
    Trees(#[from] TreeError),
}

/// A finite set of labels, stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    /// Builds a face from 1-based labels (each must be in `1..=64`).
    pub fn from_labels<I: IntoIterator<Item = usize>>(labels: I) -> Result<Face, ComplexError> {
        let mut bits = 0u64;
        for l in labels {
            if l == 0 || l > MAX_GROUND {
                return Err(ComplexError::LabelOutOfRange {
                    label: l,
                    ground: MAX_GROUND,
                });
            }
            bits |= 1 << (l - 1);
        }
        Ok(Face(bits))
    }

    pub fn from_bits(bits: u64) -> Face {
        Face(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// `|F| - 1`; the empty face has dimension -1.
    pub fn dim(self) -> isize {
        self.len() as isize - 1
    }

    pub fn contains(self, label: usize) -> bool {
        (1..=MAX_GROUND).contains(&label) && self.0 >> (label - 1) & 1 == 1
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn without(self, label: usize) -> Face {
        Face(self.0 & !(1 << (label - 1)))
    }

    pub fn with(self, label: usize) -> Face {
        Face(self.0 | 1 << (label - 1))
    }

    /// Largest label, or 0 for the empty face.
    pub fn max_label(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    pub fn labels(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..MAX_GROUND).filter(move |i| bits >> i & 1 == 1).map(|i| i + 1)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.labels().collect()
    }

    /// All subsets of this face.
    fn subsets(self) -> impl Iterator<Item = Face> {
        let full = self.0;
        let mut sub = full;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let cur = sub;
            if sub == 0 {
                done = true;
            } else {
                sub = (sub - 1) & full;
            }
            Some(Face(cur))
        })
    }
}

/// Lexicographic order on the sorted label lists.
impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.labels().cmp(other.labels())
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, l) in self.labels().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

/// `f_0, ..., f_d`: the number of faces of each dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector(pub Vec<BigInt>);

impl FVector {
    pub fn from_counts<I: IntoIterator<Item = u64>>(counts: I) -> FVector {
        FVector(counts.into_iter().map(BigInt::from).collect())
    }

    /// Dimension `d` of the complex; -1 for the complex `{∅}`.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    /// `f_i`, with `f_{-1} = 1` and zero beyond the top dimension.
    pub fn get(&self, i: isize) -> BigInt {
        match i {
            -1 => BigInt::from(1),
            i if i < -1 => BigInt::from(0),
            i => self.0.get(i as usize).cloned().unwrap_or_default(),
        }
    }
}

/// A face `F`, an element `i ∈ F` and a larger `j ∉ F` such that
/// `(F \ {i}) ∪ {j}` is not a face.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShiftWitness {
    pub face: Face,
    pub removed: usize,
    pub added: usize,
}

/// Outcome of a shelling-order search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShellingSearch {
    /// A shelling order, as 0-based facet indices.
    Found(Vec<usize>),
    /// Exhaustive search proved no order exists.
    NotShellable,
    /// The greedy search for large complexes got stuck; nothing is proved.
    Unknown,
}

/// Facet count up to which [`SimplicialComplex::find_shelling_order`] is exhaustive.
pub const EXHAUSTIVE_SHELLING_LIMIT: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    ground_size: usize,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// The complex generated by `candidates`: duplicates and candidates
    /// contained in other candidates are dropped, the rest sorted.
    pub fn from_facets(ground_size: usize, candidates: &[Vec<usize>]) -> Result<Self, ComplexError> {
        if ground_size > MAX_GROUND {
            return Err(ComplexError::TooLarge {
                ground: ground_size,
                limit: MAX_GROUND,
            });
        }
        let mut faces = Vec::with_capacity(candidates.len());
        for c in candidates {
            if let Some(&label) = c.iter().find(|&&l| l == 0 || l > ground_size) {
                return Err(ComplexError::LabelOutOfRange {
                    label,
                    ground: ground_size,
                });
            }
            faces.push(Face::from_labels(c.iter().copied())?);
        }
        Self::from_faces(ground_size, faces)
    }

    pub fn from_faces(ground_size: usize, mut faces: Vec<Face>) -> Result<Self, ComplexError> {
        if faces.iter().all(|f| f.is_empty()) {
            return Err(ComplexError::EmptyInput);
        }
        faces.sort();
        faces.dedup();
        let facets: Vec<Face> = faces
            .iter()
            .copied()
            .filter(|&f| !faces.iter().any(|&g| g != f && f.is_subset(g)))
            .collect();
        Ok(SimplicialComplex {
            ground_size,
            facets,
        })
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    /// Facets in lexicographic order.
    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.dim()).max().unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        self.facets.iter().all(|f| f.len() == self.facets[0].len())
    }

    /// Ground labels lying in no facet.
    pub fn unused(&self) -> Vec<usize> {
        let used = self.facets.iter().fold(0u64, |acc, f| acc | f.bits());
        (1..=self.ground_size)
            .filter(|&l| used >> (l - 1) & 1 == 0)
            .collect()
    }

    fn check_labels(&self, f: Face) -> Result<(), ComplexError> {
        if f.max_label() > self.ground_size {
            return Err(ComplexError::LabelOutOfRange {
                label: f.max_label(),
                ground: self.ground_size,
            });
        }
        Ok(())
    }

    fn check_guard(&self) -> Result<(), ComplexError> {
        if self.ground_size > ENUMERATION_GUARD {
            return Err(ComplexError::TooLarge {
                ground: self.ground_size,
                limit: ENUMERATION_GUARD,
            });
        }
        Ok(())
    }

    /// True iff `f` lies inside some facet.
    pub fn contains_face(&self, f: Face) -> Result<bool, ComplexError> {
        self.check_labels(f)?;
        Ok(self.has(f))
    }

    fn has(&self, f: Face) -> bool {
        self.facets.iter().any(|&g| f.is_subset(g))
    }

    /// Every face, sorted by bitmask value.
    pub fn all_faces_with(&self, exec: Exec) -> Result<Vec<Face>, ComplexError> {
        self.check_guard()?;
        let mut bits: Vec<u64> = exec.flat_map(self.facets.clone(), |facet| {
            facet.subsets().map(Face::bits).collect()
        });
        bits.sort_unstable();
        bits.dedup();
        Ok(bits.into_iter().map(Face).collect())
    }

    pub fn all_faces(&self) -> Result<Vec<Face>, ComplexError> {
        self.all_faces_with(Exec::default())
    }

    /// Faces of dimension `i` in lexicographic order; `i = -1` gives `[∅]`.
    pub fn faces_of_dim(&self, i: isize) -> Result<Vec<Face>, ComplexError> {
        let mut out: Vec<Face> = self
            .all_faces()?
            .into_iter()
            .filter(|f| f.dim() == i)
            .collect();
        out.sort();
        Ok(out)
    }

    pub fn f_vector_with(&self, exec: Exec) -> Result<FVector, ComplexError> {
        let d = self.dim();
        let mut counts = vec![0u64; (d + 1).max(0) as usize];
        for f in self.all_faces_with(exec)? {
            if !f.is_empty() {
                counts[f.len() - 1] += 1;
            }
        }
        Ok(FVector::from_counts(counts))
    }

    pub fn f_vector(&self) -> Result<FVector, ComplexError> {
        self.f_vector_with(Exec::default())
    }

    /// Inclusion-minimal subsets of the ground set that are not faces; these
    /// index the squarefree generators of the Stanley–Reisner ideal.
    pub fn minimal_nonfaces(&self) -> Result<Vec<Face>, ComplexError> {
        let faces = self.all_faces()?;
        let is_face = |f: Face| faces.binary_search_by_key(&f.bits(), |g| g.bits()).is_ok();
        let mut out = Vec::new();
        // Every minimal non-face is a face plus one element.
        for &f in &faces {
            for x in (1..=self.ground_size).filter(|&x| !f.contains(x)) {
                let g = f.with(x);
                if x > f.max_label() && !is_face(g) && g.labels().all(|y| is_face(g.without(y))) {
                    out.push(g);
                }
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// The first violation of shiftedness, scanning faces by size, then
    /// lexicographically, then `i` and `j` ascending. `None` if shifted.
    pub fn shift_violation(&self) -> Result<Option<ShiftWitness>, ComplexError> {
        let mut faces = self.all_faces()?;
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        for &f in &faces {
            for i in f.labels() {
                for j in (i + 1..=self.ground_size).filter(|&j| !f.contains(j)) {
                    if !self.has(f.without(i).with(j)) {
                        return Ok(Some(ShiftWitness {
                            face: f,
                            removed: i,
                            added: j,
                        }));
                    }
                }
            }
        }
        Ok(None)
    }

    pub fn is_shifted(&self) -> Result<bool, ComplexError> {
        Ok(self.shift_violation()?.is_none())
    }

    fn check_order(&self, order: &[usize]) -> Result<(), ComplexError> {
        if !self.is_pure() {
            return Err(ComplexError::NotPure);
        }
        let mut seen = vec![false; self.facets.len()];
        let ok = order.len() == self.facets.len()
            && order
                .iter()
                .all(|&i| i < seen.len() && !std::mem::replace(&mut seen[i], true));
        if ok {
            Ok(())
        } else {
            Err(ComplexError::NotPermutation {
                facets: self.facets.len(),
            })
        }
    }

    /// Whether `order` (0-based facet indices) is a shelling: each facet
    /// after the first meets the union of its predecessors in a pure
    /// subcomplex of codimension one.
    ///
    /// Checked through the facet-pair criterion: for every earlier `F_j`
    /// there is an earlier `F_l` with `|F_k \ F_l| = 1` and
    /// `F_k ∩ F_j ⊆ F_k ∩ F_l`.
    pub fn is_shelling_order(&self, order: &[usize]) -> Result<bool, ComplexError> {
        self.check_order(order)?;
        let seq: Vec<Face> = order.iter().map(|&i| self.facets[i]).collect();
        Ok((1..seq.len()).all(|k| extends_shelling(&seq[..k], seq[k])))
    }

    /// The same predicate as [`is_shelling_order`](Self::is_shelling_order),
    /// checked directly: the maximal sets among `F_k ∩ F_j`, `j < k`, must
    /// all have size `|F_k| - 1`.
    pub fn is_shelling_order_by_union(&self, order: &[usize]) -> Result<bool, ComplexError> {
        self.check_order(order)?;
        let seq: Vec<Face> = order.iter().map(|&i| self.facets[i]).collect();
        Ok((1..seq.len()).all(|k| {
            let cuts: Vec<Face> = seq[..k].iter().map(|&g| seq[k].intersection(g)).collect();
            cuts.iter()
                .filter(|&&c| !cuts.iter().any(|&o| o != c && c.is_subset(o)))
                .all(|c| c.len() + 1 == seq[k].len())
        }))
    }

    /// Searches for a shelling order. Exhaustive (backtracking, identity
    /// order tried first) up to [`EXHAUSTIVE_SHELLING_LIMIT`] facets, greedy
    /// beyond.
    pub fn find_shelling_order(&self) -> Result<ShellingSearch, ComplexError> {
        if !self.is_pure() {
            return Err(ComplexError::NotPure);
        }
        let count = self.facets.len();
        if count <= EXHAUSTIVE_SHELLING_LIMIT {
            let mut order = Vec::with_capacity(count);
            let mut used = vec![false; count];
            return Ok(if self.backtrack(&mut order, &mut used) {
                ShellingSearch::Found(order)
            } else {
                ShellingSearch::NotShellable
            });
        }
        let mut order = vec![0];
        let mut used = vec![false; count];
        used[0] = true;
        while order.len() < count {
            let prefix: Vec<Face> = order.iter().map(|&i| self.facets[i]).collect();
            match (0..count).find(|&i| !used[i] && extends_shelling(&prefix, self.facets[i])) {
                Some(i) => {
                    used[i] = true;
                    order.push(i);
                }
                None => return Ok(ShellingSearch::Unknown),
            }
        }
        Ok(ShellingSearch::Found(order))
    }

    fn backtrack(&self, order: &mut Vec<usize>, used: &mut [bool]) -> bool {
        if order.len() == self.facets.len() {
            return true;
        }
        let prefix: Vec<Face> = order.iter().map(|&i| self.facets[i]).collect();
        for i in 0..self.facets.len() {
            if used[i] || (!prefix.is_empty() && !extends_shelling(&prefix, self.facets[i])) {
                continue;
            }
            used[i] = true;
            order.push(i);
            if self.backtrack(order, used) {
                return true;
            }
            order.pop();
            used[i] = false;
        }
        false
    }
}

fn extends_shelling(prefix: &[Face], next: Face) -> bool {
    let adjacent: Vec<Face> = prefix
        .iter()
        .map(|&g| next.intersection(g))
        .filter(|c| c.len() + 1 == next.len())
        .collect();
    prefix.iter().all(|&g| {
        let cut = next.intersection(g);
        adjacent.iter().any(|&a| cut.is_subset(a))
    })
}

/// `Δ_s(G)`: the complex on the edge labels of `g` whose facets are its
/// spanning trees.
pub fn spanning_complex(g: &Graph) -> Result<SimplicialComplex, ComplexError> {
    spanning_complex_with(g, Exec::default())
}

pub fn spanning_complex_with(g: &Graph, exec: Exec) -> Result<SimplicialComplex, ComplexError> {
    let trees = enumerate_spanning_trees_with(g, exec)?;
    SimplicialComplex::from_facets(g.edge_count(), trees.trees())
}
