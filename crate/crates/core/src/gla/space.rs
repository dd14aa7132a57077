use std::collections::BTreeMap;
use std::ops::{Range, RangeInclusive};

use serde::{Deserialize, Serialize};

use super::GlaError;

/// Position of a basis vector: its degree and its index inside that degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BasisIndex {
    pub degree: i32,
    pub offset: usize,
}

impl BasisIndex {
    pub fn new(degree: i32, offset: usize) -> Self {
        BasisIndex { degree, offset }
    }
}

/// Dimensions of a graded vector space on the window `[min_degree, max_degree]`.
///
/// Global coordinates list the degrees in increasing order, so the negative
/// part always occupies a prefix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedVectorSpace {
    min_degree: i32,
    dims: Vec<usize>,
    offsets: Vec<usize>,
}

impl GradedVectorSpace {
    pub fn new(min_degree: i32, dims: Vec<usize>) -> Result<Self, GlaError> {
        if min_degree > -1 {
            return Err(GlaError::InvalidSpace(format!(
                "lowest degree must be at most -1, got {min_degree}"
            )));
        }
        if dims.is_empty() {
            return Err(GlaError::InvalidSpace("empty degree window".into()));
        }
        let max_degree = min_degree + dims.len() as i32 - 1;
        if max_degree < -1 {
            return Err(GlaError::InvalidSpace(format!(
                "highest degree must be at least -1, got {max_degree}"
            )));
        }
        let mut offsets = Vec::with_capacity(dims.len() + 1);
        let mut acc = 0;
        for &d in &dims {
            offsets.push(acc);
            acc += d;
        }
        offsets.push(acc);
        Ok(GradedVectorSpace {
            min_degree,
            dims,
            offsets,
        })
    }

    /// Window spans the smallest to the largest key; missing degrees are zero.
    pub fn from_map(dims: &BTreeMap<i32, usize>) -> Result<Self, GlaError> {
        let (Some(&lo), Some(&hi)) = (dims.keys().next(), dims.keys().next_back()) else {
            return Err(GlaError::InvalidSpace("no degrees given".into()));
        };
        let lo = lo.min(-1);
        let hi = hi.max(-1);
        GradedVectorSpace::new(lo, (lo..=hi).map(|d| dims.get(&d).copied().unwrap_or(0)).collect())
    }

    pub fn min_degree(&self) -> i32 {
        self.min_degree
    }

    pub fn max_degree(&self) -> i32 {
        self.min_degree + self.dims.len() as i32 - 1
    }

    /// `k` with lowest degree `-k`.
    pub fn depth(&self) -> usize {
        (-self.min_degree) as usize
    }

    pub fn degrees(&self) -> RangeInclusive<i32> {
        self.min_degree..=self.max_degree()
    }

    /// Dimension in `degree`, zero outside the window.
    pub fn dim(&self, degree: i32) -> usize {
        self.slot(degree).map_or(0, |s| self.dims[s])
    }

    pub fn total_dim(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    /// Total dimension of the strictly negative part.
    pub fn minus_dim(&self) -> usize {
        self.range_upto(-1).end
    }

    /// Global coordinates of degree `degree`; empty outside the window.
    pub fn range(&self, degree: i32) -> Range<usize> {
        match self.slot(degree) {
            Some(s) => self.offsets[s]..self.offsets[s + 1],
            None if degree < self.min_degree => 0..0,
            None => self.total_dim()..self.total_dim(),
        }
    }

    /// Coordinates of all degrees `<= degree`.
    pub fn range_upto(&self, degree: i32) -> Range<usize> {
        if degree < self.min_degree {
            0..0
        } else if degree >= self.max_degree() {
            0..self.total_dim()
        } else {
            0..self.range(degree).end
        }
    }

    pub fn index(&self, b: BasisIndex) -> Result<usize, GlaError> {
        if b.offset < self.dim(b.degree) {
            Ok(self.range(b.degree).start + b.offset)
        } else {
            Err(GlaError::IndexOutOfRange(format!("degree {} offset {}", b.degree, b.offset)))
        }
    }

    pub fn basis_index(&self, global: usize) -> BasisIndex {
        assert!(global < self.total_dim(), "global index out of range");
        let slot = self.offsets.partition_point(|&o| o <= global) - 1;
        BasisIndex::new(self.min_degree + slot as i32, global - self.offsets[slot])
    }

    pub fn degree_of(&self, global: usize) -> i32 {
        self.basis_index(global).degree
    }

    pub fn dims_map(&self) -> BTreeMap<i32, usize> {
        self.degrees().map(|d| (d, self.dim(d))).collect()
    }

    /// The same dimensions with the window cut or zero-padded to `[min, max]`.
    pub fn with_max_degree(&self, max_degree: i32) -> GradedVectorSpace {
        let dims = (self.min_degree..=max_degree).map(|d| self.dim(d)).collect();
        GradedVectorSpace::new(self.min_degree, dims).expect("window stays valid")
    }

    fn slot(&self, degree: i32) -> Option<usize> {
        if degree < self.min_degree || degree > self.max_degree() {
            None
        } else {
            Some((degree - self.min_degree) as usize)
        }
    }
}
