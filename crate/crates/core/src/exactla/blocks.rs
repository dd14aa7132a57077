use super::{complement_basis, Rational, Subspace};
use num_traits::Zero;

/// One piece of a [`BlockSubspace`]: `copies` adjacent copies of `local`,
/// starting at `offset` in the ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBlock {
    pub offset: usize,
    pub copies: usize,
    pub local: Subspace,
}

impl SubspaceBlock {
    pub fn width(&self) -> usize {
        self.copies * self.local.ambient_dim()
    }
}

/// A subspace that splits along disjoint coordinate ranges. Operators with
/// block structure (in particular `Id ⊗ M`) have kernels and images of this
/// form, and keeping them factored avoids materialising very wide vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSubspace {
    ambient_dim: usize,
    parts: Vec<SubspaceBlock>,
}

impl BlockSubspace {
    /// Parts must occupy pairwise disjoint coordinate ranges.
    pub fn new(ambient_dim: usize, parts: Vec<SubspaceBlock>) -> Self {
        let mut ranges: Vec<(usize, usize)> =
            parts.iter().map(|p| (p.offset, p.offset + p.width())).collect();
        ranges.sort();
        for w in ranges.windows(2) {
            assert!(w[0].1 <= w[1].0, "overlapping subspace blocks");
        }
        if let Some(last) = ranges.last() {
            assert!(last.1 <= ambient_dim, "subspace block outside ambient space");
        }
        BlockSubspace { ambient_dim, parts }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn parts(&self) -> &[SubspaceBlock] {
        &self.parts
    }

    pub fn dim(&self) -> usize {
        self.parts.iter().map(|p| p.copies * p.local.dim()).sum()
    }

    /// Every basis vector written out in full ambient coordinates.
    pub fn to_subspace(&self) -> Subspace {
        let mut basis = Vec::with_capacity(self.dim());
        for p in &self.parts {
            let w = p.local.ambient_dim();
            for copy in 0..p.copies {
                for b in p.local.basis() {
                    let mut v = vec![Rational::zero(); self.ambient_dim];
                    let start = p.offset + copy * w;
                    v[start..start + w].clone_from_slice(b);
                    basis.push(v);
                }
            }
        }
        Subspace::new(self.ambient_dim, basis).expect("block bases are independent")
    }

    /// Coordinate complement computed block by block. Coordinates not covered
    /// by any part are all included.
    pub fn complement(&self) -> BlockSubspace {
        let mut parts: Vec<SubspaceBlock> = self
            .parts
            .iter()
            .map(|p| SubspaceBlock {
                offset: p.offset,
                copies: p.copies,
                local: complement_basis(&p.local),
            })
            .collect();
        let mut covered = vec![false; self.ambient_dim];
        for p in &self.parts {
            covered[p.offset..p.offset + p.width()].fill(true);
        }
        let mut start = 0;
        while start < self.ambient_dim {
            if covered[start] {
                start += 1;
                continue;
            }
            let mut end = start;
            while end < self.ambient_dim && !covered[end] {
                end += 1;
            }
            parts.push(SubspaceBlock {
                offset: start,
                copies: 1,
                local: Subspace::full(end - start),
            });
            start = end;
        }
        parts.sort_by_key(|p| p.offset);
        BlockSubspace::new(self.ambient_dim, parts)
    }
}
