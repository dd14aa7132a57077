//! The operator `∂` from the truncated algebra's "free" degree-`(n+1)` data to
//! the corresponding second-order terms, its kernel, and a complement of its
//! image.
//!
//! The domain `fh(v^{<n+1})` is
//! `gl_{n+1}(v^{<n+1}) ⊕ Hom(g^0, g^n) ⊕ ... ⊕ Hom(g^{n-1}, g^n)`, where
//! `gl_{n+1}` consists of maps from the negative part raising degree by at
//! least `n + 1`. The operator is a direct sum of one block acting on the
//! `gl_{n+1}` part and, for each `0 <= i < n`, a block `Id ⊗ M` acting on
//! `Hom(g^i, g^n)`. It is kept in that factored form throughout.

use num_traits::Zero;

use super::algebra::{Element, ProlongedAlgebra};
use super::ProlongError;
use crate::exactla::{
    image_basis, kernel_basis, rank, BlockSubspace, Matrix, Rational, Subspace, SubspaceBlock,
};

/// `Hom(g^source, g^target)` inside the domain. Coordinate `(a, b)` sits at
/// `offset + a * target_dim + b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomBlock {
    pub source_degree: i32,
    pub target_degree: i32,
    pub source_dim: usize,
    pub target_dim: usize,
    pub offset: usize,
}

impl HomBlock {
    pub fn width(&self) -> usize {
        self.source_dim * self.target_dim
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FhLayout {
    pub n: usize,
    pub blocks: Vec<HomBlock>,
    /// Number of leading blocks that make up `gl_{n+1}`.
    pub gl_blocks: usize,
    pub gl_dim: usize,
    pub dim: usize,
}

/// Bilinear terms `g^left × g^right → g^target` inside the codomain, one
/// target vector per listed pair. Pair `p`, coordinate `t` sits at
/// `offset + p * target_dim + t`. Pair members are offsets within their
/// degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorBlock {
    pub left_degree: i32,
    pub right_degree: i32,
    pub antisymmetric: bool,
    pub target_degree: i32,
    pub pairs: Vec<(usize, usize)>,
    pub target_dim: usize,
    pub offset: usize,
}

impl TorBlock {
    pub fn width(&self) -> usize {
        self.pairs.len() * self.target_dim
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorLayout {
    pub n: usize,
    pub blocks: Vec<TorBlock>,
    /// Number of leading blocks hit by the `gl_{n+1}` part.
    pub negative_blocks: usize,
    pub negative_dim: usize,
    pub dim: usize,
}

/// `copies` diagonal copies of `matrix`, reading domain coordinates from
/// `domain_offset` and writing codomain coordinates from `codomain_offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorBlock {
    pub domain_offset: usize,
    pub codomain_offset: usize,
    pub copies: usize,
    pub matrix: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialOperator {
    pub n: usize,
    pub domain: FhLayout,
    pub codomain: TorLayout,
    pub blocks: Vec<OperatorBlock>,
}

impl PartialOperator {
    pub fn rank(&self) -> usize {
        self.blocks.iter().map(|b| b.copies * rank(&b.matrix)).sum()
    }

    pub fn kernel(&self) -> BlockSubspace {
        let parts = self
            .blocks
            .iter()
            .map(|b| SubspaceBlock {
                offset: b.domain_offset,
                copies: b.copies,
                local: kernel_basis(&b.matrix),
            })
            .collect();
        BlockSubspace::new(self.domain.dim, parts)
    }

    pub fn image(&self) -> BlockSubspace {
        let parts = self
            .blocks
            .iter()
            .map(|b| SubspaceBlock {
                offset: b.codomain_offset,
                copies: b.copies,
                local: image_basis(&b.matrix),
            })
            .collect();
        BlockSubspace::new(self.codomain.dim, parts)
    }

    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.domain.dim);
        let mut out = vec![Rational::zero(); self.codomain.dim];
        for b in &self.blocks {
            let (rows, cols) = (b.matrix.rows(), b.matrix.cols());
            for copy in 0..b.copies {
                let src = b.domain_offset + copy * cols;
                let y = b.matrix.mul_vec(&x[src..src + cols]);
                let dst = b.codomain_offset + copy * rows;
                for (slot, v) in out[dst..dst + rows].iter_mut().zip(y) {
                    *slot += v;
                }
            }
        }
        out
    }

    /// The full matrix. Only sensible for small operators.
    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.codomain.dim, self.domain.dim);
        for b in &self.blocks {
            let (rows, cols) = (b.matrix.rows(), b.matrix.cols());
            for copy in 0..b.copies {
                for r in 0..rows {
                    for c in 0..cols {
                        m[(b.codomain_offset + copy * rows + r, b.domain_offset + copy * cols + c)] =
                            b.matrix[(r, c)].clone();
                    }
                }
            }
        }
        m
    }

    /// Whether `w` is a complement of the image. When `w` splits along the
    /// same coordinate blocks as the image, the check is done per block.
    pub fn is_complement(&self, w: &BlockSubspace) -> bool {
        let image = self.image();
        if w.ambient_dim() != self.codomain.dim || image.dim() + w.dim() != self.codomain.dim {
            return false;
        }
        let aligned = image.parts().iter().all(|p| {
            w.parts()
                .iter()
                .any(|q| q.offset == p.offset && q.copies == p.copies && q.local.ambient_dim() == p.local.ambient_dim())
        }) && w.parts().iter().all(|q| {
            image
                .parts()
                .iter()
                .any(|p| q.offset == p.offset && q.copies == p.copies && q.local.ambient_dim() == p.local.ambient_dim())
        });
        if aligned {
            return image.parts().iter().all(|p| {
                let q = w.parts().iter().find(|q| q.offset == p.offset).unwrap();
                let sum = p.local.sum(&q.local);
                sum.dim() == p.local.ambient_dim() && p.local.dim() + q.local.dim() == sum.dim()
            });
        }
        let sum = image.to_subspace().sum(&w.to_subspace());
        sum.dim() == self.codomain.dim
    }
}

fn fh_layout(g: &ProlongedAlgebra, n: usize) -> Result<FhLayout, ProlongError> {
    let k = g.depth();
    let ni = n as i32;
    let dim_of = |d: i32| {
        g.dim(d)
            .ok_or(ProlongError::LayerMissing { degree: d })
    };
    let mut blocks = Vec::new();
    let mut offset = 0;
    for j in -k..=-1 {
        for t in (j + ni + 1)..=ni {
            let block = HomBlock {
                source_degree: j,
                target_degree: t,
                source_dim: dim_of(j)?,
                target_dim: dim_of(t)?,
                offset,
            };
            offset += block.width();
            blocks.push(block);
        }
    }
    let gl_blocks = blocks.len();
    let gl_dim = offset;
    for i in 0..ni {
        let block = HomBlock {
            source_degree: i,
            target_degree: ni,
            source_dim: dim_of(i)?,
            target_dim: dim_of(ni)?,
            offset,
        };
        offset += block.width();
        blocks.push(block);
    }
    Ok(FhLayout {
        n,
        blocks,
        gl_blocks,
        gl_dim,
        dim: offset,
    })
}

fn tor_block(
    left: i32,
    right: i32,
    target: i32,
    left_dim: usize,
    right_dim: usize,
    target_dim: usize,
    offset: usize,
) -> TorBlock {
    let antisymmetric = left == right;
    let mut pairs = Vec::new();
    if antisymmetric {
        for a in 0..left_dim {
            for b in a + 1..left_dim {
                pairs.push((a, b));
            }
        }
    } else {
        // Right member major, so that blocks `Id ⊗ M` line up with copies.
        for b in 0..right_dim {
            for a in 0..left_dim {
                pairs.push((a, b));
            }
        }
    }
    TorBlock {
        left_degree: left,
        right_degree: right,
        antisymmetric,
        target_degree: target,
        pairs,
        target_dim,
        offset,
    }
}

fn tor_layout(g: &ProlongedAlgebra, n: usize) -> Result<TorLayout, ProlongError> {
    let k = g.depth();
    let ni = n as i32;
    let dim_of = |d: i32| {
        g.dim(d)
            .ok_or(ProlongError::LayerMissing { degree: d })
    };
    let mut blocks = Vec::new();
    let mut offset = 0;
    if n == 0 {
        for i in -k..=-1 {
            for j in i..=-1 {
                let t = i + j + 1;
                if t < -k {
                    continue;
                }
                let b = tor_block(i, j, t, dim_of(i)?, dim_of(j)?, dim_of(t)?, offset);
                offset += b.width();
                blocks.push(b);
            }
        }
    } else {
        for j in (-k..=-1).rev() {
            let t = j + ni;
            let b = tor_block(-1, j, t, dim_of(-1)?, dim_of(j)?, dim_of(t)?, offset);
            offset += b.width();
                blocks.push(b);
        }
    }
    let negative_blocks = blocks.len();
    let negative_dim = offset;
    for i in 0..ni {
        let b = tor_block(-1, i, ni - 1, dim_of(-1)?, dim_of(i)?, dim_of(ni - 1)?, offset);
        offset += b.width();
                blocks.push(b);
    }
    Ok(TorLayout {
        n,
        blocks,
        negative_blocks,
        negative_dim,
        dim: offset,
    })
}

/// Build `∂` on `fh(v^{<n+1})`. Needs the layers up to degree `n`.
pub fn partial_operator(g: &ProlongedAlgebra, n: usize) -> Result<PartialOperator, ProlongError> {
    if g.computed_degree() < n {
        return Err(ProlongError::LayerMissing { degree: n as i32 });
    }
    let domain = fh_layout(g, n)?;
    let codomain = tor_layout(g, n)?;
    let ni = n as i32;
    let shape = g.shape_layout(ni + 1)?;

    // Block on gl_{n+1}: only the degree-(n+1) components contribute.
    let mut columns = Vec::with_capacity(domain.gl_dim);
    for hb in &domain.blocks[..domain.gl_blocks] {
        let lifts = hb.target_degree == hb.source_degree + ni + 1;
        for a in 0..hb.source_dim {
            for b in 0..hb.target_dim {
                if !lifts {
                    columns.push(vec![Rational::zero(); codomain.negative_dim]);
                    continue;
                }
                let sb = shape
                    .blocks
                    .iter()
                    .find(|s| s.source_degree == hb.source_degree)
                    .expect("shape covers every negative degree");
                let mut map = vec![Rational::zero(); shape.dim];
                map[sb.offset + a * sb.target_dim + b] = Rational::from_integer(1.into());
                let mut column = Vec::with_capacity(codomain.negative_dim);
                for tb in &codomain.blocks[..codomain.negative_blocks] {
                    for &(x, y) in &tb.pairs {
                        let u = g.base_unit(tb.left_degree, x);
                        let v = g.base_unit(tb.right_degree, y);
                        column.extend(g.relation_residual(&shape, &map, &u, &v)?.coords);
                    }
                }
                columns.push(column);
            }
        }
    }
    let mut blocks = vec![OperatorBlock {
        domain_offset: 0,
        codomain_offset: 0,
        copies: 1,
        matrix: Matrix::from_columns(codomain.negative_dim, &columns),
    }];

    // Blocks Id ⊗ M on Hom(g^i, g^n), with M: X ↦ (u ↦ X(u)) = -[u, X].
    if n >= 1 {
        let m = positive_evaluation_matrix(g, n)?;
        for (hb, tb) in domain.blocks[domain.gl_blocks..]
            .iter()
            .zip(&codomain.blocks[codomain.negative_blocks..])
        {
            blocks.push(OperatorBlock {
                domain_offset: hb.offset,
                codomain_offset: tb.offset,
                copies: hb.source_dim,
                matrix: m.clone(),
            });
        }
    }
    Ok(PartialOperator {
        n,
        domain,
        codomain,
        blocks,
    })
}

// Columns indexed by the layer basis of degree n, rows by (u in g^{-1}, t).
fn positive_evaluation_matrix(g: &ProlongedAlgebra, n: usize) -> Result<Matrix, ProlongError> {
    let ni = n as i32;
    let dn = g.dim(ni).ok_or(ProlongError::LayerMissing { degree: ni })?;
    let d1 = g.base().space().dim(-1);
    let target = g.dim(ni - 1).expect("lower layers are known");
    let mut columns = Vec::with_capacity(dn);
    for r in 0..dn {
        let x = Element::unit(ni, dn, r);
        let mut column = Vec::with_capacity(d1 * target);
        for u in 0..d1 {
            column.extend(g.extended_bracket(&x, &g.base_unit(-1, u))?.coords);
        }
        columns.push(column);
    }
    Ok(Matrix::from_columns(d1 * target, &columns))
}

/// A complement of `Im ∂` in the codomain, spanned by coordinate vectors.
pub fn tor_complement(g: &ProlongedAlgebra, n: usize) -> Result<BlockSubspace, ProlongError> {
    Ok(partial_operator(g, n)?.image().complement())
}

/// Outcome of comparing `ker ∂` with `g^{n+1} ⊕ gl_{n+2}(v^{<n+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelCheck {
    pub n: usize,
    pub kernel_dim: usize,
    pub expected_dim: usize,
    pub kernel_in_expected: bool,
    pub expected_in_kernel: bool,
    /// The blocks on `Hom(g^i, g^n)` have trivial kernel.
    pub injective_off_negative: bool,
}

impl KernelCheck {
    pub fn holds(&self) -> bool {
        self.kernel_in_expected && self.expected_in_kernel && self.injective_off_negative
    }
}

/// Compare the kernel of `∂` with the layer of degree `n + 1` plus all maps of
/// degree at least `n + 2`, by inclusion both ways. Needs layers up to `n + 1`.
pub fn verify_partial_kernel(g: &ProlongedAlgebra, n: usize) -> Result<KernelCheck, ProlongError> {
    let op = partial_operator(g, n)?;
    let layer = g
        .layer(n + 1)
        .ok_or(ProlongError::LayerMissing { degree: n as i32 + 1 })?;
    let shape = g.shape(n + 1).expect("layer exists");
    let gl_dim = op.domain.gl_dim;

    let mut expected = Vec::new();
    for lb in layer.basis() {
        let mut v = vec![Rational::zero(); gl_dim];
        for hb in &op.domain.blocks[..op.domain.gl_blocks] {
            if hb.target_degree != hb.source_degree + n as i32 + 1 {
                continue;
            }
            let sb = shape
                .blocks
                .iter()
                .find(|s| s.source_degree == hb.source_degree)
                .expect("shape covers every negative degree");
            v[hb.offset..hb.offset + hb.width()]
                .clone_from_slice(&lb[sb.offset..sb.offset + sb.source_dim * sb.target_dim]);
        }
        expected.push(v);
    }
    for hb in &op.domain.blocks[..op.domain.gl_blocks] {
        if hb.target_degree > hb.source_degree + n as i32 + 1 {
            for c in hb.offset..hb.offset + hb.width() {
                let mut v = vec![Rational::zero(); gl_dim];
                v[c] = Rational::from_integer(1.into());
                expected.push(v);
            }
        }
    }
    let expected = Subspace::span(gl_dim, expected);

    let negative = &op.blocks[0];
    let kernel = kernel_basis(&negative.matrix);
    let injective_off_negative = op.blocks[1..]
        .iter()
        .all(|b| b.copies == 0 || rank(&b.matrix) == b.matrix.cols());
    Ok(KernelCheck {
        n,
        kernel_dim: op.kernel().dim(),
        expected_dim: expected.dim(),
        kernel_in_expected: kernel.is_subspace_of(&expected),
        expected_in_kernel: expected.is_subspace_of(&kernel),
        injective_off_negative,
    })
}
