use num_traits::Zero;

use super::{ProlongError, DEFAULT_CAP};
use crate::exactla::{kernel_basis, Matrix, Rational, Subspace};
use crate::gla::{is_fundamental, GradedLieAlgebra};

/// A homogeneous element: its degree and coordinates in the basis of that
/// degree (the base basis for degrees `<= 0`, the layer basis above).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    pub degree: i32,
    pub coords: Vec<Rational>,
}

impl Element {
    pub fn zero(degree: i32, dim: usize) -> Self {
        Element {
            degree,
            coords: vec![Rational::zero(); dim],
        }
    }

    pub fn unit(degree: i32, dim: usize, i: usize) -> Self {
        let mut e = Element::zero(degree, dim);
        e.coords[i] = Rational::from_integer(1.into());
        e
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    fn add_scaled(&mut self, factor: &Rational, other: &Element) {
        debug_assert_eq!(self.degree, other.degree);
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            *a += factor * b;
        }
    }
}

/// One block `Hom(g^j, g^{j+m})` of a degree-`m` map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeBlock {
    pub source_degree: i32,
    pub source_dim: usize,
    pub target_dim: usize,
    pub offset: usize,
}

/// Coordinate layout of degree-`m` maps from the negative part. The image of
/// source basis vector `a` of block `j` occupies
/// `offset + a * target_dim .. offset + (a + 1) * target_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeLayout {
    pub degree: i32,
    pub blocks: Vec<ShapeBlock>,
    pub dim: usize,
}

impl ShapeLayout {
    fn block(&self, source_degree: i32) -> &ShapeBlock {
        let first = self.blocks[0].source_degree;
        &self.blocks[(source_degree - first) as usize]
    }

    /// Evaluate the map with coordinates `map` on a negative element.
    pub fn apply(&self, map: &[Rational], v: &Element) -> Element {
        let block = self.block(v.degree);
        let mut out = Element::zero(v.degree + self.degree, block.target_dim);
        for (a, va) in v.coords.iter().enumerate() {
            if va.is_zero() {
                continue;
            }
            let start = block.offset + a * block.target_dim;
            for (t, slot) in out.coords.iter_mut().enumerate() {
                let m = &map[start + t];
                if !m.is_zero() {
                    *slot += va * m;
                }
            }
        }
        out
    }
}

/// A base algebra together with the prolongation layers computed so far.
#[derive(Clone, Debug)]
pub struct ProlongedAlgebra {
    base: GradedLieAlgebra,
    layers: Vec<Layer>,
}

#[derive(Clone, Debug)]
struct Layer {
    shape: ShapeLayout,
    basis: Subspace,
}

/// A basis vector of a layer that violates the derivation rule on some pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationFailure {
    pub degree: usize,
    pub basis_vector: usize,
    pub left: String,
    pub right: String,
}

impl ProlongedAlgebra {
    /// Checks that the base lives in degrees `[-k, 0]` and is fundamental.
    pub fn new(base: GradedLieAlgebra) -> Result<Self, ProlongError> {
        let max = base.space().max_degree();
        if max > 0 {
            return Err(ProlongError::DegreeWindow { max_degree: max });
        }
        let report = is_fundamental(&base)?;
        if !report.is_fundamental() {
            return Err(ProlongError::NotFundamental(report));
        }
        Ok(ProlongedAlgebra {
            base,
            layers: Vec::new(),
        })
    }

    pub fn base(&self) -> &GradedLieAlgebra {
        &self.base
    }

    pub fn depth(&self) -> i32 {
        -self.base.space().min_degree()
    }

    /// Highest degree whose layer is known (0 before any step).
    pub fn computed_degree(&self) -> usize {
        self.layers.len()
    }

    /// Dimension of degree `d`, if known. Degrees below `-k` have dimension 0.
    pub fn dim(&self, d: i32) -> Option<usize> {
        if d <= 0 {
            Some(self.base.space().dim(d))
        } else {
            self.layers.get(d as usize - 1).map(|l| l.basis.dim())
        }
    }

    fn known_dim(&self, d: i32) -> Result<usize, ProlongError> {
        self.dim(d).ok_or(ProlongError::LayerMissing { degree: d })
    }

    /// Dimensions of all known degrees from `-k` upwards.
    pub fn dims_by_degree(&self) -> Vec<(i32, usize)> {
        let top = self.layers.len() as i32;
        (-self.depth()..=top)
            .map(|d| (d, self.dim(d).unwrap_or(0)))
            .collect()
    }

    /// The layer of degree `m >= 1` as a subspace of its shape space.
    pub fn layer(&self, m: usize) -> Option<&Subspace> {
        self.layers.get(m.checked_sub(1)?).map(|l| &l.basis)
    }

    pub fn shape(&self, m: usize) -> Option<&ShapeLayout> {
        self.layers.get(m.checked_sub(1)?).map(|l| &l.shape)
    }

    /// Coordinate layout for degree-`m` maps, needing degrees below `m`.
    pub fn shape_layout(&self, m: i32) -> Result<ShapeLayout, ProlongError> {
        if m < 1 {
            return Err(ProlongError::DegreeError(format!(
                "shape layouts exist for degrees >= 1, got {m}"
            )));
        }
        let mut blocks = Vec::new();
        let mut offset = 0;
        for j in -self.depth()..=-1 {
            let source_dim = self.base.space().dim(j);
            let target_dim = self.known_dim(j + m)?;
            blocks.push(ShapeBlock {
                source_degree: j,
                source_dim,
                target_dim,
                offset,
            });
            offset += source_dim * target_dim;
        }
        Ok(ShapeLayout {
            degree: m,
            blocks,
            dim: offset,
        })
    }

    /// Bracket of two base elements of degrees `<= 0`.
    fn base_bracket(&self, x: &Element, y: &Element) -> Element {
        let space = self.base.space();
        let d = x.degree + y.degree;
        let mut out = Element::zero(d, if d < space.min_degree() { 0 } else { space.dim(d) });
        if out.coords.is_empty() {
            return out;
        }
        let tgt = space.range(d).start;
        let xs = space.range(x.degree).start;
        let ys = space.range(y.degree).start;
        for (a, xa) in x.coords.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.coords.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                for (i, c) in self.base.bracket_basis(xs + a, ys + b) {
                    out.coords[i - tgt] += xa * yb * c;
                }
            }
        }
        out
    }

    /// Shape coordinates of a degree-`m` element given in layer coordinates.
    pub fn to_shape(&self, x: &Element) -> Result<Vec<Rational>, ProlongError> {
        let layer = self
            .layers
            .get(x.degree as usize - 1)
            .ok_or(ProlongError::LayerMissing { degree: x.degree })?;
        let mut out = vec![Rational::zero(); layer.shape.dim];
        for (c, b) in x.coords.iter().zip(layer.basis.basis()) {
            if c.is_zero() {
                continue;
            }
            for (slot, bi) in out.iter_mut().zip(b) {
                *slot += c * bi;
            }
        }
        Ok(out)
    }

    /// `[x, v]` for any known element `x` and `v` in the negative part.
    pub fn extended_bracket(&self, x: &Element, v: &Element) -> Result<Element, ProlongError> {
        if v.degree >= 0 || v.degree < -self.depth() {
            return Err(ProlongError::DegreeError(format!(
                "right argument must be negative, got degree {}",
                v.degree
            )));
        }
        self.check_element(x)?;
        self.check_element(v)?;
        if x.degree <= 0 {
            return Ok(self.base_bracket(x, v));
        }
        let map = self.to_shape(x)?;
        let layer = &self.layers[x.degree as usize - 1];
        Ok(layer.shape.apply(&map, v))
    }

    fn check_element(&self, x: &Element) -> Result<(), ProlongError> {
        let dim = if x.degree < -self.depth() {
            0
        } else {
            self.known_dim(x.degree)?
        };
        if x.coords.len() != dim {
            return Err(ProlongError::DegreeError(format!(
                "element of degree {} has {} coordinates, expected {dim}",
                x.degree,
                x.coords.len()
            )));
        }
        Ok(())
    }

    /// `[u, y]` with `u` negative; for `deg y >= 1` this is `-y(u)`.
    fn bracket_negative_left(&self, u: &Element, y: &Element) -> Result<Element, ProlongError> {
        let mut out = self.extended_bracket(y, u)?;
        for c in out.coords.iter_mut() {
            *c = -c.clone();
        }
        Ok(out)
    }

    /// `A([u, v]) - [A(u), v] - [u, A(v)]` for a degree-`shape.degree` map `A`
    /// and negative elements `u`, `v`.
    pub fn relation_residual(
        &self,
        shape: &ShapeLayout,
        map: &[Rational],
        u: &Element,
        v: &Element,
    ) -> Result<Element, ProlongError> {
        let m = shape.degree;
        let target = u.degree + v.degree + m;
        let target_dim = self.known_dim(target)?;
        let mut out = Element::zero(target, target_dim);
        let uv = self.base_bracket(u, v);
        if uv.degree >= -self.depth() {
            out.add_scaled(&one(), &shape.apply(map, &uv));
        }
        let au = shape.apply(map, u);
        out.add_scaled(&-one(), &self.bracket_with_negative(&au, v)?);
        let av = shape.apply(map, v);
        out.add_scaled(&-one(), &self.bracket_negative_left_any(u, &av)?);
        Ok(out)
    }

    // `[x, v]` where `x` may sit in any degree, including below `-k`.
    fn bracket_with_negative(&self, x: &Element, v: &Element) -> Result<Element, ProlongError> {
        let d = x.degree + v.degree;
        if x.degree < -self.depth() || d < -self.depth() {
            return Ok(Element::zero(d, 0));
        }
        self.extended_bracket(x, v)
    }

    fn bracket_negative_left_any(&self, u: &Element, y: &Element) -> Result<Element, ProlongError> {
        let d = u.degree + y.degree;
        if y.degree < -self.depth() || d < -self.depth() {
            return Ok(Element::zero(d, 0));
        }
        if y.degree <= 0 {
            return Ok(self.base_bracket(u, y));
        }
        self.bracket_negative_left(u, y)
    }

    /// Unit element `e_i` of a degree `<= 0`.
    pub fn base_unit(&self, degree: i32, i: usize) -> Element {
        Element::unit(degree, self.base.space().dim(degree), i)
    }

    /// Compute and append the next layer.
    pub fn extend(&mut self) -> Result<usize, ProlongError> {
        let m = self.layers.len() + 1;
        let (shape, basis) = prolong_step(self, m)?;
        let dim = basis.dim();
        self.layers.push(Layer { shape, basis });
        Ok(dim)
    }

    /// Make sure layers up to degree `m` exist.
    pub fn ensure_layers(&mut self, m: usize) -> Result<(), ProlongError> {
        while self.layers.len() < m {
            self.extend()?;
        }
        Ok(())
    }

    /// A copy whose layer `m` is replaced by the span of `basis`; higher
    /// layers are dropped. Meant for probing the verification routines.
    pub fn with_layer_replaced(
        &self,
        m: usize,
        basis: Vec<Vec<Rational>>,
    ) -> Result<ProlongedAlgebra, ProlongError> {
        if m == 0 || m > self.layers.len() {
            return Err(ProlongError::LayerMissing { degree: m as i32 });
        }
        let mut out = self.clone();
        out.layers.truncate(m);
        let shape = out.layers[m - 1].shape.clone();
        out.layers[m - 1].basis = Subspace::span(shape.dim, basis);
        Ok(out)
    }

    /// Check the derivation rule for every layer basis vector of degree `m`
    /// on every pair `u < v` of negative basis vectors, not only on the pairs
    /// used to define the layer.
    pub fn check_relation_all_pairs(&self, m: usize) -> Result<(), ProlongError> {
        match self.relation_failures(m)?.into_iter().next() {
            None => Ok(()),
            Some(f) => Err(ProlongError::DegreeError(format!(
                "layer {} basis vector {} fails the derivation rule on ({}, {})",
                f.degree, f.basis_vector, f.left, f.right
            ))),
        }
    }

    pub fn relation_failures(&self, m: usize) -> Result<Vec<RelationFailure>, ProlongError> {
        let layer = self
            .layers
            .get(m.wrapping_sub(1))
            .ok_or(ProlongError::LayerMissing { degree: m as i32 })?;
        let pairs = negative_pairs(self, true);
        let mut failures = Vec::new();
        for (r, b) in layer.basis.basis().iter().enumerate() {
            for (u, v) in &pairs {
                if !self.relation_residual(&layer.shape, b, &u.1, &v.1)?.is_zero() {
                    failures.push(RelationFailure {
                        degree: m,
                        basis_vector: r,
                        left: self.base.name(u.0).to_string(),
                        right: self.base.name(v.0).to_string(),
                    });
                    break;
                }
            }
        }
        Ok(failures)
    }
}

fn one() -> Rational {
    Rational::from_integer(1.into())
}

type Tagged = (usize, Element);

// Pairs of negative basis vectors `u < v` (global order). With `all` false,
// only pairs whose left member lies in degree -1.
fn negative_pairs(g: &ProlongedAlgebra, all: bool) -> Vec<(Tagged, Tagged)> {
    let space = g.base.space();
    let units: Vec<Tagged> = space
        .range_upto(-1)
        .map(|i| {
            let b = space.basis_index(i);
            (i, g.base_unit(b.degree, b.offset))
        })
        .collect();
    let mut pairs = Vec::new();
    for (x, u) in units.iter().enumerate() {
        for v in &units[x + 1..] {
            if all || u.1.degree == -1 || v.1.degree == -1 {
                // Keep the degree -1 member on the left.
                if !all && u.1.degree != -1 {
                    pairs.push((v.clone(), u.clone()));
                } else {
                    pairs.push((u.clone(), v.clone()));
                }
            }
        }
    }
    pairs
}

/// The degree-`m` layer computed from the layers below it: all degree-`m`
/// maps satisfying the derivation rule on pairs `(u, v)` with `u` in degree
/// `-1`. Since the negative part is generated in degree `-1`, these pairs
/// determine the rule everywhere.
pub fn prolong_step(
    g: &ProlongedAlgebra,
    m: usize,
) -> Result<(ShapeLayout, Subspace), ProlongError> {
    if m == 0 {
        return Err(ProlongError::DegreeError("prolongation degrees start at 1".into()));
    }
    if g.layers.len() + 1 < m {
        return Err(ProlongError::LayerMissing {
            degree: m as i32 - 1,
        });
    }
    let shape = g.shape_layout(m as i32)?;
    let pairs = negative_pairs(g, false);
    let mut columns: Vec<Vec<Rational>> = Vec::with_capacity(shape.dim);
    for c in 0..shape.dim {
        let mut map = vec![Rational::zero(); shape.dim];
        map[c] = one();
        let mut column = Vec::new();
        for (u, v) in &pairs {
            column.extend(g.relation_residual(&shape, &map, &u.1, &v.1)?.coords);
        }
        columns.push(column);
    }
    let n_rows = columns.first().map_or(0, |c| c.len());
    if n_rows == 0 {
        return Ok((shape.clone(), Subspace::full(shape.dim)));
    }
    let system = Matrix::from_columns(n_rows, &columns);
    let kernel = kernel_basis(&system);
    Ok((shape, kernel))
}

/// How the layer sequence ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProlongationStatus {
    /// All layers above `height` vanish. Height `-1` means the degree-zero
    /// part is itself zero and nothing was added.
    Finite { height: i32 },
    /// Layers `1..=cap` are all nonzero.
    CapReached { cap: usize },
}

#[derive(Clone, Debug)]
pub struct ProlongationResult {
    pub algebra: ProlongedAlgebra,
    pub status: ProlongationStatus,
    pub dims_by_degree: Vec<(i32, usize)>,
}

impl ProlongationResult {
    pub fn total_dim(&self) -> Option<usize> {
        match self.status {
            ProlongationStatus::Finite { .. } => {
                Some(self.dims_by_degree.iter().map(|(_, d)| d).sum())
            }
            ProlongationStatus::CapReached { .. } => None,
        }
    }
}

/// Prolong degree by degree until a layer vanishes or `cap` layers are
/// nonzero. A vanishing layer is confirmed by computing one more layer.
pub fn universal_prolongation(
    g: &GradedLieAlgebra,
    cap: Option<usize>,
) -> Result<ProlongationResult, ProlongError> {
    let cap = cap.unwrap_or(DEFAULT_CAP);
    if cap == 0 {
        return Err(ProlongError::BadCap);
    }
    let mut algebra = ProlongedAlgebra::new(g.clone())?;
    for m in 1..=cap {
        if algebra.extend()? == 0 {
            if algebra.extend()? != 0 {
                return Err(ProlongError::GuardFailed { degree: m });
            }
            let height = if m >= 2 {
                m as i32 - 1
            } else if g.space().dim(0) > 0 {
                0
            } else {
                -1
            };
            let dims_by_degree = algebra
                .dims_by_degree()
                .into_iter()
                .filter(|(d, _)| *d <= height)
                .collect();
            return Ok(ProlongationResult {
                algebra,
                status: ProlongationStatus::Finite { height },
                dims_by_degree,
            });
        }
    }
    let dims_by_degree = algebra.dims_by_degree();
    Ok(ProlongationResult {
        algebra,
        status: ProlongationStatus::CapReached { cap },
        dims_by_degree,
    })
}
