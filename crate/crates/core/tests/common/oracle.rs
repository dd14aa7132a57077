//! Brute-force reference computations with their own elimination routine.
//!
//! The prolongation here treats a degree-`i` element as an arbitrary linear
//! map from the negative part into everything computed so far, imposes the
//! degree condition as explicit equations, and imposes the derivation rule on
//! every pair of negative basis vectors. Nothing from the engine's layouts or
//! linear algebra is reused; only the base structure constants are read.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use tanaka::exactla::Rational;
use tanaka::gla::GradedLieAlgebra;
use tanaka::prolong::{Element, ProlongedAlgebra};

type Q = BigRational;

fn zero() -> Q {
    Q::zero()
}

/// Null space of `rows` (each of length `cols`) by plain Gauss-Jordan with
/// the first nonzero pivot.
pub fn nullspace(mut rows: Vec<Vec<Q>>, cols: usize) -> Vec<Vec<Q>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![zero(); cols];
        v[free] = Q::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -rows[i][free].clone();
        }
        basis.push(v);
    }
    basis
}

pub fn rank_of(vectors: &[Vec<Q>], cols: usize) -> usize {
    let n = vectors.len();
    if n == 0 {
        return 0;
    }
    // Null space of the matrix whose columns are the vectors.
    let rows: Vec<Vec<Q>> = (0..cols).map(|i| vectors.iter().map(|v| v[i].clone()).collect()).collect();
    n - nullspace(rows, n).len()
}

/// Solve `Σ x_s basis[s] = target`, if possible.
pub fn solve(basis: &[Vec<Q>], target: &[Q]) -> Option<Vec<Q>> {
    let n = basis.len();
    let len = target.len();
    // Augmented columns: basis vectors then -target; look for a null vector
    // with last coordinate 1.
    let rows: Vec<Vec<Q>> = (0..len)
        .map(|i| {
            let mut row: Vec<Q> = basis.iter().map(|b| b[i].clone()).collect();
            row.push(-target[i].clone());
            row
        })
        .collect();
    let null = nullspace(rows, n + 1);
    let v = null.into_iter().find(|v| !v[n].is_zero())?;
    let scale = v[n].recip();
    Some(v[..n].iter().map(|x| x * &scale).collect())
}

/// Prolongation layers computed by brute force.
pub struct OracleProlongation {
    /// Degree of every global coordinate, base first, then layers in order.
    pub degrees: Vec<i32>,
    /// Number of negative basis vectors.
    pub n_minus: usize,
    /// For each global coordinate of positive degree, its map on the negative
    /// basis: `maps[x][a]` is the image of `e_a` in global coordinates
    /// (padded to the current total length on use).
    maps: Vec<Vec<Vec<Q>>>,
    /// First global index of each positive layer.
    pub layer_start: Vec<usize>,
    base: GradedLieAlgebra,
}

impl OracleProlongation {
    pub fn new(base: &GradedLieAlgebra) -> Self {
        let space = base.space();
        let degrees = (0..base.dim()).map(|i| space.degree_of(i)).collect();
        OracleProlongation {
            degrees,
            n_minus: space.minus_dim(),
            maps: Vec::new(),
            layer_start: Vec::new(),
            base: base.clone(),
        }
    }

    pub fn total(&self) -> usize {
        self.degrees.len()
    }

    pub fn layer_dim(&self, p: usize) -> usize {
        let start = self.layer_start[p - 1];
        let end = self.layer_start.get(p).copied().unwrap_or(self.total());
        end - start
    }

    /// `[X, e_b]` for global basis vector `x` and negative basis index `b`,
    /// in global coordinates of length `total()`.
    fn bracket_with_minus(&self, x: usize, b: usize) -> Vec<Q> {
        let n = self.total();
        let mut out = vec![zero(); n];
        if x < self.base.dim() {
            for (i, c) in self.base.bracket_basis(x, b) {
                out[*i] += c;
            }
        } else {
            let image = &self.maps[x - self.base.dim()][b];
            for (i, c) in image.iter().enumerate() {
                out[i] += c;
            }
        }
        out
    }

    /// `[y, e_b]` for an arbitrary vector `y` in global coordinates.
    fn ad_minus(&self, y: &[Q], b: usize) -> Vec<Q> {
        let n = self.total();
        let mut out = vec![zero(); n];
        for (x, c) in y.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, v) in self.bracket_with_minus(x, b).into_iter().enumerate() {
                out[i] += c * v;
            }
        }
        out
    }

    /// Compute the next layer and append it. Returns its dimension.
    pub fn extend(&mut self) -> usize {
        let i = self.layer_start.len() as i32 + 1;
        let nm = self.n_minus;
        let nt = self.total();
        // Unknown (a, y): component y of A(e_a); index a * nt + y.
        let n_unknowns = nm * nt;
        let mut rows: Vec<Vec<Q>> = Vec::new();
        for a in 0..nm {
            for y in 0..nt {
                if self.degrees[y] != self.degrees[a] + i {
                    let mut row = vec![zero(); n_unknowns];
                    row[a * nt + y] = Q::one();
                    rows.push(row);
                }
            }
        }
        // A([a, b]) - [A a, b] - [a, A b] = 0 for all a < b, componentwise.
        for a in 0..nm {
            for b in a + 1..nm {
                // Contribution matrix: for each unknown, the residual vector.
                let mut residual_rows = vec![vec![zero(); n_unknowns]; nt];
                for (s, c) in self.base.bracket_basis(a, b) {
                    // A(e_s) components
                    for y in 0..nt {
                        residual_rows[y][s * nt + y] += c;
                    }
                }
                for y in 0..nt {
                    // -[e_y, e_b] scaled by unknown (a, y)
                    let v = self.bracket_with_minus(y, b);
                    for (t, c) in v.iter().enumerate() {
                        if !c.is_zero() {
                            residual_rows[t][a * nt + y] -= c;
                        }
                    }
                    // -[e_a, e_y] = +[e_y, e_a] scaled by unknown (b, y)
                    let w = self.bracket_with_minus(y, a);
                    for (t, c) in w.iter().enumerate() {
                        if !c.is_zero() {
                            residual_rows[t][b * nt + y] += c;
                        }
                    }
                }
                rows.extend(residual_rows.into_iter().filter(|r| r.iter().any(|c| !c.is_zero())));
            }
        }
        let kernel = nullspace(rows, n_unknowns);
        self.layer_start.push(nt);
        let new_dim = kernel.len();
        for v in &kernel {
            let map: Vec<Vec<Q>> = (0..nm).map(|a| v[a * nt..(a + 1) * nt].to_vec()).collect();
            self.maps.push(map);
        }
        self.degrees.extend(std::iter::repeat_n(i, new_dim));
        // Pad older maps to the new total length.
        let total = self.total();
        for m in self.maps.iter_mut() {
            for img in m.iter_mut() {
                img.resize(total, zero());
            }
        }
        new_dim
    }

    /// Flattened map of layer basis vector `r` of degree `p`, over the
    /// global coordinates existing before that layer.
    fn flat_layer_vector(&self, p: usize, r: usize) -> Vec<Q> {
        let before = self.layer_start[p - 1];
        let m = &self.maps[before - self.base.dim() + r];
        m.iter().flat_map(|img| img[..before].to_vec()).collect()
    }

    /// Check `[A, [u, v]] = [[A, u], v] + [u, [A, v]]`-style identity for
    /// every stored element on all negative pairs, using the oracle's own
    /// brackets. A sanity check on the oracle itself.
    pub fn self_consistent(&self) -> bool {
        let nm = self.n_minus;
        for x in self.base.dim()..self.total() {
            for a in 0..nm {
                for b in a + 1..nm {
                    let mut lhs = vec![zero(); self.total()];
                    for (s, c) in self.base.bracket_basis(a, b) {
                        for (t, v) in self.bracket_with_minus(x, *s).into_iter().enumerate() {
                            lhs[t] += c * v;
                        }
                    }
                    let xa = self.bracket_with_minus(x, a);
                    let mut rhs = self.ad_minus(&xa, b);
                    let xb = self.bracket_with_minus(x, b);
                    for (t, v) in self.ad_minus(&xb, a).into_iter().enumerate() {
                        rhs[t] -= v;
                    }
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Compare the engine's layers `1..=top` with the oracle's, up to change of
/// basis. Returns a description of the first mismatch.
pub fn compare_with_engine(engine: &ProlongedAlgebra, oracle: &OracleProlongation, top: usize) -> Result<(), String> {
    let base = engine.base();
    let space = base.space();
    let nm = space.minus_dim();
    // translate[p] maps engine layer-p coordinates to oracle global coordinates.
    let mut translate: Vec<Vec<Vec<Q>>> = Vec::new();
    let to_oracle = |translate: &Vec<Vec<Vec<Q>>>, e: &Element, len: usize| -> Vec<Q> {
        let mut out = vec![zero(); len];
        if e.degree <= 0 {
            let start = space.range(e.degree).start;
            for (i, c) in e.coords.iter().enumerate() {
                out[start + i] += c;
            }
        } else {
            for (r, c) in e.coords.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (t, v) in translate[e.degree as usize - 1][r].iter().enumerate() {
                    if !v.is_zero() {
                        out[t] += c * v;
                    }
                }
            }
        }
        out
    };
    for p in 1..=top {
        let edim = engine.dim(p as i32).ok_or(format!("engine lacks degree {p}"))?;
        let odim = oracle.layer_dim(p);
        if edim != odim {
            return Err(format!("degree {p}: engine dimension {edim}, oracle dimension {odim}"));
        }
        let before = oracle.layer_start[p - 1];
        let oracle_basis: Vec<Vec<Q>> = (0..odim).map(|r| oracle.flat_layer_vector(p, r)).collect();
        let mut columns = Vec::new();
        let mut engine_flat = Vec::new();
        for r in 0..edim {
            let x = Element::unit(p as i32, edim, r);
            let mut flat = Vec::with_capacity(nm * before);
            for a in 0..nm {
                let b = space.basis_index(a);
                let u = engine.base_unit(b.degree, b.offset);
                let img = engine.extended_bracket(&x, &u).map_err(|e| e.to_string())?;
                flat.extend(to_oracle(&translate, &img, before));
            }
            let coeffs = solve(&oracle_basis, &flat)
                .ok_or(format!("degree {p}: engine basis vector {r} is not in the oracle layer"))?;
            engine_flat.push(flat);
            // Column r of the translation: oracle global coordinates of engine vector r.
            let mut col = vec![zero(); oracle.total()];
            let start = oracle.layer_start[p - 1];
            for (s, c) in coeffs.into_iter().enumerate() {
                col[start + s] = c;
            }
            columns.push(col);
        }
        if rank_of(&engine_flat, nm * before) != edim {
            return Err(format!("degree {p}: engine layer basis is dependent"));
        }
        translate.push(columns);
    }
    Ok(())
}

/// Degree-zero derivations of the negative part preserving the subspaces
/// `e` and `f` of degree -1, by brute force: unknowns are all entries of an
/// endomorphism `h` plus coefficients `μ` with `h(b_s) = Σ μ_{s,t} b_t` for
/// the basis `b` of each preserved subspace. Returns the dimension of the
/// projection of the solution space to the `h` coordinates.
pub fn g0_dimension(minus: &GradedLieAlgebra, preserved: &[Vec<Vec<Rational>>]) -> usize {
    let space = minus.space();
    let m = space.minus_dim();
    let r1 = space.range(-1);
    let mu_count: usize = preserved.iter().map(|b| b.len() * b.len()).sum();
    let n_unknowns = m * m + mu_count;
    let h = |r: usize, c: usize| r * m + c;
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for r in 0..m {
        for c in 0..m {
            if space.degree_of(r) != space.degree_of(c) {
                let mut row = vec![zero(); n_unknowns];
                row[h(r, c)] = Q::one();
                rows.push(row);
            }
        }
    }
    for a in 0..m {
        for b in 0..m {
            // h([a,b]) - [h a, b] - [a, h b], component t
            for t in 0..m {
                let mut row = vec![zero(); n_unknowns];
                for (s, c) in minus.bracket_basis(a, b) {
                    row[h(t, *s)] += c;
                }
                for y in 0..m {
                    for (s, c) in minus.bracket_basis(y, b) {
                        if *s == t {
                            row[h(y, a)] -= c;
                        }
                    }
                    for (s, c) in minus.bracket_basis(a, y) {
                        if *s == t {
                            row[h(y, b)] -= c;
                        }
                    }
                }
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let mut mu = m * m;
    for basis in preserved {
        let d = basis.len();
        for s in 0..d {
            // h(b_s) - Σ_t μ_{s,t} b_t = 0 in every degree -1 coordinate
            for i in 0..r1.len() {
                let mut row = vec![zero(); n_unknowns];
                for (j, bj) in basis[s].iter().enumerate() {
                    row[h(r1.start + i, r1.start + j)] += bj;
                }
                for t in 0..d {
                    row[mu + s * d + t] -= &basis[t][i];
                }
                rows.push(row);
            }
        }
        mu += d * d;
    }
    let kernel = nullspace(rows, n_unknowns);
    let projected: Vec<Vec<Q>> = kernel.iter().map(|v| v[..m * m].to_vec()).collect();
    rank_of(&projected, m * m)
}

pub fn int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}
