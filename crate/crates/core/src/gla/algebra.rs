use std::collections::BTreeMap;

use num_traits::Zero;

use super::{BasisIndex, GlaError, GradedVectorSpace};
use crate::exactla::{format_rational, inverse, kernel_basis, Matrix, Rational, Subspace};

/// One declared structure constant: `[left, right] = Σ coeff · basis`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketEntry {
    pub left: BasisIndex,
    pub right: BasisIndex,
    pub result: Vec<(BasisIndex, Rational)>,
}

type Sparse = Vec<(usize, Rational)>;

/// A graded Lie algebra over the rationals given by structure constants on a
/// fixed ordered basis. Construction checks grading and the Jacobi identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedLieAlgebra {
    space: GradedVectorSpace,
    names: Vec<String>,
    // Full antisymmetric table, `table[a * n + b] = [e_a, e_b]`.
    table: Vec<Sparse>,
}

fn default_name(b: BasisIndex) -> String {
    format!("g{}[{}]", b.degree, b.offset)
}

fn add_sparse(acc: &mut BTreeMap<usize, Rational>, coeff: &Rational, terms: &[(usize, Rational)]) {
    for (i, c) in terms {
        let slot = acc.entry(*i).or_insert_with(Rational::zero);
        *slot += coeff * c;
    }
}

fn finish_sparse(acc: BTreeMap<usize, Rational>) -> Sparse {
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Validating constructor. Brackets not listed are zero; `[b, a]` is filled in
/// by antisymmetry.
pub fn make_gla(
    space: GradedVectorSpace,
    names: Option<Vec<String>>,
    entries: &[BracketEntry],
) -> Result<GradedLieAlgebra, GlaError> {
    let n = space.total_dim();
    let names = match names {
        Some(names) => {
            if names.len() != n {
                return Err(GlaError::InvalidSpace(format!(
                    "{} basis names given for a space of dimension {n}",
                    names.len()
                )));
            }
            names
        }
        None => (0..n).map(|g| default_name(space.basis_index(g))).collect(),
    };
    let mut table: Vec<Option<Sparse>> = vec![None; n * n];
    for entry in entries {
        let a = space.index(entry.left)?;
        let b = space.index(entry.right)?;
        let mut acc = BTreeMap::new();
        for (idx, c) in &entry.result {
            let i = space.index(*idx)?;
            let expected = entry.left.degree + entry.right.degree;
            if !c.is_zero() && idx.degree != expected {
                return Err(GlaError::GradingViolation {
                    left: names[a].clone(),
                    right: names[b].clone(),
                    expected,
                    found: idx.degree,
                });
            }
            *acc.entry(i).or_insert_with(Rational::zero) += c;
        }
        let value = finish_sparse(acc);
        if a == b {
            if !value.is_empty() {
                return Err(GlaError::SelfBracket(names[a].clone()));
            }
            continue;
        }
        let negated: Sparse = value.iter().map(|(i, c)| (*i, -c)).collect();
        for (slot, v) in [(a * n + b, value), (b * n + a, negated)] {
            match &table[slot] {
                Some(existing) if *existing != v => {
                    return Err(GlaError::ConflictingEntry {
                        left: names[a].clone(),
                        right: names[b].clone(),
                    })
                }
                _ => table[slot] = Some(v),
            }
        }
    }
    let algebra = GradedLieAlgebra {
        space,
        names,
        table: table.into_iter().map(Option::unwrap_or_default).collect(),
    };
    algebra.check_jacobi()?;
    Ok(algebra)
}

impl GradedLieAlgebra {
    pub fn space(&self) -> &GradedVectorSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.total_dim()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, global: usize) -> &str {
        &self.names[global]
    }

    /// Structure constants of `[e_a, e_b]` in global coordinates.
    pub fn bracket_basis(&self, a: usize, b: usize) -> &[(usize, Rational)] {
        &self.table[a * self.dim() + b]
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        assert_eq!(u.len(), n, "left vector has wrong length");
        assert_eq!(v.len(), n, "right vector has wrong length");
        let mut out = vec![Rational::zero(); n];
        for (a, ua) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (b, vb) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let terms = self.bracket_basis(a, b);
                if terms.is_empty() {
                    continue;
                }
                let c = ua * vb;
                for (i, t) in terms {
                    out[*i] += &c * t;
                }
            }
        }
        out
    }

    /// Nonzero structure constants for `a < b`, in declaration-independent
    /// order.
    pub fn entries(&self) -> Vec<BracketEntry> {
        let n = self.dim();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let terms = self.bracket_basis(a, b);
                if !terms.is_empty() {
                    out.push(BracketEntry {
                        left: self.space.basis_index(a),
                        right: self.space.basis_index(b),
                        result: terms
                            .iter()
                            .map(|(i, c)| (self.space.basis_index(*i), c.clone()))
                            .collect(),
                    });
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }

    /// Matrix of `ad(e_x)` restricted to the negative part, in the negative
    /// part's coordinates. Only valid for `x` of degree `<= 0`.
    pub fn adjoint_on_minus(&self, x: usize) -> Matrix {
        let m = self.space.minus_dim();
        let mut out = Matrix::zeros(m, m);
        for col in 0..m {
            for (i, c) in self.bracket_basis(x, col) {
                assert!(*i < m, "bracket leaves the negative part");
                out[(*i, col)] = c.clone();
            }
        }
        out
    }

    /// The subalgebra of strictly negative degrees.
    pub fn minus_part(&self) -> GradedLieAlgebra {
        let space = self.space.with_max_degree(-1);
        let m = space.total_dim();
        let mut table = Vec::with_capacity(m * m);
        for a in 0..m {
            for b in 0..m {
                table.push(self.bracket_basis(a, b).to_vec());
            }
        }
        GradedLieAlgebra {
            space,
            names: self.names[..m].to_vec(),
            table,
        }
    }

    /// Renames the basis without touching structure constants.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self, GlaError> {
        if names.len() != self.dim() {
            return Err(GlaError::InvalidSpace("wrong number of basis names".into()));
        }
        self.names = names;
        Ok(self)
    }

    /// Extends a negatively graded algebra by a degree-zero part given as
    /// endomorphisms of the negative part (columns are images of basis
    /// vectors). The matrices must be independent, grading preserving
    /// derivations closed under commutators; all of this is verified.
    pub fn with_degree_zero(
        minus: &GradedLieAlgebra,
        derivations: &[Matrix],
        names: Option<Vec<String>>,
    ) -> Result<GradedLieAlgebra, GlaError> {
        let m = minus.space.minus_dim();
        let k = derivations.len();
        for h in derivations {
            if h.rows() != m || h.cols() != m {
                return Err(GlaError::NotClosed("degree-zero matrix has the wrong shape".into()));
            }
        }
        let flat = Subspace::new(m * m, derivations.iter().map(|h| h.entries().to_vec()).collect())
            .map_err(|_| GlaError::NotClosed("degree-zero matrices are linearly dependent".into()))?;

        let mut dims: Vec<usize> = minus.space.degrees().filter(|&d| d < 0).map(|d| minus.space.dim(d)).collect();
        dims.push(k);
        let space = GradedVectorSpace::new(minus.space.min_degree(), dims)?;
        let offset = m;
        let mut entries = Vec::new();
        for a in 0..m {
            for b in a + 1..m {
                let terms = minus.bracket_basis(a, b);
                if !terms.is_empty() {
                    entries.push(BracketEntry {
                        left: space.basis_index(a),
                        right: space.basis_index(b),
                        result: terms.iter().map(|(i, c)| (space.basis_index(*i), c.clone())).collect(),
                    });
                }
            }
        }
        for (i, h) in derivations.iter().enumerate() {
            let left = BasisIndex::new(0, i);
            for col in 0..m {
                let result: Vec<(BasisIndex, Rational)> = (0..m)
                    .filter(|&r| !h[(r, col)].is_zero())
                    .map(|r| (space.basis_index(r), h[(r, col)].clone()))
                    .collect();
                if !result.is_empty() {
                    entries.push(BracketEntry {
                        left,
                        right: space.basis_index(col),
                        result,
                    });
                }
            }
            for (j, h2) in derivations.iter().enumerate().skip(i + 1) {
                let comm = h.commutator(h2);
                let coords = flat.coordinates(comm.entries()).ok_or_else(|| {
                    GlaError::NotClosed(format!("commutator of degree-zero elements {i} and {j} leaves the span"))
                })?;
                let result: Vec<(BasisIndex, Rational)> = coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(t, c)| (BasisIndex::new(0, t), c))
                    .collect();
                if !result.is_empty() {
                    entries.push(BracketEntry {
                        left,
                        right: BasisIndex::new(0, j),
                        result,
                    });
                }
            }
        }
        let names = names.unwrap_or_else(|| {
            minus.names[..m]
                .iter()
                .cloned()
                .chain((0..k).map(|i| format!("h{i}")))
                .collect()
        });
        debug_assert_eq!(offset + k, space.total_dim());
        make_gla(space, Some(names), &entries)
    }

    /// Change of basis inside each degree. `changes[d]` has the new basis
    /// vectors of degree `d` as columns, in old coordinates; degrees not
    /// listed keep their basis.
    pub fn transform(&self, changes: &BTreeMap<i32, Matrix>) -> Result<GradedLieAlgebra, GlaError> {
        let n = self.dim();
        let mut forward = Matrix::identity(n);
        for (&d, p) in changes {
            let r = self.space.range(d);
            if p.rows() != r.len() || p.cols() != r.len() {
                return Err(GlaError::InvalidSpace(format!("change of basis for degree {d} has the wrong shape")));
            }
            for (i, gi) in r.clone().enumerate() {
                for (j, gj) in r.clone().enumerate() {
                    forward[(gi, gj)] = p[(i, j)].clone();
                }
            }
        }
        let backward = inverse(&forward)
            .ok_or_else(|| GlaError::InvalidSpace("change of basis is singular".into()))?;
        let columns: Vec<Vec<Rational>> = (0..n).map(|c| forward.column(c)).collect();
        let mut entries = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let old = self.bracket(&columns[a], &columns[b]);
                let new = backward.mul_vec(&old);
                let result: Vec<(BasisIndex, Rational)> = new
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (self.space.basis_index(i), c))
                    .collect();
                if !result.is_empty() {
                    entries.push(BracketEntry {
                        left: self.space.basis_index(a),
                        right: self.space.basis_index(b),
                        result,
                    });
                }
            }
        }
        make_gla(self.space.clone(), Some(self.names.clone()), &entries)
    }

    fn check_jacobi(&self) -> Result<(), GlaError> {
        let n = self.dim();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let residual = self.jacobi_residual(a, b, c);
                    if residual.iter().any(|x| !x.is_zero()) {
                        return Err(GlaError::JacobiViolation {
                            triple: [self.names[a].clone(), self.names[b].clone(), self.names[c].clone()],
                            residual: residual.iter().map(format_rational).collect(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// `[[a,b],c] + [[b,c],a] + [[c,a],b]` on basis vectors.
    pub fn jacobi_residual(&self, a: usize, b: usize, c: usize) -> Vec<Rational> {
        let n = self.dim();
        let mut acc = BTreeMap::new();
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            for (i, coeff) in self.bracket_basis(x, y) {
                add_sparse(&mut acc, coeff, self.bracket_basis(*i, z));
            }
        }
        let mut out = vec![Rational::zero(); n];
        for (i, v) in acc {
            out[i] = v;
        }
        out
    }
}

/// Outcome of the fundamental-algebra test.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct FundamentalReport {
    pub generated_by_minus_one: bool,
    pub adjoint_injective_on_g0: bool,
    pub violations: Vec<String>,
}

impl FundamentalReport {
    pub fn is_fundamental(&self) -> bool {
        self.generated_by_minus_one && self.adjoint_injective_on_g0
    }
}

/// Checks that the negative part is generated by degree `-1` and that
/// degree zero acts faithfully on it.
pub fn is_fundamental(g: &GradedLieAlgebra) -> Result<FundamentalReport, GlaError> {
    let space = g.space();
    if space.max_degree() > 0 {
        return Err(GlaError::DegreeWindow {
            max_degree: space.max_degree(),
        });
    }
    let n = g.dim();
    let mut violations = Vec::new();

    let minus_one = space.range(-1);
    let unit = |i: usize| {
        let mut e = vec![Rational::zero(); n];
        e[i] = Rational::from_integer(1.into());
        e
    };
    let mut generated = true;
    let mut level: Vec<Vec<Rational>> = minus_one.clone().map(unit).collect();
    for degree in (space.min_degree()..=-2).rev() {
        let mut next = Vec::new();
        for u in minus_one.clone() {
            for w in &level {
                next.push(g.bracket(&unit(u), w));
            }
        }
        let span = Subspace::span(n, next);
        if span.dim() != space.dim(degree) {
            generated = false;
            violations.push(format!(
                "iterated brackets of degree -1 span {} of the {} dimensions in degree {degree}",
                span.dim(),
                space.dim(degree)
            ));
        }
        level = span.into_basis();
    }

    let m = space.minus_dim();
    let zero = space.range(0);
    let columns: Vec<Vec<Rational>> = zero.clone().map(|h| g.adjoint_on_minus(h).entries().to_vec()).collect();
    let kernel = kernel_basis(&Matrix::from_columns(m * m, &columns));
    let injective = kernel.is_zero();
    if !injective {
        for v in kernel.basis() {
            let terms: Vec<String> = v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| format!("{}*{}", format_rational(c), g.name(zero.start + i)))
                .collect();
            violations.push(format!("degree-zero element {} acts trivially", terms.join(" + ")));
        }
    }
    Ok(FundamentalReport {
        generated_by_minus_one: generated,
        adjoint_injective_on_g0: injective,
        violations,
    })
}
