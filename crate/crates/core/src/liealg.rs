//! Lie algebras given by structure constants.
//!
//! Only the brackets `[e_i, e_j]` with `i < j` are stored; the rest follow by
//! antisymmetry. Construction always runs the Jacobi check.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ratlin::{
    canonical_span, express_in_basis, int, is_zero_vector, rank_of, rref, zero_vector, Matrix,
    Rational, Vector,
};

fn pair_index(dim: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < dim);
    // row-major position in the strict upper triangle
    i * (2 * dim - i - 1) / 2 + (j - i - 1)
}

/// A finite-dimensional Lie algebra over ℚ.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    name: String,
    basis_names: Vec<String>,
    brackets: Vec<Vector>,
    ad: Vec<Matrix>,
}

impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.brackets == other.brackets && self.dim() == other.dim()
    }
}

impl LieAlgebra {
    /// Validates structure constants and builds the algebra.
    ///
    /// `brackets` maps `(i, j)` with `i < j` to the coordinates of `[e_i, e_j]`;
    /// missing pairs bracket to zero.
    pub fn new(
        name: impl Into<String>,
        basis_names: Vec<String>,
        brackets: BTreeMap<(usize, usize), Vector>,
    ) -> Result<Self> {
        let dim = basis_names.len();
        let mut table = vec![zero_vector(dim); dim * dim.saturating_sub(1) / 2];
        for ((i, j), v) in brackets {
            if i >= j || j >= dim {
                return Err(Error::DimensionMismatch(format!(
                    "bracket key [{i},{j}] must satisfy i < j < {dim}"
                )));
            }
            if v.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "bracket [{i},{j}] has {} coordinates, expected {dim}",
                    v.len()
                )));
            }
            table[pair_index(dim, i, j)] = v;
        }
        let mut alg = LieAlgebra {
            name: name.into(),
            basis_names,
            brackets: table,
            ad: Vec::new(),
        };
        alg.ad = (0..dim).map(|i| alg.build_ad(i)).collect();
        alg.check_jacobi()?;
        Ok(alg)
    }

    /// Convenience constructor from small integer structure constants:
    /// each entry `(i, j, [(k, c), ...])` means `[e_i, e_j] = Σ c e_k`.
    pub fn from_int_constants(
        name: &str,
        basis_names: &[&str],
        constants: &[(usize, usize, &[(usize, i64)])],
    ) -> Result<Self> {
        let dim = basis_names.len();
        let mut brackets = BTreeMap::new();
        for &(i, j, terms) in constants {
            let mut v = zero_vector(dim);
            for &(k, c) in terms {
                if k >= dim {
                    return Err(Error::DimensionMismatch(format!("index {k} >= {dim}")));
                }
                v[k] += int(c);
            }
            brackets.insert((i, j), v);
        }
        LieAlgebra::new(
            name,
            basis_names.iter().map(|s| s.to_string()).collect(),
            brackets,
        )
    }

    /// Abelian algebra ℚ^n.
    pub fn abelian(n: usize) -> Self {
        let names = (1..=n).map(|i| format!("a{i}")).collect();
        LieAlgebra::new(format!("abelian:{n}"), names, BTreeMap::new())
            .expect("zero bracket is a Lie bracket")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    /// Coordinates of `[e_i, e_j]` for arbitrary `i`, `j`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        use std::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Less => self.brackets[pair_index(self.dim(), i, j)].clone(),
            Ordering::Greater => self.brackets[pair_index(self.dim(), j, i)]
                .iter()
                .map(|x| -x)
                .collect(),
            Ordering::Equal => zero_vector(self.dim()),
        }
    }

    /// Structure constant `c_{ij}^k`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.ad[i][(k, j)].clone()
    }

    /// The stored upper-triangle brackets, keyed by `(i, j)` with `i < j`.
    pub fn nonzero_brackets(&self) -> BTreeMap<(usize, usize), Vector> {
        let n = self.dim();
        let mut out = BTreeMap::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = &self.brackets[pair_index(n, i, j)];
                if !is_zero_vector(v) {
                    out.insert((i, j), v.clone());
                }
            }
        }
        out
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.ad_matrix(x).mul_vec(y)
    }

    /// Matrix of `ad(e_i)`.
    pub fn ad_basis(&self, i: usize) -> &Matrix {
        &self.ad[i]
    }

    /// Matrix of `Y ↦ [X, Y]`.
    pub fn ad_matrix(&self, x: &[Rational]) -> Matrix {
        assert_eq!(x.len(), self.dim(), "vector length must match algebra dimension");
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, c) in x.iter().enumerate() {
            m.add_scaled(&self.ad[i], c);
        }
        m
    }

    fn build_ad(&self, i: usize) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.bracket_basis(i, j)).collect();
        Matrix::from_columns(n, &cols)
    }

    fn check_jacobi(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let a = self.ad[i].mul_vec(&self.bracket_basis(j, k));
                    let b = self.ad[j].mul_vec(&self.bracket_basis(k, i));
                    let c = self.ad[k].mul_vec(&self.bracket_basis(i, j));
                    let residual: Vector = a
                        .iter()
                        .zip(&b)
                        .zip(&c)
                        .map(|((a, b), c)| a + b + c)
                        .collect();
                    if !is_zero_vector(&residual) {
                        return Err(Error::JacobiViolation { i, j, k, residual });
                    }
                }
            }
        }
        Ok(())
    }

    /// `B(e_i, e_j) = tr(ad(e_i) ad(e_j))`.
    pub fn killing_form(&self) -> Matrix {
        let n = self.dim();
        let mut b = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let t = trace_of_product(&self.ad[i], &self.ad[j]);
                b[(i, j)] = t.clone();
                b[(j, i)] = t;
            }
        }
        b
    }

    /// Cartan criterion: the Killing form is nondegenerate.
    pub fn is_semisimple(&self) -> bool {
        self.killing_form().rank() == self.dim()
    }

    /// Center `{X : ad(X) = 0}` in canonical echelon form.
    pub fn center(self: &Arc<Self>) -> Subalgebra {
        let n = self.dim();
        // [X, e_j] = -ad(e_j) X, so X is central iff every ad(e_j) kills it
        let stacked = Matrix::vstack(n, &self.ad);
        let kernel = stacked.kernel_basis();
        Subalgebra {
            ambient: Arc::clone(self),
            vectors: canonical_span(&kernel, n),
        }
    }

    /// Derived subalgebra `[g, g]` in canonical echelon form.
    pub fn derived(self: &Arc<Self>) -> Subalgebra {
        let n = self.dim();
        let span: Vec<Vector> = self.brackets.clone();
        Subalgebra {
            ambient: Arc::clone(self),
            vectors: canonical_span(&span, n),
        }
    }

    pub fn structure_report(self: &Arc<Self>) -> StructureReport {
        let n = self.dim();
        let killing = self.killing_form();
        let killing_rank = killing.rank();
        let killing_det = killing.determinant().expect("Killing form is square");
        let center = self.center();
        let derived = self.derived();
        let union: Vec<Vector> = center.vectors.iter().chain(&derived.vectors).cloned().collect();
        let complementary = center.dim() + derived.dim() == n && rank_of(&union, n) == n;
        let is_reductive = complementary && derived.induced_algebra().is_semisimple();
        StructureReport {
            is_semisimple: killing_rank == n,
            killing,
            killing_rank,
            killing_det,
            center,
            derived,
            is_reductive,
        }
    }

    /// Direct sum `self ⊕ other`, basis of `self` first.
    pub fn direct_sum(&self, other: &LieAlgebra, name: impl Into<String>) -> LieAlgebra {
        let (n, m) = (self.dim(), other.dim());
        let total = n + m;
        let mut brackets = BTreeMap::new();
        for ((i, j), v) in self.nonzero_brackets() {
            let mut w = zero_vector(total);
            w[..n].clone_from_slice(&v);
            brackets.insert((i, j), w);
        }
        for ((i, j), v) in other.nonzero_brackets() {
            let mut w = zero_vector(total);
            w[n..].clone_from_slice(&v);
            brackets.insert((i + n, j + n), w);
        }
        let names = self
            .basis_names
            .iter()
            .chain(&other.basis_names)
            .cloned()
            .collect();
        LieAlgebra::new(name, names, brackets).expect("direct sum of Lie algebras")
    }

    /// The same algebra in the basis `f_a = Σ_i p[i][a] e_i`.
    pub fn change_basis(&self, p: &Matrix) -> Result<LieAlgebra> {
        let n = self.dim();
        if p.rows() != n || p.cols() != n {
            return Err(Error::DimensionMismatch("change of basis must be square".into()));
        }
        let cols = p.column_vectors();
        let mut images = Vec::new();
        let mut keys = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                images.push(self.bracket(&cols[a], &cols[b]));
                keys.push((a, b));
            }
        }
        let coords = express_in_basis(n, &cols, &images)
            .ok_or_else(|| Error::DimensionMismatch("change of basis is singular".into()))?;
        let brackets = keys.into_iter().zip(coords).collect();
        let names = (1..=n).map(|i| format!("f{i}")).collect();
        LieAlgebra::new(format!("{}'", self.name), names, brackets)
    }
}

fn trace_of_product(a: &Matrix, b: &Matrix) -> Rational {
    let n = a.rows();
    let mut t = Rational::zero();
    for k in 0..n {
        for l in 0..a.cols() {
            let x = &a[(k, l)];
            if x.is_zero() {
                continue;
            }
            let y = &b[(l, k)];
            if !y.is_zero() {
                t += x * y;
            }
        }
    }
    t
}

/// Output of [`LieAlgebra::structure_report`].
#[derive(Clone, Debug)]
pub struct StructureReport {
    pub is_semisimple: bool,
    pub killing: Matrix,
    pub killing_rank: usize,
    pub killing_det: Rational,
    pub center: Subalgebra,
    pub derived: Subalgebra,
    pub is_reductive: bool,
}

/// A subalgebra, given by linearly independent ambient coordinate vectors
/// whose span is closed under the bracket.
#[derive(Clone, Debug)]
pub struct Subalgebra {
    ambient: Arc<LieAlgebra>,
    vectors: Vec<Vector>,
}

impl Subalgebra {
    pub fn new(ambient: &Arc<LieAlgebra>, vectors: Vec<Vector>) -> Result<Self> {
        let n = ambient.dim();
        if let Some(v) = vectors.iter().find(|v| v.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "subalgebra vector has {} coordinates, expected {n}",
                v.len()
            )));
        }
        if rank_of(&vectors, n) != vectors.len() {
            return Err(Error::NotASubalgebra("vectors are linearly dependent".into()));
        }
        let ech = rref(vectors.clone(), n);
        for (a, x) in vectors.iter().enumerate() {
            for (b, y) in vectors.iter().enumerate().skip(a + 1) {
                if !ech.contains(&ambient.bracket(x, y)) {
                    return Err(Error::NotASubalgebra(format!(
                        "bracket of generators {a} and {b} leaves the span"
                    )));
                }
            }
        }
        Ok(Subalgebra {
            ambient: Arc::clone(ambient),
            vectors,
        })
    }

    pub fn zero(ambient: &Arc<LieAlgebra>) -> Self {
        Subalgebra {
            ambient: Arc::clone(ambient),
            vectors: Vec::new(),
        }
    }

    pub fn whole(ambient: &Arc<LieAlgebra>) -> Self {
        let n = ambient.dim();
        Subalgebra {
            ambient: Arc::clone(ambient),
            vectors: (0..n).map(|i| crate::ratlin::unit_vector(n, i)).collect(),
        }
    }

    pub fn ambient(&self) -> &Arc<LieAlgebra> {
        &self.ambient
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    /// The subalgebra as a Lie algebra in its own right, with brackets
    /// re-expressed in the echelon basis of the span.
    pub fn induced_algebra(&self) -> LieAlgebra {
        let n = self.ambient.dim();
        let basis = canonical_span(&self.vectors, n);
        let d = basis.len();
        let mut keys = Vec::new();
        let mut images = Vec::new();
        for a in 0..d {
            for b in a + 1..d {
                keys.push((a, b));
                images.push(self.ambient.bracket(&basis[a], &basis[b]));
            }
        }
        let coords =
            express_in_basis(n, &basis, &images).expect("subalgebra is closed under the bracket");
        let names = (1..=d).map(|i| format!("s{i}")).collect();
        LieAlgebra::new(
            format!("{}|sub", self.ambient.name()),
            names,
            keys.into_iter().zip(coords).collect(),
        )
        .expect("restriction of a Lie bracket satisfies Jacobi")
    }
}

/// Unit-coefficient helper for building vectors such as `E - F`.
pub fn combination(dim: usize, terms: &[(usize, Rational)]) -> Vector {
    let mut v = zero_vector(dim);
    for (i, c) in terms {
        v[*i] += c;
    }
    v
}

pub fn basis_vector(dim: usize, i: usize) -> Vector {
    let mut v = zero_vector(dim);
    v[i] = Rational::one();
    v
}
