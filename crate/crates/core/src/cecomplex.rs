//! The Chevalley–Eilenberg cochain complex `A^k(g; V)` and its relative
//! version `A^k(g, h; V)`.
//!
//! A `k`-cochain is stored by its values on the basis tuples
//! `(e_{i_1}, …, e_{i_k})` with `i_1 < … < i_k`, tuples in lexicographic order,
//! one coordinate per module basis vector: index `tuple * vdim + v`. Values on
//! unsorted tuples follow by antisymmetry. Wedge products use the determinant
//! convention, so `e*_{i_1} ∧ … ∧ e*_{i_k}` takes the value 1 on
//! `(e_{i_1}, …, e_{i_k})`.
//!
//! Operators follow these formulas, with `·` the module action:
//!
//! ```text
//! (δf)(X_1..X_{k+1}) = Σ_i (-1)^{i+1} X_i·f(..X̂_i..)
//!                    + Σ_{i<j} (-1)^{i+j} f([X_i,X_j], ..X̂_i..X̂_j..)
//! (L_X f)(X_1..X_k)  = X·f(X_1..X_k) + Σ_i f(..[X_i,X]..)
//! (i_X f)(X_1..X_{k-1}) = f(X, X_1..X_{k-1})
//! (Jω)(X_1..X_{k-1})(X) = ω(X, X_1..X_{k-1})
//! ```

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gmod::GModule;
use crate::liealg::{LieAlgebra, Subalgebra};
use crate::ratlin::{canonical_span, express_in_basis, int, zero_vector, Matrix, Rational, Vector};

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// All strictly increasing `k`-tuples from `0..n` in lexicographic order.
pub fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::with_capacity(binomial(n, k));
    go(n, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Lexicographic position of an increasing tuple among all `k`-subsets of `0..n`.
pub fn tuple_rank(n: usize, tuple: &[usize]) -> usize {
    let k = tuple.len();
    let mut rank = 0;
    let mut next = 0;
    for (i, &c) in tuple.iter().enumerate() {
        for v in next..c {
            rank += binomial(n - 1 - v, k - 1 - i);
        }
        next = c + 1;
    }
    rank
}

/// Sorts `args` in place and returns the sign of the sorting permutation, or
/// `None` if an index repeats.
pub fn sort_with_sign(args: &mut [usize]) -> Option<i32> {
    let mut sign = 1;
    for i in 1..args.len() {
        let mut j = i;
        while j > 0 && args[j - 1] > args[j] {
            args.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && args[j - 1] == args[j] {
            return None;
        }
    }
    Some(sign)
}

fn sign_of(p: usize) -> Rational {
    if p % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// The space `A^k(g; V)`, optionally restricted to the relative subspace for
/// a subalgebra `h`.
#[derive(Clone, Debug)]
pub struct CochainLevel<'m> {
    module: &'m GModule,
    degree: usize,
    tuples: Vec<Vec<usize>>,
    relative_basis: Option<Vec<Vector>>,
}

impl<'m> CochainLevel<'m> {
    pub fn new(module: &'m GModule, degree: usize) -> Self {
        let n = module.algebra().dim();
        CochainLevel {
            module,
            degree,
            tuples: increasing_tuples(n, degree),
            relative_basis: None,
        }
    }

    /// The level `A^k(g, h; V)`: the full level together with a canonical
    /// basis of the forms killed by `i_X` and `L_X` for all `X ∈ h`.
    pub fn relative(module: &'m GModule, degree: usize, h: &Subalgebra) -> Self {
        let mut level = CochainLevel::new(module, degree);
        level.relative_basis = Some(relative_subspace(&level, h));
        level
    }

    pub fn module(&self) -> &'m GModule {
        self.module
    }

    pub fn algebra(&self) -> &'m LieAlgebra {
        self.module.algebra()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    /// Dimension of the full level, `C(dim g, k) · dim V`.
    pub fn space_dim(&self) -> usize {
        self.tuples.len() * self.module.vdim()
    }

    pub fn relative_basis(&self) -> Option<&[Vector]> {
        self.relative_basis.as_deref()
    }

    /// Basis of the level as coordinate vectors in the full space: the
    /// relative basis if present, otherwise the standard basis.
    pub fn basis(&self) -> Vec<Vector> {
        match &self.relative_basis {
            Some(b) => b.clone(),
            None => {
                let n = self.space_dim();
                (0..n).map(|i| crate::ratlin::unit_vector(n, i)).collect()
            }
        }
    }

    /// Dimension of the level as a space (relative if restricted).
    pub fn dim(&self) -> usize {
        self.relative_basis
            .as_ref()
            .map_or_else(|| self.space_dim(), Vec::len)
    }

    fn n(&self) -> usize {
        self.algebra().dim()
    }

    fn vdim(&self) -> usize {
        self.module.vdim()
    }

    /// Matrix of `δ_k : A^k(g;V) → A^{k+1}(g;V)` on the full spaces.
    pub fn differential_matrix(&self) -> Matrix {
        let n = self.n();
        let k = self.degree;
        let vd = self.vdim();
        let g = self.algebra();
        let targets = increasing_tuples(n, k + 1);
        let mut m = Matrix::zeros(targets.len() * vd, self.space_dim());
        for (si, s) in targets.iter().enumerate() {
            // Σ_p (-1)^p X_p · f(.. X̂_p ..)   (0-based p)
            for p in 0..=k {
                let rest: Vec<usize> = s.iter().enumerate().filter(|&(q, _)| q != p).map(|(_, &x)| x).collect();
                let ti = tuple_rank(n, &rest);
                let a = self.module.action_basis(s[p]);
                let sg = sign_of(p);
                for w in 0..vd {
                    for v in 0..vd {
                        let x = &a[(w, v)];
                        if !x.is_zero() {
                            m[(si * vd + w, ti * vd + v)] += &sg * x;
                        }
                    }
                }
            }
            // Σ_{p<q} (-1)^{p+q} f([X_p, X_q], .. X̂_p .. X̂_q ..)
            for p in 0..=k {
                for q in p + 1..=k {
                    let br = g.bracket_basis(s[p], s[q]);
                    let rest: Vec<usize> = s
                        .iter()
                        .enumerate()
                        .filter(|&(r, _)| r != p && r != q)
                        .map(|(_, &x)| x)
                        .collect();
                    let sg = sign_of(p + q);
                    for (c, coeff) in br.iter().enumerate() {
                        if coeff.is_zero() {
                            continue;
                        }
                        let mut args = Vec::with_capacity(k);
                        args.push(c);
                        args.extend_from_slice(&rest);
                        let Some(s2) = sort_with_sign(&mut args) else {
                            continue;
                        };
                        let ti = tuple_rank(n, &args);
                        let val = &sg * coeff * int(s2 as i64);
                        for w in 0..vd {
                            m[(si * vd + w, ti * vd + w)] += &val;
                        }
                    }
                }
            }
        }
        m
    }

    /// Matrix of `i_X : A^k → A^{k-1}`. For `k = 0` this is the empty map.
    pub fn interior_product_matrix(&self, x: &[Rational]) -> Matrix {
        let n = self.n();
        let vd = self.vdim();
        if self.degree == 0 {
            return Matrix::zeros(0, self.space_dim());
        }
        let targets = increasing_tuples(n, self.degree - 1);
        let mut m = Matrix::zeros(targets.len() * vd, self.space_dim());
        for (si, s) in targets.iter().enumerate() {
            for (c, coeff) in x.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let mut args = Vec::with_capacity(self.degree);
                args.push(c);
                args.extend_from_slice(s);
                let Some(sg) = sort_with_sign(&mut args) else {
                    continue;
                };
                let ti = tuple_rank(n, &args);
                let val = coeff * int(sg as i64);
                for v in 0..vd {
                    m[(si * vd + v, ti * vd + v)] += &val;
                }
            }
        }
        m
    }

    /// Matrix of `L_X : A^k → A^k`.
    pub fn lie_derivative_matrix(&self, x: &[Rational]) -> Matrix {
        let n = self.n();
        let vd = self.vdim();
        let g = self.algebra();
        let action = self.module.action(x);
        // [e_c, X] = -ad(X) e_c, column c of -ad(X)
        let ad_x = g.ad_matrix(x);
        let mut m = Matrix::zeros(self.space_dim(), self.space_dim());
        for (si, s) in self.tuples.iter().enumerate() {
            for w in 0..vd {
                for v in 0..vd {
                    let a = &action[(w, v)];
                    if !a.is_zero() {
                        m[(si * vd + w, si * vd + v)] += a;
                    }
                }
            }
            for p in 0..self.degree {
                for c in 0..n {
                    let coeff = -&ad_x[(c, s[p])];
                    if coeff.is_zero() {
                        continue;
                    }
                    let mut args = s.clone();
                    args[p] = c;
                    let Some(sg) = sort_with_sign(&mut args) else {
                        continue;
                    };
                    let ti = tuple_rank(n, &args);
                    let val = &coeff * int(sg as i64);
                    for w in 0..vd {
                        m[(si * vd + w, ti * vd + w)] += &val;
                    }
                }
            }
        }
        m
    }

    /// Matrix of `f ↦ e*_i ∧ f : A^k → A^{k+1}`.
    pub fn wedge_dual_basis_matrix(&self, i: usize) -> Matrix {
        let n = self.n();
        let vd = self.vdim();
        let targets = increasing_tuples(n, self.degree + 1);
        let mut m = Matrix::zeros(targets.len() * vd, self.space_dim());
        for (si, s) in targets.iter().enumerate() {
            if let Some(p) = s.iter().position(|&x| x == i) {
                let rest: Vec<usize> = s.iter().copied().filter(|&x| x != i).collect();
                let ti = tuple_rank(n, &rest);
                for v in 0..vd {
                    m[(si * vd + v, ti * vd + v)] = sign_of(p);
                }
            }
        }
        m
    }

    /// Value in `V` of the cochain with coordinates `coords` on the basis
    /// vectors indexed by `args` (any order, repeats allowed).
    pub fn evaluate(&self, coords: &[Rational], args: &[usize]) -> Vector {
        evaluate_on_basis(self.n(), self.vdim(), coords, args)
    }

    /// Restriction of `δ` to the relative subspaces, expressed in their bases.
    /// Fails if `δ` leaves the relative subspace of `next`.
    pub fn restricted_differential(&self, next: &CochainLevel<'_>) -> Result<Matrix> {
        let d = self.differential_matrix();
        let src = self.basis();
        let dst = next.basis();
        let images: Vec<Vector> = src.iter().map(|b| d.mul_vec(b)).collect();
        let coords = express_in_basis(next.space_dim(), &dst, &images)
            .ok_or(Error::RelativeClosureViolated(self.degree))?;
        let mut m = Matrix::zeros(dst.len(), src.len());
        for (j, col) in coords.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
    }
}

pub fn evaluate_on_basis(n: usize, vdim: usize, coords: &[Rational], args: &[usize]) -> Vector {
    let mut sorted = args.to_vec();
    match sort_with_sign(&mut sorted) {
        None => zero_vector(vdim),
        Some(sg) => {
            let ti = tuple_rank(n, &sorted);
            let s = int(sg as i64);
            coords[ti * vdim..(ti + 1) * vdim].iter().map(|x| x * &s).collect()
        }
    }
}

/// Canonical echelon basis of `A^k(g, h; V)` inside the full level: the joint
/// kernel of `i_X` and `L_X` over a basis of `h`.
pub fn relative_subspace(level: &CochainLevel<'_>, h: &Subalgebra) -> Vec<Vector> {
    let n = level.space_dim();
    let mut blocks = Vec::with_capacity(2 * h.dim());
    for x in h.vectors() {
        if level.degree() > 0 {
            blocks.push(level.interior_product_matrix(x));
        }
        blocks.push(level.lie_derivative_matrix(x));
    }
    let kernel = if blocks.is_empty() {
        (0..n).map(|i| crate::ratlin::unit_vector(n, i)).collect()
    } else {
        Matrix::vstack(n, &blocks).kernel_basis()
    };
    canonical_span(&kernel, n)
}

/// Matrix of `J : A^k(g) → A^{k-1}(g; g*)`, `1 ≤ k ≤ dim g`. The codomain
/// uses the coadjoint coordinates: index `tuple * dim + m` holds the value
/// on `e_m`.
pub fn j_map_matrix(g: &LieAlgebra, k: usize) -> Matrix {
    assert!(k >= 1 && k <= g.dim(), "J is defined for 1 <= k <= dim g");
    let n = g.dim();
    let targets = increasing_tuples(n, k - 1);
    let mut m = Matrix::zeros(targets.len() * n, binomial(n, k));
    for (si, s) in targets.iter().enumerate() {
        for c in 0..n {
            let mut args = Vec::with_capacity(k);
            args.push(c);
            args.extend_from_slice(s);
            if let Some(sg) = sort_with_sign(&mut args) {
                m[(si * n + c, tuple_rank(n, &args))] = int(sg as i64);
            }
        }
    }
    m
}

/// A cochain detached from any borrowed level.
#[derive(Clone, Debug, PartialEq)]
pub struct Cochain {
    pub algebra_dim: usize,
    pub vdim: usize,
    pub degree: usize,
    pub coords: Vector,
}

impl Cochain {
    pub fn new(algebra_dim: usize, vdim: usize, degree: usize, coords: Vector) -> Self {
        assert_eq!(coords.len(), binomial(algebra_dim, degree) * vdim);
        Cochain {
            algebra_dim,
            vdim,
            degree,
            coords,
        }
    }

    /// `e*_{i_1} ∧ … ∧ e*_{i_k}` with scalar values; indices may be unsorted.
    pub fn wedge_of_duals(algebra_dim: usize, indices: &[usize]) -> Self {
        let k = indices.len();
        let mut coords = zero_vector(binomial(algebra_dim, k));
        let mut sorted = indices.to_vec();
        if let Some(sg) = sort_with_sign(&mut sorted) {
            coords[tuple_rank(algebra_dim, &sorted)] = int(sg as i64);
        }
        Cochain::new(algebra_dim, 1, k, coords)
    }

    pub fn evaluate(&self, args: &[usize]) -> Vector {
        assert_eq!(args.len(), self.degree);
        evaluate_on_basis(self.algebra_dim, self.vdim, &self.coords, args)
    }

    /// Multilinear evaluation on arbitrary vectors of `g`.
    pub fn evaluate_vectors(&self, xs: &[Vector]) -> Vector {
        assert_eq!(xs.len(), self.degree);
        let mut out = zero_vector(self.vdim);
        let mut idx = vec![0usize; self.degree];
        loop {
            let coeff = idx
                .iter()
                .zip(xs)
                .fold(Rational::one(), |acc, (&i, x)| acc * &x[i]);
            if !coeff.is_zero() {
                for (o, v) in out.iter_mut().zip(self.evaluate(&idx)) {
                    *o += &coeff * v;
                }
            }
            // odometer increment
            let mut p = 0;
            loop {
                if p == self.degree {
                    return out;
                }
                idx[p] += 1;
                if idx[p] < self.algebra_dim {
                    break;
                }
                idx[p] = 0;
                p += 1;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}
