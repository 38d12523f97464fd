//! Betti numbers and canonical representatives of `H^k(g; V)` and
//! `H^k(g, h; V)`, plus the distinguished classes checked by the suite.

use std::cell::OnceCell;
use std::sync::Arc;

use num_traits::Zero;

use crate::cecomplex::{binomial, increasing_tuples, Cochain, CochainLevel};
use crate::error::{Error, Result};
use crate::gmod::GModule;
use crate::liealg::{LieAlgebra, Subalgebra};
use crate::ratlin::{canonical_span, quotient_dim, rank_of, rref, Matrix, Vector};

#[derive(Clone, Debug)]
pub struct CohomologyResult {
    pub degree: usize,
    pub betti: usize,
    pub cocycle_representatives: Vec<Cochain>,
    pub relative: bool,
    pub module_spec: String,
}

/// The cochain complex of a module, relative to `h` when given. Levels are
/// built on first use.
pub struct CeComplex<'m> {
    module: &'m GModule,
    h: Option<Subalgebra>,
    levels: Vec<OnceCell<CochainLevel<'m>>>,
}

impl<'m> CeComplex<'m> {
    pub fn new(module: &'m GModule, h: Option<&Subalgebra>) -> Self {
        let n = module.algebra().dim();
        CeComplex {
            module,
            h: h.cloned(),
            levels: (0..=n + 1).map(|_| OnceCell::new()).collect(),
        }
    }

    pub fn is_relative(&self) -> bool {
        self.h.is_some()
    }

    /// Highest degree with a possibly nonzero level: `dim g - dim h`.
    pub fn top_degree(&self) -> usize {
        self.module.algebra().dim() - self.h.as_ref().map_or(0, Subalgebra::dim)
    }

    pub fn level(&self, k: usize) -> &CochainLevel<'m> {
        self.levels[k].get_or_init(|| match &self.h {
            Some(h) => CochainLevel::relative(self.module, k, h),
            None => CochainLevel::new(self.module, k),
        })
    }

    /// Cocycles of degree `k` as full-space coordinate vectors, in canonical
    /// echelon form.
    fn cocycles(&self, k: usize) -> Vec<Vector> {
        let level = self.level(k);
        let d = level.differential_matrix();
        match level.relative_basis() {
            None => canonical_span(&d.kernel_basis(), level.space_dim()),
            Some(basis) => {
                let images: Vec<Vector> = basis.iter().map(|b| d.mul_vec(b)).collect();
                let m = Matrix::from_columns(d.rows(), &images);
                let z: Vec<Vector> = m
                    .kernel_basis()
                    .iter()
                    .map(|y| combine(basis, y, level.space_dim()))
                    .collect();
                canonical_span(&z, level.space_dim())
            }
        }
    }

    /// Image of `δ_{k-1}` inside level `k`.
    fn coboundaries(&self, k: usize) -> Vec<Vector> {
        if k == 0 {
            return Vec::new();
        }
        let prev = self.level(k - 1);
        let d = prev.differential_matrix();
        let images = match prev.relative_basis() {
            None => d.column_vectors(),
            Some(basis) => basis.iter().map(|b| d.mul_vec(b)).collect(),
        };
        canonical_span(&images, d.rows())
    }

    pub fn cohomology(&self, k: usize) -> Result<CohomologyResult> {
        let top = self.top_degree();
        if k > top {
            return Err(Error::DegreeOutOfRange { degree: k, max: top });
        }
        let len = self.level(k).space_dim();
        let z = self.cocycles(k);
        let b = self.coboundaries(k);
        let betti = quotient_dim(&z, &b, len)?;
        let b_ech = rref(b, len);
        let normal_forms: Vec<Vector> = z.iter().map(|v| b_ech.reduce(v)).collect();
        let reps = canonical_span(&normal_forms, len);
        debug_assert_eq!(reps.len(), betti);
        let n = self.module.algebra().dim();
        let vdim = self.module.vdim();
        Ok(CohomologyResult {
            degree: k,
            betti,
            cocycle_representatives: reps
                .into_iter()
                .map(|c| Cochain::new(n, vdim, k, c))
                .collect(),
            relative: self.is_relative(),
            module_spec: self.module.label().to_string(),
        })
    }

    pub fn betti_numbers(&self) -> Result<Vec<usize>> {
        (0..=self.top_degree())
            .map(|k| self.cohomology(k).map(|r| r.betti))
            .collect()
    }
}

fn combine(basis: &[Vector], coeffs: &[crate::ratlin::Rational], len: usize) -> Vector {
    let mut out = crate::ratlin::zero_vector(len);
    for (b, c) in basis.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(b) {
            if !x.is_zero() {
                *o += c * x;
            }
        }
    }
    out
}

/// `H^k(g; V)` or `H^k(g, h; V)`.
pub fn cohomology(module: &GModule, k: usize, h: Option<&Subalgebra>) -> Result<CohomologyResult> {
    CeComplex::new(module, h).cohomology(k)
}

pub fn betti_numbers(module: &GModule, h: Option<&Subalgebra>) -> Result<Vec<usize>> {
    CeComplex::new(module, h).betti_numbers()
}

#[derive(Clone, Debug)]
pub struct KillingClass {
    pub form: Cochain,
    pub closed: bool,
    pub class_nonzero: bool,
}

/// The 3-cocycle `κ(X, Y, Z) = B([X, Y], Z)` of a semisimple algebra and
/// whether its class is nonzero.
pub fn killing_three_form(g: &Arc<LieAlgebra>) -> Result<KillingClass> {
    let n = g.dim();
    let b = g.killing_form();
    if b.rank() != n {
        return Err(Error::NotSemisimple);
    }
    let coords: Vector = increasing_tuples(n, 3)
        .iter()
        .map(|t| {
            let br = g.bracket_basis(t[0], t[1]);
            br.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .fold(crate::ratlin::Rational::zero(), |acc, (m, c)| acc + c * &b[(m, t[2])])
        })
        .collect();
    let form = Cochain::new(n, 1, 3, coords);
    let trivial = GModule::trivial(g, 1);
    let closed = CochainLevel::new(&trivial, 3)
        .differential_matrix()
        .mul_vec(&form.coords)
        .iter()
        .all(Zero::is_zero);
    let d2 = CochainLevel::new(&trivial, 2).differential_matrix();
    let mut cols = d2.column_vectors();
    let before = rank_of(&cols, binomial(n, 3));
    cols.push(form.coords.clone());
    let class_nonzero = !form.is_zero() && rank_of(&cols, binomial(n, 3)) > before;
    Ok(KillingClass {
        form,
        closed,
        class_nonzero,
    })
}

#[derive(Clone, Debug)]
pub struct VolumeForm {
    pub top_degree: usize,
    pub dim_top_relative: usize,
    pub form: Option<Cochain>,
}

/// Top-degree relative forms `A^{dim g - dim h}(g, h)`; a one-dimensional
/// space means the invariant volume form exists and is unique up to scale.
pub fn invariant_volume_form(g: &Arc<LieAlgebra>, h: &Subalgebra) -> VolumeForm {
    let trivial = GModule::trivial(g, 1);
    let top = g.dim() - h.dim();
    let level = CochainLevel::relative(&trivial, top, h);
    let basis = level.relative_basis().unwrap_or_default();
    let dim_top_relative = basis.len();
    let form = (dim_top_relative == 1).then(|| Cochain::new(g.dim(), 1, top, basis[0].clone()));
    VolumeForm {
        top_degree: top,
        dim_top_relative,
        form,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub degree: usize,
    pub top_degree: usize,
    pub left: usize,
    pub right: usize,
    pub equal: bool,
}

/// Compares `dim H^k(g, h; V)` with `dim H^{n-k}(g, h; V*)`, `n = dim g - dim h`.
/// Equality is reported, not assumed.
pub fn duality_report(module: &GModule, h: &Subalgebra, k: usize) -> Result<DualityReport> {
    let top = module.algebra().dim() - h.dim();
    if k > top {
        return Err(Error::DegreeOutOfRange { degree: k, max: top });
    }
    let left = cohomology(module, k, Some(h))?.betti;
    let dual = module.dual();
    let right = cohomology(&dual, top - k, Some(h))?.betti;
    Ok(DualityReport {
        degree: k,
        top_degree: top,
        left,
        right,
        equal: left == right,
    })
}
