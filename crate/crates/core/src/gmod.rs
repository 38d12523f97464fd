//! Finite-dimensional modules over a Lie algebra, stored as one action
//! matrix per basis vector.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::liealg::LieAlgebra;
use crate::ratlin::{Matrix, Rational, Vector};

#[derive(Clone, Debug)]
pub struct GModule {
    algebra: Arc<LieAlgebra>,
    vdim: usize,
    actions: Vec<Matrix>,
    label: String,
}

impl GModule {
    /// Validates the module axiom `ρ([e_i,e_j]) = [ρ(e_i), ρ(e_j)]` for all `i < j`.
    pub fn new(
        algebra: &Arc<LieAlgebra>,
        vdim: usize,
        actions: Vec<Matrix>,
        label: impl Into<String>,
    ) -> Result<Self> {
        let m = GModule::from_actions_unchecked(algebra, vdim, actions, label)?;
        m.check_axiom()?;
        Ok(m)
    }

    /// Builds a module without checking the homomorphism property. Only shape
    /// is validated. Used for deliberately broken inputs in mutation tests.
    pub fn from_actions_unchecked(
        algebra: &Arc<LieAlgebra>,
        vdim: usize,
        actions: Vec<Matrix>,
        label: impl Into<String>,
    ) -> Result<Self> {
        if actions.len() != algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} action matrices for an algebra of dimension {}",
                actions.len(),
                algebra.dim()
            )));
        }
        if actions.iter().any(|a| a.rows() != vdim || a.cols() != vdim) {
            return Err(Error::DimensionMismatch(format!(
                "action matrices must be {vdim}x{vdim}"
            )));
        }
        Ok(GModule {
            algebra: Arc::clone(algebra),
            vdim,
            actions,
            label: label.into(),
        })
    }

    pub fn trivial(algebra: &Arc<LieAlgebra>, vdim: usize) -> Self {
        let actions = vec![Matrix::zeros(vdim, vdim); algebra.dim()];
        let label = if vdim == 1 {
            "trivial".to_string()
        } else {
            format!("trivial:{vdim}")
        };
        GModule::from_actions_unchecked(algebra, vdim, actions, label).expect("shapes agree")
    }

    pub fn adjoint(algebra: &Arc<LieAlgebra>) -> Self {
        let n = algebra.dim();
        let actions = (0..n).map(|i| algebra.ad_basis(i).clone()).collect();
        GModule::from_actions_unchecked(algebra, n, actions, "adjoint").expect("shapes agree")
    }

    /// `g*` with `(X·ω)(Y) = ω([Y, X])`, i.e. `X` acts by `-ad(X)ᵀ`.
    pub fn coadjoint(algebra: &Arc<LieAlgebra>) -> Self {
        let n = algebra.dim();
        let minus_one = -Rational::from_integer(1.into());
        let actions = (0..n)
            .map(|i| algebra.ad_basis(i).transpose().scale(&minus_one))
            .collect();
        GModule::from_actions_unchecked(algebra, n, actions, "coadjoint").expect("shapes agree")
    }

    /// `g*` with the opposite sign, `X` acting by `+ad(X)ᵀ`. This is an
    /// anti-homomorphism, so the result is not a module; it exists so that
    /// sign-sensitive identities can be shown to fail.
    pub fn coadjoint_flipped_sign(algebra: &Arc<LieAlgebra>) -> Self {
        let n = algebra.dim();
        let actions = (0..n).map(|i| algebra.ad_basis(i).transpose()).collect();
        GModule::from_actions_unchecked(algebra, n, actions, "coadjoint(flipped)")
            .expect("shapes agree")
    }

    /// Contragredient module: `X` acts by `-ρ(X)ᵀ`.
    pub fn dual(&self) -> Self {
        let minus_one = -Rational::from_integer(1.into());
        let actions = self
            .actions
            .iter()
            .map(|a| a.transpose().scale(&minus_one))
            .collect();
        GModule {
            algebra: Arc::clone(&self.algebra),
            vdim: self.vdim,
            actions,
            label: format!("dual:{}", self.label),
        }
    }

    pub fn direct_sum(modules: &[GModule]) -> Result<Self> {
        let first = modules
            .first()
            .ok_or_else(|| Error::DimensionMismatch("empty direct sum".into()))?;
        let algebra = Arc::clone(&first.algebra);
        if modules
            .iter()
            .any(|m| !Arc::ptr_eq(&m.algebra, &algebra) && *m.algebra != *algebra)
        {
            return Err(Error::MixedAlgebras);
        }
        let vdim = modules.iter().map(|m| m.vdim).sum();
        let actions = (0..algebra.dim())
            .map(|i| {
                let blocks: Vec<Matrix> = modules.iter().map(|m| m.actions[i].clone()).collect();
                Matrix::block_diagonal(&blocks)
            })
            .collect();
        let label = format!(
            "sum:{}",
            modules.iter().map(|m| m.label.as_str()).collect::<Vec<_>>().join("+")
        );
        Ok(GModule {
            algebra,
            vdim,
            actions,
            label,
        })
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn vdim(&self) -> usize {
        self.vdim
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.actions
    }

    pub fn action_basis(&self, i: usize) -> &Matrix {
        &self.actions[i]
    }

    /// Action matrix of a general element `x`.
    pub fn action(&self, x: &[Rational]) -> Matrix {
        let mut m = Matrix::zeros(self.vdim, self.vdim);
        for (a, c) in self.actions.iter().zip(x) {
            m.add_scaled(a, c);
        }
        m
    }

    pub fn is_trivial(&self) -> bool {
        self.actions.iter().all(Matrix::is_zero)
    }

    pub fn check_axiom(&self) -> Result<()> {
        let n = self.algebra.dim();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.action(&self.algebra.bracket_basis(i, j));
                let rhs = self.actions[i].commutator(&self.actions[j]);
                let residual = lhs.sub(&rhs);
                if !residual.is_zero() {
                    return Err(Error::ModuleAxiomViolation {
                        i,
                        j,
                        nonzero: residual.nonzero_count(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Vectors fixed by the whole algebra, i.e. the joint kernel of all actions.
    pub fn invariants(&self) -> Vec<Vector> {
        Matrix::vstack(self.vdim, &self.actions).kernel_basis()
    }

    /// Entrywise equality of the action families.
    pub fn same_actions(&self, other: &GModule) -> bool {
        self.vdim == other.vdim && self.actions == other.actions
    }
}

/// Builds a module from a specification string: `trivial`, `trivial:n`,
/// `adjoint`, `coadjoint`, `dual:<spec>` or `sum:<spec>+<spec>+...`.
pub fn module_from_spec(algebra: &Arc<LieAlgebra>, spec: &str) -> Result<GModule> {
    let spec = spec.trim();
    let unknown = || Error::UnknownModuleSpec(spec.to_string());
    match spec {
        "trivial" => Ok(GModule::trivial(algebra, 1)),
        "adjoint" => Ok(GModule::adjoint(algebra)),
        "coadjoint" => Ok(GModule::coadjoint(algebra)),
        _ => {
            if let Some(n) = spec.strip_prefix("trivial:") {
                let n: usize = n.parse().map_err(|_| unknown())?;
                if n == 0 {
                    return Err(unknown());
                }
                Ok(GModule::trivial(algebra, n))
            } else if let Some(inner) = spec.strip_prefix("dual:") {
                Ok(module_from_spec(algebra, inner)?.dual())
            } else if let Some(parts) = spec.strip_prefix("sum:") {
                let summands = parts
                    .split('+')
                    .map(|p| module_from_spec(algebra, p))
                    .collect::<Result<Vec<_>>>()?;
                GModule::direct_sum(&summands)
            } else {
                Err(unknown())
            }
        }
    }
}
