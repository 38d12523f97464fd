//! Exact operator identities of the cochain complex, checked as matrix
//! equalities. Each function returns `Ok(())` or a description of the first
//! failing degree.

use std::sync::Arc;

use num_traits::Zero;
use rand::Rng;

use crate::cecomplex::{increasing_tuples, j_map_matrix, CochainLevel};
use crate::gmod::GModule;
use crate::liealg::LieAlgebra;
use crate::ratlin::{frac, int, Matrix, Rational, Vector};

pub type Check = std::result::Result<(), String>;

fn zero_or_empty(m: &Matrix) -> bool {
    m.rows() == 0 || m.cols() == 0 || m.is_zero()
}

/// `δ_{k+1} δ_k = 0` at degree `k`.
pub fn d_squared(module: &GModule, k: usize) -> Check {
    let a = CochainLevel::new(module, k).differential_matrix();
    let b = CochainLevel::new(module, k + 1).differential_matrix();
    if zero_or_empty(&b.mul(&a)) {
        Ok(())
    } else {
        Err(format!("δδ != 0 on {} in degree {k}", module.label()))
    }
}

/// `L_X = δ i_X + i_X δ` on degree `k`.
pub fn cartan_relation(module: &GModule, k: usize, x: &[Rational]) -> Check {
    let level = CochainLevel::new(module, k);
    let lx = level.lie_derivative_matrix(x);
    let d = level.differential_matrix();
    let mut rhs = CochainLevel::new(module, k + 1).interior_product_matrix(x).mul(&d);
    if k > 0 {
        let below = CochainLevel::new(module, k - 1).differential_matrix();
        rhs = rhs.add(&below.mul(&level.interior_product_matrix(x)));
    }
    if lx == rhs {
        Ok(())
    } else {
        Err(format!("L_X != δi_X + i_Xδ on {} in degree {k}", module.label()))
    }
}

/// `2 dω = Σ_i e*_i ∧ L_{e_i} ω` on scalar forms of degree `k`.
pub fn delta_prime(g: &Arc<LieAlgebra>, k: usize) -> Check {
    let t = GModule::trivial(g, 1);
    let level = CochainLevel::new(&t, k);
    let n = g.dim();
    let lhs = level.differential_matrix().scale(&int(2));
    let mut rhs = Matrix::zeros(lhs.rows(), lhs.cols());
    for i in 0..n {
        let ei = crate::liealg::basis_vector(n, i);
        let term = level
            .wedge_dual_basis_matrix(i)
            .mul(&level.lie_derivative_matrix(&ei));
        rhs = rhs.add(&term);
    }
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("2d != Σ e*∧L on {} in degree {k}", g.name()))
    }
}

/// `dω = Σ_{i<j} ω([e_j, e_i]) e*_i ∧ e*_j` for 1-forms, with the right side
/// assembled straight from the structure constants.
pub fn delta_one(g: &Arc<LieAlgebra>) -> Check {
    let n = g.dim();
    let t = GModule::trivial(g, 1);
    let d1 = CochainLevel::new(&t, 1).differential_matrix();
    let pairs = increasing_tuples(n, 2);
    let mut expected = Matrix::zeros(pairs.len(), n);
    for (row, p) in pairs.iter().enumerate() {
        for m in 0..n {
            expected[(row, m)] = g.structure_constant(p[1], p[0], m);
        }
    }
    if d1 == expected {
        Ok(())
    } else {
        Err(format!("d on 1-forms disagrees with structure constants on {}", g.name()))
    }
}

/// The three relations `δJ = -Jd`, `i_X J = -J i_X`, `L_X J = J L_X` on scalar
/// forms of degree `k ≥ 1`, with `J` landing in `coadjoint`.
pub fn j_relations(coadjoint: &GModule, k: usize, x: &[Rational]) -> [Check; 3] {
    let g = coadjoint.algebra();
    let n = g.dim();
    let t = GModule::trivial(g, 1);
    let scalar = CochainLevel::new(&t, k);
    let twisted = CochainLevel::new(coadjoint, k - 1);
    let j = j_map_matrix(g, k);
    let minus = -Rational::from_integer(1.into());

    let lhs = twisted.differential_matrix().mul(&j);
    let d = scalar.differential_matrix();
    let rhs = if k < n {
        j_map_matrix(g, k + 1).mul(&d).scale(&minus)
    } else {
        Matrix::zeros(lhs.rows(), lhs.cols())
    };
    let delta = if lhs == rhs {
        Ok(())
    } else {
        Err(format!("δJ != -Jd on {} in degree {k}", g.name()))
    };

    let lhs = twisted.interior_product_matrix(x).mul(&j);
    let rhs = if k >= 2 {
        j_map_matrix(g, k - 1)
            .mul(&scalar.interior_product_matrix(x))
            .scale(&minus)
    } else {
        Matrix::zeros(lhs.rows(), lhs.cols())
    };
    let interior = if lhs == rhs {
        Ok(())
    } else {
        Err(format!("i_X J != -J i_X on {} in degree {k}", g.name()))
    };

    let lhs = twisted.lie_derivative_matrix(x).mul(&j);
    let rhs = j.mul(&scalar.lie_derivative_matrix(x));
    let lie = if lhs == rhs {
        Ok(())
    } else {
        Err(format!("L_X J != J L_X on {} in degree {k}", g.name()))
    };
    [delta, interior, lie]
}

/// Small random rational vector with entries `p/q`, `|p| ≤ 3`, `1 ≤ q ≤ 2`.
pub fn random_vector<R: Rng>(rng: &mut R, n: usize) -> Vector {
    (0..n)
        .map(|_| frac(rng.gen_range(-3..=3), rng.gen_range(1..=2)))
        .collect()
}

/// Random invertible matrix with small integer entries.
pub fn random_invertible<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    loop {
        let rows = (0..n)
            .map(|_| (0..n).map(|_| int(rng.gen_range(-2..=2))).collect())
            .collect();
        let m = Matrix::from_rows(rows).expect("square");
        if !m.determinant().expect("square").is_zero() {
            return m;
        }
    }
}
