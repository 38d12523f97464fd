//! Full central extensions `(g_R, h_R)` and the built-in catalog.
//!
//! `g_R = g ⊕ ℚ^rank` with central generators `c_1..c_rank`, and `h_R` is the
//! diagonal subalgebra spanned by `h` together with `r_i + Σ_a mixing[a][i] c_a`
//! for an abelian `r` commuting with `h`.

use std::sync::Arc;

use num_traits::Zero;

use crate::cohomology::{cohomology, duality_report, invariant_volume_form, DualityReport};
use crate::error::{Error, Result};
use crate::gmod::GModule;
use crate::liealg::{combination, LieAlgebra, Subalgebra};
use crate::ratlin::{int, is_zero_vector, parse_rational, zero_vector, Matrix, Rational, Vector};

#[derive(Clone, Debug)]
pub struct ExtensionPair {
    pub base: Arc<LieAlgebra>,
    pub g_r: Arc<LieAlgebra>,
    pub h_r: Subalgebra,
    pub r_basis: Vec<Vector>,
    pub rank: usize,
    pub dim_x: usize,
}

impl ExtensionPair {
    /// Indices of the central generators inside `g_R`.
    pub fn central_indices(&self) -> std::ops::Range<usize> {
        self.base.dim()..self.g_r.dim()
    }

    /// The same `g_R` with a different isotropy subalgebra.
    pub fn with_isotropy(&self, vectors: Vec<Vector>) -> Result<ExtensionPair> {
        let h_r = Subalgebra::new(&self.g_r, vectors)?;
        Ok(ExtensionPair {
            dim_x: self.g_r.dim() - h_r.dim(),
            h_r,
            ..self.clone()
        })
    }

    /// Isotropy spanned by the central generators alone.
    pub fn central_only(&self) -> Result<ExtensionPair> {
        let n = self.g_r.dim();
        self.with_isotropy(self.central_indices().map(|i| combination(n, &[(i, int(1))])).collect())
    }

    /// Isotropy with the central components of the diagonal generators dropped,
    /// so `h_R` becomes `h ⊕ r` sitting inside `g`.
    pub fn without_central_components(&self) -> Result<ExtensionPair> {
        let base_dim = self.base.dim();
        let vectors = self
            .h_r
            .vectors()
            .iter()
            .map(|v| {
                let mut w = v.clone();
                for x in w.iter_mut().skip(base_dim) {
                    *x = Rational::zero();
                }
                w
            })
            .collect();
        self.with_isotropy(vectors)
    }
}

fn pad(v: &[Rational], len: usize) -> Vector {
    let mut w = zero_vector(len);
    w[..v.len()].clone_from_slice(v);
    w
}

/// Builds `(g_R, h_R)` from `g`, `h`, the abelian directions `r_basis`, the
/// number of central generators and the `rank × |r_basis|` mixing matrix.
pub fn central_extension(
    g: &Arc<LieAlgebra>,
    h: &Subalgebra,
    r_basis: &[Vector],
    rank: usize,
    mixing: &Matrix,
) -> Result<ExtensionPair> {
    let n = g.dim();
    if r_basis.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch("r_basis vector length".into()));
    }
    for (i, a) in r_basis.iter().enumerate() {
        for (j, b) in r_basis.iter().enumerate().skip(i + 1) {
            if !is_zero_vector(&g.bracket(a, b)) {
                return Err(Error::RNotAbelian(i, j));
            }
        }
    }
    for (hb, x) in h.vectors().iter().enumerate() {
        for (ri, r) in r_basis.iter().enumerate() {
            if !is_zero_vector(&g.bracket(x, r)) {
                return Err(Error::RNotCommutingWithH { h: hb, r: ri });
            }
        }
    }
    if mixing.rows() != rank || mixing.cols() != r_basis.len() {
        return Err(Error::DimensionMismatch(format!(
            "mixing matrix must be {rank}x{}",
            r_basis.len()
        )));
    }
    let mixing_rank = mixing.rank();
    if mixing_rank != rank {
        return Err(Error::MixingRankDeficient {
            rank: mixing_rank,
            expected: rank,
        });
    }

    let z = LieAlgebra::new(
        "z",
        (1..=rank)
            .map(|a| if rank == 1 { "c".to_string() } else { format!("c{a}") })
            .collect(),
        Default::default(),
    )?;
    let g_r = Arc::new(g.direct_sum(&z, format!("{}+R^{rank}", g.name())));
    let total = n + rank;
    let mut vectors: Vec<Vector> = h.vectors().iter().map(|v| pad(v, total)).collect();
    for (i, r) in r_basis.iter().enumerate() {
        let mut w = pad(r, total);
        for a in 0..rank {
            w[n + a] = mixing[(a, i)].clone();
        }
        vectors.push(w);
    }
    let h_r = Subalgebra::new(&g_r, vectors)?;
    Ok(ExtensionPair {
        base: Arc::clone(g),
        dim_x: g_r.dim() - h_r.dim(),
        g_r,
        h_r,
        r_basis: r_basis.to_vec(),
        rank,
    })
}

/// Outcome of checking that `H^1(g_R, h_R; g_R)` and
/// `H^{dim X - 1}(g_R, h_R; g_R*)` vanish and that the volume form is unique.
#[derive(Clone, Debug)]
pub struct VanishingReport {
    pub dim_x: usize,
    pub h1_adjoint: usize,
    pub h_top_minus_one_coadjoint: usize,
    pub duality: DualityReport,
    pub volume_form_dim: usize,
    pub pass: bool,
}

pub fn verify_vanishing(pair: &ExtensionPair) -> Result<VanishingReport> {
    verify_vanishing_with(pair, &GModule::coadjoint(&pair.g_r))
}

/// Same as [`verify_vanishing`] with a caller-supplied coadjoint family.
pub fn verify_vanishing_with(pair: &ExtensionPair, coadjoint: &GModule) -> Result<VanishingReport> {
    let adjoint = GModule::adjoint(&pair.g_r);
    let h = &pair.h_r;
    let h1 = cohomology(&adjoint, 1, Some(h))?.betti;
    let top_minus_one = pair.dim_x.saturating_sub(1);
    let htop = cohomology(coadjoint, top_minus_one, Some(h))?.betti;
    let duality = duality_report(&adjoint, h, 1.min(pair.dim_x))?;
    let volume_form_dim = invariant_volume_form(&pair.g_r, h).dim_top_relative;
    Ok(VanishingReport {
        dim_x: pair.dim_x,
        h1_adjoint: h1,
        h_top_minus_one_coadjoint: htop,
        duality,
        volume_form_dim,
        pass: h1 == 0 && htop == 0 && volume_form_dim == 1,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedBetti {
    pub module: String,
    pub relative: bool,
    pub betti: Vec<usize>,
}

#[derive(Clone, Debug, Default)]
pub struct Annotations {
    pub semisimple: bool,
    /// Whether `h` is the Lie algebra of a compact subgroup; taken as given.
    pub compact_h: Option<bool>,
    /// Module specifications known to be irreducible and nontrivial; taken as given.
    pub irreducible_modules: Vec<String>,
    pub expected_betti: Vec<ExpectedBetti>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: Arc<LieAlgebra>,
    pub h: Option<Subalgebra>,
    pub extension: Option<ExtensionPair>,
    pub annotations: Annotations,
}

pub const CATALOG_NAMES: &[&str] = &[
    "sl2",
    "so3",
    "sl2sl2",
    "heis3",
    "abelian:n",
    "sl2_so2_pair",
    "sl2R_ext",
    "fivedim_ext:alpha",
];

pub fn sl2() -> Arc<LieAlgebra> {
    Arc::new(
        LieAlgebra::from_int_constants(
            "sl2",
            &["H", "E", "F"],
            &[(0, 1, &[(1, 2)]), (0, 2, &[(2, -2)]), (1, 2, &[(0, 1)])],
        )
        .expect("sl2 satisfies Jacobi"),
    )
}

pub fn so3() -> Arc<LieAlgebra> {
    // [X,Y] = Z, [Y,Z] = X, [Z,X] = Y
    Arc::new(
        LieAlgebra::from_int_constants(
            "so3",
            &["X", "Y", "Z"],
            &[(0, 1, &[(2, 1)]), (1, 2, &[(0, 1)]), (0, 2, &[(1, -1)])],
        )
        .expect("so3 satisfies Jacobi"),
    )
}

pub fn heis3() -> Arc<LieAlgebra> {
    Arc::new(
        LieAlgebra::from_int_constants("heis3", &["X", "Y", "Z"], &[(0, 1, &[(2, 1)])])
            .expect("Heisenberg satisfies Jacobi"),
    )
}

pub fn sl2sl2() -> Arc<LieAlgebra> {
    let a = sl2();
    let s = a.direct_sum(&a, "sl2sl2");
    let names = ["H1", "E1", "F1", "H2", "E2", "F2"];
    Arc::new(
        LieAlgebra::new(
            "sl2sl2",
            names.iter().map(|s| s.to_string()).collect(),
            s.nonzero_brackets(),
        )
        .expect("direct sum satisfies Jacobi"),
    )
}

/// The rotation generator `E - F` of `sl2`.
pub fn so2_generator() -> Vector {
    combination(3, &[(1, int(1)), (2, int(-1))])
}

pub fn sl2_ext() -> ExtensionPair {
    let g = sl2();
    central_extension(
        &g,
        &Subalgebra::zero(&g),
        &[so2_generator()],
        1,
        &Matrix::from_ints(&[&[1]]),
    )
    .expect("sl2 extension data is valid")
}

/// The 7-dimensional `g_R` over `sl2 ⊕ sl2` whose isotropy pairs the two
/// rotation generators with the central direction along `(1, α)`.
pub fn fivedim_ext(alpha: &Rational) -> Result<ExtensionPair> {
    if alpha.is_zero() {
        return Err(Error::InvalidSlope("slope must be a nonzero rational".into()));
    }
    let g = sl2sl2();
    let k1 = combination(6, &[(1, int(1)), (2, int(-1))]);
    let k2 = combination(6, &[(4, int(1)), (5, int(-1))]);
    let mixing = Matrix::from_rows(vec![vec![int(1), alpha.clone()]])?;
    central_extension(&g, &Subalgebra::zero(&g), &[k1, k2], 1, &mixing)
}

fn parse_slope(s: &str) -> Result<Rational> {
    parse_rational(s).map_err(|_| {
        Error::InvalidSlope(format!(
            "`{s}` is not a rational p/q; irrational slopes are not supported since it is \
             unknown whether they admit compact models"
        ))
    })
}

fn expected(module: &str, relative: bool, betti: &[usize]) -> ExpectedBetti {
    ExpectedBetti {
        module: module.to_string(),
        relative,
        betti: betti.to_vec(),
    }
}

fn entry(name: &str, algebra: Arc<LieAlgebra>, annotations: Annotations) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        algebra,
        h: None,
        extension: None,
        annotations,
    }
}

fn pair_entry(name: &str, pair: ExtensionPair) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        algebra: Arc::clone(&pair.g_r),
        h: Some(pair.h_r.clone()),
        annotations: Annotations {
            semisimple: false,
            compact_h: Some(true),
            ..Default::default()
        },
        extension: Some(pair),
    }
}

/// Looks up a catalog entry by its stable name.
pub fn builtin(name: &str) -> Result<CatalogEntry> {
    let simple = |name: &str, g: Arc<LieAlgebra>| {
        entry(
            name,
            g,
            Annotations {
                semisimple: true,
                compact_h: None,
                irreducible_modules: vec!["adjoint".into(), "coadjoint".into()],
                expected_betti: vec![
                    expected("trivial", false, &[1, 0, 0, 1]),
                    expected("adjoint", false, &[0, 0, 0, 0]),
                ],
            },
        )
    };
    match name {
        "sl2" => Ok(simple("sl2", sl2())),
        "so3" => Ok(simple("so3", so3())),
        "sl2sl2" => Ok(entry(
            "sl2sl2",
            sl2sl2(),
            Annotations {
                semisimple: true,
                compact_h: None,
                irreducible_modules: Vec::new(),
                expected_betti: vec![
                    expected("trivial", false, &[1, 0, 0, 2, 0, 0, 1]),
                    expected("adjoint", false, &[0; 7]),
                ],
            },
        )),
        "heis3" => Ok(entry(
            "heis3",
            heis3(),
            Annotations {
                expected_betti: vec![expected("trivial", false, &[1, 2, 2, 1])],
                ..Default::default()
            },
        )),
        "sl2_so2_pair" => {
            let g = sl2();
            let h = Subalgebra::new(&g, vec![so2_generator()])?;
            Ok(CatalogEntry {
                name: name.to_string(),
                algebra: g,
                h: Some(h),
                extension: None,
                annotations: Annotations {
                    semisimple: true,
                    compact_h: Some(true),
                    irreducible_modules: vec!["adjoint".into()],
                    expected_betti: vec![expected("trivial", true, &[1, 0, 1])],
                },
            })
        }
        "sl2R_ext" => Ok(pair_entry(name, sl2_ext())),
        _ => {
            if let Some(n) = name.strip_prefix("abelian:") {
                let n: usize = n
                    .parse()
                    .map_err(|_| Error::UnknownName(name.to_string()))?;
                let betti = (0..=n).map(|k| crate::cecomplex::binomial(n, k)).collect::<Vec<_>>();
                return Ok(entry(
                    name,
                    Arc::new(LieAlgebra::abelian(n)),
                    Annotations {
                        expected_betti: vec![expected("trivial", false, &betti)],
                        ..Default::default()
                    },
                ));
            }
            if let Some(a) = name.strip_prefix("fivedim_ext:") {
                let alpha = parse_slope(a)?;
                return Ok(pair_entry(name, fivedim_ext(&alpha)?));
            }
            Err(Error::UnknownName(name.to_string()))
        }
    }
}
