use std::sync::Arc;

use liecoh::cecomplex::{binomial, CochainLevel, Cochain};
use liecoh::cohomology::{betti_numbers, cohomology};
use liecoh::error::Error;
use liecoh::extensions::{builtin, sl2, CATALOG_NAMES};
use liecoh::gmod::{module_from_spec, GModule};
use liecoh::liealg::{basis_vector, LieAlgebra, Subalgebra};
use liecoh::ratlin::{int, rank_of, Rational};
use liecoh::verify::check_catalog_entry;

fn catalog() -> Vec<String> {
    CATALOG_NAMES
        .iter()
        .flat_map(|n| match *n {
            "abelian:n" => vec!["abelian:1".to_string(), "abelian:3".to_string()],
            "fivedim_ext:alpha" => ["1", "2", "3", "1/2", "-3/4"]
                .iter()
                .map(|a| format!("fivedim_ext:{a}"))
                .collect(),
            other => vec![other.to_string()],
        })
        .collect()
}

#[test]
fn catalog_annotations_hold() {
    for name in catalog() {
        let entry = builtin(&name).unwrap();
        for (what, ok) in check_catalog_entry(&entry) {
            assert!(ok, "{what}");
        }
    }
}

#[test]
fn catalog_rejects_bad_names() {
    assert!(matches!(builtin("sl3"), Err(Error::UnknownName(_))));
    assert!(matches!(builtin("fivedim_ext:0"), Err(Error::InvalidSlope(_))));
    assert!(matches!(builtin("fivedim_ext:sqrt2"), Err(Error::InvalidSlope(_))));
}

#[test]
fn structure_flags() {
    for name in ["sl2", "so3", "sl2sl2"] {
        let r = builtin(name).unwrap().algebra.structure_report();
        assert!(r.is_semisimple && r.center.dim() == 0, "{name}");
    }
    for name in ["heis3", "abelian:3"] {
        assert!(!builtin(name).unwrap().algebra.structure_report().is_semisimple, "{name}");
    }
}

#[test]
fn subalgebra_must_be_closed() {
    let g = sl2();
    let err = Subalgebra::new(&g, vec![basis_vector(3, 1), basis_vector(3, 2)]).unwrap_err();
    assert!(matches!(err, Error::NotASubalgebra(_)));
}

#[test]
fn constructed_modules_satisfy_axiom() {
    for name in catalog() {
        let g = builtin(&name).unwrap().algebra;
        for spec in ["trivial", "trivial:2", "adjoint", "coadjoint", "dual:adjoint", "sum:trivial+coadjoint"] {
            module_from_spec(&g, spec).unwrap().check_axiom().unwrap();
        }
    }
}

#[test]
fn simple_adjoint_has_no_invariants() {
    for name in ["sl2", "so3", "sl2sl2"] {
        let g = builtin(name).unwrap().algebra;
        assert!(GModule::adjoint(&g).invariants().is_empty(), "{name}");
    }
}

#[test]
fn relative_complexes_are_closed() {
    for name in catalog() {
        let entry = builtin(&name).unwrap();
        let Some(h) = entry.h.as_ref() else { continue };
        let g = &entry.algebra;
        let top = g.dim() - h.dim();
        for m in [GModule::trivial(g, 1), GModule::adjoint(g), GModule::coadjoint(g)] {
            for k in 0..top {
                let a = CochainLevel::relative(&m, k, h);
                let b = CochainLevel::relative(&m, k + 1, h);
                a.restricted_differential(&b).unwrap();
            }
        }
    }
}

#[test]
fn wedge_of_duals_evaluates_to_one() {
    for (n, idx) in [(3, vec![0, 1, 2]), (5, vec![1, 3]), (6, vec![0, 2, 4, 5]), (4, vec![2])] {
        let c = Cochain::wedge_of_duals(n, &idx);
        assert_eq!(c.evaluate(&idx), vec![int(1)]);
        let mut swapped = idx.clone();
        if swapped.len() > 1 {
            swapped.swap(0, 1);
            assert_eq!(c.evaluate(&swapped), vec![int(-1)]);
        }
    }
}

#[test]
fn representatives_are_independent_cocycles() {
    for name in ["sl2", "heis3", "abelian:3", "sl2_so2_pair", "sl2sl2"] {
        let entry = builtin(name).unwrap();
        let g = &entry.algebra;
        for spec in ["trivial", "adjoint", "coadjoint"] {
            let m = module_from_spec(g, spec).unwrap();
            for h in [None, entry.h.as_ref()] {
                let top = g.dim() - h.map_or(0, Subalgebra::dim);
                for k in 0..=top {
                    let res = cohomology(&m, k, h).unwrap();
                    assert_eq!(res.cocycle_representatives.len(), res.betti);
                    let level = CochainLevel::new(&m, k);
                    let len = level.space_dim();
                    let d = level.differential_matrix();
                    for rep in &res.cocycle_representatives {
                        assert!(d.mul_vec(&rep.coords).iter().all(|x| *x == Rational::from_integer(0.into())));
                    }
                    let mut span: Vec<_> = if k == 0 {
                        Vec::new()
                    } else {
                        let below = match h {
                            Some(h) => CochainLevel::relative(&m, k - 1, h),
                            None => CochainLevel::new(&m, k - 1),
                        };
                        let d = below.differential_matrix();
                        below.basis().iter().map(|b| d.mul_vec(b)).collect()
                    };
                    let before = rank_of(&span, len);
                    span.extend(res.cocycle_representatives.iter().map(|r| r.coords.clone()));
                    assert_eq!(rank_of(&span, len), before + res.betti, "{name} {spec} H^{k}");
                }
            }
        }
    }
}

#[test]
fn euler_characteristic() {
    for name in ["sl2", "so3", "heis3", "abelian:3", "sl2sl2", "sl2R_ext", "fivedim_ext:1"] {
        let g = builtin(name).unwrap().algebra;
        for m in [GModule::trivial(&g, 1), GModule::adjoint(&g)] {
            let betti = betti_numbers(&m, None).unwrap();
            let lhs: i64 = betti.iter().enumerate().map(|(k, &b)| sign(k) * b as i64).sum();
            let rhs: i64 = (0..=g.dim())
                .map(|k| sign(k) * (binomial(g.dim(), k) * m.vdim()) as i64)
                .sum();
            assert_eq!(lhs, rhs, "{name} {}", m.label());
        }
    }
}

fn sign(k: usize) -> i64 {
    if k % 2 == 0 { 1 } else { -1 }
}

#[test]
fn semisimple_low_degrees() {
    for name in ["sl2", "so3", "sl2sl2"] {
        let g = builtin(name).unwrap().algebra;
        let b = betti_numbers(&GModule::trivial(&g, 1), None).unwrap();
        assert_eq!((b[1], b[2]), (0, 0), "{name}");
        assert!(b[3] >= 1, "{name}");
        for m in [GModule::adjoint(&g), GModule::coadjoint(&g)] {
            assert!(betti_numbers(&m, None).unwrap().iter().all(|&x| x == 0), "{name}");
        }
    }
}

#[test]
fn extension_pairs() {
    for name in catalog().iter().filter(|n| n.contains("_ext")) {
        let pair = builtin(name).unwrap().extension.unwrap();
        let g: &Arc<LieAlgebra> = &pair.g_r;
        for c in pair.central_indices() {
            for x in 0..g.dim() {
                assert!(g.bracket_basis(x, c).iter().all(|v| *v == int(0)), "{name}");
            }
        }
        Subalgebra::new(g, pair.h_r.vectors().to_vec()).unwrap();
        assert_eq!(pair.dim_x, g.dim() - pair.h_r.dim());
        assert_eq!(g.dim(), pair.base.dim() + pair.rank);
        let r = g.structure_report();
        assert!(r.is_reductive && r.center.dim() == pair.rank, "{name}");
    }
}
