use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use liecoh::extensions::{heis3, sl2, sl2sl2, so3};
use liecoh::gmod::GModule;
use liecoh::liealg::LieAlgebra;
use liecoh::ratlin::{frac, int, parse_rational, Matrix, Rational};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| frac(p, q))
}

fn matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(small_rational(), c), r)
            .prop_map(|rows| Matrix::from_rows(rows).unwrap())
    })
}

fn vector(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec(small_rational(), n)
}

fn algebra() -> impl Strategy<Value = Arc<LieAlgebra>> {
    prop_oneof![Just(sl2()), Just(so3()), Just(heis3()), Just(sl2sl2())]
}

fn digits() -> impl Strategy<Value = BigInt> {
    "[1-9][0-9]{0,29}".prop_map(|s| s.parse::<BigInt>().unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_nullity(m in matrix(6)) {
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), m.cols());
        for v in kernel {
            prop_assert!(m.mul_vec(&v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn rank_invariant_under_scaling_and_row_permutation(
        m in matrix(6),
        s in (1i64..=5, 1i64..=5).prop_map(|(p, q)| frac(p, q)),
        shift in 0usize..6,
    ) {
        let r = m.rank();
        prop_assert_eq!(m.scale(&s).rank(), r);
        let mut rows = m.row_vectors();
        let len = rows.len();
        rows.rotate_left(shift % len);
        prop_assert_eq!(Matrix::from_rows(rows).unwrap().rank(), r);
        let mut cols = m.transpose().row_vectors();
        let len = cols.len();
        cols.rotate_right(shift % len);
        prop_assert_eq!(Matrix::from_rows(cols).unwrap().transpose().rank(), r);
    }

    #[test]
    fn ad_is_a_homomorphism(g in algebra(), seed in any::<u64>()) {
        let n = g.dim();
        let x: Vec<Rational> = (0..n).map(|i| int(((seed >> i) % 5) as i64 - 2)).collect();
        let y: Vec<Rational> = (0..n).map(|i| int(((seed >> (i + 7)) % 5) as i64 - 2)).collect();
        let lhs = g.ad_matrix(&g.bracket(&x, &y));
        let rhs = g.ad_matrix(&x).commutator(&g.ad_matrix(&y));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn killing_form_is_invariant(x in vector(3), y in vector(3), z in vector(3)) {
        // B([X,Y],Z) + B(Y,[X,Z]) = 0
        let g = sl2();
        let b = g.killing_form();
        let form = |u: &[Rational], v: &[Rational]| {
            let bv = b.mul_vec(v);
            u.iter().zip(&bv).fold(Rational::zero(), |acc, (a, c)| acc + a * c)
        };
        let total = form(&g.bracket(&x, &y), &z) + form(&y, &g.bracket(&x, &z));
        prop_assert!(total.is_zero());
    }

    #[test]
    fn double_dual_is_identity(g in algebra()) {
        for m in [GModule::adjoint(&g), GModule::trivial(&g, 2), GModule::coadjoint(&g)] {
            prop_assert!(m.dual().dual().same_actions(&m));
            m.dual().check_axiom().unwrap();
        }
    }

    #[test]
    fn rational_text_round_trip(p in digits(), q in digits(), negative in any::<bool>()) {
        let p = if negative { -p } else { p };
        let x = Rational::new(p, q);
        let text = x.to_string();
        prop_assert_eq!(parse_rational(&text).unwrap(), x);
    }
}
