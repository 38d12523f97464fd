//! Independent oracles: the differential evaluated straight from its defining
//! formula on fully antisymmetrized cochains, and Betti numbers from ranks
//! computed modulo a prime.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use liecoh::cecomplex::CochainLevel;
use liecoh::cohomology::betti_numbers;
use liecoh::extensions::{fivedim_ext, heis3, sl2, sl2_ext, sl2sl2, so3};
use liecoh::gmod::GModule;
use liecoh::liealg::{LieAlgebra, Subalgebra};
use liecoh::ratlin::{frac, Matrix, Rational};

fn lex_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn permutations(items: &[usize]) -> Vec<(Vec<usize>, i64)> {
    if items.len() <= 1 {
        return vec![(items.to_vec(), 1)];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let first = rest.remove(i);
        let sign = if i % 2 == 0 { 1 } else { -1 };
        for (mut p, s) in permutations(&rest) {
            p.insert(0, first);
            out.push((p, s * sign));
        }
    }
    out
}

/// A cochain stored on every ordered tuple of distinct basis indices.
struct Full {
    vdim: usize,
    values: HashMap<Vec<usize>, Vec<Rational>>,
}

impl Full {
    fn from_coords(n: usize, k: usize, vdim: usize, coords: &[Rational]) -> Self {
        let mut values = HashMap::new();
        for (t, tuple) in lex_tuples(n, k).iter().enumerate() {
            let base = &coords[t * vdim..(t + 1) * vdim];
            for (p, s) in permutations(tuple) {
                values.insert(p, base.iter().map(|x| x * Rational::from_integer(s.into())).collect());
            }
        }
        Full { vdim, values }
    }

    fn at(&self, args: &[usize]) -> Vec<Rational> {
        self.values
            .get(args)
            .cloned()
            .unwrap_or_else(|| vec![Rational::zero(); self.vdim])
    }
}

fn add_into(acc: &mut [Rational], v: &[Rational], c: &Rational) {
    for (a, x) in acc.iter_mut().zip(v) {
        *a += x * c;
    }
}

/// `(δf)(X_0..X_k) = Σ_i (-1)^i X_i·f(..X̂_i..) + Σ_{i<j} (-1)^{i+j} f([X_i,X_j], ..X̂_i..X̂_j..)`.
fn brute_differential(g: &LieAlgebra, m: &GModule, f: &Full, args: &[usize]) -> Vec<Rational> {
    let n = g.dim();
    let mut out = vec![Rational::zero(); m.vdim()];
    for i in 0..args.len() {
        let rest: Vec<usize> = args.iter().enumerate().filter(|&(p, _)| p != i).map(|(_, &a)| a).collect();
        let sign = Rational::from_integer(if i % 2 == 0 { 1.into() } else { (-1).into() });
        let moved = m.action_basis(args[i]).mul_vec(&f.at(&rest));
        add_into(&mut out, &moved, &sign);
    }
    for i in 0..args.len() {
        for j in i + 1..args.len() {
            let sign = Rational::from_integer(if (i + j) % 2 == 0 { 1.into() } else { (-1).into() });
            let rest: Vec<usize> = args
                .iter()
                .enumerate()
                .filter(|&(p, _)| p != i && p != j)
                .map(|(_, &a)| a)
                .collect();
            for c in 0..n {
                let coeff = g.structure_constant(args[i], args[j], c);
                if coeff.is_zero() {
                    continue;
                }
                let mut full_args = vec![c];
                full_args.extend(&rest);
                add_into(&mut out, &f.at(&full_args), &(&sign * &coeff));
            }
        }
    }
    out
}

fn random_coords(rng: &mut ChaCha8Rng, len: usize) -> Vec<Rational> {
    (0..len).map(|_| frac(rng.gen_range(-5..=5), rng.gen_range(1..=3))).collect()
}

fn check_differential(module: &GModule, max_k: usize, rng: &mut ChaCha8Rng) {
    let g = module.algebra();
    let n = g.dim();
    for k in 0..=max_k.min(n.saturating_sub(1)) {
        let level = CochainLevel::new(module, k);
        let coords = random_coords(rng, level.space_dim());
        let fast = level.differential_matrix().mul_vec(&coords);
        let full = Full::from_coords(n, k, module.vdim(), &coords);
        for (t, tuple) in lex_tuples(n, k + 1).iter().enumerate() {
            let want = brute_differential(g, module, &full, tuple);
            let got = &fast[t * module.vdim()..(t + 1) * module.vdim()];
            assert_eq!(got, &want[..], "{} degree {k} on {tuple:?}", module.label());
        }
    }
}

#[test]
fn differential_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for g in [sl2(), so3(), heis3()] {
        for m in [GModule::trivial(&g, 1), GModule::adjoint(&g), GModule::coadjoint(&g)] {
            check_differential(&m, 3, &mut rng);
        }
    }
    let g = sl2sl2();
    check_differential(&GModule::trivial(&g, 1), 4, &mut rng);
    check_differential(&GModule::adjoint(&g), 2, &mut rng);
    let pair = fivedim_ext(&frac(1, 2)).unwrap();
    check_differential(&GModule::coadjoint(&pair.g_r), 2, &mut rng);
}

const P: u64 = 2_147_483_647;

fn mod_p(x: &Rational) -> u64 {
    let p = BigInt::from(P);
    let reduce = |v: &BigInt| {
        let r = v % &p;
        let r = if r.is_negative() { r + &p } else { r };
        r.to_u64().unwrap()
    };
    let num = reduce(x.numer());
    let den = reduce(x.denom());
    assert_ne!(den, 0, "denominator divisible by the oracle prime");
    num * pow_mod(den, P - 2) % P
}

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1;
    b %= P;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

fn rank_mod_p(m: &Matrix) -> usize {
    let mut a: Vec<Vec<u64>> = (0..m.rows()).map(|i| m.row(i).iter().map(mod_p).collect()).collect();
    let cols = m.cols();
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..a.len()).find(|&r| a[r][c] != 0) else { continue };
        a.swap(rank, piv);
        let inv = pow_mod(a[rank][c], P - 2);
        for x in a[rank].iter_mut() {
            *x = *x * inv % P;
        }
        for r in 0..a.len() {
            if r != rank && a[r][c] != 0 {
                let f = a[r][c];
                for cc in 0..cols {
                    let sub = f * a[rank][cc] % P;
                    a[r][cc] = (a[r][cc] + P - sub) % P;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn betti_mod_p(module: &GModule, h: Option<&Subalgebra>) -> Vec<usize> {
    let n = module.algebra().dim();
    let top = n - h.map_or(0, Subalgebra::dim);
    let levels: Vec<CochainLevel> = (0..=top + 1)
        .map(|k| match h {
            Some(h) if k <= top => CochainLevel::relative(module, k, h),
            _ => CochainLevel::new(module, k.min(n)),
        })
        .collect();
    let ranks: Vec<usize> = (0..=top)
        .map(|k| {
            if k == top {
                return 0;
            }
            let d = match h {
                Some(_) => levels[k].restricted_differential(&levels[k + 1]).unwrap(),
                None => levels[k].differential_matrix(),
            };
            rank_mod_p(&d)
        })
        .collect();
    (0..=top)
        .map(|k| levels[k].dim() - ranks[k] - if k > 0 { ranks[k - 1] } else { 0 })
        .collect()
}

fn assert_betti_agree(module: &GModule, h: Option<&Subalgebra>) {
    assert_eq!(
        betti_numbers(module, h).unwrap(),
        betti_mod_p(module, h),
        "{}",
        module.label()
    );
}

#[test]
fn betti_numbers_match_modular_ranks() {
    for g in [sl2(), so3(), heis3(), sl2sl2(), Arc::new(LieAlgebra::abelian(4))] {
        for m in [GModule::trivial(&g, 1), GModule::adjoint(&g), GModule::coadjoint(&g)] {
            assert_betti_agree(&m, None);
        }
    }
    let pair = sl2_ext();
    for m in [GModule::trivial(&pair.g_r, 1), GModule::adjoint(&pair.g_r), GModule::coadjoint(&pair.g_r)] {
        assert_betti_agree(&m, None);
        assert_betti_agree(&m, Some(&pair.h_r));
    }
    let pair = fivedim_ext(&frac(2, 1)).unwrap();
    for m in [GModule::adjoint(&pair.g_r), GModule::coadjoint(&pair.g_r)] {
        assert_betti_agree(&m, Some(&pair.h_r));
    }
    assert_betti_agree(&GModule::trivial(&pair.g_r, 1), None);
}

#[test]
fn modular_oracle_sees_known_values() {
    assert_eq!(betti_mod_p(&GModule::trivial(&heis3(), 1), None), vec![1, 2, 2, 1]);
    assert_eq!(betti_mod_p(&GModule::trivial(&sl2sl2(), 1), None), vec![1, 0, 0, 2, 0, 0, 1]);
}
