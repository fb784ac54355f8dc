mod common;

use std::collections::BTreeSet;

use alcove::rational::{rat, zero};
use alcove::root_system::{AffineFunction, AffineRoot};
use alcove::weyl::Side;
use alcove::CartanType;
use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rank_two_systems() -> Vec<(CartanType, usize)> {
    vec![(CartanType::A, 1), (CartanType::A, 2), (CartanType::B, 2), (CartanType::C, 2), (CartanType::G, 2), (CartanType::BC, 1), (CartanType::BC, 2)]
}

#[test]
fn affine_reflection_axioms() {
    for (t, n) in rank_two_systems() {
        let g = affine(t, n);
        let aff = g.root_system();
        let fin = aff.finite();
        let mut roots = Vec::new();
        for a in fin.roots() {
            for level in -4..=4 {
                if aff.contains(a, level) {
                    roots.push(AffineRoot { direction: a.clone(), level });
                }
            }
        }
        for a in &roots {
            let fa = AffineFunction::from(a);
            let cor = fin.coroot(&fa).unwrap();
            for b in &roots {
                let fb = AffineFunction::from(b);
                let r = fin.reflect_fn(&fa, &fb).unwrap();
                let dir: Vec<i64> = r.gradient.iter().map(|x| alcove::rational::to_i64(x).unwrap()).collect();
                assert!(r.constant.is_integer(), "{t}{n}: {a} reflects {b} off the integers");
                let lvl = alcove::rational::to_i64(&r.constant).unwrap();
                assert!(aff.contains(&dir, lvl), "{t}{n}: s_{a}({b}) ∉ S");
                assert!(fin.pairing(&cor, &fb).is_integer());
                assert_eq!(fin.reflect_fn(&fa, &r).unwrap(), fb);
            }
            // f∨∨ = f
            assert_eq!(fin.coroot(&cor).unwrap(), fa);
        }
        let x = aff.alcove_interior_point();
        assert!(aff.simples().iter().all(|a| a.eval(x) > zero()));
    }
}

#[test]
fn eta_independent_of_reduced_word() {
    for g in [affine(CartanType::A, 1), finite(CartanType::B, 2)] {
        for x in g.enumerate_ball(5).unwrap() {
            let words = all_reduced_words(&g, &x);
            for t in g.reflections_t(&x).iter().chain(g.reflections_t(&x.inverse()).iter()) {
                let e = g.eta(&x, t).unwrap();
                for w in &words {
                    assert_eq!(g.eta_from_word(w, t).unwrap(), e);
                }
            }
        }
    }
}

#[test]
fn reflection_sets_subadditive() {
    for g in [affine(CartanType::A, 2), affine(CartanType::B, 2)] {
        let ball = g.enumerate_ball(4).unwrap();
        for x in &ball {
            let tx = g.reflections_t(x);
            assert_eq!(tx.len(), g.length(x));
            for y in ball.iter().step_by(3) {
                let txy = g.reflections_t(&x.mul(y));
                let conj: BTreeSet<_> = g
                    .reflections_t(y)
                    .iter()
                    .map(|t| g.as_reflection(&x.conjugate(&reflection_element(&g, t))).unwrap())
                    .collect();
                assert!(txy.iter().all(|t| tx.contains(t) || conj.contains(t)));
            }
        }
    }
}

#[test]
fn min_coset_rep_property() {
    let g = affine(CartanType::C, 2);
    for sigma in [ns(&[1]), ns(&[0, 2]), ns(&[1, 2])] {
        let ts = parabolic_reflections(&g, sigma);
        for x in g.enumerate_ball(4).unwrap() {
            let r = g.min_coset_rep(&x, sigma, Side::Right);
            assert!(g.in_parabolic(&r.inverse().mul(&x), sigma));
            assert!(g.reflections_t(&r.inverse()).is_disjoint(&ts));
            let l = g.min_coset_rep(&x, sigma, Side::Left);
            assert!(g.in_parabolic(&x.mul(&l.inverse()), sigma));
            assert!(g.reflections_t(&l).is_disjoint(&ts));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn length_identities(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for g in [affine(CartanType::A, 2), affine(CartanType::G, 2), affine(CartanType::BC, 2)] {
            let x = g.random_element(&mut rng, 8);
            let y = g.random_element(&mut rng, 8);
            let (lx, ly, lxy) = (g.length(&x) as i64, g.length(&y) as i64, g.length(&x.mul(&y)) as i64);
            prop_assert_eq!(lx, g.length(&x.inverse()) as i64);
            prop_assert_eq!((lxy - lx - ly).rem_euclid(2), 0);
            prop_assert!((lxy - lx - ly).abs() <= 2 * lx.min(ly));
        }
    }

    #[test]
    fn action_on_affine_roots(seed in any::<u64>(), level in -3i64..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = affine(CartanType::B, 3);
        let x = g.random_element(&mut rng, 10);
        let y = g.random_element(&mut rng, 10);
        let fin = g.finite_system();
        let alpha = fin.roots()[(seed % fin.roots().len() as u64) as usize].clone();
        let a = AffineRoot { direction: alpha, level };
        prop_assert_eq!(x.act_on_affine_root(&y.act_on_affine_root(&a)), x.mul(&y).act_on_affine_root(&a));
        let p = vec![rat(1) / rat(3), rat(-2), rat(5) / rat(7)];
        prop_assert_eq!(x.act_on_point(&y.act_on_point(&p)), x.mul(&y).act_on_point(&p));
    }
}
