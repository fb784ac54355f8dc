mod common;

use alcove::ddaha::{DDaha, DElem, HeckeParameters};
use alcove::linalg;
use alcove::poly::Poly;
use alcove::rational::{frac, zero};
use alcove::{CartanType, WeylGroup};
use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn algebra(g: WeylGroup) -> DDaha {
    let p = HeckeParameters::uniform(&g, 2, 1, 2);
    DDaha::new(g, p).unwrap()
}

/// `(g ⊗ p)(h ⊗ q) = gh ⊗ h⁻¹(p) q`, the product when every `h_a` vanishes.
fn smash(alg: &DDaha, x: &DElem, y: &DElem) -> DElem {
    let mut out = DElem::zero(alg.nvars());
    for (g, p) in x.terms() {
        for (h, q) in y.terms() {
            out.add_term(g.mul(h), alg.act(&h.inverse(), p).mul(q));
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn associative_and_filtered(seed in any::<u64>(), a2 in any::<bool>()) {
        let g = if a2 { affine(CartanType::A, 2) } else { affine(CartanType::C, 2) };
        let alg = algebra(g);
        let grp = alg.group();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = alg.random_element(&mut rng, 3, 2, 3);
        let y = alg.random_element(&mut rng, 3, 2, 3);
        let z = alg.random_element(&mut rng, 3, 2, 3);
        let xy = alg.multiply(&x, &y).unwrap();
        prop_assert_eq!(alg.multiply(&xy, &z).unwrap(), alg.multiply(&x, &alg.multiply(&y, &z).unwrap()).unwrap());
        let lmax = |e: &DElem| e.support().iter().map(|g| grp.length(g)).max().unwrap_or(0);
        prop_assert!(lmax(&xy) <= lmax(&x) + lmax(&y));
        prop_assert!(xy.degree() <= x.degree() + y.degree());
    }
}

#[test]
fn cross_relation_identity() {
    let alg = algebra(affine(CartanType::C, 2));
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for i in alg.group().nodes().iter() {
        let s = alg.generator(i).unwrap();
        for _ in 0..100 {
            let f = Poly::random(&mut rng, alg.nvars(), 3, 4);
            let sf = alg.reflect(i, &f);
            let lhs = alg.multiply(&s, &alg.poly(f.clone())).unwrap().sub(&alg.multiply(&alg.poly(sf.clone()), &s).unwrap());
            let rhs = alg.poly(f.sub(&sf).div_linear(alg.simple_poly(i)).unwrap().scale(alg.h(i)));
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn vanishing_parameters_give_smash_product() {
    for g in [affine(CartanType::A, 1), affine(CartanType::A, 2)] {
        let p = HeckeParameters::uniform(&g, 2, 1, 2).with_u(zero()).unsafe_ok();
        let alg = DDaha::new(g, p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..50 {
            let x = alg.random_element(&mut rng, 3, 2, 3);
            let y = alg.random_element(&mut rng, 3, 2, 3);
            assert_eq!(alg.multiply(&x, &y).unwrap(), smash(&alg, &x, &y));
        }
    }
}

#[test]
fn standard_module_actions_commute() {
    let alg = algebra(affine(CartanType::A, 2));
    let lambda0 = vec![frac(1, 5), frac(2, 7)];
    let module = alg.standard_module(&lambda0, 2).unwrap();
    let n = alg.nvars();
    let f = Poly::var(n, 0).mul(&Poly::var(n, 1)).add(&Poly::var(n, 0));
    let g = Poly::var(n, 1).pow(2);
    let mf = alg.action_matrix(&module, &f).unwrap();
    let mg = alg.action_matrix(&module, &g).unwrap();
    assert_eq!(linalg::mat_mul(&mf, &mg), linalg::mat_mul(&mg, &mf));
    let mfg = alg.action_matrix(&module, &f.mul(&g)).unwrap();
    assert_eq!(linalg::mat_mul(&mf, &mg), mfg);
    assert!(module.weights.iter().all(|w| w.multiplicity == 1 && w.dimension == 1));
}

#[test]
fn printed_elements_parse_back() {
    let alg = algebra(affine(CartanType::C, 2));
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for _ in 0..30 {
        let x = alg.random_element(&mut rng, 3, 2, 4);
        assert_eq!(alg.parse(&alg.format(&x)).unwrap(), x);
    }
}
