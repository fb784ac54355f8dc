mod common;

use std::collections::BTreeSet;

use alcove::relative::{is_parabolic_finite, lien_decompose, longest_element, normalizer_pairs};
use common::*;

#[test]
fn relative_length_additivity() {
    for (name, rel) in test_systems() {
        let g = rel.group();
        let ball = rel.ball(3).unwrap();
        for x in &ball {
            for y in &ball {
                let xy = x.mul(y);
                let rel_add = rel.relative_length(x).unwrap() + rel.relative_length(y).unwrap()
                    == rel.relative_length(&xy).unwrap();
                let add = g.length(x) + g.length(y) == g.length(&xy);
                assert_eq!(rel_add, add, "{name}");
            }
        }
    }
}

#[test]
fn conjugation_permutes_sigma_and_w0_centralizes() {
    for (name, rel) in test_systems() {
        let g = rel.group();
        let sigma = rel.sigma();
        let w0 = rel.w0_sigma();
        for st in rel.simples() {
            assert_eq!(w0.mul(&st.element), st.element.mul(w0), "{name}");
        }
        for x in rel.ball(3).unwrap() {
            let image: BTreeSet<_> = sigma.iter().map(|s| x.conjugate(g.generator(s).unwrap())).collect();
            let gens: BTreeSet<_> = sigma.iter().map(|s| g.generator(s).unwrap().clone()).collect();
            assert_eq!(image, gens, "{name}");
        }
    }
}

#[test]
fn reflection_set_of_w0_shift() {
    for (name, rel) in test_systems() {
        let g = rel.group();
        let ts = parabolic_reflections(g, rel.sigma());
        for x in rel.ball(3).unwrap() {
            let tx = g.reflections_t(&x);
            assert!(tx.is_disjoint(&ts), "{name}");
            let expect: BTreeSet<_> = tx.union(&ts).cloned().collect();
            assert_eq!(g.reflections_t(&rel.w0_sigma().mul(&x)), expect, "{name}");
        }
    }
}

#[test]
fn dichotomy_conditions_agree() {
    for (name, rel) in test_systems() {
        let g = rel.group();
        let sigma = rel.sigma();
        let w0 = rel.w0_sigma();
        let ts = parabolic_reflections(g, sigma);
        for x in rel.ball(4).unwrap() {
            let tx = g.reflections_t(&x);
            for s in g.nodes().minus(sigma).iter() {
                let i = g.is_left_descent(&x, s);
                let ii = g.left_descents(&w0.mul(&x)).minus(sigma) == g.left_descents(&x)
                    && g.left_descents(&x).contains(s);
                let big = sigma.with(s);
                let finite = is_parabolic_finite(g, big);
                let (iii, iv) = if finite {
                    let st = longest_element(g, big).unwrap().mul(w0);
                    let iii = g.length(&st.mul(&x)) + g.length(&st) == g.length(&x);
                    let tb = parabolic_reflections(g, big);
                    (iii, tb.difference(&ts).all(|t| tx.contains(t)))
                } else {
                    (false, false)
                };
                assert_eq!((i, ii, iii), (iv, iv, iv), "{name} at {} s{s}", g.format_word(&x));
            }
        }
    }
}

#[test]
fn exchange_property() {
    for (name, rel) in test_systems().into_iter().take(2) {
        let g = rel.group();
        for w in rel.ball(3).unwrap() {
            let word = rel.relative_word(&w).unwrap();
            let letters: Vec<_> = word.iter().map(|n| rel.simple(*n).unwrap().element.clone()).collect();
            for st in rel.simples() {
                if g.length(&st.element.mul(&w)) >= g.length(&w) {
                    continue;
                }
                let mut prefix = g.identity();
                let mut found = false;
                for wi in &letters {
                    let next = prefix.mul(wi);
                    if st.element.mul(&prefix) == next {
                        found = true;
                        break;
                    }
                    prefix = next;
                }
                assert!(found, "{name}: no exchange index for s̃{} on {:?}", st.node, word);
            }
        }
    }
}

#[test]
fn lien_moves_compose() {
    let g = affine(alcove::CartanType::A, 3);
    let pairs = normalizer_pairs(&g, ns(&[1]), ns(&[3]), 6).unwrap();
    assert!(!pairs.is_empty());
    for y in pairs {
        let moves = lien_decompose(&g, &y, ns(&[1]), ns(&[3])).unwrap();
        let prod = moves.iter().rev().fold(g.identity(), |acc, m| acc.mul(&m.element));
        assert_eq!(prod, y);
        let total: usize = moves.iter().map(|m| g.length(&m.element)).sum();
        assert_eq!(total, g.length(&y));
    }
}
