#![allow(dead_code)]

use std::collections::BTreeSet;

use alcove::relative::RelativeCoxeterSystem;
use alcove::weyl::Reflection;
use alcove::{AffineRootSystem, CartanType, Element, FiniteRootSystem, NodeSet, WeylGroup};

pub fn affine(t: CartanType, n: usize) -> WeylGroup {
    WeylGroup::affine(AffineRootSystem::affinize(FiniteRootSystem::build(t, n).unwrap()).unwrap())
}

pub fn finite(t: CartanType, n: usize) -> WeylGroup {
    WeylGroup::finite(FiniteRootSystem::build(t, n).unwrap()).unwrap()
}

pub fn ns(v: &[usize]) -> NodeSet {
    v.iter().copied().collect()
}

pub fn relative(g: WeylGroup, sigma: &[usize]) -> RelativeCoxeterSystem {
    RelativeCoxeterSystem::new(g, ns(sigma)).unwrap()
}

/// The admissible systems used throughout the property tests.
pub fn test_systems() -> Vec<(&'static str, RelativeCoxeterSystem)> {
    vec![
        ("B2/{1}", relative(finite(CartanType::B, 2), &[1])),
        ("affine C2/{1}", relative(affine(CartanType::C, 2), &[1])),
        ("affine A3/{1,3}", relative(affine(CartanType::A, 3), &[1, 3])),
    ]
}

/// Reflections of the parabolic subgroup `W_Σ`, by enumeration (finite `W_Σ` only).
pub fn parabolic_reflections(g: &WeylGroup, sigma: NodeSet) -> BTreeSet<Reflection> {
    let elems = g.enumerate_ball_in(64, sigma).unwrap();
    elems.iter().filter_map(|x| g.as_reflection(x).ok()).collect()
}

pub fn reflection_element(g: &WeylGroup, t: &Reflection) -> Element {
    g.reflection(&t.root).unwrap()
}

/// Every reduced word of `g`, by exhausting left descents.
pub fn all_reduced_words(g: &WeylGroup, x: &Element) -> Vec<Vec<usize>> {
    let d = g.left_descents(x);
    if d.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in d.iter() {
        let rest = g.generator(i).unwrap().mul(x);
        for mut w in all_reduced_words(g, &rest) {
            w.insert(0, i);
            out.push(w);
        }
    }
    out
}
