//! Parabolic subgroups, admissibility, and the relative Coxeter system
//! `(W̃, S̃)` attached to an admissible subset `Σ` of simple reflections.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::sync::RwLock;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::rat;
use crate::weyl::{Element, NodeSet, Reflection, Side, WeylGroup};

/// Default cap on the order of `s̃t̃` reported as a finite number.
pub const DEFAULT_ORDER_CAP: u32 = 12;

/// `W_Σ` is finite iff the Gram matrix of the gradients of `Σ` is positive definite.
pub fn is_parabolic_finite(group: &WeylGroup, sigma: NodeSet) -> bool {
    let fin = group.finite_system();
    let grads: Vec<Vec<i64>> = sigma.iter().map(|i| group.simple_root(i).direction.clone()).collect();
    let m: linalg::Matrix = grads
        .iter()
        .map(|a| {
            grads
                .iter()
                .map(|b| {
                    let av: Vec<_> = a.iter().map(|&x| rat(x)).collect();
                    let bv: Vec<_> = b.iter().map(|&x| rat(x)).collect();
                    linalg::bilinear(fin.gram(), &av, &bv)
                })
                .collect()
        })
        .collect();
    linalg::is_positive_definite(&m)
}

/// Longest element of a finite `W_Σ`, by right multiplication with non-descents.
pub fn longest_element(group: &WeylGroup, sigma: NodeSet) -> Result<Element> {
    group.check_nodes(sigma)?;
    if !is_parabolic_finite(group, sigma) {
        return Err(Error::NotFinite(sigma.to_string()));
    }
    let mut cur = group.identity();
    while let Some(s) = sigma.iter().find(|&s| !group.is_right_descent(&cur, s)) {
        cur = cur.mul(group.generator(s)?);
    }
    Ok(cur)
}

/// Concurrent memo of longest elements keyed by node set.
#[derive(Debug, Default)]
pub struct LongestElements {
    memo: RwLock<BTreeMap<NodeSet, Option<Element>>>,
}

impl LongestElements {
    pub fn get(&self, group: &WeylGroup, sigma: NodeSet) -> Option<Element> {
        if let Some(hit) = self.memo.read().expect("memo lock").get(&sigma) {
            return hit.clone();
        }
        let v = longest_element(group, sigma).ok();
        self.memo.write().expect("memo lock").insert(sigma, v.clone());
        v
    }
}

impl Clone for LongestElements {
    fn clone(&self) -> Self {
        Self { memo: RwLock::new(self.memo.read().expect("memo lock").clone()) }
    }
}

#[derive(Debug, Clone)]
pub struct ParabolicSubset {
    pub sigma: NodeSet,
    pub finite: bool,
    pub w0: Option<Element>,
    /// Reflections of `W_Σ`; empty when `W_Σ` is infinite.
    pub t_sigma: BTreeSet<Reflection>,
}

impl ParabolicSubset {
    pub fn new(group: &WeylGroup, sigma: NodeSet) -> Result<Self> {
        group.check_nodes(sigma)?;
        let finite = is_parabolic_finite(group, sigma);
        let w0 = finite.then(|| longest_element(group, sigma)).transpose()?;
        let t_sigma = w0.as_ref().map(|w| group.reflections_t(w)).unwrap_or_default();
        Ok(Self { sigma, finite, w0, t_sigma })
    }
}

/// Whether `x W_Σ x⁻¹ ⊆ W_{Σ'}`, checked on generators.
pub fn conjugates_into(group: &WeylGroup, x: &Element, sigma: NodeSet, sigma_prime: NodeSet) -> bool {
    let inv = x.inverse();
    sigma
        .iter()
        .all(|s| group.in_parabolic(&x.mul(group.gen(s)).mul(&inv), sigma_prime))
}

pub fn normalizes(group: &WeylGroup, x: &Element, sigma: NodeSet) -> bool {
    conjugates_into(group, x, sigma, sigma) && conjugates_into(group, &x.inverse(), sigma, sigma)
}

/// Membership in `N(Σ, Σ') = {y ∈ W^Σ ∩ ^{Σ'}W : y W_Σ y⁻¹ = W_{Σ'}}`.
pub fn in_normalizer_set(group: &WeylGroup, y: &Element, sigma: NodeSet, sigma_prime: NodeSet) -> bool {
    group.in_coxeter_group(y)
        && group.right_descents(y).iter().all(|s| !sigma.contains(s))
        && group.left_descents(y).iter().all(|s| !sigma_prime.contains(s))
        && conjugates_into(group, y, sigma, sigma_prime)
        && conjugates_into(group, &y.inverse(), sigma_prime, sigma)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdmissibilityViolation {
    /// The finite over-parabolic whose longest element fails to normalize.
    pub sigma_prime: NodeSet,
    /// Reduced word of `w_0^{Σ'}`.
    pub witness: Vec<usize>,
    /// The generator `s ∈ Σ` with `w_0^{Σ'} s w_0^{Σ'} ∉ W_Σ`.
    pub generator: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdmissibilityReport {
    pub sigma: NodeSet,
    pub finite: bool,
    pub admissible: bool,
    pub violations: Vec<AdmissibilityViolation>,
}

pub fn is_admissible(group: &WeylGroup, sigma: NodeSet) -> Result<AdmissibilityReport> {
    is_admissible_with(group, sigma, &LongestElements::default())
}

fn is_admissible_with(group: &WeylGroup, sigma: NodeSet, memo: &LongestElements) -> Result<AdmissibilityReport> {
    group.check_nodes(sigma)?;
    let finite = is_parabolic_finite(group, sigma);
    let mut violations = Vec::new();
    if finite {
        let free: Vec<usize> = group.nodes().minus(sigma).iter().collect();
        for mask in 0u32..(1 << free.len()) {
            let sp = free
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << k) != 0)
                .fold(sigma, |acc, (_, &i)| acc.with(i));
            let Some(w0) = memo.get(group, sp) else { continue };
            for s in sigma.iter() {
                if !group.in_parabolic(&w0.conjugate(group.gen(s)), sigma) {
                    violations.push(AdmissibilityViolation {
                        sigma_prime: sp,
                        witness: group.reduced_word(&w0).letters,
                        generator: s,
                    });
                }
            }
        }
    }
    violations.sort_by_key(|v| (v.sigma_prime.len(), v.sigma_prime, v.generator));
    Ok(AdmissibilityReport { sigma, finite, admissible: finite && violations.is_empty(), violations })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoxeterOrder {
    Finite(u32),
    /// `(s̃t̃)^k` is a nonzero translation for the order `k` of its finite part.
    Infinite,
    /// Finite, but larger than the configured cap.
    ExceedsCap(u32),
}

impl CoxeterOrder {
    pub fn as_finite(self) -> Option<u32> {
        match self {
            CoxeterOrder::Finite(k) => Some(k),
            _ => None,
        }
    }
}

impl fmt::Display for CoxeterOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterOrder::Finite(k) => write!(f, "{k}"),
            CoxeterOrder::Infinite => f.write_str("inf"),
            CoxeterOrder::ExceedsCap(c) => write!(f, ">{c}"),
        }
    }
}

impl Serialize for CoxeterOrder {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            CoxeterOrder::Finite(k) => s.serialize_u32(*k),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RelativeSimple {
    pub node: usize,
    pub element: Element,
    pub length: usize,
}

#[derive(Debug, Clone)]
pub struct RelativeCoxeterSystem {
    group: WeylGroup,
    base: ParabolicSubset,
    simples: Vec<RelativeSimple>,
    coxeter: Vec<Vec<CoxeterOrder>>,
    order_cap: u32,
    diagnostic: Option<String>,
    memo: LongestElements,
}

/// Order of `p` when finite, certified infinite otherwise.
/// Order of `p` in the group, certified infinite when a power of the finite part is a nontrivial translation.
pub fn element_order(p: &Element, cap: u32) -> CoxeterOrder {
    let fin = p.finite_part();
    let mut k = 1u32;
    let mut cur = fin.clone();
    // orders in finite Weyl groups of rank ≤ 8 are at most 30
    while !cur.is_identity() {
        cur = cur.mul(&fin);
        k += 1;
        assert!(k <= 240, "finite part of infinite order");
    }
    if !p.pow(k as usize).is_identity() {
        CoxeterOrder::Infinite
    } else if k > cap {
        CoxeterOrder::ExceedsCap(cap)
    } else {
        CoxeterOrder::Finite(k)
    }
}

impl RelativeCoxeterSystem {
    pub fn new(group: WeylGroup, sigma: NodeSet) -> Result<Self> {
        Self::with_order_cap(group, sigma, DEFAULT_ORDER_CAP)
    }

    pub fn with_order_cap(group: WeylGroup, sigma: NodeSet, order_cap: u32) -> Result<Self> {
        let memo = LongestElements::default();
        let report = is_admissible_with(&group, sigma, &memo)?;
        if !report.admissible {
            let why = if !report.finite {
                format!("{sigma}: W_Σ is infinite")
            } else {
                let v = &report.violations[0];
                format!("{sigma}: w0 of {} moves s{} out of W_Σ", v.sigma_prime, v.generator)
            };
            return Err(Error::NotAdmissible(why));
        }
        let base = ParabolicSubset::new(&group, sigma)?;
        let w0 = base.w0.clone().expect("admissible Σ is finite");
        let simples: Vec<RelativeSimple> = group
            .nodes()
            .minus(sigma)
            .iter()
            .filter_map(|s| {
                let big = memo.get(&group, sigma.with(s))?;
                let element = big.mul(&w0);
                let length = group.length(&element);
                Some(RelativeSimple { node: s, element, length })
            })
            .collect();
        let coxeter = simples
            .iter()
            .map(|a| {
                simples
                    .iter()
                    .map(|b| {
                        if a.node == b.node {
                            CoxeterOrder::Finite(1)
                        } else {
                            element_order(&a.element.mul(&b.element), order_cap)
                        }
                    })
                    .collect()
            })
            .collect();
        let mut sys = Self { group, base, simples, coxeter, order_cap, diagnostic: None, memo };
        sys.diagnostic = sys.empty_generator_diagnostic()?;
        Ok(sys)
    }

    /// When `S̃ = ∅` the relative group should be trivial; look for a witness that it is not.
    fn empty_generator_diagnostic(&self) -> Result<Option<String>> {
        if !self.simples.is_empty() {
            return Ok(None);
        }
        let radius = if self.group.is_affine() { 6 } else { self.group.finite_system().positive_roots().len() };
        for g in self.group.enumerate_ball(radius)? {
            if !g.is_identity() && self.contains(&g) {
                return Ok(Some(format!(
                    "S̃ is empty but {} lies in W̃",
                    self.group.format_word(&g)
                )));
            }
        }
        Ok(None)
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn sigma(&self) -> NodeSet {
        self.base.sigma
    }

    pub fn base(&self) -> &ParabolicSubset {
        &self.base
    }

    pub fn w0_sigma(&self) -> &Element {
        self.base.w0.as_ref().expect("admissible Σ is finite")
    }

    pub fn sigma_complement(&self) -> NodeSet {
        self.simples.iter().map(|s| s.node).collect()
    }

    pub fn simples(&self) -> &[RelativeSimple] {
        &self.simples
    }

    pub fn simple(&self, node: usize) -> Result<&RelativeSimple> {
        self.simples
            .iter()
            .find(|s| s.node == node)
            .ok_or(Error::UnknownNode(node))
    }

    pub fn coxeter_matrix(&self) -> &[Vec<CoxeterOrder>] {
        &self.coxeter
    }

    pub fn order_cap(&self) -> u32 {
        self.order_cap
    }

    pub fn diagnostic(&self) -> Option<&str> {
        self.diagnostic.as_deref()
    }

    pub fn longest(&self, sigma: NodeSet) -> Option<Element> {
        self.memo.get(&self.group, sigma)
    }

    /// `g ∈ W̃`: `g` normalizes `W_Σ` and is minimal in its coset.
    pub fn contains(&self, g: &Element) -> bool {
        let sigma = self.sigma();
        self.group.in_coxeter_group(g)
            && self.group.left_descents(g).iter().all(|s| !sigma.contains(s))
            && normalizes(&self.group, g, sigma)
    }

    /// Relative descents: `s ∈ Σ^∁` with `ℓ(sg) < ℓ(g)`.
    pub fn relative_descents(&self, g: &Element) -> Result<NodeSet> {
        self.require(g)?;
        let d = self.group.left_descents(g);
        Ok(self.sigma_complement().iter().filter(|&s| d.contains(s)).collect())
    }

    fn require(&self, g: &Element) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::NotInRelativeGroup(self.group.format_word(g)))
        }
    }

    /// Nodes `s` with `g = s̃_1 s̃_2 ⋯`, by greedy relative descent.
    pub fn relative_word(&self, g: &Element) -> Result<Vec<usize>> {
        self.require(g)?;
        let mut cur = g.clone();
        let mut word = Vec::new();
        let comp = self.sigma_complement();
        loop {
            let d = self.group.left_descents(&cur);
            if d.is_empty() {
                break;
            }
            let Some(s) = comp.iter().find(|&s| d.contains(s)) else {
                return Err(Error::NotInRelativeGroup(self.group.format_word(g)));
            };
            let st = self.simple(s)?;
            let next = st.element.mul(&cur);
            if self.group.length(&next) + st.length != self.group.length(&cur) {
                return Err(Error::NotInRelativeGroup(format!(
                    "length does not drop by ℓ(s̃{s}) at {}",
                    self.group.format_word(&cur)
                )));
            }
            cur = next;
            word.push(s);
        }
        Ok(word)
    }

    pub fn relative_length(&self, g: &Element) -> Result<usize> {
        Ok(self.relative_word(g)?.len())
    }

    pub fn evaluate(&self, word: &[usize]) -> Result<Element> {
        word.iter()
            .try_fold(self.group.identity(), |acc, &s| Ok(acc.mul(&self.simple(s)?.element)))
    }

    /// All `g ∈ W̃` with `ℓ̃(g) ≤ radius`, sorted by `ℓ̃` then by relative word.
    pub fn ball(&self, radius: usize) -> Result<Vec<Element>> {
        let cap = self.group.ball_cap();
        let mut seen: HashSet<Element> = HashSet::new();
        seen.insert(self.group.identity());
        let mut layer = vec![(Vec::<usize>::new(), self.group.identity())];
        let mut out = layer.clone();
        for _ in 0..radius {
            let mut next = Vec::new();
            for (word, g) in &layer {
                let d = self.group.left_descents(g);
                for st in &self.simples {
                    if d.contains(st.node) {
                        continue;
                    }
                    let h = st.element.mul(g);
                    if seen.insert(h.clone()) {
                        let mut w = vec![st.node];
                        w.extend(word);
                        next.push((w, h));
                    }
                }
            }
            if seen.len() > cap {
                return Err(Error::BallTooLarge { cap });
            }
            if next.is_empty() {
                break;
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        let mut keyed: Vec<(Vec<usize>, Element)> = out
            .into_iter()
            .map(|(_, g)| (self.relative_word(&g).expect("ball elements lie in W̃"), g))
            .collect();
        keyed.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
        Ok(keyed.into_iter().map(|(_, g)| g).collect())
    }

    pub fn format_relative(&self, g: &Element) -> Result<String> {
        let w = self.relative_word(g)?;
        Ok(if w.is_empty() {
            "e".into()
        } else {
            w.iter().map(|s| format!("s{s}")).collect::<Vec<_>>().join("*")
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LienMove {
    pub from: NodeSet,
    pub to: NodeSet,
    pub node: usize,
    pub element: Element,
}

/// Simple reflection index equal to `x`, if any.
fn as_generator(group: &WeylGroup, x: &Element) -> Option<usize> {
    group.nodes().iter().find(|&i| group.gen(i) == x)
}

/// Decomposes `y ∈ N(Σ, Σ')` as `y = y_q ⋯ y_1` with elementary moves
/// `y_i = w_0^{Σ_i ∪ {s_i}} w_0^{Σ_i} ∈ N(Σ_i, Σ_{i+1})`. Moves are returned as `[y_1, …, y_q]`.
pub fn lien_decompose(group: &WeylGroup, y: &Element, sigma: NodeSet, sigma_prime: NodeSet) -> Result<Vec<LienMove>> {
    group.check_nodes(sigma.union(sigma_prime))?;
    for s in [sigma, sigma_prime] {
        if !is_parabolic_finite(group, s) {
            return Err(Error::NotFinite(s.to_string()));
        }
    }
    if !in_normalizer_set(group, y, sigma, sigma_prime) {
        return Err(Error::NotANormalizerElement(group.format_word(y)));
    }
    let memo = LongestElements::default();
    let mut moves = Vec::new();
    let mut cur = y.clone();
    let mut target = sigma_prime;
    while !cur.is_identity() {
        let s = group
            .left_descents(&cur)
            .iter()
            .next()
            .expect("nontrivial elements have descents");
        let k = target.with(s);
        let big = memo
            .get(group, k)
            .ok_or_else(|| Error::NotANormalizerElement(format!("W_{k} is infinite")))?;
        let z = big.mul(&memo.get(group, target).expect("finite"));
        let zi = z.inverse();
        let next_target: NodeSet = target
            .iter()
            .map(|t| as_generator(group, &z.conjugate(group.gen(t))))
            .collect::<Option<NodeSet>>()
            .ok_or_else(|| Error::NotANormalizerElement("conjugate of Σ' is not simple".into()))?;
        let node = k
            .minus(next_target)
            .iter()
            .next()
            .expect("K has one more element than Σ''");
        moves.push(LienMove { from: next_target, to: target, node, element: zi });
        cur = z.mul(&cur);
        target = next_target;
    }
    if target != sigma {
        return Err(Error::NotANormalizerElement("decomposition does not end at Σ".into()));
    }
    moves.reverse();
    Ok(moves)
}

/// Elements of `N(Σ, Σ')` in the ball of the given radius.
pub fn normalizer_pairs(group: &WeylGroup, sigma: NodeSet, sigma_prime: NodeSet, radius: usize) -> Result<Vec<Element>> {
    Ok(group
        .enumerate_ball(radius)?
        .into_iter()
        .filter(|y| in_normalizer_set(group, y, sigma, sigma_prime))
        .collect())
}

/// Minimal representative of the coset `g W_Σ`.
pub fn coset_rep(group: &WeylGroup, g: &Element, sigma: NodeSet) -> Element {
    group.min_coset_rep(g, sigma, Side::Right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{AffineRootSystem, CartanType, FiniteRootSystem};

    fn finite(t: CartanType, n: usize) -> WeylGroup {
        WeylGroup::finite(FiniteRootSystem::build(t, n).unwrap()).unwrap()
    }

    fn affine(t: CartanType, n: usize) -> WeylGroup {
        WeylGroup::affine(AffineRootSystem::affinize(FiniteRootSystem::build(t, n).unwrap()).unwrap())
    }

    fn ns(v: &[usize]) -> NodeSet {
        v.iter().copied().collect()
    }

    #[test]
    fn finiteness_and_longest() {
        let a1 = affine(CartanType::A, 1);
        assert!(is_parabolic_finite(&a1, NodeSet::EMPTY));
        assert!(longest_element(&a1, NodeSet::EMPTY).unwrap().is_identity());
        assert!(!is_parabolic_finite(&a1, ns(&[0, 1])));
        assert!(matches!(longest_element(&a1, ns(&[0, 1])), Err(Error::NotFinite(_))));
        let a2 = affine(CartanType::A, 2);
        let w0 = longest_element(&a2, ns(&[1, 2])).unwrap();
        assert_eq!(a2.length(&w0), 3);
        let p = ParabolicSubset::new(&a2, ns(&[1, 2])).unwrap();
        assert_eq!(p.t_sigma.len(), 3);
        assert!(w0.mul(&w0).is_identity());
    }

    #[test]
    fn admissibility_examples() {
        let a2 = finite(CartanType::A, 2);
        assert!(is_admissible(&a2, NodeSet::EMPTY).unwrap().admissible);
        let r = is_admissible(&a2, ns(&[1])).unwrap();
        assert!(!r.admissible);
        assert_eq!(r.violations[0].sigma_prime, ns(&[1, 2]));
        assert_eq!(r.violations[0].witness, vec![1, 2, 1]);
        let b2 = finite(CartanType::B, 2);
        assert!(is_admissible(&b2, ns(&[1])).unwrap().admissible);
    }

    #[test]
    fn relative_b2() {
        let b2 = finite(CartanType::B, 2);
        let rel = RelativeCoxeterSystem::new(b2.clone(), ns(&[1])).unwrap();
        assert_eq!(rel.simples().len(), 1);
        let st = &rel.simples()[0];
        let w0 = longest_element(&b2, ns(&[1, 2])).unwrap();
        assert_eq!(st.element, w0.mul(b2.generator(1).unwrap()));
        assert_eq!(st.length, 3);
        assert_eq!(rel.relative_length(&st.element).unwrap(), 1);
        assert_eq!(rel.ball(5).unwrap().len(), 2);
        assert!(rel.diagnostic().is_none());
    }

    #[test]
    fn relative_empty_sigma() {
        let a1 = affine(CartanType::A, 1);
        let rel = RelativeCoxeterSystem::new(a1.clone(), NodeSet::EMPTY).unwrap();
        assert_eq!(rel.sigma_complement(), ns(&[0, 1]));
        assert_eq!(rel.coxeter_matrix()[0][1], CoxeterOrder::Infinite);
        for st in rel.simples() {
            assert_eq!(&st.element, a1.generator(st.node).unwrap());
        }
    }

    #[test]
    fn relative_affine_a3() {
        let a3 = affine(CartanType::A, 3);
        let rel = RelativeCoxeterSystem::new(a3, ns(&[1, 3])).unwrap();
        assert_eq!(rel.sigma_complement(), ns(&[0, 2]));
        for st in rel.simples() {
            assert_eq!(st.length, 4);
        }
        assert_eq!(rel.coxeter_matrix()[0][1], CoxeterOrder::Infinite);
    }

    #[test]
    fn not_admissible_error() {
        let a2 = finite(CartanType::A, 2);
        assert!(matches!(RelativeCoxeterSystem::new(a2, ns(&[1])), Err(Error::NotAdmissible(_))));
    }

    #[test]
    fn relative_length_rejects_outsiders() {
        let b2 = finite(CartanType::B, 2);
        let rel = RelativeCoxeterSystem::new(b2.clone(), ns(&[1])).unwrap();
        let s2 = b2.generator(2).unwrap();
        assert!(matches!(rel.relative_length(s2), Err(Error::NotInRelativeGroup(_))));
    }

    #[test]
    fn lien_examples() {
        let b2 = finite(CartanType::B, 2);
        assert!(lien_decompose(&b2, &b2.identity(), ns(&[1]), ns(&[1])).unwrap().is_empty());
        let rel = RelativeCoxeterSystem::new(b2.clone(), ns(&[1])).unwrap();
        let y = rel.simples()[0].element.clone();
        let moves = lien_decompose(&b2, &y, ns(&[1]), ns(&[1])).unwrap();
        assert_eq!(moves.len(), 1);
        assert_eq!(moves[0].from, ns(&[1]));
        assert_eq!(moves[0].to, ns(&[1]));
        assert_eq!(b2.length(&moves[0].element), 3);

        let a2 = affine(CartanType::A, 2);
        let found = normalizer_pairs(&a2, ns(&[1]), ns(&[2]), 8).unwrap();
        let y = found.iter().min_by_key(|g| a2.length(g)).unwrap();
        let moves = lien_decompose(&a2, y, ns(&[1]), ns(&[2])).unwrap();
        let total: usize = moves.iter().map(|m| a2.length(&m.element)).sum();
        assert_eq!(total, a2.length(y));
        let prod = moves.iter().fold(a2.identity(), |acc, m| m.element.mul(&acc));
        assert_eq!(&prod, y);
        assert_eq!(moves.first().unwrap().from, ns(&[1]));
        assert_eq!(moves.last().unwrap().to, ns(&[2]));
        for m in &moves {
            let w = longest_element(&a2, m.from.with(m.node)).unwrap().mul(&longest_element(&a2, m.from).unwrap());
            assert_eq!(w, m.element);
            assert!(in_normalizer_set(&a2, &m.element, m.from, m.to));
        }
        assert!(matches!(
            lien_decompose(&a2, a2.generator(0).unwrap(), ns(&[1]), ns(&[2])),
            Err(Error::NotANormalizerElement(_))
        ));
    }
}
