//! The extended affine Weyl group `P∨ ⋊ W_R` and its Coxeter combinatorics.
//!
//! An element `X^μ w` is stored as the translation `μ` (coweight coordinates)
//! together with the integer matrix of `w` on the simple-root basis of V*
//! (column `k` is `w(α_k)`). It acts on 𝔼 by `x ↦ w x + μ` and on affine
//! functions by `(β, n) ↦ (wβ, n − ⟨wβ, μ⟩)`.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, rat, Rational};
use crate::root_system::{is_positive_vector, AffineFunction, AffineRoot, AffineRootSystem, FiniteRootSystem};

/// Default guard on ball enumeration.
pub const DEFAULT_BALL_CAP: usize = 1_000_000;

/// A subset of the nodes `0..=8` of the affine Dynkin diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct NodeSet(u16);

impl NodeSet {
    pub const EMPTY: NodeSet = NodeSet(0);

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn from_bits(bits: u16) -> Self {
        NodeSet(bits)
    }

    pub fn single(i: usize) -> Self {
        NodeSet(1 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        i < 16 && self.0 & (1 << i) != 0
    }

    pub fn with(self, i: usize) -> Self {
        NodeSet(self.0 | (1 << i))
    }

    pub fn without(self, i: usize) -> Self {
        NodeSet(self.0 & !(1 << i))
    }

    pub fn union(self, o: Self) -> Self {
        NodeSet(self.0 | o.0)
    }

    pub fn minus(self, o: Self) -> Self {
        NodeSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..16).filter(move |&i| self.contains(i))
    }

    /// Parses `"1,3"`, `"{1,3}"` or the empty string.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('{').trim_end_matches('}');
        let mut out = NodeSet::EMPTY;
        for part in t.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let p = part.trim_start_matches('s');
            let i: usize = p.parse().map_err(|_| Error::Parse(format!("bad node index {part:?}")))?;
            if i > 8 {
                return Err(Error::UnknownNode(i));
            }
            out = out.with(i);
        }
        Ok(out)
    }
}

impl FromIterator<usize> for NodeSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        iter.into_iter().fold(NodeSet::EMPTY, NodeSet::with)
    }
}

impl fmt::Display for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl Serialize for NodeSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for NodeSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<usize> = Vec::deserialize(d)?;
        if let Some(&bad) = v.iter().find(|&&i| i > 8) {
            return Err(serde::de::Error::custom(format!("node index {bad} out of range")));
        }
        Ok(v.into_iter().collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    mu: Vec<i64>,
    w: Vec<Vec<i64>>,
    w_inv: Vec<Vec<i64>>,
}

fn int_identity(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

fn int_mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

impl Element {
    pub fn identity(rank: usize) -> Self {
        Self { mu: vec![0; rank], w: int_identity(rank), w_inv: int_identity(rank) }
    }

    pub fn translation(mu: Vec<i64>) -> Self {
        let n = mu.len();
        Self { mu, w: int_identity(n), w_inv: int_identity(n) }
    }

    /// The reflection in the zero set of the affine root `(α, n)`: `X^{−nα∨} s_α`.
    pub fn reflection(sys: &FiniteRootSystem, a: &AffineRoot) -> Self {
        let alpha = &a.direction;
        let cor = sys.coroot_of(alpha);
        let n = sys.rank();
        // s_α(β) = β − ⟨α∨, β⟩ α; column k is s_α(e_k)
        let w: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|k| i64::from(i == k) - cor[k] * alpha[i]).collect())
            .collect();
        Self { mu: cor.iter().map(|c| -a.level * c).collect(), w_inv: w.clone(), w }
    }

    pub fn rank(&self) -> usize {
        self.mu.len()
    }

    pub fn translation_part(&self) -> &[i64] {
        &self.mu
    }

    /// Matrix of the finite part on the simple-root basis of V*.
    pub fn finite_matrix(&self) -> &[Vec<i64>] {
        &self.w
    }

    pub fn finite_part(&self) -> Self {
        Self { mu: vec![0; self.rank()], w: self.w.clone(), w_inv: self.w_inv.clone() }
    }

    pub fn is_identity(&self) -> bool {
        self.mu.iter().all(|&x| x == 0) && self.w == int_identity(self.rank())
    }

    pub fn apply_root(&self, b: &[i64]) -> Vec<i64> {
        self.w.iter().map(|row| row.iter().zip(b).map(|(x, y)| x * y).sum()).collect()
    }

    /// Linear part acting on V: the inverse transpose of the V* matrix.
    pub fn apply_coweight(&self, v: &[i64]) -> Vec<i64> {
        let n = self.rank();
        (0..n).map(|j| (0..n).map(|i| self.w_inv[i][j] * v[i]).sum()).collect()
    }

    pub fn apply_linear(&self, v: &[Rational]) -> Vec<Rational> {
        let n = self.rank();
        (0..n)
            .map(|j| (0..n).fold(rational::zero(), |acc, i| acc + &v[i] * rat(self.w_inv[i][j])))
            .collect()
    }

    pub fn mul(&self, o: &Self) -> Self {
        let shift = self.apply_coweight(&o.mu);
        Self {
            mu: self.mu.iter().zip(shift).map(|(a, b)| a + b).collect(),
            w: int_mat_mul(&self.w, &o.w),
            w_inv: int_mat_mul(&o.w_inv, &self.w_inv),
        }
    }

    pub fn inverse(&self) -> Self {
        let n = self.rank();
        // w_V^{-1} = wᵀ on V
        let mu = (0..n).map(|j| -(0..n).map(|i| self.w[i][j] * self.mu[i]).sum::<i64>()).collect();
        Self { mu, w: self.w_inv.clone(), w_inv: self.w.clone() }
    }

    pub fn conjugate(&self, h: &Self) -> Self {
        self.mul(h).mul(&self.inverse())
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::identity(self.rank()), |acc, _| acc.mul(self))
    }

    pub fn act_on_affine_root(&self, a: &AffineRoot) -> AffineRoot {
        let beta = self.apply_root(&a.direction);
        let k: i64 = beta.iter().zip(&self.mu).map(|(x, y)| x * y).sum();
        AffineRoot::new_unchecked(beta, a.level - k)
    }

    pub fn act_on_point(&self, x: &[Rational]) -> Vec<Rational> {
        self.apply_linear(x)
            .into_iter()
            .zip(&self.mu)
            .map(|(v, &m)| v + rat(m))
            .collect()
    }

    /// `(g·f)(x) = f(g⁻¹x)`.
    pub fn act_on_function(&self, f: &AffineFunction) -> AffineFunction {
        let n = self.rank();
        let grad: Vec<Rational> = (0..n)
            .map(|i| (0..n).fold(rational::zero(), |acc, k| acc + rat(self.w[i][k]) * &f.gradient[k]))
            .collect();
        let shift = rational::dot_int(&self.mu, &grad);
        AffineFunction::new(grad, &f.constant - shift)
    }

    pub fn to_json(&self) -> ElementJson {
        let s = |x: &i64| x.to_string();
        ElementJson {
            mu: self.mu.iter().map(s).collect(),
            w: self.w.iter().map(|r| r.iter().map(s).collect()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub mu: Vec<String>,
    pub w: Vec<Vec<String>>,
}

/// A reflection of the affine Weyl group, keyed by the affine root whose
/// direction is positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Reflection {
    pub root: AffineRoot,
}

impl Reflection {
    pub fn from_root(a: &AffineRoot) -> Self {
        if is_positive_vector(&a.direction) {
            Self { root: a.clone() }
        } else {
            Self { root: a.neg() }
        }
    }
}

impl fmt::Display for Reflection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.root)
    }
}

/// `letters` read left to right followed by the length-zero element `pi`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducedWord {
    pub letters: Vec<usize>,
    pub pi: Element,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Classes `g W_Σ`.
    Right,
    /// Classes `W_Σ g`.
    Left,
}

/// The affine Weyl group of an affine root system, or the finite Weyl group
/// generated by nodes `1..=n` only.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    aff: AffineRootSystem,
    affine: bool,
    gens: Vec<Element>,
    ball_cap: usize,
}

fn count_levels(lo: i64, hi: i64, odd_only: bool) -> usize {
    if hi < lo {
        return 0;
    }
    if odd_only {
        let odd_upto = |x: i64| (x + 1).div_euclid(2);
        (odd_upto(hi) - odd_upto(lo - 1)) as usize
    } else {
        (hi - lo + 1) as usize
    }
}

impl WeylGroup {
    pub fn affine(aff: AffineRootSystem) -> Self {
        Self::build(aff, true)
    }

    pub fn finite(sys: FiniteRootSystem) -> Result<Self> {
        Ok(Self::build(AffineRootSystem::affinize(sys)?, false))
    }

    fn build(aff: AffineRootSystem, affine: bool) -> Self {
        let gens = aff.simples().iter().map(|a| Element::reflection(aff.finite(), a)).collect();
        Self { aff, affine, gens, ball_cap: DEFAULT_BALL_CAP }
    }

    pub fn with_ball_cap(mut self, cap: usize) -> Self {
        self.ball_cap = cap;
        self
    }

    pub fn ball_cap(&self) -> usize {
        self.ball_cap
    }

    pub fn is_affine(&self) -> bool {
        self.affine
    }

    pub fn root_system(&self) -> &AffineRootSystem {
        &self.aff
    }

    pub fn finite_system(&self) -> &FiniteRootSystem {
        self.aff.finite()
    }

    pub fn rank(&self) -> usize {
        self.aff.rank()
    }

    pub fn label(&self) -> String {
        if self.affine {
            format!("affine {}", self.aff.finite().label())
        } else {
            self.aff.finite().label()
        }
    }

    pub fn nodes(&self) -> NodeSet {
        let first = usize::from(!self.affine);
        (first..=self.rank()).collect()
    }

    pub fn check_nodes(&self, set: NodeSet) -> Result<()> {
        match set.minus(self.nodes()).iter().next() {
            Some(i) => Err(Error::UnknownNode(i)),
            None => Ok(()),
        }
    }

    pub fn identity(&self) -> Element {
        Element::identity(self.rank())
    }

    pub fn simple_root(&self, i: usize) -> &AffineRoot {
        self.aff.simple(i)
    }

    pub fn generator(&self, i: usize) -> Result<&Element> {
        if !self.nodes().contains(i) {
            return Err(Error::UnknownNode(i));
        }
        Ok(&self.gens[i])
    }

    pub(crate) fn gen(&self, i: usize) -> &Element {
        &self.gens[i]
    }

    pub fn translation(&self, mu: Vec<i64>) -> Result<Element> {
        if mu.len() != self.rank() {
            return Err(Error::Dimension { expected: self.rank(), found: mu.len() });
        }
        Ok(Element::translation(mu))
    }

    pub fn evaluate_word(&self, letters: &[usize]) -> Result<Element> {
        letters
            .iter()
            .try_fold(self.identity(), |acc, &i| Ok(acc.mul(self.generator(i)?)))
    }

    /// Whether `a` is in `S⁻`. Inputs are assumed to lie in `S`.
    pub fn is_negative(&self, a: &AffineRoot) -> bool {
        !a.is_positive()
    }

    pub fn length(&self, g: &Element) -> usize {
        self.inversion_count(g)
    }

    /// `#{a ∈ S⁺ : g·a ∈ S⁻}` in closed form: for fixed direction the
    /// inverted levels form an interval.
    fn inversion_count(&self, g: &Element) -> usize {
        let fin = self.aff.finite();
        fin.roots()
            .iter()
            .map(|alpha| {
                let (lo, hi) = self.inverted_level_range(g, alpha);
                count_levels(lo, hi, fin.in_twice_root_lattice(alpha))
            })
            .sum()
    }

    fn inverted_level_range(&self, g: &Element, alpha: &[i64]) -> (i64, i64) {
        let beta = g.apply_root(alpha);
        let k: i64 = beta.iter().zip(g.translation_part()).map(|(x, y)| x * y).sum();
        let lo = if is_positive_vector(alpha) { 0 } else { 1 };
        let hi = if is_positive_vector(&beta) { k - 1 } else { k };
        (lo, hi)
    }

    /// The positive affine roots sent to `S⁻` by `g`, sorted.
    pub fn inversions(&self, g: &Element) -> Vec<AffineRoot> {
        let fin = self.aff.finite();
        let mut out = Vec::new();
        for alpha in fin.roots() {
            let (lo, hi) = self.inverted_level_range(g, alpha);
            let odd = fin.in_twice_root_lattice(alpha);
            for n in lo..=hi {
                if !odd || n.rem_euclid(2) == 1 {
                    out.push(AffineRoot::new_unchecked(alpha.clone(), n));
                }
            }
        }
        out.sort();
        out
    }

    pub fn is_left_descent(&self, g: &Element, i: usize) -> bool {
        let a = g.inverse().act_on_affine_root(self.aff.simple(i));
        self.is_negative(&a)
    }

    pub fn is_right_descent(&self, g: &Element, i: usize) -> bool {
        let a = g.act_on_affine_root(self.aff.simple(i));
        self.is_negative(&a)
    }

    pub fn left_descents(&self, g: &Element) -> NodeSet {
        let inv = g.inverse();
        self.nodes()
            .iter()
            .filter(|&i| self.is_negative(&inv.act_on_affine_root(self.aff.simple(i))))
            .collect()
    }

    pub fn right_descents(&self, g: &Element) -> NodeSet {
        self.nodes()
            .iter()
            .filter(|&i| self.is_negative(&g.act_on_affine_root(self.aff.simple(i))))
            .collect()
    }

    /// Greedy left-descent reduction with the lowest node first.
    pub fn reduced_word(&self, g: &Element) -> ReducedWord {
        let mut letters = Vec::new();
        let mut cur = g.clone();
        while let Some(i) = self.left_descents(&cur).iter().next() {
            cur = self.gens[i].mul(&cur);
            letters.push(i);
        }
        ReducedWord { letters, pi: cur }
    }

    /// The length-zero component `π` with `g ∈ W π`.
    pub fn component(&self, g: &Element) -> Element {
        self.reduced_word(g).pi
    }

    /// Whether `g` lies in the group generated by the simple reflections.
    pub fn in_coxeter_group(&self, g: &Element) -> bool {
        self.component(g).is_identity()
    }

    pub fn reflection(&self, a: &AffineRoot) -> Result<Element> {
        if !self.aff.contains(&a.direction, a.level) {
            return Err(Error::NotAReflection(format!("{a} is not an affine root")));
        }
        if !self.affine && a.level != 0 {
            return Err(Error::NotAReflection(format!("{a} is not a reflection of the finite group")));
        }
        Ok(Element::reflection(self.aff.finite(), a))
    }

    /// Recovers the reflection represented by a group element, if any.
    pub fn as_reflection(&self, t: &Element) -> Result<Reflection> {
        if !t.mul(t).is_identity() || t.is_identity() {
            return Err(Error::NotAReflection("element is not an involution".into()));
        }
        let fin = self.aff.finite();
        for alpha in fin.positive_roots() {
            if t.apply_root(alpha).iter().zip(alpha).any(|(x, y)| *x != -y) {
                continue;
            }
            let cor = fin.coroot_of(alpha);
            // t = X^{-nα∨} s_α
            let Some(idx) = cor.iter().position(|&c| c != 0) else { continue };
            if t.translation_part()[idx] % cor[idx] != 0 {
                continue;
            }
            let n = -t.translation_part()[idx] / cor[idx];
            let a = AffineRoot::new_unchecked(alpha.clone(), n);
            if self.aff.contains(&a.direction, a.level) && Element::reflection(fin, &a) == *t {
                return Ok(Reflection::from_root(&a));
            }
        }
        Err(Error::NotAReflection("involution is not a reflection".into()))
    }

    /// `T(g) = {s_a : a ∈ S⁺, g⁻¹a ∈ S⁻}`, the reflections shortening `g` on the left.
    pub fn reflections_t(&self, g: &Element) -> BTreeSet<Reflection> {
        self.inversions(&g.inverse()).iter().map(Reflection::from_root).collect()
    }

    pub fn eta(&self, g: &Element, t: &Reflection) -> Result<i8> {
        if !self.aff.contains(&t.root.direction, t.root.level) {
            return Err(Error::NotAReflection(format!("{}", t.root)));
        }
        let inv = g.inverse().act_on_affine_root(&t.root);
        // t ∈ T(g) iff the positive one of ±a is sent to S⁻ by g⁻¹
        let pos_sent_negative = if t.root.is_positive() { !inv.is_positive() } else { inv.is_positive() };
        Ok(if pos_sent_negative { -1 } else { 1 })
    }

    /// `η` computed from a word: `(−1)^{#{j : w_1⋯w_{j−1} w_j w_{j−1}⋯w_1 = t}}`.
    pub fn eta_from_word(&self, letters: &[usize], t: &Reflection) -> Result<i8> {
        let mut prefix = self.identity();
        let mut sign = 1i8;
        for &i in letters {
            let a = prefix.act_on_affine_root(self.aff.simple(i));
            if Reflection::from_root(&a) == *t {
                sign = -sign;
            }
            prefix = prefix.mul(self.generator(i)?);
        }
        Ok(sign)
    }

    /// Bruhat order by the descent recursion.
    pub fn bruhat_leq(&self, x: &Element, y: &Element) -> Result<bool> {
        if self.component(x) != self.component(y) {
            return Err(Error::DifferentComponents);
        }
        let mut x = x.clone();
        let mut y = y.clone();
        loop {
            let Some(s) = self.left_descents(&y).iter().next() else {
                return Ok(x == y);
            };
            if self.is_left_descent(&x, s) {
                x = self.gens[s].mul(&x);
            }
            y = self.gens[s].mul(&y);
        }
    }

    pub fn min_coset_rep(&self, g: &Element, sigma: NodeSet, side: Side) -> Element {
        let mut cur = g.clone();
        loop {
            let d = match side {
                Side::Right => self.right_descents(&cur),
                Side::Left => self.left_descents(&cur),
            };
            let Some(s) = d.iter().find(|&s| sigma.contains(s)) else {
                return cur;
            };
            cur = match side {
                Side::Right => cur.mul(&self.gens[s]),
                Side::Left => self.gens[s].mul(&cur),
            };
        }
    }

    /// The minimal element of `W_I g W_J`.
    pub fn double_coset_min_rep(&self, g: &Element, i: NodeSet, j: NodeSet) -> Element {
        let mut cur = g.clone();
        loop {
            let next = self.min_coset_rep(&self.min_coset_rep(&cur, i, Side::Left), j, Side::Right);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn in_parabolic(&self, g: &Element, sigma: NodeSet) -> bool {
        self.min_coset_rep(g, sigma, Side::Left).is_identity()
    }

    /// All elements of the Coxeter group of length at most `radius`, sorted by
    /// length and then by reduced word.
    pub fn enumerate_ball(&self, radius: usize) -> Result<Vec<Element>> {
        self.enumerate_ball_in(radius, self.nodes())
    }

    /// Ball of the standard parabolic subgroup generated by `gens`.
    pub fn enumerate_ball_in(&self, radius: usize, gens: NodeSet) -> Result<Vec<Element>> {
        let mut seen: HashSet<Element> = HashSet::new();
        let mut layer = vec![self.identity()];
        seen.insert(self.identity());
        let mut out = layer.clone();
        for _ in 0..radius {
            let mut next = Vec::new();
            for g in &layer {
                for s in gens.iter() {
                    if self.is_left_descent(g, s) {
                        continue;
                    }
                    let h = self.gens[s].mul(g);
                    if seen.insert(h.clone()) {
                        next.push(h);
                    }
                }
            }
            if seen.len() > self.ball_cap {
                return Err(Error::BallTooLarge { cap: self.ball_cap });
            }
            if next.is_empty() {
                break;
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        let mut keyed: Vec<(usize, Vec<usize>, Element)> = out
            .into_iter()
            .map(|g| {
                let w = self.reduced_word(&g).letters;
                (w.len(), w, g)
            })
            .collect();
        keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        Ok(keyed.into_iter().map(|(_, _, g)| g).collect())
    }

    /// Length-zero elements of the extended group, one per component.
    pub fn length_zero_elements(&self) -> Vec<Element> {
        let mut out: BTreeMap<Element, ()> = BTreeMap::new();
        out.insert(self.identity(), ());
        if self.affine {
            for i in 0..self.rank() {
                let mut mu = vec![0; self.rank()];
                mu[i] = 1;
                let pi = self.component(&Element::translation(mu));
                out.insert(pi, ());
            }
            // close under products; the group P∨/Q∨ is tiny
            loop {
                let cur: Vec<Element> = out.keys().cloned().collect();
                let before = out.len();
                for a in &cur {
                    for b in &cur {
                        out.insert(a.mul(b), ());
                    }
                }
                if out.len() == before {
                    break;
                }
            }
        }
        out.into_keys().collect()
    }

    /// Node permutation induced by a length-zero element.
    pub fn node_permutation(&self, pi: &Element) -> Option<Vec<usize>> {
        let simples = self.aff.simples();
        simples
            .iter()
            .map(|a| {
                let b = pi.act_on_affine_root(a);
                simples.iter().position(|c| *c == b)
            })
            .collect()
    }

    pub fn random_element<R: Rng>(&self, rng: &mut R, max_letters: usize) -> Element {
        let nodes: Vec<usize> = self.nodes().iter().collect();
        let k = rng.gen_range(0..=max_letters);
        (0..k).fold(self.identity(), |acc, _| acc.mul(&self.gens[nodes[rng.gen_range(0..nodes.len())]]))
    }

    pub fn format_word(&self, g: &Element) -> String {
        let w = self.reduced_word(g);
        let mut parts: Vec<String> = w.letters.iter().map(|i| format!("s{i}")).collect();
        if !w.pi.is_identity() {
            parts.push(format!("pi{:?}", w.pi.translation_part()));
        }
        if parts.is_empty() {
            "e".to_string()
        } else {
            parts.join("*")
        }
    }

    pub fn element_from_json(&self, j: &ElementJson) -> Result<Element> {
        let parse = |s: &String| -> Result<i64> {
            let q = rational::parse_rational(s)?;
            rational::to_i64(&q).ok_or_else(|| Error::Parse(format!("non-integral entry {s}")))
        };
        let n = self.rank();
        let mu: Vec<i64> = j.mu.iter().map(parse).collect::<Result<_>>()?;
        let w: Vec<Vec<i64>> = j.w.iter().map(|r| r.iter().map(parse).collect::<Result<_>>()).collect::<Result<_>>()?;
        if mu.len() != n || w.len() != n || w.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension { expected: n, found: mu.len() });
        }
        let fin = self.aff.finite();
        let cols: Vec<Vec<i64>> = (0..n).map(|k| w.iter().map(|r| r[k]).collect()).collect();
        if cols.iter().any(|c| !fin.is_root(c)) {
            return Err(Error::Parse("matrix does not map simple roots to roots".into()));
        }
        // rebuild w from a reduced word of the candidate to obtain w_inv
        let mut cur_cols = cols;
        let mut word = Vec::new();
        loop {
            let Some(i) = (0..n).find(|&i| !is_positive_vector(&cur_cols[i])) else { break };
            if word.len() > fin.roots().len() {
                return Err(Error::Parse("matrix is not a Weyl group element".into()));
            }
            // right-multiply by s_{i+1}: column k becomes col_k − ⟨α_{i+1}∨, α_{k+1}⟩ col_i
            let ci = cur_cols[i].clone();
            cur_cols = (0..n)
                .map(|k| {
                    let a = fin.cartan()[i][k];
                    cur_cols[k].iter().zip(&ci).map(|(x, y)| x - a * y).collect()
                })
                .collect();
            word.push(i + 1);
        }
        if cur_cols != int_identity(n) {
            return Err(Error::Parse("matrix is not a Weyl group element".into()));
        }
        let mut fin_el = self.identity();
        for &i in word.iter().rev() {
            fin_el = fin_el.mul(&self.gens[i]);
        }
        if fin_el.w != w {
            return Err(Error::Parse("matrix is not a Weyl group element".into()));
        }
        Ok(Element::translation(mu).mul(&fin_el))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::CartanType;

    fn affine(t: CartanType, n: usize) -> WeylGroup {
        WeylGroup::affine(AffineRootSystem::affinize(FiniteRootSystem::build(t, n).unwrap()).unwrap())
    }

    fn finite(t: CartanType, n: usize) -> WeylGroup {
        WeylGroup::finite(FiniteRootSystem::build(t, n).unwrap()).unwrap()
    }

    #[test]
    fn action_examples() {
        let a1 = affine(CartanType::A, 1);
        let e = a1.identity();
        let alpha0 = AffineRoot::new_unchecked(vec![1], 0);
        assert_eq!(e.act_on_affine_root(&alpha0), alpha0);
        let x = a1.translation(vec![2]).unwrap();
        assert_eq!(x.act_on_affine_root(&alpha0), AffineRoot::new_unchecked(vec![1], -2));
        let s0 = a1.generator(0).unwrap();
        assert_eq!(s0.act_on_affine_root(&alpha0), AffineRoot::new_unchecked(vec![-1], 2));
    }

    #[test]
    fn length_examples() {
        let a1 = affine(CartanType::A, 1);
        assert_eq!(a1.length(&a1.identity()), 0);
        let s0s1 = a1.evaluate_word(&[0, 1]).unwrap();
        assert_eq!(a1.length(&s0s1), 2);
        let b2 = finite(CartanType::B, 2);
        let ball = b2.enumerate_ball(10).unwrap();
        assert_eq!(ball.len(), 8);
        assert_eq!(ball.iter().map(|g| b2.length(g)).max(), Some(4));
    }

    #[test]
    fn reduced_word_examples() {
        let a2 = finite(CartanType::A, 2);
        let w0 = a2.evaluate_word(&[2, 1, 2]).unwrap();
        assert_eq!(a2.reduced_word(&w0).letters, vec![1, 2, 1]);
        assert!(a2.reduced_word(&a2.identity()).letters.is_empty());
        let a1 = affine(CartanType::A, 1);
        let t = a1.translation(vec![2]).unwrap();
        let w = a1.reduced_word(&t);
        assert_eq!(w.letters.len(), 2);
        assert!(w.pi.is_identity());
        assert_eq!(a1.evaluate_word(&w.letters).unwrap(), t);
    }

    #[test]
    fn extended_components() {
        let a1 = affine(CartanType::A, 1);
        let pis = a1.length_zero_elements();
        assert_eq!(pis.len(), 2);
        let pi = a1.component(&a1.translation(vec![1]).unwrap());
        assert!(!pi.is_identity());
        assert_eq!(a1.length(&pi), 0);
        assert_eq!(a1.node_permutation(&pi), Some(vec![1, 0]));
        assert_eq!(a1.bruhat_leq(&pi, &a1.identity()), Err(Error::DifferentComponents));
    }

    #[test]
    fn reflection_sets() {
        let a2 = finite(CartanType::A, 2);
        assert!(a2.reflections_t(&a2.identity()).is_empty());
        let s1 = a2.generator(1).unwrap();
        let t = a2.reflections_t(s1);
        assert_eq!(t.len(), 1);
        assert_eq!(a2.as_reflection(s1).unwrap(), *t.iter().next().unwrap());
        let w0 = a2.evaluate_word(&[1, 2, 1]).unwrap();
        assert_eq!(a2.reflections_t(&w0).len(), 3);
    }

    #[test]
    fn bruhat_examples() {
        let a2 = finite(CartanType::A, 2);
        let s1 = a2.evaluate_word(&[1]).unwrap();
        let s2 = a2.evaluate_word(&[2]).unwrap();
        let s1s2 = a2.evaluate_word(&[1, 2]).unwrap();
        assert!(a2.bruhat_leq(&s1, &s1s2).unwrap());
        assert!(!a2.bruhat_leq(&s2, &s1).unwrap());
        for y in a2.enumerate_ball(3).unwrap() {
            assert!(a2.bruhat_leq(&a2.identity(), &y).unwrap());
        }
    }

    #[test]
    fn coset_examples() {
        let a2 = finite(CartanType::A, 2);
        let s2s1 = a2.evaluate_word(&[2, 1]).unwrap();
        let sig = NodeSet::single(1);
        assert_eq!(a2.min_coset_rep(&s2s1, sig, Side::Right), a2.evaluate_word(&[2]).unwrap());
        assert!(a2.min_coset_rep(a2.generator(1).unwrap(), sig, Side::Right).is_identity());
        let aa2 = affine(CartanType::A, 2);
        let x = aa2.translation(aa2.finite_system().coroot_of(&[1, 0])).unwrap();
        let r = aa2.min_coset_rep(&x, sig, Side::Right);
        assert_eq!(aa2.length(&r) + 1, aa2.length(&x));
    }

    #[test]
    fn ball_sizes() {
        let a1 = affine(CartanType::A, 1);
        for l in 0..6 {
            assert_eq!(a1.enumerate_ball(l).unwrap().len(), 2 * l + 1);
        }
        assert_eq!(finite(CartanType::A, 2).enumerate_ball(3).unwrap().len(), 6);
        let capped = affine(CartanType::A, 2).with_ball_cap(10);
        assert_eq!(capped.enumerate_ball(5), Err(Error::BallTooLarge { cap: 10 }));
    }

    #[test]
    fn node_set_parse() {
        assert_eq!(NodeSet::parse("1,3").unwrap(), [1, 3].into_iter().collect());
        assert_eq!(NodeSet::parse("{s1, s2}").unwrap().to_string(), "{1,2}");
        assert!(NodeSet::parse("").unwrap().is_empty());
        assert!(NodeSet::parse("9").is_err());
    }

    #[test]
    fn json_round_trip() {
        let b2 = affine(CartanType::B, 2);
        let g = b2.evaluate_word(&[0, 1, 2, 1, 0]).unwrap();
        let j = g.to_json();
        assert_eq!(b2.element_from_json(&j).unwrap(), g);
        let mut bad = j.clone();
        bad.w[0][0] = "3".into();
        assert!(b2.element_from_json(&bad).is_err());
    }
}
