//! ℤ/m-graded root combinatorics: gradings from a lifting `θ̃`, spirals from
//! rational cocharacters, and the graded pseudo-Levi attached to a relevant
//! subspace.

use std::collections::BTreeMap;
use std::sync::{Arc, RwLock};

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::complex::{facets_in_ball, AffineSubspace, Facet};
use crate::error::{Error, Result};
use crate::rational::{self, rat, zero, Rational};
use crate::root_system::{AffineFunction, FiniteRootSystem};
use crate::weyl::{Element, WeylGroup};

#[derive(Debug, Clone)]
pub struct GradedRootDatum {
    system: FiniteRootSystem,
    theta: Vec<Rational>,
    theta_pairings: Vec<i64>,
    m: i64,
    d: i64,
}

impl GradedRootDatum {
    /// `theta` in fundamental-coweight coordinates; it must pair integrally with every root.
    pub fn new(system: FiniteRootSystem, theta: Vec<Rational>, m: i64, d: i64) -> Result<Self> {
        if m <= 0 {
            return Err(Error::InvalidParameters(format!("m must be positive, got {m}")));
        }
        if d == 0 {
            return Err(Error::InvalidParameters("d must be nonzero".into()));
        }
        if theta.len() != system.rank() {
            return Err(Error::Dimension { expected: system.rank(), found: theta.len() });
        }
        let mut theta_pairings = Vec::with_capacity(system.roots().len());
        for a in system.roots() {
            let p = rational::dot_int(a, &theta);
            match rational::to_i64(&p) {
                Some(v) if p.is_integer() => theta_pairings.push(v),
                _ => {
                    return Err(Error::InvalidParameters(format!(
                        "theta pairs non-integrally with root {a:?}"
                    )))
                }
            }
        }
        Ok(Self { system, theta, theta_pairings, m, d })
    }

    pub fn system(&self) -> &FiniteRootSystem {
        &self.system
    }

    pub fn theta(&self) -> &[Rational] {
        &self.theta
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn epsilon(&self) -> i64 {
        self.d.signum()
    }

    /// The grading point `θ̃/m`.
    pub fn grading_point(&self) -> Vec<Rational> {
        self.theta.iter().map(|t| t / rat(self.m)).collect()
    }

    /// `⟨α, θ̃⟩` for the root with the given index.
    pub fn theta_pairing(&self, root: usize) -> i64 {
        self.theta_pairings[root]
    }

    pub fn grading_degree(&self, alpha: &[i64]) -> Result<i64> {
        let i = self
            .system
            .root_index(alpha)
            .ok_or_else(|| Error::InvalidRootData(format!("{alpha:?} is not a root")))?;
        Ok(self.theta_pairings[i].rem_euclid(self.m))
    }

    /// `ε(θ̃ − m y)`.
    pub fn cochar_at(&self, y: &[Rational]) -> Vec<Rational> {
        let e = rat(self.epsilon());
        self.theta.iter().zip(y).map(|(t, yi)| &e * (t - rat(self.m) * yi)).collect()
    }
}

/// A root space or the Cartan subalgebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Member {
    Cartan,
    Root(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Piece {
    P,
    L,
    U,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedPiece {
    pub p: Vec<Member>,
    pub l: Vec<Member>,
    pub u: Vec<Member>,
}

#[derive(Debug)]
pub struct Spiral {
    datum: GradedRootDatum,
    lambda: Vec<Rational>,
    epsilon: i64,
    pairings: Vec<Rational>,
    memo: RwLock<BTreeMap<i64, Arc<GradedPiece>>>,
}

impl Clone for Spiral {
    fn clone(&self) -> Self {
        Self::from_cochar(&self.datum, self.lambda.clone(), self.epsilon)
    }
}

impl Spiral {
    pub fn from_cochar(datum: &GradedRootDatum, lambda: Vec<Rational>, epsilon: i64) -> Self {
        let pairings = datum.system.roots().iter().map(|a| rational::dot_int(a, &lambda)).collect();
        Self { datum: datum.clone(), lambda, epsilon: epsilon.signum(), pairings, memo: RwLock::default() }
    }

    pub fn lambda(&self) -> &[Rational] {
        &self.lambda
    }

    pub fn epsilon(&self) -> i64 {
        self.epsilon
    }

    pub fn datum(&self) -> &GradedRootDatum {
        &self.datum
    }

    fn pairing(&self, x: Member) -> Rational {
        match x {
            Member::Cartan => zero(),
            Member::Root(i) => self.pairings[i].clone(),
        }
    }

    fn degree_matches(&self, x: Member, n: i64) -> bool {
        let t = match x {
            Member::Cartan => 0,
            Member::Root(i) => self.datum.theta_pairings[i],
        };
        (t - n).rem_euclid(self.datum.m) == 0
    }

    pub fn contains(&self, piece: Piece, x: Member, n: i64) -> bool {
        if !self.degree_matches(x, n) {
            return false;
        }
        let lhs = self.pairing(x);
        let rhs = rat(self.epsilon * n);
        match piece {
            Piece::P => lhs >= rhs,
            Piece::L => lhs == rhs,
            Piece::U => lhs > rhs,
        }
    }

    fn members(&self) -> impl Iterator<Item = Member> {
        std::iter::once(Member::Cartan).chain((0..self.pairings.len()).map(Member::Root))
    }

    pub fn degree(&self, n: i64) -> Arc<GradedPiece> {
        if let Some(g) = self.memo.read().expect("memo lock").get(&n) {
            return g.clone();
        }
        let mut g = GradedPiece::default();
        for x in self.members() {
            if self.contains(Piece::P, x, n) {
                g.p.push(x);
            }
            if self.contains(Piece::L, x, n) {
                g.l.push(x);
            }
            if self.contains(Piece::U, x, n) {
                g.u.push(x);
            }
        }
        let g = Arc::new(g);
        self.memo.write().expect("memo lock").insert(n, g.clone());
        g
    }

    /// Outside `|n| ≤ bound` every degree is all-or-nothing.
    pub fn window_bound(&self) -> i64 {
        let max = self.pairings.iter().map(|p| p.abs()).max().unwrap_or_else(zero);
        rational::to_i64(&max.ceil()).expect("small pairing") + self.datum.m
    }

    pub fn p_equal(&self, other: &Self, window: (i64, i64)) -> bool {
        (window.0..=window.1).all(|n| self.degree(n).p == other.degree(n).p)
    }

    pub fn label(&self, x: Member) -> String {
        match x {
            Member::Cartan => "h".into(),
            Member::Root(i) => rational::fmt_vector(
                &self.datum.system.roots()[i].iter().map(|&v| rat(v)).collect::<Vec<_>>(),
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeviReport {
    pub window: (i64, i64),
    pub disjoint_union: bool,
    pub failing_degrees: Vec<i64>,
}

pub fn levi_decomposition_check(spiral: &Spiral, window: (i64, i64)) -> LeviReport {
    let mut failing = Vec::new();
    for n in window.0..=window.1 {
        let g = spiral.degree(n);
        let overlap = g.l.iter().any(|x| g.u.contains(x));
        let mut lu: Vec<Member> = g.l.iter().chain(g.u.iter()).copied().collect();
        lu.sort();
        if overlap || lu != g.p {
            failing.push(n);
        }
    }
    LeviReport { window, disjoint_union: failing.is_empty(), failing_degrees: failing }
}

/// `None` if the parabolic parts differ on the window; otherwise whether the radicals agree.
pub fn radical_determined(a: &Spiral, b: &Spiral, window: (i64, i64)) -> Option<bool> {
    if !a.p_equal(b, window) {
        return None;
    }
    Some((window.0..=window.1).all(|n| a.degree(n).u == b.degree(n).u))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BracketViolation {
    pub piece: Piece,
    pub left: (Member, i64),
    pub right: (Member, i64),
}

fn bracket(sys: &FiniteRootSystem, x: Member, y: Member) -> Option<Member> {
    match (x, y) {
        (Member::Cartan, Member::Cartan) => None,
        (Member::Cartan, r) | (r, Member::Cartan) => Some(r),
        (Member::Root(i), Member::Root(j)) => {
            let s: Vec<i64> = sys.roots()[i].iter().zip(&sys.roots()[j]).map(|(a, b)| a + b).collect();
            if s.iter().all(|v| *v == 0) {
                Some(Member::Cartan)
            } else {
                sys.root_index(&s).map(Member::Root)
            }
        }
    }
}

/// `[𝔭_a, 𝔭_b] ⊆ 𝔭_{a+b}` and `[𝔭_a, 𝔲_b] ⊆ 𝔲_{a+b}` on root spaces, with `a`, `b`, `a+b` in the window.
pub fn bracket_check(spiral: &Spiral, window: (i64, i64)) -> Vec<BracketViolation> {
    let sys = spiral.datum.system.clone();
    let mut out = Vec::new();
    for a in window.0..=window.1 {
        for b in window.0..=window.1 {
            let c = a + b;
            if c < window.0 || c > window.1 {
                continue;
            }
            let (ga, gb, gc) = (spiral.degree(a), spiral.degree(b), spiral.degree(c));
            for &x in &ga.p {
                for &y in &gb.p {
                    if let Some(z) = bracket(&sys, x, y) {
                        if !gc.p.contains(&z) {
                            out.push(BracketViolation { piece: Piece::P, left: (x, a), right: (y, b) });
                        }
                    }
                }
                for &y in &gb.u {
                    if let Some(z) = bracket(&sys, x, y) {
                        if !gc.u.contains(&z) {
                            out.push(BracketViolation { piece: Piece::U, left: (x, a), right: (y, b) });
                        }
                    }
                }
            }
        }
    }
    out
}

/// Three distinct points of a facet when it has more than one vertex, otherwise its single point.
pub fn sample_points(group: &WeylGroup, facet: &Facet) -> Vec<Vec<Rational>> {
    let verts = facet.closure_vertices(group);
    let k = verts.len();
    let point = |weights: &[i64]| -> Vec<Rational> {
        let total: i64 = weights.iter().sum();
        let mut p = vec![zero(); group.rank()];
        for (v, w) in verts.iter().zip(weights) {
            for (pi, vi) in p.iter_mut().zip(v) {
                *pi += vi * rat(*w);
            }
        }
        if group.is_affine() {
            p.iter().map(|x| x / rat(total)).collect()
        } else {
            p
        }
    };
    let mut out = vec![facet.interior_point().to_vec()];
    if k > 1 || !group.is_affine() {
        for bump in 0..2 {
            let mut w = vec![1; k];
            w[bump % k] += bump as i64 + 1;
            let p = point(&w);
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct FacetSpiral {
    pub spiral: Spiral,
    pub samples: usize,
    pub independent: bool,
}

/// The spiral `λ_y = ε(θ̃ − m y)` at the stored interior point, checked against other points of the facet.
pub fn spiral_from_facet(datum: &GradedRootDatum, group: &WeylGroup, facet: &Facet, window: (i64, i64)) -> Result<FacetSpiral> {
    if group.rank() != datum.system.rank() {
        return Err(Error::Dimension { expected: datum.system.rank(), found: group.rank() });
    }
    let eps = datum.epsilon();
    let spiral = Spiral::from_cochar(datum, datum.cochar_at(facet.interior_point()), eps);
    let points = sample_points(group, facet);
    let independent = points.iter().all(|y| {
        debug_assert!(facet.contains_point(group, y));
        Spiral::from_cochar(datum, datum.cochar_at(y), eps).p_equal(&spiral, window)
    });
    Ok(FacetSpiral { spiral, samples: points.len(), independent })
}

/// Root permutation of `w`: index of `w_fin α` for each root index.
pub fn root_permutation(sys: &FiniteRootSystem, w: &Element) -> Vec<usize> {
    sys.roots()
        .iter()
        .map(|a| sys.root_index(&w.apply_root(a)).expect("W permutes roots"))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedPseudoLevi {
    /// Roots of the subsystem, by index into the finite root list.
    pub roots: Vec<usize>,
    /// Degree in ℤ of each root, parallel to `roots`.
    pub grading: Vec<i64>,
    pub facets_checked: usize,
    pub independent: bool,
}

impl GradedPseudoLevi {
    pub fn closed_under_sums(&self, sys: &FiniteRootSystem) -> bool {
        let deg: BTreeMap<usize, i64> = self.roots.iter().copied().zip(self.grading.iter().copied()).collect();
        for (&i, &di) in &deg {
            for (&j, &dj) in &deg {
                let s: Vec<i64> = sys.roots()[i].iter().zip(&sys.roots()[j]).map(|(a, b)| a + b).collect();
                if let Some(k) = sys.root_index(&s) {
                    if deg.get(&k) != Some(&(di + dj)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Roots constant on `e` at an allowed integer level, with their ℤ-degrees.
fn subspace_roots(datum: &GradedRootDatum, group: &WeylGroup, e: &AffineSubspace) -> Vec<(usize, i64, AffineFunction)> {
    let sys = &datum.system;
    let base = e.base_point();
    let dirs = e.directions();
    let mut out = Vec::new();
    for (i, a) in sys.roots().iter().enumerate() {
        if !dirs.iter().all(|d| rational::dot_int(a, d).is_zero()) {
            continue;
        }
        let v = rational::dot_int(a, &base);
        if !v.is_integer() {
            continue;
        }
        let level = -rational::to_i64(&v).expect("small level");
        if !group.root_system().contains(a, level) {
            continue;
        }
        let degree = datum.theta_pairings[i] + datum.m * level;
        let f = AffineFunction::new(a.iter().map(|&x| rat(x)).collect(), rat(level));
        out.push((i, degree, f));
    }
    out
}

pub fn pseudo_levi_from_subspace(datum: &GradedRootDatum, group: &WeylGroup, e: &AffineSubspace, radius: usize) -> Result<GradedPseudoLevi> {
    let found = subspace_roots(datum, group, e);
    let fns: Vec<AffineFunction> = found.iter().map(|(_, _, f)| f.clone()).collect();
    let cut = AffineSubspace::from_functions(group.rank(), &fns);
    if cut.as_ref() != Some(e) {
        return Err(Error::NotRelevant);
    }
    let roots: Vec<usize> = found.iter().map(|(i, _, _)| *i).collect();
    let grading: Vec<i64> = found.iter().map(|(_, d, _)| *d).collect();
    let mut facets_checked = 0;
    let mut independent = true;
    for f in facets_in_ball(group, radius)? {
        if f.span() != e {
            continue;
        }
        facets_checked += 1;
        let spiral = Spiral::from_cochar(datum, datum.cochar_at(f.interior_point()), datum.epsilon());
        let mut l: Vec<(usize, i64)> = Vec::new();
        for (i, p) in spiral.pairings.iter().enumerate() {
            if !p.is_integer() {
                continue;
            }
            let n = datum.epsilon() * rational::to_i64(p).expect("small pairing");
            if spiral.contains(Piece::L, Member::Root(i), n) {
                l.push((i, n));
            }
        }
        let expect: Vec<(usize, i64)> = roots.iter().copied().zip(grading.iter().copied()).collect();
        if l != expect {
            independent = false;
        }
    }
    Ok(GradedPseudoLevi { roots, grading, facets_checked, independent })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;
    use crate::root_system::{AffineRootSystem, CartanType};
    use crate::weyl::NodeSet;

    fn datum(t: CartanType, n: usize, theta: &[i64], m: i64, d: i64) -> GradedRootDatum {
        let sys = FiniteRootSystem::build(t, n).unwrap();
        GradedRootDatum::new(sys, theta.iter().map(|&x| rat(x)).collect(), m, d).unwrap()
    }

    fn affine(t: CartanType, n: usize) -> WeylGroup {
        WeylGroup::affine(AffineRootSystem::affinize(FiniteRootSystem::build(t, n).unwrap()).unwrap())
    }

    fn idx(d: &GradedRootDatum, a: &[i64]) -> Member {
        Member::Root(d.system().root_index(a).unwrap())
    }

    #[test]
    fn grading_degree_examples() {
        let z = datum(CartanType::A, 2, &[0, 0], 3, 1);
        assert!(z.system().roots().iter().all(|a| z.grading_degree(a).unwrap() == 0));
        let a1 = datum(CartanType::A, 1, &[1], 2, 1);
        assert_eq!(a1.grading_degree(&[1]).unwrap(), 1);
        assert_eq!(a1.grading_degree(&[-1]).unwrap(), 1);
        let a2 = datum(CartanType::A, 2, &[1, 1], 3, 1);
        assert_eq!(a2.grading_degree(&[1, 0]).unwrap(), 1);
        assert_eq!(a2.grading_degree(&[0, 1]).unwrap(), 1);
        assert_eq!(a2.grading_degree(&[1, 1]).unwrap(), 2);
        let sys = FiniteRootSystem::build(CartanType::A, 1).unwrap();
        assert!(GradedRootDatum::new(sys, vec![frac(1, 2)], 2, 1).is_err());
    }

    #[test]
    fn zero_cochar() {
        let d = datum(CartanType::A, 1, &[1], 2, 1);
        let s = Spiral::from_cochar(&d, vec![rat(0)], 1);
        for n in -4..=4 {
            let g = s.degree(n);
            for x in [Member::Cartan, idx(&d, &[1]), idx(&d, &[-1])] {
                let deg_ok = match x {
                    Member::Cartan => n.rem_euclid(2) == 0,
                    _ => n.rem_euclid(2) == 1,
                };
                assert_eq!(g.p.contains(&x), n <= 0 && deg_ok);
                assert_eq!(g.l.contains(&x), n == 0 && deg_ok);
            }
        }
        assert!(levi_decomposition_check(&s, (-3, 3)).disjoint_union);
    }

    #[test]
    fn a1_half_coroot() {
        // λ = α∨/2 = ϖ∨, so ⟨α, λ⟩ = 1
        let d = datum(CartanType::A, 1, &[1], 2, 1);
        let s = Spiral::from_cochar(&d, vec![rat(1)], 1);
        let (pos, neg) = (idx(&d, &[1]), idx(&d, &[-1]));
        for n in -4..=4i64 {
            let odd = n.rem_euclid(2) == 1;
            assert_eq!(s.contains(Piece::P, pos, n), odd && n <= 1);
            assert_eq!(s.contains(Piece::L, pos, n), n == 1);
            assert_eq!(s.contains(Piece::P, neg, n), odd && n <= -1);
            assert_eq!(s.contains(Piece::U, neg, n), odd && n < -1);
        }
        assert!(s.contains(Piece::U, neg, -3));
        assert!(s.contains(Piece::L, neg, -1));
        assert!(bracket_check(&s, (-6, 6)).is_empty());
    }

    #[test]
    fn facet_spirals_affine_a1() {
        let g = affine(CartanType::A, 1);
        let d = datum(CartanType::A, 1, &[1], 2, 1);
        let alcove = Facet::alcove(&g);
        let fs = spiral_from_facet(&d, &g, &alcove, (-3, 3)).unwrap();
        assert!(fs.independent && fs.samples == 3);
        // y ∈ (0, 1): λ = 1 − 2y ∈ (−1, 1)
        let (pos, neg) = (idx(&d, &[1]), idx(&d, &[-1]));
        for n in -3..=3i64 {
            let odd = n.rem_euclid(2) == 1;
            assert_eq!(fs.spiral.contains(Piece::P, pos, n), odd && n <= 0);
            assert_eq!(fs.spiral.contains(Piece::P, neg, n), odd && n <= -1);
            assert_eq!(fs.spiral.contains(Piece::P, Member::Cartan, n), !odd && n <= 0);
            assert!(fs.spiral.degree(n).l.iter().all(|x| *x == Member::Cartan));
        }
        // the grading point ϖ∨/2 lies inside the alcove
        let at_x = Spiral::from_cochar(&d, d.cochar_at(&d.grading_point()), 1);
        assert!(at_x.lambda().iter().all(Zero::is_zero));
        for f in facets_in_ball(&g, 3).unwrap() {
            assert!(spiral_from_facet(&d, &g, &f, (-4, 4)).unwrap().independent);
        }
    }

    #[test]
    fn pseudo_levi_examples() {
        let g = affine(CartanType::A, 1);
        let d = datum(CartanType::A, 1, &[1], 2, 1);
        let whole = AffineSubspace::whole(1);
        let pl = pseudo_levi_from_subspace(&d, &g, &whole, 2).unwrap();
        assert!(pl.roots.is_empty() && pl.independent && pl.facets_checked > 0);
        // the wall α = 0 (a vertex of κ₀)
        let wall = Facet::new(&g, &g.identity(), NodeSet::single(1)).unwrap();
        let pl = pseudo_levi_from_subspace(&d, &g, wall.span(), 2).unwrap();
        assert_eq!(pl.roots.len(), 2);
        assert_eq!(pl.grading, vec![1, -1]);
        assert!(pl.independent);
        let bad = AffineSubspace::from_functions(1, &[AffineFunction::new(vec![rat(1)], frac(-1, 3))]).unwrap();
        assert_eq!(pseudo_levi_from_subspace(&d, &g, &bad, 1).unwrap_err(), Error::NotRelevant);

        let g2 = affine(CartanType::A, 2);
        let d2 = datum(CartanType::A, 2, &[1, 1], 3, 1);
        let wall = Facet::new(&g2, &g2.identity(), NodeSet::single(0)).unwrap();
        let pl = pseudo_levi_from_subspace(&d2, &g2, wall.span(), 2).unwrap();
        assert_eq!(pl.roots.len(), 2);
        assert!(pl.closed_under_sums(d2.system()) && pl.independent);
        let vertex = Facet::new(&g2, &g2.identity(), [1, 2].into_iter().collect()).unwrap();
        let pl = pseudo_levi_from_subspace(&d2, &g2, vertex.span(), 2).unwrap();
        assert_eq!(pl.roots.len(), 6);
        assert!(pl.closed_under_sums(d2.system()));
    }

    #[test]
    fn radical_agrees_for_equal_cochar() {
        // roots span V*, so the only shift orthogonal to all of them is zero
        let d = datum(CartanType::A, 2, &[1, 0], 2, -1);
        let s = Spiral::from_cochar(&d, vec![frac(1, 3), frac(-2, 5)], -1);
        assert_eq!(radical_determined(&s, &s.clone(), (-4, 4)), Some(true));
    }
}
