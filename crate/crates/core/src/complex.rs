//! Facets of the Coxeter complex and their realization in 𝔼.
//!
//! A facet is a coset `y W_J` with `y` minimal; geometrically it is
//! `y · ∂_J κ₀`, where `κ₀` is the fundamental alcove (or the fundamental
//! chamber for a finite group) and `∂_J κ₀` is the face on which exactly the
//! walls in `J` vanish.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::rational::{self, frac, rat, zero, Rational};
use crate::relative::{conjugates_into, is_parabolic_finite, RelativeCoxeterSystem};
use crate::root_system::{AffineFunction, AffineRoot};
use crate::weyl::{Element, NodeSet, Side, WeylGroup};

/// An affine subspace `{x : A x = b}` stored as the reduced row echelon form of `[A | b]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineSubspace {
    rows: Matrix,
    ambient: usize,
}

impl AffineSubspace {
    pub fn whole(ambient: usize) -> Self {
        Self { rows: Vec::new(), ambient }
    }

    /// Common zero set of the given affine functions. `None` if empty.
    pub fn from_functions(ambient: usize, fs: &[AffineFunction]) -> Option<Self> {
        let aug: Matrix = fs
            .iter()
            .map(|f| {
                let mut r = f.gradient.clone();
                r.push(-f.constant.clone());
                r
            })
            .collect();
        let (rows, pivots) = linalg::rref(&aug);
        if pivots.last() == Some(&ambient) {
            return None;
        }
        Some(Self { rows, ambient })
    }

    pub fn dim(&self) -> usize {
        self.ambient - self.rows.len()
    }

    /// Rows `(∂f, −f(0))` of the defining equations in reduced form.
    pub fn equations(&self) -> &Matrix {
        &self.rows
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.rows
            .iter()
            .all(|r| linalg::dot(&r[..self.ambient], x) == r[self.ambient])
    }

    pub fn base_point(&self) -> Vec<Rational> {
        let a: Matrix = self.rows.iter().map(|r| r[..self.ambient].to_vec()).collect();
        let b: Vec<Rational> = self.rows.iter().map(|r| r[self.ambient].clone()).collect();
        if a.is_empty() {
            return vec![zero(); self.ambient];
        }
        linalg::solve(&a, &b).expect("nonempty subspace")
    }

    pub fn directions(&self) -> Vec<Vec<Rational>> {
        let a: Matrix = self.rows.iter().map(|r| r[..self.ambient].to_vec()).collect();
        linalg::nullspace(&a, self.ambient)
    }

    /// Orthogonal projection for the scalar product whose matrix on V is `G⁻¹`:
    /// `p = x − G Aᵀ c` with `(A G Aᵀ) c = A x − b`.
    pub fn project(&self, x: &[Rational], gram: &Matrix) -> Vec<Rational> {
        if self.rows.is_empty() {
            return x.to_vec();
        }
        let n = self.ambient;
        let a: Matrix = self.rows.iter().map(|r| r[..n].to_vec()).collect();
        let rhs: Vec<Rational> = self
            .rows
            .iter()
            .map(|r| linalg::dot(&r[..n], x) - &r[n])
            .collect();
        let gat = linalg::mat_mul(gram, &linalg::transpose(&a));
        let m = linalg::mat_mul(&a, &gat);
        let c = linalg::solve(&m, &rhs).expect("equations are independent");
        let shift = linalg::mat_vec(&gat, &c);
        x.iter().zip(shift).map(|(xi, si)| xi - si).collect()
    }
}

#[derive(Debug, Clone)]
pub struct Facet {
    rep: Element,
    ftype: NodeSet,
    span: AffineSubspace,
    interior: Vec<Rational>,
}

impl PartialEq for Facet {
    fn eq(&self, o: &Self) -> bool {
        self.ftype == o.ftype && self.rep == o.rep
    }
}

impl Eq for Facet {}

impl PartialOrd for Facet {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Facet {
    fn cmp(&self, o: &Self) -> Ordering {
        (self.ftype, &self.rep).cmp(&(o.ftype, &o.rep))
    }
}

/// Vertices of `κ₀` indexed by node; for a finite group, the chamber rays.
fn base_vertices(group: &WeylGroup) -> BTreeMap<usize, Vec<Rational>> {
    let aff = group.root_system();
    let n = group.rank();
    if group.is_affine() {
        aff.alcove_vertices().into_iter().enumerate().collect()
    } else {
        let theta = aff.finite().highest_root();
        (1..=n)
            .map(|i| {
                let mut v = vec![zero(); n];
                v[i - 1] = frac(1, theta[i - 1]);
                (i, v)
            })
            .collect()
    }
}

impl Facet {
    /// The facet `y W_J`, canonicalized to the minimal representative.
    pub fn new(group: &WeylGroup, y: &Element, ftype: NodeSet) -> Result<Self> {
        group.check_nodes(ftype)?;
        if ftype == group.nodes() {
            return Err(Error::ImproperType(ftype.to_string()));
        }
        if !group.in_coxeter_group(y) {
            return Err(Error::NotInRelativeGroup("facet representatives must lie in W".into()));
        }
        let rep = group.min_coset_rep(y, ftype, Side::Right);
        let walls: Vec<AffineFunction> = ftype
            .iter()
            .map(|j| rep.act_on_function(&AffineFunction::from(group.simple_root(j))))
            .collect();
        let span = AffineSubspace::from_functions(group.rank(), &walls).expect("facets are nonempty");
        let verts = base_vertices(group);
        let chosen: Vec<&Vec<Rational>> = verts
            .iter()
            .filter(|(i, _)| !ftype.contains(**i))
            .map(|(_, v)| v)
            .collect();
        let k = rat(chosen.len() as i64);
        let mut bary = vec![zero(); group.rank()];
        for v in &chosen {
            for (b, x) in bary.iter_mut().zip(v.iter()) {
                *b += x;
            }
        }
        if group.is_affine() {
            bary = bary.into_iter().map(|b| b / &k).collect();
        }
        let interior = rep.act_on_point(&bary);
        Ok(Self { rep, ftype, span, interior })
    }

    pub fn alcove(group: &WeylGroup) -> Self {
        Self::new(group, &group.identity(), NodeSet::EMPTY).expect("fundamental alcove")
    }

    pub fn rep(&self) -> &Element {
        &self.rep
    }

    pub fn facet_type(&self) -> NodeSet {
        self.ftype
    }

    pub fn span(&self) -> &AffineSubspace {
        &self.span
    }

    pub fn interior_point(&self) -> &[Rational] {
        &self.interior
    }

    pub fn boundary(&self, group: &WeylGroup, k: NodeSet) -> Result<Self> {
        if !self.ftype.is_subset(k) {
            return Err(Error::TypeNotContained);
        }
        Self::new(group, &self.rep, k)
    }

    pub fn translate(&self, group: &WeylGroup, w: &Element) -> Result<Self> {
        Self::new(group, &w.mul(&self.rep), self.ftype)
    }

    /// Canonical action of a normalizer element: `w · (y W_I) = y w⁻¹ W_I`.
    pub fn canonical_action(&self, group: &WeylGroup, w: &Element) -> Result<Self> {
        Self::new(group, &self.rep.mul(&w.inverse()), self.ftype)
    }

    /// Walls of the defining alcove `y κ₀`, as `(node, function)` pairs.
    pub fn walls(&self, group: &WeylGroup) -> Vec<(usize, AffineFunction)> {
        group
            .nodes()
            .iter()
            .map(|i| (i, self.rep.act_on_function(&AffineFunction::from(group.simple_root(i)))))
            .collect()
    }

    /// Whether `x` satisfies the defining equalities and strict inequalities.
    pub fn contains_point(&self, group: &WeylGroup, x: &[Rational]) -> bool {
        self.walls(group).iter().all(|(i, f)| {
            let v = f.eval(x);
            if self.ftype.contains(*i) {
                v.is_zero()
            } else {
                v > zero()
            }
        })
    }

    /// Vertices of the closure of the facet.
    pub fn closure_vertices(&self, group: &WeylGroup) -> Vec<Vec<Rational>> {
        base_vertices(group)
            .into_iter()
            .filter(|(i, _)| !self.ftype.contains(*i))
            .map(|(_, v)| self.rep.act_on_point(&v))
            .collect()
    }

    pub fn stabilizer_generators(&self, group: &WeylGroup) -> Vec<Element> {
        let inv = self.rep.inverse();
        self.ftype.iter().map(|j| self.rep.mul(group.generator(j).expect("node")).mul(&inv)).collect()
    }

    pub fn label(&self, group: &WeylGroup) -> String {
        format!("{}|{}", group.format_word(&self.rep), self.ftype)
    }
}

/// All facets `y W_J` with `ℓ(y) ≤ radius` over every proper type, in a fixed order.
pub fn facets_in_ball(group: &WeylGroup, radius: usize) -> Result<Vec<Facet>> {
    let ball = group.enumerate_ball(radius)?;
    let nodes = group.nodes();
    let mut out = BTreeSet::new();
    for bits in 0..(1u16 << 9) {
        let j = NodeSet::from_bits(bits);
        if !j.is_subset(nodes) || j == nodes {
            continue;
        }
        for y in &ball {
            if group.right_descents(y).iter().any(|s| j.contains(s)) {
                continue;
            }
            out.insert(Facet::new(group, y, j)?);
        }
    }
    let mut v: Vec<Facet> = out.into_iter().collect();
    v.sort_by(|a, b| {
        let ka = (group.length(&a.rep), group.reduced_word(&a.rep).letters, a.ftype);
        let kb = (group.length(&b.rep), group.reduced_word(&b.rep).letters, b.ftype);
        ka.cmp(&kb)
    });
    Ok(v)
}

/// Facets of the given type with `ℓ(y) ≤ radius`.
pub fn facets_of_type(group: &WeylGroup, ftype: NodeSet, radius: usize) -> Result<Vec<Facet>> {
    let mut out = BTreeSet::new();
    for y in group.enumerate_ball(radius)? {
        if group.right_descents(&y).iter().any(|s| ftype.contains(s)) {
            continue;
        }
        out.insert(Facet::new(group, &y, ftype)?);
    }
    Ok(out.into_iter().collect())
}

/// The point `𝐱 = θ̃/m` together with its stabilizer.
#[derive(Debug, Clone)]
pub struct GradingPoint {
    pub theta: Vec<Rational>,
    pub m: i64,
    pub x: Vec<Rational>,
    pub generators: Vec<Element>,
}

impl GradingPoint {
    pub fn new(group: &WeylGroup, theta: Vec<Rational>, m: i64) -> Result<Self> {
        if m <= 0 {
            return Err(Error::InvalidParameters(format!("m must be positive, got {m}")));
        }
        if theta.len() != group.rank() {
            return Err(Error::Dimension { expected: group.rank(), found: theta.len() });
        }
        let x: Vec<Rational> = theta.iter().map(|t| t / rat(m)).collect();
        let generators = stabilizer_of_point(group, &x);
        Ok(Self { theta, m, x, generators })
    }

    pub fn elements(&self, group: &WeylGroup) -> Vec<Element> {
        close_group(group, &self.generators)
    }
}

/// Reflections `s_a` with `a(x) = 0`: they generate `Stab_W(x)`.
pub fn stabilizer_of_point(group: &WeylGroup, x: &[Rational]) -> Vec<Element> {
    let fin = group.finite_system();
    let mut out = BTreeSet::new();
    for alpha in fin.positive_roots() {
        let v = rational::dot_int(alpha, x);
        if !v.is_integer() {
            continue;
        }
        let n = -rational::to_i64(&v).expect("small level");
        if !group.is_affine() && n != 0 {
            continue;
        }
        let a = AffineRoot { direction: alpha.clone(), level: n };
        if let Ok(r) = group.reflection(&a) {
            out.insert(r);
        }
    }
    out.into_iter().collect()
}

/// The finite group generated by `gens`, sorted.
pub fn close_group(group: &WeylGroup, gens: &[Element]) -> Vec<Element> {
    let mut seen: BTreeSet<Element> = BTreeSet::new();
    seen.insert(group.identity());
    let mut queue = VecDeque::from([group.identity()]);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = s.mul(&g);
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    seen.into_iter().collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct RelativePosition {
    /// Minimal element of `W_I y⁻¹y' W_I`.
    #[serde(skip)]
    pub double_coset: Element,
    pub word: Vec<usize>,
    pub good: bool,
    pub spans_equal: bool,
    /// For good pairs: the `w̃ ∈ W̃` with `w̃ · ν' = ν` under the canonical action.
    #[serde(skip)]
    pub relative_element: Option<Element>,
}

pub fn relative_position(group: &WeylGroup, nu: &Facet, nu_prime: &Facet) -> Result<RelativePosition> {
    if nu.ftype != nu_prime.ftype {
        return Err(Error::TypesDiffer);
    }
    let i = nu.ftype;
    let d = group.double_coset_min_rep(&nu.rep.inverse().mul(&nu_prime.rep), i, i);
    let good = conjugates_into(group, &d, i, i) && conjugates_into(group, &d.inverse(), i, i);
    let spans_equal = nu.span == nu_prime.span;
    let word = group.reduced_word(&d).letters;
    let relative_element = good.then(|| d.clone());
    Ok(RelativePosition { double_coset: d, word, good, spans_equal, relative_element })
}

/// `Ξ ∩ ball`: the `W_𝐱`-orbit of the 𝔼-alcoves of `ν₀`'s span found at relative radius.
#[derive(Debug, Clone)]
pub struct XiSet {
    pub facets: Vec<Facet>,
    pub ball_complete: bool,
}

pub fn e_alcoves(rel: &RelativeCoxeterSystem, nu0: &Facet, radius: usize) -> Result<(Vec<Facet>, bool)> {
    if nu0.ftype != rel.sigma() {
        return Err(Error::TypesDiffer);
    }
    let group = rel.group();
    let ball = rel.ball(radius)?;
    let found: BTreeSet<Facet> = ball
        .iter()
        .map(|d| Facet::new(group, &nu0.rep.mul(d), nu0.ftype))
        .collect::<Result<_>>()?;
    let mut complete = true;
    'outer: for f in &found {
        for st in rel.simples() {
            if !found.contains(&f.canonical_action(group, &st.element)?) {
                complete = false;
                break 'outer;
            }
        }
    }
    Ok((found.into_iter().collect(), complete))
}

pub fn xi_orbit(rel: &RelativeCoxeterSystem, x: &GradingPoint, nu0: &Facet, radius: usize) -> Result<XiSet> {
    let group = rel.group();
    let (alcoves, complete) = e_alcoves(rel, nu0, radius)?;
    let wx = x.elements(group);
    let mut out = BTreeSet::new();
    for f in &alcoves {
        for u in &wx {
            out.insert(f.translate(group, u)?);
        }
    }
    Ok(XiSet { facets: out.into_iter().collect(), ball_complete: complete })
}

/// Sizes of the fibres of the orbit map `W_𝐱\(W_𝐱ν × W_𝐱ν') → W_I\W/W_I`,
/// keyed by the minimal double-coset representative.
pub fn orbit_fibres(group: &WeylGroup, wx: &[Element], nu: &Facet, nu_prime: &Facet) -> Result<BTreeMap<Element, usize>> {
    let left: BTreeSet<Facet> = wx.iter().map(|u| nu.translate(group, u)).collect::<Result<_>>()?;
    let right: BTreeSet<Facet> = wx.iter().map(|v| nu_prime.translate(group, v)).collect::<Result<_>>()?;
    let mut orbits: BTreeSet<(Facet, Facet)> = BTreeSet::new();
    for a in &left {
        for b in &right {
            let canon = wx
                .iter()
                .map(|g| Ok((a.translate(group, g)?, b.translate(group, g)?)))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .min()
                .expect("W_x contains e");
            orbits.insert(canon);
        }
    }
    let mut fibres: BTreeMap<Element, usize> = BTreeMap::new();
    for (a, b) in &orbits {
        let rp = relative_position(group, a, b)?;
        *fibres.entry(rp.double_coset).or_default() += 1;
    }
    Ok(fibres)
}

#[derive(Debug, Clone, Serialize)]
pub struct FixedChambers {
    /// Relative words of the chamber representatives, in order.
    pub chambers: Vec<Vec<usize>>,
    /// `action[i][k]`: index of `s̃_k · chamber_i`, or `None` outside the ball.
    pub action: Vec<Vec<Option<usize>>>,
    pub all_type_sigma: bool,
    pub reps_in_relative_group: bool,
    pub single_free_orbit: bool,
    /// Chambers with a neighbour outside the ball.
    pub boundary: usize,
}

/// Facets `y W_J` in the ball with `y W_J y⁻¹ = W_Σ`, and the `W̃` action on them.
pub fn fixed_chambers(rel: &RelativeCoxeterSystem, radius: usize) -> Result<FixedChambers> {
    let group = rel.group();
    let sigma = rel.sigma();
    let nodes = group.nodes();
    let ball = group.enumerate_ball(radius)?;
    let mut found: BTreeMap<Facet, Element> = BTreeMap::new();
    let mut all_type_sigma = true;
    for bits in 0..(1u16 << 9) {
        let j = NodeSet::from_bits(bits);
        if !j.is_subset(nodes) || j == nodes || !is_parabolic_finite(group, j) {
            continue;
        }
        for y in &ball {
            if group.right_descents(y).iter().any(|s| j.contains(s)) {
                continue;
            }
            if conjugates_into(group, y, j, sigma) && conjugates_into(group, &y.inverse(), sigma, j) {
                if j != sigma {
                    all_type_sigma = false;
                }
                found.insert(Facet::new(group, y, j)?, y.clone());
            }
        }
    }
    let facets: Vec<Facet> = found.keys().cloned().collect();
    let reps_in_relative_group = found.values().all(|y| rel.contains(y));
    let mut keyed: Vec<(Vec<usize>, Facet)> = facets
        .into_iter()
        .map(|f| (rel.relative_word(f.rep()).unwrap_or_default(), f))
        .collect();
    keyed.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    let index: BTreeMap<Facet, usize> = keyed.iter().enumerate().map(|(i, (_, f))| (f.clone(), i)).collect();
    let mut action = Vec::new();
    let mut boundary = 0;
    for (_, f) in &keyed {
        let row: Vec<Option<usize>> = rel
            .simples()
            .iter()
            .map(|st| f.translate(group, &st.element).map(|g| index.get(&g).copied()))
            .collect::<Result<_>>()?;
        if row.iter().any(Option::is_none) {
            boundary += 1;
        }
        action.push(row);
    }
    // the orbit of the base chamber under the action graph must be everything
    let base = index.get(&Facet::new(group, &group.identity(), sigma)?).copied();
    let mut reached = BTreeSet::new();
    if let Some(b) = base {
        let mut queue = VecDeque::from([b]);
        reached.insert(b);
        while let Some(i) = queue.pop_front() {
            for j in action[i].iter().flatten() {
                if reached.insert(*j) {
                    queue.push_back(*j);
                }
            }
        }
    }
    // freeness: distinct chambers have distinct representatives in W̃
    let reps: BTreeSet<&Element> = keyed.iter().map(|(_, f)| f.rep()).collect();
    let free = reps.len() == keyed.len() && action.iter().enumerate().all(|(i, r)| r.iter().all(|j| *j != Some(i)));
    Ok(FixedChambers {
        chambers: keyed.into_iter().map(|(w, _)| w).collect(),
        single_free_orbit: base.is_some() && reached.len() == index.len() && free,
        action,
        all_type_sigma,
        reps_in_relative_group,
        boundary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{AffineRootSystem, CartanType, FiniteRootSystem};

    fn affine(t: CartanType, n: usize) -> WeylGroup {
        WeylGroup::affine(AffineRootSystem::affinize(FiniteRootSystem::build(t, n).unwrap()).unwrap())
    }

    fn finite(t: CartanType, n: usize) -> WeylGroup {
        WeylGroup::finite(FiniteRootSystem::build(t, n).unwrap()).unwrap()
    }

    fn ns(v: &[usize]) -> NodeSet {
        v.iter().copied().collect()
    }

    #[test]
    fn boundary_examples() {
        let a1 = affine(CartanType::A, 1);
        let k0 = Facet::alcove(&a1);
        assert_eq!(k0.boundary(&a1, NodeSet::EMPTY).unwrap(), k0);
        let v = k0.boundary(&a1, ns(&[1])).unwrap();
        assert_eq!(v.interior_point(), &[rat(0)]);
        assert_eq!(v.span().dim(), 0);
        let s1 = a1.generator(1).unwrap();
        assert_eq!(v.translate(&a1, s1).unwrap(), v);
        assert_eq!(v.boundary(&a1, NodeSet::EMPTY), Err(Error::TypeNotContained));
        assert!(matches!(Facet::new(&a1, &a1.identity(), ns(&[0, 1])), Err(Error::ImproperType(_))));
    }

    #[test]
    fn span_examples() {
        let a2 = affine(CartanType::A, 2);
        let k0 = Facet::alcove(&a2);
        assert_eq!(k0.span().dim(), 2);
        let x = vec![frac(1, 5), frac(2, 7)];
        assert_eq!(k0.span().project(&x, a2.finite_system().gram()), x);
        let origin = Facet::new(&a2, &a2.identity(), ns(&[1, 2])).unwrap();
        assert_eq!(origin.span().dim(), 0);
        assert_eq!(origin.span().project(&x, a2.finite_system().gram()), vec![rat(0), rat(0)]);
        assert!(k0.contains_point(&a2, k0.interior_point()));
    }

    #[test]
    fn projection_is_orthogonal() {
        let b2 = affine(CartanType::B, 2);
        let wall = Facet::new(&b2, &b2.identity(), ns(&[0])).unwrap();
        let x = vec![frac(3, 2), frac(-1, 3)];
        let p = wall.span().project(&x, b2.finite_system().gram());
        assert!(wall.span().contains(&p));
        let ginv = linalg::inverse(b2.finite_system().gram()).unwrap();
        let diff: Vec<Rational> = x.iter().zip(&p).map(|(a, b)| a - b).collect();
        for d in wall.span().directions() {
            assert_eq!(linalg::bilinear(&ginv, &diff, &d), zero());
        }
    }

    #[test]
    fn stabilizer_examples() {
        let a2 = affine(CartanType::A, 2);
        let inside = a2.root_system().alcove_interior_point().to_vec();
        assert!(stabilizer_of_point(&a2, &inside).is_empty());
        let gens = stabilizer_of_point(&a2, &[rat(0), rat(0)]);
        assert_eq!(close_group(&a2, &gens).len(), 6);
        let a1 = affine(CartanType::A, 1);
        let mid = GradingPoint::new(&a1, vec![rat(1)], 2).unwrap();
        assert_eq!(mid.x, vec![frac(1, 2)]);
        assert!(mid.generators.is_empty());
        let x = GradingPoint::new(&a1, vec![rat(1)], 1).unwrap();
        assert_eq!(x.generators, vec![a1.generator(0).unwrap().clone()]);
        assert_eq!(x.elements(&a1).len(), 2);
    }

    #[test]
    fn radius_zero_facets() {
        let a2 = affine(CartanType::A, 2);
        assert_eq!(facets_in_ball(&a2, 0).unwrap().len(), 7);
    }

    #[test]
    fn relative_position_examples() {
        let b2 = affine(CartanType::C, 2);
        let i = ns(&[1]);
        let nu = Facet::new(&b2, &b2.identity(), i).unwrap();
        let rp = relative_position(&b2, &nu, &nu).unwrap();
        assert!(rp.good && rp.double_coset.is_identity());
        let other = Facet::new(&b2, &b2.identity(), ns(&[2])).unwrap();
        assert_eq!(relative_position(&b2, &nu, &other).unwrap_err(), Error::TypesDiffer);
        for f in facets_of_type(&b2, i, 3).unwrap() {
            let rp = relative_position(&b2, &nu, &f).unwrap();
            assert_eq!(rp.good, rp.spans_equal);
            if let Some(w) = rp.relative_element {
                assert_eq!(f.canonical_action(&b2, &w).unwrap(), nu);
            }
        }
    }

    #[test]
    fn fixed_chambers_b2() {
        let b2 = finite(CartanType::B, 2);
        let rel = RelativeCoxeterSystem::new(b2, ns(&[1])).unwrap();
        let fc = fixed_chambers(&rel, 4).unwrap();
        assert_eq!(fc.chambers.len(), 2);
        assert!(fc.all_type_sigma && fc.reps_in_relative_group && fc.single_free_orbit);
        assert_eq!(fc.boundary, 0);
    }
}
