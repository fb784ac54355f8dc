//! The degenerate double affine Hecke algebra `ℂW ⊗ ℂ[𝔼]` in right-polynomial
//! normal form `Σ g ⊗ f_g`.
//!
//! Coordinates on 𝔼 are `x_k = α_k` (k = 1..n), so the gradient of an affine
//! function in simple-root coordinates is its linear part in these variables.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::poly::{fmt_signed_term, join_signed, Monomial, Poly};
use crate::rational::{self, frac, rat, zero, Rational};
use crate::relative::{element_order, CoxeterOrder};
use crate::root_system::AffineFunction;
use crate::weyl::{Element, WeylGroup};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HeckeParameters {
    pub m: i64,
    pub d: i64,
    /// `c_a` per simple node.
    pub c: BTreeMap<usize, i64>,
    /// Specialization point; `h_a = u · c_a`.
    #[serde(with = "rational::serde_rational")]
    pub u: Rational,
    pub allow_unsafe: bool,
}

impl HeckeParameters {
    /// `u = d/2m`.
    pub fn new(m: i64, d: i64, c: BTreeMap<usize, i64>) -> Self {
        let u = if m == 0 { zero() } else { frac(d, 2 * m) };
        Self { m, d, c, u, allow_unsafe: false }
    }

    pub fn uniform(group: &WeylGroup, m: i64, d: i64, c: i64) -> Self {
        Self::new(m, d, group.nodes().iter().map(|i| (i, c)).collect())
    }

    pub fn with_u(mut self, u: Rational) -> Self {
        self.u = u;
        self
    }

    pub fn unsafe_ok(mut self) -> Self {
        self.allow_unsafe = true;
        self
    }

    pub fn h(&self, node: usize) -> Rational {
        &self.u * rat(*self.c.get(&node).unwrap_or(&0))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DElem {
    nvars: usize,
    terms: BTreeMap<Element, Poly>,
}

impl DElem {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn term(g: Element, p: Poly) -> Self {
        let mut x = Self::zero(p.nvars());
        x.add_term(g, p);
        x
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Element, &Poly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, g: &Element) -> Poly {
        self.terms.get(g).cloned().unwrap_or_else(|| Poly::zero(self.nvars))
    }

    pub fn support(&self) -> Vec<&Element> {
        self.terms.keys().collect()
    }

    pub fn degree(&self) -> u32 {
        self.terms.values().map(Poly::degree).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, g: Element, p: Poly) {
        if p.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&g) {
            Some(q) => q.add(&p),
            None => p,
        };
        if !sum.is_zero() {
            self.terms.insert(g, sum);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (g, p) in &o.terms {
            r.add_term(g.clone(), p.clone());
        }
        r
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut r = Self::zero(self.nvars);
        for (g, p) in &self.terms {
            r.add_term(g.clone(), p.scale(c));
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-Rational::one()))
    }

    /// Multiply every coefficient on the right by `q`.
    pub fn mul_poly(&self, q: &Poly) -> Self {
        let mut r = Self::zero(self.nvars);
        for (g, p) in &self.terms {
            r.add_term(g.clone(), p.mul(q));
        }
        r
    }

    /// Multiply every group part on the left by `h`.
    pub fn left_mul_group(&self, h: &Element) -> Self {
        Self { nvars: self.nvars, terms: self.terms.iter().map(|(g, p)| (h.mul(g), p.clone())).collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
    pub all_passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightSpace {
    #[serde(with = "rational::serde_rational_vec")]
    pub weight: Vec<Rational>,
    /// Basis vectors `g` with `g·λ₀` equal to the weight.
    pub multiplicity: usize,
    /// Dimension of the generalized weight space in the truncation.
    pub dimension: usize,
    /// Whether the polynomial subalgebra acts semisimply on it.
    pub semisimple: bool,
}

#[derive(Debug, Clone)]
pub struct StandardModule {
    pub lambda0: Vec<Rational>,
    pub basis: Vec<Element>,
    pub weights: Vec<WeightSpace>,
}

#[derive(Debug, Clone)]
pub struct OrbitReport {
    pub points: Vec<Vec<Rational>>,
    pub stabilizer: Vec<Element>,
    pub ball_complete: bool,
}

#[derive(Debug, Clone)]
pub struct DDaha {
    group: WeylGroup,
    params: HeckeParameters,
    h: BTreeMap<usize, Rational>,
    roots: BTreeMap<usize, Poly>,
    images: BTreeMap<usize, Vec<Poly>>,
    pis: Vec<Element>,
}

fn coordinate(n: usize, k: usize) -> AffineFunction {
    let mut g = vec![zero(); n];
    g[k] = Rational::one();
    AffineFunction::new(g, zero())
}

/// Classes of simple nodes conjugate under the extended group.
pub fn node_orbits(group: &WeylGroup) -> Vec<BTreeSet<usize>> {
    let nodes: Vec<usize> = group.nodes().iter().collect();
    let mut parent: BTreeMap<usize, usize> = nodes.iter().map(|&i| (i, i)).collect();
    fn find(p: &mut BTreeMap<usize, usize>, i: usize) -> usize {
        let r = p[&i];
        if r == i {
            return i;
        }
        let root = find(p, r);
        p.insert(i, root);
        root
    }
    let join = |p: &mut BTreeMap<usize, usize>, a: usize, b: usize| {
        let (ra, rb) = (find(p, a), find(p, b));
        if ra != rb {
            p.insert(ra.max(rb), ra.min(rb));
        }
    };
    for &i in &nodes {
        for &j in &nodes {
            if i < j {
                let st = group.generator(i).expect("node").mul(group.generator(j).expect("node"));
                if let CoxeterOrder::Finite(k) = element_order(&st, 64) {
                    if k % 2 == 1 {
                        join(&mut parent, i, j);
                    }
                }
            }
        }
    }
    for pi in group.length_zero_elements() {
        if let Some(perm) = group.node_permutation(&pi) {
            for (a, &b) in perm.iter().enumerate() {
                if group.nodes().contains(a) && group.nodes().contains(b) {
                    join(&mut parent, a, b);
                }
            }
        }
    }
    let mut classes: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for &i in &nodes {
        let r = find(&mut parent, i);
        classes.entry(r).or_default().insert(i);
    }
    classes.into_values().collect()
}

impl DDaha {
    pub fn new(group: WeylGroup, params: HeckeParameters) -> Result<Self> {
        if params.m <= 0 || params.d == 0 {
            return Err(Error::InvalidParameters(format!("need m > 0 and d ≠ 0, got m = {}, d = {}", params.m, params.d)));
        }
        let nodes = group.nodes();
        let given: BTreeSet<usize> = params.c.keys().copied().collect();
        let wanted: BTreeSet<usize> = nodes.iter().collect();
        if given != wanted {
            return Err(Error::InvalidParameters(format!("c must be given exactly on the nodes {nodes}")));
        }
        if !params.allow_unsafe {
            if let Some((i, c)) = params.c.iter().find(|(_, c)| **c < 2) {
                return Err(Error::InvalidParameters(format!("c_{i} = {c} is below 2")));
            }
            for class in node_orbits(&group) {
                let vals: BTreeSet<i64> = class.iter().map(|i| params.c[i]).collect();
                if vals.len() > 1 {
                    let members: Vec<String> = class.iter().map(|i| format!("s{i}")).collect();
                    return Err(Error::InvalidParameters(format!(
                        "c is not constant on the conjugacy class {{{}}}",
                        members.join(",")
                    )));
                }
            }
            if params.u.is_zero() {
                return Err(Error::InvalidParameters("h vanishes".into()));
            }
        }
        let n = group.rank();
        let h = nodes.iter().map(|i| (i, params.h(i))).collect();
        let roots = nodes
            .iter()
            .map(|i| (i, Poly::from_affine(&AffineFunction::from(group.simple_root(i)))))
            .collect();
        let images = nodes
            .iter()
            .map(|i| {
                let s = group.generator(i).expect("node");
                (i, (0..n).map(|k| Poly::from_affine(&s.act_on_function(&coordinate(n, k)))).collect())
            })
            .collect();
        let pis = group.length_zero_elements();
        Ok(Self { group, params, h, roots, images, pis })
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn params(&self) -> &HeckeParameters {
        &self.params
    }

    pub fn h(&self, node: usize) -> &Rational {
        &self.h[&node]
    }

    pub fn nvars(&self) -> usize {
        self.group.rank()
    }

    pub fn simple_poly(&self, node: usize) -> &Poly {
        &self.roots[&node]
    }

    pub fn one(&self) -> DElem {
        DElem::term(self.group.identity(), Poly::one(self.nvars()))
    }

    pub fn group_element(&self, g: &Element) -> DElem {
        DElem::term(g.clone(), Poly::one(self.nvars()))
    }

    pub fn generator(&self, node: usize) -> Result<DElem> {
        Ok(self.group_element(self.group.generator(node)?))
    }

    pub fn poly(&self, f: Poly) -> DElem {
        DElem::term(self.group.identity(), f)
    }

    /// `g(f) = f ∘ g⁻¹`.
    pub fn act(&self, g: &Element, f: &Poly) -> Poly {
        let n = self.nvars();
        let images: Vec<Poly> = (0..n).map(|k| Poly::from_affine(&g.act_on_function(&coordinate(n, k)))).collect();
        f.substitute(&images)
    }

    pub fn reflect(&self, node: usize, f: &Poly) -> Poly {
        f.substitute(&self.images[&node])
    }

    /// `(1 ⊗ f)(s ⊗ 1) = s ⊗ s(f) + e ⊗ h (f − s(f))/a`.
    pub fn cross_multiply(&self, node: usize, f: &Poly) -> Result<DElem> {
        self.group.generator(node)?;
        self.right_mul_generator(&self.poly(f.clone()), node)
    }

    fn right_mul_generator(&self, x: &DElem, node: usize) -> Result<DElem> {
        let s = self.group.generator(node)?;
        let a = &self.roots[&node];
        let h = &self.h[&node];
        let mut out = DElem::zero(self.nvars());
        for (g, p) in &x.terms {
            let sp = self.reflect(node, p);
            let diff = p.sub(&sp);
            out.add_term(g.mul(s), sp);
            if !diff.is_zero() && !h.is_zero() {
                out.add_term(g.clone(), diff.div_linear(a)?.scale(h));
            }
        }
        Ok(out)
    }

    /// `x · (h ⊗ 1)`, pushing polynomials through a reduced word of `h`.
    pub fn right_mul_group(&self, x: &DElem, h: &Element) -> Result<DElem> {
        let word = self.group.reduced_word(h);
        let mut cur = x.clone();
        for &i in &word.letters {
            cur = self.right_mul_generator(&cur, i)?;
        }
        if !word.pi.is_identity() {
            let inv = word.pi.inverse();
            let mut out = DElem::zero(self.nvars());
            for (g, p) in &cur.terms {
                out.add_term(g.mul(&word.pi), self.act(&inv, p));
            }
            cur = out;
        }
        Ok(cur)
    }

    pub fn multiply(&self, x: &DElem, y: &DElem) -> Result<DElem> {
        let mut out = DElem::zero(self.nvars());
        for (h, q) in &y.terms {
            out = out.add(&self.right_mul_group(x, h)?.mul_poly(q));
        }
        Ok(out)
    }

    pub fn random_element<R: Rng>(&self, rng: &mut R, max_support: usize, max_degree: u32, max_letters: usize) -> DElem {
        let k = rng.gen_range(1..=max_support);
        let mut x = DElem::zero(self.nvars());
        for _ in 0..k {
            let g = self.group.random_element(rng, max_letters);
            x.add_term(g, Poly::random(rng, self.nvars(), max_degree, 3));
        }
        x
    }

    fn alternating(&self, i: usize, j: usize, len: u32) -> Result<Element> {
        let letters: Vec<usize> = (0..len).map(|k| if k % 2 == 0 { i } else { j }).collect();
        self.group.evaluate_word(&letters)
    }

    /// Involutions, braid relations with `m(s,t) ≤ depth`, and the cross relation on
    /// `samples` random polynomials per generator.
    pub fn verify_relations<R: Rng>(&self, depth: u32, samples: usize, rng: &mut R) -> Result<RelationReport> {
        let nodes: Vec<usize> = self.group.nodes().iter().collect();
        let n = self.nvars();
        let mut checks = Vec::new();
        for &i in &nodes {
            let s = self.generator(i)?;
            checks.push(RelationCheck { name: format!("s{i}^2 = e"), passed: self.multiply(&s, &s)? == self.one() });
        }
        for (a, &i) in nodes.iter().enumerate() {
            for &j in &nodes[a + 1..] {
                let st = self.group.generator(i)?.mul(self.group.generator(j)?);
                let CoxeterOrder::Finite(m) = element_order(&st, depth.max(2)) else { continue };
                let (l, r) = (self.alternating(i, j, m)?, self.alternating(j, i, m)?);
                let mut passed = self.group_element(&l) == self.group_element(&r);
                // pushing a polynomial through either braid word must agree
                for _ in 0..samples.min(5) {
                    let p = self.poly(Poly::random(rng, n, 2, 3));
                    let mut left = p.clone();
                    let mut right = p;
                    for k in 0..m {
                        left = self.right_mul_generator(&left, if k % 2 == 0 { i } else { j })?;
                        right = self.right_mul_generator(&right, if k % 2 == 0 { j } else { i })?;
                    }
                    passed &= left == right;
                }
                checks.push(RelationCheck { name: format!("braid s{i},s{j} (m = {m})"), passed });
            }
        }
        for &i in &nodes {
            let s = self.generator(i)?;
            let mut passed = true;
            for _ in 0..samples {
                let f = Poly::random(rng, n, 3, 4);
                let sf = self.reflect(i, &f);
                let lhs = self.multiply(&s, &self.poly(f.clone()))?.sub(&self.multiply(&self.poly(sf.clone()), &s)?);
                let rhs = self.poly(f.sub(&sf).div_linear(&self.roots[&i])?.scale(&self.h[&i]));
                passed &= lhs == rhs;
            }
            checks.push(RelationCheck { name: format!("cross relation s{i}"), passed });
        }
        let all_passed = checks.iter().all(|c| c.passed);
        Ok(RelationReport { checks, all_passed })
    }

    fn check_point(&self, x: &[Rational]) -> Result<()> {
        if x.len() != self.nvars() {
            return Err(Error::Dimension { expected: self.nvars(), found: x.len() });
        }
        Ok(())
    }

    /// Matrix of `f` on the truncation `{g ⊗ 1_λ₀ : g ∈ basis}`; columns are images.
    pub fn action_matrix(&self, module: &StandardModule, f: &Poly) -> Result<Matrix> {
        let index: BTreeMap<&Element, usize> = module.basis.iter().enumerate().map(|(i, g)| (g, i)).collect();
        let k = module.basis.len();
        let mut m = vec![vec![zero(); k]; k];
        for (col, g) in module.basis.iter().enumerate() {
            let image = self.right_mul_group(&self.poly(f.clone()), g)?;
            for (h, p) in image.terms() {
                let v = p.eval(&module.lambda0);
                if v.is_zero() {
                    continue;
                }
                let row = index.get(h).copied().filter(|_| self.group.bruhat_leq(h, g).unwrap_or(false));
                match row {
                    Some(r) => m[r][col] = v,
                    None => {
                        return Err(Error::TriangularityViolated(format!(
                            "{} appears in f·{}",
                            self.group.format_word(h),
                            self.group.format_word(g)
                        )))
                    }
                }
            }
            let diag = f.eval(&g.act_on_point(&module.lambda0));
            if m[col][col] != diag {
                return Err(Error::TriangularityViolated(format!("diagonal at {}", self.group.format_word(g))));
            }
        }
        Ok(m)
    }

    /// `ℍ ⊗_S ℂ_λ₀` truncated to `{g : ℓ(g) ≤ depth}`.
    pub fn standard_module(&self, lambda0: &[Rational], depth: usize) -> Result<StandardModule> {
        self.check_point(lambda0)?;
        let basis = self.group.enumerate_ball(depth)?;
        let mut module = StandardModule { lambda0: lambda0.to_vec(), basis, weights: Vec::new() };
        let n = self.nvars();
        let mats: Vec<Matrix> =
            (0..n).map(|k| self.action_matrix(&module, &Poly::var(n, k))).collect::<Result<_>>()?;
        let mut order: Vec<Vec<Rational>> = Vec::new();
        let mut count: BTreeMap<Vec<Rational>, usize> = BTreeMap::new();
        for g in &module.basis {
            let w = g.act_on_point(lambda0);
            if !count.contains_key(&w) {
                order.push(w.clone());
            }
            *count.entry(w).or_default() += 1;
        }
        let size = module.basis.len();
        for w in order {
            let shifted: Vec<Matrix> = mats
                .iter()
                .zip(&w)
                .map(|(m, wk)| {
                    let mut s = m.clone();
                    for (i, row) in s.iter_mut().enumerate() {
                        row[i] -= wk;
                    }
                    s
                })
                .collect();
            let mut stacked: Matrix = Vec::new();
            for s in &shifted {
                let mut p = s.clone();
                for _ in 1..size {
                    p = linalg::mat_mul(&p, s);
                }
                stacked.extend(p);
            }
            let kernel = linalg::nullspace(&stacked, size);
            let semisimple = shifted
                .iter()
                .all(|s| kernel.iter().all(|v| linalg::mat_vec(s, v).iter().all(Zero::is_zero)));
            module.weights.push(WeightSpace { multiplicity: count[&w], dimension: kernel.len(), semisimple, weight: w });
        }
        Ok(module)
    }

    /// Orbit of `λ₀` and its stabilizer, searched over the ball of the given radius.
    pub fn orbit(&self, lambda0: &[Rational], radius: usize) -> Result<OrbitReport> {
        self.check_point(lambda0)?;
        let mut points = Vec::new();
        let mut seen = BTreeSet::new();
        let mut stabilizer = Vec::new();
        for g in self.group.enumerate_ball(radius)? {
            let p = g.act_on_point(lambda0);
            if p == lambda0 {
                stabilizer.push(g.clone());
            }
            if seen.insert(p.clone()) {
                points.push(p);
            }
        }
        let ball_complete = points.iter().all(|p| {
            self.group.nodes().iter().all(|i| seen.contains(&self.group.generator(i).expect("node").act_on_point(p)))
        });
        Ok(OrbitReport { points, stabilizer, ball_complete })
    }

    fn group_label(&self, g: &Element) -> String {
        let w = self.group.reduced_word(g);
        let mut parts: Vec<String> = w.letters.iter().map(|i| format!("s{i}")).collect();
        if !w.pi.is_identity() {
            let k = self.pis.iter().position(|p| *p == w.pi).expect("length-zero element");
            parts.push(format!("pi{k}"));
        }
        parts.join("*")
    }

    /// Normal form in the literal grammar, group parts in length-lexicographic order.
    pub fn format(&self, x: &DElem) -> String {
        let mut keyed: Vec<((usize, Vec<usize>, usize), &Element, &Poly)> = x
            .terms
            .iter()
            .map(|(g, p)| {
                let w = self.group.reduced_word(g);
                let pi = self.pis.iter().position(|q| *q == w.pi).unwrap_or(0);
                ((w.letters.len(), w.letters, pi), g, p)
            })
            .collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        let mut items = Vec::new();
        for (_, g, p) in keyed {
            let prefix = self.group_label(g);
            let mut mons: Vec<(&Monomial, &Rational)> = p.terms().collect();
            mons.reverse();
            for (m, c) in mons {
                items.push(fmt_signed_term(c, &prefix, m));
            }
        }
        join_signed(items)
    }

    pub fn parse(&self, s: &str) -> Result<DElem> {
        let mut p = Parser { alg: self, chars: s.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0 };
        let x = p.expr()?;
        if p.pos != p.chars.len() {
            return Err(Error::Parse(format!("unexpected '{}' at {}", p.chars[p.pos], p.pos)));
        }
        Ok(x)
    }
}

struct Parser<'a> {
    alg: &'a DDaha,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| Error::Parse(format!("expected a number at {start}")))
    }

    fn expr(&mut self) -> Result<DElem> {
        let mut neg = false;
        if self.peek() == Some('-') {
            self.pos += 1;
            neg = true;
        }
        let mut acc = self.term()?;
        if neg {
            acc = acc.scale(&-Rational::one());
        }
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == '+' { acc.add(&t) } else { acc.sub(&t) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<DElem> {
        let mut acc = self.power()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            let f = self.power()?;
            acc = self.alg.multiply(&acc, &f)?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<DElem> {
        let base = self.factor()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let k = self.number()?;
        let mut acc = self.alg.one();
        for _ in 0..k {
            acc = self.alg.multiply(&acc, &base)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<DElem> {
        let n = self.alg.nvars();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let x = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(Error::Parse(format!("expected ')' at {}", self.pos)));
                }
                self.pos += 1;
                Ok(x)
            }
            Some(c) if c.is_ascii_digit() => {
                let p = self.number()?;
                let mut q = 1u64;
                if self.peek() == Some('/') {
                    self.pos += 1;
                    q = self.number()?;
                    if q == 0 {
                        return Err(Error::Parse("zero denominator".into()));
                    }
                }
                let c = Rational::new((p as i64).into(), (q as i64).into());
                Ok(self.alg.poly(Poly::constant(n, c)))
            }
            Some('e') => {
                self.pos += 1;
                Ok(self.alg.one())
            }
            Some('s') => {
                self.pos += 1;
                let i = self.number()? as usize;
                self.alg.generator(i)
            }
            Some('x') => {
                self.pos += 1;
                let k = self.number()? as usize;
                if k == 0 || k > n {
                    return Err(Error::Parse(format!("variable x{k} out of range 1..={n}")));
                }
                Ok(self.alg.poly(Poly::var(n, k - 1)))
            }
            Some('p') if self.chars.get(self.pos + 1) == Some(&'i') => {
                self.pos += 2;
                let k = self.number()? as usize;
                let pi = self.alg.pis.get(k).ok_or_else(|| Error::Parse(format!("no length-zero element pi{k}")))?;
                Ok(self.alg.group_element(pi))
            }
            other => Err(Error::Parse(format!("unexpected {other:?} at {}", self.pos))),
        }
    }
}

/// Human-readable dump of a matrix with "p/q" entries.
pub fn format_matrix(m: &Matrix) -> String {
    let mut s = String::new();
    for row in m {
        let cells: Vec<String> = row.iter().map(rational::fmt_rational).collect();
        let _ = writeln!(s, "[{}]", cells.join(", "));
    }
    s
}
