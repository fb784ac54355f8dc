//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::rational::{frac, Rational};
use crate::root_system::AffineFunction;

/// Exponent vectors ordered by total degree, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    pub fn var(nvars: usize, k: usize) -> Self {
        let mut e = vec![0; nvars];
        e[k] = 1;
        Self(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, o: &Self) -> Self {
        Self(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        (self.degree(), &self.0).cmp(&(o.degree(), &o.0))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn var(nvars: usize, k: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::var(nvars, k), Rational::one());
        p
    }

    /// An affine function whose gradient is read in the variable basis.
    pub fn from_affine(f: &AffineFunction) -> Self {
        let n = f.gradient.len();
        let mut p = Self::constant(n, f.constant.clone());
        for (k, c) in f.gradient.iter().enumerate() {
            p.add_term(Monomial::var(n, k), c.clone());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self { nvars: self.nvars, terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                r.add_term(m1.mul(m2), c1 * c2);
            }
        }
        r
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.nvars), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        self.terms
            .iter()
            .map(|(m, c)| {
                m.0.iter()
                    .zip(x)
                    .fold(c.clone(), |acc, (e, xi)| acc * num_traits::pow(xi.clone(), *e as usize))
            })
            .sum()
    }

    /// Replace each variable `x_k` by `images[k]`.
    pub fn substitute(&self, images: &[Poly]) -> Self {
        let n = images.first().map_or(self.nvars, |p| p.nvars);
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|p| vec![Poly::one(n), p.clone()]).collect();
        let mut r = Self::zero(n);
        for (m, c) in &self.terms {
            let mut t = Self::constant(n, c.clone());
            for (k, &e) in m.0.iter().enumerate() {
                while powers[k].len() <= e as usize {
                    let next = powers[k].last().expect("nonempty").mul(&images[k]);
                    powers[k].push(next);
                }
                t = t.mul(&powers[k][e as usize]);
            }
            r = r.add(&t);
        }
        r
    }

    /// Exact quotient by a polynomial of degree one.
    pub fn div_linear(&self, l: &Self) -> Result<Self> {
        let n = self.nvars;
        let pivot = (0..n)
            .rev()
            .find(|&k| !l.coefficient(&Monomial::var(n, k)).is_zero())
            .ok_or_else(|| Error::DivisionNotExact("divisor is constant".into()))?;
        if l.degree() != 1 {
            return Err(Error::DivisionNotExact("divisor is not of degree one".into()));
        }
        let lead = l.coefficient(&Monomial::var(n, pivot));
        let mut rem = self.clone();
        let mut q = Self::zero(n);
        loop {
            let top = rem
                .terms
                .iter()
                .filter(|(m, _)| m.0[pivot] > 0)
                .max_by_key(|(m, _)| (m.0[pivot], (*m).clone()))
                .map(|(m, c)| (m.clone(), c.clone()));
            let Some((m, c)) = top else { break };
            let mut e = m.0.clone();
            e[pivot] -= 1;
            let mut t = Self::zero(n);
            t.add_term(Monomial(e), c / &lead);
            rem = rem.sub(&t.mul(l));
            q = q.add(&t);
        }
        if !rem.is_zero() {
            return Err(Error::DivisionNotExact(format!("remainder {rem}")));
        }
        Ok(q)
    }

    /// Random polynomial of degree at most `deg` with small coefficients.
    pub fn random<R: Rng>(rng: &mut R, nvars: usize, deg: u32, max_terms: usize) -> Self {
        let mut p = Self::zero(nvars);
        let k = rng.gen_range(1..=max_terms);
        for _ in 0..k {
            let mut e = vec![0u32; nvars];
            let d = rng.gen_range(0..=deg);
            for _ in 0..d {
                e[rng.gen_range(0..nvars)] += 1;
            }
            let num = rng.gen_range(-5i64..=5);
            let den = rng.gen_range(1i64..=3);
            p.add_term(Monomial(e), frac(num, den));
        }
        p
    }
}

fn fmt_coef(c: &Rational) -> String {
    if c.is_integer() {
        c.to_string()
    } else {
        format!("({c})")
    }
}

/// Monomial part, e.g. `x1^2*x2`; empty for the unit.
pub fn fmt_monomial(m: &Monomial) -> String {
    m.0.iter()
        .enumerate()
        .filter(|(_, e)| **e > 0)
        .map(|(k, e)| if *e == 1 { format!("x{}", k + 1) } else { format!("x{}^{}", k + 1, e) })
        .collect::<Vec<_>>()
        .join("*")
}

/// Formats `c * prefix * m` with the sign split off; `prefix` may be empty.
pub(crate) fn fmt_signed_term(c: &Rational, prefix: &str, m: &Monomial) -> (bool, String) {
    let neg = c.is_negative();
    let a = c.abs();
    let mono = fmt_monomial(m);
    let mut parts = Vec::new();
    if !a.is_one() || (prefix.is_empty() && mono.is_empty()) {
        parts.push(fmt_coef(&a));
    }
    if !prefix.is_empty() {
        parts.push(prefix.to_string());
    }
    if !mono.is_empty() {
        parts.push(mono);
    }
    (neg, parts.join("*"))
}

pub(crate) fn join_signed(items: impl IntoIterator<Item = (bool, String)>) -> String {
    let mut s = String::new();
    for (i, (neg, t)) in items.into_iter().enumerate() {
        match (i, neg) {
            (0, false) => s.push_str(&t),
            (0, true) => s.push_str(&format!("-{t}")),
            (_, false) => s.push_str(&format!(" + {t}")),
            (_, true) => s.push_str(&format!(" - {t}")),
        }
    }
    if s.is_empty() {
        "0".into()
    } else {
        s
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items = self.terms.iter().rev().map(|(m, c)| fmt_signed_term(c, "", m));
        write!(f, "{}", join_signed(items))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use crate::rational::rat;

    #[test]
    fn arithmetic_and_display() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let p = x.add(&y).pow(2);
        assert_eq!(p.to_string(), "x1^2 + 2*x1*x2 + x2^2");
        assert_eq!(p.sub(&p), Poly::zero(2));
        assert_eq!(x.scale(&frac(-3, 2)).add(&Poly::one(2)).to_string(), "-(3/2)*x1 + 1");
        assert_eq!(p.eval(&[rat(1), rat(2)]), rat(9));
    }

    #[test]
    fn exact_division() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let l = Poly::from_affine(&AffineFunction::new(vec![rat(-1), rat(-2)], rat(1)));
        for _ in 0..50 {
            let q = Poly::random(&mut rng, 2, 3, 4);
            assert_eq!(q.mul(&l).div_linear(&l).unwrap(), q);
        }
        assert!(matches!(Poly::var(2, 0).div_linear(&Poly::var(2, 1)), Err(Error::DivisionNotExact(_))));
    }

    #[test]
    fn substitution() {
        let x = Poly::var(1, 0);
        let img = vec![Poly::one(1).sub(&x)];
        let p = x.pow(2).add(&x);
        assert_eq!(p.substitute(&img).substitute(&img), p);
    }
}
