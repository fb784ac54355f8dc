//! Finite and affine root systems with exact coordinates.
//!
//! Vectors of V* (roots, gradients of affine functions) are written in the
//! simple-root basis; vectors of V (points, cocharacters, coroots) in the
//! fundamental-coweight basis. The natural pairing between the two is the
//! plain dot product, and the Gram matrix converts V* to V.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::rational::{self, frac, rat, zero, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    BC,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CartanType::A => "A",
            CartanType::B => "B",
            CartanType::C => "C",
            CartanType::D => "D",
            CartanType::E => "E",
            CartanType::F => "F",
            CartanType::G => "G",
            CartanType::BC => "BC",
        };
        f.write_str(s)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "A" => CartanType::A,
            "B" => CartanType::B,
            "C" => CartanType::C,
            "D" => CartanType::D,
            "E" => CartanType::E,
            "F" => CartanType::F,
            "G" => CartanType::G,
            "BC" => CartanType::BC,
            other => return Err(Error::IllegalType(other.to_string())),
        })
    }
}

/// Parses labels such as `"A2"`, `"BC1"`, `"e8"`.
pub fn parse_type_label(s: &str) -> Result<(CartanType, usize)> {
    let s = s.trim();
    let split = s
        .find(|c: char| c.is_ascii_digit())
        .ok_or_else(|| Error::IllegalType(s.to_string()))?;
    let t: CartanType = s[..split].parse()?;
    let n: usize = s[split..].parse().map_err(|_| Error::IllegalType(s.to_string()))?;
    Ok((t, n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    /// Simple roots of V*.
    SimpleRoot,
    /// Fundamental coweights of V.
    FundamentalCoweight,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalVector {
    pub coords: Vec<Rational>,
    pub basis: Basis,
}

impl RationalVector {
    pub fn new(coords: Vec<Rational>, basis: Basis) -> Self {
        Self { coords, basis }
    }

    pub fn from_ints(coords: &[i64], basis: Basis) -> Self {
        Self::new(coords.iter().map(|&x| rat(x)).collect(), basis)
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

/// An affine function `x ↦ ⟨gradient, x⟩ + constant` on 𝔼 = V.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineFunction {
    /// Simple-root coordinates.
    pub gradient: Vec<Rational>,
    pub constant: Rational,
}

impl AffineFunction {
    pub fn new(gradient: Vec<Rational>, constant: Rational) -> Self {
        Self { gradient, constant }
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        linalg::dot(&self.gradient, x) + &self.constant
    }

    pub fn is_constant(&self) -> bool {
        self.gradient.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.gradient.iter().map(|g| g * c).collect(), &self.constant * c)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            self.gradient.iter().zip(&other.gradient).map(|(a, b)| a + b).collect(),
            &self.constant + &other.constant,
        )
    }
}

impl From<&AffineRoot> for AffineFunction {
    fn from(a: &AffineRoot) -> Self {
        Self::new(a.direction.iter().map(|&x| rat(x)).collect(), rat(a.level))
    }
}

/// An affine root `α + n`. Construct through [`AffineRootSystem::affine_root`]
/// so that the non-reduced parity rule is checked.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineRoot {
    pub direction: Vec<i64>,
    pub level: i64,
}

impl AffineRoot {
    pub(crate) fn new_unchecked(direction: Vec<i64>, level: i64) -> Self {
        Self { direction, level }
    }

    pub fn neg(&self) -> Self {
        Self::new_unchecked(self.direction.iter().map(|x| -x).collect(), -self.level)
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        rational::dot_int(&self.direction, x) + rat(self.level)
    }

    /// Positive on the fundamental alcove.
    pub fn is_positive(&self) -> bool {
        self.level > 0 || (self.level == 0 && is_positive_vector(&self.direction))
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {})", self.direction, self.level)
    }
}

pub(crate) fn is_positive_vector(v: &[i64]) -> bool {
    v.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
}

#[derive(Debug, Clone)]
pub struct FiniteRootSystem {
    cartan_type: CartanType,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    gram: Matrix,
    /// Positive roots in height order, followed by their negatives.
    roots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    highest: Vec<i64>,
}

fn cartan_matrix(t: CartanType, n: usize) -> Result<Vec<Vec<i64>>> {
    let legal = match t {
        CartanType::A => (1..=8).contains(&n),
        CartanType::B | CartanType::C => (2..=8).contains(&n),
        CartanType::D => (4..=8).contains(&n),
        CartanType::E => (6..=8).contains(&n),
        CartanType::F => n == 4,
        CartanType::G => n == 2,
        CartanType::BC => (1..=8).contains(&n),
    };
    if !legal {
        return Err(Error::IllegalType(format!("{t}{n}")));
    }
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match t {
        CartanType::A => (0..n.saturating_sub(1)).for_each(|i| link(i, i + 1, -1, -1)),
        CartanType::B | CartanType::BC => {
            (0..n.saturating_sub(2)).for_each(|i| link(i, i + 1, -1, -1));
            if n >= 2 {
                // α_n short
                link(n - 2, n - 1, -1, -2);
            }
        }
        CartanType::C => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            // α_n long
            link(n - 2, n - 1, -2, -1);
        }
        CartanType::D => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 3, n - 1, -1, -1);
        }
        CartanType::E => {
            for (i, j) in [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)] {
                if j < n {
                    link(i, j, -1, -1);
                }
            }
        }
        CartanType::F => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
        }
        CartanType::G => link(0, 1, -3, -1),
    }
    Ok(a)
}

/// Squared lengths of the simple roots: long roots 2, short roots 1
/// (2/3 for G2). For BC the simple short root `e_n` has length 1 and `2e_n` is 4.
fn simple_lengths(t: CartanType, n: usize) -> Vec<Rational> {
    let mut l = vec![rat(2); n];
    match t {
        CartanType::B | CartanType::BC => l[n - 1] = rat(1),
        CartanType::C => (0..n - 1).for_each(|i| l[i] = rat(1)),
        CartanType::F => {
            l[2] = rat(1);
            l[3] = rat(1);
        }
        CartanType::G => l[0] = frac(2, 3),
        _ => {}
    }
    l
}

impl FiniteRootSystem {
    pub fn build(t: CartanType, rank: usize) -> Result<Self> {
        Self::build_scaled(t, rank, &rat(1))
    }

    /// Same root data with the Gram matrix multiplied by `scale > 0`.
    pub fn build_scaled(t: CartanType, rank: usize, scale: &Rational) -> Result<Self> {
        if !scale.is_positive() {
            return Err(Error::InvalidRootData("Gram scale must be positive".into()));
        }
        let cartan = cartan_matrix(t, rank)?;
        let lengths = simple_lengths(t, rank);
        let gram: Matrix = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| rat(cartan[i][j]) * &lengths[i] / rat(2) * scale)
                    .collect()
            })
            .collect();
        let mut sys = Self {
            cartan_type: t,
            rank,
            cartan,
            gram,
            roots: Vec::new(),
            index: HashMap::new(),
            highest: Vec::new(),
        };
        sys.enumerate_roots();
        sys.check_invariants()?;
        Ok(sys)
    }

    fn enumerate_roots(&mut self) {
        let n = self.rank;
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(b) = queue.pop_front() {
            for j in 0..n {
                let r = self.simple_reflect(j, &b);
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        if self.cartan_type == CartanType::BC {
            let short = self.squared_length(&{
                let mut e = vec![0; n];
                e[n - 1] = 1;
                e
            });
            let doubled: Vec<Vec<i64>> = seen
                .iter()
                .filter(|b| self.squared_length(b) == short)
                .map(|b| b.iter().map(|x| 2 * x).collect())
                .collect();
            seen.extend(doubled);
        }
        let mut pos: Vec<Vec<i64>> = seen.into_iter().filter(|b| is_positive_vector(b)).collect();
        pos.sort_by_key(|b| (b.iter().sum::<i64>(), b.clone()));
        self.highest = pos.last().cloned().unwrap_or_default();
        let neg: Vec<Vec<i64>> = pos.iter().map(|b| b.iter().map(|x| -x).collect()).collect();
        self.roots = pos.into_iter().chain(neg).collect();
        self.index = self.roots.iter().enumerate().map(|(i, b)| (b.clone(), i)).collect();
    }

    fn check_invariants(&self) -> Result<()> {
        if !linalg::is_positive_definite(&self.gram) {
            return Err(Error::InvalidRootData("Gram matrix is not positive definite".into()));
        }
        for i in 0..self.rank {
            for j in 0..self.rank {
                if self.gram[i][j] != self.gram[j][i] {
                    return Err(Error::InvalidRootData("Gram matrix is not symmetric".into()));
                }
                let expect = rat(2) * &self.gram[i][j] / &self.gram[i][i];
                if expect != rat(self.cartan[i][j]) {
                    return Err(Error::InvalidRootData(format!(
                        "⟨α{}∨, α{}⟩ disagrees with the Gram matrix",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        for b in &self.roots {
            for j in 0..self.rank {
                if !self.index.contains_key(&self.simple_reflect(j, b)) {
                    return Err(Error::InvalidRootData("root set not closed under reflections".into()));
                }
            }
        }
        Ok(())
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.cartan_type, self.rank)
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.roots[..self.roots.len() / 2]
    }

    pub fn is_root(&self, b: &[i64]) -> bool {
        self.index.contains_key(b)
    }

    pub fn root_index(&self, b: &[i64]) -> Option<usize> {
        self.index.get(b).copied()
    }

    pub fn highest_root(&self) -> &[i64] {
        &self.highest
    }

    pub fn is_reduced(&self) -> bool {
        self.cartan_type != CartanType::BC
    }

    /// `α ∈ 2Q_R`.
    pub fn in_twice_root_lattice(&self, b: &[i64]) -> bool {
        b.iter().all(|x| x % 2 == 0)
    }

    pub fn simple_root(&self, i: usize) -> Vec<i64> {
        let mut e = vec![0; self.rank];
        e[i] = 1;
        e
    }

    pub fn simple_roots(&self) -> Vec<RationalVector> {
        (0..self.rank)
            .map(|i| RationalVector::from_ints(&self.simple_root(i), Basis::SimpleRoot))
            .collect()
    }

    /// `α_i∨` in coweight coordinates is row `i` of the Cartan matrix.
    pub fn simple_coroots(&self) -> Vec<RationalVector> {
        self.cartan
            .iter()
            .map(|row| RationalVector::from_ints(row, Basis::FundamentalCoweight))
            .collect()
    }

    /// Fundamental weights in simple-root coordinates.
    pub fn weight_lattice_basis(&self) -> Vec<RationalVector> {
        let inv = linalg::inverse(&linalg::from_int(&self.cartan)).expect("Cartan matrix is invertible");
        (0..self.rank)
            .map(|i| RationalVector::new(inv.iter().map(|row| row[i].clone()).collect(), Basis::SimpleRoot))
            .collect()
    }

    pub fn root_lattice_basis(&self) -> Vec<RationalVector> {
        self.simple_roots()
    }

    /// A ℤ-basis of the coroot lattice ℤR∨ in coweight coordinates.
    pub fn coroot_lattice_basis(&self) -> Vec<Vec<i64>> {
        let mut rows = self.cartan.clone();
        if self.cartan_type == CartanType::BC {
            // (2α_n)∨ = α_n∨ / 2 is the primitive generator
            let last = self.rank - 1;
            rows[last] = rows[last].iter().map(|x| x / 2).collect();
        }
        rows
    }

    pub fn in_coroot_lattice(&self, mu: &[i64]) -> bool {
        let basis = self.coroot_lattice_basis();
        let a = linalg::transpose(&linalg::from_int(&basis));
        let b: Vec<Rational> = mu.iter().map(|&x| rat(x)).collect();
        linalg::solve(&a, &b).is_some_and(|c| c.iter().all(|x| x.is_integer()))
    }

    pub fn squared_length(&self, b: &[i64]) -> Rational {
        let v: Vec<Rational> = b.iter().map(|&x| rat(x)).collect();
        linalg::bilinear(&self.gram, &v, &v)
    }

    /// `⟨α_j∨, β⟩`.
    pub fn simple_coroot_pairing(&self, j: usize, b: &[i64]) -> i64 {
        self.cartan[j].iter().zip(b).map(|(a, x)| a * x).sum()
    }

    pub fn simple_reflect(&self, j: usize, b: &[i64]) -> Vec<i64> {
        let c = self.simple_coroot_pairing(j, b);
        let mut r = b.to_vec();
        r[j] -= c;
        r
    }

    /// `G β`: the vector of V paired with β by the scalar product.
    pub fn sharp(&self, b: &[Rational]) -> Vec<Rational> {
        linalg::mat_vec(&self.gram, b)
    }

    /// `α∨ = 2α/|α|²` in coweight coordinates; integral for every root.
    pub fn coroot_of(&self, b: &[i64]) -> Vec<i64> {
        let v: Vec<Rational> = b.iter().map(|&x| rat(x)).collect();
        let len = linalg::bilinear(&self.gram, &v, &v);
        self.sharp(&v)
            .iter()
            .map(|x| {
                let c = rat(2) * x / &len;
                rational::to_i64(&c).expect("coroots pair integrally with roots")
            })
            .collect()
    }

    pub fn pairing(&self, f: &AffineFunction, g: &AffineFunction) -> Rational {
        linalg::bilinear(&self.gram, &f.gradient, &g.gradient)
    }

    /// `f∨ = 2f / |f|²`.
    pub fn coroot(&self, f: &AffineFunction) -> Result<AffineFunction> {
        if f.is_constant() {
            return Err(Error::ConstantFunction);
        }
        let len = self.pairing(f, f);
        Ok(f.scale(&(rat(2) / len)))
    }

    /// Orthogonal reflection of 𝔼 in the zero set of `f`: `x − f(x)·(∂f∨)♯`.
    pub fn reflect_point(&self, f: &AffineFunction, x: &[Rational]) -> Result<Vec<Rational>> {
        let fv = self.coroot(f)?;
        let dir = self.sharp(&fv.gradient);
        let fx = f.eval(x);
        Ok(x.iter().zip(&dir).map(|(xi, di)| xi - &fx * di).collect())
    }

    /// `s_f(g) = g − ⟨f∨, g⟩ f`.
    pub fn reflect_fn(&self, f: &AffineFunction, g: &AffineFunction) -> Result<AffineFunction> {
        let fv = self.coroot(f)?;
        let c = self.pairing(&fv, g);
        Ok(g.add(&f.scale(&-c)))
    }

    pub fn is_irreducible(&self) -> bool {
        let n = self.rank;
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if !seen[j] && self.cartan[i][j] != 0 {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|b| b)
    }

    pub fn to_json(&self) -> RootDataJson {
        RootDataJson {
            cartan_type: self.cartan_type.to_string(),
            rank: self.rank,
            cartan: self.cartan.clone(),
            gram: self.gram.clone(),
        }
    }

    /// Rebuilds from serialized data, rejecting anything that disagrees with
    /// the standard tables up to a global positive rescaling of the Gram matrix.
    pub fn from_json(data: &RootDataJson) -> Result<Self> {
        let t: CartanType = data.cartan_type.parse()?;
        let base = Self::build(t, data.rank)?;
        if data.cartan != base.cartan {
            return Err(Error::InvalidRootData("Cartan matrix does not match the type".into()));
        }
        if data.gram.len() != data.rank || data.gram.iter().any(|r| r.len() != data.rank) {
            return Err(Error::InvalidRootData("Gram matrix has the wrong shape".into()));
        }
        let scale = &data.gram[0][0] / &base.gram[0][0];
        let sys = Self::build_scaled(t, data.rank, &scale)?;
        if sys.gram != data.gram {
            return Err(Error::InvalidRootData("Gram matrix is not a multiple of the standard one".into()));
        }
        Ok(sys)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootDataJson {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    #[serde(with = "rational::serde_rational_mat")]
    pub gram: Matrix,
}

/// The affinization of an irreducible finite root system, with base
/// `Δ = {a_0, α_1, …, α_n}` where `a_0 = 1 − θ`. Node `0` is `a_0`.
#[derive(Debug, Clone)]
pub struct AffineRootSystem {
    finite: FiniteRootSystem,
    simples: Vec<AffineRoot>,
    interior: Vec<Rational>,
}

impl AffineRootSystem {
    pub fn affinize(finite: FiniteRootSystem) -> Result<Self> {
        if !finite.is_irreducible() {
            return Err(Error::NotIrreducible);
        }
        let n = finite.rank();
        let theta = finite.highest_root().to_vec();
        let mut simples = vec![AffineRoot::new_unchecked(theta.iter().map(|x| -x).collect(), 1)];
        simples.extend((0..n).map(|i| AffineRoot::new_unchecked(finite.simple_root(i), 0)));
        // barycenter of the alcove vertices 0 and ϖ_i∨ / c_i
        let interior: Vec<Rational> = theta.iter().map(|&c| frac(1, c * (n as i64 + 1))).collect();
        let sys = Self { finite, simples, interior };
        for a in &sys.simples {
            if !sys.contains(&a.direction, a.level) {
                return Err(Error::InvalidRootData("simple affine root outside S".into()));
            }
            if !a.eval(&sys.interior).is_positive() {
                return Err(Error::InvalidRootData("fundamental alcove is empty".into()));
            }
        }
        Ok(sys)
    }

    pub fn finite(&self) -> &FiniteRootSystem {
        &self.finite
    }

    pub fn rank(&self) -> usize {
        self.finite.rank()
    }

    /// Membership in `S`: levels are arbitrary unless `α ∈ 2Q_R`, where they must be odd.
    pub fn contains(&self, direction: &[i64], level: i64) -> bool {
        self.finite.is_root(direction) && (!self.finite.in_twice_root_lattice(direction) || level.rem_euclid(2) == 1)
    }

    pub fn affine_root(&self, direction: Vec<i64>, level: i64) -> Result<AffineRoot> {
        if !self.finite.is_root(&direction) {
            return Err(Error::NotAnAffineRoot {
                direction,
                level,
                reason: "gradient is not a root",
            });
        }
        if self.finite.in_twice_root_lattice(&direction) && level.rem_euclid(2) != 1 {
            return Err(Error::NotAnAffineRoot {
                direction,
                level,
                reason: "roots in 2Q_R only occur at odd levels",
            });
        }
        Ok(AffineRoot::new_unchecked(direction, level))
    }

    pub fn simple(&self, i: usize) -> &AffineRoot {
        &self.simples[i]
    }

    pub fn simples(&self) -> &[AffineRoot] {
        &self.simples
    }

    pub fn a0(&self) -> &AffineRoot {
        &self.simples[0]
    }

    /// `δ = a_0 + θ`, which is the constant function 1.
    pub fn delta(&self) -> AffineFunction {
        let theta = AffineFunction::from(&AffineRoot::new_unchecked(self.finite.highest_root().to_vec(), 0));
        AffineFunction::from(self.a0()).add(&theta)
    }

    /// An explicit rational point of the open fundamental alcove.
    pub fn alcove_interior_point(&self) -> &[Rational] {
        &self.interior
    }

    /// Vertices of the closed fundamental alcove, indexed like `Δ`:
    /// vertex `i` is where every simple root except `a_i` vanishes.
    pub fn alcove_vertices(&self) -> Vec<Vec<Rational>> {
        let n = self.rank();
        let theta = self.finite.highest_root();
        let mut v = vec![vec![zero(); n]];
        for i in 0..n {
            let mut p = vec![zero(); n];
            p[i] = frac(1, theta[i]);
            v.push(p);
        }
        v
    }

    /// Smallest positive constant multiple of `δ` among the simple-root combination, i.e. the
    /// marks `a_0 + Σ c_i α_i = δ` with `c_0 = 1`.
    pub fn marks(&self) -> Vec<i64> {
        std::iter::once(1).chain(self.finite.highest_root().iter().copied()).collect()
    }

    /// Linear independence of `Δ` as affine functions.
    pub fn simples_independent(&self) -> bool {
        let m: Matrix = self
            .simples
            .iter()
            .map(|a| {
                let f = AffineFunction::from(a);
                let mut r = f.gradient.clone();
                r.push(f.constant);
                r
            })
            .collect();
        linalg::rank(&m) == self.simples.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(t: CartanType, n: usize) -> FiniteRootSystem {
        FiniteRootSystem::build(t, n).unwrap()
    }

    #[test]
    fn a1_roots_and_coroot() {
        let a1 = sys(CartanType::A, 1);
        assert_eq!(a1.roots(), &[vec![1], vec![-1]]);
        assert_eq!(a1.simple_coroot_pairing(0, &[1]), 2);
    }

    #[test]
    fn root_counts() {
        for (t, n, count) in [
            (CartanType::A, 2, 6),
            (CartanType::B, 2, 8),
            (CartanType::C, 3, 18),
            (CartanType::D, 4, 24),
            (CartanType::G, 2, 12),
            (CartanType::F, 4, 48),
            (CartanType::E, 6, 72),
            (CartanType::E, 7, 126),
            (CartanType::E, 8, 240),
            (CartanType::BC, 2, 12),
        ] {
            assert_eq!(sys(t, n).roots().len(), count, "{t}{n}");
        }
    }

    #[test]
    fn bc1_is_non_reduced() {
        let bc = sys(CartanType::BC, 1);
        let roots: BTreeSet<_> = bc.roots().iter().cloned().collect();
        assert_eq!(roots, [vec![1], vec![-1], vec![2], vec![-2]].into_iter().collect());
        assert!(bc.in_twice_root_lattice(&[2]));
        assert!(!bc.in_twice_root_lattice(&[1]));
        assert_eq!(bc.squared_length(&[1]), rat(1));
        assert_eq!(bc.squared_length(&[2]), rat(4));
    }

    #[test]
    fn illegal_types() {
        assert!(matches!(FiniteRootSystem::build(CartanType::D, 3), Err(Error::IllegalType(_))));
        assert!(matches!(FiniteRootSystem::build(CartanType::G, 3), Err(Error::IllegalType(_))));
        assert!(matches!(FiniteRootSystem::build(CartanType::A, 9), Err(Error::IllegalType(_))));
        assert!(FiniteRootSystem::build(CartanType::B, 1).is_err());
    }

    #[test]
    fn highest_roots() {
        assert_eq!(sys(CartanType::A, 2).highest_root(), &[1, 1]);
        assert_eq!(sys(CartanType::B, 2).highest_root(), &[1, 2]);
        assert_eq!(sys(CartanType::C, 2).highest_root(), &[2, 1]);
        assert_eq!(sys(CartanType::G, 2).highest_root(), &[3, 2]);
        assert_eq!(sys(CartanType::BC, 1).highest_root(), &[2]);
    }

    #[test]
    fn affinization_membership() {
        let a1 = AffineRootSystem::affinize(sys(CartanType::A, 1)).unwrap();
        assert!(a1.contains(&[1], 3));
        assert!(a1.contains(&[1], 0));
        let bc1 = AffineRootSystem::affinize(sys(CartanType::BC, 1)).unwrap();
        assert!(!bc1.contains(&[2], 2));
        assert!(bc1.contains(&[2], 1));
        assert!(bc1.affine_root(vec![2], 0).is_err());
        assert!(bc1.affine_root(vec![1], 0).is_ok());
        let a2 = AffineRootSystem::affinize(sys(CartanType::A, 2)).unwrap();
        assert_eq!(a2.a0(), &AffineRoot::new_unchecked(vec![-1, -1], 1));
    }

    #[test]
    fn affine_invariants() {
        for (t, n) in [(CartanType::A, 3), (CartanType::C, 2), (CartanType::G, 2), (CartanType::BC, 2), (CartanType::E, 8)] {
            let aff = AffineRootSystem::affinize(sys(t, n)).unwrap();
            assert!(aff.simples_independent());
            let delta = aff.delta();
            assert!(delta.is_constant());
            assert_eq!(delta.constant, rat(1));
            for a in aff.simples() {
                assert!(a.eval(aff.alcove_interior_point()).is_positive());
            }
        }
    }

    #[test]
    fn coroot_examples() {
        let a1 = sys(CartanType::A, 1);
        let alpha = AffineFunction::new(vec![rat(1)], rat(0));
        assert_eq!(a1.coroot(&alpha).unwrap(), alpha);
        let shifted = AffineFunction::new(vec![rat(1)], rat(1));
        assert_eq!(a1.coroot(&shifted).unwrap(), shifted);
        // long root α1 of B2 under a Gram rescaling making it length 4
        let b2 = FiniteRootSystem::build_scaled(CartanType::B, 2, &rat(2)).unwrap();
        let beta = AffineFunction::new(vec![rat(1), rat(0)], rat(3));
        assert_eq!(b2.pairing(&beta, &beta), rat(4));
        assert_eq!(
            b2.coroot(&beta).unwrap(),
            AffineFunction::new(vec![frac(1, 2), rat(0)], frac(3, 2))
        );
        assert_eq!(a1.coroot(&AffineFunction::new(vec![rat(0)], rat(1))), Err(Error::ConstantFunction));
    }

    #[test]
    fn reflection_examples() {
        let a1 = sys(CartanType::A, 1);
        let alpha = AffineFunction::new(vec![rat(1)], rat(0));
        let neg = AffineFunction::new(vec![rat(-1)], rat(0));
        assert_eq!(a1.reflect_fn(&alpha, &alpha).unwrap(), neg);
        let g = AffineFunction::new(vec![rat(1)], rat(1));
        assert_eq!(
            a1.reflect_fn(&alpha, &g).unwrap(),
            AffineFunction::new(vec![rat(-1)], rat(1))
        );
        let f = AffineFunction::new(vec![rat(1)], rat(-1));
        assert_eq!(a1.reflect_point(&f, &[rat(1)]).unwrap(), vec![rat(1)]);
        // α(x) = x for A1 in coweight coordinates; reflect 3 across x = 1
        assert_eq!(a1.reflect_point(&f, &[rat(3)]).unwrap(), vec![rat(-1)]);
    }

    #[test]
    fn pairing_examples() {
        let a1 = sys(CartanType::A, 1);
        let f = AffineFunction::new(vec![rat(1)], rat(5));
        let g = AffineFunction::new(vec![rat(1)], rat(-7));
        assert_eq!(a1.pairing(&f, &g), rat(2));
        let a2 = sys(CartanType::A, 2);
        let a1f = AffineFunction::new(vec![rat(1), rat(0)], rat(0));
        let a2f = AffineFunction::new(vec![rat(0), rat(1)], rat(0));
        assert_eq!(a2.pairing(&a1f, &a2f), rat(-1));
    }

    #[test]
    fn json_round_trip_and_rejection() {
        let b2 = sys(CartanType::B, 2);
        let json = serde_json::to_string(&b2.to_json()).unwrap();
        assert!(json.contains("\"type\":\"B\""));
        let back: RootDataJson = serde_json::from_str(&json).unwrap();
        assert_eq!(FiniteRootSystem::from_json(&back).unwrap().roots(), b2.roots());
        let mut bad = b2.to_json();
        bad.cartan[0][1] = -2;
        assert!(FiniteRootSystem::from_json(&bad).is_err());
        let mut bad_gram = b2.to_json();
        bad_gram.gram[1][1] = rat(3);
        assert!(FiniteRootSystem::from_json(&bad_gram).is_err());
    }

    #[test]
    fn coroot_lattice_membership() {
        let a1 = sys(CartanType::A, 1);
        assert!(a1.in_coroot_lattice(&[2]));
        assert!(!a1.in_coroot_lattice(&[1]));
        let bc1 = sys(CartanType::BC, 1);
        assert!(bc1.in_coroot_lattice(&[1]));
    }
}
