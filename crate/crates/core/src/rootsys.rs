//! Irreducible reduced root systems with exact rational coordinates.
//!
//! Roots live in the ε-basis of a Euclidean space and the bilinear form is
//! the standard dot product. Normalizations:
//!
//! | family | ambient | short² | long² |
//! |--------|---------|--------|-------|
//! | A_l    | ℝ^{l+1} | –      | 2     |
//! | B_l    | ℝ^l     | 1 (±ε_i) | 2   |
//! | C_l    | ℝ^l     | 2      | 4 (±2ε_i) |
//! | D_l    | ℝ^l     | –      | 2     |
//! | E6,E7,E8 | ℝ^8   | –      | 2     |
//! | F4     | ℝ^4     | 1      | 2     |
//! | G2     | ℝ^3     | 2      | 6     |
//!
//! The root list is sorted lexicographically on coordinates, so root
//! indices order the same way as the roots themselves.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::OnceLock;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weyl::{Perm, WeylGroup};

pub type Rat = Rational64;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n)
}

pub fn ratf(n: i64, d: i64) -> Rat {
    Rat::new(n, d)
}

/// A vector in the ambient Euclidean space, compared lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Vector(pub Vec<Rat>);

pub type Root = Vector;
pub type Weight = Vector;

impl Vector {
    pub fn zeros(n: usize) -> Self {
        Vector(vec![Rat::zero(); n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = Rat::one();
        v
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Vector(xs.iter().map(|&x| rat(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn dot(&self, other: &Vector) -> Rat {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn norm_sq(&self) -> Rat {
        self.dot(self)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: Rat) -> Vector {
        Vector(self.0.iter().map(|x| x * c).collect())
    }

    /// Coordinates rendered as strings such as `"1/2"` or `"-1"`.
    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl Add<&Vector> for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Vector> for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<&Vector> for Rat {
    type Output = Vector;
    fn mul(self, rhs: &Vector) -> Vector {
        rhs.scale(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(Error::Parse(format!(
                "unknown root system family '{other}'"
            ))),
        }
    }
}

/// W-orbit of roots selected by length. Simply-laced systems have a single
/// class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LengthClass {
    Short,
    Long,
    Unique,
}

impl fmt::Display for LengthClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LengthClass::Short => "short",
            LengthClass::Long => "long",
            LengthClass::Unique => "unique",
        })
    }
}

pub fn validate_type(family: Family, rank: usize) -> Result<()> {
    let bad = |reason: &str| {
        Err(Error::InvalidType {
            family: family.to_string(),
            rank,
            reason: reason.to_string(),
        })
    };
    match family {
        Family::A if rank < 1 => bad("type A requires rank >= 1"),
        Family::B if rank < 2 => bad("type B requires rank >= 2"),
        Family::C if rank < 2 => bad("type C requires rank >= 2"),
        Family::D if rank < 3 => bad("type D requires rank >= 3"),
        Family::E if !(6..=8).contains(&rank) => bad("type E requires rank 6, 7 or 8"),
        Family::F if rank != 4 => bad("type F requires rank 4"),
        Family::G if rank != 2 => bad("type G requires rank 2"),
        _ => Ok(()),
    }
}

/// Number of roots of an irreducible system.
pub fn root_count(family: Family, rank: usize) -> usize {
    let l = rank;
    match family {
        Family::A => l * (l + 1),
        Family::B | Family::C => 2 * l * l,
        Family::D => 2 * l * (l - 1),
        Family::E => [72, 126, 240][l - 6],
        Family::F => 48,
        Family::G => 12,
    }
}

/// Order of the Weyl group.
pub fn weyl_group_order(family: Family, rank: usize) -> u128 {
    let fact = |n: usize| (1..=n as u128).product::<u128>();
    match family {
        Family::A => fact(rank + 1),
        Family::B | Family::C => (1u128 << rank) * fact(rank),
        Family::D => (1u128 << (rank - 1)) * fact(rank),
        Family::E => [51_840, 2_903_040, 696_729_600][rank - 6],
        Family::F => 1152,
        Family::G => 12,
    }
}

fn simple_roots_for(family: Family, rank: usize) -> (usize, Vec<Vector>) {
    let l = rank;
    let e = |n: usize, i: usize| Vector::unit(n, i);
    let diff = |n: usize, i: usize, j: usize| &e(n, i) - &e(n, j);
    let half = ratf(1, 2);
    match family {
        Family::A => (l + 1, (0..l).map(|i| diff(l + 1, i, i + 1)).collect()),
        Family::B => {
            let mut s: Vec<_> = (0..l - 1).map(|i| diff(l, i, i + 1)).collect();
            s.push(e(l, l - 1));
            (l, s)
        }
        Family::C => {
            let mut s: Vec<_> = (0..l - 1).map(|i| diff(l, i, i + 1)).collect();
            s.push(e(l, l - 1).scale(rat(2)));
            (l, s)
        }
        Family::D => {
            let mut s: Vec<_> = (0..l - 1).map(|i| diff(l, i, i + 1)).collect();
            s.push(&e(l, l - 2) + &e(l, l - 1));
            (l, s)
        }
        Family::E => {
            // Bourbaki numbering inside E8; E6 and E7 use the first simple roots.
            let n = 8;
            let mut a1 = Vector(vec![-half; 8]);
            a1.0[0] = half;
            a1.0[7] = half;
            let mut s = vec![
                a1,
                &e(n, 0) + &e(n, 1),
                diff(n, 1, 0),
                diff(n, 2, 1),
                diff(n, 3, 2),
                diff(n, 4, 3),
                diff(n, 5, 4),
                diff(n, 6, 5),
            ];
            s.truncate(l);
            (n, s)
        }
        Family::F => {
            let n = 4;
            (
                n,
                vec![
                    diff(n, 1, 2),
                    diff(n, 2, 3),
                    e(n, 3),
                    Vector(vec![half, -half, -half, -half]),
                ],
            )
        }
        Family::G => (3, vec![diff(3, 0, 1), Vector::from_ints(&[-2, 1, 1])]),
    }
}

/// Solve the square system `a x = b` over the rationals (small sizes only).
fn solve_rat(mut a: Vec<Vec<Rat>>, mut b: Vec<Rat>) -> Option<Vec<Rat>> {
    let n = a.len();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(p, col);
        b.swap(p, col);
        let inv = a[col][col].recip();
        for j in col..n {
            a[col][j] *= inv;
        }
        b[col] *= inv;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in col..n {
                    let v = f * a[col][j];
                    a[r][j] -= v;
                }
                let v = f * b[col];
                b[r] -= v;
            }
        }
    }
    Some(b)
}

#[derive(Debug)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    ambient_dim: usize,
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
    simple: Vec<usize>,
    simple_coords: Vec<Vec<i64>>,
    lowest_root: usize,
    marks: Vec<u32>,
    gram: Vec<Vec<Rat>>,
    cartan: Vec<Vec<i64>>,
    fundamental_weights: Vec<Weight>,
    reflections: Vec<Perm>,
    negation: Vec<usize>,
    weyl: OnceLock<WeylGroup>,
}

impl Clone for RootSystem {
    fn clone(&self) -> Self {
        RootSystem {
            family: self.family,
            rank: self.rank,
            ambient_dim: self.ambient_dim,
            roots: self.roots.clone(),
            index: self.index.clone(),
            simple: self.simple.clone(),
            simple_coords: self.simple_coords.clone(),
            lowest_root: self.lowest_root,
            marks: self.marks.clone(),
            gram: self.gram.clone(),
            cartan: self.cartan.clone(),
            fundamental_weights: self.fundamental_weights.clone(),
            reflections: self.reflections.clone(),
            negation: self.negation.clone(),
            weyl: OnceLock::new(),
        }
    }
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family && self.rank == other.rank && self.roots == other.roots
    }
}

/// JSON form of a root system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemJson {
    pub family: Family,
    pub rank: usize,
    pub roots: Vec<Vec<String>>,
}

pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    validate_type(family, rank)?;
    let (ambient_dim, simple_roots) = simple_roots_for(family, rank);

    let reflect = |v: &Vector, a: &Vector| {
        let c = v.dot(a) * rat(2) / a.norm_sq();
        v - &a.scale(c)
    };

    // W-orbit of the simple roots under simple reflections.
    let mut seen: HashMap<Vector, ()> = HashMap::new();
    let mut queue: VecDeque<Vector> = VecDeque::new();
    for a in &simple_roots {
        if seen.insert(a.clone(), ()).is_none() {
            queue.push_back(a.clone());
        }
    }
    while let Some(v) = queue.pop_front() {
        for a in &simple_roots {
            let w = reflect(&v, a);
            if seen.insert(w.clone(), ()).is_none() {
                queue.push_back(w);
            }
        }
    }
    let mut roots: Vec<Root> = seen.into_keys().collect();
    roots.sort();
    let expected = root_count(family, rank);
    if roots.len() != expected {
        return Err(Error::Invariant(format!(
            "{family}{rank}: generated {} roots, expected {expected}",
            roots.len()
        )));
    }
    let index: HashMap<Root, usize> = roots
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, r)| (r, i))
        .collect();

    // Coordinates in the basis of simple roots.
    let simple_gram: Vec<Vec<Rat>> = simple_roots
        .iter()
        .map(|a| simple_roots.iter().map(|b| a.dot(b)).collect())
        .collect();
    let mut simple_coords = Vec::with_capacity(roots.len());
    for r in &roots {
        let rhs: Vec<Rat> = simple_roots.iter().map(|a| r.dot(a)).collect();
        let c = solve_rat(simple_gram.clone(), rhs)
            .ok_or_else(|| Error::Invariant("simple roots are linearly dependent".into()))?;
        let recon = c
            .iter()
            .zip(&simple_roots)
            .fold(Vector::zeros(ambient_dim), |acc, (ci, a)| {
                &acc + &a.scale(*ci)
            });
        if &recon != r || c.iter().any(|x| !x.is_integer()) {
            return Err(Error::Invariant(format!(
                "root {r} is not an integral combination of simple roots"
            )));
        }
        let ci: Vec<i64> = c.iter().map(|x| x.to_integer()).collect();
        if !(ci.iter().all(|&x| x >= 0) || ci.iter().all(|&x| x <= 0)) {
            return Err(Error::Invariant(format!(
                "root {r} has mixed-sign simple coordinates"
            )));
        }
        simple_coords.push(ci);
    }

    let simple: Vec<usize> = simple_roots.iter().map(|a| index[a]).collect();
    let highest = (0..roots.len())
        .max_by_key(|&i| simple_coords[i].iter().sum::<i64>())
        .expect("nonempty root system");
    let marks: Vec<u32> = simple_coords[highest].iter().map(|&x| x as u32).collect();
    let lowest_root = index[&-&roots[highest]];

    let gram: Vec<Vec<Rat>> = (0..ambient_dim)
        .map(|i| {
            (0..ambient_dim)
                .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect();

    let cartan: Vec<Vec<i64>> = simple_roots
        .iter()
        .map(|a| {
            simple_roots
                .iter()
                .map(|b| (a.dot(b) * rat(2) / b.norm_sq()).to_integer())
                .collect()
        })
        .collect();

    // Fundamental weights: π_i = Σ_j (A^{-1})_{ij} α_j with A_{kj} = ⟨α_k, α_j^∨⟩.
    let cartan_rat: Vec<Vec<Rat>> = cartan
        .iter()
        .map(|row| row.iter().map(|&x| rat(x)).collect())
        .collect();
    let mut fundamental_weights = Vec::with_capacity(rank);
    for i in 0..rank {
        // Row i of A^{-1}: solve x^T A = e_i^T, i.e. A^T x = e_i.
        let at: Vec<Vec<Rat>> = (0..rank)
            .map(|r| (0..rank).map(|c| cartan_rat[c][r]).collect())
            .collect();
        let mut e = vec![Rat::zero(); rank];
        e[i] = Rat::one();
        let x =
            solve_rat(at, e).ok_or_else(|| Error::Invariant("singular Cartan matrix".into()))?;
        let w = x
            .iter()
            .zip(&simple_roots)
            .fold(Vector::zeros(ambient_dim), |acc, (c, a)| {
                &acc + &a.scale(*c)
            });
        fundamental_weights.push(w);
    }

    let negation: Vec<usize> = roots.iter().map(|r| index[&-r]).collect();
    let reflections: Vec<Perm> = roots
        .iter()
        .map(|a| Perm::from_vec(roots.iter().map(|b| index[&reflect(b, a)]).collect()))
        .collect();

    Ok(RootSystem {
        family,
        rank,
        ambient_dim,
        roots,
        index,
        simple,
        simple_coords,
        lowest_root,
        marks,
        gram,
        cartan,
        fundamental_weights,
        reflections,
        negation,
        weyl: OnceLock::new(),
    })
}

impl RootSystem {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn index_of(&self, v: &Vector) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn require_root(&self, v: &Vector) -> Result<usize> {
        if v.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: v.dim(),
            });
        }
        self.index_of(v)
            .ok_or_else(|| Error::NotARoot(v.to_string()))
    }

    pub fn simple_indices(&self) -> &[usize] {
        &self.simple
    }

    pub fn simple_roots(&self) -> Vec<Root> {
        self.simple.iter().map(|&i| self.roots[i].clone()).collect()
    }

    /// Coefficients of root `i` in the basis of simple roots.
    pub fn simple_coords(&self, i: usize) -> &[i64] {
        &self.simple_coords[i]
    }

    pub fn is_positive(&self, i: usize) -> bool {
        self.simple_coords[i].iter().any(|&x| x > 0)
    }

    pub fn positive_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_positive(i)).collect()
    }

    pub fn height(&self, i: usize) -> i64 {
        self.simple_coords[i].iter().sum()
    }

    pub fn lowest_root(&self) -> &Root {
        &self.roots[self.lowest_root]
    }

    pub fn lowest_root_index(&self) -> usize {
        self.lowest_root
    }

    pub fn marks(&self) -> &[u32] {
        &self.marks
    }

    pub fn gram(&self) -> &[Vec<Rat>] {
        &self.gram
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn fundamental_weights(&self) -> &[Weight] {
        &self.fundamental_weights
    }

    /// Weyl vector ρ, half the sum of the positive roots.
    pub fn rho(&self) -> Weight {
        self.positive_indices()
            .iter()
            .fold(Vector::zeros(self.ambient_dim), |acc, &i| {
                &acc + &self.roots[i]
            })
            .scale(ratf(1, 2))
    }

    pub fn neg_index(&self, i: usize) -> usize {
        self.negation[i]
    }

    pub fn reflection_perm(&self, i: usize) -> &Perm {
        &self.reflections[i]
    }

    pub fn inner(&self, a: &Vector, b: &Vector) -> Rat {
        a.dot(b)
    }

    pub fn length_sq(&self, i: usize) -> Rat {
        self.roots[i].norm_sq()
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    pub fn length_class(&self, i: usize) -> LengthClass {
        if self.is_simply_laced() {
            return LengthClass::Unique;
        }
        let max = self.roots.iter().map(Vector::norm_sq).max().unwrap();
        if self.length_sq(i) == max {
            LengthClass::Long
        } else {
            LengthClass::Short
        }
    }

    pub fn length_classes(&self) -> Vec<LengthClass> {
        if self.is_simply_laced() {
            vec![LengthClass::Unique]
        } else {
            vec![LengthClass::Short, LengthClass::Long]
        }
    }

    pub fn roots_in_class(&self, class: LengthClass) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.length_class(i) == class)
            .collect()
    }

    pub fn weyl_order(&self) -> u128 {
        weyl_group_order(self.family, self.rank)
    }

    /// Dimension of the simple Lie algebra with this root system.
    pub fn lie_algebra_dim(&self) -> usize {
        self.len() + self.rank
    }

    /// `2α/(α,α)` for a root α.
    pub fn coroot(&self, alpha: &Root) -> Result<Vector> {
        self.require_root(alpha)?;
        Ok(alpha.scale(rat(2) / alpha.norm_sq()))
    }

    /// Cartan pairing `⟨λ, α^∨⟩ = 2(λ,α)/(α,α)`.
    pub fn pairing(&self, lambda: &Vector, alpha: &Vector) -> Result<Rat> {
        if lambda.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: lambda.dim(),
            });
        }
        if alpha.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: alpha.dim(),
            });
        }
        if alpha.is_zero() {
            return Err(Error::NotARoot(alpha.to_string()));
        }
        Ok(lambda.dot(alpha) * rat(2) / alpha.norm_sq())
    }

    /// Pairing with root `i`, without validation.
    pub fn pairing_idx(&self, lambda: &Vector, i: usize) -> Rat {
        let a = &self.roots[i];
        lambda.dot(a) * rat(2) / a.norm_sq()
    }

    /// `Σ c_i π_i` for fundamental-weight coefficients `c`.
    pub fn weight_from_fundamental(&self, coeffs: &[i64]) -> Result<Weight> {
        if coeffs.len() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                got: coeffs.len(),
            });
        }
        Ok(coeffs
            .iter()
            .zip(&self.fundamental_weights)
            .fold(Vector::zeros(self.ambient_dim), |acc, (&c, w)| {
                &acc + &w.scale(rat(c))
            }))
    }

    /// Dynkin labels `⟨λ, α_i^∨⟩` over the simple roots.
    pub fn dynkin_labels(&self, lambda: &Weight) -> Vec<Rat> {
        self.simple
            .iter()
            .map(|&i| self.pairing_idx(lambda, i))
            .collect()
    }

    pub fn is_dominant_integral(&self, lambda: &Weight) -> bool {
        lambda.dim() == self.ambient_dim
            && self
                .dynkin_labels(lambda)
                .iter()
                .all(|x| x.is_integer() && !x.is_negative())
    }

    /// Reflect an arbitrary vector in the hyperplane of root `i`.
    pub fn reflect_idx(&self, i: usize, v: &Vector) -> Vector {
        let c = self.pairing_idx(v, i);
        v - &self.roots[i].scale(c)
    }

    /// Reflect into the dominant chamber by simple reflections.
    pub fn dominant_representative(&self, v: &Vector) -> Vector {
        let mut w = v.clone();
        loop {
            let neg = self
                .simple
                .iter()
                .find(|&&i| self.pairing_idx(&w, i).is_negative());
            match neg {
                Some(&i) => w = self.reflect_idx(i, &w),
                None => return w,
            }
        }
    }

    /// Index of `roots[i] + roots[j]` if it is a root.
    pub fn sum_index(&self, i: usize, j: usize) -> Option<usize> {
        self.index_of(&(&self.roots[i] + &self.roots[j]))
    }

    pub fn weyl_group(&self) -> Result<&WeylGroup> {
        if let Some(w) = self.weyl.get() {
            return Ok(w);
        }
        let w = WeylGroup::generate(self, crate::weyl::DEFAULT_ELEMENT_CAP)?;
        Ok(self.weyl.get_or_init(|| w))
    }

    pub fn to_json(&self) -> RootSystemJson {
        RootSystemJson {
            family: self.family,
            rank: self.rank,
            roots: self.roots.iter().map(Vector::to_strings).collect(),
        }
    }
}
