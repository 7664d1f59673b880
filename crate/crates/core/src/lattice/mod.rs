//! Root lattices of type A(2n-1), D(n) and E6 together with the diagram
//! folding ν, its eigenspace projections, the dual basis and the charge data
//! derived from them.
//!
//! Simple roots are addressed by zero-based index throughout the API; the
//! usual one-based Dynkin label of index `i` is `i + 1`.

pub mod e6;
pub mod linalg;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use e6::verify_embedding_isometry as verify_e6_embedding;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// `A_{2n-1}`, folded to `A_{2n-1}^{(2)}`.
    #[serde(rename = "A")]
    AOdd,
    #[serde(rename = "D")]
    D,
    #[serde(rename = "E6")]
    E6,
}

impl Family {
    pub fn label(self) -> &'static str {
        match self {
            Family::AOdd => "A",
            Family::D => "D",
            Family::E6 => "E6",
        }
    }
}

/// Which root system to build. For `AOdd` the parameter `n` is the twisted
/// algebra parameter: the lattice is `A_{2n-1}` of rank `2n-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystemKind {
    family: Family,
    n: u32,
}

impl RootSystemKind {
    pub fn new(family: Family, n: u32) -> Result<Self> {
        let kind = match family {
            Family::AOdd if n < 2 => {
                return Err(Error::Config(format!("A(2n-1) requires n >= 2, got n = {n}")))
            }
            Family::D if n < 4 => {
                return Err(Error::Config(format!("D(n) requires n >= 4, got n = {n}")))
            }
            Family::E6 => RootSystemKind { family, n: 6 },
            _ => RootSystemKind { family, n },
        };
        Ok(kind)
    }

    pub fn a_odd(n: u32) -> Result<Self> {
        Self::new(Family::AOdd, n)
    }

    pub fn d(n: u32) -> Result<Self> {
        Self::new(Family::D, n)
    }

    pub fn e6() -> Self {
        RootSystemKind { family: Family::E6, n: 6 }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// The family parameter (`n` for A and D, 6 for E6).
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn rank(&self) -> usize {
        let n = self.n as usize;
        match self.family {
            Family::AOdd => 2 * n - 1,
            Family::D => n,
            Family::E6 => 6,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        let n = self.n as usize;
        match self.family {
            Family::AOdd => 2 * n,
            Family::D => n,
            Family::E6 => 9,
        }
    }
}

impl fmt::Display for RootSystemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::AOdd => write!(f, "A{} (n={})", 2 * self.n - 1, self.n),
            Family::D => write!(f, "D{}", self.n),
            Family::E6 => write!(f, "E6"),
        }
    }
}

/// An exact vector in the ambient Euclidean space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector {
    coords: Vec<BigRational>,
}

impl LatticeVector {
    pub fn new(coords: Vec<BigRational>) -> Self {
        LatticeVector { coords }
    }

    pub fn zero(dim: usize) -> Self {
        LatticeVector { coords: vec![BigRational::zero(); dim] }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        LatticeVector { coords: coords.iter().map(|&c| int(c)).collect() }
    }

    /// Standard basis vector `ε_i` (zero-based).
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.coords[i] = BigRational::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        LatticeVector { coords: self.coords.iter().map(|x| x * c).collect() }
    }

    /// Euclidean dot product. Dimensions must agree.
    pub fn dot(&self, other: &Self) -> Result<BigRational> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .fold(BigRational::zero(), |acc, (a, b)| acc + a * b))
    }
}

impl Add for &LatticeVector {
    type Output = LatticeVector;
    fn add(self, o: &LatticeVector) -> LatticeVector {
        assert_eq!(self.dim(), o.dim());
        LatticeVector { coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &LatticeVector {
    type Output = LatticeVector;
    fn sub(self, o: &LatticeVector) -> LatticeVector {
        assert_eq!(self.dim(), o.dim());
        LatticeVector { coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector { coords: self.coords.iter().map(|a| -a).collect() }
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

fn to_i64(x: &BigRational) -> Option<i64> {
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}

/// The charge matrix `A = 2(⟨(α_{i_j})_{(0)}, (α_{i_l})_{(0)}⟩)` on the orbit
/// representatives, with exponent tags `a_j` (2 for ν-fixed, 1 otherwise).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChargeMatrix {
    pub entries: Vec<Vec<i64>>,
    pub a: Vec<i64>,
}

impl ChargeMatrix {
    pub fn k(&self) -> usize {
        self.a.len()
    }

    pub fn is_symmetric(&self) -> bool {
        let k = self.k();
        (0..k).all(|i| (0..k).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn is_positive_definite(&self) -> bool {
        linalg::is_positive_definite(&self.entries)
    }

    /// `mᵀAm` is even for every integer `m` iff the diagonal is even.
    pub fn is_even(&self) -> bool {
        self.is_symmetric() && (0..self.k()).all(|i| self.entries[i][i] % 2 == 0)
    }

    /// `mᵀAm / 2`.
    pub fn half_norm(&self, m: &[u32]) -> i64 {
        let k = self.k();
        assert_eq!(m.len(), k);
        let mut total = 0i64;
        for i in 0..k {
            if m[i] == 0 {
                continue;
            }
            for j in 0..k {
                total += self.entries[i][j] * m[i] as i64 * m[j] as i64;
            }
        }
        debug_assert!(total % 2 == 0);
        total / 2
    }

    /// `(Am)_i`.
    pub fn row_dot(&self, i: usize, m: &[u32]) -> i64 {
        self.entries[i].iter().zip(m).map(|(a, &x)| a * x as i64).sum()
    }
}

/// A concrete root system with its folding.
#[derive(Clone, Debug)]
pub struct RootSystem {
    kind: RootSystemKind,
    simple_roots: Vec<LatticeVector>,
    cartan: Vec<Vec<i64>>,
    nu_on_simples: Vec<usize>,
    orbit_reps: Vec<usize>,
    positive_roots: Vec<LatticeVector>,
    /// Simple-root coordinates of each positive root.
    positive_coords: Vec<Vec<i64>>,
    root_index: HashMap<Vec<i64>, usize>,
    nu_on_positive: Vec<usize>,
    /// `⟨β_a, β_b⟩` for positive roots.
    gram: Vec<Vec<i64>>,
    cartan_inverse: linalg::Matrix,
    /// Nonzero `⟨α_i,α_j⟩` with `i > j`.
    lower_entries: Vec<(usize, usize, i64)>,
}

/// Root candidates in ambient coordinates: the positive roots, or all
/// roots for E6.
fn enumerate_roots(kind: RootSystemKind) -> Vec<LatticeVector> {
    let dim = kind.ambient_dim();
    let n = kind.n() as usize;
    let unit = |i| LatticeVector::unit(dim, i);
    let mut roots = Vec::new();
    match kind.family() {
        Family::AOdd => {
            for i in 0..2 * n {
                for j in i + 1..2 * n {
                    roots.push(&unit(i) - &unit(j));
                }
            }
        }
        Family::D => {
            for i in 0..n {
                for j in i + 1..n {
                    roots.push(&unit(i) - &unit(j));
                    roots.push(&unit(i) + &unit(j));
                }
            }
        }
        Family::E6 => {
            // all 72 roots; the positive ones are picked out afterwards by the
            // sign of their simple-root coordinates
            for block in 0..3 {
                for i in 0..3 {
                    for j in 0..3 {
                        if i != j {
                            roots.push(&unit(3 * block + i) - &unit(3 * block + j));
                        }
                    }
                }
            }
            // the three vectors E_1+E_2+E_3 - 3E_i, scaled by 1/3
            let third = |i: usize| -> Vec<BigRational> {
                (0..3)
                    .map(|j| BigRational::new(if i == j { -2 } else { 1 }.into(), 3.into()))
                    .collect()
            };
            for a in 0..3 {
                for b in 0..3 {
                    for c in 0..3 {
                        let mut coords = third(a);
                        coords.extend(third(b));
                        coords.extend(third(c));
                        let v = LatticeVector::new(coords);
                        roots.push(-&v);
                        roots.push(v);
                    }
                }
            }
        }
    }
    roots
}

fn simple_roots(kind: RootSystemKind) -> Vec<LatticeVector> {
    let dim = kind.ambient_dim();
    let n = kind.n() as usize;
    let unit = |i| LatticeVector::unit(dim, i);
    match kind.family() {
        Family::AOdd => (0..2 * n - 1).map(|i| &unit(i) - &unit(i + 1)).collect(),
        Family::D => {
            let mut s: Vec<_> = (0..n - 1).map(|i| &unit(i) - &unit(i + 1)).collect();
            s.push(&unit(n - 2) + &unit(n - 1));
            s
        }
        Family::E6 => {
            let t = |n: i64| BigRational::new(n.into(), 3.into());
            let block = |v: [i64; 3]| -> Vec<BigRational> { v.iter().map(|&x| int(x)).collect() };
            let thirds = |v: [i64; 3]| -> Vec<BigRational> { v.iter().map(|&x| t(x)).collect() };
            let z = || block([0, 0, 0]);
            let cat = |a: Vec<BigRational>, b: Vec<BigRational>, c: Vec<BigRational>| {
                let mut v = a;
                v.extend(b);
                v.extend(c);
                LatticeVector::new(v)
            };
            vec![
                cat(z(), z(), block([0, 1, -1])),
                cat(z(), z(), block([1, -1, 0])),
                cat(thirds([1, -2, 1]), thirds([-2, 1, 1]), thirds([-2, 1, 1])),
                cat(z(), block([1, -1, 0]), z()),
                cat(z(), block([0, 1, -1]), z()),
                cat(block([0, 1, -1]), z(), z()),
            ]
        }
    }
}

fn nu_simple_permutation(kind: RootSystemKind) -> Vec<usize> {
    let l = kind.rank();
    match kind.family() {
        Family::AOdd => (0..l).map(|i| l - 1 - i).collect(),
        Family::D => {
            let mut p: Vec<usize> = (0..l).collect();
            p.swap(l - 2, l - 1);
            p
        }
        Family::E6 => vec![4, 3, 2, 1, 0, 5],
    }
}

/// ν on ambient coordinates.
fn nu_ambient(kind: RootSystemKind, v: &LatticeVector) -> LatticeVector {
    let c = v.coords();
    let d = c.len();
    let coords = match kind.family() {
        // ε_k ↦ -ε_{2n+1-k}
        Family::AOdd => (0..d).map(|k| -&c[d - 1 - k]).collect(),
        // ε_n ↦ -ε_n
        Family::D => {
            let mut out = c.to_vec();
            out[d - 1] = -&out[d - 1];
            out
        }
        // (v1, v2, v3) ↦ (v1, v3, v2)
        Family::E6 => {
            let mut out = c[0..3].to_vec();
            out.extend_from_slice(&c[6..9]);
            out.extend_from_slice(&c[3..6]);
            out
        }
    };
    LatticeVector::new(coords)
}

pub fn build_root_system(kind: RootSystemKind) -> RootSystem {
    RootSystem::new(kind)
}

impl RootSystem {
    pub fn new(kind: RootSystemKind) -> Self {
        let simple = simple_roots(kind);
        let l = simple.len();
        let cartan: Vec<Vec<i64>> = simple
            .iter()
            .map(|a| {
                simple
                    .iter()
                    .map(|b| to_i64(&a.dot(b).unwrap()).expect("integral Cartan matrix"))
                    .collect()
            })
            .collect();
        let cartan_inverse =
            linalg::inverse(&linalg::from_ints(&cartan)).expect("Cartan matrix is nonsingular");
        let nu_on_simples = nu_simple_permutation(kind);
        let orbit_reps: Vec<usize> = (0..l).filter(|&i| i <= nu_on_simples[i]).collect();

        let mut rs = RootSystem {
            kind,
            simple_roots: simple,
            cartan,
            nu_on_simples,
            orbit_reps,
            positive_roots: Vec::new(),
            positive_coords: Vec::new(),
            root_index: HashMap::new(),
            nu_on_positive: Vec::new(),
            gram: Vec::new(),
            cartan_inverse,
            lower_entries: Vec::new(),
        };
        rs.lower_entries = (0..l)
            .flat_map(|i| (0..i).map(move |j| (i, j)))
            .filter(|&(i, j)| rs.cartan[i][j] != 0)
            .map(|(i, j)| (i, j, rs.cartan[i][j]))
            .collect();

        let candidates = enumerate_roots(kind);
        let num_candidates = candidates.len();
        let mut roots: Vec<(Vec<i64>, LatticeVector)> = candidates
            .into_iter()
            .map(|v| {
                let c = rs
                    .simple_coords(&v)
                    .and_then(|c| c.iter().map(to_i64).collect::<Option<Vec<i64>>>())
                    .unwrap_or_else(|| panic!("{v} is not in the root lattice of {kind}"));
                (c, v)
            })
            .filter(|(c, _)| c.iter().all(|&x| x >= 0))
            .collect();
        match kind.family() {
            Family::E6 => assert_eq!(2 * roots.len(), num_candidates),
            _ => assert_eq!(roots.len(), num_candidates, "non-positive root enumerated for {kind}"),
        }
        // height first; within a height, larger leading coordinates first so
        // that α_i precedes α_j for i < j
        roots.sort_by(|(a, _), (b, _)| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        rs.positive_coords = roots.iter().map(|(c, _)| c.clone()).collect();
        rs.positive_roots = roots.into_iter().map(|(_, v)| v).collect();
        rs.root_index =
            rs.positive_coords.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
        rs.gram = rs
            .positive_coords
            .iter()
            .map(|a| rs.positive_coords.iter().map(|b| rs.pair_coords(a, b)).collect())
            .collect();
        rs.nu_on_positive = rs
            .positive_coords
            .iter()
            .map(|c| {
                let image = rs.nu_coords(c);
                *rs.root_index.get(&image).expect("ν permutes the positive roots")
            })
            .collect();

        assert_eq!(rs.closure_of_simple_roots(), rs.positive_coords.iter().cloned().collect());
        rs
    }

    pub fn kind(&self) -> RootSystemKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.kind.ambient_dim()
    }

    pub fn simple_roots(&self) -> &[LatticeVector] {
        &self.simple_roots
    }

    pub fn simple_root(&self, i: usize) -> &LatticeVector {
        &self.simple_roots[i]
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn nu_on_simples(&self) -> &[usize] {
        &self.nu_on_simples
    }

    pub fn positive_roots(&self) -> &[LatticeVector] {
        &self.positive_roots
    }

    pub fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }

    /// Simple-root coordinates of positive root `idx`.
    pub fn root_coords(&self, idx: usize) -> &[i64] {
        &self.positive_coords[idx]
    }

    /// Index of the positive root with the given simple-root coordinates.
    pub fn root_by_coords(&self, coords: &[i64]) -> Option<usize> {
        self.root_index.get(coords).copied()
    }

    /// Index of the positive root equal to `v`, compared on normalized
    /// coordinates.
    pub fn root_by_vector(&self, v: &LatticeVector) -> Option<usize> {
        let c = self.simple_coords(v)?;
        let c: Option<Vec<i64>> = c.iter().map(to_i64).collect();
        self.root_by_coords(&c?)
    }

    /// Index of the positive root `α_i`.
    pub fn simple_root_index(&self, i: usize) -> usize {
        let mut c = vec![0; self.rank()];
        c[i] = 1;
        self.root_index[&c]
    }

    /// `⟨β_a, β_b⟩` for positive roots by index.
    pub fn root_pair(&self, a: usize, b: usize) -> i64 {
        self.gram[a][b]
    }

    pub fn nu_root(&self, idx: usize) -> usize {
        self.nu_on_positive[idx]
    }

    pub fn is_fixed_root(&self, idx: usize) -> bool {
        self.nu_on_positive[idx] == idx
    }

    pub fn is_fixed_simple(&self, i: usize) -> bool {
        self.nu_on_simples[i] == i
    }

    /// `⟨α, β⟩` on simple-root coordinate vectors.
    pub fn pair_coords(&self, a: &[i64], b: &[i64]) -> i64 {
        let diag: i64 = a.iter().zip(b).map(|(x, y)| 2 * x * y).sum();
        let off: i64 = self.lower_entries.iter().map(|&(i, j, c)| c * (a[i] * b[j] + a[j] * b[i])).sum();
        diag + off
    }

    /// The nonzero entries `(i, j, ⟨α_i,α_j⟩)` of the Cartan matrix below the
    /// diagonal.
    pub fn cartan_lower_entries(&self) -> &[(usize, usize, i64)] {
        &self.lower_entries
    }

    /// ν on simple-root coordinates: `Σ r_i α_i ↦ Σ r_i α_{ν(i)}`.
    pub fn nu_coords(&self, c: &[i64]) -> Vec<i64> {
        let mut out = vec![0; c.len()];
        for (i, &x) in c.iter().enumerate() {
            out[self.nu_on_simples[i]] = x;
        }
        out
    }

    /// Simple-root coordinates of an ambient vector, if it lies in the
    /// rational span of the simple roots.
    pub fn simple_coords(&self, v: &LatticeVector) -> Option<Vec<BigRational>> {
        if v.dim() != self.ambient_dim() {
            return None;
        }
        let pairings: Vec<BigRational> =
            self.simple_roots.iter().map(|a| a.dot(v).unwrap()).collect();
        let coords: Vec<BigRational> = self
            .cartan_inverse
            .iter()
            .map(|row| row.iter().zip(&pairings).fold(BigRational::zero(), |s, (x, y)| s + x * y))
            .collect();
        (self.from_simple_coords(&coords) == *v).then_some(coords)
    }

    pub fn from_simple_coords(&self, c: &[BigRational]) -> LatticeVector {
        let mut v = LatticeVector::zero(self.ambient_dim());
        for (x, a) in c.iter().zip(&self.simple_roots) {
            if !x.is_zero() {
                v = &v + &a.scale(x);
            }
        }
        v
    }

    pub fn from_int_coords(&self, c: &[i64]) -> LatticeVector {
        let c: Vec<BigRational> = c.iter().map(|&x| int(x)).collect();
        self.from_simple_coords(&c)
    }

    /// Positive roots reached from the simple roots by repeatedly adding
    /// simple roots while the norm stays 2.
    pub fn closure_of_simple_roots(&self) -> HashSet<Vec<i64>> {
        let l = self.rank();
        let mut seen = HashSet::new();
        let mut queue = VecDeque::new();
        for i in 0..l {
            let mut c = vec![0; l];
            c[i] = 1;
            seen.insert(c.clone());
            queue.push_back(c);
        }
        while let Some(c) = queue.pop_front() {
            for i in 0..l {
                let mut d = c.clone();
                d[i] += 1;
                if self.pair_coords(&d, &d) == 2 && seen.insert(d.clone()) {
                    queue.push_back(d);
                }
            }
        }
        seen
    }

    /// The bilinear form. On roots this is `2(β,α)/(β,β) = (α,β)`.
    pub fn inner(&self, u: &LatticeVector, v: &LatticeVector) -> Result<BigRational> {
        self.check_dim(u)?;
        self.check_dim(v)?;
        u.dot(v)
    }

    fn check_dim(&self, v: &LatticeVector) -> Result<()> {
        if v.dim() != self.ambient_dim() {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim(), found: v.dim() });
        }
        Ok(())
    }

    pub fn nu(&self, v: &LatticeVector) -> Result<LatticeVector> {
        self.check_dim(v)?;
        Ok(nu_ambient(self.kind, v))
    }

    /// `½(v + (-1)^eigen ν v)`.
    pub fn project(&self, v: &LatticeVector, eigen: u8) -> Result<LatticeVector> {
        let nv = self.nu(v)?;
        let sum = if eigen.is_multiple_of(2) { v + &nv } else { v - &nv };
        Ok(sum.scale(&half()))
    }

    /// The basis `λ_i` dual to the simple roots, `⟨λ_i, α_j⟩ = δ_ij`.
    pub fn dual_basis(&self) -> Vec<LatticeVector> {
        self.cartan_inverse.iter().map(|row| self.from_simple_coords(row)).collect()
    }

    /// Simple-root coordinates of the dual basis (rows of the inverse Cartan
    /// matrix).
    pub fn dual_basis_coords(&self) -> &linalg::Matrix {
        &self.cartan_inverse
    }

    /// One index per ν-orbit of simple roots, smallest first.
    pub fn orbit_representatives(&self) -> &[usize] {
        &self.orbit_reps
    }

    /// Position of simple root `i` in the orbit-representative list.
    pub fn orbit_position(&self, i: usize) -> Option<usize> {
        self.orbit_reps.iter().position(|&r| r == i)
    }

    /// ν-orbits of the simple roots, each sorted.
    pub fn simple_orbits(&self) -> Vec<Vec<usize>> {
        self.orbit_reps
            .iter()
            .map(|&i| {
                let j = self.nu_on_simples[i];
                if i == j {
                    vec![i]
                } else {
                    vec![i, j]
                }
            })
            .collect()
    }

    pub fn charge_matrix(&self) -> ChargeMatrix {
        let projected: Vec<LatticeVector> = self
            .orbit_reps
            .iter()
            .map(|&i| self.project(&self.simple_roots[i], 0).unwrap())
            .collect();
        let entries = projected
            .iter()
            .map(|u| {
                projected
                    .iter()
                    .map(|v| {
                        let x = int(2) * self.inner(u, v).unwrap();
                        to_i64(&x).expect("charge matrix entries are integers")
                    })
                    .collect()
            })
            .collect();
        let a = self.orbit_reps.iter().map(|&i| if self.is_fixed_simple(i) { 2 } else { 1 }).collect();
        ChargeMatrix { entries, a }
    }

    /// `(d_{i_j} ⟨α, (λ_{i_j})_{(0)}⟩)_j` for a positive root `α`.
    pub fn charge_vector(&self, alpha: &LatticeVector) -> Result<Vec<i64>> {
        self.check_dim(alpha)?;
        let idx = self.root_by_vector(alpha).ok_or_else(|| Error::NotAPositiveRoot(alpha.to_string()))?;
        Ok(self.charge_of_root(idx))
    }

    /// Charge vector of positive root `idx`.
    pub fn charge_of_root(&self, idx: usize) -> Vec<i64> {
        let c = &self.positive_coords[idx];
        self.orbit_reps
            .iter()
            .map(|&i| {
                // d·⟨α, ½(λ_i + νλ_i)⟩ = (d/2)(r_i + r_{ν(i)})
                let j = self.nu_on_simples[i];
                if i == j {
                    c[i]
                } else {
                    c[i] + c[j]
                }
            })
            .collect()
    }

    /// Charge vector through the rational definition, used to cross-check
    /// [`RootSystem::charge_of_root`].
    pub fn charge_vector_rational(&self, alpha: &LatticeVector) -> Result<Vec<BigRational>> {
        let dual = self.dual_basis();
        self.orbit_reps
            .iter()
            .map(|&i| {
                let d = if self.is_fixed_simple(i) { 1 } else { 2 };
                let proj = self.project(&dual[i], 0)?;
                Ok(int(d) * self.inner(alpha, &proj)?)
            })
            .collect()
    }
}
