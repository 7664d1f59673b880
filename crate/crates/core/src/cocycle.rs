//! The commutator map `C₀(α,β) = (-1)^⟨α,β⟩`, the bilinear 2-cocycle
//! `ε_{C₀}` fixed by `ε(α_i,α_j) = 1` for `i ≤ j`, the lifting sign `ψ`
//! of ν̂, and checks of the identities they are supposed to satisfy.

use std::fmt;
use std::ops::{Add, Mul};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::lattice::{Family, LatticeVector, RootSystem};
use crate::report::Report;

/// Above this many evaluations a window is sampled instead of enumerated.
pub const EXHAUSTIVE_LIMIT: u64 = 2_000_000;
/// Number of random tuples drawn when a window is sampled.
pub const SAMPLE_SIZE: usize = 100_000;
pub const DEFAULT_WINDOW: i64 = 2;
const SEED: u64 = 0x7769_7374_6564;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(x: i64) -> Sign {
        if x.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, o: Sign) -> Sign {
        if self == o {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:+}", self.value())
    }
}

/// An element `Σ r_i α_i` of the root lattice, by its simple-root
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeElement(pub Vec<i64>);

impl LatticeElement {
    pub fn zero(rank: usize) -> Self {
        LatticeElement(vec![0; rank])
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i] = 1;
        LatticeElement(c)
    }

    pub fn root(rs: &RootSystem, idx: usize) -> Self {
        LatticeElement(rs.root_coords(idx).to_vec())
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn to_vector(&self, rs: &RootSystem) -> LatticeVector {
        rs.from_int_coords(&self.0)
    }

    /// Inverse of [`LatticeElement::to_vector`] on the lattice.
    pub fn from_vector(rs: &RootSystem, v: &LatticeVector) -> Option<Self> {
        let c = rs.simple_coords(v)?;
        c.iter()
            .map(|x| {
                use num_traits::ToPrimitive;
                if x.is_integer() {
                    x.to_integer().to_i64()
                } else {
                    None
                }
            })
            .collect::<Option<Vec<i64>>>()
            .map(LatticeElement)
    }

    pub fn nu(&self, rs: &RootSystem) -> Self {
        LatticeElement(rs.nu_coords(&self.0))
    }
}

impl Add for &LatticeElement {
    type Output = LatticeElement;
    fn add(self, o: &LatticeElement) -> LatticeElement {
        LatticeElement(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for LatticeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

pub fn commutator_c(rs: &RootSystem, a: &LatticeElement, b: &LatticeElement) -> Sign {
    Sign::from_parity(rs.pair_coords(&a.0, &b.0))
}

/// `ε(α,β) = ∏_{i>j} (-1)^{r_i s_j ⟨α_i,α_j⟩}`.
pub fn epsilon(rs: &RootSystem, a: &LatticeElement, b: &LatticeElement) -> Sign {
    let parity: i64 = rs.cartan_lower_entries().iter().map(|&(i, j, c)| a.0[i] * b.0[j] * c).sum();
    Sign::from_parity(parity)
}

/// The sign in `ν̂ e_α = ψ(α) e_{να}`.
pub fn psi(rs: &RootSystem, a: &LatticeElement) -> Sign {
    match rs.kind().family() {
        Family::AOdd => epsilon(rs, a, a),
        Family::D => Sign::Plus,
        Family::E6 => Sign::from_parity(a.0[2] * a.0[5]) * epsilon(rs, a, a),
    }
}

/// The case table for `ε(να, νβ)` in terms of `ε` on the unfolded pair.
pub fn epsilon_nu_expected(rs: &RootSystem, a: &LatticeElement, b: &LatticeElement) -> Sign {
    match rs.kind().family() {
        Family::AOdd => epsilon(rs, b, a),
        Family::D => epsilon(rs, a, b),
        Family::E6 => {
            Sign::from_parity(a.0[5] * b.0[2] + a.0[2] * b.0[5]) * epsilon(rs, b, a)
        }
    }
}

/// Lattice elements with every coordinate in `[-window, window]`, either all
/// of them or a seeded random sample.
pub(crate) struct Window {
    rank: usize,
    bound: i64,
}

impl Window {
    pub(crate) fn new(rank: usize, bound: i64) -> Self {
        Window { rank, bound }
    }

    /// Number of points, saturating.
    pub(crate) fn size(&self) -> u64 {
        let side = (2 * self.bound + 1) as u64;
        (0..self.rank).fold(1u64, |acc, _| acc.saturating_mul(side))
    }

    /// Number of `arity`-tuples, saturating.
    pub(crate) fn tuples(&self, arity: u32) -> u64 {
        (0..arity).fold(1u64, |acc, _| acc.saturating_mul(self.size()))
    }

    pub(crate) fn points(&self) -> Vec<LatticeElement> {
        let mut out = Vec::with_capacity(self.size() as usize);
        let mut c = vec![-self.bound; self.rank];
        loop {
            out.push(LatticeElement(c.clone()));
            let mut i = 0;
            loop {
                if i == self.rank {
                    return out;
                }
                if c[i] < self.bound {
                    c[i] += 1;
                    break;
                }
                c[i] = -self.bound;
                i += 1;
            }
        }
    }

    pub(crate) fn random(&self, rng: &mut ChaCha8Rng) -> LatticeElement {
        LatticeElement((0..self.rank).map(|_| rng.gen_range(-self.bound..=self.bound)).collect())
    }

    /// Calls `f` on every `arity`-tuple when that is within
    /// [`EXHAUSTIVE_LIMIT`], otherwise on [`SAMPLE_SIZE`] random tuples.
    /// Returns the mode used and the number of tuples visited.
    pub(crate) fn for_each_tuple(
        &self,
        arity: u32,
        mut f: impl FnMut(&[&LatticeElement]),
    ) -> (&'static str, u64) {
        if self.tuples(arity) <= EXHAUSTIVE_LIMIT {
            let pts = self.points();
            let mut idx = vec![0usize; arity as usize];
            let mut count = 0u64;
            loop {
                let tuple: Vec<&LatticeElement> = idx.iter().map(|&i| &pts[i]).collect();
                f(&tuple);
                count += 1;
                let mut k = 0;
                loop {
                    if k == idx.len() {
                        return ("exhaustive", count);
                    }
                    idx[k] += 1;
                    if idx[k] < pts.len() {
                        break;
                    }
                    idx[k] = 0;
                    k += 1;
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ (self.rank as u64) << 8 ^ arity as u64);
            for _ in 0..SAMPLE_SIZE {
                let tuple: Vec<LatticeElement> = (0..arity).map(|_| self.random(&mut rng)).collect();
                let refs: Vec<&LatticeElement> = tuple.iter().collect();
                f(&refs);
            }
            ("sampled", SAMPLE_SIZE as u64)
        }
    }
}

/// Checks the 2-cocycle identity, `ε(0,0) = 1`, bilinearity and the
/// commutator quotient `ε(α,β)/ε(β,α) = C₀(α,β)`.
///
/// Triples come from the window (see [`Window::for_each_tuple`]); in
/// addition every triple of simple roots and zero, and every pair of
/// positive roots, is checked.
pub fn verify_cocycle(rs: &RootSystem, window: i64) -> Report {
    let l = rs.rank();
    let mut report = Report::new("cocycle", rs.kind()).param("window", window);
    let zero = LatticeElement::zero(l);
    report.check(epsilon(rs, &zero, &zero) == Sign::Plus, || "ε(0,0) != 1".into());

    let check_triple = |report: &mut Report, a: &LatticeElement, b: &LatticeElement, g: &LatticeElement| {
        let ab = a + b;
        let bg = b + g;
        let lhs = epsilon(rs, a, b) * epsilon(rs, &ab, g);
        let rhs = epsilon(rs, b, g) * epsilon(rs, a, &bg);
        report.check(lhs == rhs, || format!("cocycle identity fails at α={a} β={b} γ={g}"));
        report.check(epsilon(rs, &ab, g) == epsilon(rs, a, g) * epsilon(rs, b, g), || {
            format!("ε not additive in the first slot at α={a} α'={b} β={g}")
        });
        report.check(epsilon(rs, g, &ab) == epsilon(rs, g, a) * epsilon(rs, g, b), || {
            format!("ε not additive in the second slot at α={g} β={a} β'={b}")
        });
    };
    let check_pair = |report: &mut Report, a: &LatticeElement, b: &LatticeElement| {
        let quotient = epsilon(rs, a, b) * epsilon(rs, b, a);
        report.check(quotient == commutator_c(rs, a, b), || {
            format!("ε(α,β)/ε(β,α) != C₀(α,β) at α={a} β={b}")
        });
        report.check(commutator_c(rs, a, b) == commutator_c(rs, b, a), || {
            format!("C₀ not symmetric at α={a} β={b}")
        });
    };

    let mut basic: Vec<LatticeElement> = (0..l).map(|i| LatticeElement::simple(l, i)).collect();
    basic.push(zero);
    for a in &basic {
        for b in &basic {
            for g in &basic {
                check_triple(&mut report, a, b, g);
            }
        }
    }
    let roots: Vec<LatticeElement> = (0..rs.num_positive()).map(|i| LatticeElement::root(rs, i)).collect();
    for a in &roots {
        for b in &roots {
            check_pair(&mut report, a, b);
        }
    }

    let w = Window::new(l, window);
    let (mode, triples) = w.for_each_tuple(3, |t| check_triple(&mut report, t[0], t[1], t[2]));
    report.set_param("triples", triples);
    report.set_param("triple_mode", mode);
    let (mode, pairs) = w.for_each_tuple(2, |t| check_pair(&mut report, t[0], t[1]));
    report.set_param("pairs", pairs);
    report.set_param("pair_mode", mode);
    report.set_param("root_pairs", (roots.len() * roots.len()) as u64);
    report
}

/// Checks that `ν̂ e_α = ψ(α) e_{να}` is multiplicative,
/// `ψ(α)ψ(β)ε(να,νβ) = ψ(α+β)ε(α,β)`, on all pairs of positive roots and on
/// the window; that `ε(να,νβ)` follows the per-type case table; that
/// `ψ(α_i) = 1` on simple roots; and that `ψ(α)ψ(να) = 1`.
pub fn verify_nu_hat(rs: &RootSystem, window: i64) -> Report {
    let l = rs.rank();
    let mut report = Report::new("nuhat", rs.kind()).param("window", window);

    let check_pair = |report: &mut Report, a: &LatticeElement, b: &LatticeElement| {
        let na = a.nu(rs);
        let nb = b.nu(rs);
        let lhs = psi(rs, a) * psi(rs, b) * epsilon(rs, &na, &nb);
        let rhs = psi(rs, &(a + b)) * epsilon(rs, a, b);
        report.check(lhs == rhs, || format!("ν̂ not multiplicative at α={a} β={b}"));
        report.check(epsilon(rs, &na, &nb) == epsilon_nu_expected(rs, a, b), || {
            format!("ε(να,νβ) disagrees with the case table at α={a} β={b}")
        });
    };
    let check_single = |report: &mut Report, a: &LatticeElement| {
        report.check(psi(rs, a) * psi(rs, &a.nu(rs)) == Sign::Plus, || {
            format!("ν̂² != 1 on e_α for α={a}")
        });
    };

    for i in 0..l {
        let a = LatticeElement::simple(l, i);
        report.check(psi(rs, &a) == Sign::Plus, || format!("ψ(α_{}) != 1", i + 1));
    }
    let fixed_simple = (0..l).filter(|&i| rs.is_fixed_simple(i)).count();
    report.set_param("fixed_simple_roots", fixed_simple as u64);

    let roots: Vec<LatticeElement> = (0..rs.num_positive()).map(|i| LatticeElement::root(rs, i)).collect();
    for a in &roots {
        check_single(&mut report, a);
        for b in &roots {
            check_pair(&mut report, a, b);
        }
    }
    report.set_param("root_pairs", (roots.len() * roots.len()) as u64);

    let w = Window::new(l, window);
    let (mode, pairs) = w.for_each_tuple(2, |t| check_pair(&mut report, t[0], t[1]));
    report.set_param("pairs", pairs);
    report.set_param("pair_mode", mode);
    let (mode, singles) = w.for_each_tuple(1, |t| check_single(&mut report, t[0]));
    report.set_param("singles", singles);
    report.set_param("single_mode", mode);
    report
}
