//! Twisted component operators `x_α(m)`, formal products of them, the
//! commutator case table, truncated relation generators and the shift maps
//! used in the exact sequences.
//!
//! Nothing here is an actual algebra: monomials are free words kept in the
//! order they are written (the right-most factor acts first).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cocycle::{epsilon, psi, LatticeElement, Sign};
use crate::error::{Error, Result};
use crate::lattice::RootSystem;
use crate::report::Report;

/// An element of `½ℤ`, stored as twice its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    pub fn from_twice(twice: i64) -> Self {
        HalfInt(twice)
    }

    pub fn integer(n: i64) -> Self {
        HalfInt(2 * n)
    }

    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// `(-1)^{2m}`
    pub fn parity_sign(self) -> Sign {
        Sign::from_parity(self.0)
    }

    pub fn to_rational(self) -> BigRational {
        BigRational::new(self.0.into(), 2.into())
    }

    pub fn from_rational(q: &BigRational) -> Option<Self> {
        use num_traits::ToPrimitive;
        let twice = q * BigRational::from_integer(2.into());
        if twice.is_integer() {
            twice.to_integer().to_i64().map(HalfInt)
        } else {
            None
        }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, o: HalfInt) -> HalfInt {
        HalfInt(self.0 + o.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, o: HalfInt) -> HalfInt {
        HalfInt(self.0 - o.0)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl std::str::FromStr for HalfInt {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("{s:?} is not in ½ℤ"));
        let q: BigRational = s.trim().parse().map_err(|_| bad())?;
        HalfInt::from_rational(&q).ok_or_else(bad)
    }
}

/// A nonzero operator `x_α(m)` in canonical form: `α` is the smaller index
/// of its ν-orbit in Δ₊, and `m ∈ ℤ` whenever `να = α`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mode {
    root: usize,
    m: HalfInt,
}

impl Mode {
    /// Rewrites `x_β(m)` as `sign · x_α(m)` with `α` canonical, using
    /// `x_{να}(m) = ψ(α)(-1)^{2m} x_α(m)`. Returns `None` for the zero
    /// operator (a ν-fixed root at a half-integer mode).
    pub fn canonical(rs: &RootSystem, root: usize, m: HalfInt) -> Option<(Sign, Mode)> {
        let nu = rs.nu_root(root);
        if nu == root {
            return m.is_integer().then_some((Sign::Plus, Mode { root, m }));
        }
        if root < nu {
            return Some((Sign::Plus, Mode { root, m }));
        }
        let sign = psi(rs, &LatticeElement::root(rs, nu)) * m.parity_sign();
        Some((sign, Mode { root: nu, m }))
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn m(&self) -> HalfInt {
        self.m
    }

    /// `wt x_α(m) = -m - 1 + ⟨α,α⟩/2 = -m`.
    pub fn weight(&self) -> HalfInt {
        -self.m
    }
}

pub fn mode_weight(mode: &Mode) -> BigRational {
    mode.weight().to_rational()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    scalar: BigRational,
    factors: Vec<Mode>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { scalar: BigRational::one(), factors: Vec::new() }
    }

    pub fn zero() -> Self {
        Monomial { scalar: BigRational::zero(), factors: Vec::new() }
    }

    /// `x_β(m)`, canonicalized.
    pub fn x(rs: &RootSystem, root: usize, m: HalfInt) -> Self {
        Self::from_factors(rs, BigRational::one(), &[(root, m)])
    }

    /// `scalar · x_{β_1}(m_1) ⋯ x_{β_r}(m_r)`, canonicalized.
    pub fn from_factors(rs: &RootSystem, scalar: BigRational, factors: &[(usize, HalfInt)]) -> Self {
        let mut mono = Monomial { scalar, factors: Vec::with_capacity(factors.len()) };
        for &(root, m) in factors {
            match Mode::canonical(rs, root, m) {
                None => return Monomial::zero(),
                Some((sign, mode)) => {
                    if sign == Sign::Minus {
                        mono.scalar = -mono.scalar;
                    }
                    mono.factors.push(mode);
                }
            }
        }
        mono.normalize()
    }

    fn normalize(self) -> Self {
        if self.scalar.is_zero() {
            Monomial::zero()
        } else {
            self
        }
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero()
    }

    pub fn scalar(&self) -> &BigRational {
        &self.scalar
    }

    pub fn factors(&self) -> &[Mode] {
        &self.factors
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Monomial { scalar: &self.scalar * c, factors: self.factors.clone() }.normalize()
    }

    pub fn signed(&self, s: Sign) -> Self {
        match s {
            Sign::Plus => self.clone(),
            Sign::Minus => Monomial { scalar: -&self.scalar, factors: self.factors.clone() },
        }
    }

    /// Operator product `self · other`: `other` acts first.
    pub fn mul(&self, other: &Monomial) -> Self {
        if self.is_zero() || other.is_zero() {
            return Monomial::zero();
        }
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        Monomial { scalar: &self.scalar * &other.scalar, factors }
    }

    pub fn weight(&self) -> HalfInt {
        self.factors.iter().fold(HalfInt::ZERO, |w, f| w + f.weight())
    }

    /// Sum of the roots of the factors.
    pub fn root_sum(&self, rs: &RootSystem) -> LatticeElement {
        let mut total = LatticeElement::zero(rs.rank());
        for f in &self.factors {
            total = &total + &LatticeElement::root(rs, f.root);
        }
        total
    }

    pub fn charge(&self, rs: &RootSystem) -> Vec<i64> {
        let mut total = vec![0; rs.orbit_representatives().len()];
        for f in &self.factors {
            for (t, c) in total.iter_mut().zip(rs.charge_of_root(f.root)) {
                *t += c;
            }
        }
        total
    }

    /// `c * x[r_1,…,r_l](m) …` with roots in simple-root coordinates.
    pub fn to_text(&self, rs: &RootSystem) -> String {
        let mut s = format!("{}", self.scalar);
        if self.factors.is_empty() {
            s.push_str(" * 1");
            return s;
        }
        s.push_str(" *");
        for f in &self.factors {
            s.push_str(&format!(" x{}({})", LatticeElement::root(rs, f.root), f.m));
        }
        s
    }
}

/// A formal linear combination of monomials, with like terms collected.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MonomialSum(BTreeMap<Vec<Mode>, BigRational>);

impl MonomialSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, mono: Monomial) {
        if mono.is_zero() {
            return;
        }
        let entry = self.0.entry(mono.factors).or_insert_with(BigRational::zero);
        *entry += mono.scalar;
        if entry.is_zero() {
            // the key is still present; drop it
            self.0.retain(|_, c| !c.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> Vec<Monomial> {
        self.0
            .iter()
            .map(|(f, c)| Monomial { scalar: c.clone(), factors: f.clone() })
            .collect()
    }

    pub fn to_text(&self, rs: &RootSystem) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms().iter().map(|m| m.to_text(rs)).collect::<Vec<_>>().join(" + ")
    }
}

impl FromIterator<Monomial> for MonomialSum {
    fn from_iter<I: IntoIterator<Item = Monomial>>(iter: I) -> Self {
        let mut s = MonomialSum::new();
        for m in iter {
            s.push(m);
        }
        s
    }
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), 2.into())
}

fn sign_q(s: Sign) -> BigRational {
    BigRational::from_integer(s.value().into())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommTag {
    Commute,
    Single,
    Double,
}

/// `[x_α(r), x_β(s)] = coefficient · (-1)^{2r·[alternating]} · x_root(r+s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommTerm {
    pub coefficient: BigRational,
    pub root: usize,
    pub alternating: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CommCase {
    Commute,
    Single(CommTerm),
    Double(CommTerm),
}

impl CommCase {
    pub fn tag(&self) -> CommTag {
        match self {
            CommCase::Commute => CommTag::Commute,
            CommCase::Single(_) => CommTag::Single,
            CommCase::Double(_) => CommTag::Double,
        }
    }

    pub fn term(&self) -> Option<&CommTerm> {
        match self {
            CommCase::Commute => None,
            CommCase::Single(t) | CommCase::Double(t) => Some(t),
        }
    }

    /// The commutator at modes `r`, `s` as a single (possibly zero) monomial.
    pub fn evaluate(&self, rs: &RootSystem, r: HalfInt, s: HalfInt) -> Monomial {
        match self.term() {
            None => Monomial::zero(),
            Some(t) => {
                let mono = Monomial::x(rs, t.root, r + s).scale(&t.coefficient);
                if t.alternating {
                    mono.signed(r.parity_sign())
                } else {
                    mono
                }
            }
        }
    }
}

fn sum_root(rs: &RootSystem, a: &LatticeElement, b: &LatticeElement) -> usize {
    let s = a + b;
    rs.root_by_coords(&s.0).unwrap_or_else(|| panic!("{s} is not a positive root"))
}

/// Classifies `[x_α(r), x_β(s)]` for positive roots `α`, `β` (indices into
/// Δ₊). In the case `⟨α,β⟩ = ⟨να,β⟩ = -1` one of the two roots is ν-fixed
/// and the two terms collapse into one.
pub fn commutator_case(rs: &RootSystem, a: usize, b: usize) -> CommCase {
    let p0 = rs.root_pair(a, b);
    let p1 = rs.root_pair(rs.nu_root(a), b);
    let ea = LatticeElement::root(rs, a);
    let eb = LatticeElement::root(rs, b);
    match (p0, p1) {
        (-1, -1) => {
            let root = sum_root(rs, &ea, &eb);
            let coefficient = if rs.is_fixed_root(a) {
                sign_q(epsilon(rs, &ea, &eb))
            } else {
                assert!(rs.is_fixed_root(b), "neither root of a double pair is ν-fixed");
                -sign_q(epsilon(rs, &eb, &ea))
            };
            CommCase::Double(CommTerm { coefficient, root, alternating: false })
        }
        (-1, _) => CommCase::Single(CommTerm {
            coefficient: half() * sign_q(epsilon(rs, &ea, &eb)),
            root: sum_root(rs, &ea, &eb),
            alternating: false,
        }),
        (_, -1) => {
            // the term comes from ν̂ e_α = ψ(α) e_{να}
            let na = ea.nu(rs);
            CommCase::Single(CommTerm {
                coefficient: half() * sign_q(psi(rs, &ea) * epsilon(rs, &na, &eb)),
                root: sum_root(rs, &na, &eb),
                alternating: true,
            })
        }
        _ => CommCase::Commute,
    }
}

/// The commutator before simplification:
/// `Σ_j (-1)^{2rj} ½ ψ(α)^j ε(ν^jα, β) x_{ν^jα+β}(r+s)` over `j ∈ {0,1}`
/// with `⟨ν^jα, β⟩ = -1`. The `ψ(α)^j` comes from `ν̂ e_α = ψ(α) e_{να}`;
/// without it the two terms cancel for some pairs in type A (e.g.
/// `α = α_1+α_2`, `β = α_3` in A₅).
pub fn commutator_two_term(rs: &RootSystem, a: usize, r: HalfInt, b: usize, s: HalfInt) -> MonomialSum {
    let eb = LatticeElement::root(rs, b);
    let mut out = MonomialSum::new();
    for (j, aj) in [a, rs.nu_root(a)].into_iter().enumerate() {
        if rs.root_pair(aj, b) != -1 {
            continue;
        }
        let ea = LatticeElement::root(rs, aj);
        let mut coefficient = half() * sign_q(epsilon(rs, &ea, &eb));
        if j == 1 {
            coefficient *= sign_q(r.parity_sign() * psi(rs, &LatticeElement::root(rs, a)));
        }
        out.push(Monomial::x(rs, sum_root(rs, &ea, &eb), r + s).scale(&coefficient));
    }
    out
}

fn all_pairs(rs: &RootSystem) -> impl Iterator<Item = (usize, usize)> {
    let n = rs.num_positive();
    (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)))
}

/// If `⟨α,β⟩ = ⟨να,β⟩ = -1` for positive roots then `να = α` or `νβ = β`.
pub fn verify_pair_lemma(rs: &RootSystem) -> Report {
    let mut report = Report::new("pairs", rs.kind());
    let mut pairs = 0u64;
    let mut double = 0u64;
    for (a, b) in all_pairs(rs) {
        pairs += 1;
        if rs.root_pair(a, b) == -1 && rs.root_pair(rs.nu_root(a), b) == -1 {
            double += 1;
            report.check(rs.is_fixed_root(a) || rs.is_fixed_root(b), || {
                format!(
                    "neither α={} nor β={} is ν-fixed",
                    LatticeElement::root(rs, a),
                    LatticeElement::root(rs, b)
                )
            });
        }
    }
    report.set_param("pairs", pairs);
    report.set_param("double_pairs", double);
    report
}

/// If `⟨α_i, α⟩ = 2` for a simple root `α_i` and `α ∈ Δ₊` then `α = α_i`.
pub fn verify_simple_pairing_lemma(rs: &RootSystem) -> Report {
    let mut report = Report::new("simple", rs.kind());
    let mut pairs = 0u64;
    for i in 0..rs.rank() {
        let si = rs.simple_root_index(i);
        for a in 0..rs.num_positive() {
            pairs += 1;
            if rs.root_pair(si, a) == 2 {
                report.check(a == si, || {
                    format!("⟨α_{},{}⟩ = 2", i + 1, LatticeElement::root(rs, a))
                });
            }
        }
    }
    report.set_param("pairs", pairs);
    report
}

/// Modes `-2, -3/2, …, 3/2` used to compare the two forms of the
/// commutator.
const MODE_RANGE: std::ops::RangeInclusive<i64> = -4..=3;

/// Checks, for every ordered pair of positive roots and every pair of modes
/// in a small range, that exactly one case of the table applies and that the
/// simplified commutator equals the two-term form.
pub fn verify_commutator_forms(rs: &RootSystem) -> Report {
    let mut report = Report::new("commutators", rs.kind());
    let mut evaluations = 0u64;
    let mut tags = [0u64; 3];
    for (a, b) in all_pairs(rs) {
        let p0 = rs.root_pair(a, b);
        let p1 = rs.root_pair(rs.nu_root(a), b);
        let conditions = [p0 >= 0 && p1 >= 0, (p0 == -1) != (p1 == -1), p0 == -1 && p1 == -1];
        let case = commutator_case(rs, a, b);
        let tag = case.tag() as usize;
        tags[tag] += 1;
        let exactly_one = conditions.iter().filter(|&&c| c).count() == 1 && conditions[tag];
        report.check(exactly_one, || format!("case table is not a trichotomy at roots {a}, {b}"));
        for r2 in MODE_RANGE {
            for s2 in MODE_RANGE {
                let (r, s) = (HalfInt(r2), HalfInt(s2));
                if Mode::canonical(rs, a, r).is_none() || Mode::canonical(rs, b, s).is_none() {
                    continue;
                }
                evaluations += 1;
                let simplified: MonomialSum = std::iter::once(case.evaluate(rs, r, s)).collect();
                let direct = commutator_two_term(rs, a, r, b, s);
                report.check(simplified == direct, || {
                    format!(
                        "[x{}({r}), x{}({s})]: {} != {}",
                        LatticeElement::root(rs, a),
                        LatticeElement::root(rs, b),
                        simplified.to_text(rs),
                        direct.to_text(rs)
                    )
                });
            }
        }
    }
    report.set_param("commute", tags[0]);
    report.set_param("single", tags[1]);
    report.set_param("double", tags[2]);
    report.set_param("evaluations", evaluations);
    report
}

fn require_rep(rs: &RootSystem, i: usize) -> Result<()> {
    if rs.orbit_position(i).is_none() {
        return Err(Error::InvalidArgument(format!(
            "α_{} is not an orbit representative of {}",
            i + 1,
            rs.kind()
        )));
    }
    Ok(())
}

/// The truncated relation generator `R⁰(α,β|t)` for positive roots `α`,
/// `β`, as a collected formal sum. The shape of the sum depends on
/// `⟨α,β⟩` and `⟨να,β⟩`; all modes in the index set are negative.
pub fn relation_r0_general(rs: &RootSystem, a: usize, b: usize, t: HalfInt) -> Result<Vec<Monomial>> {
    if t.twice() <= 0 {
        return Err(Error::InvalidArgument(format!("t = {t} must be positive")));
    }
    let p0 = rs.root_pair(a, b);
    let p1 = rs.root_pair(rs.nu_root(a), b);
    // (offset, sign of the second term); offset 0 means a single term
    let (offset, sign) = match (p0 >= 0, p1 >= 0) {
        (true, true) => (HalfInt::ZERO, None),
        (false, true) => (HalfInt(1), Some(Sign::Minus)),
        (true, false) => (HalfInt(1), Some(Sign::Plus)),
        (false, false) => (HalfInt(2), Some(Sign::Minus)),
    };
    // m1 + m2 + offset = -t with m1, m2 ≤ -½
    let total = -t - offset;
    let one = BigRational::one();
    let mut out = MonomialSum::new();
    let mut m1 = HalfInt(-1);
    while (total - m1).twice() < 0 {
        let m2 = total - m1;
        match sign {
            None => out.push(Monomial::from_factors(rs, one.clone(), &[(a, m1), (b, m2)])),
            Some(sign) => {
                out.push(Monomial::from_factors(rs, one.clone(), &[(a, m1 + offset), (b, m2)]));
                out.push(
                    Monomial::from_factors(rs, one.clone(), &[(a, m1), (b, m2 + offset)]).signed(sign),
                );
            }
        }
        m1 = m1 - HalfInt(1);
    }
    Ok(out.terms())
}

/// `R⁰(α_i,α_i|t)` for an orbit representative `α_i`: the monomials
/// `x_{α_i}(m_1) x_{α_i}(m_2)` with `m_1 + m_2 = -t`, both negative. `t`
/// must be a positive integer when `α_i` is ν-fixed and a positive element
/// of `½ℤ` otherwise.
pub fn relation_r0(rs: &RootSystem, i: usize, t: HalfInt) -> Result<Vec<Monomial>> {
    require_rep(rs, i)?;
    if rs.is_fixed_simple(i) && !t.is_integer() {
        return Err(Error::InvalidArgument(format!(
            "t = {t} must be an integer for the ν-fixed root α_{}",
            i + 1
        )));
    }
    let si = rs.simple_root_index(i);
    relation_r0_general(rs, si, si, t)
}

/// The character `θ_i` of the root lattice: `θ_i(α_j) = -1` exactly when
/// `j = i` and `α_i` is not ν-fixed.
pub fn theta_char(rs: &RootSystem, i: usize, alpha: &LatticeElement) -> Result<Sign> {
    require_rep(rs, i)?;
    if rs.is_fixed_simple(i) {
        Ok(Sign::Plus)
    } else {
        Ok(Sign::from_parity(alpha.0[i]))
    }
}

/// `⟨β, (λ_i)₀⟩ = (r_i + r_{νi}) / 2` for `β = Σ r_j α_j`.
fn pairing_with_projected_dual(rs: &RootSystem, i: usize, beta: &[i64]) -> HalfInt {
    HalfInt(beta[i] + beta[rs.nu_on_simples()[i]])
}

/// `⟨β, (α_i)₀⟩`.
fn pairing_with_projected_simple(rs: &RootSystem, i: usize, beta: &[i64]) -> HalfInt {
    let ai = LatticeElement::simple(rs.rank(), i);
    let nai = ai.nu(rs);
    HalfInt(rs.pair_coords(beta, &ai.0) + rs.pair_coords(beta, &nai.0))
}

/// Shifts each factor `x_β(m) ↦ x_β(m + dir·k(β))` and multiplies by
/// `θ_i(Σβ)`.
fn shift(rs: &RootSystem, i: usize, mono: &Monomial, dir: i64, k: impl Fn(&[i64]) -> HalfInt) -> Result<Monomial> {
    require_rep(rs, i)?;
    if mono.is_zero() {
        return Ok(Monomial::zero());
    }
    let theta = theta_char(rs, i, &mono.root_sum(rs))?;
    let mut factors = Vec::with_capacity(mono.degree());
    for f in &mono.factors {
        let d = k(rs.root_coords(f.root));
        let m = HalfInt(f.m.twice() + dir * d.twice());
        assert!(
            !rs.is_fixed_root(f.root) || m.is_integer(),
            "shift moved a ν-fixed root to a half-integer mode"
        );
        factors.push(Mode { root: f.root, m });
    }
    Ok(Monomial { scalar: mono.scalar.clone(), factors }.signed(theta))
}

/// `τ_i = τ_{γ_i,θ_i}` with `γ_i = (λ_i)₀`.
pub fn tau_shift(rs: &RootSystem, i: usize, mono: &Monomial) -> Result<Monomial> {
    shift(rs, i, mono, 1, |b| pairing_with_projected_dual(rs, i, b))
}

/// `τ_{-γ_i,θ_i⁻¹}`, the inverse of [`tau_shift`].
pub fn tau_inverse(rs: &RootSystem, i: usize, mono: &Monomial) -> Result<Monomial> {
    shift(rs, i, mono, -1, |b| pairing_with_projected_dual(rs, i, b))
}

/// The constant-term Δ-map on the principal subspace acts on monomials as
/// `τ_i`.
pub fn delta_shift(rs: &RootSystem, i: usize, mono: &Monomial) -> Result<Monomial> {
    tau_shift(rs, i, mono)
}

/// `ψ_i(a) = τ_{-(α_i)₀,θ_i⁻¹}(a) · x_{α_i}(-1)` (or `x_{α_i}(-½)` when
/// `α_i` is not ν-fixed).
pub fn psi_map(rs: &RootSystem, i: usize, mono: &Monomial) -> Result<Monomial> {
    let shifted = shift(rs, i, mono, -1, |b| pairing_with_projected_simple(rs, i, b))?;
    let m = if rs.is_fixed_simple(i) { HalfInt(-2) } else { HalfInt(-1) };
    Ok(shifted.mul(&Monomial::x(rs, rs.simple_root_index(i), m)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::RootSystemKind;

    fn a(n: u32) -> RootSystem {
        RootSystem::new(RootSystemKind::a_odd(n).unwrap())
    }

    fn d(n: u32) -> RootSystem {
        RootSystem::new(RootSystemKind::d(n).unwrap())
    }

    fn e6() -> RootSystem {
        RootSystem::new(RootSystemKind::e6())
    }

    fn h(twice: i64) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    #[test]
    fn half_ints() {
        assert_eq!(h(-1).to_string(), "-1/2");
        assert_eq!(h(-4).to_string(), "-2");
        assert_eq!("-3/2".parse::<HalfInt>().unwrap(), h(-3));
        assert_eq!("2".parse::<HalfInt>().unwrap(), h(4));
        assert!("1/3".parse::<HalfInt>().is_err());
        assert_eq!(h(3).parity_sign(), Sign::Minus);
    }

    #[test]
    fn weights() {
        let rs = a(2);
        let s0 = rs.simple_root_index(0);
        let x = Monomial::x(&rs, s0, h(-2));
        assert_eq!(x.factors()[0].weight(), HalfInt::integer(1));
        assert_eq!(mode_weight(&Monomial::x(&rs, s0, HalfInt::ZERO).factors()[0]), BigRational::zero());
        assert_eq!(Monomial::x(&rs, s0, h(-1)).weight(), h(1));
    }

    #[test]
    fn fixed_roots_vanish_at_half_integers() {
        let rs = a(2);
        let fixed = rs.simple_root_index(1);
        assert!(rs.is_fixed_root(fixed));
        assert!(Monomial::x(&rs, fixed, h(-1)).is_zero());
        assert!(!Monomial::x(&rs, fixed, h(-2)).is_zero());
        let y = Monomial::x(&rs, rs.simple_root_index(0), h(-1));
        assert!(y.mul(&Monomial::x(&rs, fixed, h(1))).is_zero());
    }

    #[test]
    fn nu_images_canonicalize_with_sign() {
        let rs = a(2);
        let a1 = rs.simple_root_index(0);
        let a3 = rs.simple_root_index(2);
        // ψ(α_1) = 1, so the sign is (-1)^{2m}
        assert_eq!(Monomial::x(&rs, a3, h(-2)), Monomial::x(&rs, a1, h(-2)));
        assert_eq!(Monomial::x(&rs, a3, h(-1)), Monomial::x(&rs, a1, h(-1)).signed(Sign::Minus));
        // ν(α_1+α_2) = α_2+α_3 and ψ(α_1+α_2) = -1
        let a12 = rs.root_by_coords(&[1, 1, 0]).unwrap();
        let a23 = rs.root_by_coords(&[0, 1, 1]).unwrap();
        assert_eq!(Monomial::x(&rs, a23, h(-2)), Monomial::x(&rs, a12, h(-2)).signed(Sign::Minus));
    }

    #[test]
    fn text_form() {
        let rs = a(2);
        let a1 = rs.simple_root_index(0);
        let a2 = rs.simple_root_index(1);
        let m = Monomial::from_factors(&rs, half(), &[(a2, h(-2)), (a1, h(-1))]);
        assert_eq!(m.to_text(&rs), "1/2 * x[0,1,0](-1) x[1,0,0](-1/2)");
        assert_eq!(Monomial::one().to_text(&rs), "1 * 1");
    }

    #[test]
    fn case_examples() {
        let rs = a(2);
        let (a1, a2, a3) = (rs.simple_root_index(0), rs.simple_root_index(1), rs.simple_root_index(2));
        assert_eq!(commutator_case(&rs, a1, a3), CommCase::Commute);
        let c = commutator_case(&rs, a1, a2);
        assert_eq!(c.tag(), CommTag::Double);
        let e = |x: usize, y: usize| {
            epsilon(&rs, &LatticeElement::root(&rs, x), &LatticeElement::root(&rs, y)).value()
        };
        assert_eq!(c.term().unwrap().coefficient, BigRational::from_integer((-e(a2, a1)).into()));

        let rs = d(4);
        let (b1, b2) = (rs.simple_root_index(0), rs.simple_root_index(1));
        let c = commutator_case(&rs, b1, b2);
        assert_eq!(c.tag(), CommTag::Double);
        let t = c.term().unwrap();
        assert_eq!(t.root, rs.root_by_coords(&[1, 1, 0, 0]).unwrap());
        assert_eq!(t.coefficient, BigRational::one());
    }

    #[test]
    fn single_case_has_half_coefficient() {
        let rs = d(4);
        // α_2 and α_3: ⟨α_2,α_3⟩ = -1, ⟨να_2,α_3⟩ = -1 too (α_2 fixed), so
        // look at α_3, α_2+α_4 instead: ⟨α_3, α_2+α_4⟩ = -1, ⟨α_4, α_2+α_4⟩ = 1
        let a3 = rs.simple_root_index(2);
        let b = rs.root_by_coords(&[0, 1, 0, 1]).unwrap();
        let c = commutator_case(&rs, a3, b);
        assert_eq!(c.tag(), CommTag::Single);
        let t = c.term().unwrap();
        assert_eq!(num_traits::Signed::abs(&t.coefficient), half());
        assert!(!t.alternating);
        // ⟨α_4, α_2+α_4⟩ = 1 and ⟨α_3, α_2+α_4⟩ = -1: the ν-translated term
        let c = commutator_case(&rs, rs.simple_root_index(3), b);
        assert_eq!(c.tag(), CommTag::Single);
        let t = c.term().unwrap();
        assert!(t.alternating);
        assert_eq!(t.root, rs.root_by_coords(&[0, 1, 1, 1]).unwrap());
    }

    #[test]
    fn commutator_forms_agree() {
        for rs in [a(2), a(3), d(4), d(5), e6()] {
            let r = verify_commutator_forms(&rs);
            assert!(r.pass, "{r}");
        }
    }

    #[test]
    fn lemma_pair_counts() {
        for (rs, n) in [(a(2), 36u64), (d(4), 144), (e6(), 1296)] {
            let r = verify_pair_lemma(&rs);
            assert!(r.pass);
            assert_eq!(r.params["pairs"], n);
        }
        for rs in [a(3), d(5), e6()] {
            assert!(verify_simple_pairing_lemma(&rs).pass);
        }
    }

    #[test]
    fn r0_single_root() {
        let rs = a(2);
        let fixed = 1;
        let x = |m| (rs.simple_root_index(fixed), h(m));
        let one = BigRational::one();
        assert_eq!(
            relation_r0(&rs, fixed, HalfInt::integer(2)).unwrap(),
            vec![Monomial::from_factors(&rs, one.clone(), &[x(-2), x(-2)])]
        );
        assert!(relation_r0(&rs, fixed, HalfInt::integer(1)).unwrap().is_empty());
        assert!(relation_r0(&rs, fixed, h(3)).is_err());
        assert!(relation_r0(&rs, fixed, HalfInt::ZERO).is_err());

        let y = |m| (rs.simple_root_index(0), h(m));
        assert_eq!(
            relation_r0(&rs, 0, HalfInt::integer(1)).unwrap(),
            vec![Monomial::from_factors(&rs, one.clone(), &[y(-1), y(-1)])]
        );
        assert_eq!(relation_r0(&rs, 0, HalfInt::integer(2)).unwrap().len(), 3);
        // α_3 is not a representative
        assert!(relation_r0(&rs, 2, HalfInt::integer(1)).is_err());
    }

    #[test]
    fn r0_shapes() {
        let rs = a(2);
        let (a1, a2, a3) = (rs.simple_root_index(0), rs.simple_root_index(1), rs.simple_root_index(2));
        let one = BigRational::one();
        // ⟨α_1,α_2⟩ = ⟨α_3,α_2⟩ = -1: x(m1+1)x(m2) - x(m1)x(m2+1), m1+m2 = -t-1
        let r = relation_r0_general(&rs, a1, a2, HalfInt::integer(1)).unwrap();
        // (m1,m2) = (-1/2,-3/2): x_1(1/2)x_2(-3/2) vanishes, x_1(-1/2)x_2(-1/2) vanishes
        // (m1,m2) = (-1,-1): x_1(0)x_2(-1) - x_1(-1)x_2(0)
        // (m1,m2) = (-3/2,-1/2): x_1(-1/2)x_2(-1/2) vanishes, x_1(-3/2)x_2(1/2) vanishes
        assert_eq!(
            MonomialSum::from_iter(r),
            MonomialSum::from_iter([
                Monomial::from_factors(&rs, one.clone(), &[(a1, h(0)), (a2, h(-2))]),
                Monomial::from_factors(&rs, -one.clone(), &[(a1, h(-2)), (a2, h(0))]),
            ])
        );
        // ⟨α_1,α_3⟩ = 0, ⟨α_3,α_3⟩ = 2: single term
        let r = relation_r0_general(&rs, a1, a3, HalfInt::integer(1)).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].degree(), 2);

        let rs = d(4);
        let a3 = rs.simple_root_index(2);
        let b = rs.root_by_coords(&[0, 1, 0, 1]).unwrap();
        let x = |r: usize, m| (r, h(m));
        // ⟨α_3, α_2+α_4⟩ = -1, ⟨α_4, α_2+α_4⟩ = 1: minus sign, offset ½,
        // m1 + m2 = -3/2 → (m1,m2) ∈ {(-1/2,-1), (-1,-1/2)}
        let minus = relation_r0_general(&rs, a3, b, h(2)).unwrap();
        assert_eq!(
            MonomialSum::from_iter(minus),
            MonomialSum::from_iter([
                Monomial::from_factors(&rs, one.clone(), &[x(a3, 0), x(b, -2)]),
                Monomial::from_factors(&rs, -one.clone(), &[x(a3, -1), x(b, -1)]),
                Monomial::from_factors(&rs, one.clone(), &[x(a3, -1), x(b, -1)]),
                Monomial::from_factors(&rs, -one.clone(), &[x(a3, -2), x(b, 0)]),
            ])
        );
        // the swapped situation gives the plus sign
        let a4 = rs.simple_root_index(3);
        let plus = relation_r0_general(&rs, a4, b, h(2)).unwrap();
        assert_eq!(
            MonomialSum::from_iter(plus),
            MonomialSum::from_iter([
                Monomial::from_factors(&rs, one.clone(), &[x(a4, 0), x(b, -2)]),
                Monomial::from_factors(&rs, one.clone(), &[x(a4, -1), x(b, -1)]),
                Monomial::from_factors(&rs, one.clone(), &[x(a4, -1), x(b, -1)]),
                Monomial::from_factors(&rs, one.clone(), &[x(a4, -2), x(b, 0)]),
            ])
        );
        assert!(relation_r0_general(&rs, a4, b, HalfInt::ZERO).is_err());
    }

    #[test]
    fn theta_lists() {
        let rs = a(3);
        for j in 0..rs.rank() {
            let aj = LatticeElement::simple(rs.rank(), j);
            assert_eq!(theta_char(&rs, 2, &aj).unwrap(), Sign::Plus);
            assert_eq!(theta_char(&rs, 0, &aj).unwrap() == Sign::Minus, j == 0);
        }
        let rs = d(4);
        let s = |j| LatticeElement::simple(4, j);
        assert_eq!(theta_char(&rs, 2, &s(2)).unwrap(), Sign::Minus);
        assert_eq!(theta_char(&rs, 2, &s(3)).unwrap(), Sign::Plus);
        assert_eq!(theta_char(&rs, 0, &s(0)).unwrap(), Sign::Plus);
        let rs = e6();
        let s = |j| LatticeElement::simple(6, j);
        assert_eq!(theta_char(&rs, 0, &s(0)).unwrap(), Sign::Minus);
        assert_eq!(theta_char(&rs, 1, &s(1)).unwrap(), Sign::Minus);
        for j in 0..6 {
            assert_eq!(theta_char(&rs, 2, &s(j)).unwrap(), Sign::Plus);
            assert_eq!(theta_char(&rs, 5, &s(j)).unwrap(), Sign::Plus);
        }
        assert!(theta_char(&rs, 4, &s(0)).is_err());
    }

    #[test]
    fn shift_examples() {
        for rs in [a(2), d(4), e6()] {
            for &i in rs.orbit_representatives() {
                let si = rs.simple_root_index(i);
                let fixed = rs.is_fixed_simple(i);
                let start = if fixed { h(-2) } else { h(-1) };
                let x = Monomial::x(&rs, si, start);
                let theta = theta_char(&rs, i, &LatticeElement::simple(rs.rank(), i)).unwrap();
                let t = tau_shift(&rs, i, &x).unwrap();
                assert_eq!(t, Monomial::x(&rs, si, HalfInt::ZERO).signed(theta));
                assert_eq!(delta_shift(&rs, i, &x).unwrap(), t);
                assert_eq!(tau_inverse(&rs, i, &t).unwrap(), x);
                let p = psi_map(&rs, i, &t).unwrap();
                let expected = if fixed {
                    Monomial::from_factors(&rs, BigRational::one(), &[(si, h(-4)), (si, h(-2))])
                } else {
                    Monomial::from_factors(&rs, BigRational::one(), &[(si, h(-2)), (si, h(-1))])
                };
                assert_eq!(p, expected, "{} i={i}", rs.kind());
                assert_eq!(psi_map(&rs, i, &Monomial::one()).unwrap(), Monomial::x(&rs, si, start));
            }
        }
    }

    #[test]
    fn psi_map_raises_charge() {
        let rs = e6();
        let m = Monomial::from_factors(&rs, BigRational::one(), &[(7, h(-3)), (20, h(-4))]);
        for (pos, &i) in rs.orbit_representatives().iter().enumerate() {
            let before = m.charge(&rs);
            let after = psi_map(&rs, i, &m).unwrap().charge(&rs);
            for k in 0..before.len() {
                assert_eq!(after[k] - before[k], i64::from(k == pos));
            }
        }
    }
}
