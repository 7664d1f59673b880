//! Multigraded characters of the principal subspace, truncated in `q`.
//!
//! A character is stored per sector: the coefficient of `x^m` is a
//! polynomial in `q` kept to degree `cap`. Everything is exact in `x`, so the
//! substitutions `x_j ↦ q^c x_j` used by the recursions act sector by sector
//! without loss.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{linalg, ChargeMatrix, RootSystem, RootSystemKind};
use crate::report::Report;

pub type Poly = Vec<BigInt>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiSeries {
    k: usize,
    cap: usize,
    sectors: BTreeMap<Vec<u32>, Poly>,
}

impl MultiSeries {
    pub fn new(k: usize, cap: usize) -> Self {
        MultiSeries { k, cap, sectors: BTreeMap::new() }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn sectors(&self) -> impl Iterator<Item = (&Vec<u32>, &Poly)> {
        self.sectors.iter()
    }

    pub fn num_sectors(&self) -> usize {
        self.sectors.len()
    }

    pub fn sector(&self, m: &[u32]) -> Option<&Poly> {
        self.sectors.get(m)
    }

    /// `[x^m q^n]`, zero outside the stored range.
    pub fn coefficient(&self, m: &[u32], n: i64) -> BigInt {
        if n < 0 || n as usize > self.cap {
            return BigInt::zero();
        }
        self.sectors.get(m).map_or_else(BigInt::zero, |p| p[n as usize].clone())
    }

    /// Stores a sector, truncating or zero-padding it to `cap + 1`
    /// coefficients. All-zero sectors are dropped.
    pub fn insert(&mut self, m: Vec<u32>, mut poly: Poly) {
        assert_eq!(m.len(), self.k, "sector index has the wrong length");
        poly.resize(self.cap + 1, BigInt::zero());
        if poly.iter().all(Zero::is_zero) {
            self.sectors.remove(&m);
        } else {
            self.sectors.insert(m, poly);
        }
    }

    /// Adds `delta` to `[x^m q^n]`.
    pub fn add_to(&mut self, m: &[u32], n: usize, delta: &BigInt) {
        let mut poly = self.sectors.get(m).cloned().unwrap_or_default();
        poly.resize(self.cap + 1, BigInt::zero());
        poly[n] += delta;
        self.insert(m.to_vec(), poly);
    }

    pub fn is_zero(&self) -> bool {
        self.sectors.is_empty()
    }

    pub fn truncate(&self, cap: usize) -> MultiSeries {
        let mut out = MultiSeries::new(self.k, cap);
        for (m, p) in &self.sectors {
            out.insert(m.clone(), p[..=cap.min(self.cap)].to_vec());
        }
        out
    }

    pub fn sub(&self, other: &MultiSeries) -> Result<MultiSeries> {
        if self.cap != other.cap {
            return Err(Error::CapMismatch { left: self.cap, right: other.cap });
        }
        if self.k != other.k {
            return Err(Error::DimensionMismatch { expected: self.k, found: other.k });
        }
        let mut out = self.clone();
        for (m, p) in &other.sectors {
            for (n, c) in p.iter().enumerate() {
                if !c.is_zero() {
                    out.add_to(m, n, &-c);
                }
            }
        }
        Ok(out)
    }

    /// Sum over all sectors: the `x = 1` specialization.
    pub fn specialize_x1(&self) -> Poly {
        let mut out = vec![BigInt::zero(); self.cap + 1];
        for p in self.sectors.values() {
            for (o, c) in out.iter_mut().zip(p) {
                *o += c;
            }
        }
        out
    }

    /// `x_j ↦ q^c x_j`: sector `m` is multiplied by `q^{c·m_j}`.
    pub fn substitute(&self, j: usize, c: usize) -> MultiSeries {
        let mut out = MultiSeries::new(self.k, self.cap);
        for (m, p) in &self.sectors {
            let s = c * m[j] as usize;
            if s > self.cap {
                continue;
            }
            let mut q = vec![BigInt::zero(); s];
            q.extend_from_slice(&p[..=self.cap - s]);
            out.insert(m.clone(), q);
        }
        out
    }
}

impl fmt::Display for MultiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (m, p) in &self.sectors {
            let mono: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(j, &e)| if e == 1 { format!("x{}", j + 1) } else { format!("x{}^{e}", j + 1) })
                .collect();
            let mono = if mono.is_empty() { "1".to_string() } else { mono.join(" ") };
            writeln!(f, "{mono}: {}", poly_to_string(p))?;
        }
        write!(f, "+ O(q^{})", self.cap + 1)
    }
}

pub fn poly_to_string(p: &[BigInt]) -> String {
    let terms: Vec<String> = p
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(n, c)| match n {
            0 => format!("{c}"),
            1 => format!("{c}q"),
            _ => format!("{c}q^{n}"),
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

/// `1/(q^a;q^a)_m` to degree `cap`: partitions into at most `m` parts, each
/// divisible by `a`.
pub fn inverse_pochhammer(a: usize, m: usize, cap: usize) -> Poly {
    assert!(a > 0);
    let mut c = vec![BigInt::zero(); cap + 1];
    c[0] = BigInt::from(1);
    for r in 1..=m {
        let step = a * r;
        for n in step..=cap {
            let prev = c[n - step].clone();
            c[n] += prev;
        }
    }
    c
}

/// Bound on `m_j` over `{m : mᵀAm/2 ≤ cap}`, from
/// `m_j² ≤ 2·cap·(A⁻¹)_jj`.
fn box_bounds(a: &ChargeMatrix, cap: usize) -> Vec<u32> {
    let inv = linalg::inverse(&linalg::from_ints(&a.entries)).expect("charge matrix is nonsingular");
    (0..a.k())
        .map(|j| {
            let limit = (&inv[j][j] * BigInt::from(2 * cap)).floor().to_integer();
            let limit = limit.to_u64().expect("positive definite");
            (limit as f64).sqrt() as u32 + 1
        })
        .collect()
}

/// All `m ∈ ℤ₊ᵏ` with `mᵀAm/2 ≤ cap`, in lexicographic order.
pub fn sectors_within(a: &ChargeMatrix, cap: usize) -> Vec<Vec<u32>> {
    let bounds = box_bounds(a, cap);
    let k = a.k();
    let mut out = Vec::new();
    let mut m = vec![0u32; k];
    loop {
        if a.half_norm(&m) <= cap as i64 {
            out.push(m.clone());
        }
        let mut i = k;
        loop {
            if i == 0 {
                out.sort();
                return out;
            }
            i -= 1;
            if m[i] < bounds[i] {
                m[i] += 1;
                break;
            }
            m[i] = 0;
        }
    }
}

fn shift_position(rs: &RootSystem, shift: Option<usize>) -> Result<Option<usize>> {
    shift
        .map(|i| {
            rs.orbit_position(i).ok_or_else(|| {
                Error::InvalidArgument(format!("α_{} is not an orbit representative of {}", i + 1, rs.kind()))
            })
        })
        .transpose()
}

/// The closed form
/// `Σ_m x^m q^{mᵀAm/2} / ∏_j (q^{a_j};q^{a_j})_{m_j}`, truncated at `cap`.
/// With `shift = Some(i)` (a simple-root index that is an orbit
/// representative) the exponent gains `a_j m_j` for the position `j` of
/// `α_i`.
pub fn nahm_character(rs: &RootSystem, cap: usize, shift: Option<usize>) -> Result<MultiSeries> {
    let a = rs.charge_matrix();
    let shift = shift_position(rs, shift)?;
    let mut cache: HashMap<(usize, u32), Poly> = HashMap::new();
    let mut out = MultiSeries::new(a.k(), cap);
    for m in sectors_within(&a, cap) {
        let mut lead = a.half_norm(&m) as usize;
        if let Some(j) = shift {
            lead += a.a[j] as usize * m[j] as usize;
        }
        if lead > cap {
            continue;
        }
        let room = cap - lead;
        let mut poly = vec![BigInt::zero(); room + 1];
        poly[0] = BigInt::from(1);
        for (j, &mj) in m.iter().enumerate() {
            if mj == 0 {
                continue;
            }
            let aj = a.a[j] as usize;
            let inv = cache.entry((aj, mj)).or_insert_with(|| inverse_pochhammer(aj, mj as usize, cap));
            poly = mul_truncated(&poly, inv, room);
        }
        let mut full = vec![BigInt::zero(); lead];
        full.extend(poly);
        out.insert(m, full);
    }
    Ok(out)
}

fn mul_truncated(p: &[BigInt], q: &[BigInt], cap: usize) -> Poly {
    let mut out = vec![BigInt::zero(); cap + 1];
    for (i, x) in p.iter().enumerate().take(cap + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in q.iter().enumerate().take(cap + 1 - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pivot {
    Smallest,
    Largest,
}

impl Pivot {
    fn choose(self, m: &[u32]) -> usize {
        match self {
            Pivot::Smallest => (0..m.len()).find(|&i| m[i] > 0),
            Pivot::Largest => (0..m.len()).rev().find(|&i| m[i] > 0),
        }
        .expect("pivot of the zero sector")
    }
}

/// Solves for the character coefficients from the recursion alone:
/// sector `0` is `1`, and for `m ≠ 0` with pivot `i`, `m' = m − e_i`,
///
/// `[x^m q^n] = [x^m q^{n − a_i m_i}] + [x^{m'} q^{n − a_i − (Am')_i}]`.
///
/// Because `(Am')_i` can be negative, sector `m'` may be needed beyond
/// `cap`; the required degree of every sector is propagated downward first.
pub fn recursion_solve_with(rs: &RootSystem, cap: usize, pivot: Pivot) -> MultiSeries {
    let a = rs.charge_matrix();
    let k = a.k();
    let targets = sectors_within(&a, cap);

    // required degree per sector, filled from the top down by total charge
    let mut demand: BTreeMap<(u32, Vec<u32>), i64> = BTreeMap::new();
    for m in &targets {
        demand.insert((m.iter().sum(), m.clone()), cap as i64);
    }
    let mut order = Vec::new();
    while let Some(((size, m), d)) = demand.pop_last() {
        order.push((m.clone(), d));
        if size == 0 {
            continue;
        }
        let i = pivot.choose(&m);
        let mut mp = m.clone();
        mp[i] -= 1;
        let need = d - a.a[i] - a.row_dot(i, &mp);
        if need >= 0 {
            let e = demand.entry((size - 1, mp)).or_insert(need);
            *e = (*e).max(need);
        }
    }

    let mut solved: HashMap<Vec<u32>, Poly> = HashMap::new();
    let zero = BigInt::zero();
    for (m, d) in order.into_iter().rev() {
        let d = d as usize;
        let mut poly = vec![BigInt::zero(); d + 1];
        if m.iter().all(|&x| x == 0) {
            poly[0] = BigInt::from(1);
            solved.insert(m, poly);
            continue;
        }
        let i = pivot.choose(&m);
        let mut mp = m.clone();
        mp[i] -= 1;
        let step = (a.a[i] * m[i] as i64) as usize;
        let offset = a.a[i] + a.row_dot(i, &mp);
        let lower = solved.get(&mp);
        for n in 0..=d {
            let mut c = if n >= step { poly[n - step].clone() } else { BigInt::zero() };
            let idx = n as i64 - offset;
            if idx >= 0 {
                c += lower.and_then(|p| p.get(idx as usize)).unwrap_or(&zero);
            }
            poly[n] = c;
        }
        solved.insert(m, poly);
    }

    let mut out = MultiSeries::new(k, cap);
    for m in targets {
        let poly = solved.remove(&m).expect("target sector solved");
        out.insert(m, poly);
    }
    out
}

pub fn recursion_solve(rs: &RootSystem, cap: usize) -> MultiSeries {
    recursion_solve_with(rs, cap, Pivot::Smallest)
}

/// Residual of the recursion with pivot `α_i` (an orbit representative):
/// per sector `m`, `[x^m q^n]χ − [x^m q^{n − a_i m_i}]χ − [x^{m'} q^{n − a_i − (Am')_i}]χ`.
///
/// The last term refers to degrees above the cap when `a_i + (Am')_i < 0`;
/// such degrees `n` are not checkable from a truncated series and are left
/// at zero, so the residual covers `n ≤ min(cap, cap + a_i + (Am')_i)`.
pub fn recursion_residual(rs: &RootSystem, i: usize, series: &MultiSeries) -> Result<MultiSeries> {
    let a = rs.charge_matrix();
    if series.k() != a.k() {
        return Err(Error::DimensionMismatch { expected: a.k(), found: series.k() });
    }
    let j = shift_position(rs, Some(i))?.unwrap();
    let cap = series.cap() as i64;
    let mut sectors: Vec<Vec<u32>> = series.sectors().map(|(m, _)| m.clone()).collect();
    sectors.extend(series.sectors().map(|(m, _)| {
        let mut up = m.clone();
        up[j] += 1;
        up
    }));
    sectors.sort();
    sectors.dedup();

    let mut out = MultiSeries::new(a.k(), series.cap());
    for m in sectors {
        if m[j] == 0 {
            // the recursion only applies to sectors with m_j ≥ 1; there it
            // reads [x^m q^n] = [x^m q^n]
            continue;
        }
        let mut mp = m.clone();
        mp[j] -= 1;
        let step = a.a[j] * m[j] as i64;
        let offset = a.a[j] + a.row_dot(j, &mp);
        let top = cap.min(cap + offset);
        let mut poly = vec![BigInt::zero(); series.cap() + 1];
        for n in 0..=top.max(-1) {
            poly[n as usize] = series.coefficient(&m, n)
                - series.coefficient(&m, n - step)
                - series.coefficient(&mp, n - offset);
        }
        out.insert(m, poly);
    }
    Ok(out)
}

/// Checks `χ′(…, q^{a_j} x_j, …) = χ′_j` against the closed form with the
/// extra `q^{a_j m_j}`, for the orbit representative `α_i` at position `j`.
pub fn shifted_character_check(rs: &RootSystem, i: usize, cap: usize) -> Result<Report> {
    let j = shift_position(rs, Some(i))?.unwrap();
    let a = rs.charge_matrix();
    let mut report = Report::new("shifted", rs.kind()).param("cap", cap as u64).param("shift", (i + 1) as u64);
    let substituted = nahm_character(rs, cap, None)?.substitute(j, a.a[j] as usize);
    let direct = nahm_character(rs, cap, Some(i))?;
    let zero = vec![0u32; a.k()];
    let one = |s: &MultiSeries| {
        s.sector(&zero).is_some_and(|p| p[0] == BigInt::from(1) && p[1..].iter().all(Zero::is_zero))
    };
    report.check(one(&substituted) && one(&direct), || "sector 0 is not 1".into());
    let diff = substituted.sub(&direct)?;
    report.check(diff.is_zero(), || {
        let (m, p) = diff.sectors().next().unwrap();
        format!("sector {m:?} differs by {}", poly_to_string(p))
    });
    report.set_param("sectors", direct.num_sectors() as u64);
    Ok(report)
}

/// Compares the closed form with the recursion solution, and checks every
/// recursion residual of the closed form.
pub fn recursion_check(rs: &RootSystem, cap: usize) -> Report {
    let mut report = Report::new("recursion", rs.kind()).param("cap", cap as u64);
    let closed = nahm_character(rs, cap, None).expect("unshifted");
    let solved = recursion_solve(rs, cap);
    let diff = closed.sub(&solved).expect("same cap");
    report.check(diff.is_zero(), || {
        let (m, p) = diff.sectors().next().unwrap();
        format!("closed form minus recursion solution in sector {m:?}: {}", poly_to_string(p))
    });
    for &i in rs.orbit_representatives() {
        let r = recursion_residual(rs, i, &closed).expect("representative");
        report.check(r.is_zero(), || {
            let (m, p) = r.sectors().next().unwrap();
            format!("residual for α_{} in sector {m:?}: {}", i + 1, poly_to_string(p))
        });
    }
    report.set_param("sectors", closed.num_sectors() as u64);
    report
}

/// JSON form `{"kind","n","cap","shift","sectors":[{"m","poly"}]}`.
/// Coefficients are JSON integers of arbitrary size; `shift` is the 1-based
/// label of the shifted simple root.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharacterJson {
    pub kind: String,
    pub n: u32,
    pub cap: usize,
    pub shift: Option<usize>,
    pub sectors: Vec<SectorJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SectorJson {
    pub m: Vec<u32>,
    pub poly: Vec<serde_json::Number>,
}

impl CharacterJson {
    pub fn new(kind: RootSystemKind, shift: Option<usize>, series: &MultiSeries) -> Self {
        let sectors = series
            .sectors()
            .map(|(m, p)| SectorJson {
                m: m.clone(),
                poly: p.iter().map(|c| c.to_string().parse().expect("integer literal")).collect(),
            })
            .collect();
        CharacterJson {
            kind: kind.family().label().to_string(),
            n: kind.n(),
            cap: series.cap(),
            shift: shift.map(|i| i + 1),
            sectors,
        }
    }

    pub fn to_series(&self) -> Result<MultiSeries> {
        let k = self.sectors.first().map_or(0, |s| s.m.len());
        let mut out = MultiSeries::new(k, self.cap);
        for s in &self.sectors {
            if s.m.len() != k {
                return Err(Error::DimensionMismatch { expected: k, found: s.m.len() });
            }
            let poly = s
                .poly
                .iter()
                .map(|c| c.to_string().parse::<BigInt>().map_err(|e| Error::InvalidArgument(e.to_string())))
                .collect::<Result<Poly>>()?;
            out.insert(s.m.clone(), poly);
        }
        Ok(out)
    }
}
