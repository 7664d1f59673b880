//! The six-dimensional E6 basis and the change of basis into the symmetric
//! nine-dimensional embedding. Only used to check that the embedding is an
//! isometry on simple roots; the nine-dimensional coordinates are what the
//! rest of the crate works with.

use std::ops::{Add, Mul};

use num_rational::BigRational;
use num_traits::Zero;

/// An element `a + b·√3` of Q(√3).
#[derive(Clone, Debug, PartialEq, Eq)]
struct QSqrt3 {
    a: BigRational,
    b: BigRational,
}

impl QSqrt3 {
    fn rational(a: BigRational) -> Self {
        QSqrt3 { a, b: BigRational::zero() }
    }

    fn zero() -> Self {
        Self::rational(BigRational::zero())
    }
}

impl Add for &QSqrt3 {
    type Output = QSqrt3;
    fn add(self, o: &QSqrt3) -> QSqrt3 {
        QSqrt3 { a: &self.a + &o.a, b: &self.b + &o.b }
    }
}

impl Mul for &QSqrt3 {
    type Output = QSqrt3;
    fn mul(self, o: &QSqrt3) -> QSqrt3 {
        let three = BigRational::from_integer(3.into());
        QSqrt3 {
            a: &self.a * &o.a + three * &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// `n/d + (sn/sd)·√3`
fn qs(n: i64, d: i64, sn: i64, sd: i64) -> QSqrt3 {
    QSqrt3 { a: q(n, d), b: q(sn, sd) }
}

fn r(n: i64, d: i64) -> QSqrt3 {
    QSqrt3::rational(q(n, d))
}

fn standard_simple_roots() -> Vec<Vec<QSqrt3>> {
    let e = |i: usize, j: usize, s: i64| {
        let mut v = vec![QSqrt3::zero(); 6];
        v[i] = r(1, 1);
        v[j] = r(s, 1);
        v
    };
    let mut a5 = vec![r(-1, 2); 5];
    a5.push(qs(0, 1, 1, 2));
    vec![e(0, 1, -1), e(1, 2, -1), e(2, 3, -1), e(3, 4, 1), a5, e(3, 4, -1)]
}

/// Rows of the 9×6 change of basis matrix. Entries with `1/√3` are written
/// as `√3/3`.
fn change_of_basis() -> Vec<Vec<QSqrt3>> {
    let s = |sn: i64, sd: i64| qs(0, 1, sn, sd);
    let sixth = || r(-1, 6);
    vec![
        vec![r(1, 3), r(1, 3), r(1, 3), r(0, 1), r(0, 1), s(1, 3)],
        vec![sixth(), sixth(), sixth(), r(1, 2), r(-1, 2), s(-1, 6)],
        vec![sixth(), sixth(), sixth(), r(-1, 2), r(1, 2), s(-1, 6)],
        vec![sixth(), sixth(), sixth(), r(1, 2), r(1, 2), s(1, 6)],
        vec![sixth(), sixth(), sixth(), r(-1, 2), r(-1, 2), s(1, 6)],
        vec![r(1, 3), r(1, 3), r(1, 3), r(0, 1), r(0, 1), s(-1, 3)],
        vec![r(1, 3), r(1, 3), r(-2, 3), r(0, 1), r(0, 1), r(0, 1)],
        vec![r(1, 3), r(-2, 3), r(1, 3), r(0, 1), r(0, 1), r(0, 1)],
        vec![r(-2, 3), r(1, 3), r(1, 3), r(0, 1), r(0, 1), r(0, 1)],
    ]
}

fn dot(u: &[QSqrt3], v: &[QSqrt3]) -> QSqrt3 {
    u.iter().zip(v).fold(QSqrt3::zero(), |acc, (x, y)| &acc + &(x * y))
}

fn apply(m: &[Vec<QSqrt3>], v: &[QSqrt3]) -> Vec<QSqrt3> {
    m.iter().map(|row| dot(row, v)).collect()
}

/// Checks `⟨Pv, Pw⟩ = ⟨v, w⟩` for every pair of standard E6 simple roots,
/// and that the images are rational vectors (no `√3` part) of norm 2.
pub fn verify_embedding_isometry() -> bool {
    let p = change_of_basis();
    let simple = standard_simple_roots();
    let images: Vec<Vec<QSqrt3>> = simple.iter().map(|v| apply(&p, v)).collect();
    if images.iter().flatten().any(|x| !x.b.is_zero()) {
        return false;
    }
    for (v, pv) in simple.iter().zip(&images) {
        for (w, pw) in simple.iter().zip(&images) {
            if dot(v, w) != dot(pv, pw) {
                return false;
            }
        }
    }
    true
}

/// The standard six-dimensional E6 Cartan matrix, computed from the
/// standard basis.
pub fn standard_cartan() -> Vec<Vec<QSqrt3Display>> {
    let simple = standard_simple_roots();
    simple
        .iter()
        .map(|v| simple.iter().map(|w| QSqrt3Display(dot(v, w))).collect())
        .collect()
}

/// Opaque wrapper so tests can compare standard-basis inner products to
/// integers without exposing the field type.
#[derive(Clone, Debug)]
pub struct QSqrt3Display(QSqrt3);

impl QSqrt3Display {
    pub fn as_integer(&self) -> Option<i64> {
        use num_traits::ToPrimitive;
        if !self.0.b.is_zero() || !self.0.a.is_integer() {
            return None;
        }
        self.0.a.to_integer().to_i64()
    }
}
