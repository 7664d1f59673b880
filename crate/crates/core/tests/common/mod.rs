#![allow(dead_code)]

use num_rational::BigRational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use twisted_principal::lattice::{RootSystem, RootSystemKind};
use twisted_principal::modes::{HalfInt, Monomial};

/// Number of partitions of `n` into at most `max_parts` parts, each a
/// multiple of `a`, by listing them.
pub fn partitions_brute_force(n: usize, max_parts: usize, a: usize) -> u64 {
    fn go(rest: usize, largest: usize, parts_left: usize, a: usize) -> u64 {
        if rest == 0 {
            return 1;
        }
        if parts_left == 0 {
            return 0;
        }
        let mut count = 0;
        let mut p = a;
        while p <= largest.min(rest) {
            count += go(rest - p, p, parts_left - 1, a);
            p += a;
        }
        count
    }
    go(n, n, max_parts, a)
}

pub fn all_kinds() -> Vec<RootSystemKind> {
    let mut out: Vec<RootSystemKind> = (2..=8).map(|n| RootSystemKind::a_odd(n).unwrap()).collect();
    out.extend((4..=8).map(|n| RootSystemKind::d(n).unwrap()));
    out.push(RootSystemKind::e6());
    out
}

pub fn character_kinds() -> Vec<RootSystemKind> {
    vec![
        RootSystemKind::a_odd(2).unwrap(),
        RootSystemKind::a_odd(3).unwrap(),
        RootSystemKind::a_odd(4).unwrap(),
        RootSystemKind::d(4).unwrap(),
        RootSystemKind::d(5).unwrap(),
        RootSystemKind::d(6).unwrap(),
        RootSystemKind::e6(),
    ]
}

/// A nonzero monomial of 1 to 5 factors with modes in `[-6, 6]` and a small
/// rational scalar.
pub fn random_monomial(rs: &RootSystem, rng: &mut ChaCha8Rng) -> Monomial {
    loop {
        let len = rng.gen_range(1..=5);
        let factors: Vec<(usize, HalfInt)> = (0..len)
            .map(|_| (rng.gen_range(0..rs.num_positive()), HalfInt::from_twice(rng.gen_range(-12..=12))))
            .collect();
        let scalar = BigRational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=4).into());
        let m = Monomial::from_factors(rs, scalar, &factors);
        if !m.is_zero() {
            return m;
        }
    }
}
