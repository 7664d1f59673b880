mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twisted_principal::characters::{
    inverse_pochhammer, nahm_character, recursion_residual, recursion_solve_with, CharacterJson, Pivot,
};
use twisted_principal::cocycle::{commutator_c, epsilon, psi, LatticeElement, Sign};
use twisted_principal::lattice::{RootSystem, RootSystemKind};
use twisted_principal::modes::{
    commutator_case, delta_shift, psi_map, tau_inverse, tau_shift, CommTag, HalfInt, Monomial,
};

use common::{all_kinds, character_kinds, partitions_brute_force, random_monomial};

fn kind() -> impl Strategy<Value = RootSystemKind> {
    prop::sample::select(all_kinds())
}

fn element(rank: usize, bound: i64) -> impl Strategy<Value = LatticeElement> {
    prop::collection::vec(-bound..=bound, rank).prop_map(LatticeElement)
}

fn system_and_elements(count: usize) -> impl Strategy<Value = (RootSystem, Vec<LatticeElement>)> {
    kind().prop_flat_map(move |k| {
        let rs = RootSystem::new(k);
        let rank = rs.rank();
        (Just(rs), prop::collection::vec(element(rank, 7), count))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn epsilon_is_a_bimultiplicative_cocycle((rs, v) in system_and_elements(3)) {
        let (a, b, g) = (&v[0], &v[1], &v[2]);
        let ab = a + b;
        let bg = b + g;
        prop_assert_eq!(
            epsilon(&rs, a, b) * epsilon(&rs, &ab, g),
            epsilon(&rs, b, g) * epsilon(&rs, a, &bg)
        );
        prop_assert_eq!(epsilon(&rs, &ab, g), epsilon(&rs, a, g) * epsilon(&rs, b, g));
        prop_assert_eq!(epsilon(&rs, a, b) * epsilon(&rs, b, a), commutator_c(&rs, a, b));
    }

    #[test]
    fn nu_lift_is_multiplicative_and_involutive((rs, v) in system_and_elements(2)) {
        let (a, b) = (&v[0], &v[1]);
        let (na, nb) = (a.nu(&rs), b.nu(&rs));
        prop_assert_eq!(&na.nu(&rs), a);
        prop_assert_eq!(
            psi(&rs, a) * psi(&rs, b) * epsilon(&rs, &na, &nb),
            psi(&rs, &(a + b)) * epsilon(&rs, a, b)
        );
        prop_assert_eq!(psi(&rs, a) * psi(&rs, &na), Sign::Plus);
        prop_assert_eq!(rs.pair_coords(&na.0, &nb.0), rs.pair_coords(&a.0, &b.0));
    }

    #[test]
    fn exactly_one_commutator_case(k in kind(), seed in any::<u64>()) {
        let rs = RootSystem::new(k);
        let n = rs.num_positive();
        let (a, b) = ((seed % n as u64) as usize, ((seed / n as u64) % n as u64) as usize);
        let p0 = rs.root_pair(a, b);
        let p1 = rs.root_pair(rs.nu_root(a), b);
        let expected = match (p0, p1) {
            (-1, -1) => CommTag::Double,
            (x, y) if x >= 0 && y >= 0 => CommTag::Commute,
            _ => CommTag::Single,
        };
        let case = commutator_case(&rs, a, b);
        prop_assert_eq!(case.tag(), expected);
        if let Some(t) = case.term() {
            let abs = t.coefficient.abs();
            let want = if expected == CommTag::Double {
                BigRational::from_integer(1.into())
            } else {
                BigRational::new(1.into(), 2.into())
            };
            prop_assert_eq!(abs, want);
        }
    }

    #[test]
    fn shifts_are_invertible_and_multiplicative(idx in 0usize..7, seed in any::<u64>()) {
        let rs = RootSystem::new(character_kinds()[idx]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m1 = random_monomial(&rs, &mut rng);
        let m2 = random_monomial(&rs, &mut rng);
        for &i in rs.orbit_representatives() {
            let t1 = tau_shift(&rs, i, &m1).unwrap();
            prop_assert_eq!(&tau_inverse(&rs, i, &t1).unwrap(), &m1);
            prop_assert_eq!(&delta_shift(&rs, i, &m1).unwrap(), &t1);
            let t2 = tau_shift(&rs, i, &m2).unwrap();
            prop_assert_eq!(tau_shift(&rs, i, &m1.mul(&m2)).unwrap(), t1.mul(&t2));
            prop_assert_eq!(t1.charge(&rs), m1.charge(&rs));
            // weight drops by the total shift: wt τ(x_β(m)) = -(m + k)
            let total: i64 = m1.factors().iter().zip(t1.factors())
                .map(|(a, b)| b.m().twice() - a.m().twice())
                .sum();
            prop_assert_eq!(t1.weight().twice(), m1.weight().twice() - total);
            let p = psi_map(&rs, i, &m1).unwrap();
            prop_assert_eq!(p.degree(), m1.degree() + 1);
        }
    }

    #[test]
    fn canonical_form_is_stable(idx in 0usize..7, root in 0usize..1000, twice in -12i64..=12) {
        let rs = RootSystem::new(character_kinds()[idx]);
        let root = root % rs.num_positive();
        let m = HalfInt::from_twice(twice);
        let x = Monomial::x(&rs, root, m);
        let y = Monomial::x(&rs, rs.nu_root(root), m);
        if x.is_zero() {
            prop_assert!(rs.is_fixed_root(root) && !m.is_integer());
            prop_assert!(y.is_zero());
        } else {
            let f = x.factors()[0];
            prop_assert!(f.root() <= rs.nu_root(f.root()));
            // x_{να}(m) = ±x_α(m)
            prop_assert!(y == x || y == x.signed(Sign::Minus));
            prop_assert_eq!(Monomial::x(&rs, f.root(), f.m()).scalar().abs(), x.scalar().abs());
        }
    }

    #[test]
    fn half_int_text_round_trip(twice in -1000i64..1000) {
        let h = HalfInt::from_twice(twice);
        prop_assert_eq!(h.to_string().parse::<HalfInt>().unwrap(), h);
    }

    #[test]
    fn pochhammer_counts_partitions(a in 1usize..=3, m in 0usize..=8) {
        let s = inverse_pochhammer(a, m, 30);
        for (n, c) in s.iter().enumerate() {
            prop_assert_eq!(c, &BigInt::from(partitions_brute_force(n, m, a)));
        }
    }
}

#[test]
fn characters_are_consistent_across_caps_and_pivots() {
    for kind in character_kinds() {
        let rs = RootSystem::new(kind);
        let a = rs.charge_matrix();
        let big = nahm_character(&rs, 16, None).unwrap();
        let small = nahm_character(&rs, 8, None).unwrap();
        assert_eq!(big.truncate(8), small, "{kind}");
        assert_eq!(recursion_solve_with(&rs, 16, Pivot::Largest), big, "{kind}");
        for (m, p) in big.sectors() {
            assert!(p.iter().all(|c| !c.is_negative()));
            let q = a.half_norm(m) as usize;
            assert!(p[..q].iter().all(Zero::is_zero));
            assert_eq!(p[q], BigInt::from(1), "{kind} {m:?}");
        }
        let zero = vec![0; a.k()];
        assert_eq!(big.sector(&zero).unwrap()[0], BigInt::from(1));
        assert!(big.sector(&zero).unwrap()[1..].iter().all(Zero::is_zero));
        for &i in rs.orbit_representatives() {
            let shifted = nahm_character(&rs, 16, Some(i)).unwrap();
            let j = rs.orbit_position(i).unwrap();
            for (m, p) in shifted.sectors() {
                let q = (a.half_norm(m) + a.a[j] * m[j] as i64) as usize;
                assert_eq!(p[q], BigInt::from(1));
            }
            let solved = recursion_solve_with(&rs, 16, Pivot::Smallest);
            assert!(recursion_residual(&rs, i, &solved).unwrap().is_zero());
        }
        let json = serde_json::to_string(&CharacterJson::new(kind, None, &big)).unwrap();
        let back: CharacterJson = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_series().unwrap(), big);
    }
}

#[test]
fn x1_specialization_of_a3() {
    // total graded dimensions of the A3 principal subspace, pinned from the
    // recursion solution
    let rs = RootSystem::new(RootSystemKind::a_odd(2).unwrap());
    let solved = recursion_solve_with(&rs, 10, Pivot::Smallest);
    let closed = nahm_character(&rs, 10, None).unwrap();
    assert_eq!(solved.specialize_x1(), closed.specialize_x1());
    let got: Vec<i64> = closed.specialize_x1().iter().map(|c| c.try_into().unwrap()).collect();
    assert_eq!(got, PINNED_A3_X1);
}

const PINNED_A3_X1: [i64; 11] = [1, 2, 4, 4, 9, 12, 19, 24, 38, 48, 71];
