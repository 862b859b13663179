//! Property tests for the algebraic invariants: ring axioms of Z[Z/n], the
//! involution, determinant multiplicativity, automorphism equivariance, the
//! abelian-group laws of Wh, and agreement of the two class-equality routes.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use proptest::prelude::*;

use wh_core::group_ring::{CyclicGroupSpec, GroupRingElement};
use wh_core::text::{format_element, parse_element};
use wh_core::whitehead::{bass_unit, generators, GeneratorRegistry, WhiteheadClass};

fn groups() -> impl Strategy<Value = CyclicGroupSpec> {
    prop_oneof![
        Just(CyclicGroupSpec::orientable(5).unwrap()),
        Just(CyclicGroupSpec::orientable(7).unwrap()),
        Just(CyclicGroupSpec::orientable(8).unwrap()),
        Just(CyclicGroupSpec::orientable(12).unwrap()),
        Just(CyclicGroupSpec::new(6, -1).unwrap()),
        Just(CyclicGroupSpec::new(8, -1).unwrap()),
        Just(CyclicGroupSpec::trivial()),
    ]
}

fn elements(group: CyclicGroupSpec) -> impl Strategy<Value = GroupRingElement> {
    proptest::collection::vec(-9i64..=9, group.order())
        .prop_map(move |v| GroupRingElement::from_i64_coeffs(group, &v).unwrap())
}

fn group_and_elements(
    count: usize,
) -> impl Strategy<Value = (CyclicGroupSpec, Vec<GroupRingElement>)> {
    groups().prop_flat_map(move |g| {
        proptest::collection::vec(elements(g), count).prop_map(move |v| (g, v))
    })
}

/// A unit of Z[Z/n]: a trivial unit times a small power of a Bass unit
/// (or of the n = 5 generator).
fn units(group: CyclicGroupSpec) -> impl Strategy<Value = GroupRingElement> {
    let n = group.order();
    let base: Vec<GroupRingElement> = match n {
        5 => vec![parse_element("1 - t - t^4", group).unwrap()],
        7 => vec![bass_unit(2, group).unwrap(), bass_unit(3, group).unwrap()],
        8 => vec![bass_unit(3, group).unwrap()],
        12 => vec![bass_unit(5, group).unwrap()],
        _ => vec![],
    };
    (0..n, any::<bool>(), proptest::collection::vec(-2i64..=2, base.len().max(1))).prop_map(
        move |(k, neg, exps)| {
            let mut u = GroupRingElement::generator_power(group, k);
            if neg {
                u = u.neg();
            }
            for (b, e) in base.iter().zip(&exps) {
                let w = WhiteheadClass::from_unit(b.clone()).unwrap().scale(*e);
                u = u.mul(w.rep()).unwrap();
            }
            u
        },
    )
}

fn group_and_units(count: usize) -> impl Strategy<Value = (CyclicGroupSpec, Vec<GroupRingElement>)> {
    groups().prop_flat_map(move |g| {
        proptest::collection::vec(units(g), count).prop_map(move |v| (g, v))
    })
}

proptest! {
    #[test]
    fn ring_axioms((_g, els) in group_and_elements(3)) {
        let (x, y, z) = (&els[0], &els[1], &els[2]);
        prop_assert_eq!(x.mul(y).unwrap(), y.mul(x).unwrap());
        prop_assert_eq!(
            x.mul(y).unwrap().mul(z).unwrap(),
            x.mul(&y.mul(z).unwrap()).unwrap()
        );
        prop_assert_eq!(
            x.mul(&y.add(z).unwrap()).unwrap(),
            x.mul(y).unwrap().add(&x.mul(z).unwrap()).unwrap()
        );
    }

    #[test]
    fn involution_laws((_g, els) in group_and_elements(2)) {
        let (x, y) = (&els[0], &els[1]);
        prop_assert_eq!(x.involution().involution(), x.clone());
        prop_assert_eq!(
            x.mul(y).unwrap().involution(),
            x.involution().mul(&y.involution()).unwrap()
        );
        prop_assert_eq!(
            x.add(y).unwrap().involution(),
            x.involution().add(&y.involution()).unwrap()
        );
    }

    #[test]
    fn determinant_is_multiplicative((_g, els) in group_and_elements(2)) {
        let (x, y) = (&els[0], &els[1]);
        prop_assert_eq!(
            x.mul(y).unwrap().circulant_determinant(),
            x.circulant_determinant() * y.circulant_determinant()
        );
    }

    #[test]
    fn automorphism_is_ring_map((g, els) in group_and_elements(2), a_raw in 1i64..100) {
        let n = g.order();
        let a = (1..=n as i64)
            .map(|k| a_raw + k)
            .find(|&a| num_integer::gcd(a.rem_euclid(n as i64) as usize, n) == 1)
            .unwrap();
        let (x, y) = (&els[0], &els[1]);
        prop_assert_eq!(
            x.mul(y).unwrap().apply_automorphism(a).unwrap(),
            x.apply_automorphism(a).unwrap().mul(&y.apply_automorphism(a).unwrap()).unwrap()
        );
        prop_assert_eq!(
            x.add(y).unwrap().apply_automorphism(a).unwrap(),
            x.apply_automorphism(a).unwrap().add(&y.apply_automorphism(a).unwrap()).unwrap()
        );
        prop_assert_eq!(
            x.apply_automorphism(a).unwrap().circulant_determinant(),
            x.circulant_determinant()
        );
    }

    #[test]
    fn parse_format_round_trip((_g, els) in group_and_elements(1)) {
        let x = &els[0];
        let s = format_element(x);
        prop_assert_eq!(&parse_element(&s, x.group()).unwrap(), x);
    }

    #[test]
    fn units_behave((g, us) in group_and_units(2)) {
        let (u, v) = (&us[0], &us[1]);
        prop_assert!(u.is_unit());
        // the augmentation maps units to units of Z
        prop_assert!(u.augmentation().abs().is_one());
        // exact inverses
        let ui = u.invert_unit().unwrap();
        prop_assert!(u.mul(&ui).unwrap().is_one());
        // units are closed under product
        prop_assert!(u.mul(v).unwrap().is_unit());
        let _ = g;
    }

    #[test]
    fn class_equality_routes_agree((g, us) in group_and_units(2)) {
        let (u, v) = (&us[0], &us[1]);
        let cu = WhiteheadClass::from_unit(u.clone()).unwrap();
        let cv = WhiteheadClass::from_unit(v.clone()).unwrap();
        // route 1: signed-rotation comparison (PartialEq)
        let fast = cu == cv;
        // route 2: the quotient u * v^{-1} is a trivial unit
        let slow = u.mul(&v.invert_unit().unwrap()).unwrap().is_trivial_unit();
        prop_assert_eq!(fast, slow);
        let _ = g;
    }

    #[test]
    fn wh_abelian_group_laws((g, us) in group_and_units(3)) {
        let a = WhiteheadClass::from_unit(us[0].clone()).unwrap();
        let b = WhiteheadClass::from_unit(us[1].clone()).unwrap();
        let c = WhiteheadClass::from_unit(us[2].clone()).unwrap();
        let zero = WhiteheadClass::zero(g);
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(
            a.add(&b).unwrap().add(&c).unwrap(),
            a.add(&b.add(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.add(&zero).unwrap(), a.clone());
        prop_assert!(a.add(&a.negate()).unwrap().is_zero());
        // bar is additive and involutive
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!(
            a.add(&b).unwrap().bar(),
            a.bar().add(&b.bar()).unwrap()
        );
        // push_forward is a homomorphism
        let n = g.order();
        let aut = (2..=n as i64 + 1)
            .find(|&x| num_integer::gcd(x.rem_euclid(n as i64) as usize, n) == 1)
            .unwrap();
        prop_assert_eq!(
            a.add(&b).unwrap().push_forward(aut).unwrap(),
            a.push_forward(aut).unwrap().add(&b.push_forward(aut).unwrap()).unwrap()
        );
    }
}

#[test]
fn express_recovers_random_combinations() {
    use rand::{Rng, SeedableRng};
    let reg = GeneratorRegistry::shipped();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
    for n in [5usize, 7, 9, 12] {
        let g = CyclicGroupSpec::orientable(n).unwrap();
        let set = generators(g, &reg, 50).unwrap();
        for _ in 0..10 {
            let exps: Vec<i64> = (0..set.classes.len())
                .map(|_| rng.gen_range(-3..=3))
                .collect();
            let mut acc = WhiteheadClass::zero(g);
            for (gc, e) in set.classes.iter().zip(&exps) {
                acc = acc.add(&gc.scale(*e)).unwrap();
            }
            match wh_core::whitehead::express_in_generators(&acc, &set.classes, 50).unwrap() {
                wh_core::whitehead::ExpressOutcome::InSpan(coords) => {
                    let expected: Vec<BigInt> = exps.iter().map(|&e| BigInt::from(e)).collect();
                    assert_eq!(coords, expected, "n = {n}");
                }
                other => panic!("expected InSpan for n = {n}, got {other:?}"),
            }
        }
    }
}
