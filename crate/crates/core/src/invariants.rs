//! Cross-module invariants as property tests.

use std::collections::HashSet;
use std::sync::OnceLock;

use proptest::prelude::*;

use crate::concrete::{
    apply_statomorphism, check_pairing_invariance, compose_g3, dualize_symbolic,
    flip_correspondence, identify_dvb, invert_g3, random_dvb, random_g3, seeded_rng,
    solve_dual_oracle, theta_dvb, BuildingDims, IndexFrame, TvbPoint,
};
use crate::group::{
    conjugacy_classes, enumerate_dg3, generate_subgroup, normal_subgroups, GroupTable,
};
use crate::perm::Perm4;
use crate::symbolic::{eval_word, DualityElement};
use crate::word::{parse_word, Generator};

fn dg3() -> &'static GroupTable<DualityElement> {
    static T: OnceLock<GroupTable<DualityElement>> = OnceLock::new();
    T.get_or_init(|| enumerate_dg3().unwrap())
}

fn dims_strategy(max: usize) -> impl Strategy<Value = BuildingDims> {
    proptest::array::uniform7(1..=max).prop_map(BuildingDims::from_array)
}

fn axis_strategy() -> impl Strategy<Value = Generator> {
    prop_oneof![Just(Generator::X), Just(Generator::Y), Just(Generator::Z)]
}

#[test]
fn class_equation() {
    let t = dg3();
    let classes = conjugacy_classes(t);
    assert_eq!(classes.iter().map(|c| c.size()).sum::<usize>(), 96);
    assert!(classes.iter().all(|c| 96 % c.size() == 0));
}

#[test]
fn normal_subgroup_sizes_divide_the_order() {
    assert!(normal_subgroups(dg3()).iter().all(|n| 96 % n.size() == 0));
}

#[test]
fn pi_is_onto_s4() {
    let image: HashSet<Perm4> = dg3().elements.iter().map(|e| e.perm).collect();
    assert_eq!(image.len(), 24);
    assert_eq!(image, Perm4::all().into_iter().collect());
}

#[test]
fn dg2_sits_inside_as_x_y() {
    let t = dg3();
    let xy = generate_subgroup(
        t,
        &[
            t.index_of_word(&parse_word("X").unwrap()).unwrap(),
            t.index_of_word(&parse_word("Y").unwrap()).unwrap(),
        ],
    );
    assert_eq!(xy.len(), 6);
}

#[test]
fn oracle_matches_at_dims_two() {
    let d = BuildingDims::uniform(2);
    for seed in 100..120 {
        let g = random_g3(d, seed);
        let axis = Generator::ALL[seed as usize % 3];
        let (expected, _) = dualize_symbolic(&g, IndexFrame::identity(), axis).unwrap();
        assert_eq!(
            solve_dual_oracle(&g, axis).unwrap(),
            expected,
            "seed {seed}"
        );
    }
}

proptest! {
    #[test]
    fn lagrange(picks in proptest::collection::vec(0usize..96, 0..4)) {
        let t = dg3();
        let h = generate_subgroup(t, &picks);
        prop_assert_eq!(96 % h.len(), 0);
    }

    #[test]
    fn pi_is_a_homomorphism(i in 0usize..96, j in 0usize..96) {
        let t = dg3();
        let p = t.elements[t.mult[i][j]].perm;
        prop_assert_eq!(p, t.elements[i].perm.compose(&t.elements[j].perm));
    }

    #[test]
    fn words_land_in_the_table(letters in proptest::collection::vec(0usize..3, 0..30)) {
        let w = crate::word::Word::new(letters.into_iter().map(|k| Generator::ALL[k]).collect());
        prop_assert!(dg3().index_of(&eval_word(&w)).is_some());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn action_respects_group_law(dims in dims_strategy(2), s1 in any::<u64>(), s2 in any::<u64>(), s3 in any::<u64>()) {
        let (g, h) = (random_g3(dims, s1), random_g3(dims, s2));
        let p = TvbPoint::random(&dims, &mut seeded_rng(s3), 6);
        let stepwise = apply_statomorphism(&h, &apply_statomorphism(&g, &p).unwrap()).unwrap();
        prop_assert_eq!(apply_statomorphism(&compose_g3(&h, &g).unwrap(), &p).unwrap(), stepwise);
        let gp = apply_statomorphism(&g, &p).unwrap();
        prop_assert_eq!(apply_statomorphism(&invert_g3(&g).unwrap(), &gp).unwrap(), p);
    }

    #[test]
    fn symbolic_dual_preserves_pairing(dims in dims_strategy(2), axis in axis_strategy(), seed in any::<u64>()) {
        let g = random_g3(dims, seed);
        let (h, _) = dualize_symbolic(&g, IndexFrame::identity(), axis).unwrap();
        let r = check_pairing_invariance(&g, &h, axis, 20, &mut seeded_rng(seed ^ 1)).unwrap();
        prop_assert_eq!(r.violations, 0);
    }

    #[test]
    fn oracle_matches_at_dims_one(axis in axis_strategy(), seed in any::<u64>()) {
        let g = random_g3(BuildingDims::uniform(1), seed);
        let (expected, _) = dualize_symbolic(&g, IndexFrame::identity(), axis).unwrap();
        prop_assert_eq!(solve_dual_oracle(&g, axis).unwrap(), expected);
    }

    #[test]
    fn dvb_theta_is_negation_and_involution(dims in proptest::array::uniform3(1usize..=3), seed in any::<u64>(), y in any::<bool>()) {
        let axis = if y { Generator::Y } else { Generator::X };
        let lam = random_dvb(dims, seed);
        let t = theta_dvb(axis, &lam).unwrap();
        prop_assert_eq!(identify_dvb(axis, &t).unwrap(), lam.neg());
        prop_assert_eq!(theta_dvb(axis, &t).unwrap(), lam);
    }

    #[test]
    fn flip_inverts_doubling(dims in proptest::array::uniform3(1usize..=3), seed in any::<u64>()) {
        let mu = random_dvb(dims, seed);
        prop_assert_eq!(flip_correspondence(&mu).lambda.scale_int(2), mu.lambda.clone());
        let mut doubled = mu.clone();
        doubled.lambda = mu.lambda.scale_int(2);
        prop_assert_eq!(flip_correspondence(&doubled), mu);
    }
}
