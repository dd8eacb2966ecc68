use hecke_clifford::center::{apply_zeta, jucys_murphy_in, power_sum};
use hecke_clifford::{
    jucys_murphy, seg_even_center, verify_zeta_surjective, zeta_of_d, zeta_on_power_sums, Algebra,
    AlgebraParams, Error, Scalar, SignedPerm,
};
use proptest::prelude::*;

#[test]
fn jucys_murphy_examples() {
    assert!(jucys_murphy(4, 1, &Scalar::one()).unwrap().is_zero());
    let alg = Algebra::new(AlgebraParams::type_a(2, Scalar::one())).unwrap();
    let s = alg.w(&SignedPerm::transposition(2, 1, 2));
    let expected = alg.mul(&s, &(&alg.one() - &alg.mul(&alg.c(2), &alg.c(1))));
    assert_eq!(jucys_murphy(2, 2, &Scalar::one()).unwrap(), expected);
    for n in 1..=4 {
        assert!(zeta_of_d(n, &Scalar::one()).unwrap().is_zero());
    }
}

#[test]
fn power_sum_examples() {
    let k = Scalar::one();
    let jm = jucys_murphy(2, 2, &k).unwrap();
    let alg = Algebra::new(AlgebraParams::type_a(2, k.clone())).unwrap();
    assert_eq!(zeta_on_power_sums(2, 1, &k).unwrap(), alg.mul(&jm, &jm));
    assert_eq!(
        apply_zeta(&alg, &power_sum(&alg, 1)).unwrap(),
        alg.mul(&jm, &jm)
    );
    for r in 1..=3 {
        assert!(zeta_on_power_sums(1, r, &k).unwrap().is_zero());
        assert!(zeta_on_power_sums(3, r, &Scalar::zero()).unwrap().is_zero());
    }
}

#[test]
fn even_center_dimensions() {
    let dims: Vec<usize> = (2..=4).map(|n| seg_even_center(n).unwrap().dim()).collect();
    assert_eq!(dims, [1, 2, 2]);
    assert!(matches!(seg_even_center(9), Err(Error::SizeGuard(_))));
}

#[test]
fn surjectivity_examples() {
    let rep = verify_zeta_surjective(2, &Scalar::one(), 2).unwrap();
    assert!(rep.all_pass());
    let last = rep.checks.last().unwrap();
    assert_eq!(
        (
            last.details["rank"].as_u64(),
            last.details["center_dim"].as_u64()
        ),
        (Some(1), Some(1))
    );
    let rep = verify_zeta_surjective(3, &Scalar::one(), 4).unwrap();
    assert!(rep.all_pass());
    assert_eq!(rep.checks.last().unwrap().details["rank"], 2);
    let rep = verify_zeta_surjective(3, &Scalar::zero(), 3).unwrap();
    assert!(!rep.all_pass());
    assert_eq!(rep.checks.last().unwrap().details["rank"], 0);
}

#[test]
fn images_are_even() {
    let alg = Algebra::new(AlgebraParams::type_a(3, Scalar::frac(1, 2))).unwrap();
    for i in 1..=3 {
        assert!(jucys_murphy_in(&alg, i).unwrap().in_sergeev());
    }
    let z = zeta_on_power_sums(3, 2, &Scalar::frac(1, 2)).unwrap();
    assert_eq!(z.parity(), hecke_clifford::Parity::Even);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]
    #[test]
    fn power_sum_images_are_central(r in 1u32..3, num in 1i64..4) {
        let k = Scalar::frac(num, 2);
        let alg = Algebra::new(AlgebraParams::type_a(3, k.clone())).unwrap();
        let z = zeta_on_power_sums(3, r, &k).unwrap();
        for g in (1..=3).map(|i| alg.c(i)).chain(alg.simple_reflections()) {
            prop_assert_eq!(alg.mul(&g, &z), alg.mul(&z, &g));
        }
    }
}
