use hecke_clifford::{
    linear_combine, AlgElem, Algebra, AlgebraParams, Generator, Parity, Scalar, SignedPerm,
};
use proptest::prelude::*;

fn a2() -> Algebra {
    Algebra::new(AlgebraParams::type_a(2, Scalar::one())).unwrap()
}

fn b2(n: Scalar) -> Algebra {
    Algebra::new(AlgebraParams::type_b(
        2,
        Scalar::one(),
        Scalar::from_int(3),
        n,
    ))
    .unwrap()
}

#[test]
fn generators_are_monomials() {
    let alg = a2();
    let x1 = alg.generator(Generator::X(1)).unwrap();
    let (m, _) = x1.iter().next().unwrap();
    assert_eq!(m.exps(), [1, 0]);
    assert_eq!(m.cliff(), 0);
    assert!(m.group_element().is_identity());
    let c2 = alg.generator(Generator::C(2)).unwrap();
    assert_eq!(c2.iter().next().unwrap().0.cliff(), 0b10);
    let s = SignedPerm::transposition(2, 1, 2);
    let w = alg.generator(Generator::W(s.clone())).unwrap();
    assert_eq!(w.iter().next().unwrap().0.group_element(), &s);
    assert!(alg.generator(Generator::X(3)).is_err());
}

#[test]
fn straightening_rules() {
    let alg = a2();
    assert_eq!(
        alg.mul(&alg.c(1), &alg.c(1)),
        alg.scalar(Scalar::from_int(-1))
    );
    let s = alg.w(&SignedPerm::transposition(2, 1, 2));
    let expected = &(&alg.mul(&alg.x(2), &s) - &alg.one()) + &alg.mul(&alg.c(1), &alg.c(2));
    assert_eq!(alg.mul(&s, &alg.x(1)), expected);

    let big_n = Scalar::frac(5, 2);
    let b = b2(big_n.clone());
    let expected = &alg_x1x2(&b) + &b.mul(&b.c(1), &b.c(2)).scale(&big_n);
    assert_eq!(b.mul(&b.x(2), &b.x(1)), expected);
    let sn = b.w(&"[1,-2]".parse().unwrap());
    let expected = &(-&b.mul(&b.x(2), &sn)) - &b.scalar(&Scalar::sqrt2() * &Scalar::from_int(3));
    assert_eq!(b.mul(&sn, &b.x(2)), expected);
}

fn alg_x1x2(alg: &Algebra) -> AlgElem {
    alg.mul(&alg.x(1), &alg.x(2))
}

#[test]
fn linear_combinations() {
    let alg = a2();
    let a = &alg.x(1) + &alg.c(2);
    assert!(linear_combine(
        2,
        &[
            (Scalar::one(), a.clone()),
            (Scalar::from_int(-1), a.clone())
        ]
    )
    .is_zero());
    assert!(linear_combine(2, &[(Scalar::zero(), a)]).is_zero());
    let r2 = Scalar::sqrt2();
    let e = linear_combine(2, &[(r2.clone(), alg.c(1)), (r2.clone(), alg.c(2))]);
    assert_eq!(e, &alg.c(1).scale(&r2) + &alg.c(2).scale(&r2));
}

#[test]
fn parities() {
    let alg = a2();
    let b = hecke_clifford::DiracBundle::new(&alg).unwrap();
    assert_eq!(b.d.parity(), Parity::Odd);
    assert_eq!(b.omega_h.parity(), Parity::Even);
    assert_eq!((&alg.c(1) + &alg.one()).parity(), Parity::Mixed);
}

#[test]
fn supercommutators() {
    let alg = a2();
    assert!(alg.supercommutator(&alg.c(1), &alg.c(2)).unwrap().is_zero());
    assert!(alg.supercommutator(&alg.x(1), &alg.x(2)).unwrap().is_zero());
    let big_n = Scalar::from_int(4);
    let b = b2(big_n.clone());
    let expected = b.mul(&b.c(2), &b.c(1)).scale(&big_n);
    assert_eq!(b.supercommutator(&b.x(1), &b.x(2)).unwrap(), expected);
}

#[test]
fn pbw_consistency_examples() {
    assert!(a2().check_pbw_consistency(200, 2, 1).ok());
    let k = Scalar::one();
    let nb = AlgebraParams::steinberg_n_b(2, &k, &k);
    let b = Algebra::new(AlgebraParams::type_b(2, k.clone(), k, nb)).unwrap();
    assert!(b.check_pbw_consistency(200, 2, 2).ok());
    let alg = a2();
    let z = alg.zero();
    let x = &alg.x(1) + &alg.c(2);
    assert!(alg.mul(&alg.mul(&z, &x), &x).is_zero());
}

#[test]
fn text_round_trip() {
    let alg = b2(Scalar::from_int(2));
    let e = &alg.mul(&alg.x(2), &alg.x(1)) + &alg.w(&"[-2,1]".parse().unwrap());
    assert_eq!(AlgElem::parse(&e.to_string(), 2).unwrap(), e);
}

#[test]
fn type_d_rejects_short_parameter() {
    let mut p = AlgebraParams::type_d(3, Scalar::one(), Scalar::zero());
    p.k_short = Scalar::one();
    assert!(Algebra::new(p).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn associativity_type_d(seed in any::<u64>()) {
        let alg = Algebra::new(AlgebraParams::type_d(3, Scalar::frac(1, 2), Scalar::from_int(-1))).unwrap();
        prop_assert!(alg.check_pbw_consistency(3, 2, seed).ok());
    }
}
