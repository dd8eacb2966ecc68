use hecke_clifford::linalg::{image, kernel};
use hecke_clifford::modules::{check_module_relations, hermitian_form, steinberg_generators};
use hecke_clifford::{
    clifford_supermodule, induced_module, steinberg_module, Algebra, AlgebraParams, DiracBundle,
    Error, Matrix, Partition, Scalar, SignedPerm,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn clifford_supermodules() {
    assert_eq!(clifford_supermodule(2).dim(), 2);
    let u = clifford_supermodule(3);
    assert_eq!(u.dim(), 4);
    assert!((&(&u.c[0] * &u.c[1]) + &(&u.c[1] * &u.c[0])).is_zero());
}

#[test]
fn steinberg_examples() {
    let m = steinberg_module(&AlgebraParams::type_a(2, Scalar::one())).unwrap();
    assert!(m.x(1).is_zero());
    let alg = m.algebra();
    let s = alg.w(&SignedPerm::transposition(2, 1, 2));
    let jm = alg.mul(&s, &(&alg.one() - &alg.mul(&alg.c(2), &alg.c(1))));
    assert_eq!(m.x(2), &m.act_matrix(&jm).unwrap());

    let k = Scalar::one();
    let nb = AlgebraParams::steinberg_n_b(2, &k, &k);
    assert_eq!(
        steinberg_module(&AlgebraParams::type_b(2, k.clone(), k.clone(), nb))
            .unwrap()
            .dim(),
        4
    );

    let m1 = steinberg_module(&AlgebraParams::type_a(1, Scalar::from_int(3))).unwrap();
    assert!(m1.x(1).is_zero());
    let d = DiracBundle::new(m1.algebra()).unwrap().d;
    assert!(m1.act_matrix(&d).unwrap().is_zero());
}

#[test]
fn induced_examples() {
    let top = induced_module(&p("3"), Scalar::one()).unwrap();
    assert_eq!(top.dim(), 8);
    assert_eq!(induced_module(&p("2,1"), Scalar::one()).unwrap().dim(), 24);
    assert_eq!(induced_module(&p("1,1"), Scalar::one()).unwrap().dim(), 8);
}

#[test]
fn act_matrix_examples() {
    for n in 1..=4 {
        let m = steinberg_module(&AlgebraParams::type_a(n, Scalar::one())).unwrap();
        assert_eq!(
            m.act_matrix(&m.algebra().one()).unwrap(),
            Matrix::identity(m.dim())
        );
        let d = DiracBundle::new(m.algebra()).unwrap().d;
        assert!(m.act_matrix(&d).unwrap().is_zero(), "n = {n}");
    }
    let m = steinberg_module(&AlgebraParams::type_a(2, Scalar::one())).unwrap();
    let alg = m.algebra();
    let sq = m.act_matrix(&alg.mul(&alg.x(2), &alg.x(2))).unwrap();
    assert_eq!(sq, Matrix::scalar(4, Scalar::from_int(2)));
}

#[test]
fn relation_reports() {
    let a3 = steinberg_module(&AlgebraParams::type_a(3, Scalar::one())).unwrap();
    assert!(check_module_relations(&a3).all_pass());
    let k = Scalar::one();
    let nb = AlgebraParams::steinberg_n_b(2, &k, &k);
    let b2 = steinberg_module(&AlgebraParams::type_b(2, k.clone(), k.clone(), nb)).unwrap();
    assert!(check_module_relations(&b2).all_pass());

    let wrong = AlgebraParams::type_b(2, k.clone(), k.clone(), Scalar::zero());
    assert!(matches!(
        steinberg_module(&wrong),
        Err(Error::WrongSteinbergParameter { .. })
    ));
    let (alg, gens) = steinberg_generators(&wrong).unwrap();
    let rep = hecke_clifford::modules::check_relations(&alg, &gens);
    let failed: Vec<&str> = rep.failures().map(|c| c.name.as_str()).collect();
    assert_eq!(failed, ["relations[x_x]"]);
}

#[test]
fn subspace_examples() {
    assert_eq!(kernel(&Matrix::zeros(5, 5)).dim(), 5);
    assert_eq!(kernel(&Matrix::identity(5)).dim(), 0);
    let m = induced_module(&p("2,1"), Scalar::one()).unwrap();
    let d = m
        .act_matrix(&DiracBundle::new(m.algebra()).unwrap().d)
        .unwrap();
    let cap = kernel(&d).intersect(&image(&d)).unwrap();
    assert!(cap.is_zero());
}

#[test]
fn hermitian_examples() {
    for (lam, k) in [
        ("2", Scalar::one()),
        ("2,1", Scalar::one()),
        ("1", Scalar::from_int(2)),
    ] {
        let m = induced_module(&p(lam), k).unwrap();
        let h = hermitian_form(&m).unwrap();
        assert!(h.report.all_pass(), "{lam}");
        assert_eq!(h.gram, Matrix::identity(m.dim()));
    }
}

#[test]
fn type_d_steinberg_uses_its_own_reflection() {
    let k = Scalar::frac(1, 2);
    let nd = AlgebraParams::steinberg_n_d(3, &k);
    let m = steinberg_module(&AlgebraParams::type_d(3, k, nd)).unwrap();
    assert_eq!(m.generators().s.len(), 3);
    let s_extra: SignedPerm = "[1,-3,-2]".parse().unwrap();
    let e = m.algebra().w(&s_extra);
    assert_eq!(&m.act_matrix(&e).unwrap(), m.s(2));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]
    #[test]
    fn representation_is_multiplicative(seed in any::<u64>()) {
        let k = Scalar::one();
        let nd = AlgebraParams::steinberg_n_d(2, &k);
        let m = steinberg_module(&AlgebraParams::type_d(2, k, nd)).unwrap();
        let alg: &Algebra = m.algebra();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = alg.random_element(&mut rng, 2, 3);
        let b = alg.random_element(&mut rng, 2, 3);
        let lhs = m.act_matrix(&alg.mul(&a, &b)).unwrap();
        let rhs = &m.act_matrix(&a).unwrap() * &m.act_matrix(&b).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
