use hecke_clifford::cohomology::{omega_seg_spectrum, CentralCharacter};
use hecke_clifford::{
    central_character, dirac_cohomology, distinct_partitions, induced_module, phi_maps,
    steinberg_module, verify_vogan, AlgebraParams, Partition, Scalar, Subspace,
};
use proptest::prelude::*;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn ints(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|x| Scalar::from_int(*x)).collect()
}

#[test]
fn cohomology_examples() {
    for n in 1..=4 {
        let m = steinberg_module(&AlgebraParams::type_a(n, Scalar::one())).unwrap();
        assert_eq!(dirac_cohomology(&m).unwrap().dim_hd, m.dim());
    }
    let c = dirac_cohomology(&induced_module(&p("2,1"), Scalar::one()).unwrap()).unwrap();
    assert!(c.dim_hd > 0);
    assert_eq!(c.dim_hd, c.dim_ker - c.dim_im_cap_ker);
    let c = dirac_cohomology(&induced_module(&p("1"), Scalar::one()).unwrap()).unwrap();
    assert_eq!(c.dim_hd, 2);
}

#[test]
fn central_character_examples() {
    let chi = central_character(&induced_module(&p("2,1"), Scalar::one()).unwrap()).unwrap();
    assert!(chi.same_as(&CentralCharacter {
        values: ints(&[0, 2, 0]),
        power_sums: vec![]
    }));
    let chi = central_character(&induced_module(&p("3"), Scalar::one()).unwrap()).unwrap();
    assert!(chi.same_as(&CentralCharacter {
        values: ints(&[0, 2, 6]),
        power_sums: vec![]
    }));
    let chi = central_character(&induced_module(&p("3"), Scalar::zero()).unwrap()).unwrap();
    assert_eq!(chi.values, ints(&[0, 0, 0]));
}

#[test]
fn phi_examples() {
    let d = phi_maps(&p("3"));
    assert_eq!((d.phi1, d.norm1_sq, d.norm2_sq), (vec![-2, 0, 2], 8, 8));
    let d = phi_maps(&p("2,1"));
    assert_eq!((d.phi1, d.norm1_sq, d.norm2_sq), (vec![-1, 1, 0], 2, 2));
    let d = phi_maps(&p("1,1,1"));
    assert_eq!((d.phi1, d.norm1_sq, d.norm2_sq), (vec![0, 0, 0], 0, 0));
}

#[test]
fn spectrum_examples() {
    let c = dirac_cohomology(&induced_module(&p("2,1"), Scalar::one()).unwrap()).unwrap();
    assert_eq!(
        c.omega_seg_spectrum.single_value(),
        Some(&Scalar::from_int(2))
    );
    let c = dirac_cohomology(&induced_module(&p("3"), Scalar::one()).unwrap()).unwrap();
    assert_eq!(
        c.omega_seg_spectrum.single_value(),
        Some(&Scalar::from_int(8))
    );
    let m = induced_module(&p("3"), Scalar::zero()).unwrap();
    let s = omega_seg_spectrum(&m, &Subspace::full(m.dim())).unwrap();
    assert_eq!(s.values(), ints(&[0]));
}

#[test]
fn vogan_examples() {
    for (lam, value) in [("2,1", 2), ("3,1", 8), ("4", 20)] {
        let (rep, coh) = verify_vogan(&p(lam), &Scalar::one()).unwrap();
        assert!(rep.all_pass(), "{lam}");
        assert_eq!(
            coh.omega_seg_spectrum.single_value(),
            Some(&Scalar::from_int(value))
        );
        assert_eq!(coh.matched_partition, [p(lam)]);
    }
}

#[test]
fn vogan_at_half() {
    for lam in ["2", "2,1", "3", "3,1", "4"] {
        let (rep, _) = verify_vogan(&p(lam), &Scalar::frac(1, 2)).unwrap();
        assert!(rep.all_pass(), "{lam}");
    }
}

#[test]
fn cohomology_dimension_stable_in_k() {
    for lam in ["2,1", "3", "1,1", "2,1,1"] {
        let d1 = dirac_cohomology(&induced_module(&p(lam), Scalar::one()).unwrap())
            .unwrap()
            .dim_hd;
        let d2 = dirac_cohomology(&induced_module(&p(lam), Scalar::frac(1, 2)).unwrap())
            .unwrap()
            .dim_hd;
        assert_eq!(d1, d2, "{lam}");
    }
}

#[test]
fn distinct_partition_examples() {
    let names = |n| -> Vec<String> {
        distinct_partitions(n)
            .iter()
            .map(ToString::to_string)
            .collect()
    };
    assert_eq!(names(3), ["(3)", "(2,1)"]);
    assert_eq!(names(4), ["(4)", "(3,1)"]);
    assert_eq!(names(5), ["(5)", "(4,1)", "(3,2)"]);
}

#[test]
fn report_json_fields() {
    let c = dirac_cohomology(&induced_module(&p("2,1"), Scalar::one()).unwrap()).unwrap();
    let v = c.to_json();
    for key in [
        "lambda",
        "k",
        "dim_ker",
        "dim_im_cap_ker",
        "dim_HD",
        "omega_seg_spectrum",
        "matched_partition",
        "status",
    ] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["lambda"], serde_json::json!([2, 1]));
}

proptest! {
    #[test]
    fn norm_identity(parts in proptest::collection::vec(1usize..7, 1..4)) {
        let lam = Partition::new(parts).unwrap();
        prop_assert!(phi_maps(&lam).consistent());
    }
}
