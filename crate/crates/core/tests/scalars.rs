use hecke_clifford::Scalar;
use proptest::prelude::*;

fn s(text: &str) -> Scalar {
    text.parse().unwrap()
}

#[test]
fn defining_relations() {
    assert_eq!(&Scalar::sqrt2() * &Scalar::sqrt2(), Scalar::from_int(2));
    assert_eq!(&Scalar::i() * &Scalar::i(), Scalar::from_int(-1));
    let a = &Scalar::one() + &Scalar::sqrt2();
    let b = &Scalar::one() - &Scalar::sqrt2();
    assert_eq!(&a * &b, Scalar::from_int(-1));
}

#[test]
fn rational_embedding() {
    assert!(Scalar::frac(0, 5).is_zero());
    assert!(Scalar::frac(3, 3).is_one());
    let half = Scalar::frac(1, 2);
    assert_eq!(&half + &half, Scalar::one());
    assert_eq!(half.to_string(), "1/2");
}

#[test]
fn division_by_zero_is_an_error() {
    assert!(Scalar::zero().inv().is_err());
    assert!(Scalar::one().checked_div(&Scalar::zero()).is_err());
}

#[test]
fn text_form() {
    let x = s("1/2 + 3*r2 - 2*i + i*r2");
    assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x);
    let json = serde_json::to_string(&x).unwrap();
    assert_eq!(serde_json::from_str::<Scalar>(&json).unwrap(), x);
}

fn scalar() -> impl Strategy<Value = Scalar> {
    proptest::collection::vec((-6i64..7, 1i64..5), 4).prop_map(|v| {
        let parts: Vec<Scalar> = v.iter().map(|(a, b)| Scalar::frac(*a, *b)).collect();
        &(&(&parts[0] + &(&parts[1] * &Scalar::sqrt2())) + &(&parts[2] * &Scalar::i()))
            + &(&parts[3] * &Scalar::i_sqrt2())
    })
}

proptest! {
    #[test]
    fn field_laws(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), Scalar::one());
        }
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }
}
