//! Exact arithmetic in the number field `Q(i, sqrt 2)`.
//!
//! A [`Scalar`] is stored as four arbitrary-precision rationals `(a, b, c, d)`
//! standing for `a + b*sqrt2 + c*i + d*i*sqrt2`. The representation is
//! canonical, so structural equality is field equality.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    a: BigRational,
    b: BigRational,
    c: BigRational,
    d: BigRational,
}

fn q_sqrt2_mul(
    a: &BigRational,
    b: &BigRational,
    x: &BigRational,
    y: &BigRational,
) -> (BigRational, BigRational) {
    // (a + b r)(x + y r) = (ax + 2by) + (ay + bx) r
    let mut re = BigRational::zero();
    let mut ir = BigRational::zero();
    if !a.is_zero() {
        if !x.is_zero() {
            re += a * x;
        }
        if !y.is_zero() {
            ir += a * y;
        }
    }
    if !b.is_zero() {
        if !y.is_zero() {
            re += b * y * BigRational::from_integer(BigInt::from(2));
        }
        if !x.is_zero() {
            ir += b * x;
        }
    }
    (re, ir)
}

impl Scalar {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Self {
        Scalar { a, b, c, d }
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// The rational `num/den`. Panics if `den == 0`.
    pub fn frac(num: i64, den: i64) -> Self {
        Scalar::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Embeds a rational number.
    pub fn from_rational(q: BigRational) -> Self {
        Scalar {
            a: q,
            ..Scalar::default()
        }
    }

    pub fn sqrt2() -> Self {
        Scalar {
            b: BigRational::one(),
            ..Scalar::default()
        }
    }

    pub fn i() -> Self {
        Scalar {
            c: BigRational::one(),
            ..Scalar::default()
        }
    }

    pub fn i_sqrt2() -> Self {
        Scalar {
            d: BigRational::one(),
            ..Scalar::default()
        }
    }

    pub fn components(&self) -> [&BigRational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// Returns the rational value if the scalar lies in `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.b.is_zero() && self.c.is_zero() && self.d.is_zero() {
            Some(&self.a)
        } else {
            None
        }
    }

    /// Complex conjugation `i -> -i`; fixes `sqrt 2`.
    pub fn conj(&self) -> Self {
        Scalar {
            a: self.a.clone(),
            b: self.b.clone(),
            c: -self.c.clone(),
            d: -self.d.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // 1/(p + q i) = (p - q i) / (p^2 + q^2), with p, q in Q(sqrt 2).
        let (pp_a, pp_b) = q_sqrt2_mul(&self.a, &self.b, &self.a, &self.b);
        let (qq_a, qq_b) = q_sqrt2_mul(&self.c, &self.d, &self.c, &self.d);
        let u = pp_a + qq_a;
        let v = pp_b + qq_b;
        // 1/(u + v r) = (u - v r)/(u^2 - 2 v^2)
        let two = BigRational::from_integer(BigInt::from(2));
        let norm = &u * &u - &two * &v * &v;
        let (inv_a, inv_b) = (&u / &norm, -(&v / &norm));
        let (ra, rb) = q_sqrt2_mul(&self.a, &self.b, &inv_a, &inv_b);
        let (rc, rd) = q_sqrt2_mul(&self.c, &self.d, &inv_a, &inv_b);
        Ok(Scalar {
            a: ra,
            b: rb,
            c: -rc,
            d: -rd,
        })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::from_rational(q)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            c: &self.c + &rhs.c,
            d: &self.d + &rhs.d,
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
            c: &self.c - &rhs.c,
            d: &self.d - &rhs.d,
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if let Some(q) = self.as_rational() {
            if q.is_zero() {
                return Scalar::zero();
            }
            return rhs.scale_rational(q);
        }
        if let Some(q) = rhs.as_rational() {
            if q.is_zero() {
                return Scalar::zero();
            }
            return self.scale_rational(q);
        }
        // (p + q i)(p' + q' i) = (pp' - qq') + (pq' + qp') i
        let (pp_a, pp_b) = q_sqrt2_mul(&self.a, &self.b, &rhs.a, &rhs.b);
        let (qq_a, qq_b) = q_sqrt2_mul(&self.c, &self.d, &rhs.c, &rhs.d);
        let (pq_a, pq_b) = q_sqrt2_mul(&self.a, &self.b, &rhs.c, &rhs.d);
        let (qp_a, qp_b) = q_sqrt2_mul(&self.c, &self.d, &rhs.a, &rhs.b);
        Scalar {
            a: pp_a - qq_a,
            b: pp_b - qq_b,
            c: pq_a + qp_a,
            d: pq_b + qp_b,
        }
    }
}

impl Scalar {
    fn scale_rational(&self, q: &BigRational) -> Scalar {
        if q.is_one() {
            return self.clone();
        }
        let f = |x: &BigRational| {
            if x.is_zero() {
                BigRational::zero()
            } else {
                x * q
            }
        };
        Scalar {
            a: f(&self.a),
            b: f(&self.b),
            c: f(&self.c),
            d: f(&self.d),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            a: -self.a.clone(),
            b: -self.b.clone(),
            c: -self.c.clone(),
            d: -self.d.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Panics on division by zero; use [`Scalar::checked_div`] for a fallible version.
impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero scalar")
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if rhs.is_zero() {
            return;
        }
        self.a += &rhs.a;
        self.b += &rhs.b;
        self.c += &rhs.c;
        self.d += &rhs.d;
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self += &rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        if rhs.is_zero() {
            return;
        }
        self.a -= &rhs.a;
        self.b -= &rhs.b;
        self.c -= &rhs.c;
        self.d -= &rhs.d;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        let mut acc = Scalar::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Renders as `a + b*r2 + c*i + d*i*r2`, omitting zero components.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let units = ["", "r2", "i", "i*r2"];
        let mut first = true;
        for (q, unit) in self.components().into_iter().zip(units) {
            if q.is_zero() {
                continue;
            }
            let mag = q.abs();
            if first {
                if q.is_negative() {
                    write!(f, "-")?;
                }
            } else if q.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            if unit.is_empty() {
                write!(f, "{}", fmt_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{unit}")?;
            } else {
                write!(f, "{}*{unit}", fmt_rational(&mag))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(
            s.trim().parse::<BigInt>().map_err(|_| bad())?,
        )),
    }
}

fn parse_term(term: &str) -> Result<Scalar> {
    let mut coeff = BigRational::one();
    let mut unit = Scalar::one();
    for factor in term.split('*').map(str::trim) {
        match factor {
            "r2" => unit = &unit * &Scalar::sqrt2(),
            "i" => unit = &unit * &Scalar::i(),
            "" => return Err(Error::Parse(format!("empty factor in `{term}`"))),
            q => coeff *= parse_rational(q)?,
        }
    }
    Ok(unit.scale_rational(&coeff))
}

/// Parses the text form produced by `Display`; also accepts any sum of
/// signed terms built from rationals, `r2` and `i`.
impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Scalar> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let mut total = Scalar::zero();
        let mut sign = 1i64;
        let mut current = String::new();
        let mut flush = |current: &mut String, sign: i64| -> Result<()> {
            let t = current.trim();
            if t.is_empty() {
                return Err(Error::Parse(format!("dangling sign in `{s}`")));
            }
            let v = parse_term(t)?;
            if sign < 0 {
                total -= &v;
            } else {
                total += &v;
            }
            current.clear();
            Ok(())
        };
        let mut prev_nonspace: Option<char> = None;
        for ch in s.chars() {
            // a sign starts a new term unless it follows `/` (as in `1/-2`, rejected later)
            if (ch == '+' || ch == '-') && prev_nonspace.is_some_and(|p| p != '/' && p != '*') {
                if current.trim().is_empty() {
                    // consecutive signs such as `+ -2`
                    if ch == '-' {
                        sign = -sign;
                    }
                } else {
                    flush(&mut current, sign)?;
                    sign = if ch == '-' { -1 } else { 1 };
                }
            } else if (ch == '+' || ch == '-') && prev_nonspace.is_none() {
                if ch == '-' {
                    sign = -sign;
                }
            } else {
                current.push(ch);
            }
            if !ch.is_whitespace() {
                prev_nonspace = Some(ch);
            }
        }
        flush(&mut current, sign)?;
        Ok(total)
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        let q = (-20i64..20, 1i64..7).prop_map(|(p, q)| BigRational::new(p.into(), q.into()));
        (q.clone(), q.clone(), q.clone(), q).prop_map(|(a, b, c, d)| Scalar::new(a, b, c, d))
    }

    #[test]
    fn defining_relations() {
        let r2 = Scalar::sqrt2();
        let i = Scalar::i();
        assert_eq!(&r2 * &r2, Scalar::from_int(2));
        assert_eq!(&i * &i, Scalar::from_int(-1));
        assert_eq!(Scalar::i_sqrt2().pow(2), Scalar::from_int(-2));
        let one = Scalar::one();
        assert_eq!((&one + &r2) * (&one - &r2), Scalar::from_int(-1));
    }

    #[test]
    fn embedding() {
        assert!(Scalar::from_int(0).is_zero());
        assert!(Scalar::from_int(1).is_one());
        assert_eq!(Scalar::frac(1, 2).to_string(), "1/2");
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(matches!(Scalar::zero().inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn text_forms() {
        let x: Scalar = "1/2 - 3*r2 + i - 2/3*i*r2".parse().unwrap();
        assert_eq!(x.to_string(), "1/2 - 3*r2 + i - 2/3*i*r2");
        assert_eq!("-r2".parse::<Scalar>().unwrap(), -Scalar::sqrt2());
        assert_eq!("0".parse::<Scalar>().unwrap(), Scalar::zero());
        assert_eq!("2*i*r2".parse::<Scalar>().unwrap().to_string(), "2*i*r2");
        assert!("1 +".parse::<Scalar>().is_err());
        assert!("x".parse::<Scalar>().is_err());
        assert!("1/0".parse::<Scalar>().is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn field_axioms(x in arb_scalar(), y in arb_scalar(), z in arb_scalar()) {
            prop_assert_eq!((&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!((&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&x * &(&y + &z), &x * &y + &x * &z);
        }

        #[test]
        fn inverse(x in arb_scalar()) {
            prop_assume!(!x.is_zero());
            prop_assert!((&x.inv().unwrap() * &x).is_one());
        }

        #[test]
        fn conjugation_is_automorphism(x in arb_scalar(), y in arb_scalar()) {
            prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
            prop_assert_eq!((&x + &y).conj(), &x.conj() + &y.conj());
        }

        #[test]
        fn text_round_trip(x in arb_scalar()) {
            prop_assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x);
        }
    }
}
