//! The Dirac element, its dressed generators and the two Casimir-type elements.

use serde_json::json;

use crate::engine::{AlgElem, Algebra, Parity};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::scalar::Scalar;
use crate::weyl::{CartanType, Root, RootKind};

fn half_sqrt2() -> Scalar {
    &Scalar::sqrt2() * &Scalar::frac(1, 2)
}

/// `c_alpha`: `(sqrt2/2)(c_i -+ c_j)` for long roots, `c_i` for short ones.
pub fn clifford_root(alg: &Algebra, root: &Root) -> Result<AlgElem> {
    if !alg.ctx().contains(root) {
        return Err(Error::RootNotInSystem(root.to_string()));
    }
    let h = half_sqrt2();
    Ok(match root.kind {
        RootKind::Diff => (&alg.c(root.i) - &alg.c(root.j)).scale(&h),
        RootKind::Sum => (&alg.c(root.i) + &alg.c(root.j)).scale(&h),
        RootKind::Short => alg.c(root.i),
    })
}

/// `s_alpha c_alpha` for a positive root.
pub fn twisted_reflection(alg: &Algebra, root: &Root) -> Result<AlgElem> {
    let c = clifford_root(alg, root)?;
    let s = alg.w(&alg.ctx().reflection(root)?);
    Ok(alg.mul(&s, &c))
}

#[derive(Clone, Debug)]
pub struct DiracBundle {
    pub d: AlgElem,
    pub omega_h: AlgElem,
    pub omega_seg: AlgElem,
    pub stilde: Vec<(Root, AlgElem)>,
    pub y: Vec<AlgElem>,
    pub y_prime: Vec<AlgElem>,
    pub x_prime: Vec<AlgElem>,
}

impl DiracBundle {
    pub fn new(alg: &Algebra) -> Result<DiracBundle> {
        let n = alg.n();
        let params = alg.params();
        let stilde: Vec<(Root, AlgElem)> = alg
            .ctx()
            .positive_roots()
            .iter()
            .map(|r| Ok((*r, twisted_reflection(alg, r)?)))
            .collect::<Result<_>>()?;
        let h = half_sqrt2();

        let mut y = Vec::with_capacity(n);
        let mut y_prime = Vec::with_capacity(n);
        let mut x_prime = Vec::with_capacity(n);
        for i in 1..=n {
            let yi = alg.mul(&alg.x(i), &alg.c(i));
            let mut ypi = yi.clone();
            for (r, st) in &stilde {
                if r.pairing(i) != 0 {
                    ypi = &ypi + &st.scale(&(&h * params.k_of(r)));
                }
            }
            let xpi = -&alg.mul(&ypi, &alg.c(i));
            y.push(yi);
            y_prime.push(ypi);
            x_prime.push(xpi);
        }

        let mut d = y.iter().fold(alg.zero(), |acc, yi| &acc + yi);
        for (r, st) in &stilde {
            let coef = &(&h * params.k_of(r)) * &Scalar::from_int(r.length_sq() as i64);
            d = &d + &st.scale(&coef);
        }

        let omega_h = (1..=n).fold(alg.zero(), |acc, i| &acc + &alg.mul(&alg.x(i), &alg.x(i)));
        let mut omega_seg = alg.zero();
        for (a, sa) in &stilde {
            let refl = alg.ctx().reflection(a)?;
            for (b, sb) in &stilde {
                if refl.act_on_root(b).1 < 0 {
                    let w = (a.length_sq() * b.length_sq()) as i64;
                    let coef = &(&Scalar::frac(w, 2) * params.k_of(a)) * params.k_of(b);
                    omega_seg = &omega_seg + &alg.mul(sa, sb).scale(&coef);
                }
            }
        }

        let bundle = DiracBundle {
            d,
            omega_h,
            omega_seg,
            stilde,
            y,
            y_prime,
            x_prime,
        };
        let sum_yp = bundle.y_prime.iter().fold(alg.zero(), |acc, v| &acc + v);
        let sum_xpc = (1..=n).fold(alg.zero(), |acc, i| {
            &acc + &alg.mul(&bundle.x_prime[i - 1], &alg.c(i))
        });
        if sum_yp != bundle.d || sum_xpc != bundle.d {
            return Err(Error::RelationFailure(
                "the presentations of D disagree".into(),
            ));
        }
        Ok(bundle)
    }

    pub fn stilde(&self, root: &Root) -> Option<&AlgElem> {
        self.stilde.iter().find(|(r, _)| r == root).map(|(_, e)| e)
    }
}

pub fn dressed_generators(alg: &Algebra, i: usize) -> Result<(AlgElem, AlgElem, AlgElem)> {
    if i == 0 || i > alg.n() {
        return Err(Error::InvalidGenerator(format!("index {i} out of range")));
    }
    let b = DiracBundle::new(alg)?;
    Ok((
        b.y[i - 1].clone(),
        b.y_prime[i - 1].clone(),
        b.x_prime[i - 1].clone(),
    ))
}

pub fn dirac_element(alg: &Algebra) -> Result<AlgElem> {
    Ok(DiracBundle::new(alg)?.d)
}

pub fn casimirs(alg: &Algebra) -> Result<(AlgElem, AlgElem)> {
    let b = DiracBundle::new(alg)?;
    Ok((b.omega_h, b.omega_seg))
}

/// `N n(n-1)/2`: the anticommutators `y_i y_j + y_j y_i = N` add this scalar to `D^2`
/// in types B and D. It vanishes in type A and whenever `N = 0`.
pub fn d_squared_offset(alg: &Algebra) -> Scalar {
    let p = alg.params();
    if p.ty == CartanType::A {
        return Scalar::zero();
    }
    let pairs = (p.n * (p.n - 1) / 2) as i64;
    &p.big_n * &Scalar::from_int(pairs)
}

fn witness(e: &AlgElem) -> serde_json::Value {
    if e.is_zero() {
        json!(null)
    } else {
        json!(e.to_string())
    }
}

fn root_sum(alg: &Algebra, b: &DiracBundle, pred: impl Fn(&Root) -> bool) -> AlgElem {
    b.stilde
        .iter()
        .filter(|(r, _)| pred(r))
        .fold(alg.zero(), |acc, (_, s)| &acc + s)
}

fn pair_sum(
    alg: &Algebra,
    b: &DiracBundle,
    pred: impl Fn(&Root, &Root) -> bool,
) -> Result<AlgElem> {
    let mut acc = alg.zero();
    for (a, sa) in &b.stilde {
        let refl = alg.ctx().reflection(a)?;
        for (bb, sb) in &b.stilde {
            if pred(a, bb) && refl.act_on_root(bb).1 < 0 {
                acc = &acc + &alg.mul(sa, sb);
            }
        }
    }
    Ok(acc)
}

/// Checks the square of `D`, its (anti)commutation with `W` and the `c_i`,
/// parities, and the root-sum identities.
pub fn verify_identities(alg: &Algebra) -> Result<Report> {
    let b = DiracBundle::new(alg)?;
    let params = serde_json::to_value(alg.params()).expect("params serialize");
    let mut rep = Report::new();

    let d2 = alg.mul(&b.d, &b.d);
    let offset = d_squared_offset(alg);
    let target = &(&b.omega_h - &b.omega_seg) + &alg.scalar(offset.clone());
    let diff = &d2 - &target;
    let literal = &d2 - &(&b.omega_h - &b.omega_seg);
    rep.push(
        "d_squared",
        diff.is_zero(),
        json!({
            "params": params,
            "constant_term": offset.to_string(),
            "literal_identity_holds": literal.is_zero(),
            "witness": witness(&diff),
        }),
    );

    for (t, s) in alg.simple_reflections().iter().enumerate() {
        let diff = &alg.mul(s, &b.d) - &alg.mul(&b.d, s);
        rep.push(
            format!("w_commutes_with_d[s{}]", t + 1),
            diff.is_zero(),
            json!({ "params": params, "witness": witness(&diff) }),
        );
    }
    for i in 1..=alg.n() {
        let c = alg.c(i);
        let diff = &alg.mul(&c, &b.d) + &alg.mul(&b.d, &c);
        rep.push(
            format!("c_anticommutes_with_d[c{i}]"),
            diff.is_zero(),
            json!({ "params": params, "witness": witness(&diff) }),
        );
    }

    rep.push(
        "parities",
        b.d.parity() == Parity::Odd
            && b.omega_h.parity() == Parity::Even
            && b.omega_seg.parity() == Parity::Even
            && b.omega_seg.in_sergeev(),
        json!({
            "d": b.d.parity(),
            "omega_h": b.omega_h.parity(),
            "omega_seg": b.omega_seg.parity(),
        }),
    );

    let h = half_sqrt2();
    let r2 = Scalar::sqrt2();
    let mut split = b.y.iter().fold(alg.zero(), |acc, v| &acc + v);
    for (r, st) in &b.stilde {
        let coef = if r.is_long() { &r2 } else { &h };
        split = &split + &st.scale(&(coef * alg.params().k_of(r)));
    }
    let diff = &split - &b.d;
    rep.push(
        "d_split_form",
        diff.is_zero(),
        json!({ "witness": witness(&diff) }),
    );

    let long = root_sum(alg, &b, Root::is_long);
    let short = root_sum(alg, &b, |r| !r.is_long());
    let diff = &alg.mul(&long, &long) - &pair_sum(alg, &b, |a, c| a.is_long() && c.is_long())?;
    rep.push(
        "root_sum_long",
        diff.is_zero(),
        json!({ "witness": witness(&diff) }),
    );
    let diff = &alg.mul(&short, &short) - &pair_sum(alg, &b, |a, c| !a.is_long() && !c.is_long())?;
    rep.push(
        "root_sum_short",
        diff.is_zero(),
        json!({ "witness": witness(&diff) }),
    );
    let mixed = &alg.mul(&long, &short) + &alg.mul(&short, &long);
    let diff = &mixed - &pair_sum(alg, &b, |a, c| a.is_long() != c.is_long())?;
    rep.push(
        "root_sum_mixed",
        diff.is_zero(),
        json!({ "witness": witness(&diff) }),
    );

    Ok(rep)
}
