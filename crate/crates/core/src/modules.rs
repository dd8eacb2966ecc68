//! Finite-dimensional modules given by exact generator matrices.
//!
//! A [`ModuleRep`] stores one matrix per `x_i`, per `c_i` and per simple
//! reflection of its own Weyl group. Construction runs the full relation
//! check, so a module value always satisfies the presentation.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use serde_json::{json, Value};

use crate::dirac::DiracBundle;
use crate::engine::{AlgElem, Algebra, AlgebraParams};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::partition::Partition;
use crate::report::Report;
use crate::scalar::Scalar;
use crate::weyl::{CartanType, RootSystemCtx, SignedPerm};

/// An irreducible Clifford supermodule `U(n)`.
#[derive(Clone, Debug)]
pub struct CliffordModule {
    pub n: usize,
    pub c: Vec<Matrix>,
    /// `(-1)^deg` on the basis.
    pub parity_op: Matrix,
    pub parity: Vec<u8>,
}

impl CliffordModule {
    pub fn dim(&self) -> usize {
        self.parity.len()
    }
}

/// Fermionic realization: `c_{2k-1} = i(a_k + a_k^*)`, `c_{2k} = a_k - a_k^*` on
/// `2^ceil(n/2)` occupation states, with Jordan-Wigner signs.
pub fn clifford_supermodule(n: usize) -> CliffordModule {
    assert!(n >= 1, "U(n) needs n >= 1");
    let modes = n.div_ceil(2);
    let dim = 1usize << modes;
    let ladder = |k: usize, create: bool| {
        let mut m = Matrix::zeros(dim, dim);
        for state in 0..dim {
            let occupied = state >> k & 1 == 1;
            if occupied == create {
                continue;
            }
            let sign = if (state & ((1 << k) - 1)).count_ones() % 2 == 1 {
                -Scalar::one()
            } else {
                Scalar::one()
            };
            m.set(state ^ (1 << k), state, sign);
        }
        m
    };
    let mut c = Vec::with_capacity(n);
    for k in 0..modes {
        let a = ladder(k, false);
        let ad = ladder(k, true);
        c.push((&a + &ad).scale(&Scalar::i()));
        c.push(&a - &ad);
    }
    c.truncate(n);
    let parity: Vec<u8> = (0..dim).map(|s| (s.count_ones() % 2) as u8).collect();
    let mut parity_op = Matrix::zeros(dim, dim);
    for (s, p) in parity.iter().enumerate() {
        parity_op.set(
            s,
            s,
            if *p == 1 {
                -Scalar::one()
            } else {
                Scalar::one()
            },
        );
    }
    CliffordModule {
        n,
        c,
        parity_op,
        parity,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleKind {
    Steinberg,
    Induced {
        lambda: Partition,
        cosets: Vec<SignedPerm>,
    },
    Custom,
}

/// Raw generator data of a module, before any relation check.
#[derive(Clone, Debug)]
pub struct GeneratorMatrices {
    pub x: Vec<Matrix>,
    pub c: Vec<Matrix>,
    pub s: Vec<Matrix>,
    pub parity: Vec<u8>,
    pub labels: Vec<String>,
}

pub struct ModuleRep {
    alg: Arc<Algebra>,
    kind: ModuleKind,
    gens: GeneratorMatrices,
    w_cache: RwLock<HashMap<SignedPerm, Matrix>>,
}

impl std::fmt::Debug for ModuleRep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ModuleRep")
            .field("params", self.alg.params())
            .field("kind", &self.kind)
            .field("dim", &self.dim())
            .finish()
    }
}

fn evaluate(
    ctx: &RootSystemCtx,
    x: &[Matrix],
    c: &[Matrix],
    s: &[Matrix],
    dim: usize,
    cache: &RwLock<HashMap<SignedPerm, Matrix>>,
    e: &AlgElem,
) -> Result<Matrix> {
    let mut acc = Matrix::zeros(dim, dim);
    for (m, coef) in e.iter() {
        let w = m.group_element();
        let wmat = {
            let hit = cache.read().expect("cache lock").get(w).cloned();
            match hit {
                Some(h) => h,
                None => {
                    let word = ctx.reduced_word(w)?;
                    let mut mat = Matrix::identity(dim);
                    for &t in word.iter().rev() {
                        mat = &s[t] * &mat;
                    }
                    cache
                        .write()
                        .expect("cache lock")
                        .insert(w.clone(), mat.clone());
                    mat
                }
            }
        };
        let mut term = wmat;
        for i in (1..=m.rank()).rev() {
            if m.cliff() >> (i - 1) & 1 == 1 {
                term = &c[i - 1] * &term;
            }
        }
        for i in (1..=m.rank()).rev() {
            for _ in 0..m.exps()[i - 1] {
                if x.is_empty() {
                    return Err(Error::InvalidGenerator(
                        "x-action requested before it is defined".into(),
                    ));
                }
                term = &x[i - 1] * &term;
            }
        }
        acc = &acc + &term.scale(coef);
    }
    Ok(acc)
}

fn coxeter_order(a: &SignedPerm, b: &SignedPerm) -> usize {
    let ab = a.compose(b);
    let mut p = ab.clone();
    let mut k = 1;
    while !p.is_identity() {
        p = p.compose(&ab);
        k += 1;
    }
    k
}

/// Verifies every defining relation as a matrix identity: each ordered pair of
/// generators `(g, h)` must satisfy `pi(g) pi(h) = pi(normal form of gh)`, the
/// simple reflections must satisfy the Coxeter relations, and the matrices must
/// respect parity.
pub fn check_relations(alg: &Algebra, gens: &GeneratorMatrices) -> Report {
    let n = alg.n();
    let dim = gens.parity.len();
    let ctx = alg.ctx();
    let cache = RwLock::new(HashMap::new());
    let mut rep = Report::new();

    let mut elems: Vec<(String, char, AlgElem, &Matrix)> = Vec::new();
    for i in 1..=n {
        elems.push((format!("x{i}"), 'x', alg.x(i), &gens.x[i - 1]));
    }
    for i in 1..=n {
        elems.push((format!("c{i}"), 'c', alg.c(i), &gens.c[i - 1]));
    }
    for (t, s) in ctx.simple_reflections().iter().enumerate() {
        elems.push((format!("s{}", t + 1), 's', alg.w(s), &gens.s[t]));
    }

    let mut families: Vec<(String, Vec<String>)> = Vec::new();
    let family_of = |a: char, b: char| -> String {
        let mut k = [a, b];
        k.sort_unstable_by_key(|ch| match ch {
            's' => 0,
            'x' => 1,
            _ => 2,
        });
        format!("{}_{}", k[0], k[1])
    };
    let mut record =
        |fam: String, failure: Option<String>| match families.iter_mut().find(|(f, _)| *f == fam) {
            Some((_, fails)) => fails.extend(failure),
            None => families.push((fam, failure.into_iter().collect())),
        };
    for (gn, gk, ge, gm) in &elems {
        for (hn, hk, he, hm) in &elems {
            let lhs = *gm * *hm;
            let normal = alg.mul(ge, he);
            let ok = match evaluate(ctx, &gens.x, &gens.c, &gens.s, dim, &cache, &normal) {
                Ok(r) => r == lhs,
                Err(_) => false,
            };
            record(
                family_of(*gk, *hk),
                (!ok).then(|| format!("{gn}*{hn} = {normal}")),
            );
        }
    }
    let simple = ctx.simple_reflections();
    let mut coxeter_fail = Vec::new();
    for a in 0..simple.len() {
        for b in 0..simple.len() {
            let m = coxeter_order(&simple[a], &simple[b]);
            let prod = &gens.s[a] * &gens.s[b];
            if prod.pow(m as u32) != Matrix::identity(dim) {
                coxeter_fail.push(format!("(s{} s{})^{m}", a + 1, b + 1));
            }
        }
    }
    families.push(("coxeter".into(), coxeter_fail));

    for (fam, fails) in families {
        rep.push(
            format!("relations[{fam}]"),
            fails.is_empty(),
            json!({ "failures": fails }),
        );
    }

    let odd_ok = |m: &Matrix, odd: bool| {
        (0..dim).all(|i| {
            (0..dim)
                .all(|j| m.get(i, j).is_zero() || ((gens.parity[i] ^ gens.parity[j]) == 1) == odd)
        })
    };
    let parity_ok = gens.c.iter().all(|m| odd_ok(m, true))
        && gens.x.iter().all(|m| odd_ok(m, false))
        && gens.s.iter().all(|m| odd_ok(m, false));
    rep.push("parity", parity_ok, json!({}));
    rep
}

impl ModuleRep {
    /// Builds a module after checking all relations.
    pub fn new(alg: Arc<Algebra>, kind: ModuleKind, gens: GeneratorMatrices) -> Result<ModuleRep> {
        let module = ModuleRep::new_unchecked(alg, kind, gens)?;
        let rep = check_relations(&module.alg, &module.gens);
        if let Some(f) = rep.failures().next() {
            return Err(Error::RelationFailure(format!("{} {}", f.name, f.details)));
        }
        Ok(module)
    }

    /// Builds a module without the relation check; shapes are still validated.
    pub fn new_unchecked(
        alg: Arc<Algebra>,
        kind: ModuleKind,
        gens: GeneratorMatrices,
    ) -> Result<ModuleRep> {
        let n = alg.n();
        let dim = gens.parity.len();
        let r = alg.ctx().simple_reflections().len();
        let counts = [(gens.x.len(), n), (gens.c.len(), n), (gens.s.len(), r)];
        for (got, expected) in counts {
            if got != expected {
                return Err(Error::DimensionMismatch { expected, got });
            }
        }
        for m in gens.x.iter().chain(&gens.c).chain(&gens.s) {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: m.rows(),
                });
            }
        }
        Ok(ModuleRep {
            alg,
            kind,
            gens,
            w_cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn algebra_arc(&self) -> Arc<Algebra> {
        Arc::clone(&self.alg)
    }

    pub fn params(&self) -> &AlgebraParams {
        self.alg.params()
    }

    pub fn kind(&self) -> &ModuleKind {
        &self.kind
    }

    pub fn dim(&self) -> usize {
        self.gens.parity.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.gens.labels
    }

    pub fn parity(&self) -> &[u8] {
        &self.gens.parity
    }

    pub fn generators(&self) -> &GeneratorMatrices {
        &self.gens
    }

    pub fn x(&self, i: usize) -> &Matrix {
        &self.gens.x[i - 1]
    }

    pub fn c(&self, i: usize) -> &Matrix {
        &self.gens.c[i - 1]
    }

    pub fn s(&self, t: usize) -> &Matrix {
        &self.gens.s[t]
    }

    /// `pi(e)` as an exact matrix.
    pub fn act_matrix(&self, e: &AlgElem) -> Result<Matrix> {
        if e.rank() != self.alg.n() {
            return Err(Error::ParamsMismatch(format!(
                "element of rank {} on a module of rank {}",
                e.rank(),
                self.alg.n()
            )));
        }
        evaluate(
            self.alg.ctx(),
            &self.gens.x,
            &self.gens.c,
            &self.gens.s,
            self.dim(),
            &self.w_cache,
            e,
        )
    }

    pub fn check_relations(&self) -> Report {
        check_relations(&self.alg, &self.gens)
    }

    /// Matrices of the Sergeev generators (`c_i` and simple reflections).
    pub fn sergeev_generators(&self) -> Vec<&Matrix> {
        self.gens.c.iter().chain(&self.gens.s).collect()
    }

    pub fn summary(&self) -> Value {
        let mut v = json!({
            "type": self.params().ty,
            "n": self.params().n,
            "dim": self.dim(),
            "params": self.params(),
        });
        if let ModuleKind::Induced { lambda, .. } = &self.kind {
            v["lambda"] = json!(lambda);
        }
        v
    }
}

pub fn check_module_relations(module: &ModuleRep) -> Report {
    module.check_relations()
}

fn cliff_label(mask: usize, n: usize) -> String {
    if mask == 0 {
        return "1".into();
    }
    (1..=n)
        .filter(|i| mask >> (i - 1) & 1 == 1)
        .map(|i| format!("c{i}"))
        .collect::<Vec<_>>()
        .join("")
}

/// Left multiplication by `c_i` on the Clifford monomial basis of `Cl_n`.
fn clifford_left_mult(n: usize) -> Vec<Matrix> {
    let dim = 1usize << n;
    (1..=n)
        .map(|i| {
            let bit = 1usize << (i - 1);
            let mut m = Matrix::zeros(dim, dim);
            for eps in 0..dim {
                let mut neg = (eps & (bit - 1)).count_ones() % 2 == 1;
                if eps & bit != 0 {
                    neg = !neg;
                }
                m.set(
                    eps ^ bit,
                    eps,
                    if neg { -Scalar::one() } else { Scalar::one() },
                );
            }
            m
        })
        .collect()
}

/// `w . c^e = c_{w(i_1)} ... c_{w(i_k)}` rewritten as a sorted monomial with sign.
fn permute_monomial(w: &SignedPerm, n: usize, eps: usize) -> (usize, bool) {
    let images: Vec<i32> = (1..=n)
        .filter(|i| eps >> (i - 1) & 1 == 1)
        .map(|i| w.act_index(i as i32))
        .collect();
    let mut neg = images.iter().filter(|v| **v < 0).count() % 2 == 1;
    let abs: Vec<u32> = images.iter().map(|v| v.unsigned_abs()).collect();
    let mut inversions = 0;
    for a in 0..abs.len() {
        for b in a + 1..abs.len() {
            if abs[a] > abs[b] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 1 {
        neg = !neg;
    }
    let mask = abs.iter().fold(0usize, |m, &i| m | 1 << (i - 1));
    (mask, neg)
}

fn permutation_matrix(w: &SignedPerm, n: usize) -> Matrix {
    let dim = 1usize << n;
    let mut m = Matrix::zeros(dim, dim);
    for eps in 0..dim {
        let (t, neg) = permute_monomial(w, n, eps);
        m.set(t, eps, if neg { -Scalar::one() } else { Scalar::one() });
    }
    m
}

/// `k * sum_{lo <= j < i} s_{ij} (1 - c_i c_j)`, the Jucys-Murphy element of a block.
pub fn block_jucys_murphy(alg: &Algebra, i: usize, lo: usize) -> AlgElem {
    let n = alg.n();
    let k = &alg.params().k_long;
    let mut acc = alg.zero();
    for j in lo..i {
        let s = alg.w(&SignedPerm::transposition(n, j, i));
        let cc = alg.mul(&alg.c(i), &alg.c(j));
        acc = &acc + &alg.mul(&s, &(&alg.one() - &cc));
    }
    acc.scale(k)
}

/// Seg-part of the Steinberg-type module of type A, i.e. `Cl_n` with
/// `c_i` acting by left multiplication and `S_n` permuting indices.
fn clifford_monomial_module(n: usize) -> (Vec<Matrix>, Vec<Matrix>, Vec<u8>, Vec<String>) {
    let c = clifford_left_mult(n);
    let s = (1..n)
        .map(|t| permutation_matrix(&SignedPerm::transposition(n, t, t + 1), n))
        .collect();
    let dim = 1usize << n;
    let parity = (0..dim).map(|e| (e.count_ones() % 2) as u8).collect();
    let labels = (0..dim).map(|e| cliff_label(e, n)).collect();
    (c, s, parity, labels)
}

fn steinberg_a(alg: &Arc<Algebra>) -> Result<GeneratorMatrices> {
    let n = alg.n();
    let (c, s, parity, labels) = clifford_monomial_module(n);
    let dim = parity.len();
    let cache = RwLock::new(HashMap::new());
    let x = (1..=n)
        .map(|i| {
            let jm = block_jucys_murphy(alg, i, 1);
            evaluate(alg.ctx(), &[], &c, &s, dim, &cache, &jm)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GeneratorMatrices {
        x,
        c,
        s,
        parity,
        labels,
    })
}

fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (ra, ca, rb, cb) = (a.rows(), a.cols(), b.rows(), b.cols());
    let mut m = Matrix::zeros(ra * rb, ca * cb);
    for i in 0..ra {
        for j in 0..ca {
            let v = a.get(i, j);
            if v.is_zero() {
                continue;
            }
            for k in 0..rb {
                for l in 0..cb {
                    let w = b.get(k, l);
                    if !w.is_zero() {
                        m.set(i * rb + k, j * cb + l, v * w);
                    }
                }
            }
        }
    }
    m
}

/// Type B action on `U(n) (x) U(n)`; type D restricts it, adding the matrix of
/// `s_{n-1,-n} = s_n s_{n-1,n} s_n`.
fn steinberg_bd(alg: &Arc<Algebra>) -> GeneratorMatrices {
    let p = alg.params();
    let n = p.n;
    let u = clifford_supermodule(n);
    let pu = &u.parity_op;
    let i = Scalar::i();
    let h = &Scalar::sqrt2() * &Scalar::frac(1, 2);
    let du = u.dim();

    let c: Vec<Matrix> = (0..n).map(|k| kron(pu, &u.c[k])).collect();
    let x: Vec<Matrix> = (1..=n)
        .map(|idx| {
            let mut y = Matrix::zeros(du, du);
            for j in 1..idx {
                y = &y + &u.c[j - 1].scale(&p.k_long);
            }
            let diag = &(&p.k_long * &Scalar::from_int((n - idx) as i64)) + &(&h * &p.k_short);
            y = &y + &u.c[idx - 1].scale(&diag);
            kron(&(&y * pu).scale(&-&i), &u.c[idx - 1])
        })
        .collect();
    let s_long = |t: usize| {
        let ca = (&u.c[t - 1] - &u.c[t]).scale(&h);
        kron(&(&ca * pu).scale(&i), &ca)
    };
    let s_short = kron(&(&u.c[n - 1] * pu).scale(&i), &u.c[n - 1]);
    let mut s: Vec<Matrix> = (1..n).map(s_long).collect();
    match p.ty {
        CartanType::B => s.push(s_short),
        CartanType::D if n >= 2 => {
            let extra = &(&s_short * &s_long(n - 1)) * &s_short;
            s.push(extra);
        }
        _ => {}
    }
    let mut parity = Vec::with_capacity(du * du);
    let mut labels = Vec::with_capacity(du * du);
    for a in 0..du {
        for b in 0..du {
            parity.push(u.parity[a] ^ u.parity[b]);
            labels.push(format!("u{a}*u{b}"));
        }
    }
    GeneratorMatrices {
        x,
        c,
        s,
        parity,
        labels,
    }
}

fn forced_n(params: &AlgebraParams) -> Option<Scalar> {
    match params.ty {
        CartanType::A => None,
        CartanType::B => Some(AlgebraParams::steinberg_n_b(
            params.n,
            &params.k_long,
            &params.k_short,
        )),
        CartanType::D => Some(AlgebraParams::steinberg_n_d(params.n, &params.k_long)),
    }
}

/// Generator matrices of the Steinberg-type module with no parameter or relation check.
pub fn steinberg_generators(params: &AlgebraParams) -> Result<(Arc<Algebra>, GeneratorMatrices)> {
    let alg = Arc::new(Algebra::new(params.clone())?);
    let gens = match params.ty {
        CartanType::A => steinberg_a(&alg)?,
        _ => steinberg_bd(&alg),
    };
    Ok((alg, gens))
}

pub fn steinberg_module(params: &AlgebraParams) -> Result<ModuleRep> {
    if let Some(expected) = forced_n(params) {
        if expected != params.big_n {
            return Err(Error::WrongSteinbergParameter {
                expected: expected.to_string(),
                got: params.big_n.to_string(),
            });
        }
    }
    let (alg, gens) = steinberg_generators(params)?;
    ModuleRep::new(alg, ModuleKind::Steinberg, gens)
}

/// Length-minimal representatives of `S_n / S_lambda`, identity first.
pub fn minimal_coset_reps(ctx: &RootSystemCtx, lambda: &Partition) -> Vec<SignedPerm> {
    let mut best: HashMap<Vec<Vec<u32>>, (usize, SignedPerm)> = HashMap::new();
    for w in ctx.elements() {
        let key = coset_key(w, lambda);
        let len = ctx.length(w).expect("element of the group");
        let better = match best.get(&key) {
            None => true,
            Some((l, v)) => (len, w) < (*l, v),
        };
        if better {
            best.insert(key, (len, w.clone()));
        }
    }
    let mut reps: Vec<(usize, SignedPerm)> = best.into_values().collect();
    reps.sort();
    reps.into_iter().map(|(_, w)| w).collect()
}

fn coset_key(w: &SignedPerm, lambda: &Partition) -> Vec<Vec<u32>> {
    lambda
        .blocks()
        .iter()
        .map(|&(a, b)| {
            let mut img: Vec<u32> = (a..=b)
                .map(|j| w.act_index(j as i32).unsigned_abs())
                .collect();
            img.sort_unstable();
            img
        })
        .collect()
}

/// The module induced from the Steinberg-type module of the parabolic subalgebra,
/// on the basis (minimal coset representative) x (Clifford monomial).
pub fn induced_module(lambda: &Partition, k: Scalar) -> Result<ModuleRep> {
    let n = lambda.size();
    let alg = Arc::new(Algebra::new(AlgebraParams::type_a(n, k))?);
    let gens = induced_generators(&alg, lambda)?;
    let cosets = minimal_coset_reps(alg.ctx(), lambda);
    ModuleRep::new(
        alg,
        ModuleKind::Induced {
            lambda: lambda.clone(),
            cosets,
        },
        gens,
    )
}

fn induced_generators(alg: &Arc<Algebra>, lambda: &Partition) -> Result<GeneratorMatrices> {
    let n = alg.n();
    if lambda.size() != n {
        return Err(Error::InvalidPartition(format!(
            "{lambda} is not a partition of {n}"
        )));
    }
    let ctx = alg.ctx();
    let cosets = minimal_coset_reps(ctx, lambda);
    let index: HashMap<Vec<Vec<u32>>, usize> = cosets
        .iter()
        .enumerate()
        .map(|(a, m)| (coset_key(m, lambda), a))
        .collect();
    let cl = 1usize << n;
    let dim = cosets.len() * cl;

    // St_lambda: Clifford monomials with block-local Jucys-Murphy x-action
    let (c_st, s_st, _, _) = clifford_monomial_module(n);
    let cache = RwLock::new(HashMap::new());
    let x_st = (1..=n)
        .map(|i| {
            let (lo, _) = lambda.block_of(i);
            evaluate(
                ctx,
                &[],
                &c_st,
                &s_st,
                cl,
                &cache,
                &block_jucys_murphy(alg, i, lo),
            )
        })
        .collect::<Result<Vec<_>>>()?;

    let mut c = vec![Matrix::zeros(dim, dim); n];
    for (a, m) in cosets.iter().enumerate() {
        let minv = m.inverse();
        for i in 1..=n {
            let j = minv.act_index(i as i32) as usize;
            for v in 0..cl {
                for u in 0..cl {
                    let val = c_st[j - 1].get(u, v);
                    if !val.is_zero() {
                        c[i - 1].set(a * cl + u, a * cl + v, val.clone());
                    }
                }
            }
        }
    }
    let mut s = Vec::with_capacity(n.saturating_sub(1));
    for t in 1..n {
        let st = SignedPerm::transposition(n, t, t + 1);
        let mut mat = Matrix::zeros(dim, dim);
        for (a, m) in cosets.iter().enumerate() {
            let sm = st.compose(m);
            let b = index[&coset_key(&sm, lambda)];
            let u = cosets[b].inverse().compose(&sm);
            let pm = permutation_matrix(&u, n);
            for v in 0..cl {
                for r in 0..cl {
                    let val = pm.get(r, v);
                    if !val.is_zero() {
                        mat.set(b * cl + r, a * cl + v, val.clone());
                    }
                }
            }
        }
        s.push(mat);
    }

    // x_i (m (x) v) = m (x) x_j v - L (1 (x) v), with L = m x_j - x_i m in Seg_n
    let cache = RwLock::new(HashMap::new());
    let mut x = vec![Matrix::zeros(dim, dim); n];
    for (a, m) in cosets.iter().enumerate() {
        let me = alg.w(m);
        let minv = m.inverse();
        for i in 1..=n {
            let j = minv.act_index(i as i32) as usize;
            let lower = &alg.mul(&me, &alg.x(j)) - &alg.mul(&alg.x(i), &me);
            if !lower.in_sergeev() {
                return Err(Error::RelationFailure(format!(
                    "straightening m x_j left x-terms: {lower}"
                )));
            }
            let lmat = evaluate(ctx, &[], &c, &s, dim, &cache, &lower)?;
            for v in 0..cl {
                for u in 0..cl {
                    let val = x_st[j - 1].get(u, v);
                    if !val.is_zero() {
                        x[i - 1].add_to(a * cl + u, a * cl + v, val);
                    }
                }
                // identity coset occupies the first block
                for r in 0..dim {
                    let val = lmat.get(r, v);
                    if !val.is_zero() {
                        x[i - 1].add_to(r, a * cl + v, &-val);
                    }
                }
            }
        }
    }

    let mut parity = Vec::with_capacity(dim);
    let mut labels = Vec::with_capacity(dim);
    for m in &cosets {
        for v in 0..cl {
            parity.push((v.count_ones() % 2) as u8);
            labels.push(format!("{m}|{}", cliff_label(v, n)));
        }
    }
    Ok(GeneratorMatrices {
        x,
        c,
        s,
        parity,
        labels,
    })
}

#[derive(Clone, Debug)]
pub struct HermitianCheck {
    pub gram: Matrix,
    pub report: Report,
}

/// Gram matrix of the form `delta(w1 S, w2 S) <pi(w2^-1 w1) v1, v2>` on the
/// induced basis, plus the anti-self-adjointness check for `pi(D)`.
pub fn hermitian_form(module: &ModuleRep) -> Result<HermitianCheck> {
    let ModuleKind::Induced { lambda, cosets } = module.kind() else {
        return Err(Error::ParamsMismatch(
            "the Hermitian form is defined on induced modules only".into(),
        ));
    };
    let n = lambda.size();
    let cl = 1usize << n;
    let dim = module.dim();
    let mut gram = Matrix::zeros(dim, dim);
    let key = |w: &SignedPerm| coset_key(w, lambda);
    for (a, w1) in cosets.iter().enumerate() {
        for (b, w2) in cosets.iter().enumerate() {
            if key(w1) != key(w2) {
                continue;
            }
            let u = w2.inverse().compose(w1);
            let pm = permutation_matrix(&u, n);
            for v1 in 0..cl {
                for v2 in 0..cl {
                    // orthonormal Clifford monomials: <pm v1, e_v2> = conj(pm[v2, v1])
                    let val = pm.get(v2, v1);
                    if !val.is_zero() {
                        gram.set(a * cl + v1, b * cl + v2, val.conj());
                    }
                }
            }
        }
    }
    let bundle = DiracBundle::new(module.algebra())?;
    let d = module.act_matrix(&bundle.d)?;
    let lhs = &d.conj_transpose() * &gram;
    let rhs = (&gram * &d).scale(&-Scalar::one());
    let mut report = Report::new();
    report.push(
        "gram_is_identity",
        gram == Matrix::identity(dim),
        json!({ "dim": dim }),
    );
    report.push(
        "d_anti_self_adjoint",
        lhs == rhs,
        json!({ "lambda": lambda, "nonzero_entries_of_d": d.nnz() }),
    );
    Ok(HermitianCheck { gram, report })
}
