//! PBW normal forms in the degenerate affine Hecke-Clifford algebras.
//!
//! Every element is kept as a sparse combination of words
//! `x_1^{m_1} ... x_n^{m_n} c_1^{e_1} ... c_n^{e_n} w`. The only rewriting step is
//! left multiplication by a single generator; products of arbitrary elements
//! apply the generators of the left factor one at a time, right to left.
//!
//! Type D is computed inside the type B algebra with the short-root parameter
//! set to zero.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::RwLock;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::weyl::{CartanType, Root, RootKind, RootSystemCtx, SignedPerm};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraParams {
    #[serde(rename = "type")]
    pub ty: CartanType,
    pub n: usize,
    pub k_long: Scalar,
    pub k_short: Scalar,
    #[serde(rename = "N")]
    pub big_n: Scalar,
}

impl AlgebraParams {
    pub fn type_a(n: usize, k: Scalar) -> Self {
        AlgebraParams {
            ty: CartanType::A,
            n,
            k_long: k,
            k_short: Scalar::zero(),
            big_n: Scalar::zero(),
        }
    }

    pub fn type_b(n: usize, k_long: Scalar, k_short: Scalar, big_n: Scalar) -> Self {
        AlgebraParams {
            ty: CartanType::B,
            n,
            k_long,
            k_short,
            big_n,
        }
    }

    pub fn type_d(n: usize, k: Scalar, big_n: Scalar) -> Self {
        AlgebraParams {
            ty: CartanType::D,
            n,
            k_long: k,
            k_short: Scalar::zero(),
            big_n,
        }
    }

    /// `2(n-1) k_l^2 + sqrt2 k_l k_s`, the value of `N` carried by the type B Steinberg module.
    pub fn steinberg_n_b(n: usize, k_long: &Scalar, k_short: &Scalar) -> Scalar {
        let two_n1 = Scalar::from_int(2 * (n as i64 - 1));
        &(&two_n1 * &(k_long * k_long)) + &(&Scalar::sqrt2() * &(k_long * k_short))
    }

    /// `2(n-1) k^2`, the value of `N` carried by the type D Steinberg module.
    pub fn steinberg_n_d(n: usize, k: &Scalar) -> Scalar {
        &Scalar::from_int(2 * (n as i64 - 1)) * &(k * k)
    }

    pub fn k_of(&self, root: &Root) -> &Scalar {
        if root.is_long() {
            &self.k_long
        } else {
            &self.k_short
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PbwMonomial {
    exps: Vec<u32>,
    cliff: u32,
    w: SignedPerm,
}

impl PbwMonomial {
    pub fn new(exps: Vec<u32>, cliff: u32, w: SignedPerm) -> Self {
        assert_eq!(exps.len(), w.rank(), "rank mismatch in monomial");
        assert!(cliff >> exps.len() == 0, "Clifford mask out of range");
        PbwMonomial { exps, cliff, w }
    }

    pub fn unit(n: usize) -> Self {
        PbwMonomial {
            exps: vec![0; n],
            cliff: 0,
            w: SignedPerm::identity(n),
        }
    }

    pub fn rank(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    /// Bit `i-1` is set iff `c_i` occurs.
    pub fn cliff(&self) -> u32 {
        self.cliff
    }

    pub fn group_element(&self) -> &SignedPerm {
        &self.w
    }

    pub fn x_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_odd(&self) -> bool {
        self.cliff.count_ones() % 2 == 1
    }

    fn cliff_indices(&self) -> impl DoubleEndedIterator<Item = usize> + '_ {
        (1..=self.rank()).filter(move |i| self.cliff >> (i - 1) & 1 == 1)
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => write!(f, "x{}*", k + 1)?,
                _ => write!(f, "x{}^{e}*", k + 1)?,
            }
        }
        for i in self.cliff_indices() {
            write!(f, "c{i}*")?;
        }
        write!(f, "{}", self.w)
    }
}

impl fmt::Debug for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

type Terms = BTreeMap<PbwMonomial, Scalar>;

fn add_term(terms: &mut Terms, m: PbwMonomial, c: Scalar) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(m) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

fn add_scaled(acc: &mut Terms, src: Terms, c: &Scalar) {
    for (m, v) in src {
        let v = if c.is_one() { v } else { &v * c };
        add_term(acc, m, v);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
    Mixed,
}

impl Parity {
    pub fn degree(self) -> Option<u32> {
        match self {
            Parity::Even => Some(0),
            Parity::Odd => Some(1),
            Parity::Mixed => None,
        }
    }
}

/// A finite linear combination of PBW monomials of a fixed rank.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgElem {
    n: usize,
    terms: Terms,
}

impl AlgElem {
    pub fn zero(n: usize) -> Self {
        AlgElem {
            n,
            terms: Terms::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        AlgElem::monomial(PbwMonomial::unit(n), Scalar::one())
    }

    pub fn scalar(n: usize, c: Scalar) -> Self {
        AlgElem::monomial(PbwMonomial::unit(n), c)
    }

    pub fn monomial(m: PbwMonomial, c: Scalar) -> Self {
        let n = m.rank();
        let mut terms = Terms::new();
        add_term(&mut terms, m, c);
        AlgElem { n, terms }
    }

    fn from_terms(n: usize, terms: Terms) -> Self {
        AlgElem { n, terms }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PbwMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &PbwMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &Scalar) -> AlgElem {
        if c.is_zero() {
            return AlgElem::zero(self.n);
        }
        AlgElem {
            n: self.n,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Zero counts as even.
    pub fn parity(&self) -> Parity {
        let odd = self.terms.keys().filter(|m| m.is_odd()).count();
        if odd == 0 {
            Parity::Even
        } else if odd == self.terms.len() {
            Parity::Odd
        } else {
            Parity::Mixed
        }
    }

    pub fn max_x_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(PbwMonomial::x_degree)
            .max()
            .unwrap_or(0)
    }

    /// True when every monomial has x-degree zero, i.e. the element lies in the Sergeev part.
    pub fn in_sergeev(&self) -> bool {
        self.max_x_degree() == 0
    }

    /// Parses the text form written by `Display`; `n` fixes the rank of `0`.
    pub fn parse(text: &str, n: usize) -> Result<AlgElem> {
        let text = text.trim();
        let mut out = AlgElem::zero(n);
        if text == "0" {
            return Ok(out);
        }
        let bad = |m: &str| Error::Parse(format!("invalid element text: {m}"));
        let mut rest = text;
        loop {
            rest = rest.trim_start();
            let body = rest.strip_prefix('(').ok_or_else(|| bad(rest))?;
            let close = body.find(')').ok_or_else(|| bad(rest))?;
            let coef: Scalar = body[..close].parse()?;
            let after = &body[close + 1..];
            let after = after.strip_prefix('*').ok_or_else(|| bad(after))?;
            let end = after.find(']').ok_or_else(|| bad(after))?;
            let word = &after[..=end];
            out = &out + &AlgElem::monomial(parse_monomial(word, n)?, coef);
            rest = after[end + 1..].trim_start();
            if rest.is_empty() {
                break;
            }
            rest = rest.strip_prefix('+').ok_or_else(|| bad(rest))?;
        }
        Ok(out)
    }
}

fn parse_monomial(word: &str, n: usize) -> Result<PbwMonomial> {
    let bad = || Error::Parse(format!("invalid monomial `{word}`"));
    let (factors, perm) = match word.rfind('[') {
        Some(p) => (&word[..p], &word[p..]),
        None => return Err(bad()),
    };
    let w: SignedPerm = perm.parse()?;
    if w.rank() != n {
        return Err(Error::ParamsMismatch(format!(
            "monomial `{word}` has rank {}",
            w.rank()
        )));
    }
    let mut exps = vec![0u32; n];
    let mut cliff = 0u32;
    let mut last = (0usize, 0u8);
    for f in factors.split('*').filter(|f| !f.is_empty()) {
        let (kind, body) = f.split_at(1);
        let (idx, e) = match body.split_once('^') {
            Some((i, e)) => (i, e.parse::<u32>().map_err(|_| bad())?),
            None => (body, 1),
        };
        let i: usize = idx.parse().map_err(|_| bad())?;
        if i == 0 || i > n {
            return Err(bad());
        }
        let rank = match kind {
            "x" => 0u8,
            "c" => 1u8,
            _ => return Err(bad()),
        };
        if (rank, i) <= (last.1, last.0) && last.0 != 0 {
            return Err(bad());
        }
        last = (i, rank);
        if rank == 0 {
            exps[i - 1] = e;
        } else {
            if e != 1 {
                return Err(bad());
            }
            cliff |= 1 << (i - 1);
        }
    }
    Ok(PbwMonomial { exps, cliff, w })
}

impl fmt::Display for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &AlgElem {
    type Output = AlgElem;
    fn add(self, rhs: &AlgElem) -> AlgElem {
        assert_eq!(self.n, rhs.n, "rank mismatch in addition");
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            add_term(&mut terms, m.clone(), c.clone());
        }
        AlgElem::from_terms(self.n, terms)
    }
}

impl Sub for &AlgElem {
    type Output = AlgElem;
    fn sub(self, rhs: &AlgElem) -> AlgElem {
        self + &(-rhs)
    }
}

impl Neg for &AlgElem {
    type Output = AlgElem;
    fn neg(self) -> AlgElem {
        AlgElem {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add for AlgElem {
    type Output = AlgElem;
    fn add(self, rhs: AlgElem) -> AlgElem {
        &self + &rhs
    }
}

impl Sub for AlgElem {
    type Output = AlgElem;
    fn sub(self, rhs: AlgElem) -> AlgElem {
        &self - &rhs
    }
}

/// Sum of `c * a` over the given pairs with zero pruning.
pub fn linear_combine(n: usize, terms: &[(Scalar, AlgElem)]) -> AlgElem {
    let mut acc = Terms::new();
    for (c, a) in terms {
        assert_eq!(a.n, n, "rank mismatch in linear combination");
        if c.is_zero() {
            continue;
        }
        add_scaled(&mut acc, a.terms.clone(), c);
    }
    AlgElem::from_terms(n, acc)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    X(usize),
    C(usize),
    W(SignedPerm),
}

#[derive(Clone, Debug, Serialize)]
pub struct PbwReport {
    pub trials: usize,
    pub passed: usize,
    pub witness: Option<[String; 3]>,
}

impl PbwReport {
    pub fn ok(&self) -> bool {
        self.passed == self.trials
    }
}

/// An algebra handle: parameters, root data and a cache of straightening results.
pub struct Algebra {
    params: AlgebraParams,
    ctx: RootSystemCtx,
    engine_ctx: RootSystemCtx,
    s_cache: RwLock<HashMap<(usize, PbwMonomial), Terms>>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("params", &self.params)
            .finish()
    }
}

impl Algebra {
    pub fn new(params: AlgebraParams) -> Result<Algebra> {
        if params.n == 0 {
            return Err(Error::ParamsMismatch("rank must be at least 1".into()));
        }
        if params.ty == CartanType::D && !params.k_short.is_zero() {
            return Err(Error::ParamsMismatch(
                "type D has no short roots; k_short must be 0".into(),
            ));
        }
        let ctx = RootSystemCtx::new(params.ty, params.n);
        let engine_ctx = match params.ty {
            CartanType::D => RootSystemCtx::new(CartanType::B, params.n),
            _ => ctx.clone(),
        };
        Ok(Algebra {
            params,
            ctx,
            engine_ctx,
            s_cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn params(&self) -> &AlgebraParams {
        &self.params
    }

    pub fn n(&self) -> usize {
        self.params.n
    }

    /// Root data and Weyl group of the algebra's own type.
    pub fn ctx(&self) -> &RootSystemCtx {
        &self.ctx
    }

    pub fn generator(&self, g: Generator) -> Result<AlgElem> {
        let n = self.n();
        let check = |i: usize| {
            if i == 0 || i > n {
                Err(Error::InvalidGenerator(format!(
                    "index {i} out of range 1..={n}"
                )))
            } else {
                Ok(())
            }
        };
        match g {
            Generator::X(i) => {
                check(i)?;
                let mut m = PbwMonomial::unit(n);
                m.exps[i - 1] = 1;
                Ok(AlgElem::monomial(m, Scalar::one()))
            }
            Generator::C(i) => {
                check(i)?;
                let mut m = PbwMonomial::unit(n);
                m.cliff = 1 << (i - 1);
                Ok(AlgElem::monomial(m, Scalar::one()))
            }
            Generator::W(w) => {
                self.check_group_element(&w)?;
                Ok(AlgElem::monomial(
                    PbwMonomial::new(vec![0; n], 0, w),
                    Scalar::one(),
                ))
            }
        }
    }

    pub fn x(&self, i: usize) -> AlgElem {
        self.generator(Generator::X(i)).expect("x index in range")
    }

    pub fn c(&self, i: usize) -> AlgElem {
        self.generator(Generator::C(i)).expect("c index in range")
    }

    pub fn w(&self, w: &SignedPerm) -> AlgElem {
        self.generator(Generator::W(w.clone()))
            .expect("group element of this type")
    }

    pub fn scalar(&self, c: Scalar) -> AlgElem {
        AlgElem::scalar(self.n(), c)
    }

    pub fn one(&self) -> AlgElem {
        AlgElem::one(self.n())
    }

    pub fn zero(&self) -> AlgElem {
        AlgElem::zero(self.n())
    }

    /// Simple reflections of the algebra's own type, as elements.
    pub fn simple_reflections(&self) -> Vec<AlgElem> {
        self.ctx
            .simple_reflections()
            .iter()
            .map(|s| self.w(s))
            .collect()
    }

    fn check_group_element(&self, w: &SignedPerm) -> Result<()> {
        if w.rank() != self.n() {
            return Err(Error::ParamsMismatch(format!(
                "{w} has rank {} but the algebra has rank {}",
                w.rank(),
                self.n()
            )));
        }
        if !w.belongs_to(self.params.ty) {
            return Err(Error::InvalidGenerator(format!(
                "{w} is not in W({}{})",
                self.params.ty,
                self.n()
            )));
        }
        Ok(())
    }

    fn check_elem(&self, a: &AlgElem) -> Result<()> {
        if a.n != self.n() {
            return Err(Error::ParamsMismatch(format!(
                "element of rank {} used in an algebra of rank {}",
                a.n,
                self.n()
            )));
        }
        for m in a.terms.keys() {
            self.check_group_element(&m.w)?;
        }
        Ok(())
    }

    /// `c_a * m`, a single signed monomial.
    fn lmul_c_mono(&self, a: usize, m: &PbwMonomial) -> (PbwMonomial, bool) {
        let bit = 1u32 << (a - 1);
        let mut neg = m.exps[a - 1] % 2 == 1;
        if (m.cliff & (bit - 1)).count_ones() % 2 == 1 {
            neg = !neg;
        }
        let mut out = m.clone();
        if m.cliff & bit != 0 {
            out.cliff &= !bit;
            neg = !neg;
        } else {
            out.cliff |= bit;
        }
        (out, neg)
    }

    fn lmul_c_signed(&self, a: i32, terms: Terms) -> Terms {
        let mut out = Terms::new();
        for (m, c) in terms {
            let (m2, mut neg) = self.lmul_c_mono(a.unsigned_abs() as usize, &m);
            if a < 0 {
                neg = !neg;
            }
            add_term(&mut out, m2, if neg { -c } else { c });
        }
        out
    }

    fn lmul_x_mono(&self, a: usize, m: &PbwMonomial) -> Terms {
        let j = (1..a).find(|&j| m.exps[j - 1] > 0);
        let commuting = self.params.ty == CartanType::A || self.params.big_n.is_zero();
        match j {
            Some(j) if !commuting => {
                // x_a x_j = x_j x_a + N c_j c_a for j < a
                let mut rest = m.clone();
                rest.exps[j - 1] -= 1;
                let mut out = Terms::new();
                for (mut t, c) in self.lmul_x_mono(a, &rest) {
                    t.exps[j - 1] += 1;
                    add_term(&mut out, t, c);
                }
                let corr = Terms::from([(rest, self.params.big_n.clone())]);
                let corr = self.lmul_c_signed(j as i32, self.lmul_c_signed(a as i32, corr));
                add_scaled(&mut out, corr, &Scalar::one());
                out
            }
            _ => {
                let mut t = m.clone();
                t.exps[a - 1] += 1;
                Terms::from([(t, Scalar::one())])
            }
        }
    }

    fn lmul_x(&self, a: usize, terms: Terms) -> Terms {
        let mut out = Terms::new();
        for (m, c) in terms {
            add_scaled(&mut out, self.lmul_x_mono(a, &m), &c);
        }
        out
    }

    /// `w * c^e u` for a monomial without x-part.
    fn lmul_w_clifford(&self, w: &SignedPerm, m: &PbwMonomial) -> Terms {
        let n = self.n();
        let start = PbwMonomial::new(vec![0; n], 0, w.compose(&m.w));
        let mut terms = Terms::from([(start, Scalar::one())]);
        for i in m.cliff_indices().rev() {
            terms = self.lmul_c_signed(w.act_index(i as i32), terms);
        }
        terms
    }

    /// `s_t * m` for the `t`-th simple reflection of the engine's Weyl group.
    fn lmul_s_mono(&self, t: usize, m: &PbwMonomial) -> Terms {
        if m.x_degree() == 0 {
            return self.lmul_w_clifford(&self.engine_ctx.simple_reflections()[t], m);
        }
        let key = (t, m.clone());
        if let Some(hit) = self.s_cache.read().expect("cache lock").get(&key) {
            return hit.clone();
        }
        let j = (1..=self.n())
            .find(|&j| m.exps[j - 1] > 0)
            .expect("x-degree positive");
        let mut rest = m.clone();
        rest.exps[j - 1] -= 1;
        let s_rest = self.lmul_s_mono(t, &rest);

        let root = self.engine_ctx.simple_roots()[t];
        let one = Scalar::one();
        // s x_j = sign * x_target s + corr0 + corr2 * c_p c_q
        let (target, sign, corr0, corr2) = match root.kind {
            RootKind::Diff if j == root.i => {
                let k = &self.params.k_long;
                (root.j, 1, -k, k.clone())
            }
            RootKind::Diff if j == root.j => {
                let k = &self.params.k_long;
                (root.i, 1, k.clone(), k.clone())
            }
            RootKind::Short if j == root.i => {
                let corr = -(&Scalar::sqrt2() * &self.params.k_short);
                (j, -1, corr, Scalar::zero())
            }
            _ => (j, 1, Scalar::zero(), Scalar::zero()),
        };
        let mut out = self.lmul_x(target, s_rest);
        if sign < 0 {
            out = out.into_iter().map(|(m, c)| (m, -c)).collect();
        }
        if !corr0.is_zero() {
            add_term(&mut out, rest.clone(), corr0);
        }
        if !corr2.is_zero() {
            let cc = self.lmul_c_signed(
                root.i as i32,
                self.lmul_c_signed(root.j as i32, Terms::from([(rest, one)])),
            );
            add_scaled(&mut out, cc, &corr2);
        }
        self.s_cache
            .write()
            .expect("cache lock")
            .insert(key, out.clone());
        out
    }

    fn lmul_w_mono(&self, w: &SignedPerm, m: &PbwMonomial) -> Terms {
        if w.is_identity() {
            return Terms::from([(m.clone(), Scalar::one())]);
        }
        if m.x_degree() == 0 {
            return self.lmul_w_clifford(w, m);
        }
        let word = self
            .engine_ctx
            .reduced_word(w)
            .expect("element of the ambient Weyl group");
        let mut terms = Terms::from([(m.clone(), Scalar::one())]);
        for &t in word.iter().rev() {
            let mut next = Terms::new();
            for (mm, c) in terms {
                add_scaled(&mut next, self.lmul_s_mono(t, &mm), &c);
            }
            terms = next;
        }
        terms
    }

    fn lmul_w(&self, w: &SignedPerm, terms: Terms) -> Terms {
        if w.is_identity() {
            return terms;
        }
        let mut out = Terms::new();
        for (m, c) in terms {
            add_scaled(&mut out, self.lmul_w_mono(w, &m), &c);
        }
        out
    }

    /// `m * b` for a single monomial `m`.
    fn mono_times(&self, m: &PbwMonomial, b: &Terms) -> Terms {
        let mut t = self.lmul_w(&m.w, b.clone());
        for i in m.cliff_indices().rev() {
            t = self.lmul_c_signed(i as i32, t);
        }
        for i in (1..=self.n()).rev() {
            for _ in 0..m.exps[i - 1] {
                t = self.lmul_x(i, t);
            }
        }
        t
    }

    pub fn multiply(&self, a: &AlgElem, b: &AlgElem) -> Result<AlgElem> {
        self.check_elem(a)?;
        self.check_elem(b)?;
        Ok(self.mul(a, b))
    }

    /// Unchecked product; panics only on internal inconsistencies.
    pub fn mul(&self, a: &AlgElem, b: &AlgElem) -> AlgElem {
        let mut acc = Terms::new();
        for (m, c) in &a.terms {
            add_scaled(&mut acc, self.mono_times(m, &b.terms), c);
        }
        AlgElem::from_terms(self.n(), acc)
    }

    pub fn mul_all(&self, factors: &[&AlgElem]) -> AlgElem {
        factors
            .iter()
            .rev()
            .fold(self.one(), |acc, f| self.mul(f, &acc))
    }

    pub fn pow(&self, a: &AlgElem, e: u32) -> AlgElem {
        (0..e).fold(self.one(), |acc, _| self.mul(a, &acc))
    }

    /// `ab - (-1)^{|a||b|} ba`.
    pub fn supercommutator(&self, a: &AlgElem, b: &AlgElem) -> Result<AlgElem> {
        let da = a.parity().degree().ok_or(Error::MixedParity)?;
        let db = b.parity().degree().ok_or(Error::MixedParity)?;
        let ab = self.multiply(a, b)?;
        let ba = self.mul(b, a);
        Ok(if da * db == 1 { &ab + &ba } else { &ab - &ba })
    }

    pub fn random_element<R: Rng>(&self, rng: &mut R, max_deg: u32, max_terms: usize) -> AlgElem {
        let n = self.n();
        let elements = self.ctx.elements();
        let mut acc = Terms::new();
        let count = rng.gen_range(1..=max_terms.max(1));
        for _ in 0..count {
            let mut exps = vec![0u32; n];
            let deg = rng.gen_range(0..=max_deg);
            for _ in 0..deg {
                exps[rng.gen_range(0..n)] += 1;
            }
            let cliff = rng.gen_range(0..(1u32 << n));
            let w = elements[rng.gen_range(0..elements.len())].clone();
            let num = rng.gen_range(-3i64..=3);
            let den = rng.gen_range(1i64..=2);
            add_term(
                &mut acc,
                PbwMonomial::new(exps, cliff, w),
                Scalar::frac(num, den),
            );
        }
        AlgElem::from_terms(n, acc)
    }

    /// Random associativity triples; the first failing triple is kept as a witness.
    pub fn check_pbw_consistency(&self, trials: usize, max_deg: u32, seed: u64) -> PbwReport {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut passed = 0;
        let mut witness = None;
        for _ in 0..trials {
            let a = self.random_element(&mut rng, max_deg, 2);
            let b = self.random_element(&mut rng, max_deg, 2);
            let c = self.random_element(&mut rng, max_deg, 2);
            let left = self.mul(&self.mul(&a, &b), &c);
            let right = self.mul(&a, &self.mul(&b, &c));
            if left == right {
                passed += 1;
            } else if witness.is_none() {
                witness = Some([a.to_string(), b.to_string(), c.to_string()]);
            }
        }
        PbwReport {
            trials,
            passed,
            witness,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::Rng;

    fn alg_a(n: usize) -> Algebra {
        Algebra::new(AlgebraParams::type_a(n, Scalar::one())).unwrap()
    }

    fn alg_b(n: usize) -> Algebra {
        let k = Scalar::one();
        let nb = AlgebraParams::steinberg_n_b(n, &k, &k);
        Algebra::new(AlgebraParams::type_b(n, k.clone(), k, nb)).unwrap()
    }

    #[test]
    fn generators() {
        let a = alg_a(3);
        assert_eq!(a.x(1).to_string(), "(1)*x1*[1,2,3]");
        assert_eq!(a.c(2).to_string(), "(1)*c2*[1,2,3]");
        let s12 = SignedPerm::transposition(3, 1, 2);
        assert_eq!(a.w(&s12).to_string(), "(1)*[2,1,3]");
        assert!(a.generator(Generator::X(4)).is_err());
        let neg: SignedPerm = "[-1,2,3]".parse().unwrap();
        assert!(a.generator(Generator::W(neg.clone())).is_err());
        let d = Algebra::new(AlgebraParams::type_d(3, Scalar::one(), Scalar::zero())).unwrap();
        assert!(d.generator(Generator::W(neg)).is_err());
        assert!(d
            .generator(Generator::W("[-1,-2,3]".parse().unwrap()))
            .is_ok());
    }

    #[test]
    fn clifford_square() {
        let a = alg_a(2);
        assert_eq!(a.mul(&a.c(1), &a.c(1)), a.scalar(Scalar::from_int(-1)));
    }

    #[test]
    fn reflection_past_x() {
        let a = alg_a(2);
        let s = a.w(&SignedPerm::transposition(2, 1, 2));
        let lhs = a.mul(&s, &a.x(1));
        let rhs = &(&a.mul(&a.x(2), &s) - &a.one()) + &a.mul(&a.c(1), &a.c(2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn type_b_relations() {
        let nn = Scalar::from_int(5);
        let b = Algebra::new(AlgebraParams::type_b(
            2,
            Scalar::one(),
            Scalar::from_int(3),
            nn.clone(),
        ))
        .unwrap();
        let lhs = b.mul(&b.x(2), &b.x(1));
        let rhs = &b.mul(&b.x(1), &b.x(2)) + &b.mul(&b.c(1), &b.c(2)).scale(&nn);
        assert_eq!(lhs, rhs);
        let sn = b.w(&"[1,-2]".parse().unwrap());
        let lhs = b.mul(&sn, &b.x(2));
        let rhs = &(-&b.mul(&b.x(2), &sn)) - &b.scalar(&Scalar::sqrt2() * &Scalar::from_int(3));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn linear_combinations() {
        let a = alg_a(2);
        let x = a.x(1);
        assert!(linear_combine(
            2,
            &[
                (Scalar::one(), x.clone()),
                (Scalar::from_int(-1), x.clone())
            ]
        )
        .is_zero());
        assert!(linear_combine(2, &[(Scalar::zero(), x)]).is_zero());
        let r2 = Scalar::sqrt2();
        let e = linear_combine(2, &[(r2.clone(), a.c(1)), (r2, a.c(2))]);
        assert_eq!(e.to_string(), "(r2)*c1*[1,2] + (r2)*c2*[1,2]");
    }

    #[test]
    fn parities() {
        let a = alg_a(2);
        assert_eq!(a.c(1).parity(), Parity::Odd);
        assert_eq!(a.mul(&a.x(1), &a.x(1)).parity(), Parity::Even);
        assert_eq!((&a.c(1) + &a.one()).parity(), Parity::Mixed);
    }

    #[test]
    fn supercommutators() {
        let a = alg_a(2);
        assert!(a.supercommutator(&a.c(1), &a.c(2)).unwrap().is_zero());
        assert!(a.supercommutator(&a.x(1), &a.x(2)).unwrap().is_zero());
        let mixed = &a.c(1) + &a.one();
        assert_eq!(a.supercommutator(&mixed, &a.x(1)), Err(Error::MixedParity));
        let nn = Scalar::from_int(7);
        let b = Algebra::new(AlgebraParams::type_b(
            2,
            Scalar::one(),
            Scalar::one(),
            nn.clone(),
        ))
        .unwrap();
        let sc = b.supercommutator(&b.x(1), &b.x(2)).unwrap();
        assert_eq!(sc, b.mul(&b.c(2), &b.c(1)).scale(&nn));
    }

    #[test]
    fn params_mismatch() {
        let a2 = alg_a(2);
        let a3 = alg_a(3);
        assert!(matches!(
            a2.multiply(&a2.x(1), &a3.x(1)),
            Err(Error::ParamsMismatch(_))
        ));
    }

    #[test]
    fn text_round_trip() {
        let b = alg_b(3);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let e = b.random_element(&mut rng, 3, 4);
            assert_eq!(AlgElem::parse(&e.to_string(), 3).unwrap(), e);
        }
        assert!(AlgElem::parse("0", 3).unwrap().is_zero());
        assert!(AlgElem::parse("(1)*x1", 3).is_err());
    }

    #[test]
    fn associativity_small() {
        assert!(alg_a(2).check_pbw_consistency(40, 2, 1).ok());
        assert!(alg_b(2).check_pbw_consistency(40, 2, 2).ok());
        let free_n = Algebra::new(AlgebraParams::type_b(
            2,
            Scalar::frac(1, 2),
            Scalar::from_int(2),
            Scalar::from_int(-3),
        ))
        .unwrap();
        assert!(free_n.check_pbw_consistency(40, 2, 3).ok());
        let d = Algebra::new(AlgebraParams::type_d(3, Scalar::one(), Scalar::from_int(4))).unwrap();
        assert!(d.check_pbw_consistency(20, 2, 4).ok());
    }

    #[test]
    fn zero_is_associative() {
        let a = alg_a(2);
        let z = a.zero();
        let x = a.x(1);
        assert_eq!(a.mul(&a.mul(&z, &x), &x), a.mul(&z, &a.mul(&x, &x)));
    }

    #[test]
    fn relation_closure() {
        for alg in [alg_a(3), alg_b(3)] {
            let n = alg.n();
            for i in 1..=n {
                for j in 1..=n {
                    let xc = alg.mul(&alg.x(i), &alg.c(j));
                    let cx = alg.mul(&alg.c(j), &alg.x(i));
                    if i == j {
                        assert!((&xc + &cx).is_zero());
                    } else {
                        assert!((&xc - &cx).is_zero());
                    }
                    let cc = &alg.mul(&alg.c(i), &alg.c(j)) + &alg.mul(&alg.c(j), &alg.c(i));
                    let expect = if i == j {
                        alg.scalar(Scalar::from_int(-2))
                    } else {
                        alg.zero()
                    };
                    assert_eq!(cc, expect);
                }
            }
            for s in alg.ctx().simple_reflections() {
                let se = alg.w(s);
                assert!(alg.mul(&se, &se) == alg.one());
                for i in 1..=n {
                    let lhs = alg.mul(&se, &alg.c(i));
                    let v = s.act_index(i as i32);
                    let ci = alg.c(v.unsigned_abs() as usize);
                    let ci = if v < 0 { -&ci } else { ci };
                    assert_eq!(lhs, alg.mul(&ci, &se));
                }
            }
            for t in 1..n {
                let s = alg.w(&SignedPerm::transposition(n, t, t + 1));
                for j in 1..=n {
                    if j + 1 < t || j > t + 2 {
                        let d = &alg.mul(&s, &alg.x(j)) - &alg.mul(&alg.x(j), &s);
                        assert!(d.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn normal_form_idempotence() {
        let b = alg_b(2);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..30 {
            let e = b.random_element(&mut rng, 3, 3);
            assert_eq!(b.mul(&b.one(), &e), e);
            assert_eq!(b.mul(&e, &b.one()), e);
        }
    }

    #[test]
    fn omega_h_is_central() {
        for alg in [alg_a(3), alg_b(2)] {
            let n = alg.n();
            let omega = (1..=n).fold(alg.zero(), |acc, i| &acc + &alg.mul(&alg.x(i), &alg.x(i)));
            let mut gens: Vec<AlgElem> = (1..=n).flat_map(|i| [alg.x(i), alg.c(i)]).collect();
            gens.extend(alg.simple_reflections());
            for g in gens {
                assert!(alg.supercommutator(&omega, &g).unwrap().is_zero());
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn group_embedding(seed in any::<u64>()) {
            for alg in [alg_a(3), alg_b(3)] {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let els = alg.ctx().elements();
                let u = &els[rng.gen_range(0..els.len())];
                let v = &els[rng.gen_range(0..els.len())];
                prop_assert_eq!(alg.mul(&alg.w(u), &alg.w(v)), alg.w(&u.compose(v)));
            }
        }

        #[test]
        fn parity_is_multiplicative(seed in any::<u64>()) {
            let alg = alg_b(2);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let a = alg.random_element(&mut rng, 2, 1);
            let b = alg.random_element(&mut rng, 2, 1);
            let ab = alg.mul(&a, &b);
            if !ab.is_zero() {
                let expect = (a.parity().degree().unwrap() + b.parity().degree().unwrap()) % 2;
                prop_assert_eq!(ab.parity().degree(), Some(expect));
            }
        }
    }
}
