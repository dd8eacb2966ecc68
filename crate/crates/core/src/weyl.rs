//! Root systems of types A, B, D and their signed-permutation Weyl groups.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanType {
    A,
    B,
    D,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CartanType::A => "A",
            CartanType::B => "B",
            CartanType::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(CartanType::A),
            "B" | "b" => Ok(CartanType::B),
            "D" | "d" => Ok(CartanType::D),
            other => Err(Error::Parse(format!("unknown type `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootKind {
    /// `e_i - e_j`
    Diff,
    /// `e_i + e_j`
    Sum,
    /// `e_i`
    Short,
}

/// A root with 1-based indices; `j` is ignored (and kept equal to `i`) for short roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub kind: RootKind,
    pub i: usize,
    pub j: usize,
}

impl Root {
    pub fn diff(i: usize, j: usize) -> Root {
        assert!(i < j, "diff root needs i < j");
        Root {
            kind: RootKind::Diff,
            i,
            j,
        }
    }

    pub fn sum(i: usize, j: usize) -> Root {
        assert!(i < j, "sum root needs i < j");
        Root {
            kind: RootKind::Sum,
            i,
            j,
        }
    }

    pub fn short(i: usize) -> Root {
        Root {
            kind: RootKind::Short,
            i,
            j: i,
        }
    }

    /// `|<alpha, alpha>|`: 2 for long roots, 1 for short ones.
    pub fn length_sq(&self) -> u32 {
        match self.kind {
            RootKind::Short => 1,
            _ => 2,
        }
    }

    pub fn is_long(&self) -> bool {
        self.kind != RootKind::Short
    }

    /// Coordinates as `(index, coefficient)` pairs.
    pub fn coords(&self) -> Vec<(usize, i32)> {
        match self.kind {
            RootKind::Diff => vec![(self.i, 1), (self.j, -1)],
            RootKind::Sum => vec![(self.i, 1), (self.j, 1)],
            RootKind::Short => vec![(self.i, 1)],
        }
    }

    /// `<alpha, e_m>`.
    pub fn pairing(&self, m: usize) -> i32 {
        self.coords()
            .into_iter()
            .filter(|&(idx, _)| idx == m)
            .map(|(_, c)| c)
            .sum()
    }

    fn from_coords(mut coords: Vec<(usize, i32)>) -> (Root, i32) {
        coords.sort();
        let sign = coords[0].1.signum();
        let root = match coords.as_slice() {
            [(i, _)] => Root::short(*i),
            [(i, a), (j, b)] => {
                if a * b < 0 {
                    Root::diff(*i, *j)
                } else {
                    Root::sum(*i, *j)
                }
            }
            _ => unreachable!("roots have one or two coordinates"),
        };
        (root, sign)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RootKind::Diff => write!(f, "e{}-e{}", self.i, self.j),
            RootKind::Sum => write!(f, "e{}+e{}", self.i, self.j),
            RootKind::Short => write!(f, "e{}", self.i),
        }
    }
}

impl FromStr for Root {
    type Err = Error;
    fn from_str(s: &str) -> Result<Root> {
        let bad = || Error::Parse(format!("invalid root `{s}`"));
        let t = s.trim().strip_prefix('e').ok_or_else(bad)?;
        let idx = |p: &str| p.trim().parse::<usize>().map_err(|_| bad());
        if let Some((a, b)) = t.split_once('-') {
            let (i, j) = (idx(a)?, idx(b.trim().strip_prefix('e').ok_or_else(bad)?)?);
            if i == 0 || i >= j {
                return Err(bad());
            }
            Ok(Root::diff(i, j))
        } else if let Some((a, b)) = t.split_once('+') {
            let (i, j) = (idx(a)?, idx(b.trim().strip_prefix('e').ok_or_else(bad)?)?);
            if i == 0 || i >= j {
                return Err(bad());
            }
            Ok(Root::sum(i, j))
        } else {
            let i = idx(t)?;
            if i == 0 {
                return Err(bad());
            }
            Ok(Root::short(i))
        }
    }
}

/// A signed permutation in window notation: `images[i-1] = w(i)`, a signed 1-based index.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    images: Vec<i32>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> SignedPerm {
        SignedPerm {
            images: (1..=n as i32).collect(),
        }
    }

    pub fn from_images(images: Vec<i32>) -> Result<SignedPerm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a - 1] {
                return Err(Error::Parse(format!(
                    "{images:?} is not a signed permutation"
                )));
            }
            seen[a - 1] = true;
        }
        Ok(SignedPerm { images })
    }

    /// The transposition `(i j)`.
    pub fn transposition(n: usize, i: usize, j: usize) -> SignedPerm {
        let mut w = SignedPerm::identity(n);
        w.images.swap(i - 1, j - 1);
        w
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, &v)| v == k as i32 + 1)
    }

    /// `w(i)` for a signed index, with `w(-i) = -w(i)`.
    pub fn act_index(&self, i: i32) -> i32 {
        let v = self.images[i.unsigned_abs() as usize - 1];
        if i < 0 {
            -v
        } else {
            v
        }
    }

    /// `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        assert_eq!(self.rank(), other.rank(), "rank mismatch in compose");
        SignedPerm {
            images: other.images.iter().map(|&v| self.act_index(v)).collect(),
        }
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut images = vec![0; self.rank()];
        for (k, &v) in self.images.iter().enumerate() {
            let target = v.unsigned_abs() as usize - 1;
            images[target] = (k as i32 + 1) * v.signum();
        }
        SignedPerm { images }
    }

    pub fn sign_count(&self) -> usize {
        self.images.iter().filter(|&&v| v < 0).count()
    }

    pub fn belongs_to(&self, ty: CartanType) -> bool {
        match ty {
            CartanType::A => self.sign_count() == 0,
            CartanType::B => true,
            CartanType::D => self.sign_count().is_multiple_of(2),
        }
    }

    /// Applies `w` to a root, returning the positive root `+-w(alpha)` and the sign.
    pub fn act_on_root(&self, root: &Root) -> (Root, i32) {
        let coords = root
            .coords()
            .into_iter()
            .map(|(idx, c)| {
                let v = self.act_index(idx as i32);
                (v.unsigned_abs() as usize, c * v.signum())
            })
            .collect();
        Root::from_coords(coords)
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SignedPerm {
    type Err = Error;
    fn from_str(s: &str) -> Result<SignedPerm> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("invalid signed permutation `{s}`")))?;
        if inner.trim().is_empty() {
            return Ok(SignedPerm { images: Vec::new() });
        }
        let images = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<i32>()
                    .map_err(|_| Error::Parse(format!("invalid signed permutation `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        SignedPerm::from_images(images)
    }
}

/// Root system data together with the full Weyl group and a reduced word per element.
#[derive(Clone, Debug)]
pub struct RootSystemCtx {
    ty: CartanType,
    n: usize,
    positive: Vec<Root>,
    root_index: HashMap<Root, usize>,
    simple_roots: Vec<Root>,
    simple: Vec<SignedPerm>,
    elements: Vec<SignedPerm>,
    words: HashMap<SignedPerm, Vec<usize>>,
}

impl RootSystemCtx {
    pub fn new(ty: CartanType, n: usize) -> RootSystemCtx {
        assert!(n >= 1, "rank parameter must be at least 1");
        let mut positive = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                positive.push(Root::diff(i, j));
            }
        }
        if ty != CartanType::A {
            for i in 1..=n {
                for j in i + 1..=n {
                    positive.push(Root::sum(i, j));
                }
            }
        }
        if ty == CartanType::B {
            positive.extend((1..=n).map(Root::short));
        }
        let root_index = positive.iter().enumerate().map(|(k, r)| (*r, k)).collect();

        let mut simple_roots: Vec<Root> = (1..n).map(|t| Root::diff(t, t + 1)).collect();
        match ty {
            CartanType::A => {}
            CartanType::B => simple_roots.push(Root::short(n)),
            CartanType::D if n >= 2 => simple_roots.push(Root::sum(n - 1, n)),
            CartanType::D => {}
        }
        let simple: Vec<SignedPerm> = simple_roots.iter().map(|r| reflect(n, r)).collect();

        // BFS by left multiplication: word(s w) = [s] ++ word(w).
        let id = SignedPerm::identity(n);
        let mut words = HashMap::new();
        let mut elements = vec![id.clone()];
        words.insert(id.clone(), Vec::new());
        let mut queue = VecDeque::from([id]);
        while let Some(w) = queue.pop_front() {
            for (k, s) in simple.iter().enumerate() {
                let sw = s.compose(&w);
                if !words.contains_key(&sw) {
                    let mut word = vec![k];
                    word.extend_from_slice(&words[&w]);
                    words.insert(sw.clone(), word);
                    elements.push(sw.clone());
                    queue.push_back(sw);
                }
            }
        }

        RootSystemCtx {
            ty,
            n,
            positive,
            root_index,
            simple_roots,
            simple,
            elements,
            words,
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Diff roots lexicographically, then sum roots, then short roots.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn root_position(&self, root: &Root) -> Option<usize> {
        self.root_index.get(root).copied()
    }

    pub fn contains(&self, root: &Root) -> bool {
        self.root_index.contains_key(root)
    }

    pub fn simple_roots(&self) -> &[Root] {
        &self.simple_roots
    }

    pub fn simple_reflections(&self) -> &[SignedPerm] {
        &self.simple
    }

    /// All group elements in BFS (length-nondecreasing) order.
    pub fn elements(&self) -> &[SignedPerm] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn reflection(&self, root: &Root) -> Result<SignedPerm> {
        if !self.contains(root) {
            return Err(Error::RootNotInSystem(root.to_string()));
        }
        Ok(reflect(self.n, root))
    }

    /// A reduced word as indices into [`Self::simple_reflections`]; the product
    /// of the word read left to right equals `w`.
    pub fn reduced_word(&self, w: &SignedPerm) -> Result<&[usize]> {
        self.words.get(w).map(Vec::as_slice).ok_or_else(|| {
            Error::InvalidGenerator(format!("{w} is not in W({}{})", self.ty, self.n))
        })
    }

    pub fn length(&self, w: &SignedPerm) -> Result<usize> {
        self.reduced_word(w).map(<[usize]>::len)
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversion_count(&self, w: &SignedPerm) -> usize {
        self.positive
            .iter()
            .filter(|r| w.act_on_root(r).1 < 0)
            .count()
    }

    pub fn word_product(&self, word: &[usize]) -> SignedPerm {
        word.iter().fold(SignedPerm::identity(self.n), |acc, &k| {
            acc.compose(&self.simple[k])
        })
    }
}

fn reflect(n: usize, root: &Root) -> SignedPerm {
    let mut w = SignedPerm::identity(n);
    let (i, j) = (root.i, root.j);
    match root.kind {
        RootKind::Diff => w.images.swap(i - 1, j - 1),
        RootKind::Sum => {
            w.images[i - 1] = -(j as i32);
            w.images[j - 1] = -(i as i32);
        }
        RootKind::Short => w.images[i - 1] = -(i as i32),
    }
    w
}
