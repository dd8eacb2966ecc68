//! Integer partitions and the two weight maps attached to them.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Parts in nonincreasing order, all positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Partition> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_distinct(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// `(start, end)` index ranges of the blocks, 1-based and inclusive.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut start = 1;
        self.parts
            .iter()
            .map(|&p| {
                let b = (start, start + p - 1);
                start += p;
                b
            })
            .collect()
    }

    /// The block containing index `i` (1-based).
    pub fn block_of(&self, i: usize) -> (usize, usize) {
        *self
            .blocks()
            .iter()
            .find(|(s, e)| *s <= i && i <= *e)
            .expect("index inside the partition")
    }

    /// Concatenation of `(-p+1, -p+3, ..., p-1)` over the parts.
    pub fn phi1(&self) -> Vec<i64> {
        self.parts
            .iter()
            .flat_map(|&p| (0..p).map(move |t| 2 * t as i64 - p as i64 + 1))
            .collect()
    }

    /// Squares of the entries of the second map: `j(j-1)` for `j = 1..p` in each part.
    pub fn phi2_squares(&self) -> Vec<i64> {
        self.parts
            .iter()
            .flat_map(|&p| (1..=p as i64).map(|j| j * (j - 1)))
            .collect()
    }

    pub fn norm1_sq(&self) -> i64 {
        self.phi1().iter().map(|v| v * v).sum()
    }

    pub fn norm2_sq(&self) -> i64 {
        self.phi2_squares().iter().sum()
    }

    /// `sum (p-1) p (p+1) / 3`.
    pub fn closed_form_norm(&self) -> i64 {
        self.parts
            .iter()
            .map(|&p| {
                let p = p as i64;
                (p - 1) * p * (p + 1) / 3
            })
            .sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

/// Accepts `"3,1"`, `"3 1"` or `"(3,1)"`.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Partition> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = t
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|p| !p.is_empty())
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n`, parts nonincreasing, in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Strictly decreasing partitions of `n`, largest first part first.
pub fn distinct_partitions(n: usize) -> Vec<Partition> {
    partitions(n)
        .into_iter()
        .filter(Partition::is_distinct)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiData {
    pub phi1: Vec<i64>,
    pub norm1_sq: i64,
    pub norm2_sq: i64,
    pub closed_form: i64,
}

impl PhiData {
    pub fn consistent(&self) -> bool {
        self.norm1_sq == self.norm2_sq && self.norm2_sq == self.closed_form
    }
}

pub fn phi_maps(lambda: &Partition) -> PhiData {
    PhiData {
        phi1: lambda.phi1(),
        norm1_sq: lambda.norm1_sq(),
        norm2_sq: lambda.norm2_sq(),
        closed_form: lambda.closed_form_norm(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn phi_examples() {
        let d = phi_maps(&p("3"));
        assert_eq!(d.phi1, [-2, 0, 2]);
        assert_eq!((d.norm1_sq, d.norm2_sq), (8, 8));
        let d = phi_maps(&p("2,1"));
        assert_eq!(d.phi1, [-1, 1, 0]);
        assert_eq!(d.norm1_sq, 2);
        let d = phi_maps(&p("1,1,1,1"));
        assert_eq!(d.phi1, [0, 0, 0, 0]);
        assert_eq!(d.norm2_sq, 0);
        assert_eq!(phi_maps(&p("3,1")).norm1_sq, 8);
        assert_eq!(phi_maps(&p("4")).phi1, [-3, -1, 1, 3]);
        assert_eq!(phi_maps(&p("4")).norm1_sq, 20);
    }

    #[test]
    fn distinct_enumeration() {
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
    fn partition_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, [1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn parsing_and_blocks() {
        assert_eq!(p("(1, 3)").parts(), &[3, 1]);
        assert!("3,0".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
        assert_eq!(p("2,2,1").blocks(), [(1, 2), (3, 4), (5, 5)]);
        assert_eq!(p("2,1").block_of(3), (3, 3));
    }

    #[test]
    fn norm_identity_through_eight() {
        for n in 1..=8 {
            for lam in partitions(n) {
                assert!(phi_maps(&lam).consistent(), "{lam}");
            }
        }
    }

    #[test]
    fn labels_are_unambiguous_through_five() {
        for n in 1..=5 {
            let mut norms: Vec<i64> = distinct_partitions(n)
                .iter()
                .map(Partition::norm1_sq)
                .collect();
            let before = norms.len();
            norms.sort_unstable();
            norms.dedup();
            assert_eq!(norms.len(), before, "n = {n}");
        }
    }

    proptest! {
        #[test]
        fn random_partitions_satisfy_norm_identity(parts in proptest::collection::vec(1usize..9, 1..5)) {
            let lam = Partition::new(parts).unwrap();
            prop_assert!(phi_maps(&lam).consistent());
            prop_assert_eq!(lam.phi1().len(), lam.size());
        }
    }
}
