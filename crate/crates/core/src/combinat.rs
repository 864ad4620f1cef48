//! Partitions, ramification sequences, bounded enumerations of weakly
//! increasing integer sequences, and the expansion of products of elementary
//! symmetric polynomials into monomials.
//!
//! Two index conventions coexist: partitions are weakly decreasing with
//! trailing zeros trimmed, ramification sequences are weakly increasing
//! inside a box. Conversion between them is always explicit, through
//! [`RamSeq::to_partition`] and [`RamSeq::from_partition`], never implicit.


use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CombinatError {
    #[error("parts must be weakly decreasing and nonnegative: {0:?}")]
    NotAPartition(Vec<i64>),
    #[error("sequence must satisfy 0 <= a_0 <= ... <= a_r <= {box_width}: {alpha:?}")]
    NotARamSeq { alpha: Vec<i64>, box_width: i64 },
    #[error("partition part {part} exceeds the number of variables {num_vars}")]
    PartTooLarge { part: u32, num_vars: usize },
}

/// A partition: weakly decreasing nonnegative parts, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        for w in parts.windows(2) {
            assert!(w[0] >= w[1], "parts must be weakly decreasing");
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The column shape `k^rows`, e.g. `rect(1, r)` is `1^r`.
    pub fn rect(part: u32, rows: usize) -> Self {
        Partition::new(vec![part; rows])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// Whether the shape fits in `rows` rows of width `width`.
    pub fn fits_in_box(&self, rows: usize, width: u32) -> bool {
        self.len() <= rows && self.part(0) <= width
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
    }
}

/// A Schubert index in the ramification-sequence convention:
/// `0 <= alpha_0 <= ... <= alpha_r <= box_width`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RamSeq {
    alpha: Vec<i64>,
    box_width: i64,
}

impl RamSeq {
    pub fn new(alpha: Vec<i64>, box_width: i64) -> Result<Self, CombinatError> {
        let ok = !alpha.is_empty()
            && alpha[0] >= 0
            && alpha.windows(2).all(|w| w[0] <= w[1])
            && *alpha.last().unwrap() <= box_width;
        if !ok {
            return Err(CombinatError::NotARamSeq { alpha, box_width });
        }
        Ok(RamSeq { alpha, box_width })
    }

    pub fn alpha(&self) -> &[i64] {
        &self.alpha
    }

    pub fn box_width(&self) -> i64 {
        self.box_width
    }

    /// Number of entries minus one (the `r` in `(alpha_0, ..., alpha_r)`).
    pub fn r(&self) -> usize {
        self.alpha.len() - 1
    }

    pub fn total(&self) -> i64 {
        self.alpha.iter().sum()
    }

    /// Bridge to the partition convention: the reversed sequence with zeros
    /// trimmed, so `(0,1,...,1)` becomes `1^r`.
    pub fn to_partition(&self) -> Partition {
        let parts: Vec<u32> = self.alpha.iter().rev().map(|&a| a as u32).collect();
        Partition::new(parts)
    }

    /// Inverse bridge given the sequence length and box width.
    pub fn from_partition(p: &Partition, r: usize, box_width: i64) -> Result<Self, CombinatError> {
        let mut alpha: Vec<i64> = (0..=r).rev().map(|i| p.part(i) as i64).collect();
        alpha.sort_unstable();
        if p.len() > r + 1 {
            return Err(CombinatError::NotARamSeq { alpha, box_width });
        }
        RamSeq::new(alpha, box_width)
    }
}

/// All weakly increasing sequences of the given length with
/// `lower[i] <= seq[i] <= upper` and exact sum `total`, in lexicographic
/// order. Infeasible constraints give an empty list.
pub fn enumerate_weakly_increasing(len: usize, lower: &[i64], upper: i64, total: i64) -> Vec<Vec<i64>> {
    assert_eq!(lower.len(), len);
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(
        pos: usize,
        len: usize,
        lower: &[i64],
        upper: i64,
        remaining: i64,
        cur: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if pos == len {
            if remaining == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let prev = cur.last().copied().unwrap_or(0);
        let lo = lower[pos].max(prev).max(0);
        // the remaining positions can contribute at most (len - pos - 1) * upper
        for v in lo..=upper {
            let rest = remaining - v;
            if rest < 0 {
                break;
            }
            if rest > (len - pos - 1) as i64 * upper {
                continue;
            }
            cur.push(v);
            rec(pos + 1, len, lower, upper, rest, cur, out);
            cur.pop();
        }
    }
    rec(0, len, lower, upper, total, &mut cur, &mut out);
    out
}

/// Enumeration of ramification sequences `(alpha_0, ..., alpha_r)` with a
/// common lower bound, upper bound `upper`, and exact sum `total`.
pub fn enumerate_ramseqs(r: usize, lower: i64, upper: i64, total: i64) -> Vec<RamSeq> {
    enumerate_weakly_increasing(r + 1, &vec![lower; r + 1], upper, total)
        .into_iter()
        .map(|alpha| RamSeq::new(alpha, upper).unwrap())
        .collect()
}

/// Variant with per-position lower bounds, which encodes sets like
/// "max{0, j-t} <= alpha_0" or a strict first step.
pub fn enumerate_ramseqs_bounded(lower: &[i64], upper: i64, total: i64) -> Vec<RamSeq> {
    enumerate_weakly_increasing(lower.len(), lower, upper, total)
        .into_iter()
        .map(|alpha| RamSeq::new(alpha, upper).unwrap())
        .collect()
}

/// A monomial exponent vector, one entry per variable.
pub type Exponents = Vec<u32>;

/// Expands `e_{lambda_1} * e_{lambda_2} * ...` in `num_vars` variables into
/// monomials. The coefficient of `x^mu` is the number of 0/1 matrices with
/// row sums `lambda` and column sums `mu`.
pub fn elementary_to_monomials(
    lambda: &Partition,
    num_vars: usize,
) -> Result<BTreeMap<Exponents, BigInt>, CombinatError> {
    for &p in lambda.parts() {
        if p as usize > num_vars {
            return Err(CombinatError::PartTooLarge { part: p, num_vars });
        }
    }
    let mut acc: BTreeMap<Exponents, BigInt> = BTreeMap::new();
    acc.insert(vec![0; num_vars], BigInt::one());
    for &k in lambda.parts() {
        let mut next: BTreeMap<Exponents, BigInt> = BTreeMap::new();
        let subsets = k_subsets(num_vars, k as usize);
        for (expo, coeff) in &acc {
            for subset in &subsets {
                let mut e = expo.clone();
                for &i in subset {
                    e[i] += 1;
                }
                *next.entry(e).or_insert_with(BigInt::zero) += coeff;
            }
        }
        acc = next;
    }
    Ok(acc)
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
