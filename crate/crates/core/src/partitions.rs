//! Partitions, finite `gl_N` weights and half-infinite weights.
//!
//! Slots of the infinite weight lattice are indexed by integers. The left
//! block `gl^(1)` occupies the indices `<= 0` and the right block `gl^(2)`
//! the indices `>= 1`, so the block boundary sits between slot 0 and slot 1.
//! Half-infinite weights are stored canonically as a sign plus a partition,
//! which makes padding by zeros a no-op.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers (trailing zeros trimmed).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition from rows, trimming trailing zeros.
    pub fn new<I>(rows: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<i64>,
    {
        let raw: Vec<i64> = rows.into_iter().map(Into::into).collect();
        if raw.iter().any(|&r| r < 0 || r > u32::MAX as i64) || raw.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(raw));
        }
        let mut rows: Vec<u32> = raw.into_iter().map(|r| r as u32).collect();
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Ok(Partition(rows))
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_parts(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn rows(&self) -> &[u32] {
        &self.0
    }

    /// Row `i` (0-based), zero past the end.
    pub fn row(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.row(0) as usize;
        let cols = (0..width)
            .map(|c| self.0.iter().filter(|&&r| r as usize > c).count() as u32)
            .collect();
        Partition(cols)
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Dominance order on partitions of the same size.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0u32, 0u32);
        (0..n).all(|i| {
            a += self.row(i);
            b += other.row(i);
            a >= b
        })
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: u32) -> Vec<Partition> {
        Self::all_of_size_bounded(n, usize::MAX)
    }

    /// All partitions of `n` with at most `max_len` rows.
    pub fn all_of_size_bounded(n: u32, max_len: usize) -> Vec<Partition> {
        fn go(rest: u32, cap: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if cur.len() == max_len {
                return;
            }
            for part in (1..=cap.min(rest)).rev() {
                cur.push(part);
                go(rest - part, part, max_len, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, max_len, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of size at most `n`.
    pub fn all_up_to(n: u32) -> Vec<Partition> {
        (0..=n).flat_map(Self::all_of_size).collect()
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;

    fn try_from(rows: Vec<i64>) -> Result<Self> {
        Partition::new(rows)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    write!(f, "[")?;
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, "]")
}

fn parse_list(s: &str) -> Result<Vec<i64>> {
    let s = s.trim();
    let inner = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected a bracketed list, got {s:?}")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("bad entry {t:?} in {s:?}: {e}")))
        })
        .collect()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_list(s)?)
    }
}

/// Exponents `(l_1, ..., l_n)` of a product `Det_1^{l_1} ... Det_n^{l_n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColumnLengths(Vec<u32>);

impl ColumnLengths {
    pub fn new(l: Vec<u32>) -> Self {
        ColumnLengths(l)
    }

    /// Inverse of [`fig2_partition`]: row differences of `p`, padded to rank `n`.
    pub fn from_partition(p: &Partition, n: usize) -> Result<Self> {
        if p.len() > n {
            return Err(Error::RankExceeded { k: p.len(), n });
        }
        Ok(ColumnLengths((0..n).map(|i| p.row(i) - p.row(i + 1)).collect()))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Polynomial degree `sum k * l_k` of the Det monomial.
    pub fn degree(&self) -> u32 {
        self.0.iter().enumerate().map(|(i, &l)| (i as u32 + 1) * l).sum()
    }

    /// All exponent vectors of rank `n` with `sum k * l_k = d`.
    pub fn all_of_degree(n: usize, d: u32) -> Vec<ColumnLengths> {
        fn go(k: usize, n: usize, rest: u32, cur: &mut Vec<u32>, out: &mut Vec<ColumnLengths>) {
            if k > n {
                if rest == 0 {
                    out.push(ColumnLengths(cur.clone()));
                }
                return;
            }
            for l in 0..=rest / k as u32 {
                cur.push(l);
                go(k + 1, n, rest - l * k as u32, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(1, n, d, &mut Vec::new(), &mut out);
        out
    }
}

/// The Young diagram of `Det_1^{l_1} ... Det_n^{l_n}`: rows `(l_1+...+l_n, l_2+...+l_n, ..., l_n)`.
pub fn fig2_partition(l: &ColumnLengths) -> Partition {
    let mut rows: Vec<u32> = l
        .0
        .iter()
        .rev()
        .scan(0u32, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect();
    rows.reverse();
    Partition::from_parts(rows)
}

/// An integral `gl_N` weight; the rank is the length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FiniteWeight(Vec<i64>);

impl FiniteWeight {
    pub fn new(entries: Vec<i64>) -> Self {
        FiniteWeight(entries)
    }

    pub fn zero(n: usize) -> Self {
        FiniteWeight(vec![0; n])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn nonzero_count(&self) -> usize {
        self.0.iter().filter(|&&x| x != 0).count()
    }

    pub fn shifted(&self, by: i64) -> FiniteWeight {
        FiniteWeight(self.0.iter().map(|x| x + by).collect())
    }

    /// Reassembles a dominant rank-`n` weight from its two half-infinite parts:
    /// the positive body in the first slots, the negative body in the last ones.
    pub fn assemble(minus: &HalfInfiniteWeight, plus: &HalfInfiniteWeight, n: usize) -> Result<Self> {
        minus.expect_kind(Sign::Negative)?;
        plus.expect_kind(Sign::Positive)?;
        let (p, m) = (plus.body.len(), minus.body.len());
        if p + m > n {
            return Err(Error::RankTooSmall { n, min: p + m });
        }
        let mut entries = vec![0i64; n];
        for (i, &r) in plus.body.rows().iter().enumerate() {
            entries[i] = r as i64;
        }
        for (i, &r) in minus.body.rows().iter().enumerate() {
            entries[n - 1 - i] = -(r as i64);
        }
        Ok(FiniteWeight(entries))
    }

    /// Pads a dominant weight to rank `n` by inserting zeros between its
    /// positive head and negative tail.
    pub fn pad_to(&self, n: usize) -> Result<Self> {
        let (minus, plus) = split_weight(self)?;
        FiniteWeight::assemble(&minus, &plus, n)
    }
}

impl fmt::Display for FiniteWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl FromStr for FiniteWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(FiniteWeight(parse_list(s)?))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

impl Sign {
    fn name(self) -> &'static str {
        match self {
            Sign::Positive => "positive-type",
            Sign::Negative => "negative-type",
        }
    }
}

/// A finitely supported weight of a one-sided infinite block.
///
/// Positive-type with body `(a_1, ..., a_k)` is `(a_1, ..., a_k, 0, 0, ...)`
/// on slots `1, 2, ...`; negative-type is `(..., 0, 0, -a_k, ..., -a_1)` on
/// slots `..., -1, 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HalfInfiniteWeight {
    pub kind: Sign,
    pub body: Partition,
}

impl HalfInfiniteWeight {
    pub fn positive(body: Partition) -> Self {
        HalfInfiniteWeight { kind: Sign::Positive, body }
    }

    pub fn negative(body: Partition) -> Self {
        HalfInfiniteWeight { kind: Sign::Negative, body }
    }

    pub fn zero(kind: Sign) -> Self {
        HalfInfiniteWeight { kind, body: Partition::empty() }
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_empty()
    }

    /// Parses the trailing entries `(..., 0, -a_k, ..., -a_1)` of a negative-type weight.
    pub fn from_tail(tail: &[i64]) -> Result<Self> {
        let body: Vec<i64> = tail.iter().rev().map(|x| -x).collect();
        Ok(Self::negative(Partition::new(body)?))
    }

    /// Parses the leading entries `(a_1, ..., a_k, 0, ...)` of a positive-type weight.
    pub fn from_head(head: &[i64]) -> Result<Self> {
        Ok(Self::positive(Partition::new(head.to_vec())?))
    }

    /// Value on `E_{ii}` in the integer slot convention.
    pub fn value_at(&self, index: i32) -> i64 {
        match self.kind {
            Sign::Positive if index >= 1 => self.body.row(index as usize - 1) as i64,
            Sign::Negative if index <= 0 => -(self.body.row((-index) as usize) as i64),
            _ => 0,
        }
    }

    /// The nonzero slots as `(index, value)` pairs.
    pub fn support(&self) -> Vec<(i32, i64)> {
        (0..self.body.len())
            .map(|i| match self.kind {
                Sign::Positive => (i as i32 + 1, self.body.row(i) as i64),
                Sign::Negative => (-(i as i32), -(self.body.row(i) as i64)),
            })
            .collect()
    }

    pub(crate) fn expect_kind(&self, kind: Sign) -> Result<()> {
        if self.kind == kind || self.is_zero() {
            Ok(())
        } else {
            Err(Error::WrongKind { expected: kind.name(), found: self.to_string() })
        }
    }
}

impl fmt::Display for HalfInfiniteWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Sign::Positive => {
                for r in self.body.rows() {
                    write!(f, "{r},")?;
                }
                write!(f, "0,...")
            }
            Sign::Negative => {
                write!(f, "...,0")?;
                for r in self.body.rows().iter().rev() {
                    write!(f, ",-{r}")?;
                }
                Ok(())
            }
        }
    }
}

/// `(D_-, D_+)`: the weights of `Det_1^{l_1} ... Det_n^{l_n}` on the two blocks.
pub fn theta_weight_pair(l: &ColumnLengths) -> (HalfInfiniteWeight, HalfInfiniteWeight) {
    let body = fig2_partition(l);
    (HalfInfiniteWeight::negative(body.clone()), HalfInfiniteWeight::positive(body))
}

pub fn weight_to_partition(w: &HalfInfiniteWeight) -> Partition {
    w.body.clone()
}

/// Splits a dominant `gl_N` weight into `(Λ_-(ν), Λ_+(ν))`.
pub fn split_weight(nu: &FiniteWeight) -> Result<(HalfInfiniteWeight, HalfInfiniteWeight)> {
    if !nu.is_dominant() {
        return Err(Error::NotDominant(nu.to_string()));
    }
    let e = nu.entries();
    let p = e.iter().take_while(|&&x| x > 0).count();
    let head = &e[..p];
    let tail: Vec<i64> = e[p..].iter().copied().filter(|&x| x < 0).collect();
    Ok((HalfInfiniteWeight::from_tail(&tail)?, HalfInfiniteWeight::from_head(head)?))
}

/// A weight of the infinite algebra whose restrictions to both blocks are dominant.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SemidominantWeight {
    pub chi1: HalfInfiniteWeight,
    pub chi2: HalfInfiniteWeight,
    /// `χ(E_00 - E_11)`; derived from the two blocks.
    pub chi_centr: i64,
}

impl SemidominantWeight {
    pub fn new(chi1: HalfInfiniteWeight, chi2: HalfInfiniteWeight) -> Result<Self> {
        chi1.expect_kind(Sign::Negative)?;
        chi2.expect_kind(Sign::Positive)?;
        let chi1 = HalfInfiniteWeight::negative(chi1.body);
        let chi2 = HalfInfiniteWeight::positive(chi2.body);
        let chi_centr = chi1.value_at(0) - chi2.value_at(1);
        Ok(SemidominantWeight { chi1, chi2, chi_centr })
    }

    pub fn zero() -> Self {
        SemidominantWeight {
            chi1: HalfInfiniteWeight::zero(Sign::Negative),
            chi2: HalfInfiniteWeight::zero(Sign::Positive),
            chi_centr: 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.chi1.is_zero() && self.chi2.is_zero()
    }

    pub fn value_at(&self, index: i32) -> i64 {
        if index <= 0 {
            self.chi1.value_at(index)
        } else {
            self.chi2.value_at(index)
        }
    }

    /// Indices carrying a nonzero value.
    pub fn support(&self) -> Vec<i32> {
        self.chi1.support().into_iter().chain(self.chi2.support()).map(|(i, _)| i).collect()
    }
}

impl fmt::Display for SemidominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {})", self.chi1, self.chi2)
    }
}
