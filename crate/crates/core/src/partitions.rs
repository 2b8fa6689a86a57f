//! Partitions, multi-indices and the small amount of combinatorics built on
//! them: conjugation, arm and leg lengths, dominance, enumeration.

use core::fmt;
use core::str::FromStr;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::ComboError;

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// implicit and never stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Validates and strips trailing zeros.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, ComboError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(ComboError::NotAPartition(join(&parts)));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// `λ_i` with 0-based `i`, zero past the length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Number of positive parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        Partition(
            (1..=first)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
                .collect(),
        )
    }

    /// `(m, λ_1, λ_2, ...)`, defined when `m >= λ_1`.
    pub fn prepend_row(&self, m: u32) -> Result<Partition, ComboError> {
        let first = self.part(0);
        if m < first {
            return Err(ComboError::RowTooShort { m, first });
        }
        let mut parts = vec![m];
        parts.extend_from_slice(&self.0);
        Partition::new(parts)
    }

    /// Arm and leg of the cell in 1-based `(row, col)`.
    pub fn arm_leg(&self, row: usize, col: usize) -> Result<(u32, u32), ComboError> {
        if row == 0 || col == 0 || row > self.len() || col as u32 > self.part(row - 1) {
            return Err(ComboError::CellOutside { row, col });
        }
        let arm = self.part(row - 1) - col as u32;
        let leg = self.conjugate().part(col - 1) - row as u32;
        Ok((arm, leg))
    }

    /// `(arm, leg)` of every cell, row by row.
    pub fn hooks(&self) -> Vec<(u32, u32)> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.weight() as usize);
        for (i, &p) in self.0.iter().enumerate() {
            for j in 0..p as usize {
                out.push((p - 1 - j as u32, conj.part(j) - 1 - i as u32));
            }
        }
        out
    }

    /// Dominance `self >= other`; false for different weights.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.weight() != other.weight() {
            return false;
        }
        let (mut a, mut b) = (0u32, 0u32);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// `λ - (1^m)`: removes the first column of height `m`.
    pub fn remove_column(&self, m: usize) -> Option<Partition> {
        if self.len() != m {
            return None;
        }
        Partition::new(self.0.iter().map(|p| p - 1).collect()).ok()
    }

    /// The parts padded with zeros to length `n`.
    pub fn to_multi_index(&self, n: usize) -> Option<MultiIndex> {
        if self.len() > n {
            return None;
        }
        Some(MultiIndex((0..n).map(|i| self.part(i)).collect()))
    }
}

fn join(parts: &[u32]) -> String {
    let mut s = String::new();
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(&format!("{p}"));
    }
    s
}

fn parse_list(s: &str) -> Result<Vec<u32>, ComboError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|_| ComboError::Parse(s.into())))
        .collect()
}

/// Comma-joined parts; the empty partition prints as the empty string.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.0))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.0))
    }
}

/// Accepts `"2,1"`, and `""` or `"0"` for the empty partition.
impl FromStr for Partition {
    type Err = ComboError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Partition::new(parse_list(s)?)
    }
}

/// `α ∈ N^n`, ordered componentwise for [`MultiIndex::leq`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Self {
        MultiIndex(entries)
    }

    pub fn zero(n: usize) -> Self {
        MultiIndex(vec![0; n])
    }

    /// The 0/1 indicator of a subset of `0..n`.
    pub fn indicator(n: usize, set: &[usize]) -> Self {
        let mut v = vec![0; n];
        for &i in set {
            v[i] = 1;
        }
        MultiIndex(v)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn leq(&self, other: &MultiIndex) -> Result<bool, ComboError> {
        if self.len() != other.len() {
            return Err(ComboError::LengthMismatch(self.len(), other.len()));
        }
        Ok(self.0.iter().zip(&other.0).all(|(a, b)| a <= b))
    }

    /// Componentwise `≤` for indices already known to have equal length.
    pub fn is_below(&self, other: &MultiIndex) -> bool {
        self.leq(other).unwrap_or(false)
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other`, defined when `other ≤ self`.
    pub fn sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        if !other.is_below(self) {
            return None;
        }
        Some(MultiIndex(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    /// `(σα)_{σ(i)} = α_i`.
    pub fn permute(&self, sigma: &[usize]) -> MultiIndex {
        let mut out = vec![0; self.len()];
        for (i, &a) in self.0.iter().enumerate() {
            out[sigma[i]] = a;
        }
        MultiIndex(out)
    }

    /// All `β ≤ self`, largest first in reverse-lex order.
    pub fn below(&self) -> Vec<MultiIndex> {
        let mut out = vec![MultiIndex(Vec::with_capacity(self.len()))];
        for &a in &self.0 {
            let mut next = Vec::with_capacity(out.len() * (a as usize + 1));
            for prefix in &out {
                for v in (0..=a).rev() {
                    let mut p = prefix.clone();
                    p.0.push(v);
                    next.push(p);
                }
            }
            out = next;
        }
        out
    }

    /// The entries sorted decreasingly.
    pub fn sorted_partition(&self) -> Partition {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).expect("sorted entries form a partition")
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.0))
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.0))
    }
}

impl FromStr for MultiIndex {
    type Err = ComboError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(MultiIndex(parse_list(s)?))
    }
}

pub fn conjugate(lam: &Partition) -> Partition {
    lam.conjugate()
}

pub fn prepend_row(m: u32, lam: &Partition) -> Result<Partition, ComboError> {
    lam.prepend_row(m)
}

pub fn arm_leg(lam: &Partition, cell: (usize, usize)) -> Result<(u32, u32), ComboError> {
    lam.arm_leg(cell.0, cell.1)
}

pub fn mi_leq(a: &MultiIndex, b: &MultiIndex) -> Result<bool, ComboError> {
    a.leq(b)
}

/// Partitions of `d` with at most `max_len` parts, each at most `max_part`,
/// in decreasing lexicographic order.
pub fn partitions_bounded(d: u32, max_len: usize, max_part: u32) -> Vec<Partition> {
    fn rec(left: u32, cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=cap.min(left)).rev() {
            cur.push(p);
            rec(left - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `d` with at most `n` parts, decreasing lexicographically.
pub fn partitions_of(d: u32, n: usize) -> Vec<Partition> {
    partitions_bounded(d, n, d)
}

/// Partitions of `d` with at most `n` parts, listed bottom-up in a linear
/// extension of dominance.
///
/// Increasing lexicographic order refines dominance (if `λ > μ` then `λ` is
/// lexicographically larger), so it is used directly; it also breaks ties
/// between incomparable partitions reproducibly.
pub fn dominance_order_list(d: u32, n: usize) -> Vec<Partition> {
    let mut v = partitions_of(d, n);
    v.reverse();
    v
}

/// All `α ∈ N^n` with `|α| = m`, starting from `(m, 0, ..., 0)`.
pub fn multi_indices_of_weight(m: u32, n: usize) -> Vec<MultiIndex> {
    fn rec(left: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
        if slots == 1 {
            cur.push(left);
            out.push(MultiIndex(cur.clone()));
            cur.pop();
            return;
        }
        for v in (0..=left).rev() {
            cur.push(v);
            rec(left - v, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if m == 0 {
            out.push(MultiIndex(Vec::new()));
        }
        return out;
    }
    rec(m, n, &mut Vec::new(), &mut out);
    out
}

/// Permutations of `0..n` in lexicographic order, each with its sign.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i32)> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| cur[i] > cur[j])
            .count();
        out.push((cur.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
        // next permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("successor");
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// Subsets of `0..n` as sorted index lists, by size then lexicographically.
pub fn subsets(n: usize) -> Vec<Vec<usize>> {
    let mut all: Vec<Vec<usize>> = (0u32..1 << n)
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
        .collect();
    all.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    all
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn mi(s: &str) -> MultiIndex {
        s.parse().unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("2,1").conjugate(), p("2,1"));
        assert_eq!(p("3").conjugate(), p("1,1,1"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn prepending_rows() {
        assert_eq!(p("2,1").prepend_row(2).unwrap(), p("2,2,1"));
        assert_eq!(Partition::empty().prepend_row(3).unwrap(), p("3"));
        assert_eq!(
            p("2").prepend_row(1).unwrap_err(),
            ComboError::RowTooShort { m: 1, first: 2 }
        );
    }

    #[test]
    fn arms_and_legs() {
        assert_eq!(p("1").arm_leg(1, 1).unwrap(), (0, 0));
        assert_eq!(p("2,1").arm_leg(1, 1).unwrap(), (1, 1));
        assert_eq!(p("3").arm_leg(1, 2).unwrap(), (1, 0));
        assert!(p("2,1").arm_leg(2, 2).is_err());
        assert_eq!(p("2,1").hooks(), vec![(1, 1), (0, 0), (0, 0)]);
    }

    #[test]
    fn dominance_lists() {
        assert_eq!(dominance_order_list(2, 2), vec![p("1,1"), p("2")]);
        assert_eq!(dominance_order_list(0, 3), vec![Partition::empty()]);
        assert_eq!(dominance_order_list(3, 3), vec![p("1,1,1"), p("2,1"), p("3")]);
        assert_eq!(dominance_order_list(3, 2), vec![p("2,1"), p("3")]);
    }

    #[test]
    fn multi_index_enumeration() {
        assert_eq!(multi_indices_of_weight(1, 2), vec![mi("1,0"), mi("0,1")]);
        assert_eq!(
            multi_indices_of_weight(2, 2),
            vec![mi("2,0"), mi("1,1"), mi("0,2")]
        );
        assert_eq!(multi_indices_of_weight(0, 3), vec![mi("0,0,0")]);
    }

    #[test]
    fn multi_index_order() {
        assert!(mi_leq(&mi("1,0"), &mi("2,1")).unwrap());
        assert!(!mi_leq(&mi("2,0"), &mi("1,1")).unwrap());
        assert!(mi_leq(&mi("1,1"), &mi("1,1")).unwrap());
        assert!(mi_leq(&mi("1"), &mi("1,1")).is_err());
        assert_eq!(mi("1,1").below(), vec![mi("1,1"), mi("1,0"), mi("0,1"), mi("0,0")]);
    }

    #[test]
    fn parsing_and_printing() {
        assert_eq!(p(""), Partition::empty());
        assert_eq!(p("0"), Partition::empty());
        assert_eq!(p("2,2,1").to_string(), "2,2,1");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    #[test]
    fn permutation_signs() {
        let perms = permutations(3);
        assert_eq!(perms.len(), 6);
        assert_eq!(perms.iter().map(|(_, s)| s).sum::<i32>(), 0);
        assert_eq!(perms[1], (vec![0, 2, 1], -1));
    }

    fn binom(n: u64, k: u64) -> u64 {
        (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
    }

    proptest! {
        #[test]
        fn conjugation_is_an_involution(d in 0u32..=8) {
            for lam in partitions_of(d, d as usize) {
                prop_assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }

        #[test]
        fn weight_enumeration_counts(m in 0u32..=6, n in 1usize..=6) {
            let count = multi_indices_of_weight(m, n).len() as u64;
            prop_assert_eq!(count, binom(m as u64 + n as u64 - 1, n as u64 - 1));
        }

        #[test]
        fn dominance_list_is_a_linear_extension(d in 0u32..=8, n in 1usize..=8) {
            let list = dominance_order_list(d, n);
            for (i, a) in list.iter().enumerate() {
                for b in &list[i + 1..] {
                    prop_assert!(!(a.dominates(b) && a != b));
                }
            }
        }
    }

    #[test]
    fn leq_is_a_partial_order() {
        let all: Vec<MultiIndex> = (0..=3).flat_map(|m| multi_indices_of_weight(m, 2)).collect();
        for a in &all {
            assert!(a.is_below(a));
            for b in &all {
                if a.is_below(b) && b.is_below(a) {
                    assert_eq!(a, b);
                }
                for c in &all {
                    if a.is_below(b) && b.is_below(c) {
                        assert!(a.is_below(c));
                    }
                }
            }
        }
    }
}
