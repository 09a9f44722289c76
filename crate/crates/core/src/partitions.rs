//! Non-crossing pair partitions of `[2n]`, their nesting forests, and counts
//! of weakly monotone labelings.
//!
//! Positions are 1-based throughout to match the usual `(l, r)` block
//! notation. A sign string uses `-1` for an opening position (annihilator)
//! and `+1` for a closing one (creator), so `(-1, +1)` is the single block
//! `{(1, 2)}`.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

/// Default largest `n` for which `NC_2(2n)` is enumerated.
pub const DEFAULT_ENUMERATION_BOUND: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("n = {n} exceeds the enumeration bound {bound}")]
    SizeExceeded { n: usize, bound: usize },
    #[error("sign string entry {index} is {value}, expected -1 or +1")]
    BadSign { index: usize, value: i8 },
    #[error("sign string has odd length {0}")]
    OddLength(usize),
    #[error("sign string does not sum to zero (sum {0})")]
    NonZeroSum(i64),
    #[error("suffix starting at position {0} has negative sum")]
    NegativeSuffix(usize),
    #[error("invalid pair partition: {0}")]
    InvalidPartition(String),
    #[error("blocks ({0}, {1}) and ({2}, {3}) cross")]
    Crossing(usize, usize, usize, usize),
}

/// Enumeration limit shared by every routine that walks `NC_2(2n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBound(pub usize);

impl Default for EnumerationBound {
    fn default() -> Self {
        Self(DEFAULT_ENUMERATION_BOUND)
    }
}

impl EnumerationBound {
    pub fn check(self, n: usize) -> Result<(), PartitionError> {
        if n > self.0 {
            Err(PartitionError::SizeExceeded { n, bound: self.0 })
        } else {
            Ok(())
        }
    }
}

/// A validated member of `{-1, 1}^{2n}_+`: zero total and every suffix
/// sum nonnegative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SignString(Vec<i8>);

impl SignString {
    pub fn new(entries: Vec<i8>) -> Result<Self, PartitionError> {
        if let Some((index, &value)) = entries.iter().enumerate().find(|(_, &v)| v != 1 && v != -1) {
            return Err(PartitionError::BadSign { index: index + 1, value });
        }
        if entries.len() % 2 != 0 {
            return Err(PartitionError::OddLength(entries.len()));
        }
        let total: i64 = entries.iter().map(|&e| e as i64).sum();
        if total != 0 {
            return Err(PartitionError::NonZeroSum(total));
        }
        let mut suffix = 0i64;
        for (h, &e) in entries.iter().enumerate().rev() {
            suffix += e as i64;
            if suffix < 0 {
                return Err(PartitionError::NegativeSuffix(h + 1));
            }
        }
        Ok(Self(entries))
    }

    pub fn entries(&self) -> &[i8] {
        &self.0
    }

    /// Number of blocks, `n` for a string of length `2n`.
    pub fn half_len(&self) -> usize {
        self.0.len() / 2
    }

    /// Stack matching: each `+1` closes the most recent unmatched `-1`.
    pub fn to_partition(&self) -> PairPartition {
        let mut open = Vec::new();
        let mut pairs = Vec::with_capacity(self.half_len());
        for (pos, &e) in self.0.iter().enumerate() {
            if e == -1 {
                open.push(pos + 1);
            } else {
                let l = open.pop().expect("validated sign string");
                pairs.push((l, pos + 1));
            }
        }
        pairs.sort_unstable();
        PairPartition { pairs }
    }
}

/// Converts a sign string into its non-crossing pairing.
pub fn sign_string_to_partition(entries: &[i8]) -> Result<PairPartition, PartitionError> {
    Ok(SignString::new(entries.to_vec())?.to_partition())
}

/// A non-crossing pair partition of `[2n]`, blocks sorted by left endpoint.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PairPartition {
    pairs: Vec<(usize, usize)>,
}

impl PairPartition {
    /// Validates coverage of `[2n]`, `l < r` and the non-crossing condition.
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Result<Self, PartitionError> {
        pairs.sort_unstable();
        let size = 2 * pairs.len();
        let mut seen = vec![false; size + 1];
        for &(l, r) in &pairs {
            if l >= r {
                return Err(PartitionError::InvalidPartition(format!("block ({l}, {r}) has l >= r")));
            }
            for p in [l, r] {
                if p == 0 || p > size {
                    return Err(PartitionError::InvalidPartition(format!("position {p} outside [1, {size}]")));
                }
                if std::mem::replace(&mut seen[p], true) {
                    return Err(PartitionError::InvalidPartition(format!("position {p} covered twice")));
                }
            }
        }
        for (a, &(li, ri)) in pairs.iter().enumerate() {
            for &(lj, rj) in &pairs[a + 1..] {
                if li < lj && lj < ri && ri < rj {
                    return Err(PartitionError::Crossing(li, ri, lj, rj));
                }
            }
        }
        Ok(Self { pairs })
    }

    /// The interval partition `{(1,2), (3,4), ..., (2n-1, 2n)}`.
    pub fn interval(n: usize) -> Self {
        Self { pairs: (0..n).map(|h| (2 * h + 1, 2 * h + 2)).collect() }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn num_blocks(&self) -> usize {
        self.pairs.len()
    }

    pub fn to_sign_string(&self) -> SignString {
        let mut entries = vec![0i8; 2 * self.pairs.len()];
        for &(l, r) in &self.pairs {
            entries[l - 1] = -1;
            entries[r - 1] = 1;
        }
        SignString(entries)
    }

    /// `B_i ≼ B_j`: block `j` lies inside block `i` (or equals it).
    pub fn encloses(&self, i: usize, j: usize) -> bool {
        let (li, ri) = self.pairs[i];
        let (lj, rj) = self.pairs[j];
        li <= lj && rj <= ri
    }
}

/// Immediate-enclosure structure of a non-crossing partition's blocks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NestingForest {
    pub parent: Vec<Option<usize>>,
    pub children: Vec<Vec<usize>>,
    pub roots: Vec<usize>,
}

impl NestingForest {
    /// Blocks in an order where every child precedes its parent.
    pub fn post_order(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.parent.len());
        let mut stack: Vec<(usize, bool)> = self.roots.iter().rev().map(|&r| (r, false)).collect();
        while let Some((b, expanded)) = stack.pop() {
            if expanded {
                out.push(b);
            } else {
                stack.push((b, true));
                stack.extend(self.children[b].iter().rev().map(|&c| (c, false)));
            }
        }
        out
    }
}

/// Builds the forest whose parent links point to the tightest enclosing block.
pub fn nesting_forest(pi: &PairPartition) -> NestingForest {
    let n = pi.num_blocks();
    let mut parent = vec![None; n];
    let mut children = vec![Vec::new(); n];
    let mut roots = Vec::new();
    // Blocks sorted by left endpoint; the open-block stack gives the nesting.
    let mut stack: Vec<usize> = Vec::new();
    for (b, &(l, _)) in pi.pairs.iter().enumerate() {
        while let Some(&top) = stack.last() {
            if pi.pairs[top].1 < l {
                stack.pop();
            } else {
                break;
            }
        }
        match stack.last() {
            Some(&p) => {
                parent[b] = Some(p);
                children[p].push(b);
            }
            None => roots.push(b),
        }
        stack.push(b);
    }
    NestingForest { parent, children, roots }
}

/// All of `NC_2(2n)` in lexicographic order of their sign strings (`-1 < +1`).
pub fn enumerate_nc2(n: usize, bound: EnumerationBound) -> Result<Vec<PairPartition>, PartitionError> {
    bound.check(n)?;
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(2 * n);
    fill_ballot(n, 0, 0, &mut buf, &mut out);
    Ok(out)
}

fn fill_ballot(n: usize, opened: usize, closed: usize, buf: &mut Vec<i8>, out: &mut Vec<PairPartition>) {
    if closed == n {
        out.push(SignString(buf.clone()).to_partition());
        return;
    }
    if opened < n {
        buf.push(-1);
        fill_ballot(n, opened + 1, closed, buf, out);
        buf.pop();
    }
    if closed < opened {
        buf.push(1);
        fill_ballot(n, opened, closed + 1, buf, out);
        buf.pop();
    }
}

/// Labelings `L: blocks -> [m]` with `L(outer) <= L(inner)`, counted by a
/// bottom-up pass over the nesting forest.
///
/// For each block `B` and threshold `lo`, `count(B, lo)` is the number of
/// labelings of the subtree at `B` with every label `>= lo`; it is the suffix
/// sum over `ℓ >= lo` of the product of the children's `count(C, ℓ)`.
pub fn count_weakly_monotone_labelings(pi: &PairPartition, m: usize) -> BigUint {
    if m == 0 {
        return if pi.num_blocks() == 0 { BigUint::one() } else { BigUint::zero() };
    }
    let forest = nesting_forest(pi);
    // at_least[b][lo - 1] = count(b, lo)
    let mut at_least: Vec<Vec<BigUint>> = vec![Vec::new(); pi.num_blocks()];
    for b in forest.post_order() {
        let mut suffix = vec![BigUint::zero(); m + 1];
        for label in (1..=m).rev() {
            let here = forest.children[b].iter().fold(BigUint::one(), |acc, &c| acc * &at_least[c][label - 1]);
            suffix[label - 1] = &suffix[label] + here;
        }
        suffix.truncate(m);
        at_least[b] = suffix;
    }
    forest.roots.iter().fold(BigUint::one(), |acc, &r| acc * &at_least[r][0])
}

/// Exhaustive oracle for [`count_weakly_monotone_labelings`]: tries all
/// `m^n` label maps. Only meant for tiny inputs.
pub fn count_weakly_monotone_labelings_exhaustive(pi: &PairPartition, m: usize) -> BigUint {
    let n = pi.num_blocks();
    if n == 0 {
        return BigUint::one();
    }
    if m == 0 {
        return BigUint::zero();
    }
    let relations: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| i != j && pi.encloses(i, j)).collect();
    let mut labels = vec![1usize; n];
    let mut count = BigUint::zero();
    loop {
        if relations.iter().all(|&(i, j)| labels[i] <= labels[j]) {
            count += 1u32;
        }
        // odometer increment
        let mut pos = 0;
        loop {
            if pos == n {
                return count;
            }
            if labels[pos] < m {
                labels[pos] += 1;
                break;
            }
            labels[pos] = 1;
            pos += 1;
        }
    }
}

/// `|NC_2WMO([m], 2n)|`, the number of weakly monotone labeled non-crossing
/// pair partitions of `[2n]` with labels in `[m]`.
pub fn count_nc2wmo(m: usize, n: usize, bound: EnumerationBound) -> Result<BigUint, PartitionError> {
    let partitions = enumerate_nc2(n, bound)?;
    Ok(partitions.par_iter().map(|pi| count_weakly_monotone_labelings(pi, m)).reduce(BigUint::zero, |a, b| a + b))
}

/// Same count via exhaustive labelings; oracle for [`count_nc2wmo`].
pub fn count_nc2wmo_exhaustive(m: usize, n: usize, bound: EnumerationBound) -> Result<BigUint, PartitionError> {
    Ok(enumerate_nc2(n, bound)?.iter().map(|pi| count_weakly_monotone_labelings_exhaustive(pi, m)).sum())
}

/// Catalan number `binom(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> BigUint {
    let mut binom = BigUint::one();
    for k in 0..n {
        binom = binom * BigUint::from(2 * n - k) / BigUint::from(k + 1);
    }
    binom / BigUint::from(n + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn pp(pairs: &[(usize, usize)]) -> PairPartition {
        PairPartition::new(pairs.to_vec()).unwrap()
    }

    /// Every pairing of `[2n]` (crossing or not), by brute force.
    fn all_pairings(n: usize) -> Vec<Vec<(usize, usize)>> {
        fn go(free: Vec<usize>, acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
            if free.is_empty() {
                out.push(acc.clone());
                return;
            }
            let first = free[0];
            for k in 1..free.len() {
                let rest: Vec<usize> =
                    free.iter().enumerate().filter(|&(i, _)| i != 0 && i != k).map(|(_, &v)| v).collect();
                acc.push((first, free[k]));
                go(rest, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go((1..=2 * n).collect(), &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn catalan_values() {
        assert_eq!(catalan(0), BigUint::one());
        // binom(10, 5) / 6 = 252 / 6
        assert_eq!(catalan(5), BigUint::from(42u32));
        assert_eq!(catalan(8), BigUint::from(1430u32));
    }

    #[test]
    fn enumeration_counts() {
        let b = EnumerationBound::default();
        assert_eq!(enumerate_nc2(1, b).unwrap(), vec![pp(&[(1, 2)])]);
        assert_eq!(enumerate_nc2(3, b).unwrap().len(), 5);
        assert_eq!(BigUint::from(enumerate_nc2(6, b).unwrap().len()), catalan(6));
        assert_eq!(enumerate_nc2(0, b).unwrap().len(), 1);
    }

    #[test]
    fn enumeration_matches_brute_force_filter() {
        for n in 1..=5 {
            let brute: BTreeSet<PairPartition> =
                all_pairings(n).into_iter().filter_map(|p| PairPartition::new(p).ok()).collect();
            let listed = enumerate_nc2(n, EnumerationBound::default()).unwrap();
            let as_set: BTreeSet<PairPartition> = listed.iter().cloned().collect();
            assert_eq!(as_set.len(), listed.len(), "duplicates at n={n}");
            assert_eq!(as_set, brute);
        }
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let listed = enumerate_nc2(5, EnumerationBound::default()).unwrap();
        let strings: Vec<_> = listed.iter().map(PairPartition::to_sign_string).collect();
        assert!(strings.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn bound_is_enforced() {
        let err = enumerate_nc2(4, EnumerationBound(3)).unwrap_err();
        assert_eq!(err, PartitionError::SizeExceeded { n: 4, bound: 3 });
        assert!(count_nc2wmo(2, 11, EnumerationBound::default()).is_err());
    }

    #[test]
    fn sign_string_examples() {
        assert_eq!(sign_string_to_partition(&[-1, 1]).unwrap(), pp(&[(1, 2)]));
        assert_eq!(sign_string_to_partition(&[-1, -1, 1, 1]).unwrap(), pp(&[(1, 4), (2, 3)]));
    }

    #[test]
    fn sign_string_validation() {
        assert_eq!(SignString::new(vec![1, -1]).unwrap_err(), PartitionError::NegativeSuffix(2));
        assert_eq!(SignString::new(vec![-1, -1]).unwrap_err(), PartitionError::NonZeroSum(-2));
        assert_eq!(SignString::new(vec![-1, 1, -1]).unwrap_err(), PartitionError::OddLength(3));
        assert!(matches!(SignString::new(vec![-1, 0]), Err(PartitionError::BadSign { .. })));
    }

    #[test]
    fn sign_strings_biject_onto_nc2() {
        for n in 1..=5usize {
            let mut images = BTreeSet::new();
            let mut valid = 0;
            for bits in 0u32..(1 << (2 * n)) {
                let entries: Vec<i8> = (0..2 * n).map(|k| if bits >> k & 1 == 1 { 1 } else { -1 }).collect();
                if let Ok(s) = SignString::new(entries) {
                    valid += 1;
                    let pi = s.to_partition();
                    assert_eq!(pi.to_sign_string(), s);
                    images.insert(pi);
                }
            }
            assert_eq!(BigUint::from(valid as u32), catalan(n));
            assert_eq!(images.len(), valid);
            let listed: BTreeSet<_> = enumerate_nc2(n, EnumerationBound::default()).unwrap().into_iter().collect();
            assert_eq!(images, listed);
        }
    }

    #[test]
    fn partition_round_trip_n4() {
        let listed = enumerate_nc2(4, EnumerationBound::default()).unwrap();
        assert_eq!(listed.len(), 14);
        for pi in listed {
            assert_eq!(pi.to_sign_string().to_partition(), pi);
        }
    }

    #[test]
    fn crossing_rejected() {
        assert_eq!(PairPartition::new(vec![(1, 3), (2, 4)]).unwrap_err(), PartitionError::Crossing(1, 3, 2, 4));
        assert!(PairPartition::new(vec![(1, 2), (2, 3)]).is_err());
        assert!(PairPartition::new(vec![(2, 1)]).is_err());
    }

    #[test]
    fn forest_examples() {
        let f = nesting_forest(&pp(&[(1, 2), (3, 4)]));
        assert_eq!(f.roots, vec![0, 1]);
        assert_eq!(f.parent, vec![None, None]);

        let f = nesting_forest(&pp(&[(1, 4), (2, 3)]));
        assert_eq!(f.parent, vec![None, Some(0)]);
        assert_eq!(f.children[0], vec![1]);

        let f = nesting_forest(&pp(&[(1, 6), (2, 3), (4, 5)]));
        assert_eq!(f.roots, vec![0]);
        assert_eq!(f.children[0], vec![1, 2]);
        assert_eq!(f.post_order(), vec![1, 2, 0]);
    }

    #[test]
    fn forest_parent_is_tightest_enclosure() {
        for pi in enumerate_nc2(6, EnumerationBound::default()).unwrap() {
            let f = nesting_forest(&pi);
            for b in 0..pi.num_blocks() {
                let enclosing: Vec<usize> = (0..pi.num_blocks()).filter(|&a| a != b && pi.encloses(a, b)).collect();
                let tightest = enclosing.iter().copied().max_by_key(|&a| pi.pairs()[a].0);
                assert_eq!(f.parent[b], tightest);
            }
        }
    }

    #[test]
    fn labeling_examples() {
        assert_eq!(count_weakly_monotone_labelings(&pp(&[(1, 2)]), 3), BigUint::from(3u32));
        assert_eq!(count_weakly_monotone_labelings(&pp(&[(1, 4), (2, 3)]), 2), BigUint::from(3u32));
        for n in 1..=4usize {
            for m in 1..=3usize {
                let pi = PairPartition::interval(n);
                let expected = count_weakly_monotone_labelings_exhaustive(&pi, m);
                assert_eq!(expected, BigUint::from(m.pow(n as u32)));
                assert_eq!(count_weakly_monotone_labelings(&pi, m), expected);
            }
        }
    }

    #[test]
    fn labeling_dp_matches_exhaustive() {
        for n in 1..=4 {
            for pi in enumerate_nc2(n, EnumerationBound::default()).unwrap() {
                for m in 1..=3 {
                    assert_eq!(
                        count_weakly_monotone_labelings(&pi, m),
                        count_weakly_monotone_labelings_exhaustive(&pi, m),
                        "{pi:?} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn nc2wmo_examples() {
        let b = EnumerationBound::default();
        for n in 0..=6 {
            assert_eq!(count_nc2wmo(1, n, b).unwrap(), catalan(n));
        }
        let m2: Vec<BigUint> = (1..=4).map(|n| count_nc2wmo(2, n, b).unwrap()).collect();
        assert_eq!(m2, [2u32, 7, 29, 131].map(BigUint::from));
        assert_eq!(count_nc2wmo(4, 3, b).unwrap(), BigUint::from(194u32));
        assert_eq!(count_nc2wmo_exhaustive(3, 4, b).unwrap(), count_nc2wmo(3, 4, b).unwrap());
    }
}
