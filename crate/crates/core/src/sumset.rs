//! Exact sumset computation by dynamic programming over bit vectors.
//!
//! Every sum considered by a DP lies in the window `[lo, hi]` where `lo` adds
//! up the most negative admissible choices and `hi` the most positive ones;
//! bit `v - lo` of a state records that the value `v` is reachable.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::bits::BitVec;
use crate::error::{invalid, Error, Result};
use crate::poly::{decompose, MonicPolynomial};
use crate::set::IntegerSet;

/// Total bit budget across all DP states of one computation.
pub const MAX_DP_BITS: u128 = 1 << 30;

/// Largest family count accepted by the subset-mask DP for distinct families.
pub const MAX_MASK_FAMILIES: usize = 16;

/// A set of integers stored as a dense bit vector over `[offset, offset + width)`.
#[derive(Clone)]
pub struct SumSet {
    offset: i64,
    bits: BitVec,
    cardinality: usize,
}

impl SumSet {
    pub fn empty() -> Self {
        Self {
            offset: 0,
            bits: BitVec::new(0),
            cardinality: 0,
        }
    }

    fn from_bits(offset: i64, bits: BitVec) -> Self {
        let cardinality = bits.count_ones();
        Self {
            offset,
            bits,
            cardinality,
        }
    }

    /// Builds a sumset from explicit values (duplicates collapse).
    pub fn from_values(values: impl IntoIterator<Item = i64>) -> Result<Self> {
        let values: Vec<i64> = values.into_iter().collect();
        let (Some(&lo), Some(&hi)) = (values.iter().min(), values.iter().max()) else {
            return Ok(Self::empty());
        };
        let width = (hi as i128 - lo as i128 + 1) as u128;
        if width > MAX_DP_BITS {
            return Err(Error::Refused(format!("value span {width} too wide")));
        }
        let mut bits = BitVec::new(width as usize);
        for v in values {
            bits.set((v as i128 - lo as i128) as usize);
        }
        Ok(Self::from_bits(lo, bits))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.cardinality
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.cardinality == 0
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn width(&self) -> usize {
        self.bits.len()
    }

    pub fn contains(&self, v: i64) -> bool {
        let idx = v as i128 - self.offset as i128;
        idx >= 0 && (idx as u128) < self.bits.len() as u128 && self.bits.test(idx as usize)
    }

    /// Values in strictly increasing order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = i64> + '_ {
        // iter_ones is not double-ended; materialize once.
        let v: Vec<i64> = self
            .bits
            .iter_ones()
            .map(|i| self.offset + i as i64)
            .collect();
        v.into_iter()
    }

    pub fn to_vec(&self) -> Vec<i64> {
        self.iter().collect()
    }

    pub fn min(&self) -> Option<i64> {
        self.iter().next()
    }

    pub fn max(&self) -> Option<i64> {
        self.iter().next_back()
    }

    pub fn is_subset(&self, other: &SumSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }
}

impl PartialEq for SumSet {
    fn eq(&self, other: &Self) -> bool {
        self.cardinality == other.cardinality && self.iter().eq(other.iter())
    }
}

impl Eq for SumSet {}

impl fmt::Debug for SumSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for SumSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl Serialize for SumSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// Sum window for picking up to `n` values from `choices`.
fn window(choices: &[i64], n: usize) -> Result<(i64, i64)> {
    let mut sorted = choices.to_vec();
    sorted.sort_unstable();
    let lo: i128 = sorted.iter().take(n).filter(|&&x| x < 0).map(|&x| x as i128).sum();
    let hi: i128 = sorted
        .iter()
        .rev()
        .take(n)
        .filter(|&&x| x > 0)
        .map(|&x| x as i128)
        .sum();
    let fits = |v: i128| i64::try_from(v).is_ok();
    if !fits(lo) || !fits(hi) {
        return Err(invalid(format!("sums of {n} elements overflow 64-bit integers")));
    }
    Ok((lo as i64, hi as i64))
}

fn check_budget(width: u128, states: u128) -> Result<usize> {
    if width.saturating_mul(states) > MAX_DP_BITS {
        return Err(Error::Refused(format!(
            "sum window of {width} values x {states} states exceeds the DP budget"
        )));
    }
    Ok(width as usize)
}

/// Exact-count DP: pick `n` classes, one member from each.
fn class_dp(classes: &[Vec<i64>], n: usize) -> Result<SumSet> {
    if classes.len() < n {
        return Ok(SumSet::empty());
    }
    let all: Vec<i64> = classes.iter().flatten().copied().collect();
    let (lo, hi) = window(&all, n)?;
    let width = check_budget((hi as i128 - lo as i128 + 1) as u128, n as u128 + 1)?;
    let mut states: Vec<BitVec> = (0..=n).map(|_| BitVec::new(width)).collect();
    states[0].set(lo.unsigned_abs() as usize);
    for (seen, class) in classes.iter().enumerate() {
        for j in (1..=n.min(seen + 1)).rev() {
            let (below, above) = states.split_at_mut(j);
            let src = &below[j - 1];
            if !src.any() {
                continue;
            }
            for &x in class {
                above[0].or_shifted(src, x as isize);
            }
        }
    }
    let top = states.pop().expect("n + 1 states");
    Ok(SumSet::from_bits(lo, top))
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        Err(invalid("n must be at least 1"))
    } else {
        Ok(())
    }
}

/// `S_n(A)`: sums of `n` elements of `A` with pairwise distinct squares.
///
/// Empty when `A` has fewer than `n` distinct absolute values.
pub fn restricted_sumset(a: &IntegerSet, n: usize) -> Result<SumSet> {
    check_n(n)?;
    let decomposition = decompose(a, &MonicPolynomial::square())?;
    let classes: Vec<Vec<i64>> = decomposition.classes.into_iter().map(|c| c.members).collect();
    class_dp(&classes, n)
}

/// `n^A`: sums of `n` pairwise distinct elements of `A`. Empty when `n > |A|`.
pub fn distinct_sumset(a: &IntegerSet, n: usize) -> Result<SumSet> {
    check_n(n)?;
    let classes: Vec<Vec<i64>> = a.iter().map(|x| vec![x]).collect();
    class_dp(&classes, n)
}

/// Sums `a_1 + ... + a_n` with `a_i` drawn from `families[i]` and the values
/// `P(a_i)` pairwise distinct.
pub fn generalized_sumset(families: &[IntegerSet], p: &MonicPolynomial) -> Result<SumSet> {
    let Some(first) = families.first() else {
        return Err(invalid("at least one family is required"));
    };
    if families.iter().any(IntegerSet::is_empty) {
        return Err(invalid("families must be nonempty"));
    }
    let n = families.len();
    if families.iter().all(|f| f == first) {
        let classes: Vec<Vec<i64>> = decompose(first, p)?
            .classes
            .into_iter()
            .map(|c| c.members)
            .collect();
        return class_dp(&classes, n);
    }
    mask_dp(families, p)
}

/// Subset-of-positions DP: each key class fills at most one still-open position.
fn mask_dp(families: &[IntegerSet], p: &MonicPolynomial) -> Result<SumSet> {
    let n = families.len();
    if n > MAX_MASK_FAMILIES {
        return Err(Error::Refused(format!(
            "{n} distinct families exceed the limit of {MAX_MASK_FAMILIES}"
        )));
    }
    let mut classes: BTreeMap<i128, Vec<(usize, i64)>> = BTreeMap::new();
    for (i, fam) in families.iter().enumerate() {
        for a in fam.iter() {
            classes.entry(p.key(a)?).or_default().push((i, a));
        }
    }
    let lo: i128 = families.iter().map(|f| f.min().unwrap().min(0) as i128).sum();
    let hi: i128 = families.iter().map(|f| f.max().unwrap().max(0) as i128).sum();
    let (Ok(lo), Ok(_)) = (i64::try_from(lo), i64::try_from(hi)) else {
        return Err(invalid("family sums overflow 64-bit integers"));
    };
    let full = (1usize << n) - 1;
    let width = check_budget((hi - lo as i128 + 1) as u128, full as u128 + 1)?;
    let mut states: Vec<Option<BitVec>> = vec![None; full + 1];
    let mut origin = BitVec::new(width);
    origin.set(lo.unsigned_abs() as usize);
    states[0] = Some(origin);
    for options in classes.values() {
        for mask in (0..full).rev() {
            let Some(src) = states[mask].take() else {
                continue;
            };
            for &(i, a) in options {
                let bit = 1 << i;
                if mask & bit != 0 {
                    continue;
                }
                states[mask | bit]
                    .get_or_insert_with(|| BitVec::new(width))
                    .or_shifted(&src, a as isize);
            }
            states[mask] = Some(src);
        }
    }
    Ok(match states[full].take() {
        Some(bits) => SumSet::from_bits(lo, bits),
        None => SumSet::empty(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::set;

    fn vals(s: &SumSet) -> Vec<i64> {
        s.to_vec()
    }

    #[test]
    fn restricted_golden() {
        assert_eq!(vals(&restricted_sumset(&set(&[-1, 1, -4, 4, 6]), 3).unwrap()), vec![1, 3, 9, 11]);
        assert_eq!(
            vals(&restricted_sumset(&set(&[-1, 1, -3, 3, -4, 4]), 3).unwrap()),
            vec![-8, -6, -2, 0, 2, 6, 8]
        );
        assert_eq!(
            vals(&restricted_sumset(&set(&[-1, 1, -3, 3, -5, 5, 7]), 3).unwrap()),
            vec![-9, -7, -3, -1, 1, 3, 5, 7, 9, 11, 13, 15]
        );
        assert!(restricted_sumset(&set(&[-1, 1]), 2).unwrap().is_empty());
    }

    #[test]
    fn distinct_golden() {
        assert_eq!(vals(&distinct_sumset(&set(&[0, 1, 2, 3]), 2).unwrap()), vec![1, 2, 3, 4, 5]);
        let ap = distinct_sumset(&set(&[0, 1, 2, 3, 4]), 2).unwrap();
        assert_eq!(vals(&ap), (1..=7).collect::<Vec<_>>());
        assert_eq!(vals(&distinct_sumset(&set(&[-4, -1, 1, 4, 6]), 5).unwrap()), vec![6]);
        assert!(distinct_sumset(&set(&[1, 2]), 3).unwrap().is_empty());
    }

    #[test]
    fn n_zero_rejected() {
        assert!(matches!(restricted_sumset(&set(&[1]), 0), Err(Error::InvalidArgument(_))));
        assert!(matches!(distinct_sumset(&set(&[1]), 0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn generalized_golden() {
        let f = set(&[0, 1, 2]);
        let got = generalized_sumset(&[f.clone(), f], &MonicPolynomial::square()).unwrap();
        assert_eq!(vals(&got), vec![1, 2, 3]);
        let a = set(&[-1, 1, -4, 4, 6]);
        let got = generalized_sumset(&[a.clone(), a.clone(), a], &MonicPolynomial::square()).unwrap();
        assert_eq!(vals(&got), vec![1, 3, 9, 11]);
        let got = generalized_sumset(&[set(&[5])], &MonicPolynomial::identity()).unwrap();
        assert_eq!(vals(&got), vec![5]);
        assert!(generalized_sumset(&[], &MonicPolynomial::identity()).is_err());
        assert!(generalized_sumset(&[IntegerSet::empty()], &MonicPolynomial::identity()).is_err());
    }

    #[test]
    fn mask_dp_distinct_families() {
        // (a, b) with a in {0,1}, b in {-1,2}, a^2 != b^2: pairs (0,-1),(0,2),(1,2).
        let got = generalized_sumset(&[set(&[0, 1]), set(&[-1, 2])], &MonicPolynomial::square()).unwrap();
        assert_eq!(vals(&got), vec![-1, 2, 3]);
    }

    #[test]
    fn overflow_is_input_error() {
        let a = set(&[i64::MAX - 1, i64::MAX]);
        assert!(matches!(distinct_sumset(&a, 2), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn wide_windows_refused() {
        let a = set(&[0, 1 << 40]);
        assert!(matches!(distinct_sumset(&a, 1), Err(Error::Refused(_))));
    }

    #[test]
    fn sumset_accessors() {
        let s = SumSet::from_values([5, -2, 5, 9]).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!((s.min(), s.max()), (Some(-2), Some(9)));
        assert!(s.contains(9) && !s.contains(0) && !s.contains(i64::MIN));
        assert_eq!(s.to_string(), "{-2,5,9}");
        assert_eq!(serde_json::to_string(&s).unwrap(), "[-2,5,9]");
    }
}
