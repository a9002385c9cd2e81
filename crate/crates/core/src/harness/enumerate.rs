use crate::error::{Error, Result};
use crate::set::IntegerSet;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Refuses enumerations above `budget`, reporting the exact count.
pub fn check_budget(universe: usize, k: usize, budget: u64) -> Result<u128> {
    let count = binomial(universe as u64, k as u64);
    if count > budget as u128 {
        return Err(Error::Refused(format!(
            "C({universe}, {k}) = {count} sets exceed the budget of {budget}"
        )));
    }
    Ok(count)
}

/// Lexicographic `k`-combinations of `0..n` as index vectors.
#[derive(Clone, Debug)]
pub struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        match (0..k).rev().find(|&p| self.idx[p] < self.n - k + p) {
            Some(p) => {
                self.idx[p] += 1;
                for q in p + 1..k {
                    self.idx[q] = self.idx[q - 1] + 1;
                }
            }
            None => self.done = true,
        }
        Some(out)
    }
}

/// `{-M, .., M}`.
pub fn symmetric_universe(max_abs: i64) -> Vec<i64> {
    (-max_abs..=max_abs).collect()
}

/// The `k`-subsets of `universe` whose smallest element is `universe[first]`,
/// in lexicographic order. Shards `0..=len-k` partition all `k`-subsets.
pub fn shard(universe: &[i64], k: usize, first: usize) -> impl Iterator<Item = IntegerSet> + '_ {
    let head = universe[first];
    let tail = &universe[first + 1..];
    Combinations::new(tail.len(), k.saturating_sub(1)).map(move |idx| {
        let mut xs = Vec::with_capacity(k);
        xs.push(head);
        xs.extend(idx.iter().map(|&i| tail[i]));
        IntegerSet::from_sorted(xs)
    })
}

/// Number of nonempty prefix shards of the `k`-subsets of a universe.
pub fn shard_count(universe_len: usize, k: usize) -> usize {
    if k == 0 || k > universe_len {
        0
    } else {
        universe_len - k + 1
    }
}

/// Every `k`-subset of `{-M, .., M}` exactly once, in lexicographic order.
pub fn enumerate_sets(k: usize, max_abs: i64, budget: u64) -> Result<impl Iterator<Item = IntegerSet>> {
    if max_abs < 1 {
        return Err(crate::error::invalid("M must be at least 1"));
    }
    let universe = symmetric_universe(max_abs);
    check_budget(universe.len(), k, budget)?;
    let shards = shard_count(universe.len(), k);
    Ok((0..shards).flat_map(move |first| shard(&universe, k, first).collect::<Vec<_>>()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(enumerate_sets(3, 2, DEFAULT_BUDGET).unwrap().count(), 10);
        assert_eq!(enumerate_sets(5, 3, DEFAULT_BUDGET).unwrap().count(), 21);
        assert_eq!(enumerate_sets(6, 7, DEFAULT_BUDGET).unwrap().count(), 5005);
    }

    #[test]
    fn lexicographic_and_unique() {
        let all: Vec<IntegerSet> = enumerate_sets(3, 3, DEFAULT_BUDGET).unwrap().collect();
        assert!(all.windows(2).all(|w| w[0].elements() < w[1].elements()));
        assert_eq!(all.len() as u128, binomial(7, 3));
    }

    #[test]
    fn budget_refusal_reports_count() {
        let err = enumerate_sets(10, 20, 1000).err().unwrap();
        assert_eq!(
            err,
            Error::Refused(format!("C(41, 10) = {} sets exceed the budget of 1000", binomial(41, 10)))
        );
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(15, 6), 5005);
        assert_eq!(binomial(13, 7), 1716);
        assert_eq!(binomial(4, 5), 0);
    }
}
