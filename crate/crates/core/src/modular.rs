//! Subset sums in `Z/pZ`: the pair-sum-free lower bound and the maximum
//! size of a zero-sum-free set.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::BitVec;
use crate::bounds::{Bound, BoundReport};
use crate::error::{invalid, not_applicable, Error, Result};

pub const MAX_PRIME: u64 = 1_000_000;
pub const ENUMERATION_LIMIT: usize = 24;
pub const DIRECT_ZERO_SUM_LIMIT: usize = 20;
pub const SELFRIDGE_VERIFY_LIMIT: u64 = 31;

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut q = 2;
    while q * q <= p {
        if p.is_multiple_of(q) {
            return false;
        }
        q += 1;
    }
    true
}

/// Primes in `[2, limit]`, ascending.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut out = Vec::new();
    for i in 2..=limit {
        if !composite[i] {
            out.push(i as u64);
            for j in (i * i..=limit).step_by(i) {
                composite[j] = true;
            }
        }
    }
    out
}

fn check_prime(p: u64) -> Result<()> {
    if p > MAX_PRIME {
        return Err(Error::Refused(format!("p = {p} exceeds {MAX_PRIME}")));
    }
    if !is_prime(p) {
        return Err(invalid(format!("{p} is not prime")));
    }
    Ok(())
}

/// Distinct residues modulo a prime, sorted.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct ResidueSet {
    p: u64,
    elements: Vec<u64>,
}

impl ResidueSet {
    /// Reduces every value mod `p`; values that coincide mod `p` are rejected.
    pub fn new(p: u64, values: impl IntoIterator<Item = i64>) -> Result<Self> {
        check_prime(p)?;
        let mut elements: Vec<u64> = values
            .into_iter()
            .map(|v| v.rem_euclid(p as i64) as u64)
            .collect();
        elements.sort_unstable();
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(invalid(format!("residue {} repeats mod {p}", w[0])));
        }
        Ok(Self { p, elements })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

impl fmt::Display for ResidueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements.iter().map(u64::to_string).collect();
        write!(f, "{{{}}} mod {}", parts.join(","), self.p)
    }
}

/// No `a + b = 0 (mod p)` for `a, b` in `A`, `a = b` included.
pub fn is_pair_sum_free(a: &ResidueSet) -> bool {
    let p = a.p;
    a.elements
        .iter()
        .all(|&x| a.elements.iter().all(|&y| (x + y) % p != 0))
}

/// Sums of all nonempty subsets, by a cyclic bit-vector DP.
pub fn nonempty_subset_sums(a: &ResidueSet) -> Vec<u64> {
    let p = a.p as usize;
    let mut reach = BitVec::new(p);
    for &x in &a.elements {
        let prev = reach.clone();
        reach.or_shifted(&prev, x as isize);
        reach.or_shifted(&prev, x as isize - p as isize);
        reach.set(x as usize);
    }
    reach.iter_ones().map(|i| i as u64).collect()
}

/// Reference enumeration of all `2^|A| - 1` nonempty subsets.
pub fn nonempty_subset_sums_enumerated(a: &ResidueSet) -> Result<Vec<u64>> {
    if a.len() > ENUMERATION_LIMIT {
        return Err(Error::Refused(format!(
            "subset enumeration limited to {ENUMERATION_LIMIT} elements"
        )));
    }
    let mut seen = vec![false; a.p as usize];
    for mask in 1u32..(1u32 << a.len()) {
        let s = a
            .elements
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .fold(0u64, |acc, (_, &x)| (acc + x) % a.p);
        seen[s as usize] = true;
    }
    Ok((0..a.p).filter(|&r| seen[r as usize]).collect())
}

/// Compares `|{sum of B : B nonempty}|` with `min(p, |A|(|A|+1)/2)`.
pub fn check_balandraud(a: &ResidueSet) -> Result<BoundReport> {
    if a.is_empty() || !is_pair_sum_free(a) {
        return Err(not_applicable(format!("{a} is not a nonempty pair-sum-free set")));
    }
    let k = a.len();
    let tri = (k * (k + 1) / 2) as u64;
    let bound = Bound {
        value: tri.min(a.p) as i64,
        applicable: true,
    };
    BoundReport::new(k, k, bound, nonempty_subset_sums(a).len()).checked()
}

/// Every nonempty pair-sum-free subset of `Z/pZ`: at most one residue from
/// each class `{x, p - x}`, never 0.
pub fn pair_sum_free_sets(p: u64) -> Result<Vec<ResidueSet>> {
    check_prime(p)?;
    if p == 2 {
        return Ok(Vec::new());
    }
    let half = ((p - 1) / 2) as u32;
    if half > 12 {
        return Err(Error::Refused(format!("3^{half} pair-sum-free sets for p = {p}")));
    }
    let mut out = Vec::new();
    for code in 1..3u64.pow(half) {
        let mut c = code;
        let mut xs = Vec::new();
        for x in 1..=half as i64 {
            match c % 3 {
                1 => xs.push(x),
                2 => xs.push(p as i64 - x),
                _ => {}
            }
            c /= 3;
        }
        out.push(ResidueSet::new(p, xs)?);
    }
    Ok(out)
}

/// No nonempty subset sums to 0. Direct enumeration up to
/// [`DIRECT_ZERO_SUM_LIMIT`] elements, meet-in-the-middle beyond.
pub fn is_zero_sum_free(a: &ResidueSet) -> bool {
    if a.elements.contains(&0) {
        return false;
    }
    if a.len() <= DIRECT_ZERO_SUM_LIMIT {
        return !nonempty_subset_sums_enumerated(a)
            .expect("within enumeration limit")
            .contains(&0);
    }
    let (left, right) = a.elements.split_at(a.len() / 2);
    let half_sums = |xs: &[u64]| -> Vec<bool> {
        // seen[r]: some nonempty subset of xs sums to r.
        let mut seen = vec![false; a.p as usize];
        let mut all: Vec<u64> = vec![0];
        for &x in xs {
            let ext: Vec<u64> = all.iter().map(|&s| (s + x) % a.p).collect();
            for &s in &ext {
                seen[s as usize] = true;
            }
            all.extend(ext);
        }
        seen
    };
    let l = half_sums(left);
    let r = half_sums(right);
    if l[0] || r[0] {
        return false;
    }
    !(1..a.p).any(|x| l[x as usize] && r[(a.p - x) as usize])
}

/// `max{k : k(k+1)/2 < p}` by integer binary search.
pub fn selfridge_by_search(p: u64) -> u64 {
    let tri = |k: u64| k * (k + 1) / 2;
    // Invariant: tri(lo) < p <= tri(hi).
    let (mut lo, mut hi) = (0u64, 1u64);
    while tri(hi) < p {
        lo = hi;
        hi *= 2;
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if tri(mid) < p {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// `floor((sqrt(8p - 7) - 1) / 2)` with an exact integer square root.
pub fn selfridge_closed_form(p: u64) -> u64 {
    ((8 * p - 7).isqrt() - 1) / 2
}

/// Largest zero-sum-free subset of `Z/pZ`, by exhaustive backtracking.
pub fn max_zero_sum_free_size(p: u64) -> Result<usize> {
    check_prime(p)?;
    if p > SELFRIDGE_VERIFY_LIMIT {
        return Err(Error::Refused(format!(
            "exhaustive search limited to p <= {SELFRIDGE_VERIFY_LIMIT}"
        )));
    }
    let mask = (1u64 << p) - 1;
    let rotate = |r: u64, a: u64| ((r << a) | (r >> (p - a))) & mask;
    fn go(p: u64, next: u64, reach: u64, size: usize, best: &mut usize, rotate: &dyn Fn(u64, u64) -> u64) {
        *best = (*best).max(size);
        for a in next..p {
            if size + (p - a) as usize <= *best {
                return;
            }
            if reach >> (p - a) & 1 == 1 {
                continue;
            }
            let grown = reach | rotate(reach, a) | 1 << a;
            go(p, a + 1, grown, size + 1, best, rotate);
        }
    }
    let mut best = 0;
    go(p, 1, 0, 0, &mut best, &rotate);
    Ok(best)
}

/// The maximum size of a zero-sum-free set mod `p`, evaluated in integers;
/// with `verify`, confirmed by exhaustive search (`p <= 31`).
pub fn erdos_selfridge_max(p: u64, verify: bool) -> Result<u64> {
    check_prime(p)?;
    let k = selfridge_by_search(p);
    if verify {
        let found = max_zero_sum_free_size(p)? as u64;
        if found != k {
            return Err(Error::TheoremFalsified(format!(
                "largest zero-sum-free set mod {p} has {found} elements, formula gives {k}"
            )));
        }
    }
    Ok(k)
}
