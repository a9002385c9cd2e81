//! Closed-form lower bounds for sumset cardinalities.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::MonicPolynomial;
use crate::set::IntegerSet;
use crate::sumset::{distinct_sumset, generalized_sumset, restricted_sumset};

/// A bound value together with whether its hypotheses hold.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Bound {
    pub value: i64,
    pub applicable: bool,
}

/// `n k - n^2 + 1`, applicable for `k >= n >= 1`.
pub fn nwedge_bound(n: usize, k: usize) -> Bound {
    let (n_, k_) = (n as i64, k as i64);
    Bound {
        value: n_ * k_ - n_ * n_ + 1,
        applicable: n >= 1 && k >= n,
    }
}

/// `(k-1) n - 3 C(n,2) + 1`, applicable for `k >= 2n - 1`.
pub fn sn_bound(n: usize, k: usize) -> Bound {
    let (n_, k_) = (n as i64, k as i64);
    Bound {
        value: (k_ - 1) * n_ - 3 * n_ * (n_ - 1) / 2 + 1,
        applicable: n >= 1 && k + 1 >= 2 * n,
    }
}

/// `K = (k-1) n - (m+1) C(n,2)`; the guaranteed size is `K + 1` when `k > m (n-1)`.
pub fn liu_sun_k(n: usize, k: usize, m: usize) -> Bound {
    let (n_, k_, m_) = (n as i64, k as i64, m as i64);
    Bound {
        value: (k_ - 1) * n_ - (m_ + 1) * n_ * (n_ - 1) / 2,
        applicable: n >= 1 && m >= 1 && k > m * (n - 1),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mode {
    Squares,
    Distinct,
    Poly(MonicPolynomial),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: usize,
    pub k: usize,
    pub bound: i64,
    pub actual: usize,
    pub slack: i64,
    pub equality: bool,
    pub applicable: bool,
}

impl BoundReport {
    pub fn new(n: usize, k: usize, bound: Bound, actual: usize) -> Self {
        let slack = actual as i64 - bound.value;
        Self {
            n,
            k,
            bound: bound.value,
            actual,
            slack,
            equality: slack == 0,
            applicable: bound.applicable,
        }
    }

    pub fn violated(&self) -> bool {
        self.applicable && self.slack < 0
    }

    /// Errors when an applicable bound is not met.
    pub fn checked(self) -> Result<Self> {
        if self.violated() {
            Err(Error::TheoremFalsified(format!(
                "sumset of size {} below the bound {} (n={}, k={})",
                self.actual, self.bound, self.n, self.k
            )))
        } else {
            Ok(self)
        }
    }
}

/// Computes the relevant sumset of `A` and compares it with its bound.
/// In polynomial mode every family equals `A` and the Liu-Sun `K + 1` is used.
pub fn bound_report(a: &IntegerSet, n: usize, mode: &Mode) -> Result<BoundReport> {
    if a.is_empty() {
        return Err(crate::error::invalid("set must be nonempty"));
    }
    let k = a.len();
    let report = match mode {
        Mode::Squares => BoundReport::new(n, k, sn_bound(n, k), restricted_sumset(a, n)?.len()),
        Mode::Distinct => BoundReport::new(n, k, nwedge_bound(n, k), distinct_sumset(a, n)?.len()),
        Mode::Poly(p) => {
            let families = vec![a.clone(); n];
            return generalized_bound_report(&families, p);
        }
    };
    report.checked()
}

/// Liu-Sun hypotheses on family sizes: after sorting, consecutive sizes
/// differ by 0 or 1 and the largest `k` satisfies `k > m (n - 1)`.
pub fn generalized_bound(sizes: &[usize], m: usize) -> Bound {
    let mut sorted = sizes.to_vec();
    sorted.sort_unstable();
    let n = sorted.len();
    let k = sorted.last().copied().unwrap_or(0);
    let steps_ok = sorted.windows(2).all(|w| w[1] - w[0] <= 1);
    let b = liu_sun_k(n, k, m);
    Bound {
        value: b.value + 1,
        applicable: b.applicable && steps_ok,
    }
}

pub fn generalized_bound_report(families: &[IntegerSet], p: &MonicPolynomial) -> Result<BoundReport> {
    let sizes: Vec<usize> = families.iter().map(IntegerSet::len).collect();
    let bound = generalized_bound(&sizes, p.degree());
    let k = sizes.iter().copied().max().unwrap_or(0);
    let actual = generalized_sumset(families, p)?.len();
    BoundReport::new(families.len(), k, bound, actual).checked()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::set;

    #[test]
    fn nwedge_values() {
        assert_eq!(nwedge_bound(2, 4).value, 5);
        assert_eq!(nwedge_bound(6, 6).value, 1);
        assert_eq!(nwedge_bound(3, 7).value, 13);
        assert!(!nwedge_bound(4, 3).applicable);
    }

    #[test]
    fn sn_values() {
        assert_eq!(sn_bound(3, 5).value, 4);
        assert_eq!(sn_bound(3, 6).value, 7);
        assert_eq!(sn_bound(3, 7).value, 10);
        assert!(!sn_bound(3, 4).applicable);
        assert!(sn_bound(3, 5).applicable);
    }

    #[test]
    fn liu_sun_values() {
        assert_eq!(liu_sun_k(3, 5, 2).value, 3);
        assert_eq!(liu_sun_k(2, 3, 2).value, 1);
        for k in 1..10 {
            assert_eq!(liu_sun_k(1, k, 3).value, k as i64 - 1);
        }
        assert!(!liu_sun_k(3, 4, 2).applicable);
    }

    #[test]
    fn identities_for_small_n() {
        for n in 2..=64usize {
            let t = (n * (n - 1) / 2) as i64;
            assert_eq!(sn_bound(n, 2 * n - 1).value, t + 1);
            assert_eq!(sn_bound(n, 2 * n).value, t + n as i64 + 1);
            for k in 2 * n - 1..2 * n + 8 {
                assert_eq!(liu_sun_k(n, k, 2).value + 1, sn_bound(n, k).value);
                assert!(sn_bound(n, k + 1).value > sn_bound(n, k).value);
                assert!(nwedge_bound(n, k + 1).value > nwedge_bound(n, k).value);
                assert!(liu_sun_k(n, k + 1, 3).value > liu_sun_k(n, k, 3).value);
            }
        }
    }

    #[test]
    fn reports() {
        let r = bound_report(&set(&[-1, 1, -4, 4, 6]), 3, &Mode::Squares).unwrap();
        assert_eq!((r.bound, r.actual, r.equality), (4, 4, true));
        let r = bound_report(&set(&[-1, 1, -3, 3, -5, 5, 7]), 3, &Mode::Squares).unwrap();
        assert_eq!((r.bound, r.actual, r.slack, r.equality), (10, 12, 2, false));
        let r = bound_report(&set(&[0, 1, 2, 3, 4]), 2, &Mode::Distinct).unwrap();
        assert_eq!((r.bound, r.actual, r.equality), (7, 7, true));
    }

    #[test]
    fn inapplicable_bound_is_reported_not_asserted() {
        // {+-1, +-2} with n = 3: S_3 is empty, the bound (k < 2n - 1) does not apply.
        let r = bound_report(&set(&[-2, -1, 1, 2]), 3, &Mode::Squares).unwrap();
        assert!(!r.applicable);
        assert_eq!(r.actual, 0);
        assert!(r.slack < 0);
    }

    #[test]
    fn poly_mode_uses_liu_sun() {
        let r = bound_report(&set(&[0, 1, 2]), 2, &Mode::Poly(MonicPolynomial::square())).unwrap();
        assert_eq!((r.bound, r.actual, r.applicable), (2, 3, true));
    }
}
