//! Executable versions of the combinatorial steps used to prove the
//! inverse theorems: element swaps, the descending list of sums they
//! produce, the sign-count property of extremal sets and the witness sums
//! that separate `S_n(A)` from `S_n(A \ {c})`.

use serde::{Deserialize, Serialize};

use crate::bounds::sn_bound;
use crate::error::{invalid, not_applicable, Error, Result};
use crate::set::IntegerSet;
use crate::sumset::restricted_sumset;

/// Exact element sum.
pub fn sigma(s: &IntegerSet) -> Result<i64> {
    if s.is_empty() {
        return Err(invalid("sigma of an empty set"));
    }
    let total: i128 = s.iter().map(|x| x as i128).sum();
    i64::try_from(total).map_err(|_| invalid("element sum overflows"))
}

/// The element `u(S, b)` displaced when the negative `b` is swapped in:
/// `min S` if `min S > -b`, otherwise the largest `s <= -b`.
pub fn select_u(s: &IntegerSet, b: i64) -> Result<i64> {
    if b >= 0 || b == i64::MIN {
        return Err(invalid(format!("b = {b} must be a negative integer")));
    }
    if s.contains(b) {
        return Err(invalid(format!("b = {b} already belongs to S")));
    }
    let min = s.min().ok_or_else(|| invalid("S must be nonempty"))?;
    let bound = -b;
    if min > bound {
        return Ok(min);
    }
    Ok(s.iter().rev().find(|&x| x <= bound).expect("min S <= -b"))
}

/// Outcome of swapping negatives into a working set one at a time.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SwapState {
    /// The final working set `U_m`.
    pub base: IntegerSet,
    pub inserted: Vec<i64>,
    pub removed: Vec<i64>,
    /// `sigma(S), sigma(U_1), .., sigma(U_m)`.
    pub stage_sigmas: Vec<i64>,
}

impl SwapState {
    pub fn sigma(&self) -> i64 {
        *self.stage_sigmas.last().expect("at least the initial stage")
    }
}

/// Applies `U_1, .., U_m`: each negative replaces `u(X, b)`, where `X` is
/// what remains of the original set.
pub fn swap_chain(s: &IntegerSet, bs: &[i64]) -> Result<SwapState> {
    if s.is_empty() {
        return Err(invalid("S must be nonempty"));
    }
    if !s.negation_pairs().is_empty() {
        return Err(invalid(format!("{s} contains a pair +-x with x != 0")));
    }
    if bs.len() > s.len() {
        return Err(invalid("more swaps than elements"));
    }
    for (i, &b) in bs.iter().enumerate() {
        if b >= 0 {
            return Err(invalid(format!("swap value {b} is not negative")));
        }
        if s.contains(b) || bs[..i].contains(&b) {
            return Err(invalid(format!("swap value {b} repeats or lies in S")));
        }
    }
    let mut remaining = s.clone();
    let mut working = s.clone();
    let mut stage_sigmas = vec![sigma(s)?];
    let mut removed = Vec::with_capacity(bs.len());
    for &b in bs {
        let u = select_u(&remaining, b)?;
        remaining = remaining.without(u);
        working = working.without(u).with(b)?;
        removed.push(u);
        stage_sigmas.push(sigma(&working)?);
    }
    Ok(SwapState {
        base: working,
        inserted: bs.to_vec(),
        removed,
        stage_sigmas,
    })
}

/// The `r(r+1)/2 + 1` sums built from the `n` smallest nonnegative elements
/// `T` and the `r <= n - 1` negatives of `A`, largest first.
///
/// `c` is the largest element of `T` with `c = 0` or `-c` not in `A`.
pub fn descending_list(a: &IntegerSet, n: usize) -> Result<Vec<i64>> {
    let nonneg: Vec<i64> = a.iter().filter(|&x| x >= 0).collect();
    if nonneg.len() < n {
        return Err(not_applicable(format!("fewer than n = {n} nonnegative elements")));
    }
    let top = IntegerSet::from_sorted(nonneg[..n].to_vec());
    let c = top
        .iter()
        .rev()
        .find(|&x| x == 0 || !a.contains(-x))
        .ok_or_else(|| not_applicable("no c in T with c = 0 or -c not in A"))?;
    descending_list_from(a, n, &top, c)
}

/// [`descending_list`] with an explicit block `T` and pivot `c`.
pub fn descending_list_from(a: &IntegerSet, n: usize, top: &IntegerSet, c: i64) -> Result<Vec<i64>> {
    let negs: Vec<i64> = a.iter().filter(|&x| x < 0).collect();
    let r = negs.len();
    if n == 0 || r >= n {
        return Err(not_applicable(format!("{r} negatives; need at most n - 1 = {}", n.saturating_sub(1))));
    }
    if top.len() != n || top.iter().any(|x| x < 0 || !a.contains(x)) {
        return Err(not_applicable("T must consist of n nonnegative elements of A"));
    }
    if !top.contains(c) || (c != 0 && a.contains(-c)) {
        return Err(not_applicable(format!("pivot {c} must lie in T with c = 0 or -c not in A")));
    }
    // b_1 > b_2 > .. > b_r: b(i) is the i-th negative counted from zero.
    let b = |i: usize| negs[r - i];
    let rest = top.without(c);
    let mut list = vec![sigma(top)?];
    for m in 1..=r {
        let prefix: Vec<i64> = (0..m - 1).map(|j| b(r - j)).collect();
        for i in 1..=r - m + 1 {
            let mut chain = prefix.clone();
            chain.push(b(i));
            list.push(c + swap_chain(&rest, &chain)?.sigma());
        }
    }
    if let Some(w) = list.windows(2).find(|w| w[0] <= w[1]) {
        return Err(Error::TheoremFalsified(format!(
            "swap list for {a} is not strictly decreasing at {} -> {}",
            w[0], w[1]
        )));
    }
    let sums = restricted_sumset(a, n)?;
    if let Some(v) = list.iter().find(|&&v| !sums.contains(v)) {
        return Err(Error::TheoremFalsified(format!("swap-list value {v} is not in S_{n}({a})")));
    }
    Ok(list)
}

/// Whether an extremal `A` has at least `n - 1` negative and `n - 1`
/// positive elements. Not applicable unless `|S_n(A)|` attains the bound.
pub fn sign_count_check(a: &IntegerSet, n: usize) -> Result<bool> {
    let k = a.len();
    if n < 3 || k + 1 < 2 * n {
        return Err(not_applicable(format!("need n >= 3 and |A| >= 2n - 1 (n = {n}, |A| = {k})")));
    }
    let actual = restricted_sumset(a, n)?.len() as i64;
    if actual != sn_bound(n, k).value {
        return Err(not_applicable(format!("{a} does not attain the S_{n} bound")));
    }
    Ok(a.negatives() + 1 >= n && a.positives() + 1 >= n)
}

/// Which half of the witness lemma an instance belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaMode {
    /// `|A| = 2n`: `{c_1, c_2, +-d} U {+-(b + j d) : 1 <= j <= n - 2}`.
    LemmaI,
    /// `|A| = 2n + 1`: `{c, +-d} U {+-(b + j d) : 1 <= j <= n - 1}`.
    LemmaIi,
}

/// Parameters recovered from a set in one of the lemma forms. `c2` is the
/// removed element; `c1` is only present in [`LemmaMode::LemmaI`].
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LemmaForm {
    pub mode: LemmaMode,
    pub n: usize,
    pub b: i64,
    pub d: i64,
    pub c1: Option<i64>,
    pub c2: i64,
}

impl LemmaForm {
    /// Largest element of the symmetric part: `b + (n-2) d` or `b + (n-1) d`.
    pub fn top(&self) -> i64 {
        let j = match self.mode {
            LemmaMode::LemmaI => self.n as i64 - 2,
            LemmaMode::LemmaIi => self.n as i64 - 1,
        };
        self.b + j * self.d
    }

    /// The set described by the parameters.
    pub fn build(&self) -> Result<IntegerSet> {
        let last = match self.mode {
            LemmaMode::LemmaI => self.n - 2,
            LemmaMode::LemmaIi => self.n - 1,
        };
        let mut xs = vec![self.d, -self.d, self.c2];
        for j in 1..=last as i64 {
            let v = self.b + j * self.d;
            xs.extend([v, -v]);
        }
        xs.extend(self.c1);
        IntegerSet::new(xs)
    }

    /// The explicit witness from the degenerate configuration `b = d` with
    /// `c_2 = b + n d` (part i) or `c = b + (n+1) d` (part ii); `None` elsewhere.
    pub fn closed_form_witness(&self) -> Option<i64> {
        let n = self.n as i64;
        if self.b != self.d {
            return None;
        }
        match self.mode {
            LemmaMode::LemmaI if self.c2 == self.b + n * self.d => {
                Some(self.c1? + (n * (n - 1) / 2 - 1) * self.d)
            }
            LemmaMode::LemmaIi if self.c2 == self.b + (n + 1) * self.d => {
                Some((n * (n + 1) / 2 - 1) * self.d)
            }
            _ => None,
        }
    }
}

/// Recognizes the lemma's set forms exactly; near misses are rejected.
pub fn match_lemma(a: &IntegerSet, c: i64, mode: LemmaMode, n: usize) -> Result<LemmaForm> {
    let reject = |msg: String| Err(invalid(format!("{a} with c = {c}: {msg}")));
    if n < 3 {
        return reject("the lemma needs n >= 3".into());
    }
    if c <= 0 || !a.contains(c) {
        return reject("c must be a positive element of A".into());
    }
    let rest = a.without(c);
    let pairs = rest.negation_pairs();
    let unpaired: Vec<i64> = rest.iter().filter(|&x| x == 0 || !rest.contains(-x)).collect();
    let (want_len, want_pairs, want_unpaired) = match mode {
        LemmaMode::LemmaI => (2 * n, n - 1, 1),
        LemmaMode::LemmaIi => (2 * n + 1, n, 0),
    };
    if a.len() != want_len || pairs.len() != want_pairs || unpaired.len() != want_unpaired {
        return reject(format!("expected {want_len} elements with {want_pairs} pairs +-x"));
    }
    let d = pairs[0];
    let b = pairs[1] - d;
    if b <= 0 || pairs.windows(2).skip(1).any(|w| w[1] - w[0] != d) {
        return reject("pairs are not of the form d, b + d, b + 2d, ..".into());
    }
    let form = LemmaForm {
        mode,
        n,
        b,
        d,
        c1: unpaired.first().copied(),
        c2: c,
    };
    if c <= form.top() {
        return reject(format!("c must exceed {}", form.top()));
    }
    if let Some(c1) = form.c1 {
        if c1 >= form.top() {
            return reject(format!("c_1 = {c1} must be below {}", form.top()));
        }
    }
    Ok(form)
}

/// A separating sum and the open interval it was required to fall in.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Witness {
    pub w: i64,
    pub lower: i64,
    pub upper: i64,
    pub form: LemmaForm,
}

/// The minimal `w` in `S_n(A) \ S_n(A \ {c})` with
/// `min S_n(A \ {c}) < w < max S_n(A \ {c}) + c - top`.
///
/// A missing witness is reported as [`Error::TheoremFalsified`].
pub fn find_witness(a: &IntegerSet, c: i64, mode: LemmaMode, n: usize) -> Result<Witness> {
    let form = match_lemma(a, c, mode, n)?;
    let reduced = restricted_sumset(&a.without(c), n)?;
    let full = restricted_sumset(a, n)?;
    let (Some(lo), Some(hi)) = (reduced.min(), reduced.max()) else {
        return Err(Error::Inconsistency(format!("S_{n} of {a} without {c} is empty")));
    };
    let upper = hi + c - form.top();
    let found = full
        .iter()
        .find(|&w| w > lo && w < upper && !reduced.contains(w));
    found
        .map(|w| Witness {
            w,
            lower: lo,
            upper,
            form,
        })
        .ok_or_else(|| {
            Error::TheoremFalsified(format!(
                "no w in S_{n}({a}) \\ S_{n}(A \\ {{{c}}}) strictly between {lo} and {upper}"
            ))
        })
}
