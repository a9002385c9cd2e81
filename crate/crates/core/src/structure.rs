//! Extremal-set classification.
//!
//! Each classifier runs a structural pattern match and an independent
//! computation of the sumset cardinality. A set is reported extremal only when
//! both agree; a disagreement surfaces as [`Error::Inconsistency`].

use serde::{Deserialize, Serialize};

use crate::bounds::{nwedge_bound, sn_bound, BoundReport, Mode};
use crate::error::{invalid, not_applicable, Error, Result};
use crate::set::IntegerSet;
use crate::sumset::{distinct_sumset, restricted_sumset};

/// Named extremal families and their parameters.
///
/// Serialized as `{"tag": <variant>, "params": {..}}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(tag = "tag", content = "params")]
pub enum StructureForm {
    /// `{c, +-d}` with `|c| != d`.
    #[serde(rename = "S2_CaseI")]
    S2CaseI { c: i64, d: i64 },
    /// `{+-c, +-d}` with `c != d`; canonical output has `c > d`.
    #[serde(rename = "S2_CaseII")]
    S2CaseII { c: i64, d: i64 },
    /// `{+-d} U {c +- d}` with `c` not in `{0, +-2d}`.
    #[serde(rename = "S2_CaseIII")]
    S2CaseIII { c: i64, d: i64 },
    /// `{r d : s <= r <= t}`, `s <= -1`, `t >= 1`, `t - s >= 4`.
    #[serde(rename = "S2_CaseIV")]
    S2CaseIV { d: i64, s: i64, t: i64 },
    /// `{(2r - 1) d : s <= r <= t}`, `s <= 0`, `t >= 1`, `t - s >= 4`.
    #[serde(rename = "S2_CaseV")]
    S2CaseV { d: i64, s: i64, t: i64 },
    /// `{c, +-d} U {+-(b + j d) : 1 <= j <= n - 2}`, `|A| = 2n - 1`.
    #[serde(rename = "Sn_Odd")]
    SnOdd { n: usize, b: i64, c: i64, d: i64 },
    /// `{+-d} U {+-(b + j d) : 1 <= j <= n - 1}`, `|A| = 2n`.
    #[serde(rename = "Sn_Even")]
    SnEven { n: usize, b: i64, d: i64 },
    #[serde(rename = "NwedgeAP")]
    NwedgeAp { start: i64, diff: i64, len: usize },
    NotExtremal { reason: String },
}

impl StructureForm {
    pub fn tag(&self) -> &'static str {
        match self {
            Self::S2CaseI { .. } => "S2_CaseI",
            Self::S2CaseII { .. } => "S2_CaseII",
            Self::S2CaseIII { .. } => "S2_CaseIII",
            Self::S2CaseIV { .. } => "S2_CaseIV",
            Self::S2CaseV { .. } => "S2_CaseV",
            Self::SnOdd { .. } => "Sn_Odd",
            Self::SnEven { .. } => "Sn_Even",
            Self::NwedgeAp { .. } => "NwedgeAP",
            Self::NotExtremal { .. } => "NotExtremal",
        }
    }

    pub fn is_extremal(&self) -> bool {
        !matches!(self, Self::NotExtremal { .. })
    }

    fn not_extremal(reason: impl Into<String>) -> Self {
        Self::NotExtremal {
            reason: reason.into(),
        }
    }
}

/// Classifier verdict plus the cardinality comparison behind it.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Classification {
    pub form: StructureForm,
    pub report: BoundReport,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Progression {
    pub start: i64,
    pub diff: i64,
    pub len: usize,
}

/// Arithmetic-progression parameters of a sorted set. Singletons report
/// `diff = 1` by convention.
pub fn is_arithmetic_progression(a: &IntegerSet) -> Option<Progression> {
    let xs = a.elements();
    let start = *xs.first()?;
    if xs.len() == 1 {
        return Some(Progression {
            start,
            diff: 1,
            len: 1,
        });
    }
    let diff = xs[1].checked_sub(xs[0])?;
    xs.windows(2)
        .all(|w| w[1].checked_sub(w[0]) == Some(diff))
        .then_some(Progression {
            start,
            diff,
            len: xs.len(),
        })
}

/// Positive halves of the `+-x` pairs and the elements without a partner
/// (0 counts as unpaired).
fn split_pairs(a: &IntegerSet) -> (Vec<i64>, Vec<i64>) {
    let pairs = a.negation_pairs();
    let unpaired = a
        .iter()
        .filter(|&x| x.checked_neg().is_none_or(|neg| x == 0 || !a.contains(neg)))
        .collect();
    (pairs, unpaired)
}

/// Structural match against the `n = 2` families, without computing `S_2`.
pub fn match_s2(a: &IntegerSet) -> Option<StructureForm> {
    let (pairs, unpaired) = split_pairs(a);
    match a.len() {
        3 if pairs.len() == 1 => Some(StructureForm::S2CaseI {
            c: unpaired[0],
            d: pairs[0],
        }),
        4 if pairs.len() == 2 => Some(StructureForm::S2CaseII {
            c: pairs[1],
            d: pairs[0],
        }),
        4 if pairs.len() == 1 => {
            let d = pairs[0];
            let (x, y) = (unpaired[0], unpaired[1]);
            (y as i128 - x as i128 == 2 * d as i128).then(|| StructureForm::S2CaseIII { c: x + d, d })
        }
        k if k >= 5 => {
            let ap = is_arithmetic_progression(a)?;
            let (lo, hi, q) = (ap.start, a.max()?, ap.diff);
            if lo >= 0 || hi <= 0 {
                return None;
            }
            if a.contains(0) {
                Some(StructureForm::S2CaseIV {
                    d: q,
                    s: lo / q,
                    t: hi / q,
                })
            } else if q % 2 == 0 && lo % (q / 2) == 0 && (lo / (q / 2)) % 2 != 0 {
                let d = q / 2;
                Some(StructureForm::S2CaseV {
                    d,
                    s: (lo / d + 1) / 2,
                    t: (hi / d + 1) / 2,
                })
            } else {
                None
            }
        }
        _ => None,
    }
}

/// Smallest `n` from which the family parameter `b` must equal `d`.
///
/// Odd family (`|A| = 2n - 1`): exhaustive computation shows `b` is free at
/// `n = 4`, e.g. `{c, +-1, +-4, +-5}` attains the bound, so `b = d` is only
/// imposed from `n = 5` on. Even family: `b = d` from `n = 4`.
pub fn b_equals_d_from(odd: bool) -> usize {
    if odd {
        5
    } else {
        4
    }
}

/// `(d, b)` when the ascending positives read `d, b + d, b + 2d, ...`.
fn shifted_progression(xs: &[i64], n: usize, odd: bool) -> Option<(i64, i64)> {
    let d = *xs.first()?;
    let b = xs.get(1)? - d;
    if b <= 0 || xs.windows(2).skip(1).any(|w| w[1] - w[0] != d) {
        return None;
    }
    if n >= b_equals_d_from(odd) && b != d {
        return None;
    }
    Some((d, b))
}

/// Structural match against the `n >= 3` families, without computing `S_n`.
pub fn match_sn(a: &IntegerSet, n: usize) -> Option<StructureForm> {
    if n < 3 {
        return None;
    }
    let (pairs, unpaired) = split_pairs(a);
    if a.len() == 2 * n - 1 && unpaired.len() == 1 && pairs.len() == n - 1 {
        let (d, b) = shifted_progression(&pairs, n, true)?;
        return Some(StructureForm::SnOdd {
            n,
            b,
            c: unpaired[0],
            d,
        });
    }
    if a.len() == 2 * n && unpaired.is_empty() && pairs.len() == n {
        let (d, b) = shifted_progression(&pairs, n, false)?;
        return Some(StructureForm::SnEven { n, b, d });
    }
    None
}

fn verdict(
    pattern: Option<StructureForm>,
    report: BoundReport,
    what: &str,
    a: &IntegerSet,
) -> Result<Classification> {
    let form = match (pattern, report.equality) {
        (Some(form), true) => form,
        (None, false) => StructureForm::not_extremal(format!("slack {}", report.slack)),
        (Some(form), false) => {
            return Err(Error::Inconsistency(format!(
                "{a} matches {} but |{what}| = {} exceeds the bound {}",
                form.tag(),
                report.actual,
                report.bound
            )))
        }
        (None, true) => {
            return Err(Error::Inconsistency(format!(
                "{a} attains the bound {} for {what} but matches no extremal family",
                report.bound
            )))
        }
    };
    Ok(Classification { form, report })
}

/// Classifies `A` (with `|A| >= 3`) against the five `n = 2` families.
pub fn classify_s2(a: &IntegerSet) -> Result<Classification> {
    let k = a.len();
    if k < 3 {
        return Err(invalid("classification for n = 2 needs |A| >= 3"));
    }
    let actual = restricted_sumset(a, 2)?.len();
    let report = BoundReport::new(2, k, sn_bound(2, k), actual).checked()?;
    verdict(match_s2(a), report, "S_2(A)", a)
}

/// Classifies `A` for `n >= 3` and `|A| >= 2n - 1`.
///
/// For `|A| >= 2n + 1` no extremal set exists; the computed slack is checked
/// to be positive.
pub fn classify_sn(a: &IntegerSet, n: usize) -> Result<Classification> {
    if n < 3 {
        return Err(invalid("classify_sn needs n >= 3; use classify_s2 for n = 2"));
    }
    let k = a.len();
    if k + 1 < 2 * n {
        return Err(not_applicable(format!("|A| = {k} < 2n - 1 = {}", 2 * n - 1)));
    }
    let actual = restricted_sumset(a, n)?.len();
    let report = BoundReport::new(n, k, sn_bound(n, k), actual).checked()?;
    if k > 2 * n {
        if report.slack < 1 {
            return Err(Error::TheoremFalsified(format!(
                "{a} attains the S_{n} bound although |A| >= 2n + 1"
            )));
        }
        return Ok(Classification {
            form: StructureForm::not_extremal(format!("|A| >= 2n + 1, slack {}", report.slack)),
            report,
        });
    }
    verdict(match_sn(a, n), report, &format!("S_{n}(A)"), a)
}

/// Classifies `A` with respect to the distinct-summand sumset `n^A`.
///
/// For `|A| >= 5` and `2 <= n <= |A| - 2`, equality holds exactly for
/// arithmetic progressions, and any disagreement is an error. Outside that
/// range only the computation decides; a non-AP may then attain the bound.
pub fn classify_nwedge(a: &IntegerSet, n: usize) -> Result<Classification> {
    let k = a.len();
    if n == 0 || n > k {
        return Err(not_applicable(format!("need 1 <= n <= |A|, got n = {n}, |A| = {k}")));
    }
    let actual = distinct_sumset(a, n)?.len();
    let report = BoundReport::new(n, k, nwedge_bound(n, k), actual).checked()?;
    let ap = is_arithmetic_progression(a);
    let theorem_range = k >= 5 && (2..=k - 2).contains(&n);
    let form = match (ap, report.equality) {
        (Some(p), true) => StructureForm::NwedgeAp {
            start: p.start,
            diff: p.diff,
            len: p.len,
        },
        (None, false) => StructureForm::not_extremal(format!("slack {}", report.slack)),
        (None, true) if !theorem_range => StructureForm::not_extremal(
            "attains the bound without being an AP (outside 5 <= |A|, 2 <= n <= |A| - 2)",
        ),
        (p, eq) => {
            return Err(Error::Inconsistency(format!(
                "{a}: AP = {}, equality = {eq} for n = {n}",
                p.is_some()
            )))
        }
    };
    Ok(Classification { form, report })
}

/// Dispatches to the classifier matching `n` and `mode`.
pub fn classify(a: &IntegerSet, n: usize, mode: &Mode) -> Result<Classification> {
    match mode {
        Mode::Squares if n == 2 => classify_s2(a),
        Mode::Squares if n >= 3 => classify_sn(a, n),
        Mode::Squares => Err(invalid("restricted classification needs n >= 2")),
        Mode::Distinct => classify_nwedge(a, n),
        Mode::Poly(_) => Err(invalid("no inverse theorem is available for polynomial mode")),
    }
}

fn build(values: impl IntoIterator<Item = i128>) -> Result<IntegerSet> {
    let v = values
        .into_iter()
        .map(|x| i64::try_from(x).map_err(|_| invalid("parameters overflow 64-bit integers")))
        .collect::<Result<Vec<_>>>()?;
    IntegerSet::new(v).map_err(|_| invalid("parameters produce colliding elements"))
}

fn plus_minus(x: i128) -> [i128; 2] {
    [-x, x]
}

/// The set described by an extremal form.
pub fn reconstruct(form: &StructureForm) -> Result<IntegerSet> {
    use StructureForm::*;
    let fail = |msg: &str| Err(invalid(format!("{}: {msg}", form.tag())));
    match *form {
        S2CaseI { c, d } => {
            if d <= 0 || c.unsigned_abs() == d.unsigned_abs() {
                return fail("need d > 0 and |c| != d");
            }
            build([c as i128, -(d as i128), d as i128])
        }
        S2CaseII { c, d } => {
            if c <= 0 || d <= 0 || c == d {
                return fail("need c, d > 0 and c != d");
            }
            build(plus_minus(c as i128).into_iter().chain(plus_minus(d as i128)))
        }
        S2CaseIII { c, d } => {
            let (c, d) = (c as i128, d as i128);
            if d <= 0 || c == 0 || c == 2 * d || c == -2 * d {
                return fail("need d > 0 and c not in {0, +-2d}");
            }
            build([-d, d, c - d, c + d])
        }
        S2CaseIV { d, s, t } => {
            if d == 0 || s > -1 || t < 1 || t - s < 4 {
                return fail("need d != 0, s <= -1, t >= 1, t - s >= 4");
            }
            build((s..=t).map(|r| r as i128 * d as i128))
        }
        S2CaseV { d, s, t } => {
            if d == 0 || s > 0 || t < 1 || t - s < 4 {
                return fail("need d != 0, s <= 0, t >= 1, t - s >= 4");
            }
            build((s..=t).map(|r| (2 * r as i128 - 1) * d as i128))
        }
        SnOdd { n, b, c, d } => {
            if n < 3 || b <= 0 || d <= 0 {
                return fail("need n >= 3 and b, d > 0");
            }
            if n >= b_equals_d_from(true) && b != d {
                return fail("need b = d for n >= 5");
            }
            let (b, d) = (b as i128, d as i128);
            let tail = (1..=n as i128 - 2).flat_map(|j| plus_minus(b + j * d));
            build([c as i128].into_iter().chain(plus_minus(d)).chain(tail))
        }
        SnEven { n, b, d } => {
            if n < 3 || b <= 0 || d <= 0 {
                return fail("need n >= 3 and b, d > 0");
            }
            if n >= b_equals_d_from(false) && b != d {
                return fail("need b = d for n >= 4");
            }
            let (b, d) = (b as i128, d as i128);
            let tail = (1..=n as i128 - 1).flat_map(|j| plus_minus(b + j * d));
            build(plus_minus(d).into_iter().chain(tail))
        }
        NwedgeAp { start, diff, len } => {
            if len == 0 || diff <= 0 {
                return fail("need len >= 1 and diff > 0");
            }
            build((0..len as i128).map(|i| start as i128 + i * diff as i128))
        }
        NotExtremal { .. } => fail("no set is associated with a non-extremal verdict"),
    }
}
