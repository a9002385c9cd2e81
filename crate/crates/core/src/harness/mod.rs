//! Exhaustive verification campaigns.
//!
//! A campaign expands into independent tasks (one per enumeration shard,
//! parameter point or prime), evaluates them on a worker pool and merges the
//! results by sorted reduction, so the report does not depend on scheduling.

mod canonical;
mod enumerate;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub use canonical::{canonicalize, canonicalize_affine};
pub use enumerate::{
    binomial, check_budget, enumerate_sets, shard, shard_count, symmetric_universe, Combinations,
    DEFAULT_BUDGET,
};

use crate::bounds::sn_bound;
use crate::error::{invalid, Error, Result};
use crate::modular::{
    check_balandraud, erdos_selfridge_max, pair_sum_free_sets, selfridge_by_search,
    selfridge_closed_form, SELFRIDGE_VERIFY_LIMIT,
};
use crate::proofkit::{descending_list, find_witness, sign_count_check, LemmaForm, LemmaMode};
use crate::set::IntegerSet;
use crate::structure::{classify_nwedge, classify_s2, match_s2, match_sn, reconstruct, StructureForm};
use crate::sumset::{distinct_sumset, restricted_sumset};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    LsBound,
    Nathanson,
    InverseN2,
    InverseOdd,
    InverseEven,
    Strict,
    LemmaSigns,
    LemmaWitness,
    Balandraud,
    Selfridge,
}

impl Theorem {
    pub const ALL: [Theorem; 10] = [
        Self::LsBound,
        Self::Nathanson,
        Self::InverseN2,
        Self::InverseOdd,
        Self::InverseEven,
        Self::Strict,
        Self::LemmaSigns,
        Self::LemmaWitness,
        Self::Balandraud,
        Self::Selfridge,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Self::LsBound => "ls-bound",
            Self::Nathanson => "nathanson",
            Self::InverseN2 => "inverse-n2",
            Self::InverseOdd => "inverse-odd",
            Self::InverseEven => "inverse-even",
            Self::Strict => "strict",
            Self::LemmaSigns => "lemma-signs",
            Self::LemmaWitness => "lemma-witness",
            Self::Balandraud => "balandraud",
            Self::Selfridge => "selfridge",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| invalid(format!("unknown theorem id {s:?}")))
    }
}

/// Inclusive integer range.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Span {
    pub lo: usize,
    pub hi: usize,
}

impl Span {
    pub fn new(lo: usize, hi: usize) -> Self {
        Self { lo, hi }
    }

    pub fn single(v: usize) -> Self {
        Self { lo: v, hi: v }
    }

    pub fn contains(&self, v: usize) -> bool {
        (self.lo..=self.hi).contains(&v)
    }

    pub fn iter(&self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

/// Accepts `5` or `3..6` (inclusive).
impl FromStr for Span {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| invalid(format!("bad range bound {t:?}")))
        };
        match s.split_once("..") {
            Some((a, b)) => Ok(Self::new(parse(a)?, parse(b.trim_start_matches('='))?)),
            None => Ok(Self::single(parse(s)?)),
        }
    }
}

fn default_workers() -> usize {
    1
}

fn default_budget() -> u64 {
    DEFAULT_BUDGET
}

/// What to verify and over which parameters.
///
/// Interpretation of the fields per theorem:
/// - set sweeps (`ls-bound`, `inverse-*`, `strict`, `lemma-signs`): all
///   `k`-subsets of `[-max_abs, max_abs]` for each `n` in range; `k` defaults
///   to the values the theorem speaks about.
/// - `nathanson`: subsets of `[0, max_abs]` containing 0.
/// - `lemma-witness`: `b, d` in `[1, max_abs]`.
/// - `balandraud`, `selfridge`: every prime `p <= max_abs`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CampaignSpec {
    pub theorem: Theorem,
    pub n: Span,
    #[serde(default)]
    pub k: Option<Span>,
    pub max_abs: i64,
    #[serde(default = "default_workers")]
    pub workers: usize,
    #[serde(default)]
    pub output: Option<std::path::PathBuf>,
    #[serde(default = "default_budget")]
    pub budget: u64,
}

impl CampaignSpec {
    pub fn new(theorem: Theorem, n: Span, k: Option<Span>, max_abs: i64) -> Self {
        Self {
            theorem,
            n,
            k,
            max_abs,
            workers: 1,
            output: None,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    /// `(n, k)` pairs swept by set-enumerating campaigns.
    fn jobs(&self) -> Vec<(usize, usize)> {
        let n_range: Vec<usize> = match self.theorem {
            Theorem::InverseN2 => vec![2],
            _ => self.n.iter().collect(),
        };
        let mut out = Vec::new();
        for n in n_range {
            let defaults = match self.theorem {
                Theorem::LsBound => Span::new(2 * n - 1, 2 * n + 1),
                Theorem::Nathanson => Span::new(5, 6),
                Theorem::InverseN2 => Span::new(3, 6),
                Theorem::InverseOdd => Span::single(2 * n - 1),
                Theorem::InverseEven => Span::single(2 * n),
                Theorem::Strict => Span::single(2 * n + 1),
                Theorem::LemmaSigns => Span::new(2 * n - 1, 2 * n),
                _ => continue,
            };
            let ks = self.k.unwrap_or(defaults);
            for k in ks.iter() {
                let admissible = match self.theorem {
                    Theorem::LsBound | Theorem::LemmaSigns => k + 1 >= 2 * n,
                    Theorem::Nathanson => n <= k,
                    Theorem::InverseN2 => k >= 3,
                    Theorem::InverseOdd => k + 1 == 2 * n,
                    Theorem::InverseEven => k == 2 * n,
                    Theorem::Strict => k > 2 * n,
                    _ => false,
                };
                if admissible {
                    out.push((n, k));
                }
            }
        }
        out
    }

    pub fn validate(&self) -> Result<()> {
        if self.n.lo > self.n.hi || self.k.is_some_and(|k| k.lo > k.hi) {
            return Err(invalid("empty n or k range"));
        }
        if self.max_abs < 1 {
            return Err(invalid("max_abs must be at least 1"));
        }
        if self.workers == 0 {
            return Err(invalid("at least one worker is required"));
        }
        let needs_n3 = matches!(
            self.theorem,
            Theorem::InverseOdd | Theorem::InverseEven | Theorem::LemmaSigns | Theorem::LemmaWitness
        );
        if needs_n3 && self.n.lo < 3 {
            return Err(invalid(format!("{} needs n >= 3", self.theorem)));
        }
        if self.n.lo == 0 && !matches!(self.theorem, Theorem::Balandraud | Theorem::Selfridge) {
            return Err(invalid("n must be at least 1"));
        }
        match self.theorem {
            Theorem::Nathanson => {
                for (_, k) in self.jobs() {
                    check_budget(self.max_abs as usize, k - 1, self.budget)?;
                }
            }
            Theorem::LemmaWitness | Theorem::Balandraud | Theorem::Selfridge => {}
            _ => {
                let universe = 2 * self.max_abs as usize + 1;
                for (_, k) in self.jobs() {
                    check_budget(universe, k, self.budget)?;
                }
            }
        }
        if matches!(self.theorem, Theorem::Balandraud) && self.max_abs > 31 {
            return Err(Error::Refused("balandraud sweeps are limited to p <= 31".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FindingKind {
    Witness,
    Counterexample,
}

/// Merge key: findings agreeing on all of these are duplicates.
type FindingKey = (FindingKind, usize, usize, Vec<i64>, Option<String>);

/// One line of a campaign report.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Finding {
    pub kind: FindingKind,
    pub n: usize,
    pub k: usize,
    pub set: Vec<i64>,
    pub size: i64,
    pub bound: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<StructureForm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extra: Option<Value>,
}

impl Finding {
    fn key(&self) -> FindingKey {
        (self.kind, self.n, self.k, self.set.clone(), self.detail.clone())
    }
}

/// Accumulated results of one or more tasks.
#[derive(Clone, Default, Debug)]
struct Tally {
    sets: u64,
    hits: u64,
    min_slack: Option<i64>,
    findings: BTreeMap<FindingKey, Finding>,
}

impl Tally {
    fn slack(&mut self, s: i64) {
        self.min_slack = Some(self.min_slack.map_or(s, |m| m.min(s)));
    }

    fn push(&mut self, f: Finding) {
        self.findings.entry(f.key()).or_insert(f);
    }

    fn counterexample(&mut self, n: usize, k: usize, set: &IntegerSet, size: i64, bound: i64, detail: String) {
        self.push(Finding {
            kind: FindingKind::Counterexample,
            n,
            k,
            set: set.elements().to_vec(),
            size,
            bound,
            form: None,
            detail: Some(detail),
            extra: None,
        });
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.sets += other.sets;
        self.hits += other.hits;
        if let Some(s) = other.min_slack {
            self.slack(s);
        }
        for (key, f) in other.findings {
            self.findings.entry(key).or_insert(f);
        }
        self
    }
}

/// The parameters a report was produced from (worker count and output path
/// are execution details and are not echoed).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SpecEcho {
    pub theorem: Theorem,
    pub n: Span,
    pub k: Option<Span>,
    pub max_abs: i64,
    pub budget: u64,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CampaignReport {
    pub spec: SpecEcho,
    pub sets: u64,
    pub hits: u64,
    pub min_slack: Option<i64>,
    pub witnesses: Vec<Finding>,
    pub counterexamples: Vec<Finding>,
    pub elapsed_ms: u64,
}

impl CampaignReport {
    pub fn falsified(&self) -> bool {
        !self.counterexamples.is_empty()
    }

    pub fn summary(&self, timing: bool) -> Value {
        let mut v = json!({
            "kind": "summary",
            "theorem": self.spec.theorem,
            "n": [self.spec.n.lo, self.spec.n.hi],
            "k": self.spec.k.map(|k| vec![k.lo, k.hi]),
            "max_abs": self.spec.max_abs,
            "sets": self.sets,
            "hits": self.hits,
            "min_slack": self.min_slack,
            "witnesses": self.witnesses.len(),
            "counterexamples": self.counterexamples.len(),
            "falsified": self.falsified(),
        });
        if timing {
            v["elapsed_ms"] = json!(self.elapsed_ms);
        }
        v
    }

    /// Line-delimited JSON: witnesses, then counterexamples, then the
    /// summary. Keys are emitted in sorted order. With `timing = false` the
    /// output is a pure function of the spec.
    pub fn to_jsonl(&self, timing: bool) -> String {
        let mut out = String::new();
        for f in self.witnesses.iter().chain(&self.counterexamples) {
            let v = serde_json::to_value(f).expect("finding serializes");
            out.push_str(&v.to_string());
            out.push('\n');
        }
        out.push_str(&self.summary(timing).to_string());
        out.push('\n');
        out
    }
}

enum Task {
    Shard { n: usize, k: usize, first: usize },
    Witness { n: usize, b: i64, d: i64 },
    Prime { p: u64 },
}

/// Runs a campaign on `spec.workers` threads.
pub fn run_campaign(spec: &CampaignSpec) -> Result<CampaignReport> {
    spec.validate()?;
    let started = Instant::now();
    let universe: Vec<i64> = match spec.theorem {
        Theorem::Nathanson => (1..=spec.max_abs).collect(),
        _ => symmetric_universe(spec.max_abs),
    };
    let tasks = build_tasks(spec, &universe);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.workers)
        .build()
        .map_err(|e| invalid(format!("worker pool: {e}")))?;
    let tallies: Vec<Result<Tally>> = pool.install(|| {
        tasks
            .par_iter()
            .map(|t| run_task(spec.theorem, t, &universe))
            .collect()
    });
    let mut total = Tally::default();
    for t in tallies {
        total = total.merge(t?);
    }
    let (witnesses, counterexamples): (Vec<Finding>, Vec<Finding>) = total
        .findings
        .into_values()
        .partition(|f| f.kind == FindingKind::Witness);
    Ok(CampaignReport {
        spec: SpecEcho {
            theorem: spec.theorem,
            n: spec.n,
            k: spec.k,
            max_abs: spec.max_abs,
            budget: spec.budget,
        },
        sets: total.sets,
        hits: total.hits,
        min_slack: total.min_slack,
        witnesses,
        counterexamples,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

fn build_tasks(spec: &CampaignSpec, universe: &[i64]) -> Vec<Task> {
    match spec.theorem {
        Theorem::LemmaWitness => {
            let m = spec.max_abs;
            spec.n
                .iter()
                .flat_map(|n| (1..=m).flat_map(move |b| (1..=m).map(move |d| Task::Witness { n, b, d })))
                .collect()
        }
        Theorem::Balandraud | Theorem::Selfridge => crate::modular::primes_up_to(spec.max_abs as u64)
            .into_iter()
            .map(|p| Task::Prime { p })
            .collect(),
        Theorem::Nathanson => spec
            .jobs()
            .into_iter()
            .flat_map(|(n, k)| (0..shard_count(universe.len(), k - 1)).map(move |first| Task::Shard { n, k, first }))
            .collect(),
        _ => spec
            .jobs()
            .into_iter()
            .flat_map(|(n, k)| (0..shard_count(universe.len(), k)).map(move |first| Task::Shard { n, k, first }))
            .collect(),
    }
}

fn run_task(theorem: Theorem, task: &Task, universe: &[i64]) -> Result<Tally> {
    let mut tally = Tally::default();
    match *task {
        Task::Shard { n, k, first } => {
            if theorem == Theorem::Nathanson {
                for rest in shard(universe, k - 1, first) {
                    let a = IntegerSet::from_sorted(std::iter::once(0).chain(rest.iter()).collect());
                    check_nathanson(&mut tally, &a, n)?;
                }
            } else if k == 1 {
                // k = 1 has no prefix shards beyond single elements.
                unreachable!("sumset campaigns start at k >= 2");
            } else {
                for a in shard(universe, k, first) {
                    check_set(theorem, &mut tally, &a, n)?;
                }
            }
        }
        Task::Witness { n, b, d } => check_witness_grid(&mut tally, n, b, d)?,
        Task::Prime { p } => check_prime(theorem, &mut tally, p)?,
    }
    Ok(tally)
}

fn witness(n: usize, k: usize, set: IntegerSet, size: i64, bound: i64, form: Option<StructureForm>) -> Finding {
    Finding {
        kind: FindingKind::Witness,
        n,
        k,
        set: set.elements().to_vec(),
        size,
        bound,
        form,
        detail: None,
        extra: None,
    }
}

fn check_set(theorem: Theorem, tally: &mut Tally, a: &IntegerSet, n: usize) -> Result<()> {
    let k = a.len();
    tally.sets += 1;
    let size = restricted_sumset(a, n)?.len() as i64;
    let bound = sn_bound(n, k).value;
    let slack = size - bound;
    tally.slack(slack);
    if slack < 0 {
        tally.counterexample(n, k, a, size, bound, "below the lower bound".into());
        return Ok(());
    }
    let equality = slack == 0;
    if equality {
        tally.hits += 1;
    }
    match theorem {
        Theorem::LsBound => {
            if equality {
                tally.push(witness(n, k, canonicalize(a)?, size, bound, None));
            }
        }
        Theorem::Strict => {
            if equality {
                tally.counterexample(n, k, a, size, bound, "bound attained with |A| >= 2n + 1".into());
            }
        }
        Theorem::LemmaSigns => {
            if equality && !sign_count_check(a, n)? {
                let detail = format!("{} negatives, {} positives", a.negatives(), a.positives());
                tally.counterexample(n, k, a, size, bound, detail);
            } else if equality {
                tally.push(witness(n, k, canonicalize(a)?, size, bound, None));
            }
        }
        Theorem::InverseN2 | Theorem::InverseOdd | Theorem::InverseEven => {
            let pattern = if n == 2 { match_s2(a) } else { match_sn(a, n) };
            match (pattern, equality) {
                (Some(_), true) => record_extremal(theorem, tally, a, n, size, bound)?,
                (None, false) => {}
                (Some(f), false) => {
                    tally.counterexample(n, k, a, size, bound, format!("matches {} but misses the bound", f.tag()))
                }
                (None, true) => {
                    tally.counterexample(n, k, a, size, bound, "attains the bound outside every family".into())
                }
            }
        }
        _ => unreachable!("not a set-sweep theorem"),
    }
    Ok(())
}

/// Canonical witness with its form, plus the round-trip and proof-step checks.
fn record_extremal(theorem: Theorem, tally: &mut Tally, a: &IntegerSet, n: usize, size: i64, bound: i64) -> Result<()> {
    let k = a.len();
    let canon = canonicalize(a)?;
    let classified = if n == 2 {
        classify_s2(&canon)
    } else {
        crate::structure::classify_sn(&canon, n)
    };
    let form = match classified {
        Ok(c) if c.form.is_extremal() => c.form,
        Ok(c) => {
            tally.counterexample(n, k, a, size, bound, format!("canonical form not extremal: {:?}", c.form));
            return Ok(());
        }
        Err(e) => {
            tally.counterexample(n, k, a, size, bound, e.to_string());
            return Ok(());
        }
    };
    if reconstruct(&form)? != canon {
        tally.counterexample(n, k, a, size, bound, format!("{} does not reconstruct {canon}", form.tag()));
        return Ok(());
    }
    if n >= 3 {
        if !sign_count_check(a, n)? {
            tally.counterexample(n, k, a, size, bound, "fewer than n - 1 negatives or positives".into());
        }
        if theorem == Theorem::InverseOdd {
            let oriented = if a.negatives() + 1 == n { a.clone() } else { a.negate() };
            match descending_list(&oriented, n) {
                Ok(list) if list.len() as i64 == size => {}
                Ok(list) => tally.counterexample(
                    n,
                    k,
                    a,
                    size,
                    bound,
                    format!("swap list has {} of {size} sums", list.len()),
                ),
                Err(e) => tally.counterexample(n, k, a, size, bound, format!("swap list: {e}")),
            }
        }
    }
    tally.push(witness(n, k, canon, size, bound, Some(form)));
    Ok(())
}

fn check_nathanson(tally: &mut Tally, a: &IntegerSet, n: usize) -> Result<()> {
    let k = a.len();
    tally.sets += 1;
    match classify_nwedge(a, n) {
        Ok(c) => {
            tally.slack(c.report.slack);
            if c.report.slack < 0 {
                tally.counterexample(n, k, a, c.report.actual as i64, c.report.bound, "below the lower bound".into());
            } else if c.report.equality {
                tally.hits += 1;
                let canon = canonicalize_affine(a)?;
                let form = classify_nwedge(&canon, n)?.form;
                tally.push(witness(n, k, canon, c.report.actual as i64, c.report.bound, Some(form)));
            }
        }
        Err(Error::Inconsistency(msg)) => {
            let size = distinct_sumset(a, n)?.len() as i64;
            tally.counterexample(n, k, a, size, crate::bounds::nwedge_bound(n, k).value, msg);
        }
        Err(e) => return Err(e),
    }
    Ok(())
}

/// Lemma instances for one `(n, b, d)`: every admissible `c` (part ii) and
/// `(c_1, c_2)` (part i) with `|c|, |c_1|, |c_2| <= top + 3d + 3`.
fn check_witness_grid(tally: &mut Tally, n: usize, b: i64, d: i64) -> Result<()> {
    for mode in [LemmaMode::LemmaI, LemmaMode::LemmaIi] {
        let shape = LemmaForm {
            mode,
            n,
            b,
            d,
            c1: None,
            c2: 0,
        };
        let top = shape.top();
        let reach = top + 3 * d + 3;
        let c1_values: Vec<Option<i64>> = match mode {
            LemmaMode::LemmaI => (-reach..top).map(Some).collect(),
            LemmaMode::LemmaIi => vec![None],
        };
        for c2 in top + 1..=reach {
            for &c1 in &c1_values {
                let form = LemmaForm { c1, c2, ..shape };
                let Ok(a) = form.build() else {
                    continue; // c_1 collides with the symmetric part or with c_2
                };
                tally.sets += 1;
                check_witness(tally, &a, form)?;
            }
        }
    }
    Ok(())
}

fn check_witness(tally: &mut Tally, a: &IntegerSet, form: LemmaForm) -> Result<()> {
    let (n, k) = (form.n, a.len());
    match find_witness(a, form.c2, form.mode, n) {
        Ok(wit) => {
            tally.hits += 1;
            let nonneg = IntegerSet::from_sorted(a.iter().filter(|&x| x >= 0).collect());
            if nonneg.len() >= n && distinct_sumset(&nonneg, n)?.contains(wit.w) {
                tally.counterexample(n, k, a, wit.w, wit.upper, "witness is a sum of nonnegative elements".into());
            }
            if let Some(closed) = form.closed_form_witness() {
                let reduced = restricted_sumset(&a.without(form.c2), n)?;
                let valid = restricted_sumset(a, n)?.contains(closed)
                    && !reduced.contains(closed)
                    && wit.lower < closed
                    && closed < wit.upper;
                let mut f = witness(n, k, a.clone(), wit.w, wit.upper, None);
                f.extra = Some(json!({
                    "mode": form.mode,
                    "b": form.b,
                    "d": form.d,
                    "c1": form.c1,
                    "c2": form.c2,
                    "lower": wit.lower,
                    "upper": wit.upper,
                    "closed_form": closed,
                    "closed_form_valid": valid,
                }));
                tally.push(f);
            }
        }
        Err(Error::TheoremFalsified(msg)) => {
            let mut f = Finding {
                kind: FindingKind::Counterexample,
                n,
                k,
                set: a.elements().to_vec(),
                size: 0,
                bound: 0,
                form: None,
                detail: Some(msg),
                extra: None,
            };
            f.extra = Some(json!({ "mode": form.mode, "b": form.b, "d": form.d, "c1": form.c1, "c2": form.c2 }));
            tally.push(f);
        }
        Err(e) => return Err(e),
    }
    Ok(())
}

fn check_prime(theorem: Theorem, tally: &mut Tally, p: u64) -> Result<()> {
    match theorem {
        Theorem::Balandraud => {
            for a in pair_sum_free_sets(p)? {
                tally.sets += 1;
                let set = IntegerSet::from_sorted(a.elements().iter().map(|&x| x as i64).collect());
                match check_balandraud(&a) {
                    Ok(r) => {
                        tally.slack(r.slack);
                        if r.equality {
                            tally.hits += 1;
                        }
                    }
                    Err(Error::TheoremFalsified(msg)) => tally.counterexample(p as usize, a.len(), &set, 0, 0, msg),
                    Err(e) => return Err(e),
                }
            }
        }
        Theorem::Selfridge => {
            tally.sets += 1;
            let search = selfridge_by_search(p);
            let closed = selfridge_closed_form(p);
            let empty = IntegerSet::empty();
            if search != closed {
                let detail = format!("integer search {search} != closed form {closed}");
                tally.counterexample(p as usize, 0, &empty, search as i64, closed as i64, detail);
            }
            if p <= SELFRIDGE_VERIFY_LIMIT {
                match erdos_selfridge_max(p, true) {
                    Ok(_) => tally.hits += 1,
                    Err(Error::TheoremFalsified(msg)) => {
                        tally.counterexample(p as usize, 0, &empty, search as i64, closed as i64, msg)
                    }
                    Err(e) => return Err(e),
                }
            }
        }
        _ => unreachable!("not a prime campaign"),
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_ids_round_trip() {
        for t in Theorem::ALL {
            assert_eq!(t.id().parse::<Theorem>().unwrap(), t);
            assert_eq!(serde_json::to_value(t).unwrap(), json!(t.id()));
        }
        assert!("nope".parse::<Theorem>().is_err());
    }

    #[test]
    fn spans() {
        assert_eq!("3..6".parse::<Span>().unwrap(), Span::new(3, 6));
        assert_eq!("3..=6".parse::<Span>().unwrap(), Span::new(3, 6));
        assert_eq!("4".parse::<Span>().unwrap(), Span::single(4));
        assert!("a..b".parse::<Span>().is_err());
    }

    #[test]
    fn validation() {
        let bad = CampaignSpec::new(Theorem::InverseOdd, Span::single(2), None, 5);
        assert!(bad.validate().is_err());
        let huge = CampaignSpec::new(Theorem::Strict, Span::single(3), Some(Span::single(7)), 200);
        assert!(matches!(huge.validate(), Err(Error::Refused(_))));
        let ok = CampaignSpec::new(Theorem::InverseOdd, Span::single(3), None, 5);
        assert_eq!(ok.jobs(), vec![(3, 5)]);
    }

    #[test]
    fn inverse_odd_small_sweep() {
        let spec = CampaignSpec::new(Theorem::InverseOdd, Span::single(3), Some(Span::single(5)), 5);
        let r = run_campaign(&spec).unwrap();
        assert_eq!(r.sets, 462);
        assert!(r.counterexamples.is_empty(), "{:?}", r.counterexamples);
        assert!(r.hits > 0);
        assert!(r.witnesses.iter().all(|w| w.form.as_ref().unwrap().tag() == "Sn_Odd"));
    }

    #[test]
    fn strict_sweep() {
        let spec = CampaignSpec::new(Theorem::Strict, Span::single(3), Some(Span::single(7)), 6);
        let r = run_campaign(&spec).unwrap();
        assert_eq!(r.sets, 1716);
        assert!(!r.falsified());
        assert!(r.min_slack.unwrap() >= 1);
    }

    #[test]
    fn jsonl_is_sorted_and_ends_with_summary() {
        let spec = CampaignSpec::new(Theorem::InverseN2, Span::single(2), Some(Span::single(3)), 3);
        let r = run_campaign(&spec).unwrap();
        let text = r.to_jsonl(false);
        let last: Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
        assert_eq!(last["kind"], "summary");
        assert_eq!(last["falsified"], false);
        assert!(last.get("elapsed_ms").is_none());
        for line in text.lines() {
            let v: Value = serde_json::from_str(line).unwrap();
            assert_eq!(v.to_string(), line);
        }
    }
}
