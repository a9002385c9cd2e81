use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// A finite set of distinct integers, stored sorted ascending.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct IntegerSet {
    elements: Vec<i64>,
}

impl IntegerSet {
    /// Builds a set from arbitrary-order input. Duplicates are rejected.
    pub fn new(elements: impl IntoIterator<Item = i64>) -> Result<Self> {
        let mut elements: Vec<i64> = elements.into_iter().collect();
        elements.sort_unstable();
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(invalid(format!("duplicate element {}", w[0])));
        }
        Ok(Self { elements })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Caller guarantees `elements` is strictly increasing.
    pub(crate) fn from_sorted(elements: Vec<i64>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Self { elements }
    }

    #[inline]
    pub fn elements(&self) -> &[i64] {
        &self.elements
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: i64) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn min(&self) -> Option<i64> {
        self.elements.first().copied()
    }

    pub fn max(&self) -> Option<i64> {
        self.elements.last().copied()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = i64> + ExactSizeIterator + '_ {
        self.elements.iter().copied()
    }

    /// Positive `d` with both `d` and `-d` in the set, ascending.
    pub fn negation_pairs(&self) -> Vec<i64> {
        self.elements
            .iter()
            .copied()
            .filter(|&d| d > 0 && self.contains(-d))
            .collect()
    }

    /// Number of distinct absolute values.
    pub fn abs_classes(&self) -> usize {
        self.len() - self.negation_pairs().len()
    }

    pub fn negatives(&self) -> usize {
        self.elements.partition_point(|&x| x < 0)
    }

    pub fn positives(&self) -> usize {
        self.len() - self.elements.partition_point(|&x| x <= 0)
    }

    pub fn max_abs(&self) -> u64 {
        self.elements
            .iter()
            .map(|x| x.unsigned_abs())
            .max()
            .unwrap_or(0)
    }

    pub fn without(&self, x: i64) -> Self {
        Self::from_sorted(self.iter().filter(|&y| y != x).collect())
    }

    pub fn with(&self, x: i64) -> Result<Self> {
        Self::new(self.iter().chain(std::iter::once(x)))
    }

    pub fn transform(&self, kind: Transform) -> Result<Self> {
        match kind {
            Transform::Dilate(0) => Err(invalid("dilation factor must be nonzero")),
            Transform::Dilate(l) => self.map_checked(|x| x.checked_mul(l)),
            Transform::Negate => self.map_checked(|x| x.checked_neg()),
            Transform::Translate(t) => self.map_checked(|x| x.checked_add(t)),
        }
    }

    pub fn dilate(&self, factor: i64) -> Result<Self> {
        self.transform(Transform::Dilate(factor))
    }

    pub fn negate(&self) -> Self {
        // i64::MIN has no negation; every other set maps cleanly.
        self.transform(Transform::Negate)
            .expect("negating a set containing i64::MIN")
    }

    pub fn translate(&self, t: i64) -> Result<Self> {
        self.transform(Transform::Translate(t))
    }

    fn map_checked(&self, f: impl Fn(i64) -> Option<i64>) -> Result<Self> {
        let mapped = self
            .iter()
            .map(|x| f(x).ok_or_else(|| invalid(format!("overflow transforming {x}"))))
            .collect::<Result<Vec<_>>>()?;
        // Affine images of a set are injective, so no duplicates can appear.
        Self::new(mapped)
    }
}

/// Elementwise affine maps used for invariance checks.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Transform {
    Dilate(i64),
    Negate,
    Translate(i64),
}

impl fmt::Display for IntegerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// Parses comma-separated integers; surrounding braces and whitespace are ignored.
impl FromStr for IntegerSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('{').trim_end_matches('}').trim();
        if body.is_empty() {
            return Ok(Self::empty());
        }
        let values = body
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<i64>()
                    .map_err(|_| invalid(format!("not an integer: {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(values)
    }
}

impl TryFrom<Vec<i64>> for IntegerSet {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<IntegerSet> for Vec<i64> {
    fn from(s: IntegerSet) -> Self {
        s.elements
    }
}

/// Shorthand used throughout the tests: `set(&[-1, 1, 4])`.
pub fn set(xs: &[i64]) -> IntegerSet {
    IntegerSet::new(xs.iter().copied()).expect("duplicate element in literal")
}
