use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::set::IntegerSet;

/// Monic integer polynomial, coefficients stored constant term first.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct MonicPolynomial {
    coefficients: Vec<i64>,
}

impl MonicPolynomial {
    pub fn new(coefficients: Vec<i64>) -> Result<Self> {
        if coefficients.len() < 2 {
            return Err(invalid("polynomial degree must be at least 1"));
        }
        if coefficients.last() != Some(&1) {
            return Err(invalid("polynomial must be monic (leading coefficient 1)"));
        }
        Ok(Self { coefficients })
    }

    /// `x`
    pub fn identity() -> Self {
        Self {
            coefficients: vec![0, 1],
        }
    }

    /// `x^2`
    pub fn square() -> Self {
        Self {
            coefficients: vec![0, 0, 1],
        }
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    /// Exact Horner evaluation; `None` on i128 overflow.
    pub fn eval(&self, x: i64) -> Option<i128> {
        let x = x as i128;
        self.coefficients
            .iter()
            .rev()
            .try_fold(0i128, |acc, &c| acc.checked_mul(x)?.checked_add(c as i128))
    }

    pub(crate) fn key(&self, x: i64) -> Result<i128> {
        self.eval(x)
            .ok_or_else(|| invalid(format!("polynomial value overflows at {x}")))
    }
}

impl fmt::Display for MonicPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coefficients.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for MonicPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| invalid(format!("bad coefficient {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(coeffs)
    }
}

impl TryFrom<Vec<i64>> for MonicPolynomial {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<MonicPolynomial> for Vec<i64> {
    fn from(p: MonicPolynomial) -> Self {
        p.coefficients
    }
}

/// Elements grouped by the value of a key polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KeyClass {
    pub key: i128,
    pub members: Vec<i64>,
}

/// Partition of a set by equal key value, classes in ascending key order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassDecomposition {
    pub classes: Vec<KeyClass>,
}

impl ClassDecomposition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

pub fn decompose(a: &IntegerSet, key: &MonicPolynomial) -> Result<ClassDecomposition> {
    let mut by_key: BTreeMap<i128, Vec<i64>> = BTreeMap::new();
    for x in a.iter() {
        by_key.entry(key.key(x)?).or_default().push(x);
    }
    Ok(ClassDecomposition {
        classes: by_key
            .into_iter()
            .map(|(key, members)| KeyClass { key, members })
            .collect(),
    })
}
