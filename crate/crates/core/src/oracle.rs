//! Naive enumeration used as an independent reference for the DPs.

use std::collections::BTreeSet;

use crate::error::{invalid, Error, Result};
use crate::poly::MonicPolynomial;
use crate::set::IntegerSet;
use crate::sumset::SumSet;

pub const ORACLE_MAX_SET: usize = 14;
pub const ORACLE_MAX_N: usize = 6;

#[derive(Clone, Debug)]
pub enum Constraint {
    Distinct,
    Squares,
    Poly(MonicPolynomial),
}

fn guard(sizes: impl IntoIterator<Item = usize>, n: usize) -> Result<()> {
    if n == 0 {
        return Err(invalid("n must be at least 1"));
    }
    if n > ORACLE_MAX_N {
        return Err(Error::Refused(format!("oracle limited to n <= {ORACLE_MAX_N}")));
    }
    if sizes.into_iter().any(|s| s > ORACLE_MAX_SET) {
        return Err(Error::Refused(format!(
            "oracle limited to sets of at most {ORACLE_MAX_SET} elements"
        )));
    }
    Ok(())
}

fn admissible(chosen: &[i64], constraint: &Constraint) -> bool {
    let keys: Vec<i128> = chosen
        .iter()
        .map(|&x| match constraint {
            Constraint::Distinct => x as i128,
            Constraint::Squares => (x as i128) * (x as i128),
            Constraint::Poly(p) => p.eval(x).expect("oracle input overflows polynomial"),
        })
        .collect();
    let unique: BTreeSet<i128> = keys.iter().copied().collect();
    unique.len() == keys.len()
}

/// Every `n`-element combination of `A` whose members satisfy the constraint.
pub fn brute_oracle(a: &IntegerSet, n: usize, constraint: &Constraint) -> Result<SumSet> {
    guard([a.len()], n)?;
    let xs = a.elements();
    let mut sums = Vec::new();
    let mut idx: Vec<usize> = (0..n).collect();
    if n > xs.len() {
        return Ok(SumSet::empty());
    }
    loop {
        let chosen: Vec<i64> = idx.iter().map(|&i| xs[i]).collect();
        if admissible(&chosen, constraint) {
            sums.push(chosen.iter().sum());
        }
        // Advance to the next combination in lexicographic order.
        let Some(pos) = (0..n).rev().find(|&p| idx[p] < xs.len() - n + p) else {
            break;
        };
        idx[pos] += 1;
        for q in pos + 1..n {
            idx[q] = idx[q - 1] + 1;
        }
    }
    SumSet::from_values(sums)
}

/// Every tuple `(a_1, .., a_n)` in `A_1 x .. x A_n` satisfying the constraint.
pub fn brute_oracle_families(families: &[IntegerSet], constraint: &Constraint) -> Result<SumSet> {
    guard(families.iter().map(IntegerSet::len), families.len())?;
    if families.iter().any(IntegerSet::is_empty) {
        return Err(invalid("families must be nonempty"));
    }
    let mut sums = Vec::new();
    let mut idx = vec![0usize; families.len()];
    'outer: loop {
        let chosen: Vec<i64> = idx
            .iter()
            .zip(families)
            .map(|(&i, f)| f.elements()[i])
            .collect();
        if admissible(&chosen, constraint) {
            sums.push(chosen.iter().sum());
        }
        for p in (0..idx.len()).rev() {
            idx[p] += 1;
            if idx[p] < families[p].len() {
                continue 'outer;
            }
            idx[p] = 0;
        }
        break;
    }
    SumSet::from_values(sums)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::set;

    #[test]
    fn oracle_golden() {
        let s = brute_oracle(&set(&[-1, 1, -4, 4, 6]), 3, &Constraint::Squares).unwrap();
        assert_eq!(s.to_vec(), vec![1, 3, 9, 11]);
        let s = brute_oracle(&set(&[0, 1, 2, 3]), 2, &Constraint::Distinct).unwrap();
        assert_eq!(s.to_vec(), vec![1, 2, 3, 4, 5]);
        assert!(brute_oracle(&set(&[-2, 2]), 2, &Constraint::Squares).unwrap().is_empty());
    }

    #[test]
    fn families_enumerate_all_nine_pairs() {
        let f = set(&[0, 1, 2]);
        let s = brute_oracle_families(&[f.clone(), f], &Constraint::Squares).unwrap();
        assert_eq!(s.to_vec(), vec![1, 2, 3]);
    }

    #[test]
    fn guards_refuse() {
        let big = IntegerSet::new(0..15).unwrap();
        assert!(matches!(brute_oracle(&big, 2, &Constraint::Distinct), Err(Error::Refused(_))));
        let a = set(&[1, 2, 3, 4, 5, 6, 7]);
        assert!(matches!(brute_oracle(&a, 7, &Constraint::Distinct), Err(Error::Refused(_))));
    }
}
