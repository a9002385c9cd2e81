use crate::error::{invalid, Result};
use crate::set::IntegerSet;

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Representative of `A` under dilation and negation: divide by the gcd of
/// the elements, then keep the lexicographically smaller of the result and
/// its negation.
pub fn canonicalize(a: &IntegerSet) -> Result<IntegerSet> {
    let g = a.iter().fold(0u64, |g, x| gcd(g, x.unsigned_abs()));
    if g == 0 {
        return Err(invalid("canonical form needs a nonzero element"));
    }
    let reduced = IntegerSet::from_sorted(a.iter().map(|x| x / g as i64).collect());
    let negated = reduced.negate();
    Ok(if negated.elements() < reduced.elements() {
        negated
    } else {
        reduced
    })
}

/// Representative under translation, dilation and reflection: shift the
/// minimum to 0, divide by the gcd, and keep the smaller of the set and its
/// mirror image `max - x`.
pub fn canonicalize_affine(a: &IntegerSet) -> Result<IntegerSet> {
    let min = a.min().ok_or_else(|| invalid("canonical form of an empty set"))?;
    let shifted = a.translate(-min)?;
    if shifted.len() == 1 {
        return Ok(shifted);
    }
    let g = shifted.iter().fold(0u64, |g, x| gcd(g, x.unsigned_abs()));
    let reduced = IntegerSet::from_sorted(shifted.iter().map(|x| x / g as i64).collect());
    let top = reduced.max().expect("nonempty");
    let mirrored = IntegerSet::new(reduced.iter().map(|x| top - x))?;
    Ok(if mirrored.elements() < reduced.elements() {
        mirrored
    } else {
        reduced
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::set;

    #[test]
    fn examples() {
        assert_eq!(canonicalize(&set(&[-2, 2, 4])).unwrap(), set(&[-2, -1, 1]));
        assert_eq!(canonicalize(&set(&[-1, 1, 2])).unwrap(), set(&[-2, -1, 1]));
        assert_eq!(canonicalize(&set(&[-3, 3])).unwrap(), set(&[-1, 1]));
        assert!(canonicalize(&set(&[0])).is_err());
        assert!(canonicalize(&IntegerSet::empty()).is_err());
    }

    #[test]
    fn affine_examples() {
        assert_eq!(canonicalize_affine(&set(&[3, 5, 7, 9])).unwrap(), set(&[0, 1, 2, 3]));
        assert_eq!(canonicalize_affine(&set(&[0, 1, 3])).unwrap(), set(&[0, 1, 3]));
        assert_eq!(canonicalize_affine(&set(&[0, 2, 3])).unwrap(), set(&[0, 1, 3]));
    }
}
