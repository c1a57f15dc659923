//! Scalar type and small helpers.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratq(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders a rational as "n" or "n/d".
pub fn rat_to_string(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses "n" or "n/d".
pub fn rat_from_str(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(BigRational::from_integer(n))
        }
    }
}

/// Integer value of a rational, if it is one.
pub fn rat_as_i64(x: &Rat) -> Option<i64> {
    if x.denom().is_one() {
        let n = x.numer();
        let v: i64 = n.try_into().ok()?;
        Some(v)
    } else {
        None
    }
}

pub fn is_nonneg_integer(x: &Rat) -> bool {
    x.denom().is_one() && !x.numer().is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["0", "5", "-3", "7/2", "-11/4"] {
            let x = rat_from_str(s).unwrap();
            assert_eq!(rat_to_string(&x), s);
        }
        assert!(rat_from_str("1/0").is_none());
        assert!(rat_from_str("x").is_none());
    }

    #[test]
    fn integer_extraction() {
        assert_eq!(rat_as_i64(&rat(-9)), Some(-9));
        assert_eq!(rat_as_i64(&ratq(1, 2)), None);
    }
}
