//! Exact rational arithmetic for toughness values and thresholds.
//!
//! Cut-set ratios and toughness bounds must never pass through floating
//! point; every comparison here is an exact integer computation.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A reduced fraction with positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rational {
    num: i64,
    den: i64,
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        Ok(Rational {
            num: sign * num / g,
            den: sign * den / g,
        })
    }

    pub fn integer(n: i64) -> Self {
        Rational { num: n, den: 1 }
    }

    pub fn zero() -> Self {
        Rational { num: 0, den: 1 }
    }

    /// Exact ratio `a / b` of two counts, `b > 0`.
    pub fn ratio(a: usize, b: usize) -> Self {
        Rational::new(a as i64, b as i64).expect("nonzero denominator")
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_negative(&self) -> bool {
        self.num < 0
    }

    pub fn add(&self, other: &Rational) -> Rational {
        Rational::new(
            self.num * other.den + other.num * self.den,
            self.den * other.den,
        )
        .expect("nonzero denominator")
    }

    pub fn mul_int(&self, k: i64) -> Rational {
        Rational::new(self.num * k, self.den).expect("nonzero denominator")
    }

    /// Compares `self` with the integer ratio `a / b` (`b > 0`) exactly.
    pub fn cmp_ratio(&self, a: i64, b: i64) -> Ordering {
        debug_assert!(b > 0);
        (self.num as i128 * b as i128).cmp(&(a as i128 * self.den as i128))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Accepts `"3"`, `"4/3"` and decimal literals such as `"0.5"`.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadRational(s.to_owned());
        let s = s.trim();
        if let Some((a, b)) = s.split_once('/') {
            let num: i64 = a.trim().parse().map_err(|_| bad())?;
            let den: i64 = b.trim().parse().map_err(|_| bad())?;
            return Rational::new(num, den);
        }
        if let Some((int, frac)) = s.split_once('.') {
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let negative = int.trim_start().starts_with('-');
            let whole: i64 = if int.is_empty() || int == "-" {
                0
            } else {
                int.parse().map_err(|_| bad())?
            };
            let digits: i64 = frac.parse().map_err(|_| bad())?;
            let scale = 10i64.checked_pow(frac.len() as u32).ok_or_else(bad)?;
            let frac_part = if negative { -digits } else { digits };
            return Rational::new(whole * scale + frac_part, scale);
        }
        let n: i64 = s.parse().map_err(|_| bad())?;
        Ok(Rational::integer(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_sign() {
        let r = Rational::new(4, -6).unwrap();
        assert_eq!((r.num(), r.den()), (-2, 3));
        assert_eq!(Rational::new(0, 5).unwrap(), Rational::zero());
    }

    #[test]
    fn exact_comparison() {
        let a = Rational::new(4, 3).unwrap();
        let b = Rational::new(133, 100).unwrap();
        assert!(a > b);
        assert_eq!(a.cmp_ratio(4, 3), Ordering::Equal);
        assert_eq!(a.cmp_ratio(3, 2), Ordering::Less);
    }

    #[test]
    fn parsing_forms() {
        assert_eq!("4/3".parse::<Rational>().unwrap(), Rational::new(4, 3).unwrap());
        assert_eq!("0.5".parse::<Rational>().unwrap(), Rational::new(1, 2).unwrap());
        assert_eq!("2".parse::<Rational>().unwrap(), Rational::integer(2));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn arithmetic() {
        let tau = Rational::new(4, 3).unwrap();
        let eps = Rational::new(1, 100).unwrap();
        assert_eq!(tau.add(&eps), Rational::new(403, 300).unwrap());
        assert_eq!(tau.mul_int(2), Rational::new(8, 3).unwrap());
    }
}
