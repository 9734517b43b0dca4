//! Rational helpers on top of `num::BigRational`.

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Parses `"p/q"` or an integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Renders as `"p"` or `"p/q"`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Rising factorial `(x)_k = x (x+1) ... (x+k-1)`.
pub fn rising(x: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    let mut t = x.clone();
    for _ in 0..k {
        acc *= &t;
        t += Rational::one();
    }
    acc
}

pub fn factorial(k: u32) -> Rational {
    rising(&Rational::one(), k)
}

pub fn pow(x: &Rational, e: i32) -> Rational {
    num::pow::Pow::pow(x, e)
}

/// Coefficients of `(1 - t)^{-c} = sum_k (c)_k / k! t^k` up to `t^k_max`.
pub fn series_binomial(c: &Rational, k_max: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(k_max + 1);
    let mut term = Rational::one();
    for k in 0..=k_max {
        out.push(term.clone());
        term = term * (c + int(k as i64)) / int(k as i64 + 1);
    }
    out
}

/// Generalized binomial coefficient `binom(x, k)` for rational `x`.
pub fn binomial(x: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    for j in 0..k {
        acc = acc * (x - int(j as i64)) / int(j as i64 + 1);
    }
    acc
}

pub fn sign_pow(k: u32) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `Some(k)` when `r` is a positive integer.
pub fn positive_integer(r: &Rational) -> Option<u32> {
    (r.is_integer() && r.is_positive()).then(|| r.to_integer().to_u32()).flatten()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["1", "7/5", "-3/4", "0"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(parse_rational("4/2").unwrap(), int(2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn half_power_series() {
        assert_eq!(series_binomial(&rat(1, 2), 2), vec![int(1), rat(1, 2), rat(3, 8)]);
    }

    #[test]
    fn rising_factorials() {
        assert_eq!(rising(&int(3), 0), int(1));
        assert_eq!(rising(&int(3), 3), int(60));
        assert_eq!(rising(&int(-1), 2), int(0));
        assert_eq!(binomial(&int(5), 2), int(10));
        assert_eq!(binomial(&rat(1, 2), 2), rat(-1, 8));
    }
}
