//! Exact rational scalars and the small integer combinatorics used in
//! change-of-basis coefficients.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::{Error, Result};

/// The scalar type of the whole crate: an arbitrary-precision rational.
pub type Rat = BigRational;

/// `n` as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `p/q` as a rational. Panics on `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// `(-1)^k` as a rational.
pub fn sign(k: i64) -> Rat {
    if k.rem_euclid(2) == 0 {
        Rat::one()
    } else {
        -Rat::one()
    }
}

/// Binomial coefficient `C(n, k)` as a big integer; zero for `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Render a rational as `p/q`, omitting `/q` when the denominator is 1.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `p` or `p/q` (optionally signed) into a rational.
pub fn parse_rat(text: &str) -> Result<Rat> {
    let parse_int = |s: &str| -> Result<BigInt> {
        s.parse::<BigInt>().map_err(|_| Error::Parse {
            pos: 0,
            msg: format!("expected an integer, found {s:?}"),
        })
    };
    match text.split_once('/') {
        Some((p, q)) => {
            let num = parse_int(p.trim())?;
            let den = parse_int(q.trim())?;
            if den.is_zero() {
                return Err(Error::Parse {
                    pos: 0,
                    msg: "zero denominator".into(),
                });
            }
            Ok(Rat::new(num, den))
        }
        None => Ok(Rat::from_integer(parse_int(text.trim())?)),
    }
}

/// True when the rational is a nonnegative integer.
pub fn is_nonneg_integer(r: &Rat) -> bool {
    r.denom().is_one() && !r.numer().is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(binomial(50, 25), "126410606437752".parse().unwrap());
    }

    #[test]
    fn format_and_parse_round_trip() {
        for s in ["3", "-3", "3/4", "-7/2", "0"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
        // Non-canonical inputs reduce.
        assert_eq!(format_rat(&parse_rat("4/2").unwrap()), "2");
        assert_eq!(format_rat(&parse_rat("2/-4").unwrap()), "-1/2");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }
}
