//! Arbitrary-precision rationals and small helpers.
//!
//! `Rat` is `num_rational::BigRational`: always reduced, positive
//! denominator. Everything downstream relies on that normalization for
//! canonical serialization.

use alloc::string::{String, ToString};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;

/// `n` as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d` as a rational (reduced).
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"3/2"`, `"-7"`, `"0"` style rationals.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rat::new(n, d))
        }
        None => Some(Rat::from_integer(s.parse().ok()?)),
    }
}

/// Canonical text form (`-3/2`, `5`).
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        let mut s = r.numer().to_string();
        s.push('/');
        s.push_str(&r.denom().to_string());
        s
    }
}

/// Generalized binomial coefficient `alpha(alpha-1)...(alpha-n+1)/n!`.
pub fn binomial_alpha(alpha: &Rat, n: u64) -> Rat {
    let mut num = Rat::one();
    for k in 0..n {
        num *= alpha - rat(k as i64);
        num /= rat((k + 1) as i64);
    }
    num
}

/// `n!` as a rational.
pub fn factorial(n: u64) -> Rat {
    let mut f = BigInt::one();
    for k in 2..=n {
        f *= BigInt::from(k);
    }
    Rat::from_integer(f)
}

/// Integer binomial coefficient as a rational.
pub fn binomial(n: u64, k: u64) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k.min(n - k) {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    Rat::new(num, den)
}

/// `2^k` as a rational, `k` possibly negative.
pub fn pow2(k: i64) -> Rat {
    let p = Rat::from_integer(BigInt::from(2));
    let mut out = Rat::one();
    for _ in 0..k.unsigned_abs() {
        out *= &p;
    }
    if k < 0 {
        out.recip()
    } else {
        out
    }
}

/// Exact rational square root, if one exists.
pub fn sqrt_exact(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rat::new(n, d))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["3/2", "-7", "0", "22/7"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(rat_to_string(&r), s);
        }
        assert_eq!(rat_to_string(&parse_rat("4/2").unwrap()), "2");
        assert!(parse_rat("1/0").is_none());
    }

    #[test]
    fn binomial_minus_half() {
        // binom(-1/2, 1) = -1/2, binom(-1/2, 2) = 3/8
        assert_eq!(binomial_alpha(&ratio(-1, 2), 1), ratio(-1, 2));
        assert_eq!(binomial_alpha(&ratio(-1, 2), 2), ratio(3, 8));
    }

    #[test]
    fn exact_sqrt() {
        assert_eq!(sqrt_exact(&ratio(9, 4)), Some(ratio(3, 2)));
        assert_eq!(sqrt_exact(&rat(2)), None);
        assert_eq!(sqrt_exact(&rat(-4)), None);
    }
}
