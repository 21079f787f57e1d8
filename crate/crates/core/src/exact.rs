//! Exact rational scalars and extended exponents.
//!
//! Regime boundaries (scale criticality, integrability criticality) are exact
//! equalities between rational expressions of the input parameters, so every
//! comparison that decides a regime is carried out in `BigRational` arithmetic.
//! Floating-point inputs are converted through their exact dyadic value, never
//! rounded. The only irrational boundary in the whole parameter logic is
//! `gamma <= sqrt(3) - 1` (supercritical window at d = 3), which is compared in
//! `f64` with a user tolerance.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::str::FromStr;

pub type Rat = BigRational;

/// Shorthand for a small rational constant.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Exact dyadic rational carried by a finite `f64`.
pub fn rat_from_f64(x: f64) -> Option<Rat> {
    Rat::from_float(x)
}

pub fn rat_to_f64(x: &Rat) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Parse "3", "-1", "3/2", "0.75" into an exact rational.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|e| format!("bad numerator {n:?}: {e}"))?;
        let d = BigInt::from_str(d.trim()).map_err(|e| format!("bad denominator {d:?}: {e}"))?;
        if d.is_zero() {
            return Err("zero denominator".into());
        }
        return Ok(Rat::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let sign = if int.trim_start().starts_with('-') { -1 } else { 1 };
        let i = if int.is_empty() || int == "-" {
            BigInt::zero()
        } else {
            BigInt::from_str(int).map_err(|e| format!("bad number {s:?}: {e}"))?
        };
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let f = if frac.is_empty() {
            BigInt::zero()
        } else {
            BigInt::from_str(frac).map_err(|e| format!("bad number {s:?}: {e}"))?
        };
        let abs = i.magnitude().clone() * scale.magnitude().clone() + f.magnitude().clone();
        let v = Rat::new(BigInt::from(abs), scale);
        return Ok(if sign < 0 { -v } else { v });
    }
    let n = BigInt::from_str(s).map_err(|e| format!("bad number {s:?}: {e}"))?;
    Ok(Rat::from_integer(n))
}

/// An integrability exponent that may be infinite. `1/inf = 0` throughout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Exp {
    Finite(Rat),
    Inf,
}

impl Exp {
    pub fn finite(v: Rat) -> Self {
        Exp::Finite(v)
    }

    pub fn from_int(n: i64) -> Self {
        Exp::Finite(rat_int(n))
    }

    pub fn is_inf(&self) -> bool {
        matches!(self, Exp::Inf)
    }

    pub fn as_finite(&self) -> Option<&Rat> {
        match self {
            Exp::Finite(v) => Some(v),
            Exp::Inf => None,
        }
    }

    /// 1/q with the convention 1/inf = 0. Panics on a zero finite exponent.
    pub fn recip(&self) -> Rat {
        match self {
            Exp::Finite(v) => {
                assert!(!v.is_zero(), "reciprocal of zero exponent");
                v.recip()
            }
            Exp::Inf => Rat::zero(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Exp::Finite(v) => rat_to_f64(v),
            Exp::Inf => f64::INFINITY,
        }
    }

    pub fn parse(s: &str) -> Result<Self, String> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf")
            || t.eq_ignore_ascii_case("infinity")
            || t == "∞"
            || t.eq_ignore_ascii_case("oo")
        {
            return Ok(Exp::Inf);
        }
        parse_rat(t).map(Exp::Finite)
    }
}

impl PartialOrd for Exp {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        use std::cmp::Ordering::*;
        Some(match (self, other) {
            (Exp::Inf, Exp::Inf) => Equal,
            (Exp::Inf, Exp::Finite(_)) => Greater,
            (Exp::Finite(_), Exp::Inf) => Less,
            (Exp::Finite(a), Exp::Finite(b)) => a.cmp(b),
        })
    }
}

impl fmt::Display for Exp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exp::Finite(v) => {
                if v.is_integer() {
                    write!(f, "{}", v.numer())
                } else {
                    write!(f, "{}/{}", v.numer(), v.denom())
                }
            }
            Exp::Inf => write!(f, "inf"),
        }
    }
}

pub fn fmt_rat(v: &Rat) -> String {
    if v.is_integer() {
        format!("{}", v.numer())
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// Sign of a rational as -1, 0, 1.
pub fn rat_sign(v: &Rat) -> i32 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rat("3/2").unwrap(), rat(3, 2));
        assert_eq!(parse_rat("-0.25").unwrap(), rat(-1, 4));
        assert_eq!(parse_rat("10").unwrap(), rat_int(10));
        assert_eq!(parse_rat("-7/3").unwrap(), rat(-7, 3));
        assert!(parse_rat("1/0").is_err());
    }

    #[test]
    fn exp_parse_and_order() {
        assert_eq!(Exp::parse("inf").unwrap(), Exp::Inf);
        assert_eq!(Exp::parse("4").unwrap(), Exp::from_int(4));
        assert!(Exp::Inf > Exp::from_int(1000));
        assert_eq!(Exp::Inf.recip(), Rat::zero());
        assert_eq!(Exp::from_int(4).recip(), rat(1, 4));
    }

    #[test]
    fn dyadic_f64_roundtrip_is_exact() {
        let x = 0.1_f64;
        let r = rat_from_f64(x).unwrap();
        assert_eq!(rat_to_f64(&r), x);
    }
}
