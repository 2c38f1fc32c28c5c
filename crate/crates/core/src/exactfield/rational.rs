use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::Field;
use crate::error::{Error, Result};

pub const DEFAULT_FACTOR_BOUND: u64 = 10_000_000;

fn factor_bound_from_env() -> u64 {
    std::env::var("GDA_FACTOR_BOUND")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_FACTOR_BOUND)
}

/// Factors `n > 0` by trial division up to `bound`.
///
/// A cofactor left after trial division is accepted as prime only when it is
/// below `bound^2`; otherwise the bound is reported as exceeded.
pub fn factor_biguint(n: &BigUint, bound: u64) -> Result<Vec<(BigUint, u32)>> {
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut d = 2u64;
    while d <= bound {
        let bd = BigUint::from(d);
        if &bd * &bd > n {
            break;
        }
        let mut e = 0;
        while (&n % &bd).is_zero() {
            n /= &bd;
            e += 1;
        }
        if e > 0 {
            out.push((bd, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > BigUint::one() {
        let bb = BigUint::from(bound);
        let dd = BigUint::from(d);
        if &dd * &dd <= n && n >= &bb * &bb {
            return Err(Error::FactorBound {
                value: n.to_string(),
                bound,
            });
        }
        out.push((n, 1));
    }
    Ok(out)
}

/// Signed prime factorization of a nonzero rational: `(sign, [(p, e)])` with `e` possibly negative.
pub fn factor_rational(x: &BigRational, bound: u64) -> Result<(i8, Vec<(BigUint, i64)>)> {
    if x.is_zero() {
        return Err(Error::ZeroElement("factorization"));
    }
    let sign = if x.is_negative() { -1 } else { 1 };
    let mut out: Vec<(BigUint, i64)> = Vec::new();
    for (p, e) in factor_biguint(x.numer().magnitude(), bound)? {
        out.push((p, e as i64));
    }
    for (p, e) in factor_biguint(x.denom().magnitude(), bound)? {
        out.push((p, -(e as i64)));
    }
    out.sort();
    Ok((sign, out))
}

fn rational_pow_class(x: &BigRational, n: u64, bound: u64) -> Result<(bool, BigRational)> {
    let (sign, fac) = factor_rational(x, bound)?;
    let mut rep = BigInt::one();
    let mut perfect = true;
    for (p, e) in fac {
        let r = e.rem_euclid(n as i64) as u32;
        if r != 0 {
            perfect = false;
            rep *= BigInt::from(p).pow(r);
        }
    }
    let negative = sign < 0 && n % 2 == 0;
    if negative {
        perfect = false;
        rep = -rep;
    }
    Ok((perfect, BigRational::from_integer(rep)))
}

/// Exact rational `n`-th root when one exists.
fn rational_root(x: &BigRational, n: u64) -> Option<BigRational> {
    if n % 2 == 0 && x.is_negative() {
        return None;
    }
    let root = |v: &BigInt| -> Option<BigInt> {
        let r = v.magnitude().nth_root(n as u32);
        (r.pow(n as u32) == *v.magnitude()).then(|| BigInt::from_biguint(v.sign().max(Sign::Plus), r))
    };
    let num = root(x.numer())?;
    let den = root(x.denom())?;
    let r = BigRational::new(num, den);
    Some(if x.is_negative() { -r } else { r })
}

pub fn rational_to_string(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_rational(v: &Value) -> Result<BigRational> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|i| BigRational::from_integer(i.into()))
            .ok_or_else(|| Error::Descriptor(format!("rational must be an integer or \"p/q\": {n}"))),
        Value::String(s) => {
            let s = s.trim();
            let bad = || Error::Descriptor(format!("malformed rational {s:?}"));
            match s.split_once('/') {
                None => Ok(BigRational::from_integer(
                    BigInt::from_str(s).map_err(|_| bad())?,
                )),
                Some((a, b)) => {
                    let a = BigInt::from_str(a.trim()).map_err(|_| bad())?;
                    let b = BigInt::from_str(b.trim()).map_err(|_| bad())?;
                    if b.is_zero() {
                        return Err(bad());
                    }
                    Ok(BigRational::new(a, b))
                }
            }
        }
        _ => Err(Error::Descriptor(format!("expected rational, got {v}"))),
    }
}

macro_rules! rational_arith {
    () => {
        type Elem = BigRational;

        fn zero(&self) -> BigRational {
            BigRational::zero()
        }
        fn one(&self) -> BigRational {
            BigRational::one()
        }
        fn from_int(&self, n: i64) -> BigRational {
            BigRational::from_integer(n.into())
        }
        fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
            a + b
        }
        fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
            a - b
        }
        fn neg(&self, a: &BigRational) -> BigRational {
            -a
        }
        fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
            a * b
        }
        fn inv(&self, a: &BigRational) -> Result<BigRational> {
            if a.is_zero() {
                Err(Error::ZeroElement("inverse"))
            } else {
                Ok(a.recip())
            }
        }
        fn is_zero(&self, a: &BigRational) -> bool {
            a.is_zero()
        }
        fn characteristic(&self) -> u64 {
            0
        }
        fn roots_of_unity_count(&self) -> u64 {
            2
        }
        fn root_of_unity(&self, n: u64) -> Option<BigRational> {
            match n {
                1 => Some(self.one()),
                2 => Some(-self.one()),
                _ => None,
            }
        }
        fn elem_to_json(&self, a: &BigRational) -> Value {
            Value::String(rational_to_string(a))
        }
        fn elem_from_json(&self, v: &Value) -> Result<BigRational> {
            parse_rational(v)
        }
        fn fmt_elem(&self, a: &BigRational) -> String {
            rational_to_string(a)
        }
        fn sign(&self, a: &BigRational) -> Option<i8> {
            Some(if a.is_zero() {
                0
            } else if a.is_negative() {
                -1
            } else {
                1
            })
        }
    };
}

/// The rational numbers with arithmetic power classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rationals {
    pub factor_bound: u64,
}

impl Default for Rationals {
    /// Reads the trial-division bound from `GDA_FACTOR_BOUND`.
    fn default() -> Self {
        Rationals {
            factor_bound: factor_bound_from_env(),
        }
    }
}

impl Rationals {
    pub fn with_bound(factor_bound: u64) -> Self {
        Rationals { factor_bound }
    }

    pub fn int(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    /// Square-free part of a nonzero rational, as sign and ascending primes.
    pub fn squarefree_part(&self, x: &BigRational) -> Result<(i8, Vec<BigUint>)> {
        let (sign, fac) = factor_rational(x, self.factor_bound)?;
        Ok((
            sign,
            fac.into_iter()
                .filter(|(_, e)| e.rem_euclid(2) == 1)
                .map(|(p, _)| p)
                .collect(),
        ))
    }
}

impl Field for Rationals {
    rational_arith!();

    fn is_nth_power(&self, x: &BigRational, n: u64) -> Result<bool> {
        Ok(rational_pow_class(x, n, self.factor_bound)?.0)
    }

    fn nth_power_class(&self, x: &BigRational, n: u64) -> Result<BigRational> {
        Ok(rational_pow_class(x, n, self.factor_bound)?.1)
    }

    fn nth_roots(&self, x: &BigRational, n: u64) -> Result<Vec<BigRational>> {
        if x.is_zero() {
            return Err(Error::ZeroElement("nth_roots"));
        }
        Ok(match rational_root(x, n) {
            None => vec![],
            Some(r) if n % 2 == 0 => vec![-r.clone(), r],
            Some(r) => vec![r],
        })
    }

    fn descriptor(&self) -> Value {
        json!({"kind": "Q"})
    }
}

/// The real numbers, restricted to exact rational elements.
///
/// Power classes follow real semantics: `x` is an `n`-th power iff `n` is odd or
/// `x > 0`, so classes are represented by `±1`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Reals;

impl Field for Reals {
    rational_arith!();

    fn is_nth_power(&self, x: &BigRational, n: u64) -> Result<bool> {
        if x.is_zero() {
            return Err(Error::ZeroElement("is_nth_power"));
        }
        Ok(n % 2 == 1 || x.is_positive())
    }

    fn nth_power_class(&self, x: &BigRational, n: u64) -> Result<BigRational> {
        Ok(if self.is_nth_power(x, n)? {
            self.one()
        } else {
            -self.one()
        })
    }

    /// Real roots of `x`; errors when a real root exists but is irrational.
    fn nth_roots(&self, x: &BigRational, n: u64) -> Result<Vec<BigRational>> {
        if !self.is_nth_power(x, n)? {
            return Ok(vec![]);
        }
        match rational_root(x, n) {
            Some(r) if n % 2 == 0 => Ok(vec![-r.clone(), r]),
            Some(r) => Ok(vec![r]),
            None => Err(Error::Unsupported(format!(
                "real {n}-th root of {} is not rational",
                rational_to_string(x)
            ))),
        }
    }

    fn descriptor(&self) -> Value {
        json!({"kind": "R"})
    }

    fn is_normalized_constant(&self, c: &BigRational) -> bool {
        c.is_zero() || (c.is_integer() && c.numer().magnitude().is_one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rational_power_tests() {
        let q = Rationals::default();
        assert!(q.is_nth_power(&r(1, 1), 5).unwrap());
        assert!(!q.is_nth_power(&r(8, 1), 2).unwrap());
        assert!(q.is_nth_power(&r(4, 1), 2).unwrap());
        assert!(q.is_nth_power(&r(-8, 27), 3).unwrap());
        assert!(!q.is_nth_power(&r(-4, 1), 2).unwrap());
        assert_eq!(q.nth_power_class(&r(8, 1), 2).unwrap(), r(2, 1));
        assert_eq!(q.nth_power_class(&r(1, 2), 2).unwrap(), r(2, 1));
        assert_eq!(q.nth_power_class(&r(-12, 1), 2).unwrap(), r(-3, 1));
        assert_eq!(q.nth_power_class(&r(-16, 1), 3).unwrap(), r(2, 1));
        assert!(q.is_nth_power(&r(0, 1), 2).is_err());
        assert_eq!(q.nth_roots(&r(9, 4), 2).unwrap(), vec![r(-3, 2), r(3, 2)]);
    }

    #[test]
    fn factor_bound_is_enforced() {
        let q = Rationals::with_bound(10);
        // 1009 * 1013 has no factor below 10 and exceeds 10^2.
        let big = r(1009 * 1013, 1);
        assert!(matches!(q.is_nth_power(&big, 2), Err(Error::FactorBound { .. })));
        assert!(!q.is_nth_power(&r(97, 1), 2).unwrap());
    }

    #[test]
    fn real_power_classes() {
        let f = Reals;
        assert!(f.is_nth_power(&r(2, 1), 2).unwrap());
        assert!(!f.is_nth_power(&r(-2, 1), 4).unwrap());
        assert!(f.is_nth_power(&r(-2, 1), 3).unwrap());
        assert_eq!(f.nth_power_class(&r(-5, 3), 2).unwrap(), r(-1, 1));
        assert_eq!(f.nth_roots(&r(1, 1), 4).unwrap(), vec![r(-1, 1), r(1, 1)]);
        assert!(f.nth_roots(&r(2, 1), 2).is_err());
    }

    #[test]
    fn json_round_trip() {
        let q = Rationals::default();
        for x in [r(3, 7), r(-2, 1), r(0, 1)] {
            assert_eq!(q.elem_from_json(&q.elem_to_json(&x)).unwrap(), x);
        }
        assert_eq!(q.elem_to_json(&r(-3, 6)), Value::String("-1/2".into()));
        assert!(parse_rational(&json!("1/0")).is_err());
    }
}
