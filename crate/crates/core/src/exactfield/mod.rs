//! Exact coefficient fields.
//!
//! Every downstream construction is written against [`Field`], a context object
//! that owns whatever tables a field needs and operates on plain element values.

mod any;
mod cyclotomic;
mod finite;
pub mod poly;
mod rational;

use std::fmt::Debug;
use std::hash::Hash;

use serde_json::Value;

use crate::arith::{divisors, gcd};
use crate::error::{Error, Result};

pub use any::{AnyElem, AnyField};
pub use cyclotomic::{cyclotomic_embed, cyclotomic_polynomial, CyclotomicField};
pub use finite::{ff_construct, is_irreducible_mod_p, Embedding, FiniteField, MAX_ORDER};
pub use rational::{parse_rational, rational_to_string, Rationals, Reals, DEFAULT_FACTOR_BOUND};

pub trait Field: Clone + Debug + Send + Sync {
    type Elem: Clone + Eq + Hash + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn characteristic(&self) -> u64;

    /// Number of roots of unity in the field; every `root_of_unity(n)` has `n | W`.
    fn roots_of_unity_count(&self) -> u64;

    /// Designated primitive `n`-th root of unity.
    ///
    /// The family is compatible: `root_of_unity(n)^(n/d) == root_of_unity(d)`.
    fn root_of_unity(&self, n: u64) -> Option<Self::Elem>;

    /// Whether `x = y^n` for some `y` in the field. Errors on zero.
    fn is_nth_power(&self, x: &Self::Elem, n: u64) -> Result<bool>;

    /// Canonical representative `r` of the coset `x·(F^×)^n`.
    fn nth_power_class(&self, x: &Self::Elem, n: u64) -> Result<Self::Elem>;

    /// All `y` in the field with `y^n = x`.
    fn nth_roots(&self, x: &Self::Elem, n: u64) -> Result<Vec<Self::Elem>>;

    fn descriptor(&self) -> Value;
    fn elem_to_json(&self, a: &Self::Elem) -> Value;
    fn elem_from_json(&self, v: &Value) -> Result<Self::Elem>;
    fn fmt_elem(&self, a: &Self::Elem) -> String;

    /// Every element, for finite fields.
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }

    /// Whether `c` lies in the designated finite set of normalized structure
    /// constants used by the isomorphism search.
    fn is_normalized_constant(&self, _c: &Self::Elem) -> bool {
        true
    }

    /// Sign under the field ordering, for ordered fields.
    fn sign(&self, _a: &Self::Elem) -> Option<i8> {
        None
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn pow(&self, a: &Self::Elem, mut n: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn pow_signed(&self, a: &Self::Elem, n: i64) -> Result<Self::Elem> {
        let p = self.pow(a, n.unsigned_abs());
        if n < 0 {
            self.inv(&p)
        } else {
            Ok(p)
        }
    }

    /// `root_of_unity(den)^num`, the field value of the angle `num/den` in `Q/Z`.
    fn angle_value(&self, num: i64, den: u64) -> Result<Self::Elem> {
        let z = self.root_of_unity(den).ok_or_else(|| {
            Error::Unsupported(format!(
                "no primitive {den}-th root of unity in {}",
                self.descriptor()
            ))
        })?;
        Ok(self.pow(&z, num.rem_euclid(den as i64) as u64))
    }

    /// Inverse of [`Field::angle_value`]: the reduced angle of a root of unity.
    fn angle_of(&self, x: &Self::Elem) -> Option<(u64, u64)> {
        let w = self.roots_of_unity_count();
        for d in divisors(w) {
            if !self.is_one(&self.pow(x, d)) {
                continue;
            }
            let z = self.root_of_unity(d)?;
            let mut zk = self.one();
            for k in 0..d {
                if zk == *x {
                    return Some(if k == 0 { (0, 1) } else { (k, d) });
                }
                zk = self.mul(&zk, &z);
            }
        }
        None
    }

    /// Multiplicative order of a root of unity, `None` when `x` is not one.
    fn root_order(&self, x: &Self::Elem) -> Option<u64> {
        self.angle_of(x).map(|(k, d)| d / gcd(k, d))
    }
}

/// Canonical string of an angle `num/den` reduced into `[0, 1)`.
pub fn reduce_angle(num: i64, den: u64) -> (u64, u64) {
    let n = num.rem_euclid(den as i64) as u64;
    if n == 0 {
        return (0, 1);
    }
    let g = gcd(n, den);
    (n / g, den / g)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn check_axioms<F: Field>(f: &F) {
        let els = f.elements().expect("finite field");
        for a in &els {
            if !f.is_zero(a) {
                assert!(f.is_one(&f.mul(a, &f.inv(a).unwrap())));
            }
            for b in &els {
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in &els {
                    assert_eq!(f.mul(&f.mul(a, b), c), f.mul(a, &f.mul(b, c)));
                    assert_eq!(
                        f.mul(a, &f.add(b, c)),
                        f.add(&f.mul(a, b), &f.mul(a, c))
                    );
                }
            }
        }
    }

    #[test]
    fn small_field_axioms() {
        for (p, l) in [(2, 1), (2, 2), (3, 2), (5, 1), (2, 3)] {
            check_axioms(&ff_construct(p, l, 0).unwrap());
        }
    }

    #[test]
    fn angles_round_trip() {
        let f = ff_construct(7, 1, 0).unwrap();
        for d in [1u64, 2, 3, 6] {
            for k in 0..d {
                let x = f.angle_value(k as i64, d).unwrap();
                assert_eq!(f.angle_of(&x), Some(reduce_angle(k as i64, d)));
            }
        }
        let c = CyclotomicField::new(8);
        let x = c.angle_value(3, 8).unwrap();
        assert_eq!(c.angle_of(&x), Some((3, 8)));
        assert!(f.angle_value(1, 4).is_err());
    }
}
