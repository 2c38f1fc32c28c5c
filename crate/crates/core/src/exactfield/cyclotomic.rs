use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::poly;
use super::rational::{parse_rational, rational_to_string, Rationals, DEFAULT_FACTOR_BOUND};
use super::Field;
use crate::arith::divisors;
use crate::error::{Error, Result};

/// `Φ_n` with integer coefficients, low degree first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigRational> {
    let q = Rationals::with_bound(DEFAULT_FACTOR_BOUND);
    let mut f = poly::binomial(&q, n as usize, &q.one());
    for d in divisors(n) {
        if d < n {
            let (quo, r) = poly::divrem(&q, &f, &cyclotomic_polynomial(d)).expect("monic divisor");
            debug_assert!(r.is_empty());
            f = quo;
        }
    }
    f
}

#[derive(Debug)]
struct Inner {
    conductor: u64,
    phi: Vec<BigRational>,
    /// The designated primitive `W`-th root of unity, `W = lcm(N, 2)`.
    zeta_w: Vec<BigRational>,
}

/// `Q(ζ_N)` as `Q[X]/(Φ_N)`, with `ζ_N` the class of `X`.
///
/// Power classes use complex semantics: this field stands in for `C` in the
/// constructions that need it, so every nonzero element counts as an `n`-th power.
#[derive(Debug, Clone)]
pub struct CyclotomicField {
    inner: Arc<Inner>,
}

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.inner.conductor == other.inner.conductor
    }
}

impl Eq for CyclotomicField {}

impl CyclotomicField {
    pub fn new(conductor: u64) -> Self {
        let n = conductor.max(1);
        let phi = cyclotomic_polynomial(n);
        let deg = phi.len() - 1;
        let q = Rationals::with_bound(DEFAULT_FACTOR_BOUND);
        let pad = |mut v: Vec<BigRational>| {
            v.resize(deg, BigRational::zero());
            v
        };
        let x = poly::rem(&q, &poly::monomial(&q, 1), &phi).unwrap();
        let zeta_w = if n % 2 == 0 {
            pad(x)
        } else {
            // ζ_{2N} = -ζ_N^{(N+1)/2}
            let m = poly::rem(&q, &poly::monomial(&q, (n as usize + 1) / 2), &phi).unwrap();
            pad(poly::neg(&q, &m))
        };
        CyclotomicField {
            inner: Arc::new(Inner {
                conductor: n,
                phi,
                zeta_w,
            }),
        }
    }

    pub fn conductor(&self) -> u64 {
        self.inner.conductor
    }

    pub fn degree(&self) -> usize {
        self.inner.phi.len() - 1
    }

    fn q(&self) -> Rationals {
        Rationals::with_bound(DEFAULT_FACTOR_BOUND)
    }

    fn canon(&self, v: Vec<BigRational>) -> Vec<BigRational> {
        let q = self.q();
        let mut r = poly::rem(&q, &v, &self.inner.phi).expect("nonzero modulus");
        r.resize(self.degree(), BigRational::zero());
        r
    }

    pub fn from_rational(&self, x: BigRational) -> Vec<BigRational> {
        self.canon(vec![x])
    }

    /// `ζ_N`.
    pub fn zeta(&self) -> Vec<BigRational> {
        self.canon(poly::monomial(&self.q(), 1))
    }

    /// The automorphism `ζ_N ↦ ζ_N^k`, `gcd(k, N) = 1`.
    pub fn galois(&self, a: &[BigRational], k: u64) -> Vec<BigRational> {
        let z = self.pow(&self.zeta(), k);
        let mut acc = self.zero();
        for c in a.iter().rev() {
            acc = self.add(&self.mul(&acc, &z), &self.from_rational(c.clone()));
        }
        acc
    }

    /// Complex conjugation `ζ_N ↦ ζ_N^{N-1}`.
    pub fn conjugate(&self, a: &[BigRational]) -> Vec<BigRational> {
        self.galois(a, self.inner.conductor.max(2) - 1)
    }
}

impl Field for CyclotomicField {
    type Elem = Vec<BigRational>;

    fn zero(&self) -> Self::Elem {
        vec![BigRational::zero(); self.degree()]
    }
    fn one(&self) -> Self::Elem {
        self.from_rational(BigRational::one())
    }
    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_rational(BigRational::from_integer(n.into()))
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|x| -x).collect()
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let q = self.q();
        self.canon(poly::mul(&q, &poly::trim(&q, a.clone()), &poly::trim(&q, b.clone())))
    }
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem> {
        let q = self.q();
        let t = poly::trim(&q, a.clone());
        if t.is_empty() {
            return Err(Error::ZeroElement("inverse"));
        }
        let (g, s, _) = poly::ext_gcd(&q, &t, &self.inner.phi);
        if g.len() != 1 {
            return Err(Error::Internal("cyclotomic modulus is not irreducible".into()));
        }
        Ok(self.canon(s))
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.iter().all(Zero::is_zero)
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn roots_of_unity_count(&self) -> u64 {
        crate::arith::lcm(self.inner.conductor, 2)
    }
    fn root_of_unity(&self, n: u64) -> Option<Self::Elem> {
        let w = self.roots_of_unity_count();
        (n > 0 && w % n == 0).then(|| self.pow(&self.inner.zeta_w, w / n))
    }
    fn is_nth_power(&self, x: &Self::Elem, _n: u64) -> Result<bool> {
        if self.is_zero(x) {
            return Err(Error::ZeroElement("is_nth_power"));
        }
        Ok(true)
    }
    fn nth_power_class(&self, x: &Self::Elem, n: u64) -> Result<Self::Elem> {
        self.is_nth_power(x, n)?;
        Ok(self.one())
    }
    /// Roots within the field, supported when `x` is a root of unity.
    fn nth_roots(&self, x: &Self::Elem, n: u64) -> Result<Vec<Self::Elem>> {
        if self.is_zero(x) {
            return Err(Error::ZeroElement("nth_roots"));
        }
        if self.angle_of(x).is_none() {
            return Err(Error::Unsupported(
                "cyclotomic n-th roots are only computed for roots of unity".into(),
            ));
        }
        let w = self.roots_of_unity_count();
        let z = self.inner.zeta_w.clone();
        let mut out = Vec::new();
        let mut y = self.one();
        for _ in 0..w {
            if self.pow(&y, n) == *x {
                out.push(y.clone());
            }
            y = self.mul(&y, &z);
        }
        Ok(out)
    }
    fn descriptor(&self) -> Value {
        json!({"kind": "cyclotomic", "conductor": self.inner.conductor})
    }
    fn is_normalized_constant(&self, c: &Self::Elem) -> bool {
        self.is_zero(c) || self.angle_of(c).is_some()
    }
    fn elem_to_json(&self, a: &Self::Elem) -> Value {
        Value::Array(a.iter().map(|c| Value::String(rational_to_string(c))).collect())
    }
    fn elem_from_json(&self, v: &Value) -> Result<Self::Elem> {
        match v {
            Value::Array(cs) => Ok(self.canon(cs.iter().map(parse_rational).collect::<Result<_>>()?)),
            other => Ok(self.from_rational(parse_rational(other)?)),
        }
    }
    fn fmt_elem(&self, a: &Self::Elem) -> String {
        let terms: Vec<String> = a
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => rational_to_string(c),
                1 => format!("{}*z", rational_to_string(c)),
                _ => format!("{}*z^{i}", rational_to_string(c)),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// Image of `x ∈ Q(ζ_N)` in `Q(ζ_M)` under `ζ_N ↦ ζ_M^{M/N}`, `N | M`.
pub fn cyclotomic_embed(small: &CyclotomicField, big: &CyclotomicField, x: &[BigRational]) -> Vec<BigRational> {
    let (n, m) = (small.conductor(), big.conductor());
    assert_eq!(m % n, 0, "conductor {n} does not divide {m}");
    let z = big.pow(&big.zeta(), m / n);
    x.iter().rev().fold(big.zero(), |acc, c| {
        big.add(&big.mul(&acc, &z), &big.from_rational(c.clone()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `[Q(ζ_N):Q] = φ(N)`.
    fn expected_degree(n: u64) -> usize {
        crate::arith::totient(n.max(1)) as usize
    }

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn small_conductors() {
        let c1 = CyclotomicField::new(1);
        assert_eq!(c1.degree(), 1);
        let c2 = CyclotomicField::new(2);
        assert_eq!(c2.zeta(), c2.from_int(-1));
        let c4 = CyclotomicField::new(4);
        let z = c4.zeta();
        assert_eq!(c4.mul(&z, &z), c4.from_int(-1));
    }

    #[test]
    fn conductor_eight() {
        let c = CyclotomicField::new(8);
        let z = c.zeta();
        assert_eq!(c.pow(&z, 4), c.from_int(-1));
        let s = c.add(&z, &c.pow(&z, 7));
        assert_eq!(c.mul(&s, &s), c.from_int(2));
    }

    #[test]
    fn zeta_has_exact_order_and_conjugation_is_involutive() {
        for n in 1..=24u64 {
            let c = CyclotomicField::new(n);
            assert_eq!(c.degree(), expected_degree(n));
            let z = c.zeta();
            for k in 1..n {
                assert!(!c.is_one(&c.pow(&z, k)));
            }
            assert!(c.is_one(&c.pow(&z, n)));
            let phi = cyclotomic_polynomial(n);
            let q = c.q();
            let val = phi
                .iter()
                .rev()
                .fold(c.zero(), |acc, a| c.add(&c.mul(&acc, &z), &c.from_rational(a.clone())));
            assert!(q.is_zero(&int(0)) && c.is_zero(&val));
            let a = c.add(&z, &c.from_int(3));
            let b = c.mul(&z, &z);
            assert_eq!(c.conjugate(&c.conjugate(&a)), a);
            assert_eq!(
                c.conjugate(&c.mul(&a, &b)),
                c.mul(&c.conjugate(&a), &c.conjugate(&b))
            );
        }
    }

    #[test]
    fn inverses() {
        let c = CyclotomicField::new(12);
        let a = c.add(&c.zeta(), &c.from_int(2));
        let ai = c.inv(&a).unwrap();
        assert!(c.is_one(&c.mul(&a, &ai)));
        assert!(c.inv(&c.zero()).is_err());
    }

    #[test]
    fn odd_conductor_contains_minus_one_roots() {
        let c = CyclotomicField::new(3);
        assert_eq!(c.roots_of_unity_count(), 6);
        let r6 = c.root_of_unity(6).unwrap();
        assert_eq!(c.pow(&r6, 2), c.root_of_unity(3).unwrap());
        assert_eq!(c.pow(&r6, 3), c.from_int(-1));
        assert_eq!(c.nth_roots(&c.one(), 2).unwrap().len(), 2);
    }
}
