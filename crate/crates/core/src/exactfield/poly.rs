//! Dense univariate polynomials over a [`Field`], coefficients low degree first.
//!
//! All results are trimmed: no trailing zero coefficients, the zero polynomial is `[]`.

use super::Field;
use crate::error::{Error, Result};

pub type Poly<E> = Vec<E>;

pub fn trim<F: Field>(f: &F, mut a: Poly<F::Elem>) -> Poly<F::Elem> {
    while a.last().is_some_and(|c| f.is_zero(c)) {
        a.pop();
    }
    a
}

pub fn degree<E>(a: &Poly<E>) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn constant<F: Field>(f: &F, c: F::Elem) -> Poly<F::Elem> {
    trim(f, vec![c])
}

/// `X^n`.
pub fn monomial<F: Field>(f: &F, n: usize) -> Poly<F::Elem> {
    let mut v = vec![f.zero(); n + 1];
    v[n] = f.one();
    v
}

pub fn add<F: Field>(f: &F, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
    let n = a.len().max(b.len());
    let z = f.zero();
    let v = (0..n)
        .map(|i| f.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
        .collect();
    trim(f, v)
}

pub fn neg<F: Field>(f: &F, a: &Poly<F::Elem>) -> Poly<F::Elem> {
    a.iter().map(|c| f.neg(c)).collect()
}

pub fn sub<F: Field>(f: &F, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
    add(f, a, &neg(f, b))
}

pub fn scale<F: Field>(f: &F, c: &F::Elem, a: &Poly<F::Elem>) -> Poly<F::Elem> {
    trim(f, a.iter().map(|x| f.mul(c, x)).collect())
}

pub fn mul<F: Field>(f: &F, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    trim(f, out)
}

/// Quotient and remainder; errors when `b` is zero.
pub fn divrem<F: Field>(
    f: &F,
    a: &Poly<F::Elem>,
    b: &Poly<F::Elem>,
) -> Result<(Poly<F::Elem>, Poly<F::Elem>)> {
    let db = degree(b).ok_or(Error::ZeroElement("polynomial division"))?;
    let lead_inv = f.inv(&b[db])?;
    let mut r = trim(f, a.clone());
    if r.len() < b.len() {
        return Ok((vec![], r));
    }
    let mut q = vec![f.zero(); r.len() - db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = f.mul(&r[dr], &lead_inv);
        let shift = dr - db;
        for (j, y) in b.iter().enumerate() {
            r[shift + j] = f.sub(&r[shift + j], &f.mul(&c, y));
        }
        q[shift] = c;
        r = trim(f, r);
    }
    Ok((trim(f, q), r))
}

pub fn rem<F: Field>(f: &F, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
    Ok(divrem(f, a, b)?.1)
}

pub fn monic<F: Field>(f: &F, a: &Poly<F::Elem>) -> Poly<F::Elem> {
    match a.last() {
        None => vec![],
        Some(l) => scale(f, &f.inv(l).expect("nonzero leading coefficient"), a),
    }
}

/// Monic greatest common divisor.
pub fn gcd<F: Field>(f: &F, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
    let (mut x, mut y) = (trim(f, a.clone()), trim(f, b.clone()));
    while !y.is_empty() {
        let r = rem(f, &x, &y).expect("nonzero divisor");
        x = y;
        y = r;
    }
    monic(f, &x)
}

/// `(g, s, t)` with `s·a + t·b = g`, `g` monic.
pub fn ext_gcd<F: Field>(
    f: &F,
    a: &Poly<F::Elem>,
    b: &Poly<F::Elem>,
) -> (Poly<F::Elem>, Poly<F::Elem>, Poly<F::Elem>) {
    let (mut r0, mut r1) = (trim(f, a.clone()), trim(f, b.clone()));
    let (mut s0, mut s1) = (constant(f, f.one()), vec![]);
    let (mut t0, mut t1) = (vec![], constant(f, f.one()));
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1).expect("nonzero divisor");
        let s = sub(f, &s0, &mul(f, &q, &s1));
        let t = sub(f, &t0, &mul(f, &q, &t1));
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s);
        (t0, t1) = (t1, t);
    }
    match r0.last() {
        None => (r0, s0, t0),
        Some(l) => {
            let li = f.inv(l).expect("nonzero leading coefficient");
            (scale(f, &li, &r0), scale(f, &li, &s0), scale(f, &li, &t0))
        }
    }
}

pub fn mulmod<F: Field>(
    f: &F,
    a: &Poly<F::Elem>,
    b: &Poly<F::Elem>,
    m: &Poly<F::Elem>,
) -> Poly<F::Elem> {
    rem(f, &mul(f, a, b), m).expect("nonzero modulus")
}

/// `a^e mod m` for an arbitrary-size exponent given as big-endian bits source.
pub fn powmod<F: Field>(
    f: &F,
    a: &Poly<F::Elem>,
    e: &num_bigint::BigUint,
    m: &Poly<F::Elem>,
) -> Poly<F::Elem> {
    let mut acc = rem(f, &constant(f, f.one()), m).expect("nonzero modulus");
    let base = rem(f, a, m).expect("nonzero modulus");
    for i in (0..e.bits()).rev() {
        acc = mulmod(f, &acc, &acc, m);
        if e.bit(i) {
            acc = mulmod(f, &acc, &base, m);
        }
    }
    acc
}

pub fn eval<F: Field>(f: &F, a: &Poly<F::Elem>, x: &F::Elem) -> F::Elem {
    a.iter()
        .rev()
        .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
}

/// `X^n - alpha`.
pub fn binomial<F: Field>(f: &F, n: usize, alpha: &F::Elem) -> Poly<F::Elem> {
    let mut v = monomial(f, n);
    v[0] = f.sub(&v[0], alpha);
    v
}

pub fn derivative<F: Field>(f: &F, a: &Poly<F::Elem>) -> Poly<F::Elem> {
    trim(
        f,
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| f.mul(&f.from_int(i as i64), c))
            .collect(),
    )
}

/// Irreducibility over a finite field by Rabin's test.
pub fn is_irreducible_finite<F: Field>(f: &F, a: &Poly<F::Elem>) -> bool {
    use num_bigint::BigUint;
    let Some(n) = degree(a) else { return false };
    if n == 0 {
        return false;
    }
    let q = f.elements().expect("finite field").len() as u64;
    let m = monic(f, a);
    let x = monomial(f, 1);
    let frob = |k: usize| {
        let e = BigUint::from(q).pow(k as u32);
        sub(f, &powmod(f, &x, &e, &m), &x)
    };
    if !rem(f, &frob(n), &m).unwrap().is_empty() {
        return false;
    }
    crate::arith::prime_divisors(n as u64)
        .into_iter()
        .all(|r| degree(&gcd(f, &m, &frob(n / r as usize))) == Some(0))
}

/// All roots in a finite field, by exhaustive evaluation.
pub fn roots_finite<F: Field>(f: &F, a: &Poly<F::Elem>) -> Vec<F::Elem> {
    f.elements()
        .expect("finite field")
        .into_iter()
        .filter(|x| f.is_zero(&eval(f, a, x)))
        .collect()
}
