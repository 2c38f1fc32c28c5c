use std::sync::Arc;

use serde_json::{json, Value};

use super::Field;
use crate::arith::{gcd, is_prime, mod_inverse, prime_divisors};
use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 20;

#[derive(Debug)]
struct Inner {
    p: u64,
    ell: u32,
    q: u64,
    /// Monic modulus, low degree first, length `ell + 1`.
    modulus: Vec<u64>,
    /// `exp[i] = g^i` for `0 <= i < q - 1`.
    exp: Vec<u32>,
    /// `log[x]` for nonzero `x`.
    log: Vec<u32>,
}

/// `GF(p^ell)` with elements encoded as integers `sum c_i p^i`.
#[derive(Debug, Clone)]
pub struct FiniteField {
    inner: Arc<Inner>,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus
    }
}

impl Eq for FiniteField {}

fn poly_mulmod_p(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let l = m.len() - 1;
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for d in (l..prod.len()).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        for k in 0..=l {
            let idx = d - l + k;
            prod[idx] = (prod[idx] + (p - c) * m[k]) % p;
        }
    }
    prod.truncate(l);
    prod.resize(l, 0);
    prod
}

fn trim_p(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem_p(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = trim_p(a.to_vec());
    let m = trim_p(m.to_vec());
    let dm = m.len() - 1;
    let inv = mod_inverse(m[dm], p).expect("unit leading coefficient");
    while r.len() > dm {
        let dr = r.len() - 1;
        let c = r[dr] * inv % p;
        for k in 0..=dm {
            let idx = dr - dm + k;
            r[idx] = (r[idx] + (p - c) * m[k] % p) % p;
        }
        r = trim_p(r);
    }
    r
}

fn poly_gcd_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut x, mut y) = (trim_p(a.to_vec()), trim_p(b.to_vec()));
    while !y.is_empty() {
        let r = poly_rem_p(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

/// Irreducibility of a monic polynomial over `GF(p)` by `gcd(f, X^(p^i) - X) = 1`
/// for `1 <= i <= deg f / 2`.
pub fn is_irreducible_mod_p(f: &[u64], p: u64) -> bool {
    let f = trim_p(f.to_vec());
    let n = f.len().saturating_sub(1);
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let mut xp = vec![0u64; n];
    xp[1] = 1;
    for _ in 1..=n / 2 {
        // xp <- xp^p mod f
        let base = xp.clone();
        let mut acc = vec![0u64; n];
        acc[0] = 1;
        let mut e = p;
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = poly_mulmod_p(&acc, &b, &f, p);
            }
            b = poly_mulmod_p(&b, &b, &f, p);
            e >>= 1;
        }
        xp = acc;
        let mut diff = xp.clone();
        diff[1] = (diff[1] + p - 1) % p;
        let g = poly_gcd_p(&f, &diff, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// Deterministic `GF(p^ell)`: the first irreducible monic modulus in lexicographic
/// order of its lower coefficients, starting from `seed`.
pub fn ff_construct(p: u64, ell: u32, seed: u64) -> Result<FiniteField> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if ell == 0 {
        return Err(Error::Precondition("extension degree must be positive".into()));
    }
    let q = p
        .checked_pow(ell)
        .filter(|&q| q <= MAX_ORDER)
        .ok_or_else(|| Error::Unsupported(format!("GF({p}^{ell}) exceeds {MAX_ORDER} elements")))?;
    if ell == 1 {
        return FiniteField::with_modulus(p, vec![0, 1]);
    }
    for off in 0..q {
        let c = (seed % q + off) % q;
        let mut m: Vec<u64> = (0..ell).map(|i| c / p.pow(i) % p).collect();
        m.push(1);
        if m[0] != 0 && is_irreducible_mod_p(&m, p) {
            return FiniteField::with_modulus(p, m);
        }
    }
    Err(Error::Internal(format!("no irreducible polynomial of degree {ell} over GF({p})")))
}

impl FiniteField {
    /// Field `GF(p)[X]/(modulus)`; the modulus must be monic and irreducible.
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let modulus = trim_p(modulus.into_iter().map(|c| c % p).collect());
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 {
            return Err(Error::Precondition("modulus must be monic of positive degree".into()));
        }
        if !is_irreducible_mod_p(&modulus, p) {
            return Err(Error::Precondition(format!("modulus {modulus:?} is reducible over GF({p})")));
        }
        let ell = (modulus.len() - 1) as u32;
        let q = p
            .checked_pow(ell)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or_else(|| Error::Unsupported(format!("GF({p}^{ell}) exceeds {MAX_ORDER} elements")))?;
        let encode = |v: &[u64]| v.iter().rev().fold(0u64, |acc, &c| acc * p + c) as u32;
        let decode = |mut x: u64| {
            (0..ell)
                .map(|_| {
                    let c = x % p;
                    x /= p;
                    c
                })
                .collect::<Vec<u64>>()
        };
        let primes = prime_divisors(q - 1);
        let pow = |a: &[u64], mut e: u64| {
            let mut acc = decode(1);
            let mut b = a.to_vec();
            while e > 0 {
                if e & 1 == 1 {
                    acc = poly_mulmod_p(&acc, &b, &modulus, p);
                }
                b = poly_mulmod_p(&b, &b, &modulus, p);
                e >>= 1;
            }
            acc
        };
        let one = decode(1);
        let g = (1..q)
            .map(decode)
            .find(|a| primes.iter().all(|&r| pow(a, (q - 1) / r) != one))
            .ok_or_else(|| Error::Internal("no primitive element".into()))?;
        let mut exp = Vec::with_capacity((q - 1) as usize);
        let mut log = vec![0u32; q as usize];
        let mut x = one;
        for i in 0..q - 1 {
            let code = encode(&x);
            exp.push(code);
            log[code as usize] = i as u32;
            x = poly_mulmod_p(&x, &g, &modulus, p);
        }
        Ok(FiniteField {
            inner: Arc::new(Inner {
                p,
                ell,
                q,
                modulus,
                exp,
                log,
            }),
        })
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }

    pub fn ell(&self) -> u32 {
        self.inner.ell
    }

    pub fn order(&self) -> u64 {
        self.inner.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    /// The designated primitive element.
    pub fn generator(&self) -> u32 {
        self.inner.exp[if self.inner.q > 2 { 1 } else { 0 }]
    }

    /// The class of `X` in `GF(p)[X]/(modulus)`.
    pub fn x(&self) -> u32 {
        self.from_coeffs(&[0, 1])
    }

    pub fn coeffs(&self, a: u32) -> Vec<u64> {
        let mut x = a as u64;
        (0..self.inner.ell)
            .map(|_| {
                let c = x % self.inner.p;
                x /= self.inner.p;
                c
            })
            .collect()
    }

    pub fn from_coeffs(&self, c: &[u64]) -> u32 {
        let p = self.inner.p;
        let reduced = if c.len() > self.inner.ell as usize {
            poly_rem_p(c, &self.inner.modulus, p)
        } else {
            c.iter().map(|x| x % p).collect()
        };
        reduced.iter().rev().fold(0u64, |acc, &x| acc * p + x % p) as u32
    }

    /// Discrete logarithm to the designated generator.
    pub fn log(&self, a: u32) -> Result<u64> {
        if a == 0 {
            return Err(Error::ZeroElement("discrete logarithm"));
        }
        Ok(self.inner.log[a as usize] as u64)
    }

    pub fn exp(&self, k: u64) -> u32 {
        self.inner.exp[(k % (self.inner.q - 1)) as usize]
    }

    pub fn multiplicative_order(&self, a: u32) -> Result<u64> {
        let m = self.inner.q - 1;
        Ok(m / gcd(m, self.log(a)?))
    }

    pub fn frobenius(&self, a: u32) -> u32 {
        self.pow(&a, self.inner.p)
    }

    /// Whether `a` lies in the prime field.
    pub fn in_prime_field(&self, a: u32) -> bool {
        (a as u64) < self.inner.p
    }

    /// Images of `small`'s defining root in `self`; each gives an embedding.
    pub fn embeddings_from(&self, small: &FiniteField) -> Result<Vec<Embedding>> {
        if small.p() != self.p() || self.ell() % small.ell() != 0 {
            return Err(Error::Precondition(format!(
                "GF({}^{}) does not embed in GF({}^{})",
                small.p(),
                small.ell(),
                self.p(),
                self.ell()
            )));
        }
        let m = small.modulus();
        let roots: Vec<u32> = (0..self.order() as u32)
            .filter(|&x| {
                let v = m
                    .iter()
                    .rev()
                    .fold(0u32, |acc, &c| self.add(&self.mul(&acc, &x), &(c as u32)));
                v == 0
            })
            .collect();
        Ok(roots
            .into_iter()
            .map(|r| Embedding::new(small, self, r))
            .collect())
    }
}

/// Field homomorphism `small -> big` sending the class of `X` to `root`.
#[derive(Debug, Clone)]
pub struct Embedding {
    pub small: FiniteField,
    pub big: FiniteField,
    pub root: u32,
    image: Vec<u32>,
}

impl Embedding {
    fn new(small: &FiniteField, big: &FiniteField, root: u32) -> Self {
        let powers: Vec<u32> = (0..small.ell() as u64).map(|i| big.pow(&root, i)).collect();
        let image = (0..small.order() as u32)
            .map(|a| {
                small
                    .coeffs(a)
                    .iter()
                    .zip(&powers)
                    .fold(0u32, |acc, (&c, z)| big.add(&acc, &big.mul(&(c as u32), z)))
            })
            .collect();
        Embedding {
            small: small.clone(),
            big: big.clone(),
            root,
            image,
        }
    }

    pub fn apply(&self, a: u32) -> u32 {
        self.image[a as usize]
    }

    /// Preimage of `b`, when `b` lies in the image.
    pub fn preimage(&self, b: u32) -> Option<u32> {
        self.image.iter().position(|&x| x == b).map(|i| i as u32)
    }
}

impl Field for FiniteField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.inner.p as i64) as u32
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let p = self.inner.p as u32;
        if p == 2 {
            return a ^ b;
        }
        let (mut x, mut y) = (*a, *b);
        let mut out = 0u32;
        let mut place = 1u32;
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place = place.wrapping_mul(p);
        }
        out
    }
    fn neg(&self, a: &u32) -> u32 {
        let p = self.inner.p as u32;
        if p == 2 {
            return *a;
        }
        let mut x = *a;
        let mut out = 0u32;
        let mut place = 1u32;
        while x > 0 {
            out += ((p - x % p) % p) * place;
            x /= p;
            place = place.wrapping_mul(p);
        }
        out
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        if *a == 0 || *b == 0 {
            return 0;
        }
        let m = self.inner.q - 1;
        let k = (self.inner.log[*a as usize] as u64 + self.inner.log[*b as usize] as u64) % m;
        self.inner.exp[k as usize]
    }
    fn inv(&self, a: &u32) -> Result<u32> {
        if *a == 0 {
            return Err(Error::ZeroElement("inverse"));
        }
        let m = self.inner.q - 1;
        Ok(self.inner.exp[((m - self.inner.log[*a as usize] as u64) % m) as usize])
    }
    fn pow(&self, a: &u32, n: u64) -> u32 {
        if n == 0 {
            return 1;
        }
        if *a == 0 {
            return 0;
        }
        let m = self.inner.q - 1;
        let k = (self.inner.log[*a as usize] as u128 * n as u128 % m as u128) as u64;
        self.inner.exp[k as usize]
    }
    fn characteristic(&self) -> u64 {
        self.inner.p
    }
    fn roots_of_unity_count(&self) -> u64 {
        self.inner.q - 1
    }
    fn root_of_unity(&self, n: u64) -> Option<u32> {
        let m = self.inner.q - 1;
        (n > 0 && m % n == 0).then(|| self.exp(m / n))
    }
    fn is_nth_power(&self, x: &u32, n: u64) -> Result<bool> {
        let d = gcd(n, self.inner.q - 1);
        Ok(self.log(*x)? % d == 0)
    }
    fn nth_power_class(&self, x: &u32, n: u64) -> Result<u32> {
        let d = gcd(n, self.inner.q - 1);
        Ok(self.exp(self.log(*x)? % d))
    }
    fn nth_roots(&self, x: &u32, n: u64) -> Result<Vec<u32>> {
        let m = self.inner.q - 1;
        let lx = self.log(*x)?;
        let d = gcd(n, m);
        if lx % d != 0 {
            return Ok(vec![]);
        }
        let (n1, m1) = (n / d % (m / d), m / d);
        let k0 = if m1 == 1 {
            0
        } else {
            (lx / d) * mod_inverse(n1, m1).expect("coprime") % m1
        };
        let mut out: Vec<u32> = (0..d).map(|j| self.exp(k0 + j * m1)).collect();
        out.sort_unstable();
        Ok(out)
    }
    fn descriptor(&self) -> Value {
        json!({"kind": "GF", "p": self.inner.p, "ell": self.inner.ell, "modulus": self.inner.modulus})
    }
    fn elem_to_json(&self, a: &u32) -> Value {
        json!(self.coeffs(*a))
    }
    fn elem_from_json(&self, v: &Value) -> Result<u32> {
        match v {
            Value::Number(n) => n
                .as_i64()
                .map(|i| self.from_int(i))
                .ok_or_else(|| Error::Descriptor(format!("bad GF element {v}"))),
            Value::Array(cs) => {
                let c = cs
                    .iter()
                    .map(|c| {
                        c.as_i64()
                            .map(|i| i.rem_euclid(self.inner.p as i64) as u64)
                            .ok_or_else(|| Error::Descriptor(format!("bad GF coefficient {c}")))
                    })
                    .collect::<Result<Vec<u64>>>()?;
                Ok(self.from_coeffs(&c))
            }
            Value::String(s) => parse_poly_string(self, s),
            _ => Err(Error::Descriptor(format!("bad GF element {v}"))),
        }
    }
    fn fmt_elem(&self, a: &u32) -> String {
        let c = self.coeffs(*a);
        let terms: Vec<String> = c
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &x)| x != 0)
            .map(|(i, &x)| match (i, x) {
                (0, x) => x.to_string(),
                (1, 1) => "x".into(),
                (1, x) => format!("{x}x"),
                (i, 1) => format!("x^{i}"),
                (i, x) => format!("{x}x^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
    fn elements(&self) -> Option<Vec<u32>> {
        Some((0..self.inner.q as u32).collect())
    }
}

/// Parses `"3"`, `"x"`, `"2x^2+x+1"` and similar into a field element.
fn parse_poly_string(f: &FiniteField, s: &str) -> Result<u32> {
    let bad = || Error::Descriptor(format!("malformed GF element {s:?}"));
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return Err(bad());
    }
    let mut coeffs: Vec<i64> = Vec::new();
    let normalized = cleaned.replace('-', "+-");
    for term in normalized.split('+').filter(|t| !t.is_empty()) {
        let (neg, body) = match term.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, term),
        };
        let (c, e) = match body.split_once('x') {
            None => (body.parse::<i64>().map_err(|_| bad())?, 0usize),
            Some((c, rest)) => {
                let c = if c.is_empty() { 1 } else { c.parse::<i64>().map_err(|_| bad())? };
                let e = match rest.strip_prefix('^') {
                    Some(e) => e.parse::<usize>().map_err(|_| bad())?,
                    None if rest.is_empty() => 1,
                    None => return Err(bad()),
                };
                (c, e)
            }
        };
        if coeffs.len() <= e {
            coeffs.resize(e + 1, 0);
        }
        coeffs[e] += if neg { -c } else { c };
    }
    let p = f.p() as i64;
    let c: Vec<u64> = coeffs.iter().map(|x| x.rem_euclid(p) as u64).collect();
    Ok(f.from_coeffs(&c))
}
