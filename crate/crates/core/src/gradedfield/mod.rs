//! Gradings on fields.
//!
//! A graded-field with 1-dimensional components and grading group
//! `G = ℤ_{n_1} × ⋯ × ℤ_{n_m}` is the commutative algebra
//! `𝕂 = ⊗_i 𝔽[X_i]/(X_i^{n_i} − μ_i)`. This module decides whether `𝕂` is a field,
//! decides which finite fields carry a cyclic grading over a subfield, and builds
//! explicit gradings on finite field extensions.
//!
//! Decisions return a [`Decision`] with a three-valued [`Verdict`]. A negative
//! verdict carries a [`Witness`] whenever one can be written down over the base field.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::abelian::{FinAbGroup, GroupElement};
use crate::arith::{mod_pow, prime_divisors, prime_power_exponent};
use crate::error::{Error, Result};
use crate::exactfield::poly::{self, Poly};
use crate::exactfield::{ff_construct, MAX_ORDER, AnyElem, AnyField, Field, FiniteField};
use crate::gradedalg::GradedAlgebra;
use crate::quasitorus::{construct, AltBicharacter, MuFunction};

pub mod extensions;
pub mod fixtures;
pub mod oracle;

pub use extensions::{
    dual_galois_check, frobenius_grading, kummer_grading, DualGaloisReport, FrobeniusGrading, KummerGrading,
    KummerSpec,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    True,
    False,
    Undecided,
}

impl Verdict {
    pub fn to_json(self) -> Value {
        match self {
            Verdict::True => json!(true),
            Verdict::False => json!(false),
            Verdict::Undecided => json!("undecided"),
        }
    }
}

/// Element of the graded-field in homogeneous coordinates: degree ↦ coefficient
/// of the monomial `X^degree`.
pub type Sparse<E> = BTreeMap<GroupElement, E>;

#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    /// `x·y = 0` with `x, y ≠ 0`.
    ZeroDivisor { x: Sparse<AnyElem>, y: Sparse<AnyElem> },
    /// A proper factor of the binomial of generator `index` over an extension of
    /// the base field; coefficients are given in that extension.
    Factor { index: usize, over: Value, factor: Value },
    /// `∏ μ_i^{c_i}` is a `p`-th power but no root is representable in the field.
    DependentClasses { p: u64, exponents: Vec<u64> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Decision {
    pub verdict: Verdict,
    pub reason: String,
    pub witness: Option<Witness>,
}

impl Decision {
    fn yes(reason: impl Into<String>) -> Self {
        Decision { verdict: Verdict::True, reason: reason.into(), witness: None }
    }

    fn no(reason: impl Into<String>, witness: Option<Witness>) -> Self {
        Decision { verdict: Verdict::False, reason: reason.into(), witness }
    }

    fn undecided(reason: impl Into<String>) -> Self {
        Decision { verdict: Verdict::Undecided, reason: reason.into(), witness: None }
    }

    pub fn to_json(&self, field: &AnyField) -> Value {
        let sparse = |s: &Sparse<AnyElem>| -> Value {
            s.iter().map(|(d, c)| json!([d, field.elem_to_json(c)])).collect()
        };
        let witness = match &self.witness {
            None => Value::Null,
            Some(Witness::ZeroDivisor { x, y }) => json!({"kind": "zero_divisor", "x": sparse(x), "y": sparse(y)}),
            Some(Witness::Factor { index, over, factor }) => {
                json!({"kind": "factor", "generator": index, "over": over, "factor": factor})
            }
            Some(Witness::DependentClasses { p, exponents }) => {
                json!({"kind": "dependent_classes", "p": p, "exponents": exponents})
            }
        };
        json!({"verdict": self.verdict.to_json(), "reason": self.reason, "witness": witness})
    }
}

/// `𝕂 = ⊗_i 𝔽[X_i]/(X_i^{n_i} − μ_i)`; `orders[i] = n_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedFieldSpec {
    pub field: AnyField,
    pub orders: Vec<u64>,
    pub mu: Vec<AnyElem>,
}

impl GradedFieldSpec {
    pub fn new(field: AnyField, orders: Vec<u64>, mu: Vec<AnyElem>) -> Result<Self> {
        if orders.len() != mu.len() {
            return Err(Error::Precondition(format!(
                "{} μ-values given for {} cyclic factors",
                mu.len(),
                orders.len()
            )));
        }
        FinAbGroup::new(orders.clone())?;
        if let Some(i) = mu.iter().position(|v| field.is_zero(v)) {
            return Err(Error::Precondition(format!("μ_{i} is zero")));
        }
        Ok(GradedFieldSpec { field, orders, mu })
    }

    pub fn group(&self) -> FinAbGroup {
        FinAbGroup::new(self.orders.clone()).expect("validated on construction")
    }

    /// The structure-constant algebra, basis `X^n` in lexicographic order of `n`.
    pub fn algebra(&self) -> Result<GradedAlgebra<AnyField>> {
        let g = self.group();
        let mu = MuFunction::new(self.field.clone(), &g, self.mu.clone())?;
        construct(&AltBicharacter::trivial(&g), &mu)
    }

    /// `X^a X^b` as `(coefficient, degree)`.
    pub fn monomial_product(&self, a: &[u64], b: &[u64]) -> (AnyElem, GroupElement) {
        let f = &self.field;
        let mut c = f.one();
        let mut d = Vec::with_capacity(a.len());
        for i in 0..a.len() {
            let s = a[i] + b[i];
            if s >= self.orders[i] {
                c = f.mul(&c, &self.mu[i]);
                d.push(s - self.orders[i]);
            } else {
                d.push(s);
            }
        }
        (c, d)
    }

    pub fn sparse_mul(&self, x: &Sparse<AnyElem>, y: &Sparse<AnyElem>) -> Sparse<AnyElem> {
        let f = &self.field;
        let mut out: Sparse<AnyElem> = BTreeMap::new();
        for (a, ca) in x {
            for (b, cb) in y {
                let (c, d) = self.monomial_product(a, b);
                let term = f.mul(&f.mul(ca, cb), &c);
                let slot = out.entry(d).or_insert_with(|| f.zero());
                *slot = f.add(slot, &term);
            }
        }
        out.retain(|_, c| !f.is_zero(c));
        out
    }

    /// Dense coordinates in the basis of [`Self::algebra`].
    pub fn to_vector(&self, x: &Sparse<AnyElem>) -> Vec<AnyElem> {
        let g = self.group();
        let mut v = vec![self.field.zero(); g.order() as usize];
        for (d, c) in x {
            v[g.index_of(d)] = c.clone();
        }
        v
    }

    /// The subalgebra `𝕂_{Tor_p(G)}` as a spec of its own, with the map sending
    /// its generator `Y_j` to `X_{src[j]}^{stride[j]}`.
    pub fn primary_part(&self, p: u64) -> (GradedFieldSpec, Vec<usize>, Vec<u64>) {
        let (mut orders, mut mu, mut src, mut stride) = (vec![], vec![], vec![], vec![]);
        for (i, &n) in self.orders.iter().enumerate() {
            let k = p_valuation(n, p);
            if k > 0 {
                let pk = p.pow(k);
                orders.push(pk);
                mu.push(self.mu[i].clone());
                src.push(i);
                stride.push(n / pk);
            }
        }
        (GradedFieldSpec { field: self.field.clone(), orders, mu }, src, stride)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "field": self.field.descriptor(),
            "group": self.orders,
            "mu": self.mu.iter().map(|m| self.field.elem_to_json(m)).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let field = AnyField::from_descriptor(v.get("field").ok_or_else(|| Error::Descriptor("spec lacks field".into()))?)?;
        let orders: Vec<u64> = serde_json::from_value(v.get("group").cloned().unwrap_or(json!([])))
            .map_err(|e| Error::Descriptor(format!("bad group: {e}")))?;
        let mu = match v.get("mu") {
            Some(Value::Array(xs)) => xs.iter().map(|x| field.elem_from_json(x)).collect::<Result<Vec<_>>>()?,
            _ => return Err(Error::Descriptor("spec lacks mu".into())),
        };
        GradedFieldSpec::new(field, orders, mu)
    }
}

fn p_valuation(mut n: u64, p: u64) -> u32 {
    let mut k = 0;
    while n % p == 0 {
        n /= p;
        k += 1;
    }
    k
}

fn monomial(m: usize, i: usize, e: u64) -> GroupElement {
    let mut d = vec![0; m];
    d[i] = e;
    d
}

// ---------------------------------------------------------------------------
// Binomials

/// Why `X^n − α` is reducible.
#[derive(Debug, Clone, PartialEq)]
pub enum BinomialObstruction<E> {
    /// `α = γ^q` for a prime `q | n`; `root` is some `γ` when representable.
    Power { q: u64, root: Option<E> },
    /// `4 | n` and `α = −4β⁴`.
    MinusFourFourth { beta: Option<E> },
}

impl<E> BinomialObstruction<E> {
    pub fn condition(&self) -> &'static str {
        match self {
            BinomialObstruction::Power { .. } => "condition (i)",
            BinomialObstruction::MinusFourFourth { .. } => "condition (ii)",
        }
    }
}

/// The first violated condition of the binomial criterion, or `None` when
/// `X^n − α` is irreducible.
pub fn binomial_obstruction<F: Field>(f: &F, alpha: &F::Elem, n: u64) -> Result<Option<BinomialObstruction<F::Elem>>> {
    if f.is_zero(alpha) {
        return Err(Error::ZeroElement("binomial_irreducible"));
    }
    if n == 0 {
        return Err(Error::Precondition("binomial degree must be positive".into()));
    }
    for q in prime_divisors(n) {
        if f.is_nth_power(alpha, q)? {
            let root = f.nth_roots(alpha, q).ok().and_then(|r| r.into_iter().next());
            return Ok(Some(BinomialObstruction::Power { q, root }));
        }
    }
    if n % 4 == 0 && f.characteristic() != 2 {
        let t = f.div(&f.neg(alpha), &f.from_int(4))?;
        if f.is_nth_power(&t, 4)? {
            let beta = f.nth_roots(&t, 4).ok().and_then(|r| r.into_iter().next());
            return Ok(Some(BinomialObstruction::MinusFourFourth { beta }));
        }
    }
    Ok(None)
}

/// Whether `X^n − α` is irreducible over `f`.
pub fn binomial_irreducible<F: Field>(f: &F, alpha: &F::Elem, n: u64) -> Result<bool> {
    Ok(binomial_obstruction(f, alpha, n)?.is_none())
}

/// A monic proper factor of `X^n − α` read off an obstruction, verified by division.
pub fn binomial_factor<F: Field>(
    f: &F,
    alpha: &F::Elem,
    n: u64,
    ob: &BinomialObstruction<F::Elem>,
) -> Result<Option<(Poly<F::Elem>, Poly<F::Elem>)>> {
    let n = n as usize;
    let g = match ob {
        BinomialObstruction::Power { q, root: Some(gamma) } => poly::binomial(f, n / *q as usize, gamma),
        BinomialObstruction::MinusFourFourth { beta: Some(b) } => {
            // Y² + 2βY + 2β² with Y = X^{n/4}
            let r = n / 4;
            let mut g = vec![f.zero(); 2 * r + 1];
            g[0] = f.mul(&f.from_int(2), &f.mul(b, b));
            g[r] = f.mul(&f.from_int(2), b);
            g[2 * r] = f.one();
            g
        }
        _ => return Ok(None),
    };
    let (h, r) = poly::divrem(f, &poly::binomial(f, n, alpha), &g)?;
    if !r.is_empty() || poly::degree(&h) == Some(0) {
        return Err(Error::Internal(format!("claimed factor of X^{n} − {} does not divide", f.fmt_elem(alpha))));
    }
    Ok(Some((g, h)))
}

/// `Σ c_k X_i^{k·stride}` in the coordinates of a spec with `m` generators.
fn poly_in_generator(f: &AnyField, m: usize, i: usize, stride: u64, g: &[AnyElem]) -> Sparse<AnyElem> {
    g.iter()
        .enumerate()
        .filter(|(_, c)| !f.is_zero(c))
        .map(|(k, c)| (monomial(m, i, k as u64 * stride), c.clone()))
        .collect()
}

// ---------------------------------------------------------------------------
// Is 𝕂 a field?

/// Embeds an element of `𝕂(p)` into `𝕂` via `Y_j ↦ X_{src[j]}^{stride[j]}`.
fn lift_sparse(m: usize, src: &[usize], stride: &[u64], x: &Sparse<AnyElem>) -> Sparse<AnyElem> {
    x.iter()
        .map(|(d, c)| {
            let mut e = vec![0; m];
            for (j, &k) in d.iter().enumerate() {
                e[src[j]] = k * stride[j];
            }
            (e, c.clone())
        })
        .collect()
}

/// Zero divisors `z − 1` and `1 + z + ⋯ + z^{p−1}` for `z = γ^{-1} ∏ X_i^{c_i n_i / p}`,
/// where `γ^p = ∏ μ_i^{c_i}`.
fn dependency_zero_divisor(spec: &GradedFieldSpec, p: u64, c: &[u64], gamma: &AnyElem) -> Result<Witness> {
    let f = &spec.field;
    let deg: GroupElement = c.iter().zip(&spec.orders).map(|(&ci, &n)| ci * (n / p)).collect();
    let z: Sparse<AnyElem> = BTreeMap::from([(deg, f.inv(gamma)?)]);
    let one: Sparse<AnyElem> = BTreeMap::from([(vec![0; c.len()], f.one())]);
    let mut x = z.clone();
    x.insert(vec![0; c.len()], f.neg(&f.one()));
    let mut y = one.clone();
    let mut zk = one;
    for _ in 1..p {
        zk = spec.sparse_mul(&zk, &z);
        for (d, v) in &zk {
            let slot = y.entry(d.clone()).or_insert_with(|| f.zero());
            *slot = f.add(slot, v);
        }
    }
    Ok(Witness::ZeroDivisor { x, y })
}

/// A nonzero `c ∈ (ℤ/p)^m` with `∏ μ_i^{c_i} ∈ (𝔽^×)^p`, searched in lexicographic order.
pub fn find_dependent_classes(spec: &GradedFieldSpec, p: u64) -> Result<Option<Vec<u64>>> {
    let f = &spec.field;
    let m = spec.orders.len();
    let total = p.checked_pow(m as u32).ok_or_else(|| Error::Unsupported("too many class combinations".into()))?;
    for idx in 1..total {
        let mut r = idx;
        let c: Vec<u64> = (0..m)
            .map(|_| {
                let x = r % p;
                r /= p;
                x
            })
            .collect();
        let prod = c.iter().zip(&spec.mu).fold(f.one(), |acc, (&ci, mu)| f.mul(&acc, &f.pow(mu, ci)));
        if f.is_nth_power(&prod, p)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// Decides a spec whose group is a `p`-group.
///
/// Runs the class-independence test first, then each binomial over the base
/// field. Finite towers are realized level by level; towers over ℚ deeper than
/// one step are decided only when every exponent is 2.
pub fn is_field_p_primary(spec: &GradedFieldSpec) -> Result<Decision> {
    let f = &spec.field;
    let active: Vec<usize> = (0..spec.orders.len()).filter(|&i| spec.orders[i] > 1).collect();
    if active.is_empty() {
        return Ok(Decision::yes("trivial grading"));
    }
    let p = match crate::arith::as_prime_power(spec.orders[active[0]]) {
        Some((p, _)) => p,
        None => return Err(Error::Precondition(format!("{} is not a prime power", spec.orders[active[0]]))),
    };
    if let Some(&bad) = spec.orders.iter().find(|&&n| n > 1 && prime_power_exponent(n, p).is_none()) {
        return Err(Error::Precondition(format!("group is not a {p}-group: factor of order {bad}")));
    }
    let m = spec.orders.len();

    if let Some(c) = find_dependent_classes(spec, p)? {
        let prod = c.iter().zip(&spec.mu).fold(f.one(), |acc, (&ci, mu)| f.mul(&acc, &f.pow(mu, ci)));
        let reason = format!("μ-classes are dependent modulo {p}-th powers: exponents {c:?}");
        let witness = match f.nth_roots(&prod, p).ok().and_then(|r| r.into_iter().next()) {
            Some(gamma) => dependency_zero_divisor(spec, p, &c, &gamma)?,
            None => Witness::DependentClasses { p, exponents: c },
        };
        return Ok(Decision::no(reason, Some(witness)));
    }

    for &i in &active {
        let n = spec.orders[i];
        if let Some(ob) = binomial_obstruction(f, &spec.mu[i], n)? {
            let reason = format!("X_{i}^{n} − μ_{i} is reducible: {}", ob.condition());
            let witness = binomial_factor(f, &spec.mu[i], n, &ob)?.map(|(g, h)| Witness::ZeroDivisor {
                x: poly_in_generator(f, m, i, 1, &g),
                y: poly_in_generator(f, m, i, 1, &h),
            });
            return Ok(Decision::no(reason, witness));
        }
    }
    if active.len() == 1 {
        return Ok(Decision::yes("single irreducible binomial"));
    }
    if active.iter().all(|&i| spec.orders[i] == 2) {
        let d = is_field_exponent2(spec)?;
        if d.verdict != Verdict::True {
            return Err(Error::Internal(
                "square-class criterion disagrees with the class-independence test".into(),
            ));
        }
        return Ok(d);
    }
    match f {
        AnyField::GF(ff) => finite_tower(spec, ff, &active),
        _ => Ok(Decision::undecided(format!(
            "tower of {} binomials of {p}-power degree over {}: residue tests in number fields are not implemented",
            active.len(),
            f.descriptor()["kind"].as_str().unwrap_or("?")
        ))),
    }
}

/// Adjoins the roots one at a time inside concrete finite fields.
fn finite_tower(spec: &GradedFieldSpec, base: &FiniteField, active: &[usize]) -> Result<Decision> {
    let p = base.p();
    let mut level = base.clone();
    let mut embed: Vec<u32> = (0..base.order() as u32).collect();
    for (step, &i) in active.iter().enumerate() {
        let n = spec.orders[i];
        let AnyElem::GF(mu) = spec.mu[i] else {
            return Err(Error::Internal("finite-field spec holds a foreign element".into()));
        };
        let alpha = embed[mu as usize];
        if let Some(ob) = binomial_obstruction(&level, &alpha, n)? {
            let reason = format!(
                "X_{i}^{n} − μ_{i} is reducible over the level GF({p}^{}): {}",
                level.ell(),
                ob.condition()
            );
            let witness = binomial_factor(&level, &alpha, n, &ob)?.map(|(g, _)| Witness::Factor {
                index: i,
                over: level.descriptor(),
                factor: g.iter().map(|c| level.elem_to_json(c)).collect(),
            });
            return Ok(Decision::no(reason, witness));
        }
        if step + 1 == active.len() {
            break;
        }
        let ell = level.ell() as u64 * n;
        if p.checked_pow(ell as u32).map_or(true, |q| q > MAX_ORDER) {
            return Ok(Decision::undecided(format!(
                "tower level GF({p}^{ell}) exceeds {MAX_ORDER} elements"
            )));
        }
        let next = ff_construct(p, ell as u32, 0)?;
        let e = next
            .embeddings_from(base)?
            .into_iter()
            .next()
            .ok_or_else(|| Error::Internal("no embedding of the base field".into()))?;
        embed = (0..base.order() as u32).map(|a| e.apply(a)).collect();
        level = next;
    }
    Ok(Decision::yes(format!(
        "every binomial is irreducible over its tower level; 𝕂 ≅ GF({p}^{})",
        base.ell() as u64 * active.iter().map(|&i| spec.orders[i]).product::<u64>()
    )))
}

/// Square-class vector over GF(2) of each `μ_i`, with a common coordinate set.
fn square_class_vectors(spec: &GradedFieldSpec) -> Result<Vec<Vec<bool>>> {
    let f = &spec.field;
    match f {
        AnyField::Q(q) => {
            let parts = spec
                .mu
                .iter()
                .map(|m| match m {
                    AnyElem::Rat(x) => q.squarefree_part(x),
                    _ => Err(Error::Internal("rational spec holds a foreign element".into())),
                })
                .collect::<Result<Vec<_>>>()?;
            let mut primes: Vec<_> = parts.iter().flat_map(|(_, ps)| ps.iter().cloned()).collect();
            primes.sort();
            primes.dedup();
            Ok(parts
                .iter()
                .map(|(s, ps)| {
                    let mut v = vec![*s < 0];
                    v.extend(primes.iter().map(|p| ps.contains(p)));
                    v
                })
                .collect())
        }
        AnyField::GF(ff) => spec
            .mu
            .iter()
            .map(|m| match m {
                AnyElem::GF(a) => Ok(vec![ff.log(*a)? % 2 == 1]),
                _ => Err(Error::Internal("finite-field spec holds a foreign element".into())),
            })
            .collect(),
        AnyField::R(_) => spec
            .mu
            .iter()
            .map(|m| f.sign(m).map(|s| vec![s < 0]).ok_or_else(|| Error::Internal("unsigned real".into())))
            .collect(),
        // every element of ℂ is a square
        AnyField::Cyclotomic(_) => Ok(vec![vec![]; spec.mu.len()]),
    }
}

/// A nonempty set of rows summing to zero over GF(2), if the rows are dependent.
fn gf2_dependency(rows: &[Vec<bool>]) -> Option<Vec<bool>> {
    let m = rows.len();
    // each row augmented with its combination over the input rows
    let mut work: Vec<(Vec<bool>, Vec<bool>)> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| (r.clone(), (0..m).map(|j| j == i).collect()))
        .collect();
    let width = rows.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    for col in 0..width {
        let Some(r) = (pivot_row..m).find(|&r| work[r].0[col]) else { continue };
        work.swap(pivot_row, r);
        for r in 0..m {
            if r != pivot_row && work[r].0[col] {
                let (v, c) = work[pivot_row].clone();
                for k in 0..width {
                    work[r].0[k] ^= v[k];
                }
                for k in 0..m {
                    work[r].1[k] ^= c[k];
                }
            }
        }
        pivot_row += 1;
    }
    work.into_iter().skip(pivot_row).map(|(_, c)| c).next()
}

/// Decides a spec with every `n_i = 2` from the square classes of the `μ_i`:
/// `𝕂` is a field iff the classes are independent in `𝔽^×/(𝔽^×)²`.
pub fn is_field_exponent2(spec: &GradedFieldSpec) -> Result<Decision> {
    let f = &spec.field;
    if f.characteristic() == 2 {
        return Err(Error::Precondition("square-class criterion needs characteristic ≠ 2".into()));
    }
    if let Some(n) = spec.orders.iter().find(|&&n| n != 2) {
        return Err(Error::Precondition(format!("square-class criterion needs all n_i = 2, got {n}")));
    }
    let rows = square_class_vectors(spec)?;
    let Some(set) = gf2_dependency(&rows) else {
        return Ok(Decision::yes(format!("{} independent square classes", rows.len())));
    };
    let m = spec.orders.len();
    let subset: Vec<usize> = (0..m).filter(|&i| set[i]).collect();
    let prod = subset.iter().fold(f.one(), |acc, &i| f.mul(&acc, &spec.mu[i]));
    let reason = format!("product of μ_i over {subset:?} is a square");
    let exps: Vec<u64> = set.iter().map(|&b| b as u64).collect();
    let witness = match f.nth_roots(&prod, 2).ok().and_then(|r| r.into_iter().next()) {
        Some(gamma) => {
            // (x_S − γ)(x_S + γ) = x_S² − γ² = 0
            let zero = vec![0; m];
            let x_s = exps.clone();
            let x = BTreeMap::from([(x_s.clone(), f.one()), (zero.clone(), f.neg(&gamma))]);
            let y = BTreeMap::from([(x_s, f.one()), (zero, gamma)]);
            Witness::ZeroDivisor { x, y }
        }
        None => Witness::DependentClasses { p: 2, exponents: exps },
    };
    Ok(Decision::no(reason, Some(witness)))
}

/// Decides an arbitrary spec prime by prime: `𝕂` is a field iff every `𝕂(p)` is.
pub fn is_field_general(spec: &GradedFieldSpec) -> Result<Decision> {
    let n: u64 = spec.orders.iter().product();
    let m = spec.orders.len();
    let mut undecided = Vec::new();
    let mut fields = Vec::new();
    for p in prime_divisors(n) {
        let (part, src, stride) = spec.primary_part(p);
        let d = is_field_p_primary(&part)?;
        match d.verdict {
            Verdict::False => {
                let witness = match d.witness {
                    Some(Witness::ZeroDivisor { x, y }) => Some(Witness::ZeroDivisor {
                        x: lift_sparse(m, &src, &stride, &x),
                        y: lift_sparse(m, &src, &stride, &y),
                    }),
                    Some(Witness::Factor { index, over, factor }) => Some(Witness::Factor { index: src[index], over, factor }),
                    Some(Witness::DependentClasses { p, exponents }) => {
                        let mut e = vec![0; m];
                        for (j, c) in exponents.into_iter().enumerate() {
                            e[src[j]] = c;
                        }
                        Some(Witness::DependentClasses { p, exponents: e })
                    }
                    None => None,
                };
                return Ok(Decision::no(format!("{p}-primary part: {}", d.reason), witness));
            }
            Verdict::Undecided => undecided.push(format!("{p}-primary part: {}", d.reason)),
            Verdict::True => fields.push(p),
        }
    }
    if !undecided.is_empty() {
        return Ok(Decision::undecided(undecided.join("; ")));
    }
    Ok(Decision::yes(if fields.is_empty() {
        "trivial grading".to_string()
    } else {
        format!("every primary part is a field: p ∈ {fields:?}")
    }))
}

// ---------------------------------------------------------------------------
// Cyclic gradings on finite fields

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FfGradingExistence {
    pub exists: bool,
    pub reason: String,
}

/// Whether `GF(p^{ℓk})` admits a `ℤ_k`-grading over `GF(p^ℓ)` with 1-dimensional
/// components: every prime divisor of `k` divides `p^ℓ − 1`, and `4 | p^ℓ − 1`
/// when `4 | k`.
pub fn ff_grading_exists(p: u64, ell: u32, k: u64) -> Result<FfGradingExistence> {
    if !crate::arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if ell == 0 || k == 0 {
        return Err(Error::Precondition("ℓ and k must be positive".into()));
    }
    let fail = |c: &str| FfGradingExistence { exists: false, reason: c.to_string() };
    if prime_divisors(k).into_iter().any(|q| mod_pow(p, ell as u64, q) != 1) {
        return Ok(fail("condition (i)"));
    }
    if k % 4 == 0 && mod_pow(p, ell as u64, 4) != 1 {
        return Ok(fail("condition (ii)"));
    }
    Ok(FfGradingExistence { exists: true, reason: "conditions (i) and (ii) hold".into() })
}

/// The `μ ∈ GF(p^ℓ)^×` with `μ^{m/q} ≠ 1` for every prime `q | k`, `m = p^ℓ − 1`;
/// empty when no grading exists.
pub fn ff_grading_mus(p: u64, ell: u32, k: u64) -> Result<(FiniteField, Vec<u32>)> {
    let exists = ff_grading_exists(p, ell, k)?.exists;
    let f = ff_construct(p, ell, 0)?;
    if !exists {
        return Ok((f, vec![]));
    }
    let m = f.order() - 1;
    let qs = prime_divisors(k);
    let mus = (1..f.order() as u32)
        .filter(|mu| qs.iter().all(|&q| f.pow(mu, m / q) != 1))
        .collect();
    Ok((f, mus))
}
