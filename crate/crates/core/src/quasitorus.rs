//! Quantum quasitori `D(K, β, μ)`: graded-division algebras with 1-dimensional
//! components, built from an alternating bicharacter and a μ-function.
//!
//! Normal form: basis `X^n = X_1^{n_1}⋯X_m^{n_m}`, `0 <= n_i < o(a_i)`, with
//!
//! `X^a X^b = ∏_{i>j} β_ij^{a_i b_j} · ∏_i μ_i^{⌊(a_i+b_i)/o_i⌋} · X^{(a+b) mod o}`
//!
//! where `β_ij = β(a_i, a_j)` and `X_i X_j = β_ij X_j X_i`.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::abelian::{FinAbGroup, GroupElement, Subgroup};
use crate::arith::{gcd, lcm, prime_divisors};
use crate::error::{Error, Result};
use crate::exactfield::{reduce_angle, AnyField, Field};
use crate::gradedalg::GradedAlgebra;

/// Alternating bicharacter `β(a_i, a_j) = exp(2πi·m_ij / L)`, `L = exp(K)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AltBicharacter {
    group: FinAbGroup,
    /// Antisymmetric mod `L`, zero diagonal.
    exps: Vec<Vec<u64>>,
}

impl AltBicharacter {
    pub fn trivial(group: &FinAbGroup) -> Self {
        let m = group.rank();
        AltBicharacter {
            group: group.clone(),
            exps: vec![vec![0; m]; m],
        }
    }

    /// From generator-pair angles `(i, j, num, den)`, `i < j`, meaning
    /// `β(a_i, a_j) = e^{2πi·num/den}`; unlisted pairs are trivial.
    pub fn from_angles(group: &FinAbGroup, pairs: &[(usize, usize, i64, u64)]) -> Result<Self> {
        let l = group.exponent();
        let m = group.rank();
        let mut exps = vec![vec![0u64; m]; m];
        for &(i, j, num, den) in pairs {
            if i >= m || j >= m || i == j {
                return Err(Error::Precondition(format!("bad generator pair ({i},{j})")));
            }
            let (n, d) = reduce_angle(num, den);
            if l % d != 0 {
                return Err(Error::Precondition(format!(
                    "β({i},{j}) = {n}/{d} has order not dividing exp(K) = {l}"
                )));
            }
            let e = n * (l / d);
            exps[i][j] = e % l;
            exps[j][i] = (l - e % l) % l;
        }
        let b = AltBicharacter {
            group: group.clone(),
            exps,
        };
        b.check_orders()?;
        Ok(b)
    }

    /// `±1`-valued bicharacter with `β(a_i, a_j) = -1` exactly on the listed pairs.
    pub fn from_signs(group: &FinAbGroup, negative: &[(usize, usize)]) -> Result<Self> {
        let pairs: Vec<_> = negative.iter().map(|&(i, j)| (i, j, 1, 2)).collect();
        Self::from_angles(group, &pairs)
    }

    fn check_orders(&self) -> Result<()> {
        let l = self.group.exponent();
        let o = self.group.orders();
        for i in 0..o.len() {
            for j in 0..o.len() {
                let e = self.exps[i][j];
                if (e as u128 * o[i] as u128) % l as u128 != 0 || (e as u128 * o[j] as u128) % l as u128 != 0 {
                    let (n, d) = reduce_angle(e as i64, l);
                    return Err(Error::Precondition(format!(
                        "β({i},{j}) = {n}/{d} violates β_ij^o(a_i) = β_ij^o(a_j) = 1"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    /// Reduced angle of `β(a_i, a_j)` in `[0, 1)`.
    pub fn generator_angle(&self, i: usize, j: usize) -> (u64, u64) {
        reduce_angle(self.exps[i][j] as i64, self.group.exponent())
    }

    /// Nontrivial pairs `(i, j, num, den)` with `i < j`.
    pub fn pairs(&self) -> Vec<(usize, usize, u64, u64)> {
        let m = self.group.rank();
        (0..m)
            .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
            .filter_map(|(i, j)| {
                let (n, d) = self.generator_angle(i, j);
                (n != 0).then_some((i, j, n, d))
            })
            .collect()
    }

    /// Reduced angle of `β(g, h) = ∏ β_ij^{g_i h_j}`.
    pub fn angle(&self, g: &[u64], h: &[u64]) -> (u64, u64) {
        let l = self.group.exponent() as u128;
        let mut s: u128 = 0;
        for (i, &gi) in g.iter().enumerate() {
            for (j, &hj) in h.iter().enumerate() {
                s = (s + gi as u128 * hj as u128 % l * self.exps[i][j] as u128) % l;
            }
        }
        reduce_angle(s as i64, l as u64)
    }

    pub fn value<F: Field>(&self, f: &F, g: &[u64], h: &[u64]) -> Result<F::Elem> {
        let (n, d) = self.angle(g, h);
        f.angle_value(n as i64, d)
    }

    /// Order of the largest root of unity among the values.
    pub fn value_order(&self) -> u64 {
        let m = self.group.rank();
        (0..m)
            .flat_map(|i| (0..m).map(move |j| (i, j)))
            .fold(1, |acc, (i, j)| lcm(acc, self.generator_angle(i, j).1))
    }

    pub fn is_trivial(&self) -> bool {
        self.exps.iter().flatten().all(|&e| e == 0)
    }

    /// Whether every value is `±1`.
    pub fn is_sign_valued(&self) -> bool {
        self.value_order() <= 2
    }

    /// `β^{-1}`.
    pub fn inverse(&self) -> Self {
        let l = self.group.exponent();
        AltBicharacter {
            group: self.group.clone(),
            exps: self.exps.iter().map(|r| r.iter().map(|&e| (l - e) % l).collect()).collect(),
        }
    }

    /// Sorted generator-pair key used for canonical ordering.
    pub fn key(&self) -> Vec<(usize, usize, u64, u64)> {
        self.pairs()
    }

    /// `rad β = {s | β(s, t) = 1 for all t}`, tested against generators.
    pub fn radical(&self) -> Subgroup {
        let gens: Vec<GroupElement> = (0..self.group.rank()).map(|i| self.group.generator(i)).collect();
        let elements: Vec<GroupElement> = self
            .group
            .elements()
            .filter(|s| gens.iter().all(|t| self.angle(s, t).0 == 0))
            .collect();
        Subgroup {
            generators: elements.clone(),
            elements,
        }
    }

    /// Checks bilinearity and `β(g, g) = 1` on all of `K × K`.
    pub fn verify_alternating(&self) -> bool {
        let els: Vec<GroupElement> = self.group.elements().collect();
        let add = |x: (u64, u64), y: (u64, u64)| reduce_angle((x.0 * y.1 + y.0 * x.1) as i64, x.1 * y.1);
        els.iter().all(|g| self.angle(g, g).0 == 0)
            && els.iter().all(|g| {
                els.iter().all(|h| {
                    els.iter().all(|k| {
                        self.angle(&self.group.add(g, h), k) == add(self.angle(g, k), self.angle(h, k))
                    })
                })
            })
    }
}

/// Values `μ_i ∈ F^×` on the generators `a_i`, representing classes in
/// `F^×/(F^×)^{o(a_i)}`.
#[derive(Debug, Clone)]
pub struct MuFunction<F: Field> {
    field: F,
    group: FinAbGroup,
    values: Vec<F::Elem>,
}

impl<F: Field> MuFunction<F> {
    pub fn new(field: F, group: &FinAbGroup, values: Vec<F::Elem>) -> Result<Self> {
        if values.len() != group.rank() {
            return Err(Error::Precondition(format!(
                "{} μ-values given for {} generators",
                values.len(),
                group.rank()
            )));
        }
        if let Some(i) = values.iter().position(|v| field.is_zero(v)) {
            return Err(Error::Precondition(format!("μ_{i} is not a unit")));
        }
        Ok(MuFunction {
            field,
            group: group.clone(),
            values,
        })
    }

    pub fn trivial(field: F, group: &FinAbGroup) -> Self {
        let values = vec![field.one(); group.rank()];
        MuFunction {
            field,
            group: group.clone(),
            values,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn values(&self) -> &[F::Elem] {
        &self.values
    }

    /// Canonical representatives of the generator classes.
    pub fn canonical(&self) -> Result<Vec<F::Elem>> {
        self.values
            .iter()
            .zip(self.group.orders())
            .map(|(v, &o)| self.field.nth_power_class(v, o))
            .collect()
    }

    /// Whether both functions define the same classes on every generator.
    pub fn same_classes(&self, other: &MuFunction<F>) -> Result<bool> {
        if self.group != other.group {
            return Ok(false);
        }
        for ((x, y), &o) in self.values.iter().zip(&other.values).zip(self.group.orders()) {
            if !same_class(&self.field, x, y, o)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Representative of `μ(g)` derived from the generator values by the
    /// multiplicativity rules: primary parts combined over coprime orders, and
    /// within one prime the generator terms combined in decreasing order.
    pub fn eval_rules(&self, beta: &AltBicharacter, g: &[u64]) -> Result<F::Elem> {
        let f = &self.field;
        let k = &self.group;
        let o = k.element_order(g);
        let mut acc = (k.zero(), f.one());
        for p in prime_divisors(o) {
            let part = primary_part(k, g, p);
            let mu_p = self.eval_primary(beta, &part, p)?;
            // coprime orders: μ(gh) = μ(g)^{o(h)} μ(h)^{o(g)}
            let (oa, ob) = (k.element_order(&acc.0), k.element_order(&part));
            acc = (k.add(&acc.0, &part), f.mul(&f.pow(&acc.1, ob), &f.pow(&mu_p, oa)));
        }
        debug_assert_eq!(acc.0, g);
        Ok(acc.1)
    }

    fn eval_primary(&self, beta: &AltBicharacter, h: &[u64], p: u64) -> Result<F::Elem> {
        let f = &self.field;
        let k = &self.group;
        let mut terms: Vec<(GroupElement, F::Elem)> = Vec::new();
        for (i, &e) in h.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let oi = k.orders()[i];
            let d = gcd(e, oi);
            // μ(d·a_i) = μ_i mod (F^×)^{o_i/d}; then a unit multiple raises to that unit.
            let mut c = k.zero();
            c[i] = e;
            terms.push((c, f.pow(&self.values[i], e / d)));
        }
        terms.sort_by_key(|(c, _)| std::cmp::Reverse(k.element_order(c)));
        let mut acc = (k.zero(), f.one());
        for (c, mu_c) in terms {
            let (oa, oc) = (k.element_order(&acc.0), k.element_order(&c));
            let mu = if k.is_zero(&acc.0) {
                mu_c
            } else if oa > oc {
                f.mul(&acc.1, &f.pow(&mu_c, oa / oc))
            } else if p == 2 {
                let b = beta.value(f, &acc.0, &c)?;
                f.mul(&f.pow(&b, oa / 2), &f.mul(&acc.1, &mu_c))
            } else {
                f.mul(&acc.1, &mu_c)
            };
            acc = (k.add(&acc.0, &c), mu);
        }
        Ok(acc.1)
    }

    /// Representative of `μ(g)` as the scalar `(X^g)^{o(g)}` computed in
    /// normal-form monomial arithmetic.
    pub fn eval_monomial(&self, beta: &AltBicharacter, g: &[u64]) -> Result<F::Elem> {
        let o = self.group.element_order(g);
        let mut acc = (self.field.one(), self.group.zero());
        for _ in 0..o {
            let (c, t) = normal_form_product(beta, self, &acc.1, g)?;
            acc = (self.field.mul(&acc.0, &c), t);
        }
        if !self.group.is_zero(&acc.1) {
            return Err(Error::Internal("power of monomial is not a scalar".into()));
        }
        Ok(acc.0)
    }
}

/// `x ≡ y mod (F^×)^n`.
pub fn same_class<F: Field>(f: &F, x: &F::Elem, y: &F::Elem, n: u64) -> Result<bool> {
    f.is_nth_power(&f.div(x, y)?, n)
}

/// The `p`-primary component of `g`.
fn primary_part(k: &FinAbGroup, g: &[u64], p: u64) -> GroupElement {
    let o = k.element_order(g);
    let mut pk = 1;
    while o % (pk * p) == 0 {
        pk *= p;
    }
    let rest = o / pk;
    // m ≡ 1 mod p^k, m ≡ 0 mod rest
    let m = (0..pk).map(|t| t * rest).find(|m| m % pk == 1 % pk).unwrap_or(0);
    k.scale(m, g)
}

/// `X^a X^b = c · X^{a+b}`.
pub fn normal_form_product<F: Field>(
    beta: &AltBicharacter,
    mu: &MuFunction<F>,
    a: &[u64],
    b: &[u64],
) -> Result<(F::Elem, GroupElement)> {
    let f = &mu.field;
    let k = &mu.group;
    let l = k.exponent() as u128;
    let mut s: u128 = 0;
    for i in 0..a.len() {
        for j in 0..i {
            s = (s + (a[i] as u128 * b[j] as u128) % l * beta.exps[i][j] as u128) % l;
        }
    }
    let (n, d) = reduce_angle(s as i64, l as u64);
    let mut c = f.angle_value(n as i64, d)?;
    for (i, &o) in k.orders().iter().enumerate() {
        if a[i] + b[i] >= o {
            c = f.mul(&c, &mu.values[i]);
        }
    }
    Ok((c, k.add(a, b)))
}

/// Full μ-table of canonical class representatives on all of `K`, with every
/// value computed by both [`MuFunction::eval_rules`] and
/// [`MuFunction::eval_monomial`] and compared.
pub fn validate_mu<F: Field>(beta: &AltBicharacter, mu: &MuFunction<F>) -> Result<BTreeMap<GroupElement, F::Elem>> {
    if beta.group() != mu.group() {
        return Err(Error::Precondition("β and μ are defined on different groups".into()));
    }
    let f = mu.field();
    let mut out = BTreeMap::new();
    for g in mu.group().elements() {
        let o = mu.group().element_order(&g);
        let r1 = mu.eval_rules(beta, &g)?;
        let r2 = mu.eval_monomial(beta, &g)?;
        if !same_class(f, &r1, &r2, o)? {
            return Err(Error::Internal(format!(
                "μ({g:?}) disagrees between routes: {} vs {}",
                f.fmt_elem(&r1),
                f.fmt_elem(&r2)
            )));
        }
        out.insert(g, f.nth_power_class(&r1, o)?);
    }
    Ok(out)
}

/// `D(K, β, μ)` with basis `X^n` in lexicographic order of `n`.
pub fn construct<F: Field>(beta: &AltBicharacter, mu: &MuFunction<F>) -> Result<GradedAlgebra<F>> {
    if beta.group() != mu.group() {
        return Err(Error::Precondition("β and μ are defined on different groups".into()));
    }
    let f = mu.field();
    let k = mu.group();
    let w = f.roots_of_unity_count();
    let need = beta.value_order();
    if w % need != 0 {
        return Err(Error::Unsupported(format!(
            "β takes values of order {need}; the field has only {w} roots of unity"
        )));
    }
    let els: Vec<GroupElement> = k.elements().collect();
    let mut entries = Vec::with_capacity(els.len() * els.len());
    for (i, a) in els.iter().enumerate() {
        for (j, b) in els.iter().enumerate() {
            let (c, t) = normal_form_product(beta, mu, a, b)?;
            entries.push((i, j, k.index_of(&t), c));
        }
    }
    let mut unit = vec![f.zero(); els.len()];
    unit[0] = f.one();
    GradedAlgebra::new(f.clone(), k.clone(), els, entries, Some(unit))
}

/// `β(s, t)` from `X_s X_t = β(s, t) X_t X_s`; the support must be all of `K`.
pub fn commutation_bicharacter<F: Field>(a: &GradedAlgebra<F>) -> Result<AltBicharacter> {
    let k = a.group();
    check_full_1dim(a)?;
    let f = a.field();
    let m = k.rank();
    let mut pairs = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let (s, t) = (k.generator(i), k.generator(j));
            let (bs, bt) = (a.basis_vector(a.index_of_degree(&s).unwrap()), a.basis_vector(a.index_of_degree(&t).unwrap()));
            let idx = a.index_of_degree(&k.add(&s, &t)).unwrap();
            let (st, ts) = (a.mul(&bs, &bt)[idx].clone(), a.mul(&bt, &bs)[idx].clone());
            if f.is_zero(&st) || f.is_zero(&ts) {
                return Err(Error::Precondition(format!(
                    "zero structure constant between generators {i} and {j}: not graded-division"
                )));
            }
            let b = f.div(&st, &ts)?;
            let (n, d) = f.angle_of(&b).ok_or_else(|| {
                Error::Precondition(format!("commutation factor {} is not a root of unity", f.fmt_elem(&b)))
            })?;
            pairs.push((i, j, n as i64, d));
        }
    }
    AltBicharacter::from_angles(k, &pairs)
}

/// `μ_i = X_{a_i}^{o(a_i)}` read from the algebra, as canonical class representatives.
pub fn mu_invariant<F: Field>(a: &GradedAlgebra<F>) -> Result<MuFunction<F>> {
    let k = a.group();
    check_full_1dim(a)?;
    let f = a.field();
    let values = (0..k.rank())
        .map(|i| {
            let o = k.orders()[i];
            mu_of_degree(a, &k.generator(i)).and_then(|v| f.nth_power_class(&v, o))
        })
        .collect::<Result<Vec<_>>>()?;
    MuFunction::new(f.clone(), k, values)
}

/// The scalar `X_t^{o(t)}` for the basis vector `X_t`.
pub fn mu_of_degree<F: Field>(a: &GradedAlgebra<F>, t: &[u64]) -> Result<F::Elem> {
    let i = a
        .index_of_degree(t)
        .ok_or_else(|| Error::Precondition(format!("degree {t:?} is not in the support")))?;
    let x = a.pow(&a.basis_vector(i), a.group().element_order(t));
    let c = a
        .as_scalar(&x)
        .ok_or_else(|| Error::Precondition(format!("X_{t:?}^o(t) is not a scalar")))?;
    if a.field().is_zero(&c) {
        return Err(Error::Precondition(format!("X_{t:?} is nilpotent: not graded-division")));
    }
    Ok(c)
}

fn check_full_1dim<F: Field>(a: &GradedAlgebra<F>) -> Result<()> {
    if !a.has_1dim_components() || a.dim() as u64 != a.group().order() {
        return Err(Error::Precondition(
            "invariants need 1-dimensional components on the whole group".into(),
        ));
    }
    Ok(())
}

/// Subalgebras `A_{Tor_p}` for each prime dividing `|K|`.
pub fn primary_decompose<F: Field>(a: &GradedAlgebra<F>) -> Result<Vec<(u64, GradedAlgebra<F>)>> {
    let k = a.group();
    prime_divisors(k.order())
        .into_iter()
        .map(|p| Ok((p, a.subalgebra(&k.torsion_p_part(p)?))))
        .collect()
}

/// Whether multiplication `⊗_p A_{Tor_p} → A` is an isomorphism: distinct
/// primary parts commute and the product of their basis vectors is a nonzero
/// multiple of the basis vector of the summed degree.
pub fn verify_primary_tensor<F: Field>(a: &GradedAlgebra<F>, parts: &[(u64, GradedAlgebra<F>)]) -> bool {
    let k = a.group();
    let f = a.field();
    let dim: usize = parts.iter().map(|(_, p)| p.dim()).product();
    if dim != a.dim() {
        return false;
    }
    let supports: Vec<Vec<GroupElement>> = parts.iter().map(|(_, p)| p.support()).collect();
    for x in 0..supports.len() {
        for y in x + 1..supports.len() {
            for s in &supports[x] {
                for t in &supports[y] {
                    let (bs, bt) = (a.basis_vector(a.index_of_degree(s).unwrap()), a.basis_vector(a.index_of_degree(t).unwrap()));
                    if a.mul(&bs, &bt) != a.mul(&bt, &bs) {
                        return false;
                    }
                }
            }
        }
    }
    let mut combos: Vec<(GroupElement, Vec<F::Elem>)> = vec![(k.zero(), a.unit().to_vec())];
    for sup in &supports {
        combos = combos
            .into_iter()
            .flat_map(|(g, v)| {
                sup.iter()
                    .map(|t| (k.add(&g, t), a.mul(&v, &a.basis_vector(a.index_of_degree(t).unwrap()))))
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    let mut seen: Vec<GroupElement> = combos.iter().map(|(g, _)| g.clone()).collect();
    seen.sort();
    seen.dedup();
    seen.len() == a.dim()
        && combos
            .iter()
            .all(|(g, v)| a.index_of_degree(g).is_some_and(|i| !f.is_zero(&v[i])))
}

/// `{"group", "field", "beta": [[i, j, value]], "mu": [[i, value]]}`.
pub fn params_to_json<F: Field>(beta: &AltBicharacter, mu: &MuFunction<F>) -> Result<Value> {
    let f = mu.field();
    let b = beta
        .pairs()
        .into_iter()
        .map(|(i, j, n, d)| Ok(json!([i, j, f.elem_to_json(&f.angle_value(n as i64, d)?)])))
        .collect::<Result<Vec<_>>>()?;
    let m: Vec<Value> = mu
        .values()
        .iter()
        .enumerate()
        .map(|(i, v)| json!([i, f.elem_to_json(v)]))
        .collect();
    Ok(json!({"group": mu.group(), "field": f.descriptor(), "beta": b, "mu": m}))
}

/// Inverse of [`params_to_json`]; missing `beta`/`mu` entries default to 1.
pub fn params_from_json(v: &Value) -> Result<(AltBicharacter, MuFunction<AnyField>)> {
    let field = AnyField::from_descriptor(v.get("field").unwrap_or(&json!({"kind": "R"})))?;
    let group: FinAbGroup = serde_json::from_value(
        v.get("group")
            .cloned()
            .ok_or_else(|| Error::Descriptor("parameters lack group".into()))?,
    )?;
    let group = FinAbGroup::new(group.orders().to_vec())?;
    let arr = |key: &str| -> Result<Vec<Value>> {
        match v.get(key) {
            None => Ok(vec![]),
            Some(Value::Array(a)) => Ok(a.clone()),
            Some(other) => Err(Error::Descriptor(format!("{key} must be an array: {other}"))),
        }
    };
    let idx = |x: &Value| {
        x.as_u64()
            .map(|n| n as usize)
            .ok_or_else(|| Error::Descriptor(format!("bad generator index {x}")))
    };
    let mut pairs = Vec::new();
    for e in arr("beta")? {
        match e.as_array().map(Vec::as_slice) {
            Some([i, j, val]) => {
                let (i, j) = (idx(i)?, idx(j)?);
                let x = field.elem_from_json(val)?;
                let (n, d) = field.angle_of(&x).ok_or_else(|| {
                    Error::Precondition(format!("β({i},{j}) = {val} is not a root of unity in the field"))
                })?;
                let (i, j, n) = if i < j { (i, j, n as i64) } else { (j, i, -(n as i64)) };
                pairs.push((i, j, n, d));
            }
            _ => return Err(Error::Descriptor(format!("β entry must be [i, j, value]: {e}"))),
        }
    }
    let beta = AltBicharacter::from_angles(&group, &pairs)?;
    let mut values = vec![field.one(); group.rank()];
    for e in arr("mu")? {
        match e.as_array().map(Vec::as_slice) {
            Some([i, val]) => {
                let i = idx(i)?;
                if i >= values.len() {
                    return Err(Error::Precondition(format!("μ index {i} out of range")));
                }
                values[i] = field.elem_from_json(val)?;
            }
            _ => return Err(Error::Descriptor(format!("μ entry must be [i, value]: {e}"))),
        }
    }
    let mu = MuFunction::new(field, &group, values)?;
    Ok((beta, mu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{Rationals, Reals};
    use crate::gradedalg::graded_iso_1dim;
    use num_rational::BigRational;

    fn g(orders: &[u64]) -> FinAbGroup {
        FinAbGroup::new(orders.to_vec()).unwrap()
    }

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn quaternions_from_invariants() {
        let k = g(&[2, 2]);
        let beta = AltBicharacter::from_signs(&k, &[(0, 1)]).unwrap();
        let mu = MuFunction::new(Reals, &k, vec![r(-1), r(-1)]).unwrap();
        let h = construct(&beta, &mu).unwrap();
        assert!(h.verify_associative().associative);
        assert_eq!(h.is_graded_division(), Ok(true));
        assert_eq!(commutation_bicharacter(&h).unwrap(), beta);
        let table = validate_mu(&beta, &mu).unwrap();
        for t in k.elements().skip(1) {
            assert_eq!(table[&t], r(-1));
            assert_eq!(mu_of_degree(&h, &t).unwrap(), r(-1));
        }
    }

    #[test]
    fn x4_plus_1_over_q() {
        let k = g(&[4]);
        let mu = MuFunction::new(Rationals::default(), &k, vec![r(-1)]).unwrap();
        let a = construct(&AltBicharacter::trivial(&k), &mu).unwrap();
        let x = a.basis_vector(1);
        assert_eq!(a.pow(&x, 4), a.scale(&r(-1), a.unit()));
        assert!(a.is_commutative());
    }

    #[test]
    fn coprime_rule_over_q() {
        let k = g(&[2, 3]);
        let mu = MuFunction::new(Rationals::default(), &k, vec![r(2), r(1)]).unwrap();
        let beta = AltBicharacter::trivial(&k);
        let table = validate_mu(&beta, &mu).unwrap();
        assert_eq!(table[&vec![1, 1]], r(8));
    }

    #[test]
    fn equal_order_two_correction() {
        let k = g(&[2, 2]);
        let beta = AltBicharacter::from_signs(&k, &[(0, 1)]).unwrap();
        let mu = MuFunction::new(Reals, &k, vec![r(1), r(1)]).unwrap();
        assert_eq!(mu.eval_rules(&beta, &[1, 1]).unwrap(), r(-1));
    }

    #[test]
    fn radical_examples() {
        let k = g(&[2, 2]);
        assert_eq!(AltBicharacter::trivial(&k).radical().order(), 4);
        assert_eq!(AltBicharacter::from_signs(&k, &[(0, 1)]).unwrap().radical().order(), 1);
        let k = g(&[4, 2]);
        let rad = AltBicharacter::from_signs(&k, &[(0, 1)]).unwrap().radical();
        assert_eq!(rad.elements, vec![vec![0, 0], vec![2, 0]]);
    }

    #[test]
    fn order_condition_enforced() {
        let k = g(&[2, 3]);
        assert!(AltBicharacter::from_signs(&k, &[(0, 1)]).is_err());
        assert!(AltBicharacter::from_angles(&g(&[4, 4]), &[(0, 1, 1, 4)]).is_ok());
    }

    #[test]
    fn identity_witness() {
        let k = g(&[4]);
        let beta = AltBicharacter::trivial(&k);
        let a = construct(&beta, &MuFunction::new(Reals, &k, vec![r(1)]).unwrap()).unwrap();
        let w = graded_iso_1dim(&a, &a).unwrap().unwrap();
        assert!(w.values().all(|x| *x == r(1)));
    }

    #[test]
    fn primary_parts_of_z6() {
        let k = g(&[6]);
        let a = construct(&AltBicharacter::trivial(&k), &MuFunction::trivial(Rationals::default(), &k)).unwrap();
        let parts = primary_decompose(&a).unwrap();
        assert_eq!(parts.iter().map(|(p, x)| (*p, x.support())).collect::<Vec<_>>(), vec![
            (2, vec![vec![0], vec![3]]),
            (3, vec![vec![0], vec![2], vec![4]])
        ]);
        assert!(verify_primary_tensor(&a, &parts));
    }

    #[test]
    fn json_round_trip() {
        let k = g(&[2, 2]);
        let beta = AltBicharacter::from_signs(&k, &[(0, 1)]).unwrap();
        let mu = MuFunction::new(AnyField::R(Reals), &k, vec![AnyField::R(Reals).from_int(-1); 2]).unwrap();
        let v = params_to_json(&beta, &mu).unwrap();
        let (b2, m2) = params_from_json(&v).unwrap();
        assert_eq!(b2, beta);
        assert!(m2.same_classes(&mu).unwrap());
    }
}
