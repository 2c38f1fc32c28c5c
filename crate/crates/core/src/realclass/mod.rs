//! Real graded-division algebras with finite abelian support.
//!
//! Every such algebra is graded-isomorphic to exactly one representative in one
//! of four strata, distinguished by the identity component `D_e`:
//!
//! | item | `D_e` | parameters |
//! |------|-------|------------|
//! | 1 | `R` | `(T, β, μ)`, `β` sign-valued, `μ` a quadratic form on `T_[2]` |
//! | 2 | `H` | as item 1; the algebra is `D(T, β, μ) ⊗ H` |
//! | 3 | `C`, not central | `(T, K, β, ν)`, `[T:K] = 2`, `ν` admissible |
//! | 4 | `C`, central | `(T, {β, β⁻¹})`, `β` complex-valued |
//!
//! Item 3 splits into case a (`K` a direct summand of `T`) and case b.
//! Algebras over `R` are built with exact rational coefficients; item 4 is built
//! over a cyclotomic field standing in for `C`.

mod invariants;
pub mod item3;

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use rayon::prelude::*;
use serde_json::{json, Value};

pub use invariants::{read_invariants, StratumInvariants};
pub use item3::{
    canonicalize_item3, construct_item3, enumerate_admissible, item3_parameters, AdmissibleCase, AdmissibleMap,
    Item3Data, KContext,
};

use crate::abelian::{FinAbGroup, GroupElement, Subgroup};
use crate::arith::{gcd, lcm};
use crate::error::{Error, Result};
use crate::exactfield::{AnyElem, AnyField, CyclotomicField, Reals};
use crate::gradedalg::{algebra_to_json, quaternions, GradedAlgebra};
use crate::quasitorus::{construct, AltBicharacter, MuFunction};

/// A `±1`-valued map keyed by group elements.
pub type SignMap = BTreeMap<GroupElement, i8>;

/// Alternating `±1`-valued bicharacters on `T`; a generator pair may be `-1`
/// only when both orders are even.
pub fn enumerate_bicharacters_pm1(t: &FinAbGroup) -> Vec<AltBicharacter> {
    let o = t.orders();
    let pairs: Vec<(usize, usize)> = (0..o.len())
        .flat_map(|i| (i + 1..o.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| o[i] % 2 == 0 && o[j] % 2 == 0)
        .collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let neg: Vec<(usize, usize)> =
                pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &p)| p).collect();
            AltBicharacter::from_signs(t, &neg).expect("sign pairs satisfy the order conditions")
        })
        .collect()
}

/// All alternating bicharacters on `T` with values in `C^×`: the pair `(i, j)`
/// takes the angles `k / gcd(o_i, o_j)`.
pub fn enumerate_bicharacters_complex(t: &FinAbGroup) -> Vec<AltBicharacter> {
    let o = t.orders();
    let pairs: Vec<(usize, usize, u64)> = (0..o.len())
        .flat_map(|i| (i + 1..o.len()).map(move |j| (i, j, gcd(o[i], o[j]))))
        .filter(|&(_, _, g)| g > 1)
        .collect();
    let mut out = Vec::new();
    let mut odometer = vec![0u64; pairs.len()];
    loop {
        let angles: Vec<(usize, usize, i64, u64)> =
            pairs.iter().zip(&odometer).map(|(&(i, j, g), &k)| (i, j, k as i64, g)).collect();
        out.push(AltBicharacter::from_angles(t, &angles).expect("angles satisfy the order conditions"));
        let mut pos = 0;
        loop {
            if pos == pairs.len() {
                return out;
            }
            odometer[pos] += 1;
            if odometer[pos] < pairs[pos].2 {
                break;
            }
            odometer[pos] = 0;
            pos += 1;
        }
    }
}

/// `±1` as a sign.
fn sign_of(beta: &AltBicharacter, g: &[u64], h: &[u64]) -> i8 {
    if beta.angle(g, h).0 == 0 {
        1
    } else {
        -1
    }
}

/// Quadratic forms `μ(x + y) = pol(x, y)μ(x)μ(y)` on the elementary abelian
/// 2-subgroup with elements `elems`, generated by free values on a basis.
pub fn quadratic_forms_on(
    t: &FinAbGroup,
    elems: &[GroupElement],
    pol: impl Fn(&[u64], &[u64]) -> i8,
) -> Result<Vec<SignMap>> {
    // coordinates of every element as a subset of the basis
    let mut coords: BTreeMap<GroupElement, u64> = BTreeMap::new();
    coords.insert(t.zero(), 0);
    let mut basis: Vec<GroupElement> = Vec::new();
    for x in elems {
        if coords.contains_key(x) {
            continue;
        }
        let b = basis.len();
        let old: Vec<(GroupElement, u64)> = coords.iter().map(|(g, &m)| (g.clone(), m)).collect();
        for (g, m) in old {
            coords.insert(t.add(&g, x), m | 1 << b);
        }
        basis.push(x.clone());
    }
    if coords.len() != elems.len() || elems.iter().any(|x| !coords.contains_key(x)) {
        return Err(Error::Precondition("elements do not form an elementary abelian 2-group".into()));
    }
    let r = basis.len();
    let mut out = Vec::with_capacity(1 << r);
    for choice in 0u64..1 << r {
        let form: SignMap = coords
            .iter()
            .map(|(x, &m)| {
                let mut v: i8 = 1;
                for i in (0..r).filter(|i| m >> i & 1 == 1) {
                    if choice >> i & 1 == 1 {
                        v = -v;
                    }
                    for j in (i + 1..r).filter(|j| m >> j & 1 == 1) {
                        v *= pol(&basis[i], &basis[j]);
                    }
                }
                (x.clone(), v)
            })
            .collect();
        for x in elems {
            for y in elems {
                if form[&t.add(x, y)] != pol(x, y) * form[x] * form[y] {
                    return Err(Error::Internal(format!("extended form fails at ({x:?}, {y:?})")));
                }
            }
        }
        out.push(form);
    }
    out.sort();
    Ok(out)
}

/// Quadratic forms on `T_[2]` with polarization `β`.
pub fn enumerate_quadratic_forms(t: &FinAbGroup, beta: &AltBicharacter) -> Result<Vec<SignMap>> {
    if !beta.is_sign_valued() {
        return Err(Error::Precondition("β must be ±1-valued".into()));
    }
    quadratic_forms_on(t, &t.two_torsion().elements, |g, h| sign_of(beta, g, h))
}

/// Reference oracle: every sign map on `T_[2]` filtered by the form identity.
pub fn quadratic_forms_exhaustive(t: &FinAbGroup, beta: &AltBicharacter) -> Result<Vec<SignMap>> {
    let elems = t.two_torsion().elements;
    if elems.len() > 16 {
        return Err(Error::Precondition("T_[2] too large for exhaustive enumeration".into()));
    }
    let mut out = Vec::new();
    for mask in 0u64..1 << elems.len() {
        let form: SignMap = elems
            .iter()
            .enumerate()
            .map(|(b, x)| (x.clone(), if mask >> b & 1 == 1 { -1 } else { 1 }))
            .collect();
        if elems
            .iter()
            .all(|x| elems.iter().all(|y| form[&t.add(x, y)] == sign_of(beta, x, y) * form[x] * form[y]))
        {
            out.push(form);
        }
    }
    Ok(out)
}

/// Parameters of one representative, relative to an abstract group `T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RealClassLabel {
    /// `D_e = R`.
    Item1 { t: FinAbGroup, beta: AltBicharacter, mu: SignMap },
    /// `D_e = H`.
    Item2 { t: FinAbGroup, beta: AltBicharacter, mu: SignMap },
    /// `D_e = C ⊄ Z(D)`; `beta` lives on the canonical presentation of `K`.
    Item3 {
        t: FinAbGroup,
        k: Subgroup,
        beta: AltBicharacter,
        nu: AdmissibleMap,
    },
    /// `D_e = C ⊆ Z(D)`; `beta` is the smaller of `{β, β⁻¹}` by key.
    Item4 { t: FinAbGroup, beta: AltBicharacter },
}

impl RealClassLabel {
    pub fn item(&self) -> u8 {
        match self {
            RealClassLabel::Item1 { .. } => 1,
            RealClassLabel::Item2 { .. } => 2,
            RealClassLabel::Item3 { .. } => 3,
            RealClassLabel::Item4 { .. } => 4,
        }
    }

    /// `1`, `2`, `3a`, `3b` or `4`.
    pub fn tag(&self) -> &'static str {
        match self {
            RealClassLabel::Item1 { .. } => "1",
            RealClassLabel::Item2 { .. } => "2",
            RealClassLabel::Item3 { nu, .. } if nu.case == AdmissibleCase::A => "3a",
            RealClassLabel::Item3 { .. } => "3b",
            RealClassLabel::Item4 { .. } => "4",
        }
    }

    pub fn group(&self) -> &FinAbGroup {
        match self {
            RealClassLabel::Item1 { t, .. }
            | RealClassLabel::Item2 { t, .. }
            | RealClassLabel::Item3 { t, .. }
            | RealClassLabel::Item4 { t, .. } => t,
        }
    }

    pub fn to_json(&self) -> Value {
        let beta_json = |b: &AltBicharacter| {
            b.pairs().into_iter().map(|(i, j, n, d)| json!([i, j, n, d])).collect::<Vec<_>>()
        };
        let signs = |m: &SignMap| m.iter().map(|(g, s)| json!([g, s])).collect::<Vec<_>>();
        match self {
            RealClassLabel::Item1 { t, beta, mu } | RealClassLabel::Item2 { t, beta, mu } => json!({
                "item": self.tag(),
                "group": t.orders(),
                "beta": beta_json(beta),
                "mu": signs(mu),
            }),
            RealClassLabel::Item3 { t, k, beta, nu } => json!({
                "item": self.tag(),
                "group": t.orders(),
                "k": k.elements,
                "k_group": beta.group().orders(),
                "beta": beta_json(beta),
                "nu": signs(&nu.values),
            }),
            RealClassLabel::Item4 { t, beta } => json!({
                "item": self.tag(),
                "group": t.orders(),
                "beta": beta_json(beta),
            }),
        }
    }
}

/// Every label with support exactly `T`, optionally restricted to some items.
pub fn enumerate_labels(t: &FinAbGroup, items: &BTreeSet<u8>) -> Result<Vec<RealClassLabel>> {
    let mut out = Vec::new();
    if items.contains(&1) || items.contains(&2) {
        let mut pairs = Vec::new();
        for beta in enumerate_bicharacters_pm1(t) {
            for mu in enumerate_quadratic_forms(t, &beta)? {
                pairs.push((beta.clone(), mu));
            }
        }
        if items.contains(&1) {
            out.extend(pairs.iter().map(|(beta, mu)| RealClassLabel::Item1 {
                t: t.clone(),
                beta: beta.clone(),
                mu: mu.clone(),
            }));
        }
        if items.contains(&2) {
            out.extend(pairs.into_iter().map(|(beta, mu)| RealClassLabel::Item2 {
                t: t.clone(),
                beta,
                mu,
            }));
        }
    }
    if items.contains(&3) {
        for k in t.index2_subgroups() {
            let ctx = KContext::new(t, &k)?;
            for (beta, nu) in item3_parameters(&ctx)? {
                out.push(RealClassLabel::Item3 {
                    t: t.clone(),
                    k: k.clone(),
                    beta,
                    nu,
                });
            }
        }
    }
    if items.contains(&4) {
        for beta in enumerate_bicharacters_complex(t) {
            if beta.key() <= beta.inverse().key() {
                out.push(RealClassLabel::Item4 { t: t.clone(), beta });
            }
        }
    }
    Ok(out)
}

/// `D(T, β, μ)` over `R` with `μ_i = μ((o_i/2)·a_i)` on even-order generators.
pub fn construct_item1(t: &FinAbGroup, beta: &AltBicharacter, mu: &SignMap) -> Result<GradedAlgebra<Reals>> {
    let values: Vec<BigRational> = (0..t.rank())
        .map(|i| {
            let o = t.orders()[i];
            let s = if o % 2 == 0 {
                *mu.get(&t.scale(o / 2, &t.generator(i)))
                    .ok_or_else(|| Error::Precondition("μ is not defined on T_[2]".into()))?
            } else {
                1
            };
            Ok(BigRational::from_integer(s.into()))
        })
        .collect::<Result<_>>()?;
    construct(beta, &MuFunction::new(Reals, t, values)?)
}

/// Conductor of the cyclotomic field used for item 4: contains `i` and every value of `β`.
pub fn item4_conductor(t: &FinAbGroup) -> u64 {
    lcm(t.exponent(), 4)
}

pub fn construct_item4(t: &FinAbGroup, beta: &AltBicharacter) -> Result<GradedAlgebra<CyclotomicField>> {
    let f = CyclotomicField::new(item4_conductor(t));
    construct(beta, &MuFunction::trivial(f, t))
}

fn real_to_any(a: &GradedAlgebra<Reals>) -> GradedAlgebra<AnyField> {
    a.map_field(AnyField::R(Reals), |x| AnyElem::Rat(x.clone()))
}

fn cyc_to_any(a: &GradedAlgebra<CyclotomicField>) -> GradedAlgebra<AnyField> {
    a.map_field(AnyField::Cyclotomic(a.field().clone()), |x| AnyElem::Cyc(x.clone()))
}

/// The representative of a label, graded by `T`.
pub fn construct_item(label: &RealClassLabel) -> Result<GradedAlgebra<AnyField>> {
    match label {
        RealClassLabel::Item1 { t, beta, mu } => Ok(real_to_any(&construct_item1(t, beta, mu)?)),
        RealClassLabel::Item2 { t, beta, mu } => {
            let d = construct_item1(t, beta, mu)?;
            Ok(real_to_any(&d.tensor_trivially_graded(&quaternions(Reals, t.clone()))))
        }
        RealClassLabel::Item3 { t, k, beta, nu } => {
            let ctx = KContext::new(t, k)?;
            if nu.case != ctx.case {
                return Err(Error::Precondition("admissible-map case does not match K".into()));
            }
            if !ctx.is_admissible(beta, &nu.values) {
                return Err(Error::Precondition("ν is not admissible".into()));
            }
            Ok(real_to_any(&construct_item3(&ctx, beta, nu)?))
        }
        RealClassLabel::Item4 { t, beta } => Ok(cyc_to_any(&construct_item4(t, beta)?)),
    }
}

/// `D(T, β)` over `C` is carried to `D(T, β⁻¹)` by complex conjugation of
/// coefficients; checked by equality of structure constants.
pub fn conjugation_is_isomorphism(t: &FinAbGroup, beta: &AltBicharacter) -> Result<bool> {
    let a = construct_item4(t, beta)?;
    let b = construct_item4(t, &beta.inverse())?;
    let f = a.field().clone();
    let conj = a.map_field(f.clone(), |x| f.conjugate(x));
    Ok(algebra_to_json(&conj) == algebra_to_json(&b))
}

#[derive(Debug, Clone)]
pub struct ClassifyOptions {
    /// Every subgroup of `G` as support, rather than `G` itself.
    pub all_subgroups: bool,
    pub items: BTreeSet<u8>,
    /// Run the algebra oracles and label/invariant consistency checks.
    pub verify: bool,
    pub max_order: u64,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            all_subgroups: false,
            items: [1, 2, 3, 4].into_iter().collect(),
            verify: true,
            max_order: 64,
        }
    }
}

/// One representative, graded by the ambient group.
#[derive(Debug, Clone)]
pub struct ClassifiedAlgebra {
    pub label: RealClassLabel,
    /// Images in `G` of the generators of `T`.
    pub embedding: Vec<GroupElement>,
    pub algebra: GradedAlgebra<AnyField>,
    pub invariants: StratumInvariants,
    pub verification: Vec<(String, String)>,
}

impl ClassifiedAlgebra {
    pub fn passed(&self) -> bool {
        self.verification.iter().all(|(_, v)| v == "pass")
    }

    pub fn to_json(&self) -> Value {
        json!({
            "label": self.label.tag(),
            "parameters": self.label.to_json(),
            "embedding": self.embedding,
            "dimension": self.algebra.dim(),
            "algebra": algebra_to_json(&self.algebra),
            "invariants": self.invariants.to_json(),
            "verification": self.verification.iter().map(|(k, v)| json!([k, v])).collect::<Vec<_>>(),
        })
    }
}

#[derive(Debug, Clone)]
pub struct Census {
    pub group: FinAbGroup,
    pub entries: Vec<ClassifiedAlgebra>,
}

impl Census {
    /// Number of labels per item.
    pub fn counts(&self) -> BTreeMap<u8, usize> {
        let mut out = BTreeMap::new();
        for e in &self.entries {
            *out.entry(e.label.item()).or_insert(0) += 1;
        }
        out
    }

    /// Whether no two representatives share their stratum invariants.
    pub fn invariants_pairwise_distinct(&self) -> bool {
        let set: BTreeSet<String> = self.entries.iter().map(|e| e.invariants.to_json().to_string()).collect();
        set.len() == self.entries.len()
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(ClassifiedAlgebra::passed)
    }

    pub fn counts_json(&self) -> Value {
        let c = self.counts();
        json!({
            "group": self.group.orders(),
            "counts": (1u8..=4).map(|i| (i.to_string(), json!(c.get(&i).copied().unwrap_or(0))))
                .collect::<serde_json::Map<_, _>>(),
            "total": self.entries.len(),
        })
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.entries.iter().map(ClassifiedAlgebra::to_json).collect())
    }
}

/// Enumerates, constructs and (optionally) verifies every representative.
///
/// Work is spread over the rayon pool; the output order is the serial order
/// (subgroups by element list, then items, then parameters).
pub fn classify_all(g: &FinAbGroup, opts: &ClassifyOptions) -> Result<Census> {
    if g.order() > opts.max_order {
        return Err(Error::Precondition(format!(
            "|G| = {} exceeds the classification bound {}",
            g.order(),
            opts.max_order
        )));
    }
    let subgroups: Vec<Subgroup> = if opts.all_subgroups {
        let mut s = g.all_subgroups();
        s.sort_by(|a, b| a.elements.cmp(&b.elements));
        s
    } else {
        vec![g.whole()]
    };
    let mut jobs = Vec::new();
    for s in &subgroups {
        let pres = g.present_subgroup(s);
        for label in enumerate_labels(&pres.group, &opts.items)? {
            jobs.push((pres.clone(), label));
        }
    }
    let entries = jobs
        .into_par_iter()
        .map(|(pres, label)| {
            let alg_t = construct_item(&label)?;
            let algebra = alg_t.push_forward(g.clone(), |x| pres.embed(g, x))?;
            let invariants = read_invariants(&algebra)?;
            let verification = if opts.verify {
                let mut log = algebra.verification_log();
                log.extend(invariants::check_label(&label, &alg_t)?);
                log
            } else {
                Vec::new()
            };
            Ok(ClassifiedAlgebra {
                label,
                embedding: pres.images.clone(),
                algebra,
                invariants,
                verification,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Census {
        group: g.clone(),
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(orders: &[u64]) -> FinAbGroup {
        FinAbGroup::new(orders.to_vec()).unwrap()
    }

    #[test]
    fn bicharacter_counts() {
        assert_eq!(enumerate_bicharacters_pm1(&g(&[3])).len(), 1);
        assert_eq!(enumerate_bicharacters_complex(&g(&[3])).len(), 1);
        assert_eq!(enumerate_bicharacters_pm1(&g(&[2, 2])).len(), 2);
        assert_eq!(enumerate_bicharacters_complex(&g(&[4, 4])).len(), 4);
        assert_eq!(enumerate_bicharacters_pm1(&g(&[2, 3])).len(), 1);
    }

    #[test]
    fn quadratic_form_counts_match_exhaustive_filter() {
        for orders in [vec![2], vec![2, 2], vec![4, 2], vec![2, 2, 2]] {
            let t = g(&orders);
            for beta in enumerate_bicharacters_pm1(&t) {
                let mut a = enumerate_quadratic_forms(&t, &beta).unwrap();
                let mut b = quadratic_forms_exhaustive(&t, &beta).unwrap();
                a.sort();
                b.sort();
                assert_eq!(a, b, "{orders:?} {beta:?}");
            }
        }
    }

    #[test]
    fn nondegenerate_klein_forms() {
        let t = g(&[2, 2]);
        let beta = AltBicharacter::from_signs(&t, &[(0, 1)]).unwrap();
        let forms = enumerate_quadratic_forms(&t, &beta).unwrap();
        assert_eq!(forms.len(), 4);
        // exactly one form is -1 on all three nonzero elements
        let all_neg = forms.iter().filter(|m| m.iter().filter(|(_, &s)| s == -1).count() == 3).count();
        assert_eq!(all_neg, 1);
    }

    #[test]
    fn item1_with_negative_mu_is_complex_numbers() {
        let t = g(&[2]);
        let mu: SignMap = [(vec![0], 1), (vec![1], -1)].into_iter().collect();
        let a = construct_item1(&t, &AltBicharacter::trivial(&t), &mu).unwrap();
        let x = a.basis_vector(1);
        assert_eq!(a.as_scalar(&a.mul(&x, &x)), Some(BigRational::from_integer((-1).into())));
    }

    #[test]
    fn conjugation_inverts_beta() {
        let t = g(&[4, 4]);
        for beta in enumerate_bicharacters_complex(&t) {
            assert!(conjugation_is_isomorphism(&t, &beta).unwrap());
        }
    }

    #[test]
    fn census_small_groups() {
        let opts = ClassifyOptions::default();
        let counts = |o: &[u64]| classify_all(&g(o), &opts).unwrap().counts();
        let m = |v: &[(u8, usize)]| v.iter().copied().collect::<BTreeMap<_, _>>();
        assert_eq!(counts(&[2]), m(&[(1, 2), (2, 2), (3, 2), (4, 1)]));
        assert_eq!(counts(&[3]), m(&[(1, 1), (2, 1), (4, 1)]));
        assert_eq!(counts(&[]), m(&[(1, 1), (2, 1), (4, 1)]));
    }

    #[test]
    fn census_z2_passes_oracles_with_distinct_invariants() {
        let c = classify_all(&g(&[2]), &ClassifyOptions::default()).unwrap();
        for e in &c.entries {
            assert!(e.passed(), "{} {:?}", e.label.tag(), e.verification);
        }
        assert!(c.invariants_pairwise_distinct());
    }
}
