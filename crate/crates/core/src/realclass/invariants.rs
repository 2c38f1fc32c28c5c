//! Graded-isomorphism invariants read off a structure-constant table.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::{AdmissibleCase, KContext, RealClassLabel};
use crate::abelian::GroupElement;
use crate::error::{Error, Result};
use crate::exactfield::{AnyElem, AnyField, Field};
use crate::gradedalg::GradedAlgebra;

/// Invariants separating the representatives of the real classification.
///
/// `beta` is the commutation bicharacter on the support of `Cent(D_e)`, stored as
/// nontrivial angles on pairs `s < t` and replaced by its inverse when that is
/// smaller. `squares[t]` is the sign of `d²` for `t` of order 2 whenever that sign
/// is the same for every nonzero `d ∈ D_t`. `relative_squares[(t, h)]` is the sign
/// of `d_{t+h}² / d_t²` for `t` outside the centralizer support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumInvariants {
    /// Over `R`.
    pub dim_e: usize,
    pub e_central: bool,
    pub e_commutative: bool,
    pub support: Vec<GroupElement>,
    pub centralizer_support: Vec<GroupElement>,
    pub beta: BTreeMap<(GroupElement, GroupElement), (u64, u64)>,
    pub squares: BTreeMap<GroupElement, i8>,
    pub relative_squares: BTreeMap<(GroupElement, GroupElement), i8>,
}

impl StratumInvariants {
    pub fn to_json(&self) -> Value {
        json!({
            "dim_e": self.dim_e,
            "e_central": self.e_central,
            "e_commutative": self.e_commutative,
            "support": self.support,
            "centralizer_support": self.centralizer_support,
            "beta": self.beta.iter().map(|((s, t), (n, d))| json!([s, t, n, d])).collect::<Vec<_>>(),
            "squares": self.squares.iter().map(|(t, s)| json!([t, s])).collect::<Vec<_>>(),
            "relative_squares": self.relative_squares.iter().map(|((t, h), s)| json!([t, h, s])).collect::<Vec<_>>(),
        })
    }
}

/// `c` with `p = c·q`, if any.
fn scalar_ratio<F: Field>(a: &GradedAlgebra<F>, p: &[F::Elem], q: &[F::Elem]) -> Option<F::Elem> {
    let f = a.field();
    let i = q.iter().position(|c| !f.is_zero(c))?;
    let c = f.div(&p[i], &q[i]).ok()?;
    (a.scale(&c, q) == p).then_some(c)
}

fn first_nonzero_degree<F: Field>(a: &GradedAlgebra<F>, x: &[F::Elem]) -> Option<GroupElement> {
    x.iter().position(|c| !a.field().is_zero(c)).map(|i| a.degree(i).clone())
}

fn first_basis_vector<F: Field>(a: &GradedAlgebra<F>, t: &[u64]) -> Option<Vec<F::Elem>> {
    a.index_of_degree(t).map(|i| a.basis_vector(i))
}

pub fn read_invariants(a: &GradedAlgebra<AnyField>) -> Result<StratumInvariants> {
    let f = a.field();
    let g = a.group();
    let real_factor = if matches!(f, AnyField::Cyclotomic(_)) { 2 } else { 1 };
    let comps = a.components();
    let zero = g.zero();
    let e_idx = comps
        .get(&zero)
        .cloned()
        .ok_or_else(|| Error::Precondition("identity component is zero".into()))?;
    let e_commutative = e_idx.iter().all(|&i| {
        e_idx.iter().all(|&j| {
            let (x, y) = (a.basis_vector(i), a.basis_vector(j));
            a.mul(&x, &y) == a.mul(&y, &x)
        })
    });

    let mut cent: BTreeMap<GroupElement, Vec<Vec<AnyElem>>> = BTreeMap::new();
    for x in a.centralizer_of_basis(&e_idx) {
        if let Some(d) = first_nonzero_degree(a, &x) {
            cent.entry(d).or_default().push(x);
        }
    }
    let centralizer_support: Vec<GroupElement> = cent.keys().cloned().collect();

    let mut beta = BTreeMap::new();
    for (i, s) in centralizer_support.iter().enumerate() {
        for t in &centralizer_support[i + 1..] {
            let (x, y) = (&cent[s][0], &cent[t][0]);
            let c = scalar_ratio(a, &a.mul(x, y), &a.mul(y, x))
                .ok_or_else(|| Error::Internal(format!("commutator of degrees {s:?}, {t:?} is not scalar")))?;
            let (n, d) = f
                .angle_of(&c)
                .ok_or_else(|| Error::Internal(format!("commutator of degrees {s:?}, {t:?} is not a root of unity")))?;
            if n != 0 {
                beta.insert((s.clone(), t.clone()), (n, d));
            }
        }
    }
    let inverse: BTreeMap<_, _> = beta.iter().map(|(k, &(n, d))| (k.clone(), ((d - n) % d, d))).collect();
    if inverse < beta {
        beta = inverse;
    }

    let support = a.support();
    let mut squares = BTreeMap::new();
    for t in support.iter().filter(|t| **t != zero && g.is_zero(&g.scale(2, t))) {
        let d = match cent.get(t) {
            Some(v) if v.len() == 1 => v[0].clone(),
            Some(_) => continue,
            None => first_basis_vector(a, t).expect("t in support"),
        };
        if let Some(s) = a.as_scalar(&a.mul(&d, &d)).and_then(|c| f.sign(&c)) {
            squares.insert(t.clone(), s);
        }
    }

    let mut relative_squares = BTreeMap::new();
    let cent_2: Vec<&GroupElement> = centralizer_support
        .iter()
        .filter(|h| **h != zero && g.is_zero(&g.scale(2, h)))
        .collect();
    for t in support.iter().filter(|t| !cent.contains_key(*t)) {
        let x = first_basis_vector(a, t).expect("t in support");
        let x2 = a.mul(&x, &x);
        for h in &cent_2 {
            let y = first_basis_vector(a, &g.add(t, h)).expect("support is a subgroup");
            let c = scalar_ratio(a, &a.mul(&y, &y), &x2)
                .ok_or_else(|| Error::Internal(format!("squares of degrees {t:?}, {h:?} are not proportional")))?;
            if let Some(s) = f.sign(&c) {
                relative_squares.insert((t.clone(), (*h).clone()), s);
            }
        }
    }

    Ok(StratumInvariants {
        dim_e: e_idx.len() * real_factor,
        e_central: a.identity_component_is_central(),
        e_commutative,
        support,
        centralizer_support,
        beta,
        squares,
        relative_squares,
    })
}

fn verdict(ok: bool) -> String {
    if ok { "pass" } else { "fail" }.to_string()
}

/// `d² ∈ Z(A)` for every `d ∈ A_t`, `t ∉ K`: with `A_t = ⟨y_1, y_2⟩` this is
/// centrality of `y_1²`, `y_2²` and `y_1 y_2 + y_2 y_1`.
fn squares_central_off(a: &GradedAlgebra<AnyField>, k: &crate::abelian::Subgroup) -> bool {
    let n = a.dim();
    let central = |z: &[AnyElem]| {
        (0..n).all(|i| {
            let b = a.basis_vector(i);
            a.mul(z, &b) == a.mul(&b, z)
        })
    };
    a.components().iter().filter(|(t, _)| !k.contains(t)).all(|(_, idx)| {
        let ys: Vec<Vec<AnyElem>> = idx.iter().map(|&i| a.basis_vector(i)).collect();
        (0..ys.len()).all(|i| {
            (i..ys.len()).all(|j| central(&a.add(&a.mul(&ys[i], &ys[j]), &a.mul(&ys[j], &ys[i]))))
        })
    })
}

/// Checks that the invariants of the `T`-graded representative match its label.
pub(crate) fn check_label(label: &RealClassLabel, a: &GradedAlgebra<AnyField>) -> Result<Vec<(String, String)>> {
    let inv = read_invariants(a)?;
    let t = label.group();
    let zero = t.zero();
    let mut log = Vec::new();
    let stratum = match label.item() {
        1 => inv.dim_e == 1,
        2 => inv.dim_e == 4 && !inv.e_commutative,
        3 => inv.dim_e == 2 && !inv.e_central,
        _ => inv.dim_e == 2 && inv.e_central,
    };
    log.push(("stratum".to_string(), verdict(stratum)));
    log.push(("graded_central".to_string(), verdict(a.graded_center_e() == 1)));
    log.push(("support".to_string(), verdict(inv.support == t.elements().collect::<Vec<_>>())));

    // label β in the coordinates of the algebra's grading group
    let pairs = |elems: &[GroupElement], angle: &dyn Fn(&GroupElement, &GroupElement) -> (u64, u64)| {
        let mut m = BTreeMap::new();
        for (i, s) in elems.iter().enumerate() {
            for u in &elems[i + 1..] {
                let (n, d) = angle(s, u);
                if n != 0 {
                    m.insert((s.clone(), u.clone()), (n, d));
                }
            }
        }
        m
    };
    let two_torsion = |elems: &[GroupElement]| -> Vec<GroupElement> {
        elems.iter().filter(|x| **x != zero && t.is_zero(&t.scale(2, x))).cloned().collect()
    };
    match label {
        RealClassLabel::Item1 { beta, mu, .. } | RealClassLabel::Item2 { beta, mu, .. } => {
            let all: Vec<GroupElement> = t.elements().collect();
            log.push((
                "centralizer".to_string(),
                verdict(inv.centralizer_support == all),
            ));
            log.push(("commutation".to_string(), verdict(inv.beta == pairs(&all, &|s, u| beta.angle(s, u)))));
            let expect: BTreeMap<GroupElement, i8> = two_torsion(&all).into_iter().map(|x| (x.clone(), mu[&x])).collect();
            log.push(("squares".to_string(), verdict(inv.squares == expect)));
        }
        RealClassLabel::Item3 { k, beta, nu, .. } => {
            let ctx = KContext::new(t, k)?;
            log.push(("centralizer".to_string(), verdict(inv.centralizer_support == k.elements)));
            let want = pairs(&k.elements, &|s, u| beta.angle(&ctx.pres.coords[s], &ctx.pres.coords[u]));
            log.push(("commutation".to_string(), verdict(inv.beta == want)));
            let t0 = ctx.eligible_t0().remove(0);
            let data = ctx.data_at(&nu.values, &t0);
            let mut rel = BTreeMap::new();
            for x in t.elements().filter(|x| !k.contains(x)) {
                let at = ctx.transport(beta, &data, &t.sub(&x, &t0));
                for h in two_torsion(&ctx.k2) {
                    rel.insert((x.clone(), h.clone()), at.mu[&h]);
                }
            }
            let sq: BTreeMap<GroupElement, i8> = match nu.case {
                AdmissibleCase::A => nu.values.clone(),
                AdmissibleCase::B => BTreeMap::new(),
            };
            log.push(("squares".to_string(), verdict(inv.squares == sq)));
            log.push(("relative_squares".to_string(), verdict(inv.relative_squares == rel)));
            log.push(("square_central".to_string(), verdict(squares_central_off(a, k))));
        }
        RealClassLabel::Item4 { beta, .. } => {
            let all: Vec<GroupElement> = t.elements().collect();
            let b = pairs(&all, &|s, u| beta.angle(s, u));
            let bi = pairs(&all, &|s, u| beta.inverse().angle(s, u));
            log.push(("centralizer".to_string(), verdict(inv.centralizer_support == all)));
            log.push(("commutation".to_string(), verdict(inv.beta == b.min(bi))));
        }
    }
    Ok(log)
}
