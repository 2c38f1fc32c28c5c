use std::collections::BTreeMap;

use super::GradedAlgebra;
use crate::abelian::GroupElement;
use crate::arith::lcm;
use crate::error::{Error, Result};
use crate::exactfield::{cyclotomic_embed, AnyElem, AnyField, CyclotomicField, Field};

/// Scalars `λ_t` with `b^A_t ↦ λ_t b^B_t` a graded isomorphism `A → B`.
pub type IsoWitness<E> = BTreeMap<GroupElement, E>;

/// Decides graded isomorphism of two algebras with 1-dimensional components.
///
/// A graded isomorphism is determined by its values on generators `g_i` of the
/// support, where `λ_i^{o_i} = μ^A_i / μ^B_i` is forced; every choice of roots is
/// propagated to the whole support and checked against all products.
///
/// Returns `Ok(None)` for different supports or when no choice works.
pub fn graded_iso_1dim<F: Field>(a: &GradedAlgebra<F>, b: &GradedAlgebra<F>) -> Result<Option<IsoWitness<F::Elem>>> {
    if a.group() != b.group() {
        return Err(Error::Precondition("algebras are graded by different groups".into()));
    }
    if !a.has_1dim_components() || !b.has_1dim_components() {
        return Err(Error::Precondition("isomorphism search needs 1-dimensional components".into()));
    }
    for alg in [a, b] {
        if let Some((i, j, k, c)) = alg.entries().find(|(_, _, _, c)| !alg.field().is_normalized_constant(c)) {
            return Err(Error::Unnormalized(format!(
                "b{i} b{j} has coefficient {} on b{k}",
                alg.field().fmt_elem(c)
            )));
        }
    }
    if a.support() != b.support() {
        return Ok(None);
    }
    let f = a.field();
    let group = a.group();
    let support = a.support();
    let span = group.span(&support);
    if span.elements != support {
        return Err(Error::Precondition("support is not a subgroup".into()));
    }
    let pres = group.present_subgroup(&span);
    let ia = |t: &[u64]| a.index_of_degree(t).expect("degree in support");
    let ib = |t: &[u64]| b.index_of_degree(t).expect("degree in support");

    // `∏ b_{g_i}^{n_i} = a_t b_t`
    let monomial_coeff = |alg: &GradedAlgebra<F>, idx: &dyn Fn(&[u64]) -> usize, t: &GroupElement| {
        let n = &pres.coords[t];
        let mut v = alg.unit().to_vec();
        for (g, &e) in pres.images.iter().zip(n) {
            let x = alg.basis_vector(idx(g));
            v = alg.mul(&v, &alg.pow(&x, e));
        }
        v[idx(t)].clone()
    };
    let coeff_a: BTreeMap<&GroupElement, F::Elem> = support.iter().map(|t| (t, monomial_coeff(a, &ia, t))).collect();
    let coeff_b: BTreeMap<&GroupElement, F::Elem> = support.iter().map(|t| (t, monomial_coeff(b, &ib, t))).collect();

    let mut choices: Vec<Vec<F::Elem>> = Vec::new();
    for (g, &o) in pres.images.iter().zip(pres.group.orders()) {
        let mu = |alg: &GradedAlgebra<F>, idx: &dyn Fn(&[u64]) -> usize| {
            let x = alg.pow(&alg.basis_vector(idx(g)), o);
            alg.as_scalar(&x)
                .ok_or_else(|| Error::Precondition(format!("power of b_{g:?} is not a scalar")))
        };
        let ratio = f.div(&mu(a, &ia)?, &mu(b, &ib)?)?;
        let mut roots = f.nth_roots(&ratio, o)?;
        // the identity map is tried first when the ratio is trivial
        roots.sort_by_key(|r| !f.is_one(r));
        if roots.is_empty() {
            return Ok(None);
        }
        choices.push(roots);
    }

    let mut odometer = vec![0usize; choices.len()];
    loop {
        let lambda: BTreeMap<&GroupElement, F::Elem> = support
            .iter()
            .map(|t| {
                let n = &pres.coords[t];
                let base = odometer
                    .iter()
                    .zip(&choices)
                    .zip(n)
                    .fold(f.one(), |acc, ((&c, roots), &e)| f.mul(&acc, &f.pow(&roots[c], e)));
                let l = f.div(&f.mul(&base, &coeff_b[t]), &coeff_a[t]).expect("monomials are invertible");
                (t, l)
            })
            .collect();
        if respects_products(a, b, &support, &lambda) {
            return Ok(Some(lambda.into_iter().map(|(t, l)| (t.clone(), l)).collect()));
        }
        let mut pos = 0;
        loop {
            if pos == odometer.len() {
                return Ok(None);
            }
            odometer[pos] += 1;
            if odometer[pos] < choices[pos].len() {
                break;
            }
            odometer[pos] = 0;
            pos += 1;
        }
    }
}

/// `c λ_{s+t} = λ_s λ_t c'` where `b^A_s b^A_t = c b^A_{s+t}` and likewise in `B`.
fn respects_products<F: Field>(
    a: &GradedAlgebra<F>,
    b: &GradedAlgebra<F>,
    support: &[GroupElement],
    lambda: &BTreeMap<&GroupElement, F::Elem>,
) -> bool {
    let f = a.field();
    let group = a.group();
    let coeff = |alg: &GradedAlgebra<F>, s: &GroupElement, t: &GroupElement, st: &GroupElement| {
        let (i, j, k) = (
            alg.index_of_degree(s).unwrap(),
            alg.index_of_degree(t).unwrap(),
            alg.index_of_degree(st).unwrap(),
        );
        alg.basis_product(i, j)
            .iter()
            .find(|(idx, _)| *idx == k)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| f.zero())
    };
    support.iter().all(|s| {
        support.iter().all(|t| {
            let st = group.add(s, t);
            let lhs = f.mul(&coeff(a, s, t, &st), &lambda[&st]);
            let rhs = f.mul(&f.mul(&lambda[s], &lambda[t]), &coeff(b, s, t, &st));
            lhs == rhs
        })
    })
}

/// Image of an algebra over `Q(ζ_N)` in `Q(ζ_M)`, `N | M`.
pub fn lift_cyclotomic(alg: &GradedAlgebra<CyclotomicField>, conductor: u64) -> GradedAlgebra<CyclotomicField> {
    let small = alg.field().clone();
    let big = CyclotomicField::new(conductor);
    alg.map_field(big.clone(), |x| cyclotomic_embed(&small, &big, x))
}

/// [`graded_iso_1dim`] for runtime-selected fields.
///
/// Cyclotomic fields stand in for `C`: both algebras are first lifted to the
/// conductor `lcm(W, 2)·exp(G)`, which contains every root the search can need,
/// and the witness is expressed in that larger field.
pub fn graded_iso_any(a: &GradedAlgebra<AnyField>, b: &GradedAlgebra<AnyField>) -> Result<Option<IsoWitness<AnyElem>>> {
    match (a.field(), b.field()) {
        (AnyField::Cyclotomic(fa), AnyField::Cyclotomic(fb)) => {
            let w = lcm(fa.roots_of_unity_count(), fb.roots_of_unity_count());
            let conductor = w * a.group().exponent();
            let down = |alg: &GradedAlgebra<AnyField>, f: &CyclotomicField| {
                alg.map_field(f.clone(), |x| match x {
                    AnyElem::Cyc(v) => v.clone(),
                    other => panic!("expected cyclotomic element, got {other:?}"),
                })
            };
            let la = lift_cyclotomic(&down(a, fa), conductor);
            let lb = lift_cyclotomic(&down(b, fb), conductor);
            Ok(graded_iso_1dim(&la, &lb)?.map(|w| w.into_iter().map(|(t, l)| (t, AnyElem::Cyc(l))).collect()))
        }
        (fa, fb) if fa == fb => graded_iso_1dim(a, b),
        _ => Err(Error::Precondition("algebras are defined over different fields".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::FinAbGroup;
    use crate::exactfield::{ff_construct, Rationals, Reals};
    use crate::gradedalg::group_algebra;

    /// `F^σ[Z_2^2]` with `b_x^2 = α`, `b_y^2 = β`, `b_y b_x = -b_x b_y`.
    fn twisted<F: Field>(f: F, al: i64, be: i64) -> GradedAlgebra<F> {
        let g = FinAbGroup::new(vec![2, 2]).unwrap();
        // basis: 1, x, y, xy with degrees 00, 10, 01, 11
        let degs = vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]];
        let (a, b) = (f.from_int(al), f.from_int(be));
        let ab = f.mul(&a, &b);
        let neg = |x: &F::Elem| f.neg(x);
        let one = f.one();
        let e = vec![
            (0, 0, 0, one.clone()),
            (0, 1, 1, one.clone()),
            (0, 2, 2, one.clone()),
            (0, 3, 3, one.clone()),
            (1, 0, 1, one.clone()),
            (2, 0, 2, one.clone()),
            (3, 0, 3, one.clone()),
            (1, 1, 0, a.clone()),
            (2, 2, 0, b.clone()),
            (1, 2, 3, one.clone()),
            (2, 1, 3, neg(&one)),
            (1, 3, 2, a.clone()),
            (3, 1, 2, neg(&a)),
            (2, 3, 1, neg(&b)),
            (3, 2, 1, b.clone()),
            (3, 3, 0, neg(&ab)),
        ];
        GradedAlgebra::new(f, g, degs, e, None).unwrap()
    }

    #[test]
    fn quaternion_signs_over_q() {
        let q = Rationals::default();
        let h = twisted(q.clone(), -1, -1);
        let m2 = twisted(q.clone(), 1, 1);
        let m2b = twisted(q.clone(), 1, -1);
        assert!(graded_iso_1dim(&h, &h).unwrap().is_some());
        assert!(graded_iso_1dim(&h, &m2).unwrap().is_none());
        assert!(graded_iso_1dim(&m2, &m2b).unwrap().is_none());
        let g = group_algebra(q, FinAbGroup::new(vec![2, 2]).unwrap());
        assert!(graded_iso_1dim(&m2, &g).unwrap().is_none());
    }

    #[test]
    fn finite_field_absorbs_signs() {
        let f = ff_construct(5, 1, 0).unwrap();
        // -1 = 2^2 in GF(5)
        let w = graded_iso_1dim(&twisted(f.clone(), -1, -1), &twisted(f.clone(), 1, -1)).unwrap();
        assert!(w.is_some());
    }

    #[test]
    fn unnormalized_constants_are_rejected() {
        let a = twisted(Reals, 2, 1);
        assert!(matches!(graded_iso_1dim(&a, &a), Err(Error::Unnormalized(_))));
    }
}
