//! Hand-built gradings on `ℚ(ζ_8)`, each with an explicit embedding of its basis
//! into the cyclotomic field.
//!
//! | name | group | basis | μ |
//! |---|---|---|---|
//! | `canonical_z2xz2` | `ℤ_2²` | `1, i, √2, √2·i` | `(2, −1)` |
//! | `cyclic_z4` | `ℤ_4` | `1, ζ, ζ², ζ³` | `(−1)` |

use num_rational::BigRational;

use super::{is_field_general, GradedFieldSpec, Verdict};
use crate::abelian::FinAbGroup;
use crate::error::Result;
use crate::exactfield::{AnyElem, AnyField, CyclotomicField, Field, Rationals};
use crate::gradedalg::GradedAlgebra;
use crate::linalg;

#[derive(Debug, Clone)]
pub struct CyclotomicFixture {
    pub name: &'static str,
    pub spec: GradedFieldSpec,
    pub algebra: GradedAlgebra<AnyField>,
    /// Image of each basis vector in `ℚ(ζ_8)`.
    pub images: Vec<Vec<BigRational>>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn q_table(orders: Vec<u64>, table: &[(usize, usize, usize, i64)]) -> Result<GradedAlgebra<AnyField>> {
    let g = FinAbGroup::new(orders)?;
    let degrees = g.elements().collect();
    let mut entries = Vec::new();
    for &(i, j, k, c) in table {
        entries.push((i, j, k, AnyElem::Rat(rat(c))));
        if i != j {
            entries.push((j, i, k, AnyElem::Rat(rat(c))));
        }
    }
    let n = g.order() as usize;
    let mut unit = vec![AnyElem::Rat(rat(0)); n];
    unit[0] = AnyElem::Rat(rat(1));
    GradedAlgebra::new(AnyField::Q(Rationals::default()), g, degrees, entries, Some(unit))
}

pub fn q_zeta8_fixtures() -> Result<Vec<CyclotomicFixture>> {
    let k = CyclotomicField::new(8);
    let z = k.zeta();
    let i = k.pow(&z, 2);
    // √2 = ζ + ζ⁷
    let sqrt2 = k.add(&z, &k.pow(&z, 7));
    let q = AnyField::Q(Rationals::default());

    // degrees (0,0), (0,1), (1,0), (1,1): b0 = 1, b1 = i, b2 = √2, b3 = √2·i
    let klein = q_table(
        vec![2, 2],
        &[
            (0, 0, 0, 1),
            (0, 1, 1, 1),
            (0, 2, 2, 1),
            (0, 3, 3, 1),
            (1, 1, 0, -1),
            (1, 2, 3, 1),
            (1, 3, 2, -1),
            (2, 2, 0, 2),
            (2, 3, 1, 2),
            (3, 3, 0, -2),
        ],
    )?;
    let klein_images = vec![k.one(), i.clone(), sqrt2.clone(), k.mul(&sqrt2, &i)];

    // b_j = ζ^j
    let mut cyc = Vec::new();
    for a in 0..4 {
        for b in a..4 {
            let (t, c) = if a + b < 4 { (a + b, 1) } else { (a + b - 4, -1) };
            cyc.push((a, b, t, c));
        }
    }
    let z4 = q_table(vec![4], &cyc)?;
    let z4_images = (0..4).map(|j| k.pow(&z, j)).collect();

    Ok(vec![
        CyclotomicFixture {
            name: "canonical_z2xz2",
            spec: GradedFieldSpec::new(q.clone(), vec![2, 2], vec![AnyElem::Rat(rat(2)), AnyElem::Rat(rat(-1))])?,
            algebra: klein,
            images: klein_images,
        },
        CyclotomicFixture {
            name: "cyclic_z4",
            spec: GradedFieldSpec::new(q, vec![4], vec![AnyElem::Rat(rat(-1))])?,
            algebra: z4,
            images: z4_images,
        },
    ])
}

fn pass(ok: bool) -> String {
    if ok { "pass" } else { "fail" }.to_string()
}

/// Oracle log for one fixture: agreement with the spec's table, the algebra
/// oracles, multiplicativity and bijectivity of the map into `ℚ(ζ_8)`, and the
/// field decision.
pub fn verify_fixture(fx: &CyclotomicFixture) -> Result<Vec<(String, String)>> {
    let k = CyclotomicField::new(8);
    let a = &fx.algebra;
    let n = a.dim();
    let built = fx.spec.algebra()?;
    let same = (0..n).all(|i| {
        (0..n).all(|j| a.mul(&a.basis_vector(i), &a.basis_vector(j)) == built.mul(&built.basis_vector(i), &built.basis_vector(j)))
    });
    let mut log = vec![("matches_spec".to_string(), pass(same))];
    log.extend(a.verification_log());

    let image = |v: &[AnyElem]| {
        v.iter().zip(&fx.images).fold(k.zero(), |acc, (c, b)| match c {
            AnyElem::Rat(r) => k.add(&acc, &k.mul(&k.from_rational(r.clone()), b)),
            _ => acc,
        })
    };
    let mult = (0..n).all(|i| {
        (0..n).all(|j| image(&a.mul(&a.basis_vector(i), &a.basis_vector(j))) == k.mul(&fx.images[i], &fx.images[j]))
    });
    log.push(("multiplicative".into(), pass(mult)));
    let q = Rationals::default();
    let rank = linalg::rank(&q, &fx.images);
    log.push(("onto_q_zeta8".into(), pass(rank == k.degree() && n == k.degree())));
    let d = is_field_general(&fx.spec)?;
    log.push(("is_field".into(), pass(d.verdict == Verdict::True)));
    Ok(log)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gradedfield::dual_galois_check;

    #[test]
    fn fixtures_pass() {
        for fx in q_zeta8_fixtures().unwrap() {
            let log = verify_fixture(&fx).unwrap();
            assert!(log.iter().all(|(_, v)| v == "pass"), "{}: {log:?}", fx.name);
        }
    }

    #[test]
    fn only_the_canonical_grading_is_dual_to_galois() {
        let fx = q_zeta8_fixtures().unwrap();
        let r = dual_galois_check(&fx[0].algebra).unwrap();
        assert!(r.passed() && r.automorphisms == 4);
        // ℚ has no primitive 4th root of unity
        assert!(dual_galois_check(&fx[1].algebra).is_err());
    }
}
