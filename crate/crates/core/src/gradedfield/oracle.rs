//! Exhaustive oracles over finite fields, independent of any power-residue reasoning.

use crate::error::{Error, Result};
use crate::exactfield::poly::{self, Poly};
use crate::exactfield::Field;
use crate::gradedalg::GradedAlgebra;
use crate::linalg;

/// Every monic polynomial of degree `d` with coefficients from `elems`.
pub fn monic_polys<'a, F: Field>(f: &'a F, elems: &'a [F::Elem], d: usize) -> impl Iterator<Item = Poly<F::Elem>> + 'a {
    let q = elems.len() as u64;
    (0..q.pow(d as u32)).map(move |mut idx| {
        let mut p: Vec<F::Elem> = (0..d)
            .map(|_| {
                let c = elems[(idx % q) as usize].clone();
                idx /= q;
                c
            })
            .collect();
        p.push(f.one());
        p
    })
}

/// Number of trial divisions needed to factor a polynomial of degree `n` over `GF(q)`.
pub fn trial_division_cost(q: u64, n: usize) -> u64 {
    (1..=n / 2).map(|d| q.saturating_pow(d as u32)).fold(0, u64::saturating_add)
}

/// A monic factor of degree `1..=deg/2` by trial division, refusing inputs that
/// need more than `budget` divisions.
pub fn find_factor_trial<F: Field>(f: &F, a: &Poly<F::Elem>, budget: u64) -> Result<Option<Poly<F::Elem>>> {
    let elems = f
        .elements()
        .ok_or_else(|| Error::Unsupported("trial division needs a finite field".into()))?;
    let n = poly::degree(a).ok_or(Error::ZeroElement("trial division"))?;
    let work = trial_division_cost(elems.len() as u64, n);
    if work > budget {
        return Err(Error::Unsupported(format!("trial division needs {work} divisions")));
    }
    for d in 1..=n / 2 {
        for g in monic_polys(f, &elems, d) {
            if poly::rem(f, a, &g)?.is_empty() {
                return Ok(Some(g));
            }
        }
    }
    Ok(None)
}

pub fn is_irreducible_trial<F: Field>(f: &F, a: &Poly<F::Elem>, budget: u64) -> Result<bool> {
    if poly::degree(a).unwrap_or(0) == 0 {
        return Ok(false);
    }
    Ok(find_factor_trial(f, a, budget)?.is_none())
}

/// A zero divisor pair of a finite-dimensional algebra over a finite field,
/// searched over all nonzero `x` whose first nonzero coordinate is 1.
///
/// Refuses algebras with more than `budget` elements.
pub fn find_zero_divisor<F: Field>(a: &GradedAlgebra<F>, budget: u64) -> Result<Option<(Vec<F::Elem>, Vec<F::Elem>)>> {
    let f = a.field();
    let elems = f
        .elements()
        .ok_or_else(|| Error::Unsupported("zero-divisor search needs a finite field".into()))?;
    let q = elems.len() as u64;
    let n = a.dim();
    if q.checked_pow(n as u32).map_or(true, |s| s > budget) {
        return Err(Error::Unsupported(format!("algebra has {q}^{n} elements")));
    }
    for lead in 0..n {
        // x = e_lead + Σ_{j > lead} c_j e_j
        let rest = n - lead - 1;
        for mut idx in 0..q.pow(rest as u32) {
            let mut x = vec![f.zero(); n];
            x[lead] = f.one();
            for j in lead + 1..n {
                x[j] = elems[(idx % q) as usize].clone();
                idx /= q;
            }
            let m = a.left_mul_matrix(&x);
            if linalg::rank(f, &m) < n {
                let y = linalg::nullspace(f, &m, n)
                    .into_iter()
                    .next()
                    .ok_or_else(|| Error::Internal("singular multiplication without kernel".into()))?;
                if !a.is_zero(&a.mul(&x, &y)) {
                    return Err(Error::Internal("kernel vector of left multiplication is not annihilated".into()));
                }
                return Ok(Some((x, y)));
            }
        }
    }
    Ok(None)
}

pub fn has_zero_divisor<F: Field>(a: &GradedAlgebra<F>, budget: u64) -> Result<bool> {
    Ok(find_zero_divisor(a, budget)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::ff_construct;

    #[test]
    fn trial_division_matches_rabin_gf4() {
        let f = ff_construct(2, 2, 0).unwrap();
        let elems = f.elements().unwrap();
        for d in 1..=4 {
            for p in monic_polys(&f, &elems, d) {
                assert_eq!(
                    poly::is_irreducible_finite(&f, &p),
                    is_irreducible_trial(&f, &p, 1 << 20).unwrap(),
                    "{p:?}"
                );
            }
        }
    }

    #[test]
    fn irreducible_counts_over_gf3() {
        // monic irreducibles of degree 1..4 over GF(3)
        let f = ff_construct(3, 1, 0).unwrap();
        let elems = f.elements().unwrap();
        let counts: Vec<usize> = (1..=4)
            .map(|d| monic_polys(&f, &elems, d).filter(|p| is_irreducible_trial(&f, p, 1 << 20).unwrap()).count())
            .collect();
        assert_eq!(counts, vec![3, 3, 8, 18]);
    }

    #[test]
    fn budget_is_enforced() {
        let f = ff_construct(5, 1, 0).unwrap();
        assert!(find_factor_trial(&f, &poly::binomial(&f, 12, &2), 100).is_err());
    }
}
