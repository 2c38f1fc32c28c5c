//! Explicit gradings on finite field extensions and the dual Galois action.
//!
//! Both constructions emit a structure-constant algebra over the small field `𝔽`
//! with basis `b_0 = 1, b_1, …, b_{d−1}`, `b_i = b_1^i`, so that
//! `b_i b_j = b_{i+j}` below `d` and `c·b_{i+j−d}` on wrap-around, `c = b_1^d ∈ 𝔽`.

use serde_json::{json, Value};

use crate::abelian::FinAbGroup;
use crate::arith::{gcd, is_prime};
use crate::error::{Error, Result};
use crate::exactfield::{ff_construct, Embedding, Field, FiniteField};
use crate::gradedalg::GradedAlgebra;

fn pass(ok: bool) -> String {
    if ok { "pass" } else { "fail" }.to_string()
}

/// `ℤ_d`-graded algebra over `f` with `b_1^d = c`.
fn cyclic_table(f: &FiniteField, d: u64, c: u32) -> Result<GradedAlgebra<FiniteField>> {
    let g = if d == 1 { FinAbGroup::trivial() } else { FinAbGroup::cyclic(d)? };
    let degrees = (0..d).map(|i| if d == 1 { vec![] } else { vec![i] }).collect();
    let mut entries = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let (k, coef) = if i + j < d { (i + j, 1) } else { (i + j - d, c) };
            entries.push((i as usize, j as usize, k as usize, coef));
        }
    }
    let mut unit = vec![0u32; d as usize];
    unit[0] = 1;
    GradedAlgebra::new(f.clone(), g, degrees, entries, Some(unit))
}

/// Checks that `b_i ↦ basis[i]` is multiplicative on basis pairs.
fn realizes(alg: &GradedAlgebra<FiniteField>, big: &FiniteField, e: &Embedding, basis: &[u32]) -> bool {
    let image = |v: &[u32]| {
        v.iter()
            .zip(basis)
            .fold(0u32, |acc, (c, b)| big.add(&acc, &big.mul(&e.apply(*c), b)))
    };
    (0..alg.dim()).all(|i| {
        (0..alg.dim()).all(|j| {
            let prod = alg.mul(&alg.basis_vector(i), &alg.basis_vector(j));
            image(&prod) == big.mul(&basis[i], &basis[j])
        })
    })
}

#[derive(Debug, Clone)]
pub struct FrobeniusGrading {
    pub algebra: GradedAlgebra<FiniteField>,
    pub big: FiniteField,
    pub embedding: Embedding,
    /// `b_i` as elements of the big field.
    pub basis: Vec<u32>,
    pub zeta: u32,
    pub verification: Vec<(String, String)>,
}

impl FrobeniusGrading {
    pub fn passed(&self) -> bool {
        self.verification.iter().all(|(_, v)| v == "pass")
    }
}

/// The `ℤ_q`-grading of `GF(p^{qℓ})` over `GF(p^ℓ)` by eigenspaces of
/// `ψ(x) = x^{p^ℓ}`: degree `i` is `{x : ψ(x) = ζ^i x}`, `ζ` the designated
/// primitive `q`-th root of unity of `GF(p^ℓ)`.
pub fn frobenius_grading(p: u64, ell: u32, q: u64) -> Result<FrobeniusGrading> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let f = ff_construct(p, ell, 0)?;
    let m = f.order() - 1;
    if m % q != 0 {
        return Err(Error::Precondition(format!("{q} does not divide {p}^{ell} − 1")));
    }
    let big = ff_construct(p, ell * q as u32, 0)?;
    let e = big
        .embeddings_from(&f)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::Internal("no embedding of the base field".into()))?;
    let zeta = f.root_of_unity(q).expect("q divides the unit group order");
    let ez = e.apply(zeta);
    let qf = f.order();
    let psi = |x: &u32| big.pow(x, qf);
    let b1 = (1..big.order() as u32)
        .find(|x| psi(x) == big.mul(&ez, x))
        .ok_or_else(|| Error::Internal("no eigenvector of degree 1".into()))?;
    let basis: Vec<u32> = (0..q).map(|i| big.pow(&b1, i)).collect();
    let c = e
        .preimage(big.pow(&b1, q))
        .ok_or_else(|| Error::Internal("b_1^q is not in the base field".into()))?;
    let algebra = cyclic_table(&f, q, c)?;

    let mut log = Vec::new();
    // each eigenspace has exactly |F| elements
    let mut counts = vec![0u64; q as usize];
    let eigen: Vec<u32> = (0..q).map(|i| big.pow(&ez, i)).collect();
    for x in 1..big.order() as u32 {
        let r = big.pow(&x, qf - 1);
        if let Some(i) = eigen.iter().position(|&z| z == r) {
            counts[i] += 1;
        }
    }
    log.push(("components_1dim".into(), pass(counts.iter().all(|&n| n == qf - 1))));
    let fixed_in_f = (1..big.order() as u32).filter(|x| psi(x) == *x).all(|x| e.preimage(x).is_some());
    log.push(("identity_component_is_base".into(), pass(fixed_in_f && counts[0] == qf - 1)));
    log.push((
        "homogeneous".into(),
        pass((0..q as usize).all(|i| psi(&basis[i]) == big.mul(&eigen[i], &basis[i]))),
    ));
    log.push(("multiplicative".into(), pass(realizes(&algebra, &big, &e, &basis))));
    log.push(("support".into(), pass(algebra.support().len() as u64 == q)));
    Ok(FrobeniusGrading { algebra, big, embedding: e, basis, zeta, verification: log })
}

/// Base field `𝔽`, exponent `n` with `n | |𝔽| − 1`, and generators of `Λ` modulo `(𝔽^×)^n`.
#[derive(Debug, Clone)]
pub struct KummerSpec {
    pub field: FiniteField,
    pub n: u64,
    pub generators: Vec<u32>,
}

impl KummerSpec {
    pub fn to_json(&self) -> Value {
        json!({
            "field": self.field.descriptor(),
            "n": self.n,
            "generators": self.generators.iter().map(|g| self.field.elem_to_json(g)).collect::<Vec<_>>(),
        })
    }
}

#[derive(Debug, Clone)]
pub struct KummerGrading {
    pub algebra: GradedAlgebra<FiniteField>,
    pub big: FiniteField,
    pub embedding: Embedding,
    /// `α^i` in the big field, `α^n = a`.
    pub basis: Vec<u32>,
    /// `a^i`, representatives of the cosets `Λ/(𝔽^×)^n` in degree order.
    pub coset_reps: Vec<u32>,
    pub verification: Vec<(String, String)>,
}

impl KummerGrading {
    pub fn passed(&self) -> bool {
        self.verification.iter().all(|(_, v)| v == "pass")
    }
}

/// `𝔽(Λ^{1/n})` graded by `Λ/(𝔽^×)^n ≅ ℤ_d`, degree `i` spanned by `α^i` with
/// `α^n = a`, `a = g^{n/d}` generating `Λ` modulo `n`-th powers.
pub fn kummer_grading(spec: &KummerSpec) -> Result<KummerGrading> {
    let f = &spec.field;
    let n = spec.n;
    let m = f.order() - 1;
    if n == 0 || m % n != 0 {
        return Err(Error::Precondition(format!(
            "GF({}^{}) has no primitive {n}-th root of unity",
            f.p(),
            f.ell()
        )));
    }
    // Λ(𝔽^×)^n/(𝔽^×)^n ⊂ ℤ_n via discrete logs
    let h = spec
        .generators
        .iter()
        .try_fold(n, |acc, g| Ok::<u64, Error>(gcd(acc, f.log(*g)? % n)))?;
    let d = n / h;
    let a = f.exp(h);
    let big = ff_construct(f.p(), f.ell() * d as u32, 0)?;
    let e = big
        .embeddings_from(f)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::Internal("no embedding of the base field".into()))?;
    let alpha = big
        .nth_roots(&e.apply(a), n)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::Internal("a has no n-th root in the composite".into()))?;
    let basis: Vec<u32> = (0..d).map(|i| big.pow(&alpha, i)).collect();
    let c = e
        .preimage(big.pow(&alpha, d))
        .ok_or_else(|| Error::Internal("α^d is not in the base field".into()))?;
    let algebra = cyclic_table(f, d, c)?;
    let coset_reps: Vec<u32> = (0..d).map(|i| f.pow(&a, i)).collect();

    let mut log = Vec::new();
    log.push((
        "homogeneous".into(),
        pass((0..d as usize).all(|i| big.pow(&basis[i], n) == e.apply(coset_reps[i]))),
    ));
    log.push(("multiplicative".into(), pass(realizes(&algebra, &big, &e, &basis))));
    log.push((
        "identity_component_is_base".into(),
        pass((1..d as usize).all(|i| e.preimage(basis[i]).is_none())),
    ));
    // distinct cosets: a^i is not an n-th power for 0 < i < d
    log.push((
        "cosets_distinct".into(),
        pass((1..d as usize).all(|i| !f.is_nth_power(&coset_reps[i], n).unwrap_or(true))),
    ));
    Ok(KummerGrading { algebra, big, embedding: e, basis, coset_reps, verification: log })
}

#[derive(Debug, Clone)]
pub struct DualGaloisReport {
    pub automorphisms: usize,
    pub verification: Vec<(String, String)>,
}

impl DualGaloisReport {
    pub fn passed(&self) -> bool {
        self.verification.iter().all(|(_, v)| v == "pass")
    }
}

/// Checks that the characters of `G` act on `A` by `χ·x = χ(g)x` for `x ∈ A_g`
/// as `|G|` distinct automorphisms whose common fixed points are `A_e = 𝔽`.
///
/// `χ_c(g) = ∏_i ζ_{o_i}^{c_i g_i}` with `ζ_o` the field's designated root of unity.
pub fn dual_galois_check<F: Field>(a: &GradedAlgebra<F>) -> Result<DualGaloisReport> {
    let f = a.field();
    let g = a.group();
    let roots = g
        .orders()
        .iter()
        .map(|&o| {
            f.root_of_unity(o)
                .ok_or_else(|| Error::Precondition(format!("the field has no primitive {o}-th root of unity")))
        })
        .collect::<Result<Vec<_>>>()?;
    let chi = |c: &[u64], t: &[u64]| {
        (0..c.len()).fold(f.one(), |acc, i| {
            f.mul(&acc, &f.pow(&roots[i], c[i] * t[i] % g.orders()[i]))
        })
    };
    let actions: Vec<Vec<F::Elem>> = g
        .elements()
        .map(|c| (0..a.dim()).map(|i| chi(&c, a.degree(i))).collect())
        .collect();
    let apply = |s: &[F::Elem], x: &[F::Elem]| -> Vec<F::Elem> { s.iter().zip(x).map(|(u, v)| f.mul(u, v)).collect() };

    let mut log = Vec::new();
    let automorphic = actions.iter().all(|s| {
        (0..a.dim()).all(|i| {
            (0..a.dim()).all(|j| {
                let (x, y) = (a.basis_vector(i), a.basis_vector(j));
                apply(s, &a.mul(&x, &y)) == a.mul(&apply(s, &x), &apply(s, &y))
            })
        })
    });
    log.push(("automorphisms".into(), pass(automorphic)));
    let mut sorted: Vec<String> = actions.iter().map(|s| format!("{s:?}")).collect();
    sorted.sort();
    sorted.dedup();
    log.push(("distinct".into(), pass(sorted.len() == actions.len())));
    let fixed: Vec<usize> = (0..a.dim()).filter(|&i| actions.iter().all(|s| f.is_one(&s[i]))).collect();
    let e_idx = a.components().get(&g.zero()).cloned().unwrap_or_default();
    log.push(("fixed_points_are_base".into(), pass(fixed == e_idx && fixed.len() == 1)));
    log.push(("dimension".into(), pass(a.dim() as u64 == g.order())));
    Ok(DualGaloisReport { automorphisms: sorted.len(), verification: log })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gradedalg::graded_iso_1dim;

    #[test]
    fn frobenius_fixtures() {
        for (p, ell, q) in [(7, 1, 3), (3, 2, 2), (2, 2, 3), (5, 1, 2)] {
            let fg = frobenius_grading(p, ell, q).unwrap();
            assert!(fg.passed(), "{p} {ell} {q}: {:?}", fg.verification);
            assert!(fg.algebra.is_graded_division().unwrap());
            assert!(fg.algebra.verify_associative().associative);
        }
        assert!(frobenius_grading(7, 1, 5).is_err());
    }

    #[test]
    fn kummer_matches_frobenius_gf7() {
        let f = ff_construct(7, 1, 0).unwrap();
        let k = kummer_grading(&KummerSpec { field: f, n: 3, generators: vec![3] }).unwrap();
        assert!(k.passed(), "{:?}", k.verification);
        let fg = frobenius_grading(7, 1, 3).unwrap();
        assert!(graded_iso_1dim(&k.algebra, &fg.algebra).unwrap().is_some());
        assert_eq!(dual_galois_check(&k.algebra).unwrap().automorphisms, 3);
        assert!(dual_galois_check(&fg.algebra).unwrap().passed());
    }

    #[test]
    fn kummer_trivial_lambda() {
        let f = ff_construct(7, 1, 0).unwrap();
        let k = kummer_grading(&KummerSpec { field: f, n: 3, generators: vec![1, 6] }).unwrap();
        assert_eq!(k.algebra.dim(), 1);
        let r = dual_galois_check(&k.algebra).unwrap();
        assert!(r.passed() && r.automorphisms == 1);
    }

    #[test]
    fn kummer_gf5_square_classes() {
        // 2 and 3 are both non-squares mod 5, so Λ/(𝔽^×)² has order 2
        let f = ff_construct(5, 1, 0).unwrap();
        let k = kummer_grading(&KummerSpec { field: f.clone(), n: 2, generators: vec![2, 3] }).unwrap();
        assert!(k.passed());
        assert_eq!(k.algebra.dim(), 2);
        // n = 4 over GF(5): Λ = ⟨2⟩ gives the full ℤ_4
        let k4 = kummer_grading(&KummerSpec { field: f, n: 4, generators: vec![2] }).unwrap();
        assert!(k4.passed());
        assert_eq!(dual_galois_check(&k4.algebra).unwrap().automorphisms, 4);
    }
}
