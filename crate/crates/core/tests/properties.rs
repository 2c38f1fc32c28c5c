//! Structural invariants as randomized properties, plus the exhaustive sweeps
//! that are cheap enough to run in full.

use std::collections::BTreeSet;

use num_rational::BigRational;
use proptest::prelude::*;
use proptest::sample::select;

use graded_division::abelian::FinAbGroup;
use graded_division::exactfield::{ff_construct, AnyElem, AnyField, CyclotomicField, Field, Rationals, Reals};
use graded_division::gradedalg::{algebra_from_json, algebra_to_json, graded_iso_1dim, GradedAlgebra};
use graded_division::gradedfield::oracle::find_zero_divisor;
use graded_division::gradedfield::{frobenius_grading, is_field_exponent2, GradedFieldSpec, Verdict};
use graded_division::quasitorus::{
    commutation_bicharacter, construct, mu_invariant, params_from_json, params_to_json, AltBicharacter, MuFunction,
};
use graded_division::realclass::{enumerate_bicharacters_complex, enumerate_bicharacters_pm1};

const GROUPS: &[&[u64]] = &[&[], &[2], &[3], &[4], &[6], &[2, 2], &[2, 4], &[3, 3], &[2, 2, 2], &[2, 6], &[4, 4], &[2, 2, 4]];

fn group() -> impl Strategy<Value = FinAbGroup> {
    select(GROUPS).prop_map(|o| FinAbGroup::new(o.to_vec()).unwrap())
}

/// A group, one of its `±1` bicharacters and a sign on each generator.
fn real_params() -> impl Strategy<Value = (AltBicharacter, Vec<i64>)> {
    group().prop_flat_map(|g| {
        let betas = enumerate_bicharacters_pm1(&g);
        let rank = g.rank();
        (select(betas), proptest::collection::vec(select(vec![1i64, -1]), rank))
    })
}

fn real_algebra(beta: &AltBicharacter, signs: &[i64]) -> GradedAlgebra<Reals> {
    let r = Reals::default();
    let mu = MuFunction::new(r.clone(), beta.group(), signs.iter().map(|&s| r.from_int(s)).collect()).unwrap();
    construct(beta, &mu).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn element_orders_divide_group_order(g in group(), seed in any::<u64>()) {
        let n = g.order();
        let x = g.element_at((seed % n) as usize);
        prop_assert_eq!(n % g.element_order(&x), 0);
        prop_assert!(g.is_zero(&g.scale(g.element_order(&x), &x)));
    }

    #[test]
    fn primary_parts_multiply_bijectively(g in group()) {
        let primes: Vec<u64> = g.primary_factors().into_iter().map(|(p, _)| p).collect::<BTreeSet<_>>().into_iter().collect();
        let parts: Vec<Vec<Vec<u64>>> = primes.iter().map(|&p| g.torsion_p_part(p).unwrap().elements).collect();
        let mut sums: BTreeSet<Vec<u64>> = [g.zero()].into_iter().collect();
        let mut count = 1usize;
        let gr = &g;
        for part in &parts {
            sums = sums.iter().flat_map(|s| part.iter().map(move |x| gr.add(s, x))).collect();
            count *= part.len();
        }
        prop_assert_eq!(count as u64, g.order());
        prop_assert_eq!(sums.len() as u64, g.order());
    }

    #[test]
    fn direct_summand_does_not_depend_on_t0(g in group()) {
        for k in g.index2_subgroups() {
            let answers: BTreeSet<bool> = g
                .elements()
                .filter(|t| !k.contains(t))
                .map(|t0| g.is_direct_summand(&k, &t0).unwrap())
                .collect();
            prop_assert_eq!(answers.len(), 1);
        }
    }

    #[test]
    fn construction_round_trips_invariants((beta, signs) in real_params()) {
        let a = real_algebra(&beta, &signs);
        prop_assert!(a.verify_associative().associative);
        prop_assert_eq!(a.is_graded_division(), Ok(true));
        prop_assert_eq!(commutation_bicharacter(&a).unwrap(), beta.clone());
        let r = Reals::default();
        let want = MuFunction::new(r.clone(), beta.group(), signs.iter().map(|&s| r.from_int(s)).collect()).unwrap();
        prop_assert!(mu_invariant(&a).unwrap().same_classes(&want).unwrap());
        prop_assert_eq!(a.is_commutative(), beta.is_trivial());
    }

    #[test]
    fn complex_bicharacters_round_trip(g in group(), pick in any::<prop::sample::Index>()) {
        let f = CyclotomicField::new(g.exponent().max(1) * 4);
        let betas = enumerate_bicharacters_complex(&g);
        let beta = pick.get(&betas).clone();
        let mu = MuFunction::trivial(f, &g);
        let a = construct(&beta, &mu).unwrap();
        prop_assert!(a.verify_associative().associative);
        prop_assert_eq!(commutation_bicharacter(&a).unwrap(), beta);
    }

    #[test]
    fn scaling_mu_by_powers_preserves_invariants((beta, signs) in real_params(), r in 1i64..5) {
        let f = Rationals::default();
        let g = beta.group();
        let base: Vec<BigRational> = signs.iter().map(|&s| f.from_int(s)).collect();
        let scaled: Vec<BigRational> =
            base.iter().zip(g.orders()).map(|(m, &o)| f.mul(m, &f.pow(&f.from_int(r), o))).collect();
        let a = construct(&beta, &MuFunction::new(f.clone(), g, base).unwrap()).unwrap();
        let b = construct(&beta, &MuFunction::new(f.clone(), g, scaled).unwrap()).unwrap();
        // b has unnormalized constants; its μ-classes coincide with a's
        prop_assert!(mu_invariant(&a).unwrap().same_classes(&mu_invariant(&b).unwrap()).unwrap());
        prop_assert_eq!(commutation_bicharacter(&b).unwrap(), beta);
    }

    #[test]
    fn support_of_graded_division_algebra_is_a_subgroup((beta, signs) in real_params()) {
        let a = real_algebra(&beta, &signs);
        let g = a.group();
        let supp: BTreeSet<Vec<u64>> = a.support().into_iter().collect();
        prop_assert!(supp.contains(&g.zero()));
        for x in &supp {
            for y in &supp {
                prop_assert!(supp.contains(&g.sub(x, y)));
            }
        }
    }

    #[test]
    fn inverses_stay_in_subgroup_components((beta, signs) in real_params(), coeffs in proptest::collection::vec(-3i64..4, 16), pick in any::<prop::sample::Index>()) {
        let a = real_algebra(&beta, &signs);
        let g = a.group().clone();
        let subs = g.all_subgroups();
        let h = pick.get(&subs);
        let r = Reals::default();
        let x: Vec<BigRational> = (0..a.dim())
            .map(|i| if h.contains(a.degree(i)) { r.from_int(coeffs[i % coeffs.len()]) } else { r.zero() })
            .collect();
        if let Some(inv) = a.inverse(&x) {
            prop_assert!(a.mul(&x, &inv) == a.unit() && a.mul(&inv, &x) == a.unit());
            for (i, c) in inv.iter().enumerate() {
                prop_assert!(r.is_zero(c) || h.contains(a.degree(i)));
            }
        }
    }

    #[test]
    fn descriptors_round_trip((beta, signs) in real_params()) {
        let a = real_algebra(&beta, &signs);
        let any = a.map_field(AnyField::R(Reals::default()), |x| AnyElem::Rat(x.clone()));
        let back = algebra_from_json(&algebra_to_json(&any)).unwrap();
        prop_assert_eq!(algebra_to_json(&back), algebra_to_json(&any));
        prop_assert!(graded_iso_1dim(&back, &any).unwrap().is_some());
        let r = Reals::default();
        let mu = MuFunction::new(r.clone(), beta.group(), signs.iter().map(|&s| r.from_int(s)).collect()).unwrap();
        let (b2, m2) = params_from_json(&params_to_json(&beta, &mu).unwrap()).unwrap();
        prop_assert_eq!(b2, beta);
        prop_assert_eq!(m2.values().len(), signs.len());
    }

    #[test]
    fn finite_field_axioms(idx in 0usize..8, a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let (p, ell) = [(2, 1), (3, 1), (2, 3), (3, 2), (5, 2), (7, 2), (3, 4), (2, 6)][idx];
        let f = ff_construct(p, ell, 0).unwrap();
        let els = f.elements().unwrap();
        let n = els.len() as u32;
        let (a, b, c) = (els[(a % n) as usize], els[(b % n) as usize], els[(c % n) as usize]);
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert_eq!(f.add(&a, &f.neg(&a)), f.zero());
        if !f.is_zero(&a) {
            prop_assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
        }
    }

    #[test]
    fn rational_square_classes_multiply(x in 1i64..200, y in 1i64..200, sx in any::<bool>(), sy in any::<bool>()) {
        let q = Rationals::default();
        let (x, y) = (q.from_int(if sx { -x } else { x }), q.from_int(if sy { -y } else { y }));
        let cx = q.nth_power_class(&x, 2).unwrap();
        let cy = q.nth_power_class(&y, 2).unwrap();
        let prod = q.nth_power_class(&q.mul(&x, &y), 2).unwrap();
        prop_assert_eq!(prod, q.nth_power_class(&q.mul(&cx, &cy), 2).unwrap());
    }

    #[test]
    fn exponent2_criterion_matches_zero_divisor_search(q in select(vec![3u64, 5, 7, 11]), m in 1usize..=4, seed in any::<u64>()) {
        let f = ff_construct(q, 1, 0).unwrap();
        let units: Vec<u32> = f.elements().unwrap().into_iter().filter(|x| !f.is_zero(x)).collect();
        let mut s = seed;
        let mu: Vec<AnyElem> = (0..m)
            .map(|_| {
                let x = units[(s % units.len() as u64) as usize];
                s /= units.len() as u64;
                AnyElem::GF(x)
            })
            .collect();
        let spec = GradedFieldSpec::new(AnyField::GF(f), vec![2; m], mu).unwrap();
        let d = is_field_exponent2(&spec).unwrap();
        // the search stops at the first zero divisor, so only fields need the full sweep
        let budget = if m == 1 { 1 << 20 } else { u64::MAX };
        let zd = find_zero_divisor(&spec.algebra().unwrap(), budget).unwrap();
        prop_assert_eq!(d.verdict == Verdict::True, zd.is_none());
        prop_assert!(d.verdict != Verdict::Undecided);
    }
}

#[test]
fn nth_power_test_matches_enumeration() {
    for (p, ell) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4), (17, 1), (5, 2), (3, 3), (2, 5), (7, 2), (11, 2), (3, 4), (2, 6)] {
        let f = ff_construct(p, ell, 0).unwrap();
        if f.order() > 121 {
            continue;
        }
        let units: Vec<u32> = f.elements().unwrap().into_iter().filter(|x| !f.is_zero(x)).collect();
        for n in 1..=12u64 {
            let powers: BTreeSet<u32> = units.iter().map(|x| f.pow(x, n)).collect();
            for x in &units {
                assert_eq!(f.is_nth_power(x, n).unwrap(), powers.contains(x), "GF({p}^{ell}) x={x} n={n}");
            }
        }
    }
}

#[test]
fn cyclotomic_generator_has_exact_order() {
    for n in [1u64, 3, 4, 5, 8, 12, 16, 24] {
        let k = CyclotomicField::new(n);
        let z = k.zeta();
        for e in 1..n {
            assert!(!k.is_one(&k.pow(&z, e)), "ζ_{n}^{e} = 1");
        }
        assert!(k.is_one(&k.pow(&z, n)));
        let a = k.add(&z, &k.from_int(2));
        let b = k.mul(&z, &z);
        assert_eq!(k.conjugate(&k.mul(&a, &b)), k.mul(&k.conjugate(&a), &k.conjugate(&b)));
        assert_eq!(k.conjugate(&k.conjugate(&a)), a);
    }
}

#[test]
fn frobenius_gradings_are_fields() {
    for (p, ell, q) in [(7, 1, 3), (3, 2, 2), (2, 2, 3), (5, 1, 2), (13, 1, 3)] {
        let fg = frobenius_grading(p, ell, q).unwrap();
        assert!(fg.passed());
        assert_eq!(fg.algebra.is_graded_division(), Ok(true));
        assert!(find_zero_divisor(&fg.algebra, 1 << 20).unwrap().is_none(), "GF({p}^{ell}) q={q}");
        // support is cyclic of order q
        assert_eq!(fg.algebra.group().orders(), &[q]);
    }
}
