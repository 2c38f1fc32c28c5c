//! The stratum `C ≅ D_e ⊄ Z(D)`: real forms of `M_2(C)` over a complexified
//! quasitorus `C`, parametrized by admissible sign maps.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{enumerate_bicharacters_pm1, quadratic_forms_on, SignMap};
use crate::abelian::{FinAbGroup, GroupElement, Presentation, Subgroup};
use crate::error::{Error, Result};
use crate::exactfield::Reals;
use crate::gradedalg::GradedAlgebra;
use crate::quasitorus::{construct, AltBicharacter, MuFunction};

/// Whether `K` is a direct summand of `T` (case a) or not (case b).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AdmissibleCase {
    A,
    B,
}

/// Case a: a map on `T_[2] ∖ K_[2]`. Case b: the canonical representative of an
/// equivalence class of maps on `T ∖ K`, equal to `+1` on the smallest element of
/// every `K_[2]`-coset.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissibleMap {
    pub case: AdmissibleCase,
    pub values: SignMap,
}

/// `(μ_{t0}, δ_{t0})` relative to a chosen `t0`: a quadratic form on `K_[2]` and a sign.
/// In case b the sign is normalized away and ignored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Item3Data {
    pub mu: SignMap,
    pub delta: i8,
}

/// `T ⊃ K` of index 2 with a sign-valued `β` on the presented `K`.
#[derive(Debug, Clone)]
pub struct KContext {
    pub t: FinAbGroup,
    pub k: Subgroup,
    pub pres: Presentation,
    /// `K_[2]`, sorted.
    pub k2: Vec<GroupElement>,
    pub case: AdmissibleCase,
}

impl KContext {
    pub fn new(t: &FinAbGroup, k: &Subgroup) -> Result<Self> {
        if k.order() * 2 != t.order() {
            return Err(Error::Precondition("K must have index 2 in T".into()));
        }
        let t0 = t.elements().find(|x| !k.contains(x)).expect("index 2");
        let case = if t.is_direct_summand(k, &t0)? {
            AdmissibleCase::A
        } else {
            AdmissibleCase::B
        };
        let k2: Vec<GroupElement> = k
            .elements
            .iter()
            .filter(|x| t.is_zero(&t.scale(2, x)))
            .cloned()
            .collect();
        Ok(KContext {
            t: t.clone(),
            k: k.clone(),
            pres: t.present_subgroup(k),
            k2,
            case,
        })
    }

    /// `β(s, u)` for `s, u ∈ K` in ambient coordinates.
    pub fn sign(&self, beta: &AltBicharacter, s: &[u64], u: &[u64]) -> i8 {
        if beta.angle(&self.pres.coords[s], &self.pres.coords[u]).0 == 0 {
            1
        } else {
            -1
        }
    }

    /// Sign-valued bicharacters on `K` with `T^[2] ⊆ rad β`.
    pub fn bicharacters(&self) -> Vec<AltBicharacter> {
        enumerate_bicharacters_pm1(&self.pres.group)
            .into_iter()
            .filter(|b| self.rad_condition(b))
            .collect()
    }

    pub fn rad_condition(&self, beta: &AltBicharacter) -> bool {
        self.t.elements().all(|x| {
            let d = self.t.scale(2, &x);
            self.k.contains(&d) && self.k.elements.iter().all(|s| self.sign(beta, &d, s) == 1)
        })
    }

    /// Domain of admissible maps.
    pub fn domain(&self) -> Vec<GroupElement> {
        self.t
            .elements()
            .filter(|x| !self.k.contains(x))
            .filter(|x| self.case == AdmissibleCase::B || self.t.is_zero(&self.t.scale(2, x)))
            .collect()
    }

    /// Translations acting on the domain in the admissibility condition.
    fn translations(&self) -> &[GroupElement] {
        match self.case {
            AdmissibleCase::A => &self.k2,
            AdmissibleCase::B => &self.k.elements,
        }
    }

    /// Admissible `t0`: order 2 in case a, any element of `T ∖ K` in case b.
    pub fn eligible_t0(&self) -> Vec<GroupElement> {
        self.domain()
    }

    /// `ν(t+g+h)ν(t)ν(t+g)ν(t+h) = β(g, h)` on the domain.
    pub fn is_admissible(&self, beta: &AltBicharacter, nu: &SignMap) -> bool {
        let t = &self.t;
        self.domain().iter().all(|x| {
            self.translations().iter().all(|g| {
                self.k2.iter().all(|h| {
                    let xg = t.add(x, g);
                    let lhs = nu[&t.add(&xg, h)] * nu[x] * nu[&xg] * nu[&t.add(x, h)];
                    lhs == self.sign(beta, g, h)
                })
            })
        })
    }

    /// Canonical representative of the `∼`-class of `nu` (case b); identity in case a.
    pub fn canonical_class(&self, nu: &SignMap) -> SignMap {
        if self.case == AdmissibleCase::A {
            return nu.clone();
        }
        let mut out = SignMap::new();
        for x in self.domain() {
            let rep = self.coset_rep(&x);
            out.insert(x.clone(), nu[&x] * nu[&rep]);
        }
        out
    }

    /// Smallest element of `x + K_[2]`.
    fn coset_rep(&self, x: &[u64]) -> GroupElement {
        self.k2.iter().map(|h| self.t.add(x, h)).min().expect("K_[2] contains 0")
    }

    /// `(ν_{t0}, ν(t0))`.
    pub fn data_at(&self, nu: &SignMap, t0: &[u64]) -> Item3Data {
        let mu = self.k2.iter().map(|h| (h.clone(), nu[&self.t.add(t0, h)] * nu[t0])).collect();
        Item3Data {
            mu,
            delta: nu[t0],
        }
    }

    /// Data at `t0 + g` from data at `t0`:
    /// `μ_{t0+g}(h) = μ_{t0}(h)β(g, h)` and, in case a with `g ∈ K_[2]`,
    /// `δ_{t0+g} = δ_{t0}μ_{t0}(g)`. Otherwise `δ` is carried unchanged and is not meaningful.
    pub fn transport(&self, beta: &AltBicharacter, data: &Item3Data, g: &[u64]) -> Item3Data {
        let mu = data
            .mu
            .iter()
            .map(|(h, &m)| (h.clone(), m * self.sign(beta, g, h)))
            .collect();
        let delta = match self.case {
            AdmissibleCase::A if data.mu.contains_key(g) => data.delta * data.mu[g],
            _ => data.delta,
        };
        Item3Data { mu, delta }
    }

    fn nu_from(&self, beta: &AltBicharacter, data: &Item3Data, t0: &[u64]) -> SignMap {
        let t = &self.t;
        match self.case {
            AdmissibleCase::A => self
                .domain()
                .into_iter()
                .map(|x| {
                    let v = data.delta * data.mu[&t.sub(&x, t0)];
                    (x, v)
                })
                .collect(),
            AdmissibleCase::B => {
                // δ_i = +1 on every coset representative t_i
                let mut out = SignMap::new();
                for x in self.domain() {
                    let rep = self.coset_rep(&x);
                    let at_rep = self.transport(beta, data, &t.sub(&rep, t0));
                    out.insert(x.clone(), at_rep.mu[&t.sub(&x, &rep)]);
                }
                out
            }
        }
    }
}

/// All admissible maps (case a) or canonical class representatives (case b).
pub fn enumerate_admissible(ctx: &KContext, beta: &AltBicharacter) -> Result<Vec<AdmissibleMap>> {
    if !ctx.rad_condition(beta) {
        return Err(Error::Precondition("T^[2] is not contained in rad β".into()));
    }
    let dom = ctx.domain();
    if dom.len() > 20 {
        return Err(Error::Precondition(format!("admissible-map domain of size {} is too large", dom.len())));
    }
    let mut out: Vec<SignMap> = Vec::new();
    for mask in 0u64..(1 << dom.len()) {
        let nu: SignMap = dom
            .iter()
            .enumerate()
            .map(|(b, x)| (x.clone(), if mask >> b & 1 == 1 { -1 } else { 1 }))
            .collect();
        if ctx.is_admissible(beta, &nu) {
            out.push(ctx.canonical_class(&nu));
        }
    }
    out.sort();
    out.dedup();
    Ok(out
        .into_iter()
        .map(|values| AdmissibleMap {
            case: ctx.case,
            values,
        })
        .collect())
}

/// The `t0`-independent parameter: `ν(t) = δ·μ(t - t0)` in case a, and in case b
/// the class built from the transported family `μ_t` with `δ_i = +1`.
///
/// The result is recomputed from every other eligible `t0'` via the transition
/// formulas and must agree.
pub fn canonicalize_item3(
    ctx: &KContext,
    beta: &AltBicharacter,
    data: &Item3Data,
    t0: &[u64],
) -> Result<AdmissibleMap> {
    let eligible = ctx.eligible_t0();
    if !eligible.iter().any(|x| x.as_slice() == t0) {
        return Err(Error::Precondition(format!("t0 = {t0:?} is not eligible")));
    }
    let forms = quadratic_forms_on(&ctx.t, &ctx.k2, |g, h| ctx.sign(beta, g, h))?;
    if !forms.contains(&data.mu) {
        return Err(Error::Precondition(
            "μ is not a quadratic form on K_[2] with polarization β".into(),
        ));
    }
    let nu = ctx.nu_from(beta, data, t0);
    for t1 in &eligible {
        let g = ctx.t.sub(t1, t0);
        let moved = ctx.transport(beta, data, &g);
        if ctx.nu_from(beta, &moved, t1) != nu {
            return Err(Error::Internal(format!(
                "canonical ν differs between t0 = {t0:?} and t0 = {t1:?}"
            )));
        }
    }
    if !ctx.is_admissible(beta, &nu) {
        return Err(Error::Internal("canonical ν is not admissible".into()));
    }
    Ok(AdmissibleMap {
        case: ctx.case,
        values: nu,
    })
}

type Vector = Vec<BigRational>;

/// `re + i·im` with `re, im ∈ D(K, β, μ)`.
#[derive(Clone, PartialEq)]
struct Cx {
    re: Vector,
    im: Vector,
}

struct MatrixModel<'a> {
    d: &'a GradedAlgebra<Reals>,
}

impl MatrixModel<'_> {
    fn zero(&self) -> Cx {
        Cx {
            re: self.d.zero_vector(),
            im: self.d.zero_vector(),
        }
    }

    fn cmul(&self, x: &Cx, y: &Cx) -> Cx {
        let d = self.d;
        Cx {
            re: d.sub(&d.mul(&x.re, &y.re), &d.mul(&x.im, &y.im)),
            im: d.add(&d.mul(&x.re, &y.im), &d.mul(&x.im, &y.re)),
        }
    }

    fn cadd(&self, x: &Cx, y: &Cx) -> Cx {
        Cx {
            re: self.d.add(&x.re, &y.re),
            im: self.d.add(&x.im, &y.im),
        }
    }

    /// 2×2 product, row-major.
    fn mat_mul(&self, a: &[Cx; 4], b: &[Cx; 4]) -> [Cx; 4] {
        let e = |r: usize, c: usize| self.cadd(&self.cmul(&a[2 * r], &b[c]), &self.cmul(&a[2 * r + 1], &b[2 + c]));
        [e(0, 0), e(0, 1), e(1, 0), e(1, 1)]
    }

    fn real(&self, v: Vector) -> Cx {
        Cx {
            re: v,
            im: self.d.zero_vector(),
        }
    }

    fn imag(&self, v: Vector) -> Cx {
        Cx {
            re: self.d.zero_vector(),
            im: v,
        }
    }

    fn scale(&self, a: &BigRational, m: &[Cx; 4]) -> [Cx; 4] {
        m.clone().map(|c| Cx {
            re: self.d.scale(a, &c.re),
            im: self.d.scale(a, &c.im),
        })
    }

    fn add(&self, x: &[Cx; 4], y: &[Cx; 4]) -> [Cx; 4] {
        [0, 1, 2, 3].map(|i| self.cadd(&x[i], &y[i]))
    }
}

/// The item-3 representative over `R`, graded by `T`.
///
/// With `t0` the smallest eligible element, `μ = ν_{t0}`, `λ = ν(t0)` in case a
/// and `λ = 1` in case b, the basis is `Y_t, JY_t` (indices `2·idx(t)`,
/// `2·idx(t)+1`) where `Y_s = diag(X_s, X_s)`, `Y_{t0+s} = [[0, X_{2t0}X_s], [λX_s, 0]]`
/// for `s ∈ K`, and `J = diag(i, -i)`.
pub fn construct_item3(ctx: &KContext, beta: &AltBicharacter, nu: &AdmissibleMap) -> Result<GradedAlgebra<Reals>> {
    let t = &ctx.t;
    let t0 = ctx
        .eligible_t0()
        .into_iter()
        .next()
        .ok_or_else(|| Error::Precondition("no eligible t0".into()))?;
    let data = ctx.data_at(&nu.values, &t0);
    let kg = &ctx.pres.group;
    let mu_values: Vec<BigRational> = (0..kg.rank())
        .map(|i| {
            let o = kg.orders()[i];
            if o % 2 == 0 {
                let h = t.scale(o / 2, &ctx.pres.images[i]);
                BigRational::from_integer(data.mu[&h].into())
            } else {
                BigRational::one()
            }
        })
        .collect();
    let d = construct(beta, &MuFunction::new(Reals, kg, mu_values)?)?;
    let lambda = match ctx.case {
        AdmissibleCase::A => BigRational::from_integer(data.delta.into()),
        AdmissibleCase::B => BigRational::one(),
    };
    let model = MatrixModel { d: &d };
    let x = |s: &[u64]| d.basis_vector(kg.index_of(&ctx.pres.coords[s]));
    let x2t0 = x(&t.scale(2, &t0));
    let zero = model.zero();
    let neg = |v: &Vector| d.scale(&-BigRational::one(), v);

    let els: Vec<GroupElement> = t.elements().collect();
    let mut basis: Vec<[Cx; 4]> = Vec::with_capacity(2 * els.len());
    for g in &els {
        if ctx.k.contains(g) {
            let e = x(g);
            basis.push([model.real(e.clone()), zero.clone(), zero.clone(), model.real(e.clone())]);
            basis.push([model.imag(e.clone()), zero.clone(), zero.clone(), model.imag(neg(&e))]);
        } else {
            let s = t.sub(g, &t0);
            let top = d.mul(&x2t0, &x(&s));
            let bottom = d.scale(&lambda, &x(&s));
            basis.push([zero.clone(), model.real(top.clone()), model.real(bottom.clone()), zero.clone()]);
            basis.push([zero.clone(), model.imag(top), model.imag(neg(&bottom)), zero.clone()]);
        }
    }

    let mut entries = Vec::new();
    for (u, mu_) in basis.iter().enumerate() {
        for (v, mv) in basis.iter().enumerate() {
            let m = model.mat_mul(mu_, mv);
            let deg = t.add(&els[u / 2], &els[v / 2]);
            let w = 2 * t.index_of(&deg);
            let (a, b) = if ctx.k.contains(&deg) {
                let i = kg.index_of(&ctx.pres.coords[&deg]);
                (m[0].re[i].clone(), m[0].im[i].clone())
            } else {
                let i = kg.index_of(&ctx.pres.coords[&t.sub(&deg, &t0)]);
                (&m[2].re[i] / &lambda, -&m[2].im[i] / &lambda)
            };
            let rebuilt = model.add(&model.scale(&a, &basis[w]), &model.scale(&b, &basis[w + 1]));
            if rebuilt != m {
                return Err(Error::Internal(format!(
                    "product of basis elements {u}, {v} leaves the component of degree {deg:?}"
                )));
            }
            if !a.is_zero() {
                entries.push((u, v, w, a));
            }
            if !b.is_zero() {
                entries.push((u, v, w + 1, b));
            }
        }
    }
    let degrees: Vec<GroupElement> = els.iter().flat_map(|g| [g.clone(), g.clone()]).collect();
    let mut unit = vec![BigRational::zero(); degrees.len()];
    unit[2 * t.index_of(&t.zero())] = BigRational::one();
    GradedAlgebra::new(Reals, t.clone(), degrees, entries, Some(unit))
}

/// Every `(β, ν)` for a fixed index-2 subgroup.
pub fn item3_parameters(ctx: &KContext) -> Result<Vec<(AltBicharacter, AdmissibleMap)>> {
    let mut out = Vec::new();
    for beta in ctx.bicharacters() {
        for nu in enumerate_admissible(ctx, &beta)? {
            out.push((beta.clone(), nu));
        }
    }
    Ok(out)
}

/// `d²` for the first basis vector `d` of degree `t`, as a scalar when it is one.
#[cfg(test)]
fn square_scalar<F: crate::exactfield::Field>(a: &GradedAlgebra<F>, t: &[u64]) -> Option<F::Elem> {
    let i = a.degrees().iter().position(|d| d.as_slice() == t)?;
    let x = a.basis_vector(i);
    a.as_scalar(&a.mul(&x, &x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(orders: &[u64]) -> FinAbGroup {
        FinAbGroup::new(orders.to_vec()).unwrap()
    }

    #[test]
    fn z2_case_a_has_two_maps() {
        let t = g(&[2]);
        let k = t.trivial_subgroup();
        let ctx = KContext::new(&t, &k).unwrap();
        assert_eq!(ctx.case, AdmissibleCase::A);
        let beta = AltBicharacter::trivial(&ctx.pres.group);
        assert_eq!(enumerate_admissible(&ctx, &beta).unwrap().len(), 2);
    }

    #[test]
    fn z4_case_b_has_two_classes() {
        let t = g(&[4]);
        let k = t.index2_subgroups().remove(0);
        let ctx = KContext::new(&t, &k).unwrap();
        assert_eq!(ctx.case, AdmissibleCase::B);
        let beta = AltBicharacter::trivial(&ctx.pres.group);
        let dom = ctx.domain();
        let all = (0u64..1 << dom.len()).filter(|mask| {
            let nu: SignMap = dom.iter().enumerate().map(|(b, x)| (x.clone(), if mask >> b & 1 == 1 { -1 } else { 1 })).collect();
            ctx.is_admissible(&beta, &nu)
        });
        assert_eq!(all.count(), 4);
        assert_eq!(enumerate_admissible(&ctx, &beta).unwrap().len(), 2);
    }

    #[test]
    fn quaternions_as_item3() {
        let t = g(&[2]);
        let ctx = KContext::new(&t, &t.trivial_subgroup()).unwrap();
        let beta = AltBicharacter::trivial(&ctx.pres.group);
        let nu = AdmissibleMap {
            case: AdmissibleCase::A,
            values: [(vec![1], -1)].into_iter().collect(),
        };
        let a = construct_item3(&ctx, &beta, &nu).unwrap();
        assert_eq!(a.dim(), 4);
        assert!(a.verify_associative().associative);
        assert_eq!(a.is_graded_division(), Ok(true));
        assert_eq!(square_scalar(&a, &[1]), Some(BigRational::from_integer((-1).into())));
        assert_eq!(a.graded_center_e(), 1);
        assert!(!a.identity_component_is_central());
    }

    #[test]
    fn split_sign_is_not_division_free_of_zero_divisors_but_still_graded_division() {
        let t = g(&[2]);
        let ctx = KContext::new(&t, &t.trivial_subgroup()).unwrap();
        let beta = AltBicharacter::trivial(&ctx.pres.group);
        let nu = AdmissibleMap {
            case: AdmissibleCase::A,
            values: [(vec![1], 1)].into_iter().collect(),
        };
        let a = construct_item3(&ctx, &beta, &nu).unwrap();
        assert_eq!(a.is_graded_division(), Ok(true));
        assert_eq!(square_scalar(&a, &[1]), Some(BigRational::one()));
    }
}
