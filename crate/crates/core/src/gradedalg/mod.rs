//! Finite-dimensional group-graded algebras given by structure constants, and the
//! exact oracles that certify them.

mod iso;
mod json;

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::abelian::{FinAbGroup, GroupElement, Subgroup};
use crate::error::{Error, Result};
use crate::exactfield::Field;
use crate::linalg;

pub use iso::{graded_iso_1dim, graded_iso_any, lift_cyclotomic, IsoWitness};
pub use json::{algebra_from_json, algebra_to_json};

/// Sparse vector: strictly increasing indices, no zero coefficients.
pub type SparseVec<E> = Vec<(usize, E)>;

/// A unital algebra with homogeneous basis `b_0, ..., b_{n-1}`.
#[derive(Debug, Clone)]
pub struct GradedAlgebra<F: Field> {
    field: F,
    group: FinAbGroup,
    degrees: Vec<GroupElement>,
    table: Vec<Vec<SparseVec<F::Elem>>>,
    unit: Vec<F::Elem>,
}

/// Basis indices of each homogeneous component with nonzero dimension.
pub type HomComponentMap = BTreeMap<GroupElement, Vec<usize>>;

impl<F: Field> GradedAlgebra<F> {
    /// Builds an algebra from `(i, j, k, c)` entries meaning `b_i b_j ∋ c b_k`.
    ///
    /// Checks grading compatibility and, when `unit` is `None`, solves for the unit.
    pub fn new(
        field: F,
        group: FinAbGroup,
        degrees: Vec<GroupElement>,
        entries: impl IntoIterator<Item = (usize, usize, usize, F::Elem)>,
        unit: Option<Vec<F::Elem>>,
    ) -> Result<Self> {
        let n = degrees.len();
        for d in &degrees {
            group.check(d)?;
        }
        let mut dense: Vec<Vec<BTreeMap<usize, F::Elem>>> = vec![vec![BTreeMap::new(); n]; n];
        for (i, j, k, c) in entries {
            if i >= n || j >= n || k >= n {
                return Err(Error::Precondition(format!(
                    "structure constant index ({i},{j},{k}) out of range for dimension {n}"
                )));
            }
            let slot = dense[i][j].entry(k).or_insert_with(|| field.zero());
            *slot = field.add(slot, &c);
        }
        let table: Vec<Vec<SparseVec<F::Elem>>> = dense
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|m| m.into_iter().filter(|(_, c)| !field.is_zero(c)).collect())
                    .collect()
            })
            .collect();
        let mut alg = GradedAlgebra {
            field,
            group,
            degrees,
            table,
            unit: vec![],
        };
        alg.verify_grading()?;
        alg.unit = match unit {
            Some(u) if u.len() == n => u,
            Some(u) => {
                return Err(Error::Precondition(format!(
                    "unit has length {} but dimension is {n}",
                    u.len()
                )))
            }
            None => alg.solve_unit()?,
        };
        if !alg.verify_unit() {
            return Err(Error::Precondition("designated unit is not a two-sided identity".into()));
        }
        Ok(alg)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[GroupElement] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> &GroupElement {
        &self.degrees[i]
    }

    pub fn unit(&self) -> &[F::Elem] {
        &self.unit
    }

    /// `b_i b_j` as a sparse vector.
    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec<F::Elem> {
        &self.table[i][j]
    }

    /// Every nonzero structure constant as `(i, j, k, c)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &F::Elem)> + '_ {
        self.table.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .flat_map(move |(j, v)| v.iter().map(move |(k, c)| (i, j, *k, c)))
        })
    }

    pub fn components(&self) -> HomComponentMap {
        let mut m: HomComponentMap = BTreeMap::new();
        for (i, d) in self.degrees.iter().enumerate() {
            m.entry(d.clone()).or_default().push(i);
        }
        m
    }

    /// Degrees with a nonzero component, sorted.
    pub fn support(&self) -> Vec<GroupElement> {
        self.components().into_keys().collect()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    pub fn zero_vector(&self) -> Vec<F::Elem> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn add(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        x.iter().zip(y).map(|(a, b)| self.field.add(a, b)).collect()
    }

    pub fn sub(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        x.iter().zip(y).map(|(a, b)| self.field.sub(a, b)).collect()
    }

    pub fn scale(&self, c: &F::Elem, x: &[F::Elem]) -> Vec<F::Elem> {
        x.iter().map(|a| self.field.mul(c, a)).collect()
    }

    pub fn is_zero(&self, x: &[F::Elem]) -> bool {
        x.iter().all(|a| self.field.is_zero(a))
    }

    pub fn mul(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = self.zero_vector();
        for (i, a) in x.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if f.is_zero(b) {
                    continue;
                }
                let ab = f.mul(a, b);
                for (k, c) in &self.table[i][j] {
                    out[*k] = f.add(&out[*k], &f.mul(&ab, c));
                }
            }
        }
        out
    }

    pub fn pow(&self, x: &[F::Elem], n: u64) -> Vec<F::Elem> {
        (0..n).fold(self.unit.clone(), |acc, _| self.mul(&acc, x))
    }

    /// Matrix of `y ↦ x·y` (columns indexed by basis of `y`).
    pub fn left_mul_matrix(&self, x: &[F::Elem]) -> linalg::Matrix<F::Elem> {
        let n = self.dim();
        let mut m = vec![vec![self.field.zero(); n]; n];
        for j in 0..n {
            let col = self.mul(x, &self.basis_vector(j));
            for (k, c) in col.into_iter().enumerate() {
                m[k][j] = c;
            }
        }
        m
    }

    /// Two-sided inverse, when it exists.
    ///
    /// Solves `x·y = 1`; in a finite-dimensional associative unital algebra a right
    /// inverse is automatically two-sided, which is re-checked here.
    pub fn inverse(&self, x: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let m = self.left_mul_matrix(x);
        let y = linalg::solve(&self.field, &m, &self.unit)?;
        (self.mul(&y, x) == self.unit).then_some(y)
    }

    pub fn is_invertible(&self, x: &[F::Elem]) -> bool {
        linalg::rank(&self.field, &self.left_mul_matrix(x)) == self.dim()
    }

    /// Coefficient `c` with `x = c·1`, when `x` is a scalar.
    pub fn as_scalar(&self, x: &[F::Elem]) -> Option<F::Elem> {
        let (pivot, u) = self
            .unit
            .iter()
            .enumerate()
            .find(|(_, c)| !self.field.is_zero(c))?;
        let c = self.field.div(&x[pivot], u).ok()?;
        (self.scale(&c, &self.unit) == x).then_some(c)
    }

    fn solve_unit(&self) -> Result<Vec<F::Elem>> {
        let f = &self.field;
        let n = self.dim();
        // unknown u: u·b_j = b_j and b_j·u = b_j for all j
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for j in 0..n {
            for k in 0..n {
                let mut left = vec![f.zero(); n];
                let mut right = vec![f.zero(); n];
                for i in 0..n {
                    if let Some((_, c)) = self.table[i][j].iter().find(|(kk, _)| *kk == k) {
                        left[i] = c.clone();
                    }
                    if let Some((_, c)) = self.table[j][i].iter().find(|(kk, _)| *kk == k) {
                        right[i] = c.clone();
                    }
                }
                let target = if j == k { f.one() } else { f.zero() };
                rows.push(left);
                rhs.push(target.clone());
                rows.push(right);
                rhs.push(target);
            }
        }
        linalg::solve(f, &rows, &rhs)
            .ok_or_else(|| Error::Precondition("algebra has no identity element".into()))
    }

    /// Every product `b_i b_j` lies in degree `deg b_i + deg b_j`.
    pub fn verify_grading(&self) -> Result<()> {
        for (i, j, k, _) in self.entries() {
            let d = self.group.add(&self.degrees[i], &self.degrees[j]);
            if d != self.degrees[k] {
                return Err(Error::Precondition(format!(
                    "b_{i}·b_{j} has a component on b_{k}, whose degree {:?} differs from {:?}",
                    self.degrees[k], d
                )));
            }
        }
        Ok(())
    }

    pub fn verify_unit(&self) -> bool {
        (0..self.dim()).all(|i| {
            let b = self.basis_vector(i);
            self.mul(&self.unit, &b) == b && self.mul(&b, &self.unit) == b
        })
    }

    /// Checks `(b_i b_j) b_k = b_i (b_j b_k)` on all basis triples.
    pub fn verify_associative(&self) -> AssociativityReport {
        let n = self.dim();
        let basis: Vec<Vec<F::Elem>> = (0..n).map(|i| self.basis_vector(i)).collect();
        let witness = (0..n).into_par_iter().find_map_first(|i| {
            for j in 0..n {
                let ij = self.mul(&basis[i], &basis[j]);
                for k in 0..n {
                    let left = self.mul(&ij, &basis[k]);
                    let right = self.mul(&basis[i], &self.mul(&basis[j], &basis[k]));
                    if left != right {
                        return Some((i, j, k));
                    }
                }
            }
            None
        });
        AssociativityReport {
            associative: witness.is_none(),
            witness,
        }
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim()).all(|i| (0..self.dim()).all(|j| self.table[i][j] == self.table[j][i]))
    }

    /// Whether every component is 1-dimensional.
    pub fn has_1dim_components(&self) -> bool {
        self.components().values().all(|v| v.len() == 1)
    }

    /// Index of the basis vector of degree `t`, for 1-dimensional components.
    pub fn index_of_degree(&self, t: &[u64]) -> Option<usize> {
        self.degrees.iter().position(|d| d.as_slice() == t)
    }

    /// Whether every nonzero homogeneous element is invertible.
    ///
    /// Certificates used:
    /// - 1-dimensional components: `b_t b_{-t}` and `b_{-t} b_t` are nonzero scalars;
    /// - otherwise `A_e` is certified a division algebra (trivially for dimension 1,
    ///   by a Clifford-type basis over ordered fields, or exhaustively over finite
    ///   fields) and each component has the dimension of `A_e` and an invertible
    ///   basis vector `b`, so that `A_t = A_e·b`.
    ///
    /// Returns [`Error::Undecided`] when no certificate applies.
    pub fn is_graded_division(&self) -> Result<bool> {
        let comps = self.components();
        let support: Vec<&GroupElement> = comps.keys().collect();
        let zero = self.group.zero();
        if !comps.contains_key(&zero) {
            return Ok(false);
        }
        for s in &support {
            for t in &support {
                if !comps.contains_key(&self.group.add(s, t)) {
                    return Ok(false);
                }
            }
        }
        if comps.values().all(|v| v.len() == 1) {
            for (t, idx) in &comps {
                let inv = &comps[&self.group.neg(t)];
                let (x, y) = (self.basis_vector(idx[0]), self.basis_vector(inv[0]));
                let p = self.mul(&x, &y);
                let q = self.mul(&y, &x);
                let nonzero = |v: &[F::Elem]| {
                    self.as_scalar(v).is_some_and(|c| !self.field.is_zero(&c))
                };
                if !nonzero(&p) || !nonzero(&q) {
                    return Ok(false);
                }
            }
            return Ok(true);
        }
        let e_idx = &comps[&zero];
        if !self.identity_component_is_division(e_idx)? {
            return Ok(false);
        }
        for idx in comps.values() {
            if idx.len() != e_idx.len() {
                return Ok(false);
            }
            if !idx.iter().any(|&i| self.is_invertible(&self.basis_vector(i))) {
                return Err(Error::Undecided(
                    "no basis vector of a component is invertible".into(),
                ));
            }
        }
        Ok(true)
    }

    fn identity_component_is_division(&self, e_idx: &[usize]) -> Result<bool> {
        let d = e_idx.len();
        if d == 1 {
            return Ok(true);
        }
        let ae = self.identity_component();
        if let Some(els) = self.field.elements() {
            let total = (els.len() as u64).checked_pow(d as u32).unwrap_or(u64::MAX);
            if total > 1 << 20 {
                return Err(Error::Undecided(format!(
                    "identity component has {total} elements, too many to enumerate"
                )));
            }
            let mut coords = vec![0usize; d];
            loop {
                let v: Vec<F::Elem> = coords.iter().map(|&c| els[c].clone()).collect();
                if !ae.is_zero(&v) && !ae.is_invertible(&v) {
                    return Ok(false);
                }
                let mut k = 0;
                loop {
                    if k == d {
                        return Ok(true);
                    }
                    coords[k] += 1;
                    if coords[k] < els.len() {
                        break;
                    }
                    coords[k] = 0;
                    k += 1;
                }
            }
        }
        match ae.clifford_certificate() {
            Some(true) => Ok(true),
            Some(false) => Ok(false),
            None => Err(Error::Undecided(
                "identity component has no recognizable division certificate".into(),
            )),
        }
    }

    /// Over an ordered field: `Some(true)` when the basis is `{c·1, u_1, ...}` with
    /// `u_i^2 = -c_i` (`c_i > 0`), the `u_i` pairwise anticommuting, and dimension
    /// 2 or 4, so the algebra is a form of `C` or `H`. `Some(false)` when some
    /// `u_i^2` is a nonnegative scalar (a zero divisor or non-unit exists).
    fn clifford_certificate(&self) -> Option<bool> {
        let f = &self.field;
        let d = self.dim();
        let unit_pos = (0..d).find(|&i| self.as_scalar(&self.basis_vector(i)).is_some())?;
        let us: Vec<Vec<F::Elem>> = (0..d)
            .filter(|&i| i != unit_pos)
            .map(|i| self.basis_vector(i))
            .collect();
        for u in &us {
            let c = self.as_scalar(&self.mul(u, u))?;
            if f.sign(&c)? >= 0 {
                return Some(false);
            }
        }
        for (a, u) in us.iter().enumerate() {
            for v in &us[a + 1..] {
                let uv = self.mul(u, v);
                let vu = self.mul(v, u);
                if self.add(&uv, &vu) != self.zero_vector() {
                    return None;
                }
            }
        }
        matches!(d, 2 | 4).then_some(true)
    }

    /// `A_e` as an algebra graded by the trivial group.
    pub fn identity_component(&self) -> GradedAlgebra<F> {
        let zero = self.group.zero();
        let idx: Vec<usize> = (0..self.dim()).filter(|&i| self.degrees[i] == zero).collect();
        self.restrict(&idx, FinAbGroup::trivial(), |_| vec![])
    }

    /// `A_H = ⊕_{h∈H} A_h`, graded by the ambient group.
    pub fn subalgebra(&self, h: &Subgroup) -> GradedAlgebra<F> {
        let idx: Vec<usize> = (0..self.dim()).filter(|&i| h.contains(&self.degrees[i])).collect();
        self.restrict(&idx, self.group.clone(), |d| d.clone())
    }

    /// The same algebra regraded along a group homomorphism `phi`.
    pub fn push_forward(&self, group: FinAbGroup, phi: impl Fn(&GroupElement) -> GroupElement) -> Result<GradedAlgebra<F>> {
        let all: Vec<usize> = (0..self.dim()).collect();
        let out = self.restrict(&all, group, phi);
        out.verify_grading()?;
        Ok(out)
    }

    fn restrict(
        &self,
        idx: &[usize],
        group: FinAbGroup,
        degree: impl Fn(&GroupElement) -> GroupElement,
    ) -> GradedAlgebra<F> {
        let pos: BTreeMap<usize, usize> = idx.iter().enumerate().map(|(a, &i)| (i, a)).collect();
        let mut table = vec![vec![Vec::new(); idx.len()]; idx.len()];
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                table[a][b] = self.table[i][j]
                    .iter()
                    .map(|(k, c)| (pos[k], c.clone()))
                    .collect();
            }
        }
        GradedAlgebra {
            field: self.field.clone(),
            group,
            degrees: idx.iter().map(|&i| degree(&self.degrees[i])).collect(),
            table,
            unit: idx.iter().map(|&i| self.unit[i].clone()).collect(),
        }
    }

    /// `{x | x·s = s·x for all s}` for the given homogeneous basis indices, as a
    /// basis of dense vectors; solved one degree component at a time.
    pub fn centralizer_of_basis(&self, of: &[usize]) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let n = self.dim();
        let mut out = Vec::new();
        for idx in self.components().values() {
            let mut rows: Vec<Vec<F::Elem>> = Vec::new();
            for &j in of {
                let bj = self.basis_vector(j);
                let cols: Vec<Vec<F::Elem>> = idx
                    .iter()
                    .map(|&i| {
                        let bi = self.basis_vector(i);
                        self.sub(&self.mul(&bi, &bj), &self.mul(&bj, &bi))
                    })
                    .collect();
                for k in 0..n {
                    rows.push(cols.iter().map(|c| c[k].clone()).collect());
                }
            }
            for v in linalg::nullspace(f, &rows, idx.len()) {
                let mut x = self.zero_vector();
                for (c, &i) in v.into_iter().zip(idx) {
                    x[i] = c;
                }
                out.push(x);
            }
        }
        out
    }

    pub fn center(&self) -> Vec<Vec<F::Elem>> {
        let all: Vec<usize> = (0..self.dim()).collect();
        self.centralizer_of_basis(&all)
    }

    /// `dim Z(A) ∩ A_e`.
    pub fn graded_center_e(&self) -> usize {
        let zero = self.group.zero();
        self.center()
            .iter()
            .filter(|x| {
                x.iter()
                    .enumerate()
                    .all(|(i, c)| self.field.is_zero(c) || self.degrees[i] == zero)
            })
            .count()
    }

    /// Whether `A_e ⊆ Z(A)`.
    pub fn identity_component_is_central(&self) -> bool {
        let zero = self.group.zero();
        let e: Vec<usize> = (0..self.dim()).filter(|&i| self.degrees[i] == zero).collect();
        e.iter().all(|&i| {
            let bi = self.basis_vector(i);
            (0..self.dim()).all(|j| {
                let bj = self.basis_vector(j);
                self.mul(&bi, &bj) == self.mul(&bj, &bi)
            })
        })
    }

    /// Degrees of `Cent_A(A_e)`.
    pub fn centralizer_of_identity_support(&self) -> Vec<GroupElement> {
        let zero = self.group.zero();
        let e: Vec<usize> = (0..self.dim()).filter(|&i| self.degrees[i] == zero).collect();
        let mut degs: Vec<GroupElement> = self
            .centralizer_of_basis(&e)
            .iter()
            .filter_map(|x| {
                x.iter()
                    .position(|c| !self.field.is_zero(c))
                    .map(|i| self.degrees[i].clone())
            })
            .collect();
        degs.sort();
        degs.dedup();
        degs
    }

    /// Tensor product `self ⊗ other` with grading `deg(a⊗b) = deg a` and `other`
    /// trivially graded. Basis order: `(i, j) ↦ i·dim(other) + j`.
    pub fn tensor_trivially_graded(&self, other: &GradedAlgebra<F>) -> GradedAlgebra<F> {
        let f = &self.field;
        let m = other.dim();
        let n = self.dim() * m;
        let mut table = vec![vec![Vec::new(); n]; n];
        for i in 0..self.dim() {
            for j in 0..m {
                for k in 0..self.dim() {
                    for l in 0..m {
                        let mut v: Vec<(usize, F::Elem)> = Vec::new();
                        for (a, c) in &self.table[i][k] {
                            for (b, d) in &other.table[j][l] {
                                v.push((a * m + b, f.mul(c, d)));
                            }
                        }
                        v.sort_by_key(|(x, _)| *x);
                        table[i * m + j][k * m + l] = v;
                    }
                }
            }
        }
        let mut unit = vec![f.zero(); n];
        for (i, a) in self.unit.iter().enumerate() {
            for (j, b) in other.unit.iter().enumerate() {
                unit[i * m + j] = f.mul(a, b);
            }
        }
        GradedAlgebra {
            field: f.clone(),
            group: self.group.clone(),
            degrees: (0..n).map(|x| self.degrees[x / m].clone()).collect(),
            table,
            unit,
        }
    }

    /// The same table with every constant pushed through a field homomorphism.
    pub fn map_field<G: Field>(&self, g: G, phi: impl Fn(&F::Elem) -> G::Elem) -> GradedAlgebra<G> {
        GradedAlgebra {
            table: self
                .table
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|v| v.iter().map(|(k, c)| (*k, phi(c))).filter(|(_, c)| !g.is_zero(c)).collect())
                        .collect()
                })
                .collect(),
            unit: self.unit.iter().map(&phi).collect(),
            field: g,
            group: self.group.clone(),
            degrees: self.degrees.clone(),
        }
    }

    /// Runs grading, unit, associativity and graded-division oracles.
    pub fn verification_log(&self) -> Vec<(String, String)> {
        let mut log = Vec::new();
        log.push((
            "grading".to_string(),
            match self.verify_grading() {
                Ok(()) => "pass".to_string(),
                Err(e) => format!("fail: {e}"),
            },
        ));
        log.push((
            "unit".to_string(),
            if self.verify_unit() { "pass" } else { "fail" }.to_string(),
        ));
        let a = self.verify_associative();
        log.push((
            "associative".to_string(),
            match a.witness {
                None => "pass".to_string(),
                Some((i, j, k)) => format!("fail: (b{i} b{j}) b{k} != b{i} (b{j} b{k})"),
            },
        ));
        log.push((
            "graded_division".to_string(),
            match self.is_graded_division() {
                Ok(true) => "pass".to_string(),
                Ok(false) => "fail".to_string(),
                Err(e) => format!("undecided: {e}"),
            },
        ));
        log
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociativityReport {
    pub associative: bool,
    pub witness: Option<(usize, usize, usize)>,
}

/// The group algebra `F[G]` with basis indexed by group elements in enumeration order.
pub fn group_algebra<F: Field>(field: F, group: FinAbGroup) -> GradedAlgebra<F> {
    let n = group.order() as usize;
    let els: Vec<GroupElement> = group.elements().collect();
    let one = field.one();
    let entries: Vec<(usize, usize, usize, F::Elem)> = (0..n)
        .flat_map(|i| {
            let els = &els;
            let group = &group;
            let one = one.clone();
            (0..n).map(move |j| (i, j, group.index_of(&group.add(&els[i], &els[j])), one.clone()))
        })
        .collect();
    let mut unit = vec![field.zero(); n];
    unit[0] = field.one();
    GradedAlgebra::new(field, group.clone(), els, entries, Some(unit)).expect("group algebra is well formed")
}

/// Real quaternions, trivially graded: basis `1, i, j, k`.
pub fn quaternions<F: Field>(field: F, group: FinAbGroup) -> GradedAlgebra<F> {
    let one = field.one();
    let m1 = field.neg(&one);
    let mut entries = Vec::new();
    // (a, b, c, sign): e_a e_b = sign e_c
    let rules: [(usize, usize, usize, bool); 16] = [
        (0, 0, 0, true),
        (0, 1, 1, true),
        (0, 2, 2, true),
        (0, 3, 3, true),
        (1, 0, 1, true),
        (2, 0, 2, true),
        (3, 0, 3, true),
        (1, 1, 0, false),
        (2, 2, 0, false),
        (3, 3, 0, false),
        (1, 2, 3, true),
        (2, 1, 3, false),
        (2, 3, 1, true),
        (3, 2, 1, false),
        (3, 1, 2, true),
        (1, 3, 2, false),
    ];
    for (a, b, c, pos) in rules {
        entries.push((a, b, c, if pos { one.clone() } else { m1.clone() }));
    }
    let zero = group.zero();
    let mut unit = vec![field.zero(); 4];
    unit[0] = field.one();
    GradedAlgebra::new(field, group, vec![zero; 4], entries, Some(unit)).expect("quaternions are well formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{ff_construct, Rationals, Reals};

    fn z(n: u64) -> FinAbGroup {
        FinAbGroup::cyclic(n).unwrap()
    }

    #[test]
    fn group_algebra_oracles() {
        let a = group_algebra(Rationals::default(), z(2));
        assert!(a.verify_associative().associative);
        assert!(a.is_graded_division().unwrap());
        assert_eq!(a.identity_component().dim(), 1);
        assert_eq!(a.center().len(), 2);
        assert_eq!(a.graded_center_e(), 1);
        assert!(a.is_commutative());
    }

    #[test]
    fn broken_table_has_witness() {
        // c(x,x)=y, c(x,y)=0, c(y,x)=x with unit 1 = b0
        let q = Rationals::default();
        let g = FinAbGroup::trivial();
        let one = Rationals::int(1);
        let entries = vec![
            (0, 0, 0, one.clone()),
            (0, 1, 1, one.clone()),
            (0, 2, 2, one.clone()),
            (1, 0, 1, one.clone()),
            (2, 0, 2, one.clone()),
            (1, 1, 2, one.clone()),
            (2, 1, 1, one.clone()),
        ];
        let a = GradedAlgebra::new(q, g.clone(), vec![vec![]; 3], entries, None).unwrap();
        let r = a.verify_associative();
        assert!(!r.associative);
        let (i, j, k) = r.witness.unwrap();
        let (bi, bj, bk) = (a.basis_vector(i), a.basis_vector(j), a.basis_vector(k));
        assert_ne!(a.mul(&a.mul(&bi, &bj), &bk), a.mul(&bi, &a.mul(&bj, &bk)));
    }

    #[test]
    fn nilpotent_is_not_graded_division() {
        let q = Rationals::default();
        let one = Rationals::int(1);
        let entries = vec![(0, 0, 0, one.clone()), (0, 1, 1, one.clone()), (1, 0, 1, one)];
        let a = GradedAlgebra::new(q, z(2), vec![vec![0], vec![1]], entries, None).unwrap();
        assert!(a.verify_associative().associative);
        assert!(!a.is_graded_division().unwrap());
    }

    #[test]
    fn grading_violation_is_rejected() {
        let q = Rationals::default();
        let one = Rationals::int(1);
        let entries = vec![(0, 0, 0, one.clone()), (0, 1, 1, one.clone()), (1, 0, 1, one.clone()), (1, 1, 1, one)];
        assert!(GradedAlgebra::new(q, z(2), vec![vec![0], vec![1]], entries, None).is_err());
    }

    #[test]
    fn quaternions_are_a_division_algebra() {
        let h = quaternions(Reals, FinAbGroup::trivial());
        assert!(h.verify_associative().associative);
        assert!(h.is_graded_division().unwrap());
        assert_eq!(h.center().len(), 1);
        // Over GF(3) the same table splits.
        let f3 = ff_construct(3, 1, 0).unwrap();
        let h3 = quaternions(f3, FinAbGroup::trivial());
        assert!(!h3.is_graded_division().unwrap());
    }

    #[test]
    fn unit_is_solved_when_omitted() {
        let a = group_algebra(Rationals::default(), z(3));
        let entries: Vec<_> = a.entries().map(|(i, j, k, c)| (i, j, k, c.clone())).collect();
        let b = GradedAlgebra::new(Rationals::default(), z(3), a.degrees().to_vec(), entries, None).unwrap();
        assert_eq!(b.unit(), a.unit());
    }
}
