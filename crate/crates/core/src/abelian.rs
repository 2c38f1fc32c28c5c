//! Finite abelian groups presented as products of cyclic factors.
//!
//! Group law is written additively. Elements are exponent tuples `e` with
//! `0 <= e[i] < orders[i]`; enumeration order is lexicographic on tuples.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::arith::{factorize, gcd, is_prime, lcm};
use crate::error::{Error, Result};

pub type GroupElement = Vec<u64>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FinAbGroup {
    orders: Vec<u64>,
}

impl FinAbGroup {
    pub fn new(orders: Vec<u64>) -> Result<Self> {
        if orders.iter().any(|&n| n == 0) {
            return Err(Error::InvalidGroup(format!(
                "cyclic factor orders must be positive, got {orders:?}"
            )));
        }
        orders
            .iter()
            .try_fold(1u64, |acc, &n| acc.checked_mul(n))
            .filter(|&n| n <= 1 << 24)
            .ok_or_else(|| Error::InvalidGroup(format!("group {orders:?} is too large")))?;
        Ok(FinAbGroup { orders })
    }

    /// The cyclic group of order `n`.
    pub fn cyclic(n: u64) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn trivial() -> Self {
        FinAbGroup { orders: vec![] }
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1, |acc, &n| lcm(acc, n))
    }

    pub fn zero(&self) -> GroupElement {
        vec![0; self.rank()]
    }

    pub fn generator(&self, i: usize) -> GroupElement {
        let mut g = self.zero();
        g[i] = 1 % self.orders[i];
        g
    }

    pub fn is_valid(&self, g: &[u64]) -> bool {
        g.len() == self.rank() && g.iter().zip(&self.orders).all(|(e, n)| e < n)
    }

    pub fn check(&self, g: &[u64]) -> Result<()> {
        if self.is_valid(g) {
            Ok(())
        } else {
            Err(Error::InvalidElement {
                element: format!("{g:?}"),
                orders: self.orders.clone(),
            })
        }
    }

    /// Reduces an arbitrary integer tuple into canonical range.
    pub fn reduce(&self, g: &[i64]) -> GroupElement {
        g.iter()
            .zip(&self.orders)
            .map(|(&e, &n)| e.rem_euclid(n as i64) as u64)
            .collect()
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> GroupElement {
        a.iter()
            .zip(b)
            .zip(&self.orders)
            .map(|((x, y), n)| (x + y) % n)
            .collect()
    }

    pub fn neg(&self, a: &[u64]) -> GroupElement {
        a.iter()
            .zip(&self.orders)
            .map(|(x, n)| (n - x) % n)
            .collect()
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> GroupElement {
        self.add(a, &self.neg(b))
    }

    /// `n·a`.
    pub fn scale(&self, n: u64, a: &[u64]) -> GroupElement {
        a.iter()
            .zip(&self.orders)
            .map(|(x, m)| ((*x as u128 * n as u128) % *m as u128) as u64)
            .collect()
    }

    pub fn is_zero(&self, a: &[u64]) -> bool {
        a.iter().all(|&x| x == 0)
    }

    /// Least `n >= 1` with `n·g = 0`.
    pub fn element_order(&self, g: &[u64]) -> u64 {
        g.iter()
            .zip(&self.orders)
            .fold(1, |acc, (&e, &n)| lcm(acc, n / gcd(n, e)))
    }

    /// Position of `g` in lexicographic enumeration.
    pub fn index_of(&self, g: &[u64]) -> usize {
        g.iter()
            .zip(&self.orders)
            .fold(0usize, |acc, (&e, &n)| acc * n as usize + e as usize)
    }

    pub fn element_at(&self, mut idx: usize) -> GroupElement {
        let mut g = self.zero();
        for i in (0..self.rank()).rev() {
            let n = self.orders[i] as usize;
            g[i] = (idx % n) as u64;
            idx /= n;
        }
        g
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order() as usize).map(move |i| self.element_at(i))
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            generators: (0..self.rank()).map(|i| self.generator(i)).collect(),
            elements: self.elements().collect(),
        }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup {
            generators: vec![],
            elements: vec![self.zero()],
        }
    }

    /// Subgroup generated by `gens`.
    pub fn span(&self, gens: &[GroupElement]) -> Subgroup {
        let mut seen: BTreeSet<GroupElement> = BTreeSet::new();
        seen.insert(self.zero());
        let mut frontier = vec![self.zero()];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = self.add(&x, g);
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        Subgroup {
            generators: gens.to_vec(),
            elements: seen.into_iter().collect(),
        }
    }

    fn filtered(&self, keep: impl Fn(&GroupElement) -> bool) -> Subgroup {
        let elements: Vec<GroupElement> = self.elements().filter(|g| keep(g)).collect();
        let generators = minimal_generators(self, &elements);
        Subgroup {
            generators,
            elements,
        }
    }

    /// Elements of `p`-power order.
    pub fn torsion_p_part(&self, p: u64) -> Result<Subgroup> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(self.filtered(|g| {
            let mut o = self.element_order(g);
            while o % p == 0 {
                o /= p;
            }
            o == 1
        }))
    }

    /// `A_[n] = {g | n·g = 0}`.
    pub fn torsion(&self, n: u64) -> Subgroup {
        self.filtered(|g| self.is_zero(&self.scale(n, g)))
    }

    /// `A^[n] = {n·g}`.
    pub fn multiples(&self, n: u64) -> Subgroup {
        let gens: Vec<GroupElement> = (0..self.rank())
            .map(|i| self.scale(n, &self.generator(i)))
            .filter(|g| !self.is_zero(g))
            .collect();
        self.span(&gens)
    }

    pub fn two_torsion(&self) -> Subgroup {
        self.torsion(2)
    }

    pub fn squares(&self) -> Subgroup {
        self.multiples(2)
    }

    /// Kernels of the nonzero homomorphisms onto `Z_2`, in a deterministic order.
    pub fn index2_subgroups(&self) -> Vec<Subgroup> {
        let even: Vec<usize> = (0..self.rank())
            .filter(|&i| self.orders[i] % 2 == 0)
            .collect();
        let mut out: Vec<Subgroup> = Vec::new();
        for mask in 1u64..(1 << even.len()) {
            let chi = |g: &GroupElement| {
                even.iter()
                    .enumerate()
                    .filter(|(b, _)| mask >> b & 1 == 1)
                    .map(|(_, &i)| g[i])
                    .sum::<u64>()
                    % 2
            };
            out.push(self.filtered(|g| chi(g) == 0));
        }
        out.sort_by(|a, b| a.elements.cmp(&b.elements));
        out
    }

    /// Whether an index-2 subgroup `k` is a direct summand, decided by `2·t0 ∈ K^[2]`.
    ///
    /// The answer is recomputed for every admissible `t0` and an internal error is
    /// raised if any two disagree.
    pub fn is_direct_summand(&self, k: &Subgroup, t0: &[u64]) -> Result<bool> {
        self.check(t0)?;
        if k.order() * 2 != self.order() {
            return Err(Error::Precondition("subgroup must have index 2".into()));
        }
        if k.contains(t0) {
            return Err(Error::Precondition(format!("t0 = {t0:?} lies in K")));
        }
        let doubled: BTreeSet<GroupElement> =
            k.elements.iter().map(|x| self.scale(2, x)).collect();
        let test = |t: &[u64]| doubled.contains(&self.scale(2, t));
        let answer = test(t0);
        for t in self.elements().filter(|t| !k.contains(t)) {
            if test(&t) != answer {
                return Err(Error::Internal(format!(
                    "direct-summand test depends on t0: {t0:?} vs {t:?}"
                )));
            }
        }
        Ok(answer)
    }

    /// Cosets of `k`, each sorted, listed by smallest element.
    pub fn coset_decomposition(&self, k: &Subgroup) -> Vec<Vec<GroupElement>> {
        let mut covered: BTreeSet<GroupElement> = BTreeSet::new();
        let mut out = Vec::new();
        for g in self.elements() {
            if covered.contains(&g) {
                continue;
            }
            let mut coset: Vec<GroupElement> = k.elements.iter().map(|x| self.add(&g, x)).collect();
            coset.sort();
            covered.extend(coset.iter().cloned());
            out.push(coset);
        }
        out
    }

    /// `G / k` in canonical presentation together with the projection.
    pub fn quotient_group(&self, k: &Subgroup) -> Quotient {
        let cosets = self.coset_decomposition(k);
        let mut coset_of: HashMap<GroupElement, usize> = HashMap::new();
        for (c, coset) in cosets.iter().enumerate() {
            for x in coset {
                coset_of.insert(x.clone(), c);
            }
        }
        let add = |a: usize, b: usize| coset_of[&self.add(&cosets[a][0], &cosets[b][0])];
        let table = decompose_table(cosets.len(), add, coset_of[&self.zero()]);
        let coords = table.coords.clone();
        Quotient {
            group: table.group,
            coset_of,
            coords,
        }
    }

    /// Every subgroup, sorted by order and then by element list.
    pub fn all_subgroups(&self) -> Vec<Subgroup> {
        let mut found: BTreeSet<Vec<GroupElement>> = BTreeSet::new();
        let start = self.trivial_subgroup();
        found.insert(start.elements.clone());
        let mut queue = vec![start];
        let elems: Vec<GroupElement> = self.elements().collect();
        while let Some(s) = queue.pop() {
            for g in &elems {
                if s.contains(g) {
                    continue;
                }
                let mut gens = s.generators.clone();
                gens.push(g.clone());
                let t = self.span(&gens);
                if found.insert(t.elements.clone()) {
                    queue.push(t);
                }
            }
        }
        let mut out: Vec<Subgroup> = found
            .into_iter()
            .map(|elements| Subgroup {
                generators: minimal_generators(self, &elements),
                elements,
            })
            .collect();
        out.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
        out
    }

    /// Primary cyclic factors `p^k` of this group, unsorted.
    pub fn primary_factors(&self) -> Vec<(u64, u32)> {
        self.orders.iter().flat_map(|&n| factorize(n)).collect()
    }

    /// Isomorphic group in canonical primary order (2 first, odd primes ascending,
    /// each prime's factors ascending).
    pub fn canonical_primary(&self) -> FinAbGroup {
        let mut f = self.primary_factors();
        f.sort();
        FinAbGroup {
            orders: f.into_iter().map(|(p, k)| p.pow(k)).collect(),
        }
    }

    /// Isomorphic group in invariant-factor form `d_1 | d_2 | ... | d_r`, `d_1 > 1`.
    pub fn invariant_factors(&self) -> FinAbGroup {
        let mut by_prime: std::collections::BTreeMap<u64, Vec<u32>> = Default::default();
        for (p, k) in self.primary_factors() {
            by_prime.entry(p).or_default().push(k);
        }
        let r = by_prime.values().map(Vec::len).max().unwrap_or(0);
        let mut orders = vec![1u64; r];
        for (p, mut ks) in by_prime {
            ks.sort_unstable_by(|a, b| b.cmp(a));
            for (j, k) in ks.into_iter().enumerate() {
                orders[r - 1 - j] *= p.pow(k);
            }
        }
        FinAbGroup { orders }
    }

    pub fn is_isomorphic(&self, other: &FinAbGroup) -> bool {
        self.invariant_factors() == other.invariant_factors()
    }

    pub fn is_cyclic(&self) -> bool {
        self.invariant_factors().rank() <= 1
    }

    /// Canonical presentation of a subgroup with its embedding into `self`.
    pub fn present_subgroup(&self, s: &Subgroup) -> Presentation {
        let index: HashMap<&GroupElement, usize> =
            s.elements.iter().enumerate().map(|(i, g)| (g, i)).collect();
        let add = |a: usize, b: usize| index[&self.add(&s.elements[a], &s.elements[b])];
        let zero = index[&self.zero()];
        let table = decompose_table(s.elements.len(), add, zero);
        let images = table
            .generators
            .iter()
            .map(|&i| s.elements[i].clone())
            .collect();
        let coords = s
            .elements
            .iter()
            .cloned()
            .zip(table.coords)
            .collect();
        Presentation {
            group: table.group,
            images,
            coords,
        }
    }
}

/// All abelian groups of order `n` up to isomorphism, in canonical primary form.
pub fn all_groups_of_order(n: u64) -> Vec<FinAbGroup> {
    let mut out: Vec<Vec<u64>> = vec![vec![]];
    for (p, e) in factorize(n) {
        let mut next = Vec::new();
        for part in partitions(e) {
            let mut ks = part;
            ks.sort_unstable();
            for prefix in &out {
                let mut v = prefix.clone();
                v.extend(ks.iter().map(|&k| p.pow(k)));
                next.push(v);
            }
        }
        out = next;
    }
    let mut groups: Vec<FinAbGroup> = out.into_iter().map(|orders| FinAbGroup { orders }).collect();
    groups.sort_by(|a, b| (a.rank(), &a.orders).cmp(&(b.rank(), &b.orders)));
    groups
}

fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            go(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn minimal_generators(g: &FinAbGroup, elements: &[GroupElement]) -> Vec<GroupElement> {
    let mut gens: Vec<GroupElement> = Vec::new();
    let mut span = g.span(&[]);
    let mut sorted: Vec<&GroupElement> = elements.iter().collect();
    sorted.sort_by_key(|x| std::cmp::Reverse(g.element_order(x)));
    for x in sorted {
        if span.elements.len() == elements.len() {
            break;
        }
        if !span.contains(x) {
            gens.push(x.clone());
            span = g.span(&gens);
        }
    }
    gens
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    pub generators: Vec<GroupElement>,
    /// Sorted, duplicate-free.
    pub elements: Vec<GroupElement>,
}

impl Subgroup {
    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn contains(&self, g: &[u64]) -> bool {
        self.elements
            .binary_search_by(|x| x.as_slice().cmp(g))
            .is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|x| other.contains(x))
    }
}

/// A group isomorphic to a subgroup, with generator images and coordinates.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub group: FinAbGroup,
    /// Image of the i-th canonical generator in the ambient group.
    pub images: Vec<GroupElement>,
    /// Ambient element to canonical exponent tuple.
    pub coords: HashMap<GroupElement, GroupElement>,
}

impl Presentation {
    pub fn embed(&self, ambient: &FinAbGroup, x: &[u64]) -> GroupElement {
        x.iter()
            .zip(&self.images)
            .fold(ambient.zero(), |acc, (&e, img)| {
                ambient.add(&acc, &ambient.scale(e, img))
            })
    }
}

#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: FinAbGroup,
    pub coset_of: HashMap<GroupElement, usize>,
    /// Coset index to canonical exponent tuple.
    pub coords: Vec<GroupElement>,
}

impl Quotient {
    pub fn project(&self, g: &[u64]) -> GroupElement {
        self.coords[self.coset_of[g]].clone()
    }
}

/// Result of decomposing an abstract group given by its addition on `0..n`.
pub struct TableDecomposition {
    pub group: FinAbGroup,
    pub generators: Vec<usize>,
    pub coords: Vec<GroupElement>,
}

/// Decomposes an abstract abelian group on indices `0..n` into cyclic factors
/// in canonical primary order.
pub fn decompose_table(n: usize, add: impl Fn(usize, usize) -> usize, zero: usize) -> TableDecomposition {
    let mul = |k: u64, a: usize| {
        let mut acc = zero;
        for _ in 0..k {
            acc = add(acc, a);
        }
        acc
    };
    let order = |a: usize| {
        let mut k = 1u64;
        let mut x = a;
        while x != zero {
            x = add(x, a);
            k += 1;
        }
        k
    };
    let orders: Vec<u64> = (0..n).map(order).collect();
    let span_size = |gens: &[usize]| {
        let mut seen = vec![false; n];
        seen[zero] = true;
        let mut stack = vec![zero];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = add(x, g);
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count
    };

    let mut gens: Vec<usize> = Vec::new();
    let mut gen_orders: Vec<u64> = Vec::new();
    for (p, _) in factorize(n as u64) {
        let part: Vec<usize> = (0..n)
            .filter(|&a| crate::arith::prime_power_exponent(orders[a], p).is_some())
            .collect();
        // counts of p^k-torsion determine the type
        let mut tors = vec![1usize];
        loop {
            let pk = p.pow(tors.len() as u32);
            let c = part.iter().filter(|&&a| mul(pk, a) == zero).count();
            tors.push(c);
            if c == part.len() {
                break;
            }
        }
        let mut ks: Vec<u32> = Vec::new();
        let log = |mut x: usize| {
            let mut e = 0i64;
            while x > 1 {
                x /= p as usize;
                e += 1;
            }
            e
        };
        for k in 1..tors.len() {
            let at_least_k = log(tors[k]) - log(tors[k - 1]);
            let at_least_k1 = if k + 1 < tors.len() {
                log(tors[k + 1]) - log(tors[k])
            } else {
                0
            };
            for _ in 0..(at_least_k - at_least_k1) {
                ks.push(k as u32);
            }
        }
        ks.sort_unstable_by(|a, b| b.cmp(a));
        let mut chosen: Vec<usize> = Vec::new();
        let ok = search_basis(&part, &ks, p, &orders, &mut chosen, &span_size);
        assert!(ok, "abelian group decomposition failed");
        let mut pairs: Vec<(u64, usize)> = chosen
            .iter()
            .zip(&ks)
            .map(|(&g, &k)| (p.pow(k), g))
            .collect();
        pairs.sort();
        for (o, g) in pairs {
            gen_orders.push(o);
            gens.push(g);
        }
    }

    let group = FinAbGroup { orders: gen_orders };
    let mut coords = vec![Vec::new(); n];
    for x in group.elements() {
        let idx = x
            .iter()
            .zip(&gens)
            .fold(zero, |acc, (&e, &g)| add(acc, mul(e, g)));
        coords[idx] = x;
    }
    TableDecomposition {
        group,
        generators: gens,
        coords,
    }
}

fn search_basis(
    part: &[usize],
    ks: &[u32],
    p: u64,
    orders: &[u64],
    chosen: &mut Vec<usize>,
    span_size: &impl Fn(&[usize]) -> usize,
) -> bool {
    let depth = chosen.len();
    if depth == ks.len() {
        return true;
    }
    let target = p.pow(ks[depth]);
    let base = span_size(chosen);
    for &a in part {
        if orders[a] != target {
            continue;
        }
        chosen.push(a);
        if span_size(chosen) == base * target as usize
            && search_basis(part, ks, p, orders, chosen, span_size)
        {
            return true;
        }
        chosen.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(orders: &[u64]) -> FinAbGroup {
        FinAbGroup::new(orders.to_vec()).unwrap()
    }

    #[test]
    fn element_orders() {
        let z42 = g(&[4, 2]);
        assert_eq!(z42.element_order(&[0, 0]), 1);
        assert_eq!(z42.element_order(&[1, 0]), 4);
        // 2·(2,1) = (0,0)
        assert_eq!(z42.element_order(&[2, 1]), 2);
    }

    #[test]
    fn torsion_parts() {
        assert_eq!(g(&[6]).torsion_p_part(2).unwrap().elements, vec![vec![0], vec![3]]);
        assert_eq!(
            g(&[4, 3]).torsion_p_part(3).unwrap().elements,
            vec![vec![0, 0], vec![0, 1], vec![0, 2]]
        );
        assert_eq!(g(&[2]).torsion_p_part(3).unwrap().order(), 1);
        assert_eq!(g(&[2]).torsion_p_part(4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn two_torsion_and_squares() {
        let z4 = g(&[4]);
        assert_eq!(z4.two_torsion().elements, vec![vec![0], vec![2]]);
        assert_eq!(z4.squares().elements, vec![vec![0], vec![2]]);
        let v4 = g(&[2, 2]);
        assert_eq!(v4.two_torsion().order(), 4);
        assert_eq!(v4.squares().order(), 1);
        let z82 = g(&[8, 2]);
        assert_eq!(z82.two_torsion().order(), 4);
        assert_eq!(z82.squares().order(), 4);
    }

    #[test]
    fn index_two() {
        assert_eq!(g(&[2]).index2_subgroups().len(), 1);
        let v4 = g(&[2, 2]).index2_subgroups();
        assert_eq!(v4.len(), 3);
        assert!(v4.iter().all(|k| k.order() == 2));
        assert_eq!(g(&[4]).index2_subgroups()[0].elements, vec![vec![0], vec![2]]);
        assert!(g(&[3]).index2_subgroups().is_empty());
    }

    #[test]
    fn direct_summands() {
        let v4 = g(&[2, 2]);
        let k = v4.span(&[vec![1, 0]]);
        assert!(v4.is_direct_summand(&k, &[0, 1]).unwrap());
        let z4 = g(&[4]);
        let k = z4.span(&[vec![2]]);
        assert!(!z4.is_direct_summand(&k, &[1]).unwrap());
        assert!(z4.is_direct_summand(&k, &[2]).is_err());
        let t = g(&[4, 2]);
        let k = t.span(&[vec![1, 0]]);
        assert!(t.is_direct_summand(&k, &[0, 1]).unwrap());
        let k = t.span(&[vec![2, 0], vec![0, 1]]);
        assert!(!t.is_direct_summand(&k, &[1, 0]).unwrap());
    }

    #[test]
    fn cosets_and_quotients() {
        let z4 = g(&[4]);
        let k = z4.span(&[vec![2]]);
        assert_eq!(
            z4.coset_decomposition(&k),
            vec![vec![vec![0], vec![2]], vec![vec![1], vec![3]]]
        );
        assert_eq!(z4.coset_decomposition(&z4.whole()).len(), 1);
        let v4 = g(&[2, 2]);
        assert_eq!(v4.coset_decomposition(&v4.trivial_subgroup()).len(), 4);
        let q = z4.quotient_group(&k);
        assert_eq!(q.group.orders(), &[2]);
        assert_eq!(q.project(&[3]), vec![1]);
    }

    #[test]
    fn normal_forms() {
        assert_eq!(g(&[6, 4]).invariant_factors().orders(), &[2, 12]);
        assert_eq!(g(&[6, 4]).canonical_primary().orders(), &[2, 4, 3]);
        assert!(g(&[2, 3]).is_cyclic());
        assert!(!g(&[2, 2]).is_cyclic());
        assert_eq!(all_groups_of_order(16).len(), 5);
        assert_eq!(all_groups_of_order(12).len(), 2);
        assert_eq!(all_groups_of_order(1), vec![FinAbGroup::trivial()]);
    }

    #[test]
    fn subgroup_lattice() {
        // Z_2 x Z_2 has 5 subgroups, Z_8 has 4, Z_4 x Z_2 has 8.
        assert_eq!(g(&[2, 2]).all_subgroups().len(), 5);
        assert_eq!(g(&[8]).all_subgroups().len(), 4);
        assert_eq!(g(&[4, 2]).all_subgroups().len(), 8);
    }

    #[test]
    fn subgroup_presentation() {
        let t = g(&[4, 6]);
        let s = t.span(&[vec![2, 0], vec![0, 2], vec![0, 3]]);
        let pres = t.present_subgroup(&s);
        assert_eq!(pres.group.orders(), &[2, 2, 3]);
        for x in pres.group.elements() {
            let y = pres.embed(&t, &x);
            assert_eq!(pres.coords[&y], x);
        }
    }
}
