//! Finite groups as explicit multiplication tables.
//!
//! Elements are dense indices `0..order` with `0` the identity. Every
//! operation downstream is a table lookup, which is why groups are capped
//! at a few hundred elements.

mod build;
mod hom;
mod lattice;
mod ops;
mod subgroup;

pub(crate) use build::is_monomorphism;
pub use build::{direct_product, quotient, semidirect_product, subgroup_as_group, Quotient};
pub use hom::{are_isomorphic, automorphisms, extend_from_generators, find_isomorphism, GroupHom};
pub use lattice::{subgroups, DEFAULT_LATTICE_BOUND};
pub use ops::{
    center, centralizer, commutator_subgroup, is_p_group, max_p_perfect, normal_closure, normalizer,
    o_p, o_p_residual, p_part, sylow_p, thompson_subgroup, transporter,
};
pub use subgroup::Subgroup;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on the order of a group built from permutations.
pub const DEFAULT_GROUP_BOUND: usize = 512;

/// A permutation of `{0..degree-1}` stored as its image array.
pub type Permutation = Vec<u32>;

/// How a group was obtained from permutations, kept so that element `i`
/// can be printed as the permutation it came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermutationOrigin {
    pub degree: usize,
    pub generators: Vec<Permutation>,
    /// `elements[i]` is the permutation of element `i`.
    pub elements: Vec<Permutation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    labels: Option<Vec<String>>,
    origin: Option<PermutationOrigin>,
}

impl FiniteGroup {
    /// Builds a group from a row-major Cayley table, validating identity at
    /// index 0, the Latin-square property and (for order ≤ 512) associativity.
    pub fn from_cayley(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!("row {i} has length {}", row.len())));
            }
            for &x in row {
                if x >= n {
                    return Err(Error::InvalidTable(format!("entry {x} out of range in row {i}")));
                }
                table.push(x as u32);
            }
        }
        Self::from_table(n, table)
    }

    pub(crate) fn from_table(n: usize, table: Vec<u32>) -> Result<Self> {
        for i in 0..n {
            if table[i] as usize != i || table[i * n] as usize != i {
                return Err(Error::InvalidTable("index 0 is not a two-sided identity".into()));
            }
        }
        let mut inverse = vec![u32::MAX; n];
        for a in 0..n {
            let mut seen = vec![false; n];
            for b in 0..n {
                let c = table[a * n + b] as usize;
                if seen[c] {
                    return Err(Error::InvalidTable(format!("row {a} repeats entry {c}")));
                }
                seen[c] = true;
                if c == 0 {
                    inverse[a] = b as u32;
                }
            }
        }
        let g = FiniteGroup { order: n, table, inverse, labels: None, origin: None };
        if n <= DEFAULT_GROUP_BOUND {
            g.check_associative()?;
        }
        for a in 0..n {
            if g.mul(g.inv(a), a) != 0 {
                return Err(Error::InvalidTable(format!("element {a} has no two-sided inverse")));
            }
        }
        Ok(g)
    }

    /// Table constructor for callers that already know the table is a group.
    pub(crate) fn from_table_trusted(n: usize, table: Vec<u32>) -> Self {
        let mut inverse = vec![0u32; n];
        for a in 0..n {
            for b in 0..n {
                if table[a * n + b] == 0 {
                    inverse[a] = b as u32;
                    break;
                }
            }
        }
        FiniteGroup { order: n, table, inverse, labels: None, origin: None }
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::InvalidTable(format!(
                            "not associative on ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Closure of permutation generators. Products are composed right to
    /// left: `(x·y)(i) = x(y(i))`. Elements are numbered in breadth-first
    /// order from the identity.
    pub fn from_permutation_generators(
        degree: usize,
        generators: &[Vec<usize>],
        bound: usize,
    ) -> Result<Self> {
        let mut gens: Vec<Permutation> = Vec::with_capacity(generators.len());
        for (k, g) in generators.iter().enumerate() {
            if g.len() != degree {
                return Err(Error::InvalidPermutation(format!(
                    "generator {k} has length {} but degree is {degree}",
                    g.len()
                )));
            }
            let mut seen = vec![false; degree];
            for &x in g {
                if x >= degree || seen[x] {
                    return Err(Error::InvalidPermutation(format!(
                        "generator {k} is not a bijection on 0..{degree}"
                    )));
                }
                seen[x] = true;
            }
            gens.push(g.iter().map(|&x| x as u32).collect());
        }
        let identity: Permutation = (0..degree as u32).collect();
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Permutation, u32> = HashMap::new();
        index.insert(identity, 0);
        let mut head = 0;
        while head < elements.len() {
            for g in &gens {
                let next = compose(&elements[head], g);
                if !index.contains_key(&next) {
                    if elements.len() >= bound {
                        return Err(Error::GroupTooLarge { bound });
                    }
                    index.insert(next.clone(), elements.len() as u32);
                    elements.push(next);
                }
            }
            head += 1;
        }
        let n = elements.len();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = index[&compose(&elements[a], &elements[b])];
            }
        }
        let mut group = Self::from_table_trusted(n, table);
        group.origin = Some(PermutationOrigin { degree, generators: gens, elements });
        Ok(group)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// `g x g⁻¹`
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Greedy irredundant generating set: scan elements in index order and
    /// keep each one not already generated.
    pub fn generators(&self) -> Vec<usize> {
        self.whole().generators().to_vec()
    }

    /// The whole group as a subgroup of itself.
    pub fn whole(&self) -> Subgroup {
        Subgroup::from_elements_unchecked(self, (0..self.order as u32).collect())
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_elements_unchecked(self, vec![0])
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, a: usize) -> String {
        match (&self.labels, &self.origin) {
            (Some(l), _) => l[a].clone(),
            (None, Some(o)) => cycle_notation(&o.elements[a]),
            (None, None) => a.to_string(),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::Input(format!(
                "{} labels for a group of order {}",
                labels.len(),
                self.order
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn origin(&self) -> Option<&PermutationOrigin> {
        self.origin.as_ref()
    }

    /// Element index of a permutation, for groups built from permutations.
    pub fn element_of_permutation(&self, perm: &[usize]) -> Option<usize> {
        let origin = self.origin.as_ref()?;
        origin
            .elements
            .iter()
            .position(|e| e.len() == perm.len() && e.iter().zip(perm).all(|(&a, &b)| a as usize == b))
    }

    /// Cayley table as nested rows, for serialization.
    pub fn cayley_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    /// Subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Subgroup {
        let mut member = vec![false; self.order];
        let mut elems: Vec<u32> = vec![0];
        member[0] = true;
        let mut head = 0;
        while head < elems.len() {
            let x = elems[head] as usize;
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    elems.push(y as u32);
                }
            }
            head += 1;
        }
        elems.sort_unstable();
        Subgroup::from_elements_unchecked(self, elems)
    }

    /// Validates an element set as a subgroup.
    pub fn subgroup(&self, elements: &[usize]) -> Result<Subgroup> {
        let mut elems: Vec<u32> = elements.iter().map(|&x| x as u32).collect();
        elems.sort_unstable();
        elems.dedup();
        if elems.iter().any(|&x| x as usize >= self.order) {
            return Err(Error::NotASubgroup("element index out of range".into()));
        }
        if elems.first() != Some(&0) {
            return Err(Error::NotASubgroup("identity missing".into()));
        }
        let h = Subgroup::from_elements_unchecked(self, elems);
        for &a in h.elements() {
            if !h.contains(self.inv(a as usize)) {
                return Err(Error::NotASubgroup(format!("not closed under inverse at {a}")));
            }
            for &b in h.elements() {
                if !h.contains(self.mul(a as usize, b as usize)) {
                    return Err(Error::NotASubgroup(format!("not closed under product at ({a}, {b})")));
                }
            }
        }
        if self.order % h.order() != 0 {
            return Err(Error::NotASubgroup("order does not divide the group order".into()));
        }
        Ok(h)
    }
}

fn compose(x: &[u32], y: &[u32]) -> Permutation {
    y.iter().map(|&i| x[i as usize]).collect()
}

fn cycle_notation(perm: &[u32]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] as usize == start {
            continue;
        }
        out.push('(');
        let mut i = start;
        let mut first = true;
        while !seen[i] {
            seen[i] = true;
            if !first {
                out.push(' ');
            }
            out.push_str(&i.to_string());
            first = false;
            i = perm[i] as usize;
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Unique prime factors in ascending order.
pub fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && prime_divisors(n) == vec![n]
}
