use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use super::FiniteGroup;

/// A subgroup as a sorted set of parent-element indices.
///
/// Equality, ordering and hashing only look at the element set; the
/// generating set is a by-product of construction.
#[derive(Clone, Debug)]
pub struct Subgroup {
    elements: Vec<u32>,
    generators: Vec<u32>,
    mask: Vec<u64>,
}

impl Subgroup {
    /// `elements` must be sorted, deduplicated and closed in `g`.
    pub(crate) fn from_elements_unchecked(g: &FiniteGroup, elements: Vec<u32>) -> Self {
        let mut mask = vec![0u64; g.order().div_ceil(64)];
        for &x in &elements {
            mask[x as usize / 64] |= 1 << (x % 64);
        }
        let mut sub = Subgroup { elements, generators: Vec::new(), mask };
        sub.generators = sub.greedy_generators(g);
        sub
    }

    fn greedy_generators(&self, g: &FiniteGroup) -> Vec<u32> {
        let mut span = vec![false; g.order()];
        span[0] = true;
        let mut span_elems = vec![0usize];
        let mut gens = Vec::new();
        for &x in &self.elements {
            if span[x as usize] {
                continue;
            }
            gens.push(x);
            // extend the span by closing under right multiplication by gens
            let mut head = 0;
            let mut queue = span_elems.clone();
            while head < queue.len() {
                let y = queue[head];
                for &s in &gens {
                    let z = g.mul(y, s as usize);
                    if !span[z] {
                        span[z] = true;
                        queue.push(z);
                    }
                }
                head += 1;
            }
            span_elems = queue;
        }
        gens
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.elements.iter().map(|&x| x as usize)
    }

    pub fn generators(&self) -> Vec<usize> {
        self.generators.iter().map(|&x| x as usize).collect()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.mask
            .get(x / 64)
            .is_some_and(|w| w & (1 << (x % 64)) != 0)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order() <= other.order() && self.iter().all(|x| other.contains(x))
    }

    /// Position of `x` in the sorted element list.
    pub fn position(&self, x: usize) -> Option<usize> {
        self.elements.binary_search(&(x as u32)).ok()
    }

    pub(crate) fn mask(&self) -> &[u64] {
        &self.mask
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_abelian(&self, g: &FiniteGroup) -> bool {
        self.generators.iter().all(|&a| {
            self.generators
                .iter()
                .all(|&b| g.mul(a as usize, b as usize) == g.mul(b as usize, a as usize))
        })
    }

    pub fn intersection(&self, g: &FiniteGroup, other: &Subgroup) -> Subgroup {
        let elems = self.elements.iter().copied().filter(|&x| other.contains(x as usize)).collect();
        Subgroup::from_elements_unchecked(g, elems)
    }

    /// `x H x⁻¹`
    pub fn conjugate(&self, g: &FiniteGroup, x: usize) -> Subgroup {
        let mut elems: Vec<u32> = self.iter().map(|h| g.conj(x, h) as u32).collect();
        elems.sort_unstable();
        Subgroup::from_elements_unchecked(g, elems)
    }

    /// Subgroup generated by `self ∪ other`.
    pub fn join(&self, g: &FiniteGroup, other: &Subgroup) -> Subgroup {
        let mut gens = self.generators();
        gens.extend(other.generators());
        g.closure(&gens)
    }

    pub fn is_normal_in(&self, g: &FiniteGroup, ambient: &Subgroup) -> bool {
        ambient.generators.iter().all(|&x| {
            self.generators
                .iter()
                .all(|&h| self.contains(g.conj(x as usize, h as usize)))
        })
    }

    /// Image of the subgroup under an element map `f` (which must be a
    /// homomorphism defined on every element).
    pub fn image_under(&self, g: &FiniteGroup, f: impl Fn(usize) -> usize) -> Subgroup {
        let mut elems: Vec<u32> = self.iter().map(|x| f(x) as u32).collect();
        elems.sort_unstable();
        elems.dedup();
        Subgroup::from_elements_unchecked(g, elems)
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Order first, then lexicographic element set.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.elements
            .len()
            .cmp(&other.elements.len())
            .then_with(|| self.elements.cmp(&other.elements))
    }
}
