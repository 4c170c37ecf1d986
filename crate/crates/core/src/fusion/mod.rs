//! Fusion systems on finite p-groups with fully materialized morphism sets.

mod closure;
mod predicates;
mod subsystems;

pub use closure::{generate_fusion, generate_fusion_with_budget, FusionGenerators, DEFAULT_MORPHISM_BUDGET};
pub use predicates::{OutGroup, SaturationViolation};
pub use subsystems::{product_elements, product_fusion, Subsystem};


use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::group::{
    is_p_group, subgroup_as_group, subgroups, sylow_p, transporter, FiniteGroup, GroupHom, Subgroup,
    DEFAULT_LATTICE_BOUND,
};

/// An injective homomorphism `P → S`, stored as the images of `P`'s
/// elements in ascending order of the source element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Morphism {
    images: Vec<u32>,
    image: usize,
}

impl Morphism {
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Index of the image subgroup in the system's subgroup list.
    pub fn image_index(&self) -> usize {
        self.image
    }
}

/// Where a fusion system came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    OfGroup { order: usize },
    Generated { generators: usize },
    Product,
    Normalizer,
    Centralizer,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::OfGroup { order } => write!(f, "of a group of order {order}"),
            Provenance::Generated { generators } => write!(f, "generated by {generators} maps"),
            Provenance::Product => write!(f, "product"),
            Provenance::Normalizer => write!(f, "normalizer subsystem"),
            Provenance::Centralizer => write!(f, "centralizer subsystem"),
        }
    }
}

/// A fusion system over a p-group `S`.
///
/// Every subgroup of `S` is an object; `maps[i]` lists all morphisms out of
/// subgroup `i` into `S`. `Hom_F(P, Q)` is the part of that list whose image
/// lies in `Q`.
#[derive(Clone, Debug)]
pub struct FusionSystem {
    group: FiniteGroup,
    prime: usize,
    subgroups: Vec<Subgroup>,
    lookup: HashMap<Vec<u32>, usize>,
    maps: Vec<Vec<Morphism>>,
    provenance: Provenance,
}

impl PartialEq for FusionSystem {
    fn eq(&self, other: &Self) -> bool {
        self.prime == other.prime
            && self.group.cayley_rows() == other.group.cayley_rows()
            && self.maps == other.maps
    }
}

impl Eq for FusionSystem {}

/// Shared lattice data for building systems over one group.
pub(crate) struct Lattice {
    pub subgroups: Vec<Subgroup>,
    pub lookup: HashMap<Vec<u32>, usize>,
}

impl Lattice {
    pub fn of(s: &FiniteGroup) -> Result<Self> {
        let subgroups = subgroups(s, DEFAULT_LATTICE_BOUND.max(s.order()))?;
        let lookup = subgroups.iter().enumerate().map(|(i, h)| (h.elements().to_vec(), i)).collect();
        Ok(Lattice { subgroups, lookup })
    }

    /// Index of the subgroup with exactly these (unsorted) elements.
    pub fn index_of(&self, elems: &[u32]) -> usize {
        let mut sorted = elems.to_vec();
        sorted.sort_unstable();
        self.lookup[&sorted]
    }
}

impl FusionSystem {
    pub(crate) fn from_parts(
        group: FiniteGroup,
        prime: usize,
        lattice: Lattice,
        mut maps: Vec<Vec<Morphism>>,
        provenance: Provenance,
    ) -> Self {
        for list in &mut maps {
            list.sort();
            list.dedup();
        }
        FusionSystem {
            group,
            prime,
            subgroups: lattice.subgroups,
            lookup: lattice.lookup,
            maps,
            provenance,
        }
    }

    /// `F_S(S)`: only conjugations by elements of `S`.
    pub fn inner(s: &FiniteGroup, prime: usize) -> Result<Self> {
        generate_fusion(&FusionGenerators::new(s.clone(), prime, Vec::new())?)
    }

    /// The p-group `S` the system lives on.
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn prime(&self) -> usize {
        self.prime
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// All subgroups of `S`, sorted by order then element set.
    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn subgroup(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn index_of(&self, p: &Subgroup) -> Option<usize> {
        self.lookup.get(p.elements()).copied()
    }

    pub(crate) fn index_of_elements(&self, elems: &[u32]) -> usize {
        let mut sorted = elems.to_vec();
        sorted.sort_unstable();
        self.lookup[&sorted]
    }

    pub fn whole_index(&self) -> usize {
        self.subgroups.len() - 1
    }

    /// All morphisms out of subgroup `i`.
    pub fn morphisms_from(&self, i: usize) -> &[Morphism] {
        &self.maps[i]
    }

    /// `Hom_F(P_i, P_j)`.
    pub fn hom(&self, i: usize, j: usize) -> impl Iterator<Item = &Morphism> + '_ {
        let target = &self.subgroups[j];
        self.maps[i]
            .iter()
            .filter(move |m| m.image == j || self.subgroups[m.image].is_subgroup_of(target))
    }

    /// `Aut_F(P_i)`.
    pub fn automorphisms(&self, i: usize) -> Vec<&Morphism> {
        self.maps[i].iter().filter(|m| m.image == i).collect()
    }

    /// `Hom_F(P, Q)` as group homomorphisms.
    pub fn hom_sets(&self, p: &Subgroup, q: &Subgroup) -> Result<Vec<GroupHom>> {
        let i = self.index_of(p).ok_or_else(|| Error::NotASubgroup("P is not a subgroup of S".into()))?;
        let j = self.index_of(q).ok_or_else(|| Error::NotASubgroup("Q is not a subgroup of S".into()))?;
        Ok(self
            .hom(i, j)
            .map(|m| GroupHom::from_parts_unchecked(p.clone(), q.clone(), m.images.clone()))
            .collect())
    }

    pub fn morphism_count(&self) -> usize {
        self.maps.iter().map(Vec::len).sum()
    }

    pub fn contains(&self, i: usize, images: &[u32]) -> bool {
        self.maps[i].binary_search_by(|m| m.images.as_slice().cmp(images)).is_ok()
    }

    /// Indices of the F-conjugates of subgroup `i`, ascending.
    pub fn class_of(&self, i: usize) -> Vec<usize> {
        let mut class: Vec<usize> = self.maps[i].iter().map(|m| m.image).collect();
        class.sort_unstable();
        class.dedup();
        class
    }

    /// One representative (the least index) per F-conjugacy class.
    pub fn class_representatives(&self) -> Vec<usize> {
        (0..self.subgroups.len()).filter(|&i| self.class_of(i)[0] == i).collect()
    }

    /// Image of element `x ∈ P_i` under `m`.
    pub fn apply(&self, i: usize, m: &Morphism, x: usize) -> Option<usize> {
        self.subgroups[i].position(x).map(|k| m.images[k] as usize)
    }

    /// `φ|_{P_j}` for `P_j ≤ P_i`.
    pub(crate) fn restrict(&self, i: usize, m: &Morphism, j: usize) -> Morphism {
        let images: Vec<u32> = self.subgroups[j]
            .iter()
            .map(|x| self.apply(i, m, x).expect("restriction to a subgroup") as u32)
            .collect();
        let image = self.index_of_elements(&images);
        Morphism { images, image }
    }

    /// Conjugation `c_g` on subgroup `i`.
    pub fn conjugation(&self, i: usize, g: usize) -> Morphism {
        conjugation_map(&self.group, &self.subgroups, &self.lookup, i, g)
    }

    /// Exhaustive check of the three structural axioms: all S-conjugations
    /// are present, closure under restriction and composition, and
    /// closure under inverses of isomorphisms onto images.
    pub fn check_axioms(&self) -> std::result::Result<(), String> {
        let s = &self.group;
        for (i, p) in self.subgroups.iter().enumerate() {
            for g in s.elements() {
                let c = self.conjugation(i, g);
                if !self.contains(i, &c.images) {
                    return Err(format!("conjugation by {g} on subgroup {i} missing"));
                }
            }
            for m in &self.maps[i] {
                let mut seen = m.images.clone();
                seen.sort_unstable();
                seen.dedup();
                if seen.len() != p.order() {
                    return Err(format!("non-injective map on subgroup {i}"));
                }
                for (k, x) in p.iter().enumerate() {
                    for (l, y) in p.iter().enumerate() {
                        let xy = p.position(s.mul(x, y)).expect("closed");
                        if m.images[xy] as usize != s.mul(m.images[k] as usize, m.images[l] as usize) {
                            return Err(format!("non-multiplicative map on subgroup {i}"));
                        }
                    }
                }
                // restriction to every subgroup
                for (j, q) in self.subgroups.iter().enumerate() {
                    if j != i && q.is_subgroup_of(p) {
                        let r = self.restrict(i, m, j);
                        if !self.contains(j, &r.images) {
                            return Err(format!("restriction of a map on {i} to {j} missing"));
                        }
                    }
                }
                // inverse onto the image
                let target = &self.subgroups[m.image];
                let mut inv = vec![0u32; target.order()];
                for (k, x) in p.iter().enumerate() {
                    inv[target.position(m.images[k] as usize).expect("image")] = x as u32;
                }
                if !self.contains(m.image, &inv) {
                    return Err(format!("inverse of a map on {i} missing"));
                }
                // composition at the exact image
                for n in &self.maps[m.image] {
                    let comp: Vec<u32> = m
                        .images
                        .iter()
                        .map(|&y| n.images[target.position(y as usize).expect("image")])
                        .collect();
                    if !self.contains(i, &comp) {
                        return Err(format!("composite of maps on {i} missing"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Per-pair morphism counts `|Hom_F(P_i, P_j)|`.
    pub fn count_matrix(&self) -> Vec<Vec<usize>> {
        (0..self.subgroups.len())
            .map(|i| (0..self.subgroups.len()).map(|j| self.hom(i, j).count()).collect())
            .collect()
    }
}

pub(crate) fn conjugation_map(
    s: &FiniteGroup,
    subgroups: &[Subgroup],
    lookup: &HashMap<Vec<u32>, usize>,
    i: usize,
    g: usize,
) -> Morphism {
    let images: Vec<u32> = subgroups[i].iter().map(|x| s.conj(g, x) as u32).collect();
    let mut sorted = images.clone();
    sorted.sort_unstable();
    Morphism { image: lookup[&sorted], images }
}

/// `F_S(G)` for `S = sylow_p(G)`: morphisms `P → Q` are the conjugations by
/// elements of the transporter `N_G(P, Q)`.
///
/// The returned system lives on `S` re-indexed as a standalone group (see
/// [`subgroup_as_group`]); the embedding into `G` is returned alongside.
pub fn fusion_of_group_with_embedding(g: &FiniteGroup, p: usize) -> Result<(FusionSystem, Vec<u32>)> {
    fusion_on_subgroup(g, p, &sylow_p(g, p))
}

/// Maps between subgroups of a p-subgroup `T ≤ G` induced by conjugation in
/// `G`, on `T` re-indexed as a standalone group. With `T` Sylow this is
/// `F_T(G)`.
pub fn fusion_on_subgroup(g: &FiniteGroup, p: usize, sylow: &Subgroup) -> Result<(FusionSystem, Vec<u32>)> {
    let (s, emb) = subgroup_as_group(g, sylow);
    require_p_group(&s, p)?;
    let lattice = Lattice::of(&s)?;
    let mut back = vec![u32::MAX; g.order()];
    for (k, &x) in emb.iter().enumerate() {
        back[x as usize] = k as u32;
    }
    let mut maps = Vec::with_capacity(lattice.subgroups.len());
    for h in &lattice.subgroups {
        let in_g = Subgroup::from_elements_unchecked(g, {
            let mut v: Vec<u32> = h.iter().map(|x| emb[x]).collect();
            v.sort_unstable();
            v
        });
        let mut list = Vec::new();
        for x in transporter(g, &in_g, sylow)? {
            let images: Vec<u32> = h.iter().map(|y| back[g.conj(x, emb[y] as usize)]).collect();
            let image = lattice.index_of(&images);
            list.push(Morphism { images, image });
        }
        maps.push(list);
    }
    let fs = FusionSystem::from_parts(s, p, lattice, maps, Provenance::OfGroup { order: g.order() });
    Ok((fs, emb))
}

pub fn fusion_of_group(g: &FiniteGroup, p: usize) -> Result<FusionSystem> {
    Ok(fusion_of_group_with_embedding(g, p)?.0)
}

pub(crate) fn require_p_group(s: &FiniteGroup, p: usize) -> Result<()> {
    if !crate::group::is_prime(p) {
        return Err(Error::Input(format!("{p} is not a prime")));
    }
    if !is_p_group(s.order(), p) {
        return Err(Error::Precondition(format!("S has order {}, not a power of {p}", s.order())));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::group::{centralizer, normalizer};

    #[test]
    fn abelian_sylow_gives_only_inclusions() {
        let v4 = corpus::klein_four();
        let f = fusion_of_group(&v4, 2).unwrap();
        for i in 0..f.subgroups().len() {
            // only the identity map out of each subgroup
            assert_eq!(f.morphisms_from(i).len(), 1);
        }
        assert!(f.check_axioms().is_ok());
    }

    /// `|Hom(P, Q)| = |N_G(P, Q)| / |C_G(P)|` by a transporter oracle on G.
    #[test]
    fn hom_counts_match_transporter_oracle() {
        for (g, p) in [(corpus::symmetric(4), 2), (corpus::alternating(4), 2), (corpus::symmetric(3), 3)] {
            let (f, emb) = fusion_of_group_with_embedding(&g, p).unwrap();
            for (i, h) in f.subgroups().iter().enumerate() {
                let hp = g.subgroup(&h.iter().map(|x| emb[x] as usize).collect::<Vec<_>>()).unwrap();
                let c = centralizer(&g, &hp).unwrap().order();
                for (j, k) in f.subgroups().iter().enumerate() {
                    let kp = g.subgroup(&k.iter().map(|x| emb[x] as usize).collect::<Vec<_>>()).unwrap();
                    let brute = g
                        .elements()
                        .filter(|&x| hp.iter().all(|y| kp.contains(g.conj(x, y))))
                        .count();
                    assert_eq!(f.hom(i, j).count() * c, brute);
                }
            }
            assert!(f.check_axioms().is_ok());
        }
    }

    #[test]
    fn automizer_orders() {
        let a4 = corpus::alternating(4);
        let f = fusion_of_group(&a4, 2).unwrap();
        let whole = f.whole_index();
        // N_{A4}(V4) / C_{A4}(V4) = A4 / V4
        assert_eq!(f.automorphisms(whole).len(), 3);

        let s4 = corpus::symmetric(4);
        let (f, emb) = fusion_of_group_with_embedding(&s4, 2).unwrap();
        let v = crate::group::o_p(&s4, 2);
        let idx = f.index_of_elements(&v.iter().map(|x| emb.iter().position(|&e| e as usize == x).unwrap() as u32).collect::<Vec<_>>());
        assert_eq!(f.automorphisms(idx).len(), 6);
        let n = normalizer(&s4, &v).unwrap().order();
        let c = centralizer(&s4, &v).unwrap().order();
        assert_eq!(n / c, 6);
    }
}
