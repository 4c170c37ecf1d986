use std::collections::{HashSet, VecDeque};

use super::{conjugation_map, require_p_group, FusionSystem, Lattice, Morphism, Provenance};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupHom};

pub const DEFAULT_MORPHISM_BUDGET: usize = 2_000_000;

/// Injective maps between subgroups of a p-group `S`.
#[derive(Clone, Debug)]
pub struct FusionGenerators {
    group: FiniteGroup,
    prime: usize,
    maps: Vec<GroupHom>,
}

impl FusionGenerators {
    /// Validates that `S` is a p-group and every map is an injective
    /// homomorphism between subgroups of `S`.
    pub fn new(group: FiniteGroup, prime: usize, maps: Vec<GroupHom>) -> Result<Self> {
        require_p_group(&group, prime)?;
        for (k, f) in maps.iter().enumerate() {
            let checked = GroupHom::new(
                &group,
                f.domain().clone(),
                &group,
                f.codomain().clone(),
                f.images().to_vec(),
            )
            .map_err(|e| Error::NotAHomomorphism(format!("map {k}: {e}")))?;
            if !checked.is_injective() {
                return Err(Error::NotAHomomorphism(format!("map {k} is not injective")));
            }
        }
        Ok(FusionGenerators { group, prime, maps })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn prime(&self) -> usize {
        self.prime
    }

    pub fn maps(&self) -> &[GroupHom] {
        &self.maps
    }
}

pub fn generate_fusion(gens: &FusionGenerators) -> Result<FusionSystem> {
    generate_fusion_with_budget(gens, DEFAULT_MORPHISM_BUDGET)
}

struct Closure {
    lattice: Lattice,
    /// `(source subgroup, morphism)`
    arena: Vec<(usize, Morphism)>,
    seen: Vec<HashSet<Vec<u32>>>,
    out_of: Vec<Vec<usize>>,
    into: Vec<Vec<usize>>,
    queue: VecDeque<usize>,
    budget: usize,
}

impl Closure {
    fn add(&mut self, src: usize, images: Vec<u32>) -> Result<()> {
        if self.seen[src].contains(&images) {
            return Ok(());
        }
        if self.arena.len() >= self.budget {
            return Err(Error::ClosureTooLarge { budget: self.budget });
        }
        let image = self.lattice.index_of(&images);
        self.seen[src].insert(images.clone());
        let id = self.arena.len();
        self.arena.push((src, Morphism { images, image }));
        self.out_of[src].push(id);
        self.into[image].push(id);
        self.queue.push_back(id);
        Ok(())
    }

    /// `n ∘ m`, where `n` is defined exactly on the image of `m`.
    fn compose(&self, m: &Morphism, n: &Morphism) -> Vec<u32> {
        let target = &self.lattice.subgroups[m.image];
        m.images
            .iter()
            .map(|&y| n.images[target.position(y as usize).expect("image of m")])
            .collect()
    }
}

/// Worklist closure of the S-conjugations and the given maps under
/// restriction, inversion onto the image and composition. Restrictions are
/// queued before composites.
pub fn generate_fusion_with_budget(gens: &FusionGenerators, budget: usize) -> Result<FusionSystem> {
    let s = &gens.group;
    let lattice = Lattice::of(s)?;
    let n = lattice.subgroups.len();
    // maximal proper subgroups of each subgroup
    let covers: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            let below: Vec<usize> = (0..i)
                .filter(|&j| lattice.subgroups[j].is_subgroup_of(&lattice.subgroups[i]))
                .filter(|&j| lattice.subgroups[j].order() < lattice.subgroups[i].order())
                .collect();
            below
                .iter()
                .copied()
                .filter(|&j| {
                    !below.iter().any(|&k| {
                        k != j
                            && lattice.subgroups[j].order() < lattice.subgroups[k].order()
                            && lattice.subgroups[j].is_subgroup_of(&lattice.subgroups[k])
                    })
                })
                .collect()
        })
        .collect();
    let mut c = Closure {
        lattice,
        arena: Vec::new(),
        seen: vec![HashSet::new(); n],
        out_of: vec![Vec::new(); n],
        into: vec![Vec::new(); n],
        queue: VecDeque::new(),
        budget,
    };
    for i in 0..n {
        for g in s.elements() {
            let m = conjugation_map(s, &c.lattice.subgroups, &c.lattice.lookup, i, g);
            c.add(i, m.images)?;
        }
    }
    for f in &gens.maps {
        let src = c.lattice.lookup[f.domain().elements()];
        c.add(src, f.images().to_vec())?;
    }
    while let Some(id) = c.queue.pop_front() {
        let (src, m) = c.arena[id].clone();
        let domain = c.lattice.subgroups[src].clone();
        for &sub in &covers[src] {
            let images: Vec<u32> = c.lattice.subgroups[sub]
                .iter()
                .map(|x| m.images[domain.position(x).expect("subgroup")])
                .collect();
            c.add(sub, images)?;
        }
        let target = c.lattice.subgroups[m.image].clone();
        let mut inverse = vec![0u32; target.order()];
        for (k, x) in domain.iter().enumerate() {
            inverse[target.position(m.images[k] as usize).expect("image")] = x as u32;
        }
        c.add(m.image, inverse)?;
        let after: Vec<usize> = c.out_of[m.image].clone();
        for other in after {
            let composite = c.compose(&m, &c.arena[other].1);
            c.add(src, composite)?;
        }
        let before: Vec<usize> = c.into[src].clone();
        for other in before {
            let (osrc, om) = c.arena[other].clone();
            let composite = c.compose(&om, &m);
            c.add(osrc, composite)?;
        }
    }
    let mut maps: Vec<Vec<Morphism>> = vec![Vec::new(); n];
    for (src, m) in c.arena {
        maps[src].push(m);
    }
    Ok(FusionSystem::from_parts(
        s.clone(),
        gens.prime,
        c.lattice,
        maps,
        Provenance::Generated { generators: gens.maps.len() },
    ))
}

impl FusionSystem {
    /// Every morphism of the system, as generators over the same group.
    pub fn all_morphisms_as_generators(&self) -> FusionGenerators {
        let mut maps = Vec::new();
        for (i, list) in self.maps.iter().enumerate() {
            for m in list {
                maps.push(GroupHom::from_parts_unchecked(
                    self.subgroups[i].clone(),
                    self.group.whole(),
                    m.images.clone(),
                ));
            }
        }
        FusionGenerators { group: self.group.clone(), prime: self.prime, maps }
    }

    /// Whether the system equals `F_S(S)`.
    pub fn is_inner(&self) -> bool {
        (0..self.subgroups.len()).all(|i| {
            let mut conj: Vec<Vec<u32>> =
                self.group.elements().map(|g| self.conjugation(i, g).images).collect();
            conj.sort();
            conj.dedup();
            conj.len() == self.maps[i].len()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::fusion::fusion_of_group;
    use crate::group::{automorphisms, subgroup_as_group, o_p};

    #[test]
    fn no_generators_gives_inner_system() {
        let d8 = corpus::dihedral(8);
        let f = FusionSystem::inner(&d8, 2).unwrap();
        assert!(f.is_inner());
        assert!(f.check_axioms().is_ok());
        let c2 = corpus::cyclic(2);
        let id = GroupHom::new(&c2, c2.whole(), &c2, c2.whole(), vec![0, 1]).unwrap();
        let g = generate_fusion(&FusionGenerators::new(c2.clone(), 2, vec![id]).unwrap()).unwrap();
        assert_eq!(g, FusionSystem::inner(&c2, 2).unwrap());
    }

    #[test]
    fn order_three_automorphism_of_v4_gives_a4_fusion() {
        let a4 = corpus::alternating(4);
        let from_group = fusion_of_group(&a4, 2).unwrap();
        let s = from_group.group().clone();
        let sigma = automorphisms(&s, &s.whole())
            .unwrap()
            .into_iter()
            .find(|f| {
                // order 3: f∘f∘f = id but f ≠ id
                let ff = f.then(f).unwrap();
                let fff = ff.then(f).unwrap();
                fff.images() == s.whole().elements() && f.images() != s.whole().elements()
            })
            .unwrap();
        let gens = FusionGenerators::new(s.clone(), 2, vec![sigma]).unwrap();
        let generated = generate_fusion(&gens).unwrap();
        assert_eq!(generated, from_group);
    }

    #[test]
    fn idempotent_and_budgeted() {
        let s4 = corpus::symmetric(4);
        let f = fusion_of_group(&s4, 2).unwrap();
        let again = generate_fusion(&f.all_morphisms_as_generators()).unwrap();
        assert_eq!(again, f);
        assert_eq!(
            generate_fusion_with_budget(&f.all_morphisms_as_generators(), 10).unwrap_err(),
            Error::ClosureTooLarge { budget: 10 }
        );
    }

    #[test]
    fn generator_validation() {
        let s4 = corpus::symmetric(4);
        let (v4, _) = subgroup_as_group(&s4, &o_p(&s4, 2));
        let bad = GroupHom::from_parts_unchecked(v4.whole(), v4.whole(), vec![0, 1, 1, 2]);
        assert!(FusionGenerators::new(v4.clone(), 2, vec![bad]).is_err());
        assert!(FusionGenerators::new(s4, 2, vec![]).is_err());
    }
}
