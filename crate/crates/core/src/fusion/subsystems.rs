use super::{generate_fusion, FusionGenerators, FusionSystem, Provenance};
use crate::error::{Error, Result};
use crate::group::{centralizer, direct_product, normalizer, subgroup_as_group, GroupHom, Subgroup};

/// A fusion system on a subgroup `T ≤ S`, re-indexed as a standalone group,
/// with `embedding[k]` the element of `S` that element `k` of `T` stands for.
#[derive(Clone, Debug)]
pub struct Subsystem {
    pub system: FusionSystem,
    pub embedding: Vec<u32>,
}

impl Subsystem {
    /// A subgroup of the subsystem's group, carried back into `S`.
    pub fn to_ambient(&self, ambient: &FusionSystem, h: &Subgroup) -> Subgroup {
        let mut elems: Vec<u32> = h.iter().map(|x| self.embedding[x]).collect();
        elems.sort_unstable();
        ambient.subgroup(ambient.index_of_elements(&elems)).clone()
    }

    /// Whether this subsystem is the whole system on `S` elementwise.
    pub fn equals(&self, other: &FusionSystem) -> bool {
        self.embedding.len() == other.group().order()
            && self.embedding.iter().enumerate().all(|(k, &x)| k == x as usize)
            && self.system.maps == other.maps
    }
}

impl FusionSystem {
    /// Maps `φ̄` on subgroups `R` with `Q ≤ R ≤ T` that satisfy `keep`, carried
    /// over to `T` and closed.
    fn subsystem_from_extensions(
        &self,
        q: usize,
        t: &Subgroup,
        keep: impl Fn(usize, &super::Morphism) -> bool,
        restrict_to: impl Fn(&Subgroup) -> Subgroup,
        provenance: Provenance,
    ) -> Result<Subsystem> {
        let (tg, emb) = subgroup_as_group(&self.group, t);
        let mut back = vec![u32::MAX; self.group.order()];
        for (k, &x) in emb.iter().enumerate() {
            back[x as usize] = k as u32;
        }
        let q_sub = &self.subgroups[q];
        let mut maps = Vec::new();
        for (r, r_sub) in self.subgroups.iter().enumerate() {
            if !q_sub.is_subgroup_of(r_sub) || !r_sub.is_subgroup_of(&self.group.whole()) {
                continue;
            }
            let dom = restrict_to(r_sub);
            if !dom.is_subgroup_of(t) {
                continue;
            }
            for m in &self.maps[r] {
                if !keep(r, m) {
                    continue;
                }
                let images: Vec<u32> = dom.iter().map(|x| self.apply(r, m, x).expect("dom ≤ R") as u32).collect();
                if images.iter().any(|&y| !t.contains(y as usize)) {
                    continue;
                }
                let mut dom_elems: Vec<u32> = dom.iter().map(|x| back[x]).collect();
                dom_elems.sort_unstable();
                let local = tg.subgroup(&dom_elems.iter().map(|&x| x as usize).collect::<Vec<_>>())?;
                let local_images: Vec<u32> = local.iter().map(|x| {
                    let k = dom.position(emb[x] as usize).expect("same subgroup");
                    back[images[k] as usize]
                }).collect();
                maps.push(GroupHom::from_parts_unchecked(local, tg.whole(), local_images));
            }
        }
        let mut system = generate_fusion(&FusionGenerators::new(tg, self.prime, maps)?)?;
        system.provenance = provenance;
        Ok(Subsystem { system, embedding: emb })
    }

    /// `N_F(Q)` on `N_S(Q)`: morphisms that extend to `PQ` normalizing `Q`.
    pub fn normalizer_subsystem(&self, q: usize) -> Result<Subsystem> {
        if !self.is_fully_normalized(q) {
            return Err(Error::NotFullyNormalized);
        }
        let q_sub = self.subgroups[q].clone();
        let n = normalizer(&self.group, &q_sub)?;
        self.subsystem_from_extensions(
            q,
            &n,
            |r, m| {
                let image_q: Vec<u32> = q_sub.iter().map(|x| self.apply(r, m, x).expect("Q ≤ R") as u32).collect();
                let mut sorted = image_q;
                sorted.sort_unstable();
                sorted == q_sub.elements()
            },
            |r_sub| r_sub.clone(),
            Provenance::Normalizer,
        )
    }

    /// `C_F(Q)` on `C_S(Q)`: morphisms that extend to `PQ` fixing `Q`
    /// pointwise.
    pub fn centralizer_subsystem(&self, q: usize) -> Result<Subsystem> {
        if !self.is_fully_centralized(q) {
            return Err(Error::NotFullyCentralized);
        }
        let q_sub = self.subgroups[q].clone();
        let c = centralizer(&self.group, &q_sub)?;
        let s = self.group.clone();
        self.subsystem_from_extensions(
            q,
            &c,
            |r, m| q_sub.iter().all(|x| self.apply(r, m, x).expect("Q ≤ R") == x),
            |r_sub| r_sub.intersection(&s, &c),
            Provenance::Centralizer,
        )
    }
}

/// Elements of `P₁ × P₂` inside `S₁ × S₂` (element `(a, b)` at `a·|S₂| + b`).
pub fn product_elements(p1: &Subgroup, p2: &Subgroup, s2_order: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(p1.order() * p2.order());
    for a in p1.iter() {
        for b in p2.iter() {
            out.push((a * s2_order + b) as u32);
        }
    }
    out
}

/// `F₁ × F₂` on `S₁ × S₂`, generated by the maps `φ₁ × id` and `id × φ₂`
/// on product subgroups (their composites give every `φ₁ × φ₂`).
pub fn product_fusion(f1: &FusionSystem, f2: &FusionSystem) -> Result<FusionSystem> {
    if f1.prime != f2.prime {
        return Err(Error::Input("factors over different primes".into()));
    }
    let (s1, s2) = (&f1.group, &f2.group);
    let s = direct_product(s1, s2);
    let k = s2.order();
    let mut maps = Vec::new();
    let mut push = |p1: &Subgroup, p2: &Subgroup, f: &dyn Fn(usize, usize) -> (usize, usize)| {
        let dom = Subgroup::from_elements_unchecked(&s, product_elements(p1, p2, k));
        let images: Vec<u32> = dom
            .iter()
            .map(|x| {
                let (a, b) = f(x / k, x % k);
                (a * k + b) as u32
            })
            .collect();
        maps.push(GroupHom::from_parts_unchecked(dom, s.whole(), images));
    };
    for (i, p1) in f1.subgroups.iter().enumerate() {
        for m in &f1.maps[i] {
            for p2 in &f2.subgroups {
                push(p1, p2, &|a, b| (m.images[p1.position(a).expect("in P1")] as usize, b));
            }
        }
    }
    for (i, p2) in f2.subgroups.iter().enumerate() {
        for m in &f2.maps[i] {
            for p1 in &f1.subgroups {
                push(p1, p2, &|a, b| (a, m.images[p2.position(b).expect("in P2")] as usize));
            }
        }
    }
    let mut system = generate_fusion(&FusionGenerators::new(s, f1.prime, maps)?)?;
    system.provenance = Provenance::Product;
    Ok(system)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::fusion::fusion_of_group;
    use crate::group::center;

    #[test]
    fn normalizer_of_s_in_inner_system() {
        let d8 = corpus::dihedral(8);
        let f = FusionSystem::inner(&d8, 2).unwrap();
        let n = f.normalizer_subsystem(f.whole_index()).unwrap();
        assert!(n.equals(&f));
    }

    #[test]
    fn a4_subsystems() {
        let f = fusion_of_group(&corpus::alternating(4), 2).unwrap();
        let n = f.normalizer_subsystem(f.whole_index()).unwrap();
        assert!(n.equals(&f));
        // C_F(V4): only maps fixing V4 pointwise, so the inner system
        let z = f.index_of(&center(f.group())).unwrap();
        let c = f.centralizer_subsystem(z).unwrap();
        assert!(c.system.is_inner());
        assert!(!c.equals(&f));
    }

    #[test]
    fn non_fully_normalized_is_rejected() {
        let f = fusion_of_group(&corpus::symmetric(4), 2).unwrap();
        let bad = (0..f.subgroups().len()).find(|&i| !f.is_fully_normalized(i)).unwrap();
        assert_eq!(f.normalizer_subsystem(bad).unwrap_err(), Error::NotFullyNormalized);
    }

    #[test]
    fn products() {
        let c2 = corpus::cyclic(2);
        let t = FusionSystem::inner(&c2, 2).unwrap();
        let inner_prod = product_fusion(&t, &t).unwrap();
        assert!(inner_prod.is_inner());

        let a4 = fusion_of_group(&corpus::alternating(4), 2).unwrap();
        let c1 = corpus::cyclic(1);
        let unit = FusionSystem::inner(&c1, 2).unwrap();
        let p = product_fusion(&a4, &unit).unwrap();
        assert_eq!(p.morphism_count(), a4.morphism_count());
        assert_eq!(p.count_matrix(), a4.count_matrix());

        // generating from all φ₁ × φ₂ gives the same system
        let q = product_fusion(&a4, &t).unwrap();
        let s = q.group().clone();
        let mut full = Vec::new();
        for (i, p1) in a4.subgroups().iter().enumerate() {
            for m1 in a4.morphisms_from(i) {
                for (j, p2) in t.subgroups().iter().enumerate() {
                    for m2 in t.morphisms_from(j) {
                        let dom = Subgroup::from_elements_unchecked(&s, product_elements(p1, p2, 2));
                        let images = dom
                            .iter()
                            .map(|x| {
                                let a = m1.images()[p1.position(x / 2).unwrap()] as usize;
                                let b = m2.images()[p2.position(x % 2).unwrap()] as usize;
                                (a * 2 + b) as u32
                            })
                            .collect();
                        full.push(GroupHom::from_parts_unchecked(dom, s.whole(), images));
                    }
                }
            }
        }
        let direct = generate_fusion(&FusionGenerators::new(s, 2, full).unwrap()).unwrap();
        assert_eq!(direct, q);
        assert!(q.is_saturated());
    }
}
