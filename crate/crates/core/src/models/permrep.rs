use num_integer::Integer;
use serde::Serialize;

use super::StarOfGroups;
use crate::error::{Error, Result};
use crate::group::{subgroups, FiniteGroup, Subgroup};
use crate::linalg::FpMatrix;

pub const DEFAULT_PERMUTATION_BUDGET: usize = 10_000;

/// An action of every vertex group on `{0, …, t−1}` that agrees on edge
/// groups, hence an action of the amalgam.
#[derive(Clone, Debug, Serialize)]
pub struct PermutationRep {
    pub degree: usize,
    /// `images[v][x]` is the permutation of element `x` of vertex `v`.
    pub images: Vec<Vec<Vec<u32>>>,
    /// Bijection applied to the standard coset labeling of each vertex.
    pub relabelings: Vec<Vec<u32>>,
    pub complements: Vec<Vec<u32>>,
}

/// `t/[K:H]` copies of the action of `K` on left cosets of `H`, with points
/// `copy·[K:H] + coset`, cosets numbered by least element.
fn coset_action(k: &FiniteGroup, h: &Subgroup, t: usize) -> Vec<Vec<u32>> {
    let mut coset_of = vec![u32::MAX; k.order()];
    let mut reps = Vec::new();
    for x in k.elements() {
        if coset_of[x] != u32::MAX {
            continue;
        }
        for y in h.iter() {
            coset_of[k.mul(x, y)] = reps.len() as u32;
        }
        reps.push(x);
    }
    let index = reps.len();
    k.elements()
        .map(|g| {
            (0..t)
                .map(|pt| {
                    let (copy, c) = (pt / index, pt % index);
                    (copy * index + coset_of[k.mul(g, reps[c])] as usize) as u32
                })
                .collect()
        })
        .collect()
}

/// Orbits of the group generated by `perms`, each listed as the points
/// `g·anchor` in the order of `elements`, ordered by least point.
fn anchored_orbits(perms: &[&Vec<u32>], t: usize) -> Vec<Vec<u32>> {
    let mut seen = vec![false; t];
    let mut out = Vec::new();
    for anchor in 0..t {
        if seen[anchor] {
            continue;
        }
        let orbit: Vec<u32> = perms.iter().map(|g| g[anchor]).collect();
        for &x in &orbit {
            seen[x as usize] = true;
        }
        out.push(orbit);
    }
    out
}

/// The least maximal p′-subgroup of each vertex group.
pub fn default_complements(model: &StarOfGroups) -> Result<Vec<Subgroup>> {
    let p = model.prime();
    model
        .vertices()
        .iter()
        .map(|k| {
            let subs = subgroups(k, k.order().max(1))?;
            let pprime: Vec<&Subgroup> = subs.iter().filter(|h| h.order() % p != 0).collect();
            let maximal = pprime
                .iter()
                .filter(|h| !pprime.iter().any(|o| o.order() > h.order() && h.is_subgroup_of(o)))
                .min_by(|a, b| a.elements().cmp(b.elements()))
                .expect("the trivial subgroup is p′");
            Ok((*maximal).clone())
        })
        .collect()
}

pub fn free_kernel_perm_rep(model: &StarOfGroups, complements: &[Subgroup]) -> Result<PermutationRep> {
    free_kernel_perm_rep_with_budget(model, complements, DEFAULT_PERMUTATION_BUDGET)
}

/// Each `K_i` acts on `t = lcm [K_i : H_i]` points by copies of its coset
/// action on `K_i/H_i`. The edge groups act freely on both sides, so each
/// leaf is relabeled to match the center: the `k`-th edge-orbit of the leaf
/// (by least point) is sent to the `k`-th of the center, anchor to anchor.
pub fn free_kernel_perm_rep_with_budget(
    model: &StarOfGroups,
    complements: &[Subgroup],
    budget: usize,
) -> Result<PermutationRep> {
    let p = model.prime();
    let n = model.vertices().len();
    if complements.len() != n {
        return Err(Error::Input(format!("{} subgroups for {n} vertices", complements.len())));
    }
    let mut t = 1usize;
    for (v, h) in complements.iter().enumerate() {
        let k = &model.vertices()[v];
        k.subgroup(&h.iter().collect::<Vec<_>>())
            .map_err(|_| Error::Precondition(format!("H_{v} is not a subgroup of vertex {v}")))?;
        if h.order() % p == 0 {
            return Err(Error::Precondition(format!("H_{v} has order {} divisible by {p}", h.order())));
        }
        t = t.lcm(&(k.order() / h.order()));
        if t > budget {
            return Err(Error::PermutationBudget { degree: t, budget });
        }
    }
    let mut images: Vec<Vec<Vec<u32>>> =
        (0..n).map(|v| coset_action(&model.vertices()[v], &complements[v], t)).collect();
    let mut relabelings = vec![(0..t as u32).collect::<Vec<_>>()];
    for v in 1..n {
        let e = model.edge_to(v).expect("validated star");
        let center: Vec<&Vec<u32>> = e.into_base.iter().map(|&x| &images[0][x as usize]).collect();
        let leaf: Vec<&Vec<u32>> = e.into_vertex.iter().map(|&x| &images[v][x as usize]).collect();
        let (oc, ol) = (anchored_orbits(&center, t), anchored_orbits(&leaf, t));
        let mut beta = vec![u32::MAX; t];
        for (a, b) in ol.iter().zip(&oc) {
            for (&x, &y) in a.iter().zip(b) {
                beta[x as usize] = y;
            }
        }
        if ol.len() != oc.len() || beta.contains(&u32::MAX) {
            return Err(Error::Precondition(format!("edge group of vertex {v} does not act freely")));
        }
        for perm in &mut images[v] {
            let mut relabeled = vec![0u32; t];
            for x in 0..t {
                relabeled[beta[x] as usize] = beta[perm[x] as usize];
            }
            *perm = relabeled;
        }
        relabelings.push(beta);
    }
    let rep = PermutationRep {
        degree: t,
        images,
        relabelings,
        complements: complements.iter().map(|h| h.elements().to_vec()).collect(),
    };
    if !rep.edges_compatible(model) {
        return Err(Error::Precondition("edge actions disagree after relabeling".into()));
    }
    Ok(rep)
}

impl PermutationRep {
    pub fn edges_compatible(&self, model: &StarOfGroups) -> bool {
        model.edges().iter().all(|e| {
            e.into_base
                .iter()
                .zip(&e.into_vertex)
                .all(|(&b, &l)| self.images[0][b as usize] == self.images[e.vertex][l as usize])
        })
    }

    /// Each vertex action is a homomorphism.
    pub fn is_action(&self, model: &StarOfGroups) -> bool {
        model.vertices().iter().enumerate().all(|(v, k)| {
            k.elements().all(|x| {
                k.elements().all(|y| {
                    let xy = &self.images[v][k.mul(x, y)];
                    (0..self.degree).all(|pt| xy[pt] == self.images[v][x][self.images[v][y][pt] as usize])
                })
            })
        })
    }

    pub fn sylow_acts_freely(&self, model: &StarOfGroups) -> bool {
        model.sylow_into_base().iter().skip(1).all(|&s| {
            let perm = &self.images[0][s as usize];
            perm.iter().enumerate().all(|(x, &y)| x != y as usize)
        })
    }

    /// Nontrivial vertex elements, conjugated by every word of at most two
    /// generator letters, act nontrivially. Returns the number of conjugates
    /// checked, or the first `(vertex, element)` acting trivially.
    pub fn torsion_evidence(&self, model: &StarOfGroups) -> std::result::Result<usize, (usize, usize)> {
        let t = self.degree;
        let mut letters: Vec<&Vec<u32>> = Vec::new();
        for (v, k) in model.vertices().iter().enumerate() {
            for g in k.generators() {
                letters.push(&self.images[v][g]);
            }
        }
        let identity: Vec<u32> = (0..t as u32).collect();
        let compose = |a: &[u32], b: &[u32]| -> Vec<u32> { (0..t).map(|x| a[b[x] as usize]).collect() };
        let mut words = vec![identity.clone()];
        for a in &letters {
            words.push(a.to_vec());
            for b in &letters {
                words.push(compose(a, b));
            }
        }
        let mut checked = 0;
        for (v, k) in model.vertices().iter().enumerate() {
            for x in k.elements().skip(1) {
                let px = &self.images[v][x];
                for w in &words {
                    // w x w⁻¹ fixes everything iff x does
                    let mut winv = vec![0u32; t];
                    for (i, &y) in w.iter().enumerate() {
                        winv[y as usize] = i as u32;
                    }
                    let conj = compose(w, &compose(px, &winv));
                    if conj == identity {
                        return Err((v, x));
                    }
                    checked += 1;
                }
            }
        }
        Ok(checked)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexRestriction {
    pub vertex: usize,
    pub index: usize,
    pub copies: usize,
    /// Every point stabilizer is conjugate to `H_i`, so the restriction is
    /// `copies` copies of the permutation module on `K_i/H_i`.
    pub matches_coset_module: bool,
    /// `|H_i|` is prime to p.
    pub projective: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearizedModule {
    pub prime: usize,
    pub dimension: usize,
    pub restrictions: Vec<VertexRestriction>,
    pub sylow_free: bool,
    pub sylow_rank: usize,
}

impl LinearizedModule {
    /// The permutation matrix of element `x` of vertex `v`, acting on
    /// column vectors.
    pub fn matrix(&self, rep: &PermutationRep, v: usize, x: usize) -> FpMatrix {
        let mut m = FpMatrix::zero(self.prime as u32, self.dimension, self.dimension);
        for (i, &y) in rep.images[v][x].iter().enumerate() {
            m.set(y as usize, i, 1);
        }
        m
    }
}

/// The permutation module over GF(p) and its restrictions to the vertex
/// groups and to `S`.
pub fn linearize(rep: &PermutationRep, model: &StarOfGroups) -> Result<LinearizedModule> {
    if !rep.is_action(model) || !rep.edges_compatible(model) {
        return Err(Error::Precondition("not an action of the amalgam".into()));
    }
    let p = model.prime();
    let t = rep.degree;
    let mut restrictions = Vec::new();
    for (v, k) in model.vertices().iter().enumerate() {
        let h = k.subgroup(&rep.complements[v].iter().map(|&x| x as usize).collect::<Vec<_>>())?;
        let index = k.order() / h.order();
        let perms: Vec<&Vec<u32>> = rep.images[v].iter().collect();
        let orbits = anchored_orbits(&perms, t);
        let mut matches = orbits.len() * index == t;
        for orbit in &orbits {
            let anchor = orbit[0] as usize;
            let mut stab: Vec<u32> = k.elements().filter(|&g| rep.images[v][g][anchor] as usize == anchor).map(|g| g as u32).collect();
            stab.sort_unstable();
            let conjugate = k.elements().any(|g| h.conjugate(k, g).elements() == stab.as_slice());
            matches &= conjugate;
        }
        restrictions.push(VertexRestriction {
            vertex: v,
            index,
            copies: t / index,
            matches_coset_module: matches,
            projective: h.order() % p != 0,
        });
    }
    let sylow_free = rep.sylow_acts_freely(model);
    Ok(LinearizedModule {
        prime: p,
        dimension: t,
        restrictions,
        sylow_free,
        sylow_rank: if sylow_free { t / model.sylow().order() } else { 0 },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::models::{robinson_model, Flavor};

    #[test]
    fn degenerate_s4_model() {
        let m = robinson_model(&corpus::symmetric(4), 2, Flavor::CentricRadical).unwrap();
        let h = default_complements(&m).unwrap();
        assert_eq!(h.iter().map(Subgroup::order).collect::<Vec<_>>(), vec![1, 3]);
        let rep = free_kernel_perm_rep(&m, &h).unwrap();
        assert_eq!(rep.degree, 8);
        assert!(rep.is_action(&m));
        assert!(rep.sylow_acts_freely(&m));
        assert!(rep.torsion_evidence(&m).is_ok());
        let lin = linearize(&rep, &m).unwrap();
        assert!(lin.sylow_free);
        assert_eq!(lin.sylow_rank, 1);
        assert!(lin.restrictions.iter().all(|r| r.matches_coset_module && r.projective));
        // matrices multiply like the group
        let s4 = &m.vertices()[1];
        let (x, y) = (3, 17);
        assert_eq!(lin.matrix(&rep, 1, x).mul(&lin.matrix(&rep, 1, y)), lin.matrix(&rep, 1, s4.mul(x, y)));
    }

    #[test]
    fn a4_on_four_points() {
        let m = robinson_model(&corpus::alternating(4), 2, Flavor::CentricRadical).unwrap();
        let h = default_complements(&m).unwrap();
        let rep = free_kernel_perm_rep(&m, &h).unwrap();
        assert_eq!(rep.degree, 4);
        let lin = linearize(&rep, &m).unwrap();
        assert_eq!(lin.sylow_rank, 1);
    }

    #[test]
    fn regular_representation_of_s() {
        let d8 = corpus::dihedral(8);
        let id: Vec<u32> = (0..8).collect();
        let m = StarOfGroups::new(2, vec![d8.clone()], d8.clone(), id, vec![]).unwrap();
        let rep = free_kernel_perm_rep(&m, &[d8.trivial_subgroup()]).unwrap();
        assert_eq!(rep.degree, 8);
        assert!(rep.sylow_acts_freely(&m));
    }

    #[test]
    fn preconditions() {
        let m = robinson_model(&corpus::symmetric(4), 2, Flavor::CentricRadical).unwrap();
        let bad = vec![m.vertices()[0].whole(), m.vertices()[1].trivial_subgroup()];
        assert!(matches!(free_kernel_perm_rep(&m, &bad), Err(Error::Precondition(_))));
        let h = default_complements(&m).unwrap();
        assert!(matches!(
            free_kernel_perm_rep_with_budget(&m, &h, 4),
            Err(Error::PermutationBudget { degree: 8, budget: 4 })
        ));
    }
}
