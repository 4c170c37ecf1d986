use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use super::{FusionSystem, Morphism};
use crate::error::{Error, Result};
use crate::group::{
    center, centralizer, normalizer, o_p, quotient, subgroups, FiniteGroup, Subgroup, DEFAULT_LATTICE_BOUND,
};

/// First violated saturation axiom, with a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum SaturationViolation {
    /// A fully normalized subgroup that is not fully centralized.
    NotFullyCentralized { subgroup: Vec<u32> },
    /// `Aut_S(P)` is not a Sylow p-subgroup of `Aut_F(P)`.
    SylowAxiom { subgroup: Vec<u32>, aut_f: usize, aut_s: usize },
    /// `φ: P → S` with fully centralized image has no extension to `N_φ`.
    Extension { subgroup: Vec<u32>, images: Vec<u32>, n_phi: Vec<u32> },
}

impl fmt::Display for SaturationViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SaturationViolation::NotFullyCentralized { subgroup } => {
                write!(f, "P = {subgroup:?} is fully normalized but not fully centralized")
            }
            SaturationViolation::SylowAxiom { subgroup, aut_f, aut_s } => write!(
                f,
                "Sylow axiom fails at P = {subgroup:?}: |Aut_F(P)| = {aut_f}, |Aut_S(P)| = {aut_s}"
            ),
            SaturationViolation::Extension { subgroup, images, n_phi } => write!(
                f,
                "extension axiom fails at P = {subgroup:?}, φ = {images:?}: no extension to N_φ = {n_phi:?}"
            ),
        }
    }
}

/// `Aut_F(P)` as a finite group, with `Inn(P)` and `Out_F(P)`.
#[derive(Clone, Debug)]
pub struct OutGroup {
    /// `Aut_F(P)`; element `k` is the `k`-th automorphism in ascending
    /// image order, and the product is composition `x ∘ y`.
    pub aut: FiniteGroup,
    pub automorphisms: Vec<Vec<u32>>,
    pub inner: Subgroup,
    pub out: FiniteGroup,
}

impl FusionSystem {
    fn normalizer_order(&self, i: usize) -> usize {
        normalizer(&self.group, &self.subgroups[i]).expect("subgroup of S").order()
    }

    fn centralizer_order(&self, i: usize) -> usize {
        centralizer(&self.group, &self.subgroups[i]).expect("subgroup of S").order()
    }

    /// `|N_S(P)| ≥ |N_S(P′)|` over the F-class of `P`.
    pub fn is_fully_normalized(&self, i: usize) -> bool {
        let own = self.normalizer_order(i);
        self.class_of(i).into_iter().all(|j| self.normalizer_order(j) <= own)
    }

    /// `|C_S(P)| ≥ |C_S(P′)|` over the F-class of `P`.
    pub fn is_fully_centralized(&self, i: usize) -> bool {
        let own = self.centralizer_order(i);
        self.class_of(i).into_iter().all(|j| self.centralizer_order(j) <= own)
    }

    /// A fully normalized member of the F-class of subgroup `i` (the least
    /// index among those of maximal normalizer order).
    pub fn fully_normalized_conjugate(&self, i: usize) -> usize {
        let class = self.class_of(i);
        let best = class.iter().map(|&j| self.normalizer_order(j)).max().expect("nonempty class");
        class.into_iter().find(|&j| self.normalizer_order(j) == best).expect("maximum attained")
    }

    /// Conjugation maps by elements of `N_S(P_i)`, i.e. `Aut_S(P_i)`.
    fn aut_s(&self, i: usize) -> HashSet<Vec<u32>> {
        normalizer(&self.group, &self.subgroups[i])
            .expect("subgroup of S")
            .iter()
            .map(|g| self.conjugation(i, g).images)
            .collect()
    }

    /// Checks the Sylow and extension axioms exhaustively.
    pub fn saturation_check(&self) -> std::result::Result<(), SaturationViolation> {
        let n = self.subgroups.len();
        let p = self.prime;
        let fully_centralized: Vec<bool> = (0..n).map(|i| self.is_fully_centralized(i)).collect();
        for i in 0..n {
            if !self.is_fully_normalized(i) {
                continue;
            }
            let elems = self.subgroups[i].elements().to_vec();
            if !fully_centralized[i] {
                return Err(SaturationViolation::NotFullyCentralized { subgroup: elems });
            }
            let aut_f = self.automorphisms(i).len();
            let aut_s = self.aut_s(i).len();
            if (aut_f / aut_s) % p == 0 {
                return Err(SaturationViolation::SylowAxiom { subgroup: elems, aut_f, aut_s });
            }
        }
        let aut_s: Vec<HashSet<Vec<u32>>> = (0..n).map(|i| self.aut_s(i)).collect();
        for i in 0..n {
            let p_sub = &self.subgroups[i];
            let n_s = normalizer(&self.group, p_sub).expect("subgroup of S");
            for m in &self.maps[i] {
                let j = m.image;
                if !fully_centralized[j] {
                    continue;
                }
                let n_phi = self.n_phi(i, m, &n_s, &aut_s[j]);
                let k = self.index_of(&n_phi).expect("N_φ is a subgroup");
                let extends = self.maps[k].iter().any(|ext| {
                    p_sub.iter().enumerate().all(|(pos, x)| {
                        self.apply(k, ext, x).expect("P ≤ N_φ") == m.images[pos] as usize
                    })
                });
                if !extends {
                    return Err(SaturationViolation::Extension {
                        subgroup: p_sub.elements().to_vec(),
                        images: m.images.clone(),
                        n_phi: n_phi.elements().to_vec(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn is_saturated(&self) -> bool {
        self.saturation_check().is_ok()
    }

    /// `N_φ = {g ∈ N_S(P) : φ c_g φ⁻¹ ∈ Aut_S(φ(P))}`
    fn n_phi(&self, i: usize, m: &Morphism, n_s: &Subgroup, aut_s_target: &HashSet<Vec<u32>>) -> Subgroup {
        let s = &self.group;
        let p_sub = &self.subgroups[i];
        let target = &self.subgroups[m.image];
        // φ⁻¹ on the image, indexed by target position
        let mut inv = vec![0usize; target.order()];
        for (k, x) in p_sub.iter().enumerate() {
            inv[target.position(m.images[k] as usize).expect("image")] = x;
        }
        let members: Vec<usize> = n_s
            .iter()
            .filter(|&g| {
                let conj: Vec<u32> = target
                    .iter()
                    .enumerate()
                    .map(|(k, _)| {
                        let x = inv[k];
                        m.images[p_sub.position(s.conj(g, x)).expect("g normalizes P")]
                    })
                    .collect();
                aut_s_target.contains(&conj)
            })
            .collect();
        s.closure(&members)
    }

    /// `C_S(P′) ≤ P′` for every F-conjugate `P′`.
    pub fn is_centric(&self, i: usize) -> bool {
        self.class_of(i).into_iter().all(|j| {
            centralizer(&self.group, &self.subgroups[j])
                .expect("subgroup of S")
                .is_subgroup_of(&self.subgroups[j])
        })
    }

    pub fn centric_subgroups(&self) -> Vec<Subgroup> {
        (0..self.subgroups.len())
            .filter(|&i| self.is_centric(i))
            .map(|i| self.subgroups[i].clone())
            .collect()
    }

    /// `Aut_F(P_i)`, `Inn(P_i)` and `Out_F(P_i)` as finite groups.
    pub fn out_group(&self, i: usize) -> OutGroup {
        let p_sub = &self.subgroups[i];
        let automorphisms: Vec<Vec<u32>> = self.automorphisms(i).into_iter().map(|m| m.images.clone()).collect();
        let index = |images: &[u32]| {
            automorphisms
                .binary_search_by(|a| a.as_slice().cmp(images))
                .expect("closed under composition")
        };
        let n = automorphisms.len();
        let mut table = vec![0u32; n * n];
        for (a, x) in automorphisms.iter().enumerate() {
            for (b, y) in automorphisms.iter().enumerate() {
                let comp: Vec<u32> =
                    y.iter().map(|&v| x[p_sub.position(v as usize).expect("automorphism")]).collect();
                table[a * n + b] = index(&comp) as u32;
            }
        }
        let aut = FiniteGroup::from_table_trusted(n, table);
        let mut inner: Vec<u32> = p_sub.iter().map(|g| index(&self.conjugation(i, g).images) as u32).collect();
        inner.sort_unstable();
        inner.dedup();
        let inner = Subgroup::from_elements_unchecked(&aut, inner);
        let out = quotient(&aut, &aut.whole(), &inner).expect("Inn is normal in Aut").group;
        OutGroup { aut, automorphisms, inner, out }
    }

    /// `O_p(Out_F(P)) = 1`
    pub fn is_radical(&self, i: usize) -> bool {
        let out = self.out_group(i).out;
        o_p(&out, self.prime).is_trivial()
    }

    pub fn radical_subgroups(&self) -> Vec<Subgroup> {
        (0..self.subgroups.len())
            .filter(|&i| self.is_radical(i))
            .map(|i| self.subgroups[i].clone())
            .collect()
    }

    /// Centric, proper, and `Out_F(P)` has a strongly p-embedded subgroup.
    pub fn is_essential(&self, i: usize) -> Result<bool> {
        if i == self.whole_index() || !self.is_centric(i) {
            return Ok(false);
        }
        has_strongly_p_embedded(&self.out_group(i).out, self.prime)
    }

    pub fn essential_subgroups(&self) -> Result<Vec<Subgroup>> {
        let mut out = Vec::new();
        for i in 0..self.subgroups.len() {
            if self.is_essential(i)? {
                out.push(self.subgroups[i].clone());
            }
        }
        Ok(out)
    }

    /// No morphism moves a subgroup of `T` outside `T`.
    pub fn is_strongly_closed(&self, t: &Subgroup) -> bool {
        self.subgroups.iter().enumerate().all(|(i, p)| {
            !p.is_subgroup_of(t) || self.maps[i].iter().all(|m| m.images.iter().all(|&y| t.contains(y as usize)))
        })
    }

    /// `Z(F)`: elements of `Z(S)` fixed by every morphism defined on them.
    pub fn center(&self) -> Subgroup {
        let z = center(&self.group);
        let fixed: Vec<u32> = z
            .iter()
            .filter(|&x| {
                self.subgroups.iter().enumerate().all(|(i, p)| match p.position(x) {
                    Some(k) => self.maps[i].iter().all(|m| m.images[k] as usize == x),
                    None => true,
                })
            })
            .map(|x| x as u32)
            .collect();
        Subgroup::from_elements_unchecked(&self.group, fixed)
    }
}

/// Brute force: a proper subgroup `H` with `p | |H|` and `p ∤ |H ∩ gHg⁻¹|`
/// for every `g ∉ H`.
pub fn has_strongly_p_embedded(g: &FiniteGroup, p: usize) -> Result<bool> {
    if g.order() > DEFAULT_LATTICE_BOUND {
        return Err(Error::LatticeTooLarge { order: g.order(), bound: DEFAULT_LATTICE_BOUND });
    }
    for h in subgroups(g, DEFAULT_LATTICE_BOUND)? {
        if h.order() == g.order() || h.order() % p != 0 {
            continue;
        }
        let embedded = g
            .elements()
            .filter(|&x| !h.contains(x))
            .all(|x| h.intersection(g, &h.conjugate(g, x)).order() % p != 0);
        if embedded {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::fusion::{fusion_of_group, generate_fusion, FusionGenerators};
    use crate::group::automorphisms;

    #[test]
    fn fully_normalized_examples() {
        let f = fusion_of_group(&corpus::alternating(4), 2).unwrap();
        for i in 0..f.subgroups().len() {
            assert!(f.is_fully_normalized(i));
            assert!(f.is_fully_centralized(i));
        }
        let f = fusion_of_group(&corpus::symmetric(4), 2).unwrap();
        let whole = f.whole_index();
        assert!(f.is_fully_normalized(whole));
        // the two classes of involutions: the central one is fully
        // normalized, the non-central ones are not all fully normalized
        let involutions: Vec<usize> = (0..f.subgroups().len()).filter(|&i| f.subgroup(i).order() == 2).collect();
        assert_eq!(involutions.len(), 5);
        let fully: Vec<usize> = involutions.iter().copied().filter(|&i| f.is_fully_normalized(i)).collect();
        assert!(fully.len() < involutions.len());
    }

    #[test]
    fn saturation_examples() {
        assert!(fusion_of_group(&corpus::alternating(4), 2).unwrap().is_saturated());
        let d8 = corpus::dihedral(8);
        assert!(FusionSystem::inner(&d8, 2).unwrap().is_saturated());
        let all = automorphisms(&d8, &d8.whole()).unwrap();
        let f = generate_fusion(&FusionGenerators::new(d8.clone(), 2, all).unwrap()).unwrap();
        match f.saturation_check() {
            Err(SaturationViolation::SylowAxiom { subgroup, aut_f, aut_s }) => {
                assert_eq!(subgroup.len(), 8);
                assert_eq!((aut_f, aut_s), (8, 4));
            }
            other => panic!("unexpected verdict {other:?}"),
        }
    }

    #[test]
    fn centric_radical_essential() {
        let a4 = fusion_of_group(&corpus::alternating(4), 2).unwrap();
        let centric = a4.centric_subgroups();
        assert_eq!(centric.len(), 1);
        assert_eq!(centric[0].order(), 4);
        assert!(a4.essential_subgroups().unwrap().is_empty());

        let s4 = fusion_of_group(&corpus::symmetric(4), 2).unwrap();
        let orders: Vec<usize> = s4.centric_subgroups().iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![4, 4, 4, 8]);
        let cr: Vec<usize> = (0..s4.subgroups().len())
            .filter(|&i| s4.is_centric(i) && s4.is_radical(i))
            .map(|i| s4.subgroup(i).order())
            .collect();
        // the normal V4 (Out = S3) and S itself; the other V4 and C4 have
        // Out_F of order 2
        assert_eq!(cr, vec![4, 8]);
        let ess = s4.essential_subgroups().unwrap();
        assert_eq!(ess.len(), 1);
        assert_eq!(ess[0].order(), 4);

        let d8 = corpus::dihedral(8);
        let inner = FusionSystem::inner(&d8, 2).unwrap();
        // subgroups with trivial Out_F are radical too; among centric
        // subgroups only S survives
        let radical = inner.radical_subgroups();
        assert_eq!(radical.iter().map(Subgroup::order).collect::<Vec<_>>(), vec![1, 2, 2, 2, 2, 2, 8]);
        let cr: Vec<&Subgroup> = radical.iter().filter(|h| inner.is_centric(inner.index_of(h).unwrap())).collect();
        assert_eq!(cr, vec![&d8.whole()]);
    }

    #[test]
    fn strong_closure_and_center() {
        let a4 = fusion_of_group(&corpus::alternating(4), 2).unwrap();
        let s = a4.group().clone();
        assert!(a4.is_strongly_closed(&s.whole()));
        assert!(!a4.is_strongly_closed(&s.closure(&[1])));
        assert!(a4.center().is_trivial());

        let s4 = fusion_of_group(&corpus::symmetric(4), 2).unwrap();
        let normal_v4 = (0..s4.subgroups().len())
            .find(|&i| s4.subgroup(i).order() == 4 && s4.is_radical(i) && s4.is_centric(i))
            .unwrap();
        assert!(s4.is_strongly_closed(s4.subgroup(normal_v4)));
        assert!(s4.center().is_trivial());

        let d8 = corpus::dihedral(8);
        let inner = FusionSystem::inner(&d8, 2).unwrap();
        assert_eq!(inner.center(), center(&d8));
    }
}
