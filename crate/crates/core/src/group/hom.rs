use super::{FiniteGroup, Subgroup, DEFAULT_LATTICE_BOUND};
use crate::error::{Error, Result};

/// A homomorphism between subgroups, possibly of different parent groups.
///
/// `images[k]` is the image of `domain.elements()[k]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupHom {
    domain: Subgroup,
    codomain: Subgroup,
    images: Vec<u32>,
}

impl GroupHom {
    /// Validates multiplicativity and that images land in the codomain.
    pub fn new(
        dom_group: &FiniteGroup,
        domain: Subgroup,
        cod_group: &FiniteGroup,
        codomain: Subgroup,
        images: Vec<u32>,
    ) -> Result<Self> {
        if images.len() != domain.order() {
            return Err(Error::NotAHomomorphism("image list has the wrong length".into()));
        }
        if let Some(&bad) = images.iter().find(|&&y| !codomain.contains(y as usize)) {
            return Err(Error::NotAHomomorphism(format!("image {bad} outside the codomain")));
        }
        let hom = GroupHom { domain, codomain, images };
        for (i, x) in hom.domain.iter().enumerate() {
            for (j, y) in hom.domain.iter().enumerate() {
                let xy = dom_group.mul(x, y);
                let lhs = hom.apply(xy).expect("domain closed");
                let rhs = cod_group.mul(hom.images[i] as usize, hom.images[j] as usize);
                if lhs != rhs {
                    return Err(Error::NotAHomomorphism(format!(
                        "f({x}·{y}) ≠ f({x})·f({y})"
                    )));
                }
            }
        }
        Ok(hom)
    }

    pub(crate) fn from_parts_unchecked(domain: Subgroup, codomain: Subgroup, images: Vec<u32>) -> Self {
        GroupHom { domain, codomain, images }
    }

    pub fn domain(&self) -> &Subgroup {
        &self.domain
    }

    pub fn codomain(&self) -> &Subgroup {
        &self.codomain
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        self.domain.position(x).map(|k| self.images[k] as usize)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen: Vec<u32> = self.images.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == self.images.len()
    }

    /// Image subgroup inside `cod_group`.
    pub fn image(&self, cod_group: &FiniteGroup) -> Subgroup {
        let mut elems = self.images.clone();
        elems.sort_unstable();
        elems.dedup();
        Subgroup::from_elements_unchecked(cod_group, elems)
    }

    /// `other ∘ self`; requires `self`'s images to lie in `other`'s domain.
    pub fn then(&self, other: &GroupHom) -> Option<GroupHom> {
        let images = self
            .images
            .iter()
            .map(|&y| other.apply(y as usize).map(|z| z as u32))
            .collect::<Option<Vec<_>>>()?;
        Some(GroupHom { domain: self.domain.clone(), codomain: other.codomain.clone(), images })
    }
}

/// Extends `gens[k] ↦ images[k]` to a homomorphism on `⟨gens⟩`, returning the
/// image of every element of `dom_group` that the generators reach (indexed
/// by `dom_group` element, `u32::MAX` where unreached), or `None` when the
/// assignment is inconsistent.
pub fn extend_from_generators(
    dom_group: &FiniteGroup,
    gens: &[usize],
    cod_group: &FiniteGroup,
    images: &[usize],
) -> Option<Vec<u32>> {
    let mut map = vec![u32::MAX; dom_group.order()];
    map[0] = 0;
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        let fx = map[x] as usize;
        for (&g, &fg) in gens.iter().zip(images) {
            let y = dom_group.mul(x, g);
            let fy = cod_group.mul(fx, fg) as u32;
            if map[y] == u32::MAX {
                map[y] = fy;
                queue.push(y);
            } else if map[y] != fy {
                return None;
            }
        }
        head += 1;
    }
    Some(map)
}

/// All automorphisms of `p ≤ g`, found by backtracking over images of the
/// greedy generating set. Each level only admits images outside the span of
/// the images already chosen, and partial assignments are checked for
/// consistency before descending.
pub fn automorphisms(g: &FiniteGroup, p: &Subgroup) -> Result<Vec<GroupHom>> {
    if p.order() > DEFAULT_LATTICE_BOUND {
        return Err(Error::LatticeTooLarge { order: p.order(), bound: DEFAULT_LATTICE_BOUND });
    }
    let gens = p.generators();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(gens.len());
    search_automorphisms(g, p, &gens, &mut chosen, &mut out);
    out.sort_by(|a, b| a.images.cmp(&b.images));
    Ok(out)
}

fn search_automorphisms(
    g: &FiniteGroup,
    p: &Subgroup,
    gens: &[usize],
    chosen: &mut Vec<usize>,
    out: &mut Vec<GroupHom>,
) {
    let k = chosen.len();
    if k == gens.len() {
        let map = extend_from_generators(g, gens, g, chosen).expect("checked at each level");
        let images: Vec<u32> = p.iter().map(|x| map[x]).collect();
        let mut sorted = images.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() == p.order() {
            out.push(GroupHom::from_parts_unchecked(p.clone(), p.clone(), images));
        }
        return;
    }
    let span = g.closure(chosen);
    let target_order = g.element_order(gens[k]);
    for y in p.iter() {
        if span.contains(y) || g.element_order(y) != target_order {
            continue;
        }
        chosen.push(y);
        if extend_from_generators(g, &gens[..=k], g, chosen).is_some() {
            search_automorphisms(g, p, gens, chosen, out);
        }
        chosen.pop();
    }
}

/// Brute-force isomorphism test: order statistics first, then a search over
/// generator images.
pub fn are_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    find_isomorphism(a, b).is_some()
}

/// Some isomorphism `a → b` as the image of each element of `a`.
pub fn find_isomorphism(a: &FiniteGroup, b: &FiniteGroup) -> Option<Vec<u32>> {
    if a.order() != b.order() {
        return None;
    }
    let stats = |g: &FiniteGroup| {
        let mut v: Vec<usize> = g.elements().map(|x| g.element_order(x)).collect();
        v.sort_unstable();
        v
    };
    if stats(a) != stats(b) || a.is_abelian() != b.is_abelian() {
        return None;
    }
    let gens = a.generators();
    let mut chosen = Vec::new();
    iso_search(a, b, &gens, &mut chosen)
}

fn iso_search(a: &FiniteGroup, b: &FiniteGroup, gens: &[usize], chosen: &mut Vec<usize>) -> Option<Vec<u32>> {
    let k = chosen.len();
    if k == gens.len() {
        let map = extend_from_generators(a, gens, b, chosen).expect("checked at each level");
        let mut seen = vec![false; b.order()];
        let bijective = map.iter().all(|&y| {
            let fresh = !seen[y as usize];
            seen[y as usize] = true;
            fresh
        });
        return bijective.then_some(map);
    }
    let span = b.closure(chosen);
    let order = a.element_order(gens[k]);
    for y in b.elements() {
        if span.contains(y) || b.element_order(y) != order {
            continue;
        }
        chosen.push(y);
        if extend_from_generators(a, &gens[..=k], b, chosen).is_some() {
            if let Some(map) = iso_search(a, b, gens, chosen) {
                return Some(map);
            }
        }
        chosen.pop();
    }
    None
}
