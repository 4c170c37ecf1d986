use super::{extend_from_generators, FiniteGroup, Subgroup};
use crate::error::{Error, Result};

/// `G × H` with element `(g, h)` at index `g·|H| + h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let (m, k) = (g.order(), h.order());
    let n = m * k;
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        let (a1, a2) = (a / k, a % k);
        for b in 0..n {
            let (b1, b2) = (b / k, b % k);
            table[a * n + b] = (g.mul(a1, b1) * k + h.mul(a2, b2)) as u32;
        }
    }
    FiniteGroup::from_table_trusted(n, table)
}

/// `N ⋊ H` where generator `h_gens[i]` of `H` acts on `N` by the
/// automorphism `actions[i]` (an image array over `N`'s elements).
/// Element `(n, h)` sits at index `n·|H| + h` and multiplies as
/// `(n₁, h₁)(n₂, h₂) = (n₁·θ(h₁)(n₂), h₁h₂)`.
pub fn semidirect_product(
    n: &FiniteGroup,
    h: &FiniteGroup,
    h_gens: &[usize],
    actions: &[Vec<usize>],
) -> Result<FiniteGroup> {
    if h_gens.len() != actions.len() {
        return Err(Error::Input("one action per generator is required".into()));
    }
    for act in actions {
        if act.len() != n.order() {
            return Err(Error::NotAHomomorphism("action has the wrong length".into()));
        }
        for x in n.elements() {
            for y in n.elements() {
                if act[n.mul(x, y)] != n.mul(act[x], act[y]) {
                    return Err(Error::NotAHomomorphism("action is not an automorphism".into()));
                }
            }
        }
    }
    if h.closure(h_gens).order() != h.order() {
        return Err(Error::Input("acting generators do not generate H".into()));
    }
    // θ(h) for every h, by breadth-first search over right multiplication
    let mut theta: Vec<Option<Vec<usize>>> = vec![None; h.order()];
    theta[0] = Some(n.elements().collect());
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        for (&g, act) in h_gens.iter().zip(actions) {
            let y = h.mul(x, g);
            let tx = theta[x].as_ref().expect("visited");
            let ty: Vec<usize> = (0..n.order()).map(|e| tx[act[e]]).collect();
            match &theta[y] {
                None => {
                    theta[y] = Some(ty);
                    queue.push(y);
                }
                Some(existing) if *existing != ty => {
                    return Err(Error::NotAHomomorphism(
                        "actions do not define a homomorphism H → Aut(N)".into(),
                    ));
                }
                Some(_) => {}
            }
        }
        head += 1;
    }
    let theta: Vec<Vec<usize>> = theta.into_iter().map(|t| t.expect("H generated")).collect();
    let k = h.order();
    let total = n.order() * k;
    let mut table = vec![0u32; total * total];
    for a in 0..total {
        let (n1, h1) = (a / k, a % k);
        for b in 0..total {
            let (n2, h2) = (b / k, b % k);
            let nn = n.mul(n1, theta[h1][n2]);
            table[a * total + b] = (nn * k + h.mul(h1, h2)) as u32;
        }
    }
    Ok(FiniteGroup::from_table_trusted(total, table))
}

/// A quotient group together with the projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    /// `projection[g]` is the coset index of parent element `g` (only
    /// meaningful for elements of the ambient subgroup).
    pub projection: Vec<u32>,
    /// Least element of each coset.
    pub representatives: Vec<u32>,
}

/// `ambient / normal` with cosets numbered by least representative.
pub fn quotient(g: &FiniteGroup, ambient: &Subgroup, normal: &Subgroup) -> Result<Quotient> {
    if !normal.is_subgroup_of(ambient) || !normal.is_normal_in(g, ambient) {
        return Err(Error::NotASubgroup("quotient by a non-normal subgroup".into()));
    }
    let mut projection = vec![u32::MAX; g.order()];
    let mut representatives = Vec::new();
    for x in ambient.iter() {
        if projection[x] != u32::MAX {
            continue;
        }
        let idx = representatives.len() as u32;
        representatives.push(x as u32);
        for m in normal.iter() {
            projection[g.mul(x, m)] = idx;
        }
    }
    let q = representatives.len();
    let mut table = vec![0u32; q * q];
    for a in 0..q {
        for b in 0..q {
            let prod = g.mul(representatives[a] as usize, representatives[b] as usize);
            table[a * q + b] = projection[prod];
        }
    }
    Ok(Quotient { group: FiniteGroup::from_table_trusted(q, table), projection, representatives })
}

/// A subgroup re-indexed as a standalone group; `embedding[k]` is the parent
/// index of element `k`. Since elements stay in ascending order, index 0 is
/// still the identity.
pub fn subgroup_as_group(g: &FiniteGroup, h: &Subgroup) -> (FiniteGroup, Vec<u32>) {
    let embedding: Vec<u32> = h.elements().to_vec();
    let n = embedding.len();
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            let prod = g.mul(embedding[a] as usize, embedding[b] as usize);
            table[a * n + b] = h.position(prod).expect("closed") as u32;
        }
    }
    let mut sub = FiniteGroup::from_table_trusted(n, table);
    if let Some(origin) = g.origin() {
        sub = sub.with_origin(super::PermutationOrigin {
            degree: origin.degree,
            generators: h.generators().iter().map(|&x| origin.elements[x].clone()).collect(),
            elements: embedding.iter().map(|&x| origin.elements[x as usize].clone()).collect(),
        });
    }
    (sub, embedding)
}

impl FiniteGroup {
    pub(crate) fn with_origin(mut self, origin: super::PermutationOrigin) -> Self {
        self.origin = Some(origin);
        self
    }
}

/// Checks that `map` (indexed by domain element) is an injective
/// homomorphism from `dom` into `cod`.
pub(crate) fn is_monomorphism(dom: &FiniteGroup, cod: &FiniteGroup, map: &[u32]) -> bool {
    if map.len() != dom.order() || map.iter().any(|&y| y as usize >= cod.order()) {
        return false;
    }
    let gens = dom.generators();
    let images: Vec<usize> = gens.iter().map(|&x| map[x] as usize).collect();
    match extend_from_generators(dom, &gens, cod, &images) {
        Some(ext) if ext == map => {
            let mut seen = map.to_vec();
            seen.sort_unstable();
            seen.dedup();
            seen.len() == map.len()
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::group::{are_isomorphic, center};

    #[test]
    fn products() {
        let c2 = corpus::cyclic(2);
        let v4 = direct_product(&c2, &c2);
        assert!(are_isomorphic(&v4, &corpus::klein_four()));
        let c3 = corpus::cyclic(3);
        // inversion action gives S3
        let s3 = semidirect_product(&c3, &c2, &[1], &[vec![0, 2, 1]]).unwrap();
        assert!(are_isomorphic(&s3, &corpus::symmetric(3)));
        // a non-automorphism is rejected
        assert!(semidirect_product(&c3, &c2, &[1], &[vec![0, 1, 1]]).is_err());
        // an order-3 automorphism cannot come from C2
        let v = corpus::klein_four();
        let sigma = vec![0, 2, 3, 1];
        assert!(semidirect_product(&v, &c2, &[1], &[sigma]).is_err());
    }

    #[test]
    fn quotient_by_center() {
        let d8 = corpus::dihedral(8);
        let z = center(&d8);
        let q = quotient(&d8, &d8.whole(), &z).unwrap();
        assert!(are_isomorphic(&q.group, &corpus::klein_four()));
        assert_eq!(q.projection[0], 0);
        assert!(q.representatives.windows(2).all(|w| w[0] < w[1]));
        let s3 = corpus::symmetric(3);
        let t = s3.element_of_permutation(&[1, 0, 2]).unwrap();
        assert!(quotient(&s3, &s3.whole(), &s3.closure(&[t])).is_err());
    }

    #[test]
    fn subgroup_extraction() {
        let s4 = corpus::symmetric(4);
        let s = crate::group::sylow_p(&s4, 2);
        let (d8, emb) = subgroup_as_group(&s4, &s);
        assert!(are_isomorphic(&d8, &corpus::dihedral(8)));
        assert_eq!(emb[0], 0);
        assert!(is_monomorphism(&d8, &s4, &emb));
        assert!(d8.origin().is_some());
    }
}
