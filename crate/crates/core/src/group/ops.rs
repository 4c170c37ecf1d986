//! Classical subgroup operators.

use super::{lattice::subgroups, FiniteGroup, Subgroup, DEFAULT_LATTICE_BOUND};
use crate::error::{Error, Result};

fn check_member(g: &FiniteGroup, p: &Subgroup) -> Result<()> {
    if p.iter().any(|x| x >= g.order()) {
        return Err(Error::NotASubgroup("element outside the group".into()));
    }
    Ok(())
}

/// `N_G(P) = {g : gPg⁻¹ = P}`
pub fn normalizer(g: &FiniteGroup, p: &Subgroup) -> Result<Subgroup> {
    transporter_subgroup(g, p, p)
}

fn transporter_subgroup(g: &FiniteGroup, p: &Subgroup, q: &Subgroup) -> Result<Subgroup> {
    let elems = transporter(g, p, q)?;
    Ok(Subgroup::from_elements_unchecked(
        g,
        elems.into_iter().map(|x| x as u32).collect(),
    ))
}

/// `N_G(P, Q) = {g : gPg⁻¹ ≤ Q}`, ascending.
pub fn transporter(g: &FiniteGroup, p: &Subgroup, q: &Subgroup) -> Result<Vec<usize>> {
    check_member(g, p)?;
    check_member(g, q)?;
    if p.order() > q.order() {
        return Ok(Vec::new());
    }
    let gens = p.generators();
    Ok(g.elements()
        .filter(|&x| gens.iter().all(|&h| q.contains(g.conj(x, h))))
        .collect())
}

/// `C_G(P)`
pub fn centralizer(g: &FiniteGroup, p: &Subgroup) -> Result<Subgroup> {
    check_member(g, p)?;
    let gens = p.generators();
    let elems = g
        .elements()
        .filter(|&x| gens.iter().all(|&h| g.mul(x, h) == g.mul(h, x)))
        .map(|x| x as u32)
        .collect();
    Ok(Subgroup::from_elements_unchecked(g, elems))
}

pub fn center(g: &FiniteGroup) -> Subgroup {
    centralizer(g, &g.whole()).expect("whole group is a subgroup")
}

/// Largest power of `p` dividing `n`.
pub fn p_part(n: usize, p: usize) -> usize {
    let mut m = n;
    let mut q = 1;
    while m % p == 0 {
        m /= p;
        q *= p;
    }
    q
}

pub fn is_p_group(order: usize, p: usize) -> bool {
    p_part(order, p) == order
}

/// The Sylow p-subgroup with lexicographically least element set.
pub fn sylow_p(g: &FiniteGroup, p: usize) -> Subgroup {
    let target = p_part(g.order(), p);
    let mut s = g.trivial_subgroup();
    while s.order() < target {
        let n = normalizer(g, &s).expect("subgroup of g");
        // An element of N(S)/S of order p enlarges S by a factor p.
        let mut grown = None;
        for x in n.iter() {
            if s.contains(x) {
                continue;
            }
            let mut m = 1;
            let mut y = x;
            while !s.contains(y) {
                y = g.mul(y, x);
                m += 1;
            }
            if m % p == 0 {
                let h = g.pow(x, m / p);
                let mut gens = s.generators();
                gens.push(h);
                grown = Some(g.closure(&gens));
                break;
            }
        }
        s = grown.expect("p divides [N(S):S] while S is not Sylow");
    }
    let mut best = s.clone();
    for x in g.elements() {
        let c = s.conjugate(g, x);
        if c.elements() < best.elements() {
            best = c;
        }
    }
    best
}

/// Largest normal p-subgroup: the intersection of all Sylow p-subgroups.
pub fn o_p(g: &FiniteGroup, p: usize) -> Subgroup {
    let s = sylow_p(g, p);
    let mut core = s.clone();
    for x in g.elements() {
        if core.is_trivial() {
            break;
        }
        core = core.intersection(g, &s.conjugate(g, x));
    }
    debug_assert!(core.is_normal_in(g, &g.whole()));
    core
}

/// `O^p(K)`: the subgroup of `K` generated by its p′-elements.
pub fn o_p_residual(g: &FiniteGroup, k: &Subgroup, p: usize) -> Subgroup {
    let gens: Vec<usize> = k.iter().filter(|&x| g.element_order(x) % p != 0).collect();
    g.closure(&gens)
}

/// Largest p-perfect subgroup of `c`, as the fixpoint of `K ↦ O^p(K)`.
pub fn max_p_perfect(g: &FiniteGroup, c: &Subgroup, p: usize) -> Subgroup {
    let mut k = c.clone();
    loop {
        let next = o_p_residual(g, &k, p);
        if next == k {
            return k;
        }
        k = next;
    }
}

/// Normal closure of `h` inside `ambient`.
pub fn normal_closure(g: &FiniteGroup, h: &Subgroup, ambient: &Subgroup) -> Subgroup {
    let mut gens = Vec::new();
    for x in ambient.iter() {
        for y in h.generators() {
            gens.push(g.conj(x, y));
        }
    }
    gens.sort_unstable();
    gens.dedup();
    g.closure(&gens)
}

/// `[K, K]`
pub fn commutator_subgroup(g: &FiniteGroup, k: &Subgroup) -> Subgroup {
    let gens = k.generators();
    let mut comms = Vec::new();
    for &a in &gens {
        for &b in &gens {
            let c = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
            if c != 0 {
                comms.push(c);
            }
        }
    }
    comms.sort_unstable();
    comms.dedup();
    normal_closure(g, &g.closure(&comms), k)
}

/// `J(S)`: generated by the abelian subgroups of maximal order.
pub fn thompson_subgroup(s: &FiniteGroup) -> Result<Subgroup> {
    let subs = subgroups(s, DEFAULT_LATTICE_BOUND.max(s.order()))?;
    let abelian: Vec<&Subgroup> = subs.iter().filter(|h| h.is_abelian(s)).collect();
    let max = abelian.iter().map(|h| h.order()).max().unwrap_or(1);
    let mut gens = Vec::new();
    for h in abelian.iter().filter(|h| h.order() == max) {
        gens.extend(h.generators());
    }
    Ok(s.closure(&gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::group::subgroups;

    fn brute_normalizer(g: &FiniteGroup, p: &Subgroup) -> Vec<usize> {
        g.elements()
            .filter(|&x| {
                let mut conj: Vec<usize> = p.iter().map(|y| g.conj(x, y)).collect();
                conj.sort_unstable();
                conj == p.iter().collect::<Vec<_>>()
            })
            .collect()
    }

    fn brute_transporter(g: &FiniteGroup, p: &Subgroup, q: &Subgroup) -> Vec<usize> {
        g.elements()
            .filter(|&x| p.iter().all(|y| q.contains(g.conj(x, y))))
            .collect()
    }

    #[test]
    fn normalizer_centralizer_center_examples() {
        let d8 = corpus::dihedral(8);
        let z = center(&d8);
        assert_eq!(z.order(), 2);
        assert_eq!(centralizer(&d8, &z).unwrap().order(), 8);

        let s4 = corpus::symmetric(4);
        let v4 = o_p(&s4, 2);
        assert_eq!(v4.order(), 4);
        let n = normalizer(&s4, &v4).unwrap();
        assert_eq!(n.iter().collect::<Vec<_>>(), brute_normalizer(&s4, &v4));
        assert_eq!(n.order(), 24);

        assert!(center(&corpus::alternating(4)).is_trivial());
    }

    #[test]
    fn transporter_examples() {
        let v4 = corpus::klein_four();
        let whole = v4.whole();
        assert_eq!(transporter(&v4, &whole, &whole).unwrap().len(), 4);
        let a = v4.closure(&[1]);
        let b = v4.closure(&[2]);
        assert!(transporter(&v4, &a, &b).unwrap().is_empty());

        let s4 = corpus::symmetric(4);
        let t01 = s4.element_of_permutation(&[1, 0, 2, 3]).unwrap();
        let t23 = s4.element_of_permutation(&[0, 1, 3, 2]).unwrap();
        let p = s4.closure(&[t01]);
        let q = s4.closure(&[t23]);
        let t = transporter(&s4, &p, &q).unwrap();
        assert_eq!(t, brute_transporter(&s4, &p, &q));
        // a coset of C(⟨(01)⟩), which has order 4
        assert_eq!(t.len(), 4);
    }

    #[test]
    fn sylow_examples() {
        let s4 = corpus::symmetric(4);
        let s = sylow_p(&s4, 2);
        assert_eq!(s.order(), 8);
        assert!(!s.is_abelian(&s4));
        // every 2-subgroup is conjugate into it
        for h in subgroups(&s4, 64).unwrap() {
            if is_p_group(h.order(), 2) {
                assert!(s4.elements().any(|x| h.conjugate(&s4, x).is_subgroup_of(&s)));
            }
        }
        // lexicographically least among all Sylow 2-subgroups
        let all: Vec<_> = subgroups(&s4, 64).unwrap().into_iter().filter(|h| h.order() == 8).collect();
        assert_eq!(all.len(), 3);
        assert!(all.iter().all(|h| s.elements() <= h.elements()));

        let c3 = corpus::cyclic(3);
        assert_eq!(sylow_p(&c3, 3).order(), 3);
        assert!(sylow_p(&corpus::alternating(4), 5).is_trivial());
    }

    #[test]
    fn o_p_examples() {
        assert_eq!(o_p(&corpus::dihedral(8), 2).order(), 8);
        assert_eq!(o_p(&corpus::alternating(4), 2).order(), 4);
        assert!(o_p(&corpus::symmetric(4), 3).is_trivial());
    }

    #[test]
    fn max_p_perfect_examples() {
        let c2 = corpus::cyclic(2);
        assert!(max_p_perfect(&c2, &c2.whole(), 2).is_trivial());
        let c3 = corpus::cyclic(3);
        assert_eq!(max_p_perfect(&c3, &c3.whole(), 2).order(), 3);
        let a4 = corpus::alternating(4);
        assert_eq!(max_p_perfect(&a4, &a4.whole(), 2).order(), 12);
    }

    #[test]
    fn thompson_examples() {
        assert_eq!(thompson_subgroup(&corpus::klein_four()).unwrap().order(), 4);
        assert_eq!(thompson_subgroup(&corpus::dihedral(8)).unwrap().order(), 8);
        assert_eq!(thompson_subgroup(&corpus::quaternion(8)).unwrap().order(), 8);
    }
}
