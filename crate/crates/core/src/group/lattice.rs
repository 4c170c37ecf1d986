use std::collections::HashSet;

use super::{FiniteGroup, Subgroup};
use crate::error::{Error, Result};

pub const DEFAULT_LATTICE_BOUND: usize = 64;

/// Every subgroup of `g` exactly once, sorted by order and then by element
/// set.
///
/// Starts from the cyclic subgroups and closes under joins with cyclic
/// subgroups; every subgroup is a join of cyclic ones, so the fixpoint is
/// the full lattice.
pub fn subgroups(g: &FiniteGroup, bound: usize) -> Result<Vec<Subgroup>> {
    if g.order() > bound {
        return Err(Error::LatticeTooLarge { order: g.order(), bound });
    }
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut all: Vec<Subgroup> = Vec::new();
    let mut cyclic_gens: Vec<usize> = Vec::new();
    for x in g.elements() {
        let c = g.closure(&[x]);
        if seen.insert(c.mask().to_vec()) {
            cyclic_gens.push(x);
            all.push(c);
        }
    }
    let mut frontier: Vec<usize> = (0..all.len()).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for idx in frontier {
            for &x in &cyclic_gens {
                if all[idx].contains(x) {
                    continue;
                }
                let mut gens = all[idx].generators();
                gens.push(x);
                let joined = g.closure(&gens);
                if seen.insert(joined.mask().to_vec()) {
                    next.push(all.len());
                    all.push(joined);
                }
            }
        }
        frontier = next;
    }
    all.sort();
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    /// Brute-force oracle: test every subset containing the identity for
    /// closure. Only usable for order ≤ 16 or so.
    fn subset_oracle(g: &FiniteGroup) -> usize {
        let n = g.order();
        let mut count = 0;
        for mask in 0u32..(1 << (n - 1)) {
            let set: Vec<usize> = std::iter::once(0)
                .chain((1..n).filter(|&i| mask & (1 << (i - 1)) != 0))
                .collect();
            let closed = set
                .iter()
                .all(|&a| set.iter().all(|&b| set.contains(&g.mul(a, b))));
            if closed {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn lattice_counts_match_subset_oracle() {
        for (g, expected) in [
            (corpus::klein_four(), 5),
            (corpus::dihedral(8), 10),
            (corpus::cyclic(7), 2),
            (corpus::quaternion(8), 6),
            (corpus::symmetric(3), 6),
        ] {
            let subs = subgroups(&g, 64).unwrap();
            assert_eq!(subs.len(), expected);
            assert_eq!(subs.len(), subset_oracle(&g));
        }
    }

    #[test]
    fn lattice_is_sorted_and_contains_extremes() {
        let g = corpus::alternating(4);
        let subs = subgroups(&g, 64).unwrap();
        assert_eq!(subs.len(), 10);
        assert!(subs[0].is_trivial());
        assert_eq!(subs.last().unwrap().order(), 12);
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
        for s in &subs {
            assert_eq!(g.order() % s.order(), 0);
        }
    }

    #[test]
    fn lattice_bound() {
        let g = corpus::symmetric(4);
        assert_eq!(
            subgroups(&g, 16).unwrap_err(),
            Error::LatticeTooLarge { order: 24, bound: 16 }
        );
        assert_eq!(subgroups(&g, 64).unwrap().len(), 30);
    }
}
