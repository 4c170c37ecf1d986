//! Normal forms in the fundamental group of the star, based at the center.
//!
//! An element is a loop `a₀ b₁ a₁ b₂ … a_k` alternating between the center
//! (`a`) and leaves (`b`). It is reduced when no leaf syllable lies in its
//! edge group and no center syllable between two visits to the same leaf lies
//! in that edge group. Pushing edge elements rightwards through least coset
//! representatives then makes it unique.

use serde::Serialize;

use super::StarOfGroups;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ReducedWord {
    /// Non-identity coset representatives `(vertex, element)`, in order.
    pub syllables: Vec<(usize, usize)>,
    /// Trailing element of the central vertex group.
    pub core: usize,
}

impl ReducedWord {
    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty() && self.core == 0
    }
}

/// Coset data for one edge: for each element `x` of a vertex group, its
/// least representative `t` of `x·E` and the edge element `c` with
/// `x = t·c`; and the preimage in `E` of each vertex element (or `MAX`).
#[derive(Clone, Debug)]
pub(crate) struct EdgeCosets {
    base: Vec<(u32, u32)>,
    leaf: Vec<(u32, u32)>,
    base_pre: Vec<u32>,
    leaf_pre: Vec<u32>,
}

fn cosets(group: &crate::group::FiniteGroup, edge: &crate::group::FiniteGroup, into: &[u32]) -> (Vec<(u32, u32)>, Vec<u32>) {
    let mut pre = vec![u32::MAX; group.order()];
    for (h, &x) in into.iter().enumerate() {
        pre[x as usize] = h as u32;
    }
    let table = group
        .elements()
        .map(|x| {
            let (t, h) = into
                .iter()
                .enumerate()
                .map(|(h, &y)| (group.mul(x, y as usize) as u32, h))
                .min()
                .expect("edge group is nonempty");
            // x = t · into(h)⁻¹
            (t, edge.inv(h) as u32)
        })
        .collect();
    (table, pre)
}

impl StarOfGroups {
    pub(crate) fn edge_cosets(&self) -> &[EdgeCosets] {
        self.cosets.get_or_init(|| {
            self.edges
                .iter()
                .map(|e| {
                    let (base, base_pre) = cosets(&self.vertices[0], &e.group, &e.into_base);
                    let (leaf, leaf_pre) = cosets(&self.vertices[e.vertex], &e.group, &e.into_vertex);
                    EdgeCosets { base, leaf, base_pre, leaf_pre }
                })
                .collect()
        })
    }

    fn edge_index(&self, vertex: usize) -> usize {
        self.edges.iter().position(|e| e.vertex == vertex).expect("leaf vertex")
    }

    /// Reduces a word of letters `(vertex, element)`.
    pub fn normal_form(&self, letters: &[(usize, usize)]) -> Result<ReducedWord> {
        let mut path: Vec<(usize, usize)> = vec![(0, 0)];
        for (k, &(v, x)) in letters.iter().enumerate() {
            if v >= self.vertices.len() || x >= self.vertices[v].order() {
                return Err(Error::Input(format!("letter {k}: ({v}, {x}) is not a vertex element")));
            }
            if v == 0 {
                let last = path.last_mut().expect("nonempty");
                last.1 = self.vertices[0].mul(last.1, x);
            } else {
                path.push((v, x));
                path.push((0, 0));
            }
        }
        self.reduce(&mut path);
        let cosets = self.edge_cosets();
        let base = &self.vertices[0];
        for k in 0..path.len() - 1 {
            let (v, x) = path[k];
            if v == 0 {
                let i = path[k + 1].0;
                let e = self.edge_index(i);
                let (t, c) = cosets[e].base[x];
                path[k].1 = t as usize;
                let cy = self.edges[e].into_vertex[c as usize] as usize;
                path[k + 1].1 = self.vertices[i].mul(cy, path[k + 1].1);
            } else {
                let e = self.edge_index(v);
                let (u, c) = cosets[e].leaf[x];
                path[k].1 = u as usize;
                let cx = self.edges[e].into_base[c as usize] as usize;
                path[k + 1].1 = base.mul(cx, path[k + 1].1);
            }
        }
        let core = path.last().expect("nonempty").1;
        path.pop();
        let syllables = path.into_iter().filter(|&(_, x)| x != 0).collect();
        Ok(ReducedWord { syllables, core })
    }

    /// Merges backtracking syllables until none remain.
    fn reduce(&self, path: &mut Vec<(usize, usize)>) {
        let cosets = self.edge_cosets();
        let base = &self.vertices[0];
        'again: loop {
            for k in (1..path.len()).step_by(2) {
                let (i, b) = path[k];
                let e = self.edge_index(i);
                let pre = cosets[e].leaf_pre[b];
                if pre != u32::MAX {
                    let c = self.edges[e].into_base[pre as usize] as usize;
                    let merged = base.mul(base.mul(path[k - 1].1, c), path[k + 1].1);
                    path[k - 1].1 = merged;
                    path.drain(k..k + 2);
                    continue 'again;
                }
            }
            for k in (2..path.len().saturating_sub(1)).step_by(2) {
                let i = path[k - 1].0;
                if path[k + 1].0 != i {
                    continue;
                }
                let e = self.edge_index(i);
                let pre = cosets[e].base_pre[path[k].1];
                if pre != u32::MAX {
                    let l = &self.vertices[i];
                    let c = self.edges[e].into_vertex[pre as usize] as usize;
                    path[k - 1].1 = l.mul(l.mul(path[k - 1].1, c), path[k + 1].1);
                    path.drain(k..k + 2);
                    continue 'again;
                }
            }
            return;
        }
    }

    /// The word back as letters.
    pub fn letters(&self, w: &ReducedWord) -> Vec<(usize, usize)> {
        let mut out = w.syllables.clone();
        out.push((0, w.core));
        out
    }

    pub fn multiply(&self, u: &ReducedWord, v: &ReducedWord) -> ReducedWord {
        let mut letters = self.letters(u);
        letters.extend(self.letters(v));
        self.normal_form(&letters).expect("letters of reduced words are valid")
    }

    pub fn inverse(&self, u: &ReducedWord) -> ReducedWord {
        let letters: Vec<(usize, usize)> =
            self.letters(u).into_iter().rev().map(|(v, x)| (v, self.vertices[v].inv(x))).collect();
        self.normal_form(&letters).expect("letters of reduced words are valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::models::{robinson_model, Edge, Flavor};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// C2 * C2 over the trivial group.
    fn free_product() -> StarOfGroups {
        let c2 = corpus::cyclic(2);
        let c1 = corpus::cyclic(1);
        StarOfGroups::new(
            2,
            vec![c2.clone(), c2.clone()],
            c2,
            vec![0, 1],
            vec![Edge { group: c1, vertex: 1, into_base: vec![0], into_vertex: vec![0] }],
        )
        .unwrap()
    }

    fn random_word(m: &StarOfGroups, rng: &mut ChaCha8Rng, len: usize) -> Vec<(usize, usize)> {
        (0..len)
            .map(|_| {
                let v = rng.gen_range(0..m.vertices().len());
                (v, rng.gen_range(0..m.vertices()[v].order()))
            })
            .collect()
    }

    #[test]
    fn identity_letters_vanish() {
        let m = free_product();
        assert!(m.normal_form(&[(1, 0)]).unwrap().is_identity());
        assert!(m.normal_form(&[(1, 1), (1, 1)]).unwrap().is_identity());
        // (ab)^3 in the infinite dihedral group is not trivial
        let w = m.normal_form(&[(0, 1), (1, 1), (0, 1), (1, 1), (0, 1), (1, 1)]).unwrap();
        assert_eq!(w.len(), 6);
        assert!(m.normal_form(&[(2, 0)]).is_err());
    }

    #[test]
    fn degenerate_amalgam_has_short_words() {
        let s4 = corpus::symmetric(4);
        let m = robinson_model(&s4, 2, Flavor::CentricRadical).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut seen = std::collections::HashSet::new();
        for _ in 0..400 {
            let w = m.normal_form(&random_word(&m, &mut rng, 6)).unwrap();
            assert!(w.len() <= 1);
            seen.insert(w);
        }
        // every element of S4 shows up, and nothing else
        assert_eq!(seen.len(), 24);
    }

    #[test]
    fn group_laws_on_random_words() {
        let m = free_product();
        let s4m = robinson_model(&corpus::symmetric(4), 2, Flavor::Centric).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for model in [&m, &s4m] {
            for _ in 0..100 {
                let u = model.normal_form(&random_word(model, &mut rng, 3)).unwrap();
                let v = model.normal_form(&random_word(model, &mut rng, 3)).unwrap();
                let w = model.normal_form(&random_word(model, &mut rng, 3)).unwrap();
                assert!(model.multiply(&u, &model.inverse(&u)).is_identity());
                assert_eq!(
                    model.multiply(&model.multiply(&u, &v), &w),
                    model.multiply(&u, &model.multiply(&v, &w))
                );
                assert_eq!(model.normal_form(&model.letters(&u)).unwrap(), u);
            }
        }
    }
}
