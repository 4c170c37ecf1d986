use std::collections::BTreeSet;

use serde::Serialize;

use super::StarOfGroups;
use crate::error::Result;
use crate::fusion::{fusion_on_subgroup, generate_fusion, FusionGenerators, FusionSystem};
use crate::group::{automorphisms, find_isomorphism, GroupHom, Subgroup};

/// The first pair `(P, Q)` (largest `P` first) whose hom-sets differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModelDiff {
    pub source: Vec<u32>,
    pub target: Vec<u32>,
    pub expected: usize,
    pub found: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModelVerification {
    pub equal: bool,
    pub expected_morphisms: usize,
    pub generated_morphisms: usize,
    /// Whether `S` of the model had to be matched to `S` of the fusion
    /// system by an isomorphism.
    pub via_isomorphism: bool,
    pub diff: Option<ModelDiff>,
}

/// The fusion system on `S` generated by the conjugation maps inside each
/// vertex group between subgroups of its `S`-side.
pub fn model_fusion(model: &StarOfGroups) -> Result<FusionSystem> {
    let s = model.sylow();
    let mut maps = Vec::new();
    for v in 0..model.vertices().len() {
        let group = &model.vertices()[v];
        let side = model.vertex_sylow(v);
        // vertex element ↦ element of S, on the S-side
        let mut to_s = vec![u32::MAX; group.order()];
        if v == 0 {
            for (k, &x) in model.sylow_into_base().iter().enumerate() {
                to_s[x as usize] = k as u32;
            }
        } else {
            let e = model.edge_to(v).expect("validated star");
            let into_s = model.edge_into_sylow(e);
            for (k, &x) in e.into_vertex.iter().enumerate() {
                to_s[x as usize] = into_s[k];
            }
        }
        let (fv, emb) = fusion_on_subgroup(group, model.prime(), &side)?;
        for (j, sub) in fv.subgroups().iter().enumerate() {
            for m in fv.morphisms_from(j) {
                let mut pairs: Vec<(u32, u32)> = sub
                    .iter()
                    .zip(m.images())
                    .map(|(x, &y)| (to_s[emb[x] as usize], to_s[emb[y as usize] as usize]))
                    .collect();
                if pairs.iter().all(|(x, y)| x == y) {
                    continue;
                }
                pairs.sort_unstable();
                let dom = Subgroup::from_elements_unchecked(s, pairs.iter().map(|p| p.0).collect());
                let images = pairs.iter().map(|p| p.1).collect();
                maps.push(GroupHom::from_parts_unchecked(dom, s.whole(), images));
            }
        }
    }
    generate_fusion(&FusionGenerators::new(s.clone(), model.prime(), maps)?)
}

/// Every morphism as its sorted graph, after relabeling through `theta`.
fn graphs(f: &FusionSystem, theta: &[u32]) -> BTreeSet<Vec<(u32, u32)>> {
    let mut out = BTreeSet::new();
    for (i, sub) in f.subgroups().iter().enumerate() {
        for m in f.morphisms_from(i) {
            let mut g: Vec<(u32, u32)> =
                sub.iter().zip(m.images()).map(|(x, &y)| (theta[x], theta[y as usize])).collect();
            g.sort_unstable();
            out.insert(g);
        }
    }
    out
}

fn first_diff(f: &FusionSystem, found: &BTreeSet<Vec<(u32, u32)>>) -> Option<ModelDiff> {
    let subs = f.subgroups();
    for i in (0..subs.len()).rev() {
        for j in (0..subs.len()).rev() {
            let expected = f.hom(i, j).count();
            let got = found
                .iter()
                .filter(|g| {
                    g.len() == subs[i].order()
                        && g.iter().zip(subs[i].iter()).all(|(&(x, _), y)| x as usize == y)
                        && g.iter().all(|&(_, y)| subs[j].contains(y as usize))
                })
                .count();
            if expected != got {
                return Some(ModelDiff {
                    source: subs[i].elements().to_vec(),
                    target: subs[j].elements().to_vec(),
                    expected,
                    found: got,
                });
            }
        }
    }
    None
}

/// Compares the fusion generated by the model with `F`, hom-set by hom-set.
/// When the two copies of `S` are different tables, every isomorphism
/// between them is tried.
pub fn verify_model(model: &StarOfGroups, f: &FusionSystem) -> Result<ModelVerification> {
    let generated = model_fusion(model)?;
    let expected = graphs(f, &(0..f.group().order() as u32).collect::<Vec<_>>());
    let same_table = model.sylow().cayley_rows() == f.group().cayley_rows() && model.prime() == f.prime();
    let mut verification = ModelVerification {
        equal: false,
        expected_morphisms: expected.len(),
        generated_morphisms: generated.morphism_count(),
        via_isomorphism: !same_table,
        diff: None,
    };
    if same_table {
        let found = graphs(&generated, &(0..f.group().order() as u32).collect::<Vec<_>>());
        verification.equal = found == expected;
        if !verification.equal {
            verification.diff = first_diff(f, &found);
        }
        return Ok(verification);
    }
    let Some(theta) = find_isomorphism(model.sylow(), f.group()).filter(|_| model.prime() == f.prime()) else {
        verification.diff = Some(ModelDiff {
            source: model.sylow().elements().map(|x| x as u32).collect(),
            target: f.group().elements().map(|x| x as u32).collect(),
            expected: f.group().order(),
            found: model.sylow().order(),
        });
        return Ok(verification);
    };
    let mut first = None;
    for alpha in automorphisms(model.sylow(), &model.sylow().whole())? {
        let composed: Vec<u32> = alpha.images().iter().map(|&y| theta[y as usize]).collect();
        let found = graphs(&generated, &composed);
        if found == expected {
            verification.equal = true;
            return Ok(verification);
        }
        if first.is_none() {
            first = Some(found);
        }
    }
    verification.diff = first.and_then(|found| first_diff(f, &found));
    Ok(verification)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::fusion::fusion_of_group;
    use crate::models::{robinson_model, Flavor};

    #[test]
    fn robinson_models_realize_the_fusion() {
        for (g, p) in [(corpus::alternating(4), 2), (corpus::symmetric(4), 2), (corpus::symmetric(3), 3)] {
            let f = fusion_of_group(&g, p).unwrap();
            for flavor in [Flavor::CentricRadical, Flavor::Centric, Flavor::Essential] {
                let m = robinson_model(&g, p, flavor).unwrap();
                let v = verify_model(&m, &f).unwrap();
                assert!(v.equal, "{flavor}: {v:?}");
            }
        }
    }

    #[test]
    fn single_vertex_s_misses_the_automorphism() {
        let f = fusion_of_group(&corpus::alternating(4), 2).unwrap();
        let s = f.group().clone();
        let id: Vec<u32> = s.elements().map(|x| x as u32).collect();
        let m = StarOfGroups::new(2, vec![s.clone()], s.clone(), id, vec![]).unwrap();
        let v = verify_model(&m, &f).unwrap();
        assert!(!v.equal);
        let diff = v.diff.unwrap();
        assert_eq!(diff.source.len(), 4);
        assert_eq!(diff.target.len(), 4);
        assert_eq!((diff.expected, diff.found), (3, 1));
    }

    #[test]
    fn relabeled_sylow_is_matched_by_isomorphism() {
        let f = fusion_of_group(&corpus::alternating(4), 2).unwrap();
        let a4 = corpus::alternating(4);
        // a model over a different copy of V4 (from the permutation corpus)
        let v4 = crate::group::sylow_p(&a4, 2);
        let (s, emb) = crate::group::subgroup_as_group(&a4, &v4);
        let shuffled = corpus::klein_four();
        let theta = find_isomorphism(&shuffled, &s).unwrap();
        let into: Vec<u32> = theta.iter().map(|&k| emb[k as usize]).collect();
        let m = StarOfGroups::new(2, vec![a4], shuffled, into, vec![]).unwrap();
        let v = verify_model(&m, &f).unwrap();
        assert!(v.equal);
    }
}
