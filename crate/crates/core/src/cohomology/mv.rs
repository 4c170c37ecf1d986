use serde::Serialize;

use super::{bar_cohomology_with, induced_map, stable_elements_with, CohomologyOptions, CohomologySlice};
use crate::error::{Error, Result};
use crate::fusion::FusionSystem;
use crate::linalg::{FpMatrix, FpVector};
use crate::models::StarOfGroups;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MvRow {
    pub degree: usize,
    pub kernel: usize,
    /// `dim coker α_{n−1}` (zero in degree 0)
    pub cokernel: usize,
    pub dimension: usize,
}

struct Slices {
    vertices: Vec<CohomologySlice>,
    edges: Vec<CohomologySlice>,
}

fn slices(model: &StarOfGroups, n: usize, opts: CohomologyOptions) -> Result<Slices> {
    let p = model.prime();
    Ok(Slices {
        vertices: model.vertices().iter().map(|g| bar_cohomology_with(g, p, n, opts)).collect::<Result<_>>()?,
        edges: model.edges().iter().map(|e| bar_cohomology_with(&e.group, p, n, opts)).collect::<Result<_>>()?,
    })
}

/// `α_n: ⊕ H^n(L_i) → ⊕ H^n(E_j)`, `(x_i) ↦ (res x_1 − res x_j)_j`.
fn alpha(model: &StarOfGroups, s: &Slices) -> Result<FpMatrix> {
    let p = s.vertices[0].prime();
    let col_offsets: Vec<usize> = s
        .vertices
        .iter()
        .scan(0, |acc, v| {
            let here = *acc;
            *acc += v.dimension();
            Some(here)
        })
        .collect();
    let cols: usize = s.vertices.iter().map(CohomologySlice::dimension).sum();
    let rows: usize = s.edges.iter().map(CohomologySlice::dimension).sum();
    let mut m = FpMatrix::zero(p, rows, cols);
    let mut row = 0;
    for (e, edge) in model.edges().iter().enumerate() {
        let local = &s.edges[e];
        let base = induced_map(&edge.into_base, &s.vertices[0], local)?;
        let leaf = induced_map(&edge.into_vertex, &s.vertices[edge.vertex], local)?;
        for r in 0..local.dimension() {
            for c in 0..base.num_cols() {
                m.set(row + r, col_offsets[0] + c, base.get(r, c));
            }
            for c in 0..leaf.num_cols() {
                let v = (p - leaf.get(r, c)) % p;
                m.set(row + r, col_offsets[edge.vertex] + c, v);
            }
        }
        row += local.dimension();
    }
    Ok(m)
}

/// `dim H^n(BG) = dim ker α_n + dim coker α_{n−1}` for `n ≤ n_max`.
pub fn mv_dimensions(model: &StarOfGroups, n_max: usize, opts: CohomologyOptions) -> Result<Vec<MvRow>> {
    let mut out = Vec::new();
    let mut prev_coker = 0;
    for n in 0..=n_max {
        let s = slices(model, n, opts)?;
        let a = alpha(model, &s)?;
        let rank = a.rank();
        let kernel = a.num_cols() - rank;
        out.push(MvRow { degree: n, kernel, cokernel: prev_coker, dimension: kernel + prev_coker });
        prev_coker = a.num_rows() - rank;
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RestrictionAnalysis {
    pub degree: usize,
    pub dim_hg: usize,
    pub dim_image_res: usize,
    pub dim_w: usize,
    pub dim_stable: usize,
    pub dim_hs: usize,
    pub image_inside_stable: bool,
}

/// Restriction to `S` on the `ker α_n` part of `H^n(BG)`, against the stable
/// elements of `F`.
pub fn restriction_analysis(
    model: &StarOfGroups,
    f: &FusionSystem,
    n: usize,
    opts: CohomologyOptions,
) -> Result<RestrictionAnalysis> {
    if model.sylow().cayley_rows() != f.group().cayley_rows() || model.prime() != f.prime() {
        return Err(Error::ModelMalformed("the model's S is not the fusion system's S".into()));
    }
    let s = slices(model, n, opts)?;
    let a = alpha(model, &s)?;
    let kernel = a.nullspace();
    let prev_coker = if n == 0 {
        0
    } else {
        let prev = alpha(model, &slices(model, n - 1, opts)?)?;
        prev.num_rows() - prev.rank()
    };
    let stable = stable_elements_with(f, n, opts, false)?;
    let hs = stable.ambient();
    let res = induced_map(model.sylow_into_base(), &s.vertices[0], hs)?;
    let p = hs.prime();
    let d0 = s.vertices[0].dimension();
    let images: Vec<FpVector> = kernel
        .iter()
        .map(|x| {
            let x0 = FpVector::from_entries(p, &(0..d0).map(|k| x.get(k)).collect::<Vec<_>>());
            res.mul_vec(&x0)
        })
        .collect();
    let dim_image_res = FpMatrix::from_rows(p, hs.dimension(), images.clone()).rank();
    let dim_hg = kernel.len() + prev_coker;
    Ok(RestrictionAnalysis {
        degree: n,
        dim_hg,
        dim_image_res,
        dim_w: dim_hg - dim_image_res,
        dim_stable: stable.dimension(),
        dim_hs: hs.dimension(),
        image_inside_stable: images.iter().all(|y| stable.contains(y)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::bar_cohomology;
    use crate::corpus;
    use crate::fusion::fusion_of_group;
    use crate::models::{robinson_model, Edge, Flavor};

    fn free_product() -> StarOfGroups {
        let c2 = corpus::cyclic(2);
        StarOfGroups::new(
            2,
            vec![c2.clone(), c2.clone()],
            c2,
            vec![0, 1],
            vec![Edge { group: corpus::cyclic(1), vertex: 1, into_base: vec![0], into_vertex: vec![0] }],
        )
        .unwrap()
    }

    #[test]
    fn free_product_of_two_c2() {
        let rows = mv_dimensions(&free_product(), 3, CohomologyOptions::default()).unwrap();
        assert_eq!(rows.iter().map(|r| r.dimension).collect::<Vec<_>>(), vec![1, 2, 2, 2]);
        let f = FusionSystem::inner(&corpus::cyclic(2), 2).unwrap();
        let r = restriction_analysis(&free_product(), &f, 1, CohomologyOptions::default()).unwrap();
        assert_eq!((r.dim_hg, r.dim_image_res, r.dim_w), (2, 1, 1));
        assert!(r.image_inside_stable);
    }

    #[test]
    fn single_vertex_is_the_group() {
        let d8 = corpus::dihedral(8);
        let id: Vec<u32> = (0..8).collect();
        let m = StarOfGroups::new(2, vec![d8.clone()], d8.clone(), id, vec![]).unwrap();
        let rows = mv_dimensions(&m, 2, CohomologyOptions::default()).unwrap();
        for r in &rows {
            assert_eq!(r.dimension, bar_cohomology(&d8, 2, r.degree).unwrap().dimension());
        }
        let f = FusionSystem::inner(&d8, 2).unwrap();
        let r = restriction_analysis(&m, &f, 2, CohomologyOptions::default()).unwrap();
        assert_eq!((r.dim_w, r.dim_image_res), (0, r.dim_hs));
    }

    #[test]
    fn degenerate_s4_amalgam_low_degrees() {
        let s4 = corpus::symmetric(4);
        let m = robinson_model(&s4, 2, Flavor::CentricRadical).unwrap();
        let f = fusion_of_group(&s4, 2).unwrap();
        let rows = mv_dimensions(&m, 2, CohomologyOptions::default()).unwrap();
        assert_eq!(rows.iter().map(|r| r.dimension).collect::<Vec<_>>(), vec![1, 1, 2]);
        let r = restriction_analysis(&m, &f, 2, CohomologyOptions::default()).unwrap();
        assert!(r.image_inside_stable);
        assert_eq!(r.dim_image_res + r.dim_w, r.dim_hg);
    }
}
