use serde::Serialize;

use super::{bar_cohomology_with, induced_map, CohomologyOptions, CohomologySlice};
use crate::error::Result;
use crate::fusion::{product_fusion, FusionSystem};
use crate::group::subgroup_as_group;
use crate::linalg::{row_space, FpMatrix, FpVector};

/// The stable elements of `H^n(S)` for a fusion system, as a subspace in
/// the coordinates of the representative basis of `H^n(S)`.
#[derive(Clone, Debug)]
pub struct StableSubspace {
    degree: usize,
    ambient: CohomologySlice,
    basis: Vec<FpVector>,
}

impl StableSubspace {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[FpVector] {
        &self.basis
    }

    /// `H^n(S)` itself.
    pub fn ambient(&self) -> &CohomologySlice {
        &self.ambient
    }

    pub fn contains(&self, x: &FpVector) -> bool {
        let p = self.ambient.prime();
        let before = self.basis.len();
        let mut all = self.basis.clone();
        all.push(x.clone());
        row_space(p, x.len(), all).len() == before
    }
}

pub fn stable_elements(f: &FusionSystem, n: usize) -> Result<StableSubspace> {
    stable_elements_with(f, n, CohomologyOptions::default(), false)
}

/// Joint kernel of `φ* − res` over `φ ∈ Hom_F(P, S)`, for every `P` or only
/// for the F-centric ones.
pub fn stable_elements_with(
    f: &FusionSystem,
    n: usize,
    opts: CohomologyOptions,
    centric_only: bool,
) -> Result<StableSubspace> {
    let s = f.group();
    let ambient = bar_cohomology_with(s, f.prime(), n, opts)?;
    let p = ambient.prime();
    let dim = ambient.dimension();
    let mut constraints: Vec<FpVector> = Vec::new();
    for (i, sub) in f.subgroups().iter().enumerate() {
        if centric_only && !f.is_centric(i) {
            continue;
        }
        let (pg, emb) = subgroup_as_group(s, sub);
        let local = bar_cohomology_with(&pg, f.prime(), n, opts)?;
        if local.dimension() == 0 {
            continue;
        }
        let res = induced_map(&emb, &ambient, &local)?;
        for m in f.morphisms_from(i) {
            if m.images() == emb.as_slice() {
                continue;
            }
            let phi = induced_map(m.images(), &ambient, &local)?;
            for r in 0..local.dimension() {
                let mut row = phi.row(r).clone();
                row.add_scaled(res.row(r), p - 1);
                if !row.is_zero() {
                    constraints.push(row);
                }
            }
        }
    }
    let basis = if constraints.is_empty() {
        (0..dim).map(|k| FpVector::unit(p, dim, k)).collect()
    } else {
        FpMatrix::from_rows(p, dim, row_space(p, dim, constraints)).nullspace()
    };
    Ok(StableSubspace { degree: n, ambient, basis })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KunnethRow {
    pub degree: usize,
    pub product: usize,
    pub convolution: usize,
    pub equal: bool,
}

/// Stable-element dimensions of `F₁ × F₂` against the convolution of those
/// of the factors, degree by degree.
pub fn kunneth_check(
    f1: &FusionSystem,
    f2: &FusionSystem,
    n_max: usize,
    opts: CohomologyOptions,
) -> Result<Vec<KunnethRow>> {
    let prod = product_fusion(f1, f2)?;
    let mut d1 = Vec::new();
    let mut d2 = Vec::new();
    for n in 0..=n_max {
        d1.push(stable_elements_with(f1, n, opts, false)?.dimension());
        d2.push(stable_elements_with(f2, n, opts, false)?.dimension());
    }
    let mut rows = Vec::new();
    for n in 0..=n_max {
        let product = stable_elements_with(&prod, n, opts, false)?.dimension();
        let convolution = (0..=n).map(|i| d1[i] * d2[n - i]).sum();
        rows.push(KunnethRow { degree: n, product, convolution, equal: product == convolution });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::bar_cohomology;
    use crate::corpus;
    use crate::fusion::fusion_of_group;

    #[test]
    fn inner_system_is_everything() {
        let d8 = corpus::dihedral(8);
        let f = FusionSystem::inner(&d8, 2).unwrap();
        for n in 0..=2 {
            let st = stable_elements(&f, n).unwrap();
            assert_eq!(st.dimension(), st.ambient().dimension());
        }
    }

    #[test]
    fn a4_matches_group_cohomology() {
        let a4 = corpus::alternating(4);
        let f = fusion_of_group(&a4, 2).unwrap();
        for n in 0..=3 {
            let st = stable_elements(&f, n).unwrap();
            let centric = stable_elements_with(&f, n, CohomologyOptions::default(), true).unwrap();
            assert_eq!(st.basis(), centric.basis());
            assert_eq!(st.dimension(), bar_cohomology(&a4, 2, n).unwrap().dimension(), "degree {n}");
        }
        assert_eq!(stable_elements(&f, 2).unwrap().dimension(), 1);
    }

    #[test]
    fn kunneth_small() {
        let c2 = FusionSystem::inner(&corpus::cyclic(2), 2).unwrap();
        let rows = kunneth_check(&c2, &c2, 3, CohomologyOptions::default()).unwrap();
        assert_eq!(rows.iter().map(|r| r.product).collect::<Vec<_>>(), vec![1, 2, 3, 4]);
        assert!(rows.iter().all(|r| r.equal));
    }
}
