//! Mod-p cohomology of finite groups from the normalized bar complex, and the
//! constructions built on it: induced maps, stable elements, Mayer–Vietoris
//! dimensions for stars of groups and Künneth comparisons.

mod bar;
mod mv;
mod stable;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::linalg::{row_space, FpMatrix, FpVector, TaggedEchelon};
use bar::BarComplex;

pub use mv::{mv_dimensions, restriction_analysis, MvRow, RestrictionAnalysis};
pub use stable::{kunneth_check, stable_elements, stable_elements_with, KunnethRow, StableSubspace};

/// Largest cochain dimension `(|G| − 1)^n` computed by default.
pub const DEFAULT_COCHAIN_BUDGET: usize = 100_000;

#[derive(Clone, Copy, Debug)]
pub struct CohomologyOptions {
    pub budget: usize,
    pub seed: u64,
}

impl Default for CohomologyOptions {
    fn default() -> Self {
        CohomologyOptions { budget: DEFAULT_COCHAIN_BUDGET, seed: 0x5eed }
    }
}

/// `H^n(G; GF(p))` with explicit cocycle representatives.
#[derive(Clone, Debug)]
pub struct CohomologySlice {
    group: FiniteGroup,
    prime: u32,
    degree: usize,
    cochain_dim: usize,
    cocycles: Vec<FpVector>,
    coboundaries: Vec<FpVector>,
    representatives: Vec<FpVector>,
    echelon: TaggedEchelon,
}

#[derive(Clone, Debug, Serialize)]
pub struct SliceSummary {
    pub order: usize,
    pub prime: u32,
    pub degree: usize,
    pub cochains: usize,
    pub cocycles: usize,
    pub coboundaries: usize,
    pub dimension: usize,
}

pub fn bar_cohomology(group: &FiniteGroup, p: usize, n: usize) -> Result<CohomologySlice> {
    bar_cohomology_with(group, p, n, CohomologyOptions::default())
}

pub fn bar_cohomology_with(
    group: &FiniteGroup,
    p: usize,
    n: usize,
    opts: CohomologyOptions,
) -> Result<CohomologySlice> {
    if !crate::group::is_prime(p) {
        return Err(Error::Input(format!("{p} is not prime")));
    }
    let p = p as u32;
    let bar = BarComplex::new(group, p);
    let needed = bar.m.checked_pow(n as u32).unwrap_or(usize::MAX);
    if needed > opts.budget {
        return Err(Error::CochainBudget { order: group.order(), degree: n, needed, budget: opts.budget });
    }
    if n == 0 {
        let one = FpVector::unit(p, 1, 0);
        let mut echelon = TaggedEchelon::new(p, 1, 1);
        echelon.insert(&one, FpVector::unit(p, 1, 0));
        return Ok(CohomologySlice {
            group: group.clone(),
            prime: p,
            degree: 0,
            cochain_dim: 1,
            cocycles: vec![one.clone()],
            coboundaries: Vec::new(),
            representatives: vec![one],
            echelon,
        });
    }
    let len = bar.dim(n);
    let cocycles = if bar.m == 0 { Vec::new() } else { cocycle_basis(&bar, n, opts.seed)? };
    let coboundaries = if n == 1 || bar.m == 0 {
        Vec::new()
    } else {
        row_space(p, len, bar.differential_columns(n - 1))
    };
    let h = cocycles.len() - coboundaries.len();
    let mut echelon = TaggedEchelon::new(p, len, h);
    for b in &coboundaries {
        echelon.insert(b, FpVector::zero(p, h));
    }
    let mut representatives = Vec::with_capacity(h);
    for z in &cocycles {
        if representatives.len() == h {
            break;
        }
        if echelon.insert(z, FpVector::unit(p, h, representatives.len())) {
            representatives.push(z.clone());
        }
    }
    if representatives.len() != h {
        return Err(Error::Input("coboundaries are not contained in the cocycles".into()));
    }
    Ok(CohomologySlice {
        group: group.clone(),
        prime: p,
        degree: n,
        cochain_dim: len,
        cocycles,
        coboundaries,
        representatives,
        echelon,
    })
}

/// `ker(d: C^n → C^{n+1})`, certified against `d` and retried with a fresh
/// seed if the compressed system lost rank.
fn cocycle_basis(bar: &BarComplex, n: usize, seed: u64) -> Result<Vec<FpVector>> {
    for attempt in 0..8u64 {
        let m = bar.kernel_matrix(n, seed.wrapping_add(attempt.wrapping_mul(0x9e37_79b9_7f4a_7c15)));
        let kernel = m.nullspace();
        if bar.all_cocycles(n, &kernel) {
            return Ok(kernel);
        }
    }
    Err(Error::Input("cocycle kernel could not be certified".into()))
}

impl CohomologySlice {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dimension(&self) -> usize {
        self.representatives.len()
    }

    pub fn cochain_dimension(&self) -> usize {
        self.cochain_dim
    }

    pub fn cocycle_basis(&self) -> &[FpVector] {
        &self.cocycles
    }

    pub fn coboundary_basis(&self) -> &[FpVector] {
        &self.coboundaries
    }

    pub fn representatives(&self) -> &[FpVector] {
        &self.representatives
    }

    pub fn summary(&self) -> SliceSummary {
        SliceSummary {
            order: self.group.order(),
            prime: self.prime,
            degree: self.degree,
            cochains: self.cochain_dim,
            cocycles: self.cocycles.len(),
            coboundaries: self.coboundaries.len(),
            dimension: self.dimension(),
        }
    }

    /// Coordinates of the class of a cocycle in the representative basis.
    pub fn class_of(&self, z: &FpVector) -> Result<FpVector> {
        if z.len() != self.cochain_dim {
            return Err(Error::Input(format!(
                "cochain of length {} in a space of dimension {}",
                z.len(),
                self.cochain_dim
            )));
        }
        let (rem, tag) = self.echelon.reduce(z);
        if !rem.is_zero() {
            return Err(Error::Input("not a cocycle".into()));
        }
        Ok(tag)
    }

    /// `d z` for a cochain in this degree.
    pub fn differential(&self, z: &FpVector) -> FpVector {
        BarComplex::new(&self.group, self.prime).differential(self.degree, z)
    }

    /// Pulls a cochain on the codomain back along `map` (domain element ↦
    /// codomain element).
    fn pullback(&self, map: &[u32], domain: &CohomologySlice, z: &FpVector) -> FpVector {
        let n = self.degree;
        if n == 0 {
            return z.clone();
        }
        let bar = BarComplex::new(&domain.group, self.prime);
        let cod = BarComplex::new(&self.group, self.prime);
        let mut out = FpVector::zero(self.prime, domain.cochain_dim);
        let mut image = vec![0usize; n];
        'rows: for idx in 0..domain.cochain_dim {
            let t = bar.tuple(idx, n);
            for (slot, &x) in image.iter_mut().zip(&t) {
                *slot = map[x] as usize;
                if *slot == 0 {
                    continue 'rows;
                }
            }
            let v = z.get(cod.index(&image));
            if v != 0 {
                out.set(idx, v);
            }
        }
        out
    }
}

/// The map `f*: H^n(cod) → H^n(dom)` for a homomorphism given by the images
/// of the domain's elements. Row `i`, column `j` is the coefficient of the
/// `i`-th domain class in `f*` of the `j`-th codomain class, so
/// `induced(g ∘ f) = induced(f) · induced(g)`.
pub fn induced_map(map: &[u32], codomain: &CohomologySlice, domain: &CohomologySlice) -> Result<FpMatrix> {
    if codomain.degree != domain.degree {
        return Err(Error::DegreeMismatch(codomain.degree, domain.degree));
    }
    if codomain.prime != domain.prime {
        return Err(Error::Input("slices over different primes".into()));
    }
    if map.len() != domain.group.order() {
        return Err(Error::Input("map does not cover the domain".into()));
    }
    for x in domain.group.elements() {
        for y in domain.group.elements() {
            let lhs = map[domain.group.mul(x, y)] as usize;
            let rhs = codomain.group.mul(map[x] as usize, map[y] as usize);
            if lhs != rhs {
                return Err(Error::NotAHomomorphism(format!("f({x}·{y}) ≠ f({x})·f({y})")));
            }
        }
    }
    let mut out = FpMatrix::zero(domain.prime, domain.dimension(), codomain.dimension());
    for (j, z) in codomain.representatives.iter().enumerate() {
        let pulled = codomain.pullback(map, domain, z);
        let coords = domain.class_of(&pulled)?;
        for i in 0..domain.dimension() {
            out.set(i, j, coords.get(i));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    /// Brute-force `dim H^n` over GF(2) for tiny groups from dense
    /// differentials on unnormalized cochains.
    fn dense_dimension(g: &FiniteGroup, n: usize) -> usize {
        let k = g.order();
        let d = |deg: usize| -> FpMatrix {
            // d: functions on G^deg → functions on G^{deg+1}
            let rows = k.pow(deg as u32 + 1);
            let cols = k.pow(deg as u32);
            let mut m = FpMatrix::zero(2, rows, cols);
            for r in 0..rows {
                let mut t = vec![0; deg + 1];
                let mut x = r;
                for s in t.iter_mut().rev() {
                    *s = x % k;
                    x /= k;
                }
                let idx = |v: &[usize]| v.iter().fold(0, |a, &y| a * k + y);
                let mut faces = vec![idx(&t[1..])];
                for i in 0..deg {
                    let mut v = t.clone();
                    v[i] = g.mul(t[i], t[i + 1]);
                    v.remove(i + 1);
                    faces.push(idx(&v));
                }
                faces.push(idx(&t[..deg]));
                for c in faces {
                    let v = m.get(r, c) ^ 1;
                    m.set(r, c, v);
                }
            }
            m
        };
        let dn = d(n);
        let z = k.pow(n as u32) - dn.rank();
        let b = if n == 0 { 0 } else { d(n - 1).rank() };
        z - b
    }

    #[test]
    fn cyclic_two_has_one_class_per_degree() {
        let c2 = corpus::cyclic(2);
        for n in 0..=4 {
            assert_eq!(bar_cohomology(&c2, 2, n).unwrap().dimension(), 1, "degree {n}");
        }
    }

    #[test]
    fn matches_unnormalized_oracle() {
        for name in ["C2xC2", "C4", "S3", "C3"] {
            let g = corpus::by_name(name).unwrap();
            for n in 0..=2 {
                let fast = bar_cohomology(&g, 2, n).unwrap().dimension();
                assert_eq!(fast, dense_dimension(&g, n), "{name} degree {n}");
            }
        }
    }

    #[test]
    fn known_dimensions() {
        let a4 = corpus::alternating(4);
        assert_eq!(bar_cohomology(&a4, 2, 1).unwrap().dimension(), 0);
        let v4 = corpus::klein_four();
        let dims: Vec<usize> = (0..=3).map(|n| bar_cohomology(&v4, 2, n).unwrap().dimension()).collect();
        assert_eq!(dims, vec![1, 2, 3, 4]);
        let c3 = corpus::cyclic(3);
        let dims: Vec<usize> = (0..=3).map(|n| bar_cohomology(&c3, 3, n).unwrap().dimension()).collect();
        assert_eq!(dims, vec![1, 1, 1, 1]);
        // odd-order group at p = 2
        assert_eq!(bar_cohomology(&c3, 2, 2).unwrap().dimension(), 0);
    }

    #[test]
    fn d_squared_vanishes() {
        let g = corpus::by_name("D8").unwrap();
        let bar = BarComplex::new(&g, 2);
        for n in 1..=2 {
            for col in bar.differential_columns(n - 1) {
                assert!(bar.differential(n, &col).is_zero());
            }
        }
        let g = corpus::by_name("C3").unwrap();
        let bar = BarComplex::new(&g, 3);
        for col in bar.differential_columns(1) {
            assert!(bar.differential(2, &col).is_zero());
        }
    }

    #[test]
    fn projected_kernel_agrees_with_direct() {
        let g = corpus::dihedral(8);
        let bar = BarComplex::new(&g, 2);
        // n = 2: 343 rows vs 49 columns, so the compressed path is taken
        let direct = {
            let mut m = FpMatrix::zero(2, bar.dim(3), bar.dim(2));
            bar.for_each_row(2, |row, faces| {
                for &(c, _) in faces {
                    let v = m.get(row, c) ^ 1;
                    m.set(row, c, v);
                }
            });
            m.nullspace().len()
        };
        assert_eq!(bar.kernel_matrix(2, 7).nullspace().len(), direct);
    }

    #[test]
    fn budget_is_enforced() {
        let s4 = corpus::symmetric(4);
        let err = bar_cohomology_with(&s4, 2, 4, CohomologyOptions { budget: 100_000, seed: 1 }).unwrap_err();
        assert!(matches!(err, Error::CochainBudget { needed: 279_841, .. }));
    }

    #[test]
    fn functoriality_and_inner_automorphisms() {
        let d8 = corpus::dihedral(8);
        let h = bar_cohomology(&d8, 2, 2).unwrap();
        assert_eq!(h.dimension(), 3);
        let id: Vec<u32> = (0..8).collect();
        assert_eq!(induced_map(&id, &h, &h).unwrap(), FpMatrix::identity(2, 3));
        for g in d8.elements() {
            let conj: Vec<u32> = d8.elements().map(|x| d8.conj(g, x) as u32).collect();
            assert_eq!(induced_map(&conj, &h, &h).unwrap(), FpMatrix::identity(2, 3));
        }
        // composition of two automorphisms of V4
        let v4 = corpus::klein_four();
        let hv = bar_cohomology(&v4, 2, 2).unwrap();
        let autos = crate::group::automorphisms(&v4, &v4.whole()).unwrap();
        for f in &autos {
            for g in &autos {
                let gf = f.then(g).unwrap();
                let lhs = induced_map(gf.images(), &hv, &hv).unwrap();
                let rhs = induced_map(f.images(), &hv, &hv)
                    .unwrap()
                    .mul(&induced_map(g.images(), &hv, &hv).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }
}
