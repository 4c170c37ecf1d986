//! Stars of finite groups (iterated amalgams over subgroups of a Sylow
//! subgroup of the central vertex) and HNN-style presentations.

mod hnn;
mod normal_form;
mod permrep;
mod refine;
mod robinson;
mod verify;

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{is_monomorphism, is_p_group, p_part, FiniteGroup, Subgroup};
use crate::Rational;

pub use hnn::{
    abelianization, finite_order_presentation, leary_stancu_presentation, Abelianization, HnnLetter, HnnModel,
    Presentation, PresentationStyle,
};
pub use normal_form::ReducedWord;
pub use permrep::{
    default_complements, free_kernel_perm_rep, free_kernel_perm_rep_with_budget, linearize, LinearizedModule,
    PermutationRep, VertexRestriction, DEFAULT_PERMUTATION_BUDGET,
};
pub use refine::refine_model;
pub use robinson::{robinson_model, AlperinReport, Flavor};
pub use verify::{model_fusion, verify_model, ModelDiff, ModelVerification};

/// An edge joining the central vertex 0 to `vertex`.
#[derive(Clone, Debug)]
pub struct Edge {
    pub group: FiniteGroup,
    pub vertex: usize,
    /// Image in the central vertex group of each edge element (lands in `S`).
    pub into_base: Vec<u32>,
    /// Image in the leaf vertex group of each edge element.
    pub into_vertex: Vec<u32>,
}

/// A star-shaped graph of finite groups: vertex 0 is the center and holds
/// the Sylow subgroup `S`, every other vertex is joined to it by one edge.
#[derive(Clone, Debug)]
pub struct StarOfGroups {
    prime: usize,
    vertices: Vec<FiniteGroup>,
    sylow: FiniteGroup,
    sylow_into_base: Vec<u32>,
    edges: Vec<Edge>,
    base_points: Vec<Option<Subgroup>>,
    alperin: Vec<AlperinReport>,
    cosets: OnceLock<Vec<normal_form::EdgeCosets>>,
}

impl StarOfGroups {
    /// Validates the star shape, the edge monomorphisms, that every edge
    /// lands inside `S` and that `S` is Sylow in the central vertex.
    pub fn new(
        prime: usize,
        vertices: Vec<FiniteGroup>,
        sylow: FiniteGroup,
        sylow_into_base: Vec<u32>,
        edges: Vec<Edge>,
    ) -> Result<Self> {
        let bad = |msg: String| Err(Error::ModelMalformed(msg));
        if vertices.is_empty() {
            return bad("no vertices".into());
        }
        if !crate::group::is_prime(prime) {
            return Err(Error::Input(format!("{prime} is not prime")));
        }
        let base = &vertices[0];
        if !is_p_group(sylow.order(), prime) || sylow.order() != p_part(base.order(), prime) {
            return bad(format!("S of order {} is not a Sylow {prime}-subgroup of the central vertex", sylow.order()));
        }
        if !is_monomorphism(&sylow, base, &sylow_into_base) {
            return bad("S does not embed in the central vertex".into());
        }
        if edges.len() + 1 != vertices.len() {
            return bad(format!("{} vertices need {} edges in a star", vertices.len(), vertices.len() - 1));
        }
        let mut seen = vec![false; vertices.len()];
        for (k, e) in edges.iter().enumerate() {
            if e.vertex == 0 || e.vertex >= vertices.len() || seen[e.vertex] {
                return bad(format!("edge {k} does not join the center to a fresh vertex"));
            }
            seen[e.vertex] = true;
            if !is_monomorphism(&e.group, base, &e.into_base) {
                return bad(format!("edge {k}: map into the center is not a monomorphism"));
            }
            if !is_monomorphism(&e.group, &vertices[e.vertex], &e.into_vertex) {
                return bad(format!("edge {k}: map into vertex {} is not a monomorphism", e.vertex));
            }
            if e.into_base.iter().any(|x| !sylow_into_base.contains(x)) {
                return bad(format!("edge {k} does not land inside S"));
            }
        }
        let n = vertices.len();
        Ok(StarOfGroups {
            prime,
            vertices,
            sylow,
            sylow_into_base,
            edges,
            base_points: vec![None; n],
            alperin: Vec::new(),
            cosets: OnceLock::new(),
        })
    }

    pub fn prime(&self) -> usize {
        self.prime
    }

    pub fn vertices(&self) -> &[FiniteGroup] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// The edge ending at `vertex` (≥ 1).
    pub fn edge_to(&self, vertex: usize) -> Option<&Edge> {
        self.edges.iter().find(|e| e.vertex == vertex)
    }

    pub fn sylow(&self) -> &FiniteGroup {
        &self.sylow
    }

    pub fn sylow_into_base(&self) -> &[u32] {
        &self.sylow_into_base
    }

    /// `P_i` as subgroups of `S`, when the model was built from them.
    pub fn base_points(&self) -> &[Option<Subgroup>] {
        &self.base_points
    }

    pub fn alperin_reports(&self) -> &[AlperinReport] {
        &self.alperin
    }

    /// Edge element ↦ element of `S`.
    pub fn edge_into_sylow(&self, e: &Edge) -> Vec<u32> {
        let mut back = vec![u32::MAX; self.vertices[0].order()];
        for (k, &x) in self.sylow_into_base.iter().enumerate() {
            back[x as usize] = k as u32;
        }
        e.into_base.iter().map(|&x| back[x as usize]).collect()
    }

    /// The image of the `S`-side of each vertex: `S` itself in the center and
    /// the edge image in a leaf, as subgroups of the vertex groups.
    pub fn vertex_sylow(&self, v: usize) -> Subgroup {
        let (group, map) = if v == 0 {
            (&self.vertices[0], &self.sylow_into_base)
        } else {
            let e = self.edge_to(v).expect("validated star");
            (&self.vertices[v], &e.into_vertex)
        };
        let mut elems = map.clone();
        elems.sort_unstable();
        Subgroup::from_elements_unchecked(group, elems)
    }

    pub(crate) fn with_base_points(mut self, points: Vec<Option<Subgroup>>) -> Self {
        self.base_points = points;
        self
    }

    pub(crate) fn with_alperin(mut self, reports: Vec<AlperinReport>) -> Self {
        self.alperin = reports;
        self
    }

    pub fn summary(&self) -> ModelSummary {
        ModelSummary {
            prime: self.prime,
            sylow_order: self.sylow.order(),
            vertex_orders: self.vertices.iter().map(FiniteGroup::order).collect(),
            edges: self.edges.iter().map(|e| (e.vertex, e.group.order())).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ModelSummary {
    pub prime: usize,
    pub sylow_order: usize,
    pub vertex_orders: Vec<usize>,
    /// `(vertex, edge group order)` per edge.
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerCharacteristic {
    pub chi: Rational,
    /// `χ · |S| · lcm`, an integer.
    pub d: BigInt,
    pub sylow_order: usize,
    /// `lcm` of `[K_i : N_S(P_i)]`, with `[K_1 : S]` for the center.
    pub lcm: BigInt,
    pub integral: bool,
}

impl EulerCharacteristic {
    pub fn sign(&self) -> &'static str {
        if self.d.is_positive() {
            "positive"
        } else if self.d.is_negative() {
            "negative"
        } else {
            "zero"
        }
    }
}

/// `χ = Σ 1/|K_i| − Σ 1/|E_i|`, exactly.
pub fn euler_characteristic(model: &StarOfGroups) -> EulerCharacteristic {
    let inv = |n: usize| Rational::new(BigInt::one(), BigInt::from(n));
    let mut chi = Rational::zero();
    for v in &model.vertices {
        chi += inv(v.order());
    }
    for e in &model.edges {
        chi -= inv(e.group.order());
    }
    let mut lcm = BigInt::from(model.vertices[0].order() / model.sylow.order());
    for e in &model.edges {
        lcm = lcm.lcm(&BigInt::from(model.vertices[e.vertex].order() / e.group.order()));
    }
    let scaled = &chi * Rational::from_integer(BigInt::from(model.sylow.order()) * &lcm);
    let integral = scaled.is_integer();
    EulerCharacteristic { chi, d: scaled.to_integer(), sylow_order: model.sylow.order(), lcm, integral }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn euler_of_small_models() {
        let a4 = corpus::alternating(4);
        let m = robinson_model(&a4, 2, Flavor::CentricRadical).unwrap();
        let e = euler_characteristic(&m);
        assert_eq!(e.chi, Rational::new(1.into(), 12.into()));
        assert!(e.integral);
        assert_eq!(e.sign(), "positive");

        let s4 = corpus::symmetric(4);
        let m = robinson_model(&s4, 2, Flavor::CentricRadical).unwrap();
        let e = euler_characteristic(&m);
        assert_eq!(e.chi, Rational::new(1.into(), 24.into()));
        assert_eq!(e.d, BigInt::from(1));
    }

    #[test]
    fn malformed_models_are_rejected() {
        let c2 = corpus::cyclic(2);
        let c4 = corpus::cyclic(4);
        // S of order 2 is not Sylow in C4
        assert!(StarOfGroups::new(2, vec![c4], c2.clone(), vec![0, 2], vec![]).is_err());
        // not a homomorphism
        assert!(StarOfGroups::new(2, vec![c2.clone()], c2.clone(), vec![1, 0], vec![]).is_err());
        // a leaf without an edge
        assert!(StarOfGroups::new(2, vec![c2.clone(), c2.clone()], c2, vec![0, 1], vec![]).is_err());
    }
}
