use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("group too large: closure exceeds {bound} elements")]
    GroupTooLarge { bound: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid Cayley table: {0}")]
    InvalidTable(String),

    #[error("lattice too large: group of order {order} exceeds lattice bound {bound}")]
    LatticeTooLarge { order: usize, bound: usize },

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("closure too large: more than {budget} morphisms")]
    ClosureTooLarge { budget: usize },

    #[error("subgroup is not fully normalized in the fusion system")]
    NotFullyNormalized,

    #[error("subgroup is not fully centralized in the fusion system")]
    NotFullyCentralized,

    #[error("fusion system is not saturated: {0}")]
    NotSaturated(String),

    #[error(
        "cochain budget exceeded: group of order {order} in degree {degree} needs {needed} \
         cochain dimensions (budget {budget}); lower the degree cap"
    )]
    CochainBudget {
        order: usize,
        degree: usize,
        needed: usize,
        budget: usize,
    },

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("model malformed: {0}")]
    ModelMalformed(String),

    #[error("Alperin condition fails for vertex {vertex}: {condition}")]
    AlperinCondition { vertex: usize, condition: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("permutation budget exceeded: degree {degree} > {budget}")]
    PermutationBudget { degree: usize, budget: usize },

    #[error("input error: {0}")]
    Input(String),
}
