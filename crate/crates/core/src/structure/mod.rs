mod local;
mod poly_struct;
mod rational;
mod verify;

pub use poly_struct::{
    extract_poly_structure, inf_structure, normalize_basis, partial_multiplicities, subspace_minimal_basis,
    IdentityCheck, InfStructure, PolyStructuralData, Subspace,
};
pub use rational::{clear_denominators, extract_rational_structure, RatStructuralData};
pub use verify::{verify, Mismatch, Realization, VerifyReport};
pub use local::{local_structure, LocalBlock, LocalStructure};
