//! Graph automorphism groups, canonical certificates and isomorphism.

mod partition;
mod search;

pub use partition::{equitable_refinement, OrderedPartition};
pub use search::{
    are_isomorphic, automorphism_group, canonical_certificate, common_neighborhood, to_hex,
    AutResult, DEFAULT_NODE_BUDGET,
};
