//! The declarative container catalogue: interface signatures, per-operation
//! Hoare triples bound to model operations, loading, and validation.

pub mod catalogue;
pub mod hoare;
pub mod interface;
pub mod shared;
pub mod validate;

pub use catalogue::{
    assemble, builtin_interfaces, load_catalogue, parse_container, parse_interfaces, Catalogue,
    LoadError, RawContainer, RawOp,
};
pub use hoare::{
    apply_post_op, eval_invariant, eval_pre, post_op_result_value, ContainerSpec, HoareSpec,
    PostOp,
};
pub use interface::{InterfaceRegistry, InterfaceSig, OpShape};
pub use shared::{shared_spec_instances, SharedGroup, SharedScope};
pub use validate::{validate_spec, SpecDiagnostic};
