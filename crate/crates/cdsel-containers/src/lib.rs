//! An executable catalogue of container implementations.
//!
//! Every container here implements one or more of the three interface traits
//! ([`ContainerT`], [`IndexableT`], [`StackT`]) and carries an abstraction
//! function ([`ToModel`]) relating its concrete state to a flat list model.
//! The list model is the state on which all specification checking runs, so
//! the abstraction functions are the bridge between the implementations in
//! this crate and the declarative specifications shipped alongside them.
//!
//! The crate is deliberately dependency-free: generated program variants link
//! against it and should build fast.

mod traits;

pub mod dynamic;
pub mod impls;
pub mod mutants;

pub use dynamic::{standard_registry, ContainerFactory, DynContainer, OpOutcome};
pub use impls::{
    BTreeSetContainer, HashSetContainer, LazySortedVec, LazyUniqueVec, LinkedListContainer,
    Queue, SortedVec, Stack, UniqueVec, VecContainer,
};
pub use traits::{ContainerT, IndexableT, StackT, ToModel};
