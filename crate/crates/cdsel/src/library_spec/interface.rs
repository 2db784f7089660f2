//! Interface signatures: named sets of operation signatures, the unit of
//! syntactic filtering.

use std::collections::BTreeMap;

use crate::spec_lang::types::{Scheme, SpecType};

/// The shape of one operation signature. Mutators may change the container;
/// observers never do. `elem?` results are nullable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum OpShape {
    /// `insert(elem)`, `push(elem)`
    MutatorElemUnit,
    /// `clear()`
    MutatorUnit,
    /// `remove(elem) -> elem?`
    MutatorElemOptElem,
    /// `pop() -> elem?`
    MutatorOptElem,
    /// `contains(elem) -> bool`
    ObserverElemBool,
    /// `is_empty() -> bool`
    ObserverBool,
    /// `len() -> size`
    ObserverSize,
    /// `nth(index) -> elem?`
    ObserverIndexOptElem,
    /// `first() -> elem?`, `last() -> elem?`
    ObserverOptElem,
}

impl OpShape {
    pub fn is_mutator(&self) -> bool {
        matches!(
            self,
            OpShape::MutatorElemUnit
                | OpShape::MutatorUnit
                | OpShape::MutatorElemOptElem
                | OpShape::MutatorOptElem
        )
    }

    /// Whether the operation takes an auxiliary input (an element or index).
    pub fn takes_aux(&self) -> bool {
        matches!(
            self,
            OpShape::MutatorElemUnit
                | OpShape::MutatorElemOptElem
                | OpShape::ObserverElemBool
                | OpShape::ObserverIndexOptElem
        )
    }

    /// Whether the operation returns a value alongside the container.
    pub fn returns_value(&self) -> bool {
        !matches!(self, OpShape::MutatorElemUnit | OpShape::MutatorUnit)
    }

    /// The type a property sees when it references this operation under an
    /// interface bound: mutators returning nothing denote the post-state
    /// container, everything else denotes the returned value.
    pub fn placeholder_scheme(&self) -> Scheme {
        let a = || SpecType::Var(0);
        let con = || SpecType::con(a());
        let ty = match self {
            OpShape::MutatorElemUnit => SpecType::arrows([con(), a()], con()),
            OpShape::MutatorUnit => SpecType::arrow(con(), con()),
            OpShape::MutatorElemOptElem => SpecType::arrows([con(), a()], a()),
            OpShape::MutatorOptElem => SpecType::arrow(con(), a()),
            OpShape::ObserverElemBool => SpecType::arrows([con(), a()], SpecType::Bool),
            OpShape::ObserverBool => SpecType::arrow(con(), SpecType::Bool),
            OpShape::ObserverSize => SpecType::arrow(con(), a()),
            OpShape::ObserverIndexOptElem => SpecType::arrows([con(), a()], a()),
            OpShape::ObserverOptElem => SpecType::arrow(con(), a()),
        };
        Scheme::poly([0], ty)
    }

    /// Whether the value slot of the model result is a boolean (rather than
    /// a nullable element or size).
    pub fn value_is_bool(&self) -> bool {
        matches!(self, OpShape::ObserverElemBool | OpShape::ObserverBool)
    }
}

/// A named interface: the paper-facing unit of syntactic properties.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct InterfaceSig {
    pub name: String,
    /// Operations in declaration order; names unique within the signature.
    pub operations: Vec<(String, OpShape)>,
}

impl InterfaceSig {
    pub fn op(&self, name: &str) -> Option<OpShape> {
        self.operations
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, s)| *s)
    }

    pub fn op_names(&self) -> impl Iterator<Item = &str> {
        self.operations.iter().map(|(n, _)| n.as_str())
    }
}

/// Registered interfaces by name, in deterministic order.
pub type InterfaceRegistry = BTreeMap<String, InterfaceSig>;
