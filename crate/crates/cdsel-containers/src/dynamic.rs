//! Name-indexed dynamic access to the catalogue implementations.
//!
//! The conformance harness drives containers generically: it looks an
//! implementation up by its catalogue name, applies operations by name, and
//! reads back the list model. [`DynContainer`] is that uniform surface.

use std::collections::BTreeMap;

use crate::impls::*;
use crate::traits::{ContainerT, IndexableT, StackT, ToModel};

/// The value an operation hands back, in the shape the specifications use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OpOutcome {
    Unit,
    Bool(bool),
    Size(usize),
    Elem(Option<i64>),
}

/// A container driven by operation name. Element type is fixed to `i64`,
/// which is all the checking machinery needs.
pub trait DynContainer {
    /// Operation names this container answers to.
    fn ops(&self) -> &'static [&'static str];

    /// Apply one operation. `arg` carries the element for element-taking
    /// operations and the index for `nth`.
    ///
    /// # Panics
    /// Panics on an unknown operation name or a missing argument; callers
    /// resolve operations against the catalogue first.
    fn apply(&mut self, op: &str, arg: Option<i64>) -> OpOutcome;

    /// The abstraction function.
    fn model(&self) -> Vec<i64>;
}

fn container_op<C: ContainerT<i64>>(c: &mut C, op: &str, arg: Option<i64>) -> Option<OpOutcome> {
    let elem = || arg.expect("operation takes an element");
    Some(match op {
        "len" => OpOutcome::Size(c.len()),
        "contains" => OpOutcome::Bool(c.contains(&elem())),
        "is_empty" => OpOutcome::Bool(c.is_empty()),
        "insert" => {
            c.insert(elem());
            OpOutcome::Unit
        }
        "clear" => {
            c.clear();
            OpOutcome::Unit
        }
        "remove" => OpOutcome::Elem(c.remove(elem())),
        _ => return None,
    })
}

fn indexable_op<C: IndexableT<i64>>(c: &C, op: &str, arg: Option<i64>) -> Option<OpOutcome> {
    Some(match op {
        "first" => OpOutcome::Elem(c.first()),
        "last" => OpOutcome::Elem(c.last()),
        "nth" => {
            let n = arg.expect("nth takes an index");
            let v = usize::try_from(n).ok().and_then(|n| c.nth(n));
            OpOutcome::Elem(v)
        }
        _ => return None,
    })
}

fn stack_op<C: StackT<i64>>(c: &mut C, op: &str, arg: Option<i64>) -> Option<OpOutcome> {
    Some(match op {
        "push" => {
            c.push(arg.expect("push takes an element"));
            OpOutcome::Unit
        }
        "pop" => OpOutcome::Elem(c.pop()),
        _ => return None,
    })
}

const CONTAINER_OPS: &[&str] = &["len", "contains", "is_empty", "insert", "clear", "remove"];
const CONTAINER_INDEXABLE_OPS: &[&str] = &[
    "len", "contains", "is_empty", "insert", "clear", "remove", "first", "last", "nth",
];
const CONTAINER_STACK_OPS: &[&str] = &[
    "len", "contains", "is_empty", "insert", "clear", "remove", "push", "pop",
];

macro_rules! dyn_container {
    ($ty:ident, $ops:expr; $($dispatch:ident),+) => {
        impl DynContainer for $ty<i64> {
            fn ops(&self) -> &'static [&'static str] {
                $ops
            }

            fn apply(&mut self, op: &str, arg: Option<i64>) -> OpOutcome {
                $(
                    if let Some(out) = $dispatch(self, op, arg) {
                        return out;
                    }
                )+
                panic!("{} does not implement operation `{op}`", stringify!($ty));
            }

            fn model(&self) -> Vec<i64> {
                self.to_model()
            }
        }
    };
}

dyn_container!(VecContainer, CONTAINER_INDEXABLE_OPS; container_op, indexable_op);
dyn_container!(LinkedListContainer, CONTAINER_INDEXABLE_OPS; container_op, indexable_op);
dyn_container!(HashSetContainer, CONTAINER_OPS; container_op);
dyn_container!(BTreeSetContainer, CONTAINER_INDEXABLE_OPS; container_op, indexable_op);
dyn_container!(SortedVec, CONTAINER_INDEXABLE_OPS; container_op, indexable_op);
dyn_container!(LazySortedVec, CONTAINER_INDEXABLE_OPS; container_op, indexable_op);
dyn_container!(UniqueVec, CONTAINER_INDEXABLE_OPS; container_op, indexable_op);
dyn_container!(LazyUniqueVec, CONTAINER_INDEXABLE_OPS; container_op, indexable_op);
dyn_container!(Stack, CONTAINER_STACK_OPS; container_op, stack_op);
dyn_container!(Queue, CONTAINER_STACK_OPS; container_op, stack_op);

/// Builds a fresh container for one catalogue entry.
pub type ContainerFactory = fn() -> Box<dyn DynContainer>;

/// Factories for every shipped implementation, keyed by catalogue name.
pub fn standard_registry() -> BTreeMap<&'static str, ContainerFactory> {
    let mut m: BTreeMap<&'static str, ContainerFactory> = BTreeMap::new();
    m.insert("Vec", || Box::new(VecContainer::<i64>::new()));
    m.insert("LinkedList", || Box::new(LinkedListContainer::<i64>::new()));
    m.insert("HashSet", || Box::new(HashSetContainer::<i64>::new()));
    m.insert("BTreeSet", || Box::new(BTreeSetContainer::<i64>::new()));
    m.insert("SortedVec", || Box::new(SortedVec::<i64>::new()));
    m.insert("LazySortedVec", || Box::new(LazySortedVec::<i64>::new()));
    m.insert("UniqueVec", || Box::new(UniqueVec::<i64>::new()));
    m.insert("LazyUniqueVec", || Box::new(LazyUniqueVec::<i64>::new()));
    m.insert("Stack", || Box::new(Stack::<i64>::new()));
    m.insert("Queue", || Box::new(Queue::<i64>::new()));
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_covers_all_ten_entries() {
        let reg = standard_registry();
        assert_eq!(reg.len(), 10);
        for (name, factory) in reg {
            let c = factory();
            assert!(c.model().is_empty(), "{name} starts empty");
        }
    }

    #[test]
    fn dynamic_dispatch_matches_direct_calls() {
        let mut c = standard_registry()["BTreeSet"]();
        c.apply("insert", Some(2));
        c.apply("insert", Some(1));
        c.apply("insert", Some(2));
        assert_eq!(c.apply("len", None), OpOutcome::Size(2));
        assert_eq!(c.apply("first", None), OpOutcome::Elem(Some(1)));
        assert_eq!(c.apply("contains", Some(9)), OpOutcome::Bool(false));
        assert_eq!(c.model(), vec![1, 2]);
    }
}
