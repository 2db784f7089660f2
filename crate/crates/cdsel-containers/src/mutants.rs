//! Intentionally faulty implementation variants.
//!
//! These exist to demonstrate that the conformance harness has teeth: each
//! mutant masquerades as a shipped catalogue entry while violating its
//! specification in one targeted way. They are never selected or generated
//! into user code.

use std::collections::VecDeque;

use crate::dynamic::{ContainerFactory, DynContainer, OpOutcome};
use crate::traits::{ContainerT, StackT, ToModel};

/// `Stack` with push and pop acting on opposite ends, so pop returns the
/// oldest element instead of the newest.
#[derive(Debug, Default)]
pub struct SwappedStack {
    data: VecDeque<i64>,
}

impl SwappedStack {
    pub fn new() -> Self {
        Self::default()
    }
}

impl ContainerT<i64> for SwappedStack {
    fn len(&self) -> usize {
        self.data.len()
    }

    fn contains(&self, x: &i64) -> bool {
        self.data.contains(x)
    }

    fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    fn insert(&mut self, x: i64) {
        self.data.push_back(x);
    }

    fn clear(&mut self) {
        self.data.clear();
    }

    fn remove(&mut self, x: i64) -> Option<i64> {
        let idx = self.data.iter().position(|y| *y == x)?;
        self.data.remove(idx)
    }
}

impl StackT<i64> for SwappedStack {
    fn push(&mut self, x: i64) {
        self.data.push_back(x);
    }

    fn pop(&mut self) -> Option<i64> {
        self.data.pop_front()
    }
}

impl ToModel<i64> for SwappedStack {
    fn to_model(&self) -> Vec<i64> {
        self.data.iter().copied().collect()
    }
}

/// `UniqueVec` without the duplicate check on insert.
#[derive(Debug, Default)]
pub struct LeakyUniqueVec {
    data: Vec<i64>,
}

impl LeakyUniqueVec {
    pub fn new() -> Self {
        Self::default()
    }
}

impl ContainerT<i64> for LeakyUniqueVec {
    fn len(&self) -> usize {
        self.data.len()
    }

    fn contains(&self, x: &i64) -> bool {
        self.data.contains(x)
    }

    fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    fn insert(&mut self, x: i64) {
        self.data.push(x);
    }

    fn clear(&mut self) {
        self.data.clear();
    }

    fn remove(&mut self, x: i64) -> Option<i64> {
        let idx = self.data.iter().position(|y| *y == x)?;
        Some(self.data.remove(idx))
    }
}

impl ToModel<i64> for LeakyUniqueVec {
    fn to_model(&self) -> Vec<i64> {
        self.data.clone()
    }
}

/// `SortedVec` sorted in descending instead of ascending order.
#[derive(Debug, Default)]
pub struct ReversedSortedVec {
    data: Vec<i64>,
}

impl ReversedSortedVec {
    pub fn new() -> Self {
        Self::default()
    }
}

impl ContainerT<i64> for ReversedSortedVec {
    fn len(&self) -> usize {
        self.data.len()
    }

    fn contains(&self, x: &i64) -> bool {
        self.data.contains(x)
    }

    fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    fn insert(&mut self, x: i64) {
        let idx = self.data.partition_point(|y| *y >= x);
        self.data.insert(idx, x);
    }

    fn clear(&mut self) {
        self.data.clear();
    }

    fn remove(&mut self, x: i64) -> Option<i64> {
        let idx = self.data.iter().position(|y| *y == x)?;
        Some(self.data.remove(idx))
    }
}

impl ToModel<i64> for ReversedSortedVec {
    fn to_model(&self) -> Vec<i64> {
        self.data.clone()
    }
}

fn basic_only(c: &mut impl ContainerT<i64>, op: &str, arg: Option<i64>) -> OpOutcome {
    let elem = || arg.expect("operation takes an element");
    match op {
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
        other => panic!("mutant does not implement operation `{other}`"),
    }
}

impl DynContainer for SwappedStack {
    fn ops(&self) -> &'static [&'static str] {
        &["len", "contains", "is_empty", "insert", "clear", "remove", "push", "pop"]
    }

    fn apply(&mut self, op: &str, arg: Option<i64>) -> OpOutcome {
        match op {
            "push" => {
                self.push(arg.expect("push takes an element"));
                OpOutcome::Unit
            }
            "pop" => OpOutcome::Elem(self.pop()),
            other => basic_only(self, other, arg),
        }
    }

    fn model(&self) -> Vec<i64> {
        self.to_model()
    }
}

macro_rules! dyn_mutant {
    ($ty:ident; $($extra:tt)*) => {
        impl DynContainer for $ty {
            fn ops(&self) -> &'static [&'static str] {
                &["len", "contains", "is_empty", "insert", "clear", "remove",
                  "first", "last", "nth"]
            }

            fn apply(&mut self, op: &str, arg: Option<i64>) -> OpOutcome {
                match op {
                    "first" => OpOutcome::Elem(self.data.first().copied()),
                    "last" => OpOutcome::Elem(self.data.last().copied()),
                    "nth" => OpOutcome::Elem(
                        usize::try_from(arg.expect("nth takes an index"))
                            .ok()
                            .and_then(|n| self.data.get(n).copied()),
                    ),
                    other => basic_only(self, other, arg),
                }
            }

            fn model(&self) -> Vec<i64> {
                self.to_model()
            }
        }
    };
}

dyn_mutant!(LeakyUniqueVec;);
dyn_mutant!(ReversedSortedVec;);

/// The seeded mutants, each paired with the catalogue entry it impersonates.
pub fn mutant_registry() -> Vec<(&'static str, &'static str, ContainerFactory)> {
    vec![
        ("swapped-push-pop", "Stack", || Box::new(SwappedStack::new())),
        ("dropped-dedup", "UniqueVec", || Box::new(LeakyUniqueVec::new())),
        ("reversed-sort", "SortedVec", || Box::new(ReversedSortedVec::new())),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn swapped_stack_pops_oldest() {
        let mut s = SwappedStack::new();
        s.push(1);
        s.push(2);
        assert_eq!(s.pop(), Some(1));
    }

    #[test]
    fn leaky_unique_vec_keeps_duplicates() {
        let mut c = LeakyUniqueVec::new();
        c.insert(3);
        c.insert(3);
        assert_eq!(ContainerT::<i64>::len(&c), 2);
    }

    #[test]
    fn reversed_sorted_vec_descends() {
        let mut c = ReversedSortedVec::new();
        c.insert(1);
        c.insert(3);
        c.insert(2);
        assert_eq!(c.to_model(), vec![3, 2, 1]);
    }
}
