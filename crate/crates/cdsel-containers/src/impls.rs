//! The concrete container implementations.
//!
//! Four wrap standard-library collections (`Vec`, `LinkedList`, `HashSet`,
//! `BTreeSet`) and four are custom vectors: `SortedVec` keeps its elements
//! sorted on insert, `UniqueVec` rejects duplicates on insert, and their lazy
//! twins defer that work until the container is observed. `Stack` and `Queue`
//! are small demonstration entries for push/pop selection.

use std::cell::{Cell, RefCell};
use std::collections::{BTreeSet, HashSet, LinkedList, VecDeque};
use std::hash::Hash;

use crate::traits::{ContainerT, IndexableT, StackT, ToModel};

// ---------------------------------------------------------------------------
// Vec
// ---------------------------------------------------------------------------

/// Growable array in insertion order.
#[derive(Debug, Clone, Default)]
pub struct VecContainer<T> {
    data: Vec<T>,
}

impl<T> VecContainer<T> {
    pub fn new() -> Self {
        Self { data: Vec::new() }
    }
}

impl<T: PartialEq> ContainerT<T> for VecContainer<T> {
    fn len(&self) -> usize {
        self.data.len()
    }

    fn contains(&self, x: &T) -> bool {
        self.data.contains(x)
    }

    fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    fn insert(&mut self, x: T) {
        self.data.push(x);
    }

    fn clear(&mut self) {
        self.data.clear();
    }

    fn remove(&mut self, x: T) -> Option<T> {
        let idx = self.data.iter().position(|y| *y == x)?;
        Some(self.data.remove(idx))
    }
}

impl<T: Clone> IndexableT<T> for VecContainer<T> {
    fn first(&self) -> Option<T> {
        self.data.first().cloned()
    }

    fn last(&self) -> Option<T> {
        self.data.last().cloned()
    }

    fn nth(&self, n: usize) -> Option<T> {
        self.data.get(n).cloned()
    }
}

impl<T: Clone> ToModel<T> for VecContainer<T> {
    fn to_model(&self) -> Vec<T> {
        self.data.clone()
    }
}

// ---------------------------------------------------------------------------
// LinkedList
// ---------------------------------------------------------------------------

/// Doubly linked list in insertion order.
#[derive(Debug, Clone, Default)]
pub struct LinkedListContainer<T> {
    data: LinkedList<T>,
}

impl<T> LinkedListContainer<T> {
    pub fn new() -> Self {
        Self {
            data: LinkedList::new(),
        }
    }
}

impl<T: PartialEq> ContainerT<T> for LinkedListContainer<T> {
    fn len(&self) -> usize {
        self.data.len()
    }

    fn contains(&self, x: &T) -> bool {
        self.data.contains(x)
    }

    fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    fn insert(&mut self, x: T) {
        self.data.push_back(x);
    }

    fn clear(&mut self) {
        self.data.clear();
    }

    fn remove(&mut self, x: T) -> Option<T> {
        let idx = self.data.iter().position(|y| *y == x)?;
        let mut tail = self.data.split_off(idx);
        let removed = tail.pop_front();
        self.data.append(&mut tail);
        removed
    }
}

impl<T: Clone> IndexableT<T> for LinkedListContainer<T> {
    fn first(&self) -> Option<T> {
        self.data.front().cloned()
    }

    fn last(&self) -> Option<T> {
        self.data.back().cloned()
    }

    fn nth(&self, n: usize) -> Option<T> {
        self.data.iter().nth(n).cloned()
    }
}

impl<T: Clone> ToModel<T> for LinkedListContainer<T> {
    fn to_model(&self) -> Vec<T> {
        self.data.iter().cloned().collect()
    }
}

// ---------------------------------------------------------------------------
// HashSet
// ---------------------------------------------------------------------------

/// Hash-table set. Exposes no ordering; its model collects the elements and
/// sorts them ascending.
#[derive(Debug, Clone, Default)]
pub struct HashSetContainer<T> {
    data: HashSet<T>,
}

impl<T> HashSetContainer<T> {
    pub fn new() -> Self {
        Self {
            data: HashSet::new(),
        }
    }
}

impl<T: Eq + Hash> ContainerT<T> for HashSetContainer<T> {
    fn len(&self) -> usize {
        self.data.len()
    }

    fn contains(&self, x: &T) -> bool {
        self.data.contains(x)
    }

    fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    fn insert(&mut self, x: T) {
        self.data.insert(x);
    }

    fn clear(&mut self) {
        self.data.clear();
    }

    fn remove(&mut self, x: T) -> Option<T> {
        self.data.take(&x)
    }
}

impl<T: Clone + Ord> ToModel<T> for HashSetContainer<T> {
    fn to_model(&self) -> Vec<T> {
        let mut xs: Vec<T> = self.data.iter().cloned().collect();
        xs.sort();
        xs
    }
}

// ---------------------------------------------------------------------------
// BTreeSet
// ---------------------------------------------------------------------------

/// Ordered balanced-tree set; its model is the in-order traversal.
#[derive(Debug, Clone, Default)]
pub struct BTreeSetContainer<T> {
    data: BTreeSet<T>,
}

impl<T> BTreeSetContainer<T> {
    pub fn new() -> Self {
        Self {
            data: BTreeSet::new(),
        }
    }
}

impl<T: Ord> ContainerT<T> for BTreeSetContainer<T> {
    fn len(&self) -> usize {
        self.data.len()
    }

    fn contains(&self, x: &T) -> bool {
        self.data.contains(x)
    }

    fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    fn insert(&mut self, x: T) {
        self.data.insert(x);
    }

    fn clear(&mut self) {
        self.data.clear();
    }

    fn remove(&mut self, x: T) -> Option<T> {
        self.data.take(&x)
    }
}

impl<T: Ord + Clone> IndexableT<T> for BTreeSetContainer<T> {
    fn first(&self) -> Option<T> {
        self.data.first().cloned()
    }

    fn last(&self) -> Option<T> {
        self.data.last().cloned()
    }

    fn nth(&self, n: usize) -> Option<T> {
        self.data.iter().nth(n).cloned()
    }
}

impl<T: Ord + Clone> ToModel<T> for BTreeSetContainer<T> {
    fn to_model(&self) -> Vec<T> {
        self.data.iter().cloned().collect()
    }
}

// ---------------------------------------------------------------------------
// SortedVec
// ---------------------------------------------------------------------------

/// Vector kept in ascending order on every insert; duplicates allowed.
#[derive(Debug, Clone, Default)]
pub struct SortedVec<T> {
    data: Vec<T>,
}

impl<T> SortedVec<T> {
    pub fn new() -> Self {
        Self { data: Vec::new() }
    }
}

impl<T: Ord> ContainerT<T> for SortedVec<T> {
    fn len(&self) -> usize {
        self.data.len()
    }

    fn contains(&self, x: &T) -> bool {
        self.data.binary_search(x).is_ok()
    }

    fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    fn insert(&mut self, x: T) {
        let idx = self.data.partition_point(|y| *y <= x);
        self.data.insert(idx, x);
    }

    fn clear(&mut self) {
        self.data.clear();
    }

    fn remove(&mut self, x: T) -> Option<T> {
        // Leftmost occurrence, so removal agrees with the list model.
        let idx = self.data.partition_point(|y| *y < x);
        if self.data.get(idx) == Some(&x) {
            Some(self.data.remove(idx))
        } else {
            None
        }
    }
}

impl<T: Clone> IndexableT<T> for SortedVec<T> {
    fn first(&self) -> Option<T> {
        self.data.first().cloned()
    }

    fn last(&self) -> Option<T> {
        self.data.last().cloned()
    }

    fn nth(&self, n: usize) -> Option<T> {
        self.data.get(n).cloned()
    }
}

impl<T: Clone> ToModel<T> for SortedVec<T> {
    fn to_model(&self) -> Vec<T> {
        self.data.clone()
    }
}

// ---------------------------------------------------------------------------
// LazySortedVec
// ---------------------------------------------------------------------------

/// Vector sorted on access instead of on insert. Inserts are O(1); the first
/// observer after a batch of inserts pays for the sort.
#[derive(Debug, Default)]
pub struct LazySortedVec<T> {
    data: RefCell<Vec<T>>,
    dirty: Cell<bool>,
}

impl<T> LazySortedVec<T> {
    pub fn new() -> Self {
        Self {
            data: RefCell::new(Vec::new()),
            dirty: Cell::new(false),
        }
    }
}

impl<T: Ord> LazySortedVec<T> {
    fn normalize(&self) {
        if self.dirty.get() {
            self.data.borrow_mut().sort();
            self.dirty.set(false);
        }
    }
}

impl<T: Ord> ContainerT<T> for LazySortedVec<T> {
    fn len(&self) -> usize {
        self.data.borrow().len()
    }

    fn contains(&self, x: &T) -> bool {
        self.normalize();
        self.data.borrow().binary_search(x).is_ok()
    }

    fn is_empty(&self) -> bool {
        self.data.borrow().is_empty()
    }

    fn insert(&mut self, x: T) {
        self.data.get_mut().push(x);
        self.dirty.set(true);
    }

    fn clear(&mut self) {
        self.data.get_mut().clear();
        self.dirty.set(false);
    }

    fn remove(&mut self, x: T) -> Option<T> {
        self.normalize();
        let data = self.data.get_mut();
        let idx = data.partition_point(|y| *y < x);
        if data.get(idx) == Some(&x) {
            Some(data.remove(idx))
        } else {
            None
        }
    }
}

impl<T: Ord + Clone> IndexableT<T> for LazySortedVec<T> {
    fn first(&self) -> Option<T> {
        self.normalize();
        self.data.borrow().first().cloned()
    }

    fn last(&self) -> Option<T> {
        self.normalize();
        self.data.borrow().last().cloned()
    }

    fn nth(&self, n: usize) -> Option<T> {
        self.normalize();
        self.data.borrow().get(n).cloned()
    }
}

impl<T: Ord + Clone> ToModel<T> for LazySortedVec<T> {
    fn to_model(&self) -> Vec<T> {
        // Pure: normalize a copy, leave the container's dirty state alone.
        let mut xs = self.data.borrow().clone();
        xs.sort();
        xs
    }
}

impl<T: Clone> Clone for LazySortedVec<T> {
    fn clone(&self) -> Self {
        Self {
            data: RefCell::new(self.data.borrow().clone()),
            dirty: Cell::new(self.dirty.get()),
        }
    }
}

// ---------------------------------------------------------------------------
// UniqueVec
// ---------------------------------------------------------------------------

/// Vector that rejects duplicates on insert; keeps insertion order.
#[derive(Debug, Clone, Default)]
pub struct UniqueVec<T> {
    data: Vec<T>,
}

impl<T> UniqueVec<T> {
    pub fn new() -> Self {
        Self { data: Vec::new() }
    }
}

impl<T: PartialEq> ContainerT<T> for UniqueVec<T> {
    fn len(&self) -> usize {
        self.data.len()
    }

    fn contains(&self, x: &T) -> bool {
        self.data.contains(x)
    }

    fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    fn insert(&mut self, x: T) {
        if !self.data.contains(&x) {
            self.data.push(x);
        }
    }

    fn clear(&mut self) {
        self.data.clear();
    }

    fn remove(&mut self, x: T) -> Option<T> {
        let idx = self.data.iter().position(|y| *y == x)?;
        Some(self.data.remove(idx))
    }
}

impl<T: Clone> IndexableT<T> for UniqueVec<T> {
    fn first(&self) -> Option<T> {
        self.data.first().cloned()
    }

    fn last(&self) -> Option<T> {
        self.data.last().cloned()
    }

    fn nth(&self, n: usize) -> Option<T> {
        self.data.get(n).cloned()
    }
}

impl<T: Clone> ToModel<T> for UniqueVec<T> {
    fn to_model(&self) -> Vec<T> {
        self.data.clone()
    }
}

// ---------------------------------------------------------------------------
// LazyUniqueVec
// ---------------------------------------------------------------------------

/// Vector deduplicated on access instead of on insert. Inserts are O(1);
/// observers first drop every repeated element, keeping the first occurrence
/// of each, so the visible order matches the eager [`UniqueVec`].
#[derive(Debug, Default)]
pub struct LazyUniqueVec<T> {
    data: RefCell<Vec<T>>,
    dirty: Cell<bool>,
}

impl<T> LazyUniqueVec<T> {
    pub fn new() -> Self {
        Self {
            data: RefCell::new(Vec::new()),
            dirty: Cell::new(false),
        }
    }
}

fn dedup_first_occurrence<T: Eq + Hash + Clone>(xs: &mut Vec<T>) {
    let mut seen = HashSet::with_capacity(xs.len());
    xs.retain(|x| seen.insert(x.clone()));
}

impl<T: Eq + Hash + Clone> LazyUniqueVec<T> {
    fn normalize(&self) {
        if self.dirty.get() {
            dedup_first_occurrence(&mut self.data.borrow_mut());
            self.dirty.set(false);
        }
    }
}

impl<T: Eq + Hash + Clone> ContainerT<T> for LazyUniqueVec<T> {
    fn len(&self) -> usize {
        self.normalize();
        self.data.borrow().len()
    }

    fn contains(&self, x: &T) -> bool {
        self.data.borrow().contains(x)
    }

    fn is_empty(&self) -> bool {
        self.data.borrow().is_empty()
    }

    fn insert(&mut self, x: T) {
        self.data.get_mut().push(x);
        self.dirty.set(true);
    }

    fn clear(&mut self) {
        self.data.get_mut().clear();
        self.dirty.set(false);
    }

    fn remove(&mut self, x: T) -> Option<T> {
        self.normalize();
        let data = self.data.get_mut();
        let idx = data.iter().position(|y| *y == x)?;
        Some(data.remove(idx))
    }
}

impl<T: Eq + Hash + Clone> IndexableT<T> for LazyUniqueVec<T> {
    fn first(&self) -> Option<T> {
        self.normalize();
        self.data.borrow().first().cloned()
    }

    fn last(&self) -> Option<T> {
        self.normalize();
        self.data.borrow().last().cloned()
    }

    fn nth(&self, n: usize) -> Option<T> {
        self.normalize();
        self.data.borrow().get(n).cloned()
    }
}

impl<T: Eq + Hash + Clone> ToModel<T> for LazyUniqueVec<T> {
    fn to_model(&self) -> Vec<T> {
        let mut xs = self.data.borrow().clone();
        dedup_first_occurrence(&mut xs);
        xs
    }
}

impl<T: Clone> Clone for LazyUniqueVec<T> {
    fn clone(&self) -> Self {
        Self {
            data: RefCell::new(self.data.borrow().clone()),
            dirty: Cell::new(self.dirty.get()),
        }
    }
}

// ---------------------------------------------------------------------------
// Stack and Queue
// ---------------------------------------------------------------------------

/// Last-in-first-out stack; the model list runs bottom to top, so push
/// appends at the end and pop removes the last element.
#[derive(Debug, Clone, Default)]
pub struct Stack<T> {
    data: Vec<T>,
}

impl<T> Stack<T> {
    pub fn new() -> Self {
        Self { data: Vec::new() }
    }
}

impl<T: PartialEq> ContainerT<T> for Stack<T> {
    fn len(&self) -> usize {
        self.data.len()
    }

    fn contains(&self, x: &T) -> bool {
        self.data.contains(x)
    }

    fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    fn insert(&mut self, x: T) {
        self.data.push(x);
    }

    fn clear(&mut self) {
        self.data.clear();
    }

    fn remove(&mut self, x: T) -> Option<T> {
        let idx = self.data.iter().position(|y| *y == x)?;
        Some(self.data.remove(idx))
    }
}

impl<T> StackT<T> for Stack<T> {
    fn push(&mut self, x: T) {
        self.data.push(x);
    }

    fn pop(&mut self) -> Option<T> {
        self.data.pop()
    }
}

impl<T: Clone> ToModel<T> for Stack<T> {
    fn to_model(&self) -> Vec<T> {
        self.data.clone()
    }
}

/// First-in-first-out queue. Push prepends to the model list and pop removes
/// the last element, so the oldest element leaves first.
#[derive(Debug, Clone, Default)]
pub struct Queue<T> {
    data: VecDeque<T>,
}

impl<T> Queue<T> {
    pub fn new() -> Self {
        Self {
            data: VecDeque::new(),
        }
    }
}

impl<T: PartialEq> ContainerT<T> for Queue<T> {
    fn len(&self) -> usize {
        self.data.len()
    }

    fn contains(&self, x: &T) -> bool {
        self.data.contains(x)
    }

    fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    fn insert(&mut self, x: T) {
        self.data.push_front(x);
    }

    fn clear(&mut self) {
        self.data.clear();
    }

    fn remove(&mut self, x: T) -> Option<T> {
        let idx = self.data.iter().position(|y| *y == x)?;
        self.data.remove(idx)
    }
}

impl<T: PartialEq> StackT<T> for Queue<T> {
    fn push(&mut self, x: T) {
        self.data.push_front(x);
    }

    fn pop(&mut self) -> Option<T> {
        self.data.pop_back()
    }
}

impl<T: Clone> ToModel<T> for Queue<T> {
    fn to_model(&self) -> Vec<T> {
        self.data.iter().cloned().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fresh_containers_are_empty() {
        assert!(ContainerT::<i64>::is_empty(&VecContainer::new()));
        assert!(ContainerT::<i64>::is_empty(&HashSetContainer::new()));
        assert!(ContainerT::<i64>::is_empty(&LazyUniqueVec::new()));
        assert!(ContainerT::<i64>::is_empty(&Queue::new()));
    }

    #[test]
    fn unique_vec_absorbs_duplicates() {
        let mut c = UniqueVec::new();
        c.insert(3);
        c.insert(3);
        assert_eq!(c.len(), 1);
    }

    #[test]
    fn btree_set_model_is_in_order() {
        let mut c = BTreeSetContainer::new();
        c.insert(2);
        c.insert(1);
        assert_eq!(c.to_model(), vec![1, 2]);
    }

    #[test]
    fn lazy_sorted_vec_sorts_on_access() {
        let mut c = LazySortedVec::new();
        c.insert(3);
        c.insert(1);
        c.insert(2);
        assert_eq!(c.nth(1), Some(2));
        assert_eq!(c.first(), Some(1));
    }

    #[test]
    fn lazy_unique_vec_keeps_first_occurrence_order() {
        let mut c = LazyUniqueVec::new();
        for x in [3, 1, 3, 2, 1] {
            c.insert(x);
        }
        assert_eq!(c.to_model(), vec![3, 1, 2]);
        assert_eq!(c.len(), 3);
        assert_eq!(c.first(), Some(3));
    }

    #[test]
    fn stack_is_lifo_and_queue_is_fifo() {
        let mut s = Stack::new();
        s.push(1);
        s.push(2);
        assert_eq!(s.pop(), Some(2));

        let mut q = Queue::new();
        q.push(1);
        q.push(2);
        assert_eq!(q.pop(), Some(1));
        assert_eq!(StackT::<i64>::pop(&mut Stack::new()), None);
    }

    #[test]
    fn remove_takes_first_occurrence() {
        let mut c = VecContainer::new();
        for x in [1, 2, 1] {
            c.insert(x);
        }
        assert_eq!(c.remove(1), Some(1));
        assert_eq!(c.to_model(), vec![2, 1]);
        assert_eq!(c.remove(7), None);
    }
}
