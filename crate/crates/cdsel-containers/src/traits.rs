/// Basic container operations: membership, insertion, removal.
///
/// `remove` takes the element by value and returns the removed element, or
/// `None` when it was absent; it never panics. Observers answer through
/// `&self`; lazy implementations normalize internally before answering, so
/// observer results always match the eager twin.
pub trait ContainerT<T> {
    fn len(&self) -> usize;
    fn contains(&self, x: &T) -> bool;
    fn is_empty(&self) -> bool;
    fn insert(&mut self, x: T);
    fn clear(&mut self);
    fn remove(&mut self, x: T) -> Option<T>;
}

/// Positional observers over the container's externally visible order.
///
/// Positions agree with the list model produced by the implementation's
/// abstraction function. Out-of-range `nth` and `first`/`last` on an empty
/// container return `None`. Elements are returned by value so that lazy
/// implementations may normalize under the hood.
pub trait IndexableT<T> {
    fn first(&self) -> Option<T>;
    fn last(&self) -> Option<T>;
    fn nth(&self, n: usize) -> Option<T>;
}

/// Push/pop operations. `pop` on an empty container returns `None`.
pub trait StackT<T> {
    fn push(&mut self, x: T);
    fn pop(&mut self) -> Option<T>;
}

/// The abstraction function: a pure map from concrete container state to the
/// flat list model used by the specifications.
///
/// Implementations must not mutate the container; lazy containers normalize a
/// copy of their backing storage instead of flushing their dirty state.
pub trait ToModel<T> {
    fn to_model(&self) -> Vec<T>;
}
