//! The model operations: total, deterministic functions on model lists that
//! specification postconditions name. Operations that leave the container
//! unchanged return it paired with their observation, mirroring the shape of
//! the abstract operations they specify.

use super::value::{Elem, ModelValue};

pub fn insert_seq(xs: &[Elem], x: Elem) -> Vec<Elem> {
    let mut out = xs.to_vec();
    out.push(x);
    out
}

pub fn insert_sorted_unique(xs: &[Elem], x: Elem) -> Vec<Elem> {
    let mut out = xs.to_vec();
    out.push(x);
    out.sort_unstable();
    out.dedup();
    out
}

pub fn insert_sorted(xs: &[Elem], x: Elem) -> Vec<Elem> {
    let mut out = xs.to_vec();
    out.push(x);
    out.sort_unstable();
    out
}

pub fn insert_unique(xs: &[Elem], x: Elem) -> Vec<Elem> {
    let mut out = xs.to_vec();
    if !out.contains(&x) {
        out.push(x);
    }
    out
}

pub fn contains(xs: &[Elem], x: Elem) -> (Vec<Elem>, bool) {
    (xs.to_vec(), xs.contains(&x))
}

pub fn remove(xs: &[Elem], x: Elem) -> (Vec<Elem>, Option<Elem>) {
    match xs.iter().position(|y| *y == x) {
        Some(idx) => {
            let mut out = xs.to_vec();
            out.remove(idx);
            (out, Some(x))
        }
        None => (xs.to_vec(), None),
    }
}

pub fn first(xs: &[Elem]) -> (Vec<Elem>, Option<Elem>) {
    (xs.to_vec(), xs.first().copied())
}

pub fn last(xs: &[Elem]) -> (Vec<Elem>, Option<Elem>) {
    (xs.to_vec(), xs.last().copied())
}

pub fn nth(xs: &[Elem], n: Elem) -> (Vec<Elem>, Option<Elem>) {
    let v = usize::try_from(n).ok().and_then(|n| xs.get(n).copied());
    (xs.to_vec(), v)
}

pub fn len(xs: &[Elem]) -> (Vec<Elem>, Elem) {
    (xs.to_vec(), xs.len() as Elem)
}

pub fn is_empty(xs: &[Elem]) -> (Vec<Elem>, bool) {
    (xs.to_vec(), xs.is_empty())
}

pub fn clear(_xs: &[Elem]) -> Vec<Elem> {
    Vec::new()
}

pub fn push_lifo(xs: &[Elem], x: Elem) -> Vec<Elem> {
    insert_seq(xs, x)
}

pub fn push_fifo(xs: &[Elem], x: Elem) -> Vec<Elem> {
    let mut out = Vec::with_capacity(xs.len() + 1);
    out.push(x);
    out.extend_from_slice(xs);
    out
}

pub fn pop(xs: &[Elem]) -> (Vec<Elem>, Option<Elem>) {
    match xs.split_last() {
        Some((&last, rest)) => (rest.to_vec(), Some(last)),
        None => (Vec::new(), None),
    }
}

/// The registry's native model operations, resolvable by catalogue name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NativeModelOp {
    InsertSeq,
    InsertSortedUnique,
    InsertSorted,
    InsertUnique,
    Contains,
    Remove,
    First,
    Last,
    Nth,
    Len,
    IsEmpty,
    Clear,
    PushLifo,
    PushFifo,
    Pop,
}

impl NativeModelOp {
    pub fn name(&self) -> &'static str {
        match self {
            NativeModelOp::InsertSeq => "model-insert-seq",
            NativeModelOp::InsertSortedUnique => "model-insert-sorted-unique",
            NativeModelOp::InsertSorted => "model-insert-sorted",
            NativeModelOp::InsertUnique => "model-insert-unique",
            NativeModelOp::Contains => "model-contains",
            NativeModelOp::Remove => "model-remove",
            NativeModelOp::First => "model-first",
            NativeModelOp::Last => "model-last",
            NativeModelOp::Nth => "model-nth",
            NativeModelOp::Len => "model-len",
            NativeModelOp::IsEmpty => "model-is-empty",
            NativeModelOp::Clear => "model-clear",
            NativeModelOp::PushLifo => "model-push-lifo",
            NativeModelOp::PushFifo => "model-push-fifo",
            NativeModelOp::Pop => "model-pop",
        }
    }

    pub fn by_name(name: &str) -> Option<NativeModelOp> {
        use NativeModelOp::*;
        Some(match name {
            "model-insert-seq" => InsertSeq,
            "model-insert-sorted-unique" => InsertSortedUnique,
            "model-insert-sorted" => InsertSorted,
            "model-insert-unique" => InsertUnique,
            "model-contains" => Contains,
            "model-remove" => Remove,
            "model-first" => First,
            "model-last" => Last,
            "model-nth" => Nth,
            "model-len" => Len,
            "model-is-empty" => IsEmpty,
            "model-clear" => Clear,
            "model-push-lifo" => PushLifo,
            "model-push-fifo" => PushFifo,
            "model-pop" => Pop,
        _ => return None,
        })
    }

    pub fn all() -> &'static [NativeModelOp] {
        use NativeModelOp::*;
        &[
            InsertSeq, InsertSortedUnique, InsertSorted, InsertUnique, Contains, Remove, First,
            Last, Nth, Len, IsEmpty, Clear, PushLifo, PushFifo, Pop,
        ]
    }

    pub fn takes_aux(&self) -> bool {
        use NativeModelOp::*;
        matches!(
            self,
            InsertSeq | InsertSortedUnique | InsertSorted | InsertUnique | Contains | Remove
                | Nth | PushLifo | PushFifo
        )
    }

    /// Applies the operation, returning the post-state list and the returned
    /// value (`Null` for operations that return nothing).
    pub fn apply(&self, xs: &[Elem], aux: Option<Elem>) -> (Vec<Elem>, ModelValue) {
        use NativeModelOp::*;
        let x = || aux.expect("model operation takes an input element");
        match self {
            InsertSeq => (insert_seq(xs, x()), ModelValue::Null),
            InsertSortedUnique => (insert_sorted_unique(xs, x()), ModelValue::Null),
            InsertSorted => (insert_sorted(xs, x()), ModelValue::Null),
            InsertUnique => (insert_unique(xs, x()), ModelValue::Null),
            Contains => {
                let (out, b) = contains(xs, x());
                (out, ModelValue::Bool(b))
            }
            Remove => {
                let (out, v) = remove(xs, x());
                (out, ModelValue::opt_elem(v))
            }
            First => {
                let (out, v) = first(xs);
                (out, ModelValue::opt_elem(v))
            }
            Last => {
                let (out, v) = last(xs);
                (out, ModelValue::opt_elem(v))
            }
            Nth => {
                let (out, v) = nth(xs, x());
                (out, ModelValue::opt_elem(v))
            }
            Len => {
                let (out, n) = len(xs);
                (out, ModelValue::Elem(n))
            }
            IsEmpty => {
                let (out, b) = is_empty(xs);
                (out, ModelValue::Bool(b))
            }
            Clear => (clear(xs), ModelValue::Null),
            PushLifo => (push_lifo(xs, x()), ModelValue::Null),
            PushFifo => (push_fifo(xs, x()), ModelValue::Null),
            Pop => {
                let (out, v) = pop(xs);
                (out, ModelValue::opt_elem(v))
            }
        }
    }

    /// The operation's full result as a model value: the bare post-state
    /// list for operations that return nothing, otherwise a (list, value)
    /// pair. This is the shape conformance testing compares against.
    pub fn result_value(&self, xs: &[Elem], aux: Option<Elem>) -> ModelValue {
        let (post, ret) = self.apply(xs, aux);
        match (self.returns_value(), ret) {
            (false, _) => ModelValue::List(post),
            (true, ret) => ModelValue::pair(ModelValue::List(post), ret),
        }
    }

    pub fn returns_value(&self) -> bool {
        use NativeModelOp::*;
        !matches!(
            self,
            InsertSeq | InsertSortedUnique | InsertSorted | InsertUnique | Clear | PushLifo
                | PushFifo
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_seq_appends() {
        assert_eq!(insert_seq(&[1, 2], 3), vec![1, 2, 3]);
        assert_eq!(insert_seq(&[], 5), vec![5]);
        assert_eq!(insert_seq(&[2, 2], 2), vec![2, 2, 2]);
    }

    #[test]
    fn insert_sorted_unique_sorts_and_dedups() {
        assert_eq!(insert_sorted_unique(&[1, 3], 2), vec![1, 2, 3]);
        assert_eq!(insert_sorted_unique(&[1, 2, 3], 2), vec![1, 2, 3]);
        assert_eq!(insert_sorted_unique(&[], 0), vec![0]);
    }

    #[test]
    fn contains_leaves_the_list_unchanged() {
        assert_eq!(contains(&[1, 2], 2), (vec![1, 2], true));
        assert_eq!(contains(&[], 7), (vec![], false));
        assert_eq!(contains(&[3, 3], 1), (vec![3, 3], false));
    }

    #[test]
    fn remove_takes_the_first_occurrence() {
        assert_eq!(remove(&[1, 2, 1], 1), (vec![2, 1], Some(1)));
        assert_eq!(remove(&[], 4), (vec![], None));
        assert_eq!(remove(&[5], 5), (vec![], Some(5)));
    }

    #[test]
    fn first_returns_head_or_nothing() {
        assert_eq!(first(&[1, 2, 3]), (vec![1, 2, 3], Some(1)));
        assert_eq!(first(&[]), (vec![], None));
        assert_eq!(first(&[9]), (vec![9], Some(9)));
    }

    #[test]
    fn lifo_pop_undoes_push() {
        let pushed = push_lifo(&[1, 2], 9);
        assert_eq!(pop(&pushed), (vec![1, 2], Some(9)));
        let queued = push_fifo(&[1, 2], 9);
        assert_eq!(pop(&queued), (vec![9, 1], Some(2)));
        assert_eq!(pop(&[]), (vec![], None));
    }

    #[test]
    fn every_native_op_resolves_by_name() {
        for op in NativeModelOp::all() {
            assert_eq!(NativeModelOp::by_name(op.name()), Some(*op));
        }
    }
}
