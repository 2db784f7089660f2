//! The bounded element domain that universal quantification ranges over.

use super::value::Elem;

/// A nonempty, strictly ascending set of element values. The default domain
/// for a domain size `m` is `{0, .., m-1}`; verdicts only depend on the
/// order type of the domain, so any strictly ascending relabeling behaves
/// identically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementDomain {
    values: Vec<Elem>,
}

impl ElementDomain {
    pub fn of_size(m: usize) -> ElementDomain {
        assert!(m > 0, "element domain must be nonempty");
        ElementDomain {
            values: (0..m as Elem).collect(),
        }
    }

    /// A custom domain; values must be strictly ascending and nonempty.
    pub fn new(values: Vec<Elem>) -> Option<ElementDomain> {
        if values.is_empty() || values.windows(2).any(|w| w[0] >= w[1]) {
            return None;
        }
        Some(ElementDomain { values })
    }

    pub fn values(&self) -> &[Elem] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// All lists of length `0..=k` over this domain, shortest first, then in
    /// lexicographic order of elements. This is the canonical enumeration
    /// order of the bounded search, so the first counterexample found is
    /// minimal.
    pub fn lists_up_to(&self, k: usize) -> impl Iterator<Item = Vec<Elem>> + '_ {
        (0..=k).flat_map(move |len| ListsOfLen {
            domain: &self.values,
            next: if self.values.is_empty() && len > 0 {
                None
            } else {
                Some(vec![0; len])
            },
        })
    }
}

struct ListsOfLen<'a> {
    domain: &'a [Elem],
    /// Indices into `domain` of the next list to yield.
    next: Option<Vec<usize>>,
}

impl Iterator for ListsOfLen<'_> {
    type Item = Vec<Elem>;

    fn next(&mut self) -> Option<Vec<Elem>> {
        let indices = self.next.as_mut()?;
        let out: Vec<Elem> = indices.iter().map(|&i| self.domain[i]).collect();
        // Odometer increment, most significant digit first.
        let mut done = true;
        for i in (0..indices.len()).rev() {
            if indices[i] + 1 < self.domain.len() {
                indices[i] += 1;
                indices[i + 1..].fill(0);
                done = false;
                break;
            }
        }
        if done {
            self.next = None;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerates_shortest_first_lexicographic() {
        let d = ElementDomain::of_size(2);
        let lists: Vec<_> = d.lists_up_to(2).collect();
        assert_eq!(
            lists,
            vec![
                vec![],
                vec![0],
                vec![1],
                vec![0, 0],
                vec![0, 1],
                vec![1, 0],
                vec![1, 1],
            ]
        );
    }

    #[test]
    fn count_matches_geometric_series() {
        let d = ElementDomain::of_size(4);
        assert_eq!(d.lists_up_to(3).count(), 1 + 4 + 16 + 64);
    }
}
