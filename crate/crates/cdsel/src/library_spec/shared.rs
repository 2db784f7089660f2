//! Reports which catalogue entries share specifications: eager and lazy
//! twins reuse one spec wholesale, and set implementations share their basic
//! triples while differing on ordering observers.

use std::collections::BTreeMap;

use super::catalogue::Catalogue;
use super::hoare::ContainerSpec;
use crate::spec_lang::printer::print_term;

/// How much of the specification a group of containers shares.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub enum SharedScope {
    /// Identical interfaces, invariant, triples, and model operations.
    Full,
    /// Identical invariant and triples for one interface's operations.
    Interface(String),
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct SharedGroup {
    pub scope: SharedScope,
    pub members: Vec<String>,
}

/// Groups containers by shared specification. Full-spec groups come first
/// (singletons included), followed by per-interface groups of at least two
/// members that are not already together in a full group.
pub fn shared_spec_instances(catalogue: &Catalogue) -> Vec<SharedGroup> {
    let mut full: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for (name, spec) in &catalogue.containers {
        full.entry(full_key(spec)).or_default().push(name.clone());
    }

    let mut groups: Vec<SharedGroup> = full
        .into_values()
        .map(|members| SharedGroup {
            scope: SharedScope::Full,
            members,
        })
        .collect();
    groups.sort_by(|a, b| a.members.cmp(&b.members));

    let full_membership: Vec<Vec<String>> =
        groups.iter().map(|g| g.members.clone()).collect();

    let mut interface_groups: Vec<SharedGroup> = Vec::new();
    for (iface_name, sig) in &catalogue.interfaces {
        let mut by_key: BTreeMap<String, Vec<String>> = BTreeMap::new();
        for (name, spec) in &catalogue.containers {
            if !spec.interfaces.contains(iface_name) {
                continue;
            }
            let mut key = format!("inv={};", print_term(&spec.invariant_pre));
            for (op, _) in &sig.operations {
                if let Some(t) = spec.triples.get(op) {
                    key.push_str(&format!(
                        "{}:{}|{};",
                        op,
                        print_term(&t.pre),
                        t.post_model_op
                    ));
                }
            }
            by_key.entry(key).or_default().push(name.clone());
        }
        for members in by_key.into_values() {
            if members.len() < 2 {
                continue;
            }
            // Skip groups whose members already share a full spec.
            if full_membership
                .iter()
                .any(|fm| members.iter().all(|m| fm.contains(m)))
            {
                continue;
            }
            interface_groups.push(SharedGroup {
                scope: SharedScope::Interface(iface_name.clone()),
                members,
            });
        }
    }
    interface_groups.sort_by(|a, b| (&a.scope, &a.members).cmp(&(&b.scope, &b.members)));

    groups.extend(interface_groups);
    groups
}

fn full_key(spec: &ContainerSpec) -> String {
    let mut ifaces: Vec<&str> = spec.interfaces.iter().map(|s| s.as_str()).collect();
    ifaces.sort_unstable();
    let mut key = format!("ifaces={ifaces:?};inv={};", print_term(&spec.invariant_pre));
    for (op, t) in &spec.triples {
        key.push_str(&format!("{}:{}|{};", op, print_term(&t.pre), t.post_model_op));
    }
    for (name, term) in &spec.model_ops {
        key.push_str(&format!("model {}={};", name, print_term(term)));
    }
    key
}

impl std::cmp::PartialOrd for SharedScope {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl std::cmp::Ord for SharedScope {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use SharedScope::*;
        match (self, other) {
            (Full, Full) => std::cmp::Ordering::Equal,
            (Full, Interface(_)) => std::cmp::Ordering::Less,
            (Interface(_), Full) => std::cmp::Ordering::Greater,
            (Interface(a), Interface(b)) => a.cmp(b),
        }
    }
}
