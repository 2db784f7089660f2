//! Conformance testing: validates every container implementation against
//! its library specification by checking the forward-simulation obligation
//! on randomized inputs.
//!
//! For each (implementation, operation) pair the harness builds a container
//! state through a random insert/remove sequence, reads its model through
//! the abstraction function, applies the operation both concretely and on
//! the model, and requires the results to agree structurally:
//!
//! ```text
//! alpha(op_C(c, aux))  ==  model_op(alpha(c), aux)
//! ```
//!
//! with returned values packed into the same (container, value) pair shape
//! the specifications use. Cases are derived deterministically from the
//! master seed, so any failure replays from its recorded case.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cdsel_containers::dynamic::{standard_registry, ContainerFactory, DynContainer, OpOutcome};
use cdsel_containers::mutants::mutant_registry;

use crate::library_spec::catalogue::Catalogue;
use crate::library_spec::hoare::{eval_invariant, eval_pre, post_op_result_value, ContainerSpec};
use crate::model_dsl::builtins::BuiltinRegistry;
use crate::model_dsl::domain::ElementDomain;
use crate::model_dsl::eval::Interp;
use crate::model_dsl::value::{Elem, ModelValue};

/// Bumped whenever case derivation changes; recorded cases from another
/// version refuse to replay rather than silently diverge.
pub const GENERATOR_VERSION: u32 = 1;

const ELEMENT_RANGE: Elem = 50;
const MAX_STATE_OPS: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum StateOp {
    Insert(Elem),
    Remove(Elem),
}

/// One replayable conformance case.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct TestCase {
    pub implementation: String,
    pub spec: String,
    pub op: String,
    pub state_ops: Vec<StateOp>,
    pub aux: Option<Elem>,
    pub seed: u64,
    pub generator_version: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum FailureKind {
    /// Forward simulation violated: concrete and model results differ.
    Mismatch { lhs: String, rhs: String },
    /// The generated state does not satisfy the operation's precondition.
    Generator { message: String },
    /// The specification failed to evaluate.
    Eval { message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Failure {
    pub case: TestCase,
    pub kind: FailureKind,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct OpEntry {
    pub implementation: String,
    pub op: String,
    pub cases: usize,
    pub failures: Vec<Failure>,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ConformanceReport {
    pub seed: u64,
    pub generator_version: u32,
    pub cases_per_op: usize,
    pub entries: Vec<OpEntry>,
    pub total_cases: usize,
    pub total_failures: usize,
}

impl ConformanceReport {
    pub fn passed(&self) -> bool {
        self.total_failures == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("conformance reports serialize")
    }

    pub fn summary(&self) -> String {
        let mut out = format!(
            "conformance: {} cases across {} (implementation, operation) pairs, {} failure(s)\n",
            self.total_cases,
            self.entries.len(),
            self.total_failures
        );
        for entry in &self.entries {
            if !entry.failures.is_empty() {
                out.push_str(&format!(
                    "  FAIL {} :: {} ({} failing case(s))\n",
                    entry.implementation,
                    entry.op,
                    entry.failures.len()
                ));
            }
        }
        out
    }
}

/// An implementation under test: `spec` names the catalogue entry it claims
/// to satisfy; `name` identifies it in reports (differs from `spec` for
/// mutants).
pub struct Target {
    pub name: String,
    pub spec: String,
    pub factory: ContainerFactory,
}

/// The ten shipped implementations, each against its own specification.
pub fn standard_targets() -> Vec<Target> {
    standard_registry()
        .into_iter()
        .map(|(name, factory)| Target {
            name: name.to_string(),
            spec: name.to_string(),
            factory,
        })
        .collect()
}

/// The seeded faulty variants, each impersonating a shipped entry.
pub fn mutant_targets() -> Vec<Target> {
    mutant_registry()
        .into_iter()
        .map(|(label, spec, factory)| Target {
            name: format!("{spec}[{label}]"),
            spec: spec.to_string(),
            factory,
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConformanceError {
    #[error("no catalogue specification named `{spec}` for implementation `{name}`")]
    MissingSpec { name: String, spec: String },
    #[error("case was generated by version {case} but this harness is version {current}")]
    GeneratorVersionMismatch { case: u32, current: u32 },
    #[error("unknown implementation `{name}`")]
    UnknownImplementation { name: String },
}

fn case_seed(master: u64, implementation: &str, op: &str, index: usize) -> u64 {
    // FNV-1a over the identifying tuple, mixed with the master seed and
    // finalized splitmix-style; stable across platforms.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in implementation
        .as_bytes()
        .iter()
        .chain([0xff].iter())
        .chain(op.as_bytes())
        .chain([0xfe].iter())
        .chain(index.to_le_bytes().iter())
    {
        h ^= u64::from(*b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    let mut z = h ^ master;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn generate_case(
    target: &Target,
    op: &str,
    takes_aux: bool,
    is_index: bool,
    index: usize,
    master_seed: u64,
) -> TestCase {
    let seed = case_seed(master_seed, &target.name, op, index);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // Case 0 exercises the empty state and case 1 a single-element state,
    // so every operation sees both boundary states; the rest are random
    // sequences up to MAX_STATE_OPS.
    let target_ops = match index {
        0 => 0,
        1 => 1,
        _ => rng.random_range(0..=MAX_STATE_OPS),
    };
    let mut state_ops = Vec::with_capacity(target_ops);
    let mut inserted: Vec<Elem> = Vec::new();
    for _ in 0..target_ops {
        if !inserted.is_empty() && rng.random_bool(0.2) {
            let pick = if rng.random_bool(0.5) {
                inserted[rng.random_range(0..inserted.len())]
            } else {
                rng.random_range(0..ELEMENT_RANGE)
            };
            state_ops.push(StateOp::Remove(pick));
        } else {
            let x = rng.random_range(0..ELEMENT_RANGE);
            inserted.push(x);
            state_ops.push(StateOp::Insert(x));
        }
    }

    let aux = if takes_aux {
        Some(if is_index {
            // Indices cover in-range and just-out-of-range.
            rng.random_range(0..(MAX_STATE_OPS as Elem + 2))
        } else if !inserted.is_empty() && rng.random_bool(0.5) {
            inserted[rng.random_range(0..inserted.len())]
        } else {
            rng.random_range(0..ELEMENT_RANGE)
        })
    } else {
        None
    };

    TestCase {
        implementation: target.name.clone(),
        spec: target.spec.clone(),
        op: op.to_string(),
        state_ops,
        aux,
        seed,
        generator_version: GENERATOR_VERSION,
    }
}

fn build_state(factory: &ContainerFactory, state_ops: &[StateOp]) -> Box<dyn DynContainer> {
    let mut c = factory();
    for op in state_ops {
        match op {
            StateOp::Insert(x) => {
                c.apply("insert", Some(*x));
            }
            StateOp::Remove(x) => {
                c.apply("remove", Some(*x));
            }
        }
    }
    c
}

fn outcome_to_value(outcome: OpOutcome) -> ModelValue {
    match outcome {
        OpOutcome::Unit => ModelValue::Null,
        OpOutcome::Bool(b) => ModelValue::Bool(b),
        OpOutcome::Size(n) => ModelValue::Elem(n as Elem),
        OpOutcome::Elem(v) => ModelValue::opt_elem(v),
    }
}

fn run_case(
    case: &TestCase,
    factory: &ContainerFactory,
    spec: &ContainerSpec,
    registry: &BuiltinRegistry,
    domain: &ElementDomain,
) -> Option<FailureKind> {
    let triple = &spec.triples[&case.op];
    let mut container = build_state(factory, &case.state_ops);
    let xs0 = container.model();

    let mut interp = Interp::new(registry, domain);
    let pre_ok = eval_invariant(&spec.invariant_pre, &xs0, &mut interp).and_then(|inv| {
        Ok(inv && eval_pre(&triple.pre, triple.shape, &xs0, case.aux, &mut interp)?)
    });
    match pre_ok {
        Ok(true) => {}
        Ok(false) => {
            return Some(FailureKind::Generator {
                message: format!(
                    "generated state {xs0:?} does not satisfy the precondition of `{}`",
                    case.op
                ),
            })
        }
        Err(e) => return Some(FailureKind::Eval { message: e.to_string() }),
    }

    let post = spec
        .resolve_post(&triple.post_model_op)
        .expect("loaded specifications resolve their model operations");
    let rhs = match post_op_result_value(&post, triple.shape, &xs0, case.aux, &mut interp) {
        Ok(v) => v,
        Err(e) => return Some(FailureKind::Eval { message: e.to_string() }),
    };

    let outcome = container.apply(&case.op, case.aux);
    let post_model = ModelValue::List(container.model());
    let lhs = if triple.shape.returns_value() {
        ModelValue::pair(post_model, outcome_to_value(outcome))
    } else {
        ModelValue::List(container.model())
    };

    if lhs == rhs {
        None
    } else {
        Some(FailureKind::Mismatch {
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        })
    }
}

/// Runs `cases_per_op` randomized cases for every operation of every
/// target. The report is deterministic given the seed.
pub fn run_conformance(
    catalogue: &Catalogue,
    targets: &[Target],
    cases_per_op: usize,
    seed: u64,
) -> Result<ConformanceReport, ConformanceError> {
    let registry = BuiltinRegistry::standard();
    let domain = ElementDomain::of_size(ELEMENT_RANGE as usize);
    let mut entries = Vec::new();
    let mut total_cases = 0;
    let mut total_failures = 0;

    let mut ordered: Vec<&Target> = targets.iter().collect();
    ordered.sort_by(|a, b| a.name.cmp(&b.name));

    for target in ordered {
        let spec = catalogue
            .container(&target.spec)
            .ok_or_else(|| ConformanceError::MissingSpec {
                name: target.name.clone(),
                spec: target.spec.clone(),
            })?;
        for triple in spec.ops(&catalogue.interfaces) {
            let is_index = matches!(
                triple.shape,
                crate::library_spec::interface::OpShape::ObserverIndexOptElem
            );
            let mut failures = Vec::new();
            for index in 0..cases_per_op {
                let case = generate_case(
                    target,
                    &triple.op,
                    triple.shape.takes_aux(),
                    is_index,
                    index,
                    seed,
                );
                if let Some(kind) = run_case(&case, &target.factory, spec, &registry, &domain) {
                    failures.push(Failure { case, kind });
                }
            }
            total_cases += cases_per_op;
            total_failures += failures.len();
            entries.push(OpEntry {
                implementation: target.name.clone(),
                op: triple.op.clone(),
                cases: cases_per_op,
                failures,
            });
        }
    }

    Ok(ConformanceReport {
        seed,
        generator_version: GENERATOR_VERSION,
        cases_per_op,
        entries,
        total_cases,
        total_failures,
    })
}

/// Re-executes one recorded case against the same catalogue and
/// implementations; deterministic, so the outcome matches the original run.
pub fn replay(
    catalogue: &Catalogue,
    targets: &[Target],
    case: &TestCase,
) -> Result<Option<FailureKind>, ConformanceError> {
    if case.generator_version != GENERATOR_VERSION {
        return Err(ConformanceError::GeneratorVersionMismatch {
            case: case.generator_version,
            current: GENERATOR_VERSION,
        });
    }
    let target = targets
        .iter()
        .find(|t| t.name == case.implementation)
        .ok_or_else(|| ConformanceError::UnknownImplementation {
            name: case.implementation.clone(),
        })?;
    let spec = catalogue
        .container(&case.spec)
        .ok_or_else(|| ConformanceError::MissingSpec {
            name: case.implementation.clone(),
            spec: case.spec.clone(),
        })?;
    let registry = BuiltinRegistry::standard();
    let domain = ElementDomain::of_size(ELEMENT_RANGE as usize);
    Ok(run_case(case, &target.factory, spec, &registry, &domain))
}

/// Distinct model-state sizes reached by the generator for one operation;
/// used to check generator coverage.
pub fn generated_sizes(target: &Target, op: &str, cases: usize, seed: u64) -> Vec<usize> {
    let mut sizes: Vec<usize> = (0..cases)
        .map(|index| {
            let case = generate_case(target, op, false, false, index, seed);
            build_state(&target.factory, &case.state_ops).model().len()
        })
        .collect();
    sizes.sort_unstable();
    sizes.dedup();
    sizes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case_seeds_are_stable_and_distinct() {
        let a = case_seed(42, "Vec", "insert", 0);
        let b = case_seed(42, "Vec", "insert", 0);
        let c = case_seed(42, "Vec", "insert", 1);
        let d = case_seed(42, "Vec", "remove", 0);
        let e = case_seed(43, "Vec", "insert", 0);
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_ne!(a, d);
        assert_ne!(a, e);
    }

    #[test]
    fn empty_target_list_yields_empty_report() {
        let report = run_conformance(&Catalogue::empty(), &[], 10, 7).unwrap();
        assert_eq!(report.total_cases, 0);
        assert!(report.entries.is_empty());
        assert!(report.passed());
    }
}
