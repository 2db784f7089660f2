//! Two-stage selection: syntactic filtering by interface bounds, then
//! semantic checking of every refinement conjunct against every candidate's
//! Hoare triples by bounded counterexample search.

pub mod check;
pub mod config;
pub mod report;
pub mod verdict;

use std::time::Instant;

pub use check::{
    check_interaction_property, check_property_on_op, revalidate_trace, BoundProperty,
};
pub use config::{CheckConfig, ConfigError};
pub use report::{
    CandidateReport, CandidateStatus, CheckRecord, DeclarationReport, ReportConfig,
    SelectionReport,
};
pub use verdict::{CounterexampleTrace, Verdict, INTERACTION_OP};

use crate::library_spec::catalogue::Catalogue;
use crate::library_spec::hoare::{ContainerSpec, HoareSpec};
use crate::model_dsl::builtins::BuiltinRegistry;
use crate::spec_lang::ast::ContainerTypeDecl;
use crate::spec_lang::refinement_conjuncts;
use crate::spec_lang::typecheck::TypedSpec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SelectError {
    #[error("declaration `{decl}` bounds unknown interface `{name}`")]
    UnknownInterface { decl: String, name: String },
}

/// Stage one: the candidates whose interface list is a superset of the
/// declaration's bounds, in catalogue (lexicographic) order.
pub fn filter_syntactic<'c>(
    decl: &ContainerTypeDecl,
    catalogue: &'c Catalogue,
) -> Result<Vec<&'c ContainerSpec>, SelectError> {
    for bound in &decl.bounds {
        if !catalogue.interfaces.contains_key(bound) {
            return Err(SelectError::UnknownInterface {
                decl: decl.name.clone(),
                name: bound.clone(),
            });
        }
    }
    Ok(catalogue
        .containers
        .values()
        .filter(|spec| spec.implements_all(&decl.bounds))
        .collect())
}

/// The operations a declaration exposes on a candidate: the union of its
/// bound interfaces' operations, in bound order.
fn checked_ops<'c>(
    decl: &ContainerTypeDecl,
    spec: &'c ContainerSpec,
    catalogue: &Catalogue,
) -> Vec<&'c HoareSpec> {
    let mut out: Vec<&HoareSpec> = Vec::new();
    for bound in &decl.bounds {
        if let Some(sig) = catalogue.interfaces.get(bound) {
            for (op, _) in &sig.operations {
                if let Some(triple) = spec.triples.get(op) {
                    if !out.iter().any(|t| t.op == triple.op) {
                        out.push(triple);
                    }
                }
            }
        }
    }
    out
}

/// Stage two over every declaration in the spec. Candidate checks are
/// independent; the report lists candidates in catalogue order, so the
/// outcome does not depend on evaluation order.
pub fn select(
    typed: &TypedSpec,
    catalogue: &Catalogue,
    cfg: &CheckConfig,
) -> Result<SelectionReport, SelectError> {
    let registry = BuiltinRegistry::standard();
    let mut declarations = Vec::new();

    for tdecl in &typed.decls {
        let decl = &tdecl.decl;
        let candidates = filter_syntactic(decl, catalogue)?;
        let conjuncts = refinement_conjuncts(decl);

        let mut candidate_reports = Vec::new();
        let mut valid = Vec::new();

        for spec in &candidates {
            let deadline = Some(Instant::now() + cfg.budget);
            let ops = checked_ops(decl, spec, catalogue);
            let mut checks = Vec::new();
            let mut error = None;

            'conjuncts: for conjunct in &conjuncts {
                let property = match BoundProperty::bind(
                    conjunct,
                    &decl.var,
                    &typed.properties,
                    spec,
                    &catalogue.interfaces,
                    &registry,
                    cfg,
                ) {
                    Ok(p) => p,
                    Err(e) => {
                        error = Some(e.to_string());
                        break 'conjuncts;
                    }
                };

                for triple in &ops {
                    match check_property_on_op(&property, spec, triple, cfg, deadline, &registry)
                    {
                        Ok(verdict) => checks.push(CheckRecord {
                            property: property.label.clone(),
                            op: triple.op.clone(),
                            verdict,
                        }),
                        Err(e) => {
                            error = Some(e.to_string());
                            break 'conjuncts;
                        }
                    }
                }

                if property.bounded {
                    match check_interaction_property(&property, cfg, deadline, &registry) {
                        Ok(verdict) => checks.push(CheckRecord {
                            property: property.label.clone(),
                            op: INTERACTION_OP.to_string(),
                            verdict,
                        }),
                        Err(e) => {
                            error = Some(e.to_string());
                            break 'conjuncts;
                        }
                    }
                }
            }

            let status = if error.is_some() {
                CandidateStatus::Error
            } else if checks.iter().any(|c| matches!(c.verdict, Verdict::Invalid { .. })) {
                CandidateStatus::Rejected
            } else if checks.iter().any(|c| matches!(c.verdict, Verdict::Timeout { .. })) {
                CandidateStatus::TimedOut
            } else if checks.iter().any(|c| matches!(c.verdict, Verdict::Vacuous { .. })) {
                CandidateStatus::Vacuous
            } else {
                CandidateStatus::Valid
            };
            if status == CandidateStatus::Valid {
                valid.push(spec.name.clone());
            }
            candidate_reports.push(CandidateReport {
                container: spec.name.clone(),
                status,
                checks,
                error,
            });
        }

        declarations.push(DeclarationReport {
            type_name: decl.name.clone(),
            bounds: decl.bounds.clone(),
            syntactic_candidates: candidates.iter().map(|s| s.name.clone()).collect(),
            candidates: candidate_reports,
            valid,
        });
    }

    Ok(SelectionReport {
        config: ReportConfig {
            model_size: cfg.model_size,
            domain_size: cfg.domain_size,
            budget_secs: cfg.budget.as_secs(),
        },
        declarations,
    })
}
