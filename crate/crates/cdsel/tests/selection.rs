//! End-to-end selection over the shipped catalogue and property specs.

use std::path::PathBuf;

use cdsel::library_spec::{load_catalogue, Catalogue};
use cdsel::model_dsl::BuiltinRegistry;
use cdsel::selector::{
    filter_syntactic, revalidate_trace, select, BoundProperty, CandidateStatus, CheckConfig,
    SelectionReport, Verdict,
};
use cdsel::spec_lang::{parse_spec, refinement_conjuncts, typecheck, TypedSpec};

fn repo_path(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..").join(rel)
}

fn full_catalogue() -> Catalogue {
    load_catalogue(repo_path("catalogue")).expect("shipped catalogue loads")
}

fn typed_spec(src: &str, catalogue: &Catalogue) -> TypedSpec {
    let spec = parse_spec(src).expect("spec parses");
    typecheck(&spec, &catalogue.interfaces, &BuiltinRegistry::standard()).expect("spec typechecks")
}

fn typed_spec_file(name: &str, catalogue: &Catalogue) -> TypedSpec {
    let src = std::fs::read_to_string(repo_path(name)).expect("spec file readable");
    typed_spec(&src, catalogue)
}

fn run(spec: &TypedSpec, catalogue: &Catalogue) -> SelectionReport {
    select(spec, catalogue, &CheckConfig::default()).expect("selection runs")
}

fn valid_set(report: &SelectionReport, decl: &str) -> Vec<String> {
    report.declaration(decl).expect("declaration in report").valid.clone()
}

#[test]
fn shipped_catalogue_has_the_ten_entries() {
    let cat = full_catalogue();
    assert_eq!(
        cat.container_names(),
        vec![
            "BTreeSet",
            "HashSet",
            "LazySortedVec",
            "LazyUniqueVec",
            "LinkedList",
            "Queue",
            "SortedVec",
            "Stack",
            "UniqueVec",
            "Vec",
        ]
    );
}

#[test]
fn standard_subcatalogue_restricts_to_eight_or_four() {
    let cat = full_catalogue();
    let eight = cat.restrict(&[
        "Vec",
        "LinkedList",
        "HashSet",
        "BTreeSet",
        "SortedVec",
        "LazySortedVec",
        "UniqueVec",
        "LazyUniqueVec",
    ]);
    assert_eq!(eight.containers.len(), 8);
    let empty = cat.restrict(&[]);
    assert_eq!(empty.containers.len(), 0);
}

#[test]
fn hash_set_is_ruled_out_syntactically() {
    let cat = full_catalogue();
    let four = cat.restrict(&["Vec", "LinkedList", "HashSet", "BTreeSet"]);
    let spec = typed_spec_file("specs/ascending_indexable.prs", &four);
    let decl = &spec.decls[0].decl;
    let candidates: Vec<&str> = filter_syntactic(decl, &four)
        .unwrap()
        .iter()
        .map(|s| s.name.as_str())
        .collect();
    assert_eq!(candidates, vec!["BTreeSet", "LinkedList", "Vec"]);
}

#[test]
fn empty_bounds_admit_every_entry() {
    let cat = full_catalogue();
    let spec = typed_spec("property p { \\c -> true }", &cat);
    // A declaration with no bounds cannot be written in the surface syntax
    // (bounds are nonempty), so check the filter directly.
    let decl = cdsel::spec_lang::ContainerTypeDecl {
        name: "AnyCon".into(),
        elem_param: "T".into(),
        var: "c".into(),
        bounds: vec![],
        refinement: cdsel::spec_lang::Refinement {
            conjuncts: vec![cdsel::spec_lang::Term::app(
                cdsel::spec_lang::Term::var("p"),
                cdsel::spec_lang::Term::var("c"),
            )],
        },
    };
    let _ = spec;
    let candidates = filter_syntactic(&decl, &cat).unwrap();
    assert_eq!(candidates.len(), 10);
}

#[test]
fn ascending_indexable_selects_btreeset_over_standard_four() {
    let cat = full_catalogue().restrict(&["Vec", "LinkedList", "HashSet", "BTreeSet"]);
    let spec = typed_spec_file("specs/ascending_indexable.prs", &cat);
    let report = run(&spec, &cat);
    assert_eq!(valid_set(&report, "AscendingIndexableCon"), vec!["BTreeSet"]);

    let decl = report.declaration("AscendingIndexableCon").unwrap();
    assert!(!decl.syntactic_candidates.contains(&"HashSet".to_string()));
}

#[test]
fn ascending_indexable_over_full_catalogue_adds_sorted_vecs() {
    let cat = full_catalogue();
    let spec = typed_spec_file("specs/ascending_indexable.prs", &cat);
    let report = run(&spec, &cat);
    assert_eq!(
        valid_set(&report, "AscendingIndexableCon"),
        vec!["BTreeSet", "LazySortedVec", "SortedVec"]
    );
}

#[test]
fn descending_selects_nothing_over_the_eight_entry_catalogue() {
    let cat = full_catalogue().restrict(&[
        "Vec",
        "LinkedList",
        "HashSet",
        "BTreeSet",
        "SortedVec",
        "LazySortedVec",
        "UniqueVec",
        "LazyUniqueVec",
    ]);
    let spec = typed_spec_file("specs/descending_con.prs", &cat);
    let report = run(&spec, &cat);
    assert!(valid_set(&report, "DescendingCon").is_empty());
    // Every candidate is rejected with a concrete counterexample; none are
    // merely vacuous or timed out.
    let decl = report.declaration("DescendingCon").unwrap();
    for cand in &decl.candidates {
        assert_eq!(cand.status, CandidateStatus::Rejected, "{}", cand.container);
    }
}

#[test]
fn lifo_accepts_stack_and_rejects_queue() {
    let cat = full_catalogue();
    let spec = typed_spec_file("specs/stack_con.prs", &cat);
    let report = run(&spec, &cat);
    assert_eq!(valid_set(&report, "StackCon"), vec!["Stack"]);

    let decl = report.declaration("StackCon").unwrap();
    assert_eq!(decl.syntactic_candidates, vec!["Queue", "Stack"]);
    let queue = decl.candidates.iter().find(|c| c.container == "Queue").unwrap();
    assert_eq!(queue.status, CandidateStatus::Rejected);
}

#[test]
fn unique_con_selects_the_four_set_like_entries() {
    let cat = full_catalogue();
    let spec = typed_spec_file("specs/unique_con.prs", &cat);
    let report = run(&spec, &cat);
    assert_eq!(
        valid_set(&report, "UniqueCon"),
        vec!["BTreeSet", "HashSet", "LazyUniqueVec", "UniqueVec"]
    );
}

#[test]
fn vec_insert_breaks_ascending_with_a_minimal_witness() {
    let cat = full_catalogue();
    let spec = typed_spec_file("specs/ascending_indexable.prs", &cat);
    let report = run(&spec, &cat);
    let decl = report.declaration("AscendingIndexableCon").unwrap();
    let vec_report = decl.candidates.iter().find(|c| c.container == "Vec").unwrap();
    let invalid = vec_report
        .checks
        .iter()
        .find_map(|c| match &c.verdict {
            Verdict::Invalid { counterexample } if c.op == "insert" => Some(counterexample),
            _ => None,
        })
        .expect("Vec::insert violates ascending");
    // The witness re-validates by direct evaluation.
    let vec_spec = cat.container("Vec").unwrap();
    let conjunct = &refinement_conjuncts(&spec.decls[0].decl)[0];
    let property = BoundProperty::bind(
        conjunct,
        "c",
        &spec.properties,
        vec_spec,
        &cat.interfaces,
        &BuiltinRegistry::standard(),
        &CheckConfig::default(),
    )
    .unwrap();
    assert!(revalidate_trace(
        invalid,
        &property,
        vec_spec,
        &CheckConfig::default(),
        &BuiltinRegistry::standard()
    )
    .unwrap());
}

#[test]
fn unsatisfiable_property_is_vacuous_never_valid() {
    let cat = full_catalogue();
    let spec = typed_spec(
        "property never { \\c -> false }\n\
         type NeverCon<T> = {c <: (ContainerT) | (never c)}",
        &cat,
    );
    let report = run(&spec, &cat);
    assert!(valid_set(&report, "NeverCon").is_empty());
    let decl = report.declaration("NeverCon").unwrap();
    for cand in &decl.candidates {
        assert_eq!(cand.status, CandidateStatus::Vacuous, "{}", cand.container);
        for check in &cand.checks {
            assert!(
                matches!(check.verdict, Verdict::Vacuous { .. }),
                "{} x {} was {:?}",
                cand.container,
                check.op,
                check.verdict
            );
        }
    }
}

#[test]
fn zero_budget_times_out_and_never_selects() {
    let cat = full_catalogue().restrict(&["Vec"]);
    let spec = typed_spec_file("specs/unique_con.prs", &cat);
    let cfg = CheckConfig::new(3, 4, std::time::Duration::ZERO).unwrap();
    let report = select(&spec, &cat, &cfg).unwrap();
    let decl = report.declaration("UniqueCon").unwrap();
    assert!(decl.valid.is_empty());
    assert_eq!(decl.candidates[0].status, CandidateStatus::TimedOut);
}

#[test]
fn lifo_on_stack_holds_even_at_model_size_zero() {
    let cat = full_catalogue();
    let spec = typed_spec_file("specs/stack_con.prs", &cat);
    let cfg = CheckConfig::new(0, 4, std::time::Duration::from_secs(30)).unwrap();
    let report = select(&spec, &cat, &cfg).unwrap();
    assert_eq!(valid_set(&report, "StackCon"), vec!["Stack"]);
}

#[test]
fn strictly_ascending_con_over_ordered_candidates_is_btreeset_only() {
    let cat = full_catalogue();
    let spec = typed_spec_file("specs/strictly_ascending_con.prs", &cat);
    let report = run(&spec, &cat);
    let valid = valid_set(&report, "StrictlyAscendingCon");
    // Among candidates whose specs expose ordering (IndexableT), only
    // BTreeSet survives the unique-and-ascending conjunction.
    let ordered: Vec<String> = valid
        .iter()
        .filter(|name| cat.container(name).unwrap().interfaces.contains(&"IndexableT".to_string()))
        .cloned()
        .collect();
    assert_eq!(ordered, vec!["BTreeSet"]);
}

#[test]
fn reports_serialize_deterministically() {
    let cat = full_catalogue();
    let spec = typed_spec_file("specs/unique_con.prs", &cat);
    let a = run(&spec, &cat).to_json();
    let b = run(&spec, &cat).to_json();
    assert_eq!(a, b);
    let parsed = SelectionReport::from_json(&a).unwrap();
    assert_eq!(parsed.to_json(), a);
}
