//! Program variant generation: resolve a declared container type into a
//! chosen implementation, emit a wrapper type exposing exactly the declared
//! interfaces' operations, and assemble a compilable project per choice.
//!
//! Resolution works through the module system rather than text
//! substitution: the application source uses the declared type name
//! unqualified, a project manifest maps that name to its property
//! specification, and the generator prepends a module declaration and
//! import binding the name to the generated wrapper.

pub mod project;
pub mod wrapper;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

pub use project::{build_variant, GeneratedProject};
pub use wrapper::wrapper_source;

use crate::library_spec::catalogue::Catalogue;
use crate::library_spec::hoare::ContainerSpec;
use crate::spec_lang::ast::ContainerTypeDecl;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenerateError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("manifest {path}: {message}")]
    Manifest { path: String, message: String },
    #[error("no executable implementation is known for catalogue entry `{container}`")]
    NoImplementation { container: String },
    #[error("container type `{decl}` does not expose `{op}`, called at {file}:{line}:{col}")]
    SourceUsesUndeclaredOp {
        decl: String,
        op: String,
        file: String,
        line: u32,
        col: u32,
    },
    #[error("declaration `{decl}` bounds unknown interface `{name}`")]
    UnknownInterface { decl: String, name: String },
}

/// An application project manifest (`app.toml`): the project name and the
/// declared container type with its property specification file.
#[derive(Debug, Clone)]
pub struct AppManifest {
    pub name: String,
    /// Declared type name -> `.prs` file path (relative to the manifest).
    pub types: BTreeMap<String, PathBuf>,
    pub dir: PathBuf,
}

pub fn load_manifest(app_dir: impl AsRef<Path>) -> Result<AppManifest, GenerateError> {
    let dir = app_dir.as_ref().to_path_buf();
    let path = dir.join("app.toml");
    let display = path.display().to_string();
    let text = std::fs::read_to_string(&path).map_err(|e| GenerateError::Io {
        path: display.clone(),
        message: e.to_string(),
    })?;

    #[derive(serde::Deserialize)]
    struct RawManifest {
        project: RawProject,
        types: BTreeMap<String, String>,
    }
    #[derive(serde::Deserialize)]
    struct RawProject {
        name: String,
    }

    let raw: RawManifest = toml::from_str(&text).map_err(|e| GenerateError::Manifest {
        path: display.clone(),
        message: e.to_string(),
    })?;
    if raw.types.is_empty() {
        return Err(GenerateError::Manifest {
            path: display,
            message: "manifest declares no container types".to_string(),
        });
    }
    Ok(AppManifest {
        name: raw.project.name,
        types: raw
            .types
            .into_iter()
            .map(|(name, rel)| (name, dir.join(rel)))
            .collect(),
        dir,
    })
}

/// The executable type in `cdsel-containers` backing a catalogue entry.
pub fn rust_type_for(container: &str) -> Option<&'static str> {
    Some(match container {
        "Vec" => "VecContainer",
        "LinkedList" => "LinkedListContainer",
        "HashSet" => "HashSetContainer",
        "BTreeSet" => "BTreeSetContainer",
        "SortedVec" => "SortedVec",
        "LazySortedVec" => "LazySortedVec",
        "UniqueVec" => "UniqueVec",
        "LazyUniqueVec" => "LazyUniqueVec",
        "Stack" => "Stack",
        "Queue" => "Queue",
        _ => return None,
    })
}

pub fn snake_case(name: &str) -> String {
    let mut out = String::new();
    for (i, c) in name.chars().enumerate() {
        if c.is_ascii_uppercase() {
            if i > 0 {
                out.push('_');
            }
            out.push(c.to_ascii_lowercase());
        } else {
            out.push(c);
        }
    }
    out
}

/// The operations a declaration exposes: the union of its bound interfaces'
/// operations, in bound order.
pub fn exposed_ops(
    decl: &ContainerTypeDecl,
    catalogue: &Catalogue,
) -> Result<Vec<(String, crate::library_spec::interface::OpShape)>, GenerateError> {
    let mut ops = Vec::new();
    for bound in &decl.bounds {
        let sig = catalogue
            .interfaces
            .get(bound)
            .ok_or_else(|| GenerateError::UnknownInterface {
                decl: decl.name.clone(),
                name: bound.clone(),
            })?;
        for (op, shape) in &sig.operations {
            if !ops.iter().any(|(n, _)| n == op) {
                ops.push((op.clone(), *shape));
            }
        }
    }
    Ok(ops)
}

/// Scans application source for calls to non-exposed operations on
/// variables of the declared type. A heuristic front-end check with
/// locations; the generated wrapper makes any miss a compile error anyway.
pub fn scan_undeclared_ops(
    source: &str,
    file: &str,
    decl_name: &str,
    exposed: &[String],
) -> Result<(), GenerateError> {
    // Variables bound to the declared type: `let x = Decl::...` or
    // `let x: Decl<...>`.
    let mut vars: Vec<String> = Vec::new();
    for line in source.lines() {
        let line = strip_line_comment(line);
        if let Some(rest) = line.trim_start().strip_prefix("let ") {
            let rest = rest.trim_start().trim_start_matches("mut ");
            let name: String = rest
                .chars()
                .take_while(|c| c.is_ascii_alphanumeric() || *c == '_')
                .collect();
            if name.is_empty() {
                continue;
            }
            let after = &rest[name.len()..];
            let is_decl = after
                .split_once('=')
                .map(|(_, rhs)| rhs.trim_start().starts_with(decl_name))
                .unwrap_or(false)
                || after
                    .trim_start()
                    .strip_prefix(':')
                    .map(|ty| ty.trim_start().starts_with(decl_name))
                    .unwrap_or(false);
            if is_decl && !vars.contains(&name) {
                vars.push(name);
            }
        }
    }

    for (lineno, raw_line) in source.lines().enumerate() {
        let line = strip_line_comment(raw_line);
        for var in &vars {
            let mut search_from = 0;
            while let Some(found) = line[search_from..].find(var.as_str()) {
                let start = search_from + found;
                search_from = start + var.len();
                // Whole-word receiver match followed by a method call.
                let before_ok = start == 0
                    || !line[..start]
                        .chars()
                        .next_back()
                        .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_');
                let rest = &line[start + var.len()..];
                if !before_ok || !rest.starts_with('.') {
                    continue;
                }
                let method: String = rest[1..]
                    .chars()
                    .take_while(|c| c.is_ascii_alphanumeric() || *c == '_')
                    .collect();
                let after = &rest[1 + method.len()..];
                if method.is_empty() || !after.trim_start().starts_with('(') {
                    continue;
                }
                if !exposed.contains(&method) {
                    return Err(GenerateError::SourceUsesUndeclaredOp {
                        decl: decl_name.to_string(),
                        op: method,
                        file: file.to_string(),
                        line: (lineno + 1) as u32,
                        col: (start + var.len() + 2) as u32,
                    });
                }
            }
        }
    }
    Ok(())
}

fn strip_line_comment(line: &str) -> &str {
    match line.find("//") {
        Some(idx) => &line[..idx],
        None => line,
    }
}

/// Where generated projects find the containers crate. Defaults to this
/// workspace's copy; override for out-of-tree use.
pub fn default_containers_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../cdsel-containers")
}

/// Generates one program variant: the application's sources with the
/// declared type resolved to `implementation` through a generated wrapper
/// module.
pub fn generate(
    manifest: &AppManifest,
    decl: &ContainerTypeDecl,
    implementation: &ContainerSpec,
    catalogue: &Catalogue,
    out_dir: impl AsRef<Path>,
    containers_path: &Path,
) -> Result<GeneratedProject, GenerateError> {
    let ops = exposed_ops(decl, catalogue)?;
    let rust_type = rust_type_for(&implementation.name).ok_or_else(|| {
        GenerateError::NoImplementation {
            container: implementation.name.clone(),
        }
    })?;

    let main_path = manifest.dir.join("src/main.rs");
    let source = std::fs::read_to_string(&main_path).map_err(|e| GenerateError::Io {
        path: main_path.display().to_string(),
        message: e.to_string(),
    })?;
    let exposed_names: Vec<String> = ops.iter().map(|(n, _)| n.clone()).collect();
    scan_undeclared_ops(
        &source,
        &main_path.display().to_string(),
        &decl.name,
        &exposed_names,
    )?;

    let module = snake_case(&decl.name);
    let crate_name = format!(
        "{}_{}",
        snake_case(&manifest.name),
        snake_case(&implementation.name)
    );
    let out = out_dir.as_ref().join(&crate_name);
    let wrapper = wrapper_source(&decl.name, rust_type, &ops);
    let main = format!(
        "mod {module};\nuse {module}::{};\n\n// ---- application source ----\n{source}",
        decl.name
    );

    project::write_project(
        &out,
        &crate_name,
        containers_path,
        &[(format!("{module}.rs"), wrapper), ("main.rs".to_string(), main)],
    )
    .map_err(|e| GenerateError::Io {
        path: out.display().to_string(),
        message: e.to_string(),
    })?;

    Ok(GeneratedProject {
        dir: out,
        crate_name,
        implementation: implementation.name.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn snake_case_splits_camel_humps() {
        assert_eq!(snake_case("UniqueCon"), "unique_con");
        assert_eq!(snake_case("AscendingIndexableCon"), "ascending_indexable_con");
    }

    #[test]
    fn undeclared_op_scan_finds_the_call_site() {
        let src = "fn main() {\n    let mut c = UniqueCon::<u64>::new();\n    c.insert(1);\n    c.first();\n}\n";
        let exposed = vec!["insert".to_string(), "len".to_string()];
        let err = scan_undeclared_ops(src, "main.rs", "UniqueCon", &exposed).unwrap_err();
        match err {
            GenerateError::SourceUsesUndeclaredOp { op, line, .. } => {
                assert_eq!(op, "first");
                assert_eq!(line, 4);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn scan_ignores_other_receivers_and_comments() {
        let src = "fn main() {\n    let mut c = UniqueCon::<u64>::new();\n    let mut out = Vec::new();\n    out.push(1); // c.first() in a comment\n    c.insert(2);\n}\n";
        let exposed = vec!["insert".to_string()];
        assert!(scan_undeclared_ops(src, "main.rs", "UniqueCon", &exposed).is_ok());
    }
}
