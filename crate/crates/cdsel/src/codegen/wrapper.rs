//! Wrapper emission: a struct named after the declared container type,
//! delegating to the chosen implementation and exposing only the declared
//! interfaces' operations. Calling anything else fails to compile.

use crate::library_spec::interface::OpShape;

/// Renders the wrapper module source for one (declaration, implementation)
/// choice. `ops` is the exposed operation set in declaration order.
pub fn wrapper_source(decl_name: &str, rust_type: &str, ops: &[(String, OpShape)]) -> String {
    let mut traits = vec!["ContainerT"];
    if ops.iter().any(|(_, s)| {
        matches!(
            s,
            OpShape::ObserverOptElem | OpShape::ObserverIndexOptElem
        )
    }) {
        traits.push("IndexableT");
    }
    if ops
        .iter()
        .any(|(n, s)| *s == OpShape::MutatorOptElem || (n == "push" && *s == OpShape::MutatorElemUnit))
    {
        traits.push("StackT");
    }

    let bound = "Ord + std::hash::Hash + Clone + 'static";
    let mut out = String::new();
    out.push_str("// Generated code; do not edit.\n");
    out.push_str(&format!(
        "use cdsel_containers::{{{}, {rust_type}}};\n\n",
        traits.join(", ")
    ));
    out.push_str(&format!("pub struct {decl_name}<T: {bound}> {{\n"));
    out.push_str(&format!("    inner: {rust_type}<T>,\n}}\n\n"));
    out.push_str(&format!("impl<T: {bound}> {decl_name}<T> {{\n"));
    out.push_str(&format!(
        "    pub fn new() -> Self {{\n        Self {{ inner: {rust_type}::new() }}\n    }}\n"
    ));
    for (op, shape) in ops {
        out.push('\n');
        out.push_str(&method_source(op, *shape));
    }
    out.push_str("}\n\n");
    out.push_str(&format!(
        "impl<T: {bound}> Default for {decl_name}<T> {{\n    fn default() -> Self {{\n        Self::new()\n    }}\n}}\n"
    ));
    out
}

fn method_source(op: &str, shape: OpShape) -> String {
    use OpShape::*;
    let (sig, call) = match shape {
        MutatorElemUnit => (format!("(&mut self, x: T)"), format!("self.inner.{op}(x)")),
        MutatorUnit => (format!("(&mut self)"), format!("self.inner.{op}()")),
        MutatorElemOptElem => (
            format!("(&mut self, x: T) -> Option<T>"),
            format!("self.inner.{op}(x)"),
        ),
        MutatorOptElem => (
            format!("(&mut self) -> Option<T>"),
            format!("self.inner.{op}()"),
        ),
        ObserverElemBool => (
            format!("(&self, x: &T) -> bool"),
            format!("self.inner.{op}(x)"),
        ),
        ObserverBool => (format!("(&self) -> bool"), format!("self.inner.{op}()")),
        ObserverSize => (format!("(&self) -> usize"), format!("self.inner.{op}()")),
        ObserverIndexOptElem => (
            format!("(&self, n: usize) -> Option<T>"),
            format!("self.inner.{op}(n)"),
        ),
        ObserverOptElem => (
            format!("(&self) -> Option<T>"),
            format!("self.inner.{op}()"),
        ),
    };
    format!("    pub fn {op}{sig} {{\n        {call}\n    }}\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wrapper_exposes_exactly_the_declared_ops() {
        let ops = vec![
            ("len".to_string(), OpShape::ObserverSize),
            ("insert".to_string(), OpShape::MutatorElemUnit),
        ];
        let src = wrapper_source("UniqueCon", "HashSetContainer", &ops);
        assert!(src.contains("pub fn len(&self) -> usize"));
        assert!(src.contains("pub fn insert(&mut self, x: T)"));
        assert!(!src.contains("pub fn first"));
        assert!(!src.contains("pub fn remove"));
        assert!(src.contains("use cdsel_containers::{ContainerT, HashSetContainer};"));
    }

    #[test]
    fn stack_ops_import_the_stack_trait() {
        let ops = vec![
            ("push".to_string(), OpShape::MutatorElemUnit),
            ("pop".to_string(), OpShape::MutatorOptElem),
        ];
        let src = wrapper_source("StackCon", "Stack", &ops);
        assert!(src.contains("StackT"));
        assert!(src.contains("pub fn pop(&mut self) -> Option<T>"));
    }
}
