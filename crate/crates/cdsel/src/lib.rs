pub mod conformance;
pub mod library_spec;
pub mod model_dsl;
pub mod selector;
pub mod spec_lang;
