//! Emitters and verification suites behind the command-line tool.

pub mod emit;
pub mod suite;

pub use emit::{
    algebra_file, algebra_text, load_algebra, load_module, module_file, to_json, AlgebraFile, ModuleFile,
    ProjectiveSummary, SCHEMA_VERSION,
};
pub use suite::{expected_jets, parse_d_range, run_suite, sweep_parameter, Status, Suite, SuiteResult};
