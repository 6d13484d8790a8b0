//! Example registry, verification suite, file formats and reports for
//! `k3lab-core`.

pub mod io;
pub mod registry;
pub mod report;
pub mod suite;

pub use registry::{ExampleCase, Registry};
pub use report::{CheckReport, Outcome, Status, SuiteReport};
pub use suite::{run_suite, Group, SuiteConfig, SuiteFilter};
