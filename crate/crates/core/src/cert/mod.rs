//! Certificate checks for the Hopf and Whitehead link annihilators.

pub mod ops;
pub mod pipeline;
pub mod registry;
pub mod report;
pub mod sample;
pub mod suites;

pub use pipeline::{annwrel_reduction, pipeline, Pipeline};
pub use registry::{build_named, names, NamedOperator, NamedValue};
pub use report::{Failure, Status, VerificationReport};
pub use suites::{run_suite, Suite};
