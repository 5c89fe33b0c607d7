//! Census of non-split, irreducible (n,1)-handlebody links up to six
//! crossings: runs enumeration, move search, composite construction and
//! invariant computation, and checks the results against the published
//! tables.

pub mod analysis;
pub mod config;
pub mod expected;
pub mod fixtures;
pub mod pipeline;
pub mod report;
pub mod verify;

pub use analysis::{Analysis, Certificate, ChiralityFlag, Groups};
pub use config::Config;
pub use expected::ExpectedTables;
pub use fixtures::Fixtures;
pub use pipeline::{run_pipeline, run_with_fixtures, write_report, PipelineError};
pub use report::{CensusEntry, Provenance, Report};
pub use verify::{verify, Verification};
