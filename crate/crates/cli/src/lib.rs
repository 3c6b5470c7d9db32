//! Library side of the `loewy` command: group specs, the shared analysis
//! session, suites, and the JSONL/CSV formats.

pub mod error;
pub mod groupdef;
pub mod record;
pub mod session;
pub mod suite;

pub use error::{CliError, CliResult};
pub use record::{ReportRow, ResultRecord, VerdictRecord};
pub use session::{Expectation, Session};
