//! Batch front end: job documents in, text or structured reports out.

pub mod job;
pub mod report;
pub mod run;

pub use job::{parse_job, CsvOptions, JobSpec, Mode, OutputOptions, Payload, ReportFormat};
pub use report::Report;
pub use run::{family_csv, run, run_check, run_family, run_sweep, run_verify_oracle};
