//! Seeded verification campaigns over grids of fields, and their reports.

pub mod campaign;
pub mod cli;
pub mod config;
pub mod report;
pub mod sample;

pub use campaign::{lines_check, run_campaign, run_campaign_with, Execution};
pub use config::{CampaignConfig, Check, FieldId, SetSize};
pub use report::{set_digest, CheckDetail, CheckRecord, Outcome, Report, SummaryRow, TrialRecord};
pub use sample::{sample_point_set, sample_scalar_set, sample_symmetric_set, symmetric_corpus, SymmetricPlan};
