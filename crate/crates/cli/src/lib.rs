//! Command-line front end for `morse-pdcm-core`: configuration, parallel
//! grid scans, CSV export and the verification ledger.

pub mod app;
pub mod config;
pub mod ledger;
pub mod scan;
pub mod suites;
