//! Command-line front end: JSON documents in, stable JSON reports out.

pub mod commands;
pub mod doc;
pub mod error;
