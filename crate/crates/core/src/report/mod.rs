//! Comparison tables, report rendering and the settings behind the `radial`
//! command-line tool.

mod config;
mod render;
mod run;
mod tables;

pub use config::{parse_pair, parse_potential, parse_range, RunConfig, KNOWN_KEYS, UNITS_ENV};
pub use render::{energy_unit, parse_json, render_records, render_table, sig6, Document, Format, Meta, Record};
pub use run::{execute, BesselZeroRow, Command, LevelRow, OracleCommand, OracleRow, TurningPointRow};
pub use tables::{reproduce_table, reproduce_table_with, ComparisonRow, Table, TableId, TableParams};
