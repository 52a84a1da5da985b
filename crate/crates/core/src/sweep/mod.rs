//! Parameter sweeps, figure presets, CSV output and channel validation.

pub mod config;
pub mod csv;
pub mod presets;
pub mod run;
pub mod validate;

pub use config::{ConfigMap, FamilyParams, Grid, SweepAxis, SweepConfig};
pub use csv::{csv_string, emit_csv, format_number, write_csv_file};
pub use presets::{figure_preset, FigurePreset, Panel, FIGURE_NAMES};
pub use run::{evaluate_point, run_sweep, SweepRow};
pub use validate::{parse_kraus, read_kraus_file, validate_channel, ValidationReport};
