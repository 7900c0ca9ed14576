//! Experiment harness around `singquad-core`: integrand specifications,
//! parallel sweeps over the quadrature size, CSV records, envelope slope
//! fits and plain-text reports for the five reference examples.

pub mod checks;
pub mod config;
pub mod examples;
pub mod fit;
pub mod integrand;
pub mod report;
pub mod sweep;

pub use config::Config;
pub use examples::{example, ExampleId, ExampleParams};
pub use fit::{fit_envelope_slope, fit_envelope_slope_by, least_squares_slope};
pub use integrand::{describe, parse_integrand};
pub use report::report;
pub use sweep::{read_csv, run_sweep, write_csv, ExperimentRecord, SweepConfig, CSV_HEADER};
