//! Degree statistics, growth-law and tail-exponent predictions, and the
//! fits that compare the two.

mod curve;
mod fit;
mod report;
mod stats;
mod theory;

pub use curve::{avg_degree_curve, log_spaced, AvgDegreeCurve, SamplerConfig};
pub use fit::{
    fit_tail_exponent, fit_tail_top_decile, linear_fit, power_law_degree, top_decile_dmin,
    LinearFit, TailFit, MIN_TAIL_POINTS,
};
pub use report::RegimeReport;
pub use stats::{edge_snapshots, DegreeStats};
pub use theory::{
    expected_in_degree, expected_in_degree_at, expected_out_degree_law, expected_total_degree,
    extracted_gamma, in_degree_recursion, ln_gamma_ratio, local_exponent, predicted_avg_degree,
    predicted_gamma, regime_classify, AvgDegreeLaw, Regime, REGIME_TOL,
};
