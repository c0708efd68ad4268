use std::fmt;

use statrs::function::gamma::digamma;

use crate::error::{Error, Result};
use crate::network::ModelParams;

/// Absolute tolerance on `theta_in + theta_out` when testing against 1.
pub const REGIME_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Constant,
    Logarithmic,
    Polynomial,
}

impl Regime {
    pub fn name(self) -> &'static str {
        match self {
            Regime::Constant => "constant",
            Regime::Logarithmic => "logarithmic",
            Regime::Polynomial => "polynomial",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn regime_classify(params: &ModelParams) -> Regime {
    let s = params.theta_sum();
    if (s - 1.0).abs() <= REGIME_TOL {
        Regime::Logarithmic
    } else if s < 1.0 {
        Regime::Constant
    } else {
        Regime::Polynomial
    }
}

/// Large-n growth law of the average degree.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AvgDegreeLaw {
    /// `<d(n)> -> value`.
    Constant { value: f64 },
    /// `<d(n)> ~ slope * ln n + C`.
    Logarithmic { slope: f64 },
    /// `<d(n)> ~ C * n^rho`.
    Polynomial { rho: f64 },
}

pub fn predicted_avg_degree(params: &ModelParams) -> AvgDegreeLaw {
    let s = params.theta_sum();
    match regime_classify(params) {
        Regime::Constant => AvgDegreeLaw::Constant {
            value: 2.0 * params.alpha / (1.0 - s),
        },
        Regime::Logarithmic => AvgDegreeLaw::Logarithmic {
            slope: 2.0 * params.alpha,
        },
        Regime::Polynomial => AvgDegreeLaw::Polynomial { rho: s - 1.0 },
    }
}

fn gamma_in_branch(params: &ModelParams) -> Result<f64> {
    if params.theta_in <= 0.0 {
        return Err(Error::NoPowerLaw(
            "theta_in = 0 with theta_in + theta_out <= 1".into(),
        ));
    }
    Ok((1.0 + params.theta_in) / params.theta_in)
}

fn gamma_out_branch(params: &ModelParams) -> Result<f64> {
    if params.theta_out >= 1.0 {
        return Err(Error::NoPowerLaw(
            "theta_out = 1 with theta_in + theta_out >= 1".into(),
        ));
    }
    Ok((2.0 - params.theta_out) / (1.0 - params.theta_out))
}

/// Tail exponent of the degree distribution.
///
/// On the boundary `theta_in + theta_out = 1` both branches are evaluated
/// and must agree to `1e-12`.
pub fn predicted_gamma(params: &ModelParams) -> Result<f64> {
    match regime_classify(params) {
        Regime::Constant => gamma_in_branch(params),
        Regime::Polynomial => gamma_out_branch(params),
        Regime::Logarithmic => {
            let a = gamma_in_branch(params)?;
            let b = gamma_out_branch(params)?;
            assert!(
                (a - b).abs() < 1e-12 * a.max(1.0),
                "gamma branches disagree on the boundary: {a} vs {b}"
            );
            Ok(a)
        }
    }
}

// Bernoulli-number terms B_2k / (2k (2k-1)) of the Stirling series.
const STIRLING: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
];

fn stirling_tail(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut term = inv;
    let mut sum = 0.0;
    for c in STIRLING {
        sum += c * term;
        term *= inv2;
    }
    sum
}

/// `ln Gamma(x + t) - ln Gamma(x)` for `x > 0`, `t >= 0`, without forming
/// either gamma value. Accurate for `x` up to the f64 range, where `x + t`
/// rounds to `x`.
pub fn ln_gamma_ratio(x: f64, t: f64) -> f64 {
    debug_assert!(x > 0.0 && t >= 0.0);
    if t == 0.0 {
        return 0.0;
    }
    // Shift both arguments above 10 with Gamma(y + 1) = y Gamma(y).
    let mut x = x;
    let mut acc = 0.0;
    while x < 10.0 {
        acc += x.ln() - (x + t).ln();
        x += 1.0;
    }
    let r = t / x;
    let main = (x + t - 0.5) * r.ln_1p() + t * x.ln() - t;
    acc + main + stirling_tail(x + t) - stirling_tail(x)
}

fn check_degree_args(j: f64, n: f64, dout: f64, params: &ModelParams) -> Result<()> {
    params.validate()?;
    if !(j >= 2.0 && j <= n) {
        return Err(Error::Precondition(format!(
            "expected 2 <= j <= n, got j = {j}, n = {n}"
        )));
    }
    if !(dout >= 0.0 && dout.is_finite()) {
        return Err(Error::Precondition(format!(
            "out-degree must be finite and >= 0, got {dout}"
        )));
    }
    Ok(())
}

fn finite(value: f64, what: &str) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite(format!("{what} evaluated to {value}")))
    }
}

/// Expected in-degree at size `n` of node `j` with out-degree `dout`, from
/// the gamma-ratio closed form. Real-valued `j`, `n` are accepted so the
/// profile can be differentiated.
///
/// `theta_in = 0` makes the closed form 0/0; that case iterates the
/// difference equation instead.
pub fn expected_in_degree_at(j: f64, n: f64, dout: f64, params: &ModelParams) -> Result<f64> {
    check_degree_args(j, n, dout, params)?;
    let a = params.alpha + params.theta_out * dout;
    if params.theta_in == 0.0 {
        return in_degree_recursion(j, n, dout, params);
    }
    let t = params.theta_in;
    let base = params.alpha + params.beta - 1.0;
    let log_ratio = ln_gamma_ratio(base + n, t) - ln_gamma_ratio(base + j, t);
    finite(a / t * log_ratio.exp_m1(), "expected in-degree")
}

pub fn expected_in_degree(j: u64, n: u64, dout: u64, params: &ModelParams) -> Result<f64> {
    expected_in_degree_at(j as f64, n as f64, dout as f64, params)
}

/// Iterates `D(m + 1) = D(m) + (alpha + theta_out dout + theta_in D(m)) /
/// (m + alpha + beta - 1)` from `D(j) = 0`. For `theta_in = 0` the sum is
/// taken in closed form with digamma once it exceeds a million steps.
pub fn in_degree_recursion(j: f64, n: f64, dout: f64, params: &ModelParams) -> Result<f64> {
    check_degree_args(j, n, dout, params)?;
    let a = params.alpha + params.theta_out * dout;
    let shift = params.alpha + params.beta - 1.0;
    let steps = n - j;
    if params.theta_in == 0.0 && steps > 1e6 {
        return finite(
            a * (digamma(n + shift) - digamma(j + shift)),
            "in-degree sum",
        );
    }
    let mut d = 0.0;
    let mut m = j;
    while m < n {
        d += (a + params.theta_in * d) / (m + shift);
        m += 1.0;
    }
    finite(d, "in-degree recursion")
}

/// Expected out-degree of node `j` under the large-j growth law of each
/// regime; `c` is the free constant (additive for logarithmic,
/// multiplicative for polynomial, unused for constant).
pub fn expected_out_degree_law(j: f64, c: f64, params: &ModelParams) -> f64 {
    let s = params.theta_sum();
    match regime_classify(params) {
        Regime::Constant => params.alpha / (1.0 - s),
        Regime::Logarithmic => params.alpha * j.ln() + c,
        Regime::Polynomial => c * j.powf(s - 1.0),
    }
}

/// Expected total degree of node `j` at size `n`: closed-form in-degree plus
/// the regime out-degree law.
pub fn expected_total_degree(j: f64, n: f64, c: f64, params: &ModelParams) -> Result<f64> {
    let dout = expected_out_degree_law(j, c, params);
    Ok(expected_in_degree_at(j, n, dout, params)? + dout)
}

/// Local tail exponent `gamma = f f'' / f'^2` of a decreasing degree
/// profile `f(j)`, by central differences in `u = ln j`.
pub fn local_exponent<F>(profile: F, j: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let h = 1e-3;
    let u = j.ln();
    let f0 = profile(j)?;
    let fp = profile((u + h).exp())?;
    let fm = profile((u - h).exp())?;
    let fu = (fp - fm) / (2.0 * h);
    let fuu = (fp - 2.0 * f0 + fm) / (h * h);
    // f_j = f_u / j, f_jj = (f_uu - f_u) / j^2.
    finite((fuu / fu - 1.0) * f0 / fu, "local exponent")
}

/// Exponent implied by the closed-form expected degree at `1 << j << n`.
pub fn extracted_gamma(j: f64, n: f64, c: f64, params: &ModelParams) -> Result<f64> {
    local_exponent(|x| expected_total_degree(x, n, c, params), j)
}
