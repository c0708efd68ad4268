use crate::error::{Error, Result};

/// Minimum number of observations at or above `dmin` for a tail fit.
pub const MIN_TAIL_POINTS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailFit {
    pub gamma: f64,
    pub stderr: f64,
    /// Observations with `d >= dmin`.
    pub m: usize,
    pub dmin: u32,
}

/// Discrete power-law MLE with the -0.5 continuity correction:
/// `gamma = 1 + m / sum ln(d / (dmin - 0.5))` over `d >= dmin`.
pub fn fit_tail_exponent(degrees: &[u32], dmin: u32) -> Result<TailFit> {
    if dmin == 0 {
        return Err(Error::Precondition("dmin must be >= 1".into()));
    }
    let x0 = dmin as f64 - 0.5;
    let mut m = 0usize;
    let mut log_sum = 0.0;
    for &d in degrees.iter().filter(|&&d| d >= dmin) {
        m += 1;
        log_sum += (d as f64 / x0).ln();
    }
    if m < MIN_TAIL_POINTS {
        return Err(Error::TooFewTailPoints {
            got: m,
            need: MIN_TAIL_POINTS,
        });
    }
    // All-equal tails at d = dmin still give ln(dmin / (dmin - 0.5)) > 0,
    // which is a fit of an unbounded exponent; reject those too.
    if degrees.iter().filter(|&&d| d >= dmin).all(|&d| d == dmin) || log_sum <= 0.0 {
        return Err(Error::DegenerateTail(format!(
            "all {m} tail degrees equal {dmin}"
        )));
    }
    let gamma = 1.0 + m as f64 / log_sum;
    Ok(TailFit {
        gamma,
        stderr: (gamma - 1.0) / (m as f64).sqrt(),
        m,
        dmin,
    })
}

/// Smallest degree among the top 10% of nodes, at least 1.
pub fn top_decile_dmin(degrees: &[u32]) -> u32 {
    if degrees.is_empty() {
        return 1;
    }
    let mut sorted = degrees.to_vec();
    sorted.sort_unstable();
    let k = (sorted.len() as f64 * 0.9).floor() as usize;
    sorted[k.min(sorted.len() - 1)].max(1)
}

/// Tail fit with `dmin` from [`top_decile_dmin`].
pub fn fit_tail_top_decile(degrees: &[u32]) -> Result<TailFit> {
    fit_tail_exponent(degrees, top_decile_dmin(degrees))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearFit {
    pub slope: f64,
    pub intercept: f64,
    pub slope_stderr: f64,
}

/// Ordinary least squares `y = slope * x + intercept`.
pub fn linear_fit(xs: &[f64], ys: &[f64]) -> Result<LinearFit> {
    if xs.len() != ys.len() {
        return Err(Error::Precondition(format!(
            "x and y lengths differ ({} vs {})",
            xs.len(),
            ys.len()
        )));
    }
    let k = xs.len();
    if k < 2 {
        return Err(Error::Precondition(
            "need at least 2 points to fit a line".into(),
        ));
    }
    let kf = k as f64;
    let mx = xs.iter().sum::<f64>() / kf;
    let my = ys.iter().sum::<f64>() / kf;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    if sxx == 0.0 {
        return Err(Error::Precondition("x values are all equal".into()));
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let slope_stderr = if k > 2 {
        let rss: f64 = xs
            .iter()
            .zip(ys)
            .map(|(x, y)| {
                let r = y - slope * x - intercept;
                r * r
            })
            .sum();
        (rss / (kf - 2.0) / sxx).sqrt()
    } else {
        0.0
    };
    Ok(LinearFit {
        slope,
        intercept,
        slope_stderr,
    })
}

/// Integer power-law sample with tail `P(D >= d) ~ d^(1 - gamma)` above
/// `dmin`: continuous inverse-CDF draws from `dmin - 0.5`, rounded.
pub fn power_law_degree(u: f64, gamma: f64, dmin: u32) -> u32 {
    let x = (dmin as f64 - 0.5) * (1.0 - u).powf(-1.0 / (gamma - 1.0));
    x.round().min(u32::MAX as f64) as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_small_and_flat_tails() {
        let few = vec![5u32; 99];
        assert_eq!(
            fit_tail_exponent(&few, 5),
            Err(Error::TooFewTailPoints { got: 99, need: 100 })
        );
        let flat = vec![7u32; 1000];
        assert!(matches!(
            fit_tail_exponent(&flat, 7),
            Err(Error::DegenerateTail(_))
        ));
        assert!(matches!(
            fit_tail_exponent(&flat, 0),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn known_log_sum() {
        let degrees: Vec<u32> = (0..200).map(|k| if k % 2 == 0 { 2 } else { 6 }).collect();
        let fit = fit_tail_exponent(&degrees, 2).unwrap();
        let sum = 100.0 * (2.0f64 / 1.5).ln() + 100.0 * (6.0f64 / 1.5).ln();
        assert!((fit.gamma - (1.0 + 200.0 / sum)).abs() < 1e-12);
        assert!((fit.stderr - (fit.gamma - 1.0) / 200f64.sqrt()).abs() < 1e-12);
        assert_eq!(fit.m, 200);
    }

    #[test]
    fn decile() {
        let degrees: Vec<u32> = (0..100).collect();
        assert_eq!(top_decile_dmin(&degrees), 90);
        assert_eq!(top_decile_dmin(&[0, 0, 0]), 1);
        assert_eq!(top_decile_dmin(&[]), 1);
    }

    #[test]
    fn line() {
        let xs = [1.0, 2.0, 3.0, 4.0];
        let ys: Vec<f64> = xs.iter().map(|x| 2.5 * x - 1.0).collect();
        let f = linear_fit(&xs, &ys).unwrap();
        assert!((f.slope - 2.5).abs() < 1e-12);
        assert!((f.intercept + 1.0).abs() < 1e-12);
        assert!(f.slope_stderr < 1e-12);
        assert!(linear_fit(&[1.0], &[1.0]).is_err());
        assert!(linear_fit(&[1.0, 1.0], &[1.0, 2.0]).is_err());
    }

    #[test]
    fn power_law_draws() {
        assert_eq!(power_law_degree(0.0, 3.0, 10), 10);
        // P(D >= 2 * 9.5) = 1/4 at gamma = 3.
        assert_eq!(power_law_degree(0.75, 3.0, 10), 19);
    }
}
