//! Asymptotic slope fits and `(s, σ, θ)` sweep tables.
//!
//! Near the endpoints of `s ∈ (0, 1)` the contact angle is linear to leading
//! order: `θ ≈ arccos(-σ) - (1-s) ζ_σ` as `s → 1` and
//! `θ ≈ (π/2)(1+σ) - s η_σ` as `s → 0`. The slopes have no closed form here;
//! they are estimated by least squares on geometric sample grids pushed
//! toward the endpoint, and the fitted intercept is compared against the
//! known limit as a consistency measure.

use crate::error::{Error, Result};
use crate::wedge::AngleSolution;
use std::f64::consts::PI;

/// Which endpoint of `s ∈ (0, 1)` the fit extrapolates to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitEnd {
    SToOne,
    SToZero,
}

/// Sample exponents used for the two fits.
pub const S_TO_ONE_SAMPLES: [f64; 4] = [0.90, 0.95, 0.975, 0.99];
pub const S_TO_ZERO_SAMPLES: [f64; 4] = [0.01, 0.025, 0.05, 0.10];

/// Least-squares slope estimate for one endpoint.
#[derive(Debug, Clone)]
pub struct AsymptoticFit {
    pub sigma: f64,
    pub limit_end: LimitEnd,
    /// Estimated `ζ_σ` (s → 1) or `η_σ` (s → 0).
    pub slope: f64,
    /// |fitted intercept − known limit angle|.
    pub intercept_check: f64,
    /// Max absolute deviation of the line from the samples.
    pub fit_residual: f64,
}

/// Estimate the endpoint slope for `sigma` using `solver(s, sigma)`.
pub fn estimate_slope<F>(sigma: f64, end: LimitEnd, solver: F) -> Result<AsymptoticFit>
where
    F: Fn(f64, f64) -> Result<AngleSolution>,
{
    if !(sigma.abs() < 1.0) {
        return Err(Error::domain(format!(
            "slope estimation needs |sigma| < 1, got {sigma}"
        )));
    }
    let samples: &[f64] = match end {
        LimitEnd::SToOne => &S_TO_ONE_SAMPLES,
        LimitEnd::SToZero => &S_TO_ZERO_SAMPLES,
    };
    // Fit θ ≈ intercept − x·slope with x the distance to the endpoint.
    let mut xs = Vec::with_capacity(samples.len());
    let mut ys = Vec::with_capacity(samples.len());
    for &s in samples {
        let sol = solver(s, sigma)?;
        let theta = sol.theta.ok_or_else(|| {
            Error::domain(format!("solver returned no angle at s = {s}, sigma = {sigma}"))
        })?;
        let x = match end {
            LimitEnd::SToOne => 1.0 - s,
            LimitEnd::SToZero => s,
        };
        xs.push(x);
        ys.push(theta);
    }
    let (intercept, lin) = least_squares_line(&xs, &ys);
    let limit = match end {
        LimitEnd::SToOne => (-sigma).acos(),
        LimitEnd::SToZero => 0.5 * PI * (1.0 + sigma),
    };
    let fit_residual = xs
        .iter()
        .zip(&ys)
        .map(|(&x, &y)| (intercept + lin * x - y).abs())
        .fold(0.0f64, f64::max);
    Ok(AsymptoticFit {
        sigma,
        limit_end: end,
        slope: -lin,
        intercept_check: (intercept - limit).abs(),
        fit_residual,
    })
}

fn least_squares_line(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let sx: f64 = xs.iter().sum();
    let sy: f64 = ys.iter().sum();
    let sxx: f64 = xs.iter().map(|x| x * x).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| x * y).sum();
    let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    let intercept = (sy - slope * sx) / n;
    (intercept, slope)
}

/// One sweep row. Failed or angle-free rows keep NaN entries so the table
/// stays rectangular.
#[derive(Debug, Clone)]
pub struct SweepRow {
    pub s: f64,
    pub sigma: f64,
    pub theta: f64,
    pub residual: f64,
    pub error: Option<String>,
}

/// Deterministic `(s, σ) → θ` table, ordered lexicographically by `(s, σ)`.
#[derive(Debug, Clone, Default)]
pub struct SweepTable {
    pub rows: Vec<SweepRow>,
}

impl SweepTable {
    /// CSV serialization: header `s,sigma,theta,residual`, LF line endings,
    /// shortest round-trip float formatting.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("s,sigma,theta,residual\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{}\n",
                fmt_f64(row.s),
                fmt_f64(row.sigma),
                fmt_f64(row.theta),
                fmt_f64(row.residual)
            ));
        }
        out
    }
}

/// Shortest round-trip decimal form, with lowercase `nan`/`inf` markers.
pub fn fmt_f64(x: f64) -> String {
    if x.is_nan() {
        "nan".to_string()
    } else if x.is_infinite() {
        if x > 0.0 { "inf".to_string() } else { "-inf".to_string() }
    } else {
        format!("{x}")
    }
}

/// Run `solver` over the grid `s_values × sigma_values`.
///
/// Per-row solver failures are recorded in the row rather than aborting the
/// sweep. Rows come out sorted by `(s, σ)` regardless of input order.
pub fn sweep<F>(s_values: &[f64], sigma_values: &[f64], solver: F) -> Result<SweepTable>
where
    F: Fn(f64, f64) -> Result<AngleSolution>,
{
    for &s in s_values {
        if !(s > 0.0 && s < 1.0) {
            return Err(Error::domain(format!("sweep exponent s = {s} outside (0, 1)")));
        }
    }
    for &sigma in sigma_values {
        if !(sigma.abs() <= 1.0) {
            return Err(Error::domain(format!("sweep sigma = {sigma} outside [-1, 1]")));
        }
    }
    let mut rows = Vec::with_capacity(s_values.len() * sigma_values.len());
    for &s in s_values {
        for &sigma in sigma_values {
            rows.push(match solver(s, sigma) {
                Ok(sol) => SweepRow {
                    s,
                    sigma,
                    theta: sol.theta.unwrap_or(f64::NAN),
                    residual: if sol.theta.is_some() { sol.residual } else { f64::NAN },
                    error: None,
                },
                Err(e) => SweepRow {
                    s,
                    sigma,
                    theta: f64::NAN,
                    residual: f64::NAN,
                    error: Some(e.to_string()),
                },
            });
        }
    }
    rows.sort_by(|a, b| {
        a.s.partial_cmp(&b.s)
            .unwrap()
            .then(a.sigma.partial_cmp(&b.sigma).unwrap())
    });
    Ok(SweepTable { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::FractionalKernel;
    use crate::wedge::{solve_contact_angle, ContactAngleProblem};

    fn solver(s: f64, sigma: f64) -> Result<AngleSolution> {
        let k = FractionalKernel::isotropic(2, s)?;
        solve_contact_angle(&ContactAngleProblem::single_kernel(k, sigma)?, 1e-6)
    }

    #[test]
    fn single_row_symmetric_case() {
        let table = sweep(&[0.5], &[0.0], solver).unwrap();
        assert_eq!(table.rows.len(), 1);
        assert!((table.rows[0].theta - PI / 2.0).abs() < 1e-4);
    }

    #[test]
    fn rows_sorted_and_monotone_in_sigma() {
        let table = sweep(&[0.5, 0.25], &[0.5, -0.5, 0.0], solver).unwrap();
        assert_eq!(table.rows.len(), 6);
        assert!(table.rows.windows(2).all(|w| {
            (w[0].s, w[0].sigma) < (w[1].s, w[1].sigma)
        }));
        for chunk in table.rows.chunks(3) {
            assert!(chunk.windows(2).all(|w| w[0].theta < w[1].theta));
        }
    }

    #[test]
    fn csv_shape_and_endings() {
        let table = sweep(&[0.5], &[-1.0, 0.0, 1.0], solver).unwrap();
        let csv = table.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("s,sigma,theta,residual"));
        assert_eq!(csv.lines().count(), 4);
        assert!(csv.ends_with('\n') && !csv.contains('\r'));
        // Degenerate endpoints are exact in the table.
        assert!(csv.contains("0.5,-1,0,0"));
    }

    #[test]
    fn flat_slope_at_zero_adhesion() {
        let fit = estimate_slope(0.0, LimitEnd::SToOne, solver).unwrap();
        assert!(fit.intercept_check < 1e-4, "intercept check {}", fit.intercept_check);
        assert!(fit.slope.abs() < 1e-3, "slope {}", fit.slope);
        let fit0 = estimate_slope(0.0, LimitEnd::SToZero, solver).unwrap();
        assert!(fit0.intercept_check < 1e-4);
        assert!(fit0.slope.abs() < 1e-3);
    }

    #[test]
    fn rejects_degenerate_sigma() {
        assert!(estimate_slope(1.0, LimitEnd::SToOne, solver).is_err());
    }
}
