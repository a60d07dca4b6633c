//! Expanding-window one-year-ahead forecasting, out-of-sample R², and the
//! Clark-West MSPE-adjusted test for nested forecasts.
//!
//! For each target year t the null forecast is the prevailing mean of all
//! realized excess returns strictly before t, and the alternative forecast
//! comes from an OLS of the return on the lagged predictor(s), refit on all
//! data strictly before t. Nothing at or after t ever enters a forecast
//! for t.
//!
//! ```text
//! R²_oos = 1 - Σ (r_t - alt_t)² / Σ (r_t - null_t)²
//! CW:      adj_t = (r_t - null_t)² - (r_t - alt_t)² + (null_t - alt_t)²
//!          stat  = mean(adj) / se(mean),  p = 1 - Φ(stat)
//! ```
//!
//! The Clark-West standard error is the plain i.i.d. standard error of the
//! mean over the forecast rows, the usual one-step-ahead convention; a
//! Bartlett-weighted HAC variant is available for sensitivity checks.

use crate::econ;
use crate::error::{Error, Result};
use crate::series::YearSeries;
use crate::stats::{mean, normal_cdf, sample_variance};

/// Default minimum training size: forecasts start at the 21st joint
/// observation.
pub const DEFAULT_MIN_TRAIN: usize = 20;

/// One out-of-sample year: the realized value and the two competing
/// forecasts made with information strictly before `year`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ForecastRow {
    pub year: i32,
    pub actual: f64,
    pub null_forecast: f64,
    pub alt_forecast: f64,
    /// True when the training window was rank deficient and the alternative
    /// forecast fell back to the null.
    pub degraded: bool,
}

/// The forecast track for one (country, asset) cell.
#[derive(Debug, Clone)]
pub struct ForecastSet {
    /// First forecast year.
    pub start_year: i32,
    pub min_train: usize,
    pub rows: Vec<ForecastRow>,
}

impl ForecastSet {
    pub fn degraded_count(&self) -> usize {
        self.rows.iter().filter(|r| r.degraded).count()
    }
}

/// Run the expanding-window harness.
///
/// A "joint observation" is a year t with the target present at t and every
/// predictor present at t-1; forecasts target the joint observations from
/// index `min_train` onward. The null forecast uses every target value
/// before t, joint or not.
pub fn expanding_forecasts(
    target: &YearSeries,
    predictors: &[&YearSeries],
    min_train: usize,
) -> Result<ForecastSet> {
    let joint: Vec<i32> = target
        .years()
        .filter(|&t| predictors.iter().all(|p| p.contains(t - 1)))
        .collect();
    if joint.len() < min_train + 1 {
        return Err(Error::SampleSize {
            need: min_train + 1,
            have: joint.len(),
        });
    }

    let mut rows = Vec::with_capacity(joint.len() - min_train);
    for idx in min_train..joint.len() {
        let year = joint[idx];
        let null_forecast = mean(&target.values_before(year).collect::<Vec<_>>());

        // Refit on all joint observations strictly before the target year.
        let train = &joint[..idx];
        let y: Vec<f64> = train.iter().map(|&s| target.get(s).unwrap()).collect();
        let cols: Vec<Vec<f64>> = predictors
            .iter()
            .map(|p| train.iter().map(|&s| p.get(s - 1).unwrap()).collect())
            .collect();
        let col_refs: Vec<&[f64]> = cols.iter().map(Vec::as_slice).collect();

        let (alt_forecast, degraded) =
            match econ::ols(&y, &col_refs, (train[0], train[train.len() - 1])) {
                Ok(fit) => {
                    let mut pred = fit.intercept;
                    for (j, p) in predictors.iter().enumerate() {
                        pred += fit.slopes[j] * p.get(year - 1).unwrap();
                    }
                    (pred, false)
                }
                // Rank-deficient window: fall back to the null forecast.
                Err(Error::Singular(_)) => (null_forecast, true),
                Err(e) => return Err(e),
            };

        rows.push(ForecastRow {
            year,
            actual: target.get(year).unwrap(),
            null_forecast,
            alt_forecast,
            degraded,
        });
    }

    Ok(ForecastSet {
        start_year: rows[0].year,
        min_train,
        rows,
    })
}

/// Out-of-sample R² against the prevailing-mean benchmark.
pub fn oos_r2(forecasts: &ForecastSet) -> Result<f64> {
    if forecasts.rows.len() < 2 {
        return Err(Error::SampleSize {
            need: 2,
            have: forecasts.rows.len(),
        });
    }
    let mut alt_sse = 0.0;
    let mut null_sse = 0.0;
    for row in &forecasts.rows {
        alt_sse += (row.actual - row.alt_forecast).powi(2);
        null_sse += (row.actual - row.null_forecast).powi(2);
    }
    if null_sse == 0.0 {
        return Err(Error::Degenerate(
            "null forecast errors are identically zero".into(),
        ));
    }
    Ok(1.0 - alt_sse / null_sse)
}

/// Clark-West test result.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClarkWest {
    pub statistic: f64,
    /// One-sided p-value, 1 - Φ(statistic).
    pub p_value: f64,
    /// True when the adjusted loss differential had zero variance
    /// (identical forecasts); the p-value is reported as 0.5.
    pub degenerate: bool,
}

/// Standard-error convention for the Clark-West mean.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CwStdError {
    Iid,
    /// Bartlett-weighted long-run variance with the given bandwidth.
    Hac(usize),
}

pub fn clark_west(forecasts: &ForecastSet) -> Result<ClarkWest> {
    clark_west_with(forecasts, CwStdError::Iid)
}

pub fn clark_west_with(forecasts: &ForecastSet, se: CwStdError) -> Result<ClarkWest> {
    let n = forecasts.rows.len();
    if n < 5 {
        return Err(Error::SampleSize { need: 5, have: n });
    }
    let adj: Vec<f64> = forecasts.rows.iter().map(cw_adjusted_loss).collect();
    let adj_mean = mean(&adj);
    let variance = match se {
        CwStdError::Iid => sample_variance(&adj),
        CwStdError::Hac(lags) => bartlett_long_run_variance(&adj, lags.min(n - 1)),
    };
    if variance == 0.0 {
        return Ok(ClarkWest {
            statistic: 0.0,
            p_value: 0.5,
            degenerate: true,
        });
    }
    // The denominator always uses the forecast-row count.
    let statistic = adj_mean / (variance / n as f64).sqrt();
    Ok(ClarkWest {
        statistic,
        p_value: 1.0 - normal_cdf(statistic),
        degenerate: false,
    })
}

/// MSPE-adjusted loss differential for one row.
fn cw_adjusted_loss(row: &ForecastRow) -> f64 {
    let null_err = row.actual - row.null_forecast;
    let alt_err = row.actual - row.alt_forecast;
    let gap = row.null_forecast - row.alt_forecast;
    null_err * null_err - alt_err * alt_err + gap * gap
}

fn bartlett_long_run_variance(values: &[f64], lags: usize) -> f64 {
    let n = values.len();
    let m = mean(values);
    let centered: Vec<f64> = values.iter().map(|v| v - m).collect();
    let mut s: f64 = centered.iter().map(|v| v * v).sum();
    for lag in 1..=lags {
        let weight = 1.0 - lag as f64 / (lags as f64 + 1.0);
        let gamma: f64 = (lag..n).map(|t| centered[t] * centered[t - lag]).sum();
        s += 2.0 * weight * gamma;
    }
    // Long-run variance on the per-observation scale, n-1 to match the
    // i.i.d. branch at lag 0.
    (s / (n - 1) as f64).max(0.0)
}
