//! Ordinary least squares with Newey-West HAC inference.
//!
//! The design matrix is always `[1, x_1, ..., x_p]` (intercept first). The
//! HAC covariance of the coefficient vector is the sandwich
//!
//! ```text
//! V = (X'X)^-1 S (X'X)^-1
//! S = Γ0 + Σ_{l=1..L} (1 - l/(L+1)) (Γ_l + Γ_l')
//! Γ_l = Σ_t (x_t e_t)(x_{t-l} e_{t-l})'
//! ```
//!
//! with Bartlett weights and no degrees-of-freedom correction (plain
//! sandwich). With `L = 0` this is exactly the HC0 estimator. The default
//! bandwidth is the plug-in rule `L = floor(4 (n/100)^(2/9))`.

use crate::error::{Error, Result};
use crate::panel::{Asset, DerivedSeries};
use crate::series::YearSeries;

/// One fitted regression: coefficients, HAC t-statistics and fit summary.
#[derive(Debug, Clone)]
pub struct RegressionFit {
    pub intercept: f64,
    /// One slope per predictor, in input order.
    pub slopes: Vec<f64>,
    /// Newey-West t-statistics for the slopes; empty until HAC inference ran.
    pub hac_t: Vec<f64>,
    pub r_squared: f64,
    pub n_obs: usize,
    /// (first, last) calendar year of the aligned sample.
    pub span: (i32, i32),
    pub residuals: Vec<f64>,
    /// Bartlett bandwidth used for `hac_t`, when HAC inference ran.
    pub nw_lags: Option<usize>,
    /// Set when a numerically non-positive HAC variance had to be clamped.
    pub variance_clamped: bool,
}

/// Newey-West bandwidth policy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LagRule {
    /// Plug-in rule floor(4 (n/100)^(2/9)).
    Auto,
    Fixed(usize),
}

impl LagRule {
    pub fn resolve(self, n_obs: usize) -> usize {
        match self {
            LagRule::Auto => auto_lags(n_obs),
            LagRule::Fixed(l) => l,
        }
    }
}

/// Plug-in Newey-West bandwidth: floor(4 (n/100)^(2/9)).
pub fn auto_lags(n_obs: usize) -> usize {
    (4.0 * (n_obs as f64 / 100.0).powf(2.0 / 9.0)).floor() as usize
}

/// OLS of `y` on an intercept plus `predictors` (column slices, all of
/// length `y.len()`). Rows with missing values must be dropped before the
/// call; this function sees complete data only.
pub fn ols(y: &[f64], predictors: &[&[f64]], span: (i32, i32)) -> Result<RegressionFit> {
    let n = y.len();
    let k = predictors.len() + 1;
    for p in predictors {
        debug_assert_eq!(p.len(), n);
    }
    if n <= k {
        return Err(Error::SampleSize {
            need: k + 1,
            have: n,
        });
    }

    // Normal equations on the (k x k) cross-product matrix.
    let xtx = cross_products(predictors, n);
    let mut xty = vec![0.0; k];
    for t in 0..n {
        xty[0] += y[t];
        for (j, p) in predictors.iter().enumerate() {
            xty[j + 1] += p[t] * y[t];
        }
    }
    let xtx_inv = invert(&xtx)
        .ok_or_else(|| Error::Singular(format!("rank-deficient design ({k} columns, {n} rows)")))?;
    let beta: Vec<f64> = (0..k)
        .map(|i| (0..k).map(|j| xtx_inv[i][j] * xty[j]).sum())
        .collect();

    let mut residuals = Vec::with_capacity(n);
    let mut ssr = 0.0;
    for t in 0..n {
        let mut fitted = beta[0];
        for (j, p) in predictors.iter().enumerate() {
            fitted += beta[j + 1] * p[t];
        }
        let e = y[t] - fitted;
        ssr += e * e;
        residuals.push(e);
    }
    let y_mean = y.iter().sum::<f64>() / n as f64;
    let sst: f64 = y.iter().map(|v| (v - y_mean) * (v - y_mean)).sum();
    let r_squared = if sst > 0.0 {
        (1.0 - ssr / sst).clamp(0.0, 1.0)
    } else {
        0.0
    };

    Ok(RegressionFit {
        intercept: beta[0],
        slopes: beta[1..].to_vec(),
        hac_t: Vec::new(),
        r_squared,
        n_obs: n,
        span,
        residuals,
        nw_lags: None,
        variance_clamped: false,
    })
}

/// Newey-West t-statistics for the slopes of `fit`. `predictors` must be the
/// columns the fit was estimated on, in the same order.
pub fn newey_west_t(
    fit: &RegressionFit,
    predictors: &[&[f64]],
    lags: usize,
) -> Result<NeweyWestInference> {
    let n = fit.n_obs;
    let k = predictors.len() + 1;
    if lags >= n {
        return Err(Error::SampleSize {
            need: lags + 1,
            have: n,
        });
    }
    debug_assert_eq!(fit.residuals.len(), n);

    // Score rows g_t = x_t e_t, intercept column first.
    let scores: Vec<Vec<f64>> = (0..n)
        .map(|t| {
            let e = fit.residuals[t];
            let mut g = Vec::with_capacity(k);
            g.push(e);
            for p in predictors {
                g.push(p[t] * e);
            }
            g
        })
        .collect();

    let mut s = vec![vec![0.0; k]; k];
    for g in &scores {
        for i in 0..k {
            for j in 0..k {
                s[i][j] += g[i] * g[j];
            }
        }
    }
    for lag in 1..=lags {
        let weight = 1.0 - lag as f64 / (lags as f64 + 1.0);
        for t in lag..n {
            let (gt, gl) = (&scores[t], &scores[t - lag]);
            for i in 0..k {
                for j in 0..k {
                    // w (Γ_l + Γ_l') accumulated element-wise.
                    s[i][j] += weight * (gt[i] * gl[j] + gl[i] * gt[j]);
                }
            }
        }
    }

    let xtx = cross_products(predictors, n);
    let xtx_inv = invert(&xtx).ok_or_else(|| Error::Singular("X'X not invertible".into()))?;
    let cov = sandwich(&xtx_inv, &s);

    let mut clamped = false;
    let t_stats: Vec<f64> = fit
        .slopes
        .iter()
        .enumerate()
        .map(|(j, slope)| {
            let mut var = cov[j + 1][j + 1];
            if var <= 0.0 {
                var = f64::EPSILON;
                clamped = true;
            }
            slope / var.sqrt()
        })
        .collect();
    Ok(NeweyWestInference {
        t_stats,
        variance_clamped: clamped,
    })
}

/// Slope t-statistics plus the clamping flag from one HAC pass.
#[derive(Debug, Clone)]
pub struct NeweyWestInference {
    pub t_stats: Vec<f64>,
    pub variance_clamped: bool,
}

/// OLS plus Newey-West inference in one call; the bandwidth actually used is
/// recorded on the fit.
pub fn fit_with_hac(
    y: &[f64],
    predictors: &[&[f64]],
    span: (i32, i32),
    lag_rule: LagRule,
) -> Result<RegressionFit> {
    let mut fit = ols(y, predictors, span)?;
    let lags = lag_rule.resolve(fit.n_obs).min(fit.n_obs - 1);
    let nw = newey_west_t(&fit, predictors, lags)?;
    fit.hac_t = nw.t_stats;
    fit.nw_lags = Some(lags);
    fit.variance_clamped = nw.variance_clamped;
    Ok(fit)
}

/// Minimum aligned observations for the predictive regressions.
pub const MIN_REGRESSION_OBS: usize = 10;

/// Predictive regression: excess return at t on predictor level(s) at t-1,
/// over the years where the return and every lagged predictor exist.
pub fn predictive_regression(
    returns: &YearSeries,
    predictors: &[&YearSeries],
    lag_rule: LagRule,
) -> Result<RegressionFit> {
    let (y, cols, span) = align_lagged(returns, predictors)?;
    let col_refs: Vec<&[f64]> = cols.iter().map(Vec::as_slice).collect();
    fit_with_hac(&y, &col_refs, span, lag_rule)
}

/// Payout-growth regression Δd_t on dp_{t-1}. Defined for equity and
/// housing only: bond coupons are fixed, so bond payout growth is zero.
pub fn payout_growth_regression(
    series: &DerivedSeries,
    lag_rule: LagRule,
) -> Result<RegressionFit> {
    if !matches!(series.asset, Asset::Equity | Asset::Housing) {
        return Err(Error::UnsupportedAsset(format!(
            "payout-growth regression is defined for equity and housing, not {}",
            series.asset
        )));
    }
    let (y, cols, span) = align_lagged(&series.payout_growth, &[&series.payout_price])?;
    let col_refs: Vec<&[f64]> = cols.iter().map(Vec::as_slice).collect();
    fit_with_hac(&y, &col_refs, span, lag_rule)
}

/// Aligned regression sample: target values, one column per predictor, and
/// the calendar span.
type AlignedSample = (Vec<f64>, Vec<Vec<f64>>, (i32, i32));

/// Pairwise deletion with a one-year predictor lag: keep years t where the
/// target and every predictor at t-1 are present.
fn align_lagged(target: &YearSeries, predictors: &[&YearSeries]) -> Result<AlignedSample> {
    let mut y = Vec::new();
    let mut cols: Vec<Vec<f64>> = vec![Vec::new(); predictors.len()];
    let mut years = Vec::new();
    'target: for (t, value) in target.iter() {
        let mut row = Vec::with_capacity(predictors.len());
        for p in predictors {
            match p.get(t - 1) {
                Some(v) => row.push(v),
                None => continue 'target,
            }
        }
        y.push(value);
        for (j, v) in row.into_iter().enumerate() {
            cols[j].push(v);
        }
        years.push(t);
    }
    if y.len() < MIN_REGRESSION_OBS {
        return Err(Error::SampleSize {
            need: MIN_REGRESSION_OBS,
            have: y.len(),
        });
    }
    let span = (years[0], years[years.len() - 1]);
    Ok((y, cols, span))
}

fn cross_products(predictors: &[&[f64]], n: usize) -> Vec<Vec<f64>> {
    let k = predictors.len() + 1;
    let mut xtx = vec![vec![0.0; k]; k];
    for t in 0..n {
        let mut row = Vec::with_capacity(k);
        row.push(1.0);
        for p in predictors {
            row.push(p[t]);
        }
        for i in 0..k {
            for j in 0..k {
                xtx[i][j] += row[i] * row[j];
            }
        }
    }
    xtx
}

fn sandwich(bread: &[Vec<f64>], meat: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let k = bread.len();
    let mut tmp = vec![vec![0.0; k]; k];
    for i in 0..k {
        for j in 0..k {
            tmp[i][j] = (0..k).map(|m| bread[i][m] * meat[m][j]).sum();
        }
    }
    let mut out = vec![vec![0.0; k]; k];
    for i in 0..k {
        for j in 0..k {
            out[i][j] = (0..k).map(|m| tmp[i][m] * bread[m][j]).sum();
        }
    }
    out
}

/// Gauss-Jordan inverse with partial pivoting. `None` when rank deficient.
fn invert(matrix: &[Vec<f64>]) -> Option<Vec<Vec<f64>>> {
    let k = matrix.len();
    let scale = matrix
        .iter()
        .flat_map(|row| row.iter().map(|v| v.abs()))
        .fold(0.0_f64, f64::max)
        .max(1.0);
    let mut aug: Vec<Vec<f64>> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..k).map(|j| if i == j { 1.0 } else { 0.0 }));
            r
        })
        .collect();

    for col in 0..k {
        let pivot_row =
            (col..k).max_by(|&a, &b| aug[a][col].abs().partial_cmp(&aug[b][col].abs()).unwrap())?;
        if aug[pivot_row][col].abs() < 1e-12 * scale {
            return None;
        }
        aug.swap(col, pivot_row);
        let pivot = aug[col][col];
        for v in aug[col].iter_mut() {
            *v /= pivot;
        }
        for row in 0..k {
            if row == col {
                continue;
            }
            let factor = aug[row][col];
            if factor != 0.0 {
                let pivot_row = aug[col].clone();
                for (v, p) in aug[row].iter_mut().zip(&pivot_row) {
                    *v -= factor * p;
                }
            }
        }
    }
    Some(aug.into_iter().map(|row| row[k..].to_vec()).collect())
}
