//! Mean-variance backtest of null (prevailing-mean) versus alternative
//! (prediction-based) forecasts.
//!
//! Each forecast year the investor allocates
//!
//! ```text
//! w_t = clamp( (1/γ) r̂_t / σ̂²_t , 0, 1.5 )
//! ```
//!
//! between the risky asset and local bills, with σ̂²_t the sample variance
//! of the past 20 realized excess returns. Portfolio arithmetic runs in
//! simple-return space: R_p = R_f + w (R_a - R_f). Performance is reported
//! as annualized Sharpe ratios, certainty-equivalent-return (CER) gains in
//! percentage points with a delta-method z-statistic, and the turnover of
//! the prediction portfolio relative to the null portfolio.
//!
//! CER is the mean portfolio return minus (γ/2) times its variance. The
//! turnover rate is the average of
//! Σ_k |w_{k,t+1} - w_{k,t}| over the two "assets" (bill and risky leg),
//! which collapses to (1/T) Σ_t 2 |w_{t+1} - w_t| with T transitions.

use crate::error::{Error, Result};
use crate::oos::ForecastSet;
use crate::series::YearSeries;
use crate::stats::{mean, sample_covariance, sample_sd, sample_variance};

/// Weight bounds: no short sales, at most 50% leverage.
pub const WEIGHT_FLOOR: f64 = 0.0;
pub const WEIGHT_CAP: f64 = 1.5;

/// Default risk-aversion coefficient.
pub const DEFAULT_GAMMA: f64 = 5.0;

/// Default realized-variance window.
pub const DEFAULT_VARIANCE_WINDOW: usize = 20;

/// Mean-variance weight on the risky asset, clamped to [0, 1.5].
/// `r_hat` is the forecast excess return in decimal, `sigma2` the forecast
/// variance in decimal².
pub fn mv_weight(r_hat: f64, sigma2: f64, gamma: f64) -> Result<f64> {
    if sigma2 <= 0.0 {
        return Err(Error::Domain(format!(
            "forecast variance must be positive, got {sigma2}"
        )));
    }
    Ok(((r_hat / sigma2) / gamma).clamp(WEIGHT_FLOOR, WEIGHT_CAP))
}

/// Sample variance (n-1) of the last `window` observations of `history`.
/// `history` must already end strictly before the forecast year.
pub fn variance_forecast(history: &[f64], window: usize) -> Result<f64> {
    if history.len() < window {
        return Err(Error::SampleSize {
            need: window,
            have: history.len(),
        });
    }
    Ok(sample_variance(&history[history.len() - window..]))
}

/// Realized path of one mean-variance portfolio.
#[derive(Debug, Clone)]
pub struct PortfolioTrack {
    pub years: Vec<i32>,
    /// Risky weight per year, already clamped.
    pub weights: Vec<f64>,
    /// Realized simple portfolio return per year.
    pub returns: Vec<f64>,
    pub gamma: f64,
    /// Years dropped for missing aligned data.
    pub skipped_years: Vec<i32>,
}

impl PortfolioTrack {
    pub fn len(&self) -> usize {
        self.years.len()
    }

    pub fn is_empty(&self) -> bool {
        self.years.is_empty()
    }
}

/// Realize a weight path against simple asset and bill returns.
/// Years missing either return are skipped and recorded.
pub fn realized_track(
    weights: &[(i32, f64)],
    asset_simple: &YearSeries,
    bills: &YearSeries,
    gamma: f64,
) -> PortfolioTrack {
    let mut track = PortfolioTrack {
        years: Vec::new(),
        weights: Vec::new(),
        returns: Vec::new(),
        gamma,
        skipped_years: Vec::new(),
    };
    for &(year, w) in weights {
        match (asset_simple.get(year), bills.get(year)) {
            (Some(r_asset), Some(r_bill)) => {
                track.years.push(year);
                track.weights.push(w);
                track.returns.push(r_bill + w * (r_asset - r_bill));
            }
            _ => track.skipped_years.push(year),
        }
    }
    track
}

/// Certainty equivalent return in percentage points:
/// 100 (mean - (γ/2) var), variance with n-1 denominator.
pub fn cer(track: &PortfolioTrack) -> Result<f64> {
    if track.len() < 2 {
        return Err(Error::SampleSize {
            need: 2,
            have: track.len(),
        });
    }
    Ok(100.0 * (mean(&track.returns) - 0.5 * track.gamma * sample_variance(&track.returns)))
}

/// Annual Sharpe ratio of the track against bills, in decimal.
pub fn sharpe(track: &PortfolioTrack, bills: &YearSeries) -> Result<f64> {
    if track.len() < 2 {
        return Err(Error::SampleSize {
            need: 2,
            have: track.len(),
        });
    }
    let excess: Vec<f64> = track
        .years
        .iter()
        .zip(&track.returns)
        .filter_map(|(&year, &r)| bills.get(year).map(|b| r - b))
        .collect();
    if excess.len() != track.len() {
        return Err(Error::Data {
            locus: "sharpe".into(),
            message: "bill series does not cover the track".into(),
        });
    }
    let sd = sample_sd(&excess);
    if sd == 0.0 {
        return Err(Error::Degenerate("zero volatility track".into()));
    }
    Ok(mean(&excess) / sd)
}

/// CER difference (alt - null, percentage points) with a delta-method
/// z-statistic over the joint return moments.
///
/// The moment vector is (μ_null, μ_alt, σ²_null, σ²_alt); its asymptotic
/// covariance uses the joint-normal form with the estimated 2x2 covariance
/// of the paired returns, and the CER gradient (-1, +1, +γ/2, -γ/2)
/// propagates it to the gain.
pub fn cer_gain_z(null: &PortfolioTrack, alt: &PortfolioTrack) -> Result<(f64, f64)> {
    if null.years != alt.years {
        return Err(Error::Data {
            locus: "cer_gain_z".into(),
            message: "null and alternative tracks are not aligned".into(),
        });
    }
    let n = null.len();
    if n < 5 {
        return Err(Error::SampleSize { need: 5, have: n });
    }
    let gamma = null.gamma;
    let gain = cer(alt)? - cer(null)?;

    let var_n = sample_variance(&null.returns);
    let var_a = sample_variance(&alt.returns);
    let cov_na = sample_covariance(&null.returns, &alt.returns);

    let gradient = [-1.0, 1.0, 0.5 * gamma, -0.5 * gamma];
    let theta = moment_covariance(var_n, var_a, cov_na);
    let mut quad = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            quad += gradient[i] * theta[i][j] * gradient[j];
        }
    }
    let asy_var = quad / n as f64;
    let z = if asy_var > 0.0 {
        (gain / 100.0) / asy_var.sqrt()
    } else {
        0.0
    };
    Ok((gain, z))
}

/// Asymptotic covariance of (μ1, μ2, σ1², σ2²) estimates under joint
/// normality, on the per-observation scale.
fn moment_covariance(var1: f64, var2: f64, cov12: f64) -> [[f64; 4]; 4] {
    [
        [var1, cov12, 0.0, 0.0],
        [cov12, var2, 0.0, 0.0],
        [0.0, 0.0, 2.0 * var1 * var1, 2.0 * cov12 * cov12],
        [0.0, 0.0, 2.0 * cov12 * cov12, 2.0 * var2 * var2],
    ]
}

/// Turnover rate of a weight path: (1/T) Σ_t Σ_{k=1,2} |w_{k,t+1} - w_{k,t}|
/// with the bill leg w_1 = 1 - w and the risky leg w_2 = w, so each
/// transition contributes 2 |Δw|. T is the number of transitions.
pub fn turnover(weights: &[f64]) -> Result<f64> {
    if weights.len() < 2 {
        return Err(Error::SampleSize {
            need: 2,
            have: weights.len(),
        });
    }
    let transitions = weights.len() - 1;
    let total: f64 = weights.windows(2).map(|w| 2.0 * (w[1] - w[0]).abs()).sum();
    Ok(total / transitions as f64)
}

/// Turnover of the prediction portfolio relative to the null portfolio:
/// turnover(alt) / turnover(null). +∞ when only the null portfolio stands
/// still, 1 when both do.
pub fn relative_turnover(null_weights: &[f64], alt_weights: &[f64]) -> Result<f64> {
    let null_t = turnover(null_weights)?;
    let alt_t = turnover(alt_weights)?;
    Ok(if null_t == 0.0 {
        if alt_t == 0.0 {
            1.0
        } else {
            f64::INFINITY
        }
    } else {
        alt_t / null_t
    })
}

/// Table-4-shaped economic evaluation of one forecast set.
#[derive(Debug, Clone)]
pub struct EconReport {
    pub null_sharpe: f64,
    pub alt_sharpe: f64,
    /// CER(alt) - CER(null), percentage points.
    pub cer_gain: f64,
    pub cer_z: f64,
    /// turnover(alt) / turnover(null); may be +∞.
    pub relative_turnover: f64,
    pub turnover_null: f64,
    pub turnover_alt: f64,
    pub n_years: usize,
    /// Forecast years dropped (zero variance forecast or missing returns).
    pub flagged_years: Vec<i32>,
}

/// Run the full economic backtest for one forecast set.
///
/// `excess_history` is the log excess-return series the forecasts target
/// (used for the realized-variance window); `asset_simple` and `bills` are
/// simple returns for the realized tracks.
pub fn run_backtest(
    forecasts: &ForecastSet,
    excess_history: &YearSeries,
    asset_simple: &YearSeries,
    bills: &YearSeries,
    gamma: f64,
    variance_window: usize,
) -> Result<EconReport> {
    let mut null_weights = Vec::new();
    let mut alt_weights = Vec::new();
    let mut flagged = Vec::new();

    for row in &forecasts.rows {
        let history: Vec<f64> = excess_history.values_before(row.year).collect();
        let sigma2 = variance_forecast(&history, variance_window)?;
        if sigma2 <= 0.0 {
            flagged.push(row.year);
            continue;
        }
        null_weights.push((row.year, mv_weight(row.null_forecast, sigma2, gamma)?));
        alt_weights.push((row.year, mv_weight(row.alt_forecast, sigma2, gamma)?));
    }

    let null_track = realized_track(&null_weights, asset_simple, bills, gamma);
    let alt_track = realized_track(&alt_weights, asset_simple, bills, gamma);
    flagged.extend(null_track.skipped_years.iter().copied());

    let (cer_gain, cer_z) = cer_gain_z(&null_track, &alt_track)?;
    Ok(EconReport {
        null_sharpe: sharpe(&null_track, bills)?,
        alt_sharpe: sharpe(&alt_track, bills)?,
        cer_gain,
        cer_z,
        relative_turnover: relative_turnover(&null_track.weights, &alt_track.weights)?,
        turnover_null: turnover(&null_track.weights)?,
        turnover_alt: turnover(&alt_track.weights)?,
        n_years: null_track.len(),
        flagged_years: flagged,
    })
}
