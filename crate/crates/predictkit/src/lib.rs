//! predictkit: return-predictability evaluation for annual country/asset
//! panels.
//!
//! The pipeline runs four layers over a macro-financial panel of bond,
//! equity and housing markets:
//!
//! 1. [`panel`] loads the delimited panel and derives log excess returns,
//!    log payout-price ratios (coupon-price backed out of the coupon
//!    yield), log payout growth, and the capitalization-weighted
//!    representative risky/wealth portfolios.
//! 2. [`econ`] fits the in-sample predictive and payout-growth regressions
//!    with Newey-West t-statistics.
//! 3. [`oos`] runs expanding-window one-year-ahead forecasts against the
//!    prevailing-mean benchmark, with out-of-sample R² and Clark-West
//!    tests; [`portfolio`] turns the same forecasts into mean-variance
//!    backtests (Sharpe ratios, certainty-equivalent gains, turnover).
//! 4. [`varsim`] estimates the pooled dp/payout-growth/return VAR and
//!    Monte-Carlos the present-value-constrained null of no return
//!    predictability.
//!
//! [`report`] orchestrates everything over all (country, asset) cells and
//! writes the result tables, the summary classification grid, and the
//! simulation histograms; the `predictkit` binary is a thin CLI over it.

pub mod econ;
pub mod error;
pub mod oos;
pub mod panel;
pub mod portfolio;
pub mod report;
pub mod series;
pub mod stats;
pub mod varsim;

pub use error::{Error, Result};
