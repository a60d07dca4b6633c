//! Derivations from the raw panel: log excess returns, log payout-price
//! ratios, log payout growth, and the capitalization-weighted
//! representative-agent portfolios.
//!
//! Identities used:
//!
//! ```text
//! excess      r = ln(1+R_a) - ln(1+R_f)
//! coupon back-out from yield y = c_t/p_{t-1} and total return R_t:
//!             p_t/p_{t-1} = 1 + R_t - y_t   =>   c_t/p_t = y_t/(1 + R_t - y_t)
//! payout growth from level ratios dp = D/P and total return R_t:
//!             P_t/P_{t-1} = (1+R_t)/(1+dp_t) =>  Δd_t = ln(dp_t/dp_{t-1}) + ln((1+R_t)/(1+dp_t))
//! ```
//!
//! Payout growth at year t is present only if the payout-price ratio exists
//! at t and t-1 and the total return exists at t; gaps are never bridged.

use crate::error::{Error, Result};
use crate::series::{common_years, YearSeries};
use crate::stats::quantile;

use super::{Asset, ColumnConfig, ObservationPanel};

/// Per-(country, asset) aligned derived series. All return series are keyed
/// by calendar year; absent years are genuine gaps.
#[derive(Debug, Clone)]
pub struct DerivedSeries {
    pub country: String,
    pub asset: Asset,
    /// Log excess return over local bills.
    pub excess_return: YearSeries,
    /// Log payout-price ratio (empty for the risky/wealth portfolios, whose
    /// predictors are the three single-asset ratios).
    pub payout_price: YearSeries,
    /// Log payout growth (equity and housing only; bond coupons are fixed).
    pub payout_growth: YearSeries,
    /// Simple total return of the asset (or portfolio), kept for the
    /// mean-variance backtest which mixes in simple-return space.
    pub simple_return: YearSeries,
    /// Simple treasury-bill return of the country.
    pub bill_return: YearSeries,
}

impl DerivedSeries {
    pub fn span(&self) -> Option<(i32, i32)> {
        Some((
            self.excess_return.first_year()?,
            self.excess_return.last_year()?,
        ))
    }
}

/// Log excess return: ln(1+asset) - ln(1+bill).
pub fn log_excess_return(asset_return: f64, bill_return: f64) -> Result<f64> {
    if asset_return <= -1.0 || bill_return <= -1.0 {
        return Err(Error::Domain(format!(
            "log excess return undefined for returns <= -100% (asset {asset_return}, bill {bill_return})"
        )));
    }
    Ok((1.0 + asset_return).ln() - (1.0 + bill_return).ln())
}

/// Back the log coupon-price ratio ln(c_t/p_t) out of the coupon yield
/// y_t = c_t/p_{t-1} and the total simple bond return R_t.
pub fn coupon_price_from_yield(coupon_yield: f64, bond_return: f64) -> Result<f64> {
    if coupon_yield <= 0.0 {
        return Err(Error::Domain(format!(
            "coupon yield must be positive, got {coupon_yield}"
        )));
    }
    let price_ratio = 1.0 + bond_return - coupon_yield;
    if price_ratio <= 0.0 {
        return Err(Error::Domain(format!(
            "implied price ratio {price_ratio} is not positive (yield {coupon_yield}, return {bond_return})"
        )));
    }
    Ok((coupon_yield / price_ratio).ln())
}

/// Log payout growth Δd_t from level payout-price ratios at t-1 and t and
/// the total simple return at t.
pub fn payout_growth(dp_prev: f64, dp_curr: f64, total_return: f64) -> Result<f64> {
    if dp_prev <= 0.0 || dp_curr <= 0.0 {
        return Err(Error::Domain(format!(
            "payout-price ratios must be positive (got {dp_prev}, {dp_curr})"
        )));
    }
    if total_return <= -1.0 {
        return Err(Error::Domain(format!(
            "total return {total_return} is <= -100%"
        )));
    }
    Ok((dp_curr / dp_prev).ln() + ((1.0 + total_return) / (1.0 + dp_curr)).ln())
}

/// Capitalization-weighted portfolio of simple component returns, converted
/// to log excess over bills. A year is produced only when every component
/// return, every capitalization, and the bill return are present.
///
/// Returns (simple portfolio return, log excess return) series.
pub fn build_representative_portfolio(
    components: &[(&YearSeries, &YearSeries)],
    bills: &YearSeries,
) -> Result<(YearSeries, YearSeries)> {
    let mut involved: Vec<&YearSeries> = Vec::with_capacity(components.len() * 2 + 1);
    for (returns, caps) in components {
        involved.push(returns);
        involved.push(caps);
    }
    involved.push(bills);

    let mut simple = YearSeries::new();
    let mut excess = YearSeries::new();
    for year in common_years(&involved) {
        let mut cap_sum = 0.0;
        for (_, caps) in components {
            let cap = caps.get(year).expect("year in intersection");
            if cap < 0.0 {
                return Err(Error::data(
                    format!("year {year}"),
                    format!("negative capitalization {cap}"),
                ));
            }
            cap_sum += cap;
        }
        if cap_sum == 0.0 {
            return Err(Error::data(
                format!("year {year}"),
                "capitalization weights sum to zero",
            ));
        }
        let portfolio_return: f64 = components
            .iter()
            .map(|(returns, caps)| {
                returns.get(year).expect("year in intersection")
                    * (caps.get(year).expect("year in intersection") / cap_sum)
            })
            .sum();
        let bill = bills.get(year).expect("year in intersection");
        simple.insert(year, portfolio_return);
        excess.insert(year, log_excess_return(portfolio_return, bill)?);
    }
    Ok((simple, excess))
}

/// Derive the full series bundle for one (country, asset) cell.
pub fn derive_series(
    panel: &ObservationPanel,
    config: &ColumnConfig,
    country: &str,
    asset: Asset,
) -> Result<DerivedSeries> {
    let empty = YearSeries::new();
    let bill = panel
        .series(country, &config.bill_return)
        .unwrap_or(&empty)
        .clone();

    let mut out = DerivedSeries {
        country: country.to_string(),
        asset,
        excess_return: YearSeries::new(),
        payout_price: YearSeries::new(),
        payout_growth: YearSeries::new(),
        simple_return: YearSeries::new(),
        bill_return: bill,
    };

    match asset {
        Asset::Bond => {
            let cols = config
                .bond
                .as_ref()
                .ok_or_else(|| Error::Config("bond columns not mapped".into()))?;
            let returns = panel.series(country, &cols.total_return).unwrap_or(&empty);
            let yields = panel.series(country, &cols.coupon_yield).unwrap_or(&empty);
            out.simple_return = returns.clone();
            derive_excess(returns, &out.bill_return, country, &mut out.excess_return)?;
            for year in common_years(&[yields, returns]) {
                let coupon_yield = yields.get(year).unwrap() * cols.coupon_yield_scale;
                let bond_return = returns.get(year).unwrap();
                // Out-of-domain pairs (non-positive yields, implied price
                // ratio <= 0) carry no usable payout information: the year
                // stays absent.
                if coupon_yield <= 0.0 || 1.0 + bond_return - coupon_yield <= 0.0 {
                    continue;
                }
                out.payout_price
                    .insert(year, coupon_price_from_yield(coupon_yield, bond_return)?);
            }
        }
        Asset::Equity | Asset::Housing => {
            let cols = match asset {
                Asset::Equity => config.equity.as_ref(),
                _ => config.housing.as_ref(),
            }
            .ok_or_else(|| Error::Config(format!("{asset} columns not mapped")))?;
            let returns = panel.series(country, &cols.total_return).unwrap_or(&empty);
            let ratios = panel.series(country, &cols.payout_price).unwrap_or(&empty);
            out.simple_return = returns.clone();
            derive_excess(returns, &out.bill_return, country, &mut out.excess_return)?;
            // Non-positive level ratios carry no payout information and are
            // treated as missing years.
            let positive: YearSeries = ratios.iter().filter(|(_, level)| *level > 0.0).collect();
            for (year, level) in positive.iter() {
                out.payout_price.insert(year, level.ln());
            }
            for (year, level) in positive.iter() {
                let (Some(prev), Some(ret)) = (positive.get(year - 1), returns.get(year)) else {
                    continue;
                };
                let growth = payout_growth(prev, level, ret)
                    .map_err(|e| Error::Domain(format!("{country}/{asset}/{year}: {e}")))?;
                out.payout_growth.insert(year, growth);
            }
        }
        Asset::Risky | Asset::Wealth => {
            let caps = config
                .capitalization
                .as_ref()
                .ok_or_else(|| Error::Config("capitalization columns not mapped".into()))?;
            let series_of = |col: &str| panel.series(country, col).unwrap_or(&empty);
            let eq_cols = config
                .equity
                .as_ref()
                .ok_or_else(|| Error::Config("equity columns not mapped".into()))?;
            let hs_cols = config
                .housing
                .as_ref()
                .ok_or_else(|| Error::Config("housing columns not mapped".into()))?;

            let mut components: Vec<(&YearSeries, &YearSeries)> = vec![
                (series_of(&eq_cols.total_return), series_of(&caps.equity)),
                (series_of(&hs_cols.total_return), series_of(&caps.housing)),
            ];
            if asset == Asset::Wealth {
                let bond_cols = config
                    .bond
                    .as_ref()
                    .ok_or_else(|| Error::Config("bond columns not mapped".into()))?;
                components.push((series_of(&bond_cols.total_return), series_of(&caps.bond)));
                components.push((series_of(&config.bill_return), series_of(&caps.bill)));
            }
            let (simple, excess) = build_representative_portfolio(&components, &out.bill_return)?;
            out.simple_return = simple;
            out.excess_return = excess;
        }
    }

    if config.winsorize {
        for series in [
            &mut out.excess_return,
            &mut out.payout_price,
            &mut out.payout_growth,
        ] {
            winsorize(series);
        }
    }
    Ok(out)
}

fn derive_excess(
    returns: &YearSeries,
    bills: &YearSeries,
    country: &str,
    out: &mut YearSeries,
) -> Result<()> {
    for year in common_years(&[returns, bills]) {
        let r = log_excess_return(returns.get(year).unwrap(), bills.get(year).unwrap())
            .map_err(|e| Error::Domain(format!("{country}/{year}: {e}")))?;
        out.insert(year, r);
    }
    Ok(())
}

/// Clamp a series at its 1st/99th percentiles.
fn winsorize(series: &mut YearSeries) {
    if series.len() < 3 {
        return;
    }
    let mut sorted: Vec<f64> = series.values().collect();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let lo = quantile(&sorted, 0.01);
    let hi = quantile(&sorted, 0.99);
    let clamped: Vec<(i32, f64)> = series.iter().map(|(y, v)| (y, v.clamp(lo, hi))).collect();
    *series = clamped.into_iter().collect();
}
