//! Pipeline orchestration and report emission.
//!
//! `run_pipeline` fans out over every configured (country, asset) cell,
//! runs the in-sample regressions, the out-of-sample harness, the economic
//! backtest and the summary statistics, classifies the summary grid, runs
//! the pooled VAR simulation, and writes the full set of report files plus
//! a run manifest. A failing cell is recorded and skipped, never fatal:
//! the run continues and the manifest lists what failed.

mod tables;

pub use tables::{fmt_f, fmt_opt, histogram, OutputFormat, Table};

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::econ::{self, LagRule, RegressionFit};
use crate::error::{Error, Result};
use crate::oos::{self, ClarkWest, CwStdError, ForecastSet};
use crate::panel::{self, Asset, ColumnConfig, DerivedSeries, ObservationPanel};
use crate::portfolio::{self, EconReport};
use crate::series::YearSeries;
use crate::stats::{mean, summarize_series, SeriesSummary};
use crate::varsim::{self, SimOutcome, VarParams, VarRow};

// ---------------------------------------------------------------------------
// Run configuration
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DataConfig {
    /// Delimited panel files, one row per country-year.
    pub paths: Vec<PathBuf>,
    /// Data-release label echoed into provenance and the manifest.
    #[serde(default)]
    pub release: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct EvalConfig {
    /// Risk-aversion coefficient for the mean-variance backtest.
    pub gamma: f64,
    /// Training observations before the first out-of-sample forecast.
    pub min_train: usize,
    /// Realized-variance window for the weight rule.
    pub variance_window: usize,
    /// Newey-West bandwidth; `None` selects floor(4 (n/100)^(2/9)).
    pub nw_lags: Option<usize>,
    /// |t| threshold for the in-sample summary flag.
    pub is_t_threshold: f64,
    /// Clark-West p threshold for the out-of-sample summary flag.
    pub oos_p_threshold: f64,
    /// Use a HAC standard error inside the Clark-West test.
    pub cw_hac: bool,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            gamma: portfolio::DEFAULT_GAMMA,
            min_train: oos::DEFAULT_MIN_TRAIN,
            variance_window: portfolio::DEFAULT_VARIANCE_WINDOW,
            nw_lags: None,
            is_t_threshold: 1.645,
            oos_p_threshold: 0.05,
            cw_hac: false,
        }
    }
}

impl EvalConfig {
    pub fn lag_rule(&self) -> LagRule {
        match self.nw_lags {
            Some(l) => LagRule::Fixed(l),
            None => LagRule::Auto,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.gamma <= 0.0 || self.min_train == 0 || self.variance_window == 0 {
            return Err(Error::Config("evaluation knobs must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct SimulationConfig {
    pub reps: usize,
    /// Mandatory for simulation runs; reruns with the same seed are
    /// byte-identical.
    pub seed: Option<u64>,
    /// Simulated sample length; `None` uses the average per-country span of
    /// the pooled sample.
    pub sample_length: Option<usize>,
    /// Demean dp, payout growth and returns per country before pooling
    /// (sensitivity flag; the linearization constant always uses raw dp).
    pub per_country_demean: bool,
}

impl Default for SimulationConfig {
    fn default() -> Self {
        SimulationConfig {
            reps: varsim::DEFAULT_REPS,
            seed: None,
            sample_length: None,
            per_country_demean: false,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct OutputConfig {
    pub dir: PathBuf,
    pub format: OutputFormat,
    /// Also dump the derived series in the input's delimited format.
    pub dump_derived: bool,
    /// Render the summary grid with Y marks only and blanks elsewhere
    /// (the usual journal-table style). Off by default (explicit Y/N).
    pub blank_style: bool,
}

impl Default for OutputConfig {
    fn default() -> Self {
        OutputConfig {
            dir: PathBuf::from("predictkit_out"),
            format: OutputFormat::Csv,
            dump_derived: false,
            blank_style: false,
        }
    }
}

/// Full run configuration, loadable from a TOML file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunConfig {
    pub data: DataConfig,
    pub columns: ColumnConfig,
    #[serde(default)]
    pub evaluation: EvalConfig,
    #[serde(default)]
    pub simulation: SimulationConfig,
    #[serde(default)]
    pub output: OutputConfig,
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<RunConfig> {
        let raw = fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        toml::from_str(&raw).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
    }

    /// Which assets this run evaluates, in canonical order.
    pub fn assets(&self) -> Vec<Asset> {
        let mut assets = self.columns.mapped_assets();
        if self.columns.capitalization.is_some() {
            assets.extend(Asset::PORTFOLIO);
        }
        assets
    }
}

/// What to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunScope {
    /// Tables 1-5 and A1.
    Tables,
    /// The VAR simulation and its histogram files.
    Sim,
    All,
}

impl RunScope {
    fn wants_tables(self) -> bool {
        matches!(self, RunScope::Tables | RunScope::All)
    }

    fn wants_sim(self) -> bool {
        matches!(self, RunScope::Sim | RunScope::All)
    }
}

// ---------------------------------------------------------------------------
// Per-cell results
// ---------------------------------------------------------------------------

/// Everything computed for one (country, asset) cell. Stages that failed
/// are `None`, with the reason in `errors`.
#[derive(Debug, Clone)]
pub struct CellResult {
    pub country: String,
    pub asset: Asset,
    pub derived: Option<DerivedSeries>,
    pub regression: Option<RegressionFit>,
    pub growth_regression: Option<RegressionFit>,
    pub forecasts: Option<ForecastSet>,
    pub oos_r2: Option<f64>,
    pub clark_west: Option<ClarkWest>,
    pub econ: Option<EconReport>,
    pub excess_summary: Option<SeriesSummary>,
    pub payout_summary: Option<SeriesSummary>,
    pub errors: Vec<CellError>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CellError {
    pub stage: String,
    pub message: String,
}

impl CellResult {
    fn empty(country: &str, asset: Asset) -> Self {
        CellResult {
            country: country.to_string(),
            asset,
            derived: None,
            regression: None,
            growth_regression: None,
            forecasts: None,
            oos_r2: None,
            clark_west: None,
            econ: None,
            excess_summary: None,
            payout_summary: None,
            errors: Vec::new(),
        }
    }

    fn record<T>(&mut self, stage: &str, result: Result<T>) -> Option<T> {
        match result {
            Ok(v) => Some(v),
            Err(e) => {
                self.errors.push(CellError {
                    stage: stage.to_string(),
                    message: e.to_string(),
                });
                None
            }
        }
    }

    /// Inputs for the summary classifier.
    pub fn classifier_inputs(&self) -> CellInputs {
        CellInputs {
            hac_t: self.regression.as_ref().map(|f| f.hac_t.clone()),
            oos_r2: self.oos_r2,
            cw_p: self.clark_west.map(|cw| cw.p_value),
            cer_gain: self.econ.as_ref().map(|e| e.cer_gain),
        }
    }
}

// ---------------------------------------------------------------------------
// Summary classification (Table 1)
// ---------------------------------------------------------------------------

/// Published-number-compatible classifier inputs for one cell. `None`
/// fields render as blanks with a footnote marker.
#[derive(Debug, Clone, Default)]
pub struct CellInputs {
    /// HAC t-statistics, one per predictor.
    pub hac_t: Option<Vec<f64>>,
    pub oos_r2: Option<f64>,
    pub cw_p: Option<f64>,
    pub cer_gain: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Thresholds {
    pub is_t: f64,
    pub oos_p: f64,
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds {
            is_t: 1.645,
            oos_p: 0.05,
        }
    }
}

/// One Table-1 cell: three pass flags, `None` where the input stage failed.
#[derive(Debug, Clone, PartialEq)]
pub struct SummaryCell {
    pub country: String,
    pub asset: Asset,
    pub is_flag: Option<bool>,
    pub oos_flag: Option<bool>,
    pub cer_flag: Option<bool>,
}

impl SummaryCell {
    /// Both the in-sample and out-of-sample tests pass.
    pub fn gold(&self) -> Option<bool> {
        match (self.is_flag, self.oos_flag) {
            (Some(a), Some(b)) => Some(a && b),
            _ => None,
        }
    }
}

/// Apply the summary rules to per-cell metrics:
/// IS  <=> any predictor |t| >= is_t threshold,
/// OOS <=> OOS R² > 0 and Clark-West p < oos_p threshold,
/// CER <=> CER gain > 0.
pub fn classify_summary(
    cells: &[(String, Asset, CellInputs)],
    thresholds: Thresholds,
) -> Vec<SummaryCell> {
    cells
        .iter()
        .map(|(country, asset, inputs)| SummaryCell {
            country: country.clone(),
            asset: *asset,
            is_flag: inputs
                .hac_t
                .as_ref()
                .map(|ts| ts.iter().any(|t| t.abs() >= thresholds.is_t)),
            oos_flag: match (inputs.oos_r2, inputs.cw_p) {
                (Some(r2), Some(p)) => Some(r2 > 0.0 && p < thresholds.oos_p),
                _ => None,
            },
            cer_flag: inputs.cer_gain.map(|g| g > 0.0),
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Pipeline
// ---------------------------------------------------------------------------

/// One pooled simulation result.
#[derive(Debug, Clone)]
pub struct Simulation {
    pub params: VarParams,
    pub outcome: SimOutcome,
}

/// Everything the run produced, with the output files already written.
#[derive(Debug)]
pub struct PipelineOutput {
    pub out_dir: PathBuf,
    pub files: Vec<PathBuf>,
    pub cells: BTreeMap<(String, Asset), CellResult>,
    pub summary: Vec<SummaryCell>,
    pub simulations: BTreeMap<Asset, Simulation>,
    pub failed_cells: Vec<(String, Asset, CellError)>,
}

impl PipelineOutput {
    pub fn cell(&self, country: &str, asset: Asset) -> Option<&CellResult> {
        self.cells.get(&(country.to_string(), asset))
    }

    pub fn has_failures(&self) -> bool {
        !self.failed_cells.is_empty()
    }
}

/// Run the configured pipeline and write the report files.
pub fn run_pipeline(config: &RunConfig, scope: RunScope) -> Result<PipelineOutput> {
    let want_portfolios = config.columns.capitalization.is_some();
    config.columns.validate(want_portfolios)?;
    config.evaluation.validate()?;
    if config.data.paths.is_empty() {
        return Err(Error::Config("no data files configured".into()));
    }
    let seed = if scope.wants_sim() {
        Some(config.simulation.seed.ok_or_else(|| {
            Error::Config(
                "a seed is mandatory for simulation runs (set --seed or simulation.seed)".into(),
            )
        })?)
    } else {
        None
    };

    let panel = panel::load_panel(&config.data.paths, &config.columns, &config.data.release)?;
    let cells = evaluate_cells(&panel, config, scope);

    let summary = if scope.wants_tables() {
        let inputs: Vec<(String, Asset, CellInputs)> = cells
            .values()
            .map(|c| (c.country.clone(), c.asset, c.classifier_inputs()))
            .collect();
        classify_summary(
            &inputs,
            Thresholds {
                is_t: config.evaluation.is_t_threshold,
                oos_p: config.evaluation.oos_p_threshold,
            },
        )
    } else {
        Vec::new()
    };

    let mut simulations = BTreeMap::new();
    if scope.wants_sim() {
        let seed = seed.expect("checked above");
        for asset in [Asset::Equity, Asset::Housing] {
            if let Some(sim) = run_pooled_simulation(&cells, asset, config, seed)? {
                simulations.insert(asset, sim);
            }
        }
    }

    let files = write_reports(config, scope, &panel, &cells, &summary, &simulations)?;

    let failed_cells: Vec<(String, Asset, CellError)> = cells
        .values()
        .flat_map(|c| {
            c.errors
                .iter()
                .map(|e| (c.country.clone(), c.asset, e.clone()))
        })
        .collect();

    Ok(PipelineOutput {
        out_dir: config.output.dir.clone(),
        files,
        cells,
        summary,
        simulations,
        failed_cells,
    })
}

fn evaluate_cells(
    panel: &ObservationPanel,
    config: &RunConfig,
    scope: RunScope,
) -> BTreeMap<(String, Asset), CellResult> {
    use rayon::prelude::*;

    let assets = config.assets();

    // Derivation phase, per country.
    let mut derived: BTreeMap<(String, Asset), DerivedSeries> = BTreeMap::new();
    let mut failed: Vec<((String, Asset), CellResult)> = Vec::new();
    for country in panel.countries() {
        for &asset in &assets {
            match panel::derive_series(panel, &config.columns, country, asset) {
                Ok(d) => {
                    derived.insert((country.to_string(), asset), d);
                }
                Err(e) => {
                    let mut cell = CellResult::empty(country, asset);
                    cell.errors.push(CellError {
                        stage: "derive".into(),
                        message: e.to_string(),
                    });
                    failed.push(((country.to_string(), asset), cell));
                }
            }
        }
    }

    // Statistics phase: cells are independent, fan out and merge by key.
    let mut cells: BTreeMap<(String, Asset), CellResult> = derived
        .par_iter()
        .filter_map(|((country, asset), series)| {
            // Countries without this asset are skipped silently rather than
            // reported as failures for every absent market.
            if series.excess_return.is_empty() {
                return None;
            }
            let mut cell = CellResult::empty(country, *asset);
            cell.derived = Some(series.clone());

            if scope.wants_tables() {
                let lookup = |a: Asset| derived.get(&(country.clone(), a));
                let predictors: Option<Vec<&YearSeries>> = if asset.is_portfolio() {
                    // Coupon price, dividend price, rent price, in the
                    // published column order.
                    match (
                        lookup(Asset::Bond),
                        lookup(Asset::Equity),
                        lookup(Asset::Housing),
                    ) {
                        (Some(b), Some(e), Some(h)) => {
                            Some(vec![&b.payout_price, &e.payout_price, &h.payout_price])
                        }
                        _ => {
                            cell.errors.push(CellError {
                                stage: "predictors".into(),
                                message:
                                    "portfolio predictors need bond, equity and housing ratios"
                                        .into(),
                            });
                            None
                        }
                    }
                } else {
                    Some(vec![&series.payout_price])
                };

                if let Some(predictors) = predictors {
                    evaluate_statistics(&mut cell, series, &predictors, &config.evaluation);
                }
            }
            Some(((country.clone(), *asset), cell))
        })
        .collect();
    cells.extend(failed);
    cells
}

fn evaluate_statistics(
    cell: &mut CellResult,
    series: &DerivedSeries,
    predictors: &[&YearSeries],
    eval: &EvalConfig,
) {
    let lag_rule = eval.lag_rule();
    cell.regression = cell.record(
        "regression",
        econ::predictive_regression(&series.excess_return, predictors, lag_rule),
    );
    if matches!(series.asset, Asset::Equity | Asset::Housing) {
        cell.growth_regression = cell.record(
            "growth_regression",
            econ::payout_growth_regression(series, lag_rule),
        );
    }

    let forecasts = cell.record(
        "forecasts",
        oos::expanding_forecasts(&series.excess_return, predictors, eval.min_train),
    );
    if let Some(forecasts) = &forecasts {
        cell.oos_r2 = cell.record("oos_r2", oos::oos_r2(forecasts));
        let se = if eval.cw_hac {
            CwStdError::Hac(econ::auto_lags(forecasts.rows.len()))
        } else {
            CwStdError::Iid
        };
        cell.clark_west = cell.record("clark_west", oos::clark_west_with(forecasts, se));
        cell.econ = cell.record(
            "backtest",
            portfolio::run_backtest(
                forecasts,
                &series.excess_return,
                &series.simple_return,
                &series.bill_return,
                eval.gamma,
                eval.variance_window,
            ),
        );
    }
    cell.forecasts = forecasts;

    let excess: Vec<f64> = series.excess_return.values().collect();
    cell.excess_summary = cell.record("summary", summarize_series(&excess));
    if !series.asset.is_portfolio() {
        let payout: Vec<f64> = series.payout_price.values().collect();
        cell.payout_summary = cell.record("summary", summarize_series(&payout));
    }
}

// ---------------------------------------------------------------------------
// Pooled VAR simulation
// ---------------------------------------------------------------------------

/// Pooled rows for one asset across all countries, plus per-country counts
/// (used for the default simulated sample length).
pub fn pooled_var_rows(
    cells: &BTreeMap<(String, Asset), CellResult>,
    asset: Asset,
    per_country_demean: bool,
) -> (Vec<VarRow>, Vec<usize>, Vec<f64>) {
    let mut rows = Vec::new();
    let mut counts = Vec::new();
    let mut raw_dp = Vec::new();
    for ((_, a), cell) in cells {
        if *a != asset {
            continue;
        }
        let Some(series) = &cell.derived else {
            continue;
        };
        let mut country_rows = Vec::new();
        for (t, dp) in series.payout_price.iter() {
            let (Some(dp_next), Some(growth), Some(ret)) = (
                series.payout_price.get(t + 1),
                series.payout_growth.get(t + 1),
                series.excess_return.get(t + 1),
            ) else {
                continue;
            };
            country_rows.push(VarRow {
                dp,
                dp_next,
                payout_growth_next: growth,
                excess_return_next: ret,
            });
            raw_dp.push(dp);
        }
        if country_rows.is_empty() {
            continue;
        }
        if per_country_demean {
            demean_rows(&mut country_rows);
        }
        counts.push(country_rows.len());
        rows.extend(country_rows);
    }
    (rows, counts, raw_dp)
}

fn demean_rows(rows: &mut [VarRow]) {
    let n = rows.len() as f64;
    let m_dp = rows.iter().map(|r| r.dp).sum::<f64>() / n;
    let m_dpn = rows.iter().map(|r| r.dp_next).sum::<f64>() / n;
    let m_g = rows.iter().map(|r| r.payout_growth_next).sum::<f64>() / n;
    let m_r = rows.iter().map(|r| r.excess_return_next).sum::<f64>() / n;
    for r in rows {
        r.dp -= m_dp;
        r.dp_next -= m_dpn;
        r.payout_growth_next -= m_g;
        r.excess_return_next -= m_r;
    }
}

fn run_pooled_simulation(
    cells: &BTreeMap<(String, Asset), CellResult>,
    asset: Asset,
    config: &RunConfig,
    seed: u64,
) -> Result<Option<Simulation>> {
    let (rows, counts, raw_dp) =
        pooled_var_rows(cells, asset, config.simulation.per_country_demean);
    if rows.len() < varsim::MIN_VAR_ROWS {
        return Ok(None);
    }
    let mut params = varsim::estimate_var_params(&rows)?;
    if config.simulation.per_country_demean {
        // Demeaning zeroes the pooled dp mean; the linearization constant
        // must still come from the raw ratios.
        params.rho = varsim::linearization_rho(&raw_dp);
    }
    let t_len = config.simulation.sample_length.unwrap_or_else(|| {
        let avg = mean(&counts.iter().map(|&c| c as f64).collect::<Vec<_>>());
        (avg.round() as usize).max(30)
    });
    // Simulation seeds are decorrelated per asset so equity and housing do
    // not share shock streams.
    let asset_seed = seed.wrapping_add(match asset {
        Asset::Equity => 0,
        Asset::Housing => 1,
        _ => 2,
    });
    let outcome = varsim::simulate_null(&params, t_len, config.simulation.reps, asset_seed)?;
    Ok(Some(Simulation { params, outcome }))
}

// ---------------------------------------------------------------------------
// Report files
// ---------------------------------------------------------------------------

fn write_reports(
    config: &RunConfig,
    scope: RunScope,
    panel: &ObservationPanel,
    cells: &BTreeMap<(String, Asset), CellResult>,
    summary: &[SummaryCell],
    simulations: &BTreeMap<Asset, Simulation>,
) -> Result<Vec<PathBuf>> {
    let dir = &config.output.dir;
    fs::create_dir_all(dir)?;
    let format = config.output.format;
    let mut files = Vec::new();

    let countries: Vec<String> = {
        let mut c: Vec<String> = cells.keys().map(|(country, _)| country.clone()).collect();
        c.dedup();
        c
    };
    let get = |country: &str, asset: Asset| cells.get(&(country.to_string(), asset));

    if scope.wants_tables() {
        // Table 2, panels A-C: single-asset predictive regressions.
        for (panel_name, asset) in [
            ("table2_panel_a", Asset::Bond),
            ("table2_panel_b", Asset::Equity),
            ("table2_panel_c", Asset::Housing),
        ] {
            let mut t = Table::new(
                panel_name,
                &["country", "start", "end", "coeff", "nw_t", "r2", "nw_lags"],
            );
            for country in &countries {
                let Some(cell) = get(country, asset) else {
                    continue;
                };
                let Some(fit) = &cell.regression else {
                    continue;
                };
                t.push(vec![
                    country.clone(),
                    fit.span.0.to_string(),
                    fit.span.1.to_string(),
                    fmt_f(fit.slopes[0], 3),
                    fmt_f(fit.hac_t[0], 3),
                    fmt_f(fit.r_squared, 3),
                    fit.nw_lags.map(|l| l.to_string()).unwrap_or_default(),
                ]);
            }
            files.push(t.write(dir, format)?);
        }

        // Table 2, panels D-E: portfolios on all three ratios.
        for (panel_name, asset) in [
            ("table2_panel_d", Asset::Risky),
            ("table2_panel_e", Asset::Wealth),
        ] {
            let mut t = Table::new(
                panel_name,
                &[
                    "country", "start", "end", "cp_coeff", "cp_t", "dp_coeff", "dp_t", "rp_coeff",
                    "rp_t", "r2", "nw_lags",
                ],
            );
            for country in &countries {
                let Some(cell) = get(country, asset) else {
                    continue;
                };
                let Some(fit) = &cell.regression else {
                    continue;
                };
                t.push(vec![
                    country.clone(),
                    fit.span.0.to_string(),
                    fit.span.1.to_string(),
                    fmt_f(fit.slopes[0], 3),
                    fmt_f(fit.hac_t[0], 3),
                    fmt_f(fit.slopes[1], 3),
                    fmt_f(fit.hac_t[1], 3),
                    fmt_f(fit.slopes[2], 3),
                    fmt_f(fit.hac_t[2], 3),
                    fmt_f(fit.r_squared, 3),
                    fit.nw_lags.map(|l| l.to_string()).unwrap_or_default(),
                ]);
            }
            files.push(t.write(dir, format)?);
        }

        // Table 3: OOS R² and Clark-West p, wide by asset.
        let mut t3_header = vec!["country".to_string()];
        for asset in Asset::ALL {
            t3_header.push(format!("{asset}_oos_r2"));
            t3_header.push(format!("{asset}_cw_p"));
        }
        let mut t3 = Table {
            name: "table3",
            header: t3_header,
            rows: Vec::new(),
        };
        for country in &countries {
            let mut row = vec![country.clone()];
            for asset in Asset::ALL {
                let cell = get(country, asset);
                row.push(fmt_opt(cell.and_then(|c| c.oos_r2), 3));
                row.push(fmt_opt(
                    cell.and_then(|c| c.clark_west.map(|cw| cw.p_value)),
                    3,
                ));
            }
            t3.push(row);
        }
        files.push(t3.write(dir, format)?);

        // Table 4, panels A-E: economic performance.
        for (panel_name, asset) in [
            ("table4_panel_a", Asset::Bond),
            ("table4_panel_b", Asset::Equity),
            ("table4_panel_c", Asset::Housing),
            ("table4_panel_d", Asset::Risky),
            ("table4_panel_e", Asset::Wealth),
        ] {
            let mut t = Table::new(
                panel_name,
                &[
                    "country",
                    "null_sr",
                    "alt_sr",
                    "cer_gain",
                    "cer_z",
                    "rel_turnover",
                    "turnover_null",
                    "turnover_alt",
                ],
            );
            for country in &countries {
                let Some(cell) = get(country, asset) else {
                    continue;
                };
                let Some(econ) = &cell.econ else { continue };
                t.push(vec![
                    country.clone(),
                    fmt_f(econ.null_sharpe, 2),
                    fmt_f(econ.alt_sharpe, 2),
                    fmt_f(econ.cer_gain, 2),
                    fmt_f(econ.cer_z, 2),
                    fmt_f(econ.relative_turnover, 2),
                    fmt_f(econ.turnover_null, 4),
                    fmt_f(econ.turnover_alt, 4),
                ]);
            }
            files.push(t.write(dir, format)?);
        }

        // Table 5: payout-growth regressions, equity then housing.
        for (panel_name, asset) in [
            ("table5_panel_a", Asset::Equity),
            ("table5_panel_b", Asset::Housing),
        ] {
            let mut t = Table::new(
                panel_name,
                &["country", "start", "end", "coeff", "nw_t", "r2", "nw_lags"],
            );
            for country in &countries {
                let Some(cell) = get(country, asset) else {
                    continue;
                };
                let Some(fit) = &cell.growth_regression else {
                    continue;
                };
                t.push(vec![
                    country.clone(),
                    fit.span.0.to_string(),
                    fit.span.1.to_string(),
                    fmt_f(fit.slopes[0], 3),
                    fmt_f(fit.hac_t[0], 3),
                    fmt_f(fit.r_squared, 3),
                    fit.nw_lags.map(|l| l.to_string()).unwrap_or_default(),
                ]);
            }
            files.push(t.write(dir, format)?);
        }

        // Table 1: the summary grid.
        let mut t1_header = vec!["country".to_string()];
        for asset in Asset::ALL {
            for flag in ["is", "oos", "cer", "gold"] {
                t1_header.push(format!("{asset}_{flag}"));
            }
        }
        let mut t1 = Table {
            name: "table1",
            header: t1_header,
            rows: Vec::new(),
        };
        let blank = config.output.blank_style;
        let render = |flag: Option<bool>| match flag {
            Some(true) => "Y".to_string(),
            Some(false) => {
                if blank {
                    String::new()
                } else {
                    "N".to_string()
                }
            }
            // Failed upstream: blank with a footnote marker.
            None => "*".to_string(),
        };
        for country in &countries {
            let mut row = vec![country.clone()];
            for asset in Asset::ALL {
                match summary
                    .iter()
                    .find(|s| &s.country == country && s.asset == asset)
                {
                    Some(s) => {
                        row.push(render(s.is_flag));
                        row.push(render(s.oos_flag));
                        row.push(render(s.cer_flag));
                        row.push(render(s.gold()));
                    }
                    None => row.extend(std::iter::repeat_n(String::new(), 4)),
                }
            }
            t1.push(row);
        }
        files.push(t1.write(dir, format)?);

        // Table A1: summary statistics.
        let summary_row = |country: &str, label: &str, s: &SeriesSummary| {
            vec![
                country.to_string(),
                label.to_string(),
                fmt_f(s.mean, 2),
                fmt_f(s.sd, 2),
                fmt_f(s.min, 2),
                fmt_f(s.q1, 2),
                fmt_f(s.median, 2),
                fmt_f(s.q3, 2),
                fmt_f(s.max, 2),
                s.n_obs.to_string(),
            ]
        };
        let a1_header = [
            "country", "variable", "mean", "sd", "min", "q1", "median", "q3", "max", "n",
        ];
        for (panel_name, asset, excess_label, payout_label) in [
            (
                "tableA1_panel_a",
                Asset::Bond,
                "Bond Excess Return",
                Some("CP"),
            ),
            (
                "tableA1_panel_b",
                Asset::Equity,
                "Equity Excess Return",
                Some("DP"),
            ),
            (
                "tableA1_panel_c",
                Asset::Housing,
                "Housing Excess Return",
                Some("RP"),
            ),
        ] {
            let mut t = Table::new(panel_name, &a1_header);
            for country in &countries {
                let Some(cell) = get(country, asset) else {
                    continue;
                };
                if let Some(s) = &cell.excess_summary {
                    t.push(summary_row(country, excess_label, s));
                }
                if let (Some(label), Some(s)) = (payout_label, &cell.payout_summary) {
                    t.push(summary_row(country, label, s));
                }
            }
            files.push(t.write(dir, format)?);
        }
        let mut a1d = Table::new("tableA1_panel_d", &a1_header);
        for country in &countries {
            for (asset, label) in [
                (Asset::Risky, "Risky Excess Return"),
                (Asset::Wealth, "Wealth Excess Return"),
            ] {
                if let Some(s) = get(country, asset).and_then(|c| c.excess_summary.as_ref()) {
                    a1d.push(summary_row(country, label, s));
                }
            }
        }
        files.push(a1d.write(dir, format)?);

        if config.output.dump_derived {
            let mut dump = Table::new(
                "derived_series",
                &[
                    "country",
                    "asset",
                    "year",
                    "excess_return",
                    "payout_price",
                    "payout_growth",
                ],
            );
            for cell in cells.values() {
                let Some(d) = &cell.derived else { continue };
                let years: std::collections::BTreeSet<i32> = d
                    .excess_return
                    .years()
                    .chain(d.payout_price.years())
                    .chain(d.payout_growth.years())
                    .collect();
                for year in years {
                    dump.push(vec![
                        cell.country.clone(),
                        cell.asset.to_string(),
                        year.to_string(),
                        fmt_opt(d.excess_return.get(year), 6),
                        fmt_opt(d.payout_price.get(year), 6),
                        fmt_opt(d.payout_growth.get(year), 6),
                    ]);
                }
            }
            files.push(dump.write(dir, format)?);
        }
    }

    if scope.wants_sim() {
        let mut params_table = Table::new(
            "fig1_params",
            &[
                "asset", "rho_hat", "phi_hat", "bd_hat", "br_hat", "phi0", "bd0", "br0", "p_br",
                "p_bd", "n_obs", "t_len", "reps", "seed",
            ],
        );
        for (asset, sim) in simulations {
            params_table.push(vec![
                asset.to_string(),
                fmt_f(sim.params.rho, 3),
                fmt_f(sim.params.phi, 3),
                fmt_f(sim.params.b_d, 3),
                fmt_f(sim.params.b_r, 3),
                fmt_f(sim.outcome.null.phi0, 3),
                fmt_f(sim.outcome.null.b_d0, 3),
                fmt_f(sim.outcome.null.b_r0, 3),
                fmt_f(sim.outcome.p_b_r, 4),
                fmt_f(sim.outcome.p_b_d, 4),
                sim.params.n_obs.to_string(),
                sim.outcome.t_len.to_string(),
                sim.outcome.n_reps.to_string(),
                sim.outcome.seed.to_string(),
            ]);
        }
        files.push(params_table.write(dir, format)?);

        for (asset, sim) in simulations {
            for (suffix, samples, observed) in [
                ("br", &sim.outcome.b_r_samples, sim.outcome.observed_b_r),
                ("bd", &sim.outcome.b_d_samples, sim.outcome.observed_b_d),
            ] {
                let mut t = Table {
                    name: match (asset, suffix) {
                        (Asset::Equity, "br") => "fig1_hist_equity_br",
                        (Asset::Equity, "bd") => "fig1_hist_equity_bd",
                        (Asset::Housing, "br") => "fig1_hist_housing_br",
                        _ => "fig1_hist_housing_bd",
                    },
                    header: vec![
                        "bin_lo".to_string(),
                        "bin_hi".to_string(),
                        "count".to_string(),
                        "observed".to_string(),
                    ],
                    rows: Vec::new(),
                };
                for (lo, hi, count) in histogram(samples, 50) {
                    t.push(vec![
                        format!("{lo}"),
                        format!("{hi}"),
                        count.to_string(),
                        format!("{observed}"),
                    ]);
                }
                files.push(t.write(dir, format)?);
            }
        }
    }

    files.push(write_manifest(config, scope, panel, cells, dir)?);
    Ok(files)
}

#[derive(Serialize)]
struct ManifestCell<'a> {
    country: &'a str,
    asset: &'a str,
    stage: &'a str,
    message: &'a str,
}

#[derive(Serialize)]
struct Manifest<'a> {
    release: &'a str,
    source: &'a str,
    scope: &'a str,
    nw_lag_rule: String,
    seed: Option<u64>,
    n_cells: usize,
    n_failed_stages: usize,
    failed: Vec<ManifestCell<'a>>,
    config: &'a RunConfig,
}

fn write_manifest(
    config: &RunConfig,
    scope: RunScope,
    panel: &ObservationPanel,
    cells: &BTreeMap<(String, Asset), CellResult>,
    dir: &Path,
) -> Result<PathBuf> {
    let failed: Vec<ManifestCell> = cells
        .values()
        .flat_map(|c| {
            c.errors.iter().map(|e| ManifestCell {
                country: &c.country,
                asset: c.asset.name(),
                stage: &e.stage,
                message: &e.message,
            })
        })
        .collect();
    let manifest = Manifest {
        release: &panel.provenance().release,
        source: &panel.provenance().source,
        scope: match scope {
            RunScope::Tables => "tables",
            RunScope::Sim => "sim",
            RunScope::All => "all",
        },
        nw_lag_rule: match config.evaluation.nw_lags {
            Some(l) => format!("fixed({l})"),
            None => "auto: floor(4 (n/100)^(2/9))".to_string(),
        },
        seed: if scope.wants_sim() {
            config.simulation.seed
        } else {
            None
        },
        n_cells: cells.len(),
        n_failed_stages: failed.len(),
        failed,
        config,
    };
    let path = dir.join("run_manifest.toml");
    let body = toml::to_string(&manifest)
        .map_err(|e| Error::Config(format!("manifest serialization: {e}")))?;
    fs::write(&path, body)?;
    Ok(path)
}
