//! Panel ingestion: loading the annual country/asset grid from delimited
//! files and deriving the series the rest of the pipeline consumes.
//!
//! The input is wide-format delimited text (comma or tab), one row per
//! country-year, with a column-mapping configuration naming which columns
//! hold returns, payout yields, and capitalizations. Missing observations
//! are absent cells; they stay absent through every derivation.

mod derive;

pub use derive::{
    build_representative_portfolio, coupon_price_from_yield, derive_series, log_excess_return,
    payout_growth, DerivedSeries,
};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::YearSeries;

/// Asset classes handled by the pipeline. `Risky` and `Wealth` are the
/// capitalization-weighted representative-agent portfolios.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Asset {
    Bond,
    Equity,
    Housing,
    Risky,
    Wealth,
}

impl Asset {
    pub const SINGLE: [Asset; 3] = [Asset::Bond, Asset::Equity, Asset::Housing];
    pub const PORTFOLIO: [Asset; 2] = [Asset::Risky, Asset::Wealth];
    pub const ALL: [Asset; 5] = [
        Asset::Bond,
        Asset::Equity,
        Asset::Housing,
        Asset::Risky,
        Asset::Wealth,
    ];

    pub fn is_portfolio(self) -> bool {
        matches!(self, Asset::Risky | Asset::Wealth)
    }

    pub fn name(self) -> &'static str {
        match self {
            Asset::Bond => "bond",
            Asset::Equity => "equity",
            Asset::Housing => "housing",
            Asset::Risky => "risky",
            Asset::Wealth => "wealth",
        }
    }
}

impl fmt::Display for Asset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Where the panel came from: file path plus a data-release label echoed in
/// run manifests.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Provenance {
    pub source: String,
    pub release: String,
}

/// The raw annual panel: one value per (country, year, variable) key.
///
/// Immutable after load; downstream modules only read it.
#[derive(Debug, Clone, Default)]
pub struct ObservationPanel {
    series: BTreeMap<(String, String), YearSeries>,
    countries: BTreeSet<String>,
    n_records: usize,
    provenance: Provenance,
}

impl ObservationPanel {
    pub fn new(provenance: Provenance) -> Self {
        ObservationPanel {
            provenance,
            ..Default::default()
        }
    }

    /// Insert one observation. A second value for the same
    /// (country, year, variable) key is a data error.
    pub fn insert(&mut self, country: &str, year: i32, variable: &str, value: f64) -> Result<()> {
        let key = (country.to_string(), variable.to_string());
        let series = self.series.entry(key).or_default();
        if series.insert(year, value).is_some() {
            return Err(Error::data(
                format!("{country}/{year}/{variable}"),
                "duplicate (country, year, variable) observation",
            ));
        }
        self.countries.insert(country.to_string());
        self.n_records += 1;
        Ok(())
    }

    /// The annual series for one (country, variable) pair, if any values exist.
    pub fn series(&self, country: &str, variable: &str) -> Option<&YearSeries> {
        self.series
            .get(&(country.to_string(), variable.to_string()))
    }

    pub fn value(&self, country: &str, year: i32, variable: &str) -> Option<f64> {
        self.series(country, variable).and_then(|s| s.get(year))
    }

    pub fn countries(&self) -> impl Iterator<Item = &str> {
        self.countries.iter().map(String::as_str)
    }

    pub fn n_records(&self) -> usize {
        self.n_records
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }
}

/// Column names for an asset whose payout-price ratio the database provides
/// directly as a level ratio (equity dividend-price, housing rent-price).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PayoutColumns {
    pub total_return: String,
    pub payout_price: String,
}

/// Column names for the bond market: the database ships the coupon yield
/// c_t/p_{t-1}, from which the coupon-price ratio is backed out.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BondColumns {
    pub total_return: String,
    pub coupon_yield: String,
    /// Multiplier applied to the yield column (0.01 when the source stores
    /// percent while returns are decimal).
    #[serde(default = "default_scale")]
    pub coupon_yield_scale: f64,
}

fn default_scale() -> f64 {
    1.0
}

/// Capitalization columns used to weight the representative portfolios.
/// Which database columns proxy each market's size is a per-run choice;
/// the configuration must name them explicitly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CapColumns {
    pub equity: String,
    pub housing: String,
    pub bond: String,
    pub bill: String,
}

/// Column-mapping configuration for a panel load.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ColumnConfig {
    #[serde(default = "default_country_column")]
    pub country_column: String,
    #[serde(default = "default_year_column")]
    pub year_column: String,
    /// Treasury-bill simple return column, required for every asset's excess
    /// return.
    pub bill_return: String,
    #[serde(default)]
    pub bond: Option<BondColumns>,
    #[serde(default)]
    pub equity: Option<PayoutColumns>,
    #[serde(default)]
    pub housing: Option<PayoutColumns>,
    /// Required only when the representative risky/wealth portfolios are
    /// requested.
    #[serde(default)]
    pub capitalization: Option<CapColumns>,
    /// Clamp derived series at the 1st/99th percentile. Off by default: the
    /// reference results keep hyperinflation-era extremes.
    #[serde(default)]
    pub winsorize: bool,
}

fn default_country_column() -> String {
    "country".into()
}

fn default_year_column() -> String {
    "year".into()
}

impl ColumnConfig {
    /// Every data column this configuration maps (key columns excluded).
    pub fn mapped_columns(&self) -> Vec<&str> {
        let mut cols = vec![self.bill_return.as_str()];
        if let Some(b) = &self.bond {
            cols.push(&b.total_return);
            cols.push(&b.coupon_yield);
        }
        for a in [&self.equity, &self.housing].into_iter().flatten() {
            cols.push(&a.total_return);
            cols.push(&a.payout_price);
        }
        if let Some(c) = &self.capitalization {
            cols.extend([
                c.equity.as_str(),
                c.housing.as_str(),
                c.bond.as_str(),
                c.bill.as_str(),
            ]);
        }
        cols
    }

    /// Single assets with a return mapping, in canonical order.
    pub fn mapped_assets(&self) -> Vec<Asset> {
        let mut assets = Vec::new();
        if self.bond.is_some() {
            assets.push(Asset::Bond);
        }
        if self.equity.is_some() {
            assets.push(Asset::Equity);
        }
        if self.housing.is_some() {
            assets.push(Asset::Housing);
        }
        assets
    }

    /// Check the invariants that do not need the data: at least one asset
    /// mapped, and portfolio requests only when capitalizations exist.
    pub fn validate(&self, want_portfolios: bool) -> Result<()> {
        if self.bond.is_none() && self.equity.is_none() && self.housing.is_none() {
            return Err(Error::Config("no asset columns mapped".into()));
        }
        if want_portfolios && self.capitalization.is_none() {
            return Err(Error::Config(
                "representative portfolios requested but no capitalization columns mapped".into(),
            ));
        }
        if want_portfolios && (self.equity.is_none() || self.housing.is_none()) {
            return Err(Error::Config(
                "representative portfolios need both equity and housing return mappings".into(),
            ));
        }
        Ok(())
    }
}

/// Load one or more delimited files into a panel.
///
/// Delimiter is sniffed per file from the header row (tab if present,
/// comma otherwise). Every mapped column must appear in each header. Cells
/// in mapped columns must be numeric or empty; non-numeric cells elsewhere
/// (country names, ISO codes) are ignored. A repeated (country, year) row
/// is a data error.
pub fn load_panel<P: AsRef<Path>>(
    files: &[P],
    config: &ColumnConfig,
    release: &str,
) -> Result<ObservationPanel> {
    let sources: Vec<String> = files
        .iter()
        .map(|p| p.as_ref().display().to_string())
        .collect();
    let mut panel = ObservationPanel::new(Provenance {
        source: sources.join(";"),
        release: release.to_string(),
    });
    let mut seen_rows: BTreeSet<(String, i32)> = BTreeSet::new();

    for path in files {
        load_file(path.as_ref(), config, &mut panel, &mut seen_rows)?;
    }
    Ok(panel)
}

fn load_file(
    path: &Path,
    config: &ColumnConfig,
    panel: &mut ObservationPanel,
    seen_rows: &mut BTreeSet<(String, i32)>,
) -> Result<()> {
    let raw = std::fs::read_to_string(path)?;
    let raw = raw.strip_prefix('\u{feff}').unwrap_or(&raw);
    let delimiter = match raw.lines().next() {
        Some(header) if header.contains('\t') => b'\t',
        _ => b',',
    };
    let mut reader = csv::ReaderBuilder::new()
        .delimiter(delimiter)
        .flexible(false)
        .from_reader(raw.as_bytes());

    let headers: Vec<String> = reader
        .headers()
        .map_err(|e| Error::data(path.display().to_string(), e.to_string()))?
        .iter()
        .map(|h| h.trim().to_string())
        .collect();
    let col_index = |name: &str| headers.iter().position(|h| h == name);

    let country_idx = col_index(&config.country_column).ok_or_else(|| {
        Error::Config(format!(
            "country column '{}' not found in {}",
            config.country_column,
            path.display()
        ))
    })?;
    let year_idx = col_index(&config.year_column).ok_or_else(|| {
        Error::Config(format!(
            "year column '{}' not found in {}",
            config.year_column,
            path.display()
        ))
    })?;
    for col in config.mapped_columns() {
        if col_index(col).is_none() {
            return Err(Error::Config(format!(
                "mapped column '{col}' not found in {}",
                path.display()
            )));
        }
    }
    let mapped: BTreeSet<&str> = config.mapped_columns().into_iter().collect();

    for (row_no, record) in reader.records().enumerate() {
        let record = record.map_err(|e| {
            Error::data(format!("{}:{}", path.display(), row_no + 2), e.to_string())
        })?;
        let locus = |col: &str| format!("{}:{}:{}", path.display(), row_no + 2, col);

        let country = record.get(country_idx).unwrap_or("").trim().to_string();
        let year_raw = record.get(year_idx).unwrap_or("").trim();
        if country.is_empty() || year_raw.is_empty() {
            continue;
        }
        // Accept float-formatted years ("1870.0") from spreadsheet exports.
        let year: i32 = match year_raw.parse::<i32>() {
            Ok(y) => y,
            Err(_) => match year_raw.parse::<f64>() {
                Ok(f) if f.fract() == 0.0 => f as i32,
                _ => {
                    return Err(Error::data(
                        locus(&config.year_column),
                        format!("non-integer year '{year_raw}'"),
                    ))
                }
            },
        };

        if !seen_rows.insert((country.clone(), year)) {
            return Err(Error::data(
                format!("{}:{}", path.display(), row_no + 2),
                format!("duplicate row for ({country}, {year})"),
            ));
        }

        for (idx, header) in headers.iter().enumerate() {
            if idx == country_idx || idx == year_idx {
                continue;
            }
            let cell = record.get(idx).unwrap_or("").trim();
            if cell.is_empty() || cell == "NA" || cell == "." {
                continue;
            }
            match cell.parse::<f64>() {
                Ok(v) if v.is_finite() => panel.insert(&country, year, header, v)?,
                _ if mapped.contains(header.as_str()) => {
                    return Err(Error::data(
                        locus(header),
                        format!("non-numeric cell '{cell}' in mapped column"),
                    ));
                }
                // Unmapped string columns (ISO codes etc.) carry no data.
                _ => {}
            }
        }
    }
    Ok(())
}
