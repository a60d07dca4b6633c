//! Annual time series keyed by calendar year.
//!
//! Gaps are represented by absent years, never by sentinel values, so a
//! series loaded from a panel with wartime holes keeps those holes through
//! every downstream computation. Iteration is always in strictly increasing
//! year order.

use std::collections::BTreeMap;

/// A sparse annual series: year -> value, iterated in year order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct YearSeries {
    points: BTreeMap<i32, f64>,
}

impl YearSeries {
    pub fn new() -> Self {
        Self::default()
    }

    /// Insert a value, returning the previous value for that year if any.
    pub fn insert(&mut self, year: i32, value: f64) -> Option<f64> {
        self.points.insert(year, value)
    }

    pub fn get(&self, year: i32) -> Option<f64> {
        self.points.get(&year).copied()
    }

    pub fn contains(&self, year: i32) -> bool {
        self.points.contains_key(&year)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn first_year(&self) -> Option<i32> {
        self.points.keys().next().copied()
    }

    pub fn last_year(&self) -> Option<i32> {
        self.points.keys().next_back().copied()
    }

    /// (year, value) pairs in increasing year order.
    pub fn iter(&self) -> impl Iterator<Item = (i32, f64)> + '_ {
        self.points.iter().map(|(y, v)| (*y, *v))
    }

    pub fn years(&self) -> impl Iterator<Item = i32> + '_ {
        self.points.keys().copied()
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.values().copied()
    }

    /// Values for years strictly before `year`, in year order.
    pub fn values_before(&self, year: i32) -> impl Iterator<Item = f64> + '_ {
        self.points.range(..year).map(|(_, v)| *v)
    }
}

impl FromIterator<(i32, f64)> for YearSeries {
    fn from_iter<T: IntoIterator<Item = (i32, f64)>>(iter: T) -> Self {
        YearSeries {
            points: iter.into_iter().collect(),
        }
    }
}

/// Years where every listed series has a value, in increasing order.
pub fn common_years(series: &[&YearSeries]) -> Vec<i32> {
    match series.first() {
        None => Vec::new(),
        Some(first) => first
            .years()
            .filter(|&y| series[1..].iter().all(|s| s.contains(y)))
            .collect(),
    }
}
