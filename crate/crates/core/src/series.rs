//! Sampled temperature records and delimited-text ingestion.

use std::io::BufRead;

use crate::error::{Error, Result};

/// Temperature samples on strictly increasing times, read back by
/// piecewise-linear interpolation.
#[derive(Debug, Clone, PartialEq)]
pub struct TemperatureSeries {
    times: Vec<f64>,
    temps: Vec<f64>,
}

impl TemperatureSeries {
    pub fn new(times: Vec<f64>, temps: Vec<f64>) -> Result<Self> {
        if times.len() != temps.len() {
            return Err(Error::arg(format!(
                "series length mismatch: {} times, {} temperatures",
                times.len(),
                temps.len()
            )));
        }
        if times.is_empty() {
            return Err(Error::arg("empty temperature series"));
        }
        if let Some(i) = times.windows(2).position(|w| !(w[1] > w[0])) {
            return Err(Error::arg(format!(
                "times must be strictly increasing (sample {} at t = {})",
                i + 1,
                times[i + 1]
            )));
        }
        if times.iter().chain(&temps).any(|v| !v.is_finite()) {
            return Err(Error::arg("non-finite value in temperature series"));
        }
        Ok(Self { times, temps })
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn temps(&self) -> &[f64] {
        &self.temps
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn start(&self) -> f64 {
        self.times[0]
    }

    pub fn end(&self) -> f64 {
        self.times[self.times.len() - 1]
    }

    pub fn eval(&self, t: f64) -> Result<f64> {
        if !(t >= self.start() && t <= self.end()) {
            return Err(Error::Domain {
                t,
                start: self.start(),
                end: self.end(),
            });
        }
        // First index with times[i] > t, so the segment is [i-1, i].
        let i = self.times.partition_point(|&s| s <= t);
        if i == self.times.len() {
            return Ok(self.temps[i - 1]);
        }
        Ok(lerp(
            self.times[i - 1],
            self.temps[i - 1],
            self.times[i],
            self.temps[i],
            t,
        ))
    }

    /// First time `>= from` at which the interpolant leaves `[lo, hi]`.
    ///
    /// The returned time is the crossing of the bound itself (the infimum
    /// of the exit set), computed exactly on the linear segment. Touching a
    /// bound without going past it is not an exit. `None` if the series
    /// stays inside until its last sample.
    pub fn first_exit(&self, from: f64, lo: f64, hi: f64) -> Result<Option<f64>> {
        let start_value = self.eval(from)?;
        if start_value > hi || start_value < lo {
            return Ok(Some(from));
        }
        let mut i = self.times.partition_point(|&s| s <= from);
        let (mut ta, mut va) = (from, start_value);
        while i < self.times.len() {
            let (tb, vb) = (self.times[i], self.temps[i]);
            if vb > hi {
                return Ok(Some(ta + (hi - va) / (vb - va) * (tb - ta)));
            }
            if vb < lo {
                return Ok(Some(ta + (lo - va) / (vb - va) * (tb - ta)));
            }
            ta = tb;
            va = vb;
            i += 1;
        }
        Ok(None)
    }
}

fn lerp(ta: f64, va: f64, tb: f64, vb: f64, t: f64) -> f64 {
    va + (t - ta) / (tb - ta) * (vb - va)
}

/// Reads a table of numbers from delimited text.
///
/// Fields are separated by commas and/or whitespace. Blank lines and lines
/// starting with `#` are skipped. A first data line that does not parse as
/// numbers is taken as a header. Every row must have exactly `columns`
/// fields. Returns `(line_number, row)` pairs, lines 1-based.
pub fn read_table<R: BufRead>(reader: R, columns: usize) -> Result<Vec<(usize, Vec<f64>)>> {
    let mut rows = Vec::new();
    let mut seen_data = false;
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|f| !f.is_empty())
            .collect();
        let parsed: std::result::Result<Vec<f64>, _> =
            fields.iter().map(|f| f.parse::<f64>()).collect();
        let values = match parsed {
            Ok(v) => v,
            Err(_) if !seen_data => {
                seen_data = true;
                continue;
            }
            Err(e) => {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("non-numeric field: {e}"),
                })
            }
        };
        seen_data = true;
        if values.len() != columns {
            return Err(Error::Parse {
                line: lineno,
                message: format!("expected {columns} columns, found {}", values.len()),
            });
        }
        if let Some(v) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::Parse {
                line: lineno,
                message: format!("non-finite value {v}"),
            });
        }
        rows.push((lineno, values));
    }
    Ok(rows)
}

/// Checks that the first column of `rows` is strictly increasing.
pub(crate) fn check_increasing(rows: &[(usize, Vec<f64>)]) -> Result<()> {
    for w in rows.windows(2) {
        if !(w[1].1[0] > w[0].1[0]) {
            return Err(Error::Parse {
                line: w[1].0,
                message: format!(
                    "time {} does not increase past {} (previous row)",
                    w[1].1[0], w[0].1[0]
                ),
            });
        }
    }
    Ok(())
}

/// Parses a two-column (time in seconds, temperature) record.
pub fn load_temperature_series<R: BufRead>(source: R) -> Result<TemperatureSeries> {
    let rows = read_table(source, 2)?;
    if rows.is_empty() {
        return Err(Error::Parse {
            line: 0,
            message: "no data rows".into(),
        });
    }
    check_increasing(&rows)?;
    let (times, temps) = rows.into_iter().map(|(_, r)| (r[0], r[1])).unzip();
    TemperatureSeries::new(times, temps)
}
