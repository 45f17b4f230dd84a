//! Plain-text column files for trajectories, event logs and fit results.
//!
//! Numbers are printed with 9 significant digits, columns separated by one
//! space. Trajectory rows are `t x v friction b`; event rows are
//! `time kind position epsilon` with `kind` one of `static:<j>`,
//! `dynamic:<j>` or `boundary:<j>.<k>` and `epsilon` in `{-1, 0, 1}`.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use crate::calibration::{CalibrationResult, PARAM_NAMES};
use crate::error::{Error, Result};
use crate::model::{PhaseLabel, Sign, SystemState};
use crate::series::read_table;
use crate::trajectory::{Event, EventKind, EventLog, Sample, Trajectory};

const DIGITS: usize = 9;

/// `%.9g`-style formatting: fixed notation for exponents in `[-5, 9)`,
/// scientific otherwise, trailing zeros dropped.
pub fn fmt_num(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let sci = format!("{:.*e}", DIGITS - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..DIGITS as i32).contains(&exp) {
        let decimals = (DIGITS as i32 - 1 - exp).max(0) as usize;
        trim_zeros(format!("{v:.decimals$}"))
    } else {
        format!("{}e{}{:02}", trim_zeros(mantissa.to_string()), if exp < 0 { '-' } else { '+' }, exp.abs())
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

fn sample_row(s: &Sample) -> String {
    format!(
        "{} {} {} {} {}",
        fmt_num(s.state.t),
        fmt_num(s.state.x),
        fmt_num(s.state.v),
        fmt_num(s.friction),
        fmt_num(s.forcing)
    )
}

pub fn write_samples<W: Write>(mut w: W, samples: &[Sample], header: bool) -> Result<()> {
    if header {
        writeln!(w, "t x v friction b")?;
    }
    for s in samples {
        writeln!(w, "{}", sample_row(s))?;
    }
    Ok(())
}

fn kind_token(kind: EventKind) -> String {
    match kind {
        EventKind::EnterStatic(j) => format!("static:{j}"),
        EventKind::EnterDynamic(j) => format!("dynamic:{j}"),
        EventKind::SubphaseBoundary { phase, index } => format!("boundary:{phase}.{index}"),
    }
}

fn parse_kind(token: &str) -> Option<EventKind> {
    let (name, rest) = token.split_once(':')?;
    match name {
        "static" => rest.parse().ok().map(EventKind::EnterStatic),
        "dynamic" => rest.parse().ok().map(EventKind::EnterDynamic),
        "boundary" => {
            let (a, b) = rest.split_once('.')?;
            Some(EventKind::SubphaseBoundary {
                phase: a.parse().ok()?,
                index: b.parse().ok()?,
            })
        }
        _ => None,
    }
}

pub fn write_events<W: Write>(mut w: W, log: &EventLog, header: bool) -> Result<()> {
    if header {
        writeln!(w, "time kind position epsilon")?;
    }
    for e in log {
        let eps = e.epsilon.map_or(0, |s| s.value() as i32);
        writeln!(w, "{} {} {} {}", fmt_num(e.time), kind_token(e.kind), fmt_num(e.position), eps)?;
    }
    Ok(())
}

/// Parses trajectory rows back. The phase column is not stored; samples
/// with `v = 0` read back as static.
pub fn read_samples<R: BufRead>(source: R) -> Result<Vec<Sample>> {
    Ok(read_table(source, 5)?
        .into_iter()
        .map(|(_, r)| Sample {
            state: SystemState { t: r[0], x: r[1], v: r[2] },
            phase: if r[2] == 0.0 { PhaseLabel::Static } else { PhaseLabel::Dynamic },
            friction: r[3],
            forcing: r[4],
        })
        .collect())
}

pub fn read_events<R: BufRead>(source: R) -> Result<EventLog> {
    let mut log = EventLog::new();
    for (idx, line) in source.lines().enumerate() {
        let line = line?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') || text.starts_with("time") {
            continue;
        }
        let err = |message: String| Error::Parse { line: idx + 1, message };
        let f: Vec<&str> = text.split_whitespace().collect();
        if f.len() != 4 {
            return Err(err(format!("expected 4 fields, found {}", f.len())));
        }
        let num = |s: &str| s.parse::<f64>().map_err(|e| err(format!("{s:?}: {e}")));
        let kind = parse_kind(f[1]).ok_or_else(|| err(format!("unknown event kind {:?}", f[1])))?;
        let epsilon = match f[3] {
            "0" => None,
            "1" => Some(Sign::Positive),
            "-1" => Some(Sign::Negative),
            other => return Err(err(format!("epsilon must be -1, 0 or 1, got {other:?}"))),
        };
        log.push(Event {
            time: num(f[0])?,
            kind,
            position: num(f[2])?,
            epsilon,
        });
    }
    Ok(log)
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(path)?))
}

pub fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

/// Writes `<prefix>.txt` and `<prefix>.events.txt`; with `split`, also one
/// file per phase segment, `<prefix>_s<k>.txt` and `<prefix>_d<k>.txt`
/// numbered from 1 per label. Returns every path written.
pub fn write_trajectory_files(prefix: &Path, traj: &Trajectory, split: bool, header: bool) -> Result<Vec<PathBuf>> {
    let mut written = Vec::new();
    let main = with_suffix(prefix, ".txt");
    let mut w = create(&main)?;
    write_samples(&mut w, &traj.samples, header)?;
    w.flush()?;
    written.push(main);

    let events = with_suffix(prefix, ".events.txt");
    let mut w = create(&events)?;
    write_events(&mut w, &traj.events, header)?;
    w.flush()?;
    written.push(events);

    if split {
        let (mut ns, mut nd) = (0, 0);
        for (label, range) in traj.segments() {
            let name = match label {
                PhaseLabel::Static => {
                    ns += 1;
                    format!("_s{ns}.txt")
                }
                PhaseLabel::Dynamic => {
                    nd += 1;
                    format!("_d{nd}.txt")
                }
            };
            let path = with_suffix(prefix, &name);
            let mut w = create(&path)?;
            write_samples(&mut w, &traj.samples[range], header)?;
            w.flush()?;
            written.push(path);
        }
    }
    Ok(written)
}

/// `name=value` lines for one fit.
pub fn write_result<W: Write>(mut w: W, r: &CalibrationResult) -> Result<()> {
    writeln!(w, "seed={}", r.seed)?;
    for (name, v) in PARAM_NAMES.iter().zip(r.params.to_array()) {
        writeln!(w, "{name}={}", fmt_num(v))?;
    }
    writeln!(w, "residual={}", fmt_num(r.residual))?;
    writeln!(w, "evaluations={}", r.evaluations)?;
    Ok(())
}

/// One row per fit: `run z0 K f_d f_s beta residual`.
pub fn write_result_table<W: Write>(mut w: W, results: &[CalibrationResult]) -> Result<()> {
    writeln!(w, "# run z0 K f_d f_s beta residual")?;
    for (i, r) in results.iter().enumerate() {
        let p = r.params;
        writeln!(
            w,
            "{} {} {} {} {} {} {}",
            i + 1,
            fmt_num(p.z0),
            fmt_num(p.k),
            fmt_num(p.f_d),
            fmt_num(p.f_s),
            fmt_num(p.beta),
            fmt_num(r.residual)
        )?;
    }
    Ok(())
}

/// Two columns: generation, best residual.
pub fn write_history<W: Write>(mut w: W, history: &[f64]) -> Result<()> {
    for (i, v) in history.iter().enumerate() {
        writeln!(w, "{i} {}", fmt_num(*v))?;
    }
    Ok(())
}

pub fn write_ou<W: Write>(mut w: W, dt: f64, values: &[f64], header: bool) -> Result<()> {
    if header {
        writeln!(w, "t v")?;
    }
    for (k, v) in values.iter().enumerate() {
        writeln!(w, "{} {}", fmt_num(k as f64 * dt), fmt_num(*v))?;
    }
    Ok(())
}

/// `key = value` (or `key value`) lines; `#` starts a comment.
pub fn read_key_values<R: BufRead>(source: R) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for (idx, line) in source.lines().enumerate() {
        let line = line?;
        let text = line.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let (k, v) = text
            .split_once('=')
            .or_else(|| text.split_once(char::is_whitespace))
            .map(|(k, v)| (k.trim(), v.trim()))
            .unwrap_or((text, ""));
        if k.is_empty() {
            return Err(Error::Parse {
                line: idx + 1,
                message: "missing key".into(),
            });
        }
        out.push((k.to_string(), v.to_string()));
    }
    Ok(out)
}

pub fn open(path: &Path) -> Result<BufReader<File>> {
    Ok(BufReader::new(File::open(path)?))
}
