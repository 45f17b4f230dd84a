//! Sampled solutions and their phase-transition logs.

use crate::model::{PhaseLabel, Sign, SystemState};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EventKind {
    /// Entry into stick phase `j` (time `τ_j`).
    EnterStatic(usize),
    /// Departure from stick phase `j` into slip (time `τ_{j+1/2}`).
    EnterDynamic(usize),
    /// Zero-velocity instant `τ_j^k` inside slip phase `j` with `|b| > f_s`;
    /// the slip continues with a fresh sign.
    SubphaseBoundary { phase: usize, index: usize },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Event {
    pub time: f64,
    pub kind: EventKind,
    pub position: f64,
    /// Slip direction starting at this event; `None` for stick entries.
    pub epsilon: Option<Sign>,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct EventLog {
    events: Vec<Event>,
}

impl EventLog {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, event: Event) {
        debug_assert!(
            self.events.last().is_none_or(|e| e.time < event.time),
            "event times must increase: {:?} after {:?}",
            event,
            self.events.last()
        );
        self.events.push(event);
    }

    pub fn pop(&mut self) -> Option<Event> {
        self.events.pop()
    }

    pub fn last(&self) -> Option<&Event> {
        self.events.last()
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Event> {
        self.events.iter()
    }

    pub fn times(&self) -> Vec<f64> {
        self.events.iter().map(|e| e.time).collect()
    }

    /// Positions of every stick entry, in order.
    pub fn stick_levels(&self) -> Vec<f64> {
        self.events
            .iter()
            .filter(|e| matches!(e.kind, EventKind::EnterStatic(_)))
            .map(|e| e.position)
            .collect()
    }

    /// Departure times `τ_{j+1/2}`.
    pub fn departures(&self) -> Vec<f64> {
        self.events
            .iter()
            .filter(|e| matches!(e.kind, EventKind::EnterDynamic(_)))
            .map(|e| e.time)
            .collect()
    }

    /// Largest number of sub-phase boundaries inside one slip phase.
    pub fn max_subphase_boundaries(&self) -> usize {
        let mut best = 0;
        let mut run = 0;
        for e in &self.events {
            match e.kind {
                EventKind::SubphaseBoundary { .. } => {
                    run += 1;
                    best = best.max(run);
                }
                _ => run = 0,
            }
        }
        best
    }
}

impl<'a> IntoIterator for &'a EventLog {
    type Item = &'a Event;
    type IntoIter = std::slice::Iter<'a, Event>;

    fn into_iter(self) -> Self::IntoIter {
        self.events.iter()
    }
}

/// One recorded instant of a run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub state: SystemState,
    pub phase: PhaseLabel,
    /// Friction force `F(ẋ)` at this instant.
    pub friction: f64,
    /// Forcing `b(x, ẋ, t)` at this instant.
    pub forcing: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Trajectory {
    pub samples: Vec<Sample>,
    pub events: EventLog,
}

impl Trajectory {
    pub fn last(&self) -> Option<&Sample> {
        self.samples.last()
    }

    /// Contiguous runs of equal phase label, as `(label, sample range)`.
    pub fn segments(&self) -> Vec<(PhaseLabel, std::ops::Range<usize>)> {
        let mut out: Vec<(PhaseLabel, std::ops::Range<usize>)> = Vec::new();
        for (i, s) in self.samples.iter().enumerate() {
            match out.last_mut() {
                Some((label, range)) if *label == s.phase => range.end = i + 1,
                _ => out.push((s.phase, i..i + 1)),
            }
        }
        out
    }
}
