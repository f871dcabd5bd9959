//! Gate-level circuit representation and structural analysis.

mod analysis;
mod cost;
mod gate;
mod layout;
pub mod text;
mod unitary;

use std::ops::Range;

pub use analysis::{asap_depth, circuit_depth, circuit_size, circuit_width, DepthMode};
pub use cost::{CostModel, ToffoliDepth, ToffoliWidth};
pub use gate::{CoinAngles, Control, Gate, GateKind, Polarity};
pub use layout::{WireLayout, MAX_PACK_EXPONENT};
pub(crate) use unitary::identity_columns;
pub use unitary::{circuit_unitary, MAX_UNITARY_WIRES};

use crate::error::{Error, Result};

/// Suffix marking a segment that came from [`Circuit::inverse`].
const DAGGER: char = '†';

#[derive(Clone, Debug, PartialEq)]
struct SegmentMark {
    start: usize,
    label: String,
}

/// A contiguous run of gates that the builders declared as one named operator.
#[derive(Clone, Debug, PartialEq)]
pub struct Segment {
    pub label: String,
    pub range: Range<usize>,
}

/// Ordered gate list over a fixed set of wires.
///
/// Builders partition the gate list into labelled segments (one per named
/// sub-operator); [`DepthMode::PerPackSum`] schedules each segment on its own.
#[derive(Clone, Debug)]
pub struct Circuit {
    num_wires: usize,
    layout: Option<WireLayout>,
    gates: Vec<Gate>,
    marks: Vec<SegmentMark>,
}

impl Circuit {
    pub fn new(num_wires: usize) -> Self {
        Circuit {
            num_wires,
            layout: None,
            gates: Vec::new(),
            marks: Vec::new(),
        }
    }

    pub fn for_layout(layout: WireLayout) -> Self {
        Circuit {
            layout: Some(layout),
            ..Circuit::new(layout.num_wires())
        }
    }

    pub fn num_wires(&self) -> usize {
        self.num_wires
    }

    pub fn layout(&self) -> Option<&WireLayout> {
        self.layout.as_ref()
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        gate.validate(self.num_wires)?;
        self.gates.push(gate);
        Ok(())
    }

    /// Starts a new segment at the current end of the gate list.
    pub fn begin_segment(&mut self, label: impl Into<String>) {
        let start = self.gates.len();
        self.mark_at(start, &label.into());
    }

    /// Appends `other`, keeping its segments. The appended gates always start
    /// a new segment.
    pub fn append(&mut self, other: &Circuit) -> Result<()> {
        self.check_same_width(other)?;
        let offset = self.gates.len();
        if other.marks.first().map(|m| m.start) != Some(0) {
            self.begin_segment("");
        }
        for mark in &other.marks {
            self.mark_at(offset + mark.start, &mark.label);
        }
        self.gates.extend(other.gates.iter().cloned());
        Ok(())
    }

    /// Appends the gates of `other` into the current segment, dropping its
    /// segment structure.
    pub fn append_flat(&mut self, other: &Circuit) -> Result<()> {
        self.check_same_width(other)?;
        self.gates.extend(other.gates.iter().cloned());
        Ok(())
    }

    fn mark_at(&mut self, start: usize, label: &str) {
        match self.marks.last_mut() {
            Some(last) if last.start == start => last.label = label.to_string(),
            _ => self.marks.push(SegmentMark {
                start,
                label: label.to_string(),
            }),
        }
    }

    fn check_same_width(&self, other: &Circuit) -> Result<()> {
        if self.num_wires != other.num_wires {
            return Err(Error::DimensionMismatch {
                expected: self.num_wires,
                found: other.num_wires,
            });
        }
        Ok(())
    }

    /// Non-empty segments, covering every gate exactly once.
    pub fn segments(&self) -> Vec<Segment> {
        let mut bounds: Vec<(usize, &str)> = Vec::with_capacity(self.marks.len() + 1);
        if self.marks.first().map(|m| m.start) != Some(0) {
            bounds.push((0, ""));
        }
        bounds.extend(self.marks.iter().map(|m| (m.start, m.label.as_str())));
        let mut out = Vec::with_capacity(bounds.len());
        for (idx, &(start, label)) in bounds.iter().enumerate() {
            let end = bounds.get(idx + 1).map_or(self.gates.len(), |b| b.0);
            if end > start {
                out.push(Segment {
                    label: label.to_string(),
                    range: start..end,
                });
            }
        }
        out
    }

    /// Reversed circuit with every gate inverted. Segment labels gain or lose
    /// a trailing dagger.
    pub fn inverse(&self) -> Circuit {
        let len = self.gates.len();
        let gates = self.gates.iter().rev().map(Gate::inverse).collect();
        let marks = self
            .segments()
            .into_iter()
            .rev()
            .map(|seg| SegmentMark {
                start: len - seg.range.end,
                label: dagger(&seg.label),
            })
            .collect();
        Circuit {
            num_wires: self.num_wires,
            layout: self.layout,
            gates,
            marks,
        }
    }

    /// Same circuit with wire `w` renamed to `perm[w]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Circuit> {
        let mut sorted = perm.to_vec();
        sorted.sort_unstable();
        if sorted != (0..self.num_wires).collect::<Vec<_>>() {
            return Err(Error::InvalidConfig(
                "relabeling must be a permutation of the wires".into(),
            ));
        }
        Ok(Circuit {
            num_wires: self.num_wires,
            layout: None,
            gates: self.gates.iter().map(|g| g.relabeled(perm)).collect(),
            marks: self.marks.clone(),
        })
    }

    /// Re-hosts the circuit on the wires of `layout`, which must contain at
    /// least as many wires. Wire indices are kept.
    pub fn embed(&self, layout: WireLayout) -> Result<Circuit> {
        if layout.num_wires() < self.num_wires {
            return Err(Error::DimensionMismatch {
                expected: self.num_wires,
                found: layout.num_wires(),
            });
        }
        Ok(Circuit {
            num_wires: layout.num_wires(),
            layout: Some(layout),
            gates: self.gates.clone(),
            marks: self.marks.clone(),
        })
    }

    pub fn count(&self, pred: impl Fn(&Gate) -> bool) -> usize {
        self.gates.iter().filter(|g| pred(g)).count()
    }

    /// Number of uncontrolled NOT gates.
    pub fn bare_not_count(&self) -> usize {
        self.count(|g| g.kind == GateKind::Not && g.controls.is_empty())
    }
}

impl PartialEq for Circuit {
    fn eq(&self, other: &Self) -> bool {
        self.num_wires == other.num_wires
            && self.layout == other.layout
            && self.gates == other.gates
            && self.segments() == other.segments()
    }
}

fn dagger(label: &str) -> String {
    if label.is_empty() {
        String::new()
    } else if let Some(stripped) = label.strip_suffix(DAGGER) {
        stripped.to_string()
    } else {
        format!("{label}{DAGGER}")
    }
}
