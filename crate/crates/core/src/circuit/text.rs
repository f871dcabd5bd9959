//! Line-oriented circuit text format.
//!
//! ```text
//! # comment
//! wires 7
//! layout 3 1
//! segment Q10
//! not t=4 c=+1
//! coin t=4 c=+5 p=2.59157236,0.07621657,2.38136754,-2.79936369
//! swap t=5,6 c=+0
//! mcx t=5 c=+2,-3
//! ```
//!
//! `wires` comes first. `layout` is optional, `phase` is only written for
//! compiled circuits. Floats use Rust's shortest round-trip formatting, so a
//! written circuit parses back to identical gates.

use std::fmt::{self, Write as _};

use super::{Circuit, CoinAngles, Control, Gate, GateKind, Polarity, WireLayout};
use crate::error::{Error, Result};

/// One gate line: a kind, its targets, controls and real parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct GateLine {
    pub kind: String,
    pub targets: Vec<usize>,
    pub controls: Vec<Control>,
    pub params: Vec<f64>,
}

impl fmt::Display for GateLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} t=", self.kind)?;
        write_list(f, &self.targets)?;
        if !self.controls.is_empty() {
            f.write_str(" c=")?;
            write_list(f, &self.controls)?;
        }
        if !self.params.is_empty() {
            f.write_str(" p=")?;
            write_list(f, &self.params)?;
        }
        Ok(())
    }
}

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    for (i, item) in items.iter().enumerate() {
        if i > 0 {
            f.write_char(',')?;
        }
        write!(f, "{item}")?;
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq)]
pub enum Item {
    Segment(String),
    Gate(GateLine),
}

/// Parsed text before it is turned into a concrete circuit type.
#[derive(Clone, Debug, PartialEq)]
pub struct Document {
    pub wires: usize,
    pub layout: Option<WireLayout>,
    pub phase: Option<f64>,
    pub items: Vec<Item>,
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    tok.parse()
        .map_err(|_| perr(line, format!("expected a wire index, got {tok:?}")))
}

fn parse_f64(tok: &str, line: usize) -> Result<f64> {
    tok.parse()
        .map_err(|_| perr(line, format!("expected a number, got {tok:?}")))
}

fn parse_control(tok: &str, line: usize) -> Result<Control> {
    let (polarity, rest) = match tok.split_at_checked(1) {
        Some(("+", rest)) => (Polarity::Positive, rest),
        Some(("-", rest)) => (Polarity::Negative, rest),
        _ => return Err(perr(line, format!("control {tok:?} needs a +/- polarity"))),
    };
    Ok(Control {
        wire: parse_usize(rest, line)?,
        polarity,
    })
}

pub fn parse_gate_line(text: &str, line: usize) -> Result<GateLine> {
    let mut toks = text.split_whitespace();
    let kind = toks.next().ok_or_else(|| perr(line, "empty gate line"))?;
    let mut out = GateLine {
        kind: kind.to_string(),
        targets: vec![],
        controls: vec![],
        params: vec![],
    };
    let mut saw_targets = false;
    for tok in toks {
        let (key, value) = tok
            .split_once('=')
            .ok_or_else(|| perr(line, format!("expected key=value, got {tok:?}")))?;
        let parts = value.split(',').filter(|s| !s.is_empty());
        match key {
            "t" => {
                saw_targets = true;
                out.targets = parts.map(|p| parse_usize(p, line)).collect::<Result<_>>()?;
            }
            "c" => {
                out.controls = parts
                    .map(|p| parse_control(p, line))
                    .collect::<Result<_>>()?
            }
            "p" => out.params = parts.map(|p| parse_f64(p, line)).collect::<Result<_>>()?,
            _ => return Err(perr(line, format!("unknown field {key:?}"))),
        }
    }
    if !saw_targets {
        return Err(perr(line, "gate line without targets"));
    }
    Ok(out)
}

pub fn parse_document(text: &str) -> Result<Document> {
    let mut wires = None;
    let mut layout = None;
    let mut phase = None;
    let mut items = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let (head, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
        let rest = rest.trim();
        match head {
            "wires" => wires = Some(parse_usize(rest, line)?),
            "layout" => {
                let nums: Vec<usize> = rest
                    .split_whitespace()
                    .map(|t| parse_usize(t, line))
                    .collect::<Result<_>>()?;
                let [n, m] = nums[..] else {
                    return Err(perr(line, "layout takes two integers"));
                };
                layout = Some(WireLayout::new(n, m)?);
            }
            "phase" => phase = Some(parse_f64(rest, line)?),
            "segment" => items.push(Item::Segment(rest.to_string())),
            _ => {
                if wires.is_none() {
                    return Err(perr(line, "gate before the wires header"));
                }
                items.push(Item::Gate(parse_gate_line(body, line)?));
            }
        }
    }
    let wires = wires.ok_or_else(|| perr(0, "missing wires header"))?;
    if let Some(l) = layout {
        if l.num_wires() != wires {
            return Err(perr(0, "layout does not match the wire count"));
        }
    }
    Ok(Document {
        wires,
        layout,
        phase,
        items,
    })
}

pub fn write_header(out: &mut String, wires: usize, layout: Option<&WireLayout>) {
    let _ = writeln!(out, "wires {wires}");
    if let Some(l) = layout {
        let _ = writeln!(out, "layout {} {}", l.n(), l.m());
    }
}

fn gate_line(gate: &Gate) -> GateLine {
    let params = match gate.kind {
        GateKind::Coin(a) => vec![a.alpha, a.theta, a.phi, a.lambda],
        _ => vec![],
    };
    GateLine {
        kind: gate.kind.name().to_string(),
        targets: gate.targets.clone(),
        controls: gate.controls.clone(),
        params,
    }
}

pub fn write_circuit(circuit: &Circuit) -> String {
    let mut out = String::new();
    write_header(&mut out, circuit.num_wires(), circuit.layout());
    let segments = circuit.segments();
    let mut next = segments.iter().peekable();
    for (idx, gate) in circuit.gates().iter().enumerate() {
        if let Some(seg) = next.next_if(|s| s.range.start == idx) {
            if seg.label.is_empty() {
                out.push_str("segment\n");
            } else {
                let _ = writeln!(out, "segment {}", seg.label);
            }
        }
        let _ = writeln!(out, "{}", gate_line(gate));
    }
    out
}

pub fn parse_circuit(text: &str) -> Result<Circuit> {
    let doc = parse_document(text)?;
    let mut circuit = match doc.layout {
        Some(l) => Circuit::for_layout(l),
        None => Circuit::new(doc.wires),
    };
    for item in doc.items {
        match item {
            Item::Segment(label) => circuit.begin_segment(label),
            Item::Gate(line) => {
                let kind = match (line.kind.as_str(), line.params.as_slice()) {
                    ("not", []) => GateKind::Not,
                    ("swap", []) => GateKind::Swap,
                    ("mcx", []) => GateKind::Mcx,
                    ("coin", &[a, t, p, l]) => GateKind::Coin(CoinAngles::new(a, t, p, l)),
                    (k, _) => {
                        return Err(perr(0, format!("unknown gate {k:?} or wrong parameters")))
                    }
                };
                circuit.push(Gate {
                    kind,
                    targets: line.targets,
                    controls: line.controls,
                })?;
            }
        }
    }
    Ok(circuit)
}
