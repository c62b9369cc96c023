//! Line-oriented decoding traces, used as golden-test fixtures.
//!
//! ```text
//! # plane-ag trace v1
//! # code GF(3^2) <3,4> n=27 u=16 k=14
//! N=32
//! s=16
//!   G1 down z:a^2*x*y r:a^2*x^7*y
//!   F1 up z:a^2*x^2 r:0
//!   vote W=0,a^7 d[0]=2 d[a^7]=1 w=0 margin=1
//! s=-1
//!   ...
//! output 0,0,0,0,0,0,0,0,0,0,0,0,0,0
//! status ok distance=5
//! ```
//!
//! Each `s=` record lists `B^(s)` (before the vote) with the location of the
//! `>_s` leading term and the leading terms of the `z` part and of the
//! `R` part; `vote` lines appear only at message indices and carry
//! `low-confidence` when the vote was a tie or empty. The final record is
//! `B^(-1)`.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::code::Code;
use crate::decoder::{decode_observed, DecodeError, DecodeResult, GbState, Location, VoteRecord};
use crate::gf::{Elem, Field};
use crate::io::format_vector;

pub const TRACE_HEADER: &str = "# plane-ag trace v1";

fn basis_lines(out: &mut String, b: &GbState) {
    for (name, list) in [("G", &b.g), ("F", &b.f)] {
        for (i, p) in list.iter().enumerate() {
            let loc = match p.lead(b.s).map(|l| l.location) {
                Ok(Location::Up) => "up",
                Ok(Location::Down) => "down",
                Err(_) => "zero",
            };
            writeln!(
                out,
                "  {name}{} {loc} z:{} r:{}",
                i + 1,
                p.up.leading_term_string(),
                p.down.leading_term_string()
            )
            .unwrap();
        }
    }
}

fn vote_line(out: &mut String, field: &Field, v: &VoteRecord) {
    let fmt = |e: Elem| field.format(e);
    let w: Vec<String> = v.tallies.iter().map(|&(c, _)| fmt(c)).collect();
    write!(out, "  vote W={}", w.join(",")).unwrap();
    for &(c, d) in &v.tallies {
        write!(out, " d[{}]={d}", fmt(c)).unwrap();
    }
    write!(out, " w={} margin={}", fmt(v.chosen), v.margin).unwrap();
    if v.low_confidence {
        out.push_str(" low-confidence");
    }
    out.push('\n');
}

/// Decodes `v` and renders the full trace.
pub fn render(code: &Code, v: &[Elem]) -> Result<(String, DecodeResult), DecodeError> {
    let field = code.field();
    let sg = code.curve().semigroup();
    let mut out = String::new();
    writeln!(out, "{TRACE_HEADER}").unwrap();
    writeln!(
        out,
        "# code GF({}^{}) <{},{}> n={} u={} k={}",
        field.characteristic(),
        field.degree(),
        sg.a(),
        sg.b(),
        code.len(),
        code.u(),
        code.dimension()
    )
    .unwrap();
    let mut body = String::new();
    let mut last = None;
    let result = decode_observed(code, v, |round| {
        writeln!(body, "s={}", round.s).unwrap();
        basis_lines(&mut body, round.basis);
        if let Some(vote) = round.vote {
            vote_line(&mut body, field, vote);
        }
        last = Some(round.next.clone());
    })?;
    writeln!(out, "N={}", result.interpolation_degree).unwrap();
    out.push_str(&body);
    if let Some(b) = last {
        writeln!(out, "s={}", b.s).unwrap();
        basis_lines(&mut out, &b);
    }
    writeln!(out, "output {}", format_vector(field, &result.message)).unwrap();
    writeln!(out, "status {} distance={}", result.status, result.distance).unwrap();
    Ok((out, result))
}

/// Splits a trace into its `s=` records (header line included, trailing
/// `output`/`status` lines excluded).
pub fn records(trace: &str) -> BTreeMap<i64, Vec<String>> {
    let mut map = BTreeMap::new();
    let mut current: Option<(i64, Vec<String>)> = None;
    for line in trace.lines() {
        if let Some(s) = line.strip_prefix("s=").and_then(|t| t.parse().ok()) {
            if let Some((k, v)) = current.take() {
                map.insert(k, v);
            }
            current = Some((s, vec![line.to_string()]));
        } else if line.starts_with("  ") {
            if let Some((_, v)) = current.as_mut() {
                v.push(line.to_string());
            }
        } else if let Some((k, v)) = current.take() {
            map.insert(k, v);
        }
    }
    if let Some((k, v)) = current {
        map.insert(k, v);
    }
    map
}
