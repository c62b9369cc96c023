//! Deliberately naive verifiers for tests and acceptance runs.
//!
//! Nothing here is on the decoding path. Where the decoder uses a clever
//! shortcut (the lattice divisibility rule, the closed-form lcm pair, the
//! row-wise footprint count), the oracle falls back to the definition:
//! `r | t` iff `t - r` is a nongap, and footprints are counted by scanning.

use std::fmt;

use thiserror::Error;

use crate::code::{Code, CodeError};
use crate::curvering::Semigroup;
use crate::decoder::{decode_observed, DecodeError, DecodeResult, GbState, ModulePair};
use crate::gf::Elem;

/// Exhaustive scans stop (with an error) beyond this many messages.
pub const NEAREST_CODEWORD_CAP: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("exhaustive scan over {count} messages exceeds the cap of {cap}")]
    CapExceeded { count: u128, cap: u64 },
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Decode(#[from] DecodeError),
}

/// Verdict of one oracle check. `counterexample` is set iff the check failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub subject: String,
    pub passed: bool,
    pub counterexample: Option<String>,
}

impl OracleReport {
    fn pass(subject: impl Into<String>) -> OracleReport {
        OracleReport {
            subject: subject.into(),
            passed: true,
            counterexample: None,
        }
    }

    fn fail(subject: impl Into<String>, counterexample: impl Into<String>) -> OracleReport {
        OracleReport {
            subject: subject.into(),
            passed: false,
            counterexample: Some(counterexample.into()),
        }
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "PASS {}", self.subject),
            Some(c) => write!(f, "FAIL {}: {}", self.subject, c),
        }
    }
}

/// A codeword at minimum distance from the scanned word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nearest {
    pub message: Vec<Elem>,
    pub codeword: Vec<Elem>,
    pub distance: usize,
}

/// All codewords at minimum Hamming distance from `v`, by scanning every message.
///
/// Fails if the code has more than [`NEAREST_CODEWORD_CAP`] codewords.
pub fn nearest_codeword(code: &Code, v: &[Elem]) -> Result<Vec<Nearest>, OracleError> {
    if v.len() != code.len() {
        return Err(CodeError::LengthMismatch {
            expected: code.len(),
            got: v.len(),
        }
        .into());
    }
    let elems: Vec<Elem> = code.field().elements().collect();
    let k = code.dimension();
    let count = (elems.len() as u128).pow(k as u32);
    if count > NEAREST_CODEWORD_CAP as u128 {
        return Err(OracleError::CapExceeded {
            count,
            cap: NEAREST_CODEWORD_CAP,
        });
    }
    let mut best = usize::MAX;
    let mut found = Vec::new();
    let mut digits = vec![0usize; k];
    for _ in 0..count {
        let message: Vec<Elem> = digits.iter().map(|&d| elems[d]).collect();
        let codeword = code.encode(&message)?;
        let distance = Code::distance(&codeword, v);
        if distance < best {
            best = distance;
            found.clear();
        }
        if distance == best {
            found.push(Nearest {
                message,
                codeword,
                distance,
            });
        }
        for d in digits.iter_mut() {
            *d += 1;
            if *d < elems.len() {
                break;
            }
            *d = 0;
        }
    }
    Ok(found)
}

fn divides_by_definition(sg: &Semigroup, r: u32, t: u32) -> bool {
    t >= r && sg.is_nongap(t - r)
}

/// `|Delta(gens)|` by scanning; `None` if the footprint is empty-generated.
///
/// Any `c >= min(gens) + conductor` is a multiple of the smallest generator,
/// which bounds the scan.
fn footprint_size_by_scan(sg: &Semigroup, gens: &[u32]) -> Option<usize> {
    let lo = *gens.iter().min()?;
    let conductor = (sg.a() - 1) * (sg.b() - 1);
    Some(
        (0..lo + conductor)
            .filter(|&c| sg.is_nongap(c) && !gens.iter().any(|&g| divides_by_definition(sg, g, c)))
            .count(),
    )
}

/// Checks that `b` is a Groebner basis of the interpolation module of `v_s`
/// under `>_s`: membership, footprint size `n`, and within-set reducedness.
pub fn check_gb(s: i64, b: &GbState, code: &Code, v_s: &[Elem]) -> OracleReport {
    let subject = format!("gb s={s}");
    if v_s.len() != code.len() {
        return OracleReport::fail(
            subject,
            format!("|v_s| = {} != n = {}", v_s.len(), code.len()),
        );
    }
    let sg = code.curve().semigroup();

    let elements =
        b.g.iter()
            .map(|p| ("G", p))
            .chain(b.f.iter().map(|p| ("F", p)));
    for (idx, (part, p)) in elements.enumerate() {
        for (i, (&(x, y), &vi)) in code.points().iter().zip(v_s).enumerate() {
            let val = p.evaluate(x, y, vi);
            if !val.is_zero() {
                return OracleReport::fail(
                    subject,
                    format!("{part} element #{idx} = {p:?} is {val:?} at point {i}"),
                );
            }
        }
    }

    let (g_leads, f_leads) = match (leads_at(&b.g, s), leads_at(&b.f, s)) {
        (Ok(g), Ok(f)) => (g, f),
        _ => return OracleReport::fail(subject, "zero element in basis"),
    };
    if let Some(bad) = g_leads.iter().find(|&&(up, _)| up) {
        return OracleReport::fail(subject, format!("G element leads upstairs at {}", bad.1));
    }
    if let Some(bad) = f_leads.iter().find(|&&(up, _)| !up) {
        return OracleReport::fail(subject, format!("F element leads downstairs at {}", bad.1));
    }
    let g_leads: Vec<u32> = g_leads.into_iter().map(|(_, m)| m).collect();
    let f_leads: Vec<u32> = f_leads.into_iter().map(|(_, m)| m).collect();

    match (
        footprint_size_by_scan(sg, &f_leads),
        footprint_size_by_scan(sg, &g_leads),
    ) {
        (Some(up), Some(down)) if up + down == code.len() => {}
        (up, down) => {
            return OracleReport::fail(
                subject,
                format!("|Delta_s| = {up:?} + {down:?}, expected {}", code.len()),
            )
        }
    }

    for (part, leads) in [("G", &g_leads), ("F", &f_leads)] {
        for (i, &l) in leads.iter().enumerate() {
            for (j, &m) in leads.iter().enumerate() {
                if i != j && divides_by_definition(sg, m, l) {
                    return OracleReport::fail(
                        subject,
                        format!("{part}: lead {m} (#{j}) divides lead {l} (#{i})"),
                    );
                }
            }
        }
    }
    OracleReport::pass(subject)
}

/// `(is_upstairs, monomial)` for every element.
fn leads_at(list: &[ModulePair], s: i64) -> Result<Vec<(bool, u32)>, DecodeError> {
    list.iter()
        .map(|p| {
            p.lead(s)
                .map(|l| (l.location == crate::decoder::Location::Up, l.monomial))
        })
        .collect()
}

/// Checks the lcm pair of `s` and `t` against every common multiple up to `bound`.
pub fn lcm_check(sg: &Semigroup, s: u32, t: u32, bound: u32) -> OracleReport {
    let subject = format!("lcm({s}, {t}) in <{}, {}>", sg.a(), sg.b());
    if !sg.is_nongap(s) || !sg.is_nongap(t) {
        return OracleReport::fail(subject, "argument is a gap");
    }
    let lcms = match sg.lcms(s, t) {
        Ok(l) => l,
        Err(e) => return OracleReport::fail(subject, e.to_string()),
    };
    for &l in &lcms {
        if !divides_by_definition(sg, s, l) || !divides_by_definition(sg, t, l) {
            return OracleReport::fail(subject, format!("{l} is not a common multiple"));
        }
    }
    for c in 0..=bound {
        let common =
            sg.is_nongap(c) && divides_by_definition(sg, s, c) && divides_by_definition(sg, t, c);
        if common && !lcms.iter().any(|&l| divides_by_definition(sg, l, c)) {
            return OracleReport::fail(
                subject,
                format!("common multiple {c} not covered by {lcms:?}"),
            );
        }
    }
    OracleReport::pass(subject)
}

/// One decode with every intermediate basis checked.
#[derive(Debug, Clone)]
pub struct DecodeAudit {
    pub result: DecodeResult,
    /// Every failing [`check_gb`] report (empty on success).
    pub failures: Vec<OracleReport>,
    pub checked: usize,
    /// `(s, |Delta_s n Rz|)` for `s = start, ..., -1`.
    pub upstairs_footprint: Vec<(i64, usize)>,
    /// `(s, monotone)`: whether the step `s -> s - 1` shrank the upstairs
    /// footprint and grew the downstairs one.
    pub monotone: Vec<(i64, bool)>,
}

/// Decodes `v` while tracking `v^(s)` and running [`check_gb`] on `B^(s)`
/// for every `s`, including the final `B^(-1)`.
pub fn audit_decode(code: &Code, v: &[Elem]) -> Result<DecodeAudit, OracleError> {
    let sg = code.curve().semigroup();
    let mut v_s = v.to_vec();
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut upstairs = Vec::new();
    let mut monotone = Vec::new();
    let mut record = |s: i64, b: &GbState, v_s: &[Elem], failures: &mut Vec<OracleReport>| {
        let r = check_gb(s, b, code, v_s);
        checked += 1;
        if !r.passed {
            failures.push(r);
        }
        let f_leads: Vec<u32> =
            b.f.iter()
                .filter_map(|p| p.up.leading())
                .map(|(m, _)| m)
                .collect();
        upstairs.push((
            s,
            footprint_size_by_scan(sg, &f_leads).unwrap_or(usize::MAX),
        ));
    };
    let mut last: Option<GbState> = None;
    let result = decode_observed(code, v, |round| {
        record(round.s, round.basis, &v_s, &mut failures);
        if let Some(vote) = round.vote {
            let f = code.field();
            for (vi, (x, y)) in v_s.iter_mut().zip(code.points()) {
                let phi = crate::curvering::RingElement::term(code.curve(), vote.s, vote.chosen)
                    .expect("nongap")
                    .evaluate(*x, *y);
                *vi = f.sub(*vi, phi);
            }
        }
        monotone.push((round.s, footprints_monotone(sg, round.shifted, round.next)));
        last = Some(round.next.clone());
    })?;
    if let Some(b) = last {
        record(-1, &b, &v_s, &mut failures);
    }
    Ok(DecodeAudit {
        result,
        failures,
        checked,
        upstairs_footprint: upstairs,
        monotone,
    })
}

/// Upstairs: `Sigma_{s-1} n Rz` within `Sigma_s n Rz`; downstairs the reverse.
fn footprints_monotone(sg: &Semigroup, before: &GbState, after: &GbState) -> bool {
    let sigma = |b: &GbState, s: i64, up: bool| -> Vec<u32> {
        let list = if up { &b.f } else { &b.g };
        leads_at(list, s)
            .unwrap_or_default()
            .into_iter()
            .map(|(_, m)| m)
            .collect()
    };
    let covered = |gens: &[u32], by: &[u32]| {
        gens.iter()
            .all(|&g| by.iter().any(|&h| divides_by_definition(sg, h, g)))
    };
    // every generator of the smaller ideal is a multiple of a generator of the larger
    covered(&sigma(after, after.s, true), &sigma(before, before.s, true))
        && covered(
            &sigma(before, before.s, false),
            &sigma(after, after.s, false),
        )
}
