//! Interpolation-based unique decoding.
//!
//! The decoder keeps a Groebner basis of the interpolation module
//! `I = { f = f^U z + f^D : f(P_i, v_i) = 0 }` with respect to the weighted
//! order `>_s`, where `z` carries weight `s` and ties go to the `z` side.
//! Starting from `{eta_i} u {z - h_v}` at `s = deg(h_v)`, every round lowers
//! `s` by one. When `s` is a message index the coefficient `omega_s` is
//! guessed by majority vote and substituted out (`z -> z + w phi_s`); then
//! the basis is converted from `>_s` to `>_{s-1}`.

use std::fmt;

use thiserror::Error;

use crate::code::{Code, CodeError};
use crate::curvering::{Degree, RingElement, Semigroup};
use crate::gf::Elem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecodeError {
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("the zero pair has no leading term")]
    ZeroPair,
    #[error("invalid basis at weight {s}: {reason}")]
    InvalidState { s: i64, reason: String },
    #[error("{s} is not a message index (a nongap <= u)")]
    NotMessageIndex { s: u32 },
}

/// Which side of `Rz (+) R` a leading monomial lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Location {
    /// In `Rz`.
    Up,
    /// In `R`.
    Down,
}

/// Leading data of a module element under `>_s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lead {
    pub location: Location,
    /// Nongap of the leading ring monomial (without the `z`).
    pub monomial: u32,
    pub coeff: Elem,
}

/// `f = up * z + down`.
#[derive(Clone, PartialEq, Eq)]
pub struct ModulePair {
    pub up: RingElement,
    pub down: RingElement,
}

impl ModulePair {
    pub fn new(up: RingElement, down: RingElement) -> ModulePair {
        ModulePair { up, down }
    }

    pub fn is_zero(&self) -> bool {
        self.up.is_zero() && self.down.is_zero()
    }

    /// Leading term under `>_s`: upstairs iff `delta(up) + s >= delta(down)`.
    pub fn lead(&self, s: i64) -> Result<Lead, DecodeError> {
        let up_wins = match (self.up.delta(), self.down.delta()) {
            (Degree::Bottom, Degree::Bottom) => return Err(DecodeError::ZeroPair),
            (Degree::Bottom, _) => false,
            (_, Degree::Bottom) => true,
            (Degree::Finite(u), Degree::Finite(d)) => u as i64 + s >= d as i64,
        };
        let (location, (monomial, coeff)) = if up_wins {
            (Location::Up, self.up.leading().unwrap())
        } else {
            (Location::Down, self.down.leading().unwrap())
        };
        Ok(Lead {
            location,
            monomial,
            coeff,
        })
    }

    /// Substitutes `z -> z + w phi_s`.
    pub fn shift(&self, w: Elem, s: u32) -> Result<ModulePair, DecodeError> {
        if w.is_zero() {
            return Ok(self.clone());
        }
        let extra = self.up.mul_term(s, w).map_err(CodeError::from)?;
        Ok(ModulePair {
            up: self.up.clone(),
            down: &self.down + &extra,
        })
    }

    /// `c * phi_t * self`.
    fn mul_term(&self, t: u32, c: Elem) -> ModulePair {
        ModulePair {
            up: self.up.mul_term(t, c).expect("nongap"),
            down: self.down.mul_term(t, c).expect("nongap"),
        }
    }

    fn scale(&self, c: Elem) -> ModulePair {
        ModulePair {
            up: self.up.scale(c),
            down: self.down.scale(c),
        }
    }

    fn sub(&self, other: &ModulePair) -> ModulePair {
        ModulePair {
            up: &self.up - &other.up,
            down: &self.down - &other.down,
        }
    }

    /// `f(P, z) = up(P) z + down(P)`.
    pub fn evaluate(&self, x: Elem, y: Elem, z: Elem) -> Elem {
        let f = self.up.curve().field();
        f.add(f.mul(self.up.evaluate(x, y), z), self.down.evaluate(x, y))
    }
}

impl fmt::Debug for ModulePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) z + ({})", self.up, self.down)
    }
}

/// A Groebner basis `{G_i} u {F_j}` of an interpolation module at weight `s`:
/// the `G_i` lead downstairs, the `F_j` upstairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GbState {
    pub s: i64,
    pub g: Vec<ModulePair>,
    pub f: Vec<ModulePair>,
}

impl GbState {
    /// Leading monomials of the `G_i` under `>_s`.
    pub fn g_leads(&self) -> Result<Vec<u32>, DecodeError> {
        self.g
            .iter()
            .map(|g| match g.lead(self.s)? {
                Lead {
                    location: Location::Down,
                    monomial,
                    ..
                } => Ok(monomial),
                _ => Err(DecodeError::InvalidState {
                    s: self.s,
                    reason: "a G element leads upstairs".into(),
                }),
            })
            .collect()
    }

    /// Leading monomials of the `F_j` under `>_s`, without the `z`.
    pub fn f_leads(&self) -> Result<Vec<u32>, DecodeError> {
        self.f
            .iter()
            .map(|f| match f.lead(self.s)? {
                Lead {
                    location: Location::Up,
                    monomial,
                    ..
                } => Ok(monomial),
                _ => Err(DecodeError::InvalidState {
                    s: self.s,
                    reason: "an F element leads downstairs".into(),
                }),
            })
            .collect()
    }

    /// `(|Delta_s n Rz|, |Delta_s n R|)`.
    pub fn footprint_sizes(&self, sg: &Semigroup) -> Result<(usize, usize), DecodeError> {
        let size = |leads: Vec<u32>| {
            sg.footprint_size(&leads)
                .map_err(|e| DecodeError::InvalidState {
                    s: self.s,
                    reason: e.to_string(),
                })
        };
        Ok((size(self.f_leads()?)?, size(self.g_leads()?)?))
    }

    /// Within the G part and within the F part, no leading monomial divides another.
    pub fn is_reduced(&self, sg: &Semigroup) -> Result<bool, DecodeError> {
        let pairwise = |leads: &[u32]| {
            leads.iter().enumerate().all(|(i, &l)| {
                leads
                    .iter()
                    .enumerate()
                    .all(|(j, &m)| i == j || sg.divides(m, l).is_none())
            })
        };
        Ok(pairwise(&self.g_leads()?) && pairwise(&self.f_leads()?))
    }
}

/// Outcome of one majority vote.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VoteRecord {
    pub s: u32,
    /// `w_j` for each `F_j`, in basis order.
    pub proposals: Vec<Elem>,
    /// Distinct proposals in canonical field order with their tallies `d_c`.
    pub tallies: Vec<(Elem, usize)>,
    pub chosen: Elem,
    /// Winning tally minus the runner-up (zero on ties).
    pub margin: usize,
    pub low_confidence: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    LowConfidence,
    FailedVerification,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Ok => "ok",
            Status::LowConfidence => "low-confidence",
            Status::FailedVerification => "failed-verification",
        })
    }
}

#[derive(Clone, Debug)]
pub struct DecodeResult {
    /// `w^(s)` for the message indices, in increasing order.
    pub message: Vec<Elem>,
    /// One record per message index, in the order the votes were taken (decreasing `s`).
    pub votes: Vec<VoteRecord>,
    pub final_basis: GbState,
    pub status: Status,
    /// Hamming distance between the re-encoded message and the received word.
    pub distance: usize,
    /// `deg(h_v)`, or 0 when `h_v = 0`.
    pub interpolation_degree: u32,
}

/// One iteration of the main loop, as seen by an observer.
pub struct Round<'a> {
    pub s: i64,
    /// `B^(s)`.
    pub basis: &'a GbState,
    pub vote: Option<&'a VoteRecord>,
    /// Basis after the substitution, still at weight `s`.
    pub shifted: &'a GbState,
    /// `B^(s-1)`.
    pub next: &'a GbState,
}

/// `B^(N) = {eta_i} u {z - h_v}` with `N = deg(h_v)`.
pub fn init(code: &Code, v: &[Elem]) -> Result<(u32, GbState), DecodeError> {
    let h = code.lagrange(v)?;
    let c = code.curve();
    let n_deg = h.delta().finite().unwrap_or(0);
    let g = code
        .ideal_basis()
        .iter()
        .map(|eta| ModulePair::new(RingElement::zero(c), eta.clone()))
        .collect();
    let f = vec![ModulePair::new(RingElement::one(c), h.neg())];
    Ok((
        n_deg,
        GbState {
            s: n_deg as i64,
            g,
            f,
        },
    ))
}

/// Applies `z -> z + w phi_s` to every basis element.
pub fn shift(b: &GbState, w: Elem, s: u32) -> Result<GbState, DecodeError> {
    let map = |list: &[ModulePair]| {
        list.iter()
            .map(|p| p.shift(w, s))
            .collect::<Result<Vec<_>, _>>()
    };
    Ok(GbState {
        s: b.s,
        g: map(&b.g)?,
        f: map(&b.f)?,
    })
}

/// `(psi / lt_down(F)) F - (psi / lt_down(G)) G`, both scaled so the
/// downstairs terms at `psi` are monic and cancel.
fn combine(fj: &ModulePair, f_mono: u32, gi: &ModulePair, g_mono: u32, psi: u32) -> ModulePair {
    let field = fj.up.curve().field().clone();
    let a = fj.mul_term(psi - f_mono, Elem::ONE);
    let b = gi.mul_term(psi - g_mono, Elem::ONE);
    let a = a.scale(field.inv(a.down.coeff(psi)).expect("leading coefficient"));
    let b = b.scale(field.inv(b.down.coeff(psi)).expect("leading coefficient"));
    a.sub(&b)
}

/// The elements replacing `F_j` when moving from `>_s` to `>_{s-1}`.
///
/// `g_leads` are the `>_s` leading monomials of `g`.
pub fn spoly(
    sg: &Semigroup,
    s: i64,
    fj: &ModulePair,
    g: &[ModulePair],
    g_leads: &[u32],
) -> Result<Vec<ModulePair>, DecodeError> {
    let invalid = |reason: &str| DecodeError::InvalidState {
        s,
        reason: reason.to_string(),
    };
    if fj.lead(s)?.location != Location::Up {
        return Err(invalid("spoly of an element leading downstairs"));
    }
    let lower = fj.lead(s - 1)?;
    if lower.location == Location::Up {
        return Ok(vec![fj.clone()]);
    }
    let m = lower.monomial;
    let out = if let Some(i) = g_leads.iter().position(|&l| sg.divides(l, m).is_some()) {
        vec![combine(fj, m, &g[i], g_leads[i], m)]
    } else {
        let mut out = Vec::new();
        for (gi, &l) in g.iter().zip(g_leads) {
            for psi in sg.lcms(m, l).map_err(|e| invalid(&e.to_string()))? {
                out.push(combine(fj, m, gi, l, psi));
            }
        }
        out
    };
    for p in &out {
        if p.lead(s - 1)?.location != Location::Up {
            return Err(invalid("spoly output leads downstairs"));
        }
    }
    Ok(out)
}

/// Drops every element whose `>_t` leading monomial is divisible by that
/// of another element; among equal leading monomials the first is kept.
fn prime_reduce(
    sg: &Semigroup,
    t: i64,
    list: Vec<ModulePair>,
) -> Result<Vec<ModulePair>, DecodeError> {
    let leads = list
        .iter()
        .map(|p| p.lead(t).map(|l| l.monomial))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(list
        .into_iter()
        .enumerate()
        .filter(|&(i, _)| {
            !leads.iter().enumerate().any(|(j, &other)| {
                j != i && sg.divides(other, leads[i]).is_some() && (other != leads[i] || j < i)
            })
        })
        .map(|(_, p)| p)
        .collect())
}

/// Converts a basis at weight `s` into the reduced basis at weight `s - 1`.
pub fn step(sg: &Semigroup, b: &GbState) -> Result<GbState, DecodeError> {
    let s = b.s;
    let g_leads = b.g_leads()?;
    b.f_leads()?;
    let mut new_g = b.g.clone();
    let mut new_f = Vec::new();
    for fj in &b.f {
        let lower = fj.lead(s - 1)?;
        if lower.location == Location::Down
            && !g_leads
                .iter()
                .any(|&l| sg.divides(l, lower.monomial).is_some())
        {
            new_g.push(fj.clone());
        }
        new_f.extend(spoly(sg, s, fj, &b.g, &g_leads)?);
    }
    Ok(GbState {
        s: s - 1,
        g: prime_reduce(sg, s - 1, new_g)?,
        f: prime_reduce(sg, s - 1, new_f)?,
    })
}

/// Majority vote for `omega_s`.
pub fn vote(code: &Code, s: u32, b: &GbState) -> Result<VoteRecord, DecodeError> {
    if s > code.u() || !code.curve().semigroup().is_nongap(s) {
        return Err(DecodeError::NotMessageIndex { s });
    }
    let field = code.field();
    let sg = code.curve().semigroup();
    let c = code.curve();
    let g_leads = b.g_leads()?;
    let delta_g = sg
        .footprint(&g_leads)
        .map_err(|e| DecodeError::InvalidState {
            s: b.s,
            reason: e.to_string(),
        })?;

    let mut proposals = Vec::with_capacity(b.f.len());
    let mut targets = Vec::with_capacity(b.f.len());
    for fj in &b.f {
        let (lu, lc) = fj.up.leading().ok_or(DecodeError::InvalidState {
            s: b.s,
            reason: "an F element has zero upstairs part".into(),
        })?;
        let target = lu + s;
        // leading coefficient of F^U phi_s; equals lc(F^U) when y^a = x^b + ...
        let lead_prod = RingElement::term(c, lu, lc)
            .and_then(|t| t.mul_term(s, Elem::ONE))
            .map_err(CodeError::from)?
            .coeff(target);
        let d = fj.down.coeff(target);
        proposals.push(field.neg(field.div(d, lead_prod).expect("nonzero")));
        targets.push(target);
    }

    let mut distinct: Vec<Elem> = proposals.clone();
    distinct.sort_by_key(|&e| field.canonical_rank(e));
    distinct.dedup();
    let tallies: Vec<(Elem, usize)> = distinct
        .iter()
        .map(|&cand| {
            let count = delta_g
                .iter()
                .filter(|&&t| {
                    proposals
                        .iter()
                        .zip(&targets)
                        .any(|(&w, &m)| w == cand && sg.divides(m, t).is_some())
                })
                .count();
            (cand, count)
        })
        .collect();

    let best = tallies.iter().map(|&(_, d)| d).max().unwrap_or(0);
    let winners: Vec<Elem> = tallies
        .iter()
        .filter(|&&(_, d)| d == best)
        .map(|&(e, _)| e)
        .collect();
    let runner_up = {
        let mut ds: Vec<usize> = tallies.iter().map(|&(_, d)| d).collect();
        ds.sort_unstable_by(|x, y| y.cmp(x));
        ds.get(1).copied().unwrap_or(0)
    };
    let (chosen, margin, low_confidence) = if best == 0 {
        (Elem::ZERO, 0, true)
    } else if winners.len() > 1 {
        (winners[0], 0, true)
    } else {
        (winners[0], best - runner_up, false)
    };
    Ok(VoteRecord {
        s,
        proposals,
        tallies,
        chosen,
        margin,
        low_confidence,
    })
}

/// Decodes `v`. Never aborts on noisy input; see [`DecodeResult::status`].
pub fn decode(code: &Code, v: &[Elem]) -> Result<DecodeResult, DecodeError> {
    decode_observed(code, v, |_| {})
}

/// [`decode`], reporting every round to `observer`.
pub fn decode_observed(
    code: &Code,
    v: &[Elem],
    mut observer: impl FnMut(&Round<'_>),
) -> Result<DecodeResult, DecodeError> {
    let sg = code.curve().semigroup();
    let (n_deg, mut state) = init(code, v)?;
    // B^(N) is also a basis for every weight above N
    let start = n_deg.max(code.u());
    state.s = start as i64;

    let mut votes = Vec::new();
    for s in (0..=start).rev() {
        let record = if s <= code.u() && sg.is_nongap(s) {
            Some(vote(code, s, &state)?)
        } else {
            None
        };
        let shifted = match &record {
            Some(r) => shift(&state, r.chosen, s)?,
            None => state.clone(),
        };
        let next = step(sg, &shifted)?;
        observer(&Round {
            s: s as i64,
            basis: &state,
            vote: record.as_ref(),
            shifted: &shifted,
            next: &next,
        });
        if let Some(r) = record {
            votes.push(r);
        }
        state = next;
    }

    let mut message = vec![Elem::ZERO; code.dimension()];
    for r in &votes {
        let idx = code.message_index().binary_search(&r.s).unwrap();
        message[idx] = r.chosen;
    }
    let codeword = code.encode(&message)?;
    let distance = Code::distance(&codeword, v);
    let status = if distance > code.correction_radius() {
        Status::FailedVerification
    } else if votes.iter().any(|r| r.low_confidence) {
        Status::LowConfidence
    } else {
        Status::Ok
    };
    Ok(DecodeResult {
        message,
        votes,
        final_basis: state,
        status,
        distance,
        interpolation_degree: n_deg,
    })
}

/// `sum_{c != w} d_c`; the chosen value minimizes it.
pub fn disagreement(record: &VoteRecord, w: Elem) -> usize {
    record
        .tallies
        .iter()
        .filter(|&&(c, _)| c != w)
        .map(|&(_, d)| d)
        .sum()
}
