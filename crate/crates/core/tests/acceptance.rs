//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use plane_ag::code::{hermitian_d_u, Code};
use plane_ag::curvering::{Curve, Degree, RingElement, Semigroup};
use plane_ag::decoder::{decode, Status};
use plane_ag::gf::{Elem, Field};
use plane_ag::io::{parse_vector, CodeSpec};
use plane_ag::oracle::{audit_decode, lcm_check, nearest_codeword};
use plane_ag::sim::{simulate, Execution, TrialInput};
use plane_ag::trace;

type Outcome = Result<String, String>;

/// Name, time limit, check.
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

const CONFIG: &str = include_str!("../fixtures/hermitian_q3_u16.json");
const RECEIVED: &str = include_str!("../fixtures/received_q3_u16.txt");
const GOLDEN: &str = include_str!("../fixtures/trace_q3_u16.golden");

fn golden_trace() -> Outcome {
    let code = CodeSpec::from_json(CONFIG)
        .and_then(|s| s.build())
        .map_err(|e| e.to_string())?;
    let v = parse_vector(code.field(), RECEIVED, Some(27)).map_err(|e| e.to_string())?;
    let (text, result) = trace::render(&code, &v).map_err(|e| e.to_string())?;
    let recs = trace::records(&text);
    let rec = |s: i64| recs.get(&s).cloned().unwrap_or_default();

    ensure(result.interpolation_degree == 32, || {
        format!("N = {}", result.interpolation_degree)
    })?;
    ensure(
        rec(32)[1..] == ["  G1 down z:0 r:x^9", "  F1 up z:1 r:a^7*x^8*y^2"],
        || format!("B^(32) = {:?}", rec(32)),
    )?;
    ensure(
        rec(31)[3..]
            == [
                "  F1 up z:a^1*x r:a^5*x^8*y^2",
                "  F2 up z:a^1*y r:a^5*x^11",
            ],
        || format!("B^(31) = {:?}", rec(31)),
    )?;
    ensure(
        rec(16).last().map(String::as_str) == Some("  vote W=0,a^7 d[0]=2 d[a^7]=1 w=0 margin=1"),
        || format!("vote at 16: {:?}", rec(16).last()),
    )?;
    ensure(
        rec(15)[1..5]
            == [
                "  G1 down z:a^2*x*y r:a^2*x^7*y",
                "  G2 down z:a^5*y^2 r:x^8",
                "  F1 up z:a^2*x^2 r:0",
                "  F2 up z:a^5*x*y^2 r:2*x^7*y",
            ],
        || format!("B^(15) = {:?}", rec(15)),
    )?;
    ensure(result.message == vec![Elem::ZERO; 14], || {
        "non-zero output".into()
    })?;
    ensure(result.status == Status::Ok, || {
        format!("status {}", result.status)
    })?;
    ensure(text == GOLDEN, || {
        "trace differs from the golden file".into()
    })?;
    Ok(format!("{} trace lines match", text.lines().count()))
}

fn radius() -> Outcome {
    let code = Code::hermitian(3, 1).map_err(|e| e.to_string())?;
    let sg = code.curve().semigroup();
    let mut rows = 0;
    for u in sg.nongaps().take_while(|&u| u < 27) {
        let generic = code.radius_at(u);
        if u > 0 {
            let closed = hermitian_d_u(3, u).map_err(|e| e.to_string())?;
            ensure(closed == generic, || {
                format!("u={u}: closed {closed} != generic {generic}")
            })?;
        }
        ensure(generic >= 27 - u as i64, || {
            format!("d_{u} = {generic} < 27 - {u}")
        })?;
        rows += 1;
    }
    ensure(code.radius_at(16) == 11, || {
        format!("d_16 = {}", code.radius_at(16))
    })?;
    Ok(format!("{rows} nongap rows, d_16 = 11"))
}

fn correction_guarantee() -> Outcome {
    let code = Code::hermitian(3, 16).map_err(|e| e.to_string())?;
    let r = simulate(&code, 2024, 200, 5, Execution::default()).map_err(|e| e.to_string())?;
    ensure(r.successes() == 200, || {
        format!("{}/200 recovered", r.successes())
    })?;
    Ok("200/200 recovered".into())
}

fn oracle_equivalence() -> Outcome {
    let code = Code::hermitian(2, 4).map_err(|e| e.to_string())?;
    ensure(code.d_u() == 4, || format!("d_u = {}", code.d_u()))?;
    let f = code.field();
    let nonzero: Vec<Elem> = f.elements().filter(|e| !e.is_zero()).collect();
    let mut cases = 0;
    for i in 0..20 {
        let msg = TrialInput::draw(&code, 77, i, 0).message;
        let c = code.encode(&msg).map_err(|e| e.to_string())?;
        for pos in 0..code.len() {
            for &e in &nonzero {
                let mut v = c.clone();
                v[pos] = f.add(v[pos], e);
                let near = nearest_codeword(&code, &v).map_err(|e| e.to_string())?;
                ensure(near.len() == 1, || format!("{} minimizers", near.len()))?;
                let got = decode(&code, &v).map_err(|e| e.to_string())?;
                ensure(got.message == near[0].message && got.message == msg, || {
                    format!("codeword {i}, error {e:?} at {pos}")
                })?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} patterns agree"))
}

fn groebner_invariants() -> Outcome {
    let code = Code::hermitian(3, 16).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut states = 0;
    for i in 0..50 {
        let t = rng.gen_range(0..=code.correction_radius());
        let input = TrialInput::draw(&code, 505, i, t);
        let audit = audit_decode(&code, &input.received(&code)).map_err(|e| e.to_string())?;
        ensure(audit.failures.is_empty(), || audit.failures[0].to_string())?;
        ensure(audit.result.message == input.message, || {
            format!("trial {i} not recovered")
        })?;
        if let Some(&(s, n)) = audit.upstairs_footprint.iter().find(|&&(_, n)| n > t) {
            return Err(format!("trial {i}: |Delta_{s} n Rz| = {n} > wt(e) = {t}"));
        }
        if let Some(&(s, _)) = audit.monotone.iter().find(|&&(_, ok)| !ok) {
            return Err(format!("trial {i}: footprints not monotone at s={s}"));
        }
        states += audit.checked;
    }
    Ok(format!("{states} bases checked"))
}

fn algebra() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    // field axioms on random triples
    for (p, m) in [
        (2, 1),
        (2, 4),
        (2, 8),
        (3, 2),
        (3, 4),
        (5, 2),
        (7, 2),
        (13, 1),
    ] {
        let f = Field::new(p, m, None).map_err(|e| e.to_string())?;
        let all: Vec<Elem> = f.elements().collect();
        for _ in 0..2000 {
            let [a, b, c] = [0; 3].map(|_| all[rng.gen_range(0..all.len())]);
            ensure(f.add(a, f.add(b, c)) == f.add(f.add(a, b), c), || {
                "add assoc".into()
            })?;
            ensure(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c), || {
                "mul assoc".into()
            })?;
            ensure(
                f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)),
                || "distrib".into(),
            )?;
            ensure(f.add(a, f.neg(a)).is_zero(), || "neg".into())?;
            if !a.is_zero() {
                ensure(f.mul(a, f.inv(a).unwrap()) == f.one(), || "inv".into())?;
            }
        }
    }
    // exhaustive Frobenius for every field of order <= 81
    let mut fields = 0;
    for p in (2u32..=79).filter(|&p| (2..p).all(|d| p % d != 0)) {
        let mut m = 1;
        while p.pow(m) <= 81 {
            let f = Field::new(p, m, None).map_err(|e| e.to_string())?;
            let all: Vec<Elem> = f.elements().collect();
            let frob = |x| f.pow(x, p as i64).unwrap();
            for &a in &all {
                for &b in &all {
                    ensure(frob(f.add(a, b)) == f.add(frob(a), frob(b)), || {
                        format!("Frobenius not additive in GF({p}^{m})")
                    })?;
                }
            }
            fields += 1;
            m += 1;
        }
    }
    // valuation of products
    let curve = Curve::hermitian(3).map_err(|e| e.to_string())?;
    let ng: Vec<u32> = curve
        .semigroup()
        .nongaps()
        .take_while(|&s| s < 40)
        .collect();
    let all: Vec<Elem> = curve.field().elements().collect();
    let random = |rng: &mut ChaCha8Rng| {
        let terms: Vec<(u32, Elem)> = (0..rng.gen_range(0..6))
            .map(|_| {
                (
                    ng[rng.gen_range(0..ng.len())],
                    all[rng.gen_range(0..all.len())],
                )
            })
            .collect();
        RingElement::from_terms(&curve, terms).unwrap()
    };
    for _ in 0..300 {
        let (f, g) = (random(&mut rng), random(&mut rng));
        let expect = match (f.delta(), g.delta()) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::Bottom,
        };
        ensure((&f * &g).delta() == expect, || format!("delta({f} * {g})"))?;
    }
    // lcms and the footprint of a principal ideal
    let mut pairs = 0;
    for (a, b) in [(3, 4), (4, 5)] {
        let sg = Semigroup::new(a, b).map_err(|e| e.to_string())?;
        let ng: Vec<u32> = sg.nongaps().take_while(|&s| s <= 60).collect();
        for &s in &ng {
            for &t in &ng {
                let r = lcm_check(&sg, s, t, s + t + a * b);
                ensure(r.passed, || r.to_string())?;
                pairs += 1;
            }
        }
        let conductor = (a - 1) * (b - 1);
        for &s in ng.iter().filter(|&&s| s <= 40) {
            let scanned = (0..s + conductor)
                .filter(|&c| sg.is_nongap(c) && !(c >= s && sg.is_nongap(c - s)))
                .count();
            let size = sg.footprint_size(&[s]).map_err(|e| e.to_string())?;
            ensure(scanned == s as usize && size == s as usize, || {
                format!("|Delta(R phi_{s})| = {size} / {scanned} in <{a},{b}>")
            })?;
        }
    }
    Ok(format!("{fields} fields, {pairs} lcm pairs"))
}

fn ideal_construction() -> Outcome {
    for (q, eta) in [(3u32, 9u32), (2, 4)] {
        let code = Code::hermitian(q, 1).map_err(|e| e.to_string())?;
        let c = code.curve();
        let x = RingElement::x(c);
        let expected = &RingElement::term(c, eta * q, Elem::ONE).unwrap() - &x;
        ensure(code.ideal_basis() == [expected], || {
            format!(
                "q={q}: J = {:?}",
                code.ideal_basis()
                    .iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
            )
        })?;
        ensure(code.ideal_footprint().len() == code.len(), || {
            format!("q={q}: |Delta(J)| = {}", code.ideal_footprint().len())
        })?;
    }
    Ok("J = <x^9 - x>, <x^4 - x>".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("golden trace", Duration::from_secs(1), golden_trace),
        ("radius theorem", Duration::from_secs(1), radius),
        (
            "correction guarantee",
            Duration::from_secs(60),
            correction_guarantee,
        ),
        (
            "oracle equivalence",
            Duration::from_secs(30),
            oracle_equivalence,
        ),
        (
            "groebner invariants",
            Duration::from_secs(120),
            groebner_invariants,
        ),
        ("algebra properties", Duration::from_secs(30), algebra),
        (
            "ideal construction",
            Duration::from_secs(1),
            ideal_construction,
        ),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let verdict = match outcome {
            Ok(detail) if elapsed <= *limit => format!("PASS {detail}"),
            Ok(detail) => format!("FAIL over time limit {limit:?} ({detail})"),
            Err(why) => format!("FAIL {why}"),
        };
        if verdict.starts_with("FAIL") {
            failed += 1;
        }
        println!("criterion {} {name:<22} {verdict} [{:.2?}]", i + 1, elapsed);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
