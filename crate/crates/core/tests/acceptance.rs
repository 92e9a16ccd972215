//! One PASS/FAIL line per acceptance criterion. Parts that cannot hold as
//! stated are printed as FAIL and pinned separately in ignored tests; the
//! main test asserts everything else.

use std::time::{Duration, Instant};

use smallchar::chevalley::Chevalley;
use smallchar::claims::{classify, run_claim, Options};
use smallchar::octonion::appendix::{
    check_displays_6, check_displays_7, stabilizer_lie, Config, DisplayCheck, Height, Source,
};
use smallchar::octonion::composition_identity;
use smallchar::psub::{intermediate_p_subalgebras, lie_maximal_parabolic, plus_short, DEFAULT_CAP};
use smallchar::report::Report;

struct Outcome {
    /// Everything the criterion states.
    full: bool,
    /// The part that is attainable; asserted by the test.
    attainable: bool,
    note: String,
}

fn claims_ok(ids: &[&str]) -> (bool, String) {
    let opts = Options::default();
    let mut failed = vec![];
    let mut n = 0;
    for id in ids {
        let reports: Vec<Report> = run_claim(id, &opts).unwrap_or_else(|e| panic!("{id}: {e}"));
        n += reports.len();
        failed.extend(reports.into_iter().filter(|r| !r.ok()).map(|r| r.claim_id));
    }
    (failed.is_empty(), format!("{n} reports, failed: {failed:?}"))
}

fn from_claims(ids: &[&str]) -> Outcome {
    let (ok, note) = claims_ok(ids);
    Outcome { full: ok, attainable: ok, note }
}

fn g2_alpha2_p2_has_one() -> bool {
    let ch = Chevalley::of("G2");
    let low = lie_maximal_parabolic(&ch, 1, 2);
    intermediate_p_subalgebras(&ch, &low, DEFAULT_CAP).unwrap() == [plus_short(&ch, &low)]
}

fn criterion_2() -> Outcome {
    let (hl, _) = claims_ok(&["cor-hl"]);
    let ch = Chevalley::of("G2");
    let p3 = (0..2).all(|a| {
        let low = lie_maximal_parabolic(&ch, a, 3);
        intermediate_p_subalgebras(&ch, &low, DEFAULT_CAP).unwrap() == [plus_short(&ch, &low)]
    });
    let a2 = classify("G2".parse().unwrap(), 1, 2, DEFAULT_CAP).unwrap();
    let b = g2_alpha2_p2_has_one();
    Outcome {
        full: hl && p3 && b,
        attainable: hl && p3,
        note: format!("h and l exact: {hl}; p=3 plus short: {p3}; p=2 over P^a2 found {}", a2.witness["shape"]),
    }
}

fn printed_displays_ok() -> (bool, Vec<String>) {
    let mut bad = vec![];
    let mut all: Vec<DisplayCheck> = vec![];
    all.extend(check_displays_7(Source::Printed, 0).unwrap());
    all.extend(check_displays_7(Source::Printed, 2).unwrap());
    all.extend(check_displays_6(Source::Printed).unwrap());
    for c in &all {
        if !c.ok() {
            bad.push(format!("{}-dim{}-p{}", c.label, c.dim, c.modulus));
        }
    }
    (bad.is_empty(), bad)
}

fn criterion_9() -> Outcome {
    let d6 = check_displays_6(Source::Corrected).unwrap();
    let d7: Vec<_> = [0, 2].iter().flat_map(|&p| check_displays_7(Source::Corrected, p).unwrap()).collect();
    let corrected = d6.len() == 12 && d7.len() == 20 && d6.iter().chain(&d7).all(DisplayCheck::ok);
    let comp = composition_identity(0);
    let (printed, bad) = printed_displays_ok();
    Outcome {
        full: printed && comp,
        attainable: corrected && comp,
        note: format!("composition over Z: {comp}; corrected displays: {corrected}; printed failures: {bad:?}"),
    }
}

fn criterion_10() -> Outcome {
    let dims: Vec<usize> = Config::ALL.iter().map(|&c| stabilizer_lie(c).unwrap().lie.dim()).collect();
    let r = run_claim("stabilizers", &Options::default()).unwrap();
    let by = |name: &str| r.iter().find(|x| x.claim_id.ends_with(name)).unwrap().ok();
    let w = stabilizer_lie(Config::W6Line).unwrap();
    let heights = w.heights[&[2, 1]] == Height::Frobenius(1);
    let (quadric, _) = claims_ok(&["quadric"]);
    let attainable = by("V7") && by("W6") && by("L3W") && heights && quadric;
    Outcome {
        full: attainable && by("L3V"),
        attainable,
        note: format!("dims V7/W6/L3V/L3W = {dims:?}; W6 height at 2a1+a2 is Frobenius 1: {heights}; quadric: {quadric}"),
    }
}

#[test]
fn acceptance() {
    type Check = fn() -> Outcome;
    let criteria: [(u32, &str, u64, Check); 11] = [
        (1, "structure constants", 10, || from_claims(&["lemma-chevalley"])),
        (2, "G2 exception", 5, criterion_2),
        (3, "rank-1 sweep", 300, || from_claims(&["prop-lien", "prop-cnpm", "lien-2", "lien-3", "lien-6"])),
        (4, "n_G and simplicity", 600, || from_claims(&["712-conrad", "lie-simple"])),
        (5, "factorization", 10, || from_claims(&["factorisation"])),
        (6, "phi arithmetic", 30, || from_claims(&["alphabeta", "rank2"])),
        (7, "flag tables", 60, || from_claims(&["dim5"])),
        (8, "degree arithmetic", 1, || from_claims(&["h-and-l"])),
        (9, "octonion oracle", 30, criterion_9),
        (10, "stabilizers", 30, criterion_10),
        (11, "cross-validation", 30, || from_claims(&["n-so"])),
    ];
    let mut unmet = vec![];
    for (n, name, budget, check) in criteria {
        let t = Instant::now();
        let o = check();
        let el = t.elapsed();
        let in_time = el <= Duration::from_secs(budget);
        let status = if o.full && in_time { "PASS" } else { "FAIL" };
        println!("criterion {n:>2} {name}: {status} ({} ms, budget {budget} s) {}", el.as_millis(), o.note);
        if !(o.attainable && in_time) {
            unmet.push(n);
        }
    }
    assert!(unmet.is_empty(), "attainable parts failed for criteria {unmet:?}");
}

#[test]
#[ignore = "the classification leaves nothing strictly between Lie P^a2 and Lie G for G2 at p = 2"]
fn g2_alpha2_at_p2_has_exactly_one_intermediate() {
    assert!(g2_alpha2_p2_has_one());
}

#[test]
#[ignore = "five printed dim-7 matrices over Z, one mod 2 and three dim-6 matrices contain misprints"]
fn printed_appendix_matrices_are_automorphisms() {
    let (ok, bad) = printed_displays_ok();
    assert!(ok, "{bad:?}");
}

#[test]
#[ignore = "the stabilizer of the Lambda^3 V configuration is Lie P^a1 (dim 9); the W-side configuration gives l"]
fn lambda3v_stabilizer_is_l() {
    let r = run_claim("stabilizers", &Options::default()).unwrap();
    assert!(r.iter().all(Report::ok));
}
