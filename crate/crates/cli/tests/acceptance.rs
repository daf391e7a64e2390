//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

#[path = "../../core/tests/support/mod.rs"]
mod support;

use std::process::Command;
use std::time::{Duration, Instant};

use ringlab_core::classifier::{is_npure, is_pure, ring_class, NPureMethod};
use ringlab_core::report::ReportDocument;
use ringlab_core::ring::iso::find_isomorphism;
use ringlab_core::spectra::{ker_pi, localize_at, pure_spectrum, spectrum};
use ringlab_core::{
    check_ring, default_catalog, verify_catalog, Bounds, Elem, Execution, FiniteRing, Ideal,
    Outcome, Property, ReportOptions, RingContext, RingMethod, RingSpec,
};
use support::naive_gb::{example_ideal, naive_buchberger, to_text, Ord3};
use support::raw::Raw;

const BIN: &str = env!("CARGO_BIN_EXE_ringlab");
const CRITERION_1_LIMIT: Duration = Duration::from_secs(300);
const CRITERION_6_LIMIT: Duration = Duration::from_secs(30);
const CRITERION_9_LIMIT: Duration = Duration::from_secs(1);

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

fn rings(max_order: usize) -> Vec<FiniteRing> {
    default_catalog(max_order)
        .entries
        .iter()
        .map(|s| s.build().expect("catalog entry builds"))
        .collect()
}

fn rings_up_to(max_order: usize) -> Vec<FiniteRing> {
    rings(max_order)
        .into_iter()
        .filter(|r| r.order() <= max_order)
        .collect()
}

fn def(ctx: &RingContext, p: Property) -> bool {
    match ring_class(ctx, p, RingMethod::Def).expect("within element bound") {
        Outcome::Decided(v) => v.value,
        Outcome::Skipped { reason, .. } => panic!("DEF skipped: {reason}"),
    }
}

fn sets(ideals: &[Ideal]) -> Vec<Vec<u32>> {
    let mut v: Vec<Vec<u32>> = ideals.iter().map(Ideal::to_vec).collect();
    v.sort();
    v
}

fn method_agreement(doc: &ReportDocument, elapsed: Duration) -> Verdict {
    let expected = [
        ("von_neumann_regular", 7),
        ("zero_dimensional", 7),
        ("mp_ring", 5),
        ("mid_ring", 10),
        ("pp_ring", 3),
    ];
    let mut disagreements = 0;
    let mut shape_errors = Vec::new();
    let mut ideals = 0;
    for rep in &doc.rings {
        for entry in rep.properties.values() {
            disagreements += usize::from(!entry.consistent);
        }
        for (name, count) in expected {
            if rep.properties[name].methods.len() != count {
                shape_errors.push(format!("{} {name}", rep.spec));
            }
        }
        for e in &rep.ideals {
            ideals += 1;
            disagreements += usize::from(!e.consistent);
            if e.npure.len() != 8 {
                shape_errors.push(format!("{} npure methods", rep.spec));
            }
        }
    }
    let build_failures = doc
        .failures
        .iter()
        .filter(|f| f.check == "build" || f.check == "classify")
        .count();
    verdict(
        disagreements == 0 && shape_errors.is_empty() && build_failures == 0 && elapsed <= CRITERION_1_LIMIT,
        format!(
            "{} rings, {ideals} ideals, {disagreements} disagreements, {} skipped, {:.1}s (limit {}s){}",
            doc.rings.len(),
            doc.aggregate.skipped,
            elapsed.as_secs_f64(),
            CRITERION_1_LIMIT.as_secs(),
            if shape_errors.is_empty() { String::new() } else { format!(", wrong method counts: {shape_errors:?}") }
        ),
    )
}

fn radical_formula() -> Verdict {
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for r in rings_up_to(16) {
        let raw = Raw::new(&r);
        let ctx = RingContext::new(&r, Bounds::default());
        for ideal in r.all_ideals(64).unwrap() {
            let i = ideal.to_vec();
            let equal = raw.formula_set(&i) == raw.radical(&i);
            let npure = is_npure(&ctx, &ideal, NPureMethod::Def).value;
            let formula = is_npure(&ctx, &ideal, NPureMethod::RadicalFormula).value;
            checked += 1;
            if equal != npure || formula != npure {
                mismatches.push(format!("{} {i:?}", r.spec()));
            }
        }
    }
    verdict(
        mismatches.is_empty(),
        format!(
            "{checked} ideals, {} mismatches {mismatches:?}",
            mismatches.len()
        ),
    )
}

fn npure_closure() -> Verdict {
    let mut pairs = 0;
    let mut failures = Vec::new();
    for r in rings_up_to(16) {
        let raw = Raw::new(&r);
        let ctx = RingContext::new(&r, Bounds::default());
        let npure: Vec<Ideal> = r
            .all_ideals(64)
            .unwrap()
            .into_iter()
            .filter(|i| is_npure(&ctx, i, NPureMethod::Def).value)
            .collect();
        for (k, i) in npure.iter().enumerate() {
            for j in &npure[k..] {
                pairs += 1;
                for (op, ij) in [
                    ("sum", r.sum(i, j)),
                    ("product", r.product(i, j)),
                    ("intersection", r.intersection(i, j)),
                ] {
                    if !is_npure(&ctx, &ij, NPureMethod::Def).value || !raw.npure(&ij.to_vec()) {
                        failures.push(format!(
                            "{} {op} {:?} {:?}",
                            r.spec(),
                            i.to_vec(),
                            j.to_vec()
                        ));
                    }
                }
            }
        }
    }
    verdict(
        failures.is_empty(),
        format!("{pairs} pairs, {} failures {failures:?}", failures.len()),
    )
}

fn reduced_iff_npure_is_pure() -> Verdict {
    let mut failures = Vec::new();
    let all = rings(24);
    for r in &all {
        let ctx = RingContext::new(r, Bounds::default());
        let lattice = r.all_ideals(64).unwrap();
        let same = lattice
            .iter()
            .all(|i| is_pure(&ctx, i).value == is_npure(&ctx, i, NPureMethod::Def).value);
        if same != def(&ctx, Property::Reduced) {
            failures.push(r.spec().to_string());
        }
    }
    let z6 = RingSpec::Zmod(6).build().unwrap();
    let c6 = RingContext::new(&z6, Bounds::default());
    let z6_ok = def(&c6, Property::Reduced)
        && z6
            .all_ideals(64)
            .unwrap()
            .iter()
            .all(|i| is_pure(&c6, i).value && is_npure(&c6, i, NPureMethod::Def).value);
    let z4 = RingSpec::Zmod(4).build().unwrap();
    let c4 = RingContext::new(&z4, Bounds::default());
    let two = z4.principal_ideal(Elem(2));
    let z4_ok = !def(&c4, Property::Reduced)
        && is_npure(&c4, &two, NPureMethod::Def).value
        && !is_pure(&c4, &two).value;
    verdict(
        failures.is_empty() && z6_ok && z4_ok,
        format!(
            "{} rings, {} failures {failures:?}; Z/6 all ideals pure and N-pure: {z6_ok}; Z/4 (2) N-pure not pure: {z4_ok}",
            all.len(),
            failures.len()
        ),
    )
}

fn spec_equals_spp() -> Verdict {
    let mut failures = Vec::new();
    let mut vnr = 0;
    let all = rings_up_to(24);
    for r in &all {
        let ctx = RingContext::new(r, Bounds::default());
        let equal = sets(&spectrum(r, 64).primes) == sets(&pure_spectrum(r, 64).unwrap().members);
        let regular = def(&ctx, Property::VonNeumannRegular);
        vnr += usize::from(regular);
        if equal != regular {
            failures.push(r.spec().to_string());
        }
    }
    let z4 = RingSpec::Zmod(4).build().unwrap();
    let z6 = RingSpec::Zmod(6).build().unwrap();
    let spp4 = sets(&pure_spectrum(&z4, 64).unwrap().members);
    let spec4 = sets(&spectrum(&z4, 64).primes);
    let spp6 = sets(&pure_spectrum(&z6, 64).unwrap().members);
    let spec6 = sets(&spectrum(&z6, 64).primes);
    let values = spp4 == [vec![0], vec![0, 2]]
        && spec4 == [vec![0, 2]]
        && spp6 == [vec![0, 2, 4], vec![0, 3]]
        && spec6 == spp6;
    verdict(
        failures.is_empty() && values,
        format!(
            "{} rings ({vnr} regular), {} failures {failures:?}; Spp(Z/4) = {spp4:?}, Spec(Z/4) = {spec4:?}, Spp(Z/6) = {spp6:?} = Spec(Z/6): {}",
            all.len(),
            failures.len(),
            spec6 == spp6
        ),
    )
}

fn squarefree(n: u64) -> bool {
    (2..=n)
        .take_while(|d| d * d <= n)
        .all(|d| !n.is_multiple_of(d * d))
}

fn zmod_facts() -> Verdict {
    let start = Instant::now();
    let mut not_mid = Vec::new();
    let opts = ReportOptions {
        properties: vec![Property::MidRing],
        ideals: false,
        theorems: false,
    };
    for n in 2..=200u64 {
        let r = RingSpec::Zmod(n).build().unwrap();
        let rep = check_ring(&r, Bounds::default(), &opts).unwrap();
        let mid = &rep.properties["mid_ring"];
        if mid.value != Some(true) || !mid.consistent {
            not_mid.push(n);
        }
    }
    let elapsed = start.elapsed();
    let mut pf_exceptions = Vec::new();
    for n in 2..=100u64 {
        let r = RingSpec::Zmod(n).build().unwrap();
        let ctx = RingContext::new(&r, Bounds::default());
        if def(&ctx, Property::PfRing) != squarefree(n) {
            pf_exceptions.push(n);
        }
    }
    verdict(
        not_mid.is_empty() && pf_exceptions.is_empty() && elapsed <= CRITERION_6_LIMIT,
        format!(
            "mid for Z/2..Z/200 in {:.1}s (limit {}s), exceptions {not_mid:?}; pf iff squarefree for n <= 100, exceptions {pf_exceptions:?}",
            elapsed.as_secs_f64(),
            CRITERION_6_LIMIT.as_secs()
        ),
    )
}

fn implication_chain(doc: &ReportDocument) -> Verdict {
    let mut failures = Vec::new();
    let mut ideals = 0;
    for rep in &doc.rings {
        let v = |p: &str| rep.properties[p].value;
        let mid = v("mid_ring");
        for (from, to, to_value) in [
            ("pf_ring", "mid_ring", mid),
            ("gpf_ring", "mid_ring", mid),
            ("primary_ring", "mid_ring", mid),
            ("mid_ring", "mp_ring", v("mp_ring")),
        ] {
            if v(from) == Some(true) && to_value != Some(true) {
                failures.push(format!("{}: {from} without {to}", rep.spec));
            }
        }
        for e in &rep.ideals {
            ideals += 1;
            if e.pure.value && !e.npure.iter().all(|n| n.value) {
                failures.push(format!(
                    "{}: pure ideal {:?} not N-pure",
                    rep.spec,
                    e.ideal.to_vec()
                ));
            }
        }
    }
    verdict(
        failures.is_empty(),
        format!(
            "{} rings, {ideals} ideals, {} failures {failures:?}",
            doc.rings.len(),
            failures.len()
        ),
    )
}

fn localization_coherence() -> Verdict {
    let mut failures = Vec::new();
    let mut maximal = 0;
    let all = rings(48);
    for r in &all {
        for m in spectrum(r, 64).maximal {
            maximal += 1;
            let name = format!("{} at {:?}", r.spec(), m.to_vec());
            let Ok(local) = localize_at(r, &m) else {
                failures.push(format!("{name}: localization failed"));
                continue;
            };
            let raw = Raw::new(&local);
            let non_units: Vec<u32> = (0..raw.n as u32)
                .filter(|&a| (0..raw.n as u32).all(|b| raw.mul(a, b) != raw.one))
                .collect();
            let is_local = non_units.iter().all(|&a| {
                non_units
                    .iter()
                    .all(|&b| non_units.contains(&raw.add(a, b)))
            });
            let kernel = ker_pi(r, &m).unwrap();
            let rad_ok = r.radical(&kernel) == m;
            let ctx = RingContext::new(&local, Bounds::default());
            let primary = def(&ctx, Property::PrimaryRing);
            if !(is_local && rad_ok && primary) {
                failures.push(format!(
                    "{name}: local {is_local}, radical {rad_ok}, primary {primary}"
                ));
            }
        }
    }
    let z12 = RingSpec::Zmod(12).build().unwrap();
    let two = z12.principal_ideal(Elem(2));
    let k = ker_pi(&z12, &two).unwrap().to_vec();
    let iso = localize_at(&z12, &two)
        .ok()
        .and_then(|l| find_isomorphism(&l, &RingSpec::Zmod(4).build().unwrap()))
        .is_some();
    let z12_ok = k == [0, 4, 8] && iso;
    verdict(
        failures.is_empty() && z12_ok,
        format!(
            "{} rings, {maximal} maximal ideals, {} failures {failures:?}; Ker pi_(2) in Z/12 = {k:?}, R_(2) iso Z/4: {iso}",
            all.len(),
            failures.len()
        ),
    )
}

fn example1() -> Verdict {
    let mut notes = Vec::new();
    let mut pass = true;
    for p in [2u64, 3, 5] {
        let mut oracle: Vec<String> = naive_buchberger(Ord3::Lex, &example_ideal(p), p)
            .iter()
            .map(|f| to_text(Ord3::Lex, f))
            .collect();
        oracle.sort();
        let expected = format!("lex basis (x > y > z): {{{}}}", oracle.join(", "));
        let start = Instant::now();
        let out = Command::new(BIN)
            .args(["example1", "-p", &p.to_string()])
            .output()
            .expect("binary runs");
        let elapsed = start.elapsed();
        let stdout = String::from_utf8_lossy(&out.stdout);
        let ok = out.status.code() == Some(0)
            && stdout.contains("4/4 clauses pass")
            && stdout.contains(&expected)
            && oracle == ["x", "y*z", "z^2"]
            && elapsed < CRITERION_9_LIMIT;
        pass &= ok;
        notes.push(format!(
            "p={p}: {} in {:.0}ms",
            if ok { "4/4" } else { "failed" },
            elapsed.as_secs_f64() * 1e3
        ));
    }
    verdict(
        pass,
        format!(
            "{}; lex basis {{x, y*z, z^2}} matches the naive oracle",
            notes.join(", ")
        ),
    )
}

fn determinism() -> Verdict {
    let dir = tempfile::tempdir().expect("temp dir");
    let run = |name: &str| {
        let path = dir.path().join(name);
        let status = Command::new(BIN)
            .args(["verify-catalog", "--json"])
            .arg(&path)
            .output()
            .expect("binary runs")
            .status;
        (status.code(), std::fs::read(&path).unwrap_or_default())
    };
    let (s1, a) = run("a.json");
    let (s2, b) = run("b.json");
    verdict(
        s1 == Some(0) && s2 == Some(0) && !a.is_empty() && a == b,
        format!(
            "two verify-catalog --json runs: {} and {} bytes, identical: {}",
            a.len(),
            b.len(),
            a == b
        ),
    )
}

fn main() {
    let bounds = Bounds {
        lattice_order: 24,
        ..Bounds::default()
    };
    let start = Instant::now();
    let doc = verify_catalog(&default_catalog(48), bounds, Execution::default());
    let elapsed = start.elapsed();

    let results: Vec<(&str, Verdict)> = vec![
        (
            "method agreement over default_catalog(48), lattice bound 24",
            method_agreement(&doc, elapsed),
        ),
        (
            "radical formula equals radical exactly on N-pure ideals",
            radical_formula(),
        ),
        (
            "N-pure ideals closed under sum, product, intersection",
            npure_closure(),
        ),
        (
            "reduced iff N-pure ideals are pure ideals",
            reduced_iff_npure_is_pure(),
        ),
        ("Spec = Spp exactly on regular rings", spec_equals_spp()),
        (
            "Z/n mid for n <= 200; pf iff squarefree for n <= 100",
            zmod_facts(),
        ),
        ("implication chain on the catalog", implication_chain(&doc)),
        ("localization coherence", localization_coherence()),
        ("example1 certificate for p = 2, 3, 5", example1()),
        ("verify-catalog JSON determinism", determinism()),
    ];

    let mut failed = 0;
    for (k, (name, v)) in results.iter().enumerate() {
        println!(
            "criterion {:>2} [{}] {name}: {}",
            k + 1,
            if v.pass { "PASS" } else { "FAIL" },
            v.detail
        );
        failed += usize::from(!v.pass);
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        results.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
