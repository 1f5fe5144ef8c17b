//! The acceptance suite. Runs every criterion, prints one PASS/FAIL line per
//! criterion and exits non-zero if any of them fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::{Duration, Instant};

use gradus::arrangement::{
    geometric_sign_oracle, ideal_count_formula, partition_01, sub_arrangement_01, upper_ideal_partition_check,
};
use gradus::ideals::WeightPoset;
use gradus::verify::{self, Options, Scope, Suite, VerifyReport};
use gradus::weyl::{kostant_macdonald, GradedWeyl};
use gradus::{CartanType, Family, Grading, GradingSpec, RootSystem};
use num_bigint::BigInt;
use num_rational::BigRational;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, budget: Duration) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < budget, || format!("took {took:.1?}, budget {budget:?}"))
}

fn types(names: &[&str]) -> Vec<CartanType> {
    names.iter().map(|t| t.parse().unwrap()).collect()
}

fn all_passed(rep: &VerifyReport) -> Result<(u64, usize), String> {
    let mut checks = 0;
    for s in &rep.suites {
        if !s.passed() {
            let first = s.failures.first().map(|f| format!("{}: {}", f.subject, f.detail)).unwrap_or_default();
            return Err(format!("suite {} failed {} of {} checks, first: {first}", s.suite, s.failed, s.checks));
        }
        ensure(s.checks > 0, || format!("suite {} ran no checks", s.suite))?;
        checks += s.checks;
    }
    Ok((checks, rep.gradings))
}

const THEOREM_SUITES: [Suite; 9] = [
    Suite::Closure,
    Suite::Interval,
    Suite::Characterization,
    Suite::Involution,
    Suite::Extreme,
    Suite::Eta,
    Suite::Regions,
    Suite::Ideals,
    Suite::SignOracle,
];

fn theorem_suite(names: &[&str], budget: Duration) -> Outcome {
    let start = Instant::now();
    let ts = types(names);
    let scope = Scope::of_types(&ts).map_err(|e| e.to_string())?;
    let expected: usize = ts
        .iter()
        .map(|&t| {
            let rs = Arc::new(RootSystem::build(t));
            let es = Grading::extra_special(rs.clone()).unwrap();
            let standard = (1usize << t.rank()) - 1;
            standard + usize::from(!es.is_standard())
        })
        .sum();
    ensure(scope.gradings.len() == expected, || format!("{} gradings, expected {expected}", scope.gradings.len()))?;
    let rep = verify::run(&scope, &THEOREM_SUITES, Options::default());
    let (checks, gradings) = all_passed(&rep)?;
    within(start, budget)?;
    Ok(format!("{} types, {gradings} gradings, {checks} checks, {:.1?}", ts.len(), start.elapsed()))
}

fn criterion_1() -> Outcome {
    theorem_suite(&["A1", "A2", "A3", "B2", "B3", "C3", "G2"], Duration::from_secs(10))
}

fn criterion_2() -> Outcome {
    theorem_suite(&["A4", "B4", "C4", "D4", "F4"], Duration::from_secs(300))
}

/// Every mark vector in `{0, 1, 2}^n` except zero.
fn small_mark_vectors(n: usize) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    for code in 1..3usize.pow(n as u32) {
        out.push((0..n).map(|i| (code / 3usize.pow(i as u32) % 3) as i32).collect());
    }
    out
}

fn criterion_3() -> Outcome {
    let mut gradings = 0;
    let mut scanned = 0;
    for t in CartanType::all_up_to(4) {
        if !t.family().is_classical_or_g2() {
            continue;
        }
        let rs = Arc::new(RootSystem::build(t));
        let mut all: Vec<Grading> = small_mark_vectors(t.rank())
            .into_iter()
            .map(|m| Grading::new(rs.clone(), m).unwrap())
            .collect();
        let es = Grading::extra_special(rs.clone()).unwrap();
        if !all.iter().any(|g| g.marks() == es.marks()) {
            all.push(es);
        }
        for g in all {
            let count = WeightPoset::possibly_empty(&g, 1).map_err(|e| e.to_string())?.count_lower_ideals();
            let formula = ideal_count_formula(&g);
            ensure(formula == BigRational::from_integer(BigInt::from(count)), || {
                format!("{}: height product {formula}, {count} ideals", GradingSpec::of(&g))
            })?;
            let roots = common::coords_of(&rs, g.slice(1));
            if roots.len() <= 20 {
                let oracle = common::count_lower_ideals(&roots);
                ensure(oracle == count, || format!("{}: subset scan {oracle}, poset {count}", GradingSpec::of(&g)))?;
                scanned += 1;
            }
            gradings += 1;
        }
    }
    let rep = verify::run(&Scope::up_to_rank(4).map_err(|e| e.to_string())?, &[Suite::Formula], Options::default());
    all_passed(&rep)?;
    Ok(format!("{gradings} gradings with marks in {{0,1,2}}, {scanned} also by subset scan"))
}

fn criterion_4() -> Outcome {
    let mut seen = Vec::new();
    for t in CartanType::all_up_to(4) {
        let rs = Arc::new(RootSystem::build(t));
        let g = Grading::extra_special(rs.clone()).map_err(|e| e.to_string())?;
        let oracle = common::count_lower_ideals(&common::coords_of(&rs, g.slice(1)));
        let closed = (rs.long_simple().len() * (rs.coxeter_number() - 1)) as u64;
        let ours = WeightPoset::possibly_empty(&g, 1).map_err(|e| e.to_string())?.count_lower_ideals();
        ensure(oracle == closed && ours == closed, || format!("{t}: scan {oracle}, poset {ours}, #Pi_l (h-1) = {closed}"))?;
        seen.push((t.to_string(), oracle));
    }
    for (t, want) in [("B2", 3), ("G2", 5), ("D4", 20), ("F4", 22)] {
        let got = seen.iter().find(|(s, _)| s == t).map(|p| p.1);
        ensure(got == Some(want), || format!("{t}: {got:?} ideals, expected {want}"))?;
    }
    let rep = verify::run(&Scope::up_to_rank(4).map_err(|e| e.to_string())?, &[Suite::ExtraSpecial], Options::default());
    let (checks, _) = all_passed(&rep)?;
    Ok(format!("{} types, {checks} extra-special checks", seen.len()))
}

fn criterion_5() -> Outcome {
    let rep = verify::run(&Scope::up_to_rank(4).map_err(|e| e.to_string())?, &[Suite::Abelian], Options::default());
    let (checks, _) = all_passed(&rep)?;
    let rs = Arc::new(RootSystem::build("A3".parse().unwrap()));
    let g = Grading::standard(rs.clone(), &[1]).map_err(|e| e.to_string())?;
    ensure(g.is_abelian(), || "A3 middle node is not abelian".into())?;
    let gw = GradedWeyl::new(g.clone()).map_err(|e| e.to_string())?;
    let ideals = gw.poset().count_lower_ideals();
    let oracle = common::count_lower_ideals(&common::coords_of(&rs, g.slice(1)));
    let want = common::binomial(4, 2);
    ensure(ideals == want && oracle == want && gw.coset_table().len() as u64 == want, || {
        format!("A3 middle node: {ideals} ideals, scan {oracle}, expected {want}")
    })?;
    Ok(format!("{checks} abelian checks, A3 middle node has {want} ideals"))
}

fn criterion_6() -> Outcome {
    for t in CartanType::all_up_to(4) {
        let rs = RootSystem::build(t);
        let oracle = common::length_polynomial(common::weyl_group(&rs).into_values());
        let km = kostant_macdonald(&rs, rs.all_positive()).map_err(|e| e.to_string())?;
        ensure(km.coeffs() == &oracle[..], || format!("{t}: product {km}, matrix closure {oracle:?}"))?;
    }
    let rep = verify::run(&Scope::up_to_rank(4).map_err(|e| e.to_string())?, &[Suite::Km], Options::default());
    let (checks, _) = all_passed(&rep)?;
    Ok(format!("{checks} identities, each W(t) also checked against matrix closure"))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let rep = verify::run(&Scope::up_to_rank(4).map_err(|e| e.to_string())?, &[Suite::Charpoly], Options::default());
    let (checks, gradings) = all_passed(&rep)?;
    within(start, Duration::from_secs(120))?;
    Ok(format!("{checks} checks over {gradings} gradings, {:.1?}", start.elapsed()))
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let mut ts = CartanType::all_up_to(4);
    ts.push("A5".parse().unwrap());
    let mut total = 0;
    for &t in &ts {
        let rs = RootSystem::build(t);
        let rep = upper_ideal_partition_check(&rs);
        ensure(rep.violations.is_empty(), || format!("{t}: {} violations, first {:?}", rep.violations.len(), rep.violations[0]))?;
        if t.family() == Family::A {
            let want = common::catalan(t.rank() as u64 + 1);
            ensure(rep.upper_ideals as u64 == want, || format!("{t}: {} upper ideals, Catalan {want}", rep.upper_ideals))?;
        }
        total += rep.upper_ideals;
    }
    let a3 = upper_ideal_partition_check(&RootSystem::build("A3".parse().unwrap())).upper_ideals;
    ensure(a3 == 14, || format!("A3 has {a3} upper ideals"))?;
    within(start, Duration::from_secs(60))?;
    Ok(format!("{total} upper ideals over {} types, A3 has 14, {:.1?}", ts.len(), start.elapsed()))
}

fn criterion_9() -> Outcome {
    const STATED: u64 = 252;
    let start = Instant::now();
    let g = "E7:std=2".parse::<GradingSpec>().unwrap().build().map_err(|e| e.to_string())?;
    let rs = g.root_system();
    let pi0 = g.pi0();
    let levi = g.delta0_positive().len();
    // six connected nodes with 21 positive roots is A6
    ensure(pi0.len() == 6 && levi == 21, || format!("Delta(0) has {} simple and {levi} positive roots", pi0.len()))?;
    ensure(g.slice(1).len() == 35, || format!("#Delta(1) = {}", g.slice(1).len()))?;
    let p = partition_01(&g);
    ensure(p.counts == [7, 6, 6, 6, 6, 5, 5, 4, 4, 3, 2, 1, 1], || format!("P(0,1) = {:?}", p.counts))?;
    ensure(p.dual == [13, 11, 10, 9, 7, 5, 1], || format!("dual = {:?}", p.dual))?;

    let gw = GradedWeyl::new(g.clone()).map_err(|e| e.to_string())?;
    let enumerated = gw.poset().count_lower_ideals();
    let formula = ideal_count_formula(&g);
    // regions of A(0,1) inside C(0): distinct sign vectors on Delta(1) among the chambers w(C), w in W0
    let table = gw.coset_table();
    let arr = sub_arrangement_01(&g);
    let level1: Vec<usize> = arr.roots.iter().enumerate().filter(|(_, k)| g.level(*k) == 1).map(|(i, _)| i).collect();
    let mut regions = BTreeSet::new();
    for e in &table.entries {
        let signs = geometric_sign_oracle(rs, &arr, &e.element).map_err(|e| e.to_string())?;
        regions.insert(level1.iter().map(|&i| signs[i]).collect::<Vec<i8>>());
    }
    let regions = regions.len() as u64;
    let detail = format!(
        "enumerated {enumerated}, regions {regions}, height product {formula}, stated {STATED}{}",
        if enumerated == STATED { "" } else { " (stated figure disagrees with enumeration)" }
    );
    ensure(BigRational::from_integer(BigInt::from(enumerated)) == formula && regions == enumerated, || detail.clone())?;
    within(start, Duration::from_secs(300))?;
    Ok(detail)
}

fn criterion_10() -> Outcome {
    let runs: [&[&str]; 7] = [
        &["show", "F4:0,1,0,0"],
        &["ideals", "D4:es", "--list", "--poly"],
        &["weyl", "B3:0,1,1", "--min", "--max"],
        &["weyl", "A3:0,1,0", "--eta"],
        &["element", "B2:es", "--ideal", "a2"],
        &["arrangement", "C3:1,0,1", "--charpoly"],
        &["verify", "--all", "--max-rank", "3"],
    ];
    for args in runs {
        let go = || {
            Command::new(env!("CARGO_BIN_EXE_gradus"))
                .args(args)
                .arg("--json")
                .output()
                .map_err(|e| e.to_string())
        };
        let (a, b) = (go()?, go()?);
        ensure(a.status.success(), || format!("{args:?} exited with {:?}", a.status.code()))?;
        serde_json::from_slice::<serde_json::Value>(&a.stdout).map_err(|e| format!("{args:?}: {e}"))?;
        ensure(a.stdout == b.stdout, || format!("{args:?} differs between runs"))?;
    }
    Ok(format!("{} commands byte-identical across two runs", runs.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("structural theorems, rank <= 3", criterion_1),
        ("structural theorems, rank 4", criterion_2),
        ("ideal count equals the height product", criterion_3),
        ("extra-special count #Pi_l (h-1)", criterion_4),
        ("abelian identities", criterion_5),
        ("Kostant-Macdonald identity", criterion_6),
        ("characteristic polynomials", criterion_7),
        ("upper ideals give partitions", criterion_8),
        ("E7 example", criterion_9),
        ("deterministic JSON", criterion_10),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panicked".into()))
        });
        match outcome {
            Ok(detail) => println!("[PASS] criterion {}: {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] criterion {}: {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
