//! Exhaustive checks of the structural identities over sweeps of gradings.
//! Every check records a pass or a failure with a counterexample.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::arrangement::{
    char_poly, conjecture_check, coxeter_arrangement, geometric_sign_oracle, height_product,
    inversion_signs, partition_01, regions_in_dominant_chamber, sub_arrangement_01,
    upper_ideal_partition_check, zaslavsky_regions, DEFAULT_CHARPOLY_RANK,
};
use crate::bits::Mask;
use crate::error::{Error, Result};
use crate::grading::{Grading, GradingSpec};
use crate::ideals::{Direction, Poset, WeightPoset};
use crate::poly::Poly;
use crate::rootsys::{CartanType, Family, RootSystem};
use crate::weyl::{
    enumerate_w, is_biconvex, kostant_macdonald, length_distribution, parabolic_order, poincare,
    CosetTable, GradedWeyl, WeylElement,
};

/// Failures kept per suite; the total is still counted.
const MAX_RECORDED_FAILURES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Rootsys,
    ThreeRoots,
    Km,
    SignOracle,
    Appendix,
    Grading,
    Ideals,
    Closure,
    Interval,
    Characterization,
    Involution,
    Extreme,
    Eta,
    Regions,
    Formula,
    ExtraSpecial,
    Abelian,
    NonAbelian,
    Partition,
    Charpoly,
}

impl Suite {
    pub const ALL: [Suite; 20] = [
        Suite::Rootsys,
        Suite::ThreeRoots,
        Suite::Km,
        Suite::SignOracle,
        Suite::Appendix,
        Suite::Grading,
        Suite::Ideals,
        Suite::Closure,
        Suite::Interval,
        Suite::Characterization,
        Suite::Involution,
        Suite::Extreme,
        Suite::Eta,
        Suite::Regions,
        Suite::Formula,
        Suite::ExtraSpecial,
        Suite::Abelian,
        Suite::NonAbelian,
        Suite::Partition,
        Suite::Charpoly,
    ];

    /// The structural theorems on ideals, Weyl elements and regions.
    pub const THEOREMS: [Suite; 8] = [
        Suite::Closure,
        Suite::Interval,
        Suite::Characterization,
        Suite::Involution,
        Suite::Extreme,
        Suite::Eta,
        Suite::Regions,
        Suite::Ideals,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Rootsys => "rootsys",
            Suite::ThreeRoots => "three-roots",
            Suite::Km => "km",
            Suite::SignOracle => "sign-oracle",
            Suite::Appendix => "appendix",
            Suite::Grading => "grading",
            Suite::Ideals => "ideals",
            Suite::Closure => "closure",
            Suite::Interval => "interval",
            Suite::Characterization => "characterization",
            Suite::Involution => "involution",
            Suite::Extreme => "extreme",
            Suite::Eta => "eta",
            Suite::Regions => "regions",
            Suite::Formula => "formula",
            Suite::ExtraSpecial => "extra-special",
            Suite::Abelian => "abelian",
            Suite::NonAbelian => "nonabelian",
            Suite::Partition => "partition",
            Suite::Charpoly => "charpoly",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Suite::Rootsys => "root counts, heights, exponents, reflections, #W by the height product",
            Suite::ThreeRoots => "mu+nu1 or mu+nu2 is a root whenever nu1+nu2 and mu+nu1+nu2 are",
            Suite::Km => "Poincare polynomial of W equals the Kostant-Macdonald product; #W(0) by heights",
            Suite::SignOracle => "geometric chamber signs agree with inversion sets",
            Suite::Appendix => "heights of the complement of every upper ideal form a partition",
            Suite::Grading => "slices, additivity of levels, Pi(0), components",
            Suite::Ideals => "ideal/antichain bijections, M(1), duality, multiplicativity",
            Suite::Closure => "<I> and Delta(>=1) minus <I^c> are bi-convex; layers are ideals",
            Suite::Interval => "tau-fibers are weak-order intervals [w_min, w_max]",
            Suite::Characterization => "W0_min / W0_max by level bounds on w^-1(Pi)",
            Suite::Involution => "i(w) = w0 w w~0 and duality of ideals",
            Suite::Extreme => "max(I) and min(I^c) through w_min and w_max",
            Suite::Eta => "eta is injective with the stated images",
            Suite::Regions => "regions in the big dominant chamber match ideals",
            Suite::Formula => "ideal count equals the height product over Delta(1)",
            Suite::ExtraSpecial => "extra-special counts and characterisations",
            Suite::Abelian => "abelian identities",
            Suite::NonAbelian => "W0_min and W0_max differ outside the abelian case",
            Suite::Partition => "P(0,1) is a partition with a strict first step",
            Suite::Charpoly => "characteristic polynomials and Zaslavsky counts",
        }
    }

    fn per_type(self) -> bool {
        matches!(
            self,
            Suite::Rootsys | Suite::ThreeRoots | Suite::Km | Suite::SignOracle | Suite::Appendix | Suite::Charpoly
        )
    }

    fn per_grading(self) -> bool {
        !matches!(self, Suite::Rootsys | Suite::ThreeRoots | Suite::SignOracle | Suite::Appendix)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .iter()
            .copied()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
                Error::Parse(s.to_string(), format!("unknown suite; expected one of {}", names.join(", ")))
            })
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Failure {
    pub subject: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteOutcome {
    pub suite: String,
    pub checks: u64,
    pub failed: u64,
    pub failures: Vec<Failure>,
    /// Informational comparisons that are not asserted.
    pub notes: Vec<String>,
}

impl SuiteOutcome {
    fn new(suite: Suite) -> SuiteOutcome {
        SuiteOutcome { suite: suite.name().to_string(), checks: 0, failed: 0, failures: Vec::new(), notes: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    fn check(&mut self, subject: &str, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.fail(subject, detail());
        }
    }

    fn fail(&mut self, subject: &str, detail: String) {
        self.failed += 1;
        if self.failures.len() < MAX_RECORDED_FAILURES {
            self.failures.push(Failure { subject: subject.to_string(), detail });
        }
    }

    fn ok<T>(&mut self, subject: &str, r: Result<T>) -> Option<T> {
        self.checks += 1;
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.fail(subject, e.to_string());
                None
            }
        }
    }

    fn merge(&mut self, other: SuiteOutcome) {
        self.checks += other.checks;
        self.failed += other.failed;
        for f in other.failures {
            if self.failures.len() < MAX_RECORDED_FAILURES {
                self.failures.push(f);
            }
        }
        self.notes.extend(other.notes);
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub types: Vec<String>,
    pub gradings: usize,
    pub suites: Vec<SuiteOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.passed())
    }

    pub fn suite(&self, s: Suite) -> Option<&SuiteOutcome> {
        self.suites.iter().find(|o| o.suite == s.name())
    }
}

/// Root systems and gradings to sweep.
#[derive(Clone, Debug)]
pub struct Scope {
    pub types: Vec<Arc<RootSystem>>,
    pub gradings: Vec<Grading>,
}

impl Scope {
    /// Every standard grading and the extra-special grading of each type.
    pub fn of_types(types: &[CartanType]) -> Result<Scope> {
        let mut systems = Vec::new();
        let mut gradings = Vec::new();
        for &t in types {
            let rs = Arc::new(RootSystem::build(t));
            gradings.extend(standard_and_extra_special(&rs)?);
            systems.push(rs);
        }
        Ok(Scope { types: systems, gradings })
    }

    pub fn up_to_rank(max_rank: usize) -> Result<Scope> {
        Scope::of_types(&CartanType::all_up_to(max_rank))
    }

    pub fn single(g: Grading) -> Scope {
        Scope { types: vec![g.root_system_arc().clone()], gradings: vec![g] }
    }
}

/// All `2^n - 1` standard gradings followed by the extra-special one when it
/// is not standard.
pub fn standard_and_extra_special(rs: &Arc<RootSystem>) -> Result<Vec<Grading>> {
    let mut out = Grading::all_standard(rs);
    let es = Grading::extra_special(rs.clone())?;
    if !out.iter().any(|g| g.marks() == es.marks()) {
        out.push(es);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    /// Largest rank for point counting.
    pub charpoly_rank: usize,
    /// Largest rank for checks that walk all of `W`.
    pub full_group_rank: usize,
}

impl Default for Options {
    fn default() -> Options {
        Options { charpoly_rank: DEFAULT_CHARPOLY_RANK, full_group_rank: 4 }
    }
}

pub fn run(scope: &Scope, suites: &[Suite], opts: Options) -> VerifyReport {
    let mut outcomes: Vec<SuiteOutcome> = suites.iter().map(|&s| SuiteOutcome::new(s)).collect();

    let type_results: Vec<Vec<SuiteOutcome>> = scope
        .types
        .par_iter()
        .map(|rs| {
            suites
                .iter()
                .map(|&s| {
                    let mut o = SuiteOutcome::new(s);
                    if s.per_type() {
                        run_type_suite(s, rs, opts, &mut o);
                    }
                    o
                })
                .collect()
        })
        .collect();
    let grading_results: Vec<Vec<SuiteOutcome>> = scope
        .gradings
        .par_iter()
        .map(|g| {
            let mut per: Vec<SuiteOutcome> = suites.iter().map(|&s| SuiteOutcome::new(s)).collect();
            let subject = GradingSpec::of(g).to_string();
            match Context::new(g) {
                Ok(ctx) => {
                    for (k, &s) in suites.iter().enumerate() {
                        if s.per_grading() {
                            run_grading_suite(s, &ctx, opts, &mut per[k]);
                        }
                    }
                }
                Err(e) => per[0].fail(&subject, format!("setup failed: {e}")),
            }
            per
        })
        .collect();
    for batch in type_results.into_iter().chain(grading_results) {
        for (o, r) in outcomes.iter_mut().zip(batch) {
            o.merge(r);
        }
    }
    VerifyReport {
        types: scope.types.iter().map(|rs| rs.cartan_type().to_string()).collect(),
        gradings: scope.gradings.len(),
        suites: outcomes,
    }
}

fn classical_count(t: CartanType) -> usize {
    let n = t.rank();
    match t.family() {
        Family::A => n * (n + 1) / 2,
        Family::B | Family::C => n * n,
        Family::D => n * (n - 1),
        Family::E => [36, 63, 120][n - 6],
        Family::F => 24,
        Family::G => 6,
    }
}

fn weyl_order(rs: &RootSystem) -> u64 {
    length_distribution(rs, &[]).iter().sum()
}

fn run_type_suite(s: Suite, rs: &RootSystem, opts: Options, o: &mut SuiteOutcome) {
    let name = rs.cartan_type().to_string();
    let subject = name.as_str();
    match s {
        Suite::Rootsys => {
            let np = rs.num_positive();
            o.check(subject, np == classical_count(rs.cartan_type()), || format!("{np} positive roots"));
            let h = rs.coxeter_number();
            o.check(subject, rs.theta().height as usize == h - 1, || format!("ht(theta) = {}, h = {h}", rs.theta().height));
            o.check(subject, rs.num_long_roots() == rs.long_simple().len() * h, || {
                format!("{} long roots, #Pi_l * h = {}", rs.num_long_roots(), rs.long_simple().len() * h)
            });
            for r in rs.positive_roots().iter().filter(|r| r.height >= 2) {
                let down = (0..rs.rank()).any(|i| {
                    let mut c = r.coords.clone();
                    c[i] -= 1;
                    rs.is_root(&c) && c.iter().all(|&x| x >= 0)
                });
                o.check(subject, down, || format!("{r} has no simple root below it"));
            }
            let ex = rs.exponents();
            let ok = ex.len() == rs.rank()
                && ex.first() == Some(&1)
                && ex.last() == Some(&(h - 1))
                && ex.iter().sum::<usize>() == np;
            o.check(subject, ok, || format!("exponents {ex:?}"));
            let order = weyl_order(rs);
            let prod = height_product(rs, rs.all_positive());
            o.check(subject, prod == BigRational::from_integer(BigInt::from(order)), || {
                format!("#W = {order}, height product = {prod}")
            });
            let all: Vec<Vec<i32>> = rs
                .positive_roots()
                .iter()
                .flat_map(|r| [r.coords.clone(), r.neg().coords])
                .collect();
            for g in rs.positive_roots() {
                let sq = rs.inner_int(&g.coords, &g.coords);
                o.check(subject, sq > BigRational::from_integer(0.into()), || format!("({g},{g}) = {sq}"));
                for m in &all {
                    let m = crate::rootsys::Root::new(m.clone());
                    let img = rs.reflect(g, &m);
                    o.check(subject, rs.is_root(&img.coords), || format!("s_{g}({m}) = {img} is not a root"));
                }
                let back = rs.reflect(g, g);
                o.check(subject, back == g.neg(), || format!("s_{g}({g}) = {back}"));
            }
        }
        Suite::ThreeRoots => {
            if rs.rank() > 4 {
                o.notes.push(format!("{subject}: triple sweep skipped above rank 4"));
                return;
            }
            let all: Vec<Vec<i32>> = rs
                .positive_roots()
                .iter()
                .flat_map(|r| [r.coords.clone(), r.neg().coords])
                .collect();
            let add = |a: &[i32], b: &[i32]| -> Vec<i32> { a.iter().zip(b).map(|(x, y)| x + y).collect() };
            for n1 in &all {
                for n2 in &all {
                    let s12 = add(n1, n2);
                    if !rs.is_root(&s12) {
                        continue;
                    }
                    for mu in &all {
                        let degenerate = add(mu, n1).iter().all(|&x| x == 0) || add(mu, n2).iter().all(|&x| x == 0);
                        if !degenerate && rs.is_root(&add(mu, &s12)) {
                            o.ok(subject, rs.three_root_witness(mu, n1, n2));
                        }
                    }
                }
            }
        }
        Suite::Km => {
            let dist = length_distribution(rs, &[]);
            let p = Poly::new(dist.iter().map(|&c| c as i128).collect());
            if let Some(km) = o.ok(subject, kostant_macdonald(rs, rs.all_positive())) {
                o.check(subject, p == km, || format!("W(t) = {p}, product = {km}"));
            }
        }
        Suite::SignOracle => {
            if rs.rank() > opts.full_group_rank {
                o.notes.push(format!("{subject}: full-group sign sweep skipped above rank {}", opts.full_group_rank));
                return;
            }
            let arr = coxeter_arrangement(rs);
            if let Some(ws) = o.ok(subject, enumerate_w(rs, opts.full_group_rank)) {
                for w in &ws {
                    if let Some(geo) = o.ok(subject, geometric_sign_oracle(rs, &arr, w)) {
                        let alg = inversion_signs(rs, &arr, w);
                        o.check(subject, geo == alg, || format!("{}: geometric {geo:?}, inversions {alg:?}", w.word_string(rs)));
                    }
                }
            }
        }
        Suite::Appendix => {
            let rep = upper_ideal_partition_check(rs);
            o.checks += rep.upper_ideals as u64;
            for (lower, counts) in rep.violations {
                o.fail(subject, format!("complement {lower:?} has height counts {counts:?}"));
            }
            o.notes.push(format!("{subject}: {} upper ideals", rep.upper_ideals));
        }
        Suite::Charpoly => {
            if rs.rank() > opts.charpoly_rank {
                return;
            }
            if let Some(chi) = o.ok(subject, char_poly(rs, &coxeter_arrangement(rs), opts.charpoly_rank)) {
                let expected = Poly::from_roots(rs.exponents().iter().map(|&m| m as i128));
                o.check(subject, chi.poly == expected, || format!("chi = {}, expected {expected}", chi.poly));
                let z = zaslavsky_regions(&chi.poly);
                let order = weyl_order(rs);
                o.check(subject, z == order as i128, || format!("Zaslavsky {z} != #W = {order}"));
            }
        }
        _ => {}
    }
}

/// Shared per-grading data.
struct Context {
    subject: String,
    gw: GradedWeyl,
    table: CosetTable,
    ideals: Vec<Mask>,
    mins: Vec<WeylElement>,
    maxs: Vec<WeylElement>,
}

impl Context {
    fn new(g: &Grading) -> Result<Context> {
        let gw = GradedWeyl::new(g.clone())?;
        let table = gw.coset_table();
        let ideals = gw.ideals();
        let mins = ideals.iter().map(|&i| gw.w_min(i)).collect::<Result<Vec<_>>>()?;
        let maxs = ideals.iter().map(|&i| gw.w_max(i)).collect::<Result<Vec<_>>>()?;
        Ok(Context { subject: GradingSpec::of(g).to_string(), gw, table, ideals, mins, maxs })
    }

    fn g(&self) -> &Grading {
        self.gw.grading()
    }

    fn rs(&self) -> &RootSystem {
        self.gw.rs()
    }

    fn show_ideal(&self, i: Mask) -> String {
        format!("{{{}}}", self.gw.describe_ideal(i).join(", "))
    }

    fn word(&self, w: &WeylElement) -> String {
        w.word_string(self.rs())
    }

    fn self_dual_count(&self) -> Result<u64> {
        let mut n = 0;
        for &i in &self.ideals {
            if self.gw.dual_ideal(i)? == i {
                n += 1;
            }
        }
        Ok(n)
    }
}

/// `sum t^{#tau(w)}` over a set of table rows.
fn tau_polynomial<'a>(rows: impl Iterator<Item = &'a crate::weyl::CosetEntry>) -> Poly {
    Poly::from_exponents(rows.map(|e| e.tau.len()))
}

fn count_antichains(p: &Poset) -> u64 {
    fn go(p: &Poset, k: usize, chosen: Mask) -> u64 {
        if k == p.len() {
            return 1;
        }
        let skip = go(p, k + 1, chosen);
        let free = chosen.iter().all(|c| !p.leq(c, k) && !p.leq(k, c));
        skip + if free { go(p, k + 1, chosen.with(k)) } else { 0 }
    }
    go(p, 0, Mask::EMPTY)
}

fn run_grading_suite(s: Suite, c: &Context, opts: Options, o: &mut SuiteOutcome) {
    let subj = c.subject.as_str();
    let g = c.g();
    let rs = c.rs();
    let poset = c.gw.poset();
    match s {
        Suite::Grading => {
            let total: usize = (1..=g.max_level()).map(|i| g.slice(i).len()).sum::<usize>() + g.delta0_positive().len();
            o.check(subj, total == rs.num_positive(), || format!("slices cover {total} of {} roots", rs.num_positive()));
            for i in 0..rs.num_positive() {
                for j in i..rs.num_positive() {
                    if let Some(k) = rs.sum_index(i, j) {
                        o.check(subj, g.level(k) == g.level(i) + g.level(j), || {
                            format!("level({}) != level({}) + level({})", rs.root(k), rs.root(i), rs.root(j))
                        });
                    }
                }
            }
            o.check(subj, g.delta0_positive() == rs.parabolic_positive(&g.pi0()), || {
                "Delta(0)^+ is not spanned by Pi(0)".into()
            });
            if let Some(node) = g.one_standard_node() {
                let coeff = rs.theta().coords[node];
                o.check(subj, g.is_abelian() == (coeff == 1), || format!("abelian = {}, [theta:a{}] = {coeff}", g.is_abelian(), node + 1));
            }
            if g.is_standard() {
                if let Some(comps) = o.ok(subj, g.simple_components()) {
                    let lows: Vec<usize> = comps.iter().filter(|c| c.level == 1).map(|c| c.lowest).collect();
                    let pi1: Vec<usize> = g.pi(1).iter().map(|&i| rs.simple_index(i)).collect();
                    o.check(subj, lows == pi1, || format!("lowest weights {lows:?} vs Pi(1) {pi1:?}"));
                }
            }
        }
        Suite::Ideals => {
            let count = poset.count_lower_ideals();
            o.check(subj, count == c.ideals.len() as u64, || "count and enumeration disagree".into());
            let m = poset.m_polynomial();
            o.check(subj, m.eval(1) == count as i128, || format!("M(1) = {} != {count}", m.eval(1)));
            let anti = count_antichains(poset);
            o.check(subj, anti == count, || format!("{anti} antichains vs {count} ideals"));
            let mut maxes = BTreeSet::new();
            let mut mins = BTreeSet::new();
            for &i in &c.ideals {
                o.check(subj, poset.is_lower_ideal(i), || format!("{} is not a lower ideal", c.show_ideal(i)));
                let mx = poset.max_elements(i);
                o.check(subj, poset.is_antichain(mx), || "max(I) is not an antichain".into());
                if let Some(back) = o.ok(subj, poset.ideal_from_antichain(mx, Direction::Lower)) {
                    o.check(subj, back == i, || format!("max round trip fails on {}", c.show_ideal(i)));
                }
                let up = poset.complement(i);
                o.check(subj, poset.is_upper_ideal(up), || "complement is not an upper ideal".into());
                let mn = poset.min_elements(up);
                if let Some(back) = o.ok(subj, poset.ideal_from_antichain(mn, Direction::Upper)) {
                    o.check(subj, back == up, || format!("min round trip fails on {}", c.show_ideal(i)));
                }
                maxes.insert(mx);
                mins.insert(mn);
                if let Some(d) = o.ok(subj, c.gw.dual_ideal(i)) {
                    o.check(subj, d.len() + i.len() == poset.len(), || format!("#I + #I* != #Delta(1) for {}", c.show_ideal(i)));
                    if let Some(dd) = o.ok(subj, c.gw.dual_ideal(d)) {
                        o.check(subj, dd == i, || format!("(I*)* != I for {}", c.show_ideal(i)));
                    }
                }
            }
            o.check(subj, maxes.len() == c.ideals.len() && mins.len() == c.ideals.len(), || "antichain maps are not injective".into());
            if g.is_standard() {
                if let Some(comps) = o.ok(subj, g.simple_components()) {
                    let product: u64 = comps
                        .iter()
                        .filter(|k| k.level == 1)
                        .map(|k| {
                            let local = poset.from_roots(k.members).expect("component inside Delta(1)");
                            c.ideals.iter().map(|&i| i.intersection(local)).collect::<BTreeSet<_>>().len() as u64
                        })
                        .product();
                    o.check(subj, product == count, || format!("product over components {product} != {count}"));
                }
            }
            if !g.is_abelian() {
                if let Some(sd) = o.ok(subj, c.self_dual_count()) {
                    o.notes.push(format!("{subj}: M(-1) = {}, self-dual ideals = {sd}", m.eval(-1)));
                }
            }
        }
        Suite::Closure => {
            let posets: Vec<Option<WeightPoset>> = (0..=g.max_level())
                .map(|k| if k == 0 { None } else { WeightPoset::possibly_empty(g, k).ok() })
                .collect();
            for &i in &c.ideals {
                let show = c.show_ideal(i);
                if let Some(cl) = o.ok(subj, c.gw.closure(i)) {
                    for (k, &layer) in cl.layers.iter().enumerate() {
                        let level = k as i32 + 1;
                        let inside = level <= g.max_level() && layer.is_subset(g.slice(level));
                        o.check(subj, inside, || format!("I^{level} of {show} leaves Delta({level})"));
                        if inside {
                            let wp = posets[level as usize].as_ref().expect("nonempty slice");
                            let ok = wp.from_roots(layer).map(|l| wp.is_lower_ideal(l)).unwrap_or(false);
                            o.check(subj, ok, || format!("I^{level} of {show} is not a lower ideal"));
                        }
                    }
                    o.ok(subj, is_biconvex(rs, cl.union));
                }
                if let Some(up) = o.ok(subj, c.gw.upper_closure(i)) {
                    o.ok(subj, is_biconvex(rs, g.delta_ge(1).difference(up.union)));
                }
            }
        }
        Suite::Interval => {
            for (k, &i) in c.ideals.iter().enumerate() {
                let show = c.show_ideal(i);
                let (lo, hi) = (&c.mins[k], &c.maxs[k]);
                for w in [lo, hi] {
                    o.check(subj, c.gw.is_in_w0(w), || format!("{} not in W0 for {show}", c.word(w)));
                    if let Some(t) = o.ok(subj, c.gw.tau(w)) {
                        o.check(subj, t == i, || format!("tau({}) != {show}", c.word(w)));
                    }
                }
                if let Some(cl) = o.ok(subj, c.gw.closure(i)) {
                    o.check(subj, lo.length() == cl.union.len(), || format!("l(w_min) != #<I> for {show}"));
                }
                let brute: Vec<&WeylElement> = c.table.entries.iter().filter(|e| e.tau == i).map(|e| &e.element).collect();
                if let Some(fiber) = o.ok(subj, c.gw.fiber(&c.table, i)) {
                    let same = fiber.len() == brute.len() && fiber.iter().zip(&brute).all(|(a, b)| a == *b);
                    o.check(subj, same, || format!("interval has {} elements, fiber {} for {show}", fiber.len(), brute.len()));
                }
                let shortest = brute.iter().filter(|w| w.length() <= lo.length()).count();
                let longest = brute.iter().filter(|w| w.length() >= hi.length()).count();
                o.check(subj, shortest == 1 && brute.contains(&lo), || format!("w_min not the unique shortest for {show}"));
                o.check(subj, longest == 1 && brute.contains(&hi), || format!("w_max not the unique longest for {show}"));
            }
        }
        Suite::Characterization => {
            let by_def_min: BTreeSet<WeylElement> = c.mins.iter().cloned().collect();
            let by_def_max: BTreeSet<WeylElement> = c.maxs.iter().cloned().collect();
            let min_set = c.table.min_set();
            let max_set = c.table.max_set();
            o.check(subj, by_def_min == min_set, || {
                format!("{} elements w_min, {} with levels >= -1", by_def_min.len(), min_set.len())
            });
            o.check(subj, by_def_max == max_set, || {
                format!("{} elements w_max, {} with levels <= 1", by_def_max.len(), max_set.len())
            });
            o.check(subj, by_def_min.len() == c.ideals.len() && by_def_max.len() == c.ideals.len(), || "sizes differ from #ideals".into());
            let m = poset.m_polynomial();
            let pm = tau_polynomial(c.table.entries.iter().filter(|e| e.is_min));
            let px = tau_polynomial(c.table.entries.iter().filter(|e| e.is_max));
            o.check(subj, pm == m && px == m, || format!("M = {m}, over W0_min {pm}, over W0_max {px}"));
        }
        Suite::Involution => {
            let n = rs.rank();
            for i in 0..n {
                let mut e = vec![0; n];
                e[i] = 1;
                let img = c.gw.w0().apply(&e);
                let neg_simple = img.iter().all(|&x| x <= 0) && img.iter().sum::<i32>() == -1;
                o.check(subj, neg_simple, || format!("w0(a{}) = {img:?} not in -Pi", i + 1));
            }
            for k in 0..rs.num_positive() {
                let img = c.gw.w0_tilde().apply(&rs.root(k).coords);
                let level = g.level(k);
                let ok = if level == 0 {
                    img.iter().all(|&x| x <= 0)
                } else {
                    rs.index_of(&img).is_some_and(|j| g.level(j) == level)
                };
                o.check(subj, ok, || format!("w~0 moves {} to {img:?}", rs.root(k)));
            }
            for e in &c.table.entries {
                let w = &e.element;
                let Some(iw) = o.ok(subj, c.gw.involution(w)) else { continue };
                o.check(subj, c.gw.is_in_w0(&iw), || format!("i({}) not in W0", c.word(w)));
                if let Some(iiw) = o.ok(subj, c.gw.involution(&iw)) {
                    o.check(subj, &iiw == w, || format!("i(i({})) != itself", c.word(w)));
                }
                if let (Some(t), Some(d)) = (o.ok(subj, c.gw.tau(&iw)), o.ok(subj, c.gw.dual_ideal(e.tau))) {
                    o.check(subj, t == d, || format!("tau(i({})) != tau(w)*", c.word(w)));
                }
            }
            for (k, &i) in c.ideals.iter().enumerate() {
                let Some(d) = o.ok(subj, c.gw.dual_ideal(i)) else { continue };
                let Some(im) = o.ok(subj, c.gw.involution(&c.mins[k])) else { continue };
                if let Some(wd) = o.ok(subj, c.gw.w_max(d)) {
                    o.check(subj, im == wd, || format!("i(w_min) != w_max of the dual for {}", c.show_ideal(i)));
                }
            }
        }
        Suite::Extreme => {
            for (k, &i) in c.ideals.iter().enumerate() {
                let show = c.show_ideal(i);
                if let Some(mx) = o.ok(subj, c.gw.max_roots(i)) {
                    let want = poset.max_elements(i);
                    o.check(subj, mx == want, || format!("w_min gives {} but max(I) = {} for {show}", c.show_ideal(mx), c.show_ideal(want)));
                }
                if let Some(mn) = o.ok(subj, c.gw.min_complement_roots(i)) {
                    let want = poset.min_elements(poset.complement(i));
                    o.check(subj, mn == want, || format!("w_max gives {} but min(I^c) = {} for {show}", c.show_ideal(mn), c.show_ideal(want)));
                }
                let _ = &c.mins[k];
            }
        }
        Suite::Eta => {
            let Some(node) = g.one_standard_node() else { return };
            let a = rs.cartan_matrix();
            let n = rs.rank();
            let mut seen = BTreeSet::new();
            let mut min_img = BTreeSet::new();
            let mut max_img = BTreeSet::new();
            for e in &c.table.entries {
                let w = &e.element;
                let Some(eta) = o.ok(subj, c.gw.eta(w)) else { continue };
                // coweight coordinates of w(varpi), pushed through a reduced word
                let mut x = vec![0i32; n];
                x[node] = 1;
                for &i in w.reduced_word(rs).iter().rev() {
                    let ci = x[i];
                    for j in 0..n {
                        x[j] -= ci * a[i][j];
                    }
                }
                o.check(subj, x == eta, || format!("eta({}) = {eta:?}, coweight route {x:?}", c.word(w)));
                if w.is_identity() {
                    let mut ind = vec![0; n];
                    ind[node] = 1;
                    o.check(subj, eta == ind, || format!("eta(e) = {eta:?}"));
                }
                if e.is_min {
                    min_img.insert(eta.clone());
                }
                if e.is_max {
                    max_img.insert(eta.clone());
                }
                o.check(subj, seen.insert(eta.clone()), || format!("eta not injective at {}", c.word(w)));
            }
            let lower: BTreeSet<Vec<i32>> = seen.iter().filter(|v| v.iter().all(|&x| x >= -1)).cloned().collect();
            let upper: BTreeSet<Vec<i32>> = seen.iter().filter(|v| v.iter().all(|&x| x <= 1)).cloned().collect();
            o.check(subj, lower == min_img, || "eta(W0_min) != {entries >= -1}".into());
            o.check(subj, upper == max_img, || "eta(W0_max) != {entries <= 1}".into());
        }
        Suite::Regions => {
            let regions = regions_in_dominant_chamber(&c.gw, &c.table);
            o.check(subj, regions.len() == c.ideals.len(), || format!("{} regions, {} ideals", regions.len(), c.ideals.len()));
            let keys: Vec<Mask> = regions.iter().map(|r| r.ideal).collect();
            o.check(subj, keys == c.ideals, || "region keys differ from the ideals".into());
            let full = coxeter_arrangement(rs);
            for (k, r) in regions.iter().enumerate() {
                if k >= c.ideals.len() || r.ideal != c.ideals[k] {
                    break;
                }
                let show = c.show_ideal(r.ideal);
                o.check(subj, r.closest() == &c.mins[k], || format!("closest chamber {} != w_min for {show}", c.word(r.closest())));
                o.check(subj, r.farthest() == &c.maxs[k], || format!("farthest chamber {} != w_max for {show}", c.word(r.farthest())));
                let lmin = r.closest().length();
                let lmax = r.farthest().length();
                let unique = r.chambers.iter().filter(|w| w.length() == lmin).count() == 1
                    && r.chambers.iter().filter(|w| w.length() == lmax).count() == 1;
                o.check(subj, unique, || format!("extreme chambers not unique for {show}"));
                for w in &r.chambers {
                    if let Some(signs) = o.ok(subj, geometric_sign_oracle(rs, &full, w)) {
                        let d = signs.iter().filter(|&&x| x < 0).count();
                        o.check(subj, d == w.length(), || format!("distance {d} != length of {}", c.word(w)));
                        let sub: Vec<i8> = full.roots.iter().zip(&signs).filter(|(k, _)| g.slice(1).contains(*k)).map(|(_, &s)| s).collect();
                        let key: Vec<i8> = poset.roots().iter().map(|&k| if w.inversion_set(rs).contains(k) { -1 } else { 1 }).collect();
                        o.check(subj, sub == key, || format!("sign vector of {} disagrees on Delta(1)", c.word(w)));
                    }
                }
            }
        }
        Suite::Formula => {
            let value = height_product(rs, g.slice(1));
            let count = BigRational::from_integer(BigInt::from(c.ideals.len()));
            if rs.cartan_type().family().is_classical_or_g2() {
                o.check(subj, value == count, || format!("height product {value} != {} ideals", c.ideals.len()));
            } else if value != count {
                o.notes.push(format!("{subj}: height product {value}, {} ideals", c.ideals.len()));
            }
            let w0 = parabolic_order(rs, &g.pi0());
            let prod0 = height_product(rs, g.delta0_positive());
            o.check(subj, prod0 == BigRational::from_integer(BigInt::from(w0)), || format!("#W(0) = {w0}, height product {prod0}"));
        }
        Suite::Km => {
            let w0 = parabolic_order(rs, &g.pi0());
            if let Some(p) = o.ok(subj, kostant_macdonald(rs, g.delta0_positive())) {
                o.check(subj, p.eval(1) == w0 as i128, || format!("W(0)(1) = {} != #W(0) = {w0}", p.eval(1)));
            }
        }
        Suite::ExtraSpecial => {
            if !g.is_extra_special() {
                return;
            }
            let h = rs.coxeter_number();
            let nl = rs.long_simple().len();
            o.check(subj, c.ideals.len() == nl * (h - 1), || format!("{} ideals != #Pi_l (h-1) = {}", c.ideals.len(), nl * (h - 1)));
            o.check(subj, c.table.len() == rs.num_long_roots(), || format!("#W0 = {} != {} long roots", c.table.len(), rs.num_long_roots()));
            o.check(subj, c.table.len() == nl * h, || format!("#W0 = {} != #Pi_l h", c.table.len()));
            let covered = c.table.entries.iter().all(|e| e.is_min || e.is_max);
            o.check(subj, covered, || "W0 != W0_min ∪ W0_max".into());
            let non_min = c.table.entries.iter().filter(|e| !e.is_min).count();
            o.check(subj, non_min == nl, || format!("{non_min} non-minimal elements, #Pi_l = {nl}"));
            let theta = &rs.theta().coords;
            for e in &c.table.entries {
                let img = e.element.apply(theta);
                let simple = |v: &[i32]| v.iter().filter(|&&x| x != 0).count() == 1 && v.iter().sum::<i32>() == 1;
                let neg: Vec<i32> = img.iter().map(|x| -x).collect();
                o.check(subj, e.is_min == !simple(&neg), || format!("{}: min flag vs -w(theta) in Pi", c.word(&e.element)));
                o.check(subj, e.is_max == !simple(&img), || format!("{}: max flag vs w(theta) in Pi", c.word(&e.element)));
            }
            let arr = sub_arrangement_01(g);
            o.check(subj, arr.roots == rs.all_positive().difference(Mask::singleton(rs.theta_index())), || "A(0,1) is not the deleted arrangement".into());
        }
        Suite::Abelian => {
            if !g.is_abelian() {
                return;
            }
            let order = weyl_order(rs);
            let w0 = parabolic_order(rs, &g.pi0());
            let n = c.ideals.len() as u64;
            o.check(subj, n == c.table.len() as u64 && n * w0 == order, || {
                format!("{n} ideals, #W0 = {}, #W/#W(0) = {order}/{w0}", c.table.len())
            });
            let m = poset.m_polynomial();
            let wp = poincare(c.table.entries.iter().map(|e| &e.element));
            o.check(subj, m == wp, || format!("M = {m}, W0(t) = {wp}"));
            if let Some(sd) = o.ok(subj, c.self_dual_count()) {
                o.check(subj, m.eval(-1) == sd as i128, || format!("M(-1) = {}, self-dual = {sd}", m.eval(-1)));
            }
            let all = c.table.entries.iter().all(|e| e.is_min && e.is_max);
            o.check(subj, all, || "W0_min = W0_max = W0 fails".into());
            let fixed = c
                .table
                .entries
                .iter()
                .filter(|e| c.gw.involution(&e.element).is_ok_and(|iw| iw == e.element))
                .count();
            o.check(subj, fixed as i128 == wp.eval(-1), || format!("{fixed} fixed points, W0(-1) = {}", wp.eval(-1)));
            o.check(subj, sub_arrangement_01(g).roots == rs.all_positive(), || "A(0,1) is not the Coxeter arrangement".into());
            for e in &c.table.entries {
                if let Ok(eta) = c.gw.eta(&e.element) {
                    o.check(subj, eta.iter().all(|x| x.abs() <= 1), || format!("eta({}) = {eta:?}", c.word(&e.element)));
                }
            }
        }
        Suite::NonAbelian => {
            if g.is_abelian() {
                return;
            }
            let (mn, mx) = (c.table.min_set(), c.table.max_set());
            let total = c.table.len();
            o.check(subj, mn != mx && mn.len() < total && mx.len() < total, || {
                format!("#W0_min = {}, #W0_max = {}, #W0 = {total}", mn.len(), mx.len())
            });
            if !g.is_extra_special() {
                let union = mn.union(&mx).count();
                o.check(subj, union < total, || format!("W0_min ∪ W0_max covers all {total} elements"));
            }
        }
        Suite::Partition => {
            let p = partition_01(g);
            o.check(subj, p.is_strict_partition(), || format!("P(0,1) = {:?}", p.counts));
            if g.is_standard() {
                o.check(subj, p.counts.first() == Some(&rs.rank()), || format!("eta_1 = {:?} != rank", p.counts.first()));
            }
        }
        Suite::Charpoly => {
            if rs.rank() > opts.charpoly_rank {
                return;
            }
            let Some(rep) = o.ok(subj, conjecture_check(&c.gw, &c.table, Some(opts.charpoly_rank))) else { return };
            let z = rep.zaslavsky.expect("computed");
            o.check(subj, z == rep.w0_order as i128 * rep.ideal_count as i128, || {
                format!("Zaslavsky {z} != #W(0) {} * {} ideals", rep.w0_order, rep.ideal_count)
            });
            if rep.authoritative {
                for f in rep.failures() {
                    o.fail(subj, f);
                }
            } else if !rep.failures().is_empty() {
                o.notes.push(format!("{subj}: {}", rep.failures().join("; ")));
            }
            if g.is_extra_special() {
                let mut ex: Vec<i128> = rs.exponents().iter().map(|&m| m as i128).collect();
                *ex.last_mut().expect("rank >= 1") -= 1;
                let want = Poly::from_roots(ex.iter().copied());
                let chi = rep.char_poly.expect("computed");
                o.check(subj, chi == want, || format!("deleted arrangement chi = {chi}, expected {want}"));
            }
        }
        _ => {}
    }
}
