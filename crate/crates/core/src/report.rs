//! Serializable summaries behind each CLI command, with plain-text and CSV
//! renderings. Field order and list order are fixed so that repeated runs
//! produce identical bytes.

use std::fmt::Write as _;

use serde::Serialize;

use crate::arrangement::{conjecture_check, regions_in_dominant_chamber};
use crate::bits::Mask;
use crate::error::Result;
use crate::grading::{Grading, GradingSpec};
use crate::poly::Poly;
use crate::rootsys::{format_coords, RootSystem};
use crate::verify::VerifyReport;
use crate::weyl::{poincare, CosetTable, GradedWeyl, WeylElement};

pub trait Render: Serialize {
    fn text(&self) -> String;

    /// Header and rows for `--csv`.
    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>);
}

pub fn to_json<R: Render>(r: &R) -> String {
    let mut s = serde_json::to_string_pretty(r).expect("reports serialize");
    s.push('\n');
    s
}

pub fn to_csv<R: Render>(r: &R) -> String {
    let (header, rows) = r.table();
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

fn roots_of(rs: &RootSystem, set: Mask) -> Vec<Vec<i32>> {
    let mut v: Vec<Vec<i32>> = set.iter().map(|k| rs.root(k).coords.clone()).collect();
    v.sort();
    v
}

fn show_roots(roots: &[Vec<i32>]) -> String {
    let parts: Vec<String> = roots.iter().map(|r| format_coords(r)).collect();
    format!("{{{}}}", parts.join(", "))
}

fn simple_names(idx: &[usize]) -> Vec<String> {
    idx.iter().map(|i| format!("a{}", i + 1)).collect()
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

#[derive(Clone, Debug, Serialize)]
pub struct SliceInfo {
    pub level: i32,
    pub size: usize,
    pub simple: Vec<String>,
    pub roots: Vec<Vec<i32>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ShowReport {
    pub grading: String,
    pub cartan_type: String,
    pub rank: usize,
    pub marks: Vec<i32>,
    pub positive_roots: usize,
    pub coxeter_number: usize,
    pub exponents: Vec<usize>,
    pub theta: Vec<i32>,
    pub long_simple: Vec<String>,
    pub standard: bool,
    pub abelian: bool,
    pub extra_special: bool,
    pub max_level: i32,
    /// Level 0 lists `Delta(0)^+` and `Pi(0)`.
    pub slices: Vec<SliceInfo>,
}

pub fn show(g: &Grading) -> ShowReport {
    let rs = g.root_system();
    ShowReport {
        grading: GradingSpec::of(g).to_string(),
        cartan_type: rs.cartan_type().to_string(),
        rank: rs.rank(),
        marks: g.marks().to_vec(),
        positive_roots: rs.num_positive(),
        coxeter_number: rs.coxeter_number(),
        exponents: rs.exponents(),
        theta: rs.theta().coords.clone(),
        long_simple: simple_names(rs.long_simple()),
        standard: g.is_standard(),
        abelian: g.is_abelian(),
        extra_special: g.is_extra_special(),
        max_level: g.max_level(),
        slices: (0..=g.max_level())
            .map(|i| {
                let set = if i == 0 { g.delta0_positive() } else { g.slice(i) };
                SliceInfo { level: i, size: set.len(), simple: simple_names(&g.pi(i)), roots: roots_of(rs, set) }
            })
            .collect(),
    }
}

impl Render for ShowReport {
    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "grading        {}", self.grading);
        let _ = writeln!(s, "type           {} (rank {}, {} positive roots)", self.cartan_type, self.rank, self.positive_roots);
        let _ = writeln!(s, "theta          {}", format_coords(&self.theta));
        let _ = writeln!(s, "coxeter number {}", self.coxeter_number);
        let _ = writeln!(s, "exponents      {}", join(&self.exponents));
        let _ = writeln!(s, "long simple    {}", self.long_simple.join(" "));
        let _ = writeln!(
            s,
            "class          standard={} abelian={} extra-special={}",
            self.standard, self.abelian, self.extra_special
        );
        for sl in &self.slices {
            let name = if sl.level == 0 { "Delta(0)+".to_string() } else { format!("Delta({})", sl.level) };
            let _ = writeln!(s, "{name:<10} {:>3}  Pi = {{{}}}  {}", sl.size, sl.simple.join(", "), show_roots(&sl.roots));
        }
        s
    }

    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let rows = self
            .slices
            .iter()
            .map(|sl| {
                vec![
                    self.grading.clone(),
                    sl.level.to_string(),
                    sl.size.to_string(),
                    sl.simple.join(" "),
                    sl.roots.iter().map(|r| format_coords(r)).collect::<Vec<_>>().join(" "),
                ]
            })
            .collect();
        (vec!["grading", "level", "size", "simple", "roots"], rows)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealRow {
    pub size: usize,
    pub roots: Vec<Vec<i32>>,
    pub max: Vec<Vec<i32>>,
    pub self_dual: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealsReport {
    pub grading: String,
    pub poset_size: usize,
    pub count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m_polynomial: Option<Poly>,
    pub m_at_minus_one: i128,
    pub self_dual: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideals: Option<Vec<IdealRow>>,
}

pub fn ideals(gw: &GradedWeyl, list: bool, poly: bool) -> Result<IdealsReport> {
    let rs = gw.rs();
    let poset = gw.poset();
    let all = gw.ideals();
    let mut rows = Vec::with_capacity(all.len());
    let mut self_dual = 0;
    for &i in &all {
        let sd = gw.dual_ideal(i)? == i;
        self_dual += u64::from(sd);
        rows.push(IdealRow {
            size: i.len(),
            roots: roots_of(rs, poset.to_roots(i)),
            max: roots_of(rs, poset.to_roots(poset.max_elements(i))),
            self_dual: sd,
        });
    }
    rows.sort_by(|a, b| a.roots.cmp(&b.roots));
    let m = poset.m_polynomial();
    Ok(IdealsReport {
        grading: GradingSpec::of(gw.grading()).to_string(),
        poset_size: poset.len(),
        count: all.len() as u64,
        m_at_minus_one: m.eval(-1),
        m_polynomial: poly.then_some(m),
        self_dual,
        ideals: list.then_some(rows),
    })
}

impl Render for IdealsReport {
    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "grading     {}", self.grading);
        let _ = writeln!(s, "#Delta(1)   {}", self.poset_size);
        let _ = writeln!(s, "ideals      {}", self.count);
        if let Some(m) = &self.m_polynomial {
            let _ = writeln!(s, "M(t)        {m}");
        }
        let _ = writeln!(s, "M(-1)       {}", self.m_at_minus_one);
        let _ = writeln!(s, "self-dual   {}", self.self_dual);
        if let Some(rows) = &self.ideals {
            for r in rows {
                let mark = if r.self_dual { " *" } else { "" };
                let _ = writeln!(s, "  {:>3}  {}  max {}{mark}", r.size, show_roots(&r.roots), show_roots(&r.max));
            }
        }
        s
    }

    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let rows = match &self.ideals {
            Some(rows) => rows
                .iter()
                .map(|r| {
                    vec![
                        self.grading.clone(),
                        r.size.to_string(),
                        r.roots.iter().map(|x| format_coords(x)).collect::<Vec<_>>().join(" "),
                        r.max.iter().map(|x| format_coords(x)).collect::<Vec<_>>().join(" "),
                        r.self_dual.to_string(),
                    ]
                })
                .collect(),
            None => vec![vec![self.grading.clone(), String::new(), self.count.to_string(), String::new(), self.self_dual.to_string()]],
        };
        (vec!["grading", "size", "roots", "max", "self_dual"], rows)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ElementInfo {
    pub word: String,
    pub length: usize,
    pub matrix: Vec<Vec<i32>>,
}

impl ElementInfo {
    pub fn of(rs: &RootSystem, w: &WeylElement) -> ElementInfo {
        ElementInfo { word: w.word_string(rs), length: w.length(), matrix: w.matrix_rows() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CosetRow {
    #[serde(flatten)]
    pub element: ElementInfo,
    pub tau: Vec<Vec<i32>>,
    pub is_min: bool,
    pub is_max: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eta: Option<Vec<i32>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct WeylReport {
    pub grading: String,
    pub w0_size: usize,
    pub poincare: Poly,
    pub min_size: usize,
    pub poincare_min: Poly,
    pub max_size: usize,
    pub poincare_max: Poly,
    pub involution_fixed_points: usize,
    pub poincare_at_minus_one: i128,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub elements: Vec<CosetRow>,
}

/// Lists `W^0_min` with `min`, `W^0_max` with `max`, everything when only
/// `eta` is set; `eta` adds the vectors for 1-standard gradings.
pub fn weyl(gw: &GradedWeyl, table: &CosetTable, min: bool, max: bool, eta: bool) -> Result<WeylReport> {
    let rs = gw.rs();
    let poset = gw.poset();
    let all = poincare(table.entries.iter().map(|e| &e.element));
    let pmin = poincare(table.entries.iter().filter(|e| e.is_min).map(|e| &e.element));
    let pmax = poincare(table.entries.iter().filter(|e| e.is_max).map(|e| &e.element));
    let mut fixed = 0;
    for e in &table.entries {
        fixed += usize::from(gw.involution(&e.element)? == e.element);
    }
    let want_eta = eta && gw.grading().one_standard_node().is_some();
    let mut elements = Vec::new();
    for e in &table.entries {
        let listed = (min && e.is_min) || (max && e.is_max) || (eta && !min && !max);
        if !listed {
            continue;
        }
        elements.push(CosetRow {
            element: ElementInfo::of(rs, &e.element),
            tau: roots_of(rs, poset.to_roots(e.tau)),
            is_min: e.is_min,
            is_max: e.is_max,
            eta: if want_eta { Some(gw.eta(&e.element)?) } else { None },
        });
    }
    Ok(WeylReport {
        grading: GradingSpec::of(gw.grading()).to_string(),
        w0_size: table.len(),
        poincare_at_minus_one: all.eval(-1),
        poincare: all,
        min_size: table.entries.iter().filter(|e| e.is_min).count(),
        poincare_min: pmin,
        max_size: table.entries.iter().filter(|e| e.is_max).count(),
        poincare_max: pmax,
        involution_fixed_points: fixed,
        elements,
    })
}

impl Render for WeylReport {
    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "grading        {}", self.grading);
        let _ = writeln!(s, "#W0            {}", self.w0_size);
        let _ = writeln!(s, "W0(t)          {}", self.poincare);
        let _ = writeln!(s, "#W0_min        {}", self.min_size);
        let _ = writeln!(s, "W0_min(t)      {}", self.poincare_min);
        let _ = writeln!(s, "#W0_max        {}", self.max_size);
        let _ = writeln!(s, "W0_max(t)      {}", self.poincare_max);
        let _ = writeln!(s, "fixed by i     {}", self.involution_fixed_points);
        let _ = writeln!(s, "W0(-1)         {}", self.poincare_at_minus_one);
        for r in &self.elements {
            let flags = format!("{}{}", if r.is_min { "min " } else { "" }, if r.is_max { "max" } else { "" });
            let eta = r.eta.as_ref().map(|v| format!("  eta ({})", join(v))).unwrap_or_default();
            let _ = writeln!(s, "  {:<24} l={:<3} tau {}  {}{eta}", r.element.word, r.element.length, show_roots(&r.tau), flags.trim());
        }
        s
    }

    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let rows = self
            .elements
            .iter()
            .map(|r| {
                vec![
                    self.grading.clone(),
                    r.element.word.clone(),
                    r.element.length.to_string(),
                    r.tau.iter().map(|x| format_coords(x)).collect::<Vec<_>>().join(" "),
                    r.is_min.to_string(),
                    r.is_max.to_string(),
                    r.eta.as_ref().map(|v| join(v)).unwrap_or_default(),
                ]
            })
            .collect();
        (vec!["grading", "word", "length", "tau", "is_min", "is_max", "eta"], rows)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ElementReport {
    pub grading: String,
    pub ideal: Vec<Vec<i32>>,
    pub closure: Vec<Vec<i32>>,
    pub w_min: ElementInfo,
    pub w_min_inversions: Vec<Vec<i32>>,
    pub w_max: ElementInfo,
    pub w_max_inversions: Vec<Vec<i32>>,
    pub max_roots: Vec<Vec<i32>>,
    pub min_complement_roots: Vec<Vec<i32>>,
    pub dual_ideal: Vec<Vec<i32>>,
    pub fiber_size: usize,
}

pub fn element(gw: &GradedWeyl, table: &CosetTable, ideal: Mask) -> Result<ElementReport> {
    let rs = gw.rs();
    let poset = gw.poset();
    let closure = gw.closure(ideal)?;
    let lo = gw.w_min(ideal)?;
    let hi = gw.w_max(ideal)?;
    Ok(ElementReport {
        grading: GradingSpec::of(gw.grading()).to_string(),
        ideal: roots_of(rs, poset.to_roots(ideal)),
        closure: roots_of(rs, closure.union),
        w_min_inversions: roots_of(rs, lo.inversion_set(rs)),
        w_min: ElementInfo::of(rs, &lo),
        w_max_inversions: roots_of(rs, hi.inversion_set(rs)),
        w_max: ElementInfo::of(rs, &hi),
        max_roots: roots_of(rs, poset.to_roots(gw.max_roots(ideal)?)),
        min_complement_roots: roots_of(rs, poset.to_roots(gw.min_complement_roots(ideal)?)),
        dual_ideal: roots_of(rs, poset.to_roots(gw.dual_ideal(ideal)?)),
        fiber_size: gw.fiber(table, ideal)?.len(),
    })
}

impl Render for ElementReport {
    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "grading     {}", self.grading);
        let _ = writeln!(s, "ideal I     {}", show_roots(&self.ideal));
        let _ = writeln!(s, "<I>         {}", show_roots(&self.closure));
        let _ = writeln!(s, "w_min       {} (length {})  N = {}", self.w_min.word, self.w_min.length, show_roots(&self.w_min_inversions));
        let _ = writeln!(s, "w_max       {} (length {})  N = {}", self.w_max.word, self.w_max.length, show_roots(&self.w_max_inversions));
        let _ = writeln!(s, "max(I)      {}", show_roots(&self.max_roots));
        let _ = writeln!(s, "min(I^c)    {}", show_roots(&self.min_complement_roots));
        let _ = writeln!(s, "I*          {}", show_roots(&self.dual_ideal));
        let _ = writeln!(s, "fiber size  {}", self.fiber_size);
        s
    }

    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let f = |v: &[Vec<i32>]| v.iter().map(|x| format_coords(x)).collect::<Vec<_>>().join(" ");
        let row = vec![
            self.grading.clone(),
            f(&self.ideal),
            self.w_min.word.clone(),
            self.w_max.word.clone(),
            f(&self.max_roots),
            f(&self.min_complement_roots),
            self.fiber_size.to_string(),
        ];
        (vec!["grading", "ideal", "w_min", "w_max", "max", "min_complement", "fiber_size"], vec![row])
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ArrangementReport {
    pub grading: String,
    pub partition: Vec<usize>,
    pub dual_partition: Vec<usize>,
    pub region_count: u64,
    pub ideal_count: u64,
    /// Exact rational, e.g. `"352"` or `"7/2"`.
    pub formula_value: String,
    pub hyperplanes: usize,
    pub exponents: Vec<usize>,
    pub w0_order: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub char_poly: Option<Poly>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zaslavsky_regions: Option<i128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exponents_match: Option<bool>,
    /// Failed identities among those that hold for classical types and `G2`.
    pub discrepancies: Vec<String>,
}

pub fn arrangement(gw: &GradedWeyl, table: &CosetTable, char_poly_rank: Option<usize>) -> Result<ArrangementReport> {
    let rep = conjecture_check(gw, table, char_poly_rank)?;
    debug_assert_eq!(rep.region_count as usize, regions_in_dominant_chamber(gw, table).len());
    Ok(ArrangementReport {
        grading: GradingSpec::of(gw.grading()).to_string(),
        discrepancies: rep.failures(),
        partition: rep.partition.counts,
        dual_partition: rep.partition.dual,
        region_count: rep.region_count,
        ideal_count: rep.ideal_count,
        formula_value: rep.formula_value.to_string(),
        hyperplanes: rep.num_hyperplanes,
        exponents: rep.exponents,
        w0_order: rep.w0_order,
        char_poly: rep.char_poly,
        zaslavsky_regions: rep.zaslavsky,
        exponents_match: rep.exponents_match,
    })
}

impl Render for ArrangementReport {
    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "grading          {}", self.grading);
        let _ = writeln!(s, "hyperplanes      {}", self.hyperplanes);
        let _ = writeln!(s, "P(0,1)           ({})", join(&self.partition));
        let _ = writeln!(s, "dual partition   ({})", join(&self.dual_partition));
        let _ = writeln!(s, "exponents        {}", join(&self.exponents));
        let _ = writeln!(s, "#W(0)            {}", self.w0_order);
        let _ = writeln!(s, "regions in C(0)  {}", self.region_count);
        let _ = writeln!(s, "ideals           {}", self.ideal_count);
        let _ = writeln!(s, "height product   {}", self.formula_value);
        if let Some(chi) = &self.char_poly {
            let _ = writeln!(s, "chi(t)           {chi}");
        }
        if let Some(z) = self.zaslavsky_regions {
            let _ = writeln!(s, "all regions      {z}");
        }
        if let Some(m) = self.exponents_match {
            let _ = writeln!(s, "chi factors      {m}");
        }
        for d in &self.discrepancies {
            let _ = writeln!(s, "discrepancy      {d}");
        }
        s
    }

    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let row = vec![
            self.grading.clone(),
            join(&self.partition),
            join(&self.dual_partition),
            self.region_count.to_string(),
            self.ideal_count.to_string(),
            self.formula_value.clone(),
            self.char_poly.as_ref().map(|p| p.to_string()).unwrap_or_default(),
            self.exponents_match.map(|m| m.to_string()).unwrap_or_default(),
        ];
        (
            vec!["grading", "partition", "dual_partition", "region_count", "ideal_count", "formula_value", "char_poly", "exponents_match"],
            vec![row],
        )
    }
}

impl Render for VerifyReport {
    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "types: {}  gradings: {}", self.types.join(" "), self.gradings);
        for o in &self.suites {
            let status = if o.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(s, "{status}  {:<17} {} checks, {} failed", o.suite, o.checks, o.failed);
            for f in &o.failures {
                let _ = writeln!(s, "      {}: {}", f.subject, f.detail);
            }
            for n in &o.notes {
                let _ = writeln!(s, "      note {n}");
            }
        }
        s
    }

    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let rows = self
            .suites
            .iter()
            .map(|o| {
                vec![
                    o.suite.clone(),
                    if o.passed() { "pass" } else { "fail" }.to_string(),
                    o.checks.to_string(),
                    o.failed.to_string(),
                    o.failures.first().map(|f| format!("{}: {}", f.subject, f.detail)).unwrap_or_default(),
                ]
            })
            .collect();
        (vec!["suite", "status", "checks", "failed", "first_failure"], rows)
    }
}
