use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use gradus::arrangement::DEFAULT_CHARPOLY_RANK;
use gradus::bits::Mask;
use gradus::error::{Error, Result};
use gradus::grading::{Grading, GradingSpec};
use gradus::report::{self, Render};
use gradus::rootsys::{parse_coords, CartanType};
use gradus::verify::{self, Scope, Suite};
use gradus::weyl::{quotient_size, GradedWeyl};

/// Coset tables larger than this need `--allow-huge`.
const HUGE_QUOTIENT: u128 = 1_000_000;
const SWEEP_MAX_RANK: usize = 4;
const SINGLE_MAX_RANK: usize = 7;

#[derive(Parser)]
#[command(name = "gradus", version, about = "Ideals, Weyl group elements and arrangements of Z-graded root systems")]
struct Cli {
    #[command(flatten)]
    global: Global,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,

    /// Emit CSV.
    #[arg(long, global = true)]
    csv: bool,

    /// Worker threads (0 = one per core).
    #[arg(long, global = true, env = "GRADUS_THREADS", default_value_t = 0)]
    threads: usize,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<std::path::PathBuf>,

    /// Rank cap: 4 for sweeps, 7 for single gradings.
    #[arg(long, global = true, value_name = "N")]
    max_rank: Option<usize>,

    /// Allow E8 and coset tables with more than a million elements.
    #[arg(long, global = true)]
    allow_huge: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Root system and grading summary.
    Show { spec: String },
    /// Lower ideals of Delta(1).
    Ideals {
        spec: String,
        /// List every ideal.
        #[arg(long)]
        list: bool,
        /// Include the rank-generating polynomial.
        #[arg(long)]
        poly: bool,
    },
    /// Minimal coset representatives and their Poincare polynomials.
    Weyl {
        spec: String,
        /// List W0_min.
        #[arg(long)]
        min: bool,
        /// List W0_max.
        #[arg(long)]
        max: bool,
        /// Include eta vectors (1-standard gradings).
        #[arg(long)]
        eta: bool,
    },
    /// Minimal and maximal elements of one ideal.
    Element {
        spec: String,
        /// Roots of the ideal separated by `;`, e.g. "a2;a1+a2". Empty for the empty ideal.
        #[arg(long, allow_hyphen_values = true)]
        ideal: String,
    },
    /// The sub-arrangement on Delta(0)+ and Delta(1).
    Arrangement {
        spec: String,
        /// Compute the characteristic polynomial by point counting.
        #[arg(long)]
        charpoly: bool,
    },
    /// Run verification suites over a grading, a type, or a sweep.
    Verify {
        /// A grading ("B3:0,1,0"), or a type ("B3") for all its standard and
        /// extra-special gradings.
        scope: Option<String>,
        /// Sweep every type up to --max-rank.
        #[arg(long)]
        all: bool,
        /// Restrict to these suites.
        #[arg(long = "suite", value_name = "NAME")]
        suites: Vec<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.global.threads > 0 {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.global.threads).build_global();
    }
    match run(&cli) {
        Ok((out, ok)) => {
            let written = match &cli.global.out {
                Some(path) => fs::write(path, out).map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => {
                    print!("{out}");
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Invariant(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn render<R: Render>(g: &Global, r: &R) -> String {
    if g.json {
        report::to_json(r)
    } else if g.csv {
        report::to_csv(r)
    } else {
        r.text()
    }
}

fn grading(g: &Global, spec: &str) -> Result<Grading> {
    let spec: GradingSpec = spec.parse()?;
    let cap = g.max_rank.unwrap_or(SINGLE_MAX_RANK);
    let rank = spec.cartan_type.rank();
    if !g.allow_huge && (rank > cap || spec.cartan_type.to_string() == "E8") {
        return Err(Error::RankBound(format!(
            "{} exceeds rank {cap} for single-grading commands; pass --allow-huge or --max-rank",
            spec.cartan_type
        )));
    }
    let gr = spec.build()?;
    let size = quotient_size(gr.root_system(), &gr.pi0());
    if !g.allow_huge && size > HUGE_QUOTIENT {
        return Err(Error::RankBound(format!("{spec} has {size} coset representatives; pass --allow-huge")));
    }
    Ok(gr)
}

fn parse_ideal(gw: &GradedWeyl, text: &str) -> Result<Mask> {
    let rs = gw.rs();
    let mut roots = Mask::EMPTY;
    for part in text.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let coords = parse_coords(part, rs.rank())?;
        let k = rs.index_of(&coords).ok_or_else(|| Error::NotARoot(coords.clone()))?;
        if gw.grading().level(k) != 1 {
            return Err(Error::NotAnIdeal(format!("{} is not in Delta(1)", rs.root(k))));
        }
        roots.insert(k);
    }
    let local = gw.poset().from_roots(roots)?;
    // closure() names the violated cover if this is not an ideal
    gw.closure(local)?;
    Ok(local)
}

fn run(cli: &Cli) -> Result<(String, bool)> {
    let g = &cli.global;
    match &cli.command {
        Command::Show { spec } => Ok((render(g, &report::show(&grading(g, spec)?)), true)),
        Command::Ideals { spec, list, poly } => {
            let gw = GradedWeyl::new(grading(g, spec)?)?;
            Ok((render(g, &report::ideals(&gw, *list, *poly)?), true))
        }
        Command::Weyl { spec, min, max, eta } => {
            let gw = GradedWeyl::new(grading(g, spec)?)?;
            let table = gw.coset_table();
            Ok((render(g, &report::weyl(&gw, &table, *min, *max, *eta)?), true))
        }
        Command::Element { spec, ideal } => {
            let gw = GradedWeyl::new(grading(g, spec)?)?;
            let mask = parse_ideal(&gw, ideal)?;
            let table = gw.coset_table();
            Ok((render(g, &report::element(&gw, &table, mask)?), true))
        }
        Command::Arrangement { spec, charpoly } => {
            let gw = GradedWeyl::new(grading(g, spec)?)?;
            let table = gw.coset_table();
            let rank = if *charpoly { Some(DEFAULT_CHARPOLY_RANK) } else { None };
            Ok((render(g, &report::arrangement(&gw, &table, rank)?), true))
        }
        Command::Verify { scope, all, suites } => {
            let suites: Vec<Suite> = if suites.is_empty() {
                Suite::ALL.to_vec()
            } else {
                suites.iter().map(|s| s.parse()).collect::<Result<_>>()?
            };
            let mut sc = match (scope, all) {
                (Some(_), true) => return Err(Error::Usage("give either a scope or --all".into())),
                (None, false) => return Err(Error::Usage("give a grading, a type, or --all".into())),
                (None, true) => Scope::up_to_rank(g.max_rank.unwrap_or(SWEEP_MAX_RANK))?,
                (Some(s), false) if s.contains(':') => Scope::single(grading(g, s)?),
                (Some(s), false) => {
                    let t: CartanType = s.parse()?;
                    if !g.allow_huge && t.to_string() == "E8" {
                        return Err(Error::RankBound("E8 sweeps need --allow-huge".into()));
                    }
                    Scope::of_types(&[t])?
                }
            };
            let before = sc.gradings.len();
            if !g.allow_huge {
                sc.gradings.retain(|gr| quotient_size(gr.root_system(), &gr.pi0()) <= HUGE_QUOTIENT);
                sc.types.retain(|rs| rs.cartan_type().to_string() != "E8");
            }
            let skipped = before - sc.gradings.len();
            let mut rep = verify::run(&sc, &suites, verify::Options::default());
            if skipped > 0 {
                if let Some(first) = rep.suites.first_mut() {
                    first.notes.push(format!("skipped {skipped} gradings with more than {HUGE_QUOTIENT} coset representatives"));
                }
            }
            let ok = rep.passed();
            Ok((render(g, &rep), ok))
        }
    }
}
