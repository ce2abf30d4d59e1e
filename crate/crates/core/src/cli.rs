//! Command-line front end.
//!
//! Graphs travel between subcommands as graph6 lines; reports are JSON.
//! Exit codes: 0 on success, 1 on usage or domain errors, 2 when a
//! verification suite finds a failure.

use std::io::{BufRead, Write};

use clap::{Parser, Subcommand, ValueEnum};
use rand::Rng;

use crate::enumerate::verify::{
    verify_dankelmann, verify_main_theorem, verify_minima, verify_monotonicity, VerifyReport,
};
use crate::enumerate::{extremal_table, trees, unicyclic_graphs, TREE_DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::families::{
    build_anm, build_duzhou, build_g3, build_g4, AnmParams, DuZhouKind, DuZhouParams, G3Params,
    G4Params,
};
use crate::formulas::{
    bound_dankelmann_max, bound_dankelmann_min, bound_duzhou_tree_min, bound_duzhou_unicyclic_min,
    bound_max_unicyclic,
};
use crate::graph::Graph;
use crate::graph6::{from_graph6, to_graph6};
use crate::matching::matching_number;
use crate::random::{random_path_legged, random_unicyclic, seeded};
use crate::transforms::{cycle_swap, path_legs, path_regraft, spr, SwapVariant, TransformReport};

#[derive(Parser, Debug)]
#[command(
    name = "wiener-extremal",
    version,
    about = "Wiener-index extremal unicyclic graphs"
)]
struct Cli {
    /// Graph format on standard input and output.
    #[arg(long, value_enum, default_value_t = Format::G6, global = true)]
    format: Format,

    /// Seed for randomly generated instances.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,

    /// Worker threads for enumeration and verification.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    G6,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a member of a named family.
    Construct {
        #[arg(long, value_enum)]
        family: Family,
        /// Comma-separated parameters: g3 a,j or a,b,c,j,k,l; g4 a,c,j or
        /// a,b,c,d,h,j,k,l; anm and duzhou-* n,m.
        #[arg(long)]
        params: String,
    },
    /// Wiener index of each graph on standard input.
    Wiener,
    /// Matching number of each graph on standard input.
    Match,
    /// Evaluate a closed-form bound.
    Bound {
        #[arg(long, value_enum)]
        which: BoundKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Apply a rewrite to the graph on standard input and print a JSON report.
    Transform {
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        branch: Option<usize>,
        #[arg(long)]
        v: Option<usize>,
        #[arg(long)]
        i1: Option<usize>,
        #[arg(long)]
        i2: Option<usize>,
        /// Instead of reading standard input, apply the rewrite to this many
        /// seeded random unicyclic graphs of order at most 12.
        #[arg(long)]
        random: Option<usize>,
    },
    /// Stream every unicyclic graph (or tree) of order n, one per line.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        trees: bool,
        #[arg(long, default_value_t = TREE_DEFAULT_CAP)]
        tree_cap: usize,
    },
    /// Maximum Wiener index per matching number with all maximizers.
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        csv: bool,
    },
    /// Run a verification suite and print its JSON report.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        n_max: Option<usize>,
        /// Largest tree order for the minima suite.
        #[arg(long, default_value_t = TREE_DEFAULT_CAP)]
        tree_cap: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    G3,
    G4,
    Anm,
    DuzhouTree,
    DuzhouUni,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BoundKind {
    MaxUni,
    DankMin,
    DankMax,
    DzTree,
    DzUni,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Op {
    Spr,
    G1,
    G2,
    PathRegraft,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Main,
    Mono,
    Minima,
    Dankelmann,
}

impl Cli {
    fn reads_stdin(&self) -> bool {
        match &self.command {
            Command::Wiener | Command::Match => true,
            Command::Transform { random, .. } => random.is_none(),
            _ => false,
        }
    }
}

enum Failure {
    Error(Error),
    Io(std::io::Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Runs the command line `args` (including the program name) against the
/// given streams and returns the process exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{rendered}");
            return code;
        }
    };
    let threads = cli.jobs.map_or(0, |j| j as usize);
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(stderr, "error: cannot start worker pool: {e}");
            return 1;
        }
    };
    let mut input = String::new();
    if cli.reads_stdin() {
        if let Err(e) = stdin.read_to_string(&mut input) {
            let _ = writeln!(stderr, "error: {e}");
            return 1;
        }
    }
    let mut buffer = Vec::new();
    let outcome = pool.install(|| dispatch(&cli, &input, &mut buffer));
    if let Err(e) = stdout.write_all(&buffer) {
        let _ = writeln!(stderr, "error: {e}");
        return 1;
    }
    match outcome {
        Ok(()) => 0,
        Err(Failure::Verification) => 2,
        Err(Failure::Error(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}

fn dispatch(cli: &Cli, stdin: &str, out: &mut Vec<u8>) -> std::result::Result<(), Failure> {
    match &cli.command {
        Command::Construct { family, params } => {
            let g = construct(*family, params)?;
            write_graph(out, &g, cli.format)?;
        }
        Command::Wiener => {
            for g in read_graphs(stdin, cli.format)? {
                writeln!(out, "{}", g.wiener_index()?)?;
            }
        }
        Command::Match => {
            for g in read_graphs(stdin, cli.format)? {
                let cert = matching_number(&g)?;
                match cli.format {
                    Format::G6 => writeln!(out, "{}", cert.size)?,
                    Format::Json => writeln!(out, "{}", to_json(&cert)?)?,
                }
            }
        }
        Command::Bound { which, n, m } => {
            let value = match which {
                BoundKind::MaxUni => bound_max_unicyclic(*n, *m),
                BoundKind::DankMin => bound_dankelmann_min(*n, *m),
                BoundKind::DankMax => bound_dankelmann_max(*n, *m),
                BoundKind::DzTree => bound_duzhou_tree_min(*n, *m),
                BoundKind::DzUni => bound_duzhou_unicyclic_min(*n, *m),
            }?;
            writeln!(out, "{value}")?;
        }
        Command::Transform {
            op,
            d,
            branch,
            v,
            i1,
            i2,
            random,
        } => {
            let args = TransformArgs {
                op: *op,
                d: *d,
                branch: *branch,
                v: *v,
                i1: *i1,
                i2: *i2,
            };
            match random {
                Some(count) => {
                    for report in random_transforms(*op, *count, cli.seed)? {
                        writeln!(out, "{}", to_json(&report)?)?;
                    }
                }
                None => {
                    let graphs = read_graphs(stdin, cli.format)?;
                    if graphs.is_empty() {
                        return Err(Error::Precondition("no graph on standard input".into()).into());
                    }
                    for g in graphs {
                        writeln!(out, "{}", to_json(&args.apply(&g)?)?)?;
                    }
                }
            }
        }
        Command::Enumerate {
            n,
            trees: want_trees,
            tree_cap,
        } => {
            let graphs = if *want_trees {
                trees(*n, *tree_cap)?
            } else {
                unicyclic_graphs(*n)?
            };
            for g in &graphs {
                write_graph(out, g, cli.format)?;
            }
        }
        Command::Table { n, csv } => {
            let table = extremal_table(*n)?;
            if *csv {
                writeln!(out, "n,m,w_max,extremal_count,extremal_g6")?;
                for r in &table {
                    let g6 = r
                        .extremal
                        .iter()
                        .map(|f| to_graph6(&f.to_graph()))
                        .collect::<Result<Vec<_>>>()?;
                    writeln!(
                        out,
                        "{},{},{},{},{}",
                        r.n,
                        r.m,
                        r.w_max,
                        r.extremal.len(),
                        g6.join(";")
                    )?;
                }
            } else {
                writeln!(out, "{}", to_json(&table)?)?;
            }
        }
        Command::Verify {
            suite,
            n_max,
            tree_cap,
        } => {
            let report: VerifyReport = match suite {
                Suite::Main => verify_main_theorem(n_max.unwrap_or(11))?,
                Suite::Mono => verify_monotonicity(n_max.unwrap_or(11))?,
                Suite::Minima => verify_minima(n_max.unwrap_or(11), *tree_cap)?,
                Suite::Dankelmann => verify_dankelmann(n_max.unwrap_or(7))?,
            };
            writeln!(out, "{}", to_json(&report)?)?;
            if !report.passed {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String> {
    serde_json::to_string(value).map_err(|e| Error::Json(e.to_string()))
}

fn write_graph(out: &mut Vec<u8>, g: &Graph, format: Format) -> std::result::Result<(), Failure> {
    match format {
        Format::G6 => writeln!(out, "{}", to_graph6(g)?)?,
        Format::Json => writeln!(out, "{}", g.to_json())?,
    }
    Ok(())
}

fn read_graphs(stdin: &str, format: Format) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    for line in stdin.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        graphs.push(match format {
            Format::G6 => from_graph6(line)?,
            Format::Json => Graph::from_json(line)?,
        });
    }
    Ok(graphs)
}

fn parse_params(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::Domain(format!("bad parameter {s:?} in {text:?}")))
        })
        .collect()
}

fn construct(family: Family, params: &str) -> Result<Graph> {
    let p = parse_params(params)?;
    let arity = |want: &[usize]| -> Result<()> {
        if want.contains(&p.len()) {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "expected {want:?} parameters, got {}",
                p.len()
            )))
        }
    };
    Ok(match family {
        Family::G3 => {
            arity(&[2, 6])?;
            let params = if p.len() == 2 {
                G3Params::reduced(p[0], p[1])
            } else {
                G3Params::new(p[0], p[1], p[2], p[3], p[4], p[5])
            };
            build_g3(&params)
        }
        Family::G4 => {
            arity(&[3, 8])?;
            let params = if p.len() == 3 {
                G4Params::reduced(p[0], p[1], p[2])
            } else {
                G4Params::new(p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7])
            };
            build_g4(&params)
        }
        Family::Anm => {
            arity(&[2])?;
            build_anm(&AnmParams::new(p[0], p[1])?)
        }
        Family::DuzhouTree | Family::DuzhouUni => {
            arity(&[2])?;
            let kind = if family == Family::DuzhouTree {
                DuZhouKind::TreeMin
            } else {
                DuZhouKind::UnicyclicMin
            };
            build_duzhou(&DuZhouParams::new(p[0], p[1], kind)?)
        }
    })
}

struct TransformArgs {
    op: Op,
    d: Option<usize>,
    branch: Option<usize>,
    v: Option<usize>,
    i1: Option<usize>,
    i2: Option<usize>,
}

fn required(value: Option<usize>, flag: &str) -> Result<usize> {
    value.ok_or_else(|| Error::Precondition(format!("--{flag} is required for this operation")))
}

impl TransformArgs {
    fn apply(&self, g: &Graph) -> Result<TransformReport> {
        match self.op {
            Op::Spr => spr(
                g,
                required(self.d, "d")?,
                required(self.branch, "branch")?,
                required(self.v, "v")?,
            ),
            Op::G1 => cycle_swap(g, SwapVariant::G1),
            Op::G2 => cycle_swap(g, SwapVariant::G2),
            Op::PathRegraft => path_regraft(g, required(self.i1, "i1")?, required(self.i2, "i2")?),
        }
    }
}

/// Seeded instances: cycle length 5..=8 for the swaps, path-legged graphs
/// regrafting their first two non-empty legs otherwise.
fn random_transforms(op: Op, count: usize, seed: u64) -> Result<Vec<TransformReport>> {
    let mut rng = seeded(seed);
    (0..count)
        .map(|_| match op {
            Op::G1 | Op::G2 => {
                let k = rng.gen_range(5..=8);
                let n = rng.gen_range(k..=12);
                let g = random_unicyclic(&mut rng, n, k);
                let variant = if op == Op::G1 {
                    SwapVariant::G1
                } else {
                    SwapVariant::G2
                };
                cycle_swap(&g, variant)
            }
            Op::PathRegraft => {
                let k = rng.gen_range(3..=8);
                let n = rng.gen_range(k + 2..=12);
                let g = random_path_legged(&mut rng, n, k);
                let info = g.unicyclic_info().ok_or(Error::NotUnicyclic)?;
                let legs = path_legs(&g, &info)?;
                let mut nonempty = (0..legs.len()).filter(|&i| !legs[i].is_empty());
                let (a, b) = (nonempty.next(), nonempty.next());
                path_regraft(&g, a.expect("two legs"), b.expect("two legs"))
            }
            Op::Spr => Err(Error::Precondition(
                "random instances are available for g1, g2 and path-regraft only".into(),
            )),
        })
        .collect()
}
