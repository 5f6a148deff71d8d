//! `jdlat` command-line front end.
//!
//! Exit codes: 0 on success or when every checked property holds, 1 when a
//! checked property is violated, 2 on bad input or usage.

pub mod dot;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use jdlat::antimatroid::{check_cover_law, trajectory_labels, SetFamily};
use jdlat::cz::{build_czlat, mir_formula, EligibleTuple};
use jdlat::ej::{build_ejlat, EjLattice};
use jdlat::enumeration::{census_jd_lattices, realize_census, CensusEntry};
use jdlat::equivalence::{check_phi, phi_table, verify_proposition};
use jdlat::trajectories::{
    check_condition_ii, check_condition_iii, corollary_report, trajectories, CorollaryReport,
};
use jdlat::{FiniteLattice, PermTuple, Permutation};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use dot::export_dot;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

const DEFAULT_SEED: u64 = 0x5eed_1a77;

#[derive(Debug, Parser)]
#[command(name = "jdlat", version, about = "Join-distributive lattices from permutation tuples")]
pub struct Cli {
    /// Write results to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Seed for randomized runs.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Largest accepted permutation degree.
    #[arg(long, global = true, default_value_t = 6)]
    pub max_n: usize,

    /// Largest accepted number of chains.
    #[arg(long, global = true, default_value_t = 4)]
    pub max_k: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Union-closure lattice of a σ tuple file.
    BuildEj {
        permfile: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Coordinatized lattice of a π tuple file.
    BuildCz {
        permfile: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Pair each set of ejlat(σ) with its coordinate tuple in czlat(σ⁻¹).
    Map {
        permfile: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Join-distributivity and trajectory conditions of a lattice, tuple or family file.
    Check(CheckArgs),
    /// Trajectory decomposition of the prime intervals.
    Trajectories {
        input: PathBuf,
        #[arg(long)]
        cz: bool,
    },
    /// Isomorphism test between two inputs.
    Iso {
        a: PathBuf,
        b: PathBuf,
        /// Read a tuple file given as `a` as π (coordinatized) rather than σ.
        #[arg(long)]
        a_cz: bool,
        /// Read a tuple file given as `b` as π (coordinatized) rather than σ.
        #[arg(long)]
        b_cz: bool,
    },
    /// Meet-irreducibles of czlat(π) by formula and by brute force.
    Mir { permfile: PathBuf },
    /// Census of join-distributive lattices of length n as CSV.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Search a realizing σ for each class.
        #[arg(long)]
        realize: bool,
        /// Allow realization at n = 4.
        #[arg(long)]
        slow: bool,
    },
    /// Export a lattice as DOT or JSON.
    Export {
        input: PathBuf,
        #[arg(long, conflicts_with = "json", required_unless_present = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
        /// Read a tuple file as π (coordinatized) rather than σ.
        #[arg(long)]
        cz: bool,
    },
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Lattice JSON, permutation tuple file (read as σ) or antimatroid family file.
    #[arg(required_unless_present = "random")]
    pub input: Option<PathBuf>,
    /// Instead of a file, check this many random σ tuples.
    #[arg(long, conflicts_with = "input")]
    pub random: Option<usize>,
    #[arg(long)]
    pub json: bool,
}

/// A failed invocation: bad input, reported on standard error with exit 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type CliResult = Result<(String, i32), InputError>;

enum Input {
    Lattice(FiniteLattice),
    Tuple(PermTuple),
    Family(SetFamily),
}

fn read_input(path: &Path, cli: &Cli) -> Result<Input, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .unwrap_or("");
    if text.trim_start().starts_with('{') {
        return Ok(Input::Lattice(FiniteLattice::from_json(&text)?));
    }
    if first.split_whitespace().count() == 1 {
        return Ok(Input::Family(SetFamily::parse(&text)?));
    }
    let t = PermTuple::parse(&text)?;
    guard(&t, cli)?;
    Ok(Input::Tuple(t))
}

fn read_tuple(path: &Path, cli: &Cli) -> Result<PermTuple, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let t = PermTuple::parse(&text)?;
    guard(&t, cli)?;
    Ok(t)
}

fn guard(t: &PermTuple, cli: &Cli) -> Result<(), InputError> {
    if t.degree() > cli.max_n {
        return Err(InputError(format!(
            "degree {} exceeds --max-n {}",
            t.degree(),
            cli.max_n
        )));
    }
    if t.k() > cli.max_k {
        return Err(InputError(format!("k = {} exceeds --max-k {}", t.k(), cli.max_k)));
    }
    Ok(())
}

fn lattice_of(input: Input, as_cz: bool) -> Result<FiniteLattice, InputError> {
    Ok(match input {
        Input::Lattice(l) => l,
        Input::Tuple(t) if as_cz => build_czlat(&t)?.into_lattice(),
        Input::Tuple(t) => build_ejlat(&t)?.into_lattice(),
        Input::Family(f) => f.feasible_lattice(),
    })
}

/// `subset,tuple` labels as in a combined diagram of both constructions.
fn combined_labels(ej: &EjLattice) -> Vec<String> {
    phi_table(ej)
        .into_iter()
        .map(|(u, x)| format!("{},{}", u.label(), x.label()))
        .collect()
}

fn render(l: &FiniteLattice, format: Format) -> String {
    match format {
        Format::Json => l.to_json() + "\n",
        Format::Dot => export_dot(l),
        Format::Text => {
            let mut out = format!(
                "elements: {}\nlength: {}\njoin-width: {}\n",
                l.size(),
                l.length(),
                l.join_width()
            );
            for x in 0..l.size() {
                let ups: Vec<&str> = l.upper_covers(x).iter().map(|&y| l.label(y)).collect();
                let _ = writeln!(out, "{} ≺ {}", l.label(x), ups.join(" "));
            }
            out
        }
    }
}

pub fn execute(cli: &Cli) -> CliResult {
    match &cli.command {
        Command::BuildEj { permfile, format } => {
            let ej = build_ejlat(&read_tuple(permfile, cli)?)?;
            Ok((render(ej.lattice(), *format), EXIT_OK))
        }
        Command::BuildCz { permfile, format } => {
            let cz = build_czlat(&read_tuple(permfile, cli)?)?;
            Ok((render(cz.lattice(), *format), EXIT_OK))
        }
        Command::Map { permfile, json } => map(&read_tuple(permfile, cli)?, *json),
        Command::Check(args) => match (&args.input, args.random) {
            (_, Some(count)) => check_random(cli, count),
            (Some(path), None) => check(read_input(path, cli)?, args.json),
            (None, None) => Err(InputError("check needs an input file or --random".into())),
        },
        Command::Trajectories { input, cz } => {
            let input = read_input(input, cli)?;
            let family = match &input {
                Input::Family(f) => Some(f.clone()),
                Input::Tuple(t) if !cz => Some(jdlat::antimatroid::from_ejlat(t)?),
                _ => None,
            };
            let l = lattice_of(input, *cz)?;
            Ok((trajectory_text(&l, family.as_ref()), EXIT_OK))
        }
        Command::Iso { a, b, a_cz, b_cz } => {
            let la = lattice_of(read_input(a, cli)?, *a_cz)?;
            let lb = lattice_of(read_input(b, cli)?, *b_cz)?;
            Ok(match la.is_isomorphic(&lb) {
                Some(f) => {
                    let mut out = String::from("isomorphic\n");
                    for (x, &y) in f.iter().enumerate() {
                        let _ = writeln!(out, "{} -> {}", la.label(x), lb.label(y));
                    }
                    (out, EXIT_OK)
                }
                None => ("not isomorphic\n".to_string(), EXIT_VIOLATION),
            })
        }
        Command::Mir { permfile } => mir(&read_tuple(permfile, cli)?),
        Command::Enumerate { n, realize, slow } => enumerate(*n, *realize, *slow),
        Command::Export { input, dot, cz, .. } => {
            let input = read_input(input, cli)?;
            let l = match input {
                Input::Tuple(t) if !cz => {
                    let ej = build_ejlat(&t)?;
                    let labels = combined_labels(&ej);
                    ej.into_lattice().with_labels(labels)
                }
                other => lattice_of(other, *cz)?,
            };
            let format = if *dot { Format::Dot } else { Format::Json };
            Ok((render(&l, format), EXIT_OK))
        }
    }
}

fn map(sigma: &PermTuple, json: bool) -> CliResult {
    let ej = build_ejlat(sigma)?;
    let cz = build_czlat(&sigma.inverse())?;
    let report = check_phi(&ej, &cz);
    let rows = phi_table(&ej);
    let out = if json {
        let pairs: Vec<serde_json::Value> = rows
            .iter()
            .map(|(u, x)| serde_json::json!({"set": u.label(), "tuple": x.coords()}))
            .collect();
        serde_json::to_string_pretty(&serde_json::json!({
            "pass": report.pass,
            "violations": report.violations,
            "map": pairs,
        }))? + "\n"
    } else {
        let mut out = String::new();
        for (u, x) in &rows {
            let _ = writeln!(out, "{} → {}", u.label(), x.label());
        }
        out.push_str(&report.to_string());
        out
    };
    Ok((out, if report.pass { EXIT_OK } else { EXIT_VIOLATION }))
}

/// Corollary report for any lattice; conditions (ii) and (iii) are still
/// evaluated when the semimodularity hypothesis fails.
fn corollary_or_violation(l: &FiniteLattice) -> CorollaryReport {
    match corollary_report(l) {
        Ok(r) => r,
        Err(e) => CorollaryReport {
            semimodular: false,
            jd: l.is_join_distributive(),
            cond_ii: check_condition_ii(l).pass,
            cond_iii: check_condition_iii(l).pass,
            witness: Some(e.to_string()),
        },
    }
}

fn check(input: Input, json: bool) -> CliResult {
    let mut extra = serde_json::Map::new();
    let mut text = String::new();
    let mut ok = true;
    let lattice = match input {
        Input::Lattice(l) => l,
        Input::Tuple(sigma) => {
            let prop = verify_proposition(&sigma)?;
            ok &= prop.pass;
            let _ = write!(text, "{prop}");
            extra.insert("proposition".into(), serde_json::to_value(&prop)?);
            build_ejlat(&sigma)?.into_lattice()
        }
        Input::Family(fam) => {
            let cover = check_cover_law(&fam);
            let labels = trajectory_labels(&fam);
            ok &= cover.pass && labels.consistent();
            let _ = writeln!(text, "cover law: {}", cover.pass);
            let _ = writeln!(text, "trajectory labels constant: {}", labels.consistent());
            extra.insert("cover_law".into(), cover.pass.into());
            extra.insert("labels_constant".into(), labels.consistent().into());
            fam.feasible_lattice()
        }
    };
    let report = corollary_or_violation(&lattice);
    let msd = lattice.is_meet_semidistributive();
    ok &= report.semimodular && report.all_hold();
    let out = if json {
        let mut v = serde_json::to_value(&report)?;
        if let serde_json::Value::Object(map) = &mut v {
            map.insert("meet_semidistributive".into(), msd.into());
            map.extend(extra);
        }
        serde_json::to_string(&v)? + "\n"
    } else {
        let _ = write!(text, "{report}");
        let _ = writeln!(text, "meet-semidistributive:      {msd}");
        text
    };
    Ok((out, if ok { EXIT_OK } else { EXIT_VIOLATION }))
}

fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    Permutation::from_images(v).expect("shuffled range is a permutation")
}

fn check_random(cli: &Cli, count: usize) -> CliResult {
    if cli.max_n < 2 || cli.max_k < 2 {
        return Err(InputError("--random needs --max-n >= 2 and --max-k >= 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let mut out = String::new();
    let mut failures = 0;
    for _ in 0..count {
        let n = rng.gen_range(2..=cli.max_n);
        let k = rng.gen_range(2..=cli.max_k);
        let sigma = PermTuple::new((1..k).map(|_| random_perm(&mut rng, n)).collect())?;
        let prop = verify_proposition(&sigma)?;
        let ej = build_ejlat(&sigma)?.into_lattice();
        let cz = build_czlat(&sigma.inverse())?.into_lattice();
        let mut problems = prop.violations.clone();
        for (name, l) in [("ejlat", &ej), ("czlat", &cz)] {
            let r = corollary_or_violation(l);
            let dlw = r.jd == (l.is_semimodular() && l.is_meet_semidistributive());
            if !(r.all_hold() && dlw && l.length() == n && l.join_width() <= k) {
                problems.push(format!("{name}: {r:?}"));
            }
        }
        if !problems.is_empty() {
            failures += 1;
            let _ = writeln!(out, "FAIL {sigma}: {problems:?}");
        }
    }
    let _ = writeln!(out, "{} of {count} random tuples passed (seed {})", count - failures, cli.seed);
    Ok((out, if failures == 0 { EXIT_OK } else { EXIT_VIOLATION }))
}

fn trajectory_text(l: &FiniteLattice, family: Option<&SetFamily>) -> String {
    let t = trajectories(l);
    let labels = family.map(trajectory_labels);
    let mut out = format!("{} trajectories, length {}\n", t.len(), l.length());
    for (i, block) in t.blocks().enumerate() {
        let intervals: Vec<String> = block
            .iter()
            .map(|p| format!("[{},{}]", l.label(p.a), l.label(p.b)))
            .collect();
        let tag = match labels.as_ref().map(|tl| tl.labels[i]) {
            Some(Some(x)) => format!(" (x_T = {x})"),
            Some(None) => " (mixed)".to_string(),
            None => String::new(),
        };
        let _ = writeln!(out, "T{i}{tag}: {}", intervals.join(" "));
    }
    out
}

fn mir(pi: &PermTuple) -> CliResult {
    let cz = build_czlat(pi)?;
    let formula = mir_formula(pi);
    let mut brute: Vec<EligibleTuple> = cz
        .lattice()
        .meet_irreducibles()
        .elements()
        .iter()
        .map(|&x| cz.tuples()[x].clone())
        .collect();
    brute.sort();
    let mut sorted_formula = formula.clone();
    sorted_formula.sort();
    sorted_formula.dedup();
    let agree = sorted_formula == brute;
    let mut out = String::new();
    for (i, x) in formula.iter().enumerate() {
        let _ = writeln!(out, "i={}: {}", i + 1, x.label());
    }
    let listed: Vec<String> = brute.iter().map(EligibleTuple::label).collect();
    let _ = writeln!(out, "meet-irreducibles: {}", listed.join(" "));
    let _ = writeln!(out, "{}", if agree { "match" } else { "MISMATCH" });
    Ok((out, if agree { EXIT_OK } else { EXIT_VIOLATION }))
}

fn enumerate(n: usize, realize: bool, slow: bool) -> CliResult {
    if realize && n >= 4 && !slow {
        return Err(InputError(
            "realization at n >= 4 is a long run; add --slow to confirm".into(),
        ));
    }
    let mut census = census_jd_lattices(n)?;
    if realize {
        realize_census(&mut census)?;
    }
    let mut out = String::from(CensusEntry::CSV_HEADER);
    out.push('\n');
    for e in &census {
        out.push_str(&e.csv_row());
        out.push('\n');
    }
    let unrealized = realize && census.iter().any(|e| e.witness.is_none());
    Ok((out, if unrealized { EXIT_VIOLATION } else { EXIT_OK }))
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok((output, code)) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &output) {
                    eprintln!("error: {}: {e}", path.display());
                    return EXIT_INPUT;
                }
            } else {
                print!("{output}");
            }
            code
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            EXIT_INPUT
        }
    }
}
