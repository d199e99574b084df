//! The `nilring` command line. [`run`] takes the argument list and output
//! streams so that tests can drive it in-process.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use nilring::{
    default_catalog, find_separators, generate, parse_catalog, verify_all, verify_catalog, ClassificationReport,
    Classifier, Element, Error, FiniteRing, Ideal, RingDescriptor, SeparatorResult, Status, TheoremReport,
    DEFAULT_SIZE_CAP,
};
use serde::Serialize;

/// Witness sets in human output are cut to this many entries.
const SHOWN_WITNESSES: usize = 8;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "nilring", version, about = "Ideal classes of small finite commutative rings")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Opts {
    /// Print JSON instead of tables
    #[arg(long, global = true)]
    json: bool,
    /// Largest ring size that will be built
    #[arg(long, global = true, default_value_t = DEFAULT_SIZE_CAP, value_name = "N")]
    size_cap: usize,
    /// Report at most this many witnesses per class
    #[arg(long, global = true, value_name = "N")]
    witness_limit: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Size, unit count, nilradical and ideal count of a ring
    Info { ring: String },
    /// Every ideal of a ring with the classes it belongs to
    Ideals { ring: String },
    /// Classify the ideal generated by the given elements
    Classify {
        ring: String,
        /// Comma-separated generator indices
        #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
        ideal: Vec<Element>,
    },
    /// Check the theorem suite on one ring, or on every catalog ring
    Verify {
        ring: Option<String>,
        /// Ring catalog file, one expression per line
        #[arg(long, value_name = "PATH", conflicts_with = "ring")]
        catalog: Option<String>,
    },
    /// Look for ideals separating neighbouring classes
    Search {
        #[arg(long, value_name = "PATH")]
        catalog: Option<String>,
        /// Exit with status 1 unless the nil-prime, N-prime and N-maximal
        /// separators are all found
        #[arg(long)]
        require: bool,
    },
}

/// A failure that ends the run with a message on the error stream.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_FAILED,
            message: format!("error: {e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::usage(format!("error: {e}"))
    }
}

type Outcome = Result<i32, Failure>;

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Info { ring } => info(&cli.opts, ring, out),
        Command::Ideals { ring } => ideals(&cli.opts, ring, out),
        Command::Classify { ring, ideal } => classify(&cli.opts, ring, ideal, out),
        Command::Verify { ring, catalog } => verify(&cli.opts, ring.as_deref(), catalog.as_deref(), out),
        Command::Search { catalog, require } => search(&cli.opts, catalog.as_deref(), *require, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "{}", f.message);
            f.code
        }
    }
}

fn build(opts: &Opts, text: &str) -> Result<FiniteRing, Failure> {
    let d = nilring::parse(text).map_err(|e| {
        Failure::usage(format!(
            "error: invalid ring expression {e}\n  {text}\n  {}^",
            " ".repeat(text[..e.offset.min(text.len())].chars().count())
        ))
    })?;
    Ok(FiniteRing::build_with_cap(&d, opts.size_cap)?)
}

fn load_catalog(opts: &Opts, path: Option<&str>) -> Result<Vec<RingDescriptor>, Failure> {
    let Some(path) = path else {
        return Ok(default_catalog());
    };
    let text = std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("error: {path}: {e}")))?;
    parse_catalog(&text, opts.size_cap).map_err(|e| Failure::usage(format!("error: {path}: {e}")))
}

fn emit_json<T: Serialize + ?Sized>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure {
        code: EXIT_FAILED,
        message: format!("error: {e}"),
    })?;
    writeln!(out, "{text}")?;
    Ok(())
}

/// `{a, b, c, +N more}` with at most [`SHOWN_WITNESSES`] entries.
fn elements(v: &[Element]) -> String {
    let mut s = String::from("{");
    for (k, a) in v.iter().take(SHOWN_WITNESSES).enumerate() {
        if k > 0 {
            s.push_str(", ");
        }
        let _ = write!(s, "{a}");
    }
    if v.len() > SHOWN_WITNESSES {
        let _ = write!(s, ", +{} more", v.len() - SHOWN_WITNESSES);
    }
    s.push('}');
    s
}

#[derive(Serialize)]
struct InfoJson {
    ring: String,
    size: usize,
    units: usize,
    nilradical: Vec<Element>,
    ideals: usize,
}

fn info(opts: &Opts, text: &str, out: &mut dyn Write) -> Outcome {
    let ring = build(opts, text)?;
    let c = Classifier::new(&ring)?;
    let report = InfoJson {
        ring: ring.descriptor().to_string(),
        size: ring.size(),
        units: ring.units().len(),
        nilradical: c.nilpotents().to_vec(),
        ideals: c.lattice().len(),
    };
    if opts.json {
        emit_json(out, &report)?;
    } else {
        writeln!(out, "ring        {}", report.ring)?;
        writeln!(out, "size        {}", report.size)?;
        writeln!(out, "units       {}", report.units)?;
        writeln!(out, "Nil(R)      {}", elements(&report.nilradical))?;
        writeln!(out, "ideals      {}", report.ideals)?;
    }
    Ok(EXIT_OK)
}

/// Class names an ideal belongs to, strongest first.
fn classes(r: &ClassificationReport) -> Vec<&'static str> {
    [
        (r.maximal, "maximal"),
        (r.prime, "prime"),
        (r.nil_maximal, "nil-maximal"),
        (r.n_maximal, "N-maximal"),
        (r.nil_prime, "nil-prime"),
        (r.n_prime, "N-prime"),
        (r.nil_minimal, "nil-minimal"),
        (r.nil_principal, "nil-principal"),
        (r.n_principal, "N-principal"),
    ]
    .into_iter()
    .filter(|(v, _)| *v == Some(true))
    .map(|(_, name)| name)
    .collect()
}

#[derive(Serialize)]
struct IdealsJson {
    ring: String,
    ideals: Vec<ClassificationReport>,
}

fn ideals(opts: &Opts, text: &str, out: &mut dyn Write) -> Outcome {
    let ring = build(opts, text)?;
    let c = Classifier::new(&ring)?;
    let reports = c
        .lattice()
        .iter()
        .map(|i| c.classify(i, opts.witness_limit))
        .collect::<nilring::Result<Vec<_>>>()?;
    if opts.json {
        emit_json(
            out,
            &IdealsJson {
                ring: ring.descriptor().to_string(),
                ideals: reports,
            },
        )?;
        return Ok(EXIT_OK);
    }
    writeln!(out, "{} has {} ideals", ring.descriptor(), reports.len())?;
    for (k, (i, r)) in c.lattice().iter().zip(&reports).enumerate() {
        let mut gens: Vec<String> = i.generators().iter().map(|g| g.to_string()).collect();
        if gens.is_empty() {
            gens.push("0".into());
        }
        writeln!(
            out,
            "{k:>4}  <{}>  size {}  {}  {}",
            gens.join(","),
            i.len(),
            elements(&r.ideal),
            classes(r).join(" ")
        )?;
    }
    Ok(EXIT_OK)
}

fn classify(opts: &Opts, text: &str, gens: &[Element], out: &mut dyn Write) -> Outcome {
    let ring = build(opts, text)?;
    if let Some(&g) = gens.iter().find(|&&g| g >= ring.size()) {
        return Err(Failure::usage(format!(
            "error: generator {g} is not an element of {} (size {})",
            ring.descriptor(),
            ring.size()
        )));
    }
    let c = Classifier::new(&ring)?;
    let ideal = generate(&ring, gens);
    let report = c.classify(&ideal, opts.witness_limit)?;
    if opts.json {
        emit_json(out, &report)?;
    } else {
        print_report(out, &ring, gens, &ideal, &report)?;
    }
    Ok(EXIT_OK)
}

fn print_report(
    out: &mut dyn Write,
    ring: &FiniteRing,
    gens: &[Element],
    ideal: &Ideal<'_>,
    r: &ClassificationReport,
) -> std::io::Result<()> {
    let g: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
    writeln!(out, "ring           {}", ring.descriptor())?;
    writeln!(out, "ideal          <{}> = {}", g.join(","), ideal)?;
    let verdict = |v: Option<bool>| match v {
        Some(true) => "yes",
        Some(false) => "no",
        None => "n/a",
    };
    let w = &r.witnesses;
    let rows: [(&str, Option<bool>, Option<String>); 9] = [
        ("prime", r.prime, None),
        ("maximal", r.maximal, None),
        ("nil-prime", r.nil_prime, w.nil_prime.as_deref().map(|v| format!("x in {}", elements(v)))),
        ("N-prime", r.n_prime, None),
        ("nil-maximal", r.nil_maximal, w.nil_maximal.as_deref().map(|v| format!("x in {}", elements(v)))),
        ("N-maximal", r.n_maximal, None),
        ("nil-minimal", r.nil_minimal, w.nil_minimal.as_deref().map(|v| format!("x in {}", elements(v)))),
        ("nil-principal", r.nil_principal, w.nil_principal.map(|[a, x]| format!("r = {a}, x = {x}"))),
        ("N-principal", r.n_principal, w.n_principal.map(|a| format!("r = {a}"))),
    ];
    for (name, v, wit) in rows {
        match wit.filter(|_| v == Some(true)) {
            Some(wit) => writeln!(out, "{name:<15}{:<5}{wit}", verdict(v))?,
            None => writeln!(out, "{name:<15}{}", verdict(v))?,
        }
    }
    Ok(())
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Vacuous => "vacuous",
    }
}

fn print_theorems(out: &mut dyn Write, report: &TheoremReport) -> std::io::Result<()> {
    writeln!(out, "{}", report.ring)?;
    for t in &report.theorems {
        writeln!(out, "  {:<6} {:<8} {:>7}", t.id, status_name(t.status), t.instances)?;
        if let Some(cx) = &t.counterexample {
            writeln!(out, "         counterexample: {}", cx.clause)?;
            for i in &cx.ideals {
                writeln!(out, "           ideal {}", elements(i))?;
            }
            if !cx.elements.is_empty() {
                writeln!(out, "           elements {}", elements(&cx.elements))?;
            }
        }
    }
    Ok(())
}

fn verify(opts: &Opts, ring: Option<&str>, catalog: Option<&str>, out: &mut dyn Write) -> Outcome {
    let reports = match ring {
        Some(text) => vec![verify_all(&build(opts, text)?)?],
        None => verify_catalog(&load_catalog(opts, catalog)?, opts.size_cap, true)?,
    };
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if opts.json {
        match (ring, reports.as_slice()) {
            (Some(_), [one]) => emit_json(out, one)?,
            _ => emit_json(out, &reports)?,
        }
    } else if ring.is_some() {
        print_theorems(out, &reports[0])?;
    } else {
        for r in &reports {
            if r.passed() {
                let vacuous = r.theorems.iter().filter(|t| t.status == Status::Vacuous).count();
                writeln!(
                    out,
                    "{:<20} pass  {} checks, {vacuous} vacuous",
                    r.ring,
                    r.theorems.len()
                )?;
            } else {
                print_theorems(out, r)?;
            }
        }
        writeln!(out, "{} rings, {failed} with failures", reports.len())?;
    }
    Ok(if failed == 0 { EXIT_OK } else { EXIT_FAILED })
}

fn search(opts: &Opts, catalog: Option<&str>, require: bool, out: &mut dyn Write) -> Outcome {
    let catalog = load_catalog(opts, catalog)?;
    let results = find_separators(&catalog, opts.size_cap)?;
    if opts.json {
        emit_json(out, &results)?;
    } else {
        for r in &results {
            print_separator(out, r)?;
        }
    }
    let missing = results[..3].iter().any(|r| !r.found);
    Ok(if require && missing { EXIT_FAILED } else { EXIT_OK })
}

fn print_separator(out: &mut dyn Write, r: &SeparatorResult) -> std::io::Result<()> {
    let name = format!("{} but not {}", r.holds, r.fails);
    match &r.witness {
        Some(w) => writeln!(
            out,
            "{name:<32} found      {} {}  ({} instances)",
            w.ring,
            elements(&w.ideal),
            r.instances.len()
        ),
        None => writeln!(out, "{name:<32} not found"),
    }
}
