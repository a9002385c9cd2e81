//! `sumset`: command-line front end for `sumset-core`.
//!
//! Subcommands: `sumset`, `classify`, `verify`, `search`, `zpz`.
//!
//! JSON is the stable output format. Objects are printed with keys in sorted
//! order, so parsing and re-serializing any emitted line is byte-identical.
//!
//! `sumset` emits
//! `{"applicable", "bound", "equality", "mode", "n", "set", "size", "slack", "sumset"}`.
//!
//! `classify` emits `{"form": {"tag": .., "params": {..}}, "report": {..}}`
//! where `report` carries `n, k, bound, actual, slack, equality, applicable`.
//!
//! `verify` and `search` run a campaign. The report is line-delimited JSON:
//! one record per witness or counterexample
//! (`{"kind", "n", "k", "set", "size", "bound", "form"?, "detail"?, "extra"?}`)
//! followed by a summary
//! `{"kind": "summary", "theorem", "n", "k", "max_abs", "sets", "hits",
//! "min_slack", "witnesses", "counterexamples", "falsified", "elapsed_ms"}`.
//! `verify` prints only the summary; `search` prints every record. `--output`
//! always receives the full report.
//!
//! Exit status: 0 success, 1 usage or input error, 2 theorem falsified,
//! 3 internal inconsistency.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sumset_core::harness::{run_campaign, CampaignReport, CampaignSpec, Finding, Span, Theorem};
use sumset_core::modular::{
    check_balandraud, erdos_selfridge_max, is_pair_sum_free, is_zero_sum_free, nonempty_subset_sums,
    selfridge_closed_form, ResidueSet,
};
use sumset_core::{
    bound_report, classify, distinct_sumset, generalized_sumset, restricted_sumset, Error, IntegerSet, Mode,
    MonicPolynomial,
};

const WORKERS_ENV: &str = "SUMSET_WORKERS";

#[derive(Parser, Debug)]
#[command(name = "sumset", version, about = "Restricted sumsets, their lower bounds and extremal sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute a sumset and compare it with its lower bound.
    Sumset(SetArgs),
    /// Decide whether a set attains the bound and name its extremal family.
    Classify(SetArgs),
    /// Run a verification campaign and print its summary.
    Verify(CampaignArgs),
    /// Run a campaign and print every witness and counterexample.
    Search(CampaignArgs),
    /// Subset sums and zero-sum-free sets modulo a prime.
    Zpz(ZpzArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Squares,
    Distinct,
    Poly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug)]
struct SetArgs {
    /// Comma-separated integers, e.g. -1,1,-4,4,6.
    #[arg(long, allow_hyphen_values = true)]
    set: String,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "squares")]
    mode: ModeArg,
    /// Coefficients c0,c1,...,1 of a monic polynomial (requires --mode poly).
    #[arg(long, allow_hyphen_values = true)]
    poly: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args, Debug)]
struct CampaignArgs {
    #[arg(long, required_unless_present = "spec", conflicts_with = "spec")]
    theorem: Option<String>,
    /// A value or an inclusive range such as 3..5.
    #[arg(long, conflicts_with = "spec")]
    n: Option<String>,
    #[arg(long, conflicts_with = "spec")]
    k: Option<String>,
    #[arg(long, conflicts_with = "spec")]
    max_abs: Option<i64>,
    #[arg(long, conflicts_with = "spec")]
    budget: Option<u64>,
    /// JSON campaign file with the fields of a campaign spec.
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Worker threads; the SUMSET_WORKERS environment variable takes precedence.
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Leave `elapsed_ms` out so reports are reproducible byte for byte.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args, Debug)]
struct ZpzArgs {
    #[arg(long)]
    p: u64,
    /// Largest size of a zero-sum-free set.
    #[arg(long, conflicts_with_all = ["set", "balandraud"])]
    selfridge: bool,
    /// Confirm the selfridge value by exhaustive search.
    #[arg(long, requires = "selfridge")]
    verify: bool,
    /// Residues, comma-separated; negative values are reduced mod p.
    #[arg(long, allow_hyphen_values = true, required_unless_present = "selfridge")]
    set: Option<String>,
    /// Check the pair-sum-free subset-sum bound for --set.
    #[arg(long, requires = "set")]
    balandraud: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

/// Failure carrying its exit status.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::TheoremFalsified(_) => 2,
            Error::Inconsistency(_) => 3,
            _ => 1,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self::usage(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Self::usage(e.to_string())
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Sumset(args) => cmd_sumset(&args),
        Command::Classify(args) => cmd_classify(&args),
        Command::Verify(args) => cmd_campaign(&args, false),
        Command::Search(args) => cmd_campaign(&args, true),
        Command::Zpz(args) => cmd_zpz(&args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("sumset: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn parse_set(text: &str) -> Result<IntegerSet, Failure> {
    text.parse::<IntegerSet>()
        .map_err(|e| Failure::usage(format!("--set: {e}")))
}

fn parse_mode(args: &SetArgs) -> Result<Mode, Failure> {
    match (args.mode, &args.poly) {
        (ModeArg::Poly, Some(p)) => p
            .parse::<MonicPolynomial>()
            .map(Mode::Poly)
            .map_err(|e| Failure::usage(format!("--poly: {e}"))),
        (ModeArg::Poly, None) => Err(Failure::usage("--mode poly requires --poly")),
        (_, Some(_)) => Err(Failure::usage("--poly is only valid with --mode poly")),
        (ModeArg::Squares, None) => Ok(Mode::Squares),
        (ModeArg::Distinct, None) => Ok(Mode::Distinct),
    }
}

fn mode_name(mode: &Mode) -> String {
    match mode {
        Mode::Squares => "squares".into(),
        Mode::Distinct => "distinct".into(),
        Mode::Poly(p) => format!("poly:{p}"),
    }
}

fn print_json(v: &Value) -> io::Result<()> {
    let mut out = io::stdout().lock();
    writeln!(out, "{v}")
}

fn join(values: impl IntoIterator<Item = i64>) -> String {
    values.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn cmd_sumset(args: &SetArgs) -> Outcome {
    let a = parse_set(&args.set)?;
    let mode = parse_mode(args)?;
    if args.n == 0 {
        return Err(Failure::usage("--n must be at least 1"));
    }
    let sums = match &mode {
        Mode::Squares => restricted_sumset(&a, args.n)?,
        Mode::Distinct => distinct_sumset(&a, args.n)?,
        Mode::Poly(p) => generalized_sumset(&vec![a.clone(); args.n], p)?,
    };
    let report = bound_report(&a, args.n, &mode)?;
    match args.format {
        Format::Json => print_json(&json!({
            "set": a.elements(),
            "n": args.n,
            "mode": mode_name(&mode),
            "sumset": sums.to_vec(),
            "size": report.actual,
            "bound": report.bound,
            "slack": report.slack,
            "equality": report.equality,
            "applicable": report.applicable,
        }))?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(io::stdout().lock());
            w.write_record(["set", "n", "mode", "sumset", "size", "bound", "slack", "equality", "applicable"])?;
            w.write_record([
                join(a.iter()),
                args.n.to_string(),
                mode_name(&mode),
                join(sums.iter()),
                report.actual.to_string(),
                report.bound.to_string(),
                report.slack.to_string(),
                report.equality.to_string(),
                report.applicable.to_string(),
            ])?;
            w.flush()?;
        }
        Format::Text => {
            println!("{sums}");
            println!(
                "size {}, bound {}{}, equality {}",
                report.actual,
                report.bound,
                if report.applicable { "" } else { " (not applicable)" },
                report.equality
            );
        }
    }
    Ok(0)
}

fn cmd_classify(args: &SetArgs) -> Outcome {
    let a = parse_set(&args.set)?;
    let mode = parse_mode(args)?;
    let c = classify(&a, args.n, &mode)?;
    let form = serde_json::to_value(&c.form).expect("form serializes");
    let report = serde_json::to_value(c.report).expect("report serializes");
    match args.format {
        Format::Json => print_json(&json!({ "form": form, "report": report }))?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(io::stdout().lock());
            w.write_record(["set", "n", "tag", "params", "size", "bound", "slack", "equality"])?;
            w.write_record([
                join(a.iter()),
                args.n.to_string(),
                c.form.tag().to_string(),
                form.get("params").map(Value::to_string).unwrap_or_default(),
                c.report.actual.to_string(),
                c.report.bound.to_string(),
                c.report.slack.to_string(),
                c.report.equality.to_string(),
            ])?;
            w.flush()?;
        }
        Format::Text => {
            println!("{}", c.form.tag());
            if let Some(params) = form.get("params") {
                println!("params {params}");
            }
            println!("size {}, bound {}, slack {}", c.report.actual, c.report.bound, c.report.slack);
        }
    }
    Ok(0)
}

fn workers(flag: Option<usize>) -> Result<Option<usize>, Failure> {
    match std::env::var(WORKERS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(Some)
            .map_err(|_| Failure::usage(format!("{WORKERS_ENV} must be a positive integer, got {v:?}"))),
        Err(_) => Ok(flag),
    }
}

fn campaign_spec(args: &CampaignArgs) -> Result<CampaignSpec, Failure> {
    let mut spec = if let Some(path) = &args.spec {
        let text = fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
        serde_json::from_str::<CampaignSpec>(&text)
            .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?
    } else {
        let theorem: Theorem = args.theorem.as_deref().unwrap_or_default().parse()?;
        let n = match &args.n {
            Some(s) => s.parse::<Span>()?,
            None => default_n(theorem),
        };
        let k = args.k.as_deref().map(str::parse::<Span>).transpose()?;
        let max_abs = args.max_abs.ok_or_else(|| Failure::usage("--max-abs is required"))?;
        let mut spec = CampaignSpec::new(theorem, n, k, max_abs);
        if let Some(b) = args.budget {
            spec.budget = b;
        }
        spec
    };
    if let Some(w) = workers(args.workers)? {
        spec.workers = w;
    }
    if args.output.is_some() {
        spec.output.clone_from(&args.output);
    }
    Ok(spec)
}

fn default_n(theorem: Theorem) -> Span {
    match theorem {
        Theorem::InverseN2 | Theorem::Nathanson => Span::single(2),
        Theorem::Balandraud | Theorem::Selfridge => Span::single(1),
        _ => Span::single(3),
    }
}

fn finding_row(f: &Finding) -> Vec<String> {
    let kind = serde_json::to_value(f.kind).expect("kind serializes");
    vec![
        kind.as_str().unwrap_or_default().to_string(),
        f.n.to_string(),
        f.k.to_string(),
        join(f.set.iter().copied()),
        f.size.to_string(),
        f.bound.to_string(),
        f.form.as_ref().map(|x| x.tag().to_string()).unwrap_or_default(),
        f.detail.clone().unwrap_or_default(),
        f.extra.as_ref().map(Value::to_string).unwrap_or_default(),
    ]
}

const CSV_HEADER: [&str; 14] = [
    "kind", "n", "k", "set", "size", "bound", "form", "detail", "extra", "sets", "hits", "min_slack", "falsified",
    "elapsed_ms",
];

fn write_csv<W: Write>(out: W, report: &CampaignReport, findings: bool, timing: bool) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    if findings {
        for f in report.witnesses.iter().chain(&report.counterexamples) {
            let mut row = finding_row(f);
            row.extend(std::iter::repeat_n(String::new(), 5));
            w.write_record(&row)?;
        }
    }
    let mut row = vec![String::new(); 9];
    row[0] = "summary".into();
    row.extend([
        report.sets.to_string(),
        report.hits.to_string(),
        report.min_slack.map(|s| s.to_string()).unwrap_or_default(),
        report.falsified().to_string(),
        if timing { report.elapsed_ms.to_string() } else { String::new() },
    ]);
    w.write_record(&row)?;
    w.flush()?;
    Ok(())
}

fn write_text<W: Write>(mut out: W, report: &CampaignReport, findings: bool) -> io::Result<()> {
    if findings {
        for f in report.witnesses.iter().chain(&report.counterexamples) {
            let set = IntegerSet::new(f.set.iter().copied()).map(|s| s.to_string()).unwrap_or_default();
            let tag = f.form.as_ref().map(|x| x.tag()).unwrap_or("-");
            write!(out, "{:?} n={} k={} {set} size={} bound={} {tag}", f.kind, f.n, f.k, f.size, f.bound)?;
            if let Some(d) = &f.detail {
                write!(out, " ({d})")?;
            }
            writeln!(out)?;
        }
    }
    writeln!(
        out,
        "{}: {} sets, {} at equality, min slack {}, {} witnesses, {} counterexamples, {} ms",
        report.spec.theorem,
        report.sets,
        report.hits,
        report.min_slack.map_or("-".into(), |s| s.to_string()),
        report.witnesses.len(),
        report.counterexamples.len(),
        report.elapsed_ms
    )?;
    writeln!(out, "{}", if report.falsified() { "FALSIFIED" } else { "holds" })
}

fn cmd_campaign(args: &CampaignArgs, full: bool) -> Outcome {
    let spec = campaign_spec(args)?;
    let report = run_campaign(&spec)?;
    let timing = !args.no_timing;
    if let Some(path) = &spec.output {
        let file = io::BufWriter::new(fs::File::create(path)?);
        match args.format {
            Format::Csv => write_csv(file, &report, true, timing)?,
            _ => {
                let mut file = file;
                file.write_all(report.to_jsonl(timing).as_bytes())?;
                file.flush()?;
            }
        }
    }
    let stdout = io::stdout().lock();
    match args.format {
        Format::Json if full => {
            let mut stdout = stdout;
            stdout.write_all(report.to_jsonl(timing).as_bytes())?;
        }
        Format::Json => {
            let mut stdout = stdout;
            writeln!(stdout, "{}", report.summary(timing))?;
        }
        Format::Csv => write_csv(stdout, &report, full, timing)?,
        Format::Text => write_text(stdout, &report, full)?,
    }
    Ok(if report.falsified() { 2 } else { 0 })
}

fn cmd_zpz(args: &ZpzArgs) -> Outcome {
    if args.selfridge {
        let value = erdos_selfridge_max(args.p, args.verify)?;
        match args.format {
            Format::Json => print_json(&json!({
                "p": args.p,
                "max_zero_sum_free": value,
                "closed_form": selfridge_closed_form(args.p),
                "verified": args.verify,
            }))?,
            Format::Csv => {
                let mut w = csv::Writer::from_writer(io::stdout().lock());
                w.write_record(["p", "max_zero_sum_free", "verified"])?;
                w.write_record([args.p.to_string(), value.to_string(), args.verify.to_string()])?;
                w.flush()?;
            }
            Format::Text => println!("{value}"),
        }
        return Ok(0);
    }
    let text = args.set.as_deref().unwrap_or_default();
    let values = text
        .trim()
        .trim_start_matches('{')
        .trim_end_matches('}')
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<i64>().map_err(|_| Failure::usage(format!("--set: bad residue {t:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    let a = ResidueSet::new(args.p, values)?;
    let sums = nonempty_subset_sums(&a);
    let mut v = json!({
        "p": args.p,
        "set": a.elements(),
        "subset_sums": sums,
        "size": sums.len(),
        "zero_sum_free": is_zero_sum_free(&a),
        "pair_sum_free": is_pair_sum_free(&a),
    });
    if args.balandraud {
        let r = check_balandraud(&a)?;
        v["bound"] = json!(r.bound);
        v["equality"] = json!(r.equality);
        v["slack"] = json!(r.slack);
    }
    match args.format {
        Format::Json => print_json(&v)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(io::stdout().lock());
            let obj = v.as_object().expect("object");
            w.write_record(obj.keys())?;
            w.write_record(obj.values().map(|x| match x {
                Value::Array(items) => items.iter().map(Value::to_string).collect::<Vec<_>>().join(" "),
                other => other.to_string(),
            }))?;
            w.flush()?;
        }
        Format::Text => {
            println!("{a}");
            println!("{} nonempty subset sums", sums.len());
            println!("zero-sum-free {}", is_zero_sum_free(&a));
            if let Some(b) = v.get("bound") {
                println!("bound {b}, slack {}", v["slack"]);
            }
        }
    }
    Ok(0)
}
