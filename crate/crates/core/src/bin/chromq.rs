//! `chromq`: expansions, heap classes and identity suites from the command line.
//!
//! Exit status is 0 on success, 1 on usage or validation errors, and 2
//! when a cross-check disagrees or a verification check fails.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use chromq::chromatic::{coeff_in_basis, x_oracle, x_via_words, ExpansionReport, Statistic};
use chromq::heaps::{enumerate_classes, heap_svg, HeapClass};
use chromq::symfunc::{qsym_to_sym, Basis};
use chromq::verify::{self, Scope, Status, Suite};
use chromq::word::multinomial;
use chromq::{Error, UnitIntervalOrder};

#[derive(Parser)]
#[command(name = "chromq", version, about = "Chromatic quasisymmetric functions of natural unit interval orders")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand X_P(x, q; mu) in one basis.
    Expand(ExpandArgs),
    /// List heaps of a fixed type grouped into flip classes.
    Classes(ClassesArgs),
    /// Run identity suites.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct Instance {
    /// Weakly increasing sequence m, e.g. 2,3,3.
    #[arg(long)]
    poset: String,
    /// Type vector, one entry per vertex; defaults to all ones.
    #[arg(long)]
    mu: Option<String>,
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    /// Output file (or directory for SVG); relative paths resolve against CHROMQ_OUT_DIR.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, env = "CHROMQ_OUT_DIR", hide_env_values = true)]
    out_dir: Option<PathBuf>,
    /// Refuse instances of larger total degree.
    #[arg(long, default_value_t = 10)]
    max_degree: usize,
}

#[derive(Args)]
struct ExpandArgs {
    #[command(flatten)]
    instance: Instance,
    #[arg(long, value_enum, default_value_t = BasisArg::E)]
    basis: BasisArg,
    /// Also compare against the colouring oracle in this many variables.
    #[arg(long)]
    colors: Option<usize>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct ClassesArgs {
    #[command(flatten)]
    instance: Instance,
    /// Write one SVG per heap and an index into this directory.
    #[arg(long)]
    svg: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "all")]
    suite: String,
    /// Sweep every order with at most this many vertices (ignored with --poset).
    #[arg(long, default_value_t = 4)]
    max_n: usize,
    #[arg(long)]
    poset: Option<String>,
    #[arg(long)]
    mu: Option<String>,
    #[command(flatten)]
    common: Common,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    F,
    P,
    S,
    E,
    M,
    H,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Self {
        match b {
            BasisArg::F => Basis::F,
            BasisArg::P => Basis::P,
            BasisArg::S => Basis::S,
            BasisArg::E => Basis::E,
            BasisArg::M => Basis::M,
            BasisArg::H => Basis::H,
        }
    }
}

/// Failure with its exit status.
struct Fail(u8, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Disagreement(_)) { 2 } else { 1 };
        Fail(code, e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Fail {
    Fail(1, msg.into())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Expand(a) => cmd_expand(a),
        Command::Classes(a) => cmd_classes(a),
        Command::Verify(a) => cmd_verify(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail(code, msg)) => {
            eprintln!("chromq: {msg}");
            ExitCode::from(code)
        }
    }
}

fn parse_instance(poset: &str, mu: Option<&str>, max_degree: usize) -> Result<(UnitIntervalOrder, Vec<usize>), Fail> {
    let p: UnitIntervalOrder = poset.parse()?;
    let mu = match mu {
        Some(s) => chromq::poset::parse_list(s)?,
        None => vec![1; p.n()],
    };
    chromq::poset::check_type(&p, &mu)?;
    let d: usize = mu.iter().sum();
    if d > max_degree {
        return Err(usage(format!(
            "total degree {d} exceeds the limit {max_degree}; pass --max-degree {d} to run it anyway"
        )));
    }
    Ok((p, mu))
}

fn resolve(common: &Common, path: &Path) -> PathBuf {
    match &common.out_dir {
        Some(dir) if path.is_relative() => dir.join(path),
        _ => path.to_path_buf(),
    }
}

/// Send text to `--out` (resolved) or stdout.
fn emit(common: &Common, text: &str) -> Result<(), Fail> {
    match &common.out {
        Some(path) => {
            let path = resolve(common, path);
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                std::fs::create_dir_all(parent).map_err(|e| usage(format!("{}: {e}", parent.display())))?;
            }
            std::fs::write(&path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| usage(e.to_string()))
        }
    }
}

fn cmd_expand(a: ExpandArgs) -> Result<(), Fail> {
    let (p, mu) = parse_instance(&a.instance.poset, a.instance.mu.as_deref(), a.common.max_degree)?;
    let report = coeff_in_basis(&p, &mu, a.basis.into())?;
    if let Some(colors) = a.colors {
        let oracle = qsym_to_sym(&x_oracle(&p, &mu, colors, Statistic::Asc)?)?;
        if oracle != x_via_words(&p, &mu)? {
            return Err(Fail(2, format!("oracle with {colors} colours disagrees with the word expansion")));
        }
    }
    let text = match a.common.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("serialisable") + "\n",
        Format::Csv => report_csv(&report),
        Format::Pretty => report_pretty(&report),
        Format::Svg => return Err(usage("expand has no svg output; use classes --svg")),
    };
    emit(&a.common, &text)
}

fn report_csv(r: &ExpansionReport) -> String {
    let top = r.max_q_degree();
    let mut s = String::from("partition");
    for k in 0..=top {
        let _ = write!(s, ",q^{k}");
    }
    s.push_str(",source\n");
    for t in &r.terms {
        let _ = write!(s, "\"{}\"", t.partition);
        for k in 0..=top {
            let c = t.poly.coeff(k);
            if c.is_integer() {
                let _ = write!(s, ",{}", c.numer());
            } else {
                let _ = write!(s, ",{}/{}", c.numer(), c.denom());
            }
        }
        let _ = writeln!(s, ",{}", source_name(t.source));
    }
    s
}

fn source_name(s: chromq::chromatic::Source) -> String {
    serde_json::to_value(s).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default()
}

fn report_pretty(r: &ExpansionReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "P({}) mu=({}) degree {} basis {}", r.poset, chromq_join(&r.mu), r.degree, r.basis.letter());
    let _ = writeln!(s, "{}", r.normalization);
    let width = r.terms.iter().map(|t| t.partition.to_string().len()).max().unwrap_or(0);
    for t in &r.terms {
        let _ = writeln!(s, "  {:<width$}  {}  [{}]", t.partition.to_string(), t.poly, source_name(t.source));
    }
    let checks: Vec<String> = r.cross_checks.iter().map(|&c| source_name(c)).collect();
    let _ = writeln!(s, "cross-checked: {}", checks.join(", "));
    let _ = writeln!(s, "nonnegative: {}", r.nonnegative);
    s
}

fn chromq_join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn cmd_classes(a: ClassesArgs) -> Result<(), Fail> {
    let (p, mu) = parse_instance(&a.instance.poset, a.instance.mu.as_deref(), a.common.max_degree)?;
    let classes = enumerate_classes(&p, &mu)?;
    let words = multinomial(&mu);
    let heaps: usize = classes.iter().map(|c| c.members.len()).sum();
    let svg_dir = match (a.common.format, &a.svg) {
        (_, Some(dir)) => Some(resolve(&a.common, dir)),
        (Format::Svg, None) => Some(match &a.common.out {
            Some(o) => resolve(&a.common, o),
            None => a.common.out_dir.clone().unwrap_or_else(|| PathBuf::from(".")),
        }),
        _ => None,
    };
    if let Some(dir) = &svg_dir {
        write_gallery(&p, &classes, dir)?;
    }
    let text = match a.common.format {
        Format::Json => {
            let listing: Vec<_> = classes
                .iter()
                .map(|c| {
                    json!({
                        "representative": c.representative().to_string(),
                        "asc": c.asc,
                        "heaps": c.members.iter().map(|h| h.word().to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let doc = json!({
                "poset": p.to_string(),
                "mu": mu,
                "words": words.to_string(),
                "heaps": heaps,
                "classes": listing,
            });
            serde_json::to_string_pretty(&doc).expect("serialisable") + "\n"
        }
        Format::Csv => {
            let mut s = String::from("class,representative,asc,heap\n");
            for (i, c) in classes.iter().enumerate() {
                for h in &c.members {
                    let _ = writeln!(s, "{},{},{},{}", i + 1, c.representative(), c.asc, h.word());
                }
            }
            s
        }
        Format::Pretty | Format::Svg => {
            let mut s = format!("words={words} heaps={heaps} classes={}\n", classes.len());
            let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
            for c in &classes {
                *sizes.entry(c.members.len()).or_default() += 1;
            }
            let hist: Vec<String> = sizes.iter().map(|(k, v)| format!("{k}:{v}")).collect();
            let _ = writeln!(s, "class sizes (size:count) {}", hist.join(" "));
            for (i, c) in classes.iter().enumerate() {
                let members: Vec<String> = c.members.iter().map(|h| h.word().to_string()).collect();
                let _ = writeln!(s, "class {} asc={} heaps: {}", i + 1, c.asc, members.join(" "));
            }
            s
        }
    };
    if a.common.format == Format::Svg {
        let mut out = std::io::stdout().lock();
        return out.write_all(text.as_bytes()).map_err(|e| usage(e.to_string()));
    }
    emit(&a.common, &text)
}

/// `class<i>-heap<j>.svg` per heap, plus `index.tsv` mapping classes to files.
fn write_gallery(p: &UnitIntervalOrder, classes: &[HeapClass], dir: &Path) -> Result<(), Fail> {
    let io = |e: std::io::Error| usage(format!("{}: {e}", dir.display()));
    std::fs::create_dir_all(dir).map_err(io)?;
    let mut index = String::from("class\tasc\theap\tfile\n");
    for (i, c) in classes.iter().enumerate() {
        for (j, h) in c.members.iter().enumerate() {
            let name = format!("class{}-heap{}.svg", i + 1, j + 1);
            std::fs::write(dir.join(&name), heap_svg(p, h)).map_err(io)?;
            let _ = writeln!(index, "{}\t{}\t{}\t{}", i + 1, c.asc, h.word(), name);
        }
    }
    std::fs::write(dir.join("index.tsv"), index).map_err(io)
}

fn cmd_verify(a: VerifyArgs) -> Result<(), Fail> {
    let suite: Suite = a.suite.parse()?;
    let scope = match &a.poset {
        Some(poset) => {
            let (p, mu) = parse_instance(poset, a.mu.as_deref(), a.common.max_degree)?;
            Scope::single(p, Some(mu))
        }
        None => {
            if a.mu.is_some() {
                return Err(usage("--mu needs --poset"));
            }
            if a.max_n > a.common.max_degree {
                return Err(usage(format!(
                    "--max-n {} exceeds the degree limit {}; raise --max-degree to run it",
                    a.max_n, a.common.max_degree
                )));
            }
            Scope::sweep(a.max_n)
        }
    };
    let results = verify::run(suite, &scope);
    let failed = results.iter().filter(|r| r.status == Status::Fail).count();
    let text = match a.common.format {
        Format::Json => serde_json::to_string_pretty(&results).expect("serialisable") + "\n",
        Format::Csv => {
            let mut s = String::from("suite,instance,status,detail\n");
            for r in &results {
                let status = serde_json::to_value(r.status).expect("serialisable");
                let _ =
                    writeln!(s, "{},\"{}\",{},\"{}\"", r.suite, r.instance, status.as_str().unwrap_or(""), r.detail);
            }
            s
        }
        Format::Pretty => {
            let mut s = String::new();
            for r in &results {
                let _ = writeln!(s, "{r}");
            }
            let _ = writeln!(s, "{} checks, {} failed", results.len(), failed);
            s
        }
        Format::Svg => return Err(usage("verify has no svg output")),
    };
    emit(&a.common, &text)?;
    if failed > 0 {
        return Err(Fail(2, format!("{failed} checks failed")));
    }
    Ok(())
}
