//! Command-line front end. [`run`] takes the argument list and output
//! streams so commands can be driven from tests.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use scfo_core::engine::{fixtures, render_table, run as run_protocol, verify, Protocol};
use scfo_core::search::{classify, DeckMode, SearchConfig, SearchStatus};
use scfo_core::{open_distribution, Assignment, BooleanFunction};

use crate::dsl::{default_variable_names, parse_protocol, serialize_protocol, template_text};
use crate::functions::{function_text, resolve_function};
use crate::parallel::parallel_search;
use crate::report::write_report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "scfo",
    version,
    about = "Single-cut full-open card protocols: verify, simulate and search"
)]
struct Cli {
    /// Print key=value records instead of human-readable text.
    #[arg(long, global = true)]
    porcelain: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check correctness and security over all inputs.
    Verify {
        /// A .scfo file or a built-in protocol name.
        protocol: String,
        /// Function to check against (name or truth-table hex).
        #[arg(long)]
        function: Option<String>,
    },
    /// Print the input sequence for every input.
    Table {
        protocol: String,
        #[arg(long)]
        function: Option<String>,
    },
    /// Run the protocol once.
    Simulate {
        protocol: String,
        /// Input bits, first variable first.
        #[arg(long)]
        input: String,
        #[arg(long)]
        seed: Option<u64>,
        /// Also print the face-down sequence and the cut offset.
        #[arg(long)]
        reveal: bool,
    },
    /// Exact distribution of the opened sequence for one input.
    Dist {
        protocol: String,
        #[arg(long)]
        input: String,
    },
    /// Find all protocols for a function at a fixed card count.
    Search {
        #[arg(long)]
        function: String,
        #[arg(long)]
        cards: usize,
        #[command(flatten)]
        deck: DeckArgs,
        /// Keep only one of each template and its color swap.
        #[arg(long)]
        dedup_color: bool,
        /// Report every rotation of a template separately.
        #[arg(long)]
        no_rotation_dedup: bool,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Least card count for every function of n variables.
    Classify {
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        max_cards: usize,
        #[command(flatten)]
        deck: DeckArgs,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args, Debug)]
struct DeckArgs {
    #[arg(long, value_enum, default_value_t = Deck::Committed)]
    deck: Deck,
    /// Most copies of x (and of !x) per variable.
    #[arg(long)]
    max_pairs: Option<usize>,
    /// Most constant cards per template.
    #[arg(long, default_value_t = 0)]
    constants: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Deck {
    Committed,
    Free,
}

impl DeckArgs {
    fn config(&self, cards: usize) -> SearchConfig {
        let mut cfg = SearchConfig::new(cards).with_constants(self.constants);
        if let Deck::Free = self.deck {
            cfg.deck = DeckMode::Free;
        }
        cfg.max_pair_multiplicity = self.max_pairs;
        cfg
    }
}

/// A failure that ends the command; the string goes to stderr.
struct Fail(i32, String);

fn usage(msg: impl Into<String>) -> Fail {
    Fail(EXIT_USAGE, msg.into())
}

type Out<'a> = &'a mut dyn Write;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: Out<'_>, err: Out<'_>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(Fail(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn io(e: std::io::Error) -> Fail {
    usage(format!("write failed: {e}"))
}

fn dispatch(cli: &Cli, out: Out<'_>, err: Out<'_>) -> Result<i32, Fail> {
    let porcelain = cli.porcelain;
    match &cli.command {
        Command::Verify { protocol, function } => {
            cmd_verify(protocol, function.as_deref(), porcelain, out)
        }
        Command::Table { protocol, function } => {
            cmd_table(protocol, function.as_deref(), porcelain, out)
        }
        Command::Simulate {
            protocol,
            input,
            seed,
            reveal,
        } => cmd_simulate(protocol, input, *seed, *reveal, porcelain, out),
        Command::Dist { protocol, input } => cmd_dist(protocol, input, porcelain, out),
        Command::Search {
            function,
            cards,
            deck,
            dedup_color,
            no_rotation_dedup,
            limit,
            jobs,
        } => {
            let mut cfg = deck.config(*cards);
            cfg.dedup_color_complement = *dedup_color;
            cfg.dedup_template_rotation = !no_rotation_dedup;
            cfg.limit = *limit;
            cmd_search(function, &cfg, *jobs, porcelain, out, err)
        }
        Command::Classify {
            vars,
            max_cards,
            deck,
            out: path,
        } => cmd_classify(*vars, *max_cards, &deck.config(1), path, porcelain, out),
    }
}

struct Loaded {
    protocol: Protocol,
    variables: Vec<String>,
    function: Option<BooleanFunction>,
}

/// An existing file is parsed as `.scfo`; anything else must be a
/// built-in protocol name.
fn load(source: &str) -> Result<Loaded, Fail> {
    let path = Path::new(source);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|e| usage(format!("{source}: {e}")))?;
        let doc = parse_protocol(&text)
            .map_err(|e| usage(format!("{source}:{e} [{}]", e.kind.code())))?;
        return Ok(Loaded {
            protocol: doc.protocol,
            variables: doc.variables,
            function: doc.function.map(|f| f.function),
        });
    }
    match fixtures::builtin_protocol(source) {
        Some((protocol, f)) => Ok(Loaded {
            variables: default_variable_names(protocol.arity()),
            protocol,
            function: Some(f),
        }),
        None => Err(usage(format!(
            "{source}: no such file or built-in protocol (built-ins: {})",
            fixtures::PROTOCOL_NAMES.join(", ")
        ))),
    }
}

fn pick_function(loaded: &Loaded, flag: Option<&str>) -> Result<BooleanFunction, Fail> {
    match flag {
        Some(text) => {
            resolve_function(text, Some(loaded.protocol.arity())).map_err(|e| usage(e.to_string()))
        }
        None => loaded
            .function
            .clone()
            .ok_or_else(|| usage("no function given: add a function line or pass --function")),
    }
}

fn parse_input(loaded: &Loaded, text: &str) -> Result<Assignment, Fail> {
    let a: Assignment = text.parse().map_err(|e| usage(format!("--input: {e}")))?;
    if a.len() != loaded.protocol.arity() {
        return Err(usage(format!(
            "--input has {} bits, protocol has {} variables",
            a.len(),
            loaded.protocol.arity()
        )));
    }
    Ok(a)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_verify(
    source: &str,
    function: Option<&str>,
    porcelain: bool,
    out: Out<'_>,
) -> Result<i32, Fail> {
    let loaded = load(source)?;
    let f = pick_function(&loaded, function)?;
    let report = verify(&loaded.protocol, &f).map_err(|e| usage(e.to_string()))?;
    let p = &loaded.protocol;
    let template = template_text(p.template(), &loaded.variables);
    if porcelain {
        writeln!(out, "protocol={}", p.name()).map_err(io)?;
        writeln!(out, "function={}", function_text(&f)).map_err(io)?;
        writeln!(out, "template={template}").map_err(io)?;
        writeln!(out, "cards={}", p.len()).map_err(io)?;
        writeln!(out, "constants={}", report.constants).map_err(io)?;
        for row in &report.rows {
            let decoded = row.decoded.map_or("none".to_string(), |b| b.to_string());
            writeln!(
                out,
                "row={} expected={} word={} necklace={} decoded={decoded}",
                row.assignment, row.expected, row.word, row.necklace
            )
            .map_err(io)?;
        }
        for reason in report.failure_reasons() {
            writeln!(out, "failure={reason}").map_err(io)?;
        }
        writeln!(out, "correct={}", report.correct).map_err(io)?;
        writeln!(out, "secure={}", report.secure).map_err(io)?;
        writeln!(out, "passed={}", report.passed()).map_err(io)?;
    } else {
        writeln!(out, "protocol: {}", p.name()).map_err(io)?;
        writeln!(out, "function: {}", function_text(&f)).map_err(io)?;
        writeln!(out, "template: {template}").map_err(io)?;
        writeln!(out, "cards: {} ({} constant)", p.len(), report.constants).map_err(io)?;
        for row in &report.rows {
            let decoded = row.decoded.map_or("?".to_string(), |b| b.to_string());
            writeln!(
                out,
                "{} | {} | {} -> {decoded}",
                row.assignment, row.expected, row.word
            )
            .map_err(io)?;
        }
        for reason in report.failure_reasons() {
            writeln!(out, "failure: {reason}").map_err(io)?;
        }
        writeln!(out, "correct: {}", yes_no(report.correct)).map_err(io)?;
        writeln!(out, "secure: {}", yes_no(report.secure)).map_err(io)?;
        writeln!(
            out,
            "result: {}",
            if report.passed() { "PASS" } else { "FAIL" }
        )
        .map_err(io)?;
    }
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_FAILED
    })
}

fn cmd_table(
    source: &str,
    function: Option<&str>,
    porcelain: bool,
    out: Out<'_>,
) -> Result<i32, Fail> {
    let loaded = load(source)?;
    let f = pick_function(&loaded, function)?;
    let rows = render_table(&loaded.protocol, &f).map_err(|e| usage(e.to_string()))?;
    for row in rows {
        if porcelain {
            writeln!(
                out,
                "input={} value={} word={}",
                row.assignment, row.value, row.word
            )
            .map_err(io)?;
        } else {
            writeln!(out, "{row}").map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_simulate(
    source: &str,
    input: &str,
    seed: Option<u64>,
    reveal: bool,
    porcelain: bool,
    out: Out<'_>,
) -> Result<i32, Fail> {
    let loaded = load(source)?;
    let a = parse_input(&loaded, input)?;
    let mut rng = match seed {
        Some(s) => ChaCha8Rng::seed_from_u64(s),
        None => ChaCha8Rng::from_entropy(),
    };
    let trace = run_protocol(&loaded.protocol, &a, &mut rng).map_err(|e| usage(e.to_string()))?;
    let sep = if porcelain { "=" } else { ": " };
    writeln!(out, "input{sep}{}", trace.assignment).map_err(io)?;
    if reveal {
        writeln!(out, "hidden{sep}{}", trace.hidden).map_err(io)?;
        writeln!(out, "shift{sep}{}", trace.shift).map_err(io)?;
    }
    writeln!(out, "opened{sep}{}", trace.opened).map_err(io)?;
    writeln!(out, "output{sep}{}", trace.output).map_err(io)?;
    Ok(EXIT_OK)
}

fn cmd_dist(source: &str, input: &str, porcelain: bool, out: Out<'_>) -> Result<i32, Fail> {
    let loaded = load(source)?;
    let a = parse_input(&loaded, input)?;
    let word = loaded
        .protocol
        .template()
        .instantiate(&a)
        .map_err(|e| usage(e.to_string()))?;
    for (w, p) in open_distribution(&word).iter() {
        if porcelain {
            writeln!(out, "word={w} probability={p}").map_err(io)?;
        } else {
            writeln!(out, "{w} {p}").map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

fn status_text(s: SearchStatus) -> &'static str {
    match s {
        SearchStatus::Complete => "complete",
        SearchStatus::LimitReached => "limit-reached",
        SearchStatus::BudgetExceeded => "budget-exceeded",
    }
}

fn cmd_search(
    function: &str,
    cfg: &SearchConfig,
    jobs: usize,
    porcelain: bool,
    out: Out<'_>,
    err: Out<'_>,
) -> Result<i32, Fail> {
    let f = resolve_function(function, None).map_err(|e| usage(e.to_string()))?;
    if jobs == 0 {
        return Err(usage("--jobs must be at least 1"));
    }
    let result = parallel_search(&f, cfg, jobs).map_err(|e| usage(e.to_string()))?;
    let names = default_variable_names(f.arity());
    let text = function_text(&f);
    for (i, p) in result.protocols.iter().enumerate() {
        if porcelain {
            write!(
                out,
                "protocol={} template={}",
                p.name(),
                template_text(p.template(), &names)
            )
            .map_err(io)?;
            for (necklace, bit) in p.rule().entries() {
                write!(out, " output{bit}={necklace}").map_err(io)?;
            }
            writeln!(out).map_err(io)?;
        } else {
            if i > 0 {
                writeln!(out).map_err(io)?;
            }
            writeln!(out, "{}function {text}", serialize_protocol(p)).map_err(io)?;
        }
    }
    let s = &result.stats;
    if porcelain {
        writeln!(out, "found={}", result.protocols.len()).map_err(io)?;
        writeln!(out, "examined={}", s.examined).map_err(io)?;
        writeln!(out, "pruned={}", s.pruned).map_err(io)?;
        writeln!(out, "status={}", status_text(result.status)).map_err(io)?;
    } else {
        if !result.protocols.is_empty() {
            writeln!(out).map_err(io)?;
        }
        writeln!(out, "# found: {}", result.protocols.len()).map_err(io)?;
        writeln!(out, "# examined: {}", s.examined).map_err(io)?;
        writeln!(out, "# pruned: {}", s.pruned).map_err(io)?;
        writeln!(out, "# status: {}", status_text(result.status)).map_err(io)?;
    }
    if let Some(elapsed) = s.elapsed {
        let _ = writeln!(err, "elapsed: {:.3}s", elapsed.as_secs_f64());
    }
    Ok(if result.protocols.is_empty() {
        EXIT_FAILED
    } else {
        EXIT_OK
    })
}

fn cmd_classify(
    n: usize,
    max_cards: usize,
    cfg: &SearchConfig,
    path: &Path,
    porcelain: bool,
    out: Out<'_>,
) -> Result<i32, Fail> {
    let report = classify(n, max_cards, cfg).map_err(|e| usage(e.to_string()))?;
    fs::write(path, write_report(&report))
        .map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let feasible = report
        .records
        .iter()
        .filter(|r| r.minimal_cards.is_some())
        .count();
    let sep = if porcelain { "=" } else { ": " };
    writeln!(out, "functions{sep}{}", report.records.len()).map_err(io)?;
    writeln!(out, "feasible{sep}{feasible}").map_err(io)?;
    for m in 1..=max_cards {
        let at = report
            .records
            .iter()
            .filter(|r| r.minimal_cards == Some(m))
            .count();
        if at > 0 {
            writeln!(
                out,
                "{}{sep}{at}",
                if porcelain {
                    format!("cards{m}")
                } else {
                    format!("cards {m}")
                }
            )
            .map_err(io)?;
        }
    }
    writeln!(out, "status{sep}{}", status_text(report.status)).map_err(io)?;
    Ok(EXIT_OK)
}
