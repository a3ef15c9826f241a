//! Command-line front end. Exit status: 0 on success or pass, 1 when a check
//! fails (the counterexample is printed), 2 on usage or input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::{
    leveled_outerplanar, outerplanar_u, path_graph, plus4_gadget, stacked_triangulation,
    verify_coloring_budgeted, Coloring, Graph,
};
use crate::rational::{parse_rational, Rational};
use crate::repetitions::{is_d_directed, is_power_free, Verdict};
use crate::search::{
    extend_word_search, parse_count, pi_k_exact, tree_witness_search, SearchBudget,
};
use crate::suite;
use crate::treecert::{certify_morphic_tree_coloring, suggested_factor_len, BranchCheckSpec};
use crate::words::{
    generate_powerfree, parse_digits, render_digits, Morphism, PowerFreeSpec, LOOKAHEAD_MARGIN,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "nonrep",
    version,
    about = "Non-repetitive colorings avoiding squares of large period"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate and check words.
    #[command(subcommand)]
    Word(WordCommand),
    /// Apply uniform morphisms.
    #[command(subcommand)]
    Morphism(MorphismCommand),
    /// Certify morphic level colorings of trees.
    #[command(subcommand)]
    Treecert(TreecertCommand),
    /// Generate graphs and verify colorings.
    #[command(subcommand)]
    Graph(GraphCommand),
    /// Exact and exploratory searches.
    #[command(subcommand)]
    Search(SearchCommand),
    /// Acceptance checks.
    #[command(subcommand)]
    Suite(SuiteCommand),
}

#[derive(Args, Debug)]
struct FreenessArgs {
    /// Exponent bound as an exact rational `a/b`.
    #[arg(long, value_parser = rational_arg)]
    beta: Rational,
    /// Forbid exponents strictly above the bound (the `β⁺` form).
    #[arg(long)]
    strict: bool,
    /// Smallest period that counts.
    #[arg(long, default_value_t = 1)]
    n: usize,
}

#[derive(Args, Debug)]
struct WordInput {
    /// Word as digits, e.g. `0120`.
    word: Option<String>,
    /// Read the word from a file instead.
    #[arg(long, conflicts_with = "word")]
    input: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum WordCommand {
    /// Lexicographically least power-free word of the given length.
    Gen {
        #[arg(long)]
        length: usize,
        #[arg(long, default_value_t = 3)]
        alphabet: u8,
        /// Exponent bound; defaults to the `(7/4⁺, 1)` ternary bound.
        #[arg(long, value_parser = rational_arg)]
        beta: Option<Rational>,
        #[arg(long)]
        strict: bool,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check `(β, n)`-freeness.
    CheckFree {
        #[command(flatten)]
        free: FreenessArgs,
        #[command(flatten)]
        input: WordInput,
        #[arg(long)]
        json: bool,
    },
    /// Check `d`-directedness.
    CheckDirected {
        #[arg(long)]
        d: usize,
        #[command(flatten)]
        input: WordInput,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
struct MorphismChoice {
    /// Built-in morphism: `g2` or `g5`.
    #[arg(long, conflicts_with = "table")]
    morphism: Option<String>,
    /// File with one `symbol -> image` line per source symbol.
    #[arg(long)]
    table: Option<PathBuf>,
}

impl MorphismChoice {
    fn load(&self) -> Result<(String, Morphism)> {
        match (&self.morphism, &self.table) {
            (Some(name), _) => Morphism::by_name(name)
                .map(|m| (name.clone(), m))
                .ok_or_else(|| {
                    Error::Config(format!("unknown morphism `{name}` (expected g2 or g5)"))
                }),
            (None, Some(path)) => {
                let m = Morphism::parse_text(&read_text(path)?)?;
                Ok((path.display().to_string(), m))
            }
            (None, None) => Err(Error::Config("pass --morphism or --table".into())),
        }
    }
}

#[derive(Subcommand, Debug)]
enum MorphismCommand {
    /// Print the image of a word.
    Apply {
        #[command(flatten)]
        choice: MorphismChoice,
        #[command(flatten)]
        input: WordInput,
    },
}

#[derive(Subcommand, Debug)]
enum TreecertCommand {
    /// Run every certificate check and print the certificate as JSON.
    Certify {
        #[command(flatten)]
        choice: MorphismChoice,
        /// Smallest forbidden square period on tree paths.
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = rational_arg)]
        beta: Rational,
        /// Treat the bound as non-strict (exponent `>= β` forbidden).
        #[arg(long)]
        non_strict: bool,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        /// Source factor length; defaults to the cheapest admissible one.
        #[arg(long)]
        factor_len: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, clap::ValueEnum)]
enum Family {
    Path,
    Stacked,
    Outeru,
    Plus4,
    Leveled,
}

#[derive(Subcommand, Debug)]
enum GraphCommand {
    /// Generate a graph family member as JSON.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        /// Vertex count (path).
        #[arg(long)]
        n: Option<usize>,
        /// Index (stacked, outeru).
        #[arg(long)]
        i: Option<usize>,
        /// Matching size (plus4).
        #[arg(long)]
        m: Option<usize>,
        /// Graph file used for every copy of `H` (plus4); default `K_1`.
        #[arg(long)]
        h: Option<PathBuf>,
        /// Number of levels (leveled).
        #[arg(long)]
        levels: Option<usize>,
        /// Child path length (leveled).
        #[arg(long)]
        path_len: Option<usize>,
        /// Largest vertex count allowed (leveled).
        #[arg(long, value_parser = count_arg, default_value = "1e6")]
        max_vertices: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check that no path carries a square of period `>= k`.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        /// JSON array of colors indexed by vertex.
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        k: usize,
        /// Longest path checked, in vertices; default: all paths.
        #[arg(long)]
        max_path: Option<usize>,
        #[arg(long, value_parser = count_arg)]
        budget_paths: Option<u64>,
    },
}

#[derive(Args, Debug)]
struct BudgetArgs {
    /// Node limit; default from NONREP_BUDGET_NODES, else 1e8.
    #[arg(long, value_parser = count_arg)]
    budget_nodes: Option<u64>,
    /// Wall-clock limit in whole seconds.
    #[arg(long)]
    time_limit: Option<u64>,
}

impl BudgetArgs {
    fn budget(&self, max_colors: usize) -> Result<SearchBudget> {
        let nodes = self
            .budget_nodes
            .unwrap_or_else(|| SearchBudget::from_env().node_limit);
        SearchBudget::new(nodes, self.time_limit.map(Duration::from_secs), max_colors)
            .map_err(|_| Error::Config("budgets must be positive".into()))
    }
}

#[derive(Subcommand, Debug)]
enum SearchCommand {
    /// Exact `π_k` of a small graph.
    Pik {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 255)]
        max_colors: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Longest word avoiding squares of period `>= k`.
    Word {
        #[arg(long)]
        alphabet: u8,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        length: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Smallest rooted tree needing more than `colors` colors.
    TreeWitness {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        colors: usize,
        #[arg(long)]
        max_depth: usize,
        #[arg(long)]
        max_arity: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Subcommand, Debug)]
enum SuiteCommand {
    /// Run the acceptance criteria.
    Run {
        /// Comma-separated criterion ids or keys.
        #[arg(long)]
        only: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

fn rational_arg(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn count_arg(s: &str) -> std::result::Result<u64, String> {
    parse_count(s).ok_or_else(|| format!("expected a count such as 5000 or 1e8, got `{s}`"))
}

fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
}

fn read_word(input: &WordInput) -> Result<Vec<u8>> {
    let text = match (&input.word, &input.input) {
        (Some(w), _) => w.clone(),
        (None, Some(path)) => read_text(path)?,
        (None, None) => return Err(Error::Config("pass a word or --input".into())),
    };
    parse_digits(text.trim())
}

fn read_graph(path: &Path) -> Result<Graph> {
    Graph::from_json(&read_text(path)?)
}

fn to_json(value: &impl Serialize) -> Result<String> {
    Ok(serde_json::to_string_pretty(&serde_json::to_value(value)?)?)
}

struct Io<'a> {
    out: &'a mut dyn Write,
}

impl Io<'_> {
    fn emit(&mut self, text: &str, output: Option<&Path>) -> Result<()> {
        match output {
            Some(path) => std::fs::write(path, format!("{text}\n"))?,
            None => writeln!(self.out, "{text}")?,
        }
        Ok(())
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
        }
    };
    let mut io = Io { out };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn verdict_code<T>(v: &Verdict<T>) -> i32 {
    if v.is_pass() {
        EXIT_PASS
    } else {
        EXIT_CHECK_FAILED
    }
}

#[derive(Serialize)]
struct CheckReport {
    passed: bool,
    counterexample: Option<String>,
}

fn report_check<T: std::fmt::Display>(io: &mut Io, v: &Verdict<T>, json: bool) -> Result<i32> {
    let counterexample = v.failure().map(|f| f.to_string());
    if json {
        let report = CheckReport {
            passed: v.is_pass(),
            counterexample,
        };
        io.emit(&to_json(&report)?, None)?;
    } else {
        match counterexample {
            None => io.emit("pass", None)?,
            Some(cx) => io.emit(&format!("fail: {cx}"), None)?,
        }
    }
    Ok(verdict_code(v))
}

fn dispatch(command: Command, io: &mut Io) -> Result<i32> {
    match command {
        Command::Word(cmd) => word(cmd, io),
        Command::Morphism(MorphismCommand::Apply { choice, input }) => {
            let (_, m) = choice.load()?;
            let image = m.apply_symbols(&read_word(&input)?)?;
            io.emit(&render_digits(&image), None)?;
            Ok(EXIT_PASS)
        }
        Command::Treecert(cmd) => treecert(cmd, io),
        Command::Graph(cmd) => graph(cmd, io),
        Command::Search(cmd) => search(cmd, io),
        Command::Suite(SuiteCommand::Run { only, json }) => {
            let outcomes = suite::run_suite(only.as_deref());
            if outcomes.is_empty() {
                return Err(Error::Config(format!(
                    "no criterion matches `{}`",
                    only.unwrap_or_default()
                )));
            }
            let text = if json {
                suite::render_json(&outcomes)
            } else {
                suite::render_table(&outcomes)
            };
            io.emit(text.trim_end(), None)?;
            Ok(if outcomes.iter().all(|o| o.passed) {
                EXIT_PASS
            } else {
                EXIT_CHECK_FAILED
            })
        }
    }
}

fn word(cmd: WordCommand, io: &mut Io) -> Result<i32> {
    match cmd {
        WordCommand::Gen {
            length,
            alphabet,
            beta,
            strict,
            n,
            output,
        } => {
            let spec = match beta {
                Some(beta) => PowerFreeSpec::new(beta, strict, n)?,
                None => PowerFreeSpec::dejean_ternary(),
            };
            match generate_powerfree(alphabet, &spec, length, LOOKAHEAD_MARGIN) {
                Some(w) => {
                    io.emit(&w.to_string(), output.as_deref())?;
                    Ok(EXIT_PASS)
                }
                None => Err(Error::Config(format!(
                    "no word of length {} avoids {spec} over {alphabet} letters",
                    length + LOOKAHEAD_MARGIN
                ))),
            }
        }
        WordCommand::CheckFree { free, input, json } => {
            let spec = PowerFreeSpec::new(free.beta, free.strict, free.n)?;
            let w = read_word(&input)?;
            report_check(io, &is_power_free(&w, &spec), json)
        }
        WordCommand::CheckDirected { d, input, json } => {
            if d == 0 {
                return Err(Error::Config("d must be at least 1".into()));
            }
            let w = read_word(&input)?;
            report_check(io, &is_d_directed(&w, d), json)
        }
    }
}

fn treecert(cmd: TreecertCommand, io: &mut Io) -> Result<i32> {
    let TreecertCommand::Certify {
        choice,
        k,
        beta,
        non_strict,
        n,
        d,
        factor_len,
        output,
    } = cmd;
    let (name, m) = choice.load()?;
    let free = PowerFreeSpec::new(beta, !non_strict, n)?;
    let spec = BranchCheckSpec::new(k, free, d).map_err(|e| Error::Config(e.to_string()))?;
    let factor_len = factor_len.unwrap_or_else(|| suggested_factor_len(&m, &spec));
    let cert = certify_morphic_tree_coloring(&name, &m, &spec, factor_len)?;
    io.emit(&cert.to_json()?, output.as_deref())?;
    Ok(if cert.overall {
        EXIT_PASS
    } else {
        EXIT_CHECK_FAILED
    })
}

fn required(value: Option<usize>, flag: &str, family: &str) -> Result<usize> {
    value.ok_or_else(|| Error::Config(format!("--{flag} is required for the {family} family")))
}

fn graph(cmd: GraphCommand, io: &mut Io) -> Result<i32> {
    match cmd {
        GraphCommand::Gen {
            family,
            n,
            i,
            m,
            h,
            levels,
            path_len,
            max_vertices,
            output,
        } => {
            let g = match family {
                Family::Path => path_graph(required(n, "n", "path")?)?,
                Family::Stacked => stacked_triangulation(required(i, "i", "stacked")?),
                Family::Outeru => outerplanar_u(required(i, "i", "outeru")?),
                Family::Plus4 => {
                    let h = match h {
                        Some(path) => read_graph(&path)?,
                        None => Graph::new(1),
                    };
                    plus4_gadget(&h, required(m, "m", "plus4")?)?
                }
                Family::Leveled => leveled_outerplanar(
                    required(levels, "levels", "leveled")?,
                    required(path_len, "path-len", "leveled")?,
                    usize::try_from(max_vertices).unwrap_or(usize::MAX),
                )?,
            };
            io.emit(&g.to_json(), output.as_deref())?;
            Ok(EXIT_PASS)
        }
        GraphCommand::Verify {
            graph,
            coloring,
            k,
            max_path,
            budget_paths,
        } => {
            let g = read_graph(&graph)?;
            let c = Coloring::from_json(&read_text(&coloring)?)?;
            let max_path = max_path.unwrap_or(g.vertex_count().max(2 * k));
            let report =
                verify_coloring_budgeted(&g, &c, k, max_path, budget_paths.unwrap_or(u64::MAX))?;
            #[derive(Serialize)]
            struct VerifyReport {
                passed: bool,
                truncated: bool,
                paths_checked: u64,
                path: Option<Vec<usize>>,
                period: Option<usize>,
            }
            let (path, period) = match &report.verdict {
                Verdict::Pass => (None, None),
                Verdict::Fail((path, rep)) => (Some(path.clone()), Some(rep.period)),
            };
            let doc = VerifyReport {
                passed: report.verdict.is_pass(),
                truncated: report.truncated,
                paths_checked: report.paths_checked,
                path,
                period,
            };
            io.emit(&to_json(&doc)?, None)?;
            Ok(verdict_code(&report.verdict))
        }
    }
}

fn search(cmd: SearchCommand, io: &mut Io) -> Result<i32> {
    match cmd {
        SearchCommand::Pik {
            graph,
            k,
            max_colors,
            budget,
        } => {
            let g = read_graph(&graph)?;
            let result = pi_k_exact(&g, k, &budget.budget(max_colors)?)?;
            #[derive(Serialize)]
            struct PiReport {
                value: Option<usize>,
                #[serde(flatten)]
                result: crate::search::PiResult,
            }
            io.emit(
                &to_json(&PiReport {
                    value: result.value(),
                    result,
                })?,
                None,
            )?;
            Ok(EXIT_PASS)
        }
        SearchCommand::Word {
            alphabet,
            k,
            length,
            budget,
        } => {
            let r = extend_word_search(alphabet, k, length, &budget.budget(1)?)?;
            #[derive(Serialize)]
            struct WordReport {
                word: String,
                length: usize,
                reached_target: bool,
                exhausted: bool,
                nodes: u64,
            }
            io.emit(
                &to_json(&WordReport {
                    word: render_digits(&r.word),
                    length: r.word.len(),
                    reached_target: r.reached_target,
                    exhausted: r.exhausted,
                    nodes: r.nodes,
                })?,
                None,
            )?;
            Ok(EXIT_PASS)
        }
        SearchCommand::TreeWitness {
            k,
            colors,
            max_depth,
            max_arity,
            budget,
        } => {
            let r = tree_witness_search(k, colors, max_depth, max_arity, &budget.budget(colors)?)?;
            io.emit(&to_json(&r)?, None)?;
            Ok(EXIT_PASS)
        }
    }
}
