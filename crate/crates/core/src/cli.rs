//! Command-line interface.
//!
//! Exit codes: 0 success (or search Found), 1 internal error, 2 invalid input,
//! 3 coset enumeration inconclusive, 4 search exhausted, 5 search budget exceeded.

use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::coset::{enumerate, EnumerationLimits, Outcome};
use crate::families::FamilySpec;
use crate::heegaard::{presentation_of_alpha, presentation_of_beta, HeegaardDiagram};
use crate::invariants::{abs_det, exponent_matrix, presentation_mod2};
use crate::presentation::{
    apply_move, normalize, parse_move, verify_transcript_with, MoveSet, Presentation, ReplayMode,
    Transcript,
};
use crate::search::{search_trivialization, Goal, SearchConfig, SearchOutcome, Strategy};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;
pub const EXIT_EXHAUSTED: i32 = 4;
pub const EXIT_BUDGET: i32 = 5;

#[derive(Debug, Parser)]
#[command(
    name = "eac",
    version,
    about = "Andrews-Curtis moves on balanced presentations"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MovesArg {
    Sac,
    Eac,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StrategyArg {
    Bfs,
    Iddfs,
    Greedy,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Side {
    Alpha,
    Beta,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a presentation and print it back.
    Parse { presentation: String },
    /// Print the canonical form.
    Normalize { presentation: String },
    /// Print |det| of the exponent matrix and the mod-2 row space.
    Invariants { presentation: String },
    /// Apply moves (transcript syntax, e.g. "compose 1 2") and print the result.
    Apply {
        presentation: String,
        #[arg(required = true)]
        moves: Vec<String>,
    },
    /// Search for a move sequence reaching a goal.
    Search {
        presentation: String,
        #[arg(long, value_enum, default_value = "eac")]
        moves: MovesArg,
        #[arg(long, value_enum, default_value = "bfs")]
        strategy: StrategyArg,
        #[arg(long, default_value_t = 12)]
        max_depth: usize,
        #[arg(long, default_value_t = 12)]
        max_length: usize,
        /// Defaults to the generator count of the input (no stabilization).
        #[arg(long)]
        max_gens: Option<usize>,
        #[arg(long, default_value_t = 1_000_000)]
        budget: usize,
        /// trivial, rank:<k> or below:<k>
        #[arg(long, default_value = "trivial", value_parser = parse_goal)]
        goal: Goal,
        /// Expand on a single thread.
        #[arg(long)]
        deterministic: bool,
        /// Check invariants of every admitted state.
        #[arg(long)]
        self_check: bool,
        /// Write the transcript here when found.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Replay a transcript file and print the final presentation.
    Verify {
        file: PathBuf,
        /// Reject derived Rotate moves.
        #[arg(long)]
        strict: bool,
    },
    /// Bounded coset enumeration over the trivial subgroup.
    Tc {
        presentation: String,
        #[arg(long, default_value_t = 100_000)]
        max_cosets: usize,
        #[arg(long, default_value_t = 10_000_000)]
        max_steps: usize,
    },
    /// Read a diagram file and print its presentation.
    Heegaard {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "beta")]
        side: Side,
    },
    /// Print a named family member: trivial:<n>, paperZ, ak:<n>.
    Gen {
        #[arg(long)]
        family: String,
    },
    /// Apply moves interactively; the transcript is written on quit.
    Repl {
        presentation: String,
        /// Transcript destination (default: printed on quit).
        #[arg(long)]
        save: Option<PathBuf>,
    },
}

fn parse_goal(s: &str) -> Result<Goal, String> {
    let bound = |k: &str| {
        k.parse::<usize>()
            .map_err(|_| format!("invalid rank '{k}'"))
    };
    match s.split_once(':') {
        None if s == "trivial" => Ok(Goal::Trivial),
        Some(("rank", k)) => bound(k).map(Goal::Rank),
        Some(("below", k)) => bound(k).map(Goal::FewerGenerators),
        _ => Err(format!(
            "unknown goal '{s}' (expected trivial, rank:<k> or below:<k>)"
        )),
    }
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

fn input_error(message: impl ToString) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.to_string(),
    }
}

fn io_error(e: std::io::Error) -> Failure {
    Failure {
        code: EXIT_INTERNAL,
        message: e.to_string(),
    }
}

/// The presentation argument: literal text starting with `<`, `-` for stdin, or a file path.
fn read_presentation(arg: &str, stdin: &mut dyn BufRead) -> Result<Presentation, Failure> {
    let text = if arg.trim_start().starts_with('<') {
        arg.to_string()
    } else if arg == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(io_error)?;
        s
    } else {
        read_file(Path::new(arg))?
    };
    Presentation::parse(text.trim()).map_err(|e| input_error(format!("parse error: {e}")))
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure {
        code: EXIT_INTERNAL,
        message: format!("{}: {e}", path.display()),
    })
}

struct Out<'a> {
    format: Format,
    w: &'a mut dyn Write,
}

impl Out<'_> {
    fn emit(&mut self, text: &str, value: serde_json::Value) -> Result<(), Failure> {
        let res = match self.format {
            Format::Text => write!(self.w, "{text}"),
            Format::Json => writeln!(self.w, "{value}"),
        };
        res.map_err(io_error)
    }
}

#[derive(Serialize)]
struct PresentationJson {
    generators: Vec<String>,
    relators: Vec<String>,
    text: String,
}

fn presentation_json(p: &Presentation) -> serde_json::Value {
    let relators = p
        .relators()
        .iter()
        .map(|w| crate::words::format_word(w, p.names()))
        .collect();
    serde_json::to_value(PresentationJson {
        generators: p.names().to_vec(),
        relators,
        text: p.to_string(),
    })
    .expect("plain data serializes")
}

/// Runs the command line `argv` (program name first) and returns the exit code.
pub fn run<S: AsRef<str>>(
    argv: &[S],
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(argv.iter().map(|s| s.as_ref())) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let shown = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{shown}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{shown}");
                    EXIT_INPUT
                }
            };
        }
    };
    let mut out = Out {
        format: cli.format,
        w: stdout,
    };
    match dispatch(cli.command, stdin, &mut out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command, stdin: &mut dyn BufRead, out: &mut Out) -> Result<i32, Failure> {
    match cmd {
        Command::Parse { presentation } => {
            let p = read_presentation(&presentation, stdin)?;
            out.emit(&format!("{p}\n"), presentation_json(&p))?;
        }
        Command::Normalize { presentation } => {
            let p = read_presentation(&presentation, stdin)?;
            let c = normalize(&p).to_presentation();
            out.emit(&format!("{c}\n"), presentation_json(&c))?;
        }
        Command::Invariants { presentation } => {
            let p = read_presentation(&presentation, stdin)?;
            let det = abs_det(&exponent_matrix(&p)).ok();
            let space = presentation_mod2(&p);
            let det_text = det.as_ref().map_or("n/a".to_string(), |d| d.to_string());
            let mut text = format!("abs_det: {det_text}\nmod2_rank: {}\n", space.rank());
            for row in space.bitstrings() {
                text.push_str(&row);
                text.push('\n');
            }
            let value = json!({
                "abs_det": det.map(|d| d.to_string()),
                "mod2_rank": space.rank(),
                "mod2_basis": space.bitstrings(),
            });
            out.emit(&text, value)?;
        }
        Command::Apply {
            presentation,
            moves,
        } => {
            let mut p = read_presentation(&presentation, stdin)?;
            for line in &moves {
                let mv =
                    parse_move(line).map_err(|e| input_error(format!("move '{line}': {e}")))?;
                p = apply_move(&p, &mv).map_err(|e| input_error(format!("move '{mv}': {e}")))?;
            }
            out.emit(&format!("{p}\n"), presentation_json(&p))?;
        }
        Command::Search {
            presentation,
            moves,
            strategy,
            max_depth,
            max_length,
            max_gens,
            budget,
            goal,
            deterministic,
            self_check,
            emit,
        } => {
            let p = read_presentation(&presentation, stdin)?;
            if !p.is_balanced() {
                return Err(input_error("search needs a balanced presentation"));
            }
            if max_depth == 0 || max_length == 0 || budget == 0 {
                return Err(input_error("search bounds must be positive"));
            }
            let move_set = match moves {
                MovesArg::Sac => MoveSet::Sac,
                MovesArg::Eac => MoveSet::Eac,
            };
            let mut cfg = SearchConfig::new(move_set, goal);
            cfg.strategy = match strategy {
                StrategyArg::Bfs => Strategy::Bfs,
                StrategyArg::Iddfs => Strategy::Iddfs,
                StrategyArg::Greedy => Strategy::Greedy,
            };
            cfg.max_depth = max_depth;
            cfg.max_total_length = max_length;
            cfg.max_generators = max_gens.unwrap_or(p.n_generators()).max(p.n_generators());
            cfg.node_budget = budget;
            cfg.parallel = !deterministic;
            cfg.self_check = self_check;
            let result = search_trivialization(&p, &cfg);
            let stats = format!(
                "nodes_expanded: {}\ndedup_hits: {}\n",
                result.nodes_expanded, result.dedup_hits
            );
            let (code, text, value) = match &result.outcome {
                SearchOutcome::Found { transcript } => {
                    if let Some(path) = &emit {
                        write_file(path, &transcript.to_string())?;
                    }
                    let last =
                        verify_transcript_with(transcript, ReplayMode::Lenient).map_err(|e| {
                            Failure {
                                code: EXIT_INTERNAL,
                                message: format!("search produced an invalid transcript: {e}"),
                            }
                        })?;
                    let reached = normalize(&last);
                    let text = format!(
                        "found: {} moves\nreached: {reached}\n{stats}{transcript}",
                        transcript.moves.len()
                    );
                    let value = json!({
                        "outcome": "found",
                        "moves": transcript.moves.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                        "reached": reached.to_string(),
                        "nodes_expanded": result.nodes_expanded,
                        "dedup_hits": result.dedup_hits,
                    });
                    (EXIT_OK, text, value)
                }
                SearchOutcome::Exhausted { stats: f } => {
                    let text = format!(
                        "exhausted: {} states, depth {} reached, {} cut off by depth\n{stats}",
                        f.states_seen, f.max_depth_reached, f.depth_cutoffs
                    );
                    let value = json!({
                        "outcome": "exhausted",
                        "states_seen": f.states_seen,
                        "max_depth_reached": f.max_depth_reached,
                        "depth_cutoffs": f.depth_cutoffs,
                        "nodes_expanded": result.nodes_expanded,
                        "dedup_hits": result.dedup_hits,
                    });
                    (EXIT_EXHAUSTED, text, value)
                }
                SearchOutcome::BudgetExceeded => {
                    let value = json!({
                        "outcome": "budget_exceeded",
                        "nodes_expanded": result.nodes_expanded,
                        "dedup_hits": result.dedup_hits,
                    });
                    (EXIT_BUDGET, format!("budget exceeded\n{stats}"), value)
                }
            };
            let mut text = text;
            let mut value = value;
            if self_check {
                text.push_str(&format!(
                    "self_check_violations: {}\n",
                    result.self_check_violations
                ));
                value["self_check_violations"] = json!(result.self_check_violations);
            }
            out.emit(&text, value)?;
            return Ok(code);
        }
        Command::Verify { file, strict } => {
            let t = Transcript::parse(&read_file(&file)?)
                .map_err(|e| input_error(format!("{}: {e}", file.display())))?;
            let mode = if strict {
                ReplayMode::Strict
            } else {
                ReplayMode::Lenient
            };
            let last = verify_transcript_with(&t, mode).map_err(input_error)?;
            let canonical = normalize(&last);
            let text = format!(
                "final: {last}\ncanonical: {canonical}\nmoves: {}\n",
                t.moves.len()
            );
            let value = json!({
                "final": presentation_json(&last),
                "canonical": canonical.to_string(),
                "moves": t.moves.len(),
            });
            out.emit(&text, value)?;
        }
        Command::Tc {
            presentation,
            max_cosets,
            max_steps,
        } => {
            let p = read_presentation(&presentation, stdin)?;
            if max_cosets == 0 || max_steps == 0 {
                return Err(input_error("limits must be positive"));
            }
            return match enumerate(&p, EnumerationLimits::new(max_cosets, max_steps)) {
                Outcome::Finished { order, .. } => {
                    out.emit(
                        &format!("order={order}\n"),
                        json!({ "outcome": "finished", "order": order }),
                    )?;
                    Ok(EXIT_OK)
                }
                Outcome::LimitExceeded { live_cosets } => {
                    out.emit(
                        &format!("inconclusive live={live_cosets}\n"),
                        json!({ "outcome": "inconclusive", "live": live_cosets }),
                    )?;
                    Ok(EXIT_INCONCLUSIVE)
                }
            };
        }
        Command::Heegaard { file, side } => {
            let d = HeegaardDiagram::parse(&read_file(&file)?)
                .map_err(|e| input_error(format!("{}: {e}", file.display())))?;
            let p = match side {
                Side::Alpha => presentation_of_alpha(&d),
                Side::Beta => presentation_of_beta(&d),
            }
            .map_err(input_error)?;
            out.emit(&format!("{p}\n"), presentation_json(&p))?;
        }
        Command::Gen { family } => {
            let p = FamilySpec::parse(&family)
                .and_then(|s| s.build())
                .map_err(input_error)?;
            out.emit(&format!("{p}\n"), presentation_json(&p))?;
        }
        Command::Repl { presentation, save } => {
            let p = read_presentation(&presentation, &mut std::io::empty())?;
            let t = repl(p, stdin, out.w)?;
            match save {
                Some(path) => write_file(&path, &t.to_string())?,
                None => write!(out.w, "{t}").map_err(io_error)?,
            }
        }
    }
    Ok(EXIT_OK)
}

fn describe(p: &Presentation) -> String {
    let det = abs_det(&exponent_matrix(p)).map_or("n/a".to_string(), |d| d.to_string());
    format!("{p}\n  abs_det: {det}  mod2: {}\n", presentation_mod2(p))
}

/// Interactive session: each input line is a move, `show`, `undo` or `quit`.
/// Invalid moves are reported and leave the state unchanged.
pub fn repl(
    initial: Presentation,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
) -> Result<Transcript, FailureMessage> {
    let mut transcript = Transcript::new(initial.clone());
    let mut states = vec![initial];
    let io = |e: std::io::Error| FailureMessage(e.to_string());
    write!(out, "{}", describe(&states[0])).map_err(io)?;
    let mut line = String::new();
    loop {
        line.clear();
        if input.read_line(&mut line).map_err(io)? == 0 {
            break;
        }
        let cmd = line.trim();
        match cmd {
            "" => continue,
            "quit" | "exit" => break,
            "show" => {}
            "undo" => {
                if transcript.moves.pop().is_some() {
                    states.pop();
                } else {
                    writeln!(out, "error: nothing to undo").map_err(io)?;
                    continue;
                }
            }
            _ if cmd.starts_with('#') => continue,
            _ => {
                let current = states.last().expect("at least the initial state");
                let applied = parse_move(cmd).map_err(|e| e.to_string()).and_then(|mv| {
                    apply_move(current, &mv)
                        .map(|q| (mv, q))
                        .map_err(|e| e.to_string())
                });
                match applied {
                    Ok((mv, q)) => {
                        transcript.moves.push(mv);
                        states.push(q);
                    }
                    Err(e) => {
                        writeln!(out, "error: {e}").map_err(io)?;
                        continue;
                    }
                }
            }
        }
        write!(out, "{}", describe(states.last().expect("nonempty"))).map_err(io)?;
    }
    Ok(transcript)
}

/// I/O failure inside [`repl`].
#[derive(Debug)]
pub struct FailureMessage(pub String);

impl From<FailureMessage> for Failure {
    fn from(f: FailureMessage) -> Failure {
        Failure {
            code: EXIT_INTERNAL,
            message: f.0,
        }
    }
}
