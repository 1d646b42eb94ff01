use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use copeland::control::{self, ControlAction, ControlInstance, ControlTag, ControlType, ProblemTag};
use copeland::format::{self, Document};
use copeland::fpt::{self, Goal};
use copeland::microbribery::{self, Microbribe};
use copeland::oracle::{self, Decision, Verdict, Witness, DEFAULT_NODE_CAP};
use copeland::reductions::{self, BriberyVariant, ReduceOptions, ReducedInstance, Vc, X3c};
use copeland::tournament;
use copeland::{Alpha, Election, Error, Mode, PartitionKind, Preference, WinnerModel};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "copeland", version, about = "Copeland^alpha winners, bribery, control and reductions")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Tie reward, as b/d or 0 or 1.
    #[arg(long, default_value = "1/2", global = true)]
    alpha: Alpha,
    #[arg(long, visible_alias = "winner-model", value_enum, default_value_t = ModelArg::Nonunique, global = true)]
    model: ModelArg,
    #[arg(long, value_enum, default_value_t = OutFormat::Text, global = true)]
    format: OutFormat,
    /// Worker threads. Every search currently runs on one thread.
    #[arg(long, default_value_t = 1, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    threads: u32,
    /// Node cap for exhaustive searches.
    #[arg(long, default_value_t = DEFAULT_NODE_CAP, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    cap: u64,
    /// Recorded in the header; no subcommand draws random numbers.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum ModelArg {
    #[value(alias = "any")]
    Nonunique,
    Unique,
}

impl From<ModelArg> for WinnerModel {
    fn from(m: ModelArg) -> WinnerModel {
        match m {
            ModelArg::Nonunique => WinnerModel::NonUnique,
            ModelArg::Unique => WinnerModel::Unique,
        }
    }
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum OutFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Con,
    Des,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Con => Mode::Constructive,
            ModeArg::Des => Mode::Destructive,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Bound {
    Candidates,
    Voters,
}

#[derive(Clone, Copy, ValueEnum)]
enum Source {
    X3c,
    Vc,
}

#[derive(Args)]
struct Target {
    /// Distinguished candidate; defaults to the file's TARGET line.
    #[arg(long)]
    target: Option<String>,
    /// Budget k; defaults to the file's BUDGET line, else 0.
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Copeland scores and pairwise margins.
    Score { file: PathBuf },
    /// The winner set.
    Winners { file: PathBuf },
    /// Build an election from an outcome table.
    Build {
        #[command(subcommand)]
        what: BuildCmd,
    },
    /// Minimum-cost microbribery (one pairwise flip per unit of budget).
    Microbribery {
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[command(flatten)]
        target: Target,
        file: PathBuf,
    },
    /// Polynomial-time control algorithms (DCAC, DCACu, DCDC, DCPC-*, DCRPC-*, CCACu).
    Control {
        #[arg(long = "type")]
        tag: ControlTag,
        #[command(flatten)]
        target: Target,
        file: PathBuf,
    },
    /// Exhaustive search.
    Oracle {
        #[arg(long)]
        problem: ProblemTag,
        #[command(flatten)]
        target: Target,
        file: PathBuf,
    },
    /// Fixed-parameter algorithms for few candidates or few voters.
    Fpt {
        #[arg(long)]
        problem: ControlTag,
        #[arg(long, value_enum)]
        bound: Bound,
        /// p-wins, p-loses, lexicographic, distinct, cowinners:<q> or order:<a,b|c>.
        #[arg(long)]
        goal: Option<String>,
        /// Largest candidate count accepted with --bound candidates.
        #[arg(long, default_value_t = 8)]
        max_candidates: usize,
        #[command(flatten)]
        target: Target,
        file: PathBuf,
    },
    /// Generate a hardness-reduction instance from an X3C or vertex-cover instance.
    Reduce {
        #[arg(long, value_enum)]
        from: Source,
        #[arg(long)]
        to: ProblemTag,
        /// Emit a fixed two-candidate instance for out-of-range input instead of failing.
        #[arg(long)]
        canned_fallback: bool,
        /// Realize constructed tournaments with at most 2m voters.
        #[arg(long)]
        compact_voters: bool,
        file: PathBuf,
    },
}

#[derive(Subcommand)]
enum BuildCmd {
    /// Two voters per decisive pair.
    Mcgarvey {
        #[arg(long)]
        compact_voters: bool,
        file: PathBuf,
    },
    /// The circulant tournament on 2n+1 candidates.
    Pad { n: usize },
    /// Pads an outcome table so base candidate i wins 2n^2 - k_i contests outside its ties.
    Targeted {
        #[arg(long)]
        n: usize,
        /// Comma-separated k_i, one per candidate.
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<usize>,
        file: PathBuf,
    },
}

/// What a subcommand produced: an optional decision, then key/value lines.
struct Report {
    command: &'static str,
    result: Option<Decision>,
    lines: Vec<(String, String)>,
    /// Text body printed verbatim (election or table files).
    body: Option<String>,
}

impl Report {
    fn new(command: &'static str) -> Report {
        Report { command, result: None, lines: Vec::new(), body: None }
    }

    fn line(&mut self, key: &str, value: impl Into<String>) {
        self.lines.push((key.to_string(), value.into()));
    }

    fn exit_code(&self) -> u8 {
        match self.result {
            None | Some(Decision::Yes) => 0,
            Some(Decision::No) => 1,
            Some(Decision::CapExceeded) => 2,
        }
    }
}

fn result_word(d: Decision) -> &'static str {
    match d {
        Decision::Yes => "YES",
        Decision::No => "NO",
        Decision::CapExceeded => "CAP_EXCEEDED",
    }
}

fn model_word(m: ModelArg) -> &'static str {
    match m {
        ModelArg::Nonunique => "nonunique",
        ModelArg::Unique => "unique",
    }
}

fn render(r: &Report, c: &Common) -> String {
    match c.format {
        OutFormat::Text => {
            let mut out = format!("# copeland {} alpha={} model={}", r.command, c.alpha, model_word(c.model));
            if let Some(s) = c.seed {
                out.push_str(&format!(" seed={s}"));
            }
            out.push('\n');
            if let Some(d) = r.result {
                out.push_str(&format!("RESULT: {}\n", result_word(d)));
            }
            for (k, v) in &r.lines {
                out.push_str(&format!("{k}: {v}\n"));
            }
            if let Some(b) = &r.body {
                out.push_str(b);
            }
            out
        }
        OutFormat::Json => {
            let lines: Vec<Value> = r.lines.iter().map(|(k, v)| json!([k, v])).collect();
            let doc = json!({
                "command": r.command,
                "alpha": c.alpha.to_string(),
                "model": model_word(c.model),
                "seed": c.seed,
                "result": r.result.map(result_word),
                "lines": lines,
                "body": r.body,
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("json"))
        }
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load(path: &Path) -> anyhow::Result<Document> {
    Ok(format::parse_document(&read(path)?).with_context(|| format!("in {}", path.display()))?)
}

fn instance(doc: &Document, t: &Target) -> anyhow::Result<ControlInstance> {
    let target = t.target.as_deref().map(|n| doc.election.index_of(n)).transpose()?;
    Ok(doc.instance(target, t.budget)?)
}

/// A score d-scaled by alpha's denominator, printed as a reduced fraction.
fn points(scaled: u64, alpha: Alpha) -> String {
    let d = alpha.den();
    if scaled % d == 0 {
        (scaled / d).to_string()
    } else {
        let g = gcd(scaled, d);
        format!("{}/{}", scaled / g, d / g)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn names(e: &Election, ids: &[usize]) -> String {
    ids.iter().map(|&c| e.name(c)).collect::<Vec<_>>().join(" ")
}

fn set_text(e: &Election, ids: &[usize]) -> String {
    if ids.is_empty() {
        "none".into()
    } else {
        names(e, ids)
    }
}

fn pref_text(e: &Election, p: &Preference) -> String {
    match p {
        Preference::Order(o) => names(e, o),
        Preference::Table(t) => {
            let mut out = Vec::new();
            for i in 0..e.m() {
                for j in i + 1..e.m() {
                    let (a, b) = if t.prefers(i, j) { (i, j) } else { (j, i) };
                    out.push(format!("{}>{}", e.name(a), e.name(b)));
                }
            }
            out.join(" ")
        }
    }
}

fn counts_text(counts: &[u64]) -> String {
    let parts: Vec<String> = counts.iter().enumerate().filter(|(_, &k)| k > 0).map(|(b, k)| format!("{b}x{k}")).collect();
    if parts.is_empty() {
        "none".into()
    } else {
        parts.join(" ")
    }
}

fn flip_lines(r: &mut Report, e: &Election, flips: &[Microbribe]) {
    r.line("COST", flips.len().to_string());
    for f in flips {
        r.line("FLIP", format!("v{} {}>{}", f.voter, e.name(f.winner), e.name(f.loser)));
    }
}

fn action_lines(r: &mut Report, inst: &ControlInstance, a: &ControlAction) {
    let e = &inst.election;
    match a {
        ControlAction::AddCandidates(s) => r.line("ADD", set_text(e, s)),
        ControlAction::DeleteCandidates(s) => r.line("DELETE", set_text(e, s)),
        ControlAction::PartitionCandidates(c1) => {
            let c2: Vec<usize> = inst.registered().into_iter().filter(|c| !c1.contains(c)).collect();
            r.line("PART1", set_text(e, c1));
            r.line("PART2", set_text(e, &c2));
        }
        // Voter counts are listed per block, as <block index>x<count>.
        ControlAction::AddVoters(k) => r.line("ADD_VOTERS", counts_text(k)),
        ControlAction::DeleteVoters(k) => r.line("DELETE_VOTERS", counts_text(k)),
        ControlAction::PartitionVoters(k) => {
            let rest: Vec<u64> = e.voters().iter().zip(k).map(|(b, &x)| b.multiplicity - x).collect();
            r.line("V1", counts_text(k));
            r.line("V2", counts_text(&rest));
        }
    }
}

fn verdict_report(r: &mut Report, inst: &ControlInstance, v: &Verdict) {
    r.result = Some(v.decision);
    let e = &inst.election;
    match &v.witness {
        Some(Witness::Control(a)) => action_lines(r, inst, a),
        Some(Witness::Microbribery(f)) => flip_lines(r, e, f),
        Some(Witness::Bribery(bribes)) => {
            for b in bribes {
                r.line("BRIBE", format!("v{} {}", b.voter, pref_text(e, &b.pref)));
            }
        }
        Some(Witness::Selection(s)) => r.line("SELECTION", s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")),
        None => {}
    }
    r.line("NODES", v.nodes.to_string());
}

fn decided(found: Option<ControlAction>) -> Verdict {
    let decision = if found.is_some() { Decision::Yes } else { Decision::No };
    Verdict { decision, witness: found.map(Witness::Control), nodes: 0 }
}

fn run_control(tag: ControlTag, inst: &ControlInstance, alpha: Alpha, model: WinnerModel) -> anyhow::Result<Verdict> {
    let found = match (tag.mode, tag.kind) {
        (Mode::Destructive, ControlType::AC) => control::dcac_greedy(inst, alpha, model, false)?,
        (Mode::Destructive, ControlType::ACu) => control::dcac_greedy(inst, alpha, model, true)?,
        (Mode::Destructive, ControlType::DC) => control::dcdc_greedy(inst, alpha, model)?,
        (Mode::Destructive, ControlType::PC(rule)) => control::dc_partition(inst, alpha, PartitionKind::PC, rule, model)?,
        (Mode::Destructive, ControlType::RPC(rule)) => control::dc_partition(inst, alpha, PartitionKind::RPC, rule, model)?,
        (Mode::Constructive, ControlType::ACu) => control::ccacu_greedy(inst, alpha, model)?,
        _ => return Err(Error::Unsupported(format!("no polynomial-time algorithm for {tag}; use the oracle")).into()),
    };
    Ok(decided(found))
}

fn run_fpt(tag: ControlTag, bound: Bound, goal: Option<&str>, max_c: usize, inst: &ControlInstance, c: &Common) -> anyhow::Result<Verdict> {
    let (alpha, model) = (c.alpha, c.model.into());
    let goal = match goal {
        Some(g) => Goal::parse_with_names(g, inst.election.names(), model)?,
        None => Goal::Winner { mode: tag.mode, model },
    };
    let plain = goal == Goal::Winner { mode: tag.mode, model };
    let voter = !tag.kind.is_candidate_control();
    Ok(match bound {
        Bound::Candidates if voter => fpt::extended_control(&goal, tag.kind, inst, alpha)?,
        Bound::Candidates if plain => fpt::fpt_candidate_control(tag, inst, alpha, model, max_c)?,
        Bound::Voters if voter && plain => fpt::fpt_voter_control_bv(tag, inst, alpha, model)?,
        _ => bail!(Error::Unsupported(format!("{tag} with this bound and goal"))),
    })
}

fn reduce(from: Source, to: ProblemTag, file: &Path, opts: ReduceOptions, c: &Common) -> anyhow::Result<ReducedInstance> {
    let text = read(file)?;
    let (alpha, model) = (c.alpha, c.model.into());
    let bad = || Error::Unsupported(format!("no reduction to {to} from this source"));
    Ok(match from {
        Source::X3c => {
            let x = X3c::parse(&text)?;
            match to {
                ProblemTag::Bribery(mode) => {
                    reductions::x3c_to_bribery_uv(&x, BriberyVariant::for_goal(mode, model), mode, alpha, opts)?
                }
                ProblemTag::Control(tag) if !tag.kind.is_candidate_control() => {
                    reductions::x3c_to_voter_control(&x, tag, alpha, model, opts)?
                }
                ProblemTag::CondorcetCcdv | ProblemTag::CondorcetCcpv => reductions::x3c_to_condorcet(&x, to, opts)?,
                _ => bail!(bad()),
            }
        }
        Source::Vc => match to {
            ProblemTag::Control(tag) if tag.kind.is_candidate_control() => {
                reductions::vc_to_candidate_control(&Vc::parse(&text)?, tag, alpha, model, opts)?
            }
            _ => bail!(bad()),
        },
    })
}

fn run(cmd: Command, c: &Common) -> anyhow::Result<Report> {
    let (alpha, model): (Alpha, WinnerModel) = (c.alpha, c.model.into());
    Ok(match cmd {
        Command::Score { file } => {
            let e = load(&file)?.election;
            let mut r = Report::new("score");
            for (i, s) in e.scores(alpha).into_iter().enumerate() {
                r.line("SCORE", format!("{} {}", e.name(i), points(s, alpha)));
            }
            let vs = e.vs_matrix();
            for i in 0..e.m() {
                for j in i + 1..e.m() {
                    r.line("VS", format!("{} {} {}", e.name(i), e.name(j), vs.get(i, j)));
                }
            }
            r
        }
        Command::Winners { file } => {
            let e = load(&file)?.election;
            let w = e.winners(alpha, model)?;
            let mut r = Report::new("winners");
            r.result = Some(if w.is_empty() { Decision::No } else { Decision::Yes });
            r.line("WINNERS", names(&e, &w));
            r
        }
        Command::Build { what } => {
            let e = match what {
                BuildCmd::Mcgarvey { compact_voters, file } => {
                    let (n, t) = format::parse_cot(&read(&file)?)?;
                    let e = if compact_voters { tournament::compact_realization(&t, n)? } else { tournament::mcgarvey(&t, n)? };
                    e
                }
                BuildCmd::Pad { n } => tournament::pad_election(n)?,
                BuildCmd::Targeted { n, k, file } => {
                    let (names, t) = format::parse_cot(&read(&file)?)?;
                    let base = tournament::mcgarvey(&t, names)?;
                    tournament::targeted_election(&base, n, &k)?
                }
            };
            let mut r = Report::new("build");
            r.body = Some(format::write_election(&e));
            r
        }
        Command::Microbribery { mode, target, file } => {
            let inst = instance(&load(&file)?, &target)?;
            let e = &inst.election;
            let found = match Mode::from(mode) {
                Mode::Constructive => microbribery::constructive_microbribery(e, alpha, inst.target, inst.budget, model)?,
                Mode::Destructive => microbribery::destructive_microbribery(e, alpha, inst.target, inst.budget, model)?,
            };
            let mut r = Report::new("microbribery");
            r.result = Some(if found.is_some() { Decision::Yes } else { Decision::No });
            if let Some(f) = found {
                flip_lines(&mut r, e, &f);
            }
            r
        }
        Command::Control { tag, target, file } => {
            let inst = instance(&load(&file)?, &target)?;
            let v = run_control(tag, &inst, alpha, model)?;
            let mut r = Report::new("control");
            r.result = Some(v.decision);
            if let Some(Witness::Control(a)) = &v.witness {
                action_lines(&mut r, &inst, a);
            }
            r
        }
        Command::Oracle { problem, target, file } => {
            let inst = instance(&load(&file)?, &target)?;
            let (e, p, k) = (&inst.election, inst.target, inst.budget);
            let v = match problem {
                ProblemTag::Bribery(mode) => oracle::bribery_oracle(e, alpha, p, k, mode, model, c.cap)?,
                ProblemTag::Microbribery(mode) => oracle::microbribery_oracle(e, alpha, p, k, mode, model, c.cap)?,
                tag => oracle::control_oracle(tag, &inst, alpha, model, c.cap)?,
            };
            let mut r = Report::new("oracle");
            verdict_report(&mut r, &inst, &v);
            r
        }
        Command::Fpt { problem, bound, goal, max_candidates, target, file } => {
            let inst = instance(&load(&file)?, &target)?;
            let v = run_fpt(problem, bound, goal.as_deref(), max_candidates, &inst, c)?;
            let mut r = Report::new("fpt");
            verdict_report(&mut r, &inst, &v);
            r
        }
        Command::Reduce { from, to, canned_fallback, compact_voters, file } => {
            let red = reduce(from, to, &file, ReduceOptions { canned_fallback, compact_voters }, c)?;
            let mut r = Report::new("reduce");
            r.line("# problem", to.to_string());
            r.line("# instance-model", model_word(if red.model == WinnerModel::Unique { ModelArg::Unique } else { ModelArg::Nonunique }));
            r.line("# instance-alpha", red.alpha.to_string());
            r.line("# canned", red.canned.to_string());
            for claim in &red.claims {
                r.line("# claim", claim.to_string());
            }
            r.body = Some(format::write_document(&Document::from_instance(&red.instance)));
            r
        }
    })
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Score { .. } => "score",
            Command::Winners { .. } => "winners",
            Command::Build { .. } => "build",
            Command::Microbribery { .. } => "microbribery",
            Command::Control { .. } => "control",
            Command::Oracle { .. } => "oracle",
            Command::Fpt { .. } => "fpt",
            Command::Reduce { .. } => "reduce",
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let name = cli.cmd.name();
    match run(cli.cmd, &cli.common) {
        Ok(r) => {
            print!("{}", render(&r, &cli.common));
            ExitCode::from(r.exit_code())
        }
        Err(err) => {
            if let Some(Error::Unsupported(_)) = err.downcast_ref::<Error>() {
                let mut r = Report::new(name);
                r.line("RESULT", "UNSUPPORTED");
                print!("{}", render(&r, &cli.common));
            }
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
