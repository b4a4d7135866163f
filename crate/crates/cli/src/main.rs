use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use soergel_core::explorer::{self, Report};
use soergel_core::grotring::{enumerate_x, TableFormat};
use soergel_core::hilbert::{self, HilbertOracle};
use soergel_core::parse::parse_expr;
use soergel_core::presented::{self, GenWord, Normalizer};
use soergel_core::{CoxeterGroup, Error, Integer, Ring, Variant};

/// Exact computations in split Grothendieck rings of generalized Soergel bimodules.
///
/// Thread count follows RAYON_NUM_THREADS.
#[derive(Parser)]
#[command(name = "soergel", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// The Grothendieck ring of type A2 on classes [R(A)].
    #[command(subcommand)]
    Grot(GrotCommand),
    /// The algebra on C1, C2, C3 and its map to the Grothendieck ring.
    #[command(subcommand)]
    Alg(AlgCommand),
    /// Ungraded standard characters.
    #[command(subcommand)]
    Char(CharCommand),
    /// Hilbert functions of R(A) computed from restriction-map ranks.
    Hilbert(HilbertArgs),
    /// B2/A3 checks, normal-form search and closure experiments.
    #[command(subcommand)]
    Explore(ExploreCommand),
    /// Runs every verification for the chosen group (all groups by default).
    VerifyAll {
        #[arg(long, value_enum)]
        group: Option<GroupChoice>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GroupChoice {
    A2,
    B2,
    A3,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantChoice {
    Plain,
    Extended,
}

impl From<VariantChoice> for Variant {
    fn from(v: VariantChoice) -> Self {
        match v {
            VariantChoice::Plain => Variant::Plain,
            VariantChoice::Extended => Variant::Extended,
        }
    }
}

#[derive(Subcommand)]
enum GrotCommand {
    /// Evaluates an expression such as "R{e,t1} * B:t2 + (v + v^-1)*Rw:s1*s2".
    Mul {
        expr: String,
        #[arg(long, value_enum, default_value_t = VariantChoice::Extended)]
        variant: VariantChoice,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Structure constants c_AB^C in basis order.
    Table {
        #[arg(long, value_enum, default_value_t = VariantChoice::Plain)]
        variant: VariantChoice,
        #[arg(long, value_enum, default_value_t = TableChoice::Csv)]
        format: TableChoice,
    },
    /// Checks the defining relations (and twisting identities when extended).
    Verify {
        #[arg(long, value_enum, default_value_t = VariantChoice::Extended)]
        variant: VariantChoice,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableChoice {
    Csv,
    Json,
    Latex,
}

#[derive(Subcommand)]
enum AlgCommand {
    /// Normal form of a word such as "C1*C2*C1*C3".
    Normalize {
        word: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Change-of-basis determinant and exhaustive word check.
    VerifyIso {
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum CharCommand {
    /// Character of an expression such as "B:tst * B:s * B:t".
    Word {
        expr: String,
        #[arg(long, default_value = "a2")]
        group: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args)]
struct HilbertArgs {
    #[arg(long, default_value = "a2")]
    group: String,
    /// A subset such as "W", "{e,s}" or "e,s"; "X" runs every set stabilized by a reflection.
    #[arg(long, default_value = "W")]
    set: String,
    /// Largest internal degree (polynomial degree k sits in internal degree 2k).
    #[arg(long, default_value_t = 12)]
    maxdeg: usize,
    #[arg(long, value_enum, default_value_t = HilbertFormat::Text)]
    format: HilbertFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum HilbertFormat {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum ExploreCommand {
    /// B = B_tst B_s B_t in B2.
    B2Counterexample {
        /// Largest internal degree compared.
        #[arg(long, default_value_t = 20)]
        maxdeg: i32,
        #[arg(long, default_value_t = 6)]
        window: i32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Character checks and filtration shapes in A3.
    A3Checks {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Searches R_w B_s1 ... B_sk R_w' witnesses for the 25 extended classes.
    RemarkComb {
        #[arg(long, default_value_t = 4)]
        max_k: usize,
        #[arg(long, default_value_t = 6)]
        window: i32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Breadth-first closure under left multiplication by the given B_t.
    Closure {
        #[arg(long, default_value = "a3")]
        group: String,
        #[arg(long, default_value = "B:sts,B:t,B:u")]
        generators: String,
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Outcome of a command that ran to completion.
enum Outcome {
    Ok(String),
    /// Human-readable report for stderr and a JSON witness for stdout.
    Failed(String, serde_json::Value),
}

fn verdict(ok: bool, text: String, json: serde_json::Value, format: Format) -> Outcome {
    match (ok, format) {
        (true, Format::Text) => Outcome::Ok(text),
        (true, Format::Json) => Outcome::Ok(pretty(&json)),
        (false, _) => Outcome::Failed(text, json),
    }
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json") + "\n"
}

fn report_outcome(report: &Report, format: Format) -> Outcome {
    verdict(
        report.passed(),
        report.to_text(),
        serde_json::to_value(report).expect("json"),
        format,
    )
}

struct CliError {
    error: Error,
    /// The argument a parse error points into.
    input: Option<String>,
}

impl From<Error> for CliError {
    fn from(error: Error) -> Self {
        CliError { error, input: None }
    }
}

fn located<T>(input: &str, r: Result<T, Error>) -> Result<T, CliError> {
    r.map_err(|error| CliError {
        error,
        input: Some(input.to_string()),
    })
}

fn a2_ring(variant: Variant) -> Result<Ring, Error> {
    Ring::new(variant)
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Grot(cmd) => grot(cmd),
        Command::Alg(cmd) => alg(cmd),
        Command::Char(CharCommand::Word { expr, group, format }) => {
            let g = located(&group, CoxeterGroup::parse(&group))?;
            let e = located(&expr, parse_expr::<Integer>(&g, &expr))?;
            let ch = e.character(&g);
            Ok(match format {
                Format::Text => Outcome::Ok(ch.format(&g) + "\n"),
                Format::Json => Outcome::Ok(pretty(&ch.to_json(&g))),
            })
        }
        Command::Hilbert(args) => {
            let g = located(&args.group, CoxeterGroup::parse(&args.group))?;
            let sets = if args.set.trim() == "X" {
                enumerate_x(&g)?
            } else {
                vec![located(&args.set, g.parse_set(&args.set))?]
            };
            if sets.iter().any(|a| a.is_empty()) {
                return Err(Error::Usage("the set must be nonempty".into()).into());
            }
            let oracle = HilbertOracle::new(&g)?;
            let table = oracle.table(&sets, args.maxdeg / 2);
            Ok(Outcome::Ok(match args.format {
                HilbertFormat::Csv => table.to_csv(),
                HilbertFormat::Json => pretty(&serde_json::to_value(&table).expect("json")),
                HilbertFormat::Text => table
                    .rows
                    .iter()
                    .map(|r| format!("{} degree {}: {}\n", r.set, r.degree, r.dim))
                    .collect(),
            }))
        }
        Command::Explore(cmd) => explore(cmd),
        Command::VerifyAll { group, format } => verify_all(group, format),
    }
}

fn grot(cmd: GrotCommand) -> Result<Outcome, CliError> {
    match cmd {
        GrotCommand::Mul { expr, variant, format } => {
            let ring = a2_ring(variant.into())?;
            let x = located(&expr, parse_expr::<Integer>(ring.group(), &expr))?.evaluate(&ring)?;
            Ok(Outcome::Ok(match format {
                Format::Text => x.format(ring.group()) + "\n",
                Format::Json => pretty(&x.to_json(ring.group())),
            }))
        }
        GrotCommand::Table { variant, format } => {
            let ring = a2_ring(variant.into())?;
            let format = match format {
                TableChoice::Csv => TableFormat::Csv,
                TableChoice::Json => TableFormat::Json,
                TableChoice::Latex => TableFormat::Latex,
            };
            let mut out = ring.structure_constants().render(format);
            if !out.ends_with('\n') {
                out.push('\n');
            }
            Ok(Outcome::Ok(out))
        }
        GrotCommand::Verify { variant, format } => {
            let report = a2_ring(variant.into())?.verify_relations();
            let text = format!(
                "{} relation instances checked in the {} ring: {}\n",
                report.checks.len(),
                report.variant.name(),
                if report.passed() { "all hold" } else { "FAILED" }
            );
            let json = match report.first_failure() {
                Some(f) => json!({ "passed": false, "witness": f }),
                None => json!({ "passed": true, "checks": report.checks.len() }),
            };
            Ok(verdict(report.passed(), text, json, format))
        }
    }
}

fn alg(cmd: AlgCommand) -> Result<Outcome, CliError> {
    match cmd {
        AlgCommand::Normalize { word, format } => {
            let w: GenWord = located(&word, word.parse())?;
            let nf = Normalizer::<Integer>::new().normalize(&w);
            Ok(Outcome::Ok(match format {
                Format::Text => format!("{nf}\n"),
                Format::Json => pretty(&json!({ "word": w.to_string(), "normal_form": nf.to_json() })),
            }))
        }
        AlgCommand::VerifyIso { max_len, format } => {
            let ring = a2_ring(Variant::Plain)?;
            let report = presented::verify_iso(&ring, max_len)?;
            let text = format!(
                "matrix {}x{}, determinant {} ({}), {} words up to length {}: {}\n",
                report.matrix_size.0,
                report.matrix_size.1,
                report.determinant,
                if report.determinant_unit.is_some() { "a unit" } else { "NOT a unit" },
                report.words_checked,
                report.max_word_len,
                report.disagreement.as_deref().unwrap_or("all agree")
            );
            let json = serde_json::to_value(&report).expect("json");
            Ok(verdict(report.passed(), text, json, format))
        }
    }
}

fn parse_generators(g: &CoxeterGroup, text: &str) -> Result<Vec<soergel_core::Elem>, Error> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in text.split(',') {
        let lead = part.len() - part.trim_start().len();
        let tok = part.trim();
        let body = tok
            .strip_prefix("B:")
            .ok_or_else(|| Error::parse(offset + lead, "expected a generator of the form B:<reflection>"))?;
        let t = g.parse_elem(body).map_err(|e| match e {
            Error::Parse { pos, msg } => Error::parse(pos + offset + lead + 2, msg),
            other => other,
        })?;
        if !g.is_reflection(t) {
            return Err(Error::parse(offset + lead + 2, format!("{body} is not a reflection")));
        }
        out.push(t);
        offset += part.len() + 1;
    }
    Ok(out)
}

fn explore(cmd: ExploreCommand) -> Result<Outcome, CliError> {
    match cmd {
        ExploreCommand::B2Counterexample { maxdeg, window, format } => {
            Ok(report_outcome(&explorer::b2_counterexample(maxdeg, window)?, format))
        }
        ExploreCommand::A3Checks { format } => Ok(report_outcome(&explorer::a3_checks()?, format)),
        ExploreCommand::RemarkComb { max_k, window, format } => {
            let ring = a2_ring(Variant::Extended)?;
            let report = explorer::remark_comb_check(&ring, max_k, window)?;
            let json = serde_json::to_value(&report).expect("json");
            Ok(verdict(report.passed(), report.to_text(), json, format))
        }
        ExploreCommand::Closure { group, generators, budget, format } => {
            let g = located(&group, CoxeterGroup::parse(&group))?;
            let gens = located(&generators, parse_generators(&g, &generators))?;
            let state = explorer::closure_explore(&g, &gens, budget)?;
            Ok(match format {
                Format::Text => Outcome::Ok(state.to_text()),
                Format::Json => Outcome::Ok(pretty(&serde_json::to_value(&state).expect("json"))),
            })
        }
    }
}

/// One named verification with its pass flag and JSON witness.
struct Step {
    name: String,
    passed: bool,
    witness: serde_json::Value,
}

fn a2_steps() -> Result<Vec<Step>, Error> {
    let mut steps = Vec::new();
    let g = CoxeterGroup::a2();
    let x = enumerate_x(&g)?;
    let plain = a2_ring(Variant::Plain)?;
    let extended = a2_ring(Variant::Extended)?;
    steps.push(Step {
        name: "19 sets in X, ranks 20 and 25".into(),
        passed: x.len() == 19 && plain.rank() == 20 && extended.rank() == 25,
        witness: json!({ "x": x.len(), "plain": plain.rank(), "extended": extended.rank() }),
    });
    for ring in [&plain, &extended] {
        let report = ring.verify_relations();
        steps.push(Step {
            name: format!("relations in the {} ring", ring.variant().name()),
            passed: report.passed(),
            witness: json!({ "first_failure": report.first_failure() }),
        });
    }
    let iso = presented::verify_iso(&plain, 8)?;
    steps.push(Step {
        name: "presentation isomorphism".into(),
        passed: iso.passed(),
        witness: serde_json::to_value(&iso).expect("json"),
    });
    let oracle = HilbertOracle::new(&g)?;
    let lemma = hilbert::lemma_sweep(&oracle, &x, 10)?;
    let bad: Vec<_> = lemma.iter().filter(|c| !c.passed()).collect();
    steps.push(Step {
        name: format!("decomposition lemma degreewise on {} pairs", lemma.len()),
        passed: bad.is_empty(),
        witness: json!({ "failures": bad }),
    });
    let series = hilbert::compare_with_ring(&plain, &oracle, 6)?;
    let bad: Vec<_> = series.iter().filter(|c| !c.agrees()).collect();
    steps.push(Step {
        name: "oracle series against generator expansions".into(),
        passed: bad.is_empty(),
        witness: json!({ "failures": bad }),
    });
    let comb = explorer::remark_comb_check(&extended, 4, 6)?;
    steps.push(Step {
        name: "R_w B_s1 ... B_sk R_w' witnesses".into(),
        passed: comb.passed(),
        witness: json!({ "uncovered": comb.uncovered }),
    });
    let closure = explorer::closure_explore(&g, &g.a2_reflections().expect("a2"), 10_000)?;
    steps.push(Step {
        name: "closure from all B_t".into(),
        passed: closure.opaque.is_empty() && closure.reached.len() == 20,
        witness: json!({ "reached": closure.reached, "opaque": closure.opaque }),
    });
    Ok(steps)
}

fn report_step(name: &str, report: Report) -> Step {
    Step {
        name: name.into(),
        passed: report.passed(),
        witness: json!({ "failures": report.failures().collect::<Vec<_>>() }),
    }
}

fn verify_all(group: Option<GroupChoice>, format: Format) -> Result<Outcome, CliError> {
    let groups = match group {
        Some(g) => vec![g],
        None => vec![GroupChoice::A2, GroupChoice::B2, GroupChoice::A3],
    };
    let mut steps = Vec::new();
    for g in groups {
        match g {
            GroupChoice::A2 => steps.extend(a2_steps()?),
            GroupChoice::B2 => steps.push(report_step("B2 counterexample", explorer::b2_counterexample(20, 6)?)),
            GroupChoice::A3 => steps.push(report_step("A3 checks", explorer::a3_checks()?)),
        }
    }
    let text: String = steps
        .iter()
        .map(|s| format!("[{}] {}\n", if s.passed { "ok  " } else { "FAIL" }, s.name))
        .collect();
    let ok = steps.iter().all(|s| s.passed);
    let json = json!({
        "passed": ok,
        "steps": steps.iter().map(|s| json!({ "name": s.name, "passed": s.passed })).collect::<Vec<_>>(),
        "witnesses": steps.iter().filter(|s| !s.passed).map(|s| json!({ "name": s.name, "witness": s.witness })).collect::<Vec<_>>(),
    });
    Ok(verdict(ok, text, json, format))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Outcome::Ok(out)) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Failed(text, witness)) => {
            eprint!("{text}");
            print!("{}", pretty(&witness));
            ExitCode::from(1)
        }
        Err(CliError { error, input }) => {
            eprintln!("error: {error}");
            if let (Error::Parse { pos, .. }, Some(input)) = (&error, input) {
                let col = input[..(*pos).min(input.len())].chars().count();
                eprintln!("  {input}\n  {}^", " ".repeat(col));
            }
            ExitCode::from(2)
        }
    }
}
