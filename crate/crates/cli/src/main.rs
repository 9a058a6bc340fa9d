use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use conum_core::arith::parse_rational;
use conum_core::conumerator::{cds, con, num};
use conum_core::factorize::{factor_biguint, render, DEFAULT_BUDGET};
use conum_core::jimm::{fiber, jimm_qstar, jimm_surd};
use conum_core::markov::{char_pair, find_triple, gamma, jimm_gamma, markov_tree_json, MarkovTriple};
use conum_core::pgl2::{alpha, alpha_magic, decompose};
use conum_core::variations::{
    eta, g_ratio, h_ratio, kappa, mixed_solution, weighted_con, weighted_num, CoeffParams, Flavor, Preset,
};
use conum_core::verify::Suite;
use conum_core::{ContinuedFraction, Error, Mat2, PeriodicCF, QuadraticSurd, Rational};

#[derive(Parser)]
#[command(name = "conum", version, about = "Exact conumerator, Jimm and Markov computations")]
struct Cli {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Factored,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one function at a rational, a continued fraction or a surd.
    Eval {
        #[arg(value_enum)]
        function: Function,
        /// `p/q`, `[n0,...,nk]`, `[pre,(period)]` or surd JSON `{"p":..,"b":..,"d":..,"q":..}`.
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Tabulate con(k/denominator) for k = 1..max_k.
    Table {
        #[arg(long, default_value_t = 41)]
        denominator: u64,
        #[arg(long, default_value_t = 200)]
        max_k: u64,
    },
    /// Run a verification suite; exits 1 if a pinned row fails.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
    },
    /// Markov triples and their quadratic irrationals.
    Markov {
        #[command(subcommand)]
        command: MarkovCommand,
    },
    /// Apply the outer automorphism to a matrix `[[p,q],[r,s]]`.
    Alpha {
        matrix: String,
        /// Use the closed entry formula instead of the generator rewrite.
        #[arg(long)]
        magic: bool,
    },
    /// The rationals whose conumerator is p.
    Fiber { p: u64 },
    /// Evaluate a parameterized functional-equation system.
    Variation {
        #[arg(value_enum)]
        system: System,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        a: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        b: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        c: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        s: i32,
        /// Which second equation the mixed system uses.
        #[arg(long, value_enum, default_value_t = FlavorArg::Num)]
        flavor: FlavorArg,
        /// Named parameters for the mixed system (overrides a, b, c, s, flavor).
        #[arg(long)]
        preset: Option<String>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Function {
    Con,
    Num,
    Cds,
    Jimm,
    Osc,
    Cosc,
    Ell,
}

#[derive(Subcommand)]
enum MarkovCommand {
    /// The Markov tree as nested triples.
    Tree {
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(0..=40))]
        depth: u32,
    },
    /// The quadratic irrational attached to the Markov number m.
    Gamma { m: BigUint },
    /// The Jimm image of that irrational.
    Jimm { m: BigUint },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum System {
    Kappa,
    Eta,
    G,
    H,
    WeightedNum,
    WeightedCon,
    Mixed,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FlavorArg {
    Num,
    Con,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Lib(Error),
    Io(io::Error),
    Unsupported(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome<T> = Result<T, Failure>;

/// Text to print and whether the command counts as a success.
struct Output {
    text: String,
    ok: bool,
}

impl Output {
    fn ok(text: impl Into<String>) -> Self {
        Output { text: text.into(), ok: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|out| {
        let mut text = out.text;
        if !text.ends_with('\n') {
            text.push('\n');
        }
        match &cli.out {
            Some(path) => fs::write(path, text)?,
            None => io::stdout().write_all(text.as_bytes())?,
        }
        Ok(out.ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Lib(e @ Error::Parse(_))) => fail(2, &e.to_string()),
        Err(Failure::Lib(e)) => fail(3, &e.to_string()),
        Err(Failure::Unsupported(msg)) => fail(3, &msg),
        Err(Failure::Io(e)) => fail(1, &format!("io error: {e}")),
    }
}

fn fail(code: u8, msg: &str) -> ExitCode {
    eprintln!("conum: {msg}");
    ExitCode::from(code)
}

fn run(cli: &Cli) -> Outcome<Output> {
    let format = cli.format;
    match &cli.command {
        Command::Eval { function, x } => eval(*function, x, format.unwrap_or(Format::Plain)),
        Command::Table { denominator, max_k } => table(*denominator, *max_k, format.unwrap_or(Format::Plain)),
        Command::Verify { suite } => verify(*suite, format.unwrap_or(Format::Csv)),
        Command::Markov { command } => markov(command, format),
        Command::Alpha { matrix, magic } => alpha_cmd(matrix, *magic, format.unwrap_or(Format::Plain)),
        Command::Fiber { p } => fiber_cmd(*p, format.unwrap_or(Format::Plain)),
        Command::Variation { system, x, a, b, c, s, flavor, preset } => {
            let params = match preset {
                Some(name) => Preset::from_name(name)?.params(),
                None => {
                    let p = CoeffParams::new(parse_rational(a)?, parse_rational(b)?, parse_rational(c)?)?;
                    let f = match flavor {
                        FlavorArg::Num => Flavor::Num,
                        FlavorArg::Con => Flavor::Con,
                    };
                    (p, *s, f)
                }
            };
            variation(*system, x, params, format.unwrap_or(Format::Plain))
        }
    }
}

/// A parsed argument: rationals come from `p/q` or finite expansions.
enum Input {
    Rational(Rational),
    Surd(QuadraticSurd),
}

fn parse_input(s: &str) -> Outcome<Input> {
    let s = s.trim();
    if s.starts_with('{') {
        return Ok(Input::Surd(QuadraticSurd::from_json(s)?));
    }
    if s.starts_with('[') {
        if s.contains('(') {
            return Ok(Input::Surd(s.parse::<PeriodicCF>()?.to_surd()));
        }
        return Ok(Input::Rational(s.parse::<ContinuedFraction>()?.to_rational()));
    }
    Ok(Input::Rational(parse_rational(s)?))
}

fn rational_input(s: &str, what: &str) -> Outcome<Rational> {
    match parse_input(s)? {
        Input::Rational(r) => Ok(r),
        Input::Surd(_) => Err(Failure::Unsupported(format!("{what} is defined on rationals only"))),
    }
}

fn function_name(f: Function) -> &'static str {
    match f {
        Function::Con => "con",
        Function::Num => "num",
        Function::Cds => "cds",
        Function::Jimm => "jimm",
        Function::Osc => "osc",
        Function::Cosc => "cosc",
        Function::Ell => "ell",
    }
}

fn big_json(n: impl ToString) -> Value {
    serde_json::from_str(&n.to_string()).expect("integers are valid JSON numbers")
}

fn factored(n: &BigUint) -> Outcome<String> {
    let f = factor_biguint(n, DEFAULT_BUDGET)?;
    let mut text = render(&f.primes.iter().map(|p| p.try_into().expect("small prime")).collect::<Vec<u64>>());
    if !f.is_complete() {
        text = format!("{text}×({})", f.cofactor);
    }
    Ok(text)
}

fn eval(function: Function, x: &str, format: Format) -> Outcome<Output> {
    use conum_core::variations::{cosc, ell, osc};
    let name = function_name(function);
    let (plain, value, integer): (String, Value, Option<BigUint>) = match function {
        Function::Jimm => match parse_input(x)? {
            Input::Rational(r) => {
                let j = jimm_qstar(&r)?;
                (j.to_string(), Value::String(j.to_string()), None)
            }
            Input::Surd(s) => {
                let j = jimm_surd(&s)?;
                (j.to_string(), j.to_json(), None)
            }
        },
        Function::Con | Function::Num => {
            let r = rational_input(x, name)?;
            let v = if function == Function::Con { con(&r)? } else { num(&r)? };
            (v.to_string(), big_json(&v), Some(v))
        }
        _ => {
            let r = rational_input(x, name)?;
            let v = match function {
                Function::Cds => cds(&r)?,
                Function::Osc => osc(&r)?,
                Function::Cosc => cosc(&r)?,
                _ => ell(&r)?,
            };
            (v.to_string(), big_json(&v), None)
        }
    };
    let text = match format {
        Format::Plain => plain,
        Format::Factored => match &integer {
            Some(n) => factored(n)?,
            None => plain,
        },
        Format::Json => json!({ "function": name, "x": x, "value": value }).to_string(),
        Format::Csv => format!("function,x,value\n{name},{},{plain}", csv_field(x)),
    };
    Ok(Output::ok(text))
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn table(denominator: u64, max_k: u64, format: Format) -> Outcome<Output> {
    if denominator == 0 || max_k == 0 {
        return Err(Error::Parse("denominator and max-k must be at least 1".into()).into());
    }
    let mut rows = Vec::new();
    for k in 1..=max_k {
        rows.push((k, con(&Rational::new(k.into(), denominator.into()))?));
    }
    let text = match format {
        Format::Plain => rows.iter().map(|(k, v)| format!("{k}\t{v}\n")).collect(),
        Format::Factored => {
            let mut out = String::new();
            for (k, v) in &rows {
                out += &format!("{k}\t{}\n", factored(v)?);
            }
            out
        }
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|(k, v)| Ok(json!({ "k": k, "con": big_json(v), "factored": factored(v)? })))
                .collect::<Outcome<_>>()?;
            json!({ "denominator": denominator, "rows": rows }).to_string()
        }
        Format::Csv => {
            let mut out = String::from("k,con,factored\n");
            for (k, v) in &rows {
                out += &format!("{k},{v},{}\n", factored(v)?);
            }
            out
        }
    };
    Ok(Output::ok(text))
}

fn verify(suite: Suite, format: Format) -> Outcome<Output> {
    let report = suite.run()?;
    for note in &report.notes {
        eprintln!("note: {note}");
    }
    eprintln!("{}", report.summary());
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&report.to_json()).expect("report serializes"),
        _ => report.to_csv(),
    };
    Ok(Output { text, ok: report.passed() })
}

fn tree_text(node: &Value, indent: usize, out: &mut String) {
    let t = &node["triple"];
    let show = |i: usize| t[i].to_string();
    out.push_str(&format!("{}({},{},{})\n", "  ".repeat(indent), show(0), show(1), show(2)));
    for child in node["children"].as_array().into_iter().flatten() {
        tree_text(child, indent + 1, out);
    }
}

fn resolve(m: &BigUint) -> Outcome<(MarkovTriple, conum_core::CharPair)> {
    let t = find_triple(m)?;
    let cp = char_pair(&t);
    Ok((t, cp))
}

fn markov(command: &MarkovCommand, format: Option<Format>) -> Outcome<Output> {
    let text = match command {
        MarkovCommand::Tree { depth } => {
            let tree = markov_tree_json(*depth);
            if format == Some(Format::Plain) {
                let mut out = String::new();
                tree_text(&tree, 0, &mut out);
                out
            } else {
                serde_json::to_string_pretty(&tree).expect("tree serializes")
            }
        }
        MarkovCommand::Gamma { m } => {
            let (_, cp) = resolve(m)?;
            let g = gamma(m, &cp)?;
            match format {
                Some(Format::Json) => g.to_json().to_string(),
                _ => g.to_string(),
            }
        }
        MarkovCommand::Jimm { m } => {
            let (_, cp) = resolve(m)?;
            let j = jimm_gamma(m, &cp)?;
            match format {
                Some(Format::Plain) => j.to_string(),
                _ => j.to_json().to_string(),
            }
        }
    };
    Ok(Output::ok(text))
}

fn alpha_cmd(matrix: &str, magic: bool, format: Format) -> Outcome<Output> {
    let m = Mat2::from_json(matrix)?;
    let image = if magic { alpha_magic(&m)? } else { alpha(&m) };
    let text = match format {
        Format::Json => json!({
            "matrix": m.to_json(),
            "word": decompose(&m).to_string(),
            "alpha": image.to_json(),
        })
        .to_string(),
        _ => image.to_string(),
    };
    Ok(Output::ok(text))
}

fn fiber_cmd(p: u64, format: Format) -> Outcome<Output> {
    let mut xs = fiber(p)?;
    xs.sort();
    let text = match format {
        Format::Json => {
            let xs: Vec<String> = xs.iter().map(ToString::to_string).collect();
            json!({ "p": p, "count": xs.len(), "fiber": xs }).to_string()
        }
        Format::Csv => std::iter::once("x".to_string()).chain(xs.iter().map(ToString::to_string)).collect::<Vec<_>>().join("\n"),
        _ => xs.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n"),
    };
    Ok(Output::ok(text))
}

fn variation(system: System, x: &str, (p, s, flavor): (CoeffParams, i32, Flavor), format: Format) -> Outcome<Output> {
    let x = rational_input(x, "the variation systems")?;
    let v = match system {
        System::Kappa => kappa(&p, &x)?,
        System::Eta => eta(&p, &x)?,
        System::G => g_ratio(&p, &x)?,
        System::H => h_ratio(&p, &x)?,
        System::WeightedNum => weighted_num(s, &x)?,
        System::WeightedCon => weighted_con(s, &x)?,
        System::Mixed => mixed_solution(&p, s, flavor, &x)?,
    };
    let text = match format {
        Format::Json => json!({ "x": x.to_string(), "value": v.to_string() }).to_string(),
        _ => v.to_string(),
    };
    Ok(Output::ok(text))
}
