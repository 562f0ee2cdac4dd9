//! The `trivext` command line.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Read as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use trivext_core::cuts::{admissible_cuts, is_trivial_extension, wakamatsu_partners, SearchLimits};
use trivext_core::trivext::symmetric_form;
use trivext_core::{Error, FdAlgebra, Field, Presentation, TrivialExtension};

use crate::format::{emit_presentation, parse_presentation_with};
use crate::report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BOUND: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "trivext", version, about = "Bound quiver algebras and their trivial extensions")]
struct Args {
    #[command(subcommand)]
    sub: Sub,
    #[command(flatten)]
    options: Options,
}

#[derive(clap::Args, Debug, Clone, Copy)]
pub struct Options {
    /// Degree bound for Groebner completion.
    #[arg(long, global = true, default_value_t = 64)]
    pub max_degree: usize,
    /// `q` or `fp:<p>`; a `field` line in the file takes precedence.
    #[arg(long, global = true, default_value = "q", value_parser = parse_field)]
    pub field: Field,
    #[arg(long, global = true)]
    pub json: bool,
    #[arg(long, global = true)]
    pub quiet: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { max_degree: trivext_core::DEFAULT_BOUND, field: Field::Rationals, json: false, quiet: false }
    }
}

#[derive(clap::Args, Debug)]
struct FileArg {
    /// Presentation file, or `-` for standard input.
    file: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// Dimension and monomial basis.
    Basis(FileArg),
    /// Basis of the two-sided socle, by degree.
    Socle(FileArg),
    /// A presentation of the trivial extension.
    Trivext(FileArg),
    /// Elementary cycles of the trivial extension with their weights.
    Cycles(FileArg),
    /// Admissible cuts of the trivial extension.
    Cuts(FileArg),
    /// Decide whether the input is a trivial extension.
    Check(FileArg),
    /// Algebras with the same trivial extension.
    Partners(FileArg),
    /// Check the relations of the trivial extension and its symmetric form.
    Verify(FileArg),
}

impl Sub {
    fn split(self) -> (Command, PathBuf) {
        match self {
            Sub::Basis(f) => (Command::Basis, f.file),
            Sub::Socle(f) => (Command::Socle, f.file),
            Sub::Trivext(f) => (Command::Trivext, f.file),
            Sub::Cycles(f) => (Command::Cycles, f.file),
            Sub::Cuts(f) => (Command::Cuts, f.file),
            Sub::Check(f) => (Command::Check, f.file),
            Sub::Partners(f) => (Command::Partners, f.file),
            Sub::Verify(f) => (Command::Verify, f.file),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Basis,
    Socle,
    Trivext,
    Cycles,
    Cuts,
    Check,
    Partners,
    Verify,
}

pub const COMMANDS: [Command; 8] = [
    Command::Basis,
    Command::Socle,
    Command::Trivext,
    Command::Cycles,
    Command::Cuts,
    Command::Check,
    Command::Partners,
    Command::Verify,
];

fn parse_field(s: &str) -> Result<Field, String> {
    match s {
        "q" => Ok(Field::Rationals),
        _ => {
            let p = s.strip_prefix("fp:").ok_or("expected `q` or `fp:<p>`")?;
            let p: u64 = p.parse().map_err(|_| format!("bad prime `{p}`"))?;
            Field::prime(p).map_err(|e| e.to_string())
        }
    }
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Basis => "basis",
            Command::Socle => "socle",
            Command::Trivext => "trivext",
            Command::Cycles => "cycles",
            Command::Cuts => "cuts",
            Command::Check => "check",
            Command::Partners => "partners",
            Command::Verify => "verify",
        }
    }
}

/// What a command produced: JSON result, human text, and exit code.
pub struct Outcome {
    pub result: Value,
    pub text: String,
    pub code: i32,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BoundExceeded(_)
        | Error::NotFiniteDimensional(_)
        | Error::SearchBoundExceeded(_)
        | Error::Inconclusive => EXIT_BOUND,
        _ => EXIT_INPUT,
    }
}

/// Runs one command on a parsed presentation.
pub fn execute(command: Command, p: &Presentation, bound: usize) -> Result<Outcome, Error> {
    let a = FdAlgebra::build(p.clone(), bound)?;
    let q = a.quiver();
    let mut text = String::new();
    let mut code = EXIT_OK;
    let result = match command {
        Command::Basis => {
            let _ = writeln!(text, "dim {}", a.dim());
            for b in a.basis() {
                let _ = writeln!(text, "{}", q.format_path(b));
            }
            report::basis(&a)
        }
        Command::Socle => {
            let socle = report::sorted_socle(&a);
            let _ = writeln!(text, "socle dim {}", socle.len());
            for s in &socle {
                let _ = writeln!(
                    text,
                    "[{}] {} -> {}: {}",
                    report::degree(&a, s),
                    q.vertex_name(s.source),
                    q.vertex_name(s.target),
                    q.format_element(&s.element(&a))
                );
            }
            report::socle(&a)
        }
        Command::Trivext => {
            let t = TrivialExtension::new(a.clone());
            let pt = t.presentation()?;
            text = emit_presentation(&pt);
            json!({
                "dim_a": a.dim(),
                "dim_t": t.dim(),
                "nilpotency_index": t.nilpotency_index(),
                "presentation": text,
            })
        }
        Command::Cycles => {
            let t = TrivialExtension::new(a.clone());
            let tq = t.quiver();
            let _ = writeln!(text, "{} elementary cycles", t.elementary_cycles().len());
            for c in t.elementary_cycles() {
                let _ = writeln!(text, "{}  weight {}", tq.format_path(&c.cycle()), c.weight);
            }
            report::cycles(&t)
        }
        Command::Cuts => {
            let t = TrivialExtension::new(a.clone());
            let tq = t.quiver();
            let cuts = admissible_cuts(t.elementary_cycles().iter().map(|c| &c.class));
            let _ = writeln!(text, "{} admissible cuts", cuts.len());
            for c in &cuts {
                let _ = writeln!(text, "{{{}}}", c.names(tq).join(", "));
            }
            json!({ "count": cuts.len(), "cuts": cuts.iter().map(|c| report::cut(tq, c)).collect::<Vec<_>>() })
        }
        Command::Check => match is_trivial_extension(p, &SearchLimits::default())? {
            Some(w) => {
                let _ = writeln!(text, "trivial extension of:");
                text.push_str(&emit_presentation(&w.base));
                let _ = writeln!(text, "cut: {{{}}}", w.cut.names(q).join(", "));
                let v = report::witness(q, &w);
                for pair in v["correspondence"].as_array().into_iter().flatten() {
                    let _ = writeln!(
                        text,
                        "  {} <-> {}",
                        pair["arrow"].as_str().unwrap_or(""),
                        pair["socle"].as_str().unwrap_or("?")
                    );
                }
                json!({ "trivial_extension": true, "witness": v })
            }
            None => {
                code = EXIT_NEGATIVE;
                let _ = writeln!(text, "not a trivial extension");
                json!({ "trivial_extension": false, "witness": null })
            }
        },
        Command::Partners => {
            let t = TrivialExtension::new(a.clone());
            let reports = wakamatsu_partners(&a)?;
            let _ = writeln!(text, "{} partners", reports.len());
            for r in &reports {
                let _ = writeln!(
                    text,
                    "cut {{{}}}: dim S {}, dim M {}, dim N {}, certificates {}",
                    r.cut.names(t.quiver()).join(", "),
                    r.s_basis.len(),
                    r.m_basis.len(),
                    r.n_basis.len(),
                    if r.holds() { "hold" } else { "FAIL" }
                );
                for l in emit_presentation(&r.partner).lines() {
                    let _ = writeln!(text, "  {l}");
                }
            }
            json!({ "count": reports.len(), "partners": reports.iter().map(|r| report::partner(&t, r)).collect::<Vec<_>>() })
        }
        Command::Verify => {
            let t = TrivialExtension::new(a.clone());
            let rel = t.verify_relation_theorem()?;
            let props = t.cycle_properties();
            let form = symmetric_form(t.sc());
            let v = report::verification(&rel, &props, &form);
            for c in rel.items.iter().chain(&props) {
                let _ = writeln!(
                    text,
                    "{:<5} {} ({} checked){}",
                    if c.passed { "ok" } else { "FAIL" },
                    c.name,
                    c.checked,
                    c.witness.as_ref().map(|w| format!(": {w}")).unwrap_or_default()
                );
            }
            let _ = writeln!(
                text,
                "dim KQ/I' = {} (2 dim A = {})",
                rel.quotient_dim.map_or("?".into(), |d| d.to_string()),
                rel.expected_dim
            );
            let _ = writeln!(
                text,
                "form: symmetric {}, associative {}, nondegenerate {} (rank {} of {})",
                form.symmetric, form.associative, form.nondegenerate, form.rank, form.dim
            );
            if v["passed"] != json!(true) {
                code = EXIT_NEGATIVE;
            }
            v
        }
    };
    Ok(Outcome { result, text, code })
}

fn read_input(path: &std::path::Path) -> std::io::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
    }
}

/// Output for `input` as the command would print it: stdout, stderr, exit code.
pub fn run_on_text(command: Command, options: &Options, input: &str) -> (String, String, i32) {
    let p = match parse_presentation_with(input, options.field) {
        Ok(p) => p,
        Err(e) => return (String::new(), format!("error: {e}\n"), EXIT_INPUT),
    };
    match execute(command, &p, options.max_degree) {
        Ok(out) => {
            let stdout = if options.quiet {
                String::new()
            } else if options.json {
                report::to_string(&report::envelope(command.name(), input, p.field(), out.result))
            } else {
                out.text
            };
            (stdout, String::new(), out.code)
        }
        Err(e) => (String::new(), format!("error: {e}\n"), exit_code(&e)),
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let (command, file) = args.sub.split();
    let input = match read_input(&file) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {}: {e}", file.display());
            return EXIT_INPUT;
        }
    };
    let (out, err, code) = run_on_text(command, &args.options, &input);
    print!("{out}");
    eprint!("{err}");
    code
}
