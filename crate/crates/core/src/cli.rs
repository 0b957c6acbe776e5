//! Command-line front end.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::catalog;
use crate::context::Context;
use crate::kernel::{boundary_report, check_decls, DeclVerdict, TraceLine};
use crate::syntax::{parse_file, Decl, Term};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "cubeline", version, about = "Check cubical proof terms and their boundaries")]
pub struct RunConfig {
    /// Emit only the stable trace lines.
    #[arg(long, global = true)]
    pub machine: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Elaborate and check declaration files.
    Check {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Check the built-in catalogs.
    Stdlib {
        /// Print every adjacency, including those of nested boxes.
        #[arg(long)]
        verbose: bool,
        /// Re-check `stdlib.cube` and `theorems.cube` from this directory.
        #[arg(long, value_name = "DIR")]
        source: Option<PathBuf>,
    },
    /// Print the faces of a definition's body.
    Faces {
        file: PathBuf,
        #[arg(long, value_name = "NAME")]
        term: String,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(&config, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            code
        }
    }
}

pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match &config.command {
        Command::Check { files } => run_check(config, files, out),
        Command::Stdlib { verbose, source } => run_stdlib(config, *verbose, source.as_deref(), out),
        Command::Faces { file, term } => run_faces(file, term, out),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

type CliResult = Result<i32, String>;

fn load(path: &Path) -> Result<Vec<Decl>, String> {
    let src = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_file(&src).map_err(|e| format!("{}: {e}", path.display()))
}

fn emit(config: &RunConfig, verbose: bool, verdicts: &[DeclVerdict], out: &mut dyn Write) -> std::io::Result<()> {
    for v in verdicts {
        print_verdict(config.machine, verbose, v, out)?;
    }
    Ok(())
}

fn print_verdict(machine: bool, verbose: bool, v: &DeclVerdict, out: &mut dyn Write) -> std::io::Result<()> {
    let shown = v.verdict.trace.iter().filter(|line| match line {
        TraceLine::Adj { depth, ok, .. } => verbose || (*depth <= 1 && (machine || !ok)),
        _ => true,
    });
    for line in shown {
        writeln!(out, "{line}")?;
    }
    if let (false, Err(e)) = (machine, &v.verdict.result) {
        writeln!(out, "  {e}")?;
    }
    writeln!(out, "{}", v.check_line())
}

fn run_check(config: &RunConfig, files: &[PathBuf], out: &mut dyn Write) -> CliResult {
    let mut decls = Vec::new();
    for f in files {
        decls.extend(load(f)?);
    }
    // Later files may use what earlier ones declare.
    let mut ctx = Context::new();
    let verdicts = check_decls(&mut ctx, &decls);
    emit(config, false, &verdicts, out).map_err(|e| e.to_string())?;
    let ok = verdicts.iter().all(|v| v.verdict.passed());
    Ok(if ok { EXIT_OK } else { EXIT_FAIL })
}

fn run_faces(file: &Path, name: &str, out: &mut dyn Write) -> CliResult {
    let decls = load(file)?;
    let mut ctx = Context::new();
    let verdicts = check_decls(&mut ctx, &decls);
    let Some(def) = ctx.definition(name).cloned() else {
        return Err(format!("no definition named {name}"));
    };
    let mut body = def;
    while let Term::DimAbs(x, inner) = body {
        let x = x.clone();
        ctx.declare_dim(&x);
        body = (*inner).clone();
    }
    let report = boundary_report(&ctx, &body);
    for line in report.trace() {
        writeln!(out, "{line}").map_err(|e| e.to_string())?;
    }
    let pass = verdicts.iter().find(|v| v.name == name).is_none_or(|v| v.verdict.passed());
    Ok(if pass { EXIT_OK } else { EXIT_FAIL })
}

fn run_stdlib(config: &RunConfig, verbose: bool, source: Option<&Path>, out: &mut dyn Write) -> CliResult {
    let report = match source {
        None => catalog::check_embedded()?,
        Some(dir) => {
            let read = |file: &str| {
                let path = dir.join(file);
                std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))
            };
            catalog::check_sources(&read("stdlib.cube")?, &read("theorems.cube")?)?
        }
    };
    let io = |e: std::io::Error| e.to_string();
    for v in &report.verdicts {
        if config.machine || verbose || !v.verdict.passed() {
            print_verdict(config.machine, verbose, v, out).map_err(io)?;
        }
    }
    if config.machine {
        for (line, ok) in &report.lines {
            writeln!(out, "LEMMA {} {}: {}", line.key, line.lemma, pass_word(*ok)).map_err(io)?;
        }
    } else {
        let width = report.lines.iter().map(|(l, _)| l.key.len()).max().unwrap_or(0);
        let lemma_width = report.lines.iter().map(|(l, _)| l.lemma.len()).max().unwrap_or(0);
        for (line, ok) in &report.lines {
            writeln!(
                out,
                "{:width$}  {:lemma_width$}  {}",
                line.key,
                line.lemma,
                pass_word(*ok)
            )
            .map_err(io)?;
        }
        let passed = report.lines.iter().filter(|(_, ok)| *ok).count();
        writeln!(
            out,
            "{passed}/{} lemmas, {} declarations checked",
            report.lines.len(),
            report.verdicts.len()
        )
        .map_err(io)?;
    }
    Ok(if report.all_pass() { EXIT_OK } else { EXIT_FAIL })
}

fn pass_word(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}
