//! WebAssembly bindings for the demo page in `www/`.
//!
//! Every entry point takes the editor's source text and returns plain text,
//! so the page needs no glue beyond setting `textContent`.

use std::fmt::Write as _;

use cubeline::dims::free_dims;
use cubeline::kernel::{boundary_report, check_decls, DeclVerdict};
use cubeline::syntax::{parse_file, parse_term};
use cubeline::{normalize as normalize_term, Context, Term};
use wasm_bindgen::prelude::*;

fn load(source: &str) -> Result<(Context, Vec<DeclVerdict>), String> {
    let decls = parse_file(source).map_err(|e| format!("error: {e}"))?;
    let mut ctx = Context::new();
    let verdicts = check_decls(&mut ctx, &decls);
    Ok((ctx, verdicts))
}

/// Trace and verdict lines for every declaration.
#[wasm_bindgen]
pub fn check(source: &str) -> String {
    let (_, verdicts) = match load(source) {
        Ok(loaded) => loaded,
        Err(e) => return e,
    };
    let mut out = String::new();
    for v in &verdicts {
        for line in &v.verdict.trace {
            let _ = writeln!(out, "{line}");
        }
        if let Err(e) = &v.verdict.result {
            let _ = writeln!(out, "  {e}");
        }
        let _ = writeln!(out, "{}", v.check_line());
    }
    let passed = verdicts.iter().filter(|v| v.verdict.passed()).count();
    let _ = write!(out, "{passed}/{} declarations pass", verdicts.len());
    out
}

/// The faces of definition `name`, one `FACE` line each.
#[wasm_bindgen]
pub fn faces(source: &str, name: &str) -> String {
    let (mut ctx, _) = match load(source) {
        Ok(loaded) => loaded,
        Err(e) => return e,
    };
    let Some(mut body) = ctx.definition(name).cloned() else {
        return format!("error: no definition named {name}");
    };
    while let Term::DimAbs(x, inner) = body {
        ctx.declare_dim(&x);
        body = (*inner).clone();
    }
    let lines: Vec<String> = boundary_report(&ctx, &body).trace().iter().map(|l| l.to_string()).collect();
    if lines.is_empty() {
        "(no free dimensions)".to_string()
    } else {
        lines.join("\n")
    }
}

/// The normal form of `term` under the declarations in `source`.
#[wasm_bindgen]
pub fn normalize(source: &str, term: &str) -> String {
    let (mut ctx, _) = match load(source) {
        Ok(loaded) => loaded,
        Err(e) => return e,
    };
    let t = match parse_term(term) {
        Ok(t) => t,
        Err(e) => return format!("error: {e}"),
    };
    for x in free_dims(&t) {
        ctx.declare_dim(&x);
    }
    normalize_term(&ctx, &t).to_string()
}
