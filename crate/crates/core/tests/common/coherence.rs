//! Over a degenerate type line the heterogeneous operations are the
//! homogeneous ones.

use cubeline::evaluator::judge_equal;
use cubeline::groupoid::{BuildResult, Workspace};
use cubeline::Term;

use super::Outcome;

pub const COMP_INSTANCES: [(&str, &str); 3] = [("p", "q"), ("q", "r"), ("s", "u")];
pub const INV_INSTANCES: [&str; 3] = ["p", "q", "s"];

fn agree(ws: &Workspace, out: &mut Outcome, what: String, het: BuildResult, hom: BuildResult) {
    match (het, hom) {
        (Ok(het), Ok(hom)) => out.record(
            het.passed() && hom.passed() && judge_equal(ws.context(), &het.var(), &hom.var()),
            || format!("{} is not {}", het.name, hom.name),
        ),
        (Err(e), _) | (_, Err(e)) => out.record(false, || format!("{what}: {e}")),
    }
}

pub fn run(ws: &mut Workspace) -> Outcome {
    let mut out = Outcome::default();
    for (p, q) in COMP_INSTANCES {
        let (p, q) = (Term::var(p), Term::var(q));
        let het = ws.het_comp(&p, &q);
        let hom = ws.comp(&p, &q);
        agree(ws, &mut out, format!("het_comp {p} {q}"), het, hom);
    }
    for p in INV_INSTANCES {
        let p = Term::var(p);
        let het = ws.het_inv(&p);
        let hom = ws.inv(&p);
        agree(ws, &mut out, format!("het_inv {p}"), het, hom);
    }
    out
}
