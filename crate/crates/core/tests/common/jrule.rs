//! Path induction: the β-law at reflexivity and the endpoint collapses of
//! the coercion line `x. P (p @ x) (is_refl_p @ x)`.

use cubeline::evaluator::{face, judge_equal, normalize};
use cubeline::groupoid::Workspace;
use cubeline::syntax::Side;

use super::{term, with_dims, Outcome};

/// Motive and seed of each instance family.
pub const FAMILIES: [(&str, &str); 5] = [
    ("P", "seed"),
    ("motive_const", "e"),
    ("motive_from", "refl_a"),
    ("motive_to", "refl_a"),
    ("motive_loop", "refl_refl_a"),
];

pub fn run(ws: &Workspace) -> Outcome {
    let mut out = Outcome::default();
    let ctx = with_dims(ws.context(), &["i"]);
    for (motive, seed) in FAMILIES {
        for path in ["p", "refl_a"] {
            let j = format!("J_{motive}_{path}");
            out.record(ws.get(&j).is_some_and(|c| c.passed()), || format!("{j} does not check"));
        }

        let at_refl = term(&format!("J_{motive}_refl_a"));
        let result = normalize(&ctx, &at_refl);
        out.record(judge_equal(&ctx, result.term(), &term(seed)), || {
            format!("J_{motive}_refl_a normalizes to {result}, not the seed {seed}")
        });

        // P(p@x, is_refl_p@x) at x=0 is P(a, refl_a) and at x=1 is P(b, p).
        for (path, end) in [("p", "b"), ("refl_a", "a")] {
            let line = term(&format!("{motive} ({path} @ i) (is_refl_{path} @ i)"));
            let collapses = [
                (Side::Zero, format!("{motive} a refl_a")),
                (Side::One, format!("{motive} {end} {path}")),
            ];
            for (side, expected) in collapses {
                let actual = face(&ctx, &line, "i", side);
                out.record(judge_equal(&ctx, actual.term(), &term(&expected)), || {
                    format!("{motive} over {path} at i={side}: expected {expected}, found {actual}")
                });
            }
        }
    }
    out
}
