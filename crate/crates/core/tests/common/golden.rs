//! Terms displayed in the proofs, transcribed into the surface grammar.
//!
//! Sub-constructions a proof names (p⁻¹, inv_p, op1, ...) are referenced by
//! their definition names; fillers are spelled out as `hcom 0~>y`. The
//! ambient square `alpha` is `p = r` over `s, t`, so the square swap display
//! reads `s, t` where the proof writes `r, s`.

use cubeline::dims::alpha_eq;
use cubeline::groupoid::Workspace;

use super::{term, Outcome};

pub const FIXTURES: [(&str, &str); 10] = [
    ("refl_a", "<x> a"),
    ("inv_p", "<x> hcom 0~>1 A (refl_a @ x) [x=0 y. p @ y | x=1 y. refl_a @ y]"),
    ("comp_p_q", "<x> hcom 0~>1 A (p @ x) [x=0 y. refl_a @ y | x=1 y. q @ y]"),
    (
        "rc_p",
        "<z> <x> hcom 0~>1 A (p @ x) [x=0 y. a | x=1 y. inv_p @ y \
         | z=0 y. hcom 0~>x A (refl_a @ y) [y=0 w. p @ w | y=1 w. refl_a @ w] \
         | z=1 y. hcom 0~>y A (p @ x) [x=0 w. refl_a @ w | x=1 w. inv_p @ w]]",
    ),
    (
        "swap_alpha",
        "<x> <z> hcom 0~>1 A (p @ z) [x=0 y. alpha @ y @ z | x=1 y. p @ z \
         | z=0 y. hcom 0~>y A (refl_a @ x) [x=0 w. s @ w | x=1 w. refl_a @ w] \
         | z=1 y. hcom 0~>y A (refl_b @ x) [x=0 w. t @ w | x=1 w. refl_b @ w]]",
    ),
    (
        "inversability_p",
        "<z> <x> hcom 0~>1 A \
         (hcom 0~>1 A b [x=0 y. iu_b @ z @ y | x=1 y. b | z=0 y. b \
           | z=1 y. hcom 0~>y A (refl_b @ x) [x=0 w. inv_refl_b @ w | x=1 w. refl_b @ w]]) \
         [x=0 y. inv_p @ y | x=1 y. comp_inv_p_p @ y \
         | z=0 y. hcom 0~>x A (inv_p @ y) [y=0 w. refl_b @ w | y=1 w. p @ w] \
         | z=1 y. swap_swap_inversability_X_p @ x @ y]",
    ),
    (
        "lc_p",
        "<z> <x> hcom 0~>1 A (inv_p @ x) [x=0 y. b | x=1 y. inv_inversability_p @ z @ y \
         | z=0 y. op1_inv_p @ y @ x \
         | z=1 y. hcom 0~>y A (inv_p @ x) [x=0 w. refl_b @ w | x=1 w. p @ w]]",
    ),
    (
        "lu_p",
        "<z> <x> hcom 0~>1 A (hcom 0~>x A (refl_a @ z) [z=0 y. p @ y | z=1 y. refl_a @ y]) \
         [x=0 y. a | x=1 y. op2_p @ y @ z | z=0 y. p @ x \
         | z=1 y. hcom 0~>y A (refl_a @ x) [x=0 w. refl_a @ w | x=1 w. p @ w]]",
    ),
    (
        "het_inv_pe",
        "<x> com 0~>1 (y. hcom 0~>y U (refl_A @ x) [x=0 w. E @ w | x=1 w. refl_A @ w]) a \
         [x=0 y. pe @ y | x=1 y. a]",
    ),
    (
        "het_comp_pe_qf",
        "<x> com 0~>1 (y. hcom 0~>y U (E @ x) [x=0 w. refl_A @ w | x=1 w. F @ w]) (pe @ x) \
         [x=0 y. refl_a @ y | x=1 y. qf @ y]",
    ),
];

/// Each fixture must α-equal the builder's term, and the builder's term
/// must check.
pub fn run(ws: &Workspace) -> Outcome {
    let mut out = Outcome::default();
    for (name, display) in FIXTURES {
        let expected = term(display);
        match ws.get(name) {
            Some(c) => out.record(alpha_eq(&c.term, &expected) && c.passed(), || {
                format!("{name}: built {} but displayed {expected}", c.term)
            }),
            None => out.record(false, || format!("{name}: not built")),
        }
    }
    out
}
