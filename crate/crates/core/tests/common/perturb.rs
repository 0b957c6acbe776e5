//! Single mutations of the displayed open boxes. Every mutant must be
//! rejected by the kernel.

use std::rc::Rc;

use cubeline::dims::{alpha_eq, subst};
use cubeline::groupoid::Workspace;
use cubeline::kernel::check_member;
use cubeline::syntax::{Dim, Term, Tube};

use super::{count_sites, rewrite_at, Outcome};

/// The boxes drawn as diagrams, by definition name.
pub const DIAGRAMS: [&str; 12] = [
    "inv_p",
    "comp_p_q",
    "rc_p",
    "swap_alpha",
    "inversability_p",
    "op1_p",
    "lc_p",
    "op2_p",
    "lu_p",
    "bi_alpha_beta",
    "het_inv_pe",
    "is_refl_p",
];

/// Each name is renamed to one with different endpoints.
const RENAMES: &[(&str, &str)] = &[
    ("a", "b"),
    ("b", "a"),
    ("c", "d"),
    ("d", "c"),
    ("e", "f"),
    ("p", "s"),
    ("q", "r"),
    ("r", "q"),
    ("s", "p"),
    ("t", "u"),
    ("u", "t"),
    ("A", "B"),
    ("E", "F"),
    ("pe", "qf"),
    ("alpha", "beta"),
    ("beta", "alpha"),
    ("refl_a", "refl_b"),
    ("refl_b", "refl_a"),
    ("refl_A", "refl_B"),
    ("inv_p", "inv_s"),
    ("iu_b", "iu_a"),
];

#[derive(Clone, Debug)]
pub struct Mutant {
    pub diagram: &'static str,
    pub kind: String,
    pub term: Term,
}

fn peel(t: &Term) -> (Vec<cubeline::Name>, &Term) {
    let mut binders = Vec::new();
    let mut body = t;
    while let Term::DimAbs(x, b) = body {
        binders.push(x.clone());
        body = b;
    }
    (binders, body)
}

fn wrap(binders: &[cubeline::Name], body: Term) -> Term {
    binders
        .iter()
        .rev()
        .fold(body, |acc, x| Term::DimAbs(x.clone(), Rc::new(acc)))
}

fn box_parts(t: &Term) -> Option<(&Term, &Dim, &[Tube])> {
    match t {
        Term::HCom { cap, from, tubes, .. } | Term::Com { cap, from, tubes, .. } => Some((cap, from, tubes)),
        _ => None,
    }
}

fn with_box(t: &Term, cap: Term, tubes: Vec<Tube>) -> Term {
    match t.clone() {
        Term::HCom { ty, from, to, .. } => Term::HCom {
            ty,
            from,
            to,
            cap: Rc::new(cap),
            tubes,
        },
        Term::Com {
            binder,
            family,
            from,
            to,
            ..
        } => Term::Com {
            binder,
            family,
            from,
            to,
            cap: Rc::new(cap),
            tubes,
        },
        other => other,
    }
}

/// All single mutations of one diagram's term.
pub fn mutants(diagram: &'static str, original: &Term) -> Vec<Mutant> {
    let mut out = Vec::new();
    let (binders, body) = peel(original);
    if let Some((cap, _, tubes)) = box_parts(body) {
        for (i, tb) in tubes.iter().enumerate() {
            let mut flipped = tubes.to_vec();
            flipped[i].side = tb.side.flip();
            out.push(Mutant {
                diagram,
                kind: format!("flip tube {i} to {}={}", tb.extent, flipped[i].side),
                term: wrap(&binders, with_box(body, cap.clone(), flipped)),
            });

            // The wall, read along the tube's extent, becomes the cap and
            // the cap, read along the fill direction, becomes the wall.
            if let Dim::Name(x) = &tb.extent {
                let new_cap = subst(&tb.wall, &tb.binder, Dim::Name(x.clone()));
                let new_wall = subst(cap, x, Dim::Name(tb.binder.clone()));
                let mut swapped = tubes.to_vec();
                swapped[i].wall = Rc::new(new_wall);
                out.push(Mutant {
                    diagram,
                    kind: format!("swap cap with tube {i}"),
                    term: wrap(&binders, with_box(body, new_cap, swapped)),
                });
            }
        }
    }
    let hit = |t: &Term| match t {
        Term::Var(n) => RENAMES
            .iter()
            .find(|(from, _)| **from == **n)
            .map(|(_, to)| Term::var(to)),
        _ => None,
    };
    for k in 0..count_sites(original, &hit) {
        out.push(Mutant {
            diagram,
            kind: format!("rename endpoint occurrence {k}"),
            term: rewrite_at(original, &hit, k),
        });
    }
    out.retain(|m| !alpha_eq(&m.term, original));
    out
}

/// Mutants per diagram, and every accepted mutant as a failure.
pub fn run(ws: &Workspace) -> (Outcome, Vec<(&'static str, usize)>) {
    let mut out = Outcome::default();
    let mut per_diagram = Vec::new();
    for name in DIAGRAMS {
        let Some(c) = ws.get(name) else {
            out.record(false, || format!("{name}: not built"));
            continue;
        };
        let ms = mutants(name, &c.term);
        per_diagram.push((name, ms.len()));
        for m in ms {
            let accepted = check_member(ws.context(), &m.term, &c.claimed_type).passed();
            out.record(!accepted, || format!("{}: {} accepted: {}", m.diagram, m.kind, m.term));
        }
    }
    (out, per_diagram)
}
