//! Harnesses shared by the integration tests and the acceptance report.
#![allow(dead_code)]

pub mod coherence;
pub mod faces;
pub mod fuzz;
pub mod golden;
pub mod jrule;
pub mod perturb;

use std::rc::Rc;

use cubeline::catalog::{self, Built};
use cubeline::syntax::parse_term;
use cubeline::{Context, Term, Tube};

/// Tally of one harness run.
#[derive(Debug, Default)]
pub struct Outcome {
    pub passed: usize,
    pub total: usize,
    pub failures: Vec<String>,
}

impl Outcome {
    pub fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else {
            self.failures.push(what());
        }
    }

    pub fn ok(&self) -> bool {
        self.total > 0 && self.failures.is_empty()
    }

    pub fn assert_ok(&self, label: &str) {
        assert!(
            self.ok(),
            "{label}: {}/{} passed; failures:\n{}",
            self.passed,
            self.total,
            self.failures.join("\n")
        );
    }
}

pub fn built() -> Built {
    catalog::build().expect("catalog builders succeed")
}

pub fn term(src: &str) -> Term {
    parse_term(src).unwrap_or_else(|e| panic!("fixture does not parse: {src}: {e}"))
}

/// `ctx` extended with the dimension names `dims`.
pub fn with_dims(ctx: &Context, dims: &[&str]) -> Context {
    dims.iter().fold(ctx.clone(), |c, d| c.with_dim(d))
}

/// Rebuilds `t` with `f` applied to each immediate subterm.
pub fn map_children(t: &Term, f: &mut dyn FnMut(&Term) -> Term) -> Term {
    let tubes = |ts: &[Tube], f: &mut dyn FnMut(&Term) -> Term| -> Vec<Tube> {
        ts.iter()
            .map(|tb| Tube {
                wall: Rc::new(f(&tb.wall)),
                ..tb.clone()
            })
            .collect()
    };
    match t {
        Term::Var(_) | Term::Univ => t.clone(),
        Term::DimAbs(x, b) => Term::DimAbs(x.clone(), Rc::new(f(b))),
        Term::DimApp(b, r) => Term::DimApp(Rc::new(f(b)), r.clone()),
        Term::Id {
            binder,
            family,
            left,
            right,
        } => Term::Id {
            binder: binder.clone(),
            family: Rc::new(f(family)),
            left: Rc::new(f(left)),
            right: Rc::new(f(right)),
        },
        Term::HCom {
            ty,
            from,
            to,
            cap,
            tubes: ts,
        } => Term::HCom {
            ty: Rc::new(f(ty)),
            from: from.clone(),
            to: to.clone(),
            cap: Rc::new(f(cap)),
            tubes: tubes(ts, f),
        },
        Term::Coe {
            binder,
            family,
            from,
            to,
            arg,
        } => Term::Coe {
            binder: binder.clone(),
            family: Rc::new(f(family)),
            from: from.clone(),
            to: to.clone(),
            arg: Rc::new(f(arg)),
        },
        Term::Com {
            binder,
            family,
            from,
            to,
            cap,
            tubes: ts,
        } => Term::Com {
            binder: binder.clone(),
            family: Rc::new(f(family)),
            from: from.clone(),
            to: to.clone(),
            cap: Rc::new(f(cap)),
            tubes: tubes(ts, f),
        },
        Term::Pi(v, a, b) => Term::Pi(v.clone(), Rc::new(f(a)), Rc::new(f(b))),
        Term::Lam(v, b) => Term::Lam(v.clone(), Rc::new(f(b))),
        Term::App(a, b) => Term::App(Rc::new(f(a)), Rc::new(f(b))),
    }
}

/// Number of preorder positions where `hit` fires.
pub fn count_sites(t: &Term, hit: &dyn Fn(&Term) -> Option<Term>) -> usize {
    let mut n = 0;
    rewrite_nth(t, hit, usize::MAX, &mut n);
    n
}

/// Replaces the `target`-th preorder position where `hit` fires.
pub fn rewrite_at(t: &Term, hit: &dyn Fn(&Term) -> Option<Term>, target: usize) -> Term {
    let mut n = 0;
    rewrite_nth(t, hit, target, &mut n)
}

fn rewrite_nth(t: &Term, hit: &dyn Fn(&Term) -> Option<Term>, target: usize, n: &mut usize) -> Term {
    if let Some(r) = hit(t) {
        let here = *n;
        *n += 1;
        if here == target {
            return r;
        }
    }
    map_children(t, &mut |c| rewrite_nth(c, hit, target, n))
}
