//! Face normalization and decidable judgmental equality.
//!
//! `normalize` rewrites to a fixpoint of:
//!
//! * (β) `(<x> M) @ r  ⟶  M⟨r/x⟩` and `(\v. M) N ⟶ M[N/v]`;
//! * (η) `<x> (M @ x)  ⟶  M` when `x` is not free in `M`, and
//!   `\v. M v ⟶ M` when `v` is not free in `M`;
//! * (endpoint) `P @ ε  ⟶  M_ε` when `P` is a neutral of type `Id (x. A) M_0 M_1`;
//! * (E1) `hcom r~>r` is its cap;
//! * (E2) an `hcom` whose tube `x=ε` has had `ε` substituted for `x` is that
//!   wall at the target endpoint; tubes on the opposite endpoint are dropped;
//! * (E3) `coe r~>r` and `coe` over a family degenerate in its binder are the
//!   identity;
//! * (E4) `com` unfolds to `hcom` of coercions;
//! * (E5) `hcom` and `coe` in an identification type compute pointwise when
//!   applied to a dimension name;
//! * (E6) an `hcom` whose walls are all constant in the fill direction and
//!   agree with the cap on their face is the cap.
//!
//! Definitions are unfolded. Tubes of normal forms are sorted by extent and
//! side.

use std::rc::Rc;

use crate::context::Context;
use crate::dims::{alpha_eq, free_dims, free_vars, fresh_from, is_degenerate_in, subst, subst_var};
use crate::syntax::{Dim, Name, Side, Term, Tube};

/// A term in normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm(pub Term);

impl NormalForm {
    pub fn term(&self) -> &Term {
        &self.0
    }

    pub fn into_term(self) -> Term {
        self.0
    }
}

impl std::fmt::Display for NormalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Normalizes `t` under `ctx`.
pub fn normalize(ctx: &Context, t: &Term) -> NormalForm {
    NormalForm(Eval { ctx }.norm(t))
}

/// The face `t⟨side/x⟩`, normalized.
pub fn face(ctx: &Context, t: &Term, x: &str, side: Side) -> NormalForm {
    NormalForm(Eval { ctx }.norm(&subst(t, x, side.into())))
}

/// Judgmental equality: α-equivalence of normal forms.
pub fn judge_equal(ctx: &Context, a: &Term, b: &Term) -> bool {
    if alpha_eq(a, b) {
        return true;
    }
    let ev = Eval { ctx };
    alpha_eq(&ev.norm(a), &ev.norm(b))
}

/// The type of a neutral normal form, normalized, if it can be read off.
pub fn neutral_type(ctx: &Context, t: &Term) -> Option<Term> {
    Eval { ctx }.neutral_type(t)
}

/// Unfolds `com` into `hcom` of coercions:
///
/// `com r~>s (y. A) M [ξ y. N]  =  hcom r~>s A⟨s/y⟩ (coe r~>s (y. A) M) [ξ y. coe y~>s (y. A) N]`.
pub fn expand_com(
    binder: &Name,
    family: &Rc<Term>,
    from: &Dim,
    to: &Dim,
    cap: &Rc<Term>,
    tubes: &[Tube],
) -> Term {
    let mut avoid = free_dims(family);
    avoid.remove(binder);
    for d in [from, to] {
        if let Dim::Name(n) = d {
            avoid.insert(n.clone());
        }
    }
    let tubes = tubes
        .iter()
        .map(|tube| {
            let (y, wall) = if avoid.contains(&tube.binder) {
                let mut avoid = avoid.clone();
                avoid.extend(free_dims(&tube.wall));
                let y = fresh_from(&tube.binder, &avoid);
                let wall = subst(&tube.wall, &tube.binder, Dim::Name(y.clone()));
                (y, Rc::new(wall))
            } else {
                (tube.binder.clone(), tube.wall.clone())
            };
            Tube {
                extent: tube.extent.clone(),
                side: tube.side,
                binder: y.clone(),
                wall: Rc::new(Term::Coe {
                    binder: binder.clone(),
                    family: family.clone(),
                    from: Dim::Name(y),
                    to: to.clone(),
                    arg: wall,
                }),
            }
        })
        .collect();
    Term::HCom {
        ty: Rc::new(subst(family, binder, to.clone())),
        from: from.clone(),
        to: to.clone(),
        cap: Rc::new(Term::Coe {
            binder: binder.clone(),
            family: family.clone(),
            from: from.clone(),
            to: to.clone(),
            arg: cap.clone(),
        }),
        tubes,
    }
}

struct Eval<'c> {
    ctx: &'c Context,
}

impl<'c> Eval<'c> {
    fn norm(&self, t: &Term) -> Term {
        match t {
            Term::Var(n) => self.unfold(n).unwrap_or_else(|| t.clone()),
            Term::Univ => Term::Univ,
            Term::DimAbs(x, body) => eta(x, self.norm(body)),
            Term::DimApp(f, r) => self.apply_dim(self.norm(f), r),
            Term::Id {
                binder,
                family,
                left,
                right,
            } => Term::Id {
                binder: binder.clone(),
                family: Rc::new(self.norm(family)),
                left: Rc::new(self.norm(left)),
                right: Rc::new(self.norm(right)),
            },
            Term::HCom {
                ty,
                from,
                to,
                cap,
                tubes,
            } => self.hcom(ty, from, to, cap, tubes),
            Term::Coe {
                binder,
                family,
                from,
                to,
                arg,
            } => {
                if from == to {
                    return self.norm(arg);
                }
                let family = self.norm(family);
                if is_degenerate_in(&family, binder) {
                    return self.norm(arg);
                }
                Term::Coe {
                    binder: binder.clone(),
                    family: Rc::new(family),
                    from: from.clone(),
                    to: to.clone(),
                    arg: Rc::new(self.norm(arg)),
                }
            }
            Term::Com {
                binder,
                family,
                from,
                to,
                cap,
                tubes,
            } => self.norm(&expand_com(binder, family, from, to, cap, tubes)),
            Term::Pi(v, a, b) => {
                let inner = self.shadowed(v);
                Term::Pi(v.clone(), Rc::new(self.norm(a)), Rc::new(inner.norm_in(b)))
            }
            Term::Lam(v, b) => {
                let inner = self.shadowed(v);
                lam_eta(v, inner.norm_in(b))
            }
            Term::App(f, a) => {
                let f = self.norm(f);
                let a = self.norm(a);
                match &f {
                    Term::Lam(v, body) => self.norm(&subst_var(body, v, &a)),
                    _ => Term::App(Rc::new(f), Rc::new(a)),
                }
            }
        }
    }

    fn shadowed(&self, v: &Name) -> Context {
        self.ctx.with_local(v, Term::Univ)
    }

    fn unfold(&self, n: &Name) -> Option<Term> {
        let body = self.ctx.definition(n)?;
        if let Some(nf) = self.ctx.cached_normal_def(n) {
            return Some(nf);
        }
        let globals = self.ctx.globals_only();
        let nf = Eval { ctx: &globals }.norm(body);
        self.ctx.cache_normal_def(n, &nf);
        Some(nf)
    }

    fn apply_dim(&self, f: Term, r: &Dim) -> Term {
        match &f {
            Term::DimAbs(x, body) => return self.norm(&subst(body, x, r.clone())),
            Term::HCom {
                ty,
                from,
                to,
                cap,
                tubes,
            } => {
                if let (Term::Id { .. }, Dim::Name(_)) = (&**ty, r) {
                    return self.norm(&hcom_at_id(ty, from, to, cap, tubes, r));
                }
            }
            Term::Coe {
                binder,
                family,
                from,
                to,
                arg,
            } => {
                if let (Term::Id { .. }, Dim::Name(_)) = (&**family, r) {
                    return self.norm(&coe_at_id(binder, family, from, to, arg, r));
                }
            }
            _ => {}
        }
        if let Some(side) = r.as_side() {
            if let Some(Term::Id { left, right, .. }) = self.neutral_type(&f) {
                return match side {
                    Side::Zero => (*left).clone(),
                    Side::One => (*right).clone(),
                };
            }
        }
        Term::DimApp(Rc::new(f), r.clone())
    }

    fn hcom(&self, ty: &Term, from: &Dim, to: &Dim, cap: &Term, tubes: &[Tube]) -> Term {
        if from == to {
            return self.norm(cap);
        }
        let mut live = Vec::with_capacity(tubes.len());
        for tube in tubes {
            match tube.extent.as_side() {
                Some(side) if side == tube.side => {
                    return self.norm(&subst(&tube.wall, &tube.binder, to.clone()));
                }
                Some(_) => {}
                None => live.push(tube),
            }
        }
        let cap = self.norm(cap);
        let ty = self.norm(ty);
        let mut walls: Vec<Tube> = live
            .into_iter()
            .map(|tube| Tube {
                extent: tube.extent.clone(),
                side: tube.side,
                binder: tube.binder.clone(),
                wall: Rc::new(self.norm(&tube.wall)),
            })
            .collect();
        let constant = walls.iter().all(|tube| {
            is_degenerate_in(&tube.wall, &tube.binder) && {
                let x = tube.extent.as_name().expect("live tubes have named extents");
                alpha_eq(&tube.wall, &self.norm(&subst(&cap, x, tube.side.into())))
            }
        });
        if constant {
            return cap;
        }
        walls.sort_by(|a, b| (&a.extent, a.side).cmp(&(&b.extent, b.side)));
        Term::HCom {
            ty: Rc::new(ty),
            from: from.clone(),
            to: to.clone(),
            cap: Rc::new(cap),
            tubes: walls,
        }
    }

    fn neutral_type(&self, t: &Term) -> Option<Term> {
        match t {
            Term::Var(n) => {
                if self.ctx.definition(n).is_some() {
                    return None;
                }
                let ty = self.ctx.type_of(n)?.clone();
                Some(self.norm(&ty))
            }
            Term::DimApp(f, r) => match self.neutral_type(f)? {
                Term::Id { binder, family, .. } => Some(self.norm(&subst(&family, &binder, r.clone()))),
                _ => None,
            },
            Term::App(f, a) => match self.neutral_type(f)? {
                Term::Pi(v, _, cod) => Some(self.norm(&subst_var(&cod, &v, a))),
                _ => None,
            },
            Term::HCom { ty, .. } => Some((**ty).clone()),
            Term::Coe {
                binder, family, to, ..
            } => Some(self.norm(&subst(family, binder, to.clone()))),
            _ => None,
        }
    }
}

trait NormIn {
    fn norm_in(&self, t: &Term) -> Term;
}

impl NormIn for Context {
    fn norm_in(&self, t: &Term) -> Term {
        Eval { ctx: self }.norm(t)
    }
}

fn eta(x: &Name, body: Term) -> Term {
    if let Term::DimApp(m, Dim::Name(y)) = &body {
        if y == x && is_degenerate_in(m, x) {
            return (**m).clone();
        }
    }
    Term::DimAbs(x.clone(), Rc::new(body))
}

fn lam_eta(v: &Name, body: Term) -> Term {
    if let Term::App(m, arg) = &body {
        if matches!(&**arg, Term::Var(w) if w == v) && !free_vars(m).contains(v) {
            return (**m).clone();
        }
    }
    Term::Lam(v.clone(), Rc::new(body))
}

/// `(hcom r~>s (Id (z. A) L R) M [ξ y. N]) @ t  =
///   hcom r~>s A⟨t/z⟩ (M @ t) [ξ y. N @ t | t=0 y. L | t=1 y. R]`.
fn hcom_at_id(ty: &Term, from: &Dim, to: &Dim, cap: &Term, tubes: &[Tube], t: &Dim) -> Term {
    let Term::Id {
        binder,
        family,
        left,
        right,
    } = ty
    else {
        unreachable!("caller checked the type former")
    };
    let mut avoid = free_dims(left);
    avoid.extend(free_dims(right));
    if let Dim::Name(n) = t {
        avoid.insert(n.clone());
    }
    let y = fresh_from("y", &avoid);
    let mut new_tubes: Vec<Tube> = tubes
        .iter()
        .map(|tube| {
            let (b, wall) = if t.as_name() == Some(&tube.binder) {
                let mut avoid = free_dims(&tube.wall);
                avoid.insert(tube.binder.clone());
                let b = fresh_from(&tube.binder, &avoid);
                let wall = subst(&tube.wall, &tube.binder, Dim::Name(b.clone()));
                (b, wall)
            } else {
                (tube.binder.clone(), (*tube.wall).clone())
            };
            Tube {
                extent: tube.extent.clone(),
                side: tube.side,
                binder: b,
                wall: Rc::new(wall.at(t.clone())),
            }
        })
        .collect();
    for (side, end) in [(Side::Zero, left), (Side::One, right)] {
        new_tubes.push(Tube {
            extent: t.clone(),
            side,
            binder: y.clone(),
            wall: end.clone(),
        });
    }
    Term::HCom {
        ty: Rc::new(subst(family, binder, t.clone())),
        from: from.clone(),
        to: to.clone(),
        cap: Rc::new(cap.clone().at(t.clone())),
        tubes: new_tubes,
    }
}

/// `(coe r~>s (z. Id (x. A) L R) M) @ t  =  com r~>s (z. A⟨t/x⟩) (M @ t) [t=0 z. L | t=1 z. R]`.
fn coe_at_id(z: &Name, family: &Term, from: &Dim, to: &Dim, arg: &Term, t: &Dim) -> Term {
    let (z, family) = if t.as_name() == Some(z) {
        let mut avoid = free_dims(family);
        avoid.insert(z.clone());
        let fresh = fresh_from(z, &avoid);
        let renamed = subst(family, z, Dim::Name(fresh.clone()));
        (fresh, renamed)
    } else {
        (z.clone(), family.clone())
    };
    let Term::Id {
        binder,
        family: inner,
        left,
        right,
    } = &family
    else {
        unreachable!("caller checked the type former")
    };
    let tubes = [(Side::Zero, left), (Side::One, right)]
        .into_iter()
        .map(|(side, end)| Tube {
            extent: t.clone(),
            side,
            binder: z.clone(),
            wall: end.clone(),
        })
        .collect();
    Term::Com {
        binder: z,
        family: Rc::new(subst(inner, binder, t.clone())),
        from: from.clone(),
        to: to.clone(),
        cap: Rc::new(arg.clone().at(t.clone())),
        tubes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_term;

    fn t(s: &str) -> Term {
        parse_term(s).unwrap()
    }

    fn ambient() -> Context {
        let mut ctx = Context::new();
        ctx.declare_point("A", Term::Univ);
        for v in ["a", "b", "c"] {
            ctx.declare_point(v, t("A"));
        }
        ctx.declare_point("p", t("Id (x. A) a b"));
        ctx.declare_point("q", t("Id (x. A) b c"));
        ctx.define("refl_a", t("<x> a"), t("Id (x. A) a a"));
        ctx.declare_dim("x");
        ctx.declare_dim("y");
        ctx
    }

    fn norm(ctx: &Context, s: &str) -> Term {
        normalize(ctx, &t(s)).into_term()
    }

    #[test]
    fn beta_and_eta() {
        let ctx = ambient();
        assert_eq!(norm(&ctx, "(<z> p @ z) @ 1"), t("b"));
        assert_eq!(norm(&ctx, "(\\v. v) a"), t("a"));
        assert_eq!(norm(&ctx, "<z> p @ z"), t("p"));
        assert_eq!(norm(&ctx, "\\v. f v"), t("f"));
        // Not an η-redex: the bound name occurs in the head.
        assert!(matches!(norm(&ctx, "\\v. v v"), Term::Lam(..)));
    }

    #[test]
    fn endpoints_of_neutral_lines() {
        let ctx = ambient();
        assert_eq!(norm(&ctx, "p @ 0"), t("a"));
        assert_eq!(norm(&ctx, "q @ 1"), t("c"));
        assert_eq!(norm(&ctx, "p @ x"), t("p @ x"));
    }

    #[test]
    fn hcom_at_equal_endpoints_is_the_cap() {
        let ctx = ambient();
        let filler = "hcom 0~>y A (refl_a @ x) [x=0 w. p @ w | x=1 w. refl_a @ w]";
        let at_zero = face(&ctx, &t(filler), "y", Side::Zero);
        assert_eq!(at_zero.into_term(), t("a"));
    }

    #[test]
    fn hcom_on_a_tube_face_is_the_wall_at_the_target() {
        let ctx = ambient();
        let body = t("hcom 0~>1 A (refl_a @ x) [x=0 y. p @ y | x=1 y. refl_a @ y]");
        assert_eq!(face(&ctx, &body, "x", Side::Zero).into_term(), t("b"));
        assert_eq!(face(&ctx, &body, "x", Side::One).into_term(), t("a"));
        let comp = t("hcom 0~>1 A (p @ x) [x=0 y. refl_a @ y | x=1 y. q @ y]");
        assert_eq!(face(&ctx, &comp, "x", Side::One).into_term(), t("c"));
    }

    #[test]
    fn tube_order_is_irrelevant() {
        let ctx = ambient();
        let a = t("hcom 0~>1 A (p @ x) [x=0 y. refl_a @ y | x=1 y. q @ y]");
        let b = t("hcom 0~>1 A (p @ x) [x=1 y. q @ y | x=0 y. refl_a @ y]");
        assert!(judge_equal(&ctx, &a, &b));
    }

    #[test]
    fn coercion_identities() {
        let ctx = ambient();
        assert_eq!(norm(&ctx, "coe 0~>0 (z. A) a"), t("a"));
        assert_eq!(norm(&ctx, "coe 0~>1 (z. A) a"), t("a"));
        assert!(matches!(norm(&ctx, "coe 0~>1 (z. E @ z) a"), Term::Coe { .. }));
    }

    #[test]
    fn com_at_equal_endpoints_is_the_cap() {
        let ctx = ambient();
        assert_eq!(norm(&ctx, "com 1~>1 (z. E @ z) a [x=0 w. b]"), t("a"));
    }

    #[test]
    fn regular_boxes_collapse() {
        let ctx = ambient();
        let inv_refl = "hcom 0~>1 A (refl_a @ x) [x=0 y. refl_a @ y | x=1 y. refl_a @ y]";
        assert_eq!(norm(&ctx, inv_refl), t("a"));
    }

    #[test]
    fn normalization_is_idempotent_on_boxes() {
        let ctx = ambient();
        for s in [
            "hcom 0~>1 A (p @ x) [x=0 y. refl_a @ y | x=1 y. q @ y]",
            "<x> hcom 0~>1 A (refl_a @ x) [x=0 y. p @ y | x=1 y. refl_a @ y]",
            "hcom 0~>y A (p @ x) [x=0 w. refl_a @ w | x=1 w. q @ w]",
        ] {
            let once = normalize(&ctx, &t(s));
            let twice = normalize(&ctx, once.term());
            assert!(alpha_eq(once.term(), twice.term()), "{s}");
        }
    }

    #[test]
    fn judgmental_equality_unfolds_definitions() {
        let ctx = ambient();
        assert!(judge_equal(&ctx, &t("refl_a @ x"), &t("a")));
        assert!(!judge_equal(&ctx, &t("p @ x"), &t("q @ x")));
    }
}
