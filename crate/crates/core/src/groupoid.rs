//! Builders for the higher groupoid structure of identification types.
//!
//! Every builder adds a named definition to a [`Workspace`] and returns it
//! as a [`CheckedConstruction`]. Sub-constructions are referenced by name,
//! so a builder run doubles as a source file in the surface grammar.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::context::Context;
use crate::dims::{free_dims, free_vars, fresh_from, is_degenerate_in, subst};
use crate::evaluator::{judge_equal, normalize};
use crate::kernel::{check_member, check_type, CheckError, Verdict};
use crate::syntax::{Dim, Name, Side, Term, Tube};

/// A built term paired with its claimed type and the kernel's verdict.
#[derive(Clone, Debug)]
pub struct CheckedConstruction {
    pub name: Name,
    pub term: Term,
    pub claimed_type: Term,
    pub verdict: Verdict,
}

impl CheckedConstruction {
    pub fn passed(&self) -> bool {
        self.verdict.passed()
    }

    /// The construction as a reference, e.g. for `@` application.
    pub fn var(&self) -> Term {
        Term::Var(self.name.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupoidError {
    #[error("{ty} is not degenerate in {dim}")]
    NonDegenerate { ty: Term, dim: Name },
    #[error("middle endpoints differ: {left} vs {right}")]
    MiddleEndpointMismatch { left: Term, right: Term },
    #[error("{0} does not have an identification type")]
    NotAnIdentification(Term),
    #[error("{0} is not a composition")]
    NotAComposition(Term),
    #[error("unknown construction {0}")]
    Unknown(Name),
    #[error("family at {dim}={side} is {actual}, expected {expected}")]
    EndpointCollapse {
        dim: Name,
        side: Side,
        expected: Term,
        actual: Term,
    },
    #[error(transparent)]
    Kernel(#[from] CheckError),
}

pub type BuildResult = Result<CheckedConstruction, GroupoidError>;

/// The parts of an identification type `Id (x. A) left right`.
#[derive(Clone, Debug)]
pub struct IdParts {
    pub binder: Name,
    pub family: Term,
    pub left: Term,
    pub right: Term,
}

impl IdParts {
    fn of(ty: &Term) -> Option<IdParts> {
        match ty {
            Term::Id {
                binder,
                family,
                left,
                right,
            } => Some(IdParts {
                binder: binder.clone(),
                family: (**family).clone(),
                left: (**left).clone(),
                right: (**right).clone(),
            }),
            _ => None,
        }
    }

    /// The family as a closed type, when it does not depend on the binder.
    pub(crate) fn degenerate_family(&self) -> Result<Term, GroupoidError> {
        if is_degenerate_in(&self.family, &self.binder) {
            Ok(self.family.clone())
        } else {
            Err(GroupoidError::NonDegenerate {
                ty: self.family.clone(),
                dim: self.binder.clone(),
            })
        }
    }
}

#[derive(Clone, Debug)]
enum Item {
    Comment(String),
    Point(Name, Term),
    Def(Name),
}

/// An ambient context plus every construction built in it so far.
#[derive(Clone, Debug, Default)]
pub struct Workspace {
    ctx: Context,
    items: Vec<Item>,
    built: BTreeMap<Name, CheckedConstruction>,
    order: Vec<Name>,
    anonymous: usize,
    /// Names given to constructions over unnamed arguments.
    memo: BTreeMap<String, String>,
}

fn d(name: &str) -> Dim {
    Dim::name(name)
}

/// A name fragment for `t`, used to name derived constructions.
pub(crate) fn label(t: &Term) -> Option<String> {
    match t {
        Term::Var(n) => Some(n.to_string()),
        Term::Univ => Some("U".into()),
        Term::Id {
            family,
            left,
            right,
            ..
        } => Some(format!("Id_{}_{}_{}", label(family)?, label(left)?, label(right)?)),
        _ => None,
    }
}

impl Workspace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn context(&self) -> &Context {
        &self.ctx
    }

    pub fn comment(&mut self, text: &str) {
        self.items.push(Item::Comment(text.to_string()));
    }

    /// Declares an assumed point.
    pub fn point(&mut self, name: &str, ty: Term) -> Result<(), GroupoidError> {
        check_type(&self.ctx, &ty)?;
        self.ctx.declare_point(name, ty.clone());
        self.items.push(Item::Point(name.into(), ty));
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&CheckedConstruction> {
        self.built.get(name)
    }

    /// All constructions in the order they were built.
    pub fn constructions(&self) -> impl Iterator<Item = &CheckedConstruction> {
        self.order.iter().map(|n| &self.built[n])
    }

    /// Checks `term : ty` and adds it as a definition. Building a name
    /// twice returns the first construction.
    pub fn define(&mut self, name: &str, term: Term, ty: Term) -> BuildResult {
        if let Some(c) = self.built.get(name) {
            return Ok(c.clone());
        }
        check_type(&self.ctx, &ty)?;
        let verdict = check_member(&self.ctx, &term, &ty);
        self.ctx.define(name, term.clone(), ty.clone());
        let c = CheckedConstruction {
            name: name.into(),
            term,
            claimed_type: ty,
            verdict,
        };
        self.built.insert(c.name.clone(), c.clone());
        self.order.push(c.name.clone());
        self.items.push(Item::Def(c.name.clone()));
        Ok(c)
    }

    pub(crate) fn fresh_name(&mut self, stem: &str) -> String {
        loop {
            self.anonymous += 1;
            let n = format!("{stem}{}", self.anonymous);
            if !self.ctx.contains(&n) {
                return n;
            }
        }
    }

    pub(crate) fn derived_name(&mut self, op: &str, args: &[&Term]) -> String {
        let parts: Option<Vec<String>> = args.iter().map(|t| label(t)).collect();
        match parts {
            Some(parts) => format!("{op}_{}", parts.join("_")),
            None => {
                let key = format!("{op} {}", args.iter().map(|t| format!("({t})")).collect::<String>());
                if let Some(n) = self.memo.get(&key) {
                    return n.clone();
                }
                let n = self.fresh_name(op);
                self.memo.insert(key, n.clone());
                n
            }
        }
    }

    /// The claimed type of `t`, read syntactically where possible.
    pub fn type_of(&self, t: &Term) -> Result<Term, GroupoidError> {
        match t {
            Term::Var(n) => self
                .ctx
                .type_of(n)
                .cloned()
                .ok_or_else(|| GroupoidError::Unknown(n.clone())),
            _ => Ok(crate::kernel::infer_type(&self.ctx, t)?),
        }
    }

    pub fn id_parts(&self, t: &Term) -> Result<IdParts, GroupoidError> {
        let ty = self.type_of(t)?;
        self.id_parts_of_type(&ty)
            .map_err(|_| GroupoidError::NotAnIdentification(t.clone()))
    }

    /// The parts of an identification type, normalizing if needed.
    pub fn id_parts_of_type(&self, ty: &Term) -> Result<IdParts, GroupoidError> {
        IdParts::of(ty)
            .or_else(|| IdParts::of(normalize(&self.ctx, ty).term()))
            .ok_or_else(|| GroupoidError::NotAnIdentification(ty.clone()))
    }

    /// Renders every declaration in the surface grammar.
    pub fn render(&self) -> String {
        self.render_from(0)
    }

    /// The number of declarations so far, for [`Workspace::render_from`].
    pub fn mark(&self) -> usize {
        self.items.len()
    }

    /// Renders the declarations made after `mark`.
    pub fn render_from(&self, mark: usize) -> String {
        let mut out = String::new();
        for item in &self.items[mark..] {
            match item {
                Item::Comment(text) => {
                    let _ = writeln!(out, "\n-- {text}");
                }
                Item::Point(n, ty) => {
                    let _ = writeln!(out, "point {n} : {ty}");
                }
                Item::Def(n) => {
                    let c = &self.built[n];
                    let _ = writeln!(out, "def {n} =\n  {}\n  : {}", c.term, c.claimed_type);
                }
            }
        }
        out
    }

    /// Names of the definitions `name` refers to, transitively, including
    /// itself.
    pub fn dependencies(&self, name: &str) -> BTreeSet<Name> {
        let mut seen = BTreeSet::new();
        let mut stack: Vec<Name> = vec![name.into()];
        while let Some(n) = stack.pop() {
            if !self.built.contains_key(&n) || !seen.insert(n.clone()) {
                continue;
            }
            let c = &self.built[&n];
            stack.extend(free_vars(&c.term));
            stack.extend(free_vars(&c.claimed_type));
        }
        seen
    }

    /// Passes when `name` and everything it depends on pass.
    pub fn passes_with_dependencies(&self, name: &str) -> bool {
        self.dependencies(name)
            .iter()
            .all(|n| self.built[n].passed())
    }

    // ---- builders ----------------------------------------------------

    /// `refl_a = <x> a : Id (x. A) a a`.
    pub fn refl(&mut self, a: &Term, x: &str, ty: &Term) -> BuildResult {
        if !is_degenerate_in(ty, x) {
            return Err(GroupoidError::NonDegenerate {
                ty: ty.clone(),
                dim: x.into(),
            });
        }
        let name = self.derived_name("refl", &[a]);
        let mut avoid = free_dims(ty);
        avoid.extend(free_dims(a));
        if let Term::Id { binder, .. } = ty {
            avoid.insert(binder.clone());
        }
        let x: Name = [x, "y", "z"]
            .into_iter()
            .find(|c| !avoid.contains(*c))
            .map(Name::from)
            .unwrap_or_else(|| fresh_from(x, &avoid));
        self.define(
            &name,
            Term::dim_abs(&x, a.clone()),
            Term::id(&x, ty.clone(), a.clone(), a.clone()),
        )
    }

    /// `p⁻¹ = <x> hcom 0~>1 A (refl_a @ x) [x=0 y. p @ y | x=1 y. refl_a @ y]`.
    pub fn inv(&mut self, p: &Term) -> BuildResult {
        let parts = self.id_parts(p)?;
        let ty = parts.degenerate_family()?;
        let refl_a = self.refl(&parts.left, "x", &ty)?.var();
        let name = self.derived_name("inv", &[p]);
        let term = inv_term(&ty, &refl_a, p);
        self.define(&name, term, Term::id("x", ty, parts.right, parts.left))
    }

    /// `p • q = <x> hcom 0~>1 A (p @ x) [x=0 y. refl_a @ y | x=1 y. q @ y]`.
    pub fn comp(&mut self, p: &Term, q: &Term) -> BuildResult {
        let pp = self.id_parts(p)?;
        let qp = self.id_parts(q)?;
        let ty = pp.degenerate_family()?;
        let qty = qp.degenerate_family()?;
        if !judge_equal(&self.ctx, &ty, &qty) {
            return Err(CheckError::TypeMismatch {
                expected: ty,
                actual: qty,
                path: q.to_string(),
            }
            .into());
        }
        if !judge_equal(&self.ctx, &pp.right, &qp.left) {
            return Err(GroupoidError::MiddleEndpointMismatch {
                left: pp.right,
                right: qp.left,
            });
        }
        let refl_a = self.refl(&pp.left, "x", &ty)?.var();
        let name = self.derived_name("comp", &[p, q]);
        let term = comp_term(&ty, &refl_a, p, q);
        self.define(&name, term, Term::id("x", ty, pp.left, qp.right))
    }

    /// `filler_y(c)`: the composition `c` with its target replaced by `y`.
    pub fn filler(&self, c: &Term, y: &str) -> Result<Term, GroupoidError> {
        filler_in(&self.ctx, c, y)
    }

    /// Inversion unit: `<y> <x> filler_y(refl_a⁻¹ @ x) : refl_a = refl_a⁻¹`.
    pub fn iu(&mut self, a: &Term, ty: &Term) -> BuildResult {
        let refl_a = self.refl(a, "x", ty)?.var();
        let inv = self.inv(&refl_a)?.var();
        let name = self.derived_name("iu", &[a]);
        let body = self.filler(&inv.clone().at_name("x"), "y")?;
        let ty = Term::id("y", Term::id("x", ty.clone(), a.clone(), a.clone()), refl_a, inv);
        self.define(&name, Term::dim_abs("y", Term::dim_abs("x", body)), ty)
    }

    /// Composition unit: `<y> <x> filler_y((refl_a • refl_a) @ x)`.
    pub fn cu(&mut self, a: &Term, ty: &Term) -> BuildResult {
        let refl_a = self.refl(a, "x", ty)?.var();
        let comp = self.comp(&refl_a, &refl_a)?.var();
        let name = self.derived_name("cu", &[a]);
        let body = self.filler(&comp.clone().at_name("x"), "y")?;
        let ty = Term::id("y", Term::id("x", ty.clone(), a.clone(), a.clone()), refl_a, comp);
        self.define(&name, Term::dim_abs("y", Term::dim_abs("x", body)), ty)
    }

    /// Right unit: `<y> <x> filler_y((p • refl_b) @ x) : p = p • refl_b`.
    pub fn ru(&mut self, p: &Term) -> BuildResult {
        let parts = self.id_parts(p)?;
        let ty = parts.degenerate_family()?;
        let refl_b = self.refl(&parts.right, "x", &ty)?.var();
        let comp = self.comp(p, &refl_b)?.var();
        let name = self.derived_name("ru", &[p]);
        let body = self.filler(&comp.clone().at_name("x"), "y")?;
        let ty = Term::id("y", Term::id("x", ty, parts.left, parts.right), p.clone(), comp);
        self.define(&name, Term::dim_abs("y", Term::dim_abs("x", body)), ty)
    }

    /// Right cancellation: `refl_a = p • p⁻¹`, by a two-extent composition.
    pub fn rc(&mut self, p: &Term) -> BuildResult {
        let parts = self.id_parts(p)?;
        let ty = parts.degenerate_family()?;
        let a = parts.left.clone();
        let refl_a = self.refl(&a, "x", &ty)?.var();
        let inv = self.inv(p)?.var();
        let comp = self.comp(p, &inv)?.var();
        let name = self.derived_name("rc", &[p]);
        let back = self.filler(&inv.clone().at_name("y"), "x")?;
        let front = self.filler(&comp.clone().at_name("x"), "y")?;
        let term = Term::dim_abs(
            "z",
            Term::dim_abs(
                "x",
                Term::hcom(
                    ty.clone(),
                    Dim::Zero,
                    Dim::One,
                    p.clone().at_name("x"),
                    vec![
                        Tube::new("x", Side::Zero, "y", a.clone()),
                        Tube::new("x", Side::One, "y", inv.at_name("y")),
                        Tube::new("z", Side::Zero, "y", back),
                        Tube::new("z", Side::One, "y", front),
                    ],
                ),
            ),
        );
        let ty = Term::id("z", Term::id("x", ty, a.clone(), a), refl_a, comp);
        self.define(&name, term, ty)
    }

    /// The boundary lines of a square `alpha : Id (y. Id (x. A) (r @ y) (s @ y)) p q`.
    pub fn square_parts(&self, alpha: &Term) -> Result<SquareParts, GroupoidError> {
        let outer = self.id_parts(alpha)?;
        let inner = IdParts::of(&outer.family)
            .ok_or_else(|| GroupoidError::NotAnIdentification(alpha.clone()))?;
        let line = |t: &Term| -> Result<Term, GroupoidError> {
            match t {
                Term::DimApp(f, Dim::Name(y)) if *y == outer.binder && is_degenerate_in(f, y) => {
                    Ok((**f).clone())
                }
                _ => Err(GroupoidError::NotAnIdentification(t.clone())),
            }
        };
        let ty = if is_degenerate_in(&inner.family, &inner.binder)
            && is_degenerate_in(&inner.family, &outer.binder)
        {
            inner.family.clone()
        } else {
            return Err(GroupoidError::NonDegenerate {
                ty: inner.family.clone(),
                dim: outer.binder.clone(),
            });
        };
        Ok(SquareParts {
            ty,
            top: outer.left,
            bottom: outer.right,
            left: line(&inner.left)?,
            right: line(&inner.right)?,
        })
    }

    /// Square swap: `alpha : Id (y. Id (x. A) (r @ y) (s @ y)) p q` gives
    /// `Id (y. Id (x. A) (r⁻¹ @ y) (s⁻¹ @ y)) q p`.
    pub fn swap(&mut self, alpha: &Term) -> BuildResult {
        let sq = self.square_parts(alpha)?;
        let r_inv = self.inv(&sq.left)?.var();
        let s_inv = self.inv(&sq.right)?.var();
        let name = self.derived_name("swap", &[alpha]);
        let back = self.filler(&r_inv.clone().at_name("x"), "y")?;
        let front = self.filler(&s_inv.clone().at_name("x"), "y")?;
        let term = Term::dim_abs(
            "x",
            Term::dim_abs(
                "z",
                Term::hcom(
                    sq.ty.clone(),
                    Dim::Zero,
                    Dim::One,
                    sq.top.clone().at_name("z"),
                    vec![
                        Tube::new("x", Side::Zero, "y", alpha.clone().at_name("y").at_name("z")),
                        Tube::new("x", Side::One, "y", sq.top.clone().at_name("z")),
                        Tube::new("z", Side::Zero, "y", back),
                        Tube::new("z", Side::One, "y", front),
                    ],
                ),
            ),
        );
        let ty = Term::id(
            "x",
            Term::id("z", sq.ty, r_inv.at_name("x"), s_inv.at_name("x")),
            sq.bottom,
            sq.top,
        );
        self.define(&name, term, ty)
    }

    /// Inversability: `p = (p⁻¹)⁻¹`.
    pub fn inversability(&mut self, p: &Term) -> BuildResult {
        let parts = self.id_parts(p)?;
        let ty = parts.degenerate_family()?;
        let (a, b) = (parts.left.clone(), parts.right.clone());
        let refl_b = self.refl(&b, "x", &ty)?.var();
        let iu_b = self.iu(&b, &ty)?.var();
        let refl_b_inv = self.inv(&refl_b)?.var();
        let refl_b_inv_inv = self.inv(&refl_b_inv)?.var();
        let p_inv = self.inv(p)?.var();
        let p_inv_inv = self.inv(&p_inv)?.var();
        let back_comp = self.comp(&p_inv, p)?.var();
        let stem = label(p).unwrap_or_else(|| self.fresh_name("p"));

        // R: the case p = refl_b, as an (x, z)-square.
        let r_body = Term::hcom(
            ty.clone(),
            Dim::Zero,
            Dim::One,
            b.clone(),
            vec![
                Tube::new("x", Side::Zero, "y", iu_b.at_name("z").at_name("y")),
                Tube::new("x", Side::One, "y", b.clone()),
                Tube::new("z", Side::Zero, "y", b.clone()),
                Tube::new(
                    "z",
                    Side::One,
                    "y",
                    self.filler(&refl_b_inv_inv.clone().at_name("x"), "y")?,
                ),
            ],
        );
        self.define(
            &format!("inversability_R_{stem}"),
            Term::dim_abs("z", Term::dim_abs("x", r_body.clone())),
            Term::id(
                "z",
                Term::id("x", ty.clone(), b.clone(), b.clone()),
                refl_b.clone(),
                refl_b_inv_inv,
            ),
        )?;

        // X: the x-filler of (p⁻¹ • p) @ y.
        let x_body = self.filler(&back_comp.clone().at_name("y"), "x")?;
        let x_sq = self
            .define(
                &format!("inversability_X_{stem}"),
                Term::dim_abs("x", Term::dim_abs("y", x_body.clone())),
                Term::id(
                    "x",
                    Term::id("y", ty.clone(), refl_b.at_name("x"), p.clone().at_name("x")),
                    p_inv.clone(),
                    back_comp.clone(),
                ),
            )?
            .var();
        // Y: X with its side lines inverted twice.
        let once = self.swap(&x_sq)?.var();
        let twice = self.swap(&once)?.var();

        let name = self.derived_name("inversability", &[p]);
        let term = Term::dim_abs(
            "z",
            Term::dim_abs(
                "x",
                Term::hcom(
                    ty.clone(),
                    Dim::Zero,
                    Dim::One,
                    r_body,
                    vec![
                        Tube::new("x", Side::Zero, "y", p_inv.at_name("y")),
                        Tube::new("x", Side::One, "y", back_comp.at_name("y")),
                        Tube::new("z", Side::Zero, "y", x_body),
                        Tube::new("z", Side::One, "y", twice.at_name("x").at_name("y")),
                    ],
                ),
            ),
        );
        let ty = Term::id("z", Term::id("x", ty, a, b), p.clone(), p_inv_inv);
        self.define(&name, term, ty)
    }

    /// Opposite identification (i): `p =_{y. a = p⁻¹ @ y} refl_a`.
    pub fn op1(&mut self, p: &Term) -> BuildResult {
        let parts = self.id_parts(p)?;
        let ty = parts.degenerate_family()?;
        let a = parts.left.clone();
        let refl_a = self.refl(&a, "x", &ty)?.var();
        let inv = self.inv(p)?.var();
        let comp = self.comp(p, &inv)?.var();
        let rc = self.rc(p)?.var();
        let rc_inv = self.inv(&rc)?.var();
        let name = self.derived_name("op1", &[p]);
        let cap = self.filler(&comp.at_name("x"), "z")?;
        let term = Term::dim_abs(
            "z",
            Term::dim_abs(
                "x",
                Term::hcom(
                    ty.clone(),
                    Dim::Zero,
                    Dim::One,
                    cap,
                    vec![
                        Tube::new("x", Side::Zero, "y", a.clone()),
                        Tube::new("x", Side::One, "y", inv.clone().at_name("z")),
                        Tube::new("z", Side::Zero, "y", p.clone().at_name("x")),
                        Tube::new("z", Side::One, "y", rc_inv.at_name("y").at_name("x")),
                    ],
                ),
            ),
        );
        let ty = Term::id("z", Term::id("x", ty, a, inv.at_name("z")), p.clone(), refl_a);
        self.define(&name, term, ty)
    }

    /// Left cancellation: `refl_b = p⁻¹ • p`.
    pub fn lc(&mut self, p: &Term) -> BuildResult {
        let parts = self.id_parts(p)?;
        let ty = parts.degenerate_family()?;
        let b = parts.right.clone();
        let refl_b = self.refl(&b, "x", &ty)?.var();
        let inv = self.inv(p)?.var();
        let comp = self.comp(&inv, p)?.var();
        let invab = self.inversability(p)?.var();
        let invab_inv = self.inv(&invab)?.var();
        let op1 = self.op1(&inv)?.var();
        let name = self.derived_name("lc", &[p]);
        let front = self.filler(&comp.clone().at_name("x"), "y")?;
        let term = Term::dim_abs(
            "z",
            Term::dim_abs(
                "x",
                Term::hcom(
                    ty.clone(),
                    Dim::Zero,
                    Dim::One,
                    inv.at_name("x"),
                    vec![
                        Tube::new("x", Side::Zero, "y", b.clone()),
                        Tube::new("x", Side::One, "y", invab_inv.at_name("z").at_name("y")),
                        Tube::new("z", Side::Zero, "y", op1.at_name("y").at_name("x")),
                        Tube::new("z", Side::One, "y", front),
                    ],
                ),
            ),
        );
        let ty = Term::id("z", Term::id("x", ty, b.clone(), b), refl_b, comp);
        self.define(&name, term, ty)
    }

    /// Opposite identification (ii): `p⁻¹ =_{y. b = p @ y} refl_b`, the
    /// mirror of (i) with left cancellation in place of right cancellation.
    pub fn op2(&mut self, p: &Term) -> BuildResult {
        let parts = self.id_parts(p)?;
        let ty = parts.degenerate_family()?;
        let b = parts.right.clone();
        let refl_b = self.refl(&b, "x", &ty)?.var();
        let inv = self.inv(p)?.var();
        let comp = self.comp(&inv, p)?.var();
        let lc = self.lc(p)?.var();
        let lc_inv = self.inv(&lc)?.var();
        let name = self.derived_name("op2", &[p]);
        let cap = self.filler(&comp.at_name("x"), "z")?;
        let term = Term::dim_abs(
            "z",
            Term::dim_abs(
                "x",
                Term::hcom(
                    ty.clone(),
                    Dim::Zero,
                    Dim::One,
                    cap,
                    vec![
                        Tube::new("x", Side::Zero, "y", b.clone()),
                        Tube::new("x", Side::One, "y", p.clone().at_name("z")),
                        Tube::new("z", Side::Zero, "y", inv.clone().at_name("x")),
                        Tube::new("z", Side::One, "y", lc_inv.at_name("y").at_name("x")),
                    ],
                ),
            ),
        );
        let ty = Term::id("z", Term::id("x", ty, b, p.clone().at_name("z")), inv, refl_b);
        self.define(&name, term, ty)
    }

    /// Left unit: `p = refl_a • p`.
    pub fn lu(&mut self, p: &Term) -> BuildResult {
        let parts = self.id_parts(p)?;
        let ty = parts.degenerate_family()?;
        let a = parts.left.clone();
        let refl_a = self.refl(&a, "x", &ty)?.var();
        let inv = self.inv(p)?.var();
        let comp = self.comp(&refl_a, p)?.var();
        let op2 = self.op2(p)?.var();
        let name = self.derived_name("lu", &[p]);
        let cap = self.filler(&inv.at_name("z"), "x")?;
        let front = self.filler(&comp.clone().at_name("x"), "y")?;
        let term = Term::dim_abs(
            "z",
            Term::dim_abs(
                "x",
                Term::hcom(
                    ty.clone(),
                    Dim::Zero,
                    Dim::One,
                    cap,
                    vec![
                        Tube::new("x", Side::Zero, "y", a.clone()),
                        Tube::new("x", Side::One, "y", op2.at_name("y").at_name("z")),
                        Tube::new("z", Side::Zero, "y", p.clone().at_name("x")),
                        Tube::new("z", Side::One, "y", front),
                    ],
                ),
            ),
        );
        let ty = Term::id("z", Term::id("x", ty, a, parts.right), p.clone(), comp);
        self.define(&name, term, ty)
    }

    /// Three-out-of-four: squares `alpha`, `beta` with equal top, left and
    /// right faces have identified bottoms.
    pub fn bi(&mut self, alpha: &Term, beta: &Term) -> BuildResult {
        let name = self.derived_name("bi", &[alpha, beta]);
        self.bi_named(&name, alpha, beta)
    }

    fn bi_named(&mut self, name: &str, alpha: &Term, beta: &Term) -> BuildResult {
        let sa = self.square_parts(alpha)?;
        let sb = self.square_parts(beta)?;
        for (l, r) in [(&sa.top, &sb.top), (&sa.left, &sb.left), (&sa.right, &sb.right)] {
            if !judge_equal(&self.ctx, l, r) {
                return Err(GroupoidError::MiddleEndpointMismatch {
                    left: l.clone(),
                    right: r.clone(),
                });
            }
        }
        let c = self.endpoint(&sa.left, Side::One)?;
        let dd = self.endpoint(&sa.right, Side::One)?;
        let term = Term::dim_abs(
            "z",
            Term::dim_abs(
                "x",
                Term::hcom(
                    sa.ty.clone(),
                    Dim::Zero,
                    Dim::One,
                    sa.top.clone().at_name("x"),
                    vec![
                        Tube::new("x", Side::Zero, "y", sa.left.clone().at_name("y")),
                        Tube::new("x", Side::One, "y", sa.right.clone().at_name("y")),
                        Tube::new("z", Side::Zero, "y", alpha.clone().at_name("y").at_name("x")),
                        Tube::new("z", Side::One, "y", beta.clone().at_name("y").at_name("x")),
                    ],
                ),
            ),
        );
        let ty = Term::id("z", Term::id("x", sa.ty, c, dd), sa.bottom, sb.bottom);
        self.define(name, term, ty)
    }

    /// An endpoint of a line, read from its claimed type.
    pub(crate) fn endpoint(&self, line: &Term, side: Side) -> Result<Term, GroupoidError> {
        let parts = self.id_parts(line)?;
        Ok(match side {
            Side::Zero => parts.left,
            Side::One => parts.right,
        })
    }

    /// Associativity: `(p • q) • r = p • (q • r)`, via three-out-of-four on
    /// two (x, z)-squares with the same top and sides.
    pub fn assoc(&mut self, p: &Term, q: &Term, r: &Term) -> BuildResult {
        let parts = self.id_parts(p)?;
        let ty = parts.degenerate_family()?;
        let a = parts.left.clone();
        let refl_a = self.refl(&a, "x", &ty)?.var();
        let pq = self.comp(p, q)?.var();
        let qr = self.comp(q, r)?.var();
        let pq_r = self.comp(&pq, r)?.var();
        let p_qr = self.comp(p, &qr)?.var();
        let stem = match (label(p), label(q), label(r)) {
            (Some(p), Some(q), Some(r)) => format!("{p}_{q}_{r}"),
            _ => self.fresh_name("t"),
        };
        let side_ty = |bottom: &Term| {
            Term::id(
                "z",
                Term::id("x", ty.clone(), refl_a.clone().at_name("z"), qr.clone().at_name("z")),
                p.clone(),
                bottom.clone(),
            )
        };
        let left_body = Term::hcom(
            ty.clone(),
            Dim::Zero,
            Dim::One,
            self.filler(&pq.at_name("x"), "z")?,
            vec![
                Tube::new("x", Side::Zero, "y", a.clone()),
                Tube::new("x", Side::One, "y", self.filler(&qr.clone().at_name("z"), "y")?),
                Tube::new("z", Side::Zero, "y", p.clone().at_name("x")),
                Tube::new("z", Side::One, "y", self.filler(&pq_r.clone().at_name("x"), "y")?),
            ],
        );
        let left = self
            .define(
                &format!("assoc_left_{stem}"),
                Term::dim_abs("z", Term::dim_abs("x", left_body)),
                side_ty(&pq_r),
            )?
            .var();
        let right_body = self.filler(&p_qr.clone().at_name("x"), "z")?;
        let right = self
            .define(
                &format!("assoc_right_{stem}"),
                Term::dim_abs("z", Term::dim_abs("x", right_body)),
                side_ty(&p_qr),
            )?
            .var();
        self.bi_named(&format!("assoc_{stem}"), &left, &right)
    }

    // ---- heterogeneous operations --------------------------------------

    /// The line of types `<x> A` for an x-type `A`, as a named term.
    pub fn type_line(&mut self, x: &Name, family: &Term) -> Result<Term, GroupoidError> {
        match family {
            Term::DimApp(f, Dim::Name(y)) if y == x && is_degenerate_in(f, x) => Ok((**f).clone()),
            _ if is_degenerate_in(family, x) => Ok(self.refl(family, x, &Term::Univ)?.var()),
            _ => {
                let line_label = |t: &Term| match t {
                    Term::DimApp(f, Dim::Name(y)) if y == x => label(f),
                    _ => label(t),
                };
                let name = match family {
                    Term::Id { family: f, left, right, .. } => {
                        match (label(f), line_label(left), line_label(right)) {
                            (Some(f), Some(l), Some(r)) => format!("line_{f}_{l}_{r}"),
                            _ => self.derived_name("line", &[family]),
                        }
                    }
                    _ => self.derived_name("line", &[family]),
                };
                let end = |side: Dim| normalize(&self.ctx, &subst(family, x, side)).into_term();
                let ty = Term::id(x, Term::Univ, end(Dim::Zero), end(Dim::One));
                Ok(self
                    .define(&name, Term::dim_abs(x, family.clone()), ty)?
                    .var())
            }
        }
    }

    /// Type inversion `A⁻¹`: homogeneous inversion of `<x> A` in the universe.
    pub fn type_inv(&mut self, line: &Term) -> BuildResult {
        self.inv(line)
    }

    /// Type composition `A • B` in the universe.
    pub fn type_comp(&mut self, a: &Term, b: &Term) -> BuildResult {
        self.comp(a, b)
    }

    /// Heterogeneous inversion `p⁻¹*`, a `com` over the inversion box.
    pub fn het_inv(&mut self, p: &Term) -> BuildResult {
        let parts = self.id_parts(p)?;
        let line = self.type_line(&parts.binder, &parts.family)?;
        let line_inv = self.inv(&line)?.var();
        let name = self.derived_name("het_inv", &[p]);
        let family = self.filler(&line_inv.clone().at_name("x"), "y")?;
        // The cap and the x=1 wall are the bare point, as displayed.
        let term = Term::dim_abs(
            "x",
            het_kan_composite(
                "y",
                family,
                Dim::Zero,
                Dim::One,
                parts.left.clone(),
                vec![
                    Tube::new("x", Side::Zero, "y", p.clone().at_name("y")),
                    Tube::new("x", Side::One, "y", parts.left.clone()),
                ],
            ),
        );
        let ty = Term::id("x", line_inv.at_name("x"), parts.right, parts.left);
        self.define(&name, term, ty)
    }

    /// Heterogeneous composition `p •* q`, a `com` over the composition box.
    pub fn het_comp(&mut self, p: &Term, q: &Term) -> BuildResult {
        let pp = self.id_parts(p)?;
        let qp = self.id_parts(q)?;
        if !judge_equal(&self.ctx, &pp.right, &qp.left) {
            return Err(GroupoidError::MiddleEndpointMismatch {
                left: pp.right,
                right: qp.left,
            });
        }
        let a_line = self.type_line(&pp.binder, &pp.family)?;
        let b_line = self.type_line(&qp.binder, &qp.family)?;
        let line = self.comp(&a_line, &b_line)?.var();
        let a0 = self.family_end(&pp, Side::Zero);
        let refl_a = self.refl(&pp.left, "x", &a0)?.var();
        let name = self.derived_name("het_comp", &[p, q]);
        let family = self.filler(&line.clone().at_name("x"), "y")?;
        let term = Term::dim_abs(
            "x",
            het_kan_composite(
                "y",
                family,
                Dim::Zero,
                Dim::One,
                p.clone().at_name("x"),
                vec![
                    Tube::new("x", Side::Zero, "y", refl_a.at_name("y")),
                    Tube::new("x", Side::One, "y", q.clone().at_name("y")),
                ],
            ),
        );
        let ty = Term::id("x", line.at_name("x"), pp.left, qp.right);
        self.define(&name, term, ty)
    }
    /// The endpoint `A⟨ε/x⟩` of an x-type, normalized.
    pub(crate) fn family_end(&self, parts: &IdParts, side: Side) -> Term {
        normalize(&self.ctx, &subst(&parts.family, &parts.binder, side.into())).into_term()
    }

    /// Heterogeneous inversion unit: `refl_a = refl_a⁻¹*` over `iu` of the type.
    pub fn het_iu(&mut self, a: &Term, ty: &Term) -> BuildResult {
        let refl_a = self.refl(a, "x", ty)?.var();
        let iu_ty = self.iu(ty, &Term::Univ)?.var();
        let hinv = self.het_inv(&refl_a)?.var();
        let name = self.derived_name("het_iu", &[a]);
        let body = self.filler(&hinv.clone().at_name("x"), "y")?;
        let family = iu_ty.at_name("y").at_name("x");
        let ty = Term::id("y", Term::id("x", family, a.clone(), a.clone()), refl_a, hinv);
        self.define(&name, Term::dim_abs("y", Term::dim_abs("x", body)), ty)
    }

    /// Heterogeneous square swap over a square of types `T`:
    /// `alpha : Id (y. Id (x. T @ y @ x) (r @ y) (s @ y)) p q` gives
    /// `Id (x. Id (z. swap_T @ x @ z) (r⁻¹* @ x) (s⁻¹* @ x)) q p`.
    pub fn het_swap(&mut self, alpha: &Term) -> BuildResult {
        let outer = self.id_parts(alpha)?;
        let inner = IdParts::of(&outer.family)
            .ok_or_else(|| GroupoidError::NotAnIdentification(alpha.clone()))?;
        let not_square = || GroupoidError::NotAnIdentification(alpha.clone());
        let (head, args) = inner.family.strip_dim_apps();
        let types = match (head, args.as_slice()) {
            (Term::Var(_), [Dim::Name(y), Dim::Name(x)]) if *y == outer.binder && *x == inner.binder => {
                head.clone()
            }
            _ => return Err(not_square()),
        };
        let line = |t: &Term| match t {
            Term::DimApp(f, Dim::Name(y)) if *y == outer.binder && is_degenerate_in(f, y) => {
                Ok((**f).clone())
            }
            _ => Err(not_square()),
        };
        let (r, s) = (line(&inner.left)?, line(&inner.right)?);
        let swapped = self.swap(&types)?.var();
        let r_inv = self.het_inv(&r)?.var();
        let s_inv = self.het_inv(&s)?.var();
        let name = self.derived_name("het_swap", &[alpha]);
        let family = self.filler(&swapped.clone().at_name("x").at_name("z"), "y")?;
        let term = Term::dim_abs(
            "x",
            Term::dim_abs(
                "z",
                het_kan_composite(
                    "y",
                    family,
                    Dim::Zero,
                    Dim::One,
                    outer.left.clone().at_name("z"),
                    vec![
                        Tube::new("x", Side::Zero, "y", alpha.clone().at_name("y").at_name("z")),
                        Tube::new("x", Side::One, "y", outer.left.clone().at_name("z")),
                        Tube::new("z", Side::Zero, "y", self.filler(&r_inv.clone().at_name("x"), "y")?),
                        Tube::new("z", Side::One, "y", self.filler(&s_inv.clone().at_name("x"), "y")?),
                    ],
                ),
            ),
        );
        let ty = Term::id(
            "x",
            Term::id(
                "z",
                swapped.at_name("x").at_name("z"),
                r_inv.at_name("x"),
                s_inv.at_name("x"),
            ),
            outer.right,
            outer.left,
        );
        self.define(&name, term, ty)
    }

    /// Heterogeneous inversability: `p = (p⁻¹*)⁻¹*` over the homogeneous
    /// inversability of the type line, taken at the outer direction.
    pub fn het_inversability(&mut self, p: &Term) -> BuildResult {
        let parts = self.id_parts(p)?;
        let line = self.type_line(&parts.binder, &parts.family)?;
        let b_ty = self.family_end(&parts, Side::One);
        let (a, b) = (parts.left.clone(), parts.right.clone());
        let invab = self.inversability(&line)?.var();
        let line_stem = label(&line).unwrap_or_else(|| self.fresh_name("line"));
        let r_types = Term::var(&format!("inversability_R_{line_stem}"));
        let x_types = Term::var(&format!("inversability_X_{line_stem}"));

        let p_inv = self.het_inv(p)?.var();
        let p_inv_inv = self.het_inv(&p_inv)?.var();
        let back = self.het_comp(&p_inv, p)?.var();
        let refl_b = self.refl(&b, "x", &b_ty)?.var();
        let iu_b = self.het_iu(&b, &b_ty)?.var();
        let refl_b_inv = self.het_inv(&refl_b)?.var();
        let refl_b_inv_inv = self.het_inv(&refl_b_inv)?.var();
        let stem = label(p).unwrap_or_else(|| self.fresh_name("p"));

        let r_family = self.filler(&r_types.clone().at_name("z").at_name("x"), "y")?;
        let r_body = het_kan_composite(
            "y",
            r_family,
            Dim::Zero,
            Dim::One,
            b.clone(),
            vec![
                Tube::new("x", Side::Zero, "y", iu_b.at_name("z").at_name("y")),
                Tube::new("x", Side::One, "y", b.clone()),
                Tube::new("z", Side::Zero, "y", b.clone()),
                Tube::new(
                    "z",
                    Side::One,
                    "y",
                    self.filler(&refl_b_inv_inv.clone().at_name("x"), "y")?,
                ),
            ],
        );
        let r_sq = self
            .define(
                &format!("het_inversability_R_{stem}"),
                Term::dim_abs("z", Term::dim_abs("x", r_body)),
                Term::id(
                    "z",
                    Term::id("x", r_types.at_name("z").at_name("x"), b.clone(), b.clone()),
                    refl_b.clone(),
                    refl_b_inv_inv,
                ),
            )?
            .var();

        let x_body = self.filler(&back.clone().at_name("y"), "x")?;
        let x_sq = self
            .define(
                &format!("het_inversability_X_{stem}"),
                Term::dim_abs("x", Term::dim_abs("y", x_body)),
                Term::id(
                    "x",
                    Term::id(
                        "y",
                        x_types.at_name("x").at_name("y"),
                        refl_b.at_name("x"),
                        p.clone().at_name("x"),
                    ),
                    p_inv.clone(),
                    back.clone(),
                ),
            )?
            .var();
        let once = self.het_swap(&x_sq)?.var();
        let twice = self.het_swap(&once)?.var();

        let name = self.derived_name("het_inversability", &[p]);
        let family = self.filler(&invab.clone().at_name("z").at_name("x"), "y")?;
        let term = Term::dim_abs(
            "z",
            Term::dim_abs(
                "x",
                het_kan_composite(
                    "y",
                    family,
                    Dim::Zero,
                    Dim::One,
                    r_sq.at_name("z").at_name("x"),
                    vec![
                        Tube::new("x", Side::Zero, "y", p_inv.at_name("y")),
                        Tube::new("x", Side::One, "y", back.at_name("y")),
                        Tube::new("z", Side::Zero, "y", x_sq.at_name("x").at_name("y")),
                        Tube::new("z", Side::One, "y", twice.at_name("x").at_name("y")),
                    ],
                ),
            ),
        );
        let ty = Term::id(
            "z",
            Term::id("x", invab.at_name("z").at_name("x"), a, b),
            p.clone(),
            p_inv_inv,
        );
        self.define(&name, term, ty)
    }
}

/// `<x> hcom 0~>1 A (refl_a @ x) [x=0 y. p @ y | x=1 y. refl_a @ y]`.
pub fn inv_term(ty: &Term, refl_a: &Term, p: &Term) -> Term {
    Term::dim_abs(
        "x",
        Term::hcom(
            ty.clone(),
            Dim::Zero,
            Dim::One,
            refl_a.clone().at_name("x"),
            vec![
                Tube::new("x", Side::Zero, "y", p.clone().at_name("y")),
                Tube::new("x", Side::One, "y", refl_a.clone().at_name("y")),
            ],
        ),
    )
}

/// `<x> hcom 0~>1 A (p @ x) [x=0 y. refl_a @ y | x=1 y. q @ y]`.
pub fn comp_term(ty: &Term, refl_a: &Term, p: &Term, q: &Term) -> Term {
    Term::dim_abs(
        "x",
        Term::hcom(
            ty.clone(),
            Dim::Zero,
            Dim::One,
            p.clone().at_name("x"),
            vec![
                Tube::new("x", Side::Zero, "y", refl_a.clone().at_name("y")),
                Tube::new("x", Side::One, "y", q.clone().at_name("y")),
            ],
        ),
    )
}

/// The boundary of a square `Id (y. Id (x. A) (left @ y) (right @ y)) top bottom`.
#[derive(Clone, Debug)]
pub struct SquareParts {
    pub ty: Term,
    pub top: Term,
    pub bottom: Term,
    pub left: Term,
    pub right: Term,
}

/// `com r~>s (y. A) M [tubes]`, the heterogeneous Kan composite.
pub fn het_kan_composite(
    y: &str,
    family: Term,
    from: Dim,
    to: Dim,
    cap: Term,
    tubes: Vec<Tube>,
) -> Term {
    Term::com(y, family, from, to, cap, tubes)
}

/// `filler_y(c)` under `ctx`: unfolds the head of `c` to a composition and
/// retargets it at `y`.
pub fn filler_in(ctx: &Context, c: &Term, y: &str) -> Result<Term, GroupoidError> {
    let node = head_composition(ctx, c).ok_or_else(|| GroupoidError::NotAComposition(c.clone()))?;
    let target = Dim::name(y);
    Ok(match node {
        Term::HCom {
            ty,
            from,
            cap,
            tubes,
            ..
        } => Term::HCom {
            ty,
            from,
            to: target,
            cap,
            tubes: rename_fill(&tubes, y),
        },
        Term::Com {
            binder,
            family,
            from,
            cap,
            tubes,
            ..
        } => Term::Com {
            binder,
            family,
            from,
            to: target,
            cap,
            tubes: rename_fill(&tubes, y),
        },
        _ => unreachable!(),
    })
}

/// Keeps tube binders distinct from the new target and the extents, for
/// readability.
fn rename_fill(tubes: &[Tube], y: &str) -> Vec<Tube> {
    let mut taken: BTreeSet<Name> = tubes.iter().filter_map(|t| t.extent.as_name().cloned()).collect();
    taken.insert(y.into());
    tubes
        .iter()
        .map(|t| {
            if !taken.contains(&t.binder) {
                return t.clone();
            }
            let mut avoid = free_dims(&t.wall);
            avoid.extend(taken.iter().cloned());
            let w = fresh_from("w", &avoid);
            Tube::new_dim(
                t.extent.clone(),
                t.side,
                &w,
                subst(&t.wall, &t.binder, d(&w)),
            )
        })
        .collect()
}

/// Unfolds the head definition of `c` and β-reduces its dimension
/// arguments until an `hcom` or `com` appears.
fn head_composition(ctx: &Context, c: &Term) -> Option<Term> {
    let (head, args) = c.strip_dim_apps();
    let mut t = match head {
        Term::Var(n) => ctx.definition(n)?.clone(),
        other => other.clone(),
    };
    for r in args {
        match t {
            Term::DimAbs(x, body) => t = subst(&body, &x, r.clone()),
            _ => return None,
        }
    }
    match t {
        Term::HCom { .. } | Term::Com { .. } => Some(t),
        Term::Var(_) | Term::DimApp(..) => head_composition(ctx, &t),
        _ => None,
    }
}

/// One line of a catalog run: the constructions a lemma is witnessed by.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub key: &'static str,
    pub lemma: &'static str,
    pub names: Vec<Name>,
}

impl CatalogEntry {
    pub fn new(key: &'static str, lemma: &'static str, names: Vec<Name>) -> Self {
        CatalogEntry { key, lemma, names }
    }

    /// The principal construction.
    pub fn name(&self) -> &Name {
        &self.names[0]
    }

    /// Passes when every construction, and everything it uses, passes.
    pub fn passes(&self, ws: &Workspace) -> bool {
        self.names.iter().all(|n| ws.passes_with_dependencies(n))
    }
}

/// Declares the ambient points shared by the groupoid and theorem catalogs.
pub fn ambient(ws: &mut Workspace) -> Result<(), GroupoidError> {
    let var = Term::var;
    let id = |l: &str, r: &str| Term::id("x", var("A"), var(l), var(r));
    ws.comment("ambient context");
    ws.point("A", Term::Univ)?;
    for n in ["a", "b", "c", "d"] {
        ws.point(n, var("A"))?;
    }
    for (n, l, r) in [
        ("p", "a", "b"),
        ("q", "b", "c"),
        ("r", "c", "d"),
        ("s", "a", "c"),
        ("t", "b", "d"),
        ("u", "c", "d"),
    ] {
        ws.point(n, id(l, r))?;
    }
    let square = |bottom: &str| {
        Term::id(
            "y",
            Term::id("x", var("A"), var("s").at_name("y"), var("t").at_name("y")),
            var("p"),
            var(bottom),
        )
    };
    ws.point("alpha", square("r"))?;
    ws.point("beta", square("u"))?;
    ws.point("B", Term::Univ)?;
    ws.point("C", Term::Univ)?;
    ws.point("E", Term::id("x", Term::Univ, var("A"), var("B")))?;
    ws.point("F", Term::id("x", Term::Univ, var("B"), var("C")))?;
    ws.point("e", var("B"))?;
    ws.point("f", var("C"))?;
    ws.point("pe", Term::id("x", var("E").at_name("x"), var("a"), var("e")))?;
    ws.point("qf", Term::id("x", var("F").at_name("x"), var("e"), var("f")))?;
    Ok(())
}

/// Builds the groupoid catalog into `ws`, which must hold the ambient points.
pub fn build_stdlib(ws: &mut Workspace) -> Result<Vec<CatalogEntry>, GroupoidError> {
    let var = Term::var;
    let (a, ty) = (var("a"), var("A"));
    let (p, q, r) = (var("p"), var("q"), var("r"));
    let mut out = Vec::new();
    let mut push = |key, lemma, c: CheckedConstruction| {
        out.push(CatalogEntry::new(key, lemma, vec![c.name]))
    };
    ws.comment("reflexivity, inversion, composition");
    push("refl", "Reflexivity", ws.refl(&a, "x", &ty)?);
    push("inv", "Inversion", ws.inv(&p)?);
    push("comp", "Composition", ws.comp(&p, &q)?);
    ws.comment("units and cancellation");
    push("iu", "Inversion unit", ws.iu(&a, &ty)?);
    push("cu", "Composition unit", ws.cu(&a, &ty)?);
    push("ru", "Right unit", ws.ru(&p)?);
    push("rc", "Right cancellation", ws.rc(&p)?);
    ws.comment("square swap and inversability");
    push("swap", "Square swap", ws.swap(&var("alpha"))?);
    push("inversability", "Inversability", ws.inversability(&p)?);
    ws.comment("opposite identifications, left cancellation, left unit");
    push("op1", "Opposite identification (i)", ws.op1(&p)?);
    push("lc", "Left cancellation", ws.lc(&p)?);
    push("op2", "Opposite identification (ii)", ws.op2(&p)?);
    push("lu", "Left unit", ws.lu(&p)?);
    ws.comment("three-out-of-four and associativity");
    push("bi", "Three-out-of-four", ws.bi(&var("alpha"), &var("beta"))?);
    push("assoc", "Associativity", ws.assoc(&p, &q, &r)?);
    ws.comment("heterogeneous operations");
    push("type_inv", "Type inversion", ws.type_inv(&var("E"))?);
    push("het_inv", "Heterogeneous inversion", ws.het_inv(&var("pe"))?);
    push("type_comp", "Type composition", ws.type_comp(&var("E"), &var("F"))?);
    push("het_comp", "Heterogeneous composition", ws.het_comp(&var("pe"), &var("qf"))?);
    ws.comment("heterogeneous inversability");
    push("het_inversability", "Heterogeneous inversability", ws.het_inversability(&var("pe"))?);
    Ok(out)
}

/// Builds and checks every groupoid construction in a fresh ambient context.
pub fn stdlib_catalog() -> Result<Vec<CheckedConstruction>, GroupoidError> {
    let mut ws = Workspace::new();
    ambient(&mut ws)?;
    let entries = build_stdlib(&mut ws)?;
    Ok(entries
        .iter()
        .map(|e| ws.get(e.name()).cloned().expect("catalog entry was built"))
        .collect())
}
