//! Typing judgments: membership `M ∈ A`, identification-type formation,
//! open-box adjacency for `hcom`/`com`, coercion, and boundary reports.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

pub use crate::context::Context;
use crate::dims::{free_dims, fresh_from, is_degenerate_in, subst, subst_var};
use crate::evaluator::{face, judge_equal, normalize, NormalForm};
use crate::syntax::{Dim, Name, Side, Term, Tube};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("unbound variable {0}")]
    UnboundVariable(Name),
    #[error("unbound dimension {0}")]
    UnboundDimension(Name),
    #[error("type mismatch at {path}: expected {expected}, found {actual}")]
    TypeMismatch {
        expected: Term,
        actual: Term,
        path: String,
    },
    #[error("endpoint {side} mismatch: expected {expected}, found {actual}")]
    EndpointMismatch {
        side: Side,
        expected: Term,
        actual: Term,
    },
    #[error("composition type {ty} depends on the fill direction {dim}")]
    NonDegenerateCompositionType { ty: Term, dim: Name },
    #[error("cap and tube {extent}={side} disagree: expected {expected}, found {actual}")]
    CapTubeMismatch {
        extent: Dim,
        side: Side,
        expected: Term,
        actual: Term,
    },
    #[error("tubes {first} and {second} disagree: {left} vs {right}")]
    TubeTubeMismatch {
        first: String,
        second: String,
        left: Term,
        right: Term,
    },
    #[error("wall {extent}={side} is ill-typed: {source}")]
    WallIllTyped {
        extent: Dim,
        side: Side,
        source: Box<CheckError>,
    },
    #[error("{0} is not a type")]
    NotAType(Term),
    #[error("expected an identification type, found {0}")]
    NotAnIdentification(Term),
    #[error("expected a function type, found {0}")]
    NotAFunction(Term),
    #[error("cannot infer a type for {0}")]
    CannotInfer(Term),
}

pub type CheckResult<T> = Result<T, CheckError>;

/// One line of a verdict trace. The `Display` form is the stable
/// machine-readable format.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceLine {
    Face {
        dim: Name,
        side: Side,
        term: Term,
    },
    Adj {
        /// Nesting depth of the box this adjacency belongs to.
        depth: usize,
        kind: &'static str,
        loc: String,
        ok: bool,
        expected: Term,
        actual: Term,
    },
    Check {
        name: String,
        pass: bool,
    },
}

impl fmt::Display for TraceLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceLine::Face { dim, side, term } => write!(f, "FACE {dim}={side}: {term}"),
            TraceLine::Adj {
                kind,
                loc,
                ok,
                expected,
                actual,
                ..
            } => {
                if *ok {
                    write!(f, "ADJ {kind} {loc}: OK")
                } else {
                    write!(f, "ADJ {kind} {loc}: FAIL expected={expected} actual={actual}")
                }
            }
            TraceLine::Check { name, pass } => {
                write!(f, "CHECK {name}: {}", if *pass { "PASS" } else { "FAIL" })
            }
        }
    }
}

/// The outcome of a membership check together with its trace.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub trace: Vec<TraceLine>,
    pub result: CheckResult<()>,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.result.is_ok()
    }
}

/// Checks `m ∈ a` under `ctx`.
pub fn check_member(ctx: &Context, m: &Term, a: &Term) -> Verdict {
    let mut k = Checker::default();
    let result = k.check(ctx, m, a);
    Verdict {
        trace: k.trace,
        result,
    }
}

/// Infers the (normalized) type of `m`.
pub fn infer_type(ctx: &Context, m: &Term) -> CheckResult<Term> {
    Checker::default().infer(ctx, m)
}

/// Checks that `a` is a type, i.e. a member of the universe.
pub fn check_type(ctx: &Context, a: &Term) -> CheckResult<()> {
    Checker::default().check_type(ctx, a)
}

/// Validates an open box for `hcom from~>to ty cap [tubes]`.
pub fn check_open_box(
    ctx: &Context,
    ty: &Term,
    from: &Dim,
    to: &Dim,
    cap: &Term,
    tubes: &[Tube],
) -> Verdict {
    let mut k = Checker::default();
    let result = k.open_box(ctx, &BoxType::Homogeneous(ty), from, to, cap, tubes);
    Verdict {
        trace: k.trace,
        result,
    }
}

enum BoxType<'a> {
    Homogeneous(&'a Term),
    /// `com`: the type line over the fill direction.
    Heterogeneous(&'a Name, &'a Term),
}

impl BoxType<'_> {
    fn at(&self, r: &Dim) -> Term {
        match self {
            BoxType::Homogeneous(ty) => (*ty).clone(),
            BoxType::Heterogeneous(y, fam) => subst(fam, y, r.clone()),
        }
    }
}

#[derive(Default)]
struct Checker {
    trace: Vec<TraceLine>,
    depth: usize,
}

fn mismatch(expected: &Term, actual: &Term, path: &str) -> CheckError {
    CheckError::TypeMismatch {
        expected: expected.clone(),
        actual: actual.clone(),
        path: path.to_string(),
    }
}

/// Renames `x` in `body` away from the names already in scope.
fn open_binder(ctx: &Context, x: &Name, body: &Term) -> (Name, Term) {
    if !ctx.has_dim(x) {
        return (x.clone(), body.clone());
    }
    let mut avoid = ctx.dims().clone();
    avoid.extend(free_dims(body));
    let y = fresh_from(x, &avoid);
    let renamed = subst(body, x, Dim::Name(y.clone()));
    (y, renamed)
}

impl Checker {
    fn dim_in_scope(&self, ctx: &Context, r: &Dim) -> CheckResult<()> {
        match r {
            Dim::Name(n) if !ctx.has_dim(n) => Err(CheckError::UnboundDimension(n.clone())),
            _ => Ok(()),
        }
    }

    fn check_type(&mut self, ctx: &Context, a: &Term) -> CheckResult<()> {
        let ty = self.infer(ctx, a)?;
        if judge_equal(ctx, &ty, &Term::Univ) {
            Ok(())
        } else {
            Err(CheckError::NotAType(a.clone()))
        }
    }

    fn check(&mut self, ctx: &Context, m: &Term, a: &Term) -> CheckResult<()> {
        let a = normalize(ctx, a).into_term();
        match (m, &a) {
            (
                Term::DimAbs(x, body),
                Term::Id {
                    binder,
                    family,
                    left,
                    right,
                },
            ) => {
                let (x, body) = open_binder(ctx, x, body);
                let inner = ctx.with_dim(&x);
                let fam = subst(family, binder, Dim::Name(x.clone()));
                self.check(&inner, &body, &fam)?;
                for (side, expected) in [(Side::Zero, left), (Side::One, right)] {
                    let actual = face(ctx, &body, &x, side).into_term();
                    if !judge_equal(ctx, &actual, expected) {
                        return Err(CheckError::EndpointMismatch {
                            side,
                            expected: (**expected).clone(),
                            actual,
                        });
                    }
                }
                Ok(())
            }
            (Term::Lam(v, body), Term::Pi(u, dom, cod)) => {
                let inner = ctx.with_local(v, (**dom).clone());
                let cod = subst_var(cod, u, &Term::Var(v.clone()));
                self.check(&inner, body, &cod)
            }
            _ => {
                let actual = self.infer(ctx, m)?;
                if judge_equal(ctx, &actual, &a) {
                    Ok(())
                } else {
                    Err(mismatch(&a, &actual, &m.to_string()))
                }
            }
        }
    }

    /// Returns the normalized type of `m`.
    fn infer(&mut self, ctx: &Context, m: &Term) -> CheckResult<Term> {
        let ty = match m {
            Term::Var(n) => ctx
                .type_of(n)
                .cloned()
                .ok_or_else(|| CheckError::UnboundVariable(n.clone()))?,
            Term::Univ => Term::Univ,
            Term::DimAbs(x, body) => {
                let (x, body) = open_binder(ctx, x, body);
                let inner = ctx.with_dim(&x);
                let fam = self.infer(&inner, &body)?;
                Term::id(
                    &x,
                    fam,
                    face(ctx, &body, &x, Side::Zero).into_term(),
                    face(ctx, &body, &x, Side::One).into_term(),
                )
            }
            Term::DimApp(f, r) => {
                self.dim_in_scope(ctx, r)?;
                match self.infer(ctx, f)? {
                    Term::Id { binder, family, .. } => subst(&family, &binder, r.clone()),
                    other => return Err(CheckError::NotAnIdentification(other)),
                }
            }
            Term::Id {
                binder,
                family,
                left,
                right,
            } => {
                let (x, family) = open_binder(ctx, binder, family);
                self.check_type(&ctx.with_dim(&x), &family)?;
                self.check(ctx, left, &subst(&family, &x, Dim::Zero))?;
                self.check(ctx, right, &subst(&family, &x, Dim::One))?;
                Term::Univ
            }
            Term::HCom {
                ty,
                from,
                to,
                cap,
                tubes,
            } => {
                self.check_type(ctx, ty)?;
                self.open_box(ctx, &BoxType::Homogeneous(ty), from, to, cap, tubes)?;
                (**ty).clone()
            }
            Term::Coe {
                binder,
                family,
                from,
                to,
                arg,
            } => {
                self.dim_in_scope(ctx, from)?;
                self.dim_in_scope(ctx, to)?;
                let (x, family) = open_binder(ctx, binder, family);
                self.check_type(&ctx.with_dim(&x), &family)?;
                self.check(ctx, arg, &subst(&family, &x, from.clone()))?;
                subst(&family, &x, to.clone())
            }
            Term::Com {
                binder,
                family,
                from,
                to,
                cap,
                tubes,
            } => {
                let (y, family) = open_binder(ctx, binder, family);
                self.check_type(&ctx.with_dim(&y), &family)?;
                self.open_box(ctx, &BoxType::Heterogeneous(&y, &family), from, to, cap, tubes)?;
                subst(&family, &y, to.clone())
            }
            Term::Pi(v, dom, cod) => {
                self.check_type(ctx, dom)?;
                self.check_type(&ctx.with_local(v, (**dom).clone()), cod)?;
                Term::Univ
            }
            Term::Lam(..) => return Err(CheckError::CannotInfer(m.clone())),
            Term::App(f, a) => match self.infer(ctx, f)? {
                Term::Pi(u, dom, cod) => {
                    self.check(ctx, a, &dom)?;
                    subst_var(&cod, &u, a)
                }
                other => return Err(CheckError::NotAFunction(other)),
            },
        };
        Ok(normalize(ctx, &ty).into_term())
    }

    fn adj(&mut self, kind: &'static str, loc: String, expected: &Term, actual: &Term, ok: bool) {
        self.trace.push(TraceLine::Adj {
            depth: self.depth,
            kind,
            loc,
            ok,
            expected: expected.clone(),
            actual: actual.clone(),
        });
    }

    fn open_box(
        &mut self,
        ctx: &Context,
        ty: &BoxType<'_>,
        from: &Dim,
        to: &Dim,
        cap: &Term,
        tubes: &[Tube],
    ) -> CheckResult<()> {
        self.dim_in_scope(ctx, from)?;
        self.dim_in_scope(ctx, to)?;
        for tube in tubes {
            self.dim_in_scope(ctx, &tube.extent)?;
        }
        // A5: a homogeneous box lives in a single type.
        if let BoxType::Homogeneous(t) = ty {
            for tube in tubes {
                if !is_degenerate_in(t, &tube.binder) {
                    return Err(CheckError::NonDegenerateCompositionType {
                        ty: (*t).clone(),
                        dim: tube.binder.clone(),
                    });
                }
            }
        }
        self.depth += 1;
        let result = self.open_box_inner(ctx, ty, from, cap, tubes);
        self.depth -= 1;
        result
    }

    fn open_box_inner(
        &mut self,
        ctx: &Context,
        ty: &BoxType<'_>,
        from: &Dim,
        cap: &Term,
        tubes: &[Tube],
    ) -> CheckResult<()> {
        // A1
        self.check(ctx, cap, &ty.at(from))?;

        // Walls are opened at one shared fresh fill name.
        let mut avoid = ctx.dims().clone();
        for tube in tubes {
            avoid.extend(free_dims(&tube.wall));
        }
        if let BoxType::Heterogeneous(y, fam) = ty {
            avoid.insert((*y).clone());
            avoid.extend(free_dims(fam));
        }
        let fill = fresh_from("y", &avoid);
        let walls: Vec<Term> = tubes
            .iter()
            .map(|t| subst(&t.wall, &t.binder, Dim::Name(fill.clone())))
            .collect();

        // A4
        let inner = ctx.with_dim(&fill);
        for (tube, wall) in tubes.iter().zip(&walls) {
            let fill_dim = Dim::Name(fill.clone());
            let wall_ty = match (ty, &tube.extent) {
                (_, Dim::Name(x)) => subst(&ty.at(&fill_dim), x, tube.side.into()),
                _ => ty.at(&fill_dim),
            };
            self.check(&inner, wall, &wall_ty)
                .map_err(|e| CheckError::WallIllTyped {
                    extent: tube.extent.clone(),
                    side: tube.side,
                    source: Box::new(e),
                })?;
        }

        let mut first_error = None;
        // A2
        for (tube, wall) in tubes.iter().zip(&walls) {
            let Dim::Name(x) = &tube.extent else { continue };
            let expected = face(ctx, cap, x, tube.side).into_term();
            let actual = normalize(ctx, &subst(wall, &fill, from.clone())).into_term();
            let ok = judge_equal(ctx, &expected, &actual);
            self.adj(
                "cap-tube",
                format!("{}={}", tube.extent, tube.side),
                &expected,
                &actual,
                ok,
            );
            if !ok && first_error.is_none() {
                first_error = Some(CheckError::CapTubeMismatch {
                    extent: tube.extent.clone(),
                    side: tube.side,
                    expected,
                    actual,
                });
            }
        }
        // A3
        for i in 0..tubes.len() {
            for j in i + 1..tubes.len() {
                let (ti, tj) = (&tubes[i], &tubes[j]);
                let (Dim::Name(xi), Dim::Name(xj)) = (&ti.extent, &tj.extent) else {
                    continue;
                };
                // Tubes on opposite faces of one extent never meet; tubes on
                // the same face overlap on all of it.
                if xi == xj && ti.side != tj.side {
                    continue;
                }
                let left = face(&inner, &walls[i], xj, tj.side).into_term();
                let right = face(&inner, &walls[j], xi, ti.side).into_term();
                let ok = judge_equal(&inner, &left, &right);
                let first = format!("{xi}={}", ti.side);
                let second = format!("{xj}={}", tj.side);
                self.adj("tube-tube", format!("{first},{second}"), &left, &right, ok);
                if !ok && first_error.is_none() {
                    first_error = Some(CheckError::TubeTubeMismatch {
                        first,
                        second,
                        left,
                        right,
                    });
                }
            }
        }
        match first_error {
            Some(e) => Err(e),
            None => Ok(()),
        }
    }
}

/// The faces of a term along each of its free dimensions.
#[derive(Clone, Debug)]
pub struct BoundaryReport {
    pub subject: Term,
    pub faces: BTreeMap<(Name, Side), NormalForm>,
    pub verdicts: Vec<FaceVerdict>,
}

#[derive(Clone, Debug)]
pub struct FaceVerdict {
    pub dim: Name,
    pub side: Side,
    pub expected: Term,
    pub actual: Term,
    pub pass: bool,
}

impl BoundaryReport {
    /// Compares the face `dim=side` against `expected` and records the verdict.
    pub fn expect(&mut self, ctx: &Context, dim: &str, side: Side, expected: &Term) -> bool {
        let actual = match self.faces.get(&(Name::from(dim), side)) {
            Some(nf) => nf.term().clone(),
            None => face(ctx, &self.subject, dim, side).into_term(),
        };
        let pass = judge_equal(ctx, &actual, expected);
        self.verdicts.push(FaceVerdict {
            dim: dim.into(),
            side,
            expected: expected.clone(),
            actual,
            pass,
        });
        pass
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn trace(&self) -> Vec<TraceLine> {
        self.faces
            .iter()
            .map(|((dim, side), nf)| TraceLine::Face {
                dim: dim.clone(),
                side: *side,
                term: nf.term().clone(),
            })
            .collect()
    }
}

pub fn boundary_report(ctx: &Context, m: &Term) -> BoundaryReport {
    let faces = free_dims(m)
        .into_iter()
        .flat_map(|x| Side::BOTH.map(|s| (x.clone(), s)))
        .map(|(x, s)| {
            let nf = face(ctx, m, &x, s);
            ((x, s), nf)
        })
        .collect();
    BoundaryReport {
        subject: m.clone(),
        faces,
        verdicts: Vec::new(),
    }
}

/// The verdict for one declaration of a source file.
#[derive(Clone, Debug)]
pub struct DeclVerdict {
    pub name: String,
    pub verdict: Verdict,
}

impl DeclVerdict {
    pub fn check_line(&self) -> TraceLine {
        TraceLine::Check {
            name: self.name.clone(),
            pass: self.verdict.passed(),
        }
    }
}

/// Elaborates declarations in order, extending `ctx`. A definition that
/// fails its check is still added so later declarations can be examined.
pub fn check_decls(ctx: &mut Context, decls: &[crate::syntax::Decl]) -> Vec<DeclVerdict> {
    use crate::syntax::Decl;
    let mut out = Vec::new();
    let mut anonymous = 0;
    for decl in decls {
        match decl {
            Decl::Dim { name } => ctx.declare_dim(name),
            Decl::Point { name, ty } => {
                let result = check_type(ctx, ty);
                if result.is_ok() {
                    ctx.declare_point(name, ty.clone());
                }
                if let Err(e) = result {
                    out.push(DeclVerdict {
                        name: name.to_string(),
                        verdict: Verdict {
                            trace: Vec::new(),
                            result: Err(e),
                        },
                    });
                }
            }
            Decl::Def { name, term, ty } => {
                let verdict = match check_type(ctx, ty) {
                    Ok(()) => check_member(ctx, term, ty),
                    Err(e) => Verdict {
                        trace: Vec::new(),
                        result: Err(e),
                    },
                };
                ctx.define(name, term.clone(), ty.clone());
                out.push(DeclVerdict {
                    name: name.to_string(),
                    verdict,
                });
            }
            Decl::Check { term, ty } => {
                anonymous += 1;
                let verdict = match check_type(ctx, ty) {
                    Ok(()) => check_member(ctx, term, ty),
                    Err(e) => Verdict {
                        trace: Vec::new(),
                        result: Err(e),
                    },
                };
                out.push(DeclVerdict {
                    name: format!("check{anonymous}"),
                    verdict,
                });
            }
        }
    }
    out
}
