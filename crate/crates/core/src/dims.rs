//! Dimension substitution, free-name analysis, freshening and α-equivalence.

use std::collections::BTreeSet;
use std::rc::Rc;
use std::sync::atomic::{AtomicUsize, Ordering};

use crate::syntax::{Dim, Name, Term, Tube};

/// A dimension substitution `⟨replacement/target⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimSubst {
    pub target: Name,
    pub replacement: Dim,
}

impl DimSubst {
    pub fn new(target: &str, replacement: Dim) -> Self {
        DimSubst {
            target: target.into(),
            replacement,
        }
    }
}

static FRESH_START: AtomicUsize = AtomicUsize::new(1);

/// Sets the first suffix tried by [`fresh`]. Only affects printed names.
pub fn set_fresh_seed(seed: usize) {
    FRESH_START.store(seed, Ordering::Relaxed);
}

/// A name based on `base` that is not in `avoid`.
///
/// The scheme is deterministic: strip trailing digits from `base`, then try
/// `base{k}` for `k = seed, seed + 1, ...`.
pub fn fresh_from(base: &str, avoid: &BTreeSet<Name>) -> Name {
    let stem = base.trim_end_matches(|c: char| c.is_ascii_digit());
    let stem = if stem.is_empty() { "i" } else { stem };
    let mut k = FRESH_START.load(Ordering::Relaxed);
    loop {
        let cand: Name = format!("{stem}{k}").into();
        if !avoid.contains(&cand) {
            return cand;
        }
        k += 1;
    }
}

pub fn fresh(avoid: &BTreeSet<Name>) -> Name {
    fresh_from("i", avoid)
}

/// The free dimension names of `t`.
pub fn free_dims(t: &Term) -> BTreeSet<Name> {
    let mut out = BTreeSet::new();
    collect_dims(t, &mut out);
    out
}

fn collect_dim(r: &Dim, out: &mut BTreeSet<Name>) {
    if let Dim::Name(n) = r {
        out.insert(n.clone());
    }
}

fn collect_under(binder: &Name, body: &Term, out: &mut BTreeSet<Name>) {
    let mut inner = free_dims(body);
    inner.remove(binder);
    out.extend(inner);
}

fn collect_tubes(tubes: &[Tube], out: &mut BTreeSet<Name>) {
    for tube in tubes {
        collect_dim(&tube.extent, out);
        collect_under(&tube.binder, &tube.wall, out);
    }
}

fn collect_dims(t: &Term, out: &mut BTreeSet<Name>) {
    match t {
        Term::Var(_) | Term::Univ => {}
        Term::DimAbs(x, body) => collect_under(x, body, out),
        Term::DimApp(f, r) => {
            collect_dims(f, out);
            collect_dim(r, out);
        }
        Term::Id {
            binder,
            family,
            left,
            right,
        } => {
            collect_under(binder, family, out);
            collect_dims(left, out);
            collect_dims(right, out);
        }
        Term::HCom {
            ty,
            from,
            to,
            cap,
            tubes,
        } => {
            collect_dims(ty, out);
            collect_dim(from, out);
            collect_dim(to, out);
            collect_dims(cap, out);
            collect_tubes(tubes, out);
        }
        Term::Coe {
            binder,
            family,
            from,
            to,
            arg,
        } => {
            collect_under(binder, family, out);
            collect_dim(from, out);
            collect_dim(to, out);
            collect_dims(arg, out);
        }
        Term::Com {
            binder,
            family,
            from,
            to,
            cap,
            tubes,
        } => {
            collect_under(binder, family, out);
            collect_dim(from, out);
            collect_dim(to, out);
            collect_dims(cap, out);
            collect_tubes(tubes, out);
        }
        Term::Pi(_, a, b) | Term::App(a, b) => {
            collect_dims(a, out);
            collect_dims(b, out);
        }
        Term::Lam(_, b) => collect_dims(b, out),
    }
}

/// True when `x` does not occur free in `t`.
pub fn is_degenerate_in(t: &Term, x: &str) -> bool {
    !free_dims(t).iter().any(|n| &**n == x)
}

fn subst_in_dim(r: &Dim, s: &DimSubst) -> Dim {
    match r {
        Dim::Name(n) if *n == s.target => s.replacement.clone(),
        _ => r.clone(),
    }
}

/// Substitutes under a dimension binder, renaming the binder if it would
/// capture the replacement.
fn subst_binder(binder: &Name, body: &Rc<Term>, s: &DimSubst) -> (Name, Rc<Term>) {
    if *binder == s.target {
        return (binder.clone(), body.clone());
    }
    let body_fd = free_dims(body);
    if !body_fd.contains(&s.target) {
        return (binder.clone(), body.clone());
    }
    if s.replacement.as_name() == Some(binder) {
        let mut avoid = body_fd;
        avoid.insert(binder.clone());
        avoid.insert(s.target.clone());
        let fresh = fresh_from(binder, &avoid);
        let renamed = subst_dim(body, &DimSubst::new(binder, Dim::Name(fresh.clone())));
        return (fresh, Rc::new(subst_dim(&renamed, s)));
    }
    (binder.clone(), Rc::new(subst_dim(body, s)))
}

fn subst_tubes(tubes: &[Tube], s: &DimSubst) -> Vec<Tube> {
    tubes
        .iter()
        .map(|tube| {
            let (mut binder, mut wall) = subst_binder(&tube.binder, &tube.wall, s);
            let extent = subst_in_dim(&tube.extent, s);
            // Not a capture, but `y=0 y. M` reads badly.
            if extent.as_name() == Some(&binder) {
                let mut avoid = free_dims(&wall);
                avoid.insert(binder.clone());
                let fresh = fresh_from(&binder, &avoid);
                wall = Rc::new(subst_dim(&wall, &DimSubst::new(&binder, Dim::Name(fresh.clone()))));
                binder = fresh;
            }
            Tube {
                extent,
                side: tube.side,
                binder,
                wall,
            }
        })
        .collect()
}

/// Capture-avoiding dimension substitution `t⟨r/x⟩`.
pub fn subst_dim(t: &Term, s: &DimSubst) -> Term {
    match t {
        Term::Var(_) | Term::Univ => t.clone(),
        Term::DimAbs(x, body) => {
            let (x, body) = subst_binder(x, body, s);
            Term::DimAbs(x, body)
        }
        Term::DimApp(f, r) => Term::DimApp(Rc::new(subst_dim(f, s)), subst_in_dim(r, s)),
        Term::Id {
            binder,
            family,
            left,
            right,
        } => {
            let (binder, family) = subst_binder(binder, family, s);
            Term::Id {
                binder,
                family,
                left: Rc::new(subst_dim(left, s)),
                right: Rc::new(subst_dim(right, s)),
            }
        }
        Term::HCom {
            ty,
            from,
            to,
            cap,
            tubes,
        } => Term::HCom {
            ty: Rc::new(subst_dim(ty, s)),
            from: subst_in_dim(from, s),
            to: subst_in_dim(to, s),
            cap: Rc::new(subst_dim(cap, s)),
            tubes: subst_tubes(tubes, s),
        },
        Term::Coe {
            binder,
            family,
            from,
            to,
            arg,
        } => {
            let (binder, family) = subst_binder(binder, family, s);
            Term::Coe {
                binder,
                family,
                from: subst_in_dim(from, s),
                to: subst_in_dim(to, s),
                arg: Rc::new(subst_dim(arg, s)),
            }
        }
        Term::Com {
            binder,
            family,
            from,
            to,
            cap,
            tubes,
        } => {
            let (binder, family) = subst_binder(binder, family, s);
            Term::Com {
                binder,
                family,
                from: subst_in_dim(from, s),
                to: subst_in_dim(to, s),
                cap: Rc::new(subst_dim(cap, s)),
                tubes: subst_tubes(tubes, s),
            }
        }
        Term::Pi(v, a, b) => Term::Pi(
            v.clone(),
            Rc::new(subst_dim(a, s)),
            Rc::new(subst_dim(b, s)),
        ),
        Term::Lam(v, b) => Term::Lam(v.clone(), Rc::new(subst_dim(b, s))),
        Term::App(a, b) => Term::App(Rc::new(subst_dim(a, s)), Rc::new(subst_dim(b, s))),
    }
}

/// Shorthand for `subst_dim(t, x := r)`.
pub fn subst(t: &Term, x: &str, r: Dim) -> Term {
    subst_dim(t, &DimSubst::new(x, r))
}

/// The free point variables of `t`.
pub fn free_vars(t: &Term) -> BTreeSet<Name> {
    fn go(t: &Term, bound: &mut Vec<Name>, out: &mut BTreeSet<Name>) {
        match t {
            Term::Var(n) => {
                if !bound.contains(n) {
                    out.insert(n.clone());
                }
            }
            Term::Univ => {}
            Term::DimAbs(_, b) | Term::DimApp(b, _) => go(b, bound, out),
            Term::Id {
                family,
                left,
                right,
                ..
            } => {
                go(family, bound, out);
                go(left, bound, out);
                go(right, bound, out);
            }
            Term::HCom { ty, cap, tubes, .. } => {
                go(ty, bound, out);
                go(cap, bound, out);
                tubes.iter().for_each(|tb| go(&tb.wall, bound, out));
            }
            Term::Coe { family, arg, .. } => {
                go(family, bound, out);
                go(arg, bound, out);
            }
            Term::Com {
                family, cap, tubes, ..
            } => {
                go(family, bound, out);
                go(cap, bound, out);
                tubes.iter().for_each(|tb| go(&tb.wall, bound, out));
            }
            Term::Pi(v, a, b) => {
                go(a, bound, out);
                bound.push(v.clone());
                go(b, bound, out);
                bound.pop();
            }
            Term::Lam(v, b) => {
                bound.push(v.clone());
                go(b, bound, out);
                bound.pop();
            }
            Term::App(a, b) => {
                go(a, bound, out);
                go(b, bound, out);
            }
        }
    }
    let mut out = BTreeSet::new();
    go(t, &mut Vec::new(), &mut out);
    out
}

/// Capture-avoiding substitution of a term for a point variable; used for
/// β-reduction of the function fragment.
pub fn subst_var(t: &Term, v: &Name, replacement: &Term) -> Term {
    let repl_fv = free_vars(replacement);
    subst_var_with(t, v, replacement, &repl_fv)
}

fn subst_var_with(t: &Term, v: &Name, r: &Term, r_fv: &BTreeSet<Name>) -> Term {
    let go = |t: &Rc<Term>| Rc::new(subst_var_with(t, v, r, r_fv));
    // Dimension binders inside `r` are closed over by point binders only, so
    // point substitution cannot capture a dimension name except when `r`
    // mentions a dimension bound on the way down. Rename such binders apart.
    let r_fd = free_dims(r);
    let dim_binder = |x: &Name, body: &Rc<Term>| -> (Name, Rc<Term>) {
        if r_fd.contains(x) && free_vars(body).contains(v) {
            let mut avoid = free_dims(body);
            avoid.extend(r_fd.iter().cloned());
            let fresh = fresh_from(x, &avoid);
            let renamed = subst(body, x, Dim::Name(fresh.clone()));
            (fresh, Rc::new(subst_var_with(&renamed, v, r, r_fv)))
        } else {
            (x.clone(), go(body))
        }
    };
    let tubes = |tubes: &[Tube]| -> Vec<Tube> {
        tubes
            .iter()
            .map(|tb| {
                let (binder, wall) = dim_binder(&tb.binder, &tb.wall);
                Tube {
                    extent: tb.extent.clone(),
                    side: tb.side,
                    binder,
                    wall,
                }
            })
            .collect()
    };
    let point_binder = |u: &Name, body: &Rc<Term>| -> (Name, Rc<Term>) {
        if u == v {
            return (u.clone(), body.clone());
        }
        if r_fv.contains(u) && free_vars(body).contains(v) {
            let mut avoid = free_vars(body);
            avoid.extend(r_fv.iter().cloned());
            avoid.insert(v.clone());
            let fresh = fresh_from(u, &avoid);
            let renamed = subst_var(body, u, &Term::Var(fresh.clone()));
            (fresh, Rc::new(subst_var_with(&renamed, v, r, r_fv)))
        } else {
            (u.clone(), go(body))
        }
    };
    match t {
        Term::Var(n) if n == v => r.clone(),
        Term::Var(_) | Term::Univ => t.clone(),
        Term::DimAbs(x, b) => {
            let (x, b) = dim_binder(x, b);
            Term::DimAbs(x, b)
        }
        Term::DimApp(f, d) => Term::DimApp(go(f), d.clone()),
        Term::Id {
            binder,
            family,
            left,
            right,
        } => {
            let (binder, family) = dim_binder(binder, family);
            Term::Id {
                binder,
                family,
                left: go(left),
                right: go(right),
            }
        }
        Term::HCom {
            ty,
            from,
            to,
            cap,
            tubes: ts,
        } => Term::HCom {
            ty: go(ty),
            from: from.clone(),
            to: to.clone(),
            cap: go(cap),
            tubes: tubes(ts),
        },
        Term::Coe {
            binder,
            family,
            from,
            to,
            arg,
        } => {
            let (binder, family) = dim_binder(binder, family);
            Term::Coe {
                binder,
                family,
                from: from.clone(),
                to: to.clone(),
                arg: go(arg),
            }
        }
        Term::Com {
            binder,
            family,
            from,
            to,
            cap,
            tubes: ts,
        } => {
            let (binder, family) = dim_binder(binder, family);
            Term::Com {
                binder,
                family,
                from: from.clone(),
                to: to.clone(),
                cap: go(cap),
                tubes: tubes(ts),
            }
        }
        Term::Pi(u, a, b) => {
            let a = go(a);
            let (u, b) = point_binder(u, b);
            Term::Pi(u, a, b)
        }
        Term::Lam(u, b) => {
            let (u, b) = point_binder(u, b);
            Term::Lam(u, b)
        }
        Term::App(a, b) => Term::App(go(a), go(b)),
    }
}

/// Binder correspondence for α-comparison.
#[derive(Default)]
struct Scope {
    dims: Vec<(Name, Name)>,
    vars: Vec<(Name, Name)>,
}

fn lookup(pairs: &[(Name, Name)], a: &Name, b: &Name) -> bool {
    for (l, r) in pairs.iter().rev() {
        if l == a || r == b {
            return l == a && r == b;
        }
    }
    a == b
}

fn dim_eq(sc: &Scope, a: &Dim, b: &Dim) -> bool {
    match (a, b) {
        (Dim::Name(x), Dim::Name(y)) => lookup(&sc.dims, x, y),
        _ => a == b,
    }
}

fn under_dim(sc: &mut Scope, x: &Name, y: &Name, a: &Term, b: &Term) -> bool {
    sc.dims.push((x.clone(), y.clone()));
    let r = alpha(sc, a, b);
    sc.dims.pop();
    r
}

fn tube_eq(sc: &mut Scope, a: &Tube, b: &Tube) -> bool {
    a.side == b.side
        && dim_eq(sc, &a.extent, &b.extent)
        && under_dim(sc, &a.binder, &b.binder, &a.wall, &b.wall)
}

/// Tubes compare as multisets: the order they are written in carries no
/// meaning.
fn tubes_eq(sc: &mut Scope, a: &[Tube], b: &[Tube]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    'outer: for ta in a {
        for (j, tb) in b.iter().enumerate() {
            if !used[j] && tube_eq(sc, ta, tb) {
                used[j] = true;
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn alpha(sc: &mut Scope, a: &Term, b: &Term) -> bool {
    if std::ptr::eq(a, b) && sc.dims.is_empty() && sc.vars.is_empty() {
        return true;
    }
    match (a, b) {
        (Term::Var(x), Term::Var(y)) => lookup(&sc.vars, x, y),
        (Term::Univ, Term::Univ) => true,
        (Term::DimAbs(x, m), Term::DimAbs(y, n)) => under_dim(sc, x, y, m, n),
        (Term::DimApp(f, r), Term::DimApp(g, s)) => dim_eq(sc, r, s) && alpha(sc, f, g),
        (
            Term::Id {
                binder: x,
                family: fa,
                left: la,
                right: ra,
            },
            Term::Id {
                binder: y,
                family: fb,
                left: lb,
                right: rb,
            },
        ) => under_dim(sc, x, y, fa, fb) && alpha(sc, la, lb) && alpha(sc, ra, rb),
        (
            Term::HCom {
                ty: ta,
                from: fa,
                to: oa,
                cap: ca,
                tubes: ua,
            },
            Term::HCom {
                ty: tb,
                from: fb,
                to: ob,
                cap: cb,
                tubes: ub,
            },
        ) => {
            dim_eq(sc, fa, fb)
                && dim_eq(sc, oa, ob)
                && alpha(sc, ta, tb)
                && alpha(sc, ca, cb)
                && tubes_eq(sc, ua, ub)
        }
        (
            Term::Coe {
                binder: x,
                family: fa,
                from: ra,
                to: sa,
                arg: ma,
            },
            Term::Coe {
                binder: y,
                family: fb,
                from: rb,
                to: sb,
                arg: mb,
            },
        ) => {
            dim_eq(sc, ra, rb)
                && dim_eq(sc, sa, sb)
                && under_dim(sc, x, y, fa, fb)
                && alpha(sc, ma, mb)
        }
        (
            Term::Com {
                binder: x,
                family: fa,
                from: ra,
                to: sa,
                cap: ca,
                tubes: ua,
            },
            Term::Com {
                binder: y,
                family: fb,
                from: rb,
                to: sb,
                cap: cb,
                tubes: ub,
            },
        ) => {
            dim_eq(sc, ra, rb)
                && dim_eq(sc, sa, sb)
                && under_dim(sc, x, y, fa, fb)
                && alpha(sc, ca, cb)
                && tubes_eq(sc, ua, ub)
        }
        (Term::Pi(x, da, ca), Term::Pi(y, db, cb)) => {
            if !alpha(sc, da, db) {
                return false;
            }
            sc.vars.push((x.clone(), y.clone()));
            let r = alpha(sc, ca, cb);
            sc.vars.pop();
            r
        }
        (Term::Lam(x, ba), Term::Lam(y, bb)) => {
            sc.vars.push((x.clone(), y.clone()));
            let r = alpha(sc, ba, bb);
            sc.vars.pop();
            r
        }
        (Term::App(fa, aa), Term::App(fb, ab)) => alpha(sc, fa, fb) && alpha(sc, aa, ab),
        _ => false,
    }
}

/// α-equivalence up to renaming of bound dimension names and point variables,
/// with tubes compared irrespective of order.
pub fn alpha_eq(a: &Term, b: &Term) -> bool {
    alpha(&mut Scope::default(), a, b)
}
