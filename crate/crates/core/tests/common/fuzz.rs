//! A seeded term fuzzer and the rewrite-system properties checked on it.
//!
//! Generated terms never apply a bound point variable and never produce a
//! λ outside head position, so β-reduction cannot recreate redexes and
//! every term normalizes.

use std::rc::Rc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cubeline::dims::{alpha_eq, free_dims, free_vars, subst, subst_var};
use cubeline::evaluator::normalize;
use cubeline::syntax::{parse_term, Dim, Name, Side, Term, Tube};
use cubeline::Context;

use super::{count_sites, map_children, rewrite_at, Outcome};

pub const CORPUS_SIZE: usize = 1000;
pub const MAX_DEPTH: usize = 6;

const DIM_NAMES: [&str; 5] = ["i", "j", "x", "y", "z"];
const BINDERS: [&str; 3] = ["x", "y", "z"];
const POINTS: [&str; 4] = ["a", "b", "p", "q"];
const FUNS: [&str; 2] = ["f", "g"];
const LAM_BINDERS: [&str; 2] = ["v", "w"];

pub struct Gen {
    rng: ChaCha8Rng,
}

impl Gen {
    pub fn new(seed: u64) -> Gen {
        Gen {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn pick<T: Copy>(&mut self, xs: &[T]) -> T {
        *xs.choose(&mut self.rng).expect("non-empty")
    }

    fn dim(&mut self) -> Dim {
        match self.rng.gen_range(0..7) {
            0 => Dim::Zero,
            1 => Dim::One,
            _ => Dim::name(self.pick(&DIM_NAMES)),
        }
    }

    fn side(&mut self) -> Side {
        if self.rng.gen_bool(0.5) {
            Side::Zero
        } else {
            Side::One
        }
    }

    fn leaf(&mut self, bound: &[Name]) -> Term {
        match self.rng.gen_range(0..10) {
            0 => Term::Univ,
            1..=3 if !bound.is_empty() => Term::Var(bound[self.rng.gen_range(0..bound.len())].clone()),
            _ => Term::var(self.pick(&POINTS)),
        }
    }

    fn tubes(&mut self, depth: usize, bound: &[Name]) -> Vec<Tube> {
        let mut tubes: Vec<Tube> = Vec::new();
        for _ in 0..self.rng.gen_range(0..3) {
            let extent = Dim::name(self.pick(&DIM_NAMES));
            let side = self.side();
            // A face carries at most one tube.
            if tubes.iter().any(|t| t.extent == extent && t.side == side) {
                continue;
            }
            let binder = self.pick(&BINDERS);
            tubes.push(Tube::new_dim(extent, side, binder, self.term(depth, bound)));
        }
        tubes
    }

    /// A term of depth at most `depth` that never normalizes to a λ.
    pub fn term(&mut self, depth: usize, bound: &[Name]) -> Term {
        if depth <= 1 {
            return self.leaf(bound);
        }
        let d = depth - 1;
        match self.rng.gen_range(0..12) {
            0 | 1 => self.leaf(bound),
            2 => Term::dim_abs(self.pick(&BINDERS), self.term(d, bound)),
            3 | 4 => {
                let head = self.term(d, bound);
                Term::DimApp(Rc::new(head), self.dim())
            }
            5 => Term::id(self.pick(&BINDERS), self.term(d, bound), self.term(d, bound), self.term(d, bound)),
            6 => {
                let (ty, from, to, cap) = (self.term(d, bound), self.dim(), self.dim(), self.term(d, bound));
                let tubes = self.tubes(d, bound);
                Term::hcom(ty, from, to, cap, tubes)
            }
            7 => {
                let (x, fam, from, to, arg) =
                    (self.pick(&BINDERS), self.term(d, bound), self.dim(), self.dim(), self.term(d, bound));
                Term::coe(x, fam, from, to, arg)
            }
            8 => {
                let (y, fam, from, to, cap) =
                    (self.pick(&BINDERS), self.term(d, bound), self.dim(), self.dim(), self.term(d, bound));
                let tubes = self.tubes(d, bound);
                Term::com(y, fam, from, to, cap, tubes)
            }
            9 => {
                let v = self.pick(&LAM_BINDERS);
                let dom = self.term(d, bound);
                let mut inner = bound.to_vec();
                inner.push(v.into());
                Term::pi(v, dom, self.term(d, &inner))
            }
            _ => {
                let head = self.head(d, bound);
                head.app(self.term(d, bound))
            }
        }
    }

    /// An application head: a free function or a λ.
    fn head(&mut self, depth: usize, bound: &[Name]) -> Term {
        if depth <= 1 || self.rng.gen_bool(0.3) {
            return Term::var(self.pick(&FUNS));
        }
        let v = self.pick(&LAM_BINDERS);
        let mut inner = bound.to_vec();
        inner.push(v.into());
        if depth >= 3 && self.rng.gen_bool(0.25) {
            // An η-redex.
            let f = self.pick(&FUNS);
            return Term::lam(v, Term::var(f).app(Term::var(v)));
        }
        Term::lam(v, self.term(depth - 1, &inner))
    }

    /// Occasionally a bare λ at the top.
    pub fn top(&mut self) -> Term {
        if self.rng.gen_bool(0.1) {
            self.head(MAX_DEPTH, &[])
        } else {
            self.term(MAX_DEPTH, &[])
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }
}

pub fn corpus(seed: u64) -> Vec<Term> {
    let mut g = Gen::new(seed);
    (0..CORPUS_SIZE).map(|_| g.top()).collect()
}

pub fn depth(t: &Term) -> usize {
    let mut deepest = 0;
    map_children(t, &mut |c| {
        deepest = deepest.max(depth(c));
        c.clone()
    });
    deepest + 1
}

/// One β or η contraction at the root, if any applies.
pub fn beta_eta(t: &Term) -> Option<Term> {
    match t {
        Term::DimApp(head, r) => match &**head {
            Term::DimAbs(x, body) => Some(subst(body, x, r.clone())),
            _ => None,
        },
        Term::App(head, arg) => match &**head {
            Term::Lam(v, body) => Some(subst_var(body, v, arg)),
            _ => None,
        },
        Term::DimAbs(x, body) => match &**body {
            Term::DimApp(m, Dim::Name(y)) if y == x && !free_dims(m).contains(x) => Some((**m).clone()),
            _ => None,
        },
        Term::Lam(v, body) => match &**body {
            Term::App(m, arg) if matches!(&**arg, Term::Var(w) if w == v) && !free_vars(m).contains(v) => {
                Some((**m).clone())
            }
            _ => None,
        },
        _ => None,
    }
}

/// Contracts β/η redexes in a random order until none remain.
pub fn reduce_randomly(t: &Term, rng: &mut ChaCha8Rng) -> Term {
    let mut t = t.clone();
    loop {
        let n = count_sites(&t, &beta_eta);
        if n == 0 {
            return t;
        }
        t = rewrite_at(&t, &beta_eta, rng.gen_range(0..n));
    }
}

/// Renames every binder to a fresh `_k`, then substitutes naively.
pub fn rename_apart(t: &Term, next: &mut usize) -> Term {
    fn fresh(next: &mut usize) -> Name {
        *next += 1;
        format!("n{next}").into()
    }
    let rn_dim = |body: &Term, x: &Name, y: &Name| subst(body, x, Dim::Name(y.clone()));
    match t {
        Term::DimAbs(x, b) => {
            let y = fresh(next);
            Term::DimAbs(y.clone(), Rc::new(rename_apart(&rn_dim(b, x, &y), next)))
        }
        Term::Id {
            binder,
            family,
            left,
            right,
        } => {
            let y = fresh(next);
            Term::Id {
                binder: y.clone(),
                family: Rc::new(rename_apart(&rn_dim(family, binder, &y), next)),
                left: Rc::new(rename_apart(left, next)),
                right: Rc::new(rename_apart(right, next)),
            }
        }
        Term::Coe {
            binder,
            family,
            from,
            to,
            arg,
        } => {
            let y = fresh(next);
            Term::Coe {
                binder: y.clone(),
                family: Rc::new(rename_apart(&rn_dim(family, binder, &y), next)),
                from: from.clone(),
                to: to.clone(),
                arg: Rc::new(rename_apart(arg, next)),
            }
        }
        Term::HCom {
            ty,
            from,
            to,
            cap,
            tubes,
        } => Term::HCom {
            ty: Rc::new(rename_apart(ty, next)),
            from: from.clone(),
            to: to.clone(),
            cap: Rc::new(rename_apart(cap, next)),
            tubes: rename_tubes(tubes, next),
        },
        Term::Com {
            binder,
            family,
            from,
            to,
            cap,
            tubes,
        } => {
            let y = fresh(next);
            Term::Com {
                binder: y.clone(),
                family: Rc::new(rename_apart(&rn_dim(family, binder, &y), next)),
                from: from.clone(),
                to: to.clone(),
                cap: Rc::new(rename_apart(cap, next)),
                tubes: rename_tubes(tubes, next),
            }
        }
        Term::Pi(v, a, b) => {
            let w = fresh(next);
            let b = subst_var(b, v, &Term::Var(w.clone()));
            Term::Pi(w, Rc::new(rename_apart(a, next)), Rc::new(rename_apart(&b, next)))
        }
        Term::Lam(v, b) => {
            let w = fresh(next);
            let b = subst_var(b, v, &Term::Var(w.clone()));
            Term::Lam(w, Rc::new(rename_apart(&b, next)))
        }
        _ => map_children(t, &mut |c| rename_apart(c, next)),
    }
}

fn rename_tubes(tubes: &[Tube], next: &mut usize) -> Vec<Tube> {
    tubes
        .iter()
        .map(|tb| {
            *next += 1;
            let y: Name = format!("n{next}").into();
            let wall = subst(&tb.wall, &tb.binder, Dim::Name(y.clone()));
            Tube {
                extent: tb.extent.clone(),
                side: tb.side,
                binder: y,
                wall: Rc::new(rename_apart(&wall, next)),
            }
        })
        .collect()
}

/// Replaces free occurrences of `x`, assuming no binder can capture `r`.
pub fn naive_subst(t: &Term, x: &str, r: &Dim) -> Term {
    let sd = |d: &Dim| match d {
        Dim::Name(n) if &**n == x => r.clone(),
        _ => d.clone(),
    };
    let shadows = |b: &Name| &**b == x;
    match t {
        Term::DimAbs(b, _) if shadows(b) => t.clone(),
        Term::DimApp(m, d) => Term::DimApp(Rc::new(naive_subst(m, x, r)), sd(d)),
        Term::Id {
            binder,
            family,
            left,
            right,
        } => Term::Id {
            binder: binder.clone(),
            family: if shadows(binder) { family.clone() } else { Rc::new(naive_subst(family, x, r)) },
            left: Rc::new(naive_subst(left, x, r)),
            right: Rc::new(naive_subst(right, x, r)),
        },
        Term::Coe {
            binder,
            family,
            from,
            to,
            arg,
        } => Term::Coe {
            binder: binder.clone(),
            family: if shadows(binder) { family.clone() } else { Rc::new(naive_subst(family, x, r)) },
            from: sd(from),
            to: sd(to),
            arg: Rc::new(naive_subst(arg, x, r)),
        },
        Term::HCom {
            ty,
            from,
            to,
            cap,
            tubes,
        } => Term::HCom {
            ty: Rc::new(naive_subst(ty, x, r)),
            from: sd(from),
            to: sd(to),
            cap: Rc::new(naive_subst(cap, x, r)),
            tubes: naive_tubes(tubes, x, r),
        },
        Term::Com {
            binder,
            family,
            from,
            to,
            cap,
            tubes,
        } => Term::Com {
            binder: binder.clone(),
            family: if shadows(binder) { family.clone() } else { Rc::new(naive_subst(family, x, r)) },
            from: sd(from),
            to: sd(to),
            cap: Rc::new(naive_subst(cap, x, r)),
            tubes: naive_tubes(tubes, x, r),
        },
        _ => map_children(t, &mut |c| naive_subst(c, x, r)),
    }
}

fn naive_tubes(tubes: &[Tube], x: &str, r: &Dim) -> Vec<Tube> {
    tubes
        .iter()
        .map(|tb| Tube {
            extent: match &tb.extent {
                Dim::Name(n) if &**n == x => r.clone(),
                d => d.clone(),
            },
            side: tb.side,
            binder: tb.binder.clone(),
            wall: if &*tb.binder == x { tb.wall.clone() } else { Rc::new(naive_subst(&tb.wall, x, r)) },
        })
        .collect()
}

/// Outcomes for idempotence, βη confluence, the substitution laws, the α
/// equivalence laws and print/parse round trips, in that order.
pub fn run(seed: u64) -> Vec<(&'static str, Outcome)> {
    let terms = corpus(seed);
    let ctx = Context::new();
    let mut g = Gen::new(seed ^ 0x5eed);
    let mut idem = Outcome::default();
    let mut confluence = Outcome::default();
    let mut subst_law = Outcome::default();
    let mut alpha = Outcome::default();
    let mut round_trip = Outcome::default();

    for (k, t) in terms.iter().enumerate() {
        let n1 = normalize(&ctx, t).into_term();
        let n2 = normalize(&ctx, &n1).into_term();
        idem.record(alpha_eq(&n1, &n2), || format!("#{k} {t}: {n1} then {n2}"));

        let r1 = reduce_randomly(t, g.rng());
        let r2 = reduce_randomly(t, g.rng());
        let agree = alpha_eq(&r1, &r2) && alpha_eq(&normalize(&ctx, &r1).into_term(), &n1);
        confluence.record(agree, || format!("#{k} {t}: {r1} vs {r2}"));

        let x = g.pick(&DIM_NAMES);
        let y = g.pick(&DIM_NAMES);
        let (r, s) = (g.dim(), g.dim());
        // The law needs x ≠ y and x not free in s.
        if x != y && s != Dim::name(x) {
            let r_after = match &r {
                Dim::Name(n) if &**n == y => s.clone(),
                _ => r.clone(),
            };
            let lhs = subst(&subst(t, x, r.clone()), y, s.clone());
            let rhs = subst(&subst(t, y, s.clone()), x, r_after);
            subst_law.record(alpha_eq(&lhs, &rhs), || format!("#{k} {t} <{r}/{x}><{s}/{y}>: {lhs} vs {rhs}"));
        }
        let mut next = 0;
        let apart = rename_apart(t, &mut next);
        let oracle = naive_subst(&apart, x, &r);
        let direct = subst(t, x, r.clone());
        subst_law.record(alpha_eq(&direct, &oracle), || format!("#{k} {t} <{r}/{x}>: {direct} vs {oracle}"));

        let again = rename_apart(&apart, &mut next);
        let other = &terms[(k * 7 + 3) % terms.len()];
        alpha.record(alpha_eq(t, t), || format!("#{k} not reflexive: {t}"));
        alpha.record(alpha_eq(t, &apart) && alpha_eq(&apart, t), || format!("#{k} renaming: {t} vs {apart}"));
        alpha.record(alpha_eq(t, other) == alpha_eq(other, t), || format!("#{k} asymmetric: {t} vs {other}"));
        alpha.record(alpha_eq(&apart, &again) && alpha_eq(t, &again), || format!("#{k} not transitive: {t}"));

        let printed = t.to_string();
        let ok = parse_term(&printed).map(|p| alpha_eq(&p, t)).unwrap_or(false);
        round_trip.record(ok, || format!("#{k} {t} does not round-trip"));
    }
    vec![
        ("normalize idempotent", idem),
        ("beta/eta confluence", confluence),
        ("substitution laws", subst_law),
        ("alpha equivalence", alpha),
        ("print/parse round trip", round_trip),
    ]
}

