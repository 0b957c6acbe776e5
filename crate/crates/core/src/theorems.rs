//! Path induction, whiskering, Eckmann–Hilton and the distribution of the
//! groupoid operations over identification types.

use crate::dims::subst;
use crate::evaluator::{judge_equal, normalize};
use crate::groupoid::{comp_term, inv_term, label, BuildResult, CatalogEntry, CheckedConstruction, GroupoidError, Workspace};
use crate::syntax::{Dim, Side, Term, Tube};

/// One use of based path induction: `J a P target p u : P target p`.
#[derive(Clone, Debug)]
pub struct JInstance {
    /// The degenerate type of the path.
    pub family: Term,
    pub base: Term,
    /// A term of type `Pi (w : A) -> Pi (g : Id (x. A) base w) -> U`.
    pub motive: Term,
    pub target: Term,
    pub path: Term,
    /// A term of type `motive base refl_base`.
    pub seed: Term,
}

impl Workspace {
    /// The square `is_refl_p : Id (x. Id (y. A) a (p @ x)) refl_a p` with
    /// faces `y=0 ↦ a`, `y=1 ↦ p@x`, `x=0 ↦ a`, `x=1 ↦ p@y`, capped by the
    /// filler of `refl_a • p` and closed off by the left unit.
    pub fn is_refl(&mut self, p: &Term) -> BuildResult {
        let parts = self.id_parts(p)?;
        let ty = parts.degenerate_family()?;
        let a = parts.left.clone();
        let refl_a = self.refl(&a, "x", &ty)?.var();
        let comp = self.comp(&refl_a, p)?.var();
        let lu = self.lu(p)?.var();
        let lu_inv = self.inv(&lu)?.var();
        let name = self.derived_name("is_refl", &[p]);
        let cap = self.filler(&comp.at_name("x"), "y")?;
        let term = Term::dim_abs(
            "x",
            Term::dim_abs(
                "y",
                Term::hcom(
                    ty.clone(),
                    Dim::Zero,
                    Dim::One,
                    cap,
                    vec![
                        Tube::new("x", Side::Zero, "z", a.clone()),
                        Tube::new("x", Side::One, "z", p.clone().at_name("y")),
                        Tube::new("y", Side::Zero, "z", a.clone()),
                        Tube::new("y", Side::One, "z", lu_inv.at_name("z").at_name("x")),
                    ],
                ),
            ),
        );
        let ty = Term::id("x", Term::id("y", ty, a, p.clone().at_name("x")), refl_a, p.clone());
        self.define(&name, term, ty)
    }

    /// Based path induction: coerces the seed along `x. P (p @ x) (is_refl_p @ x)`.
    pub fn j_eliminate(&mut self, inst: &JInstance) -> BuildResult {
        let parts = self.id_parts(&inst.path)?;
        for (side, expected, actual) in [
            (Side::Zero, &inst.base, &parts.left),
            (Side::One, &inst.target, &parts.right),
        ] {
            if !judge_equal(self.context(), expected, actual) {
                return Err(GroupoidError::EndpointCollapse {
                    dim: parts.binder.clone(),
                    side,
                    expected: expected.clone(),
                    actual: actual.clone(),
                });
            }
        }
        let refl_a = self.refl(&inst.base, "x", &inst.family)?.var();
        let is_refl = self.is_refl(&inst.path)?.var();
        let line = inst
            .motive
            .clone()
            .app(inst.path.clone().at_name("x"))
            .app(is_refl.at_name("x"));
        let ends = [
            (Side::Zero, inst.motive.clone().app(inst.base.clone()).app(refl_a)),
            (
                Side::One,
                inst.motive.clone().app(inst.target.clone()).app(inst.path.clone()),
            ),
        ];
        for (side, expected) in &ends {
            let actual = normalize(self.context(), &subst(&line, "x", (*side).into())).into_term();
            if !judge_equal(self.context(), &actual, expected) {
                return Err(GroupoidError::EndpointCollapse {
                    dim: "x".into(),
                    side: *side,
                    expected: expected.clone(),
                    actual,
                });
            }
        }
        let name = self.derived_name("J", &[&inst.motive, &inst.path]);
        let term = Term::coe("x", line, Dim::Zero, Dim::One, inst.seed.clone());
        self.define(&name, term, ends[1].1.clone())
    }

    /// Right whiskering `alpha • r : p • r = q • r` for
    /// `alpha : Id (y. Id (x. A) a b) p q` and `r : Id (x. A) b c`.
    pub fn whisker_right(&mut self, alpha: &Term, r: &Term) -> BuildResult {
        let sq = self.globular(alpha)?;
        let rp = self.id_parts(r)?;
        let refl_a = self.refl(&sq.a, "x", &sq.ty)?.var();
        let top = self.comp(&sq.p, r)?.var();
        let bottom = self.comp(&sq.q, r)?.var();
        let name = self.derived_name("whisker_right", &[alpha, r]);
        let term = Term::dim_abs(
            "y",
            Term::dim_abs(
                "x",
                Term::hcom(
                    sq.ty.clone(),
                    Dim::Zero,
                    Dim::One,
                    alpha.clone().at_name("y").at_name("x"),
                    vec![
                        Tube::new("x", Side::Zero, "z", refl_a.at_name("z")),
                        Tube::new("x", Side::One, "z", r.clone().at_name("z")),
                    ],
                ),
            ),
        );
        let ty = Term::id("y", Term::id("x", sq.ty, sq.a, rp.right), top, bottom);
        self.define(&name, term, ty)
    }

    /// Left whiskering `q • beta : q • r = q • s` for `q : Id (x. A) c a`
    /// and `beta : Id (y. Id (x. A) a b) r s`. The horizontal faces are
    /// pinned to the composition fillers.
    pub fn whisker_left(&mut self, q: &Term, beta: &Term) -> BuildResult {
        let sq = self.globular(beta)?;
        let qp = self.id_parts(q)?;
        let refl_c = self.refl(&qp.left, "x", &sq.ty)?.var();
        let top = self.comp(q, &sq.p)?.var();
        let bottom = self.comp(q, &sq.q)?.var();
        let name = self.derived_name("whisker_left", &[q, beta]);
        let top_fill = self.filler(&top.clone().at_name("x"), "z")?;
        let bottom_fill = self.filler(&bottom.clone().at_name("x"), "z")?;
        let term = Term::dim_abs(
            "y",
            Term::dim_abs(
                "x",
                Term::hcom(
                    sq.ty.clone(),
                    Dim::Zero,
                    Dim::One,
                    q.clone().at_name("x"),
                    vec![
                        Tube::new("x", Side::Zero, "z", refl_c.at_name("z")),
                        Tube::new("x", Side::One, "z", beta.clone().at_name("y").at_name("z")),
                        Tube::new("y", Side::Zero, "z", top_fill),
                        Tube::new("y", Side::One, "z", bottom_fill),
                    ],
                ),
            ),
        );
        let ty = Term::id("y", Term::id("x", sq.ty, qp.left, sq.b), top, bottom);
        self.define(&name, term, ty)
    }

    /// Eckmann–Hilton for `alpha, beta : Id (y. Id (x. A) a a) refl_a refl_a`:
    /// `alpha • beta = beta • alpha`.
    ///
    /// Right whiskering by `refl_a` is the identity on the nose, so only the
    /// left unit `refl_a • beta = beta` is needed. It is the left unit of the
    /// transposed square. Whiskering commutativity is path induction on
    /// `alpha`, seeded by the left unit of `refl_a • beta`.
    pub fn eckmann_hilton(&mut self, alpha: &Term, beta: &Term) -> BuildResult {
        let sq = self.globular(alpha)?;
        let (ty, a) = (sq.ty.clone(), sq.a.clone());
        let loops = Term::id("x", ty.clone(), a.clone(), a.clone());
        let refl_a = self.refl(&a, "x", &ty)?.var();
        let rr = self.comp(&refl_a, &refl_a)?.var();
        let refl_rr = self.refl(&rr, "y", &loops)?.var();
        let (sa, sb) = (stem(alpha), stem(beta));

        let whiskered = self.whisker_left(&refl_a, beta)?.var();
        let transposed = self
            .define(
                &format!("transpose_{sb}"),
                Term::dim_abs("x", Term::dim_abs("y", beta.clone().at_name("y").at_name("x"))),
                Term::id("x", Term::id("y", ty.clone(), a.clone(), a.clone()), refl_a.clone(), refl_a.clone()),
            )?
            .var();
        let lu_t = self.lu(&transposed)?.var();
        let unit = self
            .define(
                &format!("whisker_unit_{sb}"),
                Term::dim_abs(
                    "z",
                    Term::dim_abs(
                        "y",
                        Term::dim_abs("x", lu_t.at_name("z").at_name("x").at_name("y")),
                    ),
                ),
                Term::id(
                    "z",
                    Term::id("y", loops.clone(), refl_a.clone(), refl_a.clone()),
                    beta.clone(),
                    whiskered.clone(),
                ),
            )?
            .var();

        // whiskering commutativity, by induction on alpha
        let var = Term::var;
        let (w, g) = (var("w"), var("g"));
        let hcom = |cap: Term, tubes: Vec<Tube>| Term::hcom(ty.clone(), Dim::Zero, Dim::One, cap, tubes);
        let w_r_at = |x: &str| {
            hcom(
                w.clone().at_name(x),
                vec![
                    Tube::new(x, Side::Zero, "v", refl_a.clone().at_name("v")),
                    Tube::new(x, Side::One, "v", refl_a.clone().at_name("v")),
                ],
            )
        };
        let w_r = Term::dim_abs("x", w_r_at("x"));
        let w_r_fill = match w_r_at("x") {
            Term::HCom { ty, from, cap, tubes, .. } => Term::HCom {
                ty,
                from,
                to: Dim::name("z"),
                cap,
                tubes,
            },
            _ => unreachable!(),
        };
        let g_r = Term::dim_abs(
            "y",
            Term::dim_abs(
                "x",
                hcom(
                    g.clone().at_name("y").at_name("x"),
                    vec![
                        Tube::new("x", Side::Zero, "z", refl_a.clone().at_name("z")),
                        Tube::new("x", Side::One, "z", refl_a.clone().at_name("z")),
                    ],
                ),
            ),
        );
        let w_beta = Term::dim_abs(
            "y",
            Term::dim_abs(
                "x",
                hcom(
                    w.clone().at_name("x"),
                    vec![
                        Tube::new("x", Side::Zero, "z", refl_a.clone().at_name("z")),
                        Tube::new("x", Side::One, "z", beta.clone().at_name("y").at_name("z")),
                        Tube::new("y", Side::Zero, "z", w_r_fill.clone()),
                        Tube::new("y", Side::One, "z", w_r_fill),
                    ],
                ),
            ),
        );
        let comp2 = |s: Term, t: Term| {
            Term::dim_abs(
                "y",
                Term::hcom(
                    loops.clone(),
                    Dim::Zero,
                    Dim::One,
                    s.at_name("y"),
                    vec![
                        Tube::new("y", Side::Zero, "z", refl_rr.clone().at_name("z")),
                        Tube::new("y", Side::One, "z", t.at_name("z")),
                    ],
                ),
            )
        };
        let body = Term::id(
            "z",
            Term::id("y", loops.clone(), refl_a.clone(), w_r),
            comp2(g_r.clone(), w_beta),
            comp2(whiskered.clone(), g_r),
        );
        let motive = self
            .define(
                &format!("motive_whisker_{sb}"),
                Term::lam("w", Term::lam("g", body)),
                motive_type(&loops, &refl_a),
            )?
            .var();
        let lu_w = self.lu(&whiskered)?.var();
        let seed = self.inv(&lu_w)?.var();
        let commute = self
            .j_eliminate(&JInstance {
                family: loops.clone(),
                base: refl_a.clone(),
                motive,
                target: refl_a.clone(),
                path: alpha.clone(),
                seed,
            })?
            .var();

        let left = self.whisker_left(alpha, &unit)?.var();
        let right = self.whisker_right(&unit, alpha)?.var();
        let right_inv = self.inv(&right)?.var();
        let first = self.comp(&left, &commute)?.var();
        let whole = self.comp(&first, &right_inv)?.var();
        let ab = self.comp(alpha, beta)?.var();
        let ba = self.comp(beta, alpha)?.var();
        let name = format!("eckmann_hilton_{sa}_{sb}");
        self.define(
            &name,
            whole,
            Term::id("z", Term::id("y", loops, refl_a.clone(), refl_a), ab, ba),
        )
    }

    /// The line of identification types `<x> Id (y. F) (p @ x) (q @ x)`,
    /// where `F` may mention `x`.
    pub fn id_line(&mut self, name: &str, family: &Term, p: &Term, q: &Term) -> BuildResult {
        let pp = self.id_parts(p)?;
        let qp = self.id_parts(q)?;
        let end = |ws: &Self, side: Side, l: &Term, r: &Term| {
            let f = normalize(ws.context(), &subst(family, "x", side.into())).into_term();
            Term::id("y", f, l.clone(), r.clone())
        };
        let ty = Term::id(
            "x",
            Term::Univ,
            end(self, Side::Zero, &pp.left, &qp.left),
            end(self, Side::One, &pp.right, &qp.right),
        );
        self.define(name, id_line_term(family, p, q), ty)
    }

    /// Inversion distributes over identification types:
    /// `(p@x =_{y.A} q@x)⁻¹ = (p⁻¹@x =_{y.A⁻¹} q⁻¹@x)` for a degenerate `A`.
    ///
    /// Path induction on `p` and then `q` reduces it to the refl case, the
    /// composite of the squares `I` and `U` built from inversion units.
    pub fn id_inv_distrib(&mut self, p: &Term, q: &Term) -> BuildResult {
        let pp = self.id_parts(p)?;
        let qp = self.id_parts(q)?;
        let ty = pp.degenerate_family()?;
        let (a, c) = (pp.left.clone(), qp.left.clone());
        let (sp, sq) = (stem(p), stem(q));
        let refl_ty = self.refl(&ty, "x", &Term::Univ)?.var();
        let ty_inv = self.inv(&refl_ty)?.var();
        let refl_a = self.refl(&a, "x", &ty)?.var();
        let refl_c = self.refl(&c, "x", &ty)?.var();
        let i_ac = Term::id("y", ty.clone(), a.clone(), c.clone());
        let refl_iac = self.refl(&i_ac, "x", &Term::Univ)?.var();
        let inv_fam = ty_inv.clone().at_name("x");

        // the refl case
        let (sa, sc) = (stem(&a), stem(&c));
        let l0 = self.id_line(&format!("id_line_{sa}_{sc}"), &ty, &refl_a, &refl_c)?.var();
        let inv_ra = self.inv(&refl_a)?.var();
        let inv_rc = self.inv(&refl_c)?.var();
        let r0 = self
            .id_line(&format!("id_line_inv_{sa}_{sc}"), &inv_fam, &inv_ra, &inv_rc)?
            .var();
        let iu_ty = self.iu(&ty, &Term::Univ)?.var();
        let iu_a = self.iu(&a, &ty)?.var();
        let iu_c = self.iu(&c, &ty)?.var();
        let u_sq = self
            .define(
                &format!("id_inv_U_{sa}_{sc}"),
                Term::dim_abs(
                    "y",
                    Term::dim_abs(
                        "x",
                        Term::id(
                            "w",
                            iu_ty.at_name("y").at_name("x"),
                            iu_a.at_name("y").at_name("x"),
                            iu_c.at_name("y").at_name("x"),
                        ),
                    ),
                ),
                Term::id("y", Term::id("x", Term::Univ, i_ac.clone(), i_ac.clone()), l0, r0),
            )?
            .var();
        let iu_iac = self.iu(&i_ac, &Term::Univ)?.var();
        let i_sq = self.inv(&iu_iac)?.var();
        let base = self.comp(&i_sq, &u_sq)?.var();

        let stmt = |p: &Term, q: &Term, b: &Term, d: &Term| {
            let line = id_line_term(&ty, p, q);
            Term::id(
                "z",
                Term::id(
                    "x",
                    Term::Univ,
                    Term::id("y", ty.clone(), b.clone(), d.clone()),
                    i_ac.clone(),
                ),
                inv_term(&Term::Univ, &refl_iac, &line),
                id_line_term(&inv_fam, &inv_term(&ty, &refl_a, p), &inv_term(&ty, &refl_c, q)),
            )
        };
        let (w, g) = (Term::var("w"), Term::var("g"));
        let lam = |body: Term| Term::lam("w", Term::lam("g", body));
        let motive_q = self
            .define(
                &format!("motive_id_inv_{sq}"),
                lam(stmt(&refl_a, &g, &a, &w)),
                motive_type(&ty, &c),
            )?
            .var();
        let at_q = self
            .j_eliminate(&JInstance {
                family: ty.clone(),
                base: c.clone(),
                motive: motive_q,
                target: qp.right.clone(),
                path: q.clone(),
                seed: base,
            })?
            .var();
        let motive_p = self
            .define(
                &format!("motive_id_inv_{sp}_{sq}"),
                lam(stmt(&g, q, &w, &qp.right)),
                motive_type(&ty, &a),
            )?
            .var();
        let at_pq = self
            .j_eliminate(&JInstance {
                family: ty.clone(),
                base: a.clone(),
                motive: motive_p,
                target: pp.right.clone(),
                path: p.clone(),
                seed: at_q,
            })?
            .var();

        let line = self.id_line(&format!("id_line_{sp}_{sq}"), &ty, p, q)?.var();
        let line_inv = self.inv(&line)?.var();
        let inv_p = self.inv(p)?.var();
        let inv_q = self.inv(q)?.var();
        let rhs = self
            .id_line(&format!("id_line_inv_{sp}_{sq}"), &inv_fam, &inv_p, &inv_q)?
            .var();
        let ty = Term::id(
            "z",
            Term::id(
                "x",
                Term::Univ,
                Term::id("y", ty.clone(), pp.right.clone(), qp.right.clone()),
                i_ac,
            ),
            line_inv,
            rhs,
        );
        self.define(&format!("id_inv_distrib_{sp}_{sq}"), at_pq, ty)
    }

    /// Heterogeneous square swap: the x-line of types
    /// `Id (y. id_{r,s} @ x @ y) q p` from `Id (y. (r@y =_{x.A} s@y)⁻¹) q p`
    /// to `Id (y. r⁻¹@y =_{x.A⁻¹} s⁻¹@y) q p`.
    pub fn het_square_swap(&mut self, r: &Term, s: &Term, p: &Term, q: &Term) -> BuildResult {
        let dist = self.id_inv_distrib(r, s)?;
        let parts = self.id_parts_of_type(&dist.claimed_type)?;
        let at = |line: &Term| Term::id("y", line.clone().at_name("y"), q.clone(), p.clone());
        let name = format!("het_square_swap_{}_{}", stem(r), stem(s));
        self.define(
            &name,
            Term::dim_abs(
                "x",
                Term::id("y", dist.var().at_name("x").at_name("y"), q.clone(), p.clone()),
            ),
            Term::id("x", Term::Univ, at(&parts.left), at(&parts.right)),
        )
    }

    /// Composition distributes over identification types:
    /// `(p@x =_{y.A} q@x) • (r@x =_{y.A} s@x) = ((p•r)@x =_{y.A•A} (q•s)@x)`
    /// for a degenerate `A`.
    ///
    /// Path induction on `r`, `s`, `p` and `q` in turn reduces it to the
    /// all-refl square, built from composition units.
    pub fn id_comp_distrib(&mut self, p: &Term, q: &Term, r: &Term, s: &Term) -> BuildResult {
        let [pp, qp, rp, sp] = [p, q, r, s].map(|t| self.id_parts(t));
        let (pp, qp, rp, sp) = (pp?, qp?, rp?, sp?);
        let ty = pp.degenerate_family()?;
        let (a, c) = (pp.left.clone(), qp.left.clone());
        let (b, d) = (pp.right.clone(), qp.right.clone());
        let names = [p, q, r, s].map(stem);
        let refl_ty = self.refl(&ty, "x", &Term::Univ)?.var();
        let ty_comp = self.comp(&refl_ty, &refl_ty)?.var();
        let comp_fam = ty_comp.clone().at_name("x");
        let refl_a = self.refl(&a, "x", &ty)?.var();
        let refl_c = self.refl(&c, "x", &ty)?.var();
        let i_ac = Term::id("y", ty.clone(), a.clone(), c.clone());
        let refl_iac = self.refl(&i_ac, "x", &Term::Univ)?.var();

        // the all-refl case
        let (sa, sc) = (stem(&a), stem(&c));
        let l0 = self.id_line(&format!("id_line_{sa}_{sc}"), &ty, &refl_a, &refl_c)?.var();
        let aa = self.comp(&refl_a, &refl_a)?.var();
        let cc = self.comp(&refl_c, &refl_c)?.var();
        let r0 = self
            .id_line(&format!("id_line_comp_{sa}_{sc}"), &comp_fam, &aa, &cc)?
            .var();
        let cu_ty = self.cu(&ty, &Term::Univ)?.var();
        let cu_a = self.cu(&a, &ty)?.var();
        let cu_c = self.cu(&c, &ty)?.var();
        let u_sq = self
            .define(
                &format!("id_comp_U_{sa}_{sc}"),
                Term::dim_abs(
                    "z",
                    Term::dim_abs(
                        "x",
                        Term::id(
                            "w",
                            cu_ty.at_name("z").at_name("x"),
                            cu_a.at_name("z").at_name("x"),
                            cu_c.at_name("z").at_name("x"),
                        ),
                    ),
                ),
                Term::id("z", Term::id("x", Term::Univ, i_ac.clone(), i_ac.clone()), l0, r0),
            )?
            .var();
        let cu_iac = self.cu(&i_ac, &Term::Univ)?.var();
        let i_sq = self.inv(&cu_iac)?.var();
        let base = self.comp(&i_sq, &u_sq)?.var();

        let stmt = |p: &Term, q: &Term, r: &Term, s: &Term, e: &Term, f: &Term| {
            Term::id(
                "z",
                Term::id(
                    "x",
                    Term::Univ,
                    i_ac.clone(),
                    Term::id("y", ty.clone(), e.clone(), f.clone()),
                ),
                comp_term(&Term::Univ, &refl_iac, &id_line_term(&ty, p, q), &id_line_term(&ty, r, s)),
                id_line_term(
                    &comp_fam,
                    &comp_term(&ty, &refl_a, p, r),
                    &comp_term(&ty, &refl_c, q, s),
                ),
            )
        };
        let (w, g) = (Term::var("w"), Term::var("g"));
        let refl_w = Term::dim_abs("x", w.clone());
        let lam = |body: Term| Term::lam("w", Term::lam("g", body));
        let refl_b = self.refl(&b, "x", &ty)?.var();
        let refl_d = self.refl(&d, "x", &ty)?.var();
        let steps = [
            // (path, base, target, motive body)
            (q, &qp, &c, stmt(&refl_a, &g, &refl_a, &refl_w, &a, &w)),
            (p, &pp, &a, stmt(&g, q, &refl_w, &refl_d, &w, &d)),
            (s, &sp, &d, stmt(p, q, &refl_b, &g, &b, &w)),
            (r, &rp, &b, stmt(p, q, &g, s, &w, &sp.right)),
        ];
        let mut seed = base;
        let mut done = String::new();
        for (path, parts, base_pt, body) in steps {
            if !judge_equal(self.context(), &parts.left, base_pt) {
                return Err(GroupoidError::MiddleEndpointMismatch {
                    left: parts.left.clone(),
                    right: base_pt.clone(),
                });
            }
            done.push('_');
            done.push_str(&stem(path));
            let motive = self
                .define(
                    &format!("motive_id_comp{done}"),
                    lam(body),
                    motive_type(&ty, base_pt),
                )?
                .var();
            seed = self
                .j_eliminate(&JInstance {
                    family: ty.clone(),
                    base: base_pt.clone(),
                    motive,
                    target: parts.right.clone(),
                    path: path.clone(),
                    seed,
                })?
                .var();
        }

        let [np, nq, nr, ns] = &names;
        let left = self.id_line(&format!("id_line_{np}_{nq}"), &ty, p, q)?.var();
        let right = self.id_line(&format!("id_line_{nr}_{ns}"), &ty, r, s)?.var();
        let lhs = self.comp(&left, &right)?.var();
        let pr = self.comp(p, r)?.var();
        let qs = self.comp(q, s)?.var();
        let rhs = self
            .id_line(&format!("id_line_comp_{np}_{nr}_{nq}_{ns}"), &comp_fam, &pr, &qs)?
            .var();
        let ty = Term::id(
            "z",
            Term::id(
                "x",
                Term::Univ,
                i_ac,
                Term::id("y", ty.clone(), rp.right.clone(), sp.right.clone()),
            ),
            lhs,
            rhs,
        );
        self.define(&format!("id_comp_distrib_{np}_{nq}_{nr}_{ns}"), seed, ty)
    }

    /// Heterogeneous square gluing: the x-line of types
    /// `Id (y. id_comp @ x @ y) p q` from `Id (y. ((r@y = s@y) • (t@y = u@y))) p q`
    /// to `Id (y. (r•t)@y =_{x.A•A} (s•u)@y) p q`.
    pub fn het_square_glue(
        &mut self,
        lines: [&Term; 4],
        p: &Term,
        q: &Term,
    ) -> BuildResult {
        let [r, s, t, u] = lines;
        let dist = self.id_comp_distrib(r, s, t, u)?;
        let parts = self.id_parts_of_type(&dist.claimed_type)?;
        let at = |line: &Term| Term::id("y", line.clone().at_name("y"), p.clone(), q.clone());
        let name = format!("het_square_glue_{}_{}_{}_{}", stem(r), stem(s), stem(t), stem(u));
        self.define(
            &name,
            Term::dim_abs(
                "x",
                Term::id("y", dist.var().at_name("x").at_name("y"), p.clone(), q.clone()),
            ),
            Term::id("x", Term::Univ, at(&parts.left), at(&parts.right)),
        )
    }

    /// The glued square: the heterogeneous composite of `alpha` and `beta`
    /// carried across `glue : Id (x. U) X Y` onto the composite type line.
    pub fn glue_squares(&mut self, glue: &Term, alpha: &Term, beta: &Term) -> BuildResult {
        let glued = self.het_comp(alpha, beta)?.var();
        let parts = self.id_parts(glue)?;
        let name = format!("glue_{}_{}", stem(alpha), stem(beta));
        self.define(
            &name,
            Term::coe("x", glue.clone().at_name("x"), Dim::Zero, Dim::One, glued),
            parts.right,
        )
    }

    /// Inversion applied along the outer direction of a square of lines:
    /// `<z> (D @ z)⁻¹`.
    pub fn ap_inv(&mut self, square: &Term) -> BuildResult {
        let outer = self.id_parts(square)?;
        let inner = self.id_parts_of_type(&outer.family)?;
        let ty = inner.degenerate_family()?;
        let refl_l = self.refl(&inner.left, "x", &ty)?.var();
        let left = self.inv(&outer.left)?.var();
        let right = self.inv(&outer.right)?.var();
        let name = self.derived_name("ap_inv", &[square]);
        let term = Term::dim_abs("z", inv_term(&ty, &refl_l, &square.clone().at_name("z")));
        let ty = Term::id("z", Term::id("x", ty, inner.right, inner.left), left, right);
        self.define(&name, term, ty)
    }

    /// The six groupoid laws for lines of identification types, where
    /// `lines[0] = p@x =_{y.A} q@x` and `dist` is its inversion distribution.
    pub fn id_groupoid_laws(&mut self, dist: &Term, lines: [&Term; 3]) -> Result<Vec<CheckedConstruction>, GroupoidError> {
        let [l1, l2, l3] = lines;
        let dp = self.id_parts(dist)?;
        let lp = self.id_parts(l1)?;
        let r = dp.right.clone();
        let (i0, i1) = (lp.left.clone(), lp.right.clone());
        let sq = |l: &Term, r: &Term, a: &Term, b: &Term| {
            Term::id("z", Term::id("x", Term::Univ, a.clone(), b.clone()), l.clone(), r.clone())
        };
        let mut out = Vec::new();

        // (i) (R)⁻¹ = L
        let ap = self.ap_inv(dist)?.var();
        let ap_inv = self.inv(&ap)?.var();
        let invab = self.inversability(l1)?.var();
        let invab_inv = self.inv(&invab)?.var();
        let law = self.comp(&ap_inv, &invab_inv)?.var();
        let r_inv = self.inv(&r)?.var();
        out.push(self.define("id_groupoid_law_i", law, sq(&r_inv, l1, &i0, &i1))?);

        // (ii) L • R = refl
        let wl = self.whisker_left(l1, dist)?.var();
        let wl_inv = self.inv(&wl)?.var();
        let rc = self.rc(l1)?.var();
        let rc_inv = self.inv(&rc)?.var();
        let law = self.comp(&wl_inv, &rc_inv)?.var();
        let lr = self.comp(l1, &r)?.var();
        let refl0 = self.refl(&i0, "x", &Term::Univ)?.var();
        out.push(self.define("id_groupoid_law_ii", law, sq(&lr, &refl0, &i0, &i0))?);

        // (iii) R • L = refl
        let wr = self.whisker_right(dist, l1)?.var();
        let wr_inv = self.inv(&wr)?.var();
        let lc = self.lc(l1)?.var();
        let lc_inv = self.inv(&lc)?.var();
        let law = self.comp(&wr_inv, &lc_inv)?.var();
        let rl = self.comp(&r, l1)?.var();
        let refl1 = self.refl(&i1, "x", &Term::Univ)?.var();
        out.push(self.define("id_groupoid_law_iii", law, sq(&rl, &refl1, &i1, &i1))?);

        // (iv) L • refl = L
        let ru = self.ru(l1)?.var();
        let law = self.inv(&ru)?.var();
        let l_refl = self.comp(l1, &refl1)?.var();
        out.push(self.define("id_groupoid_law_iv", law, sq(&l_refl, l1, &i0, &i1))?);

        // (v) refl • L = L
        let lu = self.lu(l1)?.var();
        let law = self.inv(&lu)?.var();
        let refl_l = self.comp(&refl0, l1)?.var();
        out.push(self.define("id_groupoid_law_v", law, sq(&refl_l, l1, &i0, &i1))?);

        // (vi) associativity
        let assoc = self.assoc(l1, l2, l3)?;
        let ty = assoc.claimed_type.clone();
        out.push(self.define("id_groupoid_law_vi", assoc.var(), ty)?);
        Ok(out)
    }

    /// The boundary of a globular square `Id (y. Id (x. A) a b) p q`.
    fn globular(&self, alpha: &Term) -> Result<Globular, GroupoidError> {
        let outer = self.id_parts(alpha)?;
        let inner = self.id_parts_of_type(&outer.family)?;
        let ty = inner.degenerate_family()?;
        for end in [&inner.left, &inner.right] {
            if !crate::dims::is_degenerate_in(end, &outer.binder) {
                return Err(GroupoidError::NonDegenerate {
                    ty: outer.family.clone(),
                    dim: outer.binder.clone(),
                });
            }
        }
        Ok(Globular {
            ty,
            a: inner.left,
            b: inner.right,
            p: outer.left,
            q: outer.right,
        })
    }
}

struct Globular {
    ty: Term,
    a: Term,
    b: Term,
    p: Term,
    q: Term,
}

/// `Pi (w : A) -> Pi (g : Id (x. A) a w) -> U`, the type of motives based at `a`.
pub fn motive_type(ty: &Term, a: &Term) -> Term {
    Term::pi(
        "w",
        ty.clone(),
        Term::pi("g", Term::id("x", ty.clone(), a.clone(), Term::var("w")), Term::Univ),
    )
}

/// The five motives J is exercised on, with their seeds, over the ambient
/// `A` and `a`.
fn j_families(ws: &mut Workspace) -> Result<Vec<(Term, Term)>, GroupoidError> {
    let var = Term::var;
    let (ty, a) = (var("A"), var("a"));
    let refl_a = ws.refl(&a, "x", &ty)?.var();
    let refl_refl_a = ws.refl(&refl_a, "y", &Term::id("x", ty.clone(), a.clone(), a.clone()))?.var();
    let mty = motive_type(&ty, &a);
    ws.point("P", mty.clone())?;
    ws.point("seed", var("P").app(a.clone()).app(refl_a.clone()))?;
    let lam = |body: Term| Term::lam("w", Term::lam("g", body));
    let bodies = [
        ("motive_const", var("B"), var("e")),
        ("motive_from", Term::id("x", ty.clone(), a.clone(), var("w")), refl_a.clone()),
        ("motive_to", Term::id("x", ty.clone(), var("w"), a.clone()), refl_a.clone()),
        (
            "motive_loop",
            Term::id("y", Term::id("x", ty.clone(), a.clone(), var("w")), var("g"), var("g")),
            refl_refl_a,
        ),
    ];
    let mut out = vec![(var("P"), var("seed"))];
    for (name, body, seed) in bodies {
        let m = ws.define(name, lam(body), mty.clone())?.var();
        out.push((m, seed));
    }
    Ok(out)
}

/// `<x> Id (y. F) (p @ x) (q @ x)`.
pub fn id_line_term(family: &Term, p: &Term, q: &Term) -> Term {
    Term::dim_abs("x", Term::id("y", family.clone(), p.clone().at_name("x"), q.clone().at_name("x")))
}

fn stem(t: &Term) -> String {
    label(t).unwrap_or_else(|| t.to_string())
}

/// Declares the points the theorem catalog adds to the ambient context.
pub fn theorem_ambient(ws: &mut Workspace) -> Result<(), GroupoidError> {
    let var = Term::var;
    let (ty, a) = (var("A"), var("a"));
    ws.comment("theorem context");
    ws.point("v", Term::id("x", ty.clone(), var("d"), a.clone()))?;
    ws.point(
        "gamma",
        Term::id(
            "y",
            Term::id("x", ty.clone(), var("r").at_name("y"), var("v").at_name("y")),
            var("r"),
            var("v"),
        ),
    )?;
    let refl_a = ws.refl(&a, "x", &ty)?.var();
    let loops = Term::id("y", Term::id("x", ty.clone(), a.clone(), a.clone()), refl_a.clone(), refl_a);
    ws.point("alpha2", loops.clone())?;
    ws.point("beta2", loops)?;
    Ok(())
}

/// Builds the theorem catalog into `ws`, which must hold the groupoid
/// catalog and [`theorem_ambient`].
pub fn build_theorems(ws: &mut Workspace) -> Result<Vec<CatalogEntry>, GroupoidError> {
    let var = Term::var;
    let (ty, a, b) = (var("A"), var("a"), var("b"));
    let (p, r, s, t, u, v) = (var("p"), var("r"), var("s"), var("t"), var("u"), var("v"));
    let mut out = Vec::new();
    let entry = |key, lemma, cs: Vec<&CheckedConstruction>| {
        CatalogEntry::new(key, lemma, cs.into_iter().map(|c| c.name.clone()).collect())
    };

    ws.comment("path induction");
    let is_refl = ws.is_refl(&p)?;
    out.push(entry("is_refl", "Path induction (is_refl)", vec![&is_refl]));
    ws.comment("J on five motives, at p and at refl_a");
    let refl_a = ws.refl(&a, "x", &ty)?.var();
    let mut js = Vec::new();
    for (motive, seed) in j_families(ws)? {
        for (path, target) in [(p.clone(), b.clone()), (refl_a.clone(), a.clone())] {
            js.push(ws.j_eliminate(&JInstance {
                family: ty.clone(),
                base: a.clone(),
                motive: motive.clone(),
                target,
                path,
                seed: seed.clone(),
            })?);
        }
    }
    out.push(entry("j_eliminate", "Path induction (J)", js.iter().collect()));

    ws.comment("whiskering and Eckmann-Hilton");
    let (alpha2, beta2) = (var("alpha2"), var("beta2"));
    let wr = ws.whisker_right(&alpha2, &p)?;
    let wl = ws.whisker_left(&v, &alpha2)?;
    out.push(entry("whisker", "Whiskering", vec![&wr, &wl]));
    let eh = ws.eckmann_hilton(&alpha2, &beta2)?;
    out.push(entry("eckmann_hilton", "Eckmann-Hilton", vec![&eh]));

    ws.comment("distribution over identification types");
    let inv_d = ws.id_inv_distrib(&p, &u)?;
    out.push(entry("id_inv_distrib", "Identification type inversion distribution", vec![&inv_d]));
    let swap = ws.het_square_swap(&s, &t, &p, &u)?;
    out.push(entry("het_square_swap", "Heterogeneous square swap", vec![&swap]));
    let comp_d = ws.id_comp_distrib(&p, &u, &t, &v)?;
    out.push(entry("id_comp_distrib", "Identification type composition distribution", vec![&comp_d]));
    let glue = ws.het_square_glue([&s, &t, &r, &v], &p, &v)?;
    let glued = ws.glue_squares(&glue.var(), &var("alpha"), &var("gamma"))?;
    out.push(entry("het_square_glue", "Heterogeneous square gluing", vec![&glue, &glued]));

    ws.comment("groupoid laws for identification types");
    let l1 = var(&format!("id_line_{}_{}", "p", "u"));
    let l2 = ws.id_line("id_line_t_v", &ty, &t, &v)?.var();
    let l3 = ws.id_line("id_line_v_p", &ty, &v, &p)?.var();
    let laws = ws.id_groupoid_laws(&inv_d.var(), [&l1, &l2, &l3])?;
    out.push(entry("id_groupoid_laws", "Identification type groupoid laws", laws.iter().collect()));
    Ok(out)
}
