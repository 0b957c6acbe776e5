//! The shipped catalogs: the groupoid constructions and the theorems, as
//! built in code and as checked from their `.cube` sources.

use std::collections::{BTreeMap, BTreeSet};

use crate::context::Context;
use crate::dims::free_vars;
use crate::groupoid::{ambient, build_stdlib, CatalogEntry, GroupoidError, Workspace};
use crate::kernel::{check_decls, DeclVerdict};
use crate::syntax::{parse_file, Decl, Name};
use crate::theorems::{build_theorems, theorem_ambient};

pub const STDLIB_CUBE: &str = include_str!("../stdlib.cube");
pub const THEOREMS_CUBE: &str = include_str!("../theorems.cube");

const STDLIB_HEADER: &str = "-- The groupoid catalog. Generated from the builders; do not edit.\n";
const THEOREMS_HEADER: &str =
    "-- The theorem catalog, checked after stdlib.cube. Generated from the builders; do not edit.\n";

/// One summary line: a lemma and the definitions that witness it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatalogLine {
    pub key: &'static str,
    pub lemma: &'static str,
    pub names: &'static [&'static str],
}

const fn line(key: &'static str, lemma: &'static str, names: &'static [&'static str]) -> CatalogLine {
    CatalogLine { key, lemma, names }
}

/// Every catalog line, in order.
pub const CATALOG: [CatalogLine; 29] = [
    line("refl", "Reflexivity", &["refl_a"]),
    line("inv", "Inversion", &["inv_p"]),
    line("comp", "Composition", &["comp_p_q"]),
    line("iu", "Inversion unit", &["iu_a"]),
    line("cu", "Composition unit", &["cu_a"]),
    line("ru", "Right unit", &["ru_p"]),
    line("rc", "Right cancellation", &["rc_p"]),
    line("swap", "Square swap", &["swap_alpha"]),
    line("inversability", "Inversability", &["inversability_p"]),
    line("op1", "Opposite identification (i)", &["op1_p"]),
    line("lc", "Left cancellation", &["lc_p"]),
    line("op2", "Opposite identification (ii)", &["op2_p"]),
    line("lu", "Left unit", &["lu_p"]),
    line("bi", "Three-out-of-four", &["bi_alpha_beta"]),
    line("assoc", "Associativity", &["assoc_p_q_r"]),
    line("type_inv", "Type inversion", &["inv_E"]),
    line("het_inv", "Heterogeneous inversion", &["het_inv_pe"]),
    line("type_comp", "Type composition", &["comp_E_F"]),
    line("het_comp", "Heterogeneous composition", &["het_comp_pe_qf"]),
    line("het_inversability", "Heterogeneous inversability", &["het_inversability_pe"]),
    line("is_refl", "Path induction (is_refl)", &["is_refl_p"]),
    line(
        "j_eliminate",
        "Path induction (J)",
        &[
            "J_P_p",
            "J_P_refl_a",
            "J_motive_const_p",
            "J_motive_const_refl_a",
            "J_motive_from_p",
            "J_motive_from_refl_a",
            "J_motive_to_p",
            "J_motive_to_refl_a",
            "J_motive_loop_p",
            "J_motive_loop_refl_a",
        ],
    ),
    line("whisker", "Whiskering", &["whisker_right_alpha2_p", "whisker_left_v_alpha2"]),
    line("eckmann_hilton", "Eckmann-Hilton", &["eckmann_hilton_alpha2_beta2"]),
    line("id_inv_distrib", "Identification type inversion distribution", &["id_inv_distrib_p_u"]),
    line("het_square_swap", "Heterogeneous square swap", &["het_square_swap_s_t"]),
    line(
        "id_comp_distrib",
        "Identification type composition distribution",
        &["id_comp_distrib_p_u_t_v"],
    ),
    line(
        "het_square_glue",
        "Heterogeneous square gluing",
        &["het_square_glue_s_t_r_v", "glue_alpha_gamma"],
    ),
    line(
        "id_groupoid_laws",
        "Identification type groupoid laws",
        &[
            "id_groupoid_law_i",
            "id_groupoid_law_ii",
            "id_groupoid_law_iii",
            "id_groupoid_law_iv",
            "id_groupoid_law_v",
            "id_groupoid_law_vi",
        ],
    ),
];

/// Everything the builders produce.
pub struct Built {
    pub workspace: Workspace,
    pub entries: Vec<CatalogEntry>,
    /// Where the theorem declarations start.
    pub theorems_mark: usize,
}

impl Built {
    /// The two source files, as shipped.
    pub fn sources(&self) -> (String, String) {
        let all = self.workspace.render();
        let theorems = self.workspace.render_from(self.theorems_mark);
        let stdlib = all[..all.len() - theorems.len()].to_string();
        (
            format!("{STDLIB_HEADER}{stdlib}"),
            format!("{THEOREMS_HEADER}{theorems}"),
        )
    }
}

/// Runs every builder in a fresh workspace.
pub fn build() -> Result<Built, GroupoidError> {
    let mut ws = Workspace::new();
    ambient(&mut ws)?;
    let mut entries = build_stdlib(&mut ws)?;
    let theorems_mark = ws.mark();
    theorem_ambient(&mut ws)?;
    entries.extend(build_theorems(&mut ws)?);
    Ok(Built {
        workspace: ws,
        entries,
        theorems_mark,
    })
}

/// The outcome of checking catalog sources.
pub struct CatalogReport {
    pub verdicts: Vec<DeclVerdict>,
    /// Each catalog line with whether it and everything it uses pass.
    pub lines: Vec<(CatalogLine, bool)>,
}

impl CatalogReport {
    pub fn all_pass(&self) -> bool {
        self.lines.iter().all(|(_, ok)| *ok) && self.verdicts.iter().all(|v| v.verdict.passed())
    }
}

/// Parses and checks the two sources in one context.
pub fn check_sources(stdlib: &str, theorems: &str) -> Result<CatalogReport, String> {
    let mut decls = parse_file(stdlib).map_err(|e| format!("stdlib.cube: {e}"))?;
    decls.extend(parse_file(theorems).map_err(|e| format!("theorems.cube: {e}"))?);
    let mut ctx = Context::new();
    let verdicts = check_decls(&mut ctx, &decls);

    let mut uses: BTreeMap<Name, BTreeSet<Name>> = BTreeMap::new();
    for d in &decls {
        if let Decl::Def { name, term, ty } = d {
            let mut fv = free_vars(term);
            fv.extend(free_vars(ty));
            uses.insert(name.clone(), fv);
        }
    }
    let passed: BTreeMap<&str, bool> = verdicts
        .iter()
        .map(|v| (v.name.as_str(), v.verdict.passed()))
        .collect();
    let holds = |root: &str| {
        if !uses.contains_key(root) {
            return false;
        }
        let mut seen = BTreeSet::new();
        let mut stack = vec![Name::from(root)];
        while let Some(n) = stack.pop() {
            if !seen.insert(n.clone()) {
                continue;
            }
            if passed.get(&*n) == Some(&false) {
                return false;
            }
            if let Some(next) = uses.get(&n) {
                stack.extend(next.iter().cloned());
            }
        }
        true
    };
    let lines = CATALOG
        .iter()
        .map(|l| (*l, l.names.iter().all(|n| holds(n))))
        .collect();
    Ok(CatalogReport { verdicts, lines })
}

/// Checks the compiled-in sources.
pub fn check_embedded() -> Result<CatalogReport, String> {
    check_sources(STDLIB_CUBE, THEOREMS_CUBE)
}
