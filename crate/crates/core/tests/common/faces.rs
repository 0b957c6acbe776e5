//! Faces stated by the lemmas: each statement fixes the boundary of its
//! witness, and the filler diagrams fix the sides of the composition squares.

use cubeline::evaluator::{face, judge_equal};
use cubeline::groupoid::Workspace;
use cubeline::syntax::Side;

use super::{term, with_dims, Outcome};

/// `(term, dims, [(dim, side, expected)])`, dims listed outermost first.
type FaceCase = (&'static str, &'static [&'static str], &'static [(&'static str, u8, &'static str)]);

pub const CASES: &[FaceCase] = &[
    // reflexivity, inversion, composition
    ("refl_a @ i", &["i"], &[("i", 0, "a"), ("i", 1, "a")]),
    ("inv_p @ i", &["i"], &[("i", 0, "b"), ("i", 1, "a")]),
    ("comp_p_q @ i", &["i"], &[("i", 0, "a"), ("i", 1, "c")]),
    ("comp_q_r @ i", &["i"], &[("i", 0, "b"), ("i", 1, "d")]),
    ("inv_s @ i", &["i"], &[("i", 0, "c"), ("i", 1, "a")]),
    (
        "hcom 0~>j A (refl_a @ i) [i=0 w. p @ w | i=1 w. refl_a @ w]",
        &["i", "j"],
        &[("j", 0, "refl_a @ i"), ("j", 1, "inv_p @ i"), ("i", 0, "p @ j"), ("i", 1, "a")],
    ),
    (
        "hcom 0~>j A (p @ i) [i=0 w. refl_a @ w | i=1 w. q @ w]",
        &["i", "j"],
        &[("j", 0, "p @ i"), ("j", 1, "comp_p_q @ i"), ("i", 0, "a"), ("i", 1, "q @ j")],
    ),
    // units and cancellation
    ("iu_a @ i @ j", &["i", "j"], &[("i", 0, "refl_a @ j"), ("i", 1, "inv_refl_a @ j"), ("j", 0, "a"), ("j", 1, "a")]),
    ("cu_a @ i @ j", &["i", "j"], &[("i", 0, "refl_a @ j"), ("i", 1, "comp_refl_a_refl_a @ j"), ("j", 0, "a"), ("j", 1, "a")]),
    ("ru_p @ i @ j", &["i", "j"], &[("i", 0, "p @ j"), ("i", 1, "comp_p_refl_b @ j"), ("j", 0, "a"), ("j", 1, "b")]),
    ("rc_p @ i @ j", &["i", "j"], &[("i", 0, "refl_a @ j"), ("i", 1, "comp_p_inv_p @ j"), ("j", 0, "a"), ("j", 1, "a")]),
    // square swap and inversability
    ("swap_alpha @ i @ j", &["i", "j"], &[("i", 0, "r @ j"), ("i", 1, "p @ j"), ("j", 0, "inv_s @ i"), ("j", 1, "inv_t @ i")]),
    ("inversability_p @ i @ j", &["i", "j"], &[("i", 0, "p @ j"), ("i", 1, "inv_inv_p @ j"), ("j", 0, "a"), ("j", 1, "b")]),
    // opposite identifications, cancellation, unit
    ("op1_p @ i @ j", &["i", "j"], &[("i", 0, "p @ j"), ("i", 1, "refl_a @ j"), ("j", 0, "a"), ("j", 1, "inv_p @ i")]),
    ("lc_p @ i @ j", &["i", "j"], &[("i", 0, "refl_b @ j"), ("i", 1, "comp_inv_p_p @ j"), ("j", 0, "b"), ("j", 1, "b")]),
    ("op2_p @ i @ j", &["i", "j"], &[("i", 0, "inv_p @ j"), ("i", 1, "refl_b @ j"), ("j", 0, "b"), ("j", 1, "p @ i")]),
    ("lu_p @ i @ j", &["i", "j"], &[("i", 0, "p @ j"), ("i", 1, "comp_refl_a_p @ j"), ("j", 0, "a"), ("j", 1, "b")]),
    ("bi_alpha_beta @ i @ j", &["i", "j"], &[("i", 0, "r @ j"), ("i", 1, "u @ j"), ("j", 0, "c"), ("j", 1, "d")]),
    (
        "assoc_p_q_r @ i @ j",
        &["i", "j"],
        &[("i", 0, "comp_comp_p_q_r @ j"), ("i", 1, "comp_p_comp_q_r @ j"), ("j", 0, "a"), ("j", 1, "d")],
    ),
    // heterogeneous operations
    ("inv_E @ i", &["i"], &[("i", 0, "B"), ("i", 1, "A")]),
    ("comp_E_F @ i", &["i"], &[("i", 0, "A"), ("i", 1, "C")]),
    ("het_inv_pe @ i", &["i"], &[("i", 0, "e"), ("i", 1, "a")]),
    ("het_comp_pe_qf @ i", &["i"], &[("i", 0, "a"), ("i", 1, "f")]),
    (
        "het_inversability_pe @ i @ j",
        &["i", "j"],
        &[("i", 0, "pe @ j"), ("i", 1, "het_inv_het_inv_pe @ j"), ("j", 0, "a"), ("j", 1, "e")],
    ),
    // path induction
    ("is_refl_p @ i @ j", &["i", "j"], &[("i", 0, "refl_a @ j"), ("i", 1, "p @ j"), ("j", 0, "a"), ("j", 1, "p @ i")]),
    (
        "whisker_right_alpha2_p @ i @ j",
        &["i", "j"],
        &[("i", 0, "comp_refl_a_p @ j"), ("i", 1, "comp_refl_a_p @ j"), ("j", 0, "a"), ("j", 1, "b")],
    ),
    (
        "whisker_left_v_alpha2 @ i @ j",
        &["i", "j"],
        &[("i", 0, "comp_v_refl_a @ j"), ("i", 1, "comp_v_refl_a @ j"), ("j", 0, "d"), ("j", 1, "a")],
    ),
    (
        "eckmann_hilton_alpha2_beta2 @ i @ j @ k",
        &["i", "j", "k"],
        &[
            ("i", 0, "comp_alpha2_beta2 @ j @ k"),
            ("i", 1, "comp_beta2_alpha2 @ j @ k"),
            ("j", 0, "refl_a @ k"),
            ("j", 1, "refl_a @ k"),
            ("k", 0, "a"),
            ("k", 1, "a"),
        ],
    ),
    // identification types
    (
        "id_inv_distrib_p_u @ i @ j",
        &["i", "j"],
        &[
            ("i", 0, "inv_id_line_p_u @ j"),
            ("i", 1, "id_line_inv_p_u @ j"),
            ("j", 0, "Id (y. A) b d"),
            ("j", 1, "Id (y. A) a c"),
        ],
    ),
    (
        "het_square_swap_s_t @ i",
        &["i"],
        &[("i", 0, "Id (y. inv_id_line_s_t @ y) u p"), ("i", 1, "Id (y. id_line_inv_s_t @ y) u p")],
    ),
    (
        "id_comp_distrib_p_u_t_v @ i @ j",
        &["i", "j"],
        &[
            ("i", 0, "comp_id_line_p_u_id_line_t_v @ j"),
            ("i", 1, "id_line_comp_p_t_u_v @ j"),
            ("j", 0, "Id (y. A) a c"),
            ("j", 1, "Id (y. A) d a"),
        ],
    ),
    (
        "het_square_glue_s_t_r_v @ i",
        &["i"],
        &[
            ("i", 0, "Id (y. comp_id_line_s_t_id_line_r_v @ y) p v"),
            ("i", 1, "Id (y. id_line_comp_s_r_t_v @ y) p v"),
        ],
    ),
    ("glue_alpha_gamma @ i", &["i"], &[("i", 0, "p"), ("i", 1, "v")]),
    ("id_line_p_u @ i", &["i"], &[("i", 0, "Id (y. A) a c"), ("i", 1, "Id (y. A) b d")]),
    (
        "id_groupoid_law_i @ i @ j",
        &["i", "j"],
        &[("i", 0, "inv_id_line_inv_p_u @ j"), ("i", 1, "id_line_p_u @ j"), ("j", 0, "Id (y. A) a c"), ("j", 1, "Id (y. A) b d")],
    ),
    (
        "id_groupoid_law_ii @ i @ j",
        &["i", "j"],
        &[
            ("i", 0, "comp_id_line_p_u_id_line_inv_p_u @ j"),
            ("i", 1, "refl_Id_A_a_c @ j"),
            ("j", 0, "Id (y. A) a c"),
            ("j", 1, "Id (y. A) a c"),
        ],
    ),
    (
        "id_groupoid_law_iii @ i @ j",
        &["i", "j"],
        &[
            ("i", 0, "comp_id_line_inv_p_u_id_line_p_u @ j"),
            ("i", 1, "refl_Id_A_b_d @ j"),
            ("j", 0, "Id (y. A) b d"),
            ("j", 1, "Id (y. A) b d"),
        ],
    ),
    (
        "id_groupoid_law_iv @ i @ j",
        &["i", "j"],
        &[
            ("i", 0, "comp_id_line_p_u_refl_Id_A_b_d @ j"),
            ("i", 1, "id_line_p_u @ j"),
            ("j", 0, "Id (y. A) a c"),
            ("j", 1, "Id (y. A) b d"),
        ],
    ),
    (
        "id_groupoid_law_v @ i @ j",
        &["i", "j"],
        &[
            ("i", 0, "comp_refl_Id_A_a_c_id_line_p_u @ j"),
            ("i", 1, "id_line_p_u @ j"),
            ("j", 0, "Id (y. A) a c"),
            ("j", 1, "Id (y. A) b d"),
        ],
    ),
    (
        "id_groupoid_law_vi @ i @ j",
        &["i", "j"],
        &[
            ("i", 0, "comp_comp_id_line_p_u_id_line_t_v_id_line_v_p @ j"),
            ("i", 1, "comp_id_line_p_u_comp_id_line_t_v_id_line_v_p @ j"),
            ("j", 0, "Id (y. A) a c"),
            ("j", 1, "Id (y. A) a b"),
        ],
    ),
];

pub fn run(ws: &Workspace) -> Outcome {
    let mut out = Outcome::default();
    for (src, dims, faces) in CASES {
        let ctx = with_dims(ws.context(), dims);
        let t = term(src);
        for (dim, side, expected) in *faces {
            let side = if *side == 0 { Side::Zero } else { Side::One };
            let actual = face(&ctx, &t, dim, side);
            let expected_t = term(expected);
            out.record(judge_equal(&ctx, actual.term(), &expected_t), || {
                format!("{src} at {dim}={side}: expected {expected}, found {actual}")
            });
        }
    }
    out
}
