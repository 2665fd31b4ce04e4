//! Replay of the worked operator examples against embedded expected
//! values. Every row recomputes its value from scratch and compares for
//! exact equality.

use std::fmt::Display;

use composet::{
    append, box_add, box_remove, box_remove_set, check_nontransitivity, commutator_minus, down_q,
    jdt_add, jdt_add_set, phi, psi, Composition, FormalSum, IndexSet, LinearOp, OpAtom, OpResult,
    OperatorWord, TWord, WeakComposition,
};

/// One replayed example: what was computed, what was expected, and
/// whether they agree.
pub struct ExampleOutcome {
    pub label: String,
    pub passed: bool,
    pub actual: String,
    pub expected: String,
}

fn row<T: PartialEq + Display>(label: &str, actual: T, expected: T) -> ExampleOutcome {
    ExampleOutcome {
        label: label.to_string(),
        passed: actual == expected,
        actual: actual.to_string(),
        expected: expected.to_string(),
    }
}

fn w(parts: &[u32]) -> WeakComposition {
    WeakComposition::new(parts.to_vec())
}

fn c(parts: &[u32]) -> Composition {
    Composition::new(parts.to_vec())
}

fn val(parts: &[u32]) -> OpResult {
    OpResult::Value(w(parts))
}

fn sum(terms: &[&[u32]]) -> FormalSum {
    FormalSum::from_terms(terms.iter().map(|parts| (c(parts), 1)))
}

/// Run every embedded example and report one outcome per row.
pub fn run_all() -> Vec<ExampleOutcome> {
    let mut rows = Vec::new();

    let a213 = w(&[2, 1, 3]);
    rows.push(row("d_1((2, 1, 3))", box_remove(1, &a213), val(&[2, 0, 3])));
    rows.push(row("d_2((2, 1, 3))", box_remove(2, &a213), val(&[1, 1, 3])));
    rows.push(row("d_3((2, 1, 3))", box_remove(3, &a213), val(&[2, 1, 2])));
    rows.push(row("d_4((2, 1, 3))", box_remove(4, &a213), OpResult::Zero));

    let a31421 = w(&[3, 1, 4, 2, 1]);
    rows.push(row(
        "d_{1, 2, 3}((3, 1, 4, 2, 1))",
        box_remove_set(&IndexSet::new([1, 2, 3]), &a31421),
        val(&[2, 1, 4, 1, 0]),
    ));
    rows.push(row(
        "d_{2, 4}((4, 1, 4, 2, 1))",
        box_remove_set(&IndexSet::new([2, 4]), &w(&[4, 1, 4, 2, 1])),
        val(&[4, 1, 3, 1, 1]),
    ));

    rows.push(row("a_2((2, 1, 3))", append(2, &a213), w(&[2, 1, 3, 2])));
    rows.push(row("a_0((2, 1, 3))", append(0, &a213), w(&[2, 1, 3, 0])));

    rows.push(row(
        "u_4((3, 1, 4, 2, 1))",
        jdt_add(4, &a31421),
        val(&[2, 1, 4, 1, 0, 4]),
    ));
    rows.push(row("u_2((2, 1, 3))", jdt_add(2, &a213), val(&[2, 0, 3, 2])));
    rows.push(row("u_5((2, 1, 3))", jdt_add(5, &a213), OpResult::Zero));
    rows.push(row(
        "u_{1, 2}((1))",
        jdt_add_set(&IndexSet::new([1, 2]), &w(&[1])),
        val(&[1, 0, 2]),
    ));

    rows.push(row(
        "t_1((3, 1, 4, 2, 1))",
        box_add(1, &a31421),
        val(&[1, 3, 1, 4, 2, 1]),
    ));
    rows.push(row(
        "t_2((3, 1, 4, 2, 1))",
        box_add(2, &a31421),
        val(&[3, 2, 4, 2, 1]),
    ));
    rows.push(row(
        "t_3((3, 1, 4, 2, 1))",
        box_add(3, &a31421),
        val(&[3, 1, 4, 3, 1]),
    ));
    rows.push(row(
        "t_4((3, 1, 4, 2, 1))",
        box_add(4, &a31421),
        val(&[4, 1, 4, 2, 1]),
    ));
    rows.push(row(
        "t_5((3, 1, 4, 2, 1))",
        box_add(5, &a31421),
        val(&[3, 1, 5, 2, 1]),
    ));
    rows.push(row(
        "t_6((3, 1, 4, 2, 1))",
        box_add(6, &a31421),
        OpResult::Zero,
    ));

    rows.push(row(
        "(a_4 d_{1, 2, 3})((3, 1, 4, 2, 1))",
        OperatorWord::new(vec![
            OpAtom::Append(4),
            OpAtom::BoxRemove(1),
            OpAtom::BoxRemove(2),
            OpAtom::BoxRemove(3),
        ])
        .apply(&a31421),
        val(&[2, 1, 4, 1, 0, 4]),
    ));

    let u213 = FormalSum::unit(c(&[2, 1, 3]));
    let u12 = FormalSum::unit(c(&[1, 2]));
    rows.push(row(
        "up_r((2, 1, 3))",
        LinearOp::UpR.apply(&u213),
        sum(&[&[2, 1, 3, 1], &[2, 3, 2], &[1, 3, 3], &[2, 1, 4]]),
    ));
    rows.push(row(
        "down_q((2, 1, 3))",
        LinearOp::DownQ.apply(&u213),
        sum(&[&[2, 3], &[1, 1, 3], &[2, 1, 2]]),
    ));
    rows.push(row(
        "up_l((2, 1, 3))",
        LinearOp::UpL.apply(&u213),
        sum(&[&[1, 2, 1, 3], &[2, 2, 3], &[3, 1, 3], &[2, 1, 4]]),
    ));
    rows.push(row(
        "down_filtered((1, 2))",
        LinearOp::DownFiltered.apply(&u12),
        sum(&[&[2], &[1, 1], &[1]]),
    ));

    let filtered_expected = sum(&[&[2], &[1, 1], &[1], &[1, 2]]);
    rows.push(row(
        "(down_q up_r - up_r down_q)((2, 1, 3))",
        commutator_minus(&LinearOp::DownQ, &LinearOp::UpR, &u213),
        u213.clone(),
    ));
    rows.push(row(
        "(down_filtered up_r - up_r down_filtered)((1, 2))",
        commutator_minus(&LinearOp::DownFiltered, &LinearOp::UpR, &u12),
        filtered_expected.clone(),
    ));
    rows.push(row(
        "(down_q up_l - up_l down_q)((2, 1, 3))",
        commutator_minus(&LinearOp::DownQ, &LinearOp::UpL, &u213),
        u213.clone(),
    ));
    rows.push(row(
        "(down_filtered up_l - up_l down_filtered)((1, 2))",
        commutator_minus(&LinearOp::DownFiltered, &LinearOp::UpL, &u12),
        filtered_expected,
    ));

    let du = down_q(&LinearOp::UpL.apply(&u213));
    let ud = LinearOp::UpL.apply(&down_q(&u213));
    rows.push(row(
        "coefficient of (2, 1, 3) in (down_q up_l)((2, 1, 3))",
        du.coeff(&c(&[2, 1, 3])),
        2.into(),
    ));
    rows.push(row(
        "coefficient of (2, 1, 3) in (up_l down_q)((2, 1, 3))",
        ud.coeff(&c(&[2, 1, 3])),
        1.into(),
    ));

    let alpha = c(&[2, 6, 1, 4]);
    let y_word = TWord::left(4, IndexSet::new([1, 4, 5, 6]));
    rows.push(row(
        "(t_4 d_{1, 4, 5, 6})((2, 6, 1, 4))",
        y_word.apply(&alpha),
        val(&[2, 4, 0, 4]),
    ));
    match phi(&y_word, &alpha) {
        Ok(image) => {
            rows.push(row(
                "phi(t_4 d_{1, 4, 5, 6}) at (2, 6, 1, 4)",
                image.to_string(),
                "d_{1, 3, 5, 6} t_3".to_string(),
            ));
            rows.push(row(
                "(d_{1, 3, 5, 6} t_3)((2, 6, 1, 4))",
                image.apply(&alpha),
                val(&[2, 4, 0, 4]),
            ));
            match psi(&image, &alpha) {
                Ok(back) => rows.push(row(
                    "psi(phi(t_4 d_{1, 4, 5, 6}))",
                    back.to_string(),
                    y_word.to_string(),
                )),
                Err(e) => rows.push(ExampleOutcome {
                    label: "psi(phi(t_4 d_{1, 4, 5, 6}))".to_string(),
                    passed: false,
                    actual: e.to_string(),
                    expected: y_word.to_string(),
                }),
            }
        }
        Err(e) => rows.push(ExampleOutcome {
            label: "phi(t_4 d_{1, 4, 5, 6}) at (2, 6, 1, 4)".to_string(),
            passed: false,
            actual: e.to_string(),
            expected: "d_{1, 3, 5, 6} t_3".to_string(),
        }),
    }

    let witness = check_nontransitivity();
    rows.push(row(
        "flatten(d_{1, 4}((4, 1, 4, 1)))",
        witness.mid.clone(),
        c(&[4, 1, 3]),
    ));
    rows.push(row(
        "flatten(d_{1, 4}((4, 1, 3)))",
        witness.end.clone(),
        c(&[3, 3]),
    ));
    rows.push(row(
        "index sets I with flatten(d_I((4, 1, 4, 1))) = (3, 3)",
        match &witness.direct_witness {
            Some(set) => format!("I = {set}"),
            None => "none".to_string(),
        },
        "none".to_string(),
    ));

    rows
}
