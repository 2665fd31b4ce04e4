//! Timing wrappers and JSON rendering for check results and formal sums.

use std::time::Instant;

use composet::{FormalSum, OpAtom, OperatorWord, RelationCheck};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

/// A check result together with how long it took to produce.
pub struct Timed {
    pub check: RelationCheck,
    pub seconds: f64,
}

pub fn run_timed(f: impl FnOnce() -> RelationCheck) -> Timed {
    let start = Instant::now();
    let check = f();
    Timed {
        check,
        seconds: start.elapsed().as_secs_f64(),
    }
}

/// One human-readable line per check: status, name, case count, universe,
/// elapsed time. Failures append the counterexample on following lines.
pub fn check_line(timed: &Timed) -> String {
    let c = &timed.check;
    match &c.failure {
        None => format!(
            "PASS {}: {} cases; {} ({:.2}s)",
            c.name, c.cases, c.universe, timed.seconds
        ),
        Some(ce) => format!(
            "FAIL {}: case {} of {} ({:.2}s)\n{}",
            c.name, c.cases, c.universe, timed.seconds, ce
        ),
    }
}

pub fn check_json(timed: &Timed) -> Value {
    let c = &timed.check;
    let mut obj = json!({
        "name": c.name,
        "passed": c.passed(),
        "cases": c.cases,
        "universe": c.universe,
        "seconds": timed.seconds,
    });
    if let Some(ce) = &c.failure {
        obj["counterexample"] = json!({
            "input": ce.input,
            "indices": ce.indices,
            "lhs": ce.lhs,
            "rhs": ce.rhs,
            "detail": ce.detail,
        });
    }
    obj
}

/// Render a formal sum as a JSON array of `{comp, coeff}` terms in
/// canonical order.
pub fn sum_to_json(sum: &FormalSum) -> Value {
    let terms: Vec<Value> = sum
        .iter()
        .map(|(comp, coeff)| {
            json!({
                "comp": comp.parts(),
                "coeff": coeff.to_i64().expect("coefficient fits in i64"),
            })
        })
        .collect();
    Value::Array(terms)
}

/// Render an operator word as a JSON array in display order (the last
/// entry is applied first).
pub fn word_to_json(word: &OperatorWord) -> Value {
    let atoms: Vec<Value> = word
        .atoms()
        .iter()
        .map(|atom| {
            let (op, i) = match atom {
                OpAtom::BoxRemove(i) => ("d", *i),
                OpAtom::Append(i) => ("a", *i),
                OpAtom::JdtAdd(i) => ("u", *i),
                OpAtom::BoxAdd(i) => ("t", *i),
            };
            json!({ "op": op, "i": i })
        })
        .collect();
    Value::Array(atoms)
}

#[cfg(test)]
mod tests {
    use composet::{verify_dual_graded, Composition, UpFamily};

    use super::*;

    #[test]
    fn check_lines_carry_status_and_timing() {
        let timed = run_timed(|| verify_dual_graded(UpFamily::Jdt, 3));
        assert!(timed.check.passed());
        let line = check_line(&timed);
        assert!(
            line.starts_with("PASS dual-graded-rc-qc: 8 cases"),
            "{line}"
        );
        assert!(line.contains("s)"), "{line}");
        let v = check_json(&timed);
        assert_eq!(v["passed"], json!(true));
        assert_eq!(v["cases"], json!(8));
        assert!(v.get("counterexample").is_none());
    }

    #[test]
    fn sums_and_words_render_in_canonical_order() {
        let mut sum = FormalSum::unit(Composition::new(vec![2, 1]));
        sum.add_term(Composition::new(vec![1, 2]), -3);
        let v = sum_to_json(&sum);
        assert_eq!(
            v,
            json!([
                { "comp": [1, 2], "coeff": -3 },
                { "comp": [2, 1], "coeff": 1 },
            ])
        );

        let word = OperatorWord::new(vec![OpAtom::Append(3), OpAtom::BoxRemove(2)]);
        let rendered = word_to_json(&word);
        assert_eq!(
            rendered,
            json!([
                { "op": "a", "i": 3 },
                { "op": "d", "i": 2 },
            ])
        );
    }
}
