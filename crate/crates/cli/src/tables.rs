use std::fmt::Write;

use serde_json::{json, Value};
use weyl_core::sequences::{bernoulli_numbers, euler_number, euler_polynomial, euler_zero_values};

/// Rows `{n, coeffs}` for `E_n(x)` (ascending) and `{n, value}` for
/// `E_n(0)`, `B_n` and the Euler numbers.
pub fn tables_json(max_n: u32) -> Value {
    let polys: Vec<Value> = (0..=max_n)
        .map(|n| {
            let p = euler_polynomial(n);
            let coeffs: Vec<String> = (0..=n).map(|k| p.coeff(k).to_string()).collect();
            json!({ "n": n, "coeffs": coeffs })
        })
        .collect();
    let rows = |values: Vec<String>| -> Vec<Value> {
        values
            .into_iter()
            .enumerate()
            .map(|(n, v)| json!({ "n": n, "value": v }))
            .collect()
    };
    json!({
        "euler_polynomial": polys,
        "euler_at_zero": rows(euler_zero_values(max_n).iter().map(ToString::to_string).collect()),
        "bernoulli": rows(bernoulli_numbers(max_n).iter().map(ToString::to_string).collect()),
        "euler_number": rows((0..=max_n).map(|n| euler_number(n).to_string()).collect()),
    })
}

pub fn tables_text(max_n: u32) -> String {
    let mut out = String::from("E_n(x)\n");
    for n in 0..=max_n {
        let _ = writeln!(out, "  {n:>3}  {}", euler_polynomial(n));
    }
    let sections = [
        ("E_n(0)", euler_zero_values(max_n)),
        ("B_n", bernoulli_numbers(max_n)),
        ("Euler numbers", (0..=max_n).map(euler_number).collect()),
    ];
    for (title, values) in sections {
        let _ = writeln!(out, "\n{title}");
        for (n, v) in values.iter().enumerate() {
            let _ = writeln!(out, "  {n:>3}  {v}");
        }
    }
    out
}
