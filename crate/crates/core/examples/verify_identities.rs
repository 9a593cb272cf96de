//! Trace identities of n x n matrices: exact checks on generic matrices and
//! seeded searches for rational counterexamples.
//!
//! cargo run --release --example verify_identities

use std::collections::BTreeMap;

use chalgebra::chident::{ch_poly, t_multilinear};
use chalgebra::freetrace::parse;
use chalgebra::genmat::{eval, eval_q, generic_matrix, is_trace_identity, random_counterexample, DEFAULT_SEED};
use chalgebra::matrix::QMatrix;
use chalgebra::rational::q;
use chalgebra::Result;

fn main() -> Result<()> {
    println!(
        "generic_matrix(1, 1) = {:?}",
        generic_matrix(1, 1).entries().iter().map(|e| e.to_string()).collect::<Vec<_>>()
    );
    println!("tr generic_matrix(1, 2) = {}", generic_matrix(1, 2).trace());
    println!("(X1 X2)_11 = {}", generic_matrix(1, 2).mul(&generic_matrix(2, 2)).get(0, 0));

    let id3 = BTreeMap::from([(1, QMatrix::identity(3))]);
    println!("tr(x1) at the 3x3 identity = {}", eval_q(&parse("tr(x1)")?, &id3, 3)?);
    let generic = BTreeMap::from([(1, generic_matrix(1, 2))]);
    println!("CH_2 on a generic 2x2 matrix is zero: {}", eval(&ch_poly(2)?, &generic, 2)?.is_zero());
    let d = |a, b| {
        QMatrix::from_fn(2, |i, j| {
            if i != j {
                q(0)
            } else if i == 0 {
                q(a)
            } else {
                q(b)
            }
        })
    };
    let diag = BTreeMap::from([(1, d(1, 2)), (2, d(3, 5))]);
    println!("x1 x2 - x2 x1 on commuting diagonals = {}", eval_q(&parse("x1*x2 - x2*x1")?, &diag, 2)?);

    println!("CH_2 on 2x2: {}", is_trace_identity(&ch_poly(2)?, 2));
    println!("CH_2 on 3x3: {}", is_trace_identity(&ch_poly(2)?, 3));
    println!("CH_3 on 2x2 (tr(1) = 2): {}", is_trace_identity(&ch_poly(3)?, 2));

    match random_counterexample(&ch_poly(2)?, 3, 10, DEFAULT_SEED) {
        Some(w) => println!("CH_2 on 3x3 fails at x1 = {}, value {}", w.assignment[&1], w.value),
        None => println!("no counterexample found"),
    }
    println!(
        "CH_2 on 2x2, 10 trials: {:?}",
        random_counterexample(&ch_poly(2)?, 2, 10, DEFAULT_SEED).map(|_| "witness")
    );
    let sym = parse("tr(x1*x2) - tr(x2*x1)")?;
    println!("tr(x1x2) - tr(x2x1) on 4x4: {:?}", random_counterexample(&sym, 4, 10, DEFAULT_SEED).map(|_| "witness"));

    println!("identity table, rows n = 1..4, columns m = 1..4 (CH_n on m x m):");
    for n in 1..=4 {
        let row: Vec<&str> = (1..=4)
            .map(|m| {
                if m > n + 1 {
                    "."
                } else if is_trace_identity(&ch_poly(n).unwrap(), m) {
                    "yes"
                } else {
                    "no"
                }
            })
            .collect();
        println!("  CH_{n}: {}", row.join(" "));
    }
    for m in 1..=3 {
        let row: Vec<String> =
            (1..=3).map(|n| is_trace_identity(&t_multilinear(m + 1).unwrap(), n).to_string()).collect();
        println!("  T_{} on n = 1..3: {}", m + 1, row.join(" "));
    }
    Ok(())
}
