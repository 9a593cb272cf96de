//! One-variable diagonal models: coefficients of the characteristic
//! polynomial of a diagonal matrix with repeated eigenvalues and the
//! relations they satisfy.
//!
//! cargo run --example one_variable

use chalgebra::genmat::{diagonal_model, discriminant_relation, printed_quartic, relation_profile, sica_checks};
use chalgebra::Result;

fn main() -> Result<()> {
    for mults in [&[1, 1][..], &[1, 2], &[2]] {
        let m = diagonal_model(mults)?;
        let alphas: Vec<String> = (1..=m.n).map(|j| format!("alpha_{j} = {}", m.alphas[j])).collect();
        println!("multiplicities {mults:?}: {}", alphas.join(", "));
        match discriminant_relation(mults) {
            Ok(r) => println!("  relation {r}, vanishes on the model: {}", m.specialize(&r).is_zero()),
            Err(e) => println!("  {e}"),
        }
    }
    println!("multiplicities [1, 1, 1]: {}", discriminant_relation(&[1, 1, 1]).unwrap_err());

    let r = sica_checks();
    println!("identities for (u, v, v): {:?}", r.identities);
    println!("3v^2 - 2av + b = 0: {}", r.v_relation);
    println!(
        "u^2 - 4au + a^2 - 4b = 0 as printed: {}; corrected 3u^2 - 2au + 4b - a^2 = 0: {}",
        r.u_relation_printed, r.u_relation_corrected
    );
    println!("scaled minimal polynomial vanishes: {}", r.min_poly_degree_two);

    let q = printed_quartic();
    let prof = relation_profile(&q);
    println!(
        "printed quartic {q}: degrees {:?}, weights {:?}, vanishes {}, consistent with degree 4 and weight 6: {}",
        prof.degrees,
        prof.weights,
        prof.vanishes,
        prof.is_consistent_with(4, 6)
    );
    Ok(())
}
