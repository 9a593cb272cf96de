//! Stratum types, their dimensions and the closure poset.
//!
//! cargo run --example luna_strata

use chalgebra::strata::{
    closure_leq, enumerate_types, maximal_degenerations, stratification_poset, stratum_dims, StratumType,
};
use chalgebra::Result;

fn main() -> Result<()> {
    for n in 1..=3 {
        let types: Vec<String> = enumerate_types(n).iter().map(|t| t.to_string()).collect();
        println!("n = {n}: {} types: {}", types.len(), types.join(", "));
    }

    for (pairs, ell) in [(vec![(3, 1)], 2), (vec![(1, 1), (1, 2)], 2), (vec![(1, 1), (1, 1)], 2), (vec![(2, 1)], 2)] {
        let s = StratumType::new(pairs)?;
        let d = stratum_dims(&s, ell)?;
        println!("{s}, ell = {ell}: stratum {}, sheet {}, stabilizer {}", d.stratum, d.sheet, d.stabilizer);
    }

    let t = |p: Vec<(usize, usize)>| StratumType::new(p);
    println!("1/1 1/1 <= 2/1: {}", closure_leq(&t(vec![(1, 1), (1, 1)])?, &t(vec![(2, 1)])?)?);
    println!("2/1 <= 1/1 1/1: {}", closure_leq(&t(vec![(2, 1)])?, &t(vec![(1, 1), (1, 1)])?)?);
    println!("1/2 1/1 <= 1/1 1/1 1/1: {}", closure_leq(&t(vec![(1, 1), (1, 2)])?, &t(vec![(1, 1), (1, 1), (1, 1)])?)?);

    for (pairs, ell) in [(vec![(2, 1)], 2), (vec![(1, 1), (1, 1)], 2), (vec![(2, 1)], 3)] {
        let s = t(pairs)?;
        for (lower, codim, mv) in maximal_degenerations(&s, ell)? {
            println!("{s} (ell = {ell}) degenerates to {lower} in codimension {codim} by {mv:?}");
        }
    }

    for (n, ell) in [(2, 2), (2, 3), (3, 2)] {
        let p = stratification_poset(n, ell)?;
        let flagged: Vec<String> =
            p.codim_one_edges().iter().map(|e| format!("{} -> {}", p.nodes[e.upper], p.nodes[e.lower])).collect();
        println!(
            "n = {n}, ell = {ell}: {} nodes, codimension 1 edges: [{}], audit ok: {}",
            p.nodes.len(),
            flagged.join(", "),
            p.audit().ok()
        );
    }
    print!("{}", stratification_poset(2, 2)?.to_dot());
    Ok(())
}
