//! Rank of the algebra generated by generic elements over its trace ring.
//!
//! cargo run --release --example generic_rank

use chalgebra::findim::{dual_numbers, matrix_algebra, weighted_semisimple, WeightedType};
use chalgebra::genmat::{generic_algebra_rank, DEFAULT_SEED};
use chalgebra::Result;

fn main() -> Result<()> {
    let mut cases = vec![
        ("dual numbers".to_string(), dual_numbers()),
        ("M2".to_string(), matrix_algebra(2)),
        ("Q+Q, t = x + 2y".to_string(), weighted_semisimple(&WeightedType::new(&[1, 1], &[1, 2])?)),
    ];
    for (sizes, weights) in [(&[1, 1, 1][..], &[1, 1, 1][..]), (&[2, 1], &[1, 1]), (&[3], &[1])] {
        let w = WeightedType::new(sizes, weights)?;
        cases.push((format!("F{w}"), weighted_semisimple(&w)));
    }
    for (name, a) in &cases {
        let r = generic_algebra_rank(a, 2, None, DEFAULT_SEED)?;
        println!("{name}: dim {}, rank with 2 generic elements {} ({:?})", a.dim(), r.rank, r.status);
    }
    Ok(())
}
