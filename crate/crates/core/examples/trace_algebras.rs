//! Finite-dimensional algebras with trace: validation, trace-form kernels,
//! Cayley-Hamilton degrees and weights of split semisimple algebras.
//!
//! cargo run --example trace_algebras

use chalgebra::findim::{
    ch_degree, dual_numbers, format_subspace, make_algebra, matrix_algebra, radical_kernel, recover_weights,
    trace_kernel, truncated_polynomial, weighted_semisimple, Block, TraceAlgebra, WeightedType,
};
use chalgebra::linalg::{unit_vector, Subspace};
use chalgebra::rational::{q, qf};
use chalgebra::Result;

fn main() -> Result<()> {
    let m2 = matrix_algebra(2);
    println!("M2: dim {}, t(1) = {}", m2.dim(), m2.trace_of_one());

    // u0 u0 = u1 and every other product zero, with u0 claimed as unit
    let bad = make_algebra(
        vec!["u0".into(), "u1".into()],
        vec![vec![(1, q(1))], vec![], vec![(0, q(1))], vec![]],
        vec![q(1), q(0)],
        vec![q(0), q(0)],
    );
    println!("broken table: {}", bad.unwrap_err());
    let mut t = m2.trace_vector().to_vec();
    t[1] = q(1);
    let skew = TraceAlgebra::from_fn(m2.labels().to_vec(), |i, j| m2.basis_product(i, j), m2.unit().to_vec(), t);
    println!("M2 with t(e12) = 1: {}", skew.unwrap_err());

    for (sizes, weights) in [(&[2][..], &[1][..]), (&[1, 1], &[1, 2]), (&[2, 1], &[1, 3])] {
        let w = WeightedType::new(sizes, weights)?;
        let a = weighted_semisimple(&w);
        println!("F{w}: dim {}, t(1) = {}", a.dim(), a.trace_of_one());
    }

    let dual = dual_numbers();
    println!("kernel(dual numbers) = {}", format_subspace(&dual, &trace_kernel(&dual)));
    println!("kernel(M2) = {}", format_subspace(&m2, &trace_kernel(&m2)));
    let zero_trace =
        TraceAlgebra::from_fn(m2.labels().to_vec(), |i, j| m2.basis_product(i, j), m2.unit().to_vec(), vec![q(0); 4])?;
    println!("kernel(M2 with zero trace) has dim {}", trace_kernel(&zero_trace).dim());

    println!(
        "radical kernel of 0 in dual numbers = {}",
        format_subspace(&dual, &radical_kernel(&dual, &Subspace::zero(2))?)
    );
    println!(
        "radical kernel of A in dual numbers = {}",
        format_subspace(&dual, &radical_kernel(&dual, &Subspace::full(2))?)
    );
    let w = weighted_semisimple(&WeightedType::new(&[2, 1], &[1, 1])?);
    let summand = Subspace::span(w.dim(), &[unit_vector(w.dim(), 0)])?;
    match radical_kernel(&w, &summand) {
        Ok(k) => println!("radical kernel of the Q summand of M2+Q = {}", format_subspace(&w, &k)),
        Err(e) => println!("Q summand of M2+Q: {e}"),
    }
    let cubic = truncated_polynomial(3, vec![q(3), q(0), q(0)])?;
    let top = Subspace::span(3, &[unit_vector(3, 2)])?;
    println!("radical kernel of (x^2) in Q[x]/(x^3) = {}", format_subspace(&cubic, &radical_kernel(&cubic, &top)?));

    println!("ch_degree(M2) = {:?}", ch_degree(&m2, 6));
    let qq = weighted_semisimple(&WeightedType::new(&[1, 1], &[1, 2])?);
    println!("ch_degree(Q+Q, t = x + 2y) = {:?}", ch_degree(&qq, 6));
    println!("ch_degree(dual numbers) = {:?}", ch_degree(&dual, 6));

    println!("weights of Q+Q, t = x + 2y: {}", recover_weights(&qq)?);
    let m2q = weighted_semisimple(&WeightedType::new(&[2, 1], &[1, 2])?);
    let w = recover_weights(&m2q)?;
    println!("weights of M2+Q, t = tr + 2x: {w}, n = {}", w.n());
    let half = TraceAlgebra::from_fn(vec!["1".into()], |_, _| vec![q(1)], vec![q(1)], vec![qf(1, 2)])?
        .with_blocks(vec![Block { size: 1, unit: vec![q(1)] }])?;
    println!("Q with t(1) = 1/2: {}", recover_weights(&half).unwrap_err());

    println!("ch_degree(M2 with doubled trace) = {:?}", ch_degree(&m2.rescale_trace(2)?, 6));
    println!("M2 rescaled by 1 is unchanged: {}", m2.rescale_trace(1)? == m2);
    let q3 = matrix_algebra(1).rescale_trace(3)?;
    println!("ch_degree(Q with t = 3 id) = {:?}", ch_degree(&q3, 6));
    Ok(())
}
