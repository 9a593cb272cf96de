//! Normal forms in the free algebra with trace.
//!
//! cargo run --example free_trace

use chalgebra::freetrace::{normalize, parse, Word};
use chalgebra::{Result, TracePoly};

fn main() -> Result<()> {
    let w = normalize(&Word(vec![2, 3, 1]));
    println!("cyclic word of [2,3,1]: representative {:?}", w.representative().letters());
    println!("tr(x1*x2) == tr(x2*x1): {}", parse("tr(x1*x2)")? == parse("tr(x2*x1)")?);
    println!("empty word: {}", TracePoly::one().formal_trace());

    println!("(tr(x1)*x1)*x1 = {}", parse("(tr(x1)*x1)*x1")?);
    println!("1*p = p: {}", parse("1*(x1 + tr(x2))")? == parse("x1 + tr(x2)")?);
    println!("(x1+x2)^2 = {}", parse("(x1 + x2)^2")?);

    println!("formal_trace(tr(x1)*x2) = {}", parse("tr(x1)*x2")?.formal_trace());
    println!("formal_trace(x1*x2 - x2*x1) = {}", parse("x1*x2 - x2*x1")?.formal_trace());
    println!("formal_trace(1) = {}", parse("1")?.formal_trace());

    let sq = parse("tr(x1)")?.substitute(|_| Some(TracePoly::var(1).mul(&TracePoly::var(1))))?;
    println!("x1 -> x1*x1 in tr(x1): {sq}");
    let ch2 = chalgebra::chident::ch_poly(2)?;
    let sum = ch2.substitute(|_| parse("x1 + x2").ok())?;
    let x2 = ch2.substitute(|_| Some(TracePoly::var(2)))?;
    println!("CH_2(x1+x2) - CH_2(x1) - CH_2(x2) = {}", sum.sub(&ch2).sub(&x2));
    let zero = parse("x1 + tr(x1)")?.substitute(|_| Some(TracePoly::zero()))?;
    println!("x1 -> 0 in x1 + tr(x1): {zero}");
    Ok(())
}
