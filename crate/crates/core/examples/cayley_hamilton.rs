//! Newton's formulas, the Cayley-Hamilton polynomials and their polarizations.
//!
//! cargo run --example cayley_hamilton

use chalgebra::chident::{
    ch_multilinear, ch_poly, elementary_from_powersums, factorial, polarize, restitute, sigma, t_multilinear, t_sigma,
    PermCycles,
};
use chalgebra::freetrace::{parse, VarStyle};
use chalgebra::Result;

fn main() -> Result<()> {
    for k in 1..=3 {
        println!("e_{k} = {}", elementary_from_powersums(k)?);
    }
    for i in 1..=3 {
        println!("sigma_{i}(x) = {}", sigma(i)?.render(VarStyle::Single));
    }
    for n in 1..=3 {
        println!("CH_{n}(x) = {}", ch_poly(n)?.render(VarStyle::Single));
    }
    for cycles in [&[&[1][..], &[2][..]][..], &[&[1, 2][..]][..], &[&[1, 2, 3][..]][..]] {
        let size = cycles.iter().map(|c| c.len()).sum();
        let s = PermCycles::from_cycles(size, cycles)?;
        println!("T_{s} = {}", t_sigma(&s));
    }
    for k in 1..=2 {
        println!("T_{k} = {}", t_multilinear(k)?);
    }
    println!("T_2(x,x) = {}", restitute(&t_multilinear(2)?));
    println!("2!*sigma_2(x) = {}", sigma(2)?.scale(&factorial(2)));
    for n in 1..=2 {
        println!("CH(x1..x{n}) = {}", ch_multilinear(n)?);
    }
    for n in 1..=4 {
        let m = ch_multilinear(n)?;
        let ok = restitute(&m) == ch_poly(n)?.scale(&factorial(n)) && polarize(&ch_poly(n)?)? == m;
        println!("n={n}: polarize(CH_n) = CH multilinear and restitutes to n!*CH_n: {ok}");
    }
    println!("polarize(x^2) = {}", polarize(&parse("x^2")?)?);
    println!("polarize(sigma_2) = {}", polarize(&sigma(2)?)?);
    Ok(())
}
