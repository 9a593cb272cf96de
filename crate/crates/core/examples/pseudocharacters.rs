//! Pseudocharacters of finite groups and the Cayley-Hamilton quotients of
//! their group algebras.
//!
//! cargo run --release --example pseudocharacters

use chalgebra::findim::ch_degree;
use chalgebra::pseudochar::chartable::rational_irreducible_characters;
use chalgebra::pseudochar::group::{cyclic, small_groups, symmetric};
use chalgebra::pseudochar::{check_pseudocharacter, pseudochar_kernel, CheckMode, PseudoCharTable};
use chalgebra::Result;

fn report(name: &str, p: &PseudoCharTable) {
    println!("{name}:");
    for line in check_pseudocharacter(p, CheckMode::Exhaustive, false).render().lines() {
        println!("  {line}");
    }
}

fn quotient(name: &str, p: &PseudoCharTable) -> Result<()> {
    let (k, quo) = pseudochar_kernel(p)?;
    println!("{name}: kernel dim {}, quotient dim {}, ch_degree {:?}", k.dim(), quo.dim(), ch_degree(&quo, p.n + 1));
    Ok(())
}

fn main() -> Result<()> {
    let c2 = cyclic(2);
    let regular = PseudoCharTable::from_integers(c2.clone(), 2, &[2, 0])?;
    report("C2, t = (2, 0)", &regular);
    report("C2, t = (2, 1)", &PseudoCharTable::from_integers(c2.clone(), 2, &[2, 1])?);
    let s3 = symmetric(3);
    let chars = rational_irreducible_characters(&s3)?;
    let standard = chars.iter().find(|c| c[0] == 2).expect("S3 has a degree 2 character");
    let standard = PseudoCharTable::from_integers(s3.clone(), 2, standard)?;
    report("S3, 2-dimensional character", &standard);

    quotient("C2 regular", &regular)?;
    quotient("S3 standard", &standard)?;
    for g in [cyclic(4), s3] {
        let ones = vec![1; g.order()];
        quotient(
            &format!("trivial character of a group of order {}", g.order()),
            &PseudoCharTable::from_integers(g, 1, &ones)?,
        )?;
    }

    println!("rational irreducible characters of groups of order <= 8:");
    for (name, g) in small_groups() {
        let chars = rational_irreducible_characters(&g)?;
        let all = chars.iter().all(|c| {
            let p = PseudoCharTable::from_integers(g.clone(), c[0] as usize, c).unwrap();
            check_pseudocharacter(&p, CheckMode::Exhaustive, true).passes()
        });
        println!("  {name}: {} characters, all pass: {all}", chars.len());
    }
    Ok(())
}
