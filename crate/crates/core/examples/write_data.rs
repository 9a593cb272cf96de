//! Regenerates the JSON inputs in `examples/data/`.
//!
//! cargo run --example write_data

use chalgebra::findim::{dual_numbers, matrix_algebra, weighted_semisimple, WeightedType};
use chalgebra::pseudochar::group::{cyclic, symmetric};
use chalgebra::pseudochar::PseudoCharTable;

fn main() -> chalgebra::Result<()> {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data");
    std::fs::create_dir_all(&dir).expect("create data dir");
    let write = |name: &str, body: String| {
        std::fs::write(dir.join(name), body + "\n").expect("write data file");
        println!("wrote examples/data/{name}");
    };
    write("dual_numbers.json", dual_numbers().to_json());
    write("m2.json", matrix_algebra(2).to_json());
    write("m2_doubled.json", matrix_algebra(2).rescale_trace(2)?.to_json());
    write("q_plus_q_weights_1_2.json", weighted_semisimple(&WeightedType::new(&[1, 1], &[1, 2])?).to_json());
    write("m2_plus_q_weights_1_2.json", weighted_semisimple(&WeightedType::new(&[2, 1], &[1, 2])?).to_json());

    let s3 = symmetric(3);
    write("s3.json", s3.to_json());
    let classes = s3.conjugacy_classes();
    let standard: Vec<i64> = (0..6)
        .map(|g| {
            let c = classes.iter().find(|c| c.contains(&g)).expect("class");
            match s3.element_order(c[0]) {
                1 => 2,
                2 => 0,
                _ => -1,
            }
        })
        .collect();
    write("s3_standard.json", PseudoCharTable::from_integers(s3, 2, &standard)?.to_json());
    let c2 = cyclic(2);
    write("c2.json", c2.to_json());
    write("c2_regular.json", PseudoCharTable::from_integers(c2.clone(), 2, &[2, 0])?.to_json());
    write("c2_bad.json", PseudoCharTable::from_integers(c2, 2, &[2, 1])?.to_json());
    Ok(())
}
