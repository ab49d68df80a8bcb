// Blocks, membership in the degree-3 block family and bounded completion.

use gallai::generators::{figure1_family, Figure1Kind};
use gallai::graph::{blocks, bowtie, complete_to_family_g, family_g_check, verify_family_g_witness};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let b = bowtie();
    let d = blocks(&b);
    println!("bowtie blocks {:?}, cut vertices {:?}", d.blocks, d.cut_vertices);
    println!("bowtie check {:?}", family_g_check(&b));
    println!("bowtie completion: {:?}", complete_to_family_g(&b, 2, 6));

    let (pattern, witness) = figure1_family(Figure1Kind::Chain, 3)?;
    verify_family_g_witness(&pattern, &witness)?;
    let found = complete_to_family_g(&pattern, 0, 2);
    println!(
        "chain of three: in family {}, completion found {}",
        family_g_check(&pattern).holds(),
        found.witness().is_some()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
