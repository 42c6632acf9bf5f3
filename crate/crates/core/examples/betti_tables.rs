//! Betti tables of I_n by both routes, with pd and reg.
//!
//! cargo run --example betti_tables -- 6

use domino_ideals::betti::{betti_hochster, betti_koszul, projective_dimension, regularity};
use domino_ideals::homology::FieldSpec;
use domino_ideals::tiling::domino_ideal;

fn main() -> domino_ideals::Result<()> {
    let max_n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    for n in 1..=max_n {
        let ideal = domino_ideal(n)?;
        let koszul = betti_koszul(&ideal, FieldSpec::Rationals);
        let hochster = betti_hochster(&ideal, FieldSpec::Rationals)?;
        assert_eq!(koszul.graded, hochster);
        let t = &koszul.graded;
        println!("I_{n}: pd = {}, reg = {}", projective_dimension(t)?, regularity(t)?);
        print!("{t}");
        println!();
    }
    println!("{}", betti_koszul(&domino_ideal(3)?, FieldSpec::Rationals).graded.to_json(3));
    Ok(())
}
