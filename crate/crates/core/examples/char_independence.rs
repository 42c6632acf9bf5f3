//! Compares Betti tables across characteristics, for I_n and for the
//! Stanley–Reisner ideal of RP², where they differ.
//!
//! cargo run --example char_independence -- 5

use domino_ideals::betti::{char_independence, stanley_reisner_ideal};
use domino_ideals::homology::rp2;
use domino_ideals::tiling::domino_ideal;

fn main() -> domino_ideals::Result<()> {
    let max_n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    for n in 1..=max_n {
        let r = char_independence(&domino_ideal(n)?, &[2, 3, 5, 7])?;
        println!(
            "I_{n}: equal over Q, F2, F3, F5, F7: {}; torsion-free: {} ({} Koszul complexes, {:?} complements)",
            r.all_equal(),
            r.torsion_free(),
            r.koszul_scanned,
            r.complements_scanned
        );
    }

    let sr = stanley_reisner_ideal(&rp2())?;
    println!("I_RP² = {sr}");
    let r = char_independence(&sr, &[2, 3])?;
    for t in &r.tables {
        println!("over {}:", t.field());
        print!("{t}");
    }
    for (field, diff) in &r.mismatches {
        println!("{field} differs from Q at {diff:?}");
    }
    for w in &r.torsion {
        println!("torsion in {:?}: {}", w.source, w.homology);
    }
    Ok(())
}
