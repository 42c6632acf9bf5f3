//! Facet complex, complementary complex, link and deletion for I_n.
//!
//! cargo run --example complexes -- 4

use domino_ideals::betti::gamma_complement;
use domino_ideals::simplicial::{enumerate_induced_subcollections, facet_complex};
use domino_ideals::tiling::domino_ideal;
use domino_ideals::VariableId;

fn main() -> domino_ideals::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    let delta = facet_complex(&domino_ideal(n)?);
    println!("Δ(I_{n})  = <{}>", delta.facet_names().join(", "));
    let gamma = gamma_complement(n)?;
    println!("Γ_{n}^c    = <{}>", gamma.facet_names().join(", "));
    if n >= 3 {
        let v = VariableId::y(n - 1);
        println!("lk({v})   = <{}>", gamma.link(v)?.facet_names().join(", "));
        println!("del({v})  = <{}>", gamma.deletion(v)?.facet_names().join(", "));
    }
    let subs = enumerate_induced_subcollections(&delta)?;
    println!("{} induced subcollections", subs.len());
    Ok(())
}
