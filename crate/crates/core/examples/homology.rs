//! Integral and field homology of Γ_n^c, its link and deletion, and of RP².
//!
//! cargo run --example homology -- 5

use domino_ideals::betti::verify_sphere_claims;
use domino_ideals::homology::{
    boundary_matrices, reduced_homology_field, reduced_homology_z, rp2, smith_normal_form, FieldSpec,
};

fn main() -> domino_ideals::Result<()> {
    let max_n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    for n in 3..=max_n {
        let r = verify_sphere_claims(n)?;
        println!("n = {n}: Γ^c {} | lk {} | del {}", r.complement, r.link, r.deletion);
    }

    let p = rp2();
    println!("RP² over Z:  {}", reduced_homology_z(&p));
    println!("RP² over Q:  {:?}", reduced_homology_field(&p, FieldSpec::Rationals));
    println!("RP² over F2: {:?}", reduced_homology_field(&p, FieldSpec::PrimeField(2)));
    let chains = boundary_matrices(&p);
    let d2 = chains.boundary(2).expect("RP² has triangles");
    println!("invariant factors of ∂_2: {:?}", smith_normal_form(d2).factors);
    Ok(())
}
