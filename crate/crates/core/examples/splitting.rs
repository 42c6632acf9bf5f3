//! Checks the splittings I_n = V_n + U_n and V_n ∩ U_n = V̂_n + Û_n.
//!
//! cargo run --example splitting -- 6

use domino_ideals::ideal::{split_domino, split_intersection, verify_splitting, verify_splitting_with, VerifyOptions};

fn main() -> domino_ideals::Result<()> {
    let max_n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    for n in 3..=max_n {
        let outer = split_domino(n)?;
        let report = verify_splitting(&outer)?;
        println!(
            "n = {n}: |V| = {}, |U| = {}, |G(V∩U)| = {}, split {} ({} subsets)",
            outer.v.len(),
            outer.u.len(),
            report.intersection.len(),
            if report.passed() { "holds" } else { "fails" },
            report.subsets_checked
        );
        if n >= 4 {
            let inner = split_intersection(n)?;
            let report = verify_splitting(&inner)?;
            println!(
                "        |V̂| = {}, |Û| = {}, split {}",
                inner.v.len(),
                inner.u.len(),
                if report.passed() { "holds" } else { "fails" }
            );
        }
    }
    // seeded sampling for sizes beyond exhaustive reach
    let options = VerifyOptions { max_exhaustive: 4, sample: Some((2000, 7)) };
    let sampled = verify_splitting_with(&split_domino(max_n)?, options)?;
    println!("sampled (S2) check at n = {max_n}: passed = {}, exhaustive = {}", sampled.passed(), sampled.exhaustive);
    Ok(())
}
