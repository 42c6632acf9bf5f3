//! Evaluates the closed recursion under both base-case readings and prints
//! the reconciliation report.
//!
//! cargo run --example recursion -- 6

use domino_ideals::homology::FieldSpec;
use domino_ideals::recursion::{reconcile, relations_check, splitting_identity_check, BaseCaseTable, Recursion};

fn main() -> domino_ideals::Result<()> {
    let max_n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    for n in 3..=max_n {
        let identity = splitting_identity_check(n, FieldSpec::Rationals)?;
        print!("n = {n}: splitting identity {}", if identity.passed() { "holds" } else { "fails" });
        if n >= 4 {
            let relations = relations_check(n, FieldSpec::Rationals)?;
            print!(", relations {}", if relations.passed() { "hold" } else { "fail" });
        }
        println!();
    }
    print!("{}", reconcile(4, max_n.max(4))?);

    let mut rec = Recursion::new(BaseCaseTable::ideal_indexed());
    let n = max_n.max(4) + 2;
    println!("recursion alone, I_{n}:");
    print!("{}", rec.table(n)?);
    Ok(())
}
