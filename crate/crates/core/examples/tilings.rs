//! Draws the domino tilings of a 2×n board and lists the generators of I_n.
//!
//! cargo run --example tilings -- 4

use domino_ideals::tiling::{domino_ideal, enumerate_tilings, partition_rightmost, DominoTiling};
use domino_ideals::VariableKind;

/// Two text rows: `|` for a vertical domino, `==` spanning a horizontal one.
fn draw(t: &DominoTiling) -> [String; 2] {
    let n = t.n();
    let mut grid = vec![[' '; 2]; n + 1];
    for d in t.dominos() {
        let glyph = if d.kind == VariableKind::Vertical { '|' } else { '=' };
        for (row, col) in DominoTiling::cells(n, d) {
            grid[col][row - 1] = glyph;
        }
    }
    [0, 1].map(|r| grid[1..].iter().map(|c| c[r]).collect())
}

fn main() -> domino_ideals::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    let tilings = enumerate_tilings(n)?;
    println!("{} tilings of the 2x{n} board", tilings.len());
    for t in &tilings {
        let [top, bottom] = draw(t);
        println!("{top}\n{bottom}   {}\n", t.to_monomial());
    }
    println!("I_{n} = {}", domino_ideal(n)?);
    if n >= 3 {
        let parts = partition_rightmost(n)?;
        println!(
            "ending in y_(n-1)y_n: {}, in x_(n-1)x_(2n-2): {}, in x_(n-2)x_(2n-3)y_n: {}",
            parts.a.len(),
            parts.b.len(),
            parts.c.len()
        );
    }
    Ok(())
}
