//! Fredholm indices of Toeplitz operators from the winding of their
//! symbols, computed by argument sampling and by root counting.

use quasifractal::toeplitz::{self, Symbol};

fn main() -> quasifractal::Result<()> {
    for text in ["1:1", "-2:1", "-1:1, 0:4, 1:1", "0:0.5, 1:1", "0:-0.3,+0.2, 2:1, 3:0.25"] {
        let s: Symbol = text.parse()?;
        let r = toeplitz::fredholm_index(&s)?;
        let flipped = toeplitz::fredholm_index(&toeplitz::orientation_flip(&s))?;
        println!(
            "s = {:<28} winding(arg) {:>2}  winding(roots) {:>2}  index {:>2}  flipped index {:>2}",
            s.to_string(),
            r.winding_arg,
            r.winding_roots,
            r.fredholm_index,
            flipped.fredholm_index
        );
    }

    let shift: Symbol = "3:1".parse()?;
    let t = toeplitz::truncate(&shift, 8)?;
    println!("\n8x8 section of T_(z^3): rank {} (deficit {})", t.numerical_rank, t.n - t.numerical_rank);

    let batch = toeplitz::cross_check_batch(7, 50);
    println!(
        "seeded batch: {} symbols, methods agree on {}, flip negates on {}",
        batch.symbols, batch.agreements, batch.flip_negates
    );

    let degenerate: Symbol = "0:1, 1:-1".parse()?;
    match toeplitz::fredholm_index(&degenerate) {
        Err(e) => println!("1 - z: {e}"),
        Ok(r) => println!("1 - z: index {}", r.fredholm_index),
    }
    Ok(())
}
