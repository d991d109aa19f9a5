//! Builds corner-squares Cantor stages and reports their exact measures.
//!
//! Run with `cargo run --example cantor_dust -- 1/5 4`.

use quasifractal::cantor::{self, Params2};
use quasifractal::geom::{parse_rational, union_length};

fn main() -> quasifractal::Result<()> {
    let mut args = std::env::args().skip(1);
    let a = parse_rational(&args.next().unwrap_or_else(|| "1/5".into()))?;
    let depth: usize = args.next().map_or(4, |d| d.parse().expect("depth is an integer"));

    let stage = cantor::build(&Params2::new(a.clone(), depth)?)?;
    println!("a = {a}, depth = {depth}");
    println!("level-{depth} cells: {}", cantor::singular_cover(&stage).len());
    println!("cell side: {}", stage.side());
    println!("retained segments: {}", stage.segments().len());
    println!("union length of the skeleton: {}", union_length(stage.segments())?);
    println!("skeleton components: {}", cantor::connectivity(&stage).components);
    println!("dimension of the limit dust: {:.12}", cantor::hausdorff_dimension(&a)?);

    for c in stage.cells().iter().take(4) {
        let address: String = c.address.iter().map(|d| char::from(b'0' + d)).collect();
        println!("  cell {address}: corner ({}, {}), side {}", c.corner.x, c.corner.y, c.side);
    }
    Ok(())
}
