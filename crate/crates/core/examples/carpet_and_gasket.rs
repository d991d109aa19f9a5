//! Sierpinski carpet and gasket stages with their removed pieces and exact
//! area bookkeeping.

use quasifractal::planar::{self, area_accounting, PlanarVariant};

fn main() -> quasifractal::Result<()> {
    for (variant, depth) in [(PlanarVariant::Carpet, 4), (PlanarVariant::Gasket, 6)] {
        let ps = planar::build_planar(variant, depth)?;
        let areas = area_accounting(&ps);
        println!("{} depth {depth}", variant.name());
        println!("  kept tiles: {}", ps.kept().len());
        for k in 1..=depth {
            println!("  pieces removed at level {k}: {}", ps.removed_at(k).count());
        }
        println!("  kept area {} + removed area {} = {}", areas.kept_area, areas.removed_area, &areas.kept_area + &areas.removed_area);
        println!("  initial area {}", variant.initial_area());
        println!("  similarity dimension {:.12}", planar::similarity_dimension(variant));
        let first = &ps.removed()[0];
        let c = first.centroid();
        println!("  first piece {} has area {} and centroid ({}, {})", first.label(), first.area, c.x, c.y);
    }
    Ok(())
}
