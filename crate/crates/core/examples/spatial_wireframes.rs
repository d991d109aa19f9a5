//! Cube-wireframe and tetrahedral stages: counts, series, incidence and
//! connectivity of the retained skeleton.

use quasifractal::geom::rat;
use quasifractal::spatial::{self, SpatialVariant};

fn main() -> quasifractal::Result<()> {
    let variants = [
        SpatialVariant::cube(rat(1, 3))?,
        SpatialVariant::cube(rat(1, 10))?,
        SpatialVariant::TetraGasket,
    ];
    for variant in &variants {
        let depth = 2;
        let stage = spatial::build_spatial(variant, depth)?;
        let series = spatial::series_measures(variant, depth)?;
        println!("{} (contraction {}) depth {depth}", variant.name(), variant.contraction());
        println!("  cells {}, skeleton edges {}, faces {}", stage.cells().len(), stage.skeleton().len(), stage.pieces().len());
        println!("  edge length sum {} (finite in the limit: {})", series.edge_length_sum, series.edge_finite);
        println!("  face area sum {} (finite in the limit: {})", series.face_area_sum, series.area_finite);
        if let Some(l) = &series.edge_limit {
            println!("  edge length limit {l}");
        }
        println!("  face edges missing from the skeleton: {}", spatial::boundary_incidence(&stage).violations);
        println!("  skeleton components: {}", spatial::connectivity3(&stage).components);
    }
    Ok(())
}
