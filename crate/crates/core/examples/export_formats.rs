//! Writes JSON, SVG and OBJ artifacts into a directory (default
//! `target/quasifractal-examples`).

use std::fs;
use std::path::PathBuf;

use quasifractal::cantor::{self, Params2};
use quasifractal::export::{export_obj, render_svg, LoopOverlay, ObjOptions, Renderable, StageDocument, SvgOptions};
use quasifractal::geom::rat;
use quasifractal::planar::{self, PlanarVariant};
use quasifractal::spatial::{self, SpatialVariant};
use quasifractal::topology::HoleSet;

fn main() -> quasifractal::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map_or_else(|| PathBuf::from("target/quasifractal-examples"), PathBuf::from);
    fs::create_dir_all(&dir)?;

    let stage = cantor::build(&Params2::new(rat(1, 4), 3)?)?;
    let doc = StageDocument::from_stage2(&stage)?;
    fs::write(dir.join("cantor.json"), doc.to_json())?;
    assert_eq!(StageDocument::from_json(&doc.to_json())?.to_stage2()?, stage);
    fs::write(dir.join("cantor.svg"), render_svg(Renderable::Cantor(&stage), &SvgOptions::default())?)?;

    let gasket = planar::build_planar(PlanarVariant::Gasket, 4)?;
    fs::write(dir.join("gasket.json"), StageDocument::from_piece_set(&gasket).to_json())?;
    let options = SvgOptions {
        overlay: Some(LoopOverlay {
            curve: PlanarVariant::Gasket.base_tile().boundary,
            holes: HoleSet::from_pieces(&gasket)?,
        }),
        ..SvgOptions::default()
    };
    fs::write(dir.join("gasket.svg"), render_svg(Renderable::Planar(&gasket), &options)?)?;

    let cube = spatial::build_spatial(&SpatialVariant::cube(rat(1, 3))?, 2)?;
    fs::write(dir.join("cube.obj"), export_obj(&cube, &ObjOptions::all()))?;
    let tetra = spatial::build_spatial(&SpatialVariant::TetraGasket, 3)?;
    fs::write(dir.join("tetra.obj"), export_obj(&tetra, &ObjOptions::all()))?;

    for entry in fs::read_dir(&dir)? {
        let entry = entry?;
        println!("{:>9} bytes  {}", entry.metadata()?.len(), entry.path().display());
    }
    Ok(())
}
