//! Index vectors of loops in the carpet: winding numbers around each
//! removed piece, and how they behave under reversal and concatenation.

use quasifractal::export::parse_loop;
use quasifractal::planar::{self, PlanarVariant};
use quasifractal::topology::{index_vector, reverse_orientation, same_index_class, winding_number, HoleSet};

fn main() -> quasifractal::Result<()> {
    let ps = planar::build_planar(PlanarVariant::Carpet, 2)?;
    let holes = HoleSet::from_pieces(&ps)?;
    println!("holes: {}", holes.labels.join(" "));

    let outer = PlanarVariant::Carpet.base_tile().boundary;
    println!("outer boundary  {:?}", index_vector(&outer, &holes)?.entries());

    // Around the central piece only, passing through the kept ring.
    let centre = parse_loop("5/18,5/18; 13/18,5/18; 13/18,13/18; 5/18,13/18")?;
    let around_centre = index_vector(&centre, &holes)?;
    println!("around centre   {:?}", around_centre.entries());
    println!("reversed        {:?}", index_vector(&reverse_orientation(&centre), &holes)?.entries());

    let twice = centre.concat_at_base(&centre)?;
    println!("traversed twice {:?}", index_vector(&twice, &holes)?.entries());
    println!("twice ~ once: {}", same_index_class(&twice, &centre, &holes)?);

    let c = ps.removed()[0].centroid();
    println!("winding of the outer boundary about the centre piece: {}", winding_number(&outer, &c)?);
    Ok(())
}
