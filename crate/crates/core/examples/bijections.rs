//! Sends one split graph through every class and back.

use splitkit::biject::{
    cover_to_split, poset_to_split, split_to_cover, split_to_poset, split_to_xy, xy_to_split,
};
use splitkit::canon::Canonize;
use splitkit::model::{Graph, Object};

fn main() -> Result<(), splitkit::Error> {
    let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (1, 4)]);
    println!("graph  {}", g.canonical_key());

    let cover = split_to_cover(&g)?;
    println!("cover  {}", Object::from(cover.output.clone()).serialize());
    println!(
        "  back {}",
        cover_to_split(&cover.output)?.report.output_key
    );

    let xy = split_to_xy(&g)?;
    println!("xy     {}", Object::from(xy.output.clone()).serialize());
    println!("  back {}", xy_to_split(&xy.output)?.report.output_key);

    let poset = split_to_poset(&g)?;
    println!("poset  {}", Object::from(poset.output.clone()).serialize());
    println!(
        "  back {}",
        poset_to_split(&poset.output)?.report.output_key
    );
    Ok(())
}
