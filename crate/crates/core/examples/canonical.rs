//! Canonical keys: relabeled copies of an object share a key, and keys
//! tell isomorphism classes apart.

use splitkit::canon::{is_isomorphic, Canonize};
use splitkit::model::{Graph, Object, SetCover};

fn main() -> Result<(), splitkit::Error> {
    let p4 = Graph::path(4);
    let relabeled = p4.relabel(&[2, 0, 3, 1]);
    println!("P4           {}", p4.canonical_key());
    println!("P4 relabeled {}", relabeled.canonical_key());
    println!("star K(1,3)  {}", Graph::star(3).canonical_key());

    let a = SetCover::new(3, vec![vec![0, 1], vec![1, 2]])?;
    let b = SetCover::new(3, vec![vec![2, 0], vec![0, 1]])?;
    println!(
        "covers isomorphic: {}",
        is_isomorphic(&Object::Cover(a), &Object::Cover(b))?
    );
    Ok(())
}
