//! Runs the round-trip and compilation suites and prints their reports.

use splitkit::biject::BijectionPair;
use splitkit::model::ClassTag;
use splitkit::verify::{verify_compilation, verify_roundtrip};

fn main() -> Result<(), splitkit::Error> {
    for pair in BijectionPair::ALL {
        println!("{}", verify_roundtrip(pair, 4)?.to_json());
    }
    for class in ClassTag::ALL {
        println!("{}", verify_compilation(class, 5)?.to_json());
    }
    Ok(())
}
