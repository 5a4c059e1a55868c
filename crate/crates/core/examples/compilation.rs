//! Unbalanced split graphs on n vertices against all split graphs on fewer:
//! compile each one down and back up.

use splitkit::biject::{compile_split_down, compile_split_up};
use splitkit::enumerate::enumerate_split;
use splitkit::model::Object;

fn main() -> Result<(), splitkit::Error> {
    let n = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);
    let census = enumerate_split(n)?;
    for e in census.filtered(Some(false)) {
        let g = e.object.as_split()?;
        let down = compile_split_down(g)?;
        let up = compile_split_up(&down.output, n)?;
        println!(
            "{:<8} -> {:<8} ({} vertices) -> {}",
            e.object.serialize(),
            Object::from(down.output.clone()).serialize(),
            down.output.n(),
            if up.report.output_key == e.key {
                "same"
            } else {
                "DIFFERENT"
            }
        );
    }
    Ok(())
}
