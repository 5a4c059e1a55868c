//! Prints the count table: every class, split by balance, plus the
//! cumulative split column.
//!
//! `cargo run --release --example census -- 7`

use splitkit::enumerate::count_table;

fn main() -> Result<(), splitkit::Error> {
    let max_n = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(6);
    println!(
        "{:>2} {:>12} {:>12} {:>12} {:>12} {:>7} {:>10}",
        "n", "split", "cover", "xy", "poset", "xy_all", "cumulative"
    );
    for r in count_table(max_n)? {
        let f = |c: splitkit::enumerate::ClassCounts| {
            format!("{}={}+{}", c.total, c.balanced, c.unbalanced)
        };
        println!(
            "{:>2} {:>12} {:>12} {:>12} {:>12} {:>7} {:>10}",
            r.n,
            f(r.split),
            f(r.cover),
            f(r.xy),
            f(r.poset),
            r.xy_all,
            r.cumulative
        );
    }
    Ok(())
}
