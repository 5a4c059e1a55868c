//! The aligned listing of all split graphs on four vertices with their
//! covers, posets and XY-graphs, as printed by `splitkit gallery`.

fn main() {
    let n = std::env::args().nth(1).unwrap_or_else(|| "4".into());
    let code = splitkit::cli::run(
        ["splitkit", "gallery", "--n", &n],
        &mut std::io::empty(),
        &mut std::io::stdout(),
    );
    std::process::exit(code);
}
