use std::io;

fn main() {
    let code = splitkit::cli::run(
        std::env::args_os(),
        &mut io::stdin().lock(),
        &mut io::stdout().lock(),
    );
    std::process::exit(code);
}
