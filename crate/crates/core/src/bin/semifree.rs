fn main() {
    let code = semifree::cli::run(
        std::env::args_os(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
        std::env::var(semifree::cli::DEPTH_ENV).ok(),
    );
    std::process::exit(code);
}
