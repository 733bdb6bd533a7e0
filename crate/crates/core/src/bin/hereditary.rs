fn main() {
    let status = hereditary::cli::run(
        std::env::args_os(),
        &mut std::io::stdout(),
        &mut std::io::stderr().lock(),
    );
    std::process::exit(status);
}
