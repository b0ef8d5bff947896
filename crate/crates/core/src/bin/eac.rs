fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let code = eac::cli::run(
        &argv,
        &mut std::io::stdin().lock(),
        &mut std::io::stdout(),
        &mut std::io::stderr(),
    );
    std::process::exit(code);
}
