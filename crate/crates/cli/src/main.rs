fn main() {
    std::process::exit(digamma_zeros_cli::run(std::env::args_os()));
}
