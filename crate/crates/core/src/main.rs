fn main() {
    std::process::exit(eulerchar::cli::run(std::env::args().skip(1)));
}
