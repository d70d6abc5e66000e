fn main() {
    std::process::exit(sochar::cli::run(std::env::args()));
}
