fn main() {
    std::process::exit(polyvis::cli::run());
}
