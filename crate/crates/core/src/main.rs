fn main() {
    std::process::exit(steindual::cli::run());
}
