fn main() {
    std::process::exit(boolcodes::cli::run());
}
