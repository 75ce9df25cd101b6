fn main() {
    std::process::exit(einflag::cli::run());
}
