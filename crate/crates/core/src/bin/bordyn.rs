fn main() {
    std::process::exit(bordyn::cli::main_from_args());
}
