fn main() {
    std::process::exit(nonrep::cli::main());
}
