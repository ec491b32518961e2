fn main() {
    std::process::exit(multifold::cli::main());
}
