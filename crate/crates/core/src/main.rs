fn main() {
    std::process::exit(pinned_dot::harness::cli::main());
}
