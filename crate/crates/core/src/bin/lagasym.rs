fn main() {
    std::process::exit(lagasym::cli::main_from_env());
}
