fn main() {
    std::process::exit(dsrg_cli::run());
}
