fn main() {
    std::process::exit(tricnf::cli::run_from_env());
}
