fn main() {
    std::process::exit(ebr_core::cli::run(std::env::args_os()));
}
