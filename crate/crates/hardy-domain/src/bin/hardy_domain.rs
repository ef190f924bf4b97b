fn main() {
    std::process::exit(hardy_domain::cli::run(std::env::args_os()));
}
