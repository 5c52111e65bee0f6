fn main() {
    std::process::exit(bccore::cli::run(std::env::args_os()));
}
