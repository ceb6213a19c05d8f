fn main() {
    std::process::exit(copersist::cli::run(std::env::args_os()));
}
