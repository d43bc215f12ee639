fn main() {
    std::process::exit(leray::cli::run(std::env::args_os()));
}
