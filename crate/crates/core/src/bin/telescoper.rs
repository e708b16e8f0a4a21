fn main() {
    std::process::exit(telescoper::cli::run(std::env::args_os()));
}
