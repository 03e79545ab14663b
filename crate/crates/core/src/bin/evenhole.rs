fn main() {
    std::process::exit(evenhole::cli::run(std::env::args_os()));
}
