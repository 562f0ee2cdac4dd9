fn main() {
    std::process::exit(trivext::cli::run(std::env::args_os()));
}
