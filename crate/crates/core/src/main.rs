fn main() {
    std::process::exit(connkeeper::cli::run_cli(std::env::args_os()));
}
