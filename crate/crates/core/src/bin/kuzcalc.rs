fn main() {
    std::process::exit(kuzcalc::cli::main_with_args(std::env::args_os()));
}
