fn main() {
    std::process::exit(regapprox::cli::main_with_args(std::env::args_os()));
}
