fn main() {
    std::process::exit(quasifractal::cli::main_with_args(std::env::args_os()));
}
