fn main() {
    std::process::exit(opcheck::cli::main_with_args(std::env::args_os()));
}
