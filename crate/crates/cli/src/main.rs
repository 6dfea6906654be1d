fn main() {
    std::process::exit(gradord_cli::main_with_args(std::env::args_os()));
}
