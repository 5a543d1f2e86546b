fn main() {
    std::process::exit(tripoisson::cli::main_with(std::env::args_os()));
}
