fn main() {
    std::process::exit(torus_genus::cli::main_with(std::env::args_os()));
}
