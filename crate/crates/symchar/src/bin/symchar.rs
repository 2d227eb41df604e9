fn main() {
    std::process::exit(symchar::cli::run(std::env::args_os()));
}
