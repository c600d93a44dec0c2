fn main() {
    std::process::exit(pseudo2f::cli::run(std::env::args_os()));
}
