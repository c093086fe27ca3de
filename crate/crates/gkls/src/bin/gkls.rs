fn main() {
    std::process::exit(gkls::cli::execute(std::env::args_os()));
}
