fn main() {
    std::process::exit(degenpoly_cli::run(std::env::args_os()));
}
