fn main() {
    std::process::exit(quartic::cli::run(std::env::args_os()));
}
