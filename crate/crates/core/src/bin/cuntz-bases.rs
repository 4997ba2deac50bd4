fn main() {
    std::process::exit(cuntz_bases::cli::run(std::env::args_os()));
}
