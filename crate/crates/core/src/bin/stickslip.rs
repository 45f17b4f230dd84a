fn main() {
    std::process::exit(stickslip::cli::run(std::env::args_os()));
}
