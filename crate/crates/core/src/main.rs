fn main() {
    std::process::exit(cone_angles::cli::run(std::env::args_os()));
}
