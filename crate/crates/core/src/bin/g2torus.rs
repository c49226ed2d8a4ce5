fn main() {
    std::process::exit(g2torus::cli::run(std::env::args_os()));
}
