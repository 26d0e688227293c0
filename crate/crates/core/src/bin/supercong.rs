fn main() { std::process::exit(supercong::cli::run(std::env::args())); }
