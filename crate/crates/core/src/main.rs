fn main() {
    std::process::exit(hilbert_cells::cli::run(std::env::args_os()));
}
