fn main() {
    std::process::exit(kron_spectra::cli::run(std::env::args_os()));
}
