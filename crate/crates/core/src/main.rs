fn main() {
    std::process::exit(lambda_toeplitz::cli::run(std::env::args_os()));
}
