fn main() {
    std::process::exit(streamtri::cli::main_with(std::env::args_os()));
}
