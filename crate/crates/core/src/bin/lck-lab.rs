fn main() {
    std::process::exit(lck_lab::io::cli::main());
}
