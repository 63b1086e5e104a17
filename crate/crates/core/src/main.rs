fn main() {
    std::process::exit(vacrad::cli::main_entry(std::env::args_os()));
}
