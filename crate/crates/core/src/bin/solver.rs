fn main() {
    std::process::exit(tra_box::cli::run(std::env::args_os()));
}
