fn main() {
    std::process::exit(bellmoves::cli::run());
}
