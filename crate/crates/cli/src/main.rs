fn main() {
    std::process::exit(jdlat_cli::run(std::env::args_os()));
}
