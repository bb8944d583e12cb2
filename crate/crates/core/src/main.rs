fn main() -> std::process::ExitCode {
    artin_actdim::cli::main()
}
