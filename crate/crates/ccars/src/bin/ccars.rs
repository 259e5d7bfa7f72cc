fn main() -> std::process::ExitCode {
    ccars::cli::main()
}
