fn main() -> std::process::ExitCode {
    psi_forge::shell::cli::main()
}
