fn main() -> std::process::ExitCode {
    qisop::cli::main()
}
