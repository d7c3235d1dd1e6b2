fn main() -> std::process::ExitCode {
    critical_planarity::cli::main()
}
