use clap::Parser;

fn main() {
    // clap exits 2 on usage errors and 0 for --help/--version on its own.
    let cli = match trigapprox_cli::Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    std::process::exit(trigapprox_cli::run(cli));
}
