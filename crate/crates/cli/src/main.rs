use clap::Parser;

fn main() {
    let cli = bifib_cli::Cli::parse();
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    let code = bifib_cli::run(cli, &mut out, &mut err);
    std::process::exit(code);
}
