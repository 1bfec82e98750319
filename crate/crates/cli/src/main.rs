use clap::Parser;
use xdiscord_cli::Cli;

fn main() {
    let cli = Cli::parse();
    let invocation = xdiscord_cli::invocation(&std::env::args().skip(1).collect::<Vec<_>>());
    let stdout = std::io::stdout();
    if let Err(e) = xdiscord_cli::run(&cli, &invocation, &mut stdout.lock()) {
        eprintln!("xdiscord: {e}");
        std::process::exit(e.exit_code());
    }
}
