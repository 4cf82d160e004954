use clap::Parser;

fn main() {
    let cli = lucasconv::cli::Cli::parse();
    std::process::exit(lucasconv::cli::run(cli));
}
