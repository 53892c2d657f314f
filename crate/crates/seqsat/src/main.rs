use clap::Parser;
use seqsat::cli::{run, Cli};

fn main() {
    std::process::exit(run(Cli::parse()));
}
