use clap::Parser;
use dirac2d_cli::{run, Cli};
use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let code = match run(cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            let _ = out.flush();
            eprintln!("dirac2d: {e}");
            e.exit_code()
        }
    };
    if let Err(e) = out.flush() {
        eprintln!("dirac2d: {e}");
        return ExitCode::from(3);
    }
    ExitCode::from(code as u8)
}
