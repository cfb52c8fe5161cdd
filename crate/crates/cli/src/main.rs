use std::io::{self, BufWriter};

fn main() {
    let stdin = io::stdin();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = catcodes_cli::run(
        std::env::args_os().skip(1),
        &mut stdin.lock(),
        &mut out,
        &mut io::stderr(),
    );
    drop(out);
    std::process::exit(code);
}
