use std::io::Write;

fn main() {
    let out = sextic_toolkit::cli::run(std::env::args_os(), &mut std::io::stdin().lock());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::io::stdout().flush().ok();
    std::process::exit(out.code);
}
