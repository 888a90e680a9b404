//! Fiber types against the singular point they produce on the sextic, and
//! the verdicts ruling out J10 and E12 points for several singular sets.

use sextic_toolkit::cli::run;

fn main() {
    let out = run(["sextic", "report", "--pretty"], &mut std::io::empty());
    print!("{}", out.stdout);
}
