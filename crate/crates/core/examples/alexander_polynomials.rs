//! Alexander polynomials from Fox derivatives.

use sextic_toolkit::groups::Presentation;

fn main() {
    for (text, aug) in [
        ("<a, b | aba = bab>", vec![1, 1]),
        ("<a, b, c | aba = bab, bcb = cbc, cac = aca>", vec![1, 1, 1]),
        ("<a, b | abab = baba>", vec![1, 1]),
        ("<a, b | a^2 = b^3>", vec![3, 2]),
        ("<a, b | aba^-1b^-1>", vec![1, 0]),
        ("<a | >", vec![1]),
    ] {
        let p = Presentation::parse(text).unwrap();
        match p.fox_alexander(&aug) {
            Ok(a) => println!("{text:<48} {aug:?} -> {a}"),
            Err(e) => println!("{text:<48} {aug:?} -> {e}"),
        }
    }
}
