//! Finite presentations: parsing, abelianization and Fox calculus.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::word::{default_names, Endomorphism, Word};
use super::GroupError;
use crate::arith::intmat::IntMatrix;
use crate::arith::poly::QPoly;
use crate::arith::Q;
use crate::lattice::{cokernel_of_relations, TorsionGroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    names: Vec<String>,
    relators: Vec<Word>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub generators: Vec<String>,
    pub relators: Vec<String>,
}

impl Presentation {
    /// Identity relators are dropped.
    pub fn new(names: Vec<String>, relators: Vec<Word>) -> Result<Presentation, GroupError> {
        if names.is_empty() {
            return Err(GroupError::Parse("a presentation needs at least one generator".into()));
        }
        let n = names.len();
        if let Some(r) = relators.iter().find(|r| r.rank_used() > n) {
            return Err(GroupError::Parse(format!("relator {r} uses an undeclared generator")));
        }
        let relators = relators.into_iter().filter(|r| !r.is_empty()).collect();
        Ok(Presentation { names, relators })
    }

    pub fn with_default_names(ngens: usize, relators: Vec<Word>) -> Result<Presentation, GroupError> {
        Presentation::new(default_names(ngens), relators)
    }

    pub fn free(ngens: usize) -> Presentation {
        Presentation { names: default_names(ngens), relators: Vec::new() }
    }

    pub fn ngens(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Accepts `<a, b | aba = bab, (ab)^3>`; brackets are optional and a
    /// relation `l = r` stands for `l r^-1`.
    pub fn parse(text: &str) -> Result<Presentation, GroupError> {
        let t = text.trim();
        let t = t.strip_prefix(['<', '⟨']).unwrap_or(t);
        let t = t.strip_suffix(['>', '⟩']).unwrap_or(t);
        let (gens, rels) = match t.split_once('|') {
            Some((g, r)) => (g, r),
            None => (t, ""),
        };
        let names: Vec<String> = gens.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
        for n in &names {
            if !valid_name(n) {
                return Err(GroupError::Parse(format!("bad generator name {n:?}")));
            }
        }
        let relators = split_top_level(rels)
            .into_iter()
            .filter(|s| !s.trim().is_empty())
            .map(|s| parse_relation(s, &names))
            .collect::<Result<Vec<_>, _>>()?;
        Presentation::new(names, relators)
    }

    pub fn from_json(j: &PresentationJson) -> Result<Presentation, GroupError> {
        let relators = j.relators.iter().map(|s| parse_relation(s, &j.generators)).collect::<Result<Vec<_>, _>>()?;
        Presentation::new(j.generators.clone(), relators)
    }

    pub fn to_json(&self) -> PresentationJson {
        PresentationJson {
            generators: self.names.clone(),
            relators: self.relators.iter().map(|r| r.format(&self.names)).collect(),
        }
    }

    pub fn parse_word(&self, text: &str) -> Result<Word, GroupError> {
        parse_relation(text, &self.names)
    }

    pub fn with_relators(&self, relators: Vec<Word>) -> Presentation {
        Presentation { names: self.names.clone(), relators: relators.into_iter().filter(|r| !r.is_empty()).collect() }
    }

    /// Exponent-sum matrix, one row per relator.
    pub fn relation_matrix(&self) -> IntMatrix {
        let rows: Vec<Vec<i64>> = self.relators.iter().map(|r| r.exponent_sums(self.ngens())).collect();
        if rows.is_empty() {
            IntMatrix::zeros(0, self.ngens())
        } else {
            IntMatrix::from_rows(&rows)
        }
    }

    /// Free rank and torsion of the abelianization.
    pub fn abelianization(&self) -> (usize, TorsionGroup) {
        if self.relators.is_empty() {
            return (self.ngens(), TorsionGroup::trivial());
        }
        cokernel_of_relations(&self.relation_matrix())
    }

    /// Gcd of the `(n-1)`-minors of the Fox Jacobian under the map sending
    /// generator `i` to `t^aug[i]`.
    pub fn fox_alexander(&self, aug: &[i64]) -> Result<LaurentPoly, GroupError> {
        let n = self.ngens();
        if aug.len() != n {
            return Err(GroupError::Augmentation(format!("{} exponents for {n} generators", aug.len())));
        }
        for r in &self.relators {
            let s: i64 = r.exponent_sums(n).iter().zip(aug).map(|(e, a)| e * a).sum();
            if s != 0 {
                return Err(GroupError::Augmentation(format!("relator {} maps to t^{s}", r.format(&self.names))));
            }
        }
        if aug.iter().all(|&a| a == 0) {
            return Err(GroupError::Augmentation("the map to Z is trivial".into()));
        }
        if n == 1 {
            return Ok(LaurentPoly::one());
        }
        // each relator row is shifted into Q[t] by a common power of t
        let jac: Vec<Vec<QPoly>> = self
            .relators
            .iter()
            .map(|r| {
                let row: Vec<Laurent> = (0..n).map(|g| fox_derivative(r, g, aug)).collect();
                let low = row.iter().map(|x| x.low).min().unwrap_or(0);
                row.iter().map(|x| x.shifted_poly(low)).collect()
            })
            .collect();
        let mut acc = LaurentPoly::zero();
        for rows in combinations(jac.len(), n - 1) {
            for skip in 0..n {
                let cols: Vec<usize> = (0..n).filter(|&c| c != skip).collect();
                let m: Vec<Vec<QPoly>> =
                    rows.iter().map(|&r| cols.iter().map(|&c| jac[r][c].clone()).collect()).collect();
                acc = acc.gcd(&determinant(m));
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| r.format(&self.names)).collect();
        write!(f, "<{} | {}>", self.names.join(", "), rels.join(", "))
    }
}

/// `<α_i | m(α_i) α_i^-1>`.
pub fn local_presentation_of(m: &Endomorphism) -> Presentation {
    let relators = m.images().iter().enumerate().map(|(i, w)| w.mul(&Word::generator(i).inverse())).collect();
    Presentation::with_default_names(m.rank(), relators).expect("rank is positive")
}

fn valid_name(s: &str) -> bool {
    let mut c = s.chars();
    matches!(c.next(), Some(ch) if ch.is_alphabetic()) && c.all(|ch| ch.is_ascii_digit() || ch == '_')
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in s.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' | ';' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + ch.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn parse_relation(s: &str, names: &[String]) -> Result<Word, GroupError> {
    let mut sides = s.split('=');
    let lhs = parse_word(sides.next().unwrap_or(""), names)?;
    let mut w = lhs.clone();
    for side in sides {
        // l = r1 = r2 means l r1^-1 and l r2^-1; only the last pair is kept
        // when there are more than two sides
        w = lhs.mul(&parse_word(side, names)?.inverse());
    }
    Ok(w)
}

fn parse_word(s: &str, names: &[String]) -> Result<Word, GroupError> {
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace() && *c != '*' && *c != '·').collect();
    let mut pos = 0;
    let w = parse_seq(&chars, &mut pos, names)?;
    if pos != chars.len() {
        return Err(GroupError::Parse(format!("unexpected {:?} in {s:?}", chars[pos])));
    }
    Ok(w)
}

fn parse_seq(c: &[char], pos: &mut usize, names: &[String]) -> Result<Word, GroupError> {
    let mut w = Word::identity();
    while *pos < c.len() && !matches!(c[*pos], ')' | ']' | ',') {
        let atom = match c[*pos] {
            '(' => {
                *pos += 1;
                let inner = parse_seq(c, pos, names)?;
                expect(c, pos, ')')?;
                inner
            }
            '[' => {
                *pos += 1;
                let x = parse_seq(c, pos, names)?;
                expect(c, pos, ',')?;
                let y = parse_seq(c, pos, names)?;
                expect(c, pos, ']')?;
                x.mul(&y).mul(&x.inverse()).mul(&y.inverse())
            }
            '1' => {
                *pos += 1;
                Word::identity()
            }
            ch if ch.is_alphabetic() => {
                let start = *pos;
                *pos += 1;
                while *pos < c.len() && (c[*pos].is_ascii_digit() || c[*pos] == '_') {
                    *pos += 1;
                }
                let name: String = c[start..*pos].iter().collect();
                let g = names
                    .iter()
                    .position(|n| *n == name)
                    .ok_or_else(|| GroupError::Parse(format!("unknown generator {name:?}")))?;
                Word::generator(g)
            }
            ch => return Err(GroupError::Parse(format!("unexpected {ch:?}"))),
        };
        let mut e = 1i64;
        if *pos < c.len() && c[*pos] == '^' {
            *pos += 1;
            let neg = *pos < c.len() && c[*pos] == '-';
            if neg {
                *pos += 1;
            }
            let start = *pos;
            while *pos < c.len() && c[*pos].is_ascii_digit() {
                *pos += 1;
            }
            let digits: String = c[start..*pos].iter().collect();
            e = digits.parse().map_err(|_| GroupError::Parse("exponent expected after '^'".into()))?;
            if neg {
                e = -e;
            }
        } else if *pos < c.len() && c[*pos] == '\'' {
            *pos += 1;
            e = -1;
        }
        w = w.mul(&atom.pow(e));
    }
    Ok(w)
}

fn expect(c: &[char], pos: &mut usize, ch: char) -> Result<(), GroupError> {
    if *pos < c.len() && c[*pos] == ch {
        *pos += 1;
        Ok(())
    } else {
        Err(GroupError::Parse(format!("expected {ch:?}")))
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Integer Laurent polynomial, kept as `t^low * sum c_i t^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Laurent {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl Laurent {
    /// `t^(low - base) * sum c_i t^i` as an element of `Q[t]`.
    fn shifted_poly(&self, base: i64) -> QPoly {
        let mut c = vec![Q::zero(); (self.low - base) as usize];
        c.extend(self.coeffs.iter().map(|x| Q::from_integer(x.clone())));
        QPoly::new(c, ())
    }
}

fn fox_derivative(w: &Word, g: usize, aug: &[i64]) -> Laurent {
    let mut terms: Vec<(i64, i64)> = Vec::new();
    let mut prefix = 0i64;
    for &l in w.letters() {
        let h = l.unsigned_abs() as usize - 1;
        let a = aug[h];
        if l > 0 {
            if h == g {
                terms.push((1, prefix));
            }
            prefix += a;
        } else {
            prefix -= a;
            if h == g {
                terms.push((-1, prefix));
            }
        }
    }
    let Some(low) = terms.iter().map(|t| t.1).min() else {
        return Laurent { low: 0, coeffs: Vec::new() };
    };
    let high = terms.iter().map(|t| t.1).max().unwrap();
    let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
    for (c, e) in terms {
        coeffs[(e - low) as usize] += c;
    }
    Laurent { low, coeffs }
}

/// Integer Laurent polynomial up to units `±t^k`: stored with lowest
/// exponent 0 and positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly { coeffs: Vec::new() }
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly { coeffs: vec![BigInt::one()] }
    }

    pub fn from_ints(c: &[i64]) -> LaurentPoly {
        LaurentPoly::normalized(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    fn normalized(mut c: Vec<BigInt>) -> LaurentPoly {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        let lead = c.iter().position(|x| !x.is_zero()).unwrap_or(c.len());
        c.drain(..lead);
        if c.last().is_some_and(|x| x.is_negative()) {
            c.iter_mut().for_each(|x| *x = -&*x);
        }
        LaurentPoly { coeffs: c }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn degree(&self) -> Option<usize> {
        let n = LaurentPoly::normalized(self.coeffs.clone());
        n.coeffs.len().checked_sub(1)
    }

    fn to_qpoly(&self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| Q::from_integer(c.clone())).collect(), ())
    }

    fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Gcd in `Z[t, t^-1]`, normalized.
    pub fn gcd(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::normalized(other.coeffs.clone());
        }
        if other.is_zero() {
            return LaurentPoly::normalized(self.coeffs.clone());
        }
        let content = self.content().gcd(&other.content());
        let g = self.to_qpoly().gcd(&other.to_qpoly());
        // primitive integer multiple of g
        let den = g.coeffs().iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let ints: Vec<BigInt> = g.coeffs().iter().map(|c| (c * Q::from_integer(den.clone())).to_integer()).collect();
        let cont = ints.iter().fold(BigInt::zero(), |a, c| a.gcd(c));
        LaurentPoly::normalized(ints.into_iter().map(|c| c / &cont * &content).collect())
    }

    fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return LaurentPoly::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        LaurentPoly { coeffs: c }
    }

    pub fn pow(&self, e: u32) -> LaurentPoly {
        let mut out = LaurentPoly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        LaurentPoly::normalized(out.coeffs)
    }

    pub fn product(&self, other: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::normalized(self.mul(other).coeffs)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = LaurentPoly::normalized(self.coeffs.clone());
        let p = n.to_qpoly();
        f.write_str(&crate::trigonal::format_poly(&p, 't'))
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        v.serialize(s)
    }
}

/// Determinant over `Z[t]`, normalized up to units.
fn determinant(mut a: Vec<Vec<QPoly>>) -> LaurentPoly {
    let n = a.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    // Bareiss elimination
    let mut sign = 1i64;
    let mut prev = QPoly::one(&());
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return LaurentPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].scale(&Q::from_integer(sign.into()));
    LaurentPoly::normalized(d.coeffs().iter().map(|c| c.to_integer()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p = Presentation::parse("<a, b | aba = bab, (ab)^3>").unwrap();
        assert_eq!(p.ngens(), 2);
        assert_eq!(p.relators()[0], Word::from_letters([1, 2, 1, -2, -1, -2]));
        assert_eq!(p.relators()[1].len(), 6);
        assert_eq!(Presentation::parse(&p.to_string()).unwrap(), p);
        let c = Presentation::parse("x1, x2 | [x1, x2]").unwrap();
        assert_eq!(c.relators()[0], Word::from_letters([1, 2, -1, -2]));
        assert!(Presentation::parse("<a | b>").is_err());
    }

    #[test]
    fn laurent_normalization() {
        assert_eq!(LaurentPoly::from_ints(&[0, 0, -1, 1, -1]), LaurentPoly::from_ints(&[1, -1, 1]));
        assert_eq!(
            LaurentPoly::from_ints(&[2, 4]).gcd(&LaurentPoly::from_ints(&[6, 12])),
            LaurentPoly::from_ints(&[2, 4])
        );
        assert_eq!(LaurentPoly::from_ints(&[1, -1, 1]).to_string(), "t^2 - t + 1");
    }

    #[test]
    fn fox_derivative_of_commutator() {
        // d/da (a b a^-1 b^-1) = 1 - a b a^-1 -> 1 - t under a, b -> t
        let w = Word::from_letters([1, 2, -1, -2]);
        let d = fox_derivative(&w, 0, &[1, 1]);
        assert_eq!(d.shifted_poly(0), QPoly::from_ints(&[1, -1]));
    }
}
