use std::fmt;
use std::str::FromStr;

use crate::arith::intmat::IntMatrix;
use crate::lattice::GramLattice;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    D,
    E,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpecParseError {
    #[error("unrecognized root system summand '{0}'")]
    BadSummand(String),
    #[error("index out of range for '{0}'")]
    BadIndex(String),
}

/// One of A_p (p >= 1), D_q (q >= 4), E_6, E_7, E_8.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AdeSymbol {
    family: Family,
    index: u32,
}

impl AdeSymbol {
    pub fn new(family: Family, index: u32) -> Option<Self> {
        let ok = match family {
            Family::A => index >= 1,
            Family::D => index >= 4,
            Family::E => (6..=8).contains(&index),
        };
        ok.then_some(AdeSymbol { family, index })
    }

    pub fn a(p: u32) -> Self {
        Self::new(Family::A, p).expect("A_p needs p >= 1")
    }

    pub fn d(q: u32) -> Self {
        Self::new(Family::D, q).expect("D_q needs q >= 4")
    }

    pub fn e(r: u32) -> Self {
        Self::new(Family::E, r).expect("E_r needs r in 6..=8")
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn rank(&self) -> usize {
        self.index as usize
    }

    /// Sort key: E before D before A, larger index first.
    fn key(&self) -> (u8, std::cmp::Reverse<u32>) {
        let f = match self.family {
            Family::E => 0,
            Family::D => 1,
            Family::A => 2,
        };
        (f, std::cmp::Reverse(self.index))
    }

    /// Dynkin edges on the local node labels `0..rank`. A_n is the chain;
    /// D_n is the chain `0..n-1` with node `n-1` attached to `n-3`; E_n is
    /// the chain `0..n-1` with node `n-1` attached to node 2.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank();
        match self.family {
            Family::A => (0..n - 1).map(|i| (i, i + 1)).collect(),
            Family::D => {
                let mut e: Vec<_> = (0..n - 2).map(|i| (i, i + 1)).collect();
                e.push((n - 3, n - 1));
                e
            }
            Family::E => {
                let mut e: Vec<_> = (0..n - 2).map(|i| (i, i + 1)).collect();
                e.push((2, n - 1));
                e
            }
        }
    }

    /// Generators of the Dynkin diagram automorphism group, as
    /// permutations of the local labels.
    pub fn diagram_automorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let id: Vec<usize> = (0..n).collect();
        match self.family {
            Family::A if n >= 2 => vec![(0..n).rev().collect()],
            Family::A => Vec::new(),
            Family::D => {
                let mut swap = id.clone();
                swap.swap(n - 2, n - 1);
                let mut gens = vec![swap];
                if n == 4 {
                    let mut other = id;
                    other.swap(0, 2);
                    gens.push(other);
                }
                gens
            }
            Family::E if n == 6 => {
                let mut flip: Vec<usize> = (0..5).rev().collect();
                flip.push(5);
                vec![flip]
            }
            Family::E => Vec::new(),
        }
    }

    /// Negative definite Cartan matrix (roots of square -2, adjacent
    /// simple roots with product 1).
    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut g = vec![vec![0i64; n]; n];
        for (i, row) in g.iter_mut().enumerate() {
            row[i] = -2;
        }
        for (i, j) in self.edges() {
            g[i][j] = 1;
            g[j][i] = 1;
        }
        g
    }

    /// Milnor number of the simple singularity of this type.
    pub fn milnor(&self) -> usize {
        self.rank()
    }

    /// Number of local branches of the curve singularity of this type.
    pub fn branches(&self) -> usize {
        match (self.family, self.index) {
            (Family::A, n) => {
                if n % 2 == 0 {
                    1
                } else {
                    2
                }
            }
            (Family::D, n) => {
                if n % 2 == 0 {
                    3
                } else {
                    2
                }
            }
            (Family::E, 7) => 2,
            (Family::E, _) => 1,
        }
    }

    /// `delta = (mu + r - 1) / 2`.
    pub fn delta(&self) -> usize {
        (self.milnor() + self.branches() - 1) / 2
    }
}

impl PartialOrd for AdeSymbol {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AdeSymbol {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for AdeSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.index)
    }
}

impl FromStr for AdeSymbol {
    type Err = SpecParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next() {
            Some('A') | Some('a') => Family::A,
            Some('D') | Some('d') => Family::D,
            Some('E') | Some('e') => Family::E,
            _ => return Err(SpecParseError::BadSummand(s.to_string())),
        };
        let rest = chars.as_str().trim_start_matches('_');
        let index: u32 = rest.parse().map_err(|_| SpecParseError::BadSummand(s.to_string()))?;
        AdeSymbol::new(family, index).ok_or_else(|| SpecParseError::BadIndex(s.to_string()))
    }
}

/// Multiset of ADE symbols, kept in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct RootSystemSpec {
    summands: Vec<AdeSymbol>,
}

impl RootSystemSpec {
    pub fn new(mut summands: Vec<AdeSymbol>) -> Self {
        summands.sort();
        RootSystemSpec { summands }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn summands(&self) -> &[AdeSymbol] {
        &self.summands
    }

    pub fn rank(&self) -> usize {
        self.summands.iter().map(|s| s.rank()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn plus(&self, other: &RootSystemSpec) -> RootSystemSpec {
        Self::new([self.summands.clone(), other.summands.clone()].concat())
    }

    pub fn with(&self, s: AdeSymbol) -> RootSystemSpec {
        let mut v = self.summands.clone();
        v.push(s);
        Self::new(v)
    }

    /// Removes one copy of `s`, if present.
    pub fn without(&self, s: AdeSymbol) -> Option<RootSystemSpec> {
        let pos = self.summands.iter().position(|&t| t == s)?;
        let mut v = self.summands.clone();
        v.remove(pos);
        Some(Self::new(v))
    }

    /// Offsets of each summand in the concatenated simple-root list.
    fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.summands
            .iter()
            .map(|s| {
                let o = acc;
                acc += s.rank();
                o
            })
            .collect()
    }

    /// Negative definite Cartan matrix of the concatenated simple roots.
    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut g = vec![vec![0i64; n]; n];
        for (s, off) in self.summands.iter().zip(self.offsets()) {
            for (i, row) in s.cartan().iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    g[off + i][off + j] = v;
                }
            }
        }
        g
    }

    pub fn lattice(&self) -> GramLattice {
        GramLattice::new(IntMatrix::from_rows(&self.cartan())).expect("Cartan matrix is symmetric")
    }

    /// Generators of the automorphism group of the Dynkin diagram, as
    /// permutations of the simple roots: each summand's own symmetries
    /// plus exchanges of equal adjacent summands.
    pub fn diagram_automorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let offs = self.offsets();
        let mut gens = Vec::new();
        for (s, &off) in self.summands.iter().zip(&offs) {
            for local in s.diagram_automorphisms() {
                let mut p: Vec<usize> = (0..n).collect();
                for (i, &j) in local.iter().enumerate() {
                    p[off + i] = off + j;
                }
                gens.push(p);
            }
        }
        for k in 1..self.summands.len() {
            if self.summands[k] == self.summands[k - 1] {
                let r = self.summands[k].rank();
                let (a, b) = (offs[k - 1], offs[k]);
                let mut p: Vec<usize> = (0..n).collect();
                for i in 0..r {
                    p[a + i] = b + i;
                    p[b + i] = a + i;
                }
                gens.push(p);
            }
        }
        gens
    }

    /// Every spec of total rank at most `max_rank`, in canonical order.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<RootSystemSpec> {
        let symbols = all_symbols(max_rank);
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(
            symbols: &[AdeSymbol],
            start: usize,
            left: usize,
            cur: &mut Vec<AdeSymbol>,
            out: &mut Vec<RootSystemSpec>,
        ) {
            out.push(RootSystemSpec { summands: cur.clone() });
            for (k, s) in symbols.iter().enumerate().skip(start) {
                if s.rank() <= left {
                    cur.push(*s);
                    rec(symbols, k, left - s.rank(), cur, out);
                    cur.pop();
                }
            }
        }
        rec(&symbols, 0, max_rank, &mut cur, &mut out);
        out
    }
}

/// All ADE symbols of rank at most `max_rank`, in canonical order.
pub fn all_symbols(max_rank: usize) -> Vec<AdeSymbol> {
    let mut v = Vec::new();
    for r in 1..=max_rank as u32 {
        for f in [Family::A, Family::D, Family::E] {
            if let Some(s) = AdeSymbol::new(f, r) {
                v.push(s);
            }
        }
    }
    v.sort();
    v
}

impl fmt::Display for RootSystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.summands.len() {
            let s = self.summands[i];
            let mut k = 1;
            while i + k < self.summands.len() && self.summands[i + k] == s {
                k += 1;
            }
            parts.push(if k == 1 { s.to_string() } else { format!("{k}{s}") });
            i += k;
        }
        write!(f, "{}", parts.join("+"))
    }
}

impl FromStr for RootSystemSpec {
    type Err = SpecParseError;

    /// Grammar: summands joined by `+`, each an optional multiplicity
    /// followed by a symbol (`3A2+A1`, `E6+A2`). `0` or the empty string
    /// is the empty system.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Self::empty());
        }
        let mut v = Vec::new();
        for term in s.split(['+', '⊕']) {
            let term = term.trim();
            let digits: String = term.chars().take_while(|c| c.is_ascii_digit()).collect();
            let mult: usize = if digits.is_empty() {
                1
            } else {
                digits.parse().map_err(|_| SpecParseError::BadSummand(term.to_string()))?
            };
            let sym: AdeSymbol = term[digits.len()..].parse()?;
            v.extend(std::iter::repeat_n(sym, mult));
        }
        Ok(Self::new(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{discriminant_group, TorsionGroup};

    #[test]
    fn parse_and_print_canonically() {
        let s: RootSystemSpec = "A1+A2+A2+A2".parse().unwrap();
        assert_eq!(s.to_string(), "3A2+A1");
        let t: RootSystemSpec = "A2 + E6".parse().unwrap();
        assert_eq!(t.to_string(), "E6+A2");
        assert_eq!(t.rank(), 8);
        assert!("D3".parse::<RootSystemSpec>().is_err());
        assert!("X2".parse::<RootSystemSpec>().is_err());
    }

    #[test]
    fn discriminants_of_irreducible_types() {
        let cases = [
            ("A2", vec![3]),
            ("A4", vec![5]),
            ("D4", vec![2, 2]),
            ("D5", vec![4]),
            ("E6", vec![3]),
            ("E7", vec![2]),
            ("E8", vec![]),
        ];
        for (s, f) in cases {
            let spec: RootSystemSpec = s.parse().unwrap();
            assert_eq!(discriminant_group(&spec.lattice()).unwrap(), TorsionGroup::from_factors(&f).unwrap(), "{s}");
        }
    }

    #[test]
    fn delta_invariants() {
        assert_eq!(AdeSymbol::a(2).delta(), 1);
        assert_eq!(AdeSymbol::a(1).delta(), 1);
        assert_eq!(AdeSymbol::a(4).delta(), 2);
        assert_eq!(AdeSymbol::d(4).delta(), 3);
        assert_eq!(AdeSymbol::e(6).delta(), 3);
        assert_eq!(AdeSymbol::e(7).delta(), 4);
        assert_eq!(AdeSymbol::e(8).delta(), 4);
    }

    #[test]
    fn automorphisms_preserve_cartan() {
        for spec in RootSystemSpec::all_up_to_rank(6) {
            let c = spec.cartan();
            for p in spec.diagram_automorphisms() {
                for i in 0..c.len() {
                    for j in 0..c.len() {
                        assert_eq!(c[i][j], c[p[i]][p[j]], "{spec}");
                    }
                }
            }
        }
    }
}
