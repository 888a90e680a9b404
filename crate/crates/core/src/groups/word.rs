//! Free-group words and endomorphisms of free groups.

use std::fmt;

use super::GroupError;

/// A freely reduced word; letter `g + 1` is the generator `g`, `-(g + 1)`
/// its inverse.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<i32>);

impl Word {
    pub fn identity() -> Word {
        Word(Vec::new())
    }

    pub fn generator(g: usize) -> Word {
        Word(vec![g as i32 + 1])
    }

    pub fn from_letters(letters: impl IntoIterator<Item = i32>) -> Word {
        let mut out: Vec<i32> = Vec::new();
        for l in letters {
            assert!(l != 0, "letter 0 is not a generator");
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest generator index used plus one.
    pub fn rank_used(&self) -> usize {
        self.0.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0)
    }

    pub fn mul(&self, other: &Word) -> Word {
        Word::from_letters(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| -l).collect())
    }

    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `by * self * by^-1`.
    pub fn conjugate(&self, by: &Word) -> Word {
        by.mul(self).mul(&by.inverse())
    }

    pub fn cyclically_reduced(&self) -> Word {
        let mut v = self.0.as_slice();
        while v.len() >= 2 && v[0] == -v[v.len() - 1] {
            v = &v[1..v.len() - 1];
        }
        Word(v.to_vec())
    }

    pub fn is_conjugate_to(&self, other: &Word) -> bool {
        let (a, b) = (self.cyclically_reduced(), other.cyclically_reduced());
        if a.len() != b.len() {
            return false;
        }
        if a.is_empty() {
            return true;
        }
        let doubled: Vec<i32> = a.0.iter().chain(a.0.iter()).copied().collect();
        doubled.windows(b.len()).any(|w| w == b.0.as_slice())
    }

    pub fn exponent_sums(&self, ngens: usize) -> Vec<i64> {
        let mut v = vec![0; ngens];
        for &l in &self.0 {
            v[l.unsigned_abs() as usize - 1] += l.signum() as i64;
        }
        v
    }

    /// Replaces generator `g` by `images[g]`.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut out = Vec::new();
        for &l in &self.0 {
            let w = &images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                out.extend_from_slice(&w.0);
            } else {
                out.extend(w.0.iter().rev().map(|x| -x));
            }
        }
        Word::from_letters(out)
    }

    /// Concatenated names with `^-1` (or `^k`) exponents.
    pub fn format(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        let mut s = String::new();
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut run = 1;
            while i + run < self.0.len() && self.0[i + run] == l {
                run += 1;
            }
            s.push_str(&names[l.unsigned_abs() as usize - 1]);
            let e = run as i64 * l.signum() as i64;
            if e != 1 {
                s.push_str(&format!("^{e}"));
            }
            i += run;
        }
        s
    }
}

pub fn default_names(n: usize) -> Vec<String> {
    if n <= 26 {
        (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    } else {
        (0..n).map(|i| format!("x{}", i + 1)).collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format(&default_names(self.rank_used())))
    }
}

/// An endomorphism of the free group on `images.len()` generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Endomorphism {
    images: Vec<Word>,
}

impl Endomorphism {
    pub fn new(images: Vec<Word>) -> Result<Endomorphism, GroupError> {
        let n = images.len();
        if let Some(w) = images.iter().find(|w| w.rank_used() > n) {
            return Err(GroupError::Parse(format!("image {w} uses a generator beyond {n}")));
        }
        Ok(Endomorphism { images })
    }

    pub fn identity(n: usize) -> Endomorphism {
        Endomorphism { images: (0..n).map(Word::generator).collect() }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn apply(&self, w: &Word) -> Word {
        w.substitute(&self.images)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Endomorphism) -> Endomorphism {
        Endomorphism { images: other.images.iter().map(|w| self.apply(w)).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, w)| *w == Word::generator(i))
    }

    /// Whether the images generate the free group (Stallings folding).
    pub fn is_surjective(&self) -> bool {
        let mut edges: Vec<(usize, i32, usize)> = Vec::new();
        let mut nv = 1;
        for w in &self.images {
            let mut v = 0;
            for (k, &l) in w.letters().iter().enumerate() {
                let next = if k + 1 == w.len() {
                    0
                } else {
                    nv += 1;
                    nv - 1
                };
                let (g, from, to) = if l > 0 { (l, v, next) } else { (-l, next, v) };
                edges.push((from, g, to));
                v = next;
            }
        }
        let mut parent: Vec<usize> = (0..nv).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        loop {
            let mut merged = false;
            'scan: for i in 0..edges.len() {
                for j in i + 1..edges.len() {
                    let (a1, g1, b1) = edges[i];
                    let (a2, g2, b2) = edges[j];
                    if g1 != g2 {
                        continue;
                    }
                    let (a1, b1, a2, b2) =
                        (find(&mut parent, a1), find(&mut parent, b1), find(&mut parent, a2), find(&mut parent, b2));
                    if a1 == a2 && b1 != b2 {
                        parent[b1.max(b2)] = b1.min(b2);
                    } else if b1 == b2 && a1 != a2 {
                        parent[a1.max(a2)] = a1.min(a2);
                    } else {
                        continue;
                    }
                    merged = true;
                    break 'scan;
                }
            }
            if !merged {
                break;
            }
        }
        let roots: std::collections::BTreeSet<usize> = (0..nv).map(|v| find(&mut parent, v)).collect();
        let labels: std::collections::BTreeSet<i32> = edges.iter().map(|e| e.1).collect();
        roots.len() == 1 && labels.len() == self.rank()
    }

    /// Inverse by Nielsen length reduction of the images; `None` when the
    /// images do not form a basis.
    pub fn inverse(&self) -> Option<Endomorphism> {
        let n = self.rank();
        let mut u = self.images.clone();
        let mut w: Vec<Word> = (0..n).map(Word::generator).collect();
        loop {
            if u.iter().any(|x| x.is_empty()) {
                return None;
            }
            let mut best: Option<(usize, Word, Word)> = None;
            for i in 0..n {
                for j in 0..n {
                    if i == j {
                        continue;
                    }
                    for e in [1, -1] {
                        let (uj, wj) = (u[j].pow(e), w[j].pow(e));
                        for (cu, cw) in [(u[i].mul(&uj), w[i].mul(&wj)), (uj.mul(&u[i]), wj.mul(&w[i]))] {
                            let gain = u[i].len() as i64 - cu.len() as i64;
                            if gain > 0 && best.as_ref().is_none_or(|b| b.1.len() > cu.len()) {
                                best = Some((i, cu, cw));
                            }
                        }
                    }
                }
            }
            match best {
                Some((i, cu, cw)) => {
                    u[i] = cu;
                    w[i] = cw;
                }
                None => break,
            }
        }
        let mut inv = vec![Word::identity(); n];
        let mut seen = vec![false; n];
        for (ui, wi) in u.iter().zip(&w) {
            if ui.len() != 1 {
                return None;
            }
            let l = ui.letters()[0];
            let g = l.unsigned_abs() as usize - 1;
            if seen[g] {
                return None;
            }
            seen[g] = true;
            inv[g] = if l > 0 { wi.clone() } else { wi.inverse() };
        }
        let inv = Endomorphism { images: inv };
        (self.compose(&inv).is_identity() && inv.compose(self).is_identity()).then_some(inv)
    }

    pub fn format(&self, names: &[String]) -> Vec<String> {
        self.images.iter().map(|w| w.format(names)).collect()
    }
}

/// Singular fibers whose local braid monodromy is listed explicitly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum FiberType {
    /// `Ã0**`
    A0StarStar,
    /// `Ã1*`
    A1Star,
    /// `Ã2*`
    A2Star,
}

impl FiberType {
    pub const ALL: [FiberType; 3] = [FiberType::A0StarStar, FiberType::A1Star, FiberType::A2Star];

    pub fn name(self) -> &'static str {
        match self {
            FiberType::A0StarStar => "A0**",
            FiberType::A1Star => "A1*",
            FiberType::A2Star => "A2*",
        }
    }
}

impl fmt::Display for FiberType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for FiberType {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, GroupError> {
        let t: String = s.trim().trim_start_matches(['~', '\u{0303}']).replace('Ã', "A").replace(['₀'], "0");
        let t = t.replace('₁', "1").replace('₂', "2").to_ascii_uppercase();
        match t.as_str() {
            "A0**" => Ok(FiberType::A0StarStar),
            "A1*" => Ok(FiberType::A1Star),
            "A2*" => Ok(FiberType::A2Star),
            _ => Err(GroupError::UnknownFiber(s.to_string())),
        }
    }
}

/// How `Π x Π⁻¹`-type conjugations in the monodromy list are read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, serde::Serialize)]
pub enum Convention {
    /// Exactly as printed: `x ↦ w x w⁻¹`.
    #[default]
    Literal,
    /// Every conjugation reversed: `x ↦ w⁻¹ x w`.
    Reversed,
}

/// The braid monodromy about a singular fiber of the given type, on the
/// generators `α1, α2, α3` with `Π = α1 α2 α3`.
pub fn monodromy(t: FiberType, conv: Convention) -> Endomorphism {
    let a = |i: usize| Word::generator(i);
    let pi = a(0).mul(&a(1)).mul(&a(2));
    let conj = |x: Word, by: &Word| match conv {
        Convention::Literal => x.conjugate(by),
        Convention::Reversed => x.conjugate(&by.inverse()),
    };
    let images = match t {
        FiberType::A0StarStar => vec![a(1), a(2), conj(a(0), &pi)],
        FiberType::A1Star => vec![a(2), conj(a(1), &a(2)), conj(a(0), &pi)],
        FiberType::A2Star => vec![a(2), conj(a(0), &pi), conj(a(1), &pi)],
    };
    Endomorphism { images }
}

/// `α1 α2 α3`.
pub fn pi_word() -> Word {
    Word::from_letters([1, 2, 3])
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn word() -> impl Strategy<Value = Word> {
        prop::collection::vec(prop::sample::select(vec![1, -1, 2, -2, 3, -3]), 0..12).prop_map(Word::from_letters)
    }

    proptest! {
        #[test]
        fn inverse_cancels(w in word()) {
            prop_assert!(w.mul(&w.inverse()).is_empty());
            prop_assert!(w.letters().windows(2).all(|p| p[0] != -p[1]));
        }

        #[test]
        fn associativity(a in word(), b in word(), c in word()) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn conjugates_are_detected(w in word(), by in word()) {
            prop_assert!(w.conjugate(&by).is_conjugate_to(&w));
        }

        #[test]
        fn substitution_is_a_homomorphism(a in word(), b in word(), x in word(), y in word(), z in word()) {
            let im = [x, y, z];
            prop_assert_eq!(a.mul(&b).substitute(&im), a.substitute(&im).mul(&b.substitute(&im)));
        }
    }

    #[test]
    fn nielsen_inverse_of_braid_generator() {
        // σ1: a ↦ aba⁻¹, b ↦ a
        let s =
            Endomorphism::new(vec![Word::from_letters([1, 2, -1]), Word::generator(0), Word::generator(2)]).unwrap();
        let inv = s.inverse().unwrap();
        assert!(s.compose(&inv).is_identity());
        assert!(s.is_surjective());
        let square = Endomorphism::new(vec![Word::from_letters([1, 1]), Word::generator(1)]).unwrap();
        assert!(!square.is_surjective());
        assert!(square.inverse().is_none());
    }

    #[test]
    fn formatting() {
        let w = Word::from_letters([1, 1, 2, -3, -3, -3]);
        assert_eq!(w.to_string(), "a^2bc^-3");
        assert_eq!(Word::identity().to_string(), "1");
    }
}
