//! Finite groups as multiplication tables.

use std::collections::HashMap;

use super::presentation::Presentation;
use super::word::Word;
use super::GroupError;

pub const MAX_TABLE_ORDER: usize = 1000;
pub const MAX_ISO_ORDER: usize = 60;
const MAX_COSETS: usize = 200_000;

/// Elements are `0..order` with `0` the identity; `x * y` means "x, then
/// y" for permutation-built groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    generators: Vec<usize>,
}

impl FiniteGroup {
    /// Checks associativity, the identity `0` and inverses.
    pub fn from_table(name: &str, order: usize, table: Vec<u32>, generators: Vec<usize>) -> Result<Self, GroupError> {
        let bad = |m: &str| Err(GroupError::InvalidGroup(format!("{name}: {m}")));
        if order == 0 || order > MAX_TABLE_ORDER || table.len() != order * order {
            return bad("table size");
        }
        if table.iter().any(|&x| x as usize >= order) {
            return bad("entry out of range");
        }
        let at = |a: usize, b: usize| table[a * order + b] as usize;
        if (0..order).any(|a| at(0, a) != a || at(a, 0) != a) {
            return bad("0 is not the identity");
        }
        let mut inverse = vec![0u32; order];
        for a in 0..order {
            match (0..order).find(|&b| at(a, b) == 0) {
                Some(b) if at(b, a) == 0 => inverse[a] = b as u32,
                _ => return bad("missing inverse"),
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = at(a, b);
                for c in 0..order {
                    if at(ab, c) != at(a, at(b, c)) {
                        return bad("not associative");
                    }
                }
            }
        }
        let g = FiniteGroup { name: name.to_string(), order, table, inverse, generators };
        if g.generated(&g.generators).len() != order {
            return bad("generators do not generate");
        }
        Ok(g)
    }

    /// Closure of permutations of `0..degree`.
    pub fn from_permutations(name: &str, gens: &[Vec<usize>]) -> Result<Self, GroupError> {
        let degree = gens.first().map_or(0, |p| p.len());
        let id: Vec<usize> = (0..degree).collect();
        let mut elems = vec![id.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
        let mut k = 0;
        while k < elems.len() {
            for g in gens {
                let p: Vec<usize> = elems[k].iter().map(|&i| g[i]).collect();
                if !index.contains_key(&p) {
                    if elems.len() >= MAX_TABLE_ORDER {
                        return Err(GroupError::Bound(format!("{name} has order above {MAX_TABLE_ORDER}")));
                    }
                    index.insert(p.clone(), elems.len());
                    elems.push(p);
                }
            }
            k += 1;
        }
        let n = elems.len();
        let mut table = vec![0u32; n * n];
        for (a, pa) in elems.iter().enumerate() {
            for (b, pb) in elems.iter().enumerate() {
                let p: Vec<usize> = pa.iter().map(|&i| pb[i]).collect();
                table[a * n + b] = index[&p] as u32;
            }
        }
        let mut inverse = vec![0u32; n];
        for a in 0..n {
            inverse[a] = (0..n).find(|&b| table[a * n + b] == 0).unwrap() as u32;
        }
        let generators = gens.iter().map(|g| index[g]).collect();
        Ok(FiniteGroup { name: name.to_string(), order: n, table, inverse, generators })
    }

    /// The right regular representation from coset enumeration over the
    /// trivial subgroup.
    pub fn from_presentation(name: &str, p: &Presentation) -> Result<Self, GroupError> {
        let perms = todd_coxeter(p)?;
        if perms.first().map_or(0, |x| x.len()) > MAX_TABLE_ORDER {
            return Err(GroupError::Bound(format!("{name} has order above {MAX_TABLE_ORDER}")));
        }
        let mut g = FiniteGroup::from_permutations(name, &perms)?;
        g.name = name.to_string();
        Ok(g)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn element_order(&self, a: usize) -> usize {
        let (mut x, mut k) = (a, 1);
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Evaluates a word with generator `i` sent to `images[i]`.
    pub fn eval(&self, w: &Word, images: &[usize]) -> usize {
        w.letters().iter().fold(0, |acc, &l| {
            let x = images[l.unsigned_abs() as usize - 1];
            self.mul(acc, if l > 0 { x } else { self.inv(x) })
        })
    }

    /// The subgroup generated by `gens`, as a sorted element list.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut list = vec![0];
        let mut k = 0;
        while k < list.len() {
            for &g in gens {
                let y = self.mul(list[k], g);
                if !seen[y] {
                    seen[y] = true;
                    list.push(y);
                }
            }
            k += 1;
        }
        list.sort_unstable();
        list
    }

    pub fn is_abelian_subset(&self, xs: &[usize]) -> bool {
        xs.iter().all(|&a| xs.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_abelian(&self) -> bool {
        self.is_abelian_subset(&self.generators)
    }

    pub fn center_size(&self) -> usize {
        (0..self.order).filter(|&a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a))).count()
    }

    pub fn commutator_subgroup_size(&self) -> usize {
        let mut comms = Vec::new();
        for a in 0..self.order {
            for b in 0..self.order {
                comms.push(self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b))));
            }
        }
        comms.sort_unstable();
        comms.dedup();
        self.generated(&comms).len()
    }

    /// Sorted multiset of element orders.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.order).map(|a| self.element_order(a)).collect();
        v.sort_unstable();
        v
    }

    fn invariants(&self) -> (usize, Vec<usize>, usize, usize, usize) {
        let squares = {
            let mut v: Vec<usize> = (0..self.order).map(|a| self.mul(a, a)).collect();
            v.sort_unstable();
            v.dedup();
            v.len()
        };
        (self.order, self.order_profile(), self.center_size(), self.commutator_subgroup_size(), squares)
    }

    /// A short generating set, greedily by decreasing element order.
    fn small_generating_set(&self) -> Vec<usize> {
        let mut elems: Vec<usize> = (1..self.order).collect();
        elems.sort_by_key(|&a| std::cmp::Reverse(self.element_order(a)));
        let mut gens = Vec::new();
        let mut span = vec![0];
        for a in elems {
            if span.len() == self.order {
                break;
            }
            if span.binary_search(&a).is_err() {
                gens.push(a);
                span = self.generated(&gens);
            }
        }
        gens
    }

    /// Extends `gens[i] -> images[i]` to a homomorphism if possible.
    fn extend_hom(&self, gens: &[usize], other: &FiniteGroup, images: &[usize]) -> Option<Vec<usize>> {
        let mut map = vec![usize::MAX; self.order];
        map[0] = 0;
        let mut queue = vec![0];
        let mut k = 0;
        while k < queue.len() {
            let x = queue[k];
            for (g, &im) in gens.iter().zip(images) {
                let y = self.mul(x, *g);
                let fy = other.mul(map[x], im);
                if map[y] == usize::MAX {
                    map[y] = fy;
                    queue.push(y);
                } else if map[y] != fy {
                    return None;
                }
            }
            k += 1;
        }
        Some(map)
    }

    pub fn is_isomorphic(&self, other: &FiniteGroup) -> Result<bool, GroupError> {
        if self.order != other.order {
            return Ok(false);
        }
        if self.order > MAX_ISO_ORDER {
            return Err(GroupError::Bound(format!("isomorphism testing is limited to order {MAX_ISO_ORDER}")));
        }
        if self.invariants() != other.invariants() {
            return Ok(false);
        }
        let gens = self.small_generating_set();
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&g| {
                let o = self.element_order(g);
                (0..other.order).filter(|&h| other.element_order(h) == o).collect()
            })
            .collect();
        let mut choice = vec![0usize; gens.len()];
        loop {
            let images: Vec<usize> = choice.iter().zip(&candidates).map(|(&i, c)| c[i]).collect();
            if let Some(map) = self.extend_hom(&gens, other, &images) {
                let mut seen = vec![false; other.order];
                if map.iter().all(|&y| !std::mem::replace(&mut seen[y], true)) {
                    return Ok(true);
                }
            }
            let mut i = 0;
            loop {
                if i == gens.len() {
                    return Ok(false);
                }
                choice[i] += 1;
                if choice[i] < candidates[i].len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
        }
    }
}

/// Coset enumeration (HLT with coincidence handling) over the trivial
/// subgroup; returns the permutation of cosets for each generator.
pub fn todd_coxeter(p: &Presentation) -> Result<Vec<Vec<usize>>, GroupError> {
    let n = p.ngens();
    let cols = 2 * n;
    let col = |l: i32| -> usize {
        let g = l.unsigned_abs() as usize - 1;
        2 * g + usize::from(l < 0)
    };
    let rels: Vec<Vec<usize>> = p.relators().iter().map(|r| r.letters().iter().map(|&l| col(l)).collect()).collect();
    let mut tc = Tc { table: vec![vec![None; cols]], parent: vec![0], queue: Vec::new() };
    let mut c = 0;
    while c < tc.table.len() {
        for r in &rels {
            if tc.parent[c] != c {
                break;
            }
            tc.scan_and_fill(c, r)?;
        }
        if tc.parent[c] == c {
            for x in 0..cols {
                if tc.table[c][x].is_none() {
                    tc.define(c, x)?;
                }
            }
        }
        c += 1;
    }
    let alive: Vec<usize> = (0..tc.table.len()).filter(|&k| tc.parent[k] == k).collect();
    let renum: HashMap<usize, usize> = alive.iter().enumerate().map(|(i, &k)| (k, i)).collect();
    Ok((0..n)
        .map(|g| alive.iter().map(|&k| renum[&tc.rep(tc.table[k][2 * g].expect("complete table"))]).collect())
        .collect())
}

struct Tc {
    table: Vec<Vec<Option<usize>>>,
    parent: Vec<usize>,
    queue: Vec<usize>,
}

impl Tc {
    fn define(&mut self, c: usize, x: usize) -> Result<usize, GroupError> {
        if self.table.len() >= MAX_COSETS {
            return Err(GroupError::Bound(format!("coset enumeration exceeded {MAX_COSETS} cosets")));
        }
        let d = self.table.len();
        self.table.push(vec![None; self.table[0].len()]);
        self.parent.push(d);
        self.table[c][x] = Some(d);
        self.table[d][x ^ 1] = Some(c);
        Ok(d)
    }

    fn rep(&mut self, mut k: usize) -> usize {
        let mut root = k;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[k] != root {
            let next = self.parent[k];
            self.parent[k] = root;
            k = next;
        }
        root
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.parent[hi] = lo;
            self.queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let e = self.queue[i];
            i += 1;
            for x in 0..self.table[e].len() {
                let Some(f) = self.table[e][x] else { continue };
                self.table[f][x ^ 1] = None;
                let (e1, f1) = (self.rep(e), self.rep(f));
                if let Some(t) = self.table[e1][x] {
                    self.merge(f1, t);
                } else if let Some(t) = self.table[f1][x ^ 1] {
                    self.merge(e1, t);
                } else {
                    self.table[e1][x] = Some(f1);
                    self.table[f1][x ^ 1] = Some(e1);
                }
            }
        }
        self.queue.clear();
    }

    fn scan_and_fill(&mut self, c: usize, w: &[usize]) -> Result<(), GroupError> {
        if w.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, w.len() - 1);
        loop {
            while i <= j {
                match self.table[f][w[i]] {
                    Some(t) => {
                        f = t;
                        i += 1;
                    }
                    None => break,
                }
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i {
                match self.table[b][w[j] ^ 1] {
                    Some(t) => {
                        b = t;
                        if j == 0 {
                            // i > j after this step
                            self.coincidence(f, b);
                            return Ok(());
                        }
                        j -= 1;
                    }
                    None => break,
                }
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            } else if i == j {
                self.table[f][w[i]] = Some(b);
                self.table[b][w[i] ^ 1] = Some(f);
                return Ok(());
            } else {
                self.define(f, w[i])?;
            }
        }
    }
}

pub fn cyclic(n: usize) -> FiniteGroup {
    let p: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    FiniteGroup::from_permutations(&format!("C{n}"), &[p]).expect("small cyclic group")
}

/// Symmetries of the regular `n`-gon, of order `2n`.
pub fn dihedral(n: usize) -> FiniteGroup {
    if n <= 2 {
        // the Klein group for n = 2, C2 for n = 1
        let g = if n == 1 { cyclic(2) } else { direct_product(&cyclic(2), &cyclic(2)) };
        return g.with_name(&format!("D{}", 2 * n));
    }
    let r: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let s: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    FiniteGroup::from_permutations(&format!("D{}", 2 * n), &[r, s]).expect("small dihedral group")
}

pub fn symmetric(n: usize) -> FiniteGroup {
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push((0..n).map(|i| (i + 1) % n).collect());
        let mut t: Vec<usize> = (0..n).collect();
        t.swap(0, 1);
        gens.push(t);
    } else {
        gens.push(vec![0]);
    }
    FiniteGroup::from_permutations(&format!("S{n}"), &gens).expect("small symmetric group")
}

pub fn symmetric3() -> FiniteGroup {
    symmetric(3)
}

pub fn alternating(n: usize) -> FiniteGroup {
    let gens: Vec<Vec<usize>> = (2..n.max(3))
        .filter(|_| n >= 3)
        .map(|k| {
            let mut p: Vec<usize> = (0..n).collect();
            p[0] = 1;
            p[1] = k;
            p[k] = 0;
            p
        })
        .collect();
    let gens = if gens.is_empty() { vec![(0..n.max(1)).collect()] } else { gens };
    FiniteGroup::from_permutations(&format!("A{n}"), &gens).expect("small alternating group")
}

pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let (m, n) = (g.order, h.order);
    let idx = |a: usize, b: usize| a * n + b;
    let mut table = vec![0u32; m * n * m * n];
    for a1 in 0..m {
        for b1 in 0..n {
            for a2 in 0..m {
                for b2 in 0..n {
                    table[idx(a1, b1) * m * n + idx(a2, b2)] = idx(g.mul(a1, a2), h.mul(b1, b2)) as u32;
                }
            }
        }
    }
    let mut gens: Vec<usize> = g.generators.iter().map(|&a| idx(a, 0)).collect();
    gens.extend(h.generators.iter().map(|&b| idx(0, b)));
    let inverse = (0..m * n).map(|x| idx(g.inv(x / n), h.inv(x % n)) as u32).collect();
    FiniteGroup { name: format!("{}x{}", g.name, h.name), order: m * n, table, inverse, generators: gens }
}

/// `Z/m ⋊ Z/k` with the generator of `Z/k` acting by `x -> u x`.
pub fn semidirect_cyclic(m: usize, k: usize, unit: i64) -> Result<FiniteGroup, GroupError> {
    let u = unit.rem_euclid(m as i64) as usize;
    let mut pw = vec![1 % m];
    for _ in 1..=k {
        pw.push(pw.last().unwrap() * u % m);
    }
    if num_integer::gcd(u, m) != 1 || pw[k] != 1 % m {
        return Err(GroupError::InvalidGroup(format!("{unit} does not define an action of Z/{k} on Z/{m}")));
    }
    let n = m * k;
    let idx = |a: usize, b: usize| b * m + a;
    let mut table = vec![0u32; n * n];
    for b1 in 0..k {
        for a1 in 0..m {
            for b2 in 0..k {
                for a2 in 0..m {
                    table[idx(a1, b1) * n + idx(a2, b2)] = idx((a1 + pw[b1] * a2) % m, (b1 + b2) % k) as u32;
                }
            }
        }
    }
    let gens = vec![idx(1 % m, 0), idx(0, 1 % k)];
    FiniteGroup::from_table(&format!("C{m}:C{k}"), n, table, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(symmetric(4).order(), 24);
        assert_eq!(alternating(4).order(), 12);
        assert_eq!(dihedral(5).order(), 10);
        assert_eq!(semidirect_cyclic(7, 3, 2).unwrap().order(), 21);
        assert!(semidirect_cyclic(7, 3, 3).is_err());
    }

    #[test]
    fn coset_enumeration() {
        for (text, order) in [
            ("<a, b | a^2, b^3, (ab)^3>", 12),
            ("<a, b | a^2, b^3, (ab)^5>", 60),
            ("<a, b | a^4, a^2 = b^2, bab^-1 = a^-1>", 8),
            ("<a | a^7>", 7),
            ("<a, b | a, b>", 1),
            ("<s, t | (st)^2 = s^3, s^3 = t^3>", 24),
        ] {
            let p = Presentation::parse(text).unwrap();
            assert_eq!(FiniteGroup::from_presentation(text, &p).unwrap().order(), order, "{text}");
        }
    }

    #[test]
    fn isomorphisms() {
        assert!(dihedral(3).is_isomorphic(&symmetric3()).unwrap());
        assert!(cyclic(6).is_isomorphic(&direct_product(&cyclic(2), &cyclic(3))).unwrap());
        assert!(!cyclic(4).is_isomorphic(&direct_product(&cyclic(2), &cyclic(2))).unwrap());
        assert!(!dihedral(4)
            .is_isomorphic(
                &FiniteGroup::from_presentation(
                    "Q8",
                    &Presentation::parse("<a, b | a^4, a^2 = b^2, bab^-1 = a^-1>").unwrap()
                )
                .unwrap()
            )
            .unwrap());
    }

    #[test]
    fn table_validation() {
        let bad = FiniteGroup::from_table("x", 2, vec![0, 1, 1, 1], vec![1]);
        assert!(bad.is_err());
        let c2 = FiniteGroup::from_table("C2", 2, vec![0, 1, 1, 0], vec![1]).unwrap();
        assert!(c2.is_isomorphic(&cyclic(2)).unwrap());
    }
}
