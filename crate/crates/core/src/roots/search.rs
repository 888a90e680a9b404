//! Backtracking over tuples of E8 roots with prescribed products, and
//! orbit bookkeeping under the Weyl group W(E8) = Aut(E8).

use std::collections::HashMap;

use super::e8::{bits_and, bits_is_empty, bits_iter, data, Bits, ALL, ROOT_COUNT};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SearchError {
    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),
}

/// Node counter shared by one search call.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    #[inline]
    fn tick(&mut self) -> Result<(), SearchError> {
        self.used += 1;
        if self.used > self.limit {
            Err(SearchError::BudgetExceeded(self.limit))
        } else {
            Ok(())
        }
    }
}

/// Roots extending `tuple` by a root with products `row[i]` against
/// `tuple[i]`.
fn candidates(tuple: &[usize], row: &[i8]) -> Bits {
    let d = data();
    let mut c = ALL;
    for (&t, &v) in tuple.iter().zip(row) {
        c = bits_and(&c, d.mask(t, v));
        if bits_is_empty(&c) {
            break;
        }
    }
    c
}

/// First tuple of roots with Gram matrix `gram` (rows of products), the
/// first root fixed by transitivity of W(E8) on roots.
pub fn find_tuple(gram: &[Vec<i64>]) -> Option<Vec<usize>> {
    let n = gram.len();
    if n == 0 {
        return Some(Vec::new());
    }
    if n > 8 {
        return None;
    }
    let rows: Vec<Vec<i8>> = gram.iter().map(|r| r.iter().map(|&v| v as i8).collect()).collect();
    let mut tuple = vec![0usize];
    fn dfs(tuple: &mut Vec<usize>, rows: &[Vec<i8>]) -> bool {
        let k = tuple.len();
        if k == rows.len() {
            return true;
        }
        let c = candidates(tuple, &rows[k][..k]);
        for r in bits_iter(c) {
            tuple.push(r);
            if dfs(tuple, rows) {
                return true;
            }
            tuple.pop();
        }
        false
    }
    dfs(&mut tuple, &rows).then_some(tuple)
}

/// W(E8)-invariant of an ordered tuple: the sorted multiset of product
/// vectors `(v . t_1, ..., v . t_k)` over all roots `v`.
pub fn signature(tuple: &[usize]) -> Vec<u32> {
    let d = data();
    let mut sig: Vec<u32> =
        (0..ROOT_COUNT).map(|v| tuple.iter().fold(0u32, |acc, &t| acc * 5 + (d.dot(v, t) + 2) as u32)).collect();
    sig.sort_unstable();
    sig
}

/// Order in which the images of the simple roots are searched: each one
/// adjacent to an earlier one.
const BASIS_ORDER: [usize; 8] = [0, 2, 3, 1, 4, 5, 6, 7];

/// Whether some isometry of E8 maps `t[i]` to `s[i]` for every `i`.
/// Images of the simple roots are chosen by backtracking subject to the
/// Cartan relations and the products with `s`; any such choice is an
/// isometry, and it then sends `t` to `s`.
pub fn equivalent(t: &[usize], s: &[usize], budget: &mut Budget) -> Result<bool, SearchError> {
    if t.len() != s.len() {
        return Ok(false);
    }
    let d = data();
    for i in 0..t.len() {
        for j in 0..t.len() {
            if d.dot(t[i], t[j]) != d.dot(s[i], s[j]) {
                return Ok(false);
            }
        }
    }
    let simple = d.simple;
    // constraint masks from s, per basis root
    let base: Vec<Bits> = BASIS_ORDER
        .iter()
        .map(|&b| {
            let mut c = ALL;
            for (ti, si) in t.iter().zip(s) {
                c = bits_and(&c, d.mask(*si, d.dot(simple[b], *ti)));
            }
            c
        })
        .collect();
    let mut images = [0usize; 8];
    fn dfs(level: usize, images: &mut [usize; 8], base: &[Bits], budget: &mut Budget) -> Result<bool, SearchError> {
        if level == 8 {
            return Ok(true);
        }
        let d = data();
        let b = BASIS_ORDER[level];
        let mut c = base[level];
        for l in 0..level {
            let bl = BASIS_ORDER[l];
            c = bits_and(&c, d.mask(images[l], d.dot(d.simple[b], d.simple[bl])));
            if bits_is_empty(&c) {
                return Ok(false);
            }
        }
        for r in bits_iter(c) {
            budget.tick()?;
            images[level] = r;
            if dfs(level + 1, images, base, budget)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
    dfs(0, &mut images, &base, budget)
}

/// Orbit representatives of ordered tuples, bucketed by signature.
#[derive(Debug, Clone, Default)]
pub struct OrbitSet {
    reps: Vec<Vec<usize>>,
    buckets: HashMap<Vec<u32>, Vec<usize>>,
}

impl OrbitSet {
    pub fn reps(&self) -> &[Vec<usize>] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Index of the representative equivalent to `t`, if any.
    pub fn find(&self, t: &[usize], budget: &mut Budget) -> Result<Option<usize>, SearchError> {
        let sig = signature(t);
        if let Some(b) = self.buckets.get(&sig) {
            for &idx in b {
                if equivalent(t, &self.reps[idx], budget)? {
                    return Ok(Some(idx));
                }
            }
        }
        Ok(None)
    }

    /// Adds `t` unless an equivalent tuple is present; returns its index.
    pub fn insert(&mut self, t: Vec<usize>, budget: &mut Budget) -> Result<usize, SearchError> {
        let sig = signature(&t);
        if let Some(b) = self.buckets.get(&sig) {
            for &idx in b {
                if equivalent(&t, &self.reps[idx], budget)? {
                    return Ok(idx);
                }
            }
        }
        let idx = self.reps.len();
        self.reps.push(t);
        self.buckets.entry(sig).or_default().push(idx);
        Ok(idx)
    }

    /// The single orbit of one root.
    pub fn single_root() -> Self {
        let mut o = OrbitSet::default();
        let t = vec![0usize];
        o.buckets.insert(signature(&t), vec![0]);
        o.reps.push(t);
        o
    }

    /// The orbit of the empty tuple.
    pub fn empty_tuple() -> Self {
        let mut o = OrbitSet::default();
        o.buckets.insert(signature(&[]), vec![0]);
        o.reps.push(Vec::new());
        o
    }

    /// Orbits of tuples extending these by one root with products `row`.
    pub fn extend(&self, row: &[i8], budget: &mut Budget) -> Result<OrbitSet, SearchError> {
        if self.reps.first().is_some_and(|r| r.is_empty()) {
            return Ok(Self::single_root());
        }
        let mut out = OrbitSet::default();
        for t in &self.reps {
            for r in bits_iter(candidates(t, row)) {
                budget.tick()?;
                let mut s = t.clone();
                s.push(r);
                out.insert(s, budget)?;
            }
        }
        Ok(out)
    }
}

/// Orbits under W(E8) of ordered tuples with the given Gram matrix.
pub fn ordered_orbits(gram: &[Vec<i64>], budget: &mut Budget) -> Result<OrbitSet, SearchError> {
    let mut orbits = OrbitSet::empty_tuple();
    for (k, row) in gram.iter().enumerate() {
        let row: Vec<i8> = row[..k].iter().map(|&v| v as i8).collect();
        orbits = orbits.extend(&row, budget)?;
        if orbits.is_empty() {
            break;
        }
    }
    Ok(orbits)
}

/// Groups ordered orbits into classes of unordered embeddings: two
/// ordered tuples give isomorphic embeddings when they differ by an
/// isometry of E8 composed with a Dynkin diagram automorphism.
pub fn merge_by_automorphisms(
    orbits: &OrbitSet,
    generators: &[Vec<usize>],
    budget: &mut Budget,
) -> Result<Vec<Vec<usize>>, SearchError> {
    let n = orbits.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for a in 0..n {
        let t = &orbits.reps()[a];
        for p in generators {
            let moved: Vec<usize> = p.iter().map(|&j| t[j]).collect();
            let b = orbits.find(&moved, budget)?.expect("orbit list is closed under diagram automorphisms");
            let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut seen: HashMap<usize, usize> = HashMap::new();
    for i in 0..n {
        let r = root(&mut parent, i);
        let slot = *seen.entry(r).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[slot].push(i);
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_roots_are_one_orbit() {
        let mut b = Budget::new(1_000_000);
        let d = data();
        assert!(equivalent(&[0], &[137], &mut b).unwrap());
        let neg = d.roots.iter().position(|r| *r == d.roots[5].map(|c| -c)).unwrap();
        assert!(equivalent(&[5], &[neg], &mut b).unwrap());
    }

    #[test]
    fn orthogonal_pairs_form_one_orbit() {
        let mut b = Budget::new(10_000_000);
        let o = ordered_orbits(&[vec![-2, 0], vec![0, -2]], &mut b).unwrap();
        assert_eq!(o.len(), 1);
    }

    #[test]
    fn budget_is_enforced() {
        let mut b = Budget::new(3);
        let r = ordered_orbits(&[vec![-2, 0], vec![0, -2]], &mut b);
        assert_eq!(r.unwrap_err(), SearchError::BudgetExceeded(3));
    }
}
