//! Homomorphisms from finitely presented groups to small finite groups.

use super::finite::{FiniteGroup, MAX_TABLE_ORDER};
use super::presentation::Presentation;
use super::GroupError;

/// Largest group order in the catalogue.
pub const CATALOGUE_MAX_ORDER: usize = 24;
/// Upper bound on `|G|^ngens` for brute-force enumeration.
pub const MAX_ASSIGNMENTS: u64 = 50_000_000;

/// All groups of order at most 24 up to isomorphism, by presentation.
pub const CATALOGUE: &[(&str, &str)] = &[
    ("C1", "<a | a>"),
    ("C2", "<a | a^2>"),
    ("C3", "<a | a^3>"),
    ("C4", "<a | a^4>"),
    ("C2xC2", "<a, b | a^2, b^2, ab = ba>"),
    ("C5", "<a | a^5>"),
    ("C6", "<a | a^6>"),
    ("S3", "<r, s | r^3, s^2, srs^-1 = r^-1>"),
    ("C7", "<a | a^7>"),
    ("C8", "<a | a^8>"),
    ("C4xC2", "<a, b | a^4, b^2, ab = ba>"),
    ("C2^3", "<a, b, c | a^2, b^2, c^2, ab = ba, ac = ca, bc = cb>"),
    ("D8", "<r, s | r^4, s^2, srs^-1 = r^-1>"),
    ("Q8", "<a, b | a^4, a^2 = b^2, bab^-1 = a^-1>"),
    ("C9", "<a | a^9>"),
    ("C3xC3", "<a, b | a^3, b^3, ab = ba>"),
    ("C10", "<a | a^10>"),
    ("D10", "<r, s | r^5, s^2, srs^-1 = r^-1>"),
    ("C11", "<a | a^11>"),
    ("C12", "<a | a^12>"),
    ("C6xC2", "<a, b | a^6, b^2, ab = ba>"),
    ("D12", "<r, s | r^6, s^2, srs^-1 = r^-1>"),
    ("A4", "<a, b | a^2, b^3, (ab)^3>"),
    ("Dic12", "<a, b | a^6, b^2 = a^3, bab^-1 = a^-1>"),
    ("C13", "<a | a^13>"),
    ("C14", "<a | a^14>"),
    ("D14", "<r, s | r^7, s^2, srs^-1 = r^-1>"),
    ("C15", "<a | a^15>"),
    ("C16", "<a | a^16>"),
    ("C8xC2", "<a, b | a^8, b^2, ab = ba>"),
    ("C4xC4", "<a, b | a^4, b^4, ab = ba>"),
    ("C4xC2^2", "<a, b, c | a^4, b^2, c^2, ab = ba, ac = ca, bc = cb>"),
    ("C2^4", "<a, b, c, d | a^2, b^2, c^2, d^2, ab = ba, ac = ca, ad = da, bc = cb, bd = db, cd = dc>"),
    ("D16", "<r, s | r^8, s^2, srs^-1 = r^-1>"),
    ("Q16", "<a, b | a^8, b^2 = a^4, bab^-1 = a^-1>"),
    ("SD16", "<a, b | a^8, b^2, bab^-1 = a^3>"),
    ("M16", "<a, b | a^8, b^2, bab^-1 = a^5>"),
    ("C4:C4", "<a, b | a^4, b^4, bab^-1 = a^-1>"),
    ("C2^2:C4", "<a, b, c | a^4, b^2, c^2, ab = ba, bc = cb, cac^-1 = ab>"),
    ("D8xC2", "<r, s, c | r^4, s^2, srs^-1 = r^-1, c^2, rc = cr, sc = cs>"),
    ("Q8xC2", "<a, b, c | a^4, a^2 = b^2, bab^-1 = a^-1, c^2, ac = ca, bc = cb>"),
    ("C4oD8", "<a, r, s | a^4, r^4, s^2, srs^-1 = r^-1, ar = ra, as = sa, a^2 = r^2>"),
    ("C17", "<a | a^17>"),
    ("C18", "<a | a^18>"),
    ("C6xC3", "<a, b | a^6, b^3, ab = ba>"),
    ("D18", "<r, s | r^9, s^2, srs^-1 = r^-1>"),
    ("S3xC3", "<r, s, c | r^3, s^2, srs^-1 = r^-1, c^3, rc = cr, sc = cs>"),
    ("C3^2:C2", "<a, b, s | a^3, b^3, ab = ba, s^2, sas^-1 = a^-1, sbs^-1 = b^-1>"),
    ("C19", "<a | a^19>"),
    ("C20", "<a | a^20>"),
    ("C10xC2", "<a, b | a^10, b^2, ab = ba>"),
    ("D20", "<r, s | r^10, s^2, srs^-1 = r^-1>"),
    ("Dic20", "<a, b | a^10, b^2 = a^5, bab^-1 = a^-1>"),
    ("F20", "<a, b | a^5, b^4, bab^-1 = a^2>"),
    ("C21", "<a | a^21>"),
    ("C7:C3", "<a, b | a^7, b^3, bab^-1 = a^2>"),
    ("C22", "<a | a^22>"),
    ("D22", "<r, s | r^11, s^2, srs^-1 = r^-1>"),
    ("C23", "<a | a^23>"),
    ("C24", "<a | a^24>"),
    ("C12xC2", "<a, b | a^12, b^2, ab = ba>"),
    ("C6xC2^2", "<a, b, c | a^6, b^2, c^2, ab = ba, ac = ca, bc = cb>"),
    ("S4", "<a, b | a^2, b^3, (ab)^4>"),
    ("SL(2,3)", "<s, t | (st)^2 = s^3, s^3 = t^3>"),
    ("Dic24", "<a, b | a^12, b^2 = a^6, bab^-1 = a^-1>"),
    ("C3:C8", "<a, b | a^3, b^8, bab^-1 = a^-1>"),
    ("C4xS3", "<r, s, c | r^3, s^2, srs^-1 = r^-1, c^4, rc = cr, sc = cs>"),
    ("D24", "<r, s | r^12, s^2, srs^-1 = r^-1>"),
    ("C2xDic12", "<a, b, c | a^6, b^2 = a^3, bab^-1 = a^-1, c^2, ac = ca, bc = cb>"),
    ("C3:D8", "<a, r, s | a^3, r^4, s^2, srs^-1 = r^-1, rar^-1 = a^-1, as = sa>"),
    ("C3xD8", "<r, s, c | r^4, s^2, srs^-1 = r^-1, c^3, rc = cr, sc = cs>"),
    ("C3xQ8", "<a, b, c | a^4, a^2 = b^2, bab^-1 = a^-1, c^3, ac = ca, bc = cb>"),
    ("C2xA4", "<a, b, c | a^2, b^3, (ab)^3, c^2, ac = ca, bc = cb>"),
    ("C2^2xS3", "<r, s, c, d | r^3, s^2, srs^-1 = r^-1, c^2, d^2, rc = cr, sc = cs, rd = dr, sd = ds, cd = dc>"),
];

/// The catalogue groups of order at most `bound`, in catalogue order.
pub fn catalogue(bound: usize) -> Result<Vec<FiniteGroup>, GroupError> {
    if bound > CATALOGUE_MAX_ORDER {
        return Err(GroupError::Bound(format!("the catalogue stops at order {CATALOGUE_MAX_ORDER}")));
    }
    let mut out = Vec::new();
    for (name, text) in CATALOGUE {
        let p = Presentation::parse(text)?;
        let g = FiniteGroup::from_presentation(name, &p)?;
        if g.order() <= bound {
            out.push(g);
        }
    }
    Ok(out)
}

fn check_bound(p: &Presentation, g: &FiniteGroup) -> Result<(), GroupError> {
    let total = (g.order() as u64).checked_pow(p.ngens() as u32);
    match total {
        Some(t) if t <= MAX_ASSIGNMENTS && g.order() <= MAX_TABLE_ORDER => Ok(()),
        _ => Err(GroupError::Bound(format!(
            "{}^{} generator assignments exceed {MAX_ASSIGNMENTS}",
            g.order(),
            p.ngens()
        ))),
    }
}

/// Calls `f` on every generator assignment satisfying all relators; stops
/// early when `f` returns `false`.
fn for_each_hom(p: &Presentation, g: &FiniteGroup, mut f: impl FnMut(&[usize]) -> bool) -> Result<(), GroupError> {
    check_bound(p, g)?;
    let n = p.ngens();
    let mut images = vec![0usize; n];
    loop {
        if p.relators().iter().all(|r| g.eval(r, &images) == 0) && !f(&images) {
            return Ok(());
        }
        let mut i = 0;
        loop {
            if i == n {
                return Ok(());
            }
            images[i] += 1;
            if images[i] < g.order() {
                break;
            }
            images[i] = 0;
            i += 1;
        }
    }
}

/// Generator images of all homomorphisms `p -> g`.
pub fn enumerate_homs(p: &Presentation, g: &FiniteGroup) -> Result<Vec<Vec<usize>>, GroupError> {
    let mut out = Vec::new();
    for_each_hom(p, g, |im| {
        out.push(im.to_vec());
        true
    })?;
    Ok(out)
}

pub fn count_homs(p: &Presentation, g: &FiniteGroup) -> Result<u64, GroupError> {
    let mut k = 0;
    for_each_hom(p, g, |_| {
        k += 1;
        true
    })?;
    Ok(k)
}

pub fn count_epis(p: &Presentation, g: &FiniteGroup) -> Result<u64, GroupError> {
    let mut k = 0;
    for_each_hom(p, g, |im| {
        if g.generated(im).len() == g.order() {
            k += 1;
        }
        true
    })?;
    Ok(k)
}

pub fn epimorphism_exists(p: &Presentation, g: &FiniteGroup) -> Result<bool, GroupError> {
    let mut found = false;
    for_each_hom(p, g, |im| {
        found = g.generated(im).len() == g.order();
        !found
    })?;
    Ok(found)
}

/// Number of homomorphisms to each catalogue group of order at most
/// `order_bound`.
pub fn hom_count_spectrum(p: &Presentation, order_bound: usize) -> Result<Vec<(String, u64)>, GroupError> {
    catalogue(order_bound)?.iter().map(|g| Ok((g.name().to_string(), count_homs(p, g)?))).collect()
}
