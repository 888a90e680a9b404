//! Fiber types against the sextic singular points they produce, and the
//! non-existence verdicts, assembled from library data.

use serde_json::{json, Value};

use crate::roots::{
    all_embeddings_up_to_isometry, classify_odd_torsion, find_embedding, AdeSymbol, Budget, Family, RootSystemSpec,
    RootsError,
};
use crate::trigonal::{distinguished_label, Kodaira};

/// Fiber names in the `Ã/D̃/Ẽ` notation with their Kodaira types.
pub fn fiber_point_rows() -> Vec<(String, Kodaira)> {
    let mut rows = vec![
        ("~A0".to_string(), Kodaira::I(0)),
        ("~A0*".to_string(), Kodaira::I(1)),
        ("~A0**".to_string(), Kodaira::II),
        ("~A1*".to_string(), Kodaira::III),
        ("~A2*".to_string(), Kodaira::IV),
        ("~E6".to_string(), Kodaira::IVStar),
        ("~E7".to_string(), Kodaira::IIIStar),
        ("~E8".to_string(), Kodaira::IIStar),
    ];
    for p in 1..=3 {
        rows.push((format!("~A{p}"), Kodaira::I(p + 1)));
    }
    for q in 4..=6 {
        rows.push((format!("~D{q}"), Kodaira::IStar(q - 4)));
    }
    rows
}

pub fn fiber_point_json() -> Value {
    Value::Array(
        fiber_point_rows()
            .into_iter()
            .map(|(name, k)| {
                json!({
                    "fiber": name,
                    "kodaira": k.to_string(),
                    "point": distinguished_label(k),
                })
            })
            .collect(),
    )
}

/// Smallest Euler number of a fiber through a singular point of the
/// given type: `I_{p+1}`, `I*_{q-4}`, `IV*`, `III*`, `II*`.
pub fn minimal_fiber_euler(s: AdeSymbol) -> u32 {
    match s.family() {
        Family::A => s.index() + 1,
        Family::D => s.index() + 2,
        Family::E => s.index() + 2,
    }
}

fn spec(s: &str) -> RootSystemSpec {
    s.parse().expect("fixed spec")
}

pub const NON_EMBEDDABLE: [&str; 3] = ["A3+2A2", "A4+2A2", "A6+A2"];

/// `J_{2,i} + Σ` for `i = 0, 1` and the three non-embeddable `Σ`, plus
/// `J_{2,1} + 4A2` (no room for an `I1` fiber).
pub fn no_j10_verdicts() -> Value {
    let mut out = Vec::new();
    for s in NON_EMBEDDABLE {
        let embeds = find_embedding(&spec(s)).is_some();
        for i in 0..2 {
            out.push(json!({
                "set": format!("J_{{2,{i}}}+{s}"),
                "embeds": embeds,
                "prohibited": !embeds,
                "reason": "no embedding into E8",
            }));
        }
    }
    let four = spec("4A2");
    let used: u32 = four.summands().iter().map(|&s| minimal_fiber_euler(s)).sum();
    out.push(json!({
        "set": "J_{2,1}+4A2",
        "embeds": find_embedding(&four).is_some(),
        "euler_of_point_fibers": used,
        "euler_needed": used + 1,
        "prohibited": used + 1 > 12,
        "reason": "an I1 fiber does not fit in the twelve-fiber budget",
    }));
    Value::Array(out)
}

/// `E12 + Σ` for every `Σ` with odd quotient torsion: a dihedral quotient
/// is forced by the torsion,
/// while an `E12` point forces an abelian group.
pub fn no_e12_verdicts(budget: &mut Budget) -> Result<Value, RootsError> {
    let mut out = Vec::new();
    for row in classify_odd_torsion(budget)? {
        let s = row.spec.to_string();
        let classes = all_embeddings_up_to_isometry(&row.spec, budget)?;
        let torsion: Vec<String> = classes.iter().map(|w| w.quotient_torsion().to_string()).collect();
        let dihedral = classes.iter().any(|w| {
            let t = w.quotient_torsion();
            !t.is_trivial() && t.is_odd()
        });
        out.push(json!({
            "set": format!("E12+{s}"),
            "embeds": !classes.is_empty(),
            "torsion": torsion,
            "dihedral_quotient": dihedral,
            "abelian_forced": true,
            "prohibited": dihedral,
            "reason": "dihedral quotient required while the group is abelian",
        }));
    }
    for s in NON_EMBEDDABLE {
        let embeds = find_embedding(&spec(s)).is_some();
        out.push(json!({
            "set": format!("E12+{s}"),
            "embeds": embeds,
            "prohibited": !embeds,
            "reason": "no embedding into E8",
        }));
    }
    Ok(Value::Array(out))
}

pub fn report_tables(budget: &mut Budget) -> Result<Value, RootsError> {
    Ok(json!({
        "fiber_points": fiber_point_json(),
        "no_j10": no_j10_verdicts(),
        "no_e12": no_e12_verdicts(budget)?,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fiber_point_labels() {
        let t = fiber_point_json();
        let find = |f: &str| t.as_array().unwrap().iter().find(|r| r["fiber"] == f).unwrap()["point"].clone();
        assert_eq!(find("~A2*"), "E14");
        assert_eq!(find("~A0**"), "E12");
        assert_eq!(find("~A2"), "J_{2,3}");
        assert_eq!(find("~D5"), "J_{3,1}");
    }

    #[test]
    fn minimal_euler_of_four_cusps_fills_the_budget() {
        let s = spec("4A2");
        assert_eq!(s.summands().iter().map(|&x| minimal_fiber_euler(x)).sum::<u32>(), 12);
    }
}
