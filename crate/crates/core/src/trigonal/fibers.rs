//! Kodaira types of the singular fibers, from the orders of vanishing of
//! P, Q and the discriminant.

use std::cmp::Ordering;
use std::fmt;

use serde_json::{json, Value};

use super::{ReducedModel, TrigonalError};
use crate::arith::factor::{factor_rational, poly_order};
use crate::arith::poly::QPoly;
use crate::arith::rational::format_q;
use crate::arith::Q;
use crate::roots::{AdeSymbol, RootSystemSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kodaira {
    /// `I_n`; `I_0` is a smooth fiber.
    I(u32),
    II,
    III,
    IV,
    /// `I_n^*`.
    IStar(u32),
    IVStar,
    IIIStar,
    IIStar,
    NonMinimal,
}

impl Kodaira {
    /// Characteristic zero Tate table. `None` orders are infinite.
    pub fn from_orders(p: Option<usize>, q: Option<usize>, delta: usize) -> Kodaira {
        let p = p.unwrap_or(usize::MAX / 4);
        let q = q.unwrap_or(usize::MAX / 4);
        if p >= 4 && q >= 6 {
            return Kodaira::NonMinimal;
        }
        if p == 0 || q == 0 {
            return Kodaira::I(delta as u32);
        }
        match (3 * p).min(2 * q) {
            2 => Kodaira::II,
            3 => Kodaira::III,
            4 => Kodaira::IV,
            6 => Kodaira::IStar(delta as u32 - 6),
            8 => Kodaira::IVStar,
            9 => Kodaira::IIIStar,
            10 => Kodaira::IIStar,
            _ => unreachable!("min(3p, 2q) takes no other value below 12"),
        }
    }

    /// Euler characteristic of the fiber, equal to the order of the
    /// discriminant.
    pub fn euler(&self) -> Option<u32> {
        Some(match *self {
            Kodaira::I(n) => n,
            Kodaira::II => 2,
            Kodaira::III => 3,
            Kodaira::IV => 4,
            Kodaira::IStar(n) => n + 6,
            Kodaira::IVStar => 8,
            Kodaira::IIIStar => 9,
            Kodaira::IIStar => 10,
            Kodaira::NonMinimal => return None,
        })
    }

    /// The singular point of the trigonal curve in this fiber, if any.
    pub fn ade(&self) -> Option<AdeSymbol> {
        match *self {
            Kodaira::I(n) if n >= 2 => Some(AdeSymbol::a(n - 1)),
            Kodaira::III => Some(AdeSymbol::a(1)),
            Kodaira::IV => Some(AdeSymbol::a(2)),
            Kodaira::IStar(n) => Some(AdeSymbol::d(n + 4)),
            Kodaira::IVStar => Some(AdeSymbol::e(6)),
            Kodaira::IIIStar => Some(AdeSymbol::e(7)),
            Kodaira::IIStar => Some(AdeSymbol::e(8)),
            _ => None,
        }
    }

    /// Name of the affine Dynkin diagram attached to the fiber.
    pub fn affine_name(&self) -> String {
        match *self {
            Kodaira::I(0) => "~A0".into(),
            Kodaira::I(1) => "~A0*".into(),
            Kodaira::II => "~A0**".into(),
            Kodaira::III => "~A1*".into(),
            Kodaira::IV => "~A2*".into(),
            Kodaira::I(n) => format!("~A{}", n - 1),
            Kodaira::IStar(n) => format!("~D{}", n + 4),
            Kodaira::IVStar => "~E6".into(),
            Kodaira::IIIStar => "~E7".into(),
            Kodaira::IIStar => "~E8".into(),
            Kodaira::NonMinimal => "non-minimal".into(),
        }
    }
}

impl fmt::Display for Kodaira {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kodaira::I(n) => write!(f, "I{n}"),
            Kodaira::II => f.write_str("II"),
            Kodaira::III => f.write_str("III"),
            Kodaira::IV => f.write_str("IV"),
            Kodaira::IStar(n) => write!(f, "I{n}*"),
            Kodaira::IVStar => f.write_str("IV*"),
            Kodaira::IIIStar => f.write_str("III*"),
            Kodaira::IIStar => f.write_str("II*"),
            Kodaira::NonMinimal => f.write_str("NonMinimal"),
        }
    }
}

/// A point of the base line: rational, a Galois orbit given by its monic
/// irreducible minimal polynomial, or infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FiberLocation {
    Rational(Q),
    Orbit(QPoly),
    Infinity,
}

impl FiberLocation {
    fn from_factor(g: &QPoly) -> FiberLocation {
        if g.degree() == Some(1) {
            FiberLocation::Rational(-g.coeff(0) / g.coeff(1))
        } else {
            FiberLocation::Orbit(g.monic())
        }
    }

    /// Minimal polynomial of the location (`None` at infinity).
    pub fn minpoly(&self) -> Option<QPoly> {
        match self {
            FiberLocation::Rational(r) => Some(QPoly::linear_root(r)),
            FiberLocation::Orbit(g) => Some(g.clone()),
            FiberLocation::Infinity => None,
        }
    }

    pub fn orbit_size(&self) -> usize {
        match self {
            FiberLocation::Orbit(g) => g.degree().unwrap_or(1),
            _ => 1,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            FiberLocation::Rational(r) => Value::String(format_q(r)),
            FiberLocation::Orbit(g) => json!({ "minpoly": g.coeffs().iter().map(format_q).collect::<Vec<_>>() }),
            FiberLocation::Infinity => Value::String("inf".into()),
        }
    }

    fn rank(&self) -> u8 {
        match self {
            FiberLocation::Rational(_) => 0,
            FiberLocation::Orbit(_) => 1,
            FiberLocation::Infinity => 2,
        }
    }
}

impl PartialOrd for FiberLocation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FiberLocation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (FiberLocation::Rational(a), FiberLocation::Rational(b)) => a.cmp(b),
            (FiberLocation::Orbit(a), FiberLocation::Orbit(b)) => poly_order(a, b),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl fmt::Display for FiberLocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiberLocation::Rational(r) => f.write_str(&format_q(r)),
            FiberLocation::Orbit(g) => write!(f, "roots of {}", super::format_poly(g, 'x')),
            FiberLocation::Infinity => f.write_str("inf"),
        }
    }
}

/// Orders of P, Q and the discriminant; `None` for an identically zero
/// coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Orders {
    pub p: Option<usize>,
    pub q: Option<usize>,
    pub delta: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberReport {
    pub location: FiberLocation,
    pub kodaira: Kodaira,
    pub orders: Orders,
    pub euler: u32,
}

impl FiberReport {
    pub fn orbit_size(&self) -> usize {
        self.location.orbit_size()
    }

    pub fn to_json(&self) -> Value {
        let ord = |o: Option<usize>| o.map(Value::from).unwrap_or_else(|| Value::String("inf".into()));
        json!({
            "location": self.location.to_json(),
            "kodaira": self.kodaira.to_string(),
            "fiber": self.kodaira.affine_name(),
            "orders": { "P": ord(self.orders.p), "Q": ord(self.orders.q), "delta": self.orders.delta },
            "euler": self.euler,
            "orbit_size": self.orbit_size(),
        })
    }
}

fn report(location: FiberLocation, orders: Orders) -> FiberReport {
    let kodaira = Kodaira::from_orders(orders.p, orders.q, orders.delta);
    FiberReport { location, kodaira, orders, euler: orders.delta as u32 }
}

fn orders_at_infinity(m: &ReducedModel) -> Orders {
    let weight = |f: &QPoly, w: usize| f.degree().map(|d| w - d);
    Orders { p: weight(m.p(), 4), q: weight(m.q(), 6), delta: 12 - m.delta().degree().unwrap_or(0) }
}

/// The fiber over a given location; smooth fibers come out as `I0`.
pub fn fiber_at(m: &ReducedModel, location: &FiberLocation) -> FiberReport {
    match location.minpoly() {
        None => report(FiberLocation::Infinity, orders_at_infinity(m)),
        Some(g) => {
            let orders =
                Orders { p: m.p().valuation(&g), q: m.q().valuation(&g), delta: m.delta().valuation(&g).unwrap_or(0) };
            report(location.clone(), orders)
        }
    }
}

/// One report per Galois orbit of singular fibers, infinity last.
pub fn singular_fibers(m: &ReducedModel) -> Vec<FiberReport> {
    let mut out: Vec<FiberReport> =
        factor_rational(&m.delta()).into_iter().map(|(g, _)| fiber_at(m, &FiberLocation::from_factor(&g))).collect();
    let inf = orders_at_infinity(m);
    if inf.delta > 0 {
        out.push(report(FiberLocation::Infinity, inf));
    }
    out.sort_by(|a, b| a.location.cmp(&b.location));
    out
}

/// Singularities of the trigonal curve read off its singular fibers.
pub fn sigma_from_fibers(m: &ReducedModel) -> Result<RootSystemSpec, TrigonalError> {
    let mut summands = Vec::new();
    for f in singular_fibers(m) {
        if f.kodaira == Kodaira::NonMinimal {
            return Err(TrigonalError::NonMinimal(f.location.to_string()));
        }
        if let Some(s) = f.kodaira.ade() {
            summands.extend(std::iter::repeat_n(s, f.orbit_size()));
        }
    }
    Ok(RootSystemSpec::new(summands))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trigonal::TrigonalCurve;

    fn fibers(t: &str) -> Vec<FiberReport> {
        singular_fibers(&TrigonalCurve::parse(t).unwrap().reduce())
    }

    fn total(f: &[FiberReport]) -> usize {
        f.iter().map(|r| r.euler as usize * r.orbit_size()).sum()
    }

    #[test]
    fn three_cusps() {
        let f = fibers("y^3 + (x^3 + 1)^2");
        assert_eq!(f.len(), 2);
        let kinds: Vec<(Kodaira, usize)> = f.iter().map(|r| (r.kodaira, r.orbit_size())).collect();
        assert_eq!(kinds, vec![(Kodaira::IV, 1), (Kodaira::IV, 2)]);
        assert_eq!(total(&f), 12);
        let m = TrigonalCurve::parse("y^3 + (x^3 + 1)^2").unwrap().reduce();
        assert_eq!(sigma_from_fibers(&m).unwrap().to_string(), "3A2");
    }

    #[test]
    fn euler_matches_table_and_merges() {
        let e = |k: Kodaira| k.euler().unwrap();
        assert_eq!(e(Kodaira::II), e(Kodaira::I(1)) + e(Kodaira::I(1)));
        assert_eq!(e(Kodaira::III), e(Kodaira::I(2)) + e(Kodaira::I(1)));
        for (p, q, d, k) in [
            (Some(0), Some(0), 3, Kodaira::I(3)),
            (Some(1), Some(1), 2, Kodaira::II),
            (Some(1), Some(2), 3, Kodaira::III),
            (None, Some(2), 4, Kodaira::IV),
            (Some(2), Some(3), 8, Kodaira::IStar(2)),
            (Some(3), Some(4), 8, Kodaira::IVStar),
            (Some(3), None, 9, Kodaira::IIIStar),
            (Some(4), Some(5), 10, Kodaira::IIStar),
            (Some(4), Some(6), 12, Kodaira::NonMinimal),
        ] {
            let got = Kodaira::from_orders(p, q, d);
            assert_eq!(got, k);
            if k != Kodaira::NonMinimal {
                assert_eq!(got.euler().unwrap() as usize, d);
            }
        }
    }

    #[test]
    fn transverse_cusp_is_i3() {
        let f = fibers("y^3 - y^2 - x^3 y + x^3");
        let at0 = f.iter().find(|r| r.location == FiberLocation::Rational(Q::from_integer(0.into()))).unwrap();
        assert_eq!(at0.kodaira, Kodaira::I(3));
        assert_eq!(at0.kodaira.ade(), Some(AdeSymbol::a(2)));
        assert_eq!(total(&f), 12);
    }

    #[test]
    fn fiber_at_infinity() {
        // P = -3, Q = 2 - x^5 leaves a type II fiber at infinity...
        let f = fibers("y^3 - 3y + 2 - x^5");
        assert_eq!(total(&f), 12);
        let inf = f.last().unwrap();
        assert_eq!(inf.location, FiberLocation::Infinity);
        assert_eq!(inf.kodaira, Kodaira::II);
        // ...while J10 sits over x = 0 in y^3 + x^4 y
        let g = fibers("y^3 + x^4 y");
        assert_eq!(g[0].kodaira, Kodaira::NonMinimal);
        assert_eq!(total(&g), 12);
    }
}
