use std::fmt;
use std::sync::Arc;

use super::poly::QPoly;
use super::{Field, Q};

/// `Q[t]/(m(t))` for a monic irreducible `m`.
#[derive(Clone, Debug, PartialEq)]
pub struct NumberField {
    modulus: QPoly,
}

pub type NfCtx = Arc<NumberField>;

impl NumberField {
    /// The caller guarantees irreducibility; the modulus is made monic.
    pub fn new(modulus: &QPoly) -> NfCtx {
        assert!(modulus.degree().unwrap_or(0) >= 1, "number field modulus must be nonconstant");
        Arc::new(NumberField { modulus: modulus.monic() })
    }

    pub fn modulus(&self) -> &QPoly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }
}

/// Element of a number field, stored reduced modulo the minimal polynomial.
#[derive(Clone, PartialEq)]
pub struct Nf {
    value: QPoly,
    field: NfCtx,
}

impl fmt::Debug for Nf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} mod {:?}", self.value, self.field.modulus)
    }
}

impl Nf {
    pub fn from_poly(field: &NfCtx, p: &QPoly) -> Nf {
        Nf { value: p.rem(&field.modulus), field: field.clone() }
    }

    /// The class of `t`.
    pub fn generator(field: &NfCtx) -> Nf {
        Self::from_poly(field, &QPoly::x(&()))
    }

    pub fn value(&self) -> &QPoly {
        &self.value
    }

    /// `Some(q)` when the element lies in Q.
    pub fn as_rational(&self) -> Option<Q> {
        match self.value.degree() {
            None => Some(Q::from_integer(0.into())),
            Some(0) => Some(self.value.coeff(0)),
            _ => None,
        }
    }
}

impl Field for Nf {
    type Ctx = NfCtx;

    fn ctx(&self) -> NfCtx {
        self.field.clone()
    }
    fn zero(ctx: &NfCtx) -> Self {
        Nf { value: QPoly::zero(&()), field: ctx.clone() }
    }
    fn one(ctx: &NfCtx) -> Self {
        Nf { value: QPoly::one(&()), field: ctx.clone() }
    }
    fn from_q(ctx: &NfCtx, v: &Q) -> Self {
        Nf { value: QPoly::constant(v.clone()), field: ctx.clone() }
    }
    fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        Nf { value: self.value.add_poly(&o.value), field: self.field.clone() }
    }
    fn sub(&self, o: &Self) -> Self {
        Nf { value: self.value.sub_poly(&o.value), field: self.field.clone() }
    }
    fn mul(&self, o: &Self) -> Self {
        Nf::from_poly(&self.field, &self.value.mul_poly(&o.value))
    }
    fn neg(&self) -> Self {
        Nf { value: -&self.value, field: self.field.clone() }
    }
    fn inv(&self) -> Option<Self> {
        if self.value.is_zero() {
            return None;
        }
        let (g, s, _) = self.value.ext_gcd(&self.field.modulus);
        // irreducible modulus: gcd is 1
        debug_assert_eq!(g.degree(), Some(0));
        Some(Nf::from_poly(&self.field, &s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::qi;

    #[test]
    fn sqrt2_arithmetic() {
        let k = NumberField::new(&QPoly::from_ints(&[-2, 0, 1]));
        let t = Nf::generator(&k);
        assert_eq!(t.mul(&t), Nf::from_q(&k, &qi(2)));
        let one_plus = t.add(&Nf::one(&k));
        let inv = one_plus.inv().unwrap();
        assert!(one_plus.mul(&inv).is_one());
    }
}
