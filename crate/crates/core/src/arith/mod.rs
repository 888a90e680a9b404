//! Exact arithmetic substrate: rationals, number fields, univariate and
//! bivariate polynomials, integer matrices and factorization over Q.

pub mod algebraic;
pub mod bipoly;
pub mod factor;
pub mod intmat;
pub mod numfield;
pub mod poly;
pub mod rational;

use std::fmt::Debug;

pub use num_bigint::BigInt;
pub use rational::{q, qi, Q};

/// A field whose elements may need a shared context (the modulus of a
/// number field). Rationals use the unit context.
pub trait Field: Clone + PartialEq + Debug {
    type Ctx: Clone + Debug + PartialEq;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_q(ctx: &Self::Ctx, value: &Q) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `None` only for zero.
    fn inv(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        self.sub(&Self::one(&self.ctx())).is_zero()
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ctx());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}
