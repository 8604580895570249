//! The PBW basis `x^b y^c g^a` of `H(p, s)` and sparse linear combinations
//! over it and over its tensor powers.
//!
//! Products are normalized with closed-form structure constants. Moving
//! `g^a1` past `x^b2`, `y^c1` past `x^b2` and `g^a1` past `y^c2` gives
//!
//! ```text
//! (x^b1 y^c1 g^a1)(x^b2 y^c2 g^a2) = q^(a1 b2 + s c1 b2 - s a1 c2) x^(b1+b2) y^(c1+c2) g^(a1+a2)
//! ```
//!
//! which vanishes as soon as an `x` or `y` exponent reaches `p`.

use std::borrow::Borrow;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::cyclotomic::{CycScalar, CyclotomicField};

/// The basis monomial `x^b y^c g^a`; every exponent lies in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Monomial {
    pub b: u8,
    pub c: u8,
    pub a: u8,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { b: 0, c: 0, a: 0 };
    pub const G: Monomial = Monomial { b: 0, c: 0, a: 1 };
    pub const X: Monomial = Monomial { b: 1, c: 0, a: 0 };
    pub const Y: Monomial = Monomial { b: 0, c: 1, a: 0 };

    pub const fn new(b: u8, c: u8, a: u8) -> Self {
        Monomial { b, c, a }
    }

    pub const fn g_pow(a: u8) -> Self {
        Monomial { b: 0, c: 0, a }
    }

    /// Position in the basis ordering `(b, c, a)`.
    pub fn index(self, p: u32) -> usize {
        let p = p as usize;
        (self.b as usize * p + self.c as usize) * p + self.a as usize
    }

    pub fn from_index(p: u32, index: usize) -> Self {
        let p = p as usize;
        Monomial {
            b: (index / (p * p)) as u8,
            c: (index / p % p) as u8,
            a: (index % p) as u8,
        }
    }

    /// All `p^3` basis monomials in index order.
    pub fn basis(p: u32) -> impl Iterator<Item = Monomial> + Clone {
        (0..(p as usize).pow(3)).map(move |i| Monomial::from_index(p, i))
    }

    pub fn is_valid(self, p: u32) -> bool {
        (self.a as u32) < p && (self.b as u32) < p && (self.c as u32) < p
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = [("x", self.b), ("y", self.c), ("g", self.a)]
            .into_iter()
            .filter(|&(_, e)| e > 0)
            .map(|(sym, e)| {
                if e == 1 {
                    sym.to_string()
                } else {
                    format!("{sym}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// Keys of a [`SparseSum`] that the PBW product knows how to multiply:
/// single monomials and tuples of them (multiplied leg by leg).
pub trait PbwKey: Ord + Copy + fmt::Debug {
    const UNIT: Self;

    /// Normal form of `lhs * rhs` as `q^e * key`, or `None` when it vanishes.
    fn mul_keys(alg: &PbwAlgebra, lhs: Self, rhs: Self) -> Option<(u32, Self)>;

    fn render(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

impl PbwKey for Monomial {
    const UNIT: Self = Monomial::ONE;

    fn mul_keys(alg: &PbwAlgebra, lhs: Self, rhs: Self) -> Option<(u32, Self)> {
        alg.mono_mul(lhs, rhs)
    }

    fn render(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl PbwKey for (Monomial, Monomial) {
    const UNIT: Self = (Monomial::ONE, Monomial::ONE);

    fn mul_keys(alg: &PbwAlgebra, lhs: Self, rhs: Self) -> Option<(u32, Self)> {
        let (e0, m0) = alg.mono_mul(lhs.0, rhs.0)?;
        let (e1, m1) = alg.mono_mul(lhs.1, rhs.1)?;
        Some((e0 + e1, (m0, m1)))
    }

    fn render(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊗ {}", self.0, self.1)
    }
}

impl PbwKey for (Monomial, Monomial, Monomial) {
    const UNIT: Self = (Monomial::ONE, Monomial::ONE, Monomial::ONE);

    fn mul_keys(alg: &PbwAlgebra, lhs: Self, rhs: Self) -> Option<(u32, Self)> {
        let (e0, m0) = alg.mono_mul(lhs.0, rhs.0)?;
        let (e1, m1) = alg.mono_mul(lhs.1, rhs.1)?;
        let (e2, m2) = alg.mono_mul(lhs.2, rhs.2)?;
        Some((e0 + e1 + e2, (m0, m1, m2)))
    }

    fn render(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊗ {} ⊗ {}", self.0, self.1, self.2)
    }
}

/// A finite linear combination of basis keys; zero coefficients are never
/// stored, so equality is map equality.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseSum<K: Ord> {
    terms: BTreeMap<K, CycScalar>,
}

/// An element of `H`.
pub type Element = SparseSum<Monomial>;
/// An element of `H ⊗ H`.
pub type Tensor2 = SparseSum<(Monomial, Monomial)>;
/// An element of `H ⊗ H ⊗ H`.
pub type Tensor3 = SparseSum<(Monomial, Monomial, Monomial)>;

impl<K: Ord + Copy> Default for SparseSum<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Ord + Copy> SparseSum<K> {
    pub fn zero() -> Self {
        SparseSum {
            terms: BTreeMap::new(),
        }
    }

    pub fn term(key: K, coeff: CycScalar) -> Self {
        let mut out = Self::zero();
        out.add_term(key, &coeff);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Option<&CycScalar> {
        self.terms.get(key)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &CycScalar)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, key: K, coeff: &CycScalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, lambda: &CycScalar) -> Self {
        if lambda.is_zero() {
            return Self::zero();
        }
        SparseSum {
            terms: self.terms.iter().map(|(k, c)| (*k, c * lambda)).collect(),
        }
    }

    /// Applies a linear map given on keys.
    pub fn map_linear<L, S, F>(&self, mut f: F) -> SparseSum<L>
    where
        L: Ord + Copy,
        S: Borrow<SparseSum<L>>,
        F: FnMut(&K) -> S,
    {
        let mut out = SparseSum::zero();
        for (k, c) in &self.terms {
            for (l, d) in f(k).borrow().iter() {
                out.add_term(*l, &(c * d));
            }
        }
        out
    }
}

impl<K: Ord + Copy> FromIterator<(K, CycScalar)> for SparseSum<K> {
    fn from_iter<I: IntoIterator<Item = (K, CycScalar)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, &c);
        }
        out
    }
}

impl<K: Ord + Copy> Add for &SparseSum<K> {
    type Output = SparseSum<K>;

    fn add(self, rhs: &SparseSum<K>) -> SparseSum<K> {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c);
        }
        out
    }
}

impl<K: Ord + Copy> Neg for &SparseSum<K> {
    type Output = SparseSum<K>;

    fn neg(self) -> SparseSum<K> {
        SparseSum {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl<K: Ord + Copy> Sub for &SparseSum<K> {
    type Output = SparseSum<K>;

    fn sub(self, rhs: &SparseSum<K>) -> SparseSum<K> {
        self + &(-rhs)
    }
}

impl<K: PbwKey> fmt::Display for SparseSum<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (k, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            if !c.is_one() {
                write!(f, "({c})·")?;
            }
            k.render(f)?;
        }
        Ok(())
    }
}

impl<K: PbwKey> fmt::Debug for SparseSum<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Multiplication in `H(p, s)` and in its tensor powers.
#[derive(Debug, Clone)]
pub struct PbwAlgebra {
    field: CyclotomicField,
    s: u32,
    roots: Vec<CycScalar>,
}

impl PbwAlgebra {
    /// `s` is taken modulo `p`.
    pub fn new(field: CyclotomicField, s: u32) -> Self {
        let p = field.p();
        PbwAlgebra {
            field,
            s: s % p,
            roots: (0..p as i64).map(|j| field.root_power(j)).collect(),
        }
    }

    pub fn field(&self) -> CyclotomicField {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// `q^e` for any integer `e`.
    pub fn q_pow(&self, e: i64) -> &CycScalar {
        &self.roots[e.rem_euclid(self.p() as i64) as usize]
    }

    pub fn monomial(&self, m: Monomial) -> Element {
        Element::term(m, self.field.one())
    }

    pub fn unit<K: PbwKey>(&self) -> SparseSum<K> {
        SparseSum::term(K::UNIT, self.field.one())
    }

    /// Normal form of `m1 * m2`: `Some((e, m))` meaning `q^e m`, with
    /// `e ∈ [0, p)`, or `None` when the product is zero.
    pub fn mono_mul(&self, m1: Monomial, m2: Monomial) -> Option<(u32, Monomial)> {
        let p = self.p();
        let b = m1.b as u32 + m2.b as u32;
        let c = m1.c as u32 + m2.c as u32;
        if b >= p || c >= p {
            return None;
        }
        let (a1, b2, c1, c2) = (m1.a as i64, m2.b as i64, m1.c as i64, m2.c as i64);
        let s = self.s as i64;
        let e = (a1 * b2 + s * c1 * b2 - s * a1 * c2).rem_euclid(p as i64) as u32;
        let a = (m1.a as u32 + m2.a as u32) % p;
        Some((e, Monomial::new(b as u8, c as u8, a as u8)))
    }

    /// Bilinear extension of the monomial product; works leg by leg on
    /// tensors, with no braiding between legs.
    pub fn mul<K: PbwKey>(&self, lhs: &SparseSum<K>, rhs: &SparseSum<K>) -> SparseSum<K> {
        let mut out = SparseSum::zero();
        for (k1, c1) in &lhs.terms {
            for (k2, c2) in &rhs.terms {
                if let Some((e, k)) = K::mul_keys(self, *k1, *k2) {
                    let coeff = if c1.is_one() {
                        c2.mul_root(e as i64)
                    } else {
                        (c1 * c2).mul_root(e as i64)
                    };
                    out.add_term(k, &coeff);
                }
            }
        }
        out
    }

    pub fn pow<K: PbwKey>(&self, base: &SparseSum<K>, n: u32) -> SparseSum<K> {
        let mut acc = self.unit();
        for _ in 0..n {
            acc = self.mul(&acc, base);
        }
        acc
    }

    /// Product of several factors, left to right.
    pub fn product<'a, K: PbwKey + 'a>(
        &self,
        factors: impl IntoIterator<Item = &'a SparseSum<K>>,
    ) -> SparseSum<K> {
        factors
            .into_iter()
            .fold(self.unit(), |acc, f| self.mul(&acc, f))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(p: u32, s: u32) -> PbwAlgebra {
        PbwAlgebra::new(CyclotomicField::new(p).unwrap(), s)
    }

    #[test]
    fn generator_relations() {
        let h = alg(5, 2);
        // g x = q x g
        assert_eq!(
            h.mono_mul(Monomial::G, Monomial::X),
            Some((1, Monomial::new(1, 0, 1)))
        );
        // x^(p-1) x = 0
        assert_eq!(h.mono_mul(Monomial::new(4, 0, 0), Monomial::X), None);
        // y x = q^s x y
        assert_eq!(
            h.mono_mul(Monomial::Y, Monomial::X),
            Some((2, Monomial::new(1, 1, 0)))
        );
        // x y is already normal
        assert_eq!(
            h.mono_mul(Monomial::X, Monomial::Y),
            Some((0, Monomial::new(1, 1, 0)))
        );
        // g y = q^-s y g
        assert_eq!(
            h.mono_mul(Monomial::G, Monomial::Y),
            Some((3, Monomial::new(0, 1, 1)))
        );
    }

    #[test]
    fn g_has_order_p() {
        for p in [3, 5, 7] {
            let h = alg(p, 1);
            let g = h.monomial(Monomial::G);
            assert_eq!(h.pow(&g, p), h.unit());
            assert_ne!(h.pow(&g, p - 1), h.unit());
        }
    }

    #[test]
    fn unit_laws_on_basis() {
        let h = alg(3, 2);
        for m in Monomial::basis(3) {
            assert_eq!(h.mono_mul(Monomial::ONE, m), Some((0, m)));
            assert_eq!(h.mono_mul(m, Monomial::ONE), Some((0, m)));
        }
    }

    #[test]
    fn element_product_examples() {
        let h = alg(5, 3);
        let k = h.field();
        let u: Element = [
            (Monomial::X, k.from_int(2)),
            (Monomial::new(0, 2, 3), k.root_power(1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(h.mul(&u, &h.unit()), u);
        assert_eq!(h.mul(&Element::zero(), &u), Element::zero());
        // (x + y) g = x g + y g
        let xy = &h.monomial(Monomial::X) + &h.monomial(Monomial::Y);
        let expected = &h.monomial(Monomial::new(1, 0, 1)) + &h.monomial(Monomial::new(0, 1, 1));
        assert_eq!(h.mul(&xy, &h.monomial(Monomial::G)), expected);
    }

    #[test]
    fn tensor_product_examples() {
        let h = alg(5, 2);
        let k = h.field();
        let one_x = Tensor2::term((Monomial::ONE, Monomial::X), k.one());
        let x_g = Tensor2::term((Monomial::X, Monomial::G), k.one());
        let x_xg = (Monomial::X, Monomial::new(1, 0, 1));
        assert_eq!(h.mul(&one_x, &x_g), Tensor2::term(x_xg, k.one()));
        assert_eq!(h.mul(&x_g, &one_x), Tensor2::term(x_xg, k.root_power(1)));
        assert_eq!(h.mul(&x_g, &h.unit()), x_g);
    }

    #[test]
    fn sparse_sum_arithmetic() {
        let h = alg(3, 1);
        let k = h.field();
        let u: Element = [(Monomial::X, k.from_int(2)), (Monomial::G, k.root_power(2))]
            .into_iter()
            .collect();
        assert_eq!(&u + &Element::zero(), u);
        assert!((&u + &u.scale(&k.from_int(-1))).is_zero());
        assert_eq!(u.scale(&k.one()), u);
        assert!((&u - &u).is_zero());
        assert_eq!(u.scale(&k.zero()), Element::zero());
    }

    #[test]
    fn rendering() {
        assert_eq!(Monomial::ONE.to_string(), "1");
        assert_eq!(Monomial::new(2, 1, 3).to_string(), "x^2 y g^3");
        assert_eq!(Monomial::new(0, 0, 1).to_string(), "g");
        let h = alg(3, 1);
        let k = h.field();
        let t: Tensor2 = [
            ((Monomial::ONE, Monomial::X), k.one()),
            ((Monomial::X, Monomial::G), k.root_power(1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(t.to_string(), "1 ⊗ x + (q)·x ⊗ g");
        assert_eq!(Element::zero().to_string(), "0");
    }

    #[test]
    fn index_roundtrip() {
        for p in [3, 5] {
            for (i, m) in Monomial::basis(p).enumerate() {
                assert_eq!(m.index(p), i);
                assert!(m.is_valid(p));
            }
        }
    }
}
