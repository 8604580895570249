//! The Hopf structure of the book algebra `H(p, s)`.
//!
//! `Δ`, `ε` and `S` are fixed on the generators
//!
//! ```text
//! Δ(g) = g ⊗ g        Δ(x) = 1 ⊗ x + x ⊗ g        Δ(y) = 1 ⊗ y + y ⊗ g^s
//! ε(g) = 1            ε(x) = ε(y) = 0
//! S(g) = g^-1         S(x) = -x g^-1               S(y) = -y g^-s
//! ```
//!
//! and extended to the PBW basis multiplicatively (`Δ`, `ε`) or
//! anti-multiplicatively (`S`). Whether the extensions are well defined is
//! exactly what [`crate::checks`] verifies.

use std::sync::OnceLock;

use crate::cyclotomic::{CycError, CycScalar, CyclotomicField};
use crate::pbw::{Element, Monomial, PbwAlgebra, Tensor2, Tensor3};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HopfError {
    #[error(transparent)]
    Field(#[from] CycError),
    #[error("s must satisfy 0 <= s < p = {p}, got {s}")]
    SOutOfRange { p: u32, s: u32 },
    #[error(
        "s = 0 is excluded: in characteristic zero Δ(y)^p ≠ 0 while y^p = 0, so H(p, 0) \
         is not a bialgebra (use the permissive flag to build it as a negative control)"
    )]
    ZeroTwist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    G,
    X,
    Y,
}

impl Generator {
    pub const ALL: [Generator; 3] = [Generator::G, Generator::X, Generator::Y];

    pub fn monomial(self) -> Monomial {
        match self {
            Generator::G => Monomial::G,
            Generator::X => Monomial::X,
            Generator::Y => Monomial::Y,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Generator::G => "g",
            Generator::X => "x",
            Generator::Y => "y",
        }
    }
}

/// `H(p, s)` with memoized structure maps on the basis.
///
/// Immutable once built; the caches fill lazily and are safe to populate
/// from several threads.
#[derive(Debug)]
pub struct BookAlgebra {
    alg: PbwAlgebra,
    permissive: bool,
    delta_gens: [Tensor2; 3],
    antipode_gens: [Element; 3],
    delta_cache: Vec<OnceLock<Tensor2>>,
    delta2_cache: Vec<OnceLock<Tensor3>>,
    antipode_cache: Vec<OnceLock<Element>>,
}

impl BookAlgebra {
    /// Builds `H(p, s)`. `s = 0` is refused unless `permissive` is set.
    pub fn new(p: u32, s: u32, permissive: bool) -> Result<Self, HopfError> {
        let field = CyclotomicField::new(p)?;
        if s >= p {
            return Err(HopfError::SOutOfRange { p, s });
        }
        if s == 0 && !permissive {
            return Err(HopfError::ZeroTwist);
        }
        let alg = PbwAlgebra::new(field, s);
        let one = field.one();
        let g_inv = Monomial::g_pow((p - 1) as u8);
        let g_s = Monomial::g_pow(s as u8);
        let g_minus_s = Monomial::g_pow(((p - s) % p) as u8);

        let delta_gens = [
            Tensor2::term((Monomial::G, Monomial::G), one.clone()),
            [
                ((Monomial::ONE, Monomial::X), one.clone()),
                ((Monomial::X, Monomial::G), one.clone()),
            ]
            .into_iter()
            .collect(),
            [
                ((Monomial::ONE, Monomial::Y), one.clone()),
                ((Monomial::Y, g_s), one.clone()),
            ]
            .into_iter()
            .collect(),
        ];
        let minus_one = field.from_int(-1);
        let antipode_gens = [
            Element::term(g_inv, one.clone()),
            Element::term(Monomial::new(1, 0, g_inv.a), minus_one.clone()),
            Element::term(Monomial::new(0, 1, g_minus_s.a), minus_one),
        ];
        let dim = (p as usize).pow(3);
        Ok(BookAlgebra {
            alg,
            permissive,
            delta_gens,
            antipode_gens,
            delta_cache: (0..dim).map(|_| OnceLock::new()).collect(),
            delta2_cache: (0..dim).map(|_| OnceLock::new()).collect(),
            antipode_cache: (0..dim).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn pbw(&self) -> &PbwAlgebra {
        &self.alg
    }

    pub fn field(&self) -> CyclotomicField {
        self.alg.field()
    }

    pub fn p(&self) -> u32 {
        self.alg.p()
    }

    pub fn s(&self) -> u32 {
        self.alg.s()
    }

    pub fn is_permissive(&self) -> bool {
        self.permissive
    }

    /// The chosen primitive root `q = ζ_p`.
    pub fn q(&self) -> CycScalar {
        self.field().root_power(1)
    }

    /// `dim H = p^3`.
    pub fn dim(&self) -> usize {
        (self.p() as usize).pow(3)
    }

    pub fn basis(&self) -> impl Iterator<Item = Monomial> + Clone {
        Monomial::basis(self.p())
    }

    pub fn mul(&self, u: &Element, v: &Element) -> Element {
        self.alg.mul(u, v)
    }

    pub fn monomial(&self, m: Monomial) -> Element {
        self.alg.monomial(m)
    }

    pub fn one(&self) -> Element {
        self.alg.unit()
    }

    pub fn generator(&self, gen: Generator) -> Element {
        self.monomial(gen.monomial())
    }

    fn slot(gen: Generator) -> usize {
        match gen {
            Generator::G => 0,
            Generator::X => 1,
            Generator::Y => 2,
        }
    }

    /// `Δ` on a generator, exactly as prescribed.
    pub fn coproduct_generator(&self, gen: Generator) -> &Tensor2 {
        &self.delta_gens[Self::slot(gen)]
    }

    /// `S` on a generator, exactly as prescribed.
    pub fn antipode_generator(&self, gen: Generator) -> &Element {
        &self.antipode_gens[Self::slot(gen)]
    }

    fn check_monomial(&self, m: Monomial) -> usize {
        assert!(
            m.is_valid(self.p()),
            "monomial {m:?} out of range for p = {}",
            self.p()
        );
        m.index(self.p())
    }

    /// `Δ(x^b y^c g^a) = Δ(x)^b Δ(y)^c Δ(g)^a`.
    pub fn coproduct_mono(&self, m: Monomial) -> &Tensor2 {
        let idx = self.check_monomial(m);
        self.delta_cache[idx].get_or_init(|| {
            let [dg, dx, dy] = &self.delta_gens;
            let x_part = self.alg.pow(dx, m.b as u32);
            let y_part = self.alg.pow(dy, m.c as u32);
            let g_part = self.alg.pow(dg, m.a as u32);
            self.alg.product([&x_part, &y_part, &g_part])
        })
    }

    pub fn coproduct(&self, h: &Element) -> Tensor2 {
        h.map_linear(|m| self.coproduct_mono(*m))
    }

    pub fn counit_mono(&self, m: Monomial) -> CycScalar {
        if m.b == 0 && m.c == 0 {
            self.field().one()
        } else {
            self.field().zero()
        }
    }

    pub fn counit(&self, h: &Element) -> CycScalar {
        let mut acc = self.field().zero();
        for (m, c) in h.iter() {
            if m.b == 0 && m.c == 0 {
                acc += c;
            }
        }
        acc
    }

    /// `S(x^b y^c g^a) = S(g)^a S(y)^c S(x)^b`.
    pub fn antipode_mono(&self, m: Monomial) -> &Element {
        let idx = self.check_monomial(m);
        self.antipode_cache[idx].get_or_init(|| {
            let [sg, sx, sy] = &self.antipode_gens;
            let g_part = self.alg.pow(sg, m.a as u32);
            let y_part = self.alg.pow(sy, m.c as u32);
            let x_part = self.alg.pow(sx, m.b as u32);
            self.alg.product([&g_part, &y_part, &x_part])
        })
    }

    pub fn antipode(&self, h: &Element) -> Element {
        h.map_linear(|m| self.antipode_mono(*m))
    }

    pub fn s_squared(&self, h: &Element) -> Element {
        self.antipode(&self.antipode(h))
    }

    /// `(Δ ⊗ id)` applied to a tensor.
    pub fn delta_left(&self, t: &Tensor2) -> Tensor3 {
        let mut out = Tensor3::zero();
        for ((m1, m2), c) in t.iter() {
            for ((u, v), d) in self.coproduct_mono(*m1).iter() {
                out.add_term((*u, *v, *m2), &(c * d));
            }
        }
        out
    }

    /// `(id ⊗ Δ)` applied to a tensor.
    pub fn delta_right(&self, t: &Tensor2) -> Tensor3 {
        let mut out = Tensor3::zero();
        for ((m1, m2), c) in t.iter() {
            for ((u, v), d) in self.coproduct_mono(*m2).iter() {
                out.add_term((*m1, *u, *v), &(c * d));
            }
        }
        out
    }

    /// `(ε ⊗ id)` applied to a tensor.
    pub fn counit_left(&self, t: &Tensor2) -> Element {
        t.iter()
            .filter(|((m1, _), _)| m1.b == 0 && m1.c == 0)
            .map(|((_, m2), c)| (*m2, c.clone()))
            .collect()
    }

    /// `(id ⊗ ε)` applied to a tensor.
    pub fn counit_right(&self, t: &Tensor2) -> Element {
        t.iter()
            .filter(|((_, m2), _)| m2.b == 0 && m2.c == 0)
            .map(|((m1, _), c)| (*m1, c.clone()))
            .collect()
    }

    /// The double coproduct `(Δ ⊗ id) Δ(m)`, i.e. `m(1) ⊗ m(2) ⊗ m(3)`.
    pub fn delta2_mono(&self, m: Monomial) -> &Tensor3 {
        let idx = self.check_monomial(m);
        self.delta2_cache[idx].get_or_init(|| {
            let delta = self.coproduct_mono(m);
            let left = self.delta_left(delta);
            debug_assert!(
                self.permissive || left == self.delta_right(delta),
                "coassociativity fails at {m}"
            );
            left
        })
    }

    pub fn delta2(&self, h: &Element) -> Tensor3 {
        h.map_linear(|m| self.delta2_mono(*m))
    }

    /// Fills every memoized basis image up front.
    pub fn warm_caches(&self) {
        for m in self.basis() {
            self.coproduct_mono(m);
            self.antipode_mono(m);
        }
    }
}
