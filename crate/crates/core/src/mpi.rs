//! Modular pairs in involution of `H(p, s)`.
//!
//! A pair `(l, β)` of a group-like `l ∈ H` and a character `β: H → k` is a
//! modular pair in involution when `β(l) = 1` and
//!
//! ```text
//! S²(h) = β(h(1)) · l h(2) l^-1 · β^-1(h(3))      for all h,
//! ```
//!
//! with `β^-1 = β ∘ S`. The group-likes considered are `g^i` and the
//! characters are `β_j` with `β_j(g) = q^j`, `β_j(x) = β_j(y) = 0`; both
//! families are verified before use. [`classify`] decides every pair by
//! evaluating both sides on the whole basis and refuses to return unless the
//! result agrees with the modular-arithmetic criterion in
//! [`closed_form_predicate`].

use serde::{Deserialize, Serialize};

use crate::cyclotomic::{CycError, CycScalar, CyclotomicField};
use crate::hopf::{BookAlgebra, Generator};
use crate::pbw::{Element, Monomial, Tensor2};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MpiError {
    #[error("g^{i} fails the group-like test: {detail}")]
    NotGroupLike { i: u32, detail: String },
    #[error("β with β(g) = q^{j} is not a character: {detail}")]
    NotCharacter { j: u32, detail: String },
    #[error("the relations do not force β({generator}) = 0")]
    CharacterNotForced { generator: &'static str },
    #[error(
        "brute force and closed form disagree at (i = {i}, j = {j}): brute force \
         (implements = {brute_implements}, stable = {brute_stable}, β(l) = {beta_l}), \
         closed form (implements = {closed_implements}, stable = {closed_stable})"
    )]
    Disagreement {
        i: u32,
        j: u32,
        brute_implements: bool,
        brute_stable: bool,
        closed_implements: bool,
        closed_stable: bool,
        beta_l: String,
    },
}

/// The group-like element `l = g^i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GroupLike {
    pub i: u32,
}

impl GroupLike {
    pub fn monomial(self) -> Monomial {
        Monomial::g_pow(self.i as u8)
    }

    pub fn inverse_monomial(self, p: u32) -> Monomial {
        Monomial::g_pow(((p - self.i % p) % p) as u8)
    }
}

/// The character `β_j`: `β_j(g) = q^j`, zero on `x` and `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Character {
    pub j: u32,
}

impl Character {
    /// `β_0 = ε`.
    pub const COUNIT: Character = Character { j: 0 };

    pub fn eval_mono(self, h: &BookAlgebra, m: Monomial) -> CycScalar {
        if m.b == 0 && m.c == 0 {
            h.pbw().q_pow(self.j as i64 * m.a as i64).clone()
        } else {
            h.field().zero()
        }
    }

    pub fn eval(self, h: &BookAlgebra, u: &Element) -> CycScalar {
        let mut acc = h.field().zero();
        for (m, c) in u.iter() {
            if m.b == 0 && m.c == 0 {
                acc += &c.mul_root(self.j as i64 * m.a as i64);
            }
        }
        acc
    }

    /// `β^-1(m) = β(S(m))`.
    pub fn eval_inverse_mono(self, h: &BookAlgebra, m: Monomial) -> CycScalar {
        self.eval(h, h.antipode_mono(m))
    }
}

/// The candidates `g^0, …, g^(p-1)`, each checked to satisfy
/// `Δ(l) = l ⊗ l` and `ε(l) = 1`.
pub fn enumerate_group_likes(h: &BookAlgebra) -> Result<Vec<GroupLike>, MpiError> {
    (0..h.p())
        .map(|i| {
            let l = GroupLike { i };
            let m = l.monomial();
            let expected = Tensor2::term((m, m), h.field().one());
            let delta = h.coproduct_mono(m);
            if *delta != expected {
                return Err(MpiError::NotGroupLike {
                    i,
                    detail: format!("Δ({m}) = {delta}"),
                });
            }
            if !h.counit_mono(m).is_one() {
                return Err(MpiError::NotGroupLike {
                    i,
                    detail: "ε(l) ≠ 1".into(),
                });
            }
            Ok(l)
        })
        .collect()
}

/// Checks that a character must vanish on `x` and `y`.
///
/// From `g z = q^k z g` one gets `β(g) β(z) (1 - q^k) = 0`; as `β(g)` is a
/// root of unity, `β(z) = 0` whenever `1 - q^k` is invertible. When
/// `k ≡ 0` (only `z = y` with `s = 0`) the nilpotency `z^p = 0` forces
/// `β(z)^p = 0` instead.
pub fn check_characters_vanish_on_xy(h: &BookAlgebra) -> Result<(), MpiError> {
    let k = h.field();
    for (gen, e) in [(Generator::X, 1i64), (Generator::Y, -(h.s() as i64))] {
        let factor = &k.one() - h.pbw().q_pow(e);
        let forced_by_commutation = factor.inv().is_ok();
        let forced_by_nilpotency = h.pbw().pow(&h.generator(gen), h.p()).is_zero();
        if !(forced_by_commutation || forced_by_nilpotency) {
            return Err(MpiError::CharacterNotForced {
                generator: gen.symbol(),
            });
        }
    }
    Ok(())
}

/// The characters `β_0 = ε, β_1, …, β_(p-1)`; each is checked to be unital
/// and multiplicative on all basis pairs.
pub fn enumerate_characters(h: &BookAlgebra) -> Result<Vec<Character>, MpiError> {
    check_characters_vanish_on_xy(h)?;
    let p = h.p();
    let mut out = Vec::with_capacity(p as usize);
    for j in 0..p {
        let beta = Character { j };
        let fail = |detail: String| MpiError::NotCharacter { j, detail };
        let on_g = beta.eval_mono(h, Monomial::G);
        if !on_g.pow(p as u64).is_one() {
            return Err(fail("β(g)^p ≠ 1".into()));
        }
        if !beta.eval_mono(h, Monomial::ONE).is_one() {
            return Err(fail("β(1) ≠ 1".into()));
        }
        let values: Vec<CycScalar> = h.basis().map(|m| beta.eval_mono(h, m)).collect();
        for m1 in h.basis() {
            for m2 in h.basis() {
                let product = match h.pbw().mono_mul(m1, m2) {
                    Some((e, m)) => values[m.index(p)].mul_root(e as i64),
                    None => h.field().zero(),
                };
                if product != &values[m1.index(p)] * &values[m2.index(p)] {
                    return Err(fail(format!("β(({m1})({m2})) ≠ β({m1}) β({m2})")));
                }
            }
        }
        out.push(beta);
    }
    Ok(out)
}

/// Whether `β ∘ S` is a two-sided convolution inverse of `β`, i.e.
/// `β(m(1)) β(S(m(2))) = ε(m) = β(S(m(1))) β(m(2))` for every basis `m`.
pub fn check_convolution_inverse(h: &BookAlgebra, beta: Character) -> bool {
    h.basis().all(|m| {
        let mut left = h.field().zero();
        let mut right = h.field().zero();
        for ((u, v), c) in h.coproduct_mono(m).iter() {
            left += &(c * &(&beta.eval_mono(h, *u) * &beta.eval_inverse_mono(h, *v)));
            right += &(c * &(&beta.eval_inverse_mono(h, *u) * &beta.eval_mono(h, *v)));
        }
        let eps = h.counit_mono(m);
        left == eps && right == eps
    })
}

/// Precomputed data for evaluating `T` for one pair `(l, β)`.
struct TwistData {
    conj: Monomial,
    conj_inv: Monomial,
    beta: Character,
    beta_inverse: Vec<CycScalar>,
}

impl TwistData {
    fn new(h: &BookAlgebra, l: GroupLike, beta: Character) -> Self {
        TwistData {
            conj: l.monomial(),
            conj_inv: l.inverse_monomial(h.p()),
            beta,
            beta_inverse: h.basis().map(|m| beta.eval_inverse_mono(h, m)).collect(),
        }
    }

    fn apply_mono(&self, h: &BookAlgebra, m: Monomial) -> Element {
        let alg = h.pbw();
        let p = h.p();
        let mut out = Element::zero();
        for ((m1, m2, m3), c) in h.delta2_mono(m).iter() {
            let left = self.beta.eval_mono(h, *m1);
            if left.is_zero() {
                continue;
            }
            let right = &self.beta_inverse[m3.index(p)];
            if right.is_zero() {
                continue;
            }
            let Some((e1, lm)) = alg.mono_mul(self.conj, *m2) else {
                continue;
            };
            let Some((e2, conj)) = alg.mono_mul(lm, self.conj_inv) else {
                continue;
            };
            let coeff = (&(c * &left) * right).mul_root((e1 + e2) as i64);
            out.add_term(conj, &coeff);
        }
        out
    }
}

/// `T(u) = β(u(1)) · l u(2) l^-1 · β^-1(u(3))`, evaluated on the double
/// coproduct.
pub fn twist(h: &BookAlgebra, l: GroupLike, beta: Character, u: &Element) -> Element {
    let data = TwistData::new(h, l, beta);
    u.map_linear(|m| data.apply_mono(h, *m))
}

fn s_squared_table(h: &BookAlgebra) -> Vec<Element> {
    h.basis().map(|m| h.s_squared(&h.monomial(m))).collect()
}

fn implements_with(h: &BookAlgebra, l: GroupLike, beta: Character, s2: &[Element]) -> bool {
    let data = TwistData::new(h, l, beta);
    h.basis()
        .all(|m| data.apply_mono(h, m) == s2[m.index(h.p())])
}

/// Whether `T = S²` on every basis element (not just the generators).
pub fn implements_s_squared(h: &BookAlgebra, l: GroupLike, beta: Character) -> bool {
    implements_with(h, l, beta, &s_squared_table(h))
}

/// `β(l)` by evaluation, and whether it equals 1.
pub fn is_stable(h: &BookAlgebra, l: GroupLike, beta: Character) -> (bool, CycScalar) {
    let value = beta.eval(h, &h.monomial(l.monomial()));
    (value.is_one(), value)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedForm {
    pub implements: bool,
    pub stable: bool,
}

/// The congruence criterion, pure modular arithmetic:
/// implements ⟺ `j ≡ i - 1` and `(1 - 2i + s) s ≡ 0`; stable ⟺
/// `i (i - 1) ≡ 0 (mod p)`. The stability congruence is `β(l) = 1`
/// specialized to `j ≡ i - 1`.
pub fn closed_form_predicate(p: u32, s: u32, i: u32, j: u32) -> ClosedForm {
    let p = p as i64;
    let (s, i, j) = (s as i64, i as i64, j as i64);
    let zero = |v: i64| v.rem_euclid(p) == 0;
    ClosedForm {
        implements: zero(j - (i - 1)) && zero((1 - 2 * i + s) * s),
        stable: zero(i * (i - 1)),
    }
}

/// For `s ≢ 0` the unique `(i, j)` with `T = S²`:
/// `i ≡ (1 + s) / 2`, `j ≡ i - 1 (mod p)`.
pub fn unique_implementing_pair(p: u32, s: u32) -> (u32, u32) {
    let half = p.div_ceil(2); // 2^-1 mod p
    let i = ((1 + s) as u64 * half as u64 % p as u64) as u32;
    (i, (i + p - 1) % p)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PairIndex {
    pub i: u32,
    pub j: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairReport {
    pub i: u32,
    pub j: u32,
    pub implements_s2: bool,
    pub stable: bool,
    /// `β(l)`.
    pub stability_value: CycScalar,
    pub closed_form_agrees: bool,
}

impl PairReport {
    pub fn is_mpi(&self) -> bool {
        self.implements_s2 && self.stable
    }
}

/// All `p²` pairs for a fixed `H(p, s)`, ordered by `(i, j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "ClassificationRecord", try_from = "ClassificationRecord")]
pub struct Classification {
    pub p: u32,
    pub s: u32,
    pub pairs: Vec<PairReport>,
    pub mpi: Vec<PairIndex>,
    pub implements: Vec<PairIndex>,
}

impl Classification {
    pub fn has_mpi(&self) -> bool {
        !self.mpi.is_empty()
    }

    pub fn pair(&self, i: u32, j: u32) -> Option<&PairReport> {
        self.pairs.iter().find(|r| r.i == i && r.j == j)
    }
}

/// Evaluates every pair by brute force and cross-checks the congruences.
pub fn classify(h: &BookAlgebra) -> Result<Classification, MpiError> {
    let group_likes = enumerate_group_likes(h)?;
    let characters = enumerate_characters(h)?;
    let s2 = s_squared_table(h);
    let (p, s) = (h.p(), h.s());
    let mut pairs = Vec::with_capacity(group_likes.len() * characters.len());
    for &l in &group_likes {
        for &beta in &characters {
            let implements = implements_with(h, l, beta, &s2);
            let (stable, value) = is_stable(h, l, beta);
            let closed = closed_form_predicate(p, s, l.i, beta.j);
            let on_diagonal = (beta.j + 1) % p == l.i;
            let shadow = *h.pbw().q_pow(l.i as i64 * beta.j as i64) == value;
            let agrees = implements == closed.implements
                && (implements && stable) == (closed.implements && closed.stable)
                && (!on_diagonal || stable == closed.stable)
                && shadow;
            if !agrees {
                return Err(MpiError::Disagreement {
                    i: l.i,
                    j: beta.j,
                    brute_implements: implements,
                    brute_stable: stable,
                    closed_implements: closed.implements,
                    closed_stable: closed.stable,
                    beta_l: value.to_string(),
                });
            }
            pairs.push(PairReport {
                i: l.i,
                j: beta.j,
                implements_s2: implements,
                stable,
                stability_value: value,
                closed_form_agrees: agrees,
            });
        }
    }
    Ok(Classification::from_pairs(p, s, pairs))
}

impl Classification {
    fn from_pairs(p: u32, s: u32, pairs: Vec<PairReport>) -> Self {
        let index = |r: &PairReport| PairIndex { i: r.i, j: r.j };
        Classification {
            p,
            s,
            mpi: pairs.iter().filter(|r| r.is_mpi()).map(index).collect(),
            implements: pairs
                .iter()
                .filter(|r| r.implements_s2)
                .map(index)
                .collect(),
            pairs,
        }
    }
}

/// Wire form of a pair; `beta_l` is rendered as a polynomial in `q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    pub i: u32,
    pub j: u32,
    pub implements_s2: bool,
    pub stable: bool,
    pub beta_l: String,
    #[serde(default = "default_true")]
    pub closed_form_agrees: bool,
}

fn default_true() -> bool {
    true
}

/// Wire form of a [`Classification`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub p: u32,
    pub s: u32,
    pub pairs: Vec<PairRecord>,
    pub mpi: Vec<PairIndex>,
    pub implements: Vec<PairIndex>,
}

impl From<Classification> for ClassificationRecord {
    fn from(c: Classification) -> Self {
        ClassificationRecord {
            p: c.p,
            s: c.s,
            pairs: c
                .pairs
                .iter()
                .map(|r| PairRecord {
                    i: r.i,
                    j: r.j,
                    implements_s2: r.implements_s2,
                    stable: r.stable,
                    beta_l: r.stability_value.to_string(),
                    closed_form_agrees: r.closed_form_agrees,
                })
                .collect(),
            mpi: c.mpi,
            implements: c.implements,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RecordError {
    #[error(transparent)]
    Scalar(#[from] CycError),
    #[error("the mpi/implements lists do not match the per-pair flags")]
    InconsistentSubsets,
}

impl TryFrom<ClassificationRecord> for Classification {
    type Error = RecordError;

    fn try_from(rec: ClassificationRecord) -> Result<Self, RecordError> {
        let field = CyclotomicField::new(rec.p)?;
        let pairs = rec
            .pairs
            .into_iter()
            .map(|r| {
                Ok(PairReport {
                    i: r.i,
                    j: r.j,
                    implements_s2: r.implements_s2,
                    stable: r.stable,
                    stability_value: field.parse(&r.beta_l)?,
                    closed_form_agrees: r.closed_form_agrees,
                })
            })
            .collect::<Result<Vec<_>, CycError>>()?;
        let out = Classification::from_pairs(rec.p, rec.s, pairs);
        if out.mpi != rec.mpi || out.implements != rec.implements {
            return Err(RecordError::InconsistentSubsets);
        }
        Ok(out)
    }
}
