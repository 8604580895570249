//! Verification of the Hopf-algebra axioms of `H(p, s)` on the PBW basis.
//!
//! Each check reports both sides of every failed identity in canonical
//! rendering. Checks over basis pairs and triples run exhaustively when the
//! basis is small (or when asked) and otherwise draw a fixed number of
//! uniform samples from a seeded generator, so reports are reproducible.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::CycScalar;
use crate::hopf::{BookAlgebra, Generator};
use crate::pbw::{Element, Monomial, PbwKey, SparseSum};

pub const DEFAULT_SEED: u64 = 0x5eed_b00c;
pub const DEFAULT_SAMPLES: u64 = 1_000_000;
/// Basis-pair count up to which every check is exhaustive.
pub const DEFAULT_EXHAUSTIVE_LIMIT: u64 = 25_000;
/// Violations kept verbatim per axiom; the rest are only counted.
pub const MAX_RECORDED_VIOLATIONS: usize = 32;

/// Name of the identity that fails for `s = 0`.
pub const DELTA_Y_NILPOTENCY: &str = "Δ(y)^p = 0";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Associativity,
    Coassociativity,
    CounitLaw,
    BialgebraCompat,
    AntipodeLaw,
    Relations,
}

impl Axiom {
    pub const ALL: [Axiom; 6] = [
        Axiom::Associativity,
        Axiom::Coassociativity,
        Axiom::CounitLaw,
        Axiom::BialgebraCompat,
        Axiom::AntipodeLaw,
        Axiom::Relations,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Associativity => "associativity",
            Axiom::Coassociativity => "coassociativity",
            Axiom::CounitLaw => "counit_law",
            Axiom::BialgebraCompat => "bialgebra_compat",
            Axiom::AntipodeLaw => "antipode_law",
            Axiom::Relations => "relations",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Coverage {
    Exhaustive,
    Sampled { samples: u64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub lhs: String,
    pub rhs: String,
    /// The identity and the basis elements it was evaluated at.
    pub at: String,
    /// Offending basis elements; empty for relation checks.
    #[serde(default)]
    pub basis: Vec<Monomial>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub axiom: Axiom,
    pub status: Status,
    pub violations: Vec<Violation>,
    /// Total number of violations, including unrecorded ones.
    pub violation_count: u64,
    /// Violations at basis tuples whose `y`-degrees add up to at least `p`,
    /// i.e. those that only arise from a failure of `y^p = 0` upstairs.
    #[serde(default)]
    pub y_overflow_violations: u64,
    /// Number of identities evaluated.
    pub checked: u64,
    pub coverage: Coverage,
    pub elapsed_ms: u64,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Result of [`run_all`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub p: u32,
    pub s: u32,
    pub permissive: bool,
    pub axioms: Vec<AxiomReport>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.axioms.iter().all(AxiomReport::passed)
    }

    pub fn get(&self, axiom: Axiom) -> Option<&AxiomReport> {
        self.axioms.iter().find(|r| r.axiom == axiom)
    }

    pub fn failing(&self) -> Vec<Axiom> {
        self.axioms
            .iter()
            .filter(|r| !r.passed())
            .map(|r| r.axiom)
            .collect()
    }

    /// True when this is the `s = 0` control and it fails exactly as
    /// predicted: the only broken relation is `Δ(y)^p = 0`, and every other
    /// violation is a product that vanishes only because `y^p = 0`
    /// (multiplicativity of `Δ` across a pair whose `y`-degrees add up to
    /// at least `p`).
    pub fn is_expected_negative_control(&self) -> bool {
        if self.s != 0 {
            return false;
        }
        let Some(relations) = self.get(Axiom::Relations) else {
            return false;
        };
        let relations_ok = relations.violation_count == 1
            && relations.violations.len() == 1
            && relations.violations[0].at == DELTA_Y_NILPOTENCY;
        let others_ok = self
            .axioms
            .iter()
            .filter(|r| r.axiom != Axiom::Relations)
            .all(|r| r.violation_count == r.y_overflow_violations);
        relations_ok && others_ok
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    pub seed: u64,
    /// Samples drawn for pair/triple checks that are not exhaustive.
    pub samples: u64,
    /// Forces every check to be exhaustive.
    pub exhaustive: bool,
    /// Basis-pair count up to which checks are exhaustive.
    pub exhaustive_limit: u64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
            exhaustive: false,
            exhaustive_limit: DEFAULT_EXHAUSTIVE_LIMIT,
        }
    }
}

impl CheckOptions {
    /// Coverage for a check over `arity`-tuples of basis elements. A sample
    /// at least as large as the whole population is replaced by the full
    /// enumeration.
    pub fn coverage(&self, dim: u64, arity: u32) -> Coverage {
        let population = dim.saturating_pow(arity);
        if self.exhaustive || dim * dim <= self.exhaustive_limit || population <= self.samples {
            Coverage::Exhaustive
        } else {
            Coverage::Sampled {
                samples: self.samples,
                seed: self.seed,
            }
        }
    }
}

/// Index tuples to evaluate for a given coverage.
fn tuples(dim: usize, arity: u32, coverage: Coverage) -> Box<dyn Iterator<Item = Vec<usize>>> {
    match coverage {
        Coverage::Exhaustive => {
            let total = dim.pow(arity);
            Box::new((0..total).map(move |mut n| {
                let mut idx = vec![0; arity as usize];
                for slot in idx.iter_mut().rev() {
                    *slot = n % dim;
                    n /= dim;
                }
                idx
            }))
        }
        Coverage::Sampled { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Box::new((0..samples).map(move |_| (0..arity).map(|_| rng.gen_range(0..dim)).collect()))
        }
    }
}

struct Recorder {
    axiom: Axiom,
    p: u32,
    y_overflow: u64,
    started: Instant,
    checked: u64,
    count: u64,
    violations: Vec<Violation>,
}

impl Recorder {
    fn new(axiom: Axiom, p: u32) -> Self {
        Recorder {
            axiom,
            p,
            y_overflow: 0,
            started: Instant::now(),
            checked: 0,
            count: 0,
            violations: Vec::new(),
        }
    }

    fn compare<T: PartialEq + ToString>(
        &mut self,
        lhs: &T,
        rhs: &T,
        at: impl FnOnce() -> String,
        basis: &[Monomial],
    ) {
        self.checked += 1;
        if lhs == rhs {
            return;
        }
        self.count += 1;
        if basis.iter().map(|m| m.c as u32).sum::<u32>() >= self.p {
            self.y_overflow += 1;
        }
        if self.violations.len() < MAX_RECORDED_VIOLATIONS {
            self.violations.push(Violation {
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
                at: at(),
                basis: basis.to_vec(),
            });
        }
    }

    fn finish(self, coverage: Coverage) -> AxiomReport {
        AxiomReport {
            axiom: self.axiom,
            status: if self.count == 0 {
                Status::Pass
            } else {
                Status::Fail
            },
            violations: self.violations,
            violation_count: self.count,
            y_overflow_violations: self.y_overflow,
            checked: self.checked,
            coverage,
            elapsed_ms: self.started.elapsed().as_millis() as u64,
        }
    }
}

fn scaled_monomial(h: &BookAlgebra, product: Option<(u32, Monomial)>) -> Element {
    match product {
        Some((e, m)) => Element::term(m, h.pbw().q_pow(e as i64).clone()),
        None => Element::zero(),
    }
}

/// `(m1 m2) m3 = m1 (m2 m3)` on basis triples.
pub fn check_associativity(h: &BookAlgebra, opts: &CheckOptions) -> AxiomReport {
    let mut rec = Recorder::new(Axiom::Associativity, h.p());
    let coverage = opts.coverage(h.dim() as u64, 3);
    let p = h.p();
    let alg = h.pbw();
    let times = |lhs: Option<(u32, Monomial)>, m: Monomial, left: bool| {
        lhs.and_then(|(e, u)| {
            let prod = if left {
                alg.mono_mul(u, m)
            } else {
                alg.mono_mul(m, u)
            };
            prod.map(|(f, w)| ((e + f) % p, w))
        })
    };
    for idx in tuples(h.dim(), 3, coverage) {
        let [m1, m2, m3] = [idx[0], idx[1], idx[2]].map(|i| Monomial::from_index(p, i));
        let lhs = times(alg.mono_mul(m1, m2), m3, true);
        let rhs = times(alg.mono_mul(m2, m3), m1, false);
        if lhs == rhs {
            rec.checked += 1;
            continue;
        }
        rec.compare(
            &scaled_monomial(h, lhs),
            &scaled_monomial(h, rhs),
            || format!("({m1})({m2})({m3})"),
            &[m1, m2, m3],
        );
    }
    rec.finish(coverage)
}

/// `(Δ ⊗ id)Δ = (id ⊗ Δ)Δ` on every basis element.
pub fn check_coassociativity(h: &BookAlgebra) -> AxiomReport {
    let mut rec = Recorder::new(Axiom::Coassociativity, h.p());
    for m in h.basis() {
        let delta = h.coproduct_mono(m);
        rec.compare(
            &h.delta_left(delta),
            &h.delta_right(delta),
            || format!("{m}"),
            &[m],
        );
    }
    rec.finish(Coverage::Exhaustive)
}

/// `(ε ⊗ id)Δ(m) = m = (id ⊗ ε)Δ(m)` on every basis element.
pub fn check_counit_law(h: &BookAlgebra) -> AxiomReport {
    let mut rec = Recorder::new(Axiom::CounitLaw, h.p());
    for m in h.basis() {
        let delta = h.coproduct_mono(m);
        let me = h.monomial(m);
        rec.compare(
            &h.counit_left(delta),
            &me,
            || format!("(ε ⊗ id)Δ({m})"),
            &[m],
        );
        rec.compare(
            &h.counit_right(delta),
            &me,
            || format!("(id ⊗ ε)Δ({m})"),
            &[m],
        );
    }
    rec.finish(Coverage::Exhaustive)
}

/// `Δ` and `ε` are unital and multiplicative on basis pairs.
pub fn check_bialgebra_compat(h: &BookAlgebra, opts: &CheckOptions) -> AxiomReport {
    let mut rec = Recorder::new(Axiom::BialgebraCompat, h.p());
    let coverage = opts.coverage(h.dim() as u64, 2);
    let p = h.p();
    let unit = Monomial::ONE;
    rec.compare(
        h.coproduct_mono(unit),
        &h.pbw().unit(),
        || "Δ(1)".into(),
        &[unit],
    );
    rec.compare(
        &h.counit_mono(unit),
        &h.field().one(),
        || "ε(1)".into(),
        &[unit],
    );
    for idx in tuples(h.dim(), 2, coverage) {
        let (m1, m2) = (
            Monomial::from_index(p, idx[0]),
            Monomial::from_index(p, idx[1]),
        );
        let product = scaled_monomial(h, h.pbw().mono_mul(m1, m2));
        let lhs = h.coproduct(&product);
        let rhs = h.pbw().mul(h.coproduct_mono(m1), h.coproduct_mono(m2));
        rec.compare(&lhs, &rhs, || format!("Δ(({m1})({m2}))"), &[m1, m2]);
        let lhs = h.counit(&product);
        let rhs = &h.counit_mono(m1) * &h.counit_mono(m2);
        rec.compare(&lhs, &rhs, || format!("ε(({m1})({m2}))"), &[m1, m2]);
    }
    rec.finish(coverage)
}

/// `m(S ⊗ id)Δ = ηε = m(id ⊗ S)Δ` on every basis element.
pub fn check_antipode_law(h: &BookAlgebra) -> AxiomReport {
    let mut rec = Recorder::new(Axiom::AntipodeLaw, h.p());
    for m in h.basis() {
        let delta = h.coproduct_mono(m);
        let mut left = Element::zero();
        let mut right = Element::zero();
        for ((u, v), c) in delta.iter() {
            let su_v = h.mul(h.antipode_mono(*u), &h.monomial(*v));
            let u_sv = h.mul(&h.monomial(*u), h.antipode_mono(*v));
            left = &left + &su_v.scale(c);
            right = &right + &u_sv.scale(c);
        }
        let expected = h.one().scale(&h.counit_mono(m));
        rec.compare(&left, &expected, || format!("S(m(1)) m(2) at {m}"), &[m]);
        rec.compare(&right, &expected, || format!("m(1) S(m(2)) at {m}"), &[m]);
    }
    rec.finish(Coverage::Exhaustive)
}

fn relation_checks<K: PbwKey>(
    rec: &mut Recorder,
    h: &BookAlgebra,
    name: &str,
    image: impl Fn(Generator) -> SparseSum<K>,
    reversed: bool,
) {
    let alg = h.pbw();
    let p = h.p();
    let s = h.s() as i64;
    let [g, x, y] = Generator::ALL.map(image);
    // Products of images; `reversed` swaps the order for anti-homomorphisms.
    let prod = |u: &SparseSum<K>, v: &SparseSum<K>| {
        if reversed {
            alg.mul(v, u)
        } else {
            alg.mul(u, v)
        }
    };
    let q = |e: i64| alg.q_pow(e).clone();
    let commutations: [(&str, &SparseSum<K>, &SparseSum<K>, CycScalar); 3] = [
        ("gx = q xg", &g, &x, q(1)),
        ("gy = q^-s yg", &g, &y, q(-s)),
        ("xy = q^-s yx", &x, &y, q(-s)),
    ];
    for (label, u, v, scalar) in commutations {
        let lhs = prod(u, v);
        let rhs = prod(v, u).scale(&scalar);
        rec.compare(&lhs, &rhs, || format!("{name}: {label}"), &[]);
    }
    let zero = SparseSum::<K>::zero();
    rec.compare(
        &alg.pow(&g, p),
        &alg.unit(),
        || format!("{name}(g)^p = 1"),
        &[],
    );
    rec.compare(&alg.pow(&x, p), &zero, || format!("{name}(x)^p = 0"), &[]);
    rec.compare(&alg.pow(&y, p), &zero, || format!("{name}(y)^p = 0"), &[]);
}

/// `Δ` (into `H ⊗ H`) and `S` (order-reversing) respect every defining
/// relation, evaluated on the generator images directly.
pub fn check_relations(h: &BookAlgebra) -> AxiomReport {
    let mut rec = Recorder::new(Axiom::Relations, h.p());
    relation_checks(
        &mut rec,
        h,
        "Δ",
        |gen| h.coproduct_generator(gen).clone(),
        false,
    );
    relation_checks(
        &mut rec,
        h,
        "S",
        |gen| h.antipode_generator(gen).clone(),
        true,
    );
    rec.finish(Coverage::Exhaustive)
}

pub fn check(h: &BookAlgebra, axiom: Axiom, opts: &CheckOptions) -> AxiomReport {
    match axiom {
        Axiom::Associativity => check_associativity(h, opts),
        Axiom::Coassociativity => check_coassociativity(h),
        Axiom::CounitLaw => check_counit_law(h),
        Axiom::BialgebraCompat => check_bialgebra_compat(h, opts),
        Axiom::AntipodeLaw => check_antipode_law(h),
        Axiom::Relations => check_relations(h),
    }
}

pub fn run_all(h: &BookAlgebra, opts: &CheckOptions) -> SuiteReport {
    SuiteReport {
        p: h.p(),
        s: h.s(),
        permissive: h.is_permissive(),
        axioms: Axiom::ALL.iter().map(|&a| check(h, a, opts)).collect(),
    }
}
