mod common;

use bookhopf::{BookAlgebra, Element, Generator, Monomial, Tensor2, Tensor3};
use common::{basis_pairs, binomial, eval_qpoly, gaussian_binomial};

fn algebra(p: u32, s: u32) -> BookAlgebra {
    BookAlgebra::new(p, s, s == 0).unwrap()
}

/// `Σ_{k=0..n} coeff(k) · leg(k)`.
fn expected_power_coproduct(
    n: u32,
    leg: impl Fn(u32) -> (Monomial, Monomial),
    coeff: impl Fn(u32) -> bookhopf::CycScalar,
) -> Tensor2 {
    let mut out = Tensor2::zero();
    for k in 0..=n {
        out.add_term(leg(k), &coeff(k));
    }
    out
}

#[test]
fn coproduct_of_x_powers_is_gaussian_binomial() {
    for p in [3u32, 5, 7] {
        for s in 1..p {
            let h = algebra(p, s);
            for b in 1..p {
                let expected = expected_power_coproduct(
                    b,
                    |k| {
                        (
                            Monomial::new((b - k) as u8, 0, 0),
                            Monomial::new(k as u8, 0, (b - k) as u8),
                        )
                    },
                    |k| eval_qpoly(h.field(), &gaussian_binomial(b as usize, k as usize), 1),
                );
                let m = Monomial::new(b as u8, 0, 0);
                assert_eq!(h.coproduct_mono(m), &expected, "p={p} s={s} b={b}");
            }
        }
    }
}

#[test]
fn coproduct_of_y_powers_is_gaussian_binomial() {
    for p in [3u32, 5, 7] {
        for s in 1..p {
            let h = algebra(p, s);
            let step = -((s * s) as i64);
            for c in 1..p {
                let expected = expected_power_coproduct(
                    c,
                    |k| {
                        (
                            Monomial::new(0, (c - k) as u8, 0),
                            Monomial::new(0, k as u8, ((s * (c - k)) % p) as u8),
                        )
                    },
                    |k| eval_qpoly(h.field(), &gaussian_binomial(c as usize, k as usize), step),
                );
                let m = Monomial::new(0, c as u8, 0);
                assert_eq!(h.coproduct_mono(m), &expected, "p={p} s={s} c={c}");
            }
        }
    }
}

#[test]
fn gaussian_binomials_vanish_at_primitive_roots() {
    for p in [3usize, 5, 7] {
        let k = bookhopf::CyclotomicField::new(p as u32).unwrap();
        for j in 1..p {
            assert!(eval_qpoly(k, &gaussian_binomial(p, j), 1).is_zero());
        }
    }
    let h = algebra(5, 2);
    let dx = h.coproduct_generator(Generator::X);
    assert!(h.pbw().pow(dx, 5).is_zero());
}

#[test]
fn untwisted_y_power_is_an_ordinary_binomial_sum() {
    for p in [3u32, 5] {
        let h = algebra(p, 0);
        let dy = h.coproduct_generator(Generator::Y);
        let power = h.pbw().pow(dy, p);
        let mut expected = Tensor2::zero();
        for k in 1..p {
            expected.add_term(
                (
                    Monomial::new(0, k as u8, 0),
                    Monomial::new(0, (p - k) as u8, 0),
                ),
                &h.field().from_int(binomial(p as u64, k as u64)),
            );
        }
        assert_eq!(power, expected);
    }
    let h = algebra(3, 0);
    assert_eq!(
        h.pbw()
            .pow(h.coproduct_generator(Generator::Y), 3)
            .to_string(),
        "(3)·y ⊗ y^2 + (3)·y^2 ⊗ y"
    );
}

#[test]
fn coproduct_is_multiplicative_on_basis_pairs() {
    for (p, s) in [(3u32, 1u32), (3, 2), (5, 2)] {
        let h = algebra(p, s);
        for (m1, m2) in basis_pairs(&h) {
            let lhs = h.coproduct(&h.mul(&h.monomial(m1), &h.monomial(m2)));
            let rhs = h.pbw().mul(h.coproduct_mono(m1), h.coproduct_mono(m2));
            assert_eq!(lhs, rhs, "p={p} s={s} ({m1})({m2})");
        }
    }
}

#[test]
fn antipode_is_anti_multiplicative_on_basis_pairs() {
    for (p, s) in [(3u32, 1u32), (3, 2), (5, 2), (5, 4)] {
        let h = algebra(p, s);
        for (m1, m2) in basis_pairs(&h) {
            let lhs = h.antipode(&h.mul(&h.monomial(m1), &h.monomial(m2)));
            let rhs = h.mul(h.antipode_mono(m2), h.antipode_mono(m1));
            assert_eq!(lhs, rhs, "p={p} s={s} ({m1})({m2})");
        }
    }
}

fn apply_s_squared_times(h: &BookAlgebra, u: &Element, k: u32) -> Element {
    (0..k).fold(u.clone(), |acc, _| h.s_squared(&acc))
}

#[test]
fn s_squared_has_order_exactly_p() {
    for p in [3u32, 5, 7] {
        for s in 1..p {
            let h = algebra(p, s);
            for m in h.basis() {
                let u = h.monomial(m);
                assert_eq!(apply_s_squared_times(&h, &u, p), u, "p={p} s={s} m={m}");
            }
            for k in 1..p {
                let moved = h
                    .basis()
                    .any(|m| apply_s_squared_times(&h, &h.monomial(m), k) != h.monomial(m));
                assert!(moved, "S^(2·{k}) is the identity for p={p} s={s}");
            }
        }
    }
}

#[test]
fn s_squared_on_generators() {
    for p in [3u32, 5, 7] {
        for s in 1..p {
            let h = algebra(p, s);
            let g = h.generator(Generator::G);
            let x = h.generator(Generator::X);
            let y = h.generator(Generator::Y);
            assert_eq!(h.s_squared(&g), g);
            assert_eq!(h.s_squared(&x), x.scale(&h.q()));
            let e = -((s * s) as i64);
            assert_eq!(h.s_squared(&y), y.scale(&h.field().root_power(e)));
            // S²(x) = g x g^-1 and S²(y) = g^s y g^-s.
            let conj = |a: u8, u: &Element| {
                let ga = h.monomial(Monomial::g_pow(a % p as u8));
                let ginv = h.monomial(Monomial::g_pow(((p - a as u32 % p) % p) as u8));
                h.mul(&h.mul(&ga, u), &ginv)
            };
            assert_eq!(h.s_squared(&x), conj(1, &x));
            assert_eq!(h.s_squared(&y), conj(s as u8, &y));
        }
    }
}

#[test]
fn antipode_examples() {
    let h = algebra(5, 2);
    let k = h.field();
    assert_eq!(
        h.antipode_mono(Monomial::G),
        &h.monomial(Monomial::g_pow(4))
    );
    assert_eq!(h.antipode_mono(Monomial::ONE), &h.one());
    // S(xg) = S(g) S(x) = -g^-1 x g^-1, normalized by the rewrite oracle.
    let (e, m) = common::rewrite_product(5, 2, Monomial::g_pow(4), Monomial::new(1, 0, 4)).unwrap();
    let expected = h.monomial(m).scale(&-k.root_power(e as i64));
    assert_eq!(h.antipode_mono(Monomial::new(1, 0, 1)), &expected);
    assert_eq!(
        expected,
        h.monomial(Monomial::new(1, 0, 3)).scale(&-k.root_power(-1))
    );
}

#[test]
fn double_coproduct_examples() {
    let h = algebra(5, 3);
    let one = h.field().one();
    let (u, x, g) = (Monomial::ONE, Monomial::X, Monomial::G);
    assert_eq!(h.delta2_mono(g), &Tensor3::term((g, g, g), one.clone()));
    assert_eq!(h.delta2_mono(u), &Tensor3::term((u, u, u), one.clone()));
    let expected: Tensor3 = [(u, u, x), (u, x, g), (x, g, g)]
        .into_iter()
        .map(|k| (k, one.clone()))
        .collect();
    assert_eq!(h.delta2_mono(x), &expected);
    let t = h.coproduct_mono(Monomial::new(2, 0, 0));
    let q = h.q();
    assert_eq!(
        t.coeff(&(Monomial::X, Monomial::new(1, 0, 1))),
        Some(&(&one + &q))
    );
}

#[test]
fn counit_examples() {
    let h = algebra(5, 2);
    let k = h.field();
    let u =
        &h.monomial(Monomial::g_pow(2)).scale(&k.from_int(3)) + &h.monomial(Monomial::new(1, 1, 0));
    assert_eq!(h.counit(&u), k.from_int(3));
    assert!(h.counit_mono(Monomial::X).is_zero());
    assert!(h.counit_mono(Monomial::G).is_one());
}
