mod common;

use bookhopf::mpi::{
    check_convolution_inverse, classify, closed_form_predicate, enumerate_characters,
    enumerate_group_likes, implements_s_squared, is_stable, twist, unique_implementing_pair,
    Character, ClosedForm, GroupLike, PairIndex,
};
use bookhopf::{BookAlgebra, Generator, Monomial};
use common::{basis_pairs, random_monomial, rng};

fn algebra(p: u32, s: u32) -> BookAlgebra {
    BookAlgebra::new(p, s, false).unwrap()
}

fn all_pairs(p: u32) -> impl Iterator<Item = (GroupLike, Character)> {
    (0..p).flat_map(move |i| (0..p).map(move |j| (GroupLike { i }, Character { j })))
}

fn assert_twist_multiplicative(
    h: &BookAlgebra,
    l: GroupLike,
    beta: Character,
    m1: Monomial,
    m2: Monomial,
) {
    let t = |m: Monomial| twist(h, l, beta, &h.monomial(m));
    let lhs = twist(h, l, beta, &h.mul(&h.monomial(m1), &h.monomial(m2)));
    let rhs = h.mul(&t(m1), &t(m2));
    assert_eq!(
        lhs,
        rhs,
        "p={} s={} (i={}, j={}) ({m1})({m2})",
        h.p(),
        h.s(),
        l.i,
        beta.j
    );
}

#[test]
fn twist_is_an_automorphism_p3_exhaustive() {
    for s in 1..3 {
        let h = algebra(3, s);
        for (l, beta) in all_pairs(3) {
            for (m1, m2) in basis_pairs(&h) {
                assert_twist_multiplicative(&h, l, beta, m1, m2);
            }
            assert_eq!(twist(&h, l, beta, &h.one()), h.one());
            // Diagonal with nonzero entries, hence bijective.
            for m in h.basis() {
                let image = twist(&h, l, beta, &h.monomial(m));
                assert_eq!(image.len(), 1);
                assert!(image.coeff(&m).is_some());
            }
        }
    }
}

#[test]
fn twist_is_an_automorphism_p5_sampled() {
    let mut rng = rng(5);
    for s in 1..5 {
        let h = algebra(5, s);
        for (l, beta) in all_pairs(5) {
            for _ in 0..60 {
                let (m1, m2) = (random_monomial(&mut rng, 5), random_monomial(&mut rng, 5));
                assert_twist_multiplicative(&h, l, beta, m1, m2);
            }
        }
    }
}

#[test]
fn twist_generator_formulas() {
    for p in [3u32, 5, 7] {
        for s in 1..p {
            let h = algebra(p, s);
            let k = h.field();
            for (l, beta) in all_pairs(p) {
                let (i, j) = (l.i as i64, beta.j as i64);
                let s = s as i64;
                let g = h.generator(Generator::G);
                let x = h.generator(Generator::X);
                let y = h.generator(Generator::Y);
                assert_eq!(twist(&h, l, beta, &g), g);
                assert_eq!(twist(&h, l, beta, &x), x.scale(&k.root_power(i - j)));
                assert_eq!(
                    twist(&h, l, beta, &y),
                    y.scale(&k.root_power(-i * s - j * s))
                );
            }
        }
    }
}

#[test]
fn generators_decide_implementation() {
    for p in [3u32, 5] {
        for s in 1..p {
            let h = algebra(p, s);
            for (l, beta) in all_pairs(p) {
                let on_generators = Generator::ALL.iter().all(|&gen| {
                    let u = h.generator(gen);
                    twist(&h, l, beta, &u) == h.s_squared(&u)
                });
                assert_eq!(implements_s_squared(&h, l, beta), on_generators);
            }
        }
    }
}

#[test]
fn identity_pair_twists_trivially() {
    let h = algebra(5, 3);
    for m in h.basis() {
        let u = h.monomial(m);
        assert_eq!(twist(&h, GroupLike { i: 0 }, Character::COUNIT, &u), u);
    }
}

#[test]
fn characters_have_convolution_inverses() {
    for p in [3u32, 5, 7] {
        for s in 1..p {
            let h = algebra(p, s);
            for beta in enumerate_characters(&h).unwrap() {
                assert!(
                    check_convolution_inverse(&h, beta),
                    "p={p} s={s} j={}",
                    beta.j
                );
            }
        }
    }
    let h = algebra(3, 1);
    let beta = Character { j: 1 };
    let s_g = h.antipode_mono(Monomial::G);
    assert!((&beta.eval_mono(&h, Monomial::G) * &beta.eval(&h, s_g)).is_one());
}

#[test]
fn enumerations() {
    let h = algebra(3, 1);
    let ls = enumerate_group_likes(&h).unwrap();
    assert_eq!(ls.iter().map(|l| l.i).collect::<Vec<_>>(), vec![0, 1, 2]);
    let h = algebra(5, 2);
    assert_eq!(enumerate_group_likes(&h).unwrap().len(), 5);
    assert_eq!(enumerate_characters(&h).unwrap().len(), 5);
    let g3 = Monomial::g_pow(3);
    assert_eq!(
        h.coproduct_mono(g3).iter().next().map(|(k, _)| *k),
        Some((g3, g3))
    );
}

#[test]
fn pair_examples() {
    let h51 = algebra(5, 1);
    let h52 = algebra(5, 2);
    let pair = |i, j| (GroupLike { i }, Character { j });
    let (l, b) = pair(1, 0);
    assert!(implements_s_squared(&h51, l, b));
    assert!(is_stable(&h51, l, b).0);
    let (l, b) = pair(0, 0);
    assert!(!implements_s_squared(&h52, l, b));
    let (l, b) = pair(4, 3);
    assert!(implements_s_squared(&h52, l, b));
    let (stable, value) = is_stable(&h52, l, b);
    assert!(!stable);
    assert_eq!(value, h52.field().root_power(2));
    for j in 0..5 {
        assert_eq!(
            is_stable(&h52, GroupLike { i: 0 }, Character { j }),
            (true, h52.field().one())
        );
    }
}

#[test]
fn closed_form_examples() {
    let both = ClosedForm {
        implements: true,
        stable: true,
    };
    assert_eq!(closed_form_predicate(5, 1, 1, 0), both);
    assert_eq!(closed_form_predicate(5, 4, 0, 4), both);
    assert_eq!(
        closed_form_predicate(5, 2, 4, 3),
        ClosedForm {
            implements: true,
            stable: false
        }
    );
    assert_eq!(unique_implementing_pair(5, 2), (4, 3));
}

#[test]
fn implementing_pair_always_exists_and_is_unique() {
    for p in [3u32, 5, 7, 11] {
        for s in 1..p {
            let found: Vec<(u32, u32)> = (0..p)
                .flat_map(|i| (0..p).map(move |j| (i, j)))
                .filter(|&(i, j)| closed_form_predicate(p, s, i, j).implements)
                .collect();
            assert_eq!(found, vec![unique_implementing_pair(p, s)], "p={p} s={s}");
        }
    }
}

#[test]
fn classification_examples() {
    let c = classify(&algebra(5, 1)).unwrap();
    assert_eq!(c.mpi, vec![PairIndex { i: 1, j: 0 }]);
    let c = classify(&algebra(5, 2)).unwrap();
    assert!(c.mpi.is_empty());
    assert_eq!(c.implements, vec![PairIndex { i: 4, j: 3 }]);
    let c = classify(&algebra(3, 2)).unwrap();
    assert_eq!(c.mpi, vec![PairIndex { i: 0, j: 2 }]);
    assert_eq!(c.pairs.len(), 9);
    assert!(c.pairs.iter().all(|r| r.closed_form_agrees));
}

#[test]
fn untwisted_algebra_characters_vanish_on_y_by_nilpotency() {
    let h = BookAlgebra::new(5, 0, true).unwrap();
    assert_eq!(enumerate_characters(&h).unwrap().len(), 5);
}
