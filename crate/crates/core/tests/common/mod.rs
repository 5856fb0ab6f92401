//! Generators of random test data shared by the integration tests.
#![allow(dead_code)]

use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use superbialg::bialgebra::RMatrix;
use superbialg::tensor::skew_project;
use superbialg::{Element, Generator, HalfInt, Kind, Parity, Rational, Tensor2, Tensor3};

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// Any generator with `|index| <= bound`.
pub fn arb_generator(bound: i64) -> impl Strategy<Value = Generator> {
    let gens = Generator::window(HalfInt::int(bound));
    (0..gens.len()).prop_map(move |i| gens[i])
}

pub fn arb_generator_of(bound: i64, parity: Parity) -> impl Strategy<Value = Generator> {
    let gens: Vec<_> = Generator::window(HalfInt::int(bound))
        .into_iter()
        .filter(|g| g.parity() == parity)
        .collect();
    (0..gens.len()).prop_map(move |i| gens[i])
}

pub fn arb_parity() -> impl Strategy<Value = Parity> {
    prop_oneof![Just(Parity::Even), Just(Parity::Odd)]
}

/// Small nonzero rationals.
pub fn arb_coeff() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4)
        .prop_filter("nonzero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| Rational::new(n, d))
}

pub fn arb_element(bound: i64, max_terms: usize) -> impl Strategy<Value = Element> {
    prop::collection::vec((arb_generator(bound), arb_coeff()), 0..=max_terms)
        .prop_map(|terms| terms.into_iter().collect())
}

/// Parity-homogeneous element, possibly zero.
pub fn arb_homogeneous(bound: i64, max_terms: usize) -> impl Strategy<Value = Element> {
    arb_parity().prop_flat_map(move |p| {
        prop::collection::vec((arb_generator_of(bound, p), arb_coeff()), 0..=max_terms)
            .prop_map(|terms| terms.into_iter().collect::<Element>())
    })
}

pub fn arb_tensor2(bound: i64, max_terms: usize) -> impl Strategy<Value = Tensor2> {
    prop::collection::vec((arb_generator(bound), arb_generator(bound), arb_coeff()), 0..=max_terms)
        .prop_map(|terms| terms.into_iter().map(|(a, b, c)| ((a, b), c)).collect())
}

pub fn arb_tensor3(bound: i64, max_terms: usize) -> impl Strategy<Value = Tensor3> {
    prop::collection::vec(
        (arb_generator(bound), arb_generator(bound), arb_generator(bound), arb_coeff()),
        0..=max_terms,
    )
    .prop_map(|terms| terms.into_iter().map(|(a, b, c, k)| ((a, b, c), k)).collect())
}

/// Even tensor `a⊗b` with `[a] = [b]`.
fn even_key(a: Generator, b: Generator) -> Option<(Generator, Generator)> {
    (a.parity() == b.parity()).then_some((a, b))
}

/// Even super-skew `r`: skew projection of a sum of even basis tensors.
pub fn arb_even_skew_r(bound: i64, max_terms: usize) -> impl Strategy<Value = RMatrix> {
    prop::collection::vec((arb_generator(bound), arb_generator(bound), arb_coeff()), 1..=max_terms)
        .prop_map(|terms| {
            let t: Tensor2 = terms
                .into_iter()
                .filter_map(|(a, b, c)| even_key(a, b).map(|k| (k, c)))
                .collect();
            RMatrix::new(skew_project(&t)).expect("even by construction")
        })
}

/// Seeded sampler for the same family: up to `max_terms` basis tensors
/// before skew projection, all indices within `bound`.
pub fn sample_even_skew_r(rng: &mut ChaCha8Rng, bound: i64, max_terms: usize) -> RMatrix {
    let gens = Generator::window(HalfInt::int(bound));
    loop {
        let n = rng.gen_range(1..=max_terms);
        let mut t = Tensor2::zero();
        for _ in 0..n {
            let a = gens[rng.gen_range(0..gens.len())];
            let same: Vec<_> = gens.iter().filter(|g| g.parity() == a.parity()).collect();
            let b = *same[rng.gen_range(0..same.len())];
            let num = rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 };
            t.add_term((a, b), Rational::new(num, rng.gen_range(1..=3)));
        }
        let r = skew_project(&t);
        if !r.is_zero() {
            return RMatrix::new(r).expect("even by construction");
        }
    }
}

pub fn sample_generator(rng: &mut ChaCha8Rng, bound: i64) -> Generator {
    let gens = Generator::window(HalfInt::int(bound));
    gens[rng.gen_range(0..gens.len())]
}

pub fn gen_of(kind: Kind, twice: i64) -> Option<Generator> {
    Generator::with_index(kind, HalfInt::from_twice(twice))
}

/// The seven `L[1]∗(a⊗b)` closed forms for opposite-index pairs, as
/// `(label, a⊗b, expected)`, for every admissible index in `[-2, 2]`.
pub fn l1_action_cases() -> Vec<(String, Tensor2, Tensor2)> {
    use Kind::{G, L, T};
    let half = q(1, 2);
    let key = |k1, i1: HalfInt, k2, i2: HalfInt| -> Option<(Generator, Generator)> {
        Some((Generator::with_index(k1, i1)?, Generator::with_index(k2, i2)?))
    };
    let one = HalfInt::int(1);
    // (kind a, kind b, domain of the index, coefficient of a⊗[L1,b], coefficient of [L1,a]⊗b)
    type Coeff = fn(&Rational, &Rational) -> Rational;
    type Shape = (&'static str, Kind, Kind, fn(HalfInt) -> bool, Coeff, Coeff);
    let shapes: [Shape; 7] = [
        ("T_r (x) T_-r", T, T, HalfInt::is_half_odd, |x, _| x.clone(), |x, _| -x.clone()),
        ("T_r (x) G_-r", T, G, HalfInt::is_half_odd, |x, h| h + x, |x, _| -x.clone()),
        ("G_r (x) T_-r", G, T, HalfInt::is_half_odd, |x, _| x.clone(), |x, h| -(x - h)),
        ("L_i (x) L_-i", L, L, HalfInt::is_integer, |x, _| x + &Rational::one(), |x, _| -(x - &Rational::one())),
        ("L_j (x) G_-j", L, G, HalfInt::is_integer, |x, h| x + h, |x, _| -(x - &Rational::one())),
        ("G_j (x) L_-j", G, L, HalfInt::is_integer, |x, _| x + &Rational::one(), |x, h| -(x - h)),
        ("G_p (x) G_-p", G, G, |_| true, |x, h| x + h, |x, h| -(x - h)),
    ];
    let mut out = Vec::new();
    for (name, ka, kb, domain, c_right, c_left) in shapes {
        for x in HalfInt::window(HalfInt::int(2)).filter(|x| domain(*x)) {
            let xr = x.to_rational();
            let input = key(ka, x, kb, -x).expect("admissible pair");
            let mut want = Tensor2::zero();
            want.add_term(key(ka, x, kb, one - x).unwrap(), c_right(&xr, &half));
            want.add_term(key(ka, one + x, kb, -x).unwrap(), c_left(&xr, &half));
            out.push((format!("{name} at {x}"), Tensor2::basis(input), want));
        }
    }
    out
}
