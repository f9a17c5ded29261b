//! Full character tables realizing the published renormalization values.
//!
//! Each scheme character is constructed deterministically: fit a character
//! to the analytic depth-1 values (free directions defaulted to zero), then
//! shift by the transfer element that moves the `[-1,-3]` entry onto the
//! published value. The quasi-shuffle relation then forces the `[-3,-1]`
//! partner automatically, which is asserted.

use std::collections::BTreeMap;

use qsh_core::characters::LinearMap;
use qsh_core::{
    conv_exp, convolution_product, fit_character, forced_partner, infinitesimal_from_lambda,
    is_transfer, published_value, zeta_depth1, Alphabet, Field, Poly, Rat, RatFun, SchemeName,
    Window, Word,
};

pub fn ratfun_const(r: Rat) -> RatFun {
    RatFun::new(Poly::new(vec![r]), Poly::new(vec![<Rat as Field>::one()]))
}

/// Base window for scheme assets; the tabulated character lives on its
/// antipode envelope so that scheme pairs can feed `transfer_between`.
pub fn scheme_base_window(alphabet: Alphabet) -> Window {
    match alphabet {
        Alphabet::Negative => Window::new(-6, -1, 2, alphabet).unwrap(),
        _ => Window::new(-6, 0, 2, alphabet).unwrap(),
    }
}

fn build<S: Field>(
    window: &Window,
    depth1: impl Fn(i64) -> S,
    v13: S,
) -> Result<LinearMap<S>, qsh_core::Error> {
    let mut zeta: BTreeMap<Word, S> = BTreeMap::new();
    for k in window.letters() {
        zeta.insert(Word::letter(k), depth1(k));
    }
    let base = fit_character(&zeta, window)?;

    let w13 = Word::new(vec![-1, -3]);
    let delta = v13 - base.value(&w13)?;
    // calibrate the λ direction so that exp⋆(λ∘π₁) shifts [-1,-3] by
    // exactly delta (π₁ scales the dual direction, here by 1/2)
    let mut probe = BTreeMap::new();
    probe.insert(w13.clone(), S::one());
    let unit_xi = infinitesimal_from_lambda(&probe, *base.window());
    let unit_shift = conv_exp(&unit_xi)?.value(&w13)?;
    let scale = delta * unit_shift.inv().expect("probe direction moves [-1,-3]");
    let mut lambda = BTreeMap::new();
    lambda.insert(w13, scale);
    let xi = infinitesimal_from_lambda(&lambda, *base.window());
    let shift = conv_exp(&xi)?;
    assert!(is_transfer(&shift), "shift must vanish on the non-singular words");
    convolution_product(&shift, &base)
}

/// The scheme character over ℚ, tabulated on the envelope of
/// [`scheme_base_window`].
pub fn scheme_character(name: SchemeName) -> LinearMap<Rat> {
    let alphabet = match name {
        // the published MP scheme covers all integers, but positive letters
        // carry transcendental values; the exact table stays nonpositive
        SchemeName::Mp => Alphabet::Nonpositive,
        other => other.alphabet(),
    };
    let window = scheme_base_window(alphabet);
    let map = build(
        &window,
        |k| zeta_depth1(k).expect("k <= 0"),
        published_value(name),
    )
    .expect("scheme construction is total on its window");

    let v13 = map.value(&Word::new(vec![-1, -3])).unwrap();
    assert_eq!(v13, published_value(name));
    let v31 = map.value(&Word::new(vec![-3, -1])).unwrap();
    assert_eq!(v31, forced_partner(&v13));
    map
}

/// The one-parameter family character over ℚ(t); `t = 1` specializes to the
/// EMS scheme on every word of the table.
pub fn ems_t_character() -> LinearMap<RatFun> {
    let window = scheme_base_window(Alphabet::Negative);
    let v13 = qsh_core::ems_t_value(&Word::new(vec![-1, -3])).unwrap();
    let map = build(
        &window,
        |k| ratfun_const(zeta_depth1(k).expect("k <= 0")),
        v13,
    )
    .expect("family construction is total on its window");

    let stored = map.value(&Word::new(vec![-1, -3])).unwrap();
    let at_one = stored.eval(&<Rat as Field>::one()).unwrap();
    assert_eq!(at_one, published_value(SchemeName::Ems));
    map
}
