//! Characters and infinitesimal characters of the quasi-shuffle algebra,
//! convolution exponential/logarithm, transfer-group membership, the group
//! action on renormalizations, and the solvers that construct characters
//! extending prescribed values on the non-singular words.
//!
//! Characters are represented extensionally: a full table of values on a
//! window. Every identity then becomes a finite assertion. Windows are not
//! closed under the letter sums the antipode creates, so operations that
//! compose with the antipode tabulate their result on the *antipode core*
//! of the input window; conversely the solvers tabulate their output on the
//! *antipode envelope* of the requested window so that inverses taken back
//! on the requested window stay in range.

use alloc::collections::{BTreeMap, BTreeSet};

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coideal::{is_non_singular, Window};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::hopf::{
    composition_series, exp_coeff, log_coeff, quasi_shuffle, Antipode, Eulerian,
};
use crate::scalar::Field;
use crate::solve::AffineSystem;
use crate::word::Word;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MapKind {
    Plain,
    Character,
    Infinitesimal,
}

impl MapKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            MapKind::Plain => "plain",
            MapKind::Character => "character",
            MapKind::Infinitesimal => "infinitesimal",
        }
    }
}

/// A window-bounded linear map `Word -> S`, tabulated on every window word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearMap<S: Field> {
    window: Window,
    table: BTreeMap<Word, S>,
    kind: MapKind,
}

impl<S: Field> LinearMap<S> {
    /// Builds a map from a full table; every window word must be covered
    /// (missing entries are rejected, extra entries are rejected).
    pub fn new(window: Window, table: BTreeMap<Word, S>, kind: MapKind) -> Result<Self> {
        let words = window.enumerate();
        for w in &words {
            if !table.contains_key(w) {
                return Err(Error::IncompleteTable { word: w.clone() });
            }
        }
        if table.len() != words.len() {
            let extra = table
                .keys()
                .find(|w| !window.admits_word(w))
                .cloned()
                .unwrap_or_else(Word::empty);
            return Err(Error::IncompleteTable { word: extra });
        }
        match kind {
            MapKind::Character => {
                if table[&Word::empty()] != S::one() {
                    return Err(Error::KindMismatch { expected: "character (unit value 1)" });
                }
            }
            MapKind::Infinitesimal => {
                if !table[&Word::empty()].is_zero() {
                    return Err(Error::KindMismatch {
                        expected: "infinitesimal character (unit value 0)",
                    });
                }
            }
            MapKind::Plain => {}
        }
        Ok(LinearMap { window, table, kind })
    }

    /// Tabulates `f` on the window.
    pub fn tabulate<F: FnMut(&Word) -> S>(window: Window, mut f: F, kind: MapKind) -> Self {
        let table = window.enumerate().into_iter().map(|w| { let v = f(&w); (w, v) }).collect();
        LinearMap { window, table, kind }
    }

    /// The convolution unit `e = u ∘ ε`.
    pub fn counit_unit(window: Window) -> Self {
        LinearMap::tabulate(
            window,
            |w| if w.is_empty() { S::one() } else { S::zero() },
            MapKind::Character,
        )
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    pub fn kind(&self) -> MapKind {
        self.kind
    }

    pub fn table(&self) -> &BTreeMap<Word, S> {
        &self.table
    }

    pub fn value(&self, w: &Word) -> Result<S> {
        self.table
            .get(w)
            .cloned()
            .ok_or_else(|| Error::OutOfWindow { word: w.clone() })
    }

    /// Linear extension to elements.
    pub fn eval(&self, x: &Element<S>) -> Result<S> {
        let mut acc = S::zero();
        for (w, c) in x.iter() {
            acc = acc + c.clone() * self.value(w)?;
        }
        Ok(acc)
    }

    /// Restriction to a subwindow.
    pub fn restrict(&self, window: &Window) -> Result<LinearMap<S>> {
        if !window.is_subwindow_of(&self.window) {
            return Err(Error::WindowMismatch);
        }
        let table = window
            .enumerate()
            .into_iter()
            .map(|w| {
                let v = self.table[&w].clone();
                (w, v)
            })
            .collect();
        Ok(LinearMap {
            window: *window,
            table,
            kind: self.kind,
        })
    }

    /// Equality of values on a common window.
    pub fn agrees_with(&self, other: &LinearMap<S>, window: &Window) -> bool {
        window
            .enumerate()
            .iter()
            .all(|w| self.table.get(w) == other.table.get(w))
    }
}

/// `(f ⋆ g)(w) = Σ_{uv=w} f(u) g(v)` tabulated on the common window.
/// Deconcatenation never leaves the window, so this is total.
/// Character ⋆ character yields a character.
pub fn convolution_product<S: Field>(f: &LinearMap<S>, g: &LinearMap<S>) -> Result<LinearMap<S>> {
    if f.window != g.window {
        return Err(Error::WindowMismatch);
    }
    let kind = if f.kind == MapKind::Character && g.kind == MapKind::Character {
        MapKind::Character
    } else {
        MapKind::Plain
    };
    Ok(LinearMap::tabulate(
        f.window,
        |w| {
            let mut acc = S::zero();
            for (u, v) in w.splittings() {
                acc = acc + f.table[&u].clone() * g.table[&v].clone();
            }
            acc
        },
        kind,
    ))
}

/// `φ^{-1} = φ ∘ S`, tabulated on the antipode core of φ's window (the
/// largest subwindow whose antipodes stay inside the table).
pub fn char_inverse<S: Field>(phi: &LinearMap<S>) -> Result<LinearMap<S>> {
    let core = phi.window.antipode_core()?;
    char_inverse_within(phi, &core)
}

/// `φ ∘ S` tabulated on an explicit target subwindow; reports the offending
/// word if an antipode term leaves φ's window.
pub fn char_inverse_within<S: Field>(
    phi: &LinearMap<S>,
    target: &Window,
) -> Result<LinearMap<S>> {
    if phi.kind != MapKind::Character {
        return Err(Error::KindMismatch { expected: "character" });
    }
    if !target.is_subwindow_of(&phi.window) {
        return Err(Error::WindowMismatch);
    }
    let mut antipode = Antipode::<S>::new();
    let mut table = BTreeMap::new();
    for w in target.enumerate() {
        let s = antipode.of(&w);
        let mut acc = S::zero();
        for (u, c) in s.iter() {
            match phi.table.get(u) {
                Some(v) => acc = acc + c.clone() * v.clone(),
                None => return Err(Error::OutOfWindow { word: u.clone() }),
            }
        }
        table.insert(w, acc);
    }
    Ok(LinearMap {
        window: *target,
        table,
        kind: MapKind::Character,
    })
}

/// Convolution exponential of an infinitesimal character; the series
/// terminates at `k = len(w)` by conilpotence and the result is a character.
pub fn conv_exp<S: Field>(xi: &LinearMap<S>) -> Result<LinearMap<S>> {
    if xi.kind != MapKind::Infinitesimal {
        return Err(Error::KindMismatch { expected: "infinitesimal character" });
    }
    Ok(LinearMap::tabulate(
        xi.window,
        |w| {
            let base = if w.is_empty() { S::one() } else { S::zero() };
            composition_series(w, base, exp_coeff::<S>, |b| xi.table[b].clone())
        },
        MapKind::Character,
    ))
}

/// Convolution logarithm of a character; inverse of [`conv_exp`], result is
/// an infinitesimal character.
pub fn conv_log<S: Field>(phi: &LinearMap<S>) -> Result<LinearMap<S>> {
    if phi.kind != MapKind::Character {
        return Err(Error::KindMismatch { expected: "character" });
    }
    // (φ - e)(u) = φ(u) for nonempty u, so the series multiplies plain
    // table values over nonempty blocks.
    Ok(LinearMap::tabulate(
        phi.window,
        |w| composition_series(w, S::zero(), log_coeff::<S>, |b| phi.table[b].clone()),
        MapKind::Infinitesimal,
    ))
}

/// A character vanishing on every non-singular window word (an element of
/// the transfer group at this window).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TransferElement<S: Field>(LinearMap<S>);

impl<S: Field> TransferElement<S> {
    pub fn new(map: LinearMap<S>) -> Result<Self> {
        if map.kind != MapKind::Character {
            return Err(Error::KindMismatch { expected: "character" });
        }
        if let Some(w) = transfer_violation(&map) {
            return Err(Error::RestrictionMismatch { word: w });
        }
        Ok(TransferElement(map))
    }

    pub fn identity(window: Window) -> Self {
        TransferElement(LinearMap::counit_unit(window))
    }

    pub fn as_map(&self) -> &LinearMap<S> {
        &self.0
    }

    pub fn into_map(self) -> LinearMap<S> {
        self.0
    }
}

fn transfer_violation<S: Field>(phi: &LinearMap<S>) -> Option<Word> {
    phi.window
        .enumerate_non_singular()
        .into_iter()
        .find(|w| !phi.table[w].is_zero())
}

/// True iff the character vanishes on every non-singular window word.
pub fn is_transfer<S: Field>(phi: &LinearMap<S>) -> bool {
    phi.kind == MapKind::Character && transfer_violation(phi).is_none()
}

/// The transfer-group action `(φ, α) ↦ φ ⋆ α`; the result restricts on the
/// non-singular words to the same values as `α`.
pub fn act<S: Field>(phi: &TransferElement<S>, alpha: &LinearMap<S>) -> Result<LinearMap<S>> {
    if alpha.kind != MapKind::Character {
        return Err(Error::KindMismatch { expected: "character" });
    }
    convolution_product(phi.as_map(), alpha)
}

/// The unique transfer element carrying `β` to `α`: `α ⋆ β^{-1}`, tabulated
/// on the antipode core of the common window. Errors with
/// `RestrictionMismatch` if the two characters disagree on a non-singular
/// window word.
pub fn transfer_between<S: Field>(
    alpha: &LinearMap<S>,
    beta: &LinearMap<S>,
) -> Result<TransferElement<S>> {
    if alpha.window != beta.window {
        return Err(Error::WindowMismatch);
    }
    if alpha.kind != MapKind::Character || beta.kind != MapKind::Character {
        return Err(Error::KindMismatch { expected: "character" });
    }
    for n in alpha.window.enumerate_non_singular() {
        if alpha.table[&n] != beta.table[&n] {
            return Err(Error::RestrictionMismatch { word: n });
        }
    }
    let core = alpha.window.antipode_core()?;
    let beta_inv = char_inverse_within(beta, &core)?;
    let alpha_core = alpha.restrict(&core)?;
    let product = convolution_product(&alpha_core, &beta_inv)?;
    TransferElement::new(product)
}

/// True iff `f(1) = 1` and `f(u * v) = f(u) f(v)` for all nonempty window
/// pairs whose quasi-shuffle product stays inside the window.
pub fn check_character<S: Field>(f: &LinearMap<S>) -> bool {
    if f.table[&Word::empty()] != S::one() {
        return false;
    }
    multiplicativity_holds(f, |lhs, fu, fv| lhs == fu * fv)
}

/// True iff `f(1) = 0` and `f` vanishes on quasi-shuffle products of
/// nonempty window words (window-relative infinitesimal discipline).
pub fn check_infinitesimal<S: Field>(f: &LinearMap<S>) -> bool {
    if !f.table[&Word::empty()].is_zero() {
        return false;
    }
    multiplicativity_holds(f, |lhs, _, _| lhs.is_zero())
}

fn multiplicativity_holds<S: Field>(
    f: &LinearMap<S>,
    check: impl Fn(S, S, S) -> bool,
) -> bool {
    let words = f.window.enumerate_nonempty();
    for (i, u) in words.iter().enumerate() {
        for v in &words[i..] {
            if u.len() + v.len() > f.window.max_len() {
                continue;
            }
            let product = quasi_shuffle::<S>(u, v);
            if product.support().any(|w| !f.window.admits_word(w)) {
                continue;
            }
            let lhs = f.eval(&product).expect("product words admitted");
            if !check(lhs, f.table[u].clone(), f.table[v].clone()) {
                return false;
            }
        }
    }
    true
}

/// The infinitesimal character `ξ = λ ∘ π₁` tabulated on `window`; `λ`
/// entries absent from the map count as zero.
pub fn infinitesimal_from_lambda<S: Field>(
    lambda: &BTreeMap<Word, S>,
    window: Window,
) -> LinearMap<S> {
    let mut eulerian = Eulerian::<S>::new();
    LinearMap::tabulate(
        window,
        |w| {
            if w.is_empty() {
                return S::zero();
            }
            let mut acc = S::zero();
            for (u, c) in eulerian.pi1(w).iter() {
                if let Some(v) = lambda.get(u) {
                    acc = acc + c.clone() * v.clone();
                }
            }
            acc
        },
        MapKind::Infinitesimal,
    )
}

/// Constructs a character `α = exp⋆(λ ∘ π₁)` whose values on the prescribed
/// non-singular window words equal `zeta`. The table may cover any subset of
/// the non-singular window words; unconstrained values come out of the
/// deterministic default-zero solve. The result is tabulated on the antipode
/// envelope of `window`, so its inverse can later be taken back on `window`.
///
/// The solve is staged by word length: at stage `l` the exponential
/// correction terms only involve already-determined values, so each stage is
/// an exact linear system processed in canonical order with free variables
/// defaulted to zero.
pub fn fit_character<S: Field>(
    zeta: &BTreeMap<Word, S>,
    window: &Window,
) -> Result<LinearMap<S>> {
    for w in zeta.keys() {
        if w.is_empty() {
            return Err(Error::EmptyWord);
        }
        if !window.admits_word(w) {
            return Err(Error::OutOfWindow { word: w.clone() });
        }
        if !is_non_singular(w)? {
            return Err(Error::SingularConstraint { word: w.clone() });
        }
    }
    let env = window.antipode_envelope();
    let mut eulerian = Eulerian::<S>::new();
    let mut lambda: BTreeMap<Word, S> = BTreeMap::new();

    // ξ on a word whose π₁ support is already determined
    let xi_known = |eul: &mut Eulerian<S>, lambda: &BTreeMap<Word, S>, w: &Word| {
        let mut acc = S::zero();
        for (u, c) in eul.pi1(w).iter() {
            if let Some(v) = lambda.get(u) {
                acc = acc + c.clone() * v.clone();
            }
        }
        acc
    };

    for stage in 1..=window.max_len() {
        let mut sys = AffineSystem::<S>::new();
        for (n, target) in zeta.iter().filter(|(n, _)| n.len() == stage) {
            let mut lhs = Element::zero();
            let mut rhs = target.clone();
            for (u, c) in eulerian.pi1(n).iter() {
                if u.len() == stage {
                    lhs.add_term(u.clone(), c.clone());
                } else {
                    let known = lambda.get(u).cloned().unwrap_or_else(S::zero);
                    rhs = rhs - c.clone() * known;
                }
            }
            for k in 2..=stage {
                let coeff = exp_coeff::<S>(k);
                for blocks in n.compositions_into(k) {
                    let mut prod = S::one();
                    for b in &blocks {
                        prod = prod * xi_known(&mut eulerian, &lambda, b);
                    }
                    rhs = rhs - coeff.clone() * prod;
                }
            }
            sys.push(lhs, rhs, n.clone());
        }
        if sys.is_empty() {
            continue;
        }
        let sol = sys.solve(&BTreeMap::new())?;
        lambda.extend(sol.values);
    }

    let xi = infinitesimal_from_lambda(&lambda, env);
    let alpha = conv_exp(&xi)?;
    for (n, target) in zeta {
        if &alpha.table[n] != target {
            return Err(Error::InfeasibleWithinWindow { word: n.clone() });
        }
    }
    Ok(alpha)
}

/// A seeded pseudo-random transfer element `exp⋆(λ ∘ π₁)` where `λ` solves
/// the homogeneous constraints `(λ ∘ π₁)(n) = 0` for every non-singular word
/// of the antipode envelope of `window`. Free directions take small-height
/// rationals (numerators in `[-9, 9]`, denominators in `[1, 9]`) drawn from
/// a ChaCha stream, so results reproduce exactly per seed.
pub fn sample_transfer<S: Field>(window: &Window, seed: u64) -> Result<TransferElement<S>> {
    let env = window.antipode_envelope();
    let mut eulerian = Eulerian::<S>::new();

    let mut vars: BTreeSet<Word> = BTreeSet::new();
    let mut sys = AffineSystem::<S>::new();
    let env_words = env.enumerate_nonempty();
    for w in &env_words {
        for u in eulerian.pi1(w).support() {
            vars.insert(u.clone());
        }
    }
    for n in env.enumerate_non_singular() {
        let lhs = eulerian.pi1(&n);
        sys.push(lhs, S::zero(), n);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut defaults: BTreeMap<Word, S> = BTreeMap::new();
    for w in &vars {
        defaults.insert(w.clone(), small_random_scalar::<S>(&mut rng));
    }

    let sol = sys.solve(&defaults)?;
    if sol.pivots.len() >= vars.len() {
        return Err(Error::DegenerateWindow);
    }
    let mut lambda = defaults;
    lambda.extend(sol.values);

    let xi = infinitesimal_from_lambda(&lambda, env);
    let phi = conv_exp(&xi)?;
    TransferElement::new(phi)
}

fn small_random_scalar<S: Field>(rng: &mut ChaCha8Rng) -> S {
    let num = (rng.next_u64() % 19) as i64 - 9;
    let den = (rng.next_u64() % 9) as i64 + 1;
    S::from_ratio(num, den)
}
