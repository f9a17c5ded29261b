//! Hopf-algebra structure maps: quasi-shuffle product, deconcatenation
//! coproduct, counit, antipode, and convolution of linear maps.
//!
//! All operations here are total over the unbounded alphabet: a finite
//! computation only ever produces finitely many words, so no window is
//! involved at this level.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::element::{Element, TensorElement};
use crate::error::{Error, Result};
use crate::scalar::{factorial, Field};
use crate::word::Word;

/// The quasi-shuffle recursion:
/// `1 * w = w * 1 = w` and
/// `z_m u * z_n v = z_m(u * z_n v) + z_n(z_m u * v) + z_{m+n}(u * v)`.
pub fn quasi_shuffle<S: Field>(u: &Word, v: &Word) -> Element<S> {
    if u.is_empty() {
        return Element::from_word(v.clone());
    }
    if v.is_empty() {
        return Element::from_word(u.clone());
    }
    let m = u.letters()[0];
    let n = v.letters()[0];
    let ut = u.suffix(1);
    let vt = v.suffix(1);
    let mut out = prepend_all(m, &quasi_shuffle::<S>(&ut, v));
    out.add_assign(&prepend_all(n, &quasi_shuffle::<S>(u, &vt)));
    out.add_assign(&prepend_all(m + n, &quasi_shuffle::<S>(&ut, &vt)));
    out
}

fn prepend_all<S: Field>(k: i64, e: &Element<S>) -> Element<S> {
    let mut out = Element::zero();
    for (w, c) in e.iter() {
        out.add_term(w.prepend(k), c.clone());
    }
    out
}

/// Bilinear extension of the quasi-shuffle product to elements.
pub fn quasi_shuffle_elem<S: Field>(x: &Element<S>, y: &Element<S>) -> Element<S> {
    let mut out = Element::zero();
    for (u, a) in x.iter() {
        for (v, b) in y.iter() {
            out.add_assign(&quasi_shuffle::<S>(u, v).scale(&(a.clone() * b.clone())));
        }
    }
    out
}

/// Quasi-shuffle product of a sequence of words; the empty product is `1`.
pub fn quasi_shuffle_many<S: Field>(words: &[Word]) -> Element<S> {
    let mut acc = Element::one();
    for w in words {
        acc = quasi_shuffle_elem(&acc, &Element::from_word(w.clone()));
    }
    acc
}

/// Deconcatenation coproduct: all `len + 1` prefix/suffix splittings, each
/// with coefficient 1.
pub fn coproduct<S: Field>(w: &Word) -> TensorElement<S> {
    let mut out = TensorElement::zero();
    for (u, v) in w.splittings() {
        out.add_term(u, v, S::one());
    }
    out
}

pub fn coproduct_elem<S: Field>(x: &Element<S>) -> TensorElement<S> {
    let mut out = TensorElement::zero();
    for (w, c) in x.iter() {
        out.add_assign(&coproduct::<S>(w).scale(c));
    }
    out
}

/// Reduced coproduct `Δ(w) - w⊗1 - 1⊗w`; rejects the empty word.
pub fn reduced_coproduct<S: Field>(w: &Word) -> Result<TensorElement<S>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut out = TensorElement::zero();
    for (u, v) in w.splittings() {
        if u.is_empty() || v.is_empty() {
            continue;
        }
        out.add_term(u, v, S::one());
    }
    Ok(out)
}

/// Coefficient of the empty word.
pub fn counit<S: Field>(x: &Element<S>) -> S {
    x.coeff(&Word::empty())
}

/// Iterated reduced coproduct `Δ̃^k(w)` as a sum of `(k+1)`-tuples of
/// nonempty words; empty iff `k >= len(w)` (conilpotence).
pub fn iterated_reduced_coproduct<S: Field>(w: &Word, k: usize) -> BTreeMap<Vec<Word>, S> {
    let mut out = BTreeMap::new();
    for blocks in w.compositions_into(k + 1) {
        out.insert(blocks, S::one());
    }
    out
}

/// Antipode with per-instance memoization; both recursions of the standard
/// formula are available so transcriptions can be cross-checked.
pub struct Antipode<S: Field> {
    memo_left: BTreeMap<Word, Element<S>>,
    memo_right: BTreeMap<Word, Element<S>>,
}

impl<S: Field> Default for Antipode<S> {
    fn default() -> Self {
        Self::new()
    }
}

impl<S: Field> Antipode<S> {
    pub fn new() -> Self {
        Antipode {
            memo_left: BTreeMap::new(),
            memo_right: BTreeMap::new(),
        }
    }

    /// `S(1) = 1`, `S(w) = -w - Σ S(w') * w''` over the reduced coproduct.
    pub fn of(&mut self, w: &Word) -> Element<S> {
        if let Some(e) = self.memo_left.get(w) {
            return e.clone();
        }
        let result = if w.is_empty() {
            Element::one()
        } else {
            let mut acc = -Element::<S>::from_word(w.clone());
            for (prefix, suffix) in w.splittings() {
                if prefix.is_empty() || suffix.is_empty() {
                    continue;
                }
                let s_prefix = self.of(&prefix);
                acc = acc - quasi_shuffle_elem(&s_prefix, &Element::from_word(suffix));
            }
            acc
        };
        self.memo_left.insert(w.clone(), result.clone());
        result
    }

    /// The right-handed recursion `S(w) = -w - Σ w' * S(w'')`.
    pub fn of_right(&mut self, w: &Word) -> Element<S> {
        if let Some(e) = self.memo_right.get(w) {
            return e.clone();
        }
        let result = if w.is_empty() {
            Element::one()
        } else {
            let mut acc = -Element::<S>::from_word(w.clone());
            for (prefix, suffix) in w.splittings() {
                if prefix.is_empty() || suffix.is_empty() {
                    continue;
                }
                let s_suffix = self.of_right(&suffix);
                acc = acc - quasi_shuffle_elem(&Element::from_word(prefix), &s_suffix);
            }
            acc
        };
        self.memo_right.insert(w.clone(), result.clone());
        result
    }

    pub fn of_elem(&mut self, x: &Element<S>) -> Element<S> {
        let mut out = Element::zero();
        for (w, c) in x.iter() {
            out.add_assign(&self.of(w).scale(c));
        }
        out
    }
}

/// One-shot antipode (left recursion) for callers that do not keep a memo.
pub fn antipode<S: Field>(w: &Word) -> Element<S> {
    Antipode::new().of(w)
}

/// One-shot antipode via the right-handed recursion.
pub fn antipode_right<S: Field>(w: &Word) -> Element<S> {
    Antipode::new().of_right(w)
}

/// Convolution of two scalar-valued linear maps against an element:
/// `(f ⋆ g)(x) = m ∘ (f ⊗ g) ∘ Δ (x)`. The maps may be partial
/// (window-bounded) and report `OutOfWindow` through their `Result`.
pub fn convolve<S, F, G>(mut f: F, mut g: G, x: &Element<S>) -> Result<S>
where
    S: Field,
    F: FnMut(&Word) -> Result<S>,
    G: FnMut(&Word) -> Result<S>,
{
    let mut acc = S::zero();
    for (w, c) in x.iter() {
        for (u, v) in w.splittings() {
            acc = acc + c.clone() * f(&u)? * g(&v)?;
        }
    }
    Ok(acc)
}

/// The Eulerian idempotent `π₁ = log^⋆(Id)` on elements, with memoization:
/// for a word of length `n`,
/// `π₁(w) = Σ_{k=1..n} ((-1)^{k+1}/k) Σ_{w = u₁⋯u_k, u_i ≠ 1} u₁ * ⋯ * u_k`.
pub struct Eulerian<S: Field> {
    memo: BTreeMap<Word, Element<S>>,
}

impl<S: Field> Default for Eulerian<S> {
    fn default() -> Self {
        Self::new()
    }
}

impl<S: Field> Eulerian<S> {
    pub fn new() -> Self {
        Eulerian { memo: BTreeMap::new() }
    }

    pub fn pi1(&mut self, w: &Word) -> Element<S> {
        if let Some(e) = self.memo.get(w) {
            return e.clone();
        }
        let n = w.len();
        let mut acc = Element::zero();
        for k in 1..=n {
            let sign = if k % 2 == 1 { S::one() } else { -S::one() };
            let coeff = sign * S::from_int(k as i64).inv().expect("k nonzero");
            let mut level = Element::zero();
            for blocks in w.compositions_into(k) {
                level.add_assign(&quasi_shuffle_many(&blocks));
            }
            acc.add_assign(&level.scale(&coeff));
        }
        self.memo.insert(w.clone(), acc.clone());
        acc
    }

    pub fn pi1_elem(&mut self, x: &Element<S>) -> Element<S> {
        let mut out = Element::zero();
        for (w, c) in x.iter() {
            out.add_assign(&self.pi1(w).scale(c));
        }
        out
    }
}

/// Free-function form of the Eulerian idempotent.
pub fn eulerian_pi1<S: Field>(x: &Element<S>) -> Element<S> {
    Eulerian::new().pi1_elem(x)
}

/// `Σ_{k>=0} x^{*k}/k!`-style helper used by the character module: sums
/// `coeff(k) · Π f(block_i)` over compositions of `w` into `k` nonempty
/// blocks, `k = 1..=len(w)`, plus the `k = 0` term `base`.
pub fn composition_series<S, F, C>(w: &Word, base: S, mut coeff: C, f: F) -> S
where
    S: Field,
    F: Fn(&Word) -> S,
    C: FnMut(usize) -> S,
{
    let mut acc = base;
    for k in 1..=w.len() {
        let c = coeff(k);
        if c.is_zero() {
            continue;
        }
        let mut level = S::zero();
        for blocks in w.compositions_into(k) {
            let mut prod = S::one();
            for b in &blocks {
                prod = prod * f(b);
            }
            level = level + prod;
        }
        acc = acc + c * level;
    }
    acc
}

/// Coefficient `1/k!` for the convolution exponential.
pub fn exp_coeff<S: Field>(k: usize) -> S {
    factorial::<S>(k).inv().expect("factorial nonzero")
}

/// Coefficient `(-1)^{k+1}/k` for the convolution logarithm.
pub fn log_coeff<S: Field>(k: usize) -> S {
    let sign = if k % 2 == 1 { S::one() } else { -S::one() };
    sign * S::from_int(k as i64).inv().expect("k nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::lincomb;
    use crate::scalar::Rat;
    use alloc::vec;

    fn w(letters: &[i64]) -> Word {
        Word::new(letters.to_vec())
    }

    #[test]
    fn quasi_shuffle_of_single_letters() {
        // z_{-1} * z_{-3} = z_{-1}z_{-3} + z_{-3}z_{-1} + z_{-4}
        let got = quasi_shuffle::<Rat>(&w(&[-1]), &w(&[-3]));
        let want = lincomb(vec![(w(&[-1, -3]), 1), (w(&[-3, -1]), 1), (w(&[-4]), 1)]);
        assert_eq!(got, want);
    }

    #[test]
    fn quasi_shuffle_unit_law() {
        let got = quasi_shuffle::<Rat>(&Word::empty(), &w(&[5, 2]));
        assert_eq!(got, Element::from_word(w(&[5, 2])));
    }

    #[test]
    fn quasi_shuffle_len1_len2() {
        let got = quasi_shuffle::<Rat>(&w(&[1]), &w(&[2, 3]));
        let want = lincomb(vec![
            (w(&[1, 2, 3]), 1),
            (w(&[2, 1, 3]), 1),
            (w(&[2, 3, 1]), 1),
            (w(&[2, 4]), 1),
            (w(&[3, 3]), 1),
        ]);
        assert_eq!(got, want);
    }

    #[test]
    fn coproduct_examples() {
        let got = coproduct::<Rat>(&w(&[7]));
        let mut want = TensorElement::zero();
        want.add_term(w(&[7]), Word::empty(), <Rat as Field>::one());
        want.add_term(Word::empty(), w(&[7]), <Rat as Field>::one());
        assert_eq!(got, want);

        let got = coproduct::<Rat>(&Word::empty());
        let want = TensorElement::singleton(Word::empty(), Word::empty(), <Rat as Field>::one());
        assert_eq!(got, want);

        let got = coproduct::<Rat>(&w(&[4, 9]));
        let mut want = TensorElement::zero();
        want.add_term(w(&[4, 9]), Word::empty(), <Rat as Field>::one());
        want.add_term(w(&[4]), w(&[9]), <Rat as Field>::one());
        want.add_term(Word::empty(), w(&[4, 9]), <Rat as Field>::one());
        assert_eq!(got, want);
    }

    #[test]
    fn reduced_coproduct_examples() {
        assert!(reduced_coproduct::<Rat>(&Word::empty()).is_err());
        assert!(reduced_coproduct::<Rat>(&w(&[3])).unwrap().is_zero());
        let got = reduced_coproduct::<Rat>(&w(&[4, 9])).unwrap();
        assert_eq!(got, TensorElement::singleton(w(&[4]), w(&[9]), <Rat as Field>::one()));
        let got = reduced_coproduct::<Rat>(&w(&[1, 2, 3])).unwrap();
        let mut want = TensorElement::zero();
        want.add_term(w(&[1]), w(&[2, 3]), <Rat as Field>::one());
        want.add_term(w(&[1, 2]), w(&[3]), <Rat as Field>::one());
        assert_eq!(got, want);
    }

    #[test]
    fn counit_examples() {
        assert_eq!(counit::<Rat>(&Element::one()), <Rat as Field>::one());
        assert_eq!(counit::<Rat>(&Element::from_word(w(&[3, 1]))), <Rat as Field>::zero());
        let x: Element<Rat> = lincomb(vec![(Word::empty(), 5), (w(&[2]), 2)]);
        assert_eq!(counit(&x), <Rat as Field>::from_int(5));
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(antipode::<Rat>(&Word::empty()), Element::one());
        assert_eq!(antipode::<Rat>(&w(&[5])), lincomb(vec![(w(&[5]), -1)]));
        // S(z_a z_b) = z_b z_a + z_{a+b}
        let got = antipode::<Rat>(&w(&[2, 7]));
        let want = lincomb(vec![(w(&[7, 2]), 1), (w(&[9]), 1)]);
        assert_eq!(got, want);
    }

    #[test]
    fn antipode_right_agrees() {
        let mut calc = Antipode::<Rat>::new();
        for letters in [&[][..], &[4][..], &[2, 7][..], &[1, -1, 3][..]] {
            let word = w(letters);
            assert_eq!(calc.of(&word), calc.of_right(&word));
        }
    }

    #[test]
    fn conilpotence_on_words() {
        for letters in [&[3][..], &[1, 2][..], &[1, 2, 3][..]] {
            let word = w(letters);
            let n = word.len();
            assert!(iterated_reduced_coproduct::<Rat>(&word, n).is_empty());
            if n > 1 {
                assert!(!iterated_reduced_coproduct::<Rat>(&word, n - 1).is_empty());
            }
        }
    }

    #[test]
    fn convolve_counts_splittings() {
        // f = g = (w -> 1) gives the number of splittings: 3 for a 2-letter word.
        let x: Element<Rat> = Element::from_word(w(&[4, 9]));
        let ones = |_: &Word| Ok(<Rat as Field>::one());
        assert_eq!(convolve(ones, ones, &x).unwrap(), <Rat as Field>::from_int(3));
    }

    #[test]
    fn eulerian_pi1_examples() {
        // primitives are fixed
        assert_eq!(
            eulerian_pi1::<Rat>(&Element::from_word(w(&[6]))),
            Element::from_word(w(&[6]))
        );
        // pi1(z_a z_b) = 1/2 (z_a z_b - z_b z_a - z_{a+b})
        let got = eulerian_pi1::<Rat>(&Element::from_word(w(&[2, 7])));
        let want = lincomb::<Rat>(vec![(w(&[2, 7]), 1), (w(&[7, 2]), -1), (w(&[9]), -1)])
            .scale(&<Rat as Field>::from_ratio(1, 2));
        assert_eq!(got, want);
    }

    #[test]
    fn eulerian_annihilates_products() {
        let u = Element::<Rat>::from_word(w(&[1]));
        let v = Element::<Rat>::from_word(w(&[-2, 3]));
        let prod = quasi_shuffle_elem(&u, &v);
        assert!(eulerian_pi1(&prod).is_zero());
    }
}
