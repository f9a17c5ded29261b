//! The shuffle Hopf algebra, the contraction-indexed exponential/logarithm
//! identifying it with the quasi-shuffle algebra, depth-2 free-Lie-algebra
//! computations, and the graded quotient `W` of brackets by the projections
//! of non-singular words.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::coideal::{contract_along, is_non_singular, Window};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::hopf::quasi_shuffle_elem;
use crate::scalar::{factorial, Field};
use crate::word::Word;

/// A composition of `n`: positive parts summing to `n`.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    // each subset of cut positions 1..n gives a composition
    for mask in 0..(1u32 << (n - 1)) {
        let mut parts = Vec::new();
        let mut current = 1;
        for i in 0..n - 1 {
            if mask & (1 << i) != 0 {
                parts.push(current);
                current = 1;
            } else {
                current += 1;
            }
        }
        parts.push(current);
        out.push(parts);
    }
    out
}

/// The shuffle recursion: interleavings only, no contraction term.
pub fn shuffle<S: Field>(u: &Word, v: &Word) -> Element<S> {
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
    let mut out = prepend_all(m, &shuffle::<S>(&ut, v));
    out.add_assign(&prepend_all(n, &shuffle::<S>(u, &vt)));
    out
}

fn prepend_all<S: Field>(k: i64, e: &Element<S>) -> Element<S> {
    let mut out = Element::zero();
    for (w, c) in e.iter() {
        out.add_term(w.prepend(k), c.clone());
    }
    out
}

pub fn shuffle_elem<S: Field>(x: &Element<S>, y: &Element<S>) -> Element<S> {
    let mut out = Element::zero();
    for (u, a) in x.iter() {
        for (v, b) in y.iter() {
            out.add_assign(&shuffle::<S>(u, v).scale(&(a.clone() * b.clone())));
        }
    }
    out
}

/// Contraction-indexed logarithm
/// `log_H(w) = Σ_{I ⊨ n} ((-1)^{n-l} / (i₁⋯i_l)) · I[w]`.
/// Together with [`hoffman_exp`] it identifies the quasi-shuffle and shuffle
/// pictures; the morphism and inversion checks below are the source of truth
/// for the coefficients.
pub fn hoffman_log<S: Field>(w: &Word) -> Element<S> {
    contraction_sum(w, |parts| {
        let n = parts.iter().sum::<usize>();
        let l = parts.len();
        let sign = if (n - l) % 2 == 0 { S::one() } else { -S::one() };
        let mut den = S::one();
        for &p in parts {
            den = den * S::from_int(p as i64);
        }
        sign * den.inv().expect("nonzero")
    })
}

/// Contraction-indexed exponential
/// `exp_H(w) = Σ_{I ⊨ n} (1 / (i₁!⋯i_l!)) · I[w]`, inverse of
/// [`hoffman_log`].
pub fn hoffman_exp<S: Field>(w: &Word) -> Element<S> {
    contraction_sum(w, |parts| {
        let mut den = S::one();
        for &p in parts {
            den = den * factorial::<S>(p);
        }
        den.inv().expect("nonzero")
    })
}

fn contraction_sum<S: Field>(w: &Word, coeff: impl Fn(&[usize]) -> S) -> Element<S> {
    if w.is_empty() {
        return Element::one();
    }
    let mut out = Element::zero();
    for comp in compositions(w.len()) {
        let contracted = contract_along(w, &comp).expect("composition sums to len");
        out.add_term(contracted, coeff(&comp));
    }
    out
}

pub fn hoffman_log_elem<S: Field>(x: &Element<S>) -> Element<S> {
    x.map_words(|w| hoffman_log(w))
}

pub fn hoffman_exp_elem<S: Field>(x: &Element<S>) -> Element<S> {
    x.map_words(|w| hoffman_exp(w))
}

/// True iff `log_H(u * v) = log_H(u) ⧢ log_H(v)` for all window pairs whose
/// combined length fits the window, and `exp_H ∘ log_H = id` on window words.
/// Equalities are checked in the free algebra, so contraction letters may
/// leave the letter range without harm.
pub fn check_hoffman_morphism<S: Field>(window: &Window) -> bool {
    let words = window.enumerate_nonempty();
    for w in &words {
        if hoffman_exp_elem::<S>(&hoffman_log(w)) != Element::from_word(w.clone()) {
            return false;
        }
    }
    for (i, u) in words.iter().enumerate() {
        for v in &words[i..] {
            if u.len() + v.len() > window.max_len() {
                continue;
            }
            let lhs = hoffman_log_elem(&quasi_shuffle_elem::<S>(
                &Element::from_word(u.clone()),
                &Element::from_word(v.clone()),
            ));
            let rhs = shuffle_elem(&hoffman_log::<S>(u), &hoffman_log::<S>(v));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// True iff for every non-singular window word, every word of its Hoffman
/// logarithm and exponential is non-singular (contraction invariance in
/// action).
pub fn log_preserves_n(window: &Window) -> bool {
    window.enumerate_non_singular().iter().all(|w| {
        hoffman_log::<crate::scalar::Rat>(w)
            .support()
            .chain(hoffman_exp::<crate::scalar::Rat>(w).support())
            .all(|u| is_non_singular(u).unwrap_or(false))
    })
}

/// A depth-2 free-Lie element `Σ c_{k,l} [z_k, z_l]` in the ordered-bracket
/// basis `k > l`; no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieElement2<S: Field> {
    terms: BTreeMap<(i64, i64), S>,
}

impl<S: Field> LieElement2<S> {
    pub fn zero() -> Self {
        LieElement2 { terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c·[z_k, z_l]`, normalizing by antisymmetry into `k > l` order;
    /// `[z_k, z_k] = 0`.
    pub fn add_bracket(&mut self, k: i64, l: i64, c: S) {
        if k == l || c.is_zero() {
            return;
        }
        let (key, c) = if k > l { ((k, l), c) } else { ((l, k), -c) };
        match self.terms.get_mut(&key) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn coeff(&self, k: i64, l: i64) -> S {
        if k == l {
            return S::zero();
        }
        if k > l {
            self.terms.get(&(k, l)).cloned().unwrap_or_else(S::zero)
        } else {
            -self.terms.get(&(l, k)).cloned().unwrap_or_else(S::zero)
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(i64, i64), &S)> {
        self.terms.iter()
    }

    pub fn leading(&self) -> Option<(&(i64, i64), &S)> {
        self.terms.iter().next()
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = LieElement2::zero();
        for (&(k, l), a) in &self.terms {
            out.add_bracket(k, l, a.clone() * c.clone());
        }
        out
    }

    pub fn sub_assign(&mut self, other: &Self) {
        for (&(k, l), c) in &other.terms {
            self.add_bracket(k, l, -c.clone());
        }
    }
}

impl<S: Field> fmt::Display for LieElement2<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, ((k, l), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*[z_{k},z_{l}]")?;
        }
        Ok(())
    }
}

/// The depth-2 Eulerian idempotent of the shuffle algebra on a 2-letter
/// word: `π₁(z_a z_b) = 1/2 (z_a z_b - z_b z_a) = 1/2 [z_a, z_b]`.
pub fn pi1_shuffle_depth2<S: Field>(w: &Word) -> Result<LieElement2<S>> {
    if w.len() != 2 {
        return Err(Error::WordTooShort { len: w.len(), required: 2 });
    }
    let (a, b) = (w.letters()[0], w.letters()[1]);
    let mut out = LieElement2::zero();
    out.add_bracket(a, b, S::from_ratio(1, 2));
    Ok(out)
}

/// Basis of the graded quotient `W` at the requested depth.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum WBasis {
    /// Classes of single letters.
    Depth1(Vec<i64>),
    /// Classes of ordered brackets `(k, l)` with `k > l`.
    Depth2(Vec<(i64, i64)>),
}

impl WBasis {
    pub fn len(&self) -> usize {
        match self {
            WBasis::Depth1(v) => v.len(),
            WBasis::Depth2(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Dimension and representative basis of `W` at depth 1 or 2 over the
/// window letters. Depth 1 is letters modulo non-singular letters; depth 2
/// is ordered brackets modulo the shuffle-picture projections of the
/// non-singular 2-letter window words, computed by exact elimination.
pub fn w_dimension<S: Field>(depth: usize, window: &Window) -> Result<(usize, WBasis)> {
    match depth {
        1 => {
            let survivors: Vec<i64> = window
                .letters()
                .into_iter()
                .filter(|&k| !is_non_singular(&Word::letter(k)).unwrap_or(true))
                .collect();
            Ok((survivors.len(), WBasis::Depth1(survivors)))
        }
        2 => {
            // echelon of the relation space spanned by π₁ of non-singular
            // length-2 window words
            let mut relations: Vec<LieElement2<S>> = Vec::new();
            let letters = window.letters();
            if window.max_len() >= 2 {
                for &a in &letters {
                    for &b in &letters {
                        let w = Word::new(alloc::vec![a, b]);
                        if !is_non_singular(&w).unwrap_or(false) {
                            continue;
                        }
                        let mut rel = pi1_shuffle_depth2::<S>(&w)?;
                        // reduce against existing echelon rows
                        for row in &relations {
                            let (pivot, _) = row.leading().expect("nonzero");
                            let c = rel.coeff(pivot.0, pivot.1);
                            if !c.is_zero() {
                                rel.sub_assign(&row.scale(&c));
                            }
                        }
                        if let Some((_, lead)) = rel.leading() {
                            let inv = lead.clone().inv().expect("nonzero");
                            relations.push(rel.scale(&inv));
                            relations.sort_by(|x, y| {
                                x.leading().unwrap().0.cmp(y.leading().unwrap().0)
                            });
                        }
                    }
                }
            }
            let killed: Vec<(i64, i64)> = relations
                .iter()
                .map(|r| *r.leading().expect("nonzero").0)
                .collect();
            let mut basis = Vec::new();
            for (i, &k) in letters.iter().enumerate() {
                for &l in &letters[..i] {
                    let pair = if k > l { (k, l) } else { (l, k) };
                    if !killed.contains(&pair) {
                        basis.push(pair);
                    }
                }
            }
            basis.sort();
            Ok((basis.len(), WBasis::Depth2(basis)))
        }
        _ => Err(Error::InvalidWindow("depth must be 1 or 2")),
    }
}

/// The literal published candidate basis for the depth-2 quotient:
/// `[z_k, z_l]` with `k > l` and the word `z_k z_l` singular, restricted to
/// the window letters. Compare against the computed quotient with
/// [`w2_basis_diff`]; the two differ exactly when one order of a pair is
/// singular and the other is not.
pub fn w2_paper_basis(window: &Window) -> Vec<(i64, i64)> {
    let letters = window.letters();
    let mut out = Vec::new();
    for &k in &letters {
        for &l in &letters {
            if k > l && !is_non_singular(&Word::new(alloc::vec![k, l])).unwrap_or(true) {
                out.push((k, l));
            }
        }
    }
    out.sort();
    out
}

/// Differences between the computed depth-2 quotient basis and the
/// published candidate set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct W2Diff {
    pub in_both: Vec<(i64, i64)>,
    pub paper_only: Vec<(i64, i64)>,
    pub computed_only: Vec<(i64, i64)>,
}

pub fn w2_basis_diff<S: Field>(window: &Window) -> Result<W2Diff> {
    let (_, basis) = w_dimension::<S>(2, window)?;
    let WBasis::Depth2(computed) = basis else {
        unreachable!("depth 2 requested")
    };
    let paper = w2_paper_basis(window);
    let in_both = computed.iter().filter(|p| paper.contains(p)).cloned().collect();
    let computed_only = computed.iter().filter(|p| !paper.contains(p)).cloned().collect();
    let paper_only = paper.iter().filter(|p| !computed.contains(p)).cloned().collect();
    Ok(W2Diff {
        in_both,
        paper_only,
        computed_only,
    })
}

/// The predicate-count oracle for the depth-2 dimension: the number of
/// unordered letter pairs `{k, l}`, `k ≠ l`, for which both `[k,l]` and
/// `[l,k]` are singular. Each non-singular order contributes the bracket
/// line of the pair as a relation, so only doubly-singular pairs survive.
pub fn w2_dimension_oracle(window: &Window) -> usize {
    let letters = window.letters();
    let mut count = 0;
    for (i, &k) in letters.iter().enumerate() {
        for &l in &letters[..i] {
            let kl = Word::new(alloc::vec![k, l]);
            let lk = Word::new(alloc::vec![l, k]);
            if !is_non_singular(&kl).unwrap_or(false) && !is_non_singular(&lk).unwrap_or(false) {
                count += 1;
            }
        }
    }
    count
}
