//! Non-singular words, block contractions, windows, and window-bounded
//! linear spans with membership tests.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::hopf::quasi_shuffle_many;
use crate::scalar::Field;
use crate::word::Word;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Alphabet {
    All,
    Nonpositive,
    Negative,
}

impl Alphabet {
    pub fn admits(&self, k: i64) -> bool {
        match self {
            Alphabet::All => true,
            Alphabet::Nonpositive => k <= 0,
            Alphabet::Negative => k <= -1,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Alphabet::All => "all",
            Alphabet::Nonpositive => "nonpositive",
            Alphabet::Negative => "negative",
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

/// A computational bound: letter range, maximum word length, and alphabet
/// restriction. Enumeration and the solver operations are finite exactly
/// because they run inside a window; the algebra maps themselves never need
/// one.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Window {
    letter_min: i64,
    letter_max: i64,
    max_len: usize,
    alphabet: Alphabet,
}

impl Window {
    pub fn new(letter_min: i64, letter_max: i64, max_len: usize, alphabet: Alphabet) -> Result<Self> {
        if letter_min > letter_max {
            return Err(Error::InvalidWindow("letter_min exceeds letter_max"));
        }
        if max_len == 0 {
            return Err(Error::InvalidWindow("max_len must be positive"));
        }
        match alphabet {
            Alphabet::Nonpositive if letter_max > 0 => {
                return Err(Error::InvalidWindow("nonpositive alphabet needs letter_max <= 0"))
            }
            Alphabet::Negative if letter_max > -1 => {
                return Err(Error::InvalidWindow("negative alphabet needs letter_max <= -1"))
            }
            _ => {}
        }
        Ok(Window {
            letter_min,
            letter_max,
            max_len,
            alphabet,
        })
    }

    pub fn letter_min(&self) -> i64 {
        self.letter_min
    }

    pub fn letter_max(&self) -> i64 {
        self.letter_max
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn admits_letter(&self, k: i64) -> bool {
        k >= self.letter_min && k <= self.letter_max && self.alphabet.admits(k)
    }

    pub fn admits_word(&self, w: &Word) -> bool {
        w.len() <= self.max_len && w.letters().iter().all(|&k| self.admits_letter(k))
    }

    pub fn letters(&self) -> Vec<i64> {
        (self.letter_min..=self.letter_max)
            .filter(|&k| self.alphabet.admits(k))
            .collect()
    }

    /// All window words including the empty word, in canonical order.
    pub fn enumerate(&self) -> Vec<Word> {
        let letters = self.letters();
        let mut out = Vec::new();
        out.push(Word::empty());
        let mut current: Vec<Word> = alloc::vec![Word::empty()];
        for _ in 0..self.max_len {
            let mut next = Vec::with_capacity(current.len() * letters.len());
            for w in &current {
                for &k in &letters {
                    let mut v = w.letters().to_vec();
                    v.push(k);
                    next.push(Word::new(v));
                }
            }
            out.extend(next.iter().cloned());
            current = next;
        }
        out
    }

    pub fn enumerate_nonempty(&self) -> Vec<Word> {
        self.enumerate().into_iter().filter(|w| !w.is_empty()).collect()
    }

    /// Non-singular window words, in canonical order.
    pub fn enumerate_non_singular(&self) -> Vec<Word> {
        self.enumerate_nonempty()
            .into_iter()
            .filter(|w| is_non_singular(w).unwrap_or(false))
            .collect()
    }

    /// The smallest window containing every word whose letters are sums of
    /// nonempty letter subsets of this window's words. Antipodes, Eulerian
    /// projections, and quasi-shuffle products of window words all live in
    /// the envelope.
    pub fn antipode_envelope(&self) -> Window {
        let l = self.max_len as i64;
        Window {
            letter_min: self.letter_min.min(l * self.letter_min),
            letter_max: self.letter_max.max(l * self.letter_max),
            max_len: self.max_len,
            alphabet: self.alphabet,
        }
    }

    /// The largest subwindow whose words have every nonempty letter-subset
    /// sum inside this window's letter range; antipodes of core words can be
    /// evaluated against tables on this window.
    pub fn antipode_core(&self) -> Result<Window> {
        let l = self.max_len as i64;
        let min = if self.letter_min >= 0 {
            self.letter_min
        } else {
            // smallest m with l*m >= letter_min
            -((-self.letter_min) / l)
        };
        let max = if self.letter_max <= 0 {
            self.letter_max
        } else {
            self.letter_max / l
        };
        if min > max {
            return Err(Error::InvalidWindow("antipode core is empty"));
        }
        Window::new(min, max, self.max_len, self.alphabet)
    }

    /// True when this window's enumeration is a subset of `other`'s.
    pub fn is_subwindow_of(&self, other: &Window) -> bool {
        self.max_len <= other.max_len
            && self.letters().iter().all(|&k| other.admits_letter(k))
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}..{} {} {}",
            self.letter_min, self.letter_max, self.max_len, self.alphabet
        )
    }
}

/// Whether an integer hits the depth-2 singular locus `{2, 1, 0, -2, -4, ...}`.
pub fn fails_depth2_condition(s: i64) -> bool {
    s == 2 || s == 1 || s == 0 || (s < 0 && s % 2 == 0)
}

/// The non-singular predicate on nonempty words:
/// (i) `k₁ ≠ 1`, (ii) `k₁+k₂ ∉ {2,1,0,-2,-4,...}`,
/// (iii) `k₁+⋯+k_j ∉ ℤ_{≤j}` for `j ≥ 3`.
pub fn is_non_singular(w: &Word) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    for (j, s) in w.partial_sums().enumerate() {
        let j = j + 1;
        let singular = match j {
            1 => s == 1,
            2 => fails_depth2_condition(s),
            _ => s <= j as i64,
        };
        if singular {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All words obtained by replacing one consecutive block of at least two
/// letters by the single letter equal to its sum.
pub fn contractions_one_block(w: &Word) -> Result<BTreeSet<Word>> {
    if w.len() < 2 {
        return Err(Error::WordTooShort { len: w.len(), required: 2 });
    }
    let n = w.len();
    let mut out = BTreeSet::new();
    for start in 0..n {
        for end in start + 2..=n {
            let mut letters = Vec::with_capacity(n - (end - start) + 1);
            letters.extend_from_slice(&w.letters()[..start]);
            letters.push(w.letters()[start..end].iter().sum());
            letters.extend_from_slice(&w.letters()[end..]);
            out.insert(Word::new(letters));
        }
    }
    Ok(out)
}

/// The word `I[w]` whose j-th letter is the sum of the j-th block of `w`
/// under the composition.
pub fn contract_along(w: &Word, composition: &[usize]) -> Result<Word> {
    let total: usize = composition.iter().sum();
    if total != w.len() || composition.iter().any(|&p| p == 0) {
        return Err(Error::CompositionMismatch {
            word_len: w.len(),
            composition_sum: total,
        });
    }
    let mut letters = Vec::with_capacity(composition.len());
    let mut idx = 0;
    for &part in composition {
        letters.push(w.letters()[idx..idx + part].iter().sum());
        idx += part;
    }
    Ok(Word::new(letters))
}

/// Every contraction of `w` under any composition (including the identity).
pub fn all_contractions(w: &Word) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    for parts in 1..=w.len() {
        for blocks in w.compositions_into(parts) {
            out.insert(Word::new(blocks.iter().map(|b| b.letter_sum()).collect()));
        }
    }
    out
}

/// An ordered list of elements in reduced row-echelon form with respect to
/// the canonical word order: rows nonzero, pivot words strictly increasing,
/// pivot coefficients 1, pivot columns eliminated elsewhere.
#[derive(Clone, Debug)]
pub struct SpanBasis<S: Field> {
    rows: Vec<Element<S>>,
    window: Window,
}

impl<S: Field> SpanBasis<S> {
    pub fn empty(window: Window) -> Self {
        SpanBasis { rows: Vec::new(), window }
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Element<S>] {
        &self.rows
    }

    /// Reduces `x` against the basis; the remainder is zero iff `x` lies in
    /// the span.
    pub fn reduce(&self, x: &Element<S>) -> Element<S> {
        let mut rem = x.clone();
        for row in &self.rows {
            let (pivot, _) = row.leading().expect("rows are nonzero");
            let c = rem.coeff(pivot);
            if !c.is_zero() {
                rem = rem - row.scale(&c);
            }
        }
        rem
    }

    pub fn contains(&self, x: &Element<S>) -> bool {
        self.reduce(x).is_zero()
    }

    /// Inserts a vector, keeping reduced row-echelon form. Returns `true` if
    /// the dimension grew.
    pub fn insert(&mut self, x: Element<S>) -> bool {
        let rem = self.reduce(&x);
        let Some((pivot, lead)) = rem.leading().map(|(w, c)| (w.clone(), c.clone())) else {
            return false;
        };
        let row = rem.scale(&lead.inv().expect("leading coefficient nonzero"));
        // eliminate the new pivot from existing rows
        for existing in &mut self.rows {
            let c = existing.coeff(&pivot);
            if !c.is_zero() {
                *existing = existing.clone() - row.scale(&c);
            }
        }
        let pos = self
            .rows
            .partition_point(|r| r.leading().expect("nonzero").0 < &pivot);
        self.rows.insert(pos, row);
        true
    }

    pub fn pivots(&self) -> Vec<Word> {
        self.rows
            .iter()
            .map(|r| r.leading().expect("nonzero").0.clone())
            .collect()
    }
}

/// Echelon basis of the span of the non-singular window words. Distinct
/// words are linearly independent, so this is the canonical word list
/// itself, packaged as a basis.
pub fn n_basis<S: Field>(window: &Window) -> SpanBasis<S> {
    let mut basis = SpanBasis::empty(*window);
    for w in window.enumerate_non_singular() {
        basis.insert(Element::from_word(w));
    }
    basis
}

/// A successful membership certificate: `x = Σ cᵢ · trunc(uᵢ * nᵢ * vᵢ)`
/// with each `nᵢ` non-singular.
#[derive(Clone, Debug)]
pub struct MembershipCertificate<S: Field> {
    pub terms: Vec<(Word, Word, Word, S)>,
}

/// Window-relative membership in the Hopf ideal generated by the
/// non-singular words: `x` is tested against the span of the products
/// `u * n * v` (n non-singular, u, v window words) truncated back to the
/// window. Truncation makes the test window-relative; the untruncated ideal
/// lives in the full algebra and is out of reach.
pub fn ideal_membership<S: Field>(
    x: &Element<S>,
    window: &Window,
) -> Result<Option<MembershipCertificate<S>>> {
    for w in x.support() {
        if !window.admits_word(w) {
            return Err(Error::OutOfWindow { word: w.clone() });
        }
    }
    let words = window.enumerate();
    let non_singular = window.enumerate_non_singular();

    // echelon rows paired with their expression in the generators
    let mut rows: Vec<(Element<S>, Vec<(usize, S)>)> = Vec::new();
    let mut generators: Vec<(Word, Word, Word, Element<S>)> = Vec::new();

    for n in &non_singular {
        for u in &words {
            for v in &words {
                if u.len() + n.len() + v.len() > window.max_len() {
                    continue;
                }
                let product = quasi_shuffle_many::<S>(&[u.clone(), n.clone(), v.clone()]);
                let mut truncated = Element::zero();
                for (w, c) in product.iter() {
                    if window.admits_word(w) {
                        truncated.add_term(w.clone(), c.clone());
                    }
                }
                if truncated.is_zero() {
                    continue;
                }
                generators.push((u.clone(), n.clone(), v.clone(), truncated));
            }
        }
    }

    for (idx, (_, _, _, gen)) in generators.iter().enumerate() {
        let mut rem = gen.clone();
        let mut combo: Vec<(usize, S)> = alloc::vec![(idx, S::one())];
        reduce_tracked(&mut rem, &mut combo, &rows);
        if let Some((_, lead)) = rem.leading() {
            let inv = lead.clone().inv().expect("nonzero");
            let rem = rem.scale(&inv);
            let combo = combo
                .into_iter()
                .map(|(i, c)| (i, c * inv.clone()))
                .collect();
            let pos = rows.partition_point(|(r, _)| {
                r.leading().expect("nonzero").0 < rem.leading().expect("nonzero").0
            });
            rows.insert(pos, (rem, combo));
        }
    }

    let mut rem = x.clone();
    let mut combo: Vec<(usize, S)> = Vec::new();
    reduce_tracked(&mut rem, &mut combo, &rows);
    if !rem.is_zero() {
        return Ok(None);
    }
    // x + Σ combo·gen = 0, so x = Σ (-combo)·gen
    let mut merged: alloc::collections::BTreeMap<usize, S> = alloc::collections::BTreeMap::new();
    for (i, c) in combo {
        let entry = merged.remove(&i).unwrap_or_else(S::zero) + (-c);
        if !entry.is_zero() {
            merged.insert(i, entry);
        }
    }
    let terms = merged
        .into_iter()
        .map(|(i, c)| {
            let (u, n, v, _) = &generators[i];
            (u.clone(), n.clone(), v.clone(), c)
        })
        .collect();
    Ok(Some(MembershipCertificate { terms }))
}

/// Subtracts multiples of echelon rows from `rem`, accumulating the
/// generator combination that was subtracted into `combo`.
fn reduce_tracked<S: Field>(
    rem: &mut Element<S>,
    combo: &mut Vec<(usize, S)>,
    rows: &[(Element<S>, Vec<(usize, S)>)],
) {
    for (row, row_combo) in rows {
        let pivot = row.leading().expect("nonzero").0;
        let c = rem.coeff(pivot);
        if !c.is_zero() {
            *rem = rem.clone() - row.scale(&c);
            for (i, rc) in row_combo {
                combo.push((*i, -(rc.clone() * c.clone())));
            }
        }
    }
}

/// The checkable content of the left-coideal statement: every proper
/// nonempty prefix of a non-singular window word is non-singular.
pub fn prefix_closure_check(window: &Window) -> bool {
    window.enumerate_non_singular().iter().all(|w| {
        (1..w.len()).all(|i| is_non_singular(&w.prefix(i)).unwrap_or(false))
    })
}

/// Every contraction (any composition) of every non-singular window word is
/// non-singular.
pub fn contraction_closure_check(window: &Window) -> bool {
    window.enumerate_non_singular().iter().all(|w| {
        all_contractions(w)
            .iter()
            .all(|c| is_non_singular(c).unwrap_or(false))
    })
}
