//! Formal linear combinations of words and of word pairs.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use crate::scalar::Field;
use crate::word::Word;

/// A finitely-supported map `Word -> S`. Zero coefficients are never stored,
/// so equality of elements is equality of the term maps.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Element<S: Field> {
    terms: BTreeMap<Word, S>,
}

impl<S: Field> Element<S> {
    pub fn zero() -> Self {
        Element { terms: BTreeMap::new() }
    }

    /// The algebra unit: the empty word with coefficient 1.
    pub fn one() -> Self {
        Element::from_word(Word::empty())
    }

    pub fn from_word(w: Word) -> Self {
        Element::singleton(w, S::one())
    }

    pub fn singleton(w: Word, c: S) -> Self {
        let mut e = Element::zero();
        e.add_term(w, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Word) -> S {
        self.terms.get(w).cloned().unwrap_or_else(S::zero)
    }

    pub fn add_term(&mut self, w: Word, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add_assign(&mut self, other: &Element<S>) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &S) -> Element<S> {
        if c.is_zero() {
            return Element::zero();
        }
        let mut out = Element::zero();
        for (w, a) in &self.terms {
            out.add_term(w.clone(), a.clone() * c.clone());
        }
        out
    }

    /// Terms in canonical word order.
    pub fn iter(&self) -> impl Iterator<Item = (&Word, &S)> {
        self.terms.iter()
    }

    /// The smallest word of the support, used as elimination pivot.
    pub fn leading(&self) -> Option<(&Word, &S)> {
        self.terms.iter().next()
    }

    pub fn support(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    /// Applies a word-level linear map and resums.
    pub fn map_words<F: FnMut(&Word) -> Element<S>>(&self, mut f: F) -> Element<S> {
        let mut out = Element::zero();
        for (w, c) in &self.terms {
            out.add_assign(&f(w).scale(c));
        }
        out
    }

    pub fn into_terms(self) -> BTreeMap<Word, S> {
        self.terms
    }
}

impl<S: Field> Add for Element<S> {
    type Output = Element<S>;
    fn add(mut self, rhs: Element<S>) -> Element<S> {
        for (w, c) in rhs.terms {
            self.add_term(w, c);
        }
        self
    }
}

impl<S: Field> Sub for Element<S> {
    type Output = Element<S>;
    fn sub(self, rhs: Element<S>) -> Element<S> {
        self + (-rhs)
    }
}

impl<S: Field> Neg for Element<S> {
    type Output = Element<S>;
    fn neg(self) -> Element<S> {
        Element {
            terms: self.terms.into_iter().map(|(w, c)| (w, -c)).collect(),
        }
    }
}

impl<S: Field> fmt::Display for Element<S> {
    /// Canonical printing: terms in word order, reduced scalars, coefficient 1
    /// omitted, e.g. `1/2*[2] - [0]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let one = S::one();
        let minus_one = -S::one();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.clone() == minus_one.clone() || is_displayed_negative(c);
            let mag = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag == one {
                write!(f, "{w}")?;
            } else {
                write!(f, "{mag}*{w}")?;
            }
        }
        Ok(())
    }
}

/// Whether a scalar should print with a leading minus pulled out. For
/// rational functions this is always false (the sign stays inside the
/// parenthesised numerator).
fn is_displayed_negative<S: Field>(c: &S) -> bool {
    let mut buf = alloc::string::String::new();
    use core::fmt::Write;
    let _ = write!(buf, "{c}");
    buf.starts_with('-')
}

/// A finitely-supported map `(Word, Word) -> S`, the codomain of the
/// deconcatenation coproduct. No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorElement<S: Field> {
    terms: BTreeMap<(Word, Word), S>,
}

impl<S: Field> TensorElement<S> {
    pub fn zero() -> Self {
        TensorElement { terms: BTreeMap::new() }
    }

    pub fn singleton(u: Word, v: Word, c: S) -> Self {
        let mut t = TensorElement::zero();
        t.add_term(u, v, c);
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, u: Word, v: Word, c: S) {
        if c.is_zero() {
            return;
        }
        let key = (u, v);
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

    pub fn add_assign(&mut self, other: &TensorElement<S>) {
        for ((u, v), c) in &other.terms {
            self.add_term(u.clone(), v.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &S) -> TensorElement<S> {
        let mut out = TensorElement::zero();
        for ((u, v), a) in &self.terms {
            out.add_term(u.clone(), v.clone(), a.clone() * c.clone());
        }
        out
    }

    pub fn coeff(&self, u: &Word, v: &Word) -> S {
        self.terms
            .get(&(u.clone(), v.clone()))
            .cloned()
            .unwrap_or_else(S::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Word, Word), &S)> {
        self.terms.iter()
    }

    /// Applies `f ⊗ g` at the word level and resums into an element.
    pub fn map_pairs<F>(&self, mut f: F) -> Element<S>
    where
        F: FnMut(&Word, &Word) -> Element<S>,
    {
        let mut out = Element::zero();
        for ((u, v), c) in &self.terms {
            out.add_assign(&f(u, v).scale(c));
        }
        out
    }
}

impl<S: Field> Sub for TensorElement<S> {
    type Output = TensorElement<S>;
    fn sub(self, rhs: TensorElement<S>) -> TensorElement<S> {
        let mut out = self;
        for ((u, v), c) in rhs.terms {
            out.add_term(u, v, -c);
        }
        out
    }
}

impl<S: Field> Add for TensorElement<S> {
    type Output = TensorElement<S>;
    fn add(self, rhs: TensorElement<S>) -> TensorElement<S> {
        let mut out = self;
        for ((u, v), c) in rhs.terms {
            out.add_term(u, v, c);
        }
        out
    }
}

impl<S: Field> fmt::Display for TensorElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let one = S::one();
        for (i, ((u, v), c)) in self.terms.iter().enumerate() {
            let neg = is_displayed_negative(c);
            let mag = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag == one {
                write!(f, "({u},{v})")?;
            } else {
                write!(f, "{mag}*({u},{v})")?;
            }
        }
        Ok(())
    }
}

/// Convenience constructor used across tests: an element from integer-weighted
/// words.
pub fn lincomb<S: Field>(terms: Vec<(Word, i64)>) -> Element<S> {
    let mut out = Element::zero();
    for (w, c) in terms {
        out.add_term(w, S::from_int(c));
    }
    out
}
