//! Exact Gaussian elimination over word-indexed variables.
//!
//! Rows are sparse linear forms (reusing [`Element`] with words as variable
//! names) together with a right-hand side. Pivoting is first-nonzero in the
//! canonical word order, with no heuristics, so solutions are reproducible.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::scalar::Field;
use crate::word::Word;

/// A system `Σ c_w · λ(w) = rhs` per row.
pub struct AffineSystem<S: Field> {
    rows: Vec<(Element<S>, S, Word)>,
}

impl<S: Field> Default for AffineSystem<S> {
    fn default() -> Self {
        Self::new()
    }
}

impl<S: Field> AffineSystem<S> {
    pub fn new() -> Self {
        AffineSystem { rows: Vec::new() }
    }

    /// Adds a constraint; `origin` names the constraint for error reporting.
    pub fn push(&mut self, lhs: Element<S>, rhs: S, origin: Word) {
        self.rows.push((lhs, rhs, origin));
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Solves the system. Variables not forced by a pivot take their value
    /// from `defaults` (absent entries default to zero). Returns the full
    /// assignment for every variable mentioned in any row.
    ///
    /// `Err(InfeasibleWithinWindow)` carries the origin word of the first
    /// inconsistent constraint.
    pub fn solve(&self, defaults: &BTreeMap<Word, S>) -> Result<Solution<S>> {
        // forward pass: triangularize
        let mut echelon: Vec<(Element<S>, S, Word)> = Vec::new();
        for (lhs, rhs, origin) in &self.rows {
            let mut row = lhs.clone();
            let mut rhs = rhs.clone();
            for (erow, erhs, _) in &echelon {
                let pivot = erow.leading().expect("nonzero").0;
                let c = row.coeff(pivot);
                if !c.is_zero() {
                    row = row - erow.scale(&c);
                    rhs = rhs - erhs.clone() * c;
                }
            }
            match row.leading() {
                None => {
                    if !rhs.is_zero() {
                        return Err(Error::InfeasibleWithinWindow { word: origin.clone() });
                    }
                }
                Some((_, lead)) => {
                    let inv = lead.clone().inv().expect("nonzero");
                    let row = row.scale(&inv);
                    let rhs = rhs * inv;
                    let pos = echelon.partition_point(|(r, _, _)| {
                        r.leading().expect("nonzero").0 < row.leading().expect("nonzero").0
                    });
                    echelon.insert(pos, (row, rhs, origin.clone()));
                }
            }
        }

        let pivots: Vec<Word> = echelon
            .iter()
            .map(|(r, _, _)| r.leading().expect("nonzero").0.clone())
            .collect();

        // assign non-pivot variables, then back-substitute in descending
        // pivot order (every non-pivot entry of a row is larger than its
        // pivot, so later pivots are already known)
        let mut values: BTreeMap<Word, S> = BTreeMap::new();
        for (row, _, _) in &echelon {
            for w in row.support() {
                if !pivots.contains(w) {
                    let v = defaults.get(w).cloned().unwrap_or_else(S::zero);
                    values.insert(w.clone(), v);
                }
            }
        }
        for (row, rhs, _) in echelon.iter().rev() {
            let (pivot, _) = row.leading().expect("nonzero");
            let mut v = rhs.clone();
            for (w, c) in row.iter() {
                if w != pivot {
                    v = v - c.clone() * values.get(w).cloned().unwrap_or_else(S::zero);
                }
            }
            values.insert(pivot.clone(), v);
        }

        Ok(Solution { values, pivots })
    }
}

#[derive(Debug)]
pub struct Solution<S: Field> {
    /// Assignment for every variable that occurred in the system.
    pub values: BTreeMap<Word, S>,
    /// Pivot variables, in canonical order.
    pub pivots: Vec<Word>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    fn w(letters: &[i64]) -> Word {
        Word::new(letters.to_vec())
    }

    fn rat(n: i64, d: i64) -> Rat {
        <Rat as Field>::from_ratio(n, d)
    }

    #[test]
    fn solves_a_small_system() {
        // x + y = 3, x - y = 1 over variables [1], [2]
        let mut sys = AffineSystem::<Rat>::new();
        let mut r1 = Element::zero();
        r1.add_term(w(&[1]), rat(1, 1));
        r1.add_term(w(&[2]), rat(1, 1));
        sys.push(r1, rat(3, 1), w(&[1]));
        let mut r2 = Element::zero();
        r2.add_term(w(&[1]), rat(1, 1));
        r2.add_term(w(&[2]), rat(-1, 1));
        sys.push(r2, rat(1, 1), w(&[2]));
        let sol = sys.solve(&BTreeMap::new()).unwrap();
        assert_eq!(sol.values[&w(&[1])], rat(2, 1));
        assert_eq!(sol.values[&w(&[2])], rat(1, 1));
    }

    #[test]
    fn underdetermined_uses_defaults() {
        // x + y = 3; y free, defaulted to 5 -> x = -2
        let mut sys = AffineSystem::<Rat>::new();
        let mut r1 = Element::zero();
        r1.add_term(w(&[1]), rat(1, 1));
        r1.add_term(w(&[2]), rat(1, 1));
        sys.push(r1, rat(3, 1), w(&[1]));
        let mut defaults = BTreeMap::new();
        defaults.insert(w(&[2]), rat(5, 1));
        let sol = sys.solve(&defaults).unwrap();
        assert_eq!(sol.values[&w(&[1])], rat(-2, 1));
        assert_eq!(sol.values[&w(&[2])], rat(5, 1));
        assert_eq!(sol.pivots, alloc::vec![w(&[1])]);
    }

    #[test]
    fn inconsistent_reports_origin() {
        let mut sys = AffineSystem::<Rat>::new();
        let mut r1 = Element::zero();
        r1.add_term(w(&[1]), rat(1, 1));
        sys.push(r1.clone(), rat(3, 1), w(&[7]));
        sys.push(r1, rat(4, 1), w(&[8]));
        match sys.solve(&BTreeMap::new()) {
            Err(Error::InfeasibleWithinWindow { word }) => assert_eq!(word, w(&[8])),
            other => panic!("expected infeasibility, got {other:?}"),
        }
    }
}
