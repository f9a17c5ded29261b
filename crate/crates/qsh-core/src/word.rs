//! Words over the alphabet of integer letter-indices.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// A finite sequence of integer letter-indices. Length 0 is the unique empty
/// word, the unit of the algebra. Any integer is a legal letter; alphabet
/// restriction is enforced by [`crate::coideal::Window`], never here.
///
/// Words are ordered by length first, then lexicographically on the letter
/// sequence, so that term maps, elimination pivots, and printed output are
/// deterministic.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word {
    letters: Vec<i64>,
}

impl Word {
    pub fn new(letters: Vec<i64>) -> Self {
        Word { letters }
    }

    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn letter(k: i64) -> Self {
        Word { letters: alloc::vec![k] }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word::new(self.letters[..n].to_vec())
    }

    pub fn suffix(&self, n: usize) -> Word {
        Word::new(self.letters[n..].to_vec())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word::new(letters)
    }

    pub fn prepend(&self, k: i64) -> Word {
        let mut letters = Vec::with_capacity(self.len() + 1);
        letters.push(k);
        letters.extend_from_slice(&self.letters);
        Word::new(letters)
    }

    /// All `len + 1` deconcatenation splittings `(prefix, suffix)`.
    pub fn splittings(&self) -> impl Iterator<Item = (Word, Word)> + '_ {
        (0..=self.len()).map(move |i| (self.prefix(i), self.suffix(i)))
    }

    /// Partial sums `k_1 + ... + k_j` for `j = 1..=len`.
    pub fn partial_sums(&self) -> impl Iterator<Item = i64> + '_ {
        self.letters.iter().scan(0i64, |acc, k| {
            *acc += k;
            Some(*acc)
        })
    }

    pub fn letter_sum(&self) -> i64 {
        self.letters.iter().sum()
    }

    /// Splits into `parts` nonempty consecutive blocks, in all possible ways.
    pub fn compositions_into(&self, parts: usize) -> Vec<Vec<Word>> {
        let n = self.len();
        let mut out = Vec::new();
        if parts == 0 || parts > n {
            return out;
        }
        // choose parts-1 cut positions among 1..n
        let mut cuts: Vec<usize> = (1..parts).collect();
        loop {
            let mut blocks = Vec::with_capacity(parts);
            let mut prev = 0;
            for &c in &cuts {
                blocks.push(Word::new(self.letters[prev..c].to_vec()));
                prev = c;
            }
            blocks.push(Word::new(self.letters[prev..].to_vec()));
            out.push(blocks);
            // next combination of cut positions
            let k = cuts.len();
            if k == 0 {
                break;
            }
            let mut i = k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cuts[i] < n - k + i {
                    cuts[i] += 1;
                    for j in i + 1..k {
                        cuts[j] = cuts[j - 1] + 1;
                    }
                    break;
                }
            }
        }
        out
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, k) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn canonical_order_is_length_then_lex() {
        let a = Word::new(vec![-4]);
        let b = Word::new(vec![-3, -1]);
        let c = Word::new(vec![-1, -3]);
        assert!(a < b);
        assert!(b < c);
        assert!(Word::empty() < a);
    }

    #[test]
    fn splittings_count() {
        let w = Word::new(vec![1, 2, 3]);
        assert_eq!(w.splittings().count(), 4);
        assert_eq!(Word::empty().splittings().count(), 1);
    }

    #[test]
    fn compositions_into_blocks() {
        let w = Word::new(vec![1, 2, 3]);
        assert_eq!(w.compositions_into(1), vec![vec![w.clone()]]);
        assert_eq!(w.compositions_into(2).len(), 2);
        assert_eq!(w.compositions_into(3).len(), 1);
        assert!(w.compositions_into(4).is_empty());
    }

    #[test]
    fn display_matches_grammar() {
        assert_eq!(alloc::format!("{}", Word::new(vec![-1, -3])), "[-1,-3]");
        assert_eq!(alloc::format!("{}", Word::empty()), "[]");
    }
}
