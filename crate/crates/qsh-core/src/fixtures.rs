//! Exact reference data: Bernoulli numbers, depth-1 zeta values at
//! nonpositive integers, the three published renormalized values at
//! `(-1,-3)`, the one-parameter family in `t`, and the partner values forced
//! by the quasi-shuffle relation.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::coideal::Alphabet;
use crate::error::{Error, Result};
use crate::ratfun::{Poly, RatFun};
use crate::scalar::{binomial, Field, Rat};
use crate::word::Word;

/// `B_n` in the `B₁ = -1/2` convention, from the defining recurrence
/// `Σ_{k=0}^{n} C(n+1, k) B_k = 0` with `B₀ = 1`.
pub fn bernoulli(n: usize) -> Rat {
    let mut values: Vec<Rat> = Vec::with_capacity(n + 1);
    values.push(One::one());
    for m in 1..=n {
        let mut acc: Rat = Zero::zero();
        for (k, b) in values.iter().enumerate() {
            acc = acc + binomial(m + 1, k) * b;
        }
        let coeff = binomial(m + 1, m);
        values.push(-acc / coeff);
    }
    values.pop().expect("nonempty")
}

/// `ζ(k)` for `k ≤ 0` by analytic continuation:
/// `ζ(-n) = (-1)^n B_{n+1} / (n+1)`. In particular `ζ(0) = B₁ = -1/2` and
/// `ζ(-2m) = 0`.
pub fn zeta_depth1(k: i64) -> Result<Rat> {
    if k >= 1 {
        return Err(Error::MissingEntry { word: Word::letter(k) });
    }
    let n = (-k) as usize;
    let sign: Rat = if n % 2 == 0 {
        One::one()
    } else {
        -<Rat as One>::one()
    };
    Ok(sign * bernoulli(n + 1) / <Rat as Field>::from_int((n + 1) as i64))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SchemeName {
    Gz,
    Ems,
    Mp,
}

impl SchemeName {
    pub fn as_str(&self) -> &'static str {
        match self {
            SchemeName::Gz => "GZ",
            SchemeName::Ems => "EMS",
            SchemeName::Mp => "MP",
        }
    }

    pub fn parse(s: &str) -> Option<SchemeName> {
        match s {
            "GZ" | "gz" => Some(SchemeName::Gz),
            "EMS" | "ems" => Some(SchemeName::Ems),
            "MP" | "mp" => Some(SchemeName::Mp),
            _ => None,
        }
    }

    /// The alphabet the published scheme covers.
    pub fn alphabet(&self) -> Alphabet {
        match self {
            SchemeName::Gz => Alphabet::Nonpositive,
            SchemeName::Ems => Alphabet::Negative,
            SchemeName::Mp => Alphabet::All,
        }
    }
}

impl fmt::Display for SchemeName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Provenance {
    /// Published in the literature.
    Published,
    /// Forced by analytic continuation (depth-1 values on non-singular
    /// letters agree across all schemes).
    Analytic,
    /// Forced from a published value by the quasi-shuffle relation.
    Forced,
}

/// Exact reference values for one renormalization scheme: depth-1 analytic
/// values, the published `(-1,-3)` entry, and its forced `(-3,-1)` partner.
/// Higher-depth values are deliberately absent; they enter only through
/// external character files.
#[derive(Clone, Debug)]
pub struct SchemeTable {
    pub name: SchemeName,
    pub alphabet: Alphabet,
    entries: BTreeMap<Word, (Rat, Provenance)>,
}

impl SchemeTable {
    pub fn get(&self, w: &Word) -> Result<&(Rat, Provenance)> {
        self.entries
            .get(w)
            .ok_or_else(|| Error::MissingEntry { word: w.clone() })
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &(Rat, Provenance))> {
        self.entries.iter()
    }
}

/// Depth-1 letters carried by every scheme table.
const DEPTH1_RANGE: core::ops::RangeInclusive<i64> = -8..=0;

/// The published value of the scheme at `(-1, -3)`.
pub fn published_value(name: SchemeName) -> Rat {
    match name {
        SchemeName::Gz => <Rat as Field>::from_ratio(83, 64512),
        SchemeName::Ems => <Rat as Field>::from_ratio(121, 94080),
        SchemeName::Mp => <Rat as Field>::from_ratio(1, 840),
    }
}

pub fn scheme_table(name: SchemeName) -> SchemeTable {
    let alphabet = name.alphabet();
    let mut entries = BTreeMap::new();
    for k in DEPTH1_RANGE {
        if !alphabet.admits(k) {
            continue;
        }
        entries.insert(
            Word::letter(k),
            (zeta_depth1(k).expect("k <= 0"), Provenance::Analytic),
        );
    }
    let v = published_value(name);
    entries.insert(
        Word::new(vec![-1, -3]),
        (v.clone(), Provenance::Published),
    );
    entries.insert(
        Word::new(vec![-3, -1]),
        (forced_partner(&v), Provenance::Forced),
    );
    SchemeTable {
        name,
        alphabet,
        entries,
    }
}

/// Scheme lookup by `(name, word)`.
pub fn scheme_value(name: SchemeName, w: &Word) -> Result<Rat> {
    scheme_table(name).get(w).map(|(v, _)| v.clone())
}

/// The one-parameter family value
/// `ζ_{EMS,t}(-1,-3) = (1/8064) (166t² + 166t + 31) / ((4t+3)(4t+1))`,
/// stored as a normalized rational function; `t = 1` recovers the EMS value.
pub fn ems_t_value(w: &Word) -> Result<RatFun> {
    if w.letters() != [-1, -3] {
        return Err(Error::MissingEntry { word: w.clone() });
    }
    let r = |n: i64| <Rat as Field>::from_int(n);
    let num = Poly::new(vec![r(31), r(166), r(166)]);
    // 8064 * (4t+3)(4t+1) = 8064 * (16t² + 16t + 3)
    let den = Poly::new(vec![r(3 * 8064), r(16 * 8064), r(16 * 8064)]);
    Ok(RatFun::new(num, den))
}

/// The partner value forced by `ζ(a)ζ(b) = ζ(a,b) + ζ(b,a) + ζ(a+b)` at
/// `(a, b) = (-1, -3)`: all three auxiliary words are non-singular, so
/// `ζ(-3,-1) = ζ(-1)ζ(-3) - ζ(-4) - v = -1/1440 - v`. An involution.
pub fn forced_partner(v: &Rat) -> Rat {
    let product = zeta_depth1(-1).expect("depth 1") * zeta_depth1(-3).expect("depth 1")
        - zeta_depth1(-4).expect("depth 1");
    product - v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rat {
        <Rat as Field>::from_ratio(n, d)
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(0), rat(1, 1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(3), rat(0, 1));
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn zeta_depth1_values() {
        assert_eq!(zeta_depth1(0).unwrap(), rat(-1, 2));
        assert_eq!(zeta_depth1(-1).unwrap(), rat(-1, 12));
        assert_eq!(zeta_depth1(-3).unwrap(), rat(1, 120));
        assert_eq!(zeta_depth1(-4).unwrap(), rat(0, 1));
        assert!(zeta_depth1(1).is_err());
        assert!(zeta_depth1(2).is_err());
    }

    #[test]
    fn published_values() {
        let w = Word::new(alloc::vec![-1, -3]);
        assert_eq!(scheme_value(SchemeName::Gz, &w).unwrap(), rat(83, 64512));
        assert_eq!(scheme_value(SchemeName::Ems, &w).unwrap(), rat(121, 94080));
        assert_eq!(scheme_value(SchemeName::Mp, &w).unwrap(), rat(1, 840));
    }

    #[test]
    fn ems_t_specializations() {
        let w = Word::new(alloc::vec![-1, -3]);
        let fam = ems_t_value(&w).unwrap();
        assert_eq!(fam.eval(&rat(1, 1)).unwrap(), rat(121, 94080));
        assert_eq!(fam.eval(&rat(0, 1)).unwrap(), rat(31, 24192));
        assert!(ems_t_value(&Word::new(alloc::vec![-3, -1])).is_err());
    }

    #[test]
    fn forced_partner_values() {
        assert_eq!(forced_partner(&rat(83, 64512)), rat(-71, 35840));
        assert_eq!(forced_partner(&rat(1, 840)), rat(-19, 10080));
        // fixed point of the involution
        assert_eq!(forced_partner(&rat(-1, 2880)), rat(-1, 2880));
    }

    #[test]
    fn forced_partner_is_involution() {
        for v in [rat(83, 64512), rat(121, 94080), rat(1, 840), rat(7, 13)] {
            assert_eq!(forced_partner(&forced_partner(&v)), v);
        }
    }

    #[test]
    fn schemes_agree_on_non_singular_entries() {
        use crate::coideal::is_non_singular;
        let tables = [
            scheme_table(SchemeName::Gz),
            scheme_table(SchemeName::Ems),
            scheme_table(SchemeName::Mp),
        ];
        for t in &tables {
            for (w, (v, _)) in t.iter() {
                if is_non_singular(w).unwrap() && w.len() == 1 {
                    assert_eq!(v, &zeta_depth1(w.letters()[0]).unwrap());
                }
            }
        }
        // schemes differ only on singular words
        let w13 = Word::new(alloc::vec![-1, -3]);
        assert!(!is_non_singular(&w13).unwrap());
    }
}
