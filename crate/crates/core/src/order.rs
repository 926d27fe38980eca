//! Monomial orders: lexicographic and degree-reverse-lexicographic.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum OrderKind {
    /// Compare by the first differing exponent, highest-ranked variable first.
    Lex,
    /// Compare total degree first; ties are broken by the last differing
    /// exponent, where the *smaller* exponent wins.
    DegRevLex,
}

/// A monomial order together with a variable ranking.
///
/// The ranking is a permutation of `1..=n` listing variables from highest to
/// lowest; an empty ranking means the identity, i.e. `x_1 > x_2 > ... > x_n`.
/// Both kinds are multiplicative total orders with the unit monomial minimal,
/// so Buchberger reductions terminate.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialOrder {
    kind: OrderKind,
    ranking: Vec<usize>,
}

impl MonomialOrder {
    pub fn lex() -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            ranking: Vec::new(),
        }
    }

    pub fn degrevlex() -> Self {
        MonomialOrder {
            kind: OrderKind::DegRevLex,
            ranking: Vec::new(),
        }
    }

    /// Same kind, with an explicit variable ranking (highest first, 1-based).
    pub fn with_ranking(kind: OrderKind, ranking: Vec<usize>) -> Result<Self> {
        let n = ranking.len();
        let mut seen = vec![false; n];
        for &v in &ranking {
            if v < 1 || v > n || seen[v - 1] {
                return Err(Error::InvalidParameter(format!(
                    "ranking is not a permutation of 1..={n}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(MonomialOrder { kind, ranking })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            OrderKind::Lex => "lex",
            OrderKind::DegRevLex => "degrevlex",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(Self::lex()),
            "degrevlex" | "revlex" => Ok(Self::degrevlex()),
            other => Err(Error::Parse(format!("unknown order: {other}"))),
        }
    }

    /// Compares `a` and `b`; errors when the exponent vectors differ in length
    /// or do not match a nonempty ranking.
    pub fn try_compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::DimensionMismatch {
                expected: a.nvars(),
                found: b.nvars(),
            });
        }
        if !self.ranking.is_empty() && self.ranking.len() != a.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.ranking.len(),
                found: a.nvars(),
            });
        }
        Ok(self.compare_unchecked(a, b))
    }

    /// Compares `a` and `b`, panicking on a length mismatch.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.try_compare(a, b).expect("monomials of equal length")
    }

    fn exp_ranked(&self, m: &Monomial, pos: usize) -> i64 {
        let var = if self.ranking.is_empty() {
            pos + 1
        } else {
            self.ranking[pos]
        };
        i64::from(m.exp(var))
    }

    fn compare_unchecked(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let n = a.nvars();
        match self.kind {
            OrderKind::Lex => {
                for pos in 0..n {
                    let diff = self.exp_ranked(a, pos) - self.exp_ranked(b, pos);
                    if diff > 0 {
                        return Ordering::Greater;
                    }
                    if diff < 0 {
                        return Ordering::Less;
                    }
                }
                Ordering::Equal
            }
            OrderKind::DegRevLex => match a.degree().cmp(&b.degree()) {
                Ordering::Equal => {
                    for pos in (0..n).rev() {
                        let diff = self.exp_ranked(a, pos) - self.exp_ranked(b, pos);
                        if diff < 0 {
                            return Ordering::Greater;
                        }
                        if diff > 0 {
                            return Ordering::Less;
                        }
                    }
                    Ordering::Equal
                }
                deg => deg,
            },
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.compare(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}
