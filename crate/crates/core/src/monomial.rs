//! Monomials as exponent vectors with exact integer arithmetic.

use std::fmt;

use crate::error::{Error, Result};

/// A monomial in a fixed number of variables, stored as its exponent vector.
///
/// `exps[i]` is the exponent of the variable `x_{i+1}`; variables are 1-based
/// in every public interface. The all-zero vector is the unit monomial.
///
/// The derived `Ord` compares exponent vectors entrywise and is used only for
/// canonical storage order; it is *not* a monomial order (see
/// [`crate::order::MonomialOrder`]).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The unit monomial 1 in `n` variables.
    pub fn unit(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// The single variable `x_var` (1-based) in `n` variables.
    pub fn var(n: usize, var: usize) -> Self {
        Self::from_powers(n, &[(var, 1)])
    }

    /// Builds a monomial from `(variable, exponent)` pairs, variables 1-based.
    /// Repeated variables accumulate.
    pub fn from_powers(n: usize, powers: &[(usize, u32)]) -> Self {
        let mut exps = vec![0u32; n];
        for &(var, e) in powers {
            assert!(
                var >= 1 && var <= n,
                "variable x_{var} out of range 1..={n}"
            );
            exps[var - 1] = exps[var - 1].checked_add(e).expect("exponent overflow");
        }
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of `x_var` (1-based).
    pub fn exp(&self, var: usize) -> u32 {
        self.exps[var - 1]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
            .collect();
        Monomial { exps }
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.nvars() == other.nvars() && self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// `self / other`; errors unless `other` divides `self`.
    pub fn quotient(&self, other: &Monomial) -> Result<Monomial> {
        if !other.divides(self) {
            return Err(Error::Precondition(format!(
                "{other} does not divide {self}"
            )));
        }
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a - b)
            .collect();
        Ok(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Monomial { exps }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.min(b))
            .collect();
        Monomial { exps }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Squarefree monomial on the same support.
    pub fn squarefree_part(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&e| u32::from(e > 0)).collect(),
        }
    }

    /// Variables with nonzero exponent, 1-based, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Support as a bitmask; bit `i` set means `x_{i+1}` occurs.
    pub fn support_mask(&self) -> u64 {
        assert!(self.nvars() <= 64, "support mask limited to 64 variables");
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | (1 << i))
    }

    /// Reinterprets the monomial in a larger variable set, padding with zeros.
    pub fn extend(&self, n: usize) -> Monomial {
        assert!(n >= self.nvars());
        let mut exps = self.exps.clone();
        exps.resize(n, 0);
        Monomial { exps }
    }

    /// Parses either the symbolic form `x3^2*x7` (or `1`) or a raw exponent
    /// vector `[0,0,2,0,0,0,1]`. For the symbolic form `n` fixes the ambient
    /// variable count.
    pub fn parse(s: &str, n: usize) -> Result<Monomial> {
        let s = s.trim();
        if s.starts_with('[') {
            let inner = s
                .strip_prefix('[')
                .and_then(|t| t.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("malformed exponent vector: {s}")))?;
            let exps: Vec<u32> = if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner
                    .split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad exponent: {t}")))
                    })
                    .collect::<Result<_>>()?
            };
            if exps.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: exps.len(),
                });
            }
            return Ok(Monomial { exps });
        }
        if s == "1" {
            return Ok(Monomial::unit(n));
        }
        let mut exps = vec![0u32; n];
        for factor in s.split('*') {
            let factor = factor.trim();
            let body = factor
                .strip_prefix('x')
                .ok_or_else(|| Error::Parse(format!("expected variable, got: {factor}")))?;
            let (var, pow) = match body.split_once('^') {
                Some((v, p)) => (v, p),
                None => (body, "1"),
            };
            let var: usize = var
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable index: {factor}")))?;
            let pow: u32 = pow
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent: {factor}")))?;
            if var < 1 || var > n {
                return Err(Error::Parse(format!(
                    "variable x_{var} out of range 1..={n}"
                )));
            }
            exps[var - 1] = exps[var - 1]
                .checked_add(pow)
                .ok_or_else(|| Error::Parse("exponent overflow".into()))?;
        }
        Ok(Monomial { exps })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
