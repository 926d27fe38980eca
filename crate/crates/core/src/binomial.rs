//! Pure binomials `x^a - x^b` with coefficients fixed to +1 and -1.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;

/// Which side of a binomial carries the leading monomial under some order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Plus,
    Minus,
}

/// The difference of two distinct monomials, `plus - minus`.
///
/// The zero binomial is never represented; constructors reject equal sides and
/// reduction returns `Option<Binomial>` with `None` for zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    plus: Monomial,
    minus: Monomial,
}

impl Binomial {
    pub fn new(plus: Monomial, minus: Monomial) -> Result<Self> {
        if plus.nvars() != minus.nvars() {
            return Err(Error::DimensionMismatch {
                expected: plus.nvars(),
                found: minus.nvars(),
            });
        }
        if plus == minus {
            return Err(Error::InvalidParameter(
                "zero binomial (equal sides)".into(),
            ));
        }
        Ok(Binomial { plus, minus })
    }

    pub fn plus(&self) -> &Monomial {
        &self.plus
    }

    pub fn minus(&self) -> &Monomial {
        &self.minus
    }

    pub fn nvars(&self) -> usize {
        self.plus.nvars()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.plus.degree() == self.minus.degree()
    }

    /// Leading monomial under `order` and the side it sits on.
    pub fn leading(&self, order: &MonomialOrder) -> (&Monomial, Side) {
        match order.compare(&self.plus, &self.minus) {
            Ordering::Less => (&self.minus, Side::Minus),
            _ => (&self.plus, Side::Plus),
        }
    }

    pub fn trailing(&self, order: &MonomialOrder) -> &Monomial {
        match self.leading(order).1 {
            Side::Plus => &self.minus,
            Side::Minus => &self.plus,
        }
    }

    /// Copy with the leading monomial under `order` stored in `plus`.
    pub fn oriented(&self, order: &MonomialOrder) -> Binomial {
        match self.leading(order).1 {
            Side::Plus => self.clone(),
            Side::Minus => self.negated(),
        }
    }

    pub fn negated(&self) -> Binomial {
        Binomial {
            plus: self.minus.clone(),
            minus: self.plus.clone(),
        }
    }

    /// Orientation-free canonical form: the entrywise-larger exponent vector
    /// goes in `plus`. Used when storing binomials without a monomial order.
    pub fn canonical(&self) -> Binomial {
        if self.plus < self.minus {
            self.negated()
        } else {
            self.clone()
        }
    }

    pub fn same_up_to_sign(&self, other: &Binomial) -> bool {
        self == other || *self == other.negated()
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Binomial {
        Binomial {
            plus: self.plus.mul(m),
            minus: self.minus.mul(m),
        }
    }

    /// Reinterprets the binomial in a larger variable set.
    pub fn extend(&self, n: usize) -> Binomial {
        Binomial {
            plus: self.plus.extend(n),
            minus: self.minus.extend(n),
        }
    }

    /// Parses `"<monomial> - <monomial>"`.
    pub fn parse(s: &str, n: usize) -> Result<Binomial> {
        let (l, r) = s
            .split_once(" - ")
            .ok_or_else(|| Error::Parse(format!("expected `a - b`, got: {s}")))?;
        Binomial::new(Monomial::parse(l, n)?, Monomial::parse(r, n)?)
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.plus, self.minus)
    }
}

impl fmt::Debug for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
