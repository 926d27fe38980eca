//! Monomial ideals with minimal generating sets, their arithmetic, and the
//! primary decomposition of squarefree ones.

use std::fmt;

use crate::complex;
use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// A monomial ideal given by its minimal generators, kept sorted so that
/// structural equality is ideal equality.
///
/// The zero ideal has no generators; the unit ideal is generated by 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, discarding every generator that
    /// is divisible by another (and duplicate copies).
    pub fn new(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut gens: Vec<Monomial> = gens.into_iter().collect();
        for g in &gens {
            assert_eq!(g.nvars(), n, "generator over wrong variable count");
        }
        gens.sort_by_key(|g| (g.degree(), g.clone()));
        gens.dedup();
        let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !minimal.iter().any(|h| h.divides(&g)) {
                minimal.push(g);
            }
        }
        minimal.sort();
        MonomialIdeal { n, gens: minimal }
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: Vec::new(),
        }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Monomial::unit(n)],
        }
    }

    /// The prime ideal generated by the listed variables (1-based).
    pub fn variables(n: usize, vars: &[usize]) -> Self {
        MonomialIdeal::new(n, vars.iter().map(|&v| Monomial::var(n, v)))
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_unit()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    /// Monomial membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    fn check_same_n(&self, other: &MonomialIdeal) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_n(other)?;
        Ok(MonomialIdeal::new(
            self.n,
            self.gens.iter().chain(&other.gens).cloned(),
        ))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_n(other)?;
        Ok(MonomialIdeal::new(
            self.n,
            self.gens
                .iter()
                .flat_map(|g| other.gens.iter().map(move |h| g.mul(h))),
        ))
    }

    /// `self^e`, with `self^0` the unit ideal.
    pub fn power(&self, e: u32) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.n);
        for _ in 0..e {
            acc = acc.product(self).expect("same variable count");
        }
        acc
    }

    /// The ideal `m * self`.
    pub fn scale(&self, m: &Monomial) -> MonomialIdeal {
        assert_eq!(m.nvars(), self.n);
        MonomialIdeal::new(self.n, self.gens.iter().map(|g| g.mul(m)))
    }

    /// Intersection via pairwise lcms of the generators.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_n(other)?;
        Ok(MonomialIdeal::new(
            self.n,
            self.gens
                .iter()
                .flat_map(|g| other.gens.iter().map(move |h| g.lcm(h))),
        ))
    }

    /// Colon ideal `(self : other)`.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_n(other)?;
        let mut acc = MonomialIdeal::unit(self.n);
        for h in &other.gens {
            let per: Vec<Monomial> = self
                .gens
                .iter()
                .map(|g| g.quotient(&g.gcd(h)).expect("gcd divides"))
                .collect();
            acc = acc.intersect(&MonomialIdeal::new(self.n, per))?;
        }
        Ok(acc)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.n, self.gens.iter().map(Monomial::squarefree_part))
    }

    /// Minimal primes of a squarefree ideal, each returned as the sorted list
    /// of its variables. The intersection of the primes is checked to equal
    /// the input. The unit ideal decomposes into nothing; the zero ideal into
    /// the single empty prime.
    pub fn primary_decomposition_squarefree(&self) -> Result<Vec<Vec<usize>>> {
        if !self.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        let cx = complex::complex_from_squarefree_ideal(self)?;
        let mut primes: Vec<Vec<usize>> = cx
            .facets()
            .iter()
            .map(|&f| {
                (1..=self.n)
                    .filter(|&v| f & (1u64 << (v - 1)) == 0)
                    .collect()
            })
            .collect();
        primes.sort();
        let mut check = MonomialIdeal::unit(self.n);
        for p in &primes {
            check = check.intersect(&MonomialIdeal::variables(self.n, p))?;
        }
        assert_eq!(
            check, *self,
            "prime intersection must recover the squarefree ideal"
        );
        Ok(primes)
    }

    /// One monomial per line in symbolic form; `#` starts a comment.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for g in &self.gens {
            s.push_str(&g.to_string());
            s.push('\n');
        }
        s
    }

    /// Parses an ideal file. When `n` is `None` the variable count is the
    /// largest index mentioned.
    pub fn parse(text: &str, n: Option<usize>) -> Result<MonomialIdeal> {
        let lines: Vec<&str> = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .collect();
        let n = match n {
            Some(n) => n,
            None => {
                let mut max = 0usize;
                for l in &lines {
                    for tok in l.split('*') {
                        let tok = tok.trim();
                        if let Some(body) = tok.strip_prefix('x') {
                            let idx = body.split('^').next().unwrap_or("");
                            if let Ok(v) = idx.parse::<usize>() {
                                max = max.max(v);
                            }
                        }
                    }
                }
                max
            }
        };
        let gens: Vec<Monomial> = lines
            .iter()
            .map(|l| Monomial::parse(l, n))
            .collect::<Result<_>>()?;
        Ok(MonomialIdeal::new(n, gens))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
