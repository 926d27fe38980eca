//! Exact-arithmetic toolkit for toric ideals of graphs and the homological
//! invariants of their initial ideals.
//!
//! The crate follows one pipeline end to end: a finite simple graph gives a
//! toric ideal generated by closed-walk binomials; Buchberger's algorithm
//! turns a generating set into a reduced Gröbner basis and an initial ideal;
//! monomial-ideal arithmetic, Koszul-complex homology, and simplicial
//! topology then decide depth, Cohen-Macaulayness, primary decomposition,
//! and shellability — all over exact coefficients (the rationals or a prime
//! field).
//!
//! ```
//! use edgering::*;
//!
//! // The family graph on 7 vertices; its toric ideal has four generators.
//! let walks = walk_binomials(2)?;
//! let basis = buchberger(&MonomialOrder::degrevlex(), &walks);
//! assert!(basis.is_confluent());
//!
//! // The quotient by the initial ideal has depth 6 but dimension 7.
//! let initial = basis.initial_ideal();
//! assert_eq!(depth_quotient(&initial, FieldTag::RATIONALS)?, 6);
//! assert_eq!(krull_dim_quotient(&initial)?, 7);
//!
//! // The lex initial ideal is squarefree and its complex is shellable.
//! let lex = buchberger(&MonomialOrder::lex(), &walks).initial_ideal();
//! let complex = complex_from_squarefree_ideal(&lex)?;
//! assert!(is_shellable_with_order(&complex, &family_shelling_order(2)?)?);
//! # Ok::<(), Error>(())
//! ```

pub mod betti;
pub mod binomial;
pub mod complex;
pub mod error;
pub mod family;
pub mod graph;
pub mod groebner;
pub mod homology;
pub mod linalg;
pub mod monomial;
pub mod monomial_ideal;
pub mod order;
pub mod repro;

pub use crate::betti::{
    betti_at, betti_table, depth_quotient, extended_graph_report, is_cohen_macaulay,
    krull_dim_quotient, minimal_primes, projective_dimension, BettiTable, ExtendedGraphReport,
};
pub use crate::binomial::{Binomial, Side};
pub use crate::complex::{
    complex_from_squarefree_ideal, family_shelling_order, find_shelling, is_shellable_with_order,
    koszul_complex, stanley_reisner_ideal, ShellingSearch, SimplicialComplex,
};
pub use crate::error::{Error, Result};
pub use crate::graph::{extended_family_graph, family_graph, family_walks, Graph};
pub use crate::groebner::{
    buchberger, buchberger_with, reduce, s_polynomial, toric_kernel_oracle, walk_binomial,
    walk_binomials, BinomialIdeal, BuchbergerOptions, GroebnerBasis,
};
pub use crate::homology::{reduced_homology_dims, FieldTag, HomologyDims};
pub use crate::monomial::Monomial;
pub use crate::monomial_ideal::MonomialIdeal;
pub use crate::order::{MonomialOrder, OrderKind};
pub use crate::repro::{repro, CheckRecord, ReproReport};
