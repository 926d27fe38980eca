//! Multigraded Betti numbers of monomial quotients via Koszul simplicial
//! complexes, and the invariants derived from them: projective dimension,
//! depth, Krull dimension, and Cohen-Macaulayness.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::complex;
use crate::error::{Error, Result};
use crate::graph::extended_family_graph;
use crate::groebner::{buchberger, walk_binomials};
use crate::homology::{reduced_homology_dims, FieldTag, HomologyDims};
use crate::monomial::Monomial;
use crate::monomial_ideal::MonomialIdeal;
use crate::order::MonomialOrder;

/// Multigraded Betti numbers of a quotient `S/J`, indexed by `(homological
/// index, multidegree)`; absent entries are zero. Only multidegrees in the
/// lcm lattice of the minimal generators can carry a nonzero entry, which
/// keeps the table finite.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BettiTable {
    n: usize,
    field: FieldTag,
    entries: BTreeMap<(usize, Monomial), u64>,
}

impl BettiTable {
    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn get(&self, i: usize, a: &Monomial) -> u64 {
        self.entries.get(&(i, a.clone())).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, Monomial), u64> {
        &self.entries
    }

    /// Largest homological index with a nonzero entry, i.e. the projective
    /// dimension of `S/J`.
    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }
}

/// `beta_{i,a}(S/J)` for `i >= 1`: the reduced homology of the Koszul complex
/// of `J` in degree `a`, shifted once for the quotient convention.
pub fn betti_at(j: &MonomialIdeal, i: usize, a: &Monomial, field: FieldTag) -> Result<u64> {
    if i == 0 {
        return Err(Error::Precondition(
            "quotient convention: use i >= 1 (beta_0 is 1 in degree 0)".into(),
        ));
    }
    let cx = complex::koszul_complex(j, a);
    Ok(reduced_homology_dims(&cx, field).dim(i as i64 - 2))
}

/// All lcms of nonempty subsets of the generators, as the closure of the
/// generator set under binary lcm.
fn lcm_lattice(j: &MonomialIdeal) -> BTreeSet<Monomial> {
    let mut lattice: BTreeSet<Monomial> = j.gens().iter().cloned().collect();
    let mut frontier: Vec<Monomial> = j.gens().to_vec();
    while let Some(a) = frontier.pop() {
        for g in j.gens() {
            let l = a.lcm(g);
            if lattice.insert(l.clone()) {
                frontier.push(l);
            }
        }
    }
    lattice
}

/// Betti entries for one slice of the lattice. Cone Koszul complexes are
/// skipped outright (their reduced homology vanishes); the remaining
/// homology computations are cached by facet list since distinct
/// multidegrees often share a complex.
fn betti_entries_for<'a>(
    j: &MonomialIdeal,
    field: FieldTag,
    degrees: impl Iterator<Item = &'a Monomial>,
) -> Vec<((usize, Monomial), u64)> {
    let mut out = Vec::new();
    let mut cache: HashMap<Vec<u64>, HomologyDims> = HashMap::new();
    for a in degrees {
        let cx = complex::koszul_complex(j, a);
        if cx.cone_vertex().is_some() {
            continue;
        }
        let dims = cache
            .entry(cx.facets().to_vec())
            .or_insert_with(|| reduced_homology_dims(&cx, field));
        for (degree, dim) in dims.nonzero() {
            let i = usize::try_from(degree + 2).expect("degree >= -1");
            out.push(((i, a.clone()), dim));
        }
    }
    out
}

/// The full Betti table of `S/J` for proper `J`. The multidegree homology
/// computations are independent, so the lattice is striped across threads;
/// assembly into the sorted map makes the result identical for any worker
/// count.
pub fn betti_table(j: &MonomialIdeal, field: FieldTag) -> Result<BettiTable> {
    if j.is_unit() {
        return Err(Error::Precondition(
            "betti_table requires a proper ideal".into(),
        ));
    }
    let mut entries = BTreeMap::new();
    entries.insert((0, Monomial::unit(j.nvars())), 1);
    let lattice: Vec<Monomial> = lcm_lattice(j).into_iter().collect();
    let workers = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .min(lattice.len().max(1));
    if workers <= 1 || lattice.len() < 32 {
        entries.extend(betti_entries_for(j, field, lattice.iter()));
    } else {
        let results = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let lattice = &lattice;
                    scope.spawn(move || {
                        betti_entries_for(j, field, lattice.iter().skip(w).step_by(workers))
                    })
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("worker panicked"))
                .collect::<Vec<_>>()
        });
        entries.extend(results);
    }
    Ok(BettiTable {
        n: j.nvars(),
        field,
        entries,
    })
}

/// Length of the minimal free resolution of `S/J`.
pub fn projective_dimension(j: &MonomialIdeal, field: FieldTag) -> Result<usize> {
    Ok(betti_table(j, field)?.projective_dimension())
}

/// Depth of `S/J` via the Auslander-Buchsbaum formula `depth = n - pd`.
pub fn depth_quotient(j: &MonomialIdeal, field: FieldTag) -> Result<usize> {
    Ok(j.nvars() - projective_dimension(j, field)?)
}

/// Minimal primes of `J` (through its radical), each as a sorted variable
/// list.
pub fn minimal_primes(j: &MonomialIdeal) -> Result<Vec<Vec<usize>>> {
    j.radical().primary_decomposition_squarefree()
}

/// Krull dimension of `S/J`: `n` minus the smallest minimal-prime size.
pub fn krull_dim_quotient(j: &MonomialIdeal) -> Result<usize> {
    if j.is_unit() {
        return Err(Error::Precondition(
            "the unit ideal has an empty quotient".into(),
        ));
    }
    let primes = minimal_primes(j)?;
    let min = primes.iter().map(Vec::len).min().unwrap_or(0);
    Ok(j.nvars() - min)
}

pub fn is_cohen_macaulay(j: &MonomialIdeal, field: FieldTag) -> Result<bool> {
    Ok(depth_quotient(j, field)? == krull_dim_quotient(j)?)
}

/// Pipeline summary for the extended family graph on parameters `(f, d)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtendedGraphReport {
    pub f: usize,
    pub d: usize,
    /// Number of edges, hence of polynomial variables: `2d - f + 1`.
    pub n: usize,
    pub depth_revlex: usize,
    pub dim_revlex: usize,
    pub cm_lex: bool,
    pub normal: bool,
    /// Both initial ideals of the extended graph have the same generators as
    /// those of the base family graph, read in the larger ring.
    pub extension_matches: bool,
}

/// Runs the full pipeline on the extended family graph: normality, depth of
/// the degrevlex initial quotient, Cohen-Macaulayness of the lex one, and
/// the ring-extension identity for both initial ideals.
pub fn extended_graph_report(f: usize, d: usize, field: FieldTag) -> Result<ExtendedGraphReport> {
    let g = extended_family_graph(f, d)?;
    let k = d - f + 1;
    let n = 2 * d - f + 1;
    debug_assert_eq!(g.edge_count(), n);
    let base = walk_binomials(k)?;
    let big = base.extend(n);

    let mut extension_matches = true;
    let mut initial_big = Vec::new();
    for order in [MonomialOrder::degrevlex(), MonomialOrder::lex()] {
        let in_small = buchberger(&order, &base).initial_ideal();
        let in_big = buchberger(&order, &big).initial_ideal();
        let embedded = MonomialIdeal::new(n, in_small.gens().iter().map(|m| m.extend(n)));
        extension_matches &= in_big == embedded;
        initial_big.push(in_big);
    }
    let in_rev = &initial_big[0];
    let in_lex = &initial_big[1];

    Ok(ExtendedGraphReport {
        f,
        d,
        n,
        depth_revlex: depth_quotient(in_rev, field)?,
        dim_revlex: krull_dim_quotient(in_rev)?,
        cm_lex: is_cohen_macaulay(in_lex, field)?,
        normal: g.is_normal_edge_ring()?,
        extension_matches,
    })
}
