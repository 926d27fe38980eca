//! Simplicial complexes on a fixed vertex set, stored by their facets.
//!
//! Faces are bitmasks (`bit v-1` set means vertex `v` is in the face), which
//! caps the vertex count at 64 — plenty for the instances this crate handles.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::monomial_ideal::MonomialIdeal;

pub fn mask_from_vertices(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0u64, |m, &v| {
        assert!((1..=64).contains(&v), "vertex {v} out of range");
        m | (1u64 << (v - 1))
    })
}

pub fn vertices_from_mask(mask: u64) -> Vec<usize> {
    (1..=64)
        .filter(|&v| mask & (1u64 << (v - 1)) != 0)
        .collect()
}

/// A simplicial complex given by its facet antichain.
///
/// The void complex (no faces at all) and the empty complex (single facet
/// `{}`) are distinct values: the former has no facets, the latter the facet
/// `0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SimplicialComplex {
    vertex_count: usize,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    /// Builds the complex generated by the given faces: the facets are the
    /// maximal ones. An empty list yields the void complex.
    pub fn from_faces(vertex_count: usize, faces: impl IntoIterator<Item = u64>) -> Self {
        assert!(vertex_count <= 64, "at most 64 vertices supported");
        let mut faces: Vec<u64> = faces.into_iter().collect();
        for &f in &faces {
            assert!(
                vertex_count == 64 || f < (1u64 << vertex_count),
                "face outside the vertex set"
            );
        }
        faces.sort_unstable();
        faces.dedup();
        let maximal: Vec<u64> = faces
            .iter()
            .filter(|&&f| !faces.iter().any(|&g| g != f && f & g == f))
            .copied()
            .collect();
        SimplicialComplex {
            vertex_count,
            facets: maximal,
        }
    }

    pub fn from_facet_sets(vertex_count: usize, facets: &[Vec<usize>]) -> Self {
        Self::from_faces(vertex_count, facets.iter().map(|f| mask_from_vertices(f)))
    }

    pub fn void(vertex_count: usize) -> Self {
        SimplicialComplex {
            vertex_count,
            facets: Vec::new(),
        }
    }

    /// The complex whose only face is the empty set.
    pub fn empty_complex(vertex_count: usize) -> Self {
        SimplicialComplex {
            vertex_count,
            facets: vec![0],
        }
    }

    pub fn full_simplex(vertex_count: usize) -> Self {
        let mask = if vertex_count == 64 {
            u64::MAX
        } else {
            (1u64 << vertex_count) - 1
        };
        SimplicialComplex {
            vertex_count,
            facets: vec![mask],
        }
    }

    /// Boundary of the simplex on `1..=vertex_count`: all proper subsets.
    pub fn simplex_boundary(vertex_count: usize) -> Self {
        let full = if vertex_count == 64 {
            u64::MAX
        } else {
            (1u64 << vertex_count) - 1
        };
        Self::from_faces(vertex_count, (0..vertex_count).map(|v| full & !(1u64 << v)))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    pub fn facet_sets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&f| vertices_from_mask(f)).collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension, with `None` for the void complex and `-1` for `{{}}`.
    pub fn dim(&self) -> Option<i64> {
        self.facets.iter().map(|f| f.count_ones() as i64 - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            None => true,
            Some(&f0) => {
                let s = f0.count_ones();
                self.facets.iter().all(|f| f.count_ones() == s)
            }
        }
    }

    pub fn contains_face(&self, face: u64) -> bool {
        self.facets.iter().any(|&f| face & f == face)
    }

    /// A vertex common to all facets, if any; a complex with one is a cone
    /// and has vanishing reduced homology.
    pub fn cone_vertex(&self) -> Option<usize> {
        if self.is_void() {
            return None;
        }
        let common = self.facets.iter().fold(u64::MAX, |m, &f| m & f);
        (common != 0).then(|| common.trailing_zeros() as usize + 1)
    }

    /// All faces grouped by cardinality: `groups[s]` holds the faces with `s`
    /// vertices, each sorted ascending. The empty face is present (at size 0)
    /// whenever the complex is nonvoid.
    pub fn faces_by_size(&self) -> Vec<Vec<u64>> {
        let mut all: HashSet<u64> = HashSet::new();
        for &f in &self.facets {
            // Enumerate submasks of f, including 0 and f itself.
            let mut sub = f;
            loop {
                all.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        let max_size = self
            .facets
            .iter()
            .map(|f| f.count_ones())
            .max()
            .unwrap_or(0) as usize;
        let mut groups: Vec<Vec<u64>> = vec![Vec::new(); max_size + 1];
        if self.is_void() {
            return Vec::new();
        }
        for face in all {
            groups[face.count_ones() as usize].push(face);
        }
        for g in &mut groups {
            g.sort_unstable();
        }
        groups
    }

    pub fn face_count(&self) -> usize {
        self.faces_by_size().iter().map(Vec::len).sum()
    }

    /// Reduced Euler characteristic: alternating sum over all faces including
    /// the empty one.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.faces_by_size()
            .iter()
            .enumerate()
            .map(|(size, faces)| {
                let sign = if size % 2 == 0 { -1i64 } else { 1 };
                sign * faces.len() as i64
            })
            .sum()
    }

    fn check_same_vertices(&self, other: &SimplicialComplex) -> Result<()> {
        if self.vertex_count != other.vertex_count {
            return Err(Error::DimensionMismatch {
                expected: self.vertex_count,
                found: other.vertex_count,
            });
        }
        Ok(())
    }

    /// Face-set intersection; its faces are exactly the pairwise facet
    /// intersections and their subsets.
    pub fn intersect(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        self.check_same_vertices(other)?;
        if self.is_void() || other.is_void() {
            return Ok(SimplicialComplex::void(self.vertex_count));
        }
        Ok(SimplicialComplex::from_faces(
            self.vertex_count,
            self.facets
                .iter()
                .flat_map(|&f| other.facets.iter().map(move |&g| f & g)),
        ))
    }

    pub fn union(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        self.check_same_vertices(other)?;
        Ok(SimplicialComplex::from_faces(
            self.vertex_count,
            self.facets.iter().chain(&other.facets).copied(),
        ))
    }

    /// One facet per line, vertices space-separated; an `empty` line keyword
    /// denotes the empty facet. Blank lines and `#` comments are skipped.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for f in self.facet_sets() {
            if f.is_empty() {
                s.push_str("empty\n");
            } else {
                let toks: Vec<String> = f.iter().map(usize::to_string).collect();
                s.push_str(&toks.join(" "));
                s.push('\n');
            }
        }
        s
    }

    pub fn parse(text: &str, vertex_count: Option<usize>) -> Result<SimplicialComplex> {
        let mut facets: Vec<Vec<usize>> = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if line == "empty" {
                facets.push(Vec::new());
                continue;
            }
            let verts: Vec<usize> = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad vertex: {t}")))
                })
                .collect::<Result<_>>()?;
            facets.push(verts);
        }
        let vc = match vertex_count {
            Some(vc) => vc,
            None => facets.iter().flatten().copied().max().unwrap_or(0),
        };
        for f in &facets {
            for &v in f {
                if v < 1 || v > vc {
                    return Err(Error::Parse(format!("vertex {v} out of range 1..={vc}")));
                }
            }
        }
        Ok(SimplicialComplex::from_facet_sets(vc, &facets))
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return write!(f, "<void>");
        }
        let sets = self.facet_sets();
        let parts: Vec<String> = sets
            .iter()
            .map(|s| {
                if s.is_empty() {
                    "{}".to_string()
                } else {
                    let toks: Vec<String> = s.iter().map(usize::to_string).collect();
                    format!("{{{}}}", toks.join(","))
                }
            })
            .collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

/// Koszul simplicial complex of a monomial ideal in multidegree `a`: the
/// squarefree vectors `alpha` with `x^(a-alpha)` in the ideal. Its facets are
/// immediate from the generators: for each generator `g` dividing `x^a`, the
/// set of positions where `a` strictly exceeds `g` is a maximal candidate.
pub fn koszul_complex(ideal: &MonomialIdeal, a: &Monomial) -> SimplicialComplex {
    let n = ideal.nvars();
    assert_eq!(a.nvars(), n);
    let mut candidates = Vec::new();
    for g in ideal.gens() {
        if !g.divides(a) {
            continue;
        }
        let mut mask = 0u64;
        for v in 1..=n {
            if a.exp(v) > g.exp(v) {
                mask |= 1u64 << (v - 1);
            }
        }
        candidates.push(mask);
    }
    SimplicialComplex::from_faces(n, candidates)
}

/// Minimal transversals (hitting sets) of a list of vertex sets, via
/// incremental antichain refinement. An empty hyperedge kills all candidates.
fn minimal_transversals(edges: &[u64]) -> Vec<u64> {
    let mut current: Vec<u64> = vec![0];
    for &edge in edges {
        let mut next: Vec<u64> = Vec::new();
        for &t in &current {
            if t & edge != 0 {
                next.push(t);
            } else {
                let mut rest = edge;
                while rest != 0 {
                    let v = rest & rest.wrapping_neg();
                    next.push(t | v);
                    rest &= rest - 1;
                }
            }
        }
        next.sort_unstable();
        next.dedup();
        current = next
            .iter()
            .filter(|&&t| !next.iter().any(|&u| u != t && u & t == u))
            .copied()
            .collect();
    }
    current
}

/// The complex whose faces are the supports of squarefree monomials *not* in
/// the ideal; generators are its minimal nonfaces. The zero ideal yields the
/// full simplex, the unit ideal the void complex.
pub fn complex_from_squarefree_ideal(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let n = ideal.nvars();
    let covers = minimal_transversals(
        &ideal
            .gens()
            .iter()
            .map(Monomial::support_mask)
            .collect::<Vec<_>>(),
    );
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    Ok(SimplicialComplex::from_faces(
        n,
        covers.iter().map(|&c| full & !c),
    ))
}

/// Inverse of [`complex_from_squarefree_ideal`]: the squarefree ideal
/// generated by the minimal nonfaces of the complex.
pub fn stanley_reisner_ideal(cx: &SimplicialComplex) -> MonomialIdeal {
    let n = cx.vertex_count();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    // Nonfaces are the sets meeting every facet complement; minimal nonfaces
    // are the minimal transversals of those complements.
    let complements: Vec<u64> = cx.facets().iter().map(|&f| full & !f).collect();
    if cx.is_void() {
        return MonomialIdeal::unit(n);
    }
    let nonfaces = minimal_transversals(&complements);
    MonomialIdeal::new(
        n,
        nonfaces.iter().map(|&m| {
            Monomial::from_powers(
                n,
                &vertices_from_mask(m)
                    .iter()
                    .map(|&v| (v, 1))
                    .collect::<Vec<_>>(),
            )
        }),
    )
}

/// The shelling order for the Stanley-Reisner complex of the lex initial
/// ideal of the family graph's toric ideal: the four pendant-block facet
/// families `G_{m,l}` (m = 1..4, l = 2..k) followed by `F_1..F_4`. All facets
/// are complements in `1..=2k+5`; for k = 1 the `G` families are empty.
pub fn family_shelling_order(k: usize) -> Result<Vec<u64>> {
    if k < 1 {
        return Err(Error::InvalidParameter(
            "shelling order requires k >= 1".into(),
        ));
    }
    let n = 2 * k + 5;
    let full = (1u64 << n) - 1;
    let complement = |vs: Vec<usize>| full & !mask_from_vertices(&vs);
    let g_block = |l: usize| -> Vec<usize> {
        // {2,...,l-1} together with {k+2+l,...,2k+1}
        (2..=l - 1).chain(k + 2 + l..=2 * k + 1).collect()
    };
    let a_blocks = [
        vec![1, k + 2],
        vec![1, 2 * k + 4],
        vec![k + 2, 2 * k + 5],
        vec![2 * k + 4, 2 * k + 5],
    ];
    let mut order = Vec::new();
    for a in &a_blocks {
        for l in 2..=k {
            let mut vs = a.clone();
            vs.extend(g_block(l));
            order.push(complement(vs));
        }
    }
    let f1: Vec<usize> = std::iter::once(1).chain(2..=k).collect();
    let f2: Vec<usize> = std::iter::once(2 * k + 5).chain(2..=k).collect();
    let f3: Vec<usize> = std::iter::once(k + 2).chain(k + 3..=2 * k + 1).collect();
    let f4: Vec<usize> = std::iter::once(2 * k + 4)
        .chain(k + 3..=2 * k + 1)
        .collect();
    for vs in [f1, f2, f3, f4] {
        order.push(complement(vs));
    }
    Ok(order)
}

/// Checks the shelling condition along the given facet order: each facet must
/// meet the union of its predecessors in a pure subcomplex of codimension
/// one. The order must be a permutation of the facets of a pure complex.
pub fn is_shellable_with_order(cx: &SimplicialComplex, order: &[u64]) -> Result<bool> {
    if !cx.is_pure() {
        return Err(Error::NotPure);
    }
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != cx.facets() {
        return Err(Error::InvalidParameter(
            "order is not a permutation of the facets".into(),
        ));
    }
    for i in 1..order.len() {
        if !shelling_step_ok(&order[..i], order[i]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether facet `f` can extend the shelling prefix `prev`: every
/// intersection with a previous facet must lie inside one of cardinality
/// `|f| - 1`.
fn shelling_step_ok(prev: &[u64], f: u64) -> bool {
    let target = f.count_ones() - 1;
    let inters: Vec<u64> = prev.iter().map(|&g| g & f).collect();
    inters.iter().all(|&i| {
        inters
            .iter()
            .any(|&l| l.count_ones() == target && i & l == i)
    })
}

/// Outcome of the backtracking shelling search.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ShellingSearch {
    Found(Vec<u64>),
    NotShellable,
    BudgetExhausted,
}

/// Backtracking search for a shelling order, trying facets in their stored
/// order and memoizing failed prefix sets (the condition only depends on the
/// set of placed facets). `budget` caps the number of extension attempts.
pub fn find_shelling(cx: &SimplicialComplex, budget: u64) -> Result<ShellingSearch> {
    if !cx.is_pure() {
        return Err(Error::NotPure);
    }
    let facets = cx.facets();
    if facets.len() <= 1 {
        return Ok(ShellingSearch::Found(facets.to_vec()));
    }
    assert!(facets.len() <= 64, "shelling search limited to 64 facets");
    let mut failed: HashSet<u64> = HashSet::new();
    let mut prefix: Vec<u64> = Vec::new();
    let mut nodes = 0u64;

    fn dfs(
        facets: &[u64],
        used: u64,
        prefix: &mut Vec<u64>,
        failed: &mut HashSet<u64>,
        nodes: &mut u64,
        budget: u64,
    ) -> std::result::Result<bool, ()> {
        if prefix.len() == facets.len() {
            return Ok(true);
        }
        if failed.contains(&used) {
            return Ok(false);
        }
        for (idx, &f) in facets.iter().enumerate() {
            if used & (1u64 << idx) != 0 {
                continue;
            }
            *nodes += 1;
            if *nodes > budget {
                return Err(());
            }
            if prefix.is_empty() || shelling_step_ok(prefix, f) {
                prefix.push(f);
                let done = dfs(facets, used | (1u64 << idx), prefix, failed, nodes, budget)?;
                if done {
                    return Ok(true);
                }
                prefix.pop();
            }
        }
        failed.insert(used);
        Ok(false)
    }

    match dfs(facets, 0, &mut prefix, &mut failed, &mut nodes, budget) {
        Ok(true) => Ok(ShellingSearch::Found(prefix)),
        Ok(false) => Ok(ShellingSearch::NotShellable),
        Err(()) => Ok(ShellingSearch::BudgetExhausted),
    }
}
