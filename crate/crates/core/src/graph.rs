//! Finite simple graphs with 1-based, stably indexed edges, plus the
//! two-triangle graph family whose edge rings the rest of the crate studies.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A finite simple graph on the vertex set `1..=d` with edges indexed
/// `1..=n`; edge `i` corresponds to the polynomial variable `x_i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    d: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Validates endpoints, rejects loops and duplicate edges. Endpoint order
    /// within an edge is normalized to `u < v`; edge order is preserved.
    pub fn new(d: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidParameter(
                "vertex count must be positive".into(),
            ));
        }
        let mut seen = HashSet::new();
        let mut normalized = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            if u < 1 || u > d || v < 1 || v > d {
                return Err(Error::InvalidParameter(format!(
                    "edge {{{u},{v}}} leaves the vertex set 1..={d}"
                )));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::InvalidParameter(format!(
                    "duplicate edge {{{},{}}}",
                    e.0, e.1
                )));
            }
            normalized.push(e);
        }
        Ok(Graph {
            d,
            edges: normalized,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.d
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Edge by 1-based index.
    pub fn edge(&self, i: usize) -> Result<(usize, usize)> {
        if i < 1 || i > self.edges.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.edges.len(),
            });
        }
        Ok(self.edges[i - 1])
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.d + 1];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// True iff the graph has a single connected component on `1..=d`.
    /// The one-vertex graph counts as connected.
    pub fn is_connected(&self) -> bool {
        let adj = self.adjacency();
        let mut seen = vec![false; self.d + 1];
        let mut stack = vec![1usize];
        seen[1] = true;
        let mut count = 0;
        while let Some(v) = stack.pop() {
            count += 1;
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        count == self.d
    }

    /// True iff the graph admits a proper 2-coloring, i.e. has no odd cycle.
    pub fn is_bipartite(&self) -> bool {
        let adj = self.adjacency();
        let mut color = vec![-1i8; self.d + 1];
        for start in 1..=self.d {
            if color[start] >= 0 {
                continue;
            }
            color[start] = 0;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if color[w] < 0 {
                        color[w] = 1 - color[v];
                        stack.push(w);
                    } else if color[w] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// All simple cycles as vertex lists, each reported once: the list starts
    /// at its smallest vertex and its second vertex is smaller than its last.
    pub fn simple_cycles(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut cycles = Vec::new();
        let mut path = Vec::new();
        let mut on_path = vec![false; self.d + 1];

        fn dfs(
            v: usize,
            start: usize,
            adj: &[Vec<usize>],
            path: &mut Vec<usize>,
            on_path: &mut [bool],
            cycles: &mut Vec<Vec<usize>>,
        ) {
            for &w in &adj[v] {
                if w == start && path.len() >= 3 {
                    if path[1] < path[path.len() - 1] {
                        cycles.push(path.clone());
                    }
                } else if w > start && !on_path[w] {
                    path.push(w);
                    on_path[w] = true;
                    dfs(w, start, adj, path, on_path, cycles);
                    on_path[w] = false;
                    path.pop();
                }
            }
        }

        for start in 1..=self.d {
            path.clear();
            path.push(start);
            on_path[start] = true;
            dfs(start, start, &adj, &mut path, &mut on_path, &mut cycles);
            on_path[start] = false;
        }
        cycles
    }

    /// Normality of the edge ring, decided by the odd-cycle criterion: every
    /// pair of vertex-disjoint odd cycles must be joined by some edge.
    /// Requires a connected graph.
    pub fn is_normal_edge_ring(&self) -> Result<bool> {
        if !self.is_connected() {
            return Err(Error::Precondition("graph must be connected".into()));
        }
        let odd: Vec<Vec<usize>> = self
            .simple_cycles()
            .into_iter()
            .filter(|c| c.len() % 2 == 1)
            .collect();
        for (i, c1) in odd.iter().enumerate() {
            for c2 in odd.iter().skip(i + 1) {
                if c1.iter().any(|v| c2.contains(v)) {
                    continue;
                }
                let bridged = self.edges.iter().any(|&(u, v)| {
                    (c1.contains(&u) && c2.contains(&v)) || (c1.contains(&v) && c2.contains(&u))
                });
                if !bridged {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// 0/1 column of the vertex-edge incidence matrix for edge `i` (1-based).
    pub fn incidence_vector(&self, i: usize) -> Result<Vec<u32>> {
        let (u, v) = self.edge(i)?;
        let mut col = vec![0u32; self.d];
        col[u - 1] = 1;
        col[v - 1] = 1;
        Ok(col)
    }

    /// Image of an exponent vector under the incidence map: the multidegree in
    /// the vertex variables of the monomial `prod_i (t_u t_v)^{exps[i]}`.
    pub fn incidence_image(&self, exps: &[u32]) -> Result<Vec<u64>> {
        if exps.len() != self.edges.len() {
            return Err(Error::DimensionMismatch {
                expected: self.edges.len(),
                found: exps.len(),
            });
        }
        let mut img = vec![0u64; self.d];
        for (&(u, v), &e) in self.edges.iter().zip(exps) {
            img[u - 1] += u64::from(e);
            img[v - 1] += u64::from(e);
        }
        Ok(img)
    }

    /// Whether the 1-based edge indices form a closed walk: consecutive edges
    /// share the traversal vertex and the walk returns to its start.
    pub fn is_closed_walk(&self, edge_indices: &[usize]) -> bool {
        if edge_indices.is_empty() {
            return false;
        }
        let edges: Option<Vec<(usize, usize)>> =
            edge_indices.iter().map(|&i| self.edge(i).ok()).collect();
        let Some(edges) = edges else { return false };
        let (a, b) = edges[0];
        'start: for start in [a, b] {
            let mut at = start;
            for &(u, v) in &edges {
                if at == u {
                    at = v;
                } else if at == v {
                    at = u;
                } else {
                    continue 'start;
                }
            }
            if at == start {
                return true;
            }
        }
        false
    }

    /// Serializes as `d n` followed by one `u v` line per edge.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {}", self.d, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }

    pub fn parse(text: &str) -> Result<Graph> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty graph file".into()))?;
        let mut it = header.split_whitespace();
        let d: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse("bad vertex count".into()))?;
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse("bad edge count".into()))?;
        let mut edges = Vec::with_capacity(n);
        for line in lines {
            let mut it = line.split_whitespace();
            let u: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad edge line: {line}")))?;
            let v: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad edge line: {line}")))?;
            edges.push((u, v));
        }
        if edges.len() != n {
            return Err(Error::Parse(format!(
                "header promises {n} edges, found {}",
                edges.len()
            )));
        }
        Graph::new(d, edges)
    }
}

/// The closed walks of the family graph that generate its toric ideal, as
/// 1-based edge-index sequences: squares through the two hub vertices, the
/// two triangles traversed through their shared base edge, hexagons through
/// one hub and one triangle, and length-10 walks through both triangles.
pub fn family_walks(k: usize) -> Result<Vec<Vec<usize>>> {
    if k < 1 {
        return Err(Error::InvalidParameter(
            "family_walks requires k >= 1".into(),
        ));
    }
    let mut walks = Vec::new();
    for i in 2..=k {
        for j in i + 1..=k {
            walks.push(vec![i, k + 1 + i, k + 1 + j, j]);
        }
    }
    walks.push(vec![
        1,
        k + 1,
        2 * k + 4,
        2 * k + 3,
        k + 2,
        2 * k + 2,
        2 * k + 5,
        2 * k + 3,
    ]);
    for i in 2..=k {
        walks.push(vec![i, k + 1 + i, k + 2, 2 * k + 3, 2 * k + 4, k + 1]);
        walks.push(vec![i, k + 1 + i, 2 * k + 2, 2 * k + 5, 2 * k + 3, 1]);
    }
    for i in 2..=k {
        for j in i..=k {
            walks.push(vec![
                k + 2,
                2 * k + 5,
                2 * k + 2,
                k + 1 + i,
                i,
                1,
                2 * k + 4,
                k + 1,
                j,
                k + 1 + j,
            ]);
        }
    }
    Ok(walks)
}

/// The two-triangle family member on `k+5` vertices with `2k+5` edges.
///
/// Vertices 1 and 2 are each joined to the middle vertices `5..=k+3`; the
/// triangles `{1,3,k+4}` and `{2,4,k+5}` hang off the path `3 - 4`. The edge
/// labeling is fixed; the constructor checks it against the walk-closure
/// invariant, which pins the labeling up to symmetries that do not matter
/// downstream.
pub fn family_graph(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::InvalidParameter(
            "family_graph requires k >= 1".into(),
        ));
    }
    let d = k + 5;
    let mut edges = Vec::with_capacity(2 * k + 5);
    edges.push((1, 3)); // e_1
    for i in 2..=k {
        edges.push((1, i + 3)); // e_i
    }
    edges.push((1, k + 4)); // e_{k+1}
    edges.push((2, 4)); // e_{k+2}
    for i in 2..=k {
        edges.push((2, i + 3)); // e_{k+1+i}
    }
    edges.push((2, k + 5)); // e_{2k+2}
    edges.push((3, 4)); // e_{2k+3}
    edges.push((3, k + 4)); // e_{2k+4}
    edges.push((4, k + 5)); // e_{2k+5}
    let g = Graph::new(d, edges)?;
    debug_assert!(
        family_walks(k)?.iter().all(|w| g.is_closed_walk(w)),
        "edge labeling broke a defining walk"
    );
    Ok(g)
}

/// The family graph on `d-f+6` vertices extended to the vertex set `1..=d` by
/// `f-6` pendant edges at vertex 1; it has `2d-f+1` edges in total. Requires
/// `6 <= f <= d`.
pub fn extended_family_graph(f: usize, d: usize) -> Result<Graph> {
    if f < 6 || f > d {
        return Err(Error::InvalidParameter(format!(
            "need 6 <= f <= d, got f={f}, d={d}"
        )));
    }
    let k = d - f + 1;
    let base = family_graph(k)?;
    let mut edges = base.edges().to_vec();
    for i in 1..=(f - 6) {
        edges.push((1, d - f + 6 + i));
    }
    Graph::new(d, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_graph_k1_matches_fixed_labeling() {
        let g = family_graph(1).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(
            g.edges(),
            &[(1, 3), (1, 5), (2, 4), (2, 6), (3, 4), (3, 5), (4, 6)]
        );
    }

    #[test]
    fn family_graph_counts() {
        for k in 1..=6 {
            let g = family_graph(k).unwrap();
            assert_eq!(g.vertex_count(), k + 5);
            assert_eq!(g.edge_count(), 2 * k + 5);
            assert!(g.is_connected());
            assert!(!g.is_bipartite());
        }
        assert!(family_graph(0).is_err());
    }

    #[test]
    fn extended_family_graph_edge_count() {
        // (f,d) = (6,6): no extra edges.
        assert_eq!(
            extended_family_graph(6, 6).unwrap(),
            family_graph(1).unwrap()
        );
        // (f,d) = (7,8): family k=2 plus {1,8}.
        let g = extended_family_graph(7, 8).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 10);
        assert_eq!(g.edges().last(), Some(&(1, 8)));
        // (f,d) = (8,8): family k=1 plus {1,7},{1,8}.
        let g = extended_family_graph(8, 8).unwrap();
        assert_eq!(g.edge_count(), 9);
        assert_eq!(&g.edges()[7..], &[(1, 7), (1, 8)]);
        for (f, d) in [(6, 6), (7, 8), (8, 8), (7, 7)] {
            let g = extended_family_graph(f, d).unwrap();
            assert_eq!(g.edge_count(), 2 * d - f + 1);
            assert!(g.is_connected());
            assert!(!g.is_bipartite());
        }
        assert!(extended_family_graph(5, 6).is_err());
        assert!(extended_family_graph(7, 6).is_err());
    }

    #[test]
    fn connectivity_cases() {
        let two_edges = Graph::new(4, vec![(1, 2), (3, 4)]).unwrap();
        assert!(!two_edges.is_connected());
        let single = Graph::new(1, vec![]).unwrap();
        assert!(single.is_connected());
        assert!(family_graph(2).unwrap().is_connected());
    }

    #[test]
    fn bipartite_cases() {
        let square = Graph::new(4, vec![(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        assert!(square.is_bipartite());
        let path = Graph::new(3, vec![(1, 2), (2, 3)]).unwrap();
        assert!(path.is_bipartite());
        assert!(!family_graph(1).unwrap().is_bipartite());
    }

    #[test]
    fn simple_graph_validation() {
        assert!(Graph::new(3, vec![(1, 1)]).is_err());
        assert!(Graph::new(3, vec![(1, 2), (2, 1)]).is_err());
        assert!(Graph::new(3, vec![(1, 4)]).is_err());
    }

    #[test]
    fn normality_criterion() {
        for k in 1..=4 {
            assert!(family_graph(k).unwrap().is_normal_edge_ring().unwrap());
        }
        // Two triangles joined by a path of length 2: disjoint odd cycles with
        // no bridging edge.
        let bad = Graph::new(
            7,
            vec![
                (1, 2),
                (1, 3),
                (2, 3),
                (4, 5),
                (4, 6),
                (5, 6),
                (3, 7),
                (7, 4),
            ],
        )
        .unwrap();
        assert!(!bad.is_normal_edge_ring().unwrap());
        // Bowtie: the two triangles share a vertex, so the pair is not
        // vertex-disjoint and the criterion holds vacuously.
        let bowtie = Graph::new(5, vec![(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]).unwrap();
        assert!(bowtie.is_normal_edge_ring().unwrap());
        let disconnected = Graph::new(4, vec![(1, 2), (3, 4)]).unwrap();
        assert!(disconnected.is_normal_edge_ring().is_err());
    }

    #[test]
    fn incidence_vectors() {
        let g = family_graph(1).unwrap();
        assert_eq!(g.incidence_vector(5).unwrap(), vec![0, 0, 1, 1, 0, 0]);
        for i in 1..=g.edge_count() {
            let col = g.incidence_vector(i).unwrap();
            assert_eq!(col.iter().sum::<u32>(), 2);
        }
        assert!(g.incidence_vector(8).is_err());
        assert!(g.incidence_vector(0).is_err());
        let g2 = family_graph(2).unwrap();
        assert_eq!(g2.incidence_vector(1).unwrap(), vec![1, 0, 1, 0, 0, 0, 0]);
    }

    #[test]
    fn text_round_trip() {
        let g = family_graph(3).unwrap();
        let text = g.to_text();
        assert_eq!(Graph::parse(&text).unwrap(), g);
        assert!(Graph::parse("").is_err());
        assert!(Graph::parse("2 1\n").is_err());
    }

    #[test]
    fn closed_walk_detection() {
        let g = family_graph(3).unwrap();
        // The 4-cycle (e_2, e_6, e_7, e_3) visits 1-5-2-6-1.
        assert!(g.is_closed_walk(&[2, 6, 7, 3]));
        assert!(!g.is_closed_walk(&[1, 2, 3]));
        assert!(!g.is_closed_walk(&[]));
    }
}
