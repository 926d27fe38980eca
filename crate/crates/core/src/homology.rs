//! Reduced simplicial homology over an exact field, computed from boundary
//! matrix ranks.

use std::fmt;

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::linalg;

/// The coefficient field: the rationals or a prime field.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct FieldTag {
    characteristic: u64,
}

impl FieldTag {
    pub const RATIONALS: FieldTag = FieldTag { characteristic: 0 };

    pub fn prime(p: u64) -> Result<FieldTag> {
        if !linalg::is_prime(p) || p >= (1 << 31) {
            return Err(Error::InvalidParameter(format!(
                "{p} is not a supported prime"
            )));
        }
        Ok(FieldTag { characteristic: p })
    }

    pub fn from_characteristic(c: u64) -> Result<FieldTag> {
        if c == 0 {
            Ok(Self::RATIONALS)
        } else {
            Self::prime(c)
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    fn rank(&self, matrix: &[Vec<i64>]) -> usize {
        match self.characteristic {
            0 => linalg::rank_char0(matrix),
            p => linalg::rank_mod_p(matrix, p),
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic {
            0 => write!(f, "Q"),
            p => write!(f, "F{p}"),
        }
    }
}

/// Dimensions of the reduced homology groups, indexed from degree -1 up to
/// the dimension of the complex. The void complex has no groups at all.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomologyDims {
    dims: Vec<u64>,
}

impl HomologyDims {
    /// Dimension of the reduced homology in the given degree (-1 and up);
    /// degrees outside the stored range are zero.
    pub fn dim(&self, degree: i64) -> u64 {
        let idx = degree + 1;
        if idx < 0 || idx as usize >= self.dims.len() {
            0
        } else {
            self.dims[idx as usize]
        }
    }

    /// Pairs `(degree, dim)` for the nonzero groups.
    pub fn nonzero(&self) -> Vec<(i64, u64)> {
        self.dims
            .iter()
            .enumerate()
            .filter(|(_, &d)| d > 0)
            .map(|(i, &d)| (i as i64 - 1, d))
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn top_degree(&self) -> i64 {
        self.dims.len() as i64 - 2
    }

    /// Alternating sum of the homology dimensions, which must match the
    /// reduced Euler characteristic of the complex.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                let sign = if i % 2 == 0 { -1i64 } else { 1 };
                sign * d as i64
            })
            .sum()
    }
}

/// The signed boundary matrix from the span of `faces` (each of size `s`) to
/// the span of `subfaces` (each of size `s - 1`), rows indexed by subfaces.
fn boundary_matrix(subfaces: &[u64], faces: &[u64]) -> Vec<Vec<i64>> {
    let row_index: std::collections::HashMap<u64, usize> =
        subfaces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut matrix = vec![vec![0i64; faces.len()]; subfaces.len()];
    for (col, &face) in faces.iter().enumerate() {
        let mut sign = 1i64;
        let mut rest = face;
        while rest != 0 {
            let v = rest & rest.wrapping_neg();
            let sub = face & !v;
            let row = row_index[&sub];
            matrix[row][col] = sign;
            sign = -sign;
            rest &= rest - 1;
        }
    }
    matrix
}

/// Reduced homology of a complex over the given field, from exact ranks of
/// the boundary matrices. For a nonvoid complex the chain complex is
/// augmented: the empty face spans degree -1.
pub fn reduced_homology_dims(cx: &SimplicialComplex, field: FieldTag) -> HomologyDims {
    let groups = cx.faces_by_size();
    if groups.is_empty() {
        return HomologyDims { dims: Vec::new() };
    }
    // groups[s] holds faces with s vertices, i.e. dimension s-1.
    let top = groups.len() - 1;
    let mut ranks = vec![0usize; top + 2];
    for s in 1..=top {
        let matrix = boundary_matrix(&groups[s - 1], &groups[s]);
        ranks[s] = field.rank(&matrix);
    }
    let dims = (0..=top)
        .map(|s| (groups[s].len() - ranks[s] - ranks[s + 1]) as u64)
        .collect();
    HomologyDims { dims }
}
