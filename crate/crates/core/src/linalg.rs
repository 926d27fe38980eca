//! Exact matrix ranks: fraction-free elimination over the integers for
//! characteristic zero, modular elimination for prime characteristic.

use num_bigint::BigInt;

/// Rank over the rationals. Runs single-step Bareiss elimination in `i128`
/// and falls back to arbitrary precision if an intermediate product would
/// overflow.
pub fn rank_char0(matrix: &[Vec<i64>]) -> usize {
    match bareiss_rank_i128(matrix) {
        Some(r) => r,
        None => bareiss_rank_bigint(matrix),
    }
}

fn bareiss_rank_i128(matrix: &[Vec<i64>]) -> Option<usize> {
    let rows = matrix.len();
    if rows == 0 {
        return Some(0);
    }
    let cols = matrix[0].len();
    let mut a: Vec<Vec<i128>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let mut rank = 0usize;
    let mut prev = 1i128;
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot_row);
        let pivot = a[rank][col];
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let num = pivot
                    .checked_mul(a[r][c])?
                    .checked_sub(a[r][col].checked_mul(a[rank][c])?)?;
                // Exact division is the Bareiss invariant: num is divisible
                // by the previous pivot.
                a[r][c] = num / prev;
            }
            a[r][col] = 0;
        }
        prev = pivot;
        rank += 1;
        if rank == rows {
            break;
        }
    }
    Some(rank)
}

fn bareiss_rank_bigint(matrix: &[Vec<i64>]) -> usize {
    let rows = matrix.len();
    if rows == 0 {
        return 0;
    }
    let cols = matrix[0].len();
    let zero = BigInt::from(0);
    let mut a: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut rank = 0usize;
    let mut prev = BigInt::from(1);
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows).find(|&r| a[r][col] != zero) else {
            continue;
        };
        a.swap(rank, pivot_row);
        let pivot = a[rank][col].clone();
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let num = &pivot * &a[r][c] - &a[r][col] * &a[rank][c];
                a[r][c] = num / &prev;
            }
            a[r][col] = zero.clone();
        }
        prev = pivot;
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Rank over the field with `p` elements, `p` an odd-sized prime below
/// `2^31` so products fit in `u64`.
pub fn rank_mod_p(matrix: &[Vec<i64>], p: u64) -> usize {
    assert!((2..(1 << 31)).contains(&p), "prime out of supported range");
    let rows = matrix.len();
    if rows == 0 {
        return 0;
    }
    let cols = matrix[0].len();
    let reduce = |x: i64| -> u64 { x.rem_euclid(p as i64) as u64 };
    let mut a: Vec<Vec<u64>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| reduce(x)).collect())
        .collect();
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows).find(|&r| !a[r][col].is_multiple_of(p)) else {
            continue;
        };
        a.swap(rank, pivot_row);
        let inv = mod_inverse(a[rank][col], p);
        for c in col..cols {
            a[rank][c] = a[rank][c] * inv % p;
        }
        for r in rank + 1..rows {
            let factor = a[r][col];
            if factor == 0 {
                continue;
            }
            for c in col..cols {
                a[r][c] = (a[r][c] + (p - factor) * a[rank][c]) % p;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn mod_inverse(x: u64, p: u64) -> u64 {
    // Fermat: x^(p-2) mod p.
    let mut base = x % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
