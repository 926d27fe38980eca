//! Closed-form data attached to the family graph: predicted generators of
//! both initial ideals, the five-block split of the degrevlex initial ideal,
//! its intersection identities, the multidegree witnessing the top Betti
//! number, and the minimal-prime list of the lex side.
//!
//! Everything in here is produced by instantiating index formulas, not by
//! running Buchberger; the repro driver and the acceptance suite compare
//! these predictions against computed objects.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::monomial_ideal::MonomialIdeal;

fn check_k(k: usize) -> Result<usize> {
    if k < 1 {
        return Err(Error::InvalidParameter(
            "family data requires k >= 1".into(),
        ));
    }
    Ok(2 * k + 5)
}

/// Predicted minimal generators of the degrevlex initial ideal.
pub fn revlex_initial_generators(k: usize) -> Result<MonomialIdeal> {
    let n = check_k(k)?;
    let mut gens = Vec::new();
    for i in 2..=k {
        for j in i + 1..=k {
            gens.push(Monomial::from_powers(n, &[(j, 1), (k + 1 + i, 1)]));
        }
    }
    gens.push(Monomial::from_powers(
        n,
        &[(k + 1, 1), (2 * k + 2, 1), (2 * k + 3, 2)],
    ));
    for r in 2..=k {
        gens.push(Monomial::from_powers(
            n,
            &[(k + 1, 1), (k + 1 + r, 1), (2 * k + 3, 1)],
        ));
        gens.push(Monomial::from_powers(
            n,
            &[(r, 1), (2 * k + 2, 1), (2 * k + 3, 1)],
        ));
    }
    for p in 2..=k {
        for q in p..=k {
            gens.push(Monomial::from_powers(
                n,
                &[(p, 1), (q, 1), (k + 2, 1), (2 * k + 2, 1), (2 * k + 4, 1)],
            ));
        }
    }
    Ok(MonomialIdeal::new(n, gens))
}

/// Predicted minimal generators of the lex initial ideal; all squarefree.
pub fn lex_initial_generators(k: usize) -> Result<MonomialIdeal> {
    let n = check_k(k)?;
    let mut gens = Vec::new();
    for i in 2..=k {
        for j in i + 1..=k {
            gens.push(Monomial::from_powers(n, &[(i, 1), (k + 1 + j, 1)]));
        }
    }
    gens.push(Monomial::from_powers(
        n,
        &[(1, 1), (k + 2, 1), (2 * k + 4, 1), (2 * k + 5, 1)],
    ));
    for r in 2..=k {
        gens.push(Monomial::from_powers(
            n,
            &[(r, 1), (k + 2, 1), (2 * k + 4, 1)],
        ));
        gens.push(Monomial::from_powers(
            n,
            &[(1, 1), (k + 1 + r, 1), (2 * k + 5, 1)],
        ));
    }
    Ok(MonomialIdeal::new(n, gens))
}

/// The five blocks whose sum is the degrevlex initial ideal, built from the
/// ideal arithmetic they are defined through.
#[derive(Clone, Debug)]
pub struct RevlexBlocks {
    pub i1: MonomialIdeal,
    pub i2: MonomialIdeal,
    pub i3: MonomialIdeal,
    pub i4: MonomialIdeal,
    pub i5: MonomialIdeal,
}

impl RevlexBlocks {
    /// `J_1 = I_3 + I_4`.
    pub fn j1(&self) -> MonomialIdeal {
        self.i3.sum(&self.i4).expect("same ring")
    }

    /// `J_2 = J_1 + I_1`.
    pub fn j2(&self) -> MonomialIdeal {
        self.j1().sum(&self.i1).expect("same ring")
    }

    /// `J_3 = J_2 + I_5`.
    pub fn j3(&self) -> MonomialIdeal {
        self.j2().sum(&self.i5).expect("same ring")
    }

    pub fn total(&self) -> MonomialIdeal {
        self.j3().sum(&self.i2).expect("same ring")
    }
}

pub fn revlex_blocks(k: usize) -> Result<RevlexBlocks> {
    let n = check_k(k)?;
    let vars = |lo: usize, hi: usize| -> MonomialIdeal {
        MonomialIdeal::variables(n, &(lo..=hi).collect::<Vec<_>>())
    };
    let mono = |powers: &[(usize, u32)]| Monomial::from_powers(n, powers);
    let mut squares = Vec::new();
    for i in 2..=k {
        for j in i + 1..=k {
            squares.push(mono(&[(j, 1), (k + 1 + i, 1)]));
        }
    }
    Ok(RevlexBlocks {
        i1: MonomialIdeal::new(n, squares),
        i2: MonomialIdeal::new(n, [mono(&[(k + 1, 1), (2 * k + 2, 1), (2 * k + 3, 2)])]),
        i3: vars(2, k).scale(&mono(&[(2 * k + 2, 1), (2 * k + 3, 1)])),
        i4: vars(k + 3, 2 * k + 1).scale(&mono(&[(k + 1, 1), (2 * k + 3, 1)])),
        i5: vars(2, k)
            .power(2)
            .scale(&mono(&[(k + 2, 1), (2 * k + 2, 1), (2 * k + 4, 1)])),
    })
}

/// Right-hand sides of the four block intersection identities, built from
/// ideal arithmetic only.
pub struct BlockIntersections {
    /// `I_3 ∩ I_4`
    pub i3_i4: MonomialIdeal,
    /// `J_1 ∩ I_1`
    pub j1_i1: MonomialIdeal,
    /// `J_2 ∩ I_5`
    pub j2_i5: MonomialIdeal,
    /// `J_3 ∩ I_2`
    pub j3_i2: MonomialIdeal,
}

pub fn predicted_block_intersections(k: usize) -> Result<BlockIntersections> {
    let n = check_k(k)?;
    let blocks = revlex_blocks(k)?;
    let vars = |lo: usize, hi: usize| -> MonomialIdeal {
        MonomialIdeal::variables(n, &(lo..=hi).collect::<Vec<_>>())
    };
    let mono = |powers: &[(usize, u32)]| Monomial::from_powers(n, powers);
    let low = vars(2, k);
    let mid = vars(k + 3, 2 * k + 1);
    let i3_i4 = low
        .product(&mid)?
        .scale(&mono(&[(k + 1, 1), (2 * k + 2, 1), (2 * k + 3, 1)]));
    let j1_i1 = MonomialIdeal::variables(n, &[k + 1, 2 * k + 2])
        .product(&blocks.i1)?
        .scale(&mono(&[(2 * k + 3, 1)]));
    let j2_i5 = low
        .product(&low.scale(&mono(&[(2 * k + 3, 1)])).sum(&blocks.i1)?)?
        .scale(&mono(&[(k + 2, 1), (2 * k + 2, 1), (2 * k + 4, 1)]));
    let low_and_mid = low.sum(&mid)?;
    let j3_i2 = low_and_mid.scale(&mono(&[(k + 1, 1), (2 * k + 2, 1), (2 * k + 3, 2)]));
    Ok(BlockIntersections {
        i3_i4,
        j1_i1,
        j2_i5,
        j3_i2,
    })
}

/// The multidegree at which the degrevlex initial quotient attains its top
/// Betti number: unit steps at `2..k`, `k+3..2k+1`, `k+1`, `2k+2` and a
/// double step at `2k+3`.
pub fn betti_witness_multidegree(k: usize) -> Result<Monomial> {
    let n = check_k(k)?;
    let mut powers = vec![(k + 1, 1), (2 * k + 2, 1), (2 * k + 3, 2)];
    for j in 2..=k {
        powers.push((j, 1));
        powers.push((k + 1 + j, 1));
    }
    Ok(Monomial::from_powers(n, &powers))
}

/// Predicted minimal primes of the lex initial ideal, each as a sorted list
/// of variables.
pub fn lex_minimal_primes(k: usize) -> Result<Vec<Vec<usize>>> {
    check_k(k)?;
    let mut primes: Vec<Vec<usize>> = Vec::new();
    let low: Vec<usize> = (2..=k).collect();
    let mid: Vec<usize> = (k + 3..=2 * k + 1).collect();
    for head in [1, 2 * k + 5] {
        let mut p = vec![head];
        p.extend(&low);
        primes.push(p);
    }
    for head in [k + 2, 2 * k + 4] {
        let mut p = vec![head];
        p.extend(&mid);
        primes.push(p);
    }
    let pairs = [
        [1, k + 2],
        [1, 2 * k + 4],
        [k + 2, 2 * k + 5],
        [2 * k + 4, 2 * k + 5],
    ];
    for pair in pairs {
        for l in 2..=k {
            let mut p = pair.to_vec();
            p.extend(2..=l - 1);
            p.extend(k + 2 + l..=2 * k + 1);
            primes.push(p);
        }
    }
    for p in &mut primes {
        p.sort_unstable();
    }
    primes.sort();
    Ok(primes)
}
