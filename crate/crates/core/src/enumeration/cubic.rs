use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::EnumerationError;
use crate::series::Rational;

pub(crate) fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Weighted number of labelled cubic multigraphs on `2r` vertices, divided
/// by `(2r)!`: `e_r = (6r)! / ((3r)! 2^(3r) 6^(2r) (2r)!)`.
pub fn all_cubic_weight(r: u64) -> Rational {
    let numer = factorial(6 * r);
    let denom = factorial(3 * r)
        * BigInt::from(2).pow(3 * r as u32)
        * BigInt::from(6).pow(2 * r as u32)
        * factorial(2 * r);
    Rational::new(numer, denom)
}

/// Result of enumerating every pairing of the `6r` darts of `2r` labelled
/// vertices.
#[derive(Debug, Clone)]
pub struct PairingCensus {
    pub r: u64,
    /// Number of perfect matchings of the darts.
    pub pairings: u64,
    /// Distinct labelled multigraphs, each with the number of pairings that
    /// produce it and its compensation weight `2^-a 2^-b 6^-c`.
    pub multigraphs: Vec<CensusEntry>,
}

#[derive(Debug, Clone)]
pub struct CensusEntry {
    /// Sorted edge list; loops appear as `(v, v)`.
    pub edges: Vec<(u8, u8)>,
    pub pairings: u64,
    pub weight: Rational,
}

impl PairingCensus {
    /// `sum_M w(M) / (2r)!`, which must equal [`all_cubic_weight`].
    pub fn weighted_egf_coefficient(&self) -> Rational {
        let total: Rational = self
            .multigraphs
            .iter()
            .fold(Rational::zero(), |acc, m| acc + &m.weight);
        total / factorial(2 * self.r)
    }
}

/// Exhaustive dart-pairing census for `r` in `{1, 2}`.
pub fn pairing_oracle(r: u64) -> Result<PairingCensus, EnumerationError> {
    if !(1..=2).contains(&r) {
        return Err(EnumerationError::OracleRange { r });
    }
    let darts = (6 * r) as usize;
    let mut mate = vec![usize::MAX; darts];
    let mut seen: HashMap<Vec<(u8, u8)>, u64> = HashMap::new();
    let mut pairings = 0u64;
    enumerate_matchings(&mut mate, &mut |mate| {
        pairings += 1;
        let mut edges: Vec<(u8, u8)> = (0..mate.len())
            .filter(|&d| d < mate[d])
            .map(|d| {
                let (u, v) = ((d / 3) as u8, (mate[d] / 3) as u8);
                (u.min(v), u.max(v))
            })
            .collect();
        edges.sort_unstable();
        *seen.entry(edges).or_default() += 1;
    });

    let mut multigraphs: Vec<CensusEntry> = seen
        .into_iter()
        .map(|(edges, count)| CensusEntry {
            weight: compensation_weight(&edges),
            edges,
            pairings: count,
        })
        .collect();
    multigraphs.sort_by(|a, b| a.edges.cmp(&b.edges));
    Ok(PairingCensus {
        r,
        pairings,
        multigraphs,
    })
}

fn enumerate_matchings(mate: &mut [usize], visit: &mut impl FnMut(&[usize])) {
    let Some(first) = mate.iter().position(|&m| m == usize::MAX) else {
        visit(mate);
        return;
    };
    for other in first + 1..mate.len() {
        if mate[other] != usize::MAX {
            continue;
        }
        mate[first] = other;
        mate[other] = first;
        enumerate_matchings(mate, visit);
        mate[first] = usize::MAX;
        mate[other] = usize::MAX;
    }
}

/// `2^-a 2^-b 6^-c` for `a` loops, `b` double edges and `c` triple edges.
/// Expects a sorted edge list.
pub fn compensation_weight(edges: &[(u8, u8)]) -> Rational {
    let mut weight = Rational::one();
    let mut i = 0;
    while i < edges.len() {
        let mut j = i;
        while j < edges.len() && edges[j] == edges[i] {
            j += 1;
        }
        let mult = (j - i) as i64;
        let (u, v) = edges[i];
        let factor = if u == v {
            // each loop halves; a vertex of a cubic graph carries at most one
            BigInt::from(2).pow(mult as u32)
        } else {
            match mult {
                1 => BigInt::one(),
                2 => BigInt::from(2),
                3 => BigInt::from(6),
                m => (1..=m).fold(BigInt::one(), |acc, k| acc * k),
            }
        };
        weight /= Rational::from_integer(factor);
        i = j;
    }
    weight
}
