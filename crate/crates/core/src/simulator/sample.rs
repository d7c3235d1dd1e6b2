use std::collections::HashMap;

use rand::Rng;

use super::{MultiGraph, SimulatorError};

/// The `index`-th pair `(u, v)`, `u < v`, in the order
/// `(0,1), (0,2), (1,2), (0,3), ...`: `index = v(v-1)/2 + u`.
pub fn pair_from_index(index: u64) -> (usize, usize) {
    let mut v = ((1.0 + (1.0 + 8.0 * index as f64).sqrt()) / 2.0) as u64;
    while v * (v - 1) / 2 > index {
        v -= 1;
    }
    while (v + 1) * v / 2 <= index {
        v += 1;
    }
    let u = index - v * (v - 1) / 2;
    (u as usize, v as usize)
}

/// A uniform simple graph on `n` labelled vertices with exactly `m` edges.
///
/// Partial Fisher–Yates over the `n(n-1)/2` vertex pairs, with the displaced
/// prefix kept in a hash map, so the cost is O(m) regardless of `n`.
pub fn sample_gnm<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> Result<MultiGraph, SimulatorError> {
    let pairs = (n as u64) * (n as u64).saturating_sub(1) / 2;
    if m as u64 > pairs {
        return Err(SimulatorError::TooManyEdges { n, m });
    }
    let mut displaced: HashMap<u64, u64> = HashMap::with_capacity(m);
    let mut g = MultiGraph::new(n);
    for i in 0..m as u64 {
        let j = rng.random_range(i..pairs);
        let at_j = displaced.get(&j).copied().unwrap_or(j);
        let at_i = displaced.get(&i).copied().unwrap_or(i);
        displaced.insert(j, at_i);
        let (u, v) = pair_from_index(at_j);
        g.add_edge(u, v).expect("pair index within n");
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn pair_indexing() {
        let mut k = 0;
        for v in 1..200usize {
            for u in 0..v {
                assert_eq!(pair_from_index(k), (u, v));
                k += 1;
            }
        }
        let big = 999_999u64 * 999_998 / 2 + 12345;
        assert_eq!(pair_from_index(big), (12345, 999_999));
    }

    #[test]
    fn trivial_cases() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let tri = sample_gnm(3, 3, &mut rng).unwrap();
        let mut e = tri.edges().to_vec();
        e.sort();
        assert_eq!(e, vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(sample_gnm(4, 0, &mut rng).unwrap().n_edges(), 0);
        assert!(matches!(sample_gnm(4, 7, &mut rng), Err(SimulatorError::TooManyEdges { .. })));
        let g = sample_gnm(1000, 800, &mut rng).unwrap();
        assert!(g.is_simple() && g.n_edges() == 800);
    }
}
