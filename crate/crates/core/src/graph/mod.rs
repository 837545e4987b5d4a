//! The subgroup generating bipartite graph of `Z_n`.
//!
//! For a cyclic group the graph is a disjoint union of stars: each subgroup
//! `H` is the hub of a star whose leaves are the ordered pairs `(a, b)` with
//! `<a, b> = H`. [`StarDecomposition`] keeps only the star sizes, which is
//! all the index and spectrum computations need.

mod edges;
mod matrix;

pub use edges::EdgeList;
pub use matrix::{assemble_matrix, dense_cap, DenseSymmetricMatrix, MatrixKind, DEFAULT_DENSE_CAP};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{divisors, generated_subgroup_order, jordan_totient_2, CyclicGroupSpec};
use crate::par;

/// Largest order the quadratic pair enumeration accepts.
pub const BRUTE_FORCE_CAP: u64 = 3000;

/// One star `K_{1,s}` hanging off the subgroup of order `subgroup_order`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Star {
    pub subgroup_order: u64,
    pub star_size: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct StarDecomposition {
    group_order: u64,
    entries: Vec<Star>,
}

impl StarDecomposition {
    /// Validates and wraps a list of stars. Entries are sorted by subgroup order.
    pub fn new(group_order: u64, mut entries: Vec<Star>) -> Result<Self> {
        if group_order == 0 {
            return Err(Error::ZeroOrder);
        }
        entries.sort_unstable();
        let mut total: u128 = 0;
        for (i, star) in entries.iter().enumerate() {
            if star.star_size == 0 {
                return Err(Error::InvalidSpec(format!("empty star at subgroup order {}", star.subgroup_order)));
            }
            if !group_order.is_multiple_of(star.subgroup_order) {
                return Err(Error::InvalidSpec(format!("{} does not divide {group_order}", star.subgroup_order)));
            }
            if i > 0 && entries[i - 1].subgroup_order == star.subgroup_order {
                return Err(Error::InvalidSpec(format!("duplicate subgroup order {}", star.subgroup_order)));
            }
            total = total.checked_add(star.star_size).ok_or(Error::Overflow("star sizes"))?;
        }
        let pairs = u128::from(group_order) * u128::from(group_order);
        if total != pairs {
            return Err(Error::InvalidSpec(format!("star sizes sum to {total}, expected {pairs}")));
        }
        if entries.first() != Some(&Star { subgroup_order: 1, star_size: 1 }) {
            return Err(Error::InvalidSpec("missing K2 component for the trivial subgroup".into()));
        }
        Ok(Self { group_order, entries })
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn entries(&self) -> &[Star] {
        &self.entries
    }

    pub fn star_sizes(&self) -> impl Iterator<Item = u128> + '_ {
        self.entries.iter().map(|s| s.star_size)
    }

    /// Number of subgroup vertices, `|L(G)|`.
    pub fn subgroup_count(&self) -> usize {
        self.entries.len()
    }

    /// Number of pair vertices and edges, `|G|^2`.
    pub fn pair_count(&self) -> u128 {
        u128::from(self.group_order) * u128::from(self.group_order)
    }
}

/// Vertex and edge counts of the graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub vertex_count: u128,
    pub edge_count: u128,
}

/// Star decomposition from the divisor lattice: the subgroup of order `m`
/// has exactly `J_2(m)` generating pairs.
pub fn build_star_decomposition(spec: &CyclicGroupSpec) -> Result<StarDecomposition> {
    let entries = divisors(spec)
        .into_iter()
        .map(|d| Ok(Star { subgroup_order: d.subgroup_order, star_size: jordan_totient_2(d.subgroup_order)? }))
        .collect::<Result<Vec<_>>>()?;
    StarDecomposition::new(spec.order(), entries)
}

/// Star decomposition by enumerating all `n^2` pairs and bucketing them by the
/// order of the subgroup they generate. Independent of the totient route.
pub fn brute_force_star_decomposition(spec: &CyclicGroupSpec) -> Result<StarDecomposition> {
    let n = spec.order();
    if n > BRUTE_FORCE_CAP {
        return Err(Error::OrderTooLarge { order: n, cap: BRUTE_FORCE_CAP });
    }
    // counts[k] = number of pairs generating a subgroup of order k
    let counts = par::fold_range(
        0..n,
        || vec![0u64; n as usize + 1],
        |mut counts, a| {
            for b in 0..n {
                let m = generated_subgroup_order(a, b, n).expect("elements in range");
                counts[m as usize] += 1;
            }
            counts
        },
        |mut left, right| {
            for (l, r) in left.iter_mut().zip(right) {
                *l += r;
            }
            left
        },
    );
    let entries = counts
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c > 0)
        .map(|(m, c)| Star { subgroup_order: m as u64, star_size: u128::from(c) })
        .collect();
    StarDecomposition::new(n, entries)
}

pub fn graph_stats(decomp: &StarDecomposition) -> GraphStats {
    let pairs = decomp.pair_count();
    GraphStats { vertex_count: pairs + decomp.subgroup_count() as u128, edge_count: pairs }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sizes(d: &StarDecomposition) -> Vec<(u64, u128)> {
        d.entries().iter().map(|s| (s.subgroup_order, s.star_size)).collect()
    }

    fn spec(n: u64) -> CyclicGroupSpec {
        CyclicGroupSpec::new(n).unwrap()
    }

    #[test]
    fn build_examples() {
        assert_eq!(sizes(&build_star_decomposition(&spec(1)).unwrap()), vec![(1, 1)]);
        assert_eq!(sizes(&build_star_decomposition(&spec(6)).unwrap()), vec![(1, 1), (2, 3), (3, 8), (6, 24)]);
        assert_eq!(sizes(&build_star_decomposition(&spec(4)).unwrap()), vec![(1, 1), (2, 3), (4, 12)]);
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(sizes(&brute_force_star_decomposition(&spec(1)).unwrap()), vec![(1, 1)]);
        assert_eq!(sizes(&brute_force_star_decomposition(&spec(4)).unwrap()), vec![(1, 1), (2, 3), (4, 12)]);
        assert_eq!(sizes(&brute_force_star_decomposition(&spec(6)).unwrap()), vec![(1, 1), (2, 3), (3, 8), (6, 24)]);
        assert!(matches!(brute_force_star_decomposition(&spec(BRUTE_FORCE_CAP + 1)), Err(Error::OrderTooLarge { .. })));
    }

    #[test]
    fn stats_examples() {
        let stats = |n| graph_stats(&build_star_decomposition(&spec(n)).unwrap());
        assert_eq!(stats(6), GraphStats { vertex_count: 40, edge_count: 36 });
        assert_eq!(stats(1), GraphStats { vertex_count: 2, edge_count: 1 });
        assert_eq!(stats(2), GraphStats { vertex_count: 6, edge_count: 4 });
    }

    #[test]
    fn decomposition_rejects_bad_input() {
        let star = |m, s| Star { subgroup_order: m, star_size: s };
        assert!(StarDecomposition::new(2, vec![star(1, 1), star(2, 2)]).is_err());
        assert!(StarDecomposition::new(2, vec![star(2, 4)]).is_err());
        assert!(StarDecomposition::new(2, vec![star(1, 1), star(3, 3)]).is_err());
        assert!(StarDecomposition::new(2, vec![star(1, 1), star(2, 0), star(2, 3)]).is_err());
        assert!(StarDecomposition::new(2, vec![star(2, 3), star(1, 1)]).is_ok());
    }
}
