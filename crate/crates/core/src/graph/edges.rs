use super::{DenseSymmetricMatrix, BRUTE_FORCE_CAP};
use crate::error::{Error, Result};
use crate::group::{divisors, generated_subgroup_order, CyclicGroupSpec};

/// An explicit simple graph as an edge list, used to evaluate definitional
/// edge sums without going through the star decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeList {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl EdgeList {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Self {
        debug_assert!(edges.iter().all(|&(u, v)| u < vertex_count && v < vertex_count));
        Self { vertex_count, edges }
    }

    /// Builds the graph by enumeration: vertices `0..n^2` are the pairs
    /// `(a, b)` in row-major order, followed by one vertex per subgroup; each
    /// pair is joined to the subgroup it generates.
    pub fn from_pair_enumeration(spec: &CyclicGroupSpec) -> Result<Self> {
        let n = spec.order();
        if n > BRUTE_FORCE_CAP {
            return Err(Error::OrderTooLarge { order: n, cap: BRUTE_FORCE_CAP });
        }
        let pairs = (n * n) as usize;
        let subgroups = divisors(spec);
        let mut slot = vec![usize::MAX; n as usize + 1];
        for (i, d) in subgroups.iter().enumerate() {
            slot[d.subgroup_order as usize] = pairs + i;
        }
        let mut edges = Vec::with_capacity(pairs);
        for a in 0..n {
            for b in 0..n {
                let m = generated_subgroup_order(a, b, n)?;
                edges.push(((a * n + b) as usize, slot[m as usize]));
            }
        }
        Ok(Self::new(pairs + subgroups.len(), edges))
    }

    /// Reads the nonzero upper triangle of an adjacency matrix.
    pub fn from_adjacency(matrix: &DenseSymmetricMatrix) -> Self {
        let n = matrix.dimension();
        let mut edges = Vec::new();
        for i in 0..n {
            for (j, &w) in matrix.row(i).iter().enumerate().skip(i + 1) {
                if w != 0.0 {
                    edges.push((i, j));
                }
            }
        }
        Self::new(n, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<u64> {
        let mut deg = vec![0u64; self.vertex_count];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{assemble_matrix, build_star_decomposition, MatrixKind};

    #[test]
    fn enumeration_of_z6() {
        let spec = CyclicGroupSpec::new(6).unwrap();
        let g = EdgeList::from_pair_enumeration(&spec).unwrap();
        assert_eq!(g.vertex_count(), 40);
        assert_eq!(g.edges().len(), 36);
        let deg = g.degrees();
        assert!(deg[..36].iter().all(|&d| d == 1));
        assert_eq!(&deg[36..], &[1, 3, 8, 24]);
    }

    #[test]
    fn adjacency_round_trip_counts() {
        let spec = CyclicGroupSpec::new(4).unwrap();
        let a = assemble_matrix(&build_star_decomposition(&spec).unwrap(), MatrixKind::Adjacency).unwrap();
        let g = EdgeList::from_adjacency(&a);
        assert_eq!(g.edges().len(), 16);
        let mut hubs: Vec<u64> = g.degrees().into_iter().filter(|&d| d > 1).collect();
        hubs.sort_unstable();
        assert_eq!(hubs, vec![3, 12]);
    }
}
