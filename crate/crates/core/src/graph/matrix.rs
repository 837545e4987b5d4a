use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use super::{graph_stats, StarDecomposition};
use crate::error::{Error, Result};

pub const DEFAULT_DENSE_CAP: usize = 5000;

/// Dense cap in vertices, overridable through `SGB_DENSE_CAP`.
pub fn dense_cap() -> usize {
    std::env::var("SGB_DENSE_CAP").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_DENSE_CAP)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum MatrixKind {
    Adjacency,
    Degree,
    Laplacian,
    SignlessLaplacian,
    CommonNeighborhood,
}

/// Row-major symmetric matrix of finite reals.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseSymmetricMatrix {
    dimension: usize,
    entries: Vec<f64>,
}

impl DenseSymmetricMatrix {
    pub fn zeros(dimension: usize) -> Self {
        Self { dimension, entries: vec![0.0; dimension * dimension] }
    }

    /// Checks symmetry and finiteness of a row-major buffer.
    pub fn from_row_major(dimension: usize, entries: Vec<f64>) -> Result<Self> {
        if entries.len() != dimension * dimension {
            return Err(Error::MatrixParse(format!(
                "expected {} entries, found {}",
                dimension * dimension,
                entries.len()
            )));
        }
        for row in 0..dimension {
            for col in 0..dimension {
                let v = entries[row * dimension + col];
                if !v.is_finite() {
                    return Err(Error::NonFinite { row, col });
                }
                if col > row && v != entries[col * dimension + row] {
                    return Err(Error::NotSymmetric { row, col });
                }
            }
        }
        Ok(Self { dimension, entries })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries[row * self.dimension + col]
    }

    pub fn row(&self, row: usize) -> &[f64] {
        &self.entries[row * self.dimension..(row + 1) * self.dimension]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.entries
    }

    /// Sets `(row, col)` and its mirror.
    fn set_symmetric(&mut self, row: usize, col: usize, value: f64) {
        self.entries[row * self.dimension + col] = value;
        self.entries[col * self.dimension + row] = value;
    }

    pub fn row_sums(&self) -> Vec<f64> {
        (0..self.dimension).map(|r| self.row(r).iter().sum()).collect()
    }

    /// Plain-text dump: a `dim k` header followed by `k` rows of
    /// space-separated entries.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.entries.len() * 2 + 16);
        writeln!(out, "dim {}", self.dimension).unwrap();
        for r in 0..self.dimension {
            for (c, v) in self.row(r).iter().enumerate() {
                if c > 0 {
                    out.push(' ');
                }
                write!(out, "{v}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

impl FromStr for DenseSymmetricMatrix {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::MatrixParse("empty input".into()))?;
        let dimension = header
            .strip_prefix("dim ")
            .and_then(|d| d.trim().parse::<usize>().ok())
            .ok_or_else(|| Error::MatrixParse(format!("bad header {header:?}")))?;
        let mut entries = Vec::with_capacity(dimension * dimension);
        let mut rows = 0;
        for line in lines {
            let before = entries.len();
            for token in line.split_whitespace() {
                let v: f64 = token.parse().map_err(|_| Error::MatrixParse(format!("bad entry {token:?}")))?;
                entries.push(v);
            }
            if entries.len() - before != dimension {
                return Err(Error::MatrixParse(format!("row {rows} has the wrong length")));
            }
            rows += 1;
        }
        if rows != dimension {
            return Err(Error::MatrixParse(format!("expected {dimension} rows, found {rows}")));
        }
        Self::from_row_major(dimension, entries)
    }
}

/// Materializes one of the graph matrices.
///
/// Vertices are laid out star by star, ascending by subgroup order; inside a
/// star the subgroup (hub) comes first, followed by its generating pairs.
/// The common-neighborhood matrix is `A^2` with its diagonal cleared.
pub fn assemble_matrix(decomp: &StarDecomposition, kind: MatrixKind) -> Result<DenseSymmetricMatrix> {
    assemble_matrix_with_cap(decomp, kind, dense_cap())
}

pub fn assemble_matrix_with_cap(
    decomp: &StarDecomposition,
    kind: MatrixKind,
    cap: usize,
) -> Result<DenseSymmetricMatrix> {
    let vertices = graph_stats(decomp).vertex_count;
    if vertices > cap as u128 {
        return Err(Error::DenseCapExceeded { dimension: usize::try_from(vertices).unwrap_or(usize::MAX), cap });
    }
    let adjacency = adjacency(decomp, vertices as usize);
    Ok(match kind {
        MatrixKind::Adjacency => adjacency,
        MatrixKind::Degree => diagonal(&adjacency.row_sums()),
        MatrixKind::Laplacian => combine(&adjacency, -1.0),
        MatrixKind::SignlessLaplacian => combine(&adjacency, 1.0),
        MatrixKind::CommonNeighborhood => common_neighborhood(&adjacency),
    })
}

fn adjacency(decomp: &StarDecomposition, dimension: usize) -> DenseSymmetricMatrix {
    let mut m = DenseSymmetricMatrix::zeros(dimension);
    let mut hub = 0usize;
    for size in decomp.star_sizes() {
        let size = size as usize;
        for leaf in hub + 1..=hub + size {
            m.set_symmetric(hub, leaf, 1.0);
        }
        hub += size + 1;
    }
    m
}

fn diagonal(values: &[f64]) -> DenseSymmetricMatrix {
    let mut m = DenseSymmetricMatrix::zeros(values.len());
    for (i, &v) in values.iter().enumerate() {
        m.entries[i * values.len() + i] = v;
    }
    m
}

/// `D + sign * A`.
fn combine(adjacency: &DenseSymmetricMatrix, sign: f64) -> DenseSymmetricMatrix {
    let degrees = adjacency.row_sums();
    let n = adjacency.dimension;
    let mut m = adjacency.clone();
    for v in m.entries.iter_mut().filter(|v| **v != 0.0) {
        *v *= sign;
    }
    for (i, d) in degrees.into_iter().enumerate() {
        m.entries[i * n + i] = d;
    }
    m
}

/// `A^2` off the diagonal, accumulated over each vertex's neighbor pairs.
fn common_neighborhood(adjacency: &DenseSymmetricMatrix) -> DenseSymmetricMatrix {
    let n = adjacency.dimension;
    let mut m = DenseSymmetricMatrix::zeros(n);
    for k in 0..n {
        let neighbors: Vec<(usize, f64)> =
            adjacency.row(k).iter().enumerate().filter(|(_, &w)| w != 0.0).map(|(i, &w)| (i, w)).collect();
        for &(i, wi) in &neighbors {
            for &(j, wj) in &neighbors {
                if i != j {
                    m.entries[i * n + j] += wi * wj;
                }
            }
        }
    }
    m
}
