//! Dense integer matrices: CN, CNRS, CNL and CNSL, plus exact rank.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::graph::CccGraph;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        IntMatrix {
            dim,
            entries: vec![0; dim * dim],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        IntMatrix {
            dim,
            entries: rows.concat(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.dim + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.dim.max(1))
            .map(<[i64]>::to_vec)
            .take(self.dim)
            .collect()
    }

    pub fn trace(&self) -> i64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn row_sum(&self, i: usize) -> i64 {
        (0..self.dim).map(|j| self.get(i, j)).sum()
    }

    pub fn entry_sum(&self) -> i64 {
        self.entries.iter().sum()
    }

    pub fn max_abs_entry(&self) -> i64 {
        self.entries.iter().map(|v| v.abs()).max().unwrap_or(0)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Rank over the rationals by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        let rows = (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| BigInt::from(self.get(i, j)))
                    .collect()
            })
            .collect();
        bareiss_rank(rows)
    }

    /// `dim - rank(M - lambda I)`, computed on `q M - p I` for `lambda = p/q`.
    pub fn nullity_shifted(&self, lambda: &Rational) -> usize {
        let p = lambda.numer();
        let q = lambda.denom();
        let rows = (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| {
                        let v = q * BigInt::from(self.get(i, j));
                        if i == j {
                            v - p
                        } else {
                            v
                        }
                    })
                    .collect()
            })
            .collect();
        self.dim - bareiss_rank(rows)
    }
}

fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let n = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        for r in rank + 1..n {
            for c in col + 1..cols {
                let v = (&a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c]) / &prev;
                a[r][c] = v;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
        if rank == n {
            break;
        }
    }
    rank
}

/// Entry `(i, j)`, `i != j`, counts the common neighbours of `v_i` and `v_j`.
pub fn cn_matrix(graph: &CccGraph) -> IntMatrix {
    let n = graph.vertex_count();
    let adj = graph.adjacency();
    let mut m = IntMatrix::zeros(n);
    for i in 0..n {
        for j in i + 1..n {
            let c = (0..n).filter(|&k| adj[i][k] && adj[j][k]).count() as i64;
            m.set(i, j, c);
            m.set(j, i, c);
        }
    }
    m
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnMatrices {
    pub cnrs: IntMatrix,
    pub cnl: IntMatrix,
    pub cnsl: IntMatrix,
}

pub fn cnl_cnsl_matrices(cn: &IntMatrix) -> CnMatrices {
    let n = cn.dim();
    let mut cnrs = IntMatrix::zeros(n);
    let mut cnl = IntMatrix::zeros(n);
    let mut cnsl = IntMatrix::zeros(n);
    for i in 0..n {
        let d = cn.row_sum(i);
        cnrs.set(i, i, d);
        for j in 0..n {
            let diag = if i == j { d } else { 0 };
            cnl.set(i, j, diag - cn.get(i, j));
            cnsl.set(i, j, diag + cn.get(i, j));
        }
    }
    CnMatrices { cnrs, cnl, cnsl }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cn_of_small_cliques() {
        let k3 = cn_matrix(&CccGraph::clique_union(&[(3, 1)]));
        assert_eq!(k3.rows(), vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        let iso = cn_matrix(&CccGraph::clique_union(&[(1, 3)]));
        assert_eq!(iso, IntMatrix::zeros(3));
        let k4 = cn_matrix(&CccGraph::clique_union(&[(4, 1)]));
        assert!((0..4).all(|i| (0..4).all(|j| k4.get(i, j) == if i == j { 0 } else { 2 })));
    }

    #[test]
    fn laplacians() {
        let k3 = cnl_cnsl_matrices(&cn_matrix(&CccGraph::clique_union(&[(3, 1)])));
        assert_eq!(
            k3.cnl.rows(),
            vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]
        );
        let iso = cnl_cnsl_matrices(&IntMatrix::zeros(3));
        assert_eq!(iso.cnl, IntMatrix::zeros(3));
        assert_eq!(iso.cnsl, IntMatrix::zeros(3));
        let cn4 = cn_matrix(&CccGraph::clique_union(&[(4, 1)]));
        let k4 = cnl_cnsl_matrices(&cn4);
        assert_eq!(k4.cnsl.get(0, 0), 6);
        assert_eq!(k4.cnsl.get(0, 1), 2);
        assert_eq!(k4.cnsl.trace(), 24);
        assert_eq!(k4.cnl.trace(), cn4.entry_sum());
        assert_eq!(k4.cnrs.trace(), 24);
    }

    #[test]
    fn exact_rank() {
        assert_eq!(IntMatrix::zeros(3).rank(), 0);
        let m = IntMatrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let cnl4 = cnl_cnsl_matrices(&cn_matrix(&CccGraph::clique_union(&[(4, 1)]))).cnl;
        assert_eq!(cnl4.nullity_shifted(&Rational::from_int(0)), 1);
        assert_eq!(cnl4.nullity_shifted(&Rational::from_int(8)), 3);
        assert_eq!(cnl4.nullity_shifted(&Rational::new(1, 2)), 0);
    }
}
