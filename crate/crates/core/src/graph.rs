//! The commuting conjugacy class graph and its clique-union structure.

use std::fmt::Write as _;

use serde::Serialize;

use crate::classes::{CentralQuotientType, ConjugacyPartition, QuotientKind};
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::group::GroupTable;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Vertex {
    pub representative: usize,
    pub label: String,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CccGraph {
    pub vertices: Vec<Vertex>,
    adjacency: Vec<Vec<bool>>,
}

/// Which element of each class is tested for commuting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Representative {
    #[default]
    Min,
    Max,
}

impl CccGraph {
    /// Builds a graph directly from an adjacency matrix, with placeholder
    /// labels. The matrix must be symmetric with a false diagonal.
    pub fn from_adjacency(adjacency: Vec<Vec<bool>>) -> Result<Self> {
        let n = adjacency.len();
        for (i, row) in adjacency.iter().enumerate() {
            if row.len() != n || row[i] || (0..n).any(|j| row[j] != adjacency[j][i]) {
                return Err(Error::InvalidParameters(
                    "adjacency must be square, symmetric and irreflexive".into(),
                ));
            }
        }
        let vertices = (0..n)
            .map(|i| Vertex {
                representative: i,
                label: format!("v{i}"),
                size: 1,
            })
            .collect();
        Ok(CccGraph {
            vertices,
            adjacency,
        })
    }

    /// Disjoint union of complete graphs, parts taken in order.
    pub fn clique_union(parts: &[(usize, usize)]) -> Self {
        let sizes: Vec<usize> = parts
            .iter()
            .flat_map(|&(m, l)| std::iter::repeat_n(m, l))
            .collect();
        let n: usize = sizes.iter().sum();
        let mut adjacency = vec![vec![false; n]; n];
        let mut start = 0;
        for m in sizes {
            for i in start..start + m {
                for j in start..start + m {
                    adjacency[i][j] = i != j;
                }
            }
            start += m;
        }
        Self::from_adjacency(adjacency).expect("clique union adjacency is valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i][j]
    }

    pub fn adjacency(&self) -> &[Vec<bool>] {
        &self.adjacency
    }

    pub fn edges(&self) -> Vec<[usize; 2]> {
        let n = self.vertex_count();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| [i, j]))
            .filter(|&[i, j]| self.adjacency[i][j])
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "vertices": self.vertices,
            "edges": self.edges(),
        })
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph ccc {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  {i} [label=\"{} ({})\"];", v.label, v.size);
        }
        for [i, j] in self.edges() {
            let _ = writeln!(out, "  {i} -- {j};");
        }
        out.push_str("}\n");
        out
    }

    fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut k = 0;
            while k < comp.len() {
                let v = comp[k];
                for w in 0..n {
                    if self.adjacency[v][w] && !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }
}

pub fn build_ccc_graph(g: &GroupTable, p: &ConjugacyPartition) -> Result<CccGraph> {
    build_ccc_graph_with(g, p, Representative::Min)
}

/// Classes `C`, `D` are adjacent when some element of `D` commutes with the
/// chosen representative of `C`.
pub fn build_ccc_graph_with(
    g: &GroupTable,
    p: &ConjugacyPartition,
    choice: Representative,
) -> Result<CccGraph> {
    if p.noncentral_classes.is_empty() {
        return Err(Error::AbelianGroup);
    }
    let classes: Vec<&Vec<usize>> = p
        .noncentral_classes
        .iter()
        .map(|&c| &p.classes[c])
        .collect();
    let reps: Vec<usize> = classes
        .iter()
        .map(|c| match choice {
            Representative::Min => c[0],
            Representative::Max => *c.last().expect("classes are non-empty"),
        })
        .collect();
    let n = classes.len();
    let mut adjacency = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                adjacency[i][j] = classes[j].iter().any(|&b| g.commute(reps[i], b));
            }
        }
    }
    let vertices = classes
        .iter()
        .zip(&reps)
        .map(|(c, &r)| Vertex {
            representative: r,
            label: g.label(r).to_string(),
            size: c.len(),
        })
        .collect();
    Ok(CccGraph {
        vertices,
        adjacency,
    })
}

/// `(clique size, count)` pairs, sorted by clique size descending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueDecomposition {
    pub parts: Vec<(usize, usize)>,
}

impl CliqueDecomposition {
    /// Merges equal sizes, drops empty parts and sorts canonically.
    pub fn new(parts: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut merged: Vec<(usize, usize)> = Vec::new();
        for (m, l) in parts {
            if m == 0 || l == 0 {
                continue;
            }
            match merged.iter_mut().find(|(mm, _)| *mm == m) {
                Some(part) => part.1 += l,
                None => merged.push((m, l)),
            }
        }
        merged.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        CliqueDecomposition { parts: merged }
    }

    pub fn vertex_count(&self) -> usize {
        self.parts.iter().map(|&(m, l)| m * l).sum()
    }
}

impl std::fmt::Display for CliqueDecomposition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let terms: Vec<String> = self
            .parts
            .iter()
            .map(|&(m, l)| {
                if l == 1 {
                    format!("K_{m}")
                } else {
                    format!("{l}K_{m}")
                }
            })
            .collect();
        f.write_str(&terms.join(" u "))
    }
}

pub fn decompose_cliques(graph: &CccGraph) -> Result<CliqueDecomposition> {
    let mut sizes = Vec::new();
    for comp in graph.components() {
        for (k, &v) in comp.iter().enumerate() {
            if comp[k + 1..].iter().any(|&w| !graph.adjacent(v, w)) {
                return Err(Error::NotCliqueUnion { vertex: v });
            }
        }
        sizes.push((comp.len(), 1));
    }
    Ok(CliqueDecomposition::new(sizes))
}

pub fn predicted_structure(q: &CentralQuotientType) -> Result<CliqueDecomposition> {
    let z = q.z as usize;
    match q.kind {
        QuotientKind::ZpZp { p } => {
            let p = p as usize;
            if !z.is_multiple_of(p) {
                return Err(Error::NotRealizable(format!("p={p} does not divide z={z}")));
            }
            Ok(CliqueDecomposition::new([((p - 1) * z / p, p + 1)]))
        }
        QuotientKind::DihedralQuotient { n } => {
            let n = n as usize;
            if n.is_multiple_of(2) {
                if !z.is_multiple_of(2) {
                    return Err(Error::NotRealizable(format!(
                        "n={n} is even but z={z} is odd"
                    )));
                }
                Ok(CliqueDecomposition::new([((n - 1) * z / 2, 1), (z / 2, 2)]))
            } else {
                Ok(CliqueDecomposition::new([((n - 1) * z / 2, 1), (z, 1)]))
            }
        }
        QuotientKind::Other => Err(Error::UnknownQuotient),
    }
}

/// Structure expected for a family instance: `K_{2n-2} u 2K_2` for `V_8n`
/// with `n` even, the quotient prediction otherwise.
pub fn family_structure(spec: &FamilySpec, q: &CentralQuotientType) -> Result<CliqueDecomposition> {
    match *spec {
        FamilySpec::V8n { n } if n % 2 == 0 => {
            Ok(CliqueDecomposition::new([(2 * n as usize - 2, 1), (2, 2)]))
        }
        _ => predicted_structure(q),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{central_quotient_type, conjugacy_classes};
    use crate::group::build_group;

    fn graph(s: &str) -> CccGraph {
        let g = build_group(s.parse().unwrap()).unwrap();
        let p = conjugacy_classes(&g);
        build_ccc_graph(&g, &p).unwrap()
    }

    #[test]
    fn small_graphs() {
        let s3 = graph("dihedral:n=3");
        assert_eq!((s3.vertex_count(), s3.edge_count()), (2, 0));
        let q8 = graph("dicyclic:n=2");
        assert_eq!((q8.vertex_count(), q8.edge_count()), (3, 0));
        let v16 = graph("v8n:n=2");
        assert_eq!(
            decompose_cliques(&v16).unwrap(),
            CliqueDecomposition::new([(2, 3)])
        );
    }

    #[test]
    fn abelian_has_no_graph() {
        let g = build_group("unm:n=2,m=2".parse().unwrap()).unwrap();
        let p = conjugacy_classes(&g);
        assert_eq!(build_ccc_graph(&g, &p), Err(Error::AbelianGroup));
    }

    #[test]
    fn decompositions() {
        let iso = CccGraph::from_adjacency(vec![vec![false; 3]; 3]).unwrap();
        assert_eq!(decompose_cliques(&iso).unwrap().parts, vec![(1, 3)]);
        let two_k3 = CccGraph::clique_union(&[(3, 2)]);
        assert_eq!(decompose_cliques(&two_k3).unwrap().parts, vec![(3, 2)]);
        let p3 = CccGraph::from_adjacency(vec![
            vec![false, true, false],
            vec![true, false, true],
            vec![false, true, false],
        ])
        .unwrap();
        assert!(matches!(
            decompose_cliques(&p3),
            Err(Error::NotCliqueUnion { .. })
        ));
    }

    #[test]
    fn rejects_bad_adjacency() {
        assert!(CccGraph::from_adjacency(vec![vec![true]]).is_err());
        assert!(CccGraph::from_adjacency(vec![vec![false, true], vec![false, false]]).is_err());
    }

    #[test]
    fn predictions() {
        let zp = CentralQuotientType {
            kind: QuotientKind::ZpZp { p: 3 },
            z: 3,
        };
        assert_eq!(predicted_structure(&zp).unwrap().parts, vec![(2, 4)]);
        let u18 = CentralQuotientType {
            kind: QuotientKind::DihedralQuotient { n: 3 },
            z: 3,
        };
        assert_eq!(predicted_structure(&u18).unwrap().parts, vec![(3, 2)]);
        let sd16 = CentralQuotientType {
            kind: QuotientKind::DihedralQuotient { n: 4 },
            z: 2,
        };
        assert_eq!(
            predicted_structure(&sd16).unwrap().parts,
            vec![(3, 1), (1, 2)]
        );
        let odd_z = CentralQuotientType {
            kind: QuotientKind::DihedralQuotient { n: 4 },
            z: 3,
        };
        assert!(matches!(
            predicted_structure(&odd_z),
            Err(Error::NotRealizable(_))
        ));
        let other = CentralQuotientType {
            kind: QuotientKind::Other,
            z: 1,
        };
        assert_eq!(predicted_structure(&other), Err(Error::UnknownQuotient));
    }

    #[test]
    fn sd16_matches_prediction() {
        let g = build_group("semidihedral:n=2".parse().unwrap()).unwrap();
        let p = conjugacy_classes(&g);
        let q = central_quotient_type(&g, &p);
        let d = decompose_cliques(&build_ccc_graph(&g, &p).unwrap()).unwrap();
        assert_eq!(d, predicted_structure(&q).unwrap());
    }

    #[test]
    fn v8n_even_route_agrees_with_quotient() {
        for n in [2, 4, 6] {
            let spec: FamilySpec = format!("v8n:n={n}").parse().unwrap();
            let g = build_group(spec).unwrap();
            let p = conjugacy_classes(&g);
            let q = central_quotient_type(&g, &p);
            assert_eq!(
                family_structure(&spec, &q).unwrap(),
                predicted_structure(&q).unwrap()
            );
        }
    }

    #[test]
    fn exports() {
        let g = CccGraph::clique_union(&[(2, 1), (1, 1)]);
        let json = g.to_json();
        assert_eq!(json["edges"], serde_json::json!([[0, 1]]));
        assert_eq!(json["vertices"].as_array().unwrap().len(), 3);
        assert!(g.to_dot().contains("0 -- 1;"));
        assert_eq!(
            CliqueDecomposition::new([(3, 1), (1, 2)]).to_string(),
            "K_3 u 2K_1"
        );
    }
}
