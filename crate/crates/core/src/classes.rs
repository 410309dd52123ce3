//! Conjugacy classes, the center, and the shape of the central quotient.

use serde::Serialize;

use crate::family::is_prime;
use crate::group::GroupTable;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyPartition {
    /// Sorted element lists, ordered by their minimal element.
    pub classes: Vec<Vec<usize>>,
    /// Sorted indices of `Z(G)`.
    pub center: Vec<usize>,
    /// Minimal element of each class.
    pub representatives: Vec<usize>,
    /// Indices into `classes` of the classes outside the center.
    pub noncentral_classes: Vec<usize>,
    /// Class index of every element.
    pub class_of: Vec<usize>,
}

impl ConjugacyPartition {
    pub fn center_size(&self) -> usize {
        self.center.len()
    }

    pub fn class_equation_holds(&self, order: usize) -> bool {
        let total: usize = self.classes.iter().map(Vec::len).sum();
        total == order && self.classes.iter().all(|c| order.is_multiple_of(c.len()))
    }
}

pub fn conjugacy_classes(g: &GroupTable) -> ConjugacyPartition {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for a in 0..n {
        if class_of[a] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members: Vec<usize> = (0..n).map(|h| g.conjugate(a, h)).collect();
        members.sort_unstable();
        members.dedup();
        for &b in &members {
            class_of[b] = id;
        }
        classes.push(members);
    }
    let representatives = classes.iter().map(|c| c[0]).collect();
    let center: Vec<usize> = (0..n)
        .filter(|&a| (0..n).all(|b| g.commute(a, b)))
        .collect();
    let noncentral_classes = classes
        .iter()
        .enumerate()
        .filter(|(_, c)| !(c.len() == 1 && center.binary_search(&c[0]).is_ok()))
        .map(|(i, _)| i)
        .collect();
    ConjugacyPartition {
        classes,
        center,
        representatives,
        noncentral_classes,
        class_of,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum QuotientKind {
    /// `G/Z(G) = Z_p x Z_p`.
    ZpZp {
        p: u32,
    },
    /// `G/Z(G) = D_2n` with `n >= 3`.
    DihedralQuotient {
        n: u32,
    },
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CentralQuotientType {
    pub kind: QuotientKind,
    pub z: u32,
}

/// The factor group `G/Z(G)` as its own table.
struct Quotient {
    order: usize,
    mult: Vec<usize>,
    identity: usize,
}

impl Quotient {
    fn new(g: &GroupTable, p: &ConjugacyPartition) -> Self {
        let n = g.order();
        // coset id = position of the coset's minimal element among all minima
        let mut coset_min = vec![usize::MAX; n];
        for a in 0..n {
            if coset_min[a] != usize::MAX {
                continue;
            }
            let coset: Vec<usize> = p.center.iter().map(|&c| g.mul(a, c)).collect();
            let min = *coset.iter().min().expect("center is non-empty");
            for b in coset {
                coset_min[b] = min;
            }
        }
        let mut minima: Vec<usize> = coset_min.clone();
        minima.sort_unstable();
        minima.dedup();
        let id = |a: usize| -> usize {
            minima
                .binary_search(&coset_min[a])
                .expect("coset minimum is listed")
        };
        let order = minima.len();
        let mut mult = vec![0; order * order];
        for (i, &a) in minima.iter().enumerate() {
            for (j, &b) in minima.iter().enumerate() {
                mult[i * order + j] = id(g.mul(a, b));
            }
        }
        Quotient {
            order,
            mult,
            identity: id(g.identity()),
        }
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b]
    }

    fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut cur = a;
        while cur != self.identity {
            cur = self.mul(cur, a);
            k += 1;
        }
        k
    }

    fn inv(&self, a: usize) -> usize {
        (0..self.order)
            .find(|&b| self.mul(a, b) == self.identity)
            .expect("quotient element has an inverse")
    }

    fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    fn zpzp_prime(&self) -> Option<u32> {
        let p = (self.order as f64).sqrt().round() as usize;
        if p * p != self.order || !is_prime(p as u32) || !self.is_abelian() {
            return None;
        }
        (0..self.order)
            .all(|a| p.is_multiple_of(self.element_order(a)))
            .then_some(p as u32)
    }

    /// `k` such that the quotient is `D_2k` with `k >= 3`: an element `r` of
    /// order `k` and an involution `s` outside `<r>` with `s r s^-1 = r^-1`.
    fn dihedral_parameter(&self) -> Option<u32> {
        if !self.order.is_multiple_of(2) || self.order < 6 {
            return None;
        }
        let k = self.order / 2;
        let r = (0..self.order).find(|&a| self.element_order(a) == k)?;
        let mut cyclic = vec![false; self.order];
        let mut cur = self.identity;
        for _ in 0..k {
            cyclic[cur] = true;
            cur = self.mul(cur, r);
        }
        let r_inv = self.inv(r);
        (0..self.order)
            .find(|&s| {
                !cyclic[s]
                    && self.mul(s, s) == self.identity
                    && self.mul(self.mul(s, r), s) == r_inv
            })
            .map(|_| k as u32)
    }
}

/// Classifies `G/Z(G)`: Z_p x Z_p is tested before the dihedral shape.
pub fn central_quotient_type(g: &GroupTable, p: &ConjugacyPartition) -> CentralQuotientType {
    let z = p.center_size() as u32;
    let q = Quotient::new(g, p);
    let kind = if let Some(prime) = q.zpzp_prime() {
        QuotientKind::ZpZp { p: prime }
    } else if let Some(n) = q.dihedral_parameter() {
        QuotientKind::DihedralQuotient { n }
    } else {
        QuotientKind::Other
    };
    CentralQuotientType { kind, z }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_group;

    fn part(s: &str) -> (GroupTable, ConjugacyPartition) {
        let g = build_group(s.parse().unwrap()).unwrap();
        let p = conjugacy_classes(&g);
        (g, p)
    }

    #[test]
    fn s3_classes() {
        let (g, p) = part("dihedral:n=3");
        assert_eq!(p.classes.len(), 3);
        assert_eq!(p.center, vec![g.identity()]);
        let mut sizes: Vec<usize> = p.classes.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(p.noncentral_classes.len(), 2);
        let r = g.parse_word("x").unwrap();
        let r2 = g.parse_word("x^2").unwrap();
        assert_eq!(p.class_of[r], p.class_of[r2]);
    }

    #[test]
    fn q8_classes() {
        let (_, p) = part("dicyclic:n=2");
        assert_eq!(p.classes.len(), 5);
        assert_eq!(p.center.len(), 2);
        assert_eq!(p.noncentral_classes.len(), 3);
        assert!(p
            .noncentral_classes
            .iter()
            .all(|&c| p.classes[c].len() == 2));
    }

    #[test]
    fn sd16_vertex_count() {
        let (g, p) = part("semidihedral:n=2");
        assert_eq!(p.center.len(), 2);
        assert_eq!(p.noncentral_classes.len(), 5);
        let q = central_quotient_type(&g, &p);
        assert_eq!(q.kind, QuotientKind::DihedralQuotient { n: 4 });
    }

    #[test]
    fn u12_center() {
        let (_, p) = part("u6n:n=2");
        assert_eq!(p.center.len(), 2);
    }

    #[test]
    fn representatives_are_class_minima() {
        let (g, p) = part("v8n:n=3");
        assert!(p.class_equation_holds(g.order()));
        for (c, &r) in p.classes.iter().zip(&p.representatives) {
            assert_eq!(Some(&r), c.iter().min());
        }
    }

    #[test]
    fn quotient_shapes() {
        let cases = [
            ("dicyclic:n=2", QuotientKind::ZpZp { p: 2 }, 2),
            ("dicyclic:n=3", QuotientKind::DihedralQuotient { n: 3 }, 2),
            (
                "semidihedral:n=3",
                QuotientKind::DihedralQuotient { n: 3 },
                4,
            ),
            ("heisenberg:p=3", QuotientKind::ZpZp { p: 3 }, 3),
            ("heisenberg:p=5", QuotientKind::ZpZp { p: 5 }, 5),
            ("central_ext:base=d8,m=3", QuotientKind::ZpZp { p: 2 }, 6),
            ("dihedral:n=7", QuotientKind::DihedralQuotient { n: 7 }, 1),
        ];
        for (s, kind, z) in cases {
            let (g, p) = part(s);
            assert_eq!(
                central_quotient_type(&g, &p),
                CentralQuotientType { kind, z },
                "{s}"
            );
        }
    }

    #[test]
    fn abelian_quotient_is_other() {
        // U_(n,2) is abelian: trivial quotient
        let (g, p) = part("unm:n=3,m=2");
        assert!(g.is_abelian());
        assert!(p.noncentral_classes.is_empty());
        assert_eq!(central_quotient_type(&g, &p).kind, QuotientKind::Other);
    }
}
