//! Symbolic determinants of colored concentration matrices.
//!
//! Three independent routes: the disjoint-edge (matching) expansion and the
//! three-term recurrence for paths, and a memoized cofactor expansion for
//! arbitrary small matrices.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::model::{ColoredCycle, ColoredGraph, ColoredPath};
use crate::poly::{Monomial, Polynomial, VariableId};

pub const DEFAULT_BOUND: usize = 12;

/// A square matrix whose entries are single variables or structural zeros.
pub type SymbolicMatrix = Vec<Vec<Option<VariableId>>>;

/// The concentration matrix of a colored graph: diagonal entries are vertex
/// color variables, edge entries edge color variables, everything else zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConcentrationView {
    entries: SymbolicMatrix,
}

impl ConcentrationView {
    pub fn from_graph(g: &ColoredGraph) -> Self {
        let n = g.n();
        let mut entries = vec![vec![None; n]; n];
        for (i, &c) in g.vertex_colors().iter().enumerate() {
            entries[i][i] = Some(VariableId::vertex(c));
        }
        for &(a, b, c) in g.edges() {
            entries[a - 1][b - 1] = Some(VariableId::edge(c));
            entries[b - 1][a - 1] = Some(VariableId::edge(c));
        }
        ConcentrationView { entries }
    }

    pub fn from_path(p: &ColoredPath) -> Self {
        ConcentrationView::from_graph(&p.to_graph())
    }

    pub fn from_cycle(c: &ColoredCycle) -> Self {
        ConcentrationView::from_graph(&c.to_graph())
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// Entry at 1-indexed `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> Option<VariableId> {
        self.entries[i - 1][j - 1]
    }

    pub fn matrix(&self) -> &SymbolicMatrix {
        &self.entries
    }

    /// The matrix with 1-indexed `row` and `col` deleted.
    pub fn minor(&self, row: usize, col: usize) -> SymbolicMatrix {
        self.entries
            .iter()
            .enumerate()
            .filter(|&(r, _)| r + 1 != row)
            .map(|(_, line)| {
                line.iter()
                    .enumerate()
                    .filter(|&(c, _)| c + 1 != col)
                    .map(|(_, e)| *e)
                    .collect()
            })
            .collect()
    }

    pub fn det(&self) -> Result<Polynomial> {
        det_matrix(&self.entries, DEFAULT_BOUND)
    }
}

fn vertex_var(p: &ColoredPath, k: usize) -> VariableId {
    VariableId::vertex(p.vertex_colors()[k])
}

fn edge_var(p: &ColoredPath, k: usize) -> VariableId {
    VariableId::edge(p.edge_colors()[k])
}

/// Sum over matchings `S` of `(-1)^|S| * prod e^2 * prod (unmatched vertices)`.
pub fn det_path_disjoint(p: &ColoredPath) -> Polynomial {
    fn walk(p: &ColoredPath, k: usize, taken: &mut Vec<usize>, out: &mut Polynomial) {
        let m = p.len();
        if k + 1 >= m {
            let mut covered = vec![false; m];
            for &e in taken.iter() {
                covered[e] = true;
                covered[e + 1] = true;
            }
            let factors = taken.iter().map(|&e| (edge_var(p, e), 2)).chain(
                (0..m)
                    .filter(|&v| !covered[v])
                    .map(|v| (vertex_var(p, v), 1)),
            );
            let sign = if taken.len().is_multiple_of(2) { 1 } else { -1 };
            out.add_term(Monomial::from_factors(factors), BigInt::from(sign));
            return;
        }
        walk(p, k + 1, taken, out);
        taken.push(k);
        // edge k covers vertices k and k+1, so edge k+1 is unavailable
        walk(p, k + 2, taken, out);
        taken.pop();
    }
    let mut out = Polynomial::zero();
    walk(p, 0, &mut Vec::new(), &mut out);
    out
}

/// `D_k = v_k D_{k-1} - e_{k-1}^2 D_{k-2}` with `D_0 = 1`, `D_1 = v_1`.
pub fn det_path_recurrence(p: &ColoredPath) -> Polynomial {
    let mut prev = Polynomial::one();
    if p.is_empty() {
        return prev;
    }
    let mut cur = Polynomial::var(vertex_var(p, 0));
    let one = BigInt::from(1);
    let minus_one = BigInt::from(-1);
    for k in 1..p.len() {
        let mut next = cur.mul_monomial(&Monomial::var(vertex_var(p, k)), &one);
        let e2 = Monomial::from_factors([(edge_var(p, k - 1), 2)]);
        next.add_assign_ref(&prev.mul_monomial(&e2, &minus_one));
        prev = cur;
        cur = next;
    }
    cur
}

/// Exact determinant of a colored graph's concentration matrix.
pub fn det_general(g: &ColoredGraph) -> Result<Polynomial> {
    det_general_bounded(g, DEFAULT_BOUND)
}

pub fn det_general_bounded(g: &ColoredGraph, bound: usize) -> Result<Polynomial> {
    det_matrix(ConcentrationView::from_graph(g).matrix(), bound)
}

/// Laplace expansion along successive rows, memoized on the set of columns
/// still available. Works for non-symmetric matrices (cofactor minors).
pub fn det_matrix(a: &SymbolicMatrix, bound: usize) -> Result<Polynomial> {
    let n = a.len();
    if n > bound {
        return Err(Error::TooLarge { n, bound });
    }
    debug_assert!(a.iter().all(|row| row.len() == n));
    let mut memo: HashMap<u32, Polynomial> = HashMap::new();
    let full: u32 = if n == 0 { 0 } else { (1u32 << n) - 1 };
    Ok(expand(a, full, &mut memo))
}

// Row index is implied by how many columns are already used.
fn expand(a: &SymbolicMatrix, cols: u32, memo: &mut HashMap<u32, Polynomial>) -> Polynomial {
    if cols == 0 {
        return Polynomial::one();
    }
    if let Some(hit) = memo.get(&cols) {
        return hit.clone();
    }
    let n = a.len();
    let row = n - cols.count_ones() as usize;
    let mut out = Polynomial::zero();
    let mut rank = 0usize;
    for c in 0..n {
        if cols & (1 << c) == 0 {
            continue;
        }
        if let Some(v) = a[row][c] {
            let sub = expand(a, cols & !(1 << c), memo);
            if !sub.is_zero() {
                let sign = BigInt::from(if rank.is_multiple_of(2) { 1 } else { -1 });
                out.add_assign_ref(&sub.mul_monomial(&Monomial::var(v), &sign));
            }
        }
        rank += 1;
    }
    memo.insert(cols, out.clone());
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    AllOdd,
    AllEven,
    Mixed,
    Zero,
}

/// Parity of the vertex degree across all monomials.
pub fn vertex_degree_parity(p: &Polynomial) -> Parity {
    let mut odd = false;
    let mut even = false;
    for m in p.monomials() {
        if m.vertex_degree() % 2 == 1 {
            odd = true;
        } else {
            even = true;
        }
    }
    match (odd, even) {
        (false, false) => Parity::Zero,
        (true, false) => Parity::AllOdd,
        (false, true) => Parity::AllEven,
        (true, true) => Parity::Mixed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(vc: &[u32], ec: &[u32]) -> ColoredPath {
        ColoredPath::new(vc.to_vec(), ec.to_vec()).unwrap()
    }

    fn all_three(p: &ColoredPath) -> Polynomial {
        let a = det_path_disjoint(p);
        let b = det_path_recurrence(p);
        let c = det_general(&p.to_graph()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        a
    }

    #[test]
    fn empty_and_single() {
        assert_eq!(all_three(&ColoredPath::empty()), Polynomial::one());
        assert_eq!(all_three(&path(&[3], &[])), Polynomial::vertex(3));
    }

    #[test]
    fn two_vertex_path() {
        let d = all_three(&path(&[0, 1], &[0]));
        let want = &Polynomial::vertex(0) * &Polynomial::vertex(1) - Polynomial::edge(0).pow(2);
        assert_eq!(d, want);
    }

    #[test]
    fn uniform_edge_three_path() {
        let d = all_three(&path(&[0, 1, 2], &[0, 0]));
        let (v1, v2, v3) = (
            Polynomial::vertex(0),
            Polynomial::vertex(1),
            Polynomial::vertex(2),
        );
        let e2 = Polynomial::edge(0).pow(2);
        let want = &(&v1 * &v2) * &v3 - &e2 * &v3 - &e2 * &v1;
        assert_eq!(d, want);
    }

    #[test]
    fn alternating_four_path() {
        // vertices k11,k22,k11,k22; edges k12,k23,k34
        let d = all_three(&path(&[0, 1, 0, 1], &[0, 1, 2]));
        let want: Polynomial =
            "+1*v0^2*v1^2 -1*v0*v1*e0^2 -1*v0*v1*e1^2 -1*v0*v1*e2^2 +1*e0^2*e2^2"
                .parse()
                .unwrap();
        assert_eq!(d, want);
        assert_eq!(vertex_degree_parity(&d), Parity::AllEven);
    }

    #[test]
    fn parity_examples() {
        let x = Polynomial::vertex(0);
        let p = &x + &(&x * &Polynomial::edge(0).pow(2));
        assert_eq!(vertex_degree_parity(&p), Parity::AllOdd);
        assert_eq!(vertex_degree_parity(&Polynomial::zero()), Parity::Zero);
        assert_eq!(
            vertex_degree_parity(&(&x + &Polynomial::one())),
            Parity::Mixed
        );
        let d5 = det_path_recurrence(&path(&[0, 1, 2, 1, 0], &[0, 1, 0, 2]));
        assert_eq!(vertex_degree_parity(&d5), Parity::AllOdd);
    }

    #[test]
    fn too_large() {
        let big = ColoredPath::new(vec![0; 13], vec![0; 12]).unwrap();
        assert!(matches!(
            det_general(&big.to_graph()),
            Err(Error::TooLarge { n: 13, bound: 12 })
        ));
        assert!(det_general_bounded(&big.to_graph(), 13).is_ok());
    }

    #[test]
    fn triangle_by_hand() {
        // uniform 3-cycle: v^3 - 3 v e^2 + 2 e^3
        let c = ColoredCycle::uniform(3).unwrap();
        let d = ConcentrationView::from_cycle(&c).det().unwrap();
        assert_eq!(d, "+1*v0^3 -3*v0*e0^2 +2*e0^3".parse().unwrap());
    }

    #[test]
    fn view_entries() {
        let c = ColoredCycle::new(vec![0, 1, 2, 3], vec![0, 1, 2, 3]).unwrap();
        let k = ConcentrationView::from_cycle(&c);
        assert_eq!(k.entry(1, 1), Some(VariableId::vertex(0)));
        assert_eq!(k.entry(4, 1), Some(VariableId::edge(3)));
        assert_eq!(k.entry(1, 3), None);
        for i in 1..=4 {
            for j in 1..=4 {
                assert_eq!(k.entry(i, j), k.entry(j, i));
            }
        }
        assert_eq!(k.minor(1, 2).len(), 3);
    }
}
