//! Covariance numerators `N_ij` of a colored cycle, with
//! `sigma_ij = N_ij / det K`.
//!
//! For `i < j` the numerator splits into one term per arc joining `i` and
//! `j`: the signed product of the arc's edge variables times the
//! determinant of the path left after deleting the arc's vertices.

use num_bigint::BigInt;

use crate::determinant::{det_matrix, det_path_recurrence, ConcentrationView, DEFAULT_BOUND};
use crate::error::{Error, Result};
use crate::model::{Arc, ColoredCycle};
use crate::poly::{Monomial, Polynomial, VariableId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CovarianceNumerator {
    pub i: usize,
    pub j: usize,
    pub numerator: Polynomial,
    /// `(shorter, complement)` arc contributions; `None` on the diagonal.
    pub parts: Option<(Polynomial, Polynomial)>,
}

impl CovarianceNumerator {
    pub fn shorter_part(&self) -> Option<&Polynomial> {
        self.parts.as_ref().map(|p| &p.0)
    }

    pub fn complement_part(&self) -> Option<&Polynomial> {
        self.parts.as_ref().map(|p| &p.1)
    }
}

fn arc_term(c: &ColoredCycle, arc: &Arc) -> Result<Polynomial> {
    let rest = c.delete_vertices(&arc.vertices)?;
    let edges = Monomial::from_factors(
        arc.path
            .edge_colors()
            .iter()
            .map(|&e| (VariableId::edge(e), 1)),
    );
    // (-1)^(n_arc + 1)
    let sign = if arc.vertices.len() % 2 == 1 { 1 } else { -1 };
    Ok(det_path_recurrence(&rest.path).mul_monomial(&edges, &BigInt::from(sign)))
}

/// Numerator of `sigma_ij`; `(i, j)` is normalized so that `i <= j`.
pub fn sigma_numerator(c: &ColoredCycle, i: usize, j: usize) -> Result<CovarianceNumerator> {
    let (i, j) = (i.min(j), i.max(j));
    let n = c.n();
    for v in [i, j] {
        if v == 0 || v > n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    if i == j {
        let rest = c.delete_vertices(&[i])?;
        return Ok(CovarianceNumerator {
            i,
            j,
            numerator: det_path_recurrence(&rest.path),
            parts: None,
        });
    }
    let arcs = c.cycle_paths(i, j)?;
    let shorter = arc_term(c, &arcs.shorter)?;
    let complement = arc_term(c, &arcs.complement)?;
    Ok(CovarianceNumerator {
        i,
        j,
        numerator: &shorter + &complement,
        parts: Some((shorter, complement)),
    })
}

/// `adj(K)_ij = (-1)^(i+j) det(K without row j and column i)`.
pub fn adjugate_oracle(k: &ConcentrationView, i: usize, j: usize) -> Result<Polynomial> {
    let n = k.n();
    for v in [i, j] {
        if v == 0 || v > n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    if n > DEFAULT_BOUND {
        return Err(Error::TooLarge {
            n,
            bound: DEFAULT_BOUND,
        });
    }
    let minor = det_matrix(&k.minor(j, i), DEFAULT_BOUND)?;
    Ok(if (i + j).is_multiple_of(2) {
        minor
    } else {
        -minor
    })
}

pub fn adjugate_oracle_cycle(c: &ColoredCycle, i: usize, j: usize) -> Result<Polynomial> {
    adjugate_oracle(&ConcentrationView::from_cycle(c), i, j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::determinant::{vertex_degree_parity, Parity};

    #[test]
    fn uniform_triangle_off_diagonal() {
        let c = ColoredCycle::uniform(3).unwrap();
        let want: Polynomial = "+1*e0^2 -1*v0*e0".parse().unwrap();
        assert_eq!(adjugate_oracle_cycle(&c, 1, 2).unwrap(), want);
        assert_eq!(sigma_numerator(&c, 1, 2).unwrap().numerator, want);
        assert_eq!(
            sigma_numerator(&c, 1, 1).unwrap().numerator,
            sigma_numerator(&c, 2, 2).unwrap().numerator
        );
    }

    #[test]
    fn diagonal_is_principal_minor() {
        let c = ColoredCycle::new(vec![0, 1, 2, 3, 4], vec![0, 1, 2, 3, 4]).unwrap();
        for i in 1..=5 {
            let s = sigma_numerator(&c, i, i).unwrap();
            assert!(s.parts.is_none());
            assert_eq!(s.numerator, adjugate_oracle_cycle(&c, i, i).unwrap());
        }
    }

    #[test]
    fn matches_oracle_on_distinct_colors() {
        for n in 3..=7 {
            let c =
                ColoredCycle::new((0..n as u32).collect(), (0..n as u32).rev().collect()).unwrap();
            for i in 1..=n {
                for j in i..=n {
                    let s = sigma_numerator(&c, i, j).unwrap();
                    assert_eq!(s.numerator, adjugate_oracle_cycle(&c, i, j).unwrap());
                    assert_eq!(s.numerator, adjugate_oracle_cycle(&c, j, i).unwrap());
                    if let Some((a, b)) = &s.parts {
                        assert_eq!(&(a + b), &s.numerator);
                    }
                }
            }
        }
    }

    #[test]
    fn odd_cycle_parts_have_opposite_parity() {
        let c = ColoredCycle::new(vec![0, 1, 0, 2, 1, 0, 1], vec![0, 1, 0, 2, 2, 1, 0]).unwrap();
        for i in 1..=7 {
            for j in i + 1..=7 {
                let s = sigma_numerator(&c, i, j).unwrap();
                let (a, b) = s.parts.unwrap();
                let (pa, pb) = (vertex_degree_parity(&a), vertex_degree_parity(&b));
                assert!(matches!(
                    (pa, pb),
                    (Parity::AllOdd, Parity::AllEven) | (Parity::AllEven, Parity::AllOdd)
                ));
            }
        }
    }

    #[test]
    fn argument_order_is_normalized() {
        let c = ColoredCycle::uniform(4).unwrap();
        let s = sigma_numerator(&c, 3, 1).unwrap();
        assert_eq!((s.i, s.j), (1, 3));
        assert!(sigma_numerator(&c, 0, 1).is_err());
    }
}
