//! Pairs of colored paths with equal determinants.
//!
//! Two families are known to give equal determinants without the paths
//! being identical or mirror images:
//!
//! * even `m`: both paths alternate two vertex colors, in opposite phase,
//!   over the same edge color sequence;
//! * odd `m`: identical vertex colors with one color on every odd position,
//!   and two edge colors alternating in opposite phase.
//!
//! [`exhaustive_pair_search`] enumerates every path over small palettes and
//! reports the remaining equal-determinant pairs.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, BTreeSet};
use std::hash::{Hash, Hasher};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::determinant::det_path_recurrence;
use crate::error::{Error, Result};
use crate::model::{first_occurrence, Color, ColoredPath};

pub const DEFAULT_PAIR_BUDGET: u128 = 5_000_000;

/// Opposite-phase alternating vertex colors over `m - 1` distinct edges.
pub fn gen_even_config(m: usize) -> Result<(ColoredPath, ColoredPath)> {
    if m < 4 || !m.is_multiple_of(2) {
        return Err(Error::BadLength {
            m,
            reason: "the even configuration needs an even m >= 4",
        });
    }
    let p: Vec<Color> = (0..m).map(|k| (k % 2) as Color).collect();
    let q: Vec<Color> = (0..m).map(|k| ((k + 1) % 2) as Color).collect();
    let edges: Vec<Color> = (0..m as Color - 1).collect();
    Ok((
        ColoredPath::new(p, edges.clone())?,
        ColoredPath::new(q, edges)?,
    ))
}

/// Vertex colors `0, 1, 0, 2, 0, 3, ...` on both paths; edge colors
/// `0, 1, 0, 1, ...` on `P` and `1, 0, 1, 0, ...` on `Q`. For `m = 3` the
/// two paths are mirror images.
pub fn gen_odd_config(m: usize) -> Result<(ColoredPath, ColoredPath)> {
    if m < 3 || m % 2 != 1 {
        return Err(Error::BadLength {
            m,
            reason: "the odd configuration needs an odd m >= 3",
        });
    }
    let v: Vec<Color> = (0..m)
        .map(|k| if k % 2 == 0 { 0 } else { (k / 2 + 1) as Color })
        .collect();
    let pe: Vec<Color> = (0..m - 1).map(|k| (k % 2) as Color).collect();
    let qe: Vec<Color> = (0..m - 1).map(|k| ((k + 1) % 2) as Color).collect();
    Ok((ColoredPath::new(v.clone(), pe)?, ColoredPath::new(v, qe)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PairClass {
    Identical,
    Reflection,
    EqualDetNontrivial,
    DifferentDet,
}

pub fn classify_pair(p: &ColoredPath, q: &ColoredPath) -> Result<PairClass> {
    if p.len() != q.len() {
        return Err(Error::LengthMismatch(p.len(), q.len()));
    }
    Ok(if p == q {
        PairClass::Identical
    } else if *q == p.reflect() {
        PairClass::Reflection
    } else if det_path_recurrence(p) == det_path_recurrence(q) {
        PairClass::EqualDetNontrivial
    } else {
        PairClass::DifferentDet
    })
}

fn all_equal(xs: impl IntoIterator<Item = Color>) -> bool {
    let mut it = xs.into_iter();
    match it.next() {
        Some(first) => it.all(|x| x == first),
        None => true,
    }
}

fn every_other(s: &[Color], start: usize) -> impl Iterator<Item = Color> + '_ {
    s.iter().copied().skip(start).step_by(2)
}

/// The even-`m` configuration, read position by position (no reflection).
pub fn is_even_configuration(p: &ColoredPath, q: &ColoredPath) -> bool {
    let (pv, qv) = (p.vertex_colors(), q.vertex_colors());
    let m = p.len();
    m == q.len()
        && m.is_multiple_of(2)
        && m >= 2
        && p.edge_colors() == q.edge_colors()
        && all_equal(every_other(pv, 0))
        && all_equal(every_other(pv, 1))
        && all_equal(every_other(qv, 0))
        && all_equal(every_other(qv, 1))
        && pv[0] == qv[1]
        && pv[1] == qv[0]
}

/// The odd-`m` configuration, read position by position (no reflection).
pub fn is_odd_configuration(p: &ColoredPath, q: &ColoredPath) -> bool {
    let (pv, qv) = (p.vertex_colors(), q.vertex_colors());
    let (pe, qe) = (p.edge_colors(), q.edge_colors());
    let m = p.len();
    if m != q.len() || m % 2 != 1 || m < 3 {
        return false;
    }
    let odd_vertices_agree = all_equal(every_other(pv, 0).chain(every_other(qv, 0)));
    let even_vertices_match = every_other(pv, 1).eq(every_other(qv, 1));
    // odd-numbered edges of P share a color with even-numbered edges of Q, and vice versa
    let x = all_equal(every_other(pe, 0).chain(every_other(qe, 1)));
    let y = all_equal(every_other(pe, 1).chain(every_other(qe, 0)));
    odd_vertices_agree && even_vertices_match && x && y
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    Even,
    Odd,
}

/// Which known family `(P, Q)` belongs to, allowing either path to be
/// reflected.
pub fn matches_known_family(p: &ColoredPath, q: &ColoredPath) -> Option<Family> {
    let (pr, qr) = (p.reflect(), q.reflect());
    let candidates = [(p, q), (p, &qr), (&pr, q), (&pr, &qr)];
    for (a, b) in candidates {
        if is_even_configuration(a, b) {
            return Some(Family::Even);
        }
        if is_odd_configuration(a, b) {
            return Some(Family::Odd);
        }
    }
    None
}

fn sorted<T: Ord + Clone>(xs: impl IntoIterator<Item = T>) -> Vec<T> {
    let mut v: Vec<T> = xs.into_iter().collect();
    v.sort();
    v
}

/// Same vertex-color and edge-color multisets.
pub fn same_color_multisets(p: &ColoredPath, q: &ColoredPath) -> bool {
    sorted(p.vertex_colors().iter().copied()) == sorted(q.vertex_colors().iter().copied())
        && sorted(p.edge_colors().iter().copied()) == sorted(q.edge_colors().iter().copied())
}

fn adjacency(p: &ColoredPath) -> BTreeMap<Color, Vec<(Color, Color)>> {
    let v = p.vertex_colors();
    let mut out: BTreeMap<Color, Vec<(Color, Color)>> = BTreeMap::new();
    for (k, &e) in p.edge_colors().iter().enumerate() {
        let (a, b) = (v[k], v[k + 1]);
        out.entry(e).or_default().push((a.min(b), a.max(b)));
    }
    for pairs in out.values_mut() {
        pairs.sort();
    }
    out
}

/// For every edge color, the same multiset of endpoint color pairs.
pub fn same_edge_adjacency(p: &ColoredPath, q: &ColoredPath) -> bool {
    adjacency(p) == adjacency(q)
}

/// Odd `m`: odd-position vertex colors agree as multisets. Even `m`:
/// odd-numbered edge colors agree as multisets.
pub fn same_parity_classes(p: &ColoredPath, q: &ColoredPath) -> bool {
    if p.len() % 2 == 1 {
        sorted(every_other(p.vertex_colors(), 0)) == sorted(every_other(q.vertex_colors(), 0))
            && sorted(every_other(p.vertex_colors(), 1))
                == sorted(every_other(q.vertex_colors(), 1))
    } else {
        sorted(every_other(p.edge_colors(), 0)) == sorted(every_other(q.edge_colors(), 0))
            && sorted(every_other(p.edge_colors(), 1)) == sorted(every_other(q.edge_colors(), 1))
    }
}

pub fn satisfies_necessary_conditions(p: &ColoredPath, q: &ColoredPath) -> bool {
    same_color_multisets(p, q) && same_edge_adjacency(p, q) && same_parity_classes(p, q)
}

/// Renames colors jointly across both paths by first occurrence.
fn joint_renaming(p: &ColoredPath, q: &ColoredPath) -> (ColoredPath, ColoredPath) {
    let m = p.len();
    let v = first_occurrence(&[p.vertex_colors(), q.vertex_colors()].concat());
    let e = first_occurrence(&[p.edge_colors(), q.edge_colors()].concat());
    let (pv, qv) = v.split_at(m);
    let (pe, qe) = e.split_at(m.saturating_sub(1));
    (
        ColoredPath::new(pv.to_vec(), pe.to_vec()).expect("same shape"),
        ColoredPath::new(qv.to_vec(), qe.to_vec()).expect("same shape"),
    )
}

/// Representative of `{P, Q}` under swapping and joint color renaming.
pub fn pair_key(p: &ColoredPath, q: &ColoredPath) -> (ColoredPath, ColoredPath) {
    joint_renaming(p, q).min(joint_renaming(q, p))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairSearch {
    pub m: usize,
    pub max_vertex_colors: usize,
    pub max_edge_colors: usize,
    pub paths_examined: u128,
    /// Equal-determinant non-trivial pairs, one per class, sorted.
    pub pairs: Vec<(ColoredPath, ColoredPath)>,
}

fn path_count(m: usize, max_v: usize, max_e: usize) -> u128 {
    let pow = |b: usize, e: usize| (b as u128).checked_pow(e as u32).unwrap_or(u128::MAX);
    pow(max_v, m).saturating_mul(pow(max_e, m.saturating_sub(1)))
}

fn decode(mut idx: u128, m: usize, max_v: usize, max_e: usize) -> ColoredPath {
    let mut vc = Vec::with_capacity(m);
    for _ in 0..m {
        vc.push((idx % max_v as u128) as Color);
        idx /= max_v as u128;
    }
    let mut ec = Vec::with_capacity(m.saturating_sub(1));
    for _ in 1..m {
        ec.push((idx % max_e as u128) as Color);
        idx /= max_e as u128;
    }
    ColoredPath::new(vc, ec).expect("well-formed")
}

/// All equal-determinant non-trivial pairs among paths on `m` vertices with
/// at most `max_v` vertex colors and `max_e` edge colors. `budget` caps the
/// number of paths enumerated.
pub fn exhaustive_pair_search(
    m: usize,
    max_v: usize,
    max_e: usize,
    budget: u128,
) -> Result<PairSearch> {
    if m == 0 || max_v == 0 || (max_e == 0 && m > 1) {
        return Err(Error::BadLength {
            m,
            reason: "need at least one vertex and non-empty palettes",
        });
    }
    let needed = path_count(m, max_v, max_e.max(1));
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let max_e = max_e.max(1);
    let mut prints: Vec<(u64, u128)> = (0..needed)
        .into_par_iter()
        .map(|idx| {
            let p = decode(idx, m, max_v, max_e);
            let mut h = DefaultHasher::new();
            det_path_recurrence(&p).hash(&mut h);
            (h.finish(), idx)
        })
        .collect();
    prints.par_sort_unstable();

    let groups: Vec<&[(u64, u128)]> = prints
        .chunk_by(|a, b| a.0 == b.0)
        .filter(|g| g.len() > 1)
        .collect();
    let found: BTreeSet<(ColoredPath, ColoredPath)> = groups
        .par_iter()
        .flat_map_iter(|group| {
            let paths: Vec<ColoredPath> = group
                .iter()
                .map(|&(_, idx)| decode(idx, m, max_v, max_e))
                .collect();
            let dets: Vec<_> = paths.iter().map(det_path_recurrence).collect();
            let mut out = Vec::new();
            for a in 0..paths.len() {
                for b in a + 1..paths.len() {
                    let (p, q) = (&paths[a], &paths[b]);
                    if dets[a] == dets[b] && *q != p.reflect() {
                        out.push(pair_key(p, q));
                    }
                }
            }
            out
        })
        .collect();
    Ok(PairSearch {
        m,
        max_vertex_colors: max_v,
        max_edge_colors: max_e,
        paths_examined: needed,
        pairs: found.into_iter().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;

    fn path(vc: &[Color], ec: &[Color]) -> ColoredPath {
        ColoredPath::new(vc.to_vec(), ec.to_vec()).unwrap()
    }

    #[test]
    fn even_configuration_m4() {
        let (p, q) = gen_even_config(4).unwrap();
        assert_eq!(p.vertex_colors(), &[0, 1, 0, 1]);
        assert_eq!(q.vertex_colors(), &[1, 0, 1, 0]);
        assert_eq!(p.edge_colors(), q.edge_colors());
        let want: Polynomial =
            "+1*v0^2*v1^2 -1*v0*v1*e0^2 -1*v0*v1*e1^2 -1*v0*v1*e2^2 +1*e0^2*e2^2"
                .parse()
                .unwrap();
        assert_eq!(det_path_recurrence(&p), want);
        assert_eq!(
            classify_pair(&p, &q).unwrap(),
            PairClass::EqualDetNontrivial
        );
        assert!(is_even_configuration(&p, &q));
        assert!(gen_even_config(5).is_err());
        assert!(gen_even_config(2).is_err());
    }

    #[test]
    fn odd_configuration_m5_and_m3() {
        let (p, q) = gen_odd_config(5).unwrap();
        assert_eq!(p.vertex_colors(), &[0, 1, 0, 2, 0]);
        assert_eq!(p.edge_colors(), &[0, 1, 0, 1]);
        assert_eq!(q.edge_colors(), &[1, 0, 1, 0]);
        // Y -> v0, O -> v1, M -> v2; b -> e0, g -> e1
        let want: Polynomial = "+1*v0^3*v1*v2 -1*v0^2*v2*e0^2 -1*v0^2*v2*e1^2 \
             -1*v0^2*v1*e0^2 -1*v0^2*v1*e1^2 +1*v0*e0^4 +1*v0*e0^2*e1^2 +1*v0*e1^4"
            .parse()
            .unwrap();
        assert_eq!(det_path_recurrence(&p), want);
        assert_eq!(det_path_recurrence(&q), want);
        assert!(is_odd_configuration(&p, &q));

        let (p3, q3) = gen_odd_config(3).unwrap();
        assert_eq!(q3, p3.reflect());
        assert_eq!(classify_pair(&p3, &q3).unwrap(), PairClass::Reflection);
        assert!(gen_odd_config(4).is_err());
    }

    #[test]
    fn classify_examples() {
        let p = path(&[0, 1, 2], &[0, 1]);
        assert_eq!(classify_pair(&p, &p).unwrap(), PairClass::Identical);
        assert_eq!(
            classify_pair(&p, &p.reflect()).unwrap(),
            PairClass::Reflection
        );
        let q = path(&[0, 2, 1], &[0, 1]);
        assert_eq!(classify_pair(&p, &q).unwrap(), PairClass::DifferentDet);
        assert!(matches!(
            classify_pair(&p, &path(&[0], &[])),
            Err(Error::LengthMismatch(3, 1))
        ));
    }

    #[test]
    fn short_paths_have_no_nontrivial_pairs() {
        for m in 1..=3 {
            let s = exhaustive_pair_search(m, 3, 3, DEFAULT_PAIR_BUDGET).unwrap();
            assert!(s.pairs.is_empty(), "m = {m}: {:?}", s.pairs);
        }
    }

    #[test]
    fn m4_search_finds_even_family() {
        let s = exhaustive_pair_search(4, 2, 3, DEFAULT_PAIR_BUDGET).unwrap();
        assert!(!s.pairs.is_empty());
        let (p, q) = gen_even_config(4).unwrap();
        assert!(s.pairs.contains(&pair_key(&p, &q)));
        for (p, q) in &s.pairs {
            assert!(satisfies_necessary_conditions(p, q));
            assert_eq!(matches_known_family(p, q), Some(Family::Even));
        }
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            exhaustive_pair_search(8, 4, 4, 1000),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn pair_key_is_swap_and_rename_invariant() {
        let (p, q) = gen_even_config(6).unwrap();
        let rename = |x: &ColoredPath| {
            ColoredPath::new(
                x.vertex_colors().iter().map(|c| 7 - c).collect(),
                x.edge_colors().iter().map(|c| c + 3).collect(),
            )
            .unwrap()
        };
        assert_eq!(pair_key(&p, &q), pair_key(&rename(&q), &rename(&p)));
    }
}
