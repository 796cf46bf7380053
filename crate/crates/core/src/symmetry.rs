//! Coloring-preserving dihedral symmetries of a colored cycle and the
//! linear binomials they induce.
//!
//! A binomial `s_ij - s_xy` is *explained* when a single symmetry carries
//! the index set `{i, j}` onto `{x, y}`. Because the symmetries form a
//! group, this coincides with membership in the span of all induced
//! binomials (both equal "same orbit of index pairs").

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::ColoredCycle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DihedralKind {
    Rotation,
    Reflection,
}

/// An element of the dihedral group acting on vertices `1..=n`.
///
/// With 0-indexed positions, rotation `r` sends `i` to `i + r` and
/// reflection `r` sends `i` to `r - i` (mod `n`). In 1-indexed terms the
/// reflection is `i -> (r + 2 - i) mod n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DihedralElement {
    pub kind: DihedralKind,
    pub r: usize,
    pub n: usize,
}

impl DihedralElement {
    pub fn identity(n: usize) -> Self {
        DihedralElement::rotation(n, 0)
    }

    pub fn rotation(n: usize, r: usize) -> Self {
        DihedralElement {
            kind: DihedralKind::Rotation,
            r: r % n,
            n,
        }
    }

    pub fn reflection(n: usize, r: usize) -> Self {
        DihedralElement {
            kind: DihedralKind::Reflection,
            r: r % n,
            n,
        }
    }

    /// All `2n` elements: rotations first, then reflections.
    pub fn all(n: usize) -> impl Iterator<Item = DihedralElement> {
        (0..n)
            .map(move |r| DihedralElement::rotation(n, r))
            .chain((0..n).map(move |r| DihedralElement::reflection(n, r)))
    }

    pub fn is_identity(&self) -> bool {
        self.kind == DihedralKind::Rotation && self.r == 0
    }

    /// Image of 1-indexed vertex `v`.
    pub fn apply(&self, v: usize) -> usize {
        let n = self.n;
        let i = v - 1;
        let img = match self.kind {
            DihedralKind::Rotation => (i + self.r) % n,
            DihedralKind::Reflection => (self.r + n - i) % n,
        };
        img + 1
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &DihedralElement) -> DihedralElement {
        assert_eq!(self.n, other.n, "elements act on different cycles");
        let n = self.n;
        let (a, b) = (self.r, other.r);
        match (self.kind, other.kind) {
            (DihedralKind::Rotation, DihedralKind::Rotation) => DihedralElement::rotation(n, a + b),
            (DihedralKind::Rotation, DihedralKind::Reflection) => {
                DihedralElement::reflection(n, a + b)
            }
            (DihedralKind::Reflection, DihedralKind::Rotation) => {
                DihedralElement::reflection(n, a + n - b)
            }
            (DihedralKind::Reflection, DihedralKind::Reflection) => {
                DihedralElement::rotation(n, a + n - b)
            }
        }
    }

    pub fn inverse(&self) -> DihedralElement {
        match self.kind {
            DihedralKind::Rotation => DihedralElement::rotation(self.n, self.n - self.r),
            DihedralKind::Reflection => *self,
        }
    }

    /// Image of an unordered index pair, normalized to `(min, max)`.
    pub fn apply_pair(&self, (i, j): (usize, usize)) -> (usize, usize) {
        let (a, b) = (self.apply(i), self.apply(j));
        (a.min(b), a.max(b))
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            DihedralKind::Rotation => write!(f, "rotation({})", self.r),
            DihedralKind::Reflection => write!(f, "reflection({})", self.r),
        }
    }
}

impl ColoredCycle {
    /// The cycle with vertex `v` moved to `g(v)`, carrying colors along.
    pub fn relabel(&self, g: &DihedralElement) -> ColoredCycle {
        let n = self.n();
        assert_eq!(g.n, n, "element acts on a different cycle");
        let mut vc = vec![0; n];
        let mut ec = vec![0; n];
        for v in 1..=n {
            vc[g.apply(v) - 1] = self.vertex_color(v);
            let (a, b) = (g.apply(v), g.apply(v % n + 1));
            let k = self.edge_index(a, b).expect("dihedral maps edges to edges");
            ec[k - 1] = self.edge_color(v);
        }
        ColoredCycle::new(vc, ec).expect("same shape")
    }

    pub fn is_symmetry(&self, g: &DihedralElement) -> bool {
        g.n == self.n() && self.relabel(g) == *self
    }
}

/// Every dihedral element preserving all vertex and edge colors.
pub fn symmetries(c: &ColoredCycle) -> Vec<DihedralElement> {
    DihedralElement::all(c.n())
        .filter(|g| c.is_symmetry(g))
        .collect()
}

/// A small generating set of `group`, chosen greedily in enumeration order.
pub fn generators(group: &[DihedralElement]) -> Vec<DihedralElement> {
    let Some(first) = group.first() else {
        return Vec::new();
    };
    let mut span: BTreeSet<DihedralElement> = BTreeSet::from([DihedralElement::identity(first.n)]);
    let mut gens = Vec::new();
    for g in group {
        if span.contains(g) {
            continue;
        }
        gens.push(*g);
        loop {
            let mut grew = false;
            let current: Vec<_> = span.iter().copied().collect();
            for a in &current {
                for b in &gens {
                    if span.insert(a.compose(b)) {
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
    }
    gens
}

/// `s_{first} - s_{second}` with both pairs normalized and `first < second`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LinearBinomial {
    pub first: (usize, usize),
    pub second: (usize, usize),
}

impl LinearBinomial {
    /// `None` when both pairs denote the same index set.
    pub fn new(a: (usize, usize), b: (usize, usize)) -> Option<Self> {
        let a = (a.0.min(a.1), a.0.max(a.1));
        let b = (b.0.min(b.1), b.0.max(b.1));
        match a.cmp(&b) {
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Less => Some(LinearBinomial {
                first: a,
                second: b,
            }),
            std::cmp::Ordering::Greater => Some(LinearBinomial {
                first: b,
                second: a,
            }),
        }
    }
}

impl fmt::Display for LinearBinomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "s({},{}) - s({},{})",
            self.first.0, self.first.1, self.second.0, self.second.1
        )
    }
}

/// All index pairs `(i, j)` with `1 <= i <= j <= n`, row by row.
pub fn index_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|i| (i..=n).map(move |j| (i, j))).collect()
}

/// Binomials `s_ij - s_{g(i)g(j)}` for every pair moved by `g`.
pub fn induced_binomials(
    c: &ColoredCycle,
    g: &DihedralElement,
) -> Result<BTreeSet<LinearBinomial>> {
    if !c.is_symmetry(g) {
        return Err(Error::NotASymmetry);
    }
    Ok(index_pairs(c.n())
        .into_iter()
        .filter_map(|p| LinearBinomial::new(p, g.apply_pair(p)))
        .collect())
}

/// Whether one element of `group` carries `b.first` onto `b.second`.
pub fn explains_with(group: &[DihedralElement], b: &LinearBinomial) -> bool {
    group.iter().any(|g| g.apply_pair(b.first) == b.second)
}

pub fn explains(c: &ColoredCycle, b: &LinearBinomial) -> bool {
    explains_with(&symmetries(c), b)
}

/// Whether `b` is a combination of binomials induced by `group`, i.e. both
/// pairs are connected through induced binomials.
pub fn in_induced_span(group: &[DihedralElement], n: usize, b: &LinearBinomial) -> bool {
    let pairs = index_pairs(n);
    let idx = |p: (usize, usize)| pairs.iter().position(|&q| q == p).expect("valid pair");
    let mut parent: Vec<usize> = (0..pairs.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for g in group {
        for &p in &pairs {
            let (a, b) = (
                find(&mut parent, idx(p)),
                find(&mut parent, idx(g.apply_pair(p))),
            );
            parent[a] = b;
        }
    }
    find(&mut parent, idx(b.first)) == find(&mut parent, idx(b.second))
}
