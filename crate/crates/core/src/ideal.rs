//! Linear part of the vanishing ideal of a colored cycle.
//!
//! A linear form `sum a_ij s_ij` vanishes on the model iff
//! `sum a_ij N_ij = 0`, so the linear part is the integer kernel of the
//! numerators' coefficient matrix. Binomials are the kernel vectors
//! `e_p - e_q` with `N_p = N_q`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::covariance::{sigma_numerator, CovarianceNumerator};
use crate::error::{Error, Result};
use crate::model::ColoredCycle;
use crate::poly::coefficient_matrix;
use crate::symmetry::{
    explains_with, generators, in_induced_span, index_pairs, symmetries, DihedralElement,
    LinearBinomial,
};

pub const NUMERATOR_BOUND: usize = 12;
pub const LINEAR_PART_BOUND: usize = 10;

/// Numerators for every `(i, j)` with `i <= j`, in [`index_pairs`] order.
pub fn numerators(c: &ColoredCycle) -> Result<Vec<CovarianceNumerator>> {
    if c.n() > NUMERATOR_BOUND {
        return Err(Error::TooLarge {
            n: c.n(),
            bound: NUMERATOR_BOUND,
        });
    }
    index_pairs(c.n())
        .into_par_iter()
        .map(|(i, j)| sigma_numerator(c, i, j))
        .collect()
}

/// Groups of index pairs sharing one numerator, each sorted, groups ordered
/// by their first pair. Singletons are dropped.
pub fn equal_numerator_classes(nums: &[CovarianceNumerator]) -> Vec<Vec<(usize, usize)>> {
    let mut buckets: HashMap<&crate::poly::Polynomial, Vec<(usize, usize)>> = HashMap::new();
    for s in nums {
        buckets.entry(&s.numerator).or_default().push((s.i, s.j));
    }
    let mut classes: Vec<Vec<(usize, usize)>> = buckets
        .into_values()
        .filter(|v| v.len() > 1)
        .map(|mut v| {
            v.sort();
            v
        })
        .collect();
    classes.sort();
    classes
}

fn binomials_from_classes(classes: &[Vec<(usize, usize)>]) -> BTreeSet<LinearBinomial> {
    let mut out = BTreeSet::new();
    for class in classes {
        for (a, p) in class.iter().enumerate() {
            for q in &class[a + 1..] {
                out.insert(LinearBinomial::new(*p, *q).expect("distinct pairs"));
            }
        }
    }
    out
}

/// Every binomial `s_ij - s_xy` in the ideal.
pub fn linear_binomials(c: &ColoredCycle) -> Result<BTreeSet<LinearBinomial>> {
    Ok(binomials_from_classes(&equal_numerator_classes(
        &numerators(c)?,
    )))
}

/// A linear form over the `s_ij`, `i <= j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    pub terms: Vec<((usize, usize), BigInt)>,
}

impl LinearForm {
    fn from_vector(pairs: &[(usize, usize)], v: &[BigInt]) -> Self {
        LinearForm {
            terms: pairs
                .iter()
                .zip(v)
                .filter(|(_, c)| !c.is_zero())
                .map(|(p, c)| (*p, c.clone()))
                .collect(),
        }
    }

    pub fn as_binomial(&self) -> Option<LinearBinomial> {
        match self.terms.as_slice() {
            [(p, a), (q, b)] if a.is_one() && (-b).is_one() || (-a).is_one() && b.is_one() => {
                LinearBinomial::new(*p, *q)
            }
            _ => None,
        }
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((i, j), c)| {
                let sign = if c.is_negative() { "-" } else { "+" };
                format!("{sign}{}*s({i},{j})", c.abs())
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Row echelon form over the integers, kept primitive (gcd 1) per row.
#[derive(Debug, Clone, Default)]
struct Echelon {
    rows: Vec<(usize, Vec<BigInt>)>,
}

fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in v.iter_mut() {
        *x /= &g;
    }
}

fn eliminate(target: &mut [BigInt], row: &[BigInt], col: usize) {
    if target[col].is_zero() {
        return;
    }
    let a = row[col].clone();
    let b = target[col].clone();
    for (t, r) in target.iter_mut().zip(row) {
        *t = &*t * &a - r * &b;
    }
    make_primitive(target);
}

impl Echelon {
    fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; adds it and returns true if it is new.
    fn insert(&mut self, mut v: Vec<BigInt>) -> bool {
        for (pc, row) in &self.rows {
            eliminate(&mut v, row, *pc);
        }
        match v.iter().position(|x| !x.is_zero()) {
            Some(pc) => {
                make_primitive(&mut v);
                self.rows.push((pc, v));
                true
            }
            None => false,
        }
    }

    /// Gauss-Jordan: every pivot column becomes zero outside its own row.
    fn reduce(&mut self) {
        for k in 0..self.rows.len() {
            let (pc, row) = self.rows[k].clone();
            for (s, (_, other)) in self.rows.iter_mut().enumerate() {
                if s != k {
                    eliminate(other, &row, pc);
                }
            }
        }
    }

    /// Integer basis of `{x : row . x = 0 for all rows}` in `width` columns.
    fn kernel(mut self, width: usize) -> Vec<Vec<BigInt>> {
        self.reduce();
        let pivots: BTreeSet<usize> = self.rows.iter().map(|r| r.0).collect();
        let lcm = self
            .rows
            .iter()
            .fold(BigInt::one(), |l, (pc, row)| l.lcm(&row[*pc]));
        (0..width)
            .filter(|f| !pivots.contains(f))
            .map(|f| {
                let mut x = vec![BigInt::zero(); width];
                x[f] = lcm.clone();
                for (pc, row) in &self.rows {
                    x[*pc] = -(&row[f] * (&lcm / &row[*pc]));
                }
                make_primitive(&mut x);
                x
            })
            .collect()
    }
}

/// Basis of the linear part of the ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearPart {
    pub pairs: Vec<(usize, usize)>,
    /// Rank of the span of the numerators.
    pub numerator_rank: usize,
    /// `pairs.len() - numerator_rank`.
    pub dimension: usize,
    /// Binomials `s_p - s_q` chaining each equal-numerator class.
    pub binomial_basis: Vec<LinearBinomial>,
    /// Kernel vectors outside the span of all binomials.
    pub extra_forms: Vec<LinearForm>,
}

impl LinearPart {
    pub fn binomials_span(&self) -> bool {
        self.extra_forms.is_empty()
    }
}

pub fn linear_part(c: &ColoredCycle) -> Result<LinearPart> {
    if c.n() > LINEAR_PART_BOUND {
        return Err(Error::TooLarge {
            n: c.n(),
            bound: LINEAR_PART_BOUND,
        });
    }
    Ok(linear_part_from(&numerators(c)?))
}

fn unit_difference(width: usize, a: usize, b: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); width];
    v[a] = BigInt::one();
    v[b] = -BigInt::one();
    v
}

pub fn linear_part_from(nums: &[CovarianceNumerator]) -> LinearPart {
    let pairs: Vec<(usize, usize)> = nums.iter().map(|s| (s.i, s.j)).collect();
    let width = pairs.len();
    let polys: Vec<_> = nums.iter().map(|s| s.numerator.clone()).collect();
    let m = coefficient_matrix(&polys);

    // Columns of the coefficient matrix are the constraints on (a_ij).
    let mut seen = BTreeSet::new();
    let mut ech = Echelon::default();
    for col in 0..m.basis.len() {
        if ech.rank() == width {
            break;
        }
        let v: Vec<BigInt> = m.rows.iter().map(|r| r[col].clone()).collect();
        if seen.insert(v.clone()) {
            ech.insert(v);
        }
    }
    let numerator_rank = ech.rank();
    let kernel = ech.kernel(width);

    let classes = equal_numerator_classes(nums);
    let pos = |p: &(usize, usize)| pairs.iter().position(|q| q == p).expect("known pair");
    let mut span = Echelon::default();
    let mut binomial_basis = Vec::new();
    for class in &classes {
        for q in &class[1..] {
            binomial_basis.push(LinearBinomial::new(class[0], *q).expect("distinct"));
            span.insert(unit_difference(width, pos(&class[0]), pos(q)));
        }
    }
    let mut extra_forms = Vec::new();
    for v in kernel {
        if span.insert(v.clone()) {
            extra_forms.push(LinearForm::from_vector(&pairs, &v));
        }
    }
    LinearPart {
        pairs,
        numerator_rank,
        dimension: width - numerator_rank,
        binomial_basis,
        extra_forms,
    }
}

/// One detected binomial with the shared numerator rendering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinomialEntry {
    pub first: (usize, usize),
    pub second: (usize, usize),
    pub numerator: String,
    pub explained: bool,
}

impl BinomialEntry {
    pub fn binomial(&self) -> LinearBinomial {
        LinearBinomial::new(self.first, self.second).expect("stored binomials are proper")
    }
}

/// Verdict for one colored cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub n: usize,
    pub vertex_colors: Vec<u32>,
    pub edge_colors: Vec<u32>,
    pub canonical: String,
    pub binomials: Vec<BinomialEntry>,
    pub symmetry_group_order: usize,
    pub generators: Vec<DihedralElement>,
    /// Binomials not carried over by any single symmetry.
    pub unexplained: Vec<LinearBinomial>,
    /// Binomials outside the span of symmetry-induced binomials.
    pub unexplained_by_span: Vec<LinearBinomial>,
    pub linear_part_dimension: Option<usize>,
    pub extra_linear_forms: Vec<String>,
    /// Set when `n` exceeds the linear-part bound and the kernel was skipped.
    pub linear_part_skipped: bool,
}

impl ConjectureReport {
    pub fn holds(&self) -> bool {
        self.unexplained.is_empty()
    }

    pub fn binomial_set(&self) -> BTreeSet<LinearBinomial> {
        self.binomials.iter().map(BinomialEntry::binomial).collect()
    }

    pub fn contains(&self, b: &LinearBinomial) -> bool {
        self.binomials.iter().any(|e| e.binomial() == *b)
    }
}

pub fn conjecture_status(c: &ColoredCycle) -> Result<ConjectureReport> {
    let nums = numerators(c)?;
    let group = symmetries(c);
    report_from(c, &nums, &group)
}

pub(crate) fn report_from(
    c: &ColoredCycle,
    nums: &[CovarianceNumerator],
    group: &[DihedralElement],
) -> Result<ConjectureReport> {
    let n = c.n();
    let rendering: HashMap<(usize, usize), String> = nums
        .iter()
        .map(|s| ((s.i, s.j), s.numerator.to_string()))
        .collect();
    let binomials = binomials_from_classes(&equal_numerator_classes(nums));
    let entries: Vec<BinomialEntry> = binomials
        .iter()
        .map(|b| BinomialEntry {
            first: b.first,
            second: b.second,
            numerator: rendering[&b.first].clone(),
            explained: explains_with(group, b),
        })
        .collect();
    let unexplained = entries
        .iter()
        .filter(|e| !e.explained)
        .map(BinomialEntry::binomial)
        .collect();
    let unexplained_by_span = binomials
        .iter()
        .filter(|b| !in_induced_span(group, n, b))
        .copied()
        .collect();
    let (linear_part_dimension, extra_linear_forms, linear_part_skipped) = if n <= LINEAR_PART_BOUND
    {
        let lp = linear_part_from(nums);
        (
            Some(lp.dimension),
            lp.extra_forms.iter().map(|f| f.to_string()).collect(),
            false,
        )
    } else {
        (None, Vec::new(), true)
    };
    Ok(ConjectureReport {
        n,
        vertex_colors: c.vertex_colors().to_vec(),
        edge_colors: c.edge_colors().to_vec(),
        canonical: c.canonical_form().to_string(),
        binomials: entries,
        symmetry_group_order: group.len(),
        generators: generators(group),
        unexplained,
        unexplained_by_span,
        linear_part_dimension,
        extra_linear_forms,
        linear_part_skipped,
    })
}

/// Binomials not explained by a single symmetry, without building a report.
pub fn quick_unexplained(c: &ColoredCycle) -> Result<Vec<LinearBinomial>> {
    let nums = numerators(c)?;
    let group = symmetries(c);
    Ok(binomials_from_classes(&equal_numerator_classes(&nums))
        .into_iter()
        .filter(|b| !explains_with(&group, b))
        .collect())
}
