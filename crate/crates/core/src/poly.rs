//! Exact sparse multivariate polynomials over the integers.
//!
//! Variables live in two disjoint namespaces: vertex colors (diagonal
//! concentration entries) and edge colors (off-diagonal entries). Every
//! monomial therefore carries a bidegree `(vertex degree, edge degree)`,
//! which is the main invariant used when comparing determinants.
//!
//! The canonical text form renders terms in descending lexicographic order,
//! e.g. `+2*v0^2*e1 -1*e0^3`; the zero polynomial renders as `0`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::Error;

/// Which family of concentration entries a variable stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Namespace {
    VertexColor,
    EdgeColor,
}

/// A color variable. All vertex colors order before all edge colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VariableId {
    pub namespace: Namespace,
    pub label: u32,
}

impl VariableId {
    pub const fn vertex(label: u32) -> Self {
        VariableId {
            namespace: Namespace::VertexColor,
            label,
        }
    }

    pub const fn edge(label: u32) -> Self {
        VariableId {
            namespace: Namespace::EdgeColor,
            label,
        }
    }

    pub fn is_vertex(&self) -> bool {
        self.namespace == Namespace::VertexColor
    }
}

impl fmt::Display for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.namespace {
            Namespace::VertexColor => write!(f, "v{}", self.label),
            Namespace::EdgeColor => write!(f, "e{}", self.label),
        }
    }
}

/// A power product of variables, stored sorted by variable with no zero
/// exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: Vec<(VariableId, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: VariableId) -> Self {
        Monomial {
            factors: vec![(v, 1)],
        }
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` pairs,
    /// merging repeats and dropping zero exponents.
    pub fn from_factors<I: IntoIterator<Item = (VariableId, u32)>>(it: I) -> Self {
        let mut map: BTreeMap<VariableId, u32> = BTreeMap::new();
        for (v, e) in it {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial {
            factors: map.into_iter().filter(|&(_, e)| e > 0).collect(),
        }
    }

    pub fn factors(&self) -> &[(VariableId, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent(&self, v: VariableId) -> u32 {
        self.factors
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn vertex_degree(&self) -> u32 {
        self.factors
            .iter()
            .filter(|(v, _)| v.is_vertex())
            .map(|&(_, e)| e)
            .sum()
    }

    pub fn edge_degree(&self) -> u32 {
        self.factors
            .iter()
            .filter(|(v, _)| !v.is_vertex())
            .map(|&(_, e)| e)
            .sum()
    }

    pub fn bidegree(&self) -> (u32, u32) {
        (self.vertex_degree(), self.edge_degree())
    }

    pub fn total_degree(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.factors, &other.factors);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { factors: out }
    }
}

/// Lexicographic order on exponent vectors, variables taken in
/// `VariableId` order: the first variable where the exponents differ
/// decides, and the larger exponent wins.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.factors, &other.factors);
        let mut i = 0;
        loop {
            match (a.get(i), b.get(i)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va != vb {
                        // the side holding the smaller variable has a
                        // positive exponent where the other has zero
                        return if va < vb {
                            Ordering::Greater
                        } else {
                            Ordering::Less
                        };
                    }
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                }
            }
            i += 1;
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial with arbitrary-precision integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

/// Operation selector for [`poly_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(a: &Polynomial, b: &Polynomial, op: ArithOp) -> Polynomial {
    match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
    }
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Polynomial::term(c, Monomial::one())
    }

    pub fn var(v: VariableId) -> Self {
        Polynomial::term(1, Monomial::var(v))
    }

    pub fn vertex(label: u32) -> Self {
        Polynomial::var(VariableId::vertex(label))
    }

    pub fn edge(label: u32) -> Self {
        Polynomial::var(VariableId::edge(label))
    }

    pub fn term<T: Into<BigInt>>(c: T, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Adds `c * m` in place.
    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add_assign_ref(&mut self, other: &Polynomial) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn sub_assign_ref(&mut self, other: &Polynomial) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    /// Splits into bihomogeneous parts keyed by `(vertex degree, edge degree)`.
    pub fn bidegree_partition(&self) -> BTreeMap<(u32, u32), Polynomial> {
        let mut parts: BTreeMap<(u32, u32), Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            parts
                .entry(m.bidegree())
                .or_default()
                .terms
                .insert(m.clone(), c.clone());
        }
        parts
    }

    /// Number of terms with the given bidegree.
    pub fn count_bidegree(&self, bidegree: (u32, u32)) -> usize {
        self.terms
            .keys()
            .filter(|m| m.bidegree() == bidegree)
            .count()
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.sub_assign_ref(rhs);
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(mut self, rhs: Polynomial) -> Polynomial {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
        self
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(mut self) -> Polynomial {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -self.clone()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            let sign = if c.is_negative() { '-' } else { '+' };
            write!(f, "{sign}{}", c.abs())?;
            if !m.is_one() {
                write!(f, "*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "0" {
            return Ok(Polynomial::zero());
        }
        let bad = |col: usize, msg: &str| Error::Parse {
            line: 1,
            column: col + 1,
            message: msg.to_string(),
        };
        let mut out = Polynomial::zero();
        let mut offset = 0;
        for token in s.split(' ') {
            let col = offset;
            offset += token.len() + 1;
            if token.is_empty() {
                continue;
            }
            let (negative, body) = match token.as_bytes()[0] {
                b'+' => (false, &token[1..]),
                b'-' => (true, &token[1..]),
                _ => return Err(bad(col, "term must start with '+' or '-'")),
            };
            let mut pieces = body.split('*');
            let coeff: BigInt = pieces
                .next()
                .unwrap_or("")
                .parse()
                .map_err(|_| bad(col, "bad coefficient"))?;
            let mut factors = Vec::new();
            for piece in pieces {
                let (name, exp) = match piece.split_once('^') {
                    Some((n, e)) => (n, e.parse::<u32>().map_err(|_| bad(col, "bad exponent"))?),
                    None => (piece, 1),
                };
                let (kind, label) = name.split_at(name.len().min(1));
                let label: u32 = label.parse().map_err(|_| bad(col, "bad variable"))?;
                let v = match kind {
                    "v" => VariableId::vertex(label),
                    "e" => VariableId::edge(label),
                    _ => return Err(bad(col, "variable must be vN or eN")),
                };
                factors.push((v, exp));
            }
            let coeff = if negative { -coeff } else { coeff };
            out.add_term(Monomial::from_factors(factors), coeff);
        }
        Ok(out)
    }
}

/// Exact coefficient matrix of a list of polynomials: one row per input,
/// one column per monomial of the union, in rendering (descending) order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientMatrix {
    pub rows: Vec<Vec<BigInt>>,
    pub basis: Vec<Monomial>,
}

impl CoefficientMatrix {
    /// Rebuilds row `i` as a polynomial.
    pub fn row_polynomial(&self, i: usize) -> Polynomial {
        let mut p = Polynomial::zero();
        for (m, c) in self.basis.iter().zip(&self.rows[i]) {
            p.add_term(m.clone(), c.clone());
        }
        p
    }
}

pub fn coefficient_matrix(ps: &[Polynomial]) -> CoefficientMatrix {
    let mut index: BTreeMap<&Monomial, usize> = BTreeMap::new();
    for p in ps {
        for m in p.monomials() {
            index.entry(m).or_insert(0);
        }
    }
    for (k, slot) in index.values_mut().rev().enumerate() {
        *slot = k;
    }
    let basis: Vec<Monomial> = index.keys().rev().map(|m| (*m).clone()).collect();
    let rows = ps
        .iter()
        .map(|p| {
            let mut row = vec![BigInt::zero(); basis.len()];
            for (m, c) in p.terms() {
                row[index[m]] = c.clone();
            }
            row
        })
        .collect();
    CoefficientMatrix { rows, basis }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(l: u32) -> Polynomial {
        Polynomial::vertex(l)
    }
    fn e(l: u32) -> Polynomial {
        Polynomial::edge(l)
    }

    #[test]
    fn additive_identity() {
        assert_eq!(poly_arith(&v(0), &Polynomial::zero(), ArithOp::Add), v(0));
    }

    #[test]
    fn self_cancellation() {
        let s = &v(0) + &v(1);
        let d = poly_arith(&s, &s, ArithOp::Sub);
        assert!(d.is_zero());
        assert_eq!(d.to_string(), "0");
    }

    #[test]
    fn difference_of_squares() {
        let a = v(0);
        let b = v(1);
        let p = poly_arith(&(&a - &b), &(&a + &b), ArithOp::Mul);
        assert_eq!(p, &a.pow(2) - &b.pow(2));
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn rendering_matches_documented_form() {
        let p = &(&Polynomial::constant(2) * &(&v(0).pow(2) * &e(1))) - &e(0).pow(3);
        assert_eq!(p.to_string(), "+2*v0^2*e1 -1*e0^3");
        let q: Polynomial = "+2*v0^2*e1 -1*e0^3".parse().unwrap();
        assert_eq!(p, q);
        assert_eq!(Polynomial::one().to_string(), "+1");
    }

    #[test]
    fn vertex_variables_order_first() {
        assert!(VariableId::vertex(7) < VariableId::edge(0));
        assert!(VariableId::edge(0) < VariableId::edge(1));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("v0".parse::<Polynomial>().is_err());
        assert!("+1*x3".parse::<Polynomial>().is_err());
        assert!("+a*v1".parse::<Polynomial>().is_err());
    }

    #[test]
    fn bidegree_two_parts() {
        // k11*k22 - k12^2
        let p = &(&v(0) * &v(1)) - &e(0).pow(2);
        let parts = p.bidegree_partition();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[&(2, 0)], &v(0) * &v(1));
        assert_eq!(parts[&(0, 2)], -e(0).pow(2));
        assert!(Polynomial::zero().bidegree_partition().is_empty());
    }

    #[test]
    fn coefficient_matrix_small() {
        let x = v(0);
        let y = v(1);
        let cm = coefficient_matrix(&[&x + &y, &x - &y]);
        assert_eq!(
            cm.basis,
            vec![
                Monomial::var(VariableId::vertex(0)),
                Monomial::var(VariableId::vertex(1))
            ]
        );
        assert_eq!(
            cm.rows,
            vec![
                vec![BigInt::from(1), BigInt::from(1)],
                vec![BigInt::from(1), BigInt::from(-1)]
            ]
        );
        assert_eq!(cm.row_polynomial(1), &x - &y);
        let z = coefficient_matrix(&[Polynomial::zero()]);
        assert_eq!(z.rows, vec![Vec::<BigInt>::new()]);
        assert!(z.basis.is_empty());
    }

    #[test]
    fn large_coefficients_do_not_overflow() {
        let mut p = Polynomial::constant(i64::MAX);
        p = &p * &p;
        p = &p * &p;
        let expected = BigInt::from(i64::MAX).pow(4);
        assert_eq!(p.coefficient(&Monomial::one()), expected);
    }
}
