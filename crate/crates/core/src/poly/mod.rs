//! Sparse multivariate polynomials over the rationals with a weighted grading.
//!
//! Every [`WeightedPolynomial`] carries the weight vector of its ambient ring
//! and is homogeneous of a single weighted degree. The zero polynomial is
//! homogeneous of every degree.

mod parse;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use parse::{parse_poly, parse_poly_inferred};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Exponent vector of a monomial in `x0, ..., xn`.
///
/// Monomials are ordered graded-lexicographically: first by total
/// (unweighted) degree, then lexicographically with `x0` most significant,
/// so that `x0^2 < x0*x1 < x0*x2 < x1^2 < ...`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n_vars: usize) -> Self {
        Monomial(vec![0; n_vars])
    }

    pub fn var(n_vars: usize, j: usize) -> Self {
        let mut e = vec![0; n_vars];
        e[j] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn n_vars(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &q)| e as u64 * q as u64)
            .sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Variables with a nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(j, _)| j)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (j, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{j}")?;
            } else {
                write!(f, "x{j}^{e}")?;
            }
        }
        Ok(())
    }
}

/// All monomials of weighted degree exactly `t`, in monomial order.
pub fn monomials_of_degree(t: u64, weights: &[u32]) -> Vec<Monomial> {
    fn rec(j: usize, left: u64, weights: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if j == weights.len() {
            if left == 0 {
                out.push(Monomial(cur.clone()));
            }
            return;
        }
        let q = weights[j] as u64;
        let max = left / q;
        for e in (0..=max).rev() {
            cur[j] = e as u32;
            rec(j + 1, left - e * q, weights, cur, out);
        }
        cur[j] = 0;
    }
    let mut out = Vec::new();
    let mut cur = vec![0; weights.len()];
    rec(0, t, weights, &mut cur, &mut out);
    out.sort();
    out
}

pub(crate) fn check_weights(weights: &[u32]) -> Result<()> {
    if weights.contains(&0) {
        return Err(Error::InvalidWeights {
            weights: weights.to_vec(),
            reason: "weights must be positive".into(),
        });
    }
    Ok(())
}

/// A weighted-homogeneous polynomial with exact rational coefficients.
#[derive(Clone, Debug)]
pub struct WeightedPolynomial {
    weights: Vec<u32>,
    degree: u64,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for WeightedPolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.weights == other.weights
            && self.terms == other.terms
            && (self.terms.is_empty() || self.degree == other.degree)
    }
}

impl Eq for WeightedPolynomial {}

impl WeightedPolynomial {
    pub fn zero(weights: &[u32], degree: u64) -> Self {
        WeightedPolynomial {
            weights: weights.to_vec(),
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(weights: &[u32], c: Rational) -> Self {
        Self::monomial(weights, Monomial::one(weights.len()), c)
    }

    pub fn monomial(weights: &[u32], m: Monomial, c: Rational) -> Self {
        let degree = m.weighted_degree(weights);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        WeightedPolynomial {
            weights: weights.to_vec(),
            degree,
            terms,
        }
    }

    pub fn variable(weights: &[u32], j: usize) -> Self {
        Self::monomial(weights, Monomial::var(weights.len(), j), Rational::one())
    }

    /// Builds a polynomial from (monomial, coefficient) pairs, merging
    /// repeated monomials and checking homogeneity of weighted degree `degree`.
    pub fn from_terms<I>(weights: &[u32], degree: u64, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        check_weights(weights)?;
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            if m.n_vars() != weights.len() {
                return Err(Error::InvalidArgument(format!(
                    "monomial {m} has {} variables, ring has {}",
                    m.n_vars(),
                    weights.len()
                )));
            }
            *map.entry(m).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        for m in map.keys() {
            let found = m.weighted_degree(weights);
            if found != degree {
                return Err(Error::Inhomogeneous {
                    monomial: m.to_string(),
                    found,
                    expected: degree,
                });
            }
        }
        Ok(WeightedPolynomial {
            weights: weights.to_vec(),
            degree,
            terms: map,
        })
    }

    /// Builds a polynomial from integer-coefficient terms given as exponent vectors.
    pub fn from_int_terms(weights: &[u32], degree: u64, terms: &[(i64, &[u32])]) -> Result<Self> {
        Self::from_terms(
            weights,
            degree,
            terms
                .iter()
                .map(|(c, e)| (Monomial::new(e.to_vec()), rat(*c))),
        )
    }

    /// `sum_j coeffs[j] * x_j^(degree / q_j)`; every weight must divide `degree`.
    pub fn fermat(weights: &[u32], degree: u64, coeffs: &[i64]) -> Result<Self> {
        let n = weights.len();
        let mut terms = Vec::with_capacity(n);
        for (j, &q) in weights.iter().enumerate() {
            if !degree.is_multiple_of(q as u64) {
                return Err(Error::InvalidArgument(format!(
                    "weight {q} does not divide degree {degree}"
                )));
            }
            let mut e = vec![0; n];
            e[j] = (degree / q as u64) as u32;
            terms.push((Monomial::new(e), rat(coeffs.get(j).copied().unwrap_or(1))));
        }
        Self::from_terms(weights, degree, terms)
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn n_vars(&self) -> usize {
        self.weights.len()
    }

    /// Weighted degree. Meaningless for the zero polynomial.
    pub fn degree(&self) -> u64 {
        self.degree
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Whether every stored monomial has weighted degree `d`.
    pub fn is_homogeneous_of(&self, d: u64) -> bool {
        self.terms.keys().all(|m| m.weighted_degree(&self.weights) == d)
    }

    /// Variables that occur in at least one term.
    pub fn occurring_variables(&self) -> Vec<usize> {
        let mut seen = vec![false; self.n_vars()];
        for m in self.terms.keys() {
            for j in m.support() {
                seen[j] = true;
            }
        }
        (0..self.n_vars()).filter(|&j| seen[j]).collect()
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.weights != other.weights {
            return Err(Error::WeightMismatch {
                left: self.weights.clone(),
                right: other.weights.clone(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let e = terms.entry(m.clone()).or_insert_with(Rational::zero);
            *e += c;
            if e.is_zero() {
                terms.remove(m);
            }
        }
        Ok(WeightedPolynomial {
            weights: self.weights.clone(),
            degree: self.degree,
            terms,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let terms = if c.is_zero() {
            BTreeMap::new()
        } else {
            self.terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect()
        };
        WeightedPolynomial {
            weights: self.weights.clone(),
            degree: self.degree,
            terms,
        }
    }

    /// Exact product; the weighted degree is additive.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                *terms.entry(m1.mul(m2)).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(WeightedPolynomial {
            weights: self.weights.clone(),
            degree: self.degree + other.degree,
            terms,
        })
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        WeightedPolynomial {
            weights: self.weights.clone(),
            degree: self.degree + m.weighted_degree(&self.weights),
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(&self.weights, Rational::one());
        for _ in 0..e {
            acc = acc.multiply(self).expect("same ring");
        }
        acc
    }

    /// Formal partial derivative with respect to `x_j`; weighted degree drops by `q_j`.
    pub fn partial(&self, j: usize) -> Self {
        assert!(j < self.n_vars(), "variable index {j} out of range");
        let q = self.weights[j] as u64;
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[j];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[j] -= 1;
            terms.insert(Monomial(exps), c * rat(e as i64));
        }
        WeightedPolynomial {
            weights: self.weights.clone(),
            degree: self.degree.saturating_sub(q),
            terms,
        }
    }

    /// All partial derivatives `[d_0 p, ..., d_n p]`.
    pub fn gradient(&self) -> Vec<Self> {
        (0..self.n_vars()).map(|j| self.partial(j)).collect()
    }

    /// Sets every variable outside `keep` to zero and re-indexes the survivors
    /// as `x0, x1, ...` in the order given.
    pub fn restrict_to(&self, keep: &[usize]) -> Self {
        let weights: Vec<u32> = keep.iter().map(|&j| self.weights[j]).collect();
        let mut terms = BTreeMap::new();
        'terms: for (m, c) in &self.terms {
            for (j, &e) in m.0.iter().enumerate() {
                if e > 0 && !keep.contains(&j) {
                    continue 'terms;
                }
            }
            let exps = keep.iter().map(|&j| m.0[j]).collect();
            terms.insert(Monomial(exps), c.clone());
        }
        WeightedPolynomial {
            weights,
            degree: self.degree,
            terms,
        }
    }

    /// Linear substitution `p(A x)`, i.e. `x_i -> sum_j A[i][j] x_j`.
    ///
    /// `A` must only mix variables of equal weight, otherwise the result
    /// would not be homogeneous.
    pub fn substitute_linear(&self, a: &[Vec<Rational>]) -> Result<Self> {
        let n = self.n_vars();
        if a.len() != n || a.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidArgument(format!(
                "substitution matrix must be {n}x{n}"
            )));
        }
        for (i, row) in a.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() && self.weights[i] != self.weights[j] {
                    return Err(Error::WeightIncompatible {
                        row: i,
                        col: j,
                        row_weight: self.weights[i],
                        col_weight: self.weights[j],
                    });
                }
            }
        }
        let images: Vec<WeightedPolynomial> = (0..n)
            .map(|i| {
                let terms = (0..n)
                    .filter(|&j| !a[i][j].is_zero())
                    .map(|j| (Monomial::var(n, j), a[i][j].clone()));
                WeightedPolynomial::from_terms(&self.weights, self.weights[i] as u64, terms)
                    .expect("weight-compatible rows are homogeneous")
            })
            .collect();
        // powers[i][e] = images[i]^e
        let mut max_exp = vec![0u32; n];
        for m in self.terms.keys() {
            for (j, &e) in m.0.iter().enumerate() {
                max_exp[j] = max_exp[j].max(e);
            }
        }
        let powers: Vec<Vec<WeightedPolynomial>> = (0..n)
            .map(|i| {
                let mut v = vec![Self::constant(&self.weights, Rational::one())];
                for e in 1..=max_exp[i] {
                    let next = v[e as usize - 1].multiply(&images[i])?;
                    v.push(next);
                }
                Ok(v)
            })
            .collect::<Result<_>>()?;
        let mut out = Self::zero(&self.weights, self.degree);
        for (m, c) in &self.terms {
            let mut prod = Self::constant(&self.weights, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    prod = prod.multiply(&powers[i][e as usize])?;
                }
            }
            out = out.add(&prod)?;
        }
        out.degree = self.degree;
        Ok(out)
    }

    /// Relabels variables: `x_i -> x_{perm[i]}`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let n = self.n_vars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; n];
                for (i, &x) in m.0.iter().enumerate() {
                    e[perm[i]] = x;
                }
                (Monomial(e), c.clone())
            })
            .collect();
        WeightedPolynomial {
            weights: self.weights.clone(),
            degree: self.degree,
            terms,
        }
    }

    /// `sum_j q_j x_j d_j p`, which equals `degree * p` for homogeneous `p`.
    pub fn euler_vector_field(&self) -> Self {
        let mut out = Self::zero(&self.weights, self.degree);
        for j in 0..self.n_vars() {
            let term = self
                .partial(j)
                .mul_monomial(&Monomial::var(self.n_vars(), j))
                .scale(&rat(self.weights[j] as i64));
            out = out.add(&term).expect("same ring and degree");
        }
        out
    }
}

impl fmt::Display for WeightedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}
