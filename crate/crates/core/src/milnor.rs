//! Graded Jacobian (Milnor) algebras `k[x] / (d_0 w, ..., d_n w)`.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gradedlin::{slice_echelon, QuotientBasis};
use crate::poly::{Rational, WeightedPolynomial};
use crate::series;

/// `sum_j (d - 2 q_j)`, the top degree of the Jacobian algebra of an
/// isolated quasi-homogeneous singularity.
pub fn socle_degree(weights: &[u32], d: u64) -> i64 {
    weights.iter().map(|&q| d as i64 - 2 * q as i64).sum()
}

/// Coefficients of `prod_j (1 - s^(d-q_j)) / (1 - s^q_j)` for degrees
/// `0..=max(socle, 0)`.
pub fn poincare_oracle(weights: &[u32], d: u64) -> Vec<i64> {
    let top = socle_degree(weights, d).max(0) as usize;
    series::jacobian_poincare(weights, d as u32, top)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub degree: u64,
    pub hilbert: usize,
    pub expected: i64,
}

/// Evidence for or against an isolated singularity at the origin.
///
/// Positive certificates record the Hilbert function through the socle
/// degree, the matching oracle values, and a vanishing window of width
/// `max(q_j)` above the socle, which forces every higher degree to vanish.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsolationCertificate {
    pub isolated: bool,
    pub socle_degree: i64,
    pub hilbert: Vec<usize>,
    pub oracle: Vec<i64>,
    pub window: Vec<usize>,
    pub first_mismatch: Option<Mismatch>,
    pub reason: Option<String>,
}

impl IsolationCertificate {
    pub fn summary(&self) -> String {
        if self.isolated {
            return format!(
                "certified isolated (socle degree {}, Hilbert function matches oracle)",
                self.socle_degree
            );
        }
        if let Some(m) = &self.first_mismatch {
            return format!(
                "Hilbert function differs from the complete-intersection series in degree {} ({} vs {})",
                m.degree, m.hilbert, m.expected
            );
        }
        self.reason.clone().unwrap_or_else(|| "not isolated".into())
    }
}

/// Jacobian algebra of a weighted-homogeneous polynomial.
///
/// Graded pieces are computed on demand and memoized; the memo tables are
/// filled idempotently, so concurrent readers always agree.
#[derive(Debug)]
pub struct JacobianAlgebra {
    source: WeightedPolynomial,
    generators: Vec<WeightedPolynomial>,
    socle_degree: i64,
    max_weight: u64,
    dims: Mutex<BTreeMap<u64, usize>>,
    bases: Mutex<BTreeMap<u64, Arc<QuotientBasis>>>,
}

impl JacobianAlgebra {
    pub fn new(omega: &WeightedPolynomial) -> Result<Self> {
        if omega.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(JacobianAlgebra {
            source: omega.clone(),
            generators: omega.gradient(),
            socle_degree: socle_degree(omega.weights(), omega.degree()),
            max_weight: omega.weights().iter().copied().max().unwrap_or(1) as u64,
            dims: Mutex::new(BTreeMap::new()),
            bases: Mutex::new(BTreeMap::new()),
        })
    }

    pub fn source(&self) -> &WeightedPolynomial {
        &self.source
    }

    pub fn generators(&self) -> &[WeightedPolynomial] {
        &self.generators
    }

    pub fn weights(&self) -> &[u32] {
        self.source.weights()
    }

    pub fn degree(&self) -> u64 {
        self.source.degree()
    }

    pub fn socle_degree(&self) -> i64 {
        self.socle_degree
    }

    fn window_start(&self) -> u64 {
        self.socle_degree.max(0) as u64 + 1
    }

    fn exact_dim(&self, t: u64) -> usize {
        if let Some(&d) = self.dims.lock().unwrap().get(&t) {
            return d;
        }
        if let Some(b) = self.bases.lock().unwrap().get(&t) {
            return b.len();
        }
        let (basis, ech) =
            slice_echelon(self.weights(), &self.generators, t).expect("generators share the ring");
        let d = basis.len() - ech.rank();
        self.dims.lock().unwrap().entry(t).or_insert(d);
        d
    }

    fn vanishes_above_window(&self) -> bool {
        let a = self.window_start();
        (a..a + self.max_weight).all(|s| self.exact_dim(s) == 0)
    }

    /// `dim Jac_t`; zero for negative `t`.
    ///
    /// Once a run of `max(q_j)` consecutive degrees above the socle vanishes,
    /// every higher degree vanishes too (any monomial there factors through
    /// the run), so those degrees are answered without elimination.
    pub fn dim(&self, t: i64) -> usize {
        if t < 0 {
            return 0;
        }
        let t = t as u64;
        if t >= self.window_start() + self.max_weight && self.vanishes_above_window() {
            return 0;
        }
        self.exact_dim(t)
    }

    /// `[dim Jac_0, ..., dim Jac_{t_max}]`.
    pub fn hilbert_function(&self, t_max: u64) -> Vec<usize> {
        let direct = t_max.min(self.window_start() + self.max_weight - 1);
        let mut out: Vec<usize> = (0..=direct)
            .into_par_iter()
            .map(|t| self.exact_dim(t))
            .collect();
        out.extend((direct + 1..=t_max).map(|t| self.dim(t as i64)));
        out
    }

    pub fn basis(&self, t: u64) -> Arc<QuotientBasis> {
        if let Some(b) = self.bases.lock().unwrap().get(&t) {
            return b.clone();
        }
        let q = crate::gradedlin::quotient_basis(self.weights(), &self.generators, t)
            .expect("generators share the ring");
        let q = Arc::new(q);
        self.dims.lock().unwrap().entry(t).or_insert(q.len());
        self.bases.lock().unwrap().entry(t).or_insert(q).clone()
    }

    /// Decides whether the origin is an isolated singularity.
    pub fn certify(&self) -> IsolationCertificate {
        let sigma = self.socle_degree;
        let mut cert = IsolationCertificate {
            isolated: false,
            socle_degree: sigma,
            hilbert: Vec::new(),
            oracle: Vec::new(),
            window: Vec::new(),
            first_mismatch: None,
            reason: None,
        };
        if self.degree() <= self.max_weight {
            cert.reason = Some(format!(
                "degree {} does not exceed the largest weight {}; the origin is not a singular point",
                self.degree(),
                self.max_weight
            ));
            return cert;
        }
        if sigma < 0 {
            cert.reason = Some(format!("negative socle degree {sigma}"));
            return cert;
        }
        let top = sigma as u64;
        cert.oracle = poincare_oracle(self.weights(), self.degree());
        let dims = self.hilbert_function(top + self.max_weight);
        cert.hilbert = dims[..=top as usize].to_vec();
        cert.window = dims[top as usize + 1..].to_vec();
        cert.first_mismatch = cert
            .hilbert
            .iter()
            .zip(&cert.oracle)
            .enumerate()
            .find(|(_, (&h, &o))| h as i64 != o)
            .map(|(t, (&h, &o))| Mismatch {
                degree: t as u64,
                hilbert: h,
                expected: o,
            });
        if cert.first_mismatch.is_none() {
            if let Some(k) = cert.window.iter().position(|&v| v != 0) {
                cert.first_mismatch = Some(Mismatch {
                    degree: top + 1 + k as u64,
                    hilbert: cert.window[k],
                    expected: 0,
                });
            }
        }
        cert.isolated = cert.first_mismatch.is_none();
        cert
    }

    pub fn is_isolated_singularity(&self) -> bool {
        self.certify().isolated
    }

    /// Coordinates of the class of a homogeneous polynomial.
    pub fn class_of(&self, p: &WeightedPolynomial) -> Result<Vec<Rational>> {
        if p.weights() != self.weights() {
            return Err(Error::WeightMismatch {
                left: self.weights().to_vec(),
                right: p.weights().to_vec(),
            });
        }
        let t = if p.is_zero() { 0 } else { p.degree() };
        self.basis(t).normal_form(p)
    }

    /// Coordinates of the class of 1 in degree 0.
    pub fn unit(&self) -> Vec<Rational> {
        let one = WeightedPolynomial::constant(self.weights(), Rational::one());
        self.basis(0).normal_form(&one).expect("degree 0")
    }

    /// Product of two classes given by coordinates over the degree-`t1` and
    /// degree-`t2` bases; the result is over the degree `t1 + t2` basis.
    pub fn multiply(
        &self,
        a: &[Rational],
        t1: u64,
        b: &[Rational],
        t2: u64,
    ) -> Result<Vec<Rational>> {
        let (ba, bb) = (self.basis(t1), self.basis(t2));
        for (coords, basis) in [(a, &ba), (b, &bb)] {
            if coords.len() != basis.len() {
                return Err(Error::InvalidArgument(format!(
                    "expected {} coordinates in degree {}, got {}",
                    basis.len(),
                    basis.degree(),
                    coords.len()
                )));
            }
        }
        let target = self.basis(t1 + t2);
        if a.iter().all(Zero::is_zero) || b.iter().all(Zero::is_zero) {
            return Ok(vec![Rational::zero(); target.len()]);
        }
        let prod = ba.lift(a).multiply(&bb.lift(b))?;
        target.normal_form(&prod)
    }
}
