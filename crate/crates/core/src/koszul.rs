//! Graded Koszul complexes `0 -> L^N R^N -> ... -> R^N -> R` of a sequence
//! of homogeneous polynomials, with cohomology ranks per internal degree.
//!
//! The basis element `e_I = e_{i1} ^ ... ^ e_{ip}` carries internal degree
//! `sum_k deg f_{ik}`, which makes every differential degree-preserving and
//! identifies `H^0` in degree `t` with `(R / (f_1, ..., f_N))_t`.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::gradedlin::{rank_of_rows, RatRow};
use crate::poly::{monomials_of_degree, rat, Monomial, Rational, WeightedPolynomial};

type Element = BTreeMap<(u32, Monomial), Rational>;

#[derive(Clone, Debug)]
pub struct KoszulComplex {
    weights: Vec<u32>,
    sequence: Vec<WeightedPolynomial>,
    shifts: Vec<i64>,
}

/// Koszul complex of the partial derivatives of `omega`.
///
/// With no variables this is the one-term complex `R = k` in degree 0.
pub fn build_koszul(omega: &WeightedPolynomial) -> KoszulComplex {
    let d = omega.degree() as i64;
    KoszulComplex {
        weights: omega.weights().to_vec(),
        sequence: omega.gradient(),
        shifts: omega.weights().iter().map(|&q| d - q as i64).collect(),
    }
}

impl KoszulComplex {
    /// Complex of an arbitrary sequence; `shifts[i]` is the internal degree of `e_i`.
    pub fn new(weights: &[u32], sequence: Vec<WeightedPolynomial>, shifts: Vec<i64>) -> Self {
        assert_eq!(sequence.len(), shifts.len());
        assert!(sequence.len() <= 31, "at most 31 generators");
        KoszulComplex {
            weights: weights.to_vec(),
            sequence,
            shifts,
        }
    }

    /// Number of elements in the sequence (the length of the complex).
    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    pub fn sequence(&self) -> &[WeightedPolynomial] {
        &self.sequence
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    fn mask_degree(&self, mask: u32) -> i64 {
        (0..self.len())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| self.shifts[i])
            .sum()
    }

    fn masks_of_size(&self, p: usize) -> Vec<u32> {
        let n = self.len();
        let mut out: Vec<u32> = (0u32..(1u32 << n))
            .filter(|m| m.count_ones() as usize == p)
            .collect();
        out.sort_by_key(|m| (0..n).map(|i| m & (1 << i) == 0).collect::<Vec<_>>());
        out
    }

    /// Basis of the internal-degree-`t` part of `L^p R^N`.
    pub fn block(&self, p: usize, t: i64) -> Vec<(u32, Monomial)> {
        if p > self.len() {
            return Vec::new();
        }
        let mut out = Vec::new();
        for mask in self.masks_of_size(p) {
            let rest = t - self.mask_degree(mask);
            if rest < 0 {
                continue;
            }
            for m in monomials_of_degree(rest as u64, &self.weights) {
                out.push((mask, m));
            }
        }
        out
    }

    pub fn block_dim(&self, p: usize, t: i64) -> usize {
        self.block(p, t).len()
    }

    /// `d(m e_I) = sum_k (-1)^k f_{ik} m e_{I - ik}` with `k` counted from 0.
    pub fn differential(&self, mask: u32, m: &Monomial) -> Element {
        let mut out = Element::new();
        let mut k = 0;
        for i in 0..self.len() {
            if mask & (1 << i) == 0 {
                continue;
            }
            let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
            k += 1;
            let f = &self.sequence[i];
            let target = mask & !(1 << i);
            for (fm, c) in f.terms() {
                let e = out.entry((target, fm.mul(m))).or_insert_with(Rational::zero);
                *e += c * &sign;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn apply(&self, x: &Element) -> Element {
        let mut out = Element::new();
        for ((mask, m), c) in x {
            for (key, v) in self.differential(*mask, m) {
                let e = out.entry(key).or_insert_with(Rational::zero);
                *e += c * v;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Rank of `d_p : (L^p)_t -> (L^{p-1})_t`.
    pub fn differential_rank(&self, p: usize, t: i64) -> usize {
        if p == 0 || p > self.len() {
            return 0;
        }
        let source = self.block(p, t);
        let target = self.block(p - 1, t);
        if source.is_empty() || target.is_empty() {
            return 0;
        }
        let index: HashMap<&(u32, Monomial), usize> =
            target.iter().enumerate().map(|(i, k)| (k, i)).collect();
        let rows: Vec<RatRow> = source
            .iter()
            .map(|(mask, m)| {
                self.differential(*mask, m)
                    .into_iter()
                    .map(|(k, v)| (index[&k], v))
                    .collect()
            })
            .collect();
        rank_of_rows(target.len(), &rows)
    }

    /// `dim H^p` in internal degree `t`: `dim ker d_p - dim im d_{p+1}`.
    pub fn cohomology_rank(&self, p: usize, t: i64) -> usize {
        if p > self.len() {
            return 0;
        }
        let dim = self.block_dim(p, t);
        dim - self.differential_rank(p, t) - self.differential_rank(p + 1, t)
    }

    /// Checks `d o d = 0` on every basis element up to internal degree
    /// `t_max`; returns the first offending `(p, t)`.
    pub fn check_d_squared(&self, t_max: i64) -> Result<(), (usize, i64)> {
        for t in 0..=t_max {
            for p in 2..=self.len() {
                for (mask, m) in self.block(p, t) {
                    let once = self.differential(mask, &m);
                    if !self.apply(&once).is_empty() {
                        return Err((p, t));
                    }
                }
            }
        }
        Ok(())
    }

    /// Alternating sums `(sum (-1)^p dim H^p_t, sum (-1)^p dim (L^p)_t)`.
    pub fn euler_characteristic(&self, t: i64) -> (i64, i64) {
        let mut from_h = 0;
        let mut from_terms = 0;
        for p in 0..=self.len() {
            let sign = if p % 2 == 0 { 1 } else { -1 };
            from_h += sign * self.cohomology_rank(p, t) as i64;
            from_terms += sign * self.block_dim(p, t) as i64;
        }
        (from_h, from_terms)
    }
}

pub fn koszul_cohomology_rank(k: &KoszulComplex, p: usize, t: i64) -> usize {
    k.cohomology_rank(p, t)
}
