//! Comparing hypersurfaces through their graded invariants, and verifying
//! or searching for linear substitutions `w(A x) = c w'(x)`.
//!
//! Searches only ever answer "witness" or "not found within the strategy";
//! a failed search says nothing about non-equivalence.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gradedlin::{ideal_slice, normal_form};
use crate::hsalgebra::LgModel;
use crate::poly::{rat, ratio, Monomial, Rational, WeightedPolynomial};

pub type Matrix = Vec<Vec<Rational>>;

/// Invariant bundle of a certified potential.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub weights: Vec<u32>,
    pub degree: u64,
    /// `dim Jac_t` for `0 <= t <= socle degree`.
    pub hilbert: Vec<usize>,
    /// `dim Hom(D, D(t))` for `0 <= t <= socle degree + d`.
    pub hom_delta_delta: Vec<usize>,
    /// `(t, extra)` wherever `Hom(D, D(t))` exceeds `Jac_t`.
    pub exceptional: Vec<(u64, usize)>,
    /// First of `d`, `d - 1` at which `Hom(D, D(t)) = Jac_t`, i.e. where an
    /// equivalence of categories induces a comparison of Jacobian pieces.
    pub comparison_degree: Option<u64>,
}

pub fn fingerprint(omega: &WeightedPolynomial) -> Result<Fingerprint> {
    fingerprint_of(&LgModel::new(omega)?)
}

pub fn fingerprint_of(model: &LgModel) -> Result<Fingerprint> {
    let jac = model.jacobian();
    let sigma = jac.socle_degree().max(0) as u64;
    let d = model.degree() as u64;
    let hilbert = jac.hilbert_function(sigma);
    let hom = (0..=sigma + d)
        .map(|t| model.hom_delta_delta(t as i64))
        .collect::<Result<Vec<_>>>()?;
    let exceptional: Vec<(u64, usize)> = hom
        .iter()
        .enumerate()
        .map(|(t, &h)| (t as u64, h - jac.dim(t as i64)))
        .filter(|&(_, e)| e > 0)
        .collect();
    let comparison_degree = [d, d - 1]
        .into_iter()
        .find(|t| exceptional.iter().all(|&(s, _)| s != *t));
    Ok(Fingerprint {
        weights: model.weights().to_vec(),
        degree: d,
        hilbert,
        hom_delta_delta: hom,
        exceptional,
        comparison_degree,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerifyMode {
    /// `w(A x) = c w'(x)` coefficient by coefficient.
    ExactPullback,
    /// The Jacobian ideals of `w o A` and `w'` coincide.
    IdealEquality,
}

impl VerifyMode {
    pub fn name(&self) -> &'static str {
        match self {
            VerifyMode::ExactPullback => "exact-pullback",
            VerifyMode::IdealEquality => "ideal-equality",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EquivalenceWitness {
    pub matrix: Matrix,
    pub scalar: Rational,
    pub mode: VerifyMode,
    pub verified: bool,
}

pub fn identity_matrix(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { rat(1) } else { rat(0) }).collect())
        .collect()
}

fn check_square(a: &[Vec<Rational>]) -> Result<usize> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidArgument("matrix must be square".into()));
    }
    Ok(n)
}

/// Gaussian elimination on `[A | I]`; returns `(det A, A^-1)`.
fn gauss_jordan(a: &[Vec<Rational>]) -> Result<(Rational, Option<Matrix>)> {
    let n = check_square(a)?;
    let mut m: Matrix = a
        .iter()
        .zip(identity_matrix(n))
        .map(|(r, e)| r.iter().cloned().chain(e).collect())
        .collect();
    let mut det = rat(1);
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Ok((rat(0), None));
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        for v in m[col].iter_mut() {
            *v /= &pivot;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for k in 0..2 * n {
                    let delta = &f * &m[col][k];
                    m[r][k] -= delta;
                }
            }
        }
    }
    Ok((det, Some(m.into_iter().map(|r| r[n..].to_vec()).collect())))
}

pub fn determinant(a: &[Vec<Rational>]) -> Result<Rational> {
    Ok(gauss_jordan(a)?.0)
}

pub fn invert(a: &[Vec<Rational>]) -> Result<Matrix> {
    gauss_jordan(a)?.1.ok_or(Error::NotInvertible)
}

/// `A[i][j] != 0` only between variables of equal weight.
pub fn check_weight_compatible(a: &[Vec<Rational>], weights: &[u32]) -> Result<()> {
    let n = check_square(a)?;
    if n != weights.len() {
        return Err(Error::InvalidArgument(format!(
            "matrix is {n}x{n} but there are {} variables",
            weights.len()
        )));
    }
    for (i, row) in a.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if !v.is_zero() && weights[i] != weights[j] {
                return Err(Error::WeightIncompatible {
                    row: i,
                    col: j,
                    row_weight: weights[i],
                    col_weight: weights[j],
                });
            }
        }
    }
    Ok(())
}

fn check_same_ring(a: &WeightedPolynomial, b: &WeightedPolynomial) -> Result<()> {
    if a.weights() != b.weights() {
        return Err(Error::WeightMismatch {
            left: a.weights().to_vec(),
            right: b.weights().to_vec(),
        });
    }
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            expected: a.degree(),
            found: b.degree(),
        });
    }
    Ok(())
}

/// Exact check of `w(A x) = c w'(x)` or of equality of Jacobian ideals of
/// `w o A` and `w'`.
pub fn verify_equivalence(
    a: &[Vec<Rational>],
    c: &Rational,
    omega: &WeightedPolynomial,
    omega_prime: &WeightedPolynomial,
    mode: VerifyMode,
) -> Result<bool> {
    check_same_ring(omega, omega_prime)?;
    check_weight_compatible(a, omega.weights())?;
    if determinant(a)?.is_zero() {
        return Err(Error::NotInvertible);
    }
    if c.is_zero() {
        return Err(Error::InvalidArgument("scalar must be nonzero".into()));
    }
    let pulled = omega.substitute_linear(a)?;
    match mode {
        VerifyMode::ExactPullback => Ok(pulled == omega_prime.scale(c)),
        VerifyMode::IdealEquality => jacobian_ideals_equal(&pulled, omega_prime),
    }
}

/// Equality of the ideals generated by the partial derivatives, decided on
/// the generator-degree slices plus one degree above as a guard.
pub fn jacobian_ideals_equal(f: &WeightedPolynomial, g: &WeightedPolynomial) -> Result<bool> {
    check_same_ring(f, g)?;
    let nonzero = |p: &WeightedPolynomial| -> Vec<WeightedPolynomial> {
        p.gradient().into_iter().filter(|q| !q.is_zero()).collect()
    };
    let (gf, gg) = (nonzero(f), nonzero(g));
    for (gens, other) in [(&gf, &gg), (&gg, &gf)] {
        for p in gens.iter() {
            if normal_form(p, other, p.degree())?.iter().any(|c| !c.is_zero()) {
                return Ok(false);
            }
        }
    }
    let Some(top) = gf.iter().chain(&gg).map(|p| p.degree()).max() else {
        return Ok(true);
    };
    let w = f.weights();
    Ok(ideal_slice(w, &gf, top + 1)?.same_span(&ideal_slice(w, &gg, top + 1)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum SearchStrategy {
    /// Permutation times diagonal, scalars from a fixed small set.
    BoundedScalars { budget: u64 },
    /// Permutation times diagonal, scalars solved from coefficient ratios.
    Symbolic,
    /// Random weight-compatible matrices with entries in `-2..=2`.
    Random { trials: u64, seed: u64 },
}

impl SearchStrategy {
    pub fn name(&self) -> &'static str {
        match self {
            SearchStrategy::BoundedScalars { .. } => "bounded-scalars",
            SearchStrategy::Symbolic => "symbolic",
            SearchStrategy::Random { .. } => "random",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchOutcome {
    pub strategy: SearchStrategy,
    pub fingerprints_equal: bool,
    pub witness: Option<EquivalenceWitness>,
    pub candidates_tried: u64,
    /// What a failed search covered; never a claim of non-equivalence.
    pub scope: String,
}

/// The scalars tried by the bounded strategy.
pub fn bounded_scalar_set() -> Vec<Rational> {
    let mut s = Vec::new();
    for v in [rat(1), rat(2), ratio(1, 2), rat(3), ratio(1, 3)] {
        s.push(-v.clone());
        s.push(v);
    }
    s.sort();
    s
}

/// Permutations `p` with `weights[p[i]] == weights[i]`, in lexicographic order.
pub fn weight_preserving_permutations(weights: &[u32]) -> Vec<Vec<usize>> {
    let n = weights.len();
    (0..n)
        .permutations(n)
        .filter(|p| p.iter().enumerate().all(|(i, &j)| weights[i] == weights[j]))
        .collect()
}

/// Matrix of `x_i -> scales[i] * x_{perm[i]}`.
pub fn monomial_matrix(perm: &[usize], scales: &[Rational]) -> Matrix {
    let n = perm.len();
    let mut a = vec![vec![rat(0); n]; n];
    for i in 0..n {
        a[i][perm[i]] = scales[i].clone();
    }
    a
}

/// `w(A x)` for the monomial matrix `A` of `(perm, scales)`, without a general substitution.
fn pullback_monomial(omega: &WeightedPolynomial, perm: &[usize], scales: &[Rational]) -> WeightedPolynomial {
    let terms = omega.terms().map(|(m, c)| {
        let mut coef = c.clone();
        let mut e = vec![0; perm.len()];
        for (i, &x) in m.exponents().iter().enumerate() {
            e[perm[i]] = x;
            coef *= num_traits::pow(scales[i].clone(), x as usize);
        }
        (Monomial::new(e), coef)
    });
    WeightedPolynomial::from_terms(omega.weights(), omega.degree(), terms)
        .expect("permutation preserves weights")
}

/// `c` with `p = c q`, if any.
fn proportionality(p: &WeightedPolynomial, q: &WeightedPolynomial) -> Option<Rational> {
    let (m, a) = q.terms().next()?;
    let c = p.coefficient(m) / a;
    (!c.is_zero() && *p == q.scale(&c)).then_some(c)
}

fn witness(a: Matrix, c: Rational, w: &WeightedPolynomial, w2: &WeightedPolynomial) -> Result<EquivalenceWitness> {
    let verified = verify_equivalence(&a, &c, w, w2, VerifyMode::ExactPullback)?;
    if !verified {
        return Err(Error::Inconsistency(
            "search produced a witness that fails exact verification".into(),
        ));
    }
    Ok(EquivalenceWitness {
        matrix: a,
        scalar: c,
        mode: VerifyMode::ExactPullback,
        verified,
    })
}

/// Searches for `A`, `c` with `w(A x) = c w'(x)`. Every returned witness has
/// passed exact verification.
pub fn search_equivalence(
    omega: &WeightedPolynomial,
    omega_prime: &WeightedPolynomial,
    strategy: &SearchStrategy,
) -> Result<SearchOutcome> {
    check_same_ring(omega, omega_prime)?;
    let fingerprints_equal = fingerprint(omega)? == fingerprint(omega_prime)?;
    if !fingerprints_equal {
        return Ok(SearchOutcome {
            strategy: strategy.clone(),
            fingerprints_equal,
            witness: None,
            candidates_tried: 0,
            scope: "fingerprints differ; no candidates tried".into(),
        });
    }
    let (found, tried, scope) = match strategy {
        SearchStrategy::BoundedScalars { budget } => search_bounded(omega, omega_prime, *budget),
        SearchStrategy::Symbolic => search_symbolic(omega, omega_prime),
        SearchStrategy::Random { trials, seed } => search_random(omega, omega_prime, *trials, *seed),
    };
    let witness = match found {
        Some((a, c)) => Some(witness(a, c, omega, omega_prime)?),
        None => None,
    };
    Ok(SearchOutcome {
        strategy: strategy.clone(),
        fingerprints_equal,
        witness,
        candidates_tried: tried,
        scope,
    })
}

type Found = (Option<(Matrix, Rational)>, u64, String);

fn search_bounded(w: &WeightedPolynomial, w2: &WeightedPolynomial, budget: u64) -> Found {
    let n = w.n_vars();
    let perms = weight_preserving_permutations(w.weights());
    let set = bounded_scalar_set();
    let per_perm = (set.len() as u64).saturating_pow(n.saturating_sub(1) as u32);
    let total = per_perm.saturating_mul(perms.len() as u64);
    let limit = total.min(budget);
    let found = (0..limit).into_par_iter().find_map_first(|k| {
        let perm = &perms[(k / per_perm) as usize];
        let mut idx = k % per_perm;
        let mut scales = vec![rat(1)];
        for _ in 1..n {
            scales.push(set[(idx % set.len() as u64) as usize].clone());
            idx /= set.len() as u64;
        }
        let c = proportionality(&pullback_monomial(w, perm, &scales), w2)?;
        Some((monomial_matrix(perm, &scales), c))
    });
    let scope = format!(
        "weight-preserving permutation times diagonal with first scale 1 and the others in {{±1, ±2, ±1/2, ±3, ±1/3}}: {limit} of {total} candidates{}",
        if limit < total { " (budget exhausted)" } else { "" }
    );
    (found, limit, scope)
}

/// Exact rational `e`-th roots of `r`.
fn rational_roots(r: &Rational, e: u32) -> Vec<Rational> {
    if r.is_zero() {
        return vec![rat(0)];
    }
    if e == 1 {
        return vec![r.clone()];
    }
    let exact = |v: &BigInt| -> Option<BigInt> {
        let root = v.abs().nth_root(e);
        (num_traits::pow(root.clone(), e as usize) == v.abs()).then_some(root)
    };
    let (Some(num), Some(den)) = (exact(r.numer()), exact(r.denom())) else {
        return vec![];
    };
    let root = Rational::new(num, den);
    match (r.is_negative(), e.is_multiple_of(2)) {
        (true, true) => vec![],
        (true, false) => vec![-root],
        (false, true) => vec![root.clone(), -root],
        (false, false) => vec![root],
    }
}

/// Depth-first assignment of target-variable scales `mu` subject to
/// `prod mu_j^{f_j} = r_f` for every monomial `f`.
fn solve_scales(constraints: &[(Vec<u32>, Rational)], mu: &mut Vec<Option<Rational>>, tried: &mut u64) -> bool {
    *tried += 1;
    let mut best: Option<(usize, usize, Rational)> = None;
    for (f, r) in constraints {
        let unknown: Vec<usize> = (0..f.len()).filter(|&j| f[j] > 0 && mu[j].is_none()).collect();
        let known: Rational = (0..f.len())
            .filter(|&j| f[j] > 0 && mu[j].is_some())
            .map(|j| num_traits::pow(mu[j].clone().unwrap(), f[j] as usize))
            .product();
        match unknown.len() {
            0 => {
                if &known != r {
                    return false;
                }
            }
            1 if best.is_none() => best = Some((unknown[0], f[unknown[0]] as usize, r / known)),
            _ => {}
        }
    }
    if let Some((j, e, target)) = best {
        for root in rational_roots(&target, e as u32) {
            if root.is_zero() {
                continue;
            }
            mu[j] = Some(root);
            if solve_scales(constraints, mu, tried) {
                return true;
            }
        }
        mu[j] = None;
        return false;
    }
    match mu.iter().position(|m| m.is_none()) {
        None => true,
        Some(j) => {
            // no monomial pins x_j alone; only the sign-free choices are tried
            for v in [rat(1), rat(-1)] {
                mu[j] = Some(v);
                if solve_scales(constraints, mu, tried) {
                    return true;
                }
            }
            mu[j] = None;
            false
        }
    }
}

fn search_symbolic(w: &WeightedPolynomial, w2: &WeightedPolynomial) -> Found {
    let n = w.n_vars();
    let mut tried = 0u64;
    for perm in weight_preserving_permutations(w.weights()) {
        let permuted = w.permute(&perm);
        if permuted.len() != w2.len() || permuted.terms().any(|(m, _)| w2.coefficient(m).is_zero()) {
            tried += 1;
            continue;
        }
        let mut cs = vec![rat(1), rat(-1)];
        for (m, a) in permuted.terms() {
            let c = w2.coefficient(m) / a;
            if !cs.contains(&c) {
                cs.push(c);
            }
        }
        for c in cs {
            // a_f prod mu^f = c b_f
            let constraints: Vec<(Vec<u32>, Rational)> = permuted
                .terms()
                .map(|(m, a)| (m.exponents().to_vec(), &c * w2.coefficient(m) / a))
                .collect();
            let mut mu = vec![None; n];
            if solve_scales(&constraints, &mut mu, &mut tried) {
                // x_i -> mu_{perm[i]} x_{perm[i]}
                let scales: Vec<Rational> = (0..n).map(|i| mu[perm[i]].clone().unwrap()).collect();
                return (
                    Some((monomial_matrix(&perm, &scales), c)),
                    tried,
                    String::new(),
                );
            }
        }
    }
    let scope = "weight-preserving permutation times diagonal with exact rational scales solved from \
                 coefficient ratios, overall scalar among ±1 and the coefficient ratios"
        .to_string();
    (None, tried, scope)
}

/// Random invertible weight-compatible matrix with entries in `-2..=2`.
pub fn random_weight_compatible<R: Rng>(weights: &[u32], rng: &mut R) -> Matrix {
    let n = weights.len();
    loop {
        let a: Matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if weights[i] == weights[j] {
                            rat(rng.gen_range(-2..=2))
                        } else {
                            rat(0)
                        }
                    })
                    .collect()
            })
            .collect();
        if !determinant(&a).expect("square").is_zero() {
            return a;
        }
    }
}

fn search_random(w: &WeightedPolynomial, w2: &WeightedPolynomial, trials: u64, seed: u64) -> Found {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let candidates: Vec<Matrix> = (0..trials)
        .map(|_| random_weight_compatible(w.weights(), &mut rng))
        .collect();
    let found = candidates.par_iter().find_map_first(|a| {
        let c = proportionality(&w.substitute_linear(a).ok()?, w2)?;
        Some((a.clone(), c))
    });
    let scope = format!(
        "{trials} random weight-compatible invertible matrices with entries in -2..=2 (seed {seed})"
    );
    (found, trials, scope)
}

pub fn matrix_to_strings(a: &[Vec<Rational>]) -> Vec<Vec<String>> {
    a.iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect()
}
