//! Degree-by-degree linear algebra on graded ideals.
//!
//! A homogeneous ideal is never represented globally: for each weighted
//! degree `t` we build the Macaulay matrix whose rows are the products
//! `m * g` (monomial times generator) landing in degree `t`, and reduce it
//! exactly. Rows are kept as primitive integer vectors during forward
//! elimination; the reduced row echelon form over the rationals is produced
//! only when a quotient basis or membership test needs it.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{monomials_of_degree, Monomial, Rational, WeightedPolynomial};

pub type IntRow = Vec<(usize, BigInt)>;
pub type RatRow = Vec<(usize, Rational)>;

const NO_PIVOT: u32 = u32::MAX;

/// Incremental fraction-free row echelon form.
///
/// Each stored row is primitive (content 1) with a positive leading entry,
/// and no two rows share a leading column.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<IntRow>,
    pivot_row: Vec<u32>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivot_row: vec![NO_PIVOT; ncols],
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    /// Reduces `row` (sorted by column, no zeros) against the current pivots and
    /// stores it if something is left. Returns whether the rank grew.
    pub fn insert(&mut self, mut row: IntRow) -> bool {
        if self.is_full() {
            return false;
        }
        loop {
            let Some((c, a)) = row.first() else {
                return false;
            };
            let r = self.pivot_row[*c];
            if r == NO_PIVOT {
                break;
            }
            let pivot = &self.rows[r as usize];
            let b = &pivot[0].1;
            let g = a.gcd(b);
            let row_scale = b / &g;
            let pivot_scale = a / &g;
            row = lincomb(&row, &row_scale, pivot, &pivot_scale);
            make_primitive(&mut row);
        }
        make_primitive(&mut row);
        if row[0].1.is_negative() {
            row.iter_mut().for_each(|(_, v)| *v = -std::mem::take(v));
        }
        self.pivot_row[row[0].0] = self.rows.len() as u32;
        self.rows.push(row);
        true
    }

    /// Clears denominators of a rational row and inserts it.
    pub fn insert_rational(&mut self, row: &[(usize, Rational)]) -> bool {
        let mut sorted: Vec<&(usize, Rational)> = row.iter().filter(|(_, v)| !v.is_zero()).collect();
        sorted.sort_by_key(|(c, _)| *c);
        let lcm = sorted
            .iter()
            .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
        let mut out: IntRow = Vec::with_capacity(sorted.len());
        for (c, v) in sorted {
            let x = v.numer() * (&lcm / v.denom());
            match out.last_mut() {
                Some((lc, lv)) if *lc == *c => *lv += x,
                _ => out.push((*c, x)),
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        self.insert(out)
    }

    /// Back-substitutes into reduced row echelon form over the rationals.
    pub fn into_rref(self) -> Rref {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(self.rows[i][0].0));
        let mut reduced: HashMap<usize, RatRow> = HashMap::with_capacity(self.rows.len());
        for i in order {
            let row = &self.rows[i];
            let lead = Rational::from_integer(row[0].1.clone());
            let mut r: RatRow = row
                .iter()
                .map(|(c, v)| (*c, Rational::from_integer(v.clone()) / &lead))
                .collect();
            let hits: Vec<(usize, Rational)> = r[1..]
                .iter()
                .filter(|(c, _)| self.pivot_row[*c] != NO_PIVOT)
                .cloned()
                .collect();
            for (c, coef) in hits {
                let other = &reduced[&c];
                r = rat_axpy(&r, &-coef, other);
            }
            reduced.insert(r[0].0, r);
        }
        let mut pivots: Vec<usize> = reduced.keys().copied().collect();
        pivots.sort_unstable();
        let rows = pivots.iter().map(|c| reduced.remove(c).unwrap()).collect();
        Rref {
            ncols: self.ncols,
            pivots,
            rows,
        }
    }
}

fn lincomb(x: &IntRow, sx: &BigInt, y: &IntRow, sy: &BigInt) -> IntRow {
    // sx*x - sy*y
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, sx * &x[i].1));
            i += 1;
        } else if take_y {
            out.push((y[j].0, -(sy * &y[j].1)));
            j += 1;
        } else {
            let v = sx * &x[i].1 - sy * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn make_primitive(row: &mut IntRow) {
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if g > BigInt::one() {
        row.iter_mut().for_each(|(_, v)| *v /= &g);
    }
}

/// `x + a*y` on sorted sparse rational rows.
fn rat_axpy(x: &RatRow, a: &Rational, y: &RatRow) -> RatRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        if j >= y.len() || (i < x.len() && x[i].0 < y[j].0) {
            out.push(x[i].clone());
            i += 1;
        } else if i >= x.len() || y[j].0 < x[i].0 {
            out.push((y[j].0, a * &y[j].1));
            j += 1;
        } else {
            let v = &x[i].1 + a * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Reduced row echelon form: row `k` has a 1 in column `pivots[k]` and zeros
/// in every other pivot column.
#[derive(Clone, Debug, PartialEq)]
pub struct Rref {
    ncols: usize,
    pivots: Vec<usize>,
    rows: Vec<RatRow>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[RatRow] {
        &self.rows
    }

    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ncols];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ncols).filter(|&c| !is_pivot[c]).collect()
    }

    /// `v` minus its projection onto the row space along the pivot columns;
    /// zero exactly when `v` lies in the row space.
    pub fn residual(&self, v: &BTreeMap<usize, Rational>) -> BTreeMap<usize, Rational> {
        let mut out = v.clone();
        for (k, &c) in self.pivots.iter().enumerate() {
            let Some(coef) = v.get(&c).cloned() else {
                continue;
            };
            for (col, x) in &self.rows[k] {
                let e = out.entry(*col).or_insert_with(Rational::zero);
                *e -= &coef * x;
            }
        }
        out.retain(|_, x| !x.is_zero());
        out
    }
}

/// The monomials of one weighted degree with a reverse index.
#[derive(Debug)]
pub struct MonomialBasis {
    weights: Vec<u32>,
    degree: u64,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    pub fn new(weights: &[u32], degree: u64) -> Self {
        let monomials = monomials_of_degree(degree, weights);
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        MonomialBasis {
            weights: weights.to_vec(),
            degree,
            monomials,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// Coordinates of a homogeneous polynomial of this degree.
    pub fn coordinates(&self, p: &WeightedPolynomial) -> Result<BTreeMap<usize, Rational>> {
        if p.weights() != self.weights.as_slice() {
            return Err(Error::WeightMismatch {
                left: self.weights.clone(),
                right: p.weights().to_vec(),
            });
        }
        if !p.is_zero() && p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: p.degree(),
            });
        }
        Ok(p
            .terms()
            .map(|(m, c)| (self.index[m], c.clone()))
            .collect())
    }
}

fn check_generators(weights: &[u32], generators: &[WeightedPolynomial]) -> Result<()> {
    for g in generators {
        if g.weights() != weights {
            return Err(Error::WeightMismatch {
                left: weights.to_vec(),
                right: g.weights().to_vec(),
            });
        }
    }
    Ok(())
}

fn integer_terms(g: &WeightedPolynomial) -> Vec<(Monomial, BigInt)> {
    let lcm = g
        .terms()
        .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    g.terms()
        .map(|(m, c)| (m.clone(), c.numer() * (&lcm / c.denom())))
        .collect()
}

/// Forward-eliminated Macaulay matrix of the ideal generated by `generators`
/// in weighted degree `t`.
pub fn slice_echelon(
    weights: &[u32],
    generators: &[WeightedPolynomial],
    t: u64,
) -> Result<(Arc<MonomialBasis>, Echelon)> {
    check_generators(weights, generators)?;
    let basis = Arc::new(MonomialBasis::new(weights, t));
    let mut ech = Echelon::new(basis.len());
    for g in generators {
        if g.is_zero() || g.degree() > t {
            continue;
        }
        let gi = integer_terms(g);
        for m in monomials_of_degree(t - g.degree(), weights) {
            if ech.is_full() {
                break;
            }
            let mut row: IntRow = gi
                .iter()
                .map(|(gm, c)| (basis.index[&gm.mul(&m)], c.clone()))
                .collect();
            row.sort_by_key(|(c, _)| *c);
            ech.insert(row);
        }
    }
    Ok((basis, ech))
}

/// The degree-`t` piece of a homogeneous ideal, as a subspace of the
/// monomial space of degree `t`.
#[derive(Clone, Debug)]
pub struct GradedSubspace {
    degree: u64,
    ambient: Arc<MonomialBasis>,
    span: Rref,
}

impl GradedSubspace {
    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.span.rank()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient.len()
    }

    pub fn ambient_basis(&self) -> &[Monomial] {
        self.ambient.monomials()
    }

    /// Spanning rows in monomial coordinates (reduced echelon form).
    pub fn span_matrix(&self) -> &[RatRow] {
        self.span.rows()
    }

    pub fn contains(&self, p: &WeightedPolynomial) -> Result<bool> {
        let v = self.ambient.coordinates(p)?;
        Ok(self.span.residual(&v).is_empty())
    }

    /// Whether both subspaces are the same subspace of the same ambient space.
    pub fn same_span(&self, other: &GradedSubspace) -> bool {
        if self.degree != other.degree
            || self.ambient.weights != other.ambient.weights
            || self.rank() != other.rank()
        {
            return false;
        }
        other.span.rows().iter().all(|row| {
            let v: BTreeMap<usize, Rational> = row.iter().cloned().collect();
            self.span.residual(&v).is_empty()
        })
    }
}

pub fn ideal_slice(
    weights: &[u32],
    generators: &[WeightedPolynomial],
    t: u64,
) -> Result<GradedSubspace> {
    let (ambient, ech) = slice_echelon(weights, generators, t)?;
    Ok(GradedSubspace {
        degree: t,
        ambient,
        span: ech.into_rref(),
    })
}

/// Rank of the degree-`t` ideal slice without building the reduced form.
pub fn ideal_slice_rank(weights: &[u32], generators: &[WeightedPolynomial], t: u64) -> Result<usize> {
    Ok(slice_echelon(weights, generators, t)?.1.rank())
}

/// A monomial basis of the degree-`t` piece of `R / I`, chosen as the
/// non-pivot (standard) monomials of the reduced Macaulay matrix.
#[derive(Clone, Debug)]
pub struct QuotientBasis {
    degree: u64,
    ambient: Arc<MonomialBasis>,
    representatives: Vec<usize>,
    position: Vec<Option<usize>>,
    // pivot column -> coordinates of that monomial over the representatives
    reduction: HashMap<usize, RatRow>,
}

impl QuotientBasis {
    fn from_rref(degree: u64, ambient: Arc<MonomialBasis>, rref: Rref) -> Self {
        let representatives = rref.non_pivots();
        let mut position = vec![None; ambient.len()];
        for (k, &c) in representatives.iter().enumerate() {
            position[c] = Some(k);
        }
        let reduction = rref
            .pivots
            .iter()
            .zip(rref.rows)
            .map(|(&c, row)| {
                let coords = row[1..]
                    .iter()
                    .map(|(col, v)| (position[*col].expect("non-pivot column"), -v.clone()))
                    .collect();
                (c, coords)
            })
            .collect();
        QuotientBasis {
            degree,
            ambient,
            representatives,
            position,
            reduction,
        }
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient.len()
    }

    pub fn representatives(&self) -> Vec<&Monomial> {
        self.representatives
            .iter()
            .map(|&c| &self.ambient.monomials()[c])
            .collect()
    }

    pub fn representative(&self, k: usize) -> &Monomial {
        &self.ambient.monomials()[self.representatives[k]]
    }

    /// Coordinates of the class of a monomial of this degree.
    pub fn reduce_monomial(&self, m: &Monomial) -> Option<RatRow> {
        let c = self.ambient.index_of(m)?;
        Some(match self.position[c] {
            Some(k) => vec![(k, Rational::one())],
            None => self.reduction[&c].clone(),
        })
    }

    /// Dense coordinates of the class of `p` over the representatives.
    pub fn normal_form(&self, p: &WeightedPolynomial) -> Result<Vec<Rational>> {
        let v = self.ambient.coordinates(p)?;
        let mut out = vec![Rational::zero(); self.len()];
        for (c, x) in v {
            match self.position[c] {
                Some(k) => out[k] += x,
                None => {
                    for (k, y) in &self.reduction[&c] {
                        out[*k] += &x * y;
                    }
                }
            }
        }
        Ok(out)
    }

    /// The polynomial `sum_k coords[k] * representative_k`.
    pub fn lift(&self, coords: &[Rational]) -> WeightedPolynomial {
        let w = &self.ambient.weights;
        WeightedPolynomial::from_terms(
            w,
            self.degree,
            coords
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (self.representative(k).clone(), c.clone())),
        )
        .expect("representatives have the basis degree")
    }
}

pub fn quotient_basis(
    weights: &[u32],
    generators: &[WeightedPolynomial],
    t: u64,
) -> Result<QuotientBasis> {
    let (ambient, ech) = slice_echelon(weights, generators, t)?;
    Ok(QuotientBasis::from_rref(t, ambient, ech.into_rref()))
}

pub fn normal_form(
    p: &WeightedPolynomial,
    generators: &[WeightedPolynomial],
    t: u64,
) -> Result<Vec<Rational>> {
    if !p.is_zero() && p.degree() != t {
        return Err(Error::DegreeMismatch {
            expected: t,
            found: p.degree(),
        });
    }
    quotient_basis(p.weights(), generators, t)?.normal_form(p)
}

/// Rank of an arbitrary sparse rational matrix given by rows.
pub fn rank_of_rows<'a, I>(ncols: usize, rows: I) -> usize
where
    I: IntoIterator<Item = &'a RatRow>,
{
    let mut ech = Echelon::new(ncols);
    for r in rows {
        ech.insert_rational(r);
    }
    ech.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, rat};
    use proptest::prelude::*;

    fn fermat_cubic_gens() -> Vec<WeightedPolynomial> {
        parse_poly("x0^3+x1^3+x2^3", &[1, 1, 1], 3).unwrap().gradient()
    }

    /// Independent rank oracle: dense Gaussian elimination over the rationals.
    fn dense_rank(mut m: Vec<Vec<Rational>>) -> usize {
        let mut rank = 0;
        let ncols = m.first().map_or(0, |r| r.len());
        for c in 0..ncols {
            let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            for r in 0..m.len() {
                if r != rank && !m[r][c].is_zero() {
                    let f = &m[r][c] / &m[rank][c];
                    for k in 0..ncols {
                        let v = &f * &m[rank][k];
                        m[r][k] -= v;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn fermat_cubic_slice_in_degree_two() {
        let s = ideal_slice(&[1, 1, 1], &fermat_cubic_gens(), 2).unwrap();
        assert_eq!((s.rank(), s.ambient_dim()), (3, 6));
        let q = quotient_basis(&[1, 1, 1], &fermat_cubic_gens(), 2).unwrap();
        let reps: Vec<String> = q.representatives().iter().map(|m| m.to_string()).collect();
        assert_eq!(reps, ["x0*x1", "x0*x2", "x1*x2"]);
    }

    #[test]
    fn low_degree_slice_is_empty() {
        let s = ideal_slice(&[1, 1, 1], &fermat_cubic_gens(), 1).unwrap();
        assert_eq!(s.rank(), 0);
        let q = quotient_basis(&[1, 1, 1], &fermat_cubic_gens(), 0).unwrap();
        assert_eq!(q.representatives(), vec![&Monomial::one(3)]);
    }

    #[test]
    fn linear_generator_slice() {
        let g = parse_poly("x0", &[1, 1], 1).unwrap();
        let s = ideal_slice(&[1, 1], &[g], 3).unwrap();
        assert_eq!((s.rank(), s.ambient_dim()), (3, 4));
    }

    #[test]
    fn beyond_socle_quotient_is_empty() {
        let q = quotient_basis(&[1, 1, 1], &fermat_cubic_gens(), 4).unwrap();
        assert!(q.is_empty());
    }

    #[test]
    fn normal_form_examples() {
        let w = [1, 1, 1];
        let gens = fermat_cubic_gens();
        let x0sq = parse_poly("x0^2", &w, 2).unwrap();
        assert!(normal_form(&x0sq, &gens, 2).unwrap().iter().all(|c| c.is_zero()));
        let x0x1 = parse_poly("x0*x1", &w, 2).unwrap();
        assert_eq!(normal_form(&x0x1, &gens, 2).unwrap(), vec![rat(1), rat(0), rat(0)]);

        // x0^3 = x0 (x0^2 - x1^2) + x0 x1^2
        let g = parse_poly("x0^2-x1^2", &[1, 1], 2).unwrap();
        let q = quotient_basis(&[1, 1], std::slice::from_ref(&g), 3).unwrap();
        let reps: Vec<String> = q.representatives().iter().map(|m| m.to_string()).collect();
        assert_eq!(reps, ["x0*x1^2", "x1^3"]);
        let p = parse_poly("x0^3", &[1, 1], 3).unwrap();
        assert_eq!(normal_form(&p, &[g], 3).unwrap(), vec![rat(1), rat(0)]);
    }

    #[test]
    fn normal_form_rejects_wrong_degree() {
        let p = parse_poly("x0^3", &[1, 1, 1], 3).unwrap();
        assert!(matches!(
            normal_form(&p, &fermat_cubic_gens(), 2),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn mixed_weights_are_rejected() {
        let a = parse_poly("x0", &[1, 1], 1).unwrap();
        let b = parse_poly("x0", &[1, 2], 1).unwrap();
        assert!(matches!(
            ideal_slice(&[1, 1], &[a, b], 2),
            Err(Error::WeightMismatch { .. })
        ));
    }

    #[test]
    fn representatives_reduce_to_themselves() {
        let w = [1, 1, 1];
        let gens = parse_poly("x0^2*x1 + x1^2*x2 + x2^2*x0", &w, 3).unwrap().gradient();
        for t in 0..5 {
            let q = quotient_basis(&w, &gens, t).unwrap();
            for k in 0..q.len() {
                let m = q.representative(k).clone();
                let p = WeightedPolynomial::monomial(&w, m, rat(1));
                let mut e = vec![rat(0); q.len()];
                e[k] = rat(1);
                assert_eq!(q.normal_form(&p).unwrap(), e);
            }
        }
    }

    #[test]
    fn subspace_equality_is_reflexive_and_symmetric() {
        let w = [1, 1];
        let a = vec![parse_poly("x0^2", &w, 2).unwrap(), parse_poly("x1^2", &w, 2).unwrap()];
        let b = vec![
            parse_poly("x0^2+x1^2", &w, 2).unwrap(),
            parse_poly("x0^2-x1^2", &w, 2).unwrap(),
        ];
        let c = vec![parse_poly("x0*x1", &w, 2).unwrap()];
        for t in 2..5 {
            let sa = ideal_slice(&w, &a, t).unwrap();
            let sb = ideal_slice(&w, &b, t).unwrap();
            let sc = ideal_slice(&w, &c, t).unwrap();
            assert!(sa.same_span(&sa));
            assert!(sa.same_span(&sb) && sb.same_span(&sa));
            assert!(!sa.same_span(&sc) && !sc.same_span(&sa));
        }
    }

    fn random_form(weights: Vec<u32>, degree: u64) -> impl Strategy<Value = WeightedPolynomial> {
        let basis = monomials_of_degree(degree, &weights);
        let k = basis.len();
        proptest::collection::vec(-4i64..=4, k).prop_map(move |cs| {
            WeightedPolynomial::from_terms(&weights, degree, basis.iter().cloned().zip(cs.into_iter().map(rat)))
                .unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn rank_matches_dense_oracle_and_rank_nullity(
            f in random_form(vec![1, 1, 2], 4),
            t in 0u64..7,
        ) {
            let w = [1, 1, 2];
            let gens = f.gradient();
            let basis = MonomialBasis::new(&w, t);
            let mut dense = Vec::new();
            for g in gens.iter().filter(|g| !g.is_zero() && g.degree() <= t) {
                for m in monomials_of_degree(t - g.degree(), &w) {
                    let mut row = vec![rat(0); basis.len()];
                    for (c, x) in basis.coordinates(&g.mul_monomial(&m)).unwrap() {
                        row[c] = x;
                    }
                    dense.push(row);
                }
            }
            let s = ideal_slice(&w, &gens, t).unwrap();
            let q = quotient_basis(&w, &gens, t).unwrap();
            prop_assert_eq!(s.rank(), dense_rank(dense));
            prop_assert_eq!(s.ambient_dim(), s.rank() + q.len());
        }

        #[test]
        fn normal_form_is_linear(
            f in random_form(vec![1, 1, 1], 3),
            p in random_form(vec![1, 1, 1], 3),
            r in random_form(vec![1, 1, 1], 3),
            a in -5i64..5,
            b in -5i64..5,
        ) {
            let gens = f.gradient();
            let q = quotient_basis(&[1, 1, 1], &gens, 3).unwrap();
            let combo = p.scale(&rat(a)).add(&r.scale(&rat(b))).unwrap();
            let lhs = q.normal_form(&combo).unwrap();
            let np = q.normal_form(&p).unwrap();
            let nr = q.normal_form(&r).unwrap();
            let rhs: Vec<Rational> = np.iter().zip(&nr).map(|(x, y)| x * rat(a) + y * rat(b)).collect();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn adding_generators_never_lowers_rank(
            f in random_form(vec![1, 1, 1], 3),
            extra in random_form(vec![1, 1, 1], 2),
            t in 0u64..5,
        ) {
            let w = [1, 1, 1];
            let gens = f.gradient();
            let before = ideal_slice_rank(&w, &gens, t).unwrap();
            let mut more = gens.clone();
            more.push(extra);
            prop_assert!(ideal_slice_rank(&w, &more, t).unwrap() >= before);
        }
    }
}
