//! Bigraded morphism spaces `Hom(D, D(t)[m])` of the diagonal kernel in the
//! category of graded matrix factorizations of a weighted-homogeneous
//! potential, assembled sector by sector from graded Jacobian algebras.
//!
//! The contribution of a sector `g` to `Hom(D, D(t)[m])` is
//! `dim Jac(w_g)` in degree `t - k_g + d (m - rk W_g) / 2`, counted only when
//! `m - rk W_g` is even. A sector with a zero-dimensional fixed locus has
//! `Jac(w_g) = k` concentrated in degree 0.

use std::sync::Arc;

use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::milnor::{IsolationCertificate, JacobianAlgebra};
use crate::orbifold::{sector_data, SectorData};
use crate::poly::{Rational, WeightedPolynomial};

/// The autoequivalence `D(twist)[shift]`, modulo `D(d) = [2]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FunctorWord {
    pub twist: i64,
    pub shift: i64,
}

impl FunctorWord {
    pub const IDENTITY: FunctorWord = FunctorWord { twist: 0, shift: 0 };

    pub fn new(twist: i64, shift: i64) -> Self {
        FunctorWord { twist, shift }
    }

    /// Twist by `t`, no shift.
    pub fn twist(t: i64) -> Self {
        FunctorWord::new(t, 0)
    }

    pub fn compose(self, other: FunctorWord) -> Self {
        FunctorWord::new(self.twist + other.twist, self.shift + other.shift)
    }

    pub fn pow(self, k: i64) -> Self {
        FunctorWord::new(self.twist * k, self.shift * k)
    }

    /// Canonical representative with `0 <= twist < d`, trading each `d` units
    /// of twist for 2 units of shift.
    pub fn normalize(self, d: u32) -> Self {
        let d = d as i64;
        let (q, r) = self.twist.div_mod_floor(&d);
        FunctorWord::new(r, self.shift + 2 * q)
    }
}

pub fn normalize_word(w: FunctorWord, d: u32) -> FunctorWord {
    w.normalize(d)
}

/// `S^a [b]` for the Serre functor `S = D(-(n+1))[n+1]` of a degree-`d`
/// hypersurface in `P^n`, normalized.
pub fn serre_power_word(a: i64, b: i64, n: u32, d: u32) -> FunctorWord {
    let n1 = n as i64 + 1;
    FunctorWord::new(-n1, n1)
        .pow(a)
        .compose(FunctorWord::new(0, b))
        .normalize(d)
}

/// `(k1, k2)` with `k1 * a + k2 * d = 1`, when `gcd(a, d) = 1`.
pub fn bezout(a: i64, d: i64) -> Option<(i64, i64)> {
    let e = a.extended_gcd(&d);
    match e.gcd {
        1 => Some((e.x, e.y)),
        -1 => Some((-e.x, -e.y)),
        _ => None,
    }
}

/// The Serre-functor word whose `t`-th power is `D(t)`:
/// `S^{-k1 t}[2 k2 t + (n+1) k1 t]` with `k1 (n+1) + k2 d = 1`.
pub fn twist_as_serre_word(t: i64, n: u32, d: u32) -> Option<(i64, i64)> {
    let (k1, k2) = bezout(n as i64 + 1, d as i64)?;
    Some((-k1 * t, 2 * k2 * t + (n as i64 + 1) * k1 * t))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectorContribution {
    pub g_index: u32,
    /// Whether `m - rk W_g` is even.
    pub participates: bool,
    /// Degree of `Jac(w_g)` that was evaluated, when participating.
    pub evaluated_degree: Option<i64>,
    pub contribution: usize,
}

/// One entry `Hom(D, D(t)[m])` with its per-sector breakdown, identity sector first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HsCell {
    pub t: i64,
    pub m: i64,
    pub total: usize,
    pub per_sector: Vec<SectorContribution>,
}

impl HsCell {
    pub fn breakdown(&self) -> Vec<usize> {
        self.per_sector.iter().map(|s| s.contribution).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HsTable {
    pub t_range: (i64, i64),
    pub m_range: (i64, i64),
    /// Cells ordered by `m`, then `t`.
    pub cells: Vec<HsCell>,
}

impl HsTable {
    pub fn get(&self, t: i64, m: i64) -> Option<&HsCell> {
        let (t0, t1) = self.t_range;
        let (m0, m1) = self.m_range;
        if t < t0 || t > t1 || m < m0 || m > m1 {
            return None;
        }
        let width = (t1 - t0 + 1) as usize;
        self.cells.get((m - m0) as usize * width + (t - t0) as usize)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationAudit {
    pub checked: usize,
    /// `(t, m, hs(t, m), hs(t - d, m + 2))` for every violation.
    pub failures: Vec<(i64, i64, usize, usize)>,
}

impl RelationAudit {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone)]
pub enum SectorAlgebra {
    /// `Jac = k` in degree 0 (the fixed locus is the origin).
    Point,
    Algebra(Arc<JacobianAlgebra>),
}

impl SectorAlgebra {
    pub fn dim(&self, e: i64) -> usize {
        match self {
            SectorAlgebra::Point => usize::from(e == 0),
            SectorAlgebra::Algebra(j) => j.dim(e),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SectorModel {
    pub data: SectorData,
    pub algebra: SectorAlgebra,
}

/// One graded piece of `sum_{t >= 0} Hom(D, D(t))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubalgebraPiece {
    pub t: u64,
    pub jacobian_dim: usize,
    pub exceptional: usize,
    pub total: usize,
    /// Standard monomials spanning the Jacobian part.
    pub basis: Vec<String>,
}

/// `e_left * e_right = sum product[k] * e_k` in the Jacobian part.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureConstant {
    pub left: (u64, usize),
    pub right: (u64, usize),
    pub product: Vec<(usize, Rational)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SubalgebraPresentation {
    pub t_max: u64,
    /// Whether the closed-form split (Jacobian piece plus `k^{d-1}` in the
    /// middle degree) applies and was cross-checked.
    pub closed_form: bool,
    pub warnings: Vec<String>,
    pub pieces: Vec<SubalgebraPiece>,
    pub structure_constants: Vec<StructureConstant>,
}

/// An element of one graded piece, split into its Jacobian and exceptional parts.
#[derive(Clone, Debug, PartialEq)]
pub struct SubalgebraElement {
    pub t: u64,
    pub jacobian: Vec<Rational>,
    pub exceptional: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum SubalgebraProduct {
    Defined(SubalgebraElement),
    /// At least one factor has an exceptional component; no product rule is
    /// known there.
    Undefined,
}

/// A certified weighted-homogeneous potential together with its sectors.
#[derive(Debug)]
pub struct LgModel {
    omega: WeightedPolynomial,
    jacobian: Arc<JacobianAlgebra>,
    certificate: IsolationCertificate,
    sectors: Vec<SectorModel>,
}

impl LgModel {
    /// Certifies the isolated singularity and prepares every sector.
    pub fn new(omega: &WeightedPolynomial) -> Result<Self> {
        let jacobian = Arc::new(JacobianAlgebra::new(omega)?);
        let certificate = jacobian.certify();
        if !certificate.isolated {
            return Err(Error::NotIsolated(Box::new(certificate)));
        }
        let mut sectors = Vec::new();
        let data = sector_data(omega)?;
        let identity = data.iter().position(|s| s.sector.is_identity()).expect("identity sector");
        let order = std::iter::once(identity).chain((0..data.len()).filter(|&i| i != identity));
        for i in order {
            let data = data[i].clone();
            let algebra = if data.sector.is_identity() {
                SectorAlgebra::Algebra(jacobian.clone())
            } else if data.sector.fixed_vars.is_empty() {
                SectorAlgebra::Point
            } else if data.omega_g.is_zero() {
                let mut cert = certificate.clone();
                cert.isolated = false;
                cert.reason = Some(format!(
                    "potential vanishes on the fixed locus {:?} of sector {}",
                    data.sector.fixed_vars, data.sector.g_index
                ));
                return Err(Error::NotIsolated(Box::new(cert)));
            } else {
                let j = JacobianAlgebra::new(&data.omega_g)?;
                let cert = j.certify();
                if !cert.isolated {
                    return Err(Error::NotIsolated(Box::new(cert)));
                }
                SectorAlgebra::Algebra(Arc::new(j))
            };
            sectors.push(SectorModel { data, algebra });
        }
        Ok(LgModel {
            omega: omega.clone(),
            jacobian,
            certificate,
            sectors,
        })
    }

    pub fn omega(&self) -> &WeightedPolynomial {
        &self.omega
    }

    pub fn weights(&self) -> &[u32] {
        self.omega.weights()
    }

    pub fn degree(&self) -> u32 {
        self.omega.degree() as u32
    }

    pub fn n_vars(&self) -> usize {
        self.omega.n_vars()
    }

    pub fn is_unweighted(&self) -> bool {
        self.weights().iter().all(|&q| q == 1)
    }

    pub fn jacobian(&self) -> &Arc<JacobianAlgebra> {
        &self.jacobian
    }

    pub fn certificate(&self) -> &IsolationCertificate {
        &self.certificate
    }

    /// Sectors with the identity first, then `g_index = 1, ..., d - 1`.
    pub fn sectors(&self) -> &[SectorModel] {
        &self.sectors
    }

    /// The Serre functor `D(-sum q_j)[n+1]`.
    pub fn serre(&self) -> FunctorWord {
        let total: i64 = self.weights().iter().map(|&q| q as i64).sum();
        FunctorWord::new(-total, self.n_vars() as i64)
    }

    /// `S^a[b]`, normalized.
    pub fn serre_power_word(&self, a: i64, b: i64) -> FunctorWord {
        self.serre()
            .pow(a)
            .compose(FunctorWord::new(0, b))
            .normalize(self.degree())
    }

    /// `dim Hom(D, D(t)[m])` with its per-sector breakdown.
    pub fn hs_dim(&self, t: i64, m: i64) -> HsCell {
        let d = self.degree() as i64;
        let per_sector: Vec<SectorContribution> = self
            .sectors
            .iter()
            .map(|s| {
                let rk = s.data.sector.rk_w as i64;
                let k = s.data.sector.character;
                if (m - rk).rem_euclid(2) != 0 {
                    return SectorContribution {
                        g_index: s.data.sector.g_index,
                        participates: false,
                        evaluated_degree: None,
                        contribution: 0,
                    };
                }
                let e = t - k + d * (m - rk) / 2;
                SectorContribution {
                    g_index: s.data.sector.g_index,
                    participates: true,
                    evaluated_degree: Some(e),
                    contribution: s.algebra.dim(e),
                }
            })
            .collect();
        HsCell {
            t,
            m,
            total: per_sector.iter().map(|s| s.contribution).sum(),
            per_sector,
        }
    }

    pub fn hs_word(&self, w: FunctorWord) -> HsCell {
        self.hs_dim(w.twist, w.shift)
    }

    /// `HS(i, j) = Hom(Id, S^i[j])`.
    pub fn hs_bigraded(&self, i: i64, j: i64) -> HsCell {
        self.hs_word(self.serre_power_word(i, j))
    }

    /// `HH^m = Hom(Id, Id[m])`.
    pub fn hochschild_cohomology(&self, m: i64) -> HsCell {
        self.hs_bigraded(0, m)
    }

    /// `HH_m = Hom(Id, S[m])`.
    pub fn hochschild_homology(&self, m: i64) -> HsCell {
        self.hs_bigraded(1, m)
    }

    /// `gcd(sum q_j, d) = 1`, so that `D(1)` is a word in `S` and `[1]`.
    pub fn twist_is_serre_word(&self) -> bool {
        let total: u64 = self.weights().iter().map(|&q| q as u64).sum();
        total.gcd(&(self.degree() as u64)) == 1
    }

    /// Whether the unweighted three-case formula for `Hom(D, D(t))` applies.
    pub fn closed_form_applies(&self) -> bool {
        self.is_unweighted() && self.twist_is_serre_word()
    }

    /// Multiplicity of the extra `k^{d-1}` summand predicted by the closed
    /// form for unweighted hypersurfaces with `gcd(n+1, d) = 1`.
    pub fn closed_form_exceptional(&self, t: i64) -> Option<usize> {
        if !self.closed_form_applies() {
            return None;
        }
        let n1 = self.n_vars() as i64;
        let d = self.degree() as i64;
        Some(if n1 % 2 == 0 && t * 2 == (d - 2) * n1 {
            (d - 1) as usize
        } else {
            0
        })
    }

    /// `Hom(D, D(t))` cell; cross-checked against the closed form when it applies.
    pub fn hom_delta_delta_cell(&self, t: i64) -> Result<HsCell> {
        let cell = self.hs_dim(t, 0);
        if let Some(extra) = self.closed_form_exceptional(t) {
            let expected = self.jacobian.dim(t) + extra;
            if expected != cell.total {
                return Err(Error::Inconsistency(format!(
                    "Hom(D, D({t})) = {} from sectors but {expected} from the closed form",
                    cell.total
                )));
            }
        }
        Ok(cell)
    }

    pub fn hom_delta_delta(&self, t: i64) -> Result<usize> {
        Ok(self.hom_delta_delta_cell(t)?.total)
    }

    pub fn hs_table(&self, t_range: (i64, i64), m_range: (i64, i64)) -> HsTable {
        let cells = (m_range.0..=m_range.1)
            .flat_map(|m| (t_range.0..=t_range.1).map(move |t| (t, m)))
            .map(|(t, m)| self.hs_dim(t, m))
            .collect();
        HsTable {
            t_range,
            m_range,
            cells,
        }
    }

    /// Checks `hs(t, m) = hs(t - d, m + 2)` on a grid.
    pub fn relation_audit(&self, t_range: (i64, i64), m_range: (i64, i64)) -> RelationAudit {
        let d = self.degree() as i64;
        let mut audit = RelationAudit {
            checked: 0,
            failures: Vec::new(),
        };
        for m in m_range.0..=m_range.1 {
            for t in t_range.0..=t_range.1 {
                let a = self.hs_dim(t, m);
                let b = self.hs_dim(t - d, m + 2);
                audit.checked += 1;
                if a.total != b.total || a.breakdown() != b.breakdown() {
                    audit.failures.push((t, m, a.total, b.total));
                }
            }
        }
        audit
    }

    /// Graded pieces of `sum_{t >= 0} Hom(D, D(t))` for `t <= t_max`, split into
    /// the Jacobian piece and the extra summands from non-identity sectors.
    pub fn subalgebra(&self, t_max: u64, structure_constants: bool) -> Result<SubalgebraPresentation> {
        let mut warnings = Vec::new();
        let closed_form = self.closed_form_applies();
        if !self.twist_is_serre_word() {
            warnings.push(format!(
                "gcd(sum of weights, d) = gcd({}, {}) != 1: D(1) is not a word in the Serre functor, so these pieces need not form a subalgebra of the Serre algebra",
                self.weights().iter().map(|&q| q as u64).sum::<u64>(),
                self.degree()
            ));
        } else if !closed_form {
            warnings.push("weighted input: the split is read off the sectors; the unweighted closed form is not applied".into());
        }
        let mut pieces = Vec::new();
        for t in 0..=t_max {
            let cell = if closed_form {
                self.hom_delta_delta_cell(t as i64)?
            } else {
                self.hs_dim(t as i64, 0)
            };
            let jacobian_dim = cell.per_sector[0].contribution;
            let basis = self.jacobian.basis(t);
            if basis.len() != jacobian_dim {
                return Err(Error::Inconsistency(format!(
                    "identity sector gives {jacobian_dim} in degree {t} but the quotient basis has {}",
                    basis.len()
                )));
            }
            pieces.push(SubalgebraPiece {
                t,
                jacobian_dim,
                exceptional: cell.total - jacobian_dim,
                total: cell.total,
                basis: basis.representatives().iter().map(|m| m.to_string()).collect(),
            });
        }
        let mut constants = Vec::new();
        if structure_constants {
            for t1 in 0..=t_max {
                for t2 in t1..=t_max - t1 {
                    let (b1, b2) = (pieces[t1 as usize].jacobian_dim, pieces[t2 as usize].jacobian_dim);
                    for i in 0..b1 {
                        for j in 0..b2 {
                            if t1 == t2 && j < i {
                                continue;
                            }
                            let prod =
                                self.jacobian
                                    .multiply(&unit_vector(b1, i), t1, &unit_vector(b2, j), t2)?;
                            constants.push(StructureConstant {
                                left: (t1, i),
                                right: (t2, j),
                                product: prod
                                    .into_iter()
                                    .enumerate()
                                    .filter(|(_, c)| !c.is_zero())
                                    .collect(),
                            });
                        }
                    }
                }
            }
        }
        Ok(SubalgebraPresentation {
            t_max,
            closed_form,
            warnings,
            pieces,
            structure_constants: constants,
        })
    }

    /// Element of the degree-`t` piece with the given Jacobian coordinates and
    /// no exceptional component.
    pub fn jacobian_element(&self, t: u64, coords: Vec<Rational>) -> SubalgebraElement {
        let extra = self.hs_dim(t as i64, 0).total - self.jacobian.dim(t as i64);
        SubalgebraElement {
            t,
            jacobian: coords,
            exceptional: vec![Rational::zero(); extra],
        }
    }

    /// Product in `sum_t Hom(D, D(t))`, defined on the Jacobian part only.
    pub fn subalgebra_product(
        &self,
        a: &SubalgebraElement,
        b: &SubalgebraElement,
    ) -> Result<SubalgebraProduct> {
        if a.exceptional.iter().chain(&b.exceptional).any(|c| !c.is_zero()) {
            return Ok(SubalgebraProduct::Undefined);
        }
        let coords = self.jacobian.multiply(&a.jacobian, a.t, &b.jacobian, b.t)?;
        Ok(SubalgebraProduct::Defined(self.jacobian_element(a.t + b.t, coords)))
    }
}

fn unit_vector(len: usize, k: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); len];
    v[k] = Rational::from_integer(1.into());
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, rat};

    fn fermat(n_vars: usize, d: u64) -> LgModel {
        LgModel::new(&WeightedPolynomial::fermat(&vec![1; n_vars], d, &[]).unwrap()).unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(FunctorWord::new(3, 0).normalize(3), FunctorWord::new(0, 2));
        assert_eq!(FunctorWord::new(0, 0).normalize(3), FunctorWord::IDENTITY);
        assert_eq!(FunctorWord::new(-1, 0).normalize(3), FunctorWord::new(2, -2));
    }

    #[test]
    fn serre_word_examples() {
        // cubic fourfold: S = D(-6)[6] = [2]
        assert_eq!(serre_power_word(1, 0, 5, 3), FunctorWord::new(0, 2));
        assert_eq!(serre_power_word(0, 7, 5, 3), FunctorWord::new(0, 7));
    }

    #[test]
    fn bezout_word_reproduces_twist() {
        for (n, d) in [(4u32, 3u32), (3, 3), (5, 5), (6, 4)] {
            for t in -10..=10 {
                let (a, b) = twist_as_serre_word(t, n, d).unwrap();
                assert_eq!(serre_power_word(a, b, n, d), FunctorWord::twist(t).normalize(d));
            }
        }
        assert!(twist_as_serre_word(1, 2, 3).is_none());
    }

    #[test]
    fn cubic_fourfold_cells() {
        let x = fermat(6, 3);
        let c = x.hs_dim(3, 0);
        assert_eq!((c.total, c.breakdown()), (22, vec![20, 1, 1]));
        assert_eq!(x.hs_dim(0, 0).total, 1);
        assert_eq!(x.hs_bigraded(0, 2).total, 22);
        assert!(x.hs_bigraded(0, 0).total >= 1);
        // HH_m is Hom(D, D(-6)[6 + m])
        assert_eq!(x.hs_bigraded(1, -4).breakdown(), x.hs_dim(-6, 2).breakdown());
        assert_eq!(x.hs_bigraded(1, 0).total, 22);
    }

    #[test]
    fn cubic_surface_middle_degree() {
        let x = fermat(4, 3);
        assert_eq!(x.hs_dim(2, 0).total, 8);
        assert_eq!(x.hom_delta_delta(2).unwrap(), 8);
        assert_eq!(x.hom_delta_delta(1).unwrap(), 4);
    }

    #[test]
    fn parity_gate_flips_sector_set() {
        let x = fermat(5, 3);
        for m in -3..3 {
            let a = x.hs_dim(1, m);
            let b = x.hs_dim(1, m + 1);
            for (sa, sb) in a.per_sector.iter().zip(&b.per_sector) {
                assert_ne!(sa.participates, sb.participates);
                if !sa.participates {
                    assert_eq!(sa.contribution, 0);
                }
            }
        }
    }

    #[test]
    fn relation_holds_on_grid() {
        let x = fermat(4, 3);
        let audit = x.relation_audit((-6, 7), (-4, 4));
        assert!(audit.passed(), "{:?}", audit.failures);
        assert_eq!(audit.checked, 14 * 9);
    }

    #[test]
    fn table_totals_are_sums() {
        let x = fermat(4, 3);
        let table = x.hs_table((-3, 6), (-2, 2));
        assert_eq!(table.cells.len(), 10 * 5);
        for c in &table.cells {
            assert_eq!(c.total, c.breakdown().iter().sum::<usize>());
        }
        assert_eq!(table.get(2, 0).unwrap().total, 8);
        assert!(table.get(7, 0).is_none());
    }

    #[test]
    fn subalgebra_of_cubic_threefold() {
        let x = fermat(5, 3);
        let s = x.subalgebra(5, true).unwrap();
        assert!(s.closed_form);
        let dims: Vec<usize> = s.pieces.iter().map(|p| p.jacobian_dim).collect();
        assert_eq!(dims, vec![1, 5, 10, 10, 5, 1]);
        assert!(s.pieces.iter().all(|p| p.exceptional == 0));
        // x0 * x1 = x0*x1
        let c = s
            .structure_constants
            .iter()
            .find(|c| c.left == (1, 0) && c.right == (1, 1))
            .unwrap();
        let b2 = x.jacobian().basis(2);
        let k = (0..b2.len()).find(|&k| b2.representative(k).to_string() == "x0*x1").unwrap();
        assert_eq!(c.product, vec![(k, rat(1))]);
    }

    #[test]
    fn subalgebra_exceptional_piece_of_cubic_surface() {
        let x = fermat(4, 3);
        let s = x.subalgebra(4, false).unwrap();
        let ex: Vec<usize> = s.pieces.iter().map(|p| p.exceptional).collect();
        assert_eq!(ex, vec![0, 0, 2, 0, 0]);
        let one = x.jacobian_element(0, x.jacobian().unit());
        let mut mixed = x.jacobian_element(2, vec![rat(0); 6]);
        mixed.exceptional[0] = rat(1);
        assert_eq!(x.subalgebra_product(&one, &mixed).unwrap(), SubalgebraProduct::Undefined);
        let x0 = x.jacobian_element(1, x.jacobian().class_of(&parse_poly("x0", &[1; 4], 1).unwrap()).unwrap());
        match x.subalgebra_product(&one, &x0).unwrap() {
            SubalgebraProduct::Defined(e) => assert_eq!(e, x0),
            SubalgebraProduct::Undefined => panic!("unit product must be defined"),
        }
    }

    #[test]
    fn gcd_violation_warns() {
        let x = fermat(3, 3);
        let s = x.subalgebra(3, false).unwrap();
        assert!(!s.closed_form);
        assert_eq!(s.warnings.len(), 1);
        assert_eq!(s.pieces.len(), 4);
    }

    #[test]
    fn singular_input_is_refused() {
        let p = parse_poly("x0^3", &[1, 1], 3).unwrap();
        assert!(matches!(LgModel::new(&p), Err(Error::NotIsolated(_))));
    }
}
