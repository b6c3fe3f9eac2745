//! Command-line front end: job specifications, reports and their renderings.
//!
//! A [`JobSpec`] fully determines a run. [`run`] turns it into a [`Report`],
//! which renders as an aligned table, JSON or CSV. JSON output is a pure
//! function of the job unless timing is requested.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hsalgebra::{FunctorWord, HsCell, LgModel, RelationAudit, SubalgebraPiece};
use crate::koszul::build_koszul;
use crate::milnor::{poincare_oracle, IsolationCertificate, JacobianAlgebra};
use crate::orbifold::sector_data;
use crate::poly::{parse_poly_inferred, Rational, WeightedPolynomial};
use crate::torelli::{
    matrix_to_strings, search_equivalence, verify_equivalence, Fingerprint,
    SearchStrategy, VerifyMode,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    #[default]
    Jac,
    Hilbert,
    Sectors,
    HsTable,
    HsDim,
    Subalgebra,
    Koszul,
    TorelliVerify,
    TorelliSearch,
    TorelliFingerprint,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum OutputFormat {
    #[default]
    Human,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum StrategyName {
    #[value(alias = "a")]
    Bounded,
    #[value(alias = "b")]
    Symbolic,
    #[value(alias = "c")]
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum ModeName {
    ExactPullback,
    IdealEquality,
}

impl From<ModeName> for VerifyMode {
    fn from(m: ModeName) -> Self {
        match m {
            ModeName::ExactPullback => VerifyMode::ExactPullback,
            ModeName::IdealEquality => VerifyMode::IdealEquality,
        }
    }
}

/// Everything needed to reproduce a run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobSpec {
    pub command: Command,
    pub poly: String,
    pub poly2: Option<String>,
    pub weights: Option<Vec<u32>>,
    pub degree: Option<u64>,
    pub t: Option<i64>,
    pub m: Option<i64>,
    pub t_min: Option<i64>,
    pub t_max: Option<i64>,
    pub m_range: Option<(i64, i64)>,
    pub format: OutputFormat,
    pub seed: u64,
    pub audit: bool,
    pub bases: bool,
    pub hochschild: bool,
    pub structure_constants: bool,
    pub strategy: Option<StrategyName>,
    pub budget: Option<u64>,
    pub trials: Option<u64>,
    pub matrix: Option<String>,
    pub scalar: Option<String>,
    pub mode: Option<ModeName>,
    pub timing: bool,
}

fn value<T: FromStr>(key: &str, v: &str) -> Result<T> {
    v.parse()
        .map_err(|_| Error::InvalidArgument(format!("bad value for {key}: {v:?}")))
}

fn enum_value<T: ValueEnum>(key: &str, v: &str) -> Result<T> {
    T::from_str(v, true).map_err(|_| Error::InvalidArgument(format!("bad value for {key}: {v:?}")))
}

fn flag(key: &str, v: &str) -> Result<bool> {
    match v {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        _ => Err(Error::InvalidArgument(format!("bad value for {key}: {v:?}"))),
    }
}

/// Parses `a..b` (inclusive) into `(a, b)`.
pub fn parse_range(s: &str) -> std::result::Result<(i64, i64), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected a..b, got {s:?}"))?;
    let a: i64 = a.trim().parse().map_err(|_| format!("bad range start in {s:?}"))?;
    let b: i64 = b.trim().parse().map_err(|_| format!("bad range end in {s:?}"))?;
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok((a, b))
}

impl JobSpec {
    /// Reads the flat `key = value` job format; `#` starts a comment line.
    pub fn from_job_text(text: &str) -> Result<Self> {
        let mut job = JobSpec::default();
        let mut seen_command = false;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| {
                Error::InvalidArgument(format!("line {}: expected key = value", lineno + 1))
            })?;
            let (k, v) = (k.trim(), v.trim());
            match k {
                "command" => {
                    job.command = enum_value(k, v)?;
                    seen_command = true;
                }
                "poly" => job.poly = v.to_string(),
                "poly2" => job.poly2 = Some(v.to_string()),
                "weights" => {
                    job.weights = Some(v.split(',').map(|w| value(k, w.trim())).collect::<Result<_>>()?)
                }
                "degree" => job.degree = Some(value(k, v)?),
                "t" => job.t = Some(value(k, v)?),
                "m" => job.m = Some(value(k, v)?),
                "t_min" => job.t_min = Some(value(k, v)?),
                "t_max" => job.t_max = Some(value(k, v)?),
                "m_range" => job.m_range = Some(parse_range(v).map_err(Error::InvalidArgument)?),
                "format" => job.format = enum_value(k, v)?,
                "seed" => job.seed = value(k, v)?,
                "audit" => job.audit = flag(k, v)?,
                "bases" => job.bases = flag(k, v)?,
                "hochschild" => job.hochschild = flag(k, v)?,
                "structure_constants" => job.structure_constants = flag(k, v)?,
                "strategy" => job.strategy = Some(enum_value(k, v)?),
                "budget" => job.budget = Some(value(k, v)?),
                "trials" => job.trials = Some(value(k, v)?),
                "matrix" => job.matrix = Some(v.to_string()),
                "scalar" => job.scalar = Some(v.to_string()),
                "mode" => job.mode = Some(enum_value(k, v)?),
                "timing" => job.timing = flag(k, v)?,
                _ => {
                    return Err(Error::InvalidArgument(format!(
                        "line {}: unknown key {k:?}",
                        lineno + 1
                    )))
                }
            }
        }
        if !seen_command {
            return Err(Error::InvalidArgument("job file has no command".into()));
        }
        Ok(job)
    }

    /// The job in the flat `key = value` format; `from_job_text` inverts it.
    pub fn to_job_text(&self) -> String {
        let mut out = String::new();
        let enum_name = |v: &dyn erased::Named| v.name();
        let _ = writeln!(out, "command = {}", enum_name(&self.command));
        let _ = writeln!(out, "poly = {}", self.poly);
        let opt = |out: &mut String, k: &str, v: Option<String>| {
            if let Some(v) = v {
                let _ = writeln!(out, "{k} = {v}");
            }
        };
        opt(&mut out, "poly2", self.poly2.clone());
        opt(
            &mut out,
            "weights",
            self.weights
                .as_ref()
                .map(|w| w.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(",")),
        );
        opt(&mut out, "degree", self.degree.map(|v| v.to_string()));
        opt(&mut out, "t", self.t.map(|v| v.to_string()));
        opt(&mut out, "m", self.m.map(|v| v.to_string()));
        opt(&mut out, "t_min", self.t_min.map(|v| v.to_string()));
        opt(&mut out, "t_max", self.t_max.map(|v| v.to_string()));
        opt(&mut out, "m_range", self.m_range.map(|(a, b)| format!("{a}..{b}")));
        let _ = writeln!(out, "format = {}", enum_name(&self.format));
        let _ = writeln!(out, "seed = {}", self.seed);
        for (k, v) in [
            ("audit", self.audit),
            ("bases", self.bases),
            ("hochschild", self.hochschild),
            ("structure_constants", self.structure_constants),
            ("timing", self.timing),
        ] {
            let _ = writeln!(out, "{k} = {v}");
        }
        opt(&mut out, "strategy", self.strategy.map(|s| enum_name(&s)));
        opt(&mut out, "budget", self.budget.map(|v| v.to_string()));
        opt(&mut out, "trials", self.trials.map(|v| v.to_string()));
        opt(&mut out, "matrix", self.matrix.clone());
        opt(&mut out, "scalar", self.scalar.clone());
        opt(&mut out, "mode", self.mode.map(|m| enum_name(&m)));
        out
    }
}

mod erased {
    use clap::ValueEnum;

    pub trait Named {
        fn name(&self) -> String;
    }

    impl<T: ValueEnum> Named for T {
        fn name(&self) -> String {
            self.to_possible_value()
                .map(|v| v.get_name().to_string())
                .unwrap_or_default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeBasis {
    pub t: u64,
    pub monomials: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectorRow {
    pub g_index: u32,
    pub order: u32,
    pub identity: bool,
    pub fixed_vars: Vec<usize>,
    pub rk_w: usize,
    pub character: i64,
    /// Restricted potential in renumbered fixed variables.
    pub restricted: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HochschildRow {
    pub m: i64,
    pub cohomology: HsCell,
    pub homology: HsCell,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureConstantRow {
    pub left: (u64, usize),
    pub right: (u64, usize),
    /// `(index, coefficient)` over the basis in degree `left.0 + right.0`.
    pub product: Vec<(usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulRow {
    pub p: usize,
    pub t: i64,
    pub dim: usize,
    pub cohomology: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulAudit {
    /// First `(p, t)` where `d o d` fails, if any.
    pub d_squared_failure: Option<(usize, i64)>,
    pub euler_characteristic_ok: bool,
    pub h0_matches_jacobian: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRow {
    pub matrix: Vec<Vec<String>>,
    pub scalar: String,
    pub mode: VerifyMode,
    pub verified: bool,
}

/// Per-command result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Payload {
    Jac {
        weights: Vec<u32>,
        degree: u64,
        socle_degree: i64,
        milnor_number: Option<usize>,
        hilbert: Vec<usize>,
        bases: Option<Vec<DegreeBasis>>,
    },
    Hilbert {
        hilbert: Vec<usize>,
        oracle: Vec<i64>,
    },
    Sectors {
        sectors: Vec<SectorRow>,
    },
    HsTable {
        t_range: (i64, i64),
        m_range: (i64, i64),
        cells: Vec<HsCell>,
        audit: Option<RelationAudit>,
        hochschild: Option<Vec<HochschildRow>>,
    },
    HsDim {
        word: FunctorWord,
        cell: HsCell,
    },
    Subalgebra {
        closed_form: bool,
        warnings: Vec<String>,
        pieces: Vec<SubalgebraPiece>,
        structure_constants: Option<Vec<StructureConstantRow>>,
    },
    Koszul {
        length: usize,
        shifts: Vec<i64>,
        rows: Vec<KoszulRow>,
        audit: Option<KoszulAudit>,
    },
    TorelliFingerprint {
        fingerprint: Fingerprint,
    },
    TorelliVerify {
        mode: VerifyMode,
        matrix: Vec<Vec<String>>,
        scalar: String,
        holds: bool,
    },
    TorelliSearch {
        strategy: SearchStrategy,
        fingerprints_equal: bool,
        outcome: String,
        witness: Option<WitnessRow>,
        candidates_tried: u64,
        scope: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub job: JobSpec,
    pub certification: Option<IsolationCertificate>,
    pub result: Payload,
    pub timing_ms: Option<u64>,
}

impl Report {
    /// 2 when the report carries a failed isolation certificate.
    pub fn exit_code(&self) -> i32 {
        match &self.certification {
            Some(c) if !c.isolated => 2,
            _ => 0,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

type Progress<'a> = &'a dyn Fn(&str);

fn main_poly(job: &JobSpec) -> Result<WeightedPolynomial> {
    if job.poly.trim().is_empty() {
        return Err(Error::InvalidArgument("no polynomial given (use --poly)".into()));
    }
    parse_poly_inferred(&job.poly, job.weights.as_deref(), job.degree)
}

fn second_poly(job: &JobSpec, first: &WeightedPolynomial) -> Result<WeightedPolynomial> {
    let text = job
        .poly2
        .as_deref()
        .ok_or_else(|| Error::InvalidArgument("this command needs --poly2".into()))?;
    parse_poly_inferred(text, Some(first.weights()), Some(first.degree()))
}

/// Rows separated by `;`, entries by `,`, each entry an integer or `a/b`.
pub fn parse_matrix(text: &str) -> Result<Vec<Vec<Rational>>> {
    text.split(';')
        .map(|row| row.split(',').map(|v| parse_rational(v.trim())).collect())
        .collect()
}

pub fn parse_rational(v: &str) -> Result<Rational> {
    Rational::from_str(v).map_err(|_| Error::InvalidArgument(format!("not a rational number: {v:?}")))
}

/// Runs a job. Progress notes go to `progress`, never into the report.
pub fn run(job: &JobSpec, progress: Progress) -> Result<Report> {
    let start = Instant::now();
    let (certification, result) = match job.command {
        Command::Jac => cmd_jac(job, progress)?,
        Command::Hilbert => cmd_hilbert(job, progress)?,
        Command::Sectors => cmd_sectors(job)?,
        Command::HsTable => cmd_hs_table(job, progress)?,
        Command::HsDim => cmd_hs_dim(job)?,
        Command::Subalgebra => cmd_subalgebra(job, progress)?,
        Command::Koszul => cmd_koszul(job, progress)?,
        Command::TorelliVerify | Command::TorelliSearch | Command::TorelliFingerprint => {
            cmd_torelli(job, progress)?
        }
    };
    Ok(Report {
        schema_version: SCHEMA_VERSION,
        job: job.clone(),
        certification,
        result,
        timing_ms: job.timing.then(|| start.elapsed().as_millis() as u64),
    })
}

type Out = (Option<IsolationCertificate>, Payload);

fn cmd_jac(job: &JobSpec, progress: Progress) -> Result<Out> {
    let omega = main_poly(job)?;
    let jac = JacobianAlgebra::new(&omega)?;
    progress("certifying isolated singularity");
    let cert = jac.certify();
    let sigma = jac.socle_degree();
    let t_max = job.t_max.unwrap_or(sigma.max(0)).max(0) as u64;
    let hilbert = jac.hilbert_function(t_max);
    let bases = job.bases.then(|| {
        (0..=t_max)
            .map(|t| {
                progress(&format!("basis in degree {t}"));
                DegreeBasis {
                    t,
                    monomials: jac.basis(t).representatives().iter().map(|m| m.to_string()).collect(),
                }
            })
            .collect()
    });
    let milnor_number = cert.isolated.then(|| cert.hilbert.iter().sum());
    Ok((
        Some(cert),
        Payload::Jac {
            weights: omega.weights().to_vec(),
            degree: omega.degree(),
            socle_degree: sigma,
            milnor_number,
            hilbert,
            bases,
        },
    ))
}

fn cmd_hilbert(job: &JobSpec, progress: Progress) -> Result<Out> {
    let omega = main_poly(job)?;
    let jac = JacobianAlgebra::new(&omega)?;
    let cert = jac.certify();
    let t_max = job.t_max.unwrap_or(jac.socle_degree().max(0)).max(0) as u64;
    progress(&format!("Hilbert function through degree {t_max}"));
    let hilbert = jac.hilbert_function(t_max);
    let mut oracle = poincare_oracle(omega.weights(), omega.degree());
    oracle.resize(t_max as usize + 1, 0);
    Ok((Some(cert), Payload::Hilbert { hilbert, oracle }))
}

fn cmd_sectors(job: &JobSpec) -> Result<Out> {
    let omega = main_poly(job)?;
    let sectors = sector_data(&omega)?
        .into_iter()
        .map(|s| SectorRow {
            identity: s.sector.is_identity(),
            g_index: s.sector.g_index,
            order: s.sector.order,
            fixed_vars: s.sector.fixed_vars,
            rk_w: s.sector.rk_w,
            character: s.sector.character,
            restricted: s.omega_g.to_string(),
        })
        .collect();
    Ok((None, Payload::Sectors { sectors }))
}

fn model(job: &JobSpec, progress: Progress) -> Result<LgModel> {
    let omega = main_poly(job)?;
    progress("certifying the potential and its sectors");
    LgModel::new(&omega)
}

fn cmd_hs_table(job: &JobSpec, progress: Progress) -> Result<Out> {
    let lg = model(job, progress)?;
    let sigma = lg.jacobian().socle_degree();
    let d = lg.degree() as i64;
    let t_range = (job.t_min.unwrap_or(0), job.t_max.unwrap_or(sigma + d));
    let m_range = job.m_range.unwrap_or((-2, 2));
    if t_range.0 > t_range.1 {
        return Err(Error::InvalidArgument(format!("empty t range {t_range:?}")));
    }
    let mut cells = Vec::new();
    for m in m_range.0..=m_range.1 {
        progress(&format!("row m = {m}"));
        cells.extend((t_range.0..=t_range.1).map(|t| lg.hs_dim(t, m)));
    }
    let audit = job.audit.then(|| {
        progress("auditing hs(t, m) = hs(t - d, m + 2)");
        lg.relation_audit(t_range, m_range)
    });
    if let Some(a) = &audit {
        if !a.passed() {
            let (t, m, x, y) = a.failures[0];
            return Err(Error::Inconsistency(format!(
                "relation audit failed at (t, m) = ({t}, {m}): {x} vs {y}"
            )));
        }
    }
    let hochschild = job.hochschild.then(|| {
        (m_range.0..=m_range.1)
            .map(|m| HochschildRow {
                m,
                cohomology: lg.hochschild_cohomology(m),
                homology: lg.hochschild_homology(m),
            })
            .collect()
    });
    Ok((
        Some(lg.certificate().clone()),
        Payload::HsTable {
            t_range,
            m_range,
            cells,
            audit,
            hochschild,
        },
    ))
}

fn cmd_hs_dim(job: &JobSpec) -> Result<Out> {
    let lg = model(job, &|_| {})?;
    let t = job.t.ok_or_else(|| Error::InvalidArgument("hs-dim needs --t".into()))?;
    let m = job.m.unwrap_or(0);
    let cell = lg.hs_dim(t, m);
    Ok((
        Some(lg.certificate().clone()),
        Payload::HsDim {
            word: FunctorWord::new(t, m).normalize(lg.degree()),
            cell,
        },
    ))
}

fn cmd_subalgebra(job: &JobSpec, progress: Progress) -> Result<Out> {
    let lg = model(job, progress)?;
    let sigma = lg.jacobian().socle_degree().max(0);
    let t_max = job.t_max.unwrap_or(sigma + lg.degree() as i64).max(0) as u64;
    progress(&format!("graded pieces through t = {t_max}"));
    let s = lg.subalgebra(t_max, job.structure_constants)?;
    let structure_constants = job.structure_constants.then(|| {
        s.structure_constants
            .iter()
            .map(|c| StructureConstantRow {
                left: c.left,
                right: c.right,
                product: c.product.iter().map(|(k, v)| (*k, v.to_string())).collect(),
            })
            .collect()
    });
    Ok((
        Some(lg.certificate().clone()),
        Payload::Subalgebra {
            closed_form: s.closed_form,
            warnings: s.warnings,
            pieces: s.pieces,
            structure_constants,
        },
    ))
}

fn cmd_koszul(job: &JobSpec, progress: Progress) -> Result<Out> {
    let omega = main_poly(job)?;
    let jac = JacobianAlgebra::new(&omega)?;
    let cert = jac.certify();
    let k = build_koszul(&omega);
    let t_range = (
        job.t_min.unwrap_or(0),
        job.t_max.unwrap_or(jac.socle_degree().max(0)),
    );
    let mut rows = Vec::new();
    for t in t_range.0..=t_range.1 {
        progress(&format!("internal degree {t}"));
        for p in 0..=k.len() {
            rows.push(KoszulRow {
                p,
                t,
                dim: k.block_dim(p, t),
                cohomology: k.cohomology_rank(p, t),
            });
        }
    }
    rows.sort_by_key(|r| (r.p, r.t));
    let audit = if job.audit {
        progress("auditing d o d = 0");
        let a = KoszulAudit {
            d_squared_failure: k.check_d_squared(t_range.1).err(),
            euler_characteristic_ok: (t_range.0..=t_range.1).all(|t| {
                let (x, y) = k.euler_characteristic(t);
                x == y
            }),
            h0_matches_jacobian: rows
                .iter()
                .filter(|r| r.p == 0)
                .all(|r| r.cohomology == jac.dim(r.t)),
        };
        if a.d_squared_failure.is_some() || !a.euler_characteristic_ok || !a.h0_matches_jacobian {
            return Err(Error::Inconsistency(format!("Koszul audit failed: {a:?}")));
        }
        Some(a)
    } else {
        None
    };
    Ok((
        Some(cert),
        Payload::Koszul {
            length: k.len(),
            shifts: k.shifts().to_vec(),
            rows,
            audit,
        },
    ))
}

fn cmd_torelli(job: &JobSpec, progress: Progress) -> Result<Out> {
    let omega = main_poly(job)?;
    match job.command {
        Command::TorelliFingerprint => {
            let lg = model(job, progress)?;
            let fp = crate::torelli::fingerprint_of(&lg)?;
            Ok((Some(lg.certificate().clone()), Payload::TorelliFingerprint { fingerprint: fp }))
        }
        Command::TorelliVerify => {
            let other = second_poly(job, &omega)?;
            let a = match &job.matrix {
                Some(m) => parse_matrix(m)?,
                None => crate::torelli::identity_matrix(omega.n_vars()),
            };
            let c = match &job.scalar {
                Some(s) => parse_rational(s)?,
                None => Rational::from_integer(1.into()),
            };
            let mode: VerifyMode = job.mode.unwrap_or(ModeName::ExactPullback).into();
            let holds = verify_equivalence(&a, &c, &omega, &other, mode)?;
            Ok((
                None,
                Payload::TorelliVerify {
                    mode,
                    matrix: matrix_to_strings(&a),
                    scalar: c.to_string(),
                    holds,
                },
            ))
        }
        Command::TorelliSearch => {
            let other = second_poly(job, &omega)?;
            let strategy = match job.strategy.unwrap_or(StrategyName::Symbolic) {
                StrategyName::Bounded => SearchStrategy::BoundedScalars {
                    budget: job.budget.unwrap_or(1_000_000),
                },
                StrategyName::Symbolic => SearchStrategy::Symbolic,
                StrategyName::Random => SearchStrategy::Random {
                    trials: job.trials.unwrap_or(200),
                    seed: job.seed,
                },
            };
            progress(&format!("searching with strategy {}", strategy.name()));
            let out = search_equivalence(&omega, &other, &strategy)?;
            let cert = JacobianAlgebra::new(&omega)?.certify();
            let witness = out.witness.map(|w| WitnessRow {
                matrix: matrix_to_strings(&w.matrix),
                scalar: w.scalar.to_string(),
                mode: w.mode,
                verified: w.verified,
            });
            Ok((
                Some(cert),
                Payload::TorelliSearch {
                    strategy: out.strategy,
                    fingerprints_equal: out.fingerprints_equal,
                    outcome: if witness.is_some() {
                        "witness".into()
                    } else {
                        "not-found-within-strategy".into()
                    },
                    witness,
                    candidates_tried: out.candidates_tried,
                    scope: out.scope,
                },
            ))
        }
        _ => unreachable!("dispatched by run"),
    }
}

/// Renders a report in the job's output format.
pub fn render(report: &Report) -> Result<String> {
    match report.job.format {
        OutputFormat::Json => report.to_json(),
        OutputFormat::Csv => render_csv(report),
        OutputFormat::Human => Ok(render_human(report)),
    }
}

fn csv_string(header: &[String], rows: Vec<Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(std::io::Error::other(e));
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(&r).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(std::io::Error::other(e.to_string())))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn strings<const N: usize>(v: [&str; N]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn render_csv(report: &Report) -> Result<String> {
    match &report.result {
        Payload::HsTable { cells, .. } => {
            let mut header = strings(["t", "m", "total"]);
            if let Some(c) = cells.first() {
                header.extend(c.per_sector.iter().map(|s| format!("sector_{}", s.g_index)));
            }
            let rows = cells
                .iter()
                .map(|c| {
                    let mut r = vec![c.t.to_string(), c.m.to_string(), c.total.to_string()];
                    r.extend(c.per_sector.iter().map(|s| s.contribution.to_string()));
                    r
                })
                .collect();
            csv_string(&header, rows)
        }
        Payload::Koszul { rows, .. } => csv_string(
            &strings(["p", "t", "dim", "cohomology"]),
            rows.iter()
                .map(|r| vec![r.p.to_string(), r.t.to_string(), r.dim.to_string(), r.cohomology.to_string()])
                .collect(),
        ),
        Payload::Hilbert { hilbert, oracle } => csv_string(
            &strings(["t", "dim", "oracle"]),
            hilbert
                .iter()
                .zip(oracle)
                .enumerate()
                .map(|(t, (h, o))| vec![t.to_string(), h.to_string(), o.to_string()])
                .collect(),
        ),
        Payload::Jac { hilbert, .. } => csv_string(
            &strings(["t", "dim"]),
            hilbert.iter().enumerate().map(|(t, h)| vec![t.to_string(), h.to_string()]).collect(),
        ),
        Payload::Sectors { sectors } => csv_string(
            &strings(["g_index", "fixed_vars", "rk_w", "character", "restricted"]),
            sectors
                .iter()
                .map(|s| {
                    vec![
                        s.g_index.to_string(),
                        s.fixed_vars.iter().map(|j| format!("x{j}")).collect::<Vec<_>>().join(" "),
                        s.rk_w.to_string(),
                        s.character.to_string(),
                        s.restricted.clone(),
                    ]
                })
                .collect(),
        ),
        Payload::Subalgebra { pieces, .. } => csv_string(
            &strings(["t", "jacobian", "exceptional", "total"]),
            pieces
                .iter()
                .map(|p| {
                    vec![p.t.to_string(), p.jacobian_dim.to_string(), p.exceptional.to_string(), p.total.to_string()]
                })
                .collect(),
        ),
        _ => Err(Error::InvalidArgument(
            "CSV output is only available for grid commands".into(),
        )),
    }
}

fn table(header: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.len());
        }
    }
    let mut out = String::new();
    let line = |out: &mut String, cells: &[String]| {
        let parts: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        let _ = writeln!(out, "{}", parts.join("  ").trim_end());
    };
    line(&mut out, header);
    for r in rows {
        line(&mut out, r);
    }
    out
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn render_human(report: &Report) -> String {
    let mut out = String::new();
    if let Some(c) = &report.certification {
        let _ = writeln!(out, "certificate: {}", c.summary());
    }
    match &report.result {
        Payload::Jac {
            weights,
            degree,
            socle_degree,
            milnor_number,
            hilbert,
            bases,
        } => {
            let _ = writeln!(out, "weights: ({})  degree: {degree}", join(weights));
            let _ = writeln!(out, "socle degree: {socle_degree}");
            if let Some(mu) = milnor_number {
                let _ = writeln!(out, "Milnor number: {mu}");
            }
            let _ = writeln!(out, "Hilbert function: ({})", join(hilbert));
            for b in bases.iter().flatten() {
                let _ = writeln!(out, "  degree {}: {}", b.t, b.monomials.join(" "));
            }
        }
        Payload::Hilbert { hilbert, oracle } => {
            let rows: Vec<Vec<String>> = hilbert
                .iter()
                .zip(oracle)
                .enumerate()
                .map(|(t, (h, o))| vec![t.to_string(), h.to_string(), o.to_string()])
                .collect();
            out += &table(&strings(["t", "dim", "oracle"]), &rows);
        }
        Payload::Sectors { sectors } => {
            let rows: Vec<Vec<String>> = sectors
                .iter()
                .map(|s| {
                    let fixed = if s.fixed_vars.is_empty() {
                        "-".to_string()
                    } else {
                        s.fixed_vars.iter().map(|j| format!("x{j}")).collect::<Vec<_>>().join(" ")
                    };
                    let name = if s.identity { format!("{} (id)", s.g_index) } else { s.g_index.to_string() };
                    vec![name, fixed, s.rk_w.to_string(), s.character.to_string(), s.restricted.clone()]
                })
                .collect();
            out += &table(&strings(["g", "fixed", "rkW", "k_g", "restricted"]), &rows);
        }
        Payload::HsTable {
            t_range,
            m_range,
            cells,
            audit,
            hochschild,
        } => {
            let mut header = vec!["m \\ t".to_string()];
            header.extend((t_range.0..=t_range.1).map(|t| t.to_string()));
            let width = (t_range.1 - t_range.0 + 1) as usize;
            let rows: Vec<Vec<String>> = (m_range.0..=m_range.1)
                .zip(cells.chunks(width))
                .map(|(m, row)| {
                    let mut r = vec![m.to_string()];
                    r.extend(row.iter().map(|c| c.total.to_string()));
                    r
                })
                .collect();
            out += &table(&header, &rows);
            let extra: Vec<&HsCell> = cells
                .iter()
                .filter(|c| c.per_sector.iter().skip(1).any(|s| s.contribution > 0))
                .collect();
            if !extra.is_empty() {
                let _ = writeln!(out, "cells with non-identity sector contributions:");
                for c in extra {
                    let _ = writeln!(out, "  (t={}, m={}): {} = {}", c.t, c.m, c.total, breakdown(c));
                }
            }
            if let Some(a) = audit {
                let _ = writeln!(
                    out,
                    "relation audit hs(t,m) = hs(t-d,m+2): {} ({} cells)",
                    if a.passed() { "PASS" } else { "FAIL" },
                    a.checked
                );
            }
            for h in hochschild.iter().flatten() {
                let _ = writeln!(
                    out,
                    "HH^{} = {} ({})   HH_{} = {} ({})",
                    h.m,
                    h.cohomology.total,
                    breakdown(&h.cohomology),
                    h.m,
                    h.homology.total,
                    breakdown(&h.homology)
                );
            }
        }
        Payload::HsDim { word, cell } => {
            let _ = writeln!(
                out,
                "Hom(D, D({})[{}]) = {}   breakdown {}",
                cell.t,
                cell.m,
                cell.total,
                breakdown(cell)
            );
            let _ = writeln!(out, "normalized word: D({})[{}]", word.twist, word.shift);
        }
        Payload::Subalgebra {
            closed_form,
            warnings,
            pieces,
            structure_constants,
        } => {
            for w in warnings {
                let _ = writeln!(out, "warning: {w}");
            }
            let _ = writeln!(out, "closed form applies: {closed_form}");
            let rows: Vec<Vec<String>> = pieces
                .iter()
                .map(|p| {
                    vec![p.t.to_string(), p.jacobian_dim.to_string(), p.exceptional.to_string(), p.total.to_string()]
                })
                .collect();
            out += &table(&strings(["t", "Jac_t", "extra", "total"]), &rows);
            if let Some(sc) = structure_constants {
                let _ = writeln!(out, "structure constants ({} products):", sc.len());
                for c in sc {
                    let terms: Vec<String> = c
                        .product
                        .iter()
                        .map(|(k, v)| format!("{v}*e[{},{k}]", c.left.0 + c.right.0))
                        .collect();
                    let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
                    let _ = writeln!(
                        out,
                        "  e[{},{}] * e[{},{}] = {rhs}",
                        c.left.0, c.left.1, c.right.0, c.right.1
                    );
                }
            }
        }
        Payload::Koszul {
            length,
            shifts,
            rows,
            audit,
        } => {
            let _ = writeln!(out, "length {length}, generator degrees ({})", join(shifts));
            let ts: Vec<i64> = rows.iter().filter(|r| r.p == 0).map(|r| r.t).collect();
            let mut header = vec!["p \\ t".to_string()];
            header.extend(ts.iter().map(|t| t.to_string()));
            let body: Vec<Vec<String>> = (0..=*length)
                .map(|p| {
                    let mut r = vec![format!("H^{p}")];
                    r.extend(rows.iter().filter(|x| x.p == p).map(|x| x.cohomology.to_string()));
                    r
                })
                .collect();
            out += &table(&header, &body);
            if let Some(a) = audit {
                let _ = writeln!(
                    out,
                    "audit: d o d = 0 {}, Euler characteristic {}, H^0 = Jac {}",
                    if a.d_squared_failure.is_none() { "PASS" } else { "FAIL" },
                    if a.euler_characteristic_ok { "PASS" } else { "FAIL" },
                    if a.h0_matches_jacobian { "PASS" } else { "FAIL" }
                );
            }
        }
        Payload::TorelliFingerprint { fingerprint: f } => {
            let _ = writeln!(out, "weights: ({})  degree: {}", join(&f.weights), f.degree);
            let _ = writeln!(out, "Hilbert function: ({})", join(&f.hilbert));
            let _ = writeln!(out, "Hom(D, D(t)), t >= 0: ({})", join(&f.hom_delta_delta));
            for (t, e) in &f.exceptional {
                let _ = writeln!(out, "extra summand of dimension {e} at t = {t}");
            }
            match f.comparison_degree {
                Some(t) => {
                    let _ = writeln!(out, "Jacobian pieces compared in degree {t}");
                }
                None => {
                    let _ = writeln!(out, "no clean comparison degree among d, d-1");
                }
            }
        }
        Payload::TorelliVerify {
            mode,
            matrix,
            scalar,
            holds,
        } => {
            let _ = writeln!(out, "mode: {}  scalar: {scalar}", mode.name());
            for r in matrix {
                let _ = writeln!(out, "  [{}]", r.join(", "));
            }
            let _ = writeln!(out, "verified: {holds}");
        }
        Payload::TorelliSearch {
            strategy,
            fingerprints_equal,
            outcome,
            witness,
            candidates_tried,
            scope,
        } => {
            let _ = writeln!(out, "strategy: {}  fingerprints equal: {fingerprints_equal}", strategy.name());
            let _ = writeln!(out, "outcome: {outcome} after {candidates_tried} candidates");
            if let Some(w) = witness {
                let _ = writeln!(out, "scalar: {}  verified: {}", w.scalar, w.verified);
                for r in &w.matrix {
                    let _ = writeln!(out, "  [{}]", r.join(", "));
                }
            } else {
                let _ = writeln!(out, "searched: {scope}");
                let _ = writeln!(out, "(a failed search does not show the forms are inequivalent)");
            }
        }
    }
    if let Some(ms) = report.timing_ms {
        let _ = writeln!(out, "time: {ms} ms");
    }
    out
}

fn breakdown(c: &HsCell) -> String {
    format!("({})", join(&c.per_sector.iter().map(|s| s.contribution).collect::<Vec<_>>()))
}

/// Command-line arguments.
#[derive(Debug, Parser)]
#[command(name = "kuzcalc", version, about = "Jacobian rings, sector tables and equivalence witnesses for weighted-homogeneous hypersurfaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Polynomial in x0, x1, ..., e.g. "x0^3 + x1^3 + x2^3".
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub poly: Option<String>,
    /// Comma-separated variable weights (default: all 1).
    #[arg(long, global = true, value_delimiter = ',')]
    pub weights: Option<Vec<u32>>,
    /// Weighted degree (default: degree of the leading term).
    #[arg(long, global = true)]
    pub degree: Option<u64>,
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    #[arg(long, global = true)]
    pub csv: bool,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub t_min: Option<i64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub t_max: Option<i64>,
    /// Inclusive range a..b.
    #[arg(long, global = true, value_parser = parse_range, allow_hyphen_values = true)]
    pub m_range: Option<(i64, i64)>,
    /// Run the invariant audits of the command.
    #[arg(long, global = true)]
    pub audit: bool,
    /// Include wall-clock time in the report (breaks byte-identical output).
    #[arg(long, global = true)]
    pub timing: bool,
    /// No progress notes on stderr.
    #[arg(long, short, global = true)]
    pub quiet: bool,
}

#[derive(Debug, Subcommand)]
pub enum CliCommand {
    /// Jacobian algebra: Hilbert function, socle degree, isolation certificate.
    Jac {
        #[arg(long)]
        bases: bool,
    },
    /// Hilbert function next to the complete-intersection series.
    Hilbert,
    /// Sector table of the diagonal mu_d action.
    Sectors,
    /// Grid of dim Hom(D, D(t)[m]) with per-sector breakdown.
    HsTable {
        /// Also list HH^m and HH_m for m in the m range.
        #[arg(long)]
        hh: bool,
    },
    /// One entry dim Hom(D, D(t)[m]).
    HsDim {
        #[arg(long, allow_hyphen_values = true)]
        t: i64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
        m: i64,
    },
    /// Graded pieces of the sum of Hom(D, D(t)) over t >= 0.
    Subalgebra {
        #[arg(long)]
        structure_constants: bool,
    },
    /// Koszul cohomology of the partial derivatives.
    Koszul,
    /// Fingerprints, verification and search of linear equivalences.
    Torelli {
        #[command(subcommand)]
        action: TorelliCommand,
    },
    /// Run a job file.
    Run {
        file: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum TorelliCommand {
    /// Check w(A x) = c w'(x), or equality of Jacobian ideals.
    Verify {
        #[arg(long, allow_hyphen_values = true)]
        poly2: String,
        /// Rows separated by ';', entries by ',' (default: identity).
        #[arg(long, allow_hyphen_values = true)]
        matrix: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        scalar: Option<String>,
        #[arg(long, value_enum)]
        mode: Option<ModeName>,
    },
    /// Search for a witness w(A x) = c w'(x).
    Search {
        #[arg(long, allow_hyphen_values = true)]
        poly2: String,
        #[arg(long, value_enum)]
        strategy: Option<StrategyName>,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        trials: Option<u64>,
    },
    /// Invariant bundle used to compare hypersurfaces.
    Fingerprint,
}

impl Cli {
    /// The job described by the arguments; `run` jobs are read from their file
    /// and the output flags override the file.
    pub fn into_job(self) -> Result<JobSpec> {
        let c = self.common;
        let mut job = match self.command {
            CliCommand::Run { file } => JobSpec::from_job_text(&std::fs::read_to_string(file)?)?,
            other => {
                let mut job = JobSpec::default();
                match other {
                    CliCommand::Jac { bases } => {
                        job.command = Command::Jac;
                        job.bases = bases;
                    }
                    CliCommand::Hilbert => job.command = Command::Hilbert,
                    CliCommand::Sectors => job.command = Command::Sectors,
                    CliCommand::HsTable { hh } => {
                        job.command = Command::HsTable;
                        job.hochschild = hh;
                    }
                    CliCommand::HsDim { t, m } => {
                        job.command = Command::HsDim;
                        job.t = Some(t);
                        job.m = Some(m);
                    }
                    CliCommand::Subalgebra { structure_constants } => {
                        job.command = Command::Subalgebra;
                        job.structure_constants = structure_constants;
                    }
                    CliCommand::Koszul => job.command = Command::Koszul,
                    CliCommand::Torelli { action } => match action {
                        TorelliCommand::Verify {
                            poly2,
                            matrix,
                            scalar,
                            mode,
                        } => {
                            job.command = Command::TorelliVerify;
                            job.poly2 = Some(poly2);
                            job.matrix = matrix;
                            job.scalar = scalar;
                            job.mode = mode;
                        }
                        TorelliCommand::Search {
                            poly2,
                            strategy,
                            budget,
                            trials,
                        } => {
                            job.command = Command::TorelliSearch;
                            job.poly2 = Some(poly2);
                            job.strategy = strategy;
                            job.budget = budget;
                            job.trials = trials;
                        }
                        TorelliCommand::Fingerprint => job.command = Command::TorelliFingerprint,
                    },
                    CliCommand::Run { .. } => unreachable!(),
                }
                job
            }
        };
        if let Some(p) = c.poly {
            job.poly = p;
        }
        job.weights = c.weights.or(job.weights);
        job.degree = c.degree.or(job.degree);
        job.t_min = c.t_min.or(job.t_min);
        job.t_max = c.t_max.or(job.t_max);
        job.m_range = c.m_range.or(job.m_range);
        job.seed = c.seed.unwrap_or(job.seed);
        job.audit |= c.audit;
        job.timing |= c.timing;
        if c.json {
            job.format = OutputFormat::Json;
        } else if c.csv {
            job.format = OutputFormat::Csv;
        }
        Ok(job)
    }
}

/// Parses arguments, runs, prints; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let quiet = cli.common.quiet;
    let job = match cli.into_job() {
        Ok(j) => j,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    let progress = |msg: &str| {
        if !quiet {
            eprintln!("[kuzcalc] {msg}");
        }
    };
    match run(&job, &progress).and_then(|r| Ok((render(&r)?, r.exit_code()))) {
        Ok((text, code)) => {
            print!("{text}");
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quiet(_: &str) {}

    fn job(command: Command, poly: &str) -> JobSpec {
        JobSpec {
            command,
            poly: poly.into(),
            format: OutputFormat::Json,
            ..Default::default()
        }
    }

    #[test]
    fn jac_report_for_cubic_surface() {
        let r = run(&job(Command::Jac, "x0^3+x1^3+x2^3+x3^3"), &quiet).unwrap();
        assert_eq!(r.exit_code(), 0);
        match &r.result {
            Payload::Jac {
                hilbert,
                socle_degree,
                milnor_number,
                ..
            } => {
                assert_eq!(hilbert, &vec![1, 4, 6, 4, 1]);
                assert_eq!(*socle_degree, 4);
                assert_eq!(*milnor_number, Some(16));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn singular_jac_exits_two() {
        let mut j = job(Command::Jac, "x0^3");
        j.weights = Some(vec![1, 1]);
        let r = run(&j, &quiet).unwrap();
        assert_eq!(r.exit_code(), 2);
        assert!(!r.certification.unwrap().isolated);
        let mut hs = j.clone();
        hs.command = Command::HsTable;
        assert_eq!(run(&hs, &quiet).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn json_round_trip() {
        let mut j = job(Command::HsTable, "x0^3+x1^3+x2^3+x3^3");
        j.audit = true;
        j.hochschild = true;
        let r = run(&j, &quiet).unwrap();
        let text = r.to_json().unwrap();
        assert_eq!(Report::from_json(&text).unwrap(), r);
        assert!(text.starts_with("{\n  \"schema_version\": 1,"));
    }

    #[test]
    fn job_text_round_trip() {
        let j = JobSpec {
            command: Command::TorelliSearch,
            poly: "x0^3+x1^3+x2^3".into(),
            poly2: Some("x0^3+8*x1^3+x2^3".into()),
            weights: Some(vec![1, 1, 1]),
            degree: Some(3),
            m_range: Some((-4, 4)),
            t_max: Some(-1),
            format: OutputFormat::Csv,
            seed: 9,
            audit: true,
            strategy: Some(StrategyName::Random),
            trials: Some(3),
            mode: Some(ModeName::IdealEquality),
            matrix: Some("1,0,0;0,2,0;0,0,1".into()),
            ..Default::default()
        };
        assert_eq!(JobSpec::from_job_text(&j.to_job_text()).unwrap(), j);
    }

    #[test]
    fn job_file_errors() {
        assert!(JobSpec::from_job_text("poly = x0^2").is_err());
        assert!(JobSpec::from_job_text("command = jac\nfoo = 1").is_err());
        assert!(JobSpec::from_job_text("command = nope").is_err());
        let j = JobSpec::from_job_text("# c\ncommand = hs-dim\npoly = x0^3+x1^3\nt = -3\n").unwrap();
        assert_eq!((j.command, j.t), (Command::HsDim, Some(-3)));
    }

    #[test]
    fn csv_rejected_for_non_grid() {
        let mut j = job(Command::HsDim, "x0^3+x1^3+x2^3+x3^3");
        j.t = Some(2);
        j.format = OutputFormat::Csv;
        let r = run(&j, &quiet).unwrap();
        assert_eq!(render(&r).unwrap_err().exit_code(), 1);
    }

    #[test]
    fn exit_codes_from_args() {
        assert_eq!(main_with_args(["kuzcalc", "--help"]), 0);
        assert_eq!(main_with_args(["kuzcalc", "frobnicate"]), 1);
        assert_eq!(main_with_args(["kuzcalc", "jac", "-q"]), 1);
        assert_eq!(main_with_args(["kuzcalc", "jac", "-q", "--poly", "x0^3+x1^"]), 1);
        assert_eq!(main_with_args(["kuzcalc", "jac", "-q", "--poly", "x0^3", "--weights", "1,1"]), 2);
        assert_eq!(main_with_args(["kuzcalc", "jac", "-q", "--poly", "x0^3+x1^3"]), 0);
    }

    #[test]
    fn cli_flags_build_the_job() {
        let cli = Cli::try_parse_from([
            "kuzcalc", "hs-table", "--poly", "x0^3+x1^3+x2^3+x3^3", "--m-range", "-4..4", "--t-min", "-6", "--json",
            "--audit",
        ])
        .unwrap();
        let j = cli.into_job().unwrap();
        assert_eq!(j.m_range, Some((-4, 4)));
        assert_eq!(j.t_min, Some(-6));
        assert_eq!(j.format, OutputFormat::Json);
        assert!(j.audit);
    }
}
