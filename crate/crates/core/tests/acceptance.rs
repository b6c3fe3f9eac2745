//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails. All comparisons are exact.

use std::process::Command;
use std::time::{Duration, Instant};

use kuzcalc::cli::{run, JobSpec, OutputFormat};
use kuzcalc::hsalgebra::{bezout, serre_power_word, twist_as_serre_word, FunctorWord};
use kuzcalc::koszul::build_koszul;
use kuzcalc::milnor::poincare_oracle;
use kuzcalc::orbifold::sectors;
use kuzcalc::poly::{rat, Monomial, Rational};
use kuzcalc::torelli::{
    fingerprint, random_weight_compatible, search_equivalence, verify_equivalence, SearchStrategy, VerifyMode,
};
use kuzcalc::{parse_poly, JacobianAlgebra, LgModel, WeightedPolynomial};
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e2s<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Coefficients of `prod_j (1 + s + ... + s^(d-2))` truncated at `len`, the
/// Poincare series of an unweighted isolated degree-`d` form in `n` variables.
fn unweighted_oracle(n: usize, d: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0usize; len];
    out[0] = 1;
    for _ in 0..n {
        let mut next = vec![0usize; len];
        for (i, &c) in out.iter().enumerate() {
            for k in 0..=d - 2 {
                if i + k < len {
                    next[i + k] += c;
                }
            }
        }
        out = next;
    }
    out
}

fn sextic() -> WeightedPolynomial {
    parse_poly("x4^2 + x0^6 + x1^6 + x2^6 + x3^6", &[1, 1, 1, 1, 3], 6).unwrap()
}

fn fermat(n: usize, d: u64) -> WeightedPolynomial {
    WeightedPolynomial::fermat(&vec![1; n], d, &[]).unwrap()
}

fn criterion_1() -> Check {
    let s = sectors(&[1, 1, 1, 1, 3], 6).map_err(e2s)?;
    for sec in &s {
        let expected: (Vec<usize>, usize, i64) = match sec.g_index {
            1 | 3 | 5 => (vec![], 5, -7),
            2 | 4 => (vec![4], 4, -4),
            6 => (vec![0, 1, 2, 3, 4], 0, 0),
            g => return Err(format!("unexpected sector {g}")),
        };
        let got = (sec.fixed_vars.clone(), sec.rk_w, sec.character);
        ensure(got == expected, || format!("sector {}: {got:?} != {expected:?}", sec.g_index))?;
    }
    ensure(s.len() == 6 && s[5].is_identity(), || "identity sector missing".into())?;
    Ok("i=1,3,5 -> (none, 5, -7); i=2,4 -> (x4, 4, -4); identity -> (0, 0)".into())
}

fn criterion_2() -> Check {
    let lg = LgModel::new(&sextic()).map_err(e2s)?;
    // ((1 - s^5)/(1 - s))^4 times the trivial factor of x4
    let oracle = unweighted_oracle(4, 6, 17);
    ensure(oracle[8] == 85, || format!("oracle gives {} in degree 8", oracle[8]))?;
    for t in 0..=16i64 {
        let jac = lg.jacobian().dim(t);
        ensure(jac == oracle[t as usize], || format!("Jac_{t} = {jac}, oracle {}", oracle[t as usize]))?;
        let hom = lg.hom_delta_delta(t).map_err(e2s)?;
        let want = oracle[t as usize] + if t == 8 { 2 } else { 0 };
        ensure(hom == want, || format!("Hom(D, D({t})) = {hom}, expected {want}"))?;
    }
    Ok("Hom(D, D(t)) = Jac_t for t in 0..=16 except t=8: 85 + 2 = 87".into())
}

fn criterion_3() -> Check {
    let mut notes = Vec::new();
    for (n_vars, d, special) in [(5usize, 3u64, None), (4, 3, Some((2i64, 2usize))), (6, 5, Some((9, 4)))] {
        let lg = LgModel::new(&fermat(n_vars, d)).map_err(e2s)?;
        let sigma = lg.jacobian().socle_degree();
        let top = if special.is_none() { 7 } else { sigma + d as i64 };
        let oracle = unweighted_oracle(n_vars, d as usize, top as usize + 1);
        for t in 0..=top {
            let total = lg.hs_dim(t, 0).total;
            let extra = match special {
                Some((s, e)) if s == t => e,
                _ => 0,
            };
            let want = oracle[t as usize] + extra;
            ensure(total == want, || {
                format!("n+1={n_vars}, d={d}: Hom(D, D({t})) = {total}, expected {want}")
            })?;
        }
        notes.push(match special {
            None => format!("cubic threefold equal through t={top}"),
            Some((s, e)) => format!("n+1={n_vars},d={d}: +{e} only at t={s}"),
        });
    }
    Ok(notes.join("; "))
}

fn criterion_4() -> Check {
    let lg = LgModel::new(&fermat(6, 3)).map_err(e2s)?;
    ensure(serre_power_word(1, 0, 5, 3) == FunctorWord::new(0, 2), || "S != [2]".into())?;
    for (m, total, breakdown) in [(0, 1, vec![1, 0, 0]), (2, 22, vec![20, 1, 1]), (4, 1, vec![1, 0, 0])] {
        let c = lg.hs_bigraded(0, m);
        ensure(c.total == total && c.breakdown() == breakdown, || {
            format!("HH^{m} = {} {:?}, expected {total} {breakdown:?}", c.total, c.breakdown())
        })?;
    }
    Ok("HH^0, HH^2, HH^4 = 1 (1,0,0), 22 (20,1,1), 1 (1,0,0)".into())
}

fn criterion_5() -> Check {
    let mut checked = 0;
    for omega in [fermat(4, 3), sextic()] {
        let lg = LgModel::new(&omega).map_err(e2s)?;
        let d = lg.degree() as i64;
        let sigma = lg.jacobian().socle_degree();
        let audit = lg.relation_audit((-2 * d, sigma + d), (-4, 4));
        ensure(audit.passed(), || format!("{omega}: failures {:?}", audit.failures))?;
        checked += audit.checked;
    }
    Ok(format!("hs(t, m) = hs(t - d, m + 2) on {checked} cells"))
}

fn criterion_6() -> Check {
    let mut used = Vec::new();
    for (n, d) in [(2u32, 3u32), (4, 3), (5, 5), (6, 4)] {
        if (n as i64 + 1).gcd(&(d as i64)) != 1 {
            ensure(bezout(n as i64 + 1, d as i64).is_none(), || format!("({n},{d}) should have no Bezout pair"))?;
            continue;
        }
        let (k1, k2) = bezout(n as i64 + 1, d as i64).ok_or("missing Bezout pair")?;
        ensure(k1 * (n as i64 + 1) + k2 * d as i64 == 1, || format!("bad Bezout pair for ({n},{d})"))?;
        for t in -10..=10 {
            let (a, b) = twist_as_serre_word(t, n, d).ok_or("missing word")?;
            let w = serre_power_word(a, b, n, d);
            ensure(w == FunctorWord::twist(t).normalize(d), || format!("({n},{d}), t={t}: {w:?}"))?;
        }
        used.push(format!("({n},{d})"));
    }
    Ok(format!("words reproduce D(t), t in -10..=10, for {}; (2,3) skipped (gcd 3)", used.join(" ")))
}

/// Fermat forms perturbed by a few random monomials, kept when certified.
fn random_corpus() -> Vec<WeightedPolynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(20240607);
    let mut out = Vec::new();
    while out.len() < 10 {
        let n = rng.gen_range(2..=4usize);
        let d = rng.gen_range(3..=5u64);
        let w = vec![1; n];
        let mut p = fermat(n, d);
        let monomials = kuzcalc::poly::monomials_of_degree(d, &w);
        for _ in 0..rng.gen_range(2..=4) {
            let m: &Monomial = &monomials[rng.gen_range(0..monomials.len())];
            let c = loop {
                let c = rng.gen_range(-3..=3i64);
                if c != 0 {
                    break c;
                }
            };
            p = p
                .add(&WeightedPolynomial::monomial(&w, m.clone(), rat(c)))
                .unwrap();
        }
        let Ok(jac) = JacobianAlgebra::new(&p) else { continue };
        if jac.certify().isolated {
            out.push(p);
        }
    }
    out
}

fn criterion_7(corpus: &[WeightedPolynomial]) -> Check {
    for p in corpus {
        let jac = JacobianAlgebra::new(p).map_err(e2s)?;
        let sigma = jac.socle_degree() as usize;
        let h = jac.hilbert_function(sigma as u64);
        let lib_oracle = poincare_oracle(p.weights(), p.degree());
        let test_oracle = unweighted_oracle(p.n_vars(), p.degree() as usize, sigma + 1);
        for t in 0..=sigma {
            ensure(h[t] as i64 == lib_oracle[t] && h[t] == test_oracle[t], || {
                format!("{p}: degree {t}: {} vs {} / {}", h[t], lib_oracle[t], test_oracle[t])
            })?;
            ensure(h[t] == h[sigma - t], || format!("{p}: symmetry fails at {t}"))?;
        }
    }
    Ok(format!("{} certified forms match both oracles and are symmetric", corpus.len()))
}

fn criterion_8(corpus: &[WeightedPolynomial]) -> Check {
    for p in corpus {
        let jac = JacobianAlgebra::new(p).map_err(e2s)?;
        let sigma = jac.socle_degree();
        let k = build_koszul(p);
        k.check_d_squared(sigma).map_err(|(q, t)| format!("{p}: d o d != 0 at ({q}, {t})"))?;
        for t in 0..=sigma {
            for q in 1..=k.len() {
                let h = k.cohomology_rank(q, t);
                ensure(h == 0, || format!("{p}: H^{q}_{t} = {h}"))?;
            }
            ensure(k.cohomology_rank(0, t) == jac.dim(t), || format!("{p}: H^0_{t} != Jac_{t}"))?;
        }
    }
    Ok(format!("{} forms: H^p = 0 for p >= 1, H^0 = Jac, d o d = 0", corpus.len()))
}

fn criterion_9() -> Check {
    let forms = [
        parse_poly("x0^3 + x1^3 + x2^3 + x0*x1*x2", &[1, 1, 1], 3),
        parse_poly("x0^3 + x1^3 + x2^3 + x3^3 - x0*x1*x2", &[1, 1, 1, 1], 3),
        parse_poly("x0^4 + x1^4 + x2^4 + x0^2*x1^2", &[1, 1, 1], 4),
        parse_poly("x0^4 + x1^4 + x2^2 + x0^2*x2", &[1, 1, 2], 4),
        parse_poly("x0^4 + x1^4 + x2^4 + x3^2 + x0*x1*x3", &[1, 1, 1, 2], 4),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for omega in forms {
        let omega = omega.map_err(e2s)?;
        let a = random_weight_compatible(omega.weights(), &mut rng);
        let pulled = omega.substitute_linear(&a).map_err(e2s)?;
        let (f1, f2) = (fingerprint(&omega).map_err(e2s)?, fingerprint(&pulled).map_err(e2s)?);
        ensure(f1 == f2, || format!("{omega}: fingerprint changed under substitution"))?;
        for mode in [VerifyMode::ExactPullback, VerifyMode::IdealEquality] {
            let ok = verify_equivalence(&a, &rat(1), &omega, &pulled, mode).map_err(e2s)?;
            ensure(ok, || format!("{omega}: verification fails in {mode:?}"))?;
        }
    }
    let pairs = [
        ("x0^3 + x1^3 + x2^3", "x0^3 + 8*x1^3 + x2^3", vec![1, 1, 1], 3),
        ("x0^4 + x1^4 + x2^4", "x1^4 + 16*x0^4 + 81*x2^4", vec![1, 1, 1], 4),
        ("x4^2 + x0^6 + x1^6 + x2^6 + x3^6", "4*x4^2 + x1^6 + 64*x0^6 + x3^6 + x2^6", vec![1, 1, 1, 1, 3], 6),
    ];
    let mut found = 0;
    for (a, b, w, d) in pairs {
        let (p, q) = (parse_poly(a, &w, d).map_err(e2s)?, parse_poly(b, &w, d).map_err(e2s)?);
        for strategy in [SearchStrategy::BoundedScalars { budget: 1_000_000 }, SearchStrategy::Symbolic] {
            let out = search_equivalence(&p, &q, &strategy).map_err(e2s)?;
            let wit = out.witness.ok_or_else(|| format!("{a} vs {b}: no witness with {}", strategy.name()))?;
            let again = verify_equivalence(&wit.matrix, &wit.scalar, &p, &q, VerifyMode::ExactPullback).map_err(e2s)?;
            ensure(wit.verified && again, || format!("{a} vs {b}: witness does not re-verify"))?;
            let is_monomial = wit
                .matrix
                .iter()
                .all(|r| r.iter().filter(|v| **v != Rational::from_integer(0.into())).count() == 1);
            ensure(is_monomial, || "witness is not permutation times diagonal".into())?;
            found += 1;
        }
    }
    Ok(format!("5 random substitutions keep fingerprints and verify in both modes; {found} witnesses re-verified"))
}

fn criterion_10() -> Check {
    let jobs = [
        "command = hs-table\npoly = x4^2 + x0^6 + x1^6 + x2^6 + x3^6\nweights = 1,1,1,1,3\nm_range = -2..2\naudit = true\nhochschild = true\n",
        "command = torelli-search\npoly = x0^3 + x1^3 + x2^3\npoly2 = x0^3 + x1^3 + x2^3 + 3*x0*x1*x2\nstrategy = random\ntrials = 40\nseed = 17\n",
        "command = subalgebra\npoly = x0^3 + x1^3 + x2^3 + x3^3\nstructure_constants = true\n",
        "command = koszul\npoly = x0^3 + x1^3 + x2^3\naudit = true\n",
    ];
    let dir = std::env::temp_dir().join(format!("kuzcalc-accept-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(e2s)?;
    for (i, text) in jobs.iter().enumerate() {
        let mut job = JobSpec::from_job_text(text).map_err(e2s)?;
        job.format = OutputFormat::Json;
        let a = run(&job, &|_| {}).and_then(|r| r.to_json()).map_err(e2s)?;
        let b = run(&job, &|_| {}).and_then(|r| r.to_json()).map_err(e2s)?;
        ensure(a == b, || format!("job {i}: library output differs between runs"))?;
        let path = dir.join(format!("job{i}.txt"));
        std::fs::write(&path, text).map_err(e2s)?;
        let mut outputs = Vec::new();
        for _ in 0..2 {
            let out = Command::new(env!("CARGO_BIN_EXE_kuzcalc"))
                .args(["run", path.to_str().unwrap(), "--json", "-q"])
                .output()
                .map_err(e2s)?;
            ensure(out.status.success(), || format!("job {i}: exit {:?}", out.status.code()))?;
            outputs.push(out.stdout);
        }
        ensure(outputs[0] == outputs[1], || format!("job {i}: binary output differs between runs"))?;
        ensure(outputs[0] == a.as_bytes(), || format!("job {i}: binary and library output differ"))?;
    }
    let _ = std::fs::remove_dir_all(&dir);
    Ok(format!("{} jobs byte-identical across repeated library and binary runs", jobs.len()))
}

fn main() {
    let corpus = random_corpus();
    let criteria: Vec<(u32, &str, Option<Duration>, Box<dyn Fn() -> Check + '_>)> = vec![
        (1, "sector table of the sextic in P(1,1,1,1,3)", Some(Duration::from_secs(1)), Box::new(criterion_1)),
        (2, "correction term of the weighted sextic", Some(Duration::from_secs(30)), Box::new(criterion_2)),
        (3, "Jacobian plus k^(d-1) case split", None, Box::new(criterion_3)),
        (4, "Hochschild slices of the cubic fourfold", None, Box::new(criterion_4)),
        (5, "functor relation audit", None, Box::new(criterion_5)),
        (6, "Bezout word identity", None, Box::new(criterion_6)),
        (7, "Milnor oracle equivalence on a random corpus", Some(Duration::from_secs(60)), Box::new(|| criterion_7(&corpus))),
        (8, "Koszul vanishing on the same corpus", None, Box::new(|| criterion_8(&corpus))),
        (9, "Torelli soundness and invariance", None, Box::new(criterion_9)),
        (10, "determinism of JSON reports", None, Box::new(criterion_10)),
    ];
    let mut failed = 0;
    for (k, name, limit, check) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = match (result, limit) {
            (Ok(_), Some(l)) if elapsed > l => Err(format!("took {elapsed:.2?}, limit {l:?}")),
            (r, _) => r,
        };
        match result {
            Ok(detail) => println!("PASS  [{k:>2}] {name} ({elapsed:.2?}): {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  [{k:>2}] {name} ({elapsed:.2?}): {why}");
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
