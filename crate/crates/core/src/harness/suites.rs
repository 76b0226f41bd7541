use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Arc, Mutex, OnceLock};
use std::time::Instant;

use rayon::prelude::*;

use super::cache::{Cache, CacheKey, Target};
use super::{digest, CheckRecord, Status, Suite, VerificationReport};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::invariants::{
    self as inv, cusp_factor, delta, h_form, h_form_at, is_cusp, membership_b, membership_sw, morozov_check,
    perm, star, symmetrize, unstar, witt_check, Group, InvariantForm,
};
use crate::polyring::{content_hash, Polynomial, Rational, VarContext};
use crate::thetaf2::{self as th, F2Subspace};

/// Computes one cache target from scratch.
pub fn compute_target(key: &CacheKey, budget: &Budget) -> Result<Polynomial> {
    match (key.target, key.dim) {
        (Target::H, None) => Ok(h_form(key.genus, budget)?.poly),
        (Target::K, None) => Ok(th::k_form(key.genus, budget)?.poly),
        (Target::GTilde, Some(d)) => {
            if key.genus == 0 {
                return Err(Error::PreconditionViolated("genus must be at least 1".into()));
            }
            th::g_tilde(key.genus, d, budget)
        }
        (Target::GTilde, None) => Err(Error::PreconditionViolated("Gt needs a dimension".into())),
        (_, Some(_)) => Err(Error::PreconditionViolated(format!("{} takes no dimension", key.target))),
    }
}

#[derive(Debug, Clone)]
pub struct ComputeOutput {
    pub path: PathBuf,
    pub hash: String,
    pub cached: bool,
}

/// Computes (or loads) a target, stores it in the cache and, with `out`,
/// copies the canonical file there as well.
pub fn cmd_compute(key: &CacheKey, cache: &Cache, budget: &Budget, out: Option<&PathBuf>) -> Result<ComputeOutput> {
    let (p, cached) = cache.get_or_compute(key, || compute_target(key, budget))?;
    let mut path = cache.path(key);
    if let Some(out) = out {
        std::fs::write(out, crate::polyring::serialize(&p))?;
        path = out.clone();
    }
    Ok(ComputeOutput { path, hash: content_hash(&p), cached })
}

type Shared = std::result::Result<Arc<Polynomial>, Arc<Error>>;

/// Cached inputs shared by the checks of one run; each polynomial is
/// computed at most once.
pub struct Inputs {
    cache: Option<Cache>,
    budget: Budget,
    memo: Mutex<HashMap<CacheKey, Arc<OnceLock<Shared>>>>,
}

fn rethrow(e: &Error) -> Error {
    match e {
        Error::ResourceBudgetExceeded { what, terms, limit } => {
            Error::ResourceBudgetExceeded { what: what.clone(), terms: *terms, limit: *limit }
        }
        other => Error::PreconditionViolated(other.to_string()),
    }
}

impl Inputs {
    pub fn new(cache: Option<Cache>, budget: Budget) -> Self {
        Inputs { cache, budget, memo: Mutex::new(HashMap::new()) }
    }

    pub fn budget(&self) -> &Budget {
        &self.budget
    }

    pub fn get(&self, key: CacheKey) -> Result<Arc<Polynomial>> {
        let cell = self.memo.lock().unwrap().entry(key).or_default().clone();
        let shared = cell.get_or_init(|| {
            let computed = match &self.cache {
                Some(c) => c.get_or_compute(&key, || compute_target(&key, &self.budget)).map(|(p, _)| p),
                None => compute_target(&key, &self.budget),
            };
            computed.map(Arc::new).map_err(Arc::new)
        });
        shared.clone().map_err(|e| rethrow(&e))
    }

    pub fn h(&self, g: usize) -> Result<InvariantForm> {
        let p = self.get(CacheKey::new(Target::H, g, None))?;
        Ok(InvariantForm::new_unchecked((*p).clone(), 4 * g as u32))
    }

    pub fn k(&self, g: usize) -> Result<InvariantForm> {
        let p = self.get(CacheKey::new(Target::K, g, None))?;
        Ok(InvariantForm::new_unchecked((*p).clone(), 4 * g as u32))
    }
}

struct Outcome {
    pass: bool,
    hash: String,
    detail: Option<String>,
}

impl Outcome {
    fn poly(pass: bool, p: &Polynomial) -> Self {
        Outcome { pass, hash: content_hash(p), detail: None }
    }

    fn text(pass: bool, summary: String) -> Self {
        Outcome { pass, hash: digest(&summary), detail: Some(summary) }
    }
}

type CheckFn = Box<dyn Fn(&Inputs) -> Result<Outcome> + Send + Sync>;

struct Check {
    name: String,
    run: CheckFn,
}

fn check(name: impl Into<String>, run: impl Fn(&Inputs) -> Result<Outcome> + Send + Sync + 'static) -> Check {
    Check { name: name.into(), run: Box::new(run) }
}

fn splits(g: usize) -> Vec<(usize, usize)> {
    (1..g).map(|g1| (g1, g - g1)).collect()
}

/// `Δ_{B₁} Δ_{U₁} Δ_{U′₁}`.
pub(crate) fn genus_one_closed_form() -> Polynomial {
    let c = VarContext::branch(4);
    delta(&[1, 2, 3, 4], c)
        .mul(&delta(&[1, 3], c))
        .and_then(|p| p.mul(&delta(&[2, 4], c)))
        .expect("degree bound")
}

/// Distinct rational sample points, fixed so reports are reproducible.
pub(crate) fn sample_points(r: usize, count: usize) -> Vec<Vec<Rational>> {
    (1..=count as i64)
        .map(|s| (0..r as i64).map(|i| Rational::new(i * i * s + 3 * i - 7 * s, s + 2 * i + 1)).collect())
        .collect()
}

fn construct_checks(g: usize) -> Vec<Check> {
    let mut out = vec![
        check("h_construct", move |x| {
            let h = x.h(g)?;
            Ok(Outcome::poly(membership_sw(&h.poly, 4 * g as u32, 2 * g + 2), &h.poly))
        }),
        check("star_round_trip", move |x| {
            let h = x.h(g)?;
            let s = star(&h)?;
            let back = unstar(&s, h.w, h.r)?;
            Ok(Outcome::poly(back.poly == h.poly, &s))
        }),
        check("alternating_count", move |_| {
            let n = inv::enumerate_alternating(2 * g + 2).len();
            let f: usize = (1..=g + 1).product();
            Ok(Outcome::text(n == f * f, format!("sequences={n}")))
        }),
    ];
    if g == 1 {
        out.push(check("base_case", |x| {
            let h = x.h(1)?;
            Ok(Outcome::poly(h.poly == genus_one_closed_form(), &h.poly))
        }));
    }
    out
}

fn ansatz_checks(g: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for (g1, g2) in splits(g) {
        out.push(check(format!("witt_{g1}_{g2}"), move |x| {
            let (f, p, q) = (x.h(g)?, x.h(g1)?, x.h(g2)?);
            let ok = witt_check(&f, &p, &q, g1, g2, 4)?;
            Ok(Outcome::poly(ok, &inv::tmap(&f.poly, 2 * g1 + 1, 2 * g2 + 1, inv::witt_grade(g1, g2, 4))?))
        }));
    }
    out.push(check("symmetrization", move |x| {
        let h = x.h(g)?;
        let s = symmetrize(&h.poly, Group::Full, x.budget())?;
        Ok(Outcome::poly(s.is_zero(), &s))
    }));
    out.push(check("cusp", move |x| {
        let h = x.h(g)?;
        let f = cusp_factor(&h.poly, g)?;
        let ok = is_cusp(&h.poly, 4)? && membership_sw(&f, g as u32 - 1, 2 * g + 2);
        Ok(Outcome::poly(ok, &f))
    }));
    out.push(check("membership_b", move |x| {
        let h = x.h(g)?;
        let ok = membership_b(&h.poly, g, 8)?;
        let vals = inv::valuations(&h.poly, g, 4 * g as u32)?;
        Ok(Outcome::text(ok, format!("{vals:?}")))
    }));
    if g == 1 {
        out.push(check("base_case", |x| {
            let h = x.h(1)?;
            Ok(Outcome::poly(h.poly == genus_one_closed_form(), &h.poly))
        }));
    }
    out
}

fn grushevsky_checks(g: usize) -> Vec<Check> {
    let mut out = vec![
        check("k_equals_h", move |x| {
            let (k, h) = (x.k(g)?, x.h(g)?);
            Ok(Outcome::poly(k.poly == h.poly, &k.poly))
        }),
        check("k_membership", move |x| {
            let k = x.k(g)?;
            Ok(Outcome::poly(membership_b(&k.poly, g, 8)?, &k.poly))
        }),
        check("key_identity", |_| {
            let ok = (0..=4).all(|n| (0..=4).all(|m| th::key_identity_holds(n, m)));
            Ok(Outcome::text(ok, "0<=n,m<=4".into()))
        }),
    ];
    for (g1, g2) in splits(g) {
        for d in 0..=g {
            out.push(check(format!("wgg_{g1}_{g2}_d{d}"), move |x| {
                let (l, r) = th::witt_g_tilde(g1, g2, d, x.budget())?;
                Ok(Outcome::poly(l == r, &l))
            }));
        }
    }
    if g <= 2 {
        out.push(check("q_equivariance", move |_| {
            let mut n = 0;
            for d in 0..=g {
                for v in th::enumerate_subspaces(g, d) {
                    let q = th::q_squared(&v)?;
                    for s in perm::s_u_generators(g) {
                        if q.permute_vars(&s)? != th::q_squared(&th::permute_subspace(&v, &s)?)? {
                            return Ok(Outcome::text(false, format!("failed after {n}")));
                        }
                        n += 1;
                    }
                }
            }
            Ok(Outcome::text(true, format!("pairs={n}")))
        }));
    }
    out
}

fn morozov_checks(g: usize) -> Vec<Check> {
    let mut out = vec![check("morozov", move |x| {
        let h = x.h(g)?;
        let o = morozov_check(&h.poly, g, x.budget())?;
        Ok(Outcome::text(o.tilde_invariant && o.antisymmetric && o.vanishes, format!("{o:?}")))
    })];
    if g == 1 {
        out.push(check("morozov_direct", |x| {
            let h = x.h(1)?;
            let f = inv::morozov_integrand(&h.poly, 1)?;
            let s = inv::symmetrize_direct(&f, x.budget())?;
            Ok(Outcome::poly(s.is_zero(), &s))
        }));
    }
    out
}

fn theta_checks(g: usize) -> Vec<Check> {
    let mut out = vec![
        check("eta_table", move |_| {
            let e = th::eta_basis(g);
            let sum = e.iter().fold(th::ThetaChar::zero(g), |a, &b| a + b);
            Ok(Outcome::text(sum.is_zero() && e[2 * g + 1].is_zero(), th::dump(&e)))
        }),
        check("subset_bijection", move |_| {
            let ok = th::all_chars(g).all(|z| th::char_of_subset(&th::subset_of_char(z), g) == z);
            Ok(Outcome::text(ok, format!("chars={}", 1u64 << (2 * g))))
        }),
        check("balanced_even", move |_| {
            let ok = th::all_chars(g).filter(|&z| th::is_balanced(z)).all(|z| z.is_even());
            Ok(Outcome::text(ok, format!("g={g}")))
        }),
        check("subspace_counts", move |_| {
            let counts: Vec<usize> = (0..=2 * g).map(|d| th::enumerate_subspaces(g, d).len()).collect();
            let ok = counts.iter().enumerate().all(|(d, &c)| c as u128 == th::gaussian_binomial(2 * g, d));
            Ok(Outcome::text(ok, format!("{counts:?}")))
        }),
        check("balanced_structure", move |_| {
            let mut n = 0;
            for d in 0..=g {
                for v in th::enumerate_subspaces(g, d) {
                    if !v.all_balanced() {
                        continue;
                    }
                    if !v.is_isotropic() {
                        return Ok(Outcome::text(false, "balanced but not isotropic".into()));
                    }
                    let s = th::balanced_structure(&v)?;
                    let gens: Vec<th::ThetaChar> =
                        s.h_elements().iter().map(|&h| th::char_of_subset(&s.subset_of(h), g)).collect();
                    if F2Subspace::span(g, &gens) != v {
                        return Ok(Outcome::text(false, format!("{v:?}")));
                    }
                    n += 1;
                }
            }
            Ok(Outcome::text(true, format!("subspaces={n}")))
        }),
    ];
    if g == 1 {
        out.push(check("frobenius_brute_force", |_| {
            let chars: Vec<th::ThetaChar> = th::all_chars(1).collect();
            let mut seqs: Vec<Vec<th::ThetaChar>> = vec![Vec::new()];
            let mut compared = 0;
            for _ in 0..3 {
                seqs = seqs.iter().flat_map(|s| chars.iter().map(move |&c| [s.as_slice(), &[c]].concat())).collect();
                for a in &seqs {
                    for b in &seqs {
                        if th::frobenius_same_orbit(a, b)? != th::same_orbit_brute_force_genus_one(a, b) {
                            return Ok(Outcome::text(false, format!("{a:?} {b:?}")));
                        }
                        compared += 1;
                    }
                }
            }
            Ok(Outcome::text(true, format!("pairs={compared}")))
        }));
    }
    if g == 2 {
        out.push(check("witt_q", |_| {
            let t = th::witt_q_tally(1, 1)?;
            Ok(Outcome::text(t.restricted_pass == t.subspaces, format!("{t:?}")))
        }));
    }
    out
}

fn stretch_checks(g: usize) -> Vec<Check> {
    vec![
        check("k_equals_h_pointwise", move |_| {
            let mut ok = true;
            for p in sample_points(2 * g + 2, 5) {
                ok &= th::k_form_at(g, &p)? == h_form_at(g, &p)?;
            }
            Ok(Outcome::text(ok, "points=5".into()))
        }),
        check("k_equals_h_exact", move |x| {
            let h = x.h(g)?;
            let k = x.k(g)?;
            Ok(Outcome::poly(k.poly == h.poly, &k.poly))
        }),
    ]
}

fn checks_for(suite: Suite, g: usize) -> Vec<Check> {
    match suite {
        Suite::Construct => construct_checks(g),
        Suite::Ansatz => ansatz_checks(g),
        Suite::Grushevsky => grushevsky_checks(g),
        Suite::Morozov => morozov_checks(g),
        Suite::Theta => theta_checks(g),
        Suite::Stretch => stretch_checks(g),
    }
}

/// Runs every check of `suite` at genus `g`, concurrently, reporting in
/// a fixed order.
pub fn run_suite(suite: Suite, g: usize, inputs: &Inputs) -> Result<VerificationReport> {
    if g == 0 {
        return Err(Error::PreconditionViolated("genus must be at least 1".into()));
    }
    if suite == Suite::Stretch && g < 3 {
        return Err(Error::PreconditionViolated("the stretch suite needs genus at least 3".into()));
    }
    let checks = checks_for(suite, g);
    let records = checks
        .par_iter()
        .map(|c| {
            let start = Instant::now();
            let result = (c.run)(inputs);
            let seconds = start.elapsed().as_secs_f64();
            let (status, hash, detail) = match result {
                Ok(o) => (if o.pass { Status::Pass } else { Status::Fail }, o.hash, o.detail),
                Err(e @ Error::ResourceBudgetExceeded { .. }) => (Status::Budget, digest(""), Some(e.to_string())),
                Err(e) => (Status::Error, digest(""), Some(e.to_string())),
            };
            CheckRecord { name: c.name.clone(), genus: g, status, seconds, hash, detail }
        })
        .collect();
    Ok(VerificationReport { records })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_one_suites_pass() {
        let inputs = Inputs::new(None, Budget::unlimited());
        for suite in [Suite::Construct, Suite::Ansatz, Suite::Grushevsky, Suite::Morozov, Suite::Theta] {
            let r = run_suite(suite, 1, &inputs).unwrap();
            assert!(r.passed(), "{suite}: {}", r.to_text());
        }
    }

    #[test]
    fn budget_is_reported() {
        let inputs = Inputs::new(None, Budget::terms(10));
        let r = run_suite(Suite::Construct, 2, &inputs).unwrap();
        assert!(r.records.iter().any(|x| x.status == Status::Budget));
        assert_eq!(r.exit_code(), 2);
    }

    #[test]
    fn compute_is_idempotent() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let b = Budget::unlimited();
        let h = cmd_compute(&CacheKey::new(Target::H, 1, None), &cache, &b, None).unwrap();
        let k = cmd_compute(&CacheKey::new(Target::K, 1, None), &cache, &b, None).unwrap();
        assert_eq!(h.hash, k.hash);
        assert!(!h.cached);
        let again = cmd_compute(&CacheKey::new(Target::H, 1, None), &cache, &b, None).unwrap();
        assert!(again.cached);
        assert_eq!(again.hash, h.hash);
        let gt = cmd_compute(&CacheKey::new(Target::GTilde, 1, Some(3)), &cache, &b, None).unwrap();
        let p = cache.load(&CacheKey::new(Target::GTilde, 1, Some(3))).unwrap().unwrap();
        assert!(p.is_zero());
        assert_eq!(gt.path, dir.path().join("Gt_g1_d3.binv"));
    }

    #[test]
    fn sample_points_are_distinct() {
        for p in sample_points(8, 5) {
            for i in 0..p.len() {
                for j in 0..i {
                    assert_ne!(p[i], p[j]);
                }
            }
        }
    }
}
