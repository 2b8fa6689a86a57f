//! Verification grids and a worker-pool runner whose output order does not
//! depend on scheduling.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use macdo_core::macdonald::{cauchy_dual_check, determinantal_check, dual_lowering_check, eigen_check, JTable};
use macdo_core::partitions::{multi_indices_of_weight, partitions_bounded, MultiIndex, Partition};
use macdo_core::qbinomial::{
    chu_vandermonde2_check, chu_vandermonde_check, qbinom_multiplicative_identity_check, qbinom_theorem_check,
};
use macdo_core::raising::{
    b_oracle_check, f_matrix_check, hall_littlewood_check, iterated_build_check, key_identity_check,
    phi_degree_check, phi_oracle_check, verify_raising, HallLittlewoodOperator, RaisingOperator,
};
use macdo_core::report::IdentityReport;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rayon::prelude::*;

/// Largest grid accepted without `--unsafe-limits`.
pub const DESK_MAX_N: usize = 4;
pub const DESK_MAX_M: u32 = 4;
pub const DESK_MAX_WEIGHT: u32 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Raising,
    Qbinom,
    Chu,
    Keyid,
    Oracles,
    Cauchy,
    Hl,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::Raising,
        Suite::Qbinom,
        Suite::Chu,
        Suite::Keyid,
        Suite::Oracles,
        Suite::Cauchy,
        Suite::Hl,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Raising => "raising",
            Suite::Qbinom => "qbinom",
            Suite::Chu => "chu",
            Suite::Keyid => "keyid",
            Suite::Oracles => "oracles",
            Suite::Cauchy => "cauchy",
            Suite::Hl => "hl",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::EACH
            .iter()
            .chain([Suite::All].iter())
            .copied()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Grid bounds for a verification run. `n` and `m` are upper limits: every
/// variable count `1..=n` and weight `0..=m` is covered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub n: usize,
    pub m: u32,
    pub max_weight: u32,
    pub seed: u64,
    pub unsafe_limits: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            n: 3,
            m: 3,
            max_weight: 4,
            seed: 0,
            unsafe_limits: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.n == 0 {
            return Err("--n must be at least 1".into());
        }
        if self.unsafe_limits {
            return Ok(());
        }
        if self.n > DESK_MAX_N || self.m > DESK_MAX_M || self.max_weight > DESK_MAX_WEIGHT {
            return Err(format!(
                "limits exceed n <= {DESK_MAX_N}, m <= {DESK_MAX_M}, weight <= {DESK_MAX_WEIGHT}; pass --unsafe-limits to override"
            ));
        }
        Ok(())
    }
}

type Shared<V> = Result<Arc<V>, String>;

/// Build-once cache safe to share across workers; concurrent requests for
/// the same key wait for a single build.
struct Memo<K, V> {
    cells: Mutex<HashMap<K, Arc<OnceLock<Shared<V>>>>>,
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    fn new() -> Self {
        Memo {
            cells: Mutex::new(HashMap::new()),
        }
    }

    fn get(&self, key: &K, build: impl FnOnce() -> Result<V, String>) -> Shared<V> {
        let cell = {
            let mut cells = self.cells.lock().expect("memo lock");
            cells.entry(key.clone()).or_default().clone()
        };
        cell.get_or_init(|| build().map(Arc::new)).clone()
    }
}

/// `J` tables and operators shared by every case of a run.
pub struct Context {
    degree: u32,
    tables: Memo<usize, JTable>,
    raising: Memo<(u32, usize), RaisingOperator>,
    hall_littlewood: Memo<(u32, usize), HallLittlewoodOperator>,
}

impl Context {
    /// Tables hold every `J_λ` with `|λ| <= degree`.
    pub fn new(degree: u32) -> Self {
        Context {
            degree,
            tables: Memo::new(),
            raising: Memo::new(),
            hall_littlewood: Memo::new(),
        }
    }

    pub fn table(&self, n: usize) -> Shared<JTable> {
        self.tables.get(&n, || JTable::build(n, self.degree).map_err(|e| e.to_string()))
    }

    pub fn raising(&self, m: u32, n: usize) -> Shared<RaisingOperator> {
        self.raising.get(&(m, n), || RaisingOperator::build(m, n).map_err(|e| e.to_string()))
    }

    pub fn hall_littlewood(&self, m: u32, n: usize) -> Shared<HallLittlewoodOperator> {
        self.hall_littlewood
            .get(&(m, n), || HallLittlewoodOperator::build(m, n).map_err(|e| e.to_string()))
    }
}

type CaseFn = Box<dyn Fn(&Context) -> Result<IdentityReport, String> + Send + Sync>;

/// One entry of a grid. `identity` and `params` identify the case even when
/// it fails before the check itself runs.
pub struct Case {
    pub identity: &'static str,
    pub params: Vec<(String, String)>,
    run: CaseFn,
}

impl Case {
    fn new(
        identity: &'static str,
        params: &[(&str, String)],
        run: impl Fn(&Context) -> Result<IdentityReport, String> + Send + Sync + 'static,
    ) -> Self {
        Case {
            identity,
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            run: Box::new(run),
        }
    }

    /// A shared table or operator that fails to build fails the case.
    pub fn run(&self, ctx: &Context) -> IdentityReport {
        (self.run)(ctx).unwrap_or_else(|msg| {
            let mut r = IdentityReport::new(self.identity);
            r.params = self.params.clone();
            r.fail(msg);
            r
        })
    }
}

fn lam_params(m: u32, lam: &Partition, n: usize) -> Vec<(&'static str, String)> {
    vec![("m", m.to_string()), ("lambda", lam.to_string()), ("n", n.to_string())]
}

/// Every partition with `|λ| <= w`, at most `len` parts and parts at most `max_part`.
fn partitions_upto(w: u32, len: usize, max_part: u32) -> Vec<Partition> {
    (0..=w).flat_map(|d| partitions_bounded(d, len, max_part)).collect()
}

/// Every multi-index of length `n` with weight at most `w`.
fn indices_upto(w: u32, n: usize) -> Vec<MultiIndex> {
    (0..=w).flat_map(|d| multi_indices_of_weight(d, n)).collect()
}

fn raising_cases(cfg: &RunConfig) -> Vec<Case> {
    let mut out = Vec::new();
    for n in 1..=cfg.n {
        for m in 0..=cfg.m {
            for lam in partitions_upto(cfg.max_weight, n, m) {
                let p = lam_params(m, &lam, n);
                let lam2 = lam.clone();
                out.push(Case::new("raising", &p, move |ctx| {
                    Ok(verify_raising(&*ctx.raising(m, n)?, &*ctx.table(n)?, &lam2))
                }));
            }
            out.push(Case::new("equivariance", &[("m", m.to_string()), ("n", n.to_string())], move |ctx| {
                Ok(ctx.raising(m, n)?.equivariance_check())
            }));
            out.push(Case::new("order_bound", &[("m", m.to_string()), ("n", n.to_string())], move |ctx| {
                Ok(ctx.raising(m, n)?.order_check())
            }));
        }
        for lam in partitions_upto(cfg.max_weight, n, cfg.m) {
            let lam2 = lam.clone();
            out.push(Case::new(
                "iterated_build",
                &[("lambda", lam.to_string()), ("n", n.to_string())],
                move |ctx| {
                    let t = ctx.table(n)?;
                    let ops = (0..=lam2.part(0)).map(|m| ctx.raising(m, n)).collect::<Result<Vec<_>, _>>()?;
                    Ok(iterated_build_check(&lam2, &t, |m| Ok(&*ops[m as usize])))
                },
            ));
        }
    }
    out
}

fn qbinom_cases(cfg: &RunConfig) -> Vec<Case> {
    let mut out = Vec::new();
    for n in 1..=cfg.n {
        for alpha in indices_upto(cfg.max_weight, n) {
            let a = alpha.clone();
            out.push(Case::new("qbinom_theorem", &[("alpha", alpha.to_string())], move |_| {
                Ok(qbinom_theorem_check(&a))
            }));
        }
        for alpha in indices_upto(cfg.max_weight.min(3), n) {
            for gamma in alpha.below() {
                for beta in gamma.below() {
                    let (a, g, b) = (alpha.clone(), gamma.clone(), beta.clone());
                    let p = [("alpha", a.to_string()), ("gamma", g.to_string()), ("beta", b.to_string())];
                    out.push(Case::new("qbinom_multiplicative", &p, move |_| {
                        Ok(qbinom_multiplicative_identity_check(&a, &g, &b))
                    }));
                }
            }
        }
    }
    out
}

fn chu_cases(cfg: &RunConfig) -> Vec<Case> {
    let mut out = Vec::new();
    for n in 1..=cfg.n {
        for alpha in indices_upto(cfg.max_weight, n) {
            for k in 0..=alpha.weight() {
                let a = alpha.clone();
                out.push(Case::new("chu_vandermonde", &[("alpha", a.to_string()), ("k", k.to_string())], move |_| {
                    Ok(chu_vandermonde_check(&a, k))
                }));
            }
        }
        for alpha in indices_upto(cfg.max_weight, n) {
            for beta in indices_upto(cfg.max_weight - alpha.weight(), n) {
                for k in 0..=alpha.weight() + beta.weight() {
                    let (a, b) = (alpha.clone(), beta.clone());
                    let p = [("alpha", a.to_string()), ("beta", b.to_string()), ("k", k.to_string())];
                    out.push(Case::new("chu_vandermonde2", &p, move |_| Ok(chu_vandermonde2_check(&a, &b, k))));
                }
            }
        }
    }
    out
}

/// `(m, n)` pairs for the key identity: both within the limits and
/// `m + n <= 5`, which keeps every case at desk scale.
pub fn keyid_grid(cfg: &RunConfig) -> Vec<(u32, usize)> {
    let mut out = Vec::new();
    for n in 1..=cfg.n {
        for m in 0..=cfg.m {
            if m as usize + n <= 5 {
                out.push((m, n));
            }
        }
    }
    out
}

fn keyid_cases(cfg: &RunConfig) -> Vec<Case> {
    let mut out = Vec::new();
    for (m, n) in keyid_grid(cfg) {
        let p = [("m", m.to_string()), ("n", n.to_string())];
        out.push(Case::new("key_identity", &p, move |ctx| Ok(key_identity_check(&*ctx.raising(m, n)?))));
        out.push(Case::new("phi_degree", &p, move |ctx| Ok(phi_degree_check(&*ctx.raising(m, n)?))));
    }
    out
}

fn oracle_cases(cfg: &RunConfig) -> Vec<Case> {
    let mut out = Vec::new();
    for n in 1..=cfg.n {
        for m in 0..=cfg.m {
            for alpha in multi_indices_of_weight(m, n) {
                let a = alpha.clone();
                let p = [("n", n.to_string()), ("m", m.to_string()), ("alpha", a.to_string())];
                out.push(Case::new("phi_oracle", &p, move |_| Ok(phi_oracle_check(n, m, &a))));
            }
            out.push(Case::new("b_oracle", &[("n", n.to_string()), ("m", m.to_string())], move |_| {
                Ok(b_oracle_check(n, m))
            }));
        }
    }
    for n in 1..=cfg.n.min(2) {
        for alpha in indices_upto(cfg.m, n) {
            for beta in alpha.below() {
                let (a, b) = (alpha.clone(), beta.clone());
                out.push(Case::new("f_matrix", &[("alpha", a.to_string()), ("beta", b.to_string())], move |_| {
                    Ok(f_matrix_check(&a, &b))
                }));
            }
        }
    }
    out
}

fn cauchy_cases(cfg: &RunConfig) -> Vec<Case> {
    let mut out = Vec::new();
    for n in 1..=cfg.n {
        out.push(Case::new("j_integrality", &[("n", n.to_string())], move |ctx| {
            ctx.table(n)?;
            Ok(IdentityReport::new("j_integrality").param("n", n))
        }));
        for lam in partitions_upto(cfg.max_weight, n, cfg.max_weight) {
            let l = lam.clone();
            out.push(Case::new("eigen", &[("lambda", l.to_string()), ("n", n.to_string())], move |ctx| {
                Ok(eigen_check(&*ctx.table(n)?, &l))
            }));
        }
        out.push(Case::new("determinantal", &[("n", n.to_string())], move |_| Ok(determinantal_check(n))));
    }
    for n in 1..=cfg.n.min(2) {
        for m in 0..=(cfg.m as usize).min(2) {
            out.push(Case::new("cauchy", &[("n", n.to_string()), ("m", m.to_string())], move |_| {
                Ok(cauchy_dual_check(n, m))
            }));
        }
    }
    for m in 0..=(cfg.m as usize).min(2) {
        for mu in partitions_upto(cfg.max_weight, m, cfg.max_weight) {
            let u = mu.clone();
            out.push(Case::new("dual_lowering", &[("mu", u.to_string()), ("m", m.to_string())], move |_| {
                Ok(dual_lowering_check(&u, m))
            }));
        }
    }
    out
}

fn hl_cases(cfg: &RunConfig) -> Vec<Case> {
    let mut out = Vec::new();
    for n in 1..=cfg.n {
        for m in 1..=cfg.m {
            for lam in partitions_upto(cfg.max_weight.min(3), n, m) {
                let l = lam.clone();
                out.push(Case::new("hall_littlewood", &lam_params(m, &lam, n), move |ctx| {
                    Ok(hall_littlewood_check(&*ctx.hall_littlewood(m, n)?, &*ctx.table(n)?, &l))
                }));
            }
        }
    }
    out
}

/// The cases of `suite` in canonical order.
pub fn cases(suite: Suite, cfg: &RunConfig) -> Vec<Case> {
    match suite {
        Suite::Raising => raising_cases(cfg),
        Suite::Qbinom => qbinom_cases(cfg),
        Suite::Chu => chu_cases(cfg),
        Suite::Keyid => keyid_cases(cfg),
        Suite::Oracles => oracle_cases(cfg),
        Suite::Cauchy => cauchy_cases(cfg),
        Suite::Hl => hl_cases(cfg),
        Suite::All => Suite::EACH.iter().flat_map(|&s| cases(s, cfg)).collect(),
    }
}

/// Worker count from `MACDO_THREADS`, if set to a positive integer.
pub fn thread_cap() -> Option<usize> {
    std::env::var("MACDO_THREADS").ok()?.trim().parse().ok().filter(|&k| k > 0)
}

/// Runs every case of `suite` and returns the reports in canonical order.
pub fn run(suite: Suite, cfg: &RunConfig) -> Vec<IdentityReport> {
    let ctx = Context::new(cfg.max_weight + cfg.m);
    run_cases(&cases(suite, cfg), &ctx, cfg.seed)
}

/// Runs `cases` on the worker pool against a shared context. The seed only
/// permutes the order work is handed out in; reports come back in the order
/// of `cases`.
pub fn run_cases(cases: &[Case], ctx: &Context, seed: u64) -> Vec<IdentityReport> {
    let mut order: Vec<usize> = (0..cases.len()).collect();
    order.shuffle(&mut StdRng::seed_from_u64(seed));
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(k) = thread_cap() {
        builder = builder.num_threads(k);
    }
    let pool = builder.build().expect("thread pool");
    let mut done: Vec<(usize, IdentityReport)> =
        pool.install(|| order.par_iter().map(|&i| (i, cases[i].run(ctx))).collect());
    done.sort_by_key(|(i, _)| *i);
    done.into_iter().map(|(_, r)| r).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> RunConfig {
        RunConfig {
            n: 2,
            m: 2,
            max_weight: 2,
            ..RunConfig::default()
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH.iter().chain([Suite::All].iter()) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), *s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn limits() {
        assert!(RunConfig::default().validate().is_ok());
        let wide = RunConfig {
            n: 5,
            ..RunConfig::default()
        };
        assert!(wide.validate().is_err());
        assert!(RunConfig { unsafe_limits: true, ..wide }.validate().is_ok());
        assert!(RunConfig { n: 0, ..RunConfig::default() }.validate().is_err());
    }

    #[test]
    fn keyid_grid_covers_spot_cases() {
        let g = keyid_grid(&RunConfig::default());
        assert!(g.contains(&(3, 2)) && g.contains(&(2, 3)) && !g.contains(&(3, 3)));
    }

    #[test]
    fn order_is_independent_of_seed() {
        let a = run(Suite::Raising, &small());
        let b = run(Suite::Raising, &RunConfig { seed: 99, ..small() });
        assert_eq!(a, b);
        assert!(a.iter().all(|r| r.passed));
    }

    #[test]
    fn raising_grid_includes_zero_branch() {
        let cfg = RunConfig {
            n: 1,
            m: 1,
            max_weight: 1,
            ..RunConfig::default()
        };
        let reports = run(Suite::Raising, &cfg);
        assert!(reports
            .iter()
            .any(|r| r.identity == "raising" && r.params.contains(&("lambda".into(), "1".into()))));
        assert!(reports.iter().all(|r| r.passed));
    }
}
