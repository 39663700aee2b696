//! Registry of checkable identities, a deterministic parallel trial runner
//! with greedy shrinking, and text/JSON reports.

mod cartan;
mod extended;
mod hochschild;
mod koszul;
mod linfty;
mod report;
mod uactions;
mod value;

pub use report::{IdentityRecord, SuiteReport, REPORT_SCHEMA};
pub use value::Value;

use crate::cartan::VolumeForm;
use crate::error::{Error, Result};
use crate::extended::Window;
use crate::ring::q;
use crate::sample::{Sampler, SeedableRng, TrialRng};
use fnv::FnvHasher;
use rayon::prelude::*;
use std::hash::Hasher;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteName {
    Cartan,
    Hochschild,
    Extended,
    Uactions,
    Linfty,
    Koszul,
    All,
}

impl SuiteName {
    pub const CONCRETE: [SuiteName; 6] = [
        SuiteName::Cartan,
        SuiteName::Hochschild,
        SuiteName::Extended,
        SuiteName::Uactions,
        SuiteName::Linfty,
        SuiteName::Koszul,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::Cartan => "cartan",
            SuiteName::Hochschild => "hochschild",
            SuiteName::Extended => "extended",
            SuiteName::Uactions => "uactions",
            SuiteName::Linfty => "linfty",
            SuiteName::Koszul => "koszul",
            SuiteName::All => "all",
        }
    }
}

impl FromStr for SuiteName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SuiteName::CONCRETE
            .iter()
            .chain(std::iter::once(&SuiteName::All))
            .find(|n| n.as_str() == s)
            .copied()
            .ok_or_else(|| Error::Config(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct SuiteConfig {
    pub suite: SuiteName,
    pub dim: usize,
    pub ucap: usize,
    pub arity_cap: usize,
    pub window: (i32, i32),
    pub trials: usize,
    pub seed: u64,
    pub with_controls: bool,
    /// Record wall-clock time per identity; off by default so reports are
    /// reproducible byte for byte.
    #[serde(skip)]
    pub timings: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suite: SuiteName::All,
            dim: 2,
            ucap: 4,
            arity_cap: 3,
            window: (-4, 4),
            trials: 50,
            seed: 42,
            with_controls: false,
            timings: false,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(Error::Config("dimension must be at least 1".into()));
        }
        if self.trials == 0 {
            return Err(Error::Config("trials must be at least 1".into()));
        }
        if self.arity_cap == 0 {
            return Err(Error::Config("arity cap must be at least 1".into()));
        }
        Window::new(self.window.0, self.window.1)?;
        Ok(())
    }
}

/// Shared read-only state handed to generators and checks.
pub struct Ctx {
    pub cfg: SuiteConfig,
}

impl Ctx {
    /// Sampler over the configured window with at most `terms` terms.
    pub fn sampler(&self, terms: usize) -> Sampler {
        Sampler::new(self.cfg.dim, self.cfg.window.0, self.cfg.window.1, terms, self.cfg.ucap)
    }

    /// Sampler over a narrower window, for checks whose cost grows with exponents.
    pub fn small_sampler(&self, terms: usize, ucap: usize) -> Sampler {
        let w = self.cfg.window.1.min(-self.cfg.window.0).clamp(1, 2);
        Sampler::new(self.cfg.dim, -w, w, terms, ucap)
    }

    pub fn window(&self) -> Window {
        Window::new(self.cfg.window.0, self.cfg.window.1).expect("validated")
    }

    /// Densities `1`, `t_1` and `3 t_1² t_2⁻¹` (`3 t_1²` in dimension one).
    pub fn volumes(&self) -> Vec<VolumeForm> {
        let d = self.cfg.dim;
        let mut two = vec![1; d];
        two[0] = 2;
        let mut three = vec![1; d];
        three[0] = 3;
        if d > 1 {
            three[1] = 0;
        }
        vec![
            VolumeForm::new(q(1), vec![1; d]).expect("unit density"),
            VolumeForm::new(q(1), two).expect("unit density"),
            VolumeForm::new(q(3), three).expect("unit density"),
        ]
    }

    pub fn volume(&self, trial: usize) -> VolumeForm {
        let v = self.volumes();
        v[trial % v.len()].clone()
    }
}

pub type Generator = Arc<dyn Fn(&Ctx, &mut TrialRng, usize) -> Vec<Value> + Send + Sync>;
pub type Check = Arc<dyn Fn(&Ctx, &[Value]) -> Result<bool> + Send + Sync>;
pub type ExactCheck = Arc<dyn Fn(&Ctx) -> Result<Outcome> + Send + Sync>;

/// Result of a non-randomized check.
#[derive(Clone, Debug, Default)]
pub struct Outcome {
    pub pass: bool,
    pub detail: Option<String>,
    pub table: Option<serde_json::Value>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expect {
    Pass,
    /// Planted errors and documented non-identities that must fail.
    Fail,
}

#[derive(Clone)]
pub enum Kind {
    Trials { gen: Generator, check: Check },
    Exact(ExactCheck),
}

#[derive(Clone)]
pub struct Identity {
    pub id: &'static str,
    pub suite: SuiteName,
    /// Short description of where the identity comes from.
    pub location: &'static str,
    /// What exactly is compared (truncation orders, arities).
    pub scope: String,
    pub expect: Expect,
    /// Controls run only on request.
    pub control: bool,
    pub kind: Kind,
}

impl Identity {
    pub fn trials(
        id: &'static str,
        suite: SuiteName,
        location: &'static str,
        scope: impl Into<String>,
        gen: impl Fn(&Ctx, &mut TrialRng, usize) -> Vec<Value> + Send + Sync + 'static,
        check: impl Fn(&Ctx, &[Value]) -> Result<bool> + Send + Sync + 'static,
    ) -> Self {
        Identity {
            id,
            suite,
            location,
            scope: scope.into(),
            expect: Expect::Pass,
            control: false,
            kind: Kind::Trials {
                gen: Arc::new(gen),
                check: Arc::new(check),
            },
        }
    }

    pub fn exact(
        id: &'static str,
        suite: SuiteName,
        location: &'static str,
        scope: impl Into<String>,
        check: impl Fn(&Ctx) -> Result<Outcome> + Send + Sync + 'static,
    ) -> Self {
        Identity {
            id,
            suite,
            location,
            scope: scope.into(),
            expect: Expect::Pass,
            control: false,
            kind: Kind::Exact(Arc::new(check)),
        }
    }

    /// Marks a documented non-identity that is expected to fail.
    pub fn expect_failure(mut self) -> Self {
        self.expect = Expect::Fail;
        self
    }

    /// Marks a planted error; implies an expected failure.
    pub fn as_control(mut self) -> Self {
        self.expect = Expect::Fail;
        self.control = true;
        self
    }
}

/// Every identity, controls included, sorted by id.
pub fn registry(cfg: &SuiteConfig) -> Vec<Identity> {
    let mut all = Vec::new();
    all.extend(cartan::identities(cfg));
    all.extend(hochschild::identities(cfg));
    all.extend(extended::identities(cfg));
    all.extend(koszul::identities(cfg));
    all.extend(uactions::identities(cfg));
    all.extend(linfty::identities(cfg));
    all.sort_by_key(|i| i.id);
    all
}

/// Per-trial seed from the global seed, the identity id and the trial index.
pub fn trial_seed(seed: u64, id: &str, trial: usize) -> u64 {
    let mut h = FnvHasher::default();
    h.write_u64(seed);
    h.write(id.as_bytes());
    h.write_u64(trial as u64);
    h.finish()
}

const SHRINK_BUDGET: usize = 400;

/// Greedily drops single terms while the check keeps failing.
fn shrink(ctx: &Ctx, check: &Check, mut inputs: Vec<Value>) -> Vec<Value> {
    let mut budget = SHRINK_BUDGET;
    'outer: loop {
        for v in 0..inputs.len() {
            for p in 0..inputs[v].num_pieces() {
                if budget == 0 {
                    break 'outer;
                }
                budget -= 1;
                let mut cand = inputs.clone();
                cand[v] = inputs[v].without_piece(p);
                if matches!(check(ctx, &cand), Ok(false)) {
                    inputs = cand;
                    continue 'outer;
                }
            }
        }
        break;
    }
    inputs
}

fn run_identity(ctx: &Ctx, ident: &Identity) -> IdentityRecord {
    let start = Instant::now();
    let mut rec = IdentityRecord::new(ident);
    match &ident.kind {
        Kind::Trials { gen, check } => {
            let results: Vec<(Vec<Value>, Result<bool>)> = (0..ctx.cfg.trials)
                .into_par_iter()
                .map(|t| {
                    let mut rng = TrialRng::seed_from_u64(trial_seed(ctx.cfg.seed, ident.id, t));
                    let inputs = gen(ctx, &mut rng, t);
                    let r = check(ctx, &inputs);
                    (inputs, r)
                })
                .collect();
            rec.trials = results.len();
            if let Some((t, (_, Err(e)))) = results.iter().enumerate().find(|(_, (_, r))| r.is_err()) {
                rec.set_error(format!("trial {t}: {e}"));
            } else if let Some((t, (inputs, _))) = results.iter().enumerate().find(|(_, (_, r))| matches!(r, Ok(false))) {
                let small = shrink(ctx, check, inputs.clone());
                rec.set_failure(t, small.iter().map(|v| v.to_string()).collect());
            } else {
                rec.set_pass();
            }
        }
        Kind::Exact(f) => {
            rec.trials = 1;
            match f(ctx) {
                Ok(out) => {
                    rec.detail = out.detail;
                    rec.table = out.table;
                    if out.pass {
                        rec.set_pass();
                    } else {
                        rec.set_failure_without_input();
                    }
                }
                Err(e) => rec.set_error(e.to_string()),
            }
        }
    }
    if ctx.cfg.timings {
        rec.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    rec
}

/// Runs the selected suite(s); records are ordered by identity id.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let ctx = Ctx { cfg: cfg.clone() };
    let selected: Vec<Identity> = registry(cfg)
        .into_iter()
        .filter(|i| cfg.suite == SuiteName::All || i.suite == cfg.suite)
        .filter(|i| !i.control || cfg.with_controls)
        .collect();
    let records: Vec<IdentityRecord> = selected.par_iter().map(|i| run_identity(&ctx, i)).collect();
    Ok(SuiteReport::new(cfg.clone(), records))
}

/// Runs one identity by id.
pub fn run_one(cfg: &SuiteConfig, id: &str) -> Result<IdentityRecord> {
    cfg.validate()?;
    let ctx = Ctx { cfg: cfg.clone() };
    let ident = registry(cfg)
        .into_iter()
        .find(|i| i.id == id)
        .ok_or_else(|| Error::Config(format!("unknown identity `{id}`")))?;
    Ok(run_identity(&ctx, &ident))
}
