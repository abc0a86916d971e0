//! Seeded property suites behind `monideal verify`.
//!
//! Trial `t` draws from a ChaCha8 stream `t` under the run seed, so any
//! single trial can be replayed without running the ones before it.

use std::fmt;

use clap::ValueEnum;
use monideal::augment::{augment_down, augment_up};
use monideal::generic::{p_c_union, type3_cardinality, type3_generators, type3_sets};
use monideal::lattice::{is_antichain, Antichain, LatticePoint};
use monideal::oracle::{brute_socle_down, brute_socle_up, default_box};
use monideal::reconstruct::{pseudo_partition_2, socle_of_generators, retrieve_generators, type2_generators, zero_dim_ideal_from_socle};
use monideal::sample::{random_antichain, random_bounds, random_incomparable_pair, random_order_generic};
use monideal::{DownSet, UpSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::commands::CliError;
use crate::format::{AntichainDocument, Role};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Roundtrip,
    Duality,
    Type2,
    Type3,
    Oracle,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.to_possible_value().expect("no skipped variants");
        f.write_str(v.get_name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub suite: Suite,
    pub seed: u64,
    pub trials: usize,
    pub dmax: Option<usize>,
    pub kmax: Option<usize>,
}

impl VerifyConfig {
    pub fn new(suite: Suite) -> Self {
        Self { suite, seed: 0, trials: 100, dmax: None, kmax: None }
    }

    fn dims(&self) -> Result<(usize, usize), CliError> {
        let (dmin, dmax_default, dcap) = match self.suite {
            Suite::Roundtrip | Suite::Duality => (1, 4, 8),
            Suite::Type2 => (2, 6, 12),
            Suite::Type3 => (6, 10, 12),
            Suite::Oracle => (1, 3, 4),
        };
        let dmax = self.dmax.unwrap_or(dmax_default);
        if dmax < dmin || dmax > dcap {
            return Err(CliError::Usage(format!("--dmax for suite {} must lie in {dmin}..={dcap}", self.suite)));
        }
        Ok((dmin, dmax))
    }

    fn kmax(&self) -> Result<usize, CliError> {
        let k = self.kmax.unwrap_or(6);
        if !(1..=8).contains(&k) {
            return Err(CliError::Usage("--kmax must lie in 1..=8".into()));
        }
        Ok(k)
    }
}

/// One failing trial, with the instance as a re-runnable document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub trial: usize,
    pub detail: String,
    pub instance: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub config: VerifyConfig,
    pub passed: usize,
    pub failures: Vec<Counterexample>,
    /// Extra per-trial lines, such as the type-3 formula table.
    pub table: Vec<String>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.config;
        writeln!(f, "suite: {}", c.suite)?;
        writeln!(f, "seed: {}", c.seed)?;
        writeln!(f, "trials: {}", c.trials)?;
        writeln!(f, "passed: {}", self.passed)?;
        for line in &self.table {
            writeln!(f, "{line}")?;
        }
        for cx in &self.failures {
            writeln!(f, "counterexample: trial {} (seed {}, stream {}): {}", cx.trial, c.seed, cx.trial, cx.detail)?;
            for line in cx.instance.lines() {
                writeln!(f, "  {line}")?;
            }
        }
        writeln!(f, "result: {}", if self.ok() { "pass" } else { "fail" })
    }
}

pub fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

struct Outcome {
    failure: Option<(String, String)>,
    row: Option<String>,
}

fn doc(a: &Antichain, role: Role) -> String {
    AntichainDocument::from_antichain(a, role).to_string()
}

fn fail(detail: String, instance: &Antichain, role: Role) -> Outcome {
    Outcome { failure: Some((detail, doc(instance, role))), row: None }
}

fn pass() -> Outcome {
    Outcome { failure: None, row: None }
}

fn check(ok: monideal::Result<bool>, what: &str) -> Result<(), String> {
    match ok {
        Ok(true) => Ok(()),
        Ok(false) => Err(format!("{what} does not hold")),
        Err(e) => Err(format!("{what}: {e}")),
    }
}

fn roundtrip(rng: &mut ChaCha8Rng, dims: (usize, usize), kmax: usize) -> Outcome {
    let d = rng.gen_range(dims.0..=dims.1);
    let k = rng.gen_range(1..=kmax);
    let g = random_antichain(rng, d, k, 1, 7).expect("valid sampling parameters");
    let (a, b) = random_bounds(rng, &g, 3).expect("nonempty antichain");
    let first = || -> monideal::Result<bool> {
        let s = UpSet::from_antichain(augment_up(&g, Some(&a), Some(&b))?).socle()?;
        Ok(DownSet::from_antichain(s).socle()? == g)
    };
    let second = || -> monideal::Result<bool> {
        let gens = DownSet::from_antichain(augment_down(&g, Some(&a), Some(&b))?).socle()?;
        Ok(UpSet::from_antichain(gens).socle()? == g)
    };
    match check(first(), "generator round trip").and(check(second(), "socle round trip")) {
        Ok(()) => pass(),
        Err(e) => fail(format!("{e} with a={a} b={b}"), &g, Role::Points),
    }
}

fn duality(rng: &mut ChaCha8Rng, dims: (usize, usize), kmax: usize) -> Outcome {
    let d = rng.gen_range(dims.0..=dims.1);
    let k = rng.gen_range(1..=kmax);
    let g = random_antichain(rng, d, k, 1, 7).expect("valid sampling parameters");
    let c = LatticePoint::new((0..d).map(|_| rng.gen_range(-6..=6)).collect()).expect("d >= 1");
    let r = LatticePoint::new((0..d).map(|_| rng.gen_range(0..=20)).collect()).expect("d >= 1");
    let laws = || -> monideal::Result<bool> {
        let u = UpSet::from_antichain(augment_up(&g, None, None)?);
        let s = u.socle()?;
        let shifted = UpSet::from_antichain(u.generators().translate(&c)?).socle()?;
        let rotated = DownSet::from_antichain(u.generators().rotate(&r)?).socle()?;
        Ok(shifted == s.translate(&c)? && rotated == s.rotate(&r)?)
    };
    match check(laws(), "translation and rotation laws") {
        Ok(()) => pass(),
        Err(e) => fail(format!("{e} with c={c} rho={r}"), &g, Role::Points),
    }
}

fn type2(rng: &mut ChaCha8Rng, dims: (usize, usize)) -> Outcome {
    let d = rng.gen_range(dims.0..=dims.1);
    let (p, q) = random_incomparable_pair(rng, d, 7).expect("d >= 2");
    let socle = Antichain::new(vec![p.clone(), q.clone()]).expect("incomparable pair");
    let run = || -> monideal::Result<bool> {
        let closed = type2_generators(&p, &q)?;
        let split = pseudo_partition_2(&p, &q)?;
        Ok(closed == zero_dim_ideal_from_socle(&socle)? && closed.len() == split.below.len() * split.above.len() + d)
    };
    match check(run(), "closed form and count") {
        Ok(()) => pass(),
        Err(e) => fail(e, &socle, Role::Socle),
    }
}

fn type3(rng: &mut ChaCha8Rng, dims: (usize, usize)) -> Outcome {
    let d = rng.gen_range(dims.0..=dims.1);
    let q = random_order_generic(rng, 3, d, 9).expect("d >= 6");
    let run = || -> monideal::Result<(bool, u64, usize)> {
        let gens = type3_generators(&q)?;
        let union = p_c_union(&q)?;
        let formula = type3_cardinality(&type3_sets(&q)?.sizes())?;
        let same = gens.points() == union.points.as_slice()
            && gens == zero_dim_ideal_from_socle(&q)?
            && is_antichain(&union.points)?
            && formula == gens.len() as u64;
        Ok((same, formula, gens.len()))
    };
    match run() {
        Ok((same, formula, count)) => {
            let row = Some(format!("  d={d} formula={formula} count={count}"));
            if same {
                Outcome { failure: None, row }
            } else {
                Outcome { row, ..fail("generator sets or counts disagree".into(), &q, Role::Socle) }
            }
        }
        Err(e) => fail(e.to_string(), &q, Role::Socle),
    }
}

fn oracle(rng: &mut ChaCha8Rng, dims: (usize, usize), kmax: usize) -> Outcome {
    let d = rng.gen_range(dims.0..=dims.1);
    let k = rng.gen_range(1..=kmax);
    let g = random_antichain(rng, d, k, 0, 6).expect("valid sampling parameters");
    let run = || -> monideal::Result<bool> {
        let bx = default_box(&g)?;
        let raw = socle_of_generators(&g)? == brute_socle_down(&g, &bx)?
            && retrieve_generators(&g)? == brute_socle_up(&g, &bx)?;
        let up = augment_up(&g, None, None)?;
        let down = augment_down(&g, None, None)?;
        let checked = UpSet::from_antichain(up.clone()).socle()? == brute_socle_down(&up, &default_box(&up)?)?
            && DownSet::from_antichain(down.clone()).socle()? == brute_socle_up(&down, &default_box(&down)?)?;
        Ok(raw && checked)
    };
    match check(run(), "agreement with box scan") {
        Ok(()) => pass(),
        Err(e) => fail(e, &g, Role::Generators),
    }
}

pub fn run(config: &VerifyConfig) -> Result<SuiteReport, CliError> {
    let dims = config.dims()?;
    let kmax = config.kmax()?;
    let one = |t: usize| -> Outcome {
        let mut rng = trial_rng(config.seed, t);
        match config.suite {
            Suite::Roundtrip => roundtrip(&mut rng, dims, kmax),
            Suite::Duality => duality(&mut rng, dims, kmax),
            Suite::Type2 => type2(&mut rng, dims),
            Suite::Type3 => type3(&mut rng, dims),
            Suite::Oracle => oracle(&mut rng, dims, kmax.min(5)),
        }
    };
    #[cfg(feature = "parallel")]
    let outcomes: Vec<Outcome> = (0..config.trials).into_par_iter().map(one).collect();
    #[cfg(not(feature = "parallel"))]
    let outcomes: Vec<Outcome> = (0..config.trials).map(one).collect();

    let mut report = SuiteReport { config: config.clone(), passed: 0, failures: Vec::new(), table: Vec::new() };
    if config.suite == Suite::Type3 {
        report.table.push("formula vs count:".into());
    }
    for (trial, o) in outcomes.into_iter().enumerate() {
        report.table.extend(o.row);
        match o.failure {
            None => report.passed += 1,
            Some((detail, instance)) => report.failures.push(Counterexample { trial, detail, instance }),
        }
    }
    Ok(report)
}
