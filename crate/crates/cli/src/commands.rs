use std::sync::Arc;

use jumploci_core::arith::parse::parse_scalar;
use jumploci_core::groebner::Ideal;
use jumploci_core::jumploci::{crk_at, duality_check, realize, stable_betti_oracle, JumpLociReport, Model};
use jumploci_core::resolution::{betti_with_fit, FreeResolution, ModuleInput, QuasiPoly, RingData};
use jumploci_core::{Error as CoreError, Poly, PolyMatrix, PolyRing, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{CliError, Result};
use crate::session::Session;

pub const DEFAULT_N: usize = 20;
const BETTI_CAP: usize = 64;
const ORACLE_N: usize = 8;
const ORACLE_CAP: usize = 512;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Compute,
    Betti,
    Dual,
    /// The chain file text: one ideal per line, `0` and `1` for the zero
    /// and unit ideals.
    Realize { chain: String },
    Crk { point: Vec<String> },
    Oracle { points: usize },
}

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    pub seed: u64,
    pub n: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LocusJson {
    pub i_from: usize,
    pub i_to: usize,
    pub ideal: Vec<String>,
    pub dim: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct DualityJson {
    pub per_index_equal: bool,
    pub bdeg_equal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportJson {
    pub rank: usize,
    pub jump_numbers: Vec<usize>,
    pub loci: Vec<LocusJson>,
    pub complexity: usize,
    pub betti_degree: Option<u64>,
    pub bass_degree: Option<u64>,
    pub duality: Option<DualityJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct QuasiPolyJson {
    pub even: Vec<String>,
    pub odd: Vec<String>,
    pub valid_from: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct BettiJson {
    pub betti: Vec<usize>,
    pub quasi_polynomial: QuasiPolyJson,
}

#[derive(Clone, Debug, Serialize)]
pub struct BettiPairJson {
    pub n: usize,
    pub module: BettiJson,
    pub dual: Option<BettiJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RealizeJson {
    pub nu: usize,
    pub plateaus: Vec<(usize, usize)>,
    pub report: ReportJson,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrkJson {
    pub point: Vec<String>,
    pub crk: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct OraclePointJson {
    pub point: Vec<String>,
    pub stable_betti: usize,
    pub crk: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleJson {
    pub points: Vec<OraclePointJson>,
    pub all_equal: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Output {
    Report(ReportJson),
    Betti(BettiPairJson),
    Realize(RealizeJson),
    Crk(CrkJson),
    Oracle(OracleJson),
}

/// A command's output, with the reason it should exit with status 2 if a
/// cross-check failed.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub output: Output,
    pub failure: Option<String>,
}

impl Outcome {
    fn ok(output: Output) -> Outcome {
        Outcome { output, failure: None }
    }
}

/// Generators as printed: `[]` for the zero ideal, `["1"]` for the unit
/// ideal.
pub fn ideal_strings(ideal: &Ideal) -> Vec<String> {
    if ideal.is_unit() {
        return vec!["1".into()];
    }
    ideal.gens().iter().filter(|g| !g.is_zero()).map(|g| g.to_string()).collect()
}

pub fn report_json(r: &JumpLociReport, bass_degree: Option<u64>, duality: Option<DualityJson>) -> ReportJson {
    ReportJson {
        rank: r.rank,
        jump_numbers: r.jump_numbers.clone(),
        loci: r
            .loci
            .iter()
            .map(|p| LocusJson { i_from: p.i_from, i_to: p.i_to, ideal: ideal_strings(&p.ideal), dim: p.dim })
            .collect(),
        complexity: r.complexity,
        betti_degree: r.betti_degree,
        bass_degree,
        duality,
    }
}

fn presentation(session: &Session, what: &str) -> Result<PolyMatrix> {
    match &session.module {
        ModuleInput::Presentation(p) => Ok(p.clone()),
        ModuleInput::Complex(_) => Err(CliError::Usage(format!("`{what}` needs a module given by `module coker`"))),
    }
}

fn betti_json(res: &FreeResolution, q: &QuasiPoly, n: usize) -> BettiJson {
    let mut betti = res.betti().betti;
    betti.resize(n + 1, 0);
    BettiJson {
        betti,
        quasi_polynomial: QuasiPolyJson {
            even: q.q_ev.iter().map(|c| c.to_string()).collect(),
            odd: q.q_odd.iter().map(|c| c.to_string()).collect(),
            valid_from: q.valid_from,
        },
    }
}

fn parse_chain(s: &Arc<PolyRing>, text: &str) -> Result<Vec<Ideal>> {
    let mut chain = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let gens = line
            .split(',')
            .map(|g| Poly::parse(s, g.trim()))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| CliError::Usage(format!("chain line {}: {e}", k + 1)))?;
        chain.push(Ideal::new(s, gens));
    }
    Ok(chain)
}

fn parse_point(ring: &RingData, point: &[String]) -> Result<Vec<Scalar>> {
    if point.len() != ring.c() {
        return Err(CoreError::Arity { expected: ring.c(), found: point.len() }.into());
    }
    point.iter().map(|t| parse_scalar(ring.operators(), t).map_err(CliError::from)).collect()
}

/// A random nonzero point supported on the χ_i of one internal degree, so
/// that `Σ a_i f_i` is homogeneous.
fn random_point(rng: &mut ChaCha8Rng, ring: &RingData) -> Vec<Scalar> {
    let degrees = ring.ci_degrees();
    let field = ring.field();
    loop {
        let d = degrees[rng.random_range(0..degrees.len())];
        let a: Vec<Scalar> =
            degrees.iter().map(|&e| if e == d { field.random(rng) } else { field.zero() }).collect();
        if a.iter().any(|x| !x.is_zero()) {
            return a;
        }
    }
}

pub fn run_command(cmd: &Command, session: &Session, opts: &RunOptions) -> Result<Outcome> {
    let ring = &session.ring;
    let seed = opts.seed;
    match cmd {
        Command::Compute => {
            let model = Model::build(ring, &session.module)?;
            let report = model.report(seed)?;
            let bass = model.bass_degree(seed)?;
            Ok(Outcome::ok(Output::Report(report_json(&report, bass, None))))
        }
        Command::Dual => {
            let model = Model::build(ring, &session.module)?;
            let d = duality_check(&model, seed)?;
            let duality = DualityJson { per_index_equal: d.per_index_equal.iter().all(|&b| b), bdeg_equal: d.bdeg_equal };
            let failure = (!d.holds()).then(|| "the jump loci or Betti degrees of M and M* differ".to_string());
            let output = Output::Report(report_json(&d.report, d.dual_report.betti_degree, Some(duality)));
            Ok(Outcome { output, failure })
        }
        Command::Betti => {
            let p = presentation(session, "betti")?;
            let n = opts.n.unwrap_or(DEFAULT_N);
            let cap = BETTI_CAP.max(2 * n);
            let (res, q) = betti_with_fit(&p, ring, n, cap)?;
            let model = Model::build(ring, &session.module)?;
            let dual = match model.dual()?.presentation() {
                Some(pd) => {
                    let (res, q) = betti_with_fit(pd, ring, n, cap)?;
                    Some(betti_json(&res, &q, n))
                }
                None => None,
            };
            Ok(Outcome::ok(Output::Betti(BettiPairJson { n, module: betti_json(&res, &q, n), dual })))
        }
        Command::Realize { chain } => {
            if let Some(f) = ring.ci().iter().find(|f| f.terms().iter().any(|(m, _)| m.total_degree() < 2)) {
                return Err(CliError::Usage(format!("realize needs every ci generator in m², but {f} is not")));
            }
            let chain = parse_chain(ring.operators(), chain)?;
            let nu = ring.n();
            let r = realize(&chain, nu)?;
            Ok(Outcome::ok(Output::Realize(RealizeJson { nu, plateaus: r.plateaus, report: report_json(&r.report, None, None) })))
        }
        Command::Crk { point } => {
            let a = parse_point(ring, point)?;
            let model = Model::build(ring, &session.module)?;
            let crk = crk_at(model.twisted(), &a)?;
            Ok(Outcome::ok(Output::Crk(CrkJson { point: a.iter().map(|x| x.to_string()).collect(), crk })))
        }
        Command::Oracle { points } => {
            let p = presentation(session, "oracle")?;
            let model = Model::build(ring, &session.module)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = opts.n.unwrap_or(ORACLE_N);
            let mut out = Vec::with_capacity(*points);
            for _ in 0..*points {
                let a = random_point(&mut rng, ring);
                let stable_betti = stable_betti_oracle(ring, &p, &a, n, ORACLE_CAP.max(n))?;
                let crk = crk_at(model.twisted(), &a)?;
                out.push(OraclePointJson { point: a.iter().map(|x| x.to_string()).collect(), stable_betti, crk });
            }
            let all_equal = out.iter().all(|o| o.stable_betti == o.crk);
            let failure = (!all_equal).then(|| "the stable Betti oracle disagrees with crk".to_string());
            Ok(Outcome { output: Output::Oracle(OracleJson { points: out, all_equal }), failure })
        }
    }
}
