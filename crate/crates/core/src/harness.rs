//! Seeded random signed graphs, bulk verification of the bounds and
//! identities, and comparison reports.
//!
//! # Random generation
//!
//! The generator is `Xoshiro256++` seeded through SplitMix64
//! (`rand_xoshiro`'s `seed_from_u64`). Uniform reals are
//! `(next_u64() >> 11) * 2^-53`. For each pair `i < j` in lexicographic order
//! one uniform decides whether the edge exists (`u < edge_prob`) and, if it
//! does, a second decides whether it is negative (`u < neg_prob`). When a
//! connected graph is required, whole graphs are redrawn from the same stream
//! up to [`CONNECTIVITY_ATTEMPTS`] times.

use std::fmt::Write as _;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::{SplitMix64, Xoshiro256PlusPlus};
use thiserror::Error;

use crate::balance::{self, SwitchingFunction};
use crate::bounds::{self, BoundId, BoundsError, Evaluation, Target};
use crate::sgraph::{degree_profile, serialize_signed_graph, triangle_stats, Sign, SignedGraph};
use crate::spectra::{self, SpectraError};

pub const CONNECTIVITY_ATTEMPTS: usize = 10_000;
/// Eigenvalues above this count toward the numerical rank.
pub const RANK_TOLERANCE: f64 = 1e-8;
/// Threshold for deciding `λmax(L(Σ)) = λmax(L(Γ,−1))`.
pub const EQUALITY_TOLERANCE: f64 = 1e-7;

/// Environment variable that overrides [`spectra::DEFAULT_TOLERANCE`].
pub const TOLERANCE_ENV: &str = "SG_TOL";

/// Comparison tolerance: `SG_TOL` when set to a non-negative number, else the default.
pub fn tolerance_from_env() -> Result<f64, HarnessError> {
    match std::env::var(TOLERANCE_ENV) {
        Err(_) => Ok(spectra::DEFAULT_TOLERANCE),
        Ok(raw) => match raw.trim().parse::<f64>() {
            Ok(t) if t >= 0.0 => Ok(t),
            _ => Err(HarnessError::Config(format!("{TOLERANCE_ENV}={raw:?} is not a non-negative number"))),
        },
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HarnessError {
    #[error("invalid generator configuration: {0}")]
    Config(String),
    #[error("no connected graph after {attempts} attempts")]
    ConnectivityCap { attempts: usize },
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error("csv output: {0}")]
    Csv(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorConfig {
    pub n: usize,
    pub edge_prob: f64,
    pub neg_prob: f64,
    pub seed: u64,
    pub require_connected: bool,
}

impl GeneratorConfig {
    pub fn validate(&self) -> Result<(), HarnessError> {
        if self.n == 0 {
            return Err(HarnessError::Config("n must be positive".into()));
        }
        for (name, p) in [("edge probability", self.edge_prob), ("negative probability", self.neg_prob)] {
            if !(0.0..=1.0).contains(&p) {
                return Err(HarnessError::Config(format!("{name} {p} outside [0, 1]")));
            }
        }
        Ok(())
    }
}

/// Deterministic random source for graphs and switchings.
pub struct GraphRng(Xoshiro256PlusPlus);

impl GraphRng {
    pub fn new(seed: u64) -> Self {
        GraphRng(Xoshiro256PlusPlus::seed_from_u64(seed))
    }

    /// Uniform in `[0, 1)` with 53 random bits.
    pub fn uniform(&mut self) -> f64 {
        (self.0.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn below(&mut self, bound: usize) -> usize {
        (self.uniform() * bound as f64) as usize
    }

    fn draw(&mut self, n: usize, edge_prob: f64, neg_prob: f64) -> SignedGraph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.uniform() < edge_prob {
                    let sign = if self.uniform() < neg_prob { Sign::Neg } else { Sign::Pos };
                    edges.push((i, j, sign));
                }
            }
        }
        SignedGraph::new(n, edges).expect("generated edges are simple")
    }

    pub fn graph(&mut self, cfg: &GeneratorConfig) -> Result<SignedGraph, HarnessError> {
        cfg.validate()?;
        if !cfg.require_connected {
            return Ok(self.draw(cfg.n, cfg.edge_prob, cfg.neg_prob));
        }
        for _ in 0..CONNECTIVITY_ATTEMPTS {
            let g = self.draw(cfg.n, cfg.edge_prob, cfg.neg_prob);
            if balance::is_connected(&g) {
                return Ok(g);
            }
        }
        Err(HarnessError::ConnectivityCap { attempts: CONNECTIVITY_ATTEMPTS })
    }

    pub fn switching(&mut self, n: usize) -> SwitchingFunction {
        SwitchingFunction::new((0..n).map(|_| if self.uniform() < 0.5 { Sign::Neg } else { Sign::Pos }).collect())
    }
}

/// One graph from `cfg`; the same configuration always yields the same graph.
pub fn generate(cfg: &GeneratorConfig) -> Result<SignedGraph, HarnessError> {
    GraphRng::new(cfg.seed).graph(cfg)
}

/// Seed of trial `index` in a run with base seed `seed`: the `index`-th
/// output of SplitMix64 seeded with `seed`.
pub fn trial_seed(seed: u64, index: usize) -> u64 {
    let mut sm = SplitMix64::seed_from_u64(seed);
    let mut out = 0;
    for _ in 0..=index {
        out = sm.next_u64();
    }
    out
}

/// A bound on the wrong side of the spectral radius it estimates.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundFailure {
    pub trial: usize,
    pub graph: String,
    pub bound: BoundId,
    pub value: f64,
    pub lambda_max: f64,
    pub magnitude: f64,
}

/// Identities checked per trial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    TraceMoment(u32),
    RayleighMoment(u32),
    Rank,
    SwitchingSpectrum,
    SwitchingWitness,
    Interlacing,
    AllNegativeEquality,
}

impl std::fmt::Display for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Check::TraceMoment(k) => write!(f, "trace-L{k}"),
            Check::RayleighMoment(k) => write!(f, "rayleigh-N{k}"),
            Check::Rank => f.write_str("rank"),
            Check::SwitchingSpectrum => f.write_str("switching-spectrum"),
            Check::SwitchingWitness => f.write_str("switching-witness"),
            Check::Interlacing => f.write_str("interlacing"),
            Check::AllNegativeEquality => f.write_str("allneg-equality"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityFailure {
    pub trial: usize,
    pub graph: String,
    pub check: Check,
    pub expected: f64,
    pub actual: f64,
    pub magnitude: f64,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct VerificationReport {
    pub trials: usize,
    pub failures: Vec<BoundFailure>,
    pub identity_failures: Vec<IdentityFailure>,
}

impl VerificationReport {
    pub fn is_success(&self) -> bool {
        self.failures.is_empty() && self.identity_failures.is_empty()
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.trials += other.trials;
        self.failures.extend(other.failures);
        self.identity_failures.extend(other.identity_failures);
    }

    pub fn summary(&self) -> String {
        let mut out = format!(
            "trials: {}\nbound failures: {}\nidentity failures: {}\n",
            self.trials,
            self.failures.len(),
            self.identity_failures.len()
        );
        for f in &self.failures {
            let _ = writeln!(
                out,
                "trial {} {}: value {} vs λmax {} (off by {:e})\n{}",
                f.trial, f.bound, f.value, f.lambda_max, f.magnitude, f.graph
            );
        }
        for f in &self.identity_failures {
            let _ = writeln!(
                out,
                "trial {} {}: expected {} got {} (off by {:e})\n{}",
                f.trial, f.check, f.expected, f.actual, f.magnitude, f.graph
            );
        }
        out.push_str(if self.is_success() { "result: ok\n" } else { "result: FAILED\n" });
        out
    }
}

/// Runs every check on one graph. `rng` supplies the random switching.
pub fn verify_graph(
    g: &SignedGraph,
    trial: usize,
    rng: &mut GraphRng,
    tol: f64,
) -> Result<VerificationReport, HarnessError> {
    let mut report = VerificationReport { trials: 1, ..Default::default() };
    let text = serialize_signed_graph(g);
    let mut identity = |check: Check, expected: f64, actual: f64, allowed: f64| {
        let magnitude = (expected - actual).abs();
        if magnitude > allowed || magnitude.is_nan() {
            report.identity_failures.push(IdentityFailure {
                trial,
                graph: text.clone(),
                check,
                expected,
                actual,
                magnitude,
            });
        }
    };

    // exact integer identities
    let l = spectra::laplacian(g);
    let profile = degree_profile(g);
    let triangles = triangle_stats(g);
    for k in 1..=3 {
        let product = spectra::trace_moment(&l, k)?;
        let closed = spectra::laplacian_trace_closed_form(&profile, &triangles, k)?;
        identity(Check::TraceMoment(k), closed as f64, product as f64, 0.0);
        let product = spectra::rayleigh_moment_by_product(g, k)?;
        let closed = spectra::rayleigh_moment(g, k)?;
        identity(Check::RayleighMoment(k), closed as f64, product as f64, 0.0);
    }

    let evaluation = bounds::evaluate_all(g)?;
    let spectrum = &evaluation.spectrum;
    identity(Check::Rank, balance::laplacian_rank(g) as f64, spectrum.rank(RANK_TOLERANCE) as f64, 0.0);

    let theta = rng.switching(g.order());
    let switched = balance::switch(g, &theta).expect("length matches");
    let switched_spectrum = spectra::laplacian_spectrum(&switched)?;
    identity(Check::SwitchingSpectrum, 0.0, spectrum.max_deviation(&switched_spectrum), tol);
    let witness_ok = balance::switching_equivalent(g, &switched)
        .and_then(|w| balance::switch(g, &w).ok())
        .is_some_and(|h| h == switched);
    identity(Check::SwitchingWitness, 1.0, if witness_ok { 1.0 } else { 0.0 }, 0.0);

    let plus = spectra::spectral_radius_laplacian(&balance::induced_sign_subgraph(g, Sign::Pos))?;
    let minus = spectra::spectral_radius_laplacian(&balance::induced_sign_subgraph(g, Sign::Neg))?;
    let interlace = plus.max(minus);
    if interlace > evaluation.lambda_max() + tol {
        identity(Check::Interlacing, evaluation.lambda_max(), interlace, tol);
    }

    if balance::is_connected(g) {
        let equal = (evaluation.lambda_max() - evaluation.lambda_max_signless).abs() < EQUALITY_TOLERANCE;
        let equivalent = balance::switching_equivalent(g, &spectra::sign_all(g, Sign::Neg)).is_some();
        identity(Check::AllNegativeEquality, f64::from(u8::from(equivalent)), f64::from(u8::from(equal)), 0.0);
    }

    report.failures = evaluation
        .violations(tol)
        .into_iter()
        .map(|v| BoundFailure {
            trial,
            graph: text.clone(),
            bound: v.id,
            value: v.value,
            lambda_max: v.lambda_max,
            magnitude: v.magnitude,
        })
        .collect();
    Ok(report)
}

/// Runs `trials` independent trials. Trial `i` draws its graph and switching
/// from a generator seeded with [`trial_seed`]`(cfg.seed, i)`.
pub fn verify(cfg: &GeneratorConfig, trials: usize, tol: f64) -> Result<VerificationReport, HarnessError> {
    let mut report = VerificationReport::default();
    for trial in 0..trials {
        let mut rng = GraphRng::new(trial_seed(cfg.seed, trial));
        let g = rng.graph(cfg)?;
        report.merge(verify_graph(&g, trial, &mut rng, tol)?);
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Markdown,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReportOptions {
    pub format: ReportFormat,
    pub full_precision: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions { format: ReportFormat::Markdown, full_precision: false }
    }
}

pub const INAPPLICABLE_CELL: &str = "—";

pub fn format_value(v: f64, full_precision: bool) -> String {
    if full_precision {
        format!("{v}")
    } else {
        // avoid "-0.000"
        let v = if v.abs() < 5e-4 { 0.0 } else { v };
        format!("{v:.3}")
    }
}

/// Decimal with `digits` significant digits.
pub fn format_significant(v: f64, digits: usize) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let precision = digits.max(1) - 1;
    // exponent after rounding to `digits` significant digits
    let sci = format!("{v:.precision$e}");
    let exponent: i64 = sci.rsplit('e').next().and_then(|e| e.parse().ok()).unwrap_or(0);
    let decimals = (precision as i64 - exponent).max(0) as usize;
    format!("{v:.decimals$}")
}

const VARIANTS: [Target; 3] = [Target::Signed, Target::Laplacian, Target::Signless];

fn variant_graph(g: &SignedGraph, target: Target) -> SignedGraph {
    match target {
        Target::Signed => g.clone(),
        Target::Laplacian => spectra::sign_all(g, Sign::Pos),
        Target::Signless => spectra::sign_all(g, Sign::Neg),
    }
}

fn cell(e: &Evaluation, id: BoundId, full: bool) -> String {
    e.get(id).get().map_or_else(|| INAPPLICABLE_CELL.to_string(), |v| format_value(v, full))
}

const KNOWN: [BoundId; 5] = [BoundId::Kb1, BoundId::Kb2, BoundId::Kb3, BoundId::Kb4, BoundId::Kb5];

/// Comparison report over named graphs.
///
/// Each graph contributes one row per matrix variant: `Σ` as given,
/// `(Γ,+1)` and `(Γ,−1)`. Columns are `λmax` followed by the signed-graph
/// bounds in catalog order; inapplicable cells are `—`.
///
/// Markdown output has one table per variant plus a table of the classical
/// bounds on `Σ`. CSV output is a single table, rows grouped by variant.
pub fn report(graphs: &[(String, SignedGraph)], options: ReportOptions) -> Result<String, HarnessError> {
    let full = options.full_precision;
    let mut evaluations = Vec::with_capacity(graphs.len());
    for (name, g) in graphs {
        let per_variant =
            VARIANTS.iter().map(|&t| bounds::evaluate_all(&variant_graph(g, t))).collect::<Result<Vec<_>, _>>()?;
        evaluations.push((name.as_str(), per_variant));
    }
    let columns: Vec<BoundId> = BoundId::signed().filter(|id| !KNOWN.contains(id)).collect();

    let mut out = String::new();
    match options.format {
        ReportFormat::Csv => {
            let mut header = vec!["graph".to_string(), "variant".to_string(), "lambda_max".to_string()];
            header.extend(BoundId::signed().map(|id| id.as_str().to_string()));
            let mut rows = vec![header];
            for (vi, target) in VARIANTS.iter().enumerate() {
                for (name, evals) in &evaluations {
                    let e = &evals[vi];
                    let mut row =
                        vec![name.to_string(), target.label().to_string(), format_value(e.lambda_max(), full)];
                    row.extend(BoundId::signed().map(|id| cell(e, id, full)));
                    rows.push(row);
                }
            }
            out = csv_table(&rows)?;
        }
        ReportFormat::Markdown => {
            for (vi, target) in VARIANTS.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "### λmax(L{})\n",
                    if *target == Target::Signed { "(Σ)".to_string() } else { target.label().to_string() }
                );
                markdown_header(&mut out, columns.iter().map(|id| id.as_str()));
                for (name, evals) in &evaluations {
                    let e = &evals[vi];
                    markdown_row(&mut out, name, e.lambda_max(), columns.iter().map(|&id| cell(e, id, full)), full);
                }
                out.push('\n');
            }
            out.push_str("### Classical bounds\n\n");
            markdown_header(&mut out, KNOWN.iter().map(|id| id.as_str()));
            for (name, evals) in &evaluations {
                let e = &evals[0];
                markdown_row(&mut out, name, e.lambda_max(), KNOWN.iter().map(|&id| cell(e, id, full)), full);
            }
        }
    }
    Ok(out)
}

fn csv_table(rows: &[Vec<String>]) -> Result<String, HarnessError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer.write_record(row).map_err(|e| HarnessError::Csv(e.to_string()))?;
    }
    let bytes = writer.into_inner().map_err(|e| HarnessError::Csv(e.error().to_string()))?;
    Ok(String::from_utf8(bytes).expect("fields are UTF-8"))
}

fn markdown_header<'a>(out: &mut String, columns: impl Iterator<Item = &'a str>) {
    let columns: Vec<&str> = columns.collect();
    let _ = writeln!(out, "| graph | λmax | {} |", columns.join(" | "));
    let _ = writeln!(out, "|---|---|{}", "---|".repeat(columns.len()));
}

fn markdown_row(out: &mut String, name: &str, lambda: f64, cells: impl Iterator<Item = String>, full: bool) {
    let cells: Vec<String> = cells.collect();
    let _ = writeln!(out, "| {name} | {} | {} |", format_value(lambda, full), cells.join(" | "));
}

/// Per-bound listing for one graph, as printed by `sgbounds bounds`.
pub fn bounds_table(g: &SignedGraph, options: ReportOptions) -> Result<(String, Evaluation), HarnessError> {
    let e = bounds::evaluate_all(g)?;
    let full = options.full_precision;
    let mut out = String::new();
    match options.format {
        ReportFormat::Csv => {
            let header = ["id", "direction", "target", "value", "guard"];
            let mut rows = vec![header.map(String::from).to_vec()];
            for (target, lambda) in [
                (Target::Signed, e.lambda_max()),
                (Target::Laplacian, e.lambda_max_laplacian),
                (Target::Signless, e.lambda_max_signless),
            ] {
                rows.push(vec![
                    "lambda_max".into(),
                    "exact".into(),
                    target.label().into(),
                    format_value(lambda, full),
                    String::new(),
                ]);
            }
            for r in &e.results {
                rows.push(vec![
                    r.id.to_string(),
                    r.direction().to_string(),
                    r.id.target().label().into(),
                    r.get().map_or_else(|| INAPPLICABLE_CELL.to_string(), |v| format_value(v, full)),
                    r.guard_reason().unwrap_or("").into(),
                ]);
            }
            out = csv_table(&rows)?;
        }
        ReportFormat::Markdown => {
            let _ = writeln!(out, "λmax(L(Σ)) = {}", format_value(e.lambda_max(), full));
            let _ = writeln!(out, "λmax(L(Γ,+1)) = {}", format_value(e.lambda_max_laplacian, full));
            let _ = writeln!(out, "λmax(L(Γ,−1)) = {}\n", format_value(e.lambda_max_signless, full));
            out.push_str("| bound | direction | target | value | guard |\n|---|---|---|---|---|\n");
            for r in &e.results {
                let value = r.get().map_or_else(|| INAPPLICABLE_CELL.to_string(), |v| format_value(v, full));
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} | {} |",
                    r.id,
                    r.direction(),
                    r.id.target().label(),
                    value,
                    r.guard_reason().unwrap_or("")
                );
            }
        }
    }
    Ok((out, e))
}
