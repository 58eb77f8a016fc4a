//! Bounds on the Laplacian spectral radius `λmax(L(Σ))` of a signed graph.
//!
//! Every bound has a stable [`BoundId`] and evaluates to a [`BoundResult`]:
//! either a value or the reason its hypothesis fails. Hypotheses are enforced
//! as stated (connectedness, order, rank), never assumed.
//!
//! The catalog has three groups:
//!
//! * sign-dependent lower bounds from the Rayleigh moments `N_k = jᵀLᵏj`,
//!   the rank/trace upper bound and the trace lower bounds, which depend on
//!   `b(Σ)` and the signed triangle count `t±(Σ)`;
//! * bounds inherited from the all-negative signing (edge and global
//!   upper bounds, `λmax(L(Γ,−1))` itself) plus the interlacing lower bound
//!   and five classical sign-blind bounds;
//! * the unsigned corollaries, which bound the Laplacian `L(Γ,+1)` and
//!   the signless Laplacian `L(Γ,−1)` of the underlying graph. These are
//!   computed by delegating to the signed bounds on `(Γ,±1)`;
//!   [`unsigned_corollaries_direct`] evaluates the same quantities from the
//!   unsigned formulas in `c(Γ)`, `c_bip(Γ)` and `t(Γ)`.
//!
//! Exact integer arithmetic is used for every radicand and trace numerator;
//! the only rounding is in the final divisions and roots.

use std::fmt;

use thiserror::Error;

use crate::balance::{self, BalanceInfo};
use crate::sgraph::{degree_profile, triangle_stats, DegreeProfile, Sign, SignedGraph, TriangleStats};
use crate::spectra::{self, SpectraError, Spectrum};

/// Negative radicands down to this magnitude are treated as rounding and clamped to zero.
pub const RADICAND_CLAMP: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundsError {
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error("{id}: {what} is negative ({value:e})")]
    Inconsistent { id: BoundId, what: &'static str, value: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Lower,
    Upper,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Lower => "lower",
            Direction::Upper => "upper",
        })
    }
}

/// The matrix whose spectral radius a bound estimates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    /// `L(Σ)` for the graph as signed.
    Signed,
    /// `L(Γ,+1)`, the Laplacian of the underlying graph.
    Laplacian,
    /// `L(Γ,−1)`, the signless Laplacian of the underlying graph.
    Signless,
}

impl Target {
    pub fn label(self) -> &'static str {
        match self {
            Target::Signed => "Σ",
            Target::Laplacian => "(Γ,+1)",
            Target::Signless => "(Γ,−1)",
        }
    }
}

macro_rules! bound_ids {
    ($($variant:ident => $name:literal, $dir:ident, $target:ident;)*) => {
        /// Stable bound identifiers. The string forms appear in CLI output and
        /// CSV headers.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum BoundId {
            $($variant,)*
        }

        impl BoundId {
            /// Every bound, in catalog order.
            pub const ALL: &'static [BoundId] = &[$(BoundId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(BoundId::$variant => $name,)*
                }
            }

            pub fn direction(self) -> Direction {
                match self {
                    $(BoundId::$variant => Direction::$dir,)*
                }
            }

            pub fn target(self) -> Target {
                match self {
                    $(BoundId::$variant => Target::$target,)*
                }
            }
        }
    };
}

bound_ids! {
    LbNet1 => "LB-NET-1", Lower, Signed;
    LbNet2 => "LB-NET-2", Lower, Signed;
    LbNet3 => "LB-NET-3", Lower, Signed;
    UbRank => "UB-RANK", Upper, Signed;
    LbTr1 => "LB-TR-1", Lower, Signed;
    LbTr2 => "LB-TR-2", Lower, Signed;
    LbTr3 => "LB-TR-3", Lower, Signed;
    UbWangEdge => "UB-WANG-EDGE", Upper, Signed;
    UbWangGlobal => "UB-WANG-GLOBAL", Upper, Signed;
    UbAllNeg => "UB-ALLNEG", Upper, Signed;
    LbInterlace => "LB-INTERLACE", Lower, Signed;
    Kb1 => "KB-1", Upper, Signed;
    Kb2 => "KB-2", Upper, Signed;
    Kb3 => "KB-3", Upper, Signed;
    Kb4 => "KB-4", Upper, Signed;
    Kb5 => "KB-5", Lower, Signed;
    NeqSlb1 => "NEQ-SLB-1", Lower, Signless;
    NeqSlb2 => "NEQ-SLB-2", Lower, Signless;
    NeqSlb3 => "NEQ-SLB-3", Lower, Signless;
    UbL => "UB-L", Upper, Laplacian;
    UbSl => "UB-SL", Upper, Signless;
    LbTrL1 => "LB-TR-L-1", Lower, Laplacian;
    LbTrL2 => "LB-TR-L-2", Lower, Laplacian;
    LbTrL3 => "LB-TR-L-3", Lower, Laplacian;
    LbTrSl1 => "LB-TR-SL-1", Lower, Signless;
    LbTrSl2 => "LB-TR-SL-2", Lower, Signless;
    LbTrSl3 => "LB-TR-SL-3", Lower, Signless;
}

impl BoundId {
    pub fn parse(s: &str) -> Option<BoundId> {
        BoundId::ALL.iter().copied().find(|id| id.as_str() == s)
    }

    /// Bounds on `λmax(L(Σ))` itself, i.e. the columns of a comparison table.
    pub fn signed() -> impl Iterator<Item = BoundId> {
        BoundId::ALL.iter().copied().filter(|id| id.target() == Target::Signed)
    }

    pub fn catalog_entry(self) -> &'static CatalogEntry {
        CATALOG.iter().find(|e| e.id == self).expect("every id is cataloged")
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Formula and hypothesis of a cataloged bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub id: BoundId,
    pub formula: &'static str,
    pub hypothesis: &'static str,
    pub note: Option<&'static str>,
}

const fn entry(id: BoundId, formula: &'static str, hypothesis: &'static str) -> CatalogEntry {
    CatalogEntry { id, formula, hypothesis, note: None }
}

pub static CATALOG: [CatalogEntry; 27] = [
    entry(BoundId::LbNet1, "(2/n) Σ d⁻_j", "connected"),
    entry(BoundId::LbNet2, "sqrt((4/n) Σ (d⁻_j)²)", "connected"),
    entry(BoundId::LbNet3, "((4 Σ d_j (d⁻_j)² − 8 Σ_e σ(e_ij) d⁻_i d⁻_j) / n)^(1/3)", "connected"),
    entry(BoundId::UbRank, "s1/r + sqrt((s1+s2) − (s1+s2+s1²)/r + (s1/r)²), r = n − b(Σ)", "at least one edge"),
    CatalogEntry {
        id: BoundId::LbTr1,
        formula: "sqrt(|s1² − s2 − s1| / (r(r−1))), r = n − b(Σ)",
        hypothesis: "b(Σ) ≤ n−2",
        note: Some("numerator taken in absolute value"),
    },
    CatalogEntry {
        id: BoundId::LbTr2,
        formula: "(|2s3 + 6s2 − 3s2s1 + s1³ − 3s1² − 12t±| / (r(r−1)(r−2)))^(1/3)",
        hypothesis: "b(Σ) ≤ n−3",
        note: Some("numerator taken in absolute value"),
    },
    CatalogEntry {
        id: BoundId::LbTr3,
        formula: "(|s1² − 3s2 + s1s2 − s3 + 6t±| / (r(r−1)))^(1/3)",
        hypothesis: "r = n − b(Σ) ≥ 2",
        note: Some(
            "guarded on rank ≥ 2, the condition under which the trace inequality holds; \
             a hypothesis b(Σ) ≥ n−2 would leave only rank exactly 2; numerator taken in absolute value",
        ),
    },
    entry(
        BoundId::UbWangEdge,
        "2 + max_e sqrt((d_i+d_j−2)(d_i² m_i + d_j² m_j − 2 d_i d_j) / (d_i d_j))",
        "connected, at least one edge",
    ),
    entry(BoundId::UbWangGlobal, "2 + sqrt(Σ d² − 2m − (m−1)δ_Λ + (δ_Λ−1)Δ_Λ)", "connected, n > 2"),
    entry(BoundId::UbAllNeg, "λmax(L(Γ,−1))", "connected"),
    entry(BoundId::LbInterlace, "max(λmax(L(Σ⁺)), λmax(L(Σ⁻)))", "none"),
    entry(BoundId::Kb1, "max_e (d_i(d_i+m_i) + d_j(d_j+m_j)) / (d_i+d_j)", "connected, at least one edge"),
    entry(BoundId::Kb2, "max_e 2 + sqrt(d_i(d_i+m_i−4) + d_j(d_j+m_j−4) + 4)", "connected, at least one edge"),
    entry(BoundId::Kb3, "max_v d_v + sqrt(d_v m_v)", "connected, at least one edge"),
    entry(
        BoundId::Kb4,
        "max_e (d_i + d_j + sqrt((d_i−d_j)² + 4 sqrt(d_i d_j m_i m_j))) / 2",
        "connected, at least one edge",
    ),
    entry(BoundId::Kb5, "Δ + 1", "connected, at least one edge"),
    entry(BoundId::NeqSlb1, "2 s1 / n", "none"),
    entry(BoundId::NeqSlb2, "sqrt(4 s2 / n)", "none"),
    entry(BoundId::NeqSlb3, "((4 s3 + 8 Σ_e d_i d_j) / n)^(1/3)", "none"),
    entry(BoundId::UbL, "s1/r + sqrt((s1+s2) − (s1+s2+s1²)/r + (s1/r)²), r = n − c(Γ)", "at least one edge"),
    entry(BoundId::UbSl, "s1/r + sqrt((s1+s2) − (s1+s2+s1²)/r + (s1/r)²), r = n − c_bip(Γ)", "at least one edge"),
    entry(BoundId::LbTrL1, "sqrt(|s1² − s2 − s1| / (r(r−1))), r = n − c(Γ)", "c(Γ) ≤ n−2"),
    CatalogEntry {
        id: BoundId::LbTrL2,
        formula: "(|2s3 + 6s2 − 3s2s1 + s1³ − 3s1² − 12t| / (r(r−1)(r−2)))^(1/3), r = n − c(Γ)",
        hypothesis: "c(Γ) ≤ n−3",
        note: Some("denominator read as (n−c)(n−c−1)(n−c−2)"),
    },
    entry(BoundId::LbTrL3, "(|s1² − 3s2 + s1s2 − s3 + 6t| / (r(r−1)))^(1/3), r = n − c(Γ)", "c(Γ) ≤ n−2"),
    entry(BoundId::LbTrSl1, "sqrt(|s1² − s2 − s1| / (r(r−1))), r = n − c_bip(Γ)", "c_bip(Γ) ≤ n−2"),
    CatalogEntry {
        id: BoundId::LbTrSl2,
        formula: "(|2s3 + 6s2 − 3s2s1 + s1³ − 3s1² + 12t| / (r(r−1)(r−2)))^(1/3), r = n − c_bip(Γ)",
        hypothesis: "c_bip(Γ) ≤ n−3",
        note: Some("denominator read as (n−c_bip)(n−c_bip−1)(n−c_bip−2)"),
    },
    entry(BoundId::LbTrSl3, "(|s1² − 3s2 + s1s2 − s3 − 6t| / (r(r−1)))^(1/3), r = n − c_bip(Γ)", "c_bip(Γ) ≤ n−2"),
];

/// Outcome of evaluating one bound.
#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    Value(f64),
    /// Hypothesis not met; carries the reason.
    Inapplicable(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundResult {
    pub id: BoundId,
    pub outcome: Outcome,
}

impl BoundResult {
    pub fn value(id: BoundId, value: f64) -> Self {
        BoundResult { id, outcome: Outcome::Value(value) }
    }

    pub fn inapplicable(id: BoundId, reason: impl Into<String>) -> Self {
        let reason = reason.into();
        debug_assert!(!reason.is_empty());
        BoundResult { id, outcome: Outcome::Inapplicable(reason) }
    }

    pub fn direction(&self) -> Direction {
        self.id.direction()
    }

    pub fn is_applicable(&self) -> bool {
        matches!(self.outcome, Outcome::Value(_))
    }

    pub fn get(&self) -> Option<f64> {
        match self.outcome {
            Outcome::Value(v) => Some(v),
            Outcome::Inapplicable(_) => None,
        }
    }

    pub fn guard_reason(&self) -> Option<&str> {
        match &self.outcome {
            Outcome::Value(_) => None,
            Outcome::Inapplicable(r) => Some(r),
        }
    }

    fn relabel(self, id: BoundId) -> BoundResult {
        BoundResult { id, outcome: self.outcome }
    }
}

pub const NOT_CONNECTED: &str = "graph not connected";
pub const NO_EDGES: &str = "requires at least one edge";

/// Everything the bounds need about one graph, computed once.
struct Stats<'a> {
    g: &'a SignedGraph,
    profile: DegreeProfile,
    triangles: TriangleStats,
    balance: BalanceInfo,
}

impl<'a> Stats<'a> {
    fn new(g: &'a SignedGraph) -> Self {
        Stats { g, profile: degree_profile(g), triangles: triangle_stats(g), balance: balance::balance_info(g) }
    }

    fn n(&self) -> i64 {
        self.g.order() as i64
    }

    fn m(&self) -> i64 {
        self.g.size() as i64
    }

    /// `rank(L(Σ)) = n − b(Σ)`.
    fn rank(&self) -> i64 {
        self.n() - self.balance.balanced_count() as i64
    }

    fn s(&self) -> (i64, i64, i64) {
        (self.profile.s1 as i64, self.profile.s2 as i64, self.profile.s3 as i64)
    }

    fn require_connected(&self) -> Option<&'static str> {
        (!self.balance.is_connected()).then_some(NOT_CONNECTED)
    }

    fn require_edge(&self) -> Option<&'static str> {
        (self.m() == 0).then_some(NO_EDGES)
    }

    fn require_connected_edge(&self) -> Option<&'static str> {
        self.require_connected().or_else(|| self.require_edge())
    }
}

fn guarded_sqrt(id: BoundId, what: &'static str, x: f64) -> Result<f64, BoundsError> {
    if x < -RADICAND_CLAMP {
        return Err(BoundsError::Inconsistent { id, what, value: x });
    }
    Ok(x.max(0.0).sqrt())
}

/// `(N_k / n)^(1/k)` from the closed-form Rayleigh moment.
fn net_moment_bound(id: BoundId, g: &SignedGraph, k: u32) -> Result<f64, BoundsError> {
    let moment = spectra::rayleigh_moment(g, k)?;
    if moment < 0 {
        return Err(BoundsError::Inconsistent { id, what: "Rayleigh moment", value: moment as f64 });
    }
    let mean = moment as f64 / g.order() as f64;
    Ok(match k {
        1 => mean,
        2 => mean.sqrt(),
        _ => mean.cbrt(),
    })
}

/// `s1/r + sqrt(((r−1)/r)(c − s1²/r))` with `c = s1 + s2`. The radicand is
/// evaluated as the exact integer `(r−1)(r c − s1²)` over `r²`.
fn rank_trace_upper(id: BoundId, s: &Stats) -> Result<f64, BoundsError> {
    let (s1, s2, _) = s.s();
    let r = s.rank();
    let numerator = (r - 1) * (r * (s1 + s2) - s1 * s1);
    let radicand = numerator as f64 / (r * r) as f64;
    Ok(s1 as f64 / r as f64 + guarded_sqrt(id, "rank/trace radicand", radicand)?)
}

fn trace_lower_sq(s: &Stats) -> f64 {
    let (s1, s2, _) = s.s();
    let r = s.rank();
    ((s1 * s1 - s2 - s1).abs() as f64 / (r * (r - 1)) as f64).sqrt()
}

fn trace_lower_cubic_a(s: &Stats) -> f64 {
    let (s1, s2, s3) = s.s();
    let t = s.triangles.net();
    let r = s.rank();
    let numerator = 2 * s3 + 6 * s2 - 3 * s2 * s1 + s1 * s1 * s1 - 3 * s1 * s1 - 12 * t;
    (numerator.abs() as f64 / (r * (r - 1) * (r - 2)) as f64).cbrt()
}

fn trace_lower_cubic_b(s: &Stats) -> f64 {
    let (s1, s2, s3) = s.s();
    let t = s.triangles.net();
    let r = s.rank();
    let numerator = s1 * s1 - 3 * s2 + s1 * s2 - s3 + 6 * t;
    (numerator.abs() as f64 / (r * (r - 1)) as f64).cbrt()
}

/// Maximum of `f` over edges as `(d_i, d_j, d_i m_i, d_j m_j)`.
fn max_over_edges<F>(s: &Stats, mut f: F) -> Result<f64, BoundsError>
where
    F: FnMut(i64, i64, i64, i64) -> Result<f64, BoundsError>,
{
    let p = &s.profile;
    let mut best = f64::NEG_INFINITY;
    for e in s.g.edges() {
        let value = f(
            p.degree[e.u] as i64,
            p.degree[e.v] as i64,
            p.neighbor_degree_sum[e.u] as i64,
            p.neighbor_degree_sum[e.v] as i64,
        )?;
        best = best.max(value);
    }
    Ok(best)
}

fn evaluate(id: BoundId, s: &Stats) -> Result<BoundResult, BoundsError> {
    use BoundId::*;

    let guard = match id {
        LbNet1 | LbNet2 | LbNet3 | UbAllNeg => s.require_connected(),
        UbRank | UbL | UbSl => s.require_edge(),
        LbTr1 | LbTr3 => (s.rank() < 2).then_some("b(Σ) > n-2"),
        LbTr2 => (s.rank() < 3).then_some("b(Σ) > n-3"),
        UbWangEdge | Kb1 | Kb2 | Kb3 | Kb4 | Kb5 => s.require_connected_edge(),
        UbWangGlobal => s.require_connected().or_else(|| (s.n() <= 2).then_some("requires n > 2")),
        LbInterlace | NeqSlb1 | NeqSlb2 | NeqSlb3 => None,
        LbTrL1 | LbTrL2 | LbTrL3 | LbTrSl1 | LbTrSl2 | LbTrSl3 => None,
    };
    if let Some(reason) = guard {
        return Ok(BoundResult::inapplicable(id, reason));
    }

    let value = match id {
        LbNet1 => net_moment_bound(id, s.g, 1)?,
        LbNet2 => net_moment_bound(id, s.g, 2)?,
        LbNet3 => net_moment_bound(id, s.g, 3)?,
        UbRank => rank_trace_upper(id, s)?,
        LbTr1 => trace_lower_sq(s),
        LbTr2 => trace_lower_cubic_a(s),
        LbTr3 => trace_lower_cubic_b(s),
        UbWangEdge => {
            2.0 + max_over_edges(s, |di, dj, wi, wj| {
                // d_i² m_i = d_i (d_i m_i)
                let radicand = ((di + dj - 2) * (di * wi + dj * wj - 2 * di * dj)) as f64 / (di * dj) as f64;
                guarded_sqrt(id, "edge radicand", radicand)
            })?
        }
        UbWangGlobal => {
            let p = &s.profile;
            let lo = p.edge_degree_min.expect("connected with n > 2 has edges") as i64;
            let hi = p.edge_degree_max.expect("connected with n > 2 has edges") as i64;
            let m = s.m();
            let radicand = p.s2 as i64 - 2 * m - (m - 1) * lo + (lo - 1) * hi;
            2.0 + guarded_sqrt(id, "global radicand", radicand as f64)?
        }
        UbAllNeg => spectra::spectral_radius_laplacian(&spectra::sign_all(s.g, Sign::Neg))?,
        LbInterlace => {
            let pos = balance::induced_sign_subgraph(s.g, Sign::Pos);
            let neg = balance::induced_sign_subgraph(s.g, Sign::Neg);
            spectra::spectral_radius_laplacian(&pos)?.max(spectra::spectral_radius_laplacian(&neg)?)
        }
        Kb1 => max_over_edges(s, |di, dj, wi, wj| Ok((di * di + wi + dj * dj + wj) as f64 / (di + dj) as f64))?,
        Kb2 => max_over_edges(s, |di, dj, wi, wj| {
            let radicand = di * di + wi - 4 * di + dj * dj + wj - 4 * dj + 4;
            Ok(2.0 + guarded_sqrt(id, "edge radicand", radicand as f64)?)
        })?,
        Kb3 => {
            let p = &s.profile;
            (0..s.g.order())
                .map(|v| p.degree[v] as f64 + (p.neighbor_degree_sum[v] as f64).sqrt())
                .fold(f64::NEG_INFINITY, f64::max)
        }
        Kb4 => max_over_edges(s, |di, dj, wi, wj| {
            // d_i d_j m_i m_j = (d_i m_i)(d_j m_j)
            let inner = ((wi * wj) as f64).sqrt();
            let (a, b) = (di as f64, dj as f64);
            Ok((a + b + ((a - b).powi(2) + 4.0 * inner).sqrt()) / 2.0)
        })?,
        Kb5 => s.profile.max_degree as f64 + 1.0,
        NeqSlb1 | NeqSlb2 | NeqSlb3 => {
            let k = match id {
                NeqSlb1 => 1,
                NeqSlb2 => 2,
                _ => 3,
            };
            net_moment_bound(id, &spectra::sign_all(s.g, Sign::Neg), k)?
        }
        UbL | UbSl | LbTrL1 | LbTrL2 | LbTrL3 | LbTrSl1 | LbTrSl2 | LbTrSl3 => {
            let (sign, signed_id) = match id {
                UbL => (Sign::Pos, UbRank),
                UbSl => (Sign::Neg, UbRank),
                LbTrL1 => (Sign::Pos, LbTr1),
                LbTrL2 => (Sign::Pos, LbTr2),
                LbTrL3 => (Sign::Pos, LbTr3),
                LbTrSl1 => (Sign::Neg, LbTr1),
                LbTrSl2 => (Sign::Neg, LbTr2),
                _ => (Sign::Neg, LbTr3),
            };
            let resigned = spectra::sign_all(s.g, sign);
            let mut result = evaluate(signed_id, &Stats::new(&resigned))?.relabel(id);
            if let Outcome::Inapplicable(reason) = &mut result.outcome {
                // b(Γ,+1) = c(Γ) and b(Γ,−1) = c_bip(Γ)
                let count = if sign == Sign::Pos { "c(Γ)" } else { "c_bip(Γ)" };
                *reason = reason.replace("b(Σ)", count);
            }
            return Ok(result);
        }
    };
    Ok(BoundResult::value(id, value))
}

/// Evaluates one cataloged bound on `g`.
pub fn evaluate_bound(g: &SignedGraph, id: BoundId) -> Result<BoundResult, BoundsError> {
    evaluate(id, &Stats::new(g))
}

/// `(2/n) Σ d⁻_j ≤ λmax`.
pub fn lb_net_mean(g: &SignedGraph) -> Result<BoundResult, BoundsError> {
    evaluate_bound(g, BoundId::LbNet1)
}

/// `sqrt((4/n) Σ (d⁻_j)²) ≤ λmax`.
pub fn lb_net_sq(g: &SignedGraph) -> Result<BoundResult, BoundsError> {
    evaluate_bound(g, BoundId::LbNet2)
}

/// `(N_3 / n)^(1/3) ≤ λmax`. `N_3 = jᵀL³j` is never negative; a negative
/// value is reported as an inconsistency rather than clamped.
pub fn lb_net_cubic(g: &SignedGraph) -> Result<BoundResult, BoundsError> {
    evaluate_bound(g, BoundId::LbNet3)
}

pub fn ub_rank_trace(g: &SignedGraph) -> Result<BoundResult, BoundsError> {
    evaluate_bound(g, BoundId::UbRank)
}

pub fn lb_trace_sq(g: &SignedGraph) -> Result<BoundResult, BoundsError> {
    evaluate_bound(g, BoundId::LbTr1)
}

pub fn lb_trace_cubic_a(g: &SignedGraph) -> Result<BoundResult, BoundsError> {
    evaluate_bound(g, BoundId::LbTr2)
}

pub fn lb_trace_cubic_b(g: &SignedGraph) -> Result<BoundResult, BoundsError> {
    evaluate_bound(g, BoundId::LbTr3)
}

pub fn ub_wang_edge(g: &SignedGraph) -> Result<BoundResult, BoundsError> {
    evaluate_bound(g, BoundId::UbWangEdge)
}

pub fn ub_wang_global(g: &SignedGraph) -> Result<BoundResult, BoundsError> {
    evaluate_bound(g, BoundId::UbWangGlobal)
}

/// `λmax(L(Σ)) ≤ λmax(L(Γ,−1))`, with equality exactly when `Σ ~ (Γ,−1)`.
pub fn ub_all_negative(g: &SignedGraph) -> Result<BoundResult, BoundsError> {
    evaluate_bound(g, BoundId::UbAllNeg)
}

pub fn lb_interlacing(g: &SignedGraph) -> Result<BoundResult, BoundsError> {
    evaluate_bound(g, BoundId::LbInterlace)
}

/// KB-1 through KB-5.
pub fn classic_bounds(g: &SignedGraph) -> Result<Vec<BoundResult>, BoundsError> {
    let s = Stats::new(g);
    [BoundId::Kb1, BoundId::Kb2, BoundId::Kb3, BoundId::Kb4, BoundId::Kb5]
        .into_iter()
        .map(|id| evaluate(id, &s))
        .collect()
}

const UNSIGNED: [BoundId; 11] = [
    BoundId::NeqSlb1,
    BoundId::NeqSlb2,
    BoundId::NeqSlb3,
    BoundId::UbL,
    BoundId::UbSl,
    BoundId::LbTrL1,
    BoundId::LbTrL2,
    BoundId::LbTrL3,
    BoundId::LbTrSl1,
    BoundId::LbTrSl2,
    BoundId::LbTrSl3,
];

/// Bounds on `λmax(L(Γ,+1))` and `λmax(L(Γ,−1))` for the underlying graph,
/// by evaluating the signed bounds on the all-positive and all-negative signings.
pub fn unsigned_corollaries(g: &SignedGraph) -> Result<Vec<BoundResult>, BoundsError> {
    let s = Stats::new(g);
    UNSIGNED.iter().map(|&id| evaluate(id, &s)).collect()
}

/// The same bounds as [`unsigned_corollaries`], evaluated from their
/// unsigned closed forms: `s_p`, `c(Γ)`, `c_bip(Γ)` and the plain triangle
/// count `t(Γ)`.
pub fn unsigned_corollaries_direct(g: &SignedGraph) -> Result<Vec<BoundResult>, BoundsError> {
    let p = degree_profile(g);
    let t = triangle_stats(g).total() as f64;
    let n = g.order() as f64;
    let (s1, s2, s3) = (p.s1 as f64, p.s2 as f64, p.s3 as f64);
    let degree_products: f64 = g.edges().iter().map(|e| (p.degree[e.u] * p.degree[e.v]) as f64).sum();
    let c = balance::component_count(g) as f64;
    let c_bip = balance::bipartite_component_count(g) as f64;

    let upper = |id: BoundId, comps: f64| -> Result<BoundResult, BoundsError> {
        if g.size() == 0 {
            return Ok(BoundResult::inapplicable(id, NO_EDGES));
        }
        let r = n - comps;
        let radicand = (s1 + s2) - (s1 + s2 + s1 * s1) / r + (s1 / r).powi(2);
        Ok(BoundResult::value(id, s1 / r + guarded_sqrt(id, "rank/trace radicand", radicand)?))
    };
    // `sign` is +1 for the Laplacian and −1 for the signless Laplacian.
    let traces = |ids: [BoundId; 3], comps: f64, sign: f64, label: &str| -> [BoundResult; 3] {
        let r = n - comps;
        let sq = if comps <= n - 2.0 {
            BoundResult::value(ids[0], ((s1 * s1 - s2 - s1).abs() / (r * (r - 1.0))).sqrt())
        } else {
            BoundResult::inapplicable(ids[0], format!("{label} > n-2"))
        };
        let cubic_a = if comps <= n - 3.0 {
            let num = 2.0 * s3 + 6.0 * s2 - 3.0 * s2 * s1 + s1.powi(3) - 3.0 * s1 * s1 - sign * 12.0 * t;
            BoundResult::value(ids[1], (num.abs() / (r * (r - 1.0) * (r - 2.0))).cbrt())
        } else {
            BoundResult::inapplicable(ids[1], format!("{label} > n-3"))
        };
        let cubic_b = if comps <= n - 2.0 {
            let num = s1 * s1 - 3.0 * s2 + s1 * s2 - s3 + sign * 6.0 * t;
            BoundResult::value(ids[2], (num.abs() / (r * (r - 1.0))).cbrt())
        } else {
            BoundResult::inapplicable(ids[2], format!("{label} > n-2"))
        };
        [sq, cubic_a, cubic_b]
    };

    let mut out = vec![
        BoundResult::value(BoundId::NeqSlb1, 2.0 * s1 / n),
        BoundResult::value(BoundId::NeqSlb2, (4.0 * s2 / n).sqrt()),
        BoundResult::value(BoundId::NeqSlb3, ((4.0 * s3 + 8.0 * degree_products) / n).cbrt()),
        upper(BoundId::UbL, c)?,
        upper(BoundId::UbSl, c_bip)?,
    ];
    out.extend(traces([BoundId::LbTrL1, BoundId::LbTrL2, BoundId::LbTrL3], c, 1.0, "c(Γ)"));
    out.extend(traces([BoundId::LbTrSl1, BoundId::LbTrSl2, BoundId::LbTrSl3], c_bip, -1.0, "c_bip(Γ)"));
    Ok(out)
}

/// A bound that fails to bracket its target spectral radius.
#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub id: BoundId,
    pub value: f64,
    pub lambda_max: f64,
    /// How far the bound is on the wrong side of `lambda_max`.
    pub magnitude: f64,
}

/// All cataloged bounds for one graph together with the exact spectral radii
/// they estimate.
#[derive(Clone, Debug, PartialEq)]
pub struct Evaluation {
    /// Spectrum of `L(Σ)`.
    pub spectrum: Spectrum,
    /// `λmax(L(Γ,+1))`.
    pub lambda_max_laplacian: f64,
    /// `λmax(L(Γ,−1))`.
    pub lambda_max_signless: f64,
    /// One result per cataloged bound, in catalog order.
    pub results: Vec<BoundResult>,
}

impl Evaluation {
    pub fn lambda_max(&self) -> f64 {
        self.spectrum.lambda_max()
    }

    pub fn target_lambda_max(&self, target: Target) -> f64 {
        match target {
            Target::Signed => self.lambda_max(),
            Target::Laplacian => self.lambda_max_laplacian,
            Target::Signless => self.lambda_max_signless,
        }
    }

    pub fn get(&self, id: BoundId) -> &BoundResult {
        self.results.iter().find(|r| r.id == id).expect("every id is evaluated")
    }

    /// Applicable bounds on the wrong side of their target by more than `tol`.
    pub fn violations(&self, tol: f64) -> Vec<Violation> {
        self.results
            .iter()
            .filter_map(|r| {
                let value = r.get()?;
                let lambda_max = self.target_lambda_max(r.id.target());
                let magnitude = match r.direction() {
                    Direction::Lower => value - lambda_max,
                    Direction::Upper => lambda_max - value,
                };
                (magnitude > tol).then_some(Violation { id: r.id, value, lambda_max, magnitude })
            })
            .collect()
    }
}

/// Evaluates every cataloged bound, plus the exact spectral radii of `L(Σ)`,
/// `L(Γ,+1)` and `L(Γ,−1)`. Bracketing is checked with
/// [`Evaluation::violations`].
pub fn evaluate_all(g: &SignedGraph) -> Result<Evaluation, BoundsError> {
    let s = Stats::new(g);
    let results = BoundId::ALL.iter().map(|&id| evaluate(id, &s)).collect::<Result<Vec<_>, _>>()?;
    Ok(Evaluation {
        spectrum: spectra::laplacian_spectrum(g)?,
        lambda_max_laplacian: spectra::spectral_radius_laplacian(&spectra::sign_all(g, Sign::Pos))?,
        lambda_max_signless: spectra::spectral_radius_laplacian(&spectra::sign_all(g, Sign::Neg))?,
        results,
    })
}
