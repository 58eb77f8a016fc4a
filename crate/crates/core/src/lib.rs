//! Laplacian spectral radius bounds for signed graphs.
//!
//! A signed graph `Σ = (Γ, σ)` carries a sign `±1` on every edge; its
//! Laplacian is `L(Σ) = D − A(Σ)` with the signed adjacency matrix. Signing
//! every edge `+1` gives the ordinary Laplacian of `Γ`, signing every edge
//! `−1` gives the signless Laplacian.
//!
//! | module | contents |
//! |--------|----------|
//! | [`sgraph`] | graph type, edge-list format, degree and triangle statistics |
//! | [`spectra`] | `A`, `D`, `L` matrices, Jacobi eigensolver, trace and Rayleigh moments |
//! | [`balance`] | switching, balance, `b(Σ)`, `c(Γ)`, `c_bip(Γ)`, equivalence witnesses |
//! | [`bounds`] | the bound catalog and [`bounds::evaluate_all`] |
//! | [`harness`] | seeded generator, verification runs, comparison reports |
//!
//! ```
//! use signed_laplacian::{bounds, parse_signed_graph, spectra};
//!
//! let g = parse_signed_graph("n 3\n1 2 -\n2 3 -\n1 3 -\n").unwrap();
//! let lambda = spectra::spectral_radius_laplacian(&g).unwrap();
//! assert!((lambda - 4.0).abs() < 1e-9);
//!
//! let eval = bounds::evaluate_all(&g).unwrap();
//! assert!(eval.violations(1e-9).is_empty());
//! ```

pub mod balance;
pub mod bounds;
pub mod harness;
pub mod sgraph;
pub mod spectra;

pub use balance::{balance_info, switch, switching_equivalent, BalanceInfo, SwitchingFunction};
pub use bounds::{evaluate_all, BoundId, BoundResult, Direction, Evaluation, Target};
pub use sgraph::{
    degree_profile, parse_signed_graph, serialize_signed_graph, triangle_stats, DegreeProfile, Edge, Sign, SignedGraph,
    TriangleStats,
};
pub use spectra::{laplacian, spectral_radius_laplacian, Spectrum, SymMatrix};
