//! Switching, balance, and component counts.
//!
//! A component is balanced when it can be switched to all-positive edges.
//! [`balance_info`] finds that switching by propagating signs along a
//! breadth-first tree and then checking every edge against it.

use std::collections::VecDeque;

use thiserror::Error;

use crate::sgraph::{Sign, SignedGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BalanceError {
    #[error("switching function has {got} values for a graph on {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
}

/// A vertex signing `θ: V → {+1, -1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwitchingFunction(Vec<Sign>);

impl SwitchingFunction {
    pub fn new(theta: Vec<Sign>) -> Self {
        SwitchingFunction(theta)
    }

    /// The identity switching on `n` vertices.
    pub fn identity(n: usize) -> Self {
        SwitchingFunction(vec![Sign::Pos; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[Sign] {
        &self.0
    }

    pub fn get(&self, v: usize) -> Sign {
        self.0[v]
    }
}

impl std::fmt::Display for SwitchingFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Switches every edge sign to `θ(u) σ(uv) θ(v)`.
pub fn switch(g: &SignedGraph, theta: &SwitchingFunction) -> Result<SignedGraph, BalanceError> {
    if theta.len() != g.order() {
        return Err(BalanceError::LengthMismatch { expected: g.order(), got: theta.len() });
    }
    Ok(g.resign(|e| theta.get(e.u) * e.sign * theta.get(e.v)))
}

/// Components of the graph and which of them are balanced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceInfo {
    /// Component id of each vertex, numbered in order of smallest vertex.
    pub component_labels: Vec<usize>,
    pub component_balanced: Vec<bool>,
    /// Switching that makes every balanced component all-positive.
    pub certificate: SwitchingFunction,
}

impl BalanceInfo {
    /// `c(Γ)`.
    pub fn component_count(&self) -> usize {
        self.component_balanced.len()
    }

    /// `b(Σ)`.
    pub fn balanced_count(&self) -> usize {
        self.component_balanced.iter().filter(|&&b| b).count()
    }

    pub fn is_balanced(&self) -> bool {
        self.component_balanced.iter().all(|&b| b)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }
}

pub fn balance_info(g: &SignedGraph) -> BalanceInfo {
    let n = g.order();
    let mut labels = vec![usize::MAX; n];
    let mut theta = vec![Sign::Pos; n];
    let mut balanced = Vec::new();
    let mut queue = VecDeque::new();

    for root in 0..n {
        if labels[root] != usize::MAX {
            continue;
        }
        let id = balanced.len();
        labels[root] = id;
        queue.push_back(root);
        let mut ok = true;
        while let Some(u) = queue.pop_front() {
            for &(v, sign) in g.neighbors(u) {
                if labels[v] == usize::MAX {
                    labels[v] = id;
                    theta[v] = sign * theta[u];
                    queue.push_back(v);
                } else if theta[u] * theta[v] != sign {
                    ok = false;
                }
            }
        }
        balanced.push(ok);
    }

    BalanceInfo { component_labels: labels, component_balanced: balanced, certificate: SwitchingFunction(theta) }
}

/// `c(Γ)`: number of connected components of the underlying graph.
pub fn component_count(g: &SignedGraph) -> usize {
    balance_info(g).component_count()
}

pub fn is_connected(g: &SignedGraph) -> bool {
    component_count(g) == 1
}

/// Rank of `L(Σ)`, which is `n - b(Σ)`.
pub fn laplacian_rank(g: &SignedGraph) -> usize {
    g.order() - balance_info(g).balanced_count()
}

/// Tests `g1 ~ g2`. Returns a switching `θ` with `switch(g1, θ) == g2` when
/// the graphs are switching equivalent.
///
/// The graphs are equivalent exactly when they share an underlying graph and
/// the product signature `σ1 σ2` is balanced on every component; the
/// balancing switching of the product is the witness.
pub fn switching_equivalent(g1: &SignedGraph, g2: &SignedGraph) -> Option<SwitchingFunction> {
    if !g1.same_underlying(g2) {
        return None;
    }
    let product = g1.resign(|e| {
        let other = g2.sign_of(e.u, e.v).expect("same underlying graph");
        e.sign * other
    });
    let info = balance_info(&product);
    info.is_balanced().then_some(info.certificate)
}

/// `Σ⁺` or `Σ⁻`: all vertices, only the edges of the given sign.
pub fn induced_sign_subgraph(g: &SignedGraph, sign: Sign) -> SignedGraph {
    g.filter_edges(|e| e.sign == sign)
}

/// `c_bip(Γ)` by 2-coloring each component of the underlying graph.
pub fn bipartite_component_count(g: &SignedGraph) -> usize {
    let n = g.order();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut count = 0;
    let mut queue = VecDeque::new();
    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(false);
        queue.push_back(root);
        let mut bipartite = true;
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for &(v, _) in g.neighbors(u) {
                match color[v] {
                    None => {
                        color[v] = Some(!cu);
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => bipartite = false,
                    Some(_) => {}
                }
            }
        }
        if bipartite {
            count += 1;
        }
    }
    count
}
