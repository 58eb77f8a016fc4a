#![allow(dead_code)]

use signed_laplacian::harness::{trial_seed, GeneratorConfig, GraphRng};
use signed_laplacian::{Sign, SignedGraph};

pub fn graph(n: usize, edges: &[(usize, usize, i64)]) -> SignedGraph {
    SignedGraph::new(n, edges.iter().map(|&(a, b, s)| (a - 1, b - 1, Sign::from_value(s).unwrap()))).unwrap()
}

pub fn k3(signs: [i64; 3]) -> SignedGraph {
    graph(3, &[(1, 2, signs[0]), (2, 3, signs[1]), (1, 3, signs[2])])
}

pub fn k3n() -> SignedGraph {
    k3([-1, -1, -1])
}

pub fn k3p() -> SignedGraph {
    k3([1, 1, 1])
}

pub fn k3m() -> SignedGraph {
    k3([1, 1, -1])
}

pub fn p3p() -> SignedGraph {
    graph(3, &[(1, 2, 1), (2, 3, 1)])
}

pub fn star(k: usize, sign: i64) -> SignedGraph {
    let edges: Vec<_> = (2..=k + 1).map(|v| (1, v, sign)).collect();
    graph(k + 1, &edges)
}

/// Random signed graphs with `n` cycling through `1..=max_n` and a spread of
/// edge densities. Graph `i` is reproducible from `(seed, i)`.
pub fn mixed_corpus(count: usize, max_n: usize, seed: u64) -> Vec<SignedGraph> {
    const DENSITIES: [f64; 5] = [0.1, 0.25, 0.45, 0.7, 0.9];
    (0..count)
        .map(|i| {
            let mut rng = GraphRng::new(trial_seed(seed, i));
            let cfg = GeneratorConfig {
                n: 1 + i % max_n,
                edge_prob: DENSITIES[(i / max_n) % DENSITIES.len()],
                neg_prob: 0.5,
                seed: 0,
                require_connected: false,
            };
            rng.graph(&cfg).unwrap()
        })
        .collect()
}

/// Connected random signed graphs, `n` in `1..=max_n`, edge probability
/// uniform in `[0.2, 0.8]`.
pub fn connected_corpus(count: usize, max_n: usize, neg_prob: f64, seed: u64) -> Vec<SignedGraph> {
    (0..count)
        .map(|i| {
            let mut rng = GraphRng::new(trial_seed(seed, i));
            let cfg = GeneratorConfig {
                n: 1 + rng.below(max_n),
                edge_prob: 0.2 + 0.6 * rng.uniform(),
                neg_prob,
                seed: 0,
                require_connected: true,
            };
            rng.graph(&cfg).unwrap()
        })
        .collect()
}

/// Triangle counts `(positive, negative)` by scanning every vertex triple.
pub fn brute_force_triangles(g: &SignedGraph) -> (i64, i64) {
    let n = g.order();
    let (mut pos, mut neg) = (0, 0);
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if let (Some(x), Some(y), Some(z)) = (g.sign_of(a, b), g.sign_of(b, c), g.sign_of(a, c)) {
                    if x.value() * y.value() * z.value() == 1 {
                        pos += 1;
                    } else {
                        neg += 1;
                    }
                }
            }
        }
    }
    (pos, neg)
}

/// Dense integer Laplacian built straight from the edge list.
pub fn dense_laplacian(g: &SignedGraph) -> Vec<Vec<i64>> {
    let n = g.order();
    let mut l = vec![vec![0i64; n]; n];
    for e in g.edges() {
        l[e.u][e.u] += 1;
        l[e.v][e.v] += 1;
        l[e.u][e.v] -= e.sign.value();
        l[e.v][e.u] -= e.sign.value();
    }
    l
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            out[i][j] = (0..n).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

pub fn mat_pow(a: &[Vec<i64>], k: u32) -> Vec<Vec<i64>> {
    let mut out = a.to_vec();
    for _ in 1..k {
        out = mat_mul(&out, a);
    }
    out
}

pub fn trace(a: &[Vec<i64>]) -> i64 {
    (0..a.len()).map(|i| a[i][i]).sum()
}

/// Sum of all entries, i.e. `jᵀ A j`.
pub fn total(a: &[Vec<i64>]) -> i64 {
    a.iter().flatten().sum()
}

/// Characteristic polynomial coefficients of an integer matrix by
/// Faddeev–LeVerrier: `det(λI − A) = λⁿ + c[1] λⁿ⁻¹ + … + c[n]`. The
/// divisions are exact for integer matrices.
pub fn char_poly(a: &[Vec<i64>]) -> Vec<i64> {
    let n = a.len();
    let mut coeffs = vec![1i64];
    let mut m = vec![vec![0i64; n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{k-1} I
        let mut next = mat_mul(a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += coeffs[k - 1];
        }
        m = next;
        let am = mat_mul(a, &m);
        let tr = trace(&am);
        assert_eq!(tr % k as i64, 0);
        coeffs.push(-tr / k as i64);
    }
    coeffs
}

/// Coefficients of `∏ (λ − r)` for integer roots.
pub fn poly_from_roots(roots: &[i64]) -> Vec<i64> {
    let mut coeffs = vec![1i64];
    for &r in roots {
        let mut next = vec![0i64; coeffs.len() + 1];
        for (i, &c) in coeffs.iter().enumerate() {
            next[i] += c;
            next[i + 1] -= r * c;
        }
        coeffs = next;
    }
    coeffs
}
