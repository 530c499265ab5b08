//! Synthetic graph families for calibration and benchmark corpora.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Network;

/// Erdos-Renyi G(n, p) with p chosen for the requested mean degree.
pub fn erdos_renyi(n: usize, mean_degree: f64, seed: u64) -> Network {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = (mean_degree / (n as f64 - 1.0)).clamp(0.0, 1.0);
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Network::from_edges(n, &edges)
}

/// Barabasi-Albert preferential attachment: each new node attaches to `m`
/// existing nodes with probability proportional to degree. Mean degree
/// approaches 2m.
pub fn barabasi_albert(n: usize, m: usize, seed: u64) -> Network {
    assert!(n > m && m >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(u32, u32)> = Vec::new();
    // degree-proportional sampling via the repeated-endpoint list
    let mut endpoints: Vec<u32> = Vec::new();
    // seed clique over the first m+1 nodes
    for u in 0..=m as u32 {
        for v in u + 1..=m as u32 {
            edges.push((u, v));
            endpoints.push(u);
            endpoints.push(v);
        }
    }
    for new in (m + 1) as u32..n as u32 {
        let mut chosen: Vec<u32> = Vec::with_capacity(m);
        while chosen.len() < m {
            let pick = endpoints[rng.gen_range(0..endpoints.len())];
            if !chosen.contains(&pick) {
                chosen.push(pick);
            }
        }
        for &c in &chosen {
            edges.push((new, c));
            endpoints.push(new);
            endpoints.push(c);
        }
    }
    Network::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn er_mean_degree_close() {
        let net = erdos_renyi(500, 8.0, 42);
        let k = 2.0 * net.edge_count() as f64 / net.node_count() as f64;
        assert!((k - 8.0).abs() < 1.0, "mean degree {k}");
    }

    #[test]
    fn ba_is_connected_with_hubs() {
        let net = barabasi_albert(500, 4, 7);
        assert!(net.is_connected());
        let k = 2.0 * net.edge_count() as f64 / net.node_count() as f64;
        assert!((k - 8.0).abs() < 0.5, "mean degree {k}");
        let max_deg = net.degrees().into_iter().max().unwrap();
        assert!(max_deg > 30, "expected hubs, max degree {max_deg}");
    }

    #[test]
    fn generators_deterministic() {
        let a = erdos_renyi(100, 4.0, 3);
        let b = erdos_renyi(100, 4.0, 3);
        assert_eq!(a.edge_count(), b.edge_count());
        assert_eq!(
            a.edges().collect::<Vec<_>>(),
            b.edges().collect::<Vec<_>>()
        );
    }
}
