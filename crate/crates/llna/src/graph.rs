//! Word-adjacency networks and their topological measurements.
//!
//! ```
//! use llna::corpus::{remove_stopwords, tokenize, StopwordList};
//! use llna::graph::{build_network, giant_component, measure, Network};
//!
//! let seq = tokenize("sun and moon and stars and sun", "demo");
//! let seq = remove_stopwords(&seq, &StopwordList::default_english());
//! let net = giant_component(&build_network(&seq)?);
//! assert_eq!(net.node_count(), 3); // sun, moon, stars
//!
//! // a 4-node path: *-*-*-*
//! let path = Network::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
//! let m = measure(&path)?;
//! assert_eq!((m.n, m.e, m.diameter), (4, 3, 3));
//! assert!((m.avg_degree - 1.5).abs() < 1e-12);
//! assert!((m.density - 0.5).abs() < 1e-12);
//! assert!((m.assortativity - (-0.5)).abs() < 1e-12);
//! # Ok::<(), llna::Error>(())
//! ```

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::corpus::TokenSequence;
use crate::error::{Error, Result};
use crate::powerlaw::{self, PowerLawFit};

/// An undirected, unweighted graph over lemma nodes.
///
/// Node indices follow first-appearance order in the token sequence the
/// network was built from. No self-loops, no multi-edges.
#[derive(Debug, Clone)]
pub struct Network {
    labels: Vec<String>,
    neighbors: Vec<Vec<u32>>,
    edge_count: usize,
}

impl Network {
    /// Build directly from an edge list over `n` nodes (labels "0".."n-1"
    /// unless given). Self-loops are dropped, duplicates collapse.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Self {
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::from_labeled_edges(labels, edges)
    }

    pub fn from_labeled_edges(labels: Vec<String>, edges: &[(u32, u32)]) -> Self {
        let n = labels.len();
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            assert!((u as usize) < n && (v as usize) < n, "edge out of range");
            if u != v {
                set.insert((u.min(v), u.max(v)));
            }
        }
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in &set {
            neighbors[u as usize].push(v);
            neighbors[v as usize].push(u);
        }
        for adj in &mut neighbors {
            adj.sort_unstable();
        }
        Network {
            labels,
            neighbors,
            edge_count: set.len(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn degree(&self, i: usize) -> usize {
        self.neighbors[i].len()
    }

    pub fn neighbors(&self, i: usize) -> &[u32] {
        &self.neighbors[i]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors[u].binary_search(&(v as u32)).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.neighbors.iter().enumerate().flat_map(|(u, adj)| {
            adj.iter()
                .filter(move |&&v| (u as u32) < v)
                .map(move |&v| (u as u32, v))
        })
    }

    /// BFS distances from `src`; unreachable nodes get `usize::MAX`.
    pub fn bfs_distances(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.node_count()];
        let mut queue = std::collections::VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for &v in &self.neighbors[u] {
                let v = v as usize;
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        if self.node_count() == 0 {
            return true;
        }
        self.bfs_distances(0).iter().all(|&d| d != usize::MAX)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.node_count()).map(|i| self.degree(i)).collect()
    }
}

/// Build the word-adjacency network: one node per distinct token, one edge
/// per adjacent token pair in the (filtered) sequence.
pub fn build_network(seq: &TokenSequence) -> Result<Network> {
    if seq.tokens.len() < 2 {
        return Err(Error::DegenerateNetwork(format!(
            "need at least 2 tokens, got {}",
            seq.tokens.len()
        )));
    }
    let mut index: HashMap<&str, u32> = HashMap::new();
    let mut labels = Vec::new();
    let mut ids = Vec::with_capacity(seq.tokens.len());
    for t in &seq.tokens {
        let id = *index.entry(t.as_str()).or_insert_with(|| {
            labels.push(t.clone());
            (labels.len() - 1) as u32
        });
        ids.push(id);
    }
    let edges: Vec<(u32, u32)> = ids.windows(2).map(|w| (w[0], w[1])).collect();
    Ok(Network::from_labeled_edges(labels, &edges))
}

/// Induced subgraph on the largest connected component; ties broken by the
/// component containing the smallest node index.
pub fn giant_component(net: &Network) -> Network {
    let n = net.node_count();
    let mut comp = vec![usize::MAX; n];
    let mut sizes = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let c = sizes.len();
        let mut size = 0usize;
        let mut stack = vec![start];
        comp[start] = c;
        while let Some(u) = stack.pop() {
            size += 1;
            for &v in net.neighbors(u) {
                let v = v as usize;
                if comp[v] == usize::MAX {
                    comp[v] = c;
                    stack.push(v);
                }
            }
        }
        sizes.push(size);
    }
    // first component achieving the max size wins: component ids are
    // assigned in ascending order of smallest member index.
    let best = sizes
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        .map(|(i, _)| i)
        .unwrap_or(0);
    let keep: Vec<usize> = (0..n).filter(|&i| comp[i] == best).collect();
    let remap: HashMap<usize, u32> = keep
        .iter()
        .enumerate()
        .map(|(new, &old)| (old, new as u32))
        .collect();
    let labels = keep.iter().map(|&i| net.label(i).to_string()).collect();
    let mut edges = Vec::new();
    for &u in &keep {
        for &v in net.neighbors(u) {
            let v = v as usize;
            if u < v && comp[v] == best {
                edges.push((remap[&u], remap[&v]));
            }
        }
    }
    Network::from_labeled_edges(labels, &edges)
}

/// Number of nodes at shortest-path distance exactly `h` from `node`.
pub fn hierarchical_degree(net: &Network, node: usize, h: usize) -> usize {
    assert!(h >= 1);
    net.bfs_distances(node).iter().filter(|&&d| d == h).count()
}

/// The full traditional measurement set for one network.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NetworkMeasurements {
    pub n: usize,
    pub e: usize,
    pub avg_degree: f64,
    pub avg_hier_degree_2: f64,
    pub avg_hier_degree_3: f64,
    pub avg_clustering: f64,
    pub avg_path_length: f64,
    pub diameter: usize,
    pub density: f64,
    pub gamma: f64,
    pub assortativity: f64,
    /// Set when the assortativity denominator vanishes (regular graphs)
    /// or the power-law fit had no tail to work with.
    pub degenerate_assortativity: bool,
    pub degenerate_gamma: bool,
}

impl NetworkMeasurements {
    pub const CSV_HEADER: &'static str =
        "n,e,avg_degree,avg_hier_degree_2,avg_hier_degree_3,avg_clustering,avg_path_length,diameter,density,gamma,assortativity";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{:.6},{:.6},{:.6},{:.6},{:.6},{},{:.6},{:.6},{:.6}",
            self.n,
            self.e,
            self.avg_degree,
            self.avg_hier_degree_2,
            self.avg_hier_degree_3,
            self.avg_clustering,
            self.avg_path_length,
            self.diameter,
            self.density,
            self.gamma,
            self.assortativity
        )
    }

    /// The six-measurement baseline vector used for classification.
    pub fn baseline_vector(&self) -> [f64; 6] {
        [
            self.avg_degree,
            self.avg_hier_degree_2,
            self.avg_hier_degree_3,
            self.avg_clustering,
            self.avg_path_length,
            self.assortativity,
        ]
    }
}

/// Compute every measurement on a connected network.
///
/// Density uses d = 2E/N(N-1), the convention consistent with reported
/// word-adjacency values (an E/N(N-1) variant appears in some sources).
pub fn measure(net: &Network) -> Result<NetworkMeasurements> {
    let n = net.node_count();
    if n < 3 {
        return Err(Error::DegenerateNetwork(format!("N={n} < 3")));
    }
    let e = net.edge_count();
    let avg_degree = 2.0 * e as f64 / n as f64;

    // single all-pairs BFS pass feeds <L>, D and the hierarchical degrees
    let mut sum_dist = 0u64;
    let mut diameter = 0usize;
    let mut sum_h2 = 0u64;
    let mut sum_h3 = 0u64;
    for src in 0..n {
        for &d in net.bfs_distances(src).iter() {
            if d == usize::MAX {
                return Err(Error::DegenerateNetwork(
                    "measure requires a connected network (apply giant_component)".into(),
                ));
            }
            sum_dist += d as u64;
            diameter = diameter.max(d);
            match d {
                2 => sum_h2 += 1,
                3 => sum_h3 += 1,
                _ => {}
            }
        }
    }
    let pairs = (n * (n - 1)) as f64;
    let avg_path_length = sum_dist as f64 / pairs;
    let avg_hier_degree_2 = sum_h2 as f64 / n as f64;
    let avg_hier_degree_3 = sum_h3 as f64 / n as f64;

    // clustering: count edges among neighbors via sorted intersection
    let mut cc_sum = 0.0;
    for i in 0..n {
        let k = net.degree(i);
        if k < 2 {
            continue;
        }
        let mut e_i = 0usize;
        for &j in net.neighbors(i) {
            e_i += intersect_count(net.neighbors(i), net.neighbors(j as usize));
        }
        // each neighbor-neighbor edge counted twice in the loop above
        let e_i = e_i / 2;
        cc_sum += 2.0 * e_i as f64 / (k * (k - 1)) as f64;
    }
    let avg_clustering = cc_sum / n as f64;

    let (assortativity, degenerate_assortativity) = assortativity(net);

    let degrees = net.degrees();
    let (gamma, degenerate_gamma) = match powerlaw::fit_power_law(&degrees) {
        Ok(PowerLawFit {
            gamma, degenerate, ..
        }) => (gamma, degenerate),
        Err(_) => (f64::NAN, true),
    };

    Ok(NetworkMeasurements {
        n,
        e,
        avg_degree,
        avg_hier_degree_2,
        avg_hier_degree_3,
        avg_clustering,
        avg_path_length,
        diameter,
        density: 2.0 * e as f64 / pairs,
        gamma,
        assortativity,
        degenerate_assortativity,
        degenerate_gamma,
    })
}

fn intersect_count(a: &[u32], b: &[u32]) -> usize {
    let mut i = 0;
    let mut j = 0;
    let mut count = 0;
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Degree-correlation assortativity over edges; returns (value, degenerate).
/// A zero denominator (regular graphs) yields (0, true).
pub fn assortativity(net: &Network) -> (f64, bool) {
    let e = net.edge_count() as f64;
    if e == 0.0 {
        return (0.0, true);
    }
    // accumulate integer-valued sums and divide once: multiplying the
    // usual per-edge means through by E^2 keeps modest graphs exact
    let mut sum_prod = 0.0;
    let mut two_sum_half = 0.0;
    let mut two_sum_halfsq = 0.0;
    for (u, v) in net.edges() {
        let ki = net.degree(u as usize) as f64;
        let kj = net.degree(v as usize) as f64;
        sum_prod += ki * kj;
        two_sum_half += ki + kj;
        two_sum_halfsq += ki * ki + kj * kj;
    }
    let num = e * sum_prod - 0.25 * two_sum_half * two_sum_half;
    let den = 0.5 * e * two_sum_halfsq - 0.25 * two_sum_half * two_sum_half;
    if den.abs() < 1e-9 * e * e {
        (0.0, true)
    } else {
        (num / den, false)
    }
}

/// Serialize as an edge-list file: node-index header block then one
/// "u<TAB>v" line per edge.
pub fn to_edge_list(net: &Network) -> String {
    let mut out = String::new();
    out.push_str(&format!("# nodes {}\n", net.node_count()));
    for (i, label) in net.labels().iter().enumerate() {
        out.push_str(&format!("# {i}\t{label}\n"));
    }
    for (u, v) in net.edges() {
        out.push_str(&format!("{u}\t{v}\n"));
    }
    out
}

/// Parse the format written by [`to_edge_list`].
pub fn from_edge_list(text: &str) -> Result<Network> {
    let mut labels = Vec::new();
    let mut edges = Vec::new();
    for line in text.lines() {
        if let Some(rest) = line.strip_prefix("# ") {
            if let Some((idx, label)) = rest.split_once('\t') {
                if idx.parse::<usize>().is_ok() {
                    labels.push(label.to_string());
                }
            }
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let (u, v) = line
            .split_once('\t')
            .ok_or_else(|| Error::Config(format!("bad edge line {line:?}")))?;
        let u: u32 = u
            .trim()
            .parse()
            .map_err(|_| Error::Config(format!("bad edge line {line:?}")))?;
        let v: u32 = v
            .trim()
            .parse()
            .map_err(|_| Error::Config(format!("bad edge line {line:?}")))?;
        edges.push((u, v));
    }
    Ok(Network::from_labeled_edges(labels, &edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{tokenize, remove_stopwords, StopwordList};

    fn seq_of(words: &[&str]) -> TokenSequence {
        TokenSequence {
            tokens: words.iter().map(|s| s.to_string()).collect(),
            provenance: "test".into(),
            lemma_mode: crate::corpus::LemmaMode::None,
        }
    }

    #[test]
    fn build_path() {
        let net = build_network(&seq_of(&["cat", "sat", "mat"])).unwrap();
        assert_eq!(net.node_count(), 3);
        assert_eq!(net.edge_count(), 2);
        assert!(net.has_edge(0, 1) && net.has_edge(1, 2) && !net.has_edge(0, 2));
    }

    #[test]
    fn build_cycle_from_repeat() {
        let net = build_network(&seq_of(&["cat", "sat", "mat", "cat"])).unwrap();
        assert_eq!((net.node_count(), net.edge_count()), (3, 3));
    }

    #[test]
    fn duplicate_pair_collapses() {
        let net = build_network(&seq_of(&["a", "b", "a", "b"])).unwrap();
        assert_eq!((net.node_count(), net.edge_count()), (2, 1));
    }

    #[test]
    fn too_short_errors() {
        assert!(build_network(&seq_of(&["a"])).is_err());
    }

    #[test]
    fn repeated_token_no_self_loop() {
        let net = build_network(&seq_of(&["a", "a", "b"])).unwrap();
        assert_eq!((net.node_count(), net.edge_count()), (2, 1));
    }

    #[test]
    fn giant_component_selection() {
        // components {0..4} (path of 5) and {5..7} (triangle)
        let net = Network::from_edges(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (5, 6), (6, 7), (5, 7)],
        );
        let gc = giant_component(&net);
        assert_eq!(gc.node_count(), 5);
        // connected graph comes back identical
        let gc2 = giant_component(&gc);
        assert_eq!(gc2.node_count(), 5);
        assert_eq!(gc2.edge_count(), gc.edge_count());
    }

    #[test]
    fn giant_component_tie_break() {
        // two 2-node components; the one holding node 0 wins
        let net = Network::from_edges(4, &[(2, 3), (0, 1)]);
        let gc = giant_component(&net);
        assert_eq!(gc.node_count(), 2);
        assert_eq!(gc.label(0), "0");
    }

    #[test]
    fn hierarchical_degree_on_path() {
        let net = Network::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(hierarchical_degree(&net, 0, 1), 1);
        assert_eq!(hierarchical_degree(&net, 0, 3), 1);
        assert_eq!(hierarchical_degree(&net, 1, 2), 1);
    }

    #[test]
    fn measure_path4() {
        let net = Network::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let m = measure(&net).unwrap();
        assert_eq!((m.n, m.e, m.diameter), (4, 3, 3));
        assert!((m.avg_degree - 1.5).abs() < 1e-12);
        assert_eq!(m.avg_clustering, 0.0);
        assert!((m.avg_path_length - 20.0 / 12.0).abs() < 1e-12);
        assert!((m.density - 0.5).abs() < 1e-12);
        assert!((m.assortativity - -0.5).abs() < 1e-12);
    }

    #[test]
    fn measure_k4() {
        let net = Network::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let m = measure(&net).unwrap();
        assert!((m.avg_clustering - 1.0).abs() < 1e-12);
        assert!((m.avg_path_length - 1.0).abs() < 1e-12);
        assert_eq!(m.diameter, 1);
        assert!((m.density - 1.0).abs() < 1e-12);
        assert!((m.avg_degree - 3.0).abs() < 1e-12);
        assert!(m.degenerate_assortativity);
    }

    #[test]
    fn handshake_on_built_network() {
        let stop = StopwordList::default_english();
        let seq = remove_stopwords(
            &tokenize(
                "one fish two fish red fish blue fish; old fish new fish little fish big fish",
                "t",
            ),
            &stop,
        );
        let net = build_network(&seq).unwrap();
        let sum: usize = net.degrees().iter().sum();
        assert_eq!(sum, 2 * net.edge_count());
    }

    #[test]
    fn edge_list_roundtrip() {
        let net = build_network(&seq_of(&["cat", "sat", "mat", "cat"])).unwrap();
        let text = to_edge_list(&net);
        let back = from_edge_list(&text).unwrap();
        assert_eq!(back.node_count(), net.node_count());
        assert_eq!(back.edge_count(), net.edge_count());
        assert_eq!(back.labels(), net.labels());
    }
}
