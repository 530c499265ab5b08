//! Life-Like rules over network tessellations and their evolution.
//!
//! A rule is a pair of digit sets (born, survive) over the r = 9 density
//! bins; evolution produces the N x (T+1) binary state history with rows
//! sorted by ascending node degree.
//!
//! ```
//! use llna::automaton::{density_bin, evolve, Rule, RULE_SPACE};
//! use llna::graph::Network;
//!
//! let conway = Rule::parse("B3-S23")?;
//! assert!(conway.born_contains(3) && conway.survive_contains(2));
//! assert_eq!(conway.to_string(), "B3-S23");
//! assert_eq!(Rule::from_index(123_456)?.to_index(), 123_456);
//! assert_eq!(RULE_SPACE, 262_144);
//!
//! // 5 alive neighbors out of 9 -> bin 5; full density clamps to bin 8
//! assert_eq!(density_bin(5, 9)?, 5);
//! assert_eq!(density_bin(7, 7)?, 8);
//!
//! let net = Network::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
//! let matrix = evolve(&net, conway, 20, 7)?;
//! assert_eq!((matrix.node_count(), matrix.t_steps()), (5, 20));
//! let again = evolve(&net, conway, 20, 7)?;
//! assert_eq!(matrix.state_at(20), again.state_at(20));
//! # Ok::<(), llna::Error>(())
//! ```

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::graph::Network;

/// Number of density bins (Moore-neighborhood convention).
pub const NUM_BINS: u32 = 9;
/// Total number of Life-Like rules: 2^18.
pub const RULE_SPACE: u32 = 1 << 18;

/// One outer-totalistic rule: which density bins make a dead node live
/// (born) and which keep a live node alive (survive).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rule {
    born: u16,
    survive: u16,
}

impl Rule {
    pub fn new(born_digits: &[u8], survive_digits: &[u8]) -> Result<Self> {
        let mut rule = Rule { born: 0, survive: 0 };
        for &d in born_digits {
            rule.born |= Self::digit_mask(d)?;
        }
        for &d in survive_digits {
            rule.survive |= Self::digit_mask(d)?;
        }
        Ok(rule)
    }

    fn digit_mask(d: u8) -> Result<u16> {
        if d > 8 {
            return Err(Error::RuleParse {
                text: d.to_string(),
                reason: "digit out of range 0-8".into(),
            });
        }
        Ok(1 << d)
    }

    #[inline]
    pub fn born_mask(&self) -> u16 {
        self.born
    }

    #[inline]
    pub fn survive_mask(&self) -> u16 {
        self.survive
    }

    #[inline]
    pub fn born_contains(&self, bin: u8) -> bool {
        self.born >> bin & 1 == 1
    }

    #[inline]
    pub fn survive_contains(&self, bin: u8) -> bool {
        self.survive >> bin & 1 == 1
    }

    /// Bijection with [0, 2^18): low 9 bits born, high 9 bits survive.
    pub fn from_index(idx: u32) -> Result<Self> {
        if idx >= RULE_SPACE {
            return Err(Error::RuleIndexOutOfRange(idx));
        }
        Ok(Rule {
            born: (idx & 0x1FF) as u16,
            survive: (idx >> 9) as u16,
        })
    }

    pub fn to_index(&self) -> u32 {
        self.born as u32 | (self.survive as u32) << 9
    }

    /// Parse the canonical "B<digits>-S<digits>" form. Digits must be
    /// ascending-unique in canonical text, but any unduplicated order parses.
    pub fn parse(text: &str) -> Result<Self> {
        let err = |reason: &str| Error::RuleParse {
            text: text.to_string(),
            reason: reason.into(),
        };
        let rest = text.strip_prefix('B').ok_or_else(|| err("must start with 'B'"))?;
        let (born_digits, survive_digits) = rest
            .split_once("-S")
            .ok_or_else(|| err("missing '-S' separator"))?;
        let mut rule = Rule { born: 0, survive: 0 };
        for (digits, mask) in [
            (born_digits, &mut rule.born),
            (survive_digits, &mut rule.survive),
        ] {
            for c in digits.chars() {
                let d = c.to_digit(10).ok_or_else(|| err("non-digit character"))? as u8;
                let bit = Self::digit_mask(d).map_err(|_| err("digit 9 not allowed"))?;
                if *mask & bit != 0 {
                    return Err(err(&format!("duplicate digit {d}")));
                }
                *mask |= bit;
            }
        }
        Ok(rule)
    }
}

impl std::fmt::Display for Rule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("B")?;
        for d in 0..9 {
            if self.born >> d & 1 == 1 {
                write!(f, "{d}")?;
            }
        }
        f.write_str("-S")?;
        for d in 0..9 {
            if self.survive >> d & 1 == 1 {
                write!(f, "{d}")?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for Rule {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Rule::parse(s)
    }
}

/// Density bin of a node: min(floor(9 * alive/degree), 8).
///
/// The half-open bin intervals exclude a density of exactly 1, which is
/// clamped into the top bin.
#[inline]
pub fn density_bin(alive_neighbors: usize, degree: usize) -> Result<u8> {
    if degree == 0 {
        return Err(Error::UndefinedDensity(0));
    }
    debug_assert!(alive_neighbors <= degree);
    Ok(((alive_neighbors * NUM_BINS as usize / degree) as u8).min(8))
}

/// Row ordering of the spatio-temporal matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeOrder {
    /// Ascending degree, ties by node index (diagram convention).
    Degree,
    /// Original network node order.
    Natural,
}

/// A network prepared for fast evolution: CSR adjacency in row order plus
/// a per-node lookup from alive-neighbor count to density bin.
#[derive(Debug, Clone)]
pub struct AutomatonSpace {
    offsets: Vec<u32>,
    targets: Vec<u32>,
    bin_offsets: Vec<u32>,
    bin_table: Vec<u8>,
    node_order: Vec<u32>,
    n: usize,
}

impl AutomatonSpace {
    pub fn new(net: &Network, order: NodeOrder) -> Result<Self> {
        let n = net.node_count();
        let mut node_order: Vec<u32> = (0..n as u32).collect();
        if order == NodeOrder::Degree {
            node_order.sort_by_key(|&i| (net.degree(i as usize), i));
        }
        let mut row_of = vec![0u32; n];
        for (row, &orig) in node_order.iter().enumerate() {
            row_of[orig as usize] = row as u32;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut targets = Vec::new();
        let mut bin_offsets = Vec::with_capacity(n + 1);
        let mut bin_table = Vec::new();
        offsets.push(0);
        bin_offsets.push(0);
        for &orig in &node_order {
            let degree = net.degree(orig as usize);
            if degree == 0 {
                return Err(Error::UndefinedDensity(orig as usize));
            }
            for &v in net.neighbors(orig as usize) {
                targets.push(row_of[v as usize]);
            }
            for alive in 0..=degree {
                bin_table.push(density_bin(alive, degree)?);
            }
            offsets.push(targets.len() as u32);
            bin_offsets.push(bin_table.len() as u32);
        }
        Ok(AutomatonSpace {
            offsets,
            targets,
            bin_offsets,
            bin_table,
            node_order,
            n,
        })
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    /// Row index -> original network node index.
    pub fn node_order(&self) -> &[u32] {
        &self.node_order
    }

    /// One synchronous update of the whole state vector.
    pub fn step(&self, cur: &Bits, rule: Rule, next: &mut Bits) {
        debug_assert_eq!(cur.len(), self.n);
        let born = rule.born_mask();
        let survive = rule.survive_mask();
        for i in 0..self.n {
            let start = self.offsets[i] as usize;
            let end = self.offsets[i + 1] as usize;
            let mut alive = 0usize;
            for &t in &self.targets[start..end] {
                alive += cur.get(t as usize) as usize;
            }
            let bin = self.bin_table[self.bin_offsets[i] as usize + alive];
            let mask = if cur.get(i) { survive } else { born };
            next.set(i, mask >> bin & 1 == 1);
        }
    }
}

/// Uniform random initial state: each node alive with probability 1/2,
/// fully determined by the seed.
pub fn init_state(n: usize, seed: u64) -> Bits {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bits = Bits::zeros(n);
    bits.fill_from_words(|| rng.next_u64());
    bits
}

/// The N x (T+1) binary state history of one evolution.
#[derive(Debug, Clone)]
pub struct SpatioTemporalMatrix {
    /// One state vector per time step, indexed over matrix rows.
    columns: Vec<Bits>,
    node_order: Vec<u32>,
    pub seed: u64,
    pub rule: Rule,
}

impl SpatioTemporalMatrix {
    pub fn node_count(&self) -> usize {
        self.node_order.len()
    }

    /// Number of evolution steps T; the matrix holds T+1 states.
    pub fn t_steps(&self) -> usize {
        self.columns.len() - 1
    }

    /// The whole-network state at time t (a "horizontal" length-N sequence).
    pub fn state_at(&self, t: usize) -> &Bits {
        &self.columns[t]
    }

    /// Matrix row -> original network node index (ascending degree order).
    pub fn node_order(&self) -> &[u32] {
        &self.node_order
    }

    /// The time series of matrix row i (a "vertical" length-(T+1) sequence).
    pub fn node_series(&self, i: usize) -> Bits {
        let mut out = Bits::zeros(self.columns.len());
        for (t, col) in self.columns.iter().enumerate() {
            if col.get(i) {
                out.set(t, true);
            }
        }
        out
    }

    /// All node series; the row-major view of the matrix.
    pub fn all_node_series(&self) -> Vec<Bits> {
        (0..self.node_count())
            .map(|i| self.node_series(i))
            .collect()
    }

    /// Header plus one 0/1 CSV row per node (row-major).
    pub fn to_csv(&self) -> String {
        let mut out = format!(
            "# N={} T={} rule={} seed={}\n",
            self.node_count(),
            self.t_steps(),
            self.rule,
            self.seed
        );
        for i in 0..self.node_count() {
            let row = self.node_series(i);
            let cells: Vec<&str> = row.iter().map(|b| if b { "1" } else { "0" }).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    /// Plain PBM diagram: image rows are time steps, columns are nodes in
    /// degree order; dead cells are black (1), alive cells white (0).
    pub fn to_pbm(&self) -> String {
        let n = self.node_count();
        let h = self.columns.len();
        let mut out = format!("P1\n# rule={} seed={}\n{n} {h}\n", self.rule, self.seed);
        for col in &self.columns {
            let line: Vec<&str> = (0..n).map(|i| if col.get(i) { "0" } else { "1" }).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Evolve a rule over a prepared space for T steps from a seeded random
/// initial state.
pub fn evolve_in(space: &AutomatonSpace, rule: Rule, t_steps: usize, seed: u64) -> SpatioTemporalMatrix {
    assert!(t_steps >= 1);
    let n = space.node_count();
    let mut columns = Vec::with_capacity(t_steps + 1);
    columns.push(init_state(n, seed));
    let mut fixed_point = false;
    for t in 0..t_steps {
        if fixed_point {
            let prev = columns[t].clone();
            columns.push(prev);
            continue;
        }
        let mut next = Bits::zeros(n);
        space.step(&columns[t], rule, &mut next);
        fixed_point = next == columns[t];
        columns.push(next);
    }
    SpatioTemporalMatrix {
        columns,
        node_order: space.node_order().to_vec(),
        seed,
        rule,
    }
}

/// Evolve over a connected network (rows in ascending-degree order).
pub fn evolve(net: &Network, rule: Rule, t_steps: usize, seed: u64) -> Result<SpatioTemporalMatrix> {
    let space = AutomatonSpace::new(net, NodeOrder::Degree)?;
    Ok(evolve_in(&space, rule, t_steps, seed))
}

/// Deterministic per-(document, rule) evolution seed.
pub fn derive_seed(global_seed: u64, doc_id: &str, rule_index: u32) -> u64 {
    let mut hasher = Sha256::new();
    hasher.update(global_seed.to_le_bytes());
    hasher.update(doc_id.as_bytes());
    hasher.update(rule_index.to_le_bytes());
    let digest = hasher.finalize();
    u64::from_le_bytes(digest[..8].try_into().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_b3_s23() {
        let r = Rule::parse("B3-S23").unwrap();
        assert_eq!(r.born_mask(), 1 << 3);
        assert_eq!(r.survive_mask(), 1 << 2 | 1 << 3);
        assert_eq!(r.to_string(), "B3-S23");
    }

    #[test]
    fn parse_empty_rule() {
        let r = Rule::parse("B-S").unwrap();
        assert_eq!((r.born_mask(), r.survive_mask()), (0, 0));
    }

    #[test]
    fn parse_table1_rule() {
        let r = Rule::parse("B024678-S4").unwrap();
        let want: u16 = [0u16, 2, 4, 6, 7, 8].iter().map(|d| 1 << d).sum();
        assert_eq!(r.born_mask(), want);
        assert_eq!(r.survive_mask(), 1 << 4);
        assert_eq!(r.to_string(), "B024678-S4");
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(Rule::parse("B9-S").is_err());
        assert!(Rule::parse("B33-S").is_err());
        assert!(Rule::parse("3-S2").is_err());
        assert!(Rule::parse("B3S2").is_err());
        assert!(Rule::parse("B3-Sx").is_err());
    }

    #[test]
    fn index_bijection_bounds() {
        assert_eq!(Rule::from_index(0).unwrap().to_string(), "B-S");
        assert_eq!(
            Rule::from_index(RULE_SPACE - 1).unwrap().to_string(),
            "B012345678-S012345678"
        );
        assert_eq!(Rule::from_index(12345).unwrap().to_index(), 12345);
        assert!(Rule::from_index(RULE_SPACE).is_err());
    }

    #[test]
    fn density_bins() {
        assert_eq!(density_bin(2, 4).unwrap(), 4);
        assert_eq!(density_bin(0, 7).unwrap(), 0);
        assert_eq!(density_bin(5, 5).unwrap(), 8); // rho = 1 clamps
        assert!(density_bin(0, 0).is_err());
    }

    #[test]
    fn density_bin_matches_interval_arithmetic() {
        for degree in 1..=40usize {
            for alive in 0..=degree {
                let rho = alive as f64 / degree as f64;
                let expected = ((rho * 9.0).floor() as u8).min(8);
                assert_eq!(density_bin(alive, degree).unwrap(), expected);
            }
        }
    }

    #[test]
    fn step_triangle_b3_s23() {
        let net = Network::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        let space = AutomatonSpace::new(&net, NodeOrder::Natural).unwrap();
        let cur = Bits::from_str01("011");
        let mut next = Bits::zeros(3);
        space.step(&cur, Rule::parse("B3-S23").unwrap(), &mut next);
        assert_eq!(next.to_string(), "000");
    }

    #[test]
    fn universal_survival_is_fixed_point() {
        let net = Network::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let space = AutomatonSpace::new(&net, NodeOrder::Natural).unwrap();
        let all_on = Bits::from_str01("1111");
        let mut next = Bits::zeros(4);
        space.step(&all_on, Rule::parse("B-S012345678").unwrap(), &mut next);
        assert_eq!(next, all_on);
    }

    #[test]
    fn dead_rule_kills_everything() {
        let net = Network::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let m = evolve(&net, Rule::parse("B-S").unwrap(), 3, 1).unwrap();
        for t in 1..=3 {
            assert_eq!(m.state_at(t).count_ones(), 0);
        }
    }

    #[test]
    fn k4_all_alive_s8_fixed_point() {
        let net = Network::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let space = AutomatonSpace::new(&net, NodeOrder::Natural).unwrap();
        let rule = Rule::parse("B-S8").unwrap();
        let mut cur = Bits::from_str01("1111");
        let mut next = Bits::zeros(4);
        for _ in 0..5 {
            space.step(&cur, rule, &mut next);
            assert_eq!(next, cur);
            std::mem::swap(&mut cur, &mut next);
        }
    }

    #[test]
    fn superset_rule_dominates_single_step() {
        // If one rule's born and survive sets contain another's, then from any
        // shared state every node the smaller rule keeps alive, the larger one
        // does too.
        let net = Network::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0), (0, 3), (1, 5)]);
        let space = AutomatonSpace::new(&net, NodeOrder::Natural).unwrap();
        let small = Rule::parse("B3-S23").unwrap();
        let large = Rule::parse("B035-S0238").unwrap();
        for seed in 0..50u64 {
            let cur = init_state(7, seed);
            let mut next_small = Bits::zeros(7);
            let mut next_large = Bits::zeros(7);
            space.step(&cur, small, &mut next_small);
            space.step(&cur, large, &mut next_large);
            for i in 0..7 {
                assert!(!next_small.get(i) || next_large.get(i), "seed {seed} node {i}");
            }
        }
    }

    #[test]
    fn init_state_deterministic() {
        assert_eq!(init_state(5, 42), init_state(5, 42));
        assert_eq!(init_state(1, 3).len(), 1);
        let big = init_state(100_000, 9);
        let frac = big.count_ones() as f64 / 100_000.0;
        assert!((frac - 0.5).abs() < 0.01, "alive fraction {frac}");
    }

    #[test]
    fn evolve_deterministic() {
        let net = Network::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]);
        let rule = Rule::parse("B35-S234").unwrap();
        let a = evolve(&net, rule, 20, 77).unwrap();
        let b = evolve(&net, rule, 20, 77).unwrap();
        for t in 0..=20 {
            assert_eq!(a.state_at(t), b.state_at(t));
        }
    }

    #[test]
    fn node_order_sorts_by_degree_then_index() {
        // star: node 0 has degree 3, leaves degree 1
        let net = Network::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        let space = AutomatonSpace::new(&net, NodeOrder::Degree).unwrap();
        assert_eq!(space.node_order(), &[1, 2, 3, 0]);
    }

    #[test]
    fn row_and_column_views_agree() {
        let net = Network::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let m = evolve(&net, Rule::parse("B123-S45").unwrap(), 10, 5).unwrap();
        for i in 0..m.node_count() {
            let row = m.node_series(i);
            for t in 0..=m.t_steps() {
                assert_eq!(row.get(t), m.state_at(t).get(i));
            }
        }
    }
}
