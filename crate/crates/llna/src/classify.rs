//! Supervised evaluation: kNN, stratified cross-validation, confusion
//! matrices, binomial significance and 2-D projection.
//!
//! ```
//! use llna::classify::{binomial_p_value, cross_validate, DistanceMetric, LabeledSample};
//!
//! let sample = |x: f64, author: &str, id: &str| LabeledSample {
//!     features: vec![x, x * 0.5],
//!     author: author.into(),
//!     doc_id: id.into(),
//! };
//! let mut samples = Vec::new();
//! for i in 0..5 {
//!     samples.push(sample(i as f64 * 0.01, "ann", &format!("a{i}")));
//!     samples.push(sample(10.0 + i as f64 * 0.01, "ben", &format!("b{i}")));
//! }
//! let cv = cross_validate(&samples, 5, 1, 10, 42, DistanceMetric::Euclidean)?;
//! assert!((cv.mean - 1.0).abs() < 1e-12); // the classes are well separated
//! assert_eq!(cv.confusion.total(), 100);  // 10 docs x 10 repetitions
//!
//! assert!(binomial_p_value(33, 40, 1.0 / 8.0) < 1e-15);
//! # Ok::<(), llna::Error>(())
//! ```

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// kNN distance metric.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceMetric {
    Euclidean,
    Manhattan,
}

impl std::str::FromStr for DistanceMetric {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "euclidean" => Ok(DistanceMetric::Euclidean),
            "manhattan" => Ok(DistanceMetric::Manhattan),
            other => Err(Error::Config(format!("unknown distance metric {other:?}"))),
        }
    }
}

impl DistanceMetric {
    pub fn distance(&self, x: &[f64], y: &[f64]) -> f64 {
        debug_assert_eq!(x.len(), y.len());
        match self {
            DistanceMetric::Euclidean => x
                .iter()
                .zip(y)
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
                .sqrt(),
            DistanceMetric::Manhattan => x.iter().zip(y).map(|(a, b)| (a - b).abs()).sum(),
        }
    }
}

/// One labeled feature vector.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LabeledSample {
    pub features: Vec<f64>,
    pub author: String,
    pub doc_id: String,
}

/// Predict the class of `query` by majority vote among the k nearest
/// training samples.
///
/// Distance ties break toward the lower document id; vote ties break
/// toward the class of the single nearest neighbor holding a tied vote.
pub fn knn_predict(
    train: &[LabeledSample],
    query: &[f64],
    k: usize,
    metric: DistanceMetric,
) -> Result<String> {
    if train.is_empty() {
        return Err(Error::Classify("empty training set".into()));
    }
    let k = k.min(train.len()).max(1);
    let mut ranked: Vec<(f64, &LabeledSample)> = train
        .iter()
        .map(|s| (metric.distance(&s.features, query), s))
        .collect();
    ranked.sort_by(|a, b| {
        a.0.partial_cmp(&b.0)
            .unwrap()
            .then_with(|| a.1.doc_id.cmp(&b.1.doc_id))
    });
    let nearest = &ranked[..k];
    let mut votes: HashMap<&str, usize> = HashMap::new();
    for (_, s) in nearest {
        *votes.entry(s.author.as_str()).or_default() += 1;
    }
    let best_count = *votes.values().max().unwrap();
    // tie on votes: the nearest neighbor among tied classes decides
    let winner = nearest
        .iter()
        .find(|(_, s)| votes[s.author.as_str()] == best_count)
        .map(|(_, s)| s.author.clone())
        .unwrap();
    Ok(winner)
}

/// Predicted-vs-true counts.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConfusionMatrix {
    pub labels: Vec<String>,
    /// counts[true_class][predicted_class]
    pub counts: Vec<Vec<usize>>,
}

impl ConfusionMatrix {
    pub fn new(labels: Vec<String>) -> Self {
        let n = labels.len();
        ConfusionMatrix {
            labels,
            counts: vec![vec![0; n]; n],
        }
    }

    fn index_of(&self, label: &str) -> usize {
        self.labels.iter().position(|l| l == label).unwrap()
    }

    pub fn record(&mut self, true_label: &str, predicted: &str) {
        let t = self.index_of(true_label);
        let p = self.index_of(predicted);
        self.counts[t][p] += 1;
    }

    pub fn total(&self) -> usize {
        self.counts.iter().flatten().sum()
    }

    pub fn trace(&self) -> usize {
        (0..self.labels.len()).map(|i| self.counts[i][i]).sum()
    }

    pub fn accuracy(&self) -> f64 {
        self.trace() as f64 / self.total() as f64
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("true\\predicted");
        for l in &self.labels {
            out.push(',');
            out.push_str(l);
        }
        out.push('\n');
        for (i, l) in self.labels.iter().enumerate() {
            out.push_str(l);
            for c in &self.counts[i] {
                out.push_str(&format!(",{c}"));
            }
            out.push('\n');
        }
        out
    }
}

/// Repeated stratified cross-validation outcome.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CVResult {
    pub fold_accuracies: Vec<f64>,
    pub mean: f64,
    pub std: f64,
    pub confusion: ConfusionMatrix,
}

/// Author-stratified k-fold assignments: within each class, a seeded
/// shuffle deals samples round-robin across folds, so a balanced corpus of
/// exactly k books per author puts one book per author in each fold.
fn stratified_folds(
    samples: &[LabeledSample],
    k_folds: usize,
    seed: u64,
) -> Result<Vec<Vec<usize>>> {
    let mut by_class: HashMap<&str, Vec<usize>> = HashMap::new();
    for (i, s) in samples.iter().enumerate() {
        by_class.entry(s.author.as_str()).or_default().push(i);
    }
    let mut folds = vec![Vec::new(); k_folds];
    let mut classes: Vec<&str> = by_class.keys().copied().collect();
    classes.sort();
    for class in classes {
        let mut idx = by_class[class].clone();
        if idx.len() < k_folds {
            return Err(Error::Stratification {
                class: class.to_string(),
                have: idx.len(),
                need: k_folds,
            });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ hash_label(class));
        idx.shuffle(&mut rng);
        for (j, sample) in idx.into_iter().enumerate() {
            folds[j % k_folds].push(sample);
        }
    }
    Ok(folds)
}

fn hash_label(label: &str) -> u64 {
    use sha2::{Digest, Sha256};
    let digest = Sha256::digest(label.as_bytes());
    u64::from_le_bytes(digest[..8].try_into().unwrap())
}

/// Repeated, author-stratified k-fold cross-validation with kNN.
pub fn cross_validate(
    samples: &[LabeledSample],
    k_folds: usize,
    knn_k: usize,
    repetitions: usize,
    seed: u64,
    metric: DistanceMetric,
) -> Result<CVResult> {
    if samples.is_empty() {
        return Err(Error::Classify("no samples".into()));
    }
    let mut labels: Vec<String> = samples.iter().map(|s| s.author.clone()).collect();
    labels.sort();
    labels.dedup();
    let mut confusion = ConfusionMatrix::new(labels);
    let mut fold_accuracies = Vec::with_capacity(k_folds * repetitions);
    for rep in 0..repetitions {
        let folds = stratified_folds(samples, k_folds, seed.wrapping_add(rep as u64))?;
        for fold in &folds {
            let train: Vec<LabeledSample> = samples
                .iter()
                .enumerate()
                .filter(|(i, _)| !fold.contains(i))
                .map(|(_, s)| s.clone())
                .collect();
            let mut correct = 0usize;
            for &i in fold {
                let predicted = knn_predict(&train, &samples[i].features, knn_k, metric)?;
                confusion.record(&samples[i].author, &predicted);
                if predicted == samples[i].author {
                    correct += 1;
                }
            }
            fold_accuracies.push(correct as f64 / fold.len() as f64);
        }
    }
    let mean = fold_accuracies.iter().sum::<f64>() / fold_accuracies.len() as f64;
    let var = fold_accuracies
        .iter()
        .map(|a| (a - mean) * (a - mean))
        .sum::<f64>()
        / fold_accuracies.len() as f64;
    Ok(CVResult {
        fold_accuracies,
        mean,
        std: var.sqrt(),
        confusion,
    })
}

/// Upper-tail binomial probability P(X >= n_correct) for X ~ Bin(n_total,
/// p_chance), computed in log space.
pub fn binomial_p_value(n_correct: usize, n_total: usize, p_chance: f64) -> f64 {
    assert!(n_correct <= n_total);
    assert!(p_chance > 0.0 && p_chance < 1.0);
    if n_correct == 0 {
        return 1.0;
    }
    // ln C(n, k) via a cumulative ln-factorial table
    let mut ln_fact = vec![0.0f64; n_total + 1];
    for i in 1..=n_total {
        ln_fact[i] = ln_fact[i - 1] + (i as f64).ln();
    }
    let lp = p_chance.ln();
    let lq = (1.0 - p_chance).ln();
    let mut total = 0.0f64;
    for k in n_correct..=n_total {
        let ln_term = ln_fact[n_total] - ln_fact[k] - ln_fact[n_total - k]
            + k as f64 * lp
            + (n_total - k) as f64 * lq;
        total += ln_term.exp();
    }
    total.min(1.0)
}

/// Mean-centered projection of the samples onto their top-2 principal
/// axes. Axis signs are fixed so each axis's largest-magnitude loading is
/// positive. Zero-variance data flags degenerate and maps to the origin.
pub fn pca_project(samples: &[Vec<f64>]) -> Result<(Vec<[f64; 2]>, bool)> {
    if samples.len() < 3 {
        return Err(Error::Classify("pca needs at least 3 samples".into()));
    }
    let dim = samples[0].len();
    if dim < 2 {
        return Err(Error::Classify("pca needs at least 2 dimensions".into()));
    }
    let n = samples.len();
    let mut mean = vec![0.0; dim];
    for s in samples {
        for (m, v) in mean.iter_mut().zip(s) {
            *m += v / n as f64;
        }
    }
    let centered = nalgebra::DMatrix::from_fn(n, dim, |i, j| samples[i][j] - mean[j]);
    let cov = centered.transpose() * &centered / (n as f64 - 1.0);
    let eig = nalgebra::SymmetricEigen::new(cov);
    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].partial_cmp(&eig.eigenvalues[a]).unwrap());
    if eig.eigenvalues[order[0]] <= 1e-12 {
        return Ok((vec![[0.0, 0.0]; n], true));
    }
    let mut axes = Vec::with_capacity(2);
    for &col in order.iter().take(2) {
        let mut axis: Vec<f64> = eig.eigenvectors.column(col).iter().copied().collect();
        let dominant = axis
            .iter()
            .cloned()
            .fold(0.0f64, |acc, v| if v.abs() > acc.abs() { v } else { acc });
        if dominant < 0.0 {
            for v in &mut axis {
                *v = -*v;
            }
        }
        axes.push(axis);
    }
    let points = samples
        .iter()
        .map(|s| {
            let mut p = [0.0; 2];
            for (j, axis) in axes.iter().enumerate() {
                p[j] = s
                    .iter()
                    .zip(axis)
                    .zip(&mean)
                    .map(|((v, a), m)| (v - m) * a)
                    .sum();
            }
            p
        })
        .collect();
    Ok((points, false))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(features: &[f64], author: &str, id: &str) -> LabeledSample {
        LabeledSample {
            features: features.to_vec(),
            author: author.into(),
            doc_id: id.into(),
        }
    }

    #[test]
    fn knn_exact_match_wins() {
        let train = vec![sample(&[0.0, 0.0], "a", "d0"), sample(&[5.0, 5.0], "b", "d1")];
        let p = knn_predict(&train, &[0.0, 0.0], 1, DistanceMetric::Euclidean).unwrap();
        assert_eq!(p, "a");
    }

    #[test]
    fn knn_nearer_point_wins() {
        let train = vec![sample(&[1.0], "a", "d0"), sample(&[2.0], "b", "d1")];
        let p = knn_predict(&train, &[0.0], 1, DistanceMetric::Euclidean).unwrap();
        assert_eq!(p, "a");
    }

    #[test]
    fn knn_majority_vote() {
        let train = vec![
            sample(&[1.0], "a", "d0"),
            sample(&[1.1], "a", "d1"),
            sample(&[1.2], "b", "d2"),
        ];
        let p = knn_predict(&train, &[1.0], 3, DistanceMetric::Euclidean).unwrap();
        assert_eq!(p, "a");
    }

    #[test]
    fn knn_distance_tie_breaks_by_doc_id() {
        let train = vec![sample(&[1.0], "b", "z9"), sample(&[-1.0], "a", "a0")];
        let p = knn_predict(&train, &[0.0], 1, DistanceMetric::Euclidean).unwrap();
        assert_eq!(p, "a");
    }

    #[test]
    fn knn_order_invariant() {
        let mut train = vec![
            sample(&[1.0], "a", "d0"),
            sample(&[2.0], "b", "d1"),
            sample(&[3.0], "c", "d2"),
        ];
        let p1 = knn_predict(&train, &[1.4], 1, DistanceMetric::Euclidean).unwrap();
        train.reverse();
        let p2 = knn_predict(&train, &[1.4], 1, DistanceMetric::Euclidean).unwrap();
        assert_eq!(p1, p2);
    }

    #[test]
    fn cv_balanced_folds_one_per_author() {
        // 8 authors x 5 books
        let mut samples = Vec::new();
        for a in 0..8 {
            for b in 0..5 {
                samples.push(sample(
                    &[a as f64 * 10.0 + b as f64 * 0.01],
                    &format!("author{a}"),
                    &format!("a{a}b{b}"),
                ));
            }
        }
        let folds = stratified_folds(&samples, 5, 42).unwrap();
        for fold in &folds {
            assert_eq!(fold.len(), 8);
            let mut authors: Vec<&str> =
                fold.iter().map(|&i| samples[i].author.as_str()).collect();
            authors.sort();
            authors.dedup();
            assert_eq!(authors.len(), 8);
        }
        // disjoint cover
        let mut all: Vec<usize> = folds.iter().flatten().copied().collect();
        all.sort();
        assert_eq!(all, (0..40).collect::<Vec<_>>());
    }

    #[test]
    fn cv_separable_clusters_are_perfect() {
        let mut samples = Vec::new();
        for a in 0..4 {
            for b in 0..5 {
                samples.push(sample(
                    &[a as f64 * 100.0, b as f64 * 0.1],
                    &format!("c{a}"),
                    &format!("c{a}s{b}"),
                ));
            }
        }
        let cv = cross_validate(&samples, 5, 1, 3, 7, DistanceMetric::Euclidean).unwrap();
        assert_eq!(cv.mean, 1.0);
        assert_eq!(cv.confusion.trace(), cv.confusion.total());
    }

    #[test]
    fn cv_shuffled_labels_at_chance() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let mut accs = Vec::new();
        for trial in 0..50 {
            let mut samples = Vec::new();
            let mut authors: Vec<String> = (0..8)
                .flat_map(|a| std::iter::repeat_n(format!("author{a}"), 5))
                .collect();
            authors.shuffle(&mut rng);
            for (i, author) in authors.into_iter().enumerate() {
                use rand::Rng;
                let features: Vec<f64> = (0..6).map(|_| rng.gen::<f64>()).collect();
                samples.push(sample(&features, &author, &format!("t{trial}d{i}")));
            }
            let cv = cross_validate(&samples, 5, 1, 1, trial, DistanceMetric::Euclidean).unwrap();
            accs.push(cv.mean);
        }
        let mean = accs.iter().sum::<f64>() / accs.len() as f64;
        assert!((mean - 0.125).abs() < 0.1, "chance-level mean {mean}");
    }

    #[test]
    fn cv_rejects_undersized_class() {
        let samples = vec![
            sample(&[0.0], "a", "d0"),
            sample(&[1.0], "a", "d1"),
            sample(&[2.0], "b", "d2"),
        ];
        assert!(matches!(
            cross_validate(&samples, 2, 1, 1, 0, DistanceMetric::Euclidean),
            Err(Error::Stratification { .. })
        ));
    }

    #[test]
    fn confusion_accuracy_identity() {
        let mut cm = ConfusionMatrix::new(vec!["a".into(), "b".into()]);
        cm.record("a", "a");
        cm.record("a", "b");
        cm.record("b", "b");
        cm.record("b", "b");
        assert_eq!(cm.trace(), 3);
        assert!((cm.accuracy() - 0.75).abs() < 1e-15);
    }

    #[test]
    fn p_value_reference_points() {
        assert!(binomial_p_value(33, 40, 0.125) <= 1.0e-15);
        assert_eq!(binomial_p_value(0, 40, 0.125), 1.0);
        let single = binomial_p_value(40, 40, 0.125);
        assert!((single - 0.125f64.powi(40)).abs() < 1e-50);
    }

    #[test]
    fn p_value_monotone_in_correct_count() {
        let mut prev = 1.1;
        for k in 0..=40 {
            let p = binomial_p_value(k, 40, 0.125);
            assert!(p <= prev + 1e-15, "k={k}");
            prev = p;
        }
    }

    #[test]
    fn pca_recovers_embedded_plane() {
        use rand::{Rng, SeedableRng};
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        // random 2-D points embedded in 140-D by a fixed orthogonal pair
        let mut u = vec![0.0; 140];
        let mut v = vec![0.0; 140];
        u[3] = 1.0;
        v[77] = 1.0;
        let coords: Vec<(f64, f64)> = (0..12).map(|_| (rng.gen::<f64>() * 4.0, rng.gen::<f64>() * 4.0)).collect();
        let samples: Vec<Vec<f64>> = coords
            .iter()
            .map(|&(x, y)| (0..140).map(|j| x * u[j] + y * v[j]).collect())
            .collect();
        let (points, degenerate) = pca_project(&samples).unwrap();
        assert!(!degenerate);
        for i in 0..samples.len() {
            for j in 0..i {
                let orig = ((coords[i].0 - coords[j].0).powi(2)
                    + (coords[i].1 - coords[j].1).powi(2))
                .sqrt();
                let proj = ((points[i][0] - points[j][0]).powi(2)
                    + (points[i][1] - points[j][1]).powi(2))
                .sqrt();
                assert!((orig - proj).abs() < 1e-9, "{orig} vs {proj}");
            }
        }
    }

    #[test]
    fn pca_duplicates_project_identically() {
        let base = vec![
            vec![1.0, 2.0, 3.0],
            vec![4.0, 0.0, 1.0],
            vec![2.0, 2.0, 2.0],
            vec![1.0, 2.0, 3.0],
        ];
        let (points, _) = pca_project(&base).unwrap();
        assert_eq!(points[0], points[3]);
    }

    #[test]
    fn pca_zero_variance_degenerate() {
        let samples = vec![vec![1.0, 1.0]; 5];
        let (points, degenerate) = pca_project(&samples).unwrap();
        assert!(degenerate);
        assert!(points.iter().all(|p| *p == [0.0, 0.0]));
    }

    #[test]
    fn pca_reconstruction_error_matches_trailing_eigenvalues() {
        use rand::{Rng, SeedableRng};
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let samples: Vec<Vec<f64>> = (0..10)
            .map(|_| (0..140).map(|_| rng.gen::<f64>()).collect())
            .collect();
        let n = samples.len();
        let dim = 140;
        let mut mean = vec![0.0; dim];
        for s in &samples {
            for (m, v) in mean.iter_mut().zip(s) {
                *m += v / n as f64;
            }
        }
        let centered = nalgebra::DMatrix::from_fn(n, dim, |i, j| samples[i][j] - mean[j]);
        let cov = centered.transpose() * &centered / (n as f64 - 1.0);
        let eig = nalgebra::SymmetricEigen::new(cov.clone());
        let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        vals.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let trailing: f64 = vals.iter().skip(2).filter(|v| **v > 0.0).sum();
        // total variance minus variance captured by the 2-D projection
        let (points, _) = pca_project(&samples).unwrap();
        let total_var = cov.trace();
        let pm = [
            points.iter().map(|p| p[0]).sum::<f64>() / n as f64,
            points.iter().map(|p| p[1]).sum::<f64>() / n as f64,
        ];
        let captured: f64 = (0..2)
            .map(|j| {
                points.iter().map(|p| (p[j] - pm[j]).powi(2)).sum::<f64>() / (n as f64 - 1.0)
            })
            .sum();
        assert!(
            ((total_var - captured) - trailing).abs() < 1e-9,
            "residual {} vs trailing {}",
            total_var - captured,
            trailing
        );
    }
}
