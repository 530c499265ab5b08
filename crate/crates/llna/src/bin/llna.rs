//! Command-line front end: corpus fetching, preprocessing, network
//! construction, measurement, evolution, feature extraction, rule sweeps,
//! classification and report figures.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use sha2::{Digest, Sha256};

use llna::automaton::{derive_seed, evolve, Rule};
use llna::classify::{
    binomial_p_value, cross_validate, pca_project, DistanceMetric, LabeledSample,
};
use llna::corpus::{
    fetch_document, lemmatize, load_document, remove_stopwords, tokenize, CorpusManifest,
    DatasetRole, LemmaMode, LemmaTable, ManifestEntry, StopwordList, TokenSequence,
};
use llna::error::Error;
use llna::features::{
    assemble, feature_column_names, node_measurements, FeatureConfig, FeatureParts,
    SimilarityMeasure,
};
use llna::graph::{build_network, from_edge_list, giant_component, measure, to_edge_list, Network, NetworkMeasurements};
use llna::svg;
use llna::sweep::{accuracy_histogram, scores_to_csv, sweep, top_k, SweepConfig, SweepDocument};

#[derive(Parser)]
#[command(name = "llna", version, about = "Authorship attribution via network automata")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Options shared by every stage. Unset flags fall back to the config
/// file (flat key=value lines), then to built-in defaults.
#[derive(Args, Debug, Clone)]
struct Common {
    /// Flat key=value config file; flags override its entries
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Corpus manifest (JSON array of author/title/source/dataset_role)
    #[arg(long)]
    manifest: Option<PathBuf>,
    #[arg(long, value_name = "none|partial|full")]
    lemma_mode: Option<String>,
    /// Stopword list file (one lowercase word per line)
    #[arg(long)]
    stopwords: Option<PathBuf>,
    /// Lemma table TSV (surface, lemma, pos in {N,V})
    #[arg(long)]
    lemma_table: Option<PathBuf>,
    /// Evolution steps T
    #[arg(long)]
    t_steps: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Snapshot comparison lag for mu_H
    #[arg(long)]
    delta: Option<usize>,
    /// Node-series comparison lag for mu_V
    #[arg(long = "Delta")]
    big_delta: Option<usize>,
    #[arg(long, value_name = "jaccard3w|sokal_michener|sokal_sneath")]
    measure: Option<String>,
    /// Feature parts, e.g. "muS,muL,muH,muV"
    #[arg(long)]
    parts: Option<String>,
    #[arg(long)]
    knn_k: Option<usize>,
    #[arg(long)]
    k_folds: Option<usize>,
    #[arg(long)]
    repetitions: Option<usize>,
    #[arg(long, default_value = "out")]
    out: PathBuf,
    #[arg(long, default_value = "cache")]
    cache_dir: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Populate the document cache from the manifest
    Fetch {
        #[command(flatten)]
        common: Common,
    },
    /// Tokenize, filter and lemmatize every manifest document
    Preprocess {
        #[command(flatten)]
        common: Common,
    },
    /// Build word-adjacency edge lists from token files
    Build {
        #[command(flatten)]
        common: Common,
    },
    /// Compute topological measurements for every network
    Measure {
        #[command(flatten)]
        common: Common,
    },
    /// Evolve one rule over one document and export the state matrix
    Evolve {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        rule: String,
        /// Document id (author__title slug) from the manifest
        #[arg(long)]
        doc: String,
    },
    /// Extract feature vectors for one rule over the corpus
    Features {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        rule: String,
    },
    /// Exhaustively score all 262,144 rules on the rule-selection set
    Sweep {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1024)]
        chunk_size: usize,
        #[arg(long, default_value_t = 400)]
        top_k: usize,
        /// Allow sweeping over validation-role documents
        #[arg(long)]
        allow_validation: bool,
    },
    /// Cross-validate stored features (or the measurement baseline)
    Classify {
        #[command(flatten)]
        common: Common,
        /// Rule whose stored features to classify
        #[arg(long)]
        rule: Option<String>,
        /// Use the traditional-measurement baseline vector instead
        #[arg(long)]
        baseline: bool,
    },
    /// Aggregate classify summaries into comparison figures
    Report {
        #[command(flatten)]
        common: Common,
    },
}

/// Fully resolved run parameters.
#[derive(Debug, Clone, Serialize)]
struct RunConfig {
    manifest: PathBuf,
    lemma_mode: LemmaMode,
    stopwords: Option<PathBuf>,
    lemma_table: Option<PathBuf>,
    t_steps: usize,
    seed: u64,
    delta: usize,
    big_delta: usize,
    measure: SimilarityMeasure,
    parts: FeatureParts,
    knn_k: usize,
    k_folds: usize,
    repetitions: usize,
    out: PathBuf,
    cache_dir: PathBuf,
}

impl RunConfig {
    fn resolve(common: &Common) -> Result<Self, Error> {
        let file: HashMap<String, String> = match &common.config {
            Some(path) => parse_kv_config(path)?,
            None => HashMap::new(),
        };
        let get = |key: &str| file.get(key).cloned();
        let manifest = common
            .manifest
            .clone()
            .or_else(|| get("manifest").map(PathBuf::from))
            .ok_or_else(|| Error::Config("--manifest is required".into()))?;
        let parse_num = |s: String, key: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::Config(format!("bad numeric value for {key}: {s:?}")))
        };
        Ok(RunConfig {
            manifest,
            lemma_mode: common
                .lemma_mode
                .clone()
                .or_else(|| get("lemma_mode"))
                .unwrap_or_else(|| "none".into())
                .parse()?,
            stopwords: common
                .stopwords
                .clone()
                .or_else(|| get("stopwords").map(PathBuf::from)),
            lemma_table: common
                .lemma_table
                .clone()
                .or_else(|| get("lemma_table").map(PathBuf::from)),
            t_steps: match common.t_steps {
                Some(t) => t,
                None => match get("t_steps") {
                    Some(s) => parse_num(s, "t_steps")?,
                    None => 400,
                },
            },
            seed: match common.seed {
                Some(s) => s,
                None => match get("seed") {
                    Some(s) => s
                        .parse()
                        .map_err(|_| Error::Config(format!("bad seed {s:?}")))?,
                    None => 0,
                },
            },
            delta: match common.delta {
                Some(d) => d,
                None => match get("delta") {
                    Some(s) => parse_num(s, "delta")?,
                    None => 1,
                },
            },
            big_delta: match common.big_delta {
                Some(d) => d,
                None => match get("Delta") {
                    Some(s) => parse_num(s, "Delta")?,
                    None => 1,
                },
            },
            measure: common
                .measure
                .clone()
                .or_else(|| get("measure"))
                .unwrap_or_else(|| "sokal_michener".into())
                .parse()?,
            parts: FeatureParts::parse(
                &common
                    .parts
                    .clone()
                    .or_else(|| get("parts"))
                    .unwrap_or_else(|| "muS,muL,muH,muV".into()),
            )?,
            knn_k: match common.knn_k {
                Some(k) => k,
                None => match get("knn_k") {
                    Some(s) => parse_num(s, "knn_k")?,
                    None => 1,
                },
            },
            k_folds: match common.k_folds {
                Some(k) => k,
                None => match get("k_folds") {
                    Some(s) => parse_num(s, "k_folds")?,
                    None => 5,
                },
            },
            repetitions: match common.repetitions {
                Some(r) => r,
                None => match get("repetitions") {
                    Some(s) => parse_num(s, "repetitions")?,
                    None => 50,
                },
            },
            out: common.out.clone(),
            cache_dir: common.cache_dir.clone(),
        })
    }

    fn stopword_list(&self) -> Result<StopwordList, Error> {
        match &self.stopwords {
            Some(p) => StopwordList::load(p),
            None => Ok(StopwordList::default_english()),
        }
    }

    fn lemma_table_resolved(&self) -> Result<LemmaTable, Error> {
        match &self.lemma_table {
            Some(p) => LemmaTable::load(p),
            None => Ok(LemmaTable::default_english()),
        }
    }

    fn manifest_hash(&self, extra: &str) -> String {
        let json = serde_json::to_string(self).expect("config serializes");
        let digest = Sha256::digest(format!("{json}{extra}").as_bytes());
        digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
    }
}

fn parse_kv_config(path: &Path) -> Result<HashMap<String, String>, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut map = HashMap::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Error::Config(format!("bad config line {line:?}")))?;
        map.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(map)
}

fn write_file(path: &Path, content: &str) -> Result<(), Error> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent).map_err(|e| Error::io(parent, e))?;
    }
    fs::write(path, content).map_err(|e| Error::io(path, e))
}

/// Every stage records its resolved parameters next to its outputs.
fn write_run_manifest(dir: &Path, command: &str, cfg: &RunConfig, extra: serde_json::Value) -> Result<(), Error> {
    let manifest = serde_json::json!({
        "command": command,
        "config": cfg,
        "manifest_hash": cfg.manifest_hash(command),
        "extra": extra,
    });
    write_file(
        &dir.join("run_manifest.json"),
        &serde_json::to_string_pretty(&manifest).expect("manifest serializes"),
    )
}

fn token_path(cfg: &RunConfig, doc_id: &str) -> PathBuf {
    cfg.out
        .join("tokens")
        .join(cfg.lemma_mode.as_str())
        .join(format!("{doc_id}.txt"))
}

fn network_path(cfg: &RunConfig, doc_id: &str) -> PathBuf {
    cfg.out
        .join("networks")
        .join(cfg.lemma_mode.as_str())
        .join(format!("{doc_id}.edges"))
}

fn load_tokens(cfg: &RunConfig, entry: &ManifestEntry) -> Result<TokenSequence, Error> {
    let path = token_path(cfg, &entry.doc_id());
    if !path.exists() {
        return Err(Error::MissingStage {
            stage: "preprocess".into(),
            path,
        });
    }
    let text = fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
    Ok(TokenSequence {
        tokens: text.lines().map(|l| l.to_string()).collect(),
        provenance: entry.doc_id(),
        lemma_mode: cfg.lemma_mode,
    })
}

fn load_network(cfg: &RunConfig, entry: &ManifestEntry) -> Result<Network, Error> {
    let path = network_path(cfg, &entry.doc_id());
    if !path.exists() {
        return Err(Error::MissingStage {
            stage: "build".into(),
            path,
        });
    }
    let text = fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
    from_edge_list(&text)
}

fn cmd_fetch(cfg: &RunConfig) -> Result<(), Error> {
    let manifest = CorpusManifest::load(&cfg.manifest)?;
    let mut fetched = 0usize;
    for entry in &manifest.entries {
        if Path::new(&entry.source).exists() {
            continue;
        }
        let doc = fetch_document(&entry.source, &cfg.cache_dir)?;
        if !doc.boilerplate_stripped {
            eprintln!(
                "warning: no boilerplate markers in {} ({})",
                entry.source,
                entry.doc_id()
            );
        }
        fetched += 1;
        eprintln!("fetched {} ({} chars)", entry.source, doc.text.len());
    }
    write_run_manifest(
        &cfg.out.join("fetch"),
        "fetch",
        cfg,
        serde_json::json!({ "fetched": fetched }),
    )
}

fn cmd_preprocess(cfg: &RunConfig) -> Result<(), Error> {
    let manifest = CorpusManifest::load(&cfg.manifest)?;
    let stopwords = cfg.stopword_list()?;
    let table = cfg.lemma_table_resolved()?;
    for entry in &manifest.entries {
        let text = load_document(entry, &cfg.cache_dir)?;
        let seq = tokenize(&text, &entry.doc_id());
        let seq = remove_stopwords(&seq, &stopwords);
        let seq = lemmatize(&seq, &table, cfg.lemma_mode);
        write_file(&token_path(cfg, &entry.doc_id()), &(seq.tokens.join("\n") + "\n"))?;
        eprintln!("preprocessed {} ({} tokens)", entry.doc_id(), seq.tokens.len());
    }
    write_run_manifest(
        &cfg.out.join("tokens").join(cfg.lemma_mode.as_str()),
        "preprocess",
        cfg,
        serde_json::json!({ "documents": manifest.entries.len() }),
    )
}

fn cmd_build(cfg: &RunConfig) -> Result<(), Error> {
    let manifest = CorpusManifest::load(&cfg.manifest)?;
    for entry in &manifest.entries {
        let seq = load_tokens(cfg, entry)?;
        let net = giant_component(&build_network(&seq)?);
        write_file(&network_path(cfg, &entry.doc_id()), &to_edge_list(&net))?;
        eprintln!(
            "built {}: N={} E={}",
            entry.doc_id(),
            net.node_count(),
            net.edge_count()
        );
    }
    write_run_manifest(
        &cfg.out.join("networks").join(cfg.lemma_mode.as_str()),
        "build",
        cfg,
        serde_json::json!({ "documents": manifest.entries.len() }),
    )
}

fn cmd_measure(cfg: &RunConfig) -> Result<(), Error> {
    let manifest = CorpusManifest::load(&cfg.manifest)?;
    let dir = cfg.out.join("measure").join(cfg.lemma_mode.as_str());
    let mut csv = format!("doc_id,author,{}\n", NetworkMeasurements::CSV_HEADER);
    let mut by_author: HashMap<String, Vec<NetworkMeasurements>> = HashMap::new();
    for entry in &manifest.entries {
        let net = load_network(cfg, entry)?;
        let m = measure(&net)?;
        csv.push_str(&format!("{},{},{}\n", entry.doc_id(), entry.author, m.csv_row()));
        by_author.entry(entry.author.clone()).or_default().push(m);
        eprintln!("measured {}", entry.doc_id());
    }
    write_file(&dir.join("measurements.csv"), &csv)?;

    // per-author means, the shape behind the per-author comparison figure
    let mut authors: Vec<&String> = by_author.keys().collect();
    authors.sort();
    let mut avg_csv = String::from(
        "author,n,e,avg_degree,avg_clustering,avg_path_length,diameter,density,gamma,assortativity\n",
    );
    for author in authors {
        let ms = &by_author[author];
        let count = ms.len() as f64;
        let mean = |f: &dyn Fn(&NetworkMeasurements) -> f64| {
            ms.iter().map(|m| f(m)).sum::<f64>() / count
        };
        avg_csv.push_str(&format!(
            "{author},{:.1},{:.1},{:.4},{:.4},{:.4},{:.2},{:.6},{:.4},{:.4}\n",
            mean(&|m| m.n as f64),
            mean(&|m| m.e as f64),
            mean(&|m| m.avg_degree),
            mean(&|m| m.avg_clustering),
            mean(&|m| m.avg_path_length),
            mean(&|m| m.diameter as f64),
            mean(&|m| m.density),
            mean(&|m| m.gamma),
            mean(&|m| m.assortativity),
        ));
    }
    write_file(&dir.join("author_averages.csv"), &avg_csv)?;
    write_run_manifest(&dir, "measure", cfg, serde_json::json!({}))
}

fn cmd_evolve(cfg: &RunConfig, rule_text: &str, doc: &str) -> Result<(), Error> {
    let manifest = CorpusManifest::load(&cfg.manifest)?;
    let entry = manifest
        .entries
        .iter()
        .find(|e| e.doc_id() == doc)
        .ok_or_else(|| Error::Config(format!("doc id {doc:?} not in manifest")))?;
    let rule = Rule::parse(rule_text)?;
    let net = load_network(cfg, entry)?;
    let seed = derive_seed(cfg.seed, doc, rule.to_index());
    let matrix = evolve(&net, rule, cfg.t_steps, seed)?;
    let dir = cfg.out.join("evolve");
    write_file(&dir.join(format!("{doc}_{rule}.csv")), &matrix.to_csv())?;
    write_file(&dir.join(format!("{doc}_{rule}.pbm")), &matrix.to_pbm())?;
    write_run_manifest(
        &dir,
        "evolve",
        cfg,
        serde_json::json!({ "rule": rule.to_string(), "doc": doc, "evolution_seed": seed }),
    )
}

fn feature_dir(cfg: &RunConfig, rule: Rule) -> PathBuf {
    cfg.out
        .join("features")
        .join(cfg.lemma_mode.as_str())
        .join(rule.to_string())
}

fn extract_features(
    cfg: &RunConfig,
    entries: &[&ManifestEntry],
    rule: Rule,
) -> Result<(Vec<LabeledSample>, f64), Error> {
    // two passes: evolve + raw measurements first, so the mu_L histogram
    // range [0, l_max] is a dataset-level constant
    let mut matrices = Vec::new();
    let mut l_max = 0.0f64;
    for entry in entries {
        let net = load_network(cfg, entry)?;
        let seed = derive_seed(cfg.seed, &entry.doc_id(), rule.to_index());
        let matrix = evolve(&net, rule, cfg.t_steps, seed)?;
        let (_, complexities) = node_measurements(&matrix);
        l_max = complexities.iter().fold(l_max, |a, &b| a.max(b));
        matrices.push(matrix);
        eprintln!("evolved {} under {}", entry.doc_id(), rule);
    }
    let fc = FeatureConfig {
        parts: cfg.parts,
        delta: cfg.delta,
        big_delta: cfg.big_delta,
        measure: cfg.measure,
        l_max: if l_max > 0.0 { l_max } else { 1.0 },
    };
    let samples = entries
        .iter()
        .zip(&matrices)
        .map(|(entry, matrix)| {
            Ok(LabeledSample {
                features: assemble(matrix, &fc)?.values,
                author: entry.author.clone(),
                doc_id: entry.doc_id(),
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok((samples, fc.l_max))
}

fn samples_to_csv(samples: &[LabeledSample], parts: FeatureParts) -> String {
    let mut csv = format!("doc_id,author,{}\n", feature_column_names(parts).join(","));
    for s in samples {
        let cells: Vec<String> = s.features.iter().map(|v| format!("{v:.6}")).collect();
        csv.push_str(&format!("{},{},{}\n", s.doc_id, s.author, cells.join(",")));
    }
    csv
}

fn cmd_features(cfg: &RunConfig, rule_text: &str) -> Result<(), Error> {
    let manifest = CorpusManifest::load(&cfg.manifest)?;
    let rule = Rule::parse(rule_text)?;
    let entries: Vec<&ManifestEntry> = manifest.entries.iter().collect();
    let (samples, l_max) = extract_features(cfg, &entries, rule)?;
    let dir = feature_dir(cfg, rule);
    write_file(&dir.join("features.csv"), &samples_to_csv(&samples, cfg.parts))?;
    write_run_manifest(
        &dir,
        "features",
        cfg,
        serde_json::json!({ "rule": rule.to_string(), "l_max": l_max }),
    )
}

fn cmd_sweep(
    cfg: &RunConfig,
    chunk_size: usize,
    top: usize,
    allow_validation: bool,
) -> Result<(), Error> {
    let manifest = CorpusManifest::load(&cfg.manifest)?;
    let entries: Vec<&ManifestEntry> = if allow_validation {
        manifest.entries.iter().collect()
    } else {
        let selection = manifest.with_role(DatasetRole::RuleSelection);
        if selection.len() != manifest.entries.len() && !selection.is_empty() {
            eprintln!(
                "note: sweeping only the {} rule-selection documents",
                selection.len()
            );
        }
        if selection.is_empty() {
            return Err(Error::Config(
                "no rule-selection documents in manifest (use --allow-validation to override)"
                    .into(),
            ));
        }
        selection
    };
    let mut docs = Vec::new();
    for entry in &entries {
        let net = load_network(cfg, entry)?;
        docs.push(SweepDocument::new(&entry.doc_id(), &entry.author, &net)?);
    }
    let sweep_config = SweepConfig {
        t_steps: cfg.t_steps,
        parts: FeatureParts::parse("muS,muL").expect("static parts"),
        knn_k: cfg.knn_k,
        k_folds: cfg.k_folds,
        repetitions: cfg.repetitions,
        seed: cfg.seed,
        chunk_size,
        lemma_mode: cfg.lemma_mode,
    };
    let dir = cfg.out.join("sweep").join(cfg.lemma_mode.as_str());
    fs::create_dir_all(&dir).map_err(|e| Error::io(&dir, e))?;
    let checkpoint = dir.join("checkpoint.json");
    let progress = |done: usize, total: usize| {
        eprintln!("sweep progress: {done}/{total} rules");
    };
    let table = sweep(&docs, &sweep_config, Some(&checkpoint), None, Some(&progress))?
        .expect("unbounded sweep completes");
    write_file(&dir.join("scores.csv"), &scores_to_csv(&table))?;
    let best = top_k(&table, top.min(table.len()));
    write_file(&dir.join("top_rules.csv"), &scores_to_csv(&best))?;
    let hist = accuracy_histogram(&table, 50);
    write_file(
        &dir.join("accuracy_histogram.svg"),
        &svg::histogram_svg(&hist, 0.0, 1.0, "rule-space accuracy distribution", "mean accuracy"),
    )?;
    write_run_manifest(
        &dir,
        "sweep",
        cfg,
        serde_json::json!({
            "config_hash": sweep_config.config_hash(),
            "documents": docs.len(),
            "top_k": top,
        }),
    )
}

fn parse_feature_csv(path: &Path) -> Result<Vec<LabeledSample>, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut samples = Vec::new();
    for line in text.lines().skip(1) {
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let mut cols = line.split(',');
        let doc_id = cols.next().unwrap_or_default().to_string();
        let author = cols.next().unwrap_or_default().to_string();
        let features = cols
            .map(|c| {
                c.parse::<f64>()
                    .map_err(|_| Error::Config(format!("bad feature value {c:?} in {path:?}")))
            })
            .collect::<Result<Vec<f64>, Error>>()?;
        samples.push(LabeledSample {
            features,
            author,
            doc_id,
        });
    }
    Ok(samples)
}

/// Z-score each feature column across the sample set.
fn zscore(samples: &mut [LabeledSample]) {
    if samples.is_empty() {
        return;
    }
    let dim = samples[0].features.len();
    let n = samples.len() as f64;
    for j in 0..dim {
        let mean = samples.iter().map(|s| s.features[j]).sum::<f64>() / n;
        let var = samples
            .iter()
            .map(|s| (s.features[j] - mean).powi(2))
            .sum::<f64>()
            / n;
        let std = var.sqrt().max(1e-12);
        for s in samples.iter_mut() {
            s.features[j] = (s.features[j] - mean) / std;
        }
    }
}

fn cmd_classify(cfg: &RunConfig, rule_text: Option<&str>, baseline: bool) -> Result<(), Error> {
    let (mut samples, label) = if baseline {
        // traditional-measurement vector from the measure stage
        let path = cfg
            .out
            .join("measure")
            .join(cfg.lemma_mode.as_str())
            .join("measurements.csv");
        if !path.exists() {
            return Err(Error::MissingStage {
                stage: "measure".into(),
                path,
            });
        }
        let text = fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
        let mut samples = Vec::new();
        for line in text.lines().skip(1) {
            let cols: Vec<&str> = line.split(',').collect();
            if cols.len() < 13 {
                continue;
            }
            // columns: doc_id, author, n, e, <k>, <k2>, <k3>, <C>, <L>, D, d, gamma, Gamma
            let grab = |i: usize| cols[i].parse::<f64>().unwrap_or(0.0);
            samples.push(LabeledSample {
                features: vec![grab(4), grab(5), grab(6), grab(7), grab(8), grab(12)],
                author: cols[1].to_string(),
                doc_id: cols[0].to_string(),
            });
        }
        (samples, format!("baseline_{}", cfg.lemma_mode.as_str()))
    } else {
        let rule = Rule::parse(rule_text.ok_or_else(|| {
            Error::Config("classify needs --rule unless --baseline is set".into())
        })?)?;
        let path = feature_dir(cfg, rule).join("features.csv");
        if !path.exists() {
            return Err(Error::MissingStage {
                stage: "features".into(),
                path,
            });
        }
        (
            parse_feature_csv(&path)?,
            format!("{}_{}_{}", rule, cfg.lemma_mode.as_str(), cfg.parts.spec_string().replace(',', "-")),
        )
    };
    if baseline {
        zscore(&mut samples);
    }
    let cv = cross_validate(
        &samples,
        cfg.k_folds,
        cfg.knn_k,
        cfg.repetitions,
        cfg.seed,
        DistanceMetric::Euclidean,
    )?;
    let n_classes = cv.confusion.labels.len();
    let n_docs = samples.len();
    let n_correct = (cv.mean * n_docs as f64).round() as usize;
    let p_value = binomial_p_value(n_correct.min(n_docs), n_docs, 1.0 / n_classes as f64);

    let dir = cfg.out.join("classify").join(&label);
    let rule_col = rule_text.unwrap_or("baseline");
    let mut results = String::from("rule,lemma_mode,parts,mean,std,n_folds,repetitions,seed\n");
    results.push_str(&format!(
        "{},{},{},{:.6},{:.6},{},{},{}\n",
        rule_col,
        cfg.lemma_mode.as_str(),
        if baseline { "baseline".to_string() } else { cfg.parts.spec_string() },
        cv.mean,
        cv.std,
        cfg.k_folds,
        cfg.repetitions,
        cfg.seed
    ));
    write_file(&dir.join("cv_results.csv"), &results)?;
    write_file(&dir.join("confusion.csv"), &cv.confusion.to_csv())?;

    let vectors: Vec<Vec<f64>> = samples.iter().map(|s| s.features.clone()).collect();
    let (points, degenerate) = pca_project(&vectors)?;
    let authors: Vec<String> = samples.iter().map(|s| s.author.clone()).collect();
    write_file(
        &dir.join("pca.svg"),
        &svg::scatter_svg(&points, &authors, &format!("2-D projection: {label}")),
    )?;
    let summary = serde_json::json!({
        "label": label,
        "rule": rule_col,
        "lemma_mode": cfg.lemma_mode.as_str(),
        "baseline": baseline,
        "parts": cfg.parts.spec_string(),
        "mean_accuracy": cv.mean,
        "std": cv.std,
        "n_correct": n_correct,
        "n_total": n_docs,
        "p_value": p_value,
        "pca_degenerate": degenerate,
    });
    write_file(
        &dir.join("summary.json"),
        &serde_json::to_string_pretty(&summary).expect("summary serializes"),
    )?;
    write_run_manifest(&dir, "classify", cfg, summary)?;
    eprintln!("{label}: mean accuracy {:.4} (std {:.4}), p-value {p_value:.3e}", cv.mean, cv.std);
    Ok(())
}

fn cmd_report(cfg: &RunConfig) -> Result<(), Error> {
    let classify_dir = cfg.out.join("classify");
    if !classify_dir.exists() {
        return Err(Error::MissingStage {
            stage: "classify".into(),
            path: classify_dir,
        });
    }
    let mut rows: Vec<serde_json::Value> = Vec::new();
    let mut dirs: Vec<PathBuf> = fs::read_dir(&classify_dir)
        .map_err(|e| Error::io(&classify_dir, e))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .collect();
    dirs.sort();
    for dir in dirs {
        let summary = dir.join("summary.json");
        if summary.exists() {
            let text = fs::read_to_string(&summary).map_err(|e| Error::io(&summary, e))?;
            rows.push(serde_json::from_str(&text)?);
        }
    }
    if rows.is_empty() {
        return Err(Error::Config("no classify summaries found to report on".into()));
    }
    let dir = cfg.out.join("report");
    let mut csv = String::from("label,lemma_mode,baseline,mean_accuracy,std,p_value\n");
    for row in &rows {
        csv.push_str(&format!(
            "{},{},{},{:.6},{:.6},{:.3e}\n",
            row["label"].as_str().unwrap_or(""),
            row["lemma_mode"].as_str().unwrap_or(""),
            row["baseline"].as_bool().unwrap_or(false),
            row["mean_accuracy"].as_f64().unwrap_or(0.0),
            row["std"].as_f64().unwrap_or(0.0),
            row["p_value"].as_f64().unwrap_or(1.0),
        ));
    }
    write_file(&dir.join("comparison.csv"), &csv)?;

    // grouped bars: lemma modes on the x axis, automaton vs baseline series
    let modes = ["none", "partial", "full"];
    let pick = |mode: &str, baseline: bool| -> (f64, f64) {
        rows.iter()
            .filter(|r| {
                r["lemma_mode"].as_str() == Some(mode)
                    && r["baseline"].as_bool() == Some(baseline)
            })
            .map(|r| {
                (
                    r["mean_accuracy"].as_f64().unwrap_or(0.0),
                    r["std"].as_f64().unwrap_or(0.0),
                )
            })
            .fold((0.0, 0.0), |acc, v| if v.0 > acc.0 { v } else { acc })
    };
    let llna_row: Vec<(f64, f64)> = modes.iter().map(|m| pick(m, false)).collect();
    let base_row: Vec<(f64, f64)> = modes.iter().map(|m| pick(m, true)).collect();
    let figure = svg::grouped_bars_svg(
        &modes.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
        &["network automaton".to_string(), "traditional measurements".to_string()],
        &[
            llna_row.iter().map(|v| v.0).collect(),
            base_row.iter().map(|v| v.0).collect(),
        ],
        Some(&[
            llna_row.iter().map(|v| v.1).collect(),
            base_row.iter().map(|v| v.1).collect(),
        ]),
        "best accuracy by lemmatization mode",
    );
    write_file(&dir.join("comparison.svg"), &figure)?;
    write_run_manifest(&dir, "report", cfg, serde_json::json!({ "runs": rows.len() }))
}

fn run() -> Result<(), Error> {
    let cli = Cli::parse();
    match &cli.command {
        Command::Fetch { common } => cmd_fetch(&RunConfig::resolve(common)?),
        Command::Preprocess { common } => cmd_preprocess(&RunConfig::resolve(common)?),
        Command::Build { common } => cmd_build(&RunConfig::resolve(common)?),
        Command::Measure { common } => cmd_measure(&RunConfig::resolve(common)?),
        Command::Evolve { common, rule, doc } => cmd_evolve(&RunConfig::resolve(common)?, rule, doc),
        Command::Features { common, rule } => cmd_features(&RunConfig::resolve(common)?, rule),
        Command::Sweep {
            common,
            chunk_size,
            top_k,
            allow_validation,
        } => cmd_sweep(&RunConfig::resolve(common)?, *chunk_size, *top_k, *allow_validation),
        Command::Classify {
            common,
            rule,
            baseline,
        } => cmd_classify(&RunConfig::resolve(common)?, rule.as_deref(), *baseline),
        Command::Report { common } => cmd_report(&RunConfig::resolve(common)?),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            let code = match err {
                Error::Config(_) | Error::RuleParse { .. } | Error::Manifest(_) => 2,
                Error::MissingStage { .. } | Error::CheckpointMismatch { .. } => 3,
                _ => 4,
            };
            ExitCode::from(code)
        }
    }
}
