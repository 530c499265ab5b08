//! Contract tests for the `llna` binary: pipeline staging, exit codes,
//! and byte-identical reruns. Everything runs on a small local corpus, no
//! network involved.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const BIN: &str = env!("CARGO_BIN_EXE_llna");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn assert_ok(out: &Output, what: &str) {
    assert!(
        out.status.success(),
        "{what} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
}

/// Two invented authors with disjoint preferred vocabularies.
fn write_corpus(dir: &Path) -> String {
    let vocab_a: Vec<String> = (0..160).map(|i| format!("aword{i}th")).collect();
    let vocab_b: Vec<String> = (0..160).map(|i| format!("bword{i}th")).collect();
    let shared: Vec<String> = (0..60).map(|i| format!("common{i}th")).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut entries = Vec::new();
    for (author, vocab) in [("Ann Able", &vocab_a), ("Ben Baker", &vocab_b)] {
        for d in 0..4 {
            let mut words = Vec::new();
            for _ in 0..600 {
                let w = if rng.gen_range(0..10) < 7 {
                    &vocab[rng.gen_range(0..vocab.len())]
                } else {
                    &shared[rng.gen_range(0..shared.len())]
                };
                words.push(w.as_str());
            }
            let title = format!("Book {d}");
            let file = dir.join(format!("{author}-{d}.txt").replace(' ', "_"));
            fs::write(&file, words.join(" ")).unwrap();
            entries.push(serde_json::json!({
                "author": author,
                "title": title,
                "source": file.to_str().unwrap(),
                "dataset_role": "validation",
            }));
        }
    }
    serde_json::to_string_pretty(&entries).unwrap()
}

#[test]
fn pipeline_stages_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let manifest = dir.path().join("manifest.json");
    fs::write(&manifest, write_corpus(dir.path())).unwrap();
    let out_dir = dir.path().join("out");
    let m = manifest.to_str().unwrap();
    let o = out_dir.to_str().unwrap();

    assert_ok(&run(&["preprocess", "--manifest", m, "--out", o]), "preprocess");
    assert_ok(&run(&["build", "--manifest", m, "--out", o]), "build");
    assert_ok(&run(&["measure", "--manifest", m, "--out", o]), "measure");
    assert_ok(
        &run(&["evolve", "--manifest", m, "--out", o, "--rule", "B3-S23", "--doc", "ann-able__book-0", "--t-steps", "50"]),
        "evolve",
    );
    assert_ok(
        &run(&["features", "--manifest", m, "--out", o, "--rule", "B3-S23", "--t-steps", "50"]),
        "features",
    );
    assert_ok(
        &run(&["classify", "--manifest", m, "--out", o, "--rule", "B3-S23", "--k-folds", "4", "--repetitions", "3"]),
        "classify",
    );
    assert_ok(
        &run(&["classify", "--manifest", m, "--out", o, "--baseline", "--k-folds", "4", "--repetitions", "3"]),
        "classify --baseline",
    );
    assert_ok(&run(&["report", "--manifest", m, "--out", o]), "report");

    for path in [
        "tokens/none/ann-able__book-0.txt",
        "networks/none/ben-baker__book-3.edges",
        "measure/none/measurements.csv",
        "measure/none/author_averages.csv",
        "measure/none/run_manifest.json",
        "evolve/ann-able__book-0_B3-S23.csv",
        "evolve/ann-able__book-0_B3-S23.pbm",
        "features/none/B3-S23/features.csv",
        "classify/baseline_none/cv_results.csv",
        "classify/baseline_none/confusion.csv",
        "classify/baseline_none/pca.svg",
        "report/comparison.csv",
        "report/comparison.svg",
    ] {
        assert!(out_dir.join(path).exists(), "missing output {path}");
    }

    // reruns with identical inputs and seeds are byte-identical
    let features_csv = out_dir.join("features/none/B3-S23/features.csv");
    let measure_csv = out_dir.join("measure/none/measurements.csv");
    let before = (fs::read(&features_csv).unwrap(), fs::read(&measure_csv).unwrap());
    assert_ok(&run(&["measure", "--manifest", m, "--out", o]), "measure rerun");
    assert_ok(
        &run(&["features", "--manifest", m, "--out", o, "--rule", "B3-S23", "--t-steps", "50"]),
        "features rerun",
    );
    let after = (fs::read(&features_csv).unwrap(), fs::read(&measure_csv).unwrap());
    assert_eq!(before, after, "rerun outputs must be byte-identical");
}

#[test]
fn config_file_defaults_and_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let manifest = dir.path().join("manifest.json");
    fs::write(&manifest, write_corpus(dir.path())).unwrap();
    let config = dir.path().join("llna.conf");
    fs::write(
        &config,
        format!(
            "manifest = {}\nlemma_mode = none\nt_steps = 40\n",
            manifest.to_str().unwrap()
        ),
    )
    .unwrap();
    let out_dir = dir.path().join("out");
    let o = out_dir.to_str().unwrap();
    let c = config.to_str().unwrap();

    // manifest comes from the config file, not the flags
    assert_ok(&run(&["preprocess", "--config", c, "--out", o]), "preprocess via config");
    assert_ok(&run(&["build", "--config", c, "--out", o]), "build via config");
    // flag overrides the config's lemma_mode
    assert_ok(
        &run(&["preprocess", "--config", c, "--out", o, "--lemma-mode", "partial"]),
        "preprocess override",
    );
    assert!(out_dir.join("tokens/none").exists());
    assert!(out_dir.join("tokens/partial").exists());
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let manifest = dir.path().join("manifest.json");
    fs::write(&manifest, write_corpus(dir.path())).unwrap();
    let out_dir = dir.path().join("out");
    let m = manifest.to_str().unwrap();
    let o = out_dir.to_str().unwrap();

    // usage error: malformed rule
    let out = run(&["features", "--manifest", m, "--out", o, "--rule", "B9-S1"]);
    assert_eq!(out.status.code(), Some(2), "bad rule should exit 2");

    // usage error: missing manifest argument entirely
    let out = run(&["measure", "--out", o]);
    assert_eq!(out.status.code(), Some(2), "missing manifest should exit 2");

    // missing stage: classify before features
    let out = run(&["classify", "--manifest", m, "--out", o, "--rule", "B3-S23"]);
    assert_eq!(out.status.code(), Some(3), "missing stage should exit 3");

    // data error: sweep refuses a manifest with no rule-selection docs
    let out = run(&["preprocess", "--manifest", m, "--out", o]);
    assert_ok(&out, "preprocess");
    let out = run(&["build", "--manifest", m, "--out", o]);
    assert_ok(&out, "build");
    let out = run(&["sweep", "--manifest", m, "--out", o]);
    assert_eq!(
        out.status.code(),
        Some(2),
        "sweep over validation-only manifest should exit 2: {}",
        String::from_utf8_lossy(&out.stderr)
    );
}
