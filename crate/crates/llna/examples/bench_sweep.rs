use llna::sweep::{score_rule, SweepConfig, SweepDocument};
use llna::features::FeatureParts;
use llna::corpus::LemmaMode;
use llna::synth::{erdos_renyi, barabasi_albert};
use llna::graph::giant_component;
use std::time::Instant;

fn main() {
    let mut docs = Vec::new();
    for i in 0..5u64 {
        let net = giant_component(&erdos_renyi(500, 4.0, 300 + i));
        docs.push(SweepDocument::new(&format!("er{i}"), "erdos-renyi", &net).unwrap());
        let net = giant_component(&barabasi_albert(500, 2, 400 + i));
        docs.push(SweepDocument::new(&format!("ba{i}"), "barabasi-albert", &net).unwrap());
    }
    let config = SweepConfig {
        t_steps: 100,
        parts: FeatureParts::parse("muS,muL").unwrap(),
        knn_k: 1, k_folds: 5, repetitions: 1, seed: 42,
        chunk_size: 4096, lemma_mode: LemmaMode::None,
    };
    let t0 = Instant::now();
    let n = 2000u32;
    for idx in 0..n {
        // spread over the space to sample varied rule behavior
        score_rule(&docs, idx.wrapping_mul(131) % (1<<18), &config);
    }
    let dt = t0.elapsed();
    println!("{} rules in {:?} -> {:.3} ms/rule, full sweep est {:.1} min",
        n, dt, dt.as_secs_f64()*1000.0/n as f64, dt.as_secs_f64()/60.0*(262144.0/n as f64));
}
