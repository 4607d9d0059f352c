use exq_core::cayley::*;
use exq_core::hadamard::hadamard_rotation;
use exq_core::model::*;
use exq_core::numerics::{matmul, relative_error, Tensor};
use exq_core::quant::{fake_quantize, GroupAxis, SchemeFamily};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn one_layer() -> TinyLlmConfig {
    TinyLlmConfig {
        n_layers: 1,
        d_model: 32,
        n_heads: 4,
        n_kv_heads: 2,
        head_dim: 8,
        d_ffn: 64,
        vocab_size: 64,
        rope_theta: 10_000.0,
        tied_embeddings: true,
    }
}

/// One residual outlier channel and one FFN outlier channel.
fn single_outlier(seed: u64) -> (ModelGraph, Vec<u32>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spec = FixtureSpec {
        outlier_frac: 1e-3,
        ..FixtureSpec::default()
    };
    let m = fold_norm_weights(&generate_model(&one_layer(), &spec, &mut rng).unwrap());
    let toks = sample_tokens(&m, 4, 32, &mut rng).unwrap();
    (m, toks)
}

/// Quantization error of every linear listed, measured on `model` directly.
fn direct_objective(model: &ModelGraph, toks: &[u32], kinds: &[LinearKind], fam: SchemeFamily) -> f64 {
    let cap = capture_layer_inputs(model, toks, 4, 32).unwrap();
    let mut total = 0.0;
    for (li, layer) in model.layers.iter().enumerate() {
        for &k in kinds {
            let x = cap.input(li, k).unwrap();
            let w = layer.linear(k);
            let q = fake_quantize(w, fam.weight_scheme(), GroupAxis::Column).unwrap();
            let e = matmul(x, &w.sub(&q).unwrap()).unwrap().frobenius_norm();
            total += e * e / x.rows() as f64;
        }
    }
    total
}

#[test]
fn r1_objective_matches_merged_model() {
    let (m, toks) = single_outlier(1);
    let cap = capture_layer_inputs(&m, &toks, 4, 32).unwrap();
    for fam in [SchemeFamily::Int4, SchemeFamily::Mxfp4] {
        let obj = RotationObjective::new(r1_terms(&m, &cap).unwrap(), GridQuantizer(fam)).unwrap();
        let r = hadamard_rotation(32).unwrap();
        let merged = merge_r1(&m, &r).unwrap();
        let want = direct_objective(&merged, &toks, &LinearKind::ALL, fam);
        let got = obj.value(&r).unwrap();
        assert!((got - want).abs() <= 1e-9 * want, "{got} vs {want}");
    }
}

#[test]
fn r2_objective_matches_merged_model() {
    let (m, toks) = single_outlier(2);
    let m = merge_r1(&m, &hadamard_rotation(32).unwrap()).unwrap();
    let cap = capture_layer_inputs(&m, &toks, 4, 32).unwrap();
    let obj = RotationObjective::new(
        r2_terms(&m, &cap).unwrap(),
        GridQuantizer(SchemeFamily::Int4),
    )
    .unwrap();
    let r = hadamard_rotation(8).unwrap();
    let merged = merge_value_rotation(&m, &r).unwrap();
    let want = direct_objective(&merged, &toks, &[LinearKind::V, LinearKind::O], SchemeFamily::Int4);
    let got = obj.value(&r).unwrap();
    assert!((got - want).abs() <= 1e-9 * want, "{got} vs {want}");
    assert!(r2_terms(&expand_r2(&m, 12).unwrap(), &cap).is_err());
}

#[test]
fn optimized_r1_beats_hadamard_init() {
    for seed in 0..3 {
        let (m, toks) = single_outlier(10 + seed);
        let cap = capture_layer_inputs(&m, &toks, 4, 32).unwrap();
        let obj = RotationObjective::new(
            r1_terms(&m, &cap).unwrap(),
            GridQuantizer(SchemeFamily::Int4),
        )
        .unwrap();
        let init = hadamard_rotation(32).unwrap();
        let st = optimize(&obj, &init, CayleyOptions::default()).unwrap();
        let (start, end) = (st.objective_trace[0], *st.objective_trace.last().unwrap());
        assert!(end <= start);
        assert!(end < 0.99 * start, "seed {seed}: {start} -> {end}");
        assert!(st.max_gram_error <= 1e-5);

        // The optimized rotation still merges exactly.
        let base = m.forward_logits(&toks[..32]).unwrap();
        let rotated = merge_r1(&m, &st.r).unwrap();
        assert!(relative_error(&rotated.forward_logits(&toks[..32]).unwrap(), &base) < 1e-6);
    }
}

#[test]
fn identity_and_hadamard_inits_stay_orthogonal() {
    let (m, toks) = single_outlier(20);
    let cap = capture_layer_inputs(&m, &toks, 4, 32).unwrap();
    let obj = RotationObjective::new(
        r1_terms(&m, &cap).unwrap(),
        GridQuantizer(SchemeFamily::Mxfp4),
    )
    .unwrap();
    for init in [Tensor::identity(32), hadamard_rotation(32).unwrap()] {
        let st = optimize(&obj, &init, CayleyOptions::default()).unwrap();
        assert!(st.r.gram_error() <= 1e-5);
        assert!(st.objective_trace.windows(2).all(|w| w[1] <= w[0]));
    }
}
