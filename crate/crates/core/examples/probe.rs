use std::time::Instant;

use qimg_core::encoders::threshold_encode;
use qimg_core::imgdata::Label;
use qimg_core::qnn::{build_model, train, CouplingKind, TrainConfig};
use rand::{Rng, SeedableRng};

fn main() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
    let m = 16;
    let model = build_model::<f64>(
        m,
        &[CouplingKind::Xx, CouplingKind::Zz, CouplingKind::Xx],
    );
    println!("params: {}", model.num_params());
    let n_train = 200;
    let inputs: Vec<_> = (0..n_train)
        .map(|_| {
            let bits: Vec<u8> = (0..m).map(|_| rng.gen_range(0..2)).collect();
            threshold_encode::<f64>(&bits).unwrap()
        })
        .collect();
    let labels: Vec<Label> = (0..n_train)
        .map(|i| if i % 2 == 0 { Label::Plus } else { Label::Minus })
        .collect();
    let config = TrainConfig {
        epochs: 2,
        batch_size: 32,
        seed: 3,
        ..TrainConfig::default()
    };
    let t0 = Instant::now();
    let report = train(&model, &inputs, &labels, &inputs[..50], &labels[..50], &config).unwrap();
    let dt = t0.elapsed().as_secs_f64();
    println!(
        "2 epochs on {} examples: {:.1}s ({:.1}s/epoch) -> est 20 epochs x 3 seeds = {:.0}s",
        n_train,
        dt,
        dt / 2.0,
        dt / 2.0 * 20.0 * 3.0
    );
    println!("losses: {:?}", report.epochs.iter().map(|e| e.loss).collect::<Vec<_>>());
}
