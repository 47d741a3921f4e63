use config_kit::{config_isomorphic, determinant_config, reye_config, AbstractConfig};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn relabel(c: &AbstractConfig, seed: u64) -> AbstractConfig {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pp: Vec<usize> = (0..c.points().len()).collect();
    let mut bp: Vec<usize> = (0..c.blocks().len()).collect();
    pp.shuffle(&mut rng);
    bp.shuffle(&mut rng);
    let mut inc = vec![Vec::new(); bp.len()];
    for (b, &nb) in bp.iter().enumerate() {
        inc[nb] = c.block(b).iter().map(|&p| pp[p]).collect();
    }
    AbstractConfig::new("shuffled", c.points().to_vec(), c.blocks().to_vec(), inc).unwrap()
}

/// Random configuration of the Reye type: 16 random triples with every point on
/// four of them (rejection sampling on a shuffled point-slot list).
fn random_12_4_16_3(seed: u64) -> AbstractConfig {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut slots: Vec<usize> = (0..12).flat_map(|p| [p; 4]).collect();
        slots.shuffle(&mut rng);
        let inc: Vec<Vec<usize>> = slots.chunks(3).map(<[usize]>::to_vec).collect();
        let labels = |n: usize| (0..n).map(|k| k.to_string()).collect::<Vec<_>>();
        if let Ok(c) = AbstractConfig::new("random", labels(12), labels(16), inc) {
            return c;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn relabelled_configs_are_isomorphic(seed in any::<u64>()) {
        for c in [reye_config(), determinant_config()] {
            let d = relabel(&c, seed);
            let iso = config_isomorphic(&c, &d).unwrap().expect("relabelling is an isomorphism");
            prop_assert!(iso.verify(&c, &d));
            let back = config_isomorphic(&d, &c).unwrap().expect("symmetric");
            prop_assert!(back.verify(&d, &c));
        }
    }

    #[test]
    fn random_regular_witnesses_check(seed in any::<u64>()) {
        let r = random_12_4_16_3(seed);
        if let Some(iso) = config_isomorphic(&r, &reye_config()).unwrap() {
            prop_assert!(iso.verify(&r, &reye_config()));
        }
    }
}

#[test]
fn random_instance_rejected() {
    let r = random_12_4_16_3(7);
    assert!(config_isomorphic(&r, &reye_config()).unwrap().is_none());
}
