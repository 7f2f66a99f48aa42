use proptest::prelude::*;
use rf_core::{interpolate, velocity_target, NoiseSource, StateBatch};

#[test]
fn equal_seeds_produce_identical_million_draw_streams() {
    let mut a = NoiseSource::new(0xDEC0DE);
    let mut b = NoiseSource::new(0xDEC0DE);
    for i in 0..1_000_000u32 {
        let (x, y) = (a.next_normal(), b.next_normal());
        assert_eq!(x.to_bits(), y.to_bits(), "diverged at draw {i}");
    }
    assert_eq!(a.normal_draws(), 1_000_000);
}

#[test]
fn different_seeds_diverge() {
    let mut a = NoiseSource::new(1);
    let mut b = NoiseSource::new(2);
    let sa: Vec<f64> = a.normal_vec(64);
    let sb: Vec<f64> = b.normal_vec(64);
    assert_ne!(sa, sb);
}

fn batch_strategy() -> impl Strategy<Value = (StateBatch, StateBatch)> {
    (1usize..5, 1usize..4).prop_flat_map(|(b, d)| {
        let cell = -1e6f64..1e6f64;
        (
            prop::collection::vec(cell.clone(), b * d),
            prop::collection::vec(cell, b * d),
        )
            .prop_map(move |(v0, v1)| {
                let a0 = ndarray::Array2::from_shape_vec((b, d), v0).unwrap();
                let a1 = ndarray::Array2::from_shape_vec((b, d), v1).unwrap();
                (
                    StateBatch::new(a0).unwrap(),
                    StateBatch::new(a1).unwrap(),
                )
            })
    })
}

proptest! {
    #[test]
    fn interpolation_endpoints_are_identities((x0, x1) in batch_strategy()) {
        prop_assert_eq!(interpolate(&x0, &x1, 0.0).unwrap(), x0.clone());
        prop_assert_eq!(interpolate(&x0, &x1, 1.0).unwrap(), x1.clone());
    }

    #[test]
    fn velocity_target_is_antisymmetric((x0, x1) in batch_strategy()) {
        let fwd = velocity_target(&x0, &x1).unwrap();
        let bwd = velocity_target(&x1, &x0).unwrap();
        let sum = fwd.data() + bwd.data();
        prop_assert!(sum.iter().all(|&e| e == 0.0));
    }
}
