//! Registry-wide derivative validation.

use hquad_core::functions::{lookup, registry, validate_derivatives, KINK_MARGIN};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// 32 random points inside the intersection of the function's domain and a
/// practical test window, clear of declared kinks.
fn interior_points(f: &hquad_core::FunctionSpec, rng: &mut ChaCha8Rng) -> Vec<f64> {
    let (dlo, dhi) = f.domain();
    let lo = dlo.max(-0.9);
    let hi = dhi.min(2.0);
    let mut points = Vec::with_capacity(32);
    while points.len() < 32 {
        let x = rng.random_range(lo..hi);
        if f.kinks().iter().all(|&k| (x - k).abs() > 2.0 * KINK_MARGIN) {
            points.push(x);
        }
    }
    points
}

#[test]
fn every_entry_passes_derivative_validation() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for f in registry() {
        let points = interior_points(&f, &mut rng);
        let top = f.max_smooth_order().unwrap_or(6).min(6);
        for order in 1..=top {
            let check = validate_derivatives(&f, order, &points)
                .unwrap_or_else(|e| panic!("{} order {order}: {e}", f.name()));
            assert_eq!(check.points_checked, 32);
        }
    }
}

#[test]
fn log_rejects_its_singularity() {
    let f = lookup("log1p").unwrap();
    assert!(f.value(-1.0).is_err());
    assert!(f.value(-2.0).is_err());
    assert!(f.derivative_value(1, -1.0).is_err());
}

#[test]
fn kinks_are_inside_the_domain() {
    for f in registry() {
        let (lo, hi) = f.domain();
        for &k in f.kinks() {
            assert!(k > lo && k < hi, "{}: kink {k} outside domain", f.name());
        }
    }
}

#[test]
fn aliases_are_unique() {
    let mut aliases: Vec<&str> = registry().iter().map(|f| f.alias()).collect();
    let before = aliases.len();
    aliases.sort_unstable();
    aliases.dedup();
    assert_eq!(aliases.len(), before);
}
