//! Property checks for the tangent-chain algebra: the gap identity, middle
//! gap monotonicity and symmetry, gradient agreement with finite
//! differences, the replacement orderings, and similarity invariance.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crep_core::chains::{
    build_chain, chain_gaps_check, inner_tangent_circle, middle_gap, middle_gap_gradient,
    outer_tangent_circle, tangent_gap, AxisTangentCircle, Side,
};

#[test]
fn gap_identity_on_random_chains() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1000 {
        let l = 10f64.powf(rng.gen_range(-1.0..1.0));
        let r = 10f64.powf(rng.gen_range(-1.0..1.0));
        let anchor_t = rng.gen_range(-5.0..5.0);
        let anchor_r = 10f64.powf(rng.gen_range(-1.0..1.0));
        let side = if rng.gen_bool(0.5) { Side::Above } else { Side::Below };
        let quad = build_chain(l, r, anchor_t, anchor_r, side).unwrap();
        let gaps = chain_gaps_check(&quad, 1e-9).unwrap();
        assert!(
            (gaps.m * gaps.n - gaps.l * gaps.r).abs() <= 1e-9 * gaps.n * gaps.n,
            "identity violated for l={l} r={r}"
        );
    }
}

#[test]
fn middle_gap_strictly_monotone() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..10_000 {
        let l = 10f64.powf(rng.gen_range(-2.0..1.0));
        let l_big = l * (1.0 + rng.gen_range(1e-6..10.0));
        let r = 10f64.powf(rng.gen_range(-2.0..1.0));
        // r' may equal r; monotonicity in the first argument alone must
        // already be strict.
        let r_big = if rng.gen_bool(0.25) {
            r
        } else {
            r * (1.0 + rng.gen_range(0.0..10.0))
        };
        assert!(
            middle_gap(l, r).unwrap() < middle_gap(l_big, r_big).unwrap(),
            "monotonicity violated at l={l} l'={l_big} r={r} r'={r_big}"
        );
    }
}

#[test]
fn gradient_matches_central_differences_on_grid() {
    // 100x100 log-spaced grid over (0.1, 10)².
    let grid: Vec<f64> = (0..100)
        .map(|i| 10f64.powf(-1.0 + 2.0 * i as f64 / 99.0))
        .collect();
    let h = 1e-6;
    for &l in &grid {
        for &r in &grid {
            let (gl, gr) = middle_gap_gradient(l, r).unwrap();
            assert!(gl > 0.0 && gr > 0.0, "gradient not positive at ({l}, {r})");
            let fd_l = (middle_gap(l + h, r).unwrap() - middle_gap(l - h, r).unwrap()) / (2.0 * h);
            let fd_r = (middle_gap(l, r + h).unwrap() - middle_gap(l, r - h).unwrap()) / (2.0 * h);
            assert!(
                (gl - fd_l).abs() <= 1e-6 && (gr - fd_r).abs() <= 1e-6,
                "gradient mismatch at ({l}, {r}): ({gl}, {gr}) vs ({fd_l}, {fd_r})"
            );
        }
    }
}

/// Random valid one-sided input: circles 2 and 6 disjoint on one side with
/// r2 > r6, circle 3 tangent to 6 and strictly disjoint from 2, circle 7
/// tangent to 2 and strictly disjoint from 6, everything strictly ordered
/// t2 < t3 < t6 < t7.
fn random_top_side(
    rng: &mut ChaCha8Rng,
) -> (
    AxisTangentCircle,
    AxisTangentCircle,
    AxisTangentCircle,
    AxisTangentCircle,
) {
    loop {
        let r2 = 10f64.powf(rng.gen_range(-0.3..0.3));
        let r6 = r2 * rng.gen_range(0.1..0.8);
        let t2 = rng.gen_range(-2.0..2.0);
        let t6 = t2 + tangent_gap(r2, r6).unwrap() * (1.0 + rng.gen_range(0.1..1.0));
        let c2 = AxisTangentCircle::new(t2, r2, Side::Above);
        let c6 = AxisTangentCircle::new(t6, r6, Side::Above);

        // Circle 3: tangent to 6 from the left, strictly clear of 2.
        let mut c3 = None;
        for _ in 0..40 {
            let r3 = r6 * 10f64.powf(rng.gen_range(-2.0..0.0));
            let t3 = t6 - tangent_gap(r3, r6).unwrap();
            let gap = t3 - t2;
            if gap > 0.0 && gap * gap > 4.0 * r2 * r3 * (1.0 + 1e-6) {
                c3 = Some(AxisTangentCircle::new(t3, r3, Side::Above));
                break;
            }
        }
        // Circle 7: tangent to 2 from the right, strictly clear of 6.
        let mut c7 = None;
        for _ in 0..40 {
            let r7 = r6 * 10f64.powf(rng.gen_range(0.1..2.0));
            let t7 = t2 + tangent_gap(r2, r7).unwrap();
            let gap = t7 - t6;
            if gap > 0.0 && gap * gap > 4.0 * r6 * r7 * (1.0 + 1e-6) {
                c7 = Some(AxisTangentCircle::new(t7, r7, Side::Above));
                break;
            }
        }
        if let (Some(c3), Some(c7)) = (c3, c7) {
            return (c2, c3, c6, c7);
        }
    }
}

#[test]
fn replacement_orderings_hold_on_valid_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    for trial in 0..500 {
        let (c2, c3, c6, c7) = random_top_side(&mut rng);
        let inner = inner_tangent_circle(&c2, &c6).unwrap();
        assert!(
            inner.r > c3.r && inner.t < c3.t,
            "trial {trial}: inner replacement must grow and move left \
             (r3={} -> {}, t3={} -> {})",
            c3.r,
            inner.r,
            c3.t,
            inner.t
        );
        assert!(c2.t < inner.t, "trial {trial}: inner must stay right of c2");
        let outer = outer_tangent_circle(&c2, &c6).unwrap();
        assert!(
            outer.r < c7.r && c6.t < outer.t && outer.t < c7.t,
            "trial {trial}: outer replacement must shrink and land between \
             (r7={} -> {}, t: {} < {} < {})",
            c7.r,
            outer.r,
            c6.t,
            outer.t,
            c7.t
        );
    }
}

proptest! {
    #[test]
    fn middle_gap_is_symmetric(l in 1e-2f64..1e2, r in 1e-2f64..1e2) {
        let a = middle_gap(l, r).unwrap();
        let b = middle_gap(r, l).unwrap();
        prop_assert!((a - b).abs() <= 1e-12 * a.abs().max(b.abs()));
    }

    #[test]
    fn constructions_commute_with_similarity(
        l in 0.1f64..10.0,
        r in 0.1f64..10.0,
        anchor_r in 0.1f64..10.0,
        scale in 0.1f64..10.0,
        shift in -10.0f64..10.0,
    ) {
        // Scaling all lengths by `scale` and shifting abscissas by `shift`
        // commutes with build_chain.
        let base = build_chain(l, r, 0.0, anchor_r, Side::Above).unwrap();
        let moved = build_chain(scale * l, scale * r, shift, scale * anchor_r, Side::Above).unwrap();
        for i in 0..4 {
            let expect_t = scale * base[i].t + shift;
            let expect_r = scale * base[i].r;
            prop_assert!((moved[i].t - expect_t).abs() <= 1e-9 * (1.0 + expect_t.abs()));
            prop_assert!((moved[i].r - expect_r).abs() <= 1e-9 * (1.0 + expect_r.abs()));
        }

        // Same for the inner/outer constructions.
        let a = AxisTangentCircle::new(0.0, 2.0 * anchor_r, Side::Below);
        let b = AxisTangentCircle::new(l + r + 2.0, anchor_r, Side::Below);
        let a2 = AxisTangentCircle::new(shift, scale * a.r, Side::Below);
        let b2 = AxisTangentCircle::new(shift + scale * b.t, scale * b.r, Side::Below);
        let inner = inner_tangent_circle(&a, &b).unwrap();
        let inner2 = inner_tangent_circle(&a2, &b2).unwrap();
        prop_assert!((inner2.t - (shift + scale * inner.t)).abs() <= 1e-9 * (1.0 + inner2.t.abs()));
        prop_assert!((inner2.r - scale * inner.r).abs() <= 1e-9 * (1.0 + inner2.r.abs()));
        let outer = outer_tangent_circle(&a, &b).unwrap();
        let outer2 = outer_tangent_circle(&a2, &b2).unwrap();
        prop_assert!((outer2.t - (shift + scale * outer.t)).abs() <= 1e-9 * (1.0 + outer2.t.abs()));
        prop_assert!((outer2.r - scale * outer.r).abs() <= 1e-9 * (1.0 + outer2.r.abs()));
    }
}
