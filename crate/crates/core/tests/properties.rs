use std::cmp::Ordering;
use std::f64::consts::{LN_10, PI};

use proptest::prelude::*;

use universal_clock::capacity::{bekenstein_entropy_over_kb, compare, log2_capacity, LogCount};
use universal_clock::feasibility::planck_min_radius_closed_form;
use universal_clock::sweep::{run_sweep, run_sweep_sequential, SweepOutput, SweepParam, SweepSpec};
use universal_clock::ticks::{log2_tick_count, max_energy, ml_min_orthogonal_time, tick_interval};
use universal_clock::*;

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

/// Epoch shapes: (is_inflation, log10 duration factor, law parameter).
fn timeline_strategy() -> impl Strategy<Value = Timeline> {
    (
        -44.0..-10.0f64,
        -40.0..-20.0f64,
        prop::collection::vec((any::<bool>(), 0.1..4.0f64, 0.0..1.0f64), 1..5),
    )
        .prop_map(|(log_t0, log_k, shapes)| {
            let mut epochs = Vec::new();
            let mut t = 10f64.powf(log_t0);
            let mut radius = 10f64.powf(log_k);
            for (inflation, decades, p) in shapes {
                let t_end = t * 10f64.powf(decades);
                if inflation {
                    let efolds = 60.0 * p;
                    epochs.push(Epoch::inflation(t, t_end, efolds));
                    radius *= efolds.exp();
                } else {
                    let n = 2.0 * p;
                    let k = radius / t.powf(n);
                    epochs.push(Epoch::power_law(t, t_end, k, n));
                    radius = k * t_end.powf(n);
                }
                t = t_end;
            }
            Timeline::new(epochs, Some(10f64.powf(log_k))).expect("generated timeline is valid")
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn radius_non_decreasing(tl in timeline_strategy(), fracs in prop::collection::vec(0.0..1.0f64, 2..40)) {
        let (lo, hi) = tl.domain();
        let mut ts: Vec<f64> = fracs
            .iter()
            .map(|f| 10f64.powf(lo.log10() + f * (hi.log10() - lo.log10())).clamp(lo, hi))
            .collect();
        ts.sort_by(f64::total_cmp);
        let radii: Vec<f64> = ts.iter().map(|&t| tl.radius_at(t).unwrap()).collect();
        for w in radii.windows(2) {
            prop_assert!(w[1] >= w[0] * (1.0 - 1e-12), "{} < {}", w[1], w[0]);
        }
    }

    #[test]
    fn boundaries_continuous(tl in timeline_strategy()) {
        let epochs = tl.epochs();
        for pair in epochs.windows(2) {
            let t = pair[0].t_end;
            let left = tl.radius_at(t * (1.0 - 1e-13)).unwrap();
            let at = tl.radius_at(t).unwrap();
            let right = tl.radius_at(t * (1.0 + 1e-13)).unwrap();
            prop_assert!(rel(left, at) < 1e-9 && rel(right, at) < 1e-9);
        }
        prop_assert!(entropy_monotone(&tl, 200, &ConstantSet::codata()).unwrap().non_decreasing);
    }

    #[test]
    fn efold_additivity(log_l1 in -60.0..-20.0f64, a in 0.0..60.0f64, b in 0.0..60.0f64) {
        let l1 = 10f64.powf(log_l1);
        let direct = inflation_endpoint(l1, a + b);
        let chained = inflation_endpoint(inflation_endpoint(l1, a), b);
        prop_assert!(rel(chained, direct) < 1e-12);
    }

    #[test]
    fn radiation_law_quadruples_time_doubles_radius(log_k in -40.0..-20.0f64, log_t in -43.0..0.0f64) {
        let tl = Timeline::radiation(10f64.powf(log_k), 1e-44, 10.0).unwrap();
        let t = 10f64.powf(log_t);
        prop_assert!(rel(tl.radius_at(4.0 * t).unwrap(), 2.0 * tl.radius_at(t).unwrap()) < 1e-12);
    }

    #[test]
    fn capacity_quadratic_and_increasing(log_y in -30.0..60.0f64, bump in 1e-6..1.0f64) {
        let k = ConstantSet::codata();
        let l = k.l_p * 10f64.powf(log_y);
        let c1 = log2_capacity(l, &k).unwrap();
        let c2 = log2_capacity(2.0 * l, &k).unwrap();
        prop_assert!(rel(c2.log2(), 4.0 * c1.log2()) < 1e-12);
        prop_assert!(log2_capacity(l * (1.0 + bump), &k).unwrap() > c1);
    }

    #[test]
    fn log_domain_matches_direct_counts(y in 1e-3..17.8f64, log_t in -43.0..-30.0f64) {
        // pi y^2 < 1000 keeps 2^(pi y^2) inside f64.
        let k = ConstantSet::codata();
        let l = y * k.l_p;
        // Direct: S_BH / k_B = k_B A / (4 l_p^2) / k_B with A = 4 pi l^2.
        let area = 4.0 * PI * l * l;
        let states = 2f64.powf(k.k_b * area / (4.0 * k.l_p * k.l_p) / k.k_b);
        let cap = log2_capacity(l, &k).unwrap();
        prop_assert!(rel(cap.to_count(), states) < 1e-9);

        let t = 10f64.powf(log_t);
        let planck_ticks = t / k.t_p;
        let planck = log2_tick_count(TickModel::Planck, l, t, &k).unwrap();
        prop_assert!(rel(planck.to_count(), planck_ticks) < 1e-9);
        let ml_ticks = l * t / (PI * k.l_p * k.t_p);
        let ml = log2_tick_count(TickModel::MargolusLevitin, l, t, &k).unwrap();
        prop_assert!(rel(ml.to_count(), ml_ticks) < 1e-9);

        let r = margin_at_radius(l, t, TickModel::Planck, &k).unwrap();
        if (states - planck_ticks).abs() > 1e-6 * states.max(planck_ticks) {
            prop_assert_eq!(r.feasible, states >= planck_ticks);
        }
    }

    #[test]
    fn compare_is_total_order(a in -1e3..1e3f64, b in -1e3..1e3f64, c in -1e3..1e3f64, zero in 0usize..3) {
        let mut v = [a, b, c].map(|x| LogCount::from_log2(x).unwrap());
        v[zero] = LogCount::ZERO_COUNT;
        let [x, y, z] = v;
        prop_assert_eq!(compare(x, y), compare(y, x).reverse());
        prop_assert_eq!(compare(x, x), Ordering::Equal);
        if compare(x, y) != Ordering::Greater && compare(y, z) != Ordering::Greater {
            prop_assert!(compare(x, z) != Ordering::Greater);
        }
        prop_assert_eq!(compare(x, y), x.log2().partial_cmp(&y.log2()).unwrap());
    }

    #[test]
    fn ml_tick_interval_identities(log_l in -60.0..30.0f64) {
        for k in [ConstantSet::codata(), ConstantSet::paper_om()] {
            let l = 10f64.powf(log_l);
            let dt = tick_interval(TickModel::MargolusLevitin, l, &k);
            let reference = tick_interval(TickModel::MargolusLevitin, 1.0, &k);
            prop_assert!(rel(dt * l, reference) < 1e-12);
            prop_assert!(rel(dt, ml_min_orthogonal_time(max_energy(l, &k), &k)) < 1e-12);
            // CODATA l_p^2 and hbar G / c^3 differ by ~3e-8.
            prop_assert!(rel(dt * l, PI * k.l_p * k.l_p / k.c) < 1e-7);
        }
    }

    #[test]
    fn tick_count_monotonicity(log_l in -60.0..0.0f64, log_t in -43.0..18.0f64, step in 1e-3..3.0f64) {
        let k = ConstantSet::codata();
        let (l, t) = (10f64.powf(log_l), 10f64.powf(log_t));
        let later = t * 10f64.powf(step);
        let bigger = l * 10f64.powf(step);
        for model in [TickModel::Planck, TickModel::MargolusLevitin] {
            prop_assert!(log2_tick_count(model, l, later, &k).unwrap() > log2_tick_count(model, l, t, &k).unwrap());
        }
        prop_assert!(log2_tick_count(TickModel::MargolusLevitin, bigger, t, &k).unwrap()
            > log2_tick_count(TickModel::MargolusLevitin, l, t, &k).unwrap());
        prop_assert_eq!(log2_tick_count(TickModel::Planck, bigger, t, &k).unwrap(),
            log2_tick_count(TickModel::Planck, l, t, &k).unwrap());
    }

    #[test]
    fn ml_exceeds_planck_iff_above_pi_planck_lengths(factor in 1.001..1e6f64, log_t in -43.0..18.0f64) {
        let k = ConstantSet::codata();
        let t = 10f64.powf(log_t);
        let threshold = PI * k.l_p;
        for (l, above) in [(threshold * factor, true), (threshold / factor, false)] {
            let ml = log2_tick_count(TickModel::MargolusLevitin, l, t, &k).unwrap();
            let planck = log2_tick_count(TickModel::Planck, l, t, &k).unwrap();
            prop_assert_eq!(ml >= planck, above);
        }
    }

    #[test]
    fn closed_form_matches_bisection(log_t in -40.0..18.0f64) {
        let k = ConstantSet::codata();
        let t = 10f64.powf(log_t);
        let numeric = min_radius_for_feasibility(TickModel::Planck, t, &k).unwrap();
        let closed = planck_min_radius_closed_form(t, &k).unwrap();
        prop_assert!(!numeric.degenerate);
        prop_assert!(rel(numeric.radius, closed) < 1e-6);
    }

    #[test]
    fn min_efolds_sound(log_l1 in -70.0..-36.0f64, log_t2 in -42.0..-20.0f64, ml in any::<bool>()) {
        let k = ConstantSet::codata();
        let model = if ml { TickModel::MargolusLevitin } else { TickModel::Planck };
        let (l1, t2) = (10f64.powf(log_l1), 10f64.powf(log_t2));
        let c = min_efolds(l1, t2, model, &k).unwrap();
        prop_assert!(c > 0.0);
        prop_assert!(margin_at_radius(l1 * c.exp(), t2, model, &k).unwrap().feasible);
        prop_assert!(!margin_at_radius(l1 * (c - 1e-3).exp(), t2, model, &k).unwrap().feasible);
        prop_assert!(!margin_at_radius(l1 * (c - 1e-6).exp(), t2, model, &k).unwrap().feasible);
    }

    #[test]
    fn efolds_shift_by_ln10_per_decade(log_l1 in -70.0..-37.0f64, log_t2 in -42.0..-20.0f64, ml in any::<bool>()) {
        let k = ConstantSet::codata();
        let model = if ml { TickModel::MargolusLevitin } else { TickModel::Planck };
        let (l1, t2) = (10f64.powf(log_l1), 10f64.powf(log_t2));
        let a = min_efolds(l1, t2, model, &k).unwrap();
        let b = min_efolds(10.0 * l1, t2, model, &k).unwrap();
        prop_assume!(a > 0.0 && b > 0.0);
        prop_assert!((a - b - LN_10).abs() < 1e-9, "{} - {} = {}", a, b, a - b);
    }

    #[test]
    fn models_concordant_for_small_l1(log_l1 in -70.0..-40.0f64) {
        let k = ConstantSet::codata();
        let l1 = 10f64.powf(log_l1);
        let planck = min_efolds(l1, 1e-32, TickModel::Planck, &k).unwrap();
        let ml = min_efolds(l1, 1e-32, TickModel::MargolusLevitin, &k).unwrap();
        prop_assert!((planck - ml).abs() < 1.0);
    }

    #[test]
    fn margin_increasing_in_radius(log_y in -20.0..20.0f64, log_t in -43.0..18.0f64, step in 1e-3..2.0f64) {
        let k = ConstantSet::codata();
        let t = 10f64.powf(log_t);
        let l = k.l_p * 10f64.powf(log_y);
        let bigger = l * 10f64.powf(step);
        let m = |model, r| margin_at_radius(r, t, model, &k).unwrap().margin;
        // Capacity gains below ~1e-15 bits vanish against the tick term.
        prop_assert!(m(TickModel::Planck, bigger) >= m(TickModel::Planck, l));
        if log_y >= 0.0 {
            prop_assert!(m(TickModel::MargolusLevitin, bigger) > m(TickModel::MargolusLevitin, l));
        }
    }

    #[test]
    fn crossings_flip_sign(log_k in -34.0..-31.0f64) {
        let k = ConstantSet::codata();
        let tl = Timeline::radiation(10f64.powf(log_k), 1e-46, 1e6).unwrap();
        let crossings = find_crossings(&tl, TickModel::Planck, 1e-45, 1e5, &k).unwrap();
        prop_assert!(!crossings.is_empty());
        for c in crossings {
            let before = margin(&tl, TickModel::Planck, c.t_seconds * 10f64.powf(-1e-3), &k).unwrap();
            let after = margin(&tl, TickModel::Planck, c.t_seconds * 10f64.powf(1e-3), &k).unwrap();
            prop_assert!(before.feasible != after.feasible);
            prop_assert_eq!(after.feasible, c.direction == Direction::ToFeasible);
        }
    }

    #[test]
    fn parallel_sweep_matches_sequential(from in -60.0..-40.0f64, span in 0.5..20.0f64, points in 2usize..200) {
        let spec = SweepSpec {
            param: SweepParam::L1,
            output: SweepOutput::Efolds,
            from: 10f64.powf(from),
            to: 10f64.powf(from + span),
            points,
            l1: 1e-55,
            t2: 1e-32,
            efolds: 0.0,
            model: TickModel::Planck,
        };
        let k = ConstantSet::codata();
        prop_assert_eq!(run_sweep(&spec, &k).unwrap(), run_sweep_sequential(&spec, &k).unwrap());
    }
}

#[test]
fn bekenstein_entropy_matches_capacity() {
    let k = ConstantSet::paper_om();
    for l in [1e-55, 1e-35, 1e-20, 1.0] {
        assert_eq!(
            bekenstein_entropy_over_kb(l, &k),
            log2_capacity(l, &k).unwrap().log2()
        );
    }
}
