mod common;

use darkledger::decoherence::{decoherence_time, scattering_constant};
use darkledger::geometry::{observable_volume, overlap_volume, redundancy_fraction, ObserverConfig};
use darkledger::ledger::{
    bit_budget, encoding_density, solve_voxel_dimension, total_encoding_energy, voxel_count, EncodingSpec,
};
use darkledger::sweep::{planck_ratio, run_sweep, SweepGrid};
use darkledger::{default_constants, default_cosmology, XScalar};
use proptest::prelude::*;

use common::{fit_line, rel_from_dex};

fn pow10(e: f64) -> XScalar {
    XScalar::pow10(e).unwrap()
}

proptest! {
    #[test]
    fn scattering_slopes(log_a in -12.0f64..10.0, log_t in -2.0f64..4.0, da in 0.01f64..3.0, dt in 0.01f64..3.0) {
        let (a, t) = (10f64.powf(log_a), 10f64.powf(log_t));
        let (a1, t1) = (10f64.powf(log_a + da), 10f64.powf(log_t + dt));
        let base = scattering_constant(a, t).unwrap();
        let bigger_a = scattering_constant(a1, t).unwrap();
        let hotter = scattering_constant(a, t1).unwrap();
        prop_assert!((bigger_a.ratio_dex(base).unwrap() - 6.0 * (a1.log10() - a.log10())).abs() < 1e-12);
        prop_assert!((hotter.ratio_dex(base).unwrap() - 9.0 * (t1.log10() - t.log10())).abs() < 1e-12);
        prop_assert!(bigger_a > base && hotter > base);
    }

    #[test]
    fn tau_l_x2_is_one(log_a in -12.0f64..10.0, log_t in -2.0f64..4.0, log_x in -10.0f64..10.0) {
        let l = scattering_constant(10f64.powf(log_a), 10f64.powf(log_t)).unwrap();
        let x = 10f64.powf(log_x);
        let tau = decoherence_time(l, x).unwrap();
        let product = tau * l * XScalar::from_f64(x).unwrap().powi(2).unwrap();
        prop_assert!(product.log10_mag().abs() < 1e-12);
        prop_assert!(decoherence_time(l, 2.0 * x).unwrap() < tau);
        prop_assert!(decoherence_time(l * pow10(0.5), x).unwrap() < tau);
    }

    #[test]
    fn density_is_volume_independent(
        log_v in -30.0f64..240.0, log_n in 0.0f64..60.0, log_lv in -35.0f64..7.0, log_t in -1.0f64..4.0
    ) {
        let k = default_constants();
        let (volume, n_o) = (pow10(log_v), pow10(log_n));
        let (lv, t) = (10f64.powf(log_lv), 10f64.powf(log_t));
        let bits = bit_budget(n_o, voxel_count(volume, lv).unwrap()).unwrap();
        let c = k.light_speed();
        let via_chain = total_encoding_energy(bits, t, &k).unwrap().checked_div(volume * c * c).unwrap();
        let direct = encoding_density(&EncodingSpec::new(n_o, lv, t).unwrap(), &k).unwrap();
        prop_assert!(rel_from_dex(via_chain.ratio_dex(direct).unwrap()) < 1e-12);
    }

    #[test]
    fn density_power_law(log_n in 0.0f64..60.0, log_lv in -35.0f64..7.0, dn in 0.1f64..20.0, dl in 0.1f64..20.0) {
        let k = default_constants();
        let rho = |ln: f64, ll: f64| {
            encoding_density(&EncodingSpec::new(pow10(ln), 10f64.powf(ll), 2.7).unwrap(), &k).unwrap()
        };
        let base = rho(log_n, log_lv);
        let more = rho(log_n + dn, log_lv);
        prop_assert!((more.ratio_dex(base).unwrap() - dn).abs() < 1e-12);
        let l0 = 10f64.powf(log_lv);
        let l1 = 10f64.powf(log_lv + dl);
        let bigger = rho(log_n, log_lv + dl);
        prop_assert!((bigger.ratio_dex(base).unwrap() + 3.0 * (l1.log10() - l0.log10())).abs() < 1e-12);
    }

    #[test]
    fn solve_inverts_density(log_n in 0.0f64..60.0, log_lv in -34.0f64..30.0, log_t in -1.0f64..4.0) {
        let k = default_constants();
        let (lv, t) = (10f64.powf(log_lv), 10f64.powf(log_t));
        let n_o = pow10(log_n);
        let rho = encoding_density(&EncodingSpec::new(n_o, lv, t).unwrap(), &k).unwrap();
        let solved = solve_voxel_dimension(n_o, t, rho, &k).unwrap();
        prop_assert!((solved / lv - 1.0).abs() < 1e-9);
    }

    #[test]
    fn overlap_decreases_with_offset(log_r in -5.0f64..27.0, u1 in 0.0f64..2.0, u2 in 0.0f64..2.0) {
        prop_assume!((u1 - u2).abs() > 1e-9);
        let r = 10f64.powf(log_r);
        let (near, far) = if u1 < u2 { (u1, u2) } else { (u2, u1) };
        let v_near = overlap_volume(&ObserverConfig::new(r, near * r).unwrap()).unwrap();
        let v_far = overlap_volume(&ObserverConfig::new(r, far * r).unwrap()).unwrap();
        prop_assert!(v_far < v_near);
        let f = redundancy_fraction(&ObserverConfig::new(r, far * r).unwrap()).unwrap();
        prop_assert!((0.0..=1.0).contains(&f));
        prop_assert!(v_near <= observable_volume(r).unwrap());
    }

    #[test]
    fn planck_ratio_antisymmetry(log_l in -40.0f64..40.0) {
        let k = default_constants();
        let l = 10f64.powf(log_l);
        let lp = XScalar::from_f64(k.planck_length_lp).unwrap();
        let back = 3.0 * lp.ratio_dex(XScalar::from_f64(l).unwrap()).unwrap();
        prop_assert_eq!(planck_ratio(l, &k).unwrap() + back, 0.0);
    }
}

#[test]
fn overlap_is_continuous_near_contact() {
    let r = 4.40e26;
    let just_inside = overlap_volume(&ObserverConfig::new(r, 2.0 * r * (1.0 - 1e-6)).unwrap()).unwrap();
    assert!(just_inside.to_f64() / observable_volume(r).unwrap().to_f64() < 1e-11);
    let almost_coincident = redundancy_fraction(&ObserverConfig::new(r, r * 1e-9).unwrap()).unwrap();
    assert!((1.0 - almost_coincident) < 1e-9);
}

#[test]
fn sweep_is_deterministic_and_follows_the_power_law() {
    let grid = SweepGrid::reproduction_default();
    let (cosmology, k) = (default_cosmology(), default_constants());
    let first = run_sweep(&grid, &cosmology, &k).unwrap();
    for _ in 0..3 {
        assert_eq!(run_sweep(&grid, &cosmology, &k).unwrap(), first);
    }
    for &lv in &grid.lv_values {
        let points: Vec<(f64, f64)> = first
            .rows
            .iter()
            .filter(|r| r.lv_m == lv)
            .map(|r| (r.log10_no, r.rho.log10_mag()))
            .collect();
        let (slope, residual) = fit_line(&points);
        assert!((slope - 1.0).abs() < 1e-12 && residual < 1e-12, "lv={lv}: {slope} {residual}");
    }
}
