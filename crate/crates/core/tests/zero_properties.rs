use digamma_zeros::special::trigamma;
use digamma_zeros::zeros::{approx_psi_zero, find_psi_zero, find_psig_zero, find_zero, zero_table, zero_values};
use digamma_zeros::{ApproxForm, ZeroFamily};
use proptest::prelude::*;

#[test]
fn tables_are_contained_in_their_intervals() {
    for family in [ZeroFamily::Psi, ZeroFamily::PsiG] {
        for r in zero_table(family, 3000).unwrap() {
            let (lo, hi) = family.unit_interval(r.index);
            assert!(r.value > lo && r.value < hi, "{family} #{}: {} not in ({lo}, {hi})", r.index, r.value);
            assert!(r.bracket_lo <= r.value && r.value <= r.bracket_hi);
            assert!(r.residual <= 1e-11 * family.derivative(r.value).unwrap().abs().max(1.0));
        }
    }
}

#[test]
fn psi_zeros_are_simple() {
    for a in zero_values(ZeroFamily::Psi, 2000).unwrap() {
        assert!(trigamma(a).unwrap() > 0.0);
    }
}

#[test]
fn arctan_beats_hermite() {
    for k in [10, 100, 1000] {
        let exact = find_psi_zero(k).unwrap().value;
        let a = (approx_psi_zero(k, ApproxForm::Arctan).unwrap() - exact).abs();
        let h = (approx_psi_zero(k, ApproxForm::Hermite).unwrap() - exact).abs();
        assert!(a <= h, "k = {k}: arctan {a:e}, hermite {h:e}");
    }
}

#[test]
fn offsets_shrink() {
    let zs = zero_values(ZeroFamily::Psi, 2001).unwrap();
    let mut prev = f64::INFINITY;
    for (k, a) in zs.iter().enumerate().skip(5) {
        let d = a + k as f64;
        assert!(d > 0.0 && d < prev, "k = {k}: {d}");
        prev = d;
    }
}

#[test]
fn psig_zeros_sit_further_from_the_left_integer() {
    for k in [10u64, 100, 1000] {
        let alpha = find_psi_zero(k).unwrap().value + k as f64;
        let beta = find_psig_zero(k + 1).unwrap().value + k as f64;
        assert!(beta > alpha, "k = {k}: {beta} vs {alpha}");
    }
}

#[test]
fn table_matches_single_lookups() {
    let table = zero_table(ZeroFamily::PsiG, 64).unwrap();
    for r in &table {
        assert!(r.bit_eq(&find_zero(ZeroFamily::PsiG, r.index).unwrap()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn random_index_is_bracketed(k in 0u64..200_000, psig in any::<bool>()) {
        let family = if psig { ZeroFamily::PsiG } else { ZeroFamily::Psi };
        let r = find_zero(family, k).unwrap();
        let (lo, hi) = family.unit_interval(k);
        prop_assert!(r.value > lo && r.value < hi);
        prop_assert!(family.eval(r.bracket_lo).unwrap() * family.eval(r.bracket_hi).unwrap() < 0.0);
    }
}
