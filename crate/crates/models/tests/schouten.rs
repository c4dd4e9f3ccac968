use gjms_exact::{int, rat, Poly, Rational};
use gjms_models::{
    bar_series_checks, dimension, double_metric_checks, einstein_agreement, Comparison, ModelError, Param,
    SchoutenModel,
};
use gjms_series::{Matrix, TruncatedSeries};
use proptest::prelude::*;

fn n() -> Poly {
    Poly::var(dimension())
}

fn c(value: Rational) -> Poly {
    Poly::constant(value)
}

fn failures(list: Vec<Comparison>) -> Vec<Comparison> {
    list.into_iter().filter(|c| !c.holds).collect()
}

fn model() -> SchoutenModel {
    SchoutenModel::random_diagonal(10, 11)
}

#[test]
fn random_models_are_reproducible() {
    assert_eq!(SchoutenModel::random_diagonal(10, 3), SchoutenModel::random_diagonal(10, 3));
    assert_ne!(SchoutenModel::random_diagonal(10, 3), SchoutenModel::random_diagonal(10, 4));
    assert!(SchoutenModel::random_symmetric(6, 1).schouten().is_symmetric());
}

#[test]
fn rejects_bad_matrices() {
    let skew = Matrix::from_rows(vec![vec![int(0), int(1)], vec![int(2), int(0)]]);
    assert_eq!(SchoutenModel::new(skew, Param::Formal), Err(ModelError::NotSymmetric));
    assert_eq!(SchoutenModel::new(Matrix::zero(0), Param::Formal), Err(ModelError::EmptyMatrix));
}

#[test]
fn low_order_zeroth_order_terms() {
    let m = model();
    let p = m.power_sums(2);
    let w = m.density_series(2);
    // mu_2 = -(n/2-1) J = 4(n/2-1) w_2
    let shifted = &n().scale(&rat(1, 2)) - &c(int(1));
    assert_eq!(m.mu(1), shifted.scale(&-p[1].clone()));
    assert_eq!(m.mu(1), shifted.scale(&(w.coeff(1) * int(4))));
    // mu_4 = -p_1^2 - (n-4) p_2
    let expected = &c(-(&p[1] * &p[1])) - &(&n() - &c(int(4))).scale(&p[2]);
    assert_eq!(m.mu(2), expected);
}

#[test]
fn closed_form_matches_the_series_oracle() {
    let m = model();
    for order in 1..=8 {
        assert_eq!(m.mu(order), m.mu_from_series(order), "N = {order}");
    }
}

#[test]
fn basic_recursion_holds() {
    let data = model().constant_data(8);
    for order in 1..=8 {
        let (lhs, rhs) = data.basic_recursion_sides(order);
        assert_eq!(lhs, rhs, "N = {order}");
    }
}

#[test]
fn low_order_basic_recursion_by_hand() {
    let data = model().constant_data(2);
    // M_4(1) + 4 M_2(w_2) = 32 (n/2 - 2) w_4
    let lhs = data.mu(2) + &(data.mu(1) * data.w(1)).scale(&int(4));
    let rhs = (&(&n().scale(&rat(1, 2)) - &c(int(2))) * data.w(2)).scale(&int(32));
    assert_eq!(lhs, rhs);
}

#[test]
fn q_curvature_three_ways_with_the_explicit_displays() {
    let m = model();
    let data = m.constant_data(4);
    let q = data.q_recursive(4);
    for order in 1..=4 {
        let [by_definition, explicit, recursive] = m.q_three_ways(order).unwrap();
        assert_eq!(explicit, by_definition, "N = {order}");
        assert_eq!(recursive, by_definition, "N = {order}");
    }
    assert_eq!(data.q6_formula(), q[3]);
    let (lhs, rhs) = data.q6_recursion_sides(&q);
    assert_eq!(lhs, rhs);
    assert_eq!(data.q8_formula(), q[4]);
    let (lhs, rhs) = data.q8_recursion_sides(&q);
    assert_eq!(lhs, rhs);
}

#[test]
fn paneitz_constant_term() {
    let m = model();
    let p = m.power_sums(2);
    let expected = &n().scale(&(&p[1] * &p[1] / int(2))) - &c(&p[2] * int(2));
    assert_eq!(m.q_three_ways(2).unwrap()[0], expected);
}

#[test]
fn round_four_sphere_q4() {
    let sphere = SchoutenModel::scaled_identity(4, &int(1), Param::Value(int(4)));
    assert_eq!(sphere.q_three_ways(2).unwrap(), [c(int(6)), c(int(6)), c(int(6))]);
    assert_eq!(sphere.q_three_ways(1).unwrap()[0], c(int(2)));
}

#[test]
fn volume_and_density_relations() {
    assert!(failures(model().wv_relations()).is_empty());
}

#[test]
fn generating_function_vanishes() {
    assert!(model().generating_function_residual(8).is_zero());
}

#[test]
fn pseudo_sphere_potential() {
    for (q, p) in [(1usize, 1usize), (2, 3), (4, 2)] {
        let mut diag = vec![rat(1, 2); q];
        diag.extend(vec![rat(-1, 2); p]);
        let m = SchoutenModel::new(Matrix::diagonal(&diag), Param::Value(int((q + p) as i64))).unwrap();
        let order = 8;
        let w = m.density_series(order + 1);
        let ratio = w.radial_op(&int((q + p) as i64)).mul(&w.truncate(order).inverse().unwrap());
        // q/2(q/2-1)(1-r^2/4)^{-2} - p/2(p/2-1)(1+r^2/4)^{-2}
        let inverse_square = |sign: i64| {
            TruncatedSeries::new((0..=order as i64).map(|k| int(k + 1) * num_traits::pow(rat(sign, 4), k as usize)).collect())
                .unwrap()
        };
        let weight = |d: usize| rat(d as i64, 2) * (rat(d as i64, 2) - int(1));
        let expected = inverse_square(1).scale(&weight(q)).sub(&inverse_square(-1).scale(&weight(p)));
        assert_eq!(ratio, expected, "q={q} p={p}");
        assert!(m.generating_function_residual(6).is_zero());
    }
}

#[test]
fn einstein_specialization_agrees() {
    for dim in 2..=8 {
        for lambda in [int(1), rat(-3, 2)] {
            assert!(failures(einstein_agreement(dim, &lambda, 4).unwrap()).is_empty(), "d = {dim}");
        }
    }
}

#[test]
fn bar_series_identities() {
    let all = bar_series_checks(&model(), 8);
    let failed: Vec<_> = all.iter().filter(|c| !c.holds).map(|c| c.name.as_str()).collect();
    // Every identity holds except the recursion that drops the bulk
    // Laplacian term; that term does not vanish along r.
    assert!(failed.iter().all(|name| *name == "bar.mu_recursion"), "{failed:?}");
    assert_eq!(failed.len(), 6);
    let corrected = all.iter().find(|c| c.name == "bar.mu_recursion_with_laplacian").unwrap();
    assert!(corrected.holds);
}

#[test]
fn trace_only_recursion_misses_the_laplacian_term() {
    let m = model();
    let p = m.power_sums(3);
    let check = bar_series_checks(&m, 3).into_iter().find(|c| c.name == "bar.mu_recursion").unwrap();
    // The dropped term contributes 4 d^2/dr^2|_0 (Deltabar Jbar) = 24 p_3 - 8 p_1 p_2.
    assert_eq!(check.residual, (&p[3] * int(24) - &p[1] * &p[2] * int(8)).to_string());
}

#[test]
fn doubled_metric() {
    let m = SchoutenModel::random_symmetric(6, 5);
    assert!(failures(double_metric_checks(m.schouten(), 6)).is_empty());
}

#[test]
fn doubled_metric_low_coefficient() {
    let m = SchoutenModel::random_symmetric(3, 2);
    let checks = double_metric_checks(m.schouten(), 3);
    let c11 = checks.iter().find(|c| c.name == "double.coefficient_1_1").unwrap();
    assert!(c11.holds);
}

#[test]
fn verify_collects_every_model_identity() {
    let all = model().verify(6, 8).unwrap();
    assert!(failures(all.clone()).is_empty());
    assert!(all.iter().any(|c| c.name == "lcf.q8_recursion"));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn recursion_and_series_oracle_on_random_models(seed in 0u64..10_000, dim in 4usize..8) {
        let m = SchoutenModel::random_symmetric(dim, seed);
        let data = m.constant_data(5);
        for order in 1..=5 {
            let (lhs, rhs) = data.basic_recursion_sides(order);
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(m.mu(order), m.mu_from_series(order));
        }
    }

    #[test]
    fn q_routes_agree_at_numeric_dimension(seed in 0u64..10_000, n_value in 3i64..12) {
        let m = SchoutenModel::random_diagonal(5, seed).with_n(Param::Value(int(n_value)));
        for order in 1..=3 {
            let [a, b, c] = m.q_three_ways(order).unwrap();
            prop_assert_eq!(&a, &b);
            prop_assert_eq!(&a, &c);
        }
    }
}
