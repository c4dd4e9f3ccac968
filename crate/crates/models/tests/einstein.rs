use gjms_exact::{int, rat, EvalPoint, Poly, Rational};
use gjms_models::{
    dimension, lambda, laplacian, sphere_eigenvalue_oracle, sum_round_check, sum_round_sides, EinsteinModel, Param,
};

fn n() -> Poly {
    Poly::var(dimension())
}

fn lam() -> Poly {
    Poly::var(lambda())
}

fn delta() -> Poly {
    Poly::var(laplacian())
}

fn c(value: Rational) -> Poly {
    Poly::constant(value)
}

#[test]
fn yamabe_operator_matches_the_scalar_curvature_form() {
    let model = EinsteinModel::formal();
    let j = (&lam() * &n()).scale(&rat(1, 2));
    let expected = &delta() - &(&(&n().scale(&rat(1, 2)) - &c(int(1))) * &j);
    assert_eq!(model.gjms(1), expected);
}

#[test]
fn yamabe_eigenvalue_on_the_four_sphere() {
    assert_eq!(EinsteinModel::sphere_eigenvalue(4, 1, 1).unwrap(), int(-6));
}

#[test]
fn sixth_order_operator_on_spheres_factors() {
    let model = EinsteinModel::new(Param::Formal, Param::Value(int(1)));
    let m = n().scale(&rat(1, 2));
    let factor = |a: i64, b: i64| &delta() - &(&(&m + &c(int(a))) * &(&m + &c(int(b))));
    let expected = &(&factor(0, -1) * &factor(1, -2)) * &factor(2, -3);
    assert_eq!(model.gjms(3), expected);
}

#[test]
fn fourth_order_building_block_by_hand() {
    let model = EinsteinModel::formal();
    let lhs = &model.gjms(2) - &(&model.gjms(1) * &model.gjms(1));
    assert_eq!(lhs, (&lam() * &model.gjms(1)).scale(&int(2)));
    assert_eq!(model.building_block(2), lhs);
}

#[test]
fn building_blocks_are_multiples_of_the_yamabe_operator() {
    let model = EinsteinModel::formal();
    for order in 1..=8 {
        assert_eq!(model.building_block(order), model.building_block_prediction(order), "N = {order}");
    }
}

#[test]
fn round_sphere_building_blocks() {
    let model = EinsteinModel::new(Param::Formal, Param::Value(int(1)));
    let mut factorials = int(1);
    for order in 1..=6u32 {
        factorials *= int(order as i64) * int(order.max(2) as i64 - 1);
        let expected = model.gjms(1).scale(&factorials);
        assert_eq!(model.building_block(order), expected, "N = {order}");
    }
}

#[test]
fn inversion_and_shifted_product_reproduce_the_gjms_operators() {
    let model = EinsteinModel::formal();
    let mut blocks = vec![Poly::zero()];
    for order in 1..=8 {
        blocks.push(model.building_block(order));
        let gjms = model.gjms(order);
        assert_eq!(model.inversion(&blocks, order), gjms, "N = {order}");
        assert_eq!(model.shifted_product(order), gjms, "N = {order}");
    }
}

#[test]
fn flat_degenerate_case() {
    let model = EinsteinModel::new(Param::Formal, Param::Value(int(0)));
    for order in 1..=6 {
        assert_eq!(model.gjms(order), delta().pow(order));
        if order >= 2 {
            assert!(model.building_block(order).is_zero());
        }
    }
}

#[test]
fn q_curvature_three_ways_agree() {
    let model = EinsteinModel::formal();
    for order in 1..=8 {
        let [by_definition, explicit, recursive] = model.q_three_ways(order).unwrap();
        assert_eq!(explicit, by_definition, "explicit, N = {order}");
        assert_eq!(recursive, by_definition, "recursive, N = {order}");
    }
}

#[test]
fn low_order_q_curvatures() {
    let model = EinsteinModel::formal();
    let [q2, ..] = model.q_three_ways(1).unwrap();
    assert_eq!(q2, (&lam() * &n()).scale(&rat(1, 2)));
    // Paneitz constant term: (n/2) J^2 - 2 |P|^2 with J = lambda n/2, |P|^2 = n lambda^2/4.
    let j = (&lam() * &n()).scale(&rat(1, 2));
    let norm = (&lam() * &lam()).scale(&rat(1, 4));
    let expected = &(&n().scale(&rat(1, 2)) * &(&j * &j)) - &(&n() * &norm).scale(&int(2));
    let [q4, ..] = model.q_three_ways(2).unwrap();
    assert_eq!(q4, expected);
    let data = model.constant_data(2);
    let example = &data.w(2).scale(&int(32)) + &(data.mu(1) * data.w(1)).scale(&int(4));
    assert_eq!(q4, example);
}

#[test]
fn four_sphere_spot_values() {
    let model = EinsteinModel::sphere(4);
    assert_eq!(model.q_three_ways(1).unwrap()[0], c(int(2)));
    assert_eq!(model.q_three_ways(2).unwrap(), [c(int(6)), c(int(6)), c(int(6))]);
}

#[test]
fn sphere_spectrum_matches_the_product_formula() {
    for n in 3..=8 {
        for degree in 0..=5 {
            for order in 1..=4 {
                let value = EinsteinModel::sphere_eigenvalue(n, degree, order).unwrap();
                assert_eq!(value, sphere_eigenvalue_oracle(n, degree, order), "n={n} l={degree} N={order}");
            }
        }
    }
}

#[test]
fn basic_recursion_and_weighted_inversion() {
    let data = EinsteinModel::formal().constant_data(8);
    for order in 1..=8 {
        let (lhs, rhs) = data.basic_recursion_sides(order);
        assert_eq!(lhs, rhs, "N = {order}");
    }
    for order in 1..=6 {
        let (lhs, rhs) = data.weighted_inversion_sides(order);
        assert_eq!(lhs, rhs, "N = {order}");
    }
}

#[test]
fn generating_function_identity() {
    let residual = EinsteinModel::formal().generating_function_residual(8);
    assert!(residual.is_zero(), "{residual}");
}

#[test]
fn round_sphere_potential() {
    // mu_2N = -(n/2)(n/2-1) N!(N-1)! on the sphere.
    let model = EinsteinModel::new(Param::Formal, Param::Value(int(1)));
    let m = n().scale(&rat(1, 2));
    let base = (&m * &(&m - &c(int(1)))).scale(&int(-1));
    let mut factorials = int(1);
    for order in 1..=8u32 {
        factorials *= int(order as i64) * int(order.max(2) as i64 - 1);
        assert_eq!(model.mu(order), base.scale(&factorials));
    }
}

#[test]
fn specialization_commutes_with_the_identities() {
    let model = EinsteinModel::new(Param::Value(rat(7, 3)), Param::Value(rat(-2, 5)));
    let formal = EinsteinModel::formal();
    let point = EvalPoint::new().with(dimension(), rat(7, 3)).with(lambda(), rat(-2, 5)).with(laplacian(), int(3));
    for order in 1..=4 {
        let value = formal.gjms(order).eval(&point).unwrap();
        let specialized = model.gjms(order).eval(&EvalPoint::new().with(laplacian(), int(3))).unwrap();
        assert_eq!(value, specialized);
    }
    let comparisons = model.verify(4, 4).unwrap();
    assert!(comparisons.iter().all(|c| c.holds));
}

#[test]
fn round_summation_formula() {
    for order in 1..=8 {
        let (lhs, rhs) = sum_round_sides(order);
        assert_eq!(lhs, rhs, "N = {order}");
        assert!(sum_round_check(order).holds);
    }
}

#[test]
fn verify_reports_only_passes() {
    let failures: Vec<_> = EinsteinModel::formal().verify(5, 6).unwrap().into_iter().filter(|c| !c.holds).collect();
    assert!(failures.is_empty(), "{failures:?}");
}
