use gjms_exact::{binomial, int, rat, Poly, Rational, Ring};
use gjms_series::{det_series, BiSeries, Matrix, SeriesError, TruncatedSeries};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn scalar(coeffs: &[Rational], order: usize) -> TruncatedSeries<Rational> {
    TruncatedSeries::from_prefix(&Rational::one(), coeffs, order)
}

/// `(1 + c r^2)^e` for a nonnegative integer exponent.
fn binomial_power(c: &Rational, e: u64, order: usize) -> TruncatedSeries<Rational> {
    let coeffs: Vec<Rational> = (0..=order as u64)
        .map(|k| Rational::from_integer(binomial(e, k)) * num_traits::pow(c.clone(), k as usize))
        .collect();
    TruncatedSeries::new(coeffs).unwrap()
}

/// Formal binomial `C(a, k)` for a polynomial `a`.
fn formal_binomial(a: &Poly, k: u64) -> Poly {
    let mut out = Poly::one();
    for i in 0..k {
        out = &out * &(a - &Poly::constant(int(i as i64)));
    }
    out.scale(&Rational::new(1.into(), gjms_exact::factorial(k)))
}

fn sample_matrix(dim: usize, seed: i64) -> Matrix {
    let rows = (0..dim)
        .map(|i| (0..dim).map(|j| rat(((i * 7 + j * 3) as i64 + seed) % 11 - 5, 1 + ((i + j) as i64 % 3))).collect())
        .collect();
    Matrix::from_rows(rows)
}

#[test]
fn square_root_of_a_perfect_square() {
    let s = scalar(&[int(1), int(2), int(1)], 6);
    assert_eq!(s.sqrt().unwrap(), scalar(&[int(1), int(1)], 6));
}

#[test]
fn non_unit_constant_is_rejected() {
    let s = scalar(&[int(2), int(1)], 3);
    assert_eq!(s.inverse(), Err(SeriesError::NonUnitConstant));
    assert_eq!(s.sqrt(), Err(SeriesError::NonUnitConstant));
    assert_eq!(TruncatedSeries::<Rational>::new(vec![]), Err(SeriesError::Empty));
}

#[test]
fn inverse_metric_of_flat_model() {
    let p = sample_matrix(4, 2);
    let id = Matrix::identity(4);
    let order = 8;
    let base = TruncatedSeries::from_prefix(&id, &[id.clone(), p.scaled(&rat(-1, 2))], order);
    let inverse = base.mul(&base).inverse().unwrap();
    for k in 0..=order {
        let expected = p.pow(k as u32).scaled(&(int(k as i64 + 1) * num_traits::pow(rat(1, 2), k)));
        assert_eq!(inverse.coeff(k), &expected, "coefficient {k}");
    }
}

#[test]
fn matrix_square_root_needs_commuting_coefficients() {
    let a = Matrix::from_rows(vec![vec![int(0), int(1)], vec![int(0), int(0)]]);
    let b = Matrix::from_rows(vec![vec![int(0), int(0)], vec![int(1), int(0)]]);
    let id = Matrix::identity(2);
    let s = TruncatedSeries::new(vec![id, a, b]).unwrap();
    assert_eq!(s.sqrt(), Err(SeriesError::NonCommuting));
}

#[test]
fn determinant_of_round_model() {
    for dim in 1..=6u64 {
        let p = Matrix::identity(dim as usize).scaled(&rat(1, 2));
        assert_eq!(det_series(&p, 8), binomial_power(&rat(-1, 4), dim, 8));
    }
}

#[test]
fn determinant_of_pseudo_round_model() {
    for q in 0..=3usize {
        for p_dim in 0..=3usize {
            if q + p_dim == 0 {
                continue;
            }
            let mut diag = vec![rat(1, 2); q];
            diag.extend(vec![rat(-1, 2); p_dim]);
            let expected = binomial_power(&rat(-1, 4), q as u64, 8).mul(&binomial_power(&rat(1, 4), p_dim as u64, 8));
            assert_eq!(det_series(&Matrix::diagonal(&diag), 8), expected);
        }
    }
}

#[test]
fn determinant_of_one_by_one() {
    let c = rat(7, 3);
    assert_eq!(det_series(&Matrix::diagonal(std::slice::from_ref(&c)), 5), scalar(&[int(1), -c / int(2)], 5));
}

#[test]
fn shift_formulas() {
    let r2 = scalar(&[int(0), int(1)], 3);
    assert_eq!(r2.deriv2(), scalar(&[int(2)], 2));
    for k in 1..=5usize {
        let mut coeffs = vec![int(0); k + 1];
        coeffs[k] = int(1);
        let mono = scalar(&coeffs, 6);
        let mut expected = vec![int(0); k];
        expected[k - 1] = int(2 * k as i64);
        assert_eq!(mono.inv_r_deriv(), scalar(&expected, 5));
    }
}

#[test]
fn radial_operator_on_round_volume_density() {
    let n = Poly::named("n");
    let m = n.scale(&rat(1, 2));
    let order = 8;
    let quarter = Poly::constant(rat(-1, 4));
    let density: Vec<Poly> = (0..=order as u64).map(|k| &formal_binomial(&m, k) * &quarter.pow(k as u32)).collect();
    let w = TruncatedSeries::new(density).unwrap();
    let image = w.radial_op(&n);
    let prefactor = &m * &(&m - &Poly::one());
    let shifted = &m - &Poly::constant(int(2));
    for k in 0..order {
        let expected = &(&prefactor * &formal_binomial(&shifted, k as u64)) * &quarter.pow(k as u32);
        assert_eq!(image.coeff(k), &expected, "r^{}", 2 * k);
    }
}

#[test]
fn rescaling_the_variable() {
    let s = scalar(&[int(1), int(1), int(1)], 2);
    assert_eq!(s.rescale_variable(&int(2)), scalar(&[int(1), int(2), int(4)], 2));
}

#[test]
fn bivariate_sum_substitution_and_inverse() {
    let order = 5;
    let long = scalar(&[int(1), rat(-1, 3), int(2), rat(5, 7), int(0), int(0), rat(1, 9)], 2 * order);
    let f = long.truncate(order);
    let both = BiSeries::from_sum(&long, order);
    assert_eq!(both.s_coefficient(0), f);
    assert_eq!(both.r_coefficient(0), f);
    // The far corner of the box needs the r^12 coefficient.
    assert_eq!(both.coeff(3, 3), &(rat(1, 9) * int(20)));
    // f(r^2 + s^2) at s^2-degree one is f'(r^2).
    let derivative: Vec<Rational> = (0..order).map(|k| f.coeff(k + 1) * int(k as i64 + 1)).collect();
    assert_eq!(both.s_coefficient(1).truncate(order - 1), scalar(&derivative, order - 1));
    let product = both.mul(&both.inverse().unwrap());
    let mut one = BiSeries::zero_like(&Rational::one(), order);
    one.set(0, 0, Rational::one());
    assert_eq!(product, one);
    let root = both.sqrt().unwrap();
    assert_eq!(root.mul(&root), both);
    assert_eq!(BiSeries::from_r(&f).mul(&BiSeries::from_s(&f)).coeff(2, 3), &(f.coeff(2) * f.coeff(3)));
}

fn unit_series() -> impl Strategy<Value = TruncatedSeries<Rational>> {
    prop::collection::vec((-20i64..=20, 1i64..=6), 6).prop_map(|parts| {
        let mut coeffs: Vec<Rational> = parts.into_iter().map(|(a, b)| rat(a, b)).collect();
        coeffs[0] = Rational::one();
        TruncatedSeries::new(coeffs).unwrap()
    })
}

fn diagonal_entries() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-9i64..=9, 1i64..=4), 1..=4).prop_map(|v| v.into_iter().map(|(a, b)| rat(a, b)).collect())
}

proptest! {
    #[test]
    fn leibniz_for_the_euler_operator(a in unit_series(), b in unit_series()) {
        // (1/r)d/dr is a derivation on even series.
        let lhs = a.mul(&b).inv_r_deriv();
        let rhs = a.inv_r_deriv().mul(&b).add(&a.truncate(a.order() - 1).mul(&b.inv_r_deriv()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn leibniz_for_the_second_derivative(a in unit_series(), b in unit_series()) {
        // (fg)'' = f''g + 2f'g' + fg'' with f'g' = r^2 (f'/r)(g'/r).
        let order = a.order() - 1;
        let euler = a.inv_r_deriv().mul(&b.inv_r_deriv());
        let mut cross = vec![Rational::zero()];
        cross.extend(euler.coeffs()[..order].iter().cloned());
        let cross = TruncatedSeries::new(cross).unwrap().scale(&int(2));
        let rhs = a.deriv2().mul(&b.truncate(order)).add(&cross).add(&a.truncate(order).mul(&b.deriv2()));
        prop_assert_eq!(a.mul(&b).deriv2(), rhs);
    }

    #[test]
    fn sqrt_inverts_squaring(a in unit_series()) {
        prop_assert_eq!(a.mul(&a).sqrt().unwrap(), a.clone());
        prop_assert_eq!(a.sqrt().unwrap().mul(&a.sqrt().unwrap()), a);
    }

    #[test]
    fn inverse_is_an_involution(a in unit_series()) {
        let inv = a.inverse().unwrap();
        prop_assert_eq!(inv.inverse().unwrap(), a.clone());
        prop_assert!(a.mul(&inv).sub(&TruncatedSeries::one_like(&Rational::one(), a.order())).is_zero());
    }

    #[test]
    fn determinant_is_multiplicative_on_blocks(x in diagonal_entries(), y in diagonal_entries(), seed in 0i64..50) {
        let a = Matrix::diagonal(&x);
        let b = sample_matrix(y.len(), seed);
        let joint = det_series(&a.direct_sum(&b), 6);
        prop_assert_eq!(joint, det_series(&a, 6).mul(&det_series(&b, 6)));
    }
}
