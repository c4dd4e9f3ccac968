use gjms_exact::{int, rat, Poly, Rational, Ring};
use gjms_series::{BiSeries, Matrix, TruncatedSeries};

use crate::constant::{fact, pow2};
use crate::{dimension, Comparison, SchoutenModel};

/// `w(r, s) = det(1 - (r^2+s^2)/2 P)^{1/2} / det(1 - r^2/2 P)^{1/2}`,
/// with `r^{2i} s^{2j}` at index `(i, j)`.
pub fn bivariate_density(model: &SchoutenModel, order: usize) -> BiSeries<Rational> {
    let v = model.volume_series(2 * order);
    let ratio = BiSeries::from_sum(&v, order).mul(&BiSeries::from_r(&v.truncate(order)).inverse().expect("v(0) = 1"));
    ratio.sqrt().expect("scalar coefficients commute")
}

/// `P(1 - r^2/2 P)^{-1} = sum_m P^{m+1} (r^2/2)^m`, the Schouten tensor of
/// `dr^2 + g_r` as an endomorphism.
pub fn bulk_schouten(schouten: &Matrix, order: usize) -> TruncatedSeries<Matrix> {
    let coeffs = (0..=order).map(|m| schouten.pow(m as u32 + 1).scaled(&num_traits::pow(rat(1, 2), m))).collect();
    TruncatedSeries::new(coeffs).expect("nonempty")
}

fn trace_series(series: &TruncatedSeries<Matrix>) -> TruncatedSeries<Rational> {
    series.map(Matrix::trace)
}

/// `-(M-1)!^2 2^{M-1} [((n+1)/2 - M) t_M + 1/2 sum t_a t_{M-a}]` for traces
/// `t_k = tr Pbar(r)^k`, in one more dimension than the boundary.
fn bulk_mu(traces: &[TruncatedSeries<Poly>], order: u32) -> TruncatedSeries<Poly> {
    let n = Poly::var(dimension());
    let coefficient = &(&n + &Poly::one()).scale(&rat(1, 2)) - &Poly::constant(int(order as i64));
    let mut bracket = traces[order as usize].scale_by(&coefficient);
    for a in 1..order {
        bracket = bracket.add(&traces[a as usize].mul(&traces[(order - a) as usize]).scale(&rat(1, 2)));
    }
    bracket.scale(&-(fact(order - 1) * fact(order - 1) * pow2(order - 1)))
}

/// `d^2/dr^2` at `r = 0` of an even series: twice the `r^2` coefficient.
fn second_derivative_at_zero<C: Ring>(series: &TruncatedSeries<C>) -> C {
    series.coeff(1).scaled(&int(2))
}

/// The constant-level identities behind the bulk metric `dr^2 + g_r`, for
/// orders up to `max_order`, all with formal `n`:
///
/// * the `r^2` coefficient of each `s^{2k}` slice of `w(r, s)`,
/// * the `r^4` coefficients against `w_2N`, `w_2N-2`, `w_2N-4`,
/// * the one-variable lemma on `w(x+y)/w(x)`, which must also reproduce
///   `w(r, s)` built from determinants,
/// * the Yamabe form `i* Pbar_2(wbar_{2N-2}) - P_2(w_{2N-2}) = 2N w_2N`,
/// * the recursion `mu_2N = (2N-2) d^2/dr^2|_0 mubar_{2N-2}` with the bulk
///   `mubar` taken from the trace formula alone, and its `N = 3` case
///   with the Laplacian term `Deltabar Jbar` restored.
pub fn bar_series_checks(model: &SchoutenModel, max_order: u32) -> Vec<Comparison> {
    let big_k = max_order as usize + 2;
    let w = model.density_series(big_k);
    let wk = |k: usize| w.coeff(k).clone();
    let from_det = bivariate_density(model, big_k);
    let mut out = Vec::new();

    for k in 0..max_order as usize {
        let lhs = from_det.coeff(1, k) * int(2);
        let rhs = wk(k + 1) * int(2 * k as i64 + 2) - wk(1) * wk(k) * int(2);
        out.push(Comparison::at("bar.second_derivative", k as u32, &lhs, &rhs));
    }
    for big_n in 2..=max_order as usize {
        let lhs = from_det.coeff(2, big_n - 2) * int(24);
        let n = big_n as i64;
        let rhs = wk(big_n) * int(12 * n * (n - 1)) + (wk(1) * wk(1) - wk(2)) * wk(big_n - 2) * int(24)
            - wk(1) * wk(big_n - 1) * int(12 * (2 * n - 2));
        out.push(Comparison::at("bar.fourth_derivative", big_n as u32, &lhs, &rhs));
    }

    // One-variable route: w~(x, y) = w~(x + y) / w~(x).
    let shifted = BiSeries::from_sum(&model.density_series(2 * big_k), big_k).mul(&BiSeries::from_r(&w).inverse().expect("w(0) = 1"));
    for i in 0..=2 {
        out.push(Comparison::at("bar.shift_route", i as u32, &shifted.r_coefficient(i), &from_det.r_coefficient(i)));
    }
    for j in 0..max_order as usize {
        let rhs = wk(j + 1) * int(j as i64 + 1) - wk(1) * wk(j);
        out.push(Comparison::at("bar.shift_first", j as u32, shifted.coeff(1, j), &rhs));
    }
    for j in 0..max_order as usize - 1 {
        let jj = j as i64;
        let rhs = wk(j + 2) * int((jj + 2) * (jj + 1)) - wk(1) * wk(j + 1) * int(2 * (jj + 1))
            - (wk(2) - wk(1) * wk(1)) * wk(j) * int(2);
        out.push(Comparison::at("bar.shift_second", j as u32, &(shifted.coeff(2, j) * int(2)), &rhs));
    }
    let euler = w.inv_r_deriv();
    let generating_rhs = euler
        .inv_r_deriv()
        .scale(&int(3))
        .sub(&euler.scale(&(wk(1) * int(12))))
        .add(&w.scale(&((wk(1) * wk(1) - wk(2)) * int(24))));
    let generating_lhs = from_det.r_coefficient(2).scale(&int(24)).truncate(generating_rhs.order());
    out.push(Comparison::at("bar.fourth_derivative_series", max_order, &generating_lhs, &generating_rhs));

    // Yamabe form; J = tr P and i* Jbar = J.
    let n = Poly::var(dimension());
    let j_value = model.schouten().trace();
    let bulk_coefficient = &(&n + &Poly::one()).scale(&rat(1, 2)) - &Poly::one();
    let boundary_coefficient = &n.scale(&rat(1, 2)) - &Poly::one();
    for big_n in 1..=max_order as usize {
        let second = Poly::constant(from_det.coeff(1, big_n - 1) * int(2));
        let restricted = Poly::constant(&j_value * &wk(big_n - 1));
        let lhs = &(&second - &(&bulk_coefficient * &restricted)) + &(&boundary_coefficient * &restricted);
        let rhs = Poly::constant(wk(big_n) * int(2 * big_n as i64));
        out.push(Comparison::at("bar.yamabe", big_n as u32, &model.specialize(&lhs), &model.specialize(&rhs)));
    }

    let pbar = bulk_schouten(model.schouten(), 3);
    let mut power = pbar.one_like();
    let mut traces = vec![TruncatedSeries::zero_like(&Poly::zero(), 3)];
    for _ in 1..max_order {
        power = power.mul(&pbar);
        traces.push(trace_series(&power).map(|c| Poly::constant(c.clone())));
    }
    for big_n in 3..=max_order {
        let bulk = bulk_mu(&traces, big_n - 1);
        let rhs = second_derivative_at_zero(&bulk).scale(&int(2 * big_n as i64 - 2));
        out.push(Comparison::at("bar.mu_recursion", big_n, &model.mu(big_n), &model.specialize(&rhs)));
    }
    if max_order >= 3 {
        // Deltabar f = f'' + (v'/v) f' for f depending on r only.
        let j_bar = trace_series(&pbar);
        let v = model.volume_series(3);
        let log_derivative = v.inv_r_deriv().mul(&v.truncate(2).inverse().expect("v(0) = 1"));
        let first_order = log_derivative.mul(&j_bar.inv_r_deriv());
        let mut shifted = vec![int(0)];
        shifted.extend(first_order.coeffs()[..first_order.order()].iter().cloned());
        let laplacian = j_bar.deriv2().add(&TruncatedSeries::new(shifted).expect("nonempty"));
        let bulk = bulk_mu(&traces, 2).truncate(laplacian.order()).add(&laplacian.map(|c| Poly::constant(c.clone())));
        let rhs = second_derivative_at_zero(&bulk).scale(&int(4));
        out.push(Comparison::at("bar.mu_recursion_with_laplacian", 3, &model.mu(3), &model.specialize(&rhs)));
    }
    out
}
