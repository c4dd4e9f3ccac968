use gjms_exact::{binomial, rat, Rational, Ring};
use gjms_series::{BiSeries, Matrix, TruncatedSeries};

use crate::bar::bulk_schouten;
use crate::Comparison;

/// `g_r = (1 - r^2/2 P)^2` as a matrix series.
fn metric_series(schouten: &Matrix, order: usize) -> TruncatedSeries<Matrix> {
    let id = schouten.one_like();
    let linear = TruncatedSeries::from_prefix(&id, &[id.clone(), schouten.scaled(&rat(-1, 2))], order);
    linear.mul(&linear)
}

/// The doubled Poincare-Einstein metric of a constant Schouten matrix up to
/// bidegree `K`:
///
/// * `g_r^{-1} g_{r^2+s^2} = (1 - s^2/2 Pbar(r))^2` with `Pbar(r) = P(1 - r^2/2 P)^{-1}`,
/// * `g(r, s) = g_r (1 - s^2/2 Pbar(r))^2` has coefficients `C(k+l, k) g_(2k+2l)`,
/// * `-(1/2r) d/dr(g_r) g_r^{-1} = Pbar(r)`.
pub fn double_metric_checks(schouten: &Matrix, order: usize) -> Vec<Comparison> {
    let id = schouten.one_like();
    let g = metric_series(schouten, order);
    let g_inverse = g.inverse().expect("g_0 is the identity");
    let pbar = bulk_schouten(schouten, order);
    let mut out = Vec::new();

    let lhs = BiSeries::from_r(&g_inverse).mul(&BiSeries::from_sum(&metric_series(schouten, 2 * order), order));
    let mut linear = BiSeries::zero_like(&id, order);
    linear.set(0, 0, id.clone());
    for i in 0..=order {
        linear.set(i, 1, pbar.coeff(i).scaled(&rat(-1, 2)));
    }
    let rhs = linear.mul(&linear);
    for i in 0..=order {
        out.push(Comparison::at("double.relative_metric", i as u32, &lhs.r_coefficient(i), &rhs.r_coefficient(i)));
    }

    let doubled = BiSeries::from_r(&g).mul(&rhs);
    for k in 0..=order {
        for l in 0..=order - k {
            let weight = Rational::from_integer(binomial((k + l) as u64, k as u64));
            let expected = g.coeff(k + l).scaled(&weight);
            out.push(Comparison::at(format!("double.coefficient_{k}_{l}"), (k + l) as u32, doubled.coeff(k, l), &expected));
        }
    }

    let derivative = g.inv_r_deriv().scale(&rat(-1, 2));
    let bulk = derivative.mul(&g_inverse.truncate(order - 1));
    out.push(Comparison::at("double.bulk_schouten", order as u32, &bulk, &pbar.truncate(order - 1)));
    out
}
