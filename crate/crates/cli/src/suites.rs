use gjms_compositions::{known, mcoeff, ncoeff, Composition};
use gjms_exact::{factorial, int, Rational};
use gjms_identities::{
    build_m, build_pi_poly, expand_inversion, inversion_residual, lemma1_closed_form, lemma1_sum, p_word,
    pi_poly_subleading_prediction, random_instance,
};
use gjms_models::{
    bar_series_checks, double_metric_checks, einstein_agreement, sphere_eigenvalue_oracle, sum_round_check, Comparison,
    EinsteinModel, Param, SchoutenModel,
};
use gjms_ncalg::NCSum;
use gjms_residue::checks::{
    check_factorizations, leading_prediction, sigma_residual, subleading_factor, subleading_prediction, swap_residual,
};
use gjms_residue::{build_closed, build_direct};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::report::{CheckReport, Job};

fn compare_sums(name: &str, order: u32, lhs: &NCSum, rhs: &NCSum) -> CheckReport {
    let residual = lhs.sub(rhs);
    CheckReport::new(name, residual.is_zero()).param("order", order).sides(lhs, rhs, residual)
}

fn from_comparisons(list: Vec<Comparison>) -> Vec<CheckReport> {
    list.into_iter().map(CheckReport::from).collect()
}

/// The published coefficient tables against the closed formulas.
pub fn tables() -> Vec<Job> {
    let mut jobs = Vec::new();
    for (name, table, formula) in [
        ("tables.m", known::M_TABLE, mcoeff as fn(&Composition) -> Rational),
        ("tables.n", known::N_TABLE, ncoeff as fn(&Composition) -> Rational),
    ] {
        jobs.push(Job::new(move || {
            table
                .iter()
                .map(|(parts, value)| {
                    let comp = Composition::new(parts.to_vec()).expect("table entries are compositions");
                    let computed = formula(&comp);
                    let expected = int(*value);
                    CheckReport::new(name, computed == expected)
                        .param("composition", &comp)
                        .param("order", comp.size())
                        .sides(&computed, &expected, &computed - &expected)
                })
                .collect()
        }));
    }
    jobs
}

pub fn inversion(max_order: u32) -> Vec<Job> {
    (1..=max_order)
        .map(|order| {
            Job::new(move || {
                let residual = inversion_residual(order);
                vec![CheckReport::new("inversion", residual.is_zero())
                    .param("order", order)
                    .sides(expand_inversion(order), p_word(order), residual)]
            })
        })
        .collect()
}

pub fn pi_polynomial(max_order: u32) -> Vec<Job> {
    (1..=max_order)
        .map(|order| {
            Job::new(move || {
                let pi = build_pi_poly(order);
                let sign = if order % 2 == 1 { int(1) } else { int(-1) };
                let mut out = vec![compare_sums("pi_poly.constant_term", order, &pi.coeff(0), &p_word(order).scale_rational(&sign))];
                let norm = int(1) / Rational::from_integer(factorial(order as u64 - 1));
                out.push(compare_sums("pi_poly.leading", order, &pi.coeff(order as usize - 1), &build_m(order).scale_rational(&norm)));
                if order >= 2 {
                    let scale = Rational::from_integer(factorial(order as u64 - 2));
                    let observed = pi.coeff(order as usize - 2).scale_rational(&scale);
                    out.push(compare_sums("pi_poly.subleading", order, &observed, &pi_poly_subleading_prediction(order)));
                }
                out
            })
        })
        .collect()
}

/// Random instances of the alternating subset-sum lemma; `s` is drawn from
/// `1..=s_max` and the instance from the same seeded stream.
pub fn lemma1(s_max: usize, trials: usize, seed: u64) -> Vec<Job> {
    vec![Job::new(move || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let zero = int(0);
        let mut out = Vec::new();
        for trial in 0..trials {
            let s = rng.gen_range(1..=s_max);
            let inst = random_instance(&mut rng, s);
            let report = match (lemma1_sum(&inst.parts, &inst.x, &inst.y), lemma1_closed_form(&inst.parts, &inst.x, &inst.y)) {
                (Ok(lhs), Ok(rhs)) => CheckReport::new("lemma1.closed_form", lhs == rhs).sides(&lhs, &rhs, &lhs - &rhs),
                (Err(e), _) | (_, Err(e)) => CheckReport::error("lemma1.closed_form", e),
            };
            out.push(report.param("trial", trial).param("s", s).seed(seed));
            if s > 1 {
                let report = match lemma1_sum(&inst.parts, &zero, &zero) {
                    Ok(value) => CheckReport::new("lemma1.vanishing", value == zero).sides(&value, &zero, &value),
                    Err(e) => CheckReport::error("lemma1.vanishing", e),
                };
                out.push(report.param("trial", trial).param("s", s).seed(seed));
            }
        }
        out
    })]
}

pub fn residue(max_order: u32) -> Vec<Job> {
    (1..=max_order)
        .map(|order| {
            Job::new(move || {
                let closed = build_closed(order);
                let direct = build_direct(order);
                let residual = direct.sub(&closed);
                let mut out = vec![CheckReport::new("residue.direct_equals_closed", residual.is_zero())
                    .param("order", order)
                    .sides(&direct, &closed, &residual)];
                for f in check_factorizations(order) {
                    out.push(
                        CheckReport::new("residue.factorization", f.holds())
                            .param("order", order)
                            .param("j", f.j)
                            .param("side", f.side)
                            .sides("D", "product", &f.residual),
                    );
                }
                out.push(compare_sums("residue.constant_term", order, &closed.coeff(0), &p_word(order)));
                let top = 2 * order as usize - 1;
                out.push(compare_sums("residue.leading", order, &closed.coeff(top), &leading_prediction(order)));
                let observed = closed.coeff(top - 1).scale_rational(&subleading_factor(order));
                out.push(compare_sums("residue.subleading", order, &observed, &subleading_prediction(order)));
                let sigma = sigma_residual(&closed);
                out.push(CheckReport::new("residue.sigma_symmetry", sigma.is_zero()).param("order", order).sides(
                    "sigma(D(mu))",
                    "D(-mu-1/2)",
                    &sigma,
                ));
                // Without reversal the exchange is not a symmetry once words
                // stop being palindromes (N >= 3).
                let swap = swap_residual(&closed);
                out.push(
                    CheckReport::new("residue.unreversed_exchange_breaks", (order < 3) == swap.is_zero())
                        .param("order", order)
                        .sides("swap(D(mu))", "D(-mu-1/2)", &swap),
                );
                out
            })
        })
        .collect()
}

pub fn einstein(model: EinsteinModel, max_order: u32) -> Vec<Job> {
    let params = [("n".to_string(), model.n().to_string()), ("lambda".to_string(), model.lambda().to_string())];
    vec![Job::new(move || {
        let reports = match model.verify(max_order, max_order as usize) {
            Ok(list) => from_comparisons(list),
            Err(e) => vec![CheckReport::error("einstein", e)],
        };
        reports
            .into_iter()
            .map(|r| params.iter().fold(r, |r, (k, v)| r.param(k, v)))
            .collect()
    })]
}

/// Round-sphere checks: spot values of Q, the spectrum of `P_2N` on
/// spherical harmonics and the binomial summation identity.
pub fn sphere(max_order: u32) -> Vec<Job> {
    let mut jobs = vec![Job::new(|| {
        let s4 = EinsteinModel::sphere(4);
        let mut out = Vec::new();
        for (order, expected) in [(1, 2), (2, 6)] {
            let report = match s4.q_three_ways(order) {
                Ok(routes) => {
                    let expected = gjms_exact::Poly::constant(int(expected));
                    let holds = routes.iter().all(|q| *q == expected);
                    CheckReport::new("sphere.q_spot_value", holds).sides(&routes[0], &expected, &(&routes[0] - &expected))
                }
                Err(e) => CheckReport::error("sphere.q_spot_value", e),
            };
            out.push(report.param("n", 4).param("order", order));
        }
        out
    })];
    jobs.push(Job::new(|| {
        let mut out = Vec::new();
        for n in 3..=8i64 {
            for degree in 0..=5i64 {
                for order in 1..=4u32 {
                    let expected = sphere_eigenvalue_oracle(n, degree, order);
                    let report = match EinsteinModel::sphere_eigenvalue(n, degree, order) {
                        Ok(value) => CheckReport::new("sphere.eigenvalue", value == expected).sides(&value, &expected, &value - &expected),
                        Err(e) => CheckReport::error("sphere.eigenvalue", e),
                    };
                    out.push(report.param("n", n).param("degree", degree).param("order", order));
                }
            }
        }
        out
    }));
    jobs.push(Job::new(move || (1..=max_order).map(|order| CheckReport::from(sum_round_check(order))).collect()));
    jobs
}

fn tag_model(report: CheckReport, dim: usize, n: &str, seed: Option<u64>) -> CheckReport {
    let report = report.param("dim", dim).param("n", n);
    match seed {
        Some(s) => report.seed(s),
        None => report,
    }
}

/// The constant-Schouten model: closed forms against series, Q routes,
/// generating function and the bulk series checks.
pub fn lcf(model: SchoutenModel, max_order: u32, seed: Option<u64>) -> Vec<Job> {
    let dim = model.schouten().dim();
    let n = model.n().to_string();
    let first = model.clone();
    let first_n = n.clone();
    vec![
        Job::new(move || {
            let reports = match first.verify(max_order, max_order as usize) {
                Ok(list) => from_comparisons(list),
                Err(e) => vec![CheckReport::error("lcf", e)],
            };
            reports.into_iter().map(|r| tag_model(r, dim, &first_n, seed)).collect()
        }),
        Job::new(move || {
            from_comparisons(bar_series_checks(&model, max_order)).into_iter().map(|r| tag_model(r, dim, &n, seed)).collect()
        }),
    ]
}

/// The doubled metric of a Schouten matrix to bidegree `order`.
pub fn double_metric(model: SchoutenModel, order: usize, seed: Option<u64>) -> Vec<Job> {
    vec![Job::new(move || {
        from_comparisons(double_metric_checks(model.schouten(), order))
            .into_iter()
            .map(|r| {
                let r = r.param("dim", model.schouten().dim());
                match seed {
                    Some(s) => r.seed(s),
                    None => r,
                }
            })
            .collect()
    })]
}

/// The Einstein model against the constant-Schouten model with `P = lambda/2 Id`.
pub fn agreement(max_order: u32) -> Vec<Job> {
    vec![Job::new(move || {
        let mut out = Vec::new();
        for dim in 3..=8usize {
            let reports = match einstein_agreement(dim, &int(1), max_order) {
                Ok(list) => from_comparisons(list),
                Err(e) => vec![CheckReport::error("agreement", e)],
            };
            out.extend(reports.into_iter().map(|r| r.param("dim", dim)));
        }
        out
    })]
}

/// The LCF round four-sphere: `Q_4 = 6`.
pub fn lcf_sphere() -> Vec<Job> {
    vec![Job::new(|| {
        let model = SchoutenModel::scaled_identity(4, &int(1), Param::Value(int(4)));
        let expected = gjms_exact::Poly::constant(int(6));
        let report = match model.q_three_ways(2) {
            Ok(routes) => {
                let holds = routes.iter().all(|q| *q == expected);
                CheckReport::new("lcf.sphere_q4", holds).sides(&routes[0], &expected, &(&routes[0] - &expected))
            }
            Err(e) => CheckReport::error("lcf.sphere_q4", e),
        };
        vec![report.param("order", 2)]
    })]
}
