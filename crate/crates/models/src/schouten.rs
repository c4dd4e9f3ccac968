use gjms_exact::{int, rat, Poly, Rational, Ring};
use gjms_series::{det_series, Matrix, TruncatedSeries};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constant::{fact, half_n_minus, pow2};
use crate::{dimension, Comparison, ConstantData, EinsteinModel, ModelError, Param};

/// A locally conformally flat metric with constant Schouten matrix `P` at
/// the point, so that `g_r = (1 - r^2/2 P)^2` and `w(r) = det(1 - r^2/2 P)^{1/2}`.
///
/// The matrix size is independent of the formal dimension `n`; with at
/// least `N` distinct eigenvalues the power traces `p_1..p_N` are
/// algebraically independent, so identities checked here are checked as
/// polynomial identities in them.
#[derive(Debug, Clone, PartialEq)]
pub struct SchoutenModel {
    schouten: Matrix,
    n: Param,
}

fn sample_rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

impl SchoutenModel {
    pub fn new(schouten: Matrix, n: Param) -> Result<SchoutenModel, ModelError> {
        if schouten.dim() == 0 {
            return Err(ModelError::EmptyMatrix);
        }
        if !schouten.is_symmetric() {
            return Err(ModelError::NotSymmetric);
        }
        Ok(SchoutenModel { schouten, n })
    }

    /// Diagonal matrix with distinct nonzero seeded rational entries.
    pub fn random_diagonal(dim: usize, seed: u64) -> SchoutenModel {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut entries: Vec<Rational> = Vec::with_capacity(dim);
        while entries.len() < dim {
            let x = sample_rational(&mut rng);
            if !num_traits::Zero::is_zero(&x) && !entries.contains(&x) {
                entries.push(x);
            }
        }
        SchoutenModel { schouten: Matrix::diagonal(&entries), n: Param::Formal }
    }

    /// Dense symmetric matrix with seeded rational entries.
    #[allow(clippy::needless_range_loop)]
    pub fn random_symmetric(dim: usize, seed: u64) -> SchoutenModel {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut rows = vec![vec![int(0); dim]; dim];
        for i in 0..dim {
            for j in i..dim {
                let x = sample_rational(&mut rng);
                rows[i][j] = x.clone();
                rows[j][i] = x;
            }
        }
        SchoutenModel { schouten: Matrix::from_rows(rows), n: Param::Formal }
    }

    /// `P = (lambda/2) Id_d`: the Einstein case.
    pub fn scaled_identity(dim: usize, lambda: &Rational, n: Param) -> SchoutenModel {
        SchoutenModel { schouten: Matrix::identity(dim).scaled(&(lambda / int(2))), n }
    }

    pub fn with_n(mut self, n: Param) -> SchoutenModel {
        self.n = n;
        self
    }

    pub fn schouten(&self) -> &Matrix {
        &self.schouten
    }

    pub fn n(&self) -> &Param {
        &self.n
    }

    pub fn specialize(&self, poly: &Poly) -> Poly {
        self.n.specialize(dimension(), poly)
    }

    /// `p_k = tr(P^k)`; index 0 holds the matrix size.
    pub fn power_sums(&self, max: usize) -> Vec<Rational> {
        self.schouten.power_traces(max)
    }

    /// `v(r) = det(1 - r^2/2 P)`.
    pub fn volume_series(&self, order: usize) -> TruncatedSeries<Rational> {
        det_series(&self.schouten, order)
    }

    /// `w(r) = v(r)^{1/2}`.
    pub fn density_series(&self, order: usize) -> TruncatedSeries<Rational> {
        self.volume_series(order).sqrt().expect("det series has constant term 1")
    }

    /// `mu_2N = -(N-1)!^2 2^{N-1} [(n/2-N) p_N + 1/2 sum_{a=1}^{N-1} p_a p_{N-a}]`
    /// with formal `n`.
    pub fn mu_formal(&self, order: u32) -> Poly {
        let p = self.power_sums(order as usize);
        let quadratic: Rational = (1..order).map(|a| &p[a as usize] * &p[(order - a) as usize]).sum::<Rational>() / int(2);
        let bracket = &half_n_minus(order as i64).scale(&p[order as usize]) + &Poly::constant(quadratic);
        bracket.scale(&-(fact(order - 1) * fact(order - 1) * pow2(order - 1)))
    }

    pub fn mu(&self, order: u32) -> Poly {
        self.specialize(&self.mu_formal(order))
    }

    /// `mu_2N` as `(N-1)!^2 4^{N-1}` times the `r^{2N-2}` coefficient of
    /// `-(w'' - (n-1) w'/r) / w`, with formal `n`.
    pub fn mu_from_series(&self, order: u32) -> Poly {
        let k = order as usize;
        let w = self.density_series(k).map(|c| Poly::constant(c.clone()));
        let inverse = w.truncate(k - 1).inverse().expect("w(0) = 1");
        let quotient = w.radial_op(&Poly::var(dimension())).mul(&inverse);
        let weight = -(fact(order - 1) * fact(order - 1) * pow2(2 * (order - 1)));
        self.specialize(&quotient.coeff(k - 1).scale(&weight))
    }

    /// `mu_2k` with formal `n` and the rational `w_2k`, for `k <= max_order`.
    pub fn constant_data(&self, max_order: u32) -> ConstantData {
        let w = self.density_series(max_order as usize);
        let mut mu = vec![Poly::zero()];
        mu.extend((1..=max_order).map(|k| self.mu_formal(k)));
        ConstantData::new(mu, w.coeffs().iter().map(|c| Poly::constant(c.clone())).collect())
    }

    /// `Q_2N` by definition, explicit formula and recursion.
    pub fn q_three_ways(&self, order: u32) -> Result<[Poly; 3], ModelError> {
        let data = self.constant_data(order);
        let by_definition = data.q_from_definition(order)?;
        let explicit = data.q_explicit(order);
        let recursive = data.q_recursive(order).swap_remove(order as usize);
        Ok([by_definition, explicit, recursive].map(|q| self.specialize(&q)))
    }

    /// The relations between `w_2k` and `v_2k` for `k <= 4`, plus the low
    /// coefficients in terms of power traces.
    pub fn wv_relations(&self) -> Vec<Comparison> {
        let v = self.volume_series(4);
        let w = self.density_series(4);
        let (v2, v4, v6, v8) = (v.coeff(1), v.coeff(2), v.coeff(3), v.coeff(4));
        let p = self.power_sums(2);
        let mut out = vec![
            Comparison::at("lcf.wv", 1, &(w.coeff(1) * int(2)), v2),
            Comparison::at("lcf.wv", 2, &(w.coeff(2) * int(8)), &(v4 * int(4) - v2 * v2)),
            Comparison::at("lcf.wv", 3, &(w.coeff(3) * int(16)), &(v6 * int(8) - v4 * v2 * int(4) + v2 * v2 * v2)),
        ];
        let v2sq = v2 * v2;
        let rhs8 = v8 * int(64) - v6 * v2 * int(32) - v4 * v4 * int(16) + &v2sq * v4 * int(24) - &v2sq * &v2sq * int(5);
        out.push(Comparison::at("lcf.wv", 4, &(w.coeff(4) * int(128)), &rhs8));
        out.push(Comparison::at("lcf.v_trace", 1, v2, &(&p[1] * rat(-1, 2))));
        out.push(Comparison::at("lcf.v_trace", 2, v4, &((&p[1] * &p[1] - &p[2]) / int(8))));
        out.push(Comparison::at("lcf.w_trace", 1, w.coeff(1), &(&p[1] * rat(-1, 4))));
        out.push(Comparison::at("lcf.w_trace", 2, &(w.coeff(2) * int(32)), &(&p[1] * &p[1] - &p[2] * int(2))));
        out
    }

    /// `(d^2/dr^2 - (n-1)/r d/dr) w + H_0 w` up to `r^{2K}` with formal `n`.
    pub fn generating_function_residual(&self, order: usize) -> TruncatedSeries<Poly> {
        let w = self.density_series(order + 1).map(|c| Poly::constant(c.clone()));
        let potential: Vec<Poly> = (1..=order as u32 + 1)
            .map(|big_n| self.mu_formal(big_n).scale(&(int(1) / (pow2(2 * (big_n - 1)) * fact(big_n - 1) * fact(big_n - 1)))))
            .collect();
        let potential = TruncatedSeries::new(potential).expect("nonempty");
        w.radial_op(&Poly::var(dimension())).add(&potential.mul(&w.truncate(order))).map(|c| self.specialize(c))
    }

    /// Every identity of the model: `mu` against the series, the basic
    /// recursion and the weighted inversion sum up to `max_order`, the three
    /// `Q` routes up to `min(max_order, 4)` with the `Q_6`/`Q_8` displays,
    /// the `w`/`v` relations and the generating function to `r^{2K}`.
    pub fn verify(&self, max_order: u32, series_order: usize) -> Result<Vec<Comparison>, ModelError> {
        let mut out = Vec::new();
        let data = self.constant_data(max_order);
        let spec = |p: &Poly| self.specialize(p);
        for order in 1..=max_order {
            out.push(Comparison::at("lcf.mu_series", order, &self.mu(order), &self.mu_from_series(order)));
            let (lhs, rhs) = data.basic_recursion_sides(order);
            out.push(Comparison::at("lcf.basic_recursion", order, &spec(&lhs), &spec(&rhs)));
            if order <= 6 {
                let (lhs, rhs) = data.weighted_inversion_sides(order);
                out.push(Comparison::at("lcf.weighted_inversion", order, &spec(&lhs), &spec(&rhs)));
            }
        }
        let q_max = max_order.min(4);
        let recursive = data.q_recursive(q_max);
        for order in 1..=q_max {
            let by_definition = data.q_from_definition(order)?;
            let explicit = data.q_explicit(order);
            out.push(Comparison::at("lcf.q_explicit", order, &spec(&explicit), &spec(&by_definition)));
            out.push(Comparison::at("lcf.q_recursive", order, &spec(&recursive[order as usize]), &spec(&by_definition)));
        }
        if q_max >= 2 {
            let p = self.power_sums(2);
            let q4 = &half_n_minus(0).scale(&(&p[1] * &p[1])) - &Poly::constant(&p[2] * int(2));
            out.push(Comparison::at("lcf.q4_traces", 2, &spec(&recursive[2]), &spec(&q4)));
        }
        if q_max >= 3 {
            out.push(Comparison::at("lcf.q6_explicit", 3, &spec(&data.q6_formula()), &spec(&recursive[3])));
            let (lhs, rhs) = data.q6_recursion_sides(&recursive);
            out.push(Comparison::at("lcf.q6_recursion", 3, &spec(&lhs), &spec(&rhs)));
        }
        if q_max >= 4 {
            out.push(Comparison::at("lcf.q8_explicit", 4, &spec(&data.q8_formula()), &spec(&recursive[4])));
            let (lhs, rhs) = data.q8_recursion_sides(&recursive);
            out.push(Comparison::at("lcf.q8_recursion", 4, &spec(&lhs), &spec(&rhs)));
        }
        out.extend(self.wv_relations());
        for (k, c) in self.generating_function_residual(series_order).coeffs().iter().enumerate() {
            out.push(Comparison::at("lcf.generating_function", k as u32, c, &Poly::zero()));
        }
        Ok(out)
    }
}

/// `mu` and `Q` of `P = (lambda/2) Id_d` with `n = d` against the Einstein
/// model with the same `n` and `lambda`.
pub fn einstein_agreement(dim: usize, lambda: &Rational, max_order: u32) -> Result<Vec<Comparison>, ModelError> {
    let n = Param::Value(int(dim as i64));
    let lcf = SchoutenModel::scaled_identity(dim, lambda, n.clone());
    let einstein = EinsteinModel::new(n, Param::Value(lambda.clone()));
    let mut out = Vec::new();
    for order in 1..=max_order {
        out.push(Comparison::at("agreement.mu", order, &lcf.mu(order), &einstein.mu(order)));
        let [q_lcf, ..] = lcf.q_three_ways(order)?;
        let [q_einstein, ..] = einstein.q_three_ways(order)?;
        out.push(Comparison::at("agreement.q", order, &q_lcf, &q_einstein));
    }
    Ok(out)
}
