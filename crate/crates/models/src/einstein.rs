use gjms_compositions::{enumerate, mcoeff, ncoeff};
use gjms_exact::{int, rat, EvalPoint, Poly, Rational};
use gjms_series::TruncatedSeries;

use crate::constant::{fact, pow2};
use crate::{dimension, lambda, laplacian, Comparison, ConstantData, ModelError, Param};

/// An Einstein metric with `Ric = lambda (n-1) g`, so `J = lambda n / 2`.
///
/// Operators are polynomials in the formal Laplacian; the GJMS operators
/// factor as `P_2N = prod_{k=0}^{N-1} (Delta - lambda (n/2+k)(n/2-1-k))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EinsteinModel {
    n: Param,
    lambda: Param,
}

impl EinsteinModel {
    pub fn new(n: Param, lambda: Param) -> EinsteinModel {
        EinsteinModel { n, lambda }
    }

    /// Formal `n` and formal `lambda`.
    pub fn formal() -> EinsteinModel {
        EinsteinModel::new(Param::Formal, Param::Formal)
    }

    /// The round sphere `S^n`, `lambda = 1`.
    pub fn sphere(n: i64) -> EinsteinModel {
        EinsteinModel::new(Param::Value(int(n)), Param::Value(int(1)))
    }

    pub fn n(&self) -> &Param {
        &self.n
    }

    pub fn lambda(&self) -> &Param {
        &self.lambda
    }

    fn n_poly(&self) -> Poly {
        self.n.as_poly(dimension())
    }

    fn lambda_poly(&self) -> Poly {
        self.lambda.as_poly(lambda())
    }

    fn with_formal_n(&self) -> EinsteinModel {
        EinsteinModel::new(Param::Formal, self.lambda.clone())
    }

    /// Substitutes a fixed `n` into a result computed with formal `n`.
    pub fn specialize(&self, poly: &Poly) -> Poly {
        self.n.specialize(dimension(), poly)
    }

    /// `J = lambda n / 2`.
    pub fn scalar_j(&self) -> Poly {
        (&self.lambda_poly() * &self.n_poly()).scale(&rat(1, 2))
    }

    /// The constant `lambda (n/2+k)(n/2-1-k)` in the `k`-th factor.
    fn shift(&self, k: u32) -> Poly {
        let half = self.n_poly().scale(&rat(1, 2));
        let a = &half + &Poly::constant(int(k as i64));
        let b = &half - &Poly::constant(int(k as i64 + 1));
        &(&self.lambda_poly() * &a) * &b
    }

    /// `P_2N` as a polynomial in `Delta`.
    pub fn gjms(&self, order: u32) -> Poly {
        let delta = Poly::var(laplacian());
        (0..order).fold(Poly::one(), |acc, k| &acc * &(&delta - &self.shift(k)))
    }

    /// `P_2N(1)`: the operator with `Delta` set to zero.
    pub fn gjms_at_one(&self, order: u32) -> Poly {
        (0..order).fold(Poly::one(), |acc, k| &acc * &self.shift(k).scale(&int(-1)))
    }

    /// `M_2N = sum_I m_I P_{2I}`, expanded in `Delta`.
    pub fn building_block(&self, order: u32) -> Poly {
        let factors: Vec<Poly> = (0..=order).map(|k| self.gjms(k)).collect();
        let mut out = Poly::zero();
        for comp in enumerate(order).expect("order >= 1") {
            let product = comp.entries().iter().fold(Poly::one(), |acc, &k| &acc * &factors[k as usize]);
            out = &out + &product.scale(&mcoeff(&comp));
        }
        out
    }

    /// `N!(N-1)! lambda^{N-1} P_2`.
    pub fn building_block_prediction(&self, order: u32) -> Poly {
        let power = self.lambda_poly().pow(order - 1);
        (&power * &self.gjms(1)).scale(&(fact(order) * fact(order - 1)))
    }

    /// `sum_I n_I M_{2I}` from the expanded building blocks.
    pub fn inversion(&self, blocks: &[Poly], order: u32) -> Poly {
        let mut out = Poly::zero();
        for comp in enumerate(order).expect("order >= 1") {
            let product = comp.entries().iter().fold(Poly::one(), |acc, &k| &acc * &blocks[k as usize]);
            out = &out + &product.scale(&ncoeff(&comp));
        }
        out
    }

    /// `prod_{k=0}^{N-1} (P_2 + lambda k(k+1))`.
    pub fn shifted_product(&self, order: u32) -> Poly {
        let yamabe = self.gjms(1);
        (0..order as i64).fold(Poly::one(), |acc, k| {
            &acc * &(&yamabe + &self.lambda_poly().scale(&int(k * (k + 1))))
        })
    }

    /// `mu_2N = M_2N(1) = sum_I m_I prod P_{2 I_j}(1)`.
    pub fn mu(&self, order: u32) -> Poly {
        let values: Vec<Poly> = (0..=order).map(|k| self.gjms_at_one(k)).collect();
        let mut out = Poly::zero();
        for comp in enumerate(order).expect("order >= 1") {
            let product = comp.entries().iter().fold(Poly::one(), |acc, &k| &acc * &values[k as usize]);
            out = &out + &product.scale(&mcoeff(&comp));
        }
        out
    }

    /// `w_2k`, read off `w(r) = (1 - lambda r^2/4)^{n/2}`.
    pub fn w(&self, k: u32) -> Poly {
        let half = self.n_poly().scale(&rat(1, 2));
        let mut binom = Poly::one();
        for i in 0..k {
            binom = &binom * &(&half - &Poly::constant(int(i as i64)));
        }
        let binom = binom.scale(&(int(1) / fact(k)));
        &binom * &self.lambda_poly().scale(&rat(-1, 4)).pow(k)
    }

    /// `mu_2k` and `w_2k` for `k <= max_order`.
    pub fn constant_data(&self, max_order: u32) -> ConstantData {
        let mut mu = vec![Poly::zero()];
        mu.extend((1..=max_order).map(|k| self.mu(k)));
        ConstantData::new(mu, (0..=max_order).map(|k| self.w(k)).collect())
    }

    /// `Q_2N` through the definition, the explicit formula and the recursion.
    /// All three are computed with formal `n` and then specialized.
    pub fn q_three_ways(&self, order: u32) -> Result<[Poly; 3], ModelError> {
        let data = self.with_formal_n().constant_data(order);
        let by_definition = data.q_from_definition(order)?;
        let explicit = data.q_explicit(order);
        let recursive = data.q_recursive(order).swap_remove(order as usize);
        Ok([by_definition, explicit, recursive].map(|q| self.specialize(&q)))
    }

    /// `w(r)` as a series up to `r^{2K}`.
    pub fn density_series(&self, order: usize) -> TruncatedSeries<Poly> {
        TruncatedSeries::new((0..=order as u32).map(|k| self.w(k)).collect()).expect("nonempty")
    }

    /// `(d^2/dr^2 - (n-1)/r d/dr) w + H_0 w` up to `r^{2K}`, with
    /// `H_0 = sum_N mu_2N (r^2/4)^{N-1} / (N-1)!^2`.
    pub fn generating_function_residual(&self, order: usize) -> TruncatedSeries<Poly> {
        let w = self.density_series(order + 1);
        let potential: Vec<Poly> = (1..=order as u32 + 1)
            .map(|big_n| self.mu(big_n).scale(&(int(1) / (pow2(2 * (big_n - 1)) * fact(big_n - 1) * fact(big_n - 1)))))
            .collect();
        let potential = TruncatedSeries::new(potential).expect("nonempty");
        w.radial_op(&self.n_poly()).add(&potential.mul(&w.truncate(order)))
    }

    /// Every identity of the model up to `max_order`.
    pub fn verify(&self, max_order: u32, series_order: usize) -> Result<Vec<Comparison>, ModelError> {
        let mut out = Vec::new();
        let coefficient = &self.n_poly().scale(&rat(1, 2)) - &Poly::one();
        let yamabe = &Poly::var(laplacian()) - &(&coefficient * &self.scalar_j());
        out.push(Comparison::at("einstein.yamabe", 1, &self.gjms(1), &yamabe));
        let mut blocks = vec![Poly::zero()];
        for order in 1..=max_order {
            let block = self.building_block(order);
            out.push(Comparison::at("einstein.building_block", order, &block, &self.building_block_prediction(order)));
            blocks.push(block);
            let gjms = self.gjms(order);
            out.push(Comparison::at("einstein.inversion", order, &self.inversion(&blocks, order), &gjms));
            out.push(Comparison::at("einstein.shifted_product", order, &self.shifted_product(order), &gjms));
        }
        let data = self.with_formal_n().constant_data(max_order);
        let recursive = data.q_recursive(max_order);
        for order in 1..=max_order {
            let by_definition = self.specialize(&data.q_from_definition(order)?);
            let explicit = self.specialize(&data.q_explicit(order));
            let rec = self.specialize(&recursive[order as usize]);
            out.push(Comparison::at("einstein.q_explicit", order, &explicit, &by_definition));
            out.push(Comparison::at("einstein.q_recursive", order, &rec, &by_definition));
            let (lhs, rhs) = data.basic_recursion_sides(order);
            out.push(Comparison::at("einstein.basic_recursion", order, &self.specialize(&lhs), &self.specialize(&rhs)));
            if order <= 6 {
                let (lhs, rhs) = data.weighted_inversion_sides(order);
                out.push(Comparison::at("einstein.weighted_inversion", order, &self.specialize(&lhs), &self.specialize(&rhs)));
            }
        }
        let residual = self.generating_function_residual(series_order);
        for (k, c) in residual.coeffs().iter().enumerate() {
            out.push(Comparison::at("einstein.generating_function", k as u32, c, &Poly::zero()));
        }
        Ok(out)
    }
}

/// The spectrum of `P_2N` on degree-`l` spherical harmonics of `S^n`:
/// `(-1)^N prod_{j=-N}^{N-1} (l + n/2 + j)`.
pub fn sphere_eigenvalue_oracle(n: i64, degree: i64, order: u32) -> Rational {
    let base = int(degree) + rat(n, 2);
    let product = (-(order as i64)..order as i64).fold(int(1), |acc, j| acc * (&base + int(j)));
    if order.is_multiple_of(2) {
        product
    } else {
        -product
    }
}

impl EinsteinModel {
    /// `P_2N` on degree-`l` harmonics: `Delta` acts as `-l(l+n-1)`.
    pub fn sphere_eigenvalue(n: i64, degree: i64, order: u32) -> Result<Rational, ModelError> {
        let point = EvalPoint::new().with(laplacian(), int(-degree * (degree + n - 1)));
        Ok(EinsteinModel::sphere(n).gjms(order).eval(&point)?)
    }
}
