use gjms_compositions::{enumerate, mcoeff, ncoeff, Composition};
use gjms_exact::{factorial, int, Poly, Rational};

use crate::{dimension, ModelError};

pub(crate) fn fact(k: u32) -> Rational {
    Rational::from_integer(factorial(k as u64))
}

pub(crate) fn pow2(k: u32) -> Rational {
    num_traits::pow(int(2), k as usize)
}

/// `n/2 - k` in the formal dimension.
pub(crate) fn half_n_minus(k: i64) -> Poly {
    &Poly::var(dimension()).scale(&Rational::new(1.into(), 2.into())) - &Poly::constant(int(k))
}

fn sign(k: u32) -> Rational {
    if k.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

/// What a constant model knows at a point: the zeroth-order terms
/// `mu_2k = M_2k(1)` and the holographic coefficients `w_2k`, as polynomials
/// in the formal dimension `n` (and possibly other formal parameters).
///
/// In a constant model every operator acts on constants by multiplication,
/// so `M_{2I}(c) = c * prod mu_{2 I_j}`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstantData {
    mu: Vec<Poly>,
    w: Vec<Poly>,
}

impl ConstantData {
    /// `mu[k]` is `mu_2k` for `k >= 1` (index 0 is ignored) and `w[k]` is `w_2k`.
    pub fn new(mu: Vec<Poly>, w: Vec<Poly>) -> ConstantData {
        assert!(mu.len() == w.len() && !w.is_empty(), "mu and w must cover the same orders");
        ConstantData { mu, w }
    }

    pub fn max_order(&self) -> u32 {
        (self.w.len() - 1) as u32
    }

    pub fn mu(&self, k: u32) -> &Poly {
        &self.mu[k as usize]
    }

    pub fn w(&self, k: u32) -> &Poly {
        &self.w[k as usize]
    }

    fn check_order(&self, order: u32) {
        assert!(order >= 1 && order <= self.max_order(), "order {order} outside 1..={}", self.max_order());
    }

    /// `M_{2I}(1) = prod mu_{2 I_j}`; the empty product is 1.
    pub fn mu_product(&self, parts: &[u32]) -> Poly {
        parts.iter().fold(Poly::one(), |acc, &k| &acc * self.mu(k))
    }

    /// `P_2N(1)` through the inversion formula `sum n_I M_{2I}(1)`.
    pub fn gjms_at_one(&self, order: u32) -> Poly {
        self.check_order(order);
        let mut out = Poly::zero();
        for comp in enumerate(order).expect("order >= 1") {
            out = &out + &self.mu_product(comp.entries()).scale(&ncoeff(&comp));
        }
        out
    }

    /// `Q_2N` from `P_2N(1) = (-1)^N (n/2 - N) Q_2N`, dividing exactly in `n`.
    pub fn q_from_definition(&self, order: u32) -> Result<Poly, ModelError> {
        let value = self.gjms_at_one(order);
        // n/2 - N = (n - 2N)/2
        let quotient = value
            .div_exact_linear(dimension(), &int(2 * order as i64))
            .map_err(|_| ModelError::InexactDivision { order })?;
        Ok(quotient.scale(&(int(2) * sign(order))))
    }

    /// `(-1)^N Q_2N = sum_{|I|+a=N} n_{(I,a)} a!(a-1)! 2^{2a} M_{2I}(w_2a)`.
    pub fn q_explicit(&self, order: u32) -> Poly {
        self.check_order(order);
        let mut out = Poly::zero();
        for comp in enumerate(order).expect("order >= 1") {
            let (head, a) = split_last(&comp);
            let weight = ncoeff(&comp) * fact(a) * fact(a - 1) * pow2(2 * a);
            out = &out + &(&self.mu_product(head) * self.w(a)).scale(&weight);
        }
        out.scale(&sign(order))
    }

    /// `P_{2I}(c) / c = prod (-1)^{I_j} (n/2 - I_j) Q_{2 I_j}` from known `Q`s.
    fn gjms_product(&self, parts: &[u32], q: &[Poly]) -> Poly {
        parts.iter().fold(Poly::one(), |acc, &k| {
            &acc * &(&half_n_minus(k as i64) * &q[k as usize]).scale(&sign(k))
        })
    }

    /// `Q_2, ..., Q_2N` solved from the recursion
    /// `sum_{|I|+a=N} m_{(I,a)} (-1)^a P_{2I}(Q_2a) = N!(N-1)! 2^{2N} w_2N`.
    /// Index 0 of the result is unused.
    pub fn q_recursive(&self, max_order: u32) -> Vec<Poly> {
        self.check_order(max_order);
        let mut q = vec![Poly::zero()];
        for order in 1..=max_order {
            let mut rest = Poly::zero();
            for comp in enumerate(order).expect("order >= 1") {
                if comp.len() == 1 {
                    continue;
                }
                let (head, a) = split_last(&comp);
                let term = &self.gjms_product(head, &q) * &q[a as usize];
                rest = &rest + &term.scale(&(mcoeff(&comp) * sign(a)));
            }
            let target = self.w(order).scale(&(fact(order) * fact(order - 1) * pow2(2 * order)));
            // m_{(N)} = 1, so the I = () term is (-1)^N Q_2N.
            q.push((&target - &rest).scale(&sign(order)));
        }
        q
    }

    /// Both sides of
    /// `sum_{k<N} (2^k (N-1)!/(N-1-k)!)^2 M_{2N-2k}(w_2k) = (n/2-N)(N-1)!N! 2^{2N} w_2N`.
    pub fn basic_recursion_sides(&self, order: u32) -> (Poly, Poly) {
        self.check_order(order);
        let mut lhs = Poly::zero();
        for k in 0..order {
            let ratio = pow2(k) * fact(order - 1) / fact(order - 1 - k);
            lhs = &lhs + &(self.mu(order - k) * self.w(k)).scale(&(&ratio * &ratio));
        }
        let rhs = (&half_n_minus(order as i64) * self.w(order)).scale(&(fact(order - 1) * fact(order) * pow2(2 * order)));
        (lhs, rhs)
    }

    /// Both sides of the weighted inversion sum
    /// `sum_I n_I prod_{j>=2} (N - s_j)/(n/2 - s_j) M_{2I}(1) = (n/2-N)(N-1)!N! 2^{2N} w_2N`,
    /// with `s_j = I_j + ... + I_r`, after multiplying by `prod_{k=1}^{N-1} (n/2 - k)`.
    pub fn weighted_inversion_sides(&self, order: u32) -> (Poly, Poly) {
        self.check_order(order);
        let mut lhs = Poly::zero();
        for comp in enumerate(order).expect("order >= 1") {
            let parts = comp.entries();
            let mut tails = Vec::new();
            let mut acc = 0;
            for &p in parts[1..].iter().rev() {
                acc += p;
                tails.push(acc);
            }
            let mut term = self.mu_product(parts).scale(&ncoeff(&comp));
            for k in 1..order {
                if tails.contains(&k) {
                    term = term.scale(&int((order - k) as i64));
                } else {
                    term = &term * &half_n_minus(k as i64);
                }
            }
            lhs = &lhs + &term;
        }
        let (_, mut rhs) = self.basic_recursion_sides(order);
        for k in 1..order {
            rhs = &rhs * &half_n_minus(k as i64);
        }
        (lhs, rhs)
    }

    /// `Q_6 = -3!2!2^6 w_6 - 64 M_2(w_4) - 8 M_4(w_2) - 4 M_2^2(w_2)`.
    pub fn q6_formula(&self) -> Poly {
        self.check_order(3);
        let (mu2, mu4) = (self.mu(1), self.mu(2));
        let terms = [
            self.w(3).scale(&int(-768)),
            (mu2 * self.w(2)).scale(&int(-64)),
            (mu4 * self.w(1)).scale(&int(-8)),
            (&(mu2 * mu2) * self.w(1)).scale(&int(-4)),
        ];
        terms.iter().fold(Poly::zero(), |acc, t| &acc + t)
    }

    /// Both sides of `Q_6 + 2P_2(Q_4) - 2P_4(Q_2) + 3P_2^2(Q_2) = -3!2!2^6 w_6`.
    pub fn q6_recursion_sides(&self, q: &[Poly]) -> (Poly, Poly) {
        self.check_order(3);
        let p = |k: u32| &half_n_minus(k as i64) * &q[k as usize].scale(&sign(k));
        let (p2, p4) = (p(1), p(2));
        let lhs = [
            q[3].clone(),
            (&p2 * &q[2]).scale(&int(2)),
            (&p4 * &q[1]).scale(&int(-2)),
            (&(&p2 * &p2) * &q[1]).scale(&int(3)),
        ]
        .iter()
        .fold(Poly::zero(), |acc, t| &acc + t);
        (lhs, self.w(3).scale(&int(-768)))
    }

    /// The explicit formula for `Q_8` with `M`s acting on constants.
    pub fn q8_formula(&self) -> Poly {
        self.check_order(4);
        let (m2, m4, m6) = (self.mu(1), self.mu(2), self.mu(3));
        let w = |k: u32| self.w(k);
        let terms = [
            w(4).scale(&int(6 * 24 * 256)),
            (m6 * w(1)).scale(&int(4 * 3)),
            (m4 * w(2)).scale(&int(16 * 18)),
            (m2 * w(3)).scale(&int(64 * 36)),
            (&(m4 * m2) * w(1)).scale(&int(4 * 3)),
            (&(m2 * m4) * w(1)).scale(&int(4 * 4)),
            (&(m2 * m2) * w(2)).scale(&int(16 * 6)),
            (&(&(m2 * m2) * m2) * w(1)).scale(&int(4)),
        ];
        terms.iter().fold(Poly::zero(), |acc, t| &acc + t)
    }

    /// Both sides of the recursive formula for `Q_8`.
    pub fn q8_recursion_sides(&self, q: &[Poly]) -> (Poly, Poly) {
        self.check_order(4);
        let p = |k: u32| &half_n_minus(k as i64) * &q[k as usize].scale(&sign(k));
        let (p2, p4, p6) = (p(1), p(2), p(3));
        let lhs = [
            q[4].clone(),
            (&p2 * &q[3]).scale(&int(3)),
            (&p6 * &q[1]).scale(&int(3)),
            (&p4 * &q[2]).scale(&int(-9)),
            (&(&p2 * &p4) * &q[1]).scale(&int(-8)),
            (&(&p2 * &p2) * &q[2]).scale(&int(12)),
            (&(&p4 * &p2) * &q[1]).scale(&int(-12)),
            (&(&(&p2 * &p2) * &p2) * &q[1]).scale(&int(18)),
        ]
        .iter()
        .fold(Poly::zero(), |acc, t| &acc + t);
        (lhs, self.w(4).scale(&int(6 * 24 * 256)))
    }
}

fn split_last(comp: &Composition) -> (&[u32], u32) {
    let parts = comp.entries();
    (&parts[..parts.len() - 1], comp.last())
}
