use gjms_exact::Rational;
use num_traits::{One, Zero};
use rand::Rng;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Lemma1Error {
    #[error("degenerate sample: a partial sum in a denominator vanishes")]
    DegenerateSample,
    #[error("the list of parts must be nonempty")]
    Empty,
}

/// One sample `(K_1..K_s; X, Y)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Lemma1Instance {
    pub parts: Vec<Rational>,
    pub x: Rational,
    pub y: Rational,
}

fn sum(values: &[Rational]) -> Rational {
    values.iter().fold(Rational::zero(), |acc, v| acc + v)
}

/// The alternating subset sum
///
/// ```text
/// Σ_{A ⊆ [s-1]} (-1)^{|A|} Π(block sums, X added to the last block)
///     · Π_{a∈A}(K_a + K_{a+1} + Y·[a = s-1]) / Π_{a∈A}(K_1+..+K_a)(K_{a+1}+..+K_s)
/// ```
///
/// where the blocks are the runs of `K` cut after each element of `A`.
pub fn lemma1_sum(parts: &[Rational], x: &Rational, y: &Rational) -> Result<Rational, Lemma1Error> {
    let s = parts.len();
    if s == 0 {
        return Err(Lemma1Error::Empty);
    }
    for a in 1..s {
        if sum(&parts[..a]).is_zero() || sum(&parts[a..]).is_zero() {
            return Err(Lemma1Error::DegenerateSample);
        }
    }
    let mut total = Rational::zero();
    for mask in 0u64..(1u64 << (s - 1)) {
        let cuts: Vec<usize> = (1..s).filter(|a| mask & (1 << (a - 1)) != 0).collect();
        let mut term = Rational::one();
        let mut start = 0;
        for &end in cuts.iter().chain(std::iter::once(&s)) {
            let mut block = sum(&parts[start..end]);
            if end == s {
                block += x;
            }
            term *= block;
            start = end;
        }
        for &a in &cuts {
            let mut numer = &parts[a - 1] + &parts[a];
            if a == s - 1 {
                numer += y;
            }
            term *= numer / (sum(&parts[..a]) * sum(&parts[a..]));
        }
        if cuts.len() % 2 == 1 {
            term = -term;
        }
        total += term;
    }
    Ok(total)
}

/// The closed form `-(X(K_1+..+K_{s-1}) + Y(K_s+X)) / (K_2+..+K_s)` for `s > 1`,
/// and `K_1 + X` for `s = 1`.
pub fn lemma1_closed_form(parts: &[Rational], x: &Rational, y: &Rational) -> Result<Rational, Lemma1Error> {
    let s = parts.len();
    match s {
        0 => Err(Lemma1Error::Empty),
        1 => Ok(&parts[0] + x),
        _ => {
            let denom = sum(&parts[1..]);
            if denom.is_zero() {
                return Err(Lemma1Error::DegenerateSample);
            }
            let numer = x * sum(&parts[..s - 1]) + y * (&parts[s - 1] + x);
            Ok(-numer / denom)
        }
    }
}

/// Draws a nondegenerate instance with `s` parts; parts, `X` and `Y` are
/// small signed rationals. Degenerate draws are rejected and redrawn.
pub fn random_instance<R: Rng>(rng: &mut R, s: usize) -> Lemma1Instance {
    let draw = |rng: &mut R| Rational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=5).into());
    loop {
        let parts: Vec<Rational> = (0..s).map(|_| draw(rng)).collect();
        let x = draw(rng);
        let y = draw(rng);
        let ok = (1..s).all(|a| !sum(&parts[..a]).is_zero() && !sum(&parts[a..]).is_zero());
        if ok {
            return Lemma1Instance { parts, x, y };
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gjms_exact::int;

    #[test]
    fn two_parts_by_hand() {
        // A = {} gives (1 + 2 + 3); A = {1} gives -(1)(2 + 3)(1 + 2 + 5)/(1·2).
        let parts = [int(1), int(2)];
        let by_hand = int(6) - int(1) * int(5) * int(8) / int(2);
        assert_eq!(lemma1_sum(&parts, &int(3), &int(5)).unwrap(), by_hand);
        assert_eq!(lemma1_closed_form(&parts, &int(3), &int(5)).unwrap(), by_hand);
    }

    #[test]
    fn degenerate_is_rejected() {
        let parts = [int(1), int(-1), int(2)];
        assert_eq!(lemma1_sum(&parts, &int(0), &int(0)), Err(Lemma1Error::DegenerateSample));
    }
}
