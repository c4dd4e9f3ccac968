use gjms_exact::univariate::{build_eta, coeffs_padded};
use gjms_exact::{int, rat, Rational};
use gjms_identities::p_word;
use gjms_ncalg::{MuPoly, NCSum, Word};
use gjms_residue::checks::{
    check_factorizations, leading_prediction, sigma_residual, subleading_factor, subleading_prediction, swap_residual,
    Side,
};
use gjms_residue::{build_closed, build_direct, family, normalizer};

#[test]
fn order_one_by_hand() {
    // D_2(μ) = 2μ(P2 - Pbar2) + P2
    let p2 = NCSum::term(Word::from_parts(&[1], &[]), int(1));
    let pbar2 = NCSum::term(Word::from_parts(&[], &[1]), int(1));
    let expected = MuPoly::from_coeffs(vec![p2.clone(), p2.sub(&pbar2).scale_rational(&int(2))]);
    assert_eq!(build_direct(1), expected);
    assert_eq!(build_closed(1), expected);
}

#[test]
fn direct_equals_closed() {
    for order in 1..=6 {
        assert_eq!(build_direct(order), build_closed(order), "N={order}");
    }
}

#[test]
fn degree_and_constant_term() {
    for order in 1..=6u32 {
        let d = build_direct(order);
        assert!(d.degree().unwrap() < 2 * order as usize);
        assert_eq!(d.coeff(0), p_word(order), "N={order}");
    }
}

#[test]
fn multiplicity_of_the_top_gjms_operator() {
    for order in 1..=6u32 {
        let d = build_direct(order);
        let word = Word::from_parts(&[order], &[]);
        let observed: Vec<Rational> =
            d.coeffs().iter().map(|c| c.coeff(&word).cloned().unwrap_or_else(|| int(0))).collect();
        let len = observed.len();
        let expected: Vec<Rational> =
            coeffs_padded(&build_eta(order), len).into_iter().map(|e| -normalizer(order) * e).collect();
        assert_eq!(observed, expected, "N={order}");
    }
}

#[test]
fn factorizations_hold() {
    for order in 1..=6u32 {
        let all = check_factorizations(order);
        assert_eq!(all.len(), 2 * order as usize);
        for f in &all {
            assert!(f.holds(), "N={} j={} side={}: {}", f.order, f.j, f.side, f.residual);
        }
    }
}

#[test]
fn small_factorizations_explicitly() {
    // N=1, j=1, left: D_2(0) = P2 i*.
    assert_eq!(build_closed(1).eval(&int(0)), p_word(1));
    // N=2, j=1, right: D_4(-3/2) = D_2(-5/2) Pbar2.
    let lhs = build_closed(2).eval(&rat(-3, 2));
    let rhs = family(1).eval(&rat(-5, 2)).mul_right(&gjms_compositions::Composition::single(1));
    assert_eq!(lhs, rhs);
    assert!(check_factorizations(2).iter().any(|f| f.side == Side::Right && f.j == 1 && f.holds()));
}

#[test]
fn sigma_symmetry() {
    for order in 1..=6 {
        assert!(sigma_residual(&build_closed(order)).is_zero(), "N={order}");
    }
}

#[test]
fn unreversed_exchange_is_not_a_symmetry() {
    // Below N = 3 every word is a palindrome, so the reversal is invisible.
    assert!(swap_residual(&build_closed(2)).is_zero());
    for order in 3..=5 {
        assert!(!swap_residual(&build_closed(order)).is_zero(), "N={order}");
    }
}

#[test]
fn leading_and_subleading_coefficients() {
    for order in 1..=6u32 {
        let d = build_closed(order);
        let top = 2 * order as usize - 1;
        assert_eq!(d.coeff(top), leading_prediction(order), "A, N={order}");
        let observed = d.coeff(top - 1).scale_rational(&subleading_factor(order));
        assert_eq!(observed, subleading_prediction(order), "B, N={order}");
    }
}
