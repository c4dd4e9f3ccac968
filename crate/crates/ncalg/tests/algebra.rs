use gjms_compositions::Composition;
use gjms_exact::{int, rat, Poly, Rational};
use gjms_ncalg::{MuPoly, NCSum, Word};
use proptest::prelude::*;

fn c(entries: &[u32]) -> Composition {
    Composition::new(entries.to_vec()).unwrap()
}

fn one_word(left: &[u32], right: &[u32]) -> NCSum {
    NCSum::term(Word::from_parts(left, right), int(1))
}

#[test]
fn left_and_right_multiplication() {
    let w = one_word(&[2], &[]).mul_left(&c(&[1]));
    assert_eq!(w, one_word(&[1, 2], &[]));
    let w = one_word(&[], &[1]).mul_right(&c(&[3]));
    assert_eq!(w, one_word(&[], &[1, 3]));
    let two = one_word(&[2], &[]).add(&one_word(&[], &[1]).scale_rational(&int(5)));
    let expected = one_word(&[4, 2], &[]).add(&one_word(&[4], &[1]).scale_rational(&int(5)));
    assert_eq!(two.mul_left(&c(&[4])), expected);
}

#[test]
fn adjoint_examples() {
    assert_eq!(one_word(&[1, 2], &[]).adjoint(), one_word(&[2, 1], &[]));
    assert_eq!(one_word(&[1], &[2]).adjoint(), one_word(&[2], &[1]));
    assert_eq!(one_word(&[], &[1, 3]).adjoint(), one_word(&[], &[3, 1]));
}

#[test]
fn sigma_examples() {
    assert_eq!(one_word(&[3], &[5]).sigma(), one_word(&[5], &[3]));
    assert_eq!(one_word(&[1, 2], &[3]).sigma(), one_word(&[3], &[2, 1]));
    assert_eq!(one_word(&[1, 2], &[]).sigma(), one_word(&[], &[2, 1]));
}

#[test]
fn reflection_twice_is_identity() {
    let mut p = MuPoly::zero();
    p.add_scalar_times(&[int(1), rat(2, 3), int(-4), int(7)], &one_word(&[1], &[2]));
    p.add_scalar_times(&[int(0), int(1)], &one_word(&[3], &[]));
    assert_eq!(p.reflect().reflect(), p);
    assert_eq!(p.reflect().eval(&int(2)), p.eval(&rat(-5, 2)));
}

#[test]
fn poly_coefficients_form_a_module() {
    let a = Poly::named("n");
    let b = &Poly::named("lambda") - &Poly::from(3);
    let mut w: NCSum<Poly> = NCSum::term(Word::from_parts(&[1], &[]), Poly::from(2));
    w.add_term(Word::from_parts(&[], &[2]), Poly::named("n"));
    let lhs = w.scale(&(&a + &b));
    let rhs = w.scale(&a).add(&w.scale(&b));
    assert_eq!(lhs, rhs);
    assert!(lhs.to_string().contains("P2"));
}

#[test]
fn composition_of_sums_is_bilinear() {
    let p2 = one_word(&[1], &[]);
    let m4 = one_word(&[2], &[]).sub(&one_word(&[1, 1], &[]));
    let product = p2.compose(&m4).unwrap();
    assert_eq!(product, one_word(&[1, 2], &[]).sub(&one_word(&[1, 1, 1], &[])));
    assert!(one_word(&[1], &[1]).compose(&one_word(&[1], &[])).is_err());
}

fn word() -> impl Strategy<Value = Word> {
    (prop::collection::vec(1u32..4, 0..3), prop::collection::vec(1u32..4, 0..3))
        .prop_map(|(l, r)| Word::from_parts(&l, &r))
}

fn sum() -> impl Strategy<Value = NCSum> {
    prop::collection::vec((word(), -5i64..6, 1i64..4), 0..6).prop_map(|terms| {
        let mut out = NCSum::zero();
        for (w, n, d) in terms {
            out.add_term(w, rat(n, d));
        }
        out
    })
}

proptest! {
    #[test]
    fn involutions(s in sum()) {
        prop_assert_eq!(s.adjoint().adjoint(), s.clone());
        prop_assert_eq!(s.sigma().sigma(), s.clone());
    }

    #[test]
    fn involutions_commute_with_scaling(s in sum(), k in -6i64..7) {
        let factor = int(k);
        prop_assert_eq!(s.scale_rational(&factor).adjoint(), s.adjoint().scale_rational(&factor));
        prop_assert_eq!(s.scale_rational(&factor).sigma(), s.sigma().scale_rational(&factor));
    }

    #[test]
    fn construction_order_does_not_matter(s in sum(), t in sum()) {
        prop_assert_eq!(s.add(&t), t.add(&s));
        prop_assert!(s.add(&t).sub(&t).sub(&s).is_zero());
    }

    #[test]
    fn scalar_distributivity(s in sum(), a in -5i64..5, b in 1i64..5) {
        let (x, y) = (int(a), rat(1, b));
        let lhs = s.scale_rational(&(&x + &y));
        prop_assert_eq!(lhs, s.scale_rational(&x).add(&s.scale_rational(&y)));
    }

    #[test]
    fn evaluation_matches_substitution(s in sum(), t in sum(), at in -4i64..4) {
        let mut p = MuPoly::zero();
        p.add_scalar_times(&[int(1), int(2)], &s);
        p.add_scalar_times(&[int(0), int(0), rat(1, 3)], &t);
        let shifted = p.substitute_affine(&int(1), &int(at));
        prop_assert_eq!(shifted.eval(&Rational::from_integer(0.into())), p.eval(&int(at)));
    }
}
