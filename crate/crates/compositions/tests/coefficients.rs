use gjms_compositions::known::{M_TABLE, N_TABLE};
use gjms_compositions::{
    enumerate, first_entry_relation, last_entry_relation, mcoeff, ncoeff, ncoeff_reduced, Composition,
};
use gjms_exact::{binomial, int, Rational};
use num_traits::Signed;
use proptest::prelude::*;

fn c(entries: &[u32]) -> Composition {
    Composition::new(entries.to_vec()).unwrap()
}

fn all_up_to(max: u32) -> Vec<Composition> {
    (1..=max).flat_map(|n| enumerate(n).unwrap()).collect()
}

#[test]
fn enumeration_counts() {
    assert_eq!(enumerate(1).unwrap(), vec![c(&[1])]);
    let three = enumerate(3).unwrap();
    assert_eq!(three.len(), 4);
    for expected in [c(&[3]), c(&[1, 2]), c(&[2, 1]), c(&[1, 1, 1])] {
        assert!(three.contains(&expected));
    }
    for n in 1..=12u32 {
        let all = enumerate(n).unwrap();
        assert_eq!(all.len(), 1 << (n - 1));
        assert!(all.iter().all(|comp| comp.size() == n));
        assert!(all.windows(2).all(|w| w[0] < w[1]), "sorted and distinct");
    }
    assert_eq!(enumerate(10).unwrap().len(), 512);
}

#[test]
fn published_m_coefficients() {
    for (entries, value) in M_TABLE {
        assert_eq!(mcoeff(&c(entries)), int(*value), "m_{entries:?}");
    }
}

#[test]
fn published_n_coefficients() {
    for (entries, value) in N_TABLE {
        assert_eq!(ncoeff(&c(entries)), int(*value), "n_{entries:?}");
    }
}

#[test]
fn one_part_coefficients_are_one() {
    for n in 1..=15 {
        assert_eq!(mcoeff(&Composition::single(n)), int(1));
        assert_eq!(ncoeff(&Composition::single(n)), int(1));
    }
}

#[test]
fn sign_and_integrality() {
    for comp in all_up_to(12) {
        let m = mcoeff(&comp);
        assert!(m.is_integer(), "m_{comp} = {m}");
        let expected_negative = comp.len() % 2 == 0;
        assert_eq!(m.is_negative(), expected_negative, "sign of m_{comp}");
        let n = ncoeff(&comp);
        assert!(n.is_integer() && n.is_positive(), "n_{comp} = {n}");
    }
}

#[test]
fn reversal_invariance() {
    for comp in all_up_to(12) {
        assert_eq!(mcoeff(&comp.reversed()), mcoeff(&comp));
        assert_eq!(ncoeff(&comp.reversed()), ncoeff(&comp));
        assert_eq!(comp.reversed().reversed(), comp);
    }
}

#[test]
fn two_forms_of_n_agree() {
    for comp in all_up_to(12) {
        assert_eq!(ncoeff(&comp), ncoeff_reduced(&comp), "{comp}");
    }
}

#[test]
fn two_part_identity() {
    for n in 2..=14u32 {
        for first in 1..n {
            let comp = c(&[first, n - first]);
            let expected = -Rational::from_integer(binomial(n as u64 - 1, first as u64) * binomial(n as u64 - 1, (n - first) as u64));
            assert_eq!(mcoeff(&comp), expected);
            assert_eq!(mcoeff(&comp), -ncoeff(&comp));
        }
    }
}

#[test]
fn quadratic_relations_on_first_and_last_entry() {
    for comp in all_up_to(10) {
        let (lhs, rhs) = first_entry_relation(&comp);
        assert_eq!(lhs, rhs, "first-entry relation at {comp}");
        let (lhs, rhs) = last_entry_relation(&comp);
        assert_eq!(lhs, rhs, "last-entry relation at {comp}");
        assert_eq!(last_entry_relation(&comp).0, first_entry_relation(&comp.reversed()).0);
    }
}

fn composition() -> impl Strategy<Value = Composition> {
    prop::collection::vec(1u32..5, 1..6).prop_map(|v| Composition::new(v).unwrap())
}

proptest! {
    #[test]
    fn reversal_is_an_involution(comp in composition()) {
        prop_assert_eq!(comp.reversed().reversed(), comp.clone());
        prop_assert_eq!(comp.reversed().size(), comp.size());
        prop_assert_eq!(comp.reversed().first(), comp.last());
    }

    #[test]
    fn concat_then_split(a in composition(), b in composition()) {
        let joined = a.concat(&b);
        prop_assert_eq!(joined.split_at(a.len()), (a.clone(), b.clone()));
        prop_assert_eq!(joined.size(), a.size() + b.size());
    }
}
