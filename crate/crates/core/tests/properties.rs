mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;
use skyline::involution::{classify_via_row_walk, phi_row_descending};
use skyline::{
    classify, derived_fillings, enumerate_ssf, inverse_derived, key_recursive, phi, phi_row, pi,
    validate_filling, weight, Cell, Composition, EntryClass, ExponentVector, Filling, Polynomial,
};

use common::{brute_force_ssf, classify_by_definition, is_ssf, weight_of, Kind};

fn family() -> Vec<Composition> {
    Composition::family(4, 3)
}

fn kinds_of(f: &Filling, t: u32) -> BTreeMap<(usize, usize), Kind> {
    classify(f, t)
        .unwrap()
        .iter()
        .map(|(c, k)| {
            let kind = match k {
                EntryClass::Paired => Kind::Paired,
                EntryClass::PseudoFree { .. } => Kind::PseudoFree,
                EntryClass::Free => Kind::Free,
            };
            ((c.row - 1, c.col - 1), kind)
        })
        .collect()
}

#[test]
fn enumeration_matches_brute_force_in_canonical_order() {
    for alpha in family() {
        let got: Vec<Vec<Vec<u32>>> = enumerate_ssf(&alpha)
            .iter()
            .map(|f| f.rows().to_vec())
            .collect();
        let mut want = brute_force_ssf(alpha.parts());
        want.sort_by_key(|rows| std::cmp::Reverse(rows.concat()));
        assert_eq!(got, want, "alpha {alpha}");
    }
}

#[test]
fn classifiers_agree_with_definition() {
    for alpha in family() {
        for f in enumerate_ssf(&alpha) {
            for t in 1..alpha.len() as u32 {
                assert_eq!(
                    kinds_of(&f, t),
                    classify_by_definition(f.rows(), t),
                    "{:?} t={t}",
                    f.rows()
                );
                assert_eq!(
                    classify(&f, t).unwrap(),
                    classify_via_row_walk(&f, t).unwrap()
                );
            }
        }
    }
}

#[test]
fn phi_keeps_paired_and_pseudo_free_entries() {
    for alpha in family() {
        let n = alpha.len();
        for f in enumerate_ssf(&alpha) {
            for t in 1..n as u32 {
                let before = classify_by_definition(f.rows(), t);
                for r in t as usize + 1..=n {
                    let image = phi(&f, r, t).unwrap();
                    let after = classify_by_definition(image.rows(), t);
                    let locked = |m: &BTreeMap<(usize, usize), Kind>, k: Kind| {
                        m.iter()
                            .filter(|(_, v)| **v == k)
                            .map(|(c, _)| *c)
                            .collect::<Vec<_>>()
                    };
                    assert_eq!(locked(&before, Kind::Paired), locked(&after, Kind::Paired));
                    let pseudo = locked(&before, Kind::PseudoFree);
                    assert_eq!(pseudo, locked(&after, Kind::PseudoFree));
                    for (i, j) in pseudo {
                        assert_eq!(f.rows()[i][j], image.rows()[i][j]);
                    }
                }
            }
        }
    }
}

#[test]
fn phi_exchanges_weights_of_t_and_t_plus_one() {
    for alpha in family() {
        let n = alpha.len();
        for f in enumerate_ssf(&alpha) {
            for t in 1..n as u32 {
                for r in t as usize + 1..=n {
                    let image = phi(&f, r, t).unwrap();
                    let (a, b) = (weight_of(f.rows(), n), weight_of(image.rows(), n));
                    let t = t as usize;
                    for v in 0..n {
                        if v + 1 != t && v != t {
                            assert_eq!(a[v], b[v]);
                        }
                    }
                    assert_eq!(a[t - 1] + a[t], b[t - 1] + b[t]);
                    assert_eq!(weight(&image).exponents(), b.as_slice());
                }
            }
        }
    }
}

#[test]
fn row_involution_is_order_independent() {
    for alpha in family() {
        for f in enumerate_ssf(&alpha) {
            for r in 1..alpha.len() {
                let image = phi_row(&f, r).unwrap();
                assert_eq!(phi_row_descending(&f, r).unwrap(), image);
                assert_eq!(phi_row(&image, r).unwrap(), f);
            }
        }
    }
}

/// Key polynomial recursing through the largest ascent instead of the
/// smallest one.
fn key_via_largest_ascent(parts: &[usize]) -> Polynomial {
    match parts.windows(2).rposition(|w| w[0] < w[1]) {
        None => Polynomial::monomial(
            ExponentVector::new(parts.iter().map(|&p| p as u32).collect()),
            1,
        ),
        Some(i) => {
            let mut swapped = parts.to_vec();
            swapped.swap(i, i + 1);
            pi(&key_via_largest_ascent(&swapped), i + 1).unwrap()
        }
    }
}

#[test]
fn key_does_not_depend_on_ascent_choice() {
    for alpha in family() {
        assert_eq!(
            key_via_largest_ascent(alpha.parts()),
            key_recursive(&alpha),
            "alpha {alpha}"
        );
    }
}

#[test]
fn pi_identity_in_pair_form() {
    // summing pi_r(x^F' + x^{Phi F'}) over all F' counts every F twice
    for alpha in family().into_iter().filter(|a| !a.is_partition()) {
        let n = alpha.len();
        let r = skyline::first_ascent(&alpha).unwrap();
        let mut lhs = Polynomial::zero(n);
        for src in enumerate_ssf(&alpha.swapped(r).unwrap()) {
            let pair = Polynomial::monomial(weight(&src), 1)
                + Polynomial::monomial(weight(&phi_row(&src, r).unwrap()), 1);
            lhs = lhs + pi(&pair, r).unwrap();
        }
        let mut rhs = Polynomial::zero(n);
        for rows in brute_force_ssf(alpha.parts()) {
            rhs.add_term(ExponentVector::new(weight_of(&rows, n)), 2);
        }
        assert_eq!(lhs, rhs, "alpha {alpha}");
    }
}

#[test]
fn inverse_derived_recovers_every_filling() {
    for alpha in family().into_iter().filter(|a| !a.is_partition()) {
        for f in enumerate_ssf(&alpha) {
            let (src, k) = inverse_derived(&f, &alpha).unwrap();
            assert_eq!(derived_fillings(&src, &alpha).unwrap().members[k], f);
        }
    }
}

fn arbitrary_rows() -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(1u32..=4, 0..=3), 1..=4)
}

proptest! {
    #[test]
    fn validation_matches_oracle(rows in arbitrary_rows()) {
        let f = Filling::from_rows(rows.clone()).unwrap();
        prop_assert_eq!(validate_filling(&f).is_ok(), is_ssf(&rows));
        prop_assert_eq!(f.is_semistandard(), is_ssf(&rows));
    }

    #[test]
    fn text_and_json_round_trip(rows in arbitrary_rows()) {
        let f = Filling::from_rows(rows).unwrap();
        prop_assert_eq!(f.to_string().parse::<Filling>().unwrap(), f.clone());
        let json = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(serde_json::from_str::<Filling>(&json).unwrap(), f);
    }
}

#[test]
fn cell_display() {
    assert_eq!(Cell { row: 7, col: 2 }.to_string(), "(7,2)");
}
