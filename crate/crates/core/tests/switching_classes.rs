use std::collections::HashMap;

use proptest::prelude::*;
use seidel_core::oracle::{brute_force_equivalent, brute_force_orbit_key};
use seidel_core::{are_equivalent, canonical_form, char_poly, SeidelMatrix, SwitchingVector};

fn all_of_order(n: usize) -> Vec<SeidelMatrix> {
    (0..1u64 << (n * (n - 1) / 2))
        .map(|c| SeidelMatrix::from_code(n, c).unwrap())
        .collect()
}

#[test]
fn pairwise_agreement_orders_three_and_four() {
    for n in [3usize, 4] {
        let all = all_of_order(n);
        let forms: Vec<_> = all.iter().map(canonical_form).collect();
        for (i, a) in all.iter().enumerate() {
            for (j, b) in all.iter().enumerate() {
                assert_eq!(
                    forms[i] == forms[j],
                    brute_force_equivalent(a, b),
                    "order {n}: {a:?} vs {b:?}"
                );
            }
        }
    }
}

#[test]
fn order_five_matches_orbit_oracle() {
    // Same partition of all 1024 matrices by canonical form and by orbit key.
    let all = all_of_order(5);
    let mut by_form: HashMap<_, Vec<usize>> = HashMap::new();
    let mut by_orbit: HashMap<u64, Vec<usize>> = HashMap::new();
    for (i, s) in all.iter().enumerate() {
        by_form.entry(canonical_form(s)).or_default().push(i);
        by_orbit
            .entry(brute_force_orbit_key(s))
            .or_default()
            .push(i);
    }
    let mut a: Vec<_> = by_form.into_values().collect();
    let mut b: Vec<_> = by_orbit.into_values().collect();
    a.sort();
    b.sort();
    assert_eq!(a.len(), 7);
    assert_eq!(a, b);
}

#[test]
fn equivalent_matrices_share_char_poly() {
    let all = all_of_order(5);
    let mut seen = HashMap::new();
    for s in &all {
        let p = char_poly(s);
        let prev = seen.entry(canonical_form(s)).or_insert_with(|| p.clone());
        assert_eq!(*prev, p);
    }
}

fn matrix_strategy() -> impl Strategy<Value = (SeidelMatrix, SwitchingVector, Vec<usize>)> {
    (2usize..=10).prop_flat_map(|n| {
        let bits = n * (n - 1) / 2;
        (
            (0u64..(1u64 << bits)).prop_map(move |c| SeidelMatrix::from_code(n, c).unwrap()),
            (0u64..(1 << n)).prop_map(move |m| SwitchingVector::from_mask(n, m)),
            Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn canonical_form_is_invariant((s, d, perm) in matrix_strategy()) {
        let form = canonical_form(&s);
        let moved = s.apply_switching(&d).unwrap().permuted(&perm).unwrap();
        prop_assert_eq!(canonical_form(&moved), form.clone());
        prop_assert!(are_equivalent(&s, &moved));
        prop_assert!(are_equivalent(&form.representative(), &s));
    }
}
