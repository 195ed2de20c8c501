//! The basis theorem and the straightening engine against the polynomial representation.

use klr::lie::Weight;
use klr::verify::basis::*;

#[test]
fn relations_hold_in_the_polynomial_representation() {
    for theta in [Weight::from_word(&[1, 1, 2]), Weight::from_word(&[1, 2, 3]), Weight::from_word(&[1, 1, 1])] {
        let bad = check_homomorphism(&theta, 2).unwrap();
        assert!(bad.is_empty(), "{theta:?}: {} failures, first {:?}", bad.len(), bad.first());
    }
}

#[test]
fn normal_forms_are_independent() {
    for theta in [Weight::from_word(&[1, 2]), Weight::from_word(&[1, 1, 2]), Weight::from_word(&[1, 2, 1, 2])] {
        let bad = check_basis_weight(&theta, 6).unwrap();
        assert!(bad.is_empty(), "{theta:?}: {bad:?}");
    }
}

#[test]
fn count_examples() {
    // nil-Hecke on two strands: psi (degree -2) plus dots
    assert_eq!(basis_count(&[1, 1], &[1, 1], -2), 1);
    assert_eq!(basis_count(&[1, 1], &[1, 1], 0), 3);
    assert_eq!(basis_count(&[2, 1], &[1, 2], 1), 1);
    assert_eq!(small_weights(2).len(), 3);
}

