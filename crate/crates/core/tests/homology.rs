//! Exactness of the semicuspidal resolutions on graded pieces, with `H_0` compared
//! against the standard module computed by the module engine.

use std::time::Instant;

use klr::linalg::Ring;
use klr::modules::{Character, StandardModule};
use klr::resolution::{build_p_power, Params};
use klr::verify::{homology_dims, homology_dims_multi, SIZE_GUARD};

fn check(p: Params, cutoff: i32, rings: &[Ring]) {
    let c = build_p_power(p).unwrap();
    let delta = StandardModule::delta_power(p.root(), p.m);
    let want = Character::of_standard(&delta, cutoff);
    let start = Instant::now();
    let tables = homology_dims_multi(&c, cutoff, rings, SIZE_GUARD).unwrap();
    eprintln!("{p:?} {:?}", start.elapsed());
    for (h, &ring) in tables.iter().zip(rings) {
        assert!(h.higher_homology().is_empty(), "{p:?} {ring}: {:?}", h.higher_homology());
        let diff = h.h0().differences(&want);
        assert!(diff.is_empty(), "{p:?} {ring}: H_0 differs {diff:?}");
        let diff = h.euler().differences(&want);
        assert!(diff.is_empty(), "{p:?} {ring}: Euler characteristic differs {diff:?}");
    }
}

#[test]
fn cuspidal_resolution_is_exact() {
    let p = Params::new(1, 1, 1).unwrap();
    check(p, 12, &[Ring::Q, Ring::Fp(2)]);
    let h = homology_dims(&build_p_power(p).unwrap(), 8, Ring::Q).unwrap();
    let h0 = h.h0();
    for t in 0..=8 {
        assert_eq!(h0.get(&[1, 2], t), if t % 2 == 0 { 1 } else { 0 });
    }
}

#[test]
fn square_resolution_is_exact() {
    check(Params::new(1, 1, 2).unwrap(), 12, &[Ring::Q, Ring::Fp(2), Ring::Fp(3)]);
}

#[test]
fn simple_root_power_is_exact() {
    check(Params::new(2, 1, 3).unwrap(), 10, &[Ring::Q, Ring::Fp(2)]);
}

#[test]
fn integer_ring_is_rejected() {
    let c = build_p_power(Params::new(1, 1, 1).unwrap()).unwrap();
    assert!(homology_dims(&c, 4, Ring::Z).is_err());
}

#[test]
fn size_guard_triggers() {
    let c = build_p_power(Params::new(1, 1, 2).unwrap()).unwrap();
    assert!(klr::verify::homology::homology_dims_guarded(&c, 12, Ring::Q, 5).is_err());
}

#[test]
fn three_strand_root_is_exact() {
    check(Params::new(1, 2, 1).unwrap(), 12, &[Ring::Q, Ring::Fp(2), Ring::Fp(3)]);
}
