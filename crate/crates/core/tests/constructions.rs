//! Morphic constructions checked through the public API, including the
//! doubling map `mu` applied on top of vendored morphisms.

use pseudoperiodic::search::{image_prefix, inventory_entry, verify_construction};
use pseudoperiodic::{apply_morphism, first_violation, is_pseudoperiod, Exponent, PpTuple, Sequence};

fn pp(entries: &[usize]) -> PpTuple {
    PpTuple::new(entries.to_vec()).unwrap()
}

#[test]
fn doubled_h_1_6_on_vtm() {
    let mu = inventory_entry("mu").unwrap().morphism;
    let h = inventory_entry("h_1_6").unwrap();
    assert_eq!(h.base, Sequence::TernaryThueMorse);
    let doubled = mu.compose(&h.morphism).unwrap();
    let e: Exponent = "7/3+".parse().unwrap();
    let rep = verify_construction(&doubled, h.base, &pp(&[2, 12]), &e, 10_000).unwrap();
    assert!(rep.passed(), "{rep:?}");
    // and the undoubled word carries the halved tuple
    let rep = verify_construction(&h.morphism, h.base, &pp(&[1, 6]), &e, 5_000).unwrap();
    assert!(rep.passed(), "{rep:?}");
}

#[test]
fn doubled_sha3_on_thue_morse() {
    let mu = inventory_entry("mu").unwrap().morphism;
    let sha3 = inventory_entry("sha3").unwrap();
    let doubled = mu.compose(&sha3.morphism).unwrap();
    let e: Exponent = "3+".parse().unwrap();
    let rep = verify_construction(&doubled, sha3.base, &pp(&[2, 10]), &e, 10_000).unwrap();
    assert!(rep.passed(), "{rep:?}");
}

#[test]
fn composition_agrees_with_applying_twice() {
    let mu = inventory_entry("mu").unwrap().morphism;
    let sha3 = inventory_entry("sha3").unwrap();
    let once = image_prefix(&sha3.morphism, sha3.base, 3_000).unwrap();
    let twice = apply_morphism(&mu, &once).unwrap();
    let composed = image_prefix(&mu.compose(&sha3.morphism).unwrap(), sha3.base, 6_000).unwrap();
    assert_eq!(twice, composed);
}

#[test]
fn doubling_does_not_keep_the_original_tuple() {
    // mu(w) has (2a, 2b) but in general not (a, b)
    let mu = inventory_entry("mu").unwrap().morphism;
    let sha3 = inventory_entry("sha3").unwrap();
    let w = image_prefix(&mu.compose(&sha3.morphism).unwrap(), sha3.base, 4_000).unwrap();
    assert!(is_pseudoperiod(&w, &pp(&[2, 10])));
    assert!(first_violation(&w, &pp(&[1, 5])).is_some());
}
