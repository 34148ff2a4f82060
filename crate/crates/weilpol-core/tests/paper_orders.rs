//! Overorder structure of the worked examples.

use weilpol_core::arith::poly::ZPoly;
use weilpol_core::arith::Int;
use weilpol_core::etale::make_algebra;
use weilpol_core::orders::{frobenius_order, maximal_order, overorders};

#[test]
fn x8_16_rw_index_and_overorders() {
    let alg = make_algebra(&ZPoly::from_i64(&[16, 0, 0, 0, 0, 0, 0, 0, 1]), &Int::from(2)).unwrap();
    let rw = frobenius_order(&alg);
    let ol = maximal_order(&alg);
    assert_eq!(ol.lat.index_in(&rw.lat), Int::from(256));
    let oo = overorders(&alg, &rw, &ol, &Int::from(1 << 20)).unwrap();
    let indices: Vec<u64> = oo
        .iter()
        .map(|t| u64::try_from(&ol.lat.index_in(&t.lat)).unwrap())
        .collect();
    assert_eq!(
        indices,
        vec![1, 2, 4, 4, 4, 8, 8, 8, 16, 16, 16, 32, 32, 32, 64, 64, 64, 128, 256]
    );
    let stable = oo.iter().filter(|t| t.is_conjugate_stable(&alg)).count();
    assert_eq!(stable, 15);
}

#[test]
fn detailedlowprank_rw_index_and_overorders() {
    let h = ZPoly::from_i64(&[27, -9, 18, -6, 6, -1, 1]);
    let alg = make_algebra(&h, &Int::from(3)).unwrap();
    let rw = frobenius_order(&alg);
    let ol = maximal_order(&alg);
    assert_eq!(ol.lat.index_in(&rw.lat), Int::from(18));
    let oo = overorders(&alg, &rw, &ol, &Int::from(1 << 20)).unwrap();
    // one order per divisor of 18
    let indices: Vec<u64> = oo
        .iter()
        .map(|t| u64::try_from(&ol.lat.index_in(&t.lat)).unwrap())
        .collect();
    assert_eq!(indices, vec![1, 2, 3, 6, 9, 18]);
}
