//! Unit group of the degree-8 field of x^8+16 (= Q(zeta_16)).

use weilpol_core::arith::poly::ZPoly;
use weilpol_core::arith::Int;
use weilpol_core::etale::make_algebra;
use weilpol_core::orders::maximal_order;
use weilpol_core::units::{ppav_count, transversal, unit_group_maximal, UnitSearchConfig};

#[test]
fn zeta16_units() {
    let alg = make_algebra(&ZPoly::from_i64(&[16, 0, 0, 0, 0, 0, 0, 0, 1]), &Int::from(2)).unwrap();
    let ol = maximal_order(&alg);
    let cfg = UnitSearchConfig::default();
    let start = std::time::Instant::now();
    let u = unit_group_maximal(&alg, &ol, &cfg).unwrap();
    std::println!("unit group in {:?}", start.elapsed());
    // Dirichlet: real quartic subfield has rank 3
    assert_eq!(u.rank(), 3);
    // torsion = mu_16
    assert_eq!(u.torsion_order(), 16);
    let t = transversal(&alg, &u);
    std::println!("transversal size {}", t.len());
    let c = ppav_count(&alg, &u);
    std::println!("ppav count O_L: {}", c);
    assert_eq!(c, Int::from(1));
    std::println!("total {:?}", start.elapsed());
}
