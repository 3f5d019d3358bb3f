use patchspec::arith::BigInt;
use patchspec::star::checks::brute_force_v_closure_z;
use patchspec::star::{CatalogDomain, FracElem, FracIdealFG, PrimeDesc};
use proptest::prelude::*;

#[test]
fn closures_over_z() {
    let i = FracIdealFG::parse("ideal over Z: 4, 6").unwrap();
    let two = FracIdealFG::principal(CatalogDomain::IntegersZ, FracElem::integer(2)).unwrap();
    assert!(i.v_closure().unwrap().same_principal(&two).unwrap());
    assert!(i.t_closure().unwrap().same_principal(&two).unwrap());
}

#[test]
fn closures_over_zx() {
    let i = FracIdealFG::parse("ideal over ZX: p=5, X").unwrap();
    assert!(!i.is_t_ideal().unwrap());
    let one = FracIdealFG::principal(CatalogDomain::PolyZX, FracElem::one()).unwrap();
    assert!(i.v_closure().unwrap().same_principal(&one).unwrap());
    let j = FracIdealFG::parse("ideal over ZX: 2*X, 4*X^2").unwrap();
    assert!(j.is_t_ideal().unwrap());
}

#[test]
fn primes_parse_and_classify() {
    let (d, p) = PrimeDesc::parse("prime over ZX: (5, X-2)").unwrap();
    assert_eq!(d, CatalogDomain::PolyZX);
    assert!(!p.is_t_prime(&d).unwrap());
    let (d, u) = PrimeDesc::parse("prime over ZX: upper (X^2+1)").unwrap();
    assert!(u.is_t_prime(&d).unwrap());
    assert!(u.essential_at(&d).unwrap());
}

proptest! {
    #[test]
    fn z_v_closure_is_the_gcd(gens in prop::collection::vec(1i64..200, 1..4)) {
        let elems: Vec<FracElem> = gens.iter().map(|&g| FracElem::integer(g)).collect();
        let i = FracIdealFG::new(CatalogDomain::IntegersZ, elems).unwrap();
        let v = i.v_closure().unwrap();
        let big: Vec<BigInt> = gens.iter().map(|&g| BigInt::from(g)).collect();
        let g = brute_force_v_closure_z(&big, 400).unwrap();
        let want = FracIdealFG::principal(CatalogDomain::IntegersZ, FracElem::integer(g)).unwrap();
        prop_assert!(v.same_principal(&want).unwrap());
        prop_assert!(v.v_closure().unwrap().same_principal(&v).unwrap());
    }
}
