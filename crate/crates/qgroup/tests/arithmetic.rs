mod common;

use common::{n3, raw_element, raw_scalar, scalar, RawElement};
use proptest::prelude::*;
use qgroup::{CycField, CycScalar, Plane};

fn plane3(raw: &RawElement) -> qgroup::PlaneElement {
    common::plane(&n3().field, raw)
}

proptest! {
    #[test]
    fn field_axioms(a in raw_scalar(5), b in raw_scalar(5), c in raw_scalar(5)) {
        let f = CycField::new(5).unwrap();
        let (a, b, c) = (scalar(&f, &a), scalar(&f, &b), scalar(&f, &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn conjugation(a in raw_scalar(3), b in raw_scalar(3)) {
        let f = &n3().field;
        let (a, b) = (scalar(f, &a), scalar(f, &b));
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
    }

    #[test]
    fn plane_associative(a in raw_element(3, 9), b in raw_element(3, 9), c in raw_element(3, 9)) {
        let (a, b, c) = (plane3(&a), plane3(&b), plane3(&c));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn plane_star(a in raw_element(3, 9), b in raw_element(3, 9)) {
        let (a, b) = (plane3(&a), plane3(&b));
        prop_assert_eq!(a.star().star(), a.clone());
        prop_assert_eq!(a.mul(&b).star(), b.star().mul(&a.star()));
    }

    #[test]
    fn plane_vector_roundtrip(a in raw_element(3, 9)) {
        let p = Plane::new(&n3().field);
        let a = plane3(&a);
        prop_assert_eq!(p.from_vector(&p.to_vector(&a)), a);
    }
}

#[test]
fn q_is_primitive() {
    for n in [3u32, 5, 7] {
        let f = CycField::new(n).unwrap();
        let q = CycScalar::q(&f);
        for k in 1..n as i64 {
            assert!(!q.pow(k).unwrap().is_one());
        }
        assert!(q.pow(n as i64).unwrap().is_one());
    }
    assert!(CycField::new(4).is_err());
    assert!(CycField::new(1).is_err());
}
