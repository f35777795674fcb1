mod common;

use std::sync::OnceLock;

use common::{element, form, n3, plane, raw_element, RawElement};
use proptest::prelude::*;
use qgroup::action::PlaneAction;
use qgroup::diffops::DiffOps;
use qgroup::gauge::{check_curvature_is_multiplication, check_shift, covariant, curvature, hermitian_constraints, Connection};
use qgroup::repcat::Representation;
use qgroup::{HElement, WzForm};

fn ops() -> &'static DiffOps {
    static CELL: OnceLock<DiffOps> = OnceLock::new();
    CELL.get_or_init(|| DiffOps::new(&n3().wz))
}

fn omega_rep() -> &'static Representation {
    static CELL: OnceLock<Representation> = OnceLock::new();
    CELL.get_or_init(|| n3().wz.h_action(&PlaneAction::new(&n3().pair)))
}

fn f3(raw: &RawElement) -> WzForm {
    form(&n3().field, raw)
}

fn one_form(a: &RawElement, b: &RawElement) -> WzForm {
    let f = &n3().field;
    WzForm::one_form(&plane(f, a), &plane(f, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graded_algebra(a in raw_element(3, 36), b in raw_element(3, 36), c in raw_element(3, 36)) {
        let wz = &n3().wz;
        let (a, b, c) = (f3(&a), f3(&b), f3(&c));
        prop_assert_eq!(wz.mul(&wz.mul(&a, &b), &c), wz.mul(&a, &wz.mul(&b, &c)));
        prop_assert!(wz.leibniz_defect(&a, &b).is_zero());
        prop_assert!(wz.d(&wz.d(&a)).is_zero());
        prop_assert_eq!(wz.from_vector(&wz.to_vector(&a)), a);
    }

    #[test]
    fn star_on_forms(a in raw_element(3, 36), b in raw_element(3, 36)) {
        let wz = &n3().wz;
        let (a, b) = (f3(&a), f3(&b));
        prop_assert_eq!(wz.star(&wz.star(&a)), a.clone());
        prop_assert_eq!(wz.star(&wz.mul(&a, &b)), wz.mul(&wz.star(&b), &wz.star(&a)));
        for p in 0..3 {
            let ap = a.grade(p);
            let lhs = wz.d(&wz.star(&ap));
            let rhs = wz.star(&wz.d(&ap));
            prop_assert_eq!(lhs, if p % 2 == 0 { rhs } else { rhs.neg() });
        }
    }

    #[test]
    fn action_commutes_with_d(u in raw_element(3, 27), a in raw_element(3, 36)) {
        let fx = n3();
        let wz = &fx.wz;
        let u: HElement = element(&fx.pair.h, &u);
        let m = omega_rep().rho(&fx.pair.h, &u);
        let a = f3(&a);
        let act = |w: &WzForm| wz.from_vector(&m.apply(&wz.to_vector(w)));
        prop_assert_eq!(act(&wz.d(&a)), wz.d(&act(&a)));
    }

    #[test]
    fn d_in_right_coefficients(z in raw_element(3, 9)) {
        let fx = n3();
        let wz = &fx.wz;
        let ops = ops();
        let z = plane(&fx.field, &z);
        let dz = wz.mul(&WzForm::dx(&fx.field), &WzForm::function(&ops.apply(ops.partial_x(), &z)))
            .add(&wz.mul(&WzForm::dy(&fx.field), &WzForm::function(&ops.apply(ops.partial_y(), &z))));
        prop_assert_eq!(wz.d(&WzForm::function(&z)), dz);
    }

    #[test]
    fn curvature_of_random_connections(a in raw_element(3, 9), b in raw_element(3, 9), g in raw_element(3, 9), psi in raw_element(3, 36), lam in raw_element(3, 36)) {
        let fx = n3();
        let wz = &fx.wz;
        let conn = Connection::new(one_form(&a, &b)).unwrap();
        let rho = curvature(wz, &conn).unwrap();
        let (psi, lam) = (f3(&psi), f3(&lam));
        let nn = |w: &WzForm| covariant(wz, &conn, &covariant(wz, &conn, w));
        prop_assert_eq!(nn(&psi), wz.mul(rho.rho(), &psi));
        prop_assert_eq!(nn(&wz.mul(&psi, &lam)), wz.mul(&nn(&psi), &lam));
        prop_assert!(check_shift(wz, &conn, &WzForm::function(&plane(&fx.field, &g))).is_ok());
    }

    #[test]
    fn hermitian_part_satisfies_constraints(a in raw_element(3, 9), b in raw_element(3, 9)) {
        let fx = n3();
        let wz = &fx.wz;
        let hc = hermitian_constraints(wz);
        let phi = one_form(&a, &b);
        let herm = phi.add(&wz.star(&phi));
        let d = wz.plane().dim();
        prop_assert!(hc.satisfied_by(&wz.to_vector(&herm)[d..3 * d]));
    }
}

#[test]
fn worked_connections() {
    let fx = n3();
    let wz = &fx.wz;
    let p = wz.plane();
    let zero = qgroup::PlaneElement::zero(&fx.field);
    let flat = Connection::new(WzForm::one_form(&p.x(), &zero)).unwrap();
    assert!(curvature(wz, &flat).unwrap().is_zero());
    check_curvature_is_multiplication(wz, &flat).unwrap();
    assert!(Connection::new(WzForm::two_form(&p.x())).is_err());
}

#[test]
fn complex_dimensions() {
    for n in [3u32, 5, 7] {
        let f = qgroup::CycField::new(n).unwrap();
        let wz = qgroup::WzComplex::new(&f);
        let nn = (n * n) as usize;
        assert_eq!(wz.dims(), (nn, 2 * nn, nn));
        let (h0, h1, h2) = wz.cohomology();
        assert!(h0 >= 1);
        assert_eq!(h0 as i64 - h1 as i64 + h2 as i64, 0, "Euler characteristic at N={n}");
    }
}
