mod common;

use common::{element, n3, raw_element};
use proptest::prelude::*;
use qgroup::hopf::{BasisStar, HTensor};
use qgroup::rmatrix::UniversalR;
use qgroup::tensor::{BasisAlgebra, BasisHopf, Tensor};
use qgroup::{FElement, HElement};

fn flip(t: &HTensor) -> HTensor {
    let mut out = Tensor::zero(t.field());
    for (k, c) in t.terms() {
        out.add_term([k[1], k[0]], c);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn h_is_a_hopf_algebra(u in raw_element(3, 27), v in raw_element(3, 27), w in raw_element(3, 27)) {
        let h = &n3().pair.h;
        let (u, v, w): (HElement, HElement, HElement) = (element(h, &u), element(h, &v), element(h, &w));
        prop_assert_eq!(h.mul(&h.mul(&u, &v), &w), h.mul(&u, &h.mul(&v, &w)));
        prop_assert_eq!(h.coproduct(&h.mul(&u, &v)), h.tensor_mul(&h.coproduct(&u), &h.coproduct(&v)));
        prop_assert_eq!(h.antipode(&h.mul(&u, &v)), h.mul(&h.antipode(&v), &h.antipode(&u)));
        prop_assert_eq!(h.counit(&h.mul(&u, &v)), &h.counit(&u) * &h.counit(&v));
    }

    #[test]
    fn f_is_a_hopf_algebra(u in raw_element(3, 27), v in raw_element(3, 27), w in raw_element(3, 27)) {
        let f = &n3().pair.f;
        let (u, v, w): (FElement, FElement, FElement) = (element(f, &u), element(f, &v), element(f, &w));
        prop_assert_eq!(f.mul(&f.mul(&u, &v), &w), f.mul(&u, &f.mul(&v, &w)));
        prop_assert_eq!(f.coproduct(&f.mul(&u, &v)), f.tensor_mul(&f.coproduct(&u), &f.coproduct(&v)));
        prop_assert_eq!(f.antipode(&f.mul(&u, &v)), f.mul(&f.antipode(&v), &f.antipode(&u)));
    }

    #[test]
    fn pairing_is_a_duality(x in raw_element(3, 27), y in raw_element(3, 27), u in raw_element(3, 27), v in raw_element(3, 27)) {
        let pair = &n3().pair;
        let (h, f) = (&pair.h, &pair.f);
        let (x, y): (HElement, HElement) = (element(h, &x), element(h, &y));
        let (u, v): (FElement, FElement) = (element(f, &u), element(f, &v));
        prop_assert_eq!(pair.pairing(&h.mul(&x, &y), &u), pair.pairing_tensor(&Tensor::pure(&x, &y), &f.coproduct(&u)));
        prop_assert_eq!(pair.pairing(&x, &f.mul(&u, &v)), pair.pairing_tensor(&h.coproduct(&x), &Tensor::pure(&u, &v)));
        prop_assert_eq!(pair.pairing(&h.antipode(&x), &u), pair.pairing(&x, &f.antipode(&u)));
    }

    #[test]
    fn stars(u in raw_element(3, 27), v in raw_element(3, 27)) {
        let pair = &n3().pair;
        let h = &pair.h;
        let (u, v): (HElement, HElement) = (element(h, &u), element(h, &v));
        prop_assert_eq!(h.star(&h.mul(&u, &v)), h.mul(&h.star(&v), &h.star(&u)));
        prop_assert_eq!(h.coproduct(&h.star(&u)), h.star_tensor(&h.coproduct(&u)));
        prop_assert_eq!(h.twisted_star(&h.twisted_star(&u)), u.clone());
        let s = |x: &HElement| h.antipode(&h.star(x));
        prop_assert_eq!(s(&s(&u)), u);
    }

    #[test]
    fn r_matrix_intertwines_coproducts(u in raw_element(3, 27)) {
        let h = &n3().pair.h;
        let r = UniversalR::new(h).unwrap();
        let u: HElement = element(h, &u);
        let lhs = h.tensor_mul(&h.tensor_mul(&r.value, &h.coproduct(&u)), &r.inverse);
        prop_assert_eq!(lhs, flip(&h.coproduct(&u)));
    }
}

#[test]
fn dimensions() {
    let fx = n3();
    assert_eq!(fx.pair.h.dim(), 27);
    assert_eq!(fx.pair.f.dim(), 27);
    assert_eq!(fx.pair.pairing_rank(), 27);
}
