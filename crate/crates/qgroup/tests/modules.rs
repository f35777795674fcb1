mod common;

use std::sync::OnceLock;

use common::{element, n3, plane, raw_element};
use proptest::prelude::*;
use qgroup::action::{Coactions, PlaneAction};
use qgroup::hopf::BasisStar;
use qgroup::invariant::PlaneProduct;
use qgroup::repcat::{decompose_named, Catalog};
use qgroup::tensor::{BasisAlgebra, BasisHopf, Element};
use qgroup::{CycScalar, HAlgebra, HElement, PlaneElement};

fn action() -> &'static PlaneAction {
    static CELL: OnceLock<PlaneAction> = OnceLock::new();
    CELL.get_or_init(|| PlaneAction::new(&n3().pair))
}

fn product() -> &'static PlaneProduct {
    static CELL: OnceLock<PlaneProduct> = OnceLock::new();
    CELL.get_or_init(|| PlaneProduct::new(&n3().pair).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn module_algebra(u in raw_element(3, 27), z in raw_element(3, 9), w in raw_element(3, 9)) {
        let fx = n3();
        let h = &fx.pair.h;
        let act = action();
        let u: HElement = element(h, &u);
        let (z, w) = (plane(&fx.field, &z), plane(&fx.field, &w));
        let mut rhs = PlaneElement::zero(&fx.field);
        for (k, c) in h.coproduct(&u).terms() {
            let a = act.act(&Element::basis(&fx.field, k[0]), &z);
            let b = act.act(&Element::basis(&fx.field, k[1]), &w);
            rhs = rhs.add(&a.mul(&b).scale(c));
        }
        prop_assert_eq!(act.act(&u, &z.mul(&w)), rhs);
    }

    #[test]
    fn action_is_a_representation(u in raw_element(3, 27), v in raw_element(3, 27), z in raw_element(3, 9)) {
        let fx = n3();
        let h = &fx.pair.h;
        let (u, v): (HElement, HElement) = (element(h, &u), element(h, &v));
        let z = plane(&fx.field, &z);
        prop_assert_eq!(action().act(&h.mul(&u, &v), &z), action().act(&u, &action().act(&v, &z)));
    }

    #[test]
    fn coaction_is_multiplicative(z in raw_element(3, 9), w in raw_element(3, 9)) {
        let fx = n3();
        let co = Coactions::new(&fx.pair);
        let (z, w) = (plane(&fx.field, &z), plane(&fx.field, &w));
        prop_assert_eq!(co.coact_right(&z.mul(&w)), co.mul(&co.coact_right(&z), &co.coact_right(&w)));
        prop_assert_eq!(co.coact_left(&z.mul(&w)), co.mul(&co.coact_left(&z), &co.coact_left(&w)));
    }

    #[test]
    fn scalar_product_star_representation(u in raw_element(3, 27), a in raw_element(3, 9), z in raw_element(3, 9), w in raw_element(3, 9)) {
        let fx = n3();
        let h = &fx.pair.h;
        let pp = product();
        let u: HElement = element(h, &u);
        let (a, z, w) = (plane(&fx.field, &a), plane(&fx.field, &z), plane(&fx.field, &w));
        prop_assert_eq!(pp.value(&z, &w), pp.value(&w, &z).conj());
        prop_assert_eq!(pp.value(&action().act(&u, &z), &w), pp.value(&z, &action().act(&h.star(&u), &w)));
        prop_assert_eq!(pp.value(&a.mul(&z), &w), pp.value(&z, &a.star().mul(&w)));
    }
}

#[test]
fn qdim_is_multiplicative() {
    let f = &n3().field;
    let h = HAlgebra::new(f);
    let cat = Catalog::new(&h);
    let mods = cat.modules();
    for a in &mods {
        for b in &mods {
            assert_eq!(a.tensor(b).qdim(), &a.qdim() * &b.qdim(), "{:?} x {:?}", a.label(), b.label());
        }
    }
    for k in 1..=3 {
        assert_eq!(cat.simple(k).qdim(), CycScalar::qnumber(f, k as i64));
    }
}

#[test]
fn tensor_products_split_into_catalog_modules() {
    let h = HAlgebra::new(&n3().field);
    let cat = Catalog::new(&h);
    for a in cat.modules() {
        for b in cat.modules() {
            let v = a.tensor(&b);
            let rep = decompose_named(&v, &cat.modules()).unwrap();
            rep.verify(&v).unwrap();
            assert!(rep.all_named());
            assert_eq!(rep.summands.iter().map(|s| s.dim).sum::<usize>(), a.dim() * b.dim());
        }
    }
}

#[test]
fn plane_decomposition_n7() {
    let f = qgroup::CycField::new(7).unwrap();
    let pair = std::sync::Arc::new(qgroup::hopf::DualPair::new(&f));
    let act = PlaneAction::new(&pair);
    let s = act.decompose().unwrap();
    act.check_decomposition(&s).unwrap();
    let mut dims: Vec<usize> = s.iter().filter(|s| !s.irreducible).map(|s| s.submodule_dims[0]).collect();
    dims.sort();
    assert_eq!(dims, [1, 2, 3, 4, 5, 6]);
}
