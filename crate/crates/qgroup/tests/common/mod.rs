//! Random elements for property tests, built from plain integer data so the
//! strategies do not depend on a particular field.

#![allow(dead_code)]

use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use qgroup::hopf::DualPair;
use qgroup::tensor::{BasisAlgebra, Element};
use qgroup::wz::Word;
use qgroup::{CycField, CycScalar, PlaneElement, WzComplex, WzForm};

/// `(numerator, denominator)` per power of `q`.
pub type RawScalar = Vec<(i64, i64)>;
/// `(basis index, coefficient)` terms.
pub type RawElement = Vec<(usize, RawScalar)>;

pub fn raw_scalar(n: usize) -> impl Strategy<Value = RawScalar> {
    prop::collection::vec((-6i64..=6, 1i64..=4), n)
}

pub fn raw_element(n: usize, dim: usize) -> impl Strategy<Value = RawElement> {
    prop::collection::vec((0..dim, raw_scalar(n)), 0..=4)
}

pub fn scalar(f: &Arc<CycField>, raw: &RawScalar) -> CycScalar {
    raw.iter().enumerate().fold(CycScalar::zero(f), |acc, (i, &(a, b))| {
        let c = &CycScalar::from_int(f, a) * &CycScalar::from_int(f, b).inv().unwrap();
        &acc + &c.mul_qpow(i as i64)
    })
}

pub fn plane(f: &Arc<CycField>, raw: &RawElement) -> PlaneElement {
    let n = f.n() as usize;
    raw.iter().fold(PlaneElement::zero(f), |acc, (i, c)| acc.add(&PlaneElement::monomial(f, (i / n) % n, i % n).scale(&scalar(f, c))))
}

pub fn element<A: BasisAlgebra>(a: &A, raw: &RawElement) -> Element<A> {
    let f = a.field().clone();
    raw.iter().fold(Element::zero(&f), |acc, (i, c)| acc.add(&Element::term(&f, i % a.dim(), scalar(&f, c))))
}

/// Indices below `4 N^2`: the word is `i / N^2`.
pub fn form(f: &Arc<CycField>, raw: &RawElement) -> WzForm {
    let n = f.n() as usize;
    raw.iter().fold(WzForm::zero(f), |acc, (i, c)| {
        let word = Word::ALL[(i / (n * n)) % 4];
        let m = PlaneElement::monomial(f, (i / n) % n, i % n).scale(&scalar(f, c));
        acc.add(&WzForm::with_part(word, &m))
    })
}

pub struct Fixture {
    pub field: Arc<CycField>,
    pub pair: Arc<DualPair>,
    pub wz: WzComplex,
}

pub fn n3() -> &'static Fixture {
    static CELL: OnceLock<Fixture> = OnceLock::new();
    CELL.get_or_init(|| {
        let field = CycField::new(3).unwrap();
        Fixture { pair: Arc::new(DualPair::new(&field)), wz: WzComplex::new(&field), field }
    })
}
