//! Elements and tensor powers of algebras given by a monomial basis and
//! cached structure constants, plus the generic Hopf-axiom checker.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::marker::PhantomData;

use crate::cyclo::{CycField, CycScalar};
use crate::error::{Error, Result};
use crate::qplane::fmt_terms;

/// Textual names of basis monomials.
pub trait MonomialNames {
    fn monomial_name(n: usize, idx: usize) -> String;
}

/// Sparse linear combination of basis monomials of the algebra `A`.
pub struct Element<A> {
    field: Arc<CycField>,
    terms: BTreeMap<usize, CycScalar>,
    _alg: PhantomData<fn() -> A>,
}

impl<A> Clone for Element<A> {
    fn clone(&self) -> Self {
        Element { field: self.field.clone(), terms: self.terms.clone(), _alg: PhantomData }
    }
}

impl<A> PartialEq for Element<A> {
    fn eq(&self, other: &Self) -> bool {
        self.field.n() == other.field.n() && self.terms == other.terms
    }
}
impl<A> Eq for Element<A> {}

impl<A> Element<A> {
    pub fn zero(field: &Arc<CycField>) -> Self {
        Element { field: field.clone(), terms: BTreeMap::new(), _alg: PhantomData }
    }

    pub fn basis(field: &Arc<CycField>, idx: usize) -> Self {
        let mut e = Self::zero(field);
        e.terms.insert(idx, CycScalar::one(field));
        e
    }

    pub fn term(field: &Arc<CycField>, idx: usize, c: CycScalar) -> Self {
        let mut e = Self::zero(field);
        e.add_term(idx, &c);
        e
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn terms(&self) -> &BTreeMap<usize, CycScalar> {
        &self.terms
    }

    pub fn coeff(&self, idx: usize) -> CycScalar {
        self.terms.get(&idx).cloned().unwrap_or_else(|| CycScalar::zero(&self.field))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, idx: usize, c: &CycScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&idx) {
            Some(e) => {
                *e += c;
                if e.is_zero() {
                    self.terms.remove(&idx);
                }
            }
            None => {
                self.terms.insert(idx, c.clone());
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&i, c) in &other.terms {
            out.add_term(i, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&i, c) in &other.terms {
            out.add_term(i, &(-c));
        }
        out
    }

    pub fn scale(&self, c: &CycScalar) -> Self {
        let mut out = Self::zero(&self.field);
        for (&i, v) in &self.terms {
            out.add_term(i, &(c * v));
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&CycScalar::from_int(&self.field, -1))
    }
}

impl<A: MonomialNames> fmt::Display for Element<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.field.n() as usize;
        fmt_terms(f, self.terms.iter().map(|(&i, c)| (A::monomial_name(n, i), c)))
    }
}

impl<A: MonomialNames> fmt::Debug for Element<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Element of the `K`-fold tensor power of `A`.
pub struct Tensor<A, const K: usize> {
    field: Arc<CycField>,
    terms: BTreeMap<[usize; K], CycScalar>,
    _alg: PhantomData<fn() -> A>,
}

impl<A, const K: usize> Clone for Tensor<A, K> {
    fn clone(&self) -> Self {
        Tensor { field: self.field.clone(), terms: self.terms.clone(), _alg: PhantomData }
    }
}

impl<A, const K: usize> PartialEq for Tensor<A, K> {
    fn eq(&self, other: &Self) -> bool {
        self.field.n() == other.field.n() && self.terms == other.terms
    }
}
impl<A, const K: usize> Eq for Tensor<A, K> {}

impl<A, const K: usize> Tensor<A, K> {
    pub fn zero(field: &Arc<CycField>) -> Self {
        Tensor { field: field.clone(), terms: BTreeMap::new(), _alg: PhantomData }
    }

    pub fn basis(field: &Arc<CycField>, key: [usize; K]) -> Self {
        let mut t = Self::zero(field);
        t.add_term(key, &CycScalar::one(field));
        t
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn terms(&self) -> &BTreeMap<[usize; K], CycScalar> {
        &self.terms
    }

    pub fn coeff(&self, key: [usize; K]) -> CycScalar {
        self.terms.get(&key).cloned().unwrap_or_else(|| CycScalar::zero(&self.field))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, key: [usize; K], c: &CycScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(e) => {
                *e += c;
                if e.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, &(-c));
        }
        out
    }

    pub fn scale(&self, c: &CycScalar) -> Self {
        let mut out = Self::zero(&self.field);
        for (k, v) in &self.terms {
            out.add_term(*k, &(c * v));
        }
        out
    }

    /// Reorder tensor slots: slot `i` of the result is slot `perm[i]` of `self`.
    pub fn permute(&self, perm: [usize; K]) -> Self {
        let mut out = Self::zero(&self.field);
        for (k, c) in &self.terms {
            let mut nk = [0usize; K];
            for i in 0..K {
                nk[i] = k[perm[i]];
            }
            out.add_term(nk, c);
        }
        out
    }
}

impl<A> Tensor<A, 2> {
    /// `a (x) b`.
    pub fn pure(a: &Element<A>, b: &Element<A>) -> Self {
        let mut t = Self::zero(&a.field);
        for (&i, x) in &a.terms {
            for (&j, y) in &b.terms {
                t.add_term([i, j], &(x * y));
            }
        }
        t
    }

    pub fn flip(&self) -> Self {
        self.permute([1, 0])
    }
}

impl<A: MonomialNames, const K: usize> fmt::Display for Tensor<A, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.field.n() as usize;
        let names = |k: &[usize; K]| {
            let v: Vec<String> = k
                .iter()
                .map(|&i| {
                    let s = A::monomial_name(n, i);
                    if s.is_empty() {
                        String::from("1")
                    } else {
                        s
                    }
                })
                .collect();
            v.join(" (x) ")
        };
        fmt_terms(f, self.terms.iter().map(|(k, c)| (names(k), c)))
    }
}

impl<A: MonomialNames, const K: usize> fmt::Debug for Tensor<A, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An algebra with a finite monomial basis and a table of products.
pub trait BasisAlgebra: Sized {
    fn field(&self) -> &Arc<CycField>;
    fn dim(&self) -> usize;
    fn unit_index(&self) -> usize;
    /// Product of two basis monomials.
    fn product(&self, a: usize, b: usize) -> &[(usize, CycScalar)];
    /// Basis indices of a generating set.
    fn generators(&self) -> Vec<usize>;

    fn one(&self) -> Element<Self> {
        Element::basis(self.field(), self.unit_index())
    }

    fn scalar(&self, c: CycScalar) -> Element<Self> {
        Element::term(self.field(), self.unit_index(), c)
    }

    fn mul(&self, u: &Element<Self>, v: &Element<Self>) -> Element<Self> {
        let mut out = Element::zero(self.field());
        for (&a, x) in &u.terms {
            for (&b, y) in &v.terms {
                let xy = x * y;
                for (c, s) in self.product(a, b) {
                    out.add_term(*c, &(&xy * s));
                }
            }
        }
        out
    }

    fn pow(&self, u: &Element<Self>, k: u32) -> Element<Self> {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, u);
        }
        acc
    }

    fn tensor_mul<const K: usize>(&self, s: &Tensor<Self, K>, t: &Tensor<Self, K>) -> Tensor<Self, K> {
        let mut out = Tensor::zero(self.field());
        for (ka, x) in &s.terms {
            for (kb, y) in &t.terms {
                let xy = x * y;
                let mut partial: Vec<([usize; K], CycScalar)> = alloc::vec![([0usize; K], xy)];
                for slot in 0..K {
                    let prod = self.product(ka[slot], kb[slot]);
                    let mut next = Vec::with_capacity(partial.len() * prod.len());
                    for (key, c) in &partial {
                        for (m, sc) in prod {
                            let mut nk = *key;
                            nk[slot] = *m;
                            next.push((nk, c * sc));
                        }
                    }
                    partial = next;
                    if partial.is_empty() {
                        break;
                    }
                }
                for (k, c) in partial {
                    out.add_term(k, &c);
                }
            }
        }
        out
    }

    /// Apply `f` to the given slot of every term.
    fn map_slot<const K: usize>(&self, t: &Tensor<Self, K>, slot: usize, f: impl Fn(usize) -> Element<Self>) -> Tensor<Self, K> {
        let mut out = Tensor::zero(self.field());
        for (k, c) in &t.terms {
            for (&m, s) in f(k[slot]).terms() {
                let mut nk = *k;
                nk[slot] = m;
                out.add_term(nk, &(c * s));
            }
        }
        out
    }
}

/// A Hopf algebra with coproduct, antipode and counit given on basis monomials.
pub trait BasisHopf: BasisAlgebra {
    fn coproduct_basis(&self, a: usize) -> &Tensor<Self, 2>;
    fn antipode_basis(&self, a: usize) -> &Element<Self>;
    fn counit_basis(&self, a: usize) -> CycScalar;

    fn coproduct(&self, u: &Element<Self>) -> Tensor<Self, 2> {
        let mut out = Tensor::zero(self.field());
        for (&a, c) in u.terms() {
            for (k, s) in self.coproduct_basis(a).terms() {
                out.add_term(*k, &(c * s));
            }
        }
        out
    }

    fn antipode(&self, u: &Element<Self>) -> Element<Self> {
        let mut out = Element::zero(self.field());
        for (&a, c) in u.terms() {
            out = out.add(&self.antipode_basis(a).scale(c));
        }
        out
    }

    fn counit(&self, u: &Element<Self>) -> CycScalar {
        let mut acc = CycScalar::zero(self.field());
        for (&a, c) in u.terms() {
            acc += &(c * &self.counit_basis(a));
        }
        acc
    }

    /// Contract a two-fold tensor with the product.
    fn multiply_out(&self, t: &Tensor<Self, 2>) -> Element<Self> {
        let mut out = Element::zero(self.field());
        for (k, c) in t.terms() {
            for (m, s) in self.product(k[0], k[1]) {
                out.add_term(*m, &(c * s));
            }
        }
        out
    }

    /// Coassociativity, counit and antipode laws on all basis monomials, and
    /// (anti)multiplicativity of the structure maps on every (generator, monomial) pair.
    fn check_hopf_axioms(&self) -> Result<()> {
        let f = self.field().clone();
        for a in 0..self.dim() {
            let d = self.coproduct_basis(a);
            // (Delta (x) id) Delta = (id (x) Delta) Delta
            let mut left: Tensor<Self, 3> = Tensor::zero(&f);
            let mut right: Tensor<Self, 3> = Tensor::zero(&f);
            for (k, c) in d.terms() {
                for (k1, s) in self.coproduct_basis(k[0]).terms() {
                    left.add_term([k1[0], k1[1], k[1]], &(c * s));
                }
                for (k2, s) in self.coproduct_basis(k[1]).terms() {
                    right.add_term([k[0], k2[0], k2[1]], &(c * s));
                }
            }
            if left != right {
                return Err(Error::CheckFailed(alloc::format!("coassociativity fails on basis element {a}")));
            }
            // (eps (x) id) Delta = id = (id (x) eps) Delta
            let mut l1: Element<Self> = Element::zero(&f);
            let mut r1: Element<Self> = Element::zero(&f);
            for (k, c) in d.terms() {
                l1.add_term(k[1], &(c * &self.counit_basis(k[0])));
                r1.add_term(k[0], &(c * &self.counit_basis(k[1])));
            }
            let me = Element::basis(&f, a);
            if l1 != me || r1 != me {
                return Err(Error::CheckFailed(alloc::format!("counit law fails on basis element {a}")));
            }
            // m (S (x) id) Delta = eta eps = m (id (x) S) Delta
            let unit = self.scalar(self.counit_basis(a));
            let mut l2: Element<Self> = Element::zero(&f);
            let mut r2: Element<Self> = Element::zero(&f);
            for (k, c) in d.terms() {
                l2 = l2.add(&self.mul(self.antipode_basis(k[0]), &Element::basis(&f, k[1])).scale(c));
                r2 = r2.add(&self.mul(&Element::basis(&f, k[0]), self.antipode_basis(k[1])).scale(c));
            }
            if l2 != unit || r2 != unit {
                return Err(Error::CheckFailed(alloc::format!("antipode law fails on basis element {a}")));
            }
        }
        for a in self.generators() {
            for b in 0..self.dim() {
                let ab: Element<Self> = self.mul(&Element::basis(&f, a), &Element::basis(&f, b));
                let lhs = self.coproduct(&ab);
                let rhs = self.tensor_mul(self.coproduct_basis(a), self.coproduct_basis(b));
                if lhs != rhs {
                    return Err(Error::CheckFailed(alloc::format!("coproduct not multiplicative on ({a}, {b})")));
                }
                if self.counit(&ab) != &self.counit_basis(a) * &self.counit_basis(b) {
                    return Err(Error::CheckFailed(alloc::format!("counit not multiplicative on ({a}, {b})")));
                }
                if self.antipode(&ab) != self.mul(self.antipode_basis(b), self.antipode_basis(a)) {
                    return Err(Error::CheckFailed(alloc::format!("antipode not antimultiplicative on ({a}, {b})")));
                }
            }
        }
        Ok(())
    }
}
