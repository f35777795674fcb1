//! The dual pair of `N^3`-dimensional Hopf algebras.
//!
//! `H` has basis `Xm^i K^j Xp^k` and `F` has basis `a^al b^be c^ga`, all
//! exponents in `0..N`. Both carry structure-constant tables built once at
//! construction.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::cyclo::{CycField, CycScalar};
use crate::error::{Error, Result};
use crate::qplane::{join_factors, power};
use crate::tensor::{BasisAlgebra, BasisHopf, Element, MonomialNames, Tensor};

pub type HElement = Element<HAlgebra>;
pub type FElement = Element<FAlgebra>;
pub type HTensor = Tensor<HAlgebra, 2>;
pub type FTensor = Tensor<FAlgebra, 2>;

type Terms = Vec<(usize, CycScalar)>;

fn collect<A>(e: Element<A>) -> Terms {
    e.terms().iter().map(|(&i, c)| (i, c.clone())).collect()
}

fn index3(n: usize, i: usize, j: usize, k: usize) -> usize {
    (i * n + j) * n + k
}

fn exponents3(n: usize, idx: usize) -> (usize, usize, usize) {
    (idx / (n * n), (idx / n) % n, idx % n)
}

/// An antilinear map given on basis monomials.
pub trait BasisStar: BasisHopf {
    fn star_basis(&self, a: usize) -> &Element<Self>;

    fn star(&self, u: &Element<Self>) -> Element<Self> {
        apply_antilinear(self.field(), u, |a| self.star_basis(a))
    }

    fn star_tensor(&self, t: &Tensor<Self, 2>) -> Tensor<Self, 2> {
        let mut out = Tensor::zero(self.field());
        for (k, c) in t.terms() {
            let p = Tensor::pure(self.star_basis(k[0]), self.star_basis(k[1]));
            out = out.add(&p.scale(&c.conj()));
        }
        out
    }

    /// Involution, antimultiplicativity, `Delta *= (* (x) *) Delta` and `(S *)^2 = id`.
    fn check_star(&self) -> Result<()> {
        let f = self.field().clone();
        for a in 0..self.dim() {
            let e = Element::basis(&f, a);
            if self.star(self.star_basis(a)) != e {
                return Err(Error::CheckFailed(alloc::format!("star is not an involution on basis element {a}")));
            }
            if self.coproduct(self.star_basis(a)) != self.star_tensor(self.coproduct_basis(a)) {
                return Err(Error::CheckFailed(alloc::format!("star not compatible with the coproduct on basis element {a}")));
            }
            let ss = self.antipode(&self.star(&self.antipode(self.star_basis(a))));
            if ss != e {
                return Err(Error::CheckFailed(alloc::format!("(S*)^2 != id on basis element {a}")));
            }
        }
        for g in self.generators() {
            for b in 0..self.dim() {
                let gb = self.mul(&Element::basis(&f, g), &Element::basis(&f, b));
                if self.star(&gb) != self.mul(self.star_basis(b), self.star_basis(g)) {
                    return Err(Error::CheckFailed(alloc::format!("star not antimultiplicative on ({g}, {b})")));
                }
            }
        }
        Ok(())
    }
}

fn apply_antilinear<'a, A: 'a>(field: &Arc<CycField>, u: &Element<A>, image: impl Fn(usize) -> &'a Element<A>) -> Element<A> {
    let mut out = Element::zero(field);
    for (&a, c) in u.terms() {
        let cc = c.conj();
        for (&m, s) in image(a).terms() {
            out.add_term(m, &(&cc * s));
        }
    }
    out
}

/// The algebra `H` generated by `K`, `Xp`, `Xm`.
pub struct HAlgebra {
    field: Arc<CycField>,
    n: usize,
    table: Vec<Terms>,
    coproducts: Vec<HTensor>,
    antipodes: Vec<HElement>,
    stars: Vec<HElement>,
    twisted: Vec<HElement>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HGen {
    K,
    Xp,
    Xm,
}

impl MonomialNames for HAlgebra {
    fn monomial_name(n: usize, idx: usize) -> String {
        let (i, j, k) = exponents3(n, idx);
        join_factors(&[power("Xm", i), power("K", j), power("Xp", k)])
    }
}

impl HAlgebra {
    pub fn new(field: &Arc<CycField>) -> HAlgebra {
        let n = field.n() as usize;
        let dim = n * n * n;
        let mut h = HAlgebra {
            field: field.clone(),
            n,
            table: Vec::with_capacity(dim * dim),
            coproducts: Vec::with_capacity(dim),
            antipodes: Vec::with_capacity(dim),
            stars: Vec::with_capacity(dim),
            twisted: Vec::with_capacity(dim),
        };
        // Row of monomial m: products m * b for every basis b, built by
        // left-multiplying the row of a shorter monomial by one generator.
        let mut rows: Vec<Vec<Terms>> = Vec::with_capacity(dim);
        for m in 0..dim {
            let row: Vec<Terms> = match h.peel(m) {
                None => (0..dim).map(|b| vec![(b, CycScalar::one(field))]).collect(),
                Some((g, rest)) => rows[rest].iter().map(|t| h.left_gen(g, t)).collect(),
            };
            rows.push(row);
        }
        h.table = rows.into_iter().flatten().collect();

        let gen = |g: HGen| Element::basis(field, h.gen_index(g));
        let k = gen(HGen::K);
        let kinv = Element::basis(field, h.index(0, n - 1, 0));
        let xp = gen(HGen::Xp);
        let xm = gen(HGen::Xm);
        let one = h.one();
        let dk = Tensor::pure(&k, &k);
        let dxp = Tensor::pure(&xp, &one).add(&Tensor::pure(&k, &xp));
        let dxm = Tensor::pure(&xm, &kinv).add(&Tensor::pure(&one, &xm));
        let sk = kinv.clone();
        let sxp = h.mul(&kinv, &xp).neg();
        let sxm = h.mul(&xm, &k).neg();
        let stk = k.clone();
        let stxp = xp.scale(&CycScalar::qpow(field, -1)).neg();
        let stxm = xm.scale(&CycScalar::q(field)).neg();
        let (twk, twxp, twxm) = (kinv.clone(), xm.clone(), xp.clone());

        for m in 0..dim {
            let (cop, anti, st, tw) = match h.peel(m) {
                None => (Tensor::pure(&one, &one), one.clone(), one.clone(), one.clone()),
                Some((g, rest)) => {
                    let (dg, sg, stg, twg) = match g {
                        HGen::K => (&dk, &sk, &stk, &twk),
                        HGen::Xp => (&dxp, &sxp, &stxp, &twxp),
                        HGen::Xm => (&dxm, &sxm, &stxm, &twxm),
                    };
                    (
                        h.tensor_mul(dg, &h.coproducts[rest]),
                        h.mul(&h.antipodes[rest], sg),
                        h.mul(&h.stars[rest], stg),
                        h.mul(&h.twisted[rest], twg),
                    )
                }
            };
            h.coproducts.push(cop);
            h.antipodes.push(anti);
            h.stars.push(st);
            h.twisted.push(tw);
        }
        h
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn index(&self, i: usize, j: usize, k: usize) -> usize {
        index3(self.n, i, j % self.n, k)
    }

    /// `(i, j, k)` of `Xm^i K^j Xp^k`.
    pub fn exponents(&self, idx: usize) -> (usize, usize, usize) {
        exponents3(self.n, idx)
    }

    pub fn gen_index(&self, g: HGen) -> usize {
        match g {
            HGen::K => self.index(0, 1, 0),
            HGen::Xp => self.index(0, 0, 1),
            HGen::Xm => self.index(1, 0, 0),
        }
    }

    /// `Xm^i K^j Xp^k`; `j` may be negative.
    pub fn monomial(&self, i: usize, j: i64, k: usize) -> HElement {
        if i >= self.n || k >= self.n {
            return Element::zero(&self.field);
        }
        Element::basis(&self.field, self.index(i, self.field.exp(j), k))
    }

    pub fn k(&self) -> HElement {
        self.monomial(0, 1, 0)
    }

    pub fn k_inv(&self) -> HElement {
        self.monomial(0, -1, 0)
    }

    pub fn xp(&self) -> HElement {
        self.monomial(0, 0, 1)
    }

    pub fn xm(&self) -> HElement {
        self.monomial(1, 0, 0)
    }

    /// Leftmost generator of a monomial and the index of what remains.
    fn peel(&self, m: usize) -> Option<(HGen, usize)> {
        let (i, j, k) = self.exponents(m);
        if i > 0 {
            Some((HGen::Xm, self.index(i - 1, j, k)))
        } else if j > 0 {
            Some((HGen::K, self.index(0, j - 1, k)))
        } else if k > 0 {
            Some((HGen::Xp, self.index(0, 0, k - 1)))
        } else {
            None
        }
    }

    /// Left multiplication of a normal-ordered combination by one generator.
    fn left_gen(&self, g: HGen, t: &[(usize, CycScalar)]) -> Terms {
        let n = self.n as i64;
        let f = &self.field;
        let mut out: HElement = Element::zero(f);
        let inv_diff = (CycScalar::q(f) - CycScalar::qpow(f, -1)).inv().expect("q is not +-1");
        for (m, c) in t {
            let (a, b, k) = self.exponents(*m);
            match g {
                HGen::Xm => {
                    if a + 1 < self.n {
                        out.add_term(self.index(a + 1, b, k), c);
                    }
                }
                HGen::K => out.add_term(self.index(a, b + 1, k), &c.mul_qpow(-2 * a as i64)),
                HGen::Xp => {
                    if k + 1 < self.n {
                        out.add_term(self.index(a, b, k + 1), &c.mul_qpow(-2 * b as i64));
                    }
                    if a > 0 {
                        let ai = a as i64;
                        let pref = c * &CycScalar::qnumber(f, ai) * &inv_diff;
                        let up = (b as i64 + 1).rem_euclid(n) as usize;
                        let down = (b as i64 - 1).rem_euclid(n) as usize;
                        out.add_term(self.index(a - 1, up, k), &pref.mul_qpow(1 - ai));
                        out.add_term(self.index(a - 1, down, k), &(-pref.mul_qpow(ai - 1)));
                    }
                }
            }
        }
        collect(out)
    }

    pub fn twisted_star(&self, u: &HElement) -> HElement {
        apply_antilinear(&self.field, u, |a| &self.twisted[a])
    }

    fn twisted_star_tensor(&self, t: &HTensor) -> HTensor {
        let mut out = Tensor::zero(&self.field);
        for (k, c) in t.terms() {
            let p = Tensor::pure(&self.twisted[k[0]], &self.twisted[k[1]]);
            out = out.add(&p.scale(&c.conj()));
        }
        out
    }

    /// `S^2 u = K^-1 u K` on every basis monomial.
    pub fn check_antipode_square(&self) -> Result<()> {
        let (k, kinv) = (self.k(), self.k_inv());
        for a in 0..self.dim() {
            let e = Element::basis(&self.field, a);
            let lhs = self.antipode(self.antipode_basis(a));
            let rhs = self.mul(&self.mul(&kinv, &e), &k);
            if lhs != rhs {
                return Err(Error::CheckFailed(alloc::format!("S^2 u != K^-1 u K for u = {e}: {lhs} vs {rhs}")));
            }
        }
        Ok(())
    }

    /// Defining relations of `H` evaluated in the normal form.
    pub fn check_relations(&self) -> Result<()> {
        let f = &self.field;
        let (k, kinv, xp, xm) = (self.k(), self.k_inv(), self.xp(), self.xm());
        let q2 = CycScalar::qpow(f, 2);
        let qm2 = CycScalar::qpow(f, -2);
        let comm = self.mul(&xp, &xm).sub(&self.mul(&xm, &xp));
        let inv_diff = (CycScalar::q(f) - CycScalar::qpow(f, -1)).inv()?;
        let checks = [
            ("K Xp = q^2 Xp K", self.mul(&k, &xp), self.mul(&xp, &k).scale(&q2)),
            ("K Xm = q^-2 Xm K", self.mul(&k, &xm), self.mul(&xm, &k).scale(&qm2)),
            ("[Xp, Xm] = (K - K^-1)/(q - q^-1)", comm, k.sub(&kinv).scale(&inv_diff)),
            ("K^N = 1", self.pow(&k, self.n as u32), self.one()),
            ("Xp^N = 0", self.pow(&xp, self.n as u32), Element::zero(f)),
            ("Xm^N = 0", self.pow(&xm, self.n as u32), Element::zero(f)),
            ("K K^-1 = 1", self.mul(&k, &kinv), self.one()),
        ];
        for (name, l, r) in checks {
            if l != r {
                return Err(Error::CheckFailed(alloc::format!("{name}: {l} vs {r}")));
            }
        }
        Ok(())
    }

    /// Checks the candidate `K -> K^-1`, `Xp -> Xm`, `Xm -> Xp`.
    pub fn check_twisted_star(&self) -> TwistedStarReport {
        let f = &self.field;
        let mut rep = TwistedStarReport { involutive: true, antimultiplicative: true, twisted_law: true, untwisted_law: true };
        for a in 0..self.dim() {
            let e = Element::basis(f, a);
            let s = &self.twisted[a];
            if self.twisted_star(s) != e {
                rep.involutive = false;
            }
            let lhs = self.coproduct(s);
            if lhs != self.twisted_star_tensor(&self.coproduct_basis(a).flip()) {
                rep.twisted_law = false;
            }
            if lhs != self.twisted_star_tensor(self.coproduct_basis(a)) {
                rep.untwisted_law = false;
            }
        }
        for g in self.generators() {
            for b in 0..self.dim() {
                let gb = self.mul(&Element::basis(f, g), &Element::basis(f, b));
                if self.twisted_star(&gb) != self.mul(&self.twisted[b], &self.twisted[g]) {
                    rep.antimultiplicative = false;
                }
            }
        }
        rep
    }

    /// Hopf axioms, `S^2`, and the defining relations.
    pub fn check_all(&self) -> Result<()> {
        self.check_relations()?;
        self.check_hopf_axioms()?;
        self.check_antipode_square()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwistedStarReport {
    pub involutive: bool,
    pub antimultiplicative: bool,
    /// `Delta * = (* (x) *) Delta^op`.
    pub twisted_law: bool,
    /// `Delta * = (* (x) *) Delta`.
    pub untwisted_law: bool,
}

impl BasisAlgebra for HAlgebra {
    fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    fn dim(&self) -> usize {
        self.n * self.n * self.n
    }

    fn unit_index(&self) -> usize {
        0
    }

    fn product(&self, a: usize, b: usize) -> &[(usize, CycScalar)] {
        &self.table[a * self.dim() + b]
    }

    fn generators(&self) -> Vec<usize> {
        vec![self.gen_index(HGen::K), self.gen_index(HGen::Xp), self.gen_index(HGen::Xm)]
    }
}

impl BasisHopf for HAlgebra {
    fn coproduct_basis(&self, a: usize) -> &HTensor {
        &self.coproducts[a]
    }

    fn antipode_basis(&self, a: usize) -> &HElement {
        &self.antipodes[a]
    }

    fn counit_basis(&self, a: usize) -> CycScalar {
        let (i, _, k) = self.exponents(a);
        if i == 0 && k == 0 {
            CycScalar::one(&self.field)
        } else {
            CycScalar::zero(&self.field)
        }
    }
}

impl BasisStar for HAlgebra {
    fn star_basis(&self, a: usize) -> &HElement {
        &self.stars[a]
    }
}

/// The algebra `F` generated by `a`, `b`, `c` (with `d` eliminated).
pub struct FAlgebra {
    field: Arc<CycField>,
    n: usize,
    table: Vec<Terms>,
    coproducts: Vec<FTensor>,
    antipodes: Vec<FElement>,
    stars: Vec<FElement>,
}

impl MonomialNames for FAlgebra {
    fn monomial_name(n: usize, idx: usize) -> String {
        let (a, b, c) = exponents3(n, idx);
        join_factors(&[power("a", a), power("b", b), power("c", c)])
    }
}

impl FAlgebra {
    pub fn new(field: &Arc<CycField>) -> FAlgebra {
        let n = field.n() as usize;
        let dim = n * n * n;
        let mut table = Vec::with_capacity(dim * dim);
        for m in 0..dim {
            let (al, be, ga) = exponents3(n, m);
            for p in 0..dim {
                let (al2, be2, ga2) = exponents3(n, p);
                if be + be2 >= n || ga + ga2 >= n {
                    table.push(Vec::new());
                } else {
                    let c = CycScalar::qpow(field, -(((be + ga) * al2) as i64));
                    table.push(vec![(index3(n, (al + al2) % n, be + be2, ga + ga2), c)]);
                }
            }
        }
        let mut f = FAlgebra {
            field: field.clone(),
            n,
            table,
            coproducts: Vec::with_capacity(dim),
            antipodes: Vec::with_capacity(dim),
            stars: Vec::with_capacity(dim),
        };
        let (a, b, c, d) = (f.a(), f.b(), f.c(), f.d());
        let one = f.one();
        let da = Tensor::pure(&a, &a).add(&Tensor::pure(&b, &c));
        let db = Tensor::pure(&a, &b).add(&Tensor::pure(&b, &d));
        let dc = Tensor::pure(&c, &a).add(&Tensor::pure(&d, &c));
        let sa = d.clone();
        let sb = b.scale(&CycScalar::qpow(field, -1)).neg();
        let sc = c.scale(&CycScalar::q(field)).neg();
        for m in 0..dim {
            let (al, be, ga) = exponents3(n, m);
            // a^al b^be c^ga = (shorter monomial) * (last letter)
            let (rest, dg, sg, stg) = if ga > 0 {
                (index3(n, al, be, ga - 1), &dc, &sc, &c)
            } else if be > 0 {
                (index3(n, al, be - 1, 0), &db, &sb, &b)
            } else if al > 0 {
                (index3(n, al - 1, 0, 0), &da, &sa, &a)
            } else {
                f.coproducts.push(Tensor::pure(&one, &one));
                f.antipodes.push(one.clone());
                f.stars.push(one.clone());
                continue;
            };
            let cop = f.tensor_mul(&f.coproducts[rest], dg);
            let anti = f.mul(sg, &f.antipodes[rest]);
            let st = f.mul(stg, &f.stars[rest]);
            f.coproducts.push(cop);
            f.antipodes.push(anti);
            f.stars.push(st);
        }
        f
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn index(&self, al: usize, be: usize, ga: usize) -> usize {
        index3(self.n, al % self.n, be, ga)
    }

    /// `(al, be, ga)` of `a^al b^be c^ga`.
    pub fn exponents(&self, idx: usize) -> (usize, usize, usize) {
        exponents3(self.n, idx)
    }

    /// `a^al b^be c^ga`; `al` may be negative.
    pub fn monomial(&self, al: i64, be: usize, ga: usize) -> FElement {
        if be >= self.n || ga >= self.n {
            return Element::zero(&self.field);
        }
        Element::basis(&self.field, self.index(self.field.exp(al), be, ga))
    }

    pub fn a(&self) -> FElement {
        self.monomial(1, 0, 0)
    }

    pub fn b(&self) -> FElement {
        self.monomial(0, 1, 0)
    }

    pub fn c(&self) -> FElement {
        self.monomial(0, 0, 1)
    }

    /// `d = a^(N-1) (1 + q b c)`.
    pub fn d(&self) -> FElement {
        let f = &self.field;
        let mut d = self.monomial(-1, 0, 0);
        if self.n > 1 {
            d.add_term(self.index(self.n - 1, 1, 1), &CycScalar::q(f));
        }
        d
    }

    /// Quadratic and non-quadratic relations, with `d` expanded.
    pub fn check_relations(&self) -> Result<()> {
        let f = &self.field;
        let (a, b, c, d) = (self.a(), self.b(), self.c(), self.d());
        let q = CycScalar::q(f);
        let m = |x: &FElement, y: &FElement| self.mul(x, y);
        let nn = self.n as u32;
        let checks = [
            ("q b a = a b", m(&b, &a).scale(&q), m(&a, &b)),
            ("q c a = a c", m(&c, &a).scale(&q), m(&a, &c)),
            ("q d b = b d", m(&d, &b).scale(&q), m(&b, &d)),
            ("q d c = c d", m(&d, &c).scale(&q), m(&c, &d)),
            ("c b = b c", m(&c, &b), m(&b, &c)),
            ("a d - d a = (q - q^-1) b c", m(&a, &d).sub(&m(&d, &a)), m(&b, &c).scale(&(&q - &CycScalar::qpow(f, -1)))),
            ("a d - q b c = 1", m(&a, &d).sub(&m(&b, &c).scale(&q)), self.one()),
            ("d a - q^-1 b c = 1", m(&d, &a).sub(&m(&b, &c).scale(&CycScalar::qpow(f, -1))), self.one()),
            ("a^N = 1", self.pow(&a, nn), self.one()),
            ("b^N = 0", self.pow(&b, nn), Element::zero(f)),
            ("c^N = 0", self.pow(&c, nn), Element::zero(f)),
            ("d^N = 1", self.pow(&d, nn), self.one()),
        ];
        for (name, l, r) in checks {
            if l != r {
                return Err(Error::CheckFailed(alloc::format!("{name}: {l} vs {r}")));
            }
        }
        Ok(())
    }

    /// The star fixes `a, b, c` letterwise, so it must map each generator of
    /// the defining ideal (`a^N - 1`, `b^N`, `c^N`, `d^N - 1`) to zero in the quotient.
    pub fn check_star_preserves_ideal(&self) -> Result<()> {
        let nn = self.n as u32;
        let ideal = [
            ("a^N - 1", self.pow(&self.star(&self.a()), nn).sub(&self.one())),
            ("b^N", self.pow(&self.star(&self.b()), nn)),
            ("c^N", self.pow(&self.star(&self.c()), nn)),
            ("d^N - 1", self.pow(&self.star(&self.d()), nn).sub(&self.one())),
        ];
        for (name, v) in ideal {
            if !v.is_zero() {
                return Err(Error::CheckFailed(alloc::format!("star of {name} leaves the ideal: {v}")));
            }
        }
        if self.star(&self.d()) != self.d() {
            return Err(Error::CheckFailed(String::from("d* != d")));
        }
        Ok(())
    }

    pub fn check_all(&self) -> Result<()> {
        self.check_relations()?;
        self.check_hopf_axioms()
    }
}

impl BasisAlgebra for FAlgebra {
    fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    fn dim(&self) -> usize {
        self.n * self.n * self.n
    }

    fn unit_index(&self) -> usize {
        0
    }

    fn product(&self, a: usize, b: usize) -> &[(usize, CycScalar)] {
        &self.table[a * self.dim() + b]
    }

    fn generators(&self) -> Vec<usize> {
        vec![self.index(1, 0, 0), self.index(0, 1, 0), self.index(0, 0, 1)]
    }
}

impl BasisHopf for FAlgebra {
    fn coproduct_basis(&self, a: usize) -> &FTensor {
        &self.coproducts[a]
    }

    fn antipode_basis(&self, a: usize) -> &FElement {
        &self.antipodes[a]
    }

    fn counit_basis(&self, a: usize) -> CycScalar {
        let (_, be, ga) = self.exponents(a);
        if be == 0 && ga == 0 {
            CycScalar::one(&self.field)
        } else {
            CycScalar::zero(&self.field)
        }
    }
}

impl BasisStar for FAlgebra {
    fn star_basis(&self, a: usize) -> &FElement {
        &self.stars[a]
    }
}

/// `H` and `F` together with their duality pairing.
pub struct DualPair {
    pub h: HAlgebra,
    pub f: FAlgebra,
    /// `table[m * dim + p] = <m, p>` on basis monomials.
    table: Vec<CycScalar>,
}

impl DualPair {
    pub fn new(field: &Arc<CycField>) -> DualPair {
        let h = HAlgebra::new(field);
        let f = FAlgebra::new(field);
        let dim = h.dim();
        let mut table: Vec<CycScalar> = Vec::with_capacity(dim * dim);
        let gens: Vec<(HGen, Vec<CycScalar>)> = [HGen::K, HGen::Xp, HGen::Xm]
            .into_iter()
            .map(|g| (g, (0..dim).map(|p| generator_pairing(&f, g, p)).collect()))
            .collect();
        for m in 0..dim {
            match h.peel(m) {
                None => table.extend((0..dim).map(|p| f.counit_basis(p))),
                Some((g, rest)) => {
                    let gv = &gens.iter().find(|(x, _)| *x == g).expect("generator listed").1;
                    for p in 0..dim {
                        // <g m', u> = sum <g, u1> <m', u2>
                        let mut acc = CycScalar::zero(field);
                        for (k, c) in f.coproduct_basis(p).terms() {
                            let l = &gv[k[0]];
                            if l.is_zero() {
                                continue;
                            }
                            let r = &table[rest * dim + k[1]];
                            if r.is_zero() {
                                continue;
                            }
                            acc += &(&(c * l) * r);
                        }
                        table.push(acc);
                    }
                }
            }
        }
        DualPair { h, f, table }
    }

    pub fn field(&self) -> &Arc<CycField> {
        self.h.field()
    }

    pub fn pair_basis(&self, m: usize, p: usize) -> &CycScalar {
        &self.table[m * self.h.dim() + p]
    }

    pub fn pairing(&self, x: &HElement, u: &FElement) -> CycScalar {
        let mut acc = CycScalar::zero(self.field());
        for (&m, c) in x.terms() {
            for (&p, s) in u.terms() {
                let v = self.pair_basis(m, p);
                if !v.is_zero() {
                    acc += &(&(c * s) * v);
                }
            }
        }
        acc
    }

    pub fn pairing_tensor(&self, x: &HTensor, u: &FTensor) -> CycScalar {
        let mut acc = CycScalar::zero(self.field());
        for (km, c) in x.terms() {
            for (kp, s) in u.terms() {
                let v = self.pair_basis(km[0], kp[0]) * self.pair_basis(km[1], kp[1]);
                if !v.is_zero() {
                    acc += &(&(c * s) * &v);
                }
            }
        }
        acc
    }

    /// `<x y, u> = <x (x) y, Delta u>` and `<Delta x, u (x) v> = <x, u v>` on the
    /// given elements, and `<1, u> = eps(u)`, `<x, 1> = eps(x)`.
    pub fn check_duality(&self, x: &HElement, y: &HElement, u: &FElement, v: &FElement) -> Result<()> {
        let lhs = self.pairing(&self.h.mul(x, y), u);
        let rhs = self.pairing_tensor(&Tensor::pure(x, y), &self.f.coproduct(u));
        if lhs != rhs {
            return Err(Error::CheckFailed(alloc::format!("<xy, u> != <x (x) y, Delta u> for x = {x}, y = {y}, u = {u}")));
        }
        let lhs = self.pairing_tensor(&self.h.coproduct(x), &Tensor::pure(u, v));
        let rhs = self.pairing(x, &self.f.mul(u, v));
        if lhs != rhs {
            return Err(Error::CheckFailed(alloc::format!("<Delta x, u (x) v> != <x, uv> for x = {x}, u = {u}, v = {v}")));
        }
        if self.pairing(&self.h.one(), u) != self.f.counit(u) || self.pairing(x, &self.f.one()) != self.h.counit(x) {
            return Err(Error::CheckFailed(String::from("unit/counit duality fails")));
        }
        Ok(())
    }

    /// `<S x, u> = <x, S u>` on all basis pairs.
    pub fn check_antipode_duality(&self) -> Result<()> {
        let f = self.field();
        for m in 0..self.h.dim() {
            for p in 0..self.f.dim() {
                let l = self.pairing(self.h.antipode_basis(m), &Element::basis(f, p));
                let r = self.pairing(&Element::basis(f, m), self.f.antipode_basis(p));
                if l != r {
                    return Err(Error::CheckFailed(alloc::format!("<S h, u> != <h, S u> on basis pair ({m}, {p})")));
                }
            }
        }
        Ok(())
    }

    /// `<h*, u> = conj <h, (S u)*>` for all basis `h` and `u`.
    pub fn check_star_duality(&self) -> Result<()> {
        let f = self.field();
        for m in 0..self.h.dim() {
            for p in 0..self.f.dim() {
                let l = self.pairing(self.h.star_basis(m), &Element::basis(f, p));
                let su = self.f.star(self.f.antipode_basis(p));
                let r = self.pairing(&Element::basis(f, m), &su).conj();
                if l != r {
                    return Err(Error::CheckFailed(alloc::format!("<h*, u> != conj <h, (Su)*> on basis pair ({m}, {p})")));
                }
            }
        }
        Ok(())
    }

    /// Rank of the pairing matrix (full rank means non-degenerate).
    pub fn pairing_rank(&self) -> usize {
        let dim = self.h.dim();
        let mut e = crate::linalg::Echelon::new(self.field(), dim);
        for m in 0..dim {
            e.insert(&self.table[m * dim..(m + 1) * dim]);
        }
        e.rank()
    }
}

/// `<g, a^al b^be c^ga>` for a single generator, peeling one letter at a time
/// with `Delta Xp = Xp (x) 1 + K (x) Xp` and `Delta Xm = Xm (x) K^-1 + 1 (x) Xm`.
fn generator_pairing(f: &FAlgebra, g: HGen, p: usize) -> CycScalar {
    let (al, be, ga) = f.exponents(p);
    let mut word: Vec<char> = Vec::new();
    word.extend(core::iter::repeat_n('a', al));
    word.extend(core::iter::repeat_n('b', be));
    word.extend(core::iter::repeat_n('c', ga));
    pair_word(&f.field, g, &word)
}

/// `<K^e, w>`: `K` is group-like with `<K, a> = q` and `<K, b> = <K, c> = 0`.
fn group_like(field: &Arc<CycField>, e: i64, w: &[char]) -> CycScalar {
    if w.iter().all(|&l| l == 'a') {
        CycScalar::qpow(field, e * w.len() as i64)
    } else {
        CycScalar::zero(field)
    }
}

fn pair_word(field: &Arc<CycField>, g: HGen, w: &[char]) -> CycScalar {
    let letter = |h: HGen, l: char| match (h, l) {
        (HGen::K, 'a') => CycScalar::q(field),
        (HGen::Xp, 'b') | (HGen::Xm, 'c') => CycScalar::one(field),
        _ => CycScalar::zero(field),
    };
    match (g, w.split_first()) {
        (HGen::K, _) => group_like(field, 1, w),
        (_, None) => CycScalar::zero(field),
        (HGen::Xp, Some((&l, rest))) => {
            &letter(HGen::Xp, l) * &group_like(field, 0, rest) + &letter(HGen::K, l) * &pair_word(field, HGen::Xp, rest)
        }
        (HGen::Xm, Some((&l, rest))) => {
            &letter(HGen::Xm, l) * &group_like(field, -1, rest) + &group_like(field, 0, &[l]) * &pair_word(field, HGen::Xm, rest)
        }
    }
}
