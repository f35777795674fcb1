//! Coactions of `F` on the reduced quantum plane, the dual left action of
//! `H`, and the decomposition of the plane into `H`-modules.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::cyclo::CycScalar;
use crate::error::{Error, Result};
use crate::hopf::{BasisStar, DualPair, FElement, HElement, HGen};
use crate::linalg::{Matrix, Subspace, Vector};
use crate::qplane::{Plane, PlaneElement};
use crate::repcat::{find_isomorphism, is_indecomposable, Representation};
use crate::tensor::{BasisAlgebra, BasisHopf, Element};

/// Which side `F` sits on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `Delta_L: M -> F (x) M`.
    Left,
    /// `Delta_R: M -> M (x) F`.
    Right,
}

/// Element of `M (x) F` (right) or `F (x) M` (left), keyed by
/// `(plane index, F index)` in both cases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoactionOutput {
    pub side: Side,
    terms: BTreeMap<(usize, usize), CycScalar>,
}

impl CoactionOutput {
    fn zero(side: Side) -> CoactionOutput {
        CoactionOutput { side, terms: BTreeMap::new() }
    }

    pub fn terms(&self) -> &BTreeMap<(usize, usize), CycScalar> {
        &self.terms
    }

    pub fn coeff(&self, plane_idx: usize, f_idx: usize) -> Option<&CycScalar> {
        self.terms.get(&(plane_idx, f_idx))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, key: (usize, usize), c: &CycScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }
}

/// Plane monomial product on indices: `(r, s)(r', s') = q^{-s r'} (r + r', s + s')`.
fn plane_product(n: usize, a: usize, b: usize) -> (usize, usize) {
    let (r, s) = (a / n, a % n);
    let (r2, s2) = (b / n, b % n);
    let e = (n - (s * r2) % n) % n;
    (((r + r2) % n) * n + (s + s2) % n, e)
}

/// Both coactions of `F` on the plane, tabulated on monomials.
pub struct Coactions {
    pair: Arc<DualPair>,
    plane: Plane,
    left: Vec<CoactionOutput>,
    right: Vec<CoactionOutput>,
}

impl Coactions {
    pub fn new(pair: &Arc<DualPair>) -> Coactions {
        let field = pair.field().clone();
        let plane = Plane::new(&field);
        let f = &pair.f;
        let n = plane.n();
        let (ix, iy) = (plane.index(1, 0), plane.index(0, 1));
        let gen = |side: Side, pairs: [(usize, &FElement); 2]| {
            let mut out = CoactionOutput::zero(side);
            for (m, u) in pairs {
                for (&p, c) in u.terms() {
                    out.add_term((m, p), c);
                }
            }
            out
        };
        let (a, b, c, d) = (f.a(), f.b(), f.c(), f.d());
        let rx = gen(Side::Right, [(ix, &a), (iy, &c)]);
        let ry = gen(Side::Right, [(ix, &b), (iy, &d)]);
        let lx = gen(Side::Left, [(ix, &a), (iy, &b)]);
        let ly = gen(Side::Left, [(ix, &c), (iy, &d)]);
        let mut this = Coactions { pair: pair.clone(), plane, left: Vec::new(), right: Vec::new() };
        let mut left = Vec::with_capacity(n * n);
        let mut right = Vec::with_capacity(n * n);
        for r in 0..n {
            for s in 0..n {
                let (l, rr) = if r == 0 && s == 0 {
                    let mut l = CoactionOutput::zero(Side::Left);
                    l.add_term((0, f.unit_index()), &CycScalar::one(&field));
                    let mut rr = CoactionOutput::zero(Side::Right);
                    rr.add_term((0, f.unit_index()), &CycScalar::one(&field));
                    (l, rr)
                } else if r > 0 {
                    let prev = (r - 1) * n + s;
                    (this.mul(&lx, &left[prev]), this.mul(&rx, &right[prev]))
                } else {
                    let prev = s - 1;
                    (this.mul(&ly, &left[prev]), this.mul(&ry, &right[prev]))
                };
                left.push(l);
                right.push(rr);
            }
        }
        this.left = left;
        this.right = right;
        this
    }

    pub fn plane(&self) -> &Plane {
        &self.plane
    }

    /// Product in `M (x) F` or `F (x) M`; both factors are algebras.
    pub fn mul(&self, u: &CoactionOutput, v: &CoactionOutput) -> CoactionOutput {
        let n = self.plane.n();
        let f = &self.pair.f;
        let mut out = CoactionOutput::zero(u.side);
        for (&(m1, p1), c1) in &u.terms {
            for (&(m2, p2), c2) in &v.terms {
                let (m, e) = plane_product(n, m1, m2);
                let c = (c1 * c2).mul_qpow(e as i64);
                for (p, s) in f.product(p1, p2) {
                    out.add_term((m, *p), &(&c * s));
                }
            }
        }
        out
    }

    fn apply(&self, table: &[CoactionOutput], side: Side, z: &PlaneElement) -> CoactionOutput {
        let mut out = CoactionOutput::zero(side);
        for (&(r, s), c) in z.terms() {
            for (k, v) in &table[self.plane.index(r, s)].terms {
                out.add_term(*k, &(c * v));
            }
        }
        out
    }

    pub fn coact_left(&self, z: &PlaneElement) -> CoactionOutput {
        self.apply(&self.left, Side::Left, z)
    }

    pub fn coact_right(&self, z: &PlaneElement) -> CoactionOutput {
        self.apply(&self.right, Side::Right, z)
    }

    /// `(eps (x) id) Delta_L = id`, `(id (x) eps) Delta_R = id`.
    pub fn check_counit(&self) -> Result<()> {
        let f = &self.pair.f;
        for (i, (r, s)) in self.plane.basis().into_iter().enumerate() {
            for (side, t) in [(Side::Left, &self.left[i]), (Side::Right, &self.right[i])] {
                let mut v: BTreeMap<usize, CycScalar> = BTreeMap::new();
                for (&(m, p), c) in &t.terms {
                    let e = f.counit_basis(p);
                    if !e.is_zero() {
                        *v.entry(m).or_insert_with(|| CycScalar::zero(f.field())) += &(c * &e);
                    }
                }
                v.retain(|_, c| !c.is_zero());
                if v.len() != 1 || !v.get(&i).is_some_and(CycScalar::is_one) {
                    return Err(Error::CheckFailed(alloc::format!("counit law fails for {side:?} coaction on x^{r} y^{s}")));
                }
            }
        }
        Ok(())
    }

    /// `(Delta (x) id) Delta_L = (id (x) Delta_L) Delta_L` and the mirror law for `Delta_R`.
    pub fn check_coassociativity(&self) -> Result<()> {
        let f = &self.pair.f;
        let field = f.field();
        type Triple = BTreeMap<(usize, usize, usize), CycScalar>;
        let add = |t: &mut Triple, k: (usize, usize, usize), c: CycScalar| {
            *t.entry(k).or_insert_with(|| CycScalar::zero(field)) += &c;
        };
        for (i, (r, s)) in self.plane.basis().into_iter().enumerate() {
            for side in [Side::Left, Side::Right] {
                let table = if side == Side::Left { &self.left } else { &self.right };
                // keys (plane, outer F, inner F): outer is the F slot next to M
                let mut lhs = Triple::new();
                let mut rhs = Triple::new();
                for (&(m, p), c) in &table[i].terms {
                    for (&(m2, p2), c2) in &table[m].terms {
                        add(&mut lhs, (m2, p2, p), c * c2);
                    }
                    for (k, c2) in f.coproduct_basis(p).terms() {
                        let key = match side {
                            Side::Right => (m, k[0], k[1]),
                            Side::Left => (m, k[1], k[0]),
                        };
                        add(&mut rhs, key, c * c2);
                    }
                }
                lhs.retain(|_, c| !c.is_zero());
                rhs.retain(|_, c| !c.is_zero());
                if lhs != rhs {
                    return Err(Error::CheckFailed(alloc::format!("coassociativity fails for {side:?} coaction on x^{r} y^{s}")));
                }
            }
        }
        Ok(())
    }

    /// `Delta(z w) = Delta(z) Delta(w)` on all monomial pairs, both sides.
    pub fn check_comodule_algebra(&self) -> Result<()> {
        let basis = self.plane.basis();
        let field = self.plane.field();
        for &(r, s) in &basis {
            let z = PlaneElement::monomial(field, r, s);
            for &(r2, s2) in &basis {
                let w = PlaneElement::monomial(field, r2, s2);
                let zw = z.mul(&w);
                let ok_l = self.coact_left(&zw) == self.mul(&self.coact_left(&z), &self.coact_left(&w));
                let ok_r = self.coact_right(&zw) == self.mul(&self.coact_right(&z), &self.coact_right(&w));
                if !ok_l || !ok_r {
                    return Err(Error::CheckFailed(alloc::format!(
                        "comodule algebra law fails for x^{r} y^{s} * x^{r2} y^{s2}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// `(Delta z)* = Delta(z*)` with the componentwise star on the tensor product.
    pub fn check_star_covariance(&self) -> Result<()> {
        let f = &self.pair.f;
        let field = self.plane.field();
        let star = |t: &CoactionOutput| {
            let mut out = CoactionOutput::zero(t.side);
            for (&(m, p), c) in &t.terms {
                let (r, s) = (m / self.plane.n(), m % self.plane.n());
                let zs = PlaneElement::monomial(field, r, s).star();
                let fs = f.star_basis(p);
                for (&(r2, s2), a) in zs.terms() {
                    for (&p2, b) in fs.terms() {
                        out.add_term((self.plane.index(r2, s2), p2), &(&c.conj() * &(a * b)));
                    }
                }
            }
            out
        };
        for (r, s) in self.plane.basis() {
            let z = PlaneElement::monomial(field, r, s);
            if star(&self.coact_right(&z)) != self.coact_right(&z.star()) {
                return Err(Error::CheckFailed(alloc::format!("(Delta_R z)* != Delta_R(z*) for z = x^{r} y^{s}")));
            }
            if star(&self.coact_left(&z)) != self.coact_left(&z.star()) {
                return Err(Error::CheckFailed(alloc::format!("(Delta_L z)* != Delta_L(z*) for z = x^{r} y^{s}")));
            }
        }
        Ok(())
    }

    pub fn check_all(&self) -> Result<()> {
        self.check_counit()?;
        self.check_coassociativity()?;
        self.check_comodule_algebra()?;
        self.check_star_covariance()
    }
}

/// The left action of `H` on the plane.
pub struct PlaneAction {
    pair: Arc<DualPair>,
    plane: Plane,
    rep: Representation,
}

impl PlaneAction {
    /// Generator matrices from the closed formulas
    /// `K x^r y^s = q^{r-s} x^r y^s`,
    /// `Xp x^r y^s = q^r (1 - q^{-2s})/(1 - q^{-2}) x^{r+1} y^{s-1}`,
    /// `Xm x^r y^s = q^s (1 - q^{-2r})/(1 - q^{-2}) x^{r-1} y^{s+1}`.
    pub fn new(pair: &Arc<DualPair>) -> PlaneAction {
        let field = pair.field().clone();
        let plane = Plane::new(&field);
        let n = plane.n();
        let d = plane.dim();
        let denom = (CycScalar::one(&field) - CycScalar::qpow(&field, -2)).inv().expect("q^2 != 1");
        let bracket = |e: usize| (CycScalar::one(&field) - CycScalar::qpow(&field, -2 * e as i64)) * &denom;
        let mut k = Matrix::zeros(&field, d, d);
        let mut xp = Matrix::zeros(&field, d, d);
        let mut xm = Matrix::zeros(&field, d, d);
        for r in 0..n {
            for s in 0..n {
                let col = plane.index(r, s);
                k.set(col, col, CycScalar::qpow(&field, r as i64 - s as i64));
                let cp = bracket(s).mul_qpow(r as i64);
                if !cp.is_zero() {
                    xp.set(plane.index((r + 1) % n, (s + n - 1) % n), col, cp);
                }
                let cm = bracket(r).mul_qpow(s as i64);
                if !cm.is_zero() {
                    xm.set(plane.index((r + n - 1) % n, (s + 1) % n), col, cm);
                }
            }
        }
        let rep = Representation::new(k, xp, xm).expect("square").with_label("M");
        PlaneAction { pair: pair.clone(), plane, rep }
    }

    pub fn plane(&self) -> &Plane {
        &self.plane
    }

    pub fn pair(&self) -> &Arc<DualPair> {
        &self.pair
    }

    /// The plane as an `N^2`-dimensional module, in the monomial basis.
    pub fn representation(&self) -> &Representation {
        &self.rep
    }

    pub fn act(&self, h: &HElement, z: &PlaneElement) -> PlaneElement {
        let m = self.rep.rho(&self.pair.h, h);
        self.plane.from_vector(&m.apply(&self.plane.to_vector(z)))
    }

    pub fn act_generator(&self, g: HGen, z: &PlaneElement) -> PlaneElement {
        self.plane.from_vector(&self.rep.generator(g).apply(&self.plane.to_vector(z)))
    }

    /// `X[z] = (id (x) <X, .>) Delta_R z`.
    pub fn act_by_pairing(&self, coactions: &Coactions, h: &HElement, z: &PlaneElement) -> PlaneElement {
        let n = self.plane.n();
        let mut out = PlaneElement::zero(self.plane.field());
        for (&(m, p), c) in coactions.coact_right(z).terms() {
            let mut v = CycScalar::zero(self.plane.field());
            for (&hm, hc) in h.terms() {
                let pv = self.pair.pair_basis(hm, p);
                if !pv.is_zero() {
                    v += &(hc * pv);
                }
            }
            out.add_term(m / n, m % n, &(c * &v));
        }
        out
    }

    /// The differentials `dx, dy` transform like `x, y`: the action restricted
    /// to the span of the degree-one monomials.
    pub fn manin_dual(&self) -> Representation {
        let field = self.plane.field();
        let basis = [self.plane.index(1, 0), self.plane.index(0, 1)];
        let restrict = |m: &Matrix| Matrix::from_fn(field, 2, 2, |i, j| m.get(basis[i], basis[j]).clone());
        Representation::new(restrict(self.rep.k()), restrict(self.rep.xp()), restrict(self.rep.xm()))
            .expect("square")
            .with_label("dx, dy")
    }

    /// `h[z w] = h_(1)[z] h_(2)[w]` for the generators and `K^-1` on all
    /// monomial pairs, and agreement with the pairing definition.
    pub fn check_module_algebra(&self, coactions: &Coactions) -> Result<()> {
        let h = &self.pair.h;
        let field = self.plane.field();
        let gens = [h.k(), h.k_inv(), h.xp(), h.xm()];
        let basis = self.plane.basis();
        let mut cache: BTreeMap<usize, Matrix> = BTreeMap::new();
        let mut rho = |idx: usize| cache.entry(idx).or_insert_with(|| self.rep.rho(h, &Element::basis(field, idx))).clone();
        for g in &gens {
            let delta = h.coproduct(g);
            let gm = self.rep.rho(h, g);
            let mut pieces = Vec::new();
            for (k, c) in delta.terms() {
                pieces.push((rho(k[0]), rho(k[1]), c.clone()));
            }
            for &(r, s) in &basis {
                let z = PlaneElement::monomial(field, r, s);
                let zv = self.plane.to_vector(&z);
                if self.act_by_pairing(coactions, g, &z) != self.plane.from_vector(&gm.apply(&zv)) {
                    return Err(Error::CheckFailed(alloc::format!("action of {g} on x^{r} y^{s} disagrees with the pairing")));
                }
                for &(r2, s2) in &basis {
                    let w = PlaneElement::monomial(field, r2, s2);
                    let lhs = self.plane.from_vector(&gm.apply(&self.plane.to_vector(&z.mul(&w))));
                    let mut rhs = PlaneElement::zero(field);
                    for (a, b, c) in &pieces {
                        let hz = self.plane.from_vector(&a.apply(&zv));
                        let hw = self.plane.from_vector(&b.apply(&self.plane.to_vector(&w)));
                        rhs = rhs.add(&hz.mul(&hw).scale(c));
                    }
                    if lhs != rhs {
                        return Err(Error::CheckFailed(alloc::format!(
                            "module algebra law fails for {g} on x^{r} y^{s} * x^{r2} y^{s2}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// `h(z*) = [(S h)* z]*` for the generators on all monomials.
    pub fn check_star_covariance(&self) -> Result<()> {
        let h = &self.pair.h;
        let field = self.plane.field();
        for g in [h.k(), h.xp(), h.xm()] {
            let sg = h.star(&h.antipode(&g));
            for (r, s) in self.plane.basis() {
                let z = PlaneElement::monomial(field, r, s);
                if self.act(&g, &z.star()) != self.act(&sg, &z).star() {
                    return Err(Error::CheckFailed(alloc::format!("star covariance fails for {g} on x^{r} y^{s}")));
                }
            }
        }
        Ok(())
    }

    pub fn check_relations(&self) -> Result<()> {
        self.rep.check_relations()
    }

    /// Invariant subspaces indexed by `t = (r + s) mod N`. Within one class
    /// the `K`-weights `q^{2r - t}` are distinct, so every submodule is
    /// spanned by monomials and the lattice is found by closing subsets.
    pub fn decompose(&self) -> Result<Vec<PlaneSummand>> {
        let n = self.plane.n();
        let field = self.plane.field();
        let mut out = Vec::with_capacity(n);
        for t in 0..n {
            let monos: Vec<(usize, usize)> = (0..n).map(|r| (r, (t + n - r) % n)).collect();
            let idx: Vec<usize> = monos.iter().map(|&(r, s)| self.plane.index(r, s)).collect();
            // Neighbours reached by Xp, Xm, within the class.
            let reach: Vec<Vec<usize>> = idx
                .iter()
                .map(|&i| {
                    let mut v = Vec::new();
                    for m in [self.rep.xp(), self.rep.xm()] {
                        for (j, &o) in idx.iter().enumerate() {
                            if !m.get(o, i).is_zero() {
                                v.push(j);
                            }
                        }
                    }
                    v
                })
                .collect();
            let closed = |mask: u32| (0..n).all(|i| mask & (1 << i) == 0 || reach[i].iter().all(|&j| mask & (1 << j) != 0));
            let full = (1u32 << n) - 1;
            let subs: Vec<u32> = (1..full).filter(|&m| closed(m)).collect();
            let decomposable = subs.iter().any(|&m| closed(full & !m));
            let vecs: Vec<Vector> = idx.iter().map(|&i| crate::linalg::unit_vector(field, self.plane.dim(), i)).collect();
            let space = Subspace::span(field, self.plane.dim(), &vecs);
            if !self.rep.is_invariant(&space) {
                return Err(Error::CheckFailed(alloc::format!("class {t} is not invariant")));
            }
            let module = self.rep.restrict(&space)?;
            if decomposable || !is_indecomposable(&module) {
                return Err(Error::CheckFailed(alloc::format!("class {t} is decomposable")));
            }
            let mut sub_dims: Vec<usize> = subs.iter().map(|m| m.count_ones() as usize).collect();
            sub_dims.sort_unstable();
            let submodules: Vec<Vec<(usize, usize)>> = subs
                .iter()
                .map(|&m| (0..n).filter(|i| m & (1 << i) != 0).map(|i| monos[i]).collect())
                .collect();
            let label = plane_summand_label(n, t);
            out.push(PlaneSummand {
                degree: t,
                label: label.clone(),
                monomials: monos,
                irreducible: subs.is_empty(),
                submodule_dims: sub_dims,
                submodules,
                module: module.with_label(&label),
            });
        }
        Ok(out)
    }

    /// The irreducible summand is the simple projective `L_N`; the others have
    /// a unique proper submodule, of dimension `t + 1`.
    pub fn check_decomposition(&self, summands: &[PlaneSummand]) -> Result<()> {
        let n = self.plane.n();
        let field = self.plane.field();
        let irr = Representation::simple(field, n);
        let mut irreducible = 0;
        for s in summands {
            if s.irreducible {
                irreducible += 1;
                if s.degree != n - 1 || find_isomorphism(&s.module, &irr).is_none() {
                    return Err(Error::CheckFailed(alloc::format!("irreducible summand {} is not L_N", s.label)));
                }
            } else if s.submodule_dims != vec![s.degree + 1] {
                return Err(Error::CheckFailed(alloc::format!("summand {} has submodules of dims {:?}", s.label, s.submodule_dims)));
            }
        }
        if irreducible != 1 {
            return Err(Error::CheckFailed(alloc::format!("{irreducible} irreducible summands")));
        }
        for (i, a) in summands.iter().enumerate() {
            for b in &summands[i + 1..] {
                if a.module.k_spectrum() == b.module.k_spectrum() && find_isomorphism(&a.module, &b.module).is_some() {
                    return Err(Error::CheckFailed(alloc::format!("summands {} and {} are isomorphic", a.label, b.label)));
                }
            }
        }
        Ok(())
    }

    /// Every invertible element of class `t` among `samples` (coefficient
    /// vectors over the class monomials) has its inverse in class `-t`.
    /// Returns the number of invertible samples checked.
    pub fn check_inverse_mapping(&self, t: usize, samples: &[Vec<CycScalar>]) -> Result<usize> {
        let n = self.plane.n();
        let field = self.plane.field();
        let target = (n - t) % n;
        let mut count = 0;
        for coeffs in samples {
            let mut z = PlaneElement::zero(field);
            for (r, c) in coeffs.iter().enumerate().take(n) {
                z.add_term(r, (t + n - r) % n, c);
            }
            let Some(inv) = z.to_matrix().inverse() else { continue };
            let zi = self.plane.from_matrix(&inv)?;
            if !z.mul(&zi).sub(&PlaneElement::one(field)).is_zero() {
                return Err(Error::CheckFailed(String::from("matrix inverse is not a plane inverse")));
            }
            if let Some((&(r, s), _)) = zi.terms().iter().find(|(&(r, s), _)| (r + s) % n != target) {
                return Err(Error::CheckFailed(alloc::format!("inverse of {z} has the monomial x^{r} y^{s} outside class {target}")));
            }
            count += 1;
        }
        Ok(count)
    }

    /// All coefficient vectors with entries in `{0, 1, -1, q, -q}`.
    pub fn unit_samples(&self) -> Vec<Vec<CycScalar>> {
        let field = self.plane.field();
        let vals = [
            CycScalar::zero(field),
            CycScalar::one(field),
            -CycScalar::one(field),
            CycScalar::q(field),
            -CycScalar::q(field),
        ];
        let n = self.plane.n();
        let mut out = vec![Vec::new()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|v: Vec<CycScalar>| {
                    vals.iter().map(move |c| {
                        let mut w = v.clone();
                        w.push(c.clone());
                        w
                    })
                })
                .collect();
        }
        out
    }
}

/// One `N`-dimensional summand of the plane.
#[derive(Clone, Debug)]
pub struct PlaneSummand {
    /// `(r + s) mod N` of its monomials.
    pub degree: usize,
    pub label: String,
    pub monomials: Vec<(usize, usize)>,
    pub irreducible: bool,
    /// Dimensions of the proper nonzero submodules.
    pub submodule_dims: Vec<usize>,
    pub submodules: Vec<Vec<(usize, usize)>>,
    pub module: Representation,
}

/// `N_irr` for the top class; `N_p` with `p = t + 1` otherwise, and the
/// names `3_odd`, `3_eve` at `N = 3`.
pub fn plane_summand_label(n: usize, t: usize) -> String {
    if t == n - 1 {
        return alloc::format!("{n}_irr");
    }
    match (n, t) {
        (3, 0) => String::from("3_odd"),
        (3, 1) => String::from("3_eve"),
        _ => alloc::format!("{n}_{}", t + 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::CycField;

    fn setup(n: u32) -> (Arc<DualPair>, Coactions, PlaneAction) {
        let f = CycField::new(n).unwrap();
        let pair = Arc::new(DualPair::new(&f));
        let co = Coactions::new(&pair);
        let act = PlaneAction::new(&pair);
        (pair, co, act)
    }

    #[test]
    fn coaction_examples() {
        let (pair, co, _) = setup(3);
        let plane = co.plane().clone();
        let field = plane.field().clone();
        let dl = co.coact_left(&plane.x());
        let (a, b) = (pair.f.a(), pair.f.b());
        let ia = *a.terms().keys().next().unwrap();
        let ib = *b.terms().keys().next().unwrap();
        assert_eq!(dl.terms().len(), 2);
        assert!(dl.coeff(plane.index(1, 0), ia).unwrap().is_one());
        assert!(dl.coeff(plane.index(0, 1), ib).unwrap().is_one());
        let one = co.coact_left(&PlaneElement::one(&field));
        assert_eq!(one.terms().len(), 1);
        assert!(one.coeff(0, pair.f.unit_index()).unwrap().is_one());
        co.check_all().unwrap();
    }

    #[test]
    fn action_examples() {
        let (pair, co, act) = setup(3);
        let field = pair.field().clone();
        let plane = act.plane().clone();
        act.check_relations().unwrap();
        assert_eq!(act.act_generator(HGen::K, &plane.x()), plane.x().scale(&CycScalar::q(&field)));
        assert_eq!(act.act_generator(HGen::Xm, &plane.x()), plane.y());
        assert!(act.act_generator(HGen::Xp, &PlaneElement::one(&field)).is_zero());
        // Xp[xy] = Xp[x] y + K[x] Xp[y] = q x^2
        let xy = plane.x().mul(&plane.y());
        assert_eq!(act.act_generator(HGen::Xp, &xy), PlaneElement::monomial(&field, 2, 0).scale(&CycScalar::q(&field)));
        act.check_module_algebra(&co).unwrap();
        act.check_star_covariance().unwrap();
        let dual = act.manin_dual();
        dual.check_relations().unwrap();
        assert!(find_isomorphism(&dual, &Representation::simple(&field, 2)).is_some());
    }

    #[test]
    fn ladders_n3() {
        let (pair, _, act) = setup(3);
        let field = pair.field().clone();
        let step = |g: HGen, r: usize, s: usize| {
            let v = act.act_generator(g, &PlaneElement::monomial(&field, r, s));
            v.terms().keys().copied().collect::<Vec<_>>()
        };
        assert_eq!(step(HGen::Xp, 0, 2), vec![(1, 1)]);
        assert_eq!(step(HGen::Xp, 1, 1), vec![(2, 0)]);
        assert_eq!(step(HGen::Xp, 2, 0), vec![]);
        assert_eq!(step(HGen::Xp, 2, 2), vec![(0, 1)]);
        assert_eq!(step(HGen::Xp, 0, 1), vec![(1, 0)]);
        assert_eq!(step(HGen::Xp, 1, 0), vec![]);
        assert_eq!(step(HGen::Xm, 1, 0), vec![(0, 1)]);
        assert_eq!(step(HGen::Xm, 0, 1), vec![]);
        assert_eq!(step(HGen::Xm, 2, 2), vec![(1, 0)]);
    }

    #[test]
    fn decompose_n3() {
        let (_, _, act) = setup(3);
        let s = act.decompose().unwrap();
        act.check_decomposition(&s).unwrap();
        let labels: Vec<&str> = s.iter().map(|x| x.label.as_str()).collect();
        assert_eq!(labels, ["3_odd", "3_eve", "3_irr"]);
        assert_eq!(s[0].monomials, vec![(0, 0), (1, 2), (2, 1)]);
        assert_eq!(s[0].submodule_dims, vec![1]);
        assert_eq!(s[1].submodule_dims, vec![2]);
        assert!(s[2].irreducible);
        let samples = act.unit_samples();
        for (t, target) in [(0, 0), (1, 2), (2, 1)] {
            assert!(act.check_inverse_mapping(t, &samples).unwrap() > 0, "class {t} -> {target}");
        }
    }

    #[test]
    fn decompose_n5() {
        let (_, _, act) = setup(5);
        let s = act.decompose().unwrap();
        act.check_decomposition(&s).unwrap();
        let dims: Vec<Vec<usize>> = s.iter().map(|x| x.submodule_dims.clone()).collect();
        assert_eq!(dims, vec![vec![1], vec![2], vec![3], vec![4], vec![]]);
    }
}
