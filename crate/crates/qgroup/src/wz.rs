//! The reduced Wess-Zumino complex over the quantum plane.
//!
//! Forms are written with coefficients on the left:
//! `f0 + f1 dx + f2 dy + f3 dx dy`. Functions move right past the
//! differentials with
//! `dx x = q^-2 x dx`, `dx y = q^-1 y dx`, `dy y = q^-2 y dy`,
//! `dy x = q^-1 x dy - (1 - q^-2) y dx`,
//! and `dx^2 = dy^2 = 0`, `dy dx = -q dx dy`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::action::{Coactions, PlaneAction};
use crate::cyclo::{CycField, CycScalar};
use crate::error::{Error, Result};
use crate::hopf::{BasisStar, DualPair};
use crate::linalg::{Matrix, Vector};
use crate::qplane::{fmt_terms, join_factors, power, Plane, PlaneElement};
use crate::repcat::Representation;
use crate::tensor::BasisAlgebra;

/// Differential part of a basis form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Word {
    One,
    Dx,
    Dy,
    DxDy,
}

impl Word {
    pub const ALL: [Word; 4] = [Word::One, Word::Dx, Word::Dy, Word::DxDy];

    pub fn degree(self) -> usize {
        match self {
            Word::One => 0,
            Word::Dx | Word::Dy => 1,
            Word::DxDy => 2,
        }
    }

    fn slot(self) -> usize {
        self as usize
    }

    fn name(self) -> Option<String> {
        match self {
            Word::One => None,
            Word::Dx => Some("dx".into()),
            Word::Dy => Some("dy".into()),
            Word::DxDy => Some("dx*dy".into()),
        }
    }
}

/// `f0 + f1 dx + f2 dy + f3 dx dy`.
#[derive(Clone, PartialEq, Eq)]
pub struct WzForm {
    parts: [PlaneElement; 4],
}

impl WzForm {
    pub fn zero(field: &Arc<CycField>) -> WzForm {
        let z = PlaneElement::zero(field);
        WzForm { parts: [z.clone(), z.clone(), z.clone(), z] }
    }

    pub fn function(f: &PlaneElement) -> WzForm {
        WzForm::with_part(Word::One, f)
    }

    pub fn one_form(fx: &PlaneElement, fy: &PlaneElement) -> WzForm {
        let mut w = WzForm::with_part(Word::Dx, fx);
        w.parts[Word::Dy.slot()] = fy.clone();
        w
    }

    pub fn two_form(f: &PlaneElement) -> WzForm {
        WzForm::with_part(Word::DxDy, f)
    }

    pub fn with_part(word: Word, f: &PlaneElement) -> WzForm {
        let mut w = WzForm::zero(f.field());
        w.parts[word.slot()] = f.clone();
        w
    }

    pub fn dx(field: &Arc<CycField>) -> WzForm {
        WzForm::with_part(Word::Dx, &PlaneElement::one(field))
    }

    pub fn dy(field: &Arc<CycField>) -> WzForm {
        WzForm::with_part(Word::Dy, &PlaneElement::one(field))
    }

    pub fn field(&self) -> &Arc<CycField> {
        self.parts[0].field()
    }

    pub fn part(&self, word: Word) -> &PlaneElement {
        &self.parts[word.slot()]
    }

    pub fn deg0(&self) -> &PlaneElement {
        self.part(Word::One)
    }

    pub fn deg1x(&self) -> &PlaneElement {
        self.part(Word::Dx)
    }

    pub fn deg1y(&self) -> &PlaneElement {
        self.part(Word::Dy)
    }

    pub fn deg2(&self) -> &PlaneElement {
        self.part(Word::DxDy)
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(PlaneElement::is_zero)
    }

    /// Component of degree `p`.
    pub fn grade(&self, p: usize) -> WzForm {
        let mut out = WzForm::zero(self.field());
        for w in Word::ALL {
            if w.degree() == p {
                out.parts[w.slot()] = self.parts[w.slot()].clone();
            }
        }
        out
    }

    /// `Some(p)` if all nonzero components have degree `p`.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut deg = None;
        for w in Word::ALL {
            if !self.parts[w.slot()].is_zero() {
                match deg {
                    None => deg = Some(w.degree()),
                    Some(d) if d != w.degree() => return None,
                    _ => {}
                }
            }
        }
        deg
    }

    pub fn add(&self, o: &WzForm) -> WzForm {
        WzForm { parts: core::array::from_fn(|i| self.parts[i].add(&o.parts[i])) }
    }

    pub fn sub(&self, o: &WzForm) -> WzForm {
        WzForm { parts: core::array::from_fn(|i| self.parts[i].sub(&o.parts[i])) }
    }

    pub fn scale(&self, c: &CycScalar) -> WzForm {
        WzForm { parts: core::array::from_fn(|i| self.parts[i].scale(c)) }
    }

    pub fn neg(&self) -> WzForm {
        self.scale(&-CycScalar::one(self.field()))
    }

    /// Terms `(word, r, s, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (Word, usize, usize, &CycScalar)> {
        Word::ALL
            .into_iter()
            .flat_map(move |w| self.parts[w.slot()].terms().iter().map(move |(&(r, s), c)| (w, r, s, c)))
    }
}

impl fmt::Display for WzForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.terms().map(|(w, r, s, c)| (join_factors(&[power("x", r), power("y", s), w.name()]), c)))
    }
}

impl fmt::Debug for WzForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

type Tau = [[PlaneElement; 2]; 2];

/// Multiplication, differential and star of the complex for one `N`.
pub struct WzComplex {
    plane: Plane,
    kappa: CycScalar,
    /// `dxi m = sum_eta tau[m][xi][eta] deta` for monomials `m`.
    tau: Vec<Tau>,
    /// `d m` for monomials `m`.
    dtable: Vec<WzForm>,
}

impl WzComplex {
    /// The complex with `dy dx = -q dx dy`, the only value compatible with
    /// `d^2 = 0` and the function/differential rules.
    pub fn new(field: &Arc<CycField>) -> WzComplex {
        WzComplex::with_kappa(field, -CycScalar::q(field))
    }

    /// The complex with `dy dx = kappa dx dy`.
    pub fn with_kappa(field: &Arc<CycField>, kappa: CycScalar) -> WzComplex {
        let plane = Plane::new(field);
        let n = plane.n();
        let zero = PlaneElement::zero(field);
        let x = plane.x();
        let y = plane.y();
        let tx: Tau = [
            [x.scale(&CycScalar::qpow(field, -2)), zero.clone()],
            [y.scale(&-(CycScalar::one(field) - CycScalar::qpow(field, -2))), x.scale(&CycScalar::qpow(field, -1))],
        ];
        let ty: Tau = [[y.scale(&CycScalar::qpow(field, -1)), zero.clone()], [zero.clone(), y.scale(&CycScalar::qpow(field, -2))]];
        let one = PlaneElement::one(field);
        let id: Tau = [[one.clone(), zero.clone()], [zero.clone(), one]];
        let mut tau: Vec<Tau> = Vec::with_capacity(n * n);
        for r in 0..n {
            for s in 0..n {
                let t = if r == 0 && s == 0 {
                    id.clone()
                } else if r > 0 {
                    tau_mul(&tx, &tau[(r - 1) * n + s])
                } else {
                    tau_mul(&ty, &tau[s - 1])
                };
                tau.push(t);
            }
        }
        let mut this = WzComplex { plane, kappa, tau, dtable: Vec::new() };
        let mut dtable: Vec<WzForm> = Vec::with_capacity(n * n);
        for r in 0..n {
            for s in 0..n {
                let form = if r == 0 && s == 0 {
                    WzForm::zero(field)
                } else {
                    // d(g m) = dg m + g dm
                    let (g, dg, prev) = if r > 0 {
                        (this.plane.x(), WzForm::dx(field), (r - 1) * n + s)
                    } else {
                        (this.plane.y(), WzForm::dy(field), s - 1)
                    };
                    let m = PlaneElement::monomial(field, prev / n, prev % n);
                    this.mul(&dg, &WzForm::function(&m)).add(&this.mul(&WzForm::function(&g), &dtable[prev]))
                };
                dtable.push(form);
            }
        }
        this.dtable = dtable;
        this
    }

    pub fn plane(&self) -> &Plane {
        &self.plane
    }

    pub fn field(&self) -> &Arc<CycField> {
        self.plane.field()
    }

    pub fn kappa(&self) -> &CycScalar {
        &self.kappa
    }

    /// `(dim Omega^0, dim Omega^1, dim Omega^2)`.
    pub fn dims(&self) -> (usize, usize, usize) {
        let d = self.plane.dim();
        (d, 2 * d, d)
    }

    /// `dxi f = sum_eta tau(f)[xi][eta] deta`.
    pub fn tau(&self, f: &PlaneElement) -> Tau {
        let z = PlaneElement::zero(self.field());
        let mut out: Tau = [[z.clone(), z.clone()], [z.clone(), z]];
        for (&(r, s), c) in f.terms() {
            let t = &self.tau[self.plane.index(r, s)];
            for i in 0..2 {
                for j in 0..2 {
                    out[i][j] = out[i][j].add(&t[i][j].scale(c));
                }
            }
        }
        out
    }

    /// `dx dy f = tau2(f) dx dy`.
    pub fn tau2(&self, f: &PlaneElement) -> PlaneElement {
        let ty = self.tau(f);
        let a = self.tau(&ty[1][1])[0][0].clone();
        let b = self.tau(&ty[1][0])[0][1].clone();
        a.add(&b.scale(&self.kappa))
    }

    /// `w1 w2` for words.
    fn word_product(&self, a: Word, b: Word) -> Option<(CycScalar, Word)> {
        let one = CycScalar::one(self.field());
        match (a, b) {
            (Word::One, w) | (w, Word::One) => Some((one, w)),
            (Word::Dx, Word::Dy) => Some((one, Word::DxDy)),
            (Word::Dy, Word::Dx) => Some((self.kappa.clone(), Word::DxDy)),
            _ => None,
        }
    }

    /// `w f = sum f_i w_i`.
    fn move_past(&self, w: Word, f: &PlaneElement) -> Vec<(PlaneElement, Word)> {
        match w {
            Word::One => vec![(f.clone(), Word::One)],
            Word::Dx | Word::Dy => {
                let t = self.tau(f);
                let row = if w == Word::Dx { 0 } else { 1 };
                vec![(t[row][0].clone(), Word::Dx), (t[row][1].clone(), Word::Dy)]
            }
            Word::DxDy => vec![(self.tau2(f), Word::DxDy)],
        }
    }

    pub fn mul(&self, a: &WzForm, b: &WzForm) -> WzForm {
        let mut out = WzForm::zero(self.field());
        for w1 in Word::ALL {
            let f1 = a.part(w1);
            if f1.is_zero() {
                continue;
            }
            for w2 in Word::ALL {
                let f2 = b.part(w2);
                if f2.is_zero() || w1.degree() + w2.degree() > 2 {
                    continue;
                }
                for (g, w) in self.move_past(w1, f2) {
                    if g.is_zero() {
                        continue;
                    }
                    if let Some((c, word)) = self.word_product(w, w2) {
                        let slot = &mut out.parts[word.slot()];
                        *slot = slot.add(&f1.mul(&g).scale(&c));
                    }
                }
            }
        }
        out
    }

    /// Exterior derivative with `d(x) = dx`, `d(y) = dy`, `d(dx) = d(dy) = 0`.
    pub fn d(&self, w: &WzForm) -> WzForm {
        let field = self.field();
        let mut out = WzForm::zero(field);
        for (&(r, s), c) in w.deg0().terms() {
            out = out.add(&self.dtable[self.plane.index(r, s)].scale(c));
        }
        for word in [Word::Dx, Word::Dy] {
            let f = w.part(word);
            if f.is_zero() {
                continue;
            }
            let df = self.d(&WzForm::function(f));
            out = out.add(&self.mul(&df, &WzForm::with_part(word, &PlaneElement::one(field))));
        }
        out
    }

    /// Antilinear antimultiplicative involution with `dx* = dx`, `dy* = dy`.
    pub fn star(&self, w: &WzForm) -> WzForm {
        let field = self.field();
        let one = PlaneElement::one(field);
        let mut out = WzForm::zero(field);
        for word in Word::ALL {
            let f = w.part(word);
            if f.is_zero() {
                continue;
            }
            // (f w)* = w* f*, with (dx dy)* = dy dx
            let ws = match word {
                Word::DxDy => WzForm::two_form(&one.scale(&self.kappa)),
                other => WzForm::with_part(other, &one),
            };
            out = out.add(&self.mul(&ws, &WzForm::function(&f.star())));
        }
        out
    }

    /// Basis forms `x^r y^s w`, ordered by word then monomial.
    pub fn basis(&self) -> Vec<WzForm> {
        let field = self.field();
        let mut v = Vec::with_capacity(4 * self.plane.dim());
        for w in Word::ALL {
            for (r, s) in self.plane.basis() {
                v.push(WzForm::with_part(w, &PlaneElement::monomial(field, r, s)));
            }
        }
        v
    }

    pub fn basis_of_degree(&self, p: usize) -> Vec<WzForm> {
        self.basis().into_iter().filter(|b| b.homogeneous_degree() == Some(p)).collect()
    }

    /// Coordinates in [`WzComplex::basis`].
    pub fn to_vector(&self, w: &WzForm) -> Vector {
        let d = self.plane.dim();
        let mut v = crate::linalg::zero_vector(self.field(), 4 * d);
        for (word, r, s, c) in w.terms() {
            v[word.slot() * d + self.plane.index(r, s)] = c.clone();
        }
        v
    }

    pub fn from_vector(&self, v: &[CycScalar]) -> WzForm {
        let d = self.plane.dim();
        let n = self.plane.n();
        let mut out = WzForm::zero(self.field());
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                let (slot, m) = (i / d, i % d);
                out.parts[slot].add_term(m / n, m % n, c);
            }
        }
        out
    }

    /// Matrix of a linear map on the whole complex.
    pub fn operator_matrix(&self, f: impl Fn(&WzForm) -> WzForm) -> Matrix {
        let cols: Vec<Vector> = self.basis().iter().map(|b| self.to_vector(&f(b))).collect();
        Matrix::from_columns(self.field(), 4 * self.plane.dim(), &cols)
    }

    /// Matrix of `d: Omega^p -> Omega^(p+1)` in the degree bases.
    pub fn d_matrix(&self, p: usize) -> Matrix {
        let d = self.plane.dim();
        let (src, dst): (Vec<usize>, Vec<usize>) = match p {
            0 => ((0..d).collect(), (d..3 * d).collect()),
            1 => ((d..3 * d).collect(), (3 * d..4 * d).collect()),
            _ => ((3 * d..4 * d).collect(), Vec::new()),
        };
        let full = self.operator_matrix(|w| self.d(w));
        Matrix::from_fn(self.field(), dst.len(), src.len(), |i, j| full.get(dst[i], src[j]).clone())
    }

    /// `(h0, h1, h2)` with `h_p = dim ker d_p - rank d_(p-1)`.
    pub fn cohomology(&self) -> (usize, usize, usize) {
        let (n0, n1, n2) = self.dims();
        let r0 = self.d_matrix(0).rank();
        let r1 = self.d_matrix(1).rank();
        (n0 - r0, n1 - r1 - r0, n2 - r1)
    }

    /// `d^2 = 0` as a matrix on the whole complex.
    pub fn check_d_squared(&self) -> Result<()> {
        let m = self.operator_matrix(|w| self.d(w));
        if !m.mul(&m).is_zero() {
            return Err(Error::CheckFailed(String::from("d^2 != 0")));
        }
        Ok(())
    }

    /// `d(ab) = d(a) b + (-1)^p a d(b)` for `a` of degree `p`.
    pub fn leibniz_defect(&self, a: &WzForm, b: &WzForm) -> WzForm {
        let mut rhs = WzForm::zero(self.field());
        for p in 0..3 {
            let ap = a.grade(p);
            if ap.is_zero() {
                continue;
            }
            let sign = if p % 2 == 0 { CycScalar::one(self.field()) } else { -CycScalar::one(self.field()) };
            rhs = rhs.add(&self.mul(&self.d(&ap), b)).add(&self.mul(&ap, &self.d(b)).scale(&sign));
        }
        self.d(&self.mul(a, b)).sub(&rhs)
    }

    /// Leibniz on all pairs of basis forms (hence on all pairs by bilinearity).
    pub fn check_leibniz(&self) -> Result<()> {
        let basis = self.basis();
        for a in &basis {
            for b in &basis {
                if !self.leibniz_defect(a, b).is_zero() {
                    return Err(Error::CheckFailed(alloc::format!("Leibniz rule fails for ({a}, {b})")));
                }
            }
        }
        Ok(())
    }

    /// `(ab)c = a(bc)` for basis forms `a, c` and `b` among `x, y, dx, dy`.
    pub fn check_associativity(&self) -> Result<()> {
        let field = self.field();
        let basis = self.basis();
        let gens = [
            WzForm::function(&self.plane.x()),
            WzForm::function(&self.plane.y()),
            WzForm::dx(field),
            WzForm::dy(field),
        ];
        for a in &basis {
            for b in &gens {
                let ab = self.mul(a, b);
                for c in &basis {
                    if self.mul(&ab, c) != self.mul(a, &self.mul(b, c)) {
                        return Err(Error::CheckFailed(alloc::format!("({a})({b})({c}) is not associative")));
                    }
                }
            }
        }
        Ok(())
    }

    /// `dxi` commuted past `x^N` and `y^N` is unchanged, and `xy = q yx` is
    /// respected by the commutation rules.
    pub fn check_relations(&self) -> Result<()> {
        let field = self.field();
        let n = self.plane.n();
        let (x, y) = (self.plane.x(), self.plane.y());
        let tx = self.tau(&x);
        let ty = self.tau(&y);
        let mut px = tau_identity(field);
        let mut py = tau_identity(field);
        for _ in 0..n {
            px = tau_mul(&tx, &px);
            py = tau_mul(&ty, &py);
        }
        if px != tau_identity(field) || py != tau_identity(field) {
            return Err(Error::CheckFailed(String::from("commutation rules do not respect x^N = y^N = 1")));
        }
        let lhs = tau_mul(&tx, &ty);
        let rhs = tau_mul(&ty, &tx);
        let q = CycScalar::q(field);
        for i in 0..2 {
            for j in 0..2 {
                if lhs[i][j] != rhs[i][j].scale(&q) {
                    return Err(Error::CheckFailed(String::from("commutation rules do not respect xy = q yx")));
                }
            }
        }
        Ok(())
    }

    /// `d(w*) = (-1)^p (dw)*` on every basis form of degree `p`.
    pub fn check_d_star(&self) -> Result<()> {
        for b in self.basis() {
            let p = b.homogeneous_degree().unwrap_or(0);
            let rhs = self.star(&self.d(&b));
            let rhs = if p % 2 == 0 { rhs } else { rhs.neg() };
            if self.d(&self.star(&b)) != rhs {
                return Err(Error::CheckFailed(alloc::format!("d(w*) != (-1)^p (dw)* for w = {b}")));
            }
        }
        Ok(())
    }

    /// `w** = w` and `(ab)* = b* a*` on basis forms.
    pub fn check_star(&self) -> Result<()> {
        let basis = self.basis();
        for a in &basis {
            if self.star(&self.star(a)) != *a {
                return Err(Error::CheckFailed(alloc::format!("star is not involutive on {a}")));
            }
            if self.star(a).homogeneous_degree() != a.homogeneous_degree() {
                return Err(Error::CheckFailed(alloc::format!("star does not preserve the degree of {a}")));
            }
        }
        for a in &basis {
            for b in &basis {
                if self.star(&self.mul(a, b)) != self.mul(&self.star(b), &self.star(a)) {
                    return Err(Error::CheckFailed(alloc::format!("star is not antimultiplicative on ({a}, {b})")));
                }
            }
        }
        Ok(())
    }

    /// The left `H`-action: on functions as on the plane, on `dx, dy` as on
    /// `x, y`, extended through the coproduct.
    pub fn h_action(&self, action: &PlaneAction) -> Representation {
        let rep = action.representation();
        let field = self.field();
        let plane_ops = [rep.k().clone(), rep.k_inv(), rep.xp().clone(), rep.xm().clone()];
        let act_fn = |g: usize, f: &PlaneElement| self.plane.from_vector(&plane_ops[g].apply(&self.plane.to_vector(f)));
        // Coproducts of K, K^-1, Xp, Xm with 4 standing for the unit.
        const UNIT: usize = 4;
        let coproducts: [&[(usize, usize)]; 4] = [&[(0, 0)], &[(1, 1)], &[(2, UNIT), (0, 2)], &[(3, 1), (UNIT, 3)]];
        let act_word = |g: usize, w: Word| -> WzForm {
            let one = PlaneElement::one(field);
            match w {
                Word::One => {
                    if g < 2 {
                        WzForm::function(&one)
                    } else {
                        WzForm::zero(field)
                    }
                }
                Word::Dx | Word::Dy => {
                    let gen = if w == Word::Dx { self.plane.x() } else { self.plane.y() };
                    self.d(&WzForm::function(&act_fn(g, &gen)))
                }
                Word::DxDy => unreachable!("handled through the coproduct"),
            }
        };
        let act_any = |g: usize, w: Word| -> WzForm {
            if g == UNIT {
                return WzForm::with_part(w, &PlaneElement::one(field));
            }
            if w != Word::DxDy {
                return act_word(g, w);
            }
            let mut out = WzForm::zero(field);
            for &(g1, g2) in coproducts[g] {
                let a = if g1 == UNIT { WzForm::dx(field) } else { act_word(g1, Word::Dx) };
                let b = if g2 == UNIT { WzForm::dy(field) } else { act_word(g2, Word::Dy) };
                out = out.add(&self.mul(&a, &b));
            }
            out
        };
        let act = |g: usize, form: &WzForm| -> WzForm {
            let mut out = WzForm::zero(field);
            for w in Word::ALL {
                let f = form.part(w);
                if f.is_zero() {
                    continue;
                }
                for &(g1, g2) in coproducts[g] {
                    let hf = if g1 == UNIT { f.clone() } else { act_fn(g1, f) };
                    out = out.add(&self.mul(&WzForm::function(&hf), &act_any(g2, w)));
                }
            }
            out
        };
        let k = self.operator_matrix(|w| act(0, w));
        let xp = self.operator_matrix(|w| act(2, w));
        let xm = self.operator_matrix(|w| act(3, w));
        Representation::new(k, xp, xm).expect("square").with_label("Omega")
    }

    /// The action on `Omega^p` alone.
    pub fn h_action_on_degree(&self, action: &PlaneAction, p: usize) -> Result<Representation> {
        let full = self.h_action(action);
        let vecs: Vec<Vector> = self.basis_of_degree(p).iter().map(|b| self.to_vector(b)).collect();
        let sub = crate::linalg::Subspace::span(self.field(), 4 * self.plane.dim(), &vecs);
        Ok(full.restrict(&sub)?.with_label(&alloc::format!("Omega^{p}")))
    }

    /// The generators commute with `d`.
    pub fn check_action_commutes_with_d(&self, rep: &Representation) -> Result<()> {
        let dm = self.operator_matrix(|w| self.d(w));
        for (name, m) in [("K", rep.k()), ("Xp", rep.xp()), ("Xm", rep.xm())] {
            if m.mul(&dm) != dm.mul(m) {
                return Err(Error::CheckFailed(alloc::format!("{name} does not commute with d")));
            }
        }
        Ok(())
    }
}

fn tau_identity(field: &Arc<CycField>) -> Tau {
    let z = PlaneElement::zero(field);
    let o = PlaneElement::one(field);
    [[o.clone(), z.clone()], [z, o]]
}

fn tau_mul(a: &Tau, b: &Tau) -> Tau {
    core::array::from_fn(|i| core::array::from_fn(|j| a[i][0].mul(&b[0][j]).add(&a[i][1].mul(&b[1][j]))))
}

/// Element of `Omega (x) F` (right) or `F (x) Omega` (left), keyed by
/// `(form basis index, F index)`.
pub type FormCoaction = BTreeMap<(usize, usize), CycScalar>;

/// Coactions of `F` on the complex.
pub struct WzCoaction<'a> {
    complex: &'a WzComplex,
    pair: Arc<DualPair>,
    plane_coactions: Coactions,
}

/// Letters of the relations checked under coaction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    X,
    Y,
    Dx,
    Dy,
}

impl<'a> WzCoaction<'a> {
    pub fn new(complex: &'a WzComplex, pair: &Arc<DualPair>) -> WzCoaction<'a> {
        WzCoaction { complex, pair: pair.clone(), plane_coactions: Coactions::new(pair) }
    }

    fn index(&self, word: Word, plane_idx: usize) -> usize {
        word.slot() * self.complex.plane.dim() + plane_idx
    }

    fn basis_form(&self, idx: usize) -> WzForm {
        let d = self.complex.plane.dim();
        let n = self.complex.plane.n();
        let m = idx % d;
        WzForm::with_part(Word::ALL[idx / d], &PlaneElement::monomial(self.complex.field(), m / n, m % n))
    }

    /// Product in `Omega (x) F`; the `F` factor multiplies in the same order
    /// on either side.
    pub fn mul(&self, u: &FormCoaction, v: &FormCoaction) -> FormCoaction {
        let f = &self.pair.f;
        let mut out = FormCoaction::new();
        let mut cache: BTreeMap<(usize, usize), Vector> = BTreeMap::new();
        for (&(w1, p1), c1) in u {
            for (&(w2, p2), c2) in v {
                let prod = cache
                    .entry((w1, w2))
                    .or_insert_with(|| self.complex.to_vector(&self.complex.mul(&self.basis_form(w1), &self.basis_form(w2))));
                for (i, a) in prod.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (p, s) in f.product(p1, p2) {
                        let e = out.entry((i, *p)).or_insert_with(|| CycScalar::zero(f.field()));
                        *e += &(&(c1 * c2) * &(a * s));
                    }
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// `Delta_R dx = dx (x) a + dy (x) c`, `Delta_R dy = dx (x) b + dy (x) d`
    /// and the left versions `a (x) dx + b (x) dy`, `c (x) dx + d (x) dy`.
    pub fn coact_letter(&self, letter: Letter, right: bool) -> FormCoaction {
        let f = &self.pair.f;
        let plane = &self.complex.plane;
        let field = self.complex.field();
        match letter {
            Letter::X | Letter::Y => {
                let z = if letter == Letter::X { plane.x() } else { plane.y() };
                let t = if right { self.plane_coactions.coact_right(&z) } else { self.plane_coactions.coact_left(&z) };
                t.terms().iter().map(|(&(m, p), c)| ((self.index(Word::One, m), p), c.clone())).collect()
            }
            Letter::Dx | Letter::Dy => {
                let (e1, e2) = match (letter, right) {
                    (Letter::Dx, true) => (f.a(), f.c()),
                    (Letter::Dy, true) => (f.b(), f.d()),
                    (Letter::Dx, false) => (f.a(), f.b()),
                    _ => (f.c(), f.d()),
                };
                let mut out = FormCoaction::new();
                for (w, e) in [(Word::Dx, e1), (Word::Dy, e2)] {
                    for (&p, c) in e.terms() {
                        let k = (self.index(w, plane.index(0, 0)), p);
                        let entry = out.entry(k).or_insert_with(|| CycScalar::zero(field));
                        *entry += c;
                    }
                }
                out.retain(|_, c| !c.is_zero());
                out
            }
        }
    }

    /// Image of a word in the letters.
    pub fn coact_word(&self, word: &[Letter], right: bool) -> FormCoaction {
        let field = self.complex.field();
        let mut acc: FormCoaction = FormCoaction::new();
        acc.insert((self.index(Word::One, 0), self.pair.f.unit_index()), CycScalar::one(field));
        for &l in word {
            acc = self.mul(&acc, &self.coact_letter(l, right));
        }
        acc
    }

    /// The defining relations, as `(coefficient, word)` sums that vanish in the complex.
    pub fn relations(&self) -> Vec<(&'static str, Vec<(CycScalar, Vec<Letter>)>)> {
        use Letter::*;
        let f = self.complex.field();
        let q = |e: i64| CycScalar::qpow(f, e);
        let one = CycScalar::one(f);
        let m = |c: CycScalar| -c;
        vec![
            ("xy - q yx", vec![(one.clone(), vec![X, Y]), (m(q(1)), vec![Y, X])]),
            ("x dx - q^2 dx x", vec![(one.clone(), vec![X, Dx]), (m(q(2)), vec![Dx, X])]),
            ("x dy - q dy x - (q^2 - 1) dx y", vec![(one.clone(), vec![X, Dy]), (m(q(1)), vec![Dy, X]), (m(q(2) - one.clone()), vec![Dx, Y])]),
            ("y dx - q dx y", vec![(one.clone(), vec![Y, Dx]), (m(q(1)), vec![Dx, Y])]),
            ("y dy - q^2 dy y", vec![(one.clone(), vec![Y, Dy]), (m(q(2)), vec![Dy, Y])]),
            ("dx dx", vec![(one.clone(), vec![Dx, Dx])]),
            ("dy dy", vec![(one.clone(), vec![Dy, Dy])]),
            ("q dx dy + dy dx", vec![(q(1), vec![Dx, Dy]), (one, vec![Dy, Dx])]),
        ]
    }

    /// Every relation maps to zero under both coactions, and each relation
    /// already vanishes in the complex.
    pub fn check_relations_preserved(&self) -> Result<()> {
        let field = self.complex.field();
        for (name, terms) in self.relations() {
            let mut direct = WzForm::function(&PlaneElement::zero(field));
            for (c, word) in &terms {
                let mut acc = WzForm::function(&PlaneElement::one(field));
                for l in word {
                    let lf = match l {
                        Letter::X => WzForm::function(&self.complex.plane.x()),
                        Letter::Y => WzForm::function(&self.complex.plane.y()),
                        Letter::Dx => WzForm::dx(field),
                        Letter::Dy => WzForm::dy(field),
                    };
                    acc = self.complex.mul(&acc, &lf);
                }
                direct = direct.add(&acc.scale(c));
            }
            if !direct.is_zero() {
                return Err(Error::CheckFailed(alloc::format!("relation {name} does not hold in the complex: {direct}")));
            }
            for right in [true, false] {
                let mut total = FormCoaction::new();
                for (c, word) in &terms {
                    for (k, v) in self.coact_word(word, right) {
                        let e = total.entry(k).or_insert_with(|| CycScalar::zero(field));
                        *e += &(c * &v);
                    }
                }
                total.retain(|_, c| !c.is_zero());
                if !total.is_empty() {
                    let side = if right { "right" } else { "left" };
                    return Err(Error::CheckFailed(alloc::format!("relation {name} is not preserved by the {side} coaction")));
                }
            }
        }
        Ok(())
    }

    /// Coaction of a basis form `x^r y^s w`.
    fn coact_basis(&self, idx: usize, right: bool) -> FormCoaction {
        let d = self.complex.plane.dim();
        let n = self.complex.plane.n();
        let m = idx % d;
        let (r, s) = (m / n, m % n);
        let mut word = vec![Letter::X; r];
        word.extend(core::iter::repeat_n(Letter::Y, s));
        match Word::ALL[idx / d] {
            Word::One => {}
            Word::Dx => word.push(Letter::Dx),
            Word::Dy => word.push(Letter::Dy),
            Word::DxDy => word.extend([Letter::Dx, Letter::Dy]),
        }
        self.coact_word(&word, right)
    }

    /// `(Delta w)* = Delta(w*)` on every basis form, both sides.
    pub fn check_star_covariance(&self) -> Result<()> {
        let f = &self.pair.f;
        let field = self.complex.field();
        let star = |t: &FormCoaction| {
            let mut out = FormCoaction::new();
            for (&(w, p), c) in t {
                let ws = self.complex.to_vector(&self.complex.star(&self.basis_form(w)));
                let fs = f.star_basis(p);
                for (i, a) in ws.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (&p2, b) in fs.terms() {
                        let e = out.entry((i, p2)).or_insert_with(|| CycScalar::zero(field));
                        *e += &(&c.conj() * &(a * b));
                    }
                }
            }
            out.retain(|_, c| !c.is_zero());
            out
        };
        let dim = 4 * self.complex.plane.dim();
        for idx in 0..dim {
            let ws = self.complex.to_vector(&self.complex.star(&self.basis_form(idx)));
            for right in [true, false] {
                let mut rhs = FormCoaction::new();
                for (i, a) in ws.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (k, v) in self.coact_basis(i, right) {
                        let e = rhs.entry(k).or_insert_with(|| CycScalar::zero(field));
                        *e += &(a * &v);
                    }
                }
                rhs.retain(|_, c| !c.is_zero());
                if star(&self.coact_basis(idx, right)) != rhs {
                    return Err(Error::CheckFailed(alloc::format!("star covariance fails on {}", self.basis_form(idx))));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(n: u32) -> Arc<CycField> {
        CycField::new(n).unwrap()
    }

    #[test]
    fn products_n3() {
        let f = field(3);
        let wz = WzComplex::new(&f);
        let p = wz.plane().clone();
        let x = WzForm::function(&p.x());
        let y = WzForm::function(&p.y());
        let dx = WzForm::dx(&f);
        let dy = WzForm::dy(&f);
        // x dx is already normal; dx x = q^-2 x dx
        assert_eq!(wz.mul(&dx, &x), WzForm::one_form(&p.x().scale(&CycScalar::qpow(&f, -2)), &PlaneElement::zero(&f)));
        // q dy x + (q^2 - 1) dx y = x dy
        let rhs = wz.mul(&dy, &x).scale(&CycScalar::q(&f)).add(&wz.mul(&dx, &y).scale(&(CycScalar::qpow(&f, 2) - CycScalar::one(&f))));
        assert_eq!(rhs, wz.mul(&x, &dy));
        assert!(wz.mul(&dx, &dx).is_zero());
        assert_eq!(wz.mul(&dy, &dx), WzForm::two_form(&PlaneElement::one(&f)).scale(&-CycScalar::q(&f)));
        assert_eq!(format!("{}", wz.mul(&x, &dy)), "x*dy");
    }

    #[test]
    fn differential_n3() {
        let f = field(3);
        let wz = WzComplex::new(&f);
        let p = wz.plane().clone();
        assert!(wz.d(&WzForm::function(&PlaneElement::one(&f))).is_zero());
        // d(x^2) = (1 + q^2) dx x = -q dx x
        let x = WzForm::function(&p.x());
        let dx_x = wz.mul(&WzForm::dx(&f), &x);
        assert_eq!(wz.d(&WzForm::function(&p.x().pow(2))), dx_x.scale(&-CycScalar::q(&f)));
        assert!(wz.d(&WzForm::function(&p.x().pow(3))).is_zero());
        assert_eq!(wz.dims(), (9, 18, 9));
        wz.check_relations().unwrap();
        wz.check_d_squared().unwrap();
        wz.check_leibniz().unwrap();
        wz.check_associativity().unwrap();
        wz.check_star().unwrap();
        wz.check_d_star().unwrap();
        let (h0, h1, h2) = wz.cohomology();
        assert!(h0 >= 1);
        assert_ne!((h0, h1, h2), (1, 0, 0));
    }

    #[test]
    fn star_of_two_form() {
        let f = field(3);
        let wz = WzComplex::new(&f);
        let dxdy = WzForm::two_form(&PlaneElement::one(&f));
        assert_eq!(wz.star(&dxdy), dxdy.scale(&-CycScalar::q(&f)));
        assert_eq!(wz.star(&WzForm::dx(&f)), WzForm::dx(&f));
    }

    #[test]
    fn coaction_n3() {
        let f = field(3);
        let pair = Arc::new(DualPair::new(&f));
        let wz = WzComplex::new(&f);
        let co = WzCoaction::new(&wz, &pair);
        let r = co.coact_letter(Letter::Dx, true);
        assert_eq!(r.len(), 2);
        co.check_relations_preserved().unwrap();
        co.check_star_covariance().unwrap();
    }

    #[test]
    fn h_action_n3() {
        let f = field(3);
        let pair = Arc::new(DualPair::new(&f));
        let wz = WzComplex::new(&f);
        let act = PlaneAction::new(&pair);
        let rep = wz.h_action(&act);
        rep.check_relations().unwrap();
        wz.check_action_commutes_with_d(&rep).unwrap();
        assert_eq!(wz.h_action_on_degree(&act, 1).unwrap().dim(), 18);
    }

    #[test]
    fn n5_complex() {
        let f = field(5);
        let wz = WzComplex::new(&f);
        wz.check_relations().unwrap();
        wz.check_d_squared().unwrap();
        wz.check_leibniz().unwrap();
        wz.check_d_star().unwrap();
        let pair = Arc::new(DualPair::new(&f));
        WzCoaction::new(&wz, &pair).check_relations_preserved().unwrap();
        // The two-form relation dy dx = -q^-2 dx dy breaks Leibniz away from N = 3.
        let other = WzComplex::with_kappa(&f, -CycScalar::qpow(&f, -2));
        let p = other.plane().clone();
        let defect = other.leibniz_defect(&WzForm::dy(&f), &WzForm::function(&p.x()));
        assert!(!defect.is_zero());
    }
}
