//! The reduced quantum plane: `xy = q yx`, `x^N = y^N = 1`, isomorphic to
//! the full matrix algebra `M_N`.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::cyclo::{CycField, CycScalar};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};

/// Shared context for one `N`.
#[derive(Clone, Debug)]
pub struct Plane {
    field: Arc<CycField>,
}

/// `sum c_{rs} x^r y^s` with `0 <= r, s < N`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct PlaneElement {
    field: Arc<CycField>,
    terms: BTreeMap<(usize, usize), CycScalar>,
}

/// Letters of a word in the plane generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlaneLetter {
    X(i64),
    Y(i64),
}

impl Plane {
    pub fn new(field: &Arc<CycField>) -> Plane {
        Plane { field: field.clone() }
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.field.n() as usize
    }

    pub fn dim(&self) -> usize {
        self.n() * self.n()
    }

    /// Basis monomials `(r, s)` in index order.
    pub fn basis(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (0..n).flat_map(|r| (0..n).map(move |s| (r, s))).collect()
    }

    pub fn index(&self, r: usize, s: usize) -> usize {
        r * self.n() + s
    }

    pub fn x(&self) -> PlaneElement {
        PlaneElement::monomial(&self.field, 1, 0)
    }

    pub fn y(&self) -> PlaneElement {
        PlaneElement::monomial(&self.field, 0, 1)
    }

    /// Normal form of `c * w_1 w_2 ...`; negative exponents are inverses.
    pub fn normalize(&self, word: &[PlaneLetter], c: &CycScalar) -> PlaneElement {
        let mut acc = PlaneElement::scalar(&self.field, c.clone());
        for l in word {
            let m = match *l {
                PlaneLetter::X(k) => PlaneElement::monomial(&self.field, self.field.exp(k), 0),
                PlaneLetter::Y(k) => PlaneElement::monomial(&self.field, 0, self.field.exp(k)),
            };
            acc = acc.mul(&m);
        }
        acc
    }

    /// `x = diag(1, q^{-1}, ..., q^{-(N-1)})`.
    pub fn x_matrix(&self) -> Matrix {
        let n = self.n();
        Matrix::from_fn(&self.field, n, n, |i, j| {
            if i == j {
                CycScalar::qpow(&self.field, -(i as i64))
            } else {
                CycScalar::zero(&self.field)
            }
        })
    }

    /// Cyclic shift: ones on the superdiagonal and in the bottom-left corner.
    pub fn y_matrix(&self) -> Matrix {
        let n = self.n();
        Matrix::from_fn(&self.field, n, n, |i, j| {
            if j == (i + 1) % n {
                CycScalar::one(&self.field)
            } else {
                CycScalar::zero(&self.field)
            }
        })
    }

    /// Checks `xy = q yx` and `x^N = y^N = 1` for the generator matrices.
    pub fn check_generator_matrices(&self) -> Result<()> {
        let (x, y) = (self.x_matrix(), self.y_matrix());
        let q = CycScalar::q(&self.field);
        if x.mul(&y) != y.mul(&x).scale(&q) {
            return Err(Error::CheckFailed("matrix realization: xy != q yx".into()));
        }
        let n = self.n() as u32;
        if !x.pow(n).is_identity() || !y.pow(n).is_identity() {
            return Err(Error::CheckFailed("matrix realization: x^N or y^N is not 1".into()));
        }
        Ok(())
    }

    /// The star is involutive on monomials and antimultiplicative on monomial pairs.
    pub fn check_star(&self) -> Result<()> {
        let mons: Vec<PlaneElement> = self.basis().into_iter().map(|(r, s)| PlaneElement::monomial(&self.field, r, s)).collect();
        for a in &mons {
            if a.star().star() != *a {
                return Err(Error::CheckFailed(alloc::format!("star is not involutive on {a}")));
            }
            for b in &mons {
                if a.mul(b).star() != b.star().mul(&a.star()) {
                    return Err(Error::CheckFailed(alloc::format!("(ab)* != b* a* for a = {a}, b = {b}")));
                }
            }
        }
        Ok(())
    }

    /// Inverse of `to_matrix` via the discrete Fourier transform along diagonals.
    pub fn from_matrix(&self, m: &Matrix) -> Result<PlaneElement> {
        let n = self.n();
        if m.rows() != n || m.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: m.rows() });
        }
        let inv_n = CycScalar::from_int(&self.field, n as i64).inv()?;
        let mut out = PlaneElement::zero(&self.field);
        for r in 0..n {
            for s in 0..n {
                let mut c = CycScalar::zero(&self.field);
                for i in 0..n {
                    let e = m.get(i, (i + s) % n);
                    if !e.is_zero() {
                        c += &e.mul_qpow((r * i) as i64);
                    }
                }
                out.add_term(r, s, &(&c * &inv_n));
            }
        }
        Ok(out)
    }

    /// Coordinates in the monomial basis.
    pub fn to_vector(&self, z: &PlaneElement) -> Vector {
        let mut v = crate::linalg::zero_vector(&self.field, self.dim());
        for (&(r, s), c) in &z.terms {
            v[self.index(r, s)] = c.clone();
        }
        v
    }

    pub fn from_vector(&self, v: &[CycScalar]) -> PlaneElement {
        let mut z = PlaneElement::zero(&self.field);
        for (r, s) in self.basis() {
            z.add_term(r, s, &v[self.index(r, s)]);
        }
        z
    }

    /// Matrix of left multiplication by `z` on the monomial basis.
    pub fn left_mul_matrix(&self, z: &PlaneElement) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(&self.field, d, d);
        for (j, (r, s)) in self.basis().into_iter().enumerate() {
            let img = z.mul(&PlaneElement::monomial(&self.field, r, s));
            for (&(a, b), c) in img.terms() {
                m.set(self.index(a, b), j, c.clone());
            }
        }
        m
    }
}

impl PlaneElement {
    pub fn zero(field: &Arc<CycField>) -> PlaneElement {
        PlaneElement { field: field.clone(), terms: BTreeMap::new() }
    }

    pub fn one(field: &Arc<CycField>) -> PlaneElement {
        PlaneElement::monomial(field, 0, 0)
    }

    pub fn scalar(field: &Arc<CycField>, c: CycScalar) -> PlaneElement {
        let mut z = PlaneElement::zero(field);
        z.add_term(0, 0, &c);
        z
    }

    /// `x^r y^s`; exponents are taken modulo `N`.
    pub fn monomial(field: &Arc<CycField>, r: usize, s: usize) -> PlaneElement {
        let n = field.n() as usize;
        let mut terms = BTreeMap::new();
        terms.insert((r % n, s % n), CycScalar::one(field));
        PlaneElement { field: field.clone(), terms }
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn terms(&self) -> &BTreeMap<(usize, usize), CycScalar> {
        &self.terms
    }

    pub fn coeff(&self, r: usize, s: usize) -> CycScalar {
        self.terms.get(&(r, s)).cloned().unwrap_or_else(|| CycScalar::zero(&self.field))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, r: usize, s: usize, c: &CycScalar) {
        if c.is_zero() {
            return;
        }
        let n = self.field.n() as usize;
        let key = (r % n, s % n);
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

    pub fn add(&self, other: &PlaneElement) -> PlaneElement {
        let mut out = self.clone();
        for (&(r, s), c) in &other.terms {
            out.add_term(r, s, c);
        }
        out
    }

    pub fn sub(&self, other: &PlaneElement) -> PlaneElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PlaneElement {
        self.scale(&CycScalar::from_int(&self.field, -1))
    }

    pub fn scale(&self, c: &CycScalar) -> PlaneElement {
        let mut out = PlaneElement::zero(&self.field);
        for (&(r, s), v) in &self.terms {
            out.add_term(r, s, &(c * v));
        }
        out
    }

    /// Product; fails if the operands live over different `N`.
    pub fn try_mul(&self, other: &PlaneElement) -> Result<PlaneElement> {
        if self.field.n() != other.field.n() {
            return Err(Error::FieldMismatch { left: self.field.n(), right: other.field.n() });
        }
        Ok(self.mul(other))
    }

    /// `(x^r y^s)(x^r' y^s') = q^{-s r'} x^{r+r'} y^{s+s'}`.
    pub fn mul(&self, other: &PlaneElement) -> PlaneElement {
        assert_eq!(self.field.n(), other.field.n(), "plane elements over different N");
        let mut out = PlaneElement::zero(&self.field);
        for (&(r, s), a) in &self.terms {
            for (&(r2, s2), b) in &other.terms {
                let c = (a * b).mul_qpow(-((s * r2) as i64));
                out.add_term(r + r2, s + s2, &c);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> PlaneElement {
        let mut acc = PlaneElement::one(&self.field);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Antilinear antimultiplicative involution with `x* = x`, `y* = y`:
    /// `(x^r y^s)* = y^s x^r = q^{-rs} x^r y^s`.
    pub fn star(&self) -> PlaneElement {
        let mut out = PlaneElement::zero(&self.field);
        for (&(r, s), c) in &self.terms {
            out.add_term(r, s, &c.conj().mul_qpow(-((r * s) as i64)));
        }
        out
    }

    pub fn to_matrix(&self) -> Matrix {
        let plane = Plane::new(&self.field);
        let n = plane.n();
        let mut m = Matrix::zeros(&self.field, n, n);
        // (x^r y^s)_{i, i+s} = q^{-r i}
        for (&(r, s), c) in &self.terms {
            for i in 0..n {
                m.add_at(i, (i + s) % n, &c.mul_qpow(-((r * i) as i64)));
            }
        }
        m
    }
}

fn fmt_coeff_monomial(f: &mut fmt::Formatter<'_>, c: &CycScalar, mono: &str, first: bool) -> fmt::Result {
    let text = alloc::format!("{c}");
    let single = !text[1..].contains(" + ") && !text[1..].contains(" - ");
    let (neg, body) = if single && text.starts_with('-') { (true, &text[1..]) } else { (false, text.as_str()) };
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else if neg {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    if mono.is_empty() {
        return write!(f, "{body}");
    }
    if single {
        if body == "1" {
            write!(f, "{mono}")
        } else {
            write!(f, "{body}*{mono}")
        }
    } else {
        write!(f, "({body})*{mono}")
    }
}

/// Writes `sum c * monomial` in the shared textual grammar.
pub fn fmt_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (alloc::string::String, &'a CycScalar)>,
{
    let mut first = true;
    for (mono, c) in terms {
        fmt_coeff_monomial(f, c, &mono, first)?;
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

pub(crate) fn power(name: &str, e: usize) -> Option<alloc::string::String> {
    match e {
        0 => None,
        1 => Some(name.into()),
        _ => Some(alloc::format!("{name}^{e}")),
    }
}

pub(crate) fn join_factors(parts: &[Option<alloc::string::String>]) -> alloc::string::String {
    let v: Vec<&str> = parts.iter().flatten().map(|s| s.as_str()).collect();
    v.join("*")
}

impl fmt::Display for PlaneElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.terms.iter().map(|(&(r, s), c)| (join_factors(&[power("x", r), power("y", s)]), c)))
    }
}

impl fmt::Debug for PlaneElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plane(n: u32) -> Plane {
        Plane::new(&CycField::new(n).unwrap())
    }

    #[test]
    fn normal_ordering() {
        let p = plane(3);
        let f = p.field().clone();
        let yx = p.normalize(&[PlaneLetter::Y(1), PlaneLetter::X(1)], &CycScalar::one(&f));
        assert_eq!(yx, PlaneElement::monomial(&f, 1, 1).scale(&CycScalar::qpow(&f, 2)));
        assert_eq!(p.normalize(&[PlaneLetter::X(3)], &CycScalar::one(&f)), PlaneElement::one(&f));
        assert_eq!(p.normalize(&[PlaneLetter::X(-1)], &CycScalar::one(&f)), PlaneElement::monomial(&f, 2, 0));
        let xy = PlaneElement::monomial(&f, 1, 1);
        assert_eq!(xy.mul(&xy), PlaneElement::monomial(&f, 2, 2).scale(&CycScalar::qpow(&f, 2)));
        let x2 = PlaneElement::monomial(&f, 2, 0);
        assert_eq!(x2.mul(&x2), p.x());
    }

    #[test]
    fn matrices() {
        for n in [3, 5, 7] {
            let p = plane(n);
            p.check_generator_matrices().unwrap();
            let id = Matrix::identity(p.field(), n as usize);
            assert_eq!(p.from_matrix(&id).unwrap(), PlaneElement::one(p.field()));
        }
        let p = plane(3);
        let f = p.field();
        let xm = p.x().to_matrix();
        assert_eq!(xm.get(1, 1), &CycScalar::qpow(f, 2));
        assert_eq!(xm.get(2, 2), &CycScalar::q(f));
        assert_eq!(p.x().to_matrix(), p.x_matrix());
        assert_eq!(p.y().to_matrix(), p.y_matrix());
    }

    #[test]
    fn star_examples() {
        let p = plane(3);
        let f = p.field().clone();
        assert_eq!(p.x().star(), p.x());
        let xy = PlaneElement::monomial(&f, 1, 1);
        assert_eq!(xy.star(), xy.scale(&CycScalar::qpow(&f, 2)));
        let lam = CycScalar::from_ints(&f, &[1, 1]);
        assert_eq!(PlaneElement::scalar(&f, lam.clone()).star(), PlaneElement::scalar(&f, lam.conj()));
        let herm = p.from_matrix(&p.x().to_matrix().conj_transpose()).unwrap();
        assert_ne!(p.x().star(), herm);
    }

    #[test]
    fn display() {
        let p = plane(3);
        let f = p.field().clone();
        let z = p.x().add(&PlaneElement::monomial(&f, 1, 2).scale(&CycScalar::from_ints(&f, &[1, 2])));
        assert_eq!(alloc::format!("{z}"), "x + (1 + 2*q)*x*y^2");
        assert_eq!(alloc::format!("{}", p.y().neg()), "-y");
    }
}
