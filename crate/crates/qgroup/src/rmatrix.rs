//! The universal R-matrix of `H`.

use alloc::string::String;
use alloc::sync::Arc;

use crate::cyclo::{CycField, CycScalar};
use crate::error::{Error, Result};
use crate::hopf::{HAlgebra, HTensor};
use crate::linalg::Matrix;
use crate::repcat::Representation;
use crate::tensor::{BasisAlgebra, BasisHopf, Element, Tensor};

pub type HTensor3 = Tensor<HAlgebra, 3>;

/// `R = R_K R_X` together with its inverse `R_X^-1 R_K^-1`.
#[derive(Clone, Debug)]
pub struct UniversalR {
    pub r_k: HTensor,
    pub r_x: HTensor,
    pub value: HTensor,
    pub inverse: HTensor,
}

/// `(1/N) sum_{m,n} q^{c mn} K^m (x) K^n`.
fn k_part(h: &HAlgebra, c: i64) -> HTensor {
    let f = h.field();
    let n = h.n();
    let inv_n = CycScalar::from_int(f, n as i64).inv().expect("N != 0");
    let mut t = Tensor::zero(f);
    for m in 0..n {
        for l in 0..n {
            t.add_term([h.index(0, m, 0), h.index(0, l, 0)], &inv_n.mul_qpow(c * (m * l) as i64));
        }
    }
    t
}

impl UniversalR {
    /// `R_K = (1/N) sum q^{-2mn} K^m (x) K^n`, which acts on `K`-weights
    /// `(q^a, q^b)` as `q^{ab/2}`; at `N = 3` the exponent `-2mn` equals `mn`.
    pub fn new(h: &HAlgebra) -> Result<UniversalR> {
        UniversalR::with_k_exponent(h, -2)
    }

    /// The same expression with `q^{mn}` in the Cartan part for every `N`.
    pub fn with_unit_k_exponent(h: &HAlgebra) -> Result<UniversalR> {
        UniversalR::with_k_exponent(h, 1)
    }

    fn with_k_exponent(h: &HAlgebra, c: i64) -> Result<UniversalR> {
        let f = h.field();
        let n = h.n();
        let r_k = k_part(h, c);
        let mut r_x = Tensor::zero(f);
        let base = CycScalar::one(f) - CycScalar::qpow(f, -2);
        let mut pow = CycScalar::one(f);
        for k in 0..n {
            // (1/[k]!) (1 - q^-2)^k q^{k(k+1)/2}
            let c = pow.div(&CycScalar::qfactorial(f, k as u32))?.mul_qpow((k * (k + 1) / 2) as i64);
            r_x.add_term([h.index(k, 0, 0), h.index(0, 0, k)], &c);
            pow = &pow * &base;
        }
        let value = h.tensor_mul(&r_k, &r_x);
        // R_X = 1 + T with T nilpotent: R_X^-1 = sum_j (-T)^j.
        let one = Tensor::basis(f, [h.unit_index(), h.unit_index()]);
        let t = r_x.sub(&one).scale(&-CycScalar::one(f));
        let mut r_x_inv = one.clone();
        let mut term = one.clone();
        for _ in 1..n {
            term = h.tensor_mul(&term, &t);
            r_x_inv = r_x_inv.add(&term);
        }
        let r_k_inv = k_part(h, -c);
        let inverse = h.tensor_mul(&r_x_inv, &r_k_inv);
        let r = UniversalR { r_k, r_x, value, inverse };
        r.check_inverse(h)?;
        Ok(r)
    }

    /// `R R^-1 = R^-1 R = 1 (x) 1`.
    pub fn check_inverse(&self, h: &HAlgebra) -> Result<()> {
        let one = Tensor::basis(h.field(), [h.unit_index(), h.unit_index()]);
        if h.tensor_mul(&self.value, &self.inverse) != one || h.tensor_mul(&self.inverse, &self.value) != one {
            return Err(Error::CheckFailed(String::from("R R^-1 != 1 (x) 1")));
        }
        Ok(())
    }

    /// Coefficient of `K^m (x) K^n` in `R_K`.
    pub fn k_coefficient(&self, h: &HAlgebra, m: usize, n: usize) -> CycScalar {
        self.r_k.coeff([h.index(0, m, 0), h.index(0, n, 0)])
    }

    /// Coefficient of `Xm^k (x) Xp^k` in `R_X`.
    pub fn x_coefficient(&self, h: &HAlgebra, k: usize) -> CycScalar {
        self.r_x.coeff([h.index(k, 0, 0), h.index(0, 0, k)])
    }

    /// `(eps (x) id) R` and `(id (x) eps) R`, as elements of `H`.
    pub fn counit_contractions(&self, h: &HAlgebra) -> (Element<HAlgebra>, Element<HAlgebra>) {
        let f = h.field();
        let mut left = Element::zero(f);
        let mut right = Element::zero(f);
        for (k, c) in self.value.terms() {
            left.add_term(k[1], &(c * &h.counit_basis(k[0])));
            right.add_term(k[0], &(c * &h.counit_basis(k[1])));
        }
        (left, right)
    }

    fn embed(&self, h: &HAlgebra, slots: [usize; 2]) -> HTensor3 {
        let mut out = Tensor::zero(h.field());
        for (k, c) in self.value.terms() {
            let mut key = [h.unit_index(); 3];
            key[slots[0]] = k[0];
            key[slots[1]] = k[1];
            out.add_term(key, c);
        }
        out
    }

    pub fn r12(&self, h: &HAlgebra) -> HTensor3 {
        self.embed(h, [0, 1])
    }

    pub fn r13(&self, h: &HAlgebra) -> HTensor3 {
        self.embed(h, [0, 2])
    }

    pub fn r23(&self, h: &HAlgebra) -> HTensor3 {
        self.embed(h, [1, 2])
    }

    /// `Delta^op(g) = R Delta(g) R^-1` for the generators (both sides are algebra maps).
    pub fn check_almost_cocommutative(&self, h: &HAlgebra) -> Result<()> {
        for g in h.generators() {
            let d = h.coproduct_basis(g);
            let conj = h.tensor_mul(&h.tensor_mul(&self.value, d), &self.inverse);
            if conj != d.flip() {
                return Err(Error::CheckFailed(alloc::format!("Delta^op({}) != R Delta R^-1; difference {}", h_name(h, g), conj.sub(&d.flip()))));
            }
        }
        Ok(())
    }

    /// `(Delta (x) id) R = R13 R23` and `(id (x) Delta) R = R13 R12`.
    pub fn check_coproduct_identities(&self, h: &HAlgebra) -> Result<()> {
        let f = h.field();
        let mut dl: HTensor3 = Tensor::zero(f);
        let mut dr: HTensor3 = Tensor::zero(f);
        for (k, c) in self.value.terms() {
            for (d, s) in h.coproduct_basis(k[0]).terms() {
                dl.add_term([d[0], d[1], k[1]], &(c * s));
            }
            for (d, s) in h.coproduct_basis(k[1]).terms() {
                dr.add_term([k[0], d[0], d[1]], &(c * s));
            }
        }
        let (r12, r13, r23) = (self.r12(h), self.r13(h), self.r23(h));
        let want_l = h.tensor_mul(&r13, &r23);
        if dl != want_l {
            return Err(Error::CheckFailed(alloc::format!("(Delta (x) id) R != R13 R23; difference {}", dl.sub(&want_l))));
        }
        let want_r = h.tensor_mul(&r13, &r12);
        if dr != want_r {
            return Err(Error::CheckFailed(alloc::format!("(id (x) Delta) R != R13 R12; difference {}", dr.sub(&want_r))));
        }
        Ok(())
    }

    pub fn check_quasitriangular(&self, h: &HAlgebra) -> Result<()> {
        self.check_inverse(h)?;
        self.check_almost_cocommutative(h)?;
        self.check_coproduct_identities(h)
    }

    /// `R12 R13 R23 = R23 R13 R12`.
    pub fn check_ybe(&self, h: &HAlgebra) -> Result<()> {
        let (r12, r13, r23) = (self.r12(h), self.r13(h), self.r23(h));
        let lhs = h.tensor_mul(&h.tensor_mul(&r12, &r13), &r23);
        let rhs = h.tensor_mul(&h.tensor_mul(&r23, &r13), &r12);
        if lhs != rhs {
            return Err(Error::CheckFailed(String::from("R12 R13 R23 != R23 R13 R12")));
        }
        Ok(())
    }

    /// A basis key where `R21` and `R^-1` differ, with both coefficients.
    /// `R21` has `Xp (x) Xm` terms while `R^-1` has none.
    pub fn triangularity_witness(&self, h: &HAlgebra) -> Option<([usize; 2], CycScalar, CycScalar)> {
        let r21 = self.value.flip();
        r21.terms()
            .iter()
            .map(|(k, c)| (*k, c.clone(), self.inverse.coeff(*k)))
            .chain(self.inverse.terms().iter().map(|(k, c)| (*k, r21.coeff(*k), c.clone())))
            .filter(|(k, a, b)| a != b && h.exponents(k[0]).2 > 0)
            .min_by_key(|(k, _, _)| *k)
    }

    /// `(rho_A (x) rho_B)(R)`.
    pub fn in_representation(&self, h: &HAlgebra, a: &Representation, b: &Representation) -> Matrix {
        let f = h.field();
        let mut out = Matrix::zeros(f, a.dim() * b.dim(), a.dim() * b.dim());
        for (k, c) in self.value.terms() {
            let ma = a.rho(h, &Element::basis(f, k[0]));
            let mb = b.rho(h, &Element::basis(f, k[1]));
            out = out.add(&ma.kron(&mb).scale(c));
        }
        out
    }

    /// `R12 R13 R23 = R23 R13 R12` as matrices on `V (x) V (x) V`.
    pub fn check_ybe_in(&self, h: &HAlgebra, v: &Representation) -> Result<()> {
        let f = h.field();
        let id = Matrix::identity(f, v.dim());
        let mut r12 = Matrix::zeros(f, v.dim().pow(3), v.dim().pow(3));
        let mut r13 = r12.clone();
        let mut r23 = r12.clone();
        for (k, c) in self.value.terms() {
            let ma = v.rho(h, &Element::basis(f, k[0]));
            let mb = v.rho(h, &Element::basis(f, k[1]));
            r12 = r12.add(&ma.kron(&mb).kron(&id).scale(c));
            r13 = r13.add(&ma.kron(&id).kron(&mb).scale(c));
            r23 = r23.add(&id.kron(&ma).kron(&mb).scale(c));
        }
        if r12.mul(&r13).mul(&r23) != r23.mul(&r13).mul(&r12) {
            return Err(Error::CheckFailed(alloc::format!("matrix Yang-Baxter equation fails in dimension {}", v.dim())));
        }
        Ok(())
    }
}

fn h_name(h: &HAlgebra, idx: usize) -> String {
    alloc::format!("{}", Element::<HAlgebra>::basis(h.field(), idx))
}

/// The `N = 3` element written out explicitly:
/// `R_K = (1/3)[1(x)1 + 1(x)K + K(x)1 + 1(x)K^2 + K^2(x)1 + q^2 (K(x)K^2 + K^2(x)K) + q K(x)K + q K^2(x)K^2]`,
/// `R_X = 1(x)1 + (q - q^-1) Xm(x)Xp + 3q Xm^2(x)Xp^2`.
pub fn explicit_n3(field: &Arc<CycField>, h: &HAlgebra) -> Result<(HTensor, HTensor)> {
    if field.n() != 3 {
        return Err(Error::Unsupported(String::from("the explicit form is for N = 3")));
    }
    let third = CycScalar::from_int(field, 3).inv()?;
    let kk = |m: usize, n: usize| [h.index(0, m, 0), h.index(0, n, 0)];
    let mut r_k = Tensor::zero(field);
    for (m, n, e) in [(0, 0, 0), (0, 1, 0), (1, 0, 0), (0, 2, 0), (2, 0, 0), (1, 2, 2), (2, 1, 2), (1, 1, 1), (2, 2, 1)] {
        r_k.add_term(kk(m, n), &third.mul_qpow(e));
    }
    let mut r_x = Tensor::zero(field);
    r_x.add_term([h.unit_index(), h.unit_index()], &CycScalar::one(field));
    r_x.add_term([h.index(1, 0, 0), h.index(0, 0, 1)], &(CycScalar::q(field) - CycScalar::qpow(field, -1)));
    r_x.add_term([h.index(2, 0, 0), h.index(0, 0, 2)], &CycScalar::from_int(field, 3).mul_qpow(1));
    Ok((r_k, r_x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n3_matches_explicit_form() {
        let f = CycField::new(3).unwrap();
        let h = HAlgebra::new(&f);
        let r = UniversalR::new(&h).unwrap();
        assert_eq!(UniversalR::with_unit_k_exponent(&h).unwrap().value, r.value);
        let (rk, rx) = explicit_n3(&f, &h).unwrap();
        assert_eq!(r.r_k, rk);
        assert_eq!(r.r_x, rx);
        let third = CycScalar::from_int(&f, 3).inv().unwrap();
        assert_eq!(r.k_coefficient(&h, 1, 1), third.mul_qpow(1));
        assert_eq!(r.k_coefficient(&h, 1, 2), third.mul_qpow(2));
        assert_eq!(r.k_coefficient(&h, 0, 1), third);
        let (l, rr) = r.counit_contractions(&h);
        assert_eq!(l, h.one());
        assert_eq!(rr, h.one());
        r.check_quasitriangular(&h).unwrap();
        r.check_ybe(&h).unwrap();
        let (k, a, b) = r.triangularity_witness(&h).unwrap();
        assert!(b.is_zero() && !a.is_zero());
        assert!(h.exponents(k[0]).2 > 0 && h.exponents(k[1]).0 > 0);
        let two = Representation::simple(&f, 2);
        r.check_ybe_in(&h, &two).unwrap();
        assert!(r.in_representation(&h, &Representation::trivial(&f), &two).is_identity());
    }

    #[test]
    fn n5_quasitriangular() {
        let f = CycField::new(5).unwrap();
        let h = HAlgebra::new(&f);
        let r = UniversalR::new(&h).unwrap();
        r.check_quasitriangular(&h).unwrap();
        assert!(r.triangularity_witness(&h).is_some());
        let (l, rr) = r.counit_contractions(&h);
        assert_eq!(l, h.one());
        assert_eq!(rr, h.one());
        let unit = UniversalR::with_unit_k_exponent(&h).unwrap();
        assert!(unit.check_almost_cocommutative(&h).is_err());
        r.check_ybe(&h).unwrap();
    }
}
