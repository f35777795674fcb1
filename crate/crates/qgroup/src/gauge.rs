//! Connections on the plane taken as a free module over itself.
//!
//! A connection is a one-form `phi` with `nabla(1) = phi`, so
//! `nabla(psi) = phi psi + d psi` and the curvature is `d phi + phi^2`.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::action::PlaneAction;
use crate::cyclo::{CycField, CycScalar};
use crate::error::{Error, Result};
use crate::hopf::DualPair;
use crate::linalg::{Matrix, Subspace, Vector};
use crate::repcat::{decompose, Catalog, DecompositionReport, Representation};
use crate::wz::{WzComplex, WzForm};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connection {
    phi: WzForm,
}

impl Connection {
    pub fn new(phi: WzForm) -> Result<Connection> {
        if !phi.grade(0).is_zero() || !phi.grade(2).is_zero() {
            return Err(Error::InvalidInput(format!("a connection must be a one-form, got {phi}")));
        }
        Ok(Connection { phi })
    }

    pub fn zero(field: &Arc<CycField>) -> Connection {
        Connection { phi: WzForm::zero(field) }
    }

    pub fn phi(&self) -> &WzForm {
        &self.phi
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curvature {
    rho: WzForm,
}

impl Curvature {
    pub fn rho(&self) -> &WzForm {
        &self.rho
    }

    pub fn is_zero(&self) -> bool {
        self.rho.is_zero()
    }
}

/// `d phi + phi^2`.
pub fn curvature(wz: &WzComplex, conn: &Connection) -> Result<Curvature> {
    let rho = wz.d(conn.phi()).add(&wz.mul(conn.phi(), conn.phi()));
    if !rho.grade(0).is_zero() || !rho.grade(1).is_zero() {
        return Err(Error::CheckFailed(format!("curvature {rho} is not a two-form")));
    }
    Ok(Curvature { rho })
}

/// `nabla(psi) = phi psi + d psi`.
pub fn covariant(wz: &WzComplex, conn: &Connection, psi: &WzForm) -> WzForm {
    wz.mul(conn.phi(), psi).add(&wz.d(psi))
}

/// `nabla^2 psi = rho psi` on every basis form.
pub fn check_curvature_is_multiplication(wz: &WzComplex, conn: &Connection) -> Result<()> {
    let rho = curvature(wz, conn)?;
    for b in wz.basis() {
        let twice = covariant(wz, conn, &covariant(wz, conn, &b));
        if twice != wz.mul(rho.rho(), &b) {
            return Err(Error::CheckFailed(format!("nabla^2 ({b}) != rho ({b})")));
        }
    }
    Ok(())
}

/// `nabla^2 (f g) = (nabla^2 f) g` on the given pairs.
pub fn check_curvature_linearity(wz: &WzComplex, conn: &Connection, pairs: &[(WzForm, WzForm)]) -> Result<()> {
    let nn = |w: &WzForm| covariant(wz, conn, &covariant(wz, conn, w));
    for (f, g) in pairs {
        if nn(&wz.mul(f, g)) != wz.mul(&nn(f), g) {
            return Err(Error::CheckFailed(format!("curvature is not right-linear on ({f}, {g})")));
        }
    }
    Ok(())
}

/// `nabla(psi lambda) = nabla(psi) lambda + (-1)^s psi d lambda` on the given
/// pairs, `psi` split into homogeneous parts.
pub fn check_module_leibniz(wz: &WzComplex, conn: &Connection, pairs: &[(WzForm, WzForm)]) -> Result<()> {
    let field = wz.field();
    for (psi, lambda) in pairs {
        let mut rhs = WzForm::zero(field);
        for s in 0..3 {
            let part = psi.grade(s);
            if part.is_zero() {
                continue;
            }
            let t = wz.mul(&part, &wz.d(lambda));
            let t = if s % 2 == 0 { t } else { t.neg() };
            rhs = rhs.add(&wz.mul(&covariant(wz, conn, &part), lambda)).add(&t);
        }
        if covariant(wz, conn, &wz.mul(psi, lambda)) != rhs {
            return Err(Error::CheckFailed(format!("nabla fails the Leibniz rule on ({psi}, {lambda})")));
        }
    }
    Ok(())
}

/// `rho(phi + df) - rho(phi) = phi df + df phi + df df`.
pub fn check_shift(wz: &WzComplex, conn: &Connection, f: &WzForm) -> Result<()> {
    let df = wz.d(f);
    let shifted = Connection::new(conn.phi().add(&df))?;
    let diff = curvature(wz, &shifted)?.rho.sub(curvature(wz, conn)?.rho());
    let cross = wz.mul(conn.phi(), &df).add(&wz.mul(&df, conn.phi())).add(&wz.mul(&df, &df));
    if diff != cross {
        return Err(Error::CheckFailed(format!("curvature shift by d({f}) is not phi df + df phi + df df")));
    }
    Ok(())
}

/// The condition `phi* = phi` on `phi = sum c_k e_k` over the basis `e_k` of
/// one-forms, written `c = A conj(c)`.
pub struct HermitianConstraints {
    pub star_matrix: Matrix,
    /// Real dimension of the solution set.
    pub real_dimension: usize,
}

impl HermitianConstraints {
    /// Coordinates `c` in the one-form basis.
    pub fn satisfied_by(&self, c: &[CycScalar]) -> bool {
        let conj: Vector = c.iter().map(CycScalar::conj).collect();
        self.star_matrix.apply(&conj) == c
    }

    /// `(j, [(k, A_jk)])`: `c_j = sum_k A_jk conj(c_k)`.
    pub fn equations(&self) -> Vec<(usize, Vec<(usize, CycScalar)>)> {
        (0..self.star_matrix.rows())
            .map(|j| {
                let row = self.star_matrix.row(j);
                (j, row.into_iter().enumerate().filter(|(_, a)| !a.is_zero()).collect())
            })
            .collect()
    }
}

pub fn hermitian_constraints(wz: &WzComplex) -> HermitianConstraints {
    let field = wz.field();
    let basis = wz.basis_of_degree(1);
    let d = wz.plane().dim();
    let coords = |w: &WzForm| -> Vector { wz.to_vector(w)[d..3 * d].to_vec() };
    let cols: Vec<Vector> = basis.iter().map(|b| coords(&wz.star(b))).collect();
    let star_matrix = Matrix::from_columns(field, 2 * d, &cols);
    // Fixed points of an antilinear involution form a real structure, so
    // real independence among them equals complex independence.
    let q = CycScalar::q(field);
    let mut fixed: Vec<Vector> = Vec::new();
    for b in &basis {
        for t in [CycScalar::one(field), q.clone()] {
            let w = b.scale(&t);
            fixed.push(coords(&w.add(&wz.star(&w))));
        }
    }
    let real_dimension = Subspace::span(field, 2 * d, &fixed).dim();
    HermitianConstraints { star_matrix, real_dimension }
}

/// `Omega^1` as a module over `H`, split against the catalog and the
/// reducible summands of the plane.
pub fn decompose_connection_space(wz: &WzComplex, pair: &Arc<DualPair>) -> Result<(Representation, DecompositionReport)> {
    let action = PlaneAction::new(pair);
    let rep = wz.h_action_on_degree(&action, 1)?;
    let mut known = Catalog::new(&pair.h).modules();
    for s in action.decompose()? {
        if !s.irreducible {
            known.push(s.module.with_label(&s.label));
        }
    }
    let report = decompose(&rep, &known)?;
    report.verify(&rep)?;
    Ok((rep, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qplane::PlaneElement;

    #[test]
    fn examples_n3() {
        let f = CycField::new(3).unwrap();
        let wz = WzComplex::new(&f);
        let p = wz.plane().clone();
        let one = PlaneElement::one(&f);
        let zero = PlaneElement::zero(&f);
        let c1 = Connection::new(WzForm::one_form(&p.x(), &zero)).unwrap();
        assert!(curvature(&wz, &c1).unwrap().is_zero());
        let c2 = Connection::new(WzForm::one_form(&p.y(), &zero)).unwrap();
        assert_eq!(curvature(&wz, &c2).unwrap().rho(), &WzForm::two_form(&one).scale(&-CycScalar::q(&f)));
        assert!(curvature(&wz, &Connection::zero(&f)).unwrap().is_zero());
        assert!(Connection::new(WzForm::function(&one)).is_err());
        for c in [&c1, &c2] {
            check_curvature_is_multiplication(&wz, c).unwrap();
            check_shift(&wz, c, &WzForm::function(&p.x().mul(&p.y()))).unwrap();
        }
        let pairs: Vec<_> = wz.basis().into_iter().step_by(5).flat_map(|a| wz.basis().into_iter().step_by(7).map(move |b| (a.clone(), b))).collect();
        check_curvature_linearity(&wz, &c2, &pairs).unwrap();
        check_module_leibniz(&wz, &c2, &pairs).unwrap();
    }

    #[test]
    fn hermitian_n3() {
        let f = CycField::new(3).unwrap();
        let wz = WzComplex::new(&f);
        let hc = hermitian_constraints(&wz);
        assert_eq!(hc.real_dimension, 18);
        let d = wz.plane().dim();
        // c dx is hermitian iff c is real
        let mut c = crate::linalg::zero_vector(&f, 2 * d);
        c[0] = CycScalar::from_int(&f, 2);
        assert!(hc.satisfied_by(&c));
        c[0] = CycScalar::q(&f);
        assert!(!hc.satisfied_by(&c));
        assert!(hc.satisfied_by(&crate::linalg::zero_vector(&f, 2 * d)));
    }

    #[test]
    fn connection_space_n3() {
        let f = CycField::new(3).unwrap();
        let wz = WzComplex::new(&f);
        let pair = Arc::new(DualPair::new(&f));
        let (rep, report) = decompose_connection_space(&wz, &pair).unwrap();
        assert_eq!(rep.dim(), 18);
        assert_eq!(report.summands.iter().map(|s| s.dim).sum::<usize>(), 18);
        assert!(report.all_named());
        // Oracle: f (x) xi -> f dxi identifies Omega^1 with M (x) span{x, y}.
        let action = PlaneAction::new(&pair);
        let mut known = Catalog::new(&pair.h).modules();
        known.extend(action.decompose().unwrap().into_iter().filter(|s| !s.irreducible).map(|s| s.module.with_label(&s.label)));
        let tensor = action.representation().tensor(&action.manin_dual());
        assert_eq!(decompose(&tensor, &known).unwrap().labels(), report.labels());
        assert_eq!(report.labels(), ["3_eve", "3_irr", "3_irr", "3_odd", "6_eve"]);
    }
}
