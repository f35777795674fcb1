//! Invariant sesquilinear forms on the plane and on modules of `H`.
//!
//! Forms are antilinear in the first argument: `(u, v) = u^dagger G v`.
//! The only floating-point code in the crate is [`embed`], used to read off
//! the signs of real pivots when computing inertia.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::ToPrimitive;

use crate::action::{Coactions, PlaneAction};
use crate::cyclo::{CycField, CycScalar};
use crate::error::{Error, Result};
use crate::hopf::{BasisStar, DualPair, FElement, HAlgebra, HElement};
use crate::linalg::{nullspace, Matrix, SparseRow, Vector};
use crate::qplane::PlaneElement;
use crate::repcat::Representation;
use crate::tensor::{BasisAlgebra, BasisHopf};

/// Numeric image of a scalar under `q -> exp(2 pi i / N)`.
pub fn embed(c: &CycScalar) -> (f64, f64) {
    let n = c.n() as f64;
    let (mut re, mut im) = (0.0, 0.0);
    for (k, a) in c.coeffs().iter().enumerate() {
        let a = a.to_f64().unwrap_or(f64::NAN);
        let t = 2.0 * core::f64::consts::PI * k as f64 / n;
        re += a * libm::cos(t);
        im += a * libm::sin(t);
    }
    (re, im)
}

/// Counts of positive, negative and zero directions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn is_indefinite(&self) -> bool {
        self.positive > 0 && self.negative > 0
    }
}

/// Sign tolerance for real pivots in the numeric embedding.
pub const SIGN_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SesquilinearForm {
    gram: Matrix,
}

impl SesquilinearForm {
    pub fn new(gram: Matrix) -> SesquilinearForm {
        SesquilinearForm { gram }
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn field(&self) -> &Arc<CycField> {
        self.gram.field()
    }

    /// `(u, v)`, antilinear in `u`.
    pub fn eval(&self, u: &[CycScalar], v: &[CycScalar]) -> CycScalar {
        let gv = self.gram.apply(v);
        let mut acc = CycScalar::zero(self.field());
        for (a, b) in u.iter().zip(&gv) {
            if !a.is_zero() && !b.is_zero() {
                acc += &(&a.conj() * b);
            }
        }
        acc
    }

    pub fn is_hermitian(&self) -> bool {
        self.gram.conj_transpose() == self.gram
    }

    pub fn rank(&self) -> usize {
        self.gram.rank()
    }

    pub fn is_degenerate(&self) -> bool {
        self.rank() < self.dim()
    }

    /// Restriction to the span of the given vectors.
    pub fn restrict(&self, basis: &[Vector]) -> SesquilinearForm {
        let k = basis.len();
        SesquilinearForm::new(Matrix::from_fn(self.field(), k, k, |i, j| self.eval(&basis[i], &basis[j])))
    }

    /// Inertia by exact hermitian congruence; only the signs of the real
    /// pivots go through [`embed`].
    pub fn inertia(&self) -> Result<Inertia> {
        if !self.is_hermitian() {
            return Err(Error::CheckFailed(String::from("inertia of a non-hermitian form")));
        }
        let field = self.field().clone();
        let n = self.dim();
        let mut m: Vec<Vec<CycScalar>> = (0..n).map(|i| self.gram.row(i)).collect();
        let mut alive: Vec<usize> = (0..n).collect();
        let mut out = Inertia { positive: 0, negative: 0, zero: 0 };
        let q = CycScalar::q(&field);
        while !alive.is_empty() {
            let pivot = match alive.iter().copied().find(|&i| !m[i][i].is_zero()) {
                Some(p) => p,
                None => {
                    let pair = alive
                        .iter()
                        .flat_map(|&i| alive.iter().map(move |&j| (i, j)))
                        .find(|&(i, j)| i != j && !m[i][j].is_zero());
                    let Some((i, j)) = pair else {
                        out.zero += alive.len();
                        break;
                    };
                    // e_i -> e_i + t e_j makes the diagonal t m_ij + conj(t m_ij),
                    // nonzero for t = 1 or t = q.
                    let one = CycScalar::one(&field);
                    let t = [one, q.clone()]
                        .into_iter()
                        .find(|t| {
                            let v = t * &m[i][j];
                            !(&v + &v.conj()).is_zero()
                        })
                        .expect("t m_ij is not purely imaginary for both t = 1 and t = q");
                    let tc = t.conj();
                    for k in 0..n {
                        let add = &t * &m[k][j];
                        m[k][i] = &m[k][i] + &add;
                    }
                    for k in 0..n {
                        let add = &tc * &m[j][k];
                        m[i][k] = &m[i][k] + &add;
                    }
                    i
                }
            };
            let p = m[pivot][pivot].clone();
            let (re, im) = embed(&p);
            if im.abs() > SIGN_TOLERANCE || re.abs() < SIGN_TOLERANCE {
                return Err(Error::CheckFailed(format!("pivot {p} has no clear real sign")));
            }
            if re > 0.0 {
                out.positive += 1;
            } else {
                out.negative += 1;
            }
            let pinv = p.inv()?;
            alive.retain(|&i| i != pivot);
            let col: Vec<CycScalar> = alive.iter().map(|&i| m[i][pivot].clone()).collect();
            let row: Vec<CycScalar> = alive.iter().map(|&j| &m[pivot][j] * &pinv).collect();
            for (a, &i) in alive.iter().enumerate() {
                if col[a].is_zero() {
                    continue;
                }
                for (b, &j) in alive.iter().enumerate() {
                    if !row[b].is_zero() {
                        let sub = &col[a] * &row[b];
                        m[i][j] = &m[i][j] - &sub;
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Basis of all `G` with `A^dagger G = G B` for every pair `(A, B)`.
pub fn solve_adjoint_conditions(field: &Arc<CycField>, dim: usize, conds: &[(Matrix, Matrix)]) -> Vec<Matrix> {
    let var = |i: usize, j: usize| i * dim + j;
    let mut rows: Vec<SparseRow> = Vec::new();
    for (a, b) in conds {
        let ad = a.conj_transpose();
        for i in 0..dim {
            for j in 0..dim {
                let mut acc: BTreeMap<usize, CycScalar> = BTreeMap::new();
                for k in 0..dim {
                    let c = ad.get(i, k);
                    if !c.is_zero() {
                        *acc.entry(var(k, j)).or_insert_with(|| CycScalar::zero(field)) += c;
                    }
                    let c = b.get(k, j);
                    if !c.is_zero() {
                        *acc.entry(var(i, k)).or_insert_with(|| CycScalar::zero(field)) -= c;
                    }
                }
                let row: SparseRow = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    nullspace(field, &rows, dim * dim)
        .into_iter()
        .map(|v| Matrix::from_fn(field, dim, dim, |i, j| v[var(i, j)].clone()))
        .collect()
}

/// `(rho(h), rho(h*))` for `h` among `K, K^-1, Xp, Xm`.
fn h_conditions(h: &HAlgebra, rep: &Representation) -> Vec<(Matrix, Matrix)> {
    [h.k(), h.k_inv(), h.xp(), h.xm()].iter().map(|g| (rep.rho(h, g), rep.rho(h, &h.star(g)))).collect()
}

/// The invariant scalar product on the plane with its certificates.
pub struct PlaneProduct {
    pair: Arc<DualPair>,
    action: PlaneAction,
    /// Dimension of the solution space of the `H` conditions alone.
    pub h_solution_dim: usize,
    /// Dimension once multiplication by `x`, `y` is also required to have
    /// adjoint multiplication by `x*`, `y*`.
    pub solution_dim: usize,
    pub form: SesquilinearForm,
}

impl PlaneProduct {
    /// Solves the invariance system and normalizes `(x^m y^m, x^m y^m) = 1`
    /// with `m = (N-1)/2`, i.e. `(xy, xy) = 1` at `N = 3`.
    pub fn new(pair: &Arc<DualPair>) -> Result<PlaneProduct> {
        let field = pair.field().clone();
        let action = PlaneAction::new(pair);
        let plane = action.plane().clone();
        let dim = plane.dim();
        let mut conds = h_conditions(&pair.h, action.representation());
        let h_solution_dim = solve_adjoint_conditions(&field, dim, &conds).len();
        for z in [plane.x(), plane.y()] {
            conds.push((plane.left_mul_matrix(&z), plane.left_mul_matrix(&z.star())));
        }
        let sols = solve_adjoint_conditions(&field, dim, &conds);
        let solution_dim = sols.len();
        if solution_dim != 1 {
            return Err(Error::CheckFailed(format!("invariant scalar product space has dimension {solution_dim}, not 1")));
        }
        let g = &sols[0];
        let m = (plane.n() - 1) / 2;
        let xy = plane.to_vector(&PlaneElement::monomial(&field, m, m));
        let raw = SesquilinearForm::new(g.clone()).eval(&xy, &xy);
        let norm = raw.inv()?;
        let form = SesquilinearForm::new(g.scale(&norm));
        Ok(PlaneProduct { pair: pair.clone(), action, h_solution_dim, solution_dim, form })
    }

    pub fn action(&self) -> &PlaneAction {
        &self.action
    }

    /// `(x^r y^s, x^r' y^s')`.
    pub fn monomial_product(&self, a: (usize, usize), b: (usize, usize)) -> CycScalar {
        let p = self.action.plane();
        self.form.gram().get(p.index(a.0, a.1), p.index(b.0, b.1)).clone()
    }

    pub fn value(&self, z: &PlaneElement, w: &PlaneElement) -> CycScalar {
        let p = self.action.plane();
        self.form.eval(&p.to_vector(z), &p.to_vector(w))
    }

    /// Nonzero entries exactly where `r + r' = s + s' = N - 1 (mod N)`.
    pub fn check_support(&self) -> Result<()> {
        let p = self.action.plane();
        let n = p.n();
        for a in p.basis() {
            for b in p.basis() {
                let expected = (a.0 + b.0) % n == n - 1 && (a.1 + b.1) % n == n - 1;
                if self.monomial_product(a, b).is_zero() == expected {
                    return Err(Error::CheckFailed(format!("support pattern fails at {a:?}, {b:?}")));
                }
            }
        }
        Ok(())
    }

    /// `(hz, w) = (z, h* w)` for `h` among the generators of `H`.
    pub fn check_star_rep(&self) -> Result<()> {
        let rep = self.action.representation();
        let g = self.form.gram();
        for (a, b) in h_conditions(&self.pair.h, rep) {
            if a.conj_transpose().mul(g) != g.mul(&b) {
                return Err(Error::CheckFailed(String::from("(hz, w) != (z, h* w)")));
            }
        }
        Ok(())
    }

    /// `sum ((S h1)* z, h2 w) = eps(h) (z, w)` for every basis element `h` of `H`.
    pub fn check_hopf_invariance(&self) -> Result<()> {
        let h = &self.pair.h;
        let rep = self.action.representation();
        let g = self.form.gram();
        let field = self.pair.field();
        for b in 0..h.dim() {
            let mut total = Matrix::zeros(field, g.rows(), g.cols());
            for (k, c) in h.coproduct_basis(b).terms() {
                let left: HElement = h.star(h.antipode_basis(k[0]));
                let term = rep.rho(h, &left).conj_transpose().mul(g).mul(&rep.rho(h, &HElement::basis(field, k[1])));
                total = total.add(&term.scale(c));
            }
            if total != g.scale(&h.counit_basis(b)) {
                return Err(Error::CheckFailed(format!("Hopf invariance fails for basis element {b} of H")));
            }
        }
        Ok(())
    }

    /// `(Delta_R z, Delta_R w) = (z, w) 1` on monomial pairs, with
    /// `(z_i (x) T_i, w_j (x) U_j) = (z_i, w_j) T_i* U_j`.
    pub fn check_coaction_invariance(&self) -> Result<()> {
        let f = &self.pair.f;
        let field = self.pair.field();
        let co = Coactions::new(&self.pair);
        let p = self.action.plane();
        let g = self.form.gram();
        let images: Vec<_> = p.basis().into_iter().map(|(r, s)| co.coact_right(&PlaneElement::monomial(field, r, s))).collect();
        for (i, zi) in images.iter().enumerate() {
            for (j, wj) in images.iter().enumerate() {
                let mut acc = FElement::zero(field);
                for (&(a, t), c) in zi.terms() {
                    let ts = f.star(&FElement::basis(field, t)).scale(&c.conj());
                    for (&(b, u), d) in wj.terms() {
                        let gab = g.get(a, b);
                        if gab.is_zero() {
                            continue;
                        }
                        acc = acc.add(&f.mul(&ts, &FElement::basis(field, u)).scale(&(gab * d)));
                    }
                }
                if acc != f.one().scale(g.get(i, j)) {
                    return Err(Error::CheckFailed(format!("coaction invariance fails at monomials {i}, {j}")));
                }
            }
        }
        Ok(())
    }

    /// `(z, Delta_R w) = ((1 (x) S) Delta_R z, w)` on monomial pairs; an
    /// `F` factor leaves the antilinear slot as `(z (x) T, w) = T* (z, w)`.
    pub fn check_dual_star_rep(&self) -> Result<()> {
        let f = &self.pair.f;
        let field = self.pair.field();
        let co = Coactions::new(&self.pair);
        let p = self.action.plane();
        let g = self.form.gram();
        let images: Vec<_> = p.basis().into_iter().map(|(r, s)| co.coact_right(&PlaneElement::monomial(field, r, s))).collect();
        for (i, zi) in images.iter().enumerate() {
            for (j, wj) in images.iter().enumerate() {
                let mut lhs = FElement::zero(field);
                for (&(b, u), d) in wj.terms() {
                    lhs = lhs.add(&FElement::basis(field, u).scale(&(g.get(i, b) * d)));
                }
                let mut rhs = FElement::zero(field);
                for (&(a, t), c) in zi.terms() {
                    rhs = rhs.add(&f.star(f.antipode_basis(t)).scale(&(&c.conj() * g.get(a, j))));
                }
                if lhs != rhs {
                    return Err(Error::CheckFailed(format!("(z, Delta_R w) != ((1 (x) S) Delta_R z, w) at monomials {i}, {j}")));
                }
            }
        }
        Ok(())
    }
}

/// The space of invariant metrics on a module with a representative.
pub struct ModuleMetric {
    /// Basis of solutions of `(hu, v) = (u, h* v)`.
    pub solutions: Vec<Matrix>,
    /// A generic hermitian element of the solution space.
    pub form: SesquilinearForm,
    pub rank: usize,
    pub inertia: Inertia,
}

/// Invariant metrics on `rep`.
pub fn invariant_metric(h: &HAlgebra, rep: &Representation) -> Result<ModuleMetric> {
    let field = rep.field().clone();
    let dim = rep.dim();
    let solutions = solve_adjoint_conditions(&field, dim, &h_conditions(h, rep));
    // The solution space is closed under G -> G^dagger, so hermitian parts span it.
    let mut hermitian: Vec<Matrix> = Vec::new();
    let q = CycScalar::q(&field);
    let iq = &q - &q.conj();
    for s in &solutions {
        let st = s.conj_transpose();
        hermitian.push(s.add(&st));
        hermitian.push(s.sub(&st).scale(&iq));
    }
    let mut best: Option<SesquilinearForm> = None;
    for t in 1..=3i64 {
        let mut g = Matrix::zeros(&field, dim, dim);
        for (k, m) in hermitian.iter().enumerate() {
            let c = CycScalar::from_int(&field, (k as i64 + 2).pow(t as u32) * if k % 2 == 0 { 1 } else { -1 });
            g = g.add(&m.scale(&c));
        }
        let cand = SesquilinearForm::new(g);
        if best.as_ref().is_none_or(|b| cand.rank() > b.rank()) {
            best = Some(cand);
        }
    }
    let form = best.unwrap_or_else(|| SesquilinearForm::new(Matrix::zeros(&field, dim, dim)));
    let rank = form.rank();
    let inertia = form.inertia()?;
    Ok(ModuleMetric { solutions, form, rank, inertia })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcat::{radical_of_module, Catalog};

    #[test]
    fn plane_product_n3() {
        let f = CycField::new(3).unwrap();
        let pair = Arc::new(DualPair::new(&f));
        let pp = PlaneProduct::new(&pair).unwrap();
        // H alone leaves several invariant forms; the plane's own star fixes one.
        assert!(pp.h_solution_dim > 1);
        assert_eq!(pp.solution_dim, 1);
        assert!(pp.form.is_hermitian());
        assert_eq!(pp.monomial_product((1, 1), (1, 1)), CycScalar::one(&f));
        assert_eq!(pp.monomial_product((0, 0), (2, 2)), CycScalar::qpow(&f, 2));
        assert_eq!(pp.monomial_product((1, 0), (1, 2)), pp.monomial_product((0, 0), (2, 2)));
        pp.check_support().unwrap();
        pp.check_star_rep().unwrap();
        pp.check_hopf_invariance().unwrap();
        pp.check_coaction_invariance().unwrap();
        pp.check_dual_star_rep().unwrap();
    }

    #[test]
    fn module_metrics_n3() {
        let f = CycField::new(3).unwrap();
        let h = HAlgebra::new(&f);
        let cat = Catalog::new(&h);
        let one = invariant_metric(&h, cat.simple(1)).unwrap();
        assert_eq!((one.rank, one.inertia.positive + one.inertia.negative), (1, 1));
        for k in 1..=2 {
            let pim = cat.pim(k);
            let m = invariant_metric(&h, pim).unwrap();
            assert_eq!(m.rank, pim.dim());
            assert!(m.inertia.is_indefinite());
            let rad = radical_of_module(pim, &[cat.simple(1).clone(), cat.simple(2).clone()]);
            let sub = pim.restrict(&rad).unwrap();
            let ms = invariant_metric(&h, &sub).unwrap();
            assert!(ms.rank < sub.dim());
            assert!(m.form.restrict(rad.basis()).is_degenerate());
        }
    }

    #[test]
    fn plane_product_n5() {
        let f = CycField::new(5).unwrap();
        let pair = Arc::new(DualPair::new(&f));
        let pp = PlaneProduct::new(&pair).unwrap();
        assert_eq!(pp.solution_dim, 1);
        assert_eq!(pp.monomial_product((1, 0), (3, 4)), pp.monomial_product((0, 0), (4, 4)));
        pp.check_support().unwrap();
        pp.check_star_rep().unwrap();
        pp.check_hopf_invariance().unwrap();
        pp.check_coaction_invariance().unwrap();
        pp.check_dual_star_rep().unwrap();
        let inertia = pp.form.inertia().unwrap();
        assert_eq!(inertia.zero, 0);
    }
}
