//! Twisted derivations of the quantum plane and the invariant operators
//! written through them.
//!
//! Here coefficients sit to the right of the differentials:
//! `df = dx dx_(f) + dy dy_(f)` and `f dxi^j = sum_i dxi^i sigma_i^j(f)`.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::action::PlaneAction;
use crate::cyclo::{CycField, CycScalar};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::qplane::{Plane, PlaneElement};
use crate::wz::{Word, WzComplex, WzForm};

/// Outcome of one operator identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: String,
    pub holds: bool,
}

/// `(K, K^-1, Xp, Xm)` built from derivations and scaling operators.
#[derive(Clone, Debug)]
pub struct InvariantOps {
    pub k: Matrix,
    pub k_inv: Matrix,
    pub xp: Matrix,
    pub xm: Matrix,
}

/// Operators on the plane as `N^2 x N^2` matrices on the monomial basis.
pub struct DiffOps {
    plane: Plane,
    partial: [Matrix; 2],
    /// `sigma[i][j]` is `sigma_i^j`.
    sigma: [[Matrix; 2]; 2],
    mult: [Matrix; 2],
}

impl DiffOps {
    pub fn new(wz: &WzComplex) -> DiffOps {
        let plane = wz.plane().clone();
        let field = plane.field().clone();
        let d = plane.dim();
        let sig = sigma_table(&plane);
        let sigma: [[Matrix; 2]; 2] = core::array::from_fn(|i| {
            core::array::from_fn(|j| {
                let cols: Vec<_> = sig.iter().map(|s| plane.to_vector(&s[i][j])).collect();
                Matrix::from_columns(&field, d, &cols)
            })
        });
        // Left coefficients g_j of df, then dxi^j-coefficient moved right.
        let mut left = [Matrix::zeros(&field, d, d), Matrix::zeros(&field, d, d)];
        for (col, (r, s)) in plane.basis().into_iter().enumerate() {
            let df = wz.d(&WzForm::function(&PlaneElement::monomial(&field, r, s)));
            for (j, word) in [Word::Dx, Word::Dy].into_iter().enumerate() {
                for (&(a, b), c) in df.part(word).terms() {
                    left[j].set(plane.index(a, b), col, c.clone());
                }
            }
        }
        let partial = core::array::from_fn(|i| sigma[i][0].mul(&left[0]).add(&sigma[i][1].mul(&left[1])));
        let mult = [plane.left_mul_matrix(&plane.x()), plane.left_mul_matrix(&plane.y())];
        DiffOps { plane, partial, sigma, mult }
    }

    pub fn plane(&self) -> &Plane {
        &self.plane
    }

    fn field(&self) -> &Arc<CycField> {
        self.plane.field()
    }

    pub fn partial_x(&self) -> &Matrix {
        &self.partial[0]
    }

    pub fn partial_y(&self) -> &Matrix {
        &self.partial[1]
    }

    /// `sigma_i^j` with `0 = x`, `1 = y`.
    pub fn sigma(&self, i: usize, j: usize) -> &Matrix {
        &self.sigma[i][j]
    }

    pub fn mult_x(&self) -> &Matrix {
        &self.mult[0]
    }

    pub fn mult_y(&self) -> &Matrix {
        &self.mult[1]
    }

    pub fn apply(&self, m: &Matrix, f: &PlaneElement) -> PlaneElement {
        self.plane.from_vector(&m.apply(&self.plane.to_vector(f)))
    }

    fn q(&self, e: i64) -> CycScalar {
        CycScalar::qpow(self.field(), e)
    }

    fn id(&self) -> Matrix {
        Matrix::identity(self.field(), self.plane.dim())
    }

    /// `(mu_x, mu_y) = (1 + (q^2-1)(x dx_ + y dy_), 1 + (q^2-1) y dy_)`.
    pub fn scaling_ops(&self) -> (Matrix, Matrix) {
        let c = self.q(2) - CycScalar::one(self.field());
        let xdx = self.mult[0].mul(&self.partial[0]);
        let ydy = self.mult[1].mul(&self.partial[1]);
        let mu_x = self.id().add(&xdx.add(&ydy).scale(&c));
        let mu_y = self.id().add(&ydy.scale(&c));
        (mu_x, mu_y)
    }

    /// `K = mu_x^2 mu_y^2`, `K^-1 = mu_x mu_y`, `Xp = q^-1 x dy_ mu_y^2`,
    /// `Xm = q y dx_ mu_x`.
    pub fn invariant_ops(&self) -> InvariantOps {
        let (mx, my) = self.scaling_ops();
        let my2 = my.mul(&my);
        InvariantOps {
            k: mx.mul(&mx).mul(&my2),
            k_inv: mx.mul(&my),
            xp: self.mult[0].mul(&self.partial[1]).mul(&my2).scale(&self.q(-1)),
            xm: self.mult[1].mul(&self.partial[0]).mul(&mx).scale(&self.q(1)),
        }
    }

    /// The same operators for any odd `N`, with `h = (N+1)/2`:
    /// `K = mu_x^h mu_y^-1`, `K^-1 = mu_x^(h-1) mu_y`, `Xp = q^2 x dy_ mu_y^-1`,
    /// `Xm = q y dx_ mu_x^(h-1)`. At `N = 3` these reduce to
    /// [`DiffOps::invariant_ops`].
    pub fn general_invariant_ops(&self) -> InvariantOps {
        let (mx, my) = self.scaling_ops();
        let n = self.plane.n() as u32;
        let h = n.div_ceil(2);
        let my_inv = my.pow(n - 1);
        InvariantOps {
            k: mx.pow(h).mul(&my_inv),
            k_inv: mx.pow(h - 1).mul(&my),
            xp: self.mult[0].mul(&self.partial[1]).mul(&my_inv).scale(&self.q(2)),
            xm: self.mult[1].mul(&self.partial[0]).mul(&mx.pow(h - 1)).scale(&self.q(1)),
        }
    }

    /// Compares [`DiffOps::invariant_ops`] with the action matrices.
    pub fn compare_invariant_ops(&self, action: &PlaneAction) -> Vec<IdentityReport> {
        compare(&self.invariant_ops(), action, ["K = mu_x^2 mu_y^2", "K^-1 = mu_x mu_y", "Xp = q^-1 x dy_ mu_y^2", "Xm = q y dx_ mu_x"])
    }

    /// Compares [`DiffOps::general_invariant_ops`] with the action matrices.
    pub fn compare_general_invariant_ops(&self, action: &PlaneAction) -> Vec<IdentityReport> {
        compare(
            &self.general_invariant_ops(),
            action,
            ["K = mu_x^h mu_y^-1", "K^-1 = mu_x^(h-1) mu_y", "Xp = q^2 x dy_ mu_y^-1", "Xm = q y dx_ mu_x^(h-1)"],
        )
    }

    /// `f dxi^j = sum_i dxi^i sigma_i^j(f)` agrees with the complex, and
    /// `sigma(fg) = sigma(f) sigma(g)` on monomial pairs.
    pub fn check_sigma(&self, wz: &WzComplex) -> Result<()> {
        let field = self.field();
        let basis = self.plane.basis();
        let dxi = [WzForm::dx(field), WzForm::dy(field)];
        for &(r, s) in &basis {
            let f = PlaneElement::monomial(field, r, s);
            for j in 0..2 {
                let lhs = wz.mul(&WzForm::function(&f), &dxi[j]);
                let mut rhs = WzForm::zero(field);
                for i in 0..2 {
                    let g = self.apply(&self.sigma[i][j], &f);
                    rhs = rhs.add(&wz.mul(&dxi[i], &WzForm::function(&g)));
                }
                if lhs != rhs {
                    return Err(Error::CheckFailed(format!("sigma disagrees with the complex on {f} d{}", ["x", "y"][j])));
                }
            }
        }
        for &(r, s) in &basis {
            let f = PlaneElement::monomial(field, r, s);
            for &(r2, s2) in &basis {
                let g = PlaneElement::monomial(field, r2, s2);
                let fg = f.mul(&g);
                for i in 0..2 {
                    for j in 0..2 {
                        let lhs = self.apply(&self.sigma[i][j], &fg);
                        let mut rhs = PlaneElement::zero(field);
                        for k in 0..2 {
                            rhs = rhs.add(&self.apply(&self.sigma[i][k], &f).mul(&self.apply(&self.sigma[k][j], &g)));
                        }
                        if lhs != rhs {
                            return Err(Error::CheckFailed(format!("sigma is not multiplicative on ({f}, {g})")));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `dx dx_(f) + dy dy_(f) = df` for every monomial.
    pub fn check_roundtrip(&self, wz: &WzComplex) -> Result<()> {
        let field = self.field();
        for (r, s) in self.plane.basis() {
            let f = PlaneElement::monomial(field, r, s);
            let rebuilt = wz
                .mul(&WzForm::dx(field), &WzForm::function(&self.apply(&self.partial[0], &f)))
                .add(&wz.mul(&WzForm::dy(field), &WzForm::function(&self.apply(&self.partial[1], &f))));
            if rebuilt != wz.d(&WzForm::function(&f)) {
                return Err(Error::CheckFailed(format!("partials do not rebuild d({f})")));
            }
        }
        Ok(())
    }

    /// `d_i(fg) = d_i(f) g + sigma_i^j(f) d_j(g)` on monomial pairs.
    pub fn check_twisted_leibniz(&self) -> Result<()> {
        let field = self.field();
        let basis = self.plane.basis();
        for &(r, s) in &basis {
            let f = PlaneElement::monomial(field, r, s);
            for &(r2, s2) in &basis {
                let g = PlaneElement::monomial(field, r2, s2);
                for i in 0..2 {
                    let lhs = self.apply(&self.partial[i], &f.mul(&g));
                    let mut rhs = self.apply(&self.partial[i], &f).mul(&g);
                    for j in 0..2 {
                        rhs = rhs.add(&self.apply(&self.sigma[i][j], &f).mul(&self.apply(&self.partial[j], &g)));
                    }
                    if lhs != rhs {
                        return Err(Error::CheckFailed(format!("twisted Leibniz fails for ({f}, {g})")));
                    }
                }
            }
        }
        Ok(())
    }

    /// The commutation relations between derivations and multiplications.
    pub fn partial_relations(&self) -> Vec<(&'static str, Matrix, Matrix)> {
        let [px, py] = &self.partial;
        let [mx, my] = &self.mult;
        let one = CycScalar::one(self.field());
        let q2m1 = self.q(2) - one;
        alloc::vec![
            ("dx_ x = 1 + q^2 x dx_ + (q^2-1) y dy_", px.mul(mx), self.id().add(&mx.mul(px).scale(&self.q(2))).add(&my.mul(py).scale(&q2m1))),
            ("dx_ y = q y dx_", px.mul(my), my.mul(px).scale(&self.q(1))),
            ("dy_ x = q x dy_", py.mul(mx), mx.mul(py).scale(&self.q(1))),
            ("dy_ y = 1 + q^2 y dy_", py.mul(my), self.id().add(&my.mul(py).scale(&self.q(2)))),
            ("dy_ dx_ = q dx_ dy_", py.mul(px), px.mul(py).scale(&self.q(1))),
        ]
    }

    pub fn check_partial_relations(&self) -> Result<()> {
        for (name, lhs, rhs) in self.partial_relations() {
            if let Some((i, j)) = lhs.first_difference(&rhs) {
                return Err(Error::CheckFailed(format!("{name} fails at entry ({i}, {j})")));
            }
        }
        Ok(())
    }

    /// `dx_^N = dy_^N = 0`.
    pub fn check_nilpotent(&self) -> Result<()> {
        let n = self.plane.n() as u32;
        for (name, p) in [("dx_", &self.partial[0]), ("dy_", &self.partial[1])] {
            if !p.pow(n).is_zero() {
                return Err(Error::CheckFailed(format!("{name}^{n} != 0")));
            }
        }
        Ok(())
    }
}

fn compare(ops: &InvariantOps, action: &PlaneAction, names: [&str; 4]) -> Vec<IdentityReport> {
    let rep = action.representation();
    let targets = [rep.k().clone(), rep.k_inv(), rep.xp().clone(), rep.xm().clone()];
    let built = [&ops.k, &ops.k_inv, &ops.xp, &ops.xm];
    names
        .iter()
        .zip(built)
        .zip(targets)
        .map(|((name, b), t)| IdentityReport { name: String::from(*name), holds: *b == t })
        .collect()
}

/// `sigma` matrices of all monomials, multiplicative from the generators.
fn sigma_table(plane: &Plane) -> Vec<[[PlaneElement; 2]; 2]> {
    let field = plane.field();
    let n = plane.n();
    let z = PlaneElement::zero(field);
    let (x, y) = (plane.x(), plane.y());
    let q = |e: i64| CycScalar::qpow(field, e);
    let sx = [[x.scale(&q(2)), y.scale(&(q(2) - CycScalar::one(field)))], [z.clone(), x.scale(&q(1))]];
    let sy = [[y.scale(&q(1)), z.clone()], [z.clone(), y.scale(&q(2))]];
    let one = PlaneElement::one(field);
    let mut out: Vec<[[PlaneElement; 2]; 2]> = Vec::with_capacity(n * n);
    for r in 0..n {
        for s in 0..n {
            let m = if r == 0 && s == 0 {
                [[one.clone(), z.clone()], [z.clone(), one.clone()]]
            } else if r > 0 {
                mat_mul(&sx, &out[(r - 1) * n + s])
            } else {
                mat_mul(&sy, &out[s - 1])
            };
            out.push(m);
        }
    }
    out
}

fn mat_mul(a: &[[PlaneElement; 2]; 2], b: &[[PlaneElement; 2]; 2]) -> [[PlaneElement; 2]; 2] {
    core::array::from_fn(|i| core::array::from_fn(|j| a[i][0].mul(&b[0][j]).add(&a[i][1].mul(&b[1][j]))))
}
